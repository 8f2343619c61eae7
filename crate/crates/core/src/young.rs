//! Young diagrams of type `(r, l)`: `r` weakly decreasing rows whose first and
//! last row differ by at most `l` boxes.
//!
//! Two finite subsets matter:
//!
//! * the affine set, `y_r <= l - 1`, which indexes the summands of the level-one
//!   `sl(rl)` modules under the conformal embedding;
//! * the finite set, affine with `y_1 <= l`, which indexes the summands of
//!   `Λ(C^r ⊗ C^l)`.
//!
//! Every affine diagram either fits in the `r x l` rectangle (finite) or in the
//! `r x 2l` double rectangle with at least one box in the second half.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{enumerate_weights, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct YoungDiagram {
    rank: usize,
    level: usize,
    rows: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    #[serde(rename = "type")]
    shape_type: (usize, usize),
    rows: Vec<usize>,
}

impl TryFrom<RawDiagram> for YoungDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        YoungDiagram::new(raw.shape_type.0, raw.shape_type.1, raw.rows)
    }
}

impl From<YoungDiagram> for RawDiagram {
    fn from(y: YoungDiagram) -> Self {
        RawDiagram {
            shape_type: (y.rank, y.level),
            rows: y.rows,
        }
    }
}

impl YoungDiagram {
    /// Validates membership in the (infinite) set of diagrams of type `(rank, level)`.
    pub fn new(rank: usize, level: usize, rows: Vec<usize>) -> Result<Self> {
        let invalid = |reason| Error::InvalidDiagram {
            rows: rows.clone(),
            rank,
            level,
            reason,
        };
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if level == 0 {
            return Err(Error::ZeroLevel);
        }
        if rows.len() != rank {
            return Err(invalid("row count differs from the rank"));
        }
        if rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(invalid("rows are not weakly decreasing"));
        }
        if rows[0] - rows[rank - 1] > level {
            return Err(invalid("first and last row differ by more than the level"));
        }
        Ok(Self { rank, level, rows })
    }

    pub fn empty(rank: usize, level: usize) -> Self {
        assert!(rank >= 1 && level >= 1, "rank and level must be positive");
        Self {
            rank,
            level,
            rows: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_aff(&self) -> bool {
        self.rows[self.rank - 1] < self.level
    }

    pub fn is_fin(&self) -> bool {
        self.is_aff() && self.rows[0] <= self.level
    }

    fn require_aff(&self) -> Result<()> {
        if self.is_aff() {
            Ok(())
        } else {
            Err(Error::NotAffine {
                rows: self.rows.clone(),
                rank: self.rank,
                level: self.level,
            })
        }
    }

    /// `π(Y) = Σ (y_i - y_{i+1}) ϖ_i`, a weight in `P_l(r)`.
    pub fn pi(&self) -> Weight {
        let labels = self.rows.windows(2).map(|p| p[0] - p[1]).collect();
        Weight::new(self.rank, labels).expect("row differences give rank - 1 labels")
    }

    /// Number of boxes reduced mod `rl`, in `0..rl`.
    pub fn size(&self) -> usize {
        self.rows.iter().sum::<usize>() % (self.rank * self.level)
    }

    /// Transpose into a diagram of type `(l, r)`.
    ///
    /// A diagram spilling into the second `r x l` rectangle is split as
    /// `min(y_i, l)` plus `max(y_i - l, 0)` and the two ordinary transposes are
    /// added row by row, so row `j` of the result counts the rows of length at
    /// least `j` plus those of length at least `j + l`.
    pub fn transpose(&self) -> Result<Self> {
        self.require_aff()?;
        let l = self.level;
        let rows = (1..=l)
            .map(|j| {
                self.rows
                    .iter()
                    .map(|&y| usize::from(y >= j) + usize::from(y >= j + l))
                    .sum()
            })
            .collect();
        Ok(Self {
            rank: l,
            level: self.rank,
            rows,
        })
    }

    /// Complement rotated by 180 degrees inside the `r x l` rectangle (finite
    /// diagrams) or the `r x 2l` double rectangle (the rest of the affine set).
    ///
    /// The complement of the empty diagram is the full rectangle, which is
    /// brought back into the affine set by removing `l` boxes from each row.
    pub fn dagger(&self) -> Result<Self> {
        self.require_aff()?;
        let (r, l) = (self.rank, self.level);
        let width = if self.rows[0] <= l { l } else { 2 * l };
        let mut rows: Vec<usize> = self.rows.iter().rev().map(|&y| width - y).collect();
        if rows[r - 1] >= l {
            rows.iter_mut().for_each(|y| *y -= l);
        }
        Ok(Self {
            rank: r,
            level: l,
            rows,
        })
    }
}

/// The affine set of type `(rank, level)` in lexicographic order of rows,
/// optionally restricted to one size class.
///
/// Each fibre of [`YoungDiagram::pi`] has `level` elements: the diagrams with
/// a given weight differ by full columns of height `rank`, and the bottom row
/// ranges over `0..level`.
pub fn enumerate_aff(rank: usize, level: usize, size_class: Option<usize>) -> Result<Vec<YoungDiagram>> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    let modulus = rank * level;
    if let Some(size) = size_class {
        if size >= modulus {
            return Err(Error::SizeClass { size, modulus });
        }
    }
    let mut out = Vec::new();
    for w in enumerate_weights(rank, level) {
        let base = w.partition_rows();
        for bottom in 0..level {
            let y = YoungDiagram {
                rank,
                level,
                rows: base.iter().map(|&b| b + bottom).collect(),
            };
            if size_class.is_none_or(|s| y.size() == s) {
                out.push(y);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(r: usize, l: usize, rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(r, l, rows.to_vec()).unwrap()
    }

    fn wt(r: usize, labels: &[usize]) -> Weight {
        Weight::new(r, labels.to_vec()).unwrap()
    }

    /// Direct scan of all row vectors in the box `[0, 2l)^r`.
    fn brute_aff(r: usize, l: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let bound = 2 * l;
        let total = bound.pow(r as u32);
        for mut code in 0..total {
            let mut rows = Vec::with_capacity(r);
            for _ in 0..r {
                rows.push(code % bound);
                code /= bound;
            }
            rows.reverse();
            let decreasing = rows.windows(2).all(|p| p[0] >= p[1]);
            if decreasing && rows[0] - rows[r - 1] <= l && rows[r - 1] < l {
                out.push(rows);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn worked_example_three_four() {
        let d = y(3, 4, &[6, 4, 3]);
        assert!(d.is_aff() && !d.is_fin());
        assert_eq!(d.pi(), wt(3, &[2, 1]));
        assert_eq!(d.size(), 1);
        let t = d.transpose().unwrap();
        assert_eq!(t, y(4, 3, &[4, 4, 3, 2]));
        assert_eq!(t.pi(), wt(4, &[0, 1, 1]));
        assert_eq!(t.size(), 1);
        let dd = d.dagger().unwrap();
        assert_eq!(dd, y(3, 4, &[5, 4, 2]));
        assert_eq!(dd.pi(), wt(3, &[1, 2]));
        assert_eq!(dd.size(), 11);
        let td = dd.transpose().unwrap();
        assert_eq!(td, y(4, 3, &[4, 3, 2, 2]));
        assert_eq!(td.pi(), wt(4, &[1, 1, 0]));
        assert_eq!(td.size(), 11);
        assert_eq!(t.dagger().unwrap(), td);
    }

    #[test]
    fn small_cases() {
        assert_eq!(y(3, 4, &[0, 0, 0]).pi(), Weight::zero(3));
        assert_eq!(y(3, 4, &[0, 0, 0]).size(), 0);
        assert_eq!(
            y(3, 4, &[0, 0, 0]).transpose().unwrap(),
            YoungDiagram::empty(4, 3)
        );
        assert_eq!(y(4, 3, &[4, 4, 3, 2]).pi(), wt(4, &[0, 1, 1]));
        assert_eq!(y(3, 4, &[5, 4, 2]).size(), 11);
        assert_eq!(y(3, 4, &[5, 4, 2]).transpose().unwrap(), y(4, 3, &[4, 3, 2, 2]));
        assert_eq!(YoungDiagram::empty(3, 4).dagger().unwrap(), YoungDiagram::empty(3, 4));
        // 2x2 rectangle minus (2,0), rotated, is (2,0) again
        assert_eq!(y(2, 2, &[2, 0]).dagger().unwrap(), y(2, 2, &[2, 0]));
    }

    #[test]
    fn construction_rejects_bad_rows() {
        assert!(YoungDiagram::new(3, 4, vec![1, 2, 0]).is_err());
        assert!(YoungDiagram::new(3, 4, vec![5, 0, 0]).is_err());
        assert!(YoungDiagram::new(3, 4, vec![1, 0]).is_err());
        assert_eq!(YoungDiagram::new(3, 0, vec![0, 0, 0]), Err(Error::ZeroLevel));
        let outside = y(2, 2, &[3, 2]);
        assert!(!outside.is_aff());
        assert!(matches!(outside.transpose(), Err(Error::NotAffine { .. })));
        assert!(matches!(outside.dagger(), Err(Error::NotAffine { .. })));
    }

    #[test]
    fn enumerate_two_two() {
        let all = enumerate_aff(2, 2, None).unwrap();
        let rows: Vec<_> = all.iter().map(|d| d.rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1], vec![3, 1]]
        );
        assert_eq!(rows, brute_aff(2, 2));
        let zero: Vec<_> = enumerate_aff(2, 2, Some(0))
            .unwrap()
            .into_iter()
            .map(|d| d.rows().to_vec())
            .collect();
        assert_eq!(zero, vec![vec![0, 0], vec![3, 1]]);
        assert!(enumerate_aff(2, 2, Some(4)).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for r in 1..=4 {
            for l in 1..=4 {
                let rows: Vec<_> = enumerate_aff(r, l, None)
                    .unwrap()
                    .iter()
                    .map(|d| d.rows().to_vec())
                    .collect();
                assert_eq!(rows, brute_aff(r, l), "type ({r}, {l})");
            }
        }
        assert_eq!(enumerate_aff(3, 4, None).unwrap().len(), 60);
    }

    #[test]
    fn size_classes_partition_the_affine_set() {
        for (r, l) in [(2, 2), (2, 3), (3, 4), (4, 2)] {
            let all = enumerate_aff(r, l, None).unwrap();
            let mut joined: Vec<_> = (0..r * l)
                .flat_map(|s| enumerate_aff(r, l, Some(s)).unwrap())
                .collect();
            joined.sort();
            assert_eq!(joined, all);
        }
    }

    #[test]
    fn involutions_and_compatibilities() {
        for r in 1..=5 {
            for l in 1..=5 {
                let rl = r * l;
                for d in enumerate_aff(r, l, None).unwrap() {
                    let t = d.transpose().unwrap();
                    let dg = d.dagger().unwrap();
                    assert!(t.is_aff() && dg.is_aff());
                    assert_eq!((t.rank(), t.level()), (l, r));
                    assert_eq!(t.transpose().unwrap(), d);
                    assert_eq!(dg.dagger().unwrap(), d);
                    assert_eq!(t.is_fin(), d.is_fin());
                    assert_eq!(dg.is_fin(), d.is_fin());
                    assert_eq!(dg.transpose().unwrap(), t.dagger().unwrap());
                    assert_eq!(dg.pi(), d.pi().dagger());
                    assert_eq!(t.size(), d.size());
                    assert_eq!((d.size() + dg.size()) % rl, 0);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let d = y(3, 4, &[6, 4, 3]);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"type":[3,4],"rows":[6,4,3]}"#);
        assert_eq!(serde_json::from_str::<YoungDiagram>(&s).unwrap(), d);
        assert!(serde_json::from_str::<YoungDiagram>(r#"{"type":[3,4],"rows":[9,4,3]}"#).is_err());
    }
}
