//! Dominant weights of `sl(r)` written in the basis of fundamental weights.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dominant integral weight `a_1 ϖ_1 + ... + a_{r-1} ϖ_{r-1}` of `sl(r)`.
///
/// The rank is carried explicitly so that weights of different algebras are
/// never compared by accident. Rank 1 is allowed and has a single, empty weight.
///
/// The derived ordering compares rank first and then the labels
/// lexicographically, which is the canonical basis order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeight")]
pub struct Weight {
    rank: usize,
    labels: Vec<usize>,
}

#[derive(Deserialize)]
struct RawWeight {
    rank: usize,
    labels: Vec<usize>,
}

impl TryFrom<RawWeight> for Weight {
    type Error = Error;

    fn try_from(raw: RawWeight) -> Result<Self> {
        Weight::new(raw.rank, raw.labels)
    }
}

impl Weight {
    pub fn new(rank: usize, labels: Vec<usize>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if labels.len() != rank - 1 {
            return Err(Error::LabelCount {
                rank,
                found: labels.len(),
            });
        }
        Ok(Self { rank, labels })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be at least 1");
        Self {
            rank,
            labels: vec![0; rank - 1],
        }
    }

    /// The fundamental weight `ϖ_i` for `1 <= i < rank`.
    pub fn fundamental(rank: usize, i: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if i == 0 || i >= rank {
            return Err(Error::LabelOutOfRange { label: i, rank });
        }
        let mut labels = vec![0; rank - 1];
        labels[i - 1] = 1;
        Ok(Self { rank, labels })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Sum of the Dynkin labels; the smallest level at which the weight is integrable.
    pub fn level(&self) -> usize {
        self.labels.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&a| a == 0)
    }

    /// Membership in `P_l(r)`.
    pub fn in_alcove(&self, level: usize) -> bool {
        self.level() <= level
    }

    pub(crate) fn check_alcove(&self, rank: usize, level: usize) -> Result<()> {
        if self.rank != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: self.rank,
            });
        }
        if !self.in_alcove(level) {
            return Err(Error::OutsideAlcove {
                rank,
                level,
                labels: self.labels.clone(),
            });
        }
        Ok(())
    }

    /// Highest weight of the dual representation: the labels reversed.
    pub fn dagger(&self) -> Self {
        let mut labels = self.labels.clone();
        labels.reverse();
        Self {
            rank: self.rank,
            labels,
        }
    }

    /// Row lengths `λ_i = a_i + ... + a_{r-1}` of the associated partition,
    /// padded to exactly `rank` entries (the last one is always 0).
    pub fn partition_rows(&self) -> Vec<usize> {
        let mut rows = vec![0; self.rank];
        for i in (0..self.rank.saturating_sub(1)).rev() {
            rows[i] = rows[i + 1] + self.labels[i];
        }
        rows
    }
}

impl fmt::Display for Weight {
    /// Written as a sum of fundamental weights, e.g. `2w1+w2`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.labels.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if a == 1 {
                write!(f, "w{}", i + 1)?;
            } else {
                write!(f, "{}w{}", a, i + 1)?;
            }
        }
        Ok(())
    }
}

/// All of `P_l(r)` in lexicographic order of the label vectors.
///
/// There are `binomial(l + r - 1, r - 1)` of them.
pub fn enumerate_weights(rank: usize, level: usize) -> Vec<Weight> {
    assert!(rank >= 1, "rank must be at least 1");
    let mut out = Vec::new();
    let mut labels = vec![0; rank - 1];
    fill_labels(0, level, &mut labels, &mut |labels| {
        out.push(Weight {
            rank,
            labels: labels.to_vec(),
        })
    });
    out
}

fn fill_labels(pos: usize, budget: usize, labels: &mut [usize], emit: &mut impl FnMut(&[usize])) {
    if pos == labels.len() {
        emit(labels);
        return;
    }
    for a in 0..=budget {
        labels[pos] = a;
        fill_labels(pos + 1, budget - a, labels, emit);
    }
    labels[pos] = 0;
}

/// The integer in `0..rank` attached to a level-one weight: `0 ↦ 0`, `ϖ_i ↦ i`.
pub fn level1_label(w: &Weight) -> Result<usize> {
    let mut found = 0;
    for (i, &a) in w.labels.iter().enumerate() {
        match a {
            0 => {}
            1 if found == 0 => found = i + 1,
            _ => {
                return Err(Error::NotLevelOne {
                    labels: w.labels.clone(),
                })
            }
        }
    }
    Ok(found)
}

/// Inverse of [`level1_label`].
pub fn level1_weight(label: usize, rank: usize) -> Result<Weight> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    match label {
        0 => Ok(Weight::zero(rank)),
        i if i < rank => Weight::fundamental(rank, i),
        _ => Err(Error::LabelOutOfRange { label, rank }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn w(rank: usize, labels: &[usize]) -> Weight {
        Weight::new(rank, labels.to_vec()).unwrap()
    }

    #[test]
    fn rank_two_level_two() {
        let ws = enumerate_weights(2, 2);
        assert_eq!(ws, vec![w(2, &[0]), w(2, &[1]), w(2, &[2])]);
        assert_eq!(enumerate_weights(2, 1), vec![w(2, &[0]), w(2, &[1])]);
    }

    #[test]
    fn counts_match_binomial() {
        // brute force over the box [0, l]^{r-1}
        for r in 1..=6 {
            for l in 0..=6 {
                let mut brute = 0;
                let total = (l + 1usize).pow((r - 1) as u32);
                for mut code in 0..total {
                    let mut s = 0;
                    for _ in 0..r - 1 {
                        s += code % (l + 1);
                        code /= l + 1;
                    }
                    if s <= l {
                        brute += 1;
                    }
                }
                let ws = enumerate_weights(r, l);
                assert_eq!(ws.len(), brute);
                assert_eq!(ws.len(), binomial(l + r - 1, r - 1));
                assert!(ws.windows(2).all(|p| p[0] < p[1]));
            }
        }
        assert_eq!(enumerate_weights(3, 4).len(), 15);
    }

    #[test]
    fn degenerate_rank_one() {
        assert_eq!(enumerate_weights(1, 3), vec![Weight::zero(1)]);
        assert_eq!(Weight::zero(1).partition_rows(), vec![0]);
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(Weight::zero(4).dagger(), Weight::zero(4));
        assert_eq!(w(3, &[2, 1]).dagger(), w(3, &[1, 2]));
        let d = Weight::fundamental(12, 1).unwrap().dagger();
        assert_eq!(d, Weight::fundamental(12, 11).unwrap());
    }

    #[test]
    fn dagger_is_involution_and_preserves_alcove() {
        for r in 1..=5 {
            for l in 0..=4 {
                for x in enumerate_weights(r, l) {
                    assert_eq!(x.dagger().dagger(), x);
                    assert_eq!(x.dagger().level(), x.level());
                }
            }
        }
    }

    #[test]
    fn level_one_identification() {
        assert_eq!(level1_label(&Weight::zero(12)).unwrap(), 0);
        assert_eq!(level1_label(&Weight::fundamental(12, 5).unwrap()).unwrap(), 5);
        assert_eq!(level1_weight(11, 12).unwrap(), Weight::fundamental(12, 11).unwrap());
        assert!(level1_weight(12, 12).is_err());
        assert!(matches!(
            level1_label(&w(3, &[1, 1])),
            Err(Error::NotLevelOne { .. })
        ));
        assert!(level1_label(&w(3, &[2, 0])).is_err());
        for m in 1..=12 {
            for i in 0..m {
                let x = level1_weight(i, m).unwrap();
                assert_eq!(level1_label(&x).unwrap(), i);
                let dual = level1_label(&x.dagger()).unwrap();
                assert_eq!(dual, if i == 0 { 0 } else { m - i });
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Weight::new(0, vec![]), Err(Error::ZeroRank));
        assert!(matches!(Weight::new(3, vec![1]), Err(Error::LabelCount { .. })));
        assert!(Weight::fundamental(3, 3).is_err());
    }

    #[test]
    fn json_shape() {
        let x = w(3, &[2, 1]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"rank":3,"labels":[2,1]}"#);
        let back: Weight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Weight>(r#"{"rank":3,"labels":[1]}"#).is_err());
    }

    #[test]
    fn partition_rows_and_display() {
        assert_eq!(w(3, &[2, 1]).partition_rows(), vec![3, 1, 0]);
        assert_eq!(w(3, &[2, 1]).to_string(), "2w1+w2");
        assert_eq!(Weight::zero(3).to_string(), "0");
    }
}
