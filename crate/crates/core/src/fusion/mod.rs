//! The fusion ring of `sl(r)` at level `l`.
//!
//! Fusion coefficients come from the Kac-Walton formula: decompose the
//! classical tensor product, then fold every highest weight into the
//! fundamental alcove with the shifted action of the affine Weyl group,
//! keeping track of the sign. Weights that land on a wall drop out.

pub mod oracle;

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::reptheory::{casimir_norm, tensor_decompose, Partition};
use crate::weights::{enumerate_weights, level1_weight, Weight};
use crate::young::YoungDiagram;

/// Square matrix indexed by basis positions.
pub type Matrix<T> = Vec<Vec<T>>;

/// Rank, level, the basis `P_l(r)` and lazily built fusion matrices.
///
/// `fusion_matrix(λ)[μ][ν]` is `N_{λμ}^ν` with `μ, ν` given as basis
/// positions. Matrices are computed on first use and shared afterwards; the
/// context is `Sync` and can be used from several threads at once.
#[derive(Debug)]
pub struct FusionContext {
    rank: usize,
    level: usize,
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    dual: Vec<usize>,
    matrices: Vec<OnceLock<Matrix<u64>>>,
    handle: OnceLock<Matrix<BigUint>>,
}

impl FusionContext {
    pub fn new(rank: usize, level: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let basis = enumerate_weights(rank, level);
        let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let dual = basis.iter().map(|w| index[&w.dagger()]).collect();
        let matrices = basis.iter().map(|_| OnceLock::new()).collect();
        Ok(Self {
            rank,
            level,
            basis,
            index,
            dual,
            matrices,
            handle: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    /// Position of `w` in the basis, or an error if `w` is not in `P_l(r)`.
    pub fn position(&self, w: &Weight) -> Result<usize> {
        w.check_alcove(self.rank, self.level)?;
        Ok(self.index[w])
    }

    /// Basis position of the dual weight.
    pub fn dual_position(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// Fusion matrix of the basis element at position `i`.
    pub fn matrix_at(&self, i: usize) -> &Matrix<u64> {
        self.matrices[i].get_or_init(|| {
            let lambda = &self.basis[i];
            self.basis
                .iter()
                .map(|mu| {
                    let row = kac_walton(lambda, mu, self.level).unwrap_or_else(|e| panic!("{e}"));
                    let mut dense = vec![0; self.basis.len()];
                    for (nu, m) in row {
                        dense[self.index[&nu]] = m;
                    }
                    dense
                })
                .collect()
        })
    }

    pub fn fusion_matrix(&self, w: &Weight) -> Result<&Matrix<u64>> {
        Ok(self.matrix_at(self.position(w)?))
    }

    /// `N_{λμ}^ν`.
    pub fn fusion_coefficient(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
        let (i, j, k) = (self.position(lambda)?, self.position(mu)?, self.position(nu)?);
        Ok(self.matrix_at(i)[j][k])
    }

    /// `λ ⋆ μ` as a map from weights to non-zero multiplicities.
    pub fn fusion_product(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let (i, j) = (self.position(lambda)?, self.position(mu)?);
        Ok(self.matrix_at(i)[j]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| (self.basis[k].clone(), m))
            .collect())
    }

    /// Matrix of multiplication by the handle element `Σ_μ [μ] ⋆ [μ†]`.
    pub fn handle_matrix(&self) -> &Matrix<BigUint> {
        self.handle.get_or_init(|| {
            let n = self.basis.len();
            let mut handle = vec![vec![BigUint::zero(); n]; n];
            for m in 0..n {
                let left = self.matrix_at(m);
                let right = self.matrix_at(self.dual[m]);
                for (row, left_row) in handle.iter_mut().zip(left) {
                    for (mid, &a) in left_row.iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        for (entry, &b) in row.iter_mut().zip(&right[mid]) {
                            if b != 0 {
                                *entry += a * b;
                            }
                        }
                    }
                }
            }
            handle
        })
    }
}

/// Folds the shifted weight `κ + ρ` into the fundamental alcove at `level`.
///
/// Returns the sign of the affine Weyl group element used and the resulting
/// dominant weight, or `None` when `κ + ρ` is fixed by a reflection.
pub fn affine_fold(kappa: &Partition, rank: usize, level: usize) -> Option<(i64, Weight)> {
    if kappa.len() > rank {
        return None;
    }
    let period = (level + rank) as i64;
    let mut x: Vec<i64> = (0..rank)
        .map(|i| (kappa.part(i) + rank - 1 - i) as i64)
        .collect();
    let mut sign = 1;
    loop {
        // insertion sort into decreasing order, one sign flip per transposition
        for i in 1..rank {
            let mut j = i;
            while j > 0 && x[j - 1] < x[j] {
                x.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if x.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        let spread = x[0] - x[rank - 1];
        if spread < period {
            break;
        }
        if spread == period {
            return None;
        }
        // reflection in the affine wall (x, θ) = l + r
        let (first, last) = (x[0], x[rank - 1]);
        x[0] = last + period;
        x[rank - 1] = first - period;
        sign = -sign;
    }
    let labels = x.windows(2).map(|p| (p[0] - p[1] - 1) as usize).collect();
    Some((sign, Weight::new(rank, labels).expect("rank - 1 labels")))
}

/// Fusion product of `λ` and `μ` at `level` by the Kac-Walton formula.
pub fn kac_walton(lambda: &Weight, mu: &Weight, level: usize) -> Result<BTreeMap<Weight, u64>> {
    let rank = lambda.rank();
    lambda.check_alcove(rank, level)?;
    mu.check_alcove(rank, level)?;
    let mut signed: BTreeMap<Weight, i64> = BTreeMap::new();
    for (kappa, m) in tensor_decompose(lambda, mu)? {
        if let Some((sign, nu)) = affine_fold(&Partition::from_weight(&kappa), rank, level) {
            *signed.entry(nu).or_insert(0) += sign * m as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (nu, c) in signed {
        if c < 0 {
            return Err(Error::NegativeFusion {
                labels: vec![lambda.labels().to_vec(), mu.labels().to_vec(), nu.labels().to_vec()],
                value: c,
            });
        }
        if c > 0 {
            out.insert(nu, c as u64);
        }
    }
    Ok(out)
}

/// Conformal weight `h = (λ, λ + 2ρ) / (2 (l + r))` of the level-`l` module.
pub fn conformal_weight(w: &Weight, rank: usize, level: usize) -> Result<Rational64> {
    w.check_alcove(rank, level)?;
    Ok(casimir_norm(w) / Rational64::from_integer(2 * (level + rank) as i64))
}

/// Degree in which `V_{π(Y)} ⊗ V_{π(ᵗY)}` sits inside the level-one `sl(rl)`
/// module of weight `|Y|`: the difference of conformal weights
/// `h_{π(Y)} + h_{π(ᵗY)} - h_{|Y|}`.
///
/// The result must be a non-negative integer; anything else is reported as
/// [`Error::NonIntegralGap`].
pub fn branching_gap(y: &YoungDiagram) -> Result<u64> {
    let (r, l) = (y.rank(), y.level());
    let t = y.transpose()?;
    let top = level1_weight(y.size(), r * l)?;
    let gap = conformal_weight(&y.pi(), r, l)? + conformal_weight(&t.pi(), l, r)?
        - conformal_weight(&top, r * l, 1)?;
    if !gap.is_integer() || gap.is_negative() {
        return Err(Error::NonIntegralGap {
            rows: y.rows().to_vec(),
            value: gap.to_string(),
        });
    }
    Ok(gap.to_integer() as u64)
}
