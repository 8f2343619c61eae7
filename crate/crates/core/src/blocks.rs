//! Dimensions of spaces of conformal blocks.
//!
//! Degenerating a genus-`g` curve to a rational curve with `g` nodes and
//! sewing each node turns the dimension into a fusion-ring computation: the
//! coefficient of the unit in `[λ_1] ⋆ ... ⋆ [λ_n] ⋆ C^g`, where
//! `C = Σ_μ [μ] ⋆ [μ†]` is the handle element.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::duality::{Provenance, Report};
use crate::error::{Error, Result};
use crate::fusion::FusionContext;
use crate::weights::level1_label;
use crate::weights::Weight;

/// A genus together with the weights at the marked points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub genus: usize,
    pub labels: Vec<Weight>,
}

impl CurveSpec {
    pub fn new(genus: usize, labels: Vec<Weight>) -> Self {
        Self { genus, labels }
    }

    pub fn closed(genus: usize) -> Self {
        Self::new(genus, Vec::new())
    }
}

/// Exact dimension of the space of conformal blocks for `spec`.
pub fn block_dim(ctx: &FusionContext, spec: &CurveSpec) -> Result<BigUint> {
    let mut positions = spec
        .labels
        .iter()
        .map(|w| ctx.position(w))
        .collect::<Result<Vec<_>>>()?;
    // fold cheap labels first
    positions.sort_by_key(|&i| (ctx.basis()[i].level(), i));

    let n = ctx.basis().len();
    let mut state = vec![BigUint::zero(); n];
    state[0] = BigUint::one();
    for &i in &positions {
        let m = ctx.matrix_at(i);
        let mut next = vec![BigUint::zero(); n];
        for (coeff, row) in state.iter().zip(m) {
            if coeff.is_zero() {
                continue;
            }
            for (slot, &a) in next.iter_mut().zip(row) {
                if a != 0 {
                    *slot += coeff * a;
                }
            }
        }
        state = next;
    }
    if spec.genus > 0 {
        let handle = ctx.handle_matrix();
        for _ in 0..spec.genus {
            let mut next = vec![BigUint::zero(); n];
            for (coeff, row) in state.iter().zip(handle) {
                if coeff.is_zero() {
                    continue;
                }
                for (slot, a) in next.iter_mut().zip(row) {
                    *slot += coeff * a;
                }
            }
            state = next;
        }
    }
    Ok(state.swap_remove(0))
}

/// Level-one dimension for `sl(m)`: `m^g` when the labels sum to `0 mod m`,
/// otherwise zero.
pub fn level1_dim_closed(m: usize, spec: &CurveSpec) -> Result<BigUint> {
    let mut total = 0;
    for w in &spec.labels {
        if w.rank() != m {
            return Err(Error::RankMismatch {
                expected: m,
                found: w.rank(),
            });
        }
        total += level1_label(w)?;
    }
    if total % m == 0 {
        Ok(BigUint::from(m).pow(spec.genus as u32))
    } else {
        Ok(BigUint::zero())
    }
}

/// Compares the dimension at genus `g` with the sum over `μ` of the genus
/// `g - 1` dimensions with `μ` and `μ†` added as extra marked points.
pub fn factorize_check(ctx: &FusionContext, spec: &CurveSpec) -> Result<Report> {
    if spec.genus == 0 {
        return Err(Error::GenusZero);
    }
    let lhs = block_dim(ctx, spec)?;
    let mut rhs = BigUint::zero();
    for mu in ctx.basis() {
        let mut labels = spec.labels.clone();
        labels.push(mu.clone());
        labels.push(mu.dagger());
        rhs += block_dim(ctx, &CurveSpec::new(spec.genus - 1, labels))?;
    }
    Ok(Report::new(lhs, rhs, Provenance::Paper, |a, b| a == b))
}
