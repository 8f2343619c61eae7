//! The conformal embedding `sl(r) x sl(l) ⊂ sl(rl)` and rank-level duality at
//! the level of dimensions.
//!
//! The level-one `sl(rl)` module of weight `λ_0` decomposes into pieces
//! indexed by the affine diagrams of size `λ_0`. A diagram `Y` contributes the
//! pair `(π(Y), π(ᵗY))`; only finite diagrams contribute in degree zero.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::blocks::{block_dim, CurveSpec};
use crate::error::{Error, Result};
use crate::fusion::{branching_gap, FusionContext};
use crate::reptheory::{exterior_power_dim, weyl_dim};
use crate::weights::{level1_label, level1_weight, Weight};
use crate::young::{enumerate_aff, YoungDiagram};

/// Where the asserted relation comes from: a published statement, or an
/// identity derived here and confirmed by computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Derived,
}

/// Two exact sides of a dimension relation and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(serialize_with = "decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigUint,
    pub holds: bool,
    pub provenance: Provenance,
}

fn decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

impl Report {
    pub fn new(lhs: BigUint, rhs: BigUint, provenance: Provenance, rel: impl Fn(&BigUint, &BigUint) -> bool) -> Self {
        let holds = rel(&lhs, &rhs);
        Self {
            lhs,
            rhs,
            holds,
            provenance,
        }
    }
}

/// One summand `H_{μ,l}(r) ⊗ H_{ᵗμ,r}(l)` of a level-one `sl(rl)` module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingSummand {
    pub diagram: YoungDiagram,
    pub mu: Weight,
    pub mu_t: Weight,
    pub gap: u64,
}

/// `(λ_0, μ_1, μ_2)` with `λ_0` level one for `sl(rl)`, `μ_1 ∈ P_l(r)` and
/// `μ_2 ∈ P_r(l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub lambda0: Weight,
    pub mu1: Weight,
    pub mu2: Weight,
}

impl Triple {
    pub fn new(lambda0: Weight, mu1: Weight, mu2: Weight) -> Self {
        Self { lambda0, mu1, mu2 }
    }

    fn check(&self, r: usize, l: usize) -> Result<usize> {
        self.lambda0.check_alcove(r * l, 1)?;
        self.mu1.check_alcove(r, l)?;
        self.mu2.check_alcove(l, r)?;
        level1_label(&self.lambda0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "diagram")]
pub enum AlphaComponent {
    Zero,
    NonzeroFin(YoungDiagram),
}

/// All summands of the level-one module with label `lambda0`, in the order of
/// [`enumerate_aff`].
pub fn branching_summands(lambda0: usize, r: usize, l: usize) -> Result<Vec<BranchingSummand>> {
    enumerate_aff(r, l, Some(lambda0))?
        .into_iter()
        .map(|diagram| {
            let gap = branching_gap(&diagram)?;
            let mu_t = diagram.transpose()?.pi();
            Ok(BranchingSummand {
                mu: diagram.pi(),
                mu_t,
                gap,
                diagram,
            })
        })
        .collect()
}

/// The diagram witnessing admissibility of `t`, if any.
pub fn admissible(t: &Triple, r: usize, l: usize) -> Result<Option<YoungDiagram>> {
    let size = t.check(r, l)?;
    let mut found = None;
    for y in enumerate_aff(r, l, Some(size))? {
        if y.pi() == t.mu1 && y.transpose()?.pi() == t.mu2 {
            assert!(found.is_none(), "two diagrams realise the same triple");
            found = Some(y);
        }
    }
    Ok(found)
}

/// Whether the `(λ_0, μ_1, μ_2)` component of the map induced by the
/// embedding can be non-zero: only for admissible triples with a finite
/// witness.
pub fn classify_alpha_component(t: &Triple, r: usize, l: usize) -> Result<AlphaComponent> {
    Ok(match admissible(t, r, l)? {
        Some(y) if y.is_fin() => AlphaComponent::NonzeroFin(y),
        _ => AlphaComponent::Zero,
    })
}

/// `binomial(rl, λ)` against `Σ_{Y finite, |Y| = λ} dim V_{π(Y)} · dim V_{π(ᵗY)}`.
pub fn skew_cauchy_check(lambda: usize, r: usize, l: usize) -> Result<Report> {
    let lhs = exterior_power_dim(lambda, r * l)?;
    let mut rhs = BigUint::zero();
    for y in enumerate_aff(r, l, Some(lambda))? {
        if y.is_fin() {
            rhs += weyl_dim(&y.pi()) * weyl_dim(&y.transpose()?.pi());
        }
    }
    Ok(Report::new(lhs, rhs, Provenance::Paper, |a, b| a == b))
}

/// Fusion contexts for `sl(r)` at level `l` and `sl(l)` at level `r`.
#[derive(Debug)]
pub struct RankLevelPair {
    r: usize,
    l: usize,
    rank_side: FusionContext,
    level_side: FusionContext,
}

impl RankLevelPair {
    pub fn new(r: usize, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::ZeroLevel);
        }
        Ok(Self {
            r,
            l,
            rank_side: FusionContext::new(r, l)?,
            level_side: FusionContext::new(l, r)?,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `sl(r)` at level `l`.
    pub fn rank_side(&self) -> &FusionContext {
        &self.rank_side
    }

    /// `sl(l)` at level `r`.
    pub fn level_side(&self) -> &FusionContext {
        &self.level_side
    }

    /// Checks types and the condition `Σ |Y_i| ≡ 0 mod rl`; returns the
    /// weights on both sides.
    fn split(&self, diagrams: &[YoungDiagram]) -> Result<(Vec<Weight>, Vec<Weight>)> {
        let modulus = self.r * self.l;
        let mut total = 0;
        let mut mus = Vec::with_capacity(diagrams.len());
        let mut mus_t = Vec::with_capacity(diagrams.len());
        for y in diagrams {
            if (y.rank(), y.level()) != (self.r, self.l) {
                return Err(Error::TypeMismatch {
                    rank: self.r,
                    level: self.l,
                    found_rank: y.rank(),
                    found_level: y.level(),
                });
            }
            mus_t.push(y.transpose()?.pi());
            mus.push(y.pi());
            total += y.size();
        }
        if total % modulus != 0 {
            return Err(Error::SizeCondition { total, modulus });
        }
        Ok((mus, mus_t))
    }

    /// Genus zero: the `sl(r)` and `sl(l)` dimensions must agree, the
    /// level-one factor being one-dimensional.
    pub fn genus0_check(&self, diagrams: &[YoungDiagram]) -> Result<Report> {
        let (mus, mus_t) = self.split(diagrams)?;
        let d_r = block_dim(&self.rank_side, &CurveSpec::new(0, mus))?;
        let d_l = block_dim(&self.level_side, &CurveSpec::new(0, mus_t))?;
        Ok(Report::new(d_r, d_l, Provenance::Paper, |a, b| a == b))
    }

    /// `dim V_{μ,l}(r) <= (rl)^g · dim V_{ᵗμ,r}(l)`, with equality at genus zero.
    pub fn main_theorem_check(&self, genus: usize, diagrams: &[YoungDiagram]) -> Result<Report> {
        let (mus, mus_t) = self.split(diagrams)?;
        let lhs = block_dim(&self.rank_side, &CurveSpec::new(genus, mus))?;
        let level_one = BigUint::from(self.r * self.l).pow(genus as u32);
        let rhs = level_one * block_dim(&self.level_side, &CurveSpec::new(genus, mus_t))?;
        Ok(if genus == 0 {
            Report::new(lhs, rhs, Provenance::Paper, |a, b| a == b)
        } else {
            Report::new(lhs, rhs, Provenance::Paper, |a, b| a <= b)
        })
    }

    /// `l^g · dim V_{0,l}(r) = r^g · dim V_{0,r}(l)` on a closed genus-`g` curve.
    pub fn sd0_identity_check(&self, genus: usize) -> Result<Report> {
        let g = genus as u32;
        let lhs = BigUint::from(self.l).pow(g) * block_dim(&self.rank_side, &CurveSpec::closed(genus))?;
        let rhs = BigUint::from(self.r).pow(g) * block_dim(&self.level_side, &CurveSpec::closed(genus))?;
        Ok(Report::new(lhs, rhs, Provenance::Derived, |a, b| a == b))
    }
}

/// `n` affine diagrams of type `(r, l)` whose sizes sum to `0 mod rl`: the
/// first `n - 1` uniformly from the whole affine set, the last uniformly from
/// the size class that closes the sum.
pub fn sample_diagrams<R: Rng + ?Sized>(rng: &mut R, r: usize, l: usize, n: usize) -> Result<Vec<YoungDiagram>> {
    if n == 0 {
        return Err(Error::NoMarkedPoints);
    }
    let modulus = r * l;
    let all = enumerate_aff(r, l, None)?;
    let mut out: Vec<YoungDiagram> = (0..n - 1).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
    let used: usize = out.iter().map(YoungDiagram::size).sum();
    let closing = (modulus - used % modulus) % modulus;
    let class = enumerate_aff(r, l, Some(closing))?;
    out.push(class[rng.gen_range(0..class.len())].clone());
    Ok(out)
}

/// Level-one `sl(rl)` weights attached to a list of diagrams.
pub fn level_one_labels(diagrams: &[YoungDiagram]) -> Result<Vec<Weight>> {
    diagrams
        .iter()
        .map(|y| level1_weight(y.size(), y.rank() * y.level()))
        .collect()
}
