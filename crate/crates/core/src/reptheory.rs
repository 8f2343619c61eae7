//! Finite-dimensional representation theory of `sl(r)` through partitions.
//!
//! A dominant weight corresponds to the partition with rows
//! `λ_i = a_i + ... + a_{r-1}`. Going back, full columns of height `r` are
//! dropped: they carry a power of the determinant, trivial on `sl(r)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::Weight;

/// Environment variable overriding the number of memoized products kept by
/// [`lr_product`] before the table is flushed.
pub const CACHE_CAP_ENV: &str = "RANKDUAL_CACHE_CAP";
const DEFAULT_CACHE_CAP: usize = 1 << 16;

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn from_weight(w: &Weight) -> Self {
        Self::new(w.partition_rows()).expect("weight rows are decreasing")
    }

    /// The `sl(rank)` weight with labels `λ_i - λ_{i+1}`; rows beyond `rank`
    /// must be empty.
    pub fn to_weight(&self, rank: usize) -> Result<Weight> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if self.len() > rank {
            return Err(Error::PartitionTooLong {
                parts: self.0.clone(),
                rank,
            });
        }
        let labels = (0..rank - 1).map(|i| self.part(i) - self.part(i + 1)).collect();
        Weight::new(rank, labels)
    }
}

/// Dimension of the irreducible module with highest weight `w`,
/// `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn weyl_dim(w: &Weight) -> BigUint {
    let rows = w.partition_rows();
    let r = rows.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        for j in i + 1..r {
            num *= rows[i] - rows[j] + j - i;
            den *= j - i;
        }
    }
    num / den
}

/// `binomial(dim, k)`: the dimension of `Λ^k` of a `dim`-dimensional space.
pub fn exterior_power_dim(k: usize, dim: usize) -> Result<BigUint> {
    if k > dim {
        return Err(Error::ExteriorPower { k, dim });
    }
    let k = k.min(dim - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (dim - i) / (i + 1);
    }
    Ok(acc)
}

/// `(λ, λ + 2ρ)` normalised so that long roots have length 2.
///
/// In partition coordinates this is
/// `Σ λ_i² - |λ|²/r + Σ (r + 1 - 2i) λ_i`.
pub fn casimir_norm(w: &Weight) -> Rational64 {
    let rows = w.partition_rows();
    let r = rows.len() as i64;
    let total: i64 = rows.iter().map(|&x| x as i64).sum();
    let squares: i64 = rows.iter().map(|&x| (x * x) as i64).sum();
    let rho: i64 = rows
        .iter()
        .enumerate()
        .map(|(i, &x)| (r - 1 - 2 * i as i64) * x as i64)
        .sum();
    Rational64::from_integer(squares + rho) - Rational64::new(total * total, r)
}

type ProductKey = (Partition, Partition, usize);
type Product = Arc<BTreeMap<Partition, u64>>;

fn product_cache() -> &'static RwLock<HashMap<ProductKey, Product>> {
    static CACHE: OnceLock<RwLock<HashMap<ProductKey, Product>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cache_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(CACHE_CAP_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_CACHE_CAP)
    })
}

/// The product `s_λ s_μ` truncated to partitions with at most `max_rows`
/// rows, as a map `ν ↦ c_{λμ}^ν`.
///
/// Terms are produced by growing `λ` with one horizontal strip of `i`'s per
/// row `μ_i` of `μ`, keeping the reverse reading word a lattice word.
/// Results are memoized in a process-wide table.
pub fn lr_product(lambda: &Partition, mu: &Partition, max_rows: usize) -> Product {
    // s_λ s_μ = s_μ s_λ; fill with the shorter content.
    let (outer, content) = if (mu.size(), mu) <= (lambda.size(), lambda) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let key = (outer.clone(), content.clone(), max_rows);
    if let Some(hit) = product_cache().read().expect("cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let product = Arc::new(compute_lr_product(outer, content, max_rows));
    let mut cache = product_cache().write().expect("cache poisoned");
    if cache.len() >= cache_cap() {
        cache.clear();
    }
    cache.entry(key).or_insert_with(|| Arc::clone(&product));
    product
}

fn compute_lr_product(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if lambda.len() > max_rows || mu.len() > max_rows {
        return out;
    }
    let mut filler = StripFiller {
        content: mu.parts(),
        max_rows,
        shape: (0..max_rows).map(|i| lambda.part(i)).collect(),
        previous: vec![0; max_rows],
        out: &mut out,
    };
    filler.place_label(0);
    out
}

struct StripFiller<'a> {
    content: &'a [usize],
    max_rows: usize,
    /// Current outer shape.
    shape: Vec<usize>,
    /// Per-row number of boxes carrying the previous label.
    previous: Vec<usize>,
    out: &'a mut BTreeMap<Partition, u64>,
}

impl StripFiller<'_> {
    fn place_label(&mut self, label: usize) {
        if label == self.content.len() {
            let nu = Partition::new(self.shape.clone()).expect("strips keep the shape a partition");
            *self.out.entry(nu).or_insert(0) += 1;
            return;
        }
        let old_shape = self.shape.clone();
        let mut added = vec![0; self.max_rows];
        self.place_row(label, 0, self.content[label], 0, 0, &old_shape, &mut added);
    }

    /// Distributes `remaining` boxes labelled `label` over rows `row..`.
    ///
    /// `placed` counts this label in rows above `row`, `prev_above` counts the
    /// previous label in rows strictly above `row`.
    #[allow(clippy::too_many_arguments)]
    fn place_row(
        &mut self,
        label: usize,
        row: usize,
        remaining: usize,
        placed: usize,
        prev_above: usize,
        old_shape: &[usize],
        added: &mut Vec<usize>,
    ) {
        if remaining == 0 {
            let saved = std::mem::replace(&mut self.previous, added.clone());
            self.place_label(label + 1);
            self.previous = saved;
            return;
        }
        if row == self.max_rows {
            return;
        }
        let strip_room = if row == 0 {
            remaining
        } else {
            old_shape[row - 1] - old_shape[row]
        };
        let lattice_room = if label == 0 {
            remaining
        } else {
            prev_above.saturating_sub(placed)
        };
        let most = remaining.min(strip_room).min(lattice_room);
        let prev_here = self.previous[row];
        for k in (0..=most).rev() {
            added[row] = k;
            self.shape[row] = old_shape[row] + k;
            self.place_row(
                label,
                row + 1,
                remaining - k,
                placed + k,
                prev_above + prev_here,
                old_shape,
                added,
            );
        }
        added[row] = 0;
        self.shape[row] = old_shape[row];
    }
}

/// The Littlewood-Richardson coefficient `c_{λμ}^ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    lr_product(lambda, mu, nu.len()).get(nu).copied().unwrap_or(0)
}

/// Decomposition of `V_v ⊗ V_w` into irreducibles of `sl(r)`.
pub fn tensor_decompose(v: &Weight, w: &Weight) -> Result<BTreeMap<Weight, u64>> {
    if v.rank() != w.rank() {
        return Err(Error::RankMismatch {
            expected: v.rank(),
            found: w.rank(),
        });
    }
    let rank = v.rank();
    let product = lr_product(&Partition::from_weight(v), &Partition::from_weight(w), rank);
    let mut out = BTreeMap::new();
    for (nu, &m) in product.iter() {
        *out.entry(nu.to_weight(rank)?).or_insert(0) += m;
    }
    Ok(out)
}
