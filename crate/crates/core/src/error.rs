use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("level must be at least 1")]
    ZeroLevel,

    #[error("a weight of sl({rank}) needs {expected} labels, got {found}", expected = rank.saturating_sub(1))]
    LabelCount { rank: usize, found: usize },

    #[error("rank mismatch: expected sl({expected}), found sl({found})")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight {labels:?} of sl({rank}) is not in P_{level}")]
    OutsideAlcove { rank: usize, level: usize, labels: Vec<usize> },

    #[error("weight {labels:?} is not a level-one weight")]
    NotLevelOne { labels: Vec<usize> },

    #[error("level-one label {label} out of range for sl({rank})")]
    LabelOutOfRange { label: usize, rank: usize },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("partition {parts:?} has more than {rank} non-zero parts")]
    PartitionTooLong { parts: Vec<usize>, rank: usize },

    #[error("invalid Young diagram {rows:?} of type ({rank}, {level}): {reason}")]
    InvalidDiagram {
        rows: Vec<usize>,
        rank: usize,
        level: usize,
        reason: &'static str,
    },

    #[error("Young diagram {rows:?} of type ({rank}, {level}) is not in the affine set")]
    NotAffine { rows: Vec<usize>, rank: usize, level: usize },

    #[error("diagram type ({found_rank}, {found_level}) does not match ({rank}, {level})")]
    TypeMismatch {
        rank: usize,
        level: usize,
        found_rank: usize,
        found_level: usize,
    },

    #[error("size class {size} out of range 0..{modulus}")]
    SizeClass { size: usize, modulus: usize },

    #[error("exterior power {k} of a space of dimension {dim} is out of range")]
    ExteriorPower { k: usize, dim: usize },

    #[error("factorization needs genus at least 1")]
    GenusZero,

    #[error("marked sizes sum to {total}, which is not 0 mod {modulus}")]
    SizeCondition { total: usize, modulus: usize },

    #[error("at least one marked point is required")]
    NoMarkedPoints,

    #[error("branching gap of {rows:?} is {value}, not a non-negative integer")]
    NonIntegralGap { rows: Vec<usize>, value: String },

    #[error("negative fusion coefficient {value} for {labels:?}")]
    NegativeFusion { labels: Vec<Vec<usize>>, value: i64 },
}
