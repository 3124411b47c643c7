use thiserror::Error;

/// Everything that can go wrong when building shapes, tableaux or queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<usize>),
    #[error("ambient lengths differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("partition has {len} nonzero parts but ambient length {n}")]
    TooLong { len: usize, n: usize },
    #[error("staircase does not fit: l(plus) + l(minus) exceeds {0}")]
    StaircaseOverflow(usize),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("row {row} has {got} entries, the shape needs {expected}")]
    RowLength {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("letter {letter} is not allowed in row {row} for rank {rank}")]
    Alphabet {
        letter: i32,
        row: usize,
        rank: usize,
    },
    #[error("filling is not semistandard at row {row}, column {col}")]
    NotSemistandard { row: usize, col: usize },
    #[error("crystal index {i} is outside 1..{n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("rank mismatch ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("operation needs a straight (unrotated, empty inner) shape")]
    NotStraight,
    #[error("operation needs an unbarred tableau")]
    Barred,
    #[error("{shape} is not an irreducible label for {pair}")]
    NotInDual { shape: String, pair: String },
    #[error("shape is incompatible with {0}")]
    IncompatibleShape(String),
    #[error("tableau is not a {0}-tableau")]
    NotKTableau(String),
    #[error("tableau has nonzero M-weight")]
    NonzeroMWeight,
    #[error("tableau is not a companion tableau for this query")]
    NotCompanion,
    #[error("stable range hypothesis fails: {0}")]
    Unstable(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("negative coefficient at {0:?} during Schur expansion")]
    NegativeCoefficient(Vec<usize>),
    #[error("unknown pair `{0}`")]
    UnknownPair(String),
    #[error("odd phi statistic at index {0} for a symplectic zero-weight tableau")]
    OddPhi(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
