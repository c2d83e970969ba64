use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letters must be positive, got {0}")]
    InvalidLetter(usize),
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("inner shape {inner:?} does not fit inside {outer:?}")]
    BadSkewShape { outer: Vec<usize>, inner: Vec<usize> },
    #[error("row {row} has {got} entries, shape needs {want}")]
    RowLength { row: usize, got: usize, want: usize },
    #[error("filling violates row or column order at ({0}, {1})")]
    NotTableau(usize, usize),
    #[error("expected a tableau of partition shape")]
    NotStraight,
    #[error("cell ({0}, {1}) is not a jeu de taquin position")]
    NotJdtPosition(usize, usize),
    #[error("word of odd length {0} cannot be split into a double row")]
    OddLength(usize),
    #[error("weight {0:?} is not a partition")]
    WeightNotPartition(Vec<usize>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("need a shift a >= {need}, got {got}")]
    ShiftTooSmall { need: usize, got: usize },
    #[error("rank n = {n} too small, need at least {need}")]
    RankTooSmall { n: usize, need: usize },
    #[error("letter {letter} exceeds rank {n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("level {level} out of range 1..{n}")]
    LevelOutOfRange { level: usize, n: usize },
    #[error("index {i} out of range 1..{n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("row {0} is not weakly increasing")]
    RowNotSorted(usize),
    #[error("rigged configuration is not in the image of psi")]
    NotInImage,
    #[error("negative Gaussian binomial argument ({p}, {m})")]
    NegativeBinomial { p: i64, m: i64 },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
