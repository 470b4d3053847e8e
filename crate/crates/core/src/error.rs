use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("ragged matrix rows")]
    RaggedRows,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("determinant is not a nonzero constant")]
    NonUnitDeterminant,
    #[error("matrix is singular")]
    Singular,
    #[error("J does not square to -I")]
    NotComplexStructure,
    #[error("form is not of type (1,1)")]
    NotOneOne,
    #[error("{0} out of range")]
    OutOfRange(&'static str),
    #[error("bundles live on different tori")]
    TorusMismatch,
    #[error("symplectic form is singular")]
    SingularOmega,
    #[error("metric is not positive definite")]
    NotPositiveDefinite,
    #[error("not an almost generalized complex structure")]
    NotGcs,
    #[error("first Chern classes differ")]
    UnequalChernClass,
    #[error("matrix is not of generalized-metric block form")]
    InconsistentBlocks,
    #[error("twist generator is not in the Lie algebra o(n,n)")]
    NotInLieAlgebra,
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
    #[error("polarization kernel is not a maximal isotropic subspace")]
    NotMaximalIsotropic,
}
