//! Birational classification of moduli of sheaves on the projective plane.
//!
//! Chern data are turned into dimension vectors for the Beilinson quiver,
//! the two-step Kronecker reduction is run on those vectors to reach a
//! matrix normal form of type `h` (the depth), and the number `s` of `h × h`
//! matrices up to simultaneous conjugacy is read off together with the
//! rationality class. Every claim the engine makes can be checked against
//! randomly sampled representations with exact linear algebra over `F_p`.

pub mod beilinson;
pub mod error;
pub mod exactlin;
pub mod io;
pub mod kronecker;
pub mod oracle;
pub mod quiver;
pub mod reduction;

pub use beilinson::{
    alpha_to_chern, chi_twist, depth_alpha, depth_chern, natural_cohomology, normalize_twist,
    ext_dims, hom_dim, is_left_general, kronecker_inflate, rep_is_sheaf, sample_general,
    sample_left_general, sample_right_general, BeilinsonRep, ChernData, Cohomology, SheafCheck,
    TwistNorm,
};
pub use error::{Error, Result};
pub use exactlin::{mat_nullspace, mat_rank, mat_solve, ExactMat, FieldSpec, Prime, Scalar};
pub use kronecker::{kron_decompose, kron_sample, mnf_family_q2, preproj_dims, KronDecomp, KroneckerRep, Side, Verdict};
pub use oracle::{certify_reduction, verify_suite, Certification, Suite, VerifyConfig, VerifyReport};
pub use quiver::{euler_beilinson, euler_kronecker, gcd, gcd3, DimVec2, DimVec3};
pub use reduction::{
    classify, hypothesis_refuted, matrix_count, moduli_dimension, rationality_class, reduce, ClassificationReport, RationalityClass,
    OuterSide, ReductionReport, ReductionState, ReductionStep,
};
