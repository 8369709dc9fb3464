//! Exact-arithmetic toolkit for n-Lie (Filippov) algebras.
//!
//! Everything is computed over arbitrary-precision rationals: brackets,
//! Filippov/Jacobi identity checks, the simple Euclidean algebras, the Lie
//! algebra of inner derivations, İnönü-Wigner and Weimar-Woods contractions,
//! and the structure reports comparing them.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod contraction;
pub mod error;
pub mod fundamental;
pub mod induced;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod rational;
pub mod subspace;
pub mod tensor;

pub use algebra::{FiReport, FiViolation, IdentityCheck, NLieAlgebra, Splitting};
pub use analysis::{
    certify_central_extension, compare_report, is_central_subspace, match_structure_constants,
    quotient_lie, semidirect_report_fa, Claim, MatchResult, StructureReport,
};
pub use contraction::{
    check_ww_grading, contract_fa, grading_from_splitting, iw_contract_lie, ww_contract_lie,
    Grading, GradingViolation,
};
pub use error::{Error, Result};
pub use fundamental::{ad_matrix, check_derivation_identity, dot, ker_ad, wedge_words, FundamentalObject};
pub use induced::{induce, InducedLie};
pub use lie::{Fingerprint, LieAlgebra};
pub use matrix::{solve_in_span, Matrix, Rref};
pub use rational::{format_rational, parse_rational, rat, rat_int, Rational};
pub use subspace::{SpanSolver, Subspace};
pub use tensor::{canonicalize_word, index_tuples, AntisymTensor};

#[cfg(test)]
mod thread_safety {
    // every value type is immutable after construction and shares freely
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn value_types_are_send_and_sync() {
        assert_send_sync::<crate::NLieAlgebra>();
        assert_send_sync::<crate::LieAlgebra>();
        assert_send_sync::<crate::InducedLie>();
        assert_send_sync::<crate::AntisymTensor>();
        assert_send_sync::<crate::FundamentalObject>();
        assert_send_sync::<crate::Matrix>();
        assert_send_sync::<crate::Subspace>();
        assert_send_sync::<crate::Splitting>();
        assert_send_sync::<crate::Grading>();
        assert_send_sync::<crate::FiReport>();
        assert_send_sync::<crate::StructureReport>();
        assert_send_sync::<crate::Fingerprint>();
    }
}
