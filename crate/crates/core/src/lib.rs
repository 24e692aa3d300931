//! Exact-arithmetic machinery for zero-sum problems in prime-field planes:
//! finite-field and direction geometry, sparse polynomial expansion, the
//! signed Boolean-cube sum, subset-sum dynamic programming with witness
//! reconstruction, Olson-constant search, and the exhaustive/sampled
//! verifiers built on top of them.
//!
//! Everything is exact (no floating point) and deterministic: sampled runs
//! derive every case from `(seed, index)`, searches fix their exploration
//! order, and reports carry enough state to be partitioned and resumed.

pub mod error;
pub mod fp;
pub mod integral;
pub mod poly;
pub mod sampling;
pub mod verify;
pub mod zerosum;

pub use error::{Error, Result};
pub use fp::{
    canonicalize_covering_set, covers_all_directions, direction_of, CanonicalSet, Direction,
    FpContext, FpElement, FpVector2,
};
pub use integral::{
    missing_variable_vanishes, signed_cube_sum, signed_cube_sum_coeff, signed_cube_sum_eval,
    CubeIntegralResult, IntegralMethod,
};
pub use poly::{elementary_symmetric, expand_power, LinearForm, Monomial, Polynomial};
pub use verify::{
    build_p, build_q, grt_report, proof_trace, proof_trace_from_set, survey_proof_traces,
    verify_lemma5, GrtReport, Lemma5Report, Lemma5Route, ProofTrace, SurveyMode, SurveyReport,
    Theorem1Survey, TraceSurveyReport,
};
pub use zerosum::{
    balandraud_check, cw_witness_search, find_zero_sum_subset, is_zero_sum_free, olson_constant,
    sharpness_sequence, sigma_sets, theorem4_check, theorem4_exhaustive, theorem4_sampled,
    witness_sums_to_zero, BalandraudReport, CwWitness, GroupContext, GroupElem, GroupKind,
    GroupValue, OlsonResult, SequenceSurveyMode, SubsetSumTable, Theorem4Report, Witness,
};
