//! Spectral certification of graph toughness.
//!
//! The library certifies that a graph is `t`-tough by comparing the largest
//! eigenvalue of its distance signless Laplacian `Tr(G) + D(G)` against
//! closed-form thresholds, and backs every numeric claim with an exact
//! brute-force toughness oracle on small orders. The pieces:
//!
//! - [`graph`] — adjacency lists, BFS distances, the `K_s ∨ (⋃ K_{n_i})`
//!   families and their recognizer;
//! - [`spectral`] — dense matrices, transmissions, power iteration,
//!   equitable partitions and quotients;
//! - [`toughness`] — the exact `τ` / `τ′` oracle over vertex cuts;
//! - [`extremal`] — closed-form 3×3 quotients, their characteristic
//!   polynomials (transcribed and determinant-expanded readings, with
//!   discrepancy reports where the two disagree), and family comparisons;
//! - [`certify`] — the four threshold certificates and a randomized
//!   falsification sweep that replays claims against the oracle;
//! - [`lemmas`] — verifiers for the supporting inequalities;
//! - [`generate`] — seeded graph generators and exhaustive small-order
//!   enumeration.

pub mod certify;
pub mod error;
pub mod extremal;
pub mod generate;
pub mod graph;
pub mod lemmas;
pub mod spectral;
pub mod toughness;

pub use certify::{
    certify, certify_1tough, certify_fractional, certify_order_degree, certify_order_size,
    falsify_sweep, oracle_crosscheck, CertOptions, CertOutcome, Crosscheck, SweepConfig,
    SweepInstance, SweepReport, Theorem, Verdict,
};
pub use error::{Error, Result};
pub use extremal::{
    charpoly_discrepancies, charpoly_eval, compare_families, cubic_largest_real_root,
    extremal_wiener_check, largest_charpoly_root, quotient_closed_form, CharPolyParams,
    Discrepancy, FamilyComparison, WienerCheck,
};
pub use generate::{
    dense_low_degree, dense_near_complete, enumerate_connected_classes, perturbed_family,
    random_connected_gnp, random_relabel, CONNECTED_CLASS_COUNTS,
};
pub use graph::{build_family, recognize_family, DistanceTable, ExtremalSpec, Graph};
pub use lemmas::{verify_all, verify_lemma, LemmaReport, LEMMA_TOKENS};
pub use spectral::{
    dsl_matrix, eta1_lower_bounds, perron_value, quotient, spectral_summary, transmissions,
    wiener_index, DenseMatrix, EigOptions, Partition, QuotientMatrix, SpectralSummary,
};
pub use toughness::{
    is_t_tough, toughness_exact, CutWitness, OracleOptions, Rational, Toughness, ToughnessReport,
    Variant,
};
