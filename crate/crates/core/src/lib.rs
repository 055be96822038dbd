//! Exact computations around generalized Kummer surfaces.
//!
//! * [`kummer`] enumerates the singularity configurations of `A/G` for the seven
//!   groups `Z2, Z3, Z4, Z6, Q8, Q12, T24` and derives Picard-number bounds.
//! * [`group`] builds those groups as multiplication tables and computes
//!   conjugacy data, stabilizer classes and coset fixed-point counts.
//! * [`lattice`] handles integral quadratic lattices: twists, direct sums,
//!   discriminant groups, short vectors, isometry of definite lattices, and
//!   bounded detection of hyperbolic summands.
//! * [`exact`] is the arbitrary-precision linear algebra underneath.

pub mod exact;
pub mod gram_io;
pub mod group;
pub mod kummer;
pub mod lattice;

pub use exact::{determinant, smith_normal_form, symmetric_inertia, Inertia, IntegerMatrix, MatrixError, SmithForm};
pub use gram_io::{format_gram, parse_gram, read_gram_file, GramParseError};
pub use group::{build_group, FiniteGroupTable, GroupError, GroupName, StabilizerClass, StabilizerKind, Subgroup};
pub use kummer::{
    lefschetz_number, picard_lower_bound, rank_sum, verify_proposition3, ConstraintReport, ConstraintSet,
    KummerError, KummerModel, SingularityConfiguration, SingularityType, VerificationReport,
};
pub use lattice::{
    find_hyperbolic_summand, is_isometric_definite, make_standard, morrison_classify, short_vectors,
    transcendental_consistency, IntegralLattice, LatticeError, MorrisonClass, MorrisonVerdict, StandardLattice,
    SurfaceKind,
};
