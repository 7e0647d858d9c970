//! Exact-arithmetic invariants of cuspidal singularities and obstruction
//! criteria for cusp configurations on curves in surfaces.
//!
//! The library is organized bottom-up:
//!
//! - [`semigroup`]: the numerical semigroup, gap set, delta-invariant and
//!   Alexander polynomial of a single cuspidal singularity;
//! - [`rfunction`]: the aggregated counting function `R(m)` of a
//!   configuration of cusps, computed by min-plus convolution;
//! - [`surgery`]: spin-c structures and closed-form d-invariants of large
//!   positive surgeries on connected sums of algebraic/L-space knots;
//! - [`surface`]: integer intersection lattices, canonical classes,
//!   Riemann-Roch and genus formulas, toric `h^0` presets;
//! - [`obstruction`]: the Bezout-type and Heegaard-Floer obstruction
//!   criteria evaluated over scans of divisor classes.
//!
//! All arithmetic is exact: lattice pairings use checked 64-bit integers and
//! d-invariants use arbitrary-precision rationals. Every type is immutable
//! after construction and every operation is a pure function, so values can
//! be shared freely across threads.

pub mod error;
pub mod obstruction;
pub mod rfunction;
pub mod semigroup;
pub mod surface;
pub mod surgery;

pub use error::Error;
pub use obstruction::{
    check_algebraic, check_almost_complex, check_genus_feasibility, check_topological,
    derivation_chain_check, run_check, Assumption, CheckRequest, DerivationCheck, Mode, Scan,
    Status, Verdict,
};
pub use rfunction::{
    codim_bound, r_table, r_table_with_witness, r_value, validate_r_table, Configuration, RFinding,
    RTable,
};
pub use semigroup::{
    alexander, build_semigroup, char_sequence_to_generators, delta, seifert_genus, AlexanderPoly,
    CuspDescriptor, SemigroupTable,
};
pub use surface::{DivisorClass, H0Oracle, Preset, SurfaceData, SurfaceFinding, SurfaceKind};
pub use surgery::{
    c1_squared, d_invariant, d_invariant_table, os_bound, spinc_range, DInvariantTable, SpinCIndex,
    SurgeryProblem,
};

/// Shorthand used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SemigroupTable>();
        assert_send_sync::<AlexanderPoly>();
        assert_send_sync::<Configuration>();
        assert_send_sync::<RTable>();
        assert_send_sync::<SurgeryProblem>();
        assert_send_sync::<SurfaceData>();
        assert_send_sync::<CheckRequest>();
        assert_send_sync::<Verdict>();
        assert_send_sync::<Error>();
    }
}
