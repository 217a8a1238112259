//! Finite order-theoretic toolkit: closure spaces, resolutions of state
//! sets into property posets, the transition categories they generate,
//! and orthomodular measurement models.
//!
//! Everything is finite and explicit, so every law in sight is decidable:
//! the crate leans on exhaustive small-instance checks rather than proof.
//! The main pieces:
//!
//! * [`poset`] / [`lattice`] — finite posets, complete lattices, Galois
//!   adjoints, and isomorphism search.
//! * [`closure`] — closure spaces as intersection-closed families, with
//!   operator-table validation and the closed-set lattice.
//! * [`resolution`] — monotone assignments from state sets to property
//!   posets, their unique factorization through a closure space,
//!   separation, saturation, and canonicalization.
//! * [`transitions`] — state-level and property-level morphisms, hom-set
//!   enumeration, and the quantaloid law suite.
//! * [`functors`] — the reflection of state transitions onto property
//!   transitions, its Galois dual and lift, and the object-level
//!   translations between the categories, all verified extensionally.
//! * [`ortho`] — ortholattices, Sasaki projections, and the
//!   indeterministic perfect-measurement transition.
//! * [`io`] / [`dot`] / [`cli`] — JSON file formats, Hasse-diagram
//!   export, and the `qkit` command-line tool.
//!
//! Subsets of state universes are bitmask [`subset::Subset`]s; all
//! powerset enumeration is in increasing mask order, so results are
//! deterministic. Every value is immutable after construction and every
//! operation is pure.

pub mod closure;
pub mod cli;
pub mod dot;
pub mod error;
pub mod functors;
pub mod io;
pub mod lattice;
pub mod ortho;
pub mod poset;
pub mod report;
pub mod resolution;
pub mod subset;
pub mod transitions;

pub use closure::{ClosureSpace, PointMap, SpaceMap};
pub use error::{Error, Result};
pub use lattice::{CompleteLattice, LatticeMap};
pub use ortho::Ortholattice;
pub use poset::FinitePoset;
pub use report::Report;
pub use resolution::{Factorization, Resolution};
pub use subset::Subset;
pub use transitions::{HomSet, HomSetKind, PossibleTransition, PropertyTransition};

#[cfg(test)]
mod sync_tests {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable_across_threads() {
        assert_send_sync::<FinitePoset>();
        assert_send_sync::<CompleteLattice>();
        assert_send_sync::<LatticeMap>();
        assert_send_sync::<ClosureSpace>();
        assert_send_sync::<Resolution>();
        assert_send_sync::<PossibleTransition>();
        assert_send_sync::<Ortholattice>();
    }
}
