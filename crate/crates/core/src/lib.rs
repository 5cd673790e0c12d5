//! A toolkit for finite Moufang loops given by explicit multiplication tables.
//!
//! The crate has two halves. The first is an axiom ladder for finite
//! groupoids: Latin-square and unit checks, the inverse property, the
//! flexible law, the Moufang identity and associativity, all verified
//! exhaustively with minimal counterexample witnesses ([`axioms`]).
//!
//! The second is the translation-triple machinery ([`triality`]): every
//! Moufang loop induces three maps `S`, `T`, `P` from its elements into a
//! permutation group, and conversely a triple of such maps satisfying four
//! hypotheses determines the loop completely. [`triality::extract_triple`]
//! produces the triple of a table, [`triality::verify_hypotheses`] checks
//! the four hypotheses, [`triality::reconstruct_multiplication`] rebuilds
//! the table from a bare triple, and [`triality::run_proposition_suite`]
//! machine-checks every consequence (unit and inverse construction, unique
//! solvability, the antiautomorphism of inversion, flexibility, triple
//! closure and the Moufang identity itself).
//!
//! [`fixtures`] provides deterministic generators for test corpora: cyclic
//! groups, the symmetric group on three points, Chein doubles and seeded
//! random loops.

pub mod axioms;
pub mod fixtures;
pub mod magma;
pub mod perm;
pub mod triality;

pub use axioms::{classify, AxiomError, Classification, StructureClass};
pub use fixtures::FixtureError;
pub use magma::{Axis, CayleyTable, CheckReport, MagmaError, Witness};
pub use perm::{Perm, PermError};
pub use triality::{
    BarMap, HypothesisReport, MoufangCertificate, Side, TranslationTriple, TrialityError,
};
