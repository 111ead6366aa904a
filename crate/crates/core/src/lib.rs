//! Homological trisection diagrams of genus-2 Lefschetz fibrations over the
//! disk with two critical values.
//!
//! A diagram is modelled either on the genus-2 lattice `Z^4` ([`Genus2Diagram`])
//! or, after surgery along `a1`, on the torus lattice `Z^2` ([`TorusDiagram`]).
//! The crate computes the invariant `I(V)`, the reference-path moves, exact
//! equivalence and orbits, and the lens spaces of vertical pairs.

pub mod cases;
pub mod diagram;
pub mod exec;
pub mod lattice;
pub mod moves;
pub mod sweep;
pub mod theorem;
pub mod vertical;

pub use diagram::{
    embed_torus, DiagramError, Genus2Diagram, Hypothesis, InvariantVector, Label, Monodromy, Sign,
    TheoremHypotheses, TorusDiagram, Violation, Violations,
};
pub use exec::Execution;
pub use lattice::{pair2, pair4, sl2_complete, symplectic_reduce, transvect, Int, Sl2, Vec2, Vec4};
pub use moves::{Move, MoveWord, Sigma2};
pub use vertical::{
    classify, lens_equiv, lens_from_pair, six_tuple, Equivalence, LensSpace, SixTuple,
};
