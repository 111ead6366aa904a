//! Batch analysis over many diagrams or vertical pairs.

use crate::diagram::{InvariantVector, TorusDiagram};
use crate::exec::Execution;
use crate::lattice::{LatticeError, Vec2};
use crate::theorem::{certify, Certificate};
use crate::vertical::{
    classify, lens_from_pair, six_tuple, Equivalence, FamilyMatch, LensSpace, SixTuple,
    VerticalError,
};

/// Everything computed for one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub invariant: InvariantVector,
    pub six_tuple: SixTuple,
    pub family: Option<FamilyMatch>,
    pub certificate: Certificate,
}

pub fn analyze(d: &TorusDiagram, mode: Equivalence) -> Result<DiagramReport, VerticalError> {
    let six = six_tuple(d)?;
    Ok(DiagramReport {
        invariant: d.invariant()?,
        family: classify(&six, mode),
        six_tuple: six,
        certificate: certify(d)?,
    })
}

pub fn analyze_all(
    diagrams: &[TorusDiagram],
    mode: Equivalence,
    exec: Execution,
) -> Vec<Result<DiagramReport, VerticalError>> {
    exec.map(diagrams, |d| analyze(d, mode))
}

pub fn lens_batch(pairs: &[(Vec2, Vec2)], exec: Execution) -> Vec<Result<LensSpace, LatticeError>> {
    exec.map(pairs, |(v, w)| lens_from_pair(v, w))
}
