//! Certification that `V`, `sigma2 V` and `sigma2^2 V` are pairwise
//! inequivalent, by two independent routes: the invariant `I` and the exact
//! equivalence test.

use crate::diagram::{DiagramError, Hypothesis, InvariantVector, TheoremHypotheses, TorusDiagram};
use crate::moves::{equivalent_torus, Sigma2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Hypotheses hold and the three diagrams are pairwise inequivalent.
    Certified,
    HypothesisFailed(Hypothesis),
    /// Hypotheses hold but diagrams `first` and `second` were not separated.
    NotSeparated {
        first: usize,
        second: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub hypotheses: TheoremHypotheses,
    /// `V`, `sigma2 V`, `sigma2^2 V`.
    pub diagrams: [TorusDiagram; 3],
    pub invariants: [InvariantVector; 3],
    /// Pairwise distinct invariant vectors.
    pub distinct_invariants: bool,
    /// No pair is equivalent under the exact test.
    pub pairwise_inequivalent: bool,
    pub verdict: Verdict,
}

pub fn certify(d: &TorusDiagram) -> Result<Certificate, DiagramError> {
    let hypotheses = d.theorem_hypotheses()?;
    let s1 = d.sigma2()?;
    let s2 = s1.sigma2()?;
    let diagrams = [d.clone(), s1, s2];
    let invariants = [
        diagrams[0].invariant()?,
        diagrams[1].invariant()?,
        diagrams[2].invariant()?,
    ];
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let distinct_invariants = pairs.iter().all(|&(i, j)| invariants[i] != invariants[j]);
    let mut first_equivalent = None;
    for &(i, j) in &pairs {
        if equivalent_torus(&diagrams[i], &diagrams[j])?.is_some() {
            first_equivalent = Some((i, j));
            break;
        }
    }
    let pairwise_inequivalent = first_equivalent.is_none();
    let verdict = match hypotheses.first_failure() {
        Some(h) => Verdict::HypothesisFailed(h),
        None => match first_equivalent {
            Some((first, second)) => Verdict::NotSeparated { first, second },
            None if !distinct_invariants => {
                let (first, second) = pairs
                    .into_iter()
                    .find(|&(i, j)| invariants[i] == invariants[j])
                    .expect("some pair shares an invariant");
                Verdict::NotSeparated { first, second }
            }
            None => Verdict::Certified,
        },
    };
    Ok(Certificate {
        hypotheses,
        diagrams,
        invariants,
        distinct_invariants,
        pairwise_inequivalent,
        verdict,
    })
}
