//! Reference-path moves and the diagram maps they induce.
//!
//! A Δ1-move rotates the first-row labels and twists the second row along
//! `t_{a1}(b1)`; a Δ2-move permutes the second row and applies `mu1^{-1}` to
//! the incoming `b2`. Words over the four generators are applied left to
//! right.

mod canonical;
mod orbit;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{DiagramError, Genus2Diagram, TorusDiagram};
use crate::lattice::{transvect, Sl2, Vec4};

pub use canonical::{canonical_form, equivalent_torus, EquivalenceWitness};
pub use orbit::{orbit, orbit_genus2, OrbitEdge, OrbitGraph, OrbitNode};

/// One generator of the move group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    D1,
    D1Inv,
    D2,
    D2Inv,
}

impl Move {
    pub fn inverse(self) -> Move {
        match self {
            Move::D1 => Move::D1Inv,
            Move::D1Inv => Move::D1,
            Move::D2 => Move::D2Inv,
            Move::D2Inv => Move::D2,
        }
    }

    pub fn is_delta1(self) -> bool {
        matches!(self, Move::D1 | Move::D1Inv)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::D1 => "D1",
            Move::D1Inv => "D1'",
            Move::D2 => "D2",
            Move::D2Inv => "D2'",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid move token {0:?} (expected D1, D1', D2 or D2')")]
pub struct WordParseError(pub String);

impl FromStr for Move {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "D1" => Ok(Move::D1),
            "D1'" => Ok(Move::D1Inv),
            "D2" => Ok(Move::D2),
            "D2'" => Ok(Move::D2Inv),
            other => Err(WordParseError(other.to_string())),
        }
    }
}

/// A word over `{D1, D1', D2, D2'}`. No relations are imposed beyond free
/// reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MoveWord(pub Vec<Move>);

impl MoveWord {
    pub fn new(moves: Vec<Move>) -> Self {
        MoveWord(moves)
    }

    /// The rotation of the target disk, realised as three Δ1-moves.
    pub fn rotation() -> Self {
        MoveWord(vec![Move::D1; 3])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> MoveWord {
        let mut out: Vec<Move> = Vec::with_capacity(self.0.len());
        for &m in &self.0 {
            if out.last() == Some(&m.inverse()) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        MoveWord(out)
    }

    pub fn inverse(&self) -> MoveWord {
        MoveWord(self.0.iter().rev().map(|m| m.inverse()).collect())
    }

    pub fn contains_delta1(&self) -> bool {
        self.0.iter().any(|m| m.is_delta1())
    }
}

impl fmt::Display for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveWord {
    type Err = WordParseError;

    /// Comma-separated tokens; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(MoveWord::default());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map(MoveWord)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("sigma1 requires genus2 model")]
    Sigma1RequiresGenus2,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// `sigma1`: labels rotate `(a1, b1, c1) <- (b1, c1, a1)` and the second row
/// is twisted along `t_{a1}(b1)`.
pub fn apply_sigma1(d: &Genus2Diagram) -> Result<Genus2Diagram, DiagramError> {
    d.check()?;
    let core = transvect(&d.a1, 1, &d.b1);
    let twist = |w: &Vec4| transvect(&core, 1, w);
    Ok(Genus2Diagram {
        a1: d.b1.clone(),
        b1: d.c1.clone(),
        c1: d.a1.clone(),
        a2: twist(&d.a2),
        b2: twist(&d.b2),
        c2: twist(&d.c2),
        exponent: d.exponent,
    })
}

/// Exact inverse of [`apply_sigma1`].
pub fn apply_sigma1_inverse(d: &Genus2Diagram) -> Result<Genus2Diagram, DiagramError> {
    d.check()?;
    let (a1, b1, c1) = (&d.c1, &d.a1, &d.b1);
    let core = transvect(a1, 1, b1);
    let untwist = |w: &Vec4| transvect(&core, -1, w);
    Ok(Genus2Diagram {
        a1: a1.clone(),
        b1: b1.clone(),
        c1: c1.clone(),
        a2: untwist(&d.a2),
        b2: untwist(&d.b2),
        c2: untwist(&d.c2),
        exponent: d.exponent,
    })
}

/// The Δ2-move action, available on both diagram models.
pub trait Sigma2: Sized {
    /// `(a2, b2, c2) <- (b2, mu1^{-1}(c2), a2)`.
    fn sigma2(&self) -> Result<Self, DiagramError>;

    /// `(a2, b2, c2) <- (c2, a2, mu1(b2))`.
    fn sigma2_inverse(&self) -> Result<Self, DiagramError>;
}

impl Sigma2 for TorusDiagram {
    fn sigma2(&self) -> Result<Self, DiagramError> {
        self.check()?;
        Ok(TorusDiagram {
            a2: self.b2.clone(),
            b2: self.monodromy.apply_inverse(&self.c2),
            c2: self.a2.clone(),
            ..self.clone()
        })
    }

    fn sigma2_inverse(&self) -> Result<Self, DiagramError> {
        self.check()?;
        Ok(TorusDiagram {
            a2: self.c2.clone(),
            b2: self.a2.clone(),
            c2: self.monodromy.apply(&self.b2),
            ..self.clone()
        })
    }
}

impl Sigma2 for Genus2Diagram {
    fn sigma2(&self) -> Result<Self, DiagramError> {
        self.check()?;
        let core = self.core();
        Ok(Genus2Diagram {
            a2: self.b2.clone(),
            b2: transvect(&core, -self.exponent, &self.c2),
            c2: self.a2.clone(),
            ..self.clone()
        })
    }

    fn sigma2_inverse(&self) -> Result<Self, DiagramError> {
        self.check()?;
        let core = self.core();
        Ok(Genus2Diagram {
            a2: self.c2.clone(),
            b2: self.a2.clone(),
            c2: transvect(&core, self.exponent, &self.b2),
            ..self.clone()
        })
    }
}

pub fn apply_sigma2<D: Sigma2>(d: &D) -> Result<D, DiagramError> {
    d.sigma2()
}

/// Matrix `W` of `mu1^{-1}` with `sigma2^3(D) = W . D` entrywise.
pub fn sigma2_cubed_witness(d: &TorusDiagram) -> Result<Sl2, DiagramError> {
    d.check()?;
    Ok(d.monodromy.inverse_matrix())
}

fn apply_move_genus2(d: &Genus2Diagram, m: Move) -> Result<Genus2Diagram, DiagramError> {
    match m {
        Move::D1 => apply_sigma1(d),
        Move::D1Inv => apply_sigma1_inverse(d),
        Move::D2 => d.sigma2(),
        Move::D2Inv => d.sigma2_inverse(),
    }
}

fn apply_move_torus(d: &TorusDiagram, m: Move) -> Result<TorusDiagram, MoveError> {
    match m {
        Move::D1 | Move::D1Inv => Err(MoveError::Sigma1RequiresGenus2),
        Move::D2 => Ok(d.sigma2()?),
        Move::D2Inv => Ok(d.sigma2_inverse()?),
    }
}

/// Applies `w` left to right to a genus-2 diagram.
pub fn word_to_diagram(d: &Genus2Diagram, w: &MoveWord) -> Result<Genus2Diagram, DiagramError> {
    d.check()?;
    w.0.iter()
        .try_fold(d.clone(), |acc, &m| apply_move_genus2(&acc, m))
}

/// Applies a Δ2-only word to a torus diagram.
pub fn word_to_torus(d: &TorusDiagram, w: &MoveWord) -> Result<TorusDiagram, MoveError> {
    if w.contains_delta1() {
        return Err(MoveError::Sigma1RequiresGenus2);
    }
    d.check()?;
    w.0.iter()
        .try_fold(d.clone(), |acc, &m| apply_move_torus(&acc, m))
}
