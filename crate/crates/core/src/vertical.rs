//! Lens spaces of vertical pairs and the six-tuple of a torus diagram, with
//! matching against the five families of genus-2 diagrams of the form
//! `(a2, b2, c2) = ((1, 0), (0, 1), c2)` up to rotation and reflection.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::diagram::{DiagramError, TorusDiagram};
use crate::lattice::{mod_inverse, pair2, sl2_complete, Int, LatticeError, Symplectic, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerticalError {
    #[error("NotCoprime: L({p},{q}) needs gcd(p, q) = 1")]
    NotCoprime { p: Int, q: Int },
    #[error("UnknownFamily: {0} is not in 1..=5")]
    UnknownFamily(u8),
    #[error("MissingParameter: family {0} needs {1}")]
    MissingParameter(u8, &'static str),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A lens space, normalised so that `p >= 2` and `0 < q < p` for proper lens
/// spaces, with `L(1, q) = S3` and `L(0, +-1) = S1xS2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LensSpace {
    S3,
    S1xS2,
    Lens { p: Int, q: Int },
}

impl LensSpace {
    pub fn from_pq(p: impl Into<Int>, q: impl Into<Int>) -> Result<Self, VerticalError> {
        let (p, q) = (p.into(), q.into());
        if !p.gcd(&q).is_one() {
            return Err(VerticalError::NotCoprime { p, q });
        }
        if p.is_zero() {
            return Ok(LensSpace::S1xS2);
        }
        if p.abs().is_one() {
            return Ok(LensSpace::S3);
        }
        let (p, q) = if p.is_negative() { (-p, -q) } else { (p, q) };
        let q = q.mod_floor(&p);
        Ok(LensSpace::Lens { p, q })
    }

    /// Orientation reversal: `L(p, q) -> L(p, p - q)`.
    pub fn mirror(&self) -> LensSpace {
        match self {
            LensSpace::Lens { p, q } => LensSpace::Lens {
                p: p.clone(),
                q: p - q,
            },
            other => other.clone(),
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LensSpace::S3 => f.write_str("S3"),
            LensSpace::S1xS2 => f.write_str("S1xS2"),
            LensSpace::Lens { p, q } => write!(f, "L({p},{q})"),
        }
    }
}

/// Homeomorphism type of the closed manifold of a vertical pair `(v, w)`.
///
/// With `p = |v.w|`: `p = 0` gives `S1xS2`, `p = 1` gives `S3`, otherwise
/// `L(p, m mod p)` where `(m, n) = M w` for the unimodular completion `M` of `v`.
pub fn lens_from_pair(v: &Vec2, w: &Vec2) -> Result<LensSpace, LatticeError> {
    for x in [v, w] {
        if !x.is_primitive() {
            return Err(if x.is_zero() {
                LatticeError::ZeroVector
            } else {
                LatticeError::NonPrimitive(x.to_string())
            });
        }
    }
    let p = pair2(v, w).abs();
    if p.is_zero() {
        return Ok(LensSpace::S1xS2);
    }
    if p.is_one() {
        return Ok(LensSpace::S3);
    }
    let m = sl2_complete(v)?.apply(w).x;
    let q = m.mod_floor(&p);
    Ok(LensSpace::Lens { p, q })
}

/// Which homeomorphisms count when comparing lens spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Equivalence {
    /// Any homeomorphism: `q' = +-q^{+-1} mod p`.
    #[default]
    Unoriented,
    /// Orientation-preserving only: `q' = q^{+-1} mod p`.
    Oriented,
}

pub fn lens_equiv(l1: &LensSpace, l2: &LensSpace, mode: Equivalence) -> bool {
    match (l1, l2) {
        (LensSpace::Lens { p, q }, LensSpace::Lens { p: p2, q: q2 }) => {
            if p != p2 {
                return false;
            }
            let inv = mod_inverse(q, p);
            let mut options = vec![q.clone(), inv];
            if mode == Equivalence::Unoriented {
                let negs: Vec<Int> = options.iter().map(|x| (-x).mod_floor(p)).collect();
                options.extend(negs);
            }
            let target = q2.mod_floor(p);
            options.iter().any(|x| x.mod_floor(p) == target)
        }
        (a, b) => a == b,
    }
}

/// The six manifolds `(V_aa, V_bb, V_cc; V_ba, V_cb, V_ac)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SixTuple {
    pub aa: LensSpace,
    pub bb: LensSpace,
    pub cc: LensSpace,
    pub ba: LensSpace,
    pub cb: LensSpace,
    pub ac: LensSpace,
}

impl SixTuple {
    /// Entries in the order `aa, bb, cc, ba, cb, ac`.
    pub fn entries(&self) -> [&LensSpace; 6] {
        [&self.aa, &self.bb, &self.cc, &self.ba, &self.cb, &self.ac]
    }

    pub fn from_entries(e: [LensSpace; 6]) -> Self {
        let [aa, bb, cc, ba, cb, ac] = e;
        SixTuple {
            aa,
            bb,
            cc,
            ba,
            cb,
            ac,
        }
    }

    /// Entrywise equivalence.
    pub fn equivalent(&self, other: &SixTuple, mode: Equivalence) -> bool {
        self.entries()
            .iter()
            .zip(other.entries())
            .all(|(a, b)| lens_equiv(a, b, mode))
    }

    /// Rotation of the target disk: `(cc, aa, bb; ac, ba, cb)`.
    pub fn rotate(&self) -> SixTuple {
        SixTuple {
            aa: self.cc.clone(),
            bb: self.aa.clone(),
            cc: self.bb.clone(),
            ba: self.ac.clone(),
            cb: self.ba.clone(),
            ac: self.cb.clone(),
        }
    }

    /// Reflection: swaps the roles of `b` and `c` and mirrors every entry.
    pub fn reflect(&self) -> SixTuple {
        SixTuple {
            aa: self.aa.mirror(),
            bb: self.cc.mirror(),
            cc: self.bb.mirror(),
            ba: self.ac.mirror(),
            cb: self.cb.mirror(),
            ac: self.ba.mirror(),
        }
    }
}

impl fmt::Display for SixTuple {
    /// Two aligned rows: `aa bb cc` over `ba cb ac`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries().iter().map(|l| l.to_string()).collect();
        let widths: Vec<usize> = (0..3)
            .map(|c| cells[c].len().max(cells[c + 3].len()))
            .collect();
        for row in 0..2 {
            let line: Vec<String> = (0..3)
                .map(|c| format!("{:<w$}", cells[row * 3 + c], w = widths[c]))
                .collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}

/// Six-tuple of a torus diagram, with `mu_hat = mu1^{-1}`:
/// `V_aa = (a2, mu_hat a2)`, `V_bb = (b2, mu_hat b2)`, `V_cc = (c2, mu_hat c2)`,
/// `V_ba = (b2, mu_hat a2)`, `V_cb = (c2, b2)`, `V_ac = (a2, mu_hat c2)`.
pub fn six_tuple(d: &TorusDiagram) -> Result<SixTuple, VerticalError> {
    d.validate().map_err(DiagramError::from)?;
    let hat = |v: &Vec2| d.monodromy.apply_inverse(v);
    Ok(SixTuple {
        aa: lens_from_pair(&d.a2, &hat(&d.a2))?,
        bb: lens_from_pair(&d.b2, &hat(&d.b2))?,
        cc: lens_from_pair(&d.c2, &hat(&d.c2))?,
        ba: lens_from_pair(&d.b2, &hat(&d.a2))?,
        cb: lens_from_pair(&d.c2, &d.b2)?,
        ac: lens_from_pair(&d.a2, &hat(&d.c2))?,
    })
}

/// The reference six-tuple of family `family` at parameters `q`, `epsilon`.
pub fn family_tuple(family: u8, q: Option<&Int>, epsilon: i64) -> Result<SixTuple, VerticalError> {
    let e = Int::from(epsilon);
    let s3 = || LensSpace::S3;
    let s1s2 = || LensSpace::S1xS2;
    let t = match family {
        1 => [s1s2(), s1s2(), s1s2(), s3(), s3(), s3()],
        2 => {
            let q = q.ok_or(VerticalError::MissingParameter(2, "q"))?;
            let qm1 = q - Int::one();
            [
                s3(),
                s3(),
                LensSpace::from_pq(&qm1 * &qm1, &e * q)?,
                s1s2(),
                LensSpace::from_pq(q - Int::from(2), e.clone())?,
                LensSpace::from_pq(q.clone(), -&e)?,
            ]
        }
        3 => [
            s3(),
            LensSpace::from_pq(9, 2 * epsilon)?,
            LensSpace::from_pq(4, epsilon)?,
            LensSpace::from_pq(2, 1)?,
            LensSpace::from_pq(5, epsilon)?,
            s3(),
        ],
        4 => [
            s1s2(),
            LensSpace::from_pq(4, 1)?,
            LensSpace::from_pq(4, 1)?,
            s3(),
            LensSpace::from_pq(4 + epsilon, 1)?,
            s3(),
        ],
        5 => [
            s1s2(),
            s3(),
            s3(),
            s3(),
            LensSpace::from_pq(1 + epsilon, 1)?,
            s3(),
        ],
        other => return Err(VerticalError::UnknownFamily(other)),
    };
    Ok(SixTuple::from_entries(t))
}

/// A successful family match. The symmetry used is the image
/// `rotate^rotations(reflect^reflected(T))` that equals the family tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMatch {
    pub family: u8,
    pub q: Option<Int>,
    /// `None` for family 1.
    pub epsilon: Option<i64>,
    /// False when both signs of `epsilon` match; `epsilon` is then reported as +1.
    pub epsilon_determined: bool,
    pub reflected: bool,
    pub rotations: u8,
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {}", self.family)?;
        if let Some(q) = &self.q {
            write!(f, ", q={q}")?;
        }
        if let Some(e) = self.epsilon {
            write!(f, ", ε={}{}", if e > 0 { "+" } else { "-" }, e.abs())?;
        }
        Ok(())
    }
}

/// The six symmetry images of `t`, identity first.
pub fn symmetry_images(t: &SixTuple) -> Vec<(bool, u8, SixTuple)> {
    let mut out = Vec::with_capacity(6);
    for reflected in [false, true] {
        let mut image = if reflected { t.reflect() } else { t.clone() };
        for r in 0..3u8 {
            out.push((reflected, r, image.clone()));
            image = image.rotate();
        }
    }
    out
}

fn family2_candidates(ac: &LensSpace) -> Vec<Int> {
    let qs = match ac {
        LensSpace::S1xS2 => vec![Int::zero()],
        LensSpace::S3 => vec![Int::from(-1)],
        LensSpace::Lens { p, .. } => vec![p.clone(), -p],
    };
    qs.into_iter().filter(|q| !q.is_one()).collect()
}

/// First family (in order 1..=5) and symmetry image matching `t`.
pub fn classify(t: &SixTuple, mode: Equivalence) -> Option<FamilyMatch> {
    let images = symmetry_images(t);
    for family in 1..=5u8 {
        for (reflected, rotations, image) in &images {
            let params: Vec<Option<Int>> = if family == 2 {
                family2_candidates(&image.ac)
                    .into_iter()
                    .map(Some)
                    .collect()
            } else {
                vec![None]
            };
            for q in params {
                let matches: Vec<i64> = [1i64, -1]
                    .into_iter()
                    .filter(|&e| {
                        family_tuple(family, q.as_ref(), e)
                            .is_ok_and(|expected| image.equivalent(&expected, mode))
                    })
                    .collect();
                if matches.is_empty() {
                    continue;
                }
                let (epsilon, determined) = match (family, matches.as_slice()) {
                    (1, _) => (None, true),
                    (_, [e]) => (Some(*e), true),
                    _ => (Some(1), false),
                };
                return Some(FamilyMatch {
                    family,
                    q,
                    epsilon,
                    epsilon_determined: determined,
                    reflected: *reflected,
                    rotations: *rotations,
                });
            }
        }
    }
    None
}
