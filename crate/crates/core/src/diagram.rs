//! The two homological diagram models: six labeled classes on the genus-2
//! fiber, and the second-row classes on the torus obtained by surgery along
//! `a1`. Includes validation, the surgery projection and its standard lift,
//! the invariant `I(V)`, handle-slides over `a1`, and the hypothesis check of
//! the non-triviality theorem.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{
    pair2, pair4, symplectic_reduce, transvect, Int, LatticeError, Sl2, Symplectic, Vec2, Vec4,
};

/// Exponents `k` allowed for a monodromy `t_d^k`.
pub const TWIST_EXPONENTS: [i64; 4] = [-4, -1, 1, 4];

/// Orientation sign `s` of the first-row triple: all three of
/// `a1.b1`, `b1.c1`, `c1.a1` equal `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The monodromy `mu1` of the surgered torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monodromy {
    Identity,
    /// `t_core^exponent`.
    Twist {
        core: Vec2,
        exponent: i64,
    },
}

impl Monodromy {
    pub fn twist(core: Vec2, exponent: i64) -> Self {
        Monodromy::Twist { core, exponent }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Monodromy::Identity)
    }

    /// `k`, or 0 for the identity.
    pub fn exponent(&self) -> i64 {
        match self {
            Monodromy::Identity => 0,
            Monodromy::Twist { exponent, .. } => *exponent,
        }
    }

    pub fn core(&self) -> Option<&Vec2> {
        match self {
            Monodromy::Identity => None,
            Monodromy::Twist { core, .. } => Some(core),
        }
    }

    /// `mu1(x)`.
    pub fn apply(&self, x: &Vec2) -> Vec2 {
        match self {
            Monodromy::Identity => x.clone(),
            Monodromy::Twist { core, exponent } => transvect(core, *exponent, x),
        }
    }

    /// `mu1^{-1}(x)`.
    pub fn apply_inverse(&self, x: &Vec2) -> Vec2 {
        match self {
            Monodromy::Identity => x.clone(),
            Monodromy::Twist { core, exponent } => transvect(core, -exponent, x),
        }
    }

    /// Matrix of `mu1^{-1}`.
    pub fn inverse_matrix(&self) -> Sl2 {
        match self {
            Monodromy::Identity => Sl2::identity(),
            Monodromy::Twist { core, exponent } => Sl2::transvection(core, -exponent),
        }
    }
}

/// Labels of the second-row vanishing cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A2,
    B2,
    C2,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::A2, Label::B2, Label::C2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::A2 => "a2",
            Label::B2 => "b2",
            Label::C2 => "c2",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A single failed diagram invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPrimitiveA1,
    /// Torus class (`a2`, `b2`, `c2` or the twist core `d`) that is not primitive.
    NonPrimitive(&'static str),
    TriplePairingInvalid {
        ab: Int,
        bc: Int,
        ca: Int,
    },
    A2NotDisjoint {
        label: Label,
        pairing: Int,
    },
    BadExponent(i64),
    IdentityCaseViolation {
        first: Label,
        second: Label,
        pairing: Int,
    },
}

impl Violation {
    /// Stable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::NonPrimitiveA1 => "NonPrimitiveA1",
            Violation::NonPrimitive(_) => "NonPrimitive",
            Violation::TriplePairingInvalid { .. } => "TriplePairingInvalid",
            Violation::A2NotDisjoint { .. } => "A2NotDisjoint",
            Violation::BadExponent(_) => "BadExponent",
            Violation::IdentityCaseViolation { .. } => "IdentityCaseViolation",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Violation::NonPrimitiveA1 => write!(f, "a1 is not primitive"),
            Violation::NonPrimitive(name) => write!(f, "{name} is not primitive"),
            Violation::TriplePairingInvalid { ab, bc, ca } => write!(
                f,
                "need a1.b1 = b1.c1 = c1.a1 = +-1, got ({ab}, {bc}, {ca})"
            ),
            Violation::A2NotDisjoint { label, pairing } => {
                write!(f, "pair(a1, {label}) = {pairing}, expected 0")
            }
            Violation::BadExponent(k) => {
                write!(f, "exponent {k} is not one of -4, -1, 1, 4")
            }
            Violation::IdentityCaseViolation {
                first,
                second,
                pairing,
            } => write!(
                f,
                "identity monodromy needs |pair({first}, {second})| = 1, got {pairing}"
            ),
        }
    }
}

/// Every violated invariant of a diagram, in check order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl Violations {
    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.0.iter()
    }

    pub fn contains_code(&self, code: &str) -> bool {
        self.0.iter().any(|v| v.code() == code)
    }
}

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Violations {}

fn into_result(violations: Vec<Violation>) -> Result<(), Violations> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Violations(violations))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("InvalidDiagram: {0}")]
    Invalid(Violations),
    #[error("ExponentCoreMismatch: exponent {exponent} with projected core {core}")]
    ExponentCoreMismatch { exponent: i64, core: Vec2 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl From<Violations> for DiagramError {
    fn from(v: Violations) -> Self {
        DiagramError::Invalid(v)
    }
}

/// `I(V)`: absolute intersections of `b1 + c1` (equivalently of the twist
/// core on the torus) with `a2`, `b2`, `c2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantVector(pub [Int; 3]);

impl InvariantVector {
    pub fn new(i1: impl Into<Int>, i2: impl Into<Int>, i3: impl Into<Int>) -> Self {
        InvariantVector([i1.into(), i2.into(), i3.into()])
    }

    fn from_pairings(p: [Int; 3]) -> Self {
        InvariantVector(p.map(|x| x.abs()))
    }

    /// Cyclic rotation by `n` steps: `(i1, i2, i3) -> (i2, i3, i1)` for `n = 1`.
    pub fn rotated(&self, n: usize) -> Self {
        let mut out = self.0.clone();
        out.rotate_left(n % 3);
        InvariantVector(out)
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Second-row classes on the surgered torus together with the monodromy.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusDiagram {
    pub a2: Vec2,
    pub b2: Vec2,
    pub c2: Vec2,
    pub monodromy: Monodromy,
    pub sign: Sign,
}

impl TorusDiagram {
    pub fn new(a2: Vec2, b2: Vec2, c2: Vec2, monodromy: Monodromy, sign: Sign) -> Self {
        TorusDiagram {
            a2,
            b2,
            c2,
            monodromy,
            sign,
        }
    }

    pub fn class(&self, label: Label) -> &Vec2 {
        match label {
            Label::A2 => &self.a2,
            Label::B2 => &self.b2,
            Label::C2 => &self.c2,
        }
    }

    pub fn class_mut(&mut self, label: Label) -> &mut Vec2 {
        match label {
            Label::A2 => &mut self.a2,
            Label::B2 => &mut self.b2,
            Label::C2 => &mut self.c2,
        }
    }

    pub fn validate(&self) -> Result<(), Violations> {
        let mut out = Vec::new();
        for label in Label::ALL {
            if !self.class(label).is_primitive() {
                out.push(Violation::NonPrimitive(label.name()));
            }
        }
        match &self.monodromy {
            Monodromy::Twist { core, exponent } => {
                if !core.is_primitive() {
                    out.push(Violation::NonPrimitive("d"));
                }
                if !TWIST_EXPONENTS.contains(exponent) {
                    out.push(Violation::BadExponent(*exponent));
                }
            }
            Monodromy::Identity => {
                let pairs = [
                    (Label::A2, Label::B2),
                    (Label::B2, Label::C2),
                    (Label::C2, Label::A2),
                ];
                for (first, second) in pairs {
                    let p = pair2(self.class(first), self.class(second));
                    if !p.abs().is_one() {
                        out.push(Violation::IdentityCaseViolation {
                            first,
                            second,
                            pairing: p,
                        });
                    }
                }
            }
        }
        into_result(out)
    }

    pub(crate) fn check(&self) -> Result<(), DiagramError> {
        Ok(self.validate()?)
    }

    /// Image under a change of basis of the torus lattice.
    pub fn transformed(&self, m: &Sl2) -> TorusDiagram {
        let monodromy = match &self.monodromy {
            Monodromy::Identity => Monodromy::Identity,
            Monodromy::Twist { core, exponent } => Monodromy::Twist {
                core: m.apply(core),
                exponent: *exponent,
            },
        };
        TorusDiagram {
            a2: m.apply(&self.a2),
            b2: m.apply(&self.b2),
            c2: m.apply(&self.c2),
            monodromy,
            sign: self.sign,
        }
    }

    /// `I(V) = (|d.a2|, |d.b2|, |d.c2|)`, zero for identity monodromy.
    pub fn invariant(&self) -> Result<InvariantVector, DiagramError> {
        self.check()?;
        Ok(match self.monodromy.core() {
            None => InvariantVector::new(0, 0, 0),
            Some(d) => InvariantVector::from_pairings(Label::ALL.map(|l| pair2(d, self.class(l)))),
        })
    }

    pub fn theorem_hypotheses(&self) -> Result<TheoremHypotheses, DiagramError> {
        self.check()?;
        let muinv_c2 = self.monodromy.apply_inverse(&self.c2);
        Ok(TheoremHypotheses {
            mu_nontrivial: !self.monodromy.is_identity(),
            b2_c2_not_parallel: !pair2(&self.b2, &self.c2).is_zero(),
            a2_muinv_c2_not_parallel: !pair2(&self.a2, &muinv_c2).is_zero(),
        })
    }
}

/// The three hypotheses under which `V`, `sigma2 V`, `sigma2^2 V` are
/// pairwise inequivalent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremHypotheses {
    pub mu_nontrivial: bool,
    pub b2_c2_not_parallel: bool,
    pub a2_muinv_c2_not_parallel: bool,
}

/// A named hypothesis, used to report the first failing one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    MonodromyNontrivial,
    B2C2NotParallel,
    A2MuInvC2NotParallel,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Phrased as the failure.
        f.write_str(match self {
            Hypothesis::MonodromyNontrivial => "monodromy is identity",
            Hypothesis::B2C2NotParallel => "b2 ∥ c2",
            Hypothesis::A2MuInvC2NotParallel => "a2 ∥ mu1^-1(c2)",
        })
    }
}

impl TheoremHypotheses {
    pub fn all_hold(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<Hypothesis> {
        if !self.mu_nontrivial {
            Some(Hypothesis::MonodromyNontrivial)
        } else if !self.b2_c2_not_parallel {
            Some(Hypothesis::B2C2NotParallel)
        } else if !self.a2_muinv_c2_not_parallel {
            Some(Hypothesis::A2MuInvC2NotParallel)
        } else {
            None
        }
    }
}

/// Six labeled classes on the genus-2 fiber and the monodromy exponent
/// (0 for the identity). The twist core is `a1 + b1 + c1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Genus2Diagram {
    pub a1: Vec4,
    pub b1: Vec4,
    pub c1: Vec4,
    pub a2: Vec4,
    pub b2: Vec4,
    pub c2: Vec4,
    pub exponent: i64,
}

impl Genus2Diagram {
    pub fn class(&self, label: Label) -> &Vec4 {
        match label {
            Label::A2 => &self.a2,
            Label::B2 => &self.b2,
            Label::C2 => &self.c2,
        }
    }

    pub fn class_mut(&mut self, label: Label) -> &mut Vec4 {
        match label {
            Label::A2 => &mut self.a2,
            Label::B2 => &mut self.b2,
            Label::C2 => &mut self.c2,
        }
    }

    /// Lift of the twist core: `a1 + b1 + c1`.
    pub fn core(&self) -> Vec4 {
        &(&self.a1 + &self.b1) + &self.c1
    }

    pub fn b1_plus_c1(&self) -> Vec4 {
        &self.b1 + &self.c1
    }

    /// Common value of the first-row pairings, if they agree and are units.
    pub fn sign(&self) -> Option<Sign> {
        let ab = pair4(&self.a1, &self.b1);
        let bc = pair4(&self.b1, &self.c1);
        let ca = pair4(&self.c1, &self.a1);
        if ab == bc && bc == ca {
            i64::try_from(&ab).ok().and_then(Sign::from_value)
        } else {
            None
        }
    }

    pub fn validate(&self) -> Result<(), Violations> {
        let mut out = Vec::new();
        if !self.a1.is_primitive() {
            out.push(Violation::NonPrimitiveA1);
        }
        if self.sign().is_none() {
            out.push(Violation::TriplePairingInvalid {
                ab: pair4(&self.a1, &self.b1),
                bc: pair4(&self.b1, &self.c1),
                ca: pair4(&self.c1, &self.a1),
            });
        }
        for label in Label::ALL {
            let p = pair4(&self.a1, self.class(label));
            if !p.is_zero() {
                out.push(Violation::A2NotDisjoint { label, pairing: p });
            }
        }
        if self.exponent != 0 && !TWIST_EXPONENTS.contains(&self.exponent) {
            out.push(Violation::BadExponent(self.exponent));
        }
        if self.exponent == 0 {
            // On a1-disjoint classes pair4 equals the pairing of the projections.
            let pairs = [
                (Label::A2, Label::B2),
                (Label::B2, Label::C2),
                (Label::C2, Label::A2),
            ];
            for (first, second) in pairs {
                let p = pair4(self.class(first), self.class(second));
                if !p.abs().is_one() {
                    out.push(Violation::IdentityCaseViolation {
                        first,
                        second,
                        pairing: p,
                    });
                }
            }
        }
        into_result(out)
    }

    pub(crate) fn check(&self) -> Result<(), DiagramError> {
        Ok(self.validate()?)
    }

    /// `I(V) = (|(b1+c1).a2|, |(b1+c1).b2|, |(b1+c1).c2|)`.
    pub fn invariant(&self) -> Result<InvariantVector, DiagramError> {
        self.check()?;
        let bc = self.b1_plus_c1();
        Ok(InvariantVector::from_pairings(
            Label::ALL.map(|l| pair4(&bc, self.class(l))),
        ))
    }

    /// Upper-triangular handle-slide `target -> target + sign * a1`.
    pub fn handle_slide(&self, target: Label, sign: Sign) -> Result<Genus2Diagram, DiagramError> {
        self.check()?;
        let mut out = self.clone();
        let slid = self
            .class(target)
            .add_multiple(&Int::from(sign.value()), &self.a1);
        *out.class_mut(target) = slid;
        Ok(out)
    }

    /// Surgered-torus diagram: second row and core projected through a
    /// symplectic basis adapted to `a1`.
    pub fn surgery_project(&self) -> Result<TorusDiagram, DiagramError> {
        self.check()?;
        let basis = symplectic_reduce(&self.a1)?;
        let project = |w: &Vec4| {
            basis
                .project(w)
                .expect("validated classes are disjoint from a1")
        };
        let core = project(&self.core());
        let monodromy = match (self.exponent, core.is_zero()) {
            (0, true) => Monodromy::Identity,
            (k, false) if k != 0 => Monodromy::Twist { core, exponent: k },
            (k, _) => {
                return Err(DiagramError::ExponentCoreMismatch { exponent: k, core });
            }
        };
        let sign = self.sign().expect("validated sign");
        let torus = TorusDiagram {
            a2: project(&self.a2),
            b2: project(&self.b2),
            c2: project(&self.c2),
            monodromy,
            sign,
        };
        torus.check()?;
        Ok(torus)
    }
}

/// Standard lift: `a1 = alpha1`, `b1 = s beta1`, `c1 = -alpha1 - s beta1 + (0, 0, d)`
/// (so `a1 + b1 + c1 = (0, 0, d)`), second row in the `(alpha2, beta2)` block.
pub fn embed_torus(d: &TorusDiagram) -> Result<Genus2Diagram, DiagramError> {
    d.check()?;
    let zero = Vec2::zero();
    let core = d.monodromy.core().unwrap_or(&zero);
    let s = d.sign.value();
    let lift = |w: &Vec2| Vec4::from_blocks(&zero, w);
    Ok(Genus2Diagram {
        a1: Vec4::new(1, 0, 0, 0),
        b1: Vec4::new(0, s, 0, 0),
        c1: Vec4::from_blocks(&Vec2::new(-1, -s), core),
        a2: lift(&d.a2),
        b2: lift(&d.b2),
        c2: lift(&d.c2),
        exponent: d.monodromy.exponent(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2(x: i64, y: i64) -> Vec2 {
        Vec2::new(x, y)
    }

    fn first_case_q3() -> TorusDiagram {
        TorusDiagram::new(
            v2(1, 0),
            v2(0, 1),
            v2(1, 1),
            Monodromy::twist(v2(-1, 1), 1),
            Sign::Plus,
        )
    }

    fn second_case() -> TorusDiagram {
        TorusDiagram::new(
            v2(1, 0),
            v2(0, 1),
            v2(5, -1),
            Monodromy::twist(v2(-3, 1), 1),
            Sign::Plus,
        )
    }

    fn standard_identity() -> TorusDiagram {
        TorusDiagram::new(
            v2(1, 0),
            v2(0, 1),
            v2(-1, -1),
            Monodromy::Identity,
            Sign::Plus,
        )
    }

    fn first_case_lift() -> Genus2Diagram {
        Genus2Diagram {
            a1: Vec4::new(1, 0, 0, 0),
            b1: Vec4::new(0, 1, 0, 0),
            c1: Vec4::new(-1, -1, -1, 1),
            a2: Vec4::new(0, 0, 1, 0),
            b2: Vec4::new(0, 0, 0, 1),
            c2: Vec4::new(0, 0, 1, 1),
            exponent: 1,
        }
    }

    #[test]
    fn validate_genus2_examples() {
        assert_eq!(first_case_lift().validate(), Ok(()));

        let mut d = first_case_lift();
        d.a2 = Vec4::new(0, 1, 0, 0);
        let err = d.validate().unwrap_err();
        assert!(err.contains_code("A2NotDisjoint"));
        assert!(matches!(
            &err.0[0],
            Violation::A2NotDisjoint { label: Label::A2, pairing } if pairing.is_one()
        ));

        let mut d = first_case_lift();
        d.exponent = 2;
        assert_eq!(
            d.validate(),
            Err(Violations(vec![Violation::BadExponent(2)]))
        );
    }

    #[test]
    fn validate_genus2_reports_every_violation() {
        let d = Genus2Diagram {
            a1: Vec4::new(2, 0, 0, 0),
            b1: Vec4::new(0, 1, 0, 0),
            c1: Vec4::new(0, 0, 1, 0),
            a2: Vec4::new(0, 1, 0, 0),
            b2: Vec4::new(0, 0, 0, 1),
            c2: Vec4::new(0, 0, 1, 1),
            exponent: 3,
        };
        let codes: Vec<_> = d.validate().unwrap_err().iter().map(|v| v.code()).collect();
        assert_eq!(
            codes,
            [
                "NonPrimitiveA1",
                "TriplePairingInvalid",
                "A2NotDisjoint",
                "BadExponent"
            ]
        );
    }

    #[test]
    fn validate_torus_examples() {
        assert_eq!(first_case_q3().validate(), Ok(()));
        assert_eq!(standard_identity().validate(), Ok(()));
        let mut d = first_case_q3();
        d.a2 = v2(2, 0);
        assert_eq!(
            d.validate(),
            Err(Violations(vec![Violation::NonPrimitive("a2")]))
        );
    }

    #[test]
    fn identity_case_needs_unit_pairings() {
        let d = TorusDiagram::new(
            v2(1, 0),
            v2(0, 1),
            v2(1, 2),
            Monodromy::Identity,
            Sign::Plus,
        );
        let err = d.validate().unwrap_err();
        assert_eq!(err.0.len(), 1);
        assert_eq!(err.0[0].code(), "IdentityCaseViolation");
    }

    #[test]
    fn project_first_case_lift() {
        assert_eq!(
            first_case_lift().surgery_project().unwrap(),
            first_case_q3()
        );
        assert_eq!(embed_torus(&first_case_q3()).unwrap(), first_case_lift());
    }

    #[test]
    fn identity_lift_has_zero_core() {
        let g = embed_torus(&standard_identity()).unwrap();
        assert_eq!(g.c1, Vec4::new(-1, -1, 0, 0));
        assert!(g.core().is_zero());
        assert_eq!(g.surgery_project().unwrap().monodromy, Monodromy::Identity);
    }

    #[test]
    fn exponent_core_mismatch() {
        let mut g = embed_torus(&standard_identity()).unwrap();
        g.exponent = 1;
        assert!(matches!(
            g.surgery_project(),
            Err(DiagramError::ExponentCoreMismatch { exponent: 1, .. })
        ));
        let mut g = first_case_lift();
        g.exponent = 0;
        // k = 0 but the second row is not pairwise unit: validation catches it first.
        assert!(g.surgery_project().is_err());
    }

    #[test]
    fn non_standard_surgery_curve() {
        // Swap the two handles: a1 lives in the second block.
        let swap = |w: &Vec4| {
            Vec4([
                w.0[2].clone(),
                w.0[3].clone(),
                w.0[0].clone(),
                w.0[1].clone(),
            ])
        };
        let g = first_case_lift();
        let h = Genus2Diagram {
            a1: swap(&g.a1),
            b1: swap(&g.b1),
            c1: swap(&g.c1),
            a2: swap(&g.a2),
            b2: swap(&g.b2),
            c2: swap(&g.c2),
            exponent: g.exponent,
        };
        assert_eq!(h.a1, Vec4::new(0, 0, 1, 0));
        assert_eq!(h.surgery_project().unwrap(), first_case_q3());
    }

    #[test]
    fn minus_sign_lift_round_trips() {
        let mut t = first_case_q3();
        t.sign = Sign::Minus;
        let g = embed_torus(&t).unwrap();
        assert_eq!(g.sign(), Some(Sign::Minus));
        assert_eq!(g.core(), Vec4::new(0, 0, -1, 1));
        assert_eq!(g.surgery_project().unwrap(), t);
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(
            first_case_q3().invariant().unwrap(),
            InvariantVector::new(1, 1, 2)
        );
        assert_eq!(
            second_case().invariant().unwrap(),
            InvariantVector::new(1, 3, 2)
        );
        assert_eq!(
            standard_identity().invariant().unwrap(),
            InvariantVector::new(0, 0, 0)
        );
        assert_eq!(
            first_case_lift().invariant().unwrap(),
            InvariantVector::new(1, 1, 2)
        );
    }

    #[test]
    fn invariant_rejects_invalid() {
        let mut d = first_case_q3();
        d.monodromy = Monodromy::twist(v2(-1, 1), 2);
        assert!(matches!(d.invariant(), Err(DiagramError::Invalid(_))));
    }

    #[test]
    fn handle_slide_examples() {
        let g = first_case_lift();
        let slid = g.handle_slide(Label::A2, Sign::Plus).unwrap();
        assert_eq!(slid.a2, Vec4::new(1, 0, 1, 0));
        assert_eq!(slid.b2, g.b2);
        assert_eq!(slid.invariant().unwrap(), InvariantVector::new(1, 1, 2));

        let back = slid.handle_slide(Label::A2, Sign::Minus).unwrap();
        assert_eq!(back, g);

        let slid = g.handle_slide(Label::B2, Sign::Minus).unwrap();
        assert_eq!(
            slid.surgery_project().unwrap(),
            g.surgery_project().unwrap()
        );
    }

    #[test]
    fn hypotheses_examples() {
        let h = second_case().theorem_hypotheses().unwrap();
        assert!(h.all_hold());

        let parallel = TorusDiagram::new(
            v2(1, 0),
            v2(0, 1),
            v2(0, 1),
            Monodromy::twist(v2(1, 0), 1),
            Sign::Plus,
        );
        let h = parallel.theorem_hypotheses().unwrap();
        assert!(h.mu_nontrivial);
        assert!(!h.b2_c2_not_parallel);
        assert_eq!(h.first_failure(), Some(Hypothesis::B2C2NotParallel));

        let h = standard_identity().theorem_hypotheses().unwrap();
        assert!(!h.mu_nontrivial);
        assert_eq!(
            h.first_failure().unwrap().to_string(),
            "monodromy is identity"
        );
    }

    #[test]
    fn invariant_rotation() {
        let i = InvariantVector::new(1, 3, 2);
        assert_eq!(i.rotated(1), InvariantVector::new(3, 2, 1));
        assert_eq!(i.rotated(2), InvariantVector::new(2, 1, 3));
        assert_eq!(i.rotated(3), i);
    }
}
