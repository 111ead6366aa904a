//! The published example diagrams. Every case has `a2 = (1, 0)`,
//! `b2 = (0, 1)` and orientation sign `+1`; `Branch` selects the upper or
//! lower sign of the `+-` in each table row.

use crate::diagram::{Monodromy, Sign, TorusDiagram};
use crate::lattice::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Upper,
    Lower,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Upper, Branch::Lower];

    pub fn value(self) -> i64 {
        match self {
            Branch::Upper => 1,
            Branch::Lower => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Upper => "+",
            Branch::Lower => "-",
        }
    }
}

fn standard(c2: Vec2, core: Vec2, exponent: i64) -> TorusDiagram {
    TorusDiagram::new(
        Vec2::new(1, 0),
        Vec2::new(0, 1),
        c2,
        Monodromy::twist(core, exponent),
        Sign::Plus,
    )
}

/// `c2 = (+-q - 2, +-1)`, `d = (-+1, 1)`, `k = +-1`.
pub fn case_one(q: i64, branch: Branch) -> TorusDiagram {
    let s = branch.value();
    standard(Vec2::new(s * q - 2, s), Vec2::new(-s, 1), s)
}

/// `c2 = (5, -+1)`, `d = (-+r, 1)`, `k = +-1`, for `r` in `{2, 3}`.
pub fn case_two(r: i64, branch: Branch) -> TorusDiagram {
    let s = branch.value();
    standard(Vec2::new(5, -s), Vec2::new(-s * r, 1), s)
}

/// `c2 = (-1 +- 4 eps2, eps2)`, `d = (1, 0)`, `k = +-4`, for `eps2 = +-1`.
pub fn case_three(eps2: i64, branch: Branch) -> TorusDiagram {
    let s = branch.value();
    standard(Vec2::new(-1 + 4 * s * eps2, eps2), Vec2::new(1, 0), 4 * s)
}

/// `c2 = (0, +-1)`, `d = (1, 0)`, `k = +-1`.
pub fn case_four(branch: Branch) -> TorusDiagram {
    let s = branch.value();
    standard(Vec2::new(0, s), Vec2::new(1, 0), s)
}

/// `c2 = (-2, -+1)`, `d = (1, 0)`, `k = +-1`.
pub fn case_five(branch: Branch) -> TorusDiagram {
    let s = branch.value();
    standard(Vec2::new(-2, -s), Vec2::new(1, 0), s)
}

/// Identity monodromy with `c2 = (-1, -1)`.
pub fn identity_case() -> TorusDiagram {
    TorusDiagram::new(
        Vec2::new(1, 0),
        Vec2::new(0, 1),
        Vec2::new(-1, -1),
        Monodromy::Identity,
        Sign::Plus,
    )
}

/// Which table row a grid entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Identity,
    One { q: i64, branch: Branch },
    Two { r: i64, branch: Branch },
    Three { eps2: i64, branch: Branch },
    Four { branch: Branch },
    Five { branch: Branch },
}

impl CaseId {
    pub fn diagram(self) -> TorusDiagram {
        match self {
            CaseId::Identity => identity_case(),
            CaseId::One { q, branch } => case_one(q, branch),
            CaseId::Two { r, branch } => case_two(r, branch),
            CaseId::Three { eps2, branch } => case_three(eps2, branch),
            CaseId::Four { branch } => case_four(branch),
            CaseId::Five { branch } => case_five(branch),
        }
    }
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseId::Identity => write!(f, "identity"),
            CaseId::One { q, branch } => write!(f, "case1[q={q},{}]", branch.symbol()),
            CaseId::Two { r, branch } => write!(f, "case2[r={r},{}]", branch.symbol()),
            CaseId::Three { eps2, branch } => {
                write!(f, "case3[eps2={eps2},{}]", branch.symbol())
            }
            CaseId::Four { branch } => write!(f, "case4[{}]", branch.symbol()),
            CaseId::Five { branch } => write!(f, "case5[{}]", branch.symbol()),
        }
    }
}

/// Every table row, with `q` ranging over `qs` in the first case.
pub fn grid(qs: impl IntoIterator<Item = i64> + Clone) -> Vec<CaseId> {
    let mut out = vec![CaseId::Identity];
    for branch in Branch::BOTH {
        out.extend(qs.clone().into_iter().map(|q| CaseId::One { q, branch }));
        out.extend([2, 3].map(|r| CaseId::Two { r, branch }));
        out.extend([1, -1].map(|eps2| CaseId::Three { eps2, branch }));
        out.push(CaseId::Four { branch });
        out.push(CaseId::Five { branch });
    }
    out
}
