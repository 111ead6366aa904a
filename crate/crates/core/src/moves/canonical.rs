//! Canonical representatives of torus diagrams up to a change of basis of the
//! torus lattice and independent sign changes of each class, and an exact
//! equivalence test returning a witness.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::diagram::{DiagramError, Monodromy, Sign, TorusDiagram};
use crate::lattice::{pair2, sl2_complete, Int, Sl2, Vec2};

/// Canonical form and the matrix `M` taking the input to it (up to the
/// per-class signs, which are normalised afterwards).
///
/// `a2` is sent to `(1, 0)`; the first of `b2`, `c2`, `d` not parallel to `a2`
/// is then sheared to `(x, y)` with `0 <= x < y`. Every class is finally
/// sign-normalised so its first nonzero coordinate is positive.
pub fn canonical_form(d: &TorusDiagram) -> Result<(TorusDiagram, Sl2), DiagramError> {
    d.check()?;
    let complete = sl2_complete(&d.a2)?;
    let moved = d.transformed(&complete);
    let mut candidates = vec![&moved.b2, &moved.c2];
    if let Some(core) = moved.monodromy.core() {
        candidates.push(core);
    }
    let shear = match candidates.into_iter().find(|w| !w.y.is_zero()) {
        Some(w) => {
            let w = if w.y.is_negative() { -w } else { w.clone() };
            Sl2::upper_shear(-w.x.div_floor(&w.y))
        }
        None => Sl2::identity(),
    };
    let m = shear.compose(&complete);
    let mut out = d.transformed(&m);
    for v in [&mut out.a2, &mut out.b2, &mut out.c2] {
        *v = v.sign_normalized();
    }
    if let Monodromy::Twist { core, .. } = &mut out.monodromy {
        *core = core.sign_normalized();
    }
    Ok((out, m))
}

/// `M` together with the sign taken by each class: `M x = s_x x'` for `x` in
/// `a2, b2, c2` and, with a twist, the core `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub matrix: Sl2,
    pub signs: Vec<Sign>,
}

impl EquivalenceWitness {
    /// Re-checks the witness against both diagrams.
    pub fn verify(&self, from: &TorusDiagram, to: &TorusDiagram) -> bool {
        let (src, dst) = (classes(from), classes(to));
        from.sign == to.sign
            && from.monodromy.exponent() == to.monodromy.exponent()
            && src.len() == dst.len()
            && src.len() == self.signs.len()
            && src.iter().zip(&dst).zip(&self.signs).all(|((s, t), sign)| {
                let image = self.matrix.apply(s);
                match sign {
                    Sign::Plus => &image == *t,
                    Sign::Minus => image == -*t,
                }
            })
    }
}

fn classes(d: &TorusDiagram) -> Vec<&Vec2> {
    let mut out = vec![&d.a2, &d.b2, &d.c2];
    if let Some(core) = d.monodromy.core() {
        out.push(core);
    }
    out
}

/// Matches every source class to `+-` its target under `m`.
fn match_signs(m: &Sl2, src: &[&Vec2], dst: &[&Vec2]) -> Option<Vec<Sign>> {
    src.iter()
        .zip(dst)
        .map(|(s, t)| {
            let image = m.apply(s);
            if &image == *t {
                Some(Sign::Plus)
            } else if image == -*t {
                Some(Sign::Minus)
            } else {
                None
            }
        })
        .collect()
}

/// `M` with `M s1 = t1`, `M s2 = t2` when it is integral with determinant 1.
fn solve_pair(s1: &Vec2, s2: &Vec2, t1: &Vec2, t2: &Vec2) -> Option<Sl2> {
    let det = pair2(s1, s2);
    if det != pair2(t1, t2) {
        return None;
    }
    // M = T * adj(S) / det(S), S = [s1 s2], T = [t1 t2].
    let adj = [[&s2.y, &-&s2.x], [&-&s1.y, &s1.x]];
    let entry = |t_row: [&Int; 2], col: usize| -> Option<Int> {
        let num = t_row[0] * adj[0][col] + t_row[1] * adj[1][col];
        let (q, r) = num.div_rem(&det);
        r.is_zero().then_some(q)
    };
    let row1 = [&t1.x, &t2.x];
    let row2 = [&t1.y, &t2.y];
    let m = Sl2::new(
        entry(row1, 0)?,
        entry(row1, 1)?,
        entry(row2, 0)?,
        entry(row2, 1)?,
    );
    m.ok()
}

/// Exact equivalence test. Diagrams with different orientation sign or
/// exponent are never equivalent.
pub fn equivalent_torus(
    d1: &TorusDiagram,
    d2: &TorusDiagram,
) -> Result<Option<EquivalenceWitness>, DiagramError> {
    d1.check()?;
    d2.check()?;
    if d1.sign != d2.sign || d1.monodromy.exponent() != d2.monodromy.exponent() {
        return Ok(None);
    }
    let (src, dst) = (classes(d1), classes(d2));
    let n = src.len();
    let independent = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| !pair2(src[i], src[j]).is_zero());

    let found = match independent {
        Some((i, j)) => {
            let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
            signs.iter().find_map(|&(si, sj)| {
                let ti = if si > 0 { dst[i].clone() } else { -dst[i] };
                let tj = if sj > 0 { dst[j].clone() } else { -dst[j] };
                let m = solve_pair(src[i], src[j], &ti, &tj)?;
                let signs = match_signs(&m, &src, &dst)?;
                Some(EquivalenceWitness { matrix: m, signs })
            })
        }
        None => {
            // Every class is +-a2; any M with M a2 = a2' works.
            let m = sl2_complete(dst[0])?
                .inverse()
                .compose(&sl2_complete(src[0])?);
            match_signs(&m, &src, &dst).map(|signs| EquivalenceWitness { matrix: m, signs })
        }
    };
    Ok(found)
}
