//! Integer homology lattices: the rank-2 lattice of the surgered torus and the
//! rank-4 symplectic lattice of the genus-2 fiber.
//!
//! Every entry is a [`BigInt`], so no operation here can overflow. The
//! intersection pairing on the torus is the determinant
//! `pair2(v, w) = v.x * w.y - v.y * w.x`, and the genus-2 pairing is the sum of
//! the two 2x2 blocks in the symplectic basis `(alpha1, beta1, alpha2, beta2)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Integer type used for every homology coordinate.
pub type Int = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("NonPrimitive: {0} is not a primitive class")]
    NonPrimitive(String),
    #[error("ZeroVector: the zero class has no unimodular completion")]
    ZeroVector,
    #[error("NotUnimodular: determinant is {0}, expected 1")]
    NotUnimodular(Int),
}

/// Shared behaviour of the two lattices.
pub trait Symplectic: Clone + PartialEq + fmt::Display {
    /// Algebraic intersection number.
    fn pair(&self, other: &Self) -> Int;

    /// `self + k * other`.
    fn add_multiple(&self, k: &Int, other: &Self) -> Self;

    /// Non-negative gcd of the coordinates (zero for the zero class).
    fn content(&self) -> Int;

    fn is_zero(&self) -> bool {
        self.content().is_zero()
    }

    fn is_primitive(&self) -> bool {
        self.content().is_one()
    }
}

/// Power of the Dehn-twist transvection along `core`:
/// `x + k * pair(core, x) * core`.
///
/// With `k = 1` this is the right-handed twist `t_c(x) = x - (x . c) c`.
pub fn transvect<V: Symplectic>(core: &V, k: i64, x: &V) -> V {
    let coeff = core.pair(x) * k;
    x.add_multiple(&coeff, core)
}

/// A homology class on the torus in a fixed ordered basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vec2 {
    pub x: Int,
    pub y: Int,
}

impl Vec2 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Flips the sign so that the first nonzero coordinate is positive.
    pub fn sign_normalized(&self) -> Self {
        if self.x.is_negative() || (self.x.is_zero() && self.y.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Symplectic for Vec2 {
    fn pair(&self, other: &Self) -> Int {
        pair2(self, other)
    }

    fn add_multiple(&self, k: &Int, other: &Self) -> Self {
        Vec2 {
            x: &self.x + k * &other.x,
            y: &self.y + k * &other.y,
        }
    }

    fn content(&self) -> Int {
        self.x.gcd(&self.y)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2 {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        -&self
    }
}

impl Add for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

/// A homology class on the genus-2 fiber, in coordinates `(x1, y1, x2, y2)`
/// with respect to a symplectic basis `(alpha1, beta1, alpha2, beta2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vec4(pub [Int; 4]);

impl Vec4 {
    pub fn new(
        x1: impl Into<Int>,
        y1: impl Into<Int>,
        x2: impl Into<Int>,
        y2: impl Into<Int>,
    ) -> Self {
        Vec4([x1.into(), y1.into(), x2.into(), y2.into()])
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Standard basis vector `e_i`, `i` in `0..4`.
    pub fn unit(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = Int::one();
        v
    }

    pub fn from_blocks(first: &Vec2, second: &Vec2) -> Self {
        Vec4([
            first.x.clone(),
            first.y.clone(),
            second.x.clone(),
            second.y.clone(),
        ])
    }

    pub fn first_block(&self) -> Vec2 {
        Vec2::new(self.0[0].clone(), self.0[1].clone())
    }

    pub fn second_block(&self) -> Vec2 {
        Vec2::new(self.0[2].clone(), self.0[3].clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Int, &Int) -> Int) -> Self {
        Vec4(std::array::from_fn(|i| f(&self.0[i], &other.0[i])))
    }
}

impl fmt::Display for Vec4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl Symplectic for Vec4 {
    fn pair(&self, other: &Self) -> Int {
        pair4(self, other)
    }

    fn add_multiple(&self, k: &Int, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + k * b)
    }

    fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, c| g.gcd(c))
    }
}

impl Neg for &Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        Vec4(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        -&self
    }
}

impl Add for &Vec4 {
    type Output = Vec4;
    fn add(self, rhs: &Vec4) -> Vec4 {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Vec4 {
    type Output = Vec4;
    fn sub(self, rhs: &Vec4) -> Vec4 {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Intersection pairing on the torus.
pub fn pair2(v: &Vec2, w: &Vec2) -> Int {
    &v.x * &w.y - &v.y * &w.x
}

/// Symplectic form on the genus-2 lattice.
pub fn pair4(v: &Vec4, w: &Vec4) -> Int {
    let [a1, b1, a2, b2] = &v.0;
    let [c1, d1, c2, d2] = &w.0;
    a1 * d1 - b1 * c1 + a2 * d2 - b2 * c2
}

/// A 2x2 integer matrix of determinant one, rows `(a, b)` and `(c, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2 {
    a: Int,
    b: Int,
    c: Int,
    d: Int,
}

impl Sl2 {
    pub fn new(
        a: impl Into<Int>,
        b: impl Into<Int>,
        c: impl Into<Int>,
        d: impl Into<Int>,
    ) -> Result<Self, LatticeError> {
        let m = Sl2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.determinant();
        if det.is_one() {
            Ok(m)
        } else {
            Err(LatticeError::NotUnimodular(det))
        }
    }

    pub fn identity() -> Self {
        Sl2 {
            a: Int::one(),
            b: Int::zero(),
            c: Int::zero(),
            d: Int::one(),
        }
    }

    /// `(x, y) -> (x + t y, y)`.
    pub fn upper_shear(t: impl Into<Int>) -> Self {
        Sl2 {
            b: t.into(),
            ..Self::identity()
        }
    }

    /// Matrix of `transvect(core, k, .)`.
    pub fn transvection(core: &Vec2, k: i64) -> Self {
        let e1 = transvect(core, k, &Vec2::new(1, 0));
        let e2 = transvect(core, k, &Vec2::new(0, 1));
        Sl2 {
            a: e1.x,
            b: e2.x,
            c: e1.y,
            d: e2.y,
        }
    }

    /// Builds the matrix whose columns are `col1` and `col2`.
    pub fn from_columns(col1: &Vec2, col2: &Vec2) -> Result<Self, LatticeError> {
        Self::new(
            col1.x.clone(),
            col2.x.clone(),
            col1.y.clone(),
            col2.y.clone(),
        )
    }

    pub fn rows(&self) -> [[&Int; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    pub fn determinant(&self) -> Int {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.a * &v.x + &self.b * &v.y,
            y: &self.c * &v.x + &self.d * &v.y,
        }
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Sl2) -> Sl2 {
        Sl2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn inverse(&self) -> Sl2 {
        Sl2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}, {}), ({}, {}))", self.a, self.b, self.c, self.d)
    }
}

/// Unimodular completion of a primitive torus class.
///
/// Returns `M` with `M v = (1, 0)` and `det M = 1`. The second row is forced
/// to be `(-y, x)`; the first row `(s, t)` solves `s x + t y = 1` and is
/// reduced so that `0 <= s < |y|` (for `y = 0`, `s = x` and `t = 0`).
pub fn sl2_complete(v: &Vec2) -> Result<Sl2, LatticeError> {
    let content = v.content();
    if content.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    if !content.is_one() {
        return Err(LatticeError::NonPrimitive(v.to_string()));
    }
    let (x, y) = (&v.x, &v.y);
    let (s, t) = if y.is_zero() {
        (x.clone(), Int::zero())
    } else {
        let m = y.abs();
        let s = mod_inverse(&x.mod_floor(&m), &m);
        let t = (Int::one() - &s * x) / y;
        (s, t)
    };
    Ok(Sl2 {
        a: s,
        b: t,
        c: -y,
        d: x.clone(),
    })
}

/// Inverse of `a` modulo `m > 0`, in `[0, m)`; assumes `gcd(a, m) = 1`.
pub(crate) fn mod_inverse(a: &Int, m: &Int) -> Int {
    if m.is_one() {
        return Int::zero();
    }
    let eg = a.extended_gcd(m);
    let inv = if eg.gcd.is_negative() { -eg.x } else { eg.x };
    inv.mod_floor(m)
}

/// A symplectic basis `(alpha1, beta1, alpha2, beta2)` of the genus-2 lattice
/// adapted to a surgery curve `alpha1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub alpha1: Vec4,
    pub beta1: Vec4,
    pub alpha2: Vec4,
    pub beta2: Vec4,
}

impl SymplecticBasis {
    pub fn standard() -> Self {
        SymplecticBasis {
            alpha1: Vec4::unit(0),
            beta1: Vec4::unit(1),
            alpha2: Vec4::unit(2),
            beta2: Vec4::unit(3),
        }
    }

    pub fn vectors(&self) -> [&Vec4; 4] {
        [&self.alpha1, &self.beta1, &self.alpha2, &self.beta2]
    }

    /// Checks the full symplectic Gram identities.
    pub fn is_symplectic(&self) -> bool {
        let v = self.vectors();
        let expected = |i: usize, j: usize| -> i64 {
            match (i, j) {
                (0, 1) | (2, 3) => 1,
                (1, 0) | (3, 2) => -1,
                _ => 0,
            }
        };
        (0..4).all(|i| (0..4).all(|j| pair4(v[i], v[j]) == Int::from(expected(i, j))))
    }

    /// Class on the surgered torus of a curve disjoint from `alpha1`.
    ///
    /// Returns `None` when `pair4(alpha1, w) != 0`.
    pub fn project(&self, w: &Vec4) -> Option<Vec2> {
        if !pair4(&self.alpha1, w).is_zero() {
            return None;
        }
        Some(Vec2 {
            x: pair4(w, &self.beta2),
            y: pair4(&self.alpha2, w),
        })
    }

    /// The lift `x alpha2 + y beta2` of a torus class.
    pub fn lift(&self, v: &Vec2) -> Vec4 {
        Vec4::zero()
            .add_multiple(&v.x, &self.alpha2)
            .add_multiple(&v.y, &self.beta2)
    }
}

/// Symplectic basis with `alpha1 = a`, presenting `a^perp / <a>` as the
/// span of `(alpha2, beta2)`.
///
/// The dual `beta1` comes from a Bezout combination of the functional
/// `pair4(a, .)`; the complement basis is the Hermite row basis of the
/// projection of the standard basis onto `<a, beta1>^perp`.
pub fn symplectic_reduce(a: &Vec4) -> Result<SymplecticBasis, LatticeError> {
    if !a.is_primitive() {
        return Err(LatticeError::NonPrimitive(a.to_string()));
    }
    let [x1, y1, x2, y2] = &a.0;
    // pair4(a, w) = functional . w
    let functional = [-y1, x1.clone(), -y2, x2.clone()];
    let beta1 = Vec4(bezout_vector(&functional));
    debug_assert!(pair4(a, &beta1).is_one());

    // w - pair(w, beta1) a + pair(w, a) beta1 lies in <a, beta1>^perp.
    let complement_proj = |w: &Vec4| -> Vec4 {
        w.add_multiple(&-pair4(w, &beta1), a)
            .add_multiple(&pair4(w, a), &beta1)
    };
    let generators: Vec<[Int; 4]> = (0..4).map(|i| complement_proj(&Vec4::unit(i)).0).collect();
    let basis = hermite_rows(generators);
    debug_assert_eq!(basis.len(), 2);
    let alpha2 = Vec4(basis[0].clone());
    let mut beta2 = Vec4(basis[1].clone());
    if pair4(&alpha2, &beta2).is_negative() {
        beta2 = -beta2;
    }
    let out = SymplecticBasis {
        alpha1: a.clone(),
        beta1,
        alpha2,
        beta2,
    };
    debug_assert!(out.is_symplectic());
    Ok(out)
}

/// Coefficients `c` with `f . c = gcd(f) = 1` for a primitive integer vector.
fn bezout_vector(f: &[Int; 4]) -> [Int; 4] {
    let mut g = Int::zero();
    let mut coeffs: [Int; 4] = Default::default();
    for (i, fi) in f.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        if g.is_zero() {
            g = fi.clone();
            coeffs[i] = Int::one();
            continue;
        }
        let eg = g.extended_gcd(fi);
        for c in coeffs.iter_mut().take(i) {
            *c *= &eg.x;
        }
        coeffs[i] = eg.y;
        g = eg.gcd;
    }
    if g.is_negative() {
        for c in coeffs.iter_mut() {
            *c = -&*c;
        }
    }
    coeffs
}

/// Nonzero rows of the Hermite normal form of the row lattice.
#[allow(clippy::needless_range_loop)]
fn hermite_rows(mut rows: Vec<[Int; 4]>) -> Vec<[Int; 4]> {
    let mut pivot_row = 0;
    for col in 0..4 {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            // Row with the smallest nonzero entry in this column becomes the pivot.
            let best = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&r, &s| rows[r][col].abs().cmp(&rows[s][col].abs()));
            let Some(best) = best else { break };
            rows.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                for c in 0..4 {
                    let delta = &q * &rows[pivot_row][c];
                    rows[r][c] -= delta;
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for c in 0..4 {
                rows[pivot_row][c] = -&rows[pivot_row][c];
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for r in 0..pivot_row {
            let q = rows[r][col].div_floor(&rows[pivot_row][col]);
            if q.is_zero() {
                continue;
            }
            for c in 0..4 {
                let delta = &q * &rows[pivot_row][c];
                rows[r][c] -= delta;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}
