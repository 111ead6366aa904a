#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use trisect_core::diagram::TWIST_EXPONENTS;
use trisect_core::lattice::Symplectic;
use trisect_core::{
    embed_torus, transvect, Genus2Diagram, Label, Monodromy, Sign, Sl2, TorusDiagram, Vec2, Vec4,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn primitive(rng: &mut ChaCha8Rng, bound: i64) -> Vec2 {
    loop {
        let (x, y) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if gcd(x, y) == 1 {
            return Vec2::new(x, y);
        }
    }
}

pub fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Product of a few random elementary shears.
pub fn sl2(rng: &mut ChaCha8Rng) -> Sl2 {
    let mut m = Sl2::identity();
    for _ in 0..rng.gen_range(1..=4) {
        let t = rng.gen_range(-3i64..=3);
        let step = if rng.gen_bool(0.5) {
            Sl2::new(1, t, 0, 1)
        } else {
            Sl2::new(1, 0, t, 1)
        };
        m = step.unwrap().compose(&m);
    }
    m
}

pub fn flip(v: &Vec2, rng: &mut ChaCha8Rng) -> Vec2 {
    if rng.gen_bool(0.5) {
        -v
    } else {
        v.clone()
    }
}

pub fn identity_diagram(rng: &mut ChaCha8Rng) -> TorusDiagram {
    let m = sl2(rng);
    let std = [Vec2::new(1, 0), Vec2::new(0, 1), Vec2::new(-1, -1)];
    let [a2, b2, c2] = std.map(|v| flip(&m.apply(&v), rng));
    TorusDiagram::new(a2, b2, c2, Monodromy::Identity, sign(rng))
}

pub fn twist_diagram(rng: &mut ChaCha8Rng, bound: i64) -> TorusDiagram {
    let k = *TWIST_EXPONENTS.choose(rng).unwrap();
    TorusDiagram::new(
        primitive(rng, bound),
        primitive(rng, bound),
        primitive(rng, bound),
        Monodromy::twist(primitive(rng, bound), k),
        sign(rng),
    )
}

/// Valid torus diagram; one in eight has identity monodromy.
pub fn torus_diagram(rng: &mut ChaCha8Rng, bound: i64) -> TorusDiagram {
    if rng.gen_ratio(1, 8) {
        identity_diagram(rng)
    } else {
        twist_diagram(rng, bound)
    }
}

/// A random symplectic transvection `x -> x + k (v.x) v` of `Z^4`.
fn sp4_step(rng: &mut ChaCha8Rng) -> impl Fn(&Vec4) -> Vec4 {
    let v = loop {
        let v = Vec4::new(
            rng.gen_range(-2i64..=2),
            rng.gen_range(-2i64..=2),
            rng.gen_range(-2i64..=2),
            rng.gen_range(-2i64..=2),
        );
        if v.is_primitive() {
            break v;
        }
    };
    let k = if rng.gen_bool(0.5) { 1 } else { -1 };
    move |x: &Vec4| transvect(&v, k, x)
}

pub fn apply_sp4(g: &Genus2Diagram, f: impl Fn(&Vec4) -> Vec4) -> Genus2Diagram {
    Genus2Diagram {
        a1: f(&g.a1),
        b1: f(&g.b1),
        c1: f(&g.c1),
        a2: f(&g.a2),
        b2: f(&g.b2),
        c2: f(&g.c2),
        exponent: g.exponent,
    }
}

/// Standard lift of a random torus diagram, moved by random handle-slides
/// and a random symplectic automorphism.
pub fn genus2_diagram(rng: &mut ChaCha8Rng, bound: i64) -> Genus2Diagram {
    let mut g = embed_torus(&torus_diagram(rng, bound)).unwrap();
    for _ in 0..rng.gen_range(0..=3) {
        let label = *Label::ALL.choose(rng).unwrap();
        g = g.handle_slide(label, sign(rng)).unwrap();
    }
    for _ in 0..rng.gen_range(0..=4) {
        g = apply_sp4(&g, sp4_step(rng));
    }
    g
}
