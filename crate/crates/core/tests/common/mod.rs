#![allow(dead_code)]

use std::f64::consts::PI;

use hexfour::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `exp(2πi/3 k·t)` written out without any phase reduction.
pub fn phi_raw(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    let s: f64 = (0..3).map(|i| k[i] as f64 * t[i]).sum();
    Complex64::from_polar(1.0, 2.0 * PI / 3.0 * s)
}

/// The six images of `t` with their sign character, listed by hand.
pub fn orbit_raw(t: [f64; 3]) -> [(f64, [f64; 3]); 6] {
    let [a, b, c] = t;
    [
        (1.0, [a, b, c]),
        (1.0, [b, c, a]),
        (1.0, [c, a, b]),
        (-1.0, [-a, -c, -b]),
        (-1.0, [-b, -a, -c]),
        (-1.0, [-c, -b, -a]),
    ]
}

pub fn tc_raw(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    orbit_raw(t).iter().map(|(_, s)| phi_raw(k, *s)).sum::<Complex64>() / 6.0
}

pub fn ts_raw(k: [i64; 3], t: [f64; 3]) -> Complex64 {
    let v = orbit_raw(t).iter().map(|(e, s)| phi_raw(k, *s) * *e).sum::<Complex64>() / 6.0;
    v * Complex64::new(0.0, -1.0)
}

/// `(4/3) sin πt1 sin πt2 sin πt3`.
pub fn ts112_closed(t: [f64; 3]) -> f64 {
    4.0 / 3.0 * (PI * t[0]).sin() * (PI * t[1]).sin() * (PI * t[2]).sin()
}

/// Deltoid coordinates from the cosine and sine product formulas.
pub fn deltoid_xy(t: [f64; 3]) -> (f64, f64) {
    let [t1, t2, t3] = t;
    let a = PI / 3.0 * (t2 - t1);
    let b = PI / 3.0 * (t3 - t2);
    let c = PI / 3.0 * (t1 - t3);
    (
        4.0 / 3.0 * a.cos() * b.cos() * c.cos() - 1.0 / 3.0,
        4.0 / 3.0 * a.sin() * b.sin() * c.sin(),
    )
}

/// Continuous `⟨TC_k, TC_j⟩` for `k, j ∈ Λ`: the reciprocal orbit size on
/// the diagonal.
pub fn tc_gram(k: [i64; 3], j: [i64; 3]) -> f64 {
    if k != j {
        0.0
    } else if k == [0, 0, 0] {
        1.0
    } else if k.contains(&0) {
        1.0 / 3.0
    } else {
        1.0 / 6.0
    }
}

pub fn max_err<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}
