//! Generators, gradings and bracket of ŝl₂ on the integer-indexed basis
//! `e_{3h−1} = e_{−1}⊗z^h`, `e_{3h} = e_0⊗z^h`, `e_{3h+1} = e_1⊗z^h`.
//!
//! The central element `p` never appears as a basis vector; it acts on
//! generators through [`generator_degree`].

/// `ε_m ∈ {−1, 0, 1}` for `m ≡ −1, 0, 1 (mod 3)`.
#[inline]
pub fn epsilon(m: i64) -> i64 {
    match m.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Degree `π(e_a) = (a − ε_a)/3`, the eigenvalue of `ad p`.
#[inline]
pub fn generator_degree(a: i64) -> i64 {
    (a - epsilon(a)) / 3
}

/// Weight `ω(e_a) = ε_a`, the eigenvalue of `ad e_0`.
#[inline]
pub fn generator_weight(a: i64) -> i64 {
    epsilon(a)
}

/// `[e_a, e_b] = ε_{b−a} e_{a+b}`, returned as `(coefficient, index)`.
/// A zero coefficient means the bracket vanishes.
#[inline]
pub fn bracket(a: i64, b: i64) -> (i64, i64) {
    (epsilon(b - a), a + b)
}
