//! Exact integer coefficients with loud overflow detection.
//!
//! All algebraic coefficients in this crate are `i64`. Desk-scale inputs stay
//! far below the overflow boundary, but arithmetic must never wrap silently,
//! so every addition and multiplication goes through these helpers.

pub type Coeff = i64;

pub fn cadd(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("integer coefficient overflow")
}

pub fn cmul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("integer coefficient overflow")
}

/// n! as a checked u64.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| {
        acc.checked_mul(k).expect("factorial overflow")
    })
}
