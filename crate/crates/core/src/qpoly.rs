//! Polynomials in q with exact integer coefficients.
//!
//! Coefficients are dense, stored from degree 0 upward with no trailing
//! zeros. Division is exact long division; a nonzero remainder is an error,
//! never a silent truncation.

use std::fmt;

use serde_json::{json, Value};

use crate::coeff::{cadd, cmul, Coeff};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Coeff>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    /// c * q^k
    pub fn monomial(k: usize, c: Coeff) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly { coeffs }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Self {
        QPoly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = cadd(self.coeff(k), other.coeff(k));
        }
        QPoly { coeffs }.trimmed()
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut coeffs = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(k) - other.coeff(k);
        }
        QPoly { coeffs }.trimmed()
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b));
            }
        }
        QPoly { coeffs }.trimmed()
    }

    /// Exact division; errors when `d` is zero or does not divide `self`.
    pub fn div_exact(&self, d: &QPoly) -> Result<QPoly> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs[dd];
        if rem.len() - 1 < dd {
            return Err(Error::InexactDivision(format!("{self} by {d}")));
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return Err(Error::InexactDivision(format!("{self} by {d}")));
            }
            let q = top / lead;
            quot[k] = q;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= cmul(q, dc);
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision(format!("{self} by {d}")));
        }
        Ok(QPoly { coeffs: quot }.trimmed())
    }

    pub fn eval_at_one(&self) -> Coeff {
        self.coeffs.iter().fold(0, |acc, &c| cadd(acc, c))
    }

    /// Drops all terms of degree > `deg`.
    pub fn truncate(&self, deg: usize) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().copied().take(deg + 1).collect(),
        }
        .trimmed()
    }

    /// [n]_q = 1 + q + ... + q^{n-1}
    pub fn q_int(n: usize) -> QPoly {
        QPoly { coeffs: vec![1; n] }
    }

    /// [n]_q! = [1]_q [2]_q ... [n]_q
    pub fn q_factorial(n: usize) -> QPoly {
        (1..=n).fold(QPoly::one(), |acc, k| acc.mul(&QPoly::q_int(k)))
    }

    /// (q)_n = (1 - q)(1 - q^2)...(1 - q^n)
    pub fn q_pochhammer(n: usize) -> QPoly {
        (1..=n).fold(QPoly::one(), |acc, k| {
            acc.mul(&QPoly::one().sub(&QPoly::monomial(k, 1)))
        })
    }

    /// JSON form: the coefficient array from degree 0 upward.
    pub fn to_json(&self) -> Value {
        json!(self.coeffs)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Json("expected a coefficient array".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            coeffs.push(
                c.as_i64()
                    .ok_or_else(|| Error::Json("expected an integer coefficient".into()))?,
            );
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
