//! Free quasi-symmetric functions at desk scale: the F and G bases
//! indexed by permutations, their product and coproduct, the duality
//! pairing, and the realization as noncommutative polynomials over a
//! finite alphabet.
//!
//! F_sigma is the sum of all words whose standardization is the inverse
//! of sigma, and G_sigma = F of the inverse. Products are computed by
//! the shifted-shuffle rule on F and transported to G; the polynomial
//! realization certifies that rule by brute multiplication.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coeff::{cadd, cmul, Coeff};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::words::{all_words, shifted_shuffle_perms, Permutation, Word};

/// Which permutation basis an element is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    F,
    G,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::F => "F",
            Basis::G => "G",
        })
    }
}

/// An integer combination of basis elements F_sigma or G_sigma.
///
/// Terms may mix degrees; products and coproducts act per term, so the
/// homogeneous components never interfere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FQSymElement {
    basis: Basis,
    terms: BTreeMap<Permutation, Coeff>,
}

impl FQSymElement {
    pub fn zero(basis: Basis) -> Self {
        FQSymElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(basis: Basis, perm: Permutation, coeff: Coeff) -> Self {
        let mut e = Self::zero(basis);
        e.accumulate(perm, coeff);
        e
    }

    /// The basis element F_sigma.
    pub fn f(perm: Permutation) -> Self {
        Self::monomial(Basis::F, perm, 1)
    }

    /// The basis element G_sigma.
    pub fn g(perm: Permutation) -> Self {
        Self::monomial(Basis::G, perm, 1)
    }

    /// The unit: the empty permutation with coefficient one.
    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Permutation::identity(0), 1)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Coeff> {
        &self.terms
    }

    pub fn coeff(&self, perm: &Permutation) -> Coeff {
        self.terms.get(perm).copied().unwrap_or(0)
    }

    /// The common length of all indexing permutations, if there is one.
    /// Zero elements have no degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.len();
        it.all(|p| p.len() == first).then_some(first)
    }

    fn accumulate(&mut self, perm: Permutation, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(perm).or_insert(0);
        *slot = cadd(*slot, coeff);
        if *slot == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(k, _)| k.clone())
                .expect("just zeroed");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (perm, &c) in &other.terms {
            out.accumulate(perm.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: Coeff) -> Self {
        if c == 0 {
            return Self::zero(self.basis);
        }
        FQSymElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, &x)| (p.clone(), cmul(x, c)))
                .collect(),
        }
    }

    /// Rewrites the element in the other basis through sigma -> inverse.
    pub fn to_basis(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        FQSymElement {
            basis,
            terms: self
                .terms
                .iter()
                .map(|(p, &c)| (p.inverse(), c))
                .collect(),
        }
    }

    /// The bilinear extension of the basis product.
    pub fn product(&self, other: &Self) -> Self {
        let rhs = other.to_basis(self.basis);
        let mut out = Self::zero(self.basis);
        for (s, &a) in &self.terms {
            for (t, &b) in &rhs.terms {
                let part = match self.basis {
                    Basis::F => f_product(s, t),
                    Basis::G => g_product(s, t),
                };
                for (p, &c) in &part.terms {
                    out.accumulate(p.clone(), cmul(cmul(a, b), c));
                }
            }
        }
        out
    }

    /// The linear extension of the basis coproduct.
    pub fn coproduct(&self) -> TensorElement {
        let mut out = TensorElement::zero(self.basis, self.basis);
        for (s, &a) in &self.terms {
            let part = match self.basis {
                Basis::F => f_coproduct(s),
                Basis::G => g_coproduct(s),
            };
            for ((u, v), &c) in &part.terms {
                out.accumulate(u.clone(), v.clone(), cmul(a, c));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(p, &c)| {
                    json!({
                        "basis": self.basis.to_string(),
                        "permutation": p.to_json(),
                        "coefficient": c,
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Json("expected an array of terms".into()))?;
        let mut basis = None;
        let mut out = None;
        for term in arr {
            let b = match term.get("basis").and_then(Value::as_str) {
                Some("F") => Basis::F,
                Some("G") => Basis::G,
                _ => return Err(Error::Json("term basis must be \"F\" or \"G\"".into())),
            };
            match basis {
                None => basis = Some(b),
                Some(prev) if prev != b => {
                    return Err(Error::Json("terms mix bases".into()));
                }
                _ => {}
            }
            let perm = Permutation::from_json(
                term.get("permutation")
                    .ok_or_else(|| Error::Json("term lacks a permutation".into()))?,
            )?;
            let coeff = term
                .get("coefficient")
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Json("term lacks an integer coefficient".into()))?;
            let e = out.get_or_insert_with(|| Self::zero(b));
            e.accumulate(perm, coeff);
        }
        Ok(out.unwrap_or_else(|| Self::zero(Basis::F)))
    }
}

impl fmt::Display for FQSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, &c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, format_args!("{}[{}]", self.basis, p))?;
        }
        Ok(())
    }
}

pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: Coeff,
    body: fmt::Arguments<'_>,
) -> fmt::Result {
    let mag = c.unsigned_abs();
    match (first, c < 0) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    if mag != 1 {
        write!(f, "{mag}*")?;
    }
    f.write_fmt(body)
}

/// An integer combination of pairs of basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    basis: (Basis, Basis),
    terms: BTreeMap<(Permutation, Permutation), Coeff>,
}

impl TensorElement {
    pub fn zero(left: Basis, right: Basis) -> Self {
        TensorElement {
            basis: (left, right),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> (Basis, Basis) {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(Permutation, Permutation), Coeff> {
        &self.terms
    }

    pub fn coeff(&self, left: &Permutation, right: &Permutation) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn accumulate(&mut self, left: Permutation, right: Permutation, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((left, right)).or_insert(0);
        *slot = cadd(*slot, coeff);
        if *slot == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &c)| c == 0)
                .map(|(k, _)| k.clone())
                .expect("just zeroed");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "tensor bases differ");
        let mut out = self.clone();
        for ((u, v), &c) in &other.terms {
            out.accumulate(u.clone(), v.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: Coeff) -> Self {
        if c == 0 {
            return Self::zero(self.basis.0, self.basis.1);
        }
        TensorElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, &x)| (k.clone(), cmul(x, c)))
                .collect(),
        }
    }

    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd, the product
    /// the bialgebra axiom compares coproducts against.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "tensor bases differ");
        let mut out = Self::zero(self.basis.0, self.basis.1);
        for ((a, b), &x) in &self.terms {
            for ((c, d), &y) in &other.terms {
                let left = FQSymElement::monomial(self.basis.0, a.clone(), 1)
                    .product(&FQSymElement::monomial(self.basis.0, c.clone(), 1));
                let right = FQSymElement::monomial(self.basis.1, b.clone(), 1)
                    .product(&FQSymElement::monomial(self.basis.1, d.clone(), 1));
                for (p, &cp) in left.terms() {
                    for (q, &cq) in right.terms() {
                        out.accumulate(
                            p.clone(),
                            q.clone(),
                            cmul(cmul(x, y), cmul(cp, cq)),
                        );
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((u, v), &c)) in self.terms.iter().enumerate() {
            write_term(
                f,
                i == 0,
                c,
                format_args!("{}[{}](x){}[{}]", self.basis.0, u, self.basis.1, v),
            )?;
        }
        Ok(())
    }
}

/// F_s F_t as the sum of F over the shifted shuffle of s and t.
pub fn f_product(s: &Permutation, t: &Permutation) -> FQSymElement {
    let mut out = FQSymElement::zero(Basis::F);
    for p in shifted_shuffle_perms(s, t) {
        out.accumulate(p, 1);
    }
    out
}

/// Deconcatenation: the sum over splits s = uv of F_std(u) (x) F_std(v).
pub fn f_coproduct(s: &Permutation) -> TensorElement {
    let w = s.to_word();
    let mut out = TensorElement::zero(Basis::F, Basis::F);
    for k in 0..=w.len() {
        let u = Word::new(w.letters()[..k].to_vec()).standardize();
        let v = Word::new(w.letters()[k..].to_vec()).standardize();
        out.accumulate(u, v, 1);
    }
    out
}

/// G_s G_t, transported through the inverse map: the sum of G_v over
/// concatenations v = xy with std(x) = s and std(y) = t.
pub fn g_product(s: &Permutation, t: &Permutation) -> FQSymElement {
    let f = f_product(&s.inverse(), &t.inverse());
    let mut out = FQSymElement::zero(Basis::G);
    for (p, &c) in f.terms() {
        out.accumulate(p.inverse(), c);
    }
    out
}

/// The G-basis coproduct, transported through the inverse map.
pub fn g_coproduct(s: &Permutation) -> TensorElement {
    let f = f_coproduct(&s.inverse());
    let mut out = TensorElement::zero(Basis::G, Basis::G);
    for ((u, v), &c) in f.terms() {
        out.accumulate(u.inverse(), v.inverse(), c);
    }
    out
}

/// The duality pairing with <F_s, G_t> = 1 exactly when s = t. Arguments
/// in other bases are coerced first.
pub fn pairing(x: &FQSymElement, y: &FQSymElement) -> Coeff {
    let xf = x.to_basis(Basis::F);
    let yg = y.to_basis(Basis::G);
    let mut total = 0;
    for (p, &a) in xf.terms() {
        total = cadd(total, cmul(a, yg.coeff(p)));
    }
    total
}

/// A noncommutative polynomial: integer combination of words over the
/// first `alphabet_size` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPolynomial {
    alphabet_size: u32,
    terms: BTreeMap<Word, Coeff>,
}

impl NCPolynomial {
    pub fn zero(alphabet_size: u32) -> Self {
        NCPolynomial {
            alphabet_size,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(alphabet_size: u32, w: Word, coeff: Coeff) -> Result<Self> {
        let mut p = Self::zero(alphabet_size);
        p.accumulate(w, coeff)?;
        Ok(p)
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Coeff> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).copied().unwrap_or(0)
    }

    fn accumulate(&mut self, w: Word, coeff: Coeff) -> Result<()> {
        if let Some(l) = w.letters().iter().find(|l| l.rank() >= self.alphabet_size) {
            return Err(Error::InvalidArgument(format!(
                "letter {l} is outside the {}-letter alphabet",
                self.alphabet_size
            )));
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(w.clone()).or_insert(0);
        *slot = cadd(*slot, coeff);
        if *slot == 0 {
            self.terms.remove(&w);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.alphabet_size, other.alphabet_size,
            "alphabet sizes differ"
        );
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.accumulate(w.clone(), c).expect("keys already checked");
        }
        out
    }

    /// Concatenation product extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.alphabet_size, other.alphabet_size,
            "alphabet sizes differ"
        );
        let mut out = Self::zero(self.alphabet_size);
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                out.accumulate(u.concat(v), cmul(a, b))
                    .expect("keys already checked");
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alphabet_size": self.alphabet_size,
            "terms": self
                .terms
                .iter()
                .map(|(w, &c)| json!({"word": w.to_json(), "coefficient": c}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let m = v
            .get("alphabet_size")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("expected an alphabet_size field".into()))?;
        let mut out = Self::zero(m as u32);
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("expected a terms array".into()))?;
        for term in terms {
            let w = Word::from_json(
                term.get("word")
                    .ok_or_else(|| Error::Json("term lacks a word".into()))?,
            )?;
            let c = term
                .get("coefficient")
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Json("term lacks an integer coefficient".into()))?;
            out.accumulate(w, c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            if w.is_empty() {
                let mag = c.unsigned_abs();
                match (i == 0, c < 0) {
                    (true, false) => {}
                    (true, true) => f.write_str("-")?,
                    (false, false) => f.write_str(" + ")?,
                    (false, true) => f.write_str(" - ")?,
                }
                write!(f, "{mag}")?;
            } else {
                write_term(f, i == 0, c, format_args!("{w}"))?;
            }
        }
        Ok(())
    }
}

/// All length-n words over the first m letters whose standardization is
/// `tau`, enumerated directly from the descent structure of the inverse.
///
/// A word standardizes to tau exactly when it reads the positions of a
/// weakly increasing letter sequence through tau, the sequence rising
/// strictly wherever the inverse of tau descends.
pub(crate) fn words_with_std(tau: &Permutation, m: u32) -> Vec<Word> {
    let n = tau.len();
    if n == 0 {
        return vec![Word::empty()];
    }
    let inv = tau.inverse();
    let strict: Vec<bool> = (0..n - 1)
        .map(|j| inv.entries()[j] > inv.entries()[j + 1])
        .collect();
    let mut out = Vec::new();
    let mut x = vec![0u32; n];
    fn rec(
        j: usize,
        lo: u32,
        m: u32,
        x: &mut Vec<u32>,
        strict: &[bool],
        tau: &Permutation,
        out: &mut Vec<Word>,
    ) {
        if j == x.len() {
            let ranks: Vec<u32> = tau.entries().iter().map(|&t| x[t - 1]).collect();
            out.push(Word::from_ranks(&ranks));
            return;
        }
        for v in lo..m {
            x[j] = v;
            let next_lo = if j + 1 < x.len() && strict[j] { v + 1 } else { v };
            rec(j + 1, next_lo, m, x, strict, tau, out);
        }
    }
    rec(0, 0, m, &mut x, &strict, tau, &mut out);
    out.sort();
    out
}

/// The polynomial realization of `x` over the first m letters: every
/// F_sigma becomes the sum of words standardizing to the inverse of
/// sigma. Computed by filtering all m^n words, which is the definition;
/// the direct fiber enumeration is certified against this in the tests.
pub fn expand_polynomial(x: &FQSymElement, m: u32) -> Result<NCPolynomial> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "alphabet must have at least one letter".into(),
        ));
    }
    let xf = x.to_basis(Basis::F);
    let mut out = NCPolynomial::zero(m);
    let mut by_degree: BTreeMap<usize, Vec<(Permutation, Coeff)>> = BTreeMap::new();
    for (p, &c) in xf.terms() {
        by_degree
            .entry(p.len())
            .or_default()
            .push((p.inverse(), c));
    }
    for (n, fibers) in by_degree {
        for w in all_words(m as usize, n) {
            let std = w.standardize();
            for (target, c) in &fibers {
                if std == *target {
                    out.accumulate(w.clone(), *c)?;
                }
            }
        }
    }
    Ok(out)
}

fn specialization_window(fibers: &BTreeMap<Permutation, Coeff>, n: usize, window: usize) -> QPoly {
    // Truncated series of the element at letters 1, q, q^2, ...: words
    // whose rank sum exceeds the window cannot contribute below it, so
    // rank vectors of weight <= window are exact up to that degree. The
    // odometer walks exactly those vectors, in place.
    let mut coeffs = vec![0; window + 1];
    if n == 0 {
        for (p, &c) in fibers {
            if p.is_empty() {
                coeffs[0] = cadd(coeffs[0], c);
            }
        }
        return QPoly::from_coeffs(coeffs);
    }
    // One-line notations in map order, which is already lexicographic.
    let table: Vec<(Vec<usize>, Coeff)> = fibers
        .iter()
        .map(|(p, &c)| (p.entries().to_vec(), c))
        .collect();
    let mut ranks = vec![0usize; n];
    let mut weight = 0usize;
    let mut order: Vec<usize> = (0..n).collect();
    let mut std_buf = vec![0usize; n];
    loop {
        order.sort_by_key(|&k| (ranks[k], k));
        for (r, &k) in order.iter().enumerate() {
            std_buf[k] = r + 1;
        }
        if let Ok(hit) = table.binary_search_by(|(p, _)| p.as_slice().cmp(&std_buf)) {
            coeffs[weight] = cadd(coeffs[weight], table[hit].1);
        }
        let mut j = n - 1;
        loop {
            if weight < window {
                ranks[j] += 1;
                weight += 1;
                break;
            }
            weight -= ranks[j];
            ranks[j] = 0;
            if j == 0 {
                return QPoly::from_coeffs(coeffs);
            }
            j -= 1;
        }
    }
}

/// (q)_n times the principal specialization x(1, q, q^2, ...) of a
/// homogeneous element of degree n, computed by bounded enumeration and
/// certified stable by recomputation with a wider window.
pub fn principal_specialization(x: &FQSymElement, cutoff: usize) -> Result<QPoly> {
    let xf = x.to_basis(Basis::F);
    if xf.is_zero() {
        return Ok(QPoly::zero());
    }
    let n = xf.homogeneous_degree().ok_or_else(|| {
        Error::InvalidArgument("principal specialization needs a homogeneous element".into())
    })?;
    let max_exponent = n.saturating_sub(1) * n / 2;
    if cutoff < max_exponent {
        return Err(Error::InvalidArgument(format!(
            "cutoff {cutoff} is below the maximal exponent {max_exponent}"
        )));
    }
    let fibers: BTreeMap<Permutation, Coeff> = xf
        .terms()
        .iter()
        .map(|(p, &c)| (p.inverse(), c))
        .collect();
    let pochhammer = QPoly::q_pochhammer(n);
    let narrow = specialization_window(&fibers, n, cutoff)
        .mul(&pochhammer)
        .truncate(cutoff);
    let wide_window = cutoff + n + 1;
    let wide = specialization_window(&fibers, n, wide_window)
        .mul(&pochhammer)
        .truncate(wide_window);
    if narrow != wide {
        return Err(Error::Unstable(format!(
            "specialization of {x} kept changing past degree {cutoff}"
        )));
    }
    Ok(narrow)
}

/// Expands both sides of the free Cauchy identity at degree n over two
/// m-letter alphabets and compares exactly: the sum of u (x) v over
/// pairs with std(u) inverse to std(v) must match the sum over all
/// sigma of F_sigma (x) G_sigma.
pub fn cauchy_check(n: usize, m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "alphabet must have at least one letter".into(),
        ));
    }
    let words = all_words(m as usize, n);
    let stds: Vec<Permutation> = words.iter().map(Word::standardize).collect();
    let invs: Vec<Permutation> = stds.iter().map(Permutation::inverse).collect();

    let mut lhs: BTreeMap<(Word, Word), Coeff> = BTreeMap::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if stds[i] == invs[j] {
                *lhs.entry((u.clone(), v.clone())).or_insert(0) += 1;
            }
        }
    }

    let mut rhs: BTreeMap<(Word, Word), Coeff> = BTreeMap::new();
    for sigma in crate::words::all_permutations(n) {
        let left = expand_polynomial(&FQSymElement::f(sigma.clone()), m)?;
        let right = expand_polynomial(&FQSymElement::g(sigma), m)?;
        for (u, &a) in left.terms() {
            for (v, &b) in right.terms() {
                let slot = rhs.entry((u.clone(), v.clone())).or_insert(0);
                *slot = cadd(*slot, cmul(a, b));
            }
        }
    }
    lhs.retain(|_, c| *c != 0);
    rhs.retain(|_, c| *c != 0);
    Ok(lhs == rhs)
}
