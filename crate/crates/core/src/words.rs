//! Words over a totally ordered alphabet and permutations in one-line
//! notation.
//!
//! Letters are integer ranks; rank 0 prints as `a`, rank 1 as `b`, and so on.
//! A word whose ranks all stay below 26 prints as a compact string of
//! lowercase letters, otherwise as comma-separated ranks. Permutations of
//! {1..n} print as a digit string for n <= 9 and comma-separated entries
//! beyond that.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};

/// A single letter, identified by its rank in the alphabet (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(rank: u32) -> Self {
        Letter(rank)
    }

    pub fn rank(self) -> u32 {
        self.0
    }

    pub fn from_char(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Letter(c as u32 - 'a' as u32))
        } else {
            None
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// A finite word; possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ranks(ranks: &[u32]) -> Self {
        Word(ranks.iter().copied().map(Letter).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn ranks(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.rank()).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Standardization: positions are ranked by letter value, ties broken
    /// left to right, producing a permutation of the same length.
    pub fn standardize(&self) -> Permutation {
        let n = self.len();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| (self.0[i], i));
        let mut out = vec![0usize; n];
        for (r, &i) in idx.iter().enumerate() {
            out[i] = r + 1;
        }
        Permutation(out)
    }

    /// Adds `k` to the rank of every letter.
    pub fn shift(&self, k: u32) -> Word {
        Word(self.0.iter().map(|l| Letter(l.0 + k)).collect())
    }

    /// Keeps only the letters whose rank lies in `[lo, hi]`, preserving
    /// their relative order.
    pub fn restrict_interval(&self, lo: Letter, hi: Letter) -> Word {
        Word(
            self.0
                .iter()
                .copied()
                .filter(|l| lo <= *l && *l <= hi)
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            _ => Err(Error::Json("expected a word string".into())),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|l| l.rank() < 26) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.rank().to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        if s.contains(',') || s.chars().all(|c| c.is_ascii_digit()) {
            let mut ranks = Vec::new();
            for (i, part) in s.split(',').enumerate() {
                let rank: u32 = part.trim().parse().map_err(|_| Error::Parse {
                    pos: i,
                    msg: format!("invalid letter rank {part:?}"),
                })?;
                ranks.push(rank);
            }
            return Ok(Word::from_ranks(&ranks));
        }
        let mut letters = Vec::new();
        for (pos, c) in s.char_indices() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected a lowercase letter, found {c:?}"),
                    })
                }
            }
        }
        Ok(Word(letters))
    }
}

/// A permutation of {1..n} in one-line notation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `entries` is a rearrangement of 1..n.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &e in &entries {
            if e == 0 || e > n || seen[e - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "entries {entries:?} are not a rearrangement of 1..{n}"
                )));
            }
            seen[e - 1] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0usize; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[e - 1] = i + 1;
        }
        Permutation(out)
    }

    /// Descent positions i (1-based) with sigma_i > sigma_{i+1}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// Major index: the sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    /// The permutation as a word whose letter ranks are the entries.
    pub fn to_word(&self) -> Word {
        Word(self.0.iter().map(|&e| Letter(e as u32)).collect())
    }

    /// Inverse of `to_word`: accepts a word whose ranks are exactly 1..n.
    pub fn try_from_word(w: &Word) -> Result<Self> {
        Permutation::new(w.0.iter().map(|l| l.rank() as usize).collect())
    }

    pub fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            _ => Err(Error::Json("expected a permutation string".into())),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for e in &self.0 {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let entries: Vec<usize> = if s.contains(',') {
            let mut v = Vec::new();
            for (i, part) in s.split(',').enumerate() {
                v.push(part.trim().parse().map_err(|_| Error::Parse {
                    pos: i,
                    msg: format!("invalid permutation entry {part:?}"),
                })?);
            }
            v
        } else {
            let mut v = Vec::new();
            for (pos, c) in s.char_indices() {
                match c.to_digit(10) {
                    Some(d) => v.push(d as usize),
                    None => {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("expected a digit, found {c:?}"),
                        })
                    }
                }
            }
            v
        };
        Permutation::new(entries)
    }
}

fn shuffle_slices<T: Clone>(u: &[T], v: &[T]) -> Vec<Vec<T>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = Vec::new();
    for mut rest in shuffle_slices(&u[1..], v) {
        rest.insert(0, u[0].clone());
        out.push(rest);
    }
    for mut rest in shuffle_slices(u, &v[1..]) {
        rest.insert(0, v[0].clone());
        out.push(rest);
    }
    out
}

/// All interleavings of `u` and `v`. The result is a multiset with
/// C(|u|+|v|, |u|) entries; duplicates occur only when the words share
/// letters.
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = shuffle_slices(&u.0, &v.0).into_iter().map(Word).collect();
    out.sort();
    out
}

/// `shuffle(u, v)` after shifting every letter of `v` up by `|u|`.
pub fn shifted_shuffle(u: &Word, v: &Word) -> Vec<Word> {
    shuffle(u, &v.shift(u.len() as u32))
}

/// Shifted shuffle of permutations; the interleavings of s with the shifted
/// t are permutations of {1..|s|+|t|}, all distinct.
pub fn shifted_shuffle_perms(s: &Permutation, t: &Permutation) -> Vec<Permutation> {
    shifted_shuffle(&s.to_word(), &t.to_word())
        .iter()
        .map(|w| Permutation::try_from_word(w).expect("shifted shuffle yields permutations"))
        .collect()
}

/// Advances `v` to its lexicographic successor among the rearrangements of
/// its own multiset. Returns false once `v` is the maximum.
pub(crate) fn next_rearrangement<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of {1..n} in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(cur.clone())];
    while next_rearrangement(&mut cur) {
        out.push(Permutation(cur.clone()));
    }
    out
}

/// All words of length `len` over the first `alphabet` letters, in
/// lexicographic order.
pub fn all_words(alphabet: usize, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    loop {
        out.push(Word::from_ranks(&cur));
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < alphabet as u32 {
                cur[i] += 1;
                for c in cur[i + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_breaks_ties_left_to_right() {
        assert_eq!(w("bacaabca").standardize(), p("51723684"));
        assert_eq!(w("").standardize(), p(""));
        assert_eq!(w("aaa").standardize(), p("123"));
    }

    #[test]
    fn standardize_fixes_permutation_words() {
        for perm in all_permutations(5) {
            assert_eq!(perm.to_word().standardize(), perm);
        }
    }

    #[test]
    fn inverse_of_worked_standardization() {
        assert_eq!(p("51723684").inverse(), p("24581637"));
        assert_eq!(p("312").inverse(), p("231"));
    }

    #[test]
    fn descents_and_maj() {
        assert_eq!(p("51723684").descents(), vec![1, 3, 7]);
        assert_eq!(p("51723684").maj(), 11);
        assert_eq!(p("321").maj(), 3);
        assert_eq!(p("").maj(), 0);
    }

    #[test]
    fn maj_matches_direct_scan() {
        for perm in all_permutations(6) {
            let e = perm.entries();
            let direct: usize = (1..e.len()).filter(|&i| e[i - 1] > e[i]).sum();
            assert_eq!(perm.maj(), direct);
        }
    }

    #[test]
    fn shuffle_of_disjoint_words() {
        let res = shuffle(&w("ab"), &w("c"));
        let expect: Vec<Word> = vec![w("abc"), w("acb"), w("cab")];
        assert_eq!(res, expect);
    }

    #[test]
    fn shuffle_multiset_size_is_binomial() {
        // C(5, 2) = 10 interleavings, even with shared letters.
        let res = shuffle(&w("ab"), &w("aba"));
        assert_eq!(res.len(), 10);
    }

    #[test]
    fn shifted_shuffle_of_permutations() {
        let res = shifted_shuffle_perms(&p("12"), &p("1"));
        assert_eq!(res, vec![p("123"), p("132"), p("312")]);
        assert_eq!(shifted_shuffle(&w("ab"), &w("a")), shuffle(&w("ab"), &w("c")));
    }

    #[test]
    fn restriction_keeps_interval_letters() {
        assert_eq!(
            w("bacaabca").restrict_interval(Letter::new(1), Letter::new(2)),
            w("bcbc")
        );
    }

    #[test]
    fn restriction_distributes_over_concatenation() {
        let u = w("bacb");
        let v = w("cabaa");
        let lo = Letter::new(0);
        let hi = Letter::new(1);
        assert_eq!(
            u.concat(&v).restrict_interval(lo, hi),
            u.restrict_interval(lo, hi).concat(&v.restrict_interval(lo, hi))
        );
    }

    #[test]
    fn word_text_roundtrip() {
        for s in ["", "bacaabca", "zz"] {
            assert_eq!(w(s).to_string(), s);
        }
        let big = Word::from_ranks(&[0, 30, 2]);
        assert_eq!(big.to_string(), "0,30,2");
        assert_eq!("0,30,2".parse::<Word>().unwrap(), big);
    }

    #[test]
    fn permutation_text_roundtrip() {
        assert_eq!(p("51723684").to_string(), "51723684");
        let long = Permutation::new((1..=10).collect()).unwrap();
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }

    #[test]
    fn permutation_rejects_bad_entries() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!("122".parse::<Permutation>().is_err());
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
    }

    #[test]
    fn all_words_count_and_order() {
        let ws = all_words(3, 2);
        assert_eq!(ws.len(), 9);
        assert_eq!(ws[0], w("aa"));
        assert_eq!(ws[8], w("cc"));
    }
}
