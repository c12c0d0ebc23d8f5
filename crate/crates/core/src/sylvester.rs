//! The sylvester congruence on words and its classes.
//!
//! The congruence is generated by swapping an adjacent pair of distinct
//! letters when a witness letter lying between them (weakly above the
//! smaller, strictly below the larger) occurs somewhere further right.
//! Two words are congruent exactly when they insert to the same search
//! tree, so every class is the fiber of one tree and owns a canonical
//! word: the postfix reading of that tree.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::trees::{
    canonical_perm, node_stats, p_symbol, postfix_reading, q_symbol, DecreasingTree, LabeledTree,
    TreeShape,
};
use crate::words::{next_rearrangement, Letter, Permutation, Word};

/// Largest rearrangement class the oracle method will enumerate (10!).
pub const ORACLE_BOUND: u64 = 3_628_800;

fn has_witness(w: &[Letter], i: usize, small: Letter, big: Letter) -> bool {
    w[i + 2..].iter().any(|&y| small <= y && y < big)
}

fn swapped(w: &Word, i: usize) -> Word {
    let mut letters = w.letters().to_vec();
    letters.swap(i, i + 1);
    Word::new(letters)
}

/// Words reachable by one congruence move, in either direction.
pub fn elementary_moves(w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[i], letters[i + 1]);
        if a == b {
            continue;
        }
        let (small, big) = if a < b { (a, b) } else { (b, a) };
        if has_witness(letters, i, small, big) {
            out.push(swapped(w, i));
        }
    }
    out.sort();
    out
}

/// The oriented moves only: the smaller letter of an admissible adjacent
/// pair jumps past the larger one, moving rightward letters of the pair
/// toward decreasing order.
pub fn oriented_successors(w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[i], letters[i + 1]);
        if a < b && has_witness(letters, i, a, b) {
            out.push(swapped(w, i));
        }
    }
    out.sort();
    out
}

pub fn sylvester_equivalent(u: &Word, v: &Word) -> bool {
    p_symbol(u) == p_symbol(v)
}

/// The canonical word of the class of `w`: the postfix reading of its
/// search tree, which is also the lexicographic minimum of the class.
pub fn canonical_word(w: &Word) -> Word {
    postfix_reading(&p_symbol(w))
}

/// How to enumerate a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMethod {
    /// Close the canonical word under oriented moves, breadth first with a
    /// lexicographically sorted frontier.
    Rewriting,
    /// Filter all rearrangements of the letter multiset by tree equality;
    /// refuses classes of rearrangements larger than `ORACLE_BOUND`.
    Oracle,
}

fn rewriting_closure(start: Word) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for succ in oriented_successors(w) {
                if seen.insert(succ.clone()) {
                    next.push(succ);
                }
            }
        }
        next.sort();
        next.dedup();
        frontier = next;
    }
    seen.into_iter().collect()
}

fn rearrangement_count(letters: &[Letter]) -> u64 {
    // n! / prod(multiplicities!), computed without intermediate overflow
    // by multiplying one letter at a time.
    let mut count: u64 = 1;
    let mut seen: Vec<(Letter, u64)> = Vec::new();
    for (i, &l) in letters.iter().enumerate() {
        count = count
            .checked_mul(i as u64 + 1)
            .unwrap_or(u64::MAX);
        let m = match seen.iter_mut().find(|(x, _)| *x == l) {
            Some((_, m)) => {
                *m += 1;
                *m
            }
            None => {
                seen.push((l, 1));
                1
            }
        };
        count /= m;
        if count > ORACLE_BOUND {
            return count;
        }
    }
    count
}

/// The sylvester class of `w` as a sorted word list.
pub fn word_class(w: &Word, method: ClassMethod) -> Result<Vec<Word>> {
    match method {
        ClassMethod::Rewriting => Ok(rewriting_closure(canonical_word(w))),
        ClassMethod::Oracle => {
            let mut letters = w.letters().to_vec();
            letters.sort();
            if rearrangement_count(&letters) > ORACLE_BOUND {
                return Err(Error::BoundExceeded(format!(
                    "rearrangement class of {w} exceeds {ORACLE_BOUND}"
                )));
            }
            let target = p_symbol(w);
            let mut out = Vec::new();
            loop {
                let cand = Word::new(letters.clone());
                if p_symbol(&cand) == target {
                    out.push(cand);
                }
                if !next_rearrangement(&mut letters) {
                    break;
                }
            }
            Ok(out)
        }
    }
}

/// The permutation class of a shape: every permutation whose search tree
/// has shape `t`.
pub fn shape_class(t: &TreeShape, method: ClassMethod) -> Result<Vec<Permutation>> {
    let seed = canonical_perm(t).to_word();
    Ok(word_class(&seed, method)?
        .iter()
        .map(|w| Permutation::try_from_word(w).expect("classes of permutation words are permutations"))
        .collect())
}

/// True when `p` is the canonical word of its own class.
pub fn is_tree_word(p: &Permutation) -> bool {
    canonical_word(&p.to_word()) == p.to_word()
}

/// The pair (search tree, position tree) of a word; the two trees always
/// share their shape.
pub fn correspondence(w: &Word) -> (LabeledTree, DecreasingTree) {
    (p_symbol(w), q_symbol(w))
}

/// Rebuilds the unique word mapped to the pair `(p, q)`.
pub fn inverse_correspondence(p: &LabeledTree, q: &DecreasingTree) -> Result<Word> {
    if !p.is_bst() {
        return Err(Error::InvalidLabeling(
            "first tree is not a search tree".into(),
        ));
    }
    if !q.is_decreasing() {
        return Err(Error::InvalidLabeling(
            "second tree is not a decreasing tree".into(),
        ));
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "search tree {p} and position tree {q} have different shapes"
        )));
    }
    let n = p.len();
    let mut letters = vec![Letter::new(0); n];
    for (&pos, &letter) in q.infix().iter().zip(p.infix()) {
        letters[pos - 1] = letter;
    }
    Ok(Word::new(letters))
}

/// Sum of q^maj over the permutation class of the shape.
pub fn class_maj_gf(t: &TreeShape) -> QPoly {
    shape_class(t, ClassMethod::Rewriting)
        .expect("rewriting enumeration is unbounded")
        .iter()
        .fold(QPoly::zero(), |acc, p| {
            acc.add(&QPoly::monomial(p.maj(), 1))
        })
}

/// The hook-length form of the class major-index generating function:
/// q^(sum of right-subtree sizes) [n]_q! divided by the product of [h]_q
/// over all subtree sizes h. The division must come out exact.
pub fn q_hook_formula(t: &TreeShape) -> Result<QPoly> {
    let stats = node_stats(t);
    let mut poly = QPoly::monomial(stats.total_delta(), 1).mul(&QPoly::q_factorial(stats.n()));
    for h in stats.hooks() {
        poly = poly.div_exact(&QPoly::q_int(h))?;
    }
    Ok(poly)
}

/// Number of permutations in the class of the shape: the hook formula at
/// q = 1, which is n! over the product of subtree sizes.
pub fn class_size(t: &TreeShape) -> u64 {
    q_hook_formula(t)
        .expect("hook division is exact")
        .eval_at_one() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::factorial;
    use crate::trees::{enumerate_shapes, Tree};
    use crate::words::{all_permutations, all_words};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> TreeShape {
        s.parse().unwrap()
    }

    // Independent oracle: group S_n by search tree.
    fn perm_classes(n: usize) -> Vec<Vec<Permutation>> {
        let mut map: std::collections::BTreeMap<LabeledTree, Vec<Permutation>> =
            Default::default();
        for perm in all_permutations(n) {
            map.entry(p_symbol(&perm.to_word())).or_default().push(perm);
        }
        map.into_values().collect()
    }

    #[test]
    fn moves_need_a_later_witness() {
        assert_eq!(elementary_moves(&p("132").to_word()), vec![p("312").to_word()]);
        assert_eq!(elementary_moves(&p("312").to_word()), vec![p("132").to_word()]);
        assert!(elementary_moves(&w("abc")).is_empty());
        assert!(elementary_moves(&w("")).is_empty());
    }

    #[test]
    fn oriented_moves_point_away_from_the_canonical_word() {
        assert_eq!(
            oriented_successors(&p("132").to_word()),
            vec![p("312").to_word()]
        );
        assert!(oriented_successors(&p("312").to_word()).is_empty());
    }

    #[test]
    fn moves_preserve_the_search_tree() {
        for word in all_words(3, 6) {
            for m in elementary_moves(&word) {
                assert!(sylvester_equivalent(&word, &m));
            }
        }
    }

    #[test]
    fn class_of_the_balanced_shape() {
        let t = shape("((. * .) * (. * .))");
        let cls = shape_class(&t, ClassMethod::Rewriting).unwrap();
        assert_eq!(cls, vec![p("132"), p("312")]);
        assert_eq!(shape_class(&t, ClassMethod::Oracle).unwrap(), cls);
    }

    #[test]
    fn left_comb_classes_are_singletons() {
        for n in 1..=6 {
            let comb = (1..n).fold(TreeShape::leaf(()), |t, _| {
                TreeShape::node((), t, Tree::Empty)
            });
            let cls = shape_class(&comb, ClassMethod::Rewriting).unwrap();
            assert_eq!(cls, vec![Permutation::identity(n)]);
        }
    }

    #[test]
    fn worked_class_contains_word_and_minimum() {
        let cls = word_class(&w("bacaabca"), ClassMethod::Rewriting).unwrap();
        assert!(cls.contains(&w("bacaabca")));
        assert_eq!(cls[0], w("aaabcbca"));
        assert_eq!(canonical_word(&w("bacaabca")), w("aaabcbca"));
        assert_eq!(
            word_class(&w("bacaabca"), ClassMethod::Oracle).unwrap(),
            cls
        );
    }

    #[test]
    fn rewriting_matches_oracle_on_small_words() {
        for word in all_words(3, 5) {
            assert_eq!(
                word_class(&word, ClassMethod::Rewriting).unwrap(),
                word_class(&word, ClassMethod::Oracle).unwrap()
            );
        }
    }

    #[test]
    fn oracle_refuses_huge_rearrangement_classes() {
        let long = Word::from_ranks(&(0..13).collect::<Vec<_>>());
        assert!(matches!(
            word_class(&long, ClassMethod::Oracle),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn tree_words_are_class_canonicals() {
        assert!(is_tree_word(&p("132")));
        assert!(!is_tree_word(&p("312")));
        for n in 0..=6 {
            let count = all_permutations(n).iter().filter(|q| is_tree_word(q)).count() as u64;
            assert_eq!(count, crate::trees::catalan(n));
        }
    }

    #[test]
    fn correspondence_roundtrip() {
        for word in all_words(3, 5) {
            let (pt, qt) = correspondence(&word);
            assert_eq!(pt.shape(), qt.shape());
            assert_eq!(inverse_correspondence(&pt, &qt).unwrap(), word);
        }
    }

    #[test]
    fn correspondence_is_onto_equal_shape_pairs() {
        // Count (search tree, decreasing tree) pairs of equal shape over a
        // 3-letter alphabet: the total must be 3^n.
        fn bst_count(t: &TreeShape, lo: u32, hi: u32) -> u64 {
            match t {
                Tree::Empty => 1,
                Tree::Node(n) => (lo..hi)
                    .map(|x| bst_count(&n.left, lo, x + 1) * bst_count(&n.right, x + 1, hi))
                    .sum(),
            }
        }
        fn binom(n: usize, k: usize) -> u64 {
            (0..k).fold(1, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
        }
        fn dec_count(t: &TreeShape) -> u64 {
            match t {
                Tree::Empty => 1,
                Tree::Node(n) => {
                    binom(t.len() - 1, n.left.len()) * dec_count(&n.left) * dec_count(&n.right)
                }
            }
        }
        for n in 0..=5 {
            let mut total = 0u64;
            for t in enumerate_shapes(n) {
                total += bst_count(&t, 0, 3) * dec_count(&t);
            }
            assert_eq!(total, 3u64.pow(n as u32));
        }
    }

    #[test]
    fn inverse_correspondence_rejects_bad_pairs() {
        let pt = p_symbol(&w("ab"));
        let qt = q_symbol(&w("ba"));
        assert!(matches!(
            inverse_correspondence(&pt, &qt),
            Err(Error::ShapeMismatch(_))
        ));
        let bad_bst: LabeledTree = "((. b .) a .)".parse().unwrap();
        assert!(inverse_correspondence(&bad_bst, &q_symbol(&w("aa"))).is_err());
        let bad_dec: DecreasingTree = "((. 2 .) 1 .)".parse().unwrap();
        assert!(inverse_correspondence(&p_symbol(&w("aa")), &bad_dec).is_err());
    }

    #[test]
    fn maj_generating_functions_of_small_shapes() {
        let balanced = shape("((. * .) * (. * .))");
        assert_eq!(class_maj_gf(&balanced).to_string(), "q + q^2");
        let right_comb = shape("(. * (. * (. * .)))");
        assert_eq!(class_maj_gf(&right_comb).to_string(), "q^3");
        assert_eq!(class_maj_gf(&Tree::Empty), QPoly::one());
    }

    #[test]
    fn hook_formula_on_small_shapes() {
        let balanced = shape("((. * .) * (. * .))");
        assert_eq!(q_hook_formula(&balanced).unwrap().to_string(), "q + q^2");
        for n in 1..=6 {
            let comb = (1..n).fold(TreeShape::leaf(()), |t, _| {
                TreeShape::node((), t, Tree::Empty)
            });
            assert_eq!(q_hook_formula(&comb).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn hook_formula_matches_class_enumeration() {
        for n in 0..=6 {
            for t in enumerate_shapes(n) {
                assert_eq!(q_hook_formula(&t).unwrap(), class_maj_gf(&t));
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorials() {
        let balanced = shape("((. * .) * (. * .))");
        assert_eq!(class_size(&balanced), 2);
        for n in 0..=7 {
            let total: u64 = enumerate_shapes(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn partition_by_moves_equals_partition_by_trees() {
        // Theorem check at small scale; the acceptance suite pushes this
        // to S_7 and longer alphabet words.
        for classes in perm_classes(5) {
            let seed = classes[0].to_word();
            let closure: BTreeSet<Word> = {
                let mut seen = BTreeSet::new();
                let mut stack = vec![seed];
                while let Some(x) = stack.pop() {
                    if seen.insert(x.clone()) {
                        stack.extend(elementary_moves(&x));
                    }
                }
                seen
            };
            let expect: BTreeSet<Word> = classes.iter().map(|p| p.to_word()).collect();
            assert_eq!(closure, expect);
        }
    }
}
