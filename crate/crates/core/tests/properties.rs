//! Cross-module invariants: congruence compatibility, Hopf-algebra
//! axioms on the fundamental bases, duality adjointness, and order
//! structure, checked exhaustively at small sizes plus randomized
//! round trips.

use std::collections::BTreeMap;

use proptest::prelude::*;
use sylv_core::{
    all_permutations, all_words, correspondence, f_coproduct, f_product, g_coproduct,
    inverse_correspondence, p_symbol, pairing, sylvester_equivalent, tree_leq, Coeff,
    FQSymElement, Letter, Permutation, QPoly, Tree, TreeShape, Word,
};

fn classes(alphabet: usize, len: usize) -> Vec<Vec<Word>> {
    let mut map: BTreeMap<_, Vec<Word>> = BTreeMap::new();
    for w in all_words(alphabet, len) {
        map.entry(p_symbol(&w)).or_default().push(w);
    }
    map.into_values().collect()
}

#[test]
fn congruence_is_compatible_with_concatenation() {
    for len in 0..=4 {
        for class in classes(3, len) {
            let u = &class[0];
            for v in &class[1..] {
                for r in 0..3 {
                    let a = Word::from_ranks(&[r]);
                    assert!(sylvester_equivalent(&u.concat(&a), &v.concat(&a)));
                    assert!(sylvester_equivalent(&a.concat(u), &a.concat(v)));
                }
            }
        }
    }
}

#[test]
fn congruence_respects_interval_restriction() {
    for len in 0..=5 {
        for class in classes(4, len) {
            let u = &class[0];
            for v in &class[1..] {
                for lo in 0..4 {
                    for hi in lo..4 {
                        let (lo, hi) = (Letter::new(lo), Letter::new(hi));
                        assert!(
                            sylvester_equivalent(
                                &u.restrict_interval(lo, hi),
                                &v.restrict_interval(lo, hi)
                            ),
                            "restriction to [{lo}, {hi}] separates {u} and {v}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn standardization_commutes_with_insertion() {
    for len in 0..=6 {
        for w in all_words(4, len) {
            assert_eq!(
                p_symbol(&w).shape(),
                p_symbol(&w.standardize().to_word()).shape(),
                "shape of {w} changes under standardization"
            );
        }
    }
}

#[test]
fn equivalence_reduces_to_standardized_words() {
    for len in 0..=4 {
        for u in all_words(3, len) {
            for v in all_words(3, len) {
                let same_content = {
                    let mut a = u.ranks();
                    let mut b = v.ranks();
                    a.sort_unstable();
                    b.sort_unstable();
                    a == b
                };
                assert_eq!(
                    sylvester_equivalent(&u, &v),
                    same_content
                        && sylvester_equivalent(
                            &u.standardize().to_word(),
                            &v.standardize().to_word()
                        ),
                    "{u} vs {v}"
                );
            }
        }
    }
}

#[test]
fn product_is_associative_on_generators() {
    for total in 0..=4 {
        for n1 in 0..=total {
            for n2 in 0..=(total - n1) {
                let n3 = total - n1 - n2;
                for s in all_permutations(n1) {
                    for t in all_permutations(n2) {
                        for u in all_permutations(n3) {
                            let fs = FQSymElement::f(s.clone());
                            let ft = FQSymElement::f(t.clone());
                            let fu = FQSymElement::f(u.clone());
                            assert_eq!(
                                fs.product(&ft).product(&fu),
                                fs.product(&ft.product(&fu)),
                                "associativity fails on F[{s}], F[{t}], F[{u}]"
                            );
                        }
                    }
                }
            }
        }
    }
}

type Triple = BTreeMap<(Permutation, Permutation, Permutation), Coeff>;

#[test]
fn coproduct_is_coassociative_on_generators() {
    for n in 0..=4 {
        for sigma in all_permutations(n) {
            let delta = f_coproduct(&sigma);
            let mut left: Triple = BTreeMap::new();
            let mut right: Triple = BTreeMap::new();
            for ((u, v), &c) in delta.terms() {
                for ((a, b), &d) in f_coproduct(u).terms() {
                    *left.entry((a.clone(), b.clone(), v.clone())).or_insert(0) += c * d;
                }
                for ((a, b), &d) in f_coproduct(v).terms() {
                    *right.entry((u.clone(), a.clone(), b.clone())).or_insert(0) += c * d;
                }
            }
            assert_eq!(left, right, "coassociativity fails on F[{sigma}]");
        }
    }
}

#[test]
fn coproduct_of_product_is_product_of_coproducts() {
    for total in 0..=4 {
        for n1 in 0..=total {
            for s in all_permutations(n1) {
                for t in all_permutations(total - n1) {
                    assert_eq!(
                        f_product(&s, &t).coproduct(),
                        f_coproduct(&s).product(&f_coproduct(&t)),
                        "bialgebra axiom fails on F[{s}], F[{t}]"
                    );
                }
            }
        }
    }
}

#[test]
fn product_is_adjoint_to_coproduct() {
    for total in 0..=5 {
        for nu in all_permutations(total) {
            let delta = g_coproduct(&nu);
            let g_nu = FQSymElement::g(nu.clone());
            for n1 in 0..=total {
                for s in all_permutations(n1) {
                    for t in all_permutations(total - n1) {
                        assert_eq!(
                            pairing(&f_product(&s, &t), &g_nu),
                            delta.coeff(&s, &t),
                            "adjointness fails on F[{s}]F[{t}] against G[{nu}]"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn pairing_is_kronecker_on_dual_bases() {
    for n in 0..=5 {
        for s in all_permutations(n) {
            for t in all_permutations(n) {
                let expected = Coeff::from(s == t);
                assert_eq!(
                    pairing(&FQSymElement::f(s.clone()), &FQSymElement::g(t.clone())),
                    expected
                );
            }
        }
    }
}

fn comb(n: usize, to_right: bool) -> TreeShape {
    let mut t = Tree::Empty;
    for _ in 0..n {
        t = if to_right {
            Tree::node((), Tree::Empty, t)
        } else {
            Tree::node((), t, Tree::Empty)
        };
    }
    t
}

#[test]
fn tree_order_is_a_partial_order_with_comb_extremes() {
    for n in 0..=5 {
        let shapes = sylv_core::enumerate_shapes(n);
        let leq = |a: &TreeShape, b: &TreeShape| tree_leq(a, b).unwrap();
        for a in &shapes {
            assert!(leq(a, a));
            assert!(leq(&comb(n, false), a), "left comb is the minimum");
            assert!(leq(a, &comb(n, true)), "right comb is the maximum");
            for b in &shapes {
                if leq(a, b) && leq(b, a) {
                    assert_eq!(a, b, "antisymmetry fails");
                }
                for c in &shapes {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c), "transitivity fails");
                    }
                }
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

proptest! {
    #[test]
    fn correspondence_round_trips(ranks in proptest::collection::vec(0u32..4, 0..8)) {
        let w = Word::from_ranks(&ranks);
        let (p, q) = correspondence(&w);
        prop_assert_eq!(inverse_correspondence(&p, &q).unwrap(), w);
    }

    #[test]
    fn shuffle_has_binomial_cardinality(
        u in proptest::collection::vec(0u32..3, 0..5),
        v in proptest::collection::vec(0u32..3, 0..5),
    ) {
        let shuffles = sylv_core::shuffle(&Word::from_ranks(&u), &Word::from_ranks(&v));
        prop_assert_eq!(shuffles.len(), binomial(u.len() + v.len(), u.len()));
    }

    #[test]
    fn shifted_shuffle_is_multiplicity_free(a in 0usize..4, b in 0usize..4, seed in 0usize..100) {
        let s = &all_permutations(a)[seed % all_permutations(a).len()];
        let t = &all_permutations(b)[seed % all_permutations(b).len()];
        let shuffles = sylv_core::shifted_shuffle_perms(s, t);
        prop_assert_eq!(shuffles.len(), binomial(a + b, a));
        let distinct: std::collections::BTreeSet<_> = shuffles.iter().collect();
        prop_assert_eq!(distinct.len(), shuffles.len());
    }

    #[test]
    fn exact_polynomial_division_round_trips(
        a in proptest::collection::vec(-4i64..5, 1..5),
        b in proptest::collection::vec(-4i64..5, 1..5),
    ) {
        let pa = QPoly::from_coeffs(a);
        let pb = QPoly::from_coeffs(b);
        prop_assume!(!pa.is_zero());
        prop_assert_eq!(pa.mul(&pb).div_exact(&pa).unwrap(), pb);
    }

    #[test]
    fn standardize_is_idempotent(ranks in proptest::collection::vec(0u32..6, 0..9)) {
        let w = Word::from_ranks(&ranks);
        let s = w.standardize();
        prop_assert_eq!(s.to_word().standardize(), s);
    }
}
