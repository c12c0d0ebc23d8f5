//! Sylvester monoid on words, the search-tree correspondence, and the
//! Loday-Ronco algebra of planar binary trees inside free quasi-symmetric
//! functions.
//!
//! The crate is organized by structure:
//!
//! * [`words`]: letters, words, permutations, shuffles, standardization.
//! * [`trees`]: planar binary trees, search-tree insertion, the pair of
//!   symbols attached to a word, readings and hook statistics.
//! * [`sylvester`]: the congruence generated by local moves, class
//!   enumeration, and the q-hook-length formula for class sizes.
//! * [`qpoly`]: exact integer polynomials in q.
//! * [`fqsym`]: free quasi-symmetric functions on the fundamental bases,
//!   their product, coproduct, pairing, and polynomial realization.
//! * [`pbt`]: the tree subalgebra and its dual, the projection onto
//!   search-tree monomials, and the two order structures.
//! * [`graphs`]: the pair of graded graphs on trees and their duality.
//! * [`verify`]: the acceptance criteria, runnable as named suites.
//!
//! Everything is exact: integer coefficients, no floating point, and the
//! expensive constructions carry independent cross-checks in the test
//! suites.

pub mod coeff;
pub mod error;
pub mod fqsym;
pub mod graphs;
pub mod pbt;
pub mod qpoly;
pub mod sylvester;
pub mod trees;
pub mod verify;
pub mod words;

pub use coeff::{factorial, Coeff};
pub use error::{Error, Result};
pub use fqsym::{
    cauchy_check, expand_polynomial, f_coproduct, f_product, g_coproduct, g_product, pairing,
    principal_specialization, Basis, FQSymElement, NCPolynomial, TensorElement,
};
pub use graphs::{
    fomin_duality_check, gamma_edges, gamma_star_edges, path_count_total, path_counts,
    DualityReport, GradedGraphPair, Orientation,
};
pub use pbt::{
    class_interval, duality_check, p_coproduct, p_product, p_to_f, pi_project, pi_project_word,
    q_dual_product, sh_interval, tree_leq, tree_order_hasse, weak_order_leq,
    MonoidAlgebraElement, PBTElement, PBTTensor, TreeBasis,
};
pub use qpoly::QPoly;
pub use sylvester::{
    canonical_word, class_maj_gf, class_size, correspondence, elementary_moves,
    inverse_correspondence, is_tree_word, oriented_successors, q_hook_formula,
    shape_class, sylvester_equivalent, word_class, ClassMethod,
};
pub use trees::{
    canonical_perm, catalan, decreasing_tree, enumerate_shapes, infix_reading, node_stats,
    p_symbol, parse_tree, postfix_reading, q_symbol, relabel, DecreasingTree, LabeledTree,
    NodeStat, NodeStats, Tree, TreeLabel, TreeNode, TreeShape,
};
pub use verify::{run_criterion, run_suite, CriterionReport, Suite};
pub use words::{
    all_permutations, all_words, shifted_shuffle, shifted_shuffle_perms, shuffle, Letter,
    Permutation, Word,
};
