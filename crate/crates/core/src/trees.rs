//! Binary trees: labeled search trees, decreasing trees, and unlabeled
//! shapes.
//!
//! Trees are incomplete binary trees. The canonical text form is
//!
//! ```text
//! tree  := "." | "(" tree " " label " " tree ")"
//! label := lowercase letter | unsigned integer | "*"
//! ```
//!
//! with exactly one space around labels when serializing. `.` is the empty
//! tree, `*` marks the nodes of an unlabeled shape. The JSON form is `null`
//! for the empty tree and `{"label": .., "left": .., "right": ..}` otherwise
//! (label `null` on shapes).

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::words::{Letter, Permutation, Word};

/// Node labels that know how to print and parse themselves inside the tree
/// grammar.
pub trait TreeLabel: Clone + Eq + Ord + Hash {
    fn fmt_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn parse_token(tok: &str) -> Option<Self>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Option<Self>;
}

impl TreeLabel for Letter {
    fn fmt_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }

    fn parse_token(tok: &str) -> Option<Self> {
        let mut chars = tok.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => Letter::from_char(c),
            _ => tok.parse::<u32>().ok().map(Letter::new),
        }
    }

    fn to_json(&self) -> Value {
        if self.rank() < 26 {
            Value::String(self.to_string())
        } else {
            json!(self.rank())
        }
    }

    fn from_json(v: &Value) -> Option<Self> {
        match v {
            Value::String(s) => Self::parse_token(s),
            Value::Number(n) => n.as_u64().map(|r| Letter::new(r as u32)),
            _ => None,
        }
    }
}

// Position labels of decreasing trees: integers 1..n.
impl TreeLabel for usize {
    fn fmt_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }

    fn parse_token(tok: &str) -> Option<Self> {
        tok.parse().ok()
    }

    fn to_json(&self) -> Value {
        json!(self)
    }

    fn from_json(v: &Value) -> Option<Self> {
        v.as_u64().map(|x| x as usize)
    }
}

// Unlabeled shape nodes.
impl TreeLabel for () {
    fn fmt_label(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*")
    }

    fn parse_token(tok: &str) -> Option<Self> {
        (tok == "*").then_some(())
    }

    fn to_json(&self) -> Value {
        Value::Null
    }

    fn from_json(v: &Value) -> Option<Self> {
        v.is_null().then_some(())
    }
}

/// An incomplete binary tree with labels of type `L`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree<L> {
    #[default]
    Empty,
    Node(Box<TreeNode<L>>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeNode<L> {
    pub label: L,
    pub left: Tree<L>,
    pub right: Tree<L>,
}

/// A binary search tree over the alphabet.
pub type LabeledTree = Tree<Letter>;
/// A tree labeled by positions 1..n, decreasing from the root.
pub type DecreasingTree = Tree<usize>;
/// An unlabeled tree shape.
pub type TreeShape = Tree<()>;

impl<L> Tree<L> {
    pub fn node(label: L, left: Tree<L>, right: Tree<L>) -> Self {
        Tree::Node(Box::new(TreeNode { label, left, right }))
    }

    pub fn leaf(label: L) -> Self {
        Tree::node(label, Tree::Empty, Tree::Empty)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Tree::Empty)
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        match self {
            Tree::Empty => 0,
            Tree::Node(n) => 1 + n.left.len() + n.right.len(),
        }
    }

    pub fn map<M>(&self, f: &mut impl FnMut(&L) -> M) -> Tree<M> {
        match self {
            Tree::Empty => Tree::Empty,
            Tree::Node(n) => {
                let left = n.left.map(f);
                let label = f(&n.label);
                let right = n.right.map(f);
                Tree::node(label, left, right)
            }
        }
    }

    /// Forgets the labels.
    pub fn shape(&self) -> TreeShape {
        self.map(&mut |_| ())
    }

    /// Labels in left-root-right order.
    pub fn infix(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.walk_infix(&mut out);
        out
    }

    fn walk_infix<'a>(&'a self, out: &mut Vec<&'a L>) {
        if let Tree::Node(n) = self {
            n.left.walk_infix(out);
            out.push(&n.label);
            n.right.walk_infix(out);
        }
    }

    /// Labels in left-right-root order.
    pub fn postfix(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.walk_postfix(&mut out);
        out
    }

    fn walk_postfix<'a>(&'a self, out: &mut Vec<&'a L>) {
        if let Tree::Node(n) = self {
            n.left.walk_postfix(out);
            n.right.walk_postfix(out);
            out.push(&n.label);
        }
    }
}

impl<L: TreeLabel> Tree<L> {
    pub fn to_json(&self) -> Value {
        match self {
            Tree::Empty => Value::Null,
            Tree::Node(n) => json!({
                "label": n.label.to_json(),
                "left": n.left.to_json(),
                "right": n.right.to_json(),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Null => Ok(Tree::Empty),
            Value::Object(map) => {
                let label = map
                    .get("label")
                    .and_then(L::from_json)
                    .ok_or_else(|| Error::Json("bad tree label".into()))?;
                let left = Self::from_json(map.get("left").unwrap_or(&Value::Null))?;
                let right = Self::from_json(map.get("right").unwrap_or(&Value::Null))?;
                Ok(Tree::node(label, left, right))
            }
            _ => Err(Error::Json("expected null or a tree object".into())),
        }
    }
}

impl<L: TreeLabel> fmt::Display for Tree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Empty => write!(f, "."),
            Tree::Node(n) => {
                write!(f, "({} ", n.left)?;
                n.label.fmt_label(f)?;
                write!(f, " {})", n.right)
            }
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_spaces(&mut self) -> Result<()> {
        if self.peek() != Some(b' ') {
            return Err(self.err("expected a space"));
        }
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
        Ok(())
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn tree<L: TreeLabel>(&mut self) -> Result<Tree<L>> {
        match self.peek() {
            Some(b'.') => {
                self.pos += 1;
                Ok(Tree::Empty)
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.tree()?;
                self.skip_spaces()?;
                let start = self.pos;
                while self
                    .peek()
                    .map(|b| b != b' ' && b != b'(' && b != b')')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let tok = std::str::from_utf8(&self.bytes[start..self.pos])
                    .map_err(|_| self.err("label is not utf-8"))?;
                let label = L::parse_token(tok).ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: format!("invalid label {tok:?}"),
                })?;
                self.skip_spaces()?;
                let right = self.tree()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(Tree::node(label, left, right))
            }
            _ => Err(self.err("expected '.' or '('")),
        }
    }
}

/// Parses the canonical tree grammar; runs of spaces are tolerated where the
/// grammar requires one space.
pub fn parse_tree<L: TreeLabel>(s: &str) -> Result<Tree<L>> {
    let mut c = Cursor {
        bytes: s.trim().as_bytes(),
        pos: 0,
    };
    let t = c.tree()?;
    if c.pos != c.bytes.len() {
        return Err(c.err("trailing input after tree"));
    }
    Ok(t)
}

impl<L: TreeLabel> FromStr for Tree<L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

/// Inserts `x` at a leaf, descending left on `x <= label` and right
/// otherwise.
pub fn bst_insert(t: LabeledTree, x: Letter) -> LabeledTree {
    match t {
        Tree::Empty => Tree::leaf(x),
        Tree::Node(mut n) => {
            if x <= n.label {
                n.left = bst_insert(n.left, x);
            } else {
                n.right = bst_insert(n.right, x);
            }
            Tree::Node(n)
        }
    }
}

impl LabeledTree {
    /// Search tree predicate: every left label is <= its node label and
    /// every right label is strictly greater.
    pub fn is_bst(&self) -> bool {
        fn check(t: &LabeledTree, lo: Option<Letter>, hi: Option<Letter>) -> bool {
            match t {
                Tree::Empty => true,
                Tree::Node(n) => {
                    lo.map(|l| n.label > l).unwrap_or(true)
                        && hi.map(|h| n.label <= h).unwrap_or(true)
                        && check(&n.left, lo, Some(n.label))
                        && check(&n.right, Some(n.label), hi)
                }
            }
        }
        check(self, None, None)
    }
}

impl DecreasingTree {
    /// Labels are exactly {1..n} and decrease from the root.
    pub fn is_decreasing(&self) -> bool {
        fn check(t: &DecreasingTree, parent: Option<usize>) -> bool {
            match t {
                Tree::Empty => true,
                Tree::Node(n) => {
                    parent.map(|p| n.label < p).unwrap_or(true)
                        && check(&n.left, Some(n.label))
                        && check(&n.right, Some(n.label))
                }
            }
        }
        let n = self.len();
        let mut seen = vec![false; n];
        for &l in self.infix() {
            if l == 0 || l > n || seen[l - 1] {
                return false;
            }
            seen[l - 1] = true;
        }
        check(self, None)
    }
}

/// Inserts the letters of `w` from right to left into an empty search tree.
pub fn p_symbol(w: &Word) -> LabeledTree {
    w.letters()
        .iter()
        .rev()
        .fold(Tree::Empty, |t, &x| bst_insert(t, x))
}

/// Builds the tree whose root carries the largest value, recursing on the
/// factors to its left and right. Values must be distinct.
fn decreasing_from(vals: &[usize]) -> DecreasingTree {
    match vals.iter().enumerate().max_by_key(|(_, &v)| v) {
        None => Tree::Empty,
        Some((i, &v)) => Tree::node(v, decreasing_from(&vals[..i]), decreasing_from(&vals[i + 1..])),
    }
}

pub fn decreasing_tree(p: &Permutation) -> DecreasingTree {
    decreasing_from(p.entries())
}

/// The decreasing tree of the inverse standardization; it records at which
/// positions the letters of `w` were consumed by `p_symbol`.
pub fn q_symbol(w: &Word) -> DecreasingTree {
    decreasing_tree(&w.standardize().inverse())
}

/// Replaces position label i by the i-th letter of `w`.
pub fn relabel(q: &DecreasingTree, w: &Word) -> Result<LabeledTree> {
    let n = q.len();
    if n != w.len() {
        return Err(Error::LengthMismatch(format!(
            "tree has {n} nodes but word has {} letters",
            w.len()
        )));
    }
    let mut seen = vec![false; n];
    for &l in q.infix() {
        if l == 0 || l > n || seen[l - 1] {
            return Err(Error::InvalidLabeling(format!(
                "labels are not a rearrangement of 1..{n}"
            )));
        }
        seen[l - 1] = true;
    }
    Ok(q.map(&mut |&i| w.letters()[i - 1]))
}

pub fn infix_reading(t: &LabeledTree) -> Word {
    Word::new(t.infix().into_iter().copied().collect())
}

pub fn postfix_reading(t: &LabeledTree) -> Word {
    Word::new(t.postfix().into_iter().copied().collect())
}

/// Labels the shape 1..n in infix order and reads the labels in postfix
/// order; this is the canonical word of the shape's class.
pub fn canonical_perm(t: &TreeShape) -> Permutation {
    fn number(t: &TreeShape, next: &mut usize) -> DecreasingTree {
        match t {
            Tree::Empty => Tree::Empty,
            Tree::Node(n) => {
                let left = number(&n.left, next);
                let label = *next;
                *next += 1;
                let right = number(&n.right, next);
                Tree::node(label, left, right)
            }
        }
    }
    let mut next = 1;
    let numbered = number(t, &mut next);
    Permutation::new(numbered.postfix().into_iter().copied().collect())
        .expect("infix labels read in postfix order form a permutation")
}

/// Per-node subtree statistics: `h` is the size of the subtree rooted at
/// the node, `delta` the size of its right subtree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeStat {
    pub h: usize,
    pub delta: usize,
}

/// Statistics for every node, in infix order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeStats(pub Vec<NodeStat>);

impl NodeStats {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn total_delta(&self) -> usize {
        self.0.iter().map(|s| s.delta).sum()
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.h).collect()
    }
}

pub fn node_stats(t: &TreeShape) -> NodeStats {
    fn walk(t: &TreeShape, out: &mut Vec<NodeStat>) -> usize {
        match t {
            Tree::Empty => 0,
            Tree::Node(n) => {
                let hl = walk(&n.left, out);
                let at = out.len();
                out.push(NodeStat { h: 0, delta: 0 });
                let hr = walk(&n.right, out);
                out[at] = NodeStat {
                    h: hl + hr + 1,
                    delta: hr,
                };
                hl + hr + 1
            }
        }
    }
    let mut out = Vec::new();
    walk(t, &mut out);
    NodeStats(out)
}

/// All shapes with n nodes, ordered by the size of the left subtree
/// (smaller first), then recursively by the same rule on both subtrees.
pub fn enumerate_shapes(n: usize) -> Vec<TreeShape> {
    let mut by_size: Vec<Vec<TreeShape>> = vec![vec![Tree::Empty]];
    for k in 1..=n {
        let mut level = Vec::new();
        for l in 0..k {
            for left in &by_size[l] {
                for right in &by_size[k - 1 - l] {
                    level.push(Tree::node((), left.clone(), right.clone()));
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(n)
}

/// The n-th Catalan number.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for k in 1..=n {
        for l in 0..k {
            c[k] = c[k]
                .checked_add(c[l] * c[k - 1 - l])
                .expect("catalan overflow");
        }
    }
    c[n]
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

    const P_TREE: &str = "((((. a .) a .) a .) a (((. b .) b (. c .)) c .))";
    const Q_TREE: &str = "((((. 2 .) 4 .) 5 .) 8 (((. 1 .) 6 (. 3 .)) 7 .))";

    #[test]
    fn worked_example_p_symbol() {
        assert_eq!(p_symbol(&w("bacaabca")).to_string(), P_TREE);
    }

    #[test]
    fn worked_example_q_symbol() {
        assert_eq!(q_symbol(&w("bacaabca")).to_string(), Q_TREE);
    }

    #[test]
    fn bst_insert_descends_left_on_ties() {
        let t = bst_insert(LabeledTree::leaf(Letter::new(0)), Letter::new(0));
        assert_eq!(t.to_string(), "((. a .) a .)");
    }

    #[test]
    fn p_symbol_is_a_search_tree() {
        for word in crate::words::all_words(3, 6) {
            assert!(p_symbol(&word).is_bst());
        }
    }

    #[test]
    fn q_symbol_is_decreasing() {
        for word in crate::words::all_words(3, 5) {
            assert!(q_symbol(&word).is_decreasing());
        }
    }

    #[test]
    fn decreasing_tree_of_chain() {
        let t = decreasing_tree(&p("321"));
        assert_eq!(t.to_string(), "(. 3 (. 2 (. 1 .)))");
    }

    #[test]
    fn relabel_reconstructs_p_symbol() {
        let word = w("bacaabca");
        assert_eq!(relabel(&q_symbol(&word), &word).unwrap(), p_symbol(&word));
        let z = relabel(&DecreasingTree::leaf(1), &w("z")).unwrap();
        assert_eq!(z.to_string(), "(. z .)");
        assert!(relabel(&DecreasingTree::leaf(1), &w("ab")).is_err());
        assert!(relabel(&DecreasingTree::leaf(2), &w("a")).is_err());
    }

    #[test]
    fn relabel_rebuilds_every_small_word() {
        for word in crate::words::all_words(3, 5) {
            assert_eq!(relabel(&q_symbol(&word), &word).unwrap(), p_symbol(&word));
        }
    }

    #[test]
    fn readings_of_the_worked_tree() {
        let t = p_symbol(&w("bacaabca"));
        assert_eq!(postfix_reading(&t), w("aaabcbca"));
        assert_eq!(infix_reading(&t), w("aaaabbcc"));
    }

    #[test]
    fn infix_reading_is_sorted() {
        for word in crate::words::all_words(3, 6) {
            let mut sorted = word.letters().to_vec();
            sorted.sort();
            assert_eq!(infix_reading(&p_symbol(&word)), Word::new(sorted));
        }
    }

    #[test]
    fn canonical_perm_of_worked_shape() {
        let t = p_symbol(&w("bacaabca"));
        assert_eq!(canonical_perm(&t.shape()), p("12357684"));
        assert_eq!(w("aaabcbca").standardize(), p("12357684"));
    }

    #[test]
    fn canonical_perm_matches_standardized_postfix() {
        for shape in enumerate_shapes(6) {
            let perm = canonical_perm(&shape);
            assert_eq!(perm.to_word().standardize(), perm);
            assert_eq!(p_symbol(&perm.to_word()).shape(), shape);
        }
    }

    #[test]
    fn node_stats_of_right_comb() {
        let comb: TreeShape = "(. * (. * (. * .)))".parse().unwrap();
        let stats = node_stats(&comb);
        assert_eq!(stats.hooks(), vec![3, 2, 1]);
        assert_eq!(
            stats.0.iter().map(|s| s.delta).collect::<Vec<_>>(),
            vec![2, 1, 0]
        );
        assert_eq!(stats.total_delta(), 3);
    }

    #[test]
    fn node_stats_are_additive() {
        for shape in enumerate_shapes(5) {
            let stats = node_stats(&shape);
            assert_eq!(stats.n(), 5);
            let root = stats.0.iter().max_by_key(|s| s.h).unwrap();
            assert_eq!(root.h, 5);
        }
    }

    #[test]
    fn shape_counts_are_catalan() {
        let expect = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(catalan(n), c);
        }
        assert_eq!(enumerate_shapes(4).len(), 14);
        assert_eq!(enumerate_shapes(0), vec![Tree::Empty]);
    }

    #[test]
    fn enumeration_orders_by_left_subtree_size() {
        let shapes = enumerate_shapes(3);
        let strs: Vec<String> = shapes.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            strs,
            vec![
                "(. * (. * (. * .)))",
                "(. * ((. * .) * .))",
                "((. * .) * (. * .))",
                "((. * (. * .)) * .)",
                "(((. * .) * .) * .)",
            ]
        );
    }

    #[test]
    fn text_roundtrip() {
        for s in [".", "(. a .)", P_TREE] {
            let t: LabeledTree = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let q: DecreasingTree = Q_TREE.parse().unwrap();
        assert_eq!(q.to_string(), Q_TREE);
        let shape: TreeShape = "((. * .) * .)".parse().unwrap();
        assert_eq!(shape.to_string(), "((. * .) * .)");
    }

    #[test]
    fn parse_reports_positions() {
        match "((. a .) b".parse::<LabeledTree>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("(. q .)".parse::<TreeShape>().is_err());
        assert!("(. a .) x".parse::<LabeledTree>().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let t: LabeledTree = P_TREE.parse().unwrap();
        assert_eq!(LabeledTree::from_json(&t.to_json()).unwrap(), t);
        let q: DecreasingTree = Q_TREE.parse().unwrap();
        assert_eq!(DecreasingTree::from_json(&q.to_json()).unwrap(), q);
        let s: TreeShape = "(. * .)".parse().unwrap();
        assert_eq!(TreeShape::from_json(&s.to_json()).unwrap(), s);
        assert_eq!(TreeShape::from_json(&Value::Null).unwrap(), Tree::Empty);
    }

    #[test]
    fn shape_of_decreasing_tree_matches_p_symbol_shape() {
        for perm in crate::words::all_permutations(6) {
            let by_tree = decreasing_tree(&perm.inverse()).shape();
            let by_bst = p_symbol(&perm.to_word()).shape();
            assert_eq!(by_tree, by_bst);
        }
    }
}
