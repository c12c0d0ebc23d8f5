//! Two-dimensional ASCII layout for binary trees: one row of labels per
//! depth, connector rows with slashes between them. Display only; the
//! parenthesized grammar remains the round-trip form.

use std::fmt;

use sylv_core::{Tree, TreeLabel};

/// Adapter from the label formatting hook to `to_string`.
struct ShowLabel<'a, L: TreeLabel>(&'a L);

impl<L: TreeLabel> fmt::Display for ShowLabel<'_, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_label(f)
    }
}

struct Block {
    lines: Vec<String>,
    root: usize,
}

impl Block {
    fn width(&self) -> usize {
        self.lines.iter().map(|l| l.len()).max().unwrap_or(0)
    }
}

fn put(line: &mut String, col: usize, s: &str) {
    if line.len() < col {
        line.push_str(&" ".repeat(col - line.len()));
    }
    let tail: String = line.chars().skip(col + s.chars().count()).collect();
    line.truncate(col.min(line.len()));
    if line.len() < col {
        line.push_str(&" ".repeat(col - line.len()));
    }
    line.push_str(s);
    line.push_str(&tail);
}

fn shift(block: &mut Block, by: usize) {
    if by == 0 {
        return;
    }
    let pad = " ".repeat(by);
    for line in &mut block.lines {
        line.insert_str(0, &pad);
    }
    block.root += by;
}

fn merge(left: &Block, right: &Block, gap: usize) -> (Vec<String>, usize) {
    let offset = left.width() + gap;
    let height = left.lines.len().max(right.lines.len());
    let mut lines = Vec::with_capacity(height);
    for i in 0..height {
        let mut line = left.lines.get(i).cloned().unwrap_or_default();
        if let Some(r) = right.lines.get(i) {
            put(&mut line, offset, r);
        }
        lines.push(line);
    }
    (lines, offset + right.root)
}

fn block<L: TreeLabel>(t: &Tree<L>) -> Option<Block> {
    let node = match t {
        Tree::Empty => return None,
        Tree::Node(n) => n,
    };
    let label = ShowLabel(&node.label).to_string();
    let half = (label.chars().count().max(1) - 1) / 2;
    let left = block(&node.left);
    let right = block(&node.right);

    // Assemble the child canvas and pick the root anchor column.
    let (mut children, root, slashes) = match (left, right) {
        (None, None) => {
            return Some(Block {
                lines: vec![label],
                root: half,
            })
        }
        (Some(l), None) => {
            let root = l.root + 1;
            (l, root, vec![(l_slash(root), '/')])
        }
        (None, Some(mut r)) => {
            if r.root == 0 {
                shift(&mut r, 1);
            }
            let root = r.root - 1;
            (r, root, vec![(root + 1, '\\')])
        }
        (Some(l), Some(r)) => {
            let (lines, right_root) = merge(&l, &r, 2);
            let root = (l.root + right_root) / 2;
            let combined = Block { lines, root: l.root };
            (combined, root, vec![(l_slash(root), '/'), (root + 1, '\\')])
        }
    };

    // Shift everything right if the label would start left of column 0.
    let pad = half.saturating_sub(root);
    shift(&mut children, pad);
    let root = root + pad;

    let mut label_line = String::new();
    put(&mut label_line, root - half, &label);
    let mut connector = String::new();
    for (col, c) in slashes {
        put(&mut connector, col + pad, &c.to_string());
    }

    let mut lines = vec![label_line, connector];
    lines.append(&mut children.lines);
    Some(Block { lines, root })
}

fn l_slash(root: usize) -> usize {
    root.saturating_sub(1)
}

/// Renders a tree as indented rows, one per depth; the empty tree
/// renders as "(empty)".
pub fn render_tree<L: TreeLabel>(t: &Tree<L>) -> String {
    match block(t) {
        None => "(empty)".to_string(),
        Some(b) => b
            .lines
            .iter()
            .map(|l| l.trim_end())
            .collect::<Vec<_>>()
            .join("\n"),
    }
}
