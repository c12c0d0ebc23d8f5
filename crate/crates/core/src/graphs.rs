//! The pair of graded graphs on binary tree shapes.
//!
//! Vertices at level n are the shapes with n nodes. The first graph
//! joins T to every shape appearing in P_T P_dot; the second joins T to
//! every shape appearing in Q_T Q_dot over the smallest faithful
//! alphabet. The two are dual in Fomin's sense: down-after-up minus
//! up-after-down is the identity on every level, and the path counts
//! from the empty tree multiply out to n! level by level.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pbt::{p_product, q_dual_product_cached, PiCache};
use crate::trees::{enumerate_shapes, TreeShape};

/// Edges from level n to level n+1 of the product graph: T joins T'
/// when P_{T'} occurs in P_T P_dot.
pub fn gamma_edges(n: usize) -> Vec<(TreeShape, TreeShape)> {
    let dot = TreeShape::leaf(());
    let mut out = Vec::new();
    for t in enumerate_shapes(n) {
        for t_up in p_product(&t, &dot).terms().keys() {
            out.push((t.clone(), t_up.clone()));
        }
    }
    out.sort();
    out
}

/// Edges from level n to level n+1 of the dual graph: T joins T' when
/// Q_{T'} occurs in Q_T Q_dot over an alphabet of m letters.
pub fn gamma_star_edges(n: usize, m: u32) -> Result<Vec<(TreeShape, TreeShape)>> {
    let mut cache = PiCache::new();
    gamma_star_edges_cached(n, m, &mut cache)
}

fn gamma_star_edges_cached(
    n: usize,
    m: u32,
    cache: &mut PiCache,
) -> Result<Vec<(TreeShape, TreeShape)>> {
    let dot = TreeShape::leaf(());
    let mut out = Vec::new();
    for t in enumerate_shapes(n) {
        let product = q_dual_product_cached(&t, &dot, m, cache)?;
        for (t_up, &c) in product.terms() {
            if c != 1 {
                return Err(Error::IdentificationFailed(format!(
                    "edge {t} -> {t_up} carries multiplicity {c}"
                )));
            }
            out.push((t.clone(), t_up.clone()));
        }
    }
    out.sort();
    Ok(out)
}

/// Which graph supplies the up operator in the duality identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// U climbs the product graph, D descends the dual graph.
    ProductUp,
    /// U climbs the dual graph, D descends the product graph.
    DualUp,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::ProductUp => "product graph up, dual graph down",
            Orientation::DualUp => "dual graph up, product graph down",
        })
    }
}

/// Outcome of the duality verification.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub orientation: Orientation,
    pub ok: bool,
    pub levels_checked: usize,
    /// Level and vertex pair where down-up minus up-down first deviated
    /// from the identity matrix, if it did.
    pub counterexample: Option<(usize, TreeShape, TreeShape)>,
}

/// Both graphs built once, with per-level index adjacency.
pub struct GradedGraphPair {
    levels: Vec<Vec<TreeShape>>,
    gamma: Vec<Vec<(usize, usize)>>,
    gamma_star: Vec<Vec<(usize, usize)>>,
}

impl GradedGraphPair {
    /// Builds levels 0..=n_max and both edge sets between consecutive
    /// levels. The dual graph at level k uses the smallest faithful
    /// alphabet, k+1 letters.
    pub fn build(n_max: usize) -> Result<Self> {
        let levels: Vec<Vec<TreeShape>> = (0..=n_max).map(enumerate_shapes).collect();
        let index: Vec<BTreeMap<&TreeShape, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, t)| (t, i)).collect())
            .collect();
        let mut gamma = Vec::new();
        let mut gamma_star = Vec::new();
        let mut cache = PiCache::new();
        for k in 0..n_max {
            let to_pairs = |edges: Vec<(TreeShape, TreeShape)>| {
                edges
                    .into_iter()
                    .map(|(a, b)| (index[k][&a], index[k + 1][&b]))
                    .collect::<Vec<_>>()
            };
            gamma.push(to_pairs(gamma_edges(k)));
            gamma_star.push(to_pairs(gamma_star_edges_cached(k, k as u32 + 1, &mut cache)?));
        }
        Ok(GradedGraphPair {
            levels,
            gamma,
            gamma_star,
        })
    }

    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[TreeShape] {
        &self.levels[k]
    }

    /// Edges between levels k and k+1 as shape pairs.
    pub fn edges(&self, k: usize, dual: bool) -> Vec<(TreeShape, TreeShape)> {
        let src = if dual { &self.gamma_star[k] } else { &self.gamma[k] };
        src.iter()
            .map(|&(i, j)| (self.levels[k][i].clone(), self.levels[k + 1][j].clone()))
            .collect()
    }

    fn up_adjacency(&self, k: usize, dual: bool) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.levels[k].len()];
        let src = if dual { &self.gamma_star[k] } else { &self.gamma[k] };
        for &(i, j) in src {
            adj[i].push(j);
        }
        adj
    }

    fn down_adjacency(&self, k: usize, dual: bool) -> Vec<Vec<usize>> {
        // Predecessors at level k-1 of each vertex at level k.
        let mut adj = vec![Vec::new(); self.levels[k].len()];
        let src = if dual {
            &self.gamma_star[k - 1]
        } else {
            &self.gamma[k - 1]
        };
        for &(i, j) in src {
            adj[j].push(i);
        }
        adj
    }

    fn commutator_is_identity(
        &self,
        k: usize,
        orientation: Orientation,
    ) -> Option<(TreeShape, TreeShape)> {
        let dual_up = orientation == Orientation::DualUp;
        let up = self.up_adjacency(k, dual_up);
        let up_other = self.up_adjacency(k, !dual_up);
        let (down_self, down_other) = if k > 0 {
            (
                self.down_adjacency(k, !dual_up),
                self.down_adjacency(k, dual_up),
            )
        } else {
            (Vec::new(), Vec::new())
        };
        let count_common = |a: &[usize], b: &[usize]| -> i64 {
            a.iter().filter(|x| b.contains(x)).count() as i64
        };
        for s in 0..self.levels[k].len() {
            for s2 in 0..self.levels[k].len() {
                let du = count_common(&up[s], &up_other[s2]);
                let ud = if k > 0 {
                    count_common(&down_self[s], &down_other[s2])
                } else {
                    0
                };
                let expect = i64::from(s == s2);
                if du - ud != expect {
                    return Some((self.levels[k][s].clone(), self.levels[k][s2].clone()));
                }
            }
        }
        None
    }

    /// Checks down-up minus up-down on every level strictly below the
    /// top. The orientation is chosen by testing both on levels <= 3
    /// and keeping the first that works; the survivor is then run on
    /// everything.
    pub fn duality_report(&self) -> DualityReport {
        let check_max = self.n_max().saturating_sub(1);
        let gate_max = check_max.min(3);
        let mut orientation = Orientation::ProductUp;
        for candidate in [Orientation::ProductUp, Orientation::DualUp] {
            if (0..=gate_max).all(|k| self.commutator_is_identity(k, candidate).is_none()) {
                orientation = candidate;
                break;
            }
        }
        for k in 0..=check_max {
            if let Some((s, s2)) = self.commutator_is_identity(k, orientation) {
                return DualityReport {
                    orientation,
                    ok: false,
                    levels_checked: k,
                    counterexample: Some((k, s, s2)),
                };
            }
        }
        DualityReport {
            orientation,
            ok: true,
            levels_checked: check_max,
            counterexample: None,
        }
    }

    /// Numbers of saturated paths from the empty tree up to each vertex
    /// of level n, in the product graph and in the dual graph.
    pub fn path_counts(&self, n: usize) -> BTreeMap<TreeShape, (u64, u64)> {
        assert!(n <= self.n_max(), "level {n} was not built");
        let mut f = vec![1u64];
        let mut f_star = vec![1u64];
        for k in 0..n {
            let mut nf = vec![0u64; self.levels[k + 1].len()];
            for &(i, j) in &self.gamma[k] {
                nf[j] += f[i];
            }
            let mut nfs = vec![0u64; self.levels[k + 1].len()];
            for &(i, j) in &self.gamma_star[k] {
                nfs[j] += f_star[i];
            }
            f = nf;
            f_star = nfs;
        }
        self.levels[n]
            .iter()
            .cloned()
            .zip(f.into_iter().zip(f_star))
            .collect()
    }

    /// DOT rendering with one rank per level, solid product edges and
    /// dashed dual edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph graded {\n  rankdir=BT;\n  node [shape=box];\n");
        for level in &self.levels {
            out.push_str("  { rank=same;");
            for t in level {
                out.push_str(&format!(" \"{t}\";"));
            }
            out.push_str(" }\n");
        }
        for k in 0..self.gamma.len() {
            for (a, b) in self.edges(k, false) {
                out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
            }
            for (a, b) in self.edges(k, true) {
                out.push_str(&format!("  \"{a}\" -> \"{b}\" [style=dashed];\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    /// JSON adjacency lists keyed by the shape grammar.
    pub fn to_json(&self) -> Value {
        let adjacency = |dual: bool| -> Value {
            let mut map = serde_json::Map::new();
            for k in 0..self.gamma.len() {
                for i in 0..self.levels[k].len() {
                    map.entry(self.levels[k][i].to_string())
                        .or_insert_with(|| Value::Array(Vec::new()));
                }
                for (a, b) in self.edges(k, dual) {
                    map.get_mut(&a.to_string())
                        .and_then(Value::as_array_mut)
                        .expect("vertex registered above")
                        .push(Value::String(b.to_string()));
                }
            }
            for t in &self.levels[self.levels.len() - 1] {
                map.entry(t.to_string())
                    .or_insert_with(|| Value::Array(Vec::new()));
            }
            Value::Object(map)
        };
        json!({
            "levels": self
                .levels
                .iter()
                .map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "product_graph": adjacency(false),
            "dual_graph": adjacency(true),
        })
    }
}

/// Builds both graphs one level above `n_max` and verifies the duality
/// identity on every level up to `n_max`.
pub fn fomin_duality_check(n_max: usize) -> Result<DualityReport> {
    Ok(GradedGraphPair::build(n_max + 1)?.duality_report())
}

/// Path counts at level n from a fresh build, with the n! identity left
/// to the caller.
pub fn path_counts(n: usize) -> Result<BTreeMap<TreeShape, (u64, u64)>> {
    Ok(GradedGraphPair::build(n)?.path_counts(n))
}

/// The product of path counts summed over a level, which the duality
/// forces to be n factorial.
pub fn path_count_total(counts: &BTreeMap<TreeShape, (u64, u64)>) -> u64 {
    counts.values().map(|&(f, fs)| f * fs).sum()
}
