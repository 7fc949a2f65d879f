//! Finite crystal graphs and their DOT / JSON export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partition::WeightVector;

/// Something that can sit at a vertex of a [`CrystalGraph`].
pub trait CrystalVertex: Clone + Ord + Serialize {
    /// The weight left untouched by the graph's operators, if any.
    fn weight_a(&self) -> Option<WeightVector>;
    /// The weight the operators act on.
    fn weight_b(&self) -> WeightVector;
    fn label(&self) -> String;
}

/// A finite crystal: vertices with weights and `f_i` edges (the `e_i` edges
/// are their inverses).
///
/// Vertex ids are positions in the list sorted by canonical JSON text, so
/// every export is byte-stable.
#[derive(Debug, Clone)]
pub struct CrystalGraph<V> {
    vertices: Vec<V>,
    index: BTreeMap<V, usize>,
    f_edges: BTreeMap<(usize, u32), usize>,
    e_edges: BTreeMap<(usize, u32), usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: usize,
    pub i: u32,
    pub to: usize,
}

/// Export format for [`CrystalGraph::export`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl<V: CrystalVertex> CrystalGraph<V> {
    /// Builds the graph on `vertices` with `f_i` for each `i` in `ops`.
    ///
    /// Panics if `lower` leaves the vertex set or two vertices share an
    /// `f_i` image; either would mean the operator is not a crystal operator
    /// on this set.
    pub fn from_vertices(
        vertices: impl IntoIterator<Item = V>,
        ops: impl IntoIterator<Item = u32> + Clone,
        lower: impl Fn(&V, u32) -> Option<V>,
    ) -> Self {
        let mut keyed: Vec<(String, V)> = vertices
            .into_iter()
            .map(|v| (serde_json::to_string(&v).expect("vertex serializes"), v))
            .collect();
        keyed.sort();
        keyed.dedup_by(|a, b| a.0 == b.0);
        let vertices: Vec<V> = keyed.into_iter().map(|(_, v)| v).collect();
        let index: BTreeMap<V, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut g = CrystalGraph {
            vertices,
            index,
            f_edges: BTreeMap::new(),
            e_edges: BTreeMap::new(),
        };
        for id in 0..g.vertices.len() {
            for i in ops.clone() {
                if let Some(t) = lower(&g.vertices[id], i) {
                    let to = *g
                        .index
                        .get(&t)
                        .expect("operator image lies outside the vertex set");
                    g.add_edge(id, i, to);
                }
            }
        }
        g
    }

    /// Connected component of `start` under `lower` and `raise`.
    pub fn component_from(
        start: V,
        ops: impl IntoIterator<Item = u32> + Clone,
        lower: impl Fn(&V, u32) -> Option<V>,
        raise: impl Fn(&V, u32) -> Option<V>,
    ) -> Self {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for i in ops.clone() {
                for next in [lower(&v, i), raise(&v, i)].into_iter().flatten() {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Self::from_vertices(seen, ops, lower)
    }

    /// Graph on `vertices` with explicitly given `f` edges (by value).
    pub fn from_edges(
        vertices: impl IntoIterator<Item = V>,
        edges: &[(V, u32, V)],
    ) -> Result<Self> {
        let mut g = Self::from_vertices(vertices, std::iter::empty(), |_, _| None);
        for (a, i, b) in edges {
            let from = g
                .id(a)
                .ok_or_else(|| Error::Unsupported(format!("unknown vertex {}", a.label())))?;
            let to = g
                .id(b)
                .ok_or_else(|| Error::Unsupported(format!("unknown vertex {}", b.label())))?;
            g.add_edge(from, *i, to);
        }
        Ok(g)
    }

    fn add_edge(&mut self, from: usize, i: u32, to: usize) {
        assert!(
            self.f_edges.insert((from, i), to).is_none(),
            "duplicate f_{i} edge"
        );
        assert!(
            self.e_edges.insert((to, i), from).is_none(),
            "f_{i} is not injective"
        );
    }
}

impl<V> CrystalGraph<V> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &V {
        &self.vertices[id]
    }

    pub fn edge_count(&self) -> usize {
        self.f_edges.len()
    }

    /// `f` edges sorted by `(from, i)`.
    pub fn edges(&self) -> Vec<Edge> {
        self.f_edges
            .iter()
            .map(|(&(from, i), &to)| Edge { from, i, to })
            .collect()
    }

    pub fn f(&self, id: usize, i: u32) -> Option<usize> {
        self.f_edges.get(&(id, i)).copied()
    }

    pub fn e(&self, id: usize, i: u32) -> Option<usize> {
        self.e_edges.get(&(id, i)).copied()
    }

    /// Operator indices that label at least one edge.
    pub fn operator_indices(&self) -> BTreeSet<u32> {
        self.f_edges.keys().map(|&(_, i)| i).collect()
    }

    /// Vertices with no incoming edge of any index.
    pub fn highest_weight_ids(&self) -> Vec<usize> {
        let has_in: BTreeSet<usize> = self.e_edges.keys().map(|&(v, _)| v).collect();
        (0..self.vertices.len())
            .filter(|id| !has_in.contains(id))
            .collect()
    }

    /// Weakly connected components, each sorted, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (&(a, _), &b) in &self.f_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut out = Vec::new();
        for s in 0..self.vertices.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut members = vec![s];
            comp[s] = out.len();
            let mut k = 0;
            while k < members.len() {
                let v = members[k];
                for &u in &adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = out.len();
                        members.push(u);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

impl<V: CrystalVertex> CrystalGraph<V> {
    pub fn id(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Induced subgraph on `ids` (edges with both ends inside).
    pub fn subgraph(&self, ids: &[usize]) -> Self {
        let keep: BTreeSet<usize> = ids.iter().copied().collect();
        let edges: Vec<(V, u32, V)> = self
            .f_edges
            .iter()
            .filter(|(&(a, _), b)| keep.contains(&a) && keep.contains(b))
            .map(|(&(a, i), &b)| (self.vertices[a].clone(), i, self.vertices[b].clone()))
            .collect();
        Self::from_edges(ids.iter().map(|&id| self.vertices[id].clone()), &edges)
            .expect("subgraph vertices exist")
    }

    /// Edges as `(from, i, to)` vertex values.
    pub fn edge_values(&self) -> BTreeSet<(V, u32, V)> {
        self.f_edges
            .iter()
            .map(|(&(a, i), &b)| (self.vertices[a].clone(), i, self.vertices[b].clone()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| {
                let mut obj = json!({ "id": id, "value": v, "weight_b": v.weight_b() });
                if let Some(a) = v.weight_a() {
                    obj["weight_a"] = json!(a);
                }
                obj
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges()
            .into_iter()
            .map(|e| json!({ "from": e.from, "i": e.i, "dir": "f", "to": e.to }))
            .collect();
        json!({ "vertices": vertices, "edges": edges })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  node [shape=box];\n");
        for (id, v) in self.vertices.iter().enumerate() {
            let a = v
                .weight_a()
                .map(|a| format!(", weight_a=\"{a}\""))
                .unwrap_or_default();
            let _ = writeln!(
                s,
                "  v{id} [label=\"{}\"{a}, weight_b=\"{}\"];",
                v.label(),
                v.weight_b()
            );
        }
        for e in self.edges() {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.i);
        }
        s.push_str("}\n");
        s
    }

    pub fn export(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Dot => self.to_dot(),
            GraphFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json");
                s.push('\n');
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{crystal_op_word, Direction, Word};

    #[test]
    fn empty_graph_exports() {
        let g: CrystalGraph<Word> = CrystalGraph::from_vertices(Vec::new(), 1..1, |_, _| None);
        assert_eq!(g.to_dot(), "digraph crystal {\n  node [shape=box];\n}\n");
        assert_eq!(g.to_json(), json!({"vertices": [], "edges": []}));
    }

    #[test]
    fn two_chain_exports() {
        let start = Word::with_bound(vec![1], 2).unwrap();
        let g = CrystalGraph::component_from(
            start,
            1..2,
            |w, i| crystal_op_word(w, i, Direction::Lower),
            |w, i| crystal_op_word(w, i, Direction::Raise),
        );
        let dot = g.to_dot();
        assert_eq!(
            dot,
            "digraph crystal {\n  node [shape=box];\n  v0 [label=\"1\", weight_b=\"(1,0)\"];\n  v1 [label=\"2\", weight_b=\"(0,1)\"];\n  v0 -> v1 [label=\"1\"];\n}\n"
        );
        assert_eq!(
            g.to_json()["edges"],
            json!([{"from": 0, "i": 1, "dir": "f", "to": 1}])
        );
        assert_eq!(g.export(GraphFormat::Dot), g.export(GraphFormat::Dot));
        assert_eq!(g.components(), vec![vec![0, 1]]);
        assert_eq!(g.highest_weight_ids(), vec![0]);
    }
}
