//! Finite simple graphs, generators, products and homomorphism search.

mod generators;
mod group;
mod homomorphism;
mod io;
mod ops;
mod random;

use std::sync::Arc;

pub use generators::{
    cayley, circulant, circular_clique, complete, cycle, g5, hamming_cayley, kneser,
    kneser_subsets, petersen,
};
pub use group::{AbelianGroup, ConnectionSet, GroupElement};
pub use homomorphism::{find_homomorphism, find_homomorphism_budgeted, is_homomorphism, HomSearch};
pub use io::{parse_edge_list, parse_graph_spec, read_graph, to_edge_list};
pub use ops::{cartesian, complement, disjoint_union, identify, lexicographic, line_graph};
pub use random::{random_circulant, random_graph};

use crate::bitset::BitSet;
use crate::{Error, Result};

/// Vertex permutation stored as image indices.
pub type Permutation = Vec<u32>;

/// The group and connection set a Cayley graph was built from.
#[derive(Clone, Debug)]
pub struct CayleyStructure {
    pub group: AbelianGroup,
    pub connection: ConnectionSet,
}

/// A finite simple graph with adjacency rows as bitsets.
///
/// Constructors that guarantee vertex-transitivity attach generators of a
/// transitive automorphism group; the vertex-transitive flag is exactly the presence
/// of those generators and is never inferred from the adjacency.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    label: String,
    symmetry: Option<Arc<Vec<Permutation>>>,
    cayley: Option<Arc<CayleyStructure>>,
    parts: Option<Arc<(Graph, Graph)>>,
}

impl PartialEq for Graph {
    /// Labeled equality of vertex count and adjacency.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub(crate) fn from_rows(label: impl Into<String>, adj: Vec<BitSet>) -> Self {
        let g = Graph {
            n: adj.len(),
            adj,
            label: label.into(),
            symmetry: None,
            cayley: None,
            parts: None,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    pub(crate) fn with_symmetry(mut self, generators: Vec<Permutation>) -> Self {
        debug_assert!(generators.iter().all(|p| self.is_automorphism(p)));
        self.symmetry = Some(Arc::new(generators));
        self
    }

    pub(crate) fn with_cayley(mut self, structure: CayleyStructure) -> Self {
        self.cayley = Some(Arc::new(structure));
        self
    }

    pub(crate) fn with_parts(mut self, a: Graph, b: Graph) -> Self {
        self.parts = Some(Arc::new((a, b)));
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn row(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.symmetry.is_some()
    }

    pub fn symmetry_generators(&self) -> Option<&[Permutation]> {
        self.symmetry.as_deref().map(Vec::as_slice)
    }

    pub fn cayley_structure(&self) -> Option<&CayleyStructure> {
        self.cayley.as_deref()
    }

    /// The two operands when this graph was built as a disjoint union.
    pub fn union_parts(&self) -> Option<(&Graph, &Graph)> {
        self.parts.as_deref().map(|(a, b)| (a, b))
    }

    pub fn is_automorphism(&self, perm: &[u32]) -> bool {
        perm.len() == self.n
            && self
                .edges()
                .iter()
                .all(|&(u, v)| self.has_edge(perm[u] as usize, perm[v] as usize))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.n
                && set[i + 1..]
                    .iter()
                    .all(|&v| v < self.n && u != v && !self.has_edge(u, v))
        })
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Symmetric adjacency with empty diagonal and at least one vertex.
    pub fn check_invariants(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::input("graphs must have at least one vertex"));
        }
        for u in 0..self.n {
            if self.adj[u].len() != self.n {
                return Err(Error::Internal(format!("row {u} has wrong width")));
            }
            if self.adj[u].contains(u) {
                return Err(Error::Internal(format!("self-loop at {u}")));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(Error::Internal(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(())
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let rows = vertices
            .iter()
            .map(|&u| {
                BitSet::from_iter_with_len(k, (0..k).filter(|&j| self.has_edge(u, vertices[j])))
            })
            .collect();
        Graph::from_rows(format!("{}[induced]", self.label), rows)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..self.n).collect::<Vec<_>>() {
            return Err(Error::input("relabeling is not a permutation"));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        make_graph(self.n, &edges).map(|g| g.with_label(format!("{}[relabeled]", self.label)))
    }
}

/// Builds a graph from an edge list, dropping duplicate edges.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("graphs must have at least one vertex"));
    }
    let mut adj = vec![BitSet::new(n); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::input(format!(
                "edge ({u},{v}) has an endpoint outside [0,{n})"
            )));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Ok(Graph::from_rows(format!("graph:{n}"), adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let k3 = make_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!(!k3.is_vertex_transitive());
        let k2 = make_graph(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(matches!(make_graph(2, &[(0, 0)]), Err(Error::Input(_))));
        assert!(make_graph(2, &[(0, 2)]).is_err());
        assert!(make_graph(0, &[]).is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = make_graph(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let h = g.induced_subgraph(&[3, 4]);
        assert_eq!(h.edge_count(), 1);
    }
}
