use super::{BitSet, Graph, Permutation};
use crate::{Error, Result};

/// Lifts generators of `Aut(G)` and `Aut(H)` to the product vertex set `(g, h) -> g*|H| + h`.
fn product_symmetry(g: &Graph, h: &Graph) -> Option<Vec<Permutation>> {
    let (gs, hs) = (g.symmetry_generators()?, h.symmetry_generators()?);
    let (ng, nh) = (g.n(), h.n());
    let mut gens = Vec::with_capacity(gs.len() + hs.len());
    for p in gs {
        gens.push(
            (0..ng * nh)
                .map(|x| (p[x / nh] as usize * nh + x % nh) as u32)
                .collect(),
        );
    }
    for p in hs {
        gens.push(
            (0..ng * nh)
                .map(|x| ((x / nh) * nh + p[x % nh] as usize) as u32)
                .collect(),
        );
    }
    Some(gens)
}

fn finish(g: Graph, sym: Option<Vec<Permutation>>) -> Graph {
    match sym {
        Some(gens) => g.with_symmetry(gens),
        None => g,
    }
}

/// Cartesian product `G □ H`, vertex `(g, h)` at index `g*|H| + h`.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let n = ng * nh;
    let mut adj = vec![BitSet::new(n); n];
    for a in 0..ng {
        for b in 0..nh {
            let x = a * nh + b;
            for b2 in h.row(b).iter() {
                adj[x].insert(a * nh + b2);
            }
            for a2 in g.row(a).iter() {
                adj[x].insert(a2 * nh + b);
            }
        }
    }
    let out = Graph::from_rows(format!("cartesian({},{})", g.label(), h.label()), adj);
    finish(out, product_symmetry(g, h))
}

/// Lexicographic product `G[H]`, vertex `(g, h)` at index `g*|H| + h`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let n = ng * nh;
    let mut adj = vec![BitSet::new(n); n];
    for a in 0..ng {
        for b in 0..nh {
            let x = a * nh + b;
            for b2 in h.row(b).iter() {
                adj[x].insert(a * nh + b2);
            }
            for a2 in g.row(a).iter() {
                for b2 in 0..nh {
                    adj[x].insert(a2 * nh + b2);
                }
            }
        }
    }
    let out = Graph::from_rows(format!("lex({},{})", g.label(), h.label()), adj);
    finish(out, product_symmetry(g, h))
}

/// Disjoint union; `H`'s vertices follow `G`'s.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let n = ng + nh;
    let mut adj = vec![BitSet::new(n); n];
    for (u, row) in adj.iter_mut().enumerate().take(ng) {
        for v in g.row(u).iter() {
            row.insert(v);
        }
    }
    for u in 0..nh {
        for v in h.row(u).iter() {
            adj[ng + u].insert(ng + v);
        }
    }
    Graph::from_rows(format!("union({},{})", g.label(), h.label()), adj)
        .with_parts(g.clone(), h.clone())
}

/// Glues `G` and `H` at `u ∈ G` and `v ∈ H`. The merged vertex keeps index `u`;
/// the remaining vertices of `H` follow `G`'s in their original order.
pub fn identify(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    if u >= g.n() || v >= h.n() {
        return Err(Error::input(format!(
            "identify: vertex {u} of a {}-vertex graph or {v} of a {}-vertex graph is out of range",
            g.n(),
            h.n()
        )));
    }
    let ng = g.n();
    let n = ng + h.n() - 1;
    let map_h = |w: usize| -> usize {
        match w.cmp(&v) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Less => ng + w,
            std::cmp::Ordering::Greater => ng + w - 1,
        }
    };
    let mut adj = vec![BitSet::new(n); n];
    for (a, row) in adj.iter_mut().enumerate().take(ng) {
        for b in g.row(a).iter() {
            row.insert(b);
        }
    }
    for a in 0..h.n() {
        for b in h.row(a).iter() {
            adj[map_h(a)].insert(map_h(b));
        }
    }
    Ok(Graph::from_rows(
        format!("identify({},{u},{},{v})", g.label(), h.label()),
        adj,
    ))
}

pub fn complement(g: &Graph) -> Graph {
    let adj = (0..g.n())
        .map(|u| {
            let mut row = g.row(u).complement();
            row.remove(u);
            row
        })
        .collect();
    Graph::from_rows(format!("complement({})", g.label()), adj)
}

/// Line graph; vertex `i` is the `i`-th edge of `G.edges()` (sorted).
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let m = edges.len();
    let mut adj = vec![BitSet::new(m.max(1)); m.max(1)];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    // an edgeless graph yields K1 rather than the empty graph
    Graph::from_rows(format!("line({})", g.label()), adj)
}
