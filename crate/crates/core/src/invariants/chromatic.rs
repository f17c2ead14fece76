use crate::graphs::{complete, find_homomorphism, Graph};
use crate::invariants::clique_number;

/// A proper colouring with `k` colours `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub k: usize,
    pub colours: Vec<usize>,
}

impl Colouring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.n()
            && self.colours.iter().all(|&c| c < self.k)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colours[u] != self.colours[v])
    }
}

/// DSATUR greedy colouring.
pub fn greedy_colouring(g: &Graph) -> Colouring {
    let n = g.n();
    let mut colours = vec![usize::MAX; n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colours[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = g
                    .row(v)
                    .iter()
                    .map(|u| colours[u])
                    .filter(|&c| c != usize::MAX)
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("uncoloured vertex remains");
        let c = (0..)
            .find(|&c| g.row(v).iter().all(|u| colours[u] != c))
            .expect("some colour is free");
        colours[v] = c;
        k = k.max(c + 1);
    }
    Colouring { k, colours }
}

/// Exact `χ(G)`: tries `K_k` homomorphisms from the clique number up to one below the
/// greedy bound.
pub fn chromatic_number(g: &Graph) -> Colouring {
    if g.edge_count() == 0 {
        return Colouring {
            k: 1,
            colours: vec![0; g.n()],
        };
    }
    let greedy = greedy_colouring(g);
    for k in clique_number(g)..greedy.k {
        let target = complete(k).expect("k >= 2");
        if let Some(map) = find_homomorphism(g, &target) {
            return Colouring { k, colours: map };
        }
    }
    greedy
}
