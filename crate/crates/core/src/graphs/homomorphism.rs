//! Backtracking homomorphism search.
//!
//! The next vertex is always an unassigned one with the fewest remaining targets (ties:
//! higher degree, then lower index); targets are tried in ascending order. After each
//! assignment the domains of the unassigned neighbours are intersected with the target
//! neighbourhood, and a wipe-out triggers backtracking. The search is deterministic.

use super::{BitSet, Graph};

/// Outcome of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomSearch {
    Found(Vec<usize>),
    NotFound,
    /// Node budget exhausted before the search completed.
    Exhausted,
}

/// Independent edge-preservation check.
pub fn is_homomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    map.len() == g.n()
        && map.iter().all(|&t| t < h.n())
        && g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
}

pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    match find_homomorphism_budgeted(g, h, None, false) {
        HomSearch::Found(m) => Some(m),
        HomSearch::NotFound => None,
        HomSearch::Exhausted => unreachable!("unbudgeted search cannot exhaust"),
    }
}

/// Search with an optional node budget. With `pin_roots` and a vertex-transitive target,
/// the first vertex chosen in every component of `G` is mapped to target 0, which loses
/// no solutions.
pub fn find_homomorphism_budgeted(
    g: &Graph,
    h: &Graph,
    budget: Option<u64>,
    pin_roots: bool,
) -> HomSearch {
    let n = g.n();
    if n == 0 {
        return HomSearch::Found(Vec::new());
    }
    if h.n() == 0 {
        return HomSearch::NotFound;
    }
    let mut component = vec![usize::MAX; n];
    let comps = g.components();
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            component[v] = c;
        }
    }
    let neighbours: Vec<Vec<usize>> = (0..n).map(|v| g.row(v).iter().collect()).collect();
    let mut search = Search {
        h,
        neighbours: &neighbours,
        degree: (0..n).map(|v| g.degree(v)).collect(),
        component,
        pin: pin_roots && h.is_vertex_transitive(),
        component_started: vec![false; comps.len()],
        domains: vec![BitSet::full(h.n()); n],
        map: vec![usize::MAX; n],
        nodes: 0,
        budget,
    };
    match search.run(n) {
        Step::Found => {
            debug_assert!(is_homomorphism(g, h, &search.map));
            HomSearch::Found(search.map)
        }
        Step::Fail => HomSearch::NotFound,
        Step::Exhausted => HomSearch::Exhausted,
    }
}

enum Step {
    Found,
    Fail,
    Exhausted,
}

struct Search<'a> {
    h: &'a Graph,
    neighbours: &'a [Vec<usize>],
    degree: Vec<usize>,
    component: Vec<usize>,
    pin: bool,
    component_started: Vec<bool>,
    domains: Vec<BitSet>,
    map: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn choose(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (usize::MAX, 0usize);
        for v in 0..self.map.len() {
            if self.map[v] != usize::MAX {
                continue;
            }
            let k = (self.domains[v].count(), self.degree[v]);
            if k.0 < key.0 || (k.0 == key.0 && k.1 > key.1) {
                key = k;
                best = v;
            }
        }
        best
    }

    fn run(&mut self, remaining: usize) -> Step {
        if remaining == 0 {
            return Step::Found;
        }
        let v = self.choose();
        let c = self.component[v];
        let root = self.pin && !self.component_started[c];
        let candidates: Vec<usize> = if root {
            if self.domains[v].contains(0) {
                vec![0]
            } else {
                Vec::new()
            }
        } else {
            self.domains[v].to_vec()
        };
        let started = self.component_started[c];
        self.component_started[c] = true;
        let mut outcome = Step::Fail;
        for t in candidates {
            self.nodes += 1;
            if matches!(self.budget, Some(b) if self.nodes > b) {
                outcome = Step::Exhausted;
                break;
            }
            let mut trail: Vec<(usize, BitSet)> = Vec::with_capacity(self.neighbours[v].len());
            let mut wiped = false;
            for &w in &self.neighbours[v] {
                if self.map[w] != usize::MAX {
                    continue;
                }
                let narrowed = self.domains[w].intersection(self.h.row(t));
                let empty = narrowed.is_empty();
                trail.push((w, std::mem::replace(&mut self.domains[w], narrowed)));
                if empty {
                    wiped = true;
                    break;
                }
            }
            if !wiped {
                self.map[v] = t;
                match self.run(remaining - 1) {
                    Step::Found => return Step::Found,
                    Step::Exhausted => {
                        self.map[v] = usize::MAX;
                        for (w, dom) in trail.into_iter().rev() {
                            self.domains[w] = dom;
                        }
                        outcome = Step::Exhausted;
                        break;
                    }
                    Step::Fail => {}
                }
                self.map[v] = usize::MAX;
            }
            for (w, dom) in trail.into_iter().rev() {
                self.domains[w] = dom;
            }
        }
        self.component_started[c] = started;
        outcome
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, hamming_cayley, kneser, petersen};

    #[test]
    fn petersen_is_three_colourable() {
        let p = petersen();
        let k3 = complete(3).unwrap();
        let map = find_homomorphism(&p, &k3).expect("3-colouring");
        assert!(is_homomorphism(&p, &k3, &map));
        assert!(find_homomorphism(&p, &complete(2).unwrap()).is_none());
    }

    #[test]
    fn odd_cycle_not_bipartite() {
        assert!(find_homomorphism(&cycle(5).unwrap(), &complete(2).unwrap()).is_none());
        assert!(find_homomorphism(&cycle(6).unwrap(), &complete(2).unwrap()).is_some());
    }

    #[test]
    fn kneser_into_hamming() {
        let k = kneser(5, 2).unwrap();
        let h = hamming_cayley(5, 4).unwrap();
        assert!(find_homomorphism(&k, &h).is_some());
    }

    #[test]
    fn pinned_search_agrees_on_existence() {
        let c5 = cycle(5).unwrap();
        for p in 2..8 {
            let t = complete(p).unwrap();
            let a = find_homomorphism_budgeted(&c5, &t, None, false);
            let b = find_homomorphism_budgeted(&c5, &t, None, true);
            assert_eq!(
                matches!(a, HomSearch::Found(_)),
                matches!(b, HomSearch::Found(_))
            );
        }
    }

    #[test]
    fn budget_is_reported() {
        let p = petersen();
        let k2 = complete(2).unwrap();
        assert_eq!(
            find_homomorphism_budgeted(&p, &k2, Some(1), false),
            HomSearch::Exhausted
        );
    }
}
