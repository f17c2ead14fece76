use num_integer::Integer;

use crate::graphs::{
    circular_clique, find_homomorphism_budgeted, is_homomorphism, Graph, HomSearch,
};
use crate::invariants::chromatic_number;
use crate::rational::{int, Rational};

/// `χ_c(G) = p/q` with a homomorphism into the circular clique `K_{p/q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularColouring {
    pub value: Rational,
    pub p: usize,
    pub q: usize,
    pub map: Vec<usize>,
}

impl CircularColouring {
    pub fn verify(&self, g: &Graph) -> bool {
        if self.p == 1 {
            return g.edge_count() == 0;
        }
        match circular_clique(self.p, self.q) {
            Ok(target) => is_homomorphism(g, &target, &self.map),
            Err(_) => false,
        }
    }
}

/// Reduced fractions `p/q` with `p <= n` and `lo < p/q < hi`, ascending.
fn fractions_between(n: usize, lo: &Rational, hi: &Rational) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 2..=n {
        for q in 1..=p / 2 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let v = Rational::new((p as i64).into(), (q as i64).into());
            if &v > lo && &v < hi {
                out.push((p, q));
            }
        }
    }
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    out
}

/// Exact `χ_c(G)`. The minimum is attained with `p <= n` and lies in `(χ - 1, χ]`, so
/// only the reduced fractions in that window are tried, in ascending order.
pub fn circular_chromatic(g: &Graph) -> CircularColouring {
    circular_chromatic_budgeted(g, None).colouring
}

/// Result of a budgeted `χ_c` computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularBound {
    /// The least circular colouring found; `χ_c(G)` itself when `exact`.
    pub colouring: CircularColouring,
    /// `false` when some smaller fraction could not be ruled out within the budget.
    pub exact: bool,
}

/// `χ_c(G)` with a node budget per homomorphism test. A fraction whose test exhausts the
/// budget is skipped; the first fraction that admits a homomorphism is still a valid
/// circular colouring, so the value is then an upper bound on `χ_c(G)`.
pub fn circular_chromatic_budgeted(g: &Graph, budget: Option<u64>) -> CircularBound {
    if g.edge_count() == 0 {
        return CircularBound {
            colouring: CircularColouring {
                value: int(1),
                p: 1,
                q: 1,
                map: vec![0; g.n()],
            },
            exact: true,
        };
    }
    let colouring = chromatic_number(g);
    let chi = colouring.k;
    let mut exact = true;
    for (p, q) in fractions_between(g.n(), &int(chi as i64 - 1), &int(chi as i64)) {
        let target = circular_clique(p, q).expect("p >= 2q");
        match find_homomorphism_budgeted(g, &target, budget, true) {
            HomSearch::Found(map) => {
                return CircularBound {
                    colouring: CircularColouring {
                        value: Rational::new((p as i64).into(), (q as i64).into()),
                        p,
                        q,
                        map,
                    },
                    exact,
                }
            }
            HomSearch::NotFound => {}
            HomSearch::Exhausted => {
                log::info!("χ_c test K_{p}/{q} for {} exhausted its budget", g.label());
                exact = false;
            }
        }
    }
    CircularBound {
        colouring: CircularColouring {
            value: int(chi as i64),
            p: chi,
            q: 1,
            map: colouring.colours,
        },
        exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, find_homomorphism, lexicographic, make_graph, petersen};
    use crate::rational::ratio;

    /// Scans every reduced fraction from 2 upwards without the `(χ-1, χ]` window.
    fn circular_by_full_scan(g: &Graph) -> Rational {
        let mut all = fractions_between(g.n(), &int(1), &int(g.n() as i64 + 1));
        all.push((g.n().max(2), 1));
        for (p, q) in all {
            if find_homomorphism(g, &circular_clique(p, q).unwrap()).is_some() {
                return Rational::new((p as i64).into(), (q as i64).into());
            }
        }
        unreachable!()
    }

    #[test]
    fn circular_examples() {
        let c5 = cycle(5).unwrap();
        let r = circular_chromatic(&c5);
        assert_eq!(r.value, ratio(5, 2));
        assert!(r.verify(&c5));
        let h = lexicographic(&complete(2).unwrap(), &c5);
        assert_eq!(circular_chromatic(&h).value, int(6));
        let p = petersen();
        let r = circular_chromatic(&p);
        assert_eq!(r.value, int(3));
        assert!(r.verify(&p));
        assert_eq!(
            circular_chromatic(&make_graph(2, &[]).unwrap()).value,
            int(1)
        );
        assert_eq!(circular_chromatic(&complete(2).unwrap()).value, int(2));
        assert_eq!(circular_chromatic(&cycle(7).unwrap()).value, ratio(7, 3));
    }

    #[test]
    fn window_agrees_with_full_scan() {
        for g in [
            cycle(5).unwrap(),
            cycle(9).unwrap(),
            petersen(),
            complete(4).unwrap(),
        ] {
            assert_eq!(circular_chromatic(&g).value, circular_by_full_scan(&g));
        }
    }

    #[test]
    fn tiny_budget_gives_upper_bound() {
        let c5 = cycle(5).unwrap();
        let r = circular_chromatic_budgeted(&c5, Some(1));
        assert!(!r.exact);
        assert!(r.colouring.verify(&c5));
        assert!(r.colouring.value >= ratio(5, 2));
        assert!(circular_chromatic_budgeted(&c5, Some(1_000_000)).exact);
    }

    #[test]
    fn fraction_order() {
        assert_eq!(fractions_between(7, &int(2), &int(3)), vec![(7, 3), (5, 2)]);
        assert_eq!(
            fractions_between(10, &int(2), &int(3)),
            vec![(9, 4), (7, 3), (5, 2), (8, 3)]
        );
    }
}
