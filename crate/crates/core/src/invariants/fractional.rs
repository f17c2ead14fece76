//! Fractional chromatic number as an exact covering LP over maximal independent sets.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Signed, Zero};

use crate::graphs::Graph;
use crate::invariants::{enumerate_maximal_independent_sets, independence_number};
use crate::lp::minimize_covering;
use crate::rational::{int, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FractionalMethod {
    /// `n / α` from the orbit of a maximum independent set.
    VertexTransitive,
    LinearProgram,
}

/// Primal and dual optimal solutions whose equal totals certify `χ_f(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalWitness {
    pub value: Rational,
    /// Weighted independent sets covering every vertex at least once.
    pub primal: Vec<(Vec<usize>, Rational)>,
    /// Vertex weights with total at most one on every independent set.
    pub dual: Vec<Rational>,
    pub method: FractionalMethod,
}

impl FractionalWitness {
    /// Checks both feasibility conditions and that the totals agree with `value`.
    /// Dual feasibility is checked through `α` for uniform weights and by enumerating
    /// maximal independent sets (up to `cap`) otherwise.
    pub fn verify(&self, g: &Graph, cap: usize) -> Result<()> {
        let n = g.n();
        let mut cover = vec![Rational::zero(); n];
        let mut total = Rational::zero();
        for (set, w) in &self.primal {
            if w.is_negative() || !g.is_independent(set) {
                return Err(Error::Internal(
                    "primal column is not a weighted independent set".into(),
                ));
            }
            for &v in set {
                cover[v] += w;
            }
            total += w;
        }
        if cover.iter().any(|c| *c < Rational::one()) {
            return Err(Error::Internal(
                "primal solution leaves a vertex uncovered".into(),
            ));
        }
        if total != self.value {
            return Err(Error::Internal(
                "primal total differs from the value".into(),
            ));
        }
        if self.dual.len() != n || self.dual.iter().any(Signed::is_negative) {
            return Err(Error::Internal(
                "dual has wrong shape or negative entries".into(),
            ));
        }
        if self.dual.iter().sum::<Rational>() != self.value {
            return Err(Error::Internal("dual total differs from the value".into()));
        }
        let first = &self.dual[0];
        if self.dual.iter().all(|y| y == first) {
            let alpha = independence_number(g).0;
            if first * int(alpha as i64) > Rational::one() {
                return Err(Error::Internal("uniform dual is infeasible".into()));
            }
        } else {
            for set in enumerate_maximal_independent_sets(g, cap)? {
                let s: Rational = set.iter().map(|&v| &self.dual[v]).sum();
                if s > Rational::one() {
                    return Err(Error::Internal(format!("dual violated on {set:?}")));
                }
            }
        }
        Ok(())
    }
}

/// `χ_f(G)` with an optimality certificate. Vertex-transitive graphs first try the
/// `n/α` orbit construction; the LP over all maximal independent sets is the fallback
/// and fails with a budget error when there are more than `column_cap` of them.
pub fn fractional_chromatic(g: &Graph, column_cap: usize) -> Result<FractionalWitness> {
    if g.is_vertex_transitive() {
        if let Some(w) = orbit_witness(g, column_cap) {
            if w.verify(g, column_cap).is_ok() {
                return Ok(w);
            }
            log::warn!(
                "orbit witness for {} failed verification; solving the LP",
                g.label()
            );
        }
    }
    lp_witness(g, column_cap)
}

fn orbit_witness(g: &Graph, cap: usize) -> Option<FractionalWitness> {
    let gens = g.symmetry_generators()?;
    let n = g.n();
    let (alpha, seed) = independence_number(g);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([seed.clone()]);
    seen.insert(seed);
    while let Some(set) = queue.pop_front() {
        for p in gens {
            let mut img: Vec<usize> = set.iter().map(|&v| p[v] as usize).collect();
            img.sort_unstable();
            if seen.insert(img.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(img);
            }
        }
    }
    let mut coverage = vec![0usize; n];
    for set in &seen {
        for &v in set {
            coverage[v] += 1;
        }
    }
    let c = *coverage.iter().min()?;
    if c == 0 {
        return None;
    }
    let w = Rational::new(1.into(), (c as i64).into());
    let primal: Vec<(Vec<usize>, Rational)> = seen.into_iter().map(|s| (s, w.clone())).collect();
    let value = Rational::new((n as i64).into(), (alpha as i64).into());
    Some(FractionalWitness {
        value,
        primal,
        dual: vec![Rational::new(1.into(), (alpha as i64).into()); n],
        method: FractionalMethod::VertexTransitive,
    })
}

fn lp_witness(g: &Graph, cap: usize) -> Result<FractionalWitness> {
    let n = g.n();
    let columns = enumerate_maximal_independent_sets(g, cap)?;
    let mut a = vec![vec![Rational::zero(); columns.len()]; n];
    for (j, set) in columns.iter().enumerate() {
        for &v in set {
            a[v][j] = Rational::one();
        }
    }
    let b = vec![Rational::one(); n];
    let c = vec![Rational::one(); columns.len()];
    let sol = minimize_covering(&a, &b, &c)?;
    log::debug!(
        "fractional LP for {}: {} columns, {} pivots",
        g.label(),
        columns.len(),
        sol.pivots
    );
    let primal = columns
        .into_iter()
        .zip(sol.primal)
        .filter(|(_, w)| !w.is_zero())
        .collect();
    let witness = FractionalWitness {
        value: sol.value,
        primal,
        dual: sol.dual,
        method: FractionalMethod::LinearProgram,
    };
    witness.verify(g, cap)?;
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{
        cartesian, complete, cycle, disjoint_union, g5, lexicographic, line_graph, make_graph,
        petersen,
    };
    use crate::rational::ratio;

    #[test]
    fn fractional_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(fractional_chromatic(&c5, 1000).unwrap().value, ratio(5, 2));
        let w = fractional_chromatic(&g5(), 1000).unwrap();
        assert_eq!(w.value, ratio(25, 4));
        assert_eq!(w.method, FractionalMethod::VertexTransitive);
        let l = line_graph(&petersen());
        let w = fractional_chromatic(&l, 10_000).unwrap();
        assert_eq!(w.value, int(3));
        assert_eq!(w.method, FractionalMethod::LinearProgram);
        let h = lexicographic(&complete(2).unwrap(), &c5);
        let u = disjoint_union(&complete(5).unwrap(), &h);
        assert_eq!(fractional_chromatic(&u, 1000).unwrap().value, int(5));
        assert_eq!(fractional_chromatic(&h, 1000).unwrap().value, int(5));
    }

    #[test]
    fn product_example() {
        let h = lexicographic(&complete(2).unwrap(), &cycle(5).unwrap());
        let g = cartesian(&complete(5).unwrap(), &h);
        let w = fractional_chromatic(&g, 100_000).unwrap();
        assert_eq!(w.value, ratio(50, 9));
    }

    #[test]
    fn lp_and_orbit_routes_agree() {
        for g in [cycle(7).unwrap(), petersen(), complete(4).unwrap()] {
            let vt = fractional_chromatic(&g, 10_000).unwrap();
            let lp = lp_witness(&g, 10_000).unwrap();
            assert_eq!(vt.method, FractionalMethod::VertexTransitive);
            assert_eq!(vt.value, lp.value);
        }
    }

    #[test]
    fn edgeless_and_budget() {
        let e = make_graph(3, &[]).unwrap();
        assert_eq!(fractional_chromatic(&e, 10).unwrap().value, int(1));
        let l = line_graph(&petersen());
        assert!(matches!(
            fractional_chromatic(&l, 2),
            Err(Error::Budget { .. })
        ));
    }
}
