//! Exact `σ_Z(G)` for a finite abelian group `Z`.
//!
//! A pair `(A, f)` is a coloring base exactly when `f` is a homomorphism from `G` into the
//! Cayley graph `C(Z, Z \ (A - A))`. Valid sets are closed under taking subsets and under
//! translations and group automorphisms, so the search walks canonical sets containing
//! `0` level by level: every valid `(k+1)`-set arises from a valid `k`-set by adding one
//! element, and each candidate is decided by a homomorphism search into the
//! corresponding Cayley graph. The largest level reached gives `σ_Z(G) = k / |Z|`.
//!
//! Candidates that violate the no-homomorphism lemma (a vertex-transitive target with a
//! larger independence ratio than `G`, or a smaller clique number) are rejected without a
//! search. Optionally the search stops as soon as `k / |Z|` exceeds a known upper bound on the
//! density (`1/χ_f(G)` by default); that bound is a theorem, not a heuristic.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::certificate::BaseCertificate;
use crate::bitset::BitSet;
use crate::graphs::{find_homomorphism_budgeted, AbelianGroup, Graph, HomSearch, Permutation};
use crate::invariants::{clique_number, fractional_chromatic, independence_number};
use crate::rational::Rational;
use crate::Result;

/// Upper bound on the density used to stop the level search early.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityCap {
    /// `1/χ_f(G)` when the fractional chromatic number fits the column cap.
    Fractional,
    Given(Rational),
    Off,
}

#[derive(Debug, Clone)]
pub struct SigmaOptions {
    /// Node budget for each individual homomorphism search.
    pub budget: u64,
    /// Maximum number of candidate sets on one level.
    pub max_candidates: usize,
    pub threads: usize,
    pub cap: DensityCap,
    /// Column cap for the χ_f computation behind [`DensityCap::Fractional`].
    pub column_cap: usize,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            budget: 50_000_000,
            max_candidates: 200_000,
            threads: 1,
            cap: DensityCap::Fractional,
            column_cap: 20_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SigmaResult {
    /// `σ_Z(G)` when `exact`, otherwise a lower bound.
    pub value: Rational,
    /// `None` only when no base exists at all (`G` has no proper `|Z|`-colouring
    /// within the search) .
    pub certificate: Option<BaseCertificate>,
    pub exact: bool,
    /// Number of candidate sets decided by homomorphism search.
    pub tests: usize,
    /// Size of the largest level reached.
    pub levels: usize,
}

/// Group data shared by the whole search.
struct GroupTables {
    order: usize,
    add: Vec<u32>,
    sub: Vec<u32>,
    automorphisms: Vec<Vec<u32>>,
    translations: Vec<Permutation>,
}

impl GroupTables {
    fn new(group: &AbelianGroup) -> Self {
        let order = group.order();
        let add = group.addition_table();
        let translations = (0..group.rank())
            .map(|i| {
                let mut e = group.identity();
                e.residues[i] = 1;
                let t = group.index(&e);
                (0..order).map(|x| add[x * order + t]).collect()
            })
            .collect();
        GroupTables {
            order,
            add,
            sub: group.difference_table(),
            automorphisms: group.automorphisms(5040),
            translations,
        }
    }

    /// Lexicographically least image of `set` under automorphisms and translations that
    /// bring one of its elements to `0`.
    fn canonical(&self, set: &[u32]) -> Vec<u32> {
        let n = self.order;
        let mut best: Option<Vec<u32>> = None;
        let mut image = Vec::with_capacity(set.len());
        let mut shifted = Vec::with_capacity(set.len());
        for phi in &self.automorphisms {
            image.clear();
            image.extend(set.iter().map(|&x| phi[x as usize]));
            for &b in &image {
                shifted.clear();
                shifted.extend(image.iter().map(|&x| self.sub[x as usize * n + b as usize]));
                shifted.sort_unstable();
                if best.as_ref().is_none_or(|cur| shifted < *cur) {
                    best = Some(shifted.clone());
                }
            }
        }
        best.unwrap_or_default()
    }

    /// `C(Z, Z \ (A - A))`.
    fn target(&self, set: &[u32]) -> Graph {
        let n = self.order;
        let mut diffs = BitSet::new(n);
        for &x in set {
            for &y in set {
                diffs.insert(self.sub[x as usize * n + y as usize] as usize);
            }
        }
        let allowed: Vec<usize> = diffs.complement().iter().collect();
        let rows = (0..n)
            .map(|x| {
                BitSet::from_iter_with_len(n, allowed.iter().map(|&s| self.add[x * n + s] as usize))
            })
            .collect();
        Graph::from_rows("base-target", rows).with_symmetry(self.translations.clone())
    }
}

enum Decision {
    Valid(Vec<usize>),
    Invalid,
    Unknown,
}

/// Exact `σ_Z(G)` with a certificate of best density.
///
/// Among optimal sets the lexicographically least canonical one is returned, with the
/// first map found by the deterministic homomorphism search. Budget exhaustion makes the
/// result inexact; the value is then still a valid lower bound.
pub fn sigma_group_exact(
    g: &Graph,
    group: &AbelianGroup,
    opts: &SigmaOptions,
) -> Result<SigmaResult> {
    let order = group.order();
    if g.edge_count() == 0 {
        let cert = BaseCertificate::new(
            g.label(),
            group.clone(),
            group.elements().collect(),
            vec![group.identity(); g.n()],
        )?;
        return Ok(SigmaResult {
            value: Rational::from_integer(1.into()),
            certificate: Some(cert),
            exact: true,
            tests: 0,
            levels: order,
        });
    }
    let cap = match &opts.cap {
        DensityCap::Off => None,
        DensityCap::Given(c) => Some(c.clone()),
        DensityCap::Fractional => match fractional_chromatic(g, opts.column_cap) {
            Ok(w) => Some(w.value.recip()),
            Err(e) => {
                log::info!("no fractional cap for {}: {e}", g.label());
                None
            }
        },
    };
    let within_cap = |k: usize| {
        cap.as_ref()
            .is_none_or(|c| Rational::new((k as i64).into(), (order as i64).into()) <= *c)
    };

    let tables = GroupTables::new(group);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .map_err(|e| crate::Error::Internal(format!("thread pool: {e}")))?;

    // No-homomorphism lemma: G → H with H vertex-transitive forces
    // α(H)/|H| ≤ α(G)/|G|, and any homomorphism maps cliques to cliques.
    let (alpha_g, _) = independence_number(g);
    let omega_g = clique_number(g);
    let decide = |set: &Vec<u32>| -> Decision {
        let target = tables.target(set);
        if independence_number(&target).0 * g.n() > alpha_g * order
            || clique_number(&target) < omega_g
        {
            return Decision::Invalid;
        }
        match find_homomorphism_budgeted(g, &target, Some(opts.budget), true) {
            HomSearch::Found(map) => Decision::Valid(map),
            HomSearch::NotFound => Decision::Invalid,
            HomSearch::Exhausted => Decision::Unknown,
        }
    };

    let mut exact = true;
    let mut tests = 0usize;
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    let mut candidates: Vec<Vec<u32>> = vec![vec![0]];
    let mut k = 1;
    while !candidates.is_empty() && within_cap(k) {
        tests += candidates.len();
        let decisions: Vec<Decision> = pool.install(|| candidates.par_iter().map(decide).collect());
        let mut level: Vec<Vec<u32>> = Vec::new();
        let mut undecided = false;
        for (set, d) in candidates.into_iter().zip(decisions) {
            match d {
                Decision::Valid(map) => {
                    if level.is_empty() {
                        best = Some((set.clone(), map));
                    }
                    level.push(set);
                }
                Decision::Invalid => {}
                Decision::Unknown => undecided = true,
            }
        }
        // An undecided set matters only if this level might have no valid set at all or
        // the search moves on to larger sets (it might extend to one).
        if level.is_empty() {
            exact &= !undecided;
            break;
        }
        k += 1;
        if !within_cap(k) {
            break;
        }
        exact &= !undecided;
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for set in &level {
            for x in 0..order as u32 {
                if set.binary_search(&x).is_err() {
                    let mut grown = set.clone();
                    grown.push(x);
                    next.insert(tables.canonical(&grown));
                }
            }
            if next.len() > opts.max_candidates {
                break;
            }
        }
        if next.len() > opts.max_candidates {
            log::warn!(
                "σ search over Z_{} stopped: more than {} candidates of size {k}",
                group.label(),
                opts.max_candidates
            );
            exact = false;
            break;
        }
        candidates = next.into_iter().collect();
    }

    let (value, certificate, levels) = match best {
        Some((set, map)) => {
            let a = set.iter().map(|&x| group.element(x as usize)).collect();
            let f = map.iter().map(|&t| group.element(t)).collect();
            let cert = BaseCertificate::new(g.label(), group.clone(), a, f)?;
            (cert.density(), Some(cert), set.len())
        }
        None => (Rational::from_integer(0.into()), None, 0),
    };
    Ok(SigmaResult {
        value,
        certificate,
        exact,
        tests,
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, g5};
    use crate::gyro::verify_base;
    use crate::rational::ratio;

    fn cyclic(n: u32) -> AbelianGroup {
        AbelianGroup::cyclic(n).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let opts = SigmaOptions::default();
        let c5 = cycle(5).unwrap();
        let r = sigma_group_exact(&c5, &cyclic(5), &opts).unwrap();
        assert_eq!(r.value, ratio(2, 5));
        assert!(r.exact);
        assert!(verify_base(&c5, r.certificate.as_ref().unwrap())
            .unwrap()
            .is_valid());
        let k2 = complete(2).unwrap();
        assert_eq!(
            sigma_group_exact(&k2, &cyclic(2), &opts).unwrap().value,
            ratio(1, 2)
        );
        assert_eq!(
            sigma_group_exact(&c5, &cyclic(3), &opts).unwrap().value,
            ratio(1, 3)
        );
        let r = sigma_group_exact(&c5, &cyclic(2), &opts).unwrap();
        assert_eq!(r.value, ratio(0, 1));
        assert!(r.certificate.is_none());
    }

    #[test]
    fn g5_over_z5_squared() {
        let g = g5();
        let group = AbelianGroup::new(vec![5, 5]).unwrap();
        let r = sigma_group_exact(&g, &group, &SigmaOptions::default()).unwrap();
        assert_eq!(r.value, ratio(4, 25));
        assert!(r.exact);
        assert!(verify_base(&g, r.certificate.as_ref().unwrap())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn cap_does_not_change_the_value() {
        let c5 = cycle(5).unwrap();
        let k2 = complete(2).unwrap();
        for n in 2..=8 {
            for g in [&c5, &k2] {
                let capped = sigma_group_exact(g, &cyclic(n), &SigmaOptions::default()).unwrap();
                let open = sigma_group_exact(
                    g,
                    &cyclic(n),
                    &SigmaOptions {
                        cap: DensityCap::Off,
                        ..SigmaOptions::default()
                    },
                )
                .unwrap();
                assert_eq!(capped.value, open.value, "{} over Z_{n}", g.label());
            }
        }
    }

    #[test]
    fn canonical_forms() {
        let t = GroupTables::new(&cyclic(12));
        assert_eq!(t.canonical(&[0, 5]), vec![0, 1]);
        assert_eq!(t.canonical(&[3, 9]), vec![0, 6]);
        assert_eq!(t.canonical(&[2, 4, 6]), t.canonical(&[0, 10, 8]));
    }

    #[test]
    fn edgeless_graph_has_full_density() {
        let e = crate::graphs::make_graph(3, &[]).unwrap();
        let r = sigma_group_exact(&e, &cyclic(4), &SigmaOptions::default()).unwrap();
        assert_eq!(r.value, ratio(1, 1));
    }
}
