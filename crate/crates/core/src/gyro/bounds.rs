use super::certificate::{require_valid, BaseCertificate};
use super::constructions::{base_from_circular_coloring, base_from_independent_set};
use super::search::{sigma_group_exact, SigmaOptions};
use crate::graphs::{cartesian, AbelianGroup, Graph};
use crate::invariants::{
    chromatic_number, circular_chromatic_budgeted, clique_number, fractional_chromatic,
    independence_number, CircularColouring,
};
use crate::rational::{int, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpperSource {
    CircularColouring,
    IndependentSet,
    /// Exhaustive search over the named group.
    GroupSearch(String),
    /// Caller-supplied certificate, by position.
    Seed(usize),
    Edgeless,
}

#[derive(Debug, Clone)]
pub struct UpperBound {
    pub value: Rational,
    pub certificate: BaseCertificate,
    pub source: UpperSource,
    /// False when some group search ran out of budget.
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerProvenance {
    Fractional,
    CliqueLemma,
    ProductTrick,
    /// `ω(G)`, used only when `χ_f` is out of budget.
    Clique,
}

impl LowerProvenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            LowerProvenance::Fractional => "fractional",
            LowerProvenance::CliqueLemma => "clique-lemma",
            LowerProvenance::ProductTrick => "product-trick",
            LowerProvenance::Clique => "clique",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBound {
    pub value: Rational,
    pub provenance: LowerProvenance,
}

fn edgeless_certificate(g: &Graph) -> Result<BaseCertificate> {
    let z2 = AbelianGroup::cyclic(2)?;
    BaseCertificate::new(
        g.label(),
        z2.clone(),
        z2.elements().collect(),
        vec![z2.identity(); g.n()],
    )
}

/// Smallest reciprocal density over a circular-colouring base, an independent-set base
/// (for Cayley graphs), the supplied seeds and exhaustive searches over `Z_2 … Z_nmax`
/// and `extra_groups`. The result never exceeds `χ_c(G)` (or the best circular colouring
/// found when the `χ_c` search runs out of budget).
pub fn gyro_upper_bound(
    g: &Graph,
    nmax: usize,
    extra_groups: &[AbelianGroup],
    seeds: &[BaseCertificate],
    opts: &SigmaOptions,
) -> Result<UpperBound> {
    let circ = circular_chromatic_budgeted(g, Some(opts.budget)).colouring;
    upper_bound_with(g, &circ, nmax, extra_groups, seeds, opts)
}

fn upper_bound_with(
    g: &Graph,
    circ: &CircularColouring,
    nmax: usize,
    extra_groups: &[AbelianGroup],
    seeds: &[BaseCertificate],
    opts: &SigmaOptions,
) -> Result<UpperBound> {
    if nmax < 2 {
        return Err(Error::input("nmax must be at least 2"));
    }
    if g.edge_count() == 0 {
        return Ok(UpperBound {
            value: int(1),
            certificate: edgeless_certificate(g)?,
            source: UpperSource::Edgeless,
            exact: true,
        });
    }
    let mut candidates: Vec<(BaseCertificate, UpperSource)> = Vec::new();
    candidates.push((
        base_from_circular_coloring(g, circ.p, circ.q, &circ.map)?,
        UpperSource::CircularColouring,
    ));
    if g.cayley_structure().is_some() {
        let (_, set) = independence_number(g);
        candidates.push((
            base_from_independent_set(g, &set)?,
            UpperSource::IndependentSet,
        ));
    }
    for (i, seed) in seeds.iter().enumerate() {
        require_valid(g, seed)?;
        candidates.push((seed.clone(), UpperSource::Seed(i)));
    }
    let mut exact = true;
    let groups = (2..=nmax as u32)
        .map(AbelianGroup::cyclic)
        .chain(extra_groups.iter().cloned().map(Ok));
    for group in groups {
        let group = group?;
        let res = sigma_group_exact(g, &group, opts)?;
        exact &= res.exact;
        if let Some(cert) = res.certificate {
            candidates.push((cert, UpperSource::GroupSearch(group.label())));
        }
    }
    let (certificate, source) = candidates
        .into_iter()
        .reduce(|best, next| {
            if next.0.density() > best.0.density() {
                next
            } else {
                best
            }
        })
        .expect("circular candidate is always present");
    Ok(UpperBound {
        value: certificate.density().recip(),
        certificate,
        source,
        exact,
    })
}

/// Largest of `χ_f(G)`, the clique lemma `n ω / (n - 1)` (when `ω < χ`) and, if
/// requested and `G` is disconnected, `χ_f(G_1 □ G_2)` for a split of `G` into
/// `G_1 ∪ G_2`.
pub fn gyro_lower_bound(
    g: &Graph,
    use_product_trick: bool,
    column_cap: usize,
) -> Result<LowerBound> {
    if g.edge_count() == 0 {
        return Ok(LowerBound {
            value: int(1),
            provenance: LowerProvenance::Fractional,
        });
    }
    let mut best = match fractional_chromatic(g, column_cap) {
        Ok(w) => LowerBound {
            value: w.value,
            provenance: LowerProvenance::Fractional,
        },
        Err(Error::Budget { .. }) => LowerBound {
            value: int(clique_number(g) as i64),
            provenance: LowerProvenance::Clique,
        },
        Err(e) => return Err(e),
    };
    let mut offer = |value: Rational, provenance| {
        if value > best.value {
            best = LowerBound { value, provenance };
        }
    };
    let n = g.n() as i64;
    let omega = clique_number(g);
    if omega < chromatic_number(g).k {
        offer(
            Rational::new((n * omega as i64).into(), (n - 1).into()),
            LowerProvenance::CliqueLemma,
        );
    }
    if use_product_trick {
        for (a, b) in union_splits(g) {
            let w = fractional_chromatic(&cartesian(&a, &b), column_cap)?;
            offer(w.value, LowerProvenance::ProductTrick);
        }
    }
    Ok(best)
}

/// Ways of writing `G` as a disjoint union: the recorded operands when `G` was built by
/// `union`, otherwise each component against the rest (for at most 8 components).
fn union_splits(g: &Graph) -> Vec<(Graph, Graph)> {
    if let Some((a, b)) = g.union_parts() {
        return vec![(a.clone(), b.clone())];
    }
    let comps = g.components();
    if comps.len() < 2 || comps.len() > 8 {
        return Vec::new();
    }
    let limit = if comps.len() == 2 { 1 } else { comps.len() };
    comps
        .iter()
        .take(limit)
        .map(|c| {
            let rest: Vec<usize> = (0..g.n()).filter(|v| c.binary_search(v).is_err()).collect();
            (g.induced_subgraph(c), g.induced_subgraph(&rest))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BoundsOptions {
    pub nmax: usize,
    pub extra_groups: Vec<AbelianGroup>,
    pub seeds: Vec<BaseCertificate>,
    pub use_product_trick: bool,
    pub column_cap: usize,
    /// Node budget for each homomorphism test of the `χ_c` computation.
    pub circular_budget: Option<u64>,
    pub sigma: SigmaOptions,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            nmax: 10,
            extra_groups: Vec::new(),
            seeds: Vec::new(),
            use_product_trick: true,
            column_cap: 20_000,
            circular_budget: Some(5_000_000),
            sigma: SigmaOptions::default(),
        }
    }
}

/// `χ_f ≤ [lower, upper] ≤ χ_c` for the gyrochromatic number, with `χ`.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub chi_f: Option<Rational>,
    /// `χ_c(G)`, or an upper bound on it when `chi_c_exact` is false.
    pub chi_c: Rational,
    pub chi_c_exact: bool,
    pub chi: usize,
    pub lower: LowerBound,
    pub upper: UpperBound,
    /// All searches completed within budget and `χ_f` was computed.
    pub exact: bool,
}

impl BoundsReport {
    /// `lower == upper`.
    pub fn is_tight(&self) -> bool {
        self.lower.value == self.upper.value
    }
}

pub fn bounds(g: &Graph, opts: &BoundsOptions) -> Result<BoundsReport> {
    let chi_f = match fractional_chromatic(g, opts.column_cap) {
        Ok(w) => Some(w.value),
        Err(Error::Budget { .. }) => None,
        Err(e) => return Err(e),
    };
    let circ = circular_chromatic_budgeted(g, opts.circular_budget);
    let chi_c = circ.colouring.value.clone();
    let chi = chromatic_number(g).k;
    let (lower, lower_exact) = match gyro_lower_bound(g, opts.use_product_trick, opts.column_cap) {
        Ok(l) => (l, true),
        Err(Error::Budget { .. }) => (gyro_lower_bound(g, false, opts.column_cap)?, false),
        Err(e) => return Err(e),
    };
    let upper = upper_bound_with(
        g,
        &circ.colouring,
        opts.nmax,
        &opts.extra_groups,
        &opts.seeds,
        &opts.sigma,
    )?;
    if lower.value > upper.value || upper.value > chi_c {
        return Err(Error::Internal(format!(
            "bounds out of order: lower {} upper {} χ_c {}",
            lower.value, upper.value, chi_c
        )));
    }
    let exact = chi_f.is_some() && lower_exact && upper.exact;
    Ok(BoundsReport {
        chi_f,
        chi_c,
        chi_c_exact: circ.exact,
        chi,
        lower,
        upper,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, disjoint_union, g5, lexicographic, line_graph, petersen};
    use crate::rational::ratio;

    #[test]
    fn upper_examples() {
        let c5 = cycle(5).unwrap();
        let u = gyro_upper_bound(&c5, 5, &[], &[], &SigmaOptions::default()).unwrap();
        assert_eq!(u.value, ratio(5, 2));
        let h = lexicographic(&complete(2).unwrap(), &c5);
        let u = gyro_upper_bound(
            &h,
            2,
            &[AbelianGroup::cyclic(10).unwrap()],
            &[],
            &SigmaOptions::default(),
        )
        .unwrap();
        assert_eq!(u.value, int(5));
    }

    #[test]
    fn lower_examples() {
        let l = line_graph(&petersen());
        let b = gyro_lower_bound(&l, true, 10_000).unwrap();
        assert_eq!(b.value, ratio(45, 14));
        assert_eq!(b.provenance, LowerProvenance::CliqueLemma);
        let u = disjoint_union(
            &complete(5).unwrap(),
            &lexicographic(&complete(2).unwrap(), &cycle(5).unwrap()),
        );
        let b = gyro_lower_bound(&u, true, 10_000).unwrap();
        assert_eq!(b.value, ratio(50, 9));
        assert_eq!(b.provenance, LowerProvenance::ProductTrick);
        let b = gyro_lower_bound(&cycle(5).unwrap(), true, 100).unwrap();
        assert_eq!(
            (b.value, b.provenance),
            (ratio(5, 2), LowerProvenance::Fractional)
        );
    }

    #[test]
    fn g5_is_tight() {
        let r = bounds(
            &g5(),
            &BoundsOptions {
                nmax: 2,
                ..BoundsOptions::default()
            },
        )
        .unwrap();
        assert_eq!(r.lower.value, ratio(25, 4));
        assert_eq!(r.upper.value, ratio(25, 4));
        assert!(r.is_tight());
    }
}
