use crate::bitset::BitSet;
use crate::graphs::{AbelianGroup, Graph, GroupElement};
use crate::rational::Rational;
use crate::{Error, Result};

/// A coloring `Z`-base: a set `A ⊆ Z` and a vertex map `f: V(G) -> Z`.
///
/// Validity (`A + f(u)` and `A + f(v)` disjoint on every edge) is a property of the pair
/// with a graph and is checked by [`verify_base`], never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCertificate {
    pub graph_label: String,
    pub group: AbelianGroup,
    /// Sorted, duplicate-free.
    pub a: Vec<GroupElement>,
    /// Indexed by vertex.
    pub f: Vec<GroupElement>,
}

/// First edge whose translates meet, with an element of the intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub element: GroupElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub density: Rational,
    pub violation: Option<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

impl BaseCertificate {
    pub fn new(
        graph_label: impl Into<String>,
        group: AbelianGroup,
        mut a: Vec<GroupElement>,
        f: Vec<GroupElement>,
    ) -> Result<Self> {
        for e in a.iter().chain(&f) {
            group.check(e)?;
        }
        a.sort();
        a.dedup();
        if a.is_empty() {
            return Err(Error::input("base set A must be non-empty"));
        }
        Ok(BaseCertificate {
            graph_label: graph_label.into(),
            group,
            a,
            f,
        })
    }

    pub fn density(&self) -> Rational {
        Rational::new(
            (self.a.len() as i64).into(),
            (self.group.order() as i64).into(),
        )
    }

    pub(crate) fn a_indices(&self) -> Vec<usize> {
        self.a.iter().map(|e| self.group.index(e)).collect()
    }

    pub fn f_indices(&self) -> Vec<usize> {
        self.f.iter().map(|e| self.group.index(e)).collect()
    }

    /// Certificate for `G` obtained by composing with a homomorphism `G -> H`, where
    /// `self` is a certificate for `H`.
    pub fn pull_back(&self, label: impl Into<String>, hom: &[usize]) -> Result<BaseCertificate> {
        let f = hom
            .iter()
            .map(|&t| {
                self.f
                    .get(t)
                    .cloned()
                    .ok_or_else(|| Error::input(format!("homomorphism image {t} out of range")))
            })
            .collect::<Result<_>>()?;
        BaseCertificate::new(label, self.group.clone(), self.a.clone(), f)
    }
}

/// Checks every edge's translates for disjointness. Shape mismatches are input errors;
/// an invalid base is reported in-band with the first offending edge.
pub fn verify_base(g: &Graph, cert: &BaseCertificate) -> Result<ValidityReport> {
    if cert.f.len() != g.n() {
        return Err(Error::input(format!(
            "certificate maps {} vertices but the graph has {}",
            cert.f.len(),
            g.n()
        )));
    }
    if cert.a.is_empty() {
        return Err(Error::input("base set A must be non-empty"));
    }
    for e in cert.a.iter().chain(&cert.f) {
        cert.group.check(e)?;
    }
    let group = &cert.group;
    let order = group.order();
    let a_set = BitSet::from_iter_with_len(order, cert.a_indices());
    let mut violation = None;
    'edges: for (u, v) in g.edges() {
        let (fu, fv) = (&cert.f[u], &cert.f[v]);
        for a in &cert.a {
            let x = group.add(a, fu);
            if a_set.contains(group.index(&group.sub(&x, fv))) {
                violation = Some(Violation { u, v, element: x });
                break 'edges;
            }
        }
    }
    Ok(ValidityReport {
        density: cert.density(),
        violation,
    })
}

pub(crate) fn require_valid(g: &Graph, cert: &BaseCertificate) -> Result<()> {
    match verify_base(g, cert)?.violation {
        None => Ok(()),
        Some(v) => Err(Error::input(format!(
            "certificate is not a coloring base: translates of edge {}-{} meet at {}",
            v.u, v.v, v.element
        ))),
    }
}
