//! Finite abelian groups written as products of cyclic factors.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `Z_{m_1} x ... x Z_{m_d}`. Elements are indexed in mixed-radix order with the
/// first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    moduli: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    pub residues: Vec<u32>,
}

impl GroupElement {
    pub fn new(residues: Vec<u32>) -> Self {
        GroupElement { residues }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::input("group needs at least one cyclic factor"));
        }
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::input(format!(
                "cyclic factor Z_{m} is trivial; moduli must be >= 2"
            )));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .ok_or_else(|| Error::input("group order overflows"))?;
        if order > u32::MAX as usize {
            return Err(Error::input("group order too large"));
        }
        Ok(AbelianGroup { moduli })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        AbelianGroup::new(vec![n])
    }

    /// Parses `"N"` or `"m1xm2x..."`.
    pub fn parse(spec: &str) -> Result<Self> {
        let moduli = spec
            .split(['x', 'X'])
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| {
                    Error::parse(format!("group '{spec}'"), format!("bad modulus '{t}'"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(moduli)
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.moduli.len() == 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(vec![0; self.moduli.len()])
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.residues.len() == self.moduli.len()
            && e.residues.iter().zip(&self.moduli).all(|(r, m)| r < m)
    }

    pub fn check(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "element {e} is not a reduced element of Z_{}",
                self.label()
            )))
        }
    }

    pub fn index(&self, e: &GroupElement) -> usize {
        e.residues
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&r, &m)| acc * m as usize + r as usize)
    }

    pub fn element(&self, mut idx: usize) -> GroupElement {
        let mut residues = vec![0u32; self.moduli.len()];
        for (slot, &m) in residues.iter_mut().zip(&self.moduli).rev() {
            *slot = (idx % m as usize) as u32;
            idx /= m as usize;
        }
        GroupElement::new(residues)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.residues
                .iter()
                .zip(&b.residues)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| ((x as u64 + y as u64) % m as u64) as u32)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.residues
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        )
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Table `t[a * order + b] = index(a - b)`.
    pub fn difference_table(&self) -> Vec<u32> {
        let n = self.order();
        let elems: Vec<GroupElement> = self.elements().collect();
        let mut table = vec![0u32; n * n];
        for (a, ea) in elems.iter().enumerate() {
            for (b, eb) in elems.iter().enumerate() {
                table[a * n + b] = self.index(&self.sub(ea, eb)) as u32;
            }
        }
        table
    }

    /// Table `t[a * order + b] = index(a + b)`.
    pub fn addition_table(&self) -> Vec<u32> {
        let n = self.order();
        let elems: Vec<GroupElement> = self.elements().collect();
        let mut table = vec![0u32; n * n];
        for (a, ea) in elems.iter().enumerate() {
            for (b, eb) in elems.iter().enumerate() {
                table[a * n + b] = self.index(&self.add(ea, eb)) as u32;
            }
        }
        table
    }

    /// Automorphisms generated by multiplying each coordinate by a unit and permuting
    /// factors of equal modulus, as index permutations. Factor permutations are dropped
    /// when the full product would exceed `limit` maps.
    pub fn automorphisms(&self, limit: usize) -> Vec<Vec<u32>> {
        let units: Vec<Vec<u32>> = self
            .moduli
            .iter()
            .map(|&m| (1..m).filter(|u| u.gcd(&m) == 1).collect())
            .collect();
        let unit_count: usize = units.iter().map(Vec::len).product();
        let mut perms = factor_permutations(&self.moduli);
        if unit_count.saturating_mul(perms.len()) > limit {
            perms = vec![(0..self.moduli.len()).collect()];
        }
        let d = self.moduli.len();
        let mut out = Vec::new();
        let mut choice = vec![0usize; d];
        loop {
            let mult: Vec<u32> = (0..d).map(|i| units[i][choice[i]]).collect();
            for perm in &perms {
                let map = (0..self.order())
                    .map(|idx| {
                        let e = self.element(idx);
                        let mut img = vec![0u32; d];
                        for i in 0..d {
                            img[perm[i]] = ((e.residues[i] as u64 * mult[i] as u64)
                                % self.moduli[i] as u64)
                                as u32;
                        }
                        self.index(&GroupElement::new(img)) as u32
                    })
                    .collect();
                out.push(map);
            }
            let mut i = 0;
            loop {
                if i == d {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < units[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    pub fn label(&self) -> String {
        self.moduli
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Permutations of factor positions that only swap factors with equal moduli.
fn factor_permutations(moduli: &[u32]) -> Vec<Vec<usize>> {
    let d = moduli.len();
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn rec(moduli: &[u32], current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = current.len();
        if i == moduli.len() {
            out.push(current.clone());
            return;
        }
        for j in 0..moduli.len() {
            if !used[j] && moduli[j] == moduli[i] {
                used[j] = true;
                current.push(j);
                rec(moduli, current, used, out);
                current.pop();
                used[j] = false;
            }
        }
    }
    rec(moduli, &mut current, &mut used, &mut out);
    out
}

/// Symmetric connection set `S` with `S = -S` and `0 ∉ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    group: AbelianGroup,
    elements: Vec<GroupElement>,
}

impl ConnectionSet {
    pub fn new(group: AbelianGroup, elements: Vec<GroupElement>) -> Result<Self> {
        for e in &elements {
            group.check(e)?;
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let zero = group.identity();
        if elements.binary_search(&zero).is_ok() {
            return Err(Error::input("connection set contains the identity"));
        }
        for e in &elements {
            let inv = group.neg(e);
            if elements.binary_search(&inv).is_err() {
                return Err(Error::input(format!(
                    "connection set is not symmetric: contains {e} but not {inv}"
                )));
            }
        }
        Ok(ConnectionSet { group, elements })
    }

    pub fn cyclic(n: u32, residues: &[u32]) -> Result<Self> {
        let group = AbelianGroup::cyclic(n)?;
        let elements = residues
            .iter()
            .map(|&r| GroupElement::new(vec![r]))
            .collect();
        ConnectionSet::new(group, elements)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_roundtrip() {
        let g = AbelianGroup::new(vec![2, 3, 5]).unwrap();
        assert_eq!(g.order(), 30);
        for i in 0..30 {
            assert_eq!(g.index(&g.element(i)), i);
        }
        assert_eq!(g.element(1).residues, vec![0, 0, 1]);
        assert_eq!(g.element(5).residues, vec![0, 1, 0]);
    }

    #[test]
    fn rejects_bad_groups() {
        assert!(AbelianGroup::new(vec![]).is_err());
        assert!(AbelianGroup::new(vec![1]).is_err());
        assert!(AbelianGroup::parse("5xa").is_err());
        assert_eq!(AbelianGroup::parse("5x5").unwrap().order(), 25);
    }

    #[test]
    fn connection_set_validation() {
        assert!(ConnectionSet::cyclic(5, &[1, 4]).is_ok());
        assert!(ConnectionSet::cyclic(4, &[1]).is_err());
        assert!(ConnectionSet::cyclic(4, &[0, 2]).is_err());
        assert!(ConnectionSet::cyclic(4, &[2]).is_ok());
    }

    #[test]
    fn automorphism_counts() {
        let z12 = AbelianGroup::cyclic(12).unwrap();
        assert_eq!(z12.automorphisms(1000).len(), 4);
        let z55 = AbelianGroup::new(vec![5, 5]).unwrap();
        let autos = z55.automorphisms(1000);
        assert_eq!(autos.len(), 32);
        for a in &autos {
            assert_eq!(a[0], 0);
            let mut sorted = a.clone();
            sorted.sort();
            assert_eq!(sorted, (0..25).collect::<Vec<u32>>());
        }
        let z2_5 = AbelianGroup::new(vec![2; 5]).unwrap();
        assert_eq!(z2_5.automorphisms(1000).len(), 120);
        assert_eq!(z2_5.automorphisms(10).len(), 1);
    }
}
