//! Rational-data gyrocolourings on the circle `[0, z)` and their exact discretisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::graphs::{AbelianGroup, Graph, GroupElement};
use crate::gyro::{verify_base, BaseCertificate, ValidityReport};
use crate::rational::Rational;
use crate::{Error, Result};

/// A `z`-gyrocolouring given by one base set (a union of half-open intervals of total
/// length one) and a rotation per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousGyrocoloring {
    pub z: Rational,
    /// Sorted, pairwise disjoint, non-adjacent half-open intervals `[a, b)`.
    pub base: Vec<(Rational, Rational)>,
    pub shifts: Vec<Rational>,
}

impl ContinuousGyrocoloring {
    /// Normalises the intervals and checks the invariants.
    pub fn new(
        z: Rational,
        base: Vec<(Rational, Rational)>,
        shifts: Vec<Rational>,
    ) -> Result<Self> {
        if !z.is_positive() {
            return Err(Error::input("circumference must be positive"));
        }
        let mut base = base;
        for (a, b) in &base {
            if a.is_negative() || a >= b || b > &z {
                return Err(Error::input(format!(
                    "interval [{a}, {b}) is not inside [0, {z})"
                )));
            }
        }
        base.sort();
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(base.len());
        for (a, b) in base {
            match merged.last_mut() {
                Some((_, end)) if a < *end => {
                    return Err(Error::input(format!("intervals overlap at {a}")));
                }
                Some((_, end)) if a == *end => *end = b,
                _ => merged.push((a, b)),
            }
        }
        let total: Rational = merged.iter().map(|(a, b)| b - a).sum();
        if !total.is_one() {
            return Err(Error::input(format!(
                "base has total length {total}, expected 1"
            )));
        }
        for (v, s) in shifts.iter().enumerate() {
            if s.is_negative() || s >= &z {
                return Err(Error::input(format!(
                    "shift {s} of vertex {v} is not in [0, {z})"
                )));
            }
        }
        Ok(ContinuousGyrocoloring {
            z,
            base: merged,
            shifts,
        })
    }

    /// Least common multiple of every denominator in the data.
    pub fn grid(&self) -> BigInt {
        let mut d = self.z.denom().clone();
        for (a, b) in &self.base {
            d = d.lcm(a.denom()).lcm(b.denom());
        }
        for s in &self.shifts {
            d = d.lcm(s.denom());
        }
        d
    }
}

fn to_u32(v: &BigInt, what: &str) -> Result<u32> {
    v.to_u32()
        .ok_or_else(|| Error::input(format!("{what} {v} does not fit the group size limit")))
}

fn as_integer(r: &Rational, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Internal(format!("{what} {r} is not on the grid")))
    }
}

/// Exact discretisation onto the grid `1/D`, `D` the lcm of all denominators: group
/// `Z_{zD}`, `A` the covered unit cells, `f(v) = D · shift(v)`. Density is `1/z`.
pub fn discretize(c: &ContinuousGyrocoloring) -> Result<BaseCertificate> {
    let mut d = c.grid();
    let mut modulus = as_integer(&(&c.z * Rational::from_integer(d.clone())), "z·D")?;
    if modulus < BigInt::from(2) {
        d *= 2;
        modulus *= 2;
    }
    let dd = Rational::from_integer(d.clone());
    let group = AbelianGroup::cyclic(to_u32(&modulus, "modulus")?)?;
    let mut a = Vec::new();
    for (lo, hi) in &c.base {
        let start = to_u32(&as_integer(&(lo * &dd), "endpoint")?, "endpoint")?;
        let end = to_u32(&as_integer(&(hi * &dd), "endpoint")?, "endpoint")?;
        a.extend((start..end).map(|x| GroupElement::new(vec![x])));
    }
    let f = c
        .shifts
        .iter()
        .map(|s| {
            Ok(GroupElement::new(vec![to_u32(
                &as_integer(&(s * &dd), "shift")?,
                "shift",
            )?]))
        })
        .collect::<Result<Vec<_>>>()?;
    let cert = BaseCertificate::new(
        format!("gyrocoloring:z={}", crate::rational::fmt(&c.z)),
        group,
        a,
        f,
    )?;
    if cert.density() != c.z.recip() {
        return Err(Error::Internal(
            "discretised density differs from 1/z".into(),
        ));
    }
    Ok(cert)
}

/// Inverse direction for a cyclic base: `z = N/|A|`, cell `x` becomes
/// `[x/|A|, (x+1)/|A|)` and `f(v)` becomes the rotation `f(v)/|A|`.
pub fn continuous_from_base(cert: &BaseCertificate) -> Result<ContinuousGyrocoloring> {
    if !cert.group.is_cyclic() {
        return Err(Error::input("continuous form needs a cyclic group"));
    }
    let n = cert.group.order() as i64;
    let k = cert.a.len() as i64;
    let cell = |x: i64| Rational::new(x.into(), k.into());
    let base = cert
        .a
        .iter()
        .map(|x| {
            let x = x.residues[0] as i64;
            (cell(x), cell(x + 1))
        })
        .collect();
    let shifts = cert.f.iter().map(|e| cell(e.residues[0] as i64)).collect();
    ContinuousGyrocoloring::new(Rational::new(n.into(), k.into()), base, shifts)
}

/// Scales a cyclic base by `r`: `Z_N -> Z_{rN}`, cell `x` becomes cells `rx … rx+r-1`,
/// `f -> r f`. The continuous colouring it describes is unchanged.
pub fn refine_grid(cert: &BaseCertificate, r: u32) -> Result<BaseCertificate> {
    if !cert.group.is_cyclic() || r == 0 {
        return Err(Error::input(
            "grid refinement needs a cyclic group and r >= 1",
        ));
    }
    let n = cert.group.moduli()[0];
    let group = AbelianGroup::cyclic(
        n.checked_mul(r)
            .ok_or_else(|| Error::input("modulus overflow"))?,
    )?;
    let a = cert
        .a
        .iter()
        .flat_map(|x| (0..r).map(move |j| GroupElement::new(vec![x.residues[0] * r + j])))
        .collect();
    let f = cert
        .f
        .iter()
        .map(|e| GroupElement::new(vec![e.residues[0] * r]))
        .collect();
    BaseCertificate::new(cert.graph_label.clone(), group, a, f)
}

pub fn verify_gyrocoloring(g: &Graph, c: &ContinuousGyrocoloring) -> Result<ValidityReport> {
    verify_base(g, &discretize(c)?)
}
