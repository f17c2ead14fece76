//! Certificate constructions: from independent sets of Cayley graphs, from circular
//! colourings, product lifting, modulus expansion, CRT inflation and the Kneser
//! characteristic-vector homomorphism.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::certificate::{require_valid, BaseCertificate};
use crate::graphs::{
    cartesian, circular_clique, hamming_cayley, is_homomorphism, kneser, kneser_subsets,
    AbelianGroup, Graph, GroupElement,
};
use crate::{Error, Result};

/// `A = I`, `f = identity` for a graph built as `C(Z, S)`.
pub fn base_from_independent_set(g: &Graph, set: &[usize]) -> Result<BaseCertificate> {
    let cayley = g.cayley_structure().ok_or_else(|| {
        Error::input(format!(
            "{} was not constructed as a Cayley graph",
            g.label()
        ))
    })?;
    if set.is_empty() || !g.is_independent(set) {
        return Err(Error::input(
            "vertex set is not a non-empty independent set",
        ));
    }
    let group = &cayley.group;
    let cert = BaseCertificate::new(
        g.label(),
        group.clone(),
        set.iter().map(|&v| group.element(v)).collect(),
        group.elements().collect(),
    )?;
    debug_assert!(super::verify_base(g, &cert)
        .map(|r| r.is_valid())
        .unwrap_or(false));
    Ok(cert)
}

/// Discretised arc colouring: `Z_p`, `A = {0, …, q-1}`, `f = hom` for a homomorphism
/// `G -> K_{p/q}`.
pub fn base_from_circular_coloring(
    g: &Graph,
    p: usize,
    q: usize,
    hom: &[usize],
) -> Result<BaseCertificate> {
    let target = circular_clique(p, q)?;
    if !is_homomorphism(g, &target, hom) {
        return Err(Error::input(format!(
            "map is not a homomorphism into K_{p}/{q}"
        )));
    }
    let group = AbelianGroup::cyclic(p as u32)?;
    BaseCertificate::new(
        g.label(),
        group,
        (0..q as u32).map(|x| GroupElement::new(vec![x])).collect(),
        hom.iter()
            .map(|&t| GroupElement::new(vec![t as u32]))
            .collect(),
    )
}

/// `f'(v, v') = f(v) + f(v')` on `G □ G` with the same `A`.
pub fn lift_base_to_product(g: &Graph, cert: &BaseCertificate) -> Result<BaseCertificate> {
    require_valid(g, cert)?;
    let n = g.n();
    let group = &cert.group;
    let f = (0..n * n)
        .map(|x| group.add(&cert.f[x / n], &cert.f[x % n]))
        .collect();
    let product = cartesian(g, g);
    BaseCertificate::new(product.label(), group.clone(), cert.a.clone(), f)
}

/// From `Z_N` to `Z_{mN}`: `A' = {x + jN : x ∈ A, 0 <= j < m}` with `f` unchanged.
pub fn expand_modulus(cert: &BaseCertificate, m: usize) -> Result<BaseCertificate> {
    if !cert.group.is_cyclic() {
        return Err(Error::input("modulus expansion needs a cyclic group"));
    }
    if m == 0 {
        return Err(Error::input("expansion factor must be at least 1"));
    }
    let n = cert.group.moduli()[0] as usize;
    let big = AbelianGroup::cyclic(
        u32::try_from(n * m).map_err(|_| Error::input("expanded modulus too large"))?,
    )?;
    let a = cert
        .a
        .iter()
        .flat_map(|x| (0..m).map(move |j| GroupElement::new(vec![x.residues[0] + (j * n) as u32])))
        .collect();
    BaseCertificate::new(cert.graph_label.clone(), big, a, cert.f.clone())
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Primes strictly between `(k+1)N` and `(k+2)N`.
pub fn crt_window_primes(n: u64, k: u64) -> Vec<u64> {
    ((k + 1) * n + 1..(k + 2) * n)
        .filter(|&p| is_prime(p))
        .collect()
}

/// Chinese-remainder inflation of a valid base over `Z_N^d` into `Z_M`, `M = ∏ P_i`.
///
/// Every coordinate of `A` is spread to `x + yN` for `y ∈ {0, …, k-1}`; because
/// `P_i > (k+1)N` no sum of a base element and a shift wraps around, so the
/// translates stay disjoint in `Z_{P_1} × … × Z_{P_d}`, which the CRT identifies with
/// `Z_M`. The density becomes `k^d |A| / M`. `G` is needed to check the input base.
pub fn crt_inflate(
    g: &Graph,
    cert: &BaseCertificate,
    k: usize,
    primes: &[u64],
) -> Result<BaseCertificate> {
    require_valid(g, cert)?;
    let moduli = cert.group.moduli();
    let n = moduli[0] as u64;
    if moduli.iter().any(|&m| m as u64 != n) {
        return Err(Error::input(
            "CRT inflation needs a group of the form Z_N^d",
        ));
    }
    let d = moduli.len();
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    if primes.len() != d {
        return Err(Error::input(format!(
            "need {d} primes, got {}",
            primes.len()
        )));
    }
    let (lo, hi) = ((k as u64 + 1) * n, (k as u64 + 2) * n);
    for (i, &p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        if p <= lo || p >= hi {
            return Err(Error::input(format!(
                "prime {p} is outside the window ({lo}, {hi})"
            )));
        }
        if primes[..i].contains(&p) {
            return Err(Error::input(format!("prime {p} is repeated")));
        }
    }
    let m: u64 = primes.iter().product();
    let group = AbelianGroup::cyclic(
        u32::try_from(m).map_err(|_| Error::input("product of primes too large"))?,
    )?;
    let crt = |residues: &[u64]| -> u32 {
        // x = Σ r_i (M/P_i) ((M/P_i)^{-1} mod P_i)  (mod M)
        let big_m = BigInt::from(m);
        let mut x = BigInt::zero();
        for (&r, &p) in residues.iter().zip(primes) {
            let mi = m / p;
            let inv = BigInt::from(mi)
                .extended_gcd(&BigInt::from(p))
                .x
                .mod_floor(&BigInt::from(p));
            x += BigInt::from(r) * BigInt::from(mi) * inv;
        }
        x.mod_floor(&big_m).to_u32().expect("below M")
    };
    let mut a = Vec::with_capacity(cert.a.len() * k.pow(d as u32));
    for x in &cert.a {
        let mut y = vec![0u64; d];
        loop {
            let coords: Vec<u64> = (0..d).map(|i| x.residues[i] as u64 + y[i] * n).collect();
            a.push(GroupElement::new(vec![crt(&coords)]));
            let mut i = 0;
            while i < d {
                y[i] += 1;
                if y[i] < k as u64 {
                    break;
                }
                y[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    let f = cert
        .f
        .iter()
        .map(|e| {
            let coords: Vec<u64> = e.residues.iter().map(|&r| r as u64).collect();
            GroupElement::new(vec![crt(&coords)])
        })
        .collect();
    BaseCertificate::new(cert.graph_label.clone(), group, a, f)
}

/// The homomorphism `K(n, k) -> C(Z_2^n, weight-2k vectors)` sending a subset to its
/// characteristic vector (coordinate `i` is element `i`). Returns both graphs and the map.
pub fn kneser_characteristic_hom(n: usize, k: usize) -> Result<(Graph, Graph, Vec<usize>)> {
    let source = kneser(n, k)?;
    let target = hamming_cayley(n, 2 * k)?;
    let group = target
        .cayley_structure()
        .expect("hamming graphs are Cayley graphs")
        .group
        .clone();
    let map: Vec<usize> = kneser_subsets(n, k)
        .into_iter()
        .map(|mask| {
            let residues = (0..n).map(|i| ((mask >> i) & 1) as u32).collect();
            group.index(&GroupElement::new(residues))
        })
        .collect();
    if !is_homomorphism(&source, &target, &map) {
        return Err(Error::Internal(
            "characteristic-vector map is not a homomorphism".into(),
        ));
    }
    Ok((source, target, map))
}
