use std::collections::HashMap;

use super::{
    AbelianGroup, BitSet, CayleyStructure, ConnectionSet, Graph, GroupElement, Permutation,
};
use crate::{Error, Result};

/// `K_n` as the circulant on `Z_n` with every non-zero connection.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("K_0 has no vertices"));
    }
    if n == 1 {
        let g = Graph::from_rows("K1", vec![BitSet::new(1)]);
        return Ok(g.with_symmetry(vec![vec![0]]));
    }
    let all: Vec<u32> = (1..n as u32).collect();
    let s = ConnectionSet::cyclic(n as u32, &all)?;
    Ok(circulant(n as u32, &s)?.with_label(format!("K{n}")))
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("C_{n} needs at least 3 vertices")));
    }
    let s = ConnectionSet::cyclic(n as u32, &[1, n as u32 - 1])?;
    Ok(circulant(n as u32, &s)?.with_label(format!("C{n}")))
}

/// Circulant graph `C(N, S)`: `i ~ j` iff `j - i ∈ S`.
pub fn circulant(modulus: u32, s: &ConnectionSet) -> Result<Graph> {
    if !s.group().is_cyclic() || s.group().moduli()[0] != modulus {
        return Err(Error::input(format!(
            "connection set lives in Z_{}, not Z_{modulus}",
            s.group().label()
        )));
    }
    let residues: Vec<String> = s
        .elements()
        .iter()
        .map(|e| e.residues[0].to_string())
        .collect();
    Ok(cayley(s.group(), s)?.with_label(format!("circulant:{modulus}:{}", residues.join(","))))
}

/// Cayley graph `C(Z, S)` with vertices in mixed-radix order.
pub fn cayley(group: &AbelianGroup, s: &ConnectionSet) -> Result<Graph> {
    if s.group() != group {
        return Err(Error::input("connection set belongs to a different group"));
    }
    let n = group.order();
    let elems: Vec<GroupElement> = group.elements().collect();
    let conn: Vec<usize> = s.elements().iter().map(|e| group.index(e)).collect();
    let adds = group.addition_table();
    let mut adj = vec![BitSet::new(n); n];
    for x in 0..n {
        for &c in &conn {
            adj[x].insert(adds[x * n + c] as usize);
        }
    }
    // translations by the unit vectors generate the group, hence act transitively
    let generators: Vec<Permutation> = (0..group.rank())
        .map(|i| {
            let mut e = group.identity();
            e.residues[i] = 1;
            elems
                .iter()
                .map(|x| group.index(&group.add(x, &e)) as u32)
                .collect()
        })
        .collect();
    Ok(Graph::from_rows(format!("cayley:{}", group.label()), adj)
        .with_symmetry(generators)
        .with_cayley(CayleyStructure {
            group: group.clone(),
            connection: s.clone(),
        }))
}

/// `k`-subsets of `[n]` as bitmasks in colex order (numeric order of the masks).
pub fn kneser_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n || n > 63 {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    let mut mask: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while mask < limit {
        out.push(mask);
        // Gosper's hack: next mask with the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// Kneser graph `K(n, k)`: `k`-subsets of `[n]`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::input(format!("kneser({n},{k}) needs n >= 2k >= 2")));
    }
    if n > 63 {
        return Err(Error::input("kneser graphs are limited to n <= 63"));
    }
    let subsets = kneser_subsets(n, k);
    let m = subsets.len();
    let index: HashMap<u64, usize> = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut adj = vec![BitSet::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            if subsets[i] & subsets[j] == 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    // the cyclic shift and the transposition (0 1) generate the symmetric group on [n]
    let shift = |s: u64| ((s << 1) | (s >> (n - 1))) & ((1u64 << n) - 1);
    let swap = |s: u64| {
        let b0 = s & 1;
        let b1 = (s >> 1) & 1;
        (s & !3) | (b0 << 1) | b1
    };
    let generators: Vec<Permutation> = [
        subsets.iter().map(|&s| index[&shift(s)] as u32).collect(),
        subsets.iter().map(|&s| index[&swap(s)] as u32).collect(),
    ]
    .into();
    Ok(Graph::from_rows(format!("kneser:{n},{k}"), adj).with_symmetry(generators))
}

pub fn petersen() -> Graph {
    kneser(5, 2)
        .expect("K(5,2) is valid")
        .with_label("petersen")
}

/// Cayley graph on `Z_2^n` whose connection set is every vector of Hamming weight `d`.
pub fn hamming_cayley(n: usize, d: usize) -> Result<Graph> {
    if d < 1 || d > n {
        return Err(Error::input(format!("hamming({n},{d}) needs 1 <= d <= n")));
    }
    let group = AbelianGroup::new(vec![2; n])?;
    let elements = group
        .elements()
        .filter(|e| e.residues.iter().filter(|&&r| r == 1).count() == d)
        .collect();
    let s = ConnectionSet::new(group.clone(), elements)?;
    Ok(cayley(&group, &s)?.with_label(format!("hamming:{n},{d}")))
}

/// Circular clique `K_{p/q}`: `i ~ j` iff `q <= |i - j| <= p - q`.
pub fn circular_clique(p: usize, q: usize) -> Result<Graph> {
    if q == 0 || p < 2 * q {
        return Err(Error::input(format!(
            "circular clique {p}/{q} needs p >= 2q >= 2"
        )));
    }
    let s = ConnectionSet::cyclic(p as u32, &(q as u32..=(p - q) as u32).collect::<Vec<_>>())?;
    Ok(circulant(p as u32, &s)?.with_label(format!("circclique:{p},{q}")))
}

/// Cayley graph on `Z_5^2` with connection set `Z_5^2 \ {-1,0,1}^2`.
pub fn g5() -> Graph {
    let group = AbelianGroup::new(vec![5, 5]).expect("valid group");
    let near = |r: u32| r == 0 || r == 1 || r == 4;
    let elements = group
        .elements()
        .filter(|e| !(near(e.residues[0]) && near(e.residues[1])))
        .collect();
    let s = ConnectionSet::new(group.clone(), elements).expect("symmetric");
    cayley(&group, &s).expect("valid").with_label("g5")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn kneser_examples() {
        let p = kneser(5, 2).unwrap();
        assert_eq!(p.n(), 10);
        // each 2-subset is disjoint from C(3,2) others
        assert_eq!(p.edge_count(), binomial(5, 2) * binomial(3, 2) / 2);
        assert!(p.is_vertex_transitive());
        let k2 = kneser(2, 1).unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let m = kneser(4, 2).unwrap();
        assert_eq!((m.n(), m.edge_count()), (6, 3));
        assert!(kneser(3, 2).is_err());
    }

    #[test]
    fn colex_order() {
        let subs = kneser_subsets(4, 2);
        assert_eq!(subs, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn circulant_examples() {
        let c5 = circulant(5, &ConnectionSet::cyclic(5, &[1, 4]).unwrap()).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(ConnectionSet::cyclic(4, &[1]).is_err());
        let h = circulant(
            10,
            &ConnectionSet::cyclic(10, &[1, 3, 4, 5, 6, 7, 9]).unwrap(),
        )
        .unwrap();
        assert_eq!(h.edge_count(), 35);
    }

    #[test]
    fn cayley_examples() {
        let g = g5();
        assert_eq!(g.n(), 25);
        assert!((0..25).all(|v| g.degree(v) == 16));
        let group = AbelianGroup::new(vec![2; 5]).unwrap();
        let s = ConnectionSet::new(
            group.clone(),
            group
                .elements()
                .filter(|e| e.residues.iter().sum::<u32>() == 4)
                .collect(),
        )
        .unwrap();
        let h = cayley(&group, &s).unwrap();
        assert_eq!(h.n(), 32);
        assert!((0..32).all(|v| h.degree(v) == 5));
        let k2 = cayley(
            &AbelianGroup::cyclic(2).unwrap(),
            &ConnectionSet::cyclic(2, &[1]).unwrap(),
        )
        .unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
    }

    #[test]
    fn hamming_examples() {
        let h = hamming_cayley(2, 2).unwrap();
        assert_eq!((h.n(), h.edge_count()), (4, 2));
        let h = hamming_cayley(3, 2).unwrap();
        assert!((0..8).all(|v| h.degree(v) == 3));
        assert_eq!(hamming_cayley(5, 4).unwrap().n(), 32);
        assert!(hamming_cayley(3, 0).is_err());
        assert!(hamming_cayley(3, 4).is_err());
    }

    #[test]
    fn circular_clique_examples() {
        assert_eq!(circular_clique(3, 1).unwrap(), complete(3).unwrap());
        let c = circular_clique(5, 2).unwrap();
        assert_eq!(c, cycle(5).unwrap().relabel(&[0, 2, 4, 1, 3]).unwrap());
        let m = circular_clique(4, 2).unwrap();
        assert_eq!((m.n(), m.edge_count()), (4, 2));
        assert!(circular_clique(3, 2).is_err());
        for p in 2..=8 {
            assert_eq!(circular_clique(p, 1).unwrap(), complete(p).unwrap());
        }
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete(1).unwrap().n(), 1);
        assert!(complete(1).unwrap().is_vertex_transitive());
        assert_eq!(complete(5).unwrap().edge_count(), 10);
    }
}
