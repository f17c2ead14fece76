//! Seeded random graphs for corpora and property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{circulant, make_graph, ConnectionSet, Graph};
use crate::Result;

/// `G(n, p)`: each pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(make_graph(n, &edges)?.with_label(format!("random:{n}")))
}

/// A circulant on `Z_n` whose connection set contains each pair `{s, -s}` with
/// probability one half, and at least one such pair.
pub fn random_circulant<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<Graph> {
    let half: Vec<u32> = (1..=n / 2).collect();
    let mut chosen: Vec<u32> = half.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    if chosen.is_empty() {
        chosen.push(*half.choose(rng).expect("n >= 2"));
    }
    let mut residues = chosen.clone();
    residues.extend(chosen.iter().map(|&s| (n - s) % n));
    circulant(n, &ConnectionSet::cyclic(n, &residues)?)
}
