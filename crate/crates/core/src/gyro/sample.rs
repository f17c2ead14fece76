//! Random valid base certificates.

use rand::seq::SliceRandom;
use rand::Rng;

use super::certificate::BaseCertificate;
use crate::bitset::BitSet;
use crate::graphs::{AbelianGroup, Graph};
use crate::Result;

/// Draws a uniformly random map `f: V -> Z` until adjacent vertices get distinct images
/// (at most `attempts` tries), then grows `A` greedily in random order while
/// `(A - A)` avoids every edge difference `f(u) - f(v)`. The result is always a valid
/// base; `None` if no proper map was drawn.
pub fn random_valid_base<R: Rng + ?Sized>(
    g: &Graph,
    group: &AbelianGroup,
    attempts: usize,
    rng: &mut R,
) -> Result<Option<BaseCertificate>> {
    let order = group.order();
    let sub = group.difference_table();
    for _ in 0..attempts {
        let f: Vec<usize> = (0..g.n()).map(|_| rng.gen_range(0..order)).collect();
        if g.edges().iter().any(|&(u, v)| f[u] == f[v]) {
            continue;
        }
        let mut forbidden = BitSet::new(order);
        for (u, v) in g.edges() {
            forbidden.insert(sub[f[u] * order + f[v]] as usize);
            forbidden.insert(sub[f[v] * order + f[u]] as usize);
        }
        let mut elements: Vec<usize> = (0..order).collect();
        elements.shuffle(rng);
        let mut a: Vec<usize> = Vec::new();
        for x in elements {
            if a.iter()
                .all(|&y| !forbidden.contains(sub[x * order + y] as usize))
            {
                a.push(x);
            }
        }
        let cert = BaseCertificate::new(
            g.label(),
            group.clone(),
            a.into_iter().map(|x| group.element(x)).collect(),
            f.into_iter().map(|x| group.element(x)).collect(),
        )?;
        return Ok(Some(cert));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle, random_graph};
    use crate::gyro::verify_base;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let z7 = AbelianGroup::cyclic(7).unwrap();
        let c5 = cycle(5).unwrap();
        for _ in 0..20 {
            let cert = random_valid_base(&c5, &z7, 50, &mut rng).unwrap().unwrap();
            assert!(verify_base(&c5, &cert).unwrap().is_valid());
        }
        let z = AbelianGroup::new(vec![3, 3]).unwrap();
        for _ in 0..20 {
            let g = random_graph(6, 0.4, &mut rng).unwrap();
            if let Some(cert) = random_valid_base(&g, &z, 50, &mut rng).unwrap() {
                assert!(verify_base(&g, &cert).unwrap().is_valid());
            }
        }
        let z2 = AbelianGroup::cyclic(2).unwrap();
        assert!(random_valid_base(&c5, &z2, 20, &mut rng).unwrap().is_none());
    }
}
