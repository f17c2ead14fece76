//! Independent sets via branch and bound on the complement (maximum clique with a
//! greedy colouring bound) and Bron–Kerbosch enumeration of maximal sets.

use crate::bitset::BitSet;
use crate::graphs::Graph;
use crate::{Error, Result};

fn complement_rows(g: &Graph) -> Vec<BitSet> {
    (0..g.n())
        .map(|u| {
            let mut row = g.row(u).complement();
            row.remove(u);
            row
        })
        .collect()
}

/// Greedy colouring of `p`; returns vertices grouped by colour and the colour number
/// (1-based) of each listed vertex.
fn colour_sort(rows: &[BitSet], p: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.count());
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(&rows[v]);
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

struct CliqueSearch<'a> {
    rows: &'a [BitSet],
    best: Vec<usize>,
    all_maximum: Option<Vec<Vec<usize>>>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, mut p: BitSet) {
        let (order, colours) = colour_sort(self.rows, &p);
        let collect_all = self.all_maximum.is_some();
        for i in (0..order.len()).rev() {
            let bound = current.len() + colours[i];
            if bound < self.best.len() || (!collect_all && bound == self.best.len()) {
                return;
            }
            let v = order[i];
            current.push(v);
            let next = p.intersection(&self.rows[v]);
            if next.is_empty() {
                self.record(current);
            } else {
                self.expand(current, next);
            }
            current.pop();
            p.remove(v);
        }
    }

    fn record(&mut self, current: &[usize]) {
        let mut found = current.to_vec();
        found.sort_unstable();
        match &mut self.all_maximum {
            Some(all) => {
                if found.len() > self.best.len() {
                    all.clear();
                    all.push(found.clone());
                    self.best = found;
                } else if found.len() == self.best.len() {
                    all.push(found);
                }
            }
            None => {
                if found.len() > self.best.len() {
                    self.best = found;
                }
            }
        }
    }
}

fn max_clique_in(rows: &[BitSet], n: usize) -> Vec<usize> {
    let mut search = CliqueSearch {
        rows,
        best: Vec::new(),
        all_maximum: None,
    };
    search.expand(&mut Vec::new(), BitSet::full(n));
    search.best
}

/// `α(G)` with a witness independent set (sorted).
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    let rows = complement_rows(g);
    let best = max_clique_in(&rows, g.n());
    debug_assert!(g.is_independent(&best));
    (best.len(), best)
}

/// `ω(G)` with a witness clique (sorted).
pub fn maximum_clique(g: &Graph) -> (usize, Vec<usize>) {
    let best = max_clique_in(g.rows(), g.n());
    (best.len(), best)
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).0
}

/// All independent sets of size `α(G)`, each sorted, in lexicographic order.
pub fn enumerate_maximum_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let rows = complement_rows(g);
    let mut search = CliqueSearch {
        rows: &rows,
        best: Vec::new(),
        all_maximum: Some(Vec::new()),
    };
    search.expand(&mut Vec::new(), BitSet::full(g.n()));
    let mut all = search.all_maximum.unwrap_or_default();
    all.sort();
    all
}

/// All inclusion-maximal independent sets (sorted, lexicographic order), or a budget
/// error once more than `cap` have been produced.
pub fn enumerate_maximal_independent_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    if cap == 0 {
        return Err(Error::input("cap must be at least 1"));
    }
    let rows = complement_rows(g);
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(
        &rows,
        &mut r,
        BitSet::full(g.n()),
        BitSet::new(g.n()),
        cap,
        &mut out,
    )?;
    for s in out.iter_mut() {
        s.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    rows: &[BitSet],
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    cap: usize,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() == cap {
                return Err(Error::Budget {
                    what: format!("more than {cap} maximal independent sets"),
                    reached: out.len(),
                });
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    let mut px = p.clone();
    px.union_with(&x);
    let pivot = px
        .iter()
        .max_by_key(|&u| (p.intersection_count(&rows[u]), std::cmp::Reverse(u)))
        .expect("P ∪ X is non-empty");
    for v in p.difference(&rows[pivot]).to_vec() {
        r.push(v);
        bron_kerbosch(
            rows,
            r,
            p.intersection(&rows[v]),
            x.intersection(&rows[v]),
            cap,
            out,
        )?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}
