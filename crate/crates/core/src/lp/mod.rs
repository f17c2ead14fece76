//! Exact two-phase primal simplex on a dense tableau over `BigRational`.
//!
//! Solves `min c·x` subject to `A x >= b`, `x >= 0` with `b >= 0`. Pivoting follows
//! Bland's rule (lowest-index entering column, lowest-index leaving basic variable
//! among ratio ties), so the method terminates without cycling.

use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    /// Optimal primal point.
    pub primal: Vec<Rational>,
    /// Optimal dual multipliers, one per constraint row.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
    pivots: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.width - 1
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        let support: Vec<usize> = (0..self.width)
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                self.obj[j] -= delta;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = col;
        self.pivots += 1;
    }

    /// Runs Bland pivots until optimal. `allowed` marks columns that may enter.
    fn optimize(&mut self, allowed: &[bool]) -> Result<()> {
        loop {
            let entering = (0..self.width - 1).find(|&j| allowed[j] && self.obj[j].is_negative());
            let Some(col) = entering else {
                return Ok(());
            };
            let rhs = self.rhs();
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, col),
                None => return Err(Error::Internal("linear program is unbounded".into())),
            }
        }
    }
}

/// Minimises `c·x` subject to `A x >= b`, `x >= 0`; `a` is row-major with `m` rows of
/// `c.len()` entries and every `b_i >= 0`.
pub fn minimize_covering(
    a: &[Vec<Rational>],
    b: &[Rational],
    c: &[Rational],
) -> Result<LpSolution> {
    let m = a.len();
    let nv = c.len();
    if b.len() != m || a.iter().any(|r| r.len() != nv) {
        return Err(Error::input("inconsistent linear program dimensions"));
    }
    if b.iter().any(Signed::is_negative) {
        return Err(Error::input("right-hand sides must be non-negative"));
    }
    // columns: x (nv) | surplus (m) | artificial (m) | rhs
    let width = nv + 2 * m + 1;
    let surplus = |i: usize| nv + i;
    let artificial = |i: usize| nv + m + i;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); width];
        row[..nv].clone_from_slice(&a[i]);
        row[surplus(i)] = -Rational::from_integer(1.into());
        row[artificial(i)] = Rational::from_integer(1.into());
        row[width - 1] = b[i].clone();
        rows.push(row);
    }
    let mut obj = vec![Rational::zero(); width];
    for row in &rows {
        for j in 0..nv + m {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (0..m).map(artificial).collect(),
        width,
        pivots: 0,
    };

    let mut allowed = vec![true; width - 1];
    t.optimize(&allowed)?;
    if !t.obj[width - 1].is_zero() {
        return Err(Error::Input("linear program is infeasible".into()));
    }
    for i in 0..m {
        if t.basis[i] >= nv + m {
            if let Some(j) = (0..nv + m).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }
    for flag in allowed.iter_mut().skip(nv + m) {
        *flag = false;
    }

    let cost = |j: usize| {
        if j < nv {
            c[j].clone()
        } else {
            Rational::zero()
        }
    };
    let mut obj = vec![Rational::zero(); width];
    for (j, slot) in obj.iter_mut().enumerate().take(nv + m) {
        *slot = cost(j);
    }
    for (i, row) in t.rows.iter().enumerate() {
        let cb = cost(t.basis[i]);
        if cb.is_zero() {
            continue;
        }
        for j in 0..width {
            if !row[j].is_zero() {
                obj[j] -= &cb * &row[j];
            }
        }
    }
    t.obj = obj;
    t.optimize(&allowed)?;

    let mut primal = vec![Rational::zero(); nv];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < nv {
            primal[bv] = t.rows[i][width - 1].clone();
        }
    }
    let dual = (0..m).map(|i| t.obj[surplus(i)].clone()).collect();
    Ok(LpSolution {
        value: -t.obj[width - 1].clone(),
        primal,
        dual,
        pivots: t.pivots,
    })
}
