//! The reproduction suite: twelve checks of the headline results, each comparing exact
//! expected values against freshly computed ones.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certs::{
    discretize, figure1_certificate, figure1_graph, g5_certificate, lemma63_matrix_check,
    verify_gyrocoloring, ContinuousGyrocoloring,
};
use crate::graphs::{
    cartesian, complete, cycle, g5, is_homomorphism, lexicographic, line_graph, petersen,
    random_circulant, random_graph, AbelianGroup, Graph, GroupElement,
};
use crate::gyro::{
    bounds, crt_inflate, crt_window_primes, expand_modulus, gyro_lower_bound,
    kneser_characteristic_hom, lift_base_to_product, random_valid_base, sigma_group_exact,
    verify_base, BaseCertificate, BoundsOptions, DensityCap, SigmaOptions,
};
use crate::invariants::{
    chromatic_number, circular_chromatic, clique_number, enumerate_maximum_independent_sets,
    fractional_chromatic, independence_number,
};
use crate::rational::{fmt, int, ratio, Rational};
use crate::Result;

/// Deliberate corruption of the built-in certificates, to exercise the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Changes one `f` entry of the `G_5` certificate and one `K5` shift of the 40/7 gyrocolouring of `K5 ∪ K2[C5]`.
    CorruptBuiltinCertificates,
}

#[derive(Debug, Clone)]
pub struct ReproduceOptions {
    /// Skips criteria 7, 8, 9 and 11 (random corpora and exhaustive searches).
    pub skip_slow: bool,
    pub seed: u64,
    pub threads: usize,
    /// Node budget per homomorphism test in the `σ` searches.
    pub budget: u64,
    pub fault: Option<Fault>,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            skip_slow: false,
            seed: 2024,
            threads: 1,
            budget: SigmaOptions::default().budget,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// Passed in a weaker form because a search budget ran out.
    Flagged,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Flagged => "FLAGGED",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// One expected/computed comparison inside a criterion.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: &'static str,
    pub status: Status,
    pub checks: Vec<Check>,
    pub note: Option<String>,
    pub seconds: f64,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        matches!(
            self.status,
            Status::Pass | Status::Flagged | Status::Skipped
        )
    }

    /// `label: expected X, computed Y` for every failing check.
    pub fn diff(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.ok)
            .map(|c| {
                format!(
                    "{}: expected {}, computed {}",
                    c.label, c.expected, c.computed
                )
            })
            .collect()
    }
}

pub const TITLES: [&str; 12] = [
    "G5 maximum independent sets",
    "G5 certificate and exact bounds",
    "K5 x K2[C5] independence and fractional chromatic number",
    "40/7 gyrocolouring of K5 ∪ K2[C5] and the strict sandwich",
    "circular and chromatic numbers",
    "clique lower bound on the line graph of Petersen",
    "circulants: sigma equals independence ratio",
    "construction validity",
    "bounds sandwich on random graphs",
    "Kneser graph into the hypercube Cayley graph",
    "G5 over small cyclic groups stays below 4/25",
    "the 25x25 incidence matrix is invertible",
];

const SLOW: [usize; 4] = [7, 8, 9, 11];

/// Recorded determinant of the `Z_5^2` incidence matrix.
pub const INCIDENCE_DETERMINANT: i64 = 1024;

#[derive(Default)]
struct Checks {
    items: Vec<Check>,
    note: Option<String>,
    flagged: bool,
}

impl Checks {
    fn eq<T: PartialEq + ToString>(&mut self, label: impl Into<String>, expected: T, computed: T) {
        let ok = expected == computed;
        self.items.push(Check {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            ok,
        });
    }

    fn rat(&mut self, label: impl Into<String>, expected: &Rational, computed: &Rational) {
        self.items.push(Check {
            label: label.into(),
            expected: fmt(expected),
            computed: fmt(computed),
            ok: expected == computed,
        });
    }

    fn holds(&mut self, label: impl Into<String>, computed: bool) {
        self.eq(label, true, computed);
    }
}

fn g5_cert(fault: Option<Fault>) -> BaseCertificate {
    let mut cert = g5_certificate();
    if fault.is_some() {
        cert.f[1] = cert.f[0].clone();
    }
    cert
}

fn union_gyrocolouring(fault: Option<Fault>) -> Result<ContinuousGyrocoloring> {
    let c = figure1_certificate();
    if fault.is_none() {
        return Ok(c);
    }
    let mut shifts = c.shifts.clone();
    shifts[1] = shifts[0].clone();
    ContinuousGyrocoloring::new(c.z.clone(), c.base.clone(), shifts)
}

fn c1(checks: &mut Checks) -> Result<()> {
    let g = g5();
    let z = AbelianGroup::new(vec![5, 5])?;
    let mut expected: Vec<Vec<usize>> = z
        .elements()
        .map(|v| {
            let mut set: Vec<usize> = [[0, 0], [0, 1], [1, 0], [1, 1]]
                .iter()
                .map(|d| z.index(&z.add(&v, &GroupElement::new(d.to_vec()))))
                .collect();
            set.sort_unstable();
            set
        })
        .collect();
    expected.sort();
    let computed = enumerate_maximum_independent_sets(&g);
    checks.eq("number of maximum independent sets", 25, computed.len());
    checks.holds(
        "every maximum independent set is a translate of the unit square",
        computed == expected,
    );
    Ok(())
}

fn c2(checks: &mut Checks, opts: &ReproduceOptions) -> Result<()> {
    let g = g5();
    let cert = g5_cert(opts.fault);
    let report = verify_base(&g, &cert)?;
    checks.holds("certificate is valid", report.is_valid());
    if let Some(v) = &report.violation {
        checks.note = Some(format!(
            "translates collide on edge ({}, {}) at {}",
            v.u, v.v, v.element
        ));
    }
    checks.rat("density", &ratio(4, 25), &report.density);
    checks.rat(
        "fractional chromatic number",
        &ratio(25, 4),
        &fractional_chromatic(&g, 20_000)?.value,
    );
    let b = bounds(
        &g,
        &BoundsOptions {
            nmax: 10,
            seeds: if report.is_valid() {
                vec![cert]
            } else {
                Vec::new()
            },
            sigma: sigma_options(opts),
            ..BoundsOptions::default()
        },
    )?;
    checks.rat("lower bound", &ratio(25, 4), &b.lower.value);
    checks.rat("upper bound", &ratio(25, 4), &b.upper.value);
    Ok(())
}

fn k5_box_k2_c5() -> Result<Graph> {
    Ok(cartesian(
        &complete(5)?,
        &lexicographic(&complete(2)?, &cycle(5)?),
    ))
}

fn c3(checks: &mut Checks) -> Result<()> {
    let g = k5_box_k2_c5()?;
    checks.eq("vertices", 50, g.n());
    checks.eq("independence number", 9, independence_number(&g).0);
    checks.rat(
        "fractional chromatic number",
        &ratio(50, 9),
        &fractional_chromatic(&g, 20_000)?.value,
    );
    Ok(())
}

fn c4(checks: &mut Checks, opts: &ReproduceOptions) -> Result<()> {
    let g = figure1_graph();
    let c = union_gyrocolouring(opts.fault)?;
    let report = verify_gyrocoloring(&g, &c)?;
    checks.holds("40/7 gyrocolouring is valid", report.is_valid());
    if let Some(v) = &report.violation {
        checks.note = Some(format!("translates collide on edge ({}, {})", v.u, v.v));
    }
    let cert = discretize(&c)?;
    checks.eq("discretised group order", 80, cert.group.order());
    checks.eq("discretised |A|", 14, cert.a.len());
    checks.rat("z", &ratio(40, 7), &c.z);
    let lower = gyro_lower_bound(&g, true, 20_000)?;
    checks.rat("product-trick lower bound", &ratio(50, 9), &lower.value);
    let chi_f = fractional_chromatic(&g, 20_000)?.value;
    checks.rat("fractional chromatic number", &int(5), &chi_f);
    let chi_c = circular_chromatic(&g).value;
    checks.rat("circular chromatic number", &int(6), &chi_c);
    let upper = if report.is_valid() {
        c.z.clone()
    } else {
        chi_c.clone()
    };
    checks.holds(
        "χ_f < lower ≤ upper < χ_c",
        chi_f < lower.value && lower.value <= upper && upper < chi_c,
    );
    Ok(())
}

fn c5(checks: &mut Checks) -> Result<()> {
    let c5 = cycle(5)?;
    let h = lexicographic(&complete(2)?, &c5);
    checks.rat("χ_c(C5)", &ratio(5, 2), &circular_chromatic(&c5).value);
    checks.eq("χ(K2[C5])", 6, chromatic_number(&h).k);
    checks.rat("χ_c(K2[C5])", &int(6), &circular_chromatic(&h).value);
    checks.rat(
        "χ_c(Petersen)",
        &int(3),
        &circular_chromatic(&petersen()).value,
    );
    Ok(())
}

fn c6(checks: &mut Checks) -> Result<()> {
    let g = line_graph(&petersen());
    checks.eq("ω", 3, clique_number(&g));
    checks.eq("χ", 4, chromatic_number(&g).k);
    checks.rat("χ_f", &int(3), &fractional_chromatic(&g, 20_000)?.value);
    let lower = gyro_lower_bound(&g, true, 20_000)?;
    checks.rat("gyro lower bound", &ratio(45, 14), &lower.value);
    checks.eq(
        "lower bound provenance",
        "clique-lemma",
        lower.provenance.as_str(),
    );
    Ok(())
}

fn sigma_options(opts: &ReproduceOptions) -> SigmaOptions {
    SigmaOptions {
        budget: opts.budget,
        threads: opts.threads,
        ..SigmaOptions::default()
    }
}

fn c7(checks: &mut Checks, opts: &ReproduceOptions) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 7);
    let mut mismatches = Vec::new();
    let mut inexact = 0;
    for _ in 0..30 {
        let n = rng.gen_range(3..=13u32);
        let g = random_circulant(n, &mut rng)?;
        let alpha = independence_number(&g).0;
        let r = sigma_group_exact(&g, &AbelianGroup::cyclic(n)?, &sigma_options(opts))?;
        if !r.exact {
            inexact += 1;
        }
        let expected = ratio(alpha as i64, n as i64);
        if r.value != expected {
            mismatches.push(format!(
                "{}: σ = {}, α/N = {}",
                g.label(),
                fmt(&r.value),
                fmt(&expected)
            ));
        }
    }
    checks.eq("circulants with σ ≠ α/N", 0, mismatches.len());
    checks.eq("inexact searches", 0, inexact);
    if !mismatches.is_empty() {
        checks.note = Some(mismatches.join("; "));
    }
    Ok(())
}

/// `(N, d, k)` with at least `d` primes in the inflation window.
fn crt_parameters<R: Rng>(rng: &mut R) -> (u32, usize, usize) {
    loop {
        let n = rng.gen_range(2..=6u32);
        let d = rng.gen_range(1..=2usize);
        let k = rng.gen_range(1..=2usize);
        if crt_window_primes(n as u64, k as u64).len() >= d {
            return (n, d, k);
        }
    }
}

fn c8(checks: &mut Checks, opts: &ReproduceOptions) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 8);
    let mut failures = Vec::new();
    let mut graphs = 0;
    while graphs < 50 {
        let n = rng.gen_range(1..=6usize);
        let g = random_graph(n, 0.5, &mut rng)?;
        let cyclic = AbelianGroup::cyclic(rng.gen_range(2..=8u32))?;
        let (modulus, d, k) = crt_parameters(&mut rng);
        let power = AbelianGroup::new(vec![modulus; d])?;
        let (Some(cert), Some(power_cert)) = (
            random_valid_base(&g, &cyclic, 200, &mut rng)?,
            random_valid_base(&g, &power, 200, &mut rng)?,
        ) else {
            continue;
        };
        graphs += 1;
        let gg = cartesian(&g, &g);
        let lifted = lift_base_to_product(&g, &cert)?;
        if !verify_base(&gg, &lifted)?.is_valid() || lifted.density() != cert.density() {
            failures.push(format!("lift on {}", g.label()));
        }
        let m = rng.gen_range(1..=4usize);
        let expanded = expand_modulus(&cert, m)?;
        if !verify_base(&g, &expanded)?.is_valid() || expanded.density() != cert.density() {
            failures.push(format!("expand by {m} on {}", g.label()));
        }
        let primes: Vec<u64> = crt_window_primes(modulus as u64, k as u64)
            .into_iter()
            .take(d)
            .collect();
        let inflated = crt_inflate(&g, &power_cert, k, &primes)?;
        let stated = ratio(
            (power_cert.a.len() * k.pow(d as u32)) as i64,
            primes.iter().product::<u64>() as i64,
        );
        if !verify_base(&g, &inflated)?.is_valid() || inflated.density() != stated {
            failures.push(format!(
                "CRT inflation (N={modulus}, d={d}, k={k}) on {}",
                g.label()
            ));
        }
    }
    checks.eq("graphs checked", 50, graphs);
    checks.eq("invalid constructions", 0, failures.len());
    if !failures.is_empty() {
        checks.note = Some(failures.join("; "));
    }
    Ok(())
}

fn c9(checks: &mut Checks, opts: &ReproduceOptions) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 9);
    let mut failures = Vec::new();
    let mut inexact = 0;
    for _ in 0..50 {
        let n = rng.gen_range(1..=8usize);
        let g = random_graph(n, 0.5, &mut rng)?;
        let b = bounds(
            &g,
            &BoundsOptions {
                nmax: 10,
                circular_budget: None,
                sigma: sigma_options(opts),
                ..BoundsOptions::default()
            },
        )?;
        if !b.exact {
            inexact += 1;
        }
        let chi_f = b.chi_f.clone().unwrap_or_else(Rational::zero);
        let ordered =
            chi_f <= b.lower.value && b.lower.value <= b.upper.value && b.upper.value <= b.chi_c;
        let ceil = crate::rational::ceil(&b.chi_c);
        if !ordered || ceil != num_bigint::BigInt::from(b.chi) {
            failures.push(format!(
                "{}: χ_f {} lower {} upper {} χ_c {} χ {}",
                g.label(),
                fmt(&chi_f),
                fmt(&b.lower.value),
                fmt(&b.upper.value),
                fmt(&b.chi_c),
                b.chi
            ));
        }
    }
    checks.eq("sandwich violations", 0, failures.len());
    checks.eq("inexact reports", 0, inexact);
    if !failures.is_empty() {
        checks.note = Some(failures.join("; "));
    }
    Ok(())
}

fn c10(checks: &mut Checks) -> Result<()> {
    let (kneser, hamming, hom) = kneser_characteristic_hom(5, 2)?;
    checks.holds(
        "characteristic map is a homomorphism",
        is_homomorphism(&kneser, &hamming, &hom),
    );
    let (alpha, set) = independence_number(&hamming);
    let base = crate::gyro::base_from_independent_set(&hamming, &set)?;
    let cert = base.pull_back(kneser.label(), &hom)?;
    let report = verify_base(&kneser, &cert)?;
    checks.holds("pulled-back certificate is valid", report.is_valid());
    checks.rat("density", &ratio(alpha as i64, 32), &report.density);
    checks.holds("density ≤ 2/5", report.density <= ratio(2, 5));
    checks.eq("Kneser graph vertices", 10, kneser.n());
    Ok(())
}

fn c11(checks: &mut Checks, opts: &ReproduceOptions) -> Result<()> {
    let g = g5();
    let bound = ratio(4, 25);
    let mut inexact = Vec::new();
    let mut values = Vec::new();
    for n in 2..=12u32 {
        let r = sigma_group_exact(
            &g,
            &AbelianGroup::cyclic(n)?,
            &SigmaOptions {
                cap: DensityCap::Off,
                ..sigma_options(opts)
            },
        )?;
        if !r.exact {
            inexact.push(n);
        }
        checks.holds(
            format!("σ(G5, Z_{n}) = {} < 4/25", fmt(&r.value)),
            r.value < bound,
        );
        values.push(format!("Z_{n}: {}", fmt(&r.value)));
    }
    if inexact.is_empty() {
        checks.note = Some(values.join(", "));
    } else {
        checks.flagged = true;
        checks.note = Some(format!(
            "budget ran out for N in {inexact:?}: only 'no certificate of density ≥ 4/25 found' is established"
        ));
    }
    Ok(())
}

fn c12(checks: &mut Checks) -> Result<()> {
    let (det, invertible) = lemma63_matrix_check();
    checks.holds("invertible", invertible);
    checks.eq(
        "determinant",
        INCIDENCE_DETERMINANT.to_string(),
        det.to_string(),
    );
    Ok(())
}

/// Runs a single criterion (1-based).
pub fn run_criterion(id: usize, opts: &ReproduceOptions) -> Result<CriterionOutcome> {
    if !(1..=12).contains(&id) {
        return Err(crate::Error::input(format!("no criterion {id}")));
    }
    let title = TITLES[id - 1];
    if opts.skip_slow && SLOW.contains(&id) {
        return Ok(CriterionOutcome {
            id,
            title,
            status: Status::Skipped,
            checks: Vec::new(),
            note: Some("skipped (slow)".to_string()),
            seconds: 0.0,
        });
    }
    let start = Instant::now();
    let mut checks = Checks::default();
    match id {
        1 => c1(&mut checks)?,
        2 => c2(&mut checks, opts)?,
        3 => c3(&mut checks)?,
        4 => c4(&mut checks, opts)?,
        5 => c5(&mut checks)?,
        6 => c6(&mut checks)?,
        7 => c7(&mut checks, opts)?,
        8 => c8(&mut checks, opts)?,
        9 => c9(&mut checks, opts)?,
        10 => c10(&mut checks)?,
        11 => c11(&mut checks, opts)?,
        _ => c12(&mut checks)?,
    }
    let ok = checks.items.iter().all(|c| c.ok);
    let status = match (ok, checks.flagged) {
        (false, _) => Status::Fail,
        (true, true) => Status::Flagged,
        (true, false) => Status::Pass,
    };
    Ok(CriterionOutcome {
        id,
        title,
        status,
        checks: checks.items,
        note: checks.note,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs every criterion in order.
pub fn reproduce(opts: &ReproduceOptions) -> Result<Vec<CriterionOutcome>> {
    (1..=12).map(|id| run_criterion(id, opts)).collect()
}
