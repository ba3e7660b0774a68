//! Deterministic property suites over random samples and the `A1` window.
//!
//! Every case draws from its own ChaCha stream (`seed`, stream = case index),
//! so reports are identical for a given `(suite, n, seed)` regardless of how
//! the cases are scheduled.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axring::AXElem;
use crate::cartan::{parse_orbits, parse_type, CartanDatum, Root, Weight};
use crate::chartab::{string_decompose, CharTable};
use crate::classical::{dominant_weights_up_to, restrict_ax, Basis, Classical, ClassicalGraded};
use crate::decompose::{conjecture_probe, expand_in_simples, positivity_check, reconstruct, DEFAULT_MAX_ITER};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::laurent::Laurent;
use crate::lattice::{Lattice, XElem, YElem};
use crate::quiverdim::{d_gamma_eta, d_lambda_alpha, kappa_eta, kappa_pm};

pub const SUITES: &[&str] = &[
    "cocycle",
    "associativity",
    "bracket-rule",
    "kappa-ranks",
    "stratum-identities",
    "positivity",
    "triangularity",
    "palindromicity",
    "restriction",
    "conjecture",
    "classical",
    "folding",
];

/// Outcome of one group of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupReport {
    pub label: String,
    pub cases: usize,
    pub failures: usize,
    /// Lowest-index failing case, if any.
    pub reproducer: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub groups: Vec<GroupReport>,
    /// Extra summary lines (counts, tallies).
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(|g| g.failures == 0)
    }

    pub fn total_cases(&self) -> usize {
        self.groups.iter().map(|g| g.cases).sum()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {})", self.suite, self.seed)?;
        for g in &self.groups {
            let verdict = if g.failures == 0 { "ok" } else { "FAIL" };
            writeln!(f, "  {:<60} {:>7} cases {:>5} failures  {verdict}", g.label, g.cases, g.failures)?;
            if let Some(r) = &g.reproducer {
                writeln!(f, "    reproducer: {r}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  {n}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Runs `n` cases of `check`; `Ok(None)` is a pass, `Ok(Some(msg))` or `Err` a failure.
fn run_group<F>(label: &str, n: usize, exec: Exec, check: F) -> GroupReport
where
    F: Fn(usize) -> Result<Option<String>> + Sync + Send,
{
    let results = exec.map_indexed(n, |k| match check(k) {
        Ok(r) => r,
        Err(e) => Some(format!("case {k}: error {e}")),
    });
    let failures = results.iter().filter(|r| r.is_some()).count();
    GroupReport { label: label.to_string(), cases: n, failures, reproducer: results.into_iter().flatten().next() }
}

fn rng_for(seed: u64, case: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(case as u64);
    r
}

/// Random element of `X` (or `Y`): up to `terms` entries, `|k| ≤ kmax`,
/// coefficients in `[-cmax, cmax]` (or `[0, cmax]` when `nonneg`).
fn rand_coords(rng: &mut ChaCha8Rng, rank: usize, terms: usize, kmax: i64, cmax: i64, nonneg: bool) -> Vec<(usize, i64, i64)> {
    let len = rng.gen_range(0..=terms);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=rank);
            let k = rng.gen_range(-kmax..=kmax);
            let c = if nonneg { rng.gen_range(0..=cmax) } else { rng.gen_range(-cmax..=cmax) };
            (i, k, c)
        })
        .collect()
}

fn rand_x(rng: &mut ChaCha8Rng, rank: usize, kmax: i64, nonneg: bool) -> XElem {
    XElem::from_terms(rand_coords(rng, rank, 3, kmax, 3, nonneg))
}

fn rand_y(rng: &mut ChaCha8Rng, rank: usize, kmax: i64, nonneg: bool) -> YElem {
    YElem::from_terms(rand_coords(rng, rank, 3, kmax, 3, nonneg))
}

fn rand_laurent(rng: &mut ChaCha8Rng) -> Laurent {
    let len = rng.gen_range(1..=3);
    Laurent::from_terms((0..len).map(|_| (rng.gen_range(-3..=3i64), rng.gen_range(-3..=3i64))))
}

fn rand_ax(rng: &mut ChaCha8Rng, rank: usize) -> AXElem {
    let len = rng.gen_range(1..=3);
    AXElem::from_terms((0..len).map(|_| {
        let g = XElem::from_terms(rand_coords(rng, rank, 3, 4, 2, false));
        (g, rand_laurent(rng))
    }))
}

fn lattice(t: &str) -> Result<Lattice> {
    Lattice::new(parse_type(t)?)
}

fn mismatch<T: fmt::Debug>(what: &str, inputs: String, lhs: T, rhs: T) -> Option<String> {
    Some(format!("{what} failed for {inputs}: lhs {lhs:?} != rhs {rhs:?}"))
}

/// Closed form of `⟨q^m ω_1, q^n ω_1⟩` in type `A1`.
pub fn a1_bracket_rule(m: i64, n: i64) -> i64 {
    let d = n - m;
    if d == 0 || d % 2 != 0 {
        return 0;
    }
    let l = d / 2;
    let sign = if l % 2 == 0 { 1 } else { -1 };
    if l < 0 {
        sign
    } else {
        -sign
    }
}

/// The `A1` window: all dominant `γ` that are sums of one to three `q^n`, `n ∈ [-4, 4]`.
pub fn a1_window() -> Vec<XElem> {
    let mut out = Vec::new();
    for a in -4..=4i64 {
        out.push(XElem::monomial(1, a, 1));
        for b in a..=4 {
            out.push(XElem::from_terms([(1, a, 1), (1, b, 1)]));
            for c in b..=4 {
                out.push(XElem::from_terms([(1, a, 1), (1, b, 1), (1, c, 1)]));
            }
        }
    }
    out
}

fn a1_table() -> Result<CharTable> {
    Ok(CharTable::builtin(lattice("A1")?))
}

/// Folded `B2` (from `A3`) and `G2` (from `D4`).
pub fn folded_types() -> Result<Vec<(String, CartanDatum)>> {
    Ok(vec![
        ("B2=A3/{1,3}{2}".to_string(), parse_type("A3")?.fold(&parse_orbits("1,3|2")?)?),
        ("G2=D4/{1,3,4}{2}".to_string(), parse_type("D4")?.fold(&parse_orbits("1,3,4|2")?)?),
    ])
}

pub fn run_suite(name: &str, n: usize, seed: u64, exec: Exec) -> Result<SuiteReport> {
    let mut notes = Vec::new();
    let groups = match name {
        "cocycle" => cocycle(n, seed, exec)?,
        "associativity" => associativity(n, seed, exec)?,
        "bracket-rule" => bracket_rule(exec)?,
        "kappa-ranks" => kappa_ranks(n, seed, exec)?,
        "stratum-identities" => stratum(n, seed, exec)?,
        "positivity" => positivity(n, seed, exec)?,
        "triangularity" => triangularity(exec)?,
        "palindromicity" => palindromicity(exec)?,
        "restriction" => restriction(exec)?,
        "conjecture" => conjecture(n, seed, exec, &mut notes)?,
        "classical" => classical(n, seed, exec)?,
        "folding" => folding(exec)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport { suite: name.to_string(), seed, groups, notes })
}

fn cocycle(n: usize, seed: u64, exec: Exec) -> Result<Vec<GroupReport>> {
    let mut out = Vec::new();
    for t in ["A1", "A2", "A3", "D4"] {
        let lat = lattice(t)?;
        let r = lat.rank();
        out.push(run_group(&format!("cocycle {t}"), n, exec, |k| {
            let mut rng = rng_for(seed, k);
            let (g1, g2, g3) = (rand_x(&mut rng, r, 8, false), rand_x(&mut rng, r, 8, false), rand_x(&mut rng, r, 8, false));
            let lhs = lat.epsilon(&g1.add(&g2), &g3)? + lat.epsilon(&g1, &g2)?;
            let rhs = lat.epsilon(&g1, &g2.add(&g3))? + lat.epsilon(&g2, &g3)?;
            Ok((lhs != rhs).then(|| mismatch("cocycle", format!("{g1} {g2} {g3}"), lhs, rhs)).flatten())
        }));
        out.push(run_group(&format!("bracket skew/bi-additive {t}"), n, exec, |k| {
            let mut rng = rng_for(seed ^ 0x5eed, k);
            let (g1, g2, g3) = (rand_x(&mut rng, r, 8, false), rand_x(&mut rng, r, 8, false), rand_x(&mut rng, r, 8, false));
            let skew = lat.bracket(&g1, &g2)? + lat.bracket(&g2, &g1)?;
            let add = lat.bracket(&g1.add(&g2), &g3)? - lat.bracket(&g1, &g3)? - lat.bracket(&g2, &g3)?;
            Ok((skew != 0 || add != 0).then(|| format!("bracket law failed for {g1} {g2} {g3}")))
        }));
    }
    Ok(out)
}

fn associativity(n: usize, seed: u64, exec: Exec) -> Result<Vec<GroupReport>> {
    let mut out = Vec::new();
    for t in ["A1", "A2", "A3", "D4"] {
        let lat = lattice(t)?;
        let r = lat.rank();
        out.push(run_group(&format!("associativity {t}"), n, exec, |k| {
            let mut rng = rng_for(seed, k);
            let (x, y, z) = (rand_ax(&mut rng, r), rand_ax(&mut rng, r), rand_ax(&mut rng, r));
            let lhs = x.mul(&lat, &y)?.mul(&lat, &z)?;
            let rhs = x.mul(&lat, &y.mul(&lat, &z)?)?;
            if lhs != rhs {
                return Ok(Some(format!("associativity failed for {x} ; {y} ; {z}")));
            }
            let bar_l = x.mul(&lat, &y)?.bar();
            let bar_r = y.bar().mul(&lat, &x.bar())?;
            Ok((bar_l != bar_r).then(|| format!("bar antihomomorphism failed for {x} ; {y}")))
        }));
    }
    Ok(out)
}

fn bracket_rule(exec: Exec) -> Result<Vec<GroupReport>> {
    let lat = lattice("A1")?;
    let pairs: Vec<(i64, i64)> = (-10..=10).flat_map(|m| (-10..=10).map(move |n| (m, n))).collect();
    Ok(vec![run_group("A1 closed bracket rule, m,n in [-10,10]", pairs.len(), exec, |k| {
        let (m, n) = pairs[k];
        let got = lat.bracket(&XElem::monomial(1, m, 1), &XElem::monomial(1, n, 1))?;
        let want = a1_bracket_rule(m, n);
        if got != want {
            return Ok(Some(format!("<q^{m},q^{n}> = {got}, closed rule {want}")));
        }
        let eps = lat.epsilon(&XElem::monomial(1, m, 1), &XElem::monomial(1, n, 1))?;
        let d = n - m;
        let want = if d >= 2 && d % 2 == 0 { if (d / 2) % 2 == 1 { 1 } else { -1 } } else { 0 };
        Ok((eps != want).then(|| format!("ε(q^{m},q^{n}) = {eps}, closed rule {want}")))
    })])
}

fn kappa_ranks(n: usize, seed: u64, exec: Exec) -> Result<Vec<GroupReport>> {
    let mut out = Vec::new();
    for t in ["A1", "A2", "D4"] {
        let lat = lattice(t)?;
        let r = lat.rank();
        out.push(run_group(&format!("κ^± rank identities (a)(b)(c) {t}"), n, exec, |k| {
            let mut rng = rng_for(seed, k);
            let g1 = rand_x(&mut rng, r, 6, false);
            let g2 = rand_x(&mut rng, r, 6, false);
            let d1 = rand_y(&mut rng, r, 6, true);
            let d2 = rand_y(&mut rng, r, 6, true);
            let e1 = d1.add(&rand_y(&mut rng, r, 6, true));
            let e2 = d2.add(&rand_y(&mut rng, r, 6, true));
            let inputs = format!("γ′={g1} γ″={g2} η′={e1} η″={e2} δ′={d1} δ″={d2}");
            let (kp, km) = kappa_pm(&lat, &g1, &g2, &e1, &e2);
            let dsum = d_gamma_eta(&lat, &g1.add(&g2), &e1.add(&e2)) - d_gamma_eta(&lat, &g1, &e1) - d_gamma_eta(&lat, &g2, &e2);
            if kp + km != dsum {
                return Ok(mismatch("(a)", inputs, kp + km, dsum));
            }
            let (kp_sw, km_sw) = kappa_pm(&lat, &g2, &g1, &e2, &e1);
            if (kp, km) != (km_sw, kp_sw) {
                return Ok(mismatch("(b)", inputs, (kp, km), (km_sw, kp_sw)));
            }
            let (h1, h2) = (lat.sub_xy(&g1, &d1), lat.sub_xy(&g2, &d2));
            let eps = lat.epsilon(&g1, &g2)? - lat.epsilon(&h1, &h2)?;
            let (sp, sm) = kappa_pm(&lat, &h1, &h2, &e1.sub(&d1), &e2.sub(&d2));
            let (dp, dm) = kappa_pm(&lat, &g1, &g2, &d1, &d2);
            if eps != dp {
                return Ok(mismatch("(c) ε difference", inputs, eps, dp));
            }
            if (kp - sp, km - sm) != (dp, dm) {
                return Ok(mismatch("(c) κ differences", inputs, (kp - sp, km - sm), (dp, dm)));
            }
            Ok(None)
        }));
    }
    let lat = lattice("A1")?;
    out.push(run_group("worked instance γ′=q², γ″=q⁰, η′=0, η″=qα₁", 1, exec, |_| {
        let (g1, g2) = (XElem::monomial(1, 2, 1), XElem::monomial(1, 0, 1));
        let (e1, e2) = (YElem::zero(), YElem::monomial(1, 1, 1));
        let k = kappa_pm(&lat, &g1, &g2, &e1, &e2);
        let dsum = d_gamma_eta(&lat, &g1.add(&g2), &e1.add(&e2)) - d_gamma_eta(&lat, &g1, &e1) - d_gamma_eta(&lat, &g2, &e2);
        Ok((k != (0, 1) || dsum != 1).then(|| format!("κ=({},{}) d-sum={dsum}", k.0, k.1)))
    }));
    Ok(out)
}

/// Random `γ ∈ X⁺`, `δ ∈ Y⁺` with `γ ⪰ δ`, and `η ⪰ δ`.
fn stratum_sample(lat: &Lattice, rng: &mut ChaCha8Rng) -> (XElem, YElem, YElem) {
    let r = lat.rank();
    let delta = rand_y(rng, r, 6, true);
    let od = lat.omega(&delta);
    let pos = XElem::from_terms(od.terms().filter(|t| t.2 > 0));
    let gamma = rand_x(rng, r, 6, true).add(&pos);
    let eta = delta.add(&rand_y(rng, r, 6, true));
    (gamma, delta, eta)
}

fn stratum(n: usize, seed: u64, exec: Exec) -> Result<Vec<GroupReport>> {
    let mut out = Vec::new();
    for t in ["A1", "A2", "A3", "D4"] {
        let lat = lattice(t)?;
        out.push(run_group(&format!("ε_γ−ε_(γ−δ)=d_γδ and d_γη−d_(γ−δ,η−δ)=d_γδ {t}"), n, exec, |k| {
            let mut rng = rng_for(seed, k);
            let (g, d, e) = stratum_sample(&lat, &mut rng);
            let inputs = format!("γ={g} δ={d} η={e}");
            let gd = lat.sub_xy(&g, &d);
            let lhs = lat.epsilon_gamma(&g)? - lat.epsilon_gamma(&gd)?;
            let dgd = d_gamma_eta(&lat, &g, &d);
            if lhs != dgd {
                return Ok(mismatch("ε_γ − ε_{γ−δ} = d_{γδ}", inputs, lhs, dgd));
            }
            let lhs2 = d_gamma_eta(&lat, &g, &e) - d_gamma_eta(&lat, &gd, &e.sub(&d));
            Ok((lhs2 != dgd).then(|| mismatch("d_{γη} − d_{γ−δ,η−δ} = d_{γδ}", inputs, lhs2, dgd)).flatten())
        }));
    }
    let a1 = lattice("A1")?;
    out.push(run_group("worked instance γ=q²+q⁰, δ=qα₁", 1, exec, |_| {
        let g = XElem::from_terms([(1, 2, 1), (1, 0, 1)]);
        let d = YElem::monomial(1, 1, 1);
        let lhs = a1.epsilon_gamma(&g)? - a1.epsilon_gamma(&a1.sub_xy(&g, &d))?;
        let rhs = d_gamma_eta(&a1, &g, &d);
        Ok((lhs != 1 || rhs != 1).then(|| format!("{lhs} = {rhs}")))
    }));
    // κ^±_η on strata that occur: η ∈ Λ⁺(γ) over the A1 window
    let table = a1_table()?;
    let window = a1_window();
    out.push(run_group("κ^±_η formulas on Λ⁺(γ), A1 window", window.len(), exec, |k| {
        let g = &window[k];
        let lat = table.lattice();
        let (_, plus) = table.lambda_sets(g)?;
        for eta in plus {
            let lambda = g.spec_q1(1);
            let alpha = Root(eta.at_q1(1));
            let d = d_lambda_alpha(lat.cartan(), &lambda, &alpha);
            let (kp, km) = kappa_eta(lat, &lambda, &alpha, g, &eta)?;
            let dge = d_gamma_eta(lat, g, &eta);
            if d - 2 * kp != 0 || d - 2 * km != 2 * dge || dge < 0 || km < 0 {
                return Ok(Some(format!("κ_η check failed for γ={g} η={eta}: d_λα={d} κ=({kp},{km}) d_γη={dge}")));
            }
        }
        Ok(None)
    }));
    Ok(out)
}

/// Ordered pairs of window indices, all of them when `n == 0` or `n` covers
/// the window, otherwise a seeded sample of `n`.
fn window_pairs(len: usize, n: usize, seed: u64) -> Vec<(usize, usize)> {
    let all = len * len;
    if n == 0 || n >= all {
        return (0..len).flat_map(|a| (0..len).map(move |b| (a, b))).collect();
    }
    (0..n)
        .map(|k| {
            let mut rng = rng_for(seed, k);
            (rng.gen_range(0..len), rng.gen_range(0..len))
        })
        .collect()
}

fn positivity(n: usize, seed: u64, exec: Exec) -> Result<Vec<GroupReport>> {
    let table = a1_table()?;
    let lat = table.lattice();
    let window = a1_window();
    let simples: Vec<AXElem> = window.iter().map(|g| table.simple_char(g)).collect::<Result<_>>()?;
    let pairs = window_pairs(window.len(), n, seed);
    let mut out = vec![run_group("products of A1 window simples", pairs.len(), exec, |k| {
        let (a, b) = pairs[k];
        let p = simples[a].mul(lat, &simples[b])?;
        let e = expand_in_simples(&table, &p, DEFAULT_MAX_ITER)?;
        if !e.is_complete() {
            return Ok(Some(format!("nonzero residual for b[{}]*b[{}]", window[a], window[b])));
        }
        if let Err(bad) = positivity_check(&e) {
            return Ok(Some(format!("b[{}]*b[{}] has non-positive coefficients at {:?}", window[a], window[b], bad)));
        }
        if n != 0 && reconstruct(&table, &e)? != p {
            return Ok(Some(format!("reconstruction failed for b[{}]*b[{}]", window[a], window[b])));
        }
        Ok(None)
    })];
    out.push(run_group("exact A1 product instances", 2, exec, |k| {
        let (g, h, want) = match k {
            0 => ("q^0", "q^0", vec![("2q^0", Laurent::one())]),
            _ => ("q^2", "q^0", vec![("q^2+q^0", Laurent::monomial(-1, 1)), ("0", Laurent::one())]),
        };
        let x = |s: &str| if s == "0" { Ok(XElem::zero()) } else { XElem::parse(s, 1) };
        let p = table.simple_char(&x(g)?)?.mul(lat, &table.simple_char(&x(h)?)?)?;
        let got = expand_in_simples(&table, &p, DEFAULT_MAX_ITER)?.terms;
        let want: BTreeMap<XElem, Laurent> = want.into_iter().map(|(s, c)| Ok((x(s)?, c))).collect::<Result<_>>()?;
        Ok((got != want).then(|| format!("b[{g}]*b[{h}] expanded to {got:?}")))
    }));
    Ok(out)
}

fn triangularity(exec: Exec) -> Result<Vec<GroupReport>> {
    let table = a1_table()?;
    let lat = table.lattice();
    let window = a1_window();
    let mut out = vec![run_group("standard characters unitriangular, A1 window", window.len(), exec, |k| {
        let g = &window[k];
        let e = expand_in_simples(&table, &table.standard_char(g)?, DEFAULT_MAX_ITER)?;
        if e.terms.get(g).is_none_or(|c| !c.is_one()) {
            return Ok(Some(format!("coefficient at γ={g} is not 1")));
        }
        for (h, c) in &e.terms {
            if !c.has_nonneg_coeffs() {
                return Ok(Some(format!("negative coefficient {c} at {h} for γ={g}")));
            }
            if h != g {
                match lat.solve_omega(&g.sub(h)) {
                    Ok(eta) if eta.is_nonneg() && !eta.is_zero() => {}
                    _ => return Ok(Some(format!("{h} is not below γ={g}"))),
                }
            }
        }
        Ok(None)
    })];
    out.push(run_group("W(q^2+q^0) = b[q^2+q^0] + v b[0]", 1, exec, |_| {
        let g = XElem::parse("q^2+q^0", 1)?;
        let got = expand_in_simples(&table, &table.standard_char(&g)?, DEFAULT_MAX_ITER)?.terms;
        let want = BTreeMap::from([(g, Laurent::one()), (XElem::zero(), Laurent::monomial(1, 1))]);
        Ok((got != want).then(|| format!("expanded to {got:?}")))
    }));
    Ok(out)
}

fn palindromicity(exec: Exec) -> Result<Vec<GroupReport>> {
    let table = a1_table()?;
    let window = a1_window();
    Ok(vec![run_group("simple fixed by bar, standard top coefficient 1", window.len(), exec, |k| {
        let g = &window[k];
        let s = table.simple_char(g)?;
        if s.bar() != s {
            return Ok(Some(format!("simple character of {g} is not bar-invariant")));
        }
        let w = table.standard_char(g)?;
        if !w.coeff(g).is_one() || !s.coeff(g).is_one() {
            return Ok(Some(format!("top coefficient of {g} is not 1")));
        }
        if !w.has_nonneg_coeffs() {
            return Ok(Some(format!("standard character of {g} has a negative coefficient")));
        }
        Ok(None)
    })])
}

/// `χ`-decomposition of `V(λ_1) ⊗ ⋯ ⊗ V(λ_k)`.
pub fn tensor_chain(cl: &Classical, parts: &[Weight]) -> Result<BTreeMap<Weight, u64>> {
    let rank = cl.cartan().rank();
    let mut acc = BTreeMap::from([(Weight::zero(rank), 1u64)]);
    for p in parts {
        let mut next = BTreeMap::new();
        for (mu, m) in &acc {
            for (nu, c) in cl.tensor_mult(mu, p)? {
                *next.entry(nu).or_insert(0) += m * c;
            }
        }
        acc = next;
    }
    Ok(acc)
}

fn chi_at_v1(x: &ClassicalGraded) -> BTreeMap<Weight, u64> {
    x.at_v1().into_iter().map(|(w, c)| (w, u64::try_from(c).unwrap_or(u64::MAX))).collect()
}

fn restriction(exec: Exec) -> Result<Vec<GroupReport>> {
    let table = a1_table()?;
    let lat = table.lattice();
    let cl = Classical::new(parse_type("A1")?);
    let window = a1_window();
    let mut out = vec![run_group("res(b_γ) positive in χ basis, matches classical tensors", window.len(), exec, |k| {
        let g = &window[k];
        let chi = cl.expand_in_chi(&restrict_ax(lat, &table.simple_char(g)?)?)?;
        if !chi.has_nonneg_coeffs() {
            return Ok(Some(format!("res(b[{g}]) = {}", chi.render().trim())));
        }
        let strings: Vec<Weight> =
            string_decompose(g, 1)?.iter().map(|s| Weight(vec![s.len() as i64])).collect();
        let want = tensor_chain(&cl, &strings)?;
        if chi_at_v1(&chi) != want {
            return Ok(mismatch("simple restriction at v=1", g.to_string(), chi_at_v1(&chi), want));
        }
        let std_chi = cl.expand_in_chi(&restrict_ax(lat, &table.standard_char(g)?)?)?;
        let fund: Vec<Weight> = table.factors(g)?.iter().map(|_| Weight(vec![1])).collect();
        let want = tensor_chain(&cl, &fund)?;
        Ok((chi_at_v1(&std_chi) != want)
            .then(|| mismatch("standard restriction at v=1", g.to_string(), chi_at_v1(&std_chi), want))
            .flatten())
    })];
    out.push(run_group("res(b[q^0]) = χ_ω and res(b[2q^0]) = χ_2ω + v^-2 χ_0", 2, exec, |k| {
        let (g, want) = if k == 0 {
            (XElem::monomial(1, 0, 1), vec![(Weight(vec![1]), Laurent::one())])
        } else {
            (
                XElem::monomial(1, 0, 2),
                vec![(Weight(vec![2]), Laurent::one()), (Weight(vec![0]), Laurent::monomial(-2, 1))],
            )
        };
        let got = cl.expand_in_chi(&restrict_ax(lat, &table.simple_char(&g)?)?)?;
        let want = ClassicalGraded::from_terms(Basis::Irreducible, want);
        Ok((got != want).then(|| format!("res(b[{g}]) = {}", got.render().trim())))
    }));
    Ok(out)
}

fn conjecture(n: usize, seed: u64, exec: Exec, notes: &mut Vec<String>) -> Result<Vec<GroupReport>> {
    let table = a1_table()?;
    let window = a1_window();
    for g in &window {
        table.simple_char(g)?;
    }
    let pairs = window_pairs(window.len(), n, seed);
    let verdicts = exec.map_indexed(pairs.len(), |k| {
        let (a, b) = pairs[k];
        conjecture_probe(&table, &window[a], &window[b], DEFAULT_MAX_ITER).map(|r| (r.single, r.commute, r.exact))
    });
    let mut tally: BTreeMap<(bool, bool, bool), usize> = BTreeMap::new();
    let mut failures = 0;
    let mut reproducer = None;
    for (k, v) in verdicts.iter().enumerate() {
        match v {
            Ok(t) => {
                *tally.entry(*t).or_insert(0) += 1;
                if !(t.0 == t.1 && t.1 == t.2) {
                    failures += 1;
                    let (a, b) = pairs[k];
                    reproducer.get_or_insert_with(|| {
                        format!("mixed verdict {t:?} for b[{}]*b[{}]", window[a], window[b])
                    });
                }
            }
            Err(e) => {
                failures += 1;
                reproducer.get_or_insert_with(|| format!("case {k}: error {e}"));
            }
        }
    }
    for ((s, c, e), count) in &tally {
        notes.push(format!("verdict (single={s}, commute={c}, exact={e}): {count} pairs"));
    }
    Ok(vec![GroupReport {
        label: "conjecture conditions agree on A1 window".into(),
        cases: pairs.len(),
        failures,
        reproducer,
    }])
}

fn classical_types() -> Result<Vec<(String, CartanDatum)>> {
    let mut out: Vec<(String, CartanDatum)> =
        ["A2", "A3", "D4"].iter().map(|t| Ok((t.to_string(), parse_type(t)?))).collect::<Result<_>>()?;
    out.extend(folded_types()?);
    Ok(out)
}

fn freudenthal_vs_weyl(label: &str, cl: &Classical, level: i64, exec: Exec) -> GroupReport {
    let lambdas = dominant_weights_up_to(cl.cartan().rank(), level);
    run_group(label, lambdas.len(), exec, |k| {
        let l = &lambdas[k];
        let t = cl.freudenthal(l)?;
        let lhs = cl.dimension_from_table(&t);
        let rhs = cl.weyl_dim(l)?;
        if t.mult.get(l) != Some(&1) {
            return Ok(Some(format!("mult(λ) != 1 for λ={l}")));
        }
        Ok((lhs != rhs).then(|| mismatch("Σ mult·orbit = weyl_dim", l.to_string(), lhs, rhs)).flatten())
    })
}

fn classical(n: usize, seed: u64, exec: Exec) -> Result<Vec<GroupReport>> {
    let mut out = Vec::new();
    let types = classical_types()?;
    let algebras: Vec<(String, Classical)> = types.into_iter().map(|(name, c)| (name, Classical::new(c))).collect();
    for (name, cl) in &algebras {
        out.push(freudenthal_vs_weyl(&format!("Freudenthal = Weyl, level ≤ 6, {name}"), cl, 6, exec));
    }
    out.push(run_group("tensor_mult dimension identity", n, exec, |k| {
        let mut rng = rng_for(seed, k);
        let (name, cl) = &algebras[rng.gen_range(0..algebras.len())];
        let rank = cl.cartan().rank();
        let pick = |rng: &mut ChaCha8Rng| {
            let pool = dominant_weights_up_to(rank, 2);
            pool[rng.gen_range(0..pool.len())].clone()
        };
        let (l1, l2) = (pick(&mut rng), pick(&mut rng));
        let mult = cl.tensor_mult(&l1, &l2)?;
        let lhs: BigInt = mult.iter().map(|(mu, m)| Ok(cl.weyl_dim(mu)? * BigInt::from(*m))).sum::<Result<BigInt>>()?;
        let rhs = cl.weyl_dim(&l1)? * cl.weyl_dim(&l2)?;
        Ok((lhs != rhs).then(|| mismatch("Σ mult·dim = dim·dim", format!("{name} {l1} ⊗ {l2}"), lhs, rhs)).flatten())
    }));
    out.push(run_group("χ↔m round trip, unitriangular", n, exec, |k| {
        let mut rng = rng_for(seed ^ 0xc0ffee, k);
        let (name, cl) = &algebras[rng.gen_range(0..algebras.len())];
        let pool = dominant_weights_up_to(cl.cartan().rank(), 3);
        let x = ClassicalGraded::from_terms(
            Basis::Irreducible,
            (0..rng.gen_range(1..=3)).map(|_| (pool[rng.gen_range(0..pool.len())].clone(), rand_laurent(&mut rng))),
        );
        let m = cl.convert(&x, Basis::Orbit)?;
        let back = cl.convert(&m, Basis::Irreducible)?;
        if back != x {
            return Ok(Some(format!("{name}: round trip changed {}", x.render().trim())));
        }
        for l in x.terms.keys() {
            let t = cl.freudenthal(l)?;
            if t.mult.get(l) != Some(&1) {
                return Ok(Some(format!("{name}: χ→m not unitriangular at {l}")));
            }
        }
        Ok(None)
    }));
    Ok(out)
}

fn folding(exec: Exec) -> Result<Vec<GroupReport>> {
    let mut out = Vec::new();
    out.push(run_group("folded Cartan matrices", 2, exec, |k| {
        let (src, orbits, want) = if k == 0 {
            ("A3", "1,3|2", vec![vec![2, -2], vec![-1, 2]])
        } else {
            ("D4", "1,3,4|2", vec![vec![2, -3], vec![-1, 2]])
        };
        let f = parse_type(src)?.fold(&parse_orbits(orbits)?)?;
        Ok((f.matrix() != want.as_slice()).then(|| format!("fold of {src} by {orbits} gave {f}")))
    }));
    for (name, c) in folded_types()? {
        let cl = Classical::new(c);
        out.push(freudenthal_vs_weyl(&format!("folded transition rows, {name}"), &cl, 4, exec));
    }
    out.push(run_group("G2 adjoint zero-weight multiplicity 2", 1, exec, |_| {
        let (_, g2) = folded_types()?.remove(1);
        let cl = Classical::new(g2);
        let adjoint = [Weight(vec![1, 0]), Weight(vec![0, 1])]
            .into_iter()
            .find(|l| cl.weyl_dim(l).map(|d| d == BigInt::from(14)).unwrap_or(false))
            .ok_or_else(|| Error::InvariantViolation("no 14-dimensional fundamental".into()))?;
        let m0 = cl.folded_transition(&adjoint)?.mult.get(&Weight(vec![0, 0])).copied().unwrap_or(0);
        Ok((m0 != 2).then(|| format!("zero-weight multiplicity {m0}")))
    }));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_size() {
        let w = a1_window();
        assert_eq!(w.len(), 9 + 45 + 165);
        assert!(w.iter().all(|g| g.is_dominant()));
    }

    #[test]
    fn closed_rule_matches_known_values() {
        assert_eq!(a1_bracket_rule(0, 2), 1);
        assert_eq!(a1_bracket_rule(2, 0), -1);
        assert_eq!(a1_bracket_rule(0, -2), -1);
        assert_eq!(a1_bracket_rule(0, 3), 0);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", 1, 0, Exec::Sequential), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("cocycle", 30, 42, Exec::Sequential).unwrap();
        let b = run_suite("cocycle", 30, 42, Exec::Parallel).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert!(a.passed(), "{a}");
    }
}
