//! End-to-end verification of one instance or a sweep, producing reports.

use std::collections::BTreeMap;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{rat, Rat};
use crate::casorati::{
    build_l2, build_l3, check_c0c1, contiguity_constants, extract, reconstruct, verify_relation, Step,
};
use crate::error::{Error, Result};
use crate::evolution::{
    build_l1, check_base_points, check_evolution, d1_of, eliminate_triangle, orbit_from_solved, relations_proportional,
    verify_l1, OrbitData,
};
use crate::pade::{residual_check, solve_jacobi, solve_linear, PadePair};
use crate::report::{Equation, ErrorRecord, InstanceEcho, Status, SweepReport, VerificationReport};
use crate::special::check_solution_values;
use crate::systems::{apply_t, e7_close_constraint, PainleveType, Params};

/// Check families accepted by a filter; a check id is `family` or `family[k]`.
pub const CHECK_FAMILIES: [&str; 12] = [
    "pade",
    "jacobi",
    "shape",
    "L2",
    "L3",
    "C0C1",
    "C0C1-gauge",
    "evolution",
    "L1",
    "L1-triangle",
    "solution",
    "base-points",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Seeds the gauge rescalings (and, in sweeps, the parameter draws).
    pub seed: u64,
    /// Families to run; `None` runs all.
    pub checks: Option<Vec<String>>,
}

impl RunOptions {
    pub fn enabled(&self, family: &str) -> bool {
        self.checks.as_ref().is_none_or(|v| v.iter().any(|c| c.eq_ignore_ascii_case(family)))
    }

    /// Rejects names outside `CHECK_FAMILIES`.
    pub fn with_checks(mut self, list: &str) -> Result<Self> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let known = CHECK_FAMILIES.iter().find(|f| f.eq_ignore_ascii_case(name));
            out.push(known.ok_or_else(|| Error::Parse(format!("unknown check family {name:?}")))?.to_string());
        }
        self.checks = Some(out);
        Ok(self)
    }
}

/// One instance: parameters and orbit length.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceConfig {
    pub params: Params,
    pub steps: usize,
}

struct Recorder<'a> {
    report: VerificationReport,
    opts: &'a RunOptions,
    ptype: PainleveType,
}

type Witness = BTreeMap<String, String>;

fn witness(pairs: &[(&str, &Rat)]) -> Witness {
    pairs.iter().map(|(k, v)| (k.to_string(), rat::fmt(v))).collect()
}

impl Recorder<'_> {
    fn record(&mut self, family: &str, step: Option<usize>, eq: Equation, outcome: Result<(bool, Witness)>) {
        if !self.opts.enabled(family) {
            return;
        }
        let id = match step {
            Some(k) => format!("{family}[{k}]"),
            None => family.to_string(),
        };
        let (status, w) = match outcome {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(e) => {
                self.report.errors.push(ErrorRecord::new(&id, &e));
                (Status::Skipped, Witness::new())
            }
        };
        self.report.push(id, eq.tag(self.ptype), status, w);
    }

    fn skip(&mut self, family: &str, eq: Equation, reason: &str) {
        if self.opts.enabled(family) {
            let mut w = Witness::new();
            w.insert("reason".into(), reason.into());
            self.report.push(family.into(), eq.tag(self.ptype), Status::Skipped, w);
        }
    }

    fn fatal(mut self, stage: &str, e: &Error) -> VerificationReport {
        self.report.errors.push(ErrorRecord::new(stage, e));
        self.report
    }
}

/// A rescaling factor other than `0` and `+-1`.
fn gauge_factor(rng: &mut ChaCha8Rng) -> Rat {
    let pool = [(2, 1), (-3, 1), (5, 3), (-7, 2), (2, 9), (-11, 4), (13, 5), (-1, 6)];
    let &(n, d) = pool.choose(rng).expect("nonempty");
    rat::rat(n, d)
}

/// `C0 C1` from rescaled pairs: it must match the unscaled value and the closed form.
fn c0c1_gauge(step: &Step, rng: &mut ChaCha8Rng) -> Result<(bool, Witness)> {
    let (lam, lam_bar) = (gauge_factor(rng), gauge_factor(rng));
    let fg = extract(step)?;
    let t = apply_t(&step.params, 1)?;
    let next = d1_of(&t, &step.shifted)?;
    let (c0, c1) = contiguity_constants(&step.params, &fg, &next)?;
    let scaled = Step { pair: step.pair.rescaled(&lam), shifted: step.shifted.rescaled(&lam_bar), ..step.clone() };
    let fg_s = extract(&scaled)?;
    let next_s = d1_of(&t, &scaled.shifted)?;
    let (c0s, c1s) = contiguity_constants(&scaled.params, &fg_s, &next_s)?;
    let product = &c0 * &c1;
    let ok = product == &c0s * &c1s && fg_s.f == fg.f && fg_s.g == fg.g && check_c0c1(&scaled.params, &fg_s, &next_s)?;
    Ok((ok, witness(&[("lambda", &lam), ("lambda_bar", &lam_bar), ("C0C1", &product)])))
}

fn step_checks(rec: &mut Recorder<'_>, orbit: &OrbitData, k: usize, rng: &mut ChaCha8Rng) {
    let os = &orbit.steps[k];
    let (p, fg, next, step) = (os.params(), &os.fg, &os.next, &os.step);
    rec.record(
        "shape",
        Some(k),
        Equation::Determinants,
        (|| {
            let dets = crate::casorati::compute_d_with(&step.system, &p.q, &step.pair, &step.shifted);
            let back = reconstruct(p, fg)?;
            Ok((back == dets, witness(&[("f", &fg.f), ("g", &fg.g), ("c0", &fg.c0), ("c1", &fg.c1)])))
        })(),
    );
    let constants = contiguity_constants(p, fg, next);
    rec.record(
        "L2",
        Some(k),
        Equation::Contiguity,
        constants.clone().and_then(|(c0, _)| Ok((verify_relation(step, &build_l2(p, fg, &c0)?)?, witness(&[("C0", &c0)])))),
    );
    rec.record(
        "L3",
        Some(k),
        Equation::Contiguity,
        constants
            .clone()
            .and_then(|(_, c1)| Ok((verify_relation(step, &build_l3(p, fg, next, &c1)?)?, witness(&[("C1", &c1)])))),
    );
    rec.record(
        "C0C1",
        Some(k),
        Equation::C0C1,
        constants.clone().and_then(|(c0, c1)| {
            Ok((check_c0c1(p, fg, next)?, witness(&[("C0C1", &(c0 * c1)), ("f_bar", &next.f)])))
        }),
    );
    if rec.opts.enabled("C0C1-gauge") {
        rec.record("C0C1-gauge", Some(k), Equation::C0C1, c0c1_gauge(step, rng));
    }
    if k >= 1 && k + 1 < orbit.len() {
        let w = witness(&[
            ("f", &fg.f),
            ("g", &fg.g),
            ("g_under", &orbit.steps[k - 1].fg.g),
            ("f_bar", &orbit.steps[k + 1].fg.f),
        ]);
        rec.record("evolution", Some(k), Equation::Evolution, check_evolution(orbit, k).map(|ok| (ok, w)));
    }
    let l1 = build_l1(p, fg);
    rec.record(
        "L1",
        Some(k),
        Equation::Lax,
        l1.clone().and_then(|l1| Ok((verify_l1(p, &l1, &step.pair)?, Witness::new()))),
    );
    rec.record(
        "L1-triangle",
        Some(k),
        Equation::Lax,
        l1.and_then(|l1| {
            let (c0, c1) = constants?;
            let tri = eliminate_triangle(&p.q, &build_l2(p, fg, &c0)?, &build_l3(p, fg, next, &c1)?)?;
            Ok((relations_proportional(&tri, &l1), Witness::new()))
        }),
    );
    rec.record(
        "solution",
        Some(k),
        Equation::Solution,
        check_solution_values(p, &fg.f, Some(&fg.g)).map(|r| (r.holds(), witness(&[("f", &fg.f), ("g", &fg.g)]))),
    );
}

/// Runs every enabled check on one instance. Errors are recorded in the
/// report; a failure before the orbit exists ends the run early.
pub fn run_instance(cfg: &InstanceConfig, opts: &RunOptions) -> VerificationReport {
    let p = &cfg.params;
    let mut rec = Recorder { report: VerificationReport::new(InstanceEcho::new(p, cfg.steps)), opts, ptype: p.ptype };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    if let Err(e) = p.validate() {
        return rec.fatal("validate", &e);
    }
    if cfg.steps > p.m as usize {
        let e = Error::Domain(format!("{} steps would take m = {} below zero", cfg.steps, p.m));
        return rec.fatal("orbit", &e);
    }
    let mut params = vec![p.clone()];
    for _ in 0..cfg.steps {
        match apply_t(params.last().expect("nonempty"), 1) {
            Ok(t) => params.push(t),
            Err(e) => return rec.fatal("orbit", &e),
        }
    }
    let mut pairs: Vec<PadePair> = Vec::with_capacity(params.len());
    for (k, pk) in params.iter().enumerate() {
        let pair = match solve_linear(pk) {
            Ok(pair) => pair,
            Err(e) => return rec.fatal(&format!("pade[{k}]"), &e),
        };
        rec.record("pade", Some(k), Equation::Pade, residual_check(pk, &pair).map(|ok| (ok, Witness::new())));
        if opts.enabled("jacobi") {
            let dual = solve_jacobi(pk).map(|j| (j.p == pair.p && j.q == pair.q, Witness::new()));
            rec.record("jacobi", Some(k), Equation::Jacobi, dual);
        }
        pairs.push(pair);
    }

    if cfg.steps == 0 {
        for fam in ["shape", "L2", "L3", "C0C1", "C0C1-gauge", "L1", "L1-triangle"] {
            let eq = match fam {
                "shape" => Equation::Determinants,
                "L2" | "L3" => Equation::Contiguity,
                "C0C1" | "C0C1-gauge" => Equation::C0C1,
                _ => Equation::Lax,
            };
            rec.skip(fam, eq, "needs the T-shifted problem (steps >= 1)");
        }
        rec.skip("evolution", Equation::Evolution, "needs an orbit of length >= 3");
        let sol = d1_of(p, &pairs[0]).and_then(|d1| {
            let r = check_solution_values(p, &d1.f, None)?;
            let mut w = witness(&[("f", &d1.f)]);
            w.insert("g".into(), "skipped: needs the T-shifted problem".into());
            Ok((r.holds(), w))
        });
        rec.record("solution", Some(0), Equation::Solution, sol);
    } else {
        let orbit = match orbit_from_solved(&params, &pairs) {
            Ok(o) => o,
            Err(e) => return rec.fatal("shape", &e),
        };
        for k in 0..orbit.len() {
            step_checks(&mut rec, &orbit, k, &mut rng);
        }
        if orbit.len() < 3 {
            rec.skip("evolution", Equation::Evolution, "needs an orbit of length >= 3");
        }
    }
    let (list, ok) = check_base_points(p);
    let mut w = Witness::new();
    w.insert("points".into(), list.points.len().to_string());
    w.insert("multiplicity".into(), list.total_multiplicity().to_string());
    rec.record("base-points", None, Equation::BasePoints, Ok((ok, w)));
    rec.report
}

/// Runs instances in parallel; reports keep input order.
pub fn run_sweep(instances: &[InstanceConfig], opts: &RunOptions) -> SweepReport {
    let reports = instances
        .par_iter()
        .enumerate()
        .map(|(i, cfg)| {
            let o = RunOptions { seed: opts.seed.wrapping_add(i as u64), ..opts.clone() };
            run_instance(cfg, &o)
        })
        .collect();
    SweepReport::new(reports)
}

/// Values parameters are drawn from; `0`, `1` and `-1` are excluded.
pub fn parameter_pool() -> Vec<Rat> {
    [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (-2, 1), (-3, 1), (1, 3), (2, 5), (3, 7), (5, 2), (-1, 2), (7, 3)]
        .iter()
        .map(|&(n, d)| rat::rat(n, d))
        .collect()
}

pub fn q_pool() -> Vec<Rat> {
    [(2, 1), (1, 2), (3, 1), (2, 5)].iter().map(|&(n, d)| rat::rat(n, d)).collect()
}

/// One parameter pack with distinct values from the pool; E7 closes its
/// constraint through `b3`.
pub fn draw_params(ptype: PainleveType, m: u32, n: u32, rng: &mut ChaCha8Rng) -> Result<Params> {
    let q = q_pool().choose(rng).expect("nonempty").clone();
    let mut pool = parameter_pool();
    pool.shuffle(rng);
    let mut it = pool.into_iter();
    let mut next = || it.next().expect("pool larger than arity");
    Ok(match ptype {
        PainleveType::E7 => {
            let (a1, a2, a3, b1, b2) = (next(), next(), next(), next(), next());
            e7_close_constraint(&q, &a1, &a2, &a3, &b1, &b2, m, n)?
        }
        PainleveType::E6 => Params::e6(q, [next(), next()], [next(), next()], m, n),
        PainleveType::D5 => Params::d5(q, next(), next(), next(), m, n),
        PainleveType::A4 => Params::a4(q, next(), next(), m, n),
        PainleveType::A2A1 => Params::a2a1(q, next(), m, n),
    })
}

/// Up to this many redraws are made before giving up on a generic pack.
pub const MAX_REDRAWS: usize = 200;

/// Draws until an instance runs without input or genericity errors.
pub fn draw_generic(
    ptype: PainleveType,
    m: u32,
    n: u32,
    steps: usize,
    rng: &mut ChaCha8Rng,
    opts: &RunOptions,
) -> Result<(InstanceConfig, VerificationReport)> {
    for _ in 0..MAX_REDRAWS {
        let Ok(params) = draw_params(ptype, m, n, rng) else { continue };
        let cfg = InstanceConfig { params, steps };
        let report = run_instance(&cfg, opts);
        if report.errors.is_empty() {
            return Ok((cfg, report));
        }
    }
    Err(Error::NonGenericParameters(format!("no generic {ptype} draw in {MAX_REDRAWS} attempts")))
}

/// `count` generic draws from one seed; deterministic in `(seed, ptype, m, n, steps)`.
pub fn random_sweep(
    ptype: PainleveType,
    m: u32,
    n: u32,
    steps: usize,
    count: usize,
    opts: &RunOptions,
) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        reports.push(draw_generic(ptype, m, n, steps, &mut rng, opts)?.1);
    }
    Ok(SweepReport::new(reports))
}

/// Builds parameters from `key=value` pairs (`type`, `q`, `a1`.., `b1`..,
/// `c`, `d`, `m`, `n`, `steps`). An E7 pack without `b3` has it solved
/// from the balancing constraint.
pub fn instance_from_map(map: &BTreeMap<String, String>) -> Result<InstanceConfig> {
    let known = ["type", "q", "a1", "a2", "a3", "b1", "b2", "b3", "c", "d", "m", "n", "steps"];
    if let Some(k) = map.keys().find(|k| !known.contains(&k.as_str())) {
        return Err(Error::Parse(format!("unknown key {k:?}")));
    }
    let get = |k: &str| map.get(k).map(String::as_str);
    let need = |k: &str| get(k).ok_or_else(|| Error::Parse(format!("missing {k}")));
    let ratv = |k: &str| need(k).and_then(rat::parse);
    let int = |k: &str, default: u32| -> Result<u32> {
        get(k).map_or(Ok(default), |v| v.trim().parse().map_err(|_| Error::Parse(format!("{k} = {v:?} is not a nonnegative integer"))))
    };
    let ptype: PainleveType = need("type")?.parse()?;
    let q = ratv("q")?;
    let (m, n) = (int("m", 0)?, int("n", 0)?);
    let steps = int("steps", m.min(1))? as usize;
    let (na, nb) = ptype.arity();
    let a = (1..=na).map(|i| ratv(&format!("a{i}"))).collect::<Result<Vec<_>>>()?;
    let mut b = Vec::with_capacity(nb);
    for i in 1..=nb {
        let key = format!("b{i}");
        if ptype == PainleveType::E7 && i == 3 && get("b3").is_none() {
            let closed = e7_close_constraint(&q, &a[0], &a[1], &a[2], &b[0], &b[1], m, n)?;
            b.push(closed.b[2].clone());
        } else {
            b.push(ratv(&key)?);
        }
    }
    let extra = |k: &str, used: bool| -> Result<Option<Rat>> {
        match (used, get(k)) {
            (true, _) => ratv(k).map(Some),
            (false, None) => Ok(None),
            (false, Some(_)) => Err(Error::Parse(format!("{ptype} takes no {k}"))),
        }
    };
    let c = extra("c", ptype.has_c())?;
    let d = extra("d", ptype.has_d())?;
    Ok(InstanceConfig { params: Params { ptype, q, a, b, c, d, m, n }, steps })
}

/// One config line: whitespace-separated `key=value`; blank and `#` lines give `None`.
pub fn parse_instance_line(line: &str) -> Result<Option<InstanceConfig>> {
    let line = line.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return Ok(None);
    }
    let mut map = BTreeMap::new();
    for tok in line.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::Parse(format!("duplicate key {k:?}")));
        }
    }
    instance_from_map(&map).map(Some)
}

/// A sweep config file; errors name the offending line.
pub fn parse_config(text: &str) -> Result<Vec<InstanceConfig>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match parse_instance_line(line) {
            Ok(Some(cfg)) => out.push(cfg),
            Ok(None) => {}
            Err(e) => return Err(Error::Parse(format!("line {}: {e}", i + 1))),
        }
    }
    Ok(out)
}
