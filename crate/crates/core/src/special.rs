//! Tau determinants of terminating hypergeometric series and the
//! special-solution formulae for `f` and `g`.

use num_traits::{One, Zero};

use crate::arith::{rat, Matrix, Rat};
use crate::error::{Error, Result};
use crate::evolution::OrbitData;
use crate::qseries::{qhyper, QHyperSpec};
use crate::systems::{apply_t, shift, PainleveType, ParamId, Params};

/// `tau_{m,n}` (or `tau_{m,n,k}` for D5, A4, A2A1) at the parameters of
/// `base`; the indices are independent of `base.m`, `base.n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TauSpec {
    pub base: Params,
    pub m: i64,
    pub n: i64,
    pub k_offset: i64,
}

impl TauSpec {
    pub fn new(base: &Params, m: i64, n: i64, k_offset: i64) -> Self {
        TauSpec { base: base.clone(), m, n, k_offset }
    }

    pub fn ptype(&self) -> PainleveType {
        self.base.ptype
    }

    /// Determinant dimension `n + 1`; zero for `n < 0`.
    pub fn size(&self) -> usize {
        usize::try_from(self.n + 1).unwrap_or(0)
    }

    /// The series in entry `(i, j)`, which depends on `i + j` only.
    pub fn entry_spec(&self, ij: i64) -> Result<QHyperSpec> {
        let p = &self.base;
        let q = &p.q;
        let order = self.m + self.n;
        let order = u32::try_from(order).map_err(|_| Error::Domain(format!("negative series order {order}")))?;
        let term = rat::pow(q, -i64::from(order))?;
        let zero = Rat::zero();
        let (upper, lower, z) = match p.ptype {
            PainleveType::E7 | PainleveType::E6 => {
                let mut up = p.b.clone();
                up.push(term);
                (up, p.a.clone(), rat::pow(q, ij + 1)?)
            }
            PainleveType::D5 => (vec![p.b(0).clone(), term], vec![p.a(0).clone()], p.c() * rat::pow(q, ij + self.k_offset)?),
            PainleveType::A4 => (vec![p.b(0).clone(), term], vec![zero], p.c() * rat::pow(q, ij + self.k_offset)?),
            PainleveType::A2A1 => (vec![term], vec![zero], -(p.d() * rat::pow(q, ij + self.k_offset)?)),
        };
        QHyperSpec::new(upper, lower, q.clone(), z, order)
    }

    pub fn matrix(&self) -> Result<Matrix<Rat>> {
        let size = self.size();
        let hankel = (0..(2 * size).saturating_sub(1))
            .map(|ij| qhyper(&self.entry_spec(ij as i64)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_fn(size, size, |i, j| hankel[i + j].clone()))
    }
}

/// Exact tau value; the empty determinant (`n < 0`) is one.
pub fn tau(spec: &TauSpec) -> Result<Rat> {
    if spec.n < 0 {
        return Ok(Rat::one());
    }
    Ok(spec.matrix()?.det())
}

pub fn tau_mn(base: &Params, m: i64, n: i64, k: i64) -> Result<Rat> {
    tau(&TauSpec::new(base, m, n, k))
}

/// `gamma_i` and `omega_i` for `i = 1, 2` (E7 and E6).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefactors {
    pub gamma: (Rat, Rat),
    pub omega: (Rat, Rat),
}

pub fn prefactors(p: &Params) -> Result<Prefactors> {
    if !matches!(p.ptype, PainleveType::E7 | PainleveType::E6) {
        return Err(Error::Domain(format!("prefactors are defined for E7 and E6, not {}", p.ptype)));
    }
    Ok(Prefactors { gamma: gammas(p)?, omega: omegas(p)? })
}

fn gammas(p: &Params) -> Result<(Rat, Rat)> {
    let one = Rat::one();
    let q = &p.q;
    let n = i64::from(p.n);
    let qmn = p.qpow(i64::from(p.mn()));
    let gamma = |i: usize| -> Result<Rat> {
        let a = p.a(i);
        let bs = p.b.iter().fold(one.clone(), |acc, b| acc * (&one - b / a));
        let num = a * (&one - a * &qmn) * rat::pow(&(&one - a / q), n)? * bs;
        rat::div(&num, &rat::pow(&(&one - a), n + 1)?)
    };
    Ok((gamma(0)?, gamma(1)?))
}

fn omegas(p: &Params) -> Result<(Rat, Rat)> {
    let one = Rat::one();
    let n = i64::from(p.n);
    let omega = |i: usize| -> Result<Rat> {
        let b = p.b(i);
        let num = (&one - p.a(1) / b) * rat::pow(&(&one - b), n)?;
        rat::div(&num, &rat::pow(&(&one - b / &p.q), n)?)
    };
    Ok((omega(0)?, omega(1)?))
}

/// Outcome of the special-solution check at one step; the `g` formula is
/// skipped (`None`) when `g` is unavailable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionCheck {
    pub f_holds: bool,
    pub g_holds: Option<bool>,
}

impl SolutionCheck {
    pub fn holds(&self) -> bool {
        self.f_holds && self.g_holds.unwrap_or(true)
    }
}

fn ratio(num: Rat, den: Rat, what: &str) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::IndeterminateEvaluation(format!("{what}: vanishing denominator")));
    }
    Ok(num / den)
}

fn sh(p: &Params, ids: &[ParamId], k: i64) -> Params {
    shift(p, ids, k).expect("ids come from the parameter arity")
}

/// Closed-form values predicted by the tau formulae. For E7 and E6 these
/// are the two printed ratios `(1 - f/a1)/(1 - f/a2)` and
/// `(1 - 1/(b1 g))/(1 - 1/(b2 g))`; otherwise `f` (or `f/a1 - 1` for D5) and `g`.
pub fn predicted(p: &Params, with_g: bool) -> Result<(Rat, Option<Rat>)> {
    use ParamId::{A, B};
    let one = Rat::one();
    let q = &p.q;
    let (m, n) = (i64::from(p.m), i64::from(p.n));
    let qm = p.qpow(m);
    let qmn = p.qpow(m + n);
    let t = |pk: &Params, mi: i64, ni: i64, k: i64| tau_mn(pk, mi, ni, k);
    match p.ptype {
        PainleveType::E7 | PainleveType::E6 => {
            let gamma = gammas(p)?;
            let f_side = ratio(
                &gamma.0 * t(&sh(p, &[A(0)], 1), m, n, 0)? * t(&sh(p, &[A(0)], -1), m + 1, n - 1, 0)?,
                &gamma.1 * t(&sh(p, &[A(1)], 1), m, n, 0)? * t(&sh(p, &[A(1)], -1), m + 1, n - 1, 0)?,
                "f ratio",
            )?;
            let g_side = if with_g {
                let omega = omegas(p)?;
                let pt = apply_t(p, 1)?;
                let mt = i64::from(pt.m);
                Some(ratio(
                    &omega.0 * t(&sh(p, &[B(0)], -1), m, n, 0)? * t(&sh(&pt, &[B(0)], 1), mt + 1, n - 1, 0)?,
                    &omega.1 * t(&sh(p, &[B(1)], -1), m, n, 0)? * t(&sh(&pt, &[B(1)], 1), mt + 1, n - 1, 0)?,
                    "g ratio",
                )?)
            } else {
                None
            };
            Ok((f_side, g_side))
        }
        PainleveType::D5 => {
            let (a1, b1, c) = (p.a(0), p.b(0), p.c());
            let pa = sh(p, &[A(0)], 1);
            let f_pref = c * (&one - b1 / a1) * (&one - a1 * &qmn) * rat::pow(&(&one - a1 / q), n)?
                / (&qm * (&one - c) * rat::pow(&(&one - a1), n + 1)?);
            let f = ratio(
                f_pref * t(&pa, m, n, 1)? * t(&sh(p, &[A(0)], -1), m + 1, n - 1, 1)?,
                t(p, m, n, 0)? * t(p, m + 1, n - 1, 2)?,
                "f",
            )?;
            let g = if with_g {
                let g_pref = (&one - a1 * &qmn) * rat::pow(&(&one - b1 / q), n)?
                    / (&qm * (&one - a1) * rat::pow(&(&one - b1), n)?);
                Some(ratio(
                    g_pref * t(&pa, m, n, 1)? * t(p, m, n - 1, 1)?,
                    t(&sh(p, &[B(0)], -1), m, n, 1)? * t(&sh(p, &[A(0), B(0)], 1), m, n - 1, 1)?,
                    "g",
                )?)
            } else {
                None
            };
            Ok((f, g))
        }
        PainleveType::A4 => {
            let (b1, c) = (p.b(0), p.c());
            let f = ratio(
                b1 * c * t(p, m, n, 1)? * t(p, m + 1, n - 1, 1)?,
                (c - &one) * &qm * t(p, m, n, 0)? * t(p, m + 1, n - 1, 2)?,
                "f",
            )?;
            let g = if with_g {
                let g_pref = rat::pow(&(&one - b1 / q), n)? / (&qm * rat::pow(&(&one - b1), n)?);
                Some(ratio(
                    g_pref * t(p, m, n, 1)? * t(p, m, n - 1, 1)?,
                    t(&sh(p, &[B(0)], -1), m, n, 1)? * t(&sh(p, &[B(0)], 1), m, n - 1, 1)?,
                    "g",
                )?)
            } else {
                None
            };
            Ok((f, g))
        }
        PainleveType::A2A1 => {
            let d = p.d();
            let f = ratio(
                d * t(p, m, n, 1)? * t(p, m + 1, n - 1, 1)?,
                &qm * t(p, m, n, 0)? * t(p, m + 1, n - 1, 2)?,
                "f",
            )?;
            let g = if with_g {
                Some(ratio(
                    t(p, m, n, 1)? * t(p, m, n - 1, 1)?,
                    &qmn * t(p, m, n, 0)? * t(p, m, n - 1, 2)?,
                    "g",
                )?)
            } else {
                None
            };
            Ok((f, g))
        }
    }
}

/// The quantities the formulae predict, computed from extracted `f`, `g`.
pub fn observed(p: &Params, f: &Rat, g: Option<&Rat>) -> Result<(Rat, Option<Rat>)> {
    let one = Rat::one();
    match p.ptype {
        PainleveType::E7 | PainleveType::E6 => {
            let fr = ratio(&one - f / p.a(0), &one - f / p.a(1), "observed f ratio")?;
            let gr = match g {
                Some(g) => {
                    if g.is_zero() {
                        return Err(Error::IndeterminateEvaluation("g = 0".into()));
                    }
                    Some(ratio(&one - (p.b(0) * g).recip(), &one - (p.b(1) * g).recip(), "observed g ratio")?)
                }
                None => None,
            };
            Ok((fr, gr))
        }
        PainleveType::D5 => Ok((f / p.a(0) - &one, g.cloned())),
        _ => Ok((f.clone(), g.cloned())),
    }
}

/// Compares extracted `f` (and `g`, when given) with the tau formulae.
pub fn check_solution_values(p: &Params, f: &Rat, g: Option<&Rat>) -> Result<SolutionCheck> {
    let (obs_f, obs_g) = observed(p, f, g)?;
    let (pred_f, pred_g) = predicted(p, g.is_some())?;
    Ok(SolutionCheck { f_holds: obs_f == pred_f, g_holds: obs_g.zip(pred_g).map(|(a, b)| a == b) })
}

/// The special-solution formulae at orbit step `k`.
pub fn check_solution(orbit: &OrbitData, k: usize) -> Result<SolutionCheck> {
    let s = orbit
        .steps
        .get(k)
        .ok_or_else(|| Error::Domain(format!("step {k} outside an orbit of length {}", orbit.len())))?;
    check_solution_values(s.params(), &s.fg.f, Some(&s.fg.g))
}
