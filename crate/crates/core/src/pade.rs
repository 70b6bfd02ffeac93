//! Padé interpolation on the q-grid, solved two independent ways.
//!
//! `solve_linear` takes the kernel of the homogeneous system
//! `P(q^s) - Y_s Q(q^s) = 0`; `solve_jacobi` evaluates the Cauchy-Jacobi
//! determinant formulas specialised to the q-grid. Both return the
//! representative with monic `Q`.

use num_traits::{One, Zero};

use crate::arith::{rat, Matrix, Poly, Rat};
use crate::error::{Error, Result};
use crate::qseries::{grid_nodes, qpoch};
use crate::systems::{y_sequence, Params};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadePair {
    pub p: Poly,
    pub q: Poly,
    /// Scalar taking the raw solver output to this normalization.
    pub gauge: Rat,
}

impl PadePair {
    /// Both polynomials multiplied by `lambda`; gauge is updated to match.
    pub fn rescaled(&self, lambda: &Rat) -> PadePair {
        PadePair { p: self.p.scale(lambda), q: self.q.scale(lambda), gauge: &self.gauge * lambda }
    }

    /// Coefficients of `P` followed by those of `Q`, padded to `m+1` and `n+1`.
    pub fn coefficient_vector(&self, m: u32, n: u32) -> Vec<Rat> {
        (0..=m as usize)
            .map(|i| self.p.coeff(i))
            .chain((0..=n as usize).map(|j| self.q.coeff(j)))
            .collect()
    }
}

/// Normalizes to monic `Q` after checking the degree certificate.
fn normalize(p: Poly, q: Poly, m: u32, n: u32, raw_scale: Rat) -> Result<PadePair> {
    if p.degree() != Some(m as usize) || q.degree() != Some(n as usize) {
        return Err(Error::NonGenericParameters(format!(
            "interpolant degrees ({:?}, {:?}) differ from ({m}, {n})",
            p.degree(),
            q.degree()
        )));
    }
    let lam = q.lead().recip();
    Ok(PadePair { p: p.scale(&lam), q: q.scale(&lam), gauge: raw_scale * lam })
}

/// Kernel of the `(m+n+1) x (m+n+2)` interpolation system for an arbitrary
/// grid sequence.
pub fn solve_linear_seq(q: &Rat, m: u32, n: u32, ys: &[Rat]) -> Result<PadePair> {
    let mn = (m + n) as usize;
    assert_eq!(ys.len(), mn + 1, "need Y_0..Y_(m+n)");
    let nodes = grid_nodes(q, m + n + 1);
    let sys = Matrix::from_fn(mn + 1, mn + 2, |s, col| {
        let x = &nodes[s];
        if col <= m as usize {
            rat::pow(x, col as i64).expect("node nonzero")
        } else {
            -&ys[s] * rat::pow(x, (col - m as usize - 1) as i64).expect("node nonzero")
        }
    });
    let ker = sys.nullspace();
    if ker.len() != 1 {
        return Err(Error::NonGenericParameters(format!("kernel dimension {} (expected 1)", ker.len())));
    }
    let v = &ker[0];
    let p = Poly::new(v[..=m as usize].to_vec());
    let qq = Poly::new(v[m as usize + 1..].to_vec());
    normalize(p, qq, m, n, Rat::one())
}

pub fn solve_linear(p: &Params) -> Result<PadePair> {
    p.validate()?;
    solve_linear_seq(&p.q, p.m, p.n, &y_sequence(p)?)
}

/// Cauchy-Jacobi determinants on the q-grid:
///
/// `P(x) = F(x) / (q;q)_{m+n}^{n+1} det[ sum_s w_s q^{s(i+j+1)} / (x - q^s) ]_{0..n}`
/// `Q(x) = 1 / (q;q)_{m+n}^n det[ sum_s w_s q^{s(i+j+1)} (x - q^s) ]_{0..n-1}`
///
/// with `w_s = Y_s (q^-(m+n); q)_s / (q; q)_s` and `F(x) = prod_s (x - q^s)`.
/// Both determinants are evaluated as scalars at points off the grid and the
/// polynomials recovered by interpolation, `m+1` points for `P` and `n+1` for `Q`.
pub fn solve_jacobi_seq(q: &Rat, m: u32, n: u32, ys: &[Rat]) -> Result<PadePair> {
    let mn = m + n;
    assert_eq!(ys.len(), mn as usize + 1, "need Y_0..Y_(m+n)");
    let nodes = grid_nodes(q, mn + 1);
    let qinv = rat::pow(q, -i64::from(mn))?;
    let weights: Vec<Rat> = (0..=mn)
        .map(|s| rat::div(&(&ys[s as usize] * qpoch(&qinv, q, s)), &qpoch(q, q, s)))
        .collect::<Result<_>>()?;
    let qq_mn = qpoch(q, q, mn);
    let nn = n as usize;
    // w_s q^{s k} for k up to 2n+1
    let wq: Vec<Vec<Rat>> = (0..=mn as usize)
        .map(|s| (0..=2 * nn + 1).map(|k| &weights[s] * rat::pow(&nodes[s], k as i64).expect("node nonzero")).collect())
        .collect();
    let samples: Vec<Rat> = (1..)
        .map(|k| rat::rat(-(2 * k + 1), 3))
        .filter(|x| !nodes.contains(x))
        .take(m.max(n) as usize + 1)
        .collect();

    let moment = |x: &Rat, i: usize, j: usize, inverse: bool| -> Rat {
        (0..=mn as usize).fold(Rat::zero(), |acc, s| {
            let d = x - &nodes[s];
            if inverse { acc + &wq[s][i + j + 1] / d } else { acc + &wq[s][i + j + 1] * d }
        })
    };
    let q_scale = rat::pow(&qq_mn, -i64::from(n))?;
    let p_scale = rat::pow(&qq_mn, -(i64::from(n) + 1))?;
    let q_vals: Vec<Rat> = samples[..=nn]
        .iter()
        .map(|x| Matrix::from_fn(nn, nn, |i, j| moment(x, i, j, false)).det() * &q_scale)
        .collect();
    let p_vals: Vec<Rat> = samples[..=m as usize]
        .iter()
        .map(|x| {
            let f = nodes.iter().fold(Rat::one(), |acc, t| acc * (x - t));
            f * Matrix::from_fn(nn + 1, nn + 1, |i, j| moment(x, i, j, true)).det() * &p_scale
        })
        .collect();
    let ppoly = Poly::interpolate(&samples[..=m as usize], &p_vals);
    let qpoly = Poly::interpolate(&samples[..=nn], &q_vals);

    if ppoly.is_zero() || qpoly.is_zero() {
        return Err(Error::NonGenericParameters("Jacobi determinant formula gives the zero polynomial".into()));
    }
    normalize(ppoly, qpoly, m, n, Rat::one())
}

pub fn solve_jacobi(p: &Params) -> Result<PadePair> {
    p.validate()?;
    solve_jacobi_seq(&p.q, p.m, p.n, &y_sequence(p)?)
}

/// `P(q^s) == Y_s Q(q^s)` for every node, exactly.
pub fn residual_check(p: &Params, pair: &PadePair) -> Result<bool> {
    let ys = y_sequence(p)?;
    Ok(residual_check_seq(&p.q, &ys, pair))
}

pub fn residual_check_seq(q: &Rat, ys: &[Rat], pair: &PadePair) -> bool {
    grid_nodes(q, ys.len() as u32)
        .iter()
        .zip(ys)
        .all(|(x, y)| (pair.p.eval(x) - y * pair.q.eval(x)).is_zero())
}

/// The scalar `c` with `b = c a`, if the vectors are proportional and `a` is nonzero.
pub fn proportionality(a: &[Rat], b: &[Rat]) -> Option<Rat> {
    if a.len() != b.len() {
        return None;
    }
    let k = a.iter().position(|x| !x.is_zero())?;
    let c = &b[k] / &a[k];
    a.iter().zip(b).all(|(x, y)| *y == x * &c).then_some(c)
}
