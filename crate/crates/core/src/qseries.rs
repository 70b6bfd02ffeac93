//! q-shifted factorials, terminating basic hypergeometric sums, and the grid
//! polynomials attached to the nodes `1, q, ..., q^(m+n)`.

use num_traits::{One, Zero};

use crate::arith::{rat, Poly, Rat};
use crate::error::{Error, Result};

/// `(a; q)_s = prod_{k=0}^{s-1} (1 - a q^k)`.
pub fn qpoch(a: &Rat, q: &Rat, s: u32) -> Rat {
    let mut acc = Rat::one();
    let mut qk = Rat::one();
    for _ in 0..s {
        acc *= Rat::one() - a * &qk;
        qk *= q;
    }
    acc
}

/// A terminating series `k phi l (upper; lower; q, z)` summed for `s = 0..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct QHyperSpec {
    pub upper: Vec<Rat>,
    pub lower: Vec<Rat>,
    pub q: Rat,
    pub z: Rat,
    pub termination_order: u32,
}

impl QHyperSpec {
    pub fn new(upper: Vec<Rat>, lower: Vec<Rat>, q: Rat, z: Rat, termination_order: u32) -> Result<Self> {
        let spec = QHyperSpec { upper, lower, q, z, termination_order };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.termination_order;
        let terminator = rat::pow(&self.q, -i64::from(n))?;
        if !self.upper.contains(&terminator) {
            return Err(Error::Domain(format!(
                "no upper parameter equals q^-{n}; the series does not terminate at order {n}"
            )));
        }
        for b in self.lower.iter().filter(|b| !b.is_zero()) {
            for j in 0..n {
                if *b == rat::pow(&self.q, -i64::from(j))? {
                    return Err(Error::DivisionByZero(format!(
                        "lower parameter {} = q^-{j} vanishes before termination",
                        rat::fmt(b)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Exact value of the terminating series
/// `sum_s (upper;q)_s / ((lower;q)_s (q;q)_s) [(-1)^s q^(s(s-1)/2)]^(1+l-k) z^s`.
pub fn qhyper(spec: &QHyperSpec) -> Result<Rat> {
    let q = &spec.q;
    let twist = 1 + spec.lower.len() as i64 - spec.upper.len() as i64;
    let mut term = Rat::one();
    let mut total = Rat::one();
    let mut qs = Rat::one();
    for s in 0..spec.termination_order {
        // term_{s+1} / term_s
        let mut num = spec.upper.iter().fold(Rat::one(), |acc, u| acc * (Rat::one() - u * &qs));
        let den = spec
            .lower
            .iter()
            .fold(Rat::one() - &qs * q, |acc, b| acc * (Rat::one() - b * &qs));
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("Pochhammer denominator vanishes at s = {}", s + 1)));
        }
        num *= rat::pow(&(-&qs), twist)?;
        term = term * num / den * &spec.z;
        total += &term;
        qs *= q;
    }
    Ok(total)
}

/// `prod_{i=0}^{m+n-1} (1 - x / q^i)`, vanishing on the first `m+n` nodes.
pub fn grid_vanishing_poly(q: &Rat, m: u32, n: u32) -> Poly {
    let mut qi = Rat::one();
    let mut acc = Poly::one();
    for _ in 0..m + n {
        acc = &acc * &Poly::one_minus(&qi.recip());
        qi *= q;
    }
    acc
}

/// `F'(q^s)` for `F(x) = prod_{j=0}^{m+n} (x - q^j)`, via the closed form
/// `(q;q)_s (q;q)_{m+n} / (q^s (q^-(m+n); q)_s)`.
pub fn fprime_at_node(q: &Rat, m: u32, n: u32, s: u32) -> Result<Rat> {
    let mn = m + n;
    if s > mn {
        return Err(Error::Domain(format!("node index {s} exceeds m+n = {mn}")));
    }
    let num = qpoch(q, q, s) * qpoch(q, q, mn);
    let den = rat::pow(q, i64::from(s))? * qpoch(&rat::pow(q, -i64::from(mn))?, q, s);
    rat::div(&num, &den)
}

/// The nodes `q^0, ..., q^(m+n)`.
pub fn grid_nodes(q: &Rat, count: u32) -> Vec<Rat> {
    let mut out = Vec::with_capacity(count as usize);
    let mut qi = Rat::one();
    for _ in 0..count {
        out.push(qi.clone());
        qi *= q;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};

    #[test]
    fn qpoch_examples() {
        assert_eq!(qpoch(&int(7), &rat(1, 2), 0), int(1));
        assert_eq!(qpoch(&int(2), &rat(1, 2), 2), int(0));
        assert_eq!(qpoch(&rat(1, 2), &rat(1, 3), 2), rat(5, 12));
    }

    #[test]
    fn qpoch_recurrence() {
        for q in [int(2), rat(1, 2), int(3), rat(2, 5), rat(-3, 7)] {
            for a in [rat(1, 3), int(5), rat(-7, 2)] {
                for s in 0..12 {
                    let step = Rat::one() - &a * rat::pow(&q, s as i64).unwrap();
                    assert_eq!(qpoch(&a, &q, s + 1), qpoch(&a, &q, s) * step);
                }
            }
        }
    }

    #[test]
    fn qhyper_examples() {
        // N = 0: upper contains q^0 = 1
        let s = QHyperSpec::new(vec![int(1), int(5)], vec![int(3)], int(2), int(7), 0).unwrap();
        assert_eq!(qhyper(&s).unwrap(), int(1));
        // 2phi1(2, q^-1; 3; q=2, z=1) = 3/4
        let s = QHyperSpec::new(vec![int(2), rat(1, 2)], vec![int(3)], int(2), int(1), 1).unwrap();
        assert_eq!(qhyper(&s).unwrap(), rat(3, 4));
        // 1phi1(q^-1; 0; q, z) = 1 + z/q
        for (q, z) in [(int(2), int(3)), (rat(2, 5), rat(-1, 7)), (int(-3), int(4))] {
            let s = QHyperSpec::new(vec![q.recip()], vec![int(0)], q.clone(), z.clone(), 1).unwrap();
            assert_eq!(qhyper(&s).unwrap(), int(1) + &z / &q);
        }
    }

    /// Direct transcription of the defining sum, term by term.
    fn qhyper_direct(spec: &QHyperSpec) -> Rat {
        let q = &spec.q;
        let twist = 1 + spec.lower.len() as i64 - spec.upper.len() as i64;
        (0..=spec.termination_order)
            .map(|s| {
                let num: Rat = spec.upper.iter().map(|u| qpoch(u, q, s)).product();
                let den: Rat = spec.lower.iter().map(|b| qpoch(b, q, s)).product::<Rat>() * qpoch(q, q, s);
                let sign = if s % 2 == 0 { int(1) } else { int(-1) };
                let fac = rat::pow(&(sign * rat::pow(q, i64::from(s * s.saturating_sub(1) / 2)).unwrap()), twist).unwrap();
                num / den * fac * rat::pow(&spec.z, i64::from(s)).unwrap()
            })
            .sum()
    }

    #[test]
    fn qhyper_matches_direct_sum() {
        let q = rat(2, 5);
        for n in 0..6u32 {
            let t = rat::pow(&q, -(n as i64)).unwrap();
            let cases = [
                (vec![int(3), t.clone()], vec![int(7)]),
                (vec![t.clone()], vec![int(0)]),
                (vec![int(3), int(5), t.clone()], vec![int(7), rat(1, 3)]),
                (vec![t.clone(), int(3)], vec![int(3)]),
            ];
            for (up, lo) in cases {
                let s = QHyperSpec::new(up, lo, q.clone(), rat(-3, 2), n).unwrap();
                assert_eq!(qhyper(&s).unwrap(), qhyper_direct(&s));
            }
            // a matching upper/lower pair cancels: 2phi1(t, 3; 3) = 1phi0(t; -)
            let paired = QHyperSpec::new(vec![t.clone(), int(3)], vec![int(3)], q.clone(), int(5), n).unwrap();
            let bare = QHyperSpec::new(vec![t.clone()], vec![], q.clone(), int(5), n).unwrap();
            assert_eq!(qhyper(&paired).unwrap(), qhyper(&bare).unwrap());
        }
    }

    #[test]
    fn qhyper_guards() {
        assert!(QHyperSpec::new(vec![int(3)], vec![], int(2), int(1), 2).is_err());
        // lower = q^-1 with N = 3 divides by zero at s = 2
        let bad = QHyperSpec::new(vec![rat(1, 8)], vec![rat(1, 2)], int(2), int(1), 3);
        assert!(matches!(bad, Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn grid_poly_examples() {
        assert_eq!(grid_vanishing_poly(&int(2), 0, 0), Poly::one());
        assert!(grid_vanishing_poly(&int(5), 1, 2).eval(&int(1)).is_zero());
        let p = grid_vanishing_poly(&int(2), 1, 1);
        assert_eq!(p, Poly::new(vec![int(1), rat(-3, 2), rat(1, 2)]));
        for i in 0..5 {
            assert!(grid_vanishing_poly(&rat(2, 5), 3, 2).eval(&rat::pow(&rat(2, 5), i).unwrap()).is_zero());
        }
    }

    #[test]
    fn fprime_closed_form_matches_product() {
        for q in [int(2), rat(1, 2), int(3), rat(2, 5), rat(-5, 3)] {
            for mn in 0..=8u32 {
                let nodes = grid_nodes(&q, mn + 1);
                for s in 0..=mn {
                    let direct: Rat = (0..=mn as usize)
                        .filter(|&j| j != s as usize)
                        .map(|j| &nodes[s as usize] - &nodes[j])
                        .product();
                    assert_eq!(fprime_at_node(&q, mn, 0, s).unwrap(), direct);
                    assert_eq!(fprime_at_node(&q, 0, mn, s).unwrap(), direct);
                }
            }
        }
        assert_eq!(fprime_at_node(&int(2), 0, 0, 0).unwrap(), int(1));
        assert_eq!(fprime_at_node(&int(2), 1, 0, 0).unwrap(), int(-1));
        assert!(fprime_at_node(&int(2), 1, 0, 2).is_err());
    }
}
