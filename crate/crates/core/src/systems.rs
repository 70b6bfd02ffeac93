//! The five interpolation problems: parameter packs, the grid sequence `Y_s`,
//! the ratio functions `G`, `K`, `H`, and the parameter shifts.
//!
//! The interpolated function `Y(x)` itself involves infinite products and is
//! never built. Everything downstream works with `Y_s` and with the rational
//! ratios `G(x) = Y(qx)/Y(x)` and `K(x) = T(Y)(x)/Y(x)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat, Poly, Rat, RatFun};
use crate::error::{Error, Result};
use crate::qseries::qpoch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PainleveType {
    E7,
    E6,
    D5,
    A4,
    A2A1,
}

impl PainleveType {
    pub const ALL: [PainleveType; 5] =
        [PainleveType::E7, PainleveType::E6, PainleveType::D5, PainleveType::A4, PainleveType::A2A1];

    /// Lowercase CLI name.
    pub fn name(self) -> &'static str {
        match self {
            PainleveType::E7 => "e7",
            PainleveType::E6 => "e6",
            PainleveType::D5 => "d5",
            PainleveType::A4 => "a4",
            PainleveType::A2A1 => "a2a1",
        }
    }

    /// Prefix used in equation tags (`E7D`, `A21eq`, ...).
    pub fn tag(self) -> &'static str {
        match self {
            PainleveType::E7 => "E7",
            PainleveType::E6 => "E6",
            PainleveType::D5 => "D5",
            PainleveType::A4 => "A4",
            PainleveType::A2A1 => "A21",
        }
    }

    /// Number of `a` and `b` parameters.
    pub fn arity(self) -> (usize, usize) {
        match self {
            PainleveType::E7 => (3, 3),
            PainleveType::E6 => (2, 2),
            PainleveType::D5 => (1, 1),
            PainleveType::A4 => (0, 1),
            PainleveType::A2A1 => (0, 0),
        }
    }

    pub fn has_c(self) -> bool {
        matches!(self, PainleveType::D5 | PainleveType::A4)
    }

    pub fn has_d(self) -> bool {
        self == PainleveType::A2A1
    }
}

impl fmt::Display for PainleveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PainleveType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e7" => Ok(PainleveType::E7),
            "e6" => Ok(PainleveType::E6),
            "d5" => Ok(PainleveType::D5),
            "a4" => Ok(PainleveType::A4),
            "a2a1" | "a21" | "a2+a1" => Ok(PainleveType::A2A1),
            _ => Err(Error::Parse(format!("unknown type {s:?}"))),
        }
    }
}

/// One instance of the interpolation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub ptype: PainleveType,
    pub q: Rat,
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub c: Option<Rat>,
    pub d: Option<Rat>,
    pub m: u32,
    pub n: u32,
}

/// Names a single shiftable parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamId {
    A(usize),
    B(usize),
    C,
    D,
}

impl ParamId {
    /// Parses one id (`a1`, `b3`, `c`, `d`) or a concatenation such as
    /// `a1b1` naming a composite shift.
    pub fn parse_list(s: &str) -> Result<Vec<ParamId>> {
        let bytes = s.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        let bad = || Error::Domain(format!("unknown parameter name {s:?}"));
        while i < bytes.len() {
            match bytes[i] {
                b'a' | b'b' => {
                    let digit = bytes.get(i + 1).filter(|c| c.is_ascii_digit()).ok_or_else(bad)?;
                    let k = usize::from(digit - b'0');
                    if k == 0 {
                        return Err(bad());
                    }
                    out.push(if bytes[i] == b'a' { ParamId::A(k - 1) } else { ParamId::B(k - 1) });
                    i += 2;
                }
                b'c' => {
                    out.push(ParamId::C);
                    i += 1;
                }
                b'd' => {
                    out.push(ParamId::D);
                    i += 1;
                }
                _ => return Err(bad()),
            }
        }
        if out.is_empty() {
            return Err(bad());
        }
        Ok(out)
    }
}

impl Params {
    pub fn a(&self, i: usize) -> &Rat {
        &self.a[i]
    }

    pub fn b(&self, i: usize) -> &Rat {
        &self.b[i]
    }

    /// `c` for D5/A4. Panics on other types.
    pub fn c(&self) -> &Rat {
        self.c.as_ref().expect("parameter c is only defined for D5 and A4")
    }

    /// `d` for A2A1. Panics on other types.
    pub fn d(&self) -> &Rat {
        self.d.as_ref().expect("parameter d is only defined for A2A1")
    }

    pub fn mn(&self) -> u32 {
        self.m + self.n
    }

    /// `q^e`; `q` is nonzero for any validated pack.
    pub fn qpow(&self, e: i64) -> Rat {
        rat::pow(&self.q, e).expect("q is nonzero")
    }

    pub fn with_mn(&self, m: u32, n: u32) -> Params {
        Params { m, n, ..self.clone() }
    }

    /// Arity, nonzero-ness, `q` not in `{0, 1, -1}`, no vanishing `(a_i; q)_s`
    /// for `s <= m+n`, and the E7 balancing constraint.
    pub fn validate(&self) -> Result<()> {
        let (na, nb) = self.ptype.arity();
        if self.a.len() != na || self.b.len() != nb {
            return Err(Error::Domain(format!(
                "{} expects {na} a-parameters and {nb} b-parameters, got {} and {}",
                self.ptype,
                self.a.len(),
                self.b.len()
            )));
        }
        if self.ptype.has_c() != self.c.is_some() || self.ptype.has_d() != self.d.is_some() {
            return Err(Error::Domain(format!("{} takes c: {}, d: {}", self.ptype, self.ptype.has_c(), self.ptype.has_d())));
        }
        if self.q.is_zero() || self.q.is_one() || self.q == -Rat::one() {
            return Err(Error::NonGenericParameters(format!("q = {} gives repeated grid nodes", rat::fmt(&self.q))));
        }
        let named = self
            .a
            .iter()
            .enumerate()
            .map(|(i, v)| (format!("a{}", i + 1), v))
            .chain(self.b.iter().enumerate().map(|(i, v)| (format!("b{}", i + 1), v)))
            .chain(self.c.iter().map(|v| ("c".to_string(), v)))
            .chain(self.d.iter().map(|v| ("d".to_string(), v)));
        for (name, v) in named {
            if v.is_zero() {
                return Err(Error::NonGenericParameters(format!("{name} = 0")));
            }
        }
        for (i, a) in self.a.iter().enumerate() {
            for s in 0..=self.mn() {
                if *a == self.qpow(-i64::from(s)) {
                    return Err(Error::NonGenericParameters(format!(
                        "a{} = q^-{s} makes a Pochhammer denominator of Y vanish",
                        i + 1
                    )));
                }
            }
        }
        if self.ptype == PainleveType::E7 {
            let lhs = &self.a[0] * &self.a[1] * &self.a[2] * self.qpow(i64::from(self.m));
            let rhs = &self.b[0] * &self.b[1] * &self.b[2] * self.qpow(i64::from(self.n));
            if lhs != rhs {
                return Err(Error::ConstraintViolation(format!(
                    "a1 a2 a3 q^m = {} but b1 b2 b3 q^n = {}",
                    rat::fmt(&lhs),
                    rat::fmt(&rhs)
                )));
            }
        }
        Ok(())
    }

    fn slot(&mut self, id: ParamId) -> Result<&mut Rat> {
        let ptype = self.ptype;
        let missing = || Error::Domain(format!("{ptype} has no parameter {id:?}"));
        match id {
            ParamId::A(i) => self.a.get_mut(i).ok_or_else(missing),
            ParamId::B(i) => self.b.get_mut(i).ok_or_else(missing),
            ParamId::C => self.c.as_mut().ok_or_else(missing),
            ParamId::D => self.d.as_mut().ok_or_else(missing),
        }
    }
}

/// The grid values and ratio functions of one instance. `g_num/g_den`,
/// `k_num/k_den` and `h` follow the printed normalizations, which fix the
/// scale of the Casorati constants read off downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemData {
    pub g: RatFun,
    pub k: RatFun,
    pub h: Poly,
    pub g_num: Poly,
    pub g_den: Poly,
    pub k_num: Poly,
    pub k_den: Poly,
}

/// `Y_0, ..., Y_{m+n}`.
pub fn y_sequence(p: &Params) -> Result<Vec<Rat>> {
    (0..=p.mn()).map(|s| y_value(p, s)).collect()
}

pub fn y_value(p: &Params, s: u32) -> Result<Rat> {
    let q = &p.q;
    let ratio = |b: &Rat, a: &Rat| -> Result<Rat> {
        let den = qpoch(a, q, s);
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("({}; q)_{s} = 0", rat::fmt(a))));
        }
        Ok(qpoch(b, q, s) / den)
    };
    let si = i64::from(s);
    Ok(match p.ptype {
        PainleveType::E7 | PainleveType::E6 => {
            let mut acc = Rat::one();
            for (a, b) in p.a.iter().zip(&p.b) {
                acc *= ratio(b, a)?;
            }
            acc
        }
        PainleveType::D5 => rat::pow(p.c(), si)? * ratio(&p.b[0], &p.a[0])?,
        PainleveType::A4 => rat::pow(p.c(), si)? * qpoch(&p.b[0], q, s),
        PainleveType::A2A1 => rat::pow(q, si * (si - 1) / 2)? * rat::pow(p.d(), si)?,
    })
}

fn prod_one_minus<'a>(xs: impl IntoIterator<Item = &'a Rat>) -> Poly {
    xs.into_iter().fold(Poly::one(), |acc, a| &acc * &Poly::one_minus(a))
}

pub fn system_data(p: &Params) -> Result<SystemData> {
    p.validate()?;
    let one = Rat::one();
    let (g_num, g_den, k_num, k_den, h) = match p.ptype {
        PainleveType::E7 => {
            let (a1, a3, b3) = (&p.a[0], &p.a[2], &p.b[2]);
            let g_num = prod_one_minus(&p.b);
            let g_den = prod_one_minus(&p.a);
            let k_num = Poly::one_minus(b3).scale(&((&one - a1) * (&one - a3)));
            let k_den = prod_one_minus([a1, a3]).scale(&(&one - b3));
            let h = g_den.scale(&(&one - b3));
            (g_num, g_den, k_num, k_den, h)
        }
        PainleveType::E6 => {
            let a1 = &p.a[0];
            let g_den = prod_one_minus(&p.a);
            (
                prod_one_minus(&p.b),
                g_den.clone(),
                Poly::constant(&one - a1),
                Poly::one_minus(a1),
                g_den,
            )
        }
        PainleveType::D5 => {
            let a1 = &p.a[0];
            (
                Poly::one_minus(&p.b[0]).scale(p.c()),
                Poly::one_minus(a1),
                Poly::constant(&one - a1),
                Poly::one_minus(a1),
                Poly::one_minus(a1),
            )
        }
        PainleveType::A4 => {
            (Poly::one_minus(&p.b[0]).scale(p.c()), Poly::one(), Poly::one(), Poly::one(), Poly::one())
        }
        PainleveType::A2A1 => {
            (Poly::monomial(p.d().clone(), 1), Poly::one(), Poly::one(), Poly::one(), Poly::one())
        }
    };
    Ok(SystemData {
        g: RatFun::new(g_num.clone(), g_den.clone())?,
        k: RatFun::new(k_num.clone(), k_den.clone())?,
        h,
        g_num,
        g_den,
        k_num,
        k_den,
    })
}

/// The time evolution `T` (`direction = 1`) or its inverse (`direction = -1`).
pub fn apply_t(p: &Params, direction: i32) -> Result<Params> {
    if direction != 1 && direction != -1 {
        return Err(Error::Domain(format!("direction must be +1 or -1, got {direction}")));
    }
    let m = i64::from(p.m) - i64::from(direction);
    if m < 0 {
        return Err(Error::Domain(format!("time evolution would give m = {m}")));
    }
    let f = p.qpow(i64::from(direction));
    let mut out = p.clone();
    out.m = m as u32;
    match p.ptype {
        PainleveType::E7 => {
            out.a[0] *= &f;
            out.a[2] *= &f;
            out.b[2] *= &f;
        }
        PainleveType::E6 | PainleveType::D5 => out.a[0] *= &f,
        PainleveType::A4 | PainleveType::A2A1 => {}
    }
    Ok(out)
}

/// Multiplies each named parameter by `q^k`. No constraint is re-checked:
/// shifted packs feed tau functions, which are defined off the E7 locus too.
pub fn shift(p: &Params, ids: &[ParamId], k: i64) -> Result<Params> {
    let f = p.qpow(k);
    let mut out = p.clone();
    for &id in ids {
        *out.slot(id)? *= &f;
    }
    Ok(out)
}

/// `shift` with ids given by name, e.g. `"a1"` or the composite `"a1b1"`.
pub fn shift_param(p: &Params, name: &str, k: i64) -> Result<Params> {
    shift(p, &ParamId::parse_list(name)?, k)
}

/// E7 parameters with `b3 = a1 a2 a3 q^(m-n) / (b1 b2)`, so the balancing
/// constraint holds exactly.
#[allow(clippy::too_many_arguments)]
pub fn e7_close_constraint(q: &Rat, a1: &Rat, a2: &Rat, a3: &Rat, b1: &Rat, b2: &Rat, m: u32, n: u32) -> Result<Params> {
    let b3 = rat::div(&(a1 * a2 * a3 * rat::pow(q, i64::from(m) - i64::from(n))?), &(b1 * b2))?;
    Ok(Params {
        ptype: PainleveType::E7,
        q: q.clone(),
        a: vec![a1.clone(), a2.clone(), a3.clone()],
        b: vec![b1.clone(), b2.clone(), b3],
        c: None,
        d: None,
        m,
        n,
    })
}

impl Params {
    pub fn e7(q: Rat, a: [Rat; 3], b: [Rat; 3], m: u32, n: u32) -> Params {
        Params { ptype: PainleveType::E7, q, a: a.into(), b: b.into(), c: None, d: None, m, n }
    }

    pub fn e6(q: Rat, a: [Rat; 2], b: [Rat; 2], m: u32, n: u32) -> Params {
        Params { ptype: PainleveType::E6, q, a: a.into(), b: b.into(), c: None, d: None, m, n }
    }

    pub fn d5(q: Rat, a1: Rat, b1: Rat, c: Rat, m: u32, n: u32) -> Params {
        Params { ptype: PainleveType::D5, q, a: vec![a1], b: vec![b1], c: Some(c), d: None, m, n }
    }

    pub fn a4(q: Rat, b1: Rat, c: Rat, m: u32, n: u32) -> Params {
        Params { ptype: PainleveType::A4, q, a: vec![], b: vec![b1], c: Some(c), d: None, m, n }
    }

    pub fn a2a1(q: Rat, d: Rat, m: u32, n: u32) -> Params {
        Params { ptype: PainleveType::A2A1, q, a: vec![], b: vec![], c: None, d: Some(d), m, n }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};
    use crate::error::Error;

    fn samples() -> Vec<Params> {
        vec![
            e7_close_constraint(&int(2), &int(3), &int(5), &int(7), &int(11), &int(13), 2, 1).unwrap(),
            Params::e6(int(2), [int(3), int(5)], [int(7), int(11)], 2, 2),
            Params::d5(rat(1, 2), int(3), int(5), int(7), 3, 1),
            Params::a4(int(3), int(5), int(7), 2, 2),
            Params::a2a1(rat(2, 5), int(3), 3, 2),
        ]
    }

    #[test]
    fn y_sequence_examples() {
        for p in samples() {
            assert_eq!(y_sequence(&p).unwrap()[0], int(1));
        }
        let p = Params::a2a1(int(2), int(3), 1, 1);
        assert_eq!(y_sequence(&p).unwrap(), vec![int(1), int(3), int(18)]);
        let p = Params::d5(int(2), int(3), int(5), int(7), 1, 0);
        assert_eq!(y_sequence(&p).unwrap()[1], int(14));
    }

    #[test]
    fn printed_ratio_functions() {
        let sd = system_data(&Params::a2a1(int(2), int(3), 1, 1)).unwrap();
        assert_eq!(sd.g, RatFun::from(Poly::monomial(int(3), 1)));
        assert_eq!(sd.k, RatFun::one());
        assert_eq!(sd.h, Poly::one());
        let sd = system_data(&Params::a4(int(2), int(5), int(7), 1, 1)).unwrap();
        assert_eq!(sd.g, RatFun::from(Poly::one_minus(&int(5)).scale(&int(7))));
        assert_eq!(sd.k, RatFun::one());
        assert_eq!(sd.h, Poly::one());
    }

    #[test]
    fn grid_consistency() {
        for p in samples() {
            let ys = y_sequence(&p).unwrap();
            let sd = system_data(&p).unwrap();
            for s in 0..p.mn() {
                let x = p.qpow(i64::from(s));
                assert_eq!(sd.g.eval(&x).unwrap() * &ys[s as usize], ys[s as usize + 1], "{:?} s={s}", p.ptype);
            }
            let ybar = y_sequence(&apply_t(&p, 1).unwrap().with_mn(p.m, p.n)).unwrap();
            for s in 0..=p.mn() {
                let x = p.qpow(i64::from(s));
                assert_eq!(sd.k.eval(&x).unwrap() * &ys[s as usize], ybar[s as usize], "{:?} s={s}", p.ptype);
            }
            // H is a scalar multiple of lcm(G_den, K_den)
            let l = sd.g_den.lcm(&sd.k_den);
            assert_eq!(sd.h.monic(), l);
        }
    }

    #[test]
    fn time_evolution() {
        let p = Params::a2a1(int(2), int(3), 2, 1);
        let t = apply_t(&p, 1).unwrap();
        assert_eq!((t.d.clone().unwrap(), t.m, t.n), (int(3), 1, 1));
        for p in samples() {
            assert_eq!(apply_t(&apply_t(&p, 1).unwrap(), -1).unwrap(), p);
            assert_eq!(apply_t(&apply_t(&p, -1).unwrap(), 1).unwrap(), p);
        }
        let e7 = samples().remove(0);
        apply_t(&e7, 1).unwrap().validate().unwrap();
        assert!(matches!(apply_t(&p.with_mn(0, 1), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn parameter_shifts() {
        for p in samples() {
            for name in ["a1", "b1", "c", "d", "a1b1"] {
                if let Ok(s) = shift_param(&p, name, 1) {
                    assert_eq!(shift_param(&s, name, -1).unwrap(), p);
                }
            }
        }
        let p = Params::e6(int(2), [int(3), int(5)], [int(7), int(11)], 1, 1);
        let s = shift_param(&p, "b1", 1).unwrap();
        assert_eq!(s.a, p.a);
        assert_eq!(s.b[0], int(14));
        shift_param(&p, "a1", 1).unwrap().validate().unwrap();
        let both = shift_param(&p, "a1b1", 1).unwrap();
        assert_eq!((both.a[0].clone(), both.b[0].clone()), (int(6), int(14)));
        assert!(matches!(shift_param(&p, "c", 1), Err(Error::Domain(_))));
        assert!(matches!(shift_param(&p, "z9", 1), Err(Error::Domain(_))));
        // T and a shift on a disjoint parameter commute
        let lhs = apply_t(&shift_param(&p, "b2", 1).unwrap(), 1).unwrap();
        let rhs = shift_param(&apply_t(&p, 1).unwrap(), "b2", 1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn e7_constraint() {
        let p = e7_close_constraint(&int(2), &int(3), &int(5), &int(7), &int(11), &int(13), 2, 1).unwrap();
        assert_eq!(p.b[2], rat(210, 143));
        p.validate().unwrap();
        let one = int(1);
        let sym = e7_close_constraint(&int(2), &one, &one, &one, &one, &one, 3, 3).unwrap();
        assert_eq!(sym.b[2], int(1));
        assert!(sym.validate().is_err());
        let mut broken = p.clone();
        broken.b[2] += int(1);
        assert!(matches!(broken.validate(), Err(Error::ConstraintViolation(_))));
        assert!(e7_close_constraint(&int(2), &one, &one, &one, &int(0), &one, 1, 1).is_err());
    }

    #[test]
    fn genericity_guards() {
        assert!(Params::a2a1(int(1), int(3), 1, 1).validate().is_err());
        assert!(Params::a2a1(int(-1), int(3), 1, 1).validate().is_err());
        assert!(Params::a2a1(int(2), int(0), 1, 1).validate().is_err());
        // a1 = q^-2 with m + n = 2
        assert!(Params::d5(int(2), rat(1, 4), int(5), int(7), 1, 1).validate().is_err());
        assert!(Params::d5(int(2), rat(1, 4), int(5), int(7), 1, 0).validate().is_ok());
        assert!(y_value(&Params::d5(int(2), int(1), int(5), int(7), 1, 0), 1).is_err());
    }
}
