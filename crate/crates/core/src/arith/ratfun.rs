//! Univariate rational functions in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Poly;
use super::rat::Rat;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Because the form is
/// canonical, structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let l = den.lead().recip();
        Ok(RatFun { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun::from(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial this function equals, if it is one.
    pub fn as_poly(&self) -> Option<Poly> {
        self.is_polynomial().then(|| self.num.scale(&self.den.lead().recip()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        RatFun::new(&self.num * p, self.den.clone()).expect("denominator stays nonzero")
    }

    pub fn recip(&self) -> Result<Self> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("rational function divided by zero".into()));
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn eval(&self, x0: &Rat) -> Result<Rat> {
        let d = self.den.eval(x0);
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!("pole at x = {}", super::rat::fmt(x0))));
        }
        Ok(self.num.eval(x0) / d)
    }

    /// `r(lambda x)`; `lambda` must be nonzero.
    pub fn scale_arg(&self, lambda: &Rat) -> Self {
        assert!(!lambda.is_zero(), "scale_arg by zero");
        RatFun::new(self.num.scale_arg(lambda), self.den.scale_arg(lambda))
            .expect("denominator stays nonzero")
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(RatFun::one(), |acc, _| &acc * &base))
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::new(p, Poly::one()).expect("unit denominator")
    }
}

impl From<Rat> for RatFun {
    fn from(c: Rat) -> Self {
        RatFun::constant(c)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFun::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Whether two coefficient vectors are proportional by a single rational
/// function, i.e. every 2x2 minor vanishes and the zero patterns agree.
pub fn proportional(a: &[RatFun], b: &[RatFun]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.iter().zip(b).any(|(x, y)| x.is_zero() != y.is_zero()) {
        return false;
    }
    if a.iter().all(RatFun::is_zero) {
        return true;
    }
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}
