//! The coefficient field `K = Frac(Q(i)[t^Q])` with its `t`-adic valuation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::GaussianRational;
use super::puiseux::PuiseuxPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Result of a valuation: a rational number or `+∞` (for zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(Rational),
    Infinity,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(r) => Some(r),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinity)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(r) => write!(f, "{r}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// A quotient of Puiseux polynomials in canonical form: numerator and
/// denominator are coprime and the denominator's lowest term is `1·t^0`.
/// Canonical form makes structural equality coincide with field equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValuedScalar {
    num: PuiseuxPoly,
    den: PuiseuxPoly,
}

impl Default for ValuedScalar {
    fn default() -> Self {
        ValuedScalar::zero()
    }
}

impl ValuedScalar {
    pub fn zero() -> Self {
        ValuedScalar { num: PuiseuxPoly::zero(), den: PuiseuxPoly::one() }
    }

    pub fn one() -> Self {
        ValuedScalar::from_poly(PuiseuxPoly::one())
    }

    pub fn from_integer(n: i64) -> Self {
        ValuedScalar::from_gaussian(GaussianRational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        ValuedScalar::from_gaussian(GaussianRational::real(r))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        ValuedScalar::from_poly(PuiseuxPoly::constant(c))
    }

    pub fn i() -> Self {
        ValuedScalar::from_gaussian(GaussianRational::i())
    }

    /// `c · t^exp`.
    pub fn monomial(c: GaussianRational, exp: Rational) -> Self {
        ValuedScalar::from_poly(PuiseuxPoly::monomial(c, exp))
    }

    /// `t^exp`.
    pub fn t_pow(exp: Rational) -> Self {
        ValuedScalar::monomial(GaussianRational::one(), exp)
    }

    pub fn from_poly(p: PuiseuxPoly) -> Self {
        ValuedScalar { num: p, den: PuiseuxPoly::one() }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: PuiseuxPoly, den: PuiseuxPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ValuedScalar::canonical(num, den))
    }

    fn canonical(mut num: PuiseuxPoly, mut den: PuiseuxPoly) -> Self {
        if num.is_zero() {
            return ValuedScalar::zero();
        }
        if !den.is_monomial() {
            let g = num.gcd(&den);
            if g.num_terms() > 1 {
                num = num.exact_div(&g).expect("nonzero gcd").expect("gcd divides numerator");
                den = den.exact_div(&g).expect("nonzero gcd").expect("gcd divides denominator");
            }
        }
        let (e, c) = {
            let (e, c) = den.leading_term().expect("nonzero denominator");
            (e.clone(), c.clone())
        };
        if !(e.is_zero() && c.is_one()) {
            num = num.div_monomial(&c, &e).expect("nonzero");
            den = den.div_monomial(&c, &e).expect("nonzero");
        }
        ValuedScalar { num, den }
    }

    pub fn numer(&self) -> &PuiseuxPoly {
        &self.num
    }

    pub fn denom(&self) -> &PuiseuxPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the element lies in `Q(i)[t^Q]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Gaussian rational, if this element is `t`-free.
    pub fn as_gaussian(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The rational, if this element is a `t`-free real number.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gaussian().filter(|g| g.is_real()).map(|g| g.re)
    }

    pub fn valuation(&self) -> Valuation {
        match (self.num.min_exp(), self.den.min_exp()) {
            (Some(a), Some(b)) => Valuation::Finite(a - b),
            _ => Valuation::Infinity,
        }
    }

    /// Lowest-order term `(exponent, coefficient)` of the expansion of the
    /// quotient. Leading terms are multiplicative, so this is
    /// `lt(num) / lt(den)` even when the denominator is not a monomial.
    pub fn leading_term(&self) -> Result<(Rational, GaussianRational)> {
        let (ne, nc) = self.num.leading_term().ok_or_else(|| Error::InvalidInput("leading term of zero".into()))?;
        let (de, dc) = self.den.leading_term().expect("nonzero denominator");
        Ok((ne - de, nc.checked_div(dc)?))
    }

    pub fn neg(&self) -> Self {
        ValuedScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return ValuedScalar::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return ValuedScalar::canonical(self.num.add(&other.num), self.den.clone());
        }
        ValuedScalar::canonical(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return ValuedScalar::from_poly(self.num.mul(&other.num));
        }
        ValuedScalar::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ValuedScalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        if base.den.is_one() {
            return Ok(ValuedScalar::from_poly(base.num.pow(e.unsigned_abs())));
        }
        let k = e.unsigned_abs();
        Ok(ValuedScalar { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        if k.is_zero() {
            return ValuedScalar::zero();
        }
        ValuedScalar { num: self.num.scale(k), den: self.den.clone() }
    }
}

/// The binary field operations as a single entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &ValuedScalar, b: &ValuedScalar, op: ScalarOp) -> Result<ValuedScalar> {
    Ok(match op {
        ScalarOp::Add => a.add(b),
        ScalarOp::Sub => a.sub(b),
        ScalarOp::Mul => a.mul(b),
        ScalarOp::Div => a.checked_div(b)?,
    })
}

impl From<GaussianRational> for ValuedScalar {
    fn from(c: GaussianRational) -> Self {
        ValuedScalar::from_gaussian(c)
    }
}

impl From<Rational> for ValuedScalar {
    fn from(r: Rational) -> Self {
        ValuedScalar::from_rational(r)
    }
}

impl From<i64> for ValuedScalar {
    fn from(n: i64) -> Self {
        ValuedScalar::from_integer(n)
    }
}

impl<'a> Add<&'a ValuedScalar> for &'a ValuedScalar {
    type Output = ValuedScalar;
    fn add(self, rhs: &'a ValuedScalar) -> ValuedScalar {
        ValuedScalar::add(self, rhs)
    }
}

impl<'a> Sub<&'a ValuedScalar> for &'a ValuedScalar {
    type Output = ValuedScalar;
    fn sub(self, rhs: &'a ValuedScalar) -> ValuedScalar {
        ValuedScalar::sub(self, rhs)
    }
}

impl<'a> Mul<&'a ValuedScalar> for &'a ValuedScalar {
    type Output = ValuedScalar;
    fn mul(self, rhs: &'a ValuedScalar) -> ValuedScalar {
        ValuedScalar::mul(self, rhs)
    }
}

impl Neg for &ValuedScalar {
    type Output = ValuedScalar;
    fn neg(self) -> ValuedScalar {
        ValuedScalar::neg(self)
    }
}

impl fmt::Display for ValuedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ValuedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn scalar() -> impl Strategy<Value = ValuedScalar> {
        prop::collection::vec((-6i64..=6, 1i64..=3, -4i64..=4), 1..4).prop_map(|terms| {
            terms
                .into_iter()
                .fold(ValuedScalar::zero(), |acc, (e, d, c)| acc.add(&ValuedScalar::t_pow(Rational::new(e, d)).mul(&ValuedScalar::from_integer(c))))
        })
    }

    proptest! {
        #[test]
        fn valuation_is_multiplicative(a in scalar(), b in scalar()) {
            let expected = match (a.valuation(), b.valuation()) {
                (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(&x + &y),
                _ => Valuation::Infinity,
            };
            prop_assert_eq!(a.mul(&b).valuation(), expected);
        }

        #[test]
        fn ultrametric_inequality(a in scalar(), b in scalar()) {
            let (va, vb) = (a.valuation(), b.valuation());
            let vs = a.add(&b).valuation();
            prop_assert!(vs >= va.clone().min(vb.clone()));
            if va != vb {
                prop_assert_eq!(vs, va.min(vb));
            }
        }
    }
}
