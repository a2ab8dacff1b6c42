//! Gaussian rationals `Q(i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use crate::error::{Error, Result};

/// `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::real(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussianRational::new(&self.re * k, &self.im * k)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = GaussianRational::one();
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        acc
    }

    /// An exact square root in `Q(i)`, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.im.is_zero() {
            if let Some(r) = rational_sqrt(&self.re) {
                return Some(GaussianRational::real(r));
            }
            if let Some(r) = rational_sqrt(&-&self.re) {
                return Some(GaussianRational::new(Rational::zero(), r));
            }
            return None;
        }
        // (p + qi)^2 = a + bi  with  p^2 = (a + |z|)/2,  q = b/(2p)
        let modulus = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2);
        let p2 = (&self.re + &modulus) / &two;
        let p = rational_sqrt(&p2)?;
        if p.is_zero() {
            return None;
        }
        let qv = &self.im / &(&two * &p);
        Some(GaussianRational::new(p, qv))
    }

    /// True when printing needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        Some(Rational::from_bigint(sn) / Rational::from_bigint(sd))
    } else {
        None
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        -&self
    }
}

fn imag_part(im: &Rational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{im}*i")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}", imag_part(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{} - {}", self.re, imag_part(&-&self.im))
        } else {
            write!(f, "{} + {}", self.re, imag_part(&self.im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::q;

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_integer(-1));
        assert_eq!(i.pow(4), GaussianRational::one());
    }

    #[test]
    fn division_round_trip() {
        let a = GaussianRational::new(q(1, 2), q(3, 1));
        let b = GaussianRational::new(q(-2, 1), q(1, 5));
        let c = a.checked_div(&b).unwrap();
        assert_eq!(&c * &b, a);
        assert!(a.checked_div(&GaussianRational::zero()).is_err());
    }

    #[test]
    fn exact_square_roots() {
        let z = GaussianRational::new(q(3, 1), q(4, 1)); // (2+i)^2
        let r = z.sqrt().unwrap();
        assert_eq!(&r * &r, z);
        assert_eq!(GaussianRational::from_integer(-4).sqrt(), Some(GaussianRational::new(q(0, 1), q(2, 1))));
        assert!(GaussianRational::from_integer(2).sqrt().is_none());
        let w = GaussianRational::new(q(0, 1), q(2, 1)); // (1+i)^2
        let s = w.sqrt().unwrap();
        assert_eq!(&s * &s, w);
    }

    #[test]
    fn display() {
        assert_eq!(GaussianRational::new(q(1, 2), q(-1, 1)).to_string(), "1/2 - i");
        assert_eq!(GaussianRational::new(q(0, 1), q(2, 3)).to_string(), "2/3*i");
    }
}
