//! Puiseux polynomials: finite sums `Σ c_q t^q` with rational exponents and
//! Gaussian-rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::gaussian::GaussianRational;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Element of `Q(i)[t^Q]`. No zero coefficient is ever stored; the empty
/// map is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<Rational, GaussianRational>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly::default()
    }

    pub fn one() -> Self {
        PuiseuxPoly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        PuiseuxPoly::monomial(c, Rational::zero())
    }

    /// `c · t^exp`.
    pub fn monomial(c: GaussianRational, exp: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        PuiseuxPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, GaussianRational)>>(it: I) -> Self {
        let mut p = PuiseuxPoly::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Rational, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when the polynomial is a constant (no positive or negative `t` powers).
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().is_some_and(|e| e.is_zero()))
    }

    /// Constant coefficient when [`is_constant`](Self::is_constant).
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.terms.is_empty() {
            return Some(GaussianRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Smallest exponent, `None` for zero.
    pub fn min_exp(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    /// The minimal-exponent term.
    pub fn leading_term(&self) -> Option<(&Rational, &GaussianRational)> {
        self.terms.iter().next()
    }

    /// Coefficient of `t^exp` (zero when absent).
    pub fn coeff(&self, exp: &Rational) -> GaussianRational {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn neg(&self) -> Self {
        PuiseuxPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        if k.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: &Rational) -> Self {
        PuiseuxPoly { terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect() }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = PuiseuxPoly::one();
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    /// Divides by the monomial `c · t^exp`.
    pub fn div_monomial(&self, c: &GaussianRational, exp: &Rational) -> Result<Self> {
        let inv = c.recip()?;
        Ok(PuiseuxPoly { terms: self.terms.iter().map(|(e, x)| (e - exp, x * &inv)).collect() })
    }

    /// Keeps only the terms with exponent `<= bound`.
    pub fn truncate_above(&self, bound: &Rational) -> Self {
        PuiseuxPoly { terms: self.terms.iter().filter(|(e, _)| *e <= bound).map(|(e, c)| (e.clone(), c.clone())).collect() }
    }

    /// The first `k` terms by increasing exponent.
    pub fn first_terms(&self, k: usize) -> Self {
        PuiseuxPoly { terms: self.terms.iter().take(k).map(|(e, c)| (e.clone(), c.clone())).collect() }
    }
}

/// Dense encoding of a pair of Puiseux polynomials as ordinary polynomials
/// in `u = t^(1/L)` after removing the minimal exponent of each.
struct DenseFrame {
    lcm: BigInt,
}

impl DenseFrame {
    fn for_polys(polys: &[&PuiseuxPoly]) -> DenseFrame {
        let mut lcm = BigInt::one();
        for p in polys {
            for e in p.terms.keys() {
                lcm = lcm.lcm(&e.denom());
            }
        }
        DenseFrame { lcm }
    }

    fn to_dense(&self, p: &PuiseuxPoly) -> Vec<GaussianRational> {
        let Some(min) = p.min_exp() else { return Vec::new() };
        let l = Rational::from_bigint(self.lcm.clone());
        let idx = |e: &Rational| -> usize {
            let k = (e - min) * &l;
            k.to_i64().and_then(|v| v.to_usize()).expect("dense exponent index")
        };
        let top = idx(p.terms.keys().next_back().unwrap());
        let mut v = vec![GaussianRational::zero(); top + 1];
        for (e, c) in &p.terms {
            v[idx(e)] = c.clone();
        }
        v
    }

    fn from_dense(&self, v: &[GaussianRational]) -> PuiseuxPoly {
        let l = Rational::from_bigint(self.lcm.clone());
        PuiseuxPoly::from_terms(v.iter().enumerate().map(|(k, c)| (&Rational::from_integer(k as i64) / &l, c.clone())))
    }
}

fn trim(v: &mut Vec<GaussianRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Polynomial long division over `Q(i)`; `b` must be nonzero and trimmed.
fn dense_divmod(a: &[GaussianRational], b: &[GaussianRational]) -> (Vec<GaussianRational>, Vec<GaussianRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().recip().expect("nonzero leading coefficient");
    let mut quot = vec![GaussianRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (k, bc) in b.iter().enumerate() {
            r[shift + k] = &r[shift + k] - &(bc * &c);
        }
        quot[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (quot, r)
}

fn dense_gcd(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = dense_divmod(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        let inv = lead.recip().expect("nonzero");
        for c in x.iter_mut() {
            *c = &*c * &inv;
        }
    }
    x
}

impl PuiseuxPoly {
    /// Greatest common divisor up to a unit (monomials are units): the
    /// result has minimal exponent 0 and leading coefficient 1.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        if self.is_monomial() || other.is_monomial() {
            return PuiseuxPoly::one();
        }
        let frame = DenseFrame::for_polys(&[self, other]);
        let g = dense_gcd(&frame.to_dense(self), &frame.to_dense(other));
        frame.from_dense(&g)
    }

    /// Exact quotient `self / other` if `other` divides `self` in `Q(i)[t^Q]`
    /// up to a monomial unit.
    pub fn exact_div(&self, other: &Self) -> Result<Option<Self>> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(PuiseuxPoly::zero()));
        }
        if let Some((e, c)) = other.leading_term().filter(|_| other.is_monomial()) {
            return self.div_monomial(c, e).map(Some);
        }
        let frame = DenseFrame::for_polys(&[self, other]);
        let (qd, r) = dense_divmod(&frame.to_dense(self), &frame.to_dense(other));
        if !r.is_empty() {
            return Ok(None);
        }
        let shift = self.min_exp().unwrap() - other.min_exp().unwrap();
        Ok(Some(frame.from_dense(&qd).shift(&shift)))
    }

    fn normalize_unit(&self) -> Self {
        match self.leading_term() {
            None => PuiseuxPoly::zero(),
            Some((e, _)) => {
                let top = self.terms.iter().next_back().unwrap().1.clone();
                self.div_monomial(&top, e).expect("nonzero")
            }
        }
    }
}

fn fmt_exp(e: &Rational) -> String {
    if e.is_one() {
        "t".to_string()
    } else if e.is_integer() && !e.is_negative() {
        format!("t^{e}")
    } else {
        format!("t^({e})")
    }
}

/// Formats `c · t^e` as a standalone summand (may start with `-`).
pub(crate) fn fmt_term(c: &GaussianRational, e: &Rational) -> String {
    if e.is_zero() {
        return c.to_string();
    }
    let te = fmt_exp(e);
    if c.is_one() {
        return te;
    }
    if (-c).is_one() {
        return format!("-{te}");
    }
    if c.is_compound() {
        format!("({c})*{te}")
    } else {
        format!("{c}*{te}")
    }
}

/// Joins summands with ` + ` / ` - `.
pub(crate) fn join_summands(parts: &[String]) -> String {
    let mut out = String::new();
    for (k, s) in parts.iter().enumerate() {
        if k == 0 {
            out.push_str(s);
        } else if let Some(rest) = s.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(s);
        }
    }
    out
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| fmt_term(c, e)).collect();
        write!(f, "{}", join_summands(&parts))
    }
}

impl fmt::Debug for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::q;

    fn t(e: Rational) -> PuiseuxPoly {
        PuiseuxPoly::monomial(GaussianRational::one(), e)
    }

    #[test]
    fn half_powers_multiply() {
        let h = t(q(1, 2));
        assert_eq!(h.mul(&h), t(q(1, 1)));
    }

    #[test]
    fn gcd_and_exact_division() {
        let one = PuiseuxPoly::one();
        let a = one.sub(&t(q(2, 1))); // 1 - t^2
        let b = one.sub(&t(q(1, 1))); // 1 - t
        let g = a.gcd(&b);
        assert_eq!(g.num_terms(), 2);
        let quot = a.exact_div(&b).unwrap().unwrap();
        assert_eq!(quot, one.add(&t(q(1, 1))));
        assert!(b.exact_div(&one.add(&t(q(1, 1)))).unwrap().is_none());
    }

    #[test]
    fn display_forms() {
        let p = PuiseuxPoly::from_terms([
            (q(0, 1), GaussianRational::i()),
            (q(1, 2), GaussianRational::from_integer(2)),
            (q(1, 1), GaussianRational::from_integer(-1)),
        ]);
        assert_eq!(p.to_string(), "i + 2*t^(1/2) - t");
    }
}
