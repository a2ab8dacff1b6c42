//! Quotients of Laurent polynomials.

use std::fmt;

use super::poly::{default_var_names, LaurentPoly};
use crate::error::{Error, Result};
use crate::scalar::ValuedScalar;

/// `num / den` in normal form: a monomial denominator is folded into the
/// numerator, an exactly dividing denominator is divided out, and otherwise
/// the denominator is Laurent-cleared (minimal exponent 0 in each variable)
/// with coefficient 1 on its lexicographically smallest term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if num.num_vars() != den.num_vars() {
            return Err(Error::DimensionMismatch(format!("numerator in {} variables, denominator in {}", num.num_vars(), den.num_vars())));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.num_vars();
        RationalFunction { num: p, den: LaurentPoly::one(n) }
    }

    pub fn constant(num_vars: usize, c: ValuedScalar) -> Self {
        RationalFunction::from_poly(LaurentPoly::constant(num_vars, c))
    }

    pub fn var(num_vars: usize, j: usize) -> Self {
        RationalFunction::from_poly(LaurentPoly::var(num_vars, j))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let n = num.num_vars();
        if num.is_zero() {
            return RationalFunction { num, den: LaurentPoly::one(n) };
        }
        if den.is_one() {
            return RationalFunction { num, den };
        }
        if let Some(q) = num.exact_div(&den).expect("nonzero denominator") {
            return RationalFunction { num: q, den: LaurentPoly::one(n) };
        }
        let shift: Vec<i64> = den.min_exponents().iter().map(|x| -x).collect();
        let (den, c) = den.shift(&shift).content_normalized();
        let num = num.mul_monomial(&shift, &c.recip().expect("nonzero"));
        RationalFunction { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn num_vars(&self) -> usize {
        self.num.num_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Equality as elements of the function field (cross-multiplication).
    pub fn equivalent(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunction::normalized(self.num.add(&other.num), self.den.clone());
        }
        RationalFunction::normalized(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return RationalFunction::from_poly(self.num.mul(&other.num));
        }
        RationalFunction::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        if base.den.is_one() {
            return Ok(RationalFunction::from_poly(base.num.pow(k)));
        }
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: &ValuedScalar) -> Self {
        RationalFunction::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn eval(&self, x: &[ValuedScalar]) -> Result<ValuedScalar> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.num.eval(x)?.checked_div(&d)
    }

    pub fn derivative(&self, j: usize) -> Self {
        let n = self.num.derivative(j).mul(&self.den).sub(&self.num.mul(&self.den.derivative(j)));
        RationalFunction::normalized(n, self.den.mul(&self.den))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.fmt_with(names)
        } else {
            format!("({})/({})", self.num.fmt_with(names), self.den.fmt_with(names))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_var_names(self.num_vars())))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Replaces `x_j` by `alpha[j]` in `f` and returns a single quotient.
/// Components sharing a denominator are grouped so the common denominator
/// stays small.
pub fn substitute(f: &LaurentPoly, alpha: &[RationalFunction]) -> Result<RationalFunction> {
    if f.num_vars() != alpha.len() {
        return Err(Error::DimensionMismatch(format!("polynomial in {} variables, {} substitutions", f.num_vars(), alpha.len())));
    }
    let m = match alpha.first() {
        Some(a) => a.num_vars(),
        None => {
            let c = f.as_constant().unwrap_or_else(ValuedScalar::zero);
            return Ok(RationalFunction::constant(0, c));
        }
    };
    if alpha.iter().any(|a| a.num_vars() != m) {
        return Err(Error::DimensionMismatch("substituted functions live in different rings".into()));
    }
    if f.is_zero() {
        return Ok(RationalFunction::from_poly(LaurentPoly::zero(m)));
    }
    // denominator groups
    let mut groups: Vec<LaurentPoly> = Vec::new();
    let mut group_of: Vec<Option<usize>> = Vec::with_capacity(alpha.len());
    for a in alpha {
        if a.den.is_one() {
            group_of.push(None);
        } else if let Some(k) = groups.iter().position(|g| *g == a.den) {
            group_of.push(Some(k));
        } else {
            groups.push(a.den.clone());
            group_of.push(Some(groups.len() - 1));
        }
    }
    let mono_num: Vec<bool> = alpha.iter().map(|a| a.num.is_monomial()).collect();
    for (e, _) in f.terms() {
        for (j, &k) in e.iter().enumerate() {
            if k < 0 && alpha[j].is_zero() {
                return Err(Error::DivisionByZero);
            }
        }
    }
    let group_exp = |e: &[i64], g: usize| -> i64 { e.iter().enumerate().filter(|(j, _)| group_of[*j] == Some(g)).map(|(_, k)| *k).sum() };
    let big_e: Vec<i64> = (0..groups.len()).map(|g| f.terms().map(|(e, _)| group_exp(e, g).max(0)).max().unwrap_or(0)).collect();
    let big_n: Vec<i64> = (0..alpha.len()).map(|j| if mono_num[j] { 0 } else { f.terms().map(|(e, _)| (-e[j]).max(0)).max().unwrap_or(0) }).collect();

    let mut cache: std::collections::HashMap<(bool, usize, i64), LaurentPoly> = std::collections::HashMap::new();
    let mut power = |is_group: bool, idx: usize, k: i64| -> LaurentPoly {
        cache.entry((is_group, idx, k)).or_insert_with(|| if is_group { groups[idx].pow(k as u64) } else { alpha[idx].num.pow(k as u64) }).clone()
    };

    let mut num = LaurentPoly::zero(m);
    for (e, c) in f.terms() {
        let mut term = LaurentPoly::constant(m, c.clone());
        for (j, &k) in e.iter().enumerate() {
            if mono_num[j] {
                let (me, mc) = alpha[j].num.as_monomial().unwrap();
                let exp: Vec<i64> = me.iter().map(|x| x * k).collect();
                term = term.mul_monomial(&exp, &mc.pow(k)?);
            } else {
                let p = k + big_n[j];
                if p > 0 {
                    term = term.mul(&power(false, j, p));
                }
            }
        }
        for g in 0..groups.len() {
            let p = big_e[g] - group_exp(e, g);
            if p > 0 {
                term = term.mul(&power(true, g, p));
            }
        }
        num = num.add(&term);
    }
    let mut den = LaurentPoly::one(m);
    for g in 0..groups.len() {
        if big_e[g] > 0 {
            den = den.mul(&power(true, g, big_e[g]));
        }
    }
    for j in 0..alpha.len() {
        if big_n[j] > 0 {
            den = den.mul(&power(false, j, big_n[j]));
        }
    }
    RationalFunction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, j: usize) -> LaurentPoly {
        LaurentPoly::var(n, j)
    }

    fn one(n: usize) -> LaurentPoly {
        LaurentPoly::one(n)
    }

    #[test]
    fn monomial_denominator_is_folded() {
        let f = RationalFunction::new(x(2, 0), x(2, 1)).unwrap();
        assert!(f.is_laurent());
        assert_eq!(f.num(), &LaurentPoly::monomial(vec![1, -1], ValuedScalar::one()));
    }

    #[test]
    fn dividing_denominator_cancels() {
        let a = x(1, 0).sub(&one(1));
        let f = RationalFunction::new(a.mul(&a.add(&one(1))), a.clone()).unwrap();
        assert!(f.is_laurent());
        assert_eq!(f.num(), &a.add(&one(1)));
    }

    #[test]
    fn substitution_examples() {
        // x + 1 under the identity
        let f = x(1, 0).add(&one(1));
        let r = substitute(&f, &[RationalFunction::var(1, 0)]).unwrap();
        assert_eq!(r.num(), &f);
        // x under (1+s)/(u-s)
        let s = x(2, 0);
        let u = x(2, 1);
        let a = RationalFunction::new(one(2).add(&s), u.sub(&s)).unwrap();
        let r = substitute(&x(1, 0), &[a.clone()]).unwrap();
        assert!(r.equivalent(&a));
        assert_eq!(r.den(), &u.sub(&s));
        // x*y under (t, t+1)
        let t = x(1, 0);
        let r = substitute(&x(2, 0).mul(&x(2, 1)), &[RationalFunction::from_poly(t.clone()), RationalFunction::from_poly(t.add(&one(1)))]).unwrap();
        assert_eq!(r.num(), &t.mul(&t.add(&one(1))));
    }

    #[test]
    fn negative_powers_of_shared_denominators() {
        let s = x(2, 0);
        let u = x(2, 1);
        let d = u.sub(&s);
        let a = RationalFunction::new(one(2).add(&s), d.clone()).unwrap();
        let b = RationalFunction::new(one(2).add(&u), d.clone()).unwrap();
        let f = LaurentPoly::monomial(vec![2, -1], ValuedScalar::one()).add(&x(2, 1));
        let r = substitute(&f, &[a.clone(), b.clone()]).unwrap();
        let direct = a.pow(2).unwrap().mul(&b.recip().unwrap()).add(&b);
        assert!(r.equivalent(&direct));
    }

    #[test]
    fn zero_in_negative_power_is_an_error() {
        let z = RationalFunction::from_poly(LaurentPoly::zero(1));
        let f = LaurentPoly::monomial(vec![-1], ValuedScalar::one());
        assert!(substitute(&f, &[z]).is_err());
    }
}
