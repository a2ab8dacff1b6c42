//! Sparse multivariate Laurent polynomials over `K`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{puiseux::join_summands, ValuedScalar};

/// An exponent vector; entries may be negative.
pub type ExponentVec = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    num_vars: usize,
    terms: BTreeMap<ExponentVec, ValuedScalar>,
}

/// Binary ring operations as a single entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &LaurentPoly, g: &LaurentPoly, op: PolyOp) -> Result<LaurentPoly> {
    if f.num_vars != g.num_vars {
        return Err(Error::DimensionMismatch(format!("{} vs {} variables", f.num_vars, g.num_vars)));
    }
    Ok(match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
    })
}

fn add_exp(a: &[i64], b: &[i64]) -> ExponentVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl LaurentPoly {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        LaurentPoly::constant(num_vars, ValuedScalar::one())
    }

    pub fn constant(num_vars: usize, c: ValuedScalar) -> Self {
        LaurentPoly::monomial(vec![0; num_vars], c)
    }

    pub fn monomial(exp: ExponentVec, c: ValuedScalar) -> Self {
        let mut p = LaurentPoly::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `x_j`.
    pub fn var(num_vars: usize, j: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[j] = 1;
        LaurentPoly::monomial(e, ValuedScalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (ExponentVec, ValuedScalar)>>(num_vars: usize, it: I) -> Self {
        let mut p = LaurentPoly::zero(num_vars);
        for (e, c) in it {
            assert_eq!(e.len(), num_vars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: ExponentVec, c: ValuedScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &ValuedScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[i64]) -> ValuedScalar {
        self.terms.get(exp).cloned().unwrap_or_else(ValuedScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<ValuedScalar> {
        if self.is_zero() {
            return Some(ValuedScalar::zero());
        }
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// The single term of a monomial.
    pub fn as_monomial(&self) -> Option<(&ExponentVec, &ValuedScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Lexicographically smallest term.
    pub fn lex_min_term(&self) -> Option<(&ExponentVec, &ValuedScalar)> {
        self.terms.iter().next()
    }

    /// Lexicographically largest term.
    pub fn lex_max_term(&self) -> Option<(&ExponentVec, &ValuedScalar)> {
        self.terms.iter().next_back()
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { num_vars: self.num_vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = LaurentPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(add_exp(ea, eb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, k: &ValuedScalar) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero(self.num_vars);
        }
        LaurentPoly { num_vars: self.num_vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(k))).collect() }
    }

    /// Multiplication by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPoly { num_vars: self.num_vars, terms: self.terms.iter().map(|(e, c)| (add_exp(e, shift), c.clone())).collect() }
    }

    /// Multiplication by the Laurent monomial `c·x^e`.
    pub fn mul_monomial(&self, exp: &[i64], c: &ValuedScalar) -> Self {
        self.shift(exp).scale(c)
    }

    pub fn pow(&self, e: u64) -> Self {
        if let Some((exp, c)) = self.as_monomial() {
            let k = e as i64;
            return LaurentPoly::monomial(exp.iter().map(|x| x * k).collect(), c.pow(k).expect("nonneg power"));
        }
        let mut acc = LaurentPoly::one(self.num_vars);
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Per-variable minimum exponent (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> ExponentVec {
        let mut m: Option<ExponentVec> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.num_vars])
    }

    pub fn max_exponents(&self) -> ExponentVec {
        let mut m: Option<ExponentVec> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(v) => v.iter().zip(e).map(|(a, b)| *a.max(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.num_vars])
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn is_homogeneous_of_degree(&self, d: i64) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<i64>() == d)
    }

    /// Degree in variable `j` (max exponent), assuming nonnegative exponents.
    pub fn degree_in(&self, j: usize) -> i64 {
        self.terms.keys().map(|e| e[j]).max().unwrap_or(0)
    }

    /// Coefficient of `x_j^k` as a polynomial in the remaining variables
    /// (the ambient number of variables is kept, with exponent `j` zeroed).
    pub fn coefficient_in(&self, j: usize, k: i64) -> Self {
        let mut out = LaurentPoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[j] == k {
                let mut e2 = e.clone();
                e2[j] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Exact support set of a nonzero polynomial.
    pub fn newton_support(&self) -> Result<BTreeSet<ExponentVec>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("newton support of 0".into()));
        }
        Ok(self.terms.keys().cloned().collect())
    }

    /// Divides by the coefficient of the lexicographically smallest term.
    pub fn content_normalized(&self) -> (Self, ValuedScalar) {
        match self.lex_min_term() {
            None => (self.clone(), ValuedScalar::one()),
            Some((_, c)) => {
                let c = c.clone();
                (self.scale(&c.recip().expect("nonzero")), c)
            }
        }
    }

    /// Evaluates at a point with nonzero coordinates where negative powers occur.
    pub fn eval(&self, x: &[ValuedScalar]) -> Result<ValuedScalar> {
        if x.len() != self.num_vars {
            return Err(Error::DimensionMismatch(format!("point of length {} for {} variables", x.len(), self.num_vars)));
        }
        let mut acc = ValuedScalar::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k != 0 {
                    v = v.mul(&xi.pow(k)?);
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Formal partial derivative in `x_j`.
    pub fn derivative(&self, j: usize) -> Self {
        let mut out = LaurentPoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            if e[j] != 0 {
                let mut e2 = e.clone();
                e2[j] -= 1;
                out.add_term(e2, c.mul(&ValuedScalar::from_integer(e[j])));
            }
        }
        out
    }

    /// Reinterprets in a ring with more or fewer variables through an index map:
    /// variable `j` of `self` becomes variable `map[j]` of the result.
    pub fn remap_vars(&self, new_num_vars: usize, map: &[usize]) -> Self {
        let mut out = LaurentPoly::zero(new_num_vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; new_num_vars];
            for (j, &k) in e.iter().enumerate() {
                e2[map[j]] += k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Sets variable `j` to 1 and removes it from the ring.
    pub fn set_var_one_and_drop(&self, j: usize) -> Self {
        let mut out = LaurentPoly::zero(self.num_vars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(j);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact quotient `self / other` in the Laurent ring, or `None` if `other`
    /// does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Result<Option<Self>> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.num_vars)));
        }
        if let Some((e, c)) = other.as_monomial() {
            let neg: Vec<i64> = e.iter().map(|x| -x).collect();
            return Ok(Some(self.mul_monomial(&neg, &c.recip()?)));
        }
        // Newton polytopes add under multiplication, so quotient exponents
        // are confined to a box.
        let lo: Vec<i64> = self.min_exponents().iter().zip(other.min_exponents()).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = self.max_exponents().iter().zip(other.max_exponents()).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Ok(None);
        }
        let (ge, gc) = other.lex_max_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let ginv = gc.recip()?;
        let mut r = self.clone();
        let mut quotient = LaurentPoly::zero(self.num_vars);
        while let Some((re, rc)) = r.lex_max_term().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Vec<i64> = re.iter().zip(&ge).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return Ok(None);
            }
            let qc = rc.mul(&ginv);
            r = r.sub(&other.mul_monomial(&qe, &qc));
            quotient.add_term(qe, qc);
        }
        Ok(Some(quotient))
    }

    /// Formats with the given variable names.
    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(e, c)| fmt_laurent_term(c, e, names)).collect();
        join_summands(&parts)
    }
}

pub fn default_var_names(n: usize) -> Vec<String> {
    (0..n).map(|j| format!("x{j}")).collect()
}

fn fmt_monomial(e: &[i64], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (k, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(names[k].clone()),
            _ => parts.push(format!("{}^{}", names[k], x)),
        }
    }
    parts.join("*")
}

fn fmt_laurent_term(c: &ValuedScalar, e: &[i64], names: &[String]) -> String {
    let mono = fmt_monomial(e, names);
    if mono.is_empty() {
        let s = c.to_string();
        return if s.contains(" + ") || s.contains(" - ") { format!("({s})") } else { s };
    }
    if c.is_one() {
        return mono;
    }
    if c.neg().is_one() {
        return format!("-{mono}");
    }
    let s = c.to_string();
    let compound = s.contains(" + ") || s.contains(" - ") || s.contains(")/(");
    if compound {
        format!("({s})*{mono}")
    } else {
        format!("{s}*{mono}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&default_var_names(self.num_vars)))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i64..=3, 2), -4i64..=4), 1..5)
            .prop_map(|terms| LaurentPoly::from_terms(2, terms.into_iter().map(|(e, c)| (e, ValuedScalar::from_integer(c)))))
    }

    proptest! {
        #[test]
        fn ring_laws(f in poly(), g in poly(), h in poly()) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert!(f.sub(&f).is_zero());
        }

        #[test]
        fn exact_division_undoes_multiplication(f in poly(), g in poly()) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!(f.mul(&g).exact_div(&g).unwrap(), Some(f));
        }
    }
}
