//! Tropical polynomials `ξ ↦ min_α (v(c_α) + α·ξ)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::laurent::{ExponentVec, LaurentPoly, RationalFunction, RationalMap};
use crate::polyhedra::{LinConstraint, Polyhedron};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropPoly {
    num_vars: usize,
    terms: BTreeMap<ExponentVec, Rational>,
}

fn term_value(e: &[i64], v: &Rational, xi: &[Rational]) -> Rational {
    let mut s = v.clone();
    for (a, x) in e.iter().zip(xi) {
        if *a != 0 {
            s = s + Rational::from_integer(*a) * x.clone();
        }
    }
    s
}

impl TropPoly {
    pub fn new(num_vars: usize, terms: BTreeMap<ExponentVec, Rational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial("tropical polynomial without terms".into()));
        }
        if terms.keys().any(|e| e.len() != num_vars) {
            return Err(Error::DimensionMismatch("exponent length".into()));
        }
        Ok(TropPoly { num_vars, terms })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn term_list(&self) -> Vec<(ExponentVec, Rational)> {
        self.terms.iter().map(|(e, v)| (e.clone(), v.clone())).collect()
    }

    pub fn value(&self, xi: &[Rational]) -> Rational {
        self.terms.iter().map(|(e, v)| term_value(e, v, xi)).min().expect("nonempty")
    }

    /// The minimum and the set of exponents attaining it.
    pub fn trop_eval(&self, xi: &[Rational]) -> (Rational, BTreeSet<ExponentVec>) {
        let vals: Vec<(Rational, &ExponentVec)> = self.terms.iter().map(|(e, v)| (term_value(e, v, xi), e)).collect();
        let min = vals.iter().map(|(v, _)| v.clone()).min().expect("nonempty");
        let arg = vals.iter().filter(|(v, _)| *v == min).map(|(_, e)| (*e).clone()).collect();
        (min, arg)
    }

    /// `{ξ : the term α attains the minimum}`.
    pub fn argmin_region(&self, alpha: &[i64]) -> Polyhedron {
        let va = &self.terms[alpha];
        let cs = self
            .terms
            .iter()
            .filter(|(e, _)| e.as_slice() != alpha)
            .map(|(e, vb)| {
                let normal = alpha.iter().zip(e).map(|(a, b)| Rational::from_integer(a - b)).collect();
                LinConstraint::le(normal, vb - va)
            })
            .collect();
        Polyhedron::new(self.num_vars, cs).expect("consistent")
    }

    /// Pointwise sum; the tropicalisation of a product.
    pub fn trop_mul(&self, other: &TropPoly) -> TropPoly {
        let mut terms: BTreeMap<ExponentVec, Rational> = BTreeMap::new();
        for (ea, va) in &self.terms {
            for (eb, vb) in &other.terms {
                let e: ExponentVec = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let v = va + vb;
                terms.entry(e).and_modify(|w| *w = w.clone().min(v.clone())).or_insert(v);
            }
        }
        TropPoly { num_vars: self.num_vars, terms }
    }
}

pub fn tropicalize_poly(f: &LaurentPoly) -> Result<TropPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("cannot tropicalise 0".into()));
    }
    let terms = f.terms().map(|(e, c)| (e.clone(), c.valuation().finite().expect("nonzero coefficient").clone())).collect();
    TropPoly::new(f.num_vars(), terms)
}

/// `Trop(f/h) = Trop(f) − Trop(h)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropRational {
    pub plus: TropPoly,
    pub minus: TropPoly,
}

impl TropRational {
    pub fn value(&self, xi: &[Rational]) -> Rational {
        self.plus.value(xi) - self.minus.value(xi)
    }

    pub fn num_vars(&self) -> usize {
        self.plus.num_vars()
    }
}

pub fn tropicalize_function(f: &RationalFunction) -> Result<TropRational> {
    Ok(TropRational { plus: tropicalize_poly(f.num())?, minus: tropicalize_poly(f.den())? })
}

pub fn tropicalize_map(phi: &RationalMap) -> Result<Vec<TropRational>> {
    phi.components().iter().map(tropicalize_function).collect()
}

/// `Trop(φ)(ξ)`.
pub fn trop_eval_map(t: &[TropRational], xi: &[Rational]) -> Vec<Rational> {
    t.iter().map(|c| c.value(xi)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{parse_map, parse_poly};
    use crate::scalar::q;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn tropicalise_examples() {
        let f = parse_poly("x - y + 1", &names(&["x", "y"])).unwrap();
        let tf = tropicalize_poly(&f).unwrap();
        assert_eq!(tf.num_terms(), 3);
        assert!(tf.terms().all(|(_, v)| v.is_zero()));
        let g = parse_poly("t*x + 1", &names(&["x"])).unwrap();
        let tg = tropicalize_poly(&g).unwrap();
        assert_eq!(tg.terms().map(|(_, v)| v.clone()).collect::<Vec<_>>(), vec![q(0, 1), q(1, 1)]);
        assert!(tropicalize_poly(&LaurentPoly::zero(1)).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let f = tropicalize_poly(&parse_poly("x - y + 1", &names(&["x", "y"])).unwrap()).unwrap();
        let (v, arg) = f.trop_eval(&[q(2, 1), q(3, 1)]);
        assert_eq!(v, q(0, 1));
        assert_eq!(arg, [vec![0, 0]].into_iter().collect());
        let (v, arg) = f.trop_eval(&[q(-1, 1), q(-1, 1)]);
        assert_eq!(v, q(-1, 1));
        assert_eq!(arg, [vec![1, 0], vec![0, 1]].into_iter().collect());
        let (v, arg) = f.trop_eval(&[q(0, 1), q(5, 1)]);
        assert_eq!(v, q(0, 1));
        assert_eq!(arg, [vec![1, 0], vec![0, 0]].into_iter().collect());
    }

    #[test]
    fn map_tropicalisation() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        let t = tropicalize_map(&phi).unwrap();
        assert_eq!(trop_eval_map(&t, &[q(3, 1)]), vec![q(3, 1), q(0, 1)]);
        assert_eq!(trop_eval_map(&t, &[q(-3, 1)]), vec![q(-3, 1), q(-3, 1)]);
        let psi = parse_map("vars: s, u\n(1 + s)/(u - s)\n(1 + u)/(u - s)").unwrap();
        let t = tropicalize_map(&psi).unwrap();
        // min(0,σ) − min(υ,σ) and min(0,υ) − min(υ,σ)
        for (s, u) in [(1, 2), (-1, 3), (2, -5), (0, 0)] {
            let (s, u) = (q(s, 1), q(u, 1));
            let m = u.clone().min(s.clone());
            let expected = vec![q(0, 1).min(s.clone()) - m.clone(), q(0, 1).min(u.clone()) - m];
            assert_eq!(trop_eval_map(&t, &[s, u]), expected);
        }
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::scalar::{Valuation, ValuedScalar};
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i64..=2, 2), -3i64..=3, 1i64..=5), 1..5).prop_map(|terms| {
            LaurentPoly::from_terms(
                2,
                terms.into_iter().map(|(e, v, c)| (e, ValuedScalar::t_pow(Rational::from_integer(v)).mul(&ValuedScalar::from_integer(c)))),
            )
        })
    }

    proptest! {
        // v(f(x)) ≥ Trop(f)(v(x)), with equality when one term is minimal
        #[test]
        fn valuation_bounded_by_tropicalisation(f in poly(), xi in prop::collection::vec(-3i64..=3, 2), c in prop::collection::vec(1i64..=4, 2)) {
            prop_assume!(!f.is_zero());
            let x: Vec<ValuedScalar> = xi.iter().zip(&c).map(|(&e, &k)| ValuedScalar::t_pow(Rational::from_integer(e)).mul(&ValuedScalar::from_integer(k))).collect();
            let xi_q: Vec<Rational> = xi.iter().map(|&e| Rational::from_integer(e)).collect();
            let (bound, argmin) = tropicalize_poly(&f).unwrap().trop_eval(&xi_q);
            let v = f.eval(&x).unwrap().valuation();
            prop_assert!(v >= Valuation::Finite(bound.clone()));
            if argmin.len() == 1 {
                prop_assert_eq!(v, Valuation::Finite(bound));
            }
        }
    }
}
