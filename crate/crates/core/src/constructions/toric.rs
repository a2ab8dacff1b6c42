//! Torus homomorphisms, translations and cones.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{compose_maps, LaurentPoly, RationalFunction, RationalMap};
use crate::polyhedra::AffineMapQ;
use crate::scalar::{Rational, ValuedScalar};

/// `z ↦ (z^{M_1}, …, z^{M_q})` for the rows `M_i` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub matrix: Vec<Vec<i64>>,
    pub domain_dim: usize,
}

impl MonomialMap {
    pub fn new(domain_dim: usize, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.iter().any(|r| r.len() != domain_dim) {
            return Err(Error::DimensionMismatch(format!("exponent rows must have length {domain_dim}")));
        }
        Ok(MonomialMap { matrix, domain_dim })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        MonomialMap { matrix, domain_dim: n }
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn to_map(&self) -> RationalMap {
        RationalMap::monomial(self.domain_dim, &self.matrix).expect("shape checked")
    }

    /// `Trop(π)`, the linear map with the same matrix.
    pub fn trop(&self) -> AffineMapQ {
        AffineMapQ::from_ints(&self.matrix)
    }
}

/// A point of `T^q`, i.e. a vector of nonzero scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    entries: Vec<ValuedScalar>,
}

impl TorusPoint {
    pub fn new(entries: Vec<ValuedScalar>) -> Result<Self> {
        if let Some(k) = entries.iter().position(|x| x.is_zero()) {
            return Err(Error::InvalidInput(format!("torus point has zero entry at {k}")));
        }
        Ok(TorusPoint { entries })
    }

    pub fn ones(q: usize) -> Self {
        TorusPoint { entries: vec![ValuedScalar::one(); q] }
    }

    pub fn entries(&self) -> &[ValuedScalar] {
        &self.entries
    }

    pub fn valuation(&self) -> Vec<Rational> {
        self.entries.iter().map(|x| x.valuation().finite().expect("nonzero").clone()).collect()
    }
}

/// `L_u ∘ π ∘ φ`.
pub fn toric_pushforward(phi: &RationalMap, pi: &MonomialMap, u: &TorusPoint) -> Result<RationalMap> {
    if pi.domain_dim != phi.codomain_dim() {
        return Err(Error::DimensionMismatch(format!("monomial map expects T^{}, map lands in T^{}", pi.domain_dim, phi.codomain_dim())));
    }
    if u.entries.len() != pi.codomain_dim() {
        return Err(Error::DimensionMismatch(format!("torus point in T^{}, monomial map lands in T^{}", u.entries.len(), pi.codomain_dim())));
    }
    let composed = compose_maps(&pi.to_map(), phi)?;
    let comps = composed.components().iter().zip(&u.entries).map(|(c, ui)| c.scale(ui)).collect();
    Ok(RationalMap::new(phi.domain_dim(), comps)?.with_var_names(phi.vars().to_vec()))
}

/// `(x_0, x) ↦ (x_0, x_0 φ(x))`, whose image is the cone over the image of `φ`.
pub fn cone_over_map(phi: &RationalMap) -> RationalMap {
    let m = phi.domain_dim() + 1;
    let t = RationalFunction::var(m, 0);
    let shift: Vec<usize> = (1..m).collect();
    let mut comps = vec![t.clone()];
    for c in phi.components() {
        let lifted = RationalFunction::new(c.num().remap_vars(m, &shift), c.den().remap_vars(m, &shift)).expect("nonzero denominator");
        comps.push(t.mul(&lifted));
    }
    let mut vars = vec![fresh("x0", phi.vars())];
    vars.extend(phi.vars().iter().cloned());
    RationalMap::new(m, comps).expect("nonzero components").with_var_names(vars)
}

pub(crate) fn fresh(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// The monomial `c·x^e` as a rational function.
pub(crate) fn monomial_fn(e: Vec<i64>, c: ValuedScalar) -> RationalFunction {
    RationalFunction::from_poly(LaurentPoly::monomial(e, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_map;
    use crate::scalar::q;
    use crate::tropical::{trop_eval_map, tropicalize_map};

    #[test]
    fn identity_pushforward_is_noop() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        let out = toric_pushforward(&phi, &MonomialMap::identity(2), &TorusPoint::ones(2)).unwrap();
        assert!(out.equivalent(&phi));
    }

    #[test]
    fn pushforward_translates_tropical_values() {
        let phi = parse_map("vars: x, y\nx + y\nx - 2*y + t").unwrap();
        let pi = MonomialMap::new(2, vec![vec![1, 1], vec![2, -1], vec![0, 3]]).unwrap();
        let u = TorusPoint::new(vec![ValuedScalar::t_pow(q(1, 1)), ValuedScalar::from_integer(3), ValuedScalar::t_pow(q(-1, 2))]).unwrap();
        let push = toric_pushforward(&phi, &pi, &u).unwrap();
        let tp = tropicalize_map(&push).unwrap();
        let tf = tropicalize_map(&phi).unwrap();
        for (a, b) in [(0, 0), (1, -2), (-3, 5), (2, 2)] {
            let xi = [q(a, 1), q(b, 3)];
            let inner = trop_eval_map(&tf, &xi);
            let expected: Vec<Rational> = pi.trop().apply(&inner).iter().zip(u.valuation()).map(|(x, v)| x + &v).collect();
            assert_eq!(trop_eval_map(&tp, &xi), expected);
        }
    }

    #[test]
    fn cone_and_back() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        let cone = cone_over_map(&phi);
        assert_eq!(cone.domain_dim(), 2);
        // (t, p) ↦ t^{-1} p recovers φ after setting t = 1
        let back = MonomialMap::new(3, vec![vec![-1, 1, 0], vec![-1, 0, 1]]).unwrap();
        let recovered = toric_pushforward(&cone, &back, &TorusPoint::ones(2)).unwrap();
        assert_eq!(recovered.fmt_components(), vec!["x", "x + 1"]);
        let constant = RationalMap::new(1, vec![RationalFunction::constant(1, ValuedScalar::one())]).unwrap();
        assert_eq!(cone_over_map(&constant).fmt_components(), vec!["x0'", "x0'"]);
    }
}
