//! Rational maps between tori and the homogenisation machinery.

use std::fmt;

use super::poly::{default_var_names, LaurentPoly};
use super::rational_fn::{substitute, RationalFunction};
use crate::error::{Error, Result};
use crate::scalar::ValuedScalar;

/// `φ = (f_1, …, f_n): T^m ⇢ T^n`. Components are never identically zero.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMap {
    domain_dim: usize,
    components: Vec<RationalFunction>,
    vars: Vec<String>,
    name: Option<String>,
}

impl RationalMap {
    pub fn new(domain_dim: usize, components: Vec<RationalFunction>) -> Result<Self> {
        for (k, c) in components.iter().enumerate() {
            if c.num_vars() != domain_dim {
                return Err(Error::DimensionMismatch(format!("component {k} has {} variables, expected {domain_dim}", c.num_vars())));
            }
            if c.is_zero() {
                return Err(Error::InvalidInput(format!("component {k} is identically zero")));
            }
        }
        Ok(RationalMap { domain_dim, components, vars: default_var_names(domain_dim), name: None })
    }

    pub fn from_polys(domain_dim: usize, polys: Vec<LaurentPoly>) -> Result<Self> {
        RationalMap::new(domain_dim, polys.into_iter().map(RationalFunction::from_poly).collect())
    }

    pub fn identity(m: usize) -> Self {
        RationalMap::new(m, (0..m).map(|j| RationalFunction::var(m, j)).collect()).expect("identity")
    }

    /// The monomial map `x ↦ (x^{e_1}, …, x^{e_n})` for exponent rows `e_i`.
    pub fn monomial(domain_dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let comps = rows
            .iter()
            .map(|r| {
                if r.len() != domain_dim {
                    return Err(Error::DimensionMismatch(format!("exponent row of length {}, expected {domain_dim}", r.len())));
                }
                Ok(RationalFunction::from_poly(LaurentPoly::monomial(r.clone(), ValuedScalar::one())))
            })
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(domain_dim, comps)
    }

    pub fn with_vars(mut self, vars: &[&str]) -> Self {
        assert_eq!(vars.len(), self.domain_dim);
        self.vars = vars.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_var_names(mut self, vars: Vec<String>) -> Self {
        assert_eq!(vars.len(), self.domain_dim);
        self.vars = vars;
        self
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[RationalFunction] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &RationalFunction {
        &self.components[k]
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Componentwise equality in the function field.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.domain_dim == other.domain_dim
            && self.codomain_dim() == other.codomain_dim()
            && self.components.iter().zip(&other.components).all(|(a, b)| a.equivalent(b))
    }

    pub fn eval(&self, x: &[ValuedScalar]) -> Result<Vec<ValuedScalar>> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    /// Jacobian matrix of partial derivatives, row per component.
    pub fn jacobian(&self) -> Vec<Vec<RationalFunction>> {
        self.components.iter().map(|c| (0..self.domain_dim).map(|j| c.derivative(j)).collect()).collect()
    }

    pub fn fmt_components(&self) -> Vec<String> {
        self.components.iter().map(|c| c.fmt_with(&self.vars)).collect()
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ↦ ({})", self.vars.join(", "), self.fmt_components().join(", "))
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `φ ∘ α`: substitutes the components of `α` into those of `φ`.
pub fn compose_maps(phi: &RationalMap, alpha: &RationalMap) -> Result<RationalMap> {
    if alpha.codomain_dim() != phi.domain_dim {
        return Err(Error::DimensionMismatch(format!("cannot compose a map from T^{} with a map into T^{}", phi.domain_dim, alpha.codomain_dim())));
    }
    let comps = phi
        .components
        .iter()
        .map(|c| {
            let n = substitute(c.num(), &alpha.components)?;
            let d = substitute(c.den(), &alpha.components)?;
            n.checked_div(&d)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalMap::new(alpha.domain_dim, comps)?.with_var_names(alpha.vars.clone()))
}

/// Writes `φ = (f_1/g, …, f_n/g)` with `g` and every `f_i` free of negative
/// exponents and `g` content-normalised.
pub fn common_denominator_form(phi: &RationalMap) -> (LaurentPoly, Vec<LaurentPoly>) {
    let m = phi.domain_dim;
    let mut dens: Vec<&LaurentPoly> = Vec::new();
    for c in &phi.components {
        if !c.den().is_one() && !dens.contains(&c.den()) {
            dens.push(c.den());
        }
    }
    let mut g = LaurentPoly::one(m);
    for d in &dens {
        g = g.mul(d);
    }
    let mut fs: Vec<LaurentPoly> =
        phi.components.iter().map(|c| c.num().mul(&g.exact_div(c.den()).expect("nonzero").expect("denominator divides product"))).collect();
    let mut lo = g.min_exponents();
    for f in &fs {
        for (a, b) in lo.iter_mut().zip(f.min_exponents()) {
            *a = (*a).min(b);
        }
    }
    let shift: Vec<i64> = lo.iter().map(|x| -x).collect();
    let (g_norm, c) = g.shift(&shift).content_normalized();
    let cinv = c.recip().expect("nonzero");
    for f in fs.iter_mut() {
        *f = f.mul_monomial(&shift, &cinv);
    }
    (g_norm, fs)
}

/// Maximal total degree over the common-denominator form; the least valid
/// `d` for [`homogenize_map`].
pub fn min_homogenization_degree(phi: &RationalMap) -> i64 {
    let (g, fs) = common_denominator_form(phi);
    std::iter::once(&g).chain(&fs).filter_map(|p| p.total_degree()).max().unwrap_or(0)
}

fn homogenize_poly(p: &LaurentPoly, d: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.num_vars() + 1,
        p.terms().map(|(e, c)| {
            let mut e2 = Vec::with_capacity(e.len() + 1);
            e2.push(d - e.iter().sum::<i64>());
            e2.extend_from_slice(e);
            (e2, c.clone())
        }),
    )
}

/// Degree-`d` homogenisation `(g̃, f̃_1, …, f̃_n): T^{m+1} ⇢ T^{n+1}` with the
/// new variable prepended at index 0.
pub fn homogenize_map(phi: &RationalMap, d: i64) -> Result<RationalMap> {
    let (g, fs) = common_denominator_form(phi);
    let labelled = std::iter::once(("g".to_string(), &g)).chain(fs.iter().enumerate().map(|(k, f)| (format!("f{}", k + 1), f)));
    let mut comps = Vec::new();
    for (label, p) in labelled {
        let deg = p.total_degree().unwrap_or(0);
        if deg > d {
            return Err(Error::DegreeTooSmall { component: label, degree: deg, requested: d });
        }
        comps.push(homogenize_poly(p, d));
    }
    let mut vars = vec![fresh_name("x0", &phi.vars)];
    vars.extend(phi.vars.iter().cloned());
    Ok(RationalMap::from_polys(phi.domain_dim + 1, comps)?.with_var_names(vars))
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Sets the first domain variable to 1 and divides components `1..` by
/// component 0.
pub fn dehomogenize_map(alpha: &RationalMap) -> Result<RationalMap> {
    if alpha.codomain_dim() < 2 || alpha.domain_dim == 0 {
        return Err(Error::InvalidInput("dehomogenisation needs at least two components and one variable".into()));
    }
    let restrict =
        |c: &RationalFunction| -> Result<RationalFunction> { RationalFunction::new(c.num().set_var_one_and_drop(0), c.den().set_var_one_and_drop(0)) };
    let a0 = restrict(&alpha.components[0])?;
    if a0.is_zero() {
        return Err(Error::InvalidInput("component 0 vanishes on x0 = 1".into()));
    }
    let comps = alpha.components[1..].iter().map(|c| restrict(c)?.checked_div(&a0)).collect::<Result<Vec<_>>>()?;
    Ok(RationalMap::new(alpha.domain_dim - 1, comps)?.with_var_names(alpha.vars[1..].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse::parse_map;

    #[test]
    fn compose_line_reparameterisation() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        let alpha = parse_map("vars: s, u\n(1 + s)/(u - s)").unwrap();
        let psi = compose_maps(&phi, &alpha).unwrap();
        let expected = parse_map("vars: s, u\n(1 + s)/(u - s)\n(1 + u)/(u - s)").unwrap();
        assert!(psi.equivalent(&expected));
        assert!(compose_maps(&phi, &RationalMap::identity(1)).unwrap().equivalent(&phi));
        assert!(compose_maps(&phi, &phi).is_err());
    }

    #[test]
    fn monomial_composition_multiplies_exponent_matrices() {
        let a = RationalMap::monomial(2, &[vec![1, 2], vec![0, -1], vec![3, 1]]).unwrap();
        let b = RationalMap::monomial(2, &[vec![2, 1], vec![1, 1]]).unwrap();
        let ab = compose_maps(&a, &b).unwrap();
        // rows of A·B
        let expected = RationalMap::monomial(2, &[vec![4, 3], vec![-1, -1], vec![7, 4]]).unwrap();
        assert!(ab.equivalent(&expected));
    }

    #[test]
    fn common_denominator_examples() {
        let phi = parse_map("vars: x, y\nx/y\n1/y").unwrap();
        // x/y and 1/y are Laurent, so g = 1 after clearing y^-1
        let (g, fs) = common_denominator_form(&phi);
        assert_eq!(g.fmt_with(&["x".into(), "y".into()]), "y");
        assert_eq!(fs[0].fmt_with(&["x".into(), "y".into()]), "x");
        assert_eq!(fs[1].fmt_with(&["x".into(), "y".into()]), "1");
        let psi = parse_map("vars: s, u\n(1 + s)/(u - s)\n(1 + u)/(u - s)").unwrap();
        let (g, fs) = common_denominator_form(&psi);
        let names: Vec<String> = vec!["s".into(), "u".into()];
        assert_eq!(g.fmt_with(&names), "-s + u");
        assert_eq!(fs[0].fmt_with(&names), "s + 1");
        assert_eq!(fs[1].fmt_with(&names), "u + 1");
    }

    #[test]
    fn homogenise_line_map() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        assert_eq!(min_homogenization_degree(&phi), 1);
        let h = homogenize_map(&phi, 1).unwrap();
        let expected = parse_map("vars: x0, x\nx0\nx\nx0 + x").unwrap();
        assert!(h.equivalent(&expected));
        assert!(dehomogenize_map(&h).unwrap().equivalent(&phi));
        match homogenize_map(&parse_map("vars: x\nx^2").unwrap(), 1) {
            Err(Error::DegreeTooSmall { component, degree: 2, requested: 1 }) => assert_eq!(component, "f1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dehomogenise_examples() {
        let a = parse_map("vars: x0, x1\nx0\nx1\nx0 + x1").unwrap();
        let d = dehomogenize_map(&a).unwrap();
        assert!(d.equivalent(&parse_map("vars: u\nu\n1 + u").unwrap()));
        let c = dehomogenize_map(&parse_map("vars: x0\nx0\nx0").unwrap()).unwrap();
        assert_eq!(c.domain_dim(), 0);
        assert!(c.component(0).num().is_one());
    }
}
