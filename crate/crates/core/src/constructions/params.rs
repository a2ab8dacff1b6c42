//! Named parameterisations: linear spaces, rational curves, rank-two
//! matrices, the Grassmannian of planes and Horn uniformisation.

use num_traits::ToPrimitive;

use super::roots::gaussian_roots;
use super::toric::{monomial_fn, MonomialMap, TorusPoint};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFunction, RationalMap};
use crate::linalg::{nullspace, primitive_integer, rank, to_rational_matrix};
use crate::scalar::{GaussianRational, Rational, ValuedScalar};
use crate::tropical::circuits;

/// `w ↦ A w` where the columns of `A` are the circuits of `V = rowspace(basis)`.
pub fn yu_yuster_param(basis: &[Vec<ValuedScalar>], n: usize) -> Result<RationalMap> {
    if rank(basis) == 0 {
        return Err(Error::InvalidInput("the zero space has no parameterisation into the torus".into()));
    }
    let cols = circuits(basis, n).vectors;
    let p = cols.len();
    let comps = (0..n)
        .map(|i| {
            let terms = cols.iter().enumerate().filter(|(_, c)| !c[i].is_zero()).map(|(k, c)| {
                let mut e = vec![0; p];
                e[k] = 1;
                (e, c[i].clone())
            });
            let poly = LaurentPoly::from_terms(p, terms);
            if poly.is_zero() {
                return Err(Error::InvalidInput(format!("coordinate {i} vanishes on V, which then misses the torus")));
            }
            Ok(RationalFunction::from_poly(poly))
        })
        .collect::<Result<Vec<_>>>()?;
    let vars = (1..=p).map(|k| format!("w{k}")).collect();
    Ok(RationalMap::new(p, comps)?.with_var_names(vars).with_name("yu-yuster"))
}

/// Same, for `V = {x : E x = 0}`.
pub fn yu_yuster_from_equations(equations: &[Vec<ValuedScalar>], n: usize) -> Result<RationalMap> {
    yu_yuster_param(&nullspace(equations, n), n)
}

/// `f_i(x) = c_i ∏_{s ∈ S} (x − s)^{e_is}` for univariate `f_i`.
#[derive(Clone, Debug)]
pub struct CurveFactorization {
    pub roots: Vec<ValuedScalar>,
    pub exponents: Vec<Vec<i64>>,
    pub constants: Vec<ValuedScalar>,
}

impl CurveFactorization {
    /// `x ↦ (x − s)_{s ∈ S}`.
    pub fn affine_map(&self) -> RationalMap {
        let comps = self.roots.iter().map(|s| RationalFunction::from_poly(LaurentPoly::var(1, 0).sub(&LaurentPoly::constant(1, s.clone())))).collect();
        RationalMap::new(1, comps).expect("nonzero").with_vars(&["x"])
    }

    pub fn monomial_map(&self) -> MonomialMap {
        MonomialMap::new(self.roots.len(), self.exponents.clone()).expect("shape")
    }

    pub fn torus_point(&self) -> TorusPoint {
        TorusPoint::new(self.constants.clone()).expect("nonzero")
    }
}

/// Linear factors of a univariate Laurent polynomial: roots with
/// multiplicity (root 0 absorbs the monomial part) and the constant factor.
fn linear_factors(p: &LaurentPoly) -> Result<(Vec<(ValuedScalar, i64)>, ValuedScalar)> {
    let lo = p.min_exponents()[0];
    let hi = p.max_exponents()[0];
    let mut coeffs: Vec<ValuedScalar> = (lo..=hi).map(|k| p.coeff(&[k])).collect();
    let mut out: Vec<(ValuedScalar, i64)> = Vec::new();
    if lo != 0 {
        out.push((ValuedScalar::zero(), lo));
    }
    let lead = coeffs.last().expect("nonzero").clone();
    coeffs = coeffs.iter().map(|c| c.checked_div(&lead).expect("nonzero")).collect();
    let gauss: Option<Vec<GaussianRational>> = coeffs.iter().map(|c| c.as_gaussian()).collect();
    let mut rest_deg = coeffs.len() - 1;
    match gauss {
        Some(g) => {
            let (roots, rest) = gaussian_roots(&g);
            for (r, mu) in roots {
                out.push((ValuedScalar::from_gaussian(r), mu as i64));
            }
            rest_deg = rest.len() - 1;
        }
        None if rest_deg == 1 => {
            out.push((coeffs[0].neg(), 1));
            rest_deg = 0;
        }
        None => {}
    }
    if rest_deg > 0 {
        return Err(Error::IrreducibleFactor(format!("factor of degree {rest_deg} in {} has no roots in Q(i)", p.fmt_with(&["x".to_string()]))));
    }
    Ok((out, lead))
}

/// Splits univariate rational functions into linear factors over `Q(i)`.
pub fn curve_factorization(fs: &RationalMap) -> Result<CurveFactorization> {
    if fs.domain_dim() != 1 {
        return Err(Error::InvalidInput("curve factorisation needs functions of one variable".into()));
    }
    let mut roots: Vec<ValuedScalar> = Vec::new();
    let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
    let mut constants = Vec::new();
    for f in fs.components() {
        let (num, cn) = linear_factors(f.num())?;
        let (den, cd) = linear_factors(f.den())?;
        let mut row = Vec::new();
        for (s, e) in num.into_iter().chain(den.into_iter().map(|(s, e)| (s, -e))) {
            let k = match roots.iter().position(|r| *r == s) {
                Some(k) => k,
                None => {
                    roots.push(s);
                    roots.len() - 1
                }
            };
            row.push((k, e));
        }
        rows.push(row);
        constants.push(cn.checked_div(&cd)?);
    }
    let exponents = rows
        .into_iter()
        .map(|row| {
            let mut e = vec![0; roots.len()];
            for (k, x) in row {
                e[k] += x;
            }
            e
        })
        .collect();
    Ok(CurveFactorization { roots, exponents, constants })
}

fn var_block(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

/// `(u, x, v, y) ↦ (u_i v_j (x_i + y_j))_{i,j}` in row-major order.
pub fn rank2_param(m: usize, n: usize) -> Result<RationalMap> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidInput("rank2_param needs m, n >= 2".into()));
    }
    let dim = 2 * m + 2 * n;
    let var = |k: usize| LaurentPoly::var(dim, k);
    let mut comps = Vec::new();
    for i in 0..m {
        for j in 0..n {
            let (u, x, v, y) = (i, m + i, 2 * m + j, 2 * m + n + j);
            let p = var(u).mul(&var(v)).mul(&var(x).add(&var(y)));
            comps.push(RationalFunction::from_poly(p));
        }
    }
    let mut vars = var_block("u", m);
    vars.extend(var_block("x", m));
    vars.extend(var_block("v", n));
    vars.extend(var_block("y", n));
    Ok(RationalMap::new(dim, comps)?.with_var_names(vars).with_name(&format!("rank2({m},{n})")))
}

/// `(u, x) ↦ (u_i u_j (x_i − x_j))_{i<j}` in lexicographic pair order.
pub fn grassmannian2_param(n: usize) -> Result<RationalMap> {
    if n < 4 {
        return Err(Error::InvalidInput("grassmannian2_param needs n >= 4".into()));
    }
    let dim = 2 * n;
    let var = |k: usize| LaurentPoly::var(dim, k);
    let mut comps = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = var(i).mul(&var(j)).mul(&var(n + i).sub(&var(n + j)));
            comps.push(RationalFunction::from_poly(p));
        }
    }
    let mut vars = var_block("u", n);
    vars.extend(var_block("x", n));
    Ok(RationalMap::new(dim, comps)?.with_var_names(vars).with_name(&format!("grassmannian(2,{n})")))
}

/// Integer kernel basis of `A` (one primitive vector per free column).
pub fn integer_kernel(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = a.first().map_or(0, |r| r.len());
    nullspace(&to_rational_matrix(a), cols).iter().map(|v| primitive_integer(v).iter().map(|x| x.to_i64().expect("small kernel entries")).collect()).collect()
}

/// Horn uniformisation `(λ, s) ↦ ((Bλ)_j s^{a_j})_j` with `B` an integer
/// kernel basis of `A` and `a_j` the columns of `A`.
pub fn horn_param(a: &[Vec<i64>]) -> Result<RationalMap> {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("ragged matrix".into()));
    }
    let aq = to_rational_matrix(a);
    if rank(&aq) != d {
        return Err(Error::InvalidInput("A must have full row rank".into()));
    }
    let mut with_ones = aq.clone();
    with_ones.push(vec![Rational::one(); n]);
    if rank(&with_ones) != d {
        return Err(Error::InvalidInput("(1, ..., 1) must lie in the row space of A".into()));
    }
    let b = integer_kernel(a);
    let k = b.len();
    if k == 0 {
        return Err(Error::InvalidInput("A has trivial kernel; the discriminant variety is empty".into()));
    }
    let dim = k + d;
    let comps = (0..n)
        .map(|j| {
            let mut lin = LaurentPoly::zero(dim);
            for (l, bl) in b.iter().enumerate() {
                if bl[j] != 0 {
                    lin = lin.add(&LaurentPoly::var(dim, l).scale(&ValuedScalar::from_integer(bl[j])));
                }
            }
            let mut e = vec![0; dim];
            for i in 0..d {
                e[k + i] = a[i][j];
            }
            let mono = monomial_fn(e, ValuedScalar::one());
            RationalFunction::from_poly(lin).mul(&mono)
        })
        .collect::<Vec<_>>();
    if let Some(j) = comps.iter().position(|c| c.is_zero()) {
        return Err(Error::InvalidInput(format!("kernel vanishes on coordinate {j}")));
    }
    let mut vars = var_block("l", k);
    vars.extend(var_block("s", d));
    Ok(RationalMap::new(dim, comps)?.with_var_names(vars).with_name("horn"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::toric::toric_pushforward;
    use crate::laurent::{parse_map, parse_poly, substitute};

    fn zero_on_image(poly: &str, vars: &[&str], map: &RationalMap) -> bool {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let p = parse_poly(poly, &names).unwrap();
        substitute(&p, map.components()).unwrap().is_zero()
    }

    #[test]
    fn rank_two_minors_vanish() {
        let m = rank2_param(3, 3).unwrap();
        let det = "a*e*k - a*f*h - b*d*k + b*f*g + c*d*h - c*e*g";
        assert!(zero_on_image(det, &["a", "b", "c", "d", "e", "f", "g", "h", "k"], &m));
        let val = m.eval(&(1..=12).map(ValuedScalar::from_integer).collect::<Vec<_>>()).unwrap();
        // entry (2,3) = u2 v3 (x2 + y3) = 2 * 9 * (5 + 12)
        assert_eq!(val[5], ValuedScalar::from_integer(2 * 9 * 17));
    }

    #[test]
    fn plucker_relation_vanishes() {
        let g = grassmannian2_param(4).unwrap();
        assert_eq!(g.codomain_dim(), 6);
        assert!(zero_on_image("p12*p34 - p13*p24 + p14*p23", &["p12", "p13", "p14", "p23", "p24", "p34"], &g));
    }

    #[test]
    fn horn_quadratic_discriminant() {
        let a = vec![vec![1, 1, 1], vec![0, 1, 2]];
        let b = integer_kernel(&a);
        assert!(b == vec![vec![1, -2, 1]] || b == vec![vec![-1, 2, -1]]);
        let h = horn_param(&a).unwrap();
        assert!(zero_on_image("b^2 - 4*a*c", &["a", "b", "c"], &h));
        assert!(horn_param(&[vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn yu_yuster_of_a_plane() {
        let basis: Vec<Vec<ValuedScalar>> =
            vec![vec![1, -1, 0].into_iter().map(ValuedScalar::from_integer).collect(), vec![0, 1, -1].into_iter().map(ValuedScalar::from_integer).collect()];
        let y = yu_yuster_param(&basis, 3).unwrap();
        assert_eq!(y.domain_dim(), 3);
        assert!(zero_on_image("a + b + c", &["a", "b", "c"], &y));
    }

    #[test]
    fn curve_factorisations() {
        let line = parse_map("vars: x\nx\nx + 1").unwrap();
        let f = curve_factorization(&line).unwrap();
        assert_eq!(f.roots, vec![ValuedScalar::zero(), ValuedScalar::from_integer(-1)]);
        assert_eq!(f.exponents, vec![vec![1, 0], vec![0, 1]]);
        let back = toric_pushforward(&f.affine_map(), &f.monomial_map(), &f.torus_point()).unwrap();
        assert!(back.equivalent(&line));

        let g = parse_map("vars: x\nx^2*(x - 1)\n1/(x - 1)\n(3*x^2 + 3)/(2*x - t)").unwrap();
        let f = curve_factorization(&g).unwrap();
        assert_eq!(f.exponents[0][..2], [2, 1]);
        assert_eq!(f.exponents[1][..2], [0, -1]);
        let back = toric_pushforward(&f.affine_map(), &f.monomial_map(), &f.torus_point()).unwrap();
        assert!(back.equivalent(&g));

        let bad = parse_map("vars: x\nx^2 - 2").unwrap();
        assert!(matches!(curve_factorization(&bad), Err(Error::IrreducibleFactor(_))));
    }
}
