//! Newton–Puiseux root expansions of univariate polynomials over `K`.

use serde::Serialize;

use super::roots::gaussian_roots;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{GaussianRational, PuiseuxPoly, Rational, ValuedScalar};

/// A root truncated to its first terms. `exact` means the expansion is the
/// root itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootExpansion {
    #[serde(serialize_with = "ser_display")]
    pub series: PuiseuxPoly,
    pub exact: bool,
}

fn ser_display<S: serde::Serializer>(p: &PuiseuxPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Coefficients `a_0, …, a_d` of a polynomial in one variable, cleared of
/// denominators so they are Puiseux polynomials.
pub fn upoly_coefficients(p: &LaurentPoly) -> Result<Vec<PuiseuxPoly>> {
    if p.num_vars() != 1 {
        return Err(Error::InvalidInput(format!("expected a polynomial in one variable, got {}", p.num_vars())));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("no roots to expand".into()));
    }
    let lo = p.min_exponents()[0];
    let hi = p.max_exponents()[0];
    let mut den = PuiseuxPoly::one();
    for (_, c) in p.terms() {
        if !c.denom().is_one() {
            den = den.mul(c.denom());
        }
    }
    let mut out = vec![PuiseuxPoly::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        let scaled = c.mul(&ValuedScalar::from_poly(den.clone()));
        if !scaled.is_polynomial() {
            return Err(Error::InvalidInput("coefficient denominators do not clear".into()));
        }
        out[(e[0] - lo) as usize] = scaled.numer().clone();
    }
    Ok(out)
}

fn val(a: &PuiseuxPoly) -> &Rational {
    a.min_exp().expect("nonzero coefficient")
}

/// Coefficients of `P(c + S)`.
fn taylor_shift(p: &[PuiseuxPoly], c: &PuiseuxPoly) -> Vec<PuiseuxPoly> {
    let d = p.len() - 1;
    let mut out = vec![PuiseuxPoly::zero(); d + 1];
    // Horner in the ring of polynomials in S
    for a in p.iter().rev() {
        let mut next = vec![PuiseuxPoly::zero(); d + 1];
        for j in 0..=d {
            if out[j].is_zero() {
                continue;
            }
            next[j] = next[j].add(&out[j].mul(c));
            if j < d {
                next[j + 1] = next[j + 1].add(&out[j]);
            }
        }
        next[0] = next[0].add(a);
        out = next;
    }
    out
}

/// Lower convex hull of `(i, v(a_i))` as consecutive index pairs.
fn lower_hull(p: &[PuiseuxPoly]) -> Vec<(usize, usize)> {
    let pts: Vec<(usize, Rational)> = p.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, val(a).clone())).collect();
    let mut hull: Vec<(usize, Rational)> = Vec::new();
    for pt in pts {
        while hull.len() >= 2 {
            let (i1, v1) = &hull[hull.len() - 2];
            let (i2, v2) = &hull[hull.len() - 1];
            // drop the middle point unless it lies strictly below the chord
            let lhs = (v2 - v1) * Rational::from_integer((pt.0 - i1) as i64);
            let rhs = (&pt.1 - v1) * Rational::from_integer((i2 - i1) as i64);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull.windows(2).map(|w| (w[0].0, w[1].0)).collect()
}

struct Expander {
    out: Vec<RootExpansion>,
}

impl Expander {
    fn expand(&mut self, p: Vec<PuiseuxPoly>, lower: Option<&Rational>, count: usize, terms_left: usize, prefix: PuiseuxPoly) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let zeros = p.iter().take_while(|a| a.is_zero()).count();
        if terms_left == 0 {
            let exact = zeros >= count;
            self.out.extend(std::iter::repeat_n(RootExpansion { series: prefix, exact }, count));
            return Ok(());
        }
        // S = 0 is an exact root of multiplicity `zeros`
        let exact_here = zeros.min(count);
        self.out.extend(std::iter::repeat_n(RootExpansion { series: prefix.clone(), exact: true }, exact_here));
        let p: Vec<PuiseuxPoly> = p[zeros..].to_vec();
        let mut remaining = count - exact_here;
        for (i0, i1) in lower_hull(&p) {
            if remaining == 0 {
                break;
            }
            let q = (val(&p[i0]) - val(&p[i1])) / Rational::from_integer((i1 - i0) as i64);
            if lower.is_some_and(|l| q <= *l) {
                continue;
            }
            let base = val(&p[i0]) + &(&q * &Rational::from_integer(i0 as i64));
            let residual: Vec<GaussianRational> = (i0..=i1)
                .map(|i| {
                    if p[i].is_zero() {
                        return GaussianRational::zero();
                    }
                    let here = val(&p[i]) + &(&q * &Rational::from_integer(i as i64));
                    if here == base {
                        p[i].leading_term().expect("nonzero").1.clone()
                    } else {
                        GaussianRational::zero()
                    }
                })
                .collect();
            let (roots, rest) = gaussian_roots(&residual);
            if rest.len() > 1 {
                let shown: Vec<String> = residual.iter().map(|c| c.to_string()).collect();
                return Err(Error::RootOutsideField(format!("residual polynomial with coefficients [{}] does not split over Q(i)", shown.join(", "))));
            }
            for (c, mu) in roots.into_iter().filter(|(c, _)| !c.is_zero()) {
                let term = PuiseuxPoly::monomial(c, q.clone());
                let shifted = taylor_shift(&p, &term);
                let take = mu.min(remaining);
                self.expand(shifted, Some(&q), take, terms_left - 1, prefix.add(&term))?;
                remaining -= take;
            }
        }
        Ok(())
    }
}

/// All roots of `Σ a_i S^i` with multiplicity, each to `k` terms.
///
/// The polynomial is first depressed, `S = U − a_{d−1}/(d a_d)`; the roots in
/// `U` are expanded further by the number of terms of the shift so that the
/// first `k` terms of `S` are exact.
pub fn puiseux_roots(p: &[PuiseuxPoly], k: usize) -> Result<Vec<RootExpansion>> {
    let mut p = p.to_vec();
    while p.len() > 1 && p.last().is_some_and(|a| a.is_zero()) {
        p.pop();
    }
    let d = p.len() - 1;
    if d == 0 {
        return if p[0].is_zero() { Err(Error::ZeroPolynomial("every value is a root".into())) } else { Ok(Vec::new()) };
    }
    let (lead_exp, lead_c) = {
        let ad = &p[d];
        if !ad.is_monomial() {
            return Err(Error::InvalidInput("leading coefficient must be a unit (a single term)".into()));
        }
        let (e, c) = ad.leading_term().expect("nonzero");
        (e.clone(), c.clone())
    };
    let shift = if d >= 2 && !p[d - 1].is_zero() {
        p[d - 1].div_monomial(&(&lead_c * &GaussianRational::from_integer(d as i64)), &lead_exp)?
    } else {
        PuiseuxPoly::zero()
    };
    let r = shift.num_terms();
    let depressed = if r > 0 { taylor_shift(&p, &shift.neg()) } else { p };
    let mut ex = Expander { out: Vec::new() };
    ex.expand(depressed, None, d, k + r, PuiseuxPoly::zero())?;
    Ok(ex
        .out
        .into_iter()
        .map(|u| {
            let s = u.series.sub(&shift);
            let exact = u.exact && s.num_terms() <= k;
            RootExpansion { series: s.first_terms(k), exact }
        })
        .collect())
}

/// `P(s)` for a Puiseux polynomial `s`.
pub fn eval_at(p: &[PuiseuxPoly], s: &PuiseuxPoly) -> PuiseuxPoly {
    p.iter().rev().fold(PuiseuxPoly::zero(), |acc, a| acc.mul(s).add(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn parse(src: &str) -> Vec<PuiseuxPoly> {
        let p = crate::laurent::parse_poly(src, &["S".to_string()]).unwrap();
        upoly_coefficients(&p).unwrap()
    }

    fn series(terms: &[(i64, i64, i64, i64)]) -> PuiseuxPoly {
        // (coefficient num, den, exponent num, den)
        PuiseuxPoly::from_terms(terms.iter().map(|&(a, b, e, f)| (q(e, f), GaussianRational::real(q(a, b)))))
    }

    fn sorted(mut v: Vec<RootExpansion>) -> Vec<PuiseuxPoly> {
        v.sort_by(|a, b| a.series.cmp(&b.series));
        v.into_iter().map(|r| r.series).collect()
    }

    #[test]
    fn square_root_of_t() {
        let roots = puiseux_roots(&parse("S^2 - t"), 3).unwrap();
        assert!(roots.iter().all(|r| r.exact));
        let mut expected = vec![series(&[(1, 1, 1, 2)]), series(&[(-1, 1, 1, 2)])];
        expected.sort();
        assert_eq!(sorted(roots), expected);
    }

    #[test]
    fn quadratic_with_linear_term() {
        let p = parse("S^2 + S + t");
        let mut expected = vec![series(&[(-1, 1, 1, 1), (-1, 1, 2, 1)]), series(&[(-1, 1, 0, 1), (1, 1, 1, 1)])];
        expected.sort();
        assert_eq!(sorted(puiseux_roots(&p, 2).unwrap()), expected);
        let mut expected3 = vec![series(&[(-1, 1, 1, 1), (-1, 1, 2, 1), (-2, 1, 3, 1)]), series(&[(-1, 1, 0, 1), (1, 1, 1, 1), (1, 1, 2, 1)])];
        expected3.sort();
        assert_eq!(sorted(puiseux_roots(&p, 3).unwrap()), expected3);
    }

    #[test]
    fn binomial_series() {
        let p = parse("S^2 - (1 + t)");
        let mut expected = vec![series(&[(1, 1, 0, 1), (1, 2, 1, 1), (-1, 8, 2, 1)]), series(&[(-1, 1, 0, 1), (-1, 2, 1, 1), (1, 8, 2, 1)])];
        expected.sort();
        assert_eq!(sorted(puiseux_roots(&p, 3).unwrap()), expected);
    }

    #[test]
    fn residual_valuations_increase() {
        for src in ["S^2 - t", "S^2 + S + t", "S^2 - (1 + t)", "S^3 - t*S + t^2"] {
            let p = parse(src);
            for root in puiseux_roots(&p, 4).unwrap() {
                let mut last: Option<Rational> = None;
                for k in 1..=root.series.num_terms() {
                    let r = eval_at(&p, &root.series.first_terms(k));
                    if let Some(v) = r.min_exp() {
                        assert!(last.as_ref().map_or(true, |l| v > l), "{src}");
                        last = Some(v.clone());
                    }
                }
            }
        }
    }

    #[test]
    fn irrational_residue_is_reported() {
        assert!(matches!(puiseux_roots(&parse("S^2 - 2"), 2), Err(Error::RootOutsideField(_))));
        // i is available
        assert_eq!(puiseux_roots(&parse("S^2 + t"), 2).unwrap().len(), 2);
    }
}
