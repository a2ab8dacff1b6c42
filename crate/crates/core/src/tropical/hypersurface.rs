//! Corner loci of tropical polynomials.

use super::trop_poly::TropPoly;
use crate::laurent::ExponentVec;
use crate::polyhedra::{LinConstraint, PolyhedralComplex};
use crate::scalar::Rational;

#[derive(Clone, Debug)]
pub struct TropHypersurface {
    pub complex: PolyhedralComplex,
    /// The exponent pair attaining the minimum on each cell.
    pub pair_labels: Vec<(ExponentVec, ExponentVec)>,
}

impl TropHypersurface {
    pub fn membership(&self, xi: &[Rational]) -> bool {
        self.complex.membership(xi)
    }
}

pub(crate) fn fmt_exponent(e: &[i64]) -> String {
    let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// One cell per pair of terms that tie in codimension one while every other
/// term is at least as large; duplicates and non-maximal cells are dropped.
pub fn trop_hypersurface(f: &TropPoly) -> TropHypersurface {
    let m = f.num_vars();
    let terms = f.term_list();
    if terms.len() < 2 {
        log::warn!("tropical polynomial with a single term has empty corner locus");
        return TropHypersurface { complex: PolyhedralComplex::new(m), pair_labels: Vec::new() };
    }
    let mut all = PolyhedralComplex::new(m);
    let mut pairs = Vec::new();
    for i in 0..terms.len() {
        let region = f.argmin_region(&terms[i].0);
        for j in i + 1..terms.len() {
            let (a, va) = &terms[i];
            let (b, vb) = &terms[j];
            let normal = a.iter().zip(b).map(|(x, y)| Rational::from_integer(x - y)).collect();
            let cell = region.with_constraint(LinConstraint::eq(normal, vb - va));
            if cell.dimension() == m as i64 - 1 {
                let label = format!("{}|{}", fmt_exponent(a), fmt_exponent(b));
                all.push(cell, Some(label)).expect("same dim");
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let maximal = all.maximal_cells();
    let pair_labels = maximal
        .labels()
        .iter()
        .map(|l| {
            let k = all.labels().iter().position(|x| x == l).expect("label kept");
            pairs[k].clone()
        })
        .collect();
    TropHypersurface { complex: maximal, pair_labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::scalar::q;
    use crate::tropical::trop_poly::tropicalize_poly;

    fn hyp(src: &str, vars: &[&str]) -> (TropPoly, TropHypersurface) {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let f = tropicalize_poly(&parse_poly(src, &names).unwrap()).unwrap();
        let h = trop_hypersurface(&f);
        (f, h)
    }

    #[test]
    fn tripod() {
        let (_, h) = hyp("x - y + 1", &["x", "y"]);
        assert_eq!(h.complex.len(), 3);
        assert!(h.complex.cells().iter().all(|c| c.dimension() == 1));
        assert!(h.membership(&[q(0, 1), q(1, 1)]));
        assert!(!h.membership(&[q(1, 1), q(2, 1)]));
        assert!(h.membership(&[q(0, 1), q(0, 1)]));
    }

    #[test]
    fn corner_locus_matches_argmin_count() {
        let (f, h) = hyp("x^2 + t*x*y + y^2 + t^2*x + y + t^-1", &["x", "y"]);
        for a in -8..=8 {
            for b in -8..=8 {
                let xi = [q(a, 2), q(b, 2)];
                assert_eq!(h.membership(&xi), f.trop_eval(&xi).1.len() >= 2, "{a} {b}");
            }
        }
    }

    #[test]
    fn determinant_two_by_two() {
        let (_, h) = hyp("a*d - b*c", &["a", "b", "c", "d"]);
        assert_eq!(h.complex.len(), 1);
        assert_eq!(h.complex.cells()[0].dimension(), 3);
        assert!(h.membership(&[q(1, 1), q(2, 1), q(3, 1), q(4, 1)]));
    }

    #[test]
    fn monomial_is_empty() {
        let (_, h) = hyp("3*x*y", &["x", "y"]);
        assert!(h.complex.is_empty());
    }
}
