//! Piecewise-linear structure of `Trop(φ)` and its image.

use rayon::prelude::*;

use super::trop_poly::{trop_eval_map, TropPoly, TropRational};
use crate::error::{Error, Result};
use crate::laurent::ExponentVec;
use crate::polyhedra::{AffineMapQ, PolyhedralComplex, Polyhedron};
use crate::scalar::Rational;

/// A piecewise-affine map given by full-dimensional cells covering the domain
/// and an affine map on each.
#[derive(Clone, Debug)]
pub struct PLMap {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub cells: Vec<(Polyhedron, AffineMapQ)>,
}

impl PLMap {
    /// Evaluates through the first cell containing `xi`.
    pub fn eval(&self, xi: &[Rational]) -> Option<Vec<Rational>> {
        self.cells.iter().find(|(p, _)| p.contains(xi)).map(|(_, a)| a.apply(xi))
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }
}

/// Enumerates the regions on which every numerator and denominator has a
/// fixed minimising term, keeping the full-dimensional ones.
pub fn linearity_complex(t: &[TropRational]) -> Result<PLMap> {
    let m = match t.first() {
        Some(c) => c.num_vars(),
        None => return Err(Error::InvalidInput("map without components".into())),
    };
    if t.iter().any(|c| c.num_vars() != m || c.minus.num_vars() != m) {
        return Err(Error::DimensionMismatch("components in different numbers of variables".into()));
    }
    // distinct tropical polynomials; shared denominators branch once
    let mut polys: Vec<TropPoly> = Vec::new();
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for c in t {
        let mut ab = [0usize; 2];
        for (slot, p) in ab.iter_mut().zip([&c.plus, &c.minus]) {
            *slot = match polys.iter().position(|q| q == p) {
                Some(k) => k,
                None => {
                    polys.push(p.clone());
                    polys.len() - 1
                }
            };
        }
        slots.push((ab[0], ab[1]));
    }
    let mut order: Vec<usize> = (0..polys.len()).collect();
    order.sort_by_key(|&k| polys[k].num_terms());
    let term_lists: Vec<Vec<(ExponentVec, Rational)>> = polys.iter().map(|p| p.term_list()).collect();

    // terms that are minimal only on a lower-dimensional set never matter;
    // the others keep their irredundant description
    let regions: Vec<Vec<Option<Polyhedron>>> = polys
        .par_iter()
        .map(|p| {
            if p.num_terms() == 1 {
                return vec![Some(Polyhedron::universe(m))];
            }
            p.term_list().iter().map(|(e, _)| Some(p.argmin_region(e)).filter(|r| r.is_full_dimensional()).map(|r| r.minimized())).collect()
        })
        .collect();

    let first = order[0];
    let start = Polyhedron::universe(m);
    let branches: Vec<Vec<(Polyhedron, Vec<usize>)>> = (0..term_lists[first].len())
        .into_par_iter()
        .map(|k| {
            let mut out = Vec::new();
            let mut choice = vec![usize::MAX; polys.len()];
            let Some(region) = &regions[first][k] else { return out };
            let p = start.intersect(region).expect("same dim");
            if let Some(w) = p.interior_point() {
                choice[first] = k;
                dfs(&order, 1, p, w, &mut choice, &regions, &mut out);
            }
            out
        })
        .collect();

    let mut cells = Vec::new();
    for (p, choice) in branches.into_iter().flatten() {
        let mut matrix = Vec::with_capacity(t.len());
        let mut offset = Vec::with_capacity(t.len());
        for &(a, b) in &slots {
            let (ea, va) = &term_lists[a][choice[a]];
            let (eb, vb) = &term_lists[b][choice[b]];
            matrix.push(ea.iter().zip(eb).map(|(x, y)| Rational::from_integer(x - y)).collect());
            offset.push(va - vb);
        }
        cells.push((p, AffineMapQ::new(matrix, offset)));
    }
    Ok(PLMap { domain_dim: m, codomain_dim: t.len(), cells })
}

/// `witness` is a strict interior point of `cell`; a region containing it
/// strictly needs no LP.
fn dfs(
    order: &[usize],
    level: usize,
    cell: Polyhedron,
    witness: Vec<Rational>,
    choice: &mut Vec<usize>,
    regions: &[Vec<Option<Polyhedron>>],
    out: &mut Vec<(Polyhedron, Vec<usize>)>,
) {
    if level == order.len() {
        out.push((cell, choice.clone()));
        return;
    }
    let k = order[level];
    if regions[k].len() == 1 {
        choice[k] = 0;
        dfs(order, level + 1, cell, witness, choice, regions, out);
        return;
    }
    for (j, r) in regions[k].iter().enumerate() {
        let Some(r) = r else { continue };
        let next = cell.intersect(r).expect("same dim");
        let w = if r.strictly_contains(&witness) { Some(witness.clone()) } else { next.interior_point() };
        if let Some(w) = w {
            choice[k] = j;
            dfs(order, level + 1, next, w, choice, regions, out);
        }
    }
}

/// `im Trop(φ)` as the union of the images of the linearity cells.
pub fn pl_image(map: &PLMap) -> PolyhedralComplex {
    let cells: Vec<Polyhedron> = map.cells.par_iter().map(|(p, a)| p.linear_image(a)).collect();
    let mut out = PolyhedralComplex::new(map.codomain_dim);
    for (k, c) in cells.into_iter().enumerate() {
        out.push(c, Some(format!("cell {k}"))).expect("same dim");
    }
    out
}

/// Checks the affine pieces against direct evaluation at the given points.
pub fn check_consistency(map: &PLMap, t: &[TropRational], points: &[Vec<Rational>]) -> bool {
    points.iter().all(|x| match map.eval(x) {
        Some(v) => v == trop_eval_map(t, x),
        None => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_map;
    use crate::polyhedra::covers;
    use crate::scalar::q;
    use crate::tropical::trop_poly::tropicalize_map;

    #[test]
    fn line_map_cells() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        let t = tropicalize_map(&phi).unwrap();
        let pl = linearity_complex(&t).unwrap();
        assert_eq!(pl.num_cells(), 2);
        assert_eq!(pl.eval(&[q(2, 1)]).unwrap(), vec![q(2, 1), q(0, 1)]);
        assert_eq!(pl.eval(&[q(-2, 1)]).unwrap(), vec![q(-2, 1), q(-2, 1)]);
        let img = pl_image(&pl);
        assert!(img.membership(&[q(5, 1), q(0, 1)]));
        assert!(img.membership(&[q(-5, 1), q(-5, 1)]));
        assert!(!img.membership(&[q(0, 1), q(5, 1)]));
    }

    #[test]
    fn monomial_map_is_one_cell() {
        let phi = parse_map("vars: x, y\nx^2*y\nx*y^-1").unwrap();
        let pl = linearity_complex(&tropicalize_map(&phi).unwrap()).unwrap();
        assert_eq!(pl.num_cells(), 1);
        assert_eq!(pl_image(&pl).cells()[0].dimension(), 2);
    }

    #[test]
    fn psi_cells_are_consistent() {
        let psi = parse_map("vars: s, u\n(1 + s)/(u - s)\n(1 + u)/(u - s)").unwrap();
        let t = tropicalize_map(&psi).unwrap();
        let pl = linearity_complex(&t).unwrap();
        let pts: Vec<Vec<Rational>> = (-3..=3).flat_map(|a| (-3..=3).map(move |b| vec![q(a, 2), q(b, 3)])).collect();
        assert!(check_consistency(&pl, &t, &pts));
        // the image is the tripod
        let img = pl_image(&pl);
        let tripod = crate::tropical::hypersurface::trop_hypersurface(
            &crate::tropical::trop_poly::tropicalize_poly(&crate::laurent::parse_poly("x - y + 1", &["x".into(), "y".into()]).unwrap()).unwrap(),
        )
        .complex;
        assert!(covers(&tripod, &img).unwrap().covered);
        assert!(covers(&img, &tripod).unwrap().covered);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::laurent::parse_map;
    use crate::tropical::{trop_eval_map, tropicalize_map};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn image_contains_every_value(a in -3i64..=3, b in 1i64..=3, c in -2i64..=2, xi in prop::collection::vec(-6i64..=6, 2)) {
            let src = format!("vars: s, u\ns + ({a})*t^{b}*u\n(s*u + {c})/(1 + u^2)");
            let t = tropicalize_map(&parse_map(&src).unwrap()).unwrap();
            let pl = linearity_complex(&t).unwrap();
            let xi: Vec<Rational> = xi.iter().map(|&x| Rational::from_integer(x)).collect();
            let value = trop_eval_map(&t, &xi);
            prop_assert!(pl.cells.iter().any(|(cell, aff)| cell.contains(&xi) && aff.apply(&xi) == value));
            prop_assert!(pl_image(&pl).membership(&value));
        }
    }
}
