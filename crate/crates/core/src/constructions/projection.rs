//! Birational coordinate projections and horizontality.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFunction, RationalMap};
use crate::polyhedra::{covers, AffineMapQ, PolyhedralComplex};
use crate::scalar::{GaussianRational, Rational, ValuedScalar};
use crate::tropical::{linearity_complex, pl_image, tropicalize_map, TropHypersurface};

/// A coordinate projection `π_I` together with a rational inverse on `X`.
#[derive(Clone, Debug)]
pub struct ProjectionSpec {
    pub label: String,
    pub ambient_dim: usize,
    pub kept: Vec<usize>,
    /// `T^I ⇢ T^n`.
    pub inverse: RationalMap,
}

impl ProjectionSpec {
    pub fn trop_projection(&self) -> AffineMapQ {
        AffineMapQ::coordinate_projection(self.ambient_dim, &self.kept)
    }

    pub fn image(&self) -> Result<PolyhedralComplex> {
        Ok(pl_image(&linearity_complex(&tropicalize_map(&self.inverse)?)?))
    }
}

/// Solves `F = F_1 x_i + F_0 = 0` for `x_i`, giving the inverse of the
/// projection forgetting coordinate `i`.
pub fn projection_inverse_linear(f: &LaurentPoly, i: usize, names: &[String]) -> Result<ProjectionSpec> {
    let n = f.num_vars();
    if i >= n {
        return Err(Error::InvalidInput(format!("no variable {i}")));
    }
    let f1 = f.coefficient_in(i, 1);
    let f0 = f.coefficient_in(i, 0);
    let mut e = vec![0; n];
    e[i] = 1;
    if f1.is_zero() || f1.mul_monomial(&e, &ValuedScalar::one()).add(&f0) != *f {
        return Err(Error::NotLinear(format!("the equation is not of the form F1*{} + F0", names.get(i).map_or("x", |s| s.as_str()))));
    }
    let kept: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let m = n - 1;
    // old variable j ≠ i becomes new variable position of j in `kept`
    let index: Vec<usize> = (0..n)
        .map(|j| {
            if j < i {
                j
            } else if j > i {
                j - 1
            } else {
                usize::MAX
            }
        })
        .collect();
    let restrict = |p: &LaurentPoly| {
        let mut out = LaurentPoly::zero(m);
        for (e, c) in p.terms() {
            let e2: Vec<i64> = (0..n).filter(|&j| j != i).map(|j| e[j]).collect();
            out.add_term(e2, c.clone());
        }
        out
    };
    let solved = RationalFunction::new(restrict(&f0).neg(), restrict(&f1))?;
    if solved.is_zero() {
        return Err(Error::InvalidInput(format!("solving for coordinate {i} gives 0, outside the torus")));
    }
    let comps = (0..n).map(|j| if j == i { solved.clone() } else { RationalFunction::var(m, index[j]) }).collect();
    let vars: Vec<String> = kept.iter().map(|&j| names.get(j).cloned().unwrap_or_else(|| format!("x{j}"))).collect();
    let label = format!("drop {}", names.get(i).cloned().unwrap_or_else(|| format!("x{i}")));
    let inverse = RationalMap::new(m, comps)?.with_var_names(vars).with_name(&label);
    Ok(ProjectionSpec { label, ambient_dim: n, kept, inverse })
}

fn random_gaussian<R: Rng>(rng: &mut R) -> ValuedScalar {
    loop {
        let re = Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=7));
        let im = Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=7));
        let g = ValuedScalar::from_gaussian(GaussianRational::new(re, im));
        if !g.is_zero() {
            return g;
        }
    }
}

/// Checks `π(inverse(y)) = y` and `F(inverse(y)) = 0` at random points.
pub fn verify_projection_spec<R: Rng>(f: &LaurentPoly, spec: &ProjectionSpec, samples: usize, rng: &mut R) -> Result<()> {
    let mut checked = 0;
    let mut attempts = 0;
    while checked < samples {
        attempts += 1;
        if attempts > 20 * samples + 20 {
            return Err(Error::Verification(format!("{}: inverse undefined at every sampled point", spec.label)));
        }
        let y: Vec<ValuedScalar> = (0..spec.inverse.domain_dim()).map(|_| random_gaussian(rng)).collect();
        let Ok(x) = spec.inverse.eval(&y) else { continue };
        let projected: Vec<ValuedScalar> = spec.kept.iter().map(|&j| x[j].clone()).collect();
        if projected != y {
            return Err(Error::Verification(format!("{}: projection of the inverse is not the identity", spec.label)));
        }
        if !f.eval(&x)?.is_zero() {
            return Err(Error::Verification(format!("{}: inverse leaves the hypersurface", spec.label)));
        }
        checked += 1;
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CellHorizontality {
    pub cell: usize,
    pub label: Option<String>,
    /// Indices of specs for which the cell is horizontal.
    pub horizontal_for: Vec<usize>,
    /// Whether `covers()` confirmed the cell inside each such spec's image.
    pub confirmed: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HorizontalReport {
    pub specs: Vec<String>,
    pub cells: Vec<CellHorizontality>,
    /// Cells horizontal for no spec.
    pub uncovered: Vec<usize>,
    pub all_confirmed: bool,
}

/// For every maximal cell, the specs it is horizontal for, each confirmed by
/// checking that the cell lies in the image of that spec's inverse.
pub fn horizontal_cover_report(x: &TropHypersurface, specs: &[ProjectionSpec]) -> Result<HorizontalReport> {
    let images = specs.iter().map(|s| s.image()).collect::<Result<Vec<_>>>()?;
    let n = x.complex.ambient_dim();
    let cells: Vec<CellHorizontality> = x
        .complex
        .cells()
        .par_iter()
        .enumerate()
        .map(|(k, cell)| {
            let mut horizontal_for = Vec::new();
            let mut confirmed = Vec::new();
            for (s, spec) in specs.iter().enumerate() {
                if cell.is_horizontal(&spec.trop_projection()) {
                    horizontal_for.push(s);
                    let target = PolyhedralComplex::from_cells(n, vec![cell.clone()]).expect("same dim");
                    confirmed.push(covers(&target, &images[s]).map(|r| r.covered).unwrap_or(false));
                }
            }
            CellHorizontality { cell: k, label: x.complex.label(k).map(str::to_string), horizontal_for, confirmed }
        })
        .collect();
    let uncovered = cells.iter().filter(|c| c.horizontal_for.is_empty()).map(|c| c.cell).collect();
    let all_confirmed = cells.iter().all(|c| c.confirmed.iter().all(|&b| b));
    Ok(HorizontalReport { specs: specs.iter().map(|s| s.label.clone()).collect(), cells, uncovered, all_confirmed })
}

/// Union of the horizontal cells of `x` for one spec.
pub fn horizontal_cells(x: &TropHypersurface, spec: &ProjectionSpec) -> PolyhedralComplex {
    let mut out = PolyhedralComplex::new(x.complex.ambient_dim());
    for (c, l) in x.complex.iter() {
        if c.is_horizontal(&spec.trop_projection()) {
            out.push(c.clone(), l.map(str::to_string)).expect("same dim");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::tropical::{trop_hypersurface, tropicalize_poly};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn two_by_two_inverse() {
        let vars = names(&["m11", "m12", "m21", "m22"]);
        let f = parse_poly("m11*m22 - m12*m21", &vars).unwrap();
        let spec = projection_inverse_linear(&f, 3, &vars).unwrap();
        assert_eq!(spec.inverse.fmt_components()[3], "m11^-1*m12*m21");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        verify_projection_spec(&f, &spec, 5, &mut rng).unwrap();
        let x = trop_hypersurface(&tropicalize_poly(&f).unwrap());
        let rep = horizontal_cover_report(&x, &[spec]).unwrap();
        assert!(rep.uncovered.is_empty());
        assert!(rep.all_confirmed);
    }

    #[test]
    fn nonlinear_variable_is_rejected() {
        let vars = names(&["x", "y"]);
        let f = parse_poly("x^2 + y + 1", &vars).unwrap();
        assert!(matches!(projection_inverse_linear(&f, 0, &vars), Err(Error::NotLinear(_))));
        assert!(projection_inverse_linear(&f, 1, &vars).is_ok());
    }

    #[test]
    fn broken_inverse_fails_verification() {
        let vars = names(&["x", "y"]);
        let f = parse_poly("x - y + 1", &vars).unwrap();
        let mut spec = projection_inverse_linear(&f, 1, &vars).unwrap();
        spec.inverse = crate::laurent::parse_map("vars: x\nx\nx + 2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(matches!(verify_projection_spec(&f, &spec, 5, &mut rng), Err(Error::Verification(_))));
    }
}
