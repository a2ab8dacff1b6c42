//! Certificates that `Trop(φ ∘ α)` is injective and affine-linear near a
//! weight vector.
//!
//! A weight `σ = base + ε_1 δ_1 + ε_2 δ_2 + …` with infinitesimals
//! `ε_1 ≫ ε_2 ≫ … > 0` is compared lexicographically: real part first, then
//! the pairings with `δ_1, δ_2, …`. With the `δ_k` spanning `R^d` no two
//! distinct exponents tie, which is the operational form of "entries
//! linearly independent over the value group".

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{compose_maps, ExponentVec, LaurentPoly, RationalMap};
use crate::linalg::{dot, rank, to_rational_matrix};
use crate::polyhedra::{AffineMapQ, LinConstraint, Polyhedron};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightPoint {
    pub base: Vec<Rational>,
    /// Infinitesimal directions in decreasing order of size.
    pub directions: Vec<Vec<Rational>>,
}

impl WeightPoint {
    /// `base` perturbed by `ε_1 e_1 + … + ε_d e_d`.
    pub fn generic(base: Vec<Rational>) -> Self {
        let d = base.len();
        let directions = (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
        WeightPoint { base, directions }
    }

    pub fn exact(base: Vec<Rational>) -> Self {
        WeightPoint { base, directions: Vec::new() }
    }

    fn key(&self, v: &Rational, e: &[i64]) -> Vec<Rational> {
        let eq: Vec<Rational> = e.iter().map(|&x| Rational::from_integer(x)).collect();
        let mut k = vec![v + &dot(&eq, &self.base)];
        k.extend(self.directions.iter().map(|d| dot(&eq, d)));
        k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermTie {
    pub component: usize,
    pub part: &'static str,
    pub exponents: Vec<ExponentVec>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalLinearityCertificate {
    pub weight: WeightPoint,
    /// Row `i` is the exponent difference of the minimising terms of
    /// numerator and denominator of component `i`.
    pub differential: Vec<Vec<i64>>,
    pub offset: Vec<Rational>,
    pub rank: usize,
    pub image_point: Vec<Rational>,
    /// Where the same terms stay minimal.
    pub region: Polyhedron,
    pub ties: Vec<TermTie>,
    pub valid: bool,
}

impl LocalLinearityCertificate {
    pub fn affine_map(&self) -> AffineMapQ {
        AffineMapQ::new(to_rational_matrix(&self.differential), self.offset.clone())
    }

    /// Image of `region ∩ cone` under the affine map.
    pub fn image_of(&self, cone: &Polyhedron) -> Result<Polyhedron> {
        Ok(self.region.intersect(cone)?.linear_image(&self.affine_map()))
    }
}

struct Chosen {
    exp: ExponentVec,
    val: Rational,
    others: Vec<(ExponentVec, Rational)>,
}

fn choose(p: &LaurentPoly, w: &WeightPoint, component: usize, part: &'static str, ties: &mut Vec<TermTie>) -> Chosen {
    let terms: Vec<(ExponentVec, Rational)> = p.terms().map(|(e, c)| (e.clone(), c.valuation().finite().expect("nonzero").clone())).collect();
    let keys: Vec<Vec<Rational>> = terms.iter().map(|(e, v)| w.key(v, e)).collect();
    let best = (0..terms.len()).min_by(|&a, &b| keys[a].cmp(&keys[b])).expect("nonzero polynomial");
    let tied: Vec<ExponentVec> = (0..terms.len()).filter(|&k| keys[k] == keys[best]).map(|k| terms[k].0.clone()).collect();
    if tied.len() > 1 {
        ties.push(TermTie { component, part, exponents: tied });
    }
    let others = terms.iter().enumerate().filter(|(k, _)| *k != best).map(|(_, t)| t.clone()).collect();
    Chosen { exp: terms[best].0.clone(), val: terms[best].1.clone(), others }
}

fn dominance(d: usize, chosen: &Chosen) -> Vec<LinConstraint> {
    // v* + b*·σ ≤ v + b·σ  ⇔  (b* − b)·σ ≤ v − v*
    chosen
        .others
        .iter()
        .map(|(e, v)| {
            let normal = (0..d).map(|j| Rational::from_integer(chosen.exp[j] - e[j])).collect();
            LinConstraint::le(normal, v - &chosen.val)
        })
        .collect()
}

/// Composes `φ ∘ α` and certifies local linearity at `weight`.
pub fn local_linearity_check(phi: &RationalMap, alpha: &RationalMap, weight: &WeightPoint) -> Result<LocalLinearityCertificate> {
    let d = alpha.domain_dim();
    if weight.base.len() != d || weight.directions.iter().any(|v| v.len() != d) {
        return Err(Error::DimensionMismatch(format!("weights must live in R^{d}")));
    }
    let comp = compose_maps(phi, alpha)?;
    let mut ties = Vec::new();
    let mut differential = Vec::new();
    let mut offset = Vec::new();
    let mut constraints = Vec::new();
    for (i, c) in comp.components().iter().enumerate() {
        let top = choose(c.num(), weight, i, "num", &mut ties);
        let bottom = choose(c.den(), weight, i, "den", &mut ties);
        differential.push((0..d).map(|j| top.exp[j] - bottom.exp[j]).collect::<Vec<i64>>());
        offset.push(&top.val - &bottom.val);
        constraints.extend(dominance(d, &top));
        constraints.extend(dominance(d, &bottom));
    }
    let region = Polyhedron::new(d, constraints)?;
    let rank = rank(&to_rational_matrix(&differential));
    let map = AffineMapQ::new(to_rational_matrix(&differential), offset.clone());
    let image_point = map.apply(&weight.base);
    let valid = ties.is_empty() && rank == d && region.is_full_dimensional();
    Ok(LocalLinearityCertificate { weight: weight.clone(), differential, offset, rank, image_point, region, ties, valid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_map;
    use crate::scalar::q;
    use crate::tropical::{trop_eval_map, tropicalize_map};

    #[test]
    fn line_on_both_sides() {
        let phi = parse_map("vars: x\nx\nx + 1").unwrap();
        let alpha = RationalMap::identity(1);
        let east = local_linearity_check(&phi, &alpha, &WeightPoint::generic(vec![q(2, 1)])).unwrap();
        assert!(east.valid);
        assert_eq!(east.differential, vec![vec![1], vec![0]]);
        assert_eq!(east.image_point, vec![q(2, 1), q(0, 1)]);
        let west = local_linearity_check(&phi, &alpha, &WeightPoint::generic(vec![q(-1, 1)])).unwrap();
        assert_eq!(west.differential, vec![vec![1], vec![1]]);
        assert_eq!(west.image_point, vec![q(-1, 1), q(-1, 1)]);
        // at 0 the perturbation picks the positive side
        let at0 = local_linearity_check(&phi, &alpha, &WeightPoint::generic(vec![q(0, 1)])).unwrap();
        assert!(at0.valid);
        assert_eq!(at0.differential, vec![vec![1], vec![0]]);
        let exact0 = local_linearity_check(&phi, &alpha, &WeightPoint::exact(vec![q(0, 1)])).unwrap();
        assert!(!exact0.valid);
        assert_eq!(exact0.ties.len(), 1);
    }

    #[test]
    fn certificate_matches_direct_evaluation() {
        let phi = parse_map("vars: x, y\nx + y\nx*y + t\n1/(x - y)").unwrap();
        let alpha = parse_map("vars: a, b\na^2*b\na + t*b^-1").unwrap();
        let cert = local_linearity_check(&phi, &alpha, &WeightPoint::generic(vec![q(1, 3), q(-1, 2)])).unwrap();
        let direct = tropicalize_map(&compose_maps(&phi, &alpha).unwrap()).unwrap();
        let interior = cert.region.relative_interior_point().unwrap();
        assert_eq!(cert.affine_map().apply(&interior), trop_eval_map(&direct, &interior));
    }
}
