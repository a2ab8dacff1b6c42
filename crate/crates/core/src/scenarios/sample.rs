//! Seeded sampling and the pointwise checks built on it.

use rand::Rng;

use super::report::ContainmentCheck;
use crate::laurent::RationalMap;
use crate::linalg::rank;
use crate::scalar::{GaussianRational, Rational, ValuedScalar};
use crate::tropical::{trop_eval_map, TropPoly, TropRational};

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-12..=12), rng.gen_range(1..=4))
}

pub fn random_point<R: Rng>(rng: &mut R, d: usize) -> Vec<Rational> {
    (0..d).map(|_| random_rational(rng)).collect()
}

pub fn random_gaussian<R: Rng>(rng: &mut R) -> ValuedScalar {
    loop {
        let re = Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let im = Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let g = ValuedScalar::from_gaussian(GaussianRational::new(re, im));
        if !g.is_zero() {
            return g;
        }
    }
}

/// Nonzero integer in `[-b, b]`.
pub fn random_nonzero<R: Rng>(rng: &mut R, b: i64) -> i64 {
    let x = rng.gen_range(1..=b);
    if rng.gen_bool(0.5) {
        x
    } else {
        -x
    }
}

/// Whether the minimum of every polynomial is attained at least twice.
pub fn in_corner_loci(polys: &[TropPoly], xi: &[Rational]) -> bool {
    polys.iter().all(|p| p.trop_eval(xi).1.len() >= 2)
}

/// Evaluates `Trop(φ)` at `count` random points and records those landing
/// outside the variety.
pub fn containment<R, F>(map: &str, variety: &str, t: &[TropRational], member: F, count: usize, rng: &mut R) -> ContainmentCheck
where
    R: Rng,
    F: Fn(&[Rational]) -> bool,
{
    let d = t.first().map_or(0, |c| c.num_vars());
    let failures = (0..count).map(|_| random_point(rng, d)).filter(|xi| !member(&trop_eval_map(t, xi))).collect();
    ContainmentCheck { map: map.into(), variety: variety.into(), points: count, failures }
}

/// Rank of the Jacobian at a random point of the torus, a screen for
/// dominance onto a variety of that dimension.
pub fn jacobian_rank<R: Rng>(phi: &RationalMap, rng: &mut R) -> Option<usize> {
    let jac = phi.jacobian();
    for _ in 0..20 {
        let x: Vec<ValuedScalar> = (0..phi.domain_dim()).map(|_| random_gaussian(rng)).collect();
        let rows: Option<Vec<Vec<ValuedScalar>>> = jac.iter().map(|row| row.iter().map(|f| f.eval(&x).ok()).collect()).collect();
        if let Some(rows) = rows {
            return Some(rank(&rows));
        }
    }
    None
}
