//! The Combination Lemma: one reparameterisation whose tropical image
//! contains those of two given ones.

use super::toric::fresh;
use crate::error::{Error, Result};
use crate::laurent::{dehomogenize_map, homogenize_map, min_homogenization_degree, RationalFunction, RationalMap};

/// Degrees used by [`combine_reparams`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CombineDegrees {
    pub d: i64,
    pub e: i64,
}

/// `α(u, ṽ) = ã(1, u, ṽ)_{1..} / ã(1, u, ṽ)_0` where `ã(ũ, ṽ) = α̃_1(ũ) + α̃_2(ṽ)`
/// and `α̃_i` are degree-`e` homogenisations. The result maps
/// `T^{p_1 + p_2 + 1} ⇢ T^m`.
pub fn combine_reparams(phi: &RationalMap, alpha1: &RationalMap, alpha2: &RationalMap) -> Result<(RationalMap, CombineDegrees)> {
    let m = phi.domain_dim();
    for (k, a) in [alpha1, alpha2].iter().enumerate() {
        if a.codomain_dim() != m {
            return Err(Error::DimensionMismatch(format!("alpha{} lands in T^{}, map starts in T^{m}", k + 1, a.codomain_dim())));
        }
    }
    let d = min_homogenization_degree(phi).max(1);
    let e = min_homogenization_degree(alpha1).max(min_homogenization_degree(alpha2)).max(1);
    let h1 = homogenize_map(alpha1, e)?;
    let h2 = homogenize_map(alpha2, e)?;
    let (p1, p2) = (h1.domain_dim(), h2.domain_dim());
    let total = p1 + p2;
    let left: Vec<usize> = (0..p1).collect();
    let right: Vec<usize> = (p1..total).collect();
    let lift = |c: &RationalFunction, map: &[usize]| RationalFunction::new(c.num().remap_vars(total, map), c.den().remap_vars(total, map)).expect("nonzero");
    let comps: Vec<RationalFunction> = h1.components().iter().zip(h2.components()).map(|(a, b)| lift(a, &left).add(&lift(b, &right))).collect();
    if let Some(k) = comps.iter().position(|c| c.is_zero()) {
        return Err(Error::InvalidInput(format!("component {k} of the summed homogenisation vanishes")));
    }
    let mut vars: Vec<String> = h1.vars().to_vec();
    for v in h2.vars() {
        let name = fresh(v, &vars);
        vars.push(name);
    }
    let summed = RationalMap::new(total, comps)?.with_var_names(vars);
    Ok((dehomogenize_map(&summed)?.with_name("combined"), CombineDegrees { d, e }))
}
