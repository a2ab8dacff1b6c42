//! Rational curves through an affine line: factor every component over the
//! roots and poles, parameterise the cone over the line with Yu–Yuster, and
//! push forward along the exponent matrix.

use super::sample::containment;
use super::{image, Ctx};
use crate::constructions::{curve_factorization, toric_pushforward, yu_yuster_param, MonomialMap, TorusPoint};
use crate::error::Result;
use crate::laurent::{parse_map, RationalMap};
use crate::linalg::nullspace;
use crate::polyhedra::{covers, AffineMapQ, LinConstraint, PolyhedralComplex};
use crate::scalar::{Rational, ValuedScalar};
use crate::tropical::{trop_linear_space, tropicalize_map};

const CURVES: [(&str, &str); 3] = [
    ("line", "name: line\nvars: x\nx\nx + 1"),
    ("conic-pair", "name: conic-pair\nvars: x\nx^2 - 1\nx/(x + 2)"),
    ("puiseux", "name: puiseux\nvars: x\nx^2 + 1\n(x - t)/x\nt^2*x^-1"),
];

struct Route {
    /// `Trop` of the cone `{(s, x - r s)_r}` over the affine line.
    cone: PolyhedralComplex,
    /// Yu–Yuster parameterisation of that cone.
    cone_param: RationalMap,
    /// `Trop` of the curve, from the cone.
    target: PolyhedralComplex,
    /// The tropically surjective map into the curve.
    map: RationalMap,
}

fn route(phi: &RationalMap) -> Result<(Route, bool)> {
    let fac = curve_factorization(phi)?;
    let s = fac.roots.len();
    let mut basis = vec![Vec::with_capacity(s + 1), vec![ValuedScalar::one(); s + 1]];
    basis[0].push(ValuedScalar::one());
    basis[0].extend(fac.roots.iter().map(ValuedScalar::neg));
    basis[1][0] = ValuedScalar::zero();
    let eqs = nullspace(&basis, s + 1);
    let cone = trop_linear_space(&eqs, s + 1);
    let cone_param = yu_yuster_param(&basis, s + 1)?;

    // {ξ : (0, ξ) ∈ Trop(cone)}, then the exponent map and the shift by v(c)
    let zero_first = LinConstraint::eq((0..=s).map(|k| Rational::from_integer((k == 0) as i64)).collect(), Rational::zero());
    let drop_first = AffineMapQ::coordinate_projection(s + 1, &(1..=s).collect::<Vec<_>>());
    let mut line = PolyhedralComplex::new(s);
    for c in cone.cells() {
        let slice = c.with_constraint(zero_first.clone());
        if !slice.is_empty() {
            line.push(slice.linear_image(&drop_first), None)?;
        }
    }
    let pi = fac.monomial_map();
    let u = fac.torus_point();
    let push = AffineMapQ::new(pi.trop().matrix, u.valuation());
    let target = line.image(&push);

    // (s, p) ↦ p / s, then π and L_u
    let dehom: Vec<Vec<i64>> = (1..=s).map(|k| (0..=s).map(|j| if j == 0 { -1 } else { (j == k) as i64 }).collect()).collect();
    let on_line = toric_pushforward(&cone_param, &MonomialMap::new(s + 1, dehom)?, &TorusPoint::ones(s))?;
    let map = toric_pushforward(&on_line, &pi, &u)?.with_name("route");
    let round_trip = toric_pushforward(&fac.affine_map(), &pi, &u)?.equivalent(phi);
    Ok((Route { cone, cone_param, target, map }, round_trip))
}

pub(super) fn run(ctx: &mut Ctx) -> Result<()> {
    for (label, src) in CURVES {
        let phi = parse_map(src)?;
        let (r, round_trip) = route(&phi)?;
        ctx.report.check(&format!("{label}: L_u . pi . (x - s)_s reproduces the curve"), round_trip, "");

        let im_cone = image(&r.cone_param)?;
        let a = covers(&r.cone, &im_cone)?;
        let b = covers(&im_cone, &r.cone)?;
        ctx.report.coverage(&format!("{label}: cone by Yu-Yuster"), "Trop(cone)", "im Trop(yu-yuster)", &a);
        ctx.report.check(&format!("{label}: Yu-Yuster parameterises the cone tropically"), a.covered && b.covered, "");

        let im = image(&r.map)?;
        let a = covers(&r.target, &im)?;
        let b = covers(&im, &r.target)?;
        ctx.report.coverage(&format!("{label}: curve by route map"), "Trop(curve)", "im Trop(route)", &a);
        ctx.report.coverage(&format!("{label}: route image in curve"), "im Trop(route)", "Trop(curve)", &b);
        ctx.report.check(&format!("{label}: the route map is tropically surjective"), a.covered && b.covered, "");

        let direct = covers(&r.target, &image(&phi)?)?;
        ctx.report.coverage(&format!("{label}: curve by phi"), "Trop(curve)", "im Trop(phi)", &direct);
        ctx.report.observe(&format!("{label}: phi itself is tropically surjective"), direct.covered, format!("{} witnesses", direct.witnesses.len()));

        for (name, m) in [(label.to_string(), &phi), (format!("{label} route"), &r.map)] {
            let c = containment(&name, "Trop(curve)", &tropicalize_map(m)?, |xi| r.target.membership(xi), 50, &mut ctx.rng);
            ctx.report.containment.push(c);
        }
    }
    Ok(())
}
