//! Scenarios exercising the constructive toolkit on its own: local
//! linearity certificates, the Combination Lemma, Puiseux roots and
//! homogenisation.

use rand::Rng;

use super::hankel::{HANKEL_IOTA, HANKEL_PHI, HANKEL_PSI};
use super::line::{LINE_PHI, LINE_POLY, LINE_PSI};
use super::sample::{random_nonzero, random_point};
use super::{hypersurface, image, names, Ctx, Params};
use crate::constructions::{combine_reparams, cone_over_map, eval_at, local_linearity_check, puiseux_roots, rank2_param, upoly_coefficients, WeightPoint};
use crate::error::{Error, Result};
use crate::laurent::{compose_maps, homogenize_map, min_homogenization_degree, parse_map, parse_poly, RationalMap};
use crate::polyhedra::covers;
use crate::scalar::Rational;
use crate::tropical::{trop_eval_map, trop_hypersurface, tropicalize_map, tropicalize_poly};

/// `s ↦ c t^q s^k + b`, a random monomial-plus-affine map `T ⇢ T`.
fn random_reparam<R: Rng>(rng: &mut R) -> Result<RationalMap> {
    let c = random_nonzero(rng, 5);
    let q = rng.gen_range(-2..=2);
    let k = [-2, -1, 1, 2][rng.gen_range(0..4)];
    let b = rng.gen_range(-3..=3);
    parse_map(&format!("vars: s\n{c}*t^({q})*s^({k}) + ({b})"))
}

pub(super) fn local(ctx: &mut Ctx) -> Result<()> {
    let phi = parse_map(LINE_PHI)?;
    let id = RationalMap::identity(1);
    let (_, tripod) = hypersurface(LINE_POLY, &names(&["x", "y"]))?;
    for (w, diff) in [(2, [1, 0]), (-1, [1, 1])] {
        let c = local_linearity_check(&phi, &id, &WeightPoint::generic(vec![Rational::from_integer(w)]))?;
        let ok = c.valid && c.differential == vec![vec![diff[0]], vec![diff[1]]] && tripod.membership(&c.image_point);
        ctx.report.check(&format!("line at {w}: certificate with differential {diff:?}, image on the tripod"), ok, format!("{:?}", c.image_point));
    }
    let tie = local_linearity_check(&phi, &id, &WeightPoint::exact(vec![Rational::zero()]))?;
    ctx.report.check("line at the vertex: exact weight is rejected with a tie", !tie.valid && tie.ties.len() == 1, format!("{} ties", tie.ties.len()));

    // random reparameterisations of the line: a valid certificate agrees with Trop(φ ∘ α) on its region
    let mut valid = 0;
    let mut agree = 0;
    for _ in 0..20 {
        let alpha = random_reparam(&mut ctx.rng)?;
        let w = WeightPoint::generic(random_point(&mut ctx.rng, 1));
        let c = local_linearity_check(&phi, &alpha, &w)?;
        if !c.valid {
            continue;
        }
        valid += 1;
        let t = tropicalize_map(&compose_maps(&phi, &alpha)?)?;
        let inside = c.region.interior_point().or_else(|| c.region.relative_interior_point().ok());
        if inside.is_some_and(|p| c.affine_map().apply(&p) == trop_eval_map(&t, &p)) && tripod.membership(&c.image_point) {
            agree += 1;
        }
    }
    ctx.report.check(
        "valid certificates agree with Trop(phi . alpha) and land on the tripod",
        valid > 0 && agree == valid,
        format!("{agree} of {valid} valid"),
    );

    // the Hankel certificate at (2, 0, 1)
    let hphi = parse_map(HANKEL_PHI)?;
    let psi = parse_map(HANKEL_PSI)?;
    let c = local_linearity_check(&hphi, &psi, &WeightPoint::generic(vec![Rational::from_integer(2), Rational::zero(), Rational::one()]))?;
    let (_, hx) = hypersurface(super::hankel::HANKEL_DET, &names(&["z0", "z1", "z2", "z3", "z4"]))?;
    ctx.report.check(
        "Hankel phi.psi at (2,0,1): rank 3 certificate with image on Trop(X)",
        c.valid && c.rank == 3 && hx.membership(&c.image_point),
        format!("{:?}", c.image_point),
    );
    ctx.report.certificates.push(super::report::NamedCertificate { label: "hankel phi.psi".into(), certificate: c });
    Ok(())
}

fn combination_check(ctx: &mut Ctx, label: &str, phi: &RationalMap, a1: &RationalMap, a2: &RationalMap) -> Result<bool> {
    let (alpha, deg) = combine_reparams(phi, a1, a2)?;
    let big = ctx.timed(label, |_| image(&compose_maps(phi, &alpha)?))?;
    let mut ok = true;
    for (k, a) in [a1, a2].into_iter().enumerate() {
        let small = image(&compose_maps(phi, a)?)?;
        let r = covers(&small, &big)?;
        ctx.report.coverage(&format!("{label}: alpha{} inside combination", k + 1), &format!("im Trop(phi . alpha{})", k + 1), "im Trop(phi . alpha)", &r);
        ok &= r.covered;
    }
    ctx.report.check(&format!("{label}: combination contains both images"), ok, format!("d = {}, e = {}", deg.d, deg.e));
    Ok(ok)
}

pub(super) fn combine(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let pairs = params.usize("pairs")?;
    let phi = parse_map(LINE_PHI)?;
    for k in 0..pairs {
        let a1 = random_reparam(&mut ctx.rng)?;
        let a2 = random_reparam(&mut ctx.rng)?;
        ctx.report.observe(&format!("pair {k}"), true, format!("alpha1 = {}; alpha2 = {}", a1.fmt_components()[0], a2.fmt_components()[0]));
        combination_check(ctx, &format!("line pair {k}"), &phi, &a1, &a2)?;
    }
    let hphi = parse_map(HANKEL_PHI)?;
    let psi = parse_map(HANKEL_PSI)?;
    let psi_iota = compose_maps(&psi, &parse_map(HANKEL_IOTA)?)?;
    combination_check(ctx, "hankel psi, psi.iota", &hphi, &psi, &psi_iota)?;
    Ok(())
}

const ROOT_POLYS: [&str; 3] = ["S^2 - t", "S^2 + S + t", "S^2 - (1 + t)"];

pub(super) fn roots(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let k = params.usize("k")?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    for src in ROOT_POLYS {
        let poly = parse_poly(src, &names(&["S"]))?;
        let p = upoly_coefficients(&poly)?;
        let roots = puiseux_roots(&p, k)?;
        ctx.report.check(&format!("{src}: two roots"), roots.len() == 2, roots.len().to_string());
        let shown: Vec<String> = roots.iter().map(|r| r.series.to_string()).collect();
        ctx.report.observe(&format!("{src}: expansions to {k} terms"), true, shown.join("; "));
        let mut increasing = true;
        for r in &roots {
            let mut last: Option<Rational> = None;
            for j in 1..=r.series.num_terms() {
                let res = eval_at(&p, &r.series.first_terms(j));
                let v = res.min_exp().cloned();
                match (&last, &v) {
                    (Some(a), Some(b)) if b <= a => increasing = false,
                    _ => {}
                }
                if v.is_none() {
                    break;
                }
                last = v;
            }
        }
        ctx.report.check(&format!("{src}: residual valuation increases with every term"), increasing, "");
        // valuations of the roots are the tropical roots
        let trop = trop_hypersurface(&tropicalize_poly(&poly)?);
        let on_corner = roots.iter().all(|r| r.series.min_exp().is_some_and(|v| trop.membership(std::slice::from_ref(v))));
        ctx.report.check(&format!("{src}: root valuations lie in the corner locus"), on_corner, "");
    }
    Ok(())
}

pub(super) fn homogenisation(ctx: &mut Ctx) -> Result<()> {
    let maps = [("line phi", parse_map(LINE_PHI)?), ("line psi", parse_map(LINE_PSI)?), ("rank2(2,3)", rank2_param(2, 3)?)];
    for (label, phi) in &maps {
        let d = min_homogenization_degree(phi);
        let tilde = homogenize_map(phi, d)?;
        let too_small = homogenize_map(phi, d - 1).is_err();
        ctx.report.check(&format!("{label}: degree {d} is the least that homogenises"), too_small, "");
        let n = phi.codomain_dim() + 1;
        let ones = vec![vec![Rational::one(); n]];
        let cylinder = ctx.timed(label, |_| image(phi))?.prepend_zero_coordinate().add_lineality(&ones);
        let im = image(&tilde)?;
        let a = covers(&im, &cylinder)?;
        let b = covers(&cylinder, &im)?;
        ctx.report.coverage(&format!("{label}: homogenised image in cylinder"), "im Trop(phi~)", "{0} x im Trop(phi) + R1", &a);
        ctx.report.coverage(&format!("{label}: cylinder in homogenised image"), "{0} x im Trop(phi) + R1", "im Trop(phi~)", &b);
        ctx.report.check(&format!("{label}: im Trop(phi~) = {{0}} x im Trop(phi) + R(1,...,1)"), a.covered && b.covered, format!("d = {d}"));
    }
    // the cone lemma on the line
    let phi = parse_map(LINE_PHI)?;
    let cone = image(&cone_over_map(&phi))?;
    let cylinder = image(&phi)?.prepend_zero_coordinate().add_lineality(&[vec![Rational::one(); 3]]);
    let ok = covers(&cone, &cylinder)?.covered && covers(&cylinder, &cone)?.covered;
    ctx.report.check("cone over the line: Trop = {0} x Trop(phi) + R(1,1,1)", ok, "");
    Ok(())
}
