//! The first secant variety of the rational normal quartic: the Hankel
//! determinant hypersurface in `T^5`.

use super::report::{NamedCertificate, PlaneProjection};
use super::sample::{containment, in_corner_loci, jacobian_rank};
use super::svg::{render_svg, Layer, SvgOptions};
use super::{hypersurface, names, projection_checks, Ctx};
use crate::constructions::{local_linearity_check, projection_inverse_linear, LocalLinearityCertificate, WeightPoint};
use crate::error::{Error, Result};
use crate::laurent::{compose_maps, parse_map, substitute, ExponentVec, RationalMap};
use crate::linalg::to_rational_matrix;
use crate::polyhedra::{covers, AffineMapQ, LinConstraint, PolyhedralComplex, Polyhedron, Relation};
use crate::scalar::Rational;
use crate::tropical::{tropicalize_map, tropicalize_poly, TropHypersurface};

pub const HANKEL_DET: &str = "z0*z2*z4 + 2*z1*z2*z3 - z1^2*z4 - z0*z3^2 - z2^3";

/// `(u, v) ↦ (u_0 v_0^k + u_1 v_1^k)_{k=0..4}`.
pub const HANKEL_PHI: &str = "name: phi
vars: u0, u1, v0, v1
u0 + u1
u0*v0 + u1*v1
u0*v0^2 + u1*v1^2
u0*v0^3 + u1*v1^3
u0*v0^4 + u1*v1^4";

/// The map as printed, with first component `u0 + v1`.
pub const HANKEL_PHI_PRINTED: &str = "name: phi-printed
vars: u0, u1, v0, v1
u0 + v1
u0*v0 + u1*v1
u0*v0^2 + u1*v1^2
u0*v0^3 + u1*v1^3
u0*v0^4 + u1*v1^4";

pub const HANKEL_PSI: &str = "name: psi
vars: x0, x1, x2
1 + x0
-1
i*x1
-x1*(1 + x2*x1^-4)";

pub const HANKEL_IOTA: &str = "name: iota
vars: x0, x1, x2
x0^-1
x1^-1
x2^-1";

/// Swaps the roles of the two summands and inverts `v`: `φ ∘ σ` is the
/// sequence `(u_0 v_0^{4-k} + u_1 v_1^{4-k})_k` read backwards.
pub const HANKEL_REVERSAL: &str = "name: sigma
vars: u0, u1, v0, v1
u0*v0^4
u1*v1^4
v0^-1
v1^-1";

const MONOMIALS: [(char, [i64; 5]); 5] =
    [('a', [1, 0, 1, 0, 1]), ('b', [0, 1, 1, 1, 0]), ('c', [0, 2, 0, 0, 1]), ('d', [1, 0, 0, 2, 0]), ('e', [0, 0, 3, 0, 0])];

/// Rows of the planar projection; both kill the lineality space.
const PLANE_ROWS: [[i64; 5]; 2] = [[1, -2, 1, 0, 0], [0, 0, 1, -2, 1]];
const LINEALITY: [[i64; 5]; 2] = [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]];

fn letter(e: &[i64]) -> char {
    MONOMIALS.iter().find(|(_, m)| m == e).map_or('?', |(c, _)| *c)
}

fn pair_name(p: &(ExponentVec, ExponentVec)) -> String {
    let mut v = [letter(&p.0), letter(&p.1)];
    v.sort();
    format!("{}{}", v[0], v[1])
}

fn int_rows<const N: usize>(rows: &[[i64; N]]) -> Vec<Vec<Rational>> {
    to_rational_matrix(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn cone(rows: &[[i64; 3]]) -> Polyhedron {
    let cs = rows.iter().map(|r| LinConstraint::from_ints(r, 0, Relation::Le)).collect();
    Polyhedron::new(3, cs).expect("three coordinates")
}

/// `ξ0 ≥ 0, ξ2 ≥ 4ξ1, ξ2 ≤ ξ0 + 4ξ1`.
fn psi_cone() -> Polyhedron {
    cone(&[[-1, 0, 0], [0, 4, -1], [-1, -4, 1]])
}

/// `0 ≥ ξ0, 4ξ1 ≥ ξ2, ξ2 ≥ ξ0 + ξ1` as printed.
fn iota_cone_printed() -> Polyhedron {
    cone(&[[1, 0, 0], [0, -4, 1], [1, 1, -1]])
}

/// The printed cone with `ξ0 + 4ξ1` in the last inequality.
fn iota_cone_corrected() -> Polyhedron {
    cone(&[[1, 0, 0], [0, -4, 1], [1, 4, -1]])
}

/// `(ξ0, ξ1, ξ2) ↦ (ξ0, ξ1, 2ξ1, 3ξ1, ξ2)`.
fn s_form() -> AffineMapQ {
    AffineMapQ::from_ints(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 2, 0], vec![0, 3, 0], vec![0, 0, 1]])
}

fn hankel() -> Result<(crate::laurent::LaurentPoly, TropHypersurface)> {
    hypersurface(HANKEL_DET, &names(&["z0", "z1", "z2", "z3", "z4"]))
}

/// The cone of `Trop(X)` dual to the edge `{b, e}`.
fn cone_p(x: &TropHypersurface) -> Result<(usize, Polyhedron)> {
    let k = x.pair_labels.iter().position(|p| pair_name(p) == "be").ok_or_else(|| Error::Verification("no cone dual to the edge b-e".into()))?;
    Ok((k, x.complex.cells()[k].clone()))
}

fn one_cell(p: Polyhedron) -> PolyhedralComplex {
    PolyhedralComplex::from_cells(p.ambient_dim(), vec![p]).expect("one cell")
}

fn certificate(ctx: &mut Ctx, label: &str, phi: &RationalMap, alpha: &RationalMap, base: [i64; 3]) -> Result<LocalLinearityCertificate> {
    let w = WeightPoint::generic(base.iter().map(|&x| Rational::from_integer(x)).collect());
    let c = local_linearity_check(phi, alpha, &w)?;
    ctx.report.check(&format!("{label}: valid full-rank certificate"), c.valid && c.rank == 3, format!("rank {}, {} ties", c.rank, c.ties.len()));
    ctx.report.certificates.push(NamedCertificate { label: label.into(), certificate: c.clone() });
    Ok(c)
}

pub(super) fn run(ctx: &mut Ctx) -> Result<()> {
    let (f, x) = hankel()?;
    let lineality = int_rows(&LINEALITY);

    // the fan
    let full = x.complex.cells().iter().all(|c| c.dimension() == 4);
    ctx.report.check("Trop(X) has 9 maximal cones of dimension 4", x.complex.len() == 9 && full, format!("{} cones", x.complex.len()));
    let lin_ok = x.complex.cells().iter().all(|c| c.add_lineality(&lineality).same_set(c));
    ctx.report.check("(1,1,1,1,1) and (0,1,2,3,4) span lineality of every cone", lin_ok, "");
    let edges: Vec<String> = x.pair_labels.iter().map(pair_name).collect();
    ctx.report.observe("cones by Newton polytope edge", true, edges.join(" "));

    // projections forgetting z0 and z4
    let vars = names(&["z0", "z1", "z2", "z3", "z4"]);
    let specs = vec![projection_inverse_linear(&f, 0, &vars)?, projection_inverse_linear(&f, 4, &vars)?];
    let rep = ctx.timed("projections", |ctx| projection_checks(ctx, &f, &x, &specs))?;
    let uncovered: Vec<String> = rep.uncovered.iter().map(|&k| edges[k].clone()).collect();
    ctx.report.check("exactly one cone is horizontal for neither projection, the one dual to b-e", uncovered == ["be"], uncovered.join(","));
    let criterion = rep.cells.iter().all(|c| {
        let (a, b) = &x.pair_labels[c.cell];
        let expect: Vec<usize> = [(0, a[0] != b[0]), (1, a[4] != b[4])].into_iter().filter(|p| p.1).map(|p| p.0).collect();
        expect == c.horizontal_for
    });
    ctx.report.check("horizontal for pi_I iff alpha_0 != beta_0, for pi_J iff alpha_4 != beta_4", criterion, "");

    // the parameterisation
    let phi = parse_map(HANKEL_PHI)?;
    let on_x = substitute(&f, phi.components())?.is_zero();
    ctx.report.check("phi maps into X", on_x, "");
    let printed = parse_map(HANKEL_PHI_PRINTED)?;
    if !substitute(&f, printed.components())?.is_zero() {
        ctx.report.discrepancy(
            "hankel-phi-first-component",
            "phi = (u0 + v1, u0 v0 + u1 v1, ...)",
            "u0 + v1 does not map into X; u0 + u1 does",
            "the scenario uses u0 + u1, the k = 0 term of the pattern u0 v0^k + u1 v1^k",
        );
    }
    let rank = jacobian_rank(&phi, &mut ctx.rng);
    ctx.report.check("phi has Jacobian rank 4", rank == Some(4), format!("{rank:?}"));

    // the cone P and its normal form
    let (_, p) = cone_p(&x)?;
    let s_rows = vec![LinConstraint::from_ints(&[0, 2, -1, 0, 0], 0, Relation::Eq), LinConstraint::from_ints(&[0, 3, 0, -1, 0], 0, Relation::Eq)];
    let p_s = s_rows.iter().fold(p.clone(), |acc, c| acc.with_constraint(c.clone()));
    let normal_form = p_s.add_lineality(&lineality[..1]).same_set(&p);
    ctx.report.check("every point of P is (z0, z1, 2z1, 3z1, z2) + R(1,1,1,1,1)", normal_form, "");
    let signs = s_rows
        .iter()
        .cloned()
        .chain([LinConstraint::from_ints(&[-1, 0, 0, 0, 0], 0, Relation::Le), LinConstraint::from_ints(&[0, 4, 0, 0, -1], 0, Relation::Le)]);
    let implied = Polyhedron::new(5, signs.collect())?.contains_polyhedron(&p_s);
    ctx.report.check("on P in normal form, z0 >= 0 and z2 >= 4 z1", implied, "");

    // reparameterisations
    let psi = parse_map(HANKEL_PSI)?;
    let iota = parse_map(HANKEL_IOTA)?;
    let psi_iota = compose_maps(&psi, &iota)?.with_name("psi.iota");
    let rho = compose_maps(&parse_map(HANKEL_REVERSAL)?, &psi)?.with_name("rho");
    let c_psi = certificate(ctx, "phi.psi", &phi, &psi, [2, 0, 1])?;
    let c_iota = certificate(ctx, "phi.psi.iota", &phi, &psi_iota, [-2, 0, -1])?;
    let c_rho = certificate(ctx, "phi.rho", &phi, &rho, [2, 0, 1])?;

    ctx.report.check("phi.psi is linear exactly on the stated cone", c_psi.region.same_set(&psi_cone()), c_psi.region.fmt_constraints());
    let probes = [[1, 0, 0], [3, -1, 2], [0, 1, 7], [5, 2, -3]];
    let q3 = |v: &[i64; 3]| v.iter().map(|&x| Rational::from_integer(x)).collect::<Vec<_>>();
    let psi_s = probes.iter().all(|v| c_psi.affine_map().apply(&q3(v)) == s_form().apply(&q3(v)));
    ctx.report.check("phi.psi restricted to its cone is (x0, x1, 2x1, 3x1, x2)", psi_s, format!("{:?}", c_psi.differential));
    ctx.report.discrepancy(
        "hankel-psi-image",
        "(xi0, xi1, 2 xi2, 3 xi1, xi2)",
        &format!("differential {:?}", c_psi.differential),
        "the third coordinate is 2 xi1; the printed 2 xi2 is not reported as a verdict",
    );
    let iota_s = probes.iter().all(|v| {
        let neg: Vec<Rational> = q3(v).iter().map(|x| -x).collect();
        c_iota.affine_map().apply(&neg) == s_form().apply(&q3(v))
    });
    ctx.report.check("phi.psi.iota maps -(z0, z1, z2) to (z0, z1, 2z1, 3z1, z2)", iota_s, format!("{:?}", c_iota.differential));
    if !c_iota.region.same_set(&iota_cone_printed()) {
        ctx.report.discrepancy(
            "hankel-iota-cone",
            "0 >= xi0, 4 xi1 >= xi2, xi2 >= xi0 + xi1",
            &c_iota.region.fmt_constraints(),
            "the certificate region has xi0 + 4 xi1 in the last inequality",
        );
    }
    ctx.report.observe("phi.psi.iota is linear exactly on the corrected cone", c_iota.region.same_set(&iota_cone_corrected()), c_iota.region.fmt_constraints());

    // images inside P and joint coverage
    let im_psi = c_psi.image_of(&psi_cone())?;
    let im_iota = c_iota.image_of(&iota_cone_printed())?;
    let im_rho = c_rho.image_of(&c_rho.region)?;
    for (label, im) in
        [("phi.psi: image of the stated cone", &im_psi), ("phi.psi.iota: image of the stated cone", &im_iota), ("phi.rho: image of its region", &im_rho)]
    {
        ctx.report.check(&format!("{label} lies in P"), p.contains_polyhedron(im), im.fmt_constraints());
    }
    let target = one_cell(p.clone());
    let ones = &lineality[..1];
    let mut pair = PolyhedralComplex::new(5);
    pair.push(im_psi.clone(), Some("phi.psi".into()))?;
    pair.push(im_iota.clone(), Some("phi.psi.iota".into()))?;
    let pair = pair.add_lineality(ones);
    let inside = covers(&pair, &target)?;
    ctx.report.coverage("psi and iota images in P", "im psi + im iota + R1", "P", &inside);
    ctx.report.check(
        "psi and iota images jointly cover a full-dimensional subset of P",
        inside.covered && pair.dimension() == 4,
        format!("dimension {}", pair.dimension()),
    );
    let whole = ctx.timed("cover P by psi, iota", |_| covers(&target, &pair))?;
    ctx.report.coverage("P by psi and iota", "P", "im psi + im iota + R1", &whole);
    if !whole.covered {
        ctx.report.discrepancy(
            "hankel-iota-coverage",
            "if zeta2 >= zeta0 + 4 zeta1 it is in the image of Trop(phi.psi.iota)",
            &format!("P is not covered; witness {}", whole.witnesses.first().map(|w| format!("{w:?}")).unwrap_or_default()),
            "phi.psi.iota has the same image as phi.psi; the reversal rho = sigma.psi covers the remaining half",
        );
    }
    let mut fixed = PolyhedralComplex::new(5);
    fixed.push(im_psi, Some("phi.psi".into()))?;
    fixed.push(im_rho, Some("phi.rho".into()))?;
    let fixed = fixed.add_lineality(ones);
    let r = ctx.timed("cover P by psi, rho", |_| covers(&target, &fixed))?;
    ctx.report.coverage("P by psi and rho", "P", "im psi + im rho + R1", &r);
    ctx.report.check("psi and rho images cover P", r.covered, "");

    // fundamental containment
    let tp = vec![tropicalize_poly(&f)?];
    for (label, alpha) in [("phi", None), ("phi.psi", Some(&psi)), ("phi.psi.iota", Some(&psi_iota)), ("phi.rho", Some(&rho))] {
        let m = match alpha {
            Some(a) => compose_maps(&phi, a)?,
            None => phi.clone(),
        };
        let c = containment(label, "Trop(X)", &tropicalize_map(&m)?, |xi| in_corner_loci(&tp, xi), 50, &mut ctx.rng);
        ctx.report.containment.push(c);
    }
    ctx.report.projection =
        Some(PlaneProjection { rows: PLANE_ROWS.iter().map(|r| r.to_vec()).collect(), lineality: LINEALITY.iter().map(|r| r.to_vec()).collect() });
    Ok(())
}

/// `Trop(X)` modulo lineality, drawn through [`PLANE_ROWS`]. Cones are
/// labelled by their Newton polytope edge and the regions where one
/// monomial is minimal by its letter.
pub fn hankel_figure() -> Result<String> {
    let (f, x) = hankel()?;
    let plane = AffineMapQ::linear(int_rows(&PLANE_ROWS));
    let mut cones = PolyhedralComplex::new(2);
    for (cell, pair) in x.complex.cells().iter().zip(&x.pair_labels) {
        cones.push(cell.linear_image(&plane), Some(pair_name(pair)))?;
    }
    let tp = tropicalize_poly(&f)?;
    let mut annotations = Vec::new();
    for (c, e) in MONOMIALS {
        let region = tp.argmin_region(&e).linear_image(&plane);
        let Some(pt) = region.interior_point() else { continue };
        let size = pt.iter().map(Rational::abs).max().filter(|m| m.is_positive()).unwrap_or_else(Rational::one);
        let scale = Rational::new(5, 2) / size;
        annotations.push((pt.iter().map(|v| v * &scale).collect(), c.to_string()));
    }
    let opts = SvgOptions { title: Some("Trop(hankel det) mod lineality".into()), annotations, ..SvgOptions::default() };
    render_svg(&[Layer::new(cones).stroke("#333333", 1.5)], &opts)
}
