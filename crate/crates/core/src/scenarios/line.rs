//! The line `y = x + 1`, its tripod, and the maps `φ` and `ψ`.

use super::io::fmt_affine;
use super::sample::{containment, in_corner_loci, jacobian_rank};
use super::svg::{render_svg, Layer, SvgOptions};
use super::{hypersurface, image, names, Ctx};
use crate::error::Result;
use crate::laurent::{parse_map, substitute};
use crate::polyhedra::{covers, PolyhedralComplex};
use crate::scalar::Rational;
use crate::tropical::{linearity_complex, tropicalize_map, tropicalize_poly};

pub const LINE_POLY: &str = "x - y + 1";
pub const LINE_PHI: &str = "name: phi\nvars: x\nx\nx + 1";
pub const LINE_PSI: &str = "name: psi\nvars: s, u\n(1 + s)/(u - s)\n(1 + u)/(u - s)";

pub(super) fn run(ctx: &mut Ctx) -> Result<()> {
    let vars = names(&["x", "y"]);
    let (f, x) = hypersurface(LINE_POLY, &vars)?;
    let rays = x.complex.len() == 3 && x.complex.cells().iter().all(|c| c.dimension() == 1);
    ctx.report.check("tripod has three maximal rays", rays, format!("{} maximal cells", x.complex.len()));

    let phi = parse_map(LINE_PHI)?;
    let psi = parse_map(LINE_PSI)?;
    let im_phi = ctx.timed("image phi", |_| image(&phi))?;
    let im_psi = ctx.timed("image psi", |_| image(&psi))?;

    let r = covers(&x.complex, &im_phi)?;
    ctx.report.coverage("tripod by phi", "Trop(X)", "im Trop(phi)", &r);
    ctx.report.check("phi is not tropically surjective", !r.covered, format!("{} witnesses", r.witnesses.len()));
    let north = !r.witnesses.is_empty() && r.witnesses.iter().all(|w| w[0].is_zero() && !w[1].is_negative());
    ctx.report.check("uncovered witnesses lie on the north ray", north, format!("{:?}", r.witnesses));

    let r = covers(&x.complex, &im_psi)?;
    ctx.report.coverage("tripod by psi", "Trop(X)", "im Trop(psi)", &r);
    ctx.report.check("psi is tropically surjective", r.covered, "");

    for (label, im) in [("phi", &im_phi), ("psi", &im_psi)] {
        let r = covers(im, &x.complex)?;
        ctx.report.coverage(&format!("im Trop({label}) in tripod"), &format!("im Trop({label})"), "Trop(X)", &r);
        ctx.report.check(&format!("im Trop({label}) lies in the tripod"), r.covered, "");
    }
    for (label, m) in [("phi", &phi), ("psi", &psi)] {
        let rank = jacobian_rank(m, &mut ctx.rng);
        ctx.report.check(&format!("{label} has Jacobian rank 1"), rank == Some(1), format!("{rank:?}"));
    }
    for (label, m) in [("phi", &phi), ("psi", &psi)] {
        let on_x = substitute(&f, m.components())?.is_zero();
        ctx.report.check(&format!("{label} maps into X"), on_x, "");
    }

    let tp = vec![tropicalize_poly(&f)?];
    for (label, m) in [("phi", &phi), ("psi", &psi)] {
        let c = containment(label, "tripod", &tropicalize_map(m)?, |xi| in_corner_loci(&tp, xi), 50, &mut ctx.rng);
        ctx.report.containment.push(c);
    }
    Ok(())
}

/// The tripod over the linearity cells of `Trop(ψ)`, each labelled by its
/// affine form.
pub fn line_figure() -> Result<String> {
    let psi = parse_map(LINE_PSI)?;
    let lc = linearity_complex(&tropicalize_map(&psi)?)?;
    let mut cells = PolyhedralComplex::new(2);
    for (p, a) in &lc.cells {
        cells.push(p.clone(), Some(fmt_affine(a, &["s", "u"])))?;
    }
    let (_, x) = hypersurface(LINE_POLY, &names(&["x", "y"]))?;
    let layers = [Layer::new(cells), Layer::new(x.complex).stroke("#000000", 3.0).labels(false)];
    let opts = SvgOptions { title: Some("linearity cells of Trop(psi) and the tripod".into()), extent: Rational::from_integer(3), ..SvgOptions::default() };
    render_svg(&layers, &opts)
}
