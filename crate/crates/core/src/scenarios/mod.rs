//! Worked examples as reproducible scenarios, their JSON reports and
//! figures.

mod curves;
mod fourfive;
mod hankel;
mod line;
mod linear;
mod matrices;
mod toolkit;

pub mod io;
pub mod report;
pub mod sample;
pub mod svg;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{horizontal_cells, horizontal_cover_report, verify_projection_spec, HorizontalReport, ProjectionSpec};
use crate::error::{Error, Result};
use crate::laurent::{parse_poly, LaurentPoly, RationalMap};
use crate::polyhedra::{covers, PolyhedralComplex};
use crate::tropical::{linearity_complex, pl_image, trop_eval_map, trop_hypersurface, tropicalize_map, tropicalize_poly, TropHypersurface};

pub use fourfive::{cofactor_identities, random_rank3_matrix, CofactorValues};
pub use hankel::{hankel_figure, HANKEL_DET, HANKEL_IOTA, HANKEL_PHI, HANKEL_PHI_PRINTED, HANKEL_PSI, HANKEL_REVERSAL};
pub use line::{line_figure, LINE_PHI, LINE_POLY, LINE_PSI};
pub use report::{Check, ContainmentCheck, CoverageEntry, Discrepancy, PlaneProjection, Report, SCHEMA};
pub use svg::{render_svg, Layer, SvgOptions};

/// Scenario names with their accepted parameters and defaults.
pub const SCENARIOS: &[(&str, &[(&str, &str)])] = &[
    ("line", &[]),
    ("singular", &[("n", "2")]),
    ("hankel", &[]),
    ("rank2", &[("m", "3"), ("n", "3")]),
    ("grassmannian", &[("n", "4")]),
    ("horn", &[("a", "quadratic")]),
    ("curves", &[]),
    ("linear", &[("count", "10")]),
    ("fourfive", &[("samples", "100")]),
    ("local", &[]),
    ("combine", &[("pairs", "5")]),
    ("roots", &[("k", "3")]),
    ("homogenisation", &[]),
];

pub fn scenario_names() -> Vec<&'static str> {
    SCENARIOS.iter().map(|(n, _)| *n).collect()
}

/// Parameters after defaults have been filled in.
#[derive(Clone, Debug)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    fn resolve(name: &str, given: &BTreeMap<String, String>) -> Result<Self> {
        let spec = SCENARIOS.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::UnknownScenario(name.into()))?.1;
        let mut out: BTreeMap<String, String> = spec.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        for (k, v) in given {
            if !out.contains_key(k) {
                let known: Vec<&str> = spec.iter().map(|(k, _)| *k).collect();
                return Err(Error::InvalidInput(format!("scenario `{name}` has no parameter `{k}` (known: {})", known.join(", "))));
            }
            out.insert(k.clone(), v.clone());
        }
        Ok(Params(out))
    }

    pub fn get(&self, key: &str) -> &str {
        self.0.get(key).map(String::as_str).unwrap_or("")
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        self.get(key).parse().map_err(|_| Error::InvalidInput(format!("parameter `{key}` must be a natural number, got `{}`", self.get(key))))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    /// Adds wall-clock timings, which makes reports differ between runs.
    pub timings: bool,
}

/// State threaded through a scenario.
pub struct Ctx {
    pub report: Report,
    pub rng: ChaCha8Rng,
    timings: Option<BTreeMap<String, u128>>,
}

impl Ctx {
    fn timed<T>(&mut self, label: &str, f: impl FnOnce(&mut Self) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        if let Some(t) = self.timings.as_mut() {
            t.insert(label.into(), start.elapsed().as_millis());
        }
        out
    }
}

pub fn run_scenario(name: &str, params: &BTreeMap<String, String>, seed: u64) -> Result<Report> {
    run_scenario_with(name, params, RunOptions { seed, timings: false })
}

pub fn run_scenario_with(name: &str, given: &BTreeMap<String, String>, opts: RunOptions) -> Result<Report> {
    let params = Params::resolve(name, given)?;
    let mut ctx = Ctx { report: Report::new(name, &params.0, opts.seed), rng: ChaCha8Rng::seed_from_u64(opts.seed), timings: opts.timings.then(BTreeMap::new) };
    log::info!("running scenario {name} with seed {}", opts.seed);
    let start = Instant::now();
    match name {
        "line" => line::run(&mut ctx)?,
        "singular" => matrices::singular(&params, &mut ctx)?,
        "hankel" => hankel::run(&mut ctx)?,
        "rank2" => matrices::rank2(&params, &mut ctx)?,
        "grassmannian" => matrices::grassmannian(&params, &mut ctx)?,
        "horn" => matrices::horn(&params, &mut ctx)?,
        "curves" => curves::run(&mut ctx)?,
        "linear" => linear::run(&params, &mut ctx)?,
        "fourfive" => fourfive::run(&params, &mut ctx)?,
        "local" => toolkit::local(&mut ctx)?,
        "combine" => toolkit::combine(&params, &mut ctx)?,
        "roots" => toolkit::roots(&params, &mut ctx)?,
        "homogenisation" => toolkit::homogenisation(&mut ctx)?,
        _ => return Err(Error::UnknownScenario(name.into())),
    }
    if let Some(mut t) = ctx.timings.take() {
        t.insert("total".into(), start.elapsed().as_millis());
        ctx.report.timings_ms = Some(t);
    }
    ctx.report.finish();
    Ok(ctx.report)
}

/// The figure belonging to a scenario, when it has one.
pub fn scenario_figure(name: &str) -> Result<String> {
    match name {
        "line" => line_figure(),
        "hankel" => hankel_figure(),
        _ if SCENARIOS.iter().any(|(n, _)| *n == name) => Err(Error::InvalidInput(format!("scenario `{name}` has no figure"))),
        _ => Err(Error::UnknownScenario(name.into())),
    }
}

pub(crate) fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn image(phi: &RationalMap) -> Result<PolyhedralComplex> {
    Ok(pl_image(&linearity_complex(&tropicalize_map(phi)?)?))
}

pub(crate) fn hypersurface(src: &str, vars: &[String]) -> Result<(LaurentPoly, TropHypersurface)> {
    let f = parse_poly(src, vars)?;
    let x = trop_hypersurface(&tropicalize_poly(&f)?);
    Ok((f, x))
}

/// The checks shared by every birational coordinate projection: the inverse
/// lands on `X` and undoes `π`, `Trop(π) ∘ Trop(inverse)` is the identity,
/// and the tropical image of the inverse is exactly the union of the
/// horizontal cells.
pub(crate) fn projection_checks(ctx: &mut Ctx, f: &LaurentPoly, x: &TropHypersurface, specs: &[ProjectionSpec]) -> Result<HorizontalReport> {
    for spec in specs {
        let ok = verify_projection_spec(f, spec, 20, &mut ctx.rng);
        ctx.report.check(
            &format!("{}: inverse lands on X and undoes the projection", spec.label),
            ok.is_ok(),
            ok.err().map(|e| e.to_string()).unwrap_or_default(),
        );
        let t = tropicalize_map(&spec.inverse)?;
        let proj = spec.trop_projection();
        let bad =
            (0..20).map(|_| sample::random_point(&mut ctx.rng, spec.inverse.domain_dim())).filter(|eta| proj.apply(&trop_eval_map(&t, eta)) != *eta).count();
        ctx.report.check(&format!("{}: Trop(pi) after Trop(inverse) is the identity", spec.label), bad == 0, format!("{bad} of 20 points moved"));
        let im = spec.image()?;
        let hc = horizontal_cells(x, spec);
        let a = covers(&hc, &im)?;
        let b = covers(&im, &hc)?;
        ctx.report.coverage(&format!("{}: horizontal cells by inverse image", spec.label), "horizontal cells", "im Trop(inverse)", &a);
        ctx.report.coverage(&format!("{}: inverse image in horizontal cells", spec.label), "im Trop(inverse)", "horizontal cells", &b);
        ctx.report.check(
            &format!("{}: im Trop(inverse) equals the horizontal cells", spec.label),
            a.covered && b.covered,
            format!("{} horizontal cells", hc.len()),
        );
        let tp = vec![tropicalize_poly(f)?];
        let c = sample::containment(&spec.label, "Trop(X)", &t, |xi| sample::in_corner_loci(&tp, xi), 50, &mut ctx.rng);
        ctx.report.containment.push(c);
    }
    let rep = horizontal_cover_report(x, specs)?;
    ctx.report.check("every horizontal (cell, projection) pair is confirmed by covers()", rep.all_confirmed, "");
    ctx.report.horizontal.push(rep.clone());
    Ok(rep)
}
