//! SVG drawings of polyhedral complexes in the plane.
//!
//! Cells are clipped exactly to a square window; only the final vertex
//! coordinates are converted to floating point.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::linalg::{determinant, solve};
use crate::polyhedra::{LinConstraint, PolyhedralComplex, Polyhedron};
use crate::scalar::Rational;

const PALETTE: [&str; 8] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1", "#9c755f"];

/// One complex with its styling.
#[derive(Clone, Debug)]
pub struct Layer {
    pub complex: PolyhedralComplex,
    /// Fill colour for 2-dimensional cells; `None` cycles through a palette.
    pub fill: Option<String>,
    pub stroke: String,
    pub stroke_width: f64,
    pub show_labels: bool,
}

impl Layer {
    pub fn new(complex: PolyhedralComplex) -> Self {
        Layer { complex, fill: None, stroke: "#222222".into(), stroke_width: 2.0, show_labels: true }
    }

    pub fn stroke(mut self, colour: &str, width: f64) -> Self {
        self.stroke = colour.into();
        self.stroke_width = width;
        self
    }

    pub fn fill(mut self, colour: &str) -> Self {
        self.fill = Some(colour.into());
        self
    }

    pub fn labels(mut self, show: bool) -> Self {
        self.show_labels = show;
        self
    }
}

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Half-width of the square window, centred at the origin.
    pub extent: Rational,
    pub size_px: u32,
    pub title: Option<String>,
    /// Free-standing text at points of the plane.
    pub annotations: Vec<(Vec<Rational>, String)>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { extent: Rational::from_integer(4), size_px: 480, title: None, annotations: Vec::new() }
    }
}

/// Vertices of the bounded polygon `p ∩ window`, in boundary order.
fn clipped_vertices(p: &Polyhedron, extent: &Rational) -> Vec<[Rational; 2]> {
    let mut cs: Vec<LinConstraint> = p.constraints().to_vec();
    for (a, b) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
        cs.push(LinConstraint::le(vec![Rational::from_integer(a), Rational::from_integer(b)], extent.clone()));
    }
    let mut pts: Vec<[Rational; 2]> = Vec::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let m = vec![cs[i].normal.clone(), cs[j].normal.clone()];
            if determinant(&m).is_zero() {
                continue;
            }
            let Some(x) = solve(&m, &[cs[i].offset.clone(), cs[j].offset.clone()]) else { continue };
            if cs.iter().all(|c| c.satisfied_by(&x)) {
                let v = [x[0].clone(), x[1].clone()];
                if !pts.contains(&v) {
                    pts.push(v);
                }
            }
        }
    }
    if pts.len() > 2 {
        let n = pts.len() as f64;
        let cx = pts.iter().map(|v| v[0].to_f64()).sum::<f64>() / n;
        let cy = pts.iter().map(|v| v[1].to_f64()).sum::<f64>() / n;
        pts.sort_by(|a, b| {
            let ta = (a[1].to_f64() - cy).atan2(a[0].to_f64() - cx);
            let tb = (b[1].to_f64() - cy).atan2(b[0].to_f64() - cx);
            ta.total_cmp(&tb)
        });
    } else {
        pts.sort();
    }
    pts
}

struct Canvas {
    scale: f64,
    half: f64,
}

impl Canvas {
    fn x(&self, v: &Rational) -> String {
        format!("{:.3}", self.half + v.to_f64() * self.scale)
    }

    fn y(&self, v: &Rational) -> String {
        format!("{:.3}", self.half - v.to_f64() * self.scale)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders complexes in `R^2`, later layers on top.
pub fn render_svg(layers: &[Layer], opts: &SvgOptions) -> Result<String> {
    if let Some(l) = layers.iter().find(|l| l.complex.ambient_dim() != 2) {
        return Err(Error::DimensionMismatch(format!("can only draw complexes in R^2, got R^{}", l.complex.ambient_dim())));
    }
    if !opts.extent.is_positive() {
        return Err(Error::InvalidInput("the window extent must be positive".into()));
    }
    let size = opts.size_px as f64;
    let cv = Canvas { scale: size / (2.0 * opts.extent.to_f64()), half: size / 2.0 };
    let mut out = String::new();
    let px = opts.size_px;
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{px}" height="{px}" viewBox="0 0 {px} {px}">"#).unwrap();
    if let Some(t) = &opts.title {
        writeln!(out, "  <title>{}</title>", escape(t)).unwrap();
    }
    writeln!(out, r##"  <rect x="0" y="0" width="{px}" height="{px}" fill="#ffffff"/>"##).unwrap();
    let zero = Rational::zero();
    let (e, me) = (opts.extent.clone(), -&opts.extent);
    writeln!(
        out,
        r##"  <g stroke="#bbbbbb" stroke-width="1"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"##,
        cv.x(&me),
        cv.y(&zero),
        cv.x(&e),
        cv.y(&zero),
        cv.x(&zero),
        cv.y(&me),
        cv.x(&zero),
        cv.y(&e)
    )
    .unwrap();
    let mut colour = 0;
    for layer in layers {
        writeln!(out, "  <g>").unwrap();
        let mut labels = Vec::new();
        for (cell, label) in layer.complex.iter() {
            let vs = clipped_vertices(cell, &opts.extent);
            if vs.is_empty() {
                continue;
            }
            match cell.dimension() {
                2 => {
                    let fill = layer.fill.clone().unwrap_or_else(|| {
                        colour += 1;
                        PALETTE[(colour - 1) % PALETTE.len()].to_string()
                    });
                    let pts: Vec<String> = vs.iter().map(|v| format!("{},{}", cv.x(&v[0]), cv.y(&v[1]))).collect();
                    writeln!(out, r#"    <polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="none"/>"#, pts.join(" ")).unwrap();
                }
                1 => {
                    let (a, b) = (&vs[0], &vs[vs.len() - 1]);
                    writeln!(
                        out,
                        r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/>"#,
                        cv.x(&a[0]),
                        cv.y(&a[1]),
                        cv.x(&b[0]),
                        cv.y(&b[1]),
                        layer.stroke,
                        layer.stroke_width
                    )
                    .unwrap();
                }
                _ => {
                    writeln!(out, r#"    <circle cx="{}" cy="{}" r="3" fill="{}"/>"#, cv.x(&vs[0][0]), cv.y(&vs[0][1]), layer.stroke).unwrap();
                }
            }
            if let (true, Some(l)) = (layer.show_labels, label) {
                let n = Rational::from_integer(vs.len() as i64);
                let c0 = vs.iter().fold(Rational::zero(), |s, v| &s + &v[0]) / n.clone();
                let c1 = vs.iter().fold(Rational::zero(), |s, v| &s + &v[1]) / n;
                labels.push((c0, c1, l.to_string()));
            }
        }
        for (x, y, l) in labels {
            writeln!(out, r#"    <text x="{}" y="{}" font-size="11" font-family="monospace">{}</text>"#, cv.x(&x), cv.y(&y), escape(&l)).unwrap();
        }
        writeln!(out, "  </g>").unwrap();
    }
    for (p, text) in &opts.annotations {
        if p.len() != 2 {
            return Err(Error::DimensionMismatch("annotation points live in R^2".into()));
        }
        writeln!(out, r#"  <text x="{}" y="{}" font-size="16" font-weight="bold" font-family="serif">{}</text>"#, cv.x(&p[0]), cv.y(&p[1]), escape(text))
            .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn tripod() -> PolyhedralComplex {
        let mut c = PolyhedralComplex::new(2);
        let ray = |cs: Vec<LinConstraint>| Polyhedron::new(2, cs).unwrap();
        c.push(
            ray(vec![
                LinConstraint::from_ints(&[1, 0], 0, crate::polyhedra::Relation::Eq),
                LinConstraint::from_ints(&[0, -1], 0, crate::polyhedra::Relation::Le),
            ]),
            Some("N".into()),
        )
        .unwrap();
        c.push(
            ray(vec![
                LinConstraint::from_ints(&[0, 1], 0, crate::polyhedra::Relation::Eq),
                LinConstraint::from_ints(&[-1, 0], 0, crate::polyhedra::Relation::Le),
            ]),
            Some("E".into()),
        )
        .unwrap();
        c
    }

    #[test]
    fn clipping_a_quadrant() {
        let quadrant = Polyhedron::new(
            2,
            vec![LinConstraint::from_ints(&[-1, 0], 0, crate::polyhedra::Relation::Le), LinConstraint::from_ints(&[0, -1], 0, crate::polyhedra::Relation::Le)],
        )
        .unwrap();
        let vs = clipped_vertices(&quadrant, &q(2, 1));
        assert_eq!(vs.len(), 4);
        assert!(vs.contains(&[q(2, 1), q(2, 1)]));
        assert!(vs.contains(&[q(0, 1), q(0, 1)]));
    }

    #[test]
    fn deterministic_and_labelled() {
        let layers = [Layer::new(tripod())];
        let a = render_svg(&layers, &SvgOptions::default()).unwrap();
        let b = render_svg(&layers, &SvgOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<line").count(), 4);
        assert!(a.contains(">N</text>"));
    }

    #[test]
    fn empty_complex_draws_axes() {
        let svg = render_svg(&[Layer::new(PolyhedralComplex::new(2))], &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches("<line").count(), 2);
        assert!(!svg.contains("<polygon"));
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        assert!(matches!(render_svg(&[Layer::new(PolyhedralComplex::new(3))], &SvgOptions::default()), Err(Error::DimensionMismatch(_))));
    }
}
