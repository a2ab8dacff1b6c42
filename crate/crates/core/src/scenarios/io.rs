//! File formats shared by the CLI and the examples.
//!
//! Maps and polynomials use the text format of [`crate::laurent::parse_map`];
//! complexes, tropical polynomials and reports are JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::report::SCHEMA;
use crate::error::{Error, Result};
use crate::laurent::{parse_poly_file, RationalMap};
use crate::polyhedra::{AffineMapQ, PolyhedralComplex, Polyhedron};
use crate::scalar::Rational;
use crate::tropical::{tropicalize_poly, PLMap, TropHypersurface, TropPoly};

/// `{"num_vars": n, "terms": [[exponent, valuation], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TropPolyJson {
    pub num_vars: usize,
    pub terms: Vec<(Vec<i64>, Rational)>,
}

impl From<&TropPoly> for TropPolyJson {
    fn from(p: &TropPoly) -> Self {
        TropPolyJson { num_vars: p.num_vars(), terms: p.term_list() }
    }
}

impl TryFrom<TropPolyJson> for TropPoly {
    type Error = Error;

    fn try_from(j: TropPolyJson) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, v) in j.terms {
            // a repeated exponent keeps the smaller valuation
            let slot = terms.entry(e).or_insert_with(|| v.clone());
            if v < *slot {
                *slot = v;
            }
        }
        TropPoly::new(j.num_vars, terms)
    }
}

/// Reads either a JSON tropical polynomial or a polynomial text file.
pub fn read_trop_poly(text: &str) -> Result<(TropPoly, Vec<String>)> {
    if text.trim_start().starts_with('{') {
        let p: TropPoly = serde_json::from_str::<TropPolyJson>(text)?.try_into()?;
        let vars = (0..p.num_vars()).map(|i| format!("x{i}")).collect();
        Ok((p, vars))
    } else {
        let (f, vars) = parse_poly_file(text)?;
        Ok((tropicalize_poly(&f)?, vars))
    }
}

pub fn read_complex(text: &str) -> Result<PolyhedralComplex> {
    Ok(serde_json::from_str(text)?)
}

/// A map in the text format accepted by `parse_map`.
pub fn map_to_text(m: &RationalMap) -> String {
    let mut s = String::new();
    if let Some(n) = m.name() {
        s.push_str(&format!("name: {n}\n"));
    }
    s.push_str(&format!("vars: {}\n", m.vars().join(", ")));
    for c in m.fmt_components() {
        s.push_str(&c);
        s.push('\n');
    }
    s
}

fn fmt_linear_form(row: &[Rational], offset: &Rational, vars: &[&str]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (c, v) in row.iter().zip(vars) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if mag.is_one() { v.to_string() } else { format!("{mag}{v}") };
        parts.push(if c.is_negative() { format!("-{body}") } else { format!("+{body}") });
    }
    if !offset.is_zero() || parts.is_empty() {
        parts.push(if offset.is_negative() { format!("-{}", offset.abs()) } else { format!("+{offset}") });
    }
    let joined = parts.join(" ").replace(" +", " + ").replace(" -", " - ");
    joined.strip_prefix('+').map(str::to_string).unwrap_or(joined)
}

/// `(2s - u, u + 1)` style rendering of an affine map.
pub fn fmt_affine(a: &AffineMapQ, vars: &[&str]) -> String {
    let comps: Vec<String> = a.matrix.iter().zip(&a.offset).map(|(r, b)| fmt_linear_form(r, b, vars)).collect();
    format!("({})", comps.join(", "))
}

#[derive(Clone, Debug, Serialize)]
pub struct HypersurfaceJson {
    pub schema: &'static str,
    pub vars: Vec<String>,
    pub polynomial: TropPolyJson,
    /// `"(a)|(b)"`: the pair of exponents tied on each maximal cell.
    pub cell_labels: Vec<String>,
    pub complex: PolyhedralComplex,
}

impl HypersurfaceJson {
    pub fn new(p: &TropPoly, vars: Vec<String>, x: &TropHypersurface) -> Self {
        let cell_labels = (0..x.complex.len()).map(|k| x.complex.label(k).unwrap_or("").to_string()).collect();
        HypersurfaceJson { schema: SCHEMA, vars, polynomial: p.into(), cell_labels, complex: x.complex.clone() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearityCellJson {
    pub region: Polyhedron,
    pub map: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapImageJson {
    pub schema: &'static str,
    pub map: String,
    pub linearity_cells: Vec<LinearityCellJson>,
    pub image: PolyhedralComplex,
}

impl MapImageJson {
    pub fn new(m: &RationalMap, pl: &PLMap, image: PolyhedralComplex) -> Self {
        let vars: Vec<&str> = m.vars().iter().map(String::as_str).collect();
        let linearity_cells = pl.cells.iter().map(|(p, a)| LinearityCellJson { region: p.clone(), map: fmt_affine(a, &vars) }).collect();
        MapImageJson { schema: SCHEMA, map: map_to_text(m), linearity_cells, image }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_map;
    use crate::scalar::q;

    #[test]
    fn affine_forms() {
        let a = AffineMapQ::new(vec![vec![q(2, 1), q(-1, 1)], vec![q(0, 1), q(0, 1)], vec![q(-1, 2), q(0, 1)]], vec![q(0, 1), q(3, 1), q(-1, 1)]);
        assert_eq!(fmt_affine(&a, &["s", "u"]), "(2s - u, 3, -1/2s - 1)");
    }

    #[test]
    fn map_text_round_trip() {
        let m = parse_map("name: psi\nvars: s, u\n(1 + s)/(u - s)\nt^(1/3)*s*u^-2 + i").unwrap();
        assert_eq!(parse_map(&map_to_text(&m)).unwrap(), m);
    }

    #[test]
    fn trop_poly_json() {
        let (p, vars) = read_trop_poly("vars: x, y\nx + t*y + 1").unwrap();
        assert_eq!(vars, vec!["x", "y"]);
        let json = serde_json::to_string(&TropPolyJson::from(&p)).unwrap();
        let (back, _) = read_trop_poly(&json).unwrap();
        assert_eq!(back, p);
        assert!(read_trop_poly(r#"{"num_vars": 2, "terms": []}"#).is_err());
    }
}
