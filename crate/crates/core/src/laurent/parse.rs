//! Text formats for polynomials and maps.
//!
//! A map file holds one component per line. An optional `vars: a, b, c`
//! line fixes the variable order (otherwise variables are numbered by first
//! appearance) and an optional `name: …` line names the map. Lines starting
//! with `#` are comments.

use super::map::RationalMap;
use super::poly::LaurentPoly;
use super::rational_fn::RationalFunction;
use crate::error::{Error, Result};
use crate::expr::Expr;

fn eval(e: &Expr, vars: &[String]) -> Result<RationalFunction> {
    let n = vars.len();
    if !e.has_vars() {
        return Ok(RationalFunction::constant(n, e.eval_scalar()?));
    }
    Ok(match e {
        Expr::Var(v) => {
            let j = vars.iter().position(|x| x == v).ok_or_else(|| Error::Parse(format!("unknown variable `{v}`")))?;
            RationalFunction::var(n, j)
        }
        Expr::Neg(a) => eval(a, vars)?.neg(),
        Expr::Add(a, b) => eval(a, vars)?.add(&eval(b, vars)?),
        Expr::Sub(a, b) => eval(a, vars)?.sub(&eval(b, vars)?),
        Expr::Mul(a, b) => eval(a, vars)?.mul(&eval(b, vars)?),
        Expr::Div(a, b) => eval(a, vars)?.checked_div(&eval(b, vars)?)?,
        Expr::Pow(a, k) => {
            let k = k.to_i64().filter(|_| k.is_integer()).ok_or_else(|| Error::Parse(format!("variables need integer exponents, got {k}")))?;
            eval(a, vars)?.pow(k)?
        }
        Expr::Num(_) | Expr::Imag | Expr::T => unreachable!("constant subexpressions handled above"),
    })
}

/// Parses a rational function in the given variables.
pub fn parse_rational_function(src: &str, vars: &[String]) -> Result<RationalFunction> {
    eval(&Expr::parse(src)?, vars)
}

/// Parses a Laurent polynomial in the given variables.
pub fn parse_poly(src: &str, vars: &[String]) -> Result<LaurentPoly> {
    let f = parse_rational_function(src, vars)?;
    if !f.is_laurent() {
        return Err(Error::Parse(format!("`{src}` is not a Laurent polynomial")));
    }
    Ok(f.num().clone())
}

struct Header {
    vars: Option<Vec<String>>,
    name: Option<String>,
    bodies: Vec<String>,
}

fn split_header(text: &str) -> Header {
    let mut h = Header { vars: None, name: None, bodies: Vec::new() };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            h.vars = Some(rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect());
        } else if let Some(rest) = line.strip_prefix("name:") {
            h.name = Some(rest.trim().to_string());
        } else {
            h.bodies.push(line.to_string());
        }
    }
    h
}

fn resolve_vars(h: &Header) -> Result<Vec<String>> {
    if let Some(v) = &h.vars {
        for name in v {
            if name == "t" || name == "i" {
                return Err(Error::Parse(format!("`{name}` is reserved and cannot be a variable")));
            }
        }
        return Ok(v.clone());
    }
    let mut vars = Vec::new();
    for b in &h.bodies {
        Expr::parse(b)?.collect_vars(&mut vars);
    }
    Ok(vars)
}

/// Parses a map file.
pub fn parse_map(text: &str) -> Result<RationalMap> {
    let h = split_header(text);
    if h.bodies.is_empty() {
        return Err(Error::Parse("map has no components".into()));
    }
    let vars = resolve_vars(&h)?;
    let comps = h.bodies.iter().map(|b| parse_rational_function(b, &vars)).collect::<Result<Vec<_>>>()?;
    let mut map = RationalMap::new(vars.len(), comps)?.with_var_names(vars);
    if let Some(n) = &h.name {
        map = map.with_name(n);
    }
    Ok(map)
}

/// Parses a polynomial file (one polynomial, optional `vars:` line).
/// Returns the polynomial with its variable names.
pub fn parse_poly_file(text: &str) -> Result<(LaurentPoly, Vec<String>)> {
    let h = split_header(text);
    if h.bodies.len() != 1 {
        return Err(Error::Parse(format!("expected exactly one polynomial, found {} lines", h.bodies.len())));
    }
    let vars = resolve_vars(&h)?;
    Ok((parse_poly(&h.bodies[0], &vars)?, vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ValuedScalar;

    #[test]
    fn parses_polynomials() {
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        let p = parse_poly("x - y + 1", &vars).unwrap();
        assert_eq!(p.num_terms(), 3);
        let q = parse_poly("x^-1*y^(2) * t^(1/2)", &vars).unwrap();
        let (e, c) = q.as_monomial().unwrap();
        assert_eq!(e, &vec![-1, 2]);
        assert_eq!(c, &ValuedScalar::t_pow(crate::scalar::q(1, 2)));
        assert!(parse_poly("1/(x + 1)", &vars).is_err());
        assert!(parse_poly("z", &vars).is_err());
        assert!(parse_poly("x^(1/2)", &vars).is_err());
    }

    #[test]
    fn map_files() {
        let m = parse_map("# the line\nname: phi\nvars: x\nx\nx + 1\n").unwrap();
        assert_eq!(m.domain_dim(), 1);
        assert_eq!(m.codomain_dim(), 2);
        assert_eq!(m.name(), Some("phi"));
        let m2 = parse_map("b + a\na").unwrap();
        assert_eq!(m2.vars(), &["b".to_string(), "a".to_string()]);
        assert!(parse_map("vars: t\nt").is_err());
        assert!(parse_map("x - x").is_err());
    }

    #[test]
    fn display_round_trip() {
        let m = parse_map("vars: s, u\n(1 + s)/(u - s)\n(2*t^(1/2) + i)*s^2*u^-1 - 3/2").unwrap();
        let text = format!("vars: s, u\n{}", m.fmt_components().join("\n"));
        let m2 = parse_map(&text).unwrap();
        assert_eq!(m, m2);
    }
}
