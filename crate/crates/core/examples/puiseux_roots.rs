//! Puiseux expansions of the roots of polynomials in `S` over `K`, with the
//! valuation of the residual after each term.

use tropcover::constructions::{eval_at, puiseux_roots, upoly_coefficients};
use tropcover::laurent::parse_poly;

fn main() -> tropcover::Result<()> {
    for src in ["S^2 - t", "S^2 + S + t", "S^3 - t*S + t^2", "S^2 + 1 + t"] {
        let poly = parse_poly(src, &["S".to_string()])?;
        let p = upoly_coefficients(&poly)?;
        println!("{src}");
        for r in puiseux_roots(&p, 4)? {
            let residuals: Vec<String> =
                (1..=r.series.num_terms()).map(|j| eval_at(&p, &r.series.first_terms(j)).min_exp().map_or("exact".into(), |v| v.to_string())).collect();
            println!("  {}  residual valuations {}", r.series, residuals.join(", "));
        }
    }
    Ok(())
}
