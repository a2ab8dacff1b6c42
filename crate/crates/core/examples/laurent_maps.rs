//! Rational maps over `K = Q(i){{t}}`: parsing, composition, substitution and
//! homogenisation.

use tropcover::laurent::{compose_maps, dehomogenize_map, homogenize_map, min_homogenization_degree, parse_map, parse_poly, substitute};

fn main() -> tropcover::Result<()> {
    let phi = parse_map("name: phi\nvars: a, b\na + t^(1/2)*b\na*b^-1\n(a - i*b)/(a + b)")?;
    println!("phi = ({})", phi.fmt_components().join(", "));

    let alpha = parse_map("vars: s\ns^2\n1 - s")?;
    let composed = compose_maps(&phi, &alpha)?;
    println!("phi . alpha = ({})", composed.fmt_components().join(", "));

    let f = parse_poly("y - x^2", &["x".to_string(), "y".to_string()])?;
    let curve = parse_map("vars: s\ns\ns^2")?;
    println!("y - x^2 on (s, s^2): {}", substitute(&f, curve.components())?.is_zero());

    let d = min_homogenization_degree(&phi);
    let tilde = homogenize_map(&phi, d)?;
    println!("degree {d} homogenisation: ({})", tilde.fmt_components().join(", "));
    println!("dehomogenises back: {}", dehomogenize_map(&tilde)?.equivalent(&phi));
    Ok(())
}
