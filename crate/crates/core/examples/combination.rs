//! The Combination Lemma: one reparameterisation whose tropical image
//! contains those of two given ones.

use tropcover::constructions::combine_reparams;
use tropcover::laurent::{compose_maps, parse_map, RationalMap};
use tropcover::polyhedra::{covers, PolyhedralComplex};
use tropcover::tropical::{linearity_complex, pl_image, tropicalize_map};

fn image(m: &RationalMap) -> tropcover::Result<PolyhedralComplex> {
    Ok(pl_image(&linearity_complex(&tropicalize_map(m)?)?))
}

fn main() -> tropcover::Result<()> {
    let phi = parse_map("name: phi\nvars: x\nx\nx + 1")?;
    let a1 = parse_map("vars: s\n2*t*s^2 - 1")?;
    let a2 = parse_map("vars: s\n-3*s^-1 + 2")?;
    let (alpha, deg) = combine_reparams(&phi, &a1, &a2)?;
    println!("alpha on {} variables (d = {}, e = {})", alpha.domain_dim(), deg.d, deg.e);
    for c in alpha.fmt_components() {
        println!("  {c}");
    }
    let big = image(&compose_maps(&phi, &alpha)?)?;
    for (k, a) in [&a1, &a2].into_iter().enumerate() {
        let small = image(&compose_maps(&phi, a)?)?;
        println!("im Trop(phi . alpha{}) inside: {}", k + 1, covers(&small, &big)?.covered);
    }
    Ok(())
}
