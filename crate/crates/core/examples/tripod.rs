//! The line `y = x + 1`: its tripod, and two parameterisations of which only
//! one is tropically surjective.

use tropcover::laurent::{parse_map, parse_poly};
use tropcover::polyhedra::covers;
use tropcover::tropical::{linearity_complex, pl_image, trop_hypersurface, tropicalize_map, tropicalize_poly};

fn main() -> tropcover::Result<()> {
    let vars = vec!["x".to_string(), "y".to_string()];
    let f = parse_poly("x - y + 1", &vars)?;
    let tripod = trop_hypersurface(&tropicalize_poly(&f)?);
    for (cell, pair) in tripod.complex.cells().iter().zip(&tripod.pair_labels) {
        println!("ray {} where terms {:?} and {:?} tie", cell.minimized().fmt_constraints(), pair.0, pair.1);
    }

    for src in ["name: phi\nvars: x\nx\nx + 1", "name: psi\nvars: s, u\n(1 + s)/(u - s)\n(1 + u)/(u - s)"] {
        let phi = parse_map(src)?;
        let image = pl_image(&linearity_complex(&tropicalize_map(&phi)?)?);
        let r = covers(&tripod.complex, &image)?;
        println!("{}: covers the tripod = {}, witnesses {:?}", phi.name().unwrap_or("?"), r.covered, r.witnesses);
    }
    Ok(())
}
