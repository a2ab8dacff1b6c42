//! Linearity cells of a tropicalised map and its image, as JSON.

use tropcover::laurent::parse_map;
use tropcover::scenarios::io::MapImageJson;
use tropcover::tropical::{linearity_complex, pl_image, tropicalize_map};

fn main() -> tropcover::Result<()> {
    let phi = parse_map("name: nodal\nvars: s\ns^2 - 1\ns^3 - s + t")?;
    let pl = linearity_complex(&tropicalize_map(&phi)?)?;
    for (cell, affine) in &pl.cells {
        println!("on {}: {:?} x + {:?}", cell.minimized().fmt_constraints(), affine.matrix, affine.offset);
    }
    let image = pl_image(&pl);
    println!("{}", serde_json::to_string_pretty(&MapImageJson::new(&phi, &pl, image))?);
    Ok(())
}
