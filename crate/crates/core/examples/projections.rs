//! Singular 3x3 matrices: every maximal cone of `Trop(det)` is horizontal for
//! some projection forgetting one entry, so the nine inverses together are
//! tropically surjective.

use tropcover::constructions::{horizontal_cover_report, projection_inverse_linear};
use tropcover::laurent::parse_poly;
use tropcover::tropical::{trop_hypersurface, tropicalize_poly};

fn main() -> tropcover::Result<()> {
    let vars: Vec<String> = (1..=3).flat_map(|i| (1..=3).map(move |j| format!("m{i}{j}"))).collect();
    let det = parse_poly("m11*m22*m33 + m12*m23*m31 + m13*m21*m32 - m13*m22*m31 - m11*m23*m32 - m12*m21*m33", &vars)?;
    let x = trop_hypersurface(&tropicalize_poly(&det)?);
    let specs = (0..9).map(|k| projection_inverse_linear(&det, k, &vars)).collect::<tropcover::Result<Vec<_>>>()?;
    println!("forgetting m11: m11 = {}", specs[0].inverse.fmt_components()[0]);

    let rep = horizontal_cover_report(&x, &specs)?;
    for c in &rep.cells {
        let which: Vec<&str> = c.horizontal_for.iter().map(|&s| rep.specs[s].as_str()).collect();
        println!("cone {:2}: horizontal for {}", c.cell, which.join(", "));
    }
    println!("cones horizontal for none: {:?}; all confirmed by covers(): {}", rep.uncovered, rep.all_confirmed);
    Ok(())
}
