//! The tropicalisation of a plane in `K^4` from its circuits, and the
//! Yu–Yuster map whose tropical image is exactly that fan.

use tropcover::constructions::yu_yuster_param;
use tropcover::linalg::nullspace;
use tropcover::polyhedra::covers;
use tropcover::scalar::{Rational, ValuedScalar};
use tropcover::tropical::{linearity_complex, pl_image, trop_linear_space, tropicalize_map};

fn main() -> tropcover::Result<()> {
    let v = |c: &[i64]| c.iter().map(|&x| ValuedScalar::from_integer(x)).collect::<Vec<_>>();
    let mut basis = vec![v(&[1, 1, 1, 0]), v(&[0, 1, 2, 1])];
    basis[1][3] = ValuedScalar::t_pow(Rational::new(1, 2));
    let n = 4;

    let fan = trop_linear_space(&nullspace(&basis, n), n);
    println!("Trop(V): {} maximal cones", fan.len());
    for c in fan.cells() {
        println!("  {}", c.minimized().fmt_constraints());
    }
    let yy = yu_yuster_param(&basis, n)?;
    println!("Yu-Yuster map on {} circuit coordinates", yy.domain_dim());
    let image = pl_image(&linearity_complex(&tropicalize_map(&yy)?)?);
    println!("image covers Trop(V): {}", covers(&fan, &image)?.covered);
    println!("image inside Trop(V): {}", covers(&image, &fan)?.covered);
    Ok(())
}
