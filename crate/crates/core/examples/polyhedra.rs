//! Exact polyhedra: linear programs, projections and coverage of one
//! complex by another.

use tropcover::polyhedra::{covers, AffineMapQ, LinConstraint, LpOutcome, PolyhedralComplex, Polyhedron, Relation};
use tropcover::scalar::Rational;

fn main() -> tropcover::Result<()> {
    // the triangle x, y >= 0, x + 2y <= 4
    let tri = Polyhedron::new(
        2,
        vec![
            LinConstraint::from_ints(&[-1, 0], 0, Relation::Le),
            LinConstraint::from_ints(&[0, -1], 0, Relation::Le),
            LinConstraint::from_ints(&[1, 2], 4, Relation::Le),
        ],
    )?;
    match tri.maximize(&[Rational::one(), Rational::one()]) {
        LpOutcome::Optimal { value, point } => println!("max x + y = {value} at {point:?}"),
        other => println!("{other:?}"),
    }
    let shadow = tri.linear_image(&AffineMapQ::coordinate_projection(2, &[1]));
    println!("projection to y: {}", shadow.fmt_constraints());

    // two halves of the triangle cover it; one half does not
    let lower = tri.with_constraint(LinConstraint::from_ints(&[0, 1], 1, Relation::Le));
    let upper = tri.with_constraint(LinConstraint::from_ints(&[0, -1], -1, Relation::Le));
    let target = PolyhedralComplex::from_cells(2, vec![tri])?;
    let both = PolyhedralComplex::from_cells(2, vec![lower.clone(), upper])?;
    let one = PolyhedralComplex::from_cells(2, vec![lower])?;
    println!("covered by both halves: {}", covers(&target, &both)?.covered);
    let r = covers(&target, &one)?;
    println!("covered by the lower half: {}, witness {:?}", r.covered, r.witnesses.first());
    Ok(())
}
