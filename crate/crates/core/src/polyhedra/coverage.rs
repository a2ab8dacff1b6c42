//! Deciding whether a union of polyhedra covers another.
//!
//! Each target cell is handled in coordinates on its affine hull, where it
//! is full-dimensional. Cover cells that meet it in lower dimension cannot
//! matter (a finite union of closed sets of lower dimension has empty
//! relative interior), so only full-dimensional intersections are
//! subtracted, as unions of closed pieces `{c_k ≥ b_k, c_j ≤ b_j (j < k)}`.
//! Whatever full-dimensional piece survives yields an uncovered witness.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complex::PolyhedralComplex;
use super::lp::{maximize, LpOutcome, Row};
use super::polyhedron::{AffineChart, LinConstraint, Polyhedron, Relation};
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CellStatus {
    Empty,
    Covered,
    Uncovered { pieces: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCoverage {
    pub cell: usize,
    pub dim: i64,
    #[serde(flatten)]
    pub status: CellStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub covered: bool,
    pub per_cell: Vec<CellCoverage>,
    pub witnesses: Vec<Vec<Rational>>,
}

impl CoverageReport {
    pub fn uncovered_cells(&self) -> Vec<usize> {
        self.per_cell.iter().filter(|c| matches!(c.status, CellStatus::Uncovered { .. })).map(|c| c.cell).collect()
    }
}

/// Interior point of `{z : rows}` if it is full-dimensional.
fn interior_point(d: usize, rows: &[Row]) -> Option<Vec<Rational>> {
    let mut le: Vec<Row> = rows
        .iter()
        .map(|(a, b)| {
            let mut a2 = a.clone();
            a2.push(Rational::one());
            (a2, b.clone())
        })
        .collect();
    let mut cap = vec![Rational::zero(); d + 1];
    cap[d] = Rational::one();
    le.push((cap.clone(), Rational::one()));
    match maximize(&cap, &le, &[]) {
        LpOutcome::Optimal { value, mut point } if value.is_positive() => {
            point.pop();
            Some(point)
        }
        _ => None,
    }
}

fn strictly_inside(rows: &[Row], z: &[Rational]) -> bool {
    rows.iter().all(|(a, b)| crate::linalg::dot(a, z) < *b)
}

/// Restricts a cover cell to the chart. `None` when its intersection with
/// the affine hull is empty or lower-dimensional for sure.
fn restrict_cover(chart: &AffineChart, cell: &Polyhedron) -> Option<Vec<Row>> {
    let mut rows = Vec::new();
    for c in cell.constraints() {
        let r = chart.restrict(c);
        if r.is_trivial() {
            if r.trivially_true() {
                continue;
            }
            return None;
        }
        if r.relation == Relation::Eq {
            return None;
        }
        rows.push((r.normal, r.offset));
    }
    Some(rows)
}

fn negate(row: &Row) -> Row {
    (row.0.iter().map(|x| -x).collect(), -&row.1)
}

fn cover_one(cell: &Polyhedron, cover: &PolyhedralComplex) -> (CellStatus, Vec<Vec<Rational>>) {
    let Ok(chart) = cell.affine_chart() else {
        return (CellStatus::Empty, Vec::new());
    };
    let d = chart.dim();
    let implicit = cell.implicit_equalities();
    let base: Vec<Row> = cell
        .constraints()
        .iter()
        .filter(|c| c.relation == Relation::Le && !implicit.iter().any(|e| e.normal == c.normal && e.offset == c.offset))
        .map(|c| chart.restrict(c))
        .filter(|c| !c.is_trivial())
        .map(|c| (c.normal, c.offset))
        .collect();
    let relevant: Vec<Vec<Row>> = cover
        .cells()
        .iter()
        .filter_map(|c| restrict_cover(&chart, c))
        .filter(|rows| {
            let mut all = base.clone();
            all.extend(rows.iter().cloned());
            interior_point(d, &all).is_some()
        })
        .collect();
    let mut pieces: Vec<Vec<Row>> = vec![base];
    for c in &relevant {
        let mut next = Vec::new();
        for q in pieces {
            let mut meet = q.clone();
            meet.extend(c.iter().cloned());
            if interior_point(d, &meet).is_none() {
                next.push(q);
                continue;
            }
            for k in 0..c.len() {
                let mut piece = q.clone();
                piece.extend(c[..k].iter().cloned());
                piece.push(negate(&c[k]));
                if interior_point(d, &piece).is_some() {
                    next.push(piece);
                }
            }
        }
        pieces = next;
        if pieces.is_empty() {
            break;
        }
    }
    if pieces.is_empty() {
        return (CellStatus::Covered, Vec::new());
    }
    let witnesses = pieces.iter().map(|p| witness(&chart, p, cover)).collect();
    (CellStatus::Uncovered { pieces: pieces.len() }, witnesses)
}

/// An interior point of the piece, nudged off any lower-dimensional cover
/// cell it happens to hit.
fn witness(chart: &AffineChart, piece: &[Row], cover: &PolyhedralComplex) -> Vec<Rational> {
    let d = chart.dim();
    let z = interior_point(d, piece).expect("piece is full-dimensional");
    let x = chart.lift(&z);
    if !cover.membership(&x) {
        return x;
    }
    let dir: Vec<Rational> = (0..d).map(|k| Rational::from_integer(k as i64 + 1)).collect();
    let mut eps = Rational::new(1, 2);
    for _ in 0..64 {
        let z2: Vec<Rational> = z.iter().zip(&dir).map(|(a, b)| a + &(b * &eps)).collect();
        if strictly_inside(piece, &z2) {
            let x2 = chart.lift(&z2);
            if !cover.membership(&x2) {
                return x2;
            }
        }
        eps = &eps / &Rational::from_integer(2);
    }
    x
}

/// Decides `target ⊆ cover` cellwise. Target cells are processed in
/// parallel; the report preserves cell order.
pub fn covers(target: &PolyhedralComplex, cover: &PolyhedralComplex) -> Result<CoverageReport> {
    if target.ambient_dim() != cover.ambient_dim() {
        return Err(Error::DimensionMismatch(format!("target in R^{}, cover in R^{}", target.ambient_dim(), cover.ambient_dim())));
    }
    let results: Vec<(CellStatus, Vec<Vec<Rational>>)> = target.cells().par_iter().map(|c| cover_one(c, cover)).collect();
    let mut per_cell = Vec::new();
    let mut witnesses = Vec::new();
    for (i, (status, w)) in results.into_iter().enumerate() {
        per_cell.push(CellCoverage { cell: i, dim: target.cells()[i].dimension(), status });
        witnesses.extend(w);
    }
    Ok(CoverageReport { covered: witnesses.is_empty(), per_cell, witnesses })
}

/// Splits `p` by hyperplanes into the full-dimensional (relative to `p`)
/// cells of the induced arrangement.
pub fn arrangement_subdivide(p: &Polyhedron, hyperplanes: &[LinConstraint]) -> Vec<Polyhedron> {
    let d = p.dimension();
    if d < 0 {
        return Vec::new();
    }
    let mut pieces = vec![p.clone()];
    for h in hyperplanes {
        let mut next = Vec::new();
        for q in pieces {
            let lower = q.with_constraint(LinConstraint::le(h.normal.clone(), h.offset.clone()));
            let upper = q.with_constraint(LinConstraint::ge(h.normal.clone(), h.offset.clone()));
            if lower.dimension() == d && upper.dimension() == d {
                next.push(lower);
                next.push(upper);
            } else {
                next.push(q);
            }
        }
        pieces = next;
    }
    pieces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn c(a: &[i64], b: i64, rel: Relation) -> LinConstraint {
        LinConstraint::from_ints(a, b, rel)
    }

    fn square() -> Polyhedron {
        Polyhedron::new(2, vec![c(&[1, 0], 1, Relation::Le), c(&[-1, 0], 0, Relation::Le), c(&[0, 1], 1, Relation::Le), c(&[0, -1], 0, Relation::Le)]).unwrap()
    }

    /// Area of a bounded 2-dimensional polygon by vertex enumeration.
    fn area(p: &Polyhedron) -> Rational {
        let cs = p.constraints();
        let mut verts: Vec<Vec<Rational>> = Vec::new();
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                let m = vec![cs[i].normal.clone(), cs[j].normal.clone()];
                if crate::linalg::determinant(&m).is_zero() {
                    continue;
                }
                let v = crate::linalg::solve(&m, &[cs[i].offset.clone(), cs[j].offset.clone()]).unwrap();
                if p.contains(&v) && !verts.contains(&v) {
                    verts.push(v);
                }
            }
        }
        let cx: Rational = verts.iter().map(|v| v[0].clone()).sum::<Rational>() / Rational::from_integer(verts.len() as i64);
        let cy: Rational = verts.iter().map(|v| v[1].clone()).sum::<Rational>() / Rational::from_integer(verts.len() as i64);
        verts.sort_by(|a, b| {
            let ang = |v: &Vec<Rational>| (v[1].to_f64() - cy.to_f64()).atan2(v[0].to_f64() - cx.to_f64());
            ang(a).partial_cmp(&ang(b)).unwrap()
        });
        let mut s = Rational::zero();
        for k in 0..verts.len() {
            let a = &verts[k];
            let b = &verts[(k + 1) % verts.len()];
            s = s + (&a[0] * &b[1] - &a[1] * &b[0]);
        }
        s.abs() / Rational::from_integer(2)
    }

    #[test]
    fn subdivision_examples() {
        let diag = c(&[1, -1], 0, Relation::Eq);
        let pieces = arrangement_subdivide(&square(), &[diag]);
        assert_eq!(pieces.len(), 2);
        let total: Rational = pieces.iter().map(area).sum();
        assert_eq!(total, area(&square()));
        assert_eq!(area(&square()), q(1, 1));
        let far = c(&[1, 0], 5, Relation::Eq);
        assert_eq!(arrangement_subdivide(&square(), &[far]).len(), 1);
        let axes = [c(&[1, 0], 0, Relation::Eq), c(&[0, 1], 0, Relation::Eq)];
        assert_eq!(arrangement_subdivide(&Polyhedron::universe(2), &axes).len(), 4);
    }

    #[test]
    fn covering_a_square_by_triangles() {
        let lower = square().with_constraint(c(&[-1, 1], 0, Relation::Le));
        let upper = square().with_constraint(c(&[1, -1], 0, Relation::Le));
        let target = PolyhedralComplex::from_cells(2, vec![square()]).unwrap();
        let both = PolyhedralComplex::from_cells(2, vec![lower.clone(), upper]).unwrap();
        assert!(covers(&target, &both).unwrap().covered);
        let one = PolyhedralComplex::from_cells(2, vec![lower.clone()]).unwrap();
        let r = covers(&target, &one).unwrap();
        assert!(!r.covered);
        assert_eq!(r.witnesses.len(), 1);
        assert!(square().contains(&r.witnesses[0]) && !lower.contains(&r.witnesses[0]));
    }

    #[test]
    fn lower_dimensional_targets_and_covers() {
        // a segment on the x-axis covered by two half-planes meeting along a line
        let seg = Polyhedron::new(2, vec![c(&[0, 1], 0, Relation::Eq), c(&[1, 0], 1, Relation::Le), c(&[-1, 0], 1, Relation::Le)]).unwrap();
        let left = Polyhedron::new(2, vec![c(&[1, 0], 0, Relation::Le)]).unwrap();
        let right_line = Polyhedron::new(2, vec![c(&[0, 1], 0, Relation::Eq), c(&[-1, 0], 0, Relation::Le)]).unwrap();
        let target = PolyhedralComplex::from_cells(2, vec![seg]).unwrap();
        let cover = PolyhedralComplex::from_cells(2, vec![left.clone(), right_line]).unwrap();
        assert!(covers(&target, &cover).unwrap().covered);
        let r = covers(&target, &PolyhedralComplex::from_cells(2, vec![left]).unwrap()).unwrap();
        assert!(!r.covered);
        assert!(r.witnesses[0][0].is_positive() && r.witnesses[0][1].is_zero());
        // a point
        let pt = PolyhedralComplex::from_cells(2, vec![Polyhedron::point(&[q(3, 1), q(0, 1)])]).unwrap();
        assert!(covers(&pt, &cover).unwrap().covered);
    }

    #[test]
    fn empty_targets_are_covered() {
        let target = PolyhedralComplex::from_cells(2, vec![Polyhedron::empty(2)]).unwrap();
        let r = covers(&target, &PolyhedralComplex::new(2)).unwrap();
        assert!(r.covered);
        assert_eq!(r.per_cell[0].status, CellStatus::Empty);
        assert!(covers(&target, &PolyhedralComplex::new(3)).is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn random_polyhedron() -> impl Strategy<Value = Polyhedron> {
        prop::collection::vec((prop::collection::vec(-3i64..=3, 2), -2i64..=4), 1..5)
            .prop_map(|rows| Polyhedron::new(2, rows.iter().map(|(a, b)| LinConstraint::from_ints(a, *b, Relation::Le)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn a_split_polyhedron_is_covered_by_its_halves(p in random_polyhedron(), h in prop::collection::vec(-3i64..=3, 2), b in -3i64..=3) {
            let target = PolyhedralComplex::from_cells(2, vec![p.clone()]).unwrap();
            prop_assert!(covers(&target, &target).unwrap().covered);
            let neg: Vec<i64> = h.iter().map(|x| -x).collect();
            let halves = vec![
                p.with_constraint(LinConstraint::from_ints(&h, b, Relation::Le)),
                p.with_constraint(LinConstraint::from_ints(&neg, -b, Relation::Le)),
            ];
            let cover = PolyhedralComplex::from_cells(2, halves.clone()).unwrap();
            prop_assert!(covers(&target, &cover).unwrap().covered);
            let one = PolyhedralComplex::from_cells(2, vec![halves[0].clone()]).unwrap();
            let r = covers(&target, &one).unwrap();
            prop_assert_eq!(r.covered, halves[0].same_set(&p));
            for w in &r.witnesses {
                prop_assert!(p.contains(w) && !halves[0].contains(w));
            }
        }
    }
}
