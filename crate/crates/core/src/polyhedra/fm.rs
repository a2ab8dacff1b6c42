//! Images of polyhedra under affine maps by Fourier–Motzkin elimination.

use super::polyhedron::{prune_redundant, AffineMapQ, LinConstraint, Polyhedron, Relation};
use crate::linalg::{self, dot};
use crate::scalar::Rational;

/// An inequality over the current variables with the set of original rows
/// it was combined from (for Chernikov's rule).
#[derive(Clone)]
struct HRow {
    a: Vec<Rational>,
    b: Rational,
    history: Vec<usize>,
}

/// Eliminates the first `k` variables from `rows` (inequalities `a·v ≤ b`).
fn eliminate(rows: Vec<HRow>, mut k: usize) -> Vec<HRow> {
    let mut rows = rows;
    let mut steps = 0;
    while k > 0 {
        // choose the variable with the smallest product of sign counts
        let j = (0..k)
            .min_by_key(|&j| {
                let p = rows.iter().filter(|r| r.a[j].is_positive()).count();
                let n = rows.iter().filter(|r| r.a[j].is_negative()).count();
                p * n
            })
            .unwrap();
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.a[j].is_positive() {
                pos.push(r);
            } else if r.a[j].is_negative() {
                neg.push(r);
            } else {
                zero.push(r);
            }
        }
        steps += 1;
        let mut next = zero;
        for p in &pos {
            for n in &neg {
                let mut history: Vec<usize> = p.history.iter().chain(&n.history).copied().collect();
                history.sort_unstable();
                history.dedup();
                if history.len() > steps + 1 {
                    continue;
                }
                let fp = -&n.a[j];
                let fnn = p.a[j].clone();
                let a: Vec<Rational> = p.a.iter().zip(&n.a).map(|(x, y)| &(x * &fp) + &(y * &fnn)).collect();
                let b = &(&p.b * &fp) + &(&n.b * &fnn);
                next.push(HRow { a, b, history });
            }
        }
        // drop the eliminated column
        for r in next.iter_mut() {
            r.a.remove(j);
        }
        k -= 1;
        rows = tidy(next);
    }
    rows
}

/// Normalises, removes duplicates and trivial rows, then prunes redundant
/// rows by linear programming.
fn tidy(rows: Vec<HRow>) -> Vec<HRow> {
    let mut out: Vec<HRow> = Vec::with_capacity(rows.len());
    for r in rows {
        let c = LinConstraint::le(r.a.clone(), r.b.clone()).normalized();
        if c.is_trivial() {
            // 0 ≤ b holds on a nonempty input
            continue;
        }
        if let Some(existing) = out.iter_mut().find(|o| o.a == c.normal) {
            if c.offset < existing.b {
                existing.b = c.offset;
                existing.history = r.history;
            }
            continue;
        }
        out.push(HRow { a: c.normal, b: c.offset, history: r.history });
    }
    if out.len() <= 2 {
        return out;
    }
    let cons: Vec<LinConstraint> = out.iter().map(|r| LinConstraint::le(r.a.clone(), r.b.clone())).collect();
    let kept = prune_redundant(cons, &[]);
    out.into_iter().filter(|r| kept.iter().any(|c| c.normal == r.a && c.offset == r.b)).collect()
}

impl Polyhedron {
    /// H-representation of `A(P) + offset`.
    pub fn linear_image(&self, map: &AffineMapQ) -> Polyhedron {
        let k = map.codomain_dim();
        let Ok(chart) = self.affine_chart() else {
            return Polyhedron::empty(k);
        };
        let d = chart.dim();
        let implicit = self.implicit_equalities();
        // inequalities in chart coordinates
        let ineqs: Vec<LinConstraint> = self
            .constraints()
            .iter()
            .filter(|c| c.relation == Relation::Le && !implicit.iter().any(|e| e.normal == c.normal && e.offset == c.offset))
            .map(|c| chart.restrict(c))
            .filter(|c| !c.is_trivial())
            .collect();
        // y = c0 + M z
        let c0 = map.apply(&chart.point);
        let m: Vec<Vec<Rational>> = map.matrix.iter().map(|row| chart.basis.iter().map(|b| dot(row, b)).collect()).collect();
        // rows of [M | -I | -c0] over unknowns (z, y); pivots in z first
        let mut sys: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                let mut r = m[i].clone();
                for j in 0..k {
                    r.push(if i == j { Rational::from_integer(-1) } else { Rational::zero() });
                }
                r.push(-&c0[i]);
                r
            })
            .collect();
        let pivots = linalg::rref(&mut sys);
        let mut result: Vec<LinConstraint> = Vec::new();
        let mut z_pivot_rows: Vec<(usize, usize)> = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            if pc < d {
                z_pivot_rows.push((r, pc));
            } else if pc < d + k {
                // equation purely in y
                result.push(LinConstraint::eq(sys[r][d..d + k].to_vec(), sys[r][d + k].clone()));
            } else {
                unreachable!("image system is consistent");
            }
        }
        let free_z: Vec<usize> = (0..d).filter(|j| !z_pivot_rows.iter().any(|(_, pc)| pc == j)).collect();
        // substitute z_p = rhs - Σ sys[r][free] z_free - Σ sys[r][d+j] y_j
        // variables after substitution: (free z, y)
        let nv = free_z.len() + k;
        let hrows: Vec<HRow> = ineqs
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let mut a = vec![Rational::zero(); nv];
                let mut b = c.offset.clone();
                for (fi, &fz) in free_z.iter().enumerate() {
                    a[fi] = c.normal[fz].clone();
                }
                for &(r, pc) in &z_pivot_rows {
                    let g = &c.normal[pc];
                    if g.is_zero() {
                        continue;
                    }
                    b = &b - &(g * &sys[r][d + k]);
                    for (fi, &fz) in free_z.iter().enumerate() {
                        a[fi] = &a[fi] - &(g * &sys[r][fz]);
                    }
                    for j in 0..k {
                        a[free_z.len() + j] = &a[free_z.len() + j] - &(g * &sys[r][d + j]);
                    }
                }
                HRow { a, b, history: vec![idx] }
            })
            .collect();
        let reduced = eliminate(tidy(hrows), free_z.len());
        for r in reduced {
            result.push(LinConstraint::le(r.a, r.b));
        }
        Polyhedron::new(k, result).expect("consistent dimensions")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn c(a: &[i64], b: i64, rel: Relation) -> LinConstraint {
        LinConstraint::from_ints(a, b, rel)
    }

    #[test]
    fn projections() {
        let square =
            Polyhedron::new(2, vec![c(&[1, 0], 1, Relation::Le), c(&[-1, 0], 0, Relation::Le), c(&[0, 1], 1, Relation::Le), c(&[0, -1], 0, Relation::Le)])
                .unwrap();
        let p = AffineMapQ::coordinate_projection(2, &[0]);
        let img = square.linear_image(&p);
        let unit = Polyhedron::new(1, vec![c(&[1], 1, Relation::Le), c(&[-1], 0, Relation::Le)]).unwrap();
        assert!(img.same_set(&unit));

        let diag_ray = Polyhedron::new(2, vec![c(&[1, -1], 0, Relation::Eq), c(&[-1, 0], 0, Relation::Le)]).unwrap();
        let img = diag_ray.linear_image(&p);
        assert!(img.same_set(&Polyhedron::new(1, vec![c(&[-1], 0, Relation::Le)]).unwrap()));

        let up_ray = Polyhedron::new(2, vec![c(&[1, 0], 0, Relation::Eq), c(&[0, -1], 0, Relation::Le)]).unwrap();
        let img = up_ray.linear_image(&p);
        assert!(img.same_set(&Polyhedron::point(&[q(0, 1)])));
    }

    #[test]
    fn image_with_offset_and_rank_drop() {
        // triangle conv{(0,0),(1,0),(0,1)} under (x,y) ↦ (x+y, 2x+2y) + (1, 0)
        let tri = Polyhedron::new(2, vec![c(&[-1, 0], 0, Relation::Le), c(&[0, -1], 0, Relation::Le), c(&[1, 1], 1, Relation::Le)]).unwrap();
        let a = AffineMapQ::new(vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]], vec![q(1, 1), q(0, 1)]);
        let img = tri.linear_image(&a);
        assert_eq!(img.dimension(), 1);
        assert!(img.contains(&[q(1, 1), q(0, 1)]));
        assert!(img.contains(&[q(2, 1), q(2, 1)]));
        assert!(!img.contains(&[q(3, 1), q(4, 1)]));
        assert!(!img.contains(&[q(2, 1), q(1, 1)]));
    }

    #[test]
    fn image_of_empty_is_empty() {
        assert!(Polyhedron::empty(3).linear_image(&AffineMapQ::identity(3)).is_empty());
    }
}
