//! Exact two-phase simplex over the rationals.
//!
//! Free variables are split as `x = x⁺ − x⁻`. Pivoting uses Dantzig's rule
//! and switches to Bland's rule after a run of degenerate pivots, which
//! rules out cycling.

use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

/// A row `a·x ≤ b` or `a·x = b`.
pub type Row = (Vec<Rational>, Rational);

const DEGENERATE_STREAK: usize = 16;

struct Tableau {
    rows: Vec<Vec<Rational>>, // last entry is the right-hand side
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize, cost: &mut [Rational]) {
        let inv = self.rows[r][c].recip().expect("pivot entry is nonzero");
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let prow = self.rows[r].clone();
        let nz: Vec<usize> = (0..=self.cols).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] = &row[j] - &(&f * &prow[j]);
            }
        }
        if !cost[c].is_zero() {
            let f = cost[c].clone();
            for &j in &nz {
                cost[j] = &cost[j] - &(&f * &prow[j]);
            }
        }
        self.basis[r] = c;
    }

    /// Maximises over the allowed columns; `cost` holds reduced costs with
    /// the negated objective value in position `cols`.
    fn run(&mut self, cost: &mut [Rational], allowed: &[bool]) -> bool {
        let mut streak = 0;
        loop {
            let bland = streak >= DEGENERATE_STREAK;
            let mut enter: Option<usize> = None;
            for j in 0..self.cols {
                if !allowed[j] || !cost[j].is_positive() {
                    continue;
                }
                match enter {
                    None => enter = Some(j),
                    Some(e) if !bland && cost[j] > cost[e] => enter = Some(j),
                    _ => {}
                }
                if bland {
                    break;
                }
            }
            let Some(c) = enter else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, ratio)) = leave else {
                return false;
            };
            if ratio.is_zero() {
                streak += 1;
            } else {
                streak = 0;
            }
            self.pivot(r, c, cost);
        }
    }
}

fn reduced_costs(t: &Tableau, obj: &[Rational]) -> Vec<Rational> {
    let mut cost: Vec<Rational> = obj.to_vec();
    cost.push(Rational::zero());
    for (i, &b) in t.basis.iter().enumerate() {
        if obj[b].is_zero() {
            continue;
        }
        let f = obj[b].clone();
        for j in 0..=t.cols {
            if !t.rows[i][j].is_zero() {
                cost[j] = &cost[j] - &(&f * &t.rows[i][j]);
            }
        }
    }
    cost
}

/// Maximises `objective · x` subject to `le` rows (`a·x ≤ b`) and `eq` rows
/// (`a·x = b`) with `x` free.
pub fn maximize(objective: &[Rational], le: &[Row], eq: &[Row]) -> LpOutcome {
    let n = objective.len();
    let m_le = le.len();
    let m = m_le + eq.len();
    // columns: x⁺ (n), x⁻ (n), slacks (m_le), artificials (≤ m)
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut needs_art = Vec::with_capacity(m);
    for (k, (a, b)) in le.iter().chain(eq.iter()).enumerate() {
        debug_assert_eq!(a.len(), n);
        let flip = b.is_negative();
        let mut row = vec![Rational::zero(); 2 * n + m_le];
        for j in 0..n {
            if !a[j].is_zero() {
                let v = if flip { -&a[j] } else { a[j].clone() };
                row[n + j] = -&v;
                row[j] = v;
            }
        }
        if k < m_le {
            row[2 * n + k] = if flip { Rational::from_integer(-1) } else { Rational::one() };
        }
        row.push(if flip { -b } else { b.clone() });
        needs_art.push(flip || k >= m_le);
        rows.push(row);
    }
    let n_art = needs_art.iter().filter(|&&x| x).count();
    let cols = 2 * n + m_le + n_art;
    let mut basis = Vec::with_capacity(m);
    let mut art = 2 * n + m_le;
    for (k, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().unwrap();
        row.resize(cols, Rational::zero());
        if needs_art[k] {
            row[art] = Rational::one();
            basis.push(art);
            art += 1;
        } else {
            basis.push(2 * n + k);
        }
        row.push(rhs);
    }
    let mut t = Tableau { rows, basis, cols };

    if n_art > 0 {
        let mut obj1 = vec![Rational::zero(); cols];
        for o in obj1.iter_mut().skip(2 * n + m_le) {
            *o = Rational::from_integer(-1);
        }
        let mut cost = reduced_costs(&t, &obj1);
        let allowed = vec![true; cols];
        t.run(&mut cost, &allowed);
        // phase-one optimum is -cost[cols]
        if !cost[cols].is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive artificials out of the basis
        let first_art = 2 * n + m_le;
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_art {
                match (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        let mut dummy = vec![Rational::zero(); cols + 1];
                        t.pivot(i, j, &mut dummy);
                        i += 1;
                    }
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut obj2 = vec![Rational::zero(); cols];
    for j in 0..n {
        obj2[j] = objective[j].clone();
        obj2[n + j] = -&objective[j];
    }
    let mut cost = reduced_costs(&t, &obj2);
    let allowed: Vec<bool> = (0..cols).map(|j| j < 2 * n + m_le).collect();
    if !t.run(&mut cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut y = vec![Rational::zero(); cols];
    for (i, &b) in t.basis.iter().enumerate() {
        y[b] = t.rhs(i).clone();
    }
    let point: Vec<Rational> = (0..n).map(|j| &y[j] - &y[n + j]).collect();
    let value = -&cost[cols];
    LpOutcome::Optimal { value, point }
}

/// Feasibility check returning a feasible point.
pub fn feasible_point(n: usize, le: &[Row], eq: &[Row]) -> Option<Vec<Rational>> {
    match maximize(&vec![Rational::zero(); n], le, eq) {
        LpOutcome::Optimal { point, .. } => Some(point),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn row(a: &[i64], b: i64) -> Row {
        (a.iter().map(|&x| Rational::from_integer(x)).collect(), Rational::from_integer(b))
    }

    fn obj(a: &[i64]) -> Vec<Rational> {
        a.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn box_maximum() {
        let le = [row(&[1, 0], 2), row(&[0, 1], 3), row(&[-1, 0], 0), row(&[0, -1], 0)];
        match maximize(&obj(&[1, 1]), &le, &[]) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(5, 1));
                assert_eq!(point, vec![q(2, 1), q(3, 1)]);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn free_variables_and_negative_rhs() {
        // x ≤ -1, maximise x
        let out = maximize(&obj(&[1]), &[row(&[1], -1)], &[]);
        assert_eq!(out.value(), Some(&q(-1, 1)));
        // minimise x subject to x ≥ -5/2
        let out = maximize(&obj(&[-1]), &[(vec![q(-1, 1)], q(5, 2))], &[]);
        assert_eq!(out.point().unwrap()[0], q(-5, 2));
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(maximize(&obj(&[1]), &[row(&[1], -1), row(&[-1], 0)], &[]), LpOutcome::Infeasible);
        assert_eq!(maximize(&obj(&[1, 0]), &[row(&[0, 1], 0)], &[]), LpOutcome::Unbounded);
        assert_eq!(maximize(&obj(&[0]), &[], &[row(&[0], 1)]), LpOutcome::Infeasible);
    }

    #[test]
    fn equalities() {
        // x + y = 1, x - y = 0 → optimum (1/2, 1/2)
        let out = maximize(&obj(&[1, 0]), &[], &[row(&[1, 1], 1), row(&[1, -1], 0)]);
        assert_eq!(out.point().unwrap(), &[q(1, 2), q(1, 2)]);
        // redundant equality rows
        let out = maximize(&obj(&[1, 1]), &[row(&[1, 0], 4)], &[row(&[1, 1], 1), row(&[2, 2], 2)]);
        assert_eq!(out.value(), Some(&q(1, 1)));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example, which cycles under the textbook rule without anti-cycling
        let le = vec![
            (vec![q(1, 4), q(-8, 1), q(-1, 1), q(9, 1)], q(0, 1)),
            (vec![q(1, 2), q(-12, 1), q(-1, 2), q(3, 1)], q(0, 1)),
            (vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)], q(1, 1)),
            (vec![q(-1, 1), q(0, 1), q(0, 1), q(0, 1)], q(0, 1)),
            (vec![q(0, 1), q(-1, 1), q(0, 1), q(0, 1)], q(0, 1)),
            (vec![q(0, 1), q(0, 1), q(-1, 1), q(0, 1)], q(0, 1)),
            (vec![q(0, 1), q(0, 1), q(0, 1), q(-1, 1)], q(0, 1)),
        ];
        let c = vec![q(3, 4), q(-20, 1), q(1, 2), q(-6, 1)];
        assert_eq!(maximize(&c, &le, &[]).value(), Some(&q(5, 4)));
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn optimum_is_feasible_and_dominates(
            p in prop::collection::vec(-5i64..=5, 3),
            rows in prop::collection::vec((prop::collection::vec(-4i64..=4, 3), 0i64..=3), 1..6),
            c in prop::collection::vec(-3i64..=3, 3),
        ) {
            let q = |x: i64| Rational::from_integer(x);
            let pt: Vec<Rational> = p.iter().map(|&x| q(x)).collect();
            let mut le: Vec<Row> = rows
                .iter()
                .map(|(a, slack)| {
                    let a: Vec<Rational> = a.iter().map(|&x| q(x)).collect();
                    let rhs = a.iter().zip(&pt).map(|(x, y)| x * y).sum::<Rational>() + q(*slack);
                    (a, rhs)
                })
                .collect();
            for k in 0..3 {
                let mut e = vec![q(0); 3];
                e[k] = q(1);
                le.push((e.clone(), q(10)));
                le.push((e.iter().map(|x| -x).collect(), q(10)));
            }
            let obj: Vec<Rational> = c.iter().map(|&x| q(x)).collect();
            let at_p: Rational = obj.iter().zip(&pt).map(|(x, y)| x * y).sum();
            match maximize(&obj, &le, &[]) {
                LpOutcome::Optimal { value, point } => {
                    prop_assert!(value >= at_p);
                    for (a, b) in &le {
                        prop_assert!(a.iter().zip(&point).map(|(x, y)| x * y).sum::<Rational>() <= *b);
                    }
                }
                other => prop_assert!(false, "{other:?}"),
            }
        }
    }
}
