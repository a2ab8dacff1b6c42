//! H-represented rational polyhedra.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::lp::{maximize, LpOutcome, Row};
use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

/// `normal · x ≤ offset` or `normal · x = offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinConstraint {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    #[serde(rename = "rel")]
    pub relation: Relation,
}

impl LinConstraint {
    pub fn le(normal: Vec<Rational>, offset: Rational) -> Self {
        LinConstraint { normal, offset, relation: Relation::Le }
    }

    pub fn eq(normal: Vec<Rational>, offset: Rational) -> Self {
        LinConstraint { normal, offset, relation: Relation::Eq }
    }

    /// `normal · x ≥ offset`.
    pub fn ge(normal: Vec<Rational>, offset: Rational) -> Self {
        LinConstraint::le(normal.iter().map(|x| -x).collect(), -offset)
    }

    pub fn from_ints(normal: &[i64], offset: i64, relation: Relation) -> Self {
        LinConstraint { normal: normal.iter().map(|&x| Rational::from_integer(x)).collect(), offset: Rational::from_integer(offset), relation }
    }

    pub fn is_trivial(&self) -> bool {
        self.normal.iter().all(|x| x.is_zero())
    }

    /// For a trivial constraint, whether `0 (rel) offset` holds.
    pub fn trivially_true(&self) -> bool {
        match self.relation {
            Relation::Le => !self.offset.is_negative(),
            Relation::Eq => self.offset.is_zero(),
        }
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let v = dot(&self.normal, x);
        match self.relation {
            Relation::Le => v <= self.offset,
            Relation::Eq => v == self.offset,
        }
    }

    /// Scales so the first nonzero normal entry has absolute value 1
    /// (and is positive for equations).
    pub fn normalized(&self) -> Self {
        let Some(lead) = self.normal.iter().find(|x| !x.is_zero()) else {
            return self.clone();
        };
        let s = match self.relation {
            Relation::Le => lead.abs(),
            Relation::Eq => lead.clone(),
        };
        let inv = s.recip().expect("nonzero");
        LinConstraint { normal: self.normal.iter().map(|x| x * &inv).collect(), offset: &self.offset * &inv, relation: self.relation }
    }

    fn as_row(&self) -> Row {
        (self.normal.clone(), self.offset.clone())
    }
}

/// `x ↦ M x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineMapQ {
    pub matrix: Vec<Vec<Rational>>,
    pub offset: Vec<Rational>,
}

impl AffineMapQ {
    pub fn new(matrix: Vec<Vec<Rational>>, offset: Vec<Rational>) -> Self {
        assert_eq!(matrix.len(), offset.len());
        AffineMapQ { matrix, offset }
    }

    pub fn linear(matrix: Vec<Vec<Rational>>) -> Self {
        let k = matrix.len();
        AffineMapQ { matrix, offset: vec![Rational::zero(); k] }
    }

    pub fn from_ints(matrix: &[Vec<i64>]) -> Self {
        AffineMapQ::linear(linalg::to_rational_matrix(matrix))
    }

    /// Coordinate projection keeping the listed coordinates in order.
    pub fn coordinate_projection(n: usize, keep: &[usize]) -> Self {
        let m = keep.iter().map(|&k| (0..n).map(|j| if j == k { Rational::one() } else { Rational::zero() }).collect()).collect();
        AffineMapQ::linear(m)
    }

    pub fn identity(n: usize) -> Self {
        AffineMapQ::coordinate_projection(n, &(0..n).collect::<Vec<_>>())
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.first().map_or(0, |r| r.len())
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.iter().zip(&self.offset).map(|(row, o)| dot(row, x) + o.clone()).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMapQ) -> AffineMapQ {
        let k = inner.domain_dim();
        let matrix = self.matrix.iter().map(|row| (0..k).map(|j| row.iter().zip(&inner.matrix).map(|(a, r)| a * &r[j]).sum()).collect()).collect();
        let offset = self.apply(&inner.offset);
        AffineMapQ { matrix, offset }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
}

/// Affine coordinates `x = point + Σ z_k basis_k` on an affine subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineChart {
    pub point: Vec<Rational>,
    pub basis: Vec<Vec<Rational>>,
}

impl AffineChart {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn lift(&self, z: &[Rational]) -> Vec<Rational> {
        let mut x = self.point.clone();
        for (zk, b) in z.iter().zip(&self.basis) {
            if zk.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi = &*xi + &(zk * bi);
            }
        }
        x
    }

    /// Pulls a constraint on `x` back to the chart coordinates.
    pub fn restrict(&self, c: &LinConstraint) -> LinConstraint {
        LinConstraint { normal: self.basis.iter().map(|b| dot(&c.normal, b)).collect(), offset: &c.offset - &dot(&c.normal, &self.point), relation: c.relation }
    }

    /// The map `z ↦ x` as an affine map.
    pub fn as_affine_map(&self) -> AffineMapQ {
        let n = self.point.len();
        let matrix = (0..n).map(|i| self.basis.iter().map(|b| b[i].clone()).collect()).collect();
        AffineMapQ::new(matrix, self.point.clone())
    }
}

#[derive(Clone, Debug)]
struct Analysis {
    empty: bool,
    dim: i64,
    /// Indices of inequalities that hold with equality on the whole polyhedron.
    implicit: Vec<usize>,
    relint: Option<Vec<Rational>>,
    chart: Option<AffineChart>,
}

/// A polyhedron `{x ∈ Q^n : constraints}`. Dimension, relative interior
/// point and affine hull are computed on demand and cached.
#[derive(Clone)]
pub struct Polyhedron {
    ambient_dim: usize,
    constraints: Vec<LinConstraint>,
    analysis: OnceLock<Analysis>,
}

#[derive(Serialize, Deserialize)]
struct PolyhedronRepr {
    ambient_dim: usize,
    constraints: Vec<LinConstraint>,
}

impl Serialize for Polyhedron {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyhedronRepr { ambient_dim: self.ambient_dim, constraints: self.constraints.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polyhedron {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyhedronRepr::deserialize(d)?;
        Polyhedron::new(r.ambient_dim, r.constraints).map_err(serde::de::Error::custom)
    }
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.constraints == other.constraints
    }
}

impl Polyhedron {
    pub fn new(ambient_dim: usize, constraints: Vec<LinConstraint>) -> Result<Self> {
        for c in &constraints {
            if c.normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!("constraint of length {} in R^{ambient_dim}", c.normal.len())));
            }
        }
        Ok(Polyhedron::from_constraints(ambient_dim, constraints))
    }

    fn from_constraints(ambient_dim: usize, constraints: Vec<LinConstraint>) -> Self {
        let mut out: Vec<LinConstraint> = Vec::with_capacity(constraints.len());
        for c in constraints {
            let c = c.normalized();
            if c.is_trivial() && c.trivially_true() {
                continue;
            }
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Polyhedron { ambient_dim, constraints: out, analysis: OnceLock::new() }
    }

    pub fn universe(n: usize) -> Self {
        Polyhedron::from_constraints(n, Vec::new())
    }

    pub fn empty(n: usize) -> Self {
        Polyhedron::from_constraints(n, vec![LinConstraint::le(vec![Rational::zero(); n], Rational::from_integer(-1))])
    }

    pub fn point(x: &[Rational]) -> Self {
        let n = x.len();
        let cs = (0..n)
            .map(|i| {
                let mut a = vec![Rational::zero(); n];
                a[i] = Rational::one();
                LinConstraint::eq(a, x[i].clone())
            })
            .collect();
        Polyhedron::from_constraints(n, cs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn constraints(&self) -> &[LinConstraint] {
        &self.constraints
    }

    pub fn with_constraint(&self, c: LinConstraint) -> Self {
        let mut cs = self.constraints.clone();
        cs.push(c);
        Polyhedron::from_constraints(self.ambient_dim, cs)
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!("R^{} vs R^{}", self.ambient_dim, other.ambient_dim)));
        }
        let mut cs = self.constraints.clone();
        cs.extend(other.constraints.iter().cloned());
        Ok(Polyhedron::from_constraints(self.ambient_dim, cs))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.ambient_dim && self.constraints.iter().all(|c| c.satisfied_by(x))
    }

    fn split_rows(&self) -> (Vec<Row>, Vec<Row>) {
        let mut le = Vec::new();
        let mut eq = Vec::new();
        for c in &self.constraints {
            match c.relation {
                Relation::Le => le.push(c.as_row()),
                Relation::Eq => eq.push(c.as_row()),
            }
        }
        (le, eq)
    }

    /// Maximises a linear functional over the polyhedron.
    pub fn maximize(&self, objective: &[Rational]) -> LpOutcome {
        let (le, eq) = self.split_rows();
        maximize(objective, &le, &eq)
    }

    fn analysis(&self) -> &Analysis {
        self.analysis.get_or_init(|| self.analyze())
    }

    fn analyze(&self) -> Analysis {
        let n = self.ambient_dim;
        let empty = Analysis { empty: true, dim: -1, implicit: Vec::new(), relint: None, chart: None };
        let ineq_idx: Vec<usize> = (0..self.constraints.len()).filter(|&i| self.constraints[i].relation == Relation::Le).collect();
        let eq_rows: Vec<Row> = self.constraints.iter().filter(|c| c.relation == Relation::Eq).map(|c| c.as_row()).collect();
        for c in &self.constraints {
            if c.is_trivial() && !c.trivially_true() {
                return empty;
            }
        }
        let (tau, x) = match interior_lp(n, &self.constraints, &ineq_idx, &eq_rows) {
            None => return empty,
            Some(v) => v,
        };
        if tau.is_negative() {
            return empty;
        }
        let mut implicit = Vec::new();
        if tau.is_zero() {
            let mut strict: Vec<bool> = ineq_idx.iter().map(|&i| self.slack(i, &x).is_positive()).collect();
            let (le_rows, _) = self.split_rows();
            for (k, &i) in ineq_idx.iter().enumerate() {
                if strict[k] {
                    continue;
                }
                let c = &self.constraints[i];
                let neg: Vec<Rational> = c.normal.iter().map(|v| -v).collect();
                // maximise the slack of row i, capped at 1
                let mut le = le_rows.clone();
                le.push((neg.clone(), Rational::one() - c.offset.clone()));
                match maximize(&neg, &le, &eq_rows) {
                    LpOutcome::Optimal { value, point } => {
                        if (&value + &c.offset).is_positive() {
                            for (k2, &i2) in ineq_idx.iter().enumerate() {
                                if !strict[k2] && self.slack(i2, &point).is_positive() {
                                    strict[k2] = true;
                                }
                            }
                        } else {
                            implicit.push(i);
                        }
                    }
                    _ => unreachable!("nonempty polyhedron with capped objective"),
                }
            }
        }
        let mut hull_rows = eq_rows.clone();
        for &i in &implicit {
            hull_rows.push(self.constraints[i].as_row());
        }
        let remaining: Vec<usize> = ineq_idx.iter().copied().filter(|i| !implicit.contains(i)).collect();
        let relint = if implicit.is_empty() {
            x
        } else {
            let (t2, x2) = interior_lp(n, &self.constraints, &remaining, &hull_rows).expect("feasible");
            debug_assert!(remaining.is_empty() || t2.is_positive());
            x2
        };
        let chart = hull_chart(n, &hull_rows);
        Analysis { empty: false, dim: chart.dim() as i64, implicit, relint: Some(relint), chart: Some(chart) }
    }

    fn slack(&self, i: usize, x: &[Rational]) -> Rational {
        let c = &self.constraints[i];
        &c.offset - &dot(&c.normal, x)
    }

    pub fn is_empty(&self) -> bool {
        self.analysis().empty
    }

    /// Single-LP test for an interior point in the ambient space.
    pub fn is_full_dimensional(&self) -> bool {
        if let Some(a) = self.analysis.get() {
            return a.dim == self.ambient_dim as i64;
        }
        if self.constraints.iter().any(|c| c.relation == Relation::Eq) {
            return false;
        }
        let idx: Vec<usize> = (0..self.constraints.len()).collect();
        matches!(interior_lp(self.ambient_dim, &self.constraints, &idx, &[]), Some((t, _)) if t.is_positive())
    }

    /// A point satisfying every inequality strictly, when one exists.
    pub fn interior_point(&self) -> Option<Vec<Rational>> {
        if self.constraints.iter().any(|c| c.relation == Relation::Eq) {
            return None;
        }
        if let Some(a) = self.analysis.get() {
            if a.dim != self.ambient_dim as i64 {
                return None;
            }
        }
        let idx: Vec<usize> = (0..self.constraints.len()).collect();
        match interior_lp(self.ambient_dim, &self.constraints, &idx, &[]) {
            Some((t, x)) if t.is_positive() => Some(x),
            _ => None,
        }
    }

    pub fn strictly_contains(&self, x: &[Rational]) -> bool {
        x.len() == self.ambient_dim && self.constraints.iter().all(|c| c.relation == Relation::Le && dot(&c.normal, x) < c.offset)
    }

    /// Dimension of the affine hull; `-1` when empty.
    pub fn dimension(&self) -> i64 {
        self.analysis().dim
    }

    /// A rational point strictly inside every non-implicit inequality.
    pub fn relative_interior_point(&self) -> Result<Vec<Rational>> {
        self.analysis().relint.clone().ok_or(Error::EmptyPolyhedron)
    }

    /// Coordinates on the affine hull.
    pub fn affine_chart(&self) -> Result<AffineChart> {
        self.analysis().chart.clone().ok_or(Error::EmptyPolyhedron)
    }

    /// Inequalities that hold with equality everywhere on the polyhedron.
    pub fn implicit_equalities(&self) -> Vec<LinConstraint> {
        self.analysis().implicit.iter().map(|&i| LinConstraint::eq(self.constraints[i].normal.clone(), self.constraints[i].offset.clone())).collect()
    }

    /// True when `other ⊆ self`.
    pub fn contains_polyhedron(&self, other: &Polyhedron) -> bool {
        if other.is_empty() {
            return true;
        }
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        if let Ok(p) = other.relative_interior_point() {
            if !self.contains(&p) {
                return false;
            }
        }
        for c in &self.constraints {
            let below = match other.maximize(&c.normal) {
                LpOutcome::Optimal { value, .. } => value <= c.offset,
                _ => false,
            };
            if !below {
                return false;
            }
            if c.relation == Relation::Eq {
                let neg: Vec<Rational> = c.normal.iter().map(|x| -x).collect();
                let above = match other.maximize(&neg) {
                    LpOutcome::Optimal { value, .. } => -value >= c.offset,
                    _ => false,
                };
                if !above {
                    return false;
                }
            }
        }
        true
    }

    /// Equality as point sets.
    pub fn same_set(&self, other: &Polyhedron) -> bool {
        self.contains_polyhedron(other) && other.contains_polyhedron(self)
    }

    /// Removes redundant inequalities, turns implicit equalities into
    /// equations and reduces the equations to echelon form.
    pub fn minimized(&self) -> Polyhedron {
        if self.is_empty() {
            return Polyhedron::empty(self.ambient_dim);
        }
        let a = self.analysis();
        let mut eqs: Vec<Vec<Rational>> = self
            .constraints
            .iter()
            .enumerate()
            .filter(|(i, c)| c.relation == Relation::Eq || a.implicit.contains(i))
            .map(|(_, c)| {
                let mut r = c.normal.clone();
                r.push(c.offset.clone());
                r
            })
            .collect();
        let rank = linalg::rref(&mut eqs).len();
        eqs.truncate(rank);
        let mut cs: Vec<LinConstraint> = eqs
            .into_iter()
            .map(|mut r| {
                let off = r.pop().unwrap();
                LinConstraint::eq(r, off)
            })
            .collect();
        let n_eq = cs.len();
        let ineqs: Vec<LinConstraint> =
            self.constraints.iter().enumerate().filter(|(i, c)| c.relation == Relation::Le && !a.implicit.contains(i)).map(|(_, c)| c.clone()).collect();
        cs.extend(prune_redundant(ineqs, &cs[..n_eq]));
        Polyhedron::from_constraints(self.ambient_dim, cs)
    }

    /// Whether `dim A(P) = dim P`.
    pub fn is_horizontal(&self, a: &AffineMapQ) -> bool {
        match self.affine_chart() {
            Err(_) => false,
            Ok(chart) => {
                let ab: Vec<Vec<Rational>> = a.matrix.iter().map(|row| chart.basis.iter().map(|b| dot(row, b)).collect()).collect();
                linalg::rank(&ab) == chart.dim()
            }
        }
    }

    /// `{(0, x) : x ∈ P}` in one more dimension.
    pub fn prepend_zero_coordinate(&self) -> Polyhedron {
        let n = self.ambient_dim + 1;
        let mut cs: Vec<LinConstraint> = self
            .constraints
            .iter()
            .map(|c| {
                let mut a = vec![Rational::zero()];
                a.extend(c.normal.iter().cloned());
                LinConstraint { normal: a, offset: c.offset.clone(), relation: c.relation }
            })
            .collect();
        let mut e0 = vec![Rational::zero(); n];
        e0[0] = Rational::one();
        cs.push(LinConstraint::eq(e0, Rational::zero()));
        Polyhedron::from_constraints(n, cs)
    }

    /// Minkowski sum with the linear span of `dirs`.
    pub fn add_lineality(&self, dirs: &[Vec<Rational>]) -> Polyhedron {
        let n = self.ambient_dim;
        let k = dirs.len();
        let cs: Vec<LinConstraint> = self
            .constraints
            .iter()
            .map(|c| {
                let mut a = c.normal.clone();
                a.extend(std::iter::repeat_n(Rational::zero(), k));
                LinConstraint { normal: a, offset: c.offset.clone(), relation: c.relation }
            })
            .collect();
        let lifted = Polyhedron::from_constraints(n + k, cs);
        let matrix = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect();
                row.extend(dirs.iter().map(|d| d[i].clone()));
                row
            })
            .collect();
        lifted.linear_image(&AffineMapQ::linear(matrix))
    }

    pub fn fmt_constraints(&self) -> String {
        if self.constraints.is_empty() {
            return "R^".to_string() + &self.ambient_dim.to_string();
        }
        self.constraints
            .iter()
            .map(|c| {
                let lhs: Vec<String> = c
                    .normal
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| !a.is_zero())
                    .map(|(j, a)| {
                        if a.is_one() {
                            format!("x{j}")
                        } else if (-a).is_one() {
                            format!("-x{j}")
                        } else {
                            format!("{a}*x{j}")
                        }
                    })
                    .collect();
                let lhs = if lhs.is_empty() { "0".to_string() } else { crate::scalar::puiseux::join_summands(&lhs) };
                let rel = if c.relation == Relation::Le { "<=" } else { "=" };
                format!("{lhs} {rel} {}", c.offset)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.fmt_constraints())
    }
}

/// `max τ` subject to `a_i x + τ ≤ b_i` on the given inequalities, the
/// equations, and `τ ≤ 1`. Returns `None` when the equations are inconsistent.
fn interior_lp(n: usize, constraints: &[LinConstraint], ineqs: &[usize], eqs: &[Row]) -> Option<(Rational, Vec<Rational>)> {
    let mut le: Vec<Row> = ineqs
        .iter()
        .map(|&i| {
            let mut a = constraints[i].normal.clone();
            a.push(Rational::one());
            (a, constraints[i].offset.clone())
        })
        .collect();
    let mut cap = vec![Rational::zero(); n + 1];
    cap[n] = Rational::one();
    le.push((cap.clone(), Rational::one()));
    let eq: Vec<Row> = eqs
        .iter()
        .map(|(a, b)| {
            let mut a2 = a.clone();
            a2.push(Rational::zero());
            (a2, b.clone())
        })
        .collect();
    match maximize(&cap, &le, &eq) {
        LpOutcome::Optimal { value, mut point } => {
            point.pop();
            Some((value, point))
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("τ is capped"),
    }
}

/// Parametrisation of `{x : rows}` by the free columns of its echelon form.
fn hull_chart(n: usize, rows: &[Row]) -> AffineChart {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|(a, b)| {
            let mut r = a.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = linalg::rref(&mut m);
    let mut point = vec![Rational::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        point[pc] = m[r][n].clone();
    }
    let basis = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][free];
            }
            v
        })
        .collect();
    AffineChart { point, basis }
}

/// Drops inequalities implied by the others (and the equations).
pub(crate) fn prune_redundant(mut ineqs: Vec<LinConstraint>, eqs: &[LinConstraint]) -> Vec<LinConstraint> {
    let eq_rows: Vec<Row> = eqs.iter().map(|c| c.as_row()).collect();
    let mut i = 0;
    while i < ineqs.len() {
        let others: Vec<Row> = ineqs.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, c)| c.as_row()).collect();
        let redundant = match maximize(&ineqs[i].normal, &others, &eq_rows) {
            LpOutcome::Optimal { value, .. } => value <= ineqs[i].offset,
            LpOutcome::Infeasible => true,
            LpOutcome::Unbounded => false,
        };
        if redundant {
            ineqs.remove(i);
        } else {
            i += 1;
        }
    }
    ineqs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn c(a: &[i64], b: i64, rel: Relation) -> LinConstraint {
        LinConstraint::from_ints(a, b, rel)
    }

    fn poly(n: usize, cs: Vec<LinConstraint>) -> Polyhedron {
        Polyhedron::new(n, cs).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(poly(2, vec![c(&[-1, 0], 0, Relation::Le)]).dimension(), 2);
        assert_eq!(poly(2, vec![c(&[1, 0], 0, Relation::Eq), c(&[0, 1], 0, Relation::Le)]).dimension(), 1);
        assert_eq!(poly(1, vec![c(&[1], -1, Relation::Le), c(&[-1], 0, Relation::Le)]).dimension(), -1);
        // implicit equality from a pair of inequalities
        let p = poly(2, vec![c(&[1, 1], 1, Relation::Le), c(&[-1, -1], -1, Relation::Le), c(&[-1, 0], 0, Relation::Le)]);
        assert_eq!(p.dimension(), 1);
        assert_eq!(p.implicit_equalities().len(), 2);
        let x = p.relative_interior_point().unwrap();
        assert!(p.contains(&x));
        assert!(x[0].is_positive());
    }

    #[test]
    fn relative_interior_examples() {
        let seg = poly(1, vec![c(&[1], 1, Relation::Le), c(&[-1], 0, Relation::Le)]);
        assert_eq!(seg.relative_interior_point().unwrap(), vec![q(1, 2)]);
        let ray = poly(2, vec![c(&[1, 0], 0, Relation::Eq), c(&[0, -1], 0, Relation::Le)]);
        let x = ray.relative_interior_point().unwrap();
        assert!(x[0].is_zero() && x[1].is_positive());
        assert_eq!(Polyhedron::universe(2).relative_interior_point().unwrap(), vec![q(0, 1), q(0, 1)]);
        assert!(Polyhedron::empty(2).relative_interior_point().is_err());
    }

    #[test]
    fn intersections() {
        let p = poly(1, vec![c(&[-1], 0, Relation::Le)]);
        let n = poly(1, vec![c(&[1], 0, Relation::Le)]);
        let i = p.intersect(&n).unwrap();
        assert_eq!(i.dimension(), 0);
        assert!(i.same_set(&Polyhedron::point(&[q(0, 1)])));
        assert!(p.intersect(&p).unwrap().same_set(&p));
        let disjoint = poly(1, vec![c(&[1], -1, Relation::Le)]);
        assert!(p.intersect(&disjoint).unwrap().is_empty());
        assert!(p.intersect(&Polyhedron::universe(2)).is_err());
    }

    #[test]
    fn horizontality() {
        let diag = poly(2, vec![c(&[1, -1], 0, Relation::Eq), c(&[-1, 0], 0, Relation::Le)]);
        let vert = poly(2, vec![c(&[1, 0], 0, Relation::Eq), c(&[0, -1], 0, Relation::Le)]);
        let a = AffineMapQ::coordinate_projection(2, &[0]);
        assert!(diag.is_horizontal(&a));
        assert!(!vert.is_horizontal(&a));
    }

    #[test]
    fn minimized_drops_redundant_rows() {
        let p = poly(1, vec![c(&[1], 1, Relation::Le), c(&[1], 2, Relation::Le), c(&[-1], 0, Relation::Le)]);
        assert_eq!(p.minimized().constraints().len(), 2);
    }

    #[test]
    fn lineality_sum() {
        let ray = poly(2, vec![c(&[0, 1], 0, Relation::Eq), c(&[-1, 0], 0, Relation::Le)]);
        let half = ray.add_lineality(&[vec![q(1, 1), q(1, 1)]]);
        assert_eq!(half.dimension(), 2);
        assert!(half.contains(&[q(0, 1), q(-5, 1)]));
        assert!(!half.contains(&[q(0, 1), q(5, 1)]));
    }
}
