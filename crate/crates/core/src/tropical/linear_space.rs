//! Circuits and tropical linear spaces.

use num_bigint::BigInt;

use crate::linalg::{nullspace, primitive_integer, rank, row_space, Field};
use crate::polyhedra::{LinConstraint, PolyhedralComplex, Polyhedron};
use crate::scalar::{Rational, ValuedScalar};

/// Scalars whose valuation is known, with a canonical scaling for circuits.
pub trait CircuitScalar: Field + Send + Sync {
    fn val(&self) -> Rational;
    fn normalize(v: Vec<Self>) -> Vec<Self>;
}

impl CircuitScalar for Rational {
    /// Rational scalars carry the trivial valuation.
    fn val(&self) -> Rational {
        Rational::zero()
    }

    fn normalize(v: Vec<Self>) -> Vec<Self> {
        primitive_integer(&v).into_iter().map(Rational::from_bigint).collect()
    }
}

impl CircuitScalar for ValuedScalar {
    fn val(&self) -> Rational {
        self.valuation().finite().expect("nonzero").clone()
    }

    fn normalize(v: Vec<Self>) -> Vec<Self> {
        let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero vector");
        v.iter().map(|x| x.div(&lead)).collect()
    }
}

/// Minimal-support vectors of a row space, one per support.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitSet<F> {
    pub vectors: Vec<Vec<F>>,
}

impl<F: CircuitScalar> CircuitSet<F> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.vectors.iter().map(|v| (0..v.len()).filter(|&j| !v[j].is_zero()).collect()).collect()
    }
}

impl CircuitSet<Rational> {
    pub fn integer_vectors(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| primitive_integer(v)).collect()
    }
}

/// Circuits of the row space of `rows` (vectors of length `n`), by subset
/// enumeration in order of increasing support size.
pub fn circuits<F: CircuitScalar>(rows: &[Vec<F>], n: usize) -> CircuitSet<F> {
    assert!(n < 64, "ambient dimension too large for subset enumeration");
    let basis = row_space(rows);
    let r = basis.len();
    let mut found: Vec<u64> = Vec::new();
    let mut vectors = Vec::new();
    if r == 0 {
        return CircuitSet { vectors };
    }
    for size in 1..=(n - r + 1).min(n) {
        for mask in subsets(n, size) {
            if found.iter().any(|&c| c & mask == c) {
                continue;
            }
            // rows of the basis restricted to the complement of S
            let out: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 0).collect();
            let restricted: Vec<Vec<F>> = out.iter().map(|&j| basis.iter().map(|b| b[j].clone()).collect()).collect();
            let lambdas = nullspace(&restricted, r);
            if lambdas.len() != 1 {
                continue;
            }
            let w: Vec<F> = (0..n).map(|j| basis.iter().zip(&lambdas[0]).fold(F::zero(), |acc, (b, l)| acc.add(&b[j].mul(l)))).collect();
            let supp = (0..n).filter(|&j| !w[j].is_zero()).fold(0u64, |m, j| m | 1 << j);
            if supp == mask {
                found.push(mask);
                vectors.push(F::normalize(w));
            }
        }
    }
    CircuitSet { vectors }
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for j in start..=n - k {
            rec(j + 1, n, k - 1, cur | 1 << j, out);
        }
    }
    rec(0, n, k, 0, &mut out);
    out
}

/// `Trop(V)` for `V = {x : E x = 0}`: points where every circuit form
/// `min_{j ∈ supp c} (v(c_j) + ξ_j)` attains its minimum twice. Returned as
/// the maximal cells, each of dimension `dim V`.
pub fn trop_linear_space<F: CircuitScalar>(equations: &[Vec<F>], n: usize) -> PolyhedralComplex {
    let dim_v = n - rank(equations);
    let cs = circuits(equations, n);
    let mut out = PolyhedralComplex::new(n);
    if cs.is_empty() {
        out.push(Polyhedron::universe(n), None).expect("same dim");
        return out;
    }
    let mut forms: Vec<Vec<(usize, Rational)>> = cs.vectors.iter().map(|v| (0..n).filter(|&j| !v[j].is_zero()).map(|j| (j, v[j].val())).collect()).collect();
    forms.sort_by_key(|f| f.len());
    let mut cells: Vec<Polyhedron> = Vec::new();
    extend(&forms, 0, Polyhedron::universe(n), dim_v as i64, &mut cells);
    let mut complex = PolyhedralComplex::new(n);
    for c in cells {
        complex.push(c, None).expect("same dim");
    }
    complex.maximal_cells()
}

fn pair_region(n: usize, form: &[(usize, Rational)], a: usize, b: usize) -> Polyhedron {
    let (ja, va) = &form[a];
    let (jb, vb) = &form[b];
    let unit = |j: usize, k: usize| {
        let mut v = vec![Rational::zero(); n];
        v[j] = Rational::one();
        v[k] = v[k].clone() - Rational::one();
        v
    };
    let mut cs = vec![LinConstraint::eq(unit(*ja, *jb), vb - va)];
    for (k, (jk, vk)) in form.iter().enumerate() {
        if k != a && k != b {
            cs.push(LinConstraint::le(unit(*ja, *jk), vk - va));
        }
    }
    Polyhedron::new(n, cs).expect("consistent")
}

fn extend(forms: &[Vec<(usize, Rational)>], level: usize, cell: Polyhedron, dim_v: i64, out: &mut Vec<Polyhedron>) {
    if level == forms.len() {
        if !out.iter().any(|c| c.same_set(&cell)) {
            out.push(cell);
        }
        return;
    }
    let n = cell.ambient_dim();
    let form = &forms[level];
    let mut branches = Vec::new();
    for a in 0..form.len() {
        for b in a + 1..form.len() {
            let region = pair_region(n, form, a, b);
            if region.contains_polyhedron(&cell) {
                // every other branch yields a subset of this one
                extend(forms, level + 1, cell, dim_v, out);
                return;
            }
            branches.push(region);
        }
    }
    for region in branches {
        let next = cell.intersect(&region).expect("same dim");
        if next.dimension() >= dim_v {
            extend(forms, level + 1, next, dim_v, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_rational_matrix;
    use crate::scalar::q;

    fn ints(c: &CircuitSet<Rational>) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = c.integer_vectors().iter().map(|v| v.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
        v.sort();
        v
    }

    #[test]
    fn plane_circuits() {
        let e = to_rational_matrix(&[vec![1, 1, 1]]);
        assert_eq!(ints(&circuits(&e, 3)), vec![vec![1, 1, 1]]);
        let basis = nullspace(&e, 3);
        let mut got = ints(&circuits(&basis, 3));
        for v in got.iter_mut() {
            if v.iter().find(|x| **x != 0).unwrap() < &0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
        got.sort();
        assert_eq!(got, vec![vec![0, 1, -1], vec![1, -1, 0], vec![1, 0, -1]]);
    }

    #[test]
    fn generic_plane_in_four_space() {
        let v = to_rational_matrix(&[vec![1, 2, 3, 5], vec![2, -1, 4, 7]]);
        let c = circuits(&v, 4);
        assert_eq!(c.len(), 4);
        assert!(c.supports().iter().all(|s| s.len() == 3));
    }

    #[test]
    fn plane_tropicalisation() {
        let e = to_rational_matrix(&[vec![1, 1, 1]]);
        let t = trop_linear_space(&e, 3);
        assert_eq!(t.len(), 3);
        assert!(t.cells().iter().all(|c| c.dimension() == 2));
        assert!(t.membership(&[q(0, 1), q(0, 1), q(5, 1)]));
        assert!(!t.membership(&[q(0, 1), q(1, 1), q(5, 1)]));
    }

    #[test]
    fn line_and_whole_space() {
        // span{(1,1,1)} = {x1 = x2 = x3}
        let e = to_rational_matrix(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let t = trop_linear_space(&e, 3);
        assert_eq!(t.len(), 1);
        assert_eq!(t.cells()[0].dimension(), 1);
        assert!(t.membership(&[q(7, 1), q(7, 1), q(7, 1)]));
        let all = trop_linear_space::<Rational>(&[], 3);
        assert_eq!(all.dimension(), 3);
    }

    #[test]
    fn valued_coefficients() {
        // x1 + t x2 + x3 = 0: min(ξ1, 1 + ξ2, ξ3) attained twice
        let e = vec![vec![ValuedScalar::one(), ValuedScalar::t_pow(q(1, 1)), ValuedScalar::one()]];
        let t = trop_linear_space(&e, 3);
        assert_eq!(t.len(), 3);
        assert!(t.membership(&[q(1, 1), q(0, 1), q(5, 1)]));
        assert!(!t.membership(&[q(0, 1), q(0, 1), q(5, 1)]));
    }
}
