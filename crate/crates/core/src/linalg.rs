//! Dense exact linear algebra over `Q` and over the valued field `K`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, ValuedScalar};

/// The operations Gaussian elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for ValuedScalar {
    fn zero() -> Self {
        ValuedScalar::zero()
    }
    fn one() -> Self {
        ValuedScalar::one()
    }
    fn is_zero(&self) -> bool {
        ValuedScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        ValuedScalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ValuedScalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ValuedScalar::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self.checked_div(o).expect("pivot is nonzero")
    }
    fn neg(&self) -> Self {
        ValuedScalar::neg(self)
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Vec<Vec<F>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one().div(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(rows);
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of `{x : m x = 0}` for a matrix with `cols` columns.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Basis of the row space (nonzero rows of the echelon form).
pub fn row_space<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let k = rref(&mut a).len();
    a.truncate(k);
    a
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c].div(&a[c][c]);
                for j in c..n {
                    let v = a[c][j].mul(&f);
                    a[i][j] = a[i][j].sub(&v);
                }
            }
        }
    }
    det
}

/// Solves `m x = b`, returning one solution if the system is consistent.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn mat_vec<F: Field>(m: &[Vec<F>], v: &[F]) -> Vec<F> {
    m.iter().map(|row| row.iter().zip(v).fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_rational_matrix(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect()
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction (first nonzero entry keeps its sign).
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Same as [`primitive_integer`] but as rationals and with positive first
/// nonzero entry; used to compare directions.
pub fn normalize_direction(v: &[Rational]) -> Vec<Rational> {
    let mut p = primitive_integer(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        p = p.into_iter().map(|x| -x).collect();
    }
    p.into_iter().map(Rational::from_bigint).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 1, 1], &[2, 2, 2]]);
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), q(-2, 1));
        assert_eq!(determinant(&m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]])), q(-5, 1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), q(0, 1));
    }

    #[test]
    fn solving() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = solve(&a, &[q(3, 1), q(1, 1)]).unwrap();
        assert_eq!(x, vec![q(2, 1), q(1, 1)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1, 1), q(2, 1)]).is_none());
    }

    #[test]
    fn valued_field_elimination() {
        let t = ValuedScalar::t_pow(q(1, 1));
        let one = ValuedScalar::one();
        let a = vec![vec![one.clone(), t.clone()], vec![t.clone(), t.mul(&t)]];
        assert_eq!(rank(&a), 1);
        assert!(determinant(&a).is_zero());
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(normalize_direction(&[q(-1, 2), q(1, 3)]), vec![q(3, 1), q(-2, 1)]);
    }
}
