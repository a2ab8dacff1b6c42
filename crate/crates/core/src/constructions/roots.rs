//! Roots in `Q(i)` of univariate polynomials with Gaussian rational
//! coefficients (coefficient of `x^k` at index `k`).

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{GaussianRational, Rational};

/// Largest norm whose divisors we are willing to enumerate.
const NORM_LIMIT: u64 = 1 << 40;

pub fn eval_upoly(p: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    p.iter().rev().fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
}

/// Quotient by `x - r`, assuming `r` is a root.
pub fn deflate(p: &[GaussianRational], r: &GaussianRational) -> Vec<GaussianRational> {
    let n = p.len() - 1;
    let mut q = vec![GaussianRational::zero(); n];
    let mut carry = GaussianRational::zero();
    for k in (1..=n).rev() {
        carry = &p[k] + &(&carry * r);
        q[k - 1] = carry.clone();
    }
    q
}

fn trim(p: &mut Vec<GaussianRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Scales to Gaussian integer coefficients, returned as `(re, im)` pairs.
fn integral(p: &[GaussianRational]) -> Vec<(BigInt, BigInt)> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.re.denom()).lcm(&c.im.denom()));
    p.iter().map(|c| (c.re.numer() * (&l / c.re.denom()), c.im.numer() * (&l / c.im.denom()))).collect()
}

fn gaussian_divisors(z: &(BigInt, BigInt)) -> Option<Vec<(BigInt, BigInt)>> {
    let norm = &z.0 * &z.0 + &z.1 * &z.1;
    let n = norm.to_u64().filter(|&n| n <= NORM_LIMIT)?;
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d * d != n {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    let mut out = Vec::new();
    for dn in divs {
        let amax = dn.sqrt();
        for a in 0..=amax {
            let rest = dn - a * a;
            let b = rest.sqrt();
            if b * b != rest {
                continue;
            }
            for (sa, sb) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let w = (BigInt::from(sa * a as i64), BigInt::from(sb * b as i64));
                // z / w ∈ Z[i] iff z·conj(w) ≡ 0 mod N(w)
                let re = &z.0 * &w.0 + &z.1 * &w.1;
                let im = &z.1 * &w.0 - &z.0 * &w.1;
                let nw = BigInt::from(dn);
                if (&re % &nw).is_zero() && (&im % &nw).is_zero() && !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    Some(out)
}

fn to_gaussian(w: &(BigInt, BigInt)) -> GaussianRational {
    GaussianRational::new(Rational::from_bigint(w.0.clone()), Rational::from_bigint(w.1.clone()))
}

/// Roots in `Q(i)` with multiplicity, and the cofactor that has no further
/// roots in `Q(i)` (a constant when the polynomial splits).
pub fn gaussian_roots(p: &[GaussianRational]) -> (Vec<(GaussianRational, usize)>, Vec<GaussianRational>) {
    let mut p = p.to_vec();
    trim(&mut p);
    let mut roots: Vec<(GaussianRational, usize)> = Vec::new();
    let push = |roots: &mut Vec<(GaussianRational, usize)>, r: GaussianRational| match roots.iter_mut().find(|(s, _)| *s == r) {
        Some(e) => e.1 += 1,
        None => roots.push((r, 1)),
    };
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        push(&mut roots, GaussianRational::zero());
    }
    loop {
        let deg = p.len() - 1;
        if deg == 0 {
            break;
        }
        let found = if deg == 1 {
            Some(-p[0].checked_div(&p[1]).expect("leading coefficient"))
        } else if deg == 2 {
            // quadratic formula when the discriminant is a square in Q(i)
            let disc = &(&p[1] * &p[1]) - &(&GaussianRational::from_integer(4) * &(&p[2] * &p[0]));
            disc.sqrt().map(|s| (&(-&p[1]) + &s).checked_div(&(&GaussianRational::from_integer(2) * &p[2])).expect("nonzero"))
        } else {
            search_root(&p)
        };
        match found {
            Some(r) => {
                p = deflate(&p, &r);
                push(&mut roots, r);
            }
            None => break,
        }
    }
    (roots, p)
}

fn search_root(p: &[GaussianRational]) -> Option<GaussianRational> {
    let ints = integral(p);
    let num = gaussian_divisors(&ints[0])?;
    let den = gaussian_divisors(ints.last().expect("nonempty"))?;
    for q in den.iter().filter(|w| w.0.is_positive() || (w.0.is_zero() && w.1.is_positive())) {
        let qg = to_gaussian(q);
        for a in &num {
            let r = to_gaussian(a).checked_div(&qg).expect("nonzero");
            if eval_upoly(p, &r).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(q(re, 1), q(im, 1))
    }

    #[test]
    fn splits_over_gaussian_rationals() {
        // (x - 1)^2 (x + i) (2x - 3)
        let mut p = vec![g(1, 0)];
        for r in [g(1, 0), g(1, 0), g(0, -1)] {
            let mut next = vec![GaussianRational::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] = &next[k + 1] + c;
                next[k] = &next[k] - &(c * &r);
            }
            p = next;
        }
        let mut next = vec![GaussianRational::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(c * &g(2, 0));
            next[k] = &next[k] - &(c * &g(3, 0));
        }
        let (roots, rest) = gaussian_roots(&next);
        assert_eq!(rest.len(), 1);
        let total: usize = roots.iter().map(|r| r.1).sum();
        assert_eq!(total, 4);
        assert!(roots.contains(&(g(1, 0), 2)));
        assert!(roots.contains(&(GaussianRational::real(q(3, 2)), 1)));
    }

    #[test]
    fn irreducible_quadratic_is_left_over() {
        let (roots, rest) = gaussian_roots(&[g(-2, 0), g(0, 0), g(1, 0)]);
        assert!(roots.is_empty());
        assert_eq!(rest.len(), 3);
        let (roots, _) = gaussian_roots(&[g(1, 0), g(0, 0), g(1, 0)]);
        assert_eq!(roots.len(), 2);
    }
}
