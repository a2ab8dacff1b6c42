//! Random linear spaces against their Yu–Yuster parameterisations.

use rand::Rng;

use super::sample::containment;
use super::{image, Ctx, Params};
use crate::constructions::yu_yuster_param;
use crate::error::Result;
use crate::linalg::{nullspace, rank};
use crate::polyhedra::covers;
use crate::scalar::{Rational, ValuedScalar};
use crate::tropical::{trop_linear_space, tropicalize_map};

/// `(n, dim, puiseux)`, cycled. Three-dimensional spaces stay in `n ≤ 5`.
const SHAPES: [(usize, usize, bool); 6] = [(4, 2, false), (5, 3, true), (6, 2, true), (5, 2, false), (4, 3, true), (6, 2, false)];

/// A random basis of a `k`-dimensional subspace of `K^n` meeting the torus.
pub(crate) fn random_space<R: Rng>(rng: &mut R, n: usize, k: usize, puiseux: bool) -> Vec<Vec<ValuedScalar>> {
    loop {
        let basis: Vec<Vec<ValuedScalar>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.2) {
                            return ValuedScalar::zero();
                        }
                        let c = ValuedScalar::from_integer(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 });
                        if puiseux {
                            c.mul(&ValuedScalar::t_pow(Rational::new(rng.gen_range(0..=3), rng.gen_range(1..=2))))
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        let meets_torus = (0..n).all(|j| basis.iter().any(|v| !v[j].is_zero()));
        if rank(&basis) == k && meets_torus {
            return basis;
        }
    }
}

pub(super) fn run(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let count = params.usize("count")?;
    for s in 0..count {
        let (n, k, puiseux) = SHAPES[s % SHAPES.len()];
        let basis = random_space(&mut ctx.rng, n, k, puiseux);
        let label = format!("space {s} (n={n}, dim={k}{})", if puiseux { ", Puiseux" } else { "" });
        let eqs = nullspace(&basis, n);
        let (l, yy, im) = ctx.timed(&label, |_| -> Result<_> {
            let l = trop_linear_space(&eqs, n);
            let yy = yu_yuster_param(&basis, n)?;
            let im = image(&yy)?;
            Ok((l, yy, im))
        })?;
        let a = covers(&l, &im)?;
        let b = covers(&im, &l)?;
        ctx.report.coverage(&format!("{label}: Trop(V) by Yu-Yuster"), "Trop(V)", "im Trop(yu-yuster)", &a);
        ctx.report.coverage(&format!("{label}: Yu-Yuster in Trop(V)"), "im Trop(yu-yuster)", "Trop(V)", &b);
        ctx.report.check(&format!("{label}: Yu-Yuster image equals Trop(V)"), a.covered && b.covered, format!("{} circuits", yy.domain_dim()));
        let c = containment(&format!("yu-yuster {s}"), "Trop(V)", &tropicalize_map(&yy)?, |xi| l.membership(xi), 50, &mut ctx.rng);
        ctx.report.containment.push(c);
    }
    Ok(())
}
