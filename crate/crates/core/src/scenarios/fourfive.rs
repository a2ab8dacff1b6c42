//! Rank at most three `4 × 5` matrices: the projection forgetting two
//! entries of one column is birational, by two cofactor expansions.

use rand::Rng;
use serde::Serialize;

use super::{Ctx, Params};
use crate::error::{Error, Result};
use crate::linalg::{determinant, mat_vec, nullspace, rank, solve};
use crate::scalar::Rational;

/// A random `4 × 5` integer matrix of rank exactly three.
pub fn random_rank3_matrix<R: Rng>(rng: &mut R) -> Vec<Vec<Rational>> {
    loop {
        let mut draw =
            |r: usize, c: usize| -> Vec<Vec<Rational>> { (0..r).map(|_| (0..c).map(|_| Rational::from_integer(rng.gen_range(-5..=5))).collect()).collect() };
        let a = draw(4, 3);
        let b = draw(3, 5);
        let m: Vec<Vec<Rational>> = (0..4).map(|i| (0..5).map(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect();
        if rank(&m) == 3 {
            return m;
        }
    }
}

/// Determinant of the submatrix on 1-based `rows` and `cols`, written as
/// digit strings like `"124"`.
fn minor(m: &[Vec<Rational>], rows: &str, cols: &str) -> Rational {
    let idx = |s: &str| s.bytes().map(|b| (b - b'1') as usize).collect::<Vec<_>>();
    let (r, c) = (idx(rows), idx(cols));
    let sub: Vec<Vec<Rational>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j].clone()).collect()).collect();
    determinant(&sub)
}

/// The cofactor identities and the solvability determinant at one matrix,
/// alongside the forms as printed.
#[derive(Clone, Debug, Serialize)]
pub struct CofactorValues {
    /// `−m15 D(234,234) + m25 D(134,234) − m35 D(124,234) + m45 D(123,234)`.
    pub identity_2345: Rational,
    /// `−m15 D(234,134) + m25 D(134,134) − m35 D(124,134) + m45 D(123,134)`.
    pub identity_1345: Rational,
    /// `D(124,134) D(123,234) − D(124,234) D(123,134)`.
    pub solvability: Rational,
    pub printed_2345: Rational,
    pub printed_1345: Rational,
    /// `D(124,134) D(123,134) − D(124,234) D(123,134)`.
    pub printed_solvability: Rational,
    /// Whether solving the identities for `(m35, m45)` gives back the entries.
    pub recovers_entries: bool,
}

pub fn cofactor_identities(m: &[Vec<Rational>]) -> Result<CofactorValues> {
    if m.len() != 4 || m.iter().any(|r| r.len() != 5) {
        return Err(Error::DimensionMismatch("expected a 4 x 5 matrix".into()));
    }
    let e = |i: usize, j: usize| m[i - 1][j - 1].clone();
    let d = |r: &str, c: &str| minor(m, r, c);
    let identity = |cols: &str| -(e(1, 5) * d("234", cols)) + e(2, 5) * d("134", cols) - e(3, 5) * d("124", cols) + e(4, 5) * d("123", cols);
    let solvability = d("124", "134") * d("123", "234") - d("124", "234") * d("123", "134");
    let printed_2345 = e(3, 5) * d("124", "234") + e(4, 5) * d("123", "234") + e(1, 5) * d("234", "234") + e(2, 5) * d("124", "234");
    let printed_1345 = e(3, 5) * d("124", "134") + e(4, 5) * d("123", "134") + e(1, 5) * d("234", "134") + e(2, 5) * d("134", "134");
    let printed_solvability = d("124", "134") * d("123", "134") - d("124", "234") * d("123", "134");
    // unknowns (m35, m45); the rest moves to the right-hand side
    let coeffs = vec![vec![-d("124", "234"), d("123", "234")], vec![-d("124", "134"), d("123", "134")]];
    let rhs = vec![e(1, 5) * d("234", "234") - e(2, 5) * d("134", "234"), e(1, 5) * d("234", "134") - e(2, 5) * d("134", "134")];
    let recovers_entries = !solvability.is_zero() && solve(&coeffs, &rhs).is_some_and(|x| x == vec![e(3, 5), e(4, 5)]);
    Ok(CofactorValues {
        identity_2345: identity("234"),
        identity_1345: identity("134"),
        solvability,
        printed_2345,
        printed_1345,
        printed_solvability,
        recovers_entries,
    })
}

/// Another rank-3 matrix agreeing with `m` off `(m35, m45)`: column 5 moved
/// along the line of the column space where rows 1 and 2 vanish.
pub fn fibre_neighbour(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let w = nullspace(&m[..2], 5).into_iter().map(|c| mat_vec(m, &c)).find(|w| w.iter().any(|x| !x.is_zero()))?;
    let mut moved = m.to_vec();
    for (row, wi) in moved.iter_mut().zip(&w) {
        row[4] = &row[4] + wi;
    }
    (rank(&moved) == 3 && moved != m).then_some(moved)
}

pub(super) fn run(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let samples = params.usize("samples")?;
    let values = (0..samples).map(|_| cofactor_identities(&random_rank3_matrix(&mut ctx.rng))).collect::<Result<Vec<_>>>()?;
    let zero1 = values.iter().filter(|v| v.identity_2345.is_zero()).count();
    let zero2 = values.iter().filter(|v| v.identity_1345.is_zero()).count();
    let solvable = values.iter().filter(|v| !v.solvability.is_zero()).count();
    let recovered = values.iter().filter(|v| v.recovers_entries).count();
    ctx.report.check("expansion of det M(1234, 2345) vanishes", zero1 == samples, format!("{zero1} of {samples}"));
    ctx.report.check("expansion of det M(1234, 1345) vanishes", zero2 == samples, format!("{zero2} of {samples}"));
    ctx.report.check("the 2x2 system for (m35, m45) is solvable on at least 95%", solvable * 100 >= 95 * samples, format!("{solvable} of {samples}"));
    ctx.report.check("solving recovers m35 and m45 whenever solvable", recovered == solvable, format!("{recovered} of {solvable}"));

    // the coefficients are entries of adj M(1234, 1234), which has rank one
    let zero_det = values.iter().filter(|v| v.solvability.is_zero()).count();
    let lines = (0..samples).filter(|_| fibre_neighbour(&random_rank3_matrix(&mut ctx.rng)).is_some()).count();
    ctx.report.observe("the solvability determinant vanishes identically", zero_det == samples, format!("{zero_det} of {samples}"));
    ctx.report.observe("forgetting (m35, m45) leaves a line in every fibre", lines == samples, format!("{lines} of {samples}"));
    if zero_det == samples {
        ctx.report.discrepancy(
            "fourfive-birationality",
            "the set of equations has a unique solution for m35 and m45",
            &format!("the 2x2 system is singular on {zero_det} of {samples} rank-3 matrices; {lines} of {samples} fibres contain a line"),
            "its coefficient matrix is a 2x2 minor of the adjugate of a rank-3 4x4 matrix, and column 5 only meets the column space in an affine line once m15, m25 are fixed",
        );
    }

    let p1 = values.iter().filter(|v| v.printed_2345.is_zero()).count();
    let p2 = values.iter().filter(|v| v.printed_1345.is_zero()).count();
    let ps = values.iter().filter(|v| !v.printed_solvability.is_zero()).count();
    ctx.report.observe("printed first identity vanishes", p1 == samples, format!("{p1} of {samples}"));
    ctx.report.observe("printed second identity vanishes", p2 == samples, format!("{p2} of {samples}"));
    if p1 < samples || p2 < samples {
        ctx.report.discrepancy(
            "fourfive-identities",
            "0 = m35 D(124,234) + m45 D(123,234) + m15 D(234,234) + m25 D(124,234), and likewise for columns 134",
            &format!("printed forms vanish on {p1} and {p2} of {samples} rank-3 matrices"),
            "cofactor expansion along column 5 has alternating signs and the m25 cofactor D(134, .)",
        );
    }
    ctx.report.discrepancy(
        "fourfive-solvability",
        "D(124,134) D(123,134) != D(124,234) D(123,134)",
        &format!("the determinant of the system is D(124,134) D(123,234) - D(124,234) D(123,134); the printed difference is nonzero on {ps} of {samples}"),
        "the printed condition has D(123,134) on both sides",
    );
    ctx.report.discrepancy(
        "fourfive-unknowns",
        "z1 = m34 and z2 = m45 are left out",
        "the identities are solved for m35 and m45",
        "m34 does not occur in either identity; the same-column case needs z1 = m35",
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identities_vanish_but_system_is_singular() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let m = random_rank3_matrix(&mut rng);
            let v = cofactor_identities(&m).unwrap();
            assert!(v.identity_2345.is_zero() && v.identity_1345.is_zero());
            assert!(v.solvability.is_zero());
            let n = fibre_neighbour(&m).unwrap();
            assert!((0..4).all(|i| (0..5).all(|j| (j == 4 && i >= 2) || n[i][j] == m[i][j])));
        }
    }
}
