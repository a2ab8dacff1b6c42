//! Determinantal and linear-by-toric varieties: singular square matrices,
//! rank-two matrices, the Grassmannian of planes and `A`-discriminants.

use super::sample::{containment, in_corner_loci, jacobian_rank};
use super::{image, names, projection_checks, Ctx, Params};
use crate::constructions::{grassmannian2_param, horn_param, projection_inverse_linear, rank2_param};
use crate::error::{Error, Result};
use crate::laurent::{parse_poly, substitute, LaurentPoly, RationalMap};
use crate::linalg::to_rational_matrix;
use crate::polyhedra::{covers, LinConstraint, PolyhedralComplex, Polyhedron, Relation};
use crate::tropical::{trop_hypersurface, trop_linear_space, tropicalize_map, tropicalize_poly, TropPoly};

fn matrix_vars(m: usize, n: usize) -> Vec<String> {
    (1..=m).flat_map(|i| (1..=n).map(move |j| format!("m{i}{j}"))).collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 1 {
        return vec![(vec![0], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at position k; that adds n-1-k inversions
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            let sign = if (n - 1 - k) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// The minor on `rows × cols` of the generic matrix with entries `name(i, j)`.
fn minor_string(rows: &[usize], cols: &[usize], name: impl Fn(usize, usize) -> String) -> String {
    let terms: Vec<String> = permutations(rows.len())
        .into_iter()
        .map(|(p, s)| {
            let prod: Vec<String> = p.iter().enumerate().map(|(r, &c)| name(rows[r], cols[c])).collect();
            format!("{}{}", if s < 0 { "- " } else { "+ " }, prod.join("*"))
        })
        .collect();
    terms.join(" ")
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.sort();
    out
}

fn vanishes(ctx: &mut Ctx, name: &str, polys: &[LaurentPoly], map: &RationalMap) -> Result<()> {
    let mut bad = 0;
    for p in polys {
        if !substitute(p, map.components())?.is_zero() {
            bad += 1;
        }
    }
    ctx.report.check(name, bad == 0, format!("{} relations, {bad} nonzero", polys.len()));
    Ok(())
}

fn mutual(ctx: &mut Ctx, label: &str, a: (&str, &PolyhedralComplex), b: (&str, &PolyhedralComplex)) -> Result<bool> {
    let ab = covers(a.1, b.1)?;
    let ba = covers(b.1, a.1)?;
    ctx.report.coverage(&format!("{label}: {} by {}", a.0, b.0), a.0, b.0, &ab);
    ctx.report.coverage(&format!("{label}: {} by {}", b.0, a.0), b.0, a.0, &ba);
    Ok(ab.covered && ba.covered)
}

/// `Trop` of the torus orbit of `{E z = 0}` under the given lineality.
fn smeared_linear_space(equations: &[Vec<i64>], n: usize, lineality: &[Vec<i64>]) -> PolyhedralComplex {
    trop_linear_space(&to_rational_matrix(equations), n).add_lineality(&to_rational_matrix(lineality))
}

fn unit_rows(n: usize, groups: &[Vec<usize>]) -> Vec<Vec<i64>> {
    groups
        .iter()
        .map(|g| {
            let mut v = vec![0; n];
            for &k in g {
                v[k] = 1;
            }
            v
        })
        .collect()
}

pub(super) fn singular(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let n = params.usize("n")?;
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidInput(format!("singular supports n = 2 or 3, got {n}")));
    }
    let vars = matrix_vars(n, n);
    let all: Vec<usize> = (0..n).collect();
    let det = parse_poly(&minor_string(&all, &all, |i, j| format!("m{}{}", i + 1, j + 1)), &vars)?;
    let x = trop_hypersurface(&tropicalize_poly(&det)?);
    let drop: Vec<usize> = if n == 2 { vec![3] } else { (0..n * n).collect() };
    let specs = drop.iter().map(|&k| projection_inverse_linear(&det, k, &vars)).collect::<Result<Vec<_>>>()?;
    if n == 2 {
        let plane = Polyhedron::new(4, vec![LinConstraint::from_ints(&[1, -1, -1, 1], 0, Relation::Eq)])?;
        let is_plane = x.complex.len() == 1 && x.complex.cells()[0].same_set(&plane);
        ctx.report.check("Trop(X) is the hyperplane x11 + x22 = x12 + x21", is_plane, "");
    } else {
        ctx.report.observe("maximal cells of Trop(det)", true, x.complex.len().to_string());
    }
    let rep = ctx.timed("projections", |ctx| projection_checks(ctx, &det, &x, &specs))?;
    ctx.report.check("every maximal cell is horizontal for some projection", rep.uncovered.is_empty(), format!("uncovered {:?}", rep.uncovered));
    let mut union = PolyhedralComplex::new(n * n);
    for s in &specs {
        union = union.union(&s.image()?)?;
    }
    let r = covers(&x.complex, &union)?;
    ctx.report.coverage("Trop(X) by projection inverses", "Trop(X)", "union of im Trop(inverse)", &r);
    ctx.report.check("the projection inverses jointly cover Trop(X)", r.covered, "");
    Ok(())
}

pub(super) fn rank2(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let (m, n) = (params.usize("m")?, params.usize("n")?);
    let phi = rank2_param(m, n)?;
    let vars = matrix_vars(m, n);
    let idx = |i: usize, j: usize| format!("m{}{}", i + 1, j + 1);
    let minors = subsets(m, 3)
        .iter()
        .flat_map(|r| subsets(n, 3).into_iter().map(move |c| (r.clone(), c)))
        .map(|(r, c)| parse_poly(&minor_string(&r, &c, idx), &vars))
        .collect::<Result<Vec<_>>>()?;
    vanishes(ctx, "all 3x3 minors vanish on the image", &minors, &phi)?;
    let rank = jacobian_rank(&phi, &mut ctx.rng);
    let expected = 2 * (m + n) - 4;
    ctx.report.check(&format!("Jacobian rank is {expected}, the dimension of rank-2 matrices"), rank == Some(expected), format!("{rank:?}"));

    // Trop(rank ≤ 2) is the orbit of L = {z_ij = x_i + y_j} under row and column scaling
    let mut eqs = Vec::new();
    for i in 1..m {
        for j in 1..n {
            let mut e = vec![0; m * n];
            e[i * n + j] += 1;
            e[i * n] -= 1;
            e[j] -= 1;
            e[0] += 1;
            eqs.push(e);
        }
    }
    let mut groups: Vec<Vec<usize>> = (0..m).map(|i| (0..n).map(|j| i * n + j).collect()).collect();
    groups.extend((0..n).map(|j| (0..m).map(|i| i * n + j).collect()));
    let smeared = ctx.timed("Trop(L)", |_| smeared_linear_space(&eqs, m * n, &unit_rows(m * n, &groups)));
    let trop_minors: Vec<TropPoly> = minors.iter().map(tropicalize_poly).collect::<Result<_>>()?;
    if m == 3 && n == 3 {
        let x = trop_hypersurface(&trop_minors[0]);
        let ok = ctx.timed("rank2 mutual covers", |ctx| mutual(ctx, "rank 2", ("Trop(det)", &x.complex), ("Trop(L) + scaling", &smeared)))?;
        ctx.report.check("Trop(L) + row and column scaling equals Trop(det)", ok, "");
        let direct = ctx.timed("rank2 direct image", |_| image(&phi))?;
        let r = covers(&x.complex, &direct)?;
        ctx.report.coverage("rank 2: Trop(det) by direct image", "Trop(det)", "im Trop(rank2)", &r);
        ctx.report.observe(
            "the direct map is not tropically surjective (its image has Barvinok rank at most 2)",
            !r.covered,
            format!("{} witnesses", r.witnesses.len()),
        );
    }
    let t = tropicalize_map(&phi)?;
    let c = containment("rank2", "tropical 3x3 minors", &t, |xi| in_corner_loci(&trop_minors, xi), 50, &mut ctx.rng);
    ctx.report.containment.push(c);
    let c = containment("rank2", "Trop(L) + scaling", &t, |xi| smeared.membership(xi), 50, &mut ctx.rng);
    ctx.report.containment.push(c);
    Ok(())
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub(super) fn grassmannian(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let n = params.usize("n")?;
    let phi = grassmannian2_param(n)?;
    let pairs = pair_index(n);
    let vars: Vec<String> = pairs.iter().map(|(i, j)| format!("p{}{}", i + 1, j + 1)).collect();
    let p = |i: usize, j: usize| format!("p{}{}", i + 1, j + 1);
    let relations = subsets(n, 4)
        .iter()
        .map(|s| {
            let (i, j, k, l) = (s[0], s[1], s[2], s[3]);
            parse_poly(&format!("{}*{} - {}*{} + {}*{}", p(i, j), p(k, l), p(i, k), p(j, l), p(i, l), p(j, k)), &vars)
        })
        .collect::<Result<Vec<_>>>()?;
    vanishes(ctx, "three-term Pluecker relations vanish on the image", &relations, &phi)?;
    let rank = jacobian_rank(&phi, &mut ctx.rng);
    let expected = 2 * n - 3;
    ctx.report.check(&format!("Jacobian rank is {expected}, the dimension of the cone over Gr(2,{n})"), rank == Some(expected), format!("{rank:?}"));

    // L = {z_ij = x_i - x_j}: z_ij - z_0j + z_0i = 0
    let pos = |i: usize, j: usize| pairs.iter().position(|&q| q == (i, j)).expect("pair");
    let mut eqs = Vec::new();
    for &(i, j) in pairs.iter().filter(|(i, _)| *i > 0) {
        let mut e = vec![0; pairs.len()];
        e[pos(i, j)] += 1;
        e[pos(0, j)] -= 1;
        e[pos(0, i)] += 1;
        eqs.push(e);
    }
    let groups: Vec<Vec<usize>> = (0..n).map(|k| pairs.iter().enumerate().filter(|(_, (i, j))| *i == k || *j == k).map(|(t, _)| t).collect()).collect();
    let smeared = ctx.timed("Trop(L)", |_| smeared_linear_space(&eqs, pairs.len(), &unit_rows(pairs.len(), &groups)));
    let trop_rel: Vec<TropPoly> = relations.iter().map(tropicalize_poly).collect::<Result<_>>()?;
    if n == 4 {
        let x = trop_hypersurface(&trop_rel[0]);
        let ok = mutual(ctx, "Gr(2,4)", ("Trop(X)", &x.complex), ("Trop(L) + scaling", &smeared))?;
        ctx.report.check("Trop(L) + scaling equals the tropical Pluecker hypersurface", ok, "");
        let direct = image(&phi)?;
        let r = covers(&x.complex, &direct)?;
        ctx.report.coverage("Gr(2,4): Trop(X) by direct image", "Trop(X)", "im Trop(grassmannian)", &r);
        ctx.report.observe("the direct map is tropically surjective", r.covered, format!("{} witnesses", r.witnesses.len()));
    }
    let t = tropicalize_map(&phi)?;
    let c = containment("grassmannian", "tropical Pluecker relations", &t, |xi| in_corner_loci(&trop_rel, xi), 50, &mut ctx.rng);
    ctx.report.containment.push(c);
    let c = containment("grassmannian", "Trop(L) + scaling", &t, |xi| smeared.membership(xi), 50, &mut ctx.rng);
    ctx.report.containment.push(c);
    Ok(())
}

pub(super) fn horn(params: &Params, ctx: &mut Ctx) -> Result<()> {
    let (a, disc, vars): (Vec<Vec<i64>>, &str, &[&str]) = match params.get("a") {
        "quadratic" => (vec![vec![1, 1, 1], vec![0, 1, 2]], "b^2 - 4*a*c", &["a", "b", "c"]),
        "cubic" => (vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]], "b^2*c^2 - 4*a*c^3 - 4*b^3*d - 27*a^2*d^2 + 18*a*b*c*d", &["a", "b", "c", "d"]),
        other => return Err(Error::InvalidInput(format!("horn: unknown A `{other}` (quadratic, cubic)"))),
    };
    let n = vars.len();
    let phi = horn_param(&a)?;
    let disc = parse_poly(disc, &names(vars))?;
    vanishes(ctx, "the discriminant vanishes on the image", std::slice::from_ref(&disc), &phi)?;
    let rank = jacobian_rank(&phi, &mut ctx.rng);
    ctx.report.check("the Horn map is dominant onto a hypersurface", rank == Some(n - 1), format!("{rank:?}"));

    // Trop(ker A) smeared by the row space of A
    let x = trop_hypersurface(&tropicalize_poly(&disc)?);
    let smeared = smeared_linear_space(&a, n, &a);
    let ok = mutual(ctx, "discriminant", ("Trop(X)", &x.complex), ("Trop(ker A) + rowspace(A)", &smeared))?;
    ctx.report.check("Trop(ker A) + rowspace(A) equals the tropical discriminant", ok, "");
    let direct = image(&phi)?;
    let r = covers(&x.complex, &direct)?;
    ctx.report.coverage("discriminant by direct image", "Trop(X)", "im Trop(horn)", &r);
    ctx.report.observe("the Horn map with an integer kernel basis is tropically surjective", r.covered, format!("{} witnesses", r.witnesses.len()));
    let tp = vec![tropicalize_poly(&disc)?];
    let c = containment("horn", "Trop(X)", &tropicalize_map(&phi)?, |xi| in_corner_loci(&tp, xi), 50, &mut ctx.rng);
    ctx.report.containment.push(c);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert!(p.contains(&(vec![0, 1, 2], 1)));
        assert!(p.contains(&(vec![1, 0, 2], -1)));
        assert!(p.contains(&(vec![1, 2, 0], 1)));
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert!(subsets(2, 3).is_empty());
    }
}
