//! One PASS/FAIL line per acceptance criterion. Expected values come from
//! hand derivations in this file, not from the library under test.
//!
//! Criteria 5 and 9 cannot hold as stated; they are still computed and
//! printed, and the test asserts the reason they fail.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropcover::constructions::{
    eval_at, grassmannian2_param, horizontal_cells, horn_param, local_linearity_check, projection_inverse_linear, puiseux_roots, rank2_param,
    upoly_coefficients, WeightPoint,
};
use tropcover::laurent::{compose_maps, dehomogenize_map, homogenize_map, min_homogenization_degree, parse_map, parse_poly, substitute, RationalMap};
use tropcover::polyhedra::{covers, LinConstraint, PolyhedralComplex, Polyhedron, Relation};
use tropcover::scalar::{GaussianRational, PuiseuxPoly, Rational};
use tropcover::scenarios::sample::random_point;
use tropcover::scenarios::{
    cofactor_identities, random_rank3_matrix, run_scenario, Report, HANKEL_DET, HANKEL_IOTA, HANKEL_PHI, HANKEL_PSI, LINE_PHI, LINE_POLY, LINE_PSI,
};
use tropcover::tropical::{linearity_complex, pl_image, trop_eval_map, trop_hypersurface, tropicalize_map, tropicalize_poly};

const KNOWN_UNATTAINABLE: [usize; 2] = [5, 9];

struct Outcome {
    passed: bool,
    /// For a known failure: everything else holds and the failing part
    /// fails for the recorded reason.
    explained: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, explained: false, detail: detail.into() }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn image(phi: &RationalMap) -> PolyhedralComplex {
    pl_image(&linearity_complex(&tropicalize_map(phi).unwrap()).unwrap())
}

fn scenario(name: &str, params: &[(&str, &str)]) -> Report {
    let p: BTreeMap<String, String> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    run_scenario(name, &p, 0).unwrap()
}

fn mutual(a: &PolyhedralComplex, b: &PolyhedralComplex) -> bool {
    covers(a, b).unwrap().covered && covers(b, a).unwrap().covered
}

/// Primitive direction of a one-dimensional cone through the origin.
fn ray_direction(c: &Polyhedron) -> Vec<Rational> {
    let p = c.relative_interior_point().unwrap();
    let m = p.iter().map(Rational::abs).max().unwrap();
    p.iter().map(|x| x / &m).collect()
}

fn c1_line() -> Outcome {
    let f = parse_poly(LINE_POLY, &names(&["x", "y"])).unwrap();
    let x = trop_hypersurface(&tropicalize_poly(&f).unwrap());
    // min(ξx, ξy, 0) ties along (-1,-1), (0,1) and (1,0)
    let expected: BTreeSet<Vec<Rational>> = [qs(&[-1, -1]), qs(&[0, 1]), qs(&[1, 0])].into();
    let rays: BTreeSet<Vec<Rational>> = x.complex.cells().iter().filter(|c| c.dimension() == 1).map(ray_direction).collect();
    let three = x.complex.len() == 3 && rays == expected;
    let phi = covers(&x.complex, &image(&parse_map(LINE_PHI).unwrap())).unwrap();
    let north = !phi.covered && !phi.witnesses.is_empty() && phi.witnesses.iter().all(|w| w[0].is_zero() && !w[1].is_negative());
    let psi = covers(&x.complex, &image(&parse_map(LINE_PSI).unwrap())).unwrap().covered;
    outcome(three && north && psi, format!("rays {rays:?}; phi witnesses {:?}; psi covers {psi}", phi.witnesses))
}

fn c2_homogenisation() -> Outcome {
    let r = scenario("homogenisation", &[]);
    let mut details = Vec::new();
    let mut ok = true;
    for label in ["line phi", "line psi", "rank2(2,3)"] {
        let law = r.find_check(&format!("{label}: im Trop(phi~) = {{0}} x im Trop(phi) + R(1,...,1)")).is_some_and(|c| c.passed);
        let least = r.checks.iter().any(|c| c.name.starts_with(&format!("{label}: degree")) && c.passed);
        ok &= law && least;
        details.push(format!("{label}: {law}"));
    }
    // the homogenised map is homogeneous of degree d and dehomogenises back
    for phi in [parse_map(LINE_PHI).unwrap(), parse_map(LINE_PSI).unwrap(), rank2_param(2, 3).unwrap()] {
        let d = min_homogenization_degree(&phi);
        let tilde = homogenize_map(&phi, d).unwrap();
        let homogeneous = tilde.components().iter().all(|c| c.num().is_homogeneous_of_degree(d) && c.den().is_one());
        let back = dehomogenize_map(&tilde).unwrap().equivalent(&phi);
        ok &= homogeneous && back;
    }
    outcome(ok, details.join("; "))
}

fn c3_combination() -> Outcome {
    let r = scenario("combine", &[("pairs", "5")]);
    let checks: Vec<_> = r.checks.iter().filter(|c| c.name.ends_with("combination contains both images")).collect();
    let hankel = checks.iter().any(|c| c.name.starts_with("hankel"));
    let ok = checks.len() == 6 && hankel && checks.iter().all(|c| c.passed);
    outcome(ok, format!("{} of {} combinations verified", checks.iter().filter(|c| c.passed).count(), checks.len()))
}

fn c4_singular() -> Outcome {
    let vars = names(&["m11", "m12", "m21", "m22"]);
    let f = parse_poly("m11*m22 - m12*m21", &vars).unwrap();
    let x = trop_hypersurface(&tropicalize_poly(&f).unwrap());
    let plane = Polyhedron::new(4, vec![LinConstraint::from_ints(&[1, -1, -1, 1], 0, Relation::Eq)]).unwrap();
    let is_plane = x.complex.len() == 1 && x.complex.cells()[0].same_set(&plane);
    let spec = projection_inverse_linear(&f, 3, &vars).unwrap();
    let full = covers(&x.complex, &spec.image().unwrap()).unwrap().covered;

    let r3 = scenario("singular", &[("n", "3")]);
    let h = &r3.horizontal[0];
    let ok3 = h.specs.len() == 9 && h.uncovered.is_empty() && h.all_confirmed && h.cells.iter().all(|c| c.confirmed.iter().all(|&b| b));
    outcome(
        is_plane && full && ok3,
        format!("n=2 plane {is_plane}, covered {full}; n=3 {} cells, uncovered {:?}, confirmed {}", h.cells.len(), h.uncovered, h.all_confirmed),
    )
}

/// `{ξ ∈ R^3 : r·ξ ≤ 0 for every row r}`.
fn cone3(rows: &[[i64; 3]]) -> Polyhedron {
    Polyhedron::new(3, rows.iter().map(|r| LinConstraint::from_ints(r, 0, Relation::Le)).collect()).unwrap()
}

fn c5_hankel() -> Outcome {
    let z = names(&["z0", "z1", "z2", "z3", "z4"]);
    let f = parse_poly(HANKEL_DET, &z).unwrap();
    let x = trop_hypersurface(&tropicalize_poly(&f).unwrap());
    let letters: [(char, [i64; 5]); 5] =
        [('a', [1, 0, 1, 0, 1]), ('b', [0, 1, 1, 1, 0]), ('c', [0, 2, 0, 0, 1]), ('d', [1, 0, 0, 2, 0]), ('e', [0, 0, 3, 0, 0])];
    let letter = |e: &[i64]| letters.iter().find(|(_, m)| m == e).unwrap().0;
    // a + 2b = c + d + e: the segment ab meets the triangle cde, so ab is the only non-edge
    let dep = (0..5).all(|k| letters[0].1[k] + 2 * letters[1].1[k] == letters[2].1[k] + letters[3].1[k] + letters[4].1[k]);
    let mut expected_edges = BTreeSet::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if (i, j) != (0, 1) {
                expected_edges.insert(format!("{}{}", letters[i].0, letters[j].0));
            }
        }
    }
    let pair = |(a, b): &(Vec<i64>, Vec<i64>)| {
        let mut v = [letter(a), letter(b)];
        v.sort();
        format!("{}{}", v[0], v[1])
    };
    let edges: BTreeSet<String> = x.pair_labels.iter().map(pair).collect();
    let fan = dep && x.complex.len() == 9 && edges == expected_edges;

    // horizontal for neither projection iff both α0 = β0 and α4 = β4: only be
    let specs = [projection_inverse_linear(&f, 0, &z).unwrap(), projection_inverse_linear(&f, 4, &z).unwrap()];
    let neither: Vec<String> = x
        .complex
        .cells()
        .iter()
        .zip(&x.pair_labels)
        .filter(|(c, _)| specs.iter().all(|s| !c.is_horizontal(&s.trop_projection())))
        .map(|(_, p)| pair(p))
        .collect();
    let one = neither == ["be"];

    let phi = parse_map(HANKEL_PHI).unwrap();
    let psi = parse_map(HANKEL_PSI).unwrap();
    let psi_iota = compose_maps(&psi, &parse_map(HANKEL_IOTA).unwrap()).unwrap();
    let c_psi = local_linearity_check(&phi, &psi, &WeightPoint::generic(qs(&[2, 0, 1]))).unwrap();
    let c_iota = local_linearity_check(&phi, &psi_iota, &WeightPoint::generic(qs(&[-2, 0, -1]))).unwrap();
    let certs = c_psi.valid && c_psi.rank == 3 && c_iota.valid && c_iota.rank == 3;

    let k = x.pair_labels.iter().position(|p| pair(p) == "be").unwrap();
    let p = x.complex.cells()[k].clone();
    // ξ0 ≥ 0, ξ2 ≥ 4ξ1, ξ2 ≤ ξ0 + 4ξ1 and 0 ≥ ξ0, 4ξ1 ≥ ξ2, ξ2 ≥ ξ0 + ξ1 as stated
    let im_psi = c_psi.image_of(&cone3(&[[-1, 0, 0], [0, 4, -1], [-1, -4, 1]])).unwrap();
    let im_iota = c_iota.image_of(&cone3(&[[1, 0, 0], [0, -4, 1], [1, 1, -1]])).unwrap();
    let inside = p.contains_polyhedron(&im_psi) && p.contains_polyhedron(&im_iota);
    let images = PolyhedralComplex::from_cells(5, vec![im_psi, im_iota]).unwrap().add_lineality(&[qs(&[1, 1, 1, 1, 1])]);
    let full_dim = images.dimension() == 4;
    let cover = covers(&PolyhedralComplex::from_cells(5, vec![p.clone()]).unwrap(), &images).unwrap();
    // the third coordinate of Trop(φ∘ψ) on its cone: 2ξ1 computed, 2ξ2 printed
    let third = c_psi.differential[2].clone();
    let rest = fan && one && certs && inside && full_dim;
    let mut o = outcome(
        rest && cover.covered,
        format!(
            "edges {edges:?}; neither {neither:?}; certificates {certs}; images in P {inside}; joint dimension {}; covers(P, images + R1) = {} witness {:?}; third row {third:?}",
            images.dimension(),
            cover.covered,
            cover.witnesses.first()
        ),
    );
    // P is not covered: the witness lies in P and outside both images
    o.explained = rest && !cover.covered && cover.witnesses.first().is_some_and(|w| p.contains(w) && !images.membership(w));
    o
}

fn c6_yu_yuster() -> Outcome {
    let r = scenario("linear", &[("count", "10")]);
    let checks: Vec<_> = r.checks.iter().filter(|c| c.name.ends_with("Yu-Yuster image equals Trop(V)")).collect();
    let puiseux = checks.iter().filter(|c| c.name.contains("Puiseux")).count();
    let ok = checks.len() == 10 && puiseux > 0 && puiseux < 10 && checks.iter().all(|c| c.passed);
    outcome(ok, format!("{} of {} spaces, {puiseux} with Puiseux coefficients", checks.iter().filter(|c| c.passed).count(), checks.len()))
}

fn vanishes_on(src: &str, vars: &[String], phi: &RationalMap) -> bool {
    substitute(&parse_poly(src, vars).unwrap(), phi.components()).unwrap().is_zero()
}

fn c7_identities() -> Outcome {
    let m: Vec<String> = (1..=3).flat_map(|i| (1..=3).map(move |j| format!("m{i}{j}"))).collect();
    let det3 = "m11*m22*m33 + m12*m23*m31 + m13*m21*m32 - m13*m22*m31 - m11*m23*m32 - m12*m21*m33";
    let rank2 = vanishes_on(det3, &m, &rank2_param(3, 3).unwrap());
    let p = names(&["p12", "p13", "p14", "p23", "p24", "p34"]);
    let plucker = vanishes_on("p12*p34 - p13*p24 + p14*p23", &p, &grassmannian2_param(4).unwrap());
    let horn = vanishes_on("b^2 - 4*a*c", &names(&["a", "b", "c"]), &horn_param(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap());
    outcome(rank2 && plucker && horn, format!("det3 {rank2}, Pluecker {plucker}, discriminant {horn}"))
}

fn c8_projection_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut details = Vec::new();
    let mut ok = true;
    for (src, vars, drops) in
        [("m11*m22 - m12*m21", names(&["m11", "m12", "m21", "m22"]), vec![3]), (HANKEL_DET, names(&["z0", "z1", "z2", "z3", "z4"]), vec![0, 4])]
    {
        let f = parse_poly(src, &vars).unwrap();
        let x = trop_hypersurface(&tropicalize_poly(&f).unwrap());
        for i in drops {
            let spec = projection_inverse_linear(&f, i, &vars).unwrap();
            let t = tropicalize_map(&spec.inverse).unwrap();
            let moved = (0..20)
                .filter(|_| {
                    let eta = random_point(&mut rng, vars.len() - 1);
                    let xi = trop_eval_map(&t, &eta);
                    let back: Vec<Rational> = (0..vars.len()).filter(|&k| k != i).map(|k| xi[k].clone()).collect();
                    back != eta
                })
                .count();
            let m = mutual(&spec.image().unwrap(), &horizontal_cells(&x, &spec));
            ok &= moved == 0 && m;
            details.push(format!("{} drop {i}: {moved} moved, mutual {m}", vars[0]));
        }
    }
    outcome(ok, details.join("; "))
}

fn c9_fourfive() -> Outcome {
    let r = scenario("fourfive", &[("samples", "100")]);
    let get = |name: &str| r.find_check(name).unwrap();
    let id1 = get("expansion of det M(1234, 2345) vanishes");
    let id2 = get("expansion of det M(1234, 1345) vanishes");
    let solv = get("the 2x2 system for (m35, m45) is solvable on at least 95%");
    let printed: Vec<&str> =
        r.observations.iter().filter(|c| c.name.starts_with("printed") && c.name.ends_with("vanishes")).map(|c| c.detail.as_str()).collect();
    let mut o = outcome(
        id1.passed && id2.passed && solv.passed,
        format!("sign-corrected identities vanish on {} / {}; as printed on {printed:?}; solvable {}", id1.detail, id2.detail, solv.detail),
    );
    // the 2x2 coefficient matrix is a minor of the rank-one adjugate of M(1234, 1234)
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let singular = (0..20).all(|_| cofactor_identities(&random_rank3_matrix(&mut rng)).unwrap().solvability.is_zero());
    o.explained = id1.passed && id2.passed && !solv.passed && singular;
    o
}

/// First `k` terms of `(1 + c x)^{1/2}` in `x`.
fn sqrt_series(c: &Rational, k: usize) -> Vec<Rational> {
    let half = Rational::new(1, 2);
    let mut out = vec![Rational::one()];
    let mut binom = Rational::one();
    for n in 1..k {
        binom = &(&binom * &(&half - &q(n as i64 - 1))) / &q(n as i64);
        out.push(&binom * &c.pow(n as i64).unwrap());
    }
    out
}

fn series(coeffs: &[(Rational, Rational)]) -> PuiseuxPoly {
    PuiseuxPoly::from_terms(coeffs.iter().map(|(e, c)| (e.clone(), GaussianRational::real(c.clone()))))
}

fn c10_roots() -> Outcome {
    let s = names(&["S"]);
    let neg = |v: &[Rational]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let ints = |v: &[Rational]| v.iter().enumerate().map(|(n, c)| (q(n as i64), c.clone())).collect::<Vec<_>>();
    // S² - (1 + t): ±(1 + t)^{1/2}
    let b = sqrt_series(&q(1), 3);
    // S² + S + t: (-1 ± (1 - 4t)^{1/2}) / 2
    let r = sqrt_series(&q(-4), 4);
    let plus: Vec<Rational> = (0..4).map(|n| (&r[n] - &q((n == 0) as i64)) / q(2)).collect();
    let minus: Vec<Rational> = (0..4).map(|n| (-&r[n] - q((n == 0) as i64)) / q(2)).collect();
    let cases: [(&str, Vec<PuiseuxPoly>); 3] = [
        ("S^2 - t", vec![series(&[(Rational::new(1, 2), q(1))]), series(&[(Rational::new(1, 2), q(-1))])]),
        ("S^2 + S + t", vec![series(&ints(&plus)[1..]), series(&ints(&minus)[..3])]),
        ("S^2 - (1 + t)", vec![series(&ints(&b)), series(&ints(&neg(&b)))]),
    ];
    let mut ok = true;
    let mut details = Vec::new();
    for (src, expected) in cases {
        let p = upoly_coefficients(&parse_poly(src, &s).unwrap()).unwrap();
        let roots = puiseux_roots(&p, 3).unwrap();
        let got: BTreeSet<String> = roots.iter().map(|r| r.series.to_string()).collect();
        let want: BTreeSet<String> = expected.iter().map(|e| e.to_string()).collect();
        let mut increasing = true;
        for root in &roots {
            let vals: Vec<Option<Rational>> = (1..=root.series.num_terms()).map(|j| eval_at(&p, &root.series.first_terms(j)).min_exp().cloned()).collect();
            increasing &= vals.windows(2).all(|w| match (&w[0], &w[1]) {
                (Some(a), Some(b)) => b > a,
                (Some(_), None) => true,
                _ => false,
            });
        }
        ok &= got == want && increasing;
        details.push(format!("{src}: {got:?}"));
    }
    outcome(ok, details.join("; "))
}

fn c11_containment(reports: &[Report]) -> Outcome {
    let maps: usize = reports.iter().map(|r| r.containment.len()).sum();
    let short = reports.iter().flat_map(|r| &r.containment).filter(|c| c.points < 50).count();
    let failures: usize = reports.iter().map(|r| r.containment_failures()).sum();
    outcome(maps > 0 && short == 0 && failures == 0, format!("{maps} maps, {failures} failures, {short} with fewer than 50 points"))
}

#[test]
fn acceptance() {
    let with_trop_x: [(&str, &[(&str, &str)]); 10] = [
        ("line", &[]),
        ("singular", &[("n", "2")]),
        ("singular", &[("n", "3")]),
        ("hankel", &[]),
        ("rank2", &[("m", "3"), ("n", "3")]),
        ("grassmannian", &[("n", "4")]),
        ("horn", &[("a", "quadratic")]),
        ("horn", &[("a", "cubic")]),
        ("curves", &[]),
        ("linear", &[("count", "10")]),
    ];
    let reports: Vec<Report> = with_trop_x.iter().map(|(n, p)| scenario(n, p)).collect();

    let results = [
        (1, "line: tripod, phi misses the north ray, psi surjective", c1_line()),
        (2, "homogenisation law", c2_homogenisation()),
        (3, "combination lemma", c3_combination()),
        (4, "singular matrices", c4_singular()),
        (5, "hankel fan, horizontality and reparameterisations", c5_hankel()),
        (6, "yu-yuster parameterises linear spaces", c6_yu_yuster()),
        (7, "parameterisation identities", c7_identities()),
        (8, "projection lemma", c8_projection_lemma()),
        (9, "4x5 rank-3 cofactor identities", c9_fourfive()),
        (10, "puiseux roots", c10_roots()),
        (11, "fundamental containment", c11_containment(&reports)),
    ];
    // written past the test harness's capture so the lines show in every run
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut unexpected = Vec::new();
    for (k, name, o) in &results {
        writeln!(out, "{} {k:2} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail).unwrap();
        if !o.passed && !(KNOWN_UNATTAINABLE.contains(k) && o.explained) {
            unexpected.push(*k);
        }
    }
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
}
