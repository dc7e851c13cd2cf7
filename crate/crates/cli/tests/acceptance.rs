//! Acceptance criteria. Every check is exact: set equality, exact counts and
//! exact ranks over exact fields, so no tolerance applies anywhere.
//!
//! Each criterion prints one `PASS`/`FAIL` line per field it covers; run with
//! `cargo test -p ternion-cli --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::collections::BTreeSet;
use std::process::Command;

use ternion_cli::suites::{expected_counts, observed_counts, sample_tuples, RATIONAL_SAMPLES};
use ternion_core::linalg;
use ternion_core::oracle;
use ternion_core::tmodule::enumerate_pairs;
use ternion_core::variety::params::enumerate_x_params;
use ternion_core::variety::planes::{
    dual_surface_points, plane_family, segre_points, segre_solutions, span_rank, tube_generator, tube_points,
    twisted_cubic_points,
};
use ternion_core::variety::{
    dual_numbers_param, enumerate_variety_points, free_submodule_images, is_on_variety, jacobian_param_rank,
    segre_membership, twisted_cubic_param, unparametrize, Params, XParams,
};
use ternion_core::{ClassFilter, ExactField, PrimeField, RationalField, RestrictedPoint};

/// Required rank of the parametrization's derivative.
const SMOOTH_RANK: usize = 4;
/// Seed of the rational sample for criterion 4.
const RATIONAL_SEED: u64 = 0;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Prints the criterion line and returns the verdict.
fn line(criterion: u32, label: &str, scope: &str, ok: bool, detail: String) -> bool {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("{status} criterion {criterion} {label} [{scope}] {detail}");
    ok
}

fn all(results: impl IntoIterator<Item = bool>) -> bool {
    results.into_iter().all(|ok| ok)
}

#[test]
fn criterion_01_theorem_equivalence() {
    let ok = all([2, 3, 5].map(|q| {
        let f = gf(q);
        let images = free_submodule_images(&f, ClassFilter::Both).unwrap();
        let solutions = enumerate_variety_points(&f).unwrap();
        line(
            1,
            "theorem",
            &format!("q={q}"),
            images == solutions,
            format!("images={} solutions={}", images.len(), solutions.len()),
        )
    }));
    assert!(ok);
}

#[test]
fn criterion_02_y_image() {
    let ok = all([2, 3, 5].map(|q| {
        let f = gf(q);
        let y = free_submodule_images(&f, ClassFilter::Y).unwrap();
        let e356 = RestrictedPoint::basepoint(&f, 356);
        let e456 = RestrictedPoint::basepoint(&f, 456);
        let line_points: BTreeSet<_> = linalg::projective_points(&f, 2)
            .unwrap()
            .iter()
            .map(|ab| e356.scale(&ab[0]).add(&e456.scale(&ab[1])).normalize().unwrap())
            .collect();
        line(
            2,
            "y-image",
            &format!("q={q}"),
            y == line_points && y.len() as u64 == q + 1,
            format!("y_images={} expected={}", y.len(), q + 1),
        )
    }));
    assert!(ok);
}

#[test]
fn criterion_03_lemma1() {
    let ok = all([2, 3, 5].map(|q| {
        let f = gf(q);
        let planes = plane_family(&f).unwrap();
        let dims_ok = planes.iter().all(|g| g.vector_dim() == 3);
        let union: BTreeSet<_> = planes.iter().flat_map(|g| g.points().unwrap()).collect();
        let variety = enumerate_variety_points(&f).unwrap();
        line(
            3,
            "lemma1",
            &format!("q={q}"),
            dims_ok && planes.len() as u64 == q + 1 && union == variety,
            format!("planes={} all_dim_3={dims_ok} union={} variety={}", planes.len(), union.len(), variety.len()),
        )
    }));
    assert!(ok);
}

#[test]
fn criterion_04_smoothness() {
    let finite = [2, 3].map(|q| {
        let f = gf(q);
        let params = enumerate_x_params(&f).unwrap();
        let bad = params.iter().filter(|xp| jacobian_param_rank(*xp).unwrap() != SMOOTH_RANK).count();
        line(4, "smooth", &format!("q={q}"), bad == 0, format!("tuples={} rank_not_4={bad}", params.len()))
    });
    let tuples = sample_tuples(RATIONAL_SEED, RATIONAL_SAMPLES);
    let bad = tuples
        .iter()
        .filter(|&&c| jacobian_param_rank(&XParams::from_ints(&RationalField, c)).unwrap() != SMOOTH_RANK)
        .count();
    let rational = line(
        4,
        "smooth",
        &format!("rational seed={RATIONAL_SEED}"),
        tuples.len() == 100 && bad == 0,
        format!("tuples={} rank_not_4={bad}", tuples.len()),
    );
    assert!(all(finite) && rational);
}

#[test]
fn criterion_05_roundtrip() {
    let ok = all([2, 3].map(|q| {
        let f = gf(q);
        let variety = enumerate_variety_points(&f).unwrap();
        let bad = variety
            .iter()
            .filter(|p| {
                let params = unparametrize(p).unwrap();
                let valid = match &params {
                    Params::X(xp) => xp.is_unimodular(),
                    Params::Y(yp) => yp.det() != f.zero(),
                };
                !(valid && params.point().unwrap().projective_eq(p).unwrap())
            })
            .count();
        line(5, "roundtrip", &format!("q={q}"), bad == 0, format!("points={} failures={bad}", variety.len()))
    }));
    assert!(ok);
}

#[test]
fn criterion_06_unimodular_and_invertibility() {
    let unimodular = [2, 3].map(|q| {
        let f = gf(q);
        let pairs = enumerate_pairs(&f).unwrap();
        let bad = pairs
            .iter()
            .filter(|p| p.is_unimodular() != oracle::has_unimodular_witness(p).unwrap())
            .count();
        line(6, "unimodular", &format!("q={q}"), bad == 0, format!("pairs={} mismatches={bad}", pairs.len()))
    });
    let f = gf(2);
    let matrices = oracle::enumerate_matrices(&f).unwrap();
    let bad = matrices
        .iter()
        .filter(|m| m.is_invertible() != oracle::has_matrix_inverse(m, &matrices))
        .count();
    let invertibility = line(
        6,
        "invertibility",
        "q=2",
        matrices.len() == 4096 && bad == 0,
        format!("matrices={} mismatches={bad}", matrices.len()),
    );
    assert!(all(unimodular) && invertibility);
}

/// The parts of criterion 7 other than the two span ranks.
fn substructure_checks(q: u64) -> bool {
    let f = gf(q);
    let cubic = twisted_cubic_points(&f).unwrap();
    let cubic_ok = cubic.len() as u64 == q + 1 && cubic.iter().all(is_on_variety);

    let dual = dual_surface_points(&f).unwrap();
    let e356 = RestrictedPoint::basepoint(&f, 356);
    let e456 = RestrictedPoint::basepoint(&f, 456);
    let mut on_lines = dual.iter().all(is_on_variety);
    for ab in linalg::projective_points(&f, 2).unwrap() {
        let c = twisted_cubic_param(&ab[0], &ab[1]).unwrap();
        let r = e356.scale(&ab[0]).add(&e456.scale(&ab[1]));
        for m in linalg::affine_points(&f, 2).unwrap() {
            let p = dual_numbers_param(&ab[0], &ab[1], &m[0], &m[1]).unwrap();
            on_lines &= linalg::rank(&[p.0.to_vec(), c.0.to_vec(), r.0.to_vec()]) == 2;
        }
    }

    let tube = tube_points(&f).unwrap();
    let tube_ok = tube.len() as u64 == (q + 1) * (q + 1) && tube.iter().all(segre_membership);
    let meets_once = linalg::projective_points(&f, 2)
        .unwrap()
        .iter()
        .all(|uv| tube_generator(&f, &uv[0], &uv[1]).unwrap().intersection(&cubic).count() == 1);

    line(
        7,
        "substructures",
        &format!("q={q}"),
        cubic_ok && on_lines && tube_ok && meets_once,
        format!(
            "cubic_points={} dual_on_directrix_lines={on_lines} tube_points={} tube_in_segre={tube_ok} meets_each_generator_once={meets_once}",
            cubic.len(),
            tube.len()
        ),
    )
}

/// The two span ranks of criterion 7.
fn span_checks(q: u64) -> bool {
    let f = gf(q);
    let cubic_rank = span_rank(&twisted_cubic_points(&f).unwrap());
    let dual_rank = span_rank(&dual_surface_points(&f).unwrap());
    line(
        7,
        "substructure-spans",
        &format!("q={q}"),
        cubic_rank == 4 && dual_rank == 6,
        format!("cubic_vector_rank={cubic_rank} (need 4) dual_vector_rank={dual_rank} (need 6)"),
    )
}

#[test]
fn criterion_07_substructures() {
    let ok = all([substructure_checks(2), substructure_checks(3), substructure_checks(5), span_checks(3), span_checks(5)]);
    assert!(ok);
}

/// Over F_2 the twisted cubic has only three points and `a^3 = a`, so neither
/// span can reach its required rank. Run with `--include-ignored` to see it.
#[test]
#[ignore = "unattainable over F_2: 3 points cannot span a projective 3-space"]
fn criterion_07_substructure_spans_q2() {
    assert!(span_checks(2));
}

#[test]
fn criterion_08_segre() {
    let ok = all([2, 3].map(|q| {
        let f = gf(q);
        let image = segre_points(&f).unwrap();
        let solutions = segre_solutions(&f).unwrap();
        line(
            8,
            "segre",
            &format!("q={q}"),
            image == solutions,
            format!("image={} solutions={}", image.len(), solutions.len()),
        )
    }));
    assert!(ok);
}

/// Counts fixed after confirming them with the enumeration, in the order
/// variety, x-image, y-image, submodules, segre, cubic, tube, dual-surface.
const GOLDEN: [(u64, [usize; 8]); 3] = [
    (2, [21, 18, 3, 21, 21, 3, 9, 6]),
    (3, [52, 48, 4, 52, 52, 4, 16, 12]),
    (5, [186, 180, 6, 186, 186, 6, 36, 30]),
];

#[test]
fn criterion_09_golden_counts() {
    let ok = all(GOLDEN.map(|(q, golden)| {
        let observed = observed_counts(&gf(q)).unwrap();
        let closed: Vec<usize> = expected_counts(q).iter().map(|c| c.2 as usize).collect();
        line(
            9,
            "counts",
            &format!("q={q}"),
            observed == golden && closed == golden,
            format!("observed={observed:?} golden={golden:?}"),
        )
    }));
    assert!(ok);
}

fn run_cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_ternion")).args(args).output().unwrap();
    (out.stdout, out.status.code())
}

#[test]
fn criterion_10_determinism() {
    let x0 = r#"{"A":{"a11":1,"a12":0,"a22":1},"B":{"a11":0,"a12":0,"a22":0}}"#;
    let rows = "[[1,0,1,0,0,0],[0,0,0,0,1,0],[0,1,0,1,0,0]]";
    let objects = ["variety", "x-image", "y-image", "segre", "cubic", "tube", "dual-surface", "planes", "submodules"];
    let suites = ["theorem", "lemma1", "smooth", "unimodular", "invertibility", "roundtrip", "substructures", "counts", "all"];
    let mut commands: Vec<Vec<&str>> = Vec::new();
    for format in ["json", "csv", "text"] {
        for o in objects {
            commands.push(vec!["enumerate", o, "--field", "p:3", "--format", format]);
        }
        commands.push(vec!["classify", x0, "--field", "p:3", "--format", format]);
        commands.push(vec!["plucker", rows, "--field", "p:3", "--format", format]);
        commands.push(vec!["verify", "smooth", "--field", "rational", "--seed", "7", "--format", format]);
    }
    for s in suites {
        commands.push(vec!["verify", s, "--field", "p:2"]);
    }
    let mut differing = Vec::new();
    for args in &commands {
        let mut single = args.clone();
        single.extend(["--workers", "1"]);
        let mut many = args.clone();
        many.extend(["--workers", "4"]);
        let first = run_cli(args);
        if first != run_cli(args) || first != run_cli(&single) || first != run_cli(&many) {
            differing.push(args.join(" "));
        }
    }
    let ok = line(
        10,
        "determinism",
        "p:2, p:3, rational",
        differing.is_empty(),
        format!("commands={} differing={differing:?}", commands.len()),
    );
    assert!(ok);
}
