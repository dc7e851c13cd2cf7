//! Verification suites. Each returns its assertions; the caller decides how
//! to report them.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use ternion_core::linalg;
use ternion_core::oracle;
use ternion_core::tmodule::enumerate_pairs;
use ternion_core::variety::planes::{
    dual_surface_points, plane_family, segre_points, segre_solutions, span_rank, tube_generator, tube_points,
    twisted_cubic_points,
};
use ternion_core::variety::{
    enumerate_solutions, enumerate_variety_points, free_submodule_images, is_on_variety, jacobian_equations_rank, jacobian_param_rank,
    param_x, segre_membership, twisted_cubic_param, unparametrize, variety_candidates, dual_numbers_param,
    params::enumerate_x_params, Params, QuadricSystem, XParams,
};
use ternion_core::{
    ClassFilter, ExactField, PairClass, RestrictedPoint, Result, Scalar, TernionMatrix2, TernionPair,
};

use crate::report::Assertion;

type Points<S> = BTreeSet<RestrictedPoint<S>>;

/// Number of rational parameter tuples drawn by the sampling suite.
pub const RATIONAL_SAMPLES: usize = 100;

fn order<F: ExactField>(field: &F) -> u64 {
    field.order().expect("exhaustive suites run over finite fields")
}

fn point_json<S: Scalar>(p: &RestrictedPoint<S>) -> Value {
    p.to_json()
}

fn xparams_json<S: Scalar>(xp: &XParams<S>) -> Value {
    Params::X(xp.clone()).to_json()
}

fn matrix_json<S: Scalar>(m: &TernionMatrix2<S>) -> Value {
    Value::Array(
        m.entries
            .iter()
            .map(|row| Value::Array(row.iter().map(|t| t.to_json()).collect()))
            .collect(),
    )
}

fn histogram(values: impl IntoIterator<Item = usize>) -> Value {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0u64) += 1;
    }
    Value::Object(h.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

/// The line `E356 ∨ E456`, normalized.
fn y_line<F: ExactField>(field: &F) -> Result<Points<F::Elem>> {
    let e356 = RestrictedPoint::basepoint(field, 356);
    let e456 = RestrictedPoint::basepoint(field, 456);
    linalg::projective_points(field, 2)?
        .iter()
        .map(|ab| e356.scale(&ab[0]).add(&e456.scale(&ab[1])).normalize())
        .collect()
}

fn set_difference_json<S: Scalar>(left: &Points<S>, right: &Points<S>, names: [&str; 2]) -> Value {
    if let Some(p) = left.difference(right).next() {
        json!({ "point": point_json(p), "only_in": names[0] })
    } else if let Some(p) = right.difference(left).next() {
        json!({ "point": point_json(p), "only_in": names[1] })
    } else {
        Value::Null
    }
}

pub fn theorem<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    theorem_with(field, &QuadricSystem::standard())
}

/// The theorem suite against an arbitrary quadric system, so that perturbed
/// equations can be shown to break it.
pub fn theorem_with<F: ExactField>(field: &F, system: &QuadricSystem) -> Result<Vec<Assertion>> {
    let q = order(field);
    let images = free_submodule_images(field, ClassFilter::Both)?;
    let solutions = enumerate_solutions(field, system)?;
    let equivalence = Assertion::new(
        "equivalence",
        "images of the free cyclic submodules = projective solutions of the linear and quadratic equations",
    )
    .count("pairs", q.pow(6))
    .count("candidates", variety_candidates(q))
    .count("images", images.len())
    .count("solutions", solutions.len())
    .check(images == solutions, || set_difference_json(&images, &solutions, ["images", "solutions"]));

    let x_images = free_submodule_images(field, ClassFilter::X)?;
    let y_images = free_submodule_images(field, ClassFilter::Y)?;
    let line = y_line(field)?;
    let y_image = Assertion::new("y-image", "Y-images are exactly the q+1 points of the line E356 ∨ E456")
        .count("y_images", y_images.len())
        .count("line_points", line.len())
        .check(line.len() as u64 == q + 1, || json!({ "line_points": line.len() }))
        .check(y_images == line, || set_difference_json(&y_images, &line, ["y_images", "line"]));

    let bad_x = x_images.iter().find(|p| p.segre_block_is_zero());
    let bad_y = y_images.iter().find(|p| !p.segre_block_is_zero());
    let coherence = Assertion::new(
        "classification-coherence",
        "X-images have a nonzero Segre block, Y-images a zero one",
    )
    .count("x_images", x_images.len())
    .count("y_images", y_images.len())
    .check(bad_x.is_none(), || json!({ "class": "X", "point": point_json(bad_x.unwrap()) }))
    .check(bad_y.is_none(), || json!({ "class": "Y", "point": point_json(bad_y.unwrap()) }));

    Ok(vec![equivalence, y_image, coherence])
}

pub fn lemma1<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let planes = plane_family(field)?;
    let bad_dim = planes.iter().find(|g| g.vector_dim() != 3);
    let dims = Assertion::new("plane-dimension", "every plane γ(u,v) has vector dimension 3")
        .count("planes", planes.len())
        .check(bad_dim.is_none(), || {
            let g = bad_dim.unwrap();
            json!({ "u": g.u.to_string(), "v": g.v.to_string(), "dim": g.vector_dim() })
        });

    let mut union = BTreeSet::new();
    let mut total = 0;
    for g in &planes {
        let pts = g.points()?;
        total += pts.len();
        union.extend(pts);
    }
    let variety = enumerate_variety_points(field)?;
    let cover = Assertion::new("plane-union", "the union of the planes γ(u,v) equals the variety")
        .count("union", union.len())
        .count("variety", variety.len())
        .check(union == variety, || set_difference_json(&union, &variety, ["planes", "variety"]));
    let disjoint = Assertion::new("plane-disjointness", "distinct planes share no point (derived)")
        .count("sum_of_sizes", total)
        .count("union", union.len())
        .check(total == union.len(), || json!({ "overlap": total - union.len() }));
    Ok(vec![dims, cover, disjoint])
}

pub fn smooth_exhaustive<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let params = enumerate_x_params(field)?;
    let ranks = params
        .par_iter()
        .map(jacobian_param_rank)
        .collect::<Result<Vec<_>>>()?;
    let bad = params.iter().zip(&ranks).find(|(_, &r)| r != 4);
    let param_rank = Assertion::new(
        "param-rank",
        "the parametrization has derivative rank 4 at every parameter tuple",
    )
    .count("tuples", params.len())
    .count("ranks", histogram(ranks.iter().copied()))
    .check(bad.is_none(), || {
        let (xp, r) = bad.unwrap();
        json!({ "params": xparams_json(xp), "rank": r })
    });

    let variety = enumerate_variety_points(field)?;
    let covered = params
        .par_iter()
        .map(|xp| param_x(xp)?.normalize())
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect::<BTreeSet<_>>();
    let coverage = Assertion::new(
        "param-coverage",
        "the parameter tuples (relaxed ones included) reach every variety point",
    )
    .count("images", covered.len())
    .count("variety", variety.len())
    .check(covered == variety, || set_difference_json(&covered, &variety, ["images", "variety"]));

    let eq_ranks = variety
        .par_iter()
        .map(jacobian_equations_rank)
        .collect::<Result<Vec<_>>>()?;
    let bad = variety.iter().zip(&eq_ranks).find(|(_, &r)| r != 4);
    let equation_rank = Assertion::new(
        "equation-rank",
        "observed: the nine quadrics have gradient rank 4 at every point",
    )
    .count("points", variety.len())
    .count("ranks", histogram(eq_ranks.iter().copied()))
    .check(bad.is_none(), || {
        let (p, r) = bad.unwrap();
        json!({ "point": point_json(p), "rank": r })
    });
    Ok(vec![param_rank, coverage, equation_rank])
}

/// Seeded parameter tuples with entries in `[-9, 9]` and nonzero image.
pub fn sample_tuples(seed: u64, n: usize) -> Vec<[i64; 6]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let c: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-9..=9));
        let [a11, b11, a22, b22, a12, b12] = c;
        let unimodular = (a11, b11) != (0, 0) && (a22, b22) != (0, 0);
        let relaxed = (a11, b11) == (0, 0) && a12 * b22 - b12 * a22 != 0;
        if unimodular || relaxed {
            out.push(c);
        }
    }
    out
}

pub fn smooth_sampled<F: ExactField>(field: &F, seed: u64) -> Result<Vec<Assertion>> {
    let tuples = sample_tuples(seed, RATIONAL_SAMPLES);
    let params: Vec<_> = tuples.iter().map(|&c| XParams::from_ints(field, c)).collect();
    let ranks = params.iter().map(jacobian_param_rank).collect::<Result<Vec<_>>>()?;
    let bad = params.iter().zip(&ranks).find(|(_, &r)| r != 4);
    let param_rank = Assertion::new(
        "param-rank-sampled",
        "the parametrization has derivative rank 4 at seeded random parameter tuples",
    )
    .count("seed", seed)
    .count("tuples", params.len())
    .count("ranks", histogram(ranks.iter().copied()))
    .check(bad.is_none(), || {
        let (xp, r) = bad.unwrap();
        json!({ "params": xparams_json(xp), "rank": r })
    });

    let points = params.iter().map(param_x).collect::<Result<Vec<_>>>()?;
    let off = points.iter().find(|p| !is_on_variety(p));
    let on_variety = Assertion::new("image-on-variety-sampled", "sampled parameter images satisfy the equations")
        .count("tuples", points.len())
        .check(off.is_none(), || json!({ "point": point_json(off.unwrap()) }));

    let eq_ranks = points.iter().map(jacobian_equations_rank).collect::<Result<Vec<_>>>()?;
    let bad = points.iter().zip(&eq_ranks).find(|(_, &r)| r != 4);
    let equation_rank = Assertion::new(
        "equation-rank-sampled",
        "observed: the nine quadrics have gradient rank 4 at the sampled points",
    )
    .count("ranks", histogram(eq_ranks.iter().copied()))
    .check(bad.is_none(), || {
        let (p, r) = bad.unwrap();
        json!({ "point": point_json(p), "rank": r })
    });
    Ok(vec![param_rank, on_variety, equation_rank])
}

pub fn unimodular<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let pairs = enumerate_pairs(field)?;
    let verdicts = pairs
        .par_iter()
        .map(|p| Ok((p.is_unimodular(), oracle::has_unimodular_witness(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let bad = pairs.iter().zip(&verdicts).find(|(_, (s, o))| s != o);
    let criterion = Assertion::new(
        "unimodular-criterion",
        "(a11, b11) ≠ 0 ≠ (a22, b22) iff some C, D satisfy AC + BD = I",
    )
    .count("pairs", pairs.len())
    .count("unimodular", verdicts.iter().filter(|(_, o)| *o).count())
    .check(bad.is_none(), || {
        let (p, (s, o)) = bad.unwrap();
        json!({ "pair": p.to_json(), "structural": s, "witness_found": o })
    });

    let bad = pairs
        .par_iter()
        .find_first(|p| (p.classify() == PairClass::X) != p.is_unimodular());
    let classes = Assertion::new("x-class", "a pair is classified X iff it is unimodular")
        .count("pairs", pairs.len())
        .check(bad.is_none(), || json!({ "pair": TernionPair::to_json(bad.unwrap()) }));
    Ok(vec![criterion, classes])
}

pub fn invertibility<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let q = order(field);
    let all = oracle::enumerate_matrices(field)?;
    let search = q == 2;
    let verdicts: Vec<(bool, bool)> = all
        .par_iter()
        .map(|m| {
            let reference = if search {
                oracle::has_matrix_inverse(m, &all)
            } else {
                oracle::left_multiplication_rank(m) == 12
            };
            (m.is_invertible(), reference)
        })
        .collect();
    let bad = all.iter().zip(&verdicts).find(|(_, (s, o))| s != o);
    let criterion = Assertion::new(
        "invertibility-criterion",
        "a matrix over T is invertible iff both diagonal projections have nonzero determinant",
    )
    .count("matrices", all.len())
    .count("invertible", verdicts.iter().filter(|(_, o)| *o).count())
    .count("oracle", if search { "inverse search" } else { "left-multiplication rank" })
    .check(bad.is_none(), || {
        let (m, (s, o)) = bad.unwrap();
        json!({ "matrix": matrix_json(m), "structural": s, "reference": o })
    });
    Ok(vec![criterion])
}

pub fn roundtrip<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let variety = enumerate_variety_points(field)?;
    let mut x_cases = 0;
    let mut assertion = Assertion::new(
        "roundtrip",
        "param(unparametrize(p)) ≅ p, with output meeting the X or Y parameter constraints",
    );
    for p in &variety {
        let params = unparametrize(p)?;
        let valid = match &params {
            Params::X(xp) => {
                x_cases += 1;
                xp.is_unimodular()
            }
            Params::Y(yp) => !yp.det().is_zero(),
        };
        let back = params.point()?;
        let same = back.projective_eq(p)?;
        assertion = assertion.check(valid && same, || {
            json!({ "point": point_json(p), "params": params.to_json(), "image": point_json(&back) })
        });
    }
    Ok(vec![assertion
        .count("points", variety.len())
        .count("x_cases", x_cases)
        .count("y_cases", variety.len() - x_cases)])
}

pub fn substructures<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let q = order(field);
    let mut out = Vec::new();

    let cubic = twisted_cubic_points(field)?;
    let off = cubic.iter().find(|p| !is_on_variety(p));
    let cubic_rank = span_rank(&cubic);
    out.push(
        Assertion::new("cubic", "the twisted cubic has q+1 points, all on the variety")
            .count("points", cubic.len())
            .count("vector_rank", cubic_rank)
            .check(cubic.len() as u64 == q + 1, || json!({ "points": cubic.len() }))
            .check(off.is_none(), || json!({ "off_variety": point_json(off.unwrap()) })),
    );
    out.push(
        Assertion::new("cubic-span", "the twisted cubic spans a projective 3-space (vector rank 4)")
            .count("vector_rank", cubic_rank)
            .check(cubic_rank == 4, || json!({ "vector_rank": cubic_rank })),
    );

    let dual = dual_surface_points(field)?;
    let dual_rank = span_rank(&dual);
    out.push(
        Assertion::new("dual-span", "the dual-number surface spans a 6-dimensional vector subspace")
            .count("points", dual.len())
            .count("vector_rank", dual_rank)
            .check(dual_rank == 6, || json!({ "vector_rank": dual_rank })),
    );
    let off = dual.iter().find(|p| !is_on_variety(p));
    let mut directrix = Assertion::new(
        "dual-directrices",
        "each dual-number point lies on the variety and on the line joining its cubic point and its Y point",
    )
    .count("points", dual.len())
    .check(off.is_none(), || json!({ "off_variety": point_json(off.unwrap()) }));
    let e356 = RestrictedPoint::basepoint(field, 356);
    let e456 = RestrictedPoint::basepoint(field, 456);
    for ab in linalg::projective_points(field, 2)? {
        let (a, b) = (&ab[0], &ab[1]);
        let c = twisted_cubic_param(a, b)?;
        let r = e356.scale(a).add(&e456.scale(b));
        for m in linalg::affine_points(field, 2)? {
            let p = dual_numbers_param(a, b, &m[0], &m[1])?;
            let rank = linalg::rank(&[p.0.to_vec(), c.0.to_vec(), r.0.to_vec()]);
            directrix = directrix.check(rank == 2, || {
                json!({ "a": a.to_string(), "b": b.to_string(), "a12": m[0].to_string(), "b12": m[1].to_string(), "rank": rank })
            });
        }
    }
    out.push(directrix);

    let tube = tube_points(field)?;
    let outside = tube.iter().find(|p| !segre_membership(p));
    out.push(
        Assertion::new("tube", "the tube lies on the Segre variety and has (q+1)^2 points")
            .count("points", tube.len())
            .check(outside.is_none(), || json!({ "off_segre": point_json(outside.unwrap()) }))
            .check(tube.len() as u64 == (q + 1) * (q + 1), || json!({ "points": tube.len() })),
    );
    let mut meets = Assertion::new("cubic-meets-generators", "the twisted cubic meets each tube generator exactly once")
        .count("generators", q + 1);
    for uv in linalg::projective_points(field, 2)? {
        let generator = tube_generator(field, &uv[0], &uv[1])?;
        let shared = generator.intersection(&cubic).count();
        meets = meets.check(shared == 1, || {
            json!({ "u": uv[0].to_string(), "v": uv[1].to_string(), "shared_points": shared })
        });
    }
    out.push(meets);

    let image = segre_points(field)?;
    let solutions = segre_solutions(field)?;
    out.push(
        Assertion::new(
            "segre-consistency",
            "the product parametrization of the Segre variety equals its equation solution set",
        )
        .count("image", image.len())
        .count("solutions", solutions.len())
        .check(image == solutions, || set_difference_json(&image, &solutions, ["image", "solutions"])),
    );
    Ok(out)
}

/// Closed-form counts, each confirmed against the enumeration.
pub fn expected_counts(q: u64) -> [(&'static str, &'static str, u64); 8] {
    [
        ("variety", "(q+1)(q^2+q+1)", (q + 1) * (q * q + q + 1)),
        ("x-image", "q(q+1)^2", q * (q + 1) * (q + 1)),
        ("y-image", "q+1", q + 1),
        ("submodules", "(q+1)(q^2+q+1)", (q + 1) * (q * q + q + 1)),
        ("segre", "(q^2+q+1)(q+1)", (q * q + q + 1) * (q + 1)),
        ("cubic", "q+1", q + 1),
        ("tube", "(q+1)^2", (q + 1) * (q + 1)),
        ("dual-surface", "q(q+1)", q * (q + 1)),
    ]
}

/// Enumerated sizes in the order of [`expected_counts`].
pub fn observed_counts<F: ExactField>(field: &F) -> Result<[usize; 8]> {
    Ok([
        enumerate_variety_points(field)?.len(),
        free_submodule_images(field, ClassFilter::X)?.len(),
        free_submodule_images(field, ClassFilter::Y)?.len(),
        ternion_core::tmodule::enumerate_free_submodules(field, ClassFilter::Both)?.len(),
        segre_points(field)?.len(),
        twisted_cubic_points(field)?.len(),
        tube_points(field)?.len(),
        dual_surface_points(field)?.len(),
    ])
}

pub fn counts<F: ExactField>(field: &F) -> Result<Vec<Assertion>> {
    let q = order(field);
    let observed = observed_counts(field)?;
    let mut out: Vec<Assertion> = expected_counts(q)
        .iter()
        .zip(observed)
        .map(|((name, form, expected), got)| {
            Assertion::new(&format!("count-{name}"), &format!("|{name}| = {form}"))
                .count("expected", *expected)
                .count("observed", got)
                .check(got as u64 == *expected, || json!({ "observed": got }))
        })
        .collect();

    let x = free_submodule_images(field, ClassFilter::X)?;
    let y = free_submodule_images(field, ClassFilter::Y)?;
    let variety = enumerate_variety_points(field)?;
    let union: Points<F::Elem> = x.union(&y).cloned().collect();
    let shared = x.intersection(&y).next();
    out.push(
        Assertion::new("x-y-partition", "the X- and Y-images partition the variety")
            .count("x_images", x.len())
            .count("y_images", y.len())
            .check(shared.is_none(), || json!({ "in_both": point_json(shared.unwrap()) }))
            .check(union == variety, || set_difference_json(&union, &variety, ["images", "variety"])),
    );
    Ok(out)
}
