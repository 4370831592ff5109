//! Acceptance harness: one PASS/FAIL line per criterion, with timings.
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vps_core::algebra::form::{Form, Ring};
use vps_core::algebra::modular::DEFAULT_PRIMES;
use vps_core::algebra::scalar::{int, Scalar};
use vps_core::apolarity::polarity::random_polarity_trial;
use vps_core::apolarity::{
    inverse_quadric, orthogonalize::residuals, orthogonalize_first_order, polarity_conditions, FirstOrderDeformation,
    Quadric,
};
use vps_core::grassmann::span::span_of;
use vps_core::grassmann::{
    fit_rnc_degree, plucker_quadric_space, restrict_quadrics, vps_span, PluckerVec, Ruling,
};
use vps_core::grobner::{intersect_ideals, is_saturated, saturate, GradedIdeal, HilbFn};
use vps_core::limits::{weight_limit, WeightVec};
use vps_core::reproduce::{ex37_fiber, ex37_quadric, ruling_samples, special_point_ideal, split_quadric};
use vps_core::tangent::{
    c1_split, excess_degree_arithmetic, fano_index_from_adjunction, hilb_tangent, sl2_n4_torus, syz_tangent,
    unsaturated_tangent_bound, weight_decomposition, SyzTarget,
};
use vps_core::vps::criteria::is_apolar;
use vps_core::vps::macaulay::satisfies_macaulay;
use vps_core::vps::{
    apolar_quadrics, build_unsat_limit, check_vps, local_socle_dimension, macaulay_bound, points_ideal,
    polar_simplex_sample, SchemeSpec,
};

/// Criteria whose stated expectation is known not to hold, with the reason.
/// They still print FAIL; they do not fail the run unless they change.
const KNOWN_DEVIATIONS: &[(u32, &str)] = &[(
    10,
    "the t=0 fiber saturates to a length-4 line scheme plus a transverse tangent direction, \
     which spans a plane: H = (1,3,4,5,5,…), not (1,2,3,4,5,5,…)",
)];

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

/// Every Hilbert function computed by the harness, for the Macaulay check.
#[derive(Default)]
struct Seen(Vec<(String, HilbFn)>);

impl Seen {
    fn add(&mut self, what: &str, i: &GradedIdeal) -> HilbFn {
        let h = i.hilbert_function(i.determinacy_bound() + 2);
        self.0.push((what.to_string(), h.clone()));
        h
    }
}

fn ideal(n: usize, gens: &[&str]) -> GradedIdeal {
    GradedIdeal::parse(Ring::S, n, gens).unwrap()
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1(seen: &mut Seen) -> (bool, String) {
    let i = ideal(4, &["x1*x3 - x2^2", "x2*x3 - x1*x4", "x2*x4", "x3*x4", "x4^2", "x3^2"]);
    let want = ideal(4, &["x2^4", "x4^2", "x2*x4", "x3*x4", "x1^2*x4", "x2*x3 - x1*x4", "x3^2", "x1*x3"]);
    let lim = weight_limit(&i, &WeightVec::new(vec![0, 1, 0, 1]), Some(5)).unwrap();
    let sat = saturate(&lim);
    seen.add("ex-1.1 limit", &lim);
    seen.add("ex-1.1 saturation", &sat);
    let q = split_quadric();
    let a = lim.equal_upto(&want, 5);
    let b = sat.equal_upto(&ideal(4, &["x3", "x4", "x2^4"]), 6);
    let c = is_apolar(&lim, &q);
    let d = !is_apolar(&sat, &q);
    (a && b && c && d, format!("limit={a} saturation={b} limit⊆q^⊥={c} saturation⊄q^⊥={d}"))
}

fn c2() -> (bool, String) {
    let q = Quadric::parse("y1*y3 + y2*y4 + y5^2", Ring::T, 5).unwrap();
    let inv = inverse_quadric(&q).unwrap().form().to_string();
    (inv == "4*x1*x3 + 4*x2*x4 + x5^2", inv)
}

fn c3(seen: &mut Seen) -> (bool, String) {
    let cut = intersect_ideals(&ideal(4, &["x3", "x4"]), &split_quadric().apolar_ideal(), 3);
    seen.add("(x3,x4) ∩ q^⊥", &cut);
    let gens = cut.minimalized().render_generators().replace('\n', ", ");
    let ok = cut.equal_upto(&special_point_ideal(), 4) && cut.minimal_generators(4).len() == 6;
    (ok, gens)
}

fn c4() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let (mut agree, mut holds) = (0, 0);
    for k in 0..200 {
        let (l, nsp, q) = random_polarity_trial(&mut rng, 4 + k % 2);
        assert_eq!(l.dim() + nsp.dim(), q.nvars());
        let rep = polarity_conditions(&l, &nsp, &q).unwrap();
        agree += rep.all_agree() as usize;
        holds += rep.conditions[0] as usize;
    }
    (agree == 200 && holds > 0 && holds < 200, format!("{agree}/200 agree, {holds} with all conditions true"))
}

fn c5(seen: &mut Seen) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut found = 0;
    let mut trials = 0;
    while trials < 50 {
        let pts: Vec<Vec<Scalar>> = (0..4).map(|_| (0..4).map(|_| int(rng.gen_range(-4..=4))).collect()).collect();
        if vps_core::algebra::ExactMatrix::from_rows(pts.clone()).det() == int(0) {
            continue; // not spanning
        }
        trials += 1;
        let i = points_ideal(&SchemeSpec::Points(pts), 4).unwrap();
        if trials <= 5 {
            seen.add("reduced spanning scheme", &i);
        }
        let a = apolar_quadrics(&i, trials as u64).unwrap();
        // independent check of the witness: full rank and apolar to I
        if a.witness.as_ref().is_some_and(|w| w.is_full_rank() && is_apolar(&i, w)) {
            found += 1;
        }
    }
    // k[ε1,ε2]/(ε1^4, ε1ε2, ε2²), embedded linearly normally at (1:0:0:0:0)
    // by 1, ε1, ε1², ε1³, ε2
    let fat = ideal(
        5,
        &[
            "x1*x3 - x2^2",
            "x1*x4 - x2*x3",
            "x2*x4",
            "x3^2",
            "x3*x4",
            "x4^2",
            "x2*x5",
            "x3*x5",
            "x4*x5",
            "x5^2",
        ],
    );
    let h = seen.add("non-Gorenstein length 5", &fat);
    let a = apolar_quadrics(&fat, 0).unwrap();
    let pt = [int(1), int(0), int(0), int(0), int(0)];
    let socle = local_socle_dimension(&fat, &pt).unwrap();
    // the literal t=0 fiber is not linearly normal, so no witness either
    let fiber = apolar_quadrics(&saturate(&ex37_fiber(0)), 0);
    let ok = found == 50
        && h.matches_eventually_constant(&[1, 5])
        && a.witness.is_none()
        && a.certified_absent
        && socle == 2
        && fiber.is_err();
    (
        ok,
        format!(
            "witness {found}/50; limit scheme H={h} witness={} certified={} socle={socle}; fiber: {}",
            a.witness.is_some(),
            a.certified_absent,
            fiber.err().map_or("witness search ran".into(), |e| e.to_string())
        ),
    )
}

fn c6() -> (bool, String) {
    let v = special_point_ideal().piece(2);
    let w = sl2_n4_torus();
    let r = syz_tangent(&v, 4, &SyzTarget::Apolar(split_quadric()), Some(&w)).unwrap();
    let weights = r.weights.clone().unwrap_or_default();
    let dec = weight_decomposition(&v, 2, &w).map(|d| d.iter().map(|(k, s)| (*k, s.dim())).collect::<Vec<_>>());
    let ok = r.dimension == 9 && weights == vec![2; 9] && dec == Some(vec![(-2, 3), (0, 3)]);
    (ok, format!("dimension {} weights {weights:?} degree-2 {dec:?}", r.dimension))
}

fn c7(seen: &mut Seen) -> (bool, String) {
    let simplex = ideal(4, &["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"]);
    seen.add("coordinate simplex", &simplex);
    let a = hilb_tangent(&simplex, None).unwrap().dimension;
    let lim = intersect_ideals(&ideal(4, &["x3", "x4", "x2^4"]), &split_quadric().apolar_ideal(), 4);
    seen.add("(x3,x4,x2^4) ∩ q^⊥", &lim);
    let b = hilb_tangent(&lim, None).unwrap().dimension;
    let bound = unsaturated_tangent_bound(4);
    (a == 12 && b as u64 <= bound, format!("simplex {a}; unsaturated limit {b} ≤ {bound}"))
}

fn c8(seen: &Seen) -> (bool, String) {
    let mut mismatches = 0;
    let mut cases = 0;
    for d in 1..=4u32 {
        for h in 1..=20usize {
            cases += 1;
            if macaulay_bound(h as u64, d as u64) as usize != common::lex_segment_growth(h, d) {
                mismatches += 1;
            }
        }
    }
    let bad: Vec<&str> = seen.0.iter().filter(|(_, h)| !satisfies_macaulay(h)).map(|(w, _)| w.as_str()).collect();
    (
        mismatches == 0 && bad.is_empty() && seen.0.len() >= 10,
        format!("oracle {}/{cases} agree; {} Hilbert functions, violations {bad:?}", cases - mismatches, seen.0.len()),
    )
}

fn c9(seen: &mut Seen) -> (bool, String) {
    let q = split_quadric();
    let u = build_unsat_limit(&ideal(4, &["x3", "x4", "x2^4"]), &q).unwrap();
    seen.add("unsaturated limit", &u.ideal);
    let v = check_vps(&u.ideal, &q).unwrap();
    let good = u.line_in_inverse_quadric && v.in_vps && !v.saturated && v.sbl_necessary == Some(true) && v.kri == Some(true);
    // the line x2 = x3 = 0 is not on Q^{-1}
    let u2 = build_unsat_limit(&ideal(4, &["x2", "x3", "x4^4"]), &q).unwrap();
    let v2 = check_vps(&u2.ideal, &q).unwrap();
    (
        good && !u2.line_in_inverse_quadric && v2.kri == Some(false),
        format!(
            "on Q^-1: in_vps={} saturated={} sbl={:?} kri={:?}; off Q^-1: kri={:?}",
            v.in_vps, v.saturated, v.sbl_necessary, v.kri, v2.kri
        ),
    )
}

fn c10(seen: &mut Seen) -> (bool, String) {
    let q = ex37_quadric();
    let one = ex37_fiber(1);
    let zero = ex37_fiber(0);
    seen.add("ex-3.7 t=1", &one);
    seen.add("ex-3.7 t=0", &zero);
    let sat = saturate(&zero);
    let h = seen.add("ex-3.7 t=0 saturation", &sat);
    let a = is_saturated(&one) && is_apolar(&one, &q);
    let b = !is_saturated(&zero) && is_apolar(&zero, &q);
    let c = h.matches_eventually_constant(&[1, 2, 3, 4, 5]);
    (a && b && c, format!("t=1 saturated+apolar={a}; t=0 unsaturated+apolar={b}; saturation H={h}"))
}

fn c11() -> (bool, String) {
    let span = vps_span(&split_quadric(), 200, 0, &DEFAULT_PRIMES).unwrap();
    let quads = plucker_quadric_space(6, 9, 0, &DEFAULT_PRIMES).unwrap();
    let rest = restrict_quadrics(&quads, &span.basis).unwrap();
    let ok = quads.dimension == 1050
        && span.report.projective_dimension == 38
        && span.report.exact_confirmed
        && quads.exact_blocks_checked > 0
        && rest.rank == 380;
    (
        ok,
        format!(
            "quadrics {} ({} blocks exact); span P^{} from {} samples (exact {}); restricted {}",
            quads.dimension,
            quads.exact_blocks_checked,
            span.report.projective_dimension,
            span.report.samples,
            span.report.exact_confirmed,
            rest.rank
        ),
    )
}

fn c12() -> (bool, String) {
    let r1 = ruling_samples(Ruling::First, 10).unwrap();
    let r2 = ruling_samples(Ruling::Second, 10).unwrap();
    let pts = |v: &[((Scalar, Scalar), PluckerVec)]| v.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>();
    // exact spans
    let exact = |v: &[PluckerVec]| {
        vps_core::grassmann::span::exact_span(&v.iter().map(|p| p.coords.clone()).collect::<Vec<_>>()).dim()
    };
    let (e1, e2) = (exact(&pts(&r1)), exact(&pts(&r2)));
    let both: Vec<PluckerVec> = pts(&r1).into_iter().chain(pts(&r2)).collect();
    let eb = exact(&both);
    let mb = span_of(&both, &DEFAULT_PRIMES).unwrap().report.projective_dimension + 1;
    let (d1, d2) = (fit_rnc_degree(&r1).unwrap(), fit_rnc_degree(&r2).unwrap());
    let e = excess_degree_arithmetic(6, c1_split(&[2; 5]));
    let a = fano_index_from_adjunction(6, 10);
    let ok = e1 == 7 && e2 == 7 && eb == 14 && mb == 14 && d1 == 6 && d2 == 6 && e.base + 2 * e.per_curve == 362 && e.total == 362
        && 2 * e.per_curve == 52
        && a == Some(2)
        && -2 == 10 - 6 * a.unwrap_or(0);
    (
        ok,
        format!(
            "spans P^{} and P^{}, combined rank {eb}; degrees {d1}, {d2}; {} + {} = {}; index {a:?}",
            e1 - 1,
            e2 - 1,
            e.base,
            2 * e.per_curve,
            e.total
        ),
    )
}

fn c13(seen: &mut Seen) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut good = 0;
    for k in 0..50u64 {
        let n = 4 + (k % 2) as usize;
        let q = Quadric::random_full_rank(Ring::T, n, &mut rng);
        let s = polar_simplex_sample(&q, k).unwrap();
        let i0 = points_ideal(&SchemeSpec::Points(s.points), 3).unwrap();
        if k < 2 {
            seen.add("sampled polar simplex", &i0);
        }
        let def = FirstOrderDeformation::random(&i0, &mut rng);
        let Ok(f) = orthogonalize_first_order(&def, &q) else { continue };
        let zero = residuals(&def, &f, &q).iter().all(|r| *r == int(0));
        if zero && common::orthogonal_mod_eps2(&def.base, &def.direction, &f, &q) {
            good += 1;
        }
    }
    let _: Option<Form> = None;
    (good == 50, format!("{good}/50 orthogonalized with vanishing residual"))
}

fn main() {
    let mut seen = Seen::default();
    let mut out: Vec<Outcome> = Vec::new();
    let mut run = |id: u32, limit: Duration, f: &mut dyn FnMut() -> (bool, String)| {
        let t = Instant::now();
        let (pass, detail) = f();
        out.push(Outcome { id, pass, detail, elapsed: t.elapsed(), limit });
    };
    run(1, secs(10), &mut || c1(&mut seen));
    run(2, secs(1), &mut c2);
    run(3, secs(1), &mut || c3(&mut seen));
    run(4, secs(30), &mut c4);
    run(5, secs(60), &mut || c5(&mut seen));
    run(6, secs(10), &mut c6);
    run(7, secs(60), &mut || c7(&mut seen));
    run(9, secs(30), &mut || c9(&mut seen));
    run(10, secs(30), &mut || c10(&mut seen));
    run(11, secs(600), &mut c11);
    run(12, secs(300), &mut c12);
    run(13, secs(60), &mut || c13(&mut seen));
    run(8, secs(60), &mut || c8(&seen));
    out.sort_by_key(|o| o.id);

    let mut unexpected = Vec::new();
    for o in &out {
        let in_time = o.elapsed <= o.limit;
        let pass = o.pass && in_time;
        let known = KNOWN_DEVIATIONS.iter().find(|(id, _)| *id == o.id);
        println!(
            "criterion {:>2}: {} [{:.2?} / {:?}] {}",
            o.id,
            if pass { "PASS" } else { "FAIL" },
            o.elapsed,
            o.limit,
            o.detail
        );
        if let (false, Some((_, why))) = (pass, known) {
            println!("              known deviation: {why}");
        }
        if pass == known.is_some() {
            unexpected.push(o.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
