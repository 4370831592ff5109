use std::time::Instant;

use vps_core::algebra::form::Ring;
use vps_core::algebra::modular::DEFAULT_PRIMES;
use vps_core::algebra::scalar::{int, Scalar};
use vps_core::apolarity::quadric::apolar_piece;
use vps_core::apolarity::Quadric;
use vps_core::grassmann::span::{span_of, vps_sample};
use vps_core::grassmann::{
    fit_rnc_degree, plucker, plucker_quadric_space, restrict_quadrics, ruling_curve, vps_span, PluckerVec, Ruling,
};
use vps_core::grobner::GradedIdeal;

fn q4() -> Quadric {
    Quadric::parse("y1*y4 + y2*y3", Ring::T, 4).unwrap()
}

fn ruling_points(r: Ruling, count: i64) -> Vec<((Scalar, Scalar), PluckerVec)> {
    (0..count)
        .map(|t| {
            let par = (int(1), int(t));
            (par.clone(), ruling_curve(&q4(), r, par).unwrap())
        })
        .collect()
}

#[test]
fn span_quadrics_and_restriction() {
    let t = Instant::now();
    let span = vps_span(&q4(), 200, 7, &DEFAULT_PRIMES).unwrap();
    eprintln!("span {:?} in {:?}", span.report, t.elapsed());
    assert_eq!(span.report.projective_dimension, 38);
    assert!(span.report.stabilized);

    let t = Instant::now();
    let quads = plucker_quadric_space(6, 9, 11, &DEFAULT_PRIMES).unwrap();
    eprintln!("quadrics {} ({} blocks) in {:?}", quads.dimension, quads.blocks, t.elapsed());
    assert_eq!(quads.dimension, 1050);
    assert_eq!(quads.monomials, 84 * 85 / 2);

    let t = Instant::now();
    let rest = restrict_quadrics(&quads, &span.basis).unwrap();
    eprintln!("restriction {rest:?} in {:?}", t.elapsed());
    assert_eq!(rest.rank, 380);
    assert_eq!(rest.target_dim, 39 * 40 / 2);

    // restricting to the whole Plücker space loses nothing
    let id: Vec<Vec<Scalar>> = (0..84).map(|i| (0..84).map(|j| int((i == j) as i64)).collect()).collect();
    assert_eq!(restrict_quadrics(&quads, &id).unwrap().rank, 1050);
}

#[test]
fn samples_are_seed_stable() {
    let a = vps_sample(&q4(), 3).unwrap();
    let b = vps_sample(&q4(), 3).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.coords.len(), 84);
}

#[test]
fn each_ruling_spans_a_rational_normal_curve_of_degree_six() {
    let r1 = ruling_points(Ruling::First, 10);
    let r2 = ruling_points(Ruling::Second, 10);
    let pts = |v: &[((Scalar, Scalar), PluckerVec)]| v.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>();
    let s1 = span_of(&pts(&r1), &DEFAULT_PRIMES).unwrap();
    let s2 = span_of(&pts(&r2), &DEFAULT_PRIMES).unwrap();
    assert_eq!(s1.report.projective_dimension, 6);
    assert_eq!(s2.report.projective_dimension, 6);
    let both: Vec<PluckerVec> = pts(&r1).into_iter().chain(pts(&r2)).collect();
    assert_eq!(span_of(&both, &DEFAULT_PRIMES).unwrap().report.projective_dimension, 13);
    assert_eq!(fit_rnc_degree(&r1).unwrap(), 6);
    assert_eq!(fit_rnc_degree(&r2).unwrap(), 6);
}

#[test]
fn too_few_samples_cannot_certify_degree_six() {
    let r1 = ruling_points(Ruling::First, 7);
    assert!(fit_rnc_degree(&r1).is_err());
}

#[test]
fn special_point_has_pinned_plucker_vector() {
    let i = GradedIdeal::parse(Ring::S, 4, &["x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"]).unwrap();
    let p = plucker(&i.piece(2), &apolar_piece(q4().form(), 2)).unwrap();
    assert_eq!(p.nonzero_count(), 1);
    // in the echelon basis of q^⊥_2 the ideal is spanned by the last six rows
    let sets = vps_core::grassmann::plucker::subsets(9, 6);
    let idx = sets.iter().position(|s| s == &vec![3, 4, 5, 6, 7, 8]).unwrap();
    assert_eq!(p.coords[idx], int(1));
    assert_eq!(p, ruling_curve(&q4(), Ruling::First, (int(1), int(0))).unwrap());
}
