use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vps_core::algebra::linalg::{Echelon, SVec, Subspace};
use vps_core::algebra::mono::{dim_graded, mono_basis};
use vps_core::algebra::{scalar, Form, Ring};
use vps_core::apolarity::Quadric;
use vps_core::grobner::{saturate, GradedIdeal};
use vps_core::limits::*;

fn ex11() -> GradedIdeal {
    GradedIdeal::parse(Ring::S, 4, &["x1*x3 - x2^2", "x2*x3 - x1*x4", "x2*x4", "x3*x4", "x4^2", "x3^2"]).unwrap()
}

fn i_lim() -> GradedIdeal {
    GradedIdeal::parse(
        Ring::S,
        4,
        &["x2^4", "x4^2", "x2*x4", "x3*x4", "x1^2*x4", "x2*x3 - x1*x4", "x3^2", "x1*x3"],
    )
    .unwrap()
}

/// Independent limit: echelon form with columns ordered by increasing
/// weight, then keep the lowest-weight part of every row.
fn oracle_piece(space: &Subspace, w: &WeightVec, d: u32) -> Subspace {
    let n = w.len();
    let basis = mono_basis(n, d);
    let mut cols: Vec<usize> = (0..basis.len()).collect();
    cols.sort_by_key(|&j| (w.of(basis.get(j)), j));
    let pos: Vec<usize> = {
        let mut p = vec![0; cols.len()];
        for (k, &j) in cols.iter().enumerate() {
            p[j] = k;
        }
        p
    };
    let permuted: Vec<SVec> = space
        .basis()
        .iter()
        .map(|r| {
            let mut v: SVec = r.iter().map(|(j, c)| (pos[*j], c.clone())).collect();
            v.sort_by_key(|(j, _)| *j);
            v
        })
        .collect();
    let rref = Echelon::from_rows(permuted.iter()).to_rref();
    let lows: Vec<SVec> = rref
        .iter()
        .map(|r| {
            let lo = w.of(basis.get(cols[r[0].0]));
            let mut v: SVec = r
                .iter()
                .filter(|(k, _)| w.of(basis.get(cols[*k])) == lo)
                .map(|(k, c)| (cols[*k], c.clone()))
                .collect();
            v.sort_by_key(|(j, _)| *j);
            v
        })
        .collect();
    Subspace::span(dim_graded(n, d), &lows)
}

#[test]
fn example_limit_matches_displayed_ideal() {
    let w = WeightVec::new(vec![0, 1, 0, 1]);
    let lim = weight_limit(&ex11(), &w, Some(5)).unwrap();
    assert!(lim.equal_upto(&i_lim(), 5));
    let sat = saturate(&lim);
    let want = GradedIdeal::parse(Ring::S, 4, &["x3", "x4", "x2^4"]).unwrap();
    assert!(sat.equal_upto(&want, 6));
}

#[test]
fn example_limit_stays_apolar_but_saturation_does_not() {
    let q = Quadric::parse("y1*y4 + y2*y3", Ring::T, 4).unwrap();
    let w = WeightVec::new(vec![0, 1, 0, 1]);
    let (lim, report) = degenerate_on_quadric(&ex11(), &q, &w, Some(5)).unwrap();
    assert_eq!(report.q_weight, 1);
    assert!(report.apolar_before && report.apolar_after);
    let sat = saturate(&lim);
    assert!(!q.apolar_ideal().contains_ideal_upto(&sat, 4));
    // saturation and limit do not commute: I is already saturated
    assert!(!weight_limit(&saturate(&ex11()), &w, Some(5)).unwrap().equal_upto(&sat, 5));
}

#[test]
fn not_semi_invariant_is_rejected() {
    let q = Quadric::parse("y1*y4 + y2*y3", Ring::T, 4).unwrap();
    assert!(degenerate_on_quadric(&ex11(), &q, &WeightVec::new(vec![1, 0, 0, 0]), Some(3)).is_err());
}

#[test]
fn fiber_at_one_is_the_ideal() {
    let fam = act_torus(&ex11(), &WeightVec::new(vec![0, 1, 0, 1])).unwrap();
    assert!(fam.fiber(&scalar::one()).unwrap().equal_upto(&ex11(), 4));
    let f2 = fam.fiber(&scalar::int(2)).unwrap();
    assert_eq!(f2.hilbert_function(5).values(), ex11().hilbert_function(5).values());
}

#[test]
fn line_points_slide_to_a_coordinate_point() {
    // t∘[y] = [y1 : t y2 : y3 : t^{-1} y4 : y5] keeps y1y3 + y2y4 + y5²
    let action = [0, 1, 0, -1, 0];
    let w = WeightVec::from_point_action(&action);
    let q = Quadric::parse("y1*y3 + y2*y4 + y5^2", Ring::T, 5).unwrap();
    assert_eq!(w.semi_invariant_weight(q.form()), Some(0));
    // the point [0:1:1:0:0] of the line x1 = x4 = x5 = 0
    let p = GradedIdeal::parse(Ring::S, 5, &["x1", "x4", "x5", "x2 - x3"]).unwrap();
    let lim = weight_limit(&p, &w, Some(3)).unwrap();
    let want = GradedIdeal::parse(Ring::S, 5, &["x1", "x2", "x4", "x5"]).unwrap();
    assert!(lim.equal_upto(&want, 3));
}

#[test]
fn fifth_point_falls_onto_the_line() {
    let w = WeightVec::from_point_action(&[1, 1, 1, 1, 2]);
    // [0:2:3:0:1] on the plane x1 = x4 = 0
    let p = GradedIdeal::parse(Ring::S, 5, &["x1", "x4", "3*x2 - 2*x3", "x3 - 3*x5"]).unwrap();
    let lim = weight_limit(&p, &w, Some(3)).unwrap();
    let want = GradedIdeal::parse(Ring::S, 5, &["x1", "x4", "x5", "3*x2 - 2*x3"]).unwrap();
    assert!(lim.equal_upto(&want, 3));
}

fn random_ideal(seed: u64) -> (GradedIdeal, WeightVec) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 3 + (seed % 2) as usize;
    let basis = mono_basis(n, 2);
    let gens: Vec<Form> = (0..rng.gen_range(2..=4))
        .map(|_| {
            let terms: Vec<_> = (0..3)
                .map(|_| (scalar::int(rng.gen_range(-3..=3)), basis.get(rng.gen_range(0..basis.len())).clone()))
                .collect();
            Form::from_terms(Ring::S, n, 2, terms).unwrap()
        })
        .filter(|f| !f.is_zero())
        .collect();
    let w = WeightVec::new((0..n).map(|_| rng.gen_range(-2..=2)).collect());
    (GradedIdeal::new(Ring::S, n, gens).unwrap(), w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn limits_are_flat_and_match_the_oracle(seed in 0u64..10_000) {
        let (i, w) = random_ideal(seed);
        let lim = weight_limit(&i, &w, Some(4)).unwrap();
        for d in 0..=4 {
            prop_assert_eq!(lim.hilbert(d), i.hilbert(d));
            prop_assert_eq!(&*lim.piece(d), &oracle_piece(&i.piece(d), &w, d));
        }
    }

    #[test]
    fn limits_are_idempotent(seed in 0u64..10_000) {
        let (i, w) = random_ideal(seed);
        let lim = weight_limit(&i, &w, Some(4)).unwrap();
        let again = weight_limit(&lim, &w, Some(4)).unwrap();
        prop_assert!(again.equal_upto(&lim, 4));
    }

    #[test]
    fn initial_forms_lie_in_the_limit(seed in 0u64..10_000) {
        let (i, w) = random_ideal(seed);
        let lim = weight_limit(&i, &w, Some(3)).unwrap();
        for g in i.generators() {
            prop_assert!(lim.contains(&initial_form(g, &w)));
        }
    }
}
