use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vps_core::algebra::mono::mono_basis;
use vps_core::algebra::scalar::int;
use vps_core::algebra::{Form, MonoOrder, Ring, Subspace};
use vps_core::grobner::saturate::{intersect_elim, saturate_degreewise};
use vps_core::grobner::syzygy::{is_syzygy, linear_syzygies};
use vps_core::grobner::{intersect_ideals, is_saturated, saturate, GradedIdeal};
use vps_core::vps::macaulay::satisfies_macaulay;

fn ideal(n: usize, gens: &[&str]) -> GradedIdeal {
    GradedIdeal::parse(Ring::S, n, gens).unwrap()
}

fn random_ideal(seed: u64, n: usize, count: usize) -> GradedIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Form> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=2);
            let terms: Vec<_> = mono_basis(n, d)
                .monos()
                .iter()
                .filter_map(|m| rng.gen_bool(0.35).then(|| (int(rng.gen_range(-2..=2)), m.clone())))
                .collect();
            Form::from_terms(Ring::S, n, d, terms).unwrap()
        })
        .filter(|f| !f.is_zero())
        .collect();
    GradedIdeal::new(Ring::S, n, gens).unwrap()
}

#[test]
fn saturation_of_example_limit() {
    let lim = ideal(4, &["x2^4", "x4^2", "x2*x4", "x3*x4", "x1^2*x4", "x2*x3 - x1*x4", "x3^2", "x1*x3"]);
    assert!(!is_saturated(&lim));
    let sat = saturate(&lim);
    assert!(sat.equal_upto(&ideal(4, &["x3", "x4", "x2^4"]), 6));
    assert!(is_saturated(&sat));
}

#[test]
fn intersection_with_apolar_quadrics() {
    let q = vps_core::apolarity::Quadric::parse("y1*y4 + y2*y3", Ring::T, 4).unwrap();
    let a = ideal(4, &["x3", "x4"]);
    let cut = intersect_ideals(&a, &q.apolar_ideal(), 3);
    let elim = intersect_elim(&a, &q.apolar_ideal());
    assert!(cut.equal_upto(&elim, 5));
    // from degree 3 on this is the ideal of the line
    assert_eq!(cut.hilbert_function(5).values(), &[1, 4, 4, 4, 5, 6]);
}

#[test]
fn groebner_basis_under_two_orders() {
    let i = ideal(3, &["x1^2 - x2*x3", "x1*x2 - x3^2"]);
    for order in [MonoOrder::Grevlex, MonoOrder::Lex] {
        let gb = i.groebner_with(&order);
        for g in i.generators() {
            assert!(gb.contains(g));
        }
        // the basis generates nothing new in low degrees
        let back = GradedIdeal::new(Ring::S, 3, gb.to_forms(Ring::S, 3)).unwrap();
        assert!(back.equal_upto(&i, 5));
    }
}

#[test]
fn linear_syzygies_of_the_special_point() {
    let i = ideal(4, &["x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"]);
    let gens = i.generators().to_vec();
    let syz = linear_syzygies(&gens).unwrap();
    assert_eq!(syz.len(), 8);
    assert!(syz.iter().all(|s| is_syzygy(&gens, s)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn saturation_agrees_with_degreewise_oracle(seed in any::<u64>()) {
        let i = random_ideal(seed, 3, 3);
        prop_assume!(!i.generators().is_empty());
        let sat = saturate(&i);
        let e = i.determinacy_bound();
        for d in 0..=3 {
            let oracle: Subspace = saturate_degreewise(&i, d, e);
            let piece = sat.piece(d);
            prop_assert_eq!(piece.as_ref(), &oracle);
        }
    }

    #[test]
    fn hilbert_functions_obey_macaulay(seed in any::<u64>()) {
        let i = random_ideal(seed, 4, 4);
        prop_assert!(satisfies_macaulay(&i.hilbert_function(6)));
    }

    #[test]
    fn minimal_generators_generate(seed in any::<u64>()) {
        let i = random_ideal(seed, 3, 4);
        let m = i.minimalized();
        prop_assert!(m.equal_upto(&i, 5));
        prop_assert!(m.generators().len() <= i.generators().len());
    }
}
