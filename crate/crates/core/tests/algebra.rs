use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vps_core::algebra::linalg::modular_rank_retry;
use vps_core::algebra::modular::DEFAULT_PRIMES;
use vps_core::algebra::mono::mono_basis;
use vps_core::algebra::scalar::{int, Scalar};
use vps_core::algebra::{ExactMatrix, Form, Ring};

fn random_form(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Form {
    let terms: Vec<_> = mono_basis(n, d)
        .monos()
        .iter()
        .filter_map(|m| {
            rng.gen_bool(0.6)
                .then(|| (Scalar::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()), m.clone()))
        })
        .collect();
    Form::from_terms(Ring::S, n, d, terms).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize) -> ExactMatrix {
    ExactMatrix::from_rows(
        (0..r)
            .map(|_| (0..c).map(|_| if rng.gen_bool(0.4) { int(0) } else { int(rng.gen_range(-3..=3)) }).collect())
            .collect(),
    )
}

proptest! {
    #[test]
    fn distributive(seed in any::<u64>(), d1 in 0u32..3, d2 in 0u32..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (random_form(&mut rng, 3, d1), random_form(&mut rng, 3, d1), random_form(&mut rng, 3, d2));
        let lhs = f.add(&g).unwrap().mul(&h).unwrap();
        let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_round_trip(seed in any::<u64>(), d in 0u32..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 4, d);
        prop_assume!(!f.is_zero());
        let text = f.to_string();
        let back = Form::parse(&text, Ring::S, 4).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rref_idempotent_and_rank_of_transpose(seed in any::<u64>(), r in 1usize..7, c in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, r, c);
        let (once, rank, _) = m.rref();
        let (twice, _, _) = once.rref();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(rank, m.transpose().rank());
    }

    #[test]
    fn modular_rank_is_a_lower_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, 8, 12);
        let exact = m.rank();
        for p in DEFAULT_PRIMES {
            prop_assert!(m.modular_rank(p).unwrap() <= exact);
        }
        prop_assert_eq!(modular_rank_retry(&m, &DEFAULT_PRIMES).unwrap().0, exact);
    }
}

#[test]
fn small_known_ranks() {
    assert_eq!(ExactMatrix::identity(3).modular_rank(DEFAULT_PRIMES[0]).unwrap(), 3);
    assert_eq!(ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]).modular_rank(DEFAULT_PRIMES[0]).unwrap(), 1);
}

#[test]
fn scalars_are_normalized() {
    let a = Scalar::new(6.into(), (-4).into());
    assert_eq!(a.to_string(), "-3/2");
    assert_eq!(Form::parse("6/4*x1 - 0*x2", Ring::S, 2).unwrap().to_string(), "3/2*x1");
}
