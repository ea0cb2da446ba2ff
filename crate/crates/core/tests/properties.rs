use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use monogamy::diagram::BrauerDiagram;
use monogamy::extendibility::closed_form::{iso_from_prime, iso_to_prime};
use monogamy::extendibility::envelope::minimize_max_lines;
use monogamy::extendibility::{asymptotic_limit, p_iso_prime, p_w_complete, value, Limit, StateFamily};
use monogamy::partitions::{
    all_partitions, enumerate_brauer_irreps, enumerate_sym_irreps, factorial, mn_character,
    optimal_rectangular_partition, shifted_schur_11, CycleType,
};
use monogamy::{int, ratio, Rational};

fn family() -> impl Strategy<Value = StateFamily> {
    prop::sample::select(StateFamily::ALL.to_vec())
}

proptest! {
    #[test]
    fn werner_value_is_shifted_schur_ratio(n in 2usize..40, d in 2usize..12) {
        let lambda = optimal_rectangular_partition(n, d);
        prop_assert_eq!(lambda.size(), n);
        prop_assert!(lambda.rows() <= d);
        let s = shifted_schur_11(&lambda, d).unwrap() / int((n * (n - 1)) as i128);
        prop_assert_eq!(s, p_w_complete(n, d));
    }

    #[test]
    fn values_lie_between_limit_and_one(f in family(), n in 2usize..40, d in 2usize..12) {
        let v = value(f, n, d).unwrap().value;
        prop_assert!(v <= int(1));
        prop_assert!(v >= asymptotic_limit(f, Limit::ManySites { d }).unwrap(), "{} n={} d={}", f.symbol(), n, d);
        prop_assert_eq!(value(f, 2, d).unwrap().value, int(1));
    }

    #[test]
    fn values_are_nonincreasing_in_n(f in family(), n in 2usize..40, d in 2usize..12) {
        prop_assert!(value(f, n + 1, d).unwrap().value <= value(f, n, d).unwrap().value);
    }

    #[test]
    fn isotropic_parametrizations_agree(n in 2usize..40, d in 2usize..12) {
        let pp = p_iso_prime(n, d);
        prop_assert_eq!(iso_from_prime(pp, d), value(StateFamily::Isotropic, n, d).unwrap().value);
        prop_assert_eq!(iso_to_prime(iso_from_prime(pp, d), d), pp);
    }

    #[test]
    fn schur_weyl_dimension_count(n in 1usize..10, d in 1usize..6) {
        let total: u128 = enumerate_sym_irreps(n, d).iter().map(|mu| mu.sym_dim() * mu.gl_dim(d).unwrap()).sum();
        prop_assert_eq!(total, (d as u128).pow(n as u32));
    }

    #[test]
    fn orthogonal_dimension_count(n in 1usize..8, d in 2usize..5) {
        let total: u128 = enumerate_brauer_irreps(n, d)
            .iter()
            .map(|l| monogamy::partitions::brauer_multiplicity(l, n, d) * l.orthogonal_dim(d).unwrap())
            .sum();
        prop_assert_eq!(total, (d as u128).pow(n as u32));
    }

    #[test]
    fn character_rows_are_orthonormal(n in 1usize..8) {
        let classes: Vec<CycleType> = all_partitions(n).into_iter().map(CycleType::new).collect();
        let parts = all_partitions(n);
        for a in &parts {
            for b in &parts {
                let s: i128 = classes
                    .iter()
                    .map(|c| c.class_size() as i128 * mn_character(a, c).unwrap() as i128 * mn_character(b, c).unwrap() as i128)
                    .sum();
                prop_assert_eq!(s, if a == b { factorial(n) as i128 } else { 0 });
            }
        }
    }

    #[test]
    fn diagram_composition_is_a_representation(seed in any::<u64>(), n in 1usize..4, d in 2usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BrauerDiagram::random(n, &mut rng);
        let b = BrauerDiagram::random(n, &mut rng);
        let c = BrauerDiagram::random(n, &mut rng);
        let (ab, l1) = BrauerDiagram::compose(&a, &b).unwrap();
        let (abc, l2) = BrauerDiagram::compose(&ab, &c).unwrap();
        let (bc, l3) = BrauerDiagram::compose(&b, &c).unwrap();
        let (abc2, l4) = BrauerDiagram::compose(&a, &bc).unwrap();
        prop_assert_eq!(&abc, &abc2);
        prop_assert_eq!(l1 + l2, l3 + l4);
        let lhs = &a.matrix_rep(d).unwrap() * &b.matrix_rep(d).unwrap();
        let rhs = ab.matrix_rep(d).unwrap().scaled(int((d as i128).pow(l1 as u32)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn envelope_minimum_is_exact(lines in prop::collection::vec((-20i128..20, -20i128..20, 1i128..6), 2..12)) {
        let lines: Vec<(Rational, Rational)> = lines.iter().map(|&(s, o, q)| (ratio(s, q), ratio(o, q))).collect();
        let bounded = lines.iter().any(|l| l.0 > Rational::zero()) && lines.iter().any(|l| l.0 < Rational::zero());
        match minimize_max_lines(&lines) {
            Ok(m) => {
                let env = |x: Rational| lines.iter().map(|&(s, o)| o + s * x).max().unwrap();
                let at = m.lo.or(m.hi).unwrap_or_else(Rational::zero);
                prop_assert_eq!(env(at), m.value);
                for k in -40..=40 {
                    prop_assert!(env(ratio(k, 4)) >= m.value);
                }
            }
            Err(_) => prop_assert!(!bounded && lines.iter().any(|l| !l.0.is_zero())),
        }
    }
}
