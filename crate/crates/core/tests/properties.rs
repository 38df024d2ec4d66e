use num_bigint::BigUint;
use proptest::prelude::*;

use wsing::{
    brieskorn_weights, cmp_ratio, compare_weights, conical_cyclic, conical_from_weights,
    diagonal_weights, lowest_generator, minimal_generators, seifert_data, separating_action,
    BrieskornTriple, ConicalKind, CyclicQuotient, InvariantMonomial, Ratio, WeightVector,
};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn cyclic_strategy(max_n: u64) -> impl Strategy<Value = CyclicQuotient> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_filter("q prime to n", |&(n, q)| gcd(q, n) == 1)
        .prop_map(|(n, q)| CyclicQuotient::new(n, q).unwrap())
}

fn weights_strategy() -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(1u64..=100, 2..=6).prop_map(|v| WeightVector::from_list(v).unwrap())
}

proptest! {
    #[test]
    fn normalize_and_ratios_are_scale_invariant(w in weights_strategy(), c in 1u64..=1000) {
        let c = BigUint::from(c);
        let scaled = w.scaled(&c).unwrap();
        prop_assert_eq!(scaled.normalize(), w.normalize());
        prop_assert_eq!(scaled.extreme_ratios(), w.extreme_ratios());
        prop_assert_eq!(conical_from_weights(&scaled).kind, conical_from_weights(&w).kind);
    }

    #[test]
    fn extreme_ratios_are_ordered(w in weights_strategy()) {
        let (top, sub) = w.extreme_ratios();
        prop_assert!(cmp_ratio(&top, &sub).is_ge());
        prop_assert!(cmp_ratio(&sub, &Ratio::from_integer(1)).is_ge());
    }

    #[test]
    fn normalized_entries_are_coprime(w in weights_strategy()) {
        let n = w.normalize();
        let g = n.entries().iter().map(|e| u64::try_from(e).unwrap()).fold(0, gcd);
        prop_assert_eq!(g, 1);
    }

    #[test]
    fn brieskorn_weights_ignore_order(a in 2u64..=40, b in 2u64..=40, c in 2u64..=40) {
        let base = brieskorn_weights(&BrieskornTriple::new(a, b, c).unwrap());
        prop_assert_eq!(&brieskorn_weights(&BrieskornTriple::new(c, a, b).unwrap()), &base);
        prop_assert_eq!(&brieskorn_weights(&BrieskornTriple::new(b, c, a).unwrap()), &base);
        prop_assert_eq!(&brieskorn_weights(&BrieskornTriple::new(b, a, c).unwrap()), &base);
    }

    #[test]
    fn unknown_iff_tied_and_non_homogeneous(w in weights_strategy()) {
        let (second, lowest) = w.two_lowest();
        let expect_unknown = !w.is_homogeneous() && second == lowest;
        prop_assert_eq!(conical_from_weights(&w).kind == ConicalKind::Unknown, expect_unknown);
    }

    #[test]
    fn compare_kind_is_symmetric(v in weights_strategy(), w in weights_strategy()) {
        prop_assert_eq!(compare_weights(&v, &w).kind, compare_weights(&w, &v).kind);
    }

    #[test]
    fn generator_set_invariants(cq in cyclic_strategy(400)) {
        let n = cq.n();
        let gens = minimal_generators(&cq);
        prop_assert!(gens.contains(&InvariantMonomial::new(n, 0)));
        prop_assert!(gens.contains(&InvariantMonomial::new(0, n)));
        for m in gens.elements() {
            prop_assert!(cq.is_invariant(m.a, m.b));
            prop_assert!(m.weight() <= n);
            for other in gens.elements() {
                if other != m {
                    prop_assert!(!(other.a <= m.a && other.b <= m.b), "{} divides {}", other, m);
                }
            }
        }
        let w = diagonal_weights(&cq);
        prop_assert_eq!(u64::try_from(w.highest()).unwrap(), n);
        prop_assert_eq!(w.is_homogeneous(), cq.q() == 1);
        prop_assert_eq!(conical_cyclic(&cq).kind == ConicalKind::MetricallyConical, cq.q() == 1);
        if cq.q() != 1 {
            prop_assert!(gens.min_weight() < n);
        }
    }

    #[test]
    fn separating_action_isolates_lowest_generator(cq in cyclic_strategy(400)) {
        prop_assume!(cq.q() != 1);
        let gens = minimal_generators(&cq);
        let chosen = lowest_generator(&cq).unwrap();
        let act = separating_action(&cq).unwrap();
        prop_assert!(act.alpha > act.beta);
        prop_assert_eq!(gcd(act.alpha, act.beta), 1);
        prop_assert!(act.verify(&gens, &chosen));
        // No smaller pair of the search sequence works.
        for s in 1..act.beta {
            prop_assert!(gens.strict_minimizer(s + 1, s) != Some(chosen));
        }
    }
}

#[test]
fn genus_is_integral_for_exponents_up_to_50() {
    for a in 2u64..=50 {
        for b in a..=50 {
            for c in b..=50 {
                // seifert_data asserts integrality and non-negativity internally.
                let s = seifert_data(&BrieskornTriple::new(a, b, c).unwrap());
                assert!(s.euler.is_negative());
            }
        }
    }
}

#[test]
fn lowest_weight_family_4k_2k_plus_1() {
    for k in 2u64..=10 {
        let cq = CyclicQuotient::new(4 * k, 2 * k + 1).unwrap();
        let gens = minimal_generators(&cq);
        assert_eq!(gens.min_weight(), 2 * k);
        let lowest: Vec<(u64, u64)> = gens.lowest_weight_elements().iter().map(|m| (m.a, m.b)).collect();
        let expected: Vec<(u64, u64)> = (1..2 * k).step_by(2).map(|a| (a, 2 * k - a)).collect();
        assert_eq!(lowest, expected, "k = {k}");
        let w = diagonal_weights(&cq);
        let (second, last) = w.two_lowest();
        assert_eq!(second, last);
    }
}
