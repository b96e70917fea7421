//! Randomized invariant checks over seeded closures of partial
//! bijections. Case counts are kept modest; every failure shrinks to a
//! (seed, degree) pair that reproduces deterministically.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::groupoid::{self, AlgebraElement};
use groupoid_algebra::iso;
use groupoid_algebra::matrix::Matrix;
use groupoid_algebra::semigroup::{random_closure, PartialBijection};
use groupoid_algebra::stone;
use proptest::prelude::*;

fn arb_partial_bijection(degree: usize) -> impl Strategy<Value = PartialBijection> {
    proptest::collection::vec(proptest::option::of(0..degree), degree)
        .prop_filter_map("images must be injective", move |images| {
            PartialBijection::new(degree, images).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn partial_bijection_inverse_laws(p in arb_partial_bijection(5)) {
        let q = p.inverse();
        // p q p = p and q p q = q, the defining equations of the inverse
        prop_assert_eq!(p.compose(&q).compose(&p), p.clone());
        prop_assert_eq!(q.compose(&p).compose(&q), q);
    }

    #[test]
    fn composition_is_associative(
        p in arb_partial_bijection(4),
        q in arb_partial_bijection(4),
        r in arb_partial_bijection(4),
    ) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn star_is_an_anti_automorphism(seed in 0u64..10_000) {
        let s = random_closure(seed, 4, 16);
        for a in 0..s.order {
            prop_assert_eq!(s.star_of(s.star_of(a)), a);
            for b in 0..s.order {
                prop_assert_eq!(
                    s.star_of(s.product(a, b)),
                    s.product(s.star_of(b), s.star_of(a))
                );
            }
        }
    }

    #[test]
    fn natural_order_is_multiplication_compatible(seed in 0u64..10_000) {
        let s = random_closure(seed, 4, 12);
        for a in 0..s.order {
            for b in 0..s.order {
                if !s.natural_leq(a, b) { continue; }
                for c in 0..s.order {
                    prop_assert!(s.natural_leq(s.product(a, c), s.product(b, c)));
                    prop_assert!(s.natural_leq(s.product(c, a), s.product(c, b)));
                }
            }
        }
    }

    #[test]
    fn filters_are_principal_and_ultrafilters_primitive(seed in 0u64..10_000) {
        let s = random_closure(seed, 4, 14);
        let filters = stone::all_filters(&s);
        prop_assert_eq!(filters.len(), s.idempotents.len());
        let uf = stone::ultrafilters(&s);
        let prim = stone::primitive_idempotents(&s);
        prop_assert_eq!(uf.len(), prim.len());
        for f in &uf {
            prop_assert!(prim.contains(&f.principal_min));
        }
    }

    #[test]
    fn downset_generators_cover_common_lower_bounds(seed in 0u64..10_000) {
        let s = random_closure(seed, 3, 10);
        for a in 0..s.order {
            for b in 0..s.order {
                let gens = stone::downset_meet_generators(&s, a, b);
                for u in 0..s.order {
                    let below = s.natural_leq(u, a) && s.natural_leq(u, b);
                    prop_assert_eq!(below, gens.iter().any(|&w| s.natural_leq(u, w)));
                }
            }
        }
    }

    #[test]
    fn convolution_is_associative_on_deltas(seed in 0u64..10_000) {
        let s = random_closure(seed, 3, 10);
        let g = groupoid::underlying_groupoid(&s);
        let field = FieldSpec::Prime(5);
        let deltas: Vec<AlgebraElement> =
            (0..g.n_arrows).map(|a| AlgebraElement::delta(field, a)).collect();
        for a in &deltas {
            for b in &deltas {
                let ab = groupoid::convolve(&g, a, b).unwrap();
                for c in &deltas {
                    let bc = groupoid::convolve(&g, b, c).unwrap();
                    prop_assert_eq!(
                        groupoid::convolve(&g, &ab, c).unwrap(),
                        groupoid::convolve(&g, a, &bc).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn theta_matrices_are_mutually_inverse(seed in 0u64..10_000) {
        let s = random_closure(seed, 4, 16);
        for field in [FieldSpec::Prime(5), FieldSpec::Rational] {
            let w = iso::theta(&s, &field, seed).unwrap();
            prop_assert_eq!(
                w.forward.mul(&w.inverse),
                Matrix::identity(s.order, field)
            );
        }
    }

    #[test]
    fn decomposition_bookkeeping_holds(seed in 0u64..10_000) {
        let s = random_closure(seed, 4, 20);
        prop_assert_eq!(iso::decompose(&s).total_dimension, s.order);
    }
}
