use proptest::prelude::*;

use absorbing_ideals::corpus::builtin_specs;
use absorbing_ideals::proof::{
    delta_set, eval_monomial, j_k_alpha, order_compare, Monomial, OrderMode,
};
use absorbing_ideals::{Ideal, Ring, RingDescriptor};

fn descriptor() -> impl Strategy<Value = RingDescriptor> {
    let leaf = prop_oneof![
        (2u64..200).prop_map(RingDescriptor::ZMod),
        (
            prop::sample::select(vec![2u64, 3, 5, 7]),
            prop::collection::vec(0u64..7, 1..4)
        )
            .prop_map(|(p, mut low)| {
                for c in low.iter_mut() {
                    *c %= p;
                }
                low.push(1);
                RingDescriptor::PolyQuot { p, modulus: low }
            }),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        prop::collection::vec(inner, 1..4).prop_map(RingDescriptor::Product)
    })
}

fn corpus_ring() -> impl Strategy<Value = Ring> {
    prop::sample::select(builtin_specs()).prop_map(|s| Ring::parse(&s).unwrap())
}

proptest! {
    #[test]
    fn ring_specs_round_trip(d in descriptor()) {
        let text = d.to_string();
        let back: RingDescriptor = text.parse().unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn element_text_round_trips(r in corpus_ring(), i in 0usize..4096) {
        let e = r.element(i % r.size()).unwrap();
        prop_assert_eq!(r.parse_element(&r.render(e)).unwrap(), e);
    }

    #[test]
    fn ideal_text_round_trips(r in corpus_ring(), gens in prop::collection::vec(0usize..4096, 0..3)) {
        let gens: Vec<_> = gens.iter().map(|&g| r.element(g % r.size()).unwrap()).collect();
        let ideal = Ideal::generated(&r, &gens).unwrap();
        prop_assert_eq!(Ideal::parse(&r, &ideal.render()).unwrap(), ideal);
    }

    #[test]
    fn multideg_ignores_variable_order(mut e in prop::collection::vec(0u32..6, 1..6), rot in 0usize..6) {
        let before = Monomial::new(e.clone()).multideg();
        let k = rot % e.len();
        e.rotate_left(k);
        prop_assert_eq!(Monomial::new(e).multideg(), before);
    }

    #[test]
    fn succ_order_is_total_and_antisymmetric(
        a in prop::collection::vec(0u32..5, 3),
        b in prop::collection::vec(0u32..5, 3),
    ) {
        let ab = order_compare(&a, &b, OrderMode::Succ).unwrap();
        let ba = order_compare(&b, &a, OrderMode::Succ).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
    }

    #[test]
    fn j_k_alpha_is_symmetric_in_the_generators(
        r in corpus_ring(),
        gens in prop::collection::vec(0usize..4096, 3),
        alpha in prop::sample::select(vec![vec![2u32, 1, 0], vec![1, 1, 1], vec![3, 0, 0], vec![2, 2, 1]]),
    ) {
        let gens: Vec<_> = gens.iter().map(|&g| r.element(g % r.size()).unwrap()).collect();
        let swapped = vec![gens[2], gens[0], gens[1]];
        prop_assert_eq!(
            j_k_alpha(&r, &gens, &alpha).unwrap(),
            j_k_alpha(&r, &swapped, &alpha).unwrap()
        );
    }

    #[test]
    fn monomial_images_multiply(
        r in corpus_ring(),
        gens in prop::collection::vec(0usize..4096, 2),
        e in prop::collection::vec(0u32..4, 2),
        f in prop::collection::vec(0u32..4, 2),
    ) {
        let gens: Vec<_> = gens.iter().map(|&g| r.element(g % r.size()).unwrap()).collect();
        let sum: Vec<u32> = e.iter().zip(&f).map(|(x, y)| x + y).collect();
        let lhs = eval_monomial(&r, &gens, &Monomial::new(sum)).unwrap();
        let rhs = r.mul(
            eval_monomial(&r, &gens, &Monomial::new(e)).unwrap(),
            eval_monomial(&r, &gens, &Monomial::new(f)).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn delta_sets_descend_strictly() {
    for n in 2..=4 {
        let d = delta_set(n).unwrap();
        for w in d.windows(2) {
            assert_eq!(
                order_compare(w[0].profile(), w[1].profile(), OrderMode::Succ).unwrap(),
                std::cmp::Ordering::Greater
            );
        }
    }
}
