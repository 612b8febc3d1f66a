mod common;

use genroof::bisub::{check_bisubmodular, is_bisubmodular, HalfFunction, HalfLabeling, Method, PairLabeling};
use genroof::card::{
    card_counts, check_card_conditions, collapse, expand, fig1b, fig1c, fig1d, CardCondition, CardinalityFn,
};
use genroof::pbf::BinaryLabeling;
use genroof::rational::int;
use proptest::prelude::*;
use rand::seq::SliceRandom;

/// Counts of trits `0` and `1` computed straight from the doubled labeling.
fn counts(x: &HalfLabeling) -> (usize, usize) {
    let d = x.doubled();
    (d.iter().filter(|&&t| t == 0).count(), d.iter().filter(|&&t| t == 2).count())
}

#[test]
fn counts_examples() {
    let c = card_counts(&PairLabeling::zeros(4));
    assert_eq!((c.n01, c.n10, c.n00, c.n11), (0, 0, 4, 0));
    for n in 1..=3 {
        for u in PairLabeling::all(n) {
            let c = card_counts(&u);
            assert_eq!(c.n01 + c.n10 + c.n00 + c.n11, n);
            let m = card_counts(&u.mate_flip());
            assert_eq!((m.n01, m.n10, m.n00, m.n11), (c.n01, c.n10, c.n11, c.n00));
        }
    }
    let u = common::labeling("1001", "0110");
    let c = card_counts(&u);
    assert_eq!((c.n01, c.n10, c.n00, c.n11), (2, 2, 0, 0));
}

#[test]
fn expand_examples() {
    let z = expand(&CardinalityFn::zero(3));
    assert!(z.values().iter().all(|v| *v == int(0)));

    let g = CardinalityFn::from_fn(3, |a, b| int(a as i64 - b as i64));
    let h = expand(&g);
    for x in HalfLabeling::all(3) {
        let (a, b) = counts(&x);
        assert_eq!(h.eval(&x).unwrap(), int(a as i64 - b as i64));
    }
    assert!(is_bisubmodular(&h));

    let b = expand(&fig1b().unwrap());
    let m = b.minimize(Default::default()).unwrap();
    assert_eq!(m.value, int(-1));
    assert_eq!(m.argmins, vec![HalfLabeling::halves(3)]);
}

#[test]
fn condition_examples() {
    assert_eq!(check_card_conditions(&CardinalityFn::zero(4)), None);

    let sq = CardinalityFn::from_fn(3, |a, _| int((a * a) as i64));
    let v = check_card_conditions(&sq).unwrap();
    assert_eq!((v.condition, v.a, v.b), (CardCondition::A, 2, 0));
    assert_eq!((v.lhs, v.rhs), (int(4), int(2)));
    assert!(!is_bisubmodular(&expand(&sq)));

    assert_eq!(check_card_conditions(&fig1b().unwrap()), None);
    assert_eq!(check_card_conditions(&fig1c().unwrap()), None);
}

#[test]
fn boundary_condition_needs_both_neighbours() {
    // fails only the top-level family
    let g = CardinalityFn::from_fn(2, |a, b| if a + b == 1 { int(1) } else { int(0) });
    let v = check_card_conditions(&g).unwrap();
    assert_eq!(v.condition, CardCondition::D);
    assert!(!is_bisubmodular(&expand(&g)));
}

#[test]
fn domain_bounds() {
    let mut g = CardinalityFn::zero(2);
    assert_eq!(CardinalityFn::domain(2).count(), 6);
    assert!(g.get(2, 1).is_err());
    assert!(g.set(3, 0, int(1)).is_err());
    g.set(1, 1, int(7)).unwrap();
    assert_eq!(g.get(1, 1).unwrap(), &int(7));
}

#[test]
fn fixtures() {
    let f = fig1d();
    let at = |s: &str| f.eval(&s.parse::<BinaryLabeling>().unwrap()).unwrap();
    assert_eq!((at("0000"), at("1010"), at("1111")), (int(3), int(0), int(14)));

    let (b, c) = (fig1b().unwrap(), fig1c().unwrap());
    assert_eq!((b.n(), c.n()), (3, 3));
    for a in 0..=3 {
        assert_eq!(b.get(a, 3 - a).unwrap(), c.get(a, 3 - a).unwrap(), "a = {a}");
    }
    assert_eq!(b.get(0, 0).unwrap(), &int(-1));
}

#[test]
fn collapse_rejects_non_cardinality_functions() {
    let g = HalfFunction::from_fn(2, |x| int(x.doubled()[0] as i64));
    assert!(collapse(&g).is_err());
    let b = fig1b().unwrap();
    assert_eq!(collapse(&expand(&b)).unwrap(), b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn conditions_match_bisubmodularity(seed in any::<u64>(), n in 2usize..=4, k in 0u64..3) {
        let g = common::card_suite_member(n, k, &mut common::rng(seed));
        let by_conditions = check_card_conditions(&g).is_none();
        let h = expand(&g);
        for m in Method::ALL {
            prop_assert_eq!(check_bisubmodular(&h, m).holds(), by_conditions, "method {}", m);
        }
        prop_assert_eq!(common::half_pairs_bisubmodular(&h), by_conditions);
    }

    #[test]
    fn expansion_ignores_node_order(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = common::rng(seed);
        let h = expand(&common::random_cardinality(n, &mut rng));
        for x in HalfLabeling::all(n) {
            let mut d = x.doubled().to_vec();
            d.shuffle(&mut rng);
            let y = HalfLabeling::from_doubled(d).unwrap();
            prop_assert_eq!(h.eval(&x).unwrap(), h.eval(&y).unwrap());
        }
    }

    #[test]
    fn collapse_inverts_expand(seed in any::<u64>(), n in 1usize..=4) {
        let g = common::random_cardinality(n, &mut common::rng(seed));
        prop_assert_eq!(collapse(&expand(&g)).unwrap(), g);
    }
}
