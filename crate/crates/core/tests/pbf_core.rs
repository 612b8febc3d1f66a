mod common;

use genroof::card::{expand, fig1b, fig1d};
use genroof::enumerate::{brute_min, EnumBound};
use genroof::pbf::{edge_is_submodular, edge_table, BinaryLabeling, PbfTable, QuadraticPbf};
use genroof::poly::{posiform_decompose, to_multilinear};
use genroof::rational::{int, rat, Rational};
use genroof::bisub::PairLabeling;
use proptest::prelude::*;

fn product() -> PbfTable {
    PbfTable::from_fn(2, |x| int((x.get(0) && x.get(1)) as i64))
}

#[test]
fn fig1d_values() {
    let f = fig1d();
    assert_eq!(f.eval(&"1010".parse().unwrap()).unwrap(), int(0));
    assert_eq!(f.eval(&"1111".parse().unwrap()).unwrap(), int(14));
    assert_eq!(f.eval(&"0000".parse().unwrap()).unwrap(), int(3));
}

#[test]
fn zero_function_is_zero() {
    let f = PbfTable::zero(3);
    assert!(BinaryLabeling::all(3).all(|x| f.eval(&x).unwrap() == int(0)));
}

#[test]
fn eval_rejects_wrong_length() {
    assert!(fig1d().eval(&"101".parse().unwrap()).is_err());
    assert!(QuadraticPbf::new(2).eval(&"1".parse().unwrap()).is_err());
}

#[test]
fn quadratic_single_terms() {
    let mut q = QuadraticPbf::new(1);
    q.add_unary(0, int(0), int(1)).unwrap();
    assert_eq!(q.eval(&"1".parse().unwrap()).unwrap(), int(1));

    let mut q = QuadraticPbf::new(2);
    q.add_edge(0, 1, edge_table(int(0), int(0), int(0), int(1))).unwrap();
    assert_eq!(q.eval(&"11".parse().unwrap()).unwrap(), int(1));
    assert_eq!(q.eval(&"10".parse().unwrap()).unwrap(), int(0));
}

#[test]
fn quadratic_forbids_parallel_edges() {
    let mut q = QuadraticPbf::new(2);
    let t = || edge_table(int(0), int(0), int(0), int(1));
    q.add_edge(0, 1, t()).unwrap();
    assert!(q.add_edge(1, 0, t()).is_err());
    assert!(q.add_edge(1, 1, t()).is_err());
}

#[test]
fn edge_submodularity_cases() {
    assert!(edge_is_submodular(&edge_table(int(0), int(0), int(0), int(-1))));
    assert!(!edge_is_submodular(&edge_table(int(0), int(0), int(0), int(1))));
    assert!(edge_is_submodular(&edge_table(int(7), int(7), int(7), int(7))));
}

#[test]
fn multilinear_of_product() {
    let p = to_multilinear(&product());
    let terms: Vec<(Vec<usize>, Rational)> = p.terms().map(|(s, c)| (s, c.clone())).collect();
    assert_eq!(terms, vec![(vec![0, 1], int(1))]);
    assert!(to_multilinear(&PbfTable::zero(3)).is_empty());
}

#[test]
fn multilinear_of_fig1d_reevaluates() {
    let f = fig1d();
    let p = to_multilinear(&f);
    for x in BinaryLabeling::all(4) {
        assert_eq!(p.eval(&x), f.eval(&x).unwrap());
    }
    // constant term is f(0000)
    assert_eq!(p.coefficient(&[]), int(3));
}

#[test]
fn posiform_of_product() {
    let d = posiform_decompose(&product());
    assert_eq!(d.constant, int(1));
    let mut shown: Vec<String> = d.monomials.iter().map(|m| m.to_string()).collect();
    shown.sort();
    assert_eq!(shown, vec!["-1*~x1*x2", "-1*~x2"]);
    for x in BinaryLabeling::all(2) {
        assert_eq!(d.eval_bits(x.bits()), product().eval(&x).unwrap());
        // the other decomposition 1 - ~x1 - x1*~x2 is equally valid
        let (a, b) = (x.get(0) as i64, x.get(1) as i64);
        assert_eq!(int(1 - (1 - a) - a * (1 - b)), product().eval(&x).unwrap());
    }
}

#[test]
fn posiform_keeps_nonpositive_monomials() {
    // -x1x2 - x2x3 + x1 - 2x3
    let f = PbfTable::from_fn(3, |x| {
        let b = |i| x.get(i) as i64;
        int(-b(0) * b(1) - b(1) * b(2) + b(0) - 2 * b(2))
    });
    let d = posiform_decompose(&f);
    let poly = to_multilinear(&f);
    for (nodes, c) in poly.terms() {
        if c.numer() < &0.into() && nodes.len() >= 2 {
            assert!(d
                .monomials
                .iter()
                .any(|m| m.positive() == nodes && m.negative().is_empty() && m.coefficient() == c));
        }
    }
}

#[test]
fn brute_min_fig1d() {
    let f = fig1d();
    let m = brute_min(BinaryLabeling::all(4), 16, EnumBound::default(), |x| f.eval(x).unwrap()).unwrap();
    assert_eq!(m.value, int(0));
    assert_eq!(m.argmins, vec!["1010".parse::<BinaryLabeling>().unwrap()]);
}

#[test]
fn brute_min_zero_has_every_argmin() {
    let m = brute_min(BinaryLabeling::all(3), 8, EnumBound::default(), |_| int(0)).unwrap();
    assert_eq!(m.argmins.len(), 8);
    assert_eq!(m.argmins, BinaryLabeling::all(3).collect::<Vec<_>>());
}

#[test]
fn brute_min_fig1b_over_x_minus() {
    let g = expand(&fig1b().unwrap());
    let m = g.minimize_pairs(EnumBound::default()).unwrap();
    assert_eq!(m.value, int(-1));
    assert_eq!(m.argmins, vec![PairLabeling::zeros(3)]);
}

#[test]
fn brute_min_respects_bound() {
    let r = brute_min(BinaryLabeling::all(4), 16, EnumBound(15), |_| int(0));
    assert!(r.is_err());
}

proptest! {
    #[test]
    fn multilinear_round_trip(seed in any::<u64>(), n in 0usize..=6) {
        let f = common::random_table(n, &mut common::rng(seed));
        let p = to_multilinear(&f);
        for x in BinaryLabeling::all(n) {
            prop_assert_eq!(p.eval(&x), f.eval(&x).unwrap());
        }
    }

    #[test]
    fn posiform_identity(seed in any::<u64>(), n in 1usize..=4) {
        let f = common::random_table(n, &mut common::rng(seed));
        let d = posiform_decompose(&f);
        prop_assert!(d.monomials.iter().all(|m| m.coefficient() <= &int(0)));
        for x in BinaryLabeling::all(n) {
            prop_assert_eq!(d.eval_bits(x.bits()), f.eval(&x).unwrap());
        }
    }

    #[test]
    fn edge_test_ignores_row_and_column_constants(
        t in prop::array::uniform4(-9i64..=9),
        r in prop::array::uniform2(-9i64..=9),
        c in prop::array::uniform2(-9i64..=9),
    ) {
        let base = edge_table(int(t[0]), int(t[1]), int(t[2]), int(t[3]));
        let shifted = edge_table(
            int(t[0] + r[0] + c[0]),
            int(t[1] + r[0] + c[1]),
            int(t[2] + r[1] + c[0]),
            int(t[3] + r[1] + c[1]),
        );
        prop_assert_eq!(edge_is_submodular(&base), edge_is_submodular(&shifted));
    }

    #[test]
    fn quadratic_matches_table(seed in any::<u64>(), n in 1usize..=5) {
        let q = common::random_quadratic(n, &mut common::rng(seed));
        let t = q.to_table();
        let size = 1u128 << n;
        let a = brute_min(BinaryLabeling::all(n), size, EnumBound::default(), |x| q.eval(x).unwrap()).unwrap();
        let b = brute_min(BinaryLabeling::all(n), size, EnumBound::default(), |x| t.eval(x).unwrap()).unwrap();
        prop_assert_eq!(a, b);
        // expanded by hand from the terms
        for x in BinaryLabeling::all(n) {
            let mut v = rat(0, 1);
            for i in 0..n {
                v += &q.unary(i)[x.get(i) as usize];
            }
            for (&(i, j), e) in q.edges() {
                v += &e[x.get(i) as usize][x.get(j) as usize];
            }
            prop_assert_eq!(t.eval(&x).unwrap(), v);
        }
    }
}
