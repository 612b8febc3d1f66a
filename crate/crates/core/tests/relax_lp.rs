mod common;

use std::collections::BTreeSet;

use common::all_pairs_submodular;
use genroof::bisub::{
    check_bisubmodular, decode, is_bisubmodular, reduce, DomainClass, ExchangeInequality, HalfFunction, Method,
    PairLabeling,
};
use genroof::card::{expand, fig1b, fig1c, fig1d};
use genroof::lp::{
    extension_feasible, gen_bisub_constraints, gen_submodular_constraints, pointwise_max_relaxation,
    simplex_solve, submodular_orbit, tightest_relaxation, LinearProgram, LpResult, RelaxationClass,
    RelaxationTable, Relation,
};
use genroof::pbf::BinaryLabeling;
use genroof::rational::{int, rat};
use genroof::roof::{build_roofdual, solve_roofdual, symmetrized};
use proptest::prelude::*;
use rand::Rng;

/// Local exchange triples enumerated independently of the library.
fn local_triples(n: usize) -> BTreeSet<ExchangeInequality> {
    let mut out = BTreeSet::new();
    for w in PairLabeling::all_minus(n) {
        for i in 0..2 * n {
            for j in i + 1..2 * n {
                if w.get(i) || w.get(j) {
                    continue;
                }
                let (mut u, mut v) = (w.clone(), w.clone());
                u.set(i, true);
                v.set(j, true);
                let minus = |x: &PairLabeling| x.classify().member_of(DomainClass::Xminus);
                if !minus(&u) || !minus(&v) {
                    continue;
                }
                let high = reduce(&u.join(&v).unwrap());
                let e = ExchangeInequality::new(&w, &high, &u, &v);
                if e.lhs != e.rhs {
                    out.insert(e);
                }
            }
        }
    }
    out
}

#[test]
fn simplex_trivial_programs() {
    let mut lp = LinearProgram::new();
    let t = lp.add_free("t");
    lp.add_constraint("cap", vec![(t, int(1))], Relation::Le, int(1)).unwrap();
    lp.set_objective(vec![(t, int(1))]).unwrap();
    let r = simplex_solve(&lp);
    assert_eq!(r.value(), Some(&int(1)));
    assert!(r.verify(&lp));

    let mut lp = LinearProgram::new();
    let x = lp.add_free("x");
    lp.add_constraint("low", vec![(x, int(1))], Relation::Le, int(0)).unwrap();
    lp.add_constraint("high", vec![(x, int(1))], Relation::Ge, int(1)).unwrap();
    let r = simplex_solve(&lp);
    let LpResult::Infeasible(cert) = &r else { panic!("expected infeasible, got {}", r.status()) };
    assert!(cert.verify(&lp));
    assert_eq!(cert.support(), vec![0, 1]);

    let mut lp = LinearProgram::new();
    let x = lp.add_variable("x", Some(int(0)), None);
    lp.set_objective(vec![(x, int(1))]).unwrap();
    let r = simplex_solve(&lp);
    assert_eq!(r.status(), "unbounded");
    assert!(r.verify(&lp));
}

#[test]
fn one_node_bisubmodular_constraint() {
    let set = gen_bisub_constraints(1);
    let zero = PairLabeling::zeros(1);
    let want = ExchangeInequality::new(&zero, &zero, &common::labeling("1", "0"), &common::labeling("0", "1"));
    assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![want]);
}

#[test]
fn bisubmodular_constraints_match_triples() {
    for n in 1..=3 {
        assert_eq!(gen_bisub_constraints(n), local_triples(n), "n = {n}");
    }
    assert_eq!(gen_bisub_constraints(2).len(), 10);
}

#[test]
fn bisubmodular_functions_satisfy_generated_rows() {
    for seed in 0..30 {
        let g = common::random_bisubmodular(3, &mut common::rng(seed));
        for e in gen_bisub_constraints(3) {
            let lhs = g.at_index(e.lhs.0) + g.at_index(e.lhs.1);
            assert!(lhs <= g.at_index(e.rhs.0) + g.at_index(e.rhs.1));
        }
    }
}

#[test]
fn submodular_orbits_pair_up() {
    for n in 1..=3 {
        let orbits: BTreeSet<usize> = (0..1usize << (2 * n)).map(|k| submodular_orbit(n, k)).collect();
        assert_eq!(orbits.len(), ((1 << (2 * n)) + (1 << n)) / 2);
        for u in PairLabeling::all(n) {
            assert_eq!(submodular_orbit(n, u.index()), submodular_orbit(n, u.mate_flip().index()));
        }
    }
}

#[test]
fn modular_function_is_tight_everywhere() {
    let c = [3, -2, 5];
    let g = |k: usize| {
        let u = PairLabeling::from_index(3, k);
        int((0..3).map(|i| c[i] * (u.get(i) as i64 - u.get(i + 3) as i64)).sum())
    };
    for e in gen_submodular_constraints(3) {
        assert_eq!(g(e.lhs.0) + g(e.lhs.1), g(e.rhs.0) + g(e.rhs.1));
    }
}

#[test]
fn local_submodular_rows_imply_all_pairs() {
    let mut rng = common::rng(5);
    for n in 1..=3 {
        let rows = gen_submodular_constraints(n);
        let orbits: Vec<usize> = (0..1usize << (2 * n)).map(|k| submodular_orbit(n, k)).collect();
        let mut lp = LinearProgram::new();
        let vars: Vec<usize> = (0..1usize << (2 * n))
            .map(|k| lp.add_variable(format!("g{k}"), Some(int(-5)), Some(int(5))))
            .collect();
        for e in &rows {
            let mut terms = vec![(vars[e.lhs.0], int(1)), (vars[e.lhs.1], int(1))];
            terms.extend([(vars[e.rhs.0], int(-1)), (vars[e.rhs.1], int(-1))]);
            lp.add_constraint("local", terms, Relation::Le, int(0)).unwrap();
        }
        lp.set_objective(orbits.iter().map(|&o| (vars[o], int(rng.gen_range(-3..=3)))).collect()).unwrap();
        let r = simplex_solve(&lp);
        assert!(r.verify(&lp));
        let x = r.assignment().unwrap();
        let g = genroof::bisub::PairFunction::from_fn(n, |u| x[orbits[u.index()]].clone());
        assert!(all_pairs_submodular(&g), "n = {n}");
        assert!(g.is_symmetric());
    }
}

#[test]
fn fig1d_bisubmodular_gap_is_closed() {
    let t = tightest_relaxation(&fig1d(), RelaxationClass::Bisubmodular).unwrap();
    assert_eq!(t.t, int(0));
    let RelaxationTable::Half(g) = &t.g else { panic!("half table expected") };
    assert!(is_bisubmodular(g));
}

#[test]
fn tightest_on_submodular_tables_is_the_minimum() {
    for seed in 0..6 {
        let f = common::random_submodular_table(3, &mut common::rng(seed));
        let fmin = BinaryLabeling::all(3).map(|x| f.eval(&x).unwrap()).min().unwrap();
        let g = symmetrized(&f);
        assert_eq!(g.values().iter().min().unwrap(), &fmin);
        for class in [RelaxationClass::Bisubmodular, RelaxationClass::Submodular] {
            assert_eq!(tightest_relaxation(&f, class).unwrap().t, fmin, "{class}");
        }
    }
}

#[test]
fn tightest_requires_small_n() {
    let f = genroof::pbf::PbfTable::zero(5);
    assert!(tightest_relaxation(&f, RelaxationClass::Bisubmodular).is_err());
}

#[test]
fn extension_of_a_restriction_is_feasible() {
    let g = build_roofdual(&common::random_quadratic(3, &mut common::rng(2))).to_pair_function();
    let ext = extension_feasible(&g.restrict_minus(), false).unwrap();
    assert!(ext.feasible());
    assert!(ext.result.verify(&ext.lp));
}

#[test]
fn figure_extensions() {
    let b = extension_feasible(&expand(&fig1b().unwrap()), true).unwrap();
    let LpResult::Infeasible(cert) = &b.result else { panic!("fig1b must not extend") };
    assert!(cert.verify(&b.lp));
    assert!(!extension_feasible(&expand(&fig1b().unwrap()), false).unwrap().feasible());
    let c = extension_feasible(&expand(&fig1c().unwrap()), true).unwrap();
    assert!(c.feasible());
    assert!(c.result.verify(&c.lp));
}

#[test]
fn symmetrize_needs_cardinality_dependence() {
    let g = HalfFunction::from_fn(2, |x| int(x.index() as i64));
    assert!(extension_feasible(&g, true).is_err());
}

#[test]
fn pointwise_on_circle_is_forced() {
    let f = common::random_table(3, &mut common::rng(31));
    for u0 in PairLabeling::all_minus(3).filter(|u| u.classify() == DomainClass::Xcircle) {
        let x = decode(&u0).unwrap().to_binary().unwrap();
        for class in [RelaxationClass::Bisubmodular, RelaxationClass::Submodular] {
            assert_eq!(pointwise_max_relaxation(&f, &u0, class).unwrap(), f.eval(&x).unwrap());
        }
    }
    let outside = common::labeling("100", "100");
    assert!(pointwise_max_relaxation(&f, &outside, RelaxationClass::Bisubmodular).is_err());
}

#[test]
fn pointwise_matches_roof_dual() {
    for seed in 0..3 {
        let q = common::random_quadratic(3, &mut common::rng(900 + seed));
        let g = build_roofdual(&q);
        let f = q.to_table();
        for u0 in PairLabeling::all_minus(3) {
            let v = pointwise_max_relaxation(&f, &u0, RelaxationClass::Bisubmodular).unwrap();
            assert_eq!(v, g.eval(&u0).unwrap(), "{u0}");
        }
    }
}

#[test]
fn fig1d_pointwise_gap() {
    let f = fig1d();
    let u0 = PairLabeling::zeros(4);
    let b = pointwise_max_relaxation(&f, &u0, RelaxationClass::Bisubmodular).unwrap();
    let s = pointwise_max_relaxation(&f, &u0, RelaxationClass::Submodular).unwrap();
    assert_eq!((b.clone(), s.clone()), (int(0), rat(-3, 10)));
    assert!(b > s);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn simplex_matches_vertex_enumeration(seed in any::<u64>(), m in 1usize..=4) {
        let lp = common::random_lp(m, &mut common::rng(seed));
        let r = simplex_solve(&lp);
        prop_assert!(r.verify(&lp));
        prop_assert_eq!(r.value().cloned(), common::vertex_optimum(&lp));
    }

    #[test]
    fn class_ordering_and_optimal_tables(seed in any::<u64>(), n in 1usize..=3) {
        let f = common::random_table(n, &mut common::rng(seed));
        let b = tightest_relaxation(&f, RelaxationClass::Bisubmodular).unwrap();
        let s = tightest_relaxation(&f, RelaxationClass::Submodular).unwrap();
        prop_assert!(b.t >= s.t);
        let RelaxationTable::Half(gb) = &b.g else { panic!("half table expected") };
        prop_assert!(check_bisubmodular(gb, Method::A).holds());
        prop_assert_eq!(gb.values().iter().min().unwrap(), &b.t);
        let RelaxationTable::Pair(gs) = &s.g else { panic!("pair table expected") };
        prop_assert!(all_pairs_submodular(gs) && gs.is_symmetric() && gs.is_relaxation_of(&f));
        prop_assert_eq!(gs.values().iter().min().unwrap(), &s.t);
    }

    #[test]
    fn bisubmodular_optimum_is_the_roof_bound(seed in any::<u64>(), n in 1usize..=3) {
        let q = common::random_quadratic(n, &mut common::rng(seed));
        let t = tightest_relaxation(&q.to_table(), RelaxationClass::Bisubmodular).unwrap();
        prop_assert_eq!(t.t, solve_roofdual(&q).unwrap().bound);
    }
}
