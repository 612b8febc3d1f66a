//! Roof duality and symmetric submodular relaxations.
//!
//! A relaxation lives on the doubled node set: node `i` and its mate
//! `i' = i + n`, so a labeling of the relaxation is a [`PairLabeling`].

pub mod flow;

use num_traits::Zero;

use crate::bisub::{HalfLabeling, PairFunction, PairLabeling};
use crate::enumerate::EnumBound;
use crate::error::{Error, Result};
use crate::pbf::{check_len, check_node, edge_is_submodular, EdgeTable, PbfTable, QuadraticPbf};
use crate::poly::posiform_decompose;
use crate::rational::{half, Rational};

pub use flow::{maxflow, to_flow_network, Arc, FlowNetwork, MaxFlow, Vertex};

/// A quadratic on `2n` nodes with submodular pairwise terms and
/// `g(u') = g(u)` everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricQuadratic {
    q: QuadraticPbf,
}

impl SymmetricQuadratic {
    /// Validates submodularity of every term and symmetry by enumeration.
    pub fn new(q: QuadraticPbf, bound: EnumBound) -> Result<Self> {
        if !q.n().is_multiple_of(2) {
            return Err(Error::Precondition("odd number of doubled nodes".into()));
        }
        if let Some((&(i, j), _)) = q.edges().find(|(_, t)| !edge_is_submodular(t)) {
            return Err(Error::NonSubmodularTerm(i, j));
        }
        bound.check(1u128 << q.n())?;
        let g = SymmetricQuadratic { q };
        if !g.to_pair_function().is_symmetric() {
            return Err(Error::Precondition("g(u') != g(u) somewhere".into()));
        }
        Ok(g)
    }

    /// Number of original variables.
    pub fn n(&self) -> usize {
        self.q.n() / 2
    }

    pub fn quadratic(&self) -> &QuadraticPbf {
        &self.q
    }

    pub fn eval(&self, u: &PairLabeling) -> Result<Rational> {
        check_len(self.n(), u.n())?;
        self.q.eval_bits(u.bits())
    }

    pub fn to_pair_function(&self) -> PairFunction {
        PairFunction::from_fn(self.n(), |u| self.q.eval_bits(u.bits()).expect("sizes match"))
    }
}

/// Applies (12a-c): unary terms to `i` and `i'`, submodular edges to
/// `(i, j)` and `(i', j')`, the rest to `(i, j')` and `(j, i')`.
pub fn build_roofdual(f: &QuadraticPbf) -> SymmetricQuadratic {
    let n = f.n();
    let h = half();
    let mut q = QuadraticPbf::new(2 * n);
    let add = "terms of distinct edges never collide";
    for i in 0..n {
        let [a0, a1] = f.unary(i);
        q.add_unary(i, a0 * &h, a1 * &h).expect(add);
        q.add_unary(i + n, a1 * &h, a0 * &h).expect(add);
    }
    for (&(i, j), t) in f.edges() {
        let s = |a: usize, b: usize| &t[a][b] * &h;
        if edge_is_submodular(t) {
            q.add_edge(i, j, [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]]).expect(add);
            q.add_edge(i + n, j + n, [[s(1, 1), s(1, 0)], [s(0, 1), s(0, 0)]]).expect(add);
        } else {
            // f(u_i, 1 - u_j') and f(1 - u_i', u_j)
            q.add_edge(i, j + n, [[s(0, 1), s(0, 0)], [s(1, 1), s(1, 0)]]).expect(add);
            q.add_edge(j, i + n, [[s(1, 0), s(0, 0)], [s(1, 1), s(0, 1)]]).expect(add);
        }
    }
    SymmetricQuadratic { q }
}

/// `g(x, y) = (f(x) + f(1 - y)) / 2`, a submodular relaxation whenever `f` is
/// submodular.
pub fn symmetrized(f: &PbfTable) -> PairFunction {
    let n = f.n();
    let mask = (1usize << n) - 1;
    PairFunction::from_fn(n, |u| {
        let k = u.index();
        (f.at_index(k >> n) + f.at_index(!k & mask)) * half()
    })
}

/// A tight, symmetric, submodular relaxation of an arbitrary `f`.
///
/// Submodular `f` gets [`symmetrized`] directly. Otherwise `f` is written as a
/// constant plus monomials `c * prod_A x_i * prod_B (1 - x_i)` with `c <= 0`, and
/// each monomial becomes
/// `(c * prod_A x_i * prod_B y_i + c * prod_A (1 - y_i) * prod_B (1 - x_i)) / 2`.
pub fn build_submodular_relaxation(f: &PbfTable) -> PairFunction {
    if f.is_submodular() {
        return symmetrized(f);
    }
    let n = f.n();
    let d = posiform_decompose(f);
    PairFunction::from_fn(n, |u| {
        let (x, y) = u.halves();
        let mut total = d.constant.clone();
        for m in &d.monomials {
            let (a, b) = (m.positive(), m.negative());
            let first = a.iter().all(|&i| x[i]) && b.iter().all(|&i| y[i]);
            let second = a.iter().all(|&i| !y[i]) && b.iter().all(|&i| !x[i]);
            let hits = first as i64 + second as i64;
            if hits > 0 {
                total += m.coefficient() * Rational::from_integer(hits.into()) * half();
            }
        }
        total
    })
}

/// `x_i -> 1 - x_i` on a function of `x`, or the swap of `u_i` and `u_i'` on a
/// function of the doubled labeling. Both are involutions.
pub trait Flip: Sized {
    fn flip_variable(&self, i: usize) -> Result<Self>;
}

impl Flip for QuadraticPbf {
    fn flip_variable(&self, i: usize) -> Result<Self> {
        self.flip(i)
    }
}

impl Flip for PbfTable {
    fn flip_variable(&self, i: usize) -> Result<Self> {
        self.flip(i)
    }
}

impl Flip for SymmetricQuadratic {
    fn flip_variable(&self, i: usize) -> Result<Self> {
        let n = self.n();
        check_node(i, n)?;
        let swap = |k: usize| {
            if k == i {
                i + n
            } else if k == i + n {
                i
            } else {
                k
            }
        };
        let mut q = QuadraticPbf::new(2 * n);
        for k in 0..2 * n {
            let [a, b] = self.q.unary(k);
            q.add_unary(swap(k), a.clone(), b.clone())?;
        }
        for (&(a, b), t) in self.q.edges() {
            q.add_edge(swap(a), swap(b), t.clone())?;
        }
        Ok(SymmetricQuadratic { q })
    }
}

impl Flip for PairFunction {
    fn flip_variable(&self, i: usize) -> Result<Self> {
        let n = self.n();
        check_node(i, n)?;
        Ok(PairFunction::from_fn(n, |u| {
            let mut v = u.clone();
            v.set(i, u.get(i + n));
            v.set(i + n, u.get(i));
            self.at_index(v.index()).clone()
        }))
    }
}

pub fn flip_variable<T: Flip>(f: &T, i: usize) -> Result<T> {
    f.flip_variable(i)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoofDualSolution {
    pub g: SymmetricQuadratic,
    /// `min g`, a lower bound on `min f`.
    pub bound: Rational,
    /// The minimal minimizer of `g`; it lies in `X^-`.
    pub u: PairLabeling,
    /// `x_i = (u_i + 1 - u_i') / 2`.
    pub x_hat: HalfLabeling,
}

impl RoofDualSolution {
    /// Nodes with an integral label in `x_hat`.
    pub fn persistent(&self) -> Vec<usize> {
        (0..self.x_hat.len())
            .filter(|&i| self.x_hat.doubled()[i] != 1)
            .collect()
    }
}

/// Minimizes the roof dual by max-flow and reads off the half-integral
/// minimizer from the smallest minimum cut, canonicalized by `u ∧ u'`.
pub fn solve_roofdual(f: &QuadraticPbf) -> Result<RoofDualSolution> {
    let g = build_roofdual(f);
    let net = to_flow_network(g.quadratic())?;
    let flow = maxflow(&net);
    let cut = PairLabeling::new(flow.source_side)?;
    let u = cut.meet(&cut.mate_flip())?;
    let bound = g.eval(&u)?;
    debug_assert_eq!(bound, &flow.value + &net.offset);
    let n = f.n();
    let x_hat = HalfLabeling::from_doubled(
        (0..n)
            .map(|i| u.get(i) as u8 + !u.get(i + n) as u8)
            .collect(),
    )?;
    Ok(RoofDualSolution {
        g,
        bound,
        u,
        x_hat,
    })
}

/// `g(x, y) = min over α, β of g̃(x, α, y, β)` where the last `k` variables
/// of each half of `g̃` are auxiliary.
pub fn eliminate_auxiliary(gt: &PairFunction, k: usize, bound: EnumBound) -> Result<PairFunction> {
    let total = gt.n();
    if k > total {
        return Err(Error::Precondition(format!("{k} auxiliary variables out of {total}")));
    }
    bound.check(1u128 << (2 * k))?;
    let n = total - k;
    let mask = (1usize << n) - 1;
    Ok(PairFunction::from_fn(n, |u| {
        let (x, y) = (u.index() >> n, u.index() & mask);
        (0..1usize << (2 * k))
            .map(|ab| {
                let (alpha, beta) = (ab >> k, ab & ((1 << k) - 1));
                let index = (((x << k | alpha) << n | y) << k) | beta;
                gt.at_index(index)
            })
            .min()
            .expect("at least one auxiliary labeling")
            .clone()
    }))
}

/// Both sides of `g(u) + g(u^{ij}) = g(u^i) + g(u^j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma13Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Lemma13Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates the exchange identity for the roof dual `g` of `f` at `u` and
/// doubled nodes `i`, `j`. Both must lie in pairs labeled `(0, 0)` and the
/// terms of `f` between their base nodes must have the required type.
pub fn lemma13_identity(
    f: &QuadraticPbf,
    g: &SymmetricQuadratic,
    u: &PairLabeling,
    i: usize,
    j: usize,
) -> Result<Lemma13Sides> {
    let n = f.n();
    check_len(n, g.n())?;
    check_len(n, u.n())?;
    check_node(i, 2 * n)?;
    check_node(j, 2 * n)?;
    if i == j {
        return Err(Error::Precondition("i and j must differ".into()));
    }
    for k in [i, j] {
        if u.pair(k % n) != (false, false) {
            return Err(Error::Precondition(format!(
                "node {k} is not in a (0,0) pair of {u}"
            )));
        }
    }
    let (bi, bj) = (i % n, j % n);
    if bi != bj {
        let term: Option<EdgeTable> = f.edge(bi, bj);
        let want_submodular = (i < n) != (j < n);
        if let Some(t) = term {
            if edge_is_submodular(&t) != want_submodular {
                return Err(Error::Precondition(format!(
                    "term on x{} x{} must be {}submodular",
                    bi + 1,
                    bj + 1,
                    if want_submodular { "" } else { "non-" }
                )));
            }
        }
    }
    let with = |ks: &[usize]| {
        let mut v = u.clone();
        for &k in ks {
            v.set(k, true);
        }
        g.eval(&v)
    };
    Ok(Lemma13Sides {
        lhs: with(&[])? + with(&[i, j])?,
        rhs: with(&[i])? + with(&[j])?,
    })
}

/// Minimum of `g` over `X` by enumeration.
pub fn brute_min_pairs(g: &SymmetricQuadratic, bound: EnumBound) -> Result<Rational> {
    bound.check(1u128 << (2 * g.n()))?;
    Ok(PairLabeling::all(g.n())
        .map(|u| g.eval(&u).expect("sizes match"))
        .min()
        .unwrap_or_else(Rational::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbf::{edge_table, BinaryLabeling};
    use crate::rational::int;

    fn product() -> QuadraticPbf {
        let mut f = QuadraticPbf::new(2);
        f.add_edge(0, 1, edge_table(int(0), int(0), int(0), int(1))).unwrap();
        f
    }

    #[test]
    fn non_submodular_edge_rule() {
        let g = build_roofdual(&product());
        // g = (u1 (1 - u2') + (1 - u1') u2) / 2
        for u in PairLabeling::all(2) {
            let b = |k: usize| u.get(k) as i64;
            let want = Rational::new((b(0) * (1 - b(3)) + (1 - b(2)) * b(1)).into(), 2.into());
            assert_eq!(g.eval(&u).unwrap(), want, "{u}");
        }
    }

    #[test]
    fn unary_rule() {
        let mut f = QuadraticPbf::new(1);
        f.add_unary(0, int(3), int(7)).unwrap();
        let g = build_roofdual(&f);
        for u in PairLabeling::all(1) {
            let fv = |b: bool| if b { int(7) } else { int(3) };
            let want = (fv(u.get(0)) + fv(!u.get(1))) * half();
            assert_eq!(g.eval(&u).unwrap(), want);
        }
    }

    #[test]
    fn roof_dual_is_tight_and_symmetric() {
        let g = build_roofdual(&product());
        let table = g.to_pair_function();
        assert!(table.is_symmetric());
        assert!(table.is_submodular());
        assert!(table.is_relaxation_of(&product().to_table()));
    }

    #[test]
    fn submodular_example_solves_integrally() {
        // x1 + x2 - 2 x1 x2
        let mut f = QuadraticPbf::new(2);
        f.add_edge(0, 1, edge_table(int(0), int(1), int(1), int(0))).unwrap();
        let s = solve_roofdual(&f).unwrap();
        assert_eq!(s.bound, int(0));
        // g(0,0,0,0) = (f(0,0) + f(1,1)) / 2 = 0, so the smallest minimizer
        // is the all-zero labeling and nothing is fixed
        assert_eq!(s.x_hat.to_string(), "hh");
        assert!(s.persistent().is_empty());
        let flipped = solve_roofdual(&f.flip_variable(0).unwrap()).unwrap();
        assert_eq!(flipped.bound, int(0));
    }

    #[test]
    fn frustrated_triangle_is_all_half() {
        // ~x1 x2 + x1 ~x2 + ~x2 x3 + x2 ~x3 + x1 x3 + ~x1 ~x3
        let mut f = QuadraticPbf::new(3);
        let neq = edge_table(int(0), int(1), int(1), int(0));
        let eq = edge_table(int(1), int(0), int(0), int(1));
        f.add_edge(0, 1, neq.clone()).unwrap();
        f.add_edge(1, 2, neq).unwrap();
        f.add_edge(0, 2, eq).unwrap();
        let s = solve_roofdual(&f).unwrap();
        assert_eq!(s.bound, int(0));
        assert_eq!(s.x_hat.to_string(), "hhh");
        assert!(s.persistent().is_empty());
        let binary_min = BinaryLabeling::all(3).map(|x| f.eval(&x).unwrap()).min().unwrap();
        assert_eq!(binary_min, int(1));
    }

    #[test]
    fn flips_are_involutions() {
        let g = build_roofdual(&product());
        let twice = g.flip_variable(1).unwrap().flip_variable(1).unwrap();
        assert_eq!(twice.to_pair_function(), g.to_pair_function());
        let f = product();
        assert_eq!(f.flip_variable(0).unwrap().flip_variable(0).unwrap(), f);
        let flipped = f.flip_variable(0).unwrap();
        assert!(flipped.edges().all(|(_, t)| edge_is_submodular(t)));
        assert!(g.flip_variable(2).is_err());
    }

    #[test]
    fn eliminating_nothing_is_identity() {
        let g = build_roofdual(&product()).to_pair_function();
        assert_eq!(eliminate_auxiliary(&g, 0, EnumBound::default()).unwrap(), g);
    }

    #[test]
    fn matching_auxiliary_eliminates_to_zero() {
        // (x - α)^2 on one base and one auxiliary variable, in both halves
        let gt = PairFunction::from_fn(2, |u| {
            let b = |k: usize| u.get(k) as i64;
            int((b(0) - b(1)).pow(2) + (b(2) - b(3)).pow(2))
        });
        let g = eliminate_auxiliary(&gt, 1, EnumBound::default()).unwrap();
        assert!(g.values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn lemma13_unary_mate_case() {
        let mut f = QuadraticPbf::new(1);
        f.add_unary(0, int(2), int(5)).unwrap();
        let g = build_roofdual(&f);
        let sides = lemma13_identity(&f, &g, &PairLabeling::zeros(1), 0, 1).unwrap();
        assert_eq!(sides.lhs, int(7));
        assert!(sides.holds());
    }

    #[test]
    fn lemma13_rejects_bad_preconditions() {
        let f = product();
        let g = build_roofdual(&f);
        let zero = PairLabeling::zeros(2);
        // x1 x2 is non-submodular, so (i, j') needs a submodular term
        assert!(lemma13_identity(&f, &g, &zero, 0, 3).is_err());
        let busy = PairLabeling::unit(2, 0);
        assert!(lemma13_identity(&f, &g, &busy, 0, 1).is_err());
        assert!(lemma13_identity(&f, &g, &zero, 0, 1).unwrap().holds());
    }
}
