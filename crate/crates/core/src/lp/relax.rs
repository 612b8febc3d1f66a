//! Linear programs over relaxations of a pseudo-boolean function.
//!
//! Values are indexed by orbits of `u -> u'`. A bisubmodular relaxation has
//! one unknown per point of `X^-` (the trit index), a submodular one has one
//! unknown per orbit of `X`. Tightness fixes the orbits of `X°` to `f`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::bisub::labeling::PairSpace;
use crate::bisub::{inequality_set, ExchangeInequality, HalfFunction, Method, PairFunction, PairLabeling};
use crate::error::{Error, Result};
use crate::lp::simplex::{LinearProgram, LpResult, Relation};
use crate::pbf::{check_len, PbfTable};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelaxationClass {
    Bisubmodular,
    Submodular,
}

impl fmt::Display for RelaxationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelaxationClass::Bisubmodular => "bisub",
            RelaxationClass::Submodular => "submod",
        })
    }
}

impl FromStr for RelaxationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bisub" => Ok(RelaxationClass::Bisubmodular),
            "submod" => Ok(RelaxationClass::Submodular),
            _ => Err(Error::Precondition(format!("unknown relaxation class {s:?}"))),
        }
    }
}

/// The local characterization over `X^-`, written with trit indices.
pub fn gen_bisub_constraints(n: usize) -> BTreeSet<ExchangeInequality> {
    inequality_set(n, Method::C)
}

/// Representative of the orbit `{u, u'}`: the smaller index.
pub fn submodular_orbit(n: usize, index: usize) -> usize {
    let p = PairSpace::new(n).prime(index as u32) as usize;
    index.min(p)
}

/// `g(u) + g(u ∨ e^i ∨ e^j) <= g(u ∨ e^i) + g(u ∨ e^j)` for every `u` and
/// `i < j` with `u_i = u_j = 0`, written over orbit representatives, with
/// trivial and repeated inequalities dropped.
pub fn gen_submodular_constraints(n: usize) -> BTreeSet<ExchangeInequality> {
    let s = PairSpace::new(n);
    let orbit = |u: u32| submodular_orbit(n, u as usize);
    let sorted = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut set = BTreeSet::new();
    for u in 0..s.size() as u32 {
        for i in 0..2 * n {
            if u & s.bit(i) != 0 {
                continue;
            }
            for j in i + 1..2 * n {
                if u & s.bit(j) != 0 {
                    continue;
                }
                let (bi, bj) = (s.bit(i), s.bit(j));
                let ineq = ExchangeInequality {
                    lhs: sorted(orbit(u), orbit(u | bi | bj)),
                    rhs: sorted(orbit(u | bi), orbit(u | bj)),
                };
                if ineq.lhs != ineq.rhs {
                    set.insert(ineq);
                }
            }
        }
    }
    set
}

/// Unknowns and constants of a relaxation program.
struct Model {
    /// Orbit id -> LP variable.
    var_of: BTreeMap<usize, usize>,
    fixed: BTreeMap<usize, Rational>,
    lp: LinearProgram,
}

impl Model {
    fn new(unknown: impl IntoIterator<Item = (usize, String)>, fixed: BTreeMap<usize, Rational>) -> Self {
        let mut lp = LinearProgram::new();
        let var_of = unknown
            .into_iter()
            .map(|(o, name)| (o, lp.add_free(name)))
            .collect();
        Model { var_of, fixed, lp }
    }

    /// `sum plus - sum minus <= 0` with constants folded into the right side.
    /// Inequalities without unknowns are kept only when violated.
    fn add_inequality(&mut self, name: String, plus: &[usize], minus: &[usize]) -> Result<()> {
        let mut coeff: BTreeMap<usize, i64> = BTreeMap::new();
        let mut rhs = Rational::zero();
        for (orbits, sign) in [(plus, 1i64), (minus, -1i64)] {
            for o in orbits {
                match self.var_of.get(o) {
                    Some(&v) => *coeff.entry(v).or_default() += sign,
                    None => rhs -= int(sign) * &self.fixed[o],
                }
            }
        }
        let terms: Vec<(usize, Rational)> = coeff
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(v, c)| (v, int(c)))
            .collect();
        if terms.is_empty() && rhs >= Rational::zero() {
            return Ok(());
        }
        self.lp.add_constraint(name, terms, Relation::Le, rhs)?;
        Ok(())
    }

    fn value(&self, x: &[Rational], orbit: usize) -> Rational {
        match self.var_of.get(&orbit) {
            Some(&v) => x[v].clone(),
            None => self.fixed[&orbit].clone(),
        }
    }
}

/// An optimal relaxation as a value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelaxationTable {
    /// A bisubmodular relaxation on `X^-`.
    Half(HalfFunction),
    /// A submodular relaxation on `X`.
    Pair(PairFunction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tightest {
    pub class: RelaxationClass,
    /// The largest attainable minimum `t*`.
    pub t: Rational,
    pub g: RelaxationTable,
}

fn class_model(f: &PbfTable, class: RelaxationClass) -> Model {
    let n = f.n();
    let s = PairSpace::new(n);
    match class {
        RelaxationClass::Bisubmodular => {
            let mut fixed = BTreeMap::new();
            let mut unknown = Vec::new();
            for u in (0..s.size() as u32).filter(|&u| s.in_minus(u)) {
                let o = s.half_index(u);
                let w = s.to_labeling(u);
                if s.in_plus(u) {
                    let x = w.halves().0.to_vec();
                    fixed.insert(o, f.at_index(bits_index(&x)).clone());
                } else {
                    unknown.push((o, format!("g({w})")));
                }
            }
            let mut m = Model::new(unknown, fixed);
            for ineq in gen_bisub_constraints(n) {
                let name = format!("b{}.{}<={}.{}", ineq.lhs.0, ineq.lhs.1, ineq.rhs.0, ineq.rhs.1);
                m.add_inequality(name, &[ineq.lhs.0, ineq.lhs.1], &[ineq.rhs.0, ineq.rhs.1])
                    .expect("orbits are declared");
            }
            m
        }
        RelaxationClass::Submodular => {
            let mut fixed = BTreeMap::new();
            let mut unknown = Vec::new();
            for u in 0..s.size() as u32 {
                if submodular_orbit(n, u as usize) != u as usize {
                    continue;
                }
                let w = s.to_labeling(u);
                if s.prime(u) == u {
                    let x = w.halves().0.to_vec();
                    fixed.insert(u as usize, f.at_index(bits_index(&x)).clone());
                } else {
                    unknown.push((u as usize, format!("g({w})")));
                }
            }
            let mut m = Model::new(unknown, fixed);
            for ineq in gen_submodular_constraints(n) {
                let name = format!("s{}.{}<={}.{}", ineq.lhs.0, ineq.lhs.1, ineq.rhs.0, ineq.rhs.1);
                m.add_inequality(name, &[ineq.lhs.0, ineq.lhs.1], &[ineq.rhs.0, ineq.rhs.1])
                    .expect("orbits are declared");
            }
            m
        }
    }
}

/// Solves and re-checks the answer against the program exactly.
fn verified(lp: &LinearProgram) -> Result<LpResult> {
    let result = lp.solve();
    if result.verify(lp) {
        Ok(result)
    } else {
        Err(Error::Lp(format!("{} result failed re-verification", result.status())))
    }
}

fn bits_index(x: &[bool]) -> usize {
    x.iter().fold(0, |acc, &b| acc << 1 | b as usize)
}

fn orbits_of(m: &Model) -> Vec<usize> {
    m.var_of.keys().chain(m.fixed.keys()).copied().collect()
}

fn table_of(n: usize, class: RelaxationClass, m: &Model, x: &[Rational]) -> RelaxationTable {
    match class {
        RelaxationClass::Bisubmodular => {
            let s = PairSpace::new(n);
            let mut values = vec![Rational::zero(); 3usize.pow(n as u32)];
            for u in (0..s.size() as u32).filter(|&u| s.in_minus(u)) {
                let o = s.half_index(u);
                values[o] = m.value(x, o);
            }
            RelaxationTable::Half(HalfFunction::new(n, values).expect("3^n values"))
        }
        RelaxationClass::Submodular => RelaxationTable::Pair(PairFunction::from_fn(n, |u| {
            m.value(x, submodular_orbit(n, u.index()))
        })),
    }
}

/// Maximizes `t` subject to `t <= g(u)` on the whole class domain, the class
/// inequalities and `g(x, 1 - x) = f(x)`.
pub fn tightest_relaxation(f: &PbfTable, class: RelaxationClass) -> Result<Tightest> {
    let n = f.n();
    if n > 4 {
        return Err(Error::Precondition(format!("n = {n} exceeds 4")));
    }
    let mut m = class_model(f, class);
    let t = m.lp.add_free("t");
    for o in orbits_of(&m) {
        let mut terms = vec![(t, int(1))];
        let rhs = match m.var_of.get(&o) {
            Some(&v) => {
                terms.push((v, int(-1)));
                Rational::zero()
            }
            None => m.fixed[&o].clone(),
        };
        m.lp.add_constraint(format!("t<=g{o}"), terms, Relation::Le, rhs)?;
    }
    m.lp.set_objective(vec![(t, int(1))])?;
    match verified(&m.lp)? {
        LpResult::Optimal { value, x } => Ok(Tightest {
            class,
            g: table_of(n, class, &m, &x),
            t: value,
        }),
        other => Err(Error::Lp(format!(
            "tightest relaxation LP is {} although a submodular relaxation always exists",
            other.status()
        ))),
    }
}

/// The largest value a relaxation of the class can take at `u0 ∈ X^-`.
pub fn pointwise_max_relaxation(f: &PbfTable, u0: &PairLabeling, class: RelaxationClass) -> Result<Rational> {
    let n = f.n();
    check_len(n, u0.n())?;
    if n > 4 {
        return Err(Error::Precondition(format!("n = {n} exceeds 4")));
    }
    let s = PairSpace::new(n);
    let u = u0.index() as u32;
    if !s.in_minus(u) {
        return Err(Error::NotInXMinus(u0.to_string()));
    }
    let mut m = class_model(f, class);
    let orbit = match class {
        RelaxationClass::Bisubmodular => s.half_index(u),
        RelaxationClass::Submodular => submodular_orbit(n, u as usize),
    };
    let Some(&v) = m.var_of.get(&orbit) else {
        return Ok(m.fixed[&orbit].clone());
    };
    m.lp.set_objective(vec![(v, int(1))])?;
    match verified(&m.lp)? {
        LpResult::Optimal { value, .. } => Ok(value),
        other => Err(Error::Lp(format!("pointwise maximum LP is {}", other.status()))),
    }
}

/// Counts `(n01, n10, n00, n11)` of the pairs `(u_i, u_i')`.
pub(crate) fn pair_counts(s: PairSpace, u: u32, n: usize) -> [usize; 4] {
    let mut c = [0usize; 4];
    for i in 0..n {
        let k = match s.pair(u, i) {
            (false, true) => 0,
            (true, false) => 1,
            (false, false) => 2,
            (true, true) => 3,
        };
        c[k] += 1;
    }
    c
}

/// The submodular-extension feasibility program and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub lp: LinearProgram,
    pub result: LpResult,
}

impl Extension {
    pub fn feasible(&self) -> bool {
        !matches!(self.result, LpResult::Infeasible(_))
    }
}

/// Builds the program asking for values on `X \ X^*` that make the symmetric
/// completion of `g` submodular.
///
/// With `symmetrize`, `g` must depend only on `(n01, n10)` and the unknowns
/// collapse to one per count signature `(n01, n10, n00, n11)` up to swapping
/// the last two counts.
pub fn extension_program(g: &HalfFunction, symmetrize: bool) -> Result<LinearProgram> {
    let n = g.n();
    if n > 4 {
        return Err(Error::Precondition(format!("n = {n} exceeds 4")));
    }
    let s = PairSpace::new(n);
    let ext = g.extend_to_xstar();
    if symmetrize {
        let mut by_counts: BTreeMap<(usize, usize), &Rational> = BTreeMap::new();
        for u in (0..s.size() as u32).filter(|&u| s.in_minus(u)) {
            let c = pair_counts(s, u, n);
            let v = g.at_index(s.half_index(u));
            if *by_counts.entry((c[0], c[1])).or_insert(v) != v {
                return Err(Error::NotCardinalityDependent);
            }
        }
    }
    // orbit id -> (variable key, name) for unknowns
    let key_of = |u: u32| -> (usize, String) {
        if symmetrize {
            let [a, b, c, d] = pair_counts(s, u, n);
            let (c, d) = (c.min(d), c.max(d));
            (((a * 8 + b) * 8 + c) * 8 + d, format!("G({a},{b},{c},{d})"))
        } else {
            let o = submodular_orbit(n, u as usize);
            (o, format!("g({})", s.to_labeling(o as u32)))
        }
    };
    let mut fixed = BTreeMap::new();
    let mut unknown: BTreeMap<usize, String> = BTreeMap::new();
    // orbit -> key in the model
    let mut model_key: BTreeMap<usize, usize> = BTreeMap::new();
    const FIXED_BASE: usize = 1 << 40;
    for u in 0..s.size() as u32 {
        let o = submodular_orbit(n, u as usize);
        if s.in_star(u) {
            let value = ext.eval(&s.to_labeling(u)).expect("u is in X^*");
            model_key.insert(o, FIXED_BASE + o);
            fixed.insert(FIXED_BASE + o, value);
        } else {
            let (key, name) = key_of(u);
            model_key.insert(o, key);
            unknown.insert(key, name);
        }
    }
    let mut m = Model::new(unknown, fixed);
    let mut seen = BTreeSet::new();
    for ineq in gen_submodular_constraints(n) {
        let k = |o: usize| model_key[&o];
        let mut plus = [k(ineq.lhs.0), k(ineq.lhs.1)];
        let mut minus = [k(ineq.rhs.0), k(ineq.rhs.1)];
        plus.sort();
        minus.sort();
        if plus == minus || !seen.insert((plus, minus)) {
            continue;
        }
        let show = |o: usize| s.to_labeling(o as u32).to_string();
        let name = format!(
            "{} + {} <= {} + {}",
            show(ineq.lhs.0),
            show(ineq.lhs.1),
            show(ineq.rhs.0),
            show(ineq.rhs.1)
        );
        m.add_inequality(name, &plus, &minus)?;
    }
    Ok(m.lp)
}

/// Whether `g` on `X^-` extends to a symmetric submodular function on `X`.
pub fn extension_feasible(g: &HalfFunction, symmetrize: bool) -> Result<Extension> {
    let lp = extension_program(g, symmetrize)?;
    let result = verified(&lp)?;
    Ok(Extension { lp, result })
}
