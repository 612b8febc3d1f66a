//! Exhaustive bisubmodularity checks, one per characterization.
//!
//! | method | enumerates | inequalities checked |
//! |--------|------------|----------------------|
//! | `A` | all ordered pairs of `X^-` (`9^n`) | `g(u ⊓ v) + g(u ⊔ v) <= g(u) + g(v)` |
//! | `B` | ordered pairs of `X^*` with `u ∧ v`, `u ∨ v` in `X^*` (`< 4 * 9^n`) | `g(u ∧ v) + g(u ∨ v) <= g(u) + g(v)` |
//! | `C` | triples `(w, i, j)`, `w` in `X^-` (`3^n * C(2n, 2)`) | `A` restricted to `u = w ∨ e^i`, `v = w ∨ e^j` |
//! | `D` | triples `(w, i, j)`, `w` in `X^*` | `B` restricted likewise |
//!
//! The local checks `C` and `D` are the cheap ones for larger `n`. All four
//! are equivalent for functions extended to `X^*` by `g(u') = g(u)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bisub::function::HalfFunction;
use crate::bisub::labeling::{PairLabeling, PairSpace};
use crate::error::Error;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    A,
    B,
    C,
    D,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::A, Method::B, Method::C, Method::D];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::A => "a",
            Method::B => "b",
            Method::C => "c",
            Method::D => "d",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "a" => Ok(Method::A),
            "b" => Ok(Method::B),
            "c" => Ok(Method::C),
            "d" => Ok(Method::D),
            _ => Err(Error::Precondition(format!("unknown method {s:?}"))),
        }
    }
}

/// A failed inequality `g(low) + g(high) <= g(u) + g(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub method: Method,
    pub u: PairLabeling,
    pub v: PairLabeling,
    pub low: PairLabeling,
    pub high: PairLabeling,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub violation: Option<Violation>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// One exchange inequality in mask form: `low + high <= u + v`.
#[derive(Debug, Clone, Copy)]
struct Exchange {
    u: u32,
    v: u32,
    low: u32,
    high: u32,
}

/// Visits the inequalities of `method` in lexicographic order; the visitor
/// returns `false` to stop.
fn for_each_exchange(n: usize, method: Method, mut visit: impl FnMut(Exchange) -> bool) {
    let s = PairSpace::new(n);
    let all = 0..s.size() as u32;
    let minus: Vec<u32> = all.clone().filter(|&u| s.in_minus(u)).collect();
    let star: Vec<u32> = all.filter(|&u| s.in_star(u)).collect();
    let m = 2 * n;
    match method {
        Method::A => {
            for &u in &minus {
                for &v in &minus {
                    if !visit(Exchange { u, v, low: u & v, high: s.reduce(u | v) }) {
                        return;
                    }
                }
            }
        }
        Method::B => {
            for &u in &star {
                for &v in &star {
                    let (low, high) = (u & v, u | v);
                    if s.in_star(low) && s.in_star(high) && !visit(Exchange { u, v, low, high }) {
                        return;
                    }
                }
            }
        }
        Method::C | Method::D => {
            let base = if method == Method::C { &minus } else { &star };
            for &w in base {
                for i in 0..m {
                    if w & s.bit(i) != 0 {
                        continue;
                    }
                    for j in i + 1..m {
                        if w & s.bit(j) != 0 {
                            continue;
                        }
                        let (u, v) = (w | s.bit(i), w | s.bit(j));
                        let e = if method == Method::C {
                            if !(s.in_minus(u) && s.in_minus(v)) {
                                continue;
                            }
                            Exchange { u, v, low: w, high: s.reduce(u | v) }
                        } else {
                            let high = u | v;
                            if !(s.in_star(u) && s.in_star(v) && s.in_star(high)) {
                                continue;
                            }
                            Exchange { u, v, low: w, high }
                        };
                        if !visit(e) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// Checks `g` against one characterization; on failure reports the first
/// violated inequality in enumeration order.
pub fn check_bisubmodular(g: &HalfFunction, method: Method) -> Verdict {
    let s = PairSpace::new(g.n());
    let val = |u: u32| g.at_index(s.star_index(u));
    let mut violation = None;
    for_each_exchange(g.n(), method, |e| {
        let lhs = val(e.low) + val(e.high);
        let rhs = val(e.u) + val(e.v);
        if lhs > rhs {
            violation = Some(Violation {
                method,
                u: s.to_labeling(e.u),
                v: s.to_labeling(e.v),
                low: s.to_labeling(e.low),
                high: s.to_labeling(e.high),
                lhs,
                rhs,
            });
            false
        } else {
            true
        }
    });
    Verdict { violation }
}

pub fn is_bisubmodular(g: &HalfFunction) -> bool {
    check_bisubmodular(g, Method::C).holds()
}

/// An exchange inequality modulo `g(u') = g(u)`: both sides are multisets of
/// `X^-` points given by their trit index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeInequality {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
}

fn sorted(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl ExchangeInequality {
    /// `g(low) + g(high) <= g(u) + g(v)` with labelings in `X^*`.
    pub fn new(low: &PairLabeling, high: &PairLabeling, u: &PairLabeling, v: &PairLabeling) -> Self {
        let s = PairSpace::new(u.n());
        let idx = |w: &PairLabeling| s.star_index(w.index() as u32);
        ExchangeInequality {
            lhs: sorted(idx(low), idx(high)),
            rhs: sorted(idx(u), idx(v)),
        }
    }
}

/// The nontrivial inequalities of a characterization, modulo `g(u') = g(u)`.
pub fn inequality_set(n: usize, method: Method) -> BTreeSet<ExchangeInequality> {
    let s = PairSpace::new(n);
    let mut set = BTreeSet::new();
    for_each_exchange(n, method, |e| {
        let ineq = ExchangeInequality {
            lhs: sorted(s.star_index(e.low), s.star_index(e.high)),
            rhs: sorted(s.star_index(e.u), s.star_index(e.v)),
        };
        if ineq.lhs != ineq.rhs {
            set.insert(ineq);
        }
        true
    });
    set
}
