//! Cardinality-dependent functions `g(u) = G(n01[u], n10[u])` on `X^-`.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::bisub::{HalfFunction, HalfLabeling, PairLabeling};
use crate::error::{Error, Result};
use crate::pbf::PbfTable;
use crate::rational::{int, Rational};

/// `G` on `D_n = {(a, b) : a, b >= 0, a + b <= n}`, stored as a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityFn {
    n: usize,
    values: Vec<Rational>,
}

impl CardinalityFn {
    pub fn from_fn(n: usize, mut g: impl FnMut(usize, usize) -> Rational) -> Self {
        let values = Self::domain(n).map(|(a, b)| g(a, b)).collect();
        CardinalityFn { n, values }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| int(0))
    }

    /// `D_n` in lexicographic order.
    pub fn domain(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..=n).flat_map(move |a| (0..=n - a).map(move |b| (a, b)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, a: usize, b: usize) -> Option<usize> {
        (a + b <= self.n).then(|| Self::domain(self.n).position(|p| p == (a, b)).expect("in D_n"))
    }

    pub fn get(&self, a: usize, b: usize) -> Result<&Rational> {
        match self.index(a, b) {
            Some(k) => Ok(&self.values[k]),
            None => Err(Error::Precondition(format!("({a}, {b}) is outside D_{}", self.n))),
        }
    }

    pub fn set(&mut self, a: usize, b: usize, value: Rational) -> Result<()> {
        match self.index(a, b) {
            Some(k) => {
                self.values[k] = value;
                Ok(())
            }
            None => Err(Error::Precondition(format!("({a}, {b}) is outside D_{}", self.n))),
        }
    }

    fn at(&self, a: usize, b: usize) -> &Rational {
        self.get(a, b).expect("caller stays in D_n")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CardCounts {
    pub n01: usize,
    pub n10: usize,
    pub n00: usize,
    pub n11: usize,
}

pub fn card_counts(u: &PairLabeling) -> CardCounts {
    let mut c = CardCounts {
        n01: 0,
        n10: 0,
        n00: 0,
        n11: 0,
    };
    for i in 0..u.n() {
        match u.pair(i) {
            (false, true) => c.n01 += 1,
            (true, false) => c.n10 += 1,
            (false, false) => c.n00 += 1,
            (true, true) => c.n11 += 1,
        }
    }
    c
}

/// Counts of a half-integral labeling: `0 -> n01`, `1 -> n10`.
fn half_counts(x: &HalfLabeling) -> (usize, usize) {
    let d = x.doubled();
    (d.iter().filter(|&&t| t == 0).count(), d.iter().filter(|&&t| t == 2).count())
}

pub fn expand(g: &CardinalityFn) -> HalfFunction {
    HalfFunction::from_fn(g.n, |x| {
        let (a, b) = half_counts(x);
        g.at(a, b).clone()
    })
}

/// The four inequality families on `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CardCondition {
    /// `G(a, b) + G(a - 2, b) <= 2 G(a - 1, b)`
    A,
    /// `G(a, b) + G(a, b - 2) <= 2 G(a, b - 1)`
    B,
    /// `G(a, b) + G(a - 1, b - 1) <= G(a - 1, b) + G(a, b - 1)`
    C,
    /// `2 G(a, b) <= G(a + 1, b) + G(a, b + 1)` on `a + b = n - 1`
    D,
}

impl fmt::Display for CardCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CardCondition::A => "a",
            CardCondition::B => "b",
            CardCondition::C => "c",
            CardCondition::D => "d",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardViolation {
    pub condition: CardCondition,
    pub a: usize,
    pub b: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for CardViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) at ({}, {}): {} > {}", self.condition, self.a, self.b, self.lhs, self.rhs)
    }
}

type Family<'a> = &'a dyn Fn(usize, usize) -> Option<(Rational, Rational)>;

/// First violated inequality, scanning families in order and `D_n`
/// lexicographically; `None` means `expand(g)` is bisubmodular.
pub fn check_card_conditions(g: &CardinalityFn) -> Option<CardViolation> {
    let n = g.n;
    let two = int(2);
    let families: [(CardCondition, Family); 4] = [
        (CardCondition::A, &|a, b| {
            (a >= 2).then(|| (g.at(a, b) + g.at(a - 2, b), &two * g.at(a - 1, b)))
        }),
        (CardCondition::B, &|a, b| {
            (b >= 2).then(|| (g.at(a, b) + g.at(a, b - 2), &two * g.at(a, b - 1)))
        }),
        (CardCondition::C, &|a, b| {
            (a >= 1 && b >= 1)
                .then(|| (g.at(a, b) + g.at(a - 1, b - 1), g.at(a - 1, b) + g.at(a, b - 1)))
        }),
        (CardCondition::D, &|a, b| {
            (a + b + 1 == n).then(|| (&two * g.at(a, b), g.at(a + 1, b) + g.at(a, b + 1)))
        }),
    ];
    for (condition, family) in families {
        for (a, b) in CardinalityFn::domain(n) {
            if let Some((lhs, rhs)) = family(a, b) {
                if lhs > rhs {
                    return Some(CardViolation {
                        condition,
                        a,
                        b,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    None
}

/// Recovers `G` from a cardinality-dependent `g`, or reports that `g` is not.
pub fn collapse(g: &HalfFunction) -> Result<CardinalityFn> {
    let n = g.n();
    let mut out: Vec<Option<Rational>> = vec![None; CardinalityFn::domain(n).count()];
    let shape = CardinalityFn::zero(n);
    for x in HalfLabeling::all(n) {
        let (a, b) = half_counts(&x);
        let k = shape.index(a, b).expect("counts stay in D_n");
        let v = g.at_index(x.index());
        match &out[k] {
            Some(seen) if seen != v => return Err(Error::NotCardinalityDependent),
            Some(_) => {}
            None => out[k] = Some(v.clone()),
        }
    }
    Ok(CardinalityFn {
        n,
        values: out.into_iter().map(|v| v.expect("every count occurs")).collect(),
    })
}

/// The four-variable function with a tight bisubmodular relaxation whose
/// submodular relaxations are all strictly below zero.
pub fn fig1d() -> PbfTable {
    let values = [3, 2, 4, 10, 2, 12, 13, 12, 1, 3, 0, 12, 7, 10, 12, 14];
    PbfTable::new(4, values.iter().map(|&v| int(v)).collect()).expect("16 values")
}

/// Directory holding the transcribed `fig1b.card` and `fig1c.card`.
pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn load(name: &str) -> Result<CardinalityFn> {
    let path = fixture_dir().join(name);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    crate::io::parse_card(&text)
}

/// A bisubmodular relaxation that admits no submodular extension.
pub fn fig1b() -> Result<CardinalityFn> {
    load("fig1b.card")
}

/// A relaxation of the same function that does extend.
pub fn fig1c() -> Result<CardinalityFn> {
    load("fig1c.card")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisub::is_bisubmodular;

    #[test]
    fn domain_size() {
        assert_eq!(CardinalityFn::domain(3).count(), 10);
        let mut g = CardinalityFn::zero(2);
        g.set(1, 1, int(5)).unwrap();
        assert_eq!(g.get(1, 1).unwrap(), &int(5));
        assert!(g.get(2, 1).is_err());
    }

    #[test]
    fn zero_holds() {
        assert!(check_card_conditions(&CardinalityFn::zero(3)).is_none());
    }

    #[test]
    fn square_fails_first_family() {
        let g = CardinalityFn::from_fn(2, |a, _| int((a * a) as i64));
        let v = check_card_conditions(&g).unwrap();
        assert_eq!((v.condition, v.a, v.b), (CardCondition::A, 2, 0));
        assert_eq!((v.lhs, v.rhs), (int(4), int(2)));
    }

    #[test]
    fn difference_is_modular() {
        let g = CardinalityFn::from_fn(2, |a, b| int(a as i64 - b as i64));
        let h = expand(&g);
        assert!(is_bisubmodular(&h));
        assert_eq!(h.eval(&"01".parse().unwrap()).unwrap(), int(0));
        assert_eq!(h.eval(&"00".parse().unwrap()).unwrap(), int(2));
        assert_eq!(collapse(&h).unwrap(), g);
    }

    #[test]
    fn counts_swap_under_prime() {
        let u = PairLabeling::from_halves(&[false, false, true], &[false, false, false]).unwrap();
        let c = card_counts(&u);
        assert_eq!((c.n01, c.n10, c.n00, c.n11), (0, 1, 2, 0));
        let p = card_counts(&u.mate_flip());
        assert_eq!((p.n01, p.n10, p.n00, p.n11), (0, 1, 0, 2));
        let z = card_counts(&PairLabeling::zeros(3));
        assert_eq!(z.n00, 3);
    }

    #[test]
    fn fig1d_table() {
        let f = fig1d();
        assert_eq!(f.at_index(0b0000), &int(3));
        assert_eq!(f.at_index(0b1010), &int(0));
        assert_eq!(f.at_index(0b1111), &int(14));
    }
}
