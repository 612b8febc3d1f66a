//! Multilinear and posiform representations of pseudo-boolean functions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::pbf::{BinaryLabeling, PbfTable};
use crate::rational::Rational;

fn nodes_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn mask_of(nodes: &[usize]) -> u64 {
    nodes.iter().fold(0, |m, &i| m | 1 << i)
}

fn holds_all(x: &[bool], mask: u64, value: bool) -> bool {
    nodes_of(mask).into_iter().all(|i| x[i] == value)
}

/// `c * prod_{i in A} x_i * prod_{i in B} (1 - x_i)` with `A` and `B` disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    coefficient: Rational,
    positive: u64,
    negative: u64,
}

impl Monomial {
    /// Returns `None` when the literal sets overlap.
    pub fn new(coefficient: Rational, positive: &[usize], negative: &[usize]) -> Option<Self> {
        let (p, q) = (mask_of(positive), mask_of(negative));
        (p & q == 0).then_some(Monomial {
            coefficient,
            positive: p,
            negative: q,
        })
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn positive(&self) -> Vec<usize> {
        nodes_of(self.positive)
    }

    pub fn negative(&self) -> Vec<usize> {
        nodes_of(self.negative)
    }

    pub fn degree(&self) -> u32 {
        (self.positive | self.negative).count_ones()
    }

    /// Value on a labeling given as bits (node 0 first).
    pub fn eval_bits(&self, x: &[bool]) -> Rational {
        if holds_all(x, self.positive, true) && holds_all(x, self.negative, false) {
            self.coefficient.clone()
        } else {
            Rational::zero()
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        for i in nodes_of(self.positive | self.negative) {
            if self.positive >> i & 1 == 1 {
                write!(f, "*x{}", i + 1)?;
            } else {
                write!(f, "*~x{}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Sparse multilinear polynomial `sum_S c_S prod_{i in S} x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    n: usize,
    coeffs: BTreeMap<u64, Rational>,
}

impl MultilinearPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Nonzero terms as (sorted node set, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
        self.coeffs.iter().map(|(&m, c)| (nodes_of(m), c))
    }

    pub fn coefficient(&self, nodes: &[usize]) -> Rational {
        self.coeffs
            .get(&mask_of(nodes))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval_bits(&self, x: &[bool]) -> Rational {
        self.coeffs
            .iter()
            .filter(|(&m, _)| holds_all(x, m, true))
            .map(|(_, c)| c)
            .sum()
    }

    pub fn eval(&self, x: &BinaryLabeling) -> Rational {
        self.eval_bits(x.bits())
    }
}

/// Unique multilinear polynomial agreeing with `f` on `{0,1}^n`, by Möbius
/// inversion over the subset lattice.
pub fn to_multilinear(f: &PbfTable) -> MultilinearPoly {
    let n = f.n();
    assert!(n < 64);
    // coefficients indexed by node-bit masks (bit i = node i)
    let mut arr: Vec<Rational> = (0..1usize << n)
        .map(|mask| {
            let index = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(0, |acc, i| acc | 1 << (n - 1 - i));
            f.at_index(index).clone()
        })
        .collect();
    for i in 0..n {
        for mask in 0..1usize << n {
            if mask >> i & 1 == 1 {
                let lower = arr[mask ^ 1 << i].clone();
                arr[mask] -= lower;
            }
        }
    }
    let coeffs = arr
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m as u64, c))
        .collect();
    MultilinearPoly { n, coeffs }
}

/// A constant plus monomials with nonpositive coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativePosiform {
    pub constant: Rational,
    pub monomials: Vec<Monomial>,
}

impl NegativePosiform {
    pub fn eval_bits(&self, x: &[bool]) -> Rational {
        self.monomials
            .iter()
            .fold(self.constant.clone(), |acc, m| acc + m.eval_bits(x))
    }
}

/// Writes `f = constant + sum of monomials` with every monomial coefficient
/// `<= 0`.
///
/// Starting from the multilinear polynomial, the highest-degree monomial with a
/// positive coefficient `c` on literal set `L` is rewritten through its
/// lowest-index literal `l`: `c*l*R = c*R - c*~l*R`. Positive mass only moves
/// to lower degrees, so the loop ends with positive mass on the constant only.
pub fn posiform_decompose(f: &PbfTable) -> NegativePosiform {
    let poly = to_multilinear(f);
    // (positive mask, negative mask) -> coefficient
    let mut terms: BTreeMap<(u64, u64), Rational> =
        poly.coeffs.into_iter().map(|(m, c)| ((m, 0), c)).collect();
    let mut constant = terms.remove(&(0, 0)).unwrap_or_else(Rational::zero);

    loop {
        let pick = terms
            .iter()
            .filter(|(_, c)| c.is_positive())
            .max_by(|(a, _), (b, _)| {
                let (da, db) = ((a.0 | a.1).count_ones(), (b.0 | b.1).count_ones());
                // highest degree first, then the smallest key
                da.cmp(&db).then_with(|| b.cmp(a))
            })
            .map(|(&k, _)| k);
        let Some(key) = pick else { break };
        let c = terms.remove(&key).expect("picked key exists");
        let (pos, neg) = key;
        let lit = (pos | neg).trailing_zeros();
        let bit = 1u64 << lit;
        let rest = (pos & !bit, neg & !bit);
        let flipped = if pos & bit != 0 {
            (pos & !bit, neg | bit)
        } else {
            (pos | bit, neg & !bit)
        };
        if rest == (0, 0) {
            constant += &c;
        } else {
            add_term(&mut terms, rest, c.clone());
        }
        add_term(&mut terms, flipped, -c);
    }

    let monomials = terms
        .into_iter()
        .map(|((p, q), c)| Monomial {
            coefficient: c,
            positive: p,
            negative: q,
        })
        .collect();
    NegativePosiform {
        constant,
        monomials,
    }
}

fn add_term(terms: &mut BTreeMap<(u64, u64), Rational>, key: (u64, u64), c: Rational) {
    let entry = terms.entry(key).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        terms.remove(&key);
    }
}

/// The product `prod_{i in nodes} x_i` as a table.
pub fn product_table(n: usize, nodes: &[usize], c: Rational) -> PbfTable {
    PbfTable::from_fn(n, |x| {
        if nodes.iter().all(|&i| x.get(i)) {
            c.clone()
        } else {
            Rational::zero()
        }
    })
}
