//! Half-integral labelings, doubled binary labelings and the operators on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pbf::{check_len, BinaryLabeling};
use crate::rational::{rat, Rational};

/// A point of `{0, 1/2, 1}^n`, stored doubled as `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfLabeling(Vec<u8>);

impl HalfLabeling {
    /// Builds from doubled values; anything above 2 is rejected.
    pub fn from_doubled(doubled: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = doubled.iter().find(|&&t| t > 2) {
            return Err(Error::Precondition(format!("doubled trit {bad} > 2")));
        }
        Ok(HalfLabeling(doubled))
    }

    pub fn halves(n: usize) -> Self {
        HalfLabeling(vec![1; n])
    }

    pub fn from_binary(x: &BinaryLabeling) -> Self {
        HalfLabeling(x.bits().iter().map(|&b| if b { 2 } else { 0 }).collect())
    }

    pub fn from_index(n: usize, mut index: usize) -> Self {
        let mut t = vec![0u8; n];
        for slot in t.iter_mut().rev() {
            *slot = (index % 3) as u8;
            index /= 3;
        }
        HalfLabeling(t)
    }

    /// Base-3 index with node 1 most significant and `0 < 1/2 < 1`.
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &t| acc * 3 + t as usize)
    }

    pub fn all(n: usize) -> impl Iterator<Item = HalfLabeling> {
        (0..3usize.pow(n as u32)).map(move |k| HalfLabeling::from_index(n, k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn doubled(&self) -> &[u8] {
        &self.0
    }

    pub fn value(&self, i: usize) -> Rational {
        rat(self.0[i] as i64, 2)
    }

    pub fn values(&self) -> Vec<Rational> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|&t| t != 1)
    }

    pub fn to_binary(&self) -> Option<BinaryLabeling> {
        self.is_integral()
            .then(|| BinaryLabeling::new(self.0.iter().map(|&t| t == 2).collect()))
    }
}

impl fmt::Display for HalfLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.0 {
            f.write_str(match t {
                0 => "0",
                1 => "h",
                _ => "1",
            })?;
        }
        Ok(())
    }
}

impl FromStr for HalfLabeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                'h' => Ok(1),
                '1' => Ok(2),
                _ => Err(Error::Parse {
                    line: 0,
                    msg: format!("bad trit {c:?} in {s:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(HalfLabeling)
    }
}

fn meet_trit(a: u8, b: u8) -> u8 {
    if a == b {
        a
    } else {
        1
    }
}

fn join_trit(a: u8, b: u8) -> u8 {
    match (a, b) {
        _ if a == b => a,
        (1, o) | (o, 1) => o,
        _ => 1,
    }
}

/// Component-wise `⊓`: equal components are kept, anything else becomes 1/2.
pub fn half_meet(x: &HalfLabeling, y: &HalfLabeling) -> Result<HalfLabeling> {
    check_len(x.len(), y.len())?;
    Ok(HalfLabeling(
        x.0.iter().zip(&y.0).map(|(&a, &b)| meet_trit(a, b)).collect(),
    ))
}

/// Component-wise `⊔`: 1/2 yields to the other side, `0 ⊔ 1 = 1/2`.
pub fn half_join(x: &HalfLabeling, y: &HalfLabeling) -> Result<HalfLabeling> {
    check_len(x.len(), y.len())?;
    Ok(HalfLabeling(
        x.0.iter().zip(&y.0).map(|(&a, &b)| join_trit(a, b)).collect(),
    ))
}

/// Where a doubled labeling sits relative to `X^-`, `X^+` and their union.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainClass {
    Xminus,
    Xplus,
    Xcircle,
    Xstar,
    Outside,
}

impl DomainClass {
    /// Whether a labeling classified as `self` belongs to the set `set`.
    pub fn member_of(self, set: DomainClass) -> bool {
        use DomainClass::*;
        match set {
            Xcircle => self == Xcircle,
            Xminus => matches!(self, Xminus | Xcircle),
            Xplus => matches!(self, Xplus | Xcircle),
            Xstar => matches!(self, Xminus | Xplus | Xcircle | Xstar),
            Outside => self == Outside,
        }
    }
}

/// A labeling of the doubled node set: positions `0..n` hold `u_i`, positions
/// `n..2n` hold the mates `u_{i'}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairLabeling(Vec<bool>);

impl PairLabeling {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if !bits.len().is_multiple_of(2) {
            return Err(Error::Precondition("doubled labeling of odd length".into()));
        }
        Ok(PairLabeling(bits))
    }

    pub fn zeros(n: usize) -> Self {
        PairLabeling(vec![false; 2 * n])
    }

    /// From the two halves `(x, y)`.
    pub fn from_halves(x: &[bool], y: &[bool]) -> Result<Self> {
        check_len(x.len(), y.len())?;
        Ok(PairLabeling(x.iter().chain(y).copied().collect()))
    }

    /// `e^k`: the unit labeling with a single 1 at position `k`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut bits = vec![false; 2 * n];
        bits[k] = true;
        PairLabeling(bits)
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, k: usize) -> bool {
        self.0[k]
    }

    pub fn set(&mut self, k: usize, value: bool) {
        self.0[k] = value;
    }

    pub fn mate(&self, k: usize) -> usize {
        let n = self.n();
        (k + n) % (2 * n)
    }

    /// `(u_i, u_{i'})` for a base node `i < n`.
    pub fn pair(&self, i: usize) -> (bool, bool) {
        (self.0[i], self.0[i + self.n()])
    }

    pub fn halves(&self) -> (&[bool], &[bool]) {
        self.0.split_at(self.n())
    }

    pub fn from_index(n: usize, index: usize) -> Self {
        let m = 2 * n;
        PairLabeling((0..m).map(|k| index >> (m - 1 - k) & 1 == 1).collect())
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| acc << 1 | b as usize)
    }

    /// All of `X` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = PairLabeling> {
        (0..1usize << (2 * n)).map(move |k| PairLabeling::from_index(n, k))
    }

    /// `X^-` in lexicographic order.
    pub fn all_minus(n: usize) -> impl Iterator<Item = PairLabeling> {
        PairLabeling::all(n).filter(|u| u.classify().member_of(DomainClass::Xminus))
    }

    /// `u'` with `(u')_k = 1 - u_{k'}`.
    pub fn mate_flip(&self) -> Self {
        PairLabeling((0..self.0.len()).map(|k| !self.0[self.mate(k)]).collect())
    }

    /// Replaces every `(1,1)` pair by `(0,0)`.
    pub fn reduce(&self) -> Self {
        let n = self.n();
        let mut out = self.clone();
        for i in 0..n {
            if self.pair(i) == (true, true) {
                out.0[i] = false;
                out.0[i + n] = false;
            }
        }
        out
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        check_len(self.0.len(), other.0.len())?;
        Ok(PairLabeling(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a && b).collect(),
        ))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        check_len(self.0.len(), other.0.len())?;
        Ok(PairLabeling(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a || b).collect(),
        ))
    }

    pub fn classify(&self) -> DomainClass {
        let n = self.n();
        let has11 = (0..n).any(|i| self.pair(i) == (true, true));
        let has00 = (0..n).any(|i| self.pair(i) == (false, false));
        match (has11, has00) {
            (false, false) => DomainClass::Xcircle,
            (false, true) => DomainClass::Xminus,
            (true, false) => DomainClass::Xplus,
            (true, true) => DomainClass::Outside,
        }
    }

    fn require_minus(&self) -> Result<()> {
        if self.classify().member_of(DomainClass::Xminus) {
            Ok(())
        } else {
            Err(Error::NotInXMinus(self.to_string()))
        }
    }
}

impl fmt::Display for PairLabeling {
    /// `x|y`: the labels of the base nodes, then of their mates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.halves();
        for &b in x {
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str("|")?;
        for &b in y {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `0 -> (0,1)`, `1 -> (1,0)`, `1/2 -> (0,0)`.
pub fn encode(x: &HalfLabeling) -> PairLabeling {
    let n = x.len();
    let mut bits = vec![false; 2 * n];
    for (i, &t) in x.doubled().iter().enumerate() {
        match t {
            0 => bits[i + n] = true,
            2 => bits[i] = true,
            _ => {}
        }
    }
    PairLabeling(bits)
}

/// Inverse of [`encode`] on `X^-`, i.e. `(x, y) -> (x + (1 - y)) / 2`.
pub fn decode(u: &PairLabeling) -> Result<HalfLabeling> {
    u.require_minus()?;
    let n = u.n();
    Ok(HalfLabeling(
        (0..n)
            .map(|i| u.get(i) as u8 + !u.get(i + n) as u8)
            .collect(),
    ))
}

pub fn mate_flip(u: &PairLabeling) -> PairLabeling {
    u.mate_flip()
}

pub fn reduce(w: &PairLabeling) -> PairLabeling {
    w.reduce()
}

/// `u ⊓ v = u ∧ v` on `X^-`.
pub fn pair_meet(u: &PairLabeling, v: &PairLabeling) -> Result<PairLabeling> {
    u.require_minus()?;
    v.require_minus()?;
    u.meet(v)
}

/// `u ⊔ v = REDUCE(u ∨ v)` on `X^-`.
pub fn pair_join(u: &PairLabeling, v: &PairLabeling) -> Result<PairLabeling> {
    u.require_minus()?;
    v.require_minus()?;
    Ok(u.join(v)?.reduce())
}

pub fn classify(u: &PairLabeling) -> DomainClass {
    u.classify()
}

/// Bitmask view of doubled labelings used by the exhaustive checkers.
/// Position `k` lives at bit `2n - 1 - k`, so masks compare like
/// [`PairLabeling::index`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct PairSpace {
    pub n: usize,
}

impl PairSpace {
    pub fn new(n: usize) -> Self {
        PairSpace { n }
    }

    pub fn size(self) -> usize {
        1 << (2 * self.n)
    }

    pub fn bit(self, k: usize) -> u32 {
        1 << (2 * self.n - 1 - k)
    }

    pub fn pair(self, u: u32, i: usize) -> (bool, bool) {
        (u & self.bit(i) != 0, u & self.bit(i + self.n) != 0)
    }

    pub fn prime(self, u: u32) -> u32 {
        let n = self.n;
        let full = (1u32 << (2 * n)) - 1;
        // swap halves, then complement
        let hi = u >> n;
        let lo = u & ((1 << n) - 1);
        (!((lo << n) | hi)) & full
    }

    fn has(self, u: u32, pattern: (bool, bool)) -> bool {
        (0..self.n).any(|i| self.pair(u, i) == pattern)
    }

    pub fn in_minus(self, u: u32) -> bool {
        !self.has(u, (true, true))
    }

    pub fn in_plus(self, u: u32) -> bool {
        !self.has(u, (false, false))
    }

    pub fn in_star(self, u: u32) -> bool {
        self.in_minus(u) || self.in_plus(u)
    }

    pub fn reduce(self, u: u32) -> u32 {
        let mut out = u;
        for i in 0..self.n {
            if self.pair(u, i) == (true, true) {
                out &= !(self.bit(i) | self.bit(i + self.n));
            }
        }
        out
    }

    /// Trit index of a labeling in `X^-`.
    pub fn half_index(self, u: u32) -> usize {
        (0..self.n).fold(0, |acc, i| {
            let (a, b) = self.pair(u, i);
            acc * 3 + a as usize + !b as usize
        })
    }

    /// Trit index of the `X^-` representative of a labeling in `X^*`.
    pub fn star_index(self, u: u32) -> usize {
        if self.in_minus(u) {
            self.half_index(u)
        } else {
            self.half_index(self.prime(u))
        }
    }

    pub fn to_labeling(self, u: u32) -> PairLabeling {
        PairLabeling::from_index(self.n, u as usize)
    }
}
