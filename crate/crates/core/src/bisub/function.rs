use num_traits::Zero;

use crate::bisub::labeling::{decode, encode, DomainClass, HalfLabeling, PairLabeling, PairSpace};
use crate::enumerate::{brute_min, EnumBound, Minimum};
use crate::error::{Error, Result};
use crate::pbf::{check_len, BinaryLabeling, PbfTable};
use crate::rational::Rational;

/// A function on `{0, 1/2, 1}^n`, equivalently on `X^-` through [`decode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfFunction {
    n: usize,
    values: Vec<Rational>,
}

impl HalfFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_len(3usize.pow(n as u32), values.len())?;
        Ok(HalfFunction { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&HalfLabeling) -> Rational) -> Self {
        HalfFunction {
            n,
            values: HalfLabeling::all(n).map(|x| f(&x)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eval(&self, x: &HalfLabeling) -> Result<Rational> {
        check_len(self.n, x.len())?;
        Ok(self.values[x.index()].clone())
    }

    pub fn at_index(&self, index: usize) -> &Rational {
        &self.values[index]
    }

    /// `g(u)` for `u` in `X^-`.
    pub fn eval_pair(&self, u: &PairLabeling) -> Result<Rational> {
        check_len(self.n, u.n())?;
        self.eval(&decode(u)?)
    }

    /// Restriction to integral labelings.
    pub fn binary_part(&self) -> PbfTable {
        PbfTable::from_fn(self.n, |x| self.values[HalfLabeling::from_binary(x).index()].clone())
    }

    pub fn minimize(&self, bound: EnumBound) -> Result<Minimum<HalfLabeling>> {
        brute_min(
            HalfLabeling::all(self.n),
            3u128.pow(self.n as u32),
            bound,
            |x| self.values[x.index()].clone(),
        )
    }

    pub fn minimize_binary(&self, bound: EnumBound) -> Result<Minimum<BinaryLabeling>> {
        brute_min(BinaryLabeling::all(self.n), 1u128 << self.n, bound, |x| {
            self.values[HalfLabeling::from_binary(x).index()].clone()
        })
    }

    /// Minimum over `X^-`, minimizers in lexicographic order of `X`.
    pub fn minimize_pairs(&self, bound: EnumBound) -> Result<Minimum<PairLabeling>> {
        brute_min(
            PairLabeling::all_minus(self.n),
            3u128.pow(self.n as u32),
            bound,
            |u| self.values[decode(u).expect("in X^-").index()].clone(),
        )
    }

    pub fn extend_to_xstar(&self) -> XStarExtension<'_> {
        XStarExtension { g: self }
    }

    pub fn add_constant(&self, c: &Rational) -> HalfFunction {
        HalfFunction {
            n: self.n,
            values: self.values.iter().map(|v| v + c).collect(),
        }
    }
}

/// The unique extension of `g : X^- -> R` to `X^*` with `g(u') = g(u)`.
#[derive(Debug, Clone, Copy)]
pub struct XStarExtension<'a> {
    g: &'a HalfFunction,
}

impl XStarExtension<'_> {
    pub fn eval(&self, u: &PairLabeling) -> Result<Rational> {
        check_len(self.g.n, u.n())?;
        match u.classify() {
            DomainClass::Outside => Err(Error::OutsideXStar(u.to_string())),
            DomainClass::Xplus => self.g.eval_pair(&u.mate_flip()),
            _ => self.g.eval_pair(u),
        }
    }
}

pub fn extend_to_xstar(g: &HalfFunction) -> XStarExtension<'_> {
    g.extend_to_xstar()
}

/// A function on all of `X = {0,1}^{2n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFunction {
    n: usize,
    values: Vec<Rational>,
}

impl PairFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_len(1 << (2 * n), values.len())?;
        Ok(PairFunction { n, values })
    }

    pub fn zero(n: usize) -> Self {
        PairFunction {
            n,
            values: vec![Rational::zero(); 1 << (2 * n)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&PairLabeling) -> Rational) -> Self {
        PairFunction {
            n,
            values: PairLabeling::all(n).map(|u| f(&u)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eval(&self, u: &PairLabeling) -> Result<Rational> {
        check_len(self.n, u.n())?;
        Ok(self.values[u.index()].clone())
    }

    pub fn at_index(&self, index: usize) -> &Rational {
        &self.values[index]
    }

    /// `g(u') = g(u)` everywhere.
    pub fn is_symmetric(&self) -> bool {
        let s = PairSpace::new(self.n);
        (0..s.size() as u32).all(|u| self.values[u as usize] == self.values[s.prime(u) as usize])
    }

    /// Submodularity via the local exchange inequalities
    /// `g(u) + g(u v e^i v e^j) <= g(u v e^i) + g(u v e^j)`.
    pub fn is_submodular(&self) -> bool {
        self.first_local_violation().is_none()
    }

    pub fn first_local_violation(&self) -> Option<(PairLabeling, usize, usize)> {
        let s = PairSpace::new(self.n);
        let m = 2 * self.n;
        for u in 0..s.size() as u32 {
            for i in 0..m {
                if u & s.bit(i) != 0 {
                    continue;
                }
                for j in i + 1..m {
                    if u & s.bit(j) != 0 {
                        continue;
                    }
                    let (bi, bj) = (s.bit(i), s.bit(j));
                    let v = |w: u32| &self.values[w as usize];
                    if v(u) + v(u | bi | bj) > v(u | bi) + v(u | bj) {
                        return Some((s.to_labeling(u), i, j));
                    }
                }
            }
        }
        None
    }

    /// Tightness `g(x, 1 - x) = f(x)` for every binary `x`.
    pub fn is_relaxation_of(&self, f: &PbfTable) -> bool {
        f.n() == self.n
            && BinaryLabeling::all(self.n).all(|x| {
                let u = encode(&HalfLabeling::from_binary(&x));
                self.values[u.index()] == *f.at_index(x.index())
            })
    }

    /// Restriction to `X^-`.
    pub fn restrict_minus(&self) -> HalfFunction {
        HalfFunction::from_fn(self.n, |x| self.values[encode(x).index()].clone())
    }

    pub fn minimize(&self, bound: EnumBound) -> Result<Minimum<PairLabeling>> {
        brute_min(
            PairLabeling::all(self.n),
            1u128 << (2 * self.n),
            bound,
            |u| self.values[u.index()].clone(),
        )
    }
}
