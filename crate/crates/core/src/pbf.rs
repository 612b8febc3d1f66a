//! Pseudo-boolean functions over `{0,1}^n`: dense tables and the structured
//! unary + pairwise form.
//!
//! Labelings are enumerated lexicographically with node 1 most significant, so
//! the table index of `x` is `sum_i x_i * 2^(n-1-i)` and the bitstring `1010`
//! is index 10.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryLabeling(Vec<bool>);

impl BinaryLabeling {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryLabeling(bits)
    }

    pub fn zeros(n: usize) -> Self {
        BinaryLabeling(vec![false; n])
    }

    pub fn from_index(n: usize, index: usize) -> Self {
        BinaryLabeling((0..n).map(|i| index >> (n - 1 - i) & 1 == 1).collect())
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| acc << 1 | b as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn complement(&self) -> Self {
        BinaryLabeling(self.0.iter().map(|b| !b).collect())
    }

    /// All `2^n` labelings in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = BinaryLabeling> {
        (0..1usize << n).map(move |k| BinaryLabeling::from_index(n, k))
    }
}

impl fmt::Display for BinaryLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryLabeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    line: 0,
                    msg: format!("bad bit {c:?} in {s:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryLabeling)
    }
}

/// Dense value table of a pseudo-boolean function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbfTable {
    n: usize,
    values: Vec<Rational>,
}

impl PbfTable {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if values.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(PbfTable { n, values })
    }

    pub fn zero(n: usize) -> Self {
        PbfTable {
            n,
            values: vec![Rational::zero(); 1 << n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&BinaryLabeling) -> Rational) -> Self {
        let values = BinaryLabeling::all(n).map(|x| f(&x)).collect();
        PbfTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eval(&self, x: &BinaryLabeling) -> Result<Rational> {
        check_len(self.n, x.len())?;
        Ok(self.values[x.index()].clone())
    }

    pub fn at_index(&self, index: usize) -> &Rational {
        &self.values[index]
    }

    /// `f'(x) = f(x with x_i complemented)`.
    pub fn flip(&self, i: usize) -> Result<Self> {
        check_node(i, self.n)?;
        let mask = 1 << (self.n - 1 - i);
        Ok(PbfTable {
            n: self.n,
            values: (0..self.values.len())
                .map(|k| self.values[k ^ mask].clone())
                .collect(),
        })
    }

    /// Submodularity on the hypercube via the local exchange inequalities.
    pub fn is_submodular(&self) -> bool {
        let n = self.n;
        (0..1usize << n).all(|u| {
            (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    let (bi, bj) = (1 << (n - 1 - i), 1 << (n - 1 - j));
                    if u & bi != 0 || u & bj != 0 {
                        return true;
                    }
                    let lhs = &self.values[u] + &self.values[u | bi | bj];
                    let rhs = &self.values[u | bi] + &self.values[u | bj];
                    lhs <= rhs
                })
            })
        })
    }
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

pub(crate) fn check_node(node: usize, count: usize) -> Result<()> {
    if node >= count {
        return Err(Error::InvalidNode { node, count });
    }
    Ok(())
}

/// 2x2 table `t[a][b] = f_ij(a, b)`.
pub type EdgeTable = [[Rational; 2]; 2];

pub fn edge_table(f00: Rational, f01: Rational, f10: Rational, f11: Rational) -> EdgeTable {
    [[f00, f01], [f10, f11]]
}

/// `t(0,0) + t(1,1) <= t(0,1) + t(1,0)`.
pub fn edge_is_submodular(t: &EdgeTable) -> bool {
    &t[0][0] + &t[1][1] <= &t[0][1] + &t[1][0]
}

pub(crate) fn transpose(t: &EdgeTable) -> EdgeTable {
    [
        [t[0][0].clone(), t[1][0].clone()],
        [t[0][1].clone(), t[1][1].clone()],
    ]
}

/// `f(x) = sum_i f_i(x_i) + sum_{(i,j) in E} f_ij(x_i, x_j)` with `i < j` and no
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPbf {
    n: usize,
    unary: Vec<[Rational; 2]>,
    edges: BTreeMap<(usize, usize), EdgeTable>,
}

impl QuadraticPbf {
    pub fn new(n: usize) -> Self {
        QuadraticPbf {
            n,
            unary: vec![[Rational::zero(), Rational::zero()]; n],
            edges: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `(f0, f1)` to the unary term of node `i`.
    pub fn add_unary(&mut self, i: usize, f0: Rational, f1: Rational) -> Result<()> {
        check_node(i, self.n)?;
        let u = &mut self.unary[i];
        u[0] += f0;
        u[1] += f1;
        Ok(())
    }

    /// Inserts the pairwise term on `{i, j}`. Given `i > j` the table is read
    /// as `t[x_i][x_j]` and stored transposed.
    pub fn add_edge(&mut self, i: usize, j: usize, t: EdgeTable) -> Result<()> {
        check_node(i, self.n)?;
        check_node(j, self.n)?;
        if i == j {
            return Err(Error::SelfLoop(i, j));
        }
        let (key, t) = if i < j {
            ((i, j), t)
        } else {
            ((j, i), transpose(&t))
        };
        if self.edges.contains_key(&key) {
            return Err(Error::ParallelEdge(key.0, key.1));
        }
        self.edges.insert(key, t);
        Ok(())
    }

    pub fn unary(&self, i: usize) -> &[Rational; 2] {
        &self.unary[i]
    }

    pub fn edges(&self) -> impl Iterator<Item = (&(usize, usize), &EdgeTable)> {
        self.edges.iter()
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<EdgeTable> {
        if i < j {
            self.edges.get(&(i, j)).cloned()
        } else {
            self.edges.get(&(j, i)).map(transpose)
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn eval(&self, x: &BinaryLabeling) -> Result<Rational> {
        self.eval_bits(x.bits())
    }

    pub fn eval_bits(&self, x: &[bool]) -> Result<Rational> {
        check_len(self.n, x.len())?;
        let mut total = Rational::zero();
        for (i, u) in self.unary.iter().enumerate() {
            total += &u[x[i] as usize];
        }
        for (&(i, j), t) in &self.edges {
            total += &t[x[i] as usize][x[j] as usize];
        }
        Ok(total)
    }

    pub fn to_table(&self) -> PbfTable {
        PbfTable::from_fn(self.n, |x| self.eval(x).expect("dimension matches"))
    }

    /// Substitutes `x_i -> 1 - x_i`.
    pub fn flip(&self, i: usize) -> Result<Self> {
        check_node(i, self.n)?;
        let mut out = self.clone();
        out.unary[i].swap(0, 1);
        for (&(a, b), t) in out.edges.iter_mut() {
            if a == i {
                t.swap(0, 1);
            } else if b == i {
                t[0].swap(0, 1);
                t[1].swap(0, 1);
            }
        }
        Ok(out)
    }

    pub fn is_submodular(&self) -> bool {
        self.edges.values().all(edge_is_submodular)
    }
}
