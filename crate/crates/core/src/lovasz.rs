//! Signed orderings and the Lovász extension on `L = [-1, 1]^n`.
//!
//! Functions on `{-1, 0, 1}^n` are stored with the same base-3 layout as
//! [`HalfFunction`], so the change of coordinates `x -> 2x - 1` is a relabeling
//! of the table and nothing else.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bisub::{HalfFunction, HalfLabeling};
use crate::error::{Error, Result};
use crate::pbf::check_len;
use crate::rational::{int, rat, Rational};

/// A point of `[-1, 1]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LPoint(Vec<Rational>);

impl LPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let one = Rational::one();
        if let Some(c) = coords.iter().find(|c| c.abs() > one) {
            return Err(Error::Precondition(format!("coordinate {c} outside [-1, 1]")));
        }
        Ok(LPoint(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        LPoint::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn origin(n: usize) -> Self {
        LPoint(vec![Rational::zero(); n])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The half-integral labeling at this point, if it lies in `{-1, 0, 1}^n`.
    pub fn to_half_labeling(&self) -> Option<HalfLabeling> {
        let t = self
            .0
            .iter()
            .map(|c| match c.to_integer().to_i64() {
                Some(v) if c.is_integer() && (-1..=1).contains(&v) => Some((v + 1) as u8),
                _ => None,
            })
            .collect::<Option<Vec<u8>>>()?;
        Some(HalfLabeling::from_doubled(t).expect("trits in range"))
    }
}

impl fmt::Display for LPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `x -> 2x - 1` applied to a half-integral labeling.
pub fn coordinate_change(x: &HalfLabeling) -> LPoint {
    LPoint(x.doubled().iter().map(|&t| int(t as i64 - 1)).collect())
}

/// `x -> (x + 1) / 2`, mapping `[-1, 1]^n` back onto `[0, 1]^n`.
pub fn coordinate_change_inverse(coords: &[Rational]) -> Result<Vec<Rational>> {
    let p = LPoint::new(coords.to_vec())?;
    Ok(p.0.into_iter().map(|c| (c + int(1)) / int(2)).collect())
}

/// A permutation of the nodes together with a sign per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedOrdering {
    /// `order[k]` is the node placed at position `k`.
    order: Vec<usize>,
    /// Sign of each node (indexed by node, not by position).
    signs: Vec<i8>,
}

impl SignedOrdering {
    pub fn new(order: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        check_len(order.len(), signs.len())?;
        let mut seen = vec![false; order.len()];
        for &v in &order {
            if v >= order.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("{order:?} is not a permutation")));
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Precondition("signs must be +1 or -1".into()));
        }
        Ok(SignedOrdering { order, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedOrdering {
            order: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Whether `x` lies in the simplex `L_ω`.
    pub fn admits(&self, x: &LPoint) -> bool {
        let c = x.coords();
        c.len() == self.n()
            && self.order.windows(2).all(|w| c[w[0]].abs() >= c[w[1]].abs())
            && (0..self.n()).all(|i| !(&c[i] * int(self.signs[i] as i64)).is_negative())
    }

    /// Every signed ordering of `n` nodes.
    pub fn all(n: usize) -> Vec<SignedOrdering> {
        let mut out = Vec::new();
        for order in permutations(n) {
            for mask in 0..1usize << n {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedOrdering {
                    order: order.clone(),
                    signs,
                });
            }
        }
        out
    }
}

impl fmt::Display for SignedOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &v) in self.order.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let s = if self.signs[v] > 0 { '+' } else { '-' };
            write!(f, "{s}x{}", v + 1)?;
        }
        Ok(())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Stable sort by decreasing `|x_i|`; zero components get sign `+1`.
pub fn signed_ordering_of(x: &LPoint) -> SignedOrdering {
    let c = x.coords();
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&a, &b| c[b].abs().cmp(&c[a].abs()));
    let signs = c.iter().map(|v| if v.is_negative() { -1 } else { 1 }).collect();
    SignedOrdering { order, signs }
}

/// All signed orderings that may be selected at `x`.
pub fn admissible_orderings(x: &LPoint) -> Vec<SignedOrdering> {
    SignedOrdering::all(x.len())
        .into_iter()
        .filter(|w| w.admits(x))
        .collect()
}

/// `x^0 = 0, x^1, ..., x^n`: `x^k` carries the signs of the first `k` nodes.
pub fn chain_points(w: &SignedOrdering) -> Vec<LPoint> {
    chain_vertices(w)
        .into_iter()
        .map(|v| LPoint(v.iter().map(|&s| int(s as i64)).collect()))
        .collect()
}

fn chain_vertices(w: &SignedOrdering) -> Vec<Vec<i8>> {
    let mut v = vec![0i8; w.n()];
    let mut out = vec![v.clone()];
    for &node in &w.order {
        v[node] = w.signs[node];
        out.push(v.clone());
    }
    out
}

fn vertex_index(v: &[i8]) -> usize {
    v.iter().fold(0, |acc, &s| acc * 3 + (s + 1) as usize)
}

fn vertex_of_index(n: usize, mut index: usize) -> Vec<i8> {
    let mut v = vec![0i8; n];
    for slot in v.iter_mut().rev() {
        *slot = (index % 3) as i8 - 1;
        index /= 3;
    }
    v
}

/// A function on `{-1, 0, 1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedFunction {
    n: usize,
    values: Vec<Rational>,
}

impl SignedFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_len(3usize.pow(n as u32), values.len())?;
        Ok(SignedFunction { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&[i8]) -> Rational) -> Self {
        SignedFunction {
            n,
            values: (0..3usize.pow(n as u32))
                .map(|k| f(&vertex_of_index(n, k)))
                .collect(),
        }
    }

    /// Transports `g` on `{0, 1/2, 1}^n` through `x -> 2x - 1`.
    pub fn from_half(g: &HalfFunction) -> Self {
        SignedFunction {
            n: g.n(),
            values: g.values().to_vec(),
        }
    }

    pub fn to_half(&self) -> HalfFunction {
        HalfFunction::new(self.n, self.values.clone()).expect("same table length")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, v: &[i8]) -> Result<Rational> {
        check_len(self.n, v.len())?;
        if v.iter().any(|s| !(-1..=1).contains(s)) {
            return Err(Error::Precondition(format!("{v:?} is not in {{-1,0,1}}^n")));
        }
        Ok(self.values[vertex_index(v)].clone())
    }

    /// `h(0)`, the affine offset of the extension.
    pub fn offset(&self) -> &Rational {
        &self.values[(3usize.pow(self.n as u32) - 1) / 2]
    }

    fn at(&self, v: &[i8]) -> &Rational {
        &self.values[vertex_index(v)]
    }
}

fn extension_along(h: &SignedFunction, x: &LPoint, w: &SignedOrdering) -> Rational {
    let c = x.coords();
    let h0 = h.offset();
    let chain = chain_vertices(w);
    let mut total = h0.clone();
    for k in 0..w.n() {
        let here = c[w.order[k]].abs();
        let next = match w.order.get(k + 1) {
            Some(&j) => c[j].abs(),
            None => Rational::zero(),
        };
        let lambda = here - next;
        if !lambda.is_zero() {
            total += lambda * (h.at(&chain[k + 1]) - h0);
        }
    }
    total
}

/// `ĥ(x) = h(0) + sum_k λ_k (h(x^k) - h(0))` under [`signed_ordering_of`].
pub fn lovasz_eval(h: &SignedFunction, x: &LPoint) -> Result<Rational> {
    check_len(h.n, x.len())?;
    Ok(extension_along(h, x, &signed_ordering_of(x)))
}

/// Same as [`lovasz_eval`] with a caller-chosen ordering, which must admit `x`.
pub fn lovasz_eval_with(h: &SignedFunction, x: &LPoint, w: &SignedOrdering) -> Result<Rational> {
    check_len(h.n, x.len())?;
    if !w.admits(x) {
        return Err(Error::Precondition(format!("ordering {w} does not admit {x}")));
    }
    Ok(extension_along(h, x, w))
}

/// A uniformly random point of `L` with coordinates `k / denominator`.
pub fn random_lpoint(n: usize, denominator: i64, rng: &mut impl Rng) -> LPoint {
    LPoint(
        (0..n)
            .map(|_| rat(rng.gen_range(-denominator..=denominator), denominator))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearityWitness {
    pub point: LPoint,
    pub extension: Rational,
    pub interpolated: Rational,
}

fn convex_combination(chain: &[LPoint], weights: &[Rational]) -> LPoint {
    let n = chain[0].len();
    let mut c = vec![Rational::zero(); n];
    for (p, mu) in chain.iter().zip(weights) {
        for (ci, pi) in c.iter_mut().zip(p.coords()) {
            *ci += mu * pi;
        }
    }
    LPoint(c)
}

/// Compares `ĥ` with linear interpolation of its vertex values inside `L_ω`:
/// at the vertices, the barycenter and `samples` random convex combinations.
pub fn simplex_linearity_check(
    h: &SignedFunction,
    w: &SignedOrdering,
    samples: usize,
    seed: u64,
) -> Result<Option<LinearityWitness>> {
    check_len(h.n, w.n())?;
    let chain = chain_points(w);
    let vertex_values: Vec<Rational> = chain_vertices(w).iter().map(|v| h.at(v).clone()).collect();
    let m = chain.len();
    let mut weight_sets: Vec<Vec<Rational>> = (0..m)
        .map(|k| (0..m).map(|j| int((j == k) as i64)).collect())
        .collect();
    weight_sets.push(vec![rat(1, m as i64); m]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let raw: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=16)).collect();
        let total: i64 = raw.iter().sum();
        weight_sets.push(raw.iter().map(|&r| rat(r, total)).collect());
    }
    for mu in weight_sets {
        let point = convex_combination(&chain, &mu);
        let extension = lovasz_eval(h, &point)?;
        let interpolated: Rational = mu.iter().zip(&vertex_values).map(|(a, b)| a * b).sum();
        if extension != interpolated {
            return Ok(Some(LinearityWitness {
                point,
                extension,
                interpolated,
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeMode {
    /// Every pair of points with coordinates in `{-1, -1 + 1/step, ..., 1}`.
    Grid { step: u32 },
    /// Random pairs with coordinates `k / denominator`.
    Random {
        pairs: usize,
        denominator: u32,
        seed: u64,
    },
}

impl Default for ProbeMode {
    fn default() -> Self {
        ProbeMode::Grid { step: 4 }
    }
}

/// A pair with `ĥ((x + y) / 2) > (ĥ(x) + ĥ(y)) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityWitness {
    pub x: LPoint,
    pub y: LPoint,
    pub midpoint_value: Rational,
    pub average: Rational,
}

/// Midpoint convexity of `ĥ`. The first violation in enumeration order is
/// returned.
pub fn convexity_probe(h: &SignedFunction, mode: ProbeMode) -> Result<Option<ConvexityWitness>> {
    match mode {
        ProbeMode::Grid { step } => grid_probe(h, step),
        ProbeMode::Random {
            pairs,
            denominator,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..pairs {
                let x = random_lpoint(h.n, denominator as i64, &mut rng);
                let y = random_lpoint(h.n, denominator as i64, &mut rng);
                if let Some(wit) = midpoint_violation(h, x, y)? {
                    return Ok(Some(wit));
                }
            }
            Ok(None)
        }
    }
}

fn midpoint_violation(h: &SignedFunction, x: LPoint, y: LPoint) -> Result<Option<ConvexityWitness>> {
    let mid = LPoint(
        x.coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| (a + b) / int(2))
            .collect(),
    );
    let midpoint_value = lovasz_eval(h, &mid)?;
    let average = (lovasz_eval(h, &x)? + lovasz_eval(h, &y)?) / int(2);
    Ok((midpoint_value > average).then_some(ConvexityWitness {
        x,
        y,
        midpoint_value,
        average,
    }))
}

fn grid_probe(h: &SignedFunction, step: u32) -> Result<Option<ConvexityWitness>> {
    if step == 0 {
        return Err(Error::Precondition("grid step must be positive".into()));
    }
    let n = h.n;
    let m = step as i64;
    // Values on the grid of spacing 1/(2m), which holds every midpoint.
    let fine_side = (4 * m + 1) as usize;
    let fine_size = fine_side
        .checked_pow(n as u32)
        .filter(|&s| s <= 1 << 22)
        .ok_or_else(|| Error::Precondition(format!("grid 1/{step} too large at n = {n}")))?;
    let fine_point = |mut k: usize| {
        let mut c = vec![Rational::zero(); n];
        for slot in c.iter_mut().rev() {
            *slot = rat((k % fine_side) as i64 - 2 * m, 2 * m);
            k /= fine_side;
        }
        LPoint(c)
    };
    let values: Vec<Rational> = (0..fine_size)
        .map(|k| extension_along(h, &fine_point(k), &signed_ordering_of(&fine_point(k))))
        .collect();

    let coarse_side = (2 * m + 1) as usize;
    let coarse_size = coarse_side.pow(n as u32);
    // coarse point -> fine index (doubled offsets)
    let coarse_digits = |mut k: usize| {
        let mut d = vec![0usize; n];
        for slot in d.iter_mut().rev() {
            *slot = k % coarse_side;
            k /= coarse_side;
        }
        d
    };
    let digits: Vec<Vec<usize>> = (0..coarse_size).map(coarse_digits).collect();
    let fine_of = |d: &[usize]| d.iter().fold(0, |acc, &t| acc * fine_side + t);
    let coarse_fine: Vec<usize> = digits
        .iter()
        .map(|d| fine_of(&d.iter().map(|&t| 2 * t).collect::<Vec<_>>()))
        .collect();
    let mid_index = |a: &[usize], b: &[usize]| {
        a.iter().zip(b).fold(0, |acc, (&s, &t)| acc * fine_side + s + t)
    };

    let scaled = scaled_to_i128(&values);
    let violates = |i: usize, j: usize| {
        let (a, b, mid) = (coarse_fine[i], coarse_fine[j], mid_index(&digits[i], &digits[j]));
        match &scaled {
            Some(iv) => 2 * iv[mid] > iv[a] + iv[b],
            None => int(2) * &values[mid] > &values[a] + &values[b],
        }
    };
    // Pairs of {-1, 0, 1} points first: they are the natural witnesses.
    let vertices: Vec<usize> = (0..coarse_size)
        .filter(|&k| digits[k].iter().all(|&t| t as i64 % m == 0))
        .collect();
    let first_pair = |pool: &[usize]| {
        pool.iter().enumerate().find_map(|(a, &i)| {
            pool[a + 1..].iter().find(|&&j| violates(i, j)).map(|&j| (i, j))
        })
    };
    let all: Vec<usize> = (0..coarse_size).collect();
    let found = first_pair(&vertices).or_else(|| first_pair(&all));
    Ok(found.map(|(i, j)| {
        let m_idx = mid_index(&digits[i], &digits[j]);
        ConvexityWitness {
            x: fine_point(coarse_fine[i]),
            y: fine_point(coarse_fine[j]),
            midpoint_value: values[m_idx].clone(),
            average: (&values[coarse_fine[i]] + &values[coarse_fine[j]]) / int(2),
        }
    }))
}

/// Scales every value by the common denominator; `None` if that overflows a
/// comfortable share of `i128`.
fn scaled_to_i128(values: &[Rational]) -> Option<Vec<i128>> {
    let den = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let limit = BigInt::from(i128::MAX / 8);
    values
        .iter()
        .map(|v| {
            let s = v.numer() * (&den / v.denom());
            if s.abs() > limit {
                None
            } else {
                s.to_i128()
            }
        })
        .collect()
}

/// Checks `ĥ(γx) = γ ĥ(x)` at `samples` random points and scales, plus
/// `γ = 0`, `γ = 1` and `γ = 1/3`. Requires `h(0) = 0`.
pub fn homogeneity_check(
    h: &SignedFunction,
    samples: usize,
    seed: u64,
) -> Result<Option<(LPoint, Rational)>> {
    if !h.offset().is_zero() {
        return Err(Error::Precondition(format!("h(0) = {} is not 0", h.offset())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples.max(1) {
        let x = random_lpoint(h.n, 12, &mut rng);
        let gamma = match k {
            0 => int(0),
            1 => int(1),
            2 => rat(1, 3),
            _ => rat(rng.gen_range(0..=24), 24),
        };
        let scaled = LPoint(x.coords().iter().map(|c| c * &gamma).collect());
        if lovasz_eval(h, &scaled)? != &gamma * lovasz_eval(h, &x)? {
            return Ok(Some((x, gamma)));
        }
    }
    Ok(None)
}

/// One step of the recursive restriction: node `node` is removed and replaced
/// by a partner node, its negation, or a constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Restriction {
    Tie { node: usize, partner: usize },
    AntiTie { node: usize, partner: usize },
    Fix { node: usize, value: i8 },
}

impl Restriction {
    pub fn node(&self) -> usize {
        match *self {
            Restriction::Tie { node, .. }
            | Restriction::AntiTie { node, .. }
            | Restriction::Fix { node, .. } => node,
        }
    }

    /// Every restriction of a function of `n >= 2` variables, in a fixed order.
    pub fn all(n: usize) -> Vec<Restriction> {
        let mut out = Vec::new();
        for node in 0..n {
            for partner in (0..n).filter(|&p| p != node) {
                out.push(Restriction::Tie { node, partner });
                out.push(Restriction::AntiTie { node, partner });
            }
            for value in [-1, 0, 1] {
                out.push(Restriction::Fix { node, value });
            }
        }
        out
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Restriction::Tie { node, partner } => write!(f, "x{}=x{}", node + 1, partner + 1),
            Restriction::AntiTie { node, partner } => write!(f, "x{}=-x{}", node + 1, partner + 1),
            Restriction::Fix { node, value } => write!(f, "x{}={value}", node + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictKind {
    Tie,
    AntiTie,
    Fix(i8),
}

/// Restriction on the last variable, tied to the second-to-last one.
pub fn restrict(h: &SignedFunction, kind: RestrictKind) -> Result<SignedFunction> {
    if h.n < 2 {
        return Err(Error::Precondition("restriction needs n >= 2".into()));
    }
    let (node, partner) = (h.n - 1, h.n - 2);
    restrict_at(
        h,
        match kind {
            RestrictKind::Tie => Restriction::Tie { node, partner },
            RestrictKind::AntiTie => Restriction::AntiTie { node, partner },
            RestrictKind::Fix(value) => Restriction::Fix { node, value },
        },
    )
}

/// The function of the remaining `n - 1` variables, in their original order.
pub fn restrict_at(h: &SignedFunction, r: Restriction) -> Result<SignedFunction> {
    let n = h.n;
    if n < 2 {
        return Err(Error::Precondition("restriction needs n >= 2".into()));
    }
    let node = r.node();
    if node >= n {
        return Err(Error::InvalidNode { node, count: n });
    }
    match r {
        Restriction::Tie { partner, .. } | Restriction::AntiTie { partner, .. }
            if partner >= n || partner == node =>
        {
            return Err(Error::InvalidNode {
                node: partner,
                count: n,
            })
        }
        Restriction::Fix { value, .. } if !(-1..=1).contains(&value) => {
            return Err(Error::Precondition(format!("fixed value {value} not in {{-1,0,1}}")))
        }
        _ => {}
    }
    Ok(SignedFunction::from_fn(n - 1, |rest| {
        let mut full = Vec::with_capacity(n);
        full.extend_from_slice(&rest[..node]);
        full.push(0);
        full.extend_from_slice(&rest[node..]);
        full[node] = match r {
            Restriction::Tie { partner, .. } => full[partner],
            Restriction::AntiTie { partner, .. } => -full[partner],
            Restriction::Fix { value, .. } => value,
        };
        h.at(&full).clone()
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityFailure {
    /// Restrictions applied from the top-level function down to the failure.
    pub path: Vec<Restriction>,
    pub reason: String,
}

impl fmt::Display for IntegralityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            f.write_str("top level")?;
        }
        for (k, r) in self.path.iter().enumerate() {
            if k > 0 {
                f.write_str(" / ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ": {}", self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    /// Distinct functions examined across all levels.
    pub functions_checked: usize,
    pub failure: Option<IntegralityFailure>,
}

impl IntegralityReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs the linearity check on every simplex and the grid convexity probe on
/// `ĥ`, then recurses through every restriction. `depth` bounds the number of
/// restriction levels; `None` goes all the way down to one variable.
pub fn total_integrality_verify(h: &SignedFunction, depth: Option<usize>) -> Result<IntegralityReport> {
    let mut seen = HashSet::new();
    let mut path = Vec::new();
    let failure = verify_level(h, depth, &mut path, &mut seen)?;
    Ok(IntegralityReport {
        functions_checked: seen.len(),
        failure,
    })
}

fn verify_level(
    h: &SignedFunction,
    depth: Option<usize>,
    path: &mut Vec<Restriction>,
    seen: &mut HashSet<SignedFunction>,
) -> Result<Option<IntegralityFailure>> {
    if !seen.insert(h.clone()) {
        return Ok(None);
    }
    let fail = |path: &[Restriction], reason: String| {
        Ok(Some(IntegralityFailure {
            path: path.to_vec(),
            reason,
        }))
    };
    for w in SignedOrdering::all(h.n) {
        if let Some(wit) = simplex_linearity_check(h, &w, 0, 0)? {
            return fail(path, format!("not linear on simplex {w} at {}", wit.point));
        }
    }
    // The half grid already exposes every violation; finer grids only cost.
    let step = if h.n <= 3 { 4 } else { 1 };
    if let Some(wit) = convexity_probe(h, ProbeMode::Grid { step })? {
        return fail(
            path,
            format!(
                "not convex: midpoint of {} and {} has value {} above the average {}",
                wit.x, wit.y, wit.midpoint_value, wit.average
            ),
        );
    }
    if h.n < 2 || depth == Some(0) {
        return Ok(None);
    }
    for r in Restriction::all(h.n) {
        let sub = restrict_at(h, r)?;
        path.push(r);
        let found = verify_level(&sub, depth.map(|d| d - 1), path, seen)?;
        path.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
