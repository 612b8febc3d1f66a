#![allow(dead_code, clippy::needless_range_loop)]

use genroof::bisub::{HalfFunction, HalfLabeling, PairFunction, PairLabeling};
use genroof::card::{collapse, CardinalityFn};
use genroof::lp::{LinearProgram, Relation};
use genroof::pbf::{edge_table, PbfTable, QuadraticPbf};
use genroof::rational::{rat, Rational};
use genroof::roof::{build_roofdual, FlowNetwork, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `[-5, 5]` with denominator 1, 2 or 3.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let d = rng.gen_range(1..=3);
    rat(rng.gen_range(-5 * d..=5 * d), d)
}

pub fn small_int(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5), 1)
}

/// Random unaries and a random subset of edges, no parallel edges.
pub fn random_quadratic(n: usize, rng: &mut impl Rng) -> QuadraticPbf {
    let mut q = QuadraticPbf::new(n);
    for i in 0..n {
        q.add_unary(i, small_rational(rng), small_rational(rng)).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.7) {
                let t = edge_table(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
                q.add_edge(i, j, t).unwrap();
            }
        }
    }
    q
}

pub fn random_table(n: usize, rng: &mut impl Rng) -> PbfTable {
    PbfTable::from_fn(n, |_| small_rational(rng))
}

/// Submodular tables as sums of `-c * x_i x_j`, signed unaries and a constant.
pub fn random_submodular_table(n: usize, rng: &mut impl Rng) -> PbfTable {
    let unary: Vec<Rational> = (0..n).map(|_| small_int(rng)).collect();
    let mut pair = vec![vec![rat(0, 1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            pair[i][j] = rat(rng.gen_range(0..=4), 1);
        }
    }
    let c = small_int(rng);
    PbfTable::from_fn(n, |x| {
        let mut v = c.clone();
        for i in 0..n {
            if x.get(i) {
                v += &unary[i];
                for j in i + 1..n {
                    if x.get(j) {
                        v -= &pair[i][j];
                    }
                }
            }
        }
        v
    })
}

pub fn random_half_function(n: usize, rng: &mut impl Rng) -> HalfFunction {
    HalfFunction::from_fn(n, |_| small_int(rng))
}

/// Bisubmodular by construction: the roof dual of a random quadratic, on `X^-`.
pub fn random_bisubmodular(n: usize, rng: &mut impl Rng) -> HalfFunction {
    build_roofdual(&random_quadratic(n, rng)).to_pair_function().restrict_minus()
}

/// Integer-valued `G` with values in `[-4, 4]`; about a third of the draws
/// are concave-ish sums that tend to satisfy the conditions.
pub fn random_cardinality(n: usize, rng: &mut impl Rng) -> CardinalityFn {
    if rng.gen_bool(0.35) {
        let (p, q, r) = (rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(-2..=2));
        let s = rng.gen_range(0..=1);
        CardinalityFn::from_fn(n, |a, b| {
            let (a, b) = (a as i64, b as i64);
            rat(p * a + q * b - a * a - b * b - s * a * b + r, 1)
        })
    } else {
        CardinalityFn::from_fn(n, |_, _| rat(rng.gen_range(-4..=4), 1))
    }
}

/// Brute-force submodularity over all pairs `(u ∧ v, u ∨ v)`.
pub fn all_pairs_submodular(g: &PairFunction) -> bool {
    let n = g.n();
    let size = 1usize << (2 * n);
    (0..size).all(|a| {
        (0..size).all(|b| g.at_index(a & b) + g.at_index(a | b) <= g.at_index(a) + g.at_index(b))
    })
}

/// Every pair of points of `K^{1/2}`, using the trit tables directly.
pub fn half_pairs_bisubmodular(g: &HalfFunction) -> bool {
    use genroof::bisub::{half_join, half_meet};
    let pts: Vec<HalfLabeling> = HalfLabeling::all(g.n()).collect();
    pts.iter().all(|x| {
        pts.iter().all(|y| {
            let m = half_meet(x, y).unwrap();
            let j = half_join(x, y).unwrap();
            g.eval(&m).unwrap() + g.eval(&j).unwrap() <= g.eval(x).unwrap() + g.eval(y).unwrap()
        })
    })
}

pub fn labeling(x: &str, y: &str) -> PairLabeling {
    let bits = |s: &str| s.chars().map(|c| c == '1').collect::<Vec<_>>();
    PairLabeling::from_halves(&bits(x), &bits(y)).unwrap()
}

/// Every bound and constraint as rows `a.x <= b`.
fn inequality_rows(lp: &LinearProgram) -> Vec<(Vec<Rational>, Rational)> {
    let m = lp.variables().len();
    let mut rows = Vec::new();
    let unit = |j: usize, s: i64| (0..m).map(|k| rat((k == j) as i64 * s, 1)).collect::<Vec<_>>();
    for (j, v) in lp.variables().iter().enumerate() {
        if let Some(u) = &v.upper {
            rows.push((unit(j, 1), u.clone()));
        }
        if let Some(l) = &v.lower {
            rows.push((unit(j, -1), -l.clone()));
        }
    }
    for c in lp.constraints() {
        let mut a = vec![rat(0, 1); m];
        for (j, coef) in &c.terms {
            a[*j] += coef;
        }
        let neg: Vec<Rational> = a.iter().map(|x| -x.clone()).collect();
        match c.relation {
            Relation::Le => rows.push((a, c.rhs.clone())),
            Relation::Ge => rows.push((neg, -c.rhs.clone())),
            Relation::Eq => {
                rows.push((a, c.rhs.clone()));
                rows.push((neg, -c.rhs.clone()));
            }
        }
    }
    rows
}

/// Solves a square system exactly, `None` when singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let m = b.len();
    for col in 0..m {
        let p = (col..m).find(|&r| a[r][col] != rat(0, 1))?;
        a.swap(col, p);
        b.swap(col, p);
        for r in 0..m {
            if r != col && a[r][col] != rat(0, 1) {
                let f = &a[r][col] / &a[col][col];
                for k in col..m {
                    let d = &f * &a[col][k];
                    a[r][k] -= d;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    Some((0..m).map(|r| &b[r] / &a[r][r]).collect())
}

/// Optimum of a bounded program by enumerating every basic solution:
/// `None` when no basic solution is feasible.
pub fn vertex_optimum(lp: &LinearProgram) -> Option<Rational> {
    let m = lp.variables().len();
    let rows = inequality_rows(lp);
    let mut best: Option<Rational> = None;
    let mut pick: Vec<usize> = (0..m).collect();
    if rows.len() < m {
        return None;
    }
    loop {
        let a = pick.iter().map(|&r| rows[r].0.clone()).collect();
        let b = pick.iter().map(|&r| rows[r].1.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if lp.is_feasible(&x) {
                let v = lp.objective_at(&x);
                if best.as_ref().is_none_or(|b| &v > b) {
                    best = Some(v);
                }
            }
        }
        // next combination
        let mut k = m;
        loop {
            if k == 0 {
                return best;
            }
            k -= 1;
            if pick[k] < rows.len() - m + k {
                break;
            }
        }
        pick[k] += 1;
        for t in k + 1..m {
            pick[t] = pick[t - 1] + 1;
        }
    }
}

/// A program on `m` variables boxed in `[-5, 5]` with mixed rows.
pub fn random_lp(m: usize, rng: &mut impl Rng) -> LinearProgram {
    let mut lp = LinearProgram::new();
    for j in 0..m {
        lp.add_variable(format!("x{j}"), Some(rat(-5, 1)), Some(rat(5, 1)));
    }
    let rows = rng.gen_range(1..=m + 2);
    for r in 0..rows {
        let mut terms = Vec::new();
        for j in 0..m {
            if rng.gen_bool(0.7) {
                terms.push((j, small_int(rng)));
            }
        }
        let relation = match rng.gen_range(0..6) {
            0 => Relation::Eq,
            1 | 2 => Relation::Ge,
            _ => Relation::Le,
        };
        lp.add_constraint(format!("r{r}"), terms, relation, small_rational(rng)).unwrap();
    }
    lp.set_objective((0..m).map(|j| (j, small_int(rng))).collect()).unwrap();
    lp
}

/// Up to `max_nodes` inner nodes and random arcs, terminals included.
pub fn random_network(max_nodes: usize, rng: &mut impl Rng) -> FlowNetwork {
    let k = rng.gen_range(1..=max_nodes);
    let mut net = FlowNetwork::new(k);
    let vertex = |rng: &mut dyn rand::RngCore, k: usize| match rng.gen_range(0..k + 2) {
        v if v == k => Vertex::Source,
        v if v == k + 1 => Vertex::Sink,
        v => Vertex::Node(v),
    };
    for _ in 0..rng.gen_range(0..3 * k + 4) {
        let (a, b) = (vertex(rng, k), vertex(rng, k));
        net.add_arc(a, b, rat(rng.gen_range(0..=12), rng.gen_range(1..=3))).unwrap();
    }
    net
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Bisubmodular and cardinality-dependent: a random bisubmodular function
/// averaged over every node permutation.
pub fn random_card_bisubmodular(n: usize, rng: &mut impl Rng) -> CardinalityFn {
    let g = random_bisubmodular(n, rng);
    let perms = permutations(n);
    let avg = HalfFunction::from_fn(n, |x| {
        let total: Rational = perms
            .iter()
            .map(|p| {
                let d = p.iter().map(|&i| x.doubled()[i]).collect();
                g.eval(&HalfLabeling::from_doubled(d).unwrap()).unwrap()
            })
            .sum();
        total / rat(perms.len() as i64, 1)
    });
    collapse(&avg).expect("averaging removes node order")
}

/// A mix of arbitrary, bisubmodular and slightly perturbed bisubmodular `G`.
pub fn card_suite_member(n: usize, k: u64, rng: &mut impl Rng) -> CardinalityFn {
    match k % 3 {
        0 => random_cardinality(n, rng),
        1 => random_card_bisubmodular(n, rng),
        _ => {
            let mut g = random_card_bisubmodular(n, rng);
            let cells: Vec<(usize, usize)> = CardinalityFn::domain(n).collect();
            let (a, b) = cells[rng.gen_range(0..cells.len())];
            let v = g.get(a, b).unwrap() + rat(rng.gen_range(-2..=2), 2);
            g.set(a, b, v).unwrap();
            g
        }
    }
}
