//! Exact two-phase simplex over the rationals.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::num::Num;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs_at(&self, x: &[Rational]) -> Rational {
        self.terms.iter().map(|(j, a)| a * &x[*j]).sum()
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs_at(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

/// `maximize c.x` subject to linear constraints and optional variable bounds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearProgram {
    variables: Vec<Variable>,
    objective: Vec<(usize, Rational)>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_variable(
        &mut self,
        name: impl Into<String>,
        lower: Option<Rational>,
        upper: Option<Rational>,
    ) -> usize {
        self.variables.push(Variable {
            name: name.into(),
            lower,
            upper,
        });
        self.variables.len() - 1
    }

    pub fn add_free(&mut self, name: impl Into<String>) -> usize {
        self.add_variable(name, None, None)
    }

    fn check_terms(&self, terms: &[(usize, Rational)]) -> Result<()> {
        match terms.iter().find(|(j, _)| *j >= self.variables.len()) {
            Some(&(j, _)) => Err(Error::InvalidNode {
                node: j,
                count: self.variables.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn set_objective(&mut self, terms: Vec<(usize, Rational)>) -> Result<()> {
        self.check_terms(&terms)?;
        self.objective = terms;
        Ok(())
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: Vec<(usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<usize> {
        self.check_terms(&terms)?;
        self.constraints.push(Constraint {
            name: name.into(),
            terms,
            relation,
            rhs,
        });
        Ok(self.constraints.len() - 1)
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn objective(&self) -> &[(usize, Rational)] {
        &self.objective
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        self.objective.iter().map(|(j, c)| c * &x[*j]).sum()
    }

    /// Every bound and constraint holds exactly at `x`.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.variables.len()
            && self.variables.iter().zip(x).all(|(v, xi)| {
                v.lower.as_ref().is_none_or(|l| xi >= l) && v.upper.as_ref().is_none_or(|u| xi <= u)
            })
            && self.constraints.iter().all(|c| c.holds_at(x))
    }

    /// Plain-text form: one line per variable, objective and constraint.
    pub fn to_text(&self) -> String {
        let term_list = |terms: &[(usize, Rational)]| {
            if terms.is_empty() {
                return "0".to_string();
            }
            terms
                .iter()
                .map(|(j, a)| format!("{a} {}", self.variables[*j].name))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let mut out = String::new();
        for v in &self.variables {
            let show = |b: &Option<Rational>| b.as_ref().map_or("free".to_string(), |r| r.to_string());
            out += &format!("var {} [{}, {}]\n", v.name, show(&v.lower), show(&v.upper));
        }
        out += &format!("max {}\n", term_list(&self.objective));
        for c in &self.constraints {
            out += &format!("{}: {} {} {}\n", c.name, term_list(&c.terms), c.relation, c.rhs);
        }
        out
    }

    pub fn solve(&self) -> LpResult {
        simplex_solve(self)
    }
}

/// Multipliers proving infeasibility: with `d = sum_r y_r a_r` and
/// `beta = sum_r y_r b_r`, every feasible `x` would satisfy `d.x <= beta`,
/// yet `d.x > beta` on the whole variable box. Signs: `y_r >= 0` on `<=`
/// rows, `y_r <= 0` on `>=` rows, free on equalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rational>,
}

impl FarkasCertificate {
    /// Rows with a nonzero multiplier.
    pub fn support(&self) -> Vec<usize> {
        (0..self.multipliers.len())
            .filter(|&r| !self.multipliers[r].is_zero())
            .collect()
    }

    pub fn verify(&self, lp: &LinearProgram) -> bool {
        if self.multipliers.len() != lp.constraints.len() {
            return false;
        }
        let mut d = vec![Rational::zero(); lp.variables.len()];
        let mut beta = Rational::zero();
        for (y, c) in self.multipliers.iter().zip(&lp.constraints) {
            let sign_ok = match c.relation {
                Relation::Le => !y.is_negative(),
                Relation::Ge => !y.is_positive(),
                Relation::Eq => true,
            };
            if !sign_ok {
                return false;
            }
            if y.is_zero() {
                continue;
            }
            for (j, a) in &c.terms {
                d[*j] += y * a;
            }
            beta += y * &c.rhs;
        }
        let mut box_min = Rational::zero();
        for (dj, v) in d.iter().zip(&lp.variables) {
            let bound = if dj.is_positive() {
                &v.lower
            } else if dj.is_negative() {
                &v.upper
            } else {
                continue;
            };
            match bound {
                Some(b) => box_min += dj * b,
                None => return false,
            }
        }
        box_min > beta
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Optimal {
        value: Rational,
        x: Vec<Rational>,
    },
    Infeasible(FarkasCertificate),
    /// A feasible point and a direction along which the objective grows
    /// without bound.
    Unbounded {
        x: Vec<Rational>,
        ray: Vec<Rational>,
    },
}

impl LpResult {
    pub fn status(&self) -> &'static str {
        match self {
            LpResult::Optimal { .. } => "optimal",
            LpResult::Infeasible(_) => "infeasible",
            LpResult::Unbounded { .. } => "unbounded",
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpResult::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn assignment(&self) -> Option<&[Rational]> {
        match self {
            LpResult::Optimal { x, .. } | LpResult::Unbounded { x, .. } => Some(x),
            LpResult::Infeasible(_) => None,
        }
    }

    /// Re-checks the result against `lp` exactly: feasibility and objective
    /// of an optimum, the certificate of infeasibility, or feasibility of the
    /// point and improvement along the ray.
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        match self {
            LpResult::Optimal { value, x } => lp.is_feasible(x) && lp.objective_at(x) == *value,
            LpResult::Infeasible(cert) => cert.verify(lp),
            LpResult::Unbounded { x, ray } => {
                let recession = lp.variables.iter().zip(ray).all(|(v, r)| {
                    (v.lower.is_none() || !r.is_negative()) && (v.upper.is_none() || !r.is_positive())
                }) && lp.constraints.iter().all(|c| {
                    let dir = c.lhs_at(ray);
                    match c.relation {
                        Relation::Le => !dir.is_positive(),
                        Relation::Eq => dir.is_zero(),
                        Relation::Ge => !dir.is_negative(),
                    }
                });
                lp.is_feasible(x) && recession && lp.objective_at(ray).is_positive()
            }
        }
    }
}

/// `x_j = offset + sum coeff * std_var`.
#[derive(Debug, Clone)]
struct Substitution {
    offset: Rational,
    parts: Vec<(usize, Rational)>,
}

/// Standard form `A z = b`, `z >= 0`, `b >= 0`, plus bookkeeping to map back.
struct StandardForm {
    rows: Vec<Vec<(usize, Rational)>>,
    rhs: Vec<Rational>,
    /// Column that starts basic in each row, and whether it is artificial.
    start: Vec<(usize, bool)>,
    /// Original constraint of each row (`None` for bound rows) and its sign.
    origin: Vec<(Option<usize>, bool)>,
    cols: usize,
    artificial_from: usize,
    subs: Vec<Substitution>,
}

/// Terms over standard columns, relation, right-hand side, originating row.
type RawRow = (Vec<(usize, Rational)>, Relation, Rational, Option<usize>);

fn standardize(lp: &LinearProgram) -> StandardForm {
    let mut subs = Vec::with_capacity(lp.variables.len());
    let mut cols = 0usize;
    // bound rows: (std column, capacity)
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for v in &lp.variables {
        let sub = match (&v.lower, &v.upper) {
            (Some(l), u) => {
                let k = cols;
                cols += 1;
                if let Some(u) = u {
                    bound_rows.push((k, u - l));
                }
                Substitution {
                    offset: l.clone(),
                    parts: vec![(k, Rational::from_integer(1.into()))],
                }
            }
            (None, Some(u)) => {
                let k = cols;
                cols += 1;
                Substitution {
                    offset: u.clone(),
                    parts: vec![(k, Rational::from_integer((-1).into()))],
                }
            }
            (None, None) => {
                let k = cols;
                cols += 2;
                Substitution {
                    offset: Rational::zero(),
                    parts: vec![
                        (k, Rational::from_integer(1.into())),
                        (k + 1, Rational::from_integer((-1).into())),
                    ],
                }
            }
        };
        subs.push(sub);
    }
    let structural = cols;

    let mut raw: Vec<RawRow> = Vec::new();
    for (r, c) in lp.constraints.iter().enumerate() {
        let mut dense: Vec<Rational> = vec![Rational::zero(); structural];
        let mut rhs = c.rhs.clone();
        for (j, a) in &c.terms {
            rhs -= a * &subs[*j].offset;
            for (k, coeff) in &subs[*j].parts {
                dense[*k] += a * coeff;
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .collect();
        raw.push((terms, c.relation, rhs, Some(r)));
    }
    for (k, cap) in bound_rows {
        raw.push((vec![(k, Rational::from_integer(1.into()))], Relation::Le, cap, None));
    }

    let mut rows = Vec::with_capacity(raw.len());
    let mut rhs_out = Vec::with_capacity(raw.len());
    let mut origin = Vec::with_capacity(raw.len());
    let mut relations = Vec::with_capacity(raw.len());
    for (terms, rel, rhs, o) in raw {
        let negate = rhs.is_negative();
        let (terms, rel, rhs) = if negate {
            let flipped = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
            (terms.into_iter().map(|(k, a)| (k, -a)).collect(), flipped, -rhs)
        } else {
            (terms, rel, rhs)
        };
        rows.push(terms);
        rhs_out.push(rhs);
        origin.push((o, negate));
        relations.push(rel);
    }
    // slack and surplus columns
    let one = Rational::from_integer(1.into());
    let mut start = vec![(0usize, false); rows.len()];
    let mut needs_artificial = Vec::new();
    for (r, rel) in relations.iter().enumerate() {
        match rel {
            Relation::Le => {
                rows[r].push((cols, one.clone()));
                start[r] = (cols, false);
                cols += 1;
            }
            Relation::Ge => {
                rows[r].push((cols, -one.clone()));
                cols += 1;
                needs_artificial.push(r);
            }
            Relation::Eq => needs_artificial.push(r),
        }
    }
    let artificial_from = cols;
    for r in needs_artificial {
        rows[r].push((cols, one.clone()));
        start[r] = (cols, true);
        cols += 1;
    }
    StandardForm {
        rows,
        rhs: rhs_out,
        start,
        origin,
        cols,
        artificial_from,
        subs,
    }
}

struct Tableau {
    a: Vec<Vec<Num>>,
    b: Vec<Num>,
    basis: Vec<usize>,
    /// Reduced costs `c_j - c_B B^-1 A_j` for a maximization.
    d: Vec<Num>,
    value: Num,
    /// Columns allowed to enter.
    allowed: Vec<bool>,
}

enum Phase {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn pivot(&mut self, r: usize, k: usize) {
        let p = self.a[r][k].clone();
        if !p.is_one() {
            for v in self.a[r].iter_mut().filter(|v| !v.is_zero()) {
                *v = &*v / &p;
            }
            self.b[r] = &self.b[r] / &p;
        }
        let nz: Vec<usize> = (0..self.a[r].len()).filter(|&j| !self.a[r][j].is_zero()).collect();
        let (pivot_row, pivot_rhs) = (self.a[r].clone(), self.b[r].clone());
        let eliminate = |row: &mut Vec<Num>, f: &Num| {
            for &j in &nz {
                row[j] = &row[j] - &(f * &pivot_row[j]);
            }
        };
        for i in 0..self.a.len() {
            if i == r || self.a[i][k].is_zero() {
                continue;
            }
            let f = self.a[i][k].clone();
            eliminate(&mut self.a[i], &f);
            self.b[i] = &self.b[i] - &(&f * &pivot_rhs);
        }
        if !self.d[k].is_zero() {
            let f = self.d[k].clone();
            eliminate(&mut self.d, &f);
            self.value = &self.value + &(&f * &pivot_rhs);
        }
        self.basis[r] = k;
    }

    /// Dantzig's rule with Bland's rule after a run of degenerate pivots.
    fn run(&mut self) -> Phase {
        let mut degenerate_run = 0usize;
        loop {
            let candidates = (0..self.d.len()).filter(|&j| self.allowed[j] && self.d[j].is_positive());
            let entering = if degenerate_run > 50 {
                candidates.min()
            } else {
                candidates.max_by(|&a, &b| self.d[a].cmp(&self.d[b]).then(b.cmp(&a)))
            };
            let Some(k) = entering else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Num)> = None;
            for r in 0..self.a.len() {
                if !self.a[r][k].is_positive() {
                    continue;
                }
                let ratio = &self.b[r] / &self.a[r][k];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, ratio)) = leave else {
                return Phase::Unbounded(k);
            };
            if ratio.is_zero() {
                degenerate_run += 1;
            } else {
                degenerate_run = 0;
            }
            self.pivot(r, k);
        }
    }

    fn set_objective(&mut self, c: &[Rational]) {
        self.d = c.iter().map(Num::from_rational).collect();
        self.value = Num::zero();
        for r in 0..self.a.len() {
            let cb = Num::from_rational(&c[self.basis[r]]);
            if cb.is_zero() {
                continue;
            }
            for (j, v) in self.a[r].iter().enumerate() {
                if !v.is_zero() {
                    self.d[j] = &self.d[j] - &(&cb * v);
                }
            }
            self.value = &self.value + &(&cb * &self.b[r]);
        }
    }

    fn point(&self, cols: usize) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); cols];
        for (r, &k) in self.basis.iter().enumerate() {
            z[k] = self.b[r].to_rational();
        }
        z
    }
}

fn map_back(sf: &StandardForm, z: &[Rational], with_offset: bool) -> Vec<Rational> {
    sf.subs
        .iter()
        .map(|s| {
            let base = if with_offset { s.offset.clone() } else { Rational::zero() };
            s.parts.iter().fold(base, |acc, (k, c)| acc + c * &z[*k])
        })
        .collect()
}

/// Solves `lp` exactly. The result always passes [`LpResult::verify`].
///
/// Programs with free variables, only `<=` rows and more rows than variables
/// are solved through their dual, whose tableau is much smaller.
pub fn simplex_solve(lp: &LinearProgram) -> LpResult {
    let free = lp.variables.iter().all(|v| v.lower.is_none() && v.upper.is_none());
    let le = lp.constraints.iter().all(|c| c.relation == Relation::Le);
    if free && le && !lp.variables.is_empty() && lp.constraints.len() > lp.variables.len() {
        solve_by_dual(lp)
    } else {
        solve_standard(lp).0
    }
}

/// `min b.y` subject to `A^T y = c`, `y >= 0`, posed as a maximization.
fn dual_program(lp: &LinearProgram) -> LinearProgram {
    let mut dual = LinearProgram::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); lp.variables.len()];
    let mut objective = Vec::new();
    for (i, c) in lp.constraints.iter().enumerate() {
        let y = dual.add_variable(format!("y{i}"), Some(Rational::zero()), None);
        for (j, a) in &c.terms {
            columns[*j].push((y, a.clone()));
        }
        if !c.rhs.is_zero() {
            objective.push((y, -c.rhs.clone()));
        }
    }
    let mut cost = vec![Rational::zero(); lp.variables.len()];
    for (j, c) in &lp.objective {
        cost[*j] += c;
    }
    for (j, (terms, c)) in columns.into_iter().zip(cost).enumerate() {
        dual.add_constraint(format!("x{j}"), terms, Relation::Eq, c)
            .expect("dual terms are in range");
    }
    dual.set_objective(objective).expect("dual terms are in range");
    dual
}

fn solve_by_dual(lp: &LinearProgram) -> LpResult {
    let result = match solve_standard(&dual_program(lp)) {
        (LpResult::Optimal { .. }, duals) => {
            let x: Vec<Rational> = duals.into_iter().map(|p| -p).collect();
            let value = lp.objective_at(&x);
            LpResult::Optimal { value, x }
        }
        (LpResult::Unbounded { ray, .. }, _) => LpResult::Infeasible(FarkasCertificate { multipliers: ray }),
        (LpResult::Infeasible(cert), _) => {
            let ray: Vec<Rational> = cert.multipliers.into_iter().map(|w| -w).collect();
            let mut feasibility = lp.clone();
            feasibility.objective.clear();
            match solve_by_dual(&feasibility) {
                LpResult::Optimal { x, .. } => LpResult::Unbounded { x, ray },
                other => other,
            }
        }
    };
    debug_assert!(result.verify(lp), "dual route must produce a verified result");
    result
}

/// The two-phase method on the standard form. On optimality also returns
/// the multiplier of every constraint.
fn solve_standard(lp: &LinearProgram) -> (LpResult, Vec<Rational>) {
    let sf = standardize(lp);
    let m = sf.rows.len();
    let mut a = vec![vec![Num::zero(); sf.cols]; m];
    for (r, row) in sf.rows.iter().enumerate() {
        for (k, v) in row {
            a[r][*k] = Num::from_rational(v);
        }
    }
    let mut t = Tableau {
        a,
        b: sf.rhs.iter().map(Num::from_rational).collect(),
        basis: sf.start.iter().map(|&(k, _)| k).collect(),
        d: Vec::new(),
        value: Num::zero(),
        allowed: vec![true; sf.cols],
    };

    // Phase 1: maximize -(sum of artificials).
    let mut c1 = vec![Rational::zero(); sf.cols];
    for v in c1.iter_mut().skip(sf.artificial_from) {
        *v = Rational::from_integer((-1).into());
    }
    t.set_objective(&c1);
    if let Phase::Unbounded(_) = t.run() {
        unreachable!("phase one is bounded by zero");
    }
    if t.value.is_negative() {
        // y = c_B B^-1 read from the reduced costs of each row's start column.
        let mut multipliers = vec![Rational::zero(); lp.constraints.len()];
        for (r, &(k, artificial)) in sf.start.iter().enumerate() {
            let y = if artificial {
                Rational::from_integer((-1).into()) - t.d[k].to_rational()
            } else {
                -t.d[k].to_rational()
            };
            if let (Some(orig), negated) = sf.origin[r] {
                multipliers[orig] = if negated { -y } else { y };
            }
        }
        // Optimality of phase one gives y.A >= 0 column-wise and y.b < 0.
        let cert = FarkasCertificate { multipliers };
        debug_assert!(cert.verify(lp), "certificate must verify");
        return (LpResult::Infeasible(cert), Vec::new());
    }

    // Drive artificials out of the basis; rows that cannot be are redundant.
    let mut r = 0;
    while r < t.a.len() {
        if t.basis[r] >= sf.artificial_from {
            match (0..sf.artificial_from).find(|&j| !t.a[r][j].is_zero()) {
                Some(k) => {
                    t.pivot(r, k);
                    r += 1;
                }
                None => {
                    t.a.remove(r);
                    t.b.remove(r);
                    t.basis.remove(r);
                }
            }
        } else {
            r += 1;
        }
    }
    for j in sf.artificial_from..sf.cols {
        t.allowed[j] = false;
    }

    // Phase 2.
    let mut c2 = vec![Rational::zero(); sf.cols];
    for (j, c) in &lp.objective {
        for (k, coeff) in &sf.subs[*j].parts {
            c2[*k] += c * coeff;
        }
    }
    t.set_objective(&c2);
    match t.run() {
        Phase::Optimal => {
            let x = map_back(&sf, &t.point(sf.cols), true);
            let value = lp.objective_at(&x);
            // d_k = -pi_r on the start column of row r, whatever its cost was
            let mut duals = vec![Rational::zero(); lp.constraints.len()];
            for (r, &(k, _)) in sf.start.iter().enumerate() {
                if let (Some(orig), negated) = sf.origin[r] {
                    let pi = &c2[k] - t.d[k].to_rational();
                    duals[orig] = if negated { -pi } else { pi };
                }
            }
            (LpResult::Optimal { value, x }, duals)
        }
        Phase::Unbounded(k) => {
            let x = map_back(&sf, &t.point(sf.cols), true);
            let mut dir = vec![Rational::zero(); sf.cols];
            dir[k] = Rational::from_integer(1.into());
            for (r, &bk) in t.basis.iter().enumerate() {
                dir[bk] = -t.a[r][k].to_rational();
            }
            let ray = map_back(&sf, &dir, false);
            (LpResult::Unbounded { x, ray }, Vec::new())
        }
    }
}
