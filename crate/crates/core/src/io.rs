//! Plain-text function files.
//!
//! Every file starts with a header `<kind> <n>` followed by one row per line.
//! Blank lines and lines starting with `#` are ignored.
//!
//! ```text
//! pbf 2          # <bitstring> <value>, all 2^n rows
//! 00 0
//! 01 1
//! 10 1
//! 11 0
//! ```
//!
//! `qpbf n` takes `u <i> <f0> <f1>` and `e <i> <j> <f00> <f01> <f10> <f11>`
//! with 1-based nodes and `i < j`. `hif n` takes `<tritstring> <value>` over
//! `0`, `h`, `1`. `card n` takes `<a> <b> <value>` for every `a + b <= n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;

use crate::bisub::{HalfFunction, HalfLabeling};
use crate::card::CardinalityFn;
use crate::error::{Error, Result};
use crate::pbf::{edge_table, BinaryLabeling, PbfTable, QuadraticPbf};
use crate::rational::{parse_rational, Rational};

/// Largest `n` accepted for table formats.
const MAX_TABLE_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionFile {
    Pbf(PbfTable),
    Qpbf(QuadraticPbf),
    Hif(HalfFunction),
    Card(CardinalityFn),
}

impl FunctionFile {
    pub fn kind(&self) -> &'static str {
        match self {
            FunctionFile::Pbf(_) => "pbf",
            FunctionFile::Qpbf(_) => "qpbf",
            FunctionFile::Hif(_) => "hif",
            FunctionFile::Card(_) => "card",
        }
    }

    pub fn write(&self) -> String {
        match self {
            FunctionFile::Pbf(f) => write_pbf(f),
            FunctionFile::Qpbf(q) => write_qpbf(q),
            FunctionFile::Hif(g) => write_hif(g),
            FunctionFile::Card(g) => write_card(g),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Numbered non-comment lines split on whitespace.
fn rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (k + 1, line.split_whitespace().collect()))
    })
}

fn header<'a>(it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<(&'a str, usize)> {
    let (line, fields) = it.next().ok_or_else(|| parse_err(1, "missing header"))?;
    match fields.as_slice() {
        [kind, n] => {
            let n = n
                .parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad variable count {n:?}")))?;
            Ok((kind, n))
        }
        _ => Err(parse_err(line, "header must be `<kind> <n>`")),
    }
}

fn value(line: usize, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| parse_err(line, format!("not a rational: {s:?}")))
}

fn node(line: usize, s: &str, n: usize) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
        _ => Err(parse_err(line, format!("node {s:?} is not in 1..={n}"))),
    }
}

fn arity(line: usize, fields: &[&str], want: usize, shape: &str) -> Result<()> {
    if fields.len() == want {
        Ok(())
    } else {
        Err(parse_err(line, format!("expected `{shape}`")))
    }
}

fn check_size(line: usize, n: usize) -> Result<()> {
    if n > MAX_TABLE_N {
        Err(parse_err(line, format!("n = {n} exceeds {MAX_TABLE_N}")))
    } else {
        Ok(())
    }
}

/// Fills a dense table from keyed rows, rejecting repeats and gaps.
fn fill<K: Ord + Clone>(
    size: usize,
    rows: Vec<(usize, K, usize, Rational)>,
    missing: impl Fn(usize) -> String,
) -> Result<Vec<Rational>> {
    let mut table: Vec<Option<Rational>> = vec![None; size];
    let mut seen = BTreeSet::new();
    for (line, key, slot, v) in rows {
        if !seen.insert(key) || table[slot].is_some() {
            return Err(parse_err(line, "duplicate row"));
        }
        table[slot] = Some(v);
    }
    match table.iter().position(Option::is_none) {
        Some(k) => Err(Error::Coverage(missing(k))),
        None => Ok(table.into_iter().map(Option::unwrap).collect()),
    }
}

/// Parses any of the four formats, dispatching on the header.
pub fn parse(text: &str) -> Result<FunctionFile> {
    let mut it = rows(text);
    let (kind, n) = header(&mut it)?;
    match kind {
        "pbf" => parse_pbf_body(n, it).map(FunctionFile::Pbf),
        "qpbf" => parse_qpbf_body(n, it).map(FunctionFile::Qpbf),
        "hif" => parse_hif_body(n, it).map(FunctionFile::Hif),
        "card" => parse_card_body(n, it).map(FunctionFile::Card),
        other => Err(parse_err(1, format!("unknown format {other:?}"))),
    }
}

pub fn read_file(path: &Path) -> Result<FunctionFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn expect_kind(text: &str, want: &str) -> Result<FunctionFile> {
    let f = parse(text)?;
    if f.kind() == want {
        Ok(f)
    } else {
        Err(parse_err(1, format!("expected a {want} file, found {}", f.kind())))
    }
}

pub fn parse_pbf(text: &str) -> Result<PbfTable> {
    match expect_kind(text, "pbf")? {
        FunctionFile::Pbf(f) => Ok(f),
        _ => unreachable!(),
    }
}

pub fn parse_qpbf(text: &str) -> Result<QuadraticPbf> {
    match expect_kind(text, "qpbf")? {
        FunctionFile::Qpbf(q) => Ok(q),
        _ => unreachable!(),
    }
}

pub fn parse_hif(text: &str) -> Result<HalfFunction> {
    match expect_kind(text, "hif")? {
        FunctionFile::Hif(g) => Ok(g),
        _ => unreachable!(),
    }
}

pub fn parse_card(text: &str) -> Result<CardinalityFn> {
    match expect_kind(text, "card")? {
        FunctionFile::Card(g) => Ok(g),
        _ => unreachable!(),
    }
}

fn parse_pbf_body<'a>(n: usize, it: impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<PbfTable> {
    check_size(1, n)?;
    let mut parsed = Vec::new();
    for (line, fields) in it {
        arity(line, &fields, 2, "<bitstring> <value>")?;
        let x: BinaryLabeling = fields[0].parse().map_err(|_| parse_err(line, format!("bad bitstring {:?}", fields[0])))?;
        if x.len() != n {
            return Err(parse_err(line, format!("bitstring {:?} has length {}, expected {n}", fields[0], x.len())));
        }
        parsed.push((line, x.index(), x.index(), value(line, fields[1])?));
    }
    let values = fill(1 << n, parsed, |k| BinaryLabeling::from_index(n, k).to_string())?;
    PbfTable::new(n, values)
}

fn parse_hif_body<'a>(n: usize, it: impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<HalfFunction> {
    check_size(1, n)?;
    let mut parsed = Vec::new();
    for (line, fields) in it {
        arity(line, &fields, 2, "<tritstring> <value>")?;
        let x: HalfLabeling = fields[0].parse().map_err(|_| parse_err(line, format!("bad tritstring {:?}", fields[0])))?;
        if x.len() != n {
            return Err(parse_err(line, format!("tritstring {:?} has length {}, expected {n}", fields[0], x.len())));
        }
        parsed.push((line, x.index(), x.index(), value(line, fields[1])?));
    }
    let values = fill(3usize.pow(n as u32), parsed, |k| HalfLabeling::from_index(n, k).to_string())?;
    HalfFunction::new(n, values)
}

fn parse_card_body<'a>(n: usize, it: impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<CardinalityFn> {
    let domain: Vec<(usize, usize)> = CardinalityFn::domain(n).collect();
    let mut parsed = Vec::new();
    for (line, fields) in it {
        arity(line, &fields, 3, "<a> <b> <value>")?;
        let count = |s: &str| s.parse::<usize>().map_err(|_| parse_err(line, format!("bad count {s:?}")));
        let (a, b) = (count(fields[0])?, count(fields[1])?);
        let slot = domain
            .iter()
            .position(|&p| p == (a, b))
            .ok_or_else(|| parse_err(line, format!("({a}, {b}) is outside D_{n}")))?;
        parsed.push((line, (a, b), slot, value(line, fields[2])?));
    }
    let values = fill(domain.len(), parsed, |k| format!("({}, {})", domain[k].0, domain[k].1))?;
    let mut g = CardinalityFn::zero(n);
    for (&(a, b), v) in domain.iter().zip(values) {
        g.set(a, b, v)?;
    }
    Ok(g)
}

fn parse_qpbf_body<'a>(n: usize, it: impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<QuadraticPbf> {
    let mut q = QuadraticPbf::new(n);
    let mut unary_seen = BTreeSet::new();
    for (line, fields) in it {
        match fields.first().copied() {
            Some("u") => {
                arity(line, &fields, 4, "u <i> <f0> <f1>")?;
                let i = node(line, fields[1], n)?;
                if !unary_seen.insert(i) {
                    return Err(parse_err(line, format!("duplicate unary term on node {}", i + 1)));
                }
                q.add_unary(i, value(line, fields[2])?, value(line, fields[3])?)?;
            }
            Some("e") => {
                arity(line, &fields, 7, "e <i> <j> <f00> <f01> <f10> <f11>")?;
                let (i, j) = (node(line, fields[1], n)?, node(line, fields[2], n)?);
                if i >= j {
                    return Err(parse_err(line, "edge endpoints must satisfy i < j"));
                }
                let t = edge_table(
                    value(line, fields[3])?,
                    value(line, fields[4])?,
                    value(line, fields[5])?,
                    value(line, fields[6])?,
                );
                q.add_edge(i, j, t)
                    .map_err(|_| parse_err(line, format!("duplicate edge ({}, {})", i + 1, j + 1)))?;
            }
            _ => return Err(parse_err(line, "rows must start with `u` or `e`")),
        }
    }
    Ok(q)
}

pub fn write_pbf(f: &PbfTable) -> String {
    let mut out = format!("pbf {}\n", f.n());
    for (k, v) in f.values().iter().enumerate() {
        let _ = writeln!(out, "{} {v}", BinaryLabeling::from_index(f.n(), k));
    }
    out
}

pub fn write_hif(g: &HalfFunction) -> String {
    let mut out = format!("hif {}\n", g.n());
    for (k, v) in g.values().iter().enumerate() {
        let _ = writeln!(out, "{} {v}", HalfLabeling::from_index(g.n(), k));
    }
    out
}

pub fn write_card(g: &CardinalityFn) -> String {
    let mut out = format!("card {}\n", g.n());
    for (a, b) in CardinalityFn::domain(g.n()) {
        let _ = writeln!(out, "{a} {b} {}", g.get(a, b).expect("in D_n"));
    }
    out
}

/// Unary rows are written only when nonzero.
pub fn write_qpbf(q: &QuadraticPbf) -> String {
    let mut out = format!("qpbf {}\n", q.n());
    for i in 0..q.n() {
        let [f0, f1] = q.unary(i);
        if !f0.is_zero() || !f1.is_zero() {
            let _ = writeln!(out, "u {} {f0} {f1}", i + 1);
        }
    }
    for (&(i, j), t) in q.edges() {
        let _ = writeln!(out, "e {} {} {} {} {} {}", i + 1, j + 1, t[0][0], t[0][1], t[1][0], t[1][1]);
    }
    out
}
