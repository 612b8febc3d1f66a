//! Exact max-flow on small networks, and the reduction from submodular
//! quadratics.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::pbf::{edge_is_submodular, QuadraticPbf};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Source,
    Sink,
    Node(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub from: Vertex,
    pub to: Vertex,
    pub capacity: Rational,
}

/// A directed network with rational capacities plus a constant offset that
/// the encoded function carries on top of the cut value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    arcs: Vec<Arc>,
    pub offset: Rational,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            nodes,
            arcs: Vec::new(),
            offset: Rational::zero(),
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Adds an arc; zero capacities are dropped.
    pub fn add_arc(&mut self, from: Vertex, to: Vertex, capacity: Rational) -> Result<()> {
        for v in [from, to] {
            if let Vertex::Node(k) = v {
                if k >= self.nodes {
                    return Err(Error::InvalidNode {
                        node: k,
                        count: self.nodes,
                    });
                }
            }
        }
        if capacity.is_negative() {
            return Err(Error::Precondition(format!("negative capacity {capacity}")));
        }
        if !capacity.is_zero() && from != to {
            self.arcs.push(Arc { from, to, capacity });
        }
        Ok(())
    }

    fn slot(&self, v: Vertex) -> usize {
        match v {
            Vertex::Node(k) => k,
            Vertex::Source => self.nodes,
            Vertex::Sink => self.nodes + 1,
        }
    }

    /// Capacity of the cut whose source side is `{s} ∪ {k : side[k]}`.
    pub fn cut_value(&self, side: &[bool]) -> Rational {
        let on_source = |v: Vertex| match v {
            Vertex::Source => true,
            Vertex::Sink => false,
            Vertex::Node(k) => side[k],
        };
        self.arcs
            .iter()
            .filter(|a| on_source(a.from) && !on_source(a.to))
            .map(|a| &a.capacity)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: Rational,
    /// Membership of each internal node in the smallest source side of a
    /// minimum cut.
    pub source_side: Vec<bool>,
}

/// Edmonds-Karp on a dense residual matrix. The returned cut is the set of
/// nodes reachable from the source in the final residual graph, which is the
/// unique inclusion-minimal source side among all minimum cuts.
pub fn maxflow(net: &FlowNetwork) -> MaxFlow {
    let m = net.nodes + 2;
    let (s, t) = (net.nodes, net.nodes + 1);
    let mut residual = vec![vec![Rational::zero(); m]; m];
    for a in &net.arcs {
        residual[net.slot(a.from)][net.slot(a.to)] += &a.capacity;
    }
    let mut value = Rational::zero();
    loop {
        let parent = bfs(&residual, s);
        if parent[t].is_none() {
            let source_side = (0..net.nodes).map(|k| parent[k].is_some()).collect();
            return MaxFlow { value, source_side };
        }
        let mut path = Vec::new();
        let mut v = t;
        while v != s {
            let p = parent[v].expect("on the augmenting path");
            path.push((p, v));
            v = p;
        }
        let bottleneck = path
            .iter()
            .map(|&(a, b)| residual[a][b].clone())
            .min()
            .expect("path is nonempty");
        for (a, b) in path {
            residual[a][b] -= &bottleneck;
            residual[b][a] += &bottleneck;
        }
        value += bottleneck;
    }
}

fn bfs(residual: &[Vec<Rational>], s: usize) -> Vec<Option<usize>> {
    let m = residual.len();
    let mut parent = vec![None; m];
    parent[s] = Some(s);
    let mut queue = VecDeque::from([s]);
    while let Some(a) = queue.pop_front() {
        for b in 0..m {
            if parent[b].is_none() && residual[a][b].is_positive() {
                parent[b] = Some(a);
                queue.push_back(b);
            }
        }
    }
    parent
}

/// Encodes a quadratic with submodular pairwise terms so that, with label 1
/// meaning "source side", `f(x) = offset + cut(x)`.
///
/// Pairwise tables are split as
/// `t00 + (t10 - t00) a + (t11 - t10) b + w (1 - a) b` with
/// `w = t01 + t10 - t00 - t11 >= 0`, giving one arc `j -> i` of capacity `w`.
pub fn to_flow_network(q: &QuadraticPbf) -> Result<FlowNetwork> {
    let n = q.n();
    let mut unary: Vec<[Rational; 2]> = (0..n).map(|i| q.unary(i).clone()).collect();
    let mut net = FlowNetwork::new(n);
    for (&(i, j), t) in q.edges() {
        if !edge_is_submodular(t) {
            return Err(Error::NonSubmodularTerm(i, j));
        }
        net.offset += &t[0][0];
        unary[i][1] += &t[1][0] - &t[0][0];
        unary[j][1] += &t[1][1] - &t[1][0];
        let w = &t[0][1] + &t[1][0] - &t[0][0] - &t[1][1];
        net.add_arc(Vertex::Node(j), Vertex::Node(i), w)?;
    }
    for (k, [c0, c1]) in unary.into_iter().enumerate() {
        let low = c0.clone().min(c1.clone());
        net.add_arc(Vertex::Node(k), Vertex::Sink, &c1 - &low)?;
        net.add_arc(Vertex::Source, Vertex::Node(k), &c0 - &low)?;
        net.offset += low;
    }
    Ok(net)
}
