use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::symgrp::Partition;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EdgeColor {
    Normal,
    Dashed,
    Bold,
}

impl EdgeColor {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeColor::Normal => "normal",
            EdgeColor::Dashed => "dashed",
            EdgeColor::Bold => "bold",
        }
    }
}

/// A directed weighted colored edge.  `from == None` marks an in-end,
/// `to == None` an out-end; inner endpoints are vertex indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GraphEdge {
    pub from: Option<usize>,
    pub to: Option<usize>,
    pub weight: usize,
    pub color: EdgeColor,
}

impl GraphEdge {
    pub fn is_bounded(&self) -> bool {
        self.from.is_some() && self.to.is_some()
    }
}

/// Sortable encoding of an edge, used for canonical forms.
pub type EdgeKey = (i64, i64, usize, u8);

fn edge_key(e: &GraphEdge) -> EdgeKey {
    let from = e.from.map(|v| v as i64).unwrap_or(-1);
    let to = e.to.map(|v| v as i64).unwrap_or(i64::MAX);
    (from, to, e.weight, e.color as u8)
}

/// A colored monodromy graph: directed, weighted, 3-colored, with the inner
/// vertices totally ordered by their index.
///
/// Bounded edges always point from a lower to a higher vertex index, so the
/// index order is a total order extending the edge orientation.  Ends carry
/// no labels; two graphs are the same monodromy graph exactly when their
/// [`ordered_key`](Self::ordered_key)s agree, and the same equivalence class
/// (graph without vertex order) when their [`class_key`](Self::class_key)s
/// agree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredMonodromyGraph {
    num_vertices: usize,
    edges: Vec<GraphEdge>,
}

impl ColoredMonodromyGraph {
    pub fn new(num_vertices: usize, mut edges: Vec<GraphEdge>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidGraph(msg.to_string()));
        for e in &edges {
            if e.weight == 0 {
                return bad("zero edge weight");
            }
            if let (Some(u), Some(v)) = (e.from, e.to) {
                if u >= v {
                    return bad("bounded edge does not respect the vertex order");
                }
            }
            if e.from.is_none() && e.to.is_none() {
                return bad("edge with two free ends");
            }
            for v in [e.from, e.to].into_iter().flatten() {
                if v >= num_vertices {
                    return bad("vertex index out of range");
                }
            }
        }
        edges.sort_unstable_by_key(edge_key);
        let g = ColoredMonodromyGraph { num_vertices, edges };
        for v in 0..num_vertices {
            let (inc, out) = g.vertex_edges(v);
            if inc.len() + out.len() != 3 {
                return bad("inner vertex is not 3-valent");
            }
            if inc.is_empty() || out.is_empty() {
                return bad("inner vertex is a source or a sink");
            }
            let win: usize = inc.iter().map(|&i| g.edges[i].weight).sum();
            let wout: usize = out.iter().map(|&i| g.edges[i].weight).sum();
            if win != wout {
                return bad("balancing fails at an inner vertex");
            }
        }
        if !g.is_connected() {
            return bad("graph is not connected");
        }
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// Indices of incoming and outgoing edges at vertex `v`.
    pub fn vertex_edges(&self, v: usize) -> (Vec<usize>, Vec<usize>) {
        let mut inc = Vec::new();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.to == Some(v) {
                inc.push(i);
            }
            if e.from == Some(v) {
                out.push(i);
            }
        }
        (inc, out)
    }

    fn is_connected(&self) -> bool {
        // Nodes: vertices 0..n, plus one node per end (ends are leaves).
        let n = self.num_vertices;
        let total = n + self.edges.iter().filter(|e| !e.is_bounded()).count();
        if total == 0 {
            return true;
        }
        let mut uf = crate::symgrp::UnionFind::new(total);
        let mut next_leaf = n;
        for e in &self.edges {
            match (e.from, e.to) {
                (Some(u), Some(v)) => uf.union(u, v),
                (Some(u), None) | (None, Some(u)) => {
                    uf.union(u, next_leaf);
                    next_leaf += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        uf.component_count(total) == 1
    }

    pub fn degree(&self) -> usize {
        self.edges.iter().filter(|e| e.from.is_none()).map(|e| e.weight).sum()
    }

    pub fn in_end_weights(&self) -> Partition {
        let w: Vec<usize> = self.edges.iter().filter(|e| e.from.is_none()).map(|e| e.weight).collect();
        Partition::new(w).expect("positive weights")
    }

    pub fn out_end_weights(&self) -> Partition {
        let w: Vec<usize> = self.edges.iter().filter(|e| e.to.is_none()).map(|e| e.weight).collect();
        Partition::new(w).expect("positive weights")
    }

    /// First Betti number, `#bounded edges − #vertices + 1` for a connected
    /// graph.
    pub fn genus(&self) -> usize {
        let bounded = self.edges.iter().filter(|e| e.is_bounded()).count();
        bounded + 1 - self.num_vertices
    }

    /// Edges alive in the cross-section between vertex `section-1` and
    /// vertex `section` (so `0` is the section left of every vertex and
    /// `num_vertices` the one right of every vertex).
    pub fn live_edges_at(&self, section: usize) -> Vec<&GraphEdge> {
        self.edges
            .iter()
            .filter(|e| {
                let birth = e.from.map(|v| v + 1).unwrap_or(0);
                let death = e.to.map(|v| v + 1).unwrap_or(self.num_vertices + 1);
                birth <= section && section < death
            })
            .collect()
    }

    /// Wiener pairs: indices of parallel equal-weight bounded edges between
    /// the same vertex pair.
    fn wiener_pairs(&self) -> Vec<(usize, usize)> {
        let mut groups: HashMap<(usize, usize, usize), Vec<usize>> = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let (Some(u), Some(v)) = (e.from, e.to) {
                groups.entry((u, v, e.weight)).or_default().push(i);
            }
        }
        let mut pairs: Vec<(usize, usize)> = groups
            .into_values()
            .filter(|g| g.len() == 2)
            .map(|g| (g[0], g[1]))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Balanced-fork pairs: two equal-weight same-direction ends at one
    /// vertex.  Forks on the in-side and on the out-side both count.
    fn fork_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for v in 0..self.num_vertices {
            let (inc, out) = self.vertex_edges(v);
            for side in [inc, out] {
                let ends: Vec<usize> = side
                    .into_iter()
                    .filter(|&i| !self.edges[i].is_bounded())
                    .collect();
                if ends.len() == 2 && self.edges[ends[0]].weight == self.edges[ends[1]].weight {
                    pairs.push((ends[0], ends[1]));
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// All wiener and fork edge pairs; exactly the edges allowed to be bold.
    pub(crate) fn special_edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = self.wiener_pairs();
        pairs.extend(self.fork_pairs());
        pairs
    }

    /// The complementary coloring of a chain of wieners: every wiener or
    /// fork edge toggles bold ↔ normal.
    pub(crate) fn with_special_pairs_flipped(&self) -> Self {
        let mut special = vec![false; self.edges.len()];
        for (a, b) in self.special_edge_pairs() {
            special[a] = true;
            special[b] = true;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let color = if special[i] {
                    match e.color {
                        EdgeColor::Bold => EdgeColor::Normal,
                        EdgeColor::Normal => EdgeColor::Bold,
                        EdgeColor::Dashed => EdgeColor::Dashed,
                    }
                } else {
                    e.color
                };
                GraphEdge { color, ..*e }
            })
            .collect();
        ColoredMonodromyGraph::new(self.num_vertices, edges).expect("recoloring preserves structure")
    }

    pub fn features(&self) -> GraphFeatureCount {
        let wieners = self.wiener_pairs();
        let forks = self.fork_pairs();
        let bold_wiener_weights: Vec<usize> = wieners
            .iter()
            .filter(|&&(a, _)| self.edges[a].color == EdgeColor::Bold)
            .map(|&(a, _)| self.edges[a].weight)
            .collect();
        let even_plain_bounded_edges = self
            .edges
            .iter()
            .filter(|e| e.is_bounded() && e.weight % 2 == 0 && e.color != EdgeColor::Bold)
            .count();
        GraphFeatureCount {
            wieners: wieners.len(),
            balanced_forks: forks.len(),
            even_plain_bounded_edges,
            even_balanced_forks: forks.iter().filter(|&&(a, _)| self.edges[a].weight % 2 == 0).count(),
            bold_wiener_weights,
        }
    }

    /// Checks the real coloring rules: bold only on wiener or fork edges,
    /// odd edges outside wieners and balanced forks normal, dashed edges
    /// even, and every vertex matching one of the eight local pictures.
    pub fn validate_real_coloring(&self) -> bool {
        let mut special = vec![false; self.edges.len()];
        for (a, b) in self.wiener_pairs().into_iter().chain(self.fork_pairs()) {
            special[a] = true;
            special[b] = true;
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.color == EdgeColor::Bold && !special[i] {
                return false;
            }
            if e.color == EdgeColor::Dashed && e.weight % 2 != 0 {
                return false;
            }
            if e.weight % 2 != 0 && !special[i] && e.color != EdgeColor::Normal {
                return false;
            }
        }
        (0..self.num_vertices).all(|v| {
            let (inc, out) = self.vertex_edges(v);
            let (single, pair) = if inc.len() == 1 { (inc[0], out) } else { (out[0], inc) };
            self.vertex_picture_ok(single, &pair)
        })
    }

    /// The four permitted local pictures, viewed with one edge on the lone
    /// side and two on the other (covers both cuts and joins).
    fn vertex_picture_ok(&self, single: usize, pair: &[usize]) -> bool {
        vertex_picture_check(&self.edges, single, pair)
    }

    /// The multiplicity with which this graph counts covers together with a
    /// real structure: `2^(E−W−B) · ∏ wᵢ` over the bold wiener weights.
    pub fn multiplicity_with_structure(&self) -> Result<Dyadic> {
        if !self.validate_real_coloring() {
            return Err(Error::InvalidColoring);
        }
        let f = self.features();
        let exp = f.even_plain_bounded_edges as i64 - f.wieners as i64 - f.balanced_forks as i64;
        let mut m = Dyadic::two_pow(exp);
        for w in &f.bold_wiener_weights {
            m = &m * &Dyadic::from_integer(*w as i64);
        }
        Ok(m)
    }

    /// A chain of wieners: a path alternating full-weight edges and
    /// weight-`d/2` wieners or balanced forks.  These are the only shapes
    /// admitting more than one compatible involution per tuple.
    pub fn is_chain_of_wieners(&self) -> bool {
        let d = self.degree();
        if d % 2 != 0 {
            return false;
        }
        let half = d / 2;
        let special = |p: &Partition| {
            p.parts() == [d] || (d >= 2 && p.parts() == [half, half])
        };
        special(&self.in_end_weights())
            && special(&self.out_end_weights())
            && self.edges.iter().all(|e| e.weight == d || e.weight == half)
    }

    /// Serialization of the graph with its vertex order; equal keys mean
    /// equal monodromy graphs (ends are unlabeled).
    pub fn ordered_key(&self) -> (usize, Vec<EdgeKey>) {
        (self.num_vertices, self.edges.iter().map(edge_key).collect())
    }

    /// Canonical key of the underlying unordered graph: the minimum of the
    /// serialization over all vertex relabelings.  Brute force; the graphs
    /// here have few vertices.
    pub fn class_key(&self) -> (usize, Vec<EdgeKey>) {
        let n = self.num_vertices;
        let mut best: Option<Vec<EdgeKey>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut keys: Vec<EdgeKey> = self
                .edges
                .iter()
                .map(|e| {
                    let relabeled = GraphEdge {
                        from: e.from.map(|v| p[v]),
                        to: e.to.map(|v| p[v]),
                        ..*e
                    };
                    edge_key(&relabeled)
                })
                .collect();
            keys.sort_unstable();
            if best.as_ref().map(|b| keys < *b).unwrap_or(true) {
                best = Some(keys);
            }
        });
        (n, best.unwrap_or_default())
    }

    /// The same graph with all colors forgotten (painted normal).
    pub fn uncolored(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| GraphEdge { color: EdgeColor::Normal, ..*e })
            .collect();
        ColoredMonodromyGraph { num_vertices: self.num_vertices, edges }
    }

    /// Number of linear extensions of the vertex poset induced by the
    /// bounded edges.  This bounds the number of distinct vertex orderings
    /// of the equivalence class from above (symmetries of the graph can
    /// make different extensions give the same monodromy graph).
    pub fn linear_extension_count(&self) -> u64 {
        let n = self.num_vertices;
        let mut preds: Vec<u32> = vec![0; n];
        for e in &self.edges {
            if let (Some(u), Some(v)) = (e.from, e.to) {
                preds[v] |= 1 << u;
            }
        }
        let mut dp = vec![0u64; 1 << n];
        dp[0] = 1;
        for set in 0..(1u32 << n) {
            if dp[set as usize] == 0 {
                continue;
            }
            for v in 0..n {
                if set & (1 << v) == 0 && preds[v] & set == preds[v] {
                    dp[(set | (1 << v)) as usize] += dp[set as usize];
                }
            }
        }
        dp[(1usize << n) - 1]
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "from": e.from.map(Value::from).unwrap_or_else(|| Value::from("in")),
                    "to": e.to.map(Value::from).unwrap_or_else(|| Value::from("out")),
                    "weight": e.weight,
                    "color": e.color.as_str(),
                })
            })
            .collect();
        json!({
            "vertices": (0..self.num_vertices).collect::<Vec<_>>(),
            "edges": edges,
            "in_ends": self.in_end_weights().parts(),
            "out_ends": self.out_end_weights().parts(),
            "genus": self.genus(),
        })
    }

    /// DOT rendering: solid/dashed/bold edge styles, weights as labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {name} {{");
        let _ = writeln!(s, "  rankdir=LR;");
        for v in 0..self.num_vertices {
            let _ = writeln!(s, "  v{v} [shape=point];");
        }
        let mut leaf = 0usize;
        for e in &self.edges {
            let style = match e.color {
                EdgeColor::Normal => "solid",
                EdgeColor::Dashed => "dashed",
                EdgeColor::Bold => "bold",
            };
            let (from, to) = match (e.from, e.to) {
                (Some(u), Some(v)) => (format!("v{u}"), format!("v{v}")),
                (None, Some(v)) => {
                    leaf += 1;
                    let id = format!("l{leaf}");
                    let _ = writeln!(s, "  {id} [shape=none, label=\"\"];");
                    (id, format!("v{v}"))
                }
                (Some(u), None) => {
                    leaf += 1;
                    let id = format!("l{leaf}");
                    let _ = writeln!(s, "  {id} [shape=none, label=\"\"];");
                    (format!("v{u}"), id)
                }
                (None, None) => unreachable!(),
            };
            let _ = writeln!(s, "  {from} -> {to} [label=\"{}\", style={style}];", e.weight);
        }
        s.push_str("}\n");
        s
    }
}

/// One edge against two at a 3-valent vertex: even normal against a bold
/// pair of equal weights, dashed against two normal odds, normal odd
/// against a normal odd and a normal even, or even normal against two even
/// normals.
pub(crate) fn vertex_picture_check(edges: &[GraphEdge], single: usize, pair: &[usize]) -> bool {
    let s = &edges[single];
    let (a, b) = (&edges[pair[0]], &edges[pair[1]]);
    let odd = |e: &GraphEdge| e.weight % 2 == 1;
    match s.color {
        EdgeColor::Bold => false,
        EdgeColor::Dashed => {
            a.color == EdgeColor::Normal && b.color == EdgeColor::Normal && odd(a) && odd(b)
        }
        EdgeColor::Normal if odd(s) => {
            let (o, e) = if odd(a) { (a, b) } else { (b, a) };
            odd(o) && !odd(e) && o.color == EdgeColor::Normal && e.color == EdgeColor::Normal
        }
        EdgeColor::Normal => match (a.color, b.color) {
            (EdgeColor::Bold, EdgeColor::Bold) => a.weight == b.weight,
            (EdgeColor::Normal, EdgeColor::Normal) => !odd(a) && !odd(b),
            _ => false,
        },
    }
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Structural feature counts entering the multiplicity formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFeatureCount {
    /// W: parallel equal-weight edge pairs between the same two vertices.
    pub wieners: usize,
    /// B: equal-weight same-direction end pairs at one vertex.
    pub balanced_forks: usize,
    /// E: dashed or normal even bounded edges (ends never count).
    pub even_plain_bounded_edges: usize,
    /// B′: balanced forks of even weight.
    pub even_balanced_forks: usize,
    /// Weights of the bold wieners.
    pub bold_wiener_weights: Vec<usize>,
}

/// Local vertex types and their cut-and-join multiplicities: the number of
/// transpositions producing the given transition while respecting a fixed
/// involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexType {
    /// Even normal edge cut into a bold pair.
    CutEvenToBoldPair,
    /// Dashed even edge cut into two odd normal edges.
    CutDashedToOdds { indistinguishable: bool },
    /// Odd normal edge cut into an odd and an even normal edge.
    CutOddToOddEven,
    /// Even normal edge cut into two even normal edges.
    CutEvenToEvens { indistinguishable: bool },
    /// Bold pair of the given weight joined into an even normal edge.
    JoinBoldPair { weight: usize },
    /// Two odd normal edges joined into a dashed edge.
    JoinOddsToDashed,
    /// Odd and even normal edges joined into an odd edge.
    JoinOddEven,
    /// Two even normal edges joined into an even normal edge.
    JoinEvensToEven,
}

pub fn vertex_multiplicity(local_type: VertexType) -> usize {
    match local_type {
        VertexType::CutEvenToBoldPair => 1,
        VertexType::CutDashedToOdds { indistinguishable } => {
            if indistinguishable {
                1
            } else {
                2
            }
        }
        VertexType::CutOddToOddEven => 1,
        VertexType::CutEvenToEvens { indistinguishable } => {
            if indistinguishable {
                1
            } else {
                2
            }
        }
        VertexType::JoinBoldPair { weight } => weight,
        VertexType::JoinOddsToDashed => 1,
        VertexType::JoinOddEven => 2,
        VertexType::JoinEvensToEven => 4,
    }
}
