//! Tropical engine: enumerate colored monodromy graphs for a query by a
//! forward cut/join sweep, weight them exactly, and sum.
//!
//! The sweep walks left to right, maintaining the multiset of live edges.
//! Each step applies one legal cut or join together with a legal coloring
//! transition; after r steps the live edges must realize ν.  Equivalence
//! classes (graphs without the vertex order) are obtained by canonical-form
//! deduplication, and the class weight `o(Γ)` is the number of distinct
//! vertex-ordered graphs in the class.

mod graph;

use std::collections::{HashMap, HashSet};

use crate::dyadic::Dyadic;
use crate::oracle::HurwitzQuery;
use crate::symgrp::Partition;

pub use graph::{
    vertex_multiplicity, ColoredMonodromyGraph, EdgeColor, EdgeKey, GraphEdge, GraphFeatureCount,
    VertexType,
};

/// One equivalence class of colored monodromy graphs: a representative with
/// a valid vertex order, and the number of distinct orderings.
#[derive(Clone, Debug)]
pub struct GraphClass {
    pub graph: ColoredMonodromyGraph,
    pub orderings: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum LiveItem {
    Single { edge: usize, weight: usize, color: EdgeColor },
    BoldPair { first: usize, second: usize, weight: usize },
}

impl LiveItem {
    fn edge_count(self) -> usize {
        match self {
            LiveItem::Single { .. } => 1,
            LiveItem::BoldPair { .. } => 2,
        }
    }
}

struct PendingEdge {
    from: Option<usize>,
    to: Option<usize>,
    weight: usize,
    color: EdgeColor,
}

struct Sweep {
    branch_points: usize,
    target: Vec<usize>, // ν sorted decreasingly
    out: Vec<ColoredMonodromyGraph>,
}

impl Sweep {
    fn finish(&mut self, live: &[LiveItem], edges: &[PendingEdge]) {
        let mut weights: Vec<usize> = Vec::new();
        for item in live {
            match *item {
                LiveItem::Single { weight, .. } => weights.push(weight),
                LiveItem::BoldPair { weight, .. } => {
                    weights.push(weight);
                    weights.push(weight);
                }
            }
        }
        weights.sort_unstable_by(|a, b| b.cmp(a));
        if weights != self.target {
            return;
        }
        let final_edges: Vec<GraphEdge> = edges
            .iter()
            .map(|e| GraphEdge { from: e.from, to: e.to, weight: e.weight, color: e.color })
            .collect();
        // Disconnected sweeps (and in-ends that survive untouched) are not
        // monodromy graphs; everything else the sweep builds is valid.
        if let Ok(g) = ColoredMonodromyGraph::new(self.branch_points, final_edges) {
            debug_assert!(g.validate_real_coloring());
            self.out.push(g);
        }
    }

    fn step(&mut self, depth: usize, live: &[LiveItem], edges: &mut Vec<PendingEdge>) {
        let remaining = self.branch_points - depth;
        if remaining == 0 {
            self.finish(live, edges);
            return;
        }
        let count: usize = live.iter().map(|i| i.edge_count()).sum();
        let dist = count.abs_diff(self.target.len());
        if dist > remaining || (remaining - dist) % 2 != 0 {
            return;
        }
        let vertex = depth;
        let n = live.len();

        // joins of two live singles
        for i in 0..n {
            for j in i + 1..n {
                let (LiveItem::Single { edge: e1, weight: w1, color: c1 },
                     LiveItem::Single { edge: e2, weight: w2, color: c2 }) = (live[i], live[j])
                else {
                    continue;
                };
                if c1 == EdgeColor::Dashed || c2 == EdgeColor::Dashed {
                    continue;
                }
                let color = match (w1 % 2, w2 % 2) {
                    (0, 0) | (1, 0) | (0, 1) => EdgeColor::Normal,
                    (1, 1) => EdgeColor::Dashed,
                    _ => unreachable!(),
                };
                self.apply_join(depth, live, edges, &[i, j], &[e1, e2], w1 + w2, color, vertex);
            }
        }
        // join of a bold pair
        for i in 0..n {
            let LiveItem::BoldPair { first, second, weight } = live[i] else {
                continue;
            };
            self.apply_join(depth, live, edges, &[i], &[first, second], 2 * weight, EdgeColor::Normal, vertex);
        }
        // cuts
        for i in 0..n {
            let LiveItem::Single { edge, weight, color } = live[i] else {
                continue;
            };
            match (color, weight % 2) {
                (EdgeColor::Normal, 0) => {
                    let half = weight / 2;
                    self.apply_cut_bold(depth, live, edges, i, edge, half, vertex);
                    let mut w1 = 2;
                    while w1 <= weight / 2 {
                        self.apply_cut(depth, live, edges, i, edge, (w1, EdgeColor::Normal), (weight - w1, EdgeColor::Normal), vertex);
                        w1 += 2;
                    }
                }
                (EdgeColor::Normal, 1) => {
                    let mut w1 = 1;
                    while w1 + 2 <= weight {
                        self.apply_cut(depth, live, edges, i, edge, (w1, EdgeColor::Normal), (weight - w1, EdgeColor::Normal), vertex);
                        w1 += 2;
                    }
                }
                (EdgeColor::Dashed, 0) => {
                    let mut w1 = 1;
                    while w1 <= weight / 2 {
                        self.apply_cut(depth, live, edges, i, edge, (w1, EdgeColor::Normal), (weight - w1, EdgeColor::Normal), vertex);
                        w1 += 2;
                    }
                }
                _ => {}
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn apply_join(
        &mut self,
        depth: usize,
        live: &[LiveItem],
        edges: &mut Vec<PendingEdge>,
        remove: &[usize],
        close: &[usize],
        weight: usize,
        color: EdgeColor,
        vertex: usize,
    ) {
        for &e in close {
            edges[e].to = Some(vertex);
        }
        let new_edge = edges.len();
        edges.push(PendingEdge { from: Some(vertex), to: None, weight, color });
        let mut next: Vec<LiveItem> = live
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, &it)| it)
            .collect();
        next.push(LiveItem::Single { edge: new_edge, weight, color });
        self.step(depth + 1, &next, edges);
        edges.pop();
        for &e in close {
            edges[e].to = None;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn apply_cut(
        &mut self,
        depth: usize,
        live: &[LiveItem],
        edges: &mut Vec<PendingEdge>,
        remove: usize,
        close: usize,
        first: (usize, EdgeColor),
        second: (usize, EdgeColor),
        vertex: usize,
    ) {
        edges[close].to = Some(vertex);
        let base = edges.len();
        edges.push(PendingEdge { from: Some(vertex), to: None, weight: first.0, color: first.1 });
        edges.push(PendingEdge { from: Some(vertex), to: None, weight: second.0, color: second.1 });
        let mut next: Vec<LiveItem> = live
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != remove)
            .map(|(_, &it)| it)
            .collect();
        next.push(LiveItem::Single { edge: base, weight: first.0, color: first.1 });
        next.push(LiveItem::Single { edge: base + 1, weight: second.0, color: second.1 });
        self.step(depth + 1, &next, edges);
        edges.pop();
        edges.pop();
        edges[close].to = None;
    }

    #[allow(clippy::too_many_arguments)]
    fn apply_cut_bold(
        &mut self,
        depth: usize,
        live: &[LiveItem],
        edges: &mut Vec<PendingEdge>,
        remove: usize,
        close: usize,
        half: usize,
        vertex: usize,
    ) {
        edges[close].to = Some(vertex);
        let base = edges.len();
        edges.push(PendingEdge { from: Some(vertex), to: None, weight: half, color: EdgeColor::Bold });
        edges.push(PendingEdge { from: Some(vertex), to: None, weight: half, color: EdgeColor::Bold });
        let mut next: Vec<LiveItem> = live
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != remove)
            .map(|(_, &it)| it)
            .collect();
        next.push(LiveItem::BoldPair { first: base, second: base + 1, weight: half });
        self.step(depth + 1, &next, edges);
        edges.pop();
        edges.pop();
        edges[close].to = None;
    }
}

/// All ways to color the in-ends: per distinct part value, choose how many
/// bold pairs and how many dashed ends (even parts only); the rest are
/// normal.
fn initial_states(mu: &Partition) -> Vec<(Vec<LiveItem>, Vec<PendingEdge>)> {
    let mut values: Vec<(usize, usize)> = Vec::new(); // (value, count)
    for &p in mu.parts() {
        match values.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => values.push((p, 1)),
        }
    }
    let mut states = Vec::new();
    // choices[k] = (bold_pairs, dashed) for value k
    fn rec(
        values: &[(usize, usize)],
        k: usize,
        current: &mut Vec<(usize, usize)>,
        states: &mut Vec<(Vec<LiveItem>, Vec<PendingEdge>)>,
    ) {
        if k == values.len() {
            let mut live = Vec::new();
            let mut edges = Vec::new();
            for (&(value, count), &(pairs, dashed)) in values.iter().zip(current.iter()) {
                for _ in 0..pairs {
                    let base = edges.len();
                    edges.push(PendingEdge { from: None, to: None, weight: value, color: EdgeColor::Bold });
                    edges.push(PendingEdge { from: None, to: None, weight: value, color: EdgeColor::Bold });
                    live.push(LiveItem::BoldPair { first: base, second: base + 1, weight: value });
                }
                for i in 0..count - 2 * pairs {
                    let color = if i < dashed { EdgeColor::Dashed } else { EdgeColor::Normal };
                    let base = edges.len();
                    edges.push(PendingEdge { from: None, to: None, weight: value, color });
                    live.push(LiveItem::Single { edge: base, weight: value, color });
                }
            }
            states.push((live, edges));
            return;
        }
        let (value, count) = values[k];
        for pairs in 0..=count / 2 {
            let free = count - 2 * pairs;
            let max_dashed = if value % 2 == 0 { free } else { 0 };
            for dashed in 0..=max_dashed {
                current.push((pairs, dashed));
                rec(values, k + 1, current, states);
                current.pop();
            }
        }
    }
    rec(&values, 0, &mut Vec::new(), &mut states);
    states
}

/// All distinct vertex-ordered colored monodromy graphs for the query.
pub fn enumerate_ordered_graphs(q: &HurwitzQuery) -> Vec<ColoredMonodromyGraph> {
    let mut sweep = Sweep {
        branch_points: q.branch_points(),
        target: q.nu().parts().to_vec(),
        out: Vec::new(),
    };
    for (live, mut edges) in initial_states(q.mu()) {
        sweep.step(0, &live, &mut edges);
    }
    let mut seen = HashSet::new();
    let mut graphs: Vec<ColoredMonodromyGraph> =
        sweep.out.into_iter().filter(|g| seen.insert(g.ordered_key())).collect();
    graphs.sort_by_key(|g| g.ordered_key());
    graphs
}

fn group_into_classes(graphs: Vec<ColoredMonodromyGraph>) -> Vec<GraphClass> {
    let mut groups: HashMap<(usize, Vec<EdgeKey>), Vec<ColoredMonodromyGraph>> = HashMap::new();
    for g in graphs {
        groups.entry(g.class_key()).or_default().push(g);
    }
    let mut classes: Vec<GraphClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort_by_key(|g| g.ordered_key());
            let orderings = members.len() as u64;
            GraphClass { graph: members.into_iter().next().unwrap(), orderings }
        })
        .collect();
    classes.sort_by_key(|c| c.graph.ordered_key());
    classes
}

/// Equivalence classes of colored monodromy graphs with their ordering
/// counts `o(Γ)`.
pub fn enumerate_graphs(q: &HurwitzQuery) -> Vec<GraphClass> {
    group_into_classes(enumerate_ordered_graphs(q))
}

/// Uncolored shapes (classes of graphs with colors forgotten) with their
/// ordering counts.
pub fn enumerate_uncolored_shapes(q: &HurwitzQuery) -> Vec<GraphClass> {
    let mut seen = HashSet::new();
    let stripped: Vec<ColoredMonodromyGraph> = enumerate_ordered_graphs(q)
        .into_iter()
        .map(|g| g.uncolored())
        .filter(|g| seen.insert(g.ordered_key()))
        .collect();
    group_into_classes(stripped)
}

/// The tropical real double Hurwitz number for the query.
///
/// With real structures this is `Σ o(Γ)·m̃(Γ)`.  Without, chains of wieners
/// need corrections: for `d ≡ 2 (mod 4)` the dashed chain counts zero, and
/// for `d ≡ 0 (mod 4)` every complementary pair of chain colorings loses
/// `2^(W−1)`.  The corrected total is checked against the closed form
/// `H̃ − structure_delta` before being returned.
pub fn tropical_hurwitz(q: &HurwitzQuery) -> Dyadic {
    let classes = enumerate_graphs(q);
    let tilde: Dyadic = classes
        .iter()
        .map(|c| {
            &Dyadic::from_integer(c.orderings as i64)
                * &c.graph.multiplicity_with_structure().expect("enumerated graphs are valid")
        })
        .sum();
    if q.with_structure() {
        return tilde;
    }

    let mut total = Dyadic::zero();
    let mut chains: Vec<&GraphClass> = Vec::new();
    for c in &classes {
        if c.graph.is_chain_of_wieners() {
            chains.push(c);
        } else {
            let m = c.graph.multiplicity_with_structure().unwrap();
            total = &total + &(&Dyadic::from_integer(c.orderings as i64) * &m);
        }
    }
    if !chains.is_empty() {
        let d = q.degree();
        if d % 4 == 2 {
            for c in &chains {
                let dashed = c.graph.edges().iter().any(|e| e.color == EdgeColor::Dashed);
                if !dashed {
                    total = &total + &c.graph.multiplicity_with_structure().unwrap();
                }
            }
        } else {
            let by_key: HashMap<(usize, Vec<EdgeKey>), &GraphClass> =
                chains.iter().map(|c| (c.graph.class_key(), *c)).collect();
            let mut paired: HashSet<(usize, Vec<EdgeKey>)> = HashSet::new();
            for c in &chains {
                let key = c.graph.class_key();
                if paired.contains(&key) {
                    continue;
                }
                let flipped = c.graph.with_special_pairs_flipped();
                let fkey = flipped.class_key();
                let partner = by_key
                    .get(&fkey)
                    .expect("complementary chain coloring must be enumerated");
                paired.insert(key);
                paired.insert(fkey);
                let w = c.graph.features().wieners as i64;
                let pair_sum = &c.graph.multiplicity_with_structure().unwrap()
                    + &partner.graph.multiplicity_with_structure().unwrap();
                total = &total + &(&pair_sum - &Dyadic::two_pow(w - 1));
            }
        }
    }

    let alt = &tilde - &structure_delta(q);
    assert_eq!(
        total, alt,
        "chain-of-wieners bookkeeping disagrees with the closed form for {q:?}"
    );
    total
}

/// Closed form for `H̃ − H`: `1/2` when μ, ν ∈ {(d),(d/2,d/2)} and
/// `d ≡ 2 (mod 4)`; `2^B·4^(g−1)` (B = number of the two partitions equal to
/// `(d/2,d/2)`) when `d ≡ 0 (mod 4)`; zero otherwise.
pub fn structure_delta(q: &HurwitzQuery) -> Dyadic {
    let d = q.degree();
    if d % 2 != 0 {
        return Dyadic::zero();
    }
    let half = d / 2;
    let is_special = |p: &Partition| p.parts() == [d] || p.parts() == [half, half];
    if !is_special(q.mu()) || !is_special(q.nu()) {
        return Dyadic::zero();
    }
    if d % 4 == 2 {
        Dyadic::two_pow(-1)
    } else {
        let b = [q.mu(), q.nu()]
            .into_iter()
            .filter(|p| p.parts() == [half, half])
            .count() as i64;
        Dyadic::two_pow(b + 2 * (q.genus() as i64 - 1))
    }
}

/// Sum of the multiplicities of all valid colorings of a shape (colors on
/// the input are ignored).  Without real structures the chain-of-wieners
/// corrections are applied, which reproduces the closed forms
/// `2^(B−1)·(d/2+4)^W` (and `… − 2^B·4^(W−1)` without structure) for chains
/// with `d ≡ 0 (mod 4)`.
pub fn uncolored_multiplicity(shape: &ColoredMonodromyGraph, with_structure: bool) -> Dyadic {
    let colorings = colorings_of_shape(shape);
    let tilde: Dyadic = colorings
        .iter()
        .map(|g| g.multiplicity_with_structure().unwrap())
        .sum();
    if with_structure || colorings.is_empty() || !shape.is_chain_of_wieners() {
        return tilde;
    }
    let d = shape.degree();
    if d % 4 == 2 {
        colorings
            .iter()
            .filter(|g| g.edges().iter().all(|e| e.color != EdgeColor::Dashed))
            .map(|g| g.multiplicity_with_structure().unwrap())
            .sum()
    } else {
        let w = shape.features().wieners as i64;
        let pairs = colorings.len() as i64 / 2;
        &tilde - &(&Dyadic::from_integer(pairs) * &Dyadic::two_pow(w - 1))
    }
}

/// All valid real colorings of a shape, as concrete graphs on the same
/// vertex order.
pub fn colorings_of_shape(shape: &ColoredMonodromyGraph) -> Vec<ColoredMonodromyGraph> {
    let edges = shape.edges();
    let mut special = vec![false; edges.len()];
    for (a, b) in shape.special_edge_pairs() {
        special[a] = true;
        special[b] = true;
    }
    // For pruning, know when all edges at a vertex are colored.
    let mut vertex_last_edge = vec![0usize; shape.num_vertices()];
    for (i, e) in edges.iter().enumerate() {
        for v in [e.from, e.to].into_iter().flatten() {
            vertex_last_edge[v] = vertex_last_edge[v].max(i);
        }
    }

    let mut out = Vec::new();
    let mut colors: Vec<EdgeColor> = Vec::with_capacity(edges.len());

    fn rec(
        shape: &ColoredMonodromyGraph,
        special: &[bool],
        vertex_last_edge: &[usize],
        colors: &mut Vec<EdgeColor>,
        out: &mut Vec<ColoredMonodromyGraph>,
    ) {
        let i = colors.len();
        let edges = shape.edges();
        if i == edges.len() {
            let candidate = ColoredMonodromyGraph::new(
                shape.num_vertices(),
                edges
                    .iter()
                    .zip(colors.iter())
                    .map(|(e, &c)| GraphEdge { color: c, ..*e })
                    .collect(),
            )
            .expect("recoloring preserves structure");
            if candidate.validate_real_coloring() {
                out.push(candidate);
            }
            return;
        }
        let e = &edges[i];
        let mut candidates = vec![EdgeColor::Normal];
        if e.weight % 2 == 0 {
            candidates.push(EdgeColor::Dashed);
        }
        if special[i] {
            candidates.push(EdgeColor::Bold);
        }
        'next: for c in candidates {
            colors.push(c);
            // check every vertex whose incident edges are now all colored
            for v in 0..shape.num_vertices() {
                if vertex_last_edge[v] == i && !vertex_ok_partial(shape, colors, v) {
                    colors.pop();
                    continue 'next;
                }
            }
            rec(shape, special, vertex_last_edge, colors, out);
            colors.pop();
        }
    }

    fn vertex_ok_partial(shape: &ColoredMonodromyGraph, colors: &[EdgeColor], v: usize) -> bool {
        let (inc, outg) = shape.vertex_edges(v);
        let recolored: Vec<GraphEdge> = shape
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| GraphEdge { color: colors.get(i).copied().unwrap_or(EdgeColor::Normal), ..*e })
            .collect();
        let (single, pair) = if inc.len() == 1 { (inc[0], outg) } else { (outg[0], inc) };
        graph::vertex_picture_check(&recolored, single, &pair)
    }

    rec(shape, &special, &vertex_last_edge, &mut colors, &mut out);
    out.sort_by_key(|g| g.ordered_key());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::hurwitz_oracle;

    fn query(mu: &str, nu: &str, g: usize, with_structure: bool) -> HurwitzQuery {
        HurwitzQuery::new(mu.parse().unwrap(), nu.parse().unwrap(), g, with_structure).unwrap()
    }

    fn multiplicities(classes: &[GraphClass]) -> Vec<String> {
        let mut m: Vec<String> = classes
            .iter()
            .map(|c| {
                (&Dyadic::from_integer(c.orderings as i64)
                    * &c.graph.multiplicity_with_structure().unwrap())
                    .to_string()
            })
            .collect();
        m.sort();
        m
    }

    #[test]
    fn two_sheets_fork_classes() {
        let classes = enumerate_graphs(&query("2", "1,1", 0, true));
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.orderings == 1));
        assert_eq!(multiplicities(&classes), vec!["1/2", "1/2"]);
        let dashed = classes
            .iter()
            .filter(|c| c.graph.edges().iter().any(|e| e.color == EdgeColor::Dashed))
            .count();
        let bold = classes
            .iter()
            .filter(|c| c.graph.edges().iter().any(|e| e.color == EdgeColor::Bold))
            .count();
        assert_eq!((dashed, bold), (1, 1));
    }

    #[test]
    fn genus_one_degree_four_classes() {
        // Six classes weighing 2+1+1+2+1+1 = 8.
        let classes = enumerate_graphs(&query("4", "2,2", 1, true));
        assert_eq!(classes.len(), 6);
        assert_eq!(multiplicities(&classes), vec!["1", "1", "1", "1", "2", "2"]);
        assert_eq!(tropical_hurwitz(&query("4", "2,2", 1, true)).to_string(), "8");
        assert_eq!(tropical_hurwitz(&query("4", "2,2", 1, false)).to_string(), "6");
    }

    #[test]
    fn even_distinct_genus_zero_classes() {
        let classes = enumerate_graphs(&query("8,2", "6,4", 0, true));
        assert_eq!(classes.len(), 3);
        for c in &classes {
            assert_eq!(c.orderings, 1);
            assert_eq!(c.graph.multiplicity_with_structure().unwrap().to_string(), "2");
        }
    }

    #[test]
    fn single_wiener_chain() {
        assert_eq!(tropical_hurwitz(&query("2", "2", 1, true)).to_string(), "1");
        assert_eq!(tropical_hurwitz(&query("2", "2", 1, false)).to_string(), "1/2");
    }

    #[test]
    fn structure_delta_examples() {
        assert_eq!(structure_delta(&query("2", "2", 1, true)).to_string(), "1/2");
        assert_eq!(structure_delta(&query("4", "2,2", 1, true)).to_string(), "2");
        assert!(structure_delta(&query("3,1", "2,2", 1, true)).is_zero());
        // d odd: (3),(3) is outside the special family even though μ = ν = (d).
        assert!(structure_delta(&query("3", "3", 1, true)).is_zero());
    }

    #[test]
    fn agreement_with_oracle_spot_checks() {
        for (mu, nu, g) in [("3", "2,1", 1), ("2,2", "2,1,1", 0), ("4", "4", 1), ("2,2", "2,2", 1)] {
            for with in [true, false] {
                let q = query(mu, nu, g, with);
                assert_eq!(
                    tropical_hurwitz(&q),
                    hurwitz_oracle(&q).unwrap(),
                    "disagreement at mu={mu} nu={nu} g={g} with={with}"
                );
            }
        }
    }

    #[test]
    fn agreement_with_oracle_degree_six() {
        // degree 6 has 76 involutions, so the oracle's involution sets span
        // more than one machine word
        for (mu, nu, g) in [("6", "6", 1), ("6", "3,3", 1), ("3,3", "2,2,2", 0), ("6", "2,2,1,1", 0)] {
            for with in [true, false] {
                let q = query(mu, nu, g, with);
                assert_eq!(
                    tropical_hurwitz(&q),
                    hurwitz_oracle(&q).unwrap(),
                    "disagreement at mu={mu} nu={nu} g={g} with={with}"
                );
            }
        }
    }

    #[test]
    fn ordering_counts_bounded_by_linear_extensions() {
        for (mu, nu, g) in [("4", "2,2", 1), ("2,2", "2,2", 1), ("3,2,1", "6", 0), ("2,2,1", "3,1,1", 0)] {
            let q = query(mu, nu, g, true);
            let r = q.branch_points() as u64;
            let r_factorial: u64 = (1..=r).product();
            for c in enumerate_graphs(&q) {
                assert!(c.orderings >= 1);
                assert!(c.orderings <= r_factorial);
                assert!(c.orderings <= c.graph.linear_extension_count());
            }
        }
    }

    #[test]
    fn multiplicity_denominator_divides_wiener_fork_power() {
        for (mu, nu, g) in [("4", "2,2", 1), ("2,2", "2,2", 1), ("5", "3,1,1", 0)] {
            for c in enumerate_graphs(&query(mu, nu, g, true)) {
                let f = c.graph.features();
                let m = c.graph.multiplicity_with_structure().unwrap();
                let denom_exp = m.denominator().trailing_zeros().unwrap_or(0) as usize;
                assert!(denom_exp <= f.wieners + f.balanced_forks);
            }
        }
    }

    #[test]
    fn uncolored_fork_shape() {
        let q = query("2", "1,1", 0, true);
        let shapes = enumerate_uncolored_shapes(&q);
        assert_eq!(shapes.len(), 1);
        let shape = &shapes[0].graph;
        assert_eq!(colorings_of_shape(shape).len(), 2);
        assert_eq!(uncolored_multiplicity(shape, true).to_string(), "1");
        // d = 2 ≡ 2 (mod 4): the dashed chain coloring counts zero.
        assert_eq!(uncolored_multiplicity(shape, false).to_string(), "1/2");
    }

    #[test]
    fn uncolored_chain_closed_forms() {
        // d = 4 chain with one wiener and one fork: W = 1, B = 1.
        let q = query("2,2", "4", 1, true);
        let chain = enumerate_uncolored_shapes(&q)
            .into_iter()
            .find(|s| s.graph.is_chain_of_wieners())
            .expect("chain shape exists");
        let shape = &chain.graph;
        assert_eq!(colorings_of_shape(shape).len(), 4);
        // 2^(B−1)·(d/2+4)^W = 6 with real structures, minus 2^B·4^(W−1) = 2 without.
        assert_eq!(uncolored_multiplicity(shape, true).to_string(), "6");
        assert_eq!(uncolored_multiplicity(shape, false).to_string(), "4");
    }

    #[test]
    fn structure_delta_holds_up_to_degree_six() {
        // tropical_hurwitz(false) internally re-derives the total as
        // H~ − structure_delta, so evaluating it exercises the redundancy.
        for d in 1..=6usize {
            for mu in Partition::all_of(d) {
                for nu in Partition::all_of(d) {
                    for g in 0..=3usize {
                        let Ok(q) = HurwitzQuery::new(mu.clone(), nu.clone(), g, false) else {
                            continue;
                        };
                        if q.branch_points() > 4 {
                            continue;
                        }
                        let with = HurwitzQuery::new(mu.clone(), nu.clone(), g, true).unwrap();
                        let delta = &tropical_hurwitz(&with) - &tropical_hurwitz(&q);
                        assert_eq!(delta, structure_delta(&q), "at {q:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn uncolored_sum_recovers_totals() {
        for (mu, nu, g) in [
            ("4", "2,2", 1),
            ("2,2", "2,2", 1),
            ("3", "2,1", 1),
            ("8,2", "6,4", 0),
            ("5", "2,2,1", 0),
            ("2,2,1", "3,1,1", 0),
        ] {
            for with in [true, false] {
                let q = query(mu, nu, g, with);
                let total: Dyadic = enumerate_uncolored_shapes(&q)
                    .iter()
                    .map(|s| {
                        &Dyadic::from_integer(s.orderings as i64)
                            * &uncolored_multiplicity(&s.graph, with)
                    })
                    .sum();
                assert_eq!(total, tropical_hurwitz(&q), "mu={mu} nu={nu} g={g} with={with}");
            }
        }
    }

    #[test]
    fn graph_json_shape() {
        let classes = enumerate_graphs(&query("2", "1,1", 0, true));
        let v = classes[0].graph.to_json();
        assert!(v.get("vertices").is_some());
        assert!(v.get("edges").is_some());
        assert_eq!(v["in_ends"], serde_json::json!([2]));
        assert_eq!(v["out_ends"], serde_json::json!([1, 1]));
        assert_eq!(v["genus"], serde_json::json!(0));
        let dot = classes[0].graph.to_dot("g0");
        assert!(dot.starts_with("digraph g0 {"));
        assert!(dot.contains("style="));
    }
}
