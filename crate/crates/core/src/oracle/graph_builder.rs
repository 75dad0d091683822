//! From a monodromy tuple to its colored monodromy graph.
//!
//! Cycles of the partial products are the edges; each transposition either
//! cuts one cycle or joins two, giving a 3-valent vertex.  The involution γ
//! paints the edges: bold for a pair of cycles exchanged by γ, dashed for an
//! even cycle on which γ fixes two elements, normal otherwise.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::oracle::{enumerate_tuples_with_cap, HurwitzQuery, MonodromyTuple, SearchCap};
use crate::symgrp::Permutation;
use crate::tropical::{ColoredMonodromyGraph, EdgeColor, GraphEdge};

/// Support of the cycle of `p` containing `x`, as a bitmask.
fn cycle_mask(p: &Permutation, x: usize) -> u64 {
    let mut mask = 1u64 << x;
    let mut y = p.apply(x);
    while y != x {
        mask |= 1 << y;
        y = p.apply(y);
    }
    mask
}

fn gamma_image(gamma: &Permutation, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        out |= 1 << gamma.apply(x);
        m &= m - 1;
    }
    out
}

/// Color of the edge for the cycle with support `mask` in `rho`, under the
/// involution `gamma`.
fn edge_color(gamma: &Permutation, mask: u64) -> EdgeColor {
    if gamma_image(gamma, mask) != mask {
        return EdgeColor::Bold;
    }
    let len = mask.count_ones();
    if len % 2 == 0 {
        let fixed = {
            let mut n = 0;
            let mut m = mask;
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                if gamma.apply(x) == x {
                    n += 1;
                }
                m &= m - 1;
            }
            n
        };
        if fixed == 2 {
            return EdgeColor::Dashed;
        }
    }
    EdgeColor::Normal
}

struct PendingEdge {
    from: Option<usize>,
    to: Option<usize>,
    weight: usize,
    color: EdgeColor,
}

pub fn monodromy_graph_of_tuple(t: &MonodromyTuple) -> ColoredMonodromyGraph {
    let d = t.degree();
    assert!(d <= 64, "graph construction uses 64-bit cycle masks");
    let gamma = t.gamma();
    let mut edges: Vec<PendingEdge> = Vec::new();
    // live cycle support -> edge index
    let mut live: Vec<(u64, usize)> = Vec::new();

    let mut seen = 0u64;
    for x in 0..d {
        if seen & (1 << x) != 0 {
            continue;
        }
        let mask = cycle_mask(t.sigma(), x);
        seen |= mask;
        edges.push(PendingEdge {
            from: None,
            to: None,
            weight: mask.count_ones() as usize,
            color: edge_color(gamma, mask),
        });
        live.push((mask, edges.len() - 1));
    }

    for (i, tau) in t.taus().iter().enumerate() {
        let vertex = i;
        let current = &t.partials()[i + 1];
        let (a, b) = {
            let moved: Vec<usize> = (0..d).filter(|&x| tau.apply(x) != x).collect();
            (moved[0], moved[1])
        };
        let pa = live.iter().position(|&(m, _)| m & (1 << a) != 0).unwrap();
        let pb = live.iter().position(|&(m, _)| m & (1 << b) != 0).unwrap();
        if pa == pb {
            // cut: the old cycle splits into the cycles of `current` at a and b
            let (_, idx) = live.swap_remove(pa);
            edges[idx].to = Some(vertex);
            for x in [a, b] {
                let mask = cycle_mask(current, x);
                edges.push(PendingEdge {
                    from: Some(vertex),
                    to: None,
                    weight: mask.count_ones() as usize,
                    color: edge_color(gamma, mask),
                });
                live.push((mask, edges.len() - 1));
            }
        } else {
            let (ma, idx_a) = live[pa];
            let (mb, idx_b) = live[pb];
            edges[idx_a].to = Some(vertex);
            edges[idx_b].to = Some(vertex);
            live.retain(|&(m, _)| m != ma && m != mb);
            let mask = ma | mb;
            edges.push(PendingEdge {
                from: Some(vertex),
                to: None,
                weight: mask.count_ones() as usize,
                color: edge_color(gamma, mask),
            });
            live.push((mask, edges.len() - 1));
        }
    }

    let edges: Vec<GraphEdge> = edges
        .into_iter()
        .map(|e| GraphEdge { from: e.from, to: e.to, weight: e.weight, color: e.color })
        .collect();
    ColoredMonodromyGraph::new(t.branch_points(), edges)
        .expect("a valid tuple always yields a valid graph")
}

/// The number of tuples whose graph is exactly `graph` (with its vertex
/// order), counted over the full enumeration with real structures.
pub fn tuple_count_for_graph(graph: &ColoredMonodromyGraph, q: &HurwitzQuery) -> Result<BigUint> {
    tuple_count_for_graph_with_cap(graph, q, SearchCap::default())
}

pub fn tuple_count_for_graph_with_cap(
    graph: &ColoredMonodromyGraph,
    q: &HurwitzQuery,
    cap: SearchCap,
) -> Result<BigUint> {
    if graph.in_end_weights() != *q.mu()
        || graph.out_end_weights() != *q.nu()
        || graph.genus() != q.genus()
    {
        return Err(Error::GraphQueryMismatch);
    }
    let structured = HurwitzQuery::new(q.mu().clone(), q.nu().clone(), q.genus(), true)?;
    let key = graph.ordered_key();
    let count = enumerate_tuples_with_cap(&structured, cap)?
        .iter()
        .filter(|t| monodromy_graph_of_tuple(t).ordered_key() == key)
        .count();
    Ok(BigUint::from(count))
}
