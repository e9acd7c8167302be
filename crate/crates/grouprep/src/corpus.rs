//! Exhaustive small-scale corpora: all trees and all connected graphs up to
//! isomorphism, and the standard group family used across the test suites.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::permutations_lex;
use crate::table::TableGroup;
use crate::tree::canonical_free_code;

/// Vertex cap for [`connected_graphs_up_to_iso`]; enumeration is over all
/// labeled graphs with canonical-form deduplication.
pub const GRAPH_CORPUS_CAP: usize = 6;
/// Vertex cap for [`trees_up_to_iso`].
pub const TREE_CORPUS_CAP: usize = 16;

/// All trees on exactly `n` vertices, one per isomorphism class, ordered by
/// canonical code. Built by attaching a leaf to every vertex of every tree
/// one size down and deduplicating by canonical code.
pub fn trees_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > TREE_CORPUS_CAP {
        return Err(Error::BadParameter(format!(
            "tree corpus size must be in 1..={TREE_CORPUS_CAP}, got {n}"
        )));
    }
    let mut current = vec![Graph::new(1, &[]).expect("single vertex")];
    for size in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for tree in &current {
            for attach in 0..size - 1 {
                let mut edges = tree.edges().to_vec();
                edges.push((attach, size - 1));
                let bigger = Graph::new(size, &edges).expect("leaf extension is simple");
                let code = canonical_free_code(&bigger)?;
                seen.entry(code).or_insert(bigger);
            }
        }
        current = seen.into_values().collect();
    }
    Ok(current)
}

/// All trees with between 1 and `n` vertices, one per isomorphism class.
pub fn trees_up_to_size(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(trees_up_to_iso(size)?);
    }
    Ok(out)
}

/// Canonical form of a labeled graph for corpus deduplication: the smallest
/// edge-set bitmask over all vertex relabelings. Exponential; capped.
fn canonical_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let bit = |u: usize, v: usize| -> u32 {
        let (a, b) = (u.min(v), u.max(v));
        // position of (a, b) in the row-major upper triangle
        let before: usize = (0..a).map(|r| n - r - 1).sum();
        (before + (b - a - 1)) as u32
    };
    let mut best = u64::MAX;
    for images in permutations_lex(n) {
        let mut mask = 0u64;
        for &(u, v) in g.edges() {
            mask |= 1 << bit(images[u], images[v]);
        }
        best = best.min(mask);
    }
    best
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// ordered by canonical edge mask.
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > GRAPH_CORPUS_CAP {
        return Err(Error::BadParameter(format!(
            "graph corpus size must be in 1..={GRAPH_CORPUS_CAP}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut by_canon: BTreeMap<u64, Graph> = BTreeMap::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("enumerated edges are simple");
        if !g.is_connected() {
            continue;
        }
        by_canon.entry(canonical_mask(&g)).or_insert(g);
    }
    Ok(by_canon.into_values().collect())
}

/// The standard group corpus: cyclic groups of order 2..=16, dihedral groups
/// for 2..=8, the quaternion group, A4, and S4, filtered to `max_order`.
pub fn standard_group_corpus(max_order: usize) -> Vec<(String, TableGroup)> {
    let mut out: Vec<(String, TableGroup)> = Vec::new();
    for n in 2..=16 {
        out.push((
            format!("cyclic-{n}"),
            TableGroup::cyclic(n).expect("within cap"),
        ));
    }
    for n in 2..=8 {
        out.push((
            format!("dihedral-{n}"),
            TableGroup::dihedral(n).expect("within cap"),
        ));
    }
    out.push(("quaternion".into(), TableGroup::quaternion()));
    out.push((
        "alternating-4".into(),
        TableGroup::alternating(4).expect("within cap"),
    ));
    out.push((
        "symmetric-4".into(),
        TableGroup::symmetric(4).expect("within cap"),
    ));
    out.retain(|(_, g)| g.order() <= max_order);
    out
}
