//! Simple undirected graphs with exact isomorphism and automorphism search.
//!
//! Everything here is deterministic backtracking over vertex maps in
//! ascending index order, with degree and adjacency pruning. Exact searches
//! refuse graphs above [`SEARCH_VERTEX_CAP`] instead of answering slowly or
//! wrongly; disjoint unions of small components go through
//! [`aut_order_by_components`].

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::{GenSet, Permutation};

/// Default vertex cap for exact isomorphism/automorphism backtracking.
pub const SEARCH_VERTEX_CAP: usize = 32;
/// Vertex cap for exhaustive automorphism enumeration.
pub const ENUMERATION_VERTEX_CAP: usize = 10;
/// Cap on the number of automorphisms the exhaustive enumerator will list.
pub const ENUMERATION_COUNT_CAP: usize = 100_000;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and rejecting
    /// self-loops, duplicates, and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Complete graph.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is simple")
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "cycle needs >= 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges)
    }

    /// Exact edge complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement of a simple graph is simple")
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_vertex_sets().len() == 1
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Induced subgraph on `vertices` (which must be distinct); vertex `k` of
    /// the result is `vertices_sorted[k]`. Returns the subgraph and the map
    /// from new index to original vertex.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut verts = vertices.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != vertices.len() {
            return Err(Error::InvalidGraph(
                "duplicate vertex in subgraph selection".into(),
            ));
        }
        if let Some(&v) = verts.last() {
            if v >= self.n {
                return Err(Error::InvalidGraph(format!("vertex {v} out of range")));
            }
        }
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in verts.iter().enumerate() {
            index[v] = k;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        Ok((Graph::new(verts.len(), &edges)?, verts))
    }
}

/// Disjoint union; part `k` is relabeled by the returned offset `offsets[k]`.
pub fn disjoint_union(parts: &[Graph]) -> Result<(Graph, Vec<usize>)> {
    if parts.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut edges = Vec::new();
    let mut total = 0usize;
    for part in parts {
        offsets.push(total);
        for &(u, v) in &part.edges {
            edges.push((u + total, v + total));
        }
        total += part.n;
    }
    Ok((Graph::new(total, &edges)?, offsets))
}

/// One class of pairwise-isomorphic connected components.
#[derive(Clone, Debug)]
pub struct ComponentClass {
    /// Indices into the component list, in first-seen order.
    pub members: Vec<usize>,
    /// Extracted representative (the first member), re-indexed.
    pub representative: Graph,
}

impl ComponentClass {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// Components of a graph together with their grouping under isomorphism.
#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    pub components: Vec<Vec<usize>>,
    pub iso_classes: Vec<ComponentClass>,
}

/// Components plus iso-classes; errors only if a component exceeds the exact
/// isomorphism search cap.
pub fn connected_components(g: &Graph) -> Result<ComponentDecomposition> {
    let components = g.component_vertex_sets();
    let mut iso_classes: Vec<ComponentClass> = Vec::new();
    for (idx, comp) in components.iter().enumerate() {
        let (sub, _) = g.induced_subgraph(comp)?;
        let mut placed = false;
        for class in &mut iso_classes {
            if are_isomorphic(&class.representative, &sub)?.is_some() {
                class.members.push(idx);
                placed = true;
                break;
            }
        }
        if !placed {
            iso_classes.push(ComponentClass {
                members: vec![idx],
                representative: sub,
            });
        }
    }
    Ok(ComponentDecomposition {
        components,
        iso_classes,
    })
}

fn degree_multiset(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Isomorphism witness from `x` to `y`, or `None`. The witness maps vertex
/// `v` of `x` to `witness[v]` of `y`. First match in ascending search order.
pub fn are_isomorphic(x: &Graph, y: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_capped(x, y, SEARCH_VERTEX_CAP)
}

/// As [`are_isomorphic`] with an explicit vertex cap.
pub fn are_isomorphic_capped(x: &Graph, y: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    if x.n.max(y.n) > cap {
        return Err(Error::CapExceeded {
            what: "isomorphism search vertices",
            limit: cap,
            actual: x.n.max(y.n),
        });
    }
    if x.n != y.n || x.edges.len() != y.edges.len() || degree_multiset(x) != degree_multiset(y) {
        return Ok(None);
    }
    let n = x.n;
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_map(x, y, 0, &mut mapping, &mut used) {
        Ok(Some(mapping))
    } else {
        Ok(None)
    }
}

fn extend_map(x: &Graph, y: &Graph, next: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
    if next == x.n {
        return true;
    }
    'candidates: for v in 0..y.n {
        if used[v] || x.degree(next) != y.degree(v) {
            continue;
        }
        for j in 0..next {
            if x.has_edge(next, j) != y.has_edge(v, mapping[j]) {
                continue 'candidates;
            }
        }
        mapping[next] = v;
        used[v] = true;
        if extend_map(x, y, next + 1, mapping, used) {
            return true;
        }
        mapping[next] = usize::MAX;
        used[v] = false;
    }
    false
}

/// Searches for one automorphism that fixes all vertices below `level`
/// pointwise and maps `level` to `target`.
fn find_prefix_automorphism(g: &Graph, level: usize, target: usize) -> Option<Permutation> {
    let n = g.n;
    if g.degree(level) != g.degree(target) {
        return None;
    }
    let mut mapping: Vec<usize> = (0..level).collect();
    mapping.resize(n, usize::MAX);
    let mut used = vec![false; n];
    for v in 0..level {
        if g.has_edge(level, v) != g.has_edge(target, v) {
            return None;
        }
        used[v] = true;
    }
    if used[target] {
        return None;
    }
    mapping[level] = target;
    used[target] = true;
    fn extend(g: &Graph, next: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
        if next == g.n {
            return true;
        }
        'candidates: for v in 0..g.n {
            if used[v] || g.degree(next) != g.degree(v) {
                continue;
            }
            for j in 0..next {
                if g.has_edge(next, j) != g.has_edge(v, mapping[j]) {
                    continue 'candidates;
                }
            }
            mapping[next] = v;
            used[v] = true;
            if extend(g, next + 1, mapping, used) {
                return true;
            }
            mapping[next] = usize::MAX;
            used[v] = false;
        }
        false
    }
    if extend(g, level + 1, &mut mapping, &mut used) {
        Some(Permutation::from_images(mapping).expect("search maintains a bijection"))
    } else {
        None
    }
}

/// Generators of the automorphism group: stabilizer-chain coset
/// representatives found level by level, skipping targets already reachable
/// from the generators collected so far.
pub fn automorphism_generators(g: &Graph) -> Result<GenSet> {
    automorphism_generators_capped(g, SEARCH_VERTEX_CAP)
}

/// As [`automorphism_generators`] with an explicit vertex cap.
pub fn automorphism_generators_capped(g: &Graph, cap: usize) -> Result<GenSet> {
    if g.n > cap {
        return Err(Error::CapExceeded {
            what: "automorphism search vertices",
            limit: cap,
            actual: g.n,
        });
    }
    let n = g.n;
    let mut gens: Vec<Permutation> = Vec::new();
    for level in 0..n {
        let mut impossible = vec![false; n];
        loop {
            let orbit = prefix_orbit(&gens, level, n);
            let target = (level + 1..n).find(|&v| !orbit[v] && !impossible[v]);
            let Some(target) = target else { break };
            match find_prefix_automorphism(g, level, target) {
                Some(p) => gens.push(p),
                None => impossible[target] = true,
            }
        }
    }
    GenSet::new(n, gens)
}

/// Orbit of `level` under the collected generators that fix `0..level`.
fn prefix_orbit(gens: &[Permutation], level: usize, n: usize) -> Vec<bool> {
    let mut in_orbit = vec![false; n];
    in_orbit[level] = true;
    let applicable: Vec<&Permutation> = gens
        .iter()
        .filter(|p| (0..level).all(|j| p.apply(j) == j))
        .collect();
    let mut stack = vec![level];
    while let Some(p) = stack.pop() {
        for g in &applicable {
            for q in [g.apply(p), g.inverse().apply(p)] {
                if !in_orbit[q] {
                    in_orbit[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    in_orbit
}

/// Every automorphism, in ascending image-table order. Refuses graphs above
/// [`ENUMERATION_VERTEX_CAP`] vertices or [`ENUMERATION_COUNT_CAP`] results.
pub fn enumerate_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    if g.n > ENUMERATION_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "automorphism enumeration vertices",
            limit: ENUMERATION_VERTEX_CAP,
            actual: g.n,
        });
    }
    let mut out = Vec::new();
    let mut mapping = vec![usize::MAX; g.n];
    let mut used = vec![false; g.n];
    enumerate_rec(g, 0, &mut mapping, &mut used, &mut out)?;
    Ok(out)
}

fn enumerate_rec(
    g: &Graph,
    next: usize,
    mapping: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) -> Result<()> {
    if next == g.n {
        if out.len() >= ENUMERATION_COUNT_CAP {
            return Err(Error::CapExceeded {
                what: "automorphism enumeration count",
                limit: ENUMERATION_COUNT_CAP,
                actual: out.len() + 1,
            });
        }
        out.push(Permutation::from_images(mapping.clone()).expect("bijection"));
        return Ok(());
    }
    'candidates: for v in 0..g.n {
        if used[v] || g.degree(next) != g.degree(v) {
            continue;
        }
        for j in 0..next {
            if g.has_edge(next, j) != g.has_edge(v, mapping[j]) {
                continue 'candidates;
            }
        }
        mapping[next] = v;
        used[v] = true;
        enumerate_rec(g, next + 1, mapping, used, out)?;
        mapping[next] = usize::MAX;
        used[v] = false;
    }
    Ok(())
}

/// Automorphism group order of a disjoint union: over every class of
/// isomorphic components, `m! * |Aut(C)|^m`. Each component must fit the
/// exact-search cap, the whole graph need not.
pub fn aut_order_by_components(g: &Graph) -> Result<BigUint> {
    let decomp = connected_components(g)?;
    let mut acc = BigUint::one();
    for class in &decomp.iso_classes {
        let m = class.multiplicity();
        let comp_gens = automorphism_generators(&class.representative)?;
        let comp_order = crate::perm::schreier_sims(&comp_gens).order();
        let mut factorial = BigUint::one();
        for k in 2..=m {
            factorial *= BigUint::from(k);
        }
        acc *= factorial * comp_order.pow(m as u32);
    }
    Ok(acc)
}

/// Group order from the generator search, as a plain helper.
pub fn aut_order(g: &Graph) -> Result<BigUint> {
    Ok(crate::perm::schreier_sims(&automorphism_generators(g)?).order())
}
