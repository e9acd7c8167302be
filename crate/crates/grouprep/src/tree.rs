//! Trees: canonical codes, automorphism generators, orbit subtrees, rooting,
//! and the wreath decomposition of the automorphism group.
//!
//! Rooted subtrees are compared through AHU-style canonical codes: the code
//! of a vertex brackets the sorted codes of its children, so two codes are
//! equal exactly when the rooted subtrees are isomorphic. Automorphism
//! generators come from swapping equal-code sibling subtrees, rooted at the
//! tree center (plus the halves flip when the center is an edge).

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{GenSet, Permutation};

/// A rooted tree on vertices `0..n` stored as a parent array with
/// `parent[root] == root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    n: usize,
    parent: Vec<usize>,
    root: usize,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn from_parents(parent: Vec<usize>, root: usize) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::NotATree("empty vertex set".into()));
        }
        if root >= n || parent[root] != root {
            return Err(Error::NotATree(format!("vertex {root} is not a root")));
        }
        let mut children = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            if p >= n {
                return Err(Error::NotATree(format!("parent {p} of {v} out of range")));
            }
            if v != root {
                if p == v {
                    return Err(Error::NotATree(format!("vertex {v} is its own parent")));
                }
                children[p].push(v);
            }
        }
        // Every vertex must reach the root without cycles.
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        for start in 0..n {
            let mut path = Vec::new();
            let mut cur = start;
            while depth[cur] == usize::MAX {
                path.push(cur);
                cur = parent[cur];
                if path.len() > n {
                    return Err(Error::NotATree("parent links contain a cycle".into()));
                }
            }
            let mut d = depth[cur];
            for &v in path.iter().rev() {
                d += 1;
                depth[v] = d;
            }
        }
        Ok(RootedTree {
            n,
            parent,
            root,
            children,
        })
    }

    /// Roots an (unrooted) tree graph at `root`.
    pub fn from_graph(g: &Graph, root: usize) -> Result<Self> {
        check_tree(g)?;
        if root >= g.vertex_count() {
            return Err(Error::NotATree(format!("root {root} out of range")));
        }
        let n = g.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[root] = root;
        let mut queue = VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        RootedTree::from_parents(parent, root)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Children in ascending vertex order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::new();
        queue.push_back(self.root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &c in &self.children[v] {
                queue.push_back(c);
            }
        }
        order
    }

    /// Canonical code of every vertex's subtree.
    pub fn ahu_codes(&self) -> Vec<String> {
        let mut codes = vec![String::new(); self.n];
        for &v in self.bfs_order().iter().rev() {
            let mut child_codes: Vec<&str> = self.children[v]
                .iter()
                .map(|&c| codes[c].as_str())
                .collect();
            child_codes.sort_unstable();
            let mut code =
                String::with_capacity(2 + child_codes.iter().map(|c| c.len()).sum::<usize>());
            code.push('(');
            for c in child_codes {
                code.push_str(c);
            }
            code.push(')');
            codes[v] = code;
        }
        codes
    }

    /// Canonical code of the subtree rooted at `v`; equal codes mean
    /// isomorphic rooted subtrees.
    pub fn ahu_code(&self, v: usize) -> Result<String> {
        if v >= self.n {
            return Err(Error::NotATree(format!("vertex {v} out of range")));
        }
        Ok(self.ahu_codes().swap_remove(v))
    }

    /// The subtree rooted at `v`, re-indexed over its own sorted vertex set.
    pub fn extract_subtree(&self, v: usize) -> RootedTree {
        let mut verts = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            verts.push(u);
            stack.extend_from_slice(&self.children[u]);
        }
        verts.sort_unstable();
        let mut index = vec![usize::MAX; self.n];
        for (k, &u) in verts.iter().enumerate() {
            index[u] = k;
        }
        let mut parent = vec![0usize; verts.len()];
        for &u in &verts {
            parent[index[u]] = if u == v {
                index[v]
            } else {
                index[self.parent[u]]
            };
        }
        RootedTree::from_parents(parent, index[v]).expect("subtree of a valid tree")
    }

    /// Underlying unrooted graph of the tree.
    pub fn underlying_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .filter(|&v| v != self.root)
            .map(|v| (v, self.parent[v]))
            .collect();
        Graph::new(self.n, &edges).expect("tree edges form a simple graph")
    }
}

/// Checks connectivity and the edge count of a tree.
pub fn check_tree(g: &Graph) -> Result<()> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("empty vertex set".into()));
    }
    if g.edge_count() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {n} vertices, expected {}",
            g.edge_count(),
            n - 1
        )));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    Ok(())
}

/// The 1- or 2-element center of a tree, by leaf peeling.
pub fn center(g: &Graph) -> Result<Vec<usize>> {
    check_tree(g)?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok(vec![0]);
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut alive = n;
    while alive - layer.len() >= 1 && alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        alive -= layer.len();
        for &v in &layer {
            for &w in g.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
        if alive <= 2 {
            break;
        }
    }
    let mut centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers.sort_unstable();
    Ok(centers)
}

/// A tree rooted at a chosen vertex, possibly restricted to the half away
/// from an excluded neighbor; children are sorted by (code, index) so that
/// equal-code siblings sit next to each other.
struct RootedView {
    root: usize,
    children: Vec<Vec<usize>>,
    code: Vec<String>,
}

impl RootedView {
    fn build(g: &Graph, root: usize, exclude: Option<usize>) -> RootedView {
        let n = g.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![root];
        parent[root] = root;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if parent[w] == usize::MAX && Some(w) != exclude.filter(|_| v == root) {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        let mut children = vec![Vec::new(); n];
        for &v in &order {
            if v != root {
                children[parent[v]].push(v);
            }
        }
        let mut code = vec![String::new(); n];
        for &v in order.iter().rev() {
            let mut child_codes: Vec<&str> =
                children[v].iter().map(|&c| code[c].as_str()).collect();
            child_codes.sort_unstable();
            let mut s = String::from("(");
            for c in child_codes {
                s.push_str(c);
            }
            s.push(')');
            code[v] = s;
        }
        for v in 0..n {
            let codes = &code;
            children[v].sort_by(|&a, &b| codes[a].cmp(&codes[b]).then(a.cmp(&b)));
        }
        RootedView {
            root,
            children,
            code,
        }
    }

    /// Writes the canonical pairing of the (isomorphic) subtrees at `a` in
    /// `self` and `b` in `other` into `images`, in both directions.
    fn pair_into(&self, a: usize, other: &RootedView, b: usize, images: &mut [usize]) {
        debug_assert_eq!(self.code[a], other.code[b]);
        images[a] = b;
        images[b] = a;
        for (&ca, &cb) in self.children[a].iter().zip(other.children[b].iter()) {
            self.pair_into(ca, other, cb, images);
        }
    }
}

/// Generators of the automorphism group of a tree: for every vertex of the
/// center-rooted tree, one swap per adjacent pair of equal-code child
/// subtrees; for an edge center with isomorphic halves, additionally the
/// flip exchanging the halves.
pub fn tree_aut_generators(g: &Graph) -> Result<GenSet> {
    check_tree(g)?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok(GenSet::trivial(1));
    }
    let centers = center(g)?;
    let mut gens: Vec<Permutation> = Vec::new();
    match centers.as_slice() {
        [c] => {
            let view = RootedView::build(g, *c, None);
            collect_sibling_swaps(&view, n, &mut gens);
        }
        [c1, c2] => {
            let half1 = RootedView::build(g, *c1, Some(*c2));
            let half2 = RootedView::build(g, *c2, Some(*c1));
            collect_sibling_swaps(&half1, n, &mut gens);
            collect_sibling_swaps(&half2, n, &mut gens);
            if half1.code[*c1] == half2.code[*c2] {
                let mut images: Vec<usize> = (0..n).collect();
                half1.pair_into(*c1, &half2, *c2, &mut images);
                gens.push(Permutation::from_images(images).expect("pairing is a bijection"));
            }
        }
        _ => unreachable!("tree center has one or two vertices"),
    }
    GenSet::new(n, gens)
}

fn collect_sibling_swaps(view: &RootedView, n: usize, gens: &mut Vec<Permutation>) {
    let mut order = vec![view.root];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        order.extend_from_slice(&view.children[v]);
        let kids = &view.children[v];
        for pair in kids.windows(2) {
            if view.code[pair[0]] == view.code[pair[1]] {
                let mut images: Vec<usize> = (0..n).collect();
                view.pair_into(pair[0], view, pair[1], &mut images);
                gens.push(Permutation::from_images(images).expect("pairing is a bijection"));
            }
        }
    }
}

/// Orbits of the vertex set under the automorphism group of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Blocks sorted by smallest member; members sorted.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, v: usize) -> Option<&[usize]> {
        self.orbits
            .iter()
            .find(|block| block.binary_search(&v).is_ok())
            .map(|block| block.as_slice())
    }
}

/// Orbit partition by transitive closure over the tree automorphism
/// generators.
pub fn aut_orbits(g: &Graph) -> Result<OrbitPartition> {
    let gens = tree_aut_generators(g)?;
    Ok(OrbitPartition {
        orbits: crate::perm::orbits(&gens),
    })
}

/// The minimal subtree spanned by an orbit: all vertices and edges on paths
/// between orbit members, in original vertex labels plus a re-indexed copy.
#[derive(Clone, Debug)]
pub struct OrbitSubtree {
    /// Original vertex labels, sorted; `graph` vertex `k` is `vertices[k]`.
    pub vertices: Vec<usize>,
    /// Edges in original labels.
    pub edges: Vec<(usize, usize)>,
    /// The subtree re-indexed over `0..vertices.len()`.
    pub graph: Graph,
}

impl OrbitSubtree {
    /// Leaves of the subtree in original labels; a single vertex counts as a
    /// leaf of its one-vertex subtree.
    pub fn leaves(&self) -> Vec<usize> {
        if self.vertices.len() == 1 {
            return self.vertices.clone();
        }
        (0..self.vertices.len())
            .filter(|&k| self.graph.degree(k) == 1)
            .map(|k| self.vertices[k])
            .collect()
    }
}

/// Builds the orbit subtree for `delta`, which must be exactly an orbit of
/// the automorphism group. Non-orbit leaves are peeled until only the paths
/// between orbit members remain.
pub fn orbit_subtree(g: &Graph, delta: &[usize]) -> Result<OrbitSubtree> {
    check_tree(g)?;
    let n = g.vertex_count();
    let mut sorted: Vec<usize> = delta.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let partition = aut_orbits(g)?;
    if !partition.orbits().contains(&sorted) {
        return Err(Error::NotAnOrbit);
    }
    let mut in_delta = vec![false; n];
    for &v in &sorted {
        in_delta[v] = true;
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] <= 1 && !in_delta[v]).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] || deg[v] > 1 || in_delta[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !in_delta[w] {
                    queue.push_back(w);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| alive[u] && alive[v])
        .collect();
    let (graph, _) = g.induced_subgraph(&vertices)?;
    Ok(OrbitSubtree {
        vertices,
        edges,
        graph,
    })
}

/// How a tree was rooted: at a vertex fixed by every automorphism, or at a
/// fresh vertex subdividing the fixed edge of a 2-element orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootProvenance {
    FixedVertex {
        vertex: usize,
    },
    DummyEdgeRoot {
        alpha: usize,
        beta: usize,
        root: usize,
    },
}

/// Roots a tree without changing its automorphism group: at the smallest
/// vertex forming a singleton orbit when one exists, else at a new vertex
/// subdividing the edge of the smallest 2-element adjacent orbit.
pub fn root_tree(g: &Graph) -> Result<(RootedTree, RootProvenance)> {
    check_tree(g)?;
    let partition = aut_orbits(g)?;
    if let Some(v) = partition
        .orbits()
        .iter()
        .filter(|block| block.len() == 1)
        .map(|block| block[0])
        .min()
    {
        return Ok((
            RootedTree::from_graph(g, v)?,
            RootProvenance::FixedVertex { vertex: v },
        ));
    }
    let pair = partition
        .orbits()
        .iter()
        .find(|block| block.len() == 2 && g.has_edge(block[0], block[1]));
    let Some(pair) = pair else {
        return Err(Error::NoAnchor);
    };
    let (alpha, beta) = (pair[0], pair[1]);
    let n = g.vertex_count();
    let gamma = n;
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| (u, v) != (alpha, beta))
        .collect();
    edges.push((alpha, gamma));
    edges.push((beta, gamma));
    let subdivided = Graph::new(n + 1, &edges)?;
    Ok((
        RootedTree::from_graph(&subdivided, gamma)?,
        RootProvenance::DummyEdgeRoot {
            alpha,
            beta,
            root: gamma,
        },
    ))
}

/// One class of isomorphic child subtrees below the root.
#[derive(Clone, Debug)]
pub struct WreathClass {
    /// Number of children in the class.
    pub multiplicity: usize,
    /// Shared canonical code of the class members.
    pub code: String,
    /// Extracted representative subtree (the smallest child).
    pub rep: RootedTree,
}

impl WreathClass {
    /// Automorphism group order of the representative subtree.
    pub fn aut_order(&self) -> BigUint {
        wreath_aut_order(&self.rep)
    }
}

/// The root-level decomposition data: child subtrees grouped by isomorphism
/// class, in lexicographic code order. The automorphism group of the tree is
/// the direct product over classes of the wreath-type groups on `k_i`
/// interchangeable copies.
#[derive(Clone, Debug)]
pub struct WreathDecomposition {
    pub classes: Vec<WreathClass>,
}

impl WreathDecomposition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.multiplicity).collect()
    }
}

/// Groups the root's child subtrees by canonical code.
pub fn child_partition(t: &RootedTree) -> WreathDecomposition {
    let codes = t.ahu_codes();
    let mut by_code: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for &c in t.children(t.root()) {
        by_code.entry(codes[c].as_str()).or_default().push(c);
    }
    let classes = by_code
        .into_iter()
        .map(|(code, members)| WreathClass {
            multiplicity: members.len(),
            code: code.to_string(),
            rep: t.extract_subtree(members[0]),
        })
        .collect();
    WreathDecomposition { classes }
}

/// Automorphism group order of a rooted tree by the product formula: over
/// the child classes, `k_i! * |A_i|^{k_i}`, recursively.
pub fn wreath_aut_order(t: &RootedTree) -> BigUint {
    let mut memo: HashMap<String, BigUint> = HashMap::new();
    wreath_order_memo(t, &mut memo)
}

fn wreath_order_memo(t: &RootedTree, memo: &mut HashMap<String, BigUint>) -> BigUint {
    if t.vertex_count() == 1 {
        return BigUint::one();
    }
    let key = t.ahu_codes().swap_remove(t.root());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = BigUint::one();
    for class in child_partition(t).classes {
        let sub = wreath_order_memo(&class.rep, memo);
        let mut factorial = BigUint::one();
        for k in 2..=class.multiplicity {
            factorial *= BigUint::from(k);
        }
        acc *= factorial * sub.pow(class.multiplicity as u32);
    }
    memo.insert(key, acc.clone());
    acc
}

/// Canonical code of an unrooted tree: the code at the center vertex, or the
/// sorted pair of half codes when the center is an edge. Equal codes mean
/// isomorphic trees.
pub fn canonical_free_code(g: &Graph) -> Result<String> {
    let centers = center(g)?;
    match centers.as_slice() {
        [c] => {
            let view = RootedView::build(g, *c, None);
            Ok(format!("v{}", view.code[*c]))
        }
        [c1, c2] => {
            let half1 = RootedView::build(g, *c1, Some(*c2));
            let half2 = RootedView::build(g, *c2, Some(*c1));
            let mut pair = [half1.code[*c1].as_str(), half2.code[*c2].as_str()];
            pair.sort_unstable();
            Ok(format!("e{}|{}", pair[0], pair[1]))
        }
        _ => unreachable!("tree center has one or two vertices"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{aut_order, enumerate_automorphisms};
    use crate::perm::schreier_sims;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn rooted(parents: &[usize], root: usize) -> RootedTree {
        RootedTree::from_parents(parents.to_vec(), root).unwrap()
    }

    #[test]
    fn rooted_tree_validation() {
        assert!(RootedTree::from_parents(vec![0, 0, 1], 0).is_ok());
        assert!(RootedTree::from_parents(vec![1, 0], 0).is_err()); // root not self-parented
        assert!(RootedTree::from_parents(vec![0, 2, 1], 0).is_err()); // cycle
    }

    #[test]
    fn ahu_leaf_code() {
        let t = rooted(&[0], 0);
        assert_eq!(t.ahu_code(0).unwrap(), "()");
    }

    #[test]
    fn ahu_codes_invariant_under_relabeling() {
        // Root with two leaves, two labelings.
        let a = rooted(&[0, 0, 0], 0);
        let b = rooted(&[1, 1, 1], 1);
        assert_eq!(a.ahu_code(0).unwrap(), b.ahu_code(1).unwrap());
    }

    #[test]
    fn ahu_distinguishes_root_position() {
        let p3 = Graph::path(3);
        let at_end = RootedTree::from_graph(&p3, 0).unwrap();
        let at_center = RootedTree::from_graph(&p3, 1).unwrap();
        assert_ne!(at_end.ahu_code(0).unwrap(), at_center.ahu_code(1).unwrap());
    }

    #[test]
    fn centers_of_small_trees() {
        assert_eq!(center(&Graph::path(2)).unwrap(), vec![0, 1]);
        assert_eq!(center(&Graph::path(3)).unwrap(), vec![1]);
        assert_eq!(center(&Graph::path(4)).unwrap(), vec![1, 2]);
        assert_eq!(center(&star(4)).unwrap(), vec![0]);
        assert_eq!(center(&Graph::new(1, &[]).unwrap()).unwrap(), vec![0]);
    }

    #[test]
    fn tree_aut_orders_match_enumeration() {
        let cases = vec![
            (Graph::path(4), 2usize),
            (star(4), 24),
            // Double star: centers 0-1, two leaves each; halves isomorphic.
            (
                Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap(),
                8,
            ),
            (Graph::path(2), 2),
            (Graph::new(1, &[]).unwrap(), 1),
        ];
        for (g, expected) in cases {
            let gens = tree_aut_generators(&g).unwrap();
            assert_eq!(schreier_sims(&gens).order(), BigUint::from(expected));
            assert_eq!(enumerate_automorphisms(&g).unwrap().len(), expected);
        }
    }

    #[test]
    fn double_stars_have_order_8() {
        // Edge-center form: hubs 0-1 adjacent, two leaves each.
        let direct = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(aut_order(&direct).unwrap(), BigUint::from(8u32));
        // Vertex-center form on 7 vertices: hubs joined through a middle
        // vertex; swap within each half and flip the isomorphic halves,
        // 2 * 2 * 2 = 8.
        let via_middle = Graph::new(7, &[(0, 6), (1, 6), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let gens = tree_aut_generators(&via_middle).unwrap();
        assert_eq!(schreier_sims(&gens).order(), BigUint::from(8u32));
        assert_eq!(enumerate_automorphisms(&via_middle).unwrap().len(), 8);
    }

    #[test]
    fn tree_aut_rejects_non_trees() {
        assert!(tree_aut_generators(&Graph::cycle(4).unwrap()).is_err());
        let (forest, _) = crate::graph::disjoint_union(&[Graph::path(2), Graph::path(2)]).unwrap();
        assert!(tree_aut_generators(&forest).is_err());
    }

    #[test]
    fn orbits_of_small_trees() {
        let p = aut_orbits(&star(3)).unwrap();
        assert_eq!(p.orbits(), &[vec![0], vec![1, 2, 3]]);

        let p = aut_orbits(&Graph::path(2)).unwrap();
        assert_eq!(p.orbits(), &[vec![0, 1]]);

        let p = aut_orbits(&Graph::path(3)).unwrap();
        assert_eq!(p.orbits(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn orbit_subtrees() {
        // Endpoint orbit of P3 spans the whole path.
        let p3 = Graph::path(3);
        let sub = orbit_subtree(&p3, &[0, 2]).unwrap();
        assert_eq!(sub.vertices, vec![0, 1, 2]);
        assert_eq!(sub.leaves(), vec![0, 2]);

        // Leaf orbit of the star spans the whole star.
        let s3 = star(3);
        let sub = orbit_subtree(&s3, &[1, 2, 3]).unwrap();
        assert_eq!(sub.vertices, vec![0, 1, 2, 3]);
        assert_eq!(sub.leaves(), vec![1, 2, 3]);

        // Singleton orbit: just the vertex.
        let sub = orbit_subtree(&p3, &[1]).unwrap();
        assert_eq!(sub.vertices, vec![1]);
        assert!(sub.edges.is_empty());
        assert_eq!(sub.leaves(), vec![1]);

        assert!(matches!(
            orbit_subtree(&p3, &[0, 1]),
            Err(Error::NotAnOrbit)
        ));
    }

    #[test]
    fn orbit_subtree_nesting() {
        // Every vertex orbit inside T_delta spans a subtree of T_delta.
        for g in [
            Graph::path(5),
            star(4),
            Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap(),
        ] {
            let partition = aut_orbits(&g).unwrap();
            for delta in partition.orbits() {
                let outer = orbit_subtree(&g, delta).unwrap();
                for &v in &outer.vertices {
                    let sigma = partition.orbit_of(v).unwrap();
                    let inner = orbit_subtree(&g, sigma).unwrap();
                    assert!(inner.vertices.iter().all(|x| outer.vertices.contains(x)));
                    assert!(inner.edges.iter().all(|e| outer.edges.contains(e)));
                }
            }
        }
    }

    #[test]
    fn rooting_cases() {
        let (t, prov) = root_tree(&Graph::path(3)).unwrap();
        assert_eq!(t.root(), 1);
        assert_eq!(prov, RootProvenance::FixedVertex { vertex: 1 });

        let (t, prov) = root_tree(&Graph::path(2)).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(
            prov,
            RootProvenance::DummyEdgeRoot {
                alpha: 0,
                beta: 1,
                root: 2
            }
        );

        let (t, prov) = root_tree(&star(5)).unwrap();
        assert_eq!(t.root(), 0);
        assert_eq!(prov, RootProvenance::FixedVertex { vertex: 0 });
    }

    #[test]
    fn rooting_preserves_aut_order() {
        for g in [
            Graph::path(2),
            Graph::path(4),
            Graph::path(7),
            star(4),
            Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap(),
        ] {
            let before = aut_order(&g).unwrap();
            let (t, _) = root_tree(&g).unwrap();
            let after = aut_order(&t.underlying_graph()).unwrap();
            assert_eq!(before, after);
        }
    }

    #[test]
    fn child_partition_cases() {
        let (t, _) = root_tree(&star(4)).unwrap();
        let wd = child_partition(&t);
        assert_eq!(wd.class_count(), 1);
        assert_eq!(wd.classes[0].multiplicity, 4);
        assert_eq!(wd.classes[0].rep.vertex_count(), 1);

        // Root 0 with children 1, 2 (leaves) and 3 (chain of two).
        // Classes come in lexicographic code order: "(())" before "()".
        let t = rooted(&[0, 0, 0, 0, 3], 0);
        let wd = child_partition(&t);
        assert_eq!(wd.class_count(), 2);
        assert_eq!(wd.multiplicities(), vec![1, 2]);
        assert_eq!(wd.classes[0].code, "(())");
        assert_eq!(wd.classes[1].code, "()");

        let single = rooted(&[0], 0);
        assert_eq!(child_partition(&single).class_count(), 0);
    }

    #[test]
    fn wreath_order_examples() {
        let (t, _) = root_tree(&star(4)).unwrap();
        assert_eq!(wreath_aut_order(&t), BigUint::from(24u32));

        let single = rooted(&[0], 0);
        assert_eq!(wreath_aut_order(&single), BigUint::one());

        let p3 = RootedTree::from_graph(&Graph::path(3), 1).unwrap();
        assert_eq!(wreath_aut_order(&p3), BigUint::from(2u32));
    }

    #[test]
    fn wreath_order_matches_search_small() {
        for g in [
            Graph::path(5),
            Graph::path(6),
            star(5),
            Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap(),
            Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap(),
        ] {
            let (t, _) = root_tree(&g).unwrap();
            assert_eq!(wreath_aut_order(&t), aut_order(&g).unwrap());
        }
    }

    #[test]
    fn canonical_code_separates_and_unifies() {
        let p4a = Graph::path(4);
        let p4b = Graph::new(4, &[(3, 1), (1, 0), (0, 2)]).unwrap(); // relabeled path
        assert_eq!(
            canonical_free_code(&p4a).unwrap(),
            canonical_free_code(&p4b).unwrap()
        );
        // P5 (vertex center, two 2-chains) vs the P4 subdivision shape they
        // must not collide with.
        let p5 = Graph::path(5);
        assert_ne!(
            canonical_free_code(&p5).unwrap(),
            canonical_free_code(&p4a).unwrap()
        );
        assert_ne!(
            canonical_free_code(&star(3)).unwrap(),
            canonical_free_code(&Graph::path(4)).unwrap()
        );
    }
}
