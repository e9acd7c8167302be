//! Decision procedures for group representability.
//!
//! A group is representable on a graph when some nontrivial homomorphism into
//! the graph's automorphism group exists. Three exact procedures live here,
//! next to a brute-force search oracle used as ground truth in the test
//! suites:
//!
//! - [`reduce_gi_to_abelian`]: turns an isomorphism question about two
//!   connected `n`-vertex graphs into representability of a prime-order
//!   cyclic group on a `p * n`-vertex disjoint union.
//! - [`decide_solvable_rep`]: a solvable group is representable on `X`
//!   exactly when `#(G/G')` and `#Aut(X)` share a prime factor.
//! - [`decide_tree_rep`]: recursive decision over the rooted tree's child
//!   classes, querying nontrivial homomorphisms into symmetric groups
//!   ([`decide_perm_rep`]).

use std::borrow::Cow;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{aut_order_by_components, enumerate_automorphisms, Graph};
use crate::perm::{commutator_gens, schreier_sims, GenSet, Permutation};
use crate::table::TableGroup;
use crate::tree::{check_tree, child_partition, root_tree, RootedTree};

/// Order cap when materializing a permutation group as a table.
pub const TABLE_CONVERSION_CAP: usize = 2000;
/// Cap on `n` for the nontrivial-homomorphism-into-`S_n` search.
pub const PERM_REP_DEGREE_CAP: usize = 9;

/// A group, presented either by a multiplication table or as a permutation
/// group via generators.
#[derive(Clone, Debug)]
pub enum GroupInput {
    Table(TableGroup),
    Perm(GenSet),
}

impl GroupInput {
    /// Multiplication table of the group; permutation presentations are
    /// materialized by breadth-first closure from the identity (element 0),
    /// refusing orders above [`TABLE_CONVERSION_CAP`].
    pub fn to_table(&self) -> Result<Cow<'_, TableGroup>> {
        match self {
            GroupInput::Table(t) => Ok(Cow::Borrowed(t)),
            GroupInput::Perm(gs) => Ok(Cow::Owned(materialize_perm_group(gs)?.0)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GroupInput::Table(t) => format!("table group of order {}", t.order()),
            GroupInput::Perm(gs) => format!(
                "permutation group on {} points with {} generators",
                gs.degree(),
                gs.gens().len()
            ),
        }
    }
}

/// Deterministic element enumeration of a permutation group plus its table.
fn materialize_perm_group(gs: &GenSet) -> Result<(TableGroup, Vec<Permutation>)> {
    let mut elements = vec![Permutation::identity(gs.degree())];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let cur = elements[head].clone();
        head += 1;
        for g in gs.gens() {
            let next = cur.compose(g).expect("equal degrees");
            if !index.contains_key(&next) {
                if elements.len() >= TABLE_CONVERSION_CAP {
                    return Err(Error::CapExceeded {
                        what: "permutation group order for table conversion",
                        limit: TABLE_CONVERSION_CAP,
                        actual: elements.len() + 1,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    let n = elements.len();
    let mut rows = vec![vec![0usize; n]; n];
    for (i, p) in elements.iter().enumerate() {
        for (j, q) in elements.iter().enumerate() {
            rows[i][j] = index[&p.compose(q).expect("equal degrees")];
        }
    }
    Ok((TableGroup::validate_table(&rows)?, elements))
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Common-prime-factor criterion for solvable groups.
    PrimeFactor,
    /// Recursive decision over a rooted tree's child classes.
    RecursiveTree,
    /// Exhaustive homomorphism search into an enumerated automorphism group.
    OracleSearch,
    /// Homomorphism search into a symmetric group.
    StarReduction,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::PrimeFactor => "prime_factor",
            Method::RecursiveTree => "recursive_tree",
            Method::OracleSearch => "oracle_search",
            Method::StarReduction => "star_reduction",
        }
    }
}

/// A nontrivial homomorphism given by images of a generating sequence.
/// Indices refer to elements of the group's (materialized) table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomWitness {
    pub generator_images: Vec<(usize, Permutation)>,
}

/// Outcome of a representability decision.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub representable: bool,
    pub witness: Option<HomWitness>,
    pub method: Method,
}

/// Tree decision plus the number of distinct recursive calls performed.
#[derive(Clone, Debug)]
pub struct TreeDecision {
    pub verdict: Verdict,
    pub recursive_calls: usize,
}

/// Which input graph a component of the reduction output copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopySource {
    X,
    Y,
}

#[derive(Clone, Debug)]
pub struct ComponentProvenance {
    pub component: usize,
    pub source: CopySource,
    pub offset: usize,
}

/// Output of the isomorphism-to-representability reduction: `z` is the
/// disjoint union of `p - 1` copies of (possibly complemented) `x` and one
/// copy of `y`, and `group` is the cyclic table of prime order `p`.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub z: Graph,
    pub p: usize,
    pub group: TableGroup,
    pub provenance: Vec<ComponentProvenance>,
    pub complemented: bool,
}

/// Result of [`reduce_gi_to_abelian`]: either the constructed instance or an
/// answer that needed no construction.
#[derive(Clone, Debug)]
pub enum GiReduction {
    Reduced(ReductionOutput),
    /// The isomorphism question was settled structurally: unequal vertex
    /// counts or mismatched connectivity profiles (not isomorphic), or the
    /// one-vertex case (isomorphic; no prime exists strictly between 1 and 2).
    ShortCircuit {
        isomorphic: bool,
    },
}

/// Smallest prime `p` with `n < p < 2n` (exists for every `n >= 2`).
fn smallest_prime_between(n: usize) -> usize {
    let limit = 2 * n;
    let mut composite = vec![false; limit + 1];
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        if i > n && i < limit {
            return i;
        }
        let mut k = i * i;
        while k <= limit {
            composite[k] = true;
            k += i;
        }
    }
    unreachable!("a prime strictly between n and 2n exists for n >= 2")
}

/// Builds the representability instance equivalent to "are `x` and `y`
/// isomorphic": the smallest prime `n < p < 2n` is chosen, and `z` is the
/// disjoint union of `p - 1` copies of `x` and one copy of `y`. Disconnected
/// inputs are replaced by their complements first.
pub fn reduce_gi_to_abelian(x: &Graph, y: &Graph) -> Result<GiReduction> {
    if x.vertex_count() == 0 || y.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if x.vertex_count() != y.vertex_count() {
        return Ok(GiReduction::ShortCircuit { isomorphic: false });
    }
    let n = x.vertex_count();
    if n == 1 {
        return Ok(GiReduction::ShortCircuit { isomorphic: true });
    }
    let (xc, yc, complemented) = match (x.is_connected(), y.is_connected()) {
        (true, true) => (x.clone(), y.clone(), false),
        (false, false) => {
            let (xc, yc) = (x.complement(), y.complement());
            debug_assert!(xc.is_connected() && yc.is_connected());
            (xc, yc, true)
        }
        // Connectivity differs, so the graphs cannot be isomorphic, and the
        // construction has no pair of connected representatives to copy.
        _ => return Ok(GiReduction::ShortCircuit { isomorphic: false }),
    };
    let p = smallest_prime_between(n);
    let mut parts = vec![xc; p - 1];
    parts.push(yc);
    let (z, offsets) = crate::graph::disjoint_union(&parts)?;
    let provenance = offsets
        .iter()
        .enumerate()
        .map(|(i, &offset)| ComponentProvenance {
            component: i,
            source: if i + 1 < p {
                CopySource::X
            } else {
                CopySource::Y
            },
            offset,
        })
        .collect();
    Ok(GiReduction::Reduced(ReductionOutput {
        z,
        p,
        group: TableGroup::cyclic(p).expect("p < 2n stays within the cyclic cap"),
        provenance,
        complemented,
    }))
}

/// Decides representability of a solvable group on a graph: the orders of
/// `G/G'` and `Aut(X)` must share a prime factor. Errors on non-solvable
/// input. No witness is produced.
pub fn decide_solvable_rep(g: &GroupInput, x: &Graph) -> Result<Verdict> {
    let quotient_order: BigUint = match g {
        GroupInput::Table(t) => {
            if !t.is_solvable() {
                return Err(Error::NotSolvable);
            }
            BigUint::from(t.abelianization_order())
        }
        GroupInput::Perm(gs) => {
            if !crate::perm::is_solvable_perm(gs) {
                return Err(Error::NotSolvable);
            }
            let whole = schreier_sims(gs).order();
            let derived = schreier_sims(&commutator_gens(gs)).order();
            whole / derived
        }
    };
    let aut = aut_order_by_components(x)?;
    let representable = quotient_order.gcd(&aut) > BigUint::one();
    Ok(Verdict {
        representable,
        witness: None,
        method: Method::PrimeFactor,
    })
}

/// Star graph: hub vertex 0 adjacent to leaves `1..=n`.
pub fn star_tree(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("star needs at least one leaf".into()));
    }
    let edges: Vec<(usize, usize)> = (1..=n).map(|v| (0, v)).collect();
    Graph::new(n + 1, &edges)
}

/// Decides whether a nontrivial homomorphism from the group into `S_n`
/// exists, by backtracking over images of a minimal generating sequence.
/// The image of the first generator ranges over cycle-type representatives
/// only (any homomorphism can be conjugated to such a form); image orders
/// must divide the source element orders; the homomorphism law is verified
/// by closing the table.
pub fn decide_perm_rep(g: &GroupInput, n: usize) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::BadParameter(
            "symmetric group degree must be positive".into(),
        ));
    }
    if n > PERM_REP_DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: "symmetric group degree",
            limit: PERM_REP_DEGREE_CAP,
            actual: n,
        });
    }
    let table = g.to_table()?;
    let found = perm_rep_search(&table, n)?;
    Ok(Verdict {
        representable: found.is_some(),
        witness: found,
        method: Method::StarReduction,
    })
}

fn perm_rep_search(table: &TableGroup, n: usize) -> Result<Option<HomWitness>> {
    if table.order() == 1 || n == 1 {
        return Ok(None);
    }
    let gens = table.minimal_generating_sequence();
    let all_perms: Vec<Permutation> = crate::perm::permutations_lex(n)
        .into_iter()
        .map(|v| Permutation::from_images(v).expect("lex tables are bijections"))
        .collect();
    let mut candidates: Vec<Vec<Permutation>> = Vec::with_capacity(gens.len());
    for (pos, &gen) in gens.iter().enumerate() {
        let d = table.element_order(gen);
        let pool: Vec<Permutation> = if pos == 0 {
            cycle_type_representatives(n)
        } else {
            all_perms.clone()
        };
        candidates.push(
            pool.into_iter()
                .filter(|p| d % perm_order_usize(p) == 0)
                .collect(),
        );
    }
    Ok(search_hom(table, &gens, n, &candidates))
}

fn perm_order_usize(p: &Permutation) -> usize {
    p.cycle_lengths()
        .into_iter()
        .fold(1usize, |acc, l| acc.lcm(&l))
}

/// One representative permutation per cycle type of `S_n`, cycles laid out
/// over consecutive points, partitions in descending lexicographic order
/// (identity last).
fn cycle_type_representatives(n: usize) -> Vec<Permutation> {
    let mut parts: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    fn rec(
        n: usize,
        max: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
        degree: usize,
    ) {
        if n == 0 {
            let mut cycles = Vec::new();
            let mut next = 0usize;
            for &len in parts.iter() {
                cycles.push((next..next + len).collect::<Vec<usize>>());
                next += len;
            }
            out.push(Permutation::from_cycles(degree, &cycles).expect("consecutive cycles"));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            parts.push(first);
            rec(n - first, first, parts, out, degree);
            parts.pop();
        }
    }
    rec(n, n, &mut parts, &mut out, n);
    out
}

/// Elements of the subgroup generated by a prefix of the generating
/// sequence, with the breadth-first edges that discovered them.
struct ClosureLevel {
    elements: Vec<usize>,
    /// `(element, parent, generator position)`, in discovery order.
    discovery: Vec<(usize, usize, usize)>,
}

fn closure_level(table: &TableGroup, gens: &[usize]) -> ClosureLevel {
    let mut visited = vec![false; table.order()];
    visited[0] = true;
    let mut elements = vec![0usize];
    let mut discovery = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let e = elements[head];
        head += 1;
        for (pos, &g) in gens.iter().enumerate() {
            let prod = table.mul(e, g);
            if !visited[prod] {
                visited[prod] = true;
                elements.push(prod);
                discovery.push((prod, e, pos));
            }
        }
    }
    ClosureLevel {
        elements,
        discovery,
    }
}

/// Checks that the partial assignment `images` extends to a homomorphism on
/// the subgroup generated by the assigned prefix, by rebuilding the map over
/// the closure and verifying every generator edge.
fn prefix_consistent(
    table: &TableGroup,
    gens: &[usize],
    level: &ClosureLevel,
    images: &[Permutation],
    degree: usize,
) -> bool {
    let mut phi: Vec<Option<Permutation>> = vec![None; table.order()];
    phi[0] = Some(Permutation::identity(degree));
    for &(elem, parent, pos) in &level.discovery {
        let img = phi[parent]
            .as_ref()
            .expect("discovery order")
            .compose(&images[pos])
            .expect("equal degrees");
        phi[elem] = Some(img);
    }
    for &e in &level.elements {
        let phi_e = phi[e].as_ref().expect("closure covered");
        for (pos, &g) in gens.iter().enumerate().take(images.len()) {
            let target = table.mul(e, g);
            let expected = phi_e.compose(&images[pos]).expect("equal degrees");
            if phi[target].as_ref() != Some(&expected) {
                return false;
            }
        }
    }
    true
}

/// Backtracking search for a nontrivial homomorphism sending `gens[j]` to
/// some member of `candidates[j]`. Returns the first witness in candidate
/// order, or `None`.
fn search_hom(
    table: &TableGroup,
    gens: &[usize],
    degree: usize,
    candidates: &[Vec<Permutation>],
) -> Option<HomWitness> {
    let levels: Vec<ClosureLevel> = (1..=gens.len())
        .map(|j| closure_level(table, &gens[..j]))
        .collect();
    let mut images: Vec<Permutation> = Vec::with_capacity(gens.len());
    fn dfs(
        table: &TableGroup,
        gens: &[usize],
        degree: usize,
        candidates: &[Vec<Permutation>],
        levels: &[ClosureLevel],
        images: &mut Vec<Permutation>,
    ) -> bool {
        let j = images.len();
        if j == gens.len() {
            return images.iter().any(|p| !p.is_identity());
        }
        for cand in &candidates[j] {
            images.push(cand.clone());
            if prefix_consistent(table, gens, &levels[j], images, degree)
                && dfs(table, gens, degree, candidates, levels, images)
            {
                return true;
            }
            images.pop();
        }
        false
    }
    if dfs(table, gens, degree, candidates, &levels, &mut images) {
        Some(HomWitness {
            generator_images: gens.iter().copied().zip(images).collect(),
        })
    } else {
        None
    }
}

/// Decides representability on a tree: root it (unchanged automorphism
/// group), then recursively either find a nontrivial homomorphism into the
/// symmetric group on one of the root's child classes, or recurse into the
/// class representatives. Subtrees are memoized by canonical code, so the
/// number of distinct calls is at most the vertex count.
pub fn decide_tree_rep(g: &GroupInput, x: &Graph) -> Result<TreeDecision> {
    check_tree(x)?;
    let table = g.to_table()?;
    let (rooted, _provenance) = root_tree(x)?;
    let mut ctx = TreeCtx {
        table: &table,
        memo: HashMap::new(),
        perm_memo: HashMap::new(),
        calls: 0,
    };
    let representable = tree_rec(&rooted, &mut ctx)?;
    Ok(TreeDecision {
        verdict: Verdict {
            representable,
            witness: None,
            method: Method::RecursiveTree,
        },
        recursive_calls: ctx.calls,
    })
}

struct TreeCtx<'a> {
    table: &'a TableGroup,
    memo: HashMap<String, bool>,
    perm_memo: HashMap<usize, bool>,
    calls: usize,
}

impl TreeCtx<'_> {
    fn perm_rep(&mut self, n: usize) -> Result<bool> {
        if let Some(&v) = self.perm_memo.get(&n) {
            return Ok(v);
        }
        if n > PERM_REP_DEGREE_CAP {
            return Err(Error::CapExceeded {
                what: "symmetric group degree",
                limit: PERM_REP_DEGREE_CAP,
                actual: n,
            });
        }
        let v = perm_rep_search(self.table, n)?.is_some();
        self.perm_memo.insert(n, v);
        Ok(v)
    }
}

fn tree_rec(t: &RootedTree, ctx: &mut TreeCtx<'_>) -> Result<bool> {
    let code = t.ahu_code(t.root()).expect("root in range");
    if let Some(&v) = ctx.memo.get(&code) {
        return Ok(v);
    }
    ctx.calls += 1;
    let ans = 'compute: {
        if t.vertex_count() == 1 {
            break 'compute false;
        }
        let wd = child_partition(t);
        for class in &wd.classes {
            if class.multiplicity >= 2 && ctx.perm_rep(class.multiplicity)? {
                break 'compute true;
            }
        }
        for class in &wd.classes {
            if tree_rec(&class.rep, ctx)? {
                break 'compute true;
            }
        }
        false
    };
    ctx.memo.insert(code, ans);
    Ok(ans)
}

/// Ground-truth oracle by exhaustive search: enumerate the full automorphism
/// group of the graph, then backtrack over images of a minimal generating
/// sequence. The first generator ranges over conjugacy class representatives
/// of the enumerated group only.
pub fn oracle_representable(g: &GroupInput, x: &Graph) -> Result<Verdict> {
    let autos = enumerate_automorphisms(x)?;
    let table = g.to_table()?;
    let degree = x.vertex_count();
    let no = Verdict {
        representable: false,
        witness: None,
        method: Method::OracleSearch,
    };
    if autos.len() == 1 || table.order() == 1 {
        return Ok(no);
    }
    let gens = table.minimal_generating_sequence();
    let class_reps = conjugacy_class_representatives(&autos);
    let mut candidates: Vec<Vec<Permutation>> = Vec::with_capacity(gens.len());
    for (pos, &gen) in gens.iter().enumerate() {
        let d = table.element_order(gen);
        let pool: &[Permutation] = if pos == 0 { &class_reps } else { &autos };
        candidates.push(
            pool.iter()
                .filter(|p| d % perm_order_usize(p) == 0)
                .cloned()
                .collect(),
        );
    }
    match search_hom(&table, &gens, degree, &candidates) {
        Some(witness) => Ok(Verdict {
            representable: true,
            witness: Some(witness),
            method: Method::OracleSearch,
        }),
        None => Ok(no),
    }
}

/// One representative per conjugacy class of a group given as a full element
/// list, in first-appearance order.
fn conjugacy_class_representatives(elements: &[Permutation]) -> Vec<Permutation> {
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut classified = vec![false; elements.len()];
    let mut reps = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        if classified[i] {
            continue;
        }
        reps.push(a.clone());
        for sigma in elements {
            let conj = sigma
                .inverse()
                .compose(a)
                .and_then(|sa| sa.compose(sigma))
                .expect("equal degrees");
            classified[index[&conj]] = true;
        }
    }
    reps
}

/// Rebuilds the homomorphism defined by a witness on every group element and
/// verifies the homomorphism law along the way. The listed elements must
/// generate the whole group.
pub fn hom_images_for_all_elements(
    table: &TableGroup,
    witness: &HomWitness,
) -> Result<Vec<Permutation>> {
    if witness.generator_images.is_empty() {
        return Err(Error::BadParameter("witness lists no generators".into()));
    }
    let degree = witness.generator_images[0].1.degree();
    let gens: Vec<usize> = witness.generator_images.iter().map(|(e, _)| *e).collect();
    let images: Vec<Permutation> = witness
        .generator_images
        .iter()
        .map(|(_, p)| p.clone())
        .collect();
    for (e, img) in &witness.generator_images {
        if *e >= table.order() {
            return Err(Error::BadParameter(format!(
                "witness element {e} out of range"
            )));
        }
        if img.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: img.degree(),
            });
        }
    }
    let level = closure_level(table, &gens);
    if level.elements.len() != table.order() {
        return Err(Error::BadParameter(
            "witness generators do not generate the group".into(),
        ));
    }
    if !prefix_consistent(table, &gens, &level, &images, degree) {
        return Err(Error::BadParameter(
            "witness violates the homomorphism law".into(),
        ));
    }
    let mut phi = vec![Permutation::identity(degree); table.order()];
    for &(elem, parent, pos) in &level.discovery {
        phi[elem] = phi[parent].compose(&images[pos]).expect("equal degrees");
    }
    Ok(phi)
}

/// Full witness validation: the listed elements generate the group, the map
/// extends to a homomorphism, at least one image is non-identity, and every
/// image is an automorphism of the target graph when one is given.
pub fn validate_witness(
    g: &GroupInput,
    target: Option<&Graph>,
    witness: &HomWitness,
) -> Result<()> {
    let table = g.to_table()?;
    let _phi = hom_images_for_all_elements(&table, witness)?;
    if witness
        .generator_images
        .iter()
        .all(|(_, p)| p.is_identity())
    {
        return Err(Error::BadParameter(
            "witness is the trivial homomorphism".into(),
        ));
    }
    if let Some(graph) = target {
        for (_, p) in &witness.generator_images {
            if p.degree() != graph.vertex_count() {
                return Err(Error::DegreeMismatch {
                    left: graph.vertex_count(),
                    right: p.degree(),
                });
            }
            for &(u, v) in graph.edges() {
                if !graph.has_edge(p.apply(u), p.apply(v)) {
                    return Err(Error::BadParameter(format!(
                        "witness image {p} does not preserve edge ({u}, {v})"
                    )));
                }
            }
        }
    }
    Ok(())
}
