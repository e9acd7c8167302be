//! Permutations and permutation groups given by generating sets.
//!
//! Permutations act on the right: `apply` sends a point through the image
//! table, and `compose(p, q)` applies `p` first, then `q`. Group order and
//! membership go through a deterministic stabilizer chain ([`StrongGenSet`])
//! built over the points `0, 1, 2, ...` in natural order.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest degree accepted by [`exhaustive_elements`]. The exhaustive closure
/// exists only to cross-check the stabilizer-chain machinery and refuses
/// anything bigger.
pub const EXHAUSTIVE_DEGREE_CAP: usize = 8;

/// A permutation of `{0..n-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from an image table, checking it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if seen[img] {
                return Err(Error::InvalidPermutation(format!("image {img} repeated")));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {pt} out of range for degree {n}"
                    )));
                }
                if touched[pt] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears in two cycles"
                    )));
                }
                touched[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `compose(p, q)` maps `i` to `q(p(i))`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// Smallest point moved by this permutation, if any.
    pub fn min_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &img)| *i != img)
            .map(|(i, _)| i)
    }

    /// Lengths of the cycles, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur];
            }
            lengths.push(len);
        }
        lengths
    }

    /// Multiplicative order as lcm of cycle lengths.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for len in self.cycle_lengths() {
            acc = acc.lcm(&BigUint::from(len));
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "({start}")?;
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                write!(f, " {cur}")?;
                seen[cur] = true;
                cur = self.images[cur];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group presented by a list of generators of equal degree.
/// An empty list presents the trivial group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    degree: usize,
    gens: Vec<Permutation>,
}

impl GenSet {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(GenSet { degree, gens })
    }

    pub fn trivial(degree: usize) -> Self {
        GenSet {
            degree,
            gens: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Coset representatives for one level of the stabilizer chain: every
/// permutation stored under key `q` fixes all points below `point` and maps
/// `point` to `q`. The base point itself maps to the identity.
#[derive(Clone, Debug)]
pub struct Transversal {
    point: usize,
    reps: BTreeMap<usize, Permutation>,
}

impl Transversal {
    pub fn point(&self) -> usize {
        self.point
    }

    pub fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        self.reps.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representative(&self, point: usize) -> Option<&Permutation> {
        self.reps.get(&point)
    }
}

/// A base-and-strong-generating-set structure. Level `i` holds the coset
/// representatives of the stabilizer of `base[i]` inside the group fixing all
/// points smaller than `base[i]`; the product of the level sizes is the group
/// order and sifting through the levels decides membership.
#[derive(Clone, Debug)]
pub struct StrongGenSet {
    degree: usize,
    levels: Vec<Transversal>,
    strong_gens: Vec<Permutation>,
}

impl StrongGenSet {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, in increasing natural order.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn levels(&self) -> &[Transversal] {
        &self.levels
    }

    pub fn strong_gens(&self) -> &[Permutation] {
        &self.strong_gens
    }

    /// Exact group order: the product of the transversal sizes.
    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for level in &self.levels {
            acc *= BigUint::from(level.reps.len());
        }
        acc
    }

    /// Membership test by sifting through the transversals.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.sift(p).is_identity())
    }

    /// Residue of `p` after dividing out transversal representatives; the
    /// identity residue certifies membership.
    pub fn sift(&self, p: &Permutation) -> Permutation {
        let mut cur = p.clone();
        for level in &self.levels {
            let img = cur.apply(level.point);
            if img == level.point {
                continue;
            }
            match level.reps.get(&img) {
                Some(rep) => {
                    cur = cur.compose(&rep.inverse()).expect("equal degrees");
                }
                None => return cur,
            }
        }
        cur
    }
}

/// Deterministic Schreier–Sims stabilizer-chain construction. Base points are
/// the naturally ordered points `0..n`; levels whose orbit stays a singleton
/// are dropped from the result.
pub fn schreier_sims(genset: &GenSet) -> StrongGenSet {
    let n = genset.degree();
    let mut strong: Vec<Permutation> = Vec::new();
    let mut min_moved: Vec<usize> = Vec::new();
    for g in genset.gens() {
        if let Some(m) = g.min_moved_point() {
            strong.push(g.clone());
            min_moved.push(m);
        }
    }
    if strong.is_empty() {
        return StrongGenSet {
            degree: n,
            levels: Vec::new(),
            strong_gens: Vec::new(),
        };
    }

    // trans[p]: orbit of p (with representatives) under the strong generators
    // fixing every point below p. Levels without such generators stay empty.
    let mut trans: Vec<BTreeMap<usize, Permutation>> = vec![BTreeMap::new(); n];
    let mut dirty = vec![true; n];

    let gens_at = |strong: &[Permutation], min_moved: &[usize], lvl: usize| -> Vec<usize> {
        (0..strong.len()).filter(|&k| min_moved[k] >= lvl).collect()
    };

    let rebuild =
        |strong: &[Permutation], gen_idx: &[usize], lvl: usize| -> BTreeMap<usize, Permutation> {
            let mut reps = BTreeMap::new();
            reps.insert(lvl, Permutation::identity(n));
            let mut queue = VecDeque::new();
            queue.push_back(lvl);
            while let Some(p) = queue.pop_front() {
                let rep_p = reps[&p].clone();
                for &k in gen_idx {
                    let g = &strong[k];
                    let q = g.apply(p);
                    if let std::collections::btree_map::Entry::Vacant(slot) = reps.entry(q) {
                        slot.insert(rep_p.compose(g).expect("equal degrees"));
                        queue.push_back(q);
                    }
                }
            }
            reps
        };

    // Sift starting at `start`, returning the level where the residue got
    // stuck, or None when it reduced to the identity.
    let sift_from = |trans: &[BTreeMap<usize, Permutation>],
                     start: usize,
                     p: &Permutation|
     -> Option<(Permutation, usize)> {
        let mut cur = p.clone();
        for lvl in start..n {
            let img = cur.apply(lvl);
            if img == lvl {
                continue;
            }
            match trans[lvl].get(&img) {
                Some(rep) => cur = cur.compose(&rep.inverse()).expect("equal degrees"),
                None => return Some((cur, lvl)),
            }
        }
        debug_assert!(cur.is_identity());
        None
    };

    let mut lvl = n as isize - 1;
    while lvl >= 0 {
        let i = lvl as usize;
        let idx = gens_at(&strong, &min_moved, i);
        if idx.is_empty() {
            trans[i].clear();
            lvl -= 1;
            continue;
        }
        if dirty[i] {
            trans[i] = rebuild(&strong, &idx, i);
            dirty[i] = false;
        }
        let points: Vec<usize> = trans[i].keys().copied().collect();
        let mut added = None;
        'scan: for &p in &points {
            let rep_p = trans[i][&p].clone();
            for &k in &idx {
                let g = &strong[k];
                let q = g.apply(p);
                let rep_q_inv = trans[i][&q].inverse();
                let schreier = rep_p
                    .compose(g)
                    .and_then(|pg| pg.compose(&rep_q_inv))
                    .expect("equal degrees");
                if schreier.is_identity() {
                    continue;
                }
                if let Some((residue, stuck)) = sift_from(&trans, i + 1, &schreier) {
                    added = Some((residue, stuck));
                    break 'scan;
                }
            }
        }
        match added {
            Some((residue, stuck)) => {
                debug_assert_eq!(residue.min_moved_point(), Some(stuck));
                strong.push(residue);
                min_moved.push(stuck);
                for d in dirty.iter_mut().take(stuck + 1) {
                    *d = true;
                }
                lvl = stuck as isize;
            }
            None => lvl -= 1,
        }
    }

    let mut levels = Vec::new();
    for (i, reps) in trans.into_iter().enumerate() {
        if reps.len() >= 2 {
            levels.push(Transversal { point: i, reps });
        }
    }
    StrongGenSet {
        degree: n,
        levels,
        strong_gens: strong,
    }
}

/// Group order straight from a stabilizer chain.
pub fn order(sgs: &StrongGenSet) -> BigUint {
    sgs.order()
}

/// Membership of `p` in the group described by `sgs`.
pub fn contains(sgs: &StrongGenSet, p: &Permutation) -> Result<bool> {
    sgs.contains(p)
}

/// Orbit partition of `{0..n-1}` under the generated group, blocks sorted by
/// their smallest element.
pub fn orbits(genset: &GenSet) -> Vec<Vec<usize>> {
    let n = genset.degree();
    let mut block = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if block[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![start];
        block[start] = id;
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(p) = queue.pop_front() {
            for g in genset.gens() {
                for q in [g.apply(p), g.inverse().apply(p)] {
                    if block[q] == usize::MAX {
                        block[q] = id;
                        members.push(q);
                        queue.push_back(q);
                    }
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    blocks
}

/// Generating set for the commutator subgroup: commutators of the given
/// generators, closed under conjugation by the given generators (the normal
/// closure), pruned by stabilizer-chain membership.
pub fn commutator_gens(genset: &GenSet) -> GenSet {
    let n = genset.degree();
    let gens = genset.gens();
    let mut kgens: Vec<Permutation> = Vec::new();
    let mut sgs = schreier_sims(&GenSet::trivial(n));
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    for (a, x) in gens.iter().enumerate() {
        for y in gens.iter().skip(a + 1) {
            let comm = x
                .compose(y)
                .and_then(|xy| xy.compose(&x.inverse()))
                .and_then(|xyx| xyx.compose(&y.inverse()))
                .expect("equal degrees");
            queue.push_back(comm);
        }
    }
    while let Some(c) = queue.pop_front() {
        if c.is_identity() || sgs.contains(&c).expect("equal degrees") {
            continue;
        }
        kgens.push(c.clone());
        sgs = schreier_sims(&GenSet::new(n, kgens.clone()).expect("equal degrees"));
        for s in gens {
            let conj = s
                .inverse()
                .compose(&c)
                .and_then(|sc| sc.compose(s))
                .expect("equal degrees");
            queue.push_back(conj);
        }
    }
    GenSet {
        degree: n,
        gens: kgens,
    }
}

/// Whether the derived series of the generated group reaches the trivial
/// group. The series stalls exactly on non-solvable groups.
pub fn is_solvable_perm(genset: &GenSet) -> bool {
    let mut cur = genset.clone();
    let mut cur_order = schreier_sims(&cur).order();
    let one = BigUint::one();
    loop {
        if cur_order == one {
            return true;
        }
        let next = commutator_gens(&cur);
        let next_order = schreier_sims(&next).order();
        if next_order == cur_order {
            return false;
        }
        cur = next;
        cur_order = next_order;
    }
}

/// Every element of the generated group, by worklist closure. A verification
/// oracle only: refuses degrees above [`EXHAUSTIVE_DEGREE_CAP`]. Elements come
/// out in deterministic BFS discovery order starting from the identity.
pub fn exhaustive_elements(genset: &GenSet) -> Result<Vec<Permutation>> {
    let n = genset.degree();
    if n > EXHAUSTIVE_DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive closure degree",
            limit: EXHAUSTIVE_DEGREE_CAP,
            actual: n,
        });
    }
    let identity = Permutation::identity(n);
    let mut seen = std::collections::HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(idx) = queue.pop_front() {
        let cur = elements[idx].clone();
        for g in genset.gens() {
            let next = cur.compose(g).expect("equal degrees");
            if seen.insert(next.clone()) {
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    Ok(elements)
}

/// All permutations of `{0..n-1}` in lexicographic order of their image
/// tables. Used by table-group constructors and search candidate lists.
pub(crate) fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
