//! Finite groups presented by a full multiplication table.
//!
//! The identity always sits at index 0; `table[i][j]` is the product `i * j`.
//! Products are composed left-to-right so that tables built from permutations
//! agree with [`crate::perm::Permutation::compose`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{permutations_lex, Permutation};

/// Degree cap for the symmetric and alternating table constructors.
pub const SYMMETRIC_TABLE_CAP: usize = 6;
/// Cap on `n` for the cyclic and dihedral constructors.
pub const CYCLIC_TABLE_CAP: usize = 1000;

/// A finite group given by its multiplication table, identity at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct TableGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for TableGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TableGroup(order {})", self.n)
    }
}

impl TableGroup {
    /// Validates a raw table: identity at 0, Latin rows and columns,
    /// associativity (witness triple reported on failure).
    pub fn validate_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable(
                "table must have at least one element".into(),
            ));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidTable(format!(
                        "entry {v} in row {i} out of range for order {n}"
                    )));
                }
            }
        }
        for j in 0..n {
            if rows[0][j] != j {
                return Err(Error::InvalidTable(format!(
                    "identity not at index 0: 0 * {j} = {}",
                    rows[0][j]
                )));
            }
            if rows[j][0] != j {
                return Err(Error::InvalidTable(format!(
                    "identity not at index 0: {j} * 0 = {}",
                    rows[j][0]
                )));
            }
        }
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                let v = rows[i][j];
                if seen[v] {
                    return Err(Error::InvalidTable(format!("row {i} repeats value {v}")));
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in rows {
                let v = row[j];
                if seen[v] {
                    return Err(Error::InvalidTable(format!("column {j} repeats value {v}")));
                }
                seen[v] = true;
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend_from_slice(row);
        }
        let group = TableGroup {
            n,
            inv: compute_inverses(n, &table),
            table,
        };
        // Light's associativity test over a generating sequence: checking
        // (x*g)*y = x*(g*y) for all x, y and each generator g suffices.
        let gens = group.minimal_generating_sequence();
        for &g in &gens {
            for x in 0..n {
                for y in 0..n {
                    let left = group.mul(group.mul(x, g), y);
                    let right = group.mul(x, group.mul(g, y));
                    if left != right {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({x}, {g}, {y}): ({x}*{g})*{y} = {left} but {x}*({g}*{y}) = {right}"
                        )));
                    }
                }
            }
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.table[i * self.n..(i + 1) * self.n]
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut cur = i;
        let mut ord = 1;
        while cur != 0 {
            cur = self.mul(cur, i);
            ord += 1;
        }
        ord
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Commutator `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.mul(x, y), self.inv(x)), self.inv(y))
    }

    /// Closure of a seed set under products; always contains the identity.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut list = vec![0usize];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in seed {
            if !member[s] {
                member[s] = true;
                list.push(s);
                queue.push_back(s);
            }
        }
        while let Some(a) = queue.pop_front() {
            let mut idx = 0;
            while idx < list.len() {
                let b = list[idx];
                for prod in [self.mul(a, b), self.mul(b, a)] {
                    if !member[prod] {
                        member[prod] = true;
                        list.push(prod);
                        queue.push_back(prod);
                    }
                }
                idx += 1;
            }
        }
        list.sort_unstable();
        list
    }

    /// Subgroup generated by all commutators.
    pub fn commutator_subgroup(&self) -> ElementSubset<'_> {
        let members = self.derived_subset(&(0..self.n).collect::<Vec<_>>());
        ElementSubset {
            group: self,
            members,
        }
    }

    /// Commutator subgroup of the subgroup spanned by `members`.
    fn derived_subset(&self, members: &[usize]) -> Vec<usize> {
        let mut comms = BTreeSet::new();
        for &x in members {
            for &y in members {
                comms.insert(self.commutator(x, y));
            }
        }
        let seed: Vec<usize> = comms.into_iter().collect();
        self.closure(&seed)
    }

    /// `#G / #G'`.
    pub fn abelianization_order(&self) -> usize {
        self.n / self.commutator_subgroup().len()
    }

    /// Derived series reaches the trivial group?
    pub fn is_solvable(&self) -> bool {
        let mut cur: Vec<usize> = (0..self.n).collect();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let next = self.derived_subset(&cur);
            if next.len() == cur.len() {
                return false;
            }
            cur = next;
        }
    }

    /// Greedy generating sequence: repeatedly adjoin the smallest element
    /// outside the closure so far. Each pick strictly enlarges the closure.
    pub fn minimal_generating_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::new();
        let mut closed = vec![0usize];
        while closed.len() < self.n {
            let next = (0..self.n)
                .find(|e| closed.binary_search(e).is_err())
                .expect("closure smaller than group");
            seq.push(next);
            closed = self.closure(&seq);
        }
        seq
    }

    /// Every subgroup, as sorted member lists, found by closing each known
    /// subgroup with each outside element. Exponential in general; meant for
    /// small groups.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let trivial = vec![0usize];
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        known.insert(trivial.clone());
        let mut queue = VecDeque::new();
        queue.push_back(trivial);
        while let Some(h) = queue.pop_front() {
            for x in 1..self.n {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(x);
                let closed = self.closure(&seed);
                if known.insert(closed.clone()) {
                    queue.push_back(closed);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = known.into_iter().collect();
        out.sort_by_key(|h| (h.len(), h.clone()));
        out
    }

    /// Builds the multiplication table of a list of permutations closed under
    /// composition, with the identity first.
    fn from_permutations(perms: &[Permutation]) -> TableGroup {
        let n = perms.len();
        debug_assert!(perms[0].is_identity());
        let index: std::collections::HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![0usize; n * n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let prod = p.compose(q).expect("equal degrees");
                table[i * n + j] = index[&prod];
            }
        }
        TableGroup {
            n,
            inv: compute_inverses(n, &table),
            table,
        }
    }

    /// Cyclic group of order `n`: `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<TableGroup> {
        if n == 0 || n > CYCLIC_TABLE_CAP {
            return Err(Error::BadParameter(format!(
                "cyclic group order must be in 1..={CYCLIC_TABLE_CAP}, got {n}"
            )));
        }
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = (i + j) % n;
            }
        }
        Ok(TableGroup {
            n,
            inv: compute_inverses(n, &table),
            table,
        })
    }

    /// Dihedral group of order `2n`: indices `0..n` are rotations, `n..2n`
    /// reflections.
    pub fn dihedral(n: usize) -> Result<TableGroup> {
        if n == 0 || n > CYCLIC_TABLE_CAP {
            return Err(Error::BadParameter(format!(
                "dihedral parameter must be in 1..={CYCLIC_TABLE_CAP}, got {n}"
            )));
        }
        let size = 2 * n;
        let mut table = vec![0usize; size * size];
        for a in 0..n {
            for b in 0..n {
                // r^a r^b = r^(a+b);  r^a (s r^b) = s r^(b-a);
                // (s r^a) r^b = s r^(a+b);  (s r^a)(s r^b) = r^(b-a).
                table[a * size + b] = (a + b) % n;
                table[a * size + (n + b)] = n + (b + n - a) % n;
                table[(n + a) * size + b] = n + (a + b) % n;
                table[(n + a) * size + (n + b)] = (b + n - a) % n;
            }
        }
        Ok(TableGroup {
            n: size,
            inv: compute_inverses(size, &table),
            table,
        })
    }

    /// Symmetric group on `n` points, elements in lexicographic image order.
    pub fn symmetric(n: usize) -> Result<TableGroup> {
        if n == 0 || n > SYMMETRIC_TABLE_CAP {
            return Err(Error::BadParameter(format!(
                "symmetric table parameter must be in 1..={SYMMETRIC_TABLE_CAP}, got {n}"
            )));
        }
        let perms: Vec<Permutation> = permutations_lex(n)
            .into_iter()
            .map(|v| Permutation::from_images(v).expect("lex tables are bijections"))
            .collect();
        Ok(TableGroup::from_permutations(&perms))
    }

    /// Alternating group on `n` points, even permutations in lexicographic
    /// image order.
    pub fn alternating(n: usize) -> Result<TableGroup> {
        if n == 0 || n > SYMMETRIC_TABLE_CAP {
            return Err(Error::BadParameter(format!(
                "alternating table parameter must be in 1..={SYMMETRIC_TABLE_CAP}, got {n}"
            )));
        }
        let perms: Vec<Permutation> = permutations_lex(n)
            .into_iter()
            .map(|v| Permutation::from_images(v).expect("lex tables are bijections"))
            .filter(|p| p.cycle_lengths().iter().map(|l| l - 1).sum::<usize>() % 2 == 0)
            .collect();
        Ok(TableGroup::from_permutations(&perms))
    }

    /// Quaternion group of order 8: indices 0..8 stand for
    /// 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion() -> TableGroup {
        let n = 8;
        // (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k.
        let decode = |e: usize| -> (bool, usize) { (e % 2 == 1, e / 2) };
        let encode = |neg: bool, axis: usize| -> usize { axis * 2 + usize::from(neg) };
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) => (false, x),
                (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let mut table = vec![0usize; n * n];
        for e in 0..n {
            for f in 0..n {
                let (sa, a) = decode(e);
                let (sb, b) = decode(f);
                let (sm, axis) = unit_mul(a, b);
                table[e * n + f] = encode(sa ^ sb ^ sm, axis);
            }
        }
        TableGroup {
            n,
            inv: compute_inverses(n, &table),
            table,
        }
    }

    pub fn trivial() -> TableGroup {
        TableGroup {
            n: 1,
            table: vec![0],
            inv: vec![0],
        }
    }
}

fn compute_inverses(n: usize, table: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if table[i * n + j] == 0 {
                inv[i] = j;
                break;
            }
        }
    }
    inv
}

/// The named standard constructions reachable from the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Quaternion,
}

/// Dispatch over [`StandardKind`]; the quaternion group only accepts `n = 8`.
pub fn make_standard(kind: StandardKind, n: usize) -> Result<TableGroup> {
    match kind {
        StandardKind::Cyclic => TableGroup::cyclic(n),
        StandardKind::Dihedral => TableGroup::dihedral(n),
        StandardKind::Symmetric => TableGroup::symmetric(n),
        StandardKind::Alternating => TableGroup::alternating(n),
        StandardKind::Quaternion => {
            if n != 8 {
                return Err(Error::BadParameter(format!(
                    "quaternion group has fixed order 8, got {n}"
                )));
            }
            Ok(TableGroup::quaternion())
        }
    }
}

/// A sorted subset of element indices of a table group.
#[derive(Clone, Debug)]
pub struct ElementSubset<'a> {
    group: &'a TableGroup,
    members: Vec<usize>,
}

impl<'a> ElementSubset<'a> {
    /// Closure of `seed` under products and inverses.
    pub fn generated(group: &'a TableGroup, seed: &[usize]) -> Self {
        ElementSubset {
            group,
            members: group.closure(seed),
        }
    }

    pub fn group(&self) -> &TableGroup {
        self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_subgroup(&self) -> bool {
        self.contains(0)
            && self.members.iter().all(|&a| {
                self.contains(self.group.inv(a))
                    && self
                        .members
                        .iter()
                        .all(|&b| self.contains(self.group.mul(a, b)))
            })
    }

    pub fn is_normal(&self) -> bool {
        self.is_subgroup()
            && (0..self.group.order()).all(|g| {
                self.members.iter().all(|&h| {
                    let conj = self.group.mul(self.group.mul(self.group.inv(g), h), g);
                    self.contains(conj)
                })
            })
    }
}
