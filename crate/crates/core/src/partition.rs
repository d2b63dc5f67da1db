//! Partitions of a finite universe and their dit-set semantics.
//!
//! A partition is represented by its blocks in canonical form (blocks sorted
//! by least element). Every partition is equivalently represented by its dit
//! set, the set of ordered pairs lying in distinct blocks; the lattice
//! operations below are exercised against that representation by the test
//! suites. Note that partition relations and equivalence relations are closed
//! under neither union nor intersection, so interior and closure are
//! lattice-theoretic operations here, not the interior/closure of a topology.

use std::fmt;

use crate::error::{Error, Result};
use crate::universe::Universe;

/// Cap on universe size for exhaustive enumeration (Bell(12) is already 4.2M).
pub const ENUMERATION_CAP: usize = 12;

/// A binary relation on a universe, stored as a dense boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    universe: Universe,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(universe: &Universe) -> Self {
        let n = universe.size();
        Relation {
            universe: universe.clone(),
            bits: vec![false; n * n],
        }
    }

    pub fn full(universe: &Universe) -> Self {
        let n = universe.size();
        Relation {
            universe: universe.clone(),
            bits: vec![true; n * n],
        }
    }

    /// The diagonal relation of all self-pairs.
    pub fn diagonal(universe: &Universe) -> Self {
        let mut r = Relation::empty(universe);
        for i in 0..universe.size() {
            r.insert(i, i);
        }
        r
    }

    pub fn from_pairs(universe: &Universe, pairs: &[(usize, usize)]) -> Self {
        let mut r = Relation::empty(universe);
        for &(i, j) in pairs {
            r.insert(i, j);
        }
        r
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    fn n(&self) -> usize {
        self.universe.size()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n() + j]
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        let n = self.n();
        self.bits[i * n + j] = true;
    }

    /// Number of pairs in the relation.
    pub fn pair_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.contains(i, j))
            .collect()
    }

    fn zip_with(&self, other: &Relation, f: impl Fn(bool, bool) -> bool) -> Result<Relation> {
        self.universe.check_same(&other.universe)?;
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Relation {
            universe: self.universe.clone(),
            bits,
        })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Relation {
        Relation {
            universe: self.universe.clone(),
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.universe == other.universe && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|i| self.contains(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.contains(i, j) == self.contains(j, i)))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                if !self.contains(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.contains(j, k) && !self.contains(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// Whether this is the dit set of some partition: irreflexive, symmetric,
    /// and with an equivalence relation as complement.
    pub fn is_partition_relation(&self) -> bool {
        (0..self.n()).all(|i| !self.contains(i, i))
            && self.is_symmetric()
            && self.complement().is_transitive()
    }

    /// Reflexive-symmetric-transitive closure: the smallest equivalence
    /// relation containing this relation. Computed by union-find over the
    /// pairs, treating each pair as an undirected link.
    pub fn closure(&self) -> Relation {
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for (i, j) in self.pairs() {
            uf.union(i, j);
        }
        let mut out = Relation::empty(&self.universe);
        for i in 0..n {
            for j in 0..n {
                if uf.find(i) == uf.find(j) {
                    out.insert(i, j);
                }
            }
        }
        out
    }

    /// The largest partition relation contained in this relation: the
    /// complement of the closure of the complement.
    pub fn interior(&self) -> Relation {
        self.complement().closure().complement()
    }
}

impl fmt::Display for Relation {
    /// Renders the relation as its pair list, e.g. `{(a,b),(b,a)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", self.universe.label(i), self.universe.label(j))?;
        }
        write!(f, "}}")
    }
}

/// A partition of a universe into disjoint nonempty blocks.
///
/// Blocks are kept in canonical form: elements ascending within each block,
/// blocks sorted by their least element. Equality is structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(universe: &Universe, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = universe.size();
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &e in block {
                if e >= n {
                    return Err(Error::InvalidPartition(format!(
                        "element index {e} out of range"
                    )));
                }
                if block_of[e] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {} appears in two blocks",
                        universe.label(e)
                    )));
                }
                block_of[e] = b;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidPartition(
                "blocks do not cover the universe".into(),
            ));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                block_of[e] = b;
            }
        }
        Ok(Partition {
            universe: universe.clone(),
            blocks,
            block_of,
        })
    }

    pub fn from_label_blocks(universe: &Universe, blocks: &[&[&str]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|block| block.iter().map(|l| universe.require(l)).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Partition::new(universe, blocks)
    }

    /// Parses the text form `{{a},{b,c}}` against a known universe.
    pub fn parse(universe: &Universe, input: &str) -> Result<Self> {
        let mut p = crate::text::Parser::new(input);
        let label_blocks = p.braced_block_list()?;
        p.finish()?;
        let blocks = label_blocks
            .iter()
            .map(|block| block.iter().map(|l| universe.require(l)).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Partition::new(universe, blocks)
    }

    /// The indiscrete partition (the "blob"): one block holding everything.
    pub fn indiscrete(universe: &Universe) -> Self {
        let n = universe.size();
        Partition::new(universe, vec![(0..n).collect()]).expect("indiscrete is valid")
    }

    /// The discrete partition: all singleton blocks.
    pub fn discrete(universe: &Universe) -> Self {
        let n = universe.size();
        Partition::new(universe, (0..n).map(|i| vec![i]).collect()).expect("discrete is valid")
    }

    /// Rebuilds a partition from an equivalence relation (blocks = classes).
    pub fn from_equivalence(relation: &Relation) -> Result<Self> {
        if !relation.is_equivalence() {
            return Err(Error::InvalidPartition(
                "relation is not an equivalence relation".into(),
            ));
        }
        let n = relation.universe().size();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; n];
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let class: Vec<usize> = (0..n).filter(|&j| relation.contains(i, j)).collect();
            for &j in &class {
                seen[j] = true;
            }
            blocks.push(class);
        }
        Partition::new(relation.universe(), blocks)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing element `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.universe.size()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.blocks.len() == 1
    }

    /// The dit set: all ordered pairs lying in distinct blocks. Symmetric and
    /// irreflexive.
    pub fn dit_set(&self) -> Relation {
        let n = self.universe.size();
        let mut r = Relation::empty(&self.universe);
        for i in 0..n {
            for j in 0..n {
                if self.block_of[i] != self.block_of[j] {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    /// The indit set: the equivalence relation of same-block pairs, the
    /// complement of the dit set.
    pub fn indit_set(&self) -> Relation {
        self.dit_set().complement()
    }

    /// True when `self` refines `coarser`: every block of `self` is contained
    /// in some block of `coarser` (written `coarser` ⪯ `self`). Equivalent to
    /// dit(`coarser`) ⊆ dit(`self`).
    pub fn is_refinement_of(&self, coarser: &Partition) -> Result<bool> {
        self.universe.check_same(&coarser.universe)?;
        Ok(self
            .blocks
            .iter()
            .all(|block| block.iter().all(|&e| coarser.block_of[e] == coarser.block_of[block[0]])))
    }

    /// Join: blocks are the nonempty pairwise intersections. Its dit set is
    /// the union of the two dit sets.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.universe.check_same(&other.universe)?;
        let n = self.universe.size();
        let mut cells: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
            std::collections::BTreeMap::new();
        for e in 0..n {
            cells
                .entry((self.block_of[e], other.block_of[e]))
                .or_default()
                .push(e);
        }
        Partition::new(&self.universe, cells.into_values().collect())
    }

    /// Meet: blocks are the connected components of the graph linking two
    /// elements when they share a block in either partition.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.universe.check_same(&other.universe)?;
        let n = self.universe.size();
        let mut uf = UnionFind::new(n);
        for p in [self, other] {
            for block in &p.blocks {
                for &e in &block[1..] {
                    uf.union(block[0], e);
                }
            }
        }
        let mut classes: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for e in 0..n {
            classes.entry(uf.find(e)).or_default().push(e);
        }
        Partition::new(&self.universe, classes.into_values().collect())
    }
}

/// Implication `antecedent ⇒ consequent`: the blocks of `consequent`, except
/// that each block contained in some block of `antecedent` is discretized
/// (replaced by its singletons). Equals the top partition exactly when
/// `consequent` refines `antecedent`.
pub fn implication(antecedent: &Partition, consequent: &Partition) -> Result<Partition> {
    antecedent.universe().check_same(consequent.universe())?;
    let mut blocks = Vec::new();
    for block in consequent.blocks() {
        let inside = block
            .iter()
            .all(|&e| antecedent.block_of(e) == antecedent.block_of(block[0]));
        if inside {
            blocks.extend(block.iter().map(|&e| vec![e]));
        } else {
            blocks.push(block.clone());
        }
    }
    Partition::new(consequent.universe(), blocks)
}

/// A binary boolean function given as a truth table indexed by
/// `(a as usize) << 1 | (b as usize)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoolOp(pub [bool; 4]);

impl BoolOp {
    pub const UNION: BoolOp = BoolOp([false, true, true, true]);
    pub const INTERSECTION: BoolOp = BoolOp([false, false, false, true]);
    /// ¬a ∨ b, the subset implication.
    pub const IMPLICATION: BoolOp = BoolOp([true, true, false, true]);

    pub fn apply(&self, a: bool, b: bool) -> bool {
        self.0[(a as usize) << 1 | (b as usize)]
    }

    /// All sixteen binary boolean functions.
    pub fn all() -> impl Iterator<Item = BoolOp> {
        (0..16u8).map(|code| BoolOp([code & 1 != 0, code & 2 != 0, code & 4 != 0, code & 8 != 0]))
    }
}

/// Applies any binary boolean function to the dit sets of two partitions and
/// takes the interior, yielding the partition with that dit set.
pub fn logical_op(op: BoolOp, a: &Partition, b: &Partition) -> Result<Partition> {
    a.universe().check_same(b.universe())?;
    let da = a.dit_set();
    let db = b.dit_set();
    let mut combined = Relation::empty(a.universe());
    let n = a.universe().size();
    for i in 0..n {
        for j in 0..n {
            if op.apply(da.contains(i, j), db.contains(i, j)) {
                combined.insert(i, j);
            }
        }
    }
    Partition::from_equivalence(&combined.interior().complement())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (m, &e) in block.iter().enumerate() {
                if m > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.universe.label(e))?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Enumerates every partition of the universe exactly once, in restricted
/// growth string order. Guarded at `ENUMERATION_CAP` elements.
pub fn enumerate_partitions(universe: &Universe) -> Result<PartitionIter> {
    let n = universe.size();
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(PartitionIter {
        universe: universe.clone(),
        rgs: None,
    })
}

pub struct PartitionIter {
    universe: Universe,
    rgs: Option<Vec<usize>>,
}

impl PartitionIter {
    fn to_partition(&self, rgs: &[usize]) -> Partition {
        let blocks_needed = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); blocks_needed];
        for (e, &b) in rgs.iter().enumerate() {
            blocks[b].push(e);
        }
        Partition::new(&self.universe, blocks).expect("growth string yields a valid partition")
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let n = self.universe.size();
        match &mut self.rgs {
            None => {
                self.rgs = Some(vec![0; n]);
            }
            Some(rgs) => {
                // Advance to the next restricted growth string: find the
                // rightmost position that can be incremented (a[i] may not
                // exceed 1 + max of the prefix), reset the suffix to zero.
                let mut i = n;
                loop {
                    if i == 1 {
                        return None;
                    }
                    i -= 1;
                    let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
                    if rgs[i] <= prefix_max {
                        rgs[i] += 1;
                        for tail in rgs[i + 1..].iter_mut() {
                            *tail = 0;
                        }
                        break;
                    }
                }
            }
        }
        let rgs = self.rgs.as_ref().unwrap();
        Some(self.to_partition(rgs))
    }
}

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::parse("{a,b,c}").unwrap()
    }

    fn part(u: &Universe, s: &str) -> Partition {
        Partition::parse(u, s).unwrap()
    }

    #[test]
    fn dit_set_examples() {
        let u = u3();
        let pi = part(&u, "{{a},{b,c}}");
        let dits = pi.dit_set();
        let expected = Relation::from_pairs(&u, &[(0, 1), (1, 0), (0, 2), (2, 0)]);
        assert_eq!(dits, expected);
        assert_eq!(Partition::indiscrete(&u).dit_set().pair_count(), 0);
        assert_eq!(Partition::discrete(&u).dit_set().pair_count(), 6);
    }

    #[test]
    fn indit_set_examples() {
        let u = u3();
        let pi = part(&u, "{{a},{b,c}}");
        let indits = pi.indit_set();
        let expected = Relation::from_pairs(&u, &[(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)]);
        assert_eq!(indits, expected);
        assert_eq!(
            Partition::discrete(&u).indit_set(),
            Relation::diagonal(&u)
        );
        assert_eq!(Partition::indiscrete(&u).indit_set(), Relation::full(&u));
    }

    #[test]
    fn refinement_examples() {
        let u = u3();
        let bottom = Partition::indiscrete(&u);
        let top = Partition::discrete(&u);
        let pi = part(&u, "{{a},{b,c}}");
        let sigma = part(&u, "{{a,b},{c}}");
        for p in enumerate_partitions(&u).unwrap() {
            assert!(p.is_refinement_of(&bottom).unwrap());
        }
        assert!(top.is_refinement_of(&pi).unwrap());
        // Direct block-containment check: {a,b} sits in neither {a} nor {b,c}.
        assert!(!sigma.is_refinement_of(&pi).unwrap());
        let other = Universe::parse("{x,y}").unwrap();
        assert!(pi
            .is_refinement_of(&Partition::discrete(&other))
            .is_err());
    }

    #[test]
    fn join_examples() {
        let u = u3();
        let pi = part(&u, "{{a},{b,c}}");
        let sigma = part(&u, "{{a,b},{c}}");
        assert_eq!(pi.join(&sigma).unwrap(), Partition::discrete(&u));
        let bottom = Partition::indiscrete(&u);
        assert_eq!(pi.join(&bottom).unwrap(), pi);
        assert_eq!(pi.join(&pi).unwrap(), pi);
    }

    /// Independent oracle for the meet: breadth-first connected components of
    /// the link graph, no union-find involved.
    fn meet_oracle(a: &Partition, b: &Partition) -> Vec<Vec<usize>> {
        let n = a.universe().size();
        let mut adj = vec![vec![false; n]; n];
        for p in [a, b] {
            for block in p.blocks() {
                for &x in block {
                    for &y in block {
                        adj[x][y] = true;
                    }
                }
            }
        }
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(x) = queue.pop() {
                comp.push(x);
                for y in 0..n {
                    if adj[x][y] && !seen[y] {
                        seen[y] = true;
                        queue.push(y);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    #[test]
    fn meet_examples() {
        let u = u3();
        let pi = part(&u, "{{a},{b,c}}");
        let sigma = part(&u, "{{a,b},{c}}");
        let met = pi.meet(&sigma).unwrap();
        assert_eq!(met, Partition::indiscrete(&u));
        assert_eq!(
            met.blocks().to_vec(),
            meet_oracle(&pi, &sigma),
            "union-find meet must agree with the BFS component oracle"
        );
        let top = Partition::discrete(&u);
        assert_eq!(pi.meet(&top).unwrap(), pi);
        assert_eq!(pi.meet(&pi).unwrap(), pi);
    }

    #[test]
    fn implication_examples() {
        let u = u3();
        let pi = part(&u, "{{a},{b,c}}");
        let bottom = Partition::indiscrete(&u);
        let top = Partition::discrete(&u);
        assert_eq!(implication(&pi, &pi).unwrap(), top);
        assert_eq!(implication(&bottom, &pi).unwrap(), top);
        assert_eq!(implication(&pi, &bottom).unwrap(), bottom);
    }

    /// Independent transitive-closure oracle (Floyd-Warshall style).
    fn closure_oracle(r: &Relation) -> Relation {
        let u = r.universe().clone();
        let n = u.size();
        let mut m = vec![vec![false; n]; n];
        for (i, j) in r.pairs() {
            m[i][j] = true;
            m[j][i] = true;
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if m[i][k] && m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
        let mut out = Relation::empty(&u);
        for (i, row) in m.iter().enumerate() {
            for (j, &present) in row.iter().enumerate() {
                if present {
                    out.insert(i, j);
                }
            }
        }
        out
    }

    #[test]
    fn closure_examples() {
        let u = u3();
        assert_eq!(Relation::empty(&u).closure(), Relation::diagonal(&u));
        let single = Relation::from_pairs(&u, &[(0, 1)]);
        let closed = single.closure();
        assert_eq!(closed, closure_oracle(&single));
        assert_eq!(
            closed,
            Relation::from_pairs(&u, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])
        );
        let equiv = part(&u, "{{a,b},{c}}").indit_set();
        assert_eq!(equiv.closure(), equiv);
    }

    #[test]
    fn interior_examples() {
        let u = u3();
        let all_dits = Partition::discrete(&u).dit_set();
        assert_eq!(all_dits.interior(), all_dits);
        assert_eq!(Relation::empty(&u).interior(), Relation::empty(&u));
        // int(dit(π) ∩ dit(σ)) must match the meet computed from blocks.
        let pi = part(&u, "{{a},{b,c}}");
        let sigma = part(&u, "{{a,b},{c}}");
        let inter = pi.dit_set().intersection(&sigma.dit_set()).unwrap();
        assert_eq!(inter.interior(), pi.meet(&sigma).unwrap().dit_set());
        assert_eq!(inter.interior().pair_count(), 0);
    }

    #[test]
    fn logical_op_matches_named_ops() {
        let u = u3();
        let pi = part(&u, "{{a},{b,c}}");
        let sigma = part(&u, "{{a,b},{c}}");
        assert_eq!(
            logical_op(BoolOp::UNION, &pi, &sigma).unwrap(),
            pi.join(&sigma).unwrap()
        );
        assert_eq!(
            logical_op(BoolOp::INTERSECTION, &pi, &sigma).unwrap(),
            pi.meet(&sigma).unwrap()
        );
        assert_eq!(
            logical_op(BoolOp::IMPLICATION, &pi, &sigma).unwrap(),
            implication(&pi, &sigma).unwrap()
        );
    }

    /// Bell numbers by the Bell-triangle recurrence, independent of the
    /// growth-string enumerator.
    fn bell_number(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let u1 = Universe::parse("{a}").unwrap();
        assert_eq!(enumerate_partitions(&u1).unwrap().count(), 1);
        let u = u3();
        let all: Vec<Partition> = enumerate_partitions(&u).unwrap().collect();
        assert_eq!(all.len(), 5);
        assert_eq!(all.len() as u64, bell_number(3));
        let u4 = Universe::parse("{a,b,c,d}").unwrap();
        let all4: Vec<Partition> = enumerate_partitions(&u4).unwrap().collect();
        assert_eq!(all4.len(), 15);
        assert_eq!(all4.len() as u64, bell_number(4));
        // Exactly once: no duplicates.
        for (i, p) in all4.iter().enumerate() {
            assert!(!all4[..i].contains(p));
        }
        let big = Universe::new((0..13).map(|i| format!("e{i}"))).unwrap();
        assert!(matches!(
            enumerate_partitions(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let u = u3();
        let pi = part(&u, "{ { b , c } , {a} }");
        assert_eq!(pi.to_string(), "{{a},{b,c}}");
        assert_eq!(Partition::parse(&u, &pi.to_string()).unwrap(), pi);
        assert!(Partition::parse(&u, "{{a},{b}}").is_err()); // c missing
        assert!(Partition::parse(&u, "{{a,b},{b,c}}").is_err()); // overlap
        assert!(matches!(
            Partition::parse(&u, "{{a},{b,c}"),
            Err(Error::Parse { .. })
        ));
    }
}
