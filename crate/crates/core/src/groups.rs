//! Set representations of finite groups: orbit partitions, commuting
//! attributes, the set-level Schur lemma, CSCA labeling of orbits, and Cayley
//! and coset representations.
//!
//! A group acting by permutations on a universe defines indistinctions: two
//! elements connected by a group element can never be distinguished
//! consistently with the symmetry. The orbits are the minimal invariant
//! subsets, and an attribute commuting with the action is constant on each
//! orbit.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::measure::Attribute;
use crate::partition::{Partition, UnionFind};
use crate::universe::Universe;
use crate::Rat;

/// Cap on the element count when closing a generated group.
pub const GROUP_CAP: usize = 100_000;

/// A permutation of a universe, stored as the image of each element index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(universe: &Universe, map: Vec<usize>) -> Result<Self> {
        let n = universe.size();
        if map.len() != n {
            return Err(Error::NotAPermutation(format!(
                "image list has length {}, universe has {n}",
                map.len()
            )));
        }
        let mut seen = vec![false; n];
        for &image in &map {
            if image >= n || seen[image] {
                return Err(Error::NotAPermutation(
                    "image list is not a bijection".into(),
                ));
            }
            seen[image] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(universe: &Universe) -> Self {
        Permutation {
            map: (0..universe.size()).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &image) in self.map.iter().enumerate() {
            map[image] = i;
        }
        Permutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &image)| i == image)
    }
}

/// A finite group acting by permutations on a universe: the full element set,
/// closed under composition and inverse and containing the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetRepresentation {
    universe: Universe,
    elements: Vec<Permutation>,
}

impl SetRepresentation {
    /// Closes a generating set under composition (which, in a finite
    /// permutation group containing the identity, also yields all inverses).
    /// Capped at [`GROUP_CAP`] elements.
    pub fn generate(universe: &Universe, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != universe.size() {
                return Err(Error::NotAPermutation(format!(
                    "generator degree {} does not match universe size {}",
                    g.degree(),
                    universe.size()
                )));
            }
        }
        let mut elements = std::collections::BTreeSet::new();
        elements.insert(Permutation::identity(universe));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(universe)];
        while let Some(current) = frontier.pop() {
            for g in generators {
                let next = g.compose(&current);
                if elements.insert(next.clone()) {
                    if elements.len() > GROUP_CAP {
                        return Err(Error::GroupTooLarge(GROUP_CAP));
                    }
                    frontier.push(next);
                }
            }
        }
        Ok(SetRepresentation {
            universe: universe.clone(),
            elements: elements.into_iter().collect(),
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The orbit partition: blocks are the classes of u ~ g(u).
    pub fn orbits(&self) -> Partition {
        let n = self.universe.size();
        let mut uf = UnionFind::new(n);
        for g in &self.elements {
            for i in 0..n {
                uf.union(i, g.apply(i));
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            classes.entry(uf.find(i)).or_default().push(i);
        }
        Partition::new(&self.universe, classes.into_values().collect())
            .expect("orbit classes partition the universe")
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().is_indiscrete()
    }
}

fn check_attribute_domain(f: &Attribute, rep: &SetRepresentation) -> Result<()> {
    if f.home_basis().labels() != rep.universe().labels() {
        return Err(Error::UniverseMismatch(format!(
            "attribute lives on {:?}, representation on {}",
            f.home_basis().labels(),
            rep.universe()
        )));
    }
    Ok(())
}

/// Whether f∘R_g = f for every group element: f is an invariant of the
/// action.
pub fn commutes_with(f: &Attribute, rep: &SetRepresentation) -> Result<bool> {
    check_attribute_domain(f, rep)?;
    let n = rep.universe().size();
    Ok(rep
        .elements()
        .iter()
        .all(|g| (0..n).all(|i| f.value(g.apply(i)) == f.value(i))))
}

/// The set-level Schur lemma in algorithmic form: a commuting attribute is
/// constant on each orbit, so it decomposes as a value per orbit. A
/// non-commuting attribute fails with a concrete non-constant orbit as
/// witness.
pub fn attribute_decomposition(
    f: &Attribute,
    rep: &SetRepresentation,
) -> Result<Vec<(Vec<usize>, Rat)>> {
    check_attribute_domain(f, rep)?;
    let orbit_partition = rep.orbits();
    let mut decomposition = Vec::new();
    for orbit in orbit_partition.blocks() {
        let value = f.value(orbit[0]).clone();
        if orbit.iter().any(|&i| f.value(i) != &value) {
            let labels: Vec<&str> = orbit
                .iter()
                .map(|&i| rep.universe().label(i))
                .collect();
            let values: Vec<String> = orbit.iter().map(|&i| f.value(i).to_string()).collect();
            return Err(Error::NonConstantOrbit {
                orbit: labels.join(","),
                values: values.join(","),
            });
        }
        decomposition.push((orbit.clone(), value));
    }
    Ok(decomposition)
}

/// Result of checking a list of commuting attributes for completeness over
/// the orbits.
#[derive(Debug, Clone, PartialEq)]
pub enum OrbitCsca {
    /// Each orbit labeled by its eigenvalue tuple |r,…,s⟩.
    Complete(Vec<(Vec<usize>, Vec<Rat>)>),
    /// Two orbits share every eigenvalue, so the attributes cannot tell them
    /// apart.
    Incomplete {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

/// Checks whether the attributes' inverse-image partitions join to exactly
/// the orbit partition. All attributes must commute with the representation.
pub fn csca_orbits(attributes: &[&Attribute], rep: &SetRepresentation) -> Result<OrbitCsca> {
    for f in attributes {
        if !commutes_with(f, rep)? {
            // Reuse the decomposition error with its witness orbit.
            attribute_decomposition(f, rep)?;
            unreachable!("non-commuting attribute must fail decomposition");
        }
    }
    let orbit_partition = rep.orbits();
    let mut tuples: Vec<(Vec<usize>, Vec<Rat>)> = orbit_partition
        .blocks()
        .iter()
        .map(|orbit| {
            let tuple = attributes
                .iter()
                .map(|f| f.value(orbit[0]).clone())
                .collect();
            (orbit.clone(), tuple)
        })
        .collect();
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            if tuples[i].1 == tuples[j].1 {
                return Ok(OrbitCsca::Incomplete {
                    first: tuples[i].0.clone(),
                    second: tuples[j].0.clone(),
                });
            }
        }
    }
    // Distinct tuples per orbit: sort for deterministic presentation.
    tuples.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(OrbitCsca::Complete(tuples))
}

/// An abstract finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates the table as a group: closure (by construction), a two-sided
    /// identity, inverses, and associativity checked exhaustively (order
    /// capped at 64).
    pub fn new(names: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if n == 0 || n > 64 {
            return Err(Error::NotAGroup(format!(
                "order {n} outside the supported range 1..=64"
            )));
        }
        if table.len() != n * n {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if table.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        let product = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| product(e, g) == g && product(g, e) == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for (g, name) in names.iter().enumerate() {
            if !(0..n).any(|h| product(g, h) == identity && product(h, g) == identity) {
                return Err(Error::NotAGroup(format!("{name} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if product(product(a, b), c) != product(a, product(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({},{},{})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            names,
            table,
            identity,
        })
    }

    /// The cyclic group of order n with elements named 0..n-1.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        GroupTable::new(names, table).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The Cayley representation: the group acting on itself by left
    /// multiplication, R_g(x) = g·x. Always transitive.
    pub fn cayley(&self) -> SetRepresentation {
        let universe =
            Universe::new(self.names.iter().cloned()).expect("group element names are labels");
        let n = self.order();
        let elements = (0..n)
            .map(|g| Permutation {
                map: (0..n).map(|x| self.product(g, x)).collect(),
            })
            .collect();
        SetRepresentation { universe, elements }
    }

    fn check_subgroup(&self, h: &[usize]) -> Result<()> {
        if h.is_empty() {
            return Err(Error::NotASubgroup("empty subset".into()));
        }
        if h.iter().any(|&x| x >= self.order()) {
            return Err(Error::NotASubgroup("element out of range".into()));
        }
        if !h.contains(&self.identity) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in h {
            for &b in h {
                if !h.contains(&self.product(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed: {}·{} falls outside",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        // Closure plus identity in a finite group gives inverses.
        Ok(())
    }

    /// Restricting the Cayley action to a subgroup H: the orbits are exactly
    /// the right cosets Hg.
    pub fn subgroup_orbits(&self, h: &[usize]) -> Result<Partition> {
        self.check_subgroup(h)?;
        let universe =
            Universe::new(self.names.iter().cloned()).expect("group element names are labels");
        let n = self.order();
        let mut uf = UnionFind::new(n);
        for &member in h {
            for x in 0..n {
                uf.union(x, self.product(member, x));
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            classes.entry(uf.find(x)).or_default().push(x);
        }
        Partition::new(&universe, classes.into_values().collect())
    }
}
