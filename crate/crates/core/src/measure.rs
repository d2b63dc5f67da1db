//! Brackets, norms, the Born-rule analogue, and attribute-driven projective
//! measurement of set states.
//!
//! A state is a nonempty subset expressed in some coordinate frame; an
//! attribute is a rational-valued function on the labels of its home basis.
//! Measuring a state by an attribute yields each eigenvalue r with
//! probability |f⁻¹(r) ∩ S| / |S| and projects the state to f⁻¹(r) ∩ S.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::gf2::{change_basis, commutes, projection_matrix, Basis, BitVec};
use crate::partition::Partition;
use crate::universe::Universe;
use crate::Rat;

/// A rational-valued attribute on the labels of its home basis. The inverse
/// images of its values are its "eigenspaces".
#[derive(Debug, Clone, PartialEq)]
pub struct Attribute {
    basis: Basis,
    values: Vec<Rat>,
}

impl Attribute {
    /// Builds an attribute total on the basis labels.
    pub fn new(basis: &Basis, values: &[(&str, Rat)]) -> Result<Self> {
        let mut by_label: BTreeMap<&str, Rat> = BTreeMap::new();
        for (label, value) in values {
            if by_label.insert(label, value.clone()).is_some() {
                return Err(Error::PartialAttribute(format!(
                    "label {label} given twice"
                )));
            }
        }
        let values = basis
            .labels()
            .iter()
            .map(|label| {
                by_label
                    .remove(label.as_str())
                    .ok_or_else(|| Error::PartialAttribute(label.clone()))
            })
            .collect::<Result<Vec<Rat>>>()?;
        if let Some((label, _)) = by_label.into_iter().next() {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        Ok(Attribute {
            basis: basis.clone(),
            values,
        })
    }

    /// An attribute on the standard basis of a universe, with values given in
    /// element order.
    pub fn on_universe(universe: &Universe, values: Vec<Rat>) -> Result<Self> {
        if values.len() != universe.size() {
            return Err(Error::LengthMismatch {
                expected: universe.size(),
                got: values.len(),
            });
        }
        Ok(Attribute {
            basis: Basis::standard(universe, "U"),
            values,
        })
    }

    /// The characteristic function of a subset of the basis labels (value 1
    /// on the subset, 0 elsewhere).
    pub fn characteristic(basis: &Basis, subset: &[&str]) -> Result<Self> {
        let mut values = vec![Rat::from_integer(0.into()); basis.dim()];
        for label in subset {
            values[basis.label_index(label)?] = Rat::one();
        }
        Ok(Attribute {
            basis: basis.clone(),
            values,
        })
    }

    pub fn home_basis(&self) -> &Basis {
        &self.basis
    }

    pub fn value(&self, label_index: usize) -> &Rat {
        &self.values[label_index]
    }

    /// The distinct values in ascending order.
    pub fn eigenvalues(&self) -> Vec<Rat> {
        let mut vals = self.values.clone();
        vals.sort();
        vals.dedup();
        vals
    }

    /// Home-frame coordinate mask of f⁻¹(r).
    pub fn preimage_mask(&self, r: &Rat) -> u64 {
        let mut mask = 0u64;
        for (i, v) in self.values.iter().enumerate() {
            if v == r {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Labels of f⁻¹(r).
    pub fn preimage_labels(&self, r: &Rat) -> Vec<&str> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| *v == r)
            .map(|(i, _)| self.basis.labels()[i].as_str())
            .collect()
    }

    /// Whether any eigenvalue has an eigenspace of size > 1.
    pub fn is_degenerate(&self) -> bool {
        self.eigenvalues()
            .iter()
            .any(|r| self.preimage_mask(r).count_ones() > 1)
    }
}

/// ⟨T|S⟩ = |T ∩ S| for subsets expressed in the same frame.
pub fn bracket(t: &BitVec, s: &BitVec) -> Result<u32> {
    if t.frame() != s.frame() || t.len() != s.len() {
        return Err(Error::FrameMismatch {
            left: t.frame().to_string(),
            right: s.frame().to_string(),
        });
    }
    Ok((t.bits() & s.bits()).count_ones())
}

/// ‖S‖² = |S| in the frame the subset is expressed in. The norm is
/// frame-dependent: a singleton of one basis can have norm √2 in another.
pub fn norm_squared(s: &BitVec) -> u32 {
    s.count()
}

/// One measurement outcome: an eigenvalue, its probability, and the projected
/// resultant state f⁻¹(r) ∩ S.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: Rat,
    pub probability: Rat,
    pub post_state: BitVec,
}

/// The full outcome distribution of measuring a state by an attribute, in
/// ascending eigenvalue order. Probabilities sum to exactly one.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    outcomes: Vec<Outcome>,
}

impl OutcomeDistribution {
    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    pub fn outcome_for(&self, value: &Rat) -> Option<&Outcome> {
        self.outcomes.iter().find(|o| &o.value == value)
    }
}

/// The Born-rule analogue: Pr(r|S) = |f⁻¹(r) ∩ S| / |S| for each eigenvalue
/// with nonempty intersection.
pub fn born(s: &BitVec, f: &Attribute) -> Result<OutcomeDistribution> {
    if s.frame() != f.basis.name() || s.len() != f.basis.dim() {
        return Err(Error::FrameMismatch {
            left: s.frame().to_string(),
            right: f.basis.name().to_string(),
        });
    }
    if s.is_empty() {
        return Err(Error::EmptyState);
    }
    let size = Rat::from_integer(u64::from(s.count()).into());
    let mut outcomes = Vec::new();
    for r in f.eigenvalues() {
        let hits = f.preimage_mask(&r) & s.bits();
        if hits == 0 {
            continue;
        }
        outcomes.push(Outcome {
            probability: Rat::from_integer(u64::from(hits.count_ones()).into()) / &size,
            post_state: BitVec::new(s.frame().to_string(), s.len(), hits),
            value: r,
        });
    }
    Ok(OutcomeDistribution { outcomes })
}

/// Conditions a measurement on a given outcome: the projected resultant state
/// f⁻¹(r) ∩ S. Errors if the outcome has zero probability.
pub fn measure(s: &BitVec, f: &Attribute, outcome: &Rat) -> Result<BitVec> {
    let distribution = born(s, f)?;
    distribution
        .outcome_for(outcome)
        .map(|o| o.post_state.clone())
        .ok_or_else(|| Error::ZeroProbabilityOutcome(outcome.to_string()))
}

/// The inverse-image partition of an attribute, on the universe of its home
/// basis labels.
pub fn attribute_partition(f: &Attribute) -> Partition {
    let labels = Universe::new(f.basis.labels().iter().cloned())
        .expect("basis labels form a universe");
    let blocks = f
        .eigenvalues()
        .iter()
        .map(|r| {
            let mask = f.preimage_mask(r);
            (0..f.basis.dim()).filter(|&i| mask >> i & 1 == 1).collect()
        })
        .collect();
    Partition::new(&labels, blocks).expect("preimages partition the labels")
}

/// The simplified compatibility check: both attributes live on one home
/// basis (same frame and same vectors).
pub fn compatible_simple(f: &Attribute, g: &Attribute) -> bool {
    f.basis == g.basis
}

/// The operational compatibility check: every pair of eigenspace projections,
/// conjugated into the reference basis, commutes mod 2.
pub fn attributes_commute(f: &Attribute, g: &Attribute, reference: &Basis) -> Result<bool> {
    f.basis.universe().check_same(g.basis.universe())?;
    f.basis.universe().check_same(reference.universe())?;
    let f_projections = eigen_projections(f, reference)?;
    let g_projections = eigen_projections(g, reference)?;
    for p in &f_projections {
        for q in &g_projections {
            if !commutes(p, q)?.commutes {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn eigen_projections(
    f: &Attribute,
    reference: &Basis,
) -> Result<Vec<crate::gf2::BitMatrix>> {
    f.eigenvalues()
        .iter()
        .map(|r| {
            let labels = f.preimage_labels(r);
            let p = projection_matrix(&f.basis, &labels)?;
            change_basis(&p, &f.basis, reference)
        })
        .collect()
}

/// Result of a completeness check for a set of attributes on one basis.
#[derive(Debug, Clone, PartialEq)]
pub enum CscaOutcome {
    /// Each element labeled by its tuple of eigenvalues |r,…,s⟩.
    Complete(Vec<EigenKet>),
    /// The join of the eigenspace partitions left this block undistinguished.
    Incomplete { witness_block: Vec<String> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenKet {
    pub label: String,
    pub values: Vec<Rat>,
}

impl EigenKet {
    /// Dirac-style rendering, e.g. `|0,1>`.
    pub fn ket_string(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("|{}>", vals.join(","))
    }
}

/// Checks whether the attributes form a complete set on their shared home
/// basis: the join of their inverse-image partitions must be the discrete
/// partition. Returns the eigenvalue tuple per element on success, or a block
/// of size ≥ 2 that remains undistinguished.
pub fn csca_check(attributes: &[&Attribute]) -> Result<CscaOutcome> {
    let first = attributes
        .first()
        .ok_or_else(|| Error::PartialAttribute("no attributes given".into()))?;
    for f in attributes {
        if f.basis != first.basis {
            return Err(Error::FrameMismatch {
                left: first.basis.name().to_string(),
                right: f.basis.name().to_string(),
            });
        }
    }
    let mut joined = attribute_partition(first);
    for f in &attributes[1..] {
        joined = joined.join(&attribute_partition(f))?;
    }
    if joined.is_discrete() {
        let kets = first
            .basis
            .labels()
            .iter()
            .enumerate()
            .map(|(i, label)| EigenKet {
                label: label.clone(),
                values: attributes.iter().map(|f| f.value(i).clone()).collect(),
            })
            .collect();
        Ok(CscaOutcome::Complete(kets))
    } else {
        let block = joined
            .blocks()
            .iter()
            .find(|b| b.len() > 1)
            .expect("non-discrete partition has a block of size > 1");
        Ok(CscaOutcome::Incomplete {
            witness_block: block
                .iter()
                .map(|&i| first.basis.labels()[i].clone())
                .collect(),
        })
    }
}
