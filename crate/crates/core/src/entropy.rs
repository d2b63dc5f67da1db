//! Logical entropy of partitions and distributions, partition density
//! matrices, and measurement as decoherence.
//!
//! The logical entropy of a partition is the normalized count of its
//! distinctions, equivalently 1 − Σ p_B²; it coincides with the Gini-Simpson
//! diversity index of the block distribution. The density matrix of a
//! partition keeps the same information in matrix form, and measuring by
//! another partition zeroes exactly the off-diagonal entries that the
//! measuring partition distinguishes. Everything here is exact rational
//! arithmetic except [`ComplexDensityMatrix`], whose trace-based entropy is
//! generic Hilbert-space math in floating point.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{Partition, Relation};
use crate::universe::Universe;
use crate::Rat;

/// A probability distribution over the elements of a universe, exact and
/// validated to sum to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityVector {
    entries: Vec<Rat>,
}

impl ProbabilityVector {
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDistribution("no entries".into()));
        }
        if entries.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidDistribution("negative entry".into()));
        }
        let total: Rat = entries.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {total}, not 1"
            )));
        }
        Ok(ProbabilityVector { entries })
    }

    /// The equiprobable distribution on `n` points.
    pub fn uniform(n: usize) -> Self {
        let p = Rat::new(BigInt::one(), BigInt::from(n));
        ProbabilityVector {
            entries: vec![p; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.entries[i]
    }
}

/// h(π) = 1 − Σ_B p_B², the probability that two independent draws from the
/// point distribution land in distinct blocks.
pub fn logical_entropy_partition(pi: &Partition, p: &ProbabilityVector) -> Result<Rat> {
    if p.len() != pi.universe().size() {
        return Err(Error::LengthMismatch {
            expected: pi.universe().size(),
            got: p.len(),
        });
    }
    let mut sum_sq = Rat::zero();
    for block in pi.blocks() {
        let p_block: Rat = block.iter().map(|&e| p.get(e).clone()).sum();
        sum_sq += &p_block * &p_block;
    }
    Ok(Rat::one() - sum_sq)
}

/// h(p) = 1 − Σ pᵢ² = Σ_{i≠j} pᵢpⱼ.
pub fn logical_entropy_dist(p: &ProbabilityVector) -> Rat {
    let sum_sq: Rat = p.entries().iter().map(|x| x * x).sum();
    Rat::one() - sum_sq
}

/// Logical divergence d(p‖q) = Σᵢ (pᵢ − qᵢ)². Nonnegative, zero exactly when
/// p = q. (Quadratic form taken from the logical information literature; the
/// entanglement measure is built on it.)
pub fn logical_divergence(p: &ProbabilityVector, q: &ProbabilityVector) -> Result<Rat> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            expected: p.len(),
            got: q.len(),
        });
    }
    Ok(p.entries()
        .iter()
        .zip(q.entries())
        .map(|(a, b)| {
            let d = a - b;
            &d * &d
        })
        .sum())
}

/// The density matrix of a partition with point probabilities: diagonal pᵢ,
/// off-diagonal √(pᵢpⱼ) where (i,j) is an indistinction of the partition and
/// zero where it is a distinction.
///
/// The off-diagonal values are kept as their squares pᵢpⱼ plus a coherence
/// flag, so all arithmetic stays rational; every downstream quantity
/// (entropies, decoherence deltas) consumes only the squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetDensityMatrix {
    universe: Universe,
    probs: Vec<Rat>,
    coherent: Vec<bool>,
}

impl SetDensityMatrix {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn dim(&self) -> usize {
        self.universe.size()
    }

    pub fn prob(&self, i: usize) -> &Rat {
        &self.probs[i]
    }

    /// Whether entry (i,j) is a surviving coherence (an indistinction).
    pub fn is_coherent(&self, i: usize, j: usize) -> bool {
        self.coherent[i * self.dim() + j]
    }

    /// The squared value of entry (i,j): pᵢpⱼ when coherent, zero otherwise.
    pub fn squared_entry(&self, i: usize, j: usize) -> Rat {
        if self.is_coherent(i, j) {
            &self.probs[i] * &self.probs[j]
        } else {
            Rat::zero()
        }
    }

    /// tr[ρ²] = Σᵢⱼ ρᵢⱼ², the probability of drawing an indistinction.
    pub fn purity(&self) -> Rat {
        let n = self.dim();
        let mut total = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                total += self.squared_entry(i, j);
            }
        }
        total
    }

    /// The partition whose indit set is the coherence pattern.
    pub fn partition(&self) -> Partition {
        let n = self.dim();
        let mut rel = Relation::empty(&self.universe);
        for i in 0..n {
            for j in 0..n {
                if self.is_coherent(i, j) {
                    rel.insert(i, j);
                }
            }
        }
        Partition::from_equivalence(&rel).expect("coherence pattern is an equivalence relation")
    }

    /// Exact text form of entry (i,j): the diagonal holds pᵢ, a coherent
    /// off-diagonal holds √(pᵢpⱼ) (printed as a rational when the square root
    /// is exact, as `sqrt(pᵢpⱼ)` otherwise), and a decohered entry holds 0.
    pub fn entry_string(&self, i: usize, j: usize) -> String {
        if i == j {
            return self.probs[i].to_string();
        }
        if !self.is_coherent(i, j) {
            return "0".to_string();
        }
        let sq = self.squared_entry(i, j);
        match exact_sqrt(&sq) {
            Some(root) => root.to_string(),
            None => format!("sqrt({sq})"),
        }
    }
}

/// √r when r is the square of a rational, `None` otherwise.
fn exact_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num_root = r.numer().sqrt();
    let den_root = r.denom().sqrt();
    if &(&num_root * &num_root) == r.numer() && &(&den_root * &den_root) == r.denom() {
        Some(Rat::new(num_root, den_root))
    } else {
        None
    }
}

/// Builds ρ^π for a partition and point probabilities.
pub fn density_matrix(pi: &Partition, p: &ProbabilityVector) -> Result<SetDensityMatrix> {
    if p.len() != pi.universe().size() {
        return Err(Error::LengthMismatch {
            expected: pi.universe().size(),
            got: p.len(),
        });
    }
    let indit = pi.indit_set();
    let n = pi.universe().size();
    let mut coherent = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            coherent[i * n + j] = indit.contains(i, j);
        }
    }
    Ok(SetDensityMatrix {
        universe: pi.universe().clone(),
        probs: p.entries().to_vec(),
        coherent,
    })
}

/// h(ρ) = 1 − tr[ρ²] for a set density matrix; equals the logical entropy of
/// the underlying partition.
pub fn quantum_logical_entropy_set(rho: &SetDensityMatrix) -> Rat {
    Rat::one() - rho.purity()
}

/// Projective measurement by the partition `sigma`: zeroes every off-diagonal
/// entry that `sigma` distinguishes, leaving the density matrix of the join of
/// the underlying partition with `sigma`.
pub fn luders_update(rho: &SetDensityMatrix, sigma: &Partition) -> Result<SetDensityMatrix> {
    rho.universe().check_same(sigma.universe())?;
    let indit = sigma.indit_set();
    let n = rho.dim();
    let mut coherent = rho.coherent.clone();
    for i in 0..n {
        for j in 0..n {
            if !indit.contains(i, j) {
                coherent[i * n + j] = false;
            }
        }
    }
    Ok(SetDensityMatrix {
        universe: rho.universe.clone(),
        probs: rho.probs.clone(),
        coherent,
    })
}

/// Entropy increase across a measurement: h(after) − h(before). When `after`
/// arises from `before` by decoherence this equals the sum of the squared
/// off-diagonal entries that were zeroed.
pub fn entropy_delta(before: &SetDensityMatrix, after: &SetDensityMatrix) -> Result<Rat> {
    before.universe().check_same(after.universe())?;
    if before.probs != after.probs {
        return Err(Error::DiagonalMismatch);
    }
    Ok(quantum_logical_entropy_set(after) - quantum_logical_entropy_set(before))
}

/// Tolerance for Hermiticity and trace checks on complex density matrices.
pub const COMPLEX_TOLERANCE: f64 = 1e-9;

/// A complex density matrix, validated to be Hermitian with unit trace and
/// nonnegative real diagonal (all within [`COMPLEX_TOLERANCE`]).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexDensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexDensityMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        for i in 0..dim {
            for j in 0..dim {
                let delta = entries[i * dim + j] - entries[j * dim + i].conj();
                if delta.norm() > COMPLEX_TOLERANCE {
                    return Err(Error::NonHermitian);
                }
            }
        }
        let trace: Complex64 = (0..dim).map(|i| entries[i * dim + i]).sum();
        if (trace.re - 1.0).abs() > COMPLEX_TOLERANCE || trace.im.abs() > COMPLEX_TOLERANCE {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace is {trace}, not 1"
            )));
        }
        for i in 0..dim {
            let d = entries[i * dim + i];
            if d.re < -COMPLEX_TOLERANCE {
                return Err(Error::InvalidDensityMatrix(format!(
                    "diagonal entry {i} is negative"
                )));
            }
        }
        Ok(ComplexDensityMatrix { dim, entries })
    }

    /// ρ = |ψ⟩⟨ψ| for a nonzero state vector (normalized internally).
    pub fn pure_state(amplitudes: &[Complex64]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq == 0.0 {
            return Err(Error::InvalidDensityMatrix("zero state vector".into()));
        }
        let dim = amplitudes.len();
        let mut entries = vec![Complex64::ZERO; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                entries[i * dim + j] = amplitudes[i] * amplitudes[j].conj() / norm_sq;
            }
        }
        ComplexDensityMatrix::new(dim, entries)
    }

    /// The classical mixture diag(p₁,…,pₙ).
    pub fn from_diagonal(probs: &[f64]) -> Result<Self> {
        let dim = probs.len();
        let mut entries = vec![Complex64::ZERO; dim * dim];
        for (i, &p) in probs.iter().enumerate() {
            entries[i * dim + i] = Complex64::new(p, 0.0);
        }
        ComplexDensityMatrix::new(dim, entries)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_diagonal(&vec![1.0 / dim as f64; dim]).expect("uniform diagonal is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    /// tr[ρ²] = Σᵢⱼ |ρᵢⱼ|² (real because ρ is Hermitian).
    pub fn purity(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum()
    }

    /// Whether ρ² = ρ within the tolerance.
    pub fn is_idempotent(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::ZERO;
                for k in 0..n {
                    acc += self.entry(i, k) * self.entry(k, j);
                }
                if (acc - self.entry(i, j)).norm() > 1e-7 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for ComplexDensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, "  ")?;
                }
                let e = self.entry(i, j);
                write!(f, "{:+.4}{:+.4}i", e.re, e.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// h(ρ) = 1 − tr[ρ²] = Σ_{i≠j} [pᵢpⱼ − |ρᵢⱼ|²]; zero exactly on pure states.
pub fn quantum_logical_entropy(rho: &ComplexDensityMatrix) -> f64 {
    1.0 - rho.purity()
}
