//! Subsets of a universe as vectors over the two-element field.
//!
//! The power set of an n-element universe is a vector space over GF(2) under
//! symmetric difference. Vectors and matrices here are tagged with the name of
//! the coordinate frame (basis) they are expressed in, and operations refuse
//! to mix frames without an explicit conversion: the projection `{a,c} ∩ ()`
//! acting on one frame is a very different operator from the same label set
//! acting in another frame.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::ENUMERATION_CAP;
use crate::universe::Universe;

/// A vector of GF(2)ⁿ: the characteristic bits of a subset, tagged with the
/// coordinate frame they are expressed in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    frame: String,
    len: usize,
    bits: u64,
}

impl BitVec {
    pub fn new(frame: impl Into<String>, len: usize, bits: u64) -> Self {
        assert!(len <= 64, "bit vectors are capped at 64 coordinates");
        BitVec {
            frame: frame.into(),
            len,
            bits: bits & mask(len),
        }
    }

    pub fn frame(&self) -> &str {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Number of coordinates set; `‖S‖² = |S|` in this frame.
    pub fn count(&self) -> u32 {
        self.bits.count_ones()
    }

    fn check_frame(&self, other: &BitVec) -> Result<()> {
        if self.frame != other.frame || self.len != other.len {
            return Err(Error::FrameMismatch {
                left: self.frame.clone(),
                right: other.frame.clone(),
            });
        }
        Ok(())
    }
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Vector sum: the symmetric difference of the two subsets.
pub fn add(s: &BitVec, t: &BitVec) -> Result<BitVec> {
    s.check_frame(t)?;
    Ok(BitVec::new(s.frame.clone(), s.len, s.bits ^ t.bits))
}

/// A rectangular matrix over GF(2), typed as a linear map from `domain`
/// coordinates to `codomain` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    domain: String,
    codomain: String,
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(domain: impl Into<String>, codomain: impl Into<String>, rows: usize, cols: usize) -> Self {
        assert!(cols <= 64, "bit matrices are capped at 64 columns");
        BitMatrix {
            domain: domain.into(),
            codomain: codomain.into(),
            rows,
            cols,
            bits: vec![0; rows],
        }
    }

    pub fn identity(frame: impl Into<String>, n: usize) -> Self {
        let frame = frame.into();
        let mut m = BitMatrix::zero(frame.clone(), frame, n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a square matrix acting within one frame from 0/1 rows.
    pub fn from_rows(frame: impl Into<String>, rows: &[&[u8]]) -> Self {
        let frame = frame.into();
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = BitMatrix::zero(frame.clone(), frame, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v != 0);
            }
        }
        m
    }

    pub fn domain(&self) -> &str {
        &self.domain
    }

    pub fn codomain(&self) -> &str {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.bits[i] |= 1 << j;
        } else {
            self.bits[i] &= !(1 << j);
        }
    }

    /// The matrix as 0/1 rows, for display and literal comparison.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product `self · rhs` (apply `rhs` first). Frames must chain.
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.domain != rhs.codomain {
            return Err(Error::FrameMismatch {
                left: self.domain.clone(),
                right: rhs.codomain.clone(),
            });
        }
        let mut out = BitMatrix::zero(rhs.domain.clone(), self.codomain.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            let mut acc = 0u64;
            for k in 0..self.cols {
                if self.get(i, k) {
                    acc ^= rhs.bits[k];
                }
            }
            out.bits[i] = acc;
        }
        Ok(out)
    }

    /// Applies the matrix to a vector expressed in the domain frame.
    pub fn apply(&self, v: &BitVec) -> Result<BitVec> {
        if v.frame() != self.domain || v.len() != self.cols {
            return Err(Error::FrameMismatch {
                left: self.domain.clone(),
                right: v.frame().to_string(),
            });
        }
        let mut out = 0u64;
        for i in 0..self.rows {
            if (self.bits[i] & v.bits()).count_ones() % 2 == 1 {
                out |= 1 << i;
            }
        }
        Ok(BitVec::new(self.codomain.clone(), self.rows, out))
    }

    /// Inverse mod 2 by Gauss-Jordan elimination with bitwise row operations.
    /// The inverse maps codomain coordinates back to domain coordinates.
    pub fn inverse(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.bits.clone();
        let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| work[r] >> col & 1 == 1)
                .ok_or(Error::SingularMatrix)?;
            work.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && work[r] >> col & 1 == 1 {
                    work[r] ^= work[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(BitMatrix {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            rows: n,
            cols: n,
            bits: inv,
        })
    }

    /// Rank over GF(2) by row elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.bits.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if let Some(pivot) = (rank..self.rows).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, pivot);
                for r in 0..self.rows {
                    if r != rank && rows[r] >> col & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square()
            && self.domain == self.codomain
            && self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A named basis of GF(2)ⁿ: n labeled, independent vectors given in the
/// reference (universe) coordinates. The basis defines a coordinate frame
/// carrying its name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    name: String,
    labels: Vec<String>,
    vectors: Vec<u64>,
    universe: Universe,
    /// Maps reference coordinates to this basis's coordinates.
    from_reference: BitMatrix,
}

impl Basis {
    /// Validates a candidate basis: n labeled subsets of the universe whose
    /// stacked matrix is non-singular mod 2. A dependent set is rejected with
    /// the dependent combination as witness.
    pub fn new(
        universe: &Universe,
        name: impl Into<String>,
        labeled_vectors: &[(&str, &[&str])],
    ) -> Result<Self> {
        let name = name.into();
        let n = universe.size();
        if labeled_vectors.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: labeled_vectors.len(),
            });
        }
        let mut labels = Vec::with_capacity(n);
        let mut vectors = Vec::with_capacity(n);
        for (label, subset) in labeled_vectors {
            if labels.contains(&label.to_string()) {
                return Err(Error::SingularBasis(format!("duplicate label {label}")));
            }
            let mut bits = 0u64;
            for element in *subset {
                bits |= 1 << universe.require(element)?;
            }
            labels.push(label.to_string());
            vectors.push(bits);
        }
        Self::from_masks(universe, name, labels, vectors)
    }

    /// As [`Basis::new`] but with vectors already packed as reference masks.
    pub fn from_masks(
        universe: &Universe,
        name: impl Into<String>,
        labels: Vec<String>,
        vectors: Vec<u64>,
    ) -> Result<Self> {
        let name = name.into();
        let n = universe.size();
        // Independence check with witness: eliminate the vectors as rows,
        // tracking which original vectors each row combines.
        let mut rows: Vec<(u64, u64)> = vectors.iter().enumerate().map(|(i, &v)| (v, 1 << i)).collect();
        let mut pivot_row = 0usize;
        for col in 0..n {
            if let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r].0 >> col & 1 == 1) {
                rows.swap(pivot_row, r);
                for other in 0..rows.len() {
                    if other != pivot_row && rows[other].0 >> col & 1 == 1 {
                        rows[other].0 ^= rows[pivot_row].0;
                        rows[other].1 ^= rows[pivot_row].1;
                    }
                }
                pivot_row += 1;
            }
        }
        if let Some(&(_, combo)) = rows.iter().find(|&&(v, _)| v == 0) {
            let names: Vec<&str> = (0..labels.len())
                .filter(|&i| combo >> i & 1 == 1)
                .map(|i| labels[i].as_str())
                .collect();
            return Err(Error::SingularBasis(format!(
                "{} sum to the zero vector",
                names.join(" + ")
            )));
        }
        // Columns of to_reference are the basis vectors in reference coords.
        let mut to_reference = BitMatrix::zero(name.clone(), "", n, n);
        for (j, &v) in vectors.iter().enumerate() {
            for i in 0..n {
                if v >> i & 1 == 1 {
                    to_reference.set(i, j, true);
                }
            }
        }
        let mut from_reference = to_reference.inverse().expect("independent vectors invert");
        from_reference.domain = reference_frame_name();
        from_reference.codomain = name.clone();
        Ok(Basis {
            name,
            labels,
            vectors,
            universe: universe.clone(),
            from_reference,
        })
    }

    /// The standard basis of singletons, labeled by the universe elements.
    pub fn standard(universe: &Universe, name: impl Into<String>) -> Self {
        let n = universe.size();
        let labels = universe.labels().to_vec();
        let vectors: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        Basis::from_masks(universe, name, labels, vectors).expect("singletons are independent")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Whether this basis is the standard singleton basis of its universe.
    pub fn is_standard(&self) -> bool {
        self.vectors.iter().enumerate().all(|(i, &v)| v == 1 << i)
    }

    /// Reference-coordinate mask of basis vector `j`.
    pub fn vector_mask(&self, j: usize) -> u64 {
        self.vectors[j]
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The subset of this basis's labels as a vector in this frame.
    pub fn subset(&self, labels: &[&str]) -> Result<BitVec> {
        let mut bits = 0u64;
        for label in labels {
            bits |= 1 << self.label_index(label)?;
        }
        Ok(BitVec::new(self.name.clone(), self.dim(), bits))
    }

    /// Converts coordinates in this frame to reference coordinates.
    pub fn coords_to_reference(&self, coords: u64) -> u64 {
        let mut out = 0u64;
        for (j, &v) in self.vectors.iter().enumerate() {
            if coords >> j & 1 == 1 {
                out ^= v;
            }
        }
        out
    }

    /// Expresses a reference-coordinate vector in this frame.
    pub fn reference_to_coords(&self, reference: u64) -> u64 {
        let n = self.dim();
        let mut out = 0u64;
        for i in 0..n {
            if (self.from_reference.bits[i] & reference).count_ones() % 2 == 1 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Renders frame coordinates as a label set, e.g. `{a',b'}`.
    pub fn subset_string(&self, coords: u64) -> String {
        let members: Vec<&str> = (0..self.dim())
            .filter(|&i| coords >> i & 1 == 1)
            .map(|i| self.labels[i].as_str())
            .collect();
        format!("{{{}}}", members.join(","))
    }

    /// When every basis vector is a singleton, the pairing of basis labels
    /// with universe labels (the basis is then a relabeling of the standard
    /// one, so attributes on it live on the same element set).
    pub fn singleton_matching(&self) -> Option<Vec<(String, String)>> {
        let mut pairs = Vec::with_capacity(self.dim());
        for (j, &v) in self.vectors.iter().enumerate() {
            if v.count_ones() != 1 {
                return None;
            }
            let element = v.trailing_zeros() as usize;
            pairs.push((
                self.labels[j].clone(),
                self.universe.label(element).to_string(),
            ));
        }
        Some(pairs)
    }
}

fn reference_frame_name() -> String {
    "reference".to_string()
}

/// The matrix converting `from`-frame coordinates into `to`-frame
/// coordinates; its column j is the expansion of `from`'s j-th vector in the
/// `to` frame. Its inverse is the conversion the other way.
pub fn conversion_matrix(from: &Basis, to: &Basis) -> Result<BitMatrix> {
    from.universe.check_same(&to.universe)?;
    let n = from.dim();
    let mut m = BitMatrix::zero(from.name.clone(), to.name.clone(), n, n);
    for j in 0..n {
        let coords = to.reference_to_coords(from.vector_mask(j));
        for i in 0..n {
            if coords >> i & 1 == 1 {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}

/// Inverse mod 2 of a square matrix; errors on singular input.
pub fn inverse_mod2(m: &BitMatrix) -> Result<BitMatrix> {
    m.inverse()
}

/// The diagonal projection matrix selecting a subset of a basis's labels, in
/// that basis's coordinates. Idempotent mod 2.
pub fn projection_matrix(basis: &Basis, subset_labels: &[&str]) -> Result<BitMatrix> {
    let n = basis.dim();
    let mut m = BitMatrix::zero(basis.name().to_string(), basis.name().to_string(), n, n);
    for label in subset_labels {
        let i = basis.label_index(label)?;
        m.set(i, i, true);
    }
    Ok(m)
}

/// Conjugates a square matrix acting in `from` coordinates into `to`
/// coordinates: 𝒞_{to←from} · M · 𝒞_{from←to}.
pub fn change_basis(m: &BitMatrix, from: &Basis, to: &Basis) -> Result<BitMatrix> {
    if m.domain() != from.name() || m.codomain() != from.name() {
        return Err(Error::FrameMismatch {
            left: m.domain().to_string(),
            right: from.name().to_string(),
        });
    }
    let forward = conversion_matrix(from, to)?;
    let backward = conversion_matrix(to, from)?;
    forward.mul(m)?.mul(&backward)
}

/// The two products of a commutation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Commutation {
    pub commutes: bool,
    /// m · n (apply n first).
    pub mn: BitMatrix,
    /// n · m (apply m first).
    pub nm: BitMatrix,
}

/// Checks whether two square matrices in the same frame commute, returning
/// both products as witnesses.
pub fn commutes(m: &BitMatrix, n: &BitMatrix) -> Result<Commutation> {
    if m.rows() != n.rows() || m.cols() != n.cols() || !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            m.rows(),
            m.cols(),
            n.rows(),
            n.cols()
        )));
    }
    let mn = m.mul(n)?;
    let nm = n.mul(m)?;
    Ok(Commutation {
        commutes: mn == nm,
        mn,
        nm,
    })
}

/// Decomposes the nonzero vectors of the space into the cycles of a
/// non-singular dynamics matrix. Cycles are listed by their smallest member
/// and each cycle starts at that member.
pub fn orbit_decomposition(a: &BitMatrix) -> Result<Vec<Vec<u64>>> {
    if !a.is_square() || a.domain() != a.codomain() {
        return Err(Error::DimensionMismatch(
            "dynamics must be square within one frame".into(),
        ));
    }
    if !a.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let n = a.rows();
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    let step = |v: u64| -> u64 {
        let mut out = 0u64;
        for i in 0..n {
            if (a.bits[i] & v).count_ones() % 2 == 1 {
                out |= 1 << i;
            }
        }
        out
    };
    let total = 1u64 << n;
    let mut visited = vec![false; total as usize];
    let mut cycles = Vec::new();
    for start in 1..total {
        if visited[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        loop {
            visited[v as usize] = true;
            cycle.push(v);
            v = step(v);
            if v == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// A ket table: every vector of the space expressed in each given basis.
#[derive(Debug, Clone)]
pub struct KetTable {
    bases: Vec<Basis>,
    /// Row per vector; entry per basis holds that basis's coordinates.
    rows: Vec<Vec<u64>>,
}

impl KetTable {
    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row_strings(&self, row: usize) -> Vec<String> {
        self.rows[row]
            .iter()
            .zip(&self.bases)
            .map(|(&coords, basis)| basis.subset_string(coords))
            .collect()
    }

    /// Looks up the row whose coordinates in the first basis are `coords`.
    pub fn row_for(&self, first_basis_coords: u64) -> Option<&Vec<u64>> {
        self.rows.iter().find(|r| r[0] == first_basis_coords)
    }
}

/// Builds the 2ⁿ-row ket table over the given bases (all on one universe).
/// Rows are ordered by descending support size in reference coordinates,
/// then numerically.
pub fn ket_table(bases: &[Basis]) -> Result<KetTable> {
    let first = bases.first().ok_or_else(|| {
        Error::DimensionMismatch("ket table needs at least one basis".into())
    })?;
    let n = first.dim();
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: ENUMERATION_CAP,
        });
    }
    for b in bases {
        first.universe().check_same(b.universe())?;
    }
    let mut reference_vectors: Vec<u64> = (0..1u64 << n).collect();
    reference_vectors.sort_by_key(|&v| (std::cmp::Reverse(v.count_ones()), v));
    let rows = reference_vectors
        .into_iter()
        .map(|v| bases.iter().map(|b| b.reference_to_coords(v)).collect())
        .collect();
    Ok(KetTable {
        bases: bases.to_vec(),
        rows,
    })
}
