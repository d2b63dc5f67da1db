//! Product universes: separated and entangled subsets, marginals, the
//! correlation criterion, and product ket tables.
//!
//! A subset S of X×Y is separated when it equals the product of its supports;
//! otherwise it is entangled, and exactly then the equiprobable distribution
//! on S is correlated. Entanglement is quantified by the logical divergence
//! between that distribution and the product of its marginals.

use num_traits::Zero;

use crate::entropy::{logical_divergence, ProbabilityVector};
use crate::error::{Error, Result};
use crate::gf2::Basis;
use crate::partition::ENUMERATION_CAP;
use crate::universe::Universe;
use crate::Rat;

/// A subset of X×Y stored as a dense |X|×|Y| boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSubset {
    left: Universe,
    right: Universe,
    bits: Vec<bool>,
}

impl ProductSubset {
    pub fn new(left: &Universe, right: &Universe, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut bits = vec![false; left.size() * right.size()];
        for &(x, y) in pairs {
            if x >= left.size() || y >= right.size() {
                return Err(Error::UnknownLabel(format!("pair index ({x},{y})")));
            }
            bits[x * right.size() + y] = true;
        }
        Ok(ProductSubset {
            left: left.clone(),
            right: right.clone(),
            bits,
        })
    }

    /// Parses the text form `{(a,a),(b,b)}`.
    pub fn parse(left: &Universe, right: &Universe, input: &str) -> Result<Self> {
        let mut p = crate::text::Parser::new(input);
        let label_pairs = p.braced_pair_list()?;
        p.finish()?;
        let pairs = label_pairs
            .iter()
            .map(|(x, y)| Ok((left.require(x)?, right.require(y)?)))
            .collect::<Result<Vec<(usize, usize)>>>()?;
        ProductSubset::new(left, right, &pairs)
    }

    /// Builds the subset whose pair matrix is the given mask, row-major over
    /// (x, y).
    pub fn from_mask(left: &Universe, right: &Universe, mask: u64) -> Self {
        let total = left.size() * right.size();
        assert!(total <= 64);
        ProductSubset {
            left: left.clone(),
            right: right.clone(),
            bits: (0..total).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn left(&self) -> &Universe {
        &self.left
    }

    pub fn right(&self) -> &Universe {
        &self.right
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.right.size() + y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let m = self.right.size();
        (0..self.left.size())
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter(|&(x, y)| self.contains(x, y))
            .collect()
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }

    /// The supports (projections) of the subset on each factor.
    pub fn supports(&self) -> (Vec<usize>, Vec<usize>) {
        let on_x = (0..self.left.size())
            .filter(|&x| (0..self.right.size()).any(|y| self.contains(x, y)))
            .collect();
        let on_y = (0..self.right.size())
            .filter(|&y| (0..self.left.size()).any(|x| self.contains(x, y)))
            .collect();
        (on_x, on_y)
    }

    /// Separated means S = S_X × S_Y, the product of its supports.
    pub fn is_separated(&self) -> bool {
        let (sx, sy) = self.supports();
        self.count() == sx.len() * sy.len()
    }

    /// The graph-of-a-bijection predicate: every row and every column holds
    /// exactly one pair. These are the maximally entangled subsets.
    pub fn is_bijection_graph(&self) -> bool {
        self.left.size() == self.right.size()
            && (0..self.left.size()).all(|x| {
                (0..self.right.size())
                    .filter(|&y| self.contains(x, y))
                    .count()
                    == 1
            })
            && (0..self.right.size()).all(|y| {
                (0..self.left.size())
                    .filter(|&x| self.contains(x, y))
                    .count()
                    == 1
            })
    }

    pub fn pair_string(&self) -> String {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(x, y)| format!("({},{})", self.left.label(x), self.right.label(y)))
            .collect();
        format!("{{{}}}", pairs.join(","))
    }
}

/// A joint probability distribution on X×Y, exact and validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    left: Universe,
    right: Universe,
    probs: Vec<Rat>,
}

impl JointDistribution {
    pub fn new(left: &Universe, right: &Universe, probs: Vec<Rat>) -> Result<Self> {
        if probs.len() != left.size() * right.size() {
            return Err(Error::LengthMismatch {
                expected: left.size() * right.size(),
                got: probs.len(),
            });
        }
        // Reuse the distribution validation (nonnegative, sums to one).
        ProbabilityVector::new(probs.clone())?;
        Ok(JointDistribution {
            left: left.clone(),
            right: right.clone(),
            probs,
        })
    }

    pub fn prob(&self, x: usize, y: usize) -> &Rat {
        &self.probs[x * self.right.size() + y]
    }

    /// Row sums and column sums.
    pub fn marginals(&self) -> (ProbabilityVector, ProbabilityVector) {
        let (n, m) = (self.left.size(), self.right.size());
        let on_x: Vec<Rat> = (0..n)
            .map(|x| (0..m).map(|y| self.prob(x, y).clone()).sum())
            .collect();
        let on_y: Vec<Rat> = (0..m)
            .map(|y| (0..n).map(|x| self.prob(x, y).clone()).sum())
            .collect();
        (
            ProbabilityVector::new(on_x).expect("marginal sums to one"),
            ProbabilityVector::new(on_y).expect("marginal sums to one"),
        )
    }

    /// Correlated means some Pr(x,y) differs from Pr(x)·Pr(y), by exact
    /// rational comparison.
    pub fn is_correlated(&self) -> bool {
        let (px, py) = self.marginals();
        for x in 0..self.left.size() {
            for y in 0..self.right.size() {
                if self.prob(x, y) != &(px.get(x) * py.get(y)) {
                    return true;
                }
            }
        }
        false
    }

    /// The joint flattened row-major as a distribution over X×Y.
    pub fn flattened(&self) -> ProbabilityVector {
        ProbabilityVector::new(self.probs.clone()).expect("joint sums to one")
    }

    /// The independent product of the marginals, flattened the same way.
    pub fn product_of_marginals(&self) -> ProbabilityVector {
        let (px, py) = self.marginals();
        let probs: Vec<Rat> = (0..self.left.size())
            .flat_map(|x| (0..self.right.size()).map(move |y| (x, y)))
            .map(|(x, y)| px.get(x) * py.get(y))
            .collect();
        ProbabilityVector::new(probs).expect("product of marginals sums to one")
    }
}

/// The equiprobable (Laplacian) distribution supported on a nonempty subset.
pub fn equiprobable_joint(s: &ProductSubset) -> Result<JointDistribution> {
    if s.is_empty() {
        return Err(Error::EmptyState);
    }
    let n = Rat::from_integer((s.count() as u64).into());
    let probs = s
        .bits
        .iter()
        .map(|&b| {
            if b {
                Rat::from_integer(1.into()) / &n
            } else {
                Rat::zero()
            }
        })
        .collect();
    JointDistribution::new(&s.left, &s.right, probs)
}

/// Entanglement as the logical divergence between the equiprobable joint and
/// the product of its marginals. Zero exactly on separated subsets.
pub fn entanglement_measure(s: &ProductSubset) -> Result<Rat> {
    let joint = equiprobable_joint(s)?;
    logical_divergence(&joint.flattened(), &joint.product_of_marginals())
}

/// Coordinates of a product subset in a pair of factor bases: each member
/// pair (x,y) expands to the tensor of the factor coordinates of {x} and {y},
/// and members accumulate by symmetric difference.
pub fn product_coords(
    s: &ProductSubset,
    left_basis: &Basis,
    right_basis: &Basis,
) -> Result<Vec<bool>> {
    s.left.check_same(left_basis.universe())?;
    s.right.check_same(right_basis.universe())?;
    let (n, m) = (left_basis.dim(), right_basis.dim());
    let mut grid = vec![false; n * m];
    for (x, y) in s.pairs() {
        let xc = left_basis.reference_to_coords(1 << x);
        let yc = right_basis.reference_to_coords(1 << y);
        for i in 0..n {
            if xc >> i & 1 == 0 {
                continue;
            }
            for j in 0..m {
                if yc >> j & 1 == 1 {
                    grid[i * m + j] ^= true;
                }
            }
        }
    }
    Ok(grid)
}

/// Reads product coordinates back as a subset of the basis-label pairs.
pub fn coords_to_pairs(grid: &[bool], left_dim: usize, right_dim: usize) -> Vec<(usize, usize)> {
    (0..left_dim)
        .flat_map(|i| (0..right_dim).map(move |j| (i, j)))
        .filter(|&(i, j)| grid[i * right_dim + j])
        .collect()
}

/// A product ket table: every subset of X×Y expressed in each product basis
/// Bₗ⊗Bᵣ built by zipping the two basis lists.
#[derive(Debug, Clone)]
pub struct ProductKetTable {
    pub column_names: Vec<String>,
    /// Row per subset; entry per column holds the pair list rendered with
    /// that column's basis labels.
    pub rows: Vec<Vec<String>>,
}

pub fn product_ket_table(
    left_bases: &[Basis],
    right_bases: &[Basis],
) -> Result<ProductKetTable> {
    if left_bases.len() != right_bases.len() || left_bases.is_empty() {
        return Err(Error::LengthMismatch {
            expected: left_bases.len().max(1),
            got: right_bases.len(),
        });
    }
    for (l, r) in left_bases.iter().zip(right_bases) {
        if l.dim() != r.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} is {}-dimensional but {} is {}-dimensional",
                l.name(),
                l.dim(),
                r.name(),
                r.dim()
            )));
        }
    }
    let left_u = left_bases[0].universe().clone();
    let right_u = right_bases[0].universe().clone();
    let total_bits = left_u.size() * right_u.size();
    if total_bits > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            size: total_bits,
            cap: ENUMERATION_CAP,
        });
    }
    let column_names = left_bases
        .iter()
        .zip(right_bases)
        .map(|(l, r)| format!("{}x{}", l.name(), r.name()))
        .collect();
    let mut masks: Vec<u64> = (0..1u64 << total_bits).collect();
    masks.sort_by_key(|&v| (v.count_ones(), v));
    let mut rows = Vec::with_capacity(masks.len());
    for mask in masks {
        let subset = ProductSubset::from_mask(&left_u, &right_u, mask);
        let mut row = Vec::with_capacity(left_bases.len());
        for (l, r) in left_bases.iter().zip(right_bases) {
            let grid = product_coords(&subset, l, r)?;
            let pairs: Vec<String> = coords_to_pairs(&grid, l.dim(), r.dim())
                .into_iter()
                .map(|(i, j)| format!("({},{})", l.labels()[i], r.labels()[j]))
                .collect();
            row.push(format!("{{{}}}", pairs.join(",")));
        }
        rows.push(row);
    }
    Ok(ProductKetTable { column_names, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn u2() -> Universe {
        Universe::parse("{a,b}").unwrap()
    }

    fn subset(u: &Universe, text: &str) -> ProductSubset {
        ProductSubset::parse(u, u, text).unwrap()
    }

    #[test]
    fn supports_and_separation() {
        let u = u2();
        let bell = subset(&u, "{(a,a),(b,b)}");
        assert_eq!(bell.supports(), (vec![0, 1], vec![0, 1]));
        assert!(!bell.is_separated());
        assert!(bell.is_bijection_graph());

        let sep = subset(&u, "{(a,a),(a,b)}");
        assert_eq!(sep.supports(), (vec![0], vec![0, 1]));
        assert!(sep.is_separated());
        assert!(!sep.is_bijection_graph());

        let single = subset(&u, "{(a,b)}");
        assert_eq!(single.supports(), (vec![0], vec![1]));
        assert!(single.is_separated());

        let empty = subset(&u, "{}");
        assert_eq!(empty.supports(), (vec![], vec![]));
    }

    #[test]
    fn census_of_two_by_two() {
        let u = u2();
        let mut entangled = 0;
        let mut separated = 0;
        for mask in 1u64..16 {
            let s = ProductSubset::from_mask(&u, &u, mask);
            if s.is_separated() {
                separated += 1;
            } else {
                entangled += 1;
            }
        }
        assert_eq!(separated, 9);
        assert_eq!(entangled, 6);
    }

    #[test]
    fn equiprobable_and_marginals() {
        let u = u2();
        let bell = subset(&u, "{(a,a),(b,b)}");
        let joint = equiprobable_joint(&bell).unwrap();
        assert_eq!(joint.prob(0, 0), &rat(1, 2));
        assert_eq!(joint.prob(0, 1), &rat(0, 1));
        let (px, py) = joint.marginals();
        assert_eq!(px.entries(), &[rat(1, 2), rat(1, 2)]);
        assert_eq!(py.entries(), &[rat(1, 2), rat(1, 2)]);
        assert!(joint.is_correlated());

        let full = subset(&u, "{(a,a),(a,b),(b,a),(b,b)}");
        let joint = equiprobable_joint(&full).unwrap();
        assert!(joint.probs.iter().all(|p| p == &rat(1, 4)));
        assert!(!joint.is_correlated());

        let point = equiprobable_joint(&subset(&u, "{(a,b)}")).unwrap();
        let (px, py) = point.marginals();
        assert_eq!(px.entries(), &[rat(1, 1), rat(0, 1)]);
        assert_eq!(py.entries(), &[rat(0, 1), rat(1, 1)]);
        assert!(!point.is_correlated());

        assert_eq!(
            equiprobable_joint(&subset(&u, "{}")),
            Err(Error::EmptyState)
        );
    }

    #[test]
    fn entanglement_values() {
        let u = u2();
        for mask in 1u64..16 {
            let s = ProductSubset::from_mask(&u, &u, mask);
            let measure = entanglement_measure(&s).unwrap();
            assert_eq!(measure.is_zero(), s.is_separated());
        }
        // Exhaustive scan: the two bijection graphs attain the maximum.
        let values: Vec<(u64, Rat)> = (1u64..16)
            .map(|mask| {
                let s = ProductSubset::from_mask(&u, &u, mask);
                (mask, entanglement_measure(&s).unwrap())
            })
            .collect();
        let max = values.iter().map(|(_, v)| v.clone()).max().unwrap();
        let argmax: Vec<u64> = values
            .iter()
            .filter(|(_, v)| *v == max)
            .map(|&(m, _)| m)
            .collect();
        let bell1 = 0b1001; // {(a,a),(b,b)}
        let bell2 = 0b0110; // {(a,b),(b,a)}
        assert_eq!(argmax, vec![bell2, bell1]);
        assert_eq!(max, rat(1, 4));
        // A strictly positive non-maximal case.
        let three = subset(&u, "{(a,a),(a,b),(b,a)}");
        let v = entanglement_measure(&three).unwrap();
        assert!(v > rat(0, 1) && v < max);
    }

    #[test]
    fn proposition_separated_iff_uncorrelated_3x3() {
        let u = Universe::parse("{a,b,c}").unwrap();
        for mask in 1u64..512 {
            let s = ProductSubset::from_mask(&u, &u, mask);
            let correlated = equiprobable_joint(&s).unwrap().is_correlated();
            assert_eq!(s.is_separated(), !correlated, "mask {mask:#b}");
        }
    }

    #[test]
    fn product_kets_match_worked_rows() {
        let u = u2();
        let std = Basis::standard(&u, "U");
        let up = Basis::new(&u, "U'", &[("a'", &["a", "b"]), ("b'", &["b"])]).unwrap();
        let upp = Basis::new(&u, "U''", &[("a''", &["a", "b"]), ("b''", &["a"])]).unwrap();

        let ab = subset(&u, "{(a,b)}");
        let grid = product_coords(&ab, &up, &up).unwrap();
        assert_eq!(coords_to_pairs(&grid, 2, 2), vec![(0, 1), (1, 1)]); // {(a',b'),(b',b')}
        let grid = product_coords(&ab, &upp, &upp).unwrap();
        assert_eq!(coords_to_pairs(&grid, 2, 2), vec![(1, 0), (1, 1)]); // {(b'',a''),(b'',b'')}

        let bell = subset(&u, "{(a,a),(b,b)}");
        let grid = product_coords(&bell, &up, &up).unwrap();
        assert_eq!(coords_to_pairs(&grid, 2, 2), vec![(0, 0), (0, 1), (1, 0)]);
        let grid = product_coords(&bell, &upp, &upp).unwrap();
        assert_eq!(coords_to_pairs(&grid, 2, 2), vec![(0, 0), (0, 1), (1, 0)]);

        let empty = subset(&u, "{}");
        let grid = product_coords(&empty, &up, &up).unwrap();
        assert!(coords_to_pairs(&grid, 2, 2).is_empty());

        let table = product_ket_table(
            &[std.clone(), up.clone(), upp.clone()],
            &[std, up, upp],
        )
        .unwrap();
        assert_eq!(table.rows.len(), 16);
        let row = table
            .rows
            .iter()
            .find(|r| r[0] == "{(a,b)}")
            .expect("row for {(a,b)}");
        assert_eq!(row[1], "{(a',b'),(b',b')}");
        assert_eq!(row[2], "{(b'',a''),(b'',b'')}");
    }

    #[test]
    fn separability_is_basis_independent() {
        let u = u2();
        let std = Basis::standard(&u, "U");
        let up = Basis::new(&u, "U'", &[("a'", &["a", "b"]), ("b'", &["b"])]).unwrap();
        let upp = Basis::new(&u, "U''", &[("a''", &["a", "b"]), ("b''", &["a"])]).unwrap();
        let prime_u = Universe::parse("{ap,bp}").unwrap();
        for mask in 1u64..16 {
            let s = ProductSubset::from_mask(&u, &u, mask);
            let baseline = s.is_separated();
            for basis in [&std, &up, &upp] {
                let grid = product_coords(&s, basis, basis).unwrap();
                let pairs = coords_to_pairs(&grid, 2, 2);
                let in_basis = ProductSubset::new(&prime_u, &prime_u, &pairs).unwrap();
                assert_eq!(in_basis.is_separated(), baseline, "mask {mask:#b}");
            }
        }
    }
}
