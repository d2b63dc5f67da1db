//! Scripted end-to-end experiments: the measurement cascade on a three-point
//! universe, the two-slit setup with GF(2) dynamics, and the Bell-inequality
//! violation on the two-qubit-like space of three bases.
//!
//! The fixed-parameter entry points reproduce the worked numbers exactly in
//! rational arithmetic; `two_slit_custom` takes an arbitrary non-singular
//! dynamics and initial state for exploration.

use num_traits::Zero;

use crate::entangle::{product_coords, ProductSubset};
use crate::entropy::{
    density_matrix, entropy_delta, luders_update, quantum_logical_entropy_set, ProbabilityVector,
    SetDensityMatrix,
};
use crate::error::{Error, Result};
use crate::gf2::{orbit_decomposition, Basis, BitMatrix, BitVec};
use crate::measure::{born, Attribute};
use crate::partition::Partition;
use crate::universe::Universe;
use crate::{rat, Rat};

/// One narrated step of an experiment: a description plus an optional state,
/// distribution, or matrix snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub description: String,
    pub state: Option<String>,
    pub distribution: Option<Vec<(String, Rat)>>,
    pub matrix: Option<Vec<Vec<String>>>,
}

impl Step {
    fn note(description: impl Into<String>) -> Self {
        Step {
            description: description.into(),
            state: None,
            distribution: None,
            matrix: None,
        }
    }

    fn with_state(mut self, state: impl Into<String>) -> Self {
        self.state = Some(state.into());
        self
    }

    fn with_distribution(mut self, distribution: Vec<(String, Rat)>) -> Self {
        self.distribution = Some(distribution);
        self
    }

    fn with_matrix(mut self, matrix: Vec<Vec<String>>) -> Self {
        self.matrix = Some(matrix);
        self
    }
}

/// A full experiment transcript: ordered steps plus named final values.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub name: String,
    pub steps: Vec<Step>,
    pub final_values: Vec<(String, Rat)>,
    pub flags: Vec<(String, bool)>,
}

impl ExperimentReport {
    pub fn value(&self, name: &str) -> Option<&Rat> {
        self.final_values
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

fn density_snapshot(rho: &SetDensityMatrix) -> Vec<Vec<String>> {
    let n = rho.dim();
    (0..n)
        .map(|i| (0..n).map(|j| rho.entry_string(i, j)).collect())
        .collect()
}

/// Sum of the squared off-diagonal entries zeroed between two snapshots.
fn zeroed_square_sum(before: &SetDensityMatrix, after: &SetDensityMatrix) -> Rat {
    let n = before.dim();
    let mut total = Rat::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j && before.is_coherent(i, j) && !after.is_coherent(i, j) {
                total += before.squared_entry(i, j);
            }
        }
    }
    total
}

/// The fixed two-slit setup: universe {a,b,c}, slits at a and c, dynamics
/// {a}→{a,b}, {b}→{a,b,c}, {c}→{b,c}, initial state {a,c}.
pub fn two_slit(measure_at_slits: bool) -> ExperimentReport {
    let universe = Universe::parse("{a,b,c}").unwrap();
    let dynamics = BitMatrix::from_rows("U", &[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]);
    let std = Basis::standard(&universe, "U");
    let initial = std.subset(&["a", "c"]).unwrap();
    two_slit_custom(&universe, &dynamics, &initial, measure_at_slits)
        .expect("fixed setup is valid")
}

/// Two-slit run with an arbitrary non-singular one-period dynamics and an
/// arbitrary nonempty initial state in the standard frame.
pub fn two_slit_custom(
    universe: &Universe,
    dynamics: &BitMatrix,
    initial: &BitVec,
    measure_at_slits: bool,
) -> Result<ExperimentReport> {
    if !dynamics.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let std = Basis::standard(universe, dynamics.domain().to_string());
    // Vertical position: one distinct eigenvalue per element, in the frame
    // the dynamics acts on.
    let position_values: Vec<(&str, Rat)> = universe
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), rat(i as i64 + 1, 1)))
        .collect();
    let position = Attribute::new(&std, &position_values)?;

    let mut steps = Vec::new();
    let cycles = orbit_decomposition(dynamics)?;
    let cycle_strings: Vec<String> = cycles
        .iter()
        .map(|cycle| {
            cycle
                .iter()
                .map(|&v| std.subset_string(v))
                .collect::<Vec<_>>()
                .join(" -> ")
        })
        .collect();
    steps.push(
        Step::note(format!(
            "dynamics splits the nonzero vectors into cycles of sizes {:?}",
            cycles.iter().map(Vec::len).collect::<Vec<_>>()
        ))
        .with_matrix(cycle_strings.into_iter().map(|c| vec![c]).collect()),
    );
    steps.push(Step::note("prepare state at the slits").with_state(std.subset_string(initial.bits())));

    let n = universe.size();
    let mut wall = vec![Rat::zero(); n];
    if measure_at_slits {
        let slit_outcomes = born(initial, &position)?;
        steps.push(
            Step::note("measure position at the slits").with_distribution(
                slit_outcomes
                    .outcomes()
                    .iter()
                    .map(|o| (std.subset_string(o.post_state.bits()), o.probability.clone()))
                    .collect(),
            ),
        );
        for outcome in slit_outcomes.outcomes() {
            let evolved = dynamics.apply(&outcome.post_state)?;
            steps.push(
                Step::note(format!(
                    "eigenstate {} evolves one period",
                    std.subset_string(outcome.post_state.bits())
                ))
                .with_state(std.subset_string(evolved.bits())),
            );
            let at_wall = born(&evolved, &position)?;
            for wall_outcome in at_wall.outcomes() {
                let position_index = wall_outcome.post_state.bits().trailing_zeros() as usize;
                wall[position_index] += &outcome.probability * &wall_outcome.probability;
            }
        }
    } else {
        let evolved = dynamics.apply(initial)?;
        steps.push(
            Step::note("no distinctions at the slits: the superposition evolves as one state")
                .with_state(std.subset_string(evolved.bits())),
        );
        let at_wall = born(&evolved, &position)?;
        for wall_outcome in at_wall.outcomes() {
            let position_index = wall_outcome.post_state.bits().trailing_zeros() as usize;
            wall[position_index] = wall_outcome.probability.clone();
        }
    }

    let wall_distribution: Vec<(String, Rat)> = universe
        .labels()
        .iter()
        .zip(&wall)
        .map(|(l, p)| (l.clone(), p.clone()))
        .collect();
    steps.push(Step::note("distribution at the wall").with_distribution(wall_distribution.clone()));
    Ok(ExperimentReport {
        name: if measure_at_slits {
            "two_slit_with_slit_measurement".into()
        } else {
            "two_slit_without_slit_measurement".into()
        },
        steps,
        final_values: wall_distribution
            .into_iter()
            .map(|(l, p)| (format!("Pr({l})"), p))
            .collect(),
        flags: vec![("measured_at_slits".into(), measure_at_slits)],
    })
}

/// The three bases of the two-point space used by the Bell setup, plus its
/// universe: U = {a,b}, a'={a,b}, b'={b}, a''={a,b}, b''={a}.
pub fn bell_bases() -> (Universe, Basis, Basis, Basis) {
    let universe = Universe::parse("{a,b}").unwrap();
    let std = Basis::standard(&universe, "U");
    let prime = Basis::new(&universe, "U'", &[("a'", &["a", "b"]), ("b'", &["b"])]).unwrap();
    let double = Basis::new(&universe, "U''", &[("a''", &["a", "b"]), ("b''", &["a"])]).unwrap();
    (universe, std, prime, double)
}

/// Probability of seeing each basis label when measuring a state given in
/// reference coordinates, in the given basis.
fn outcome_row(basis: &Basis, reference_bits: u64) -> Vec<(String, Rat)> {
    let coords = basis.reference_to_coords(reference_bits);
    let size = coords.count_ones();
    basis
        .labels()
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let p = if coords >> i & 1 == 1 {
                rat(1, size as i64)
            } else {
                Rat::zero()
            };
            (label.clone(), p)
        })
        .collect()
}

/// Sequential measurement of a two-sided state: measure the left factor in
/// `first` (collapsing the pair set to the rows matching the observed label),
/// re-express the right-hand state in `second`, and measure it there.
/// Returns the joint probability of the two given outcomes.
pub fn sequential_probability(
    state: &ProductSubset,
    first: &Basis,
    first_label: &str,
    second: &Basis,
    second_label: &str,
) -> Result<Rat> {
    let grid = product_coords(state, first, first)?;
    let dim = first.dim();
    let pairs = crate::entangle::coords_to_pairs(&grid, dim, dim);
    if pairs.is_empty() {
        return Err(Error::EmptyState);
    }
    let left_index = first.label_index(first_label)?;
    let hits: Vec<usize> = pairs
        .iter()
        .filter(|&&(x, _)| x == left_index)
        .map(|&(_, y)| y)
        .collect();
    let first_probability = rat(hits.len() as i64, pairs.len() as i64);
    if hits.is_empty() {
        return Ok(Rat::zero());
    }
    // The right-hand system is now in the state given by the surviving
    // right components, expressed in the first basis.
    let mut right_coords = 0u64;
    for y in hits {
        right_coords |= 1 << y;
    }
    let reference = first.coords_to_reference(right_coords);
    let second_coords = second.reference_to_coords(reference);
    let second_index = second.label_index(second_label)?;
    let second_probability = if second_coords >> second_index & 1 == 1 {
        rat(1, second_coords.count_ones() as i64)
    } else {
        Rat::zero()
    };
    Ok(first_probability * second_probability)
}

/// The fixed Bell run: initial entangled state {(a,a),(b,b)}, the three
/// pairwise sequential probabilities, and the inequality evaluation.
pub fn bell_experiment() -> ExperimentReport {
    let (universe, std, prime, double) = bell_bases();
    let state = ProductSubset::parse(&universe, &universe, "{(a,a),(b,b)}").unwrap();

    let mut steps = Vec::new();
    for (basis_pair_name, basis) in [("UxU", &std), ("U'xU'", &prime), ("U''xU''", &double)] {
        let grid = product_coords(&state, basis, basis).unwrap();
        let pairs: Vec<String> = crate::entangle::coords_to_pairs(&grid, 2, 2)
            .into_iter()
            .map(|(i, j)| format!("({},{})", basis.labels()[i], basis.labels()[j]))
            .collect();
        steps.push(
            Step::note(format!("initial state in the {basis_pair_name} basis"))
                .with_state(format!("{{{}}}", pairs.join(","))),
        );
    }

    // State-outcome table: one row per ket, probabilities for each test.
    for reference_bits in [0b11u64, 0b10, 0b01] {
        let mut distribution = Vec::new();
        for basis in [&std, &prime, &double] {
            distribution.extend(outcome_row(basis, reference_bits));
        }
        let names: Vec<String> = [&std, &prime, &double]
            .iter()
            .map(|b| b.subset_string(b.reference_to_coords(reference_bits)))
            .collect();
        steps.push(
            Step::note(format!("state-outcome row for {}", names.join(" = ")))
                .with_distribution(distribution),
        );
    }

    let pr_a_aprime = sequential_probability(&state, &std, "a", &prime, "a'").unwrap();
    let pr_bprime_bdouble = sequential_probability(&state, &prime, "b'", &double, "b''").unwrap();
    let pr_a_bdouble = sequential_probability(&state, &std, "a", &double, "b''").unwrap();
    steps.push(Step::note(
        "measure left in U then right in U': Pr(a,a')".to_string(),
    ));
    steps.push(Step::note(
        "measure left in U' then right in U'': Pr(b',b'')".to_string(),
    ));
    steps.push(Step::note(
        "measure left in U then right in U'': Pr(a,b'')".to_string(),
    ));

    let lhs = &pr_a_aprime + &pr_bprime_bdouble;
    let rhs = pr_a_bdouble.clone();
    let violated = lhs < rhs;
    ExperimentReport {
        name: "bell".into(),
        steps,
        final_values: vec![
            ("Pr(a,a')".into(), pr_a_aprime),
            ("Pr(b',b'')".into(), pr_bprime_bdouble),
            ("Pr(a,b'')".into(), pr_a_bdouble),
            ("lhs".into(), lhs),
            ("rhs".into(), rhs),
        ],
        flags: vec![("violated".into(), violated)],
    }
}

/// A joint distribution over the 2×2×2 outcomes of the three Bell tests,
/// indexed by (x, y, z) with x ∈ {a,b}, y ∈ {a',b'}, z ∈ {a'',b''}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleJoint {
    probs: Vec<Rat>,
}

impl TripleJoint {
    pub fn new(probs: Vec<Rat>) -> Result<Self> {
        if probs.len() != 8 {
            return Err(Error::LengthMismatch {
                expected: 8,
                got: probs.len(),
            });
        }
        ProbabilityVector::new(probs.clone())?;
        Ok(TripleJoint { probs })
    }

    pub fn prob(&self, x: usize, y: usize, z: usize) -> &Rat {
        &self.probs[x * 4 + y * 2 + z]
    }

    /// The counterfactual product joint built from the single-system outcome
    /// probabilities of the Bell state: Pr(x)·Pr(y)·Pr(z) with
    /// Pr(a)=1/2, Pr(a')=2/3, Pr(a'')=2/3.
    pub fn counterfactual_product() -> Self {
        let px = [rat(1, 2), rat(1, 2)];
        let py = [rat(2, 3), rat(1, 3)];
        let pz = [rat(2, 3), rat(1, 3)];
        let mut probs = Vec::with_capacity(8);
        for x in &px {
            for y in &py {
                for z in &pz {
                    probs.push(x * y * z);
                }
            }
        }
        TripleJoint { probs }
    }
}

/// The marginal inequality Pr(a,a') + Pr(b',b'') ≥ Pr(a,b'') evaluated on a
/// genuine joint distribution. Holds for every true joint because both terms
/// of the right marginal appear among the left marginals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarginalInequality {
    pub pr_a_aprime: Rat,
    pub pr_bprime_bdouble: Rat,
    pub pr_a_bdouble: Rat,
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

pub fn bell_marginal_inequality(joint: &TripleJoint) -> MarginalInequality {
    let pr_a_aprime = joint.prob(0, 0, 0) + joint.prob(0, 0, 1);
    let pr_bprime_bdouble = joint.prob(0, 1, 1) + joint.prob(1, 1, 1);
    let pr_a_bdouble = joint.prob(0, 0, 1) + joint.prob(0, 1, 1);
    let lhs = &pr_a_aprime + &pr_bprime_bdouble;
    let rhs = pr_a_bdouble.clone();
    MarginalInequality {
        holds: lhs >= rhs,
        pr_a_aprime,
        pr_bprime_bdouble,
        pr_a_bdouble,
        lhs,
        rhs,
    }
}

/// The measurement cascade on {a,b,c} with equiprobable points: first measure
/// by χ_{b,c}, then by χ_{a,b}, tracking density matrices and entropy
/// increments, and compare against the one-shot nondegenerate measurement.
pub fn measurement_cascade() -> ExperimentReport {
    let universe = Universe::parse("{a,b,c}").unwrap();
    let uniform = ProbabilityVector::uniform(3);
    let blob = Partition::indiscrete(&universe);
    let first = Partition::parse(&universe, "{{a},{b,c}}").unwrap();
    let second = Partition::parse(&universe, "{{a,b},{c}}").unwrap();
    let top = Partition::discrete(&universe);

    let rho0 = density_matrix(&blob, &uniform).unwrap();
    let rho1 = luders_update(&rho0, &first).unwrap();
    let rho2 = luders_update(&rho1, &second).unwrap();
    let one_shot = luders_update(&rho0, &top).unwrap();

    let delta1 = entropy_delta(&rho0, &rho1).unwrap();
    let delta2 = entropy_delta(&rho1, &rho2).unwrap();
    let delta_total = entropy_delta(&rho0, &rho2).unwrap();
    let delta_one_shot = entropy_delta(&rho0, &one_shot).unwrap();
    let zeroed1 = zeroed_square_sum(&rho0, &rho1);
    let zeroed2 = zeroed_square_sum(&rho1, &rho2);

    let steps = vec![
        Step::note("pure state of the indiscrete partition")
            .with_state(blob.to_string())
            .with_matrix(density_snapshot(&rho0)),
        Step::note(format!(
            "measure by {first}: entropy increases by {delta1} (sum of zeroed squares {zeroed1})"
        ))
        .with_state(rho1.partition().to_string())
        .with_matrix(density_snapshot(&rho1)),
        Step::note(format!(
            "measure by {second}: entropy increases by {delta2} (sum of zeroed squares {zeroed2})"
        ))
        .with_state(rho2.partition().to_string())
        .with_matrix(density_snapshot(&rho2)),
        Step::note("one-shot nondegenerate measurement from the pure state")
            .with_state(one_shot.partition().to_string())
            .with_matrix(density_snapshot(&one_shot)),
    ];
    let final_entropy = quantum_logical_entropy_set(&rho2);
    let path_independent = delta_one_shot == delta_total;
    ExperimentReport {
        name: "measurement_cascade".into(),
        steps,
        final_values: vec![
            ("step1_delta".into(), delta1),
            ("step2_delta".into(), delta2),
            ("total_delta".into(), delta_total),
            ("one_shot_delta".into(), delta_one_shot),
            ("final_entropy".into(), final_entropy),
        ],
        flags: vec![("path_independent".into(), path_independent)],
    }
}
