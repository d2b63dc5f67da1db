//! Acceptance suite: every release criterion as one test, each printing a
//! pass line on success. All rational comparisons are exact (tolerance zero);
//! the stated runtime budgets are asserted with a stopwatch.

use std::time::Instant;

use num_traits::{One, Zero};

use setqm::entangle::{equiprobable_joint, ProductSubset};
use setqm::entropy::{
    density_matrix, entropy_delta, logical_entropy_partition, luders_update, ProbabilityVector,
};
use setqm::experiments::{
    bell_experiment, bell_marginal_inequality, measurement_cascade, two_slit, TripleJoint,
};
use setqm::gf2::{
    change_basis, commutes, conversion_matrix, orbit_decomposition, projection_matrix, Basis,
    BitMatrix, BitVec,
};
use setqm::groups::{
    attribute_decomposition, commutes_with, csca_orbits, OrbitCsca, Permutation,
    SetRepresentation,
};
use setqm::measure::{born, Attribute};
use setqm::partition::{enumerate_partitions, implication, Partition};
use setqm::{rat, Rat, Universe};

fn u3() -> Universe {
    Universe::parse("{a,b,c}").unwrap()
}

fn pass(n: usize, name: &str) {
    println!("ACCEPTANCE criterion {n} ({name}): PASS");
}

#[test]
fn criterion_1_lattice_regression() {
    let u = u3();
    let pi = Partition::parse(&u, "{{a},{b,c}}").unwrap();
    let sigma = Partition::parse(&u, "{{a,b},{c}}").unwrap();
    let started = Instant::now();
    let joined = pi.join(&sigma).unwrap();
    let dit_bottom = Partition::indiscrete(&u).dit_set().pair_count();
    let dit_middle = pi.dit_set().pair_count();
    let dit_top = Partition::discrete(&u).dit_set().pair_count();
    let elapsed = started.elapsed();
    assert_eq!(joined, Partition::discrete(&u));
    assert_eq!((dit_bottom, dit_middle, dit_top), (0, 4, 6));
    assert!(
        elapsed.as_micros() < 1000,
        "lattice regression took {elapsed:?}, budget is 1 ms"
    );
    pass(1, "lattice regression");
}

#[test]
fn criterion_2_entropy_regression() {
    let u = u3();
    let uniform = ProbabilityVector::uniform(3);
    let pi = Partition::parse(&u, "{{a},{b,c}}").unwrap();
    assert_eq!(
        logical_entropy_partition(&Partition::indiscrete(&u), &uniform).unwrap(),
        Rat::zero()
    );
    assert_eq!(logical_entropy_partition(&pi, &uniform).unwrap(), rat(4, 9));
    assert_eq!(
        logical_entropy_partition(&Partition::discrete(&u), &uniform).unwrap(),
        rat(2, 3)
    );
    pass(2, "entropy regression");
}

fn zeroed_squares(
    before: &setqm::entropy::SetDensityMatrix,
    after: &setqm::entropy::SetDensityMatrix,
) -> Rat {
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

#[test]
fn criterion_3_density_matrix_measurement() {
    let u = u3();
    let uniform = ProbabilityVector::uniform(3);
    let blob = density_matrix(&Partition::indiscrete(&u), &uniform).unwrap();
    let middle = Partition::parse(&u, "{{a},{b,c}}").unwrap();

    let after_first = luders_update(&blob, &middle).unwrap();
    let delta_first = entropy_delta(&blob, &after_first).unwrap();
    assert_eq!(delta_first, rat(4, 9));
    assert_eq!(delta_first, zeroed_squares(&blob, &after_first));

    let after_second = luders_update(&after_first, &Partition::discrete(&u)).unwrap();
    let delta_second = entropy_delta(&after_first, &after_second).unwrap();
    assert_eq!(delta_second, rat(2, 9));
    assert_eq!(delta_second, zeroed_squares(&after_first, &after_second));

    let one_shot = luders_update(&blob, &Partition::discrete(&u)).unwrap();
    let delta_one_shot = entropy_delta(&blob, &one_shot).unwrap();
    assert_eq!(delta_one_shot, rat(2, 3));
    assert_eq!(delta_one_shot, zeroed_squares(&blob, &one_shot));
    assert_eq!(delta_one_shot, delta_first + delta_second);
    pass(3, "density-matrix measurement");
}

#[test]
fn criterion_4_gf2_commutator_table() {
    let u = u3();
    let std = Basis::standard(&u, "U");
    let prime = Basis::new(
        &u,
        "U'",
        &[
            ("a'", &["a", "b"]),
            ("b'", &["b", "c"]),
            ("c'", &["a", "b", "c"]),
        ],
    )
    .unwrap();
    let to_u = conversion_matrix(&prime, &std).unwrap();
    assert_eq!(
        to_u.to_rows(),
        vec![vec![1, 0, 1], vec![1, 1, 1], vec![0, 1, 1]]
    );
    let to_prime = conversion_matrix(&std, &prime).unwrap();
    assert_eq!(
        to_prime.to_rows(),
        vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 1, 1]]
    );

    let f = projection_matrix(&std, &["b", "c"]).unwrap();
    let g = change_basis(&projection_matrix(&prime, &["a'", "b'"]).unwrap(), &prime, &std).unwrap();
    let check = commutes(&g, &f).unwrap();
    assert!(!check.commutes);
    assert_eq!(
        check.mn.to_rows(),
        vec![vec![0, 1, 1], vec![0, 0, 1], vec![0, 1, 0]],
        "g after f"
    );
    assert_eq!(
        check.nm.to_rows(),
        vec![vec![0, 0, 0], vec![1, 0, 1], vec![1, 1, 0]],
        "f after g"
    );

    let double = Basis::new(&u, "U''", &[("a''", &["c"]), ("b''", &["a"]), ("c''", &["b"])]).unwrap();
    let h = change_basis(
        &projection_matrix(&double, &["a''", "b''"]).unwrap(),
        &double,
        &std,
    )
    .unwrap();
    assert!(commutes(&f, &h).unwrap().commutes);
    // The commuting case admits the singleton relabeling of the worked text.
    assert_eq!(
        double.singleton_matching().unwrap(),
        vec![
            ("a''".to_string(), "c".to_string()),
            ("b''".to_string(), "a".to_string()),
            ("c''".to_string(), "b".to_string()),
        ]
    );
    pass(4, "GF(2) commutator table");
}

#[test]
fn criterion_5_entanglement_census() {
    let started = Instant::now();
    let two = Universe::parse("{a,b}").unwrap();
    let mut separated = 0;
    let mut entangled = 0;
    for mask in 1u64..16 {
        if ProductSubset::from_mask(&two, &two, mask).is_separated() {
            separated += 1;
        } else {
            entangled += 1;
        }
    }
    assert_eq!((separated, entangled), (9, 6));

    let three = u3();
    for mask in 1u64..512 {
        let s = ProductSubset::from_mask(&three, &three, mask);
        let joint = equiprobable_joint(&s).unwrap();
        assert_eq!(s.is_separated(), !joint.is_correlated(), "mask {mask}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_millis() < 1000,
        "census took {elapsed:?}, budget is 1 s"
    );
    pass(5, "entanglement census");
}

#[test]
fn criterion_6_two_slit() {
    let with = two_slit(true);
    assert_eq!(with.value("Pr(a)"), Some(&rat(1, 4)));
    assert_eq!(with.value("Pr(b)"), Some(&rat(1, 2)));
    assert_eq!(with.value("Pr(c)"), Some(&rat(1, 4)));
    let without = two_slit(false);
    assert_eq!(without.value("Pr(a)"), Some(&rat(1, 2)));
    assert_eq!(without.value("Pr(b)"), Some(&rat(0, 1)));
    assert_eq!(without.value("Pr(c)"), Some(&rat(1, 2)));

    let dynamics = BitMatrix::from_rows("U", &[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]);
    let sizes: Vec<usize> = orbit_decomposition(&dynamics)
        .unwrap()
        .iter()
        .map(Vec::len)
        .collect();
    assert_eq!(sizes, vec![4, 2, 1]);
    pass(6, "two-slit distributions");
}

#[test]
fn criterion_7_bell_violation() {
    let report = bell_experiment();
    assert_eq!(report.value("Pr(a,a')"), Some(&rat(1, 4)));
    assert_eq!(report.value("Pr(b',b'')"), Some(&rat(0, 1)));
    assert_eq!(report.value("Pr(a,b'')"), Some(&rat(1, 2)));
    assert_eq!(report.flag("violated"), Some(true));

    // 1000 random exact-rational genuine joints all satisfy the marginal
    // inequality (splitmix-seeded for reproducibility).
    let mut state = 0xbe11u64;
    let mut next = || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..1000 {
        let weights: Vec<i64> = (0..8).map(|_| (next() % 1000) as i64).collect();
        let total: i64 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        let joint =
            TripleJoint::new(weights.iter().map(|&w| rat(w, total)).collect()).unwrap();
        assert!(bell_marginal_inequality(&joint).holds);
    }
    pass(7, "Bell inequality violation");
}

#[test]
fn criterion_8_group_orbits_and_csca() {
    // Shift by 3 on six points: three two-element orbits, n mod 3 complete.
    let u6 = Universe::new((0..6).map(|i| i.to_string())).unwrap();
    let shift3 = Permutation::new(&u6, (0..6).map(|i| (i + 3) % 6).collect()).unwrap();
    let rep6 = SetRepresentation::generate(&u6, &[shift3]).unwrap();
    assert_eq!(rep6.orbits().to_string(), "{{0,3},{1,4},{2,5}}");
    let mod3 =
        Attribute::on_universe(&u6, (0..6).map(|i| rat(i as i64 % 3, 1)).collect()).unwrap();
    assert!(commutes_with(&mod3, &rep6).unwrap());
    assert_eq!(
        attribute_decomposition(&mod3, &rep6).unwrap(),
        vec![
            (vec![0, 3], rat(0, 1)),
            (vec![1, 4], rat(1, 1)),
            (vec![2, 5], rat(2, 1)),
        ]
    );
    assert!(matches!(
        csca_orbits(&[&mod3], &rep6).unwrap(),
        OrbitCsca::Complete(_)
    ));

    // Shift by 6 on twelve points: six orbits, (n mod 2, n mod 3) complete.
    let u12 = Universe::new((0..12).map(|i| i.to_string())).unwrap();
    let shift6 = Permutation::new(&u12, (0..12).map(|i| (i + 6) % 12).collect()).unwrap();
    let rep12 = SetRepresentation::generate(&u12, &[shift6]).unwrap();
    assert_eq!(
        rep12.orbits().to_string(),
        "{{0,6},{1,7},{2,8},{3,9},{4,10},{5,11}}"
    );
    let mod2 =
        Attribute::on_universe(&u12, (0..12).map(|i| rat(i as i64 % 2, 1)).collect()).unwrap();
    let mod3 =
        Attribute::on_universe(&u12, (0..12).map(|i| rat(i as i64 % 3, 1)).collect()).unwrap();
    match csca_orbits(&[&mod2, &mod3], &rep12).unwrap() {
        OrbitCsca::Complete(tuples) => {
            assert_eq!(
                tuples,
                vec![
                    (vec![0, 6], vec![rat(0, 1), rat(0, 1)]),
                    (vec![4, 10], vec![rat(0, 1), rat(1, 1)]),
                    (vec![2, 8], vec![rat(0, 1), rat(2, 1)]),
                    (vec![3, 9], vec![rat(1, 1), rat(0, 1)]),
                    (vec![1, 7], vec![rat(1, 1), rat(1, 1)]),
                    (vec![5, 11], vec![rat(1, 1), rat(2, 1)]),
                ]
            );
        }
        other => panic!("expected a complete labeling, got {other:?}"),
    }
    pass(8, "group orbits and CSCA");
}

#[test]
fn criterion_9_property_suites() {
    let started = Instant::now();

    // Dit-set representation laws, implication⇔refinement, exhaustive n ≤ 4.
    for n in 1..=4usize {
        let u = Universe::new((0..n).map(|i| format!("e{i}"))).unwrap();
        let partitions: Vec<Partition> = enumerate_partitions(&u).unwrap().collect();
        for a in &partitions {
            for b in &partitions {
                assert_eq!(
                    b.is_refinement_of(a).unwrap(),
                    a.dit_set().is_subset_of(&b.dit_set())
                );
                assert_eq!(
                    a.join(b).unwrap().dit_set(),
                    a.dit_set().union(&b.dit_set()).unwrap()
                );
                assert_eq!(
                    a.meet(b).unwrap().dit_set(),
                    a.dit_set().intersection(&b.dit_set()).unwrap().interior()
                );
                let imp = implication(a, b).unwrap();
                assert_eq!(
                    imp.dit_set(),
                    a.dit_set().complement().union(&b.dit_set()).unwrap().interior()
                );
                assert_eq!(imp.is_discrete(), b.is_refinement_of(a).unwrap());
            }
        }

        // Interior/closure algebra on each partition's dit and indit sets.
        for p in &partitions {
            let dits = p.dit_set();
            assert_eq!(dits.interior(), dits);
            assert_eq!(dits.closure().closure(), dits.closure());
            assert!(dits.is_subset_of(&dits.closure()));
        }

        // Entropy telescoping: every two-step cascade equals its one-shot.
        let uniform = ProbabilityVector::uniform(n);
        let blob = density_matrix(&Partition::indiscrete(&u), &uniform).unwrap();
        for mid in &partitions {
            let step = luders_update(&blob, mid).unwrap();
            let finish = luders_update(&step, &Partition::discrete(&u)).unwrap();
            let total = entropy_delta(&blob, &step).unwrap()
                + entropy_delta(&step, &finish).unwrap();
            let one_shot = luders_update(&blob, &Partition::discrete(&u)).unwrap();
            assert_eq!(total, entropy_delta(&blob, &one_shot).unwrap());
        }

        // Pythagorean norm identity and sequential-measurement composition
        // for every state and characteristic attribute.
        let std = Basis::standard(&u, "U");
        let attributes: Vec<Attribute> = (0u64..1 << n)
            .map(|mask| {
                let labels: Vec<&str> = (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| std.labels()[i].as_str())
                    .collect();
                Attribute::characteristic(&std, &labels).unwrap()
            })
            .collect();
        for bits in 1u64..1 << n {
            let state = BitVec::new("U", n, bits);
            for f in &attributes {
                let dist = born(&state, f).unwrap();
                let norm_total: u32 = dist
                    .outcomes()
                    .iter()
                    .map(|o| o.post_state.count())
                    .sum();
                assert_eq!(norm_total, state.count());
                let prob_total: Rat =
                    dist.outcomes().iter().map(|o| o.probability.clone()).sum();
                assert!(prob_total.is_one());
                for g in &attributes {
                    let mut sequential: Vec<(u64, Rat)> = Vec::new();
                    for o1 in dist.outcomes() {
                        for o2 in born(&o1.post_state, g).unwrap().outcomes() {
                            sequential
                                .push((o2.post_state.bits(), &o1.probability * &o2.probability));
                        }
                    }
                    sequential.sort_by_key(|&(b, _)| b);
                    let size = Rat::from_integer(u64::from(state.count()).into());
                    let mut joint: Vec<(u64, Rat)> = Vec::new();
                    for r in f.eigenvalues() {
                        for s in g.eigenvalues() {
                            let cell = f.preimage_mask(&r) & g.preimage_mask(&s) & bits;
                            if cell != 0 {
                                joint.push((
                                    cell,
                                    Rat::from_integer(u64::from(cell.count_ones()).into())
                                        / &size,
                                ));
                            }
                        }
                    }
                    joint.sort_by_key(|&(b, _)| b);
                    assert_eq!(sequential, joint);
                }
            }
        }
    }

    // Set-Schur lemma on a seeded sample of representations.
    let mut state = 0x5eedu64;
    let mut next = || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for n in 2..=8usize {
        let u = Universe::new((0..n).map(|i| format!("e{i}"))).unwrap();
        for _ in 0..10 {
            let mut image: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                image.swap(i, (next() % (i as u64 + 1)) as usize);
            }
            let rep =
                SetRepresentation::generate(&u, &[Permutation::new(&u, image).unwrap()]).unwrap();
            let orbits = rep.orbits();
            let f = Attribute::on_universe(
                &u,
                (0..n).map(|i| rat(orbits.block_of(i) as i64, 1)).collect(),
            )
            .unwrap();
            assert!(commutes_with(&f, &rep).unwrap());
            assert!(attribute_decomposition(&f, &rep).is_ok());
            if let Some(block) = orbits.blocks().iter().find(|b| b.len() > 1) {
                let mut values: Vec<Rat> =
                    (0..n).map(|i| rat(orbits.block_of(i) as i64, 1)).collect();
                values[block[0]] = rat(777, 1);
                let broken = Attribute::on_universe(&u, values).unwrap();
                assert!(matches!(
                    attribute_decomposition(&broken, &rep),
                    Err(setqm::Error::NonConstantOrbit { .. })
                ));
            }
        }
    }

    // The cascade experiment agrees with the suite.
    let cascade = measurement_cascade();
    assert_eq!(cascade.flag("path_independent"), Some(true));

    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 30,
        "property suites took {elapsed:?}, budget is 30 s"
    );
    pass(9, "property suites");
}
