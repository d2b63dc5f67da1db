//! Command-line front end: lattice and entropy computations on partitions,
//! set-state measurement, ket tables and commutators, entanglement
//! classification, group orbits, and the named experiments. Output is plain
//! text or a versioned JSON document (`--json`).

mod input;
mod render;

use clap::{ArgAction, Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use setqm::entangle::{entanglement_measure, equiprobable_joint, ProductSubset};
use setqm::entropy::{
    density_matrix, entropy_delta, luders_update, quantum_logical_entropy_set,
    logical_entropy_partition, ProbabilityVector, SetDensityMatrix,
};
use setqm::experiments::{bell_experiment, measurement_cascade, two_slit, ExperimentReport};
use setqm::gf2::{change_basis, commutes, conversion_matrix, ket_table, projection_matrix, Basis};
use setqm::groups::{
    attribute_decomposition, commutes_with, csca_orbits, OrbitCsca, SetRepresentation,
};
use setqm::measure::{born, csca_check, Attribute, CscaOutcome};
use setqm::partition::Partition;
use setqm::{Error, Rat, Universe};

use input::{parse_attr_values, parse_basis, parse_permutation, parse_rat, parse_rat_list};
use render::{bit_rows_json, distribution_json, rat_json, text_table, Doc};

#[derive(Parser)]
#[command(
    name = "setqm",
    version,
    about = "Partition logic and exact quantum-style toy models on finite sets"
)]
struct Cli {
    /// Emit a structured JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Add decimal approximations alongside exact rationals.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice operations and entropies on partitions of a universe.
    Lattice(LatticeArgs),
    /// Measure a set state by an attribute (Born rule analogue).
    Measure(MeasureArgs),
    /// Density matrix of a partition, with optional measurement cascade.
    Density(DensityArgs),
    /// Ket table of the space over one or more bases.
    Kets(KetsArgs),
    /// Commutation check for two attributes on their home bases.
    Commute(CommuteArgs),
    /// Classify a subset of a product universe and measure its entanglement.
    Entangle(EntangleArgs),
    /// Orbits of a generated permutation group, with optional attributes.
    Orbits(OrbitsArgs),
    /// The two-slit experiment with GF(2) dynamics.
    Twoslit(TwoslitArgs),
    /// The Bell-inequality experiment on three bases.
    Bell,
    /// The measurement cascade with density matrices and entropy deltas.
    Cascade,
}

#[derive(Args)]
struct LatticeArgs {
    /// Universe, e.g. "{a,b,c}".
    #[arg(long)]
    universe: String,
    /// Join of two partitions, e.g. --join "{{a},{b,c}}" "{{a,b},{c}}".
    #[arg(long, num_args = 2)]
    join: Option<Vec<String>>,
    /// Meet of two partitions.
    #[arg(long, num_args = 2)]
    meet: Option<Vec<String>>,
    /// Implication sigma => pi, given as SIGMA PI.
    #[arg(long, num_args = 2)]
    implies: Option<Vec<String>>,
    /// Dit set of a partition.
    #[arg(long)]
    dit: Option<String>,
    /// Logical entropy of a partition.
    #[arg(long)]
    entropy: Option<String>,
    /// Point probabilities (default uniform), e.g. "1/2,1/4,1/4".
    #[arg(long)]
    probs: Option<String>,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    universe: String,
    /// The state to measure, e.g. "{a,b,c}".
    #[arg(long)]
    state: String,
    /// Attribute values per element, e.g. "a:1,b:2,c:3".
    #[arg(long)]
    attr: String,
    /// Condition on this eigenvalue instead of sampling.
    #[arg(long)]
    outcome: Option<String>,
    /// Seed for sampling an outcome when none is given.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long)]
    universe: String,
    /// The partition whose density matrix to build.
    #[arg(long)]
    partition: String,
    /// Point probabilities (default uniform).
    #[arg(long)]
    probs: Option<String>,
    /// Partitions to measure by, in order (repeatable).
    #[arg(long = "measure-by", action = ArgAction::Append)]
    measure_by: Vec<String>,
}

#[derive(Args)]
struct KetsArgs {
    #[arg(long)]
    universe: String,
    /// Extra bases, e.g. --basis "U':a'={a,b},b'={b,c},c'={a,b,c}"
    /// (repeatable; the standard basis U is always the first column).
    #[arg(long, action = ArgAction::Append)]
    basis: Vec<String>,
}

#[derive(Args)]
struct CommuteArgs {
    #[arg(long)]
    universe: String,
    /// Basis declarations (repeatable).
    #[arg(long, action = ArgAction::Append)]
    basis: Vec<String>,
    /// First attribute, e.g. "a:0,b:1,c:1" on its home basis labels.
    #[arg(long)]
    left: String,
    /// Home basis name of the first attribute (default the standard U).
    #[arg(long, default_value = "U")]
    left_basis: String,
    /// Second attribute.
    #[arg(long)]
    right: String,
    /// Home basis name of the second attribute (default the standard U).
    #[arg(long, default_value = "U")]
    right_basis: String,
}

#[derive(Args)]
struct EntangleArgs {
    /// Left factor universe, e.g. "{a,b}".
    #[arg(long)]
    left: String,
    /// Right factor universe.
    #[arg(long)]
    right: String,
    /// The subset of the product, e.g. "{(a,a),(b,b)}".
    #[arg(long)]
    subset: String,
}

#[derive(Args)]
struct OrbitsArgs {
    #[arg(long)]
    universe: String,
    /// Generators as cycles "(0 3)(1 4)" or image lists "3,4,5,0,1,2"
    /// (repeatable).
    #[arg(long = "gen", action = ArgAction::Append)]
    generators: Vec<String>,
    /// Attributes as label:value lists (repeatable).
    #[arg(long, action = ArgAction::Append)]
    attr: Vec<String>,
}

#[derive(Args)]
struct TwoslitArgs {
    /// Skip the position measurement at the slits.
    #[arg(long)]
    no_slit_measurement: bool,
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let (json, float) = (cli.json, cli.float);
    match run(cli.command, float) {
        Ok(doc) => {
            println!("{}", doc.render(json));
            std::process::ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } => std::process::ExitCode::from(2),
                _ => std::process::ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command, float: bool) -> Result<Doc, Error> {
    match command {
        Command::Lattice(args) => lattice_cmd(args, float),
        Command::Measure(args) => measure_cmd(args, float),
        Command::Density(args) => density_cmd(args, float),
        Command::Kets(args) => kets_cmd(args, float),
        Command::Commute(args) => commute_cmd(args, float),
        Command::Entangle(args) => entangle_cmd(args, float),
        Command::Orbits(args) => orbits_cmd(args, float),
        Command::Twoslit(args) => Ok(report_doc(
            two_slit(!args.no_slit_measurement),
            "twoslit",
            float,
        )),
        Command::Bell => Ok(report_doc(bell_experiment(), "bell", float)),
        Command::Cascade => Ok(report_doc(measurement_cascade(), "cascade", float)),
    }
}

/// Marks the top and bottom of the lattice the way the literature writes
/// them.
fn partition_text(p: &Partition) -> String {
    if p.is_discrete() {
        format!("{p} = 𝟏")
    } else if p.is_indiscrete() {
        format!("{p} = 𝟎")
    } else {
        p.to_string()
    }
}

fn probability_vector(n: usize, probs: &Option<String>) -> Result<ProbabilityVector, Error> {
    match probs {
        Some(text) => ProbabilityVector::new(parse_rat_list(text)?),
        None => Ok(ProbabilityVector::uniform(n)),
    }
}

fn lattice_cmd(args: LatticeArgs, float: bool) -> Result<Doc, Error> {
    let universe = Universe::parse(&args.universe)?;
    let mut doc = Doc::new("lattice", float);
    doc.input("universe", universe.to_string());

    if let Some(pair) = &args.join {
        let a = Partition::parse(&universe, &pair[0])?;
        let b = Partition::parse(&universe, &pair[1])?;
        let joined = a.join(&b)?;
        doc.line(format!("join = {}", partition_text(&joined)));
        doc.result("join", joined.to_string());
        doc.result("join_is_top", joined.is_discrete());
    }
    if let Some(pair) = &args.meet {
        let a = Partition::parse(&universe, &pair[0])?;
        let b = Partition::parse(&universe, &pair[1])?;
        let met = a.meet(&b)?;
        doc.line(format!("meet = {}", partition_text(&met)));
        doc.result("meet", met.to_string());
        doc.result("meet_is_bottom", met.is_indiscrete());
    }
    if let Some(pair) = &args.implies {
        let sigma = Partition::parse(&universe, &pair[0])?;
        let pi = Partition::parse(&universe, &pair[1])?;
        let result = setqm::implication(&sigma, &pi)?;
        doc.line(format!("implication = {}", partition_text(&result)));
        doc.result("implication", result.to_string());
        doc.result("implication_is_top", result.is_discrete());
        doc.result("refines", pi.is_refinement_of(&sigma)?);
    }
    if let Some(text) = &args.dit {
        let p = Partition::parse(&universe, text)?;
        let dits = p.dit_set();
        doc.line(format!("dit({p}) = {dits}  ({} pairs)", dits.pair_count()));
        doc.result("dit", dits.to_string());
        doc.result("dit_count", dits.pair_count());
    }
    if let Some(text) = &args.entropy {
        let p = Partition::parse(&universe, text)?;
        let probs = probability_vector(universe.size(), &args.probs)?;
        let h = logical_entropy_partition(&p, &probs)?;
        doc.line(format!("h({p}) = {}", doc.fmt_rat(&h)));
        doc.result_rat("entropy", &h);
    }
    if doc.results.is_empty() {
        doc.line("no operation requested; see --help");
    }
    Ok(doc)
}

fn attribute_on(universe: &Universe, values_text: &str) -> Result<Attribute, Error> {
    let values = parse_attr_values(values_text)?;
    let ordered: Result<Vec<Rat>, Error> = universe
        .labels()
        .iter()
        .map(|label| {
            values
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::PartialAttribute(label.clone()))
        })
        .collect();
    Attribute::on_universe(universe, ordered?)
}

/// splitmix64 stream for the seeded outcome sampler.
fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn measure_cmd(args: MeasureArgs, float: bool) -> Result<Doc, Error> {
    let universe = Universe::parse(&args.universe)?;
    let std = Basis::standard(&universe, "U");
    if args.state.trim() == "{}" {
        return Err(Error::EmptyState);
    }
    let state_members = Universe::parse(&args.state)?;
    let state_labels: Vec<&str> = state_members.labels().iter().map(String::as_str).collect();
    let state = std.subset(&state_labels)?;
    let attribute = attribute_on(&universe, &args.attr)?;

    let mut doc = Doc::new("measure", float);
    doc.input("universe", universe.to_string());
    doc.input("state", std.subset_string(state.bits()));
    doc.input("attr", args.attr.clone());

    let distribution = born(&state, &attribute)?;
    let mut rows = vec![vec![
        "eigenvalue".to_string(),
        "probability".to_string(),
        "post-state".to_string(),
    ]];
    let mut outcome_values = serde_json::Map::new();
    for outcome in distribution.outcomes() {
        rows.push(vec![
            outcome.value.to_string(),
            doc.fmt_rat(&outcome.probability),
            std.subset_string(outcome.post_state.bits()),
        ]);
        outcome_values.insert(
            outcome.value.to_string(),
            json!({
                "probability": rat_json(&outcome.probability),
                "post_state": std.subset_string(outcome.post_state.bits()),
            }),
        );
    }
    for line in text_table(&rows) {
        doc.line(line);
    }
    doc.result("outcomes", Value::Object(outcome_values));

    let chosen = match &args.outcome {
        Some(text) => {
            let r = parse_rat(text)?;
            distribution
                .outcome_for(&r)
                .cloned()
                .ok_or_else(|| Error::ZeroProbabilityOutcome(r.to_string()))?
        }
        None => {
            // Sample by cumulative probability with a seeded stream.
            let mut stream = args.seed;
            let draw = Rat::new((splitmix(&mut stream) >> 11).into(), (1u64 << 53).into());
            let mut cumulative = Rat::zero();
            let mut picked = distribution.outcomes().last().cloned();
            for outcome in distribution.outcomes() {
                cumulative += &outcome.probability;
                if draw < cumulative {
                    picked = Some(outcome.clone());
                    break;
                }
            }
            doc.result("sampled", true);
            doc.result("seed", args.seed);
            picked.expect("distribution is nonempty")
        }
    };
    doc.line(format!(
        "outcome {} -> post-state {}",
        chosen.value,
        std.subset_string(chosen.post_state.bits())
    ));
    doc.result("outcome", chosen.value.to_string());
    doc.result("post_state", std.subset_string(chosen.post_state.bits()));
    Ok(doc)
}

fn density_rows(rho: &SetDensityMatrix) -> Vec<Vec<String>> {
    (0..rho.dim())
        .map(|i| (0..rho.dim()).map(|j| rho.entry_string(i, j)).collect())
        .collect()
}

fn density_cmd(args: DensityArgs, float: bool) -> Result<Doc, Error> {
    let universe = Universe::parse(&args.universe)?;
    let partition = Partition::parse(&universe, &args.partition)?;
    let probs = probability_vector(universe.size(), &args.probs)?;
    let mut doc = Doc::new("density", float);
    doc.input("universe", universe.to_string());
    doc.input("partition", partition.to_string());

    let mut rho = density_matrix(&partition, &probs)?;
    let h = quantum_logical_entropy_set(&rho);
    doc.line(format!("density matrix of {}", partition_text(&partition)));
    for line in text_table(&density_rows(&rho)) {
        doc.line(format!("  {line}"));
    }
    doc.line(format!("h = {}", doc.fmt_rat(&h)));
    doc.result("matrix", json!(density_rows(&rho)));
    doc.result_rat("entropy", &h);

    for (step, text) in args.measure_by.iter().enumerate() {
        let by = Partition::parse(&universe, text)?;
        let updated = luders_update(&rho, &by)?;
        let delta = entropy_delta(&rho, &updated)?;
        doc.line(format!("measured by {}", partition_text(&by)));
        for line in text_table(&density_rows(&updated)) {
            doc.line(format!("  {line}"));
        }
        doc.line(format!("entropy increase = {}", doc.fmt_rat(&delta)));
        let key = format!("step{}", step + 1);
        doc.result(&format!("{key}_measure_by"), by.to_string());
        doc.result(&format!("{key}_matrix"), json!(density_rows(&updated)));
        doc.result_rat(&format!("{key}_delta"), &delta);
        rho = updated;
    }
    if !args.measure_by.is_empty() {
        let final_h = quantum_logical_entropy_set(&rho);
        doc.line(format!("final h = {}", doc.fmt_rat(&final_h)));
        doc.result_rat("final_entropy", &final_h);
        doc.result("final_partition", rho.partition().to_string());
    }
    Ok(doc)
}

fn kets_cmd(args: KetsArgs, float: bool) -> Result<Doc, Error> {
    let universe = Universe::parse(&args.universe)?;
    let mut bases = vec![Basis::standard(&universe, "U")];
    for declaration in &args.basis {
        bases.push(parse_basis(&universe, declaration)?);
    }
    let table = ket_table(&bases)?;
    let mut doc = Doc::new("kets", float);
    doc.input("universe", universe.to_string());
    let names: Vec<Value> = bases
        .iter()
        .map(|b| Value::String(b.name().to_string()))
        .collect();
    doc.input("bases", Value::Array(names.clone()));
    let mut rows = vec![bases
        .iter()
        .map(|b| b.name().to_string())
        .collect::<Vec<_>>()];
    let mut json_rows = Vec::new();
    for i in 0..table.rows().len() {
        let row = table.row_strings(i);
        json_rows.push(json!(row));
        rows.push(row);
    }
    for line in text_table(&rows) {
        doc.line(line);
    }
    doc.result("columns", Value::Array(names));
    doc.result("rows", Value::Array(json_rows));
    Ok(doc)
}

fn commute_cmd(args: CommuteArgs, float: bool) -> Result<Doc, Error> {
    let universe = Universe::parse(&args.universe)?;
    let std = Basis::standard(&universe, "U");
    let mut bases = vec![std.clone()];
    for declaration in &args.basis {
        bases.push(parse_basis(&universe, declaration)?);
    }
    let find_basis = |name: &str| -> Result<Basis, Error> {
        bases
            .iter()
            .find(|b| b.name() == name)
            .cloned()
            .ok_or_else(|| Error::UnknownLabel(format!("basis {name}")))
    };
    let build_attr = |basis: &Basis, text: &str| -> Result<Attribute, Error> {
        let values = parse_attr_values(text)?;
        let borrowed: Vec<(&str, Rat)> = values
            .iter()
            .map(|(l, v)| (l.as_str(), v.clone()))
            .collect();
        Attribute::new(basis, &borrowed)
    };
    let left_basis = find_basis(&args.left_basis)?;
    let right_basis = find_basis(&args.right_basis)?;
    let left = build_attr(&left_basis, &args.left)?;
    let right = build_attr(&right_basis, &args.right)?;

    let mut doc = Doc::new("commute", float);
    doc.input("universe", universe.to_string());
    doc.input("left", args.left.clone());
    doc.input("left_basis", left_basis.name().to_string());
    doc.input("right", args.right.clone());
    doc.input("right_basis", right_basis.name().to_string());

    let verdict = setqm::measure::attributes_commute(&left, &right, &std)?;
    doc.result("commute", verdict);

    // Witness products for the largest eigenvalue of each attribute, in the
    // standard frame.
    let left_r = left.eigenvalues().into_iter().next_back().unwrap();
    let right_r = right.eigenvalues().into_iter().next_back().unwrap();
    let p = change_basis(
        &projection_matrix(&left_basis, &left.preimage_labels(&left_r))?,
        &left_basis,
        &std,
    )?;
    let q = change_basis(
        &projection_matrix(&right_basis, &right.preimage_labels(&right_r))?,
        &right_basis,
        &std,
    )?;
    let products = commutes(&q, &p)?;
    doc.line(format!(
        "attributes {}",
        if verdict { "commute" } else { "do not commute" }
    ));
    doc.line(format!(
        "projection of eigenvalue {left_r} (left) in U: {:?}",
        p.to_rows()
    ));
    doc.line(format!(
        "projection of eigenvalue {right_r} (right) in U: {:?}",
        q.to_rows()
    ));
    doc.line(format!("right after left: {:?}", products.mn.to_rows()));
    doc.line(format!("left after right: {:?}", products.nm.to_rows()));
    doc.result("left_projection", bit_rows_json(&p.to_rows()));
    doc.result("right_projection", bit_rows_json(&q.to_rows()));
    doc.result("right_after_left", bit_rows_json(&products.mn.to_rows()));
    doc.result("left_after_right", bit_rows_json(&products.nm.to_rows()));
    if !args.basis.is_empty() {
        let conv = conversion_matrix(&bases[1], &std)?;
        doc.result("conversion_to_U", bit_rows_json(&conv.to_rows()));
    }

    // Completeness when the attributes share a home basis.
    if setqm::measure::compatible_simple(&left, &right) {
        match csca_check(&[&left, &right])? {
            CscaOutcome::Complete(kets) => {
                let rendered: Vec<String> = kets
                    .iter()
                    .map(|k| format!("{{{}}} = {}", k.label, k.ket_string()))
                    .collect();
                doc.line(format!("complete set: {}", rendered.join(", ")));
                doc.result("csca", json!(rendered));
            }
            CscaOutcome::Incomplete { witness_block } => {
                doc.line(format!(
                    "incomplete: block {{{}}} undistinguished",
                    witness_block.join(",")
                ));
                doc.result("csca_witness", json!(witness_block));
            }
        }
    }
    Ok(doc)
}

fn entangle_cmd(args: EntangleArgs, float: bool) -> Result<Doc, Error> {
    let left = Universe::parse(&args.left)?;
    let right = Universe::parse(&args.right)?;
    let subset = ProductSubset::parse(&left, &right, &args.subset)?;
    let mut doc = Doc::new("entangle", float);
    doc.input("left", left.to_string());
    doc.input("right", right.to_string());
    doc.input("subset", subset.pair_string());

    let (sx, sy) = subset.supports();
    let support_left: Vec<String> = sx.iter().map(|&i| left.label(i).to_string()).collect();
    let support_right: Vec<String> = sy.iter().map(|&i| right.label(i).to_string()).collect();
    let separated = subset.is_separated();
    doc.line(format!(
        "{} is {}",
        subset.pair_string(),
        if separated { "separated" } else { "entangled" }
    ));
    doc.line(format!(
        "supports: {{{}}} and {{{}}}",
        support_left.join(","),
        support_right.join(",")
    ));
    doc.result("separated", separated);
    doc.result("support_left", json!(support_left));
    doc.result("support_right", json!(support_right));
    doc.result("bell_state", subset.is_bijection_graph());

    let joint = equiprobable_joint(&subset)?;
    let (px, py) = joint.marginals();
    let marginal_left: Vec<(String, Rat)> = left
        .labels()
        .iter()
        .zip(px.entries())
        .map(|(l, p)| (l.clone(), p.clone()))
        .collect();
    let marginal_right: Vec<(String, Rat)> = right
        .labels()
        .iter()
        .zip(py.entries())
        .map(|(l, p)| (l.clone(), p.clone()))
        .collect();
    doc.result("marginal_left", distribution_json(&marginal_left));
    doc.result("marginal_right", distribution_json(&marginal_right));
    doc.result("correlated", joint.is_correlated());

    let divergence = entanglement_measure(&subset)?;
    doc.line(format!("entanglement = {}", doc.fmt_rat(&divergence)));
    doc.result_rat("entanglement", &divergence);
    Ok(doc)
}

fn orbits_cmd(args: OrbitsArgs, float: bool) -> Result<Doc, Error> {
    let universe = Universe::parse(&args.universe)?;
    let generators = args
        .generators
        .iter()
        .map(|g| parse_permutation(&universe, g))
        .collect::<Result<Vec<_>, Error>>()?;
    let rep = SetRepresentation::generate(&universe, &generators)?;
    let orbit_partition = rep.orbits();

    let mut doc = Doc::new("orbits", float);
    doc.input("universe", universe.to_string());
    doc.input("generators", json!(args.generators));
    doc.line(format!("group order = {}", rep.order()));
    doc.line(format!("orbits = {}", partition_text(&orbit_partition)));
    doc.result("group_order", rep.order());
    doc.result("orbits", orbit_partition.to_string());
    doc.result("transitive", rep.is_transitive());

    let attributes = args
        .attr
        .iter()
        .map(|text| attribute_on(&universe, text))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut all_commute = !attributes.is_empty();
    for (i, attribute) in attributes.iter().enumerate() {
        let key = format!("attr{}", i + 1);
        let commuting = commutes_with(attribute, &rep)?;
        all_commute &= commuting;
        doc.result(&format!("{key}_commutes"), commuting);
        if commuting {
            let decomposition = attribute_decomposition(attribute, &rep)?;
            let rendered: Vec<String> = decomposition
                .iter()
                .map(|(orbit, value)| {
                    let labels: Vec<&str> = orbit.iter().map(|&e| universe.label(e)).collect();
                    format!("{{{}}} -> {value}", labels.join(","))
                })
                .collect();
            doc.line(format!(
                "attribute {} is constant on orbits: {}",
                i + 1,
                rendered.join("; ")
            ));
            doc.result(&format!("{key}_decomposition"), json!(rendered));
        } else {
            doc.line(format!(
                "attribute {} does not commute with the action",
                i + 1
            ));
        }
    }
    if all_commute {
        let refs: Vec<&Attribute> = attributes.iter().collect();
        match csca_orbits(&refs, &rep)? {
            OrbitCsca::Complete(tuples) => {
                let rendered: Vec<String> = tuples
                    .iter()
                    .map(|(orbit, values)| {
                        let labels: Vec<&str> =
                            orbit.iter().map(|&e| universe.label(e)).collect();
                        let vals: Vec<String> = values.iter().map(Rat::to_string).collect();
                        format!("{{{}}} = |{}>", labels.join(","), vals.join(","))
                    })
                    .collect();
                doc.line(format!(
                    "complete set of commuting attributes: {}",
                    rendered.join(", ")
                ));
                doc.result("csca", json!(rendered));
            }
            OrbitCsca::Incomplete { first, second } => {
                let name = |orbit: &[usize]| {
                    let labels: Vec<&str> =
                        orbit.iter().map(|&e| universe.label(e)).collect();
                    format!("{{{}}}", labels.join(","))
                };
                doc.line(format!(
                    "incomplete: orbits {} and {} share every eigenvalue",
                    name(&first),
                    name(&second)
                ));
                doc.result("csca_witness", json!([name(&first), name(&second)]));
            }
        }
    }
    Ok(doc)
}

fn report_doc(report: ExperimentReport, command: &str, float: bool) -> Doc {
    let mut doc = Doc::new(command, float);
    doc.input("experiment", report.name.clone());
    doc.line(format!("experiment: {}", report.name));
    for step in &report.steps {
        doc.line(format!("- {}", step.description));
        if let Some(state) = &step.state {
            doc.line(format!("    state: {state}"));
        }
        if let Some(distribution) = &step.distribution {
            let rendered: Vec<String> = distribution
                .iter()
                .map(|(l, p)| format!("{l}: {}", doc.fmt_rat(p)))
                .collect();
            doc.line(format!("    {}", rendered.join("  ")));
        }
        if let Some(matrix) = &step.matrix {
            for line in text_table(matrix) {
                doc.line(format!("    {line}"));
            }
        }
    }
    for (name, value) in &report.final_values {
        doc.line(format!("{name} = {}", doc.fmt_rat(value)));
        doc.result_rat(name, value);
    }
    for (name, value) in &report.flags {
        doc.line(format!("{name} = {value}"));
        doc.result(name, *value);
    }
    let steps_json: Vec<Value> = report
        .steps
        .iter()
        .map(|step| {
            let mut map = serde_json::Map::new();
            map.insert("description".into(), json!(step.description));
            if let Some(state) = &step.state {
                map.insert("state".into(), json!(state));
            }
            if let Some(distribution) = &step.distribution {
                map.insert("distribution".into(), distribution_json(distribution));
            }
            if let Some(matrix) = &step.matrix {
                map.insert("matrix".into(), json!(matrix));
            }
            Value::Object(map)
        })
        .collect();
    doc.result("steps", Value::Array(steps_json));
    doc
}
