//! Command-line front end: parse graphs and budgets, dispatch the solvers,
//! validate outputs independently, and emit JSON reports.
//!
//! Exit codes are a stable contract: 0 success, 1 malformed input, 2
//! precondition violation, 3 internal invariant error.

mod inputs;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degpart::budgets::DegreeFunction;
use degpart::error::Error;
use degpart::format::to_edge_list;
use degpart::generators;
use degpart::multigraph::Multigraph;
use degpart::niceness::{is_meager, maximal_nice_subset, minimal_nice_subset};
use degpart::oracle;
use degpart::partition_state::partition_weight;
use degpart::solver::general::{check_general, partition_general};
use degpart::solver::k4free::{check_k4free, partition_k4free};
use degpart::solver::multiway::multiway_partition;
use degpart::solver::Solution;
use degpart::vertex_set::VertexSet;

use inputs::*;
use report::*;

#[derive(Parser)]
#[command(
    name = "degpart",
    version,
    about = "Degree-constrained multigraph partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a two-way partition meeting the degree budgets.
    Partition(PartitionArgs),
    /// Compute a p-way partition meeting per-part budgets.
    Multiway(MultiwayArgs),
    /// Brute-force ground truth on small instances.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Emit a named instance in edge-list form.
    Gen(GenArgs),
    /// Check a partition supplied as JSON against the budgets.
    Verify(VerifyArgs),
    /// Extract the maximal (or an inclusion-minimal) nice subset.
    NiceSubset(NiceSubsetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    General,
    K4free,
    Auto,
}

#[derive(Args)]
struct BudgetFlags {
    /// Constant budget for the A side.
    #[arg(long)]
    a_const: Option<i64>,
    /// Constant budget for the B side.
    #[arg(long)]
    b_const: Option<i64>,
    /// JSON file {"a": [...], "b": [...]}.
    #[arg(long)]
    budgets: Option<String>,
}

impl BudgetFlags {
    fn load(&self, n: usize) -> Result<(DegreeFunction, DegreeFunction), Error> {
        load_two_way_budgets(n, self.a_const, self.b_const, self.budgets.as_deref())
    }

    fn describe(&self) -> String {
        match (&self.a_const, &self.b_const, &self.budgets) {
            (Some(a), Some(b), _) => format!("a-const={a} b-const={b}"),
            (_, _, Some(path)) => format!("budgets-file={path}"),
            _ => String::new(),
        }
    }
}

#[derive(Args)]
struct PartitionArgs {
    /// Graph file in edge-list form, or - for stdin.
    #[arg(default_value = "-")]
    graph: String,
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
    #[command(flatten)]
    budgets: BudgetFlags,
    /// Write the exchange log to this file.
    #[arg(long)]
    trace: Option<String>,
    /// Include wall time in the report (breaks byte determinism).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct MultiwayArgs {
    #[arg(default_value = "-")]
    graph: String,
    /// Bound flavor: 1 = general multigraphs, 2 = K4-minus-free graphs.
    #[arg(long)]
    h: Option<u8>,
    /// JSON file {"fs": [[...], ...], "h": 1}.
    #[arg(long)]
    budgets: Option<String>,
    /// Constant budgets, one per part, e.g. 1,1,2.
    #[arg(long = "const")]
    const_list: Option<String>,
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Enumerate all bipartitions, reporting the first feasible witness.
    ExistsFeasible {
        #[arg(default_value = "-")]
        graph: String,
        #[command(flatten)]
        budgets: BudgetFlags,
    },
    /// Test meagerness both by peeling and by subset enumeration.
    CheckMeager {
        #[arg(default_value = "-")]
        graph: String,
        /// Constant budget f.
        #[arg(long)]
        f_const: Option<i64>,
        /// JSON file with a budget array, e.g. [1, 2, 0].
        #[arg(long)]
        f: Option<String>,
        /// Comma-separated vertex ids; defaults to all vertices.
        #[arg(long)]
        set: Option<String>,
    },
    /// Certify a sharpness family instance at scale t.
    Certify { family: String, t: u64 },
}

#[derive(Args)]
struct GenArgs {
    /// Family: tk3, cubeH, icosa, or random.
    family: String,
    /// Scale for tk3/cubeH/icosa (multiplies every edge).
    #[arg(long, default_value_t = 1)]
    t: u64,
    /// Vertex count for random graphs.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Pair probability for random graphs.
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    /// Maximum multiplicity for random graphs.
    #[arg(long, default_value_t = 1)]
    max_mult: u64,
    /// Seed for random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(default_value = "-")]
    graph: String,
    #[command(flatten)]
    budgets: BudgetFlags,
    /// Multiway budgets JSON; use instead of a/b for parts-style input.
    #[arg(long)]
    multiway_budgets: Option<String>,
    /// Partition JSON file; defaults to stdin.
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Args)]
struct NiceSubsetArgs {
    #[arg(default_value = "-")]
    graph: String,
    #[arg(long)]
    f_const: Option<i64>,
    #[arg(long)]
    f: Option<String>,
    #[arg(long)]
    set: Option<String>,
    /// Shrink to an inclusion-minimal nice subset.
    #[arg(long)]
    minimal: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Partition(args) => cmd_partition(args),
        Command::Multiway(args) => cmd_multiway(args),
        Command::Oracle { command } => cmd_oracle(command),
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::NiceSubset(args) => cmd_nice_subset(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            let (kind, code) = match &err {
                Error::Parse { .. } => ("parse", 1),
                Error::Input(_) => ("input", 1),
                Error::Precondition(_) => ("precondition", 2),
                Error::Invariant(_) => ("invariant", 3),
            };
            print_json(&ErrorReport {
                schema: SCHEMA_VERSION,
                error: ErrorBody {
                    kind: kind.into(),
                    message: err.to_string(),
                },
            });
            eprintln!("error: {err}");
            ExitCode::from(code)
        }
    }
}

/// Assignment of isolated vertices before the solvers run: each goes to a
/// side whose budget it meets with degree zero.
fn place_isolated_two_way(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let mut to_a = Vec::new();
    let mut to_b = Vec::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) > 0 {
            continue;
        }
        if a.get(v) == 0 {
            to_a.push(v);
        } else if b.get(v) == 0 {
            to_b.push(v);
        } else {
            return Err(Error::Precondition(format!(
                "isolated vertex {v} has positive budgets on both sides"
            )));
        }
    }
    Ok((to_a, to_b))
}

fn cmd_partition(args: PartitionArgs) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let (graph, text) = load_graph(&args.graph)?;
    let n = graph.vertex_count();
    let (a, b) = args.budgets.load(n)?;
    let digest = input_digest(&text, &args.budgets.describe());

    if graph.edges().is_empty() {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let (to_a, to_b) = place_isolated_two_way(&graph, &a, &b)?;
    let (core, _removed) = graph.strip_isolated();
    let kept: Vec<usize> = (0..n).filter(|&v| graph.degree(v) > 0).collect();
    let core_a = a.restricted(&kept);
    let core_b = b.restricted(&kept);

    let (mode_name, solution): (&str, Solution) = match args.mode {
        Mode::General => ("general", partition_general(&core, &core_a, &core_b)?),
        Mode::K4free => ("k4free", partition_k4free(&core, &core_a, &core_b)?),
        Mode::Auto => {
            if check_general(&core, &core_a, &core_b).ok() {
                ("general", partition_general(&core, &core_a, &core_b)?)
            } else {
                let k4_report = check_k4free(&core, &core_a, &core_b);
                if k4_report.ok() {
                    ("k4free", partition_k4free(&core, &core_a, &core_b)?)
                } else {
                    return Err(Error::Precondition(format!(
                        "no mode applies; general: {}; k4free: {}",
                        check_general(&core, &core_a, &core_b).summary(),
                        k4_report.summary()
                    )));
                }
            }
        }
    };

    // map the solved core back to original ids and append the isolated ones
    let mut a_side = VertexSet::empty(n);
    for v in solution.a_side.iter() {
        a_side.insert(kept[v]);
    }
    for &v in &to_a {
        a_side.insert(v);
    }
    let mut b_side = VertexSet::empty(n);
    for v in solution.b_side.iter() {
        b_side.insert(kept[v]);
    }
    for &v in &to_b {
        b_side.insert(v);
    }

    // independent re-check on the original instance
    let valid = degpart::is_feasible_partition(&graph, &a, &b, &a_side, &b_side);
    if let Some(path) = &args.trace {
        let mut body = solution.trace.to_lines().join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        std::fs::write(path, body)
            .map_err(|e| Error::Input(format!("failed to write {path}: {e}")))?;
    }
    let report = PartitionReport {
        schema: SCHEMA_VERSION,
        mode: mode_name.into(),
        input_digest: digest,
        partition: TwoWayPartition {
            a: a_side.to_vec(),
            b: b_side.to_vec(),
        },
        move_count: solution.trace.move_count(),
        final_weight: partition_weight(&graph, &a, &b, &a_side, &b_side),
        validation: if valid {
            "valid".into()
        } else {
            "invalid".into()
        },
        wall_ms: args.timing.then(|| start.elapsed().as_millis() as u64),
    };
    print_json(&report);
    if !valid {
        return Err(Error::Invariant(
            "emitted partition failed the independent feasibility check".into(),
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_multiway(args: MultiwayArgs) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let (graph, text) = load_graph(&args.graph)?;
    let n = graph.vertex_count();
    let (fs, file_h) =
        load_multiway_budgets(n, args.budgets.as_deref(), args.const_list.as_deref())?;
    let h = args
        .h
        .or(file_h)
        .ok_or_else(|| Error::Input("h not given; pass --h 1 or --h 2".into()))?;
    let digest = input_digest(
        &text,
        &format!(
            "multiway h={h} fs={:?}",
            fs.iter().map(|f| f.values().to_vec()).collect::<Vec<_>>()
        ),
    );

    if graph.edges().is_empty() {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    // isolated vertices go to the first part with a zero budget there
    let mut extra: Vec<Vec<usize>> = vec![Vec::new(); fs.len()];
    for v in 0..n {
        if graph.degree(v) > 0 {
            continue;
        }
        match (0..fs.len()).find(|&i| fs[i].get(v) == 0) {
            Some(i) => extra[i].push(v),
            None => {
                return Err(Error::Precondition(format!(
                    "isolated vertex {v} has positive budgets in every part"
                )))
            }
        }
    }
    let (core, _) = graph.strip_isolated();
    let kept: Vec<usize> = (0..n).filter(|&v| graph.degree(v) > 0).collect();
    let core_fs: Vec<DegreeFunction> = fs.iter().map(|f| f.restricted(&kept)).collect();

    let parts = multiway_partition(&core, &core_fs, h)?;
    let mut mapped: Vec<VertexSet> = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let mut m = VertexSet::empty(n);
        for v in part.iter() {
            m.insert(kept[v]);
        }
        for &v in &extra[i] {
            m.insert(v);
        }
        mapped.push(m);
    }

    let mut valid = mapped.iter().map(|p| p.len()).sum::<usize>() == n;
    for (f, part) in fs.iter().zip(&mapped) {
        valid = valid
            && !part.is_empty()
            && part
                .iter()
                .all(|v| graph.degree_into(v, part) as i64 >= f.get(v));
    }
    let report = MultiwayReport {
        schema: SCHEMA_VERSION,
        mode: format!("multiway-h{h}"),
        input_digest: digest,
        parts: mapped.iter().map(|p| p.to_vec()).collect(),
        validation: if valid {
            "valid".into()
        } else {
            "invalid".into()
        },
        wall_ms: args.timing.then(|| start.elapsed().as_millis() as u64),
    };
    print_json(&report);
    if !valid {
        return Err(Error::Invariant(
            "emitted parts failed the independent feasibility check".into(),
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn enumeration_cap() -> usize {
    std::env::var("DEGPART_ORACLE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(oracle::DEFAULT_ENUMERATION_CAP)
}

fn cmd_oracle(command: OracleCommand) -> Result<ExitCode, Error> {
    match command {
        OracleCommand::ExistsFeasible { graph, budgets } => {
            let (g, text) = load_graph(&graph)?;
            let (a, b) = budgets.load(g.vertex_count())?;
            let digest = input_digest(&text, &budgets.describe());
            let witness = oracle::exists_feasible_partition(&g, &a, &b, enumeration_cap())?;
            print_json(&ExistsReport {
                schema: SCHEMA_VERSION,
                input_digest: digest,
                exists: witness.is_some(),
                witness: witness.map(|(a_side, b_side)| TwoWayPartition {
                    a: a_side.to_vec(),
                    b: b_side.to_vec(),
                }),
            });
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::CheckMeager {
            graph,
            f_const,
            f,
            set,
        } => {
            let (g, _) = load_graph(&graph)?;
            let n = g.vertex_count();
            let budget = load_single_budget(n, f_const, f.as_deref())?;
            let x = match set {
                Some(list) => VertexSet::from_ids(n, &parse_id_list(&list)?)?,
                None => VertexSet::full(n),
            };
            let by_peel = is_meager(&g, &x, &budget)?;
            let by_enum = oracle::meager_by_enumeration(&g, &x, &budget, enumeration_cap())?;
            print_json(&MeagerReport {
                schema: SCHEMA_VERSION,
                set: x.to_vec(),
                meager_peel: by_peel,
                meager_enumeration: by_enum,
                agree: by_peel == by_enum,
            });
            if by_peel != by_enum {
                return Err(Error::Invariant(
                    "peeling and enumeration disagree on meagerness".into(),
                ));
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Certify { family, t } => {
            let fam: oracle::SharpnessFamily = family.parse()?;
            let report = oracle::certify_sharpness(fam, t)?;
            let certified = report.certified();
            print_json(&CertifyReport {
                schema: SCHEMA_VERSION,
                family: report.family.into(),
                t: report.t,
                vertex_count: report.vertex_count,
                relaxed_bound_holds: report.relaxed_bound_holds,
                feasible_partition_exists: report.feasible_partition_exists,
                certified,
            });
            if certified {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Error::Precondition(format!(
                    "family {} at t={t} failed certification",
                    report.family
                )))
            }
        }
    }
}

fn load_single_budget(
    n: usize,
    f_const: Option<i64>,
    f_path: Option<&str>,
) -> Result<DegreeFunction, Error> {
    match (f_const, f_path) {
        (Some(c), None) => DegreeFunction::constant(n, c),
        (None, Some(path)) => {
            let text = read_input(path)?;
            let values: Vec<i64> = serde_json::from_str(&text)
                .map_err(|e| Error::Input(format!("invalid budget JSON: {e}")))?;
            if values.len() != n {
                return Err(Error::Input(format!(
                    "budget array must have length {n} (got {})",
                    values.len()
                )));
            }
            DegreeFunction::from_values(values)
        }
        _ => Err(Error::Input(
            "provide either --f-const or --f <file>".into(),
        )),
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Error> {
    let graph = match args.family.as_str() {
        "tk3" => generators::tk3(args.t)?,
        "cubeH" => generators::t_multiply(&generators::square_antiprism(), args.t)?,
        "icosa" => generators::t_multiply(&generators::icosahedron(), args.t)?,
        "random" => {
            generators::random_multigraph(args.n, args.edge_prob, args.max_mult, args.seed)?
        }
        other => {
            return Err(Error::Input(format!(
                "unknown family {other:?}; expected tk3, cubeH, icosa, or random"
            )))
        }
    };
    print!("{}", to_edge_list(&graph));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let (graph, _) = load_graph(&args.graph)?;
    let n = graph.vertex_count();
    let partition_text = read_input(args.partition.as_deref().unwrap_or("-"))?;
    let parts_ids = parse_partition_json(&partition_text)?;

    let budgets: Vec<DegreeFunction> = if let Some(path) = &args.multiway_budgets {
        let (fs, _) = load_multiway_budgets(n, Some(path), None)?;
        fs
    } else {
        let (a, b) = args.budgets.load(n)?;
        vec![a, b]
    };
    if budgets.len() != parts_ids.len() {
        return Err(Error::Input(format!(
            "partition has {} parts but budgets describe {}",
            parts_ids.len(),
            budgets.len()
        )));
    }

    let mut reasons = Vec::new();
    let mut parts = Vec::with_capacity(parts_ids.len());
    for (i, ids) in parts_ids.iter().enumerate() {
        match VertexSet::from_ids(n, ids) {
            Ok(p) => {
                if p.is_empty() {
                    reasons.push(format!("part {i} is empty"));
                }
                parts.push(p);
            }
            Err(e) => {
                reasons.push(format!("part {i}: {e}"));
                parts.push(VertexSet::empty(n));
            }
        }
    }
    let mut seen = VertexSet::empty(n);
    for (i, p) in parts.iter().enumerate() {
        if !p.is_disjoint(&seen) {
            reasons.push(format!("part {i} overlaps an earlier part"));
        }
        seen = seen.union(p);
    }
    if seen.len() != n {
        reasons.push(format!("parts cover {} of {n} vertices", seen.len()));
    }
    if reasons.is_empty() {
        for (i, (f, p)) in budgets.iter().zip(&parts).enumerate() {
            for v in p.iter() {
                let d = graph.degree_into(v, p) as i64;
                if d < f.get(v) {
                    reasons.push(format!(
                        "vertex {v} has degree {d} inside part {i}, needs {}",
                        f.get(v)
                    ));
                }
            }
        }
    }

    let feasible = reasons.is_empty();
    print_json(&VerifyReport {
        schema: SCHEMA_VERSION,
        feasible,
        reasons,
    });
    if feasible {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn cmd_nice_subset(args: NiceSubsetArgs) -> Result<ExitCode, Error> {
    let (graph, _) = load_graph(&args.graph)?;
    let n = graph.vertex_count();
    let budget = load_single_budget(n, args.f_const, args.f.as_deref())?;
    let x = match args.set {
        Some(list) => VertexSet::from_ids(n, &parse_id_list(&list)?)?,
        None => VertexSet::full(n),
    };
    let subset = if args.minimal {
        minimal_nice_subset(&graph, &x, &budget)
    } else {
        let m = maximal_nice_subset(&graph, &x, &budget);
        (!m.is_empty()).then_some(m)
    };
    print_json(&NiceSubsetReport {
        schema: SCHEMA_VERSION,
        minimal: args.minimal,
        subset: subset.map(|s| s.to_vec()),
    });
    Ok(ExitCode::SUCCESS)
}
