//! The `orbitcalc` command line.
//!
//! Exit codes: 0 on success, 1 for domain or data errors, 2 for usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitcalc_core::derivative::{
    b_k_orbit_set, composition_support, max_depth, whittaker_support, WhittakerSupport,
};
use orbitcalc_core::exceptional::{
    check_against_table, embedded_related_table, LabeledPoset, RelatedClass,
};
use orbitcalc_core::oracle::{jordan_type, matrix_of_support};
use orbitcalc_core::orbit::{closure_leq, is_valid_partition, is_very_even};
use orbitcalc_core::pl::{
    is_pl, odd_multiplicity_parts, pl_set_of_orbit, reconstruct_orbit, PlSet,
};
use orbitcalc_core::{Cap, GroupKind, Kind, Label, Orbit, OrbitSet, Partition};
use serde_json::{json, Value};

use crate::dot::to_dot;
use crate::poset_file::{load_poset, write_poset, Loaded};
use crate::report::{partition_value, partitions_value, Report};
use crate::search::find_related_unions;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "orbitcalc",
    version,
    about = "Nilpotent orbit combinatorics for classical groups"
)]
pub struct Cli {
    /// Emit the deterministic JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest dimension for which orbits are enumerated.
    #[arg(long, global = true, env = "ORBITCALC_CAP", default_value_t = Cap::DEFAULT.0)]
    pub cap: u32,

    /// Worker threads for searches (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Poset,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit parametrization and closure order.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Principal-in-Levi orbits.
    #[command(subcommand)]
    Pl(PlCmd),
    /// The derivative B^k on GL(n) orbits.
    #[command(subcommand)]
    Deriv(DerivCmd),
    /// Degenerate Whittaker characters.
    #[command(subcommand)]
    Whittaker(WhittakerCmd),
    /// Orbit posets: export and ingestion.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Related orbits of exceptional groups.
    #[command(subcommand)]
    Exceptional(ExceptionalCmd),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GroupArgs {
    /// GL (also SL, GLR), O, SO or Sp.
    #[arg(long, value_parser = parse_kind)]
    pub group: Kind,
    #[arg(long)]
    pub dim: u32,
}

impl GroupArgs {
    fn group(&self) -> Result<GroupKind, CliError> {
        Ok(GroupKind::new(self.group, self.dim)?)
    }
}

/// A partition with an optional `:I` / `:II` suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitArg {
    pub partition: Partition,
    pub label: Option<Label>,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCmd {
    /// Validity, rank, depth and PL data of one orbit.
    Info {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_orbit_arg)]
        partition: OrbitArg,
    },
    /// Closure relation between two orbits.
    Compare {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_orbit_arg, num_args = 1, required = true)]
        partition: Vec<OrbitArg>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PlCmd {
    /// PL orbits in the closure of an orbit.
    Set {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_orbit_arg)]
        partition: OrbitArg,
    },
    /// Recover an orbit from its PL set (members via --partition or --file).
    Reconstruct {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_partition)]
        partition: Vec<Partition>,
        #[arg(long, value_parser = parse_label)]
        label: Option<Label>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Triples with PL(λ) = PL(μ) ∪ PL(ν).
    Counterexamples {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum DerivCmd {
    /// B^k of a union of GL(n) orbit closures given by its maximal partitions.
    Bk {
        #[arg(long, value_parser = parse_partition, required = true)]
        partition: Vec<Partition>,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum WhittakerCmd {
    /// Superdiagonal support of ψ_λ (or ψ_α for a composition).
    Support {
        #[arg(long, value_parser = parse_partition, conflicts_with = "composition")]
        partition: Option<Partition>,
        #[arg(long, value_delimiter = ',')]
        composition: Option<Vec<u32>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PosetCmd {
    /// Closure poset of a classical group (Hasse diagram).
    Export {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// PL sets and related classes of a poset file.
    Related {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExceptionalCmd {
    /// Embedded related-orbit table, or a poset file checked against it.
    Related {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: orbitcalc_core::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: orbitcalc_core::Error| e.to_string())
}

fn parse_label(s: &str) -> Result<Label, String> {
    s.parse().map_err(|e: orbitcalc_core::Error| e.to_string())
}

fn parse_orbit_arg(s: &str) -> Result<OrbitArg, String> {
    let (p, label) = match s.split_once(':') {
        Some((p, l)) => (p, Some(parse_label(l)?)),
        None => (s, None),
    };
    Ok(OrbitArg {
        partition: parse_partition(p)?,
        label,
    })
}

/// What a command printed and how it wants to exit.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Default::default()
        }
    }
}

struct Ctx {
    format: Format,
    cap: Cap,
    threads: usize,
}

impl Ctx {
    fn emit(&self, report: Report, text: impl FnOnce() -> String) -> Result<String, CliError> {
        match self.format {
            Format::Json => Ok(report.to_json()),
            Format::Text => Ok(text()),
            other => Err(CliError::Usage(format!(
                "--format {other:?} is only supported by `poset export`"
            ))),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            for line in &out.stderr {
                eprintln!("{line}");
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let format = if cli.json {
        Format::Json
    } else {
        cli.format.unwrap_or(Format::Text)
    };
    let ctx = Ctx {
        format,
        cap: Cap(cli.cap),
        threads: cli.threads,
    };
    match &cli.command {
        Command::Orbit(OrbitCmd::Info { group, partition }) => orbit_info(&ctx, group, partition),
        Command::Orbit(OrbitCmd::Compare { group, partition }) => {
            orbit_compare(&ctx, group, partition)
        }
        Command::Pl(PlCmd::Set { group, partition }) => pl_set_cmd(&ctx, group, partition),
        Command::Pl(PlCmd::Reconstruct {
            group,
            partition,
            label,
            file,
        }) => pl_reconstruct(&ctx, group, partition, *label, file.as_deref()),
        Command::Pl(PlCmd::Counterexamples { group }) => pl_counterexamples(&ctx, group),
        Command::Deriv(DerivCmd::Bk { partition, k }) => deriv_bk(&ctx, partition, *k),
        Command::Whittaker(WhittakerCmd::Support {
            partition,
            composition,
        }) => support_cmd(&ctx, partition.as_ref(), composition.as_deref()),
        Command::Poset(PosetCmd::Export { group }) => poset_export(&ctx, group),
        Command::Poset(PosetCmd::Related { file }) => poset_related(&ctx, file),
        Command::Exceptional(ExceptionalCmd::Related { group, file }) => {
            exceptional_related(&ctx, group.as_deref(), file.as_deref())
        }
    }
}

fn orbit_string(group: GroupKind, arg: &OrbitArg) -> String {
    match arg.label {
        Some(l) => format!("{group}:{}:{l}", arg.partition),
        None => format!("{group}:{}", arg.partition),
    }
}

fn group_inputs(group: GroupKind, arg: &OrbitArg) -> Value {
    let mut v = json!({
        "group": group.to_string(),
        "partition": partition_value(&arg.partition),
    });
    if let Some(l) = arg.label {
        v["label"] = json!(l.to_string());
    }
    v
}

fn to_orbit(group: GroupKind, arg: &OrbitArg) -> Result<Orbit, CliError> {
    Ok(Orbit::new(group, arg.partition.clone(), arg.label)?)
}

fn orbit_info(ctx: &Ctx, args: &GroupArgs, arg: &OrbitArg) -> Result<Outcome, CliError> {
    let group = args.group()?;
    let lambda = &arg.partition;
    let valid = is_valid_partition(group, lambda)?;
    if valid && arg.label.is_some() {
        to_orbit(group, arg)?;
    }
    let om: Vec<u32> = odd_multiplicity_parts(lambda).into_iter().rev().collect();
    let pl = valid && is_pl(group, lambda)?;
    let very_even = is_very_even(lambda);
    let rank = group.dim() - lambda.len() as u32;
    let depth = lambda.largest();
    let report = Report::new(
        "orbit info",
        group_inputs(group, arg),
        json!({
            "valid": valid,
            "very_even": very_even,
            "rank": rank,
            "depth": depth,
            "om": om,
            "is_pl": pl,
        }),
    );
    let stdout = ctx.emit(report, || {
        let om_text = if om.is_empty() {
            "-".to_string()
        } else {
            om.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        };
        format!(
            "orbit: {}\nvalid: {valid}\nvery_even: {very_even}\nrank: {rank}\ndepth: {depth}\nom: {om_text}\nis_pl: {pl}\n",
            orbit_string(group, arg)
        )
    })?;
    let mut out = Outcome::ok(stdout);
    if !valid {
        out.code = 1;
        out.stderr.push(format!(
            "error: partition {lambda} does not label an orbit of {group}"
        ));
    }
    Ok(out)
}

fn orbit_compare(
    ctx: &Ctx,
    args: &GroupArgs,
    args_orbits: &[OrbitArg],
) -> Result<Outcome, CliError> {
    let [a, b] = args_orbits else {
        return Err(CliError::Usage(
            "orbit compare takes exactly two --partition values".to_string(),
        ));
    };
    let group = args.group()?;
    let (oa, ob) = (to_orbit(group, a)?, to_orbit(group, b)?);
    let leq = closure_leq(&oa, &ob)?;
    let geq = closure_leq(&ob, &oa)?;
    let relation = match (leq, geq) {
        (true, true) => "equal",
        (true, false) => "less",
        (false, true) => "greater",
        (false, false) => "incomparable",
    };
    let report = Report::new(
        "orbit compare",
        json!({"group": group.to_string(), "orbits": [oa.to_string(), ob.to_string()]}),
        json!({"leq": leq, "geq": geq, "relation": relation}),
    );
    Ok(Outcome::ok(
        ctx.emit(report, || format!("{oa} {relation} {ob}\n"))?,
    ))
}

fn pl_set_cmd(ctx: &Ctx, args: &GroupArgs, arg: &OrbitArg) -> Result<Outcome, CliError> {
    let group = args.group()?;
    let orbit = to_orbit(group, arg)?;
    let set = pl_set_of_orbit(&orbit, ctx.cap)?;
    let members: Vec<&Partition> = set.members().iter().rev().collect();
    let report = Report::new(
        "pl set",
        group_inputs(group, arg),
        json!({
            "count": members.len(),
            "members": partitions_value(members.iter().copied()),
        }),
    );
    Ok(Outcome::ok(ctx.emit(report, || lines(members.iter()))?))
}

fn lines<T: std::fmt::Display, I: IntoIterator<Item = T>>(items: I) -> String {
    let mut out = String::new();
    for item in items {
        writeln!(out, "{item}").unwrap();
    }
    out
}

fn read_partition_list(path: &Path) -> Result<Vec<Partition>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            line.parse()
                .map_err(|e: orbitcalc_core::Error| CliError::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })?,
        );
    }
    Ok(out)
}

fn pl_reconstruct(
    ctx: &Ctx,
    args: &GroupArgs,
    members: &[Partition],
    label: Option<Label>,
    file: Option<&Path>,
) -> Result<Outcome, CliError> {
    let group = args.group()?;
    let mut all = members.to_vec();
    if let Some(path) = file {
        all.extend(read_partition_list(path)?);
    }
    if all.is_empty() {
        return Err(CliError::Usage(
            "give the PL set with --partition or --file".to_string(),
        ));
    }
    let set = PlSet::new(group, all.iter().cloned().collect(), label);
    let orbit = reconstruct_orbit(&set)?;
    let mut inputs = json!({
        "group": group.to_string(),
        "members": partitions_value(set.members().iter().rev()),
    });
    if let Some(l) = label {
        inputs["label"] = json!(l.to_string());
    }
    let report = Report::new(
        "pl reconstruct",
        inputs,
        json!({"orbit": orbit.to_string(), "partition": partition_value(orbit.partition())}),
    );
    Ok(Outcome::ok(ctx.emit(report, || match orbit.label() {
        Some(l) => format!("{}:{l}\n", orbit.partition()),
        None => format!("{}\n", orbit.partition()),
    })?))
}

fn pl_counterexamples(ctx: &Ctx, args: &GroupArgs) -> Result<Outcome, CliError> {
    let group = args.group()?;
    let triples = find_related_unions(group, ctx.cap, ctx.threads)?;
    let rows: Vec<Value> = triples
        .iter()
        .map(|t| {
            json!({
                "lambda": partition_value(&t.top),
                "mu": partition_value(&t.left),
                "nu": partition_value(&t.right),
            })
        })
        .collect();
    let report = Report::new(
        "pl counterexamples",
        json!({"group": group.to_string()}),
        json!({"count": triples.len(), "triples": rows}),
    );
    Ok(Outcome::ok(ctx.emit(report, || {
        lines(
            triples
                .iter()
                .map(|t| format!("{} = {} + {}", t.top, t.left, t.right)),
        )
    })?))
}

fn deriv_bk(ctx: &Ctx, partitions: &[Partition], k: u32) -> Result<Outcome, CliError> {
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".to_string()));
    }
    let n = partitions[0].weight();
    let group = GroupKind::type_a(n);
    let mut orbits = Vec::with_capacity(partitions.len());
    for p in partitions {
        orbits.push(Orbit::new(group, p.clone(), None)?);
    }
    let set = OrbitSet::new(group, orbits)?;
    let image = b_k_orbit_set(&set, k)?;
    let maxima: Vec<&Partition> = image.maximal().iter().map(Orbit::partition).collect();
    let report = Report::new(
        "deriv bk",
        json!({"k": k, "partitions": partitions_value(set.maximal().iter().map(Orbit::partition))}),
        json!({
            "depth": max_depth(&set),
            "empty": maxima.is_empty(),
            "result": partitions_value(maxima.iter().copied()),
        }),
    );
    Ok(Outcome::ok(ctx.emit(report, || {
        if maxima.is_empty() {
            "empty\n".to_string()
        } else {
            lines(maxima.iter())
        }
    })?))
}

fn support_cmd(
    ctx: &Ctx,
    partition: Option<&Partition>,
    composition: Option<&[u32]>,
) -> Result<Outcome, CliError> {
    let (support, inputs): (WhittakerSupport, Value) = match (partition, composition) {
        (Some(p), None) => (
            whittaker_support(p)?,
            json!({"partition": partition_value(p)}),
        ),
        (None, Some(a)) => (composition_support(a)?, json!({"composition": a})),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --partition or --composition".to_string(),
            ))
        }
    };
    let jordan = jordan_type(&matrix_of_support(&support))?;
    let report = Report::new(
        "whittaker support",
        inputs,
        json!({
            "n": support.n(),
            "support": support.support(),
            "breaks": support.breaks(),
            "jordan_type": partition_value(&jordan),
        }),
    );
    Ok(Outcome::ok(ctx.emit(report, || format!("{support}\n"))?))
}

fn poset_json(poset: &LabeledPoset) -> Value {
    let nodes: Vec<Value> = poset
        .nodes()
        .iter()
        .map(|n| json!({"name": n.name, "special": n.special, "pl": n.pl}))
        .collect();
    let covers: Vec<Value> = poset
        .covers()
        .iter()
        .map(|&(a, b)| json!([poset.nodes()[a].name, poset.nodes()[b].name]))
        .collect();
    json!({"group": poset.name(), "nodes": nodes, "covers": covers})
}

fn poset_export(ctx: &Ctx, args: &GroupArgs) -> Result<Outcome, CliError> {
    let group = args.group()?;
    let poset = LabeledPoset::from_classical_group(group, ctx.cap)?;
    let stdout = match ctx.format {
        Format::Dot => to_dot(&poset),
        Format::Poset => write_poset(&poset),
        Format::Json => Report::new(
            "poset export",
            json!({"group": group.to_string()}),
            poset_json(&poset),
        )
        .to_json(),
        Format::Text => {
            let mut out = String::new();
            for n in poset.nodes() {
                writeln!(out, "{}{}", n.name, if n.pl { " pl" } else { "" }).unwrap();
            }
            for &(a, b) in poset.covers() {
                writeln!(out, "{} < {}", poset.nodes()[a].name, poset.nodes()[b].name).unwrap();
            }
            out
        }
    };
    Ok(Outcome::ok(stdout))
}

fn class_json(c: &RelatedClass) -> Value {
    Value::Array(
        c.orbits
            .iter()
            .map(|m| json!({"name": m.name, "special": m.special}))
            .collect(),
    )
}

fn classes_outcome(
    ctx: &Ctx,
    command: &str,
    inputs: Value,
    classes: &[RelatedClass],
    loaded: Option<&Loaded>,
) -> Result<Outcome, CliError> {
    let mut results = json!({
        "count": classes.len(),
        "classes": classes.iter().map(|c| json!({"group": c.group, "orbits": class_json(c)})).collect::<Vec<_>>(),
    });
    let warnings: Vec<String> = loaded.map(|l| l.warnings.clone()).unwrap_or_default();
    if let Some(l) = loaded {
        let pl_sets: serde_json::Map<String, Value> = l
            .poset
            .pl_sets_of()
            .into_iter()
            .map(|(k, v)| (k, json!(v)))
            .collect();
        results["pl_sets"] = Value::Object(pl_sets);
        results["warnings"] = json!(warnings);
    }
    let report = Report::new(command, inputs, results);
    let mut out = Outcome::ok(ctx.emit(report, || lines(classes.iter()))?);
    out.stderr = warnings.iter().map(|w| format!("warning: {w}")).collect();
    Ok(out)
}

fn poset_related(ctx: &Ctx, file: &Path) -> Result<Outcome, CliError> {
    let loaded = load_poset(file)?;
    let classes = loaded.poset.related_classes();
    classes_outcome(
        ctx,
        "poset related",
        json!({"file": file.display().to_string(), "group": loaded.poset.name()}),
        &classes,
        Some(&loaded),
    )
}

fn exceptional_related(
    ctx: &Ctx,
    group: Option<&str>,
    file: Option<&Path>,
) -> Result<Outcome, CliError> {
    match file {
        Some(path) => {
            let loaded = load_poset(path)?;
            if let Some(g) = group {
                if g != loaded.poset.name() {
                    return Err(CliError::Usage(format!(
                        "--group {g} does not match the file's group {}",
                        loaded.poset.name()
                    )));
                }
            }
            let classes = check_against_table(&loaded.poset)?;
            classes_outcome(
                ctx,
                "exceptional related",
                json!({"file": path.display().to_string(), "group": loaded.poset.name()}),
                &classes,
                Some(&loaded),
            )
        }
        None => {
            let classes: Vec<RelatedClass> = embedded_related_table()
                .into_iter()
                .filter(|c| group.is_none_or(|g| c.group == g))
                .collect();
            if classes.is_empty() {
                return Err(CliError::Usage(format!(
                    "unknown exceptional group {:?}; expected one of G2, F4, E6, E7, E8",
                    group.unwrap_or_default()
                )));
            }
            classes_outcome(
                ctx,
                "exceptional related",
                json!({"group": group}),
                &classes,
                None,
            )
        }
    }
}
