//! Command-line front end. Human summaries go to stdout; machine output
//! (JSON certificates, line sets, CSV) goes to the `--out` file.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{self, SearchConfig};
use crate::cliques::{self, GraphFilter};
use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::kakeya::{self, KakeyaLineSet, LineSetJson};
use crate::projective::ProjectiveSpace;
use crate::quadrics::{standard_quadric, Conic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kakeya", about = "Kakeya line sets in the linear representation of a conic in PG(3,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct FieldArgs {
    /// Field order (prime or prime power).
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    deg: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> Result<GaloisField> {
        let f = match (self.q, self.p, self.deg) {
            (Some(q), None, None) => GaloisField::of_order(q)?,
            (q, Some(p), deg) => {
                let f = GaloisField::new(p, deg.unwrap_or(1))?;
                if q.is_some_and(|q| q != f.q()) {
                    return Err(Error::Precondition(format!("--q {} does not equal p^deg = {}", q.unwrap(), f.q())));
                }
                f
            }
            _ => return Err(Error::Precondition("give --q, or --p with optional --deg".into())),
        };
        Ok(f)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ConstructVariant {
    RegulusSplit,
    Secant,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Filter {
    EdgeDisjoint,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a line set from one of the two constructions.
    Construct {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        variant: ConstructVariant,
        /// Index into the list of admissible secants (secant variant only).
        #[arg(long, default_value_t = 0)]
        secant_index: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all line sets for a small q and write the census.
    Classify {
        #[arg(long)]
        q: u32,
        /// Only enumerate sets smaller than this.
        #[arg(long)]
        threshold: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Restrict the first line to one translation orbit.
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the classification results and the graph lemmas.
    Verify {
        #[arg(long)]
        q: u32,
        /// Run the graph oracles for every n from 2 to 7.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census of graphs on n vertices.
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recognize a line set stored as JSON.
    Recognize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the field's modulus and arithmetic tables.
    FieldTable {
        #[command(flatten)]
        field: FieldArgs,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Construct {
            field,
            k,
            variant,
            secant_index,
            out: path,
        } => construct(field.field()?, k, variant, secant_index, path.as_deref(), out),
        Command::Classify {
            q,
            threshold,
            workers,
            symmetry,
            out: path,
        } => {
            let mut cfg = SearchConfig::new(q).with_workers(workers);
            cfg.threshold = threshold;
            cfg.symmetry_reduction = symmetry;
            classify_cmd(&cfg, path.as_deref(), out)
        }
        Command::Verify { q, all, workers, out: path } => verify(q, all, workers, path.as_deref(), out),
        Command::Graphs { n, filter, out: path } => graphs(n, filter, path.as_deref(), out),
        Command::Recognize { input, out: path } => recognize_cmd(&input, path.as_deref(), out),
        Command::FieldTable { field } => field_table(&field.field()?, out),
    }
}

fn construct(
    f: GaloisField,
    k: usize,
    variant: ConstructVariant,
    secant_index: usize,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let q = f.q();
    let space = ProjectiveSpace::new(f.clone());
    let conic = Conic::standard(&f);
    let quadric = standard_quadric(&space);
    let (l, predicted) = match variant {
        ConstructVariant::RegulusSplit => (
            kakeya::construct_regulus_split(&f, &conic, k, &quadric)?,
            kakeya::regulus_split_size(q, k as u32),
        ),
        ConstructVariant::Secant => {
            let choices = kakeya::enumerate_secant_choices(&space, &conic, k, &quadric)?;
            let c = choices.get(secant_index).ok_or_else(|| {
                Error::Precondition(format!("secant index {secant_index} out of range ({} choices)", choices.len()))
            })?;
            writeln!(out, "secant {} of {}: {}", secant_index, choices.len(), c.detail.name())?;
            (
                kakeya::construct_secant_variant(&space, &conic, k, &quadric, &c.line)?,
                kakeya::secant_variant_size(q, k as u32),
            )
        }
    };
    let size = kakeya::kakeya_points(&l).size();
    writeln!(out, "q = {q}, k = {k}: size {size}, predicted {predicted}")?;
    if let Some(p) = path {
        write_json(p, &l.to_json())?;
    }
    Ok(if size as u64 == predicted { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn classify_cmd(cfg: &SearchConfig, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let r = classify::enumerate_all(cfg)?;
    writeln!(
        out,
        "q = {}: {} line sets, minimum size {}, {} search nodes, {} ms",
        r.q,
        r.sets_enumerated,
        r.min_size.map_or("-".into(), |m| m.to_string()),
        r.prune_nodes,
        r.wall_time_ms
    )?;
    for (size, count) in &r.size_histogram {
        writeln!(out, "  size {size}: {count}")?;
    }
    writeln!(out, "unexplained below the theorem bound: {}", r.unexplained_count)?;
    if let Some(p) = path {
        write_json(p, &r)?;
    }
    let bad = r.non_split_below_bound_count > 0 || r.identity_violations > 0;
    Ok(if bad { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}

#[derive(Serialize)]
struct OracleBundle {
    mantel: cliques::MantelReport,
    hanson_toft: cliques::HansonToftReport,
    main_lemma: cliques::MainLemmaReport,
}

fn verify(q: u32, all: bool, workers: usize, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let report = classify::verification_run(q, workers)?;
    let theorem = classify::verify_theorem(&report);
    let mut ok = theorem.verified;
    writeln!(
        out,
        "q = {q}: {} sets, minimum size {:?}; {} ({}) with threshold {}: {} below, {} counterexamples [{}]",
        theorem.sets_enumerated,
        theorem.min_size,
        theorem.theorem,
        theorem.status,
        theorem.threshold_value,
        theorem.below_threshold,
        theorem.counterexample_count,
        if theorem.verified { "ok" } else { "FAILED" }
    )?;
    for (k, c) in &theorem.per_k {
        writeln!(out, "  regulus split {k}: {c}")?;
    }
    let mut bundle = json!({ "q": q, "theorem": theorem });
    if q <= classify::MAX_FULL_Q {
        let remark = classify::verify_remark_census(&report)?;
        writeln!(out, "census check: {}", if remark.verified { "ok" } else { "FAILED" })?;
        for m in &remark.mismatches {
            writeln!(out, "  {m}")?;
        }
        ok &= remark.verified;
        let pent = classify::verify_pentagon_excluded(&report)?;
        writeln!(
            out,
            "pentagon graph: {} occurrences{}",
            pent.pentagon_count,
            if pent.vacuous { " (vacuous)" } else { "" }
        )?;
        ok &= pent.verified;
        bundle["remark"] = serde_json::to_value(remark)?;
        bundle["pentagon"] = serde_json::to_value(pent)?;
    }
    let ns: Vec<usize> = if all {
        (2..=cliques::MAX_ORACLE_VERTICES).collect()
    } else if (q as usize) < cliques::MAX_ORACLE_VERTICES {
        vec![q as usize + 1]
    } else {
        Vec::new()
    };
    let mut oracles = BTreeMap::new();
    for n in ns {
        let b = OracleBundle {
            mantel: cliques::mantel_oracle(n)?,
            hanson_toft: cliques::hanson_toft_oracle(n)?,
            main_lemma: cliques::main_lemma_oracle(n)?,
        };
        let v = b.mantel.violations + b.hanson_toft.violations + b.main_lemma.violations;
        writeln!(out, "graph oracles n = {n}: {v} violations")?;
        ok &= v == 0;
        oracles.insert(n.to_string(), serde_json::to_value(b)?);
    }
    bundle["oracles"] = Value::Object(oracles.into_iter().collect());
    if let Some(p) = path {
        write_json(p, &bundle)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn graphs(n: usize, filter: Option<Filter>, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let f = match filter {
        Some(Filter::EdgeDisjoint) => GraphFilter::EdgeDisjointCliques,
        None => GraphFilter::All,
    };
    let gs = cliques::enumerate_graphs(n, f)?;
    writeln!(out, "{} graphs on {n} vertices", gs.len())?;
    let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &gs {
        *dist.entry(g.c_value()).or_default() += 1;
    }
    for (c, count) in &dist {
        writeln!(out, "  C = {c}: {count}")?;
    }
    if let Some(p) = path {
        std::fs::write(p, cliques::census_csv(&gs)?)?;
    }
    Ok(EXIT_OK)
}

fn recognize_cmd(input: &Path, path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(input)?;
    let j: LineSetJson = serde_json::from_str(&text)?;
    let l = KakeyaLineSet::from_json(&j)?;
    let space = ProjectiveSpace::new(l.field().clone());
    let label = kakeya::recognize(&space, &l);
    let size = kakeya::kakeya_points(&l).size();
    writeln!(out, "size {size}: {}", serde_json::to_string(&label.to_json())?)?;
    if let Some(p) = path {
        write_json(p, &label.to_json())?;
    }
    Ok(EXIT_OK)
}

fn field_table(f: &GaloisField, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "GF({}) = GF({}^{})", f.q(), f.p(), f.deg())?;
    writeln!(out, "modulus (constant term first): {:?}", f.modulus())?;
    writeln!(out, "primitive element: {}", f.primitive_element())?;
    if f.q() > 16 {
        writeln!(out, "tables omitted for q > 16")?;
        return Ok(EXIT_OK);
    }
    let w = f.q().to_string().len().max(2);
    for (name, op) in [("+", 0), ("*", 1)] {
        write!(out, "{name:>w$} |")?;
        for b in f.elements() {
            write!(out, " {:>w$}", b.code())?;
        }
        writeln!(out)?;
        for a in f.elements() {
            write!(out, "{:>w$} |", a.code())?;
            for b in f.elements() {
                let c = if op == 0 { f.add(a, b) } else { f.mul(a, b) };
                write!(out, " {:>w$}", c.code())?;
            }
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}
