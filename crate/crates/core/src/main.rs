//! Command-line front end. Exit status: 0 on success, 1 when a checked property is
//! violated, 2 on usage or input errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use preclosure::convolution::conv_order;
use preclosure::extremality::hierarchy_report;
use preclosure::harness::enumerate::{
    count_moore_brute, count_posets_by_extension, count_qosets_by_partition, enum_moore, enum_posets, enum_qosets,
};
use preclosure::harness::hunt::{counterexample_search, PROPERTIES};
use preclosure::harness::laws::{law_suite, LawConfig};
use preclosure::io::{build_op, op_to_spec, parse_op_spec, parse_poset, poset_file, to_dot};
use preclosure::points::{extreme_points, point_report, Context, Order};
use preclosure::representation::{factor_divisor_lattice, has_kmp, rep1, rep2, rep3};
use preclosure::{Builtin, Dir, Error, PreclosureOp, Qoset, Subset};

#[derive(Parser)]
#[command(name = "preclosure", version, about = "Preclosure operators on finite quasi-ordered sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Up,
    Down,
}

#[derive(Clone, Copy, ValueEnum)]
enum Enrich {
    Primary,
    Equiv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Points,
    Extremality,
    Rep1,
    Rep2,
    Rep3,
    Kmp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Posets,
    Qosets,
    Moore,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse an operator on a qoset read from a JSON file.
    Analyze {
        #[arg(long)]
        poset: String,
        /// Operator as a JSON file or inline JSON; defaults to the Dedekind-MacNeille closure.
        #[arg(long)]
        op: Option<String>,
        /// Replace the operator by its upward or downward order convolution.
        #[arg(long, value_enum)]
        dir: Option<DirArg>,
        #[arg(long, value_enum, default_value = "primary")]
        enrich: Enrich,
        #[arg(long, value_enum)]
        report: Report,
        /// Subset for rep1, rep2 and kmp, as comma-separated labels or indices; defaults to the carrier.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum)]
        export: Option<Format>,
    },
    /// Run the algebraic law suite.
    Laws {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        tables: usize,
        #[arg(long, default_value_t = 200)]
        triples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count labeled posets, qosets or Moore families and compare with an independent counter.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Also print every structure, one JSON value per line.
        #[arg(long)]
        list: bool,
    },
    /// Search the enumerated posets for a counterexample.
    Hunt {
        #[arg(long, required_unless_present = "list")]
        property: Option<String>,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// List the registered properties.
        #[arg(long)]
        list: bool,
    },
    /// Factor an integer through the kit representation of its divisor lattice.
    Factor { m: u64 },
    /// Batch check of a representation: 1 and 2 over every labeled poset on 4 points and
    /// all its subsets, 3 over the divisor lattices of 2..=m-max.
    Rep {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        check: u8,
        #[arg(long, default_value_t = 2000)]
        m_max: u64,
    },
    /// Export a qoset, and optionally an operator table, as DOT or JSON.
    Export {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        op: Option<String>,
        #[arg(long, value_enum)]
        export: Format,
    },
}

/// Successful run: the text to print and whether every checked property held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Outcome {
        Outcome { text, ok }
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn load_op(arg: Option<&str>, q: &Qoset) -> Result<PreclosureOp, Error> {
    match arg {
        None => Ok(PreclosureOp::builtin(Builtin::Dm, q)),
        Some(text) if text.trim_start().starts_with('{') => build_op(&parse_op_spec(text)?, q),
        Some(path) => build_op(&parse_op_spec(&read_file(path)?)?, q),
    }
}

fn parse_subset(q: &Qoset, text: Option<&str>) -> Result<Subset, Error> {
    let Some(text) = text else { return Ok(q.full()) };
    let mut out = Subset::EMPTY;
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let idx = match q.index_of(item) {
            Some(i) => i,
            None => item
                .parse::<usize>()
                .ok()
                .filter(|&i| i < q.size())
                .ok_or_else(|| Error::Input(format!("`{item}` is neither a label nor an index")))?,
        };
        out = out.with(idx);
    }
    Ok(out)
}

fn names(q: &Qoset, s: Subset) -> String {
    let v: Vec<&str> = s.iter().map(|i| q.label(i)).collect();
    format!("{{{}}}", v.join(", "))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn analyze(
    poset: &str,
    op: Option<&str>,
    dir: Option<DirArg>,
    enrich: Enrich,
    report: Report,
    subset: Option<&str>,
    export: Option<Format>,
) -> Result<Outcome, Error> {
    let q = parse_poset(&read_file(poset)?)?;
    let mut c = load_op(op, &q)?;
    if let Some(d) = dir {
        let d = match d {
            DirArg::Up => Dir::Up,
            DirArg::Down => Dir::Down,
        };
        c = conv_order(&c, &q, d)?;
    }
    let order = match enrich {
        Enrich::Primary => Order::Primary,
        Enrich::Equiv => Order::Equivalence,
    };
    let as_json = export == Some(Format::Json);
    if export == Some(Format::Dot) {
        return Err(Error::Input("analyze exports JSON only".into()));
    }
    let s = parse_subset(&q, subset)?;
    let mut out = String::new();
    let ok = match report {
        Report::Points => {
            let ctx = Context::new(&q, &c, order)?;
            let r = point_report(&ctx, &[q.full()])?;
            if as_json {
                out = json(&r);
            } else {
                let _ = writeln!(out, "operator: {}", c.name());
                for (x, cops) in r.copoints.iter().enumerate() {
                    let list: Vec<String> = cops.iter().map(|v| names(&q, *v)).collect();
                    let _ = writeln!(out, "copoints({}): {}", q.label(x), list.join(" "));
                }
                let _ = writeln!(out, "compact: {}", names(&q, r.compact));
                let _ = writeln!(out, "extreme: {}", names(&q, r.extreme[0].1));
                let _ = writeln!(out, "kit: {}", names(&q, r.kit));
                let _ = writeln!(out, "caratheodory: {}", r.caratheodory);
                let f = &r.class_flags;
                let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |v| v.to_string());
                let _ = writeln!(
                    out,
                    "continuous: {}\nalgebraic: {}\ndistributive: {}\nkitted: {}",
                    opt(f.continuous),
                    opt(f.algebraic),
                    f.distributive,
                    f.kitted
                );
            }
            true
        }
        Report::Extremality => {
            let r = hierarchy_report(&q)?;
            if as_json {
                out = json(&r);
            } else {
                for (label, set) in [
                    ("Irr", r.irr),
                    ("rMax", r.rmax),
                    ("strIrr", r.str_irr),
                    ("cIrr", r.c_irr),
                    ("crMax", r.c_rmax),
                    ("strcIrr", r.str_c_irr),
                    ("ex(hull)", r.ex_hull),
                    ("ex(filter convolution)", r.ex_filter_convolution),
                    ("ex(ranzato down)", r.ex_ranzato),
                ] {
                    let _ = writeln!(out, "{label} = {}", names(&q, set));
                }
                let _ = writeln!(out, "riesz: {}", r.riesz);
                let _ = writeln!(out, "hierarchy: {}", if r.hierarchy_ok { "ok" } else { "VIOLATED" });
                let _ = writeln!(out, "characterisations: {}", if r.characterisations_ok { "ok" } else { "VIOLATED" });
            }
            r.hierarchy_ok && r.characterisations_ok
        }
        Report::Rep1 | Report::Rep2 => {
            let v = if report == Report::Rep1 { rep1(&q, s)? } else { rep2(&q, s)? };
            if as_json {
                out = json(&v);
            } else {
                let _ = writeln!(out, "S = {}", names(&q, s));
                let _ = writeln!(out, "generators = {}", names(&q, v.generators));
                for w in &v.witnesses {
                    let _ = writeln!(
                        out,
                        "  {}: inf of {} {}",
                        q.label(w.element),
                        names(&q, w.generators),
                        if w.holds { "ok" } else { "FAILS" }
                    );
                }
                let _ = writeln!(out, "holds: {}", v.holds);
                let _ = writeln!(out, "induced qoset: generators {} holds {}", names(&q, v.induced_generators), v.induced_holds);
            }
            v.holds
        }
        Report::Rep3 => {
            let ctx = Context::new(&q, &c, order)?;
            let r = rep3(&ctx)?;
            if as_json {
                out = json(&r);
            } else {
                let _ = writeln!(out, "kit = {}", names(&q, r.kit_set));
                let _ = writeln!(out, "compact = {}", names(&q, r.compact));
                for (x, y) in &r.antichains {
                    let _ = writeln!(out, "  {}: {}", q.label(*x), names(&q, *y));
                }
                let _ = writeln!(
                    out,
                    "kit closed: {}\nkit KMp: {}\nantichains: {}\nunique: {}",
                    r.kit_closed, r.kmp_holds, r.antichains_ok, r.uniqueness_ok
                );
            }
            r.all_ok()
        }
        Report::Kmp => {
            let ctx = Context::new(&q, &c, order)?;
            let ex = extreme_points(&ctx, s);
            let holds = has_kmp(&ctx, s);
            if as_json {
                #[derive(Serialize)]
                struct Kmp {
                    k: Subset,
                    extreme: Subset,
                    holds: bool,
                }
                out = json(&Kmp { k: s, extreme: ex, holds });
            } else {
                let _ = writeln!(out, "K = {}\nex K = {}\nKMp: {holds}", names(&q, s), names(&q, ex));
            }
            true
        }
    };
    Ok(Outcome::new(out, ok))
}

fn laws(n: usize, seed: u64, tables: usize, triples: usize, as_json: bool) -> Result<Outcome, Error> {
    let config = LawConfig { n, seed, random_tables: tables, triples, ..LawConfig::default() };
    let reports = law_suite(&config)?;
    let ok = reports.iter().all(|r| r.ok());
    let mut out = String::new();
    if as_json {
        out = json(&reports);
    } else {
        for r in &reports {
            let _ = writeln!(out, "{:<34} {:>9} instances  {} violations", r.law, r.instances, r.violations);
            if let Some(w) = &r.first_counterexample {
                let _ = writeln!(out, "    first: {w}");
            }
        }
        let total: u64 = reports.iter().map(|r| r.violations).sum();
        let _ = writeln!(out, "{} laws, {total} violations", reports.len());
    }
    Ok(Outcome::new(out, ok))
}

fn enumerate(kind: KindArg, n: usize, list: bool) -> Result<Outcome, Error> {
    let mut out = String::new();
    let (count, oracle) = match kind {
        KindArg::Posets | KindArg::Qosets => {
            let (items, oracle) = match kind {
                KindArg::Posets => (enum_posets(n)?, count_posets_by_extension(n)),
                _ => (enum_qosets(n)?, count_qosets_by_partition(n)),
            };
            if list {
                for q in &items {
                    let _ = writeln!(out, "{}", serde_json::to_string(&poset_file(q)).expect("plain data"));
                }
            }
            (items.len() as u64, oracle)
        }
        KindArg::Moore => {
            let items = enum_moore(n)?;
            if list {
                for fam in &items {
                    let sets: Vec<Vec<usize>> = fam.iter().map(|s| s.to_vec()).collect();
                    let _ = writeln!(out, "{}", serde_json::to_string(&sets).expect("plain data"));
                }
            }
            (items.len() as u64, count_moore_brute(n))
        }
    };
    let _ = writeln!(out, "count: {count}\nindependent count: {oracle}");
    Ok(Outcome::new(out, count == oracle))
}

fn hunt(property: Option<&str>, n_max: usize, list: bool) -> Result<Outcome, Error> {
    let mut out = String::new();
    if list {
        for p in PROPERTIES {
            let _ = writeln!(out, "{:<50} {}", p.name, p.description);
        }
        return Ok(Outcome::new(out, true));
    }
    let name = property.expect("clap requires --property without --list");
    let r = counterexample_search(name, n_max)?;
    match &r.witness {
        Some(w) => {
            let pairs: Vec<String> = w.leq_pairs.iter().map(|(a, b)| format!("{a}<{b}")).collect();
            let _ = writeln!(
                out,
                "witness: n = {}, poset #{} [{}], elements {}",
                w.n,
                w.index,
                pairs.join(", "),
                w.elements
            );
        }
        None => {
            let _ = writeln!(out, "none up to n = {n_max}");
        }
    }
    let _ = writeln!(out, "posets scanned: {}", r.posets_scanned);
    Ok(Outcome::new(out, true))
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

fn factor(m: u64) -> Result<Outcome, Error> {
    let f = factor_divisor_lattice(m)?;
    let mut out = String::new();
    let _ = writeln!(out, "{m} = sup{{{}}}", join(&f.top));
    let width = f.divisors.last().map_or(1, |d| d.to_string().len()).max(7);
    let _ = writeln!(out, "{:>width$}  antichain", "divisor");
    for (d, y) in &f.antichains {
        let _ = writeln!(out, "{d:>width$}  {{{}}}", join(y));
    }
    let ok = f.matches_trial_division && f.result.all_ok() && f.result.kit_set.len() == f.divisors.len();
    Ok(Outcome::new(out, ok))
}

fn rep_batch(check: u8, m_max: u64) -> Result<Outcome, Error> {
    let mut out = String::new();
    let (mut cases, mut failures) = (0u64, 0u64);
    if check == 3 {
        for m in 2..=m_max {
            if preclosure::divisors_of(m).len() > preclosure::representation::DIVISOR_CAP {
                continue;
            }
            cases += 1;
            let f = factor_divisor_lattice(m)?;
            if !(f.matches_trial_division && f.result.all_ok()) {
                failures += 1;
                let _ = writeln!(out, "FAIL m = {m}");
            }
        }
    } else {
        for (idx, q) in enum_posets(4)?.iter().enumerate() {
            for s in Subset::all(4) {
                cases += 1;
                let v = if check == 1 { rep1(q, s)? } else { rep2(q, s)? };
                if !v.holds {
                    failures += 1;
                    let _ = writeln!(out, "FAIL poset #{idx}, S = {s}");
                }
            }
        }
    }
    let _ = writeln!(out, "cases: {cases}\nfailures: {failures}");
    Ok(Outcome::new(out, failures == 0))
}

fn export(poset: &str, op: Option<&str>, format: Format) -> Result<Outcome, Error> {
    let q = parse_poset(&read_file(poset)?)?;
    let text = match format {
        Format::Dot => to_dot(&q),
        Format::Json => {
            #[derive(Serialize)]
            struct Export {
                #[serde(flatten)]
                poset: preclosure::io::PosetFile,
                #[serde(skip_serializing_if = "Option::is_none")]
                op: Option<preclosure::io::OpSpec>,
            }
            let op = match op {
                Some(_) => Some(op_to_spec(&load_op(op, &q)?)?),
                None => None,
            };
            json(&Export { poset: poset_file(&q), op })
        }
    };
    Ok(Outcome::new(text, true))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Analyze { poset, op, dir, enrich, report, subset, export } => {
            analyze(&poset, op.as_deref(), dir, enrich, report, subset.as_deref(), export)
        }
        Command::Laws { n, seed, tables, triples, json } => laws(n, seed, tables, triples, json),
        Command::Enumerate { kind, n, list } => enumerate(kind, n, list),
        Command::Hunt { property, n_max, list } => hunt(property.as_deref(), n_max, list),
        Command::Factor { m } => factor(m),
        Command::Rep { check, m_max } => rep_batch(check, m_max),
        Command::Export { poset, op, export: format } => export(&poset, op.as_deref(), format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
