use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootposet::export::{self, json, table};
use rootposet::glorious;
use rootposet::ideals::{enumerate_ideals, Budget};
use rootposet::rootlets::i_min;
use rootposet::verify::{self, Options};
use rootposet::{Error, RootSet, RootSystem, RootSystemSpec, RootletIndex};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "rootposet", version, about = "Root posets, abelian ideals and glorious pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic data: rank, θ, θ̆, θ̃, h*, long and short simple roots.
    Info(Target),
    /// Positive roots in canonical order.
    Roots(Target),
    /// Hasse diagram of the root poset.
    Hasse {
        #[command(flatten)]
        target: Target,
        /// `interval` or `imin-N` (the ideal I(α_N)_min).
        #[arg(long)]
        highlight: Option<String>,
    },
    /// All ideals of the root poset.
    Ideals(Target),
    /// Abelian ideals with their minuscule words.
    Abelian(Target),
    /// Rootlet fibers with I(μ)_min and I(μ)_max.
    Rootlets(Target),
    /// Glorious pairs with their edges.
    Glorious(Target),
    /// The semi-glorious pair of a non-simply-laced system.
    Semiglorious(Target),
    /// The interval between θ̆ and θ̃ with classes.
    Interval(Target),
    /// Tails and odd roots of a D or E system.
    Tails(Target),
    /// Transition roots of incident long edges.
    Transitions(Target),
    /// Minimal non-abelian ideals with canonical words.
    MinimalNonabelian(Target),
    /// Run the verification suite.
    Verify(Target),
    /// Every artifact as one JSON document.
    Export(Target),
}

#[derive(Args, Clone)]
struct Target {
    /// Root system such as `E6`, or `all` for the sweep.
    #[arg(long = "type", value_parser = parse_type)]
    system: Option<TypeSel>,
    /// Sweep every type up to `--max-rank` plus the exceptional ones.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 8)]
    max_rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the randomized order checks.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy)]
enum TypeSel {
    One(RootSystemSpec),
    All,
}

fn parse_type(s: &str) -> Result<TypeSel, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(TypeSel::All);
    }
    s.parse::<RootSystemSpec>().map(TypeSel::One).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

/// Failure modes of a subcommand, mapped to exit codes.
enum Failure {
    Usage(String),
    Verification,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::BudgetExceeded(_) => Failure::Runtime(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome<T = ()> = Result<T, Failure>;

impl Target {
    fn specs(&self) -> Outcome<Vec<RootSystemSpec>> {
        match (self.system, self.all) {
            (Some(TypeSel::All), _) | (None, true) => Ok(verify::sweep(self.max_rank)),
            (Some(TypeSel::One(s)), false) => Ok(vec![s]),
            (Some(TypeSel::One(_)), true) => {
                Err(Failure::Usage("--type and --all are mutually exclusive".into()))
            }
            (None, false) => Err(Failure::Usage("one of --type or --all is required".into())),
        }
    }

    fn sweeping(&self) -> bool {
        self.all || matches!(self.system, Some(TypeSel::All))
    }

    fn emit(&self, text: &str) -> Outcome {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn require(&self, allowed: &[Format]) -> Outcome {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(Failure::Usage("this subcommand does not support the requested --format".into()))
        }
    }
}

/// Renders one system as a table and as a JSON value.
type Render = dyn Fn(&RootSystem) -> rootposet::Result<(String, Value)>;

/// Whether the subcommand applies to this system at all; inapplicable
/// systems are skipped in a sweep and rejected otherwise.
fn applicable(err: &Error) -> bool {
    !matches!(err, Error::TypeA | Error::SimplyLaced | Error::NotDEType)
}

fn per_system(t: &Target, kind: &str, render: &Render) -> Outcome {
    t.require(&[Format::Table, Format::Json])?;
    let mut text = String::new();
    let mut docs = Vec::new();
    for spec in t.specs()? {
        let rs = RootSystem::build(spec)?;
        match render(&rs) {
            Ok((tab, val)) => {
                if t.sweeping() {
                    text.push_str(&format!("== {spec} ==\n"));
                }
                text.push_str(&tab);
                docs.push(json::document(&rs, kind, val));
            }
            Err(e) if t.sweeping() && !applicable(&e) => {}
            Err(e) => return Err(e.into()),
        }
    }
    match t.format {
        Format::Json if docs.len() == 1 && !t.sweeping() => t.emit(&docs[0]),
        Format::Json => {
            let values: Vec<Value> =
                docs.iter().map(|d| serde_json::from_str(d).expect("own output parses")).collect();
            t.emit(&(serde_json::to_string_pretty(&values).expect("serialisable") + "\n"))
        }
        _ => t.emit(&text),
    }
}

fn hasse(t: &Target, highlight: Option<&str>) -> Outcome {
    let specs = t.specs()?;
    let [spec] = specs.as_slice() else {
        return Err(Failure::Usage("hasse needs a single --type".into()));
    };
    let rs = RootSystem::build(*spec)?;
    let set = match highlight {
        None => None,
        Some("interval") => {
            let iv = glorious::interval(&rs)?;
            Some(RootSet::from_indices(
                rs.num_positive(),
                iv.members.iter().filter_map(|r| rs.index_of(r)),
            ))
        }
        Some(h) => {
            let k = h
                .strip_prefix("imin-")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| (1..=rs.rank()).contains(&n))
                .ok_or_else(|| Failure::Usage(format!("bad --highlight `{h}`")))?;
            Some(i_min(&rs, &rs.simple(k - 1))?.members().clone())
        }
    };
    match t.format {
        Format::Dot => t.emit(&export::export_hasse_dot(&rs, set.as_ref())),
        Format::Json => t.emit(&json::document(&rs, "hasse", json::hasse(&rs))),
        Format::Table => {
            let rows: Vec<Vec<String>> = (0..rs.num_positive())
                .flat_map(|k| {
                    let rs = &rs;
                    rs.upper_covers(k)
                        .into_iter()
                        .map(move |u| vec![rs.root(k).to_string(), rs.root(u).to_string()])
                })
                .collect();
            t.emit(&table::render(&["lower", "upper"], &rows))
        }
    }
}

fn run_verify(t: &Target) -> Outcome {
    t.require(&[Format::Table, Format::Json])?;
    let specs = t.specs()?;
    let mut opts = Options::default();
    if let Some(seed) = t.seed {
        opts.seed = seed;
    }
    let report = verify::verify_all(&specs, &opts);
    let text = match t.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serialisable") + "\n",
        _ => report.to_text(),
    };
    t.emit(&text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_export(t: &Target) -> Outcome {
    // The export is always JSON; `--format dot` has no meaning here.
    if t.format == Format::Dot {
        return Err(Failure::Usage("export writes JSON".into()));
    }
    let mut systems = Vec::new();
    for spec in t.specs()? {
        let rs = RootSystem::build(spec)?;
        let index = RootletIndex::build(&rs)?;
        systems.push(json!({ "type": spec.to_string(), "data": json::everything(&rs, &index)? }));
    }
    let doc = json!({ "schema": json::SCHEMA, "kind": "export", "systems": systems });
    t.emit(&(serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"))
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Info(t) => per_system(&t, "info", &|rs| Ok((table::info_table(rs), json::info(rs)))),
        Command::Roots(t) => per_system(&t, "roots", &|rs| Ok((table::roots_table(rs), json::roots(rs)))),
        Command::Hasse { target, highlight } => hasse(&target, highlight.as_deref()),
        Command::Ideals(t) => per_system(&t, "ideals", &|rs| {
            let all = enumerate_ideals(rs, Budget::default())?;
            Ok((table::ideals_table(rs, &all), json::ideals(rs, &all)))
        }),
        Command::Abelian(t) => per_system(&t, "abelian", &|rs| {
            let index = RootletIndex::build(rs)?;
            Ok((table::abelian_table(rs, &index), json::abelian(rs, &index)))
        }),
        Command::Rootlets(t) => per_system(&t, "rootlets", &|rs| {
            let index = RootletIndex::build(rs)?;
            Ok((table::rootlets_table(rs, &index), json::rootlets(rs, &index)))
        }),
        Command::Glorious(t) => {
            per_system(&t, "glorious", &|rs| Ok((table::glorious_table(rs)?, json::glorious(rs)?)))
        }
        Command::Semiglorious(t) => per_system(&t, "semiglorious", &|rs| {
            Ok((table::semi_table(std::slice::from_ref(rs))?, json::semiglorious(rs)?))
        }),
        Command::Interval(t) => {
            per_system(&t, "interval", &|rs| Ok((table::interval_table(rs)?, json::interval_doc(rs)?)))
        }
        Command::Tails(t) => per_system(&t, "tails", &|rs| {
            Ok((table::tails_table(std::slice::from_ref(rs))?, json::tails(rs)?))
        }),
        Command::Transitions(t) => per_system(&t, "transitions", &|rs| {
            Ok((table::transitions_table(rs)?, json::transitions(rs)?))
        }),
        Command::MinimalNonabelian(t) => per_system(&t, "minimal-nonabelian", &|rs| {
            Ok((table::minimal_table(rs)?, json::minimal(rs)?))
        }),
        Command::Verify(t) => run_verify(&t),
        Command::Export(t) => run_export(&t),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
