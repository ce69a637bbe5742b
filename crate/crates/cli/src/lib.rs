//! Command-line surface for enumeration, verification, the brute-force
//! oracle, realization and catalog export.
//!
//! [`run`] does all the work and returns the text it would print, so the
//! binary is a thin wrapper and tests can call it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use semiregular::catalog::{self, family_counts, CatalogEntry, CatalogRecord};
use semiregular::enumeration::{
    oracle_enumerate, oracle_report, Classification, MIN_DIFF_DEGREE, MIN_SWEEP_DEGREE,
};
use semiregular::realization::{
    analyze, realize, realize_solid, MapDocument, MapReport, RealizeError, MIN_FAMILY_SIDES,
};
use semiregular::{counts, full_catalog, CountData, Solid, VertexFigure};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Default largest family member checked by `verify`.
pub const DEFAULT_MAX_N: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutcome {
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        Self {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {stderr}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "semiregular",
    version,
    about = "Enumerate, verify and realize the semiregular polyhedra"
)]
struct Cli {
    /// Print the accepted solid names (kebab-case token, then display name).
    #[arg(long, global = true)]
    list_names: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableOrJson {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CatalogFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Prism,
    Antiprism,
}

impl Family {
    fn solid(self) -> Solid {
        match self {
            Family::Prism => Solid::Prism,
            Family::Antiprism => Solid::Antiprism,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapFormat {
    Faces,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the case analysis and print the classified figures.
    Enumerate {
        /// Restrict to one valence.
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=5))]
        r: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: TableOrJson,
    },
    /// Cross-check enumeration, reference data and realized maps.
    #[command(group(ArgGroup::new("target").required(true).args(["all", "entry", "family"])))]
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "NAME")]
        entry: Option<String>,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Largest family member to check.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
    },
    /// Brute-force sweep of arithmetically feasible figures.
    Oracle {
        /// Largest face degree in the sweep.
        #[arg(long)]
        max_p: u32,
        /// Compare the sweep with the classification.
        #[arg(long)]
        diff: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: TableOrJson,
    },
    /// Build a solid as a map and export it.
    Realize {
        /// Solid name or kebab-case token.
        #[arg(conflicts_with = "family")]
        name: Option<String>,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Family parameter.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "faces")]
        out: MapFormat,
        /// Write the export here and print the summary instead.
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Print the embedded reference tables.
    Catalog {
        #[arg(long, value_enum, default_value = "table")]
        format: CatalogFormat,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                CommandOutcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutcome::ok(text)
            };
        }
    };
    if cli.list_names {
        return CommandOutcome::ok(list_names());
    }
    match cli.command {
        None => CommandOutcome::usage("no command given; try --help"),
        Some(Command::Enumerate { r, format }) => cmd_enumerate(r, format),
        Some(Command::Verify {
            all,
            entry,
            family,
            max_n,
        }) => cmd_verify(all, entry, family, max_n),
        Some(Command::Oracle { max_p, diff, format }) => cmd_oracle(max_p, diff, format),
        Some(Command::Realize {
            name,
            family,
            n,
            out,
            path,
        }) => cmd_realize(name, family, n, out, path),
        Some(Command::Catalog { format }) => cmd_catalog(format),
    }
}

fn list_names() -> String {
    Solid::ALL
        .iter()
        .map(|s| format!("{}\t{}\n", s.slug(), s.name()))
        .collect()
}

fn classifications() -> Result<Vec<Classification>, CommandOutcome> {
    full_catalog().map_err(|e| CommandOutcome {
        exit_code: EXIT_FAILURE,
        stdout: String::new(),
        stderr: format!("error: enumeration failed: {e}\n"),
    })
}

fn cmd_enumerate(r: Option<u32>, format: TableOrJson) -> CommandOutcome {
    let items = match classifications() {
        Ok(items) => items,
        Err(outcome) => return outcome,
    };
    let records: Vec<CatalogRecord> = items
        .iter()
        .filter(|c| r.is_none_or(|r| c.pattern.valence() == r as usize))
        .map(CatalogRecord::from_classification)
        .collect();
    CommandOutcome::ok(match format {
        TableOrJson::Table => catalog::to_table(&records),
        TableOrJson::Json => catalog::to_json(&records) + "\n",
    })
}

fn cmd_catalog(format: CatalogFormat) -> CommandOutcome {
    let records: Vec<CatalogRecord> = catalog::reference_catalog()
        .iter()
        .map(CatalogRecord::from_entry)
        .collect();
    CommandOutcome::ok(match format {
        CatalogFormat::Table => catalog::to_table(&records),
        CatalogFormat::Json => catalog::to_json(&records) + "\n",
        CatalogFormat::Csv => catalog::to_csv(&records),
    })
}

fn same_counts(a: &CountData, b: &CountData) -> bool {
    (a.vertices, a.edges, a.faces, &a.face_counts) == (b.vertices, b.edges, b.faces, &b.face_counts)
}

fn describe_counts(c: &CountData) -> String {
    let faces: Vec<String> = c.face_counts.iter().map(|(p, n)| format!("F{p}={n}")).collect();
    format!("V={} E={} F={} {}", c.vertices, c.edges, c.faces, faces.join(" "))
}

/// Failures of a realized map against the expected figure and counts.
fn check_map(report: &MapReport, figure: &VertexFigure, expected: &CountData, problems: &mut Vec<String>) {
    if !same_counts(&report.counts, expected) {
        problems.push(format!("realized {}", describe_counts(&report.counts)));
    }
    if report.figure() != Some(figure) {
        problems.push("realized map is not uniform with the expected figure".into());
    }
    if !report.euler {
        problems.push(format!(
            "euler characteristic {}",
            report.counts.euler_characteristic()
        ));
    }
    if !report.balanced {
        problems.push("face/valence balance fails".into());
    }
}

fn verify_sporadic(entry: &CatalogEntry, classified: &[Classification]) -> (bool, String) {
    let figure = entry.figure.as_ref().expect("sporadic entry");
    let expected = entry.counts.as_ref().expect("sporadic entry");
    let mut problems = Vec::new();

    match classified.iter().find(|c| c.solid == entry.solid) {
        None => problems.push("not produced by the enumeration".into()),
        Some(c) => {
            if c.figure() != Some(figure) {
                problems.push(format!("enumerated figure differs from {figure}"));
            }
            if c.proof_cases != entry.proof_cases {
                problems.push("proof case differs".into());
            }
        }
    }
    match counts(figure) {
        Ok(c) if same_counts(&c, expected) => {}
        Ok(c) => problems.push(format!("derived {}", describe_counts(&c))),
        Err(e) => problems.push(format!("figure infeasible: {e}")),
    }
    match realize_solid(entry.solid, None) {
        Ok(map) => check_map(&analyze(&map), figure, expected, &mut problems),
        Err(e) => problems.push(format!("realization failed: {e}")),
    }

    let cases: Vec<&str> = entry.proof_cases.iter().map(|c| c.as_str()).collect();
    let head = format!(
        "{} {} figure={} proof_case={}",
        entry.solid.slug(),
        describe_counts(expected),
        entry.symbol,
        cases.join(";")
    );
    report_line(head, problems)
}

fn verify_member(entry: &CatalogEntry, n: u32, classified: &[Classification]) -> (bool, String) {
    let figure = entry.instance(n).expect("family symbols parse");
    let expected = family_counts(entry.solid, n).expect("family entry");
    let mut problems = Vec::new();

    if !classified.iter().any(|c| c.pattern.matches(&figure)) {
        problems.push(format!("{figure} not produced by the enumeration"));
    }
    match counts(&figure) {
        Ok(c) if same_counts(&c, &expected) => {}
        Ok(c) => problems.push(format!("derived {}", describe_counts(&c))),
        Err(e) => problems.push(format!("figure infeasible: {e}")),
    }
    match realize_solid(entry.solid, Some(n)) {
        Ok(map) => check_map(&analyze(&map), &figure, &expected, &mut problems),
        Err(e) => problems.push(format!("realization failed: {e}")),
    }
    let head = format!(
        "{}({n}) {} figure={figure}",
        entry.solid.slug(),
        describe_counts(&expected)
    );
    report_line(head, problems)
}

fn report_line(head: String, problems: Vec<String>) -> (bool, String) {
    if problems.is_empty() {
        (true, format!("PASS {head} matched\n"))
    } else {
        (false, format!("FAIL {head}: {}\n", problems.join("; ")))
    }
}

fn cmd_verify(all: bool, entry: Option<String>, family: Option<Family>, max_n: u32) -> CommandOutcome {
    let reference = catalog::reference_catalog();
    let find = |solid: Solid| {
        reference
            .iter()
            .find(|e| e.solid == solid)
            .expect("every solid has an entry")
    };

    let mut sporadic: Vec<&CatalogEntry> = Vec::new();
    let mut families: Vec<&CatalogEntry> = Vec::new();
    if all {
        sporadic.extend(reference.iter().filter(|e| !e.solid.is_family()));
        families.extend(reference.iter().filter(|e| e.solid.is_family()));
    } else if let Some(name) = entry {
        let Ok(solid) = name.parse::<Solid>() else {
            return CommandOutcome::usage(format!("unknown entry `{name}`; see --list-names"));
        };
        if solid.is_family() {
            families.push(find(solid));
        } else {
            sporadic.push(find(solid));
        }
    } else if let Some(family) = family {
        families.push(find(family.solid()));
    }
    if !families.is_empty() && max_n < MIN_FAMILY_SIDES {
        return CommandOutcome::usage(format!("--max-n must be at least {MIN_FAMILY_SIDES}"));
    }

    let classified = match classifications() {
        Ok(items) => items,
        Err(outcome) => return outcome,
    };
    let mut out = String::new();
    let (mut passed, mut failed) = (0, 0);
    let mut tally = |(ok, line): (bool, String)| {
        out.push_str(&line);
        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
    };
    for e in sporadic {
        tally(verify_sporadic(e, &classified));
    }
    for e in families {
        for n in MIN_FAMILY_SIDES..=max_n {
            tally(verify_member(e, n, &classified));
        }
    }
    let _ = writeln!(out, "{passed} passed, {failed} failed");
    CommandOutcome {
        exit_code: if failed == 0 { EXIT_OK } else { EXIT_FAILURE },
        stdout: out,
        stderr: String::new(),
    }
}

fn cmd_oracle(max_p: u32, diff: bool, format: TableOrJson) -> CommandOutcome {
    if max_p < MIN_SWEEP_DEGREE {
        return CommandOutcome::usage(format!("--max-p must be at least {MIN_SWEEP_DEGREE}"));
    }
    if diff && max_p < MIN_DIFF_DEGREE {
        return CommandOutcome::usage(format!("--max-p must be at least {MIN_DIFF_DEGREE} with --diff"));
    }
    let fail = |e: &dyn std::fmt::Display| CommandOutcome {
        exit_code: EXIT_FAILURE,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    };

    if !diff {
        let feasible = match oracle_enumerate(max_p) {
            Ok(f) => f,
            Err(e) => return fail(&e),
        };
        return CommandOutcome::ok(match format {
            TableOrJson::Json => serde_json::to_string_pretty(&feasible).expect("serializes") + "\n",
            TableOrJson::Table => {
                let mut out = format!("feasible {}\n", feasible.len());
                for f in &feasible {
                    let c = counts(f).expect("sweep only yields feasible figures");
                    let _ = writeln!(out, "{f:<12} {}", describe_counts(&c));
                }
                out
            }
        });
    }

    let report = match oracle_report(max_p) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let stdout = match format {
        TableOrJson::Json => serde_json::to_string_pretty(&report).expect("serializes") + "\n",
        TableOrJson::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "max_p {}", report.max_degree);
            let _ = writeln!(out, "feasible {}", report.feasible.len());
            let _ = writeln!(out, "realized {}", report.realized.len());
            let _ = writeln!(out, "spurious {}", report.spurious.len());
            let _ = writeln!(out, "unexplained {}", report.unexplained.len());
            out.push_str("\nrealized:\n");
            for r in &report.realized {
                match r.sides {
                    Some(n) => writeln!(out, "  {:<12} {} n={n}", r.figure.to_string(), r.solid),
                    None => writeln!(out, "  {:<12} {}", r.figure.to_string(), r.solid),
                }
                .expect("string write");
            }
            out.push_str("\nspurious:\n");
            for s in &report.spurious {
                let _ = writeln!(out, "  {:<12} {}", s.figure.to_string(), s.filter);
            }
            if !report.unexplained.is_empty() {
                out.push_str("\nunexplained:\n");
                for f in &report.unexplained {
                    let _ = writeln!(out, "  {f}");
                }
            }
            if !report.infeasible_realized.is_empty() {
                out.push_str("\nclassified but infeasible:\n");
                for f in &report.infeasible_realized {
                    let _ = writeln!(out, "  {f}");
                }
            }
            out
        }
    };
    CommandOutcome {
        exit_code: if report.is_complete() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        },
        stdout,
        stderr: String::new(),
    }
}

fn cmd_realize(
    name: Option<String>,
    family: Option<Family>,
    n: Option<u32>,
    out: MapFormat,
    path: Option<PathBuf>,
) -> CommandOutcome {
    let solid = match (name, family) {
        (Some(name), _) => match name.parse::<Solid>() {
            Ok(s) => s,
            Err(_) => return CommandOutcome::usage(format!("unknown solid `{name}`; see --list-names")),
        },
        (None, Some(f)) => f.solid(),
        (None, None) => return CommandOutcome::usage("give a solid name or --family with --n"),
    };
    if solid.is_family() && n.is_none() {
        return CommandOutcome::usage(format!("{solid} needs --n"));
    }
    let sides = if solid.is_family() { n } else { None };

    let classified = match classifications() {
        Ok(items) => items,
        Err(outcome) => return outcome,
    };
    let entry = classified
        .iter()
        .find(|c| c.solid == solid)
        .expect("every solid is classified");
    let map = match realize(entry, sides) {
        Ok(map) => map,
        Err(e @ RealizeError::SidesBelowBound { .. }) => return CommandOutcome::usage(e.to_string()),
        Err(e) => {
            return CommandOutcome {
                exit_code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };

    let title = match sides {
        Some(n) => format!("{solid}({n})"),
        None => solid.name().to_string(),
    };
    let document = MapDocument::new(title.clone(), &map);
    let export = match out {
        MapFormat::Faces => map.face_list(),
        MapFormat::Json => serde_json::to_string_pretty(&document).expect("serializes") + "\n",
    };
    let summary = summarize(&title, &document.report);
    let exit_code = if document.report.passes() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };

    match path {
        None => CommandOutcome {
            exit_code,
            stdout: export,
            stderr: summary,
        },
        Some(path) => match std::fs::write(&path, export) {
            Ok(()) => CommandOutcome {
                exit_code,
                stdout: summary,
                stderr: String::new(),
            },
            Err(e) => CommandOutcome {
                exit_code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
    }
}

fn summarize(title: &str, report: &MapReport) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let figure = report
        .figure()
        .map(catalog::format_symbol)
        .unwrap_or_else(|| "mixed".into());
    format!(
        "{title}: {} figure={figure} uniform={} euler={} balance={} bipartite={}\n",
        describe_counts(&report.counts),
        yes_no(report.uniform),
        yes_no(report.euler),
        yes_no(report.balanced),
        yes_no(report.bipartite),
    )
}
