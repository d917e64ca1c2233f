//! The `isar-lint` command line.

mod config;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser};
use rayon::prelude::*;
use walkdir::WalkDir;

pub use config::{ConfigError, FailLevel, FileConfig, Format, RunConfig};

use crate::engine::{resolve_selection, Linter, Report};
use crate::keywords::KeywordTable;
use crate::report::{generate_docs, present_json, present_text, present_xml};
use crate::rules::{builtin_store, RuleSets};

#[derive(Debug, Parser)]
#[command(name = "isar-lint", version, about = "Lint Isabelle/Isar theory files")]
struct Args {
    /// Theory files or directories to search for `.thy` files.
    paths: Vec<PathBuf>,
    /// Lint bundle to activate (repeatable).
    #[arg(long = "bundle", value_name = "NAME", action = ArgAction::Append)]
    bundles: Vec<String>,
    /// Additional lint to enable (repeatable).
    #[arg(long, value_name = "NAME", action = ArgAction::Append)]
    enable: Vec<String>,
    /// Lint to disable (repeatable).
    #[arg(long, value_name = "NAME", action = ArgAction::Append)]
    disable: Vec<String>,
    /// Output format: text, json or xml.
    #[arg(long, default_value = "text")]
    format: Format,
    /// Lowest severity that makes the run fail: info, warn, error or none.
    #[arg(long, value_name = "LEVEL")]
    fail_level: Option<FailLevel>,
    /// Append corpus statistics (text format).
    #[arg(long)]
    stats: bool,
    /// Print markdown documentation for all lints and bundles.
    #[arg(long)]
    docs: bool,
    /// List registered lints.
    #[arg(long)]
    list_lints: bool,
    /// Keyword file extending the built-in keyword table.
    #[arg(long, value_name = "FILE")]
    keywords: Option<PathBuf>,
    /// Configuration file (`key = value` lines).
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads for linting files.
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    /// Continue past unreadable files.
    #[arg(long)]
    keep_going: bool,
    /// Rule-set override, e.g. `tactic_methods=rule_tac,case_tac` (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE", action = ArgAction::Append)]
    set: Vec<String>,
}

/// Exit status for a finished run: 1 when some result reaches `fail_level`.
pub fn exit_code(reports: &[Report], fail_level: FailLevel) -> u8 {
    let Some(level) = fail_level.0 else {
        return 0;
    };
    let failed = reports
        .iter()
        .filter_map(Report::max_severity)
        .any(|s| s >= level);
    u8::from(failed)
}

/// `.thy` files under `paths`, sorted and deduplicated. Explicit file
/// arguments are kept whatever their extension.
pub fn discover(paths: &[PathBuf]) -> (Vec<PathBuf>, Vec<String>) {
    let mut files = Vec::new();
    let mut errors = Vec::new();
    for path in paths {
        if path.is_dir() {
            for entry in WalkDir::new(path).sort_by_file_name() {
                match entry {
                    Ok(e)
                        if e.file_type().is_file()
                            && e.path().extension() == Some("thy".as_ref()) =>
                    {
                        files.push(e.into_path())
                    }
                    Ok(_) => {}
                    Err(err) => errors.push(format!("{}: {err}", path.display())),
                }
            }
        } else if path.exists() {
            files.push(path.clone());
        } else {
            errors.push(format!("{}: no such file or directory", path.display()));
        }
    }
    files.sort();
    files.dedup();
    (files, errors)
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn build_config(args: Args) -> Result<(RunConfig, bool, bool), Failure> {
    let mut run = RunConfig {
        paths: args.paths,
        bundles: args.bundles,
        enable: args.enable,
        disable: args.disable,
        format: args.format,
        fail_level: args.fail_level.unwrap_or_default(),
        stats: args.stats,
        keywords: args.keywords,
        threads: args.threads,
        keep_going: args.keep_going,
        rule_overrides: Vec::new(),
    };
    for s in &args.set {
        let (k, v) = s
            .split_once('=')
            .ok_or_else(|| Failure(format!("--set expects KEY=VALUE, got `{s}`")))?;
        run.rule_overrides
            .push((k.trim().to_owned(), v.trim().to_owned()));
    }
    if let Some(path) = &args.config {
        let file = FileConfig::parse(&read(path)?)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        file.apply_to(&mut run, args.fail_level.is_some());
    }
    Ok((run, args.docs, args.list_lints))
}

fn build_linter(run: &RunConfig) -> Result<Linter, Failure> {
    let mut keywords = KeywordTable::builtin();
    if let Some(path) = &run.keywords {
        keywords
            .extend_from_str(&read(path)?)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    }
    let mut rules = RuleSets::default();
    for (k, v) in &run.rule_overrides {
        rules.set(k, v)?;
    }
    rules.validate(&keywords)?;
    let store = builtin_store();
    let selection = resolve_selection(&store, &run.bundles, &run.enable, &run.disable)?;
    Ok(Linter {
        store,
        selection,
        keywords,
        rules,
    })
}

fn lint_files(
    linter: &Linter,
    files: &[PathBuf],
    threads: Option<usize>,
) -> Result<Vec<Result<Report, String>>, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()?;
    Ok(pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let text = read(path).map_err(|f| f.0)?;
                Ok(linter.lint_source(&path.display().to_string(), &text))
            })
            .collect()
    }))
}

/// Runs the command line with `argv`, writing to the given streams, and
/// returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(args, stdout, stderr) {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(stderr, "isar-lint: {message}");
            2
        }
    }
}

fn execute(args: Args, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, Failure> {
    let (run, docs, list) = build_config(args)?;
    let linter = build_linter(&run)?;
    if docs {
        stdout.write_all(generate_docs(&linter.store).as_bytes())?;
        return Ok(0);
    }
    if list {
        for d in linter.store.descriptors() {
            let active = if linter.selection.contains(&d.name) {
                "*"
            } else {
                " "
            };
            writeln!(
                stdout,
                "{active} {:<36}{:<7}{}",
                d.name,
                d.severity.as_str(),
                d.short_description
            )?;
        }
        return Ok(0);
    }
    if run.paths.is_empty() {
        return Err(Failure("no input paths (try --help)".to_owned()));
    }

    let (files, mut errors) = discover(&run.paths);
    let mut reports = Vec::with_capacity(files.len());
    for outcome in lint_files(&linter, &files, run.threads)? {
        match outcome {
            Ok(report) => reports.push(report),
            Err(e) => errors.push(e),
        }
    }
    for e in &errors {
        writeln!(stderr, "isar-lint: {e}")?;
    }
    let output = match run.format {
        Format::Text => present_text(&reports, run.stats),
        Format::Json => present_json(&reports),
        Format::Xml => present_xml(&reports),
    };
    stdout.write_all(output.as_bytes())?;
    if !errors.is_empty() && !run.keep_going {
        return Ok(2);
    }
    Ok(exit_code(&reports, run.fail_level))
}

pub fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
