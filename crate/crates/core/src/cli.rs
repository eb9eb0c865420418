//! Command-line front end. [`run`] turns a parsed [`RunConfig`] into the
//! text for stdout, the files to write and an exit status; [`main`] does the
//! I/O. Exit codes: 0 pass, 1 a check failed, 2 usage or guardrail error.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::characters::{CharacterTable, Projector};
use crate::error::{Error, Result};
use crate::families::{
    build_b_alternating, build_cross_pair_min, build_cross_pair_prod, build_d, contained_in_t_coset,
    default_cross_tau, is_cross_t_intersecting, is_t_intersecting, stability_report, t_coset, CosetSpec, Family,
};
use crate::guard::Guardrail;
use crate::partitions::{fat_partitions, Partition};
use crate::permcore::{GroupMode, Permutation};
use crate::rational::{self, Q};
use crate::render::{self, CharacterTableDoc};
use crate::search::{max_nontrivial_t_intersecting, max_t_intersecting, SearchOptions, SearchResult, SearchStatus};
use crate::spectral::{
    cross_bound, hoffman_bound, omega, solve_weights, spectrum_for, CrossBound, HoffmanReport, SpectrumEntry,
    WeightSolution, WeightedCayleySpec,
};
use crate::verify::{verify_all, VerifyConfig, DEFAULT_SEED};

/// Parsed command line: global flags and one subcommand.
#[derive(Debug, Parser)]
#[command(name = "permspectra", version, about = "Exact spectral and extremal checks on S_n and A_n")]
pub struct RunConfig {
    /// Honour a PERMSPECTRA_MAX_N above the default degree limit.
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Sym,
    Alt,
}

impl From<Group> for GroupMode {
    fn from(g: Group) -> Self {
        match g {
            Group::Sym => GroupMode::Sym,
            Group::Alt => GroupMode::Alt,
        }
    }
}

/// Where the class weights come from.
#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    #[arg(long, value_enum, default_value_t = Group::Sym)]
    pub group: Group,
    /// JSON spec `{"n", "t", "weights": {"[2,2]": "1/9", ...}}`.
    #[arg(long, conflicts_with = "solve")]
    pub weights: Option<PathBuf>,
    /// Use the weighting found by the exact weight solver.
    #[arg(long)]
    pub solve: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table of S_n as JSON and CSV, with an orthogonality check.
    Chars {
        #[arg(long)]
        n: usize,
        /// Directory for chars_n<N>.json and chars_n<N>.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectrum of a weighted conjugacy-class Cayley graph.
    Spectrum {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hoffman and cross-intersecting bounds.
    Hoffman {
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Build, check or report on families of permutations.
    Family {
        #[command(subcommand)]
        action: FamilyCommand,
    },
    /// Exact extremal searches.
    Search {
        #[command(subcommand)]
        action: SearchCommand,
    },
    /// Projection of a family's indicator onto V_t or chosen isotypic components.
    Project {
        /// JSON array of one-line permutations.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Project onto these components instead of V_t, e.g. "[3,1]".
        #[arg(long = "component")]
        components: Vec<String>,
        /// Include the projected function itself.
        #[arg(long)]
        values: bool,
    },
    /// Run the acceptance criteria.
    VerifyAll {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Directory for verify.json and verify.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// The non-trivial t-intersecting family D.
    D,
    /// The non-trivial t-intersecting family B inside A_n.
    B,
    /// The cross-intersecting pair with the smaller member maximal.
    CrossMin,
    /// The cross-intersecting pair with the largest product.
    CrossProd,
    /// The t-coset fixing 1..t.
    Coset,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    Build {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// τ for cross-min, in cycle or one-line notation.
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check t-intersection (or cross-intersection with --other).
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Residual against the stability bound for a weighting.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        weights: Option<PathBuf>,
        #[arg(long)]
        solve: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Maximum t-intersecting family as a maximum clique.
    Clique {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
        /// Seconds before reporting the best family and an upper bound.
        #[arg(long)]
        timeout: Option<u64>,
        /// Only families outside every t-coset (S_n only).
        #[arg(long)]
        nontrivial: bool,
        /// JSON-lines log that each result is appended to.
        #[arg(long, default_value = "search_results.jsonl")]
        log: PathBuf,
    },
}

/// What a command produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub files: Vec<(PathBuf, String)>,
    /// Lines appended to, rather than written over, their file.
    pub appends: Vec<(PathBuf, String)>,
    pub passed: bool,
}

impl RunOutput {
    fn new(stdout: String, passed: bool) -> Self {
        RunOutput {
            stdout,
            passed,
            ..Default::default()
        }
    }
}

#[derive(Serialize)]
struct SpectrumDoc {
    spec: WeightedCayleySpec,
    group: GroupMode,
    entries: Vec<SpectrumEntry>,
    #[serde(with = "rational")]
    omega: Q,
    lambda_min_is_omega: bool,
    hoffman: Option<HoffmanReport>,
    hoffman_error: Option<String>,
}

#[derive(Serialize)]
struct HoffmanDoc {
    spec: WeightedCayleySpec,
    hoffman: HoffmanReport,
    cross: Option<CrossBound>,
}

#[derive(Serialize)]
struct PairDoc<'a> {
    first: &'a Family,
    second: &'a Family,
}

#[derive(Serialize)]
struct FamilyCheck {
    size: usize,
    t: usize,
    t_intersecting: bool,
    coset: Option<CosetSpec>,
    other_size: Option<usize>,
    cross_t_intersecting: Option<bool>,
}

/// A search result without timing, so that output is reproducible; the
/// log keeps the full record.
#[derive(Serialize)]
struct SearchSummary<'a> {
    n: usize,
    t: usize,
    group: GroupMode,
    nontrivial: bool,
    optimum: usize,
    upper_bound: usize,
    status: SearchStatus,
    witness: &'a Family,
}

#[derive(Serialize)]
struct SearchLogLine<'a> {
    nontrivial: bool,
    #[serde(flatten)]
    result: &'a SearchResult,
}

#[derive(Serialize)]
struct ProjectionDoc {
    n: usize,
    components: Vec<Partition>,
    #[serde(with = "rational")]
    norm_sq: Q,
    #[serde(with = "rational")]
    projection_norm_sq: Q,
    #[serde(with = "rational")]
    residual_norm_sq: Q,
    in_subspace: bool,
    #[serde(with = "rational::opt_vec")]
    values: Option<Vec<Q>>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn resolve_spec(n: usize, t: usize, group: GroupMode, weights: Option<&Path>, solve: bool) -> Result<WeightedCayleySpec> {
    if let Some(path) = weights {
        let spec: WeightedCayleySpec = read_json(path)?;
        if spec.n != n || spec.t != t {
            return Err(Error::InvalidSpec(format!(
                "weights file is for n={}, t={} but n={n}, t={t} was requested",
                spec.n, spec.t
            )));
        }
        return Ok(spec);
    }
    if solve {
        return match solve_weights(n, t)? {
            WeightSolution::Feasible { spec, .. } => Ok(spec),
            WeightSolution::Infeasible {
                partition, eigenvalue, ..
            } => Err(Error::InvalidSpec(format!(
                "no admissible weighting for n={n}, t={t}: eigenvalue {} at {partition} leaves the interval",
                rational::to_string(&eigenvalue)
            ))),
        };
    }
    match (t, group) {
        (1, GroupMode::Sym) => WeightedCayleySpec::uniform_derangement(n),
        (1, GroupMode::Alt) => WeightedCayleySpec::uniform_even_derangement(n),
        _ => Err(Error::InvalidSpec(format!(
            "no default weighting for t={t}; pass --weights or --solve"
        ))),
    }
}

fn spec_from(args: &WeightArgs) -> Result<WeightedCayleySpec> {
    resolve_spec(args.n, args.t, args.group.into(), args.weights.as_deref(), args.solve)
}

fn out_file(dir: &Option<PathBuf>, name: String) -> Option<PathBuf> {
    dir.as_ref().map(|d| d.join(name))
}

/// Runs one command without touching the filesystem beyond reading inputs.
pub fn run(config: &RunConfig) -> Result<RunOutput> {
    let guard = Guardrail::from_env(config.allow_large)?;
    match &config.command {
        Command::Chars { n, out } => {
            let n = *n;
            if n == 0 {
                return Err(Error::DegreeTooSmall { n, min: 1 });
            }
            guard.check(n)?;
            let doc = CharacterTableDoc::new(&CharacterTable::new(n));
            let json = render::to_json(&doc)?;
            let mut output = RunOutput::new(json.clone(), doc.orthogonality_ok);
            if let Some(p) = out_file(out, format!("chars_n{n}.json")) {
                output.files.push((p, json));
            }
            if let Some(p) = out_file(out, format!("chars_n{n}.csv")) {
                output.files.push((p, doc.to_csv()?));
            }
            Ok(output)
        }
        Command::Spectrum { weights, out } => {
            guard.check(weights.n)?;
            let spec = spec_from(weights)?;
            let group: GroupMode = weights.group.into();
            let table = spectrum_for(&spec, group)?;
            let w = omega(spec.n, spec.t)?;
            let (hoffman, hoffman_error) = match hoffman_bound(&table) {
                Ok(h) => (Some(h), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let doc = SpectrumDoc {
                lambda_min_is_omega: table.lambda_min() == &w,
                omega: w,
                group,
                entries: table.entries.clone(),
                spec,
                hoffman,
                hoffman_error,
            };
            let json = render::to_json(&doc)?;
            let mut output = RunOutput::new(json.clone(), true);
            let stem = format!("spectrum_n{}_t{}_{}", weights.n, weights.t, group_name(group));
            if let Some(p) = out_file(out, format!("{stem}.json")) {
                output.files.push((p, json));
            }
            if let Some(p) = out_file(out, format!("{stem}.csv")) {
                output.files.push((p, render::spectrum_csv(&table)?));
            }
            Ok(output)
        }
        Command::Hoffman { weights } => {
            guard.check(weights.n)?;
            let spec = spec_from(weights)?;
            let table = spectrum_for(&spec, weights.group.into())?;
            let hoffman = hoffman_bound(&table)?;
            let cross = cross_bound(&table).ok();
            Ok(RunOutput::new(render::to_json(&HoffmanDoc { spec, hoffman, cross })?, true))
        }
        Command::Family { action } => run_family(action, &guard),
        Command::Search { action } => run_search(action, &guard),
        Command::Project {
            input,
            t,
            components,
            values,
        } => {
            let f: Family = read_json(input)?;
            let n = f.degree();
            guard.check(n)?;
            let components: Vec<Partition> = if components.is_empty() {
                fat_partitions(n, *t)
            } else {
                components.iter().map(|s| s.parse()).collect::<Result<_>>()?
            };
            let projector = Projector::new(n, &guard)?;
            let u = f.indicator()?;
            let p = projector.project(&u, &components)?;
            let residual = u.sub(&p).norm_sq();
            let doc = ProjectionDoc {
                n,
                components,
                norm_sq: u.norm_sq(),
                projection_norm_sq: p.norm_sq(),
                in_subspace: residual.is_zero(),
                residual_norm_sq: residual,
                values: values.then_some(p.values),
            };
            Ok(RunOutput::new(render::to_json(&doc)?, true))
        }
        Command::VerifyAll { only, seed, out } => {
            let reports = verify_all(&VerifyConfig { seed: *seed, only: *only })?;
            let mut stdout = String::new();
            for r in &reports {
                stdout.push_str(&render::json_line(r)?);
            }
            let passed = reports.iter().all(|r| r.passed);
            let mut output = RunOutput::new(stdout, passed);
            if let Some(p) = out_file(out, "verify.json".into()) {
                output.files.push((p, render::to_json(&reports)?));
            }
            if let Some(p) = out_file(out, "verify.csv".into()) {
                output.files.push((p, render::criteria_csv(&reports)?));
            }
            Ok(output)
        }
    }
}

fn group_name(g: GroupMode) -> &'static str {
    match g {
        GroupMode::Sym => "sym",
        GroupMode::Alt => "alt",
    }
}

fn run_family(action: &FamilyCommand, guard: &Guardrail) -> Result<RunOutput> {
    match action {
        FamilyCommand::Build { kind, n, t, tau, out } => {
            let (n, t) = (*n, *t);
            guard.check(n)?;
            let json = match kind {
                FamilyKind::D => render::to_json(&build_d(n, t)?)?,
                FamilyKind::B => render::to_json(&build_b_alternating(n, t)?)?,
                FamilyKind::Coset => render::to_json(&t_coset(n, &CosetSpec::fixing(n, t)?)?)?,
                FamilyKind::CrossMin => {
                    let tau = match tau {
                        Some(s) => Permutation::parse(n, s)?,
                        None => default_cross_tau(n, t)?,
                    };
                    let (first, second) = build_cross_pair_min(n, t, &tau)?;
                    render::to_json(&PairDoc {
                        first: &first,
                        second: &second,
                    })?
                }
                FamilyKind::CrossProd => {
                    let (first, second) = build_cross_pair_prod(n, t)?;
                    render::to_json(&PairDoc {
                        first: &first,
                        second: &second,
                    })?
                }
            };
            let mut output = RunOutput::new(json.clone(), true);
            if let Some(p) = out {
                output.files.push((p.clone(), json));
            }
            Ok(output)
        }
        FamilyCommand::Verify { input, t, other } => {
            let f: Family = read_json(input)?;
            guard.check(f.degree())?;
            let other: Option<Family> = other.as_deref().map(read_json).transpose()?;
            let cross = other.as_ref().map(|g| is_cross_t_intersecting(&f, g, *t)).transpose()?;
            let check = FamilyCheck {
                size: f.len(),
                t: *t,
                t_intersecting: is_t_intersecting(&f, *t),
                coset: contained_in_t_coset(&f, *t),
                other_size: other.as_ref().map(Family::len),
                cross_t_intersecting: cross,
            };
            let passed = cross.unwrap_or(check.t_intersecting);
            Ok(RunOutput::new(render::to_json(&check)?, passed))
        }
        FamilyCommand::Report {
            input,
            t,
            weights,
            solve,
        } => {
            let f: Family = read_json(input)?;
            let n = f.degree();
            guard.check(n)?;
            let spec = resolve_spec(n, *t, GroupMode::Sym, weights.as_deref(), *solve)?;
            let report = stability_report(&f, *t, &spec, &Projector::new(n, guard)?)?;
            let passed = report.holds != Some(false);
            Ok(RunOutput::new(render::to_json(&report)?, passed))
        }
    }
}

fn run_search(action: &SearchCommand, guard: &Guardrail) -> Result<RunOutput> {
    let SearchCommand::Clique {
        n,
        t,
        group,
        timeout,
        nontrivial,
        log,
    } = action;
    let options = SearchOptions {
        timeout: timeout.map(Duration::from_secs),
    };
    let group: GroupMode = (*group).into();
    let result = if *nontrivial {
        if group != GroupMode::Sym {
            return Err(Error::InvalidSpec("--nontrivial searches S_n only".into()));
        }
        max_nontrivial_t_intersecting(*n, *t, guard, options)?
    } else {
        max_t_intersecting(*n, *t, group, guard, options)?
    };
    let summary = SearchSummary {
        n: result.n,
        t: result.t,
        group: result.group,
        nontrivial: *nontrivial,
        optimum: result.optimum,
        upper_bound: result.upper_bound,
        status: result.status,
        witness: &result.witness,
    };
    let mut output = RunOutput::new(render::to_json(&summary)?, true);
    let line = render::json_line(&SearchLogLine {
        nontrivial: *nontrivial,
        result: &result,
    })?;
    output.appends.push((log.clone(), line));
    Ok(output)
}

fn write_outputs(output: &RunOutput) -> std::io::Result<()> {
    for (path, contents) in &output.files {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        fs::write(path, contents)?;
    }
    for (path, line) in &output.appends {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        file.write_all(line.as_bytes())?;
    }
    Ok(())
}

/// Parses `std::env::args`, runs, writes outputs and maps the outcome to
/// an exit code.
pub fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&config) {
        Ok(output) => {
            if let Err(e) = write_outputs(&output) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            print!("{}", output.stdout);
            if output.passed {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("permspectra").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn chars_n1_is_trivial() {
        let out = run(&parse(&["chars", "--n", "1"])).unwrap();
        assert!(out.passed);
        assert!(out.stdout.contains("\"values\": [\n        1\n      ]"));
    }

    #[test]
    fn spectrum_flags_omega() {
        let out = run(&parse(&["spectrum", "--n", "4"])).unwrap();
        assert!(out.stdout.contains("\"lambda_min_is_omega\": true"));
        assert!(out.stdout.contains("\"bound\": \"6\""));
    }

    #[test]
    fn missing_weights_for_t2_is_an_error() {
        assert!(run(&parse(&["hoffman", "--n", "5", "--t", "2"])).is_err());
        let out = run(&parse(&["hoffman", "--n", "5", "--t", "2", "--solve"])).unwrap();
        assert!(out.stdout.contains("\"bound\": \"6\""));
    }

    #[test]
    fn search_output_has_no_timing() {
        let out = run(&parse(&["search", "clique", "--n", "4", "--log", "unused.jsonl"])).unwrap();
        assert!(!out.stdout.contains("elapsed"));
        assert!(out.appends[0].1.contains("elapsed_ms"));
    }
}
