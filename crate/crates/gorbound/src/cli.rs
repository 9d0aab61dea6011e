//! Command-line front end.
//!
//! Six subcommands over the engine: `analyze`, `bounds`, `cancel`,
//! `enumerate`, `certify`, `census`. Global `--format {text,json,csv}`
//! selects the rendering; `--out` redirects the primary output to a file
//! (for `certify`, a directory receiving `report.json` and `census.csv`).
//!
//! Exit codes: 0 success, 1 validation error or violations found, 2
//! usage error. Degrees in every output are the internal degrees `t` of
//! the twists `R(-t)`, matching the exponents of the resolution, not the
//! shifted row indices common in Betti-table displays. Fractions render
//! exactly, as `a/b` in lowest terms (`20`, not `20.0`).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::betti::BettiDiagram;
use crate::bounds::{self, check_all, BoundInputs, BoundVerdict, BoundsReport};
use crate::harness::{certify, CertificationRun, CertifyConfig};
use crate::hilbert::{enumerate_gorenstein, EnumFilter, HilbertFunction};
use crate::pairing::{CancellationTrace, GorensteinPairing, Side, Terminal};

/// Environment variable consulted for the default `certify` parallelism
/// width when `--parallelism` is not given.
pub const THREADS_ENV: &str = "GORBOUND_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "gorbound",
    version,
    about = "Exact multiplicity bounds for codimension-three Gorenstein Hilbert functions and Betti diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the primary output here instead of stdout; for `certify`, a
    /// directory that receives report.json and census.csv.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Min,
    Max,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Min => Side::Min,
            SideArg::Max => Side::Max,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    /// Stanley's characterization of codimension-three Gorenstein
    /// Hilbert functions (symmetric, first half difference an O-sequence).
    Si,
    /// Symmetric valid Hilbert functions only; candidates, not certified
    /// Gorenstein.
    None,
}

impl From<FilterArg> for EnumFilter {
    fn from(f: FilterArg) -> EnumFilter {
        match f {
            FilterArg::Si => EnumFilter::SiSequences,
            FilterArg::None => EnumFilter::CandidatesOnly,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Third difference, refined invariants and multiplicity of a
    /// Hilbert function.
    Analyze {
        /// Comma-separated Hilbert function, e.g. "1,3,6,6,3,1".
        hilbert: String,
    },
    /// Evaluate the bound families against the multiplicity.
    #[command(group(ArgGroup::new("input").required(true).args(["hilbert", "diagram"])))]
    Bounds {
        /// Comma-separated Hilbert function (generic Gorenstein diagram).
        hilbert: Option<String>,
        /// Betti diagram JSON file (the route for level input).
        #[arg(long)]
        diagram: Option<PathBuf>,
        /// Evaluate a single registered family: classic, improved, refined.
        #[arg(long)]
        family: Option<String>,
    },
    /// Run the formal-cancellation procedure and print the trace.
    #[command(group(ArgGroup::new("input").required(true).args(["hilbert", "diagram"])))]
    Cancel {
        /// Comma-separated Hilbert function (generic Gorenstein diagram).
        hilbert: Option<String>,
        /// Betti diagram JSON file.
        #[arg(long)]
        diagram: Option<PathBuf>,
        /// Which extreme to chase: min (computes n2) or max (computes N1).
        #[arg(long, value_enum, default_value_t = SideArg::Min)]
        side: SideArg,
    },
    /// List the Gorenstein Hilbert functions up to a socle degree.
    Enumerate {
        #[arg(long, default_value_t = 5)]
        max_socle: usize,
        /// Cap on every entry.
        #[arg(long)]
        max_entry: Option<u64>,
        #[arg(long, value_enum, default_value_t = FilterArg::Si)]
        filter: FilterArg,
    },
    /// Exhaustively certify the enumerated universe; exit 0 iff no
    /// violations.
    Certify {
        #[arg(long, default_value_t = 12)]
        max_socle: usize,
        #[arg(long)]
        max_entry: Option<u64>,
        #[arg(long, value_enum, default_value_t = FilterArg::Si)]
        filter: FilterArg,
        /// Worker threads; defaults to $GORBOUND_THREADS, then 1.
        #[arg(long)]
        parallelism: Option<usize>,
        /// Stop after this many instances (marks the run incomplete).
        #[arg(long)]
        instance_cap: Option<usize>,
    },
    /// Render the tightness census of a completed run.
    Census {
        /// report.json produced by `certify`.
        #[arg(long)]
        run: PathBuf,
    },
}

/// Parses `args` (including the program name) and executes, writing
/// rendered output to `stdout` and diagnostics to `stderr`. Returns the
/// process exit code.
pub fn run(args: Vec<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, rendered: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout
            .write_all(rendered.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, String> {
    match cli.command {
        Command::Analyze { hilbert } => {
            let h: HilbertFunction = hilbert.parse().map_err(|e| format!("{e}"))?;
            let rendered = render_analyze(&h, cli.format)?;
            emit(&cli.out, stdout, &rendered)?;
            Ok(0)
        }
        Command::Bounds {
            hilbert,
            diagram,
            family,
        } => {
            let (h, d) = load_input(hilbert.as_deref(), diagram.as_deref())?;
            let report = check_all(&h, d.as_ref()).map_err(|e| format!("{e}"))?;
            let rendered = match family {
                Some(name) => render_single_family(&h, &d, &name, cli.format)?,
                None => render_bounds(&h, d.as_ref(), &report, cli.format)?,
            };
            emit(&cli.out, stdout, &rendered)?;
            Ok(0)
        }
        Command::Cancel {
            hilbert,
            diagram,
            side,
        } => {
            let (h_desc, pairing) = match (&hilbert, &diagram) {
                (Some(s), None) => {
                    let h: HilbertFunction = s.parse().map_err(|e| format!("{e}"))?;
                    let d = BettiDiagram::generic_from_hilbert(&h).map_err(|e| format!("{e}"))?;
                    (
                        h.to_string(),
                        GorensteinPairing::from_diagram(&d).map_err(|e| format!("{e}"))?,
                    )
                }
                (None, Some(path)) => {
                    let d = load_diagram(path)?;
                    (
                        path.display().to_string(),
                        GorensteinPairing::from_diagram(&d).map_err(|e| format!("{e}"))?,
                    )
                }
                _ => unreachable!("clap group enforces exactly one input"),
            };
            let trace = pairing
                .cancel_to_extreme(side.into())
                .map_err(|e| format!("{e}"))?;
            let rendered = render_trace(&h_desc, &pairing, &trace, cli.format)?;
            emit(&cli.out, stdout, &rendered)?;
            Ok(0)
        }
        Command::Enumerate {
            max_socle,
            max_entry,
            filter,
        } => {
            let list = enumerate_gorenstein(max_socle, max_entry, filter.into());
            let rendered = match cli.format {
                Format::Json => {
                    let names: Vec<String> = list.iter().map(|h| h.to_string()).collect();
                    let mut s = serde_json::to_string(&names).unwrap();
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for h in &list {
                        s.push_str(&h.to_string());
                        s.push('\n');
                    }
                    s
                }
                Format::Csv => {
                    let mut s = String::from("hilbert\n");
                    for h in &list {
                        s.push_str(&format!("\"{h}\"\n"));
                    }
                    s
                }
            };
            emit(&cli.out, stdout, &rendered)?;
            Ok(0)
        }
        Command::Certify {
            max_socle,
            max_entry,
            filter,
            parallelism,
            instance_cap,
        } => {
            let width = parallelism
                .or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()))
                .unwrap_or(1)
                .max(1);
            let config = CertifyConfig {
                max_socle_degree: max_socle,
                max_entry,
                filter: filter.into(),
                instance_cap,
            };
            let run = certify(&config, width);
            if let Some(dir) = &cli.out {
                fs::create_dir_all(dir)
                    .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
                fs::write(dir.join("report.json"), run.report_json())
                    .map_err(|e| format!("cannot write report.json: {e}"))?;
                fs::write(dir.join("census.csv"), run.census_csv())
                    .map_err(|e| format!("cannot write census.csv: {e}"))?;
            }
            let rendered = match cli.format {
                Format::Json => run.report_json(),
                Format::Csv => run.census_csv(),
                Format::Text => render_run_summary(&run, cli.out.as_deref()),
            };
            stdout
                .write_all(rendered.as_bytes())
                .map_err(|e| e.to_string())?;
            Ok(if run.success() { 0 } else { 1 })
        }
        Command::Census { run } => {
            let raw = fs::read_to_string(&run)
                .map_err(|e| format!("cannot read {}: {e}", run.display()))?;
            let parsed: CertificationRun =
                serde_json::from_str(&raw).map_err(|e| format!("invalid run file: {e}"))?;
            let rendered = match cli.format {
                Format::Csv => parsed.census_csv(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&parsed.census).unwrap();
                    s.push('\n');
                    s
                }
                Format::Text => render_census_table(&parsed),
            };
            emit(&cli.out, stdout, &rendered)?;
            Ok(0)
        }
    }
}

fn load_diagram(path: &Path) -> Result<BettiDiagram, String> {
    let raw =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&raw).map_err(|e| format!("invalid diagram file: {e}"))
}

fn load_input(
    hilbert: Option<&str>,
    diagram: Option<&Path>,
) -> Result<(HilbertFunction, Option<BettiDiagram>), String> {
    match (hilbert, diagram) {
        (Some(s), None) => Ok((s.parse().map_err(|e| format!("{e}"))?, None)),
        (None, Some(path)) => {
            let d = load_diagram(path)?;
            let h = d.hilbert_function().map_err(|e| format!("{e}"))?;
            Ok((h, Some(d)))
        }
        _ => unreachable!("clap group enforces exactly one input"),
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    hilbert: String,
    socle_degree: usize,
    symmetric: bool,
    linear_forms_warning: bool,
    multiplicity: u64,
    initial_degree: i64,
    third_difference: Vec<i64>,
    #[serde(flatten)]
    refined: crate::hilbert::RefinedInvariants,
}

fn render_analyze(h: &HilbertFunction, format: Format) -> Result<String, String> {
    let refined = h.refined_invariants().map_err(|e| format!("{e}"))?;
    let td = h.third_difference();
    let report = AnalyzeReport {
        hilbert: h.to_string(),
        socle_degree: h.socle_degree(),
        symmetric: h.is_symmetric(),
        linear_forms_warning: h.has_linear_forms(),
        multiplicity: h.multiplicity(),
        initial_degree: h.initial_degree(),
        third_difference: td.deltas().to_vec(),
        refined,
    };
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string(&report).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => format!(
            "\"{}\",{},{},{},{},{},{}\n",
            report.hilbert,
            report.multiplicity,
            report.initial_degree,
            refined.min_negative,
            refined.min_positive,
            refined.max_negative,
            refined.max_positive,
        ),
        Format::Text => {
            let deltas = td
                .deltas()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let mut s = String::new();
            s.push_str(&format!("hilbert function:  {}\n", report.hilbert));
            s.push_str(&format!("socle degree:      {}\n", report.socle_degree));
            s.push_str(&format!("multiplicity:      {}\n", report.multiplicity));
            s.push_str(&format!(
                "symmetric:         {}\n",
                if report.symmetric { "yes" } else { "no" }
            ));
            s.push_str(&format!(
                "third difference:  {deltas}   (t = 0..{})\n",
                h.socle_shift()
            ));
            s.push_str(&format!("initial degree:    {}\n", report.initial_degree));
            s.push_str(&format!(
                "refined invariants: {refined}   (socle shift s = {})\n",
                refined.socle_shift
            ));
            if report.linear_forms_warning {
                s.push_str("note: h_1 < 3, the ideal contains linear forms\n");
            }
            s
        }
    })
}

#[derive(Serialize)]
struct FamilyReport {
    hilbert: String,
    e: u64,
    family: String,
    lower: BoundVerdict,
    upper: BoundVerdict,
}

fn render_single_family(
    h: &HilbertFunction,
    diagram: &Option<BettiDiagram>,
    name: &str,
    format: Format,
) -> Result<String, String> {
    let family = bounds::family_by_name(name).ok_or_else(|| {
        format!("unknown bound family {name:?}; registered: classic, improved, refined")
    })?;
    let owned;
    let d = match diagram {
        Some(d) => d,
        None => {
            owned = BettiDiagram::generic_from_hilbert(h).map_err(|e| format!("{e}"))?;
            &owned
        }
    };
    let inputs = BoundInputs {
        extremes: d.extremes().map_err(|e| format!("{e}"))?,
        refined: h.refined_invariants().map_err(|e| format!("{e}"))?,
    };
    if !family.applies(&inputs) {
        return Err(format!(
            "family {name:?} does not apply: resolution is not of Gorenstein/level shape (m3 != M3)"
        ));
    }
    let pair = family.evaluate(&inputs);
    let e = num_rational::BigRational::from(num_bigint::BigInt::from(h.multiplicity()));
    let report = FamilyReport {
        hilbert: h.to_string(),
        e: h.multiplicity(),
        family: name.to_string(),
        lower: BoundVerdict {
            value: bounds::format_rational(&pair.lower),
            holds: pair.lower <= e,
            sharp: pair.lower == e,
        },
        upper: BoundVerdict {
            value: bounds::format_rational(&pair.upper),
            holds: pair.upper >= e,
            sharp: pair.upper == e,
        },
    };
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string(&report).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => format!(
            "\"{}\",{},{},{},{},{},{}\n",
            report.hilbert,
            report.e,
            report.family,
            report.lower.value,
            report.upper.value,
            report.lower.flag(),
            report.upper.flag(),
        ),
        Format::Text => format!(
            "hilbert function: {}\nmultiplicity e = {}\n\n{:<10} {:>10} {:>10}   {:<8} {:<8}\n{:<10} {:>10} {:>10}   {:<8} {:<8}\n",
            report.hilbert,
            report.e,
            "family",
            "lower",
            "upper",
            "lo-flag",
            "hi-flag",
            report.family,
            report.lower.value,
            report.upper.value,
            report.lower.flag(),
            report.upper.flag(),
        ),
    })
}

fn render_bounds(
    h: &HilbertFunction,
    diagram: Option<&BettiDiagram>,
    report: &BoundsReport,
    format: Format,
) -> Result<String, String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = report.csv_row();
            s.push('\n');
            s
        }
        Format::Text => {
            let owned;
            let d = match diagram {
                Some(d) => d,
                None => {
                    owned = BettiDiagram::generic_from_hilbert(h).map_err(|e| format!("{e}"))?;
                    &owned
                }
            };
            let mut s = String::new();
            s.push_str(&format!("hilbert function: {}\n", report.hilbert));
            s.push_str(&format!("multiplicity e = {}\n", report.e));
            s.push_str("\nbetti diagram (degrees are internal degrees t of R(-t)):\n");
            for line in d.render_table().lines() {
                s.push_str(&format!("  {line}\n"));
            }
            s.push_str(&format!(
                "\ndegree extremes: m = ({}, {}, {})  M = ({}, {}, {})\n",
                report.inputs.m[0],
                report.inputs.m[1],
                report.inputs.m[2],
                report.inputs.max[0],
                report.inputs.max[1],
                report.inputs.max[2],
            ));
            s.push_str(&format!(
                "refined invariants: n1 = {}, n2 = {}, N1 = {}, N2 = {}\n\n",
                report.inputs.n1, report.inputs.n2, report.inputs.big_n1, report.inputs.big_n2
            ));
            s.push_str(&format!(
                "{:<10} {:>10} {:>10}   {:<8} {:<8}\n",
                "family", "lower", "upper", "lo-flag", "hi-flag"
            ));
            let row = |s: &mut String, name: &str, lo: &BoundVerdict, hi: &BoundVerdict| {
                s.push_str(&format!(
                    "{:<10} {:>10} {:>10}   {:<8} {:<8}\n",
                    name,
                    lo.value,
                    hi.value,
                    lo.flag(),
                    hi.flag()
                ));
            };
            row(
                &mut s,
                "classic",
                &report.classic_lower,
                &report.classic_upper,
            );
            match (&report.improved_lower, &report.improved_upper) {
                (Some(lo), Some(hi)) => row(&mut s, "improved", lo, hi),
                _ => s.push_str(&format!(
                    "{:<10} {:>10} {:>10}   {:<8} {:<8}\n",
                    "improved", "n/a", "n/a", "n/a", "n/a"
                )),
            }
            row(
                &mut s,
                "refined",
                &report.refined_lower,
                &report.refined_upper,
            );
            s
        }
    })
}

#[derive(Serialize)]
struct TraceReport<'a> {
    input: &'a str,
    #[serde(flatten)]
    trace: &'a CancellationTrace,
}

fn render_trace(
    input: &str,
    pairing: &GorensteinPairing,
    trace: &CancellationTrace,
    format: Format,
) -> Result<String, String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string(&TraceReport { input, trace }).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let (kind, degree, extreme) = match trace.terminal {
                Terminal::NoMatch { extreme } => ("no_match", None, Some(extreme)),
                Terminal::DiagonalOnly {
                    central,
                    post_extreme,
                } => ("diagonal_only", Some(central), post_extreme),
            };
            format!(
                "\"{}\",{},{},{},{},{}\n",
                input,
                trace.side,
                trace.steps.len(),
                kind,
                degree
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "n/a".into()),
                extreme
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "n/a".into()),
            )
        }
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("input:   {input}\n"));
            s.push_str(&format!("pairing: {pairing}\n"));
            s.push_str(&format!("side:    {}\n", trace.side));
            if trace.steps.is_empty() {
                s.push_str("steps:   (none)\n");
            } else {
                s.push_str("steps:\n");
                for (k, step) in trace.steps.iter().enumerate() {
                    s.push_str(&format!(
                        "  {}: removed generator/syzygy pairs at degrees {{{}, {}}}\n",
                        k + 1,
                        step.low,
                        step.high
                    ));
                }
            }
            match trace.terminal {
                Terminal::NoMatch { extreme } => {
                    s.push_str(&format!(
                        "terminal: no match for extreme degree {extreme}; surviving extreme = {extreme}\n"
                    ));
                }
                Terminal::DiagonalOnly {
                    central,
                    post_extreme,
                } => {
                    s.push_str(&format!(
                        "terminal: diagonal-only at central degree {central}; after one numerical cancellation the extreme = {}\n",
                        post_extreme.map(|d| d.to_string()).unwrap_or_else(|| "n/a".into())
                    ));
                }
            }
            s
        }
    })
}

fn render_run_summary(run: &CertificationRun, out_dir: Option<&Path>) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "certification run: max socle degree {}, filter {}, {}\n",
        run.config.max_socle_degree,
        run.config.filter,
        if run.complete {
            "complete"
        } else {
            "INCOMPLETE (instance cap hit)"
        }
    ));
    s.push_str(&format!(
        "instances:             {}\n",
        run.counts.instances
    ));
    s.push_str(&format!(
        "violations:            {}\n",
        run.violations.len()
    ));
    for v in run.violations.iter().take(20) {
        s.push_str(&format!("  {} [{}]: {}\n", v.hilbert, v.check, v.detail));
    }
    s.push_str(&format!("pure:                  {}\n", run.counts.pure));
    s.push_str(&format!(
        "quasi-pure:            {}\n",
        run.counts.quasi_pure
    ));
    s.push_str(&format!(
        "refined-sharp:         {}\n",
        run.counts.refined_sharp
    ));
    s.push_str(&format!(
        "improved-sharp:        {}\n",
        run.counts.improved_sharp
    ));
    s.push_str(&format!(
        "diagonal terminations: {} (stripped-pure: {})\n",
        run.counts.diagonal_terminations, run.counts.diagonal_stripped_pure
    ));
    s.push_str(&format!(
        "parity failures:       {}\n",
        run.counts.parity_unrepairable
    ));
    s.push_str(&format!(
        "cancellation steps:    {}\n",
        run.counts.cancellation_steps
    ));
    let d = run.dominance_counts();
    s.push_str(&format!(
        "tightness: refined tighter on {} lower / {} upper; improved tighter on {} lower / {} upper\n",
        d.refined_tighter_lower, d.refined_tighter_upper, d.improved_tighter_lower, d.improved_tighter_upper
    ));
    s.push_str(&format!(
        "timing: enumerate {:?}, check {:?}, aggregate {:?}\n",
        run.timing.enumerate, run.timing.check, run.timing.aggregate
    ));
    if let Some(dir) = out_dir {
        s.push_str(&format!(
            "wrote {} and {}\n",
            dir.join("report.json").display(),
            dir.join("census.csv").display()
        ));
    }
    s
}

fn render_census_table(run: &CertificationRun) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "{:<28} {:>6} {:>10} {:>10} {:>10} {:>10} {:>9} {:>9}\n",
        "hilbert", "e", "imp-lower", "ref-lower", "ref-upper", "imp-upper", "lower", "upper"
    ));
    for row in &run.census {
        let t = |t: crate::harness::Tightness| match t {
            crate::harness::Tightness::Refined => "refined",
            crate::harness::Tightness::Improved => "improved",
            crate::harness::Tightness::Tie => "tie",
        };
        s.push_str(&format!(
            "{:<28} {:>6} {:>10} {:>10} {:>10} {:>10} {:>9} {:>9}\n",
            row.hilbert,
            row.e,
            row.improved_lower,
            row.refined_lower,
            row.refined_upper,
            row.improved_upper,
            t(row.lower_tighter),
            t(row.upper_tighter),
        ));
    }
    s
}
