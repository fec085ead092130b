use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use freecurves::arrangements::named::{FAMILIES, NAMES};
use freecurves::arrangements::{generate, Named, PointSet};
use freecurves::classify::{
    analyze, analyze_unchecked, minimal_unexpected_irreducible_with, unexpected_by_criterion_with,
    ClassificationRecord, UnexpectedVerdict,
};
use freecurves::interpolation::{
    has_unexpected_with, scan_unexpected, unexpected_curve_equation, InterpolationReport, DEFAULT_SEED,
};
use freecurves::json::{self, PolynomialJson, PointSetJson};
use freecurves::saturation::DefectProfile;
use freecurves::syzygy::SyzygyProfile;
use freecurves::{Error, ExecMode};

#[derive(Parser)]
#[command(name = "freecurves", version, about = "Syzygies, defects and unexpected curves of plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
    /// Run every kernel on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Args)]
struct Output {
    /// Compact single-line JSON.
    #[arg(long, global = true, conflicts_with_all = ["pretty", "text"])]
    json: bool,
    /// Indented JSON (the default).
    #[arg(long, global = true)]
    pretty: bool,
    /// Human-readable report.
    #[arg(long, global = true, conflicts_with = "pretty")]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named curve or point set as JSON.
    #[command(after_help = generate_help())]
    Generate {
        /// A fixed name, or a family name followed by its parameter.
        name: String,
        /// Family parameter.
        param: Option<u32>,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify a curve given as a JSON polynomial (`-` reads stdin).
    Analyze {
        input: PathBuf,
        /// Include the minimal resolution of the Milnor algebra.
        #[arg(long)]
        resolution: bool,
        /// Skip the reducedness test.
        #[arg(long)]
        skip_reduced: bool,
        /// Include wall-clock times.
        #[arg(long)]
        timing: bool,
    },
    /// Test a point set for unexpected curves (`-` reads stdin).
    Unexpected {
        input: PathBuf,
        #[arg(long = "d", required_unless_present = "scan", conflicts_with = "scan")]
        degree: Option<u32>,
        /// Multiplicity at the generic point; defaults to d − 1.
        #[arg(long = "m", requires = "degree")]
        multiplicity: Option<u32>,
        /// Check every U(2, j, j − 1) and compare with the criterion.
        #[arg(long)]
        scan: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print the curve when the system is one-dimensional.
        #[arg(long, requires = "degree")]
        emit_curve: bool,
    },
}

fn generate_help() -> String {
    format!("Names: {}\nFamilies: {}", NAMES.join(", "), FAMILIES.join(", "))
}

#[derive(Serialize)]
struct Timing {
    analysis_ms: u128,
}

#[derive(Serialize)]
struct AnalysisReport {
    input: String,
    classification: ClassificationRecord,
    syzygies: SyzygyProfile,
    defect: DefectProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    resolution: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Timing>,
}

#[derive(Serialize)]
struct CurveReport {
    #[serde(flatten)]
    report: InterpolationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<PolynomialJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<[String; 3]>,
}

#[derive(Serialize)]
struct ScanReport {
    points: usize,
    criterion: Option<UnexpectedVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    criterion_error: Option<String>,
    interpolation: UnexpectedVerdict,
    agree: Option<bool>,
    reports: Vec<InterpolationReport>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotReduced => 3,
        Error::Diagnostic(_) | Error::Inconsistent(_) => 4,
        _ => 2,
    }
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidParameter(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

impl Output {
    fn render<T: Serialize>(&self, value: &T) -> String {
        json::to_string(value, !self.json)
    }
}

fn text_analysis(r: &AnalysisReport, unicode: Option<String>) -> String {
    let c = &r.classification;
    let mut out = vec![
        format!("degree: {}", c.d),
        format!("class: {}", c.class),
        format!("exponents: {:?}", c.exponents),
        format!("mdr: {}", r.syzygies.mdr),
        format!("tau: {}", c.tau),
        format!("nu: {}", c.nu),
        format!("sigma: {}", r.defect.sigma.map_or("none".into(), |s| s.to_string())),
        format!("almost free: {}", c.almost_free),
    ];
    if let Some((a, b)) = c.splitting {
        out.push(format!("splitting: ({a}, {b})"));
    }
    if let Some(level) = c.level {
        out.push(format!("level: {level}"));
    }
    let nonzero: Vec<String> = r
        .defect
        .n_values
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(k, v)| format!("n{k} = {v}"))
        .collect();
    out.push(format!("N(f): {}", if nonzero.is_empty() { "0".into() } else { nonzero.join(", ") }));
    if let Some(u) = unicode {
        out.push(format!("resolution: {u}"));
    }
    if let Some(t) = &r.timing {
        out.push(format!("time: {} ms", t.analysis_ms));
    }
    out.join("\n")
}

fn verdict_line(label: &str, v: &UnexpectedVerdict) -> String {
    if v.admits {
        format!("{label}: U(2, j, j-1) for j in {:?}", v.degrees)
    } else {
        format!("{label}: none")
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let mode = if cli.sequential { ExecMode::Sequential } else { ExecMode::default() };
    let out = &cli.output;
    match &cli.command {
        Command::Generate { name, param, output } => {
            let text = match generate(name, *param)? {
                Named::Curve(f) => json::polynomial_to_string(&f, !out.json),
                Named::Points(z) => json::point_set_to_string(&z, !out.json),
            };
            match output {
                Some(path) => {
                    fs::write(path, text + "\n")
                        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Analyze {
            input,
            resolution,
            skip_reduced,
            timing,
        } => {
            let f = json::polynomial_from_str(&read_input(input)?)?;
            let start = Instant::now();
            let (classification, syzygies, defect) = if *skip_reduced {
                analyze_unchecked(&f, mode)?
            } else {
                analyze(&f, mode)?
            };
            let elapsed = start.elapsed();
            let res = syzygies.resolution();
            let report = AnalysisReport {
                input: input.display().to_string(),
                classification,
                syzygies,
                defect,
                resolution: resolution.then(|| res.ascii()),
                timing: timing.then(|| Timing {
                    analysis_ms: elapsed.as_millis(),
                }),
            };
            Ok(if out.text {
                text_analysis(&report, resolution.then(|| res.unicode()))
            } else {
                out.render(&report)
            })
        }
        Command::Unexpected {
            input,
            degree,
            multiplicity,
            scan,
            seed,
            emit_curve,
        } => {
            let z: PointSet = json::point_set_from_str(&read_input(input)?)?;
            if *scan {
                return scan_report(&z, *seed, mode, out);
            }
            let d = degree.expect("required unless scanning");
            let m = multiplicity.unwrap_or(d.saturating_sub(1));
            let report = has_unexpected_with(&z, d, m, *seed, mode)?;
            let (curve, point) = if *emit_curve {
                let c = unexpected_curve_equation(&z, d, m, *seed)?;
                let point = PointSetJson::from(&PointSet::new(vec![c.point])?).points.remove(0);
                (Some(PolynomialJson::from(&c.equation)), Some(point))
            } else {
                (None, None)
            };
            if out.text {
                let mut lines = vec![format!(
                    "U(2, {d}, {m}): actual {}, expected {}, unexpected {}",
                    report.actual, report.expected, report.unexpected
                )];
                if let Some(c) = &curve {
                    lines.push(format!("curve: {}", json::to_string(c, false)));
                }
                return Ok(lines.join("\n"));
            }
            Ok(out.render(&CurveReport { report, curve, point }))
        }
    }
}

fn scan_report(z: &PointSet, seed: u64, mode: ExecMode, out: &Output) -> Result<String, Error> {
    let (interpolation, reports) = scan_unexpected(z, seed, mode)?;
    let (criterion, criterion_error) = match unexpected_by_criterion_with(z, mode) {
        Ok(mut v) => {
            if v.admits && z.is_rational() {
                v.irreducible_minimal = Some(minimal_unexpected_irreducible_with(z, mode)?.irreducible);
            }
            (Some(v), None)
        }
        Err(e @ (Error::Diagnostic(_) | Error::NotReduced)) => return Err(e),
        Err(e) => (None, Some(e.to_string())),
    };
    let agree = criterion
        .as_ref()
        .map(|c| c.admits == interpolation.admits && c.degrees == interpolation.degrees);
    if out.text {
        let mut lines = vec![format!("points: {}", z.len())];
        match &criterion {
            Some(c) => lines.push(verdict_line("criterion", c)),
            None => lines.push(format!("criterion: unavailable ({})", criterion_error.unwrap_or_default())),
        }
        lines.push(verdict_line("interpolation", &interpolation));
        return Ok(lines.join("\n"));
    }
    Ok(out.render(&ScanReport {
        points: z.len(),
        criterion,
        criterion_error,
        interpolation,
        agree,
        reports,
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            if !text.is_empty() {
                // a closed pipe downstream is not an error of ours
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
