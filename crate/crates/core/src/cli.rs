//! Command-line front end.
//!
//! [`run`] takes the argument vector and standard input and returns the exit
//! code with the rendered output, so the binary is a thin wrapper and every
//! subcommand can be exercised in-process.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::alexander::{alexander_polynomial, closed_form_family, ColumnChoice};
use crate::error::{Error, Result};
use crate::family::{self, classify_surgery, genus, slope_bound, FamilyParams, SurgerySlope, Verdict};
use crate::foxcalc::compute_weights;
use crate::rootcert::{certify_family_root_with_tol, verify_root_against_delta, DEFAULT_BISECTION_TOL};
use crate::words::{parse_word, Generator, Presentation};

#[derive(Debug, Parser)]
#[command(name = "lo-surgery", version, about = "Alexander polynomials, unit-circle root certificates and surgery slopes for twisted torus knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a presentation file, or a single word over given generators.
    Parse {
        #[arg(long, conflicts_with_all = ["word", "gens"])]
        file: Option<String>,
        #[arg(long, requires = "gens")]
        word: Option<String>,
        /// Space-separated generator names, used with --word.
        #[arg(long, requires = "word")]
        gens: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Alexander polynomial of a presentation file (`-` for stdin).
    Alexander {
        #[arg(long)]
        file: String,
        /// Generator whose column is removed, or `auto`.
        #[arg(long, default_value = "auto")]
        via: String,
        #[arg(long)]
        json: bool,
    },
    /// Data for the twisted torus knot K(n, m).
    Family {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum)]
        emit: Emit,
        #[arg(long)]
        json: bool,
    },
    /// Certify a simple root of the Alexander polynomial on the unit circle.
    Certify {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value_t = DEFAULT_BISECTION_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Classify p/q surgery on K(n, m).
    Classify {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        json: bool,
    },
    /// Summary table over 1 <= n <= n_max, 1 <= m <= m_max.
    Table {
        #[arg(long)]
        n_max: i64,
        #[arg(long)]
        m_max: i64,
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Presentation,
    Longitude,
    Alexander,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => Outcome::ok(out),
        Err(CliError::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("usage error: {msg}\n"),
        },
        Err(CliError::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: error_line(&e),
        },
    }
}

/// One machine-parseable line: `error kind=<Kind> message="<text>"`.
pub fn error_line(e: &Error) -> String {
    format!("error kind={} message={:?}\n", e.kind(), e.to_string())
}

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn params(n: i64, m: i64) -> std::result::Result<FamilyParams, CliError> {
    FamilyParams::new(n, m).map_err(|e| CliError::Usage(e.to_string()))
}

fn read_source(path: &str, stdin: &mut dyn Read) -> std::result::Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {path}: {e}")))
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn execute(command: Command, stdin: &mut dyn Read) -> std::result::Result<String, CliError> {
    match command {
        Command::Parse {
            file,
            word,
            gens,
            json,
        } => {
            if let (Some(word), Some(gens)) = (word, gens) {
                let generators = gens
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(Generator::new)
                    .collect::<Result<Vec<_>>>()?;
                let w = parse_word(&word, &generators)?;
                return Ok(if json {
                    let syllables: Vec<(String, i64)> = w
                        .syllables()
                        .iter()
                        .map(|s| (s.generator.name().to_string(), s.exponent))
                        .collect();
                    to_json(&serde_json::json!({ "word": w.to_string(), "syllables": syllables }))
                } else {
                    format!("{w}\n")
                });
            }
            let file = file.ok_or_else(|| CliError::Usage("parse needs --file or --word/--gens".into()))?;
            let pres = Presentation::parse(&read_source(&file, stdin)?)?;
            let weights = compute_weights(&pres)?;
            if json {
                let rels: Vec<String> = pres.relators().iter().map(|r| r.to_string()).collect();
                let ws: Vec<(String, i64)> = pres
                    .generators()
                    .iter()
                    .map(|g| (g.name().to_string(), weights.get(g)))
                    .collect();
                Ok(to_json(&serde_json::json!({
                    "generators": pres.generators().iter().map(|g| g.name()).collect::<Vec<_>>(),
                    "relators": rels,
                    "meridian": pres.meridian().map(|g| g.name()),
                    "weights": ws,
                })))
            } else {
                let mut out = pres.to_string();
                let ws: Vec<String> = pres
                    .generators()
                    .iter()
                    .map(|g| format!("{g}={}", weights.get(g)))
                    .collect();
                let _ = writeln!(out, "# weights: {}", ws.join(" "));
                Ok(out)
            }
        }
        Command::Alexander { file, via, json } => {
            let pres = Presentation::parse(&read_source(&file, stdin)?)?;
            let column = if via == "auto" {
                ColumnChoice::Auto
            } else {
                let g = pres
                    .generator(&via)
                    .ok_or_else(|| CliError::Usage(format!("--via {via:?} is not a generator")))?;
                ColumnChoice::Generator(g.clone())
            };
            let delta = alexander_polynomial(&pres, &column)?;
            Ok(if json {
                to_json(&delta.to_json())
            } else {
                format!("{delta}\n")
            })
        }
        Command::Family { n, m, emit, json } => {
            let p = params(n, m)?;
            let text = match emit {
                Emit::Presentation => {
                    let pres = family::presentation(p);
                    if json {
                        return Ok(to_json(&serde_json::json!({
                            "generators": ["a", "w"],
                            "relators": [pres.relators()[0].to_string()],
                            "meridian": "a",
                        })));
                    }
                    return Ok(pres.to_string());
                }
                Emit::Longitude => family::longitude(p).to_string(),
                Emit::Alexander => {
                    let delta = closed_form_family(p)?;
                    if json {
                        return Ok(to_json(&delta.to_json()));
                    }
                    delta.to_string()
                }
            };
            Ok(if json {
                to_json(&serde_json::json!({ "word": text }))
            } else {
                format!("{text}\n")
            })
        }
        Command::Certify { n, m, tol, json } => {
            let p = params(n, m)?;
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let cert = certify_family_root_with_tol(p, tol)?;
            let residual = verify_root_against_delta(p, &cert)?;
            let j = cert.to_json(residual);
            if json {
                Ok(to_json(&j))
            } else {
                Ok(format!(
                    "kind: {}\ntheta_lo: {}\ntheta_hi: {}\ntheta_star: {}\ng_lo: {}\ng_hi: {}\nresidual: {:e}\n",
                    j.kind, j.theta_lo, j.theta_hi, j.theta_star, j.g_lo, j.g_hi, j.residual
                ))
            }
        }
        Command::Classify { n, m, p, q, json } => {
            let fp = params(n, m)?;
            let slope = SurgerySlope::new(p, q).map_err(|e| CliError::Usage(e.to_string()))?;
            let c = classify_surgery(fp, slope);
            let bound = c.slope_bound.to_integer();
            if json {
                return Ok(to_json(&serde_json::json!({
                    "slope": slope.to_string(),
                    "verdict": c.verdict,
                    "slope_bound": bound,
                    "near_zero_note": c.near_zero_note,
                })));
            }
            Ok(match c.verdict {
                Verdict::NotLeftOrderable => format!("NotLeftOrderable (bound {bound})\n"),
                Verdict::NoConclusion => format!(
                    "NoConclusion (bound {bound}; slopes sufficiently close to 0 are left-orderable)\n"
                ),
            })
        }
        Command::Table { n_max, m_max, tsv } => {
            if n_max < 1 || m_max < 1 {
                return Err(CliError::Usage("--n-max and --m-max must be >= 1".into()));
            }
            Ok(table(n_max, m_max, tsv))
        }
    }
}

pub const TABLE_COLUMNS: [&str; 7] = ["n", "m", "genus", "bound", "span", "theta_star", "residual"];

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub params: FamilyParams,
    pub genus: i64,
    pub bound: i64,
    pub span: Result<i64>,
    pub root: Result<(f64, f64)>,
}

pub fn table_row(p: FamilyParams) -> TableRow {
    let span = closed_form_family(p).map(|d| d.span());
    let root = certify_family_root_with_tol(p, DEFAULT_BISECTION_TOL)
        .and_then(|c| verify_root_against_delta(p, &c).map(|r| (c.theta_star, r)));
    TableRow {
        params: p,
        genus: genus(p),
        bound: slope_bound(p).to_integer(),
        span,
        root,
    }
}

/// Rows in lexicographic `(n, m)` order. Failing cells read `ERR:<Kind>`.
pub fn table(n_max: i64, m_max: i64, tsv: bool) -> String {
    let mut cells: Vec<Vec<String>> = vec![TABLE_COLUMNS.iter().map(|s| s.to_string()).collect()];
    for n in 1..=n_max {
        for m in 1..=m_max {
            let p = FamilyParams::new(n, m).expect("bounds checked");
            let row = table_row(p);
            let err = |e: &Error| format!("ERR:{}", e.kind());
            let (theta, residual) = match &row.root {
                Ok((t, r)) => (format!("{t:.12}"), format!("{r:.3e}")),
                Err(e) => (err(e), err(e)),
            };
            cells.push(vec![
                n.to_string(),
                m.to_string(),
                row.genus.to_string(),
                row.bound.to_string(),
                row.span.as_ref().map(|s| s.to_string()).unwrap_or_else(err),
                theta,
                residual,
            ]);
        }
    }
    let mut out = String::new();
    if tsv {
        for row in cells {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
    } else {
        let widths: Vec<usize> = (0..TABLE_COLUMNS.len())
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        for row in cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
    }
    out
}
