//! Command-line driver: parses a [`RunConfig`], runs one check or search
//! and renders the report.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use simspec_core::galois::prime_power;
use simspec_core::reps::CaseLabel;
use simspec_core::roots::{build_root_system, theorem_case_filter, verify_table1_char0, TypeLetter, VerifyOptions};
use simspec_core::spectra::{
    build_case, check_3d4, check_a2, check_a3_negative, check_d4, check_induced_negative, check_su3, family_search,
    spectrum_of, v0_verdict, CaseCheck, Family, SearchOptions, SpectraError,
};

/// Exit status of a run that produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Ran, and every asserted expectation held.
    Ok,
    /// Ran, and the computation contradicts an expected value; the report
    /// carries the evidence.
    ClaimMismatch,
    /// Ran out of budget; the report is partial.
    Incomplete,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ClaimMismatch => 3,
            Status::Incomplete => 1,
        }
    }

    fn from_met(met: bool) -> Self {
        if met {
            Status::Ok
        } else {
            Status::ClaimMismatch
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "simspec", version, about = "Simple-spectrum checks for graph-automorphism cosets over finite fields")]
pub struct RunConfig {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Multiply sigma by zeta^k, zeta a primitive |sigma|-th root of unity.
    #[arg(long, global = true, default_value_t = 0)]
    pub twist: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zero weight multiplicities of the table rows against Freudenthal.
    Table1 {
        #[command(subcommand)]
        action: Table1Action,
    },
    /// Rows surviving the reduction for a type, characteristic and
    /// automorphism order.
    Filter {
        /// Type and rank, e.g. `D4`.
        #[arg(long = "type")]
        type_name: String,
        /// Characteristic; 0 for characteristic zero.
        #[arg(long)]
        p: u64,
        #[arg(long)]
        sigma_order: u32,
    },
    /// One of the verification cases.
    Check {
        #[command(subcommand)]
        case: CheckCase,
    },
    /// Exhaustive squarefree-charpoly search over an element family.
    Search {
        #[arg(long)]
        case: String,
        #[arg(long)]
        q: u64,
        /// sigma_t, sigma_weyl_t or inner_t.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Charpoly of one element given as JSON.
    Spectrum {
        #[arg(long)]
        case: String,
        #[arg(long)]
        q: u64,
        /// `{"sigma_power": 1, "weyl_id": "w", "torus": [3, 1]}`
        #[arg(long)]
        element: String,
    },
    /// Triality on the zero weight space of the 26-dimensional module.
    V0 {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Table1Action {
    Verify {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Seconds allowed per exceptional row.
        #[arg(long, default_value_t = 10)]
        exceptional_secs: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Maximum number of candidates.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Hits listed in the report.
    #[arg(long, default_value_t = 16)]
    pub max_hits: usize,
    /// Stop after this many hits.
    #[arg(long)]
    pub stop_after: Option<u64>,
    /// D4: all four root values instead of the t4 = 1 slice.
    #[arg(long)]
    pub full_torus: bool,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            max_hits: self.max_hits,
            stop_after_hits: self.stop_after,
            threads: None,
            full_torus: self.full_torus,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum CheckCase {
    /// Coset of SL3(q) on the adjoint module.
    A2 {
        #[arg(long)]
        q: u64,
        #[arg(long, requires = "t2")]
        t1: Option<u64>,
        #[arg(long, requires = "t1")]
        t2: Option<u64>,
    },
    /// Coset of SU3(q) on the adjoint module.
    Su3 {
        #[arg(long)]
        q: u64,
    },
    /// Coset family on the 2w2 module of SL4(q).
    A3Negative {
        #[arg(long)]
        q: u64,
    },
    /// Coset family on the induced module of SL4(q).
    InducedNegative {
        #[arg(long)]
        q: u64,
    },
    /// sigma t on the 26-dimensional module of D4(q).
    D4 {
        #[arg(long)]
        q: u64,
        #[arg(long, requires_all = ["t2", "t3"])]
        t1: Option<u64>,
        #[arg(long, requires_all = ["t1", "t3"])]
        t2: Option<u64>,
        #[arg(long, requires_all = ["t1", "t2"])]
        t3: Option<u64>,
        /// Also search the sigma n_w t family.
        #[arg(long)]
        family: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// The twisted torus element of 3D4(q).
    #[command(name = "3d4")]
    ThreeD4 {
        #[arg(long)]
        q: u64,
    },
}

/// A rendered-ready report.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub kind: String,
    pub body: Value,
}

/// The SL cases need gcd(q, 6) = 1, the D4 cases q even.
fn validate_q(case: &str, q: u64) -> Result<()> {
    let Some((p, _)) = prime_power(q) else {
        bail!("q = {} is not a prime power", q);
    };
    let ok = match case {
        "a2" | "su3" | "a3-negative" | "induced-negative" | "a2-adjoint" | "a3-2w2" | "a3-induced" => {
            p != 2 && p != 3
        }
        "d4" | "3d4" | "d4-w2-char2" | "v0" => p == 2,
        _ => true,
    };
    if !ok {
        let need = match case {
            "d4" | "3d4" | "d4-w2-char2" | "v0" => "q even",
            _ => "gcd(q, 6) = 1",
        };
        bail!("q = {} is not valid for {}: need {}", q, case, need);
    }
    if case == "3d4" && q < 4 {
        bail!("3d4 needs q >= 4");
    }
    Ok(())
}

fn case_report(c: CaseCheck) -> (Report, Status) {
    let status = Status::from_met(c.all_met());
    (
        Report {
            kind: c.command.clone(),
            body: c.to_json(),
        },
        status,
    )
}

fn parse_type(s: &str) -> Result<(TypeLetter, usize)> {
    let s = s.trim();
    let (letter, rank) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
    let rank: usize = rank.parse().with_context(|| format!("no rank in type {:?}", s))?;
    Ok((TypeLetter::parse(letter)?, rank))
}

/// Runs one command. Errors are usage or construction failures.
pub fn run(config: &RunConfig) -> Result<(Report, Status)> {
    let twist = config.twist;
    Ok(match &config.command {
        Command::Table1 {
            action: Table1Action::Verify {
                max_rank,
                exceptional_secs,
            },
        } => {
            let r = verify_table1_char0(VerifyOptions {
                max_rank: *max_rank,
                exceptional_budget: Duration::from_secs(*exceptional_secs),
            });
            let status = Status::from_met(r.all_match());
            let body = json!({"checks": r.checks, "all_match": r.all_match()});
            (
                Report {
                    kind: "table1 verify".into(),
                    body,
                },
                status,
            )
        }
        Command::Filter {
            type_name,
            p,
            sigma_order,
        } => {
            let (letter, rank) = parse_type(type_name)?;
            let system = build_root_system(letter, rank)?;
            let rows = theorem_case_filter(&system, *p, *sigma_order);
            let body = json!({"system": system.name(), "p": p, "sigma_order": sigma_order, "rows": rows});
            (
                Report {
                    kind: "filter".into(),
                    body,
                },
                Status::Ok,
            )
        }
        Command::Check { case } => match case {
            CheckCase::A2 { q, t1, t2 } => {
                validate_q("a2", *q)?;
                case_report(check_a2(*q, t1.zip(*t2), twist)?)
            }
            CheckCase::Su3 { q } => {
                validate_q("su3", *q)?;
                case_report(check_su3(*q, twist)?)
            }
            CheckCase::A3Negative { q } => {
                validate_q("a3-negative", *q)?;
                case_report(check_a3_negative(*q, &SearchOptions::default(), twist)?)
            }
            CheckCase::InducedNegative { q } => {
                validate_q("induced-negative", *q)?;
                case_report(check_induced_negative(*q, twist)?)
            }
            CheckCase::D4 {
                q,
                t1,
                t2,
                t3,
                family,
                search,
            } => {
                validate_q("d4", *q)?;
                let t = match (t1, t2, t3) {
                    (Some(a), Some(b), Some(c)) => Some([*a, *b, *c]),
                    _ => None,
                };
                let opts = search.options();
                case_report(check_d4(*q, t, family.then_some(&opts), twist)?)
            }
            CheckCase::ThreeD4 { q } => {
                validate_q("3d4", *q)?;
                case_report(check_3d4(*q, twist)?)
            }
        },
        Command::Search {
            case,
            q,
            family,
            search,
        } => {
            let label: CaseLabel = case.parse()?;
            validate_q(label.as_str(), *q)?;
            let family: Family = family.parse()?;
            let rep = build_case(label, *q)?.with_twist(twist)?;
            let (r, status) = match family_search(&rep, *q, family, &search.options()) {
                Ok(r) => (r, Status::Ok),
                Err(SpectraError::BudgetExceeded(r)) => (*r, Status::Incomplete),
                Err(e) => return Err(e.into()),
            };
            (
                Report {
                    kind: "search".into(),
                    body: r.to_json(),
                },
                status,
            )
        }
        Command::Spectrum { case, q, element } => {
            let label: CaseLabel = case.parse()?;
            validate_q(label.as_str(), *q)?;
            let v: Value = serde_json::from_str(element).context("element is not valid JSON")?;
            let r = spectrum_of(label, *q, &v, twist)?;
            let status = Status::from_met(r.prediction_match != Some(false));
            (
                Report {
                    kind: "spectrum".into(),
                    body: r.to_json(),
                },
                status,
            )
        }
        Command::V0 { q } => {
            validate_q("v0", *q)?;
            let r = v0_verdict(*q)?;
            (
                Report {
                    kind: "v0".into(),
                    body: r.to_json(),
                },
                Status::from_met(r.matches_expected()),
            )
        }
    })
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    let _ = writeln!(out, "{}{}: {}", pad, k, scalar_text(x));
                } else {
                    let _ = writeln!(out, "{}{}:", pad, k);
                    render_text(x, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                if is_flat(x) {
                    let _ = writeln!(out, "{}- {}", pad, scalar_text(x));
                } else {
                    let _ = writeln!(out, "{}[{}]", pad, i);
                    render_text(x, indent + 1, out);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{}{}", pad, scalar_text(other));
        }
    }
}

fn table1_text(body: &Value) -> String {
    let mut out = String::new();
    for c in body["checks"].as_array().into_iter().flatten() {
        let computed = c["computed"].as_u64().map_or("-".to_string(), |n| n.to_string());
        let _ = writeln!(
            out,
            "row {:>2}  {:<3} {:<14} table {:>2}  computed {:>2}  {}",
            c["row"],
            scalar_text(&c["system"]),
            scalar_text(&c["highest_weight"]),
            c["table_value"],
            computed,
            scalar_text(&c["status"]),
        );
    }
    let _ = writeln!(out, "all_match: {}", body["all_match"]);
    out
}

/// The report as bytes in the requested format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!({"kind": report.kind, "report": report.body}))
                .expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text if report.kind == "table1 verify" => table1_text(&report.body),
        Format::Text => {
            let mut s = format!("{}\n", report.kind);
            render_text(&report.body, 1, &mut s);
            s
        }
    }
}

/// Writes the rendered report to `path`, or stdout without one.
pub fn emit_report(report: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = render(report, format);
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_validation() {
        assert!(validate_q("a2", 7).is_ok());
        assert!(validate_q("a2", 9).is_err());
        assert!(validate_q("d4", 16).is_ok());
        assert!(validate_q("d4", 7).is_err());
        assert!(validate_q("a2", 12).is_err());
        assert!(validate_q("a3-induced", 3).is_err());
    }

    #[test]
    fn type_names() {
        assert_eq!(parse_type("D4").unwrap(), (TypeLetter::D, 4));
        assert!(parse_type("Q4").is_err());
        assert!(parse_type("A").is_err());
    }
}
