use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use virasoro_core::characters::{
    char_irreducible_c1, char_irreducible_generic_checked, char_verma, validate_irreducible_c1, verify_su21_branching,
};
use virasoro_core::discrete::{classify_central_charge, enumerate_discrete_pairs, is_allowed_pair};
use virasoro_core::fock::{
    oscillator_character, oscillator_character_closed_form, sl2_triple_check, verify_hermiticity,
    verify_virasoro_bracket, OscillatorParams,
};
use virasoro_core::linalg::PsdVerdict;
use virasoro_core::verma::{gram_matrix, is_positive_semidefinite, unitarity_scan, VermaParams};
use virasoro_core::wzw::{full_catalog, scan_noncompact, simple_lie_data, Series};
use virasoro_core::{Error, ExactScalar};

use crate::catalog::parse_catalog;
use crate::report::{Format, Outcome, Status};

pub const DEFAULT_LEVEL_CAP: u64 = 30;
pub const ORDER_ENV: &str = "VIRASORO_ORDER";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{what} = {value} exceeds the cap {cap}; pass --unsafe-level to override")]
    OverCap { what: &'static str, value: u64, cap: u64 },
    #[error("missing argument: {0}")]
    Missing(&'static str),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Exact computations for lowest-weight Virasoro and Heisenberg modules.
#[derive(Debug, Parser)]
#[command(name = "virasoro", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Lift the hard cap on levels and truncation orders.
    #[arg(long, global = true)]
    pub unsafe_level: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn rational(s: &str) -> Result<ExactScalar, String> {
    s.parse::<ExactScalar>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub c: ExactScalar,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub h: ExactScalar,
}

#[derive(Debug, Args)]
pub struct OscillatorArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub lambda: ExactScalar,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub q: ExactScalar,
}

impl OscillatorArgs {
    fn params(&self) -> OscillatorParams {
        OscillatorParams::new(self.lambda.clone(), self.q.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OscillatorCheck {
    Bracket,
    Hermiticity,
    Character,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharacterKind {
    Verma,
    C1,
    Generic,
    Oscillator,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shapovalov matrix of M(c, h) at one level.
    Gram {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        level: u32,
    },
    /// Level-by-level positivity of the Shapovalov form.
    Unitarity {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 6)]
        level: u32,
    },
    /// Discrete-series pairs (c(m), h_{p,q}(m)).
    Discrete {
        #[arg(long)]
        m: u64,
    },
    /// Central-charge regime flags; with --h also the allowed-pair test.
    Regime {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: ExactScalar,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h: Option<ExactScalar>,
    },
    /// Checks the oscillator representation on basis vectors of the Fock space.
    OscillatorVerify {
        #[command(flatten)]
        osc: OscillatorArgs,
        #[arg(long, value_enum, default_value = "all")]
        check: OscillatorCheck,
        /// Single mode index n (default: all |n| ≤ 3).
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        /// Single mode index m for the bracket (default: all |m| ≤ 3).
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, default_value_t = 6)]
        level: u32,
        #[arg(long, env = ORDER_ENV, default_value_t = 24)]
        order: usize,
    },
    /// Truncated q-series characters.
    Character {
        #[arg(long, value_enum)]
        kind: CharacterKind,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Option<ExactScalar>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        h: Option<ExactScalar>,
        #[arg(long)]
        j: Option<u64>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        lambda: Option<ExactScalar>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        q: Option<ExactScalar>,
        #[arg(long, env = ORDER_ENV, default_value_t = 24)]
        order: usize,
        /// Highest level whose Gram rank is checked (generic and c1 kinds).
        #[arg(long, default_value_t = 6)]
        check_level: u32,
    },
    /// SU(2)_1 branching into c = 1 characters.
    Branch {
        #[arg(long)]
        jmax: u64,
        #[arg(long, env = ORDER_ENV, default_value_t = 24)]
        order: usize,
    },
    /// Sugawara central charges and regime flags for G_k.
    Wzw {
        #[arg(long, ignore_case = true)]
        series: Option<String>,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        level: Option<u64>,
        /// JSON list of {"series", "rank", "level"}; "-" reads stdin.
        #[arg(long, conflicts_with_all = ["series", "rank", "level"])]
        catalog: Option<PathBuf>,
        /// Scan every simple algebra of rank ≤ this at levels ≤ --scan-level.
        #[arg(long, conflicts_with_all = ["series", "rank", "level", "catalog"])]
        scan_rank: Option<u32>,
        #[arg(long, default_value_t = 10)]
        scan_level: u64,
    },
    /// sl(2) subalgebras X_n, Y_n, L_0 + c_n in the oscillator representation.
    Sl2Check {
        #[command(flatten)]
        osc: OscillatorArgs,
        /// Single n (default: 1, 2, 3).
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, default_value_t = 5)]
        level: u32,
    },
}

struct Caps {
    lifted: bool,
}

impl Caps {
    fn check(&self, what: &'static str, value: u64) -> Result<(), CliError> {
        if !self.lifted && value > DEFAULT_LEVEL_CAP {
            return Err(CliError::OverCap { what, value, cap: DEFAULT_LEVEL_CAP });
        }
        Ok(())
    }
}

fn merge(base: Value, extra: Value) -> Value {
    match (base, extra) {
        (Value::Object(mut a), Value::Object(b)) => {
            a.extend(b);
            Value::Object(a)
        }
        (a, _) => a,
    }
}

fn with_status<T: Serialize>(pass: bool, report: &T) -> Outcome {
    Outcome::new(Status::from_pass(pass), report)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let caps = Caps { lifted: cli.unsafe_level };
    match &cli.command {
        Command::Gram { weight, level } => {
            caps.check("level", *level as u64)?;
            let params = VermaParams::new(weight.c.clone(), weight.h.clone());
            let g = gram_matrix(&params, *level);
            let psd = match is_positive_semidefinite(&g) {
                PsdVerdict::Psd { .. } => true,
                PsdVerdict::Indefinite { .. } => false,
            };
            let extra = json!({
                "c": weight.c,
                "h": weight.h,
                "determinant": g.determinant(),
                "rank": g.rank(),
                "positive_semidefinite": psd,
            });
            Ok(Outcome::ok(&merge(serde_json::to_value(&g)?, extra)))
        }
        Command::Unitarity { weight, level } => {
            caps.check("level", *level as u64)?;
            let report = unitarity_scan(&VermaParams::new(weight.c.clone(), weight.h.clone()), *level);
            let allowed = is_allowed_pair(&weight.c, &weight.h);
            Ok(Outcome::ok(&merge(serde_json::to_value(&report)?, json!({ "allowed_pair": allowed }))))
        }
        Command::Discrete { m } => {
            caps.check("m", *m)?;
            let pairs = enumerate_discrete_pairs(*m)?;
            let c = pairs[0].c.clone();
            Ok(Outcome::ok(&json!({ "m": m, "c": c, "pairs": pairs })))
        }
        Command::Regime { c, h } => {
            let report = serde_json::to_value(classify_central_charge(c))?;
            let extra = match h {
                Some(h) => json!({
                    "h": h,
                    "h_above_threshold": *h >= (c - ExactScalar::one()) * ExactScalar::ratio(1, 24),
                    "allowed_pair": is_allowed_pair(c, h),
                }),
                None => json!({}),
            };
            Ok(Outcome::ok(&merge(report, extra)))
        }
        Command::OscillatorVerify { osc, check, n, m, level, order } => {
            caps.check("level", *level as u64)?;
            caps.check("order", *order as u64)?;
            let params = osc.params();
            let ns: Vec<i64> = n.map_or_else(|| (-3..=3).collect(), |n| vec![n]);
            let ms: Vec<i64> = m.map_or_else(|| (-3..=3).collect(), |m| vec![m]);
            let mut body = json!({
                "lambda": params.lambda,
                "q": params.q,
                "central_charge": params.central_charge(),
                "lowest_weight": params.lowest_weight(),
            });
            let mut pass = true;
            if matches!(check, OscillatorCheck::Bracket | OscillatorCheck::All) {
                let reports: Vec<_> = ns
                    .iter()
                    .flat_map(|&n| ms.iter().map(move |&m| (n, m)))
                    .map(|(n, m)| verify_virasoro_bracket(n, m, &params, *level))
                    .collect();
                pass &= reports.iter().all(|r| r.pass);
                body = merge(body, json!({ "brackets": reports }));
            }
            if matches!(check, OscillatorCheck::Hermiticity | OscillatorCheck::All) {
                let reports: Vec<_> = ns.iter().map(|&n| verify_hermiticity(n, &params, *level)).collect();
                pass &= reports.iter().all(|r| r.pass);
                body = merge(body, json!({ "hermiticity": reports }));
            }
            if matches!(check, OscillatorCheck::Character | OscillatorCheck::All) {
                let graded = oscillator_character(&params, *order);
                let closed = oscillator_character_closed_form(&params, *order);
                let ok = graded == closed && graded.offset() == &params.lowest_weight();
                pass &= ok;
                body = merge(body, json!({ "character": { "series": graded, "matches_closed_form": ok } }));
            }
            Ok(with_status(pass, &merge(body, json!({ "pass": pass }))))
        }
        Command::Character { kind, c, h, j, lambda, q, order, check_level } => {
            caps.check("order", *order as u64)?;
            caps.check("check_level", *check_level as u64)?;
            match kind {
                CharacterKind::Verma => {
                    let (c, h) =
                        (c.as_ref().ok_or(CliError::Missing("--c"))?, h.as_ref().ok_or(CliError::Missing("--h"))?);
                    Ok(Outcome::ok(&json!({ "kind": "verma", "c": c, "h": h, "character": char_verma(c, h, *order) })))
                }
                CharacterKind::C1 => {
                    let j = j.ok_or(CliError::Missing("--j"))?;
                    let validated = validate_irreducible_c1(j, *check_level);
                    let body = json!({
                        "kind": "c1",
                        "j": j,
                        "c": ExactScalar::one(),
                        "h": ExactScalar::from((j * j) as i64),
                        "character": char_irreducible_c1(j, *order),
                        "gram_rank_check_level": check_level,
                        "gram_rank_check": validated.is_ok(),
                    });
                    Ok(with_status(validated.is_ok(), &body))
                }
                CharacterKind::Generic => {
                    let (c, h) =
                        (c.as_ref().ok_or(CliError::Missing("--c"))?, h.as_ref().ok_or(CliError::Missing("--h"))?);
                    let body = match char_irreducible_generic_checked(c, h, *order, *check_level) {
                        Ok(chi) => json!({ "kind": "generic", "c": c, "h": h, "character": chi, "degenerate": null }),
                        Err(Error::DegenerateGram { level, rank, dim }) => json!({
                            "kind": "generic",
                            "c": c,
                            "h": h,
                            "character": null,
                            "degenerate": { "level": level, "rank": rank, "dim": dim },
                        }),
                        Err(e) => return Err(e.into()),
                    };
                    Ok(Outcome::ok(&merge(body, json!({ "gram_rank_check_level": check_level }))))
                }
                CharacterKind::Oscillator => {
                    let lambda = lambda.clone().ok_or(CliError::Missing("--lambda"))?;
                    let q = q.clone().ok_or(CliError::Missing("--q"))?;
                    let params = OscillatorParams::new(lambda, q);
                    let graded = oscillator_character(&params, *order);
                    let ok = graded == oscillator_character_closed_form(&params, *order);
                    let body = json!({
                        "kind": "oscillator",
                        "lambda": params.lambda,
                        "q": params.q,
                        "c": params.central_charge(),
                        "h": params.lowest_weight(),
                        "character": graded,
                        "matches_closed_form": ok,
                    });
                    Ok(with_status(ok, &body))
                }
            }
        }
        Command::Branch { jmax, order } => {
            caps.check("order", *order as u64)?;
            let report = verify_su21_branching(*jmax, *order)?;
            Ok(with_status(report.pass, &report))
        }
        Command::Wzw { series, rank, level, catalog, scan_rank, scan_level } => {
            let entries = if let Some(path) = catalog {
                let text = if path.as_os_str() == "-" {
                    std::io::read_to_string(std::io::stdin())
                } else {
                    std::fs::read_to_string(path)
                }
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                parse_catalog(&text)?
            } else if let Some(r) = scan_rank {
                full_catalog(*r, *scan_level)
            } else {
                let series: Series = series.as_deref().ok_or(CliError::Missing("--series"))?.parse()?;
                let rank = rank.ok_or(CliError::Missing("--rank"))?;
                let level = level.ok_or(CliError::Missing("--level"))?;
                vec![(simple_lie_data(series, rank)?, level)]
            };
            Ok(Outcome::ok(&scan_noncompact(&entries)?))
        }
        Command::Sl2Check { osc, n, level } => {
            caps.check("level", *level as u64)?;
            let params = osc.params();
            let ns: Vec<i64> = n.map_or_else(|| vec![1, 2, 3], |n| vec![n]);
            if let Some(&bad) = ns.iter().find(|&&n| n < 1) {
                return Err(Error::InvalidParameter(format!("sl(2) index n = {bad} must be ≥ 1")).into());
            }
            let reports: Vec<_> = ns.iter().map(|&n| sl2_triple_check(n, &params, *level)).collect();
            let pass = reports.iter().all(|r| r.pass);
            Ok(with_status(
                pass,
                &json!({ "central_charge": params.central_charge(), "triples": reports, "pass": pass }),
            ))
        }
    }
}
