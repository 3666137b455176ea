//! Command-line front end. Every command prints one JSON response
//! `{"status", "result", "provenance"}` (or a plain-text rendering with
//! `--table`) and maps failures to exit codes: 2 for invalid input, 3 for an
//! exhausted enumeration budget, 4 for a census whose oracle disagrees.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::Pow;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::arith::binomial;
use crate::covers::{
    census, cornalba_pair_of, count_ram_contained, count_ram_exact, count_unramified_nontrivial,
    cover_from_sigma,
};
use crate::error::{Error, Result};
use crate::galois::{linalg::rank, Character, CyclicExtension, Sandbox};
use crate::harrison::{
    adelically_equivalent, exists_rational, filtration_size, is_rational, ramification,
    stratum_size, Budget, CurveCtx,
};
use crate::json::{AdeleJson, AlgebraJson, DivisorJson, SigmaJson, SuperellipticJson};
use crate::rotation::{rotation_data, sigma_rotation_data, RotationData};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_CENSUS_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "coverkit",
    version,
    about = "Classify and count p-cyclic covers of curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Prime degree of the covers
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Genus of the base curve
    #[arg(long, global = true, default_value_t = 0)]
    g: u32,
    /// Size of the base field for ring commands
    #[arg(long, global = true)]
    q: Option<u64>,
    /// Number of branch points, counted exactly
    #[arg(long, global = true)]
    r_exact: Option<u32>,
    /// Size of the set containing the branch points
    #[arg(long, global = true)]
    r_contained: Option<u32>,
    /// Largest r for the census
    #[arg(long, global = true)]
    max_r: Option<u32>,
    /// Read the payload from this file instead of standard input
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Emit JSON (default)
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a plain-text table
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Whether an adelic class comes from the function field
    Exists,
    /// Compare two function-field classes
    Equivalent,
    /// Cover class, Cornalba pair and rotation numbers of a class
    Classify,
    /// Ramification locus and indices of an adelic class
    Ramification,
    /// Closed-form cover counts
    Count,
    /// Sizes of the ramification filtration and strata
    Strata,
    /// Rotation numbers of a superelliptic cover
    Rotation,
    /// Galois test and Harrison class of a cyclic algebra
    RingCheck,
    /// Harrison product of two cyclic algebras
    RingProduct,
    /// Closed forms against exhaustive orbit counts for r = 0..=max-r
    Census,
}

struct Outcome {
    result: Value,
    provenance: &'static [&'static str],
    exit: i32,
}

impl Outcome {
    fn ok(result: Value, provenance: &'static [&'static str]) -> Self {
        Outcome {
            result,
            provenance,
            exit: EXIT_OK,
        }
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Lib(e) => e.code(),
            Failure::Io(_) => "io_error",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }

    fn exit(&self) -> i32 {
        match self {
            Failure::Lib(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_INVALID,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run(
    args: impl IntoIterator<Item = String>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_INVALID
                }
            };
        }
    };
    let (response, exit) = match dispatch(&cli, stdin) {
        Ok(out) => (
            json!({"status": "ok", "result": out.result, "provenance": out.provenance}),
            out.exit,
        ),
        Err(f) => (
            json!({
                "status": "error",
                "result": {"code": f.code(), "message": f.message()},
                "provenance": [],
            }),
            f.exit(),
        ),
    };
    let text = if cli.table {
        render_table(&response)
    } else {
        let mut s = serde_json::to_string(&response).expect("values serialize");
        s.push('\n');
        s
    };
    if stdout.write_all(text.as_bytes()).is_err() {
        return EXIT_INVALID;
    }
    exit
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> std::result::Result<Outcome, Failure> {
    match cli.command {
        Command::Exists => {
            let ctx = curve(cli)?;
            let payload: AdeleJson = payload(cli, stdin)?;
            let a = payload.to_class(&ctx)?;
            let mut result = Map::new();
            match exists_rational(&a, &ctx) {
                Some(s) => {
                    result.insert("exists".into(), json!(true));
                    result.insert("witness".into(), to_value(&SigmaJson::from_class(&s)));
                }
                None => {
                    result.insert("exists".into(), json!(false));
                }
            }
            Ok(Outcome::ok(
                Value::Object(result),
                &["zero-sum rationality criterion", "Harrison exact sequence"],
            ))
        }
        Command::Equivalent => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Pair {
                a: SigmaJson,
                b: SigmaJson,
            }
            let ctx = curve(cli)?;
            let pair: Pair = payload(cli, stdin)?;
            let (a, b) = (pair.a.to_class(&ctx)?, pair.b.to_class(&ctx)?);
            Ok(Outcome::ok(
                json!({
                    "equivalent": adelically_equivalent(&a, &b)?,
                    "equal": a == b,
                    "same_cover": cover_from_sigma(&a) == cover_from_sigma(&b),
                }),
                &["Harrison exact sequence", "Jacobian p-torsion kernel"],
            ))
        }
        Command::Classify => {
            let ctx = curve(cli)?;
            let s = payload::<SigmaJson>(cli, stdin)?.to_class(&ctx)?;
            let cover = cover_from_sigma(&s);
            let pair = cornalba_pair_of(&cover);
            Ok(Outcome::ok(
                json!({
                    "cover": {
                        "representative": to_value(&SigmaJson::from_class(cover.representative())),
                        "orbit_size": cover.orbit_size(),
                        "trivial": cover.is_trivial(),
                    },
                    "ramification": cover.ramification_locus().iter().map(|p| p.label()).collect::<Vec<_>>(),
                    "cornalba": {
                        "d": to_value(&DivisorJson::from_divisor(pair.divisor())),
                        "deg_l": pair.degree_l().to_string(),
                        "jac_l": pair.jac_l().coords(),
                    },
                    "rotation": rotation_value(&sigma_rotation_data(&s)),
                }),
                &[
                    "Aut(C_p) orbits of Harrison classes",
                    "Cornalba pair correspondence",
                    "rotation numbers as inverse valuations",
                ],
            ))
        }
        Command::Ramification => {
            let ctx = curve(cli)?;
            let a = payload::<AdeleJson>(cli, stdin)?.to_class(&ctx)?;
            let (locus, profile) = ramification(&a);
            let profile: Map<String, Value> = profile
                .iter()
                .map(|(pt, e)| (pt.label().to_string(), json!(e)))
                .collect();
            Ok(Outcome::ok(
                json!({
                    "locus": locus.iter().map(|p| p.label()).collect::<Vec<_>>(),
                    "profile": profile,
                    "rational": is_rational(&a),
                }),
                &["ramification index e_x = p / (p, v_x)"],
            ))
        }
        Command::Count => {
            let p = prime(cli)?;
            let count = match (cli.r_exact, cli.r_contained) {
                (Some(_), Some(_)) => {
                    return Err(
                        Error::invalid("give at most one of --r-exact and --r-contained").into(),
                    )
                }
                (Some(r), None) => count_ram_exact(p, cli.g, r),
                (None, Some(r)) => count_ram_contained(p, cli.g, r),
                (None, None) => count_unramified_nontrivial(p, cli.g),
            };
            Ok(Outcome::ok(
                json!({"count": count.to_string()}),
                &["closed-form cover counts"],
            ))
        }
        Command::Strata => {
            let p = prime(cli)?;
            let r = cli
                .r_contained
                .ok_or_else(|| Error::invalid("--r-contained is required"))?;
            let by_size: Vec<String> = (0..=r)
                .map(|k| {
                    let choose = binomial(r as u64, k as u64).to_biguint().unwrap();
                    (choose * BigUint::from(p - 1).pow(k)).to_string()
                })
                .collect();
            Ok(Outcome::ok(
                json!({
                    "filtration": filtration_size(r as usize, p).to_string(),
                    "stratum": stratum_size(r as usize, p).to_string(),
                    "strata_by_support_size": by_size,
                }),
                &["ramification filtration", "ramification stratification"],
            ))
        }
        Command::Rotation => {
            let data = payload::<SuperellipticJson>(cli, stdin)?.to_data(cli.p)?;
            Ok(Outcome::ok(
                json!({"rotation": rotation_value(&rotation_data(&data))}),
                &[
                    "local Kummer pairing",
                    "rotation numbers as inverse valuations",
                ],
            ))
        }
        Command::RingCheck => {
            let p = prime(cli)?;
            let alg: AlgebraJson = payload(cli, stdin)?;
            let lab = sandbox(cli, p, alg.q)?;
            let ext = alg.to_extension(p)?;
            Ok(Outcome::ok(
                ring_summary(&lab, &ext)?,
                &[
                    "h-map Galois criterion",
                    "primitive elements",
                    "Kummer sequence",
                ],
            ))
        }
        Command::RingProduct => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Pair {
                a: AlgebraJson,
                b: AlgebraJson,
            }
            let p = prime(cli)?;
            let pair: Pair = payload(cli, stdin)?;
            if pair.a.q != pair.b.q {
                return Err(Error::ContextMismatch("algebras over different fields".into()).into());
            }
            let lab = sandbox(cli, p, pair.a.q)?;
            let (a, b) = (pair.a.to_extension(p)?, pair.b.to_extension(p)?);
            for ext in [&a, &b] {
                if !lab.is_galois(ext)? {
                    return Err(Error::invalid("both factors must be Galois").into());
                }
            }
            let product = lab.harrison_product(&a, &b)?;
            let mut summary = ring_summary(&lab, &product)?;
            summary["product"] = to_value(&AlgebraJson::from_extension(&product));
            Ok(Outcome::ok(
                summary,
                &["Harrison product over eigenspaces", "Kummer sequence"],
            ))
        }
        Command::Census => {
            let ctx = curve(cli)?;
            let max_r = cli
                .max_r
                .ok_or_else(|| Error::invalid("--max-r is required"))?;
            let table = census(&ctx, max_r, Budget::from_env());
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "r": row.r,
                        "count_contained": row.count_contained.to_string(),
                        "count_exact": row.count_exact.to_string(),
                        "oracle_contained": row.oracle_contained.to_string(),
                        "oracle_exact": row.oracle_exact.to_string(),
                        "agrees": row.agrees(),
                    })
                })
                .collect();
            let exit = if !table.all_agree() {
                EXIT_CENSUS_MISMATCH
            } else if table.truncated_at.is_some() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            Ok(Outcome {
                result: json!({
                    "p": table.p,
                    "g": table.genus,
                    "rows": rows,
                    "all_agree": table.all_agree(),
                    "truncated_at": table.truncated_at,
                }),
                provenance: &["closed-form cover counts", "exhaustive orbit enumeration"],
                exit,
            })
        }
    }
}

fn prime(cli: &Cli) -> Result<u64> {
    cli.p.ok_or_else(|| Error::invalid("--p is required"))
}

fn curve(cli: &Cli) -> Result<CurveCtx> {
    CurveCtx::new(prime(cli)?, cli.g)
}

fn sandbox(cli: &Cli, p: u64, q: u64) -> Result<Sandbox> {
    if let Some(flag) = cli.q {
        if flag != q {
            return Err(Error::ContextMismatch(format!(
                "payload q={q} but --q {flag}"
            )));
        }
    }
    Sandbox::new(p, q)
}

fn payload<T: serde::de::DeserializeOwned>(
    cli: &Cli,
    stdin: &mut dyn Read,
) -> std::result::Result<T, Failure> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| {
        Failure::Lib(Error::Invalid(format!(
            "payload does not match the schema: {e}"
        )))
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("wire types serialize")
}

fn rotation_value(r: &RotationData) -> Value {
    Value::Object(
        r.iter()
            .map(|(pt, u)| (pt.label().to_string(), json!(u.value())))
            .collect(),
    )
}

fn ring_summary(lab: &Sandbox, ext: &CyclicExtension) -> Result<Value> {
    let galois = lab.is_galois(ext)?;
    let dims: Vec<usize> = Character::all(lab.p())
        .map(|chi| lab.eigenspace(ext, chi).len())
        .collect();
    let (unit, class) = if galois {
        (
            Some(lab.kummer_unit(ext, lab.chi())?),
            Some(lab.harrison_class(ext, lab.chi())?),
        )
    } else {
        (None, None)
    };
    Ok(json!({
        "galois": galois,
        "dim": ext.dim(),
        "fixed_dim": dims[0],
        "eigenspace_dims": dims,
        "h_rank": rank(lab.field(), &lab.h_matrix(ext)),
        "kummer_unit": unit,
        "harrison_class": class,
        "condition_three": lab.condition_three_on_split(ext),
    }))
}

fn render_table(response: &Value) -> String {
    let mut out = String::new();
    let status = response["status"].as_str().unwrap_or("error");
    out.push_str(&format!("status\t{status}\n"));
    let result = &response["result"];
    if let Some(rows) = result.get("rows").and_then(Value::as_array) {
        out.push_str(&format!("p\t{}\ng\t{}\n", result["p"], result["g"]));
        out.push_str("r\tcount_contained\tcount_exact\toracle_contained\toracle_exact\tagrees\n");
        for row in rows {
            let cells: Vec<String> = [
                "r",
                "count_contained",
                "count_exact",
                "oracle_contained",
                "oracle_exact",
                "agrees",
            ]
            .iter()
            .map(|k| scalar(&row[*k]))
            .collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        if let Some(r) = result["truncated_at"].as_u64() {
            out.push_str(&format!("# truncated at r={r}: budget exceeded\n"));
        }
    } else {
        flatten("", result, &mut out);
    }
    if let Some(tags) = response["provenance"].as_array() {
        for tag in tags {
            out.push_str(&format!("# {}\n", scalar(tag)));
        }
    }
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, child) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, child, out);
            }
        }
        other => out.push_str(&format!("{prefix}\t{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
