//! Command-line surface for d-distinct (s,t)-core maximum hook lengths.
//!
//! Exit codes: 0 success, 1 usage or validation error (render folds all of
//! its failures here), 2 infinite family (gcd(s,t) > d), 3 verification
//! mismatch.

mod render;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dcores::core_poset::{
    bottom_edge, gap_poset, ledge, ledge_len_formula, CoreParams, MAX_MATERIALIZED,
};
use dcores::maxhook::{max_hook, MaxHookResult};
use dcores::oracle;
use dcores::Error;

#[derive(Parser)]
#[command(
    name = "dcores",
    version,
    about = "Maximum hook length of (s,t)-core partitions with d-distinct parts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderTarget {
    /// ASCII Young diagram of the witness, hook lengths in the cells
    Young,
    /// DOT digraph of the gap poset with the witness ideal filled
    Hasse,
    /// DOT path of the bottom edge with ledges colored by residue
    Edge,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the maximum hook length H and the formula branch taken
    Maxhook {
        s: i64,
        t: i64,
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute H together with the maximizing partition and its β-set
    Witness {
        s: i64,
        t: i64,
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-derive H by brute force and compare with the closed form
    Verify {
        s: i64,
        t: i64,
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every d-distinct (s,t)-core β-set (d = 0 lists all cores)
    Enumerate {
        s: i64,
        t: i64,
        d: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the gap poset of coprime (s,t): Frobenius number, edge order, ledges
    Info {
        s: i64,
        t: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a diagram (d may be omitted for `edge`)
    Render {
        target: RenderTarget,
        s: i64,
        t: i64,
        d: Option<i64>,
        /// Write the diagram to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn silent(code: u8) -> Self {
        Failure {
            code,
            message: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InfiniteFamily { .. } => 2,
            Error::InvalidInput(_) | Error::Degenerate(_) => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are not failures; anything else is usage
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !failure.message.is_empty() {
                eprintln!("{}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Maxhook { s, t, d, format } => cmd_maxhook(s, t, d, format),
        Command::Witness { s, t, d, format } => cmd_witness(s, t, d, format),
        Command::Verify { s, t, d, format } => cmd_verify(s, t, d, format),
        Command::Enumerate { s, t, d, format } => cmd_enumerate(s, t, d, format),
        Command::Info { s, t, format } => cmd_info(s, t, format),
        Command::Render {
            target,
            s,
            t,
            d,
            out,
        } => cmd_render(target, s, t, d, out),
    }
}

#[derive(Serialize)]
struct MaxHookJson {
    s: i64,
    t: i64,
    d: i64,
    #[serde(rename = "H")]
    h: i64,
    case: &'static str,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    b: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_bar: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_tilde: Option<i64>,
}

impl MaxHookJson {
    fn new(s: i64, t: i64, d: i64, result: &MaxHookResult) -> Self {
        MaxHookJson {
            s,
            t,
            d,
            h: result.h,
            case: result.case.as_str(),
            b: result.b,
            s_bar: result.s_bar,
            s_tilde: result.s_tilde,
        }
    }
}

fn print_result_text(result: &MaxHookResult) {
    println!("H = {}", result.h);
    println!("case = {}", result.case);
    if let (Some(b), Some(s_bar), Some(s_tilde)) = (result.b, result.s_bar, result.s_tilde) {
        println!("B = {b}");
        println!("s_bar = {s_bar}");
        println!("s_tilde = {s_tilde}");
    }
}

fn cmd_maxhook(s: i64, t: i64, d: i64, format: Format) -> Result<(), Failure> {
    let result = max_hook(s, t, d)?;
    match format {
        Format::Text => print_result_text(&result),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&MaxHookJson::new(s, t, d, &result)).unwrap()
        ),
    }
    Ok(())
}

fn cmd_witness(s: i64, t: i64, d: i64, format: Format) -> Result<(), Failure> {
    let result = max_hook(s, t, d)?;
    match format {
        Format::Text => {
            print_result_text(&result);
            println!("beta = {:?}", result.witness_beta.elements_desc());
            println!("witness = {:?}", result.witness.parts());
        }
        Format::Json => {
            #[derive(Serialize)]
            struct WitnessJson {
                #[serde(flatten)]
                base: MaxHookJson,
                beta: Vec<i64>,
                witness: Vec<i64>,
            }
            let payload = WitnessJson {
                base: MaxHookJson::new(s, t, d, &result),
                beta: result.witness_beta.elements_desc().to_vec(),
                witness: result.witness.parts().to_vec(),
            };
            println!("{}", serde_json::to_string(&payload).unwrap());
        }
    }
    Ok(())
}

fn cmd_verify(s: i64, t: i64, d: i64, format: Format) -> Result<(), Failure> {
    #[derive(Serialize)]
    struct VerifyJson {
        s: i64,
        t: i64,
        d: i64,
        status: &'static str,
        #[serde(rename = "H", skip_serializing_if = "Option::is_none")]
        h: Option<i64>,
        #[serde(rename = "formula_H", skip_serializing_if = "Option::is_none")]
        formula_h: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        formula_case: Option<&'static str>,
        #[serde(rename = "oracle_H", skip_serializing_if = "Option::is_none")]
        oracle_h: Option<i64>,
    }

    let result = max_hook(s, t, d)?;
    let report = oracle::max_hook_scan(s, t, d)?;
    if report.h_true == Some(result.h) {
        match format {
            Format::Text => println!("OK H={}", result.h),
            Format::Json => println!(
                "{}",
                serde_json::to_string(&VerifyJson {
                    s,
                    t,
                    d,
                    status: "ok",
                    h: Some(result.h),
                    formula_h: None,
                    formula_case: None,
                    oracle_h: None,
                })
                .unwrap()
            ),
        }
        Ok(())
    } else {
        match format {
            Format::Text => {
                println!("MISMATCH s={s} t={t} d={d}");
                println!("formula H = {} (case {})", result.h, result.case);
                match report.h_true {
                    Some(h) => println!("oracle H = {h}"),
                    None => println!("oracle H = none"),
                }
            }
            Format::Json => println!(
                "{}",
                serde_json::to_string(&VerifyJson {
                    s,
                    t,
                    d,
                    status: "mismatch",
                    h: None,
                    formula_h: Some(result.h),
                    formula_case: Some(result.case.as_str()),
                    oracle_h: report.h_true,
                })
                .unwrap()
            ),
        }
        Err(Failure::silent(3))
    }
}

fn cmd_enumerate(s: i64, t: i64, d: i64, format: Format) -> Result<(), Failure> {
    let cores = oracle::enumerate_cores(s, t, d)?;
    match format {
        Format::Text => {
            println!("count = {}", cores.len());
            for beta in &cores {
                println!("{:?}", beta.elements_desc());
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct EnumerateJson {
                s: i64,
                t: i64,
                d: i64,
                count: usize,
                betas: Vec<Vec<i64>>,
            }
            let payload = EnumerateJson {
                s,
                t,
                d,
                count: cores.len(),
                betas: cores.iter().map(|b| b.elements_desc().to_vec()).collect(),
            };
            println!("{}", serde_json::to_string(&payload).unwrap());
        }
    }
    Ok(())
}

fn coprime_params(s: i64, t: i64) -> Result<CoreParams, Failure> {
    let params = CoreParams::from_st(s, t)?;
    if params.frobenius() > MAX_MATERIALIZED {
        return Err(Failure::usage(format!(
            "gap poset with M = {} is beyond desk scale",
            params.frobenius()
        )));
    }
    Ok(params)
}

fn cmd_info(s: i64, t: i64, format: Format) -> Result<(), Failure> {
    let params = coprime_params(s, t)?;
    let poset = gap_poset(&params);
    let edge = bottom_edge(&params);
    let ledges: Vec<_> = (0..params.k()).map(|i| ledge(i, &params)).collect();
    match format {
        Format::Text => {
            println!(
                "s = {s}, t = {t}, k = {}, s_bar = {}",
                params.k(),
                params.s_bar()
            );
            println!("M = {}", params.frobenius());
            println!("|P| = {}", poset.len());
            let order: Vec<String> = edge.ordered().iter().map(i64::to_string).collect();
            println!("E order: {}", order.join(", "));
            for lg in &ledges {
                let members: Vec<String> = lg.members().iter().map(i64::to_string).collect();
                println!(
                    "L_{} = {{{}}} (formula {}, enumerated {})",
                    lg.residue(),
                    members.join(", "),
                    ledge_len_formula(lg.residue(), &params),
                    lg.len()
                );
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct LedgeJson {
                residue: i64,
                members: Vec<i64>,
                formula_len: i64,
            }
            #[derive(Serialize)]
            struct InfoJson {
                s: i64,
                t: i64,
                k: i64,
                s_bar: i64,
                #[serde(rename = "M")]
                m: i64,
                p_size: usize,
                e_order: Vec<i64>,
                ledges: Vec<LedgeJson>,
            }
            let payload = InfoJson {
                s,
                t,
                k: params.k(),
                s_bar: params.s_bar(),
                m: params.frobenius(),
                p_size: poset.len(),
                e_order: edge.ordered().to_vec(),
                ledges: ledges
                    .iter()
                    .map(|lg| LedgeJson {
                        residue: lg.residue(),
                        members: lg.members().to_vec(),
                        formula_len: ledge_len_formula(lg.residue(), &params),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&payload).unwrap());
        }
    }
    Ok(())
}

fn cmd_render(
    target: RenderTarget,
    s: i64,
    t: i64,
    d: Option<i64>,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let require_d =
        || d.ok_or_else(|| Failure::usage("d is required for this render target".to_string()));
    let content = render_content(target, s, t, require_d).map_err(|mut failure| {
        // render collapses every failure, infinite families included, to usage
        failure.code = 1;
        failure
    })?;
    match out {
        Some(path) => fs::write(&path, content)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn render_content(
    target: RenderTarget,
    s: i64,
    t: i64,
    require_d: impl Fn() -> Result<i64, Failure>,
) -> Result<String, Failure> {
    Ok(match target {
        RenderTarget::Young => {
            let result = max_hook(s, t, require_d()?)?;
            render::young_ascii(&result.witness.hook_grid())
        }
        RenderTarget::Hasse => {
            let d = require_d()?;
            let params = coprime_params(s, t)?;
            let result = max_hook(s, t, d)?;
            let filled: BTreeSet<i64> = result.witness_beta.iter_desc().collect();
            render::hasse_dot(&gap_poset(&params), &filled)
        }
        RenderTarget::Edge => {
            let params = coprime_params(s, t)?;
            render::edge_dot(&bottom_edge(&params))
        }
    })
}
