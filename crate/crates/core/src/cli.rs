//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with everything that would be written to stdout and stderr, so the binary
//! is a thin wrapper and tests can drive every subcommand in-process.

use std::path::Path;
use std::sync::OnceLock;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Number, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{parse_poly2, AbelianGroup, LaurentPoly1, LaurentPoly2, RootOfUnity};
use crate::braid::{parse_braid, parse_braid_brackets, BraidWord};
use crate::cover::{compare_covers, cover_report, h1_cyclic_cover, Assertions, CompareVerdict, CoverReport};
use crate::error::{Error, Result};
use crate::invariants::{alexander, signature_sum, tl_signature};
use crate::link::{multivar_alexander, parse_pd, LinkPolynomial, PdCode};
use crate::murasugi::{murasugi_lift, ns_twin_report, ns_twin_report_pd, Branch, TwinReport, DELTA_U_TEXT};
use crate::seifert::seifert_matrix;

/// Environment variable selecting the default output mode (`text` or `json`).
pub const OUTPUT_ENV: &str = "TCOVER_OUTPUT";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "tcover",
    about = "Exact invariants of transverse braid closures and their contact cyclic branched covers"
)]
struct Cli {
    /// Machine-readable output (same as TCOVER_OUTPUT=json).
    #[arg(long, global = true)]
    json: bool,

    /// Default output mode.
    #[arg(long, env = OUTPUT_ENV, value_enum, default_value = "text", global = true, hide_env_values = true)]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct BraidInput {
    /// Braid as `n=<strands>: <letters>` or `[l1,l2,...]`.
    braid: String,

    /// Strand count for the bracket form.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct CoverOrder {
    /// Cover order (>= 2).
    #[arg(short = 'n', long = "order", value_name = "N")]
    n: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Self-linking number of the transverse closure.
    Sl(BraidInput),
    /// Seifert matrix of the Bennequin surface.
    Seifert(BraidInput),
    /// Alexander polynomial of a braid closure or a PD code.
    Alexander {
        /// Braid as `n=<strands>: <letters>` or `[l1,l2,...]`.
        #[arg(required_unless_present = "pd", conflicts_with = "pd")]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// PD code file (or literal PD text).
        #[arg(long)]
        pd: Option<String>,
        /// Reverse the orientation of component K (1-based) of the PD code.
        #[arg(long, value_name = "K", requires = "pd")]
        reverse_component: Option<usize>,
    },
    /// Tristram-Levine signature and nullity.
    Signature {
        #[command(flatten)]
        input: BraidInput,
        /// Root of unity exp(2 pi i k/n) written `k/n`.
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
    },
    /// Sum of Tristram-Levine signatures over all n-th roots of unity.
    SignatureSum {
        #[command(flatten)]
        input: BraidInput,
        #[command(flatten)]
        order: CoverOrder,
    },
    /// First homology of the n-fold cyclic branched cover.
    H1 {
        #[command(flatten)]
        input: BraidInput,
        #[command(flatten)]
        order: CoverOrder,
    },
    /// d3-invariant of the contact n-fold cyclic branched cover.
    D3 {
        #[command(flatten)]
        input: BraidInput,
        #[command(flatten)]
        order: CoverOrder,
    },
    /// Full invariant report of the contact n-fold cyclic branched cover.
    Report {
        #[command(flatten)]
        input: BraidInput,
        #[command(flatten)]
        order: CoverOrder,
        /// Assert that the braid is a negative stabilization (not checked).
        #[arg(long)]
        assert_stabilized: bool,
    },
    /// Compare the covers of two braid closures.
    Compare {
        braid1: String,
        braid2: String,
        #[arg(long)]
        strands: Option<usize>,
        #[command(flatten)]
        order: CoverOrder,
        /// Assert that the two closures are smoothly isotopic (not checked).
        #[arg(long)]
        smoothly_isotopic: bool,
    },
    /// Murasugi lift of a two-variable polynomial.
    Murasugi {
        /// Polynomial file or expression in x, y.
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        order: CoverOrder,
        #[arg(long, default_value = "y")]
        branch: String,
    },
    /// Both Murasugi lifts and their breadths.
    Twins {
        /// Polynomial file or expression in x, y.
        #[arg(long, required_unless_present = "pd", conflicts_with = "pd")]
        poly: Option<String>,
        /// PD code file (or literal PD text) of a two-component link.
        #[arg(long)]
        pd: Option<String>,
        #[command(flatten)]
        order: CoverOrder,
    },
}

/// `sha256` of the shipped polynomial file.
pub fn data_checksum() -> String {
    hex::encode(Sha256::digest(DELTA_U_TEXT.as_bytes()))
}

fn version_string() -> &'static str {
    static VERSION: OnceLock<String> = OnceLock::new();
    VERSION.get_or_init(|| {
        format!(
            "{} (delta_U.txt sha256 {})",
            env!("CARGO_PKG_VERSION"),
            data_checksum()
        )
    })
}

/// Command definition with the runtime version string attached.
pub fn command() -> clap::Command {
    Cli::command().version(version_string())
}

/// Run one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = match command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: e.render().to_string(),
            }
        }
    };
    let json_mode = cli.json || cli.output == OutputMode::Json;
    match execute(&cli.command) {
        Ok(out) => Outcome {
            code: 0,
            stdout: if json_mode {
                let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
                s.push('\n');
                s
            } else {
                out.text
            },
            stderr: String::new(),
        },
        Err(err) => {
            let code = if err.is_usage_error() { 2 } else { 1 };
            let stdout = if json_mode {
                let v = json!({"error": err.name(), "message": err.to_string()});
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            } else {
                String::new()
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {}: {}\n", err.name(), err),
            }
        }
    }
}

struct Rendered {
    text: String,
    json: Value,
}

fn read_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    if text.trim_start().starts_with('[') {
        parse_braid_brackets(text, strands)
    } else {
        let b = parse_braid(text)?;
        match strands {
            Some(s) if s != b.strands() => Err(Error::InvalidArgument(format!(
                "--strands {s} contradicts the braid's own count {}",
                b.strands()
            ))),
            _ => Ok(b),
        }
    }
}

/// Contents of `arg` if it names a readable file, otherwise `arg` itself.
fn file_or_literal(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn read_pd(arg: &str) -> Result<PdCode> {
    parse_pd(&file_or_literal(arg)?)
}

fn read_poly(arg: &str) -> Result<LaurentPoly2> {
    parse_poly2(&file_or_literal(arg)?)
}

fn big(n: &BigInt) -> Value {
    Value::Number(serde_json::from_str::<Number>(&n.to_string()).expect("integers are JSON numbers"))
}

fn poly1_json(p: &LaurentPoly1) -> Value {
    json!({
        "text": p.to_string(),
        "terms": p.terms().map(|(e, c)| json!([e, big(c)])).collect::<Vec<_>>(),
    })
}

fn poly2_json(p: &LaurentPoly2) -> Value {
    json!({
        "text": p.to_string(),
        "terms": p.terms().map(|((a, b), c)| json!([a, b, big(c)])).collect::<Vec<_>>(),
    })
}

fn rational_fields(map: &mut Map<String, Value>, prefix: &str, q: &BigRational) {
    map.insert(format!("{prefix}_numerator"), big(q.numer()));
    map.insert(format!("{prefix}_denominator"), big(q.denom()));
}

fn h1_fields(map: &mut Map<String, Value>, g: &AbelianGroup) {
    map.insert(
        "h1_invariant_factors".into(),
        Value::Array(g.invariant_factors().iter().map(big).collect()),
    );
    map.insert("h1_free_rank".into(), json!(g.free_rank()));
    map.insert("h1_order".into(), g.order().as_ref().map_or(Value::Null, big));
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn report_json(r: &CoverReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("braid".into(), json!(r.braid.to_string()));
    m.insert("n".into(), json!(r.n));
    h1_fields(&mut m, &r.h1);
    rational_fields(&mut m, "d3", &r.d3);
    m.insert("euler_class_zero".into(), json!(r.euler_class_zero));
    m.insert("sl".into(), json!(r.sl));
    m.insert("signature_sum".into(), json!(r.signature_sum));
    m.insert("alexander".into(), poly1_json(&r.alexander));
    m.insert("annotations".into(), json!(r.annotations));
    m
}

fn report_text(r: &CoverReport) -> String {
    let order = r
        .h1_order
        .as_ref()
        .map_or_else(|| "infinite".to_string(), |o| o.to_string());
    let mut s = format!(
        "braid: {}\nn = {}\nH1 = {} (order {})\nd3 = {}\neuler class = 0\nsl = {}\nsignature sum = {}\nalexander = {}\n",
        r.braid,
        r.n,
        r.h1,
        order,
        fmt_rational(&r.d3),
        r.sl,
        r.signature_sum,
        r.alexander
    );
    for a in &r.annotations {
        s.push_str(&format!("note: {a}\n"));
    }
    s
}

fn verdict_names(v: &CompareVerdict) -> (String, Value) {
    match v {
        CompareVerdict::DistinguishedSmoothly(w) => ("DistinguishedSmoothly".into(), json!(format!("{w:?}"))),
        other => (other.to_string(), Value::Null),
    }
}

fn twin_json(r: &TwinReport) -> Value {
    json!({
        "n": r.n,
        "lift1": poly1_json(&r.lift1),
        "lift2": poly1_json(&r.lift2),
        "breadth1": r.breadth1,
        "breadth2": r.breadth2,
        "bound1": r.bound1,
        "bound2": r.bound2,
        "verdict": r.verdict.to_string(),
        "linking_number": r.linking_number,
        "provenance": r.provenance,
        "annotations": r.annotations,
    })
}

fn twin_text(r: &TwinReport) -> String {
    let mut s = format!(
        "n = {}\nlift1 (y branch) = {}\nlift2 (x branch) = {}\nbreadth1 = {}\nbreadth2 = {}\nverdict: {}\n",
        r.n, r.lift1, r.lift2, r.breadth1, r.breadth2, r.verdict
    );
    if let Some(lk) = r.linking_number {
        s.push_str(&format!("linking number = {lk}\n"));
    }
    for a in &r.annotations {
        s.push_str(&format!("note: {a}\n"));
    }
    s
}

fn execute(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::Sl(input) => {
            let b = read_braid(&input.braid, input.strands)?;
            let sl = b.self_linking()?;
            Ok(Rendered {
                text: format!("sl = {sl}\n"),
                json: json!({"braid": b.to_string(), "sl": sl}),
            })
        }
        Command::Seifert(input) => {
            let b = read_braid(&input.braid, input.strands)?;
            let s = seifert_matrix(&b)?;
            let rows: Vec<Value> = s
                .matrix()
                .to_rows()
                .iter()
                .map(|row| Value::Array(row.iter().map(big).collect()))
                .collect();
            Ok(Rendered {
                text: format!("{}\n", s.matrix()),
                json: json!({
                    "braid": b.to_string(),
                    "size": s.size(),
                    "genus": s.genus(),
                    "matrix": rows,
                }),
            })
        }
        Command::Alexander {
            braid,
            strands,
            pd,
            reverse_component,
        } => {
            if let Some(pd_arg) = pd {
                let mut code = read_pd(pd_arg)?;
                if let Some(k) = reverse_component {
                    if *k == 0 {
                        return Err(Error::InvalidArgument("components are numbered from 1".into()));
                    }
                    code = code.reverse_component(k - 1)?;
                }
                let poly = multivar_alexander(&code)?;
                let mut m = Map::new();
                m.insert("source".into(), json!("pd"));
                m.insert("components".into(), json!(code.components()));
                let mut text = format!("{poly}\n");
                match &poly {
                    LinkPolynomial::Knot(p) => {
                        m.insert("alexander".into(), poly1_json(p));
                    }
                    LinkPolynomial::Link(p) => {
                        let lk = code.linking_number()?;
                        m.insert("alexander".into(), poly2_json(p));
                        m.insert("linking_number".into(), json!(lk));
                        text.push_str(&format!("linking number = {lk}\n"));
                    }
                }
                Ok(Rendered {
                    text,
                    json: Value::Object(m),
                })
            } else {
                let text = braid.as_deref().expect("clap enforces an input");
                let b = read_braid(text, *strands)?;
                let delta = alexander(&seifert_matrix(&b)?);
                Ok(Rendered {
                    text: format!("{delta}\n"),
                    json: json!({
                        "source": "braid",
                        "braid": b.to_string(),
                        "alexander": poly1_json(&delta),
                    }),
                })
            }
        }
        Command::Signature { input, omega } => {
            let b = read_braid(&input.braid, input.strands)?;
            let w: RootOfUnity = omega.parse()?;
            let s = tl_signature(&seifert_matrix(&b)?, w);
            Ok(Rendered {
                text: format!("signature = {}\nnullity = {}\nomega = {}\n", s.signature, s.nullity, w),
                json: json!({
                    "braid": b.to_string(),
                    "omega_numerator": w.numerator(),
                    "omega_order": w.order(),
                    "signature": s.signature,
                    "nullity": s.nullity,
                }),
            })
        }
        Command::SignatureSum { input, order } => {
            let b = read_braid(&input.braid, input.strands)?;
            check_order(order.n)?;
            let s = signature_sum(&seifert_matrix(&b)?, order.n);
            Ok(Rendered {
                text: format!("signature sum = {s}\n"),
                json: json!({"braid": b.to_string(), "n": order.n, "signature_sum": s}),
            })
        }
        Command::H1 { input, order } => {
            let b = read_braid(&input.braid, input.strands)?;
            check_order(order.n)?;
            let g = h1_cyclic_cover(&seifert_matrix(&b)?, order.n)?;
            let mut m = Map::new();
            m.insert("braid".into(), json!(b.to_string()));
            m.insert("n".into(), json!(order.n));
            h1_fields(&mut m, &g);
            Ok(Rendered {
                text: format!("H1 = {g}\n"),
                json: Value::Object(m),
            })
        }
        Command::D3 { input, order } => {
            let b = read_braid(&input.braid, input.strands)?;
            check_order(order.n)?;
            let d3 = crate::cover::d3_cover(&b, order.n)?;
            let mut m = Map::new();
            m.insert("braid".into(), json!(b.to_string()));
            m.insert("n".into(), json!(order.n));
            rational_fields(&mut m, "d3", &d3);
            Ok(Rendered {
                text: format!("d3 = {}\n", fmt_rational(&d3)),
                json: Value::Object(m),
            })
        }
        Command::Report {
            input,
            order,
            assert_stabilized,
        } => {
            let b = read_braid(&input.braid, input.strands)?;
            check_order(order.n)?;
            let r = cover_report(
                &b,
                order.n,
                Assertions {
                    stabilized: *assert_stabilized,
                },
            )?;
            Ok(Rendered {
                text: report_text(&r),
                json: Value::Object(report_json(&r)),
            })
        }
        Command::Compare {
            braid1,
            braid2,
            strands,
            order,
            smoothly_isotopic,
        } => {
            let b1 = read_braid(braid1, *strands)?;
            let b2 = read_braid(braid2, *strands)?;
            check_order(order.n)?;
            let c = compare_covers(&b1, &b2, order.n, *smoothly_isotopic)?;
            let (name, witness) = verdict_names(&c.verdict);
            let mut text = format!("verdict: {}\n", c.verdict);
            for a in &c.annotations {
                text.push_str(&format!("note: {a}\n"));
            }
            text.push_str("--- first\n");
            text.push_str(&report_text(&c.first));
            text.push_str("--- second\n");
            text.push_str(&report_text(&c.second));
            Ok(Rendered {
                text,
                json: json!({
                    "n": order.n,
                    "verdict": name,
                    "witness": witness,
                    "smoothly_isotopic_asserted": smoothly_isotopic,
                    "annotations": c.annotations,
                    "first": Value::Object(report_json(&c.first)),
                    "second": Value::Object(report_json(&c.second)),
                }),
            })
        }
        Command::Murasugi { poly, order, branch } => {
            let delta = read_poly(poly)?;
            let branch: Branch = branch.parse()?;
            check_order(order.n)?;
            let lift = murasugi_lift(&delta, order.n, branch)?;
            let breadth = lift.breadth()?;
            Ok(Rendered {
                text: format!("lift = {lift}\nbreadth = {breadth}\n"),
                json: json!({
                    "n": order.n,
                    "branch": branch.to_string(),
                    "lift": poly1_json(&lift),
                    "breadth": breadth,
                }),
            })
        }
        Command::Twins { poly, pd, order } => {
            check_order(order.n)?;
            let report = match (poly, pd) {
                (Some(p), _) => ns_twin_report(&read_poly(p)?, order.n, p)?,
                (None, Some(code)) => ns_twin_report_pd(&read_pd(code)?, order.n, code)?,
                (None, None) => unreachable!("clap enforces an input"),
            };
            Ok(Rendered {
                text: twin_text(&report),
                json: twin_json(&report),
            })
        }
    }
}

fn check_order(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("-n must be at least 2, got {n}")));
    }
    Ok(())
}
