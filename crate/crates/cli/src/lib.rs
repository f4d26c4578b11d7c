//! Command-line front end for `biquad90`.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! what should go to stdout and stderr, so the binary is a thin shell and
//! tests can drive every command in-process.
//!
//! Exit codes: 0 on success, 1 on domain errors (for example an element
//! outside the kernel), 2 on usage and parse errors. In JSON mode errors
//! are reported on stdout as `{"error": {"kind", "message"}}`; in text mode
//! they go to stderr.

pub mod json;
pub mod parse;

use std::fmt::Write as _;

use biquad90::field::Intermediate;
use biquad90::module_lab::{sweep, SweepSummary, Verdict};
use biquad90::{
    coboundary_witness, crossed_hom_check, kernel_membership, parse_rational, pythagorean_triple,
    qform_decompose, qh90_witness, BiquadConfig, NormTarget, Rational,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use json::{Element, Q, Z};
use parse::{parse_element, parse_group_ring, parse_quad};

#[derive(Parser, Debug)]
#[command(
    name = "biquad90",
    version,
    about = "Exact witnesses for Hilbert 90 in biquadratic extensions of the rationals"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Json, global = true)]
    pub output: OutputMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// First field parameter (a rational `p` or `p/q`).
    #[arg(long, allow_hyphen_values = true)]
    pub a1: String,
    /// Second field parameter.
    #[arg(long, allow_hyphen_values = true)]
    pub a2: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Add => "add",
            Op::Sub => "sub",
            Op::Mul => "mul",
            Op::Div => "div",
            Op::Inv => "inv",
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Combine elements and report conjugates, norms and subfield membership.
    Eval {
        #[command(flatten)]
        field: FieldArgs,
        /// How to combine the elements (folded left to right).
        #[arg(long, value_enum, default_value_t = Op::Mul)]
        op: Op,
        /// Also apply a group-ring operator such as `1 - s1`.
        #[arg(long, allow_hyphen_values = true)]
        act: Option<String>,
        /// Elements such as `1 + 2*r1 - r12`; put elements that start with
        /// `-` after `--`.
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Find l with t = l/s(l) for a norm-one t, s generating Gal(E/Ei).
    H90Witness {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        index: u8,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Find beta with alpha_i = beta/s_i(beta) for a crossed homomorphism.
    Coboundary {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(allow_hyphen_values = true)]
        alpha1: String,
        #[arg(allow_hyphen_values = true)]
        alpha2: String,
    },
    /// Decide kernel membership with certificates.
    Kernel {
        #[command(flatten)]
        field: FieldArgs,
        /// Fail with NotInKernel instead of reporting a negative answer.
        #[arg(long)]
        strict: bool,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Factor x^2 - a y^2 as (x1^2 - a y1^2)(x2^2 - ab y2^2).
    QformDecompose {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// An element `u + v*rb` of F(sqrt b).
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// The Pythagorean triple parameterized by (m, n).
    Pythagorean {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
    },
    /// Check every finite module up to the given order, one record per line.
    ModuleCheck {
        #[arg(long, default_value_t = 64)]
        max_order: u64,
        /// Largest group that is checked by full enumeration.
        #[arg(long, default_value_t = biquad90::module_lab::DEFAULT_MAX_ELEMENTS)]
        max_elements: u64,
        /// Append a summary record.
        #[arg(long)]
        summary: bool,
    },
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub code: i32,
}

impl From<biquad90::Error> for CliError {
    fn from(e: biquad90::Error) -> Self {
        let code = if matches!(e, biquad90::Error::Parse { .. }) {
            2
        } else {
            1
        };
        CliError {
            kind: e.kind().to_string(),
            message: e.to_string(),
            code,
        }
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError {
            kind: "ParseError".into(),
            message: e.to_string(),
            code: 2,
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        kind: "UsageError".into(),
        message: message.into(),
        code: 2,
    }
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError {
        kind: "ParseError".into(),
        message: format!("--{name}: {e}"),
        code: 2,
    })
}

fn config(f: &FieldArgs) -> Result<BiquadConfig, CliError> {
    let a1 = rational_arg("a1", &f.a1)?;
    let a2 = rational_arg("a2", &f.a2)?;
    Ok(BiquadConfig::new(a1, a2)?)
}

fn config_json(k: &BiquadConfig) -> json::Config {
    json::Config {
        a1: Q(k.a1().clone()),
        a2: Q(k.a2().clone()),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("result types serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => match cli.output {
            OutputMode::Json => Outcome {
                code: e.code,
                stdout: to_json(&json::ErrorReport {
                    error: json::ErrorBody {
                        kind: e.kind,
                        message: e.message,
                    },
                }),
                stderr: String::new(),
            },
            OutputMode::Text => Outcome {
                code: e.code,
                stdout: String::new(),
                stderr: format!("error[{}]: {}\n", e.kind, e.message),
            },
        },
    }
}

/// Executes a parsed command, returning its stdout.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let text = cli.output == OutputMode::Text;
    match &cli.command {
        Command::Eval {
            field,
            op,
            act,
            elements,
        } => eval(field, *op, act.as_deref(), elements, text),
        Command::H90Witness { field, index, t } => {
            let k = config(field)?;
            let t = parse_element(t, &k)?;
            let layer = Intermediate::from_index(*index).expect("clap restricts the range");
            let w = qh90_witness(layer, &t)?;
            Ok(if text {
                format!("{w}\n")
            } else {
                to_json(&json::H90Witness {
                    config: config_json(&k),
                    index: *index,
                    t: Element(t),
                    text: w.to_string(),
                    witness: Element(w),
                })
            })
        }
        Command::Coboundary {
            field,
            alpha1,
            alpha2,
        } => {
            let k = config(field)?;
            let a1 = parse_element(alpha1, &k)?;
            let a2 = parse_element(alpha2, &k)?;
            let h = crossed_hom_check(a1.clone(), a2.clone())?;
            let beta = coboundary_witness(&h)?;
            Ok(if text {
                format!("{beta}\n")
            } else {
                to_json(&json::Coboundary {
                    config: config_json(&k),
                    alpha1: Element(a1),
                    alpha2: Element(a2),
                    text: beta.to_string(),
                    beta: Element(beta),
                })
            })
        }
        Command::Kernel {
            field,
            strict,
            element,
        } => kernel(field, element, *strict, text),
        Command::QformDecompose { a, b, x, y } => {
            let a = rational_arg("a", a)?;
            let b = rational_arg("b", b)?;
            let x = parse_quad(x, &b)?;
            let y = parse_quad(y, &b)?;
            let d = qform_decompose(&a, &b, &x, &y)?;
            Ok(if text {
                format!(
                    "{} = ({}^2 - {a}*{}^2) * ({}^2 - {}*{}^2)  [{:?}]\n",
                    d.value,
                    d.x1,
                    d.y1,
                    d.x2,
                    a.clone() * b.clone(),
                    d.y2,
                    d.branch
                )
            } else {
                to_json(&json::QformDecomposition {
                    x1: Q(d.x1),
                    y1: Q(d.y1),
                    x2: Q(d.x2),
                    y2: Q(d.y2),
                    value: Q(d.value),
                })
            })
        }
        Command::Pythagorean { m, n } => {
            let int = |name: &str, s: &str| {
                s.trim().parse::<BigInt>().map_err(|_| CliError {
                    kind: "ParseError".into(),
                    message: format!("{name}: invalid integer `{s}`"),
                    code: 2,
                })
            };
            let (p, q, r) = pythagorean_triple(&int("m", m)?, &int("n", n)?)?;
            Ok(if text {
                format!("{p} {q} {r}\n")
            } else {
                to_json(&json::Pythagorean {
                    triple: [Z(p), Z(q), Z(r)],
                })
            })
        }
        Command::ModuleCheck {
            max_order,
            max_elements,
            summary,
        } => module_check(*max_order, *max_elements, *summary, text),
    }
}

fn eval(
    field: &FieldArgs,
    op: Op,
    act: Option<&str>,
    elements: &[String],
    text: bool,
) -> Result<String, CliError> {
    let k = config(field)?;
    let inputs = elements
        .iter()
        .map(|s| parse_element(s, &k))
        .collect::<Result<Vec<_>, _>>()?;
    let value = match op {
        Op::Inv => match inputs.as_slice() {
            [e] => e.inv()?,
            _ => return Err(usage("--op inv takes exactly one element")),
        },
        _ => {
            let mut it = inputs.iter();
            let mut acc = it.next().expect("clap requires an element").clone();
            for e in it {
                acc = match op {
                    Op::Add => acc.checked_add(e)?,
                    Op::Sub => acc.checked_sub(e)?,
                    Op::Mul => acc.checked_mul(e)?,
                    Op::Div => acc.checked_div(e)?,
                    Op::Inv => unreachable!(),
                };
            }
            acc
        }
    };
    let action = match act {
        Some(src) => {
            let u = parse_group_ring(src)?;
            Some(json::Action {
                operator: u.to_string(),
                value: Element(u.act(&value)?),
            })
        }
        None => None,
    };
    let norm = |t| value.norm(t).expect("norms down from E are always defined");
    let m = value.membership();
    let report = json::Eval {
        config: config_json(&k),
        op: op.name(),
        inputs: inputs.into_iter().map(Element).collect(),
        text: value.to_string(),
        conjugates: json::Conjugates::of(&value),
        norms: json::Norms {
            E1: Element(norm(NormTarget::E1)),
            E2: Element(norm(NormTarget::E2)),
            E3: Element(norm(NormTarget::E3)),
            F: Q(norm(NormTarget::FFromE)
                .as_scalar()
                .expect("the absolute norm is rational")
                .clone()),
        },
        membership: json::Membership {
            F: m.in_f,
            E1: m.in_e1,
            E2: m.in_e2,
            E3: m.in_e3,
        },
        value: Element(value.clone()),
        act: action,
    };
    if !text {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    let g = |x| value.galois(x);
    use biquad90::field::GaloisElement::*;
    writeln!(out, "value: {value}").unwrap();
    writeln!(out, "s1: {}", g(S1)).unwrap();
    writeln!(out, "s2: {}", g(S2)).unwrap();
    writeln!(out, "s12: {}", g(S12)).unwrap();
    for (name, t) in [
        ("E1", NormTarget::E1),
        ("E2", NormTarget::E2),
        ("E3", NormTarget::E3),
        ("F", NormTarget::FFromE),
    ] {
        writeln!(out, "norm to {name}: {}", norm(t)).unwrap();
    }
    writeln!(
        out,
        "in F: {}, in E1: {}, in E2: {}, in E3: {}",
        m.in_f, m.in_e1, m.in_e2, m.in_e3
    )
    .unwrap();
    if let Some(a) = &report.act {
        writeln!(out, "({}) acting: {}", a.operator, a.value.0).unwrap();
    }
    Ok(out)
}

fn kernel(field: &FieldArgs, element: &str, strict: bool, text: bool) -> Result<String, CliError> {
    let k = config(field)?;
    let e = parse_element(element, &k)?;
    let r = kernel_membership(&e)?;
    if strict && !r.in_kernel() {
        return Err(biquad90::Error::NotInKernel.into());
    }
    if text {
        let mut out = format!(
            "{e}: {}\n",
            if r.in_kernel() {
                "in kernel"
            } else {
                "not in kernel"
            }
        );
        if let Some(d) = &r.decomposition {
            writeln!(out, "  = ({}) * ({})", d.k1, d.k2).unwrap();
        }
        return Ok(out);
    }
    let norm_witness = r.norm_witness.as_ref().map(|w| {
        let (n1, n2) = w
            .norms()
            .expect("verified witnesses lie in their subfields");
        json::NormWitness {
            gamma1: Element(w.gamma1.clone()),
            gamma2: Element(w.gamma2.clone()),
            norms: [Q(n1), Q(n2)],
        }
    });
    Ok(to_json(&json::Kernel {
        config: config_json(&k),
        element: Element(e),
        in_k1: r.in_k1,
        in_k2: r.in_k2,
        in_k3: r.in_k3,
        in_k4: r.in_k4,
        in_k5: r.in_k5,
        decomposition: r.decomposition.map(|d| json::Decomposition {
            k1: Element(d.k1),
            k2: Element(d.k2),
        }),
        norm_witness,
    }))
}

fn module_check(
    max_order: u64,
    max_elements: u64,
    summary: bool,
    text: bool,
) -> Result<String, CliError> {
    if max_order == 0 {
        return Err(usage("--max-order must be at least 1"));
    }
    let entries = sweep(max_order, max_elements);
    let mut out = String::new();
    for e in &entries {
        let r = e.report.clone()?;
        if text {
            writeln!(
                out,
                "{:<24} qh90={:?} kernel_eq={} implication={} {}",
                e.module.group_name(),
                r.qh90,
                r.kernel_eq,
                r.implication,
                r.verdict
            )
            .unwrap();
            continue;
        }
        let certificate = (r.verdict == Verdict::Fail).then(|| json::Certificate {
            kernel_element: r.kernel_counterexample.clone(),
            pair: r.implication_counterexample.clone().map(|(a, b)| [a, b]),
        });
        out.push_str(&to_json(&json::ModuleRecord {
            group: e.module.group_name(),
            s1: e.module.s1().to_vec(),
            s2: e.module.s2().to_vec(),
            qh90: r.qh90,
            kernel_eq: r.kernel_eq,
            implication: r.implication,
            verdict: r.verdict.to_string(),
            certificate,
        }));
    }
    if summary {
        let s = SweepSummary::tally(&entries);
        let body = json::Summary {
            modules: s.modules,
            pass: s.pass,
            fail: s.fail,
            skipped: s.skipped,
            kernel_eq_fails_with_qh90: s.kernel_eq_fails_with_qh90,
            kernel_eq_holds_without_qh90: s.kernel_eq_holds_without_qh90,
        };
        if text {
            writeln!(
                out,
                "{} modules: {} PASS, {} FAIL, {} SKIPPED",
                body.modules, body.pass, body.fail, body.skipped
            )
            .unwrap();
        } else {
            out.push_str(&to_json(&json::SummaryLine { summary: body }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("biquad90").chain(args.iter().copied()))
    }

    #[test]
    fn help_and_usage() {
        assert_eq!(run_args(&["--help"]).code, 0);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(
            run_args(&["h90-witness", "--a1", "2", "--a2", "3", "--index", "4", "1"]).code,
            2
        );
    }

    #[test]
    fn negative_arguments() {
        let o = run_args(&["eval", "--a1", "-1", "--a2", "2", "--", "-r1", "r2"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert_eq!(
            run_args(&["pythagorean", "-2", "1"]).stdout,
            "{\"triple\":[3,4,5]}\n"
        );
    }

    #[test]
    fn text_mode() {
        let o = run_args(&["--output", "text", "pythagorean", "3", "2"]);
        assert_eq!(o.stdout, "5 12 13\n");
        let o = run_args(&[
            "kernel", "--a1", "2", "--a2", "3", "1 + r12", "--output", "text",
        ]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "1 + r12: not in kernel\n");
        let o = run_args(&["--output", "text", "pythagorean", "0", "0"]);
        assert_eq!(
            (o.code, o.stderr.starts_with("error[ZeroInput]")),
            (1, true)
        );
    }
}
