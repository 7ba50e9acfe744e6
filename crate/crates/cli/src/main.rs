//! `supersym`: command-line access to superpartitions, superbases, basis
//! changes and the identity-verification suites.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or input
//! errors.

mod expr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::process::ExitCode;
use supersym::bases::{self, default_nvars, GeneratingKind, SeriesTruncation};
use supersym::inner::{self, duality_check, kernel_check};
use supersym::superpartition::{bruhat_leq, count_check, dominance_leq, enumerate, order_check};
use supersym::transform::{self, triangularity_check, verify_determinants, verify_recursions};
use supersym::{rational, BasisExpansion, BasisName, Report, SuperPartition, SuperPolynomial};

#[derive(Parser)]
#[command(name = "supersym", version, about = "Symmetric functions in superspace with exact arithmetic")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "SUPERSYM_FORMAT", default_value = "text")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Recursions,
    Determinants,
    Generating,
    Kernel,
    Duality,
    Orders,
    Counting,
}

#[derive(Subcommand)]
enum Command {
    /// List the superpartitions of bidegree (n|m)
    List {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Conjugate a superpartition
    Conj { spar: SuperPartition },
    /// Compare two superpartitions in the Bruhat and dominance orders
    Order { a: SuperPartition, b: SuperPartition },
    /// Expand a basis element as a polynomial
    Build {
        #[arg(long)]
        basis: BasisName,
        spar: SuperPartition,
        /// Number of variables (default n + m)
        #[arg(long)]
        nvars: Option<usize>,
        /// Reverse the fermionic factors (sign (-1)^{m(m-1)/2})
        #[arg(long)]
        arrow: bool,
    },
    /// Expand a product of two monomials in monomials
    Mult {
        #[arg(long, default_value = "m")]
        basis: BasisName,
        a: SuperPartition,
        b: SuperPartition,
    },
    /// Re-expand a basis element in another basis
    Convert {
        #[arg(long)]
        from: BasisName,
        #[arg(long)]
        to: BasisName,
        spar: SuperPartition,
    },
    /// Scalar product of two combinations, e.g. "2*p(;2) - 1/2*m(1;)"
    Inner { f: String, g: String },
    /// Apply the involution omega to a basis element
    Omega {
        #[arg(long)]
        basis: BasisName,
        spar: SuperPartition,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
    },
}

/// A usage or input error, reported on stderr with exit status 2.
struct Failure(String);

impl From<supersym::Error> for Failure {
    fn from(e: supersym::Error) -> Self {
        Failure(e.to_string())
    }
}

fn spar_json(sp: &SuperPartition) -> Value {
    serde_json::to_value(sp).expect("serializable")
}

fn polynomial_json(f: &SuperPolynomial) -> Value {
    let terms: Vec<Value> = f
        .sorted_terms()
        .into_iter()
        .map(|(mono, c)| {
            let theta: Vec<usize> = mono.theta_indices().into_iter().map(|j| j + 1).collect();
            let x: Vec<[usize; 2]> = mono.exponents().map(|(i, e)| [i + 1, e as usize]).collect();
            json!({"theta": theta, "x": x, "coeff": rational::format(c)})
        })
        .collect();
    json!({"nvars": f.nvars(), "terms": terms})
}

fn expansion_text(x: &BasisExpansion) -> String {
    let (n, m) = x.bidegree();
    let mut out = format!("# basis {} bidegree ({n}|{m})", x.basis());
    for (sp, c) in x.terms() {
        out.push_str(&format!("\n{sp}\t{}", rational::format(c)));
    }
    out
}

fn relation(a: &SuperPartition, b: &SuperPartition, leq: fn(&SuperPartition, &SuperPartition) -> supersym::Result<bool>) -> supersym::Result<&'static str> {
    Ok(match (leq(a, b)?, leq(b, a)?) {
        (true, true) => "=",
        (true, false) => "<=",
        (false, true) => ">=",
        (false, false) => "incomparable",
    })
}

fn run_suite(suite: Suite, n_max: Option<usize>, nvars: Option<usize>, degree: Option<usize>) -> Result<Report, Failure> {
    Ok(match suite {
        Suite::Recursions => verify_recursions(n_max.unwrap_or(6)),
        Suite::Determinants => verify_determinants(n_max.unwrap_or(6)),
        Suite::Generating => {
            let trunc = SeriesTruncation { max_t_degree: degree.unwrap_or(4), with_tau: true };
            let nvars = nvars.unwrap_or(5);
            let mut report = Report::new("generating").param("max_t_degree", trunc.max_t_degree).param("nvars", nvars);
            for kind in [GeneratingKind::E, GeneratingKind::H, GeneratingKind::P] {
                report.absorb(&bases::generating_check(kind, trunc, nvars)?);
            }
            report
        }
        Suite::Kernel => kernel_check(nvars.unwrap_or(5), degree.unwrap_or(4))?,
        Suite::Duality => {
            let n = n_max.unwrap_or(5);
            let mut report = duality_check(n, 3);
            report.absorb(&triangularity_check(n.min(6)));
            report
        }
        Suite::Orders => order_check(n_max.unwrap_or(6), n_max.unwrap_or(6).min(5)),
        Suite::Counting => count_check(n_max.unwrap_or(12)),
    })
}

/// Returns the text and JSON renderings of the command's result.
fn execute(command: Command) -> Result<(String, Value, bool), Failure> {
    Ok(match command {
        Command::List { n, m, max_len } => {
            let all = enumerate(n, m, max_len);
            let text = all.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n");
            let json = json!({"n": n, "m": m, "max_len": max_len, "count": all.len(),
                "superpartitions": all.iter().map(spar_json).collect::<Vec<_>>()});
            (text, json, true)
        }
        Command::Conj { spar } => {
            let c = spar.conjugate();
            (c.to_string(), json!({"input": spar_json(&spar), "conjugate": spar_json(&c)}), true)
        }
        Command::Order { a, b } => {
            let bruhat = relation(&a, &b, bruhat_leq)?;
            let dominance = relation(&a, &b, dominance_leq)?;
            let text = format!("bruhat: {a} {bruhat} {b}\ndominance: {a} {dominance} {b}");
            (text, json!({"a": spar_json(&a), "b": spar_json(&b), "bruhat": bruhat, "dominance": dominance}), true)
        }
        Command::Build { basis, spar, nvars, arrow } => {
            let nvars = nvars.unwrap_or_else(|| default_nvars(&spar));
            let f = match basis {
                BasisName::M => {
                    let f = bases::monomial(&spar, nvars)?;
                    if arrow { f.arrow() } else { f }
                }
                other => bases::multiplicative(other, &spar, nvars, arrow)?,
            };
            let text = format!("# nvars {nvars}\n{f}");
            let mut json = polynomial_json(&f);
            json["basis"] = json!(basis);
            json["spar"] = spar_json(&spar);
            json["arrow"] = json!(arrow);
            (text, json, true)
        }
        Command::Mult { basis, a, b } => {
            if basis != BasisName::M {
                return Err(Failure(format!("mult supports --basis m only, got {basis}")));
            }
            let x = transform::mono_product(&a, &b);
            (expansion_text(&x), serde_json::to_value(&x).expect("serializable"), true)
        }
        Command::Convert { from, to, spar } => {
            let (n, m) = spar.bidegree();
            let x = transform::change_basis(&BasisExpansion::single(from, &spar), to);
            let text = format!("# nvars {}\n{}", n + m + 1, expansion_text(&x));
            (text, serde_json::to_value(&x).expect("serializable"), true)
        }
        Command::Inner { f, g } => {
            let (f, g) = (expr::parse(&f)?, expr::parse(&g)?);
            let value = inner::scalar_product(&f, &g)?;
            (rational::format(&value), json!({"value": rational::format(&value)}), true)
        }
        Command::Omega { basis, spar } => {
            let x = inner::omega(&BasisExpansion::single(basis, &spar));
            (expansion_text(&x), serde_json::to_value(&x).expect("serializable"), true)
        }
        Command::Verify { suite, n_max, nvars, degree } => {
            let report = run_suite(suite, n_max, nvars, degree)?;
            let pass = report.pass;
            (report.to_string(), serde_json::to_value(&report).expect("serializable"), pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok((text, json, pass)) => {
            match cli.format {
                OutputFormat::Text => println!("{text}"),
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&json).expect("valid json")),
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
