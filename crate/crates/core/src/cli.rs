//! The `faulhaber` command-line tool.
//!
//! Every verb prints its result in one of four formats. Exit status is `0`
//! on success, `1` when `verify` finds a disagreement and `2` for bad
//! arguments.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arithprog::{ap_oracle, ap_series, ap_via_numerator, APParams};
use crate::bernoulli::{bernoulli, BernoulliMethod};
use crate::chebyshev::{faa_even, faa_odd, powersum_via_chebyshev_series};
use crate::error::{Error, Result};
use crate::powersum::{
    exotic_powersum, faulhaber_poly, powersum_oracle, powersum_via_operator, powersum_via_q,
    powersum_via_stirling, solve_power_sum_recurrence, Basis, Factor, FaulhaberPolynomial, Parity,
    QForm,
};
use crate::rational::{format_rational, to_integer};
use crate::series::{powersum_from_egf, EgfRoute};

pub const MAX_POWER: u32 = 100;
pub const MAX_TERMS: u64 = 1000;
pub const MAX_HALF_INDEX: u32 = 50;
pub const MAX_VERIFY_POWER: u32 = 40;
pub const MAX_VERIFY_TERMS: u64 = 60;

#[derive(Debug, Parser)]
#[command(
    name = "faulhaber",
    version,
    about = "Exact power sums, Faulhaber polynomials and Bernoulli numbers"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "plain", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Faulhaber polynomial of S_2k or S_2k-1
    Poly {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value = "N")]
        basis: BasisArg,
    },
    /// S_k(n) = 1^k + ... + n^k
    Value {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "oracle")]
        method: ValueMethod,
    },
    /// Bernoulli number B_2k
    Bernoulli {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "oracle")]
        method: BernoulliArg,
    },
    /// a^k + (a+d)^k + ... + (a+(n-1)d)^k
    Ap {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "oracle")]
        method: ApMethod,
    },
    /// Cross-check every method against direct summation
    Verify {
        #[arg(long, default_value_t = 10)]
        max_k: u32,
        #[arg(long, default_value_t = 10)]
        max_n: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    #[value(name = "N")]
    N,
    #[value(name = "S1")]
    S1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ValueMethod {
    Oracle,
    Recurrence,
    Det,
    Faa,
    Chebyshev,
    Operator,
    Stirling,
    Eulerian,
    Series,
    Exotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BernoulliArg {
    Det,
    Vanmalderen,
    Faulhaber,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ApMethod {
    Oracle,
    Series,
    #[value(name = "met9")]
    Numerator,
}

fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

/// `S_power(n)` by the named method.
pub fn powersum_by(method: ValueMethod, power: u32, n: u64) -> Result<BigInt> {
    let (parity, k) = Parity::split(power);
    match method {
        ValueMethod::Oracle => Ok(powersum_oracle(power, n)),
        ValueMethod::Recurrence => Ok(solve_power_sum_recurrence(parity, k, n)?
            .pop()
            .expect("k >= 1")),
        ValueMethod::Det => to_integer(
            &faulhaber_poly(parity, k, Basis::N).eval(n),
            "Faulhaber polynomial",
        ),
        ValueMethod::Faa => match parity {
            Parity::Even => faa_even(k, n),
            Parity::Odd => faa_odd(k, n),
        },
        ValueMethod::Chebyshev => powersum_via_chebyshev_series(power, n),
        ValueMethod::Operator => powersum_via_operator(power, n),
        ValueMethod::Stirling => powersum_via_stirling(power, n),
        ValueMethod::Eulerian => powersum_via_q(power, n, QForm::Eulerian),
        ValueMethod::Series => powersum_from_egf(power, n, EgfRoute::Division),
        ValueMethod::Exotic => match parity {
            Parity::Even => exotic_powersum(k, n),
            Parity::Odd => Err(Error::InvalidArgument(format!(
                "method exotic only covers even exponents, got k = {power}"
            ))),
        },
    }
}

/// `S_k^{a,d}` by the named method.
pub fn ap_by(method: ApMethod, k: u32, p: &APParams) -> Result<BigInt> {
    match method {
        ApMethod::Oracle => Ok(ap_oracle(k, p)),
        ApMethod::Series => ap_series(k, p),
        ApMethod::Numerator => ap_via_numerator(k, p),
    }
}

struct Report {
    verb: &'static str,
    params: Value,
    result: Value,
    plain: String,
    latex: String,
    csv: Vec<[String; 4]>,
}

impl Report {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => format!("{}\n", self.plain),
            Format::Latex => format!("{}\n", self.latex),
            Format::Json => {
                let doc =
                    json!({ "verb": self.verb, "params": self.params, "result": self.result });
                format!("{doc}\n")
            }
            Format::Csv => {
                let mut s = String::from("method,k,n,value\n");
                for row in &self.csv {
                    s.push_str(&row.join(","));
                    s.push('\n');
                }
                s
            }
        }
    }
}

enum Outcome {
    Done(Report),
    Mismatch(Report),
}

fn check_range<T: PartialOrd + std::fmt::Display>(flag: &str, v: T, lo: T, hi: T) -> Result<()> {
    if v < lo || v > hi {
        return Err(Error::InvalidArgument(format!(
            "--{flag} must be in {lo}..={hi}, got {v}"
        )));
    }
    Ok(())
}

/// Parses `argv` (including the program name), runs the verb and writes the
/// report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    match execute(&cli.command) {
        Ok(Outcome::Done(report)) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            0
        }
        Ok(Outcome::Mismatch(report)) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            let _ = writeln!(err, "error: verification found mismatches");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: &Command) -> Result<Outcome> {
    match *command {
        Command::Poly { k, parity, basis } => poly_report(k, parity, basis).map(Outcome::Done),
        Command::Value { k, n, method } => value_report(k, n, method).map(Outcome::Done),
        Command::Bernoulli { k, method } => bernoulli_report(k, method).map(Outcome::Done),
        Command::Ap { k, a, d, n, method } => ap_report(k, a, d, n, method).map(Outcome::Done),
        Command::Verify { max_k, max_n } => verify_report(max_k, max_n),
    }
}

fn poly_report(k: u32, parity: ParityArg, basis: BasisArg) -> Result<Report> {
    check_range("k", k, 1, MAX_HALF_INDEX)?;
    let parity = match parity {
        ParityArg::Even => Parity::Even,
        ParityArg::Odd => Parity::Odd,
    };
    let (basis_enum, var, var_tex) = match basis {
        BasisArg::N => (Basis::N, "N", "N"),
        BasisArg::S1 => (Basis::S1, "S_1", "S_1"),
    };
    let fp = faulhaber_poly(parity, k, basis_enum);
    let power = fp.power();
    let (factor, factor_tex) = factor_labels(&fp);
    let body = fp.body.display_with(var);
    let body_tex = fp.body.to_latex(var_tex);
    let (plain, latex) = match fp.factor {
        Factor::One => (
            format!("S_{power} = {body}"),
            format!("S_{{{power}}} = {body_tex}"),
        ),
        _ => (
            format!("S_{power} = {factor} ({body})"),
            format!("S_{{{power}}} = {factor_tex}\\left({body_tex}\\right)"),
        ),
    };
    let coeffs = fp.body.to_strings();
    let csv = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            [
                format!("poly[{}]", name(basis)),
                power.to_string(),
                i.to_string(),
                c.clone(),
            ]
        })
        .collect();
    Ok(Report {
        verb: "poly",
        params: json!({ "k": k, "parity": name(parity_arg(parity)), "basis": name(basis) }),
        result: json!({ "coeffs": coeffs, "basis": name(basis), "factor": factor }),
        plain,
        latex,
        csv,
    })
}

fn parity_arg(p: Parity) -> ParityArg {
    match p {
        Parity::Even => ParityArg::Even,
        Parity::Odd => ParityArg::Odd,
    }
}

fn factor_labels(fp: &FaulhaberPolynomial) -> (&'static str, &'static str) {
    match fp.factor {
        Factor::One => ("1", "1"),
        Factor::S2 => ("S_2", "S_2"),
        Factor::S1Squared => ("S_1^2", "S_1^2"),
    }
}

fn value_report(k: u32, n: u64, method: ValueMethod) -> Result<Report> {
    check_range("k", k, 1, MAX_POWER)?;
    check_range("n", n, 1, MAX_TERMS)?;
    let value = powersum_by(method, k, n)?.to_string();
    Ok(Report {
        verb: "value",
        params: json!({ "k": k, "n": n, "method": name(method) }),
        result: json!(value),
        plain: value.clone(),
        latex: format!("S_{{{k}}}({n}) = {value}"),
        csv: vec![[name(method), k.to_string(), n.to_string(), value]],
    })
}

fn bernoulli_report(k: u32, method: BernoulliArg) -> Result<Report> {
    check_range("k", k, 1, MAX_HALF_INDEX)?;
    let route = match method {
        BernoulliArg::Det => BernoulliMethod::Determinant,
        BernoulliArg::Vanmalderen => BernoulliMethod::VanMalderen,
        BernoulliArg::Faulhaber => BernoulliMethod::Faulhaber,
        BernoulliArg::Oracle => BernoulliMethod::Oracle,
    };
    let b = bernoulli(k, route);
    let value = format_rational(&b.value);
    let tex = if b.value.denom() == &BigInt::from(1) {
        value.clone()
    } else {
        let sign = if b.value.numer() < &BigInt::from(0) {
            "-"
        } else {
            ""
        };
        format!(
            "{sign}\\frac{{{}}}{{{}}}",
            b.value.numer().magnitude(),
            b.value.denom()
        )
    };
    Ok(Report {
        verb: "bernoulli",
        params: json!({ "k": k, "method": name(method) }),
        result: json!(value),
        plain: value.clone(),
        latex: format!("B_{{{}}} = {tex}", b.index),
        csv: vec![[name(method), k.to_string(), String::new(), value]],
    })
}

fn ap_report(k: u32, a: u64, d: u64, n: u64, method: ApMethod) -> Result<Report> {
    check_range("k", k, 0, MAX_POWER)?;
    check_range("a", a, 0, 1_000_000)?;
    check_range("d", d, 1, 1_000_000)?;
    check_range("n", n, 1, MAX_TERMS)?;
    let p = APParams::new(a, d, n)?;
    let value = ap_by(method, k, &p)?.to_string();
    Ok(Report {
        verb: "ap",
        params: json!({ "k": k, "a": a, "d": d, "n": n, "method": name(method) }),
        result: json!(value),
        plain: value.clone(),
        latex: format!("S_{{{k}}}^{{{a},{d}}}({n}) = {value}"),
        csv: vec![[
            format!("{}[a={a},d={d}]", name(method)),
            k.to_string(),
            n.to_string(),
            value,
        ]],
    })
}

/// One disagreement found by `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub method: String,
    pub k: u32,
    pub n: u64,
    pub expected: String,
    pub got: String,
}

/// Every value method, both progression methods and every Bernoulli route,
/// compared with direct summation. Cells are sorted by `k`, then `n`, then
/// method. Returns the number of comparisons and the mismatches.
pub fn verify_matrix(max_k: u32, max_n: u64) -> (usize, Vec<Mismatch>) {
    let mut cells: Vec<(String, u32, u64)> = Vec::new();
    for k in 1..=max_k {
        for n in 1..=max_n {
            for m in ValueMethod::value_variants() {
                if *m == ValueMethod::Oracle || (*m == ValueMethod::Exotic && k % 2 == 1) {
                    continue;
                }
                cells.push((name(*m), k, n));
            }
            for a in 0..=2 {
                for d in 1..=2 {
                    for m in [ApMethod::Series, ApMethod::Numerator] {
                        cells.push((format!("ap-{}[a={a},d={d}]", name(m)), k, n));
                    }
                }
            }
        }
    }
    for k in 1..=max_k.div_ceil(2) {
        for m in [
            "bernoulli-det",
            "bernoulli-vanmalderen",
            "bernoulli-faulhaber",
        ] {
            cells.push((m.to_string(), k, 0));
        }
    }
    cells.sort_by(|x, y| (x.1, x.2, &x.0).cmp(&(y.1, y.2, &y.0)));

    let outcomes: Vec<Option<Mismatch>> = cells
        .par_iter()
        .map(|(method, k, n)| {
            let (expected, got) = evaluate_cell(method, *k, *n);
            (expected != got).then(|| Mismatch {
                method: method.clone(),
                k: *k,
                n: *n,
                expected,
                got,
            })
        })
        .collect();
    let mismatches = outcomes.into_iter().flatten().collect();
    (cells.len(), mismatches)
}

fn evaluate_cell(method: &str, k: u32, n: u64) -> (String, String) {
    let show = |r: Result<BigInt>| r.map_or_else(|e| format!("error: {e}"), |v| v.to_string());
    if let Some(route) = method.strip_prefix("bernoulli-") {
        let route = match route {
            "det" => BernoulliMethod::Determinant,
            "vanmalderen" => BernoulliMethod::VanMalderen,
            _ => BernoulliMethod::Faulhaber,
        };
        let expected = format_rational(&bernoulli(k, BernoulliMethod::Oracle).value);
        return (expected, format_rational(&bernoulli(k, route).value));
    }
    if let Some(rest) = method.strip_prefix("ap-") {
        let (m, params) = rest.split_once('[').expect("ap cell label");
        let params = params.trim_end_matches(']');
        let mut nums = params
            .split(',')
            .map(|kv| kv[2..].parse::<u64>().expect("numeric parameter"));
        let (a, d) = (nums.next().unwrap(), nums.next().unwrap());
        let p = APParams::new(a, d, n).expect("verify uses valid progressions");
        let m = ApMethod::from_str(m, false).expect("known ap method");
        return (ap_oracle(k, &p).to_string(), show(ap_by(m, k, &p)));
    }
    let m = ValueMethod::from_str(method, false).expect("known value method");
    (
        powersum_oracle(k, n).to_string(),
        show(powersum_by(m, k, n)),
    )
}

fn verify_report(max_k: u32, max_n: u64) -> Result<Outcome> {
    check_range("max-k", max_k, 1, MAX_VERIFY_POWER)?;
    check_range("max-n", max_n, 1, MAX_VERIFY_TERMS)?;
    let (checked, mismatches) = verify_matrix(max_k, max_n);
    let mut plain = String::new();
    let mut latex = String::new();
    for m in &mismatches {
        plain.push_str(&format!(
            "mismatch method={} k={} n={} expected={} got={}\n",
            m.method, m.k, m.n, m.expected, m.got
        ));
        latex.push_str(&format!("% mismatch {} k={} n={}\n", m.method, m.k, m.n));
    }
    plain.push_str(&format!(
        "checked {checked} cells, {} mismatches",
        mismatches.len()
    ));
    latex.push_str(&format!(
        "\\text{{checked {checked} cells, {} mismatches}}",
        mismatches.len()
    ));
    let report = Report {
        verb: "verify",
        params: json!({ "max_k": max_k, "max_n": max_n }),
        result: json!({
            "checked": checked.to_string(),
            "mismatches": mismatches.iter().map(|m| json!({
                "method": m.method, "k": m.k, "n": m.n, "expected": m.expected, "got": m.got,
            })).collect::<Vec<_>>(),
        }),
        plain,
        latex,
        csv: mismatches
            .iter()
            .map(|m| {
                [
                    m.method.clone(),
                    m.k.to_string(),
                    m.n.to_string(),
                    m.got.clone(),
                ]
            })
            .collect(),
    };
    Ok(if mismatches.is_empty() {
        Outcome::Done(report)
    } else {
        Outcome::Mismatch(report)
    })
}
