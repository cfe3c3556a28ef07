//! Subcommand handlers. Each writes its report to stdout and returns the
//! failure, if any, for `main` to turn into an exit code.

use std::io::{self, BufWriter, Write};

use serde_json::{json, Value};

use hstar_core::enumerate::{enumerate_dosps, hstar_combinatorial};
use hstar_core::hstar::hstar_closed_form;
use hstar_core::oracle::hstar_from_oracle;
use hstar_core::verify::{run_suite, Bounds, Suite, SuiteReport};
use hstar_core::{HStarVector, PolytopeSpec};

use crate::cli::{EnumArgs, HstarArgs, HstarFormat, Method, VerifyArgs, VerifyFormat};
use crate::error::CliError;
use crate::output::{dosp_value, hstar_value, int_value, spec_value};

fn invalid(msg: impl ToString) -> CliError {
    CliError::Invalid(msg.to_string())
}

fn nonnegative(name: &str, value: i64) -> Result<u64, CliError> {
    u64::try_from(value).map_err(|_| invalid(format!("--{name} must be nonnegative, got {value}")))
}

fn compute(spec: &PolytopeSpec, method: Method) -> Result<HStarVector, CliError> {
    match method {
        Method::Formula => Ok(hstar_closed_form(spec)),
        Method::Enum => Ok(hstar_combinatorial(spec)),
        Method::Oracle => {
            hstar_from_oracle(spec).map_err(|e| CliError::Disagreement(e.to_string()))
        }
        Method::All => unreachable!("expanded by the caller"),
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Formula => "formula",
        Method::Enum => "enum",
        Method::Oracle => "oracle",
        Method::All => "all",
    }
}

pub fn hstar(args: &HstarArgs) -> Result<(), CliError> {
    let spec = PolytopeSpec::new(
        nonnegative("r", args.r)?,
        nonnegative("k", args.k)?,
        nonnegative("n", args.n)?,
    )
    .map_err(invalid)?;
    let methods: Vec<Method> = match args.method {
        Method::All => vec![Method::Formula, Method::Enum, Method::Oracle],
        m => vec![m],
    };
    let results = methods
        .iter()
        .map(|&m| compute(&spec, m).map(|h| (m, h)))
        .collect::<Result<Vec<_>, _>>()?;
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);

    let stdout = io::stdout();
    let mut out = stdout.lock();
    match args.format {
        HstarFormat::Json => {
            let mut report = json!({
                "spec": spec_value(&spec),
                "method": method_name(args.method),
                "hstar": hstar_value(&results[0].1),
            });
            if args.method == Method::All {
                report["agree"] = json!(agree);
                report["by_method"] = results
                    .iter()
                    .map(|(m, h)| (method_name(*m).to_string(), hstar_value(h)))
                    .collect::<serde_json::Map<_, _>>()
                    .into();
            }
            writeln!(out, "{report}")?;
        }
        HstarFormat::Csv => {
            writeln!(out, "r,k,n,method,d,hstar")?;
            for (m, h) in &results {
                for (d, e) in h.entries().iter().enumerate() {
                    writeln!(
                        out,
                        "{},{},{},{},{d},{e}",
                        spec.r(),
                        spec.k(),
                        spec.n(),
                        method_name(*m)
                    )?;
                }
            }
        }
    }
    out.flush()?;
    if agree {
        Ok(())
    } else {
        let detail = results
            .iter()
            .map(|(m, h)| format!("{}={h}", method_name(*m)))
            .collect::<Vec<_>>()
            .join(" ");
        Err(CliError::Disagreement(format!("{spec}: {detail}")))
    }
}

pub fn enumerate(args: &EnumArgs) -> Result<(), CliError> {
    let k = nonnegative("k", args.k)? as usize;
    let n = nonnegative("n", args.n)? as usize;
    let d = nonnegative("d", args.d)? as usize;
    if k == 0 || n == 0 {
        return Err(invalid(format!("need k >= 1 and n >= 1, got k={k} n={n}")));
    }
    let r = match args.r {
        Some(r) if r < 1 => return Err(invalid(format!("--r must be positive, got {r}"))),
        Some(r) => r as usize,
        None => 1,
    };
    if k.checked_mul(d).is_none() {
        return Err(invalid("k * d overflows"));
    }

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut count: u64 = 0;
    let mut truncated = false;
    let keep = |p: &hstar_core::Dosp| !args.hypersimplicial || p.is_r_hypersimplicial(r);
    for p in enumerate_dosps(k, n, d).filter(keep) {
        if args.limit.is_some_and(|limit| count >= limit) {
            truncated = true;
            break;
        }
        writeln!(out, "{}", dosp_value(&p))?;
        count += 1;
    }
    writeln!(out, "{}", json!({ "count": count, "truncated": truncated }))?;
    out.flush()?;
    Ok(())
}

fn report_value(report: &SuiteReport) -> Value {
    json!({
        "suite": report.suite.name(),
        "description": report.suite.description(),
        "passed": report.passed(),
        "cases": int_value(&report.cases.into()),
        "failures": int_value(&report.failures.into()),
        "first_failure": report.first_failure,
        "bounds": {
            "max_n": report.bounds.max_n,
            "max_k": report.bounds.max_k,
            "max_r": report.bounds.max_r,
            "max_t": report.bounds.max_t,
            "seed": report.bounds.seed,
        },
    })
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>().map_err(invalid)?]
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut all_passed = true;
    for suite in suites {
        let defaults = suite.default_bounds();
        let bounds = Bounds {
            max_n: args.max_n.unwrap_or(defaults.max_n),
            max_k: args.max_k.unwrap_or(defaults.max_k),
            max_r: args.max_r.unwrap_or(defaults.max_r),
            max_t: args.max_t.unwrap_or(defaults.max_t),
            seed: args.seed,
        };
        let report = run_suite(suite, bounds);
        all_passed &= report.passed();
        match args.format {
            VerifyFormat::Text => writeln!(out, "{report}")?,
            VerifyFormat::Json => writeln!(out, "{}", report_value(&report))?,
        }
        out.flush()?;
    }
    if all_passed {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}
