//! Command-line front end: every construction and verification exposed as a
//! subcommand with machine-readable JSON output on standard output.
//!
//! Exit codes: 0 on PASS/success, 1 on FAIL (a checked statement is
//! violated), 2 on ERROR (bad input or an unsupported configuration).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde_json::{json, Value};

use feulerian::exactmath::{parse_rational, rat, Rational};
use feulerian::feulerian::{
    classify_zeros, hatw_direct, hatw_from_coeffs, hatw_recursive, m_eulerian,
    quadratic_negative_root_criterion, spec_value_sequence, tp_minor_check, EulerianSpec,
    TheoremId, TpVerdict,
};
use feulerian::jacobipineiro::{
    jp_polynomial, jp_zero_location, narayana_as_jp, JPParams, NarayanaJpVariant,
};
use feulerian::millerparis::{first_mp_mismatch, gasper_identity_check, MPParams};
use feulerian::narayana::{
    ballot_path_oracle, catalan_multidim, narayana_bernstein, narayana_explicit, narayana_sulanke,
    narayana_via_feulerian, negative_zero_check, palindrome_check, BernsteinVariant,
};
use feulerian::polyalgebra::sturm_zone_counts;
use feulerian_cli::report::{
    parse_blocks, parse_rational_list, parse_usize_list, poly_json, rational_json, rationals_json,
    report, zones_json, Status,
};
use feulerian_cli::suite;

#[derive(Parser)]
#[command(
    name = "feulerian",
    about = "Exact construction and verification of generalized f-Eulerian, d-Narayana and Jacobi-Pineiro polynomials",
    version
)]
struct Cli {
    /// Write the JSON report to this path instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    All,
    Sulanke,
    Feulerian,
    Explicit,
    Bernstein,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum JpVariantArg {
    #[value(name = "beta-1-minus-d")]
    Beta1MinusD,
    #[value(name = "beta-d-minus-1")]
    BetaDMinus1,
    #[value(name = "beta-d-minus-2")]
    BetaDMinus2,
}

impl From<JpVariantArg> for NarayanaJpVariant {
    fn from(v: JpVariantArg) -> Self {
        match v {
            JpVariantArg::Beta1MinusD => NarayanaJpVariant::Beta1MinusD,
            JpVariantArg::BetaDMinus1 => NarayanaJpVariant::BetaDMinus1,
            JpVariantArg::BetaDMinus2 => NarayanaJpVariant::BetaDMinus2,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Numerator polynomial of the weighted generating series.
    Hatw {
        /// Weight exponent, as p/q or an integer.
        #[arg(long)]
        a: String,
        /// Block form f:m,f:m of the coefficient polynomial (normalized so
        /// F(0) = 1; output is scaled back by (f)_m to match the raw root
        /// product).
        #[arg(long)]
        blocks: Option<String>,
        /// Raw coefficient list c0,c1,... of the coefficient polynomial;
        /// output keeps the input scale.
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Zone counts of the numerator plus per-theorem verdicts.
    Classify {
        #[arg(long)]
        a: String,
        #[arg(long)]
        blocks: String,
    },
    /// Finite total-positivity window over the Toeplitz minors.
    TpCheck {
        /// Explicit sequence r1,r2,... (first `window` values used).
        #[arg(long)]
        seq: Option<String>,
        /// Spec form: weight (ignored for the values) and blocks generating
        /// the sequence of raw root-product values.
        #[arg(long)]
        blocks: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
    /// Region data for the quadratic negative-root criterion.
    QuadRegion {
        #[arg(long)]
        a: String,
        /// Grid points per axis.
        #[arg(long, default_value_t = 41)]
        grid: usize,
        #[arg(long, default_value = "-1")]
        b_min: String,
        #[arg(long, default_value = "7")]
        b_max: String,
        #[arg(long, default_value = "-1")]
        c_min: String,
        #[arg(long, default_value = "9")]
        c_max: String,
    },
    /// Multiset Eulerian polynomial by its recursion, with zero check.
    MEulerian {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Verify a Miller-Paris transformation as a truncated-series identity.
    MpVerify {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        delta: String,
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        rho: String,
        #[arg(long, default_value = "")]
        nu: String,
        #[arg(long, default_value = "")]
        omega: String,
        /// Series order; defaults to 2*omega + 6.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Two-sided terminating identity with collapsed Gamma ratios.
    GasperCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        m_vec: String,
    },
    /// d-Narayana polynomial by one or all routes.
    Narayana {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
    },
    /// The full route-agreement grid report.
    NarayanaGrid,
    /// Jacobi-Pineiro polynomial with zone counts and regime verdict.
    Jp {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        n: String,
    },
    /// Connection formula expressing the d-Narayana polynomial as a
    /// Jacobi-Pineiro instance.
    JpNarayana {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        variant: JpVariantArg,
    },
    /// Run the whole verification suite and print one line per criterion.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, status) = match run(&cli.command) {
        Ok(pair) => pair,
        Err(e) => (
            report("error", Value::Null, Value::Null, Status::Error, Some(json!(e.to_string()))),
            Status::Error,
        ),
    };
    let text = serde_json::to_string_pretty(&doc).expect("serializable report");
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    ExitCode::from(status.exit_code() as u8)
}

fn run(cmd: &Command) -> feulerian::Result<(Value, Status)> {
    match cmd {
        Command::Hatw { a, blocks, coeffs } => {
            let a = parse_rational(a)?;
            match (blocks, coeffs) {
                (Some(blocks), None) => {
                    let blocks = parse_blocks(blocks)?;
                    let spec = EulerianSpec::new(a.clone(), blocks)?;
                    let normalized = hatw_direct(&spec)?;
                    let recursive = hatw_recursive(&spec)?;
                    debug_assert_eq!(normalized, recursive);
                    let raw = normalized.scale(&spec.normalization());
                    let doc = report(
                        "hatw",
                        json!({"a": rational_json(&a), "blocks": spec.blocks().iter()
                            .map(|(f, m)| json!({"f": rational_json(f), "m": m})).collect::<Vec<_>>()}),
                        json!({
                            "coeffs": rationals_json(raw.coeffs()),
                            "normalized_coeffs": rationals_json(normalized.coeffs()),
                            "normalization": rational_json(&spec.normalization()),
                        }),
                        Status::Pass,
                        None,
                    );
                    Ok((doc, Status::Pass))
                }
                (None, Some(coeffs)) => {
                    let cs = parse_rational_list(coeffs)?;
                    let w = hatw_from_coeffs(&a, &cs)?;
                    let doc = report(
                        "hatw",
                        json!({"a": rational_json(&a), "coeffs": rationals_json(&cs)}),
                        poly_json(&w),
                        Status::Pass,
                        None,
                    );
                    Ok((doc, Status::Pass))
                }
                _ => Err(feulerian::Error::Parse(
                    "give exactly one of --blocks or --coeffs".into(),
                )),
            }
        }
        Command::Classify { a, blocks } => {
            let a = parse_rational(a)?;
            let spec = EulerianSpec::new(a.clone(), parse_blocks(blocks)?)?;
            let (zones, verdicts) = classify_zeros(&spec)?;
            let refuted: Vec<&TheoremId> = verdicts
                .iter()
                .filter(|v| !v.consistent())
                .map(|v| &v.theorem)
                .collect();
            let status = if refuted.is_empty() { Status::Pass } else { Status::Fail };
            let doc = report(
                "classify",
                json!({"a": rational_json(&a), "blocks": blocks}),
                json!({
                    "zones": zones_json(&zones),
                    "verdicts": verdicts.iter().map(|v| json!({
                        "theorem": format!("{:?}", v.theorem),
                        "hypothesis": v.hypothesis_holds,
                        "conclusion": v.conclusion_holds,
                    })).collect::<Vec<_>>(),
                }),
                status,
                (!refuted.is_empty()).then(|| json!(format!("{refuted:?}"))),
            );
            Ok((doc, status))
        }
        Command::TpCheck {
            seq,
            blocks,
            max_order,
            window,
        } => {
            let values = match (seq, blocks) {
                (Some(seq), None) => parse_rational_list(seq)?,
                (None, Some(blocks)) => {
                    let spec = EulerianSpec::new(Rational::one(), parse_blocks(blocks)?)?;
                    spec_value_sequence(&spec, *window)
                }
                _ => {
                    return Err(feulerian::Error::Parse(
                        "give exactly one of --seq or --blocks".into(),
                    ))
                }
            };
            let verdict = tp_minor_check(&values, *max_order, *window)?;
            let (status, witness) = match &verdict {
                TpVerdict::Pass => (Status::Pass, None),
                TpVerdict::Fail { rows, cols, value } => (
                    Status::Fail,
                    Some(json!({
                        "rows": rows,
                        "cols": cols,
                        "value": rational_json(value),
                    })),
                ),
            };
            let doc = report(
                "tp-check",
                json!({"len": values.len(), "max_order": max_order, "window": window}),
                json!({"verdict": status.label()}),
                status,
                witness,
            );
            Ok((doc, status))
        }
        Command::QuadRegion {
            a,
            grid,
            b_min,
            b_max,
            c_min,
            c_max,
        } => {
            let a = parse_rational(a)?;
            let (b0, b1) = (parse_rational(b_min)?, parse_rational(b_max)?);
            let (c0, c1) = (parse_rational(c_min)?, parse_rational(c_max)?);
            if *grid < 2 {
                return Err(feulerian::Error::Parse("grid must be >= 2".into()));
            }
            let steps = rat(*grid as i64 - 1);
            let mut rows = Vec::with_capacity(grid * grid);
            for i in 0..*grid {
                let b = &b0 + (&b1 - &b0) * rat(i as i64) / &steps;
                for j in 0..*grid {
                    let c = &c0 + (&c1 - &c0) * rat(j as i64) / &steps;
                    let inside = quadratic_negative_root_criterion(&a, &b, &c)?;
                    rows.push(json!({
                        "b": rational_json(&b),
                        "c": rational_json(&c),
                        "inside": inside,
                    }));
                }
            }
            let doc = report(
                "quad-region",
                json!({"a": rational_json(&a), "grid": grid}),
                Value::Array(rows),
                Status::Pass,
                None,
            );
            Ok((doc, Status::Pass))
        }
        Command::MEulerian { m, n } => {
            let s = m_eulerian(*m, *n);
            let zones = sturm_zone_counts(&s)?;
            let all_negative =
                zones.nonreal == 0 && zones.neg == s.degree().unwrap_or(0);
            let status = if all_negative { Status::Pass } else { Status::Fail };
            let witness = (!all_negative).then(|| zones_json(&zones));
            let doc = report(
                "m-eulerian",
                json!({"m": m, "n": n}),
                json!({
                    "coeffs": rationals_json(s.coeffs()),
                    "zones": zones_json(&zones),
                    "all_negative": all_negative,
                }),
                status,
                witness,
            );
            Ok((doc, status))
        }
        Command::MpVerify {
            which,
            delta,
            epsilon,
            rho,
            nu,
            omega,
            order,
        } => {
            let params = MPParams::new(
                parse_rational(delta)?,
                parse_rational(epsilon)?,
                parse_rational(rho)?,
                parse_rational_list(nu)?,
                parse_usize_list(omega)?,
            )?;
            let order = order.unwrap_or(2 * params.omega() + 6);
            let mismatch = first_mp_mismatch(&params, order, *which == Which::Second)?;
            let status = if mismatch.is_none() { Status::Pass } else { Status::Fail };
            let witness = mismatch.map(|(idx, lhs, rhs)| {
                json!({
                    "index": idx,
                    "lhs": rational_json(&lhs),
                    "rhs": rational_json(&rhs),
                })
            });
            let doc = report(
                "mp-verify",
                json!({
                    "which": format!("{which:?}"),
                    "delta": delta, "epsilon": epsilon, "rho": rho,
                    "nu": nu, "omega": omega, "order": order,
                }),
                json!({"verified_through": order}),
                status,
                witness,
            );
            Ok((doc, status))
        }
        Command::GasperCheck { n, b, c, f, m_vec } => {
            let b = parse_rational(b)?;
            let c = parse_rational(c)?;
            let f = parse_rational_list(f)?;
            let mv = parse_usize_list(m_vec)?;
            let equal = gasper_identity_check(*n, &b, &c, &f, &mv)?;
            let status = if equal { Status::Pass } else { Status::Fail };
            let witness = (!equal).then(|| {
                json!({"n": n, "b": rational_json(&b), "c": rational_json(&c),
                       "f": rationals_json(&f), "m_vec": mv})
            });
            let doc = report(
                "gasper-check",
                json!({"n": n, "b": rational_json(&b), "c": rational_json(&c)}),
                json!({"equal": equal}),
                status,
                witness,
            );
            Ok((doc, status))
        }
        Command::Narayana { d, m, route } => {
            let (doc, status) = narayana_command(*d, *m, *route)?;
            Ok((doc, status))
        }
        Command::NarayanaGrid => {
            let mut rows = Vec::new();
            let mut all_ok = true;
            for (d, m) in suite::acceptance_grid() {
                let (row, ok) = narayana_grid_row(d, m)?;
                all_ok &= ok;
                rows.push(row);
            }
            let status = if all_ok { Status::Pass } else { Status::Fail };
            let doc = report("narayana-grid", Value::Null, Value::Array(rows), status, None);
            Ok((doc, status))
        }
        Command::Jp { alpha, beta, n } => {
            let params = JPParams::new(
                parse_rational_list(alpha)?,
                parse_rational(beta)?,
                parse_usize_list(n)?,
            )?;
            let poly = jp_polynomial(&params)?;
            let (zones, verdict) = jp_zero_location(&params)?;
            let status = if verdict.consistent() { Status::Pass } else { Status::Fail };
            let witness =
                (!verdict.consistent()).then(|| json!({"verdict": format!("{verdict:?}")}));
            let doc = report(
                "jp",
                json!({
                    "alpha": alpha, "beta": beta, "n": n,
                    "canonical": params.canonical(),
                }),
                json!({
                    "coeffs": rationals_json(poly.coeffs()),
                    "zones": zones_json(&zones),
                    "verdict": format!("{verdict:?}"),
                }),
                status,
                witness,
            );
            Ok((doc, status))
        }
        Command::JpNarayana { d, m, variant } => {
            let rep = narayana_as_jp(*d, *m, (*variant).into())?;
            let status = if rep.identity_holds && rep.jp_cross_check != Some(false) {
                Status::Pass
            } else {
                Status::Fail
            };
            let witness = (status == Status::Fail).then(|| {
                json!({"identity_holds": rep.identity_holds, "jp_cross_check": rep.jp_cross_check})
            });
            let doc = report(
                "jp-narayana",
                json!({"d": d, "m": m, "variant": format!("{variant:?}")}),
                json!({
                    "beta": rational_json(&rep.beta),
                    "char_poly": poly_json(&rep.char_poly),
                    "char_zones": rep.char_zones.as_ref().map(zones_json),
                    "alpha": rep.alpha.as_ref().map(|a| rationals_json(a)),
                    "n_vec": rep.n_vec,
                    "identity_holds": rep.identity_holds,
                    "jp_cross_check": rep.jp_cross_check,
                }),
                status,
                witness,
            );
            Ok((doc, status))
        }
        Command::VerifyPaper { seed, jobs } => {
            let outcomes = suite::run_all(*seed, *jobs);
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            let all_ok = outcomes.iter().all(|o| o.ok());
            let status = if all_ok { Status::Pass } else { Status::Fail };
            let witness = outcomes
                .iter()
                .find(|o| !o.ok())
                .map(|o| json!({"criterion": o.index, "detail": o.detail}));
            let doc = report(
                "verify-paper",
                json!({"seed": seed, "jobs": jobs}),
                Value::Array(
                    outcomes
                        .iter()
                        .map(|o| {
                            json!({
                                "criterion": o.index,
                                "name": o.name,
                                "status": if o.ok() { "PASS" } else { "FAIL" },
                                "detail": o.detail,
                                "seconds": o.elapsed.as_secs_f64(),
                            })
                        })
                        .collect(),
                ),
                status,
                witness,
            );
            Ok((doc, status))
        }
    }
}

fn narayana_command(d: usize, m: usize, route: Route) -> feulerian::Result<(Value, Status)> {
    let reference = narayana_sulanke(d, m)?;
    let mut routes_agree = true;
    let chosen = match route {
        Route::Sulanke | Route::All => reference.clone(),
        Route::Feulerian => narayana_via_feulerian(d, m)?,
        Route::Explicit => narayana_explicit(d, m)?,
        Route::Oracle => ballot_path_oracle(d, m)?,
        Route::Bernstein => {
            let c = narayana_bernstein(d, m, BernsteinVariant::KBasis)?;
            feulerian::millerparis::bernstein_reconstruct(&c)
        }
    };
    if route == Route::All {
        routes_agree &= narayana_via_feulerian(d, m)? == reference;
        routes_agree &= narayana_explicit(d, m)? == reference;
        if d * m <= 16 {
            routes_agree &= ballot_path_oracle(d, m)? == reference;
        }
        for variant in [
            BernsteinVariant::KBasis,
            BernsteinVariant::MBasis,
            BernsteinVariant::MMinus1Basis,
        ] {
            if variant == BernsteinVariant::MMinus1Basis && d >= 3 && m == 1 {
                continue;
            }
            let c = narayana_bernstein(d, m, variant)?;
            routes_agree &= feulerian::millerparis::bernstein_reconstruct(&c) == reference;
        }
    } else {
        routes_agree = chosen == reference;
    }
    let palindromic = palindrome_check(d, m)?;
    let zeros_negative = negative_zero_check(d, m)?;
    let zones = if reference.degree().unwrap_or(0) > 0 {
        Some(sturm_zone_counts(&reference)?)
    } else {
        None
    };
    let ok = routes_agree && palindromic && zeros_negative;
    let status = if ok { Status::Pass } else { Status::Fail };
    let witness = (!ok).then(|| {
        json!({
            "routes_agree": routes_agree,
            "palindromic": palindromic,
            "zeros_negative": zeros_negative,
        })
    });
    let doc = report(
        "narayana",
        json!({"d": d, "m": m, "route": format!("{route:?}")}),
        json!({
            "coeffs": rationals_json(chosen.coeffs()),
            "catalan": rational_json(&catalan_multidim(d, m)),
            "palindromic": palindromic,
            "zeros": zones.as_ref().map(zones_json),
            "routes_agree": routes_agree,
        }),
        status,
        witness,
    );
    Ok((doc, status))
}

fn narayana_grid_row(d: usize, m: usize) -> feulerian::Result<(Value, bool)> {
    let reference = narayana_sulanke(d, m)?;
    let mut ok = ballot_path_oracle(d, m)? == reference;
    ok &= narayana_via_feulerian(d, m)? == reference;
    ok &= narayana_explicit(d, m)? == reference;
    for variant in [
        BernsteinVariant::KBasis,
        BernsteinVariant::MBasis,
        BernsteinVariant::MMinus1Basis,
    ] {
        if variant == BernsteinVariant::MMinus1Basis && d >= 3 && m == 1 {
            continue;
        }
        let c = narayana_bernstein(d, m, variant)?;
        ok &= feulerian::millerparis::bernstein_reconstruct(&c) == reference;
    }
    ok &= palindrome_check(d, m)?;
    ok &= negative_zero_check(d, m)?;
    ok &= reference.eval(&Rational::one()) == catalan_multidim(d, m);
    let row = json!({
        "d": d,
        "m": m,
        "coeffs": rationals_json(reference.coeffs()),
        "ok": ok,
    });
    Ok((row, ok))
}
