//! One handler per subcommand. Handlers map library results into the report
//! envelope; `failed > 0` in the totals is what drives exit code 2 (a
//! verification failure would be a counterexample, so it is never silent).

use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use zerosum_core::error::Error as CoreError;
use zerosum_core::fp::{CanonicalSet, FpContext, FpVector2};
use zerosum_core::integral::{signed_cube_sum_coeff, signed_cube_sum_eval};
use zerosum_core::poly::{Monomial, Polynomial};
use zerosum_core::sampling::random_polynomial_case;
use zerosum_core::verify::{
    grt_report, proof_trace, proof_trace_from_set, survey_proof_traces, verify_lemma5,
    Lemma5Route, ProofTrace, SurveyAccum, SurveyMode, Theorem1Survey,
};
use zerosum_core::zerosum::{
    balandraud_check, cw_witness_search, find_zero_sum_subset, olson_constant, sharpness_sequence,
    sigma_sets, theorem4_check, theorem4_exhaustive, theorem4_sampled, BalandraudCase, GroupKind,
    GroupValue, OlsonResult, Witness,
};

use crate::args::{
    BalandraudArgs, Cli, Command, CwSearchArgs, FindZerosumArgs, GroupArg, GrtReportArgs,
    IntegralArgs, Lemma5Args, ModeArg, OlsonArgs, ProofTraceArgs, RouteArg, SigmaArgs,
    Theorem4Args, VerifyTheorem1Args,
};
use crate::checkpoint::{Checkpoint, CheckpointWriter};
use crate::report::{self, CommandResult, Totals};
use crate::vecfile::{parse_scalar_file, parse_vector_file, DupPolicy};

/// Cases dispatched to workers per merge step; checkpoints are considered
/// after every merged block.
pub const BLOCK_SIZE: u64 = 32_768;

pub struct Outcome {
    pub report_text: String,
    pub failed: u64,
}

struct Dispatched {
    command: &'static str,
    p: u32,
    output: Option<PathBuf>,
    result: CommandResult,
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let started = Instant::now();
    let dispatched = dispatch(cli.command)?;
    let now_ms = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0);
    let value = report::envelope(
        dispatched.command,
        dispatched.p,
        &dispatched.result,
        now_ms,
        started.elapsed().as_millis() as u64,
    );
    let text = report::to_pretty(&value);
    if let Some(path) = &dispatched.output {
        report::write_atomic(path, &text)
            .with_context(|| format!("cannot write report {}", path.display()))?;
    }
    Ok(Outcome {
        report_text: text,
        failed: dispatched.result.totals.failed,
    })
}

fn dispatch(command: Command) -> Result<Dispatched> {
    match command {
        Command::VerifyTheorem1(args) => cmd_verify_theorem1(args),
        Command::Lemma5(args) => cmd_lemma5(args),
        Command::Integral(args) => cmd_integral(args),
        Command::FindZerosum(args) => cmd_find_zerosum(args),
        Command::Sigma(args) => cmd_sigma(args),
        Command::Olson(args) => cmd_olson(args),
        Command::Balandraud(args) => cmd_balandraud(args),
        Command::Theorem4(args) => cmd_theorem4(args),
        Command::CwSearch(args) => cmd_cw_search(args),
        Command::GrtReport(args) => cmd_grt_report(args),
        Command::ProofTrace(args) => cmd_proof_trace(args),
    }
}

fn group_value_json(v: &GroupValue) -> Value {
    match v {
        GroupValue::Scalar(x) => json!(x),
        GroupValue::Vector(x, y) => json!([x, y]),
    }
}

fn vector_json(v: &FpVector2) -> Value {
    json!([v.x.value(), v.y.value()])
}

fn witness_json<F: Fn(usize) -> Value>(w: &Witness, element: F) -> Value {
    json!({
        "positions": w.indices.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        "elements": w.indices.iter().map(|&i| element(i)).collect::<Vec<_>>(),
        "size": w.len(),
    })
}

fn olson_json(r: &OlsonResult) -> Value {
    json!({
        "group": r.group.as_str(),
        "olson_constant": r.olson_constant,
        "extremal_set": r.extremal_set.iter().map(group_value_json).collect::<Vec<_>>(),
        "extremal_size": r.extremal_set.len(),
    })
}

fn balandraud_case_json(c: &BalandraudCase) -> Value {
    json!({
        "set": c.set,
        "d": c.d,
        "sigma_size": c.sigma_size,
        "sigma_star_size": c.sigma_star_size,
        "sigma_bound": c.sigma_bound,
        "sigma_star_bound": c.sigma_star_bound,
    })
}

fn cmd_verify_theorem1(args: VerifyTheorem1Args) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let mode = match args.mode {
        ModeArg::Exhaustive => SurveyMode::Exhaustive,
        ModeArg::Sampled => SurveyMode::Sampled {
            trials: args.trials,
            seed: args.seed,
        },
    };
    let survey = Theorem1Survey::new(ctx, mode)?;
    let fingerprint = match mode {
        SurveyMode::Exhaustive => {
            format!("verify-theorem1 p={} mode=exhaustive seed={}", args.p, args.seed)
        }
        SurveyMode::Sampled { trials, .. } => format!(
            "verify-theorem1 p={} mode=sampled trials={} seed={}",
            args.p, trials, args.seed
        ),
    };

    let (start, resume_accum) = if args.resume {
        let path = args.checkpoint.as_ref().expect("clap enforces --checkpoint");
        let cp = Checkpoint::load(path)?;
        if cp.fingerprint != fingerprint {
            bail!(
                "checkpoint fingerprint mismatch: file says {:?}, this run is {:?}",
                cp.fingerprint,
                fingerprint
            );
        }
        (cp.cursor, cp.to_accum())
    } else {
        (0, SurveyAccum::default())
    };

    let mut writer = args
        .checkpoint
        .as_ref()
        .map(|p| CheckpointWriter::new(p.clone(), fingerprint.clone()));
    if let Some(w) = writer.as_mut() {
        w.save(start, &resume_accum)?;
    }

    let mut save_err: Option<anyhow::Error> = None;
    let mut prev_cursor = start;
    let report = survey.run(args.workers, start, resume_accum, BLOCK_SIZE, &mut |cursor, accum| {
        if let Some(w) = writer.as_mut() {
            let done = cursor.saturating_sub(prev_cursor);
            prev_cursor = cursor;
            if save_err.is_none() {
                if let Err(e) = w.maybe_save(cursor, done, accum) {
                    save_err = Some(e);
                }
            }
        }
    });
    if let Some(e) = save_err {
        return Err(e);
    }
    if let Some(w) = writer.as_mut() {
        let final_accum = SurveyAccum {
            verified: report.verified_cases,
            failures: report.failures.clone(),
            min_witness: report.min_witness,
            max_witness: report.max_witness,
        };
        w.save(report.cursor, &final_accum)?;
    }

    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({"cursor": f.cursor, "tuple": f.tuple, "message": f.message}))
        .collect();
    let result = CommandResult {
        mode: mode.as_str().to_string(),
        seed: args.seed,
        totals: Totals {
            total: report.total_cases,
            verified: report.verified_cases,
            failed: failures.len() as u64,
        },
        failures,
        details: json!({
            "cursor": report.cursor,
            "min_witness": report.min_witness,
            "max_witness": report.max_witness,
            "trials": match mode { SurveyMode::Sampled { trials, .. } => Some(trials), _ => None },
        }),
    };
    Ok(Dispatched {
        command: "verify-theorem1",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_lemma5(args: Lemma5Args) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let route = match args.route {
        RouteArg::Auto => {
            if args.p <= 7 {
                Lemma5Route::FullExpansion
            } else {
                Lemma5Route::Targeted
            }
        }
        RouteArg::Full => Lemma5Route::FullExpansion,
        RouteArg::Derivative => Lemma5Route::Derivative,
        RouteArg::Targeted => Lemma5Route::Targeted,
    };
    let r = verify_lemma5(&ctx, route)?;
    let failures = if r.ok {
        vec![]
    } else {
        vec![json!({
            "message": format!("{} monomials use every variable", r.full_support_terms)
        })]
    };
    let result = CommandResult {
        mode: route.as_str().to_string(),
        seed: 0,
        totals: Totals {
            total: 1,
            verified: r.ok as u64,
            failed: !r.ok as u64,
        },
        failures,
        details: json!({
            "ok": r.ok,
            "full_support_terms": r.full_support_terms,
            "coefficients_checked": r.coefficients_checked,
            "term_count": r.term_count,
            "derivative_is_zero": r.derivative_is_zero,
        }),
    };
    Ok(Dispatched {
        command: "lemma5",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_integral(args: IntegralArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    if args.max_vars == 0 || args.max_vars > 10 {
        bail!("--max-vars must be between 1 and 10");
    }
    let mut failures: Vec<Value> = Vec::new();
    let mut agreed = 0u64;
    for index in 0..args.trials {
        let f = random_polynomial_case(&ctx, args.seed, index, args.max_vars, args.max_degree, 12);
        let by_eval = signed_cube_sum_eval(&f)?;
        let by_coeff = signed_cube_sum_coeff(&f);
        if by_eval == by_coeff {
            agreed += 1;
        } else {
            failures.push(json!({
                "case_index": index,
                "polynomial": f.to_string(),
                "eval": by_eval.value(),
                "coeff": by_coeff.value(),
            }));
        }
    }

    // Exhaustive missing-variable vanishing: every multilinear monomial that
    // omits at least one variable integrates to zero.
    let mut missing_checked = 0u64;
    let mut missing_ok = 0u64;
    for n in 1..=args.max_vars {
        for mask in 0u32..((1u32 << n) - 1) {
            let exps: Vec<u8> = (0..n).map(|i| (mask >> i & 1) as u8).collect();
            let m = Monomial::new(exps);
            let poly = Polynomial::from_terms(ctx, n, vec![(m.clone(), ctx.one())])?;
            let v = signed_cube_sum_eval(&poly)?;
            missing_checked += 1;
            if v.is_zero() {
                missing_ok += 1;
            } else {
                failures.push(json!({
                    "monomial": m.to_string(),
                    "n": n,
                    "integral": v.value(),
                }));
            }
        }
    }

    let total = args.trials + missing_checked;
    let verified = agreed + missing_ok;
    let result = CommandResult {
        mode: "sampled".to_string(),
        seed: args.seed,
        totals: Totals {
            total,
            verified,
            failed: failures.len() as u64,
        },
        failures,
        details: json!({
            "trials": args.trials,
            "max_vars": args.max_vars,
            "max_degree": args.max_degree,
            "method_agreements": agreed,
            "missing_variable_monomials_checked": missing_checked,
        }),
    };
    Ok(Dispatched {
        command: "integral",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_find_zerosum(args: FindZerosumArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let (witness_value, count, group) = match args.group {
        GroupArg::Fp2 => {
            let set = parse_vector_file(&args.input, &ctx, DupPolicy::Reject, true)?;
            let w = find_zero_sum_subset(&ctx, &set);
            (
                w.map(|w| witness_json(&w, |i| vector_json(&set[i]))),
                set.len(),
                "fp2",
            )
        }
        GroupArg::Fp => {
            let set = parse_scalar_file(&args.input, &ctx, DupPolicy::Reject, true)?;
            let w = find_zero_sum_subset(&ctx, &set);
            (
                w.map(|w| witness_json(&w, |i| json!(set[i].value()))),
                set.len(),
                "fp",
            )
        }
    };
    let result = CommandResult {
        mode: group.to_string(),
        seed: 0,
        totals: Totals { total: 1, verified: 1, failed: 0 },
        failures: vec![],
        details: json!({
            "input_size": count,
            "zero_sum_free": witness_value.is_none(),
            "witness": witness_value,
        }),
    };
    Ok(Dispatched {
        command: "find-zerosum",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_sigma(args: SigmaArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let (details, group) = match args.group {
        GroupArg::Fp2 => {
            let set = parse_vector_file(&args.input, &ctx, DupPolicy::Reject, true)?;
            let s = sigma_sets(&ctx, &set)?;
            (
                json!({
                    "input_size": set.len(),
                    "sigma": s.sigma.iter().map(vector_json).collect::<Vec<_>>(),
                    "sigma_star": s.sigma_star.iter().map(vector_json).collect::<Vec<_>>(),
                    "sigma_size": s.sigma.len(),
                    "sigma_star_size": s.sigma_star.len(),
                }),
                "fp2",
            )
        }
        GroupArg::Fp => {
            let set = parse_scalar_file(&args.input, &ctx, DupPolicy::Reject, true)?;
            let s = sigma_sets(&ctx, &set)?;
            (
                json!({
                    "input_size": set.len(),
                    "sigma": s.sigma.iter().map(|e| e.value()).collect::<Vec<_>>(),
                    "sigma_star": s.sigma_star.iter().map(|e| e.value()).collect::<Vec<_>>(),
                    "sigma_size": s.sigma.len(),
                    "sigma_star_size": s.sigma_star.len(),
                }),
                "fp",
            )
        }
    };
    let result = CommandResult {
        mode: group.to_string(),
        seed: 0,
        totals: Totals { total: 1, verified: 1, failed: 0 },
        failures: vec![],
        details,
    };
    Ok(Dispatched {
        command: "sigma",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_olson(args: OlsonArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let kind = match args.group {
        GroupArg::Fp => GroupKind::Fp,
        GroupArg::Fp2 => GroupKind::Fp2,
    };
    let r = olson_constant(&ctx, kind)?;
    let result = CommandResult {
        mode: kind.as_str().to_string(),
        seed: 0,
        totals: Totals { total: 1, verified: 1, failed: 0 },
        failures: vec![],
        details: olson_json(&r),
    };
    Ok(Dispatched {
        command: "olson",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_balandraud(args: BalandraudArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let r = balandraud_check(&ctx)?;
    let failures: Vec<Value> = r.violations.iter().map(balandraud_case_json).collect();
    let result = CommandResult {
        mode: "exhaustive".to_string(),
        seed: 0,
        totals: Totals {
            total: r.sets_checked,
            verified: r.sets_checked - failures.len() as u64,
            failed: failures.len() as u64,
        },
        failures,
        details: json!({
            "sets_checked": r.sets_checked,
            "tight_count": r.tight_count,
            "tight_example": r.tight_example.as_ref().map(balandraud_case_json),
        }),
    };
    Ok(Dispatched {
        command: "balandraud",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_theorem4(args: Theorem4Args) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let p = args.p as usize;
    let required_len = 2 * p - 1;

    if let Some(input) = &args.input {
        let seq = parse_vector_file(input, &ctx, DupPolicy::Allow, true)?;
        let witness_required = seq.len() >= required_len;
        let witness = theorem4_check(&ctx, &seq);
        let mut failures = Vec::new();
        if witness.is_none() && witness_required {
            failures.push(json!({
                "message": format!(
                    "sequence of length {} (>= {required_len}) has no zero-sum subsequence",
                    seq.len()
                ),
            }));
        }
        let result = CommandResult {
            mode: "input".to_string(),
            seed: 0,
            totals: Totals {
                total: 1,
                verified: 1 - failures.len() as u64,
                failed: failures.len() as u64,
            },
            failures,
            details: json!({
                "length": seq.len(),
                "witness_required": witness_required,
                "witness": witness.map(|w| witness_json(&w, |i| vector_json(&seq[i]))),
            }),
        };
        return Ok(Dispatched {
            command: "theorem4",
            p: args.p,
            output: args.output,
            result,
        });
    }

    let length = args.length.unwrap_or(required_len);
    let mode = args.mode.unwrap_or(ModeArg::Exhaustive);
    let r = match mode {
        ModeArg::Exhaustive => theorem4_exhaustive(&ctx, length)?,
        ModeArg::Sampled => theorem4_sampled(&ctx, length, args.trials, args.seed)?,
    };
    let mut failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| json!({"case_index": f.case_index, "sequence": f.sequence}))
        .collect();

    // The extremal sequence of length 2(p-1) must be zero-sum-free.
    let sharp = sharpness_sequence(&ctx);
    let sharp_free = theorem4_check(&ctx, &sharp).is_none();
    if !sharp_free {
        failures.push(json!({
            "message": format!(
                "extremal sequence of length {} unexpectedly has a zero-sum subsequence",
                sharp.len()
            ),
        }));
    }

    let total = r.total + 1;
    let failed = failures.len() as u64;
    let result = CommandResult {
        mode: mode_str(mode).to_string(),
        seed: args.seed,
        totals: Totals {
            total,
            verified: total - failed,
            failed,
        },
        failures,
        details: json!({
            "length": length,
            "found": r.found,
            "absent": r.absent,
            "witness_required": r.witness_required,
            "sharpness": {
                "length": sharp.len(),
                "zero_sum_free": sharp_free,
            },
            "trials": match mode { ModeArg::Sampled => Some(args.trials), _ => None },
        }),
    };
    Ok(Dispatched {
        command: "theorem4",
        p: args.p,
        output: args.output,
        result,
    })
}

fn mode_str(mode: ModeArg) -> &'static str {
    match mode {
        ModeArg::Exhaustive => "exhaustive",
        ModeArg::Sampled => "sampled",
    }
}

fn cmd_cw_search(args: CwSearchArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let vectors = parse_vector_file(&args.input, &ctx, DupPolicy::Allow, true)?;
    let r = cw_witness_search(&ctx, &vectors)?;
    let details = match &r {
        Some(w) => json!({
            "input_size": vectors.len(),
            "point": w.point,
            "support": w.support.iter().map(|&i| i + 1).collect::<Vec<_>>(),
            "support_elements": w.support.iter().map(|&i| vector_json(&vectors[i])).collect::<Vec<_>>(),
        }),
        None => json!({
            "input_size": vectors.len(),
            "point": Value::Null,
            "note": "only the all-zero point solves the system",
        }),
    };
    let result = CommandResult {
        mode: "exhaustive".to_string(),
        seed: 0,
        totals: Totals { total: 1, verified: 1, failed: 0 },
        failures: vec![],
        details,
    };
    Ok(Dispatched {
        command: "cw-search",
        p: args.p,
        output: args.output,
        result,
    })
}

fn cmd_grt_report(args: GrtReportArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;
    let r = grt_report(&ctx)?;
    let result = CommandResult {
        mode: "exact".to_string(),
        seed: 0,
        totals: Totals { total: 1, verified: 1, failed: 0 },
        failures: vec![],
        details: json!({
            "lhs_plane": olson_json(&r.plane),
            "line": olson_json(&r.line),
            "rhs": r.rhs,
            "observed_equal": r.observed_equal,
        }),
    };
    Ok(Dispatched {
        command: "grt-report",
        p: args.p,
        output: args.output,
        result,
    })
}

fn trace_json(t: &ProofTrace, vectors: &[FpVector2]) -> Value {
    json!({
        "a": t.coeffs,
        "i_p": t.i_p.value(),
        "i_q": t.i_q.value(),
        "even_zero_sum_subsets": t.even_zero_sum_subsets,
        "odd_zero_sum_subsets": t.odd_zero_sum_subsets,
        "witness": witness_json(&t.witness, |i| vector_json(&vectors[i])),
    })
}

fn cmd_proof_trace(args: ProofTraceArgs) -> Result<Dispatched> {
    let ctx = FpContext::new(args.p)?;

    if let Some(survey_mode) = args.survey {
        let mode = match survey_mode {
            ModeArg::Exhaustive => SurveyMode::Exhaustive,
            ModeArg::Sampled => SurveyMode::Sampled {
                trials: args.trials,
                seed: args.seed,
            },
        };
        let r = survey_proof_traces(&ctx, mode)?;
        let failures: Vec<Value> = r
            .failures
            .iter()
            .map(|f| json!({"cursor": f.cursor, "tuple": f.tuple, "message": f.message}))
            .collect();
        let result = CommandResult {
            mode: mode.as_str().to_string(),
            seed: args.seed,
            totals: Totals {
                total: r.total,
                verified: r.verified,
                failed: failures.len() as u64,
            },
            failures,
            details: json!({
                "trials": match mode { SurveyMode::Sampled { trials, .. } => Some(trials), _ => None },
            }),
        };
        return Ok(Dispatched {
            command: "proof-trace",
            p: args.p,
            output: args.output,
            result,
        });
    }

    let canonical = if let Some(csv) = &args.a {
        let values: Vec<u32> = csv
            .split(',')
            .map(|t| t.trim().parse::<u32>().with_context(|| format!("bad coefficient {t:?}")))
            .collect::<Result<_>>()?;
        CanonicalSet::from_values(ctx, &values)?
    } else if let Some(input) = &args.input {
        let set = parse_vector_file(input, &ctx, DupPolicy::Reject, false)?;
        let full_set_check = args.check_full_set.then(|| {
            match find_zero_sum_subset(&ctx, &set) {
                Some(w) => witness_json(&w, |i| vector_json(&set[i])),
                None => Value::Null,
            }
        });
        return finish_single_trace(args.p, args.output, proof_trace_from_set(&ctx, &set), full_set_check);
    } else {
        bail!("proof-trace needs one of --a, --input or --survey");
    };
    finish_single_trace(args.p, args.output, proof_trace(&canonical), None)
}

fn finish_single_trace(
    p: u32,
    output: Option<PathBuf>,
    trace: std::result::Result<ProofTrace, CoreError>,
    full_set_witness: Option<Value>,
) -> Result<Dispatched> {
    let (details, failures) = match trace {
        Ok(t) => {
            let ctx = FpContext::new(p)?;
            let canonical = CanonicalSet::from_values(ctx, &t.coeffs)?;
            let vectors = canonical.vectors();
            let mut details = trace_json(&t, &vectors);
            if let Some(w) = full_set_witness {
                details["full_set_witness"] = w;
            }
            (details, vec![])
        }
        Err(CoreError::Verification(msg)) => (Value::Null, vec![json!({"message": msg})]),
        Err(e) => return Err(e.into()),
    };
    let failed = failures.len() as u64;
    let result = CommandResult {
        mode: "single".to_string(),
        seed: 0,
        totals: Totals {
            total: 1,
            verified: 1 - failed,
            failed,
        },
        failures,
        details,
    };
    Ok(Dispatched {
        command: "proof-trace",
        p,
        output,
        result,
    })
}

/// Re-exported hook for integration tests: runs a command line (without the
/// binary name) and returns the report text plus the failure count.
pub fn run_args<I, S>(argv: I) -> Result<Outcome>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let mut full: Vec<std::ffi::OsString> = vec!["zerosum".into()];
    full.extend(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(full)?;
    run(cli)
}
