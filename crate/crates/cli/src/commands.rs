use std::time::{Duration, Instant};

use coinstack::{
    e_sequence, e_term_dp, e_term_fast, frobenius_number, is_representable, literal_gf,
    simplified_gf, DenominationSet, FrobeniusKind, Limits, RationalGF,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::cli::{Form, Strategy};
use crate::error::{CliError, EXIT_INFINITE_GAP, EXIT_MISMATCH, EXIT_NOT_REPRESENTABLE};

/// What a command produced, before it is rendered in the requested format.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    /// Series rows are tabular; everything else falls back to key,value.
    pub csv: Option<String>,
    pub exit: u8,
}

impl Outcome {
    fn new(result: Value, text: String) -> Self {
        Outcome {
            result,
            text,
            csv: None,
            exit: 0,
        }
    }
}

pub fn series(ds: &DenominationSet, n: u64, limits: &Limits) -> Result<Outcome, CliError> {
    let seq = e_sequence(ds, n, limits)?;
    let terms: Vec<String> = seq.terms().iter().map(BigUint::to_string).collect();

    let mut text = String::new();
    let mut csv = String::new();
    for (i, t) in terms.iter().enumerate() {
        text.push_str(&format!("{i} {t}\n"));
        csv.push_str(&format!("{i},{t}\n"));
    }
    Ok(Outcome {
        result: json!({ "n": n.to_string(), "terms": terms }),
        text,
        csv: Some(csv),
        exit: 0,
    })
}

pub fn decide(ds: &DenominationSet, target: u64, limits: &Limits) -> Result<Outcome, CliError> {
    let report = is_representable(ds, target, limits)?;
    let count = report.e_value.to_string();
    let (verdict, exit) = if report.representable {
        ("representable", 0)
    } else {
        ("not-representable", EXIT_NOT_REPRESENTABLE)
    };
    let text = format!("{verdict} {target} stacks={count}\n");
    let mut out = Outcome::new(
        json!({
            "target": target.to_string(),
            "verdict": verdict,
            "representable": report.representable,
            "count": count,
        }),
        text,
    );
    out.exit = exit;
    Ok(out)
}

pub fn frobenius(ds: &DenominationSet, limits: &Limits) -> Result<Outcome, CliError> {
    let r = frobenius_number(ds, limits)?;
    let kind = r.kind.as_str();
    let value_text = match (r.kind, r.value) {
        (FrobeniusKind::Finite, Some(v)) => v.to_string(),
        (FrobeniusKind::AllRepresentable, _) => "none (all amounts representable)".to_string(),
        _ => format!("none (gcd {} leaves infinitely many gaps)", ds.gcd()),
    };
    let mut text = format!("kind: {kind}\nvalue: {value_text}\n");
    let certificate = match r.certificate {
        Some(c) => {
            let last = c.start + c.length - 1;
            text.push_str(&format!(
                "certificate: {}..={} representable\n",
                c.start, last
            ));
            json!({ "start": c.start.to_string(), "length": c.length.to_string() })
        }
        None => Value::Null,
    };
    let mut out = Outcome::new(
        json!({
            "kind": kind,
            "value": r.value.map(|v| v.to_string()),
            "certificate": certificate,
        }),
        text,
    );
    if r.kind == FrobeniusKind::InfiniteGap {
        out.exit = EXIT_INFINITE_GAP;
    }
    Ok(out)
}

pub fn genfunc(ds: &DenominationSet, form: Form) -> Result<Outcome, CliError> {
    let (gf, form_name): (RationalGF, &str) = match form {
        Form::Literal => (literal_gf(ds), "literal"),
        Form::Simplified => (simplified_gf(ds), "simplified"),
    };
    let p = gf.numerator();
    let q = gf.denominator();
    let normalized = gf.normalized();
    let text = format!("P: {p}\nQ: {q}\nG: {normalized}\n");
    Ok(Outcome::new(
        json!({
            "form": form_name,
            "numerator": p.to_decimal_strings(),
            "denominator": q.to_decimal_strings(),
            "numerator_text": p.to_string(),
            "denominator_text": q.to_string(),
            "normalized": normalized,
        }),
        text,
    ))
}

/// Values with more digits than this are reported by digit count only.
const MAX_PRINTED_DIGITS: usize = 60;

struct Timing {
    name: &'static str,
    median: Duration,
    value: BigUint,
}

fn time_strategy<F>(name: &'static str, repeat: u32, mut run: F) -> Result<Timing, CliError>
where
    F: FnMut() -> Result<BigUint, coinstack::Error>,
{
    let mut samples = Vec::with_capacity(repeat as usize);
    let mut value = None;
    for _ in 0..repeat {
        let start = Instant::now();
        let v = run()?;
        samples.push(start.elapsed());
        value = Some(v);
    }
    samples.sort();
    Ok(Timing {
        name,
        median: samples[samples.len() / 2],
        value: value.expect("repeat >= 1"),
    })
}

pub fn bench(
    ds: &DenominationSet,
    n: u64,
    strategy: Strategy,
    repeat: u32,
    limits: &Limits,
) -> Result<Outcome, CliError> {
    let mut timings = Vec::new();
    if matches!(strategy, Strategy::Dp | Strategy::Both) {
        timings.push(time_strategy("dp", repeat, || e_term_dp(ds, n, limits))?);
    }
    if matches!(strategy, Strategy::Fast | Strategy::Both) {
        timings.push(time_strategy("fast", repeat, || {
            e_term_fast(ds, n, None, limits)
        })?);
    }

    if let [a, b] = &timings[..] {
        if a.value != b.value {
            return Err(CliError {
                code: EXIT_MISMATCH,
                message: format!("strategies disagree on E_{n}: dp and fast results differ"),
            });
        }
    }

    let value = &timings[0].value;
    let decimal = value.to_string();
    let digits = decimal.len();
    let printed = (digits <= MAX_PRINTED_DIGITS).then_some(decimal);

    let strategy_name = match strategy {
        Strategy::Dp => "dp",
        Strategy::Fast => "fast",
        Strategy::Both => "both",
    };
    let mut text = String::new();
    for t in &timings {
        text.push_str(&format!(
            "{}: median {:.3} ms over {repeat} runs\n",
            t.name,
            t.median.as_secs_f64() * 1e3
        ));
    }
    if timings.len() == 2 {
        text.push_str("agree: yes\n");
    }
    match &printed {
        Some(v) => text.push_str(&format!("E_{n} = {v}\n")),
        None => text.push_str(&format!("E_{n} has {digits} digits\n")),
    }

    let timing_json: Vec<Value> = timings
        .iter()
        .map(|t| json!({ "strategy": t.name, "median_ns": t.median.as_nanos().to_string() }))
        .collect();
    Ok(Outcome::new(
        json!({
            "n": n.to_string(),
            "strategy": strategy_name,
            "repeat": repeat.to_string(),
            "timings": timing_json,
            "agree": timings.len() == 2,
            "digits": digits.to_string(),
            "value": printed,
        }),
        text,
    ))
}
