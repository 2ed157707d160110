mod cli;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coinstack::{parse_denominations, Limits};
use serde_json::{json, Value};

use cli::{Cli, Command, Format};
use commands::Outcome;
use error::CliError;

const MAX_WORK_VAR: &str = "COINSTACK_MAX_WORK";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code)
        }
    }
}

fn limits_from_env() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Ok(raw) = std::env::var(MAX_WORK_VAR) {
        let max_work = raw.trim().parse::<u64>().map_err(|_| {
            CliError::input(format!(
                "{MAX_WORK_VAR}={raw:?} is not a non-negative integer"
            ))
        })?;
        limits = limits.with_max_work(max_work);
    }
    Ok(limits)
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let limits = limits_from_env()?;
    let common = cli.command.common();
    let ds = parse_denominations(&common.denoms)?;

    let outcome = match &cli.command {
        Command::Series { n, .. } => commands::series(&ds, *n, &limits)?,
        Command::Decide { target, .. } => commands::decide(&ds, *target, &limits)?,
        Command::Frobenius { .. } => commands::frobenius(&ds, &limits)?,
        Command::Genfunc { form, .. } => commands::genfunc(&ds, *form)?,
        Command::Bench {
            n,
            strategy,
            repeat,
            ..
        } => commands::bench(&ds, *n, *strategy, *repeat, &limits)?,
    };

    let rendered = render(cli.command.name(), &ds.to_string(), &outcome, common.format);
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(rendered.as_bytes());
    let _ = stdout.flush();
    Ok(outcome.exit)
}

fn render(command: &str, denoms: &str, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Text => outcome.text.clone(),
        Format::Json => {
            let envelope = json!({
                "command": command,
                "denominations": denoms,
                "result": outcome.result,
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => match &outcome.csv {
            Some(csv) => csv.clone(),
            None => {
                let mut rows = Vec::new();
                flatten("", &outcome.result, &mut rows);
                rows.iter().map(|(k, v)| format!("{k},{v}\n")).collect()
            }
        },
    }
}

/// `key,value` rows for a JSON object; nested keys are joined with `.` and
/// arrays with `;`.
fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, rows);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            rows.push((prefix.to_string(), joined.join(";")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_nested_and_arrays() {
        let v = json!({
            "kind": "finite",
            "value": null,
            "certificate": { "start": "44", "length": "6" },
            "coeffs": ["-1", "0", "1"],
            "timings": [{ "strategy": "dp" }],
        });
        let mut rows = Vec::new();
        flatten("", &v, &mut rows);
        let rows: Vec<String> = rows.into_iter().map(|(k, v)| format!("{k},{v}")).collect();
        assert_eq!(
            rows,
            [
                "kind,finite",
                "value,",
                "certificate.start,44",
                "certificate.length,6",
                "coeffs,-1;0;1",
                "timings.0.strategy,dp",
            ]
        );
    }
}
