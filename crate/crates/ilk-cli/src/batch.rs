//! Batch runner: one graph6 line in, one report line out, in input
//! order regardless of how many worker threads raced through the file.
//! Reports never carry timing, so output is byte-identical across
//! parallelism levels; per-line failures become error reports instead of
//! stopping the stream.

use crate::commands::{self, CmdOutput};
use crate::report::{no_certificate, BudgetBlock, InputBlock, RunReport, TOOL, VERSION};
use crate::BatchCmd;
use anyhow::{Context, Result};
use ilk::formats::parse_graph6;
use ilk::{minors, z2};
use serde_json::{json, Value};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub fn batch(file: &Path, command: BatchCmd, jobs: usize) -> Result<i32> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("cannot read batch file {}", file.display()))?;
    let lines: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let workers = jobs.clamp(1, lines.len().max(1));

    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<String>>> = lines.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= lines.len() {
                    break;
                }
                let (number, line) = &lines[i];
                let report = run_line(command, *number, line);
                *slots[i].lock().expect("no worker panics while holding a slot") = Some(report);
            });
        }
    });

    for slot in slots {
        let line = slot
            .into_inner()
            .expect("no worker panics while holding a slot")
            .expect("every line was claimed by some worker");
        println!("{line}");
    }
    Ok(0)
}

fn command_name(command: BatchCmd) -> &'static str {
    match command {
        BatchCmd::Il => "il",
        BatchCmd::Z2il => "z2il",
        BatchCmd::Planar => "planar",
        BatchCmd::Info => "info",
    }
}

fn default_parameters(command: BatchCmd) -> Value {
    match command {
        BatchCmd::Il => json!({"budget": minors::DEFAULT_BUDGET}),
        BatchCmd::Z2il => json!({"cap": z2::DEFAULT_PAIR_CAP}),
        BatchCmd::Planar => json!({"budget": minors::DEFAULT_BUDGET}),
        BatchCmd::Info => json!({"min_abs": 1, "twists": null}),
    }
}

fn run_line(command: BatchCmd, number: usize, text: &str) -> String {
    let source = json!({"kind": "graph6", "text": text, "line": number});
    let parameters = default_parameters(command);
    match parse_graph6(text) {
        Ok(g) => {
            let input = InputBlock::for_graph(source, &g);
            let out = match command {
                BatchCmd::Il => commands::exec_il(&g, minors::DEFAULT_BUDGET),
                BatchCmd::Z2il => commands::exec_z2il(&g, z2::DEFAULT_PAIR_CAP),
                BatchCmd::Planar => commands::exec_planar(&g, minors::DEFAULT_BUDGET),
                BatchCmd::Info => commands::exec_info(&g, None, 1),
            };
            match out {
                Ok(o) => render(command, input, parameters, o),
                Err(e) => error_report(command, input, parameters, format!("{e:#}")),
            }
        }
        Err(e) => error_report(
            command,
            InputBlock::bare(source),
            parameters,
            format!("invalid graph6 input: {e}"),
        ),
    }
}

fn render(command: BatchCmd, input: InputBlock, parameters: Value, out: CmdOutput) -> String {
    RunReport {
        tool: TOOL,
        version: VERSION,
        command: command_name(command),
        input,
        parameters,
        verdict: out.verdict,
        certificate: out.certificate,
        result: out.result,
        budget: BudgetBlock { exceeded: out.budget_detail.is_some(), detail: out.budget_detail },
        timing_ms: None,
        error: None,
    }
    .to_line()
}

fn error_report(command: BatchCmd, input: InputBlock, parameters: Value, message: String) -> String {
    RunReport {
        tool: TOOL,
        version: VERSION,
        command: command_name(command),
        input,
        parameters,
        verdict: Value::Null,
        certificate: no_certificate(),
        result: None,
        budget: BudgetBlock { exceeded: false, detail: None },
        timing_ms: None,
        error: Some(message),
    }
    .to_line()
}
