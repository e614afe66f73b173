//! The reverse-pass stack machine and the equivalent network of stacks in
//! series with output restrictions.
//!
//! One reverse pass pushes the input left to right through a single stack,
//! popping only the next value the output needs. Whatever is left in the
//! stack is popped top to bottom and becomes the input of the next pass. The
//! rev-tier is the number of passes after the first.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

/// Version tag written into every JSON document produced by this module.
pub const TRACE_SCHEMA: &str = "revtier.trace.v1";

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    /// Input front pushed onto the stack.
    Push,
    /// Stack top popped to the output.
    Pop,
    /// Residual stack returned to the input, top first.
    Return,
}

/// Machine state right after `action` moved `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineStep {
    pub pass: usize,
    pub action: Action,
    /// The moved value; `None` for `Return`.
    pub value: Option<u8>,
    pub output: Vec<u8>,
    pub stack: Vec<u8>,
    pub input: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassRecord {
    pub input_at_start: Vec<u8>,
    pub emitted: Vec<u8>,
    pub residual_stack_bottom_to_top: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SortTrace {
    pub passes: Vec<PassRecord>,
    pub final_output: Vec<u8>,
    pub tier: usize,
    pub steps: Vec<MachineStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PassOutcome {
    pub emitted: Vec<u8>,
    pub residual_input: Vec<u8>,
    pub next_needed: u8,
    pub residual_stack: Vec<u8>,
}

/// One reverse pass over `input`, emitting values starting at `next_needed`.
pub fn single_pass(input: &[u8], next_needed: u8) -> PassOutcome {
    run_pass(input, next_needed, &mut Vec::new(), 0, &mut None)
}

fn run_pass(
    input: &[u8],
    mut next: u8,
    output: &mut Vec<u8>,
    pass: usize,
    steps: &mut Option<&mut Vec<MachineStep>>,
) -> PassOutcome {
    let mut stack: Vec<u8> = Vec::with_capacity(input.len());
    let mut emitted = Vec::new();
    for (i, &x) in input.iter().enumerate() {
        stack.push(x);
        if let Some(steps) = steps.as_deref_mut() {
            steps.push(MachineStep {
                pass,
                action: Action::Push,
                value: Some(x),
                output: output.clone(),
                stack: stack.clone(),
                input: input[i + 1..].to_vec(),
            });
        }
        while stack.last() == Some(&next) {
            stack.pop();
            output.push(next);
            emitted.push(next);
            if let Some(steps) = steps.as_deref_mut() {
                steps.push(MachineStep {
                    pass,
                    action: Action::Pop,
                    value: Some(next),
                    output: output.clone(),
                    stack: stack.clone(),
                    input: input[i + 1..].to_vec(),
                });
            }
            next += 1;
        }
    }
    let residual_input: Vec<u8> = stack.iter().rev().copied().collect();
    PassOutcome {
        emitted,
        residual_input,
        next_needed: next,
        residual_stack: stack,
    }
}

/// Rev-tier by running the machine, with a full trace.
///
/// Panics if a pass over a non-empty input emits nothing, which would mean
/// the machine never terminates.
pub fn rev_tier_by_simulation(perm: &Permutation) -> (usize, SortTrace) {
    let mut input = perm.values().to_vec();
    let mut next = 1u8;
    let mut output = Vec::with_capacity(perm.len());
    let mut passes = Vec::new();
    let mut steps = Vec::new();
    loop {
        let pass = passes.len() + 1;
        let outcome = run_pass(&input, next, &mut output, pass, &mut Some(&mut steps));
        assert!(
            input.is_empty() || !outcome.emitted.is_empty(),
            "reverse pass {pass} over {input:?} made no progress"
        );
        passes.push(PassRecord {
            input_at_start: input,
            emitted: outcome.emitted,
            residual_stack_bottom_to_top: outcome.residual_stack,
        });
        next = outcome.next_needed;
        input = outcome.residual_input;
        if input.is_empty() {
            break;
        }
        steps.push(MachineStep {
            pass,
            action: Action::Return,
            value: None,
            output: output.clone(),
            stack: Vec::new(),
            input: input.clone(),
        });
    }
    let tier = passes.len() - 1;
    (
        tier,
        SortTrace {
            passes,
            final_output: output,
            tier,
            steps,
        },
    )
}

/// Rev-tier by simulation without recording a trace.
pub fn simulate_tier(values: &[u8]) -> usize {
    let mut input = values.to_vec();
    let mut next = 1u8;
    let mut passes = 0;
    let mut scratch = Vec::new();
    while !input.is_empty() || passes == 0 {
        let outcome = run_pass(&input, next, &mut scratch, 0, &mut None);
        assert!(input.is_empty() || !outcome.emitted.is_empty());
        next = outcome.next_needed;
        input = outcome.residual_input;
        passes += 1;
    }
    passes - 1
}

/// Number of values emitted by each pass; used by the progress invariant.
pub fn emitted_per_pass(values: &[u8]) -> Vec<usize> {
    let mut input = values.to_vec();
    let mut next = 1u8;
    let mut counts = Vec::new();
    let mut scratch = Vec::new();
    loop {
        let outcome = run_pass(&input, next, &mut scratch, 0, &mut None);
        counts.push(outcome.emitted.len());
        if outcome.emitted.is_empty() && !input.is_empty() {
            return counts;
        }
        next = outcome.next_needed;
        input = outcome.residual_input;
        if input.is_empty() {
            return counts;
        }
    }
}

/// True iff `perm` sorts within `passes` reverse passes.
pub fn sortable_within(perm: &Permutation, passes: usize) -> bool {
    passes >= 1 && simulate_tier(perm.values()) < passes
}

impl SortTrace {
    /// Table of `output | stack bottom->top | input`, one line per step.
    pub fn render_text(&self, initial: &[u8]) -> String {
        let width = initial.len().max(6);
        let cell = |v: &[u8]| -> String {
            if initial.len() > 9 {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            } else {
                v.iter().map(|x| x.to_string()).collect()
            }
        };
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$} | {:<width$} | input", "output", "stack");
        let mut current_pass = 0;
        let mut start_input = initial.to_vec();
        let mut start_output: Vec<u8> = Vec::new();
        for step in &self.steps {
            if step.pass != current_pass && step.action != Action::Return {
                current_pass = step.pass;
                let _ = writeln!(out, "-- reverse pass {current_pass}");
                let _ = writeln!(
                    out,
                    "{:<width$} | {:<width$} | {}",
                    cell(&start_output),
                    "",
                    cell(&start_input)
                );
            }
            if step.action == Action::Return {
                start_input = step.input.clone();
                start_output = step.output.clone();
                continue;
            }
            let _ = writeln!(
                out,
                "{:<width$} | {:<width$} | {}",
                cell(&step.output),
                cell(&step.stack),
                cell(&step.input)
            );
        }
        let _ = writeln!(out, "rev-tier {}", self.tier);
        out
    }

    pub fn to_json(&self, perm: &Permutation) -> serde_json::Value {
        serde_json::json!({
            "schema": TRACE_SCHEMA,
            "permutation": perm.to_string(),
            "tier": self.tier,
            "passes": self.passes.len(),
            "steps": self.steps.iter().map(|s| serde_json::json!({
                "pass": s.pass,
                "action": s.action,
                "value": s.value,
            })).collect::<Vec<_>>(),
            "pass_records": self.passes,
        })
    }
}

/// A snapshot of the stacks-in-series machine. `stacks[0]` is the stack
/// nearest the input; the last stack feeds the output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMachineState {
    pub stacks: Vec<Vec<u8>>,
    pub input: Vec<u8>,
    pub output: Vec<u8>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesMove {
    /// The value left the input or a stack directly for the output.
    Output { value: u8 },
    /// Input front pushed onto the stack nearest the input.
    Push { value: u8 },
    /// Top of `from` moved onto the stack to its left.
    Transfer { value: u8, from: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRun {
    pub sorted: bool,
    /// State before the first move followed by the state after each move.
    pub trace: Vec<SeriesMachineState>,
    pub moves: Vec<SeriesMove>,
}

/// Default guard on the number of machine moves for length `n`.
pub fn default_step_limit(n: usize) -> usize {
    10 * n * n
}

/// Runs the stacks-in-series machine with the deterministic policy:
/// output the next needed value if it is at the input front or atop any
/// stack; else push from the input; else move the top of the first
/// non-empty stack one stack toward the output; fail when only the last
/// stack holds values and its top is not needed.
pub fn series_machine_sort(perm: &Permutation, num_stacks: usize) -> SeriesRun {
    series_machine_sort_with_limit(perm, num_stacks, default_step_limit(perm.len()))
}

pub fn series_machine_sort_with_limit(
    perm: &Permutation,
    num_stacks: usize,
    step_limit: usize,
) -> SeriesRun {
    assert!(num_stacks >= 1, "need at least one stack");
    let n = perm.len();
    let mut input: VecDeque<u8> = perm.values().iter().copied().collect();
    let mut stacks: Vec<Vec<u8>> = vec![Vec::new(); num_stacks];
    let mut output: Vec<u8> = Vec::with_capacity(n);
    let snapshot = |stacks: &Vec<Vec<u8>>, input: &VecDeque<u8>, output: &Vec<u8>| {
        SeriesMachineState {
            stacks: stacks.clone(),
            input: input.iter().copied().collect(),
            output: output.clone(),
        }
    };
    let mut trace = vec![snapshot(&stacks, &input, &output)];
    let mut moves = Vec::new();
    let mut next = 1u8;
    let sorted = loop {
        if output.len() == n {
            break true;
        }
        assert!(moves.len() < step_limit, "series machine exceeded {step_limit} moves");
        let mv = if input.front() == Some(&next) {
            input.pop_front();
            SeriesMove::Output { value: next }
        } else if let Some(s) = stacks.iter().position(|s| s.last() == Some(&next)) {
            stacks[s].pop();
            SeriesMove::Output { value: next }
        } else if let Some(x) = input.pop_front() {
            stacks[0].push(x);
            SeriesMove::Push { value: x }
        } else {
            let s = stacks
                .iter()
                .position(|s| !s.is_empty())
                .expect("values remain somewhere");
            if s + 1 == num_stacks {
                break false;
            }
            let x = stacks[s].pop().unwrap();
            stacks[s + 1].push(x);
            SeriesMove::Transfer { value: x, from: s }
        };
        if let SeriesMove::Output { value } = mv {
            output.push(value);
            next += 1;
        }
        moves.push(mv);
        trace.push(snapshot(&stacks, &input, &output));
    };
    SeriesRun {
        sorted,
        trace,
        moves,
    }
}
