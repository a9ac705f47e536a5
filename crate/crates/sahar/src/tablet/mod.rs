//! The replay engine: a line-oriented register DSL transcribing tablet
//! procedures, an exact interpreter, and a claim verifier.
//!
//! Each script line performs one arithmetic act of the scribe and may
//! carry the value the tablet says to "see". The interpreter recomputes
//! everything exactly and grades each claim:
//!
//! - `Ok`: the tablet's value is correct;
//! - `AnnotatedError`: the tablet's value is wrong, the attested
//!   correction matches our computation ("2;20 (error for 1;20)"), and
//!   the register keeps the corrected value because the tablet itself
//!   continues with it;
//! - `Mismatch`: the claim is wrong with no matching correction;
//! - `Unclaimed`: the step states no value.
//!
//! Script grammar, one step per line, `#` starting a comment:
//!
//! ```text
//! <reg> := <OPCODE> <operand> [<operand>] [=> <claim> [! error-for <corrected>]]
//! ```
//!
//! Operands are register names or numeral literals, optionally suffixed
//! with a unit (`14,24 sar`). `CONVERT` takes a register and a target
//! unit; `STORAGE` takes a register and a constant numeral; `DECOMPOSE`
//! takes a capacity register. A comment trailing a step is kept as its
//! source citation. Lines opening with `#!` declare script metadata:
//! `#! name: …`, `#! provenance: …`, and `#! output: <reg> [label]`.

mod bundled;
mod interp;
mod parser;
mod report;

pub use bundled::{bundled, bundled_source, list_bundled, BundledInfo};
pub use interp::run;
pub use parser::parse_script;
pub use report::{verify, Report};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::metrology::{CapacityBreakdown, MetrologyError, Quantity, Unit};
use crate::sexagesimal::{SexError, SexRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Opcode {
    Lit,
    Recip,
    Mul,
    Add,
    Sub,
    Square,
    Double,
    Halve,
    Third,
    Convert,
    Storage,
    Decompose,
}

impl Opcode {
    pub const ALL: [Opcode; 12] = [
        Opcode::Lit,
        Opcode::Recip,
        Opcode::Mul,
        Opcode::Add,
        Opcode::Sub,
        Opcode::Square,
        Opcode::Double,
        Opcode::Halve,
        Opcode::Third,
        Opcode::Convert,
        Opcode::Storage,
        Opcode::Decompose,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Opcode::Lit => "LIT",
            Opcode::Recip => "RECIP",
            Opcode::Mul => "MUL",
            Opcode::Add => "ADD",
            Opcode::Sub => "SUB",
            Opcode::Square => "SQUARE",
            Opcode::Double => "DOUBLE",
            Opcode::Halve => "HALVE",
            Opcode::Third => "THIRD",
            Opcode::Convert => "CONVERT",
            Opcode::Storage => "STORAGE",
            Opcode::Decompose => "DECOMPOSE",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Opcode::Mul
            | Opcode::Add
            | Opcode::Sub
            | Opcode::Convert
            | Opcode::Storage => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Opcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Opcode {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Opcode::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or(())
    }
}

/// A step operand: a register reference, a literal (optionally carrying
/// a unit, which makes it a quantity), or a bare unit name (only valid
/// as CONVERT's target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operand {
    Register(String),
    Literal {
        value: SexRational,
        unit: Option<Unit>,
    },
    UnitName(Unit),
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Register(name) => f.write_str(name),
            Operand::Literal { value, unit: None } => f.write_str(&value.to_absolute_exact()),
            Operand::Literal {
                value,
                unit: Some(u),
            } => write!(f, "{} {}", value.to_absolute_exact(), u.ascii_name()),
            Operand::UnitName(u) => f.write_str(u.ascii_name()),
        }
    }
}

/// One line of a procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub target: String,
    pub opcode: Opcode,
    pub operands: Vec<Operand>,
    /// The value the tablet says to "see", if any.
    pub tablet_claim: Option<SexRational>,
    /// The attested modern correction when the tablet's value is a
    /// known scribal error.
    pub corrected: Option<SexRational>,
    /// Source citation, kept from the step's trailing comment.
    pub source_line: Option<String>,
}

/// A register the script presents as its result, with an optional
/// display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputDecl {
    pub register: String,
    pub label: Option<String>,
}

/// A parsed procedure: ordered steps plus metadata. Every operand
/// register is defined by an earlier step and no register is redefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub name: String,
    pub provenance: Option<String>,
    pub steps: Vec<Step>,
    pub outputs: Vec<OutputDecl>,
}

/// Canonical text form; reparsing yields an equal script.
impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            writeln!(f, "#! name: {}", self.name)?;
        }
        if let Some(p) = &self.provenance {
            writeln!(f, "#! provenance: {p}")?;
        }
        for out in &self.outputs {
            match &out.label {
                Some(label) => writeln!(f, "#! output: {} {label}", out.register)?,
                None => writeln!(f, "#! output: {}", out.register)?,
            }
        }
        for step in &self.steps {
            write!(f, "{} := {}", step.target, step.opcode.name())?;
            for op in &step.operands {
                write!(f, " {op}")?;
            }
            if let Some(claim) = &step.tablet_claim {
                write!(f, " => {}", claim.to_absolute_exact())?;
                if let Some(corr) = &step.corrected {
                    write!(f, " ! error-for {}", corr.to_absolute_exact())?;
                }
            }
            if let Some(src) = &step.source_line {
                write!(f, "  # {src}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Script {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_script(s)
    }
}

/// A register's runtime value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Number(SexRational),
    Quantity(Quantity),
    Breakdown(CapacityBreakdown),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Number(_) => "number",
            Value::Quantity(_) => "quantity",
            Value::Breakdown(_) => "capacity breakdown",
        }
    }

    pub fn as_number(&self) -> Option<&SexRational> {
        match self {
            Value::Number(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(q) => f.write_str(&q.to_absolute_exact()),
            Value::Quantity(q) => q.fmt(f),
            Value::Breakdown(b) => b.fmt(f),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Number(q) => q.serialize(serializer),
            Value::Quantity(q) => q.serialize(serializer),
            Value::Breakdown(b) => b.serialize(serializer),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "OK")]
    Ok,
    AnnotatedError,
    Mismatch,
    Unclaimed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ok => "OK",
            Verdict::AnnotatedError => "AnnotatedError",
            Verdict::Mismatch => "Mismatch",
            Verdict::Unclaimed => "Unclaimed",
        })
    }
}

/// One executed step: what we computed, what the tablet said, and the
/// grade.
#[derive(Debug, Clone, PartialEq)]
pub struct StepResult {
    pub index: usize,
    pub target: String,
    pub opcode: Opcode,
    pub computed: Value,
    pub claim: Option<SexRational>,
    pub corrected: Option<SexRational>,
    pub verdict: Verdict,
    pub source_line: Option<String>,
}

/// Verdict tallies for a finished run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub ok: usize,
    pub annotated_error: usize,
    pub mismatch: usize,
    pub unclaimed: usize,
}

impl Summary {
    pub fn status(&self) -> TraceStatus {
        if self.mismatch > 0 {
            TraceStatus::MismatchFound
        } else if self.annotated_error > 0 {
            TraceStatus::AnnotatedErrorsOnly
        } else {
            TraceStatus::AllOk
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStatus {
    AllOk,
    AnnotatedErrorsOnly,
    MismatchFound,
}

impl TraceStatus {
    pub fn label(&self) -> &'static str {
        match self {
            TraceStatus::AllOk => "all-ok",
            TraceStatus::AnnotatedErrorsOnly => "annotated-errors-only",
            TraceStatus::MismatchFound => "mismatch",
        }
    }
}

impl fmt::Display for TraceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A declared output with its final value and the verdict of the step
/// that defined it.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputValue {
    pub register: String,
    pub label: Option<String>,
    pub value: Value,
    pub verdict: Verdict,
    pub claim: Option<SexRational>,
}

/// The full record of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub script: String,
    pub results: Vec<StepResult>,
    pub summary: Summary,
    pub outputs: Vec<OutputValue>,
}

impl Trace {
    pub fn status(&self) -> TraceStatus {
        self.summary.status()
    }

    /// The documented JSON shape:
    /// `{script, steps: [{idx, opcode, computed, claim, verdict,
    /// source_line}], summary}`.
    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<serde_json::Value> = self
            .results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "idx": r.index,
                    "opcode": r.opcode.name(),
                    "computed": r.computed,
                    "claim": r.claim,
                    "verdict": r.verdict,
                    "source_line": r.source_line,
                })
            })
            .collect();
        serde_json::json!({
            "script": self.script,
            "steps": steps,
            "summary": {
                "ok": self.summary.ok,
                "annotated_error": self.summary.annotated_error,
                "mismatch": self.summary.mismatch,
                "unclaimed": self.summary.unclaimed,
                "status": self.status().label(),
            },
        })
    }

    /// One-line human summary: declared outputs, a "tablet wrote"
    /// note when a scalar output's own defining step is an annotated
    /// error, and the error tally. Scalar outputs are comma-joined;
    /// composite ones (quantities, breakdowns) are self-describing and
    /// semicolon-joined.
    pub fn summary_line(&self) -> String {
        let mut parts: Vec<(String, bool)> = Vec::new();
        for out in &self.outputs {
            match &out.value {
                Value::Number(q) => {
                    let mut s = format!("{} = {}", out.register, q.to_absolute_exact());
                    if let Some(label) = &out.label {
                        s.push(' ');
                        s.push_str(label);
                    }
                    if out.verdict == Verdict::AnnotatedError {
                        if let Some(claim) = &out.claim {
                            s.push_str(&format!("; tablet wrote {}", claim.to_absolute_exact()));
                        }
                    }
                    parts.push((s, true));
                }
                other => parts.push((other.to_string(), false)),
            }
        }
        let mut line = String::new();
        for (i, (text, numeric)) in parts.iter().enumerate() {
            if i > 0 {
                let both_numeric = *numeric && parts[i - 1].1;
                line.push_str(if both_numeric { ", " } else { "; " });
            }
            line.push_str(text);
        }
        let mut tails = Vec::new();
        if self.summary.annotated_error > 0 {
            tails.push(format!(
                "{} annotated scribal error{}",
                self.summary.annotated_error,
                if self.summary.annotated_error == 1 { "" } else { "s" }
            ));
        }
        if self.summary.mismatch > 0 {
            tails.push(format!(
                "{} mismatched claim{}",
                self.summary.mismatch,
                if self.summary.mismatch == 1 { "" } else { "s" }
            ));
        }
        for tail in tails {
            if !line.is_empty() {
                line.push_str("; ");
            }
            line.push_str(&tail);
        }
        if line.is_empty() {
            line = format!("{} steps, status {}", self.results.len(), self.status());
        }
        line
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown opcode {0:?}")]
    UnknownOpcode(String),
    #[error("{opcode} takes {expected} operand(s), got {got}")]
    Arity {
        opcode: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("register {0:?} is already defined")]
    DuplicateRegister(String),
    #[error("register {0:?} is not defined by an earlier step")]
    UndefinedRegister(String),
    #[error("register name {0:?} collides with a unit name")]
    ReservedName(String),
    #[error("bad numeral: {0}")]
    Numeral(#[from] SexError),
    #[error("bad directive: {0}")]
    Directive(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("step {index} ({target}): {kind}")]
pub struct RunError {
    pub index: usize,
    pub target: String,
    pub kind: RunErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RunErrorKind {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{opcode} needs plain numbers, got a {got}")]
    NeedsNumber {
        opcode: &'static str,
        got: &'static str,
    },
    #[error("CONVERT needs a quantity register and a target unit")]
    ConvertOperands,
    #[error("STORAGE needs a volume register and a positive constant numeral")]
    StorageOperands,
    #[error("DECOMPOSE needs a capacity register")]
    DecomposeOperand,
    #[error(transparent)]
    Metrology(#[from] MetrologyError),
    #[error("register {0:?} has no value")]
    MissingRegister(String),
}
