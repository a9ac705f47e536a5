//! Exact execution of a [`Script`] into a [`Trace`].

use std::collections::HashMap;

use crate::metrology::{capacity_from_volume, decompose_capacity, Dimension, Quantity, Unit};
use crate::sexagesimal::SexRational;

use super::{
    Opcode, Operand, OutputValue, RunError, RunErrorKind, Script, Step, StepResult, Summary,
    Trace, Value, Verdict,
};

/// Replays every step, grades every claim, and collects the declared
/// outputs. After an annotated-error step the register carries the
/// corrected value, because the tablet itself continues the procedure
/// with it.
pub fn run(script: &Script) -> Result<Trace, RunError> {
    let mut env: HashMap<String, Value> = HashMap::new();
    let mut results: Vec<StepResult> = Vec::new();
    let mut summary = Summary::default();

    for (index, step) in script.steps.iter().enumerate() {
        let at = |kind| RunError {
            index,
            target: step.target.clone(),
            kind,
        };
        let computed = eval_step(step, &env).map_err(at)?;
        let verdict = classify(&computed, step);
        match verdict {
            Verdict::Ok => summary.ok += 1,
            Verdict::AnnotatedError => summary.annotated_error += 1,
            Verdict::Mismatch => summary.mismatch += 1,
            Verdict::Unclaimed => summary.unclaimed += 1,
        }
        env.insert(step.target.clone(), computed.clone());
        results.push(StepResult {
            index,
            target: step.target.clone(),
            opcode: step.opcode,
            computed,
            claim: step.tablet_claim.clone(),
            corrected: step.corrected.clone(),
            verdict,
            source_line: step.source_line.clone(),
        });
    }

    let mut outputs = Vec::new();
    for decl in &script.outputs {
        let defining = results
            .iter()
            .rev()
            .find(|r| r.target == decl.register)
            .expect("parser guarantees outputs are defined");
        outputs.push(OutputValue {
            register: decl.register.clone(),
            label: decl.label.clone(),
            value: defining.computed.clone(),
            verdict: defining.verdict,
            claim: defining.claim.clone(),
        });
    }

    Ok(Trace {
        script: script.name.clone(),
        results,
        summary,
        outputs,
    })
}

fn operand_value(
    op: &Operand,
    env: &HashMap<String, Value>,
) -> Result<Value, RunErrorKind> {
    match op {
        Operand::Register(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| RunErrorKind::MissingRegister(name.clone())),
        Operand::Literal { value, unit: None } => Ok(Value::Number(value.clone())),
        Operand::Literal {
            value,
            unit: Some(u),
        } => Ok(Value::Quantity(Quantity::new(value.clone(), *u))),
        Operand::UnitName(_) => Err(RunErrorKind::ConvertOperands),
    }
}

fn number(
    op: &Operand,
    env: &HashMap<String, Value>,
    opcode: Opcode,
) -> Result<SexRational, RunErrorKind> {
    match operand_value(op, env)? {
        Value::Number(q) => Ok(q),
        other => Err(RunErrorKind::NeedsNumber {
            opcode: opcode.name(),
            got: other.type_name(),
        }),
    }
}

fn eval_step(step: &Step, env: &HashMap<String, Value>) -> Result<Value, RunErrorKind> {
    let ops = &step.operands;
    let num = |i: usize| number(&ops[i], env, step.opcode);
    match step.opcode {
        Opcode::Lit => operand_value(&ops[0], env),
        Opcode::Recip => num(0)?
            .reciprocal()
            .map(Value::Number)
            .map_err(|_| RunErrorKind::DivisionByZero),
        Opcode::Mul => Ok(Value::Number(num(0)? * num(1)?)),
        Opcode::Add => Ok(Value::Number(num(0)? + num(1)?)),
        Opcode::Sub => Ok(Value::Number(num(0)? - num(1)?)),
        Opcode::Square => Ok(Value::Number(num(0)?.square())),
        Opcode::Double => Ok(Value::Number(num(0)? * SexRational::from(2))),
        Opcode::Halve => Ok(Value::Number(num(0)? / SexRational::from(2))),
        Opcode::Third => Ok(Value::Number(num(0)? / SexRational::from(3))),
        Opcode::Convert => {
            let q = match operand_value(&ops[0], env)? {
                Value::Quantity(q) => q,
                _ => return Err(RunErrorKind::ConvertOperands),
            };
            let target = match &ops[1] {
                Operand::UnitName(u) => *u,
                _ => return Err(RunErrorKind::ConvertOperands),
            };
            Ok(Value::Quantity(q.convert(target)?))
        }
        Opcode::Storage => {
            // A bare number is read as a volume in volume-sar, the
            // tablets' working unit.
            let volume = match operand_value(&ops[0], env)? {
                Value::Number(n) => Quantity::new(n, Unit::Sar),
                Value::Quantity(q) if q.dimension() == Dimension::Volume => q,
                _ => return Err(RunErrorKind::StorageOperands),
            };
            let constant = match &ops[1] {
                Operand::Literal { value, unit: None } => value.clone(),
                _ => return Err(RunErrorKind::StorageOperands),
            };
            Ok(Value::Quantity(capacity_from_volume(&volume, &constant)?))
        }
        Opcode::Decompose => {
            // A bare number is read as a capacity in sila.
            let capacity = match operand_value(&ops[0], env)? {
                Value::Number(n) => Quantity::new(n, Unit::Sila),
                Value::Quantity(q) if q.dimension() == Dimension::Capacity => q,
                _ => return Err(RunErrorKind::DecomposeOperand),
            };
            Ok(Value::Breakdown(decompose_capacity(&capacity)?))
        }
    }
}

/// Does the computed value agree with a claimed numeral? Quantities
/// compare in their own unit (the claim restates the magnitude);
/// capacity breakdowns compare the claim against the gur7 count, the
/// leading figure the scribe announces.
fn claim_matches(computed: &Value, claim: &SexRational) -> bool {
    match computed {
        Value::Number(q) => q == claim,
        Value::Quantity(q) => &q.value == claim,
        Value::Breakdown(b) => {
            claim.is_integer() && !claim.is_negative() && claim.floor().to_biguint()
                == Some(b.gur7().clone())
        }
    }
}

fn classify(computed: &Value, step: &Step) -> Verdict {
    let claim = match &step.tablet_claim {
        None => return Verdict::Unclaimed,
        Some(c) => c,
    };
    if claim_matches(computed, claim) {
        return Verdict::Ok;
    }
    if let Some(corr) = &step.corrected {
        if corr != claim && claim_matches(computed, corr) {
            return Verdict::AnnotatedError;
        }
    }
    Verdict::Mismatch
}
