//! Text-to-[`Script`] parsing with line-numbered diagnostics.

use std::collections::HashSet;
use std::str::FromStr;

use crate::metrology::Unit;
use crate::sexagesimal::parse_sex;

use super::{
    Opcode, Operand, OutputDecl, ParseError, ParseErrorKind, Script, Step,
};

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn looks_like_numeral(s: &str) -> bool {
    matches!(s.chars().next(), Some(c) if c.is_ascii_digit() || c == '-')
}

pub fn parse_script(text: &str) -> Result<Script, ParseError> {
    let mut name = String::new();
    let mut provenance = None;
    let mut outputs: Vec<OutputDecl> = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    let mut defined: HashSet<String> = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let err = |kind| ParseError { line: line_no, kind };

        let trimmed = raw.trim_start();
        if let Some(rest) = trimmed.strip_prefix("#!") {
            let (key, val) = rest
                .split_once(':')
                .ok_or_else(|| err(ParseErrorKind::Directive(
                    "expected `#! key: value`".into(),
                )))?;
            let val = val.trim();
            match key.trim() {
                "name" => name = val.to_string(),
                "provenance" => provenance = Some(val.to_string()),
                "output" => {
                    let mut words = val.split_whitespace();
                    let register = words.next().ok_or_else(|| {
                        err(ParseErrorKind::Directive(
                            "output directive names no register".into(),
                        ))
                    })?;
                    if !is_identifier(register) {
                        return Err(err(ParseErrorKind::Directive(format!(
                            "bad output register name {register:?}"
                        ))));
                    }
                    let label: Vec<&str> = words.collect();
                    outputs.push(OutputDecl {
                        register: register.to_string(),
                        label: if label.is_empty() {
                            None
                        } else {
                            Some(label.join(" "))
                        },
                    });
                }
                other => {
                    return Err(err(ParseErrorKind::Directive(format!(
                        "unknown directive key {other:?}"
                    ))))
                }
            }
            continue;
        }

        let (code, comment) = match raw.find('#') {
            Some(i) => (&raw[..i], Some(raw[i + 1..].trim())),
            None => (raw, None),
        };
        let code = code.trim();
        if code.is_empty() {
            continue;
        }

        let (target_part, rest) = code.split_once(":=").ok_or_else(|| {
            err(ParseErrorKind::Syntax("expected `<reg> := <OPCODE> ...`".into()))
        })?;
        let target = target_part.trim();
        if !is_identifier(target) {
            return Err(err(ParseErrorKind::Syntax(format!(
                "bad register name {target:?}"
            ))));
        }
        if Unit::from_str(target).is_ok() {
            return Err(err(ParseErrorKind::ReservedName(target.to_string())));
        }
        if defined.contains(target) {
            return Err(err(ParseErrorKind::DuplicateRegister(target.to_string())));
        }

        let (body, claim_part) = match rest.split_once("=>") {
            Some((b, c)) => (b, Some(c)),
            None => (rest, None),
        };

        let mut tokens = body.split_whitespace();
        let opcode_word = tokens.next().ok_or_else(|| {
            err(ParseErrorKind::Syntax("missing opcode".into()))
        })?;
        let opcode = Opcode::from_str(opcode_word)
            .map_err(|()| err(ParseErrorKind::UnknownOpcode(opcode_word.to_string())))?;

        let words: Vec<&str> = tokens.collect();
        let mut operands: Vec<Operand> = Vec::new();
        let mut i = 0;
        while i < words.len() {
            let word = words[i];
            i += 1;
            if looks_like_numeral(word) {
                let value = parse_sex(word).map_err(|e| err(ParseErrorKind::Numeral(e)))?;
                let unit = match words.get(i).and_then(|w| Unit::from_str(w).ok()) {
                    Some(u) => {
                        i += 1;
                        Some(u)
                    }
                    None => None,
                };
                operands.push(Operand::Literal { value, unit });
            } else if let Ok(unit) = Unit::from_str(word) {
                operands.push(Operand::UnitName(unit));
            } else if is_identifier(word) {
                if !defined.contains(word) {
                    return Err(err(ParseErrorKind::UndefinedRegister(word.to_string())));
                }
                operands.push(Operand::Register(word.to_string()));
            } else {
                return Err(err(ParseErrorKind::Syntax(format!(
                    "unrecognized operand {word:?}"
                ))));
            }
        }

        if operands.len() != opcode.arity() {
            return Err(err(ParseErrorKind::Arity {
                opcode: opcode.name(),
                expected: opcode.arity(),
                got: operands.len(),
            }));
        }
        for (pos, op) in operands.iter().enumerate() {
            let unit_ok = opcode == Opcode::Convert && pos == 1;
            if matches!(op, Operand::UnitName(_)) != unit_ok {
                return Err(err(ParseErrorKind::Syntax(if unit_ok {
                    "CONVERT needs a unit name as its second operand".into()
                } else {
                    format!("unit name {op} is only valid as CONVERT's target")
                })));
            }
        }

        let (tablet_claim, corrected) = match claim_part {
            None => (None, None),
            Some(cp) => {
                let (claim_str, corr_str) = match cp.split_once('!') {
                    Some((c, k)) => (c, Some(k)),
                    None => (cp, None),
                };
                let claim = parse_sex(claim_str.trim())
                    .map_err(|e| err(ParseErrorKind::Numeral(e)))?;
                let corrected = match corr_str {
                    None => None,
                    Some(k) => {
                        let k = k.trim();
                        let numeral = k.strip_prefix("error-for").ok_or_else(|| {
                            err(ParseErrorKind::Syntax(
                                "expected `! error-for <numeral>` after claim".into(),
                            ))
                        })?;
                        Some(
                            parse_sex(numeral.trim())
                                .map_err(|e| err(ParseErrorKind::Numeral(e)))?,
                        )
                    }
                };
                (Some(claim), corrected)
            }
        };

        defined.insert(target.to_string());
        steps.push(Step {
            target: target.to_string(),
            opcode,
            operands,
            tablet_claim,
            corrected,
            source_line: comment.filter(|c| !c.is_empty()).map(str::to_string),
        });
    }

    for out in &outputs {
        if !defined.contains(&out.register) {
            return Err(ParseError {
                line: last_line,
                kind: ParseErrorKind::UndefinedRegister(out.register.clone()),
            });
        }
    }

    Ok(Script {
        name,
        provenance,
        steps,
        outputs,
    })
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use crate::sexagesimal::SexRational;

    fn sex(s: &str) -> SexRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_a_claimed_step() {
        let script = parse_script("c := RECIP 12 => 0;5  # Obv. L2-4\n").unwrap();
        assert_eq!(script.steps.len(), 1);
        let step = &script.steps[0];
        assert_eq!(step.target, "c");
        assert_eq!(step.opcode, Opcode::Recip);
        assert_eq!(
            step.operands,
            vec![Operand::Literal {
                value: sex("12"),
                unit: None
            }]
        );
        assert_eq!(step.tablet_claim, Some(sex("0;5")));
        assert_eq!(step.corrected, None);
        assert_eq!(step.source_line.as_deref(), Some("Obv. L2-4"));
    }

    #[test]
    fn parses_an_annotated_error() {
        let script =
            parse_script("w := LIT 0;40\nw2 := DOUBLE w => 2;20 ! error-for 1;20\n").unwrap();
        let step = &script.steps[1];
        assert_eq!(step.tablet_claim, Some(sex("2;20")));
        assert_eq!(step.corrected, Some(sex("1;20")));
    }

    #[test]
    fn parses_directives_and_unit_suffixes() {
        let text = "#! name: demo\n#! provenance: a tablet\n#! output: v volume-sar\n\
                    v := LIT 14,24 sar\n";
        let script = parse_script(text).unwrap();
        assert_eq!(script.name, "demo");
        assert_eq!(script.provenance.as_deref(), Some("a tablet"));
        assert_eq!(script.outputs.len(), 1);
        assert_eq!(script.outputs[0].register, "v");
        assert_eq!(script.outputs[0].label.as_deref(), Some("volume-sar"));
        assert_eq!(
            script.steps[0].operands,
            vec![Operand::Literal {
                value: sex("14,24"),
                unit: Some(crate::metrology::Unit::Sar)
            }]
        );
    }

    #[test]
    fn rejects_undefined_register() {
        let e = parse_script("a := DOUBLE b\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(e.kind, ParseErrorKind::UndefinedRegister("b".into()));
    }

    #[test]
    fn rejects_redefinition() {
        let e = parse_script("a := LIT 1\na := LIT 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::DuplicateRegister("a".into()));
    }

    #[test]
    fn rejects_unit_named_register() {
        let e = parse_script("gur := LIT 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ReservedName("gur".into()));
    }

    #[test]
    fn rejects_wrong_arity_and_unknown_opcode() {
        let e = parse_script("a := MUL 3\n").unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::Arity {
                opcode: "MUL",
                expected: 2,
                got: 1
            }
        );
        let e = parse_script("a := FROB 3\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownOpcode("FROB".into()));
    }

    #[test]
    fn rejects_unit_operand_outside_convert() {
        let e = parse_script("a := LIT 1\nb := ADD a kus\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn rejects_bad_numeral_with_line_number() {
        let e = parse_script("a := LIT 1\nb := LIT 1,60\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Numeral(_)));
    }

    #[test]
    fn rejects_output_of_undefined_register() {
        let e = parse_script("#! output: q\na := LIT 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndefinedRegister("q".into()));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let script = parse_script("# heading\n\n  # more\na := LIT 1\n").unwrap();
        assert_eq!(script.steps.len(), 1);
        assert_eq!(script.steps[0].source_line, None);
    }

    #[test]
    fn display_round_trips() {
        let text = "#! name: demo\n#! output: z length\n\
                    a := LIT 14,24 sar  # line one\n\
                    b := CONVERT a nindan3\n\
                    z := LIT 2;30 => 2;30\n";
        let script = parse_script(text).unwrap();
        let rendered = script.to_string();
        let reparsed = parse_script(&rendered).unwrap();
        assert_eq!(script, reparsed);
    }

    #[test]
    fn deep_terminating_literals_round_trip() {
        // 1/2^80 needs 40 fraction places, beyond the default budget.
        let deep = SexRational::new(1, num_bigint::BigInt::from(2).pow(80)).unwrap();
        let script = Script {
            name: "deep".into(),
            provenance: None,
            steps: vec![Step {
                target: "a".into(),
                opcode: Opcode::Lit,
                operands: vec![Operand::Literal {
                    value: deep.clone(),
                    unit: None,
                }],
                tablet_claim: Some(deep),
                corrected: None,
                source_line: None,
            }],
            outputs: vec![],
        };
        let reparsed = parse_script(&script.to_string()).unwrap();
        assert_eq!(script, reparsed);
    }
}
