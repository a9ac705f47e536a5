//! Rendering a [`Trace`] for people and machines.

use std::fmt::Write as _;

use super::{Trace, TraceStatus, Verdict};

/// A graded replay, ready to print.
#[derive(Debug, Clone)]
pub struct Report {
    status: TraceStatus,
    text: String,
    json: serde_json::Value,
    summary_line: String,
}

impl Report {
    pub fn status(&self) -> TraceStatus {
        self.status
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn json(&self) -> &serde_json::Value {
        &self.json
    }

    pub fn summary_line(&self) -> &str {
        &self.summary_line
    }

    /// Replay exit policy: mismatches always fail; annotated scribal
    /// errors fail only under `--strict`.
    pub fn exit_code(&self, strict: bool) -> i32 {
        match self.status {
            TraceStatus::AllOk => 0,
            TraceStatus::AnnotatedErrorsOnly => {
                if strict {
                    1
                } else {
                    0
                }
            }
            TraceStatus::MismatchFound => 1,
        }
    }
}

pub fn verify(trace: &Trace) -> Report {
    Report {
        status: trace.status(),
        text: render_text(trace),
        json: trace.to_json(),
        summary_line: trace.summary_line(),
    }
}

fn render_text(trace: &Trace) -> String {
    let mut rows: Vec<[String; 6]> = Vec::new();
    rows.push([
        "idx".into(),
        "reg".into(),
        "opcode".into(),
        "computed".into(),
        "claim".into(),
        "verdict".into(),
    ]);
    for r in &trace.results {
        let claim = match (&r.claim, &r.corrected) {
            (Some(c), Some(k)) => format!("{} ! {}", c.to_absolute_exact(), k.to_absolute_exact()),
            (Some(c), None) => c.to_absolute_exact(),
            (None, _) => "-".into(),
        };
        rows.push([
            r.index.to_string(),
            r.target.clone(),
            r.opcode.name().into(),
            r.computed.to_string(),
            claim,
            r.verdict.to_string(),
        ]);
    }
    let mut widths = [0usize; 6];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }

    let mut out = String::new();
    if !trace.script.is_empty() {
        let _ = writeln!(out, "script {}", trace.script);
    }
    for (i, row) in rows.iter().enumerate() {
        let mut line = String::new();
        for (w, cell) in widths.iter().zip(row) {
            let pad = w - cell.chars().count();
            line.push_str(cell);
            line.push_str(&" ".repeat(pad + 2));
        }
        let line = line.trim_end();
        let _ = writeln!(out, "{line}");
        if i == 0 {
            let total: usize = widths.iter().map(|w| w + 2).sum::<usize>() - 2;
            let _ = writeln!(out, "{}", "-".repeat(total));
        }
    }
    for r in &trace.results {
        if r.verdict == Verdict::AnnotatedError {
            if let (Some(claim), Some(corr)) = (&r.claim, &r.corrected) {
                let _ = writeln!(
                    out,
                    "note: step {} ({}) tablet wrote {}, error for {}",
                    r.index,
                    r.target,
                    claim.to_absolute_exact(),
                    corr.to_absolute_exact()
                );
            }
        }
    }
    let s = &trace.summary;
    let _ = writeln!(
        out,
        "summary: {} OK, {} annotated, {} mismatch, {} unclaimed -- status {}",
        s.ok,
        s.annotated_error,
        s.mismatch,
        s.unclaimed,
        trace.status()
    );
    let _ = writeln!(out, "{}", trace.summary_line());
    out
}

#[cfg(test)]
mod tests {
    use super::super::{parse_script, run, verify, TraceStatus};

    #[test]
    fn report_text_includes_table_and_notes() {
        let script = parse_script(
            "#! name: demo\n\
             a := LIT 0;40\n\
             b := DOUBLE a => 2;20 ! error-for 1;20\n",
        )
        .unwrap();
        let report = verify(&run(&script).unwrap());
        assert_eq!(report.status(), TraceStatus::AnnotatedErrorsOnly);
        let text = report.text();
        assert!(text.contains("script demo"));
        assert!(text.contains("AnnotatedError"));
        assert!(text.contains("tablet wrote 2;20, error for 1;20"));
        assert!(text.contains("status annotated-errors-only"));
        assert_eq!(report.exit_code(false), 0);
        assert_eq!(report.exit_code(true), 1);
    }

    #[test]
    fn mismatch_exit_code_is_one_regardless() {
        let script = parse_script("a := LIT 2\nb := DOUBLE a => 5\n").unwrap();
        let report = verify(&run(&script).unwrap());
        assert_eq!(report.status(), TraceStatus::MismatchFound);
        assert_eq!(report.exit_code(false), 1);
        assert_eq!(report.exit_code(true), 1);
    }

    #[test]
    fn all_ok_exit_code_is_zero() {
        let script = parse_script("a := LIT 2 => 2\n").unwrap();
        let report = verify(&run(&script).unwrap());
        assert_eq!(report.status(), TraceStatus::AllOk);
        assert_eq!(report.exit_code(true), 0);
    }
}
