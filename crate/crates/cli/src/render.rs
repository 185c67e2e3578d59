use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;

use crate::report::Report;

pub fn json(reports: &[Report], as_array: bool) -> Result<String> {
    let mut out = if as_array {
        serde_json::to_string_pretty(reports)?
    } else {
        serde_json::to_string_pretty(&reports[0])?
    };
    out.push('\n');
    Ok(out)
}

/// One CSV record; unused columns stay empty.
#[derive(Serialize, Default)]
struct Row<'a> {
    p: u32,
    chi: &'a str,
    a: Option<u32>,
    record: String,
    name: String,
    i: Option<usize>,
    value: String,
    expected: String,
    source: String,
    pass: Option<bool>,
}

/// Long format: one record per block attribute, table entry or check.
pub fn csv(reports: &[Report]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let base = || Row {
            p: r.p,
            chi: &r.chi,
            a: r.a,
            ..Row::default()
        };
        for b in &r.blocks {
            let fields = [
                ("block.alpha", b.alpha.clone()),
                ("block.dim", b.dim.to_string()),
                ("block.coinvariant_dim", b.coinvariant_dim.to_string()),
                ("block.idempotent", b.idempotent.join(" ")),
            ];
            for (record, value) in fields {
                w.serialize(Row {
                    record: record.into(),
                    name: b.label.clone(),
                    value,
                    ..base()
                })?;
            }
        }
        for t in &r.tables {
            for (record, values) in [("cumulative", &t.cumulative), ("graded", &t.graded)] {
                for (i, v) in values.iter().enumerate() {
                    w.serialize(Row {
                        record: format!("{}.{record}", t.kind),
                        name: t.block.clone(),
                        i: Some(i),
                        value: v.to_string(),
                        ..base()
                    })?;
                }
            }
        }
        for c in &r.checks {
            w.serialize(Row {
                record: "check".into(),
                name: c.name.clone(),
                value: c.computed.to_string(),
                expected: c.expected.to_string(),
                source: serde_json::to_value(c.source)?.as_str().unwrap_or_default().to_string(),
                pass: Some(c.pass),
                ..base()
            })?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Blocks, then one table per filtration kind (rows per block, columns
/// per degree `i`), then the checks.
pub fn markdown(reports: &[Report]) -> String {
    let mut s = String::new();
    for (n, r) in reports.iter().enumerate() {
        if n > 0 {
            s.push('\n');
        }
        let a = r.a.map(|a| format!(", a = {a}")).unwrap_or_default();
        let _ = writeln!(s, "## {} p = {}, chi = {}{a}", r.command, r.p, r.chi);
        if !r.blocks.is_empty() {
            s.push_str("\n| block | alpha | dim | coinvariants | idempotent |\n|---|---|---|---|---|\n");
            for b in &r.blocks {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    b.label,
                    b.alpha,
                    b.dim,
                    b.coinvariant_dim,
                    b.idempotent.join(" ")
                );
            }
        }
        let mut kinds: Vec<_> = r.tables.iter().map(|t| t.kind).collect();
        kinds.dedup();
        for kind in kinds {
            let rows: Vec<_> = r.tables.iter().filter(|t| t.kind == kind).collect();
            let len = rows.iter().map(|t| t.cumulative.len()).max().unwrap_or(0);
            let _ = write!(s, "\n### {kind}\n\n| block |");
            for i in 0..len {
                let _ = write!(s, " {i} |");
            }
            s.push_str("\n|---|");
            s.push_str(&"---|".repeat(len));
            s.push('\n');
            for t in rows {
                let _ = write!(s, "| {} |", t.block);
                for v in &t.cumulative {
                    let _ = write!(s, " {v} |");
                }
                s.push('\n');
            }
        }
        if !r.checks.is_empty() {
            s.push_str("\n| check | source | expected | computed | pass |\n|---|---|---|---|---|\n");
            for c in &r.checks {
                let source = serde_json::to_value(c.source)
                    .ok()
                    .and_then(|v| v.as_str().map(str::to_string))
                    .unwrap_or_default();
                let _ = writeln!(
                    s,
                    "| {} | {source} | {} | {} | {} |",
                    c.name,
                    c.expected,
                    c.computed,
                    if c.pass { "yes" } else { "no" }
                );
            }
        }
    }
    s
}
