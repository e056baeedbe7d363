//! Text, CSV, JSON and DOT renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use crate::poset::Poset;
use crate::sasaki::OpTable;
use crate::subset::Subset;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(format!("unknown table format `{other}`")),
        }
    }
}

/// A singleton renders as its bare label, anything else as `{a,b}`.
pub fn render_cell(p: &Poset, s: Subset) -> String {
    match s.as_singleton() {
        Some(x) => p.name(x).to_string(),
        None => {
            let labels: Vec<&str> = s.iter().map(|x| p.name(x)).collect();
            format!("{{{}}}", labels.join(","))
        }
    }
}

pub fn render_table(t: &OpTable, p: &Poset, format: TableFormat) -> String {
    match format {
        TableFormat::Text => render_text(t, p),
        TableFormat::Csv => render_csv(t, p),
        TableFormat::Json => render_json(t, p),
    }
}

fn render_text(t: &OpTable, p: &Poset) -> String {
    let n = t.len();
    let cells: Vec<Vec<String>> = t
        .rows()
        .map(|row| row.iter().map(|&s| render_cell(p, s)).collect())
        .collect();
    let head_width = p
        .names()
        .iter()
        .map(|l| l.chars().count())
        .chain([t.kind().symbol().chars().count()])
        .max()
        .unwrap_or(1);
    let widths: Vec<usize> = (0..n)
        .map(|y| {
            cells
                .iter()
                .map(|r| r[y].chars().count())
                .chain([p.name(y).chars().count()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));

    let mut out = String::new();
    let header: Vec<String> = (0..n).map(|y| pad(p.name(y), widths[y])).collect();
    let _ = writeln!(
        out,
        "{} | {}",
        pad(t.kind().symbol(), head_width),
        header.join(" ").trim_end()
    );
    let rule_len: usize = widths.iter().sum::<usize>() + n.saturating_sub(1);
    let _ = writeln!(out, "{}-+-{}", "-".repeat(head_width), "-".repeat(rule_len));
    for (x, row) in cells.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(y, c)| pad(c, widths[y]))
            .collect();
        let _ = writeln!(
            out,
            "{} | {}",
            pad(p.name(x), head_width),
            line.join(" ").trim_end()
        );
    }
    out
}

fn render_csv(t: &OpTable, p: &Poset) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![t.kind().name().to_string()];
    header.extend(p.names().iter().cloned());
    w.write_record(&header).expect("writing to memory");
    for (x, row) in t.rows().enumerate() {
        let mut record = vec![p.name(x).to_string()];
        record.extend(row.iter().map(|&s| render_cell(p, s)));
        w.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("labels are UTF-8")
}

fn render_json(t: &OpTable, p: &Poset) -> String {
    let cells: Vec<Vec<Vec<&str>>> = t
        .rows()
        .map(|row| {
            row.iter()
                .map(|&s| s.iter().map(|x| p.name(x)).collect())
                .collect()
        })
        .collect();
    let doc = json!({
        "op": t.kind().name(),
        "elements": p.names(),
        "cells": cells,
    });
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Hasse diagram as a DOT digraph, edges pointing upward along covers.
pub fn export_dot(p: &Poset, name: &str) -> String {
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=circle];");
    for label in p.names() {
        let _ = writeln!(out, "  {};", quote(label));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "  {} -> {};", quote(p.name(a)), quote(p.name(b)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poset::OpPoset;
    use crate::sasaki::{op_tables, OpKind};

    fn cell_at(text: &str, row: usize, col: usize) -> String {
        let line = text.lines().nth(row + 2).unwrap();
        let cells = line.split('|').nth(1).unwrap();
        cells.split_whitespace().nth(col).unwrap().to_string()
    }

    #[test]
    fn ex1_text_tables() {
        let op = fixtures::ex1();
        let (odot, arrow) = op_tables(&op).unwrap();
        let p = op.poset();
        let ix = |l| p.index_of(l).unwrap();
        let text = render_table(&odot, p, TableFormat::Text);
        assert_eq!(cell_at(&text, ix("a"), ix("b")), "b");
        assert!(text.starts_with("⊙ | 0 a b c d e 1\n"));
        let text = render_table(&arrow, p, TableFormat::Text);
        assert_eq!(cell_at(&text, ix("e"), ix("0")), "c");
    }

    #[test]
    fn single_cell_table() {
        let op = OpPoset::new(Poset::chain(1).unwrap(), vec![0]).unwrap();
        let t = OpTable::build(&op, OpKind::Odot).unwrap();
        let text = render_table(&t, op.poset(), TableFormat::Text);
        assert_eq!(cell_at(&text, 0, 0), "0");
    }

    #[test]
    fn csv_and_json_keep_sets() {
        let op = fixtures::ex1();
        let p = op.poset();
        let ab = Subset::singleton(1).with(2);
        assert_eq!(render_cell(p, ab), "{a,b}");
        let (odot, _) = op_tables(&op).unwrap();
        let csv = render_table(&odot, p, TableFormat::Csv);
        assert!(csv.starts_with("odot,0,a,b,c,d,e,1\n"));
        let json: serde_json::Value =
            serde_json::from_str(&render_table(&odot, p, TableFormat::Json)).unwrap();
        assert_eq!(json["cells"][1][2], serde_json::json!(["b"]));
    }

    #[test]
    fn dot_edges() {
        let two = Poset::chain(2).unwrap();
        let dot = export_dot(&two, "t");
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("\"0\" -> \"1\""));
        assert_eq!(
            export_dot(fixtures::ex1().poset(), "ex1")
                .matches("->")
                .count(),
            10
        );
        assert_eq!(
            export_dot(fixtures::fig3().poset(), "fig3")
                .matches("->")
                .count(),
            24
        );
    }
}
