//! Table rows and their text, csv and json renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use coxchar_core::{cox_table, WeylType};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

/// One character value. The json schema is exactly these four fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    pub epsilon: i8,
    pub vexp: u32,
    pub value: String,
}

pub fn table_rows(t: WeylType, nonzero_only: bool) -> Vec<Row> {
    cox_table(t)
        .into_iter()
        .filter(|(_, v)| !nonzero_only || !v.is_zero())
        .map(|(label, v)| Row {
            label: label.to_string(),
            epsilon: v.epsilon(),
            vexp: v.vexp(),
            value: v.to_string(),
        })
        .collect()
}

pub fn render(rows: &[Row], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(rows),
        OutputFormat::Csv => render_csv(rows),
        OutputFormat::Json => render_json(rows),
    }
}

fn render_text(rows: &[Row]) -> String {
    let width = rows
        .iter()
        .map(|r| r.label.len())
        .max()
        .unwrap_or(0)
        .max("label".len());
    let mut out = format!("{:<width$}  value\n", "label");
    for r in rows {
        let _ = writeln!(out, "{:<width$}  {}", r.label, r.value);
    }
    out
}

fn render_csv(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(["label", "epsilon", "vexp", "value"])
            .expect("writing to memory");
    }
    for r in rows {
        w.serialize(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

fn render_json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

pub fn parse_csv(text: &str) -> Result<Vec<Row>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<Row>, serde_json::Error> {
    serde_json::from_str(text)
}
