//! Rendering approximation tables and topologies as CSV, markdown or JSON.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::approx::{AccuracyVariant, ApproximationResult};
use crate::error::{Error, Result};
use crate::topology::{SetFamily, TopoApproximationResult};
use crate::universe::Universe;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse(format!("unknown output format `{s}` (expected csv, markdown or json)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Markdown => "markdown",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

const HEADER: [&str; 6] = ["F", "lower", "upper", "boundary", "accuracy", "exact"];

fn cells(u: &Universe, row: &ApproximationResult) -> [String; 6] {
    [
        u.format_set(row.set),
        u.format_set(row.lower),
        u.format_set(row.upper),
        u.format_set(row.boundary),
        row.accuracy.to_string(),
        row.exact.to_string(),
    ]
}

fn row_json(u: &Universe, row: &ApproximationResult) -> Value {
    json!({
        "set": u.set_names(row.set),
        "lower": u.set_names(row.lower),
        "upper": u.set_names(row.upper),
        "boundary": u.set_names(row.boundary),
        "accuracy": row.accuracy.fraction(),
        "exact": row.exact,
    })
}

/// One row per result. CSV and markdown carry the variant in a header line
/// or column note; JSON wraps the rows with it.
pub fn render_approx(
    universe: &Universe,
    rows: &[ApproximationResult],
    variant: AccuracyVariant,
    format: OutputFormat,
) -> Result<String> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(HEADER)?;
            for row in rows {
                w.write_record(cells(universe, row))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("utf-8 input"))
        }
        OutputFormat::Markdown => {
            let mut out = format!("accuracy: {}\n\n", variant.name());
            out.push_str(&format!("| {} |\n", HEADER.join(" | ")));
            out.push_str(&format!("|{}\n", "---|".repeat(HEADER.len())));
            for row in rows {
                out.push_str(&format!("| {} |\n", cells(universe, row).join(" | ")));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = rows.iter().map(|r| row_json(universe, r)).collect();
            let doc = json!({ "accuracy_variant": variant.name(), "rows": rows });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc)?))
        }
    }
}

/// JSON list of element-name lists in the family's canonical order.
pub fn topology_json(family: &SetFamily) -> String {
    serde_json::to_string(&family.to_names()).expect("plain data serializes")
}

pub fn render_topo_approx(universe: &Universe, result: &TopoApproximationResult) -> String {
    format!(
        "F = {}\ninterior = {}\nclosure = {}\nboundary = {}\naccuracy = {}\n",
        universe.format_set(result.set),
        universe.format_set(result.interior),
        universe.format_set(result.closure),
        universe.format_set(result.boundary),
        result.accuracy
    )
}
