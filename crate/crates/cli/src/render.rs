//! Text and JSON renderings. Text output is line-ordered and stable; JSON
//! output carries `schema_version` so stored certificates stay readable.

use std::fmt::Write as _;

use clap::ValueEnum;
use orthoposet::enumerate::{EnumJob, EnumResult};
use orthoposet::logic::{commutator, compatible, discriminator};
use orthoposet::{Classification, CheckReport, OrthoPoset, Subset};
use serde::Serialize;
use serde_json::json;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Requirement {
    Orthoposet,
    Lattice,
    NonLattice,
    Distributive,
    Boolean,
    Orthogonal,
    /// The orthomodular law alone.
    Om,
    /// Orthogonal and the orthomodular law.
    Omp,
    Gom,
    Ortholattice,
    OrthomodularLattice,
}

impl Requirement {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn holds(self, c: &Classification) -> bool {
        match self {
            Requirement::Orthoposet => c.valid_orthoposet,
            Requirement::Lattice => c.lattice,
            Requirement::NonLattice => !c.lattice,
            Requirement::Distributive => c.distributive,
            Requirement::Boolean => c.boolean,
            Requirement::Orthogonal => c.orthogonal,
            Requirement::Om => c.orthomodular_law,
            Requirement::Omp => c.orthomodular_poset,
            Requirement::Gom => c.generalized_orthomodular,
            Requirement::Ortholattice => c.ortholattice,
            Requirement::OrthomodularLattice => c.orthomodular_lattice,
        }
    }

    /// The reports whose witnesses explain a failure.
    fn evidence(self, c: &Classification) -> Vec<String> {
        let from = |names: &[&str]| -> Vec<String> {
            names
                .iter()
                .filter_map(|n| c.report(n))
                .filter(|r| !r.verdict)
                .flat_map(|r| r.witnesses.iter().take(1).map(|w| w.description.clone()))
                .collect()
        };
        match self {
            Requirement::Orthoposet => from(&["orthoposet"]),
            Requirement::Lattice | Requirement::Ortholattice => from(&["lattice"]),
            Requirement::NonLattice => vec!["every pair has a join and a meet".into()],
            Requirement::Distributive => from(&["distributive"]),
            Requirement::Boolean => from(&["boolean"]),
            Requirement::Orthogonal => from(&["orthogonal"]),
            Requirement::Om => from(&["orthomodular-law"]),
            Requirement::Omp => from(&["orthomodular-law", "orthogonal"]),
            Requirement::Gom => from(&["generalized-orthomodular"]),
            Requirement::OrthomodularLattice => from(&["lattice", "orthogonal", "orthomodular-law"]),
        }
    }
}

#[derive(Serialize)]
struct RequirementResult {
    property: String,
    holds: bool,
    witnesses: Vec<String>,
}

fn first_failure(r: &CheckReport) -> Option<&str> {
    if r.verdict {
        None
    } else {
        r.witnesses.first().map(|w| w.description.as_str())
    }
}

/// Report property explaining each classification row.
fn report_for(row: &str) -> &str {
    match row {
        "valid-orthoposet" => "orthoposet",
        "generalized-orthomodular" => "generalized-orthomodular",
        other => other,
    }
}

pub fn check(name: &str, op: &OrthoPoset, require: &[Requirement], format: Format) -> (String, bool) {
    let c = op.classify();
    let results: Vec<RequirementResult> = require
        .iter()
        .map(|&r| {
            let holds = r.holds(&c);
            RequirementResult { property: r.name(), holds, witnesses: if holds { Vec::new() } else { r.evidence(&c) } }
        })
        .collect();
    let ok = results.iter().all(|r| r.holds);
    let out = match format {
        Format::Json => {
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "check",
                "name": name,
                "classification": c,
                "requirements": results,
                "ok": ok,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Text => {
            let mut out = format!("{name}: {} elements\n", c.size);
            for (row, verdict) in c.verdicts() {
                let why = if verdict { None } else { c.report(report_for(row)).and_then(first_failure) };
                match why {
                    Some(w) => writeln!(out, "  {row:<26} no   {w}").unwrap(),
                    None => writeln!(out, "  {row:<26} {}", if verdict { "yes" } else { "no" }).unwrap(),
                }
            }
            for r in &results {
                writeln!(out, "require {}: {}", r.property, if r.holds { "holds" } else { "FAILS" }).unwrap();
                for w in &r.witnesses {
                    writeln!(out, "  witness: {w}").unwrap();
                }
            }
            out
        }
    };
    (out, ok)
}

fn grid(corner: &str, labels: &[&str], cells: &[Vec<String>]) -> String {
    let width = labels
        .iter()
        .map(|l| l.chars().count())
        .chain(cells.iter().flatten().map(|c| c.chars().count()))
        .chain([corner.chars().count()])
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s}{}", " ".repeat(width - s.chars().count()));
    let mut out = String::new();
    let header: Vec<String> = std::iter::once(pad(corner)).chain(labels.iter().map(|l| pad(l))).collect();
    writeln!(out, "{}", header.join(" ").trim_end()).unwrap();
    for (label, row) in labels.iter().zip(cells) {
        let line: Vec<String> = std::iter::once(pad(label)).chain(row.iter().map(|c| pad(c))).collect();
        writeln!(out, "{}", line.join(" ").trim_end()).unwrap();
    }
    out
}

fn labels(op: &OrthoPoset) -> Vec<&str> {
    op.poset().elements().map(|x| op.label(x)).collect()
}

fn set_labels(op: &OrthoPoset, s: &Subset) -> Vec<String> {
    s.iter().map(|x| op.label(x).to_string()).collect()
}

fn table_json(relation: &str, op: &OrthoPoset, cells: serde_json::Value, extra: Option<(&str, &str)>) -> String {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "table",
        "relation": relation,
        "labels": labels(op),
        "cells": cells,
    });
    if let Some((k, val)) = extra {
        v[k] = json!(val);
    }
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

/// `C` marks compatible pairs, `.` the others.
pub fn compat_table(op: &OrthoPoset, format: Format) -> String {
    let n = op.len();
    let table: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| compatible(op, a, b)).collect()).collect();
    match format {
        Format::Json => table_json("compat", op, json!(table), None),
        Format::Text => {
            let cells: Vec<Vec<String>> =
                table.iter().map(|row| row.iter().map(|&c| if c { "C" } else { "." }.to_string()).collect()).collect();
            grid("C", &labels(op), &cells)
        }
    }
}

fn set_table(op: &OrthoPoset, value: impl Fn(usize, usize) -> Subset) -> Vec<Vec<Subset>> {
    let n = op.len();
    (0..n).map(|a| (0..n).map(|b| value(a, b)).collect()).collect()
}

fn render_sets(relation: &str, corner: &str, op: &OrthoPoset, table: &[Vec<Subset>], format: Format, extra: Option<(&str, &str)>) -> String {
    match format {
        Format::Json => {
            let cells: Vec<Vec<Vec<String>>> =
                table.iter().map(|row| row.iter().map(|s| set_labels(op, s)).collect()).collect();
            table_json(relation, op, json!(cells), extra)
        }
        Format::Text => {
            let cells: Vec<Vec<String>> =
                table.iter().map(|row| row.iter().map(|s| op.poset().format_set(s)).collect()).collect();
            grid(corner, &labels(op), &cells)
        }
    }
}

/// Each cell is `Min U(...)` for the row and column elements.
pub fn commutator_table(op: &OrthoPoset, format: Format) -> String {
    let table = set_table(op, |a, b| commutator(op, a, b).mins);
    render_sets("commutator", "c", op, &table, format, None)
}

/// `t(x, y, z)` for rows `x`, columns `y` and the fixed `z`.
pub fn discriminator_table(op: &OrthoPoset, z: usize, format: Format) -> String {
    let table = set_table(op, |x, y| discriminator(op, x, y, z));
    let corner = format!("t(·,·,{})", op.label(z));
    render_sets("discriminator-slice", &corner, op, &table, format, Some(("z", op.label(z))))
}

pub fn enumeration(job: &EnumJob, r: &EnumResult, format: Format) -> String {
    let filters: Vec<&str> = job.filters.iter().map(|f| f.name()).collect();
    let order = match job.order {
        orthoposet::enumerate::ExtensionOrder::Max => "max",
        orthoposet::enumerate::ExtensionOrder::Min => "min",
    };
    match format {
        Format::Json => {
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "enum",
                "max_size": job.max_n,
                "filters": filters,
                "universe": job.universe(),
                "order": order,
                "result": r,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Text => {
            let mut out = format!(
                "enumeration up to {} elements; filters: {}; order: {order}\n",
                job.max_n,
                if filters.is_empty() { "none".to_string() } else { filters.join(", ") }
            );
            writeln!(out, "{:<6} {:>10} {:>10}", "size", "counted", "visited").unwrap();
            for (size, count) in &r.counts_by_size {
                let visited = r.visited_by_size.get(size).copied().unwrap_or(0);
                writeln!(out, "{size:<6} {count:>10} {visited:>10}").unwrap();
            }
            writeln!(out, "total {}", r.total()).unwrap();
            if let Some(reps) = &r.representatives {
                writeln!(out, "representatives:").unwrap();
                for f in reps {
                    writeln!(out, "{}", f.to_hex()).unwrap();
                }
            }
            out
        }
    }
}

pub fn certificate(command: &str, r: &EnumResult, format: Format) -> String {
    let confirmed = r.certificate.iter().filter(|c| c.confirmed).count();
    match format {
        Format::Json => {
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": command,
                "confirmed": r.confirmed(),
                "result": r,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
        Format::Text => {
            let mut out = format!("{command}\n");
            for c in &r.certificate {
                let mark = if c.confirmed { "ok  " } else { "FAIL" };
                writeln!(out, "{mark} [{}] {} — {}", c.stage, c.case, c.outcome).unwrap();
            }
            writeln!(
                out,
                "{confirmed} of {} steps confirmed; {}",
                r.certificate.len(),
                if r.confirmed() { "certificate complete" } else { "certificate INCOMPLETE" }
            )
            .unwrap();
            out
        }
    }
}
