//! Browser bindings: draw a Hasse diagram, classify a structure and tabulate
//! its commutators. Every export takes a source string, which is either a
//! built-in name (`fig3`, `boolean:3`, `mo:2`, ...) or a poset document, and
//! returns SVG or JSON text. The plain functions are usable natively; the
//! `#[wasm_bindgen]` wrappers only translate errors.

use std::fmt::Write as _;

use orthoposet::constructs::{named, parse};
use orthoposet::logic::{commutator, compatible};
use orthoposet::OrthoPoset;
use serde_json::json;
use wasm_bindgen::prelude::*;

const SCHEMA_VERSION: u32 = 1;
const LAYER_GAP: f64 = 80.0;
const NODE_GAP: f64 = 64.0;
const MARGIN: f64 = 32.0;
const RADIUS: f64 = 13.0;
const SWEEPS: usize = 6;

/// Resolves a built-in name or parses a document.
pub fn load(source: &str) -> Result<(String, OrthoPoset), String> {
    let source = source.trim();
    if let Some(r) = named(source) {
        return r.map(|op| (source.to_string(), op)).map_err(|e| e.to_string());
    }
    parse(source).map(|doc| (doc.name, doc.structure)).map_err(|e| e.to_string())
}

/// Elements grouped by height, each layer ordered by repeated barycentre
/// sweeps so that covers cross as little as the heuristic manages.
pub fn layers(op: &OrthoPoset) -> Vec<Vec<usize>> {
    let p = op.poset();
    let heights = p.heights();
    let depth = heights.iter().copied().max().unwrap_or(0);
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    for x in p.elements() {
        layers[heights[x]].push(x);
    }
    let covers = p.covers();
    let mut slot = vec![0.0f64; p.len()];
    let place = |layers: &[Vec<usize>], slot: &mut [f64]| {
        for layer in layers {
            for (i, &x) in layer.iter().enumerate() {
                slot[x] = (i as f64 + 0.5) / layer.len() as f64;
            }
        }
    };
    place(&layers, &mut slot);
    for sweep in 0..SWEEPS {
        let upward = sweep % 2 == 0;
        let order: Vec<usize> = if upward { (1..=depth).collect() } else { (0..depth).rev().collect() };
        for h in order {
            let barycentre = |x: usize| {
                let near: Vec<f64> = covers
                    .iter()
                    .filter_map(|&(u, v)| match upward {
                        true if v == x => Some(slot[u]),
                        false if u == x => Some(slot[v]),
                        _ => None,
                    })
                    .collect();
                if near.is_empty() {
                    slot[x]
                } else {
                    near.iter().sum::<f64>() / near.len() as f64
                }
            };
            let mut keyed: Vec<(f64, usize)> = layers[h].iter().map(|&x| (barycentre(x), x)).collect();
            keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
            layers[h] = keyed.into_iter().map(|(_, x)| x).collect();
            place(&layers, &mut slot);
        }
    }
    layers
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// The Hasse diagram as a standalone SVG document, bottom at the bottom.
pub fn hasse_svg(source: &str) -> Result<String, String> {
    let (name, op) = load(source)?;
    let p = op.poset();
    let layers = layers(&op);
    let widest = layers.iter().map(Vec::len).max().unwrap_or(1) as f64;
    let width = 2.0 * MARGIN + (widest - 1.0).max(0.0) * NODE_GAP;
    let height = 2.0 * MARGIN + (layers.len() as f64 - 1.0) * LAYER_GAP;
    let mut at = vec![(0.0, 0.0); p.len()];
    for (h, layer) in layers.iter().enumerate() {
        let span = (layer.len() as f64 - 1.0) * NODE_GAP;
        for (i, &x) in layer.iter().enumerate() {
            at[x] = ((width - span) / 2.0 + i as f64 * NODE_GAP, height - MARGIN - h as f64 * LAYER_GAP);
        }
    }
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0} {height:.0}" width="{width:.0}" height="{height:.0}" role="img" aria-label="Hasse diagram of {}">"#,
        escape(&name)
    )
    .unwrap();
    svg.push_str("<g class=\"covers\" stroke=\"#555\" stroke-width=\"1.2\">\n");
    for (u, v) in p.covers() {
        let ((x1, y1), (x2, y2)) = (at[u], at[v]);
        writeln!(svg, r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}"/>"#).unwrap();
    }
    svg.push_str("</g>\n<g class=\"elements\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n");
    for x in p.elements() {
        let (cx, cy) = at[x];
        let label = escape(p.label(x));
        writeln!(
            svg,
            r##"<g class="element" data-label="{label}"><title>complement of {label}: {}</title><circle cx="{cx:.1}" cy="{cy:.1}" r="{RADIUS}" fill="#fff" stroke="#222"/><text x="{cx:.1}" y="{:.1}">{label}</text></g>"##,
            escape(p.label(op.prime(x))),
            cy + 4.0
        )
        .unwrap();
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

/// Every verdict of the classification, with the first witness of each
/// failing check.
pub fn classify(source: &str) -> Result<String, String> {
    let (name, op) = load(source)?;
    let c = op.classify();
    let witness_of = |row: &str| {
        let property = if row == "valid-orthoposet" { "orthoposet" } else { row };
        c.report(property).filter(|r| !r.verdict).and_then(|r| r.witnesses.first()).map(|w| w.description.clone())
    };
    let verdicts: Vec<_> = c
        .verdicts()
        .iter()
        .map(|&(property, holds)| json!({ "property": property, "holds": holds, "witness": witness_of(property) }))
        .collect();
    let v = json!({ "schema_version": SCHEMA_VERSION, "name": name, "size": c.size, "verdicts": verdicts });
    Ok(v.to_string())
}

/// `cells[i][j]` is the commutator of elements `i` and `j` written as a set
/// of minimal elements; `compatible[i][j]` marks compatible pairs.
pub fn commutator_table(source: &str) -> Result<String, String> {
    let (name, op) = load(source)?;
    let p = op.poset();
    let labels: Vec<&str> = p.elements().map(|x| p.label(x)).collect();
    let cells: Vec<Vec<String>> =
        p.elements().map(|a| p.elements().map(|b| p.format_set(&commutator(&op, a, b).mins)).collect()).collect();
    let compat: Vec<Vec<bool>> = p.elements().map(|a| p.elements().map(|b| compatible(&op, a, b)).collect()).collect();
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "labels": labels,
        "cells": cells,
        "compatible": compat,
    });
    Ok(v.to_string())
}

#[wasm_bindgen(js_name = hasseSvg)]
pub fn hasse_svg_js(source: &str) -> Result<String, JsError> {
    hasse_svg(source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = classify)]
pub fn classify_js(source: &str) -> Result<String, JsError> {
    classify(source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = commutatorTable)]
pub fn commutator_table_js(source: &str) -> Result<String, JsError> {
    commutator_table(source).map_err(|e| JsError::new(&e))
}

/// A built-in structure as a poset document, to seed the editor.
#[wasm_bindgen(js_name = presetDocument)]
pub fn preset_document(name: &str) -> Result<String, JsError> {
    let op = named(name).ok_or_else(|| JsError::new(&format!("unknown preset {name:?}")))?.map_err(|e| JsError::new(&e.to_string()))?;
    Ok(orthoposet::constructs::serialize(&name.replace(':', "_"), &op))
}
