//! Resolving command-line inputs: `-` for standard input, fixture names,
//! `boolean:k` and `mo:k` generators, or a path to a poset document.

use std::io::Read;

use orthoposet::constructs::{named, parse};
use orthoposet::{Error, OrthoPoset, Result};

/// A resolved input and the name it goes by.
pub struct Input {
    pub name: String,
    pub structure: OrthoPoset,
}

/// Fixtures and generators only; no files.
pub fn virtual_input(source: &str) -> Option<Result<Input>> {
    named(source).map(|r| r.map(|structure| Input { name: source.replace(':', "_"), structure }))
}

pub fn read_input(source: &str) -> Result<Input> {
    if let Some(r) = virtual_input(source) {
        return r;
    }
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?
    };
    let doc = parse(&text)?;
    Ok(Input { name: doc.name, structure: doc.structure })
}
