//! The named example structures, transcribed from their Hasse diagrams.

use crate::error::{Error, Result};
use crate::ortho::{Involution, OrthoPoset};
use crate::poset::Poset;

pub const FIXTURE_NAMES: [&str; 6] = ["fig1", "fig2", "fig3", "fig5", "fig6", "fig7_o6"];

/// A fixture by name, or a generated family member: `boolean:k` is the
/// Boolean algebra with `k` atoms (`1 <= k <= 6`) and `mo:k` the horizontal
/// sum of `k` four-element Boolean algebras. `None` if `source` names neither.
pub fn named(source: &str) -> Option<Result<OrthoPoset>> {
    if FIXTURE_NAMES.contains(&source) {
        return Some(fixture(source));
    }
    let (kind, k) = source.split_once(':')?;
    let Ok(k) = k.parse::<usize>() else {
        return Some(Err(Error::Invalid(format!("bad size in {source:?}"))));
    };
    match kind {
        "boolean" if (1..=6).contains(&k) => Some(Ok(boolean_algebra(k))),
        "boolean" => Some(Err(Error::Invalid("boolean:k needs 1 <= k <= 6".into()))),
        "mo" if k >= 1 => Some(super::hsum::mo(k)),
        "mo" => Some(Err(Error::Invalid("mo:k needs k >= 1".into()))),
        _ => None,
    }
}

pub fn fixture(name: &str) -> Result<OrthoPoset> {
    match name {
        "fig1" => Ok(fig1()),
        "fig2" => Ok(gen_fig2()),
        "fig3" => Ok(fig3()),
        "fig5" => Ok(fig5()),
        "fig6" => Ok(fig6()),
        "fig7_o6" => Ok(fig7_o6()),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Builds a fixture from labels and cover pairs given by label. Every label
/// `x` other than the bounds has its partner `x'` (or vice versa) in the list.
fn from_labels(labels: &[&str], covers: &[(&str, &str)]) -> OrthoPoset {
    let idx = |l: &str| labels.iter().position(|&m| m == l).unwrap_or_else(|| panic!("unknown label {l}"));
    let pairs: Vec<(usize, usize)> = covers.iter().map(|&(u, v)| (idx(u), idx(v))).collect();
    let n = labels.len();
    let poset = Poset::from_covers(n, 0, n - 1, &pairs)
        .and_then(|p| p.with_labels(labels.iter().copied()))
        .expect("fixture order is a bounded poset");
    let map = labels
        .iter()
        .map(|&l| match l {
            "0" => n - 1,
            "1" => 0,
            _ => match l.strip_suffix('\'') {
                Some(base) => idx(base),
                None => idx(&format!("{l}'")),
            },
        })
        .collect();
    OrthoPoset::new(poset, Involution::new(map).expect("fixture involution is a permutation"))
        .expect("fixture is an orthoposet")
}

/// Adds `0 < x` for every atom and `x < 1` for every coatom.
fn with_bounds<'a>(atoms: &[&'a str], coatoms: &[&'a str], middle: &[(&'a str, &'a str)]) -> Vec<(&'a str, &'a str)> {
    let mut covers: Vec<(&str, &str)> = atoms.iter().map(|&a| ("0", a)).collect();
    covers.extend_from_slice(middle);
    covers.extend(coatoms.iter().map(|&c| (c, "1")));
    covers
}

/// Twelve-element non-lattice Boolean poset with the chain `a < e < d'`.
pub fn fig1() -> OrthoPoset {
    let labels = ["0", "a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'", "1"];
    let covers = with_bounds(
        &["a", "b", "c", "d"],
        &["d'", "c'", "b'", "a'"],
        &[
            ("a", "e"),
            ("b", "e"),
            ("e", "d'"),
            ("e", "c'"),
            ("c", "e'"),
            ("d", "e'"),
            ("e'", "b'"),
            ("e'", "a'"),
            ("a", "b'"),
            ("b", "a'"),
            ("c", "d'"),
            ("d", "c'"),
        ],
    );
    from_labels(&labels, &covers)
}

/// The eighteen-element non-lattice orthomodular poset: eight atoms, eight
/// coatoms, four Boolean blocks `{h,a,d}`, `{h,b,c}`, `{g,a,f}`, `{g,b,e}`.
pub fn fig3() -> OrthoPoset {
    let labels = [
        "0", "a", "b", "c", "d", "e", "f", "g", "h", "a'", "b'", "c'", "d'", "e'", "f'", "g'", "h'", "1",
    ];
    let atoms = ["a", "b", "c", "d", "e", "f", "g", "h"];
    let coatoms = ["h'", "g'", "f'", "e'", "d'", "c'", "b'", "a'"];
    let middle = [
        ("a", "h'"),
        ("a", "g'"),
        ("a", "f'"),
        ("a", "d'"),
        ("b", "h'"),
        ("b", "g'"),
        ("b", "e'"),
        ("b", "c'"),
        ("c", "h'"),
        ("c", "b'"),
        ("d", "h'"),
        ("d", "a'"),
        ("e", "g'"),
        ("e", "b'"),
        ("f", "g'"),
        ("f", "a'"),
        ("g", "f'"),
        ("g", "e'"),
        ("g", "b'"),
        ("g", "a'"),
        ("h", "d'"),
        ("h", "c'"),
        ("h", "b'"),
        ("h", "a'"),
    ];
    from_labels(&labels, &with_bounds(&atoms, &coatoms, &middle))
}

/// The ten-element configuration forced by two elements without a join.
pub fn fig5() -> OrthoPoset {
    let labels = ["0", "a", "b", "g", "h", "h'", "g'", "b'", "a'", "1"];
    let covers = with_bounds(
        &["a", "b", "g", "h"],
        &["h'", "g'", "b'", "a'"],
        &[("a", "h'"), ("a", "g'"), ("b", "h'"), ("b", "g'"), ("g", "b'"), ("g", "a'"), ("h", "b'"), ("h", "a'")],
    );
    from_labels(&labels, &covers)
}

/// Ten-element non-lattice Boolean poset: atoms and coatoms of `2^4`.
pub fn fig6() -> OrthoPoset {
    let labels = ["0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"];
    let atoms = ["a", "b", "c", "d"];
    let mut middle = Vec::new();
    for x in atoms {
        for y in atoms {
            if x != y {
                middle.push((x, y));
            }
        }
    }
    // x < y' for every pair of distinct atoms
    let primed: Vec<(String, String)> = middle.iter().map(|&(x, y)| (x.to_string(), format!("{y}'"))).collect();
    let middle: Vec<(&str, &str)> = primed.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    from_labels(&labels, &with_bounds(&atoms, &["d'", "c'", "b'", "a'"], &middle))
}

/// The benzene ring `O6`: `0 < a < b' < 1`, `0 < b < a' < 1`.
pub fn fig7_o6() -> OrthoPoset {
    let labels = ["0", "a", "b", "b'", "a'", "1"];
    let covers = with_bounds(&["a", "b"], &["b'", "a'"], &[("a", "b'"), ("b", "a'")]);
    from_labels(&labels, &covers)
}

/// Subsets `A` of `{1..6}` with `|A ∩ {1,2,3}| = |A ∩ {4,5,6}|` under
/// inclusion, complemented in `{1..6}`. The two-element sets `{x,y}` are
/// named `a..i` in order of `(x, y)`, their complements `a'..i'`.
pub fn gen_fig2() -> OrthoPoset {
    let members = fig2_members();
    let n = members.len();
    let up: Vec<Vec<bool>> = members
        .iter()
        .map(|&a| members.iter().map(|&b| a & !b == 0).collect())
        .collect();
    let mut labels = vec!["0".to_string()];
    labels.extend(('a'..='i').map(|c| c.to_string()));
    labels.extend(('a'..='i').map(|c| format!("{c}'")));
    labels.push("1".into());
    let poset = Poset::from_matrix(&up, 0, n - 1)
        .and_then(|p| p.with_labels(labels))
        .expect("inclusion order is a bounded poset");
    let full = 0b111_111u8;
    let map = members
        .iter()
        .map(|&a| members.iter().position(|&b| b == full & !a).expect("closed under complement"))
        .collect();
    OrthoPoset::new(poset, Involution::new(map).unwrap()).expect("set complement is an orthocomplementation")
}

/// The underlying sets of [`gen_fig2`] in element order, as bit masks where
/// bit `k - 1` stands for `k`.
pub fn fig2_members() -> Vec<u8> {
    let full = 0b111_111u8;
    let mut pairs = Vec::new();
    for x in 1..=3u8 {
        for y in 4..=6u8 {
            pairs.push((1 << (x - 1)) | (1 << (y - 1)));
        }
    }
    let mut members = vec![0u8];
    members.extend(pairs.iter().copied());
    members.extend(pairs.iter().map(|&p| full & !p));
    members.push(full);
    members
}

/// The Boolean algebra of subsets of `k` atoms. Elements are ordered by bit
/// mask; atoms are labelled `a`, `b`, ... and other elements by their atoms.
pub fn boolean_algebra(k: usize) -> OrthoPoset {
    assert!(k <= 6, "Boolean algebras beyond 2^6 are not supported");
    let n = 1usize << k;
    let full = n - 1;
    let up: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a & !b == 0).collect()).collect();
    let labels: Vec<String> = (0..n)
        .map(|m| match m {
            0 => "0".to_string(),
            _ if m == full => "1".to_string(),
            _ => (0..k).filter(|i| m >> i & 1 == 1).map(|i| (b'a' + i as u8) as char).collect(),
        })
        .collect();
    let poset = Poset::from_matrix(&up, 0, full).and_then(|p| p.with_labels(labels)).expect("2^k is a poset");
    let inv = Involution::new((0..n).map(|m| full & !m).collect()).unwrap();
    OrthoPoset::new(poset, inv).expect("2^k is an ortholattice")
}
