//! Line-oriented poset documents.
//!
//! ```text
//! orthoposet <name>
//! n <count>
//! labels <n tokens>
//! prime <n indices>
//! cover <u> <v>        # v covers u, one line per cover
//! ```
//!
//! `#` starts a comment. Element 0 is the bottom and element n-1 the top;
//! documents listing them elsewhere are renumbered on load.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ortho::{Involution, OrthoPoset};
use crate::poset::{transitive_closure, Poset};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub structure: OrthoPoset,
}

pub fn serialize(name: &str, op: &OrthoPoset) -> String {
    let p = op.poset();
    let mut out = String::new();
    writeln!(out, "orthoposet {name}").unwrap();
    writeln!(out, "n {}", p.len()).unwrap();
    writeln!(out, "labels {}", p.labels().join(" ")).unwrap();
    let prime: Vec<String> = op.involution().as_slice().iter().map(usize::to_string).collect();
    writeln!(out, "prime {}", prime.join(" ")).unwrap();
    for (u, v) in p.covers() {
        writeln!(out, "cover {u} {v}").unwrap();
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<Document> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut header = |keyword: &str| -> Result<(usize, Vec<&str>)> {
        let (no, line) = lines.next().ok_or_else(|| parse_err(0, format!("missing `{keyword}` line")))?;
        let mut words = line.split_whitespace();
        match words.next() {
            Some(k) if k == keyword => Ok((no, words.collect())),
            _ => Err(parse_err(no, format!("expected `{keyword}`"))),
        }
    };

    let (no, words) = header("orthoposet")?;
    let [name] = words[..] else {
        return Err(parse_err(no, "expected `orthoposet <name>`"));
    };
    let name = name.to_string();
    let (no, words) = header("n")?;
    let n: usize = match words[..] {
        [count] => count.parse().map_err(|_| parse_err(no, format!("bad count `{count}`")))?,
        _ => return Err(parse_err(no, "expected `n <count>`")),
    };
    if n == 0 {
        return Err(parse_err(no, "element count must be positive"));
    }
    let (no, words) = header("labels")?;
    if words.len() != n {
        return Err(parse_err(no, format!("expected {n} labels, found {}", words.len())));
    }
    let labels: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let (no, words) = header("prime")?;
    if words.len() != n {
        return Err(parse_err(no, format!("expected {n} prime entries, found {}", words.len())));
    }
    let prime = words
        .iter()
        .map(|w| w.parse::<usize>().map_err(|_| parse_err(no, format!("bad index `{w}`"))))
        .collect::<Result<Vec<_>>>()?;
    let prime = Involution::new(prime).map_err(|e| parse_err(no, e.to_string()))?;

    let mut up: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
    for (no, line) in lines {
        let words: Vec<&str> = line.split_whitespace().collect();
        let ["cover", u, v] = words[..] else {
            return Err(parse_err(no, "expected `cover <u> <v>`"));
        };
        let index = |w: &str| -> Result<usize> {
            match w.parse::<usize>() {
                Ok(i) if i < n => Ok(i),
                _ => Err(parse_err(no, format!("bad element index `{w}`"))),
            }
        };
        let (u, v) = (index(u)?, index(v)?);
        if u == v {
            return Err(parse_err(no, "an element cannot cover itself"));
        }
        up[u].insert(v);
    }
    transitive_closure(&mut up);

    // renumber so that the bottom comes first and the top last
    let bottom = (0..n).find(|&x| up[x].len() == n);
    let top = (0..n).find(|&x| up.iter().all(|row| row.contains(x)));
    let (bottom, top) = match (bottom, top) {
        (Some(b), Some(t)) => (b, t),
        _ => {
            // let the poset constructor name the actual defect
            return Poset::from_up_sets(up, 0, n - 1).and(Err(Error::Validation("not bounded".into())));
        }
    };
    let mut order = vec![bottom];
    order.extend((0..n).filter(|&x| x != bottom && x != top));
    if top != bottom {
        order.push(top);
    }
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let poset = Poset::from_up_sets(up, bottom, top)?.with_labels(labels)?.permuted(&perm);
    let structure = OrthoPoset::new(poset, prime.permuted(&perm))?;
    Ok(Document { name, structure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::fixtures::{fig1, fig7_o6};

    #[test]
    fn o6_round_trip() {
        let op = fig7_o6();
        let text = serialize("fig7_o6", &op);
        assert_eq!(
            text,
            "orthoposet fig7_o6\nn 6\nlabels 0 a b b' a' 1\nprime 5 4 3 2 1 0\n\
             cover 0 1\ncover 0 2\ncover 1 3\ncover 2 4\ncover 3 5\ncover 4 5\n"
        );
        let doc = parse(&text).unwrap();
        assert_eq!(doc.name, "fig7_o6");
        assert_eq!(doc.structure, op);
    }

    #[test]
    fn cyclic_covers_are_rejected() {
        let text = "orthoposet bad\nn 4\nlabels 0 a b 1\nprime 3 2 1 0\n\
                    cover 0 1\ncover 1 2\ncover 2 1\ncover 2 3\n";
        assert!(matches!(parse(text), Err(Error::Cycle { .. })));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "orthoposet x\n# comment\nn 2\nlabels 0 1\nprime 1 0\ncover 0 7\n";
        assert_eq!(parse(text), Err(Error::Parse { line: 6, message: "bad element index `7`".into() }));
        assert!(matches!(parse("orthoposet x\nn two\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("n 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn invalid_orthoposet_is_a_validation_error() {
        let text = "orthoposet chain\nn 2\nlabels 0 1\nprime 0 1\ncover 0 1\n";
        assert!(matches!(parse(text), Err(Error::Validation(_))));
    }

    #[test]
    fn handwritten_fig1_is_a_non_lattice_boolean_poset() {
        let text = "\
# Boolean poset that is not a lattice
orthoposet fig1
n 12
labels 0 a b c d e e' d' c' b' a' 1
prime 11 10 9 8 7 6 5 4 3 2 1 0
cover 0 1
cover 0 2
cover 0 3
cover 0 4
cover 1 5   # a < e
cover 2 5
cover 5 7
cover 5 8
cover 3 6
cover 4 6
cover 6 9
cover 6 10
cover 1 9
cover 2 10
cover 3 7
cover 4 8
cover 7 11
cover 8 11
cover 9 11
cover 10 11
";
        let doc = parse(text).unwrap();
        assert_eq!(doc.structure, fig1());
        let c = doc.structure.classify();
        assert!(c.boolean && !c.lattice);
    }

    #[test]
    fn bounds_are_moved_to_the_ends() {
        let text = "orthoposet swapped\nn 4\nlabels 1 a 0 b\nprime 2 3 0 1\n\
                    cover 2 1\ncover 2 3\ncover 1 0\ncover 3 0\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.structure.poset().labels(), ["0", "a", "b", "1"]);
        assert_eq!(doc.structure.prime(1), 2);
        assert_eq!(parse(&serialize("swapped", &doc.structure)).unwrap(), doc);
    }
}
