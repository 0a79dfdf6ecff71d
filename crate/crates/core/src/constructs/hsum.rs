//! Horizontal sums: disjoint interiors glued at common bounds.

use crate::error::{Error, Result};
use crate::ortho::{Involution, OrthoPoset};
use crate::poset::Poset;

use super::fixtures::boolean_algebra;

/// A horizontal sum together with the block each interior element came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalSum {
    pub result: OrthoPoset,
    /// `None` for the two bounds, which belong to every block.
    pub block_of: Vec<Option<usize>>,
}

impl HorizontalSum {
    pub fn block_count(&self) -> usize {
        self.block_of.iter().flatten().max().map_or(0, |&b| b + 1)
    }

    /// Whether some block contains both elements.
    pub fn same_block(&self, a: usize, b: usize) -> bool {
        match (self.block_of[a], self.block_of[b]) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
    }
}

/// Glues the parts at their bounds. The result lists the bottom first, then
/// the interior of each part in input order, then the top.
pub fn horizontal_sum(parts: &[OrthoPoset]) -> Result<HorizontalSum> {
    if parts.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = 2 + parts.iter().map(|p| p.len().saturating_sub(2)).sum::<usize>();
    let top = n - 1;
    let suffix = parts.len() > 1;
    let mut labels = vec![parts[0].label(parts[0].bottom()).to_string()];
    let mut block_of = vec![None];
    // maps[i][x] = index of element x of part i in the sum
    let mut maps = Vec::with_capacity(parts.len());
    let mut next = 1;
    for (i, part) in parts.iter().enumerate() {
        let mut map = vec![0; part.len()];
        for x in part.poset().elements() {
            map[x] = if x == part.bottom() {
                0
            } else if x == part.top() {
                top
            } else {
                let l = part.label(x);
                labels.push(if suffix { format!("{l}_{}", i + 1) } else { l.to_string() });
                block_of.push(Some(i));
                next += 1;
                next - 1
            };
        }
        maps.push(map);
    }
    labels.push(parts[0].label(parts[0].top()).to_string());
    block_of.push(None);

    let mut covers = Vec::new();
    let mut prime: Vec<usize> = (0..n).collect();
    prime[0] = top;
    prime[top] = 0;
    for (part, map) in parts.iter().zip(&maps) {
        for (u, v) in part.poset().covers() {
            covers.push((map[u], map[v]));
        }
        for x in part.poset().elements() {
            prime[map[x]] = map[part.prime(x)];
        }
    }
    if n == 2 && covers.is_empty() {
        covers.push((0, 1));
    }
    let poset = Poset::from_covers(n, 0, top, &covers)?.with_labels(labels)?;
    let result = OrthoPoset::new(poset, Involution::new(prime)?)?;
    Ok(HorizontalSum { result, block_of })
}

/// `MO_k`: the horizontal sum of `k` copies of the four-element Boolean algebra.
pub fn mo(k: usize) -> Result<OrthoPoset> {
    let parts = vec![boolean_algebra(2); k];
    horizontal_sum(&parts).map(|h| h.result)
}

/// The finest horizontal decomposition: connected components of interior
/// elements under comparability and `x ~ x'`.
pub fn horizontal_components(op: &OrthoPoset) -> Vec<Vec<usize>> {
    let p = op.poset();
    let interior: Vec<usize> = p.elements().filter(|&x| x != p.bottom() && x != p.top()).collect();
    let mut component = vec![usize::MAX; p.len()];
    let mut out = Vec::new();
    for &start in &interior {
        if component[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        component[start] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            let neighbours = interior
                .iter()
                .copied()
                .filter(|&y| p.comparable(x, y) || y == op.prime(x));
            for y in neighbours.collect::<Vec<_>>() {
                if component[y] == usize::MAX {
                    component[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// The induced orthoposet on a block's interior plus the bounds.
pub fn block_structure(op: &OrthoPoset, interior: &[usize]) -> Result<OrthoPoset> {
    let p = op.poset();
    let mut elements = vec![p.bottom()];
    elements.extend_from_slice(interior);
    elements.push(p.top());
    let sub = p.induced(&elements)?;
    let map = elements
        .iter()
        .map(|&x| elements.iter().position(|&y| y == op.prime(x)).ok_or_else(|| Error::Invalid("block not closed under '".into())))
        .collect::<Result<Vec<_>>>()?;
    OrthoPoset::new(sub, Involution::new(map)?)
}

/// Splits `op` into its horizontal components if every component is a
/// Boolean poset; `None` otherwise. A Boolean block is never itself a
/// nontrivial horizontal sum, so these components are the Boolean blocks.
pub fn boolean_block_decomposition(op: &OrthoPoset) -> Option<Vec<Vec<usize>>> {
    let blocks = horizontal_components(op);
    let all_boolean = blocks
        .iter()
        .all(|b| block_structure(op, b).map(|s| s.is_boolean().verdict).unwrap_or(false));
    all_boolean.then_some(blocks)
}
