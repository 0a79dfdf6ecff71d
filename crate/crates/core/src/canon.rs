//! Canonical forms of bounded posets, optionally with an involution.
//!
//! Individualization-refinement: vertices are coloured by (height, number of
//! elements below, number above, involution-fixed), the colouring is refined
//! to an equitable partition using up/down counts per cell and the cell of
//! the involution partner, and the search tree over individualized vertices
//! is walked with pruning by automorphisms found along the way. The form is
//! the lexicographically least encoding over all leaves.

use std::fmt;

use crate::ortho::Involution;
use crate::poset::Poset;

/// Canonical byte encoding: equal iff the structures are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalForm> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalForm)
    }

    /// Recovers the order matrix (as principal filters over canonical
    /// positions) and the involution, if one was encoded.
    pub fn decode(&self) -> Option<DecodedForm> {
        let b = &self.0;
        let n = u32::from_le_bytes(b.get(0..4)?.try_into().ok()?) as usize;
        let has_inv = *b.get(4)? == 1;
        let words = n.div_ceil(64);
        let matrix_bytes = (n * n).div_ceil(8);
        let bits = b.get(5..5 + matrix_bytes)?;
        let mut up = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    up[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let rest = &b[5 + matrix_bytes..];
        let inv = if has_inv {
            if rest.len() != 2 * n {
                return None;
            }
            Some(rest.chunks(2).map(|c| u16::from_le_bytes([c[0], c[1]]) as usize).collect())
        } else {
            None
        };
        Some(DecodedForm { n, up, inv })
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedForm {
    pub n: usize,
    /// Row-major principal filters, `n.div_ceil(64)` words per row.
    pub up: Vec<u64>,
    pub inv: Option<Vec<usize>>,
}

pub fn canonical_form(p: &Poset, inv: Option<&Involution>) -> CanonicalForm {
    canonical_labeling(p, inv).0
}

/// The canonical form and the canonical order: `order[i]` is the element
/// placed at position `i`.
pub fn canonical_labeling(p: &Poset, inv: Option<&Involution>) -> (CanonicalForm, Vec<usize>) {
    let n = p.len();
    let words = n.div_ceil(64);
    let mut up = vec![0u64; n * words];
    for x in p.elements() {
        for (w, block) in p.up_set(x).blocks().enumerate().take(words) {
            up[x * words + w] = block;
        }
    }
    canonicalize(n, &up, inv.map(Involution::as_slice))
}

/// Canonical form of a raw structure: `up` holds `n.div_ceil(64)` words per
/// row, bit `y` of row `x` set iff `x <= y`.
pub(crate) fn canonicalize(n: usize, up: &[u64], inv: Option<&[usize]>) -> (CanonicalForm, Vec<usize>) {
    let mut search = Search::new(n, up, inv);
    let start = search.initial_partition();
    let start = search.refine(start);
    search.run(start, &mut Vec::new());
    let order = search.best_order.take().expect("search visits at least one leaf");
    (CanonicalForm(search.encode(&order)), order)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    n: usize,
    words: usize,
    up: &'a [u64],
    down: Vec<u64>,
    inv: Option<&'a [usize]>,
    best_cert: Option<Vec<u64>>,
    best_order: Option<Vec<usize>>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(n: usize, up: &'a [u64], inv: Option<&'a [usize]>) -> Self {
        let words = n.div_ceil(64);
        let mut down = vec![0u64; n * words];
        for x in 0..n {
            for y in 0..n {
                if up[x * words + y / 64] >> (y % 64) & 1 == 1 {
                    down[y * words + x / 64] |= 1 << (x % 64);
                }
            }
        }
        Search { n, words, up, down, inv, best_cert: None, best_order: None, automorphisms: Vec::new() }
    }

    fn row<'b>(&self, table: &'b [u64], x: usize) -> &'b [u64] {
        &table[x * self.words..(x + 1) * self.words]
    }

    fn count(&self, row: &[u64], mask: &[u64]) -> u32 {
        row.iter().zip(mask).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn initial_partition(&self) -> Partition {
        let n = self.n;
        let below: Vec<u32> = (0..n).map(|x| self.row(&self.down, x).iter().map(|w| w.count_ones()).sum()).collect();
        let above: Vec<u32> = (0..n).map(|x| self.row(self.up, x).iter().map(|w| w.count_ones()).sum()).collect();
        // height by increasing ideal size, which is a linear extension
        let mut by_size: Vec<usize> = (0..n).collect();
        by_size.sort_by_key(|&x| below[x]);
        let mut height = vec![0u32; n];
        for &x in &by_size {
            for y in 0..n {
                if y != x && self.row(&self.down, x)[y / 64] >> (y % 64) & 1 == 1 {
                    height[x] = height[x].max(height[y] + 1);
                }
            }
        }
        let key = |x: usize| {
            let fixed = self.inv.is_some_and(|inv| inv[x] == x);
            (height[x], below[x], above[x], fixed)
        };
        let mut verts: Vec<usize> = (0..n).collect();
        verts.sort_by_key(|&x| key(x));
        let mut cells: Partition = Vec::new();
        for v in verts {
            match cells.last_mut() {
                Some(cell) if key(cell[0]) == key(v) => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        cells
    }

    fn refine(&self, mut cells: Partition) -> Partition {
        let n = self.n;
        loop {
            if cells.len() == n {
                return cells;
            }
            let mut cell_of = vec![0u32; n];
            let mut masks = vec![0u64; cells.len() * self.words];
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c as u32;
                    masks[c * self.words + v / 64] |= 1 << (v % 64);
                }
            }
            let signature = |v: usize| -> Vec<u32> {
                let mut sig = Vec::with_capacity(2 + 2 * cells.len());
                sig.push(cell_of[v]);
                if let Some(inv) = self.inv {
                    sig.push(cell_of[inv[v]]);
                }
                for c in 0..cells.len() {
                    let mask = &masks[c * self.words..(c + 1) * self.words];
                    sig.push(self.count(self.row(self.up, v), mask));
                    sig.push(self.count(self.row(&self.down, v), mask));
                }
                sig
            };
            let mut next: Partition = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn individualize(&self, cells: &Partition, target: usize, v: usize) -> Partition {
        let mut out = Vec::with_capacity(cells.len() + 1);
        for (i, cell) in cells.iter().enumerate() {
            if i == target {
                out.push(vec![v]);
                out.push(cell.iter().copied().filter(|&w| w != v).collect());
            } else {
                out.push(cell.clone());
            }
        }
        self.refine(out)
    }

    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let n = self.n;
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut cert = vec![0u64; n * self.words + if self.inv.is_some() { n } else { 0 }];
        for (i, &u) in order.iter().enumerate() {
            for (j, &w) in order.iter().enumerate() {
                if self.up[u * self.words + w / 64] >> (w % 64) & 1 == 1 {
                    // most significant bit first so that u64 comparison matches bit order
                    cert[i * self.words + j / 64] |= 1 << (63 - j % 64);
                }
            }
        }
        if let Some(inv) = self.inv {
            for (i, &u) in order.iter().enumerate() {
                cert[n * self.words + i] = pos[inv[u]] as u64;
            }
        }
        cert
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut out = Vec::with_capacity(5 + (n * n).div_ceil(8) + 2 * n);
        out.extend_from_slice(&(n as u32).to_le_bytes());
        out.push(self.inv.is_some() as u8);
        let mut bits = vec![0u8; (n * n).div_ceil(8)];
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &u) in order.iter().enumerate() {
            for (j, &w) in order.iter().enumerate() {
                if self.up[u * self.words + w / 64] >> (w % 64) & 1 == 1 {
                    let k = i * n + j;
                    bits[k / 8] |= 1 << (7 - k % 8);
                }
            }
        }
        out.extend_from_slice(&bits);
        if let Some(inv) = self.inv {
            for &u in order {
                out.extend_from_slice(&(pos[inv[u]] as u16).to_le_bytes());
            }
        }
        out
    }

    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if path.iter().all(|&v| gamma[v] == v) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.n).map(|x| find(&mut parent, x)).collect()
    }

    fn run(&mut self, cells: Partition, path: &mut Vec<usize>) {
        if cells.len() == self.n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = self.certificate(&order);
            match &self.best_cert {
                Some(best) if cert > *best => {}
                Some(best) if cert == *best => {
                    let best_order = self.best_order.as_ref().unwrap();
                    let mut gamma = vec![0; self.n];
                    for (i, &v) in order.iter().enumerate() {
                        gamma[v] = best_order[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                        self.automorphisms.push(gamma);
                    }
                }
                _ => {
                    self.best_cert = Some(cert);
                    self.best_order = Some(order);
                }
            }
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .unwrap();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                let orbit = self.orbits_fixing(path);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let child = self.individualize(&cells, target, v);
            path.push(v);
            self.run(child, path);
            path.pop();
        }
    }
}
