//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

pub mod suites;

use std::collections::{BTreeMap, BTreeSet};

use orthoposet::{Involution, OrthoPoset, Poset};

/// Every labelled partial order on `m` points, as `leq[i][j]` matrices.
/// Point `k` is added after `0..k` with a down-set below it and an up-set
/// above it, so each labelled order appears exactly once.
pub fn labelled_orders(m: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = vec![Vec::new()];
    for k in 0..m {
        let mut next = Vec::new();
        for leq in &out {
            for below in 0u32..(1 << k) {
                let down_closed = (0..k).all(|i| below >> i & 1 == 0 || (0..k).all(|j| !leq_at(leq, j, i) || below >> j & 1 == 1));
                if !down_closed {
                    continue;
                }
                for above in 0u32..(1 << k) {
                    if above & below != 0 {
                        continue;
                    }
                    let up_closed =
                        (0..k).all(|i| above >> i & 1 == 0 || (0..k).all(|j| !leq_at(leq, i, j) || above >> j & 1 == 1));
                    let consistent = (0..k)
                        .all(|i| below >> i & 1 == 0 || (0..k).all(|j| above >> j & 1 == 0 || leq_at(leq, i, j)));
                    if !up_closed || !consistent {
                        continue;
                    }
                    let mut grown: Vec<Vec<bool>> = leq
                        .iter()
                        .enumerate()
                        .map(|(i, row)| {
                            let mut r = row.clone();
                            r.push(below >> i & 1 == 1);
                            r
                        })
                        .collect();
                    grown.push((0..=k).map(|j| j == k || above >> j & 1 == 1).collect());
                    next.push(grown);
                }
            }
        }
        out = next;
    }
    out
}

fn leq_at(leq: &[Vec<bool>], i: usize, j: usize) -> bool {
    leq[i][j]
}

/// The involution with pairs `(1,2), (3,4), ...` on the interior, then
/// `fixed` fixed points, and `0 <-> n-1`.
pub fn standard_involution(n: usize, fixed: usize) -> Vec<usize> {
    let mut inv: Vec<usize> = (0..n).collect();
    inv[0] = n - 1;
    inv[n - 1] = 0;
    let paired = n - 2 - fixed;
    for i in (1..=paired).step_by(2) {
        inv[i] = i + 1;
        inv[i + 1] = i;
    }
    inv
}

/// All permutations of `0..k`.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for i in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=i).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, i);
                    q
                })
            })
            .collect();
    }
    out
}

/// Relabellings of `0..n` commuting with [`standard_involution`]: pairs are
/// permuted and possibly flipped, fixed points permuted, bounds kept.
pub fn centralizer(n: usize, fixed: usize) -> Vec<Vec<usize>> {
    let pairs = (n - 2 - fixed) / 2;
    let mut out = Vec::new();
    for pp in permutations(pairs) {
        for flips in 0u32..(1 << pairs) {
            for fp in permutations(fixed) {
                let mut perm: Vec<usize> = (0..n).collect();
                for (i, &j) in pp.iter().enumerate() {
                    let (a, b) = (1 + 2 * i, 2 + 2 * i);
                    let (c, d) = (1 + 2 * j, 2 + 2 * j);
                    if flips >> i & 1 == 1 {
                        perm[a] = d;
                        perm[b] = c;
                    } else {
                        perm[a] = c;
                        perm[b] = d;
                    }
                }
                for (i, &j) in fp.iter().enumerate() {
                    perm[1 + 2 * pairs + i] = 1 + 2 * pairs + j;
                }
                out.push(perm);
            }
        }
    }
    out
}

/// One bounded poset with an antitone involution per isomorphism class, on
/// exactly `n` elements: every labelled order on the interior, paired with
/// each standard involution, kept if antitone and bucketed by the least
/// relabelled matrix over the centralizer.
pub fn naive_classes(n: usize) -> Vec<(Poset, Involution)> {
    assert!(n >= 2);
    let m = n - 2;
    let orders = labelled_orders(m);
    let mut out = Vec::new();
    for fixed in (0..=m).filter(|f| (m - f).is_multiple_of(2)) {
        let inv = standard_involution(n, fixed);
        let group = centralizer(n, fixed);
        let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
        for interior in &orders {
            let leq: Vec<Vec<bool>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| i == 0 || j == n - 1 || (i != n - 1 && j != 0 && interior[i - 1][j - 1]))
                        .collect()
                })
                .collect();
            let antitone = (0..n).all(|i| (0..n).all(|j| !leq[i][j] || leq[inv[j]][inv[i]]));
            if !antitone {
                continue;
            }
            let key = group
                .iter()
                .map(|perm| {
                    let mut bits = vec![false; n * n];
                    for i in 0..n {
                        for j in 0..n {
                            bits[perm[i] * n + perm[j]] = leq[i][j];
                        }
                    }
                    bits
                })
                .min()
                .expect("centralizer contains the identity");
            if seen.insert(key) {
                let p = Poset::from_matrix(&leq, 0, n - 1).expect("bounded by construction");
                out.push((p, Involution::new(inv.clone()).expect("involution")));
            }
        }
    }
    out
}

/// A structural property used to filter the brute-force oracle.
pub type Predicate<'a> = &'a dyn Fn(&OrthoPoset) -> bool;

/// Per-size counts from [`naive_classes`], optionally restricted to
/// orthoposets satisfying `pred`.
pub fn naive_counts(max_n: usize, pred: Option<Predicate>) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for n in 2..=max_n {
        let classes = naive_classes(n);
        let count = match pred {
            None => classes.len(),
            Some(f) => classes
                .into_iter()
                .filter_map(|(p, i)| OrthoPoset::new(p, i).ok())
                .filter(|op| f(op))
                .count(),
        };
        if pred.is_none() || n % 2 == 0 {
            out.insert(n, count as u64);
        }
    }
    out
}

/// Whether two structures are isomorphic, by trying every bijection that
/// fixes the bounds.
pub fn brute_isomorphic(a: &Poset, ai: Option<&Involution>, b: &Poset, bi: Option<&Involution>) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let inner_a: Vec<usize> = a.elements().filter(|&x| x != a.bottom() && x != a.top()).collect();
    let inner_b: Vec<usize> = b.elements().filter(|&x| x != b.bottom() && x != b.top()).collect();
    permutations(inner_a.len()).into_iter().any(|p| {
        let mut map = vec![0; n];
        map[a.bottom()] = b.bottom();
        map[a.top()] = b.top();
        for (i, &x) in inner_a.iter().enumerate() {
            map[x] = inner_b[p[i]];
        }
        let order = a.elements().all(|x| a.elements().all(|y| a.leq(x, y) == b.leq(map[x], map[y])));
        let inv = match (ai, bi) {
            (Some(ai), Some(bi)) => a.elements().all(|x| map[ai.apply(x)] == bi.apply(map[x])),
            (None, None) => true,
            _ => false,
        };
        order && inv
    })
}
