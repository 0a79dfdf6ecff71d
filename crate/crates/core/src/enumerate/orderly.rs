//! Orderly generation by involution orbits.
//!
//! A node is a bounded poset with an antitone involution, stored as one
//! principal-filter word per element (`n <= 64`). A child adds one orbit of
//! the involution: a pair `{x, x'}` or, outside the orthocomplemented
//! universe, a fixed point `x = x'`. Every interior orbit can be deleted
//! again, and both universes are closed under deleting orbits, so each
//! structure has a canonical parent: delete the orbit chosen from the
//! canonical labelling by [`ExtensionOrder`]. A child is kept only if that
//! deletion gives back the parent it was built from.

use crate::canon::{canonicalize, CanonicalForm};
use crate::error::Result;
use crate::ortho::{Involution, OrthoPoset};
use crate::poset::Poset;
use crate::subset::Subset;

use super::{ExtensionOrder, Universe};

/// Bounded involutive poset in word form; bottom is element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Node {
    pub n: usize,
    pub top: usize,
    /// Bit `y` of `up[x]` is set iff `x <= y`.
    pub up: Vec<u64>,
    pub inv: Vec<usize>,
}

fn bit(x: usize) -> u64 {
    1 << x
}

fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let x = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            x
        })
    })
}

impl Node {
    /// The two-element chain.
    pub fn root() -> Node {
        Node { n: 2, top: 1, up: vec![0b11, 0b10], inv: vec![1, 0] }
    }

    /// Decodes a canonical form produced by [`Node::canonical`]. Canonical
    /// forms put the bottom first and the top last.
    pub fn from_form(form: &CanonicalForm) -> Node {
        let d = form.decode().expect("frontier holds well-formed canonical forms");
        assert!(d.n <= 64, "orderly generation is limited to 64 elements");
        let inv = d.inv.expect("frontier forms carry the involution");
        Node { n: d.n, top: d.n - 1, up: d.up, inv }
    }

    pub fn canonical(&self) -> (CanonicalForm, Vec<usize>) {
        canonicalize(self.n, &self.up, Some(&self.inv))
    }

    fn down(&self) -> Vec<u64> {
        let mut down = vec![0u64; self.n];
        for x in 0..self.n {
            for y in members(self.up[x]) {
                down[y] |= bit(x);
            }
        }
        down
    }

    fn prime_mask(&self, mask: u64) -> u64 {
        members(mask).fold(0, |acc, x| acc | bit(self.inv[x]))
    }

    fn interior_mask(&self) -> u64 {
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        all & !bit(0) & !bit(self.top)
    }

    /// Orbit invariant used to pick the canonical deletion: number of
    /// comparable elements, then the larger of the two cone sizes. Both are
    /// unchanged by swapping `x` and `x'`.
    fn orbit_key(&self, down: &[u64], x: usize) -> (u32, u32) {
        let (u, d) = (self.up[x].count_ones(), down[x].count_ones());
        (u + d, u.max(d))
    }

    /// The structure with the orbit of `x` deleted.
    fn without_orbit(&self, x: usize) -> Node {
        let gone = bit(x) | bit(self.inv[x]);
        let keep: Vec<usize> = (0..self.n).filter(|&y| gone & bit(y) == 0).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &y) in keep.iter().enumerate() {
            pos[y] = i;
        }
        let compress = |mask: u64| members(mask & !gone).fold(0u64, |acc, y| acc | bit(pos[y]));
        Node {
            n: keep.len(),
            top: pos[self.top],
            up: keep.iter().map(|&y| compress(self.up[y])).collect(),
            inv: keep.iter().map(|&y| pos[self.inv[y]]).collect(),
        }
    }

    pub fn to_orthoposet(&self) -> Option<OrthoPoset> {
        let up: Vec<Subset> = self.up.iter().map(|&w| Subset::from_indices(self.n, members(w))).collect();
        let poset = Poset::from_up_sets(up, 0, self.top).ok()?;
        OrthoPoset::new(poset, Involution::new(self.inv.clone()).ok()?).ok()
    }

    pub fn to_poset(&self) -> Result<(Poset, Involution)> {
        let up: Vec<Subset> = self.up.iter().map(|&w| Subset::from_indices(self.n, members(w))).collect();
        Ok((Poset::from_up_sets(up, 0, self.top)?, Involution::new(self.inv.clone())?))
    }

    /// All down-sets containing the bottom but not the top, as masks.
    fn down_sets(&self, down: &[u64]) -> Vec<u64> {
        let interior = self.interior_mask();
        let mut out = Vec::new();
        let mut s = 0u64;
        loop {
            let d = s | bit(0);
            if members(s).all(|x| down[x] & !d == 0) {
                out.push(d);
            }
            s = s.wrapping_sub(interior) & interior;
            if s == 0 {
                break;
            }
        }
        out
    }

    /// One orbit added in every admissible way, before isomorphism rejection.
    fn extensions(&self, universe: Universe, max_n: usize) -> Vec<Node> {
        let down = self.down();
        let downs = self.down_sets(&down);
        let ups: Vec<u64> = downs.iter().map(|&d| self.prime_mask(d)).collect();
        let mut out = Vec::new();
        for &d in &downs {
            let d_prime = self.prime_mask(d);
            if d & d_prime != 0 {
                // x would lie below some y and y', or above them
                continue;
            }
            // everything above every member of d
            let common_up = members(d).fold(u64::MAX, |acc, y| acc & self.up[y]);
            for &u in &ups {
                if u & !common_up != 0 || u & d != 0 {
                    continue;
                }
                let u_prime = self.prime_mask(u);
                // fixed point: x = x' needs U(x) = D(x)'
                if universe == Universe::Involutive && u == d_prime && self.n < max_n {
                    out.push(self.child(d, u, Relation::Fixed));
                }
                if self.n + 2 > max_n {
                    continue;
                }
                if u & u_prime == 0 {
                    let complemented = d & u_prime == bit(0);
                    if universe == Universe::Involutive || complemented {
                        out.push(self.child(d, u, Relation::Incomparable));
                    }
                }
                if universe == Universe::Involutive && d & !u_prime == 0 {
                    out.push(self.child(d, u, Relation::Below));
                }
            }
        }
        out
    }

    fn child(&self, d: u64, u: u64, rel: Relation) -> Node {
        let n = self.n;
        let x = n;
        let mut up = self.up.clone();
        let mut inv = self.inv.clone();
        let u_prime = self.prime_mask(u);
        let d_prime = self.prime_mask(d);
        if rel == Relation::Fixed {
            for y in members(d) {
                up[y] |= bit(x);
            }
            up.push(u | bit(x));
            inv.push(x);
            return Node { n: n + 1, top: self.top, up, inv };
        }
        let xp = n + 1;
        for y in members(d) {
            up[y] |= bit(x);
        }
        for y in members(u_prime) {
            up[y] |= bit(xp);
        }
        let mut up_x = u | bit(x);
        if rel == Relation::Below {
            up_x |= bit(xp);
        }
        up.push(up_x);
        up.push(d_prime | bit(xp));
        inv.push(xp);
        inv.push(x);
        Node { n: n + 2, top: self.top, up, inv }
    }

    /// Children whose canonical parent is `self`, as canonical forms, sorted
    /// and without repetition. `form` is the canonical form of `self`.
    pub fn children(&self, form: &CanonicalForm, universe: Universe, order: ExtensionOrder, max_n: usize) -> Vec<CanonicalForm> {
        let mut out = Vec::new();
        for child in self.extensions(universe, max_n) {
            if let Some(cf) = child.accept(form, self.n, order) {
                out.push(cf);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The canonical form of `self` if the orbit of element `added` is a
    /// canonical deletion, i.e. deleting the canonical orbit gives a
    /// structure isomorphic to the parent.
    fn accept(&self, parent: &CanonicalForm, added: usize, order: ExtensionOrder) -> Option<CanonicalForm> {
        let down = self.down();
        let interior: Vec<usize> = members(self.interior_mask()).collect();
        let keys: Vec<(u32, u32)> = (0..self.n).map(|x| self.orbit_key(&down, x)).collect();
        let best = match order {
            ExtensionOrder::Max => interior.iter().map(|&x| keys[x]).max(),
            ExtensionOrder::Min => interior.iter().map(|&x| keys[x]).min(),
        }?;
        if keys[added] != best {
            return None;
        }
        let (cf, labelling) = self.canonical();
        let chosen = labelling
            .iter()
            .rev()
            .copied()
            .find(|&x| x != 0 && x != self.top && keys[x] == best)
            .expect("an interior orbit has the extremal key");
        if chosen == added || chosen == self.inv[added] {
            return Some(cf);
        }
        let reduced = self.without_orbit(chosen);
        (reduced.n == parent_size(parent) && reduced.canonical().0 == *parent).then_some(cf)
    }
}

fn parent_size(form: &CanonicalForm) -> usize {
    u32::from_le_bytes(form.as_bytes()[0..4].try_into().expect("form has a size header")) as usize
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Relation {
    Incomparable,
    /// `x < x'`.
    Below,
    Fixed,
}
