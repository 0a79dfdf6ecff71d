//! Bounded finite posets: order storage, cone calculus and partial lattice
//! operations.

use crate::error::{Error, Result};
use crate::report::{CheckReport, Witness};
use crate::subset::Subset;

/// A finite bounded poset.
///
/// The order is stored densely: `up[x]` is the principal filter of `x` and
/// `down[x]` its principal ideal, so both rows and columns of the order
/// matrix are available as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    up: Vec<Subset>,
    down: Vec<Subset>,
    bottom: usize,
    top: usize,
    labels: Vec<String>,
}

impl Poset {
    /// Builds a poset from its Hasse diagram. `(u, v)` means `v` covers `u`;
    /// the order is the reflexive-transitive closure of the pairs, so extra
    /// non-cover pairs are harmless.
    pub fn from_covers(
        n: usize,
        bottom: usize,
        top: usize,
        covers: &[(usize, usize)],
    ) -> Result<Poset> {
        if n == 0 {
            return Err(Error::Invalid("a bounded poset needs at least one element".into()));
        }
        let mut up: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
        for &(u, v) in covers {
            for i in [u, v] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            if u == v {
                return Err(Error::Invalid(format!("cover pair ({u}, {v}) is a loop")));
            }
            up[u].insert(v);
        }
        transitive_closure(&mut up);
        Self::from_up_sets(up, bottom, top)
    }

    /// Builds a poset from a boolean order matrix, `leq[x][y]` meaning
    /// `x <= y`. The matrix must already be reflexive and transitive.
    pub fn from_matrix(leq: &[Vec<bool>], bottom: usize, top: usize) -> Result<Poset> {
        let n = leq.len();
        let up: Vec<Subset> = leq
            .iter()
            .map(|row| Subset::from_indices(n, row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j)))
            .collect();
        for (x, row) in up.iter().enumerate() {
            if row.width() != n || !row.contains(x) {
                return Err(Error::Invalid(format!("order matrix is not reflexive at {x}")));
            }
            for y in row.iter() {
                if !up[y].is_subset(row) {
                    return Err(Error::Invalid(format!("order matrix is not transitive at ({x}, {y})")));
                }
            }
        }
        Self::from_up_sets(up, bottom, top)
    }

    /// `up` must be reflexive and transitively closed.
    pub(crate) fn from_up_sets(up: Vec<Subset>, bottom: usize, top: usize) -> Result<Poset> {
        let n = up.len();
        for i in [bottom, top] {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
        }
        let mut down: Vec<Subset> = (0..n).map(|_| Subset::empty(n)).collect();
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::Cycle { x: x.min(y), y: x.max(y) });
                }
            }
        }
        if n >= 2 && bottom == top {
            return Err(Error::Invalid("bottom and top coincide".into()));
        }
        if let Some(other) = (0..n).find(|&x| !up[bottom].contains(x)) {
            return Err(Error::Bounds { element: bottom, role: "the least element", other });
        }
        if let Some(other) = (0..n).find(|&x| !down[top].contains(x)) {
            return Err(Error::Bounds { element: top, role: "the greatest element", other });
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(Poset { up, down, bottom, top, labels })
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Poset> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.len() {
            return Err(Error::Invalid(format!(
                "{} labels given for {} elements",
                labels.len(),
                self.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("label `{l}` is not a single token")));
            }
            if labels[..i].contains(l) {
                return Err(Error::Invalid(format!("duplicate label `{l}`")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Principal filter `{y | x <= y}`.
    pub fn up_set(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    /// Principal ideal `{y | y <= x}`.
    pub fn down_set(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn set_of(&self, items: &[usize]) -> Subset {
        Subset::from_indices(self.len(), items.iter().copied())
    }

    /// `L(A)`: everything below every member of `a`. `L(∅)` is the whole set.
    pub fn lower_cone(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a.iter() {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// `U(A)`: everything above every member of `a`. `U(∅)` is the whole set.
    pub fn upper_cone(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a.iter() {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    /// `L(x, y, ...)` for a list of elements.
    pub fn lower_of(&self, items: &[usize]) -> Subset {
        let mut out = self.full_set();
        for &x in items {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// `U(x, y, ...)` for a list of elements.
    pub fn upper_of(&self, items: &[usize]) -> Subset {
        let mut out = self.full_set();
        for &x in items {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    /// Minimal members of `a`.
    pub fn min_elements(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a.iter() {
            if self.down[x].intersection(a).as_singleton() == Some(x) {
                out.insert(x);
            }
        }
        out
    }

    /// Maximal members of `a`.
    pub fn max_elements(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a.iter() {
            if self.up[x].intersection(a).as_singleton() == Some(x) {
                out.insert(x);
            }
        }
        out
    }

    /// Least upper bound of a set, if it exists.
    pub fn supremum(&self, a: &Subset) -> Option<usize> {
        self.min_elements(&self.upper_cone(a)).as_singleton()
    }

    /// Greatest lower bound of a set, if it exists.
    pub fn infimum(&self, a: &Subset) -> Option<usize> {
        self.max_elements(&self.lower_cone(a)).as_singleton()
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.min_elements(&self.upper_of(&[x, y])).as_singleton()
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.max_elements(&self.lower_of(&[x, y])).as_singleton()
    }

    pub fn is_lattice(&self) -> CheckReport {
        let n = self.len();
        for x in 0..n {
            for y in x + 1..n {
                if self.join(x, y).is_none() {
                    return CheckReport::fail(
                        "lattice",
                        vec![self.witness(&[x, y], format!("{} ∨ {} does not exist", self.label(x), self.label(y)))],
                    );
                }
                if self.meet(x, y).is_none() {
                    return CheckReport::fail(
                        "lattice",
                        vec![self.witness(&[x, y], format!("{} ∧ {} does not exist", self.label(x), self.label(y)))],
                    );
                }
            }
        }
        CheckReport::pass("lattice")
    }

    /// Distributivity as the cone identity `L(U(x,y),z) = LU(L(x,z),L(y,z))`.
    pub fn is_distributive(&self) -> CheckReport {
        for (x, y, z) in self.triples() {
            let lhs = self.distributive_lhs(x, y, z);
            let rhs = self.distributive_rhs(x, y, z);
            if lhs != rhs {
                let desc = format!(
                    "L(U({x},{y}),{z}) = {} but LU(L({x},{z}),L({y},{z})) = {}",
                    self.format_set(&lhs),
                    self.format_set(&rhs),
                    x = self.label(x),
                    y = self.label(y),
                    z = self.label(z),
                );
                return CheckReport::fail("distributive", vec![self.witness(&[x, y, z], desc)]);
            }
        }
        CheckReport::pass("distributive")
    }

    fn distributive_lhs(&self, x: usize, y: usize, z: usize) -> Subset {
        let mut s = self.upper_of(&[x, y]);
        s.insert(z);
        self.lower_cone(&s)
    }

    fn distributive_rhs(&self, x: usize, y: usize, z: usize) -> Subset {
        let s = self.lower_of(&[x, z]).union(&self.lower_of(&[y, z]));
        self.lower_cone(&self.upper_cone(&s))
    }

    /// Evaluates the four equivalent cone forms of distributivity
    /// independently. The overall verdict is the first form; the report
    /// carries all four as parts and a warning if they disagree.
    pub fn check_distributivity_variants(&self) -> CheckReport {
        const NAMES: [&str; 4] = [
            "L(U(x,y),z) = LU(L(x,z),L(y,z))",
            "UL(U(x,y),z) = U(L(x,z),L(y,z))",
            "U(L(x,y),z) = UL(U(x,z),U(y,z))",
            "LU(L(x,y),z) = L(U(x,z),U(y,z))",
        ];
        let mut failures: [Option<(usize, usize, usize)>; 4] = [None; 4];
        for (x, y, z) in self.triples() {
            if failures.iter().all(Option::is_some) {
                break;
            }
            let with = |mut s: Subset, e: usize| {
                s.insert(e);
                s
            };
            let l_xz = self.lower_of(&[x, z]);
            let l_yz = self.lower_of(&[y, z]);
            let u_xz = self.upper_of(&[x, z]);
            let u_yz = self.upper_of(&[y, z]);
            let l_u_xy_z = self.lower_cone(&with(self.upper_of(&[x, y]), z));
            let u_l_xy_z = self.upper_cone(&with(self.lower_of(&[x, y]), z));
            let results = [
                l_u_xy_z == self.lower_cone(&self.upper_cone(&l_xz.union(&l_yz))),
                self.upper_cone(&l_u_xy_z) == self.upper_cone(&l_xz.union(&l_yz)),
                u_l_xy_z == self.upper_cone(&self.lower_cone(&u_xz.union(&u_yz))),
                self.lower_cone(&u_l_xy_z) == self.lower_cone(&u_xz.union(&u_yz)),
            ];
            for (slot, ok) in failures.iter_mut().zip(results) {
                if slot.is_none() && !ok {
                    *slot = Some((x, y, z));
                }
            }
        }
        let mut witnesses = Vec::new();
        for (name, fail) in NAMES.iter().zip(failures) {
            if let Some((x, y, z)) = fail {
                witnesses.push(self.witness(
                    &[x, y, z],
                    format!(
                        "{name} fails at x={}, y={}, z={}",
                        self.label(x),
                        self.label(y),
                        self.label(z)
                    ),
                ));
            }
        }
        let verdict = failures[0].is_none();
        let mut report = CheckReport {
            property: "distributivity-variants".into(),
            verdict,
            witnesses,
            parts: Vec::new(),
            warnings: Vec::new(),
        };
        for (name, fail) in NAMES.iter().zip(failures) {
            report = report.with_part(*name, fail.is_none());
        }
        let agree = failures.iter().all(|f| f.is_some() == failures[0].is_some());
        if !agree {
            report.warnings.push("the four forms of distributivity disagree".into());
        }
        report
    }

    /// Cover pairs `(u, v)` with `v` covering `u`, in ascending order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.elements() {
            for v in self.up[u].iter() {
                if v == u {
                    continue;
                }
                // v covers u iff nothing lies strictly between them
                let mut between = self.up[u].intersection(&self.down[v]);
                between.remove(u);
                between.remove(v);
                if between.is_empty() {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| self.down[x].len());
        for &x in &order {
            for y in self.down[x].iter() {
                if y != x {
                    h[x] = h[x].max(h[y] + 1);
                }
            }
        }
        h
    }

    /// Relabels the elements: element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut up = vec![Subset::empty(n); n];
        let mut labels = vec![String::new(); n];
        for x in 0..n {
            up[perm[x]] = Subset::from_indices(n, self.up[x].iter().map(|y| perm[y]));
            labels[perm[x]] = self.labels[x].clone();
        }
        let mut p = Poset::from_up_sets(up, perm[self.bottom], perm[self.top])
            .expect("relabeling preserves the order axioms");
        p.labels = labels;
        p
    }

    /// The subposet induced on `elements`, which must contain the bounds.
    /// Element `elements[i]` becomes `i`.
    pub fn induced(&self, elements: &[usize]) -> Result<Poset> {
        let k = elements.len();
        let pos = |x: usize| elements.iter().position(|&e| e == x);
        let (Some(bottom), Some(top)) = (pos(self.bottom), pos(self.top)) else {
            return Err(Error::Invalid("induced subposet must contain the bounds".into()));
        };
        let up = elements
            .iter()
            .map(|&x| Subset::from_indices(k, (0..k).filter(|&j| self.leq(x, elements[j]))))
            .collect();
        let mut p = Poset::from_up_sets(up, bottom, top)?;
        p.labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        Ok(p)
    }

    pub fn format_set(&self, s: &Subset) -> String {
        let names: Vec<&str> = s.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn witness(&self, elements: &[usize], description: String) -> Witness {
        Witness::new(elements.to_vec(), description)
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }
}

/// Warshall closure over principal filters.
pub(crate) fn transitive_closure(up: &mut [Subset]) {
    let n = up.len();
    for k in 0..n {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
}
