//! Antitone involutive complementation and the axiom checks built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::report::{CheckReport, Witness};
use crate::subset::Subset;

/// A permutation of element indices acting as the unary operation `'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    /// Accepts any permutation; the involution laws themselves are checked by
    /// [`validate_orthoposet`].
    pub fn new(map: Vec<usize>) -> Result<Involution> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &y in &map {
            if y >= n {
                return Err(Error::IndexOutOfRange { index: y, n });
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::Invalid(format!("involution maps two elements to {y}")));
            }
        }
        Ok(Involution { map })
    }

    /// Builds the involution from disjoint pairs `{x, x'}`; unpaired elements
    /// are fixed.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Involution> {
        let mut map: Vec<usize> = (0..n).collect();
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            map[x] = y;
            map[y] = x;
        }
        Self::new(map)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Conjugate by a relabeling: if `x` becomes `perm[x]` then `x'` becomes
    /// `perm[x']`.
    pub fn permuted(&self, perm: &[usize]) -> Involution {
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[perm[x]] = perm[y];
        }
        Involution { map }
    }
}

/// Checks the three laws separately: involution (`x'' = x`, `0' = 1`),
/// antitonicity and complementation (`L(x,x') = {0}`, `U(x,x') = {1}`).
pub fn validate_orthoposet(p: &Poset, inv: &Involution) -> CheckReport {
    const PROPERTY: &str = "orthoposet";
    if inv.len() != p.len() {
        return CheckReport::fail(
            PROPERTY,
            vec![Witness::new(
                vec![],
                format!("involution has {} entries for {} elements", inv.len(), p.len()),
            )],
        );
    }
    let l = |x: usize| p.label(x);
    let mut witnesses = Vec::new();

    let mut involution_ok = true;
    if inv.apply(p.bottom()) != p.top() {
        involution_ok = false;
        witnesses.push(Witness::new(
            vec![p.bottom()],
            format!("{}' = {} is not the top element", l(p.bottom()), l(inv.apply(p.bottom()))),
        ));
    } else if let Some(x) = p.elements().find(|&x| inv.apply(inv.apply(x)) != x) {
        involution_ok = false;
        witnesses.push(Witness::new(vec![x], format!("{}'' != {}", l(x), l(x))));
    }

    let mut antitone_ok = true;
    'outer: for x in p.elements() {
        for y in p.up_set(x).iter() {
            if !p.leq(inv.apply(y), inv.apply(x)) {
                antitone_ok = false;
                witnesses.push(Witness::new(
                    vec![x, y],
                    format!("{} <= {} but {}' is not <= {}'", l(x), l(y), l(y), l(x)),
                ));
                break 'outer;
            }
        }
    }

    let mut complement_ok = true;
    for x in p.elements() {
        let xp = inv.apply(x);
        let lower = p.lower_of(&[x, xp]);
        let upper = p.upper_of(&[x, xp]);
        if lower.as_singleton() != Some(p.bottom()) || upper.as_singleton() != Some(p.top()) {
            complement_ok = false;
            witnesses.push(Witness::new(
                vec![x, xp],
                format!(
                    "{} and {} are not complements: L = {}, U = {}",
                    l(x),
                    l(xp),
                    p.format_set(&lower),
                    p.format_set(&upper)
                ),
            ));
            break;
        }
    }

    CheckReport::from_witnesses(PROPERTY, witnesses)
        .with_part("involution", involution_ok)
        .with_part("antitone", antitone_ok)
        .with_part("complementation", complement_ok)
}

/// All complements of `a`: elements `x` with `L(a,x) = {0}` and `U(a,x) = {1}`.
pub fn complements_of(p: &Poset, a: usize) -> Subset {
    let mut out = p.empty_set();
    for x in p.elements() {
        if p.lower_of(&[a, x]).as_singleton() == Some(p.bottom())
            && p.upper_of(&[a, x]).as_singleton() == Some(p.top())
        {
            out.insert(x);
        }
    }
    out
}

/// A bounded poset with an antitone involution that is a complementation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoPoset {
    poset: Poset,
    prime: Involution,
}

/// Evaluation of the orthomodular law `y = x ∨ (y ∧ x')` at one pair `x <= y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmOutcome {
    Holds,
    NotComparable,
    /// `y ∧ x'` does not exist.
    MeetUndefined,
    /// `y ∧ x'` exists, `x ∨ (y ∧ x')` does not.
    JoinUndefined { meet: usize },
    /// Both exist but the join is not `y`.
    Differs { meet: usize, join: usize },
}

impl OrthoPoset {
    pub fn new(poset: Poset, prime: Involution) -> Result<OrthoPoset> {
        let report = validate_orthoposet(&poset, &prime);
        if !report.verdict {
            let why: Vec<String> = report.witnesses.iter().map(|w| w.description.clone()).collect();
            return Err(Error::Validation(why.join("; ")));
        }
        Ok(OrthoPoset { poset, prime })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn involution(&self) -> &Involution {
        &self.prime
    }

    pub fn into_parts(self) -> (Poset, Involution) {
        (self.poset, self.prime)
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn prime(&self, x: usize) -> usize {
        self.prime.apply(x)
    }

    /// `A' = {x' | x ∈ A}`.
    pub fn prime_set(&self, a: &Subset) -> Subset {
        Subset::from_indices(a.width(), a.iter().map(|x| self.prime(x)))
    }

    pub fn label(&self, x: usize) -> &str {
        self.poset.label(x)
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom()
    }

    pub fn top(&self) -> usize {
        self.poset.top()
    }

    pub fn permuted(&self, perm: &[usize]) -> OrthoPoset {
        OrthoPoset { poset: self.poset.permuted(perm), prime: self.prime.permuted(perm) }
    }

    /// `x ⊥ y`, i.e. `x <= y'`.
    pub fn orthogonal(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, self.prime(y))
    }

    /// Every orthogonal pair has a join.
    pub fn is_orthogonal_poset(&self) -> CheckReport {
        let p = &self.poset;
        for x in p.elements() {
            for y in x..p.len() {
                if self.orthogonal(x, y) && p.join(x, y).is_none() {
                    let desc = format!(
                        "{} <= {}', but {} ∨ {} does not exist",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y)
                    );
                    return CheckReport::fail("orthogonal", vec![Witness::new(vec![x, y], desc)]);
                }
            }
        }
        CheckReport::pass("orthogonal")
    }

    pub fn om_at(&self, x: usize, y: usize) -> OmOutcome {
        let p = &self.poset;
        if !p.leq(x, y) {
            return OmOutcome::NotComparable;
        }
        let Some(meet) = p.meet(y, self.prime(x)) else {
            return OmOutcome::MeetUndefined;
        };
        match p.join(x, meet) {
            None => OmOutcome::JoinUndefined { meet },
            Some(join) if join != y => OmOutcome::Differs { meet, join },
            Some(_) => OmOutcome::Holds,
        }
    }

    /// Dual orthomodular law at `x <= y`: `x = y ∧ (x ∨ y')`.
    pub fn om_dual_at(&self, x: usize, y: usize) -> bool {
        let p = &self.poset;
        if !p.leq(x, y) {
            return true;
        }
        p.join(x, self.prime(y)).and_then(|j| p.meet(y, j)) == Some(x)
    }

    pub fn describe_om(&self, x: usize, y: usize, outcome: OmOutcome) -> String {
        let l = |e: usize| self.label(e);
        match outcome {
            OmOutcome::Holds => format!("{} = {} ∨ ({} ∧ {}')", l(y), l(x), l(y), l(x)),
            OmOutcome::NotComparable => format!("{} is not <= {}", l(x), l(y)),
            OmOutcome::MeetUndefined => {
                format!("{} <= {}, but {} ∧ {}' is not defined", l(x), l(y), l(y), l(x))
            }
            OmOutcome::JoinUndefined { meet } => format!(
                "{} <= {}, {} ∧ {}' = {}, but {} ∨ {} is not defined",
                l(x),
                l(y),
                l(y),
                l(x),
                l(meet),
                l(x),
                l(meet)
            ),
            OmOutcome::Differs { meet, join } => format!(
                "{} <= {}, but {} ∨ ({} ∧ {}') = {} ∨ {} = {} != {}",
                l(x),
                l(y),
                l(x),
                l(y),
                l(x),
                l(x),
                l(meet),
                l(join),
                l(y)
            ),
        }
    }

    /// The orthomodular law over all comparable pairs. An undefined meet or
    /// join counts as a failure at that pair. All failing pairs are reported.
    pub fn check_om(&self) -> CheckReport {
        let p = &self.poset;
        let mut witnesses = Vec::new();
        let mut dual_ok = true;
        for x in p.elements() {
            for y in p.up_set(x).iter() {
                let outcome = self.om_at(x, y);
                if outcome != OmOutcome::Holds {
                    witnesses.push(Witness::new(vec![x, y], self.describe_om(x, y, outcome)));
                }
                dual_ok &= self.om_dual_at(x, y);
            }
        }
        let primal_ok = witnesses.is_empty();
        let mut report = CheckReport::from_witnesses("orthomodular-law", witnesses)
            .with_part("OM", primal_ok)
            .with_part("OM-dual", dual_ok);
        if primal_ok != dual_ok {
            report.warnings.push("orthomodular law and its dual disagree".into());
        }
        report
    }

    /// `x <= y` implies `U(y) = U(x, L(y, x'))`.
    pub fn gom_at(&self, x: usize, y: usize) -> bool {
        let p = &self.poset;
        let mut s = p.lower_of(&[y, self.prime(x)]);
        s.insert(x);
        *p.up_set(y) == p.upper_cone(&s)
    }

    /// `x <= y` implies `L(x) = L(y, U(x, y'))`.
    pub fn gom_dual_at(&self, x: usize, y: usize) -> bool {
        let p = &self.poset;
        let mut s = p.upper_of(&[x, self.prime(y)]);
        s.insert(y);
        *p.down_set(x) == p.lower_cone(&s)
    }

    pub fn check_gom(&self) -> CheckReport {
        let p = &self.poset;
        let mut witness = None;
        let mut dual_ok = true;
        for x in p.elements() {
            for y in p.up_set(x).iter() {
                if witness.is_none() && !self.gom_at(x, y) {
                    let mut s = p.lower_of(&[y, self.prime(x)]);
                    s.insert(x);
                    witness = Some(Witness::new(
                        vec![x, y],
                        format!(
                            "{} <= {} but U({}) = {} differs from U({}, L({},{}')) = {}",
                            p.label(x),
                            p.label(y),
                            p.label(y),
                            p.format_set(p.up_set(y)),
                            p.label(x),
                            p.label(y),
                            p.label(x),
                            p.format_set(&p.upper_cone(&s))
                        ),
                    ));
                }
                dual_ok &= self.gom_dual_at(x, y);
            }
        }
        let primal_ok = witness.is_none();
        let mut report = CheckReport::from_witnesses("generalized-orthomodular", witness.into_iter().collect())
            .with_part("GOM", primal_ok)
            .with_part("GOM-dual", dual_ok);
        if primal_ok != dual_ok {
            report.warnings.push("(GOM) and its dual disagree".into());
        }
        report
    }

    /// Distributive and complemented. Lattice structure is not required.
    pub fn is_boolean(&self) -> CheckReport {
        let complemented = validate_orthoposet(&self.poset, &self.prime);
        let complemented_ok = complemented.part("complementation").unwrap_or(false);
        let dist = self.poset.is_distributive();
        let mut witnesses = dist.witnesses.clone();
        if !complemented_ok {
            witnesses.extend(complemented.witnesses);
        }
        CheckReport::from_witnesses("boolean", witnesses)
            .with_part("distributive", dist.verdict)
            .with_part("complemented", complemented_ok)
    }

    /// Orthogonal and orthomodular.
    pub fn is_orthomodular_poset(&self) -> CheckReport {
        let orth = self.is_orthogonal_poset();
        let om = self.check_om();
        let mut witnesses = orth.witnesses.clone();
        witnesses.extend(om.witnesses.iter().take(1).cloned());
        CheckReport::from_witnesses("orthomodular-poset", witnesses)
            .with_part("orthogonal", orth.verdict)
            .with_part("OM", om.verdict)
    }

    pub fn classify(&self) -> Classification {
        let validity = validate_orthoposet(&self.poset, &self.prime);
        let lattice = self.poset.is_lattice();
        let distributive = self.poset.is_distributive();
        let boolean = self.is_boolean();
        let orthogonal = self.is_orthogonal_poset();
        let orthomodular_law = self.check_om();
        let gom = self.check_gom();
        let omp = orthogonal.verdict && orthomodular_law.verdict;
        Classification {
            size: self.len(),
            valid_orthoposet: validity.verdict,
            lattice: lattice.verdict,
            distributive: distributive.verdict,
            boolean: boolean.verdict,
            orthogonal: orthogonal.verdict,
            orthomodular_law: orthomodular_law.verdict,
            orthomodular_poset: omp,
            generalized_orthomodular: gom.verdict,
            ortholattice: validity.verdict && lattice.verdict,
            orthomodular_lattice: validity.verdict && lattice.verdict && orthomodular_law.verdict,
            reports: vec![validity, lattice, distributive, boolean, orthogonal, orthomodular_law, gom],
        }
    }
}

/// Verdict vector of every check, with the underlying reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub size: usize,
    pub valid_orthoposet: bool,
    pub lattice: bool,
    pub distributive: bool,
    pub boolean: bool,
    pub orthogonal: bool,
    pub orthomodular_law: bool,
    pub orthomodular_poset: bool,
    pub generalized_orthomodular: bool,
    pub ortholattice: bool,
    pub orthomodular_lattice: bool,
    pub reports: Vec<CheckReport>,
}

impl Classification {
    /// `(name, verdict)` in a fixed order.
    pub fn verdicts(&self) -> [(&'static str, bool); 10] {
        [
            ("valid-orthoposet", self.valid_orthoposet),
            ("lattice", self.lattice),
            ("distributive", self.distributive),
            ("boolean", self.boolean),
            ("orthogonal", self.orthogonal),
            ("orthomodular-law", self.orthomodular_law),
            ("orthomodular-poset", self.orthomodular_poset),
            ("generalized-orthomodular", self.generalized_orthomodular),
            ("ortholattice", self.ortholattice),
            ("orthomodular-lattice", self.orthomodular_lattice),
        ]
    }

    pub fn report(&self, property: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.property == property)
    }
}
