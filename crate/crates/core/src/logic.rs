//! Compatibility, commutator and discriminator on orthoposets.

use crate::constructs::hsum::boolean_block_decomposition;
use crate::ortho::OrthoPoset;
use crate::report::{CheckReport, Witness};
use crate::subset::Subset;

/// `c(x, y)` as a set of minimal elements. Singletons are identified with
/// their element through `as_element`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorValue {
    pub mins: Subset,
    pub as_element: Option<usize>,
}

impl CommutatorValue {
    fn new(mins: Subset) -> Self {
        let as_element = mins.as_singleton();
        CommutatorValue { mins, as_element }
    }

    pub fn is(&self, x: usize) -> bool {
        self.as_element == Some(x)
    }
}

/// `a C b` iff `U(a) = U(L(a,b), L(a,b'))`.
pub fn compatible(op: &OrthoPoset, a: usize, b: usize) -> bool {
    let p = op.poset();
    let s = p.lower_of(&[a, b]).union(&p.lower_of(&[a, op.prime(b)]));
    *p.up_set(a) == p.upper_cone(&s)
}

/// `L(x,y) ∪ L(x,y') ∪ L(x',y) ∪ L(x',y')`.
fn four_cones(op: &OrthoPoset, x: usize, y: usize) -> [Subset; 4] {
    let p = op.poset();
    let (xp, yp) = (op.prime(x), op.prime(y));
    [p.lower_of(&[x, y]), p.lower_of(&[x, yp]), p.lower_of(&[xp, y]), p.lower_of(&[xp, yp])]
}

/// `c(x,y) = Min U(L(x,y), L(x,y'), L(x',y), L(x',y'))`.
pub fn commutator(op: &OrthoPoset, x: usize, y: usize) -> CommutatorValue {
    let p = op.poset();
    let mut union = p.empty_set();
    for cone in four_cones(op, x, y) {
        union.union_with(&cone);
    }
    CommutatorValue::new(p.min_elements(&p.upper_cone(&union)))
}

/// `c(A,B)`: union of `c(a,b)` over `a ∈ A`, `b ∈ B`.
pub fn commutator_sets(op: &OrthoPoset, a: &Subset, b: &Subset) -> Subset {
    let mut out = op.poset().empty_set();
    for x in a.iter() {
        for y in b.iter() {
            out.union_with(&commutator(op, x, y).mins);
        }
    }
    out
}

/// Whether every commutator is `0` or `1`, evaluated both directly and via
/// the equivalent cone condition; the two verdicts are parts of the report.
pub fn commutator_two_valued(op: &OrthoPoset) -> CheckReport {
    let p = op.poset();
    let (zero, one) = (p.bottom(), p.top());
    let mut witness = None;
    let mut cone_ok = true;
    for x in p.elements() {
        for y in p.elements() {
            let c = commutator(op, x, y);
            if witness.is_none() && !(c.is(zero) || c.is(one)) {
                witness = Some(Witness::new(
                    vec![x, y],
                    format!("c({}, {}) = {}", p.label(x), p.label(y), p.format_set(&c.mins)),
                ));
            }
            let cones = four_cones(op, x, y);
            let all_zero = cones.iter().all(|s| s.as_singleton() == Some(zero));
            let mut union = p.empty_set();
            for cone in &cones {
                union.union_with(cone);
            }
            let upper_is_one = p.upper_cone(&union).as_singleton() == Some(one);
            cone_ok &= all_zero || upper_is_one;
        }
    }
    let direct_ok = witness.is_none();
    let mut report = CheckReport::from_witnesses("commutator-two-valued", witness.into_iter().collect())
        .with_part("values in {0,1}", direct_ok)
        .with_part("cone condition", cone_ok);
    if direct_ok != cone_ok {
        report.warnings.push("two-valuedness and its cone characterization disagree".into());
    }
    report
}

/// `t(x,y,z) = Min U(L(c(x,y)', x), L(c(x,y), z))`, with `c(x,y)` the set
/// commutator and `L(A, b) = L(A ∪ {b})`.
pub fn discriminator(op: &OrthoPoset, x: usize, y: usize, z: usize) -> Subset {
    let p = op.poset();
    let c = commutator(op, x, y).mins;
    let mut left = op.prime_set(&c);
    left.insert(x);
    let mut right = c;
    right.insert(z);
    let union = p.lower_cone(&left).union(&p.lower_cone(&right));
    p.min_elements(&p.upper_cone(&union))
}

/// `a C b` iff `c(a,b) = 1` over all pairs. The equivalence is only claimed
/// for horizontal sums of Boolean posets; other inputs get a warning but are
/// still evaluated.
pub fn compat_commutator_agreement(op: &OrthoPoset) -> CheckReport {
    let p = op.poset();
    let mut witnesses = Vec::new();
    for a in p.elements() {
        for b in p.elements() {
            let compat = compatible(op, a, b);
            let c = commutator(op, a, b);
            if compat != c.is(p.top()) {
                witnesses.push(Witness::new(
                    vec![a, b],
                    format!(
                        "{} C {} is {} but c({}, {}) = {}",
                        p.label(a),
                        p.label(b),
                        compat,
                        p.label(a),
                        p.label(b),
                        p.format_set(&c.mins)
                    ),
                ));
            }
        }
    }
    let mut report = CheckReport::from_witnesses("compatibility-commutator-agreement", witnesses);
    if boolean_block_decomposition(op).is_none() {
        report
            .warnings
            .push("precondition: structure is not a horizontal sum of Boolean posets".into());
    }
    report
}

/// The full pairwise compatibility table.
pub fn compatibility_table(op: &OrthoPoset) -> Vec<Vec<bool>> {
    let n = op.len();
    (0..n).map(|a| (0..n).map(|b| compatible(op, a, b)).collect()).collect()
}

/// The full pairwise commutator table.
pub fn commutator_table(op: &OrthoPoset) -> Vec<Vec<CommutatorValue>> {
    let n = op.len();
    (0..n).map(|a| (0..n).map(|b| commutator(op, a, b)).collect()).collect()
}
