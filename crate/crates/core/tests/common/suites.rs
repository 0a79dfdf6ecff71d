//! Property suites over a corpus of structures. Each suite returns the
//! violations it found, as readable strings.

use orthoposet::constructs::{boolean_algebra, fixture, horizontal_sum, mo, FIXTURE_NAMES};
use orthoposet::enumerate::{decode_involutive, enumerate, EnumJob};
use orthoposet::logic::{commutator, commutator_sets, compatible, discriminator};
use orthoposet::{complements_of, Involution, OrthoPoset, Poset};

/// A named structure; `ortho` is set when the involution is a complementation.
pub struct Sample {
    pub name: String,
    pub poset: Poset,
    pub inv: Involution,
    pub ortho: Option<OrthoPoset>,
}

impl Sample {
    fn new(name: String, poset: Poset, inv: Involution) -> Sample {
        let ortho = OrthoPoset::new(poset.clone(), inv.clone()).ok();
        Sample { name, poset, inv, ortho }
    }
}

/// Named fixtures, small Boolean algebras and MO_k, and every bounded
/// involutive poset with at most `max_n` elements.
pub fn corpus(max_n: usize) -> Vec<Sample> {
    let mut out = Vec::new();
    let mut push = |name: String, op: OrthoPoset| {
        let (p, i) = op.into_parts();
        out.push(Sample::new(name, p, i));
    };
    for name in FIXTURE_NAMES {
        push(name.to_string(), fixture(name).unwrap());
    }
    for k in 1..=4 {
        push(format!("2^{k}"), boolean_algebra(k));
    }
    for k in 2..=4 {
        push(format!("MO{k}"), mo(k).unwrap());
    }
    push("fig6+fig3".into(), horizontal_sum(&[fixture("fig6").unwrap(), fixture("fig3").unwrap()]).unwrap().result);
    let all = enumerate(&EnumJob::new(max_n).keep_representatives()).unwrap();
    for form in all.representatives.unwrap() {
        let (p, i) = decode_involutive(&form).unwrap();
        out.push(Sample::new(format!("enumerated {}", form.to_hex()), p, i));
    }
    out
}

/// Complements are unique, and `a <= b`, `U(a,a*) = {1}`, `L(b,b*) = {0}`
/// force `b* <= a*`, in every distributive bounded poset.
pub fn distributive_complements(s: &Sample) -> Vec<String> {
    let p = &s.poset;
    if !p.is_distributive().verdict {
        return Vec::new();
    }
    let mut bad = Vec::new();
    for a in p.elements() {
        if complements_of(p, a).len() > 1 {
            bad.push(format!("{}: {} has several complements", s.name, p.label(a)));
        }
    }
    let top_only = p.set_of(&[p.top()]);
    let bottom_only = p.set_of(&[p.bottom()]);
    for a in p.elements() {
        for b in p.up_set(a).iter() {
            for ac in p.elements().filter(|&x| p.upper_of(&[a, x]) == top_only) {
                for bc in p.elements().filter(|&x| p.lower_of(&[b, x]) == bottom_only) {
                    if !p.leq(bc, ac) {
                        bad.push(format!("{}: a={} b={} a*={} b*={}", s.name, a, b, ac, bc));
                    }
                }
            }
        }
    }
    bad
}

/// The compatibility lemma on generalized orthomodular posets.
pub fn compatibility_lemma(s: &Sample) -> Vec<String> {
    let Some(op) = s.ortho.as_ref().filter(|op| op.check_gom().verdict) else {
        return Vec::new();
    };
    let p = op.poset();
    let mut bad = Vec::new();
    for a in p.elements() {
        for b in p.elements() {
            let c = compatible(op, a, b);
            if c != compatible(op, a, op.prime(b)) {
                bad.push(format!("{}: a C b differs from a C b' at ({a},{b})", s.name));
            }
            if p.leq(a, b) && !c {
                bad.push(format!("{}: {a} <= {b} but not compatible", s.name));
            }
            let bound = [a, b].iter().any(|&x| x == p.bottom() || x == p.top());
            if bound && !c {
                bad.push(format!("{}: bound pair ({a},{b}) not compatible", s.name));
            }
        }
    }
    bad
}

/// The commutator lemma on generalized orthomodular posets.
pub fn commutator_lemma(s: &Sample) -> Vec<String> {
    let Some(op) = s.ortho.as_ref().filter(|op| op.check_gom().verdict) else {
        return Vec::new();
    };
    let p = op.poset();
    let mut bad = Vec::new();
    for a in p.elements() {
        for b in p.elements() {
            let c = commutator(op, a, b);
            if c != commutator(op, b, a) {
                bad.push(format!("{}: c({a},{b}) is not symmetric", s.name));
            }
            let (ap, bp) = (op.prime(a), op.prime(b));
            if [commutator(op, a, bp), commutator(op, ap, b), commutator(op, ap, bp)].iter().any(|d| *d != c) {
                bad.push(format!("{}: c({a},{b}) changes under '", s.name));
            }
            if compatible(op, a, b) && compatible(op, ap, b) && !c.is(p.top()) {
                bad.push(format!("{}: {a} C {b} and {a}' C {b} but c != 1", s.name));
            }
        }
        for bound in [p.bottom(), p.top()] {
            if !commutator(op, bound, a).is(p.top()) {
                bad.push(format!("{}: c({bound},{a}) != 1", s.name));
            }
        }
    }
    bad
}

/// Boolean posets are generalized orthomodular, with every pair compatible
/// and every commutator 1.
pub fn boolean_is_gom(s: &Sample) -> Vec<String> {
    let Some(op) = s.ortho.as_ref().filter(|op| op.is_boolean().verdict) else {
        return Vec::new();
    };
    let mut bad = Vec::new();
    if !op.check_gom().verdict {
        bad.push(format!("{}: Boolean but not GOM", s.name));
    }
    let p = op.poset();
    for a in p.elements() {
        for b in p.elements() {
            if !compatible(op, a, b) || !commutator(op, a, b).is(p.top()) {
                bad.push(format!("{}: Boolean pair ({a},{b}) incompatible", s.name));
            }
        }
    }
    bad
}

/// On orthogonal posets (GOM) and (OM) agree; each law agrees with its dual.
pub fn laws_agree(s: &Sample) -> Vec<String> {
    let Some(op) = s.ortho.as_ref() else {
        return Vec::new();
    };
    let mut bad = Vec::new();
    let gom = op.check_gom();
    let om = op.check_om();
    if op.is_orthogonal_poset().verdict && gom.verdict != om.verdict {
        bad.push(format!("{}: orthogonal, GOM {} but OM {}", s.name, gom.verdict, om.verdict));
    }
    if gom.part("GOM") != gom.part("GOM-dual") {
        bad.push(format!("{}: GOM and its dual disagree", s.name));
    }
    if om.part("OM") != om.part("OM-dual") {
        bad.push(format!("{}: OM and its dual disagree", s.name));
    }
    bad
}

/// The four forms of the distributive identity give the same verdict.
pub fn distributivity_forms_agree(s: &Sample) -> Vec<String> {
    let r = s.poset.check_distributivity_variants();
    let verdicts: Vec<bool> = r.parts.iter().map(|p| p.verdict).collect();
    if verdicts.len() != 4 || verdicts.iter().any(|&v| v != verdicts[0]) {
        vec![format!("{}: distributivity forms {:?}", s.name, verdicts)]
    } else {
        Vec::new()
    }
}

pub type Suite = fn(&Sample) -> Vec<String>;

pub const SUITES: [(&str, Suite); 6] = [
    ("complements in distributive posets", distributive_complements),
    ("compatibility lemma", compatibility_lemma),
    ("commutator lemma", commutator_lemma),
    ("Boolean implies GOM", boolean_is_gom),
    ("GOM/OM and duals", laws_agree),
    ("distributivity forms", distributivity_forms_agree),
];

/// The blocks horizontal sums are built from.
pub fn blocks() -> Vec<(&'static str, OrthoPoset)> {
    vec![
        ("2", boolean_algebra(1)),
        ("2^2", boolean_algebra(2)),
        ("2^3", boolean_algebra(3)),
        ("fig1", fixture("fig1").unwrap()),
        ("fig6", fixture("fig6").unwrap()),
    ]
}

/// Every multiset of two or three blocks, as index lists.
pub fn block_choices(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in i..k {
            out.push(vec![i, j]);
            for l in j..k {
                out.push(vec![i, j, l]);
            }
        }
    }
    out
}

/// Compatibility and commutator by block, the iterated commutator identity
/// and the discriminator, on one horizontal sum of Boolean blocks.
pub fn horizontal_sum_theorems(parts: &[OrthoPoset], name: &str) -> Vec<String> {
    let h = horizontal_sum(parts).unwrap();
    let op = &h.result;
    let p = op.poset();
    let (zero, one) = (p.bottom(), p.top());
    let mut bad = Vec::new();
    let compat: Vec<Vec<bool>> = p.elements().map(|a| p.elements().map(|b| compatible(op, a, b)).collect()).collect();
    let comm: Vec<Vec<_>> = p.elements().map(|a| p.elements().map(|b| commutator(op, a, b)).collect()).collect();
    for a in p.elements() {
        for b in p.elements() {
            let same = h.same_block(a, b);
            if compat[a][b] != same {
                bad.push(format!("{name}: {a} C {b} is {} but same block is {same}", compat[a][b]));
            }
            let expected = if same { one } else { zero };
            if !comm[a][b].is(expected) {
                bad.push(format!("{name}: c({a},{b}) = {:?}", comm[a][b].mins));
            }
        }
    }
    let top_only = p.set_of(&[one]);
    for a in p.elements() {
        for b in p.elements() {
            for c in p.elements() {
                if commutator_sets(op, &comm[a][b].mins, &p.set_of(&[c])) != top_only {
                    bad.push(format!("{name}: c(c({a},{b}),{c}) != 1"));
                }
                let t = discriminator(op, a, b, c);
                let expected = if compat[a][b] { c } else { a };
                if t != p.set_of(&[expected]) {
                    bad.push(format!("{name}: t({a},{b},{c}) = {:?}", t));
                }
            }
        }
    }
    bad
}
