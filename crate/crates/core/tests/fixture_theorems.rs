use orthoposet::constructs::{fixture, FIXTURE_NAMES};
use orthoposet::logic::commutator;
use orthoposet::{validate_orthoposet, OrthoPoset};

fn at(op: &OrthoPoset, label: &str) -> usize {
    op.poset().index_of(label).unwrap()
}

fn labels(op: &OrthoPoset, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&x| op.label(x).to_string()).collect()
}

#[test]
fn eighteen_element_poset() {
    let op = fixture("fig3").unwrap();
    assert_eq!(op.len(), 18);
    assert!(validate_orthoposet(op.poset(), op.involution()).verdict);
    assert!(op.is_orthogonal_poset().verdict);
    assert!(op.check_om().verdict);
    assert!(op.check_gom().verdict);
    let lattice = op.poset().is_lattice();
    assert!(!lattice.verdict);
    assert_eq!(labels(&op, &lattice.witnesses[0].elements), ["a", "b"]);
    assert_eq!(op.poset().join(at(&op, "b"), at(&op, "c")), Some(at(&op, "h'")));
    assert_eq!(op.poset().join(at(&op, "a"), at(&op, "d")), Some(at(&op, "h'")));
    assert!(!op.orthogonal(at(&op, "a"), at(&op, "b")));
    let c = op.classify();
    assert!(c.orthomodular_poset && c.generalized_orthomodular && !c.lattice && !c.distributive);
}

#[test]
fn twelve_element_boolean_poset() {
    let op = fixture("fig1").unwrap();
    assert!(op.is_boolean().verdict);
    assert!(op.check_gom().verdict);
    let orth = op.is_orthogonal_poset();
    assert!(!orth.verdict);
    assert_eq!(labels(&op, &orth.witnesses[0].elements), ["a", "c"]);
    // a <= d' but d' ∧ a' is undefined
    assert!(op.om_at(at(&op, "a"), at(&op, "d'")) != orthoposet::OmOutcome::Holds);
}

#[test]
fn ten_element_boolean_poset() {
    let op = fixture("fig6").unwrap();
    assert!(op.is_boolean().verdict);
    let om = op.check_om();
    assert!(!om.verdict);
    assert_eq!(labels(&op, &om.witnesses[0].elements), ["a", "d'"]);
}

#[test]
fn benzene_ring() {
    let op = fixture("fig7_o6").unwrap();
    assert!(validate_orthoposet(op.poset(), op.involution()).verdict);
    assert!(op.poset().is_lattice().verdict);
    assert!(!op.check_gom().verdict);
    let top = op.top();
    for x in op.poset().elements() {
        for y in op.poset().elements() {
            assert!(commutator(&op, x, y).is(top), "c({x},{y})");
        }
    }
}

#[test]
fn twenty_element_subset_poset() {
    let op = fixture("fig2").unwrap();
    assert_eq!(op.len(), 20);
    assert!(op.check_om().verdict);
    let lattice = op.poset().is_lattice();
    assert!(!lattice.verdict);
    let members = orthoposet::constructs::fig2_members();
    let sets: Vec<u8> = lattice.witnesses[0].elements.iter().map(|&x| members[x]).collect();
    // {1,4} and {1,5}
    assert_eq!(sets, [0b001001, 0b010001]);
}

#[test]
fn commutator_of_two_atoms_without_join() {
    let op = fixture("fig3").unwrap();
    let c = commutator(&op, at(&op, "a"), at(&op, "b"));
    assert_eq!(c.mins, op.poset().set_of(&[at(&op, "a'"), at(&op, "b'")]));
    assert_eq!(c.as_element, None);
}

#[test]
fn every_fixture_is_an_orthoposet() {
    for name in FIXTURE_NAMES {
        let op = fixture(name).unwrap();
        assert!(validate_orthoposet(op.poset(), op.involution()).verdict, "{name}");
    }
    for name in ["fig2", "fig3"] {
        assert!(fixture(name).unwrap().check_om().verdict, "{name}");
    }
    for name in ["fig1", "fig6"] {
        assert!(fixture(name).unwrap().is_boolean().verdict, "{name}");
    }
}
