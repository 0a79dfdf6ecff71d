use orthoposet::constructs::{export_dot, fixture, parse, serialize, FIXTURE_NAMES};

#[test]
fn parse_after_serialize_is_the_identity() {
    for name in FIXTURE_NAMES {
        let op = fixture(name).unwrap();
        let text = serialize(name, &op);
        let doc = parse(&text).unwrap();
        assert_eq!(doc.name, name);
        assert_eq!(doc.structure, op, "{name}");
        assert_eq!(serialize(&doc.name, &doc.structure), text);
    }
}

#[test]
fn exports_are_deterministic() {
    for name in FIXTURE_NAMES {
        let op = fixture(name).unwrap();
        assert_eq!(export_dot(name, &op), export_dot(name, &fixture(name).unwrap()));
        assert_eq!(serialize(name, &op), serialize(name, &fixture(name).unwrap()));
    }
}
