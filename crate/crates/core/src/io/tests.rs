use super::*;
use crate::fingroup::FinGroup;
use crate::instances::{build_trivial, InstanceDescriptor};

fn doc_for(d: &InstanceDescriptor) -> InstanceDocument {
    let b = d.build().unwrap();
    let mut doc = InstanceDocument::new(b.field, b.coalgebra);
    doc.yd_modules = b.yd_modules;
    doc
}

fn graded_z4() -> InstanceDocument {
    doc_for(&InstanceDescriptor::new("graded_line", &[("group", "Z4"), ("cocycle", "zeta"), ("order", "8")]))
}

#[test]
fn trivial_round_trip_equals_builder() {
    let h = build_trivial(&FinGroup::cyclic(2)).unwrap();
    let doc = InstanceDocument::new(FieldSpec::RATIONAL, h);
    let back = load_instance(&save_instance(&doc)).unwrap();
    assert_eq!(back, doc);
}

#[test]
fn double_round_trip_is_byte_identical() {
    let doc = graded_z4();
    let once = save_instance(&load_instance(&save_instance(&doc)).unwrap());
    let twice = save_instance(&load_instance(&once).unwrap());
    assert_eq!(once, twice);
    assert!(once.contains("zeta"));
    assert_eq!(load_instance(&once).unwrap(), doc);
}

#[test]
fn yd_and_center_blocks_round_trip() {
    let mut doc = graded_z4();
    let h = doc.coalgebra.clone();
    let m = doc.yd_modules.values().nth(2).unwrap().clone();
    let fam = crate::center::default_family(&h, 2);
    doc.center_objects.insert("z".into(), crate::center::f2(&h, &m, &fam));
    let back = load_instance(&save_instance(&doc)).unwrap();
    assert_eq!(back, doc);
}

fn edit(text: &str, f: impl FnOnce(&mut Value)) -> String {
    let mut v: Value = serde_json::from_str(text).unwrap();
    f(&mut v);
    serde_json::to_string(&v).unwrap()
}

#[test]
fn missing_inverses_are_computed() {
    let doc = graded_z4();
    let text = edit(&save_instance(&doc), |v| {
        for (_, e) in v["phi"].as_object_mut().unwrap() {
            e.as_object_mut().unwrap().remove("inverse");
        }
        for (_, e) in v["antipode"].as_object_mut().unwrap() {
            e.as_object_mut().unwrap().remove("inverse");
        }
    });
    let back = load_instance(&text).unwrap();
    assert_eq!(back.coalgebra, doc.coalgebra);
}

#[test]
fn wrong_matrix_shape_names_block() {
    let doc = doc_for(&InstanceDescriptor::new("constant_hopf", &[("pi", "Z2"), ("g", "Z2")]));
    let text = edit(&save_instance(&doc), |v| {
        v["crossing"]["1"]["0"] = serde_json::json!([["1", "0", "0"], ["0", "1", "0"]]);
    });
    match load_instance(&text) {
        Err(Error::Shape { block, index, .. }) => {
            assert_eq!(block, "crossing");
            assert_eq!(index, "1,0");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn ragged_and_missing_entries() {
    let doc = graded_z4();
    let text = edit(&save_instance(&doc), |v| {
        v["delta"].as_object_mut().unwrap().remove("2,3");
    });
    assert!(matches!(load_instance(&text), Err(Error::Shape { index, .. }) if index == "2,3"));
    let text = edit(&save_instance(&doc), |v| {
        v["group"]["table"][0] = serde_json::json!([0, 1]);
    });
    assert!(matches!(load_instance(&text), Err(Error::Shape { .. })));
}

#[test]
fn zeta_in_rational_field_is_rejected() {
    let h = build_trivial(&FinGroup::cyclic(2)).unwrap();
    let text = edit(&save_instance(&InstanceDocument::new(FieldSpec::RATIONAL, h)), |v| {
        v["counit"] = serde_json::json!(["zeta"]);
    });
    match load_instance(&text) {
        Err(Error::Scalar { location, .. }) => assert_eq!(location, "counit[0]"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_json_has_location() {
    match load_instance("{\n  \"field\": \n") {
        Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 3"), "{location}"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(load_instance("[]"), Err(Error::Parse { .. })));
}

#[test]
fn unknown_names_are_reported() {
    let doc = graded_z4();
    assert!(matches!(doc.yd_module("nope"), Err(Error::UnknownName(_))));
    assert!(doc.yd_module("unit").is_ok());
}
