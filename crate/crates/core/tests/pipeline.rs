use num_rational::BigRational;

use qtc_core::center::{default_family, f1, f2, check_half_braiding};
use qtc_core::fingroup::FinGroup;
use qtc_core::gqc::validate_all;
use qtc_core::instances::{build_graded_line, build_trivial, build_twisted_dual, minus_cocycle_z2, InstanceDescriptor};
use qtc_core::io::{load_instance, save_instance, InstanceDocument};
use qtc_core::lemma::check_lemma_identities;
use qtc_core::scalar::{Cyclo, FieldSpec};
use qtc_core::ydmod::{check_crossing_invariance, check_hexagons, search_yd_modules, validate_yd, Ansatz};

#[test]
fn rational_graded_line_passes_axioms_and_lemma() {
    let h = build_graded_line::<BigRational>(&FinGroup::cyclic(2), &minus_cocycle_z2()).unwrap();
    assert!(validate_all(&h).passed());
    assert!(check_lemma_identities(&h).passed());
}

#[test]
fn rational_trivial_s3_unit_half_braiding() {
    let h = build_trivial::<BigRational>(&FinGroup::symmetric3()).unwrap();
    let m = qtc_core::ydmod::YDModule::unit(&h);
    let z = f2(&h, &m, &default_family(&h, 2));
    assert!(check_half_braiding(&h, &z).passed());
    assert_eq!(f1(&h, &z).unwrap(), m);
}

#[test]
fn twisted_dual_z2_is_a_quasi_turaev_coalgebra_with_braided_modules() {
    let g = FinGroup::cyclic(2);
    let h = build_twisted_dual::<Cyclo>(&g, &g, &minus_cocycle_z2()).unwrap();
    assert!(!h.has_trivial_phi());
    let r = validate_all(&h);
    assert!(r.passed(), "{}", r.to_text());
    assert!(check_lemma_identities(&h).passed());
    // coactions into functions on G are not monomial: the unit needs 1 = d_0 + d_1
    let roots = FieldSpec::cyclotomic(4).roots_of_unity();
    let ms: Vec<_> = g.elements().flat_map(|a| search_yd_modules(&h, a, 1, &roots, Ansatz::Full, 8).unwrap()).collect();
    assert!(ms.len() > 1, "{} modules", ms.len());
    for m in &ms {
        assert!(validate_yd(&h, m).passed());
    }
    assert!(check_hexagons(&h, &ms).passed());
    assert!(check_crossing_invariance(&h, &ms).passed());
}

#[test]
fn descriptor_document_survives_the_file_format() {
    let b = InstanceDescriptor::new("graded_line", &[("group", "Z4"), ("cocycle", "zeta"), ("order", "8")]).build().unwrap();
    let mut doc = InstanceDocument::new(b.field, b.coalgebra.clone());
    doc.yd_modules = b.yd_modules.clone();
    let z = f2(&b.coalgebra, &b.yd_modules["unit"], &default_family(&b.coalgebra, 1));
    doc.center_objects.insert("z".into(), z);
    let back = load_instance(&save_instance(&doc)).unwrap();
    assert_eq!(back, doc);
    for m in back.yd_modules.values() {
        assert!(validate_yd(&back.coalgebra, m).passed());
    }
    let z = back.center_object("z").unwrap();
    assert_eq!(&f1(&back.coalgebra, z).unwrap(), back.yd_module("unit").unwrap());
}
