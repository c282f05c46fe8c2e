use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::fingroup::FinGroup;
use crate::instances::{build_constant_hopf, build_graded_line, build_trivial, classical_yd_module, minus_cocycle_z2, zeta_cocycle_cyclic};
use crate::scalar::{Cyclo, FieldSpec};

fn dim_one(h: &QuasiTuraevCoalgebra<Cyclo>, order: u32) -> Vec<YDModule<Cyclo>> {
    let roots = FieldSpec::cyclotomic(order).roots_of_unity();
    h.group().elements().flat_map(|a| search_yd_modules(h, a, 1, &roots, Ansatz::Monomial, 32).unwrap()).collect()
}

fn scalar(m: &LinMap<Cyclo>) -> Cyclo {
    assert_eq!((m.rows(), m.cols()), (1, 1));
    m.get(0, 0).clone()
}

/// The braiding with trivial `Phi`, `p = q = 1`: `c(v (x) x) = S(v_(1)) . x (x) v_(0)`.
fn hopf_braiding_oracle(h: &QuasiTuraevCoalgebra<Cyclo>, m: &YDModule<Cyclo>, x: &RepModule<Cyclo>) -> LinMap<Cyclo> {
    let g = h.group();
    let (dv, dx) = (m.dim(), x.dim());
    let li = g.inv(x.degree());
    let dl = h.dim(li);
    let mut c = LinMap::zeros(dx * dv, dv * dx);
    for v in 0..dv {
        for w in 0..dv {
            for a in 0..dl {
                let coef = m.coaction(li).get(w * dl + a, v).clone();
                if coef.is_zero() {
                    continue;
                }
                let s = x.act(&h.antipode(li).column(a)).scale(&coef);
                for xi in 0..dx {
                    for xo in 0..dx {
                        *c.entry_mut(xo * dv + w, v * dx + xi) += s.get(xo, xi).clone();
                    }
                }
            }
        }
    }
    c
}

#[test]
fn unit_module_is_yd_everywhere() {
    let hs = [
        build_trivial::<Cyclo>(&FinGroup::symmetric3()).unwrap(),
        build_graded_line(&FinGroup::cyclic(2), &minus_cocycle_z2()).unwrap(),
        build_constant_hopf(&FinGroup::cyclic(2), &FinGroup::cyclic(2)).unwrap(),
    ];
    for h in &hs {
        let u = YDModule::unit(h);
        assert!(validate_yd(h, &u).passed());
        assert!(is_yd(h, &u));
    }
}

#[test]
fn trivial_instance_braids_by_flip() {
    let h = build_trivial::<Cyclo>(&FinGroup::cyclic(2)).unwrap();
    for m in dim_one(&h, 1) {
        for n in dim_one(&h, 1) {
            let (c, hat) = yd_braiding(&h, &m, &n).unwrap();
            // c(v (x) w) = chi_V(deg W^-1) w (x) v
            let li = h.group().inv(n.degree());
            assert_eq!(scalar(&c), scalar(m.coaction(li)));
            assert_eq!(scalar(&hat), scalar(m.coaction(n.degree())));
        }
    }
}

#[test]
fn graded_line_z2_modules() {
    let h = build_graded_line(&FinGroup::cyclic(2), &minus_cocycle_z2()).unwrap();
    let z = Cyclo::zeta(4);
    let found: Vec<(Elem, Cyclo)> = dim_one(&h, 4).iter().map(|m| (m.degree(), scalar(m.coaction(1)))).collect();
    let mut expected = vec![(0, Cyclo::one()), (0, Cyclo::from_int(-1)), (1, z.clone()), (1, -z)];
    let mut found_sorted = found.clone();
    let key = |p: &(Elem, Cyclo)| format!("{} {}", p.0, p.1);
    found_sorted.sort_by_key(key);
    expected.sort_by_key(key);
    assert_eq!(found_sorted, expected);
    for m in dim_one(&h, 4) {
        assert!(scalar(m.coaction(0)).is_one());
    }
}

#[test]
fn tensor_of_lines_matches_scalar_formula() {
    let g = FinGroup::cyclic(4);
    let w = zeta_cocycle_cyclic(4, 8).unwrap();
    let h = build_graded_line(&g, &w).unwrap();
    let om = |a: Elem, b: Elem, c: Elem| w[(a * 4 + b) * 4 + c].clone();
    let ms = dim_one(&h, 8);
    for m in &ms {
        for n in &ms {
            let t = yd_tensor(&h, m, n);
            assert!(is_yd(&h, &t));
            let (a, b) = (m.degree(), n.degree());
            for l in 0..4 {
                let expect = om(a, l, b).mul_ref(&scalar(m.coaction(l))).mul_ref(&scalar(n.coaction(l)))
                    .div_ref(&om(l, a, b).mul_ref(&om(a, b, l)))
                    .unwrap();
                assert_eq!(scalar(t.coaction(l)), expect, "a={a} b={b} l={l}");
            }
        }
    }
}

#[test]
fn conjugation_composes_on_s3() {
    let h = build_trivial::<Cyclo>(&FinGroup::symmetric3()).unwrap();
    let g = h.group();
    for m in dim_one(&h, 1) {
        assert_eq!(yd_conjugate(&h, g.identity(), &m), m);
        for b in g.elements() {
            let mb = yd_conjugate(&h, b, &m);
            assert!(is_yd(&h, &mb));
            assert_eq!(mb.degree(), g.conj(b, m.degree()));
            for c in g.elements() {
                assert_eq!(yd_conjugate(&h, c, &mb), yd_conjugate(&h, g.mul(c, b), &m));
            }
        }
    }
}

#[test]
fn braiding_matches_hopf_formula_on_constant_family() {
    let g = FinGroup::symmetric3();
    let h = build_constant_hopf::<Cyclo>(&FinGroup::cyclic(2), &g).unwrap();
    let classical = classical_yd_module(&h, &g).unwrap();
    let mut ms = dim_one(&h, 1);
    ms.push(classical);
    for m in &ms {
        for l in 0..2 {
            let x = RepModule::regular(&h, l);
            assert_eq!(braiding(&h, m, &x), hopf_braiding_oracle(&h, m, &x));
        }
    }
}

#[test]
fn morphisms() {
    let g = FinGroup::cyclic(2);
    let h = build_constant_hopf::<Cyclo>(&g, &g).unwrap();
    let m = classical_yd_module(&h, &g).unwrap();
    assert!(check_yd_morphism(&h, &LinMap::identity(2), &m, &m).passed());
    assert!(check_yd_morphism(&h, &LinMap::zeros(2, 2), &m, &m).passed());
    // swapping the basis breaks colinearity
    let swap = LinMap::from_rows(2, 2, vec![Cyclo::zero(), Cyclo::one(), Cyclo::one(), Cyclo::zero()]).unwrap();
    let r = check_yd_morphism(&h, &swap, &m, &m);
    assert!(!r.check("yd_morphism.colinear").unwrap().passed());
    let u = YDModule::unit(&h);
    assert!(!check_yd_morphism(&h, &LinMap::zeros(1, 2), &m, &u).passed() || u.degree() == m.degree());
}

#[test]
fn classical_and_quasi_validators_agree() {
    let g = FinGroup::cyclic(2);
    let h = build_constant_hopf::<Cyclo>(&g, &g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pick = |rng: &mut ChaCha8Rng| Cyclo::from_int(rng.gen_range(-1..=1));
    let (mut pass, mut fail) = (0, 0);
    // monomial candidates: one random entry in {0, 1, -1} per coaction
    for _ in 0..200 {
        let a = rng.gen_range(0..2);
        let action = (0..2).map(|i| LinMap::from_rows(1, 1, vec![if i == 0 { Cyclo::one() } else { pick(&mut rng) }]).unwrap()).collect();
        let module = RepModule::new(&h, a, 1, action).unwrap();
        let coaction = (0..2)
            .map(|_| {
                let mut c = LinMap::zeros(2, 1);
                let row = rng.gen_range(0..2);
                c.set(row, 0, pick(&mut rng));
                c
            })
            .collect();
        let m = YDModule::new(&h, module, coaction).unwrap();
        let verdict = is_yd(&h, &m);
        assert_eq!(verdict, validate_yd(&h, &m).passed());
        assert_eq!(verdict, classical_yd_verdict(&h, &m));
        if verdict {
            pass += 1
        } else {
            fail += 1
        }
    }
    assert!(pass > 0 && fail > 0, "pass {pass} fail {fail}");
}
