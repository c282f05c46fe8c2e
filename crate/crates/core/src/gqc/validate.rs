//! Axiom validators. Each check evaluates both sides of an identity on every
//! basis element and every group index tuple, and reports the first failure.

use super::{basis, GradedAlgebra, QuasiTuraevCoalgebra};
use crate::report::{check_cases, compare_maps, compare_multivecs, compare_vecs, index_tuples, Report};
use crate::scalar::Field;
use crate::tensor::{LinMap, MultiVec, TensorElement};

/// Report header for the normalization axiom, which is checked on `Phi`.
pub const NORMALIZATION_NOTE: &str = "normalization is checked as (id (x) epsilon (x) id)(Phi_{a,1,b}) = 1_a (x) 1_b; \
     the form applied to 1_a (x) 1_1 (x) 1_b holds trivially";

pub fn validate_algebra<F: Field>(alg: &GradedAlgebra<F>) -> Report {
    let mut r = Report::new("algebra");
    let g = alg.group();
    let mut assoc_cases = Vec::new();
    let mut unit_cases = Vec::new();
    for a in g.elements() {
        let d = alg.dim(a);
        for t in index_tuples(&[d, d, d]) {
            assoc_cases.push([vec![a], t].concat());
        }
        for i in 0..d {
            unit_cases.push(vec![a, i]);
        }
    }
    r.push(check_cases(
        "algebra.associativity",
        "(e_i e_j) e_k = e_i (e_j e_k) in H_a",
        &["a", "i", "j", "k"],
        assoc_cases,
        |c| {
            let comp = alg.component(c[0]);
            let d = comp.dim();
            let (x, y, z) = (basis(d, c[1]), basis(d, c[2]), basis::<F>(d, c[3]));
            Ok(compare_vecs(&comp.mul(&comp.mul(&x, &y), &z), &comp.mul(&x, &comp.mul(&y, &z))))
        },
    ));
    r.push(check_cases("algebra.unit", "1 e_i = e_i = e_i 1 in H_a", &["a", "i"], unit_cases, |c| {
        let comp = alg.component(c[0]);
        let x = basis::<F>(comp.dim(), c[1]);
        Ok(compare_vecs(&comp.mul(comp.unit(), &x), &x).or_else(|| compare_vecs(&comp.mul(&x, comp.unit()), &x)))
    }));
    r
}

fn e<F: Field>(d: usize, i: usize) -> MultiVec<F> {
    MultiVec::basis(vec![d], &[i])
}

pub fn validate_coalgebra<F: Field>(h: &QuasiTuraevCoalgebra<F>) -> Report {
    let mut r = Report::new("coalgebra");
    r.notes.push(NORMALIZATION_NOTE.to_string());
    let g = h.group();
    let n = g.order();
    let one = g.identity();

    let mut mult_cases = Vec::new();
    let mut coassoc_cases = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let d = h.dim(g.mul(a, b));
            for t in index_tuples(&[d, d]) {
                mult_cases.push([vec![a, b], t].concat());
            }
            for c in g.elements() {
                for i in 0..h.dim(g.mul3(a, b, c)) {
                    coassoc_cases.push(vec![a, b, c, i]);
                }
            }
        }
    }
    r.push(check_cases(
        "coalgebra.delta_multiplicative",
        "Delta_{a,b}(e_i e_j) = Delta_{a,b}(e_i) Delta_{a,b}(e_j)",
        &["a", "b", "i", "j"],
        mult_cases,
        |c| {
            let (a, b) = (c[0], c[1]);
            let ab = g.mul(a, b);
            let d = h.dim(ab);
            let prod = h.component(ab).mul(&basis(d, c[2]), &basis(d, c[3]));
            let lhs = h.apply_delta(a, b, &prod)?;
            let x = h.apply_delta(a, b, &basis(d, c[2]))?;
            let y = h.apply_delta(a, b, &basis(d, c[3]))?;
            let rhs = h.tensor_mul(&x, &y)?;
            Ok(compare_multivecs(&lhs.value, &rhs.value))
        },
    ));
    r.push(check_cases(
        "coalgebra.delta_unital",
        "Delta_{a,b}(1_{ab}) = 1_a (x) 1_b",
        &["a", "b"],
        index_tuples(&[n, n]),
        |c| {
            let lhs = h.apply_delta(c[0], c[1], h.unit(g.mul(c[0], c[1])))?;
            Ok(compare_multivecs(&lhs.value, &h.tensor_unit(&[c[0], c[1]]).value))
        },
    ));
    let d1 = h.dim(one);
    r.push(check_cases(
        "coalgebra.counit_morphism",
        "epsilon(e_i e_j) = epsilon(e_i) epsilon(e_j) and epsilon(1_1) = 1",
        &["i", "j"],
        index_tuples(&[d1, d1]),
        |c| {
            let x = basis(d1, c[0]);
            let y = basis(d1, c[1]);
            let lhs = h.apply_counit(&h.component(one).mul(&x, &y))?;
            let rhs = h.apply_counit(&x)?.mul_ref(&h.apply_counit(&y)?);
            if lhs != rhs {
                return Ok(Some((lhs.to_string(), rhs.to_string())));
            }
            let u = h.apply_counit(h.unit(one))?;
            Ok((!u.is_one()).then(|| (format!("epsilon(1) = {u}"), "1".into())))
        },
    ));
    r.push(check_cases(
        "coalgebra.quasi_coassociativity",
        "(id (x) Delta_{b,c}) Delta_{a,bc}(h) Phi_{a,b,c} = Phi_{a,b,c} (Delta_{a,b} (x) id) Delta_{ab,c}(h)",
        &["a", "b", "c", "h"],
        coassoc_cases,
        |c| {
            let (a, b, cc) = (c[0], c[1], c[2]);
            let x = e::<F>(h.dim(g.mul3(a, b, cc)), c[3]);
            let left = h.delta_leg(&h.delta_leg(&x, 0, a, g.mul(b, cc)), 1, b, cc);
            let right = h.delta_leg(&h.delta_leg(&x, 0, g.mul(a, b), cc), 0, a, b);
            let grading = vec![a, b, cc];
            let phi = h.phi(a, b, cc);
            let lhs = h.tensor_mul(&TensorElement { grading: grading.clone(), value: left }, phi)?;
            let rhs = h.tensor_mul(phi, &TensorElement { grading, value: right })?;
            Ok(compare_multivecs(&lhs.value, &rhs.value))
        },
    ));
    let mut counit_cases = Vec::new();
    for a in g.elements() {
        for i in 0..h.dim(a) {
            counit_cases.push(vec![a, i]);
        }
    }
    r.push(check_cases(
        "coalgebra.counit_laws",
        "(id (x) epsilon) Delta_{a,1}(x) = x = (epsilon (x) id) Delta_{1,a}(x)",
        &["a", "i"],
        counit_cases,
        |c| {
            let a = c[0];
            let x = e::<F>(h.dim(a), c[1]);
            let l = h.counit_leg(&h.delta_leg(&x, 0, a, one), 1);
            let rr = h.counit_leg(&h.delta_leg(&x, 0, one, a), 0);
            Ok(compare_multivecs(&l, &x).or_else(|| compare_multivecs(&rr, &x)))
        },
    ));
    r.push(check_cases(
        "coalgebra.pentagon",
        "(1 (x) Phi_{b,c,l})(id (x) Delta_{b,c} (x) id)(Phi_{a,bc,l})(Phi_{a,b,c} (x) 1) = (id (x) id (x) Delta_{c,l})(Phi_{a,b,cl})(Delta_{a,b} (x) id (x) id)(Phi_{ab,c,l})",
        &["a", "b", "c", "l"],
        index_tuples(&[n, n, n, n]),
        |c| {
            let (a, b, cc, l) = (c[0], c[1], c[2], c[3]);
            let grading = vec![a, b, cc, l];
            let t = |v: MultiVec<F>| TensorElement { grading: grading.clone(), value: v };
            let one_phi = t(MultiVec::vector(h.unit(a).to_vec()).outer(&h.phi(b, cc, l).value));
            let mid = t(h.delta_leg(&h.phi(a, g.mul(b, cc), l).value, 1, b, cc));
            let phi_one = t(h.phi(a, b, cc).value.outer(&MultiVec::vector(h.unit(l).to_vec())));
            let lhs = h.tensor_mul(&h.tensor_mul(&one_phi, &mid)?, &phi_one)?;
            let r1 = t(h.delta_leg(&h.phi(a, b, g.mul(cc, l)).value, 2, cc, l));
            let r2 = t(h.delta_leg(&h.phi(g.mul(a, b), cc, l).value, 0, a, b));
            let rhs = h.tensor_mul(&r1, &r2)?;
            Ok(compare_multivecs(&lhs.value, &rhs.value))
        },
    ));
    r.push(check_cases(
        "coalgebra.normalization",
        "(id (x) epsilon (x) id)(Phi_{a,1,b}) = 1_a (x) 1_b",
        &["a", "b"],
        index_tuples(&[n, n]),
        |c| {
            let lhs = h.counit_leg(&h.phi(c[0], one, c[1]).value, 1);
            Ok(compare_multivecs(&lhs, &h.tensor_unit(&[c[0], c[1]]).value))
        },
    ));
    r.push(check_cases(
        "coalgebra.phi_inverse",
        "Phi_{a,b,c} Phi^{-1}_{a,b,c} = 1 = Phi^{-1}_{a,b,c} Phi_{a,b,c}",
        &["a", "b", "c"],
        index_tuples(&[n, n, n]),
        |c| {
            let (phi, inv) = (h.phi(c[0], c[1], c[2]), h.phi_inv(c[0], c[1], c[2]));
            let unit = h.tensor_unit(&[c[0], c[1], c[2]]);
            let l = h.tensor_mul(phi, inv)?;
            let rr = h.tensor_mul(inv, phi)?;
            Ok(compare_multivecs(&l.value, &unit.value).or_else(|| compare_multivecs(&rr.value, &unit.value)))
        },
    ));
    r
}

pub fn validate_antipode<F: Field>(h: &QuasiTuraevCoalgebra<F>) -> Report {
    let mut r = Report::new("antipode");
    let g = h.group();
    let n = g.order();
    let one = g.identity();
    let mut pair_cases = Vec::new();
    for a in g.elements() {
        let d = h.dim(a);
        for t in index_tuples(&[d, d]) {
            pair_cases.push([vec![a], t].concat());
        }
    }
    r.push(check_cases(
        "antipode.anti_multiplicative",
        "S_a(e_i e_j) = S_a(e_j) S_a(e_i) and S_a(1_a) = 1_{a^{-1}}",
        &["a", "i", "j"],
        pair_cases,
        |c| {
            let a = c[0];
            let ai = g.inv(a);
            let d = h.dim(a);
            let (x, y) = (basis::<F>(d, c[1]), basis::<F>(d, c[2]));
            let lhs = h.apply_antipode(a, &h.component(a).mul(&x, &y))?;
            let rhs = h.component(ai).mul(&h.apply_antipode(a, &y)?, &h.apply_antipode(a, &x)?);
            let s1 = h.apply_antipode(a, h.unit(a))?;
            Ok(compare_vecs(&lhs, &rhs).or_else(|| compare_vecs(&s1, h.unit(ai))))
        },
    ));
    r.push(check_cases(
        "antipode.invertible",
        "S_a^{-1} S_a = id and S_a S_a^{-1} = id",
        &["a"],
        index_tuples(&[n]),
        |c| {
            let a = c[0];
            let s = h.antipode(a);
            let si = h.antipode_inv(a);
            let l = si.compose(s)?;
            let rr = s.compose(si)?;
            Ok(compare_maps(&l, &LinMap::identity(h.dim(a)))
                .or_else(|| compare_maps(&rr, &LinMap::identity(h.dim(g.inv(a))))))
        },
    ));
    let d1 = h.dim(one);
    r.push(check_cases(
        "antipode.p_axiom",
        "S_a(h_(1,a)) p_{a^{-1}} h_(2,a^{-1}) = epsilon(h) p_{a^{-1}}",
        &["a", "h"],
        index_tuples(&[n, d1]),
        |c| {
            let a = c[0];
            let ai = g.inv(a);
            let x = e::<F>(d1, c[1]);
            let v = h.antipode_leg(&h.delta_leg(&x, 0, a, ai), 0, a);
            let v = v.outer(&MultiVec::vector(h.p(ai).to_vec()));
            let v = h.mul_legs(&v, 0, 2, 0, ai);
            let lhs = h.mul_legs(&v, 0, 1, 0, ai);
            let eps = h.apply_counit(x.data())?;
            Ok(compare_multivecs(&lhs, &MultiVec::vector(h.p(ai).to_vec()).scale(&eps)))
        },
    ));
    r.push(check_cases(
        "antipode.q_axiom",
        "h_(1,a) q_a S_{a^{-1}}(h_(2,a^{-1})) = epsilon(h) q_a",
        &["a", "h"],
        index_tuples(&[n, d1]),
        |c| {
            let a = c[0];
            let ai = g.inv(a);
            let x = e::<F>(d1, c[1]);
            let v = h.antipode_leg(&h.delta_leg(&x, 0, a, ai), 1, ai);
            let v = v.outer(&MultiVec::vector(h.q(a).to_vec()));
            let v = h.mul_legs(&v, 0, 2, 0, a);
            let lhs = h.mul_legs(&v, 0, 1, 0, a);
            let eps = h.apply_counit(x.data())?;
            Ok(compare_multivecs(&lhs, &MultiVec::vector(h.q(a).to_vec()).scale(&eps)))
        },
    ));
    r.push(check_cases(
        "antipode.phi_axiom",
        "Y^1 q_a S_{a^{-1}}(Y^2) p_a Y^3 = 1_a for Phi_{a,a^{-1},a}",
        &["a"],
        index_tuples(&[n]),
        |c| {
            let a = c[0];
            let ai = g.inv(a);
            let lhs = phi_axiom_lhs(h, a, ai);
            Ok(compare_multivecs(&lhs, &MultiVec::vector(h.unit(a).to_vec())))
        },
    ));
    r.push(check_cases(
        "antipode.phi_inv_axiom",
        "S_{a^{-1}}(y^1) p_a y^2 q_a S_{a^{-1}}(y^3) = 1_a for Phi^{-1}_{a^{-1},a,a^{-1}}",
        &["a"],
        index_tuples(&[n]),
        |c| {
            let a = c[0];
            let ai = g.inv(a);
            let v = h.phi_inv(ai, a, ai).value.clone();
            let v = h.antipode_leg(&h.antipode_leg(&v, 0, ai), 2, ai);
            let v = v.outer(&MultiVec::vector(h.p(a).to_vec())).outer(&MultiVec::vector(h.q(a).to_vec()));
            // legs: S(y1), y2, S(y3), p, q
            let v = h.mul_legs(&v, 0, 3, 0, a);
            let v = h.mul_legs(&v, 0, 1, 0, a);
            let v = h.mul_legs(&v, 0, 2, 0, a);
            let lhs = h.mul_legs(&v, 0, 1, 0, a);
            Ok(compare_multivecs(&lhs, &MultiVec::vector(h.unit(a).to_vec())))
        },
    ));
    r
}

fn phi_axiom_lhs<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: usize, ai: usize) -> MultiVec<F> {
    let v = h.antipode_leg(&h.phi(a, ai, a).value, 1, ai);
    let v = v.outer(&MultiVec::vector(h.q(a).to_vec())).outer(&MultiVec::vector(h.p(a).to_vec()));
    // legs: Y1, S(Y2), Y3, q, p
    let v = h.mul_legs(&v, 0, 3, 0, a);
    let v = h.mul_legs(&v, 0, 1, 0, a);
    let v = h.mul_legs(&v, 0, 2, 0, a);
    h.mul_legs(&v, 0, 1, 0, a)
}

pub fn validate_crossing<F: Field>(h: &QuasiTuraevCoalgebra<F>) -> Report {
    let mut r = Report::new("crossing");
    let g = h.group();
    let n = g.order();
    let one = g.identity();
    let mut pair_cases = Vec::new();
    let mut delta_cases = Vec::new();
    for b in g.elements() {
        for a in g.elements() {
            let d = h.dim(a);
            for t in index_tuples(&[d, d]) {
                pair_cases.push([vec![b, a], t].concat());
            }
            for c in g.elements() {
                for i in 0..h.dim(g.mul(a, c)) {
                    delta_cases.push(vec![b, a, c, i]);
                }
            }
        }
    }
    r.push(check_cases(
        "crossing.algebra_isomorphism",
        "phi_b(e_i e_j) = phi_b(e_i) phi_b(e_j), phi_b(1_a) = 1_{bab^{-1}}, phi_b bijective",
        &["b", "a", "i", "j"],
        pair_cases,
        |c| {
            let (b, a) = (c[0], c[1]);
            let ba = g.conj(b, a);
            let d = h.dim(a);
            let (x, y) = (basis::<F>(d, c[2]), basis::<F>(d, c[3]));
            let lhs = h.apply_crossing(b, a, &h.component(a).mul(&x, &y))?;
            let rhs = h.component(ba).mul(&h.apply_crossing(b, a, &x)?, &h.apply_crossing(b, a, &y)?);
            if let Some(diff) = compare_vecs(&lhs, &rhs) {
                return Ok(Some(diff));
            }
            if let Some(diff) = compare_vecs(&h.apply_crossing(b, a, h.unit(a))?, h.unit(ba)) {
                return Ok(Some(diff));
            }
            let m = h.crossing(b, a);
            Ok((c[2] == 0 && c[3] == 0 && (!m.is_square() || m.rank() < m.rows()))
                .then(|| (format!("rank {}", m.rank()), format!("rank {}", m.rows()))))
        },
    ));
    r.push(check_cases(
        "crossing.coproduct",
        "(phi_b (x) phi_b) Delta_{a,c} = Delta_{bab^{-1},bcb^{-1}} phi_b",
        &["b", "a", "c", "h"],
        delta_cases,
        |c| {
            let (b, a, cc) = (c[0], c[1], c[2]);
            let x = e::<F>(h.dim(g.mul(a, cc)), c[3]);
            let lhs = h.crossing_leg(&h.crossing_leg(&h.delta_leg(&x, 0, a, cc), 0, b, a), 1, b, cc);
            let rhs = h.delta_leg(&h.crossing_leg(&x, 0, b, g.mul(a, cc)), 0, g.conj(b, a), g.conj(b, cc));
            Ok(compare_multivecs(&lhs, &rhs))
        },
    ));
    let d1 = h.dim(one);
    r.push(check_cases(
        "crossing.counit",
        "epsilon(phi_b(h)) = epsilon(h)",
        &["b", "h"],
        index_tuples(&[n, d1]),
        |c| {
            let x = basis::<F>(d1, c[1]);
            let lhs = h.apply_counit(&h.apply_crossing(c[0], one, &x)?)?;
            let rhs = h.apply_counit(&x)?;
            Ok((lhs != rhs).then(|| (lhs.to_string(), rhs.to_string())))
        },
    ));
    r.push(check_cases(
        "crossing.multiplicative",
        "phi_b phi_c = phi_{bc} on H_a",
        &["b", "c", "a"],
        index_tuples(&[n, n, n]),
        |c| {
            let (b, cc, a) = (c[0], c[1], c[2]);
            let lhs = h.crossing(b, g.conj(cc, a)).compose(h.crossing(cc, a))?;
            Ok(compare_maps(&lhs, h.crossing(g.mul(b, cc), a)))
        },
    ));
    r.push(check_cases(
        "crossing.phi_invariance",
        "(phi_x (x) phi_y (x) phi_z) Phi_{a,b,c} = Phi_{xax^{-1},yby^{-1},zcz^{-1}}",
        &["x", "y", "z", "a", "b", "c"],
        index_tuples(&[n, n, n, n, n, n]),
        |c| {
            let (x, y, z, a, b, cc) = (c[0], c[1], c[2], c[3], c[4], c[5]);
            let v = h.phi(a, b, cc).value.clone();
            let v = h.crossing_leg(&h.crossing_leg(&h.crossing_leg(&v, 0, x, a), 1, y, b), 2, z, cc);
            Ok(compare_multivecs(&v, &h.phi(g.conj(x, a), g.conj(y, b), g.conj(z, cc)).value))
        },
    ));
    r
}

/// Every validator of this module, in a fixed order.
pub fn validate_all<F: Field>(h: &QuasiTuraevCoalgebra<F>) -> Report {
    let mut r = Report::new("gqc");
    r.extend(validate_algebra(h.algebra()));
    r.extend(validate_coalgebra(h));
    r.extend(validate_antipode(h));
    r.extend(validate_crossing(h));
    r
}
