//! The YD axioms over a Hopf group coalgebra (trivial `Phi`, `p = q = 1`),
//! coded directly with matrices. Used to cross-check the general validator.

use crate::gqc::{basis, QuasiTuraevCoalgebra};
use crate::report::{check_cases, compare_maps, index_tuples, Report};
use crate::scalar::Field;
use crate::tensor::LinMap;

use super::YDModule;

/// Coassociativity `(rho_l1 (x) id) rho_l2 = (id (x) Delta_{l1,l2}) rho_{l1 l2}`
/// and compatibility, as matrices.
fn coassoc_maps<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, l1: usize, l2: usize) -> (LinMap<F>, LinMap<F>) {
    let d = m.dim();
    let lhs = &m.coaction(l1).kron(&LinMap::identity(h.dim(l2))) * m.coaction(l2);
    let rhs = &LinMap::identity(d).kron(h.delta(l1, l2)) * m.coaction(h.group().mul(l1, l2));
    (lhs, rhs)
}

fn compat_maps<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, b: usize, i: usize) -> (LinMap<F>, LinMap<F>) {
    let g = h.group();
    let a = m.degree();
    let d = m.dim();
    let act = m.module().action();
    let rho = m.coaction(b);
    let comp_b = h.component(b);
    let mut lhs = LinMap::zeros(d * h.dim(b), d);
    for (c, (j, k)) in h.sweedler(a, b, i) {
        let left = act[j].kron(&comp_b.left_mult(&basis(h.dim(b), k)));
        lhs = lhs.add(&(&left * rho).scale(&c)).expect("shape");
    }
    let aba = g.conj(a, b);
    let mut rhs = LinMap::zeros(d * h.dim(b), d);
    for (c, (j, k)) in h.sweedler(aba, a, i) {
        let moved = h.crossing(g.inv(a), aba).column(j);
        let right = LinMap::identity(d).kron(&comp_b.right_mult(&moved));
        rhs = rhs.add(&(&(&right * rho) * &act[k]).scale(&c)).expect("shape");
    }
    (lhs, rhs)
}

/// The classical validator as a report.
pub fn validate_yd_classical<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>) -> Report {
    let mut r = Report::new("yd_classical");
    let n = h.n();
    let d = m.dim();
    let da = h.dim(m.degree());
    let comp = h.component(m.degree());
    r.push(check_cases("classical.representation", "rho(e_i) rho(e_j) = rho(e_i e_j), rho(1) = id", &["i", "j"], index_tuples(&[da, da]), |c| {
        let act = m.module().action();
        if let Some(x) = compare_maps(&m.module().act(comp.unit()), &LinMap::identity(d)) {
            return Ok(Some(x));
        }
        Ok(compare_maps(&(&act[c[0]] * &act[c[1]]), &m.module().act(&comp.mul(&basis(da, c[0]), &basis(da, c[1])))))
    }));
    r.push(check_cases("classical.counit", "(id (x) epsilon) rho_1 = id", &[], vec![vec![]], |_| {
        let eps = LinMap::from_rows(1, h.counit().len(), h.counit().to_vec())?;
        Ok(compare_maps(&(&LinMap::identity(d).kron(&eps) * m.coaction(h.group().identity())), &LinMap::identity(d)))
    }));
    r.push(check_cases(
        "classical.coassociativity",
        "(rho_l1 (x) id) rho_l2 = (id (x) Delta_{l1,l2}) rho_{l1 l2}",
        &["l1", "l2"],
        index_tuples(&[n, n]),
        |c| {
            let (lhs, rhs) = coassoc_maps(h, m, c[0], c[1]);
            Ok(compare_maps(&lhs, &rhs))
        },
    ));
    let mut cases = Vec::new();
    for b in 0..n {
        for i in 0..h.dim(h.group().mul(m.degree(), b)) {
            cases.push(vec![b, i]);
        }
    }
    r.push(check_cases(
        "classical.compatibility",
        "h_(1) . v_(0) (x) h_(2) v_(1) = (h_(2) . v)_(0) (x) (h_(2) . v)_(1) phi_{a^-1}(h_(1))",
        &["b", "h"],
        cases,
        |c| {
            let (lhs, rhs) = compat_maps(h, m, c[0], c[1]);
            Ok(compare_maps(&lhs, &rhs))
        },
    ));
    r
}

/// Whether the classical validator accepts the module.
pub fn classical_yd_verdict<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>) -> bool {
    validate_yd_classical(h, m).passed()
}
