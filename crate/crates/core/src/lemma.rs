//! The elements `I^R, J^R, I^L, J^L` of the quasi-Hopf analogue of
//! `h_(1) (x) h_(2) S(h_(3)) = h (x) 1`, and checks of the eight identities
//! they satisfy.

use crate::error::Result;
use crate::fingroup::Elem;
use crate::gqc::{basis, QuasiTuraevCoalgebra};
use crate::report::{check_cases, compare_multivecs, index_tuples, Check, Report, Verdict};
use crate::scalar::Field;
use crate::tensor::{MultiVec, TensorElement};

/// The four elements at one pair `(a, b)`, each in `H_a (x) H_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaElements<F> {
    pub ir: TensorElement<F>,
    pub jr: TensorElement<F>,
    pub il: TensorElement<F>,
    pub jl: TensorElement<F>,
}

/// `I^R_{a,b} = y^1 (x) y^2 q_b S_{b^{-1}}(y^3)` with `y = Phi^{-1}_{a,b,b^{-1}}`.
pub fn ir<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem) -> TensorElement<F> {
    let bi = h.group().inv(b);
    let mut v = h.phi_inv(a, b, bi).value.clone();
    v = h.antipode_leg(&v, 2, bi);
    v = v.outer(&MultiVec::vector(h.q(b).to_vec()));
    v = h.mul_legs(&v, 1, 3, 1, b);
    v = h.mul_legs(&v, 1, 2, 1, b);
    TensorElement { grading: vec![a, b], value: v }
}

/// `J^R_{a,b} = Y^1 (x) S_b^{-1}(p_{b^{-1}} Y^3) Y^2` with `Y = Phi_{a,b,b^{-1}}`.
pub fn jr<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem) -> TensorElement<F> {
    let bi = h.group().inv(b);
    let mut v = h.phi(a, b, bi).value.clone();
    v = v.outer(&MultiVec::vector(h.p(bi).to_vec()));
    v = h.mul_legs(&v, 3, 2, 2, bi);
    v = h.antipode_inv_leg(&v, 2, b);
    v = h.mul_legs(&v, 2, 1, 1, b);
    TensorElement { grading: vec![a, b], value: v }
}

/// `I^L_{a,b} = Y^2 S_a^{-1}(Y^1 q_{a^{-1}}) (x) Y^3` with `Y = Phi_{a^{-1},a,b}`.
pub fn il<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem) -> TensorElement<F> {
    let ai = h.group().inv(a);
    let mut v = h.phi(ai, a, b).value.clone();
    v = v.outer(&MultiVec::vector(h.q(ai).to_vec()));
    v = h.mul_legs(&v, 0, 3, 0, ai);
    v = h.antipode_inv_leg(&v, 0, a);
    v = h.mul_legs(&v, 1, 0, 0, a);
    TensorElement { grading: vec![a, b], value: v }
}

/// `J^L_{a,b} = S_{a^{-1}}(y^1) p_a y^2 (x) y^3` with `y = Phi^{-1}_{a^{-1},a,b}`.
pub fn jl<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem) -> TensorElement<F> {
    let ai = h.group().inv(a);
    let mut v = h.phi_inv(ai, a, b).value.clone();
    v = h.antipode_leg(&v, 0, ai);
    v = v.outer(&MultiVec::vector(h.p(a).to_vec()));
    v = h.mul_legs(&v, 0, 3, 0, a);
    v = h.mul_legs(&v, 0, 1, 0, a);
    TensorElement { grading: vec![a, b], value: v }
}

pub fn compute_lemma_elements<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem) -> LemmaElements<F> {
    LemmaElements { ir: ir(h, a, b), jr: jr(h, a, b), il: il(h, a, b), jl: jl(h, a, b) }
}

fn pair<F: Field>(a: Elem, b: Elem, x: &[F], y: &[F]) -> TensorElement<F> {
    let value = MultiVec::vector(x.to_vec()).outer(&MultiVec::vector(y.to_vec()));
    TensorElement { grading: vec![a, b], value }
}

fn sum_terms<F: Field>(
    t: &TensorElement<F>,
    grading: Vec<Elem>,
    shape: Vec<usize>,
    mut term: impl FnMut(usize, usize) -> Result<TensorElement<F>>,
) -> Result<TensorElement<F>> {
    let mut acc = MultiVec::zeros(shape);
    let mut err = None;
    t.value.for_each_nonzero(|idx, c| {
        if err.is_some() {
            return;
        }
        match term(idx[0], idx[1]) {
            Ok(x) => acc.add_assign(&x.value.scale(c)),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(TensorElement { grading, value: acc }),
    }
}

/// `sum Delta_{a,b}(t^1) I^R_{a,b} [1 (x) S_{b^{-1}}(t^2)]` for `t` in `H_{ab} (x) H_{b^{-1}}`.
fn right_i_sandwich<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem, t: &TensorElement<F>) -> Result<TensorElement<F>> {
    let (ab, bi) = (h.group().mul(a, b), h.group().inv(b));
    let i = ir(h, a, b);
    sum_terms(t, vec![a, b], vec![h.dim(a), h.dim(b)], |j, k| {
        let d = h.apply_delta(a, b, &basis(h.dim(ab), j))?;
        let s = h.apply_antipode(bi, &basis(h.dim(bi), k))?;
        h.tensor_mul(&h.tensor_mul(&d, &i)?, &pair(a, b, h.unit(a), &s))
    })
}

/// `sum [1 (x) S_b^{-1}(t^2)] J^R_{a,b} Delta_{a,b}(t^1)` for `t` in `H_{ab} (x) H_{b^{-1}}`.
fn right_j_sandwich<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem, t: &TensorElement<F>) -> Result<TensorElement<F>> {
    let (ab, bi) = (h.group().mul(a, b), h.group().inv(b));
    let jj = jr(h, a, b);
    sum_terms(t, vec![a, b], vec![h.dim(a), h.dim(b)], |j, k| {
        let d = h.apply_delta(a, b, &basis(h.dim(ab), j))?;
        let s = h.apply_antipode_inv(b, &basis(h.dim(bi), k))?;
        h.tensor_mul(&h.tensor_mul(&pair(a, b, h.unit(a), &s), &jj)?, &d)
    })
}

/// `sum Delta_{a,b}(t^2) I^L_{a,b} [S_a^{-1}(t^1) (x) 1]` for `t` in `H_{a^{-1}} (x) H_{ab}`.
fn left_i_sandwich<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem, t: &TensorElement<F>) -> Result<TensorElement<F>> {
    let (ab, ai) = (h.group().mul(a, b), h.group().inv(a));
    let i = il(h, a, b);
    sum_terms(t, vec![a, b], vec![h.dim(a), h.dim(b)], |j, k| {
        let d = h.apply_delta(a, b, &basis(h.dim(ab), k))?;
        let s = h.apply_antipode_inv(a, &basis(h.dim(ai), j))?;
        h.tensor_mul(&h.tensor_mul(&d, &i)?, &pair(a, b, &s, h.unit(b)))
    })
}

/// `sum [S_{a^{-1}}(t^1) (x) 1] J^L_{a,b} Delta_{a,b}(t^2)` for `t` in `H_{a^{-1}} (x) H_{ab}`.
fn left_j_sandwich<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, b: Elem, t: &TensorElement<F>) -> Result<TensorElement<F>> {
    let (ab, ai) = (h.group().mul(a, b), h.group().inv(a));
    let jj = jl(h, a, b);
    sum_terms(t, vec![a, b], vec![h.dim(a), h.dim(b)], |j, k| {
        let d = h.apply_delta(a, b, &basis(h.dim(ab), k))?;
        let s = h.apply_antipode(ai, &basis(h.dim(ai), j))?;
        h.tensor_mul(&h.tensor_mul(&pair(a, b, &s, h.unit(b)), &jj)?, &d)
    })
}

fn verdict<F: Field>(lhs: &TensorElement<F>, rhs: &TensorElement<F>) -> Verdict {
    Ok(compare_multivecs(&lhs.value, &rhs.value))
}

const STATEMENTS: [(&str, &str); 8] = [
    ("lemma.ir_h", "Delta_{a,b}(h_(1,ab)) I^R_{a,b} [1 (x) S_{b^-1}(h_(2,b^-1))] = I^R_{a,b} [h (x) 1], h in H_a"),
    ("lemma.jr_h", "[1 (x) S_b^-1(h_(2,b^-1))] J^R_{a,b} Delta_{a,b}(h_(1,ab)) = [h (x) 1] J^R_{a,b}, h in H_a"),
    ("lemma.il_h", "Delta_{a,b}(x_(2,ab)) I^L_{a,b} [S_a^-1(x_(1,a^-1)) (x) 1] = I^L_{a,b} [1 (x) x], x in H_b"),
    ("lemma.jl_h", "[S_{a^-1}(x_(1,a^-1)) (x) 1] J^L_{a,b} Delta_{a,b}(x_(2,ab)) = J^L_{a,b} [1 (x) x], x in H_b"),
    ("lemma.ir_jr", "Delta_{a,b}(J^1) I^R_{a,b} [1 (x) S_{b^-1}(J^2)] = 1 (x) 1, J = J^R_{ab,b^-1}"),
    ("lemma.jr_ir", "[1 (x) S_b^-1(I^2)] J^R_{a,b} Delta_{a,b}(I^1) = 1 (x) 1, I = I^R_{ab,b^-1}"),
    ("lemma.il_jl", "Delta_{a,b}(J~^2) I^L_{a,b} [S_a^-1(J~^1) (x) 1] = 1 (x) 1, J~ = J^L_{a^-1,ab}"),
    ("lemma.jl_il", "[S_{a^-1}(I~^1) (x) 1] J^L_{a,b} Delta_{a,b}(I~^2) = 1 (x) 1, I~ = I^L_{a^-1,ab}"),
];

/// Note attached to a failing identity on an instance with nontrivial `Phi`.
pub const SUSPECTED_TYPO: &str =
    "fails with nontrivial Phi; the printed index placement may contain a typo (minimal counterexample shown, no corrected formula is guessed)";

fn basis_cases(h: &QuasiTuraevCoalgebra<impl Field>, which: impl Fn(Elem, Elem) -> Elem) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for i in 0..h.dim(which(a, b)) {
                out.push(vec![a, b, i]);
            }
        }
    }
    out
}

/// Check the eight identities for every pair `(a, b)` and, where an element
/// is quantified, every basis element.
pub fn check_lemma_identities<F: Field>(h: &QuasiTuraevCoalgebra<F>) -> Report {
    let g = h.group();
    let n = h.n();
    let pairs = index_tuples(&[n, n]);
    let ab = ["a", "b"];
    let abi = ["a", "b", "basis"];
    let mut checks: Vec<Check> = Vec::with_capacity(8);

    checks.push(check_cases(STATEMENTS[0].0, STATEMENTS[0].1, &abi, basis_cases(h, |a, _| a), |c| {
        let (a, b, i) = (c[0], c[1], c[2]);
        let x = basis(h.dim(a), i);
        let t = h.apply_delta(g.mul(a, b), g.inv(b), &x)?;
        let lhs = right_i_sandwich(h, a, b, &t)?;
        let rhs = h.tensor_mul(&ir(h, a, b), &pair(a, b, &x, h.unit(b)))?;
        verdict(&lhs, &rhs)
    }));
    checks.push(check_cases(STATEMENTS[1].0, STATEMENTS[1].1, &abi, basis_cases(h, |a, _| a), |c| {
        let (a, b, i) = (c[0], c[1], c[2]);
        let x = basis(h.dim(a), i);
        let t = h.apply_delta(g.mul(a, b), g.inv(b), &x)?;
        let lhs = right_j_sandwich(h, a, b, &t)?;
        let rhs = h.tensor_mul(&pair(a, b, &x, h.unit(b)), &jr(h, a, b))?;
        verdict(&lhs, &rhs)
    }));
    checks.push(check_cases(STATEMENTS[2].0, STATEMENTS[2].1, &abi, basis_cases(h, |_, b| b), |c| {
        let (a, b, i) = (c[0], c[1], c[2]);
        let x = basis(h.dim(b), i);
        let t = h.apply_delta(g.inv(a), g.mul(a, b), &x)?;
        let lhs = left_i_sandwich(h, a, b, &t)?;
        let rhs = h.tensor_mul(&il(h, a, b), &pair(a, b, h.unit(a), &x))?;
        verdict(&lhs, &rhs)
    }));
    checks.push(check_cases(STATEMENTS[3].0, STATEMENTS[3].1, &abi, basis_cases(h, |_, b| b), |c| {
        let (a, b, i) = (c[0], c[1], c[2]);
        let x = basis(h.dim(b), i);
        let t = h.apply_delta(g.inv(a), g.mul(a, b), &x)?;
        let lhs = left_j_sandwich(h, a, b, &t)?;
        let rhs = h.tensor_mul(&jl(h, a, b), &pair(a, b, h.unit(a), &x))?;
        verdict(&lhs, &rhs)
    }));
    checks.push(check_cases(STATEMENTS[4].0, STATEMENTS[4].1, &ab, pairs.clone(), |c| {
        let (a, b) = (c[0], c[1]);
        let lhs = right_i_sandwich(h, a, b, &jr(h, g.mul(a, b), g.inv(b)))?;
        verdict(&lhs, &h.tensor_unit(&[a, b]))
    }));
    checks.push(check_cases(STATEMENTS[5].0, STATEMENTS[5].1, &ab, pairs.clone(), |c| {
        let (a, b) = (c[0], c[1]);
        let lhs = right_j_sandwich(h, a, b, &ir(h, g.mul(a, b), g.inv(b)))?;
        verdict(&lhs, &h.tensor_unit(&[a, b]))
    }));
    checks.push(check_cases(STATEMENTS[6].0, STATEMENTS[6].1, &ab, pairs.clone(), |c| {
        let (a, b) = (c[0], c[1]);
        let lhs = left_i_sandwich(h, a, b, &jl(h, g.inv(a), g.mul(a, b)))?;
        verdict(&lhs, &h.tensor_unit(&[a, b]))
    }));
    checks.push(check_cases(STATEMENTS[7].0, STATEMENTS[7].1, &ab, pairs, |c| {
        let (a, b) = (c[0], c[1]);
        let lhs = left_j_sandwich(h, a, b, &il(h, g.inv(a), g.mul(a, b)))?;
        verdict(&lhs, &h.tensor_unit(&[a, b]))
    }));

    let quasi = !h.has_trivial_phi();
    let mut report = Report::new("lemma");
    for c in checks {
        if quasi && !c.passed() {
            report.push(c.with_note(SUSPECTED_TYPO));
        } else {
            report.push(c);
        }
    }
    report
}
