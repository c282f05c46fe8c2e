//! Yetter-Drinfeld modules over a quasi-Turaev group coalgebra: validation,
//! tensor product, conjugation and the braiding.

mod classical;
mod hexagon;
mod search;

pub use classical::{classical_yd_verdict, validate_yd_classical};
pub use hexagon::{check_crossing_invariance, check_hexagons, hexagon_left, hexagon_right};
pub use search::{search_yd_modules, Ansatz};

use crate::error::{Error, Result};
use crate::fingroup::Elem;
use crate::gqc::{basis, QuasiTuraevCoalgebra};
use crate::lemma::{il, jr};
use crate::rep::RepModule;
use crate::report::{check_cases, compare_maps, compare_multivecs, index_tuples, render_map, Check, Report, Verdict};
use crate::scalar::Field;
use crate::tensor::{LinMap, MultiVec, SparseCols};

/// A YD module of degree `a`: an `H_a`-module `V` with coactions
/// `rho_l: V -> V (x) H_l`, one per `l` in the group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YDModule<F> {
    module: RepModule<F>,
    /// `coaction[l]` is `(dim * dim H_l) x dim`; row `w * dim H_l + i`.
    coaction: Vec<LinMap<F>>,
    coaction_cols: Vec<SparseCols<F>>,
}

impl<F: Field> YDModule<F> {
    pub fn new(h: &QuasiTuraevCoalgebra<F>, module: RepModule<F>, coaction: Vec<LinMap<F>>) -> Result<Self> {
        if coaction.len() != h.n() {
            return Err(Error::DimensionMismatch(format!("{} coaction maps for a group of order {}", coaction.len(), h.n())));
        }
        let d = module.dim();
        for (l, m) in coaction.iter().enumerate() {
            if m.rows() != d * h.dim(l) || m.cols() != d {
                return Err(Error::DimensionMismatch(format!(
                    "coaction at {l} is {}x{}, expected {}x{d}",
                    m.rows(),
                    m.cols(),
                    d * h.dim(l)
                )));
            }
        }
        let coaction_cols = coaction.iter().map(|m| m.sparse_cols()).collect();
        Ok(YDModule { module, coaction, coaction_cols })
    }

    /// The tensor unit `k` with `rho_l(1) = 1 (x) 1_l`.
    pub fn unit(h: &QuasiTuraevCoalgebra<F>) -> Self {
        let coaction = h.group().elements().map(|l| LinMap::from_columns(h.dim(l), &[h.unit(l).to_vec()])).collect();
        Self::new(h, RepModule::unit(h), coaction).expect("unit YD module")
    }

    pub fn degree(&self) -> Elem {
        self.module.degree()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &RepModule<F> {
        &self.module
    }

    pub fn coaction(&self, l: Elem) -> &LinMap<F> {
        &self.coaction[l]
    }

    pub fn coactions(&self) -> &[LinMap<F>] {
        &self.coaction
    }

    /// Apply `rho_l` to the module leg `k`, producing legs `k` (V) and `k+1` (H_l).
    pub fn coact_leg(&self, h: &QuasiTuraevCoalgebra<F>, v: &MultiVec<F>, k: usize, l: Elem) -> MultiVec<F> {
        let (d, dl) = (self.dim(), h.dim(l));
        v.map_leg(k, d * dl, &self.coaction_cols[l]).split_leg(k, d, dl)
    }

    fn act_leg(&self, v: &MultiVec<F>, alg: usize, target: usize) -> MultiVec<F> {
        self.module.act_leg(v, alg, target)
    }
}

pub(super) fn e<F: Field>(d: usize, i: usize) -> MultiVec<F> {
    MultiVec::vector(basis(d, i))
}

/// Both sides of the twisted coassociativity condition at `(l1, l2)` on `e_v`,
/// as tensors in `V (x) H_l1 (x) H_l2`.
pub fn coassociativity_sides<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    m: &YDModule<F>,
    l1: Elem,
    l2: Elem,
    v: usize,
) -> (MultiVec<F>, MultiVec<F>) {
    let g = h.group();
    let a = m.degree();
    // (y^2 . v_(0))_(0) (x) (y^2 . v_(0))_(1,l1) y^1 (x) y^3 v_(1,l2), y = Phi^{-1}_{l1,a,l2}
    let mut x = m.coact_leg(h, &e(m.dim(), v), 0, l2);
    x = h.insert(&x, h.phi_inv(l1, a, l2));
    x = m.act_leg(&x, 3, 0);
    x = h.mul_legs(&x, 3, 1, 1, l2);
    x = m.coact_leg(h, &x, 0, l1);
    let lhs = h.mul_legs(&x, 1, 3, 1, l1);

    // Phi^{-1}_{a,l1,l2} . [(z^3.v)_(0) (x) (z^3.v)_(1)(1) z^1 (x) (z^3.v)_(1)(2) z^2], z = Phi^{-1}_{l1,l2,a}
    let mut y = h.insert(&e(m.dim(), v), h.phi_inv(l1, l2, a));
    y = m.act_leg(&y, 3, 0);
    y = m.coact_leg(h, &y, 0, g.mul(l1, l2));
    y = h.delta_leg(&y, 1, l1, l2);
    y = h.mul_legs(&y, 1, 3, 1, l1);
    y = h.mul_legs(&y, 2, 3, 2, l2);
    y = h.insert(&y, h.phi_inv(a, l1, l2));
    y = m.act_leg(&y, 3, 0);
    y = h.mul_legs(&y, 3, 1, 1, l1);
    let rhs = h.mul_legs(&y, 3, 2, 2, l2);
    (lhs, rhs)
}

/// Both sides of the crossed compatibility condition for `e_i` in `H_{ab}`
/// and `e_v`, as tensors in `V (x) H_b`.
pub fn compatibility_sides<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    m: &YDModule<F>,
    b: Elem,
    i: usize,
    v: usize,
) -> (MultiVec<F>, MultiVec<F>) {
    let g = h.group();
    let a = m.degree();
    let ab = g.mul(a, b);
    let hv = e::<F>(h.dim(ab), i).outer(&e(m.dim(), v));
    // h_(1,a) . v_(0) (x) h_(2,b) v_(1,b)
    let mut x = h.delta_leg(&hv, 0, a, b);
    x = m.coact_leg(h, &x, 2, b);
    x = m.act_leg(&x, 0, 2);
    let lhs = h.mul_legs(&x, 0, 2, 2, b);
    // (h_(2,a) . v)_(0) (x) (h_(2,a) . v)_(1,b) phi_{a^{-1}}(h_(1,aba^{-1}))
    let aba = g.conj(a, b);
    let mut y = h.delta_leg(&hv, 0, aba, a);
    y = m.act_leg(&y, 1, 2);
    y = h.crossing_leg(&y, 0, g.inv(a), aba);
    y = m.coact_leg(h, &y, 1, b);
    let rhs = h.mul_legs(&y, 2, 0, 2, b);
    (lhs, rhs)
}

pub(super) fn counit_side<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, v: usize) -> MultiVec<F> {
    let x = m.coact_leg(h, &e(m.dim(), v), 0, h.group().identity());
    h.counit_leg(&x, 1)
}

fn representation_cases<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>) -> Vec<Vec<usize>> {
    let d = h.dim(m.degree());
    let mut cases = vec![vec![d, 0]];
    cases.extend(index_tuples(&[d, d]));
    cases
}

/// Representation axiom at a case: `[d, 0]` is the unit law, `[i, j]` the
/// product `e_i e_j`.
fn representation_verdict<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &RepModule<F>, c: &[usize]) -> Verdict {
    let comp = h.component(m.degree());
    if c[0] == comp.dim() {
        return Ok(compare_maps(&m.act(comp.unit()), &LinMap::identity(m.dim())));
    }
    let (i, j) = (c[0], c[1]);
    let lhs = &m.action()[i] * &m.action()[j];
    let rhs = m.act(&comp.mul(&basis(comp.dim(), i), &basis(comp.dim(), j)));
    Ok(compare_maps(&lhs, &rhs))
}

/// The four conditions: representation, counitarity, twisted coassociativity
/// and crossed compatibility.
pub fn validate_yd<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>) -> Report {
    let mut r = Report::new("yd");
    let n = h.n();
    let d = m.dim();
    r.push(check_cases(
        "yd.representation",
        "V is a unital H_a-module (unit case first, then basis pairs)",
        &["i", "j"],
        representation_cases(h, m),
        |c| representation_verdict(h, &m.module, c),
    ));
    r.push(check_cases("yd.counit", "(id (x) epsilon) rho_{V,1} = id", &["v"], index_tuples(&[d]), |c| {
        Ok(compare_multivecs(&counit_side(h, m, c[0]), &e(d, c[0])))
    }));
    r.push(check_cases(
        "yd.coassociativity",
        "(y^2.v_(0))_(0) (x) (y^2.v_(0))_(1,l1) y^1 (x) y^3 v_(1,l2) = Phi^{-1}_{a,l1,l2} [(y^3.v)_(0) (x) (y^3.v)_(1)(1,l1) y^1 (x) (y^3.v)_(1)(2,l2) y^2]",
        &["l1", "l2", "v"],
        index_tuples(&[n, n, d]),
        |c| {
            let (lhs, rhs) = coassociativity_sides(h, m, c[0], c[1], c[2]);
            Ok(compare_multivecs(&lhs, &rhs))
        },
    ));
    let mut cases = Vec::new();
    for b in 0..n {
        for i in 0..h.dim(h.group().mul(m.degree(), b)) {
            for v in 0..d {
                cases.push(vec![b, i, v]);
            }
        }
    }
    r.push(check_cases(
        "yd.compatibility",
        "h_(1,a).v_(0) (x) h_(2,b) v_(1,b) = (h_(2,a).v)_(0) (x) (h_(2,a).v)_(1,b) phi_{a^-1}(h_(1,aba^-1))",
        &["b", "h", "v"],
        cases,
        |c| {
            let (lhs, rhs) = compatibility_sides(h, m, c[0], c[1], c[2]);
            Ok(compare_multivecs(&lhs, &rhs))
        },
    ));
    r
}

/// Sequential short-circuiting form of [`validate_yd`].
pub fn is_yd<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>) -> bool {
    let n = h.n();
    let d = m.dim();
    if m.module.representation_defect(h).is_some() {
        return false;
    }
    if (0..d).any(|v| counit_side(h, m, v) != e(d, v)) {
        return false;
    }
    for l1 in 0..n {
        for l2 in 0..n {
            for v in 0..d {
                let (lhs, rhs) = coassociativity_sides(h, m, l1, l2, v);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    for b in 0..n {
        for i in 0..h.dim(h.group().mul(m.degree(), b)) {
            for v in 0..d {
                let (lhs, rhs) = compatibility_sides(h, m, b, i, v);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn multivec_to_coaction<F: Field>(cols: Vec<MultiVec<F>>, rows: usize) -> LinMap<F> {
    let cols: Vec<Vec<F>> = cols.into_iter().map(|c| c.into_data()).collect();
    LinMap::from_columns(rows, &cols)
}

/// `V (x) W` of degree `ab`: the action goes through `Delta_{a,b}` and the
/// coaction is assembled from three copies of `Phi^{\pm 1}` and the crossing.
pub fn yd_tensor<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, n: &YDModule<F>) -> YDModule<F> {
    let g = h.group();
    let (a, b) = (m.degree(), n.degree());
    let (dv, dw) = (m.dim(), n.dim());
    let module = RepModule::tensor(h, &m.module, &n.module);
    let coaction = g
        .elements()
        .map(|l| {
            let blb = g.conj(b, l);
            let cols: Vec<MultiVec<F>> = index_tuples(&[dv, dw])
                .into_iter()
                .map(|c| {
                    // legs [V, W]; y = Phi^{-1}_{l,a,b}
                    let mut x = e::<F>(dv, c[0]).outer(&e(dw, c[1]));
                    x = h.insert(&x, h.phi_inv(l, a, b));
                    x = m.act_leg(&x, 3, 0);
                    // [V, W, y1, y3]; Y = Phi_{a,l,b}
                    x = h.insert(&x, h.phi(a, l, b));
                    x = n.act_leg(&x, 3, 1);
                    x = n.act_leg(&x, 5, 1);
                    // [V, W, y1, Y1, Y2]
                    x = m.coact_leg(h, &x, 0, blb);
                    x = h.crossing_leg(&x, 1, g.inv(b), blb);
                    // [V, P, W, y1, Y1, Y2]
                    x = n.coact_leg(h, &x, 2, l);
                    // [V, P, W, Q, y1, Y1, Y2]
                    x = h.mul_legs(&x, 3, 6, 3, l);
                    x = h.mul_legs(&x, 3, 1, 3, l);
                    // [V, W, Q Y2 P, y1, Y1]
                    x = h.mul_legs(&x, 2, 3, 2, l);
                    x = m.act_leg(&x, 3, 0);
                    // [V, W, L]; t = Phi^{-1}_{a,b,l}
                    x = h.insert(&x, h.phi_inv(a, b, l));
                    x = m.act_leg(&x, 3, 0);
                    x = n.act_leg(&x, 3, 1);
                    x = h.mul_legs(&x, 3, 2, 2, l);
                    x.reshape(vec![dv * dw, h.dim(l)])
                })
                .collect();
            multivec_to_coaction(cols, dv * dw * h.dim(l))
        })
        .collect();
    YDModule::new(h, module, coaction).expect("tensor YD module")
}

/// `^b V` of degree `b a b^{-1}`: `rho_l = (id (x) phi_b) rho_{b^{-1} l b}`.
pub fn yd_conjugate<F: Field>(h: &QuasiTuraevCoalgebra<F>, b: Elem, m: &YDModule<F>) -> YDModule<F> {
    let g = h.group();
    let module = RepModule::conjugate(h, b, &m.module);
    let bi = g.inv(b);
    let coaction = g
        .elements()
        .map(|l| {
            let src = g.conj(bi, l);
            LinMap::identity(m.dim()).kron(h.crossing(b, src)).compose(&m.coaction[src]).expect("shapes")
        })
        .collect();
    YDModule::new(h, module, coaction).expect("conjugate YD module")
}

/// The element `T(v)` in `V (x) H_l` with `c_{V,X}(v (x) x) = ^a[T_2 . x] (x) T_1`.
fn braiding_tensor<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, l: Elem, v: usize) -> MultiVec<F> {
    let g = h.group();
    let a = m.degree();
    let li = g.inv(l);
    // [V, I~1, I~2] with I~ = I^L_{l^{-1},a}
    let mut x = h.insert(&e(m.dim(), v), &il(h, li, a));
    x = m.act_leg(&x, 2, 0);
    x = m.coact_leg(h, &x, 0, li);
    x = h.mul_legs(&x, 1, 2, 1, li);
    // [V, A]; y = Phi^{-1}_{l,a,l^{-1}}
    x = h.insert(&x, h.phi_inv(l, a, li));
    x = h.mul_legs(&x, 4, 1, 1, li);
    x = m.act_leg(&x, 3, 0);
    // [V, B, y1]; J = J^R_{la,l^{-1}}
    x = h.insert(&x, &jr(h, g.mul(l, a), li));
    x = h.mul_legs(&x, 4, 1, 1, li);
    x = h.antipode_leg(&x, 1, li);
    x = h.mul_legs(&x, 2, 1, 1, l);
    // [V, C, J1]
    x = h.delta_leg(&x, 2, l, a);
    x = h.mul_legs(&x, 2, 1, 1, l);
    m.act_leg(&x, 2, 0)
}

/// Matrix of `c_{V,X}: V (x) X -> ^a X (x) V` for a YD module `V` of degree
/// `a` and any module `X`. Columns are indexed `v * dim X + x`, rows
/// `x' * dim V + w`.
pub fn braiding<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, x: &RepModule<F>) -> LinMap<F> {
    let (dv, dx) = (m.dim(), x.dim());
    let mut c: LinMap<F> = LinMap::zeros(dx * dv, dv * dx);
    for v in 0..dv {
        let t = braiding_tensor(h, m, x.degree(), v);
        t.for_each_nonzero(|idx, coef| {
            let (w, a) = (idx[0], idx[1]);
            let act = &x.action()[a];
            for xi in 0..dx {
                for xo in 0..dx {
                    let s = act.get(xo, xi);
                    if !s.is_zero() {
                        c.entry_mut(xo * dv + w, v * dx + xi).acc_mul(coef, s);
                    }
                }
            }
        });
    }
    c
}

/// Matrix of `c^_{V,X}(^a x (x) v) = v_(0) (x) v_(1,l) . x`, the candidate inverse.
pub fn braiding_hat<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, x: &RepModule<F>) -> LinMap<F> {
    let (dv, dx) = (m.dim(), x.dim());
    let l = x.degree();
    let dl = h.dim(l);
    let rho = &m.coaction[l];
    let mut c: LinMap<F> = LinMap::zeros(dv * dx, dx * dv);
    for v in 0..dv {
        for w in 0..dv {
            for a in 0..dl {
                let coef = rho.get(w * dl + a, v);
                if coef.is_zero() {
                    continue;
                }
                let act = &x.action()[a];
                for xi in 0..dx {
                    for xo in 0..dx {
                        let s = act.get(xo, xi);
                        if !s.is_zero() {
                            c.entry_mut(w * dx + xo, xi * dv + v).acc_mul(coef, s);
                        }
                    }
                }
            }
        }
    }
    c
}

/// The braiding together with its inverse `c^`, after checking both
/// composites are identities.
pub fn yd_braiding<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, n: &YDModule<F>) -> Result<(LinMap<F>, LinMap<F>)> {
    let c = braiding(h, m, n.module());
    let hat = braiding_hat(h, m, n.module());
    let left = hat.compose(&c)?;
    if !left.is_identity() {
        return Err(Error::BraidingNotInvertible(format!("c^ o c = {}", render_map(&left))));
    }
    let right = c.compose(&hat)?;
    if !right.is_identity() {
        return Err(Error::BraidingNotInvertible(format!("c o c^ = {}", render_map(&right))));
    }
    Ok((c, hat))
}

/// Both composites `c^ o c` and `c o c^` for a YD module against a module,
/// reported separately.
pub fn check_braiding_inverse<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, x: &RepModule<F>) -> Vec<Check> {
    let c = braiding(h, m, x);
    let hat = braiding_hat(h, m, x);
    let d = m.dim() * x.dim();
    let id = LinMap::identity(d);
    let one = |id_: &str, st: &str, f: &(dyn Fn() -> Result<LinMap<F>> + Sync)| {
        check_cases(id_, st, &[], vec![vec![]], |_| Ok(compare_maps(&f()?, &id)))
    };
    vec![
        one("braiding.hat_after_c", "c^_{V,X} o c_{V,X} = id_{V (x) X}", &|| hat.compose(&c)),
        one("braiding.c_after_hat", "c_{V,X} o c^_{V,X} = id_{^aX (x) V}", &|| c.compose(&hat)),
    ]
}

/// `f: M -> N` is `H_a`-linear and intertwines every coaction.
pub fn check_yd_morphism<F: Field>(h: &QuasiTuraevCoalgebra<F>, f: &LinMap<F>, m: &YDModule<F>, n: &YDModule<F>) -> Report {
    let mut r = Report::new("yd_morphism");
    if m.degree() != n.degree() || f.rows() != n.dim() || f.cols() != m.dim() {
        let mut c = Check::skipped(
            "yd_morphism.shape",
            "f: V -> W between modules of one degree",
            &format!("degrees {} and {}, map {}x{}", m.degree(), n.degree(), f.rows(), f.cols()),
        );
        c.status = crate::report::Status::Fail;
        r.push(c);
        return r;
    }
    let da = h.dim(m.degree());
    r.push(check_cases("yd_morphism.linear", "f(e_i . v) = e_i . f(v)", &["i"], index_tuples(&[da]), |c| {
        let lhs = f.compose(&m.module.action()[c[0]])?;
        let rhs = n.module.action()[c[0]].compose(f)?;
        Ok(compare_maps(&lhs, &rhs))
    }));
    r.push(check_cases("yd_morphism.colinear", "(f (x) id) rho_{V,l} = rho_{W,l} f", &["l"], index_tuples(&[h.n()]), |c| {
        let l = c[0];
        let lhs = f.kron(&LinMap::identity(h.dim(l))).compose(&m.coaction[l])?;
        let rhs = n.coaction[l].compose(f)?;
        Ok(compare_maps(&lhs, &rhs))
    }));
    r
}



#[cfg(test)]
mod tests;
