//! Exhaustive search for small YD modules over a finite set of scalars.
//!
//! Actions are enumerated basis element by basis element, pruning as soon as
//! a product of already-assigned elements fails; coactions are assigned one
//! group element at a time and each axiom instance is checked as soon as all
//! the coactions it mentions are fixed.

use crate::error::{Error, Result};
use crate::fingroup::Elem;
use crate::gqc::QuasiTuraevCoalgebra;
use crate::rep::RepModule;
use crate::scalar::Field;
use crate::tensor::LinMap;

use super::{coassociativity_sides, compatibility_sides, counit_side, e, YDModule};

/// Shape of the candidate coaction matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ansatz {
    /// Each column of `rho_l` has exactly one nonzero entry.
    Monomial,
    /// Every entry ranges over the scalar set (and zero).
    Full,
}

fn all_matrices<F: Field>(rows: usize, cols: usize, values: &[F]) -> Vec<LinMap<F>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rows * cols {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for prefix in &out {
            for v in values {
                let mut p = prefix.clone();
                p.push(v.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(|d| LinMap::from_rows(rows, cols, d).expect("shape")).collect()
}

fn monomial_matrices<F: Field>(rows: usize, cols: usize, nonzero: &[F]) -> Vec<LinMap<F>> {
    let mut out = vec![LinMap::zeros(rows, cols)];
    for c in 0..cols {
        let mut next = Vec::with_capacity(out.len() * rows * nonzero.len());
        for m in &out {
            for r in 0..rows {
                for v in nonzero {
                    let mut m2 = m.clone();
                    m2.set(r, c, v.clone());
                    next.push(m2);
                }
            }
        }
        out = next;
    }
    out
}

fn dedup<F: Field>(xs: &[F]) -> Vec<F> {
    let mut out: Vec<F> = Vec::new();
    for x in xs {
        if !out.contains(x) {
            out.push(x.clone());
        }
    }
    out
}

/// All `H_a`-module structures on `k^dim` with matrix entries in `values`.
fn search_actions<F: Field>(h: &QuasiTuraevCoalgebra<F>, a: Elem, dim: usize, values: &[F]) -> Vec<RepModule<F>> {
    let comp = h.component(a);
    let da = comp.dim();
    let cands = all_matrices(dim, dim, values);
    let mut found = Vec::new();
    let mut stack: Vec<LinMap<F>> = Vec::new();
    fn consistent<F: Field>(comp: &crate::gqc::AlgebraComponent<F>, assigned: &[LinMap<F>], dim: usize) -> bool {
        let k = assigned.len();
        let i = k - 1;
        for j in 0..k {
            for (x, y) in [(i, j), (j, i)] {
                let prod = comp.product(x, y);
                if prod.iter().any(|(t, _)| *t >= k) {
                    continue;
                }
                let mut rhs = LinMap::zeros(dim, dim);
                for (t, c) in prod {
                    rhs = rhs.add(&assigned[*t].scale(c)).expect("shape");
                }
                if &assigned[x] * &assigned[y] != rhs {
                    return false;
                }
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn go<F: Field>(
        h: &QuasiTuraevCoalgebra<F>,
        a: Elem,
        comp: &crate::gqc::AlgebraComponent<F>,
        da: usize,
        dim: usize,
        cands: &[LinMap<F>],
        stack: &mut Vec<LinMap<F>>,
        found: &mut Vec<RepModule<F>>,
    ) {
        if stack.len() == da {
            if let Ok(m) = RepModule::new(h, a, dim, stack.clone()) {
                if m.representation_defect(h).is_none() {
                    found.push(m);
                }
            }
            return;
        }
        for c in cands {
            stack.push(c.clone());
            if consistent(comp, stack, dim) {
                go(h, a, comp, da, dim, cands, stack, found);
            }
            stack.pop();
        }
    }
    go(h, a, comp, da, dim, &cands, &mut stack, &mut found);
    found
}

/// Every YD module of degree `a` and dimension `dim <= 2` whose action and
/// coaction matrices have entries in `scalars` (plus zero), in enumeration
/// order. Stops after `limit` modules.
pub fn search_yd_modules<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    a: Elem,
    dim: usize,
    scalars: &[F],
    ansatz: Ansatz,
    limit: usize,
) -> Result<Vec<YDModule<F>>> {
    if dim == 0 || dim > 2 {
        return Err(Error::Param(format!("search supports dimensions 1 and 2, got {dim}")));
    }
    h.group().checked(a)?;
    let nonzero: Vec<F> = dedup(&scalars.iter().filter(|x| !x.is_zero()).cloned().collect::<Vec<_>>());
    let mut values = vec![F::zero()];
    values.extend(nonzero.iter().cloned());
    let n = h.n();
    let coaction_cands: Vec<Vec<LinMap<F>>> = (0..n)
        .map(|l| match ansatz {
            Ansatz::Monomial => monomial_matrices(dim * h.dim(l), dim, &nonzero),
            Ansatz::Full => all_matrices(dim * h.dim(l), dim, &values),
        })
        .collect();
    let mut out = Vec::new();
    for module in search_actions(h, a, dim, &values) {
        let mut chosen: Vec<LinMap<F>> = (0..n).map(|l| LinMap::zeros(dim * h.dim(l), dim)).collect();
        assign(h, &module, &coaction_cands, 0, &mut chosen, &mut out, limit);
        if out.len() >= limit {
            out.truncate(limit);
            break;
        }
    }
    Ok(out)
}

/// Whether every axiom instance involving only coactions at `0..=l` holds.
fn partial_ok<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, l: Elem) -> bool {
    let g = h.group();
    let d = m.dim();
    if l == g.identity() && (0..d).any(|v| counit_side(h, m, v) != e(d, v)) {
        return false;
    }
    for l1 in 0..=l {
        for l2 in 0..=l {
            if l1.max(l2) != l || g.mul(l1, l2) > l {
                continue;
            }
            for v in 0..d {
                let (x, y) = coassociativity_sides(h, m, l1, l2, v);
                if x != y {
                    return false;
                }
            }
        }
    }
    // pairs where the product is the newly assigned element
    for l1 in 0..l {
        for l2 in 0..l {
            if g.mul(l1, l2) != l {
                continue;
            }
            for v in 0..d {
                let (x, y) = coassociativity_sides(h, m, l1, l2, v);
                if x != y {
                    return false;
                }
            }
        }
    }
    for i in 0..h.dim(g.mul(m.degree(), l)) {
        for v in 0..d {
            let (x, y) = compatibility_sides(h, m, l, i, v);
            if x != y {
                return false;
            }
        }
    }
    true
}

fn assign<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    module: &RepModule<F>,
    cands: &[Vec<LinMap<F>>],
    l: Elem,
    chosen: &mut Vec<LinMap<F>>,
    out: &mut Vec<YDModule<F>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if l == cands.len() {
        out.push(YDModule::new(h, module.clone(), chosen.clone()).expect("shapes"));
        return;
    }
    for c in &cands[l] {
        chosen[l] = c.clone();
        let m = YDModule::new(h, module.clone(), chosen.clone()).expect("shapes");
        if partial_ok(h, &m, l) {
            assign(h, module, cands, l + 1, chosen, out, limit);
            if out.len() >= limit {
                return;
            }
        }
    }
    chosen[l] = LinMap::zeros(chosen[l].rows(), chosen[l].cols());
}
