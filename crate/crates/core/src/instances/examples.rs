//! Ground-truth YD modules attached to the builtin instances.

use crate::error::Result;
use crate::fingroup::FinGroup;
use crate::gqc::QuasiTuraevCoalgebra;
use crate::rep::RepModule;
use crate::scalar::{Cyclo, Field, FieldSpec};
use crate::tensor::LinMap;
use crate::ydmod::{is_yd, search_yd_modules, Ansatz, YDModule};

/// Upper bound on search hits kept per degree.
const PER_DEGREE: usize = 64;

/// `V = k[G]` in degree `1`: `g . x = g x g^{-1}` and `rho_l(x) = x (x) x`.
/// Only meaningful on an instance whose components are all `k[G]`.
pub fn classical_yd_module<F: Field>(h: &QuasiTuraevCoalgebra<F>, g: &FinGroup) -> Result<YDModule<F>> {
    let m = g.order();
    let action = g
        .elements()
        .map(|x| {
            let mut a = LinMap::zeros(m, m);
            for y in g.elements() {
                a.set(g.conj(x, y), y, F::one());
            }
            a
        })
        .collect();
    let module = RepModule::new(h, h.group().identity(), m, action)?;
    let coaction = h
        .group()
        .elements()
        .map(|l| {
            let mut c = LinMap::zeros(m * h.dim(l), m);
            for x in g.elements() {
                c.set(x * m + x, x, F::one());
            }
            c
        })
        .collect();
    YDModule::new(h, module, coaction)
}

/// The unit module, every one-dimensional YD module with monomial coactions
/// whose scalars are roots of unity of `field` (unrestricted coactions when a
/// degree has no monomial ones and the components are at most 2-dimensional), and, for a constant group
/// algebra family over `hopf_group`, the classical module `k[G]`. Names are
/// `unit`, `d<degree>_<k>` and `classical`; duplicates of earlier entries are dropped.
pub fn builtin_yd_examples(
    h: &QuasiTuraevCoalgebra<Cyclo>,
    field: FieldSpec,
    hopf_group: Option<&FinGroup>,
) -> Result<Vec<(String, YDModule<Cyclo>)>> {
    let unit = YDModule::unit(h);
    let mut out = vec![("unit".to_string(), unit)];
    let roots = field.roots_of_unity();
    for a in h.group().elements() {
        let mut found = search_yd_modules(h, a, 1, &roots, Ansatz::Monomial, PER_DEGREE)?;
        let small = h.group().elements().all(|l| h.dim(l) <= 2);
        if found.is_empty() && small {
            found = search_yd_modules(h, a, 1, &roots, Ansatz::Full, PER_DEGREE)?;
        }
        let mut k = 0;
        for m in found {
            if out.iter().any(|(_, x)| *x == m) {
                continue;
            }
            out.push((format!("d{a}_{k}"), m));
            k += 1;
        }
    }
    if let Some(g) = hopf_group {
        let m = classical_yd_module(h, g)?;
        if is_yd(h, &m) && !out.iter().any(|(_, x)| *x == m) {
            out.push(("classical".to_string(), m));
        }
    }
    Ok(out)
}
