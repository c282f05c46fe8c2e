//! The two hexagon identities and crossing invariance for the braiding of
//! YD modules, with associators acting through `Phi`.

use crate::error::Result;
use crate::gqc::QuasiTuraevCoalgebra;
use crate::rep::{associator_action, associator_inverse_action, RepModule};
use crate::report::{check_cases, compare_maps, index_tuples, Report};
use crate::scalar::Field;
use crate::tensor::LinMap;

use super::{braiding, yd_conjugate, yd_tensor, YDModule};

fn id<F: Field>(m: &RepModule<F>) -> LinMap<F> {
    LinMap::identity(m.dim())
}

/// Both sides of
/// `c_{U,V(x)W} = a^{-1}_{^UV,^UW,U} (^UV (x) c_{U,W}) a_{^UV,U,W} (c_{U,V} (x) W) a^{-1}_{U,V,W}`.
pub fn hexagon_left<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    u: &YDModule<F>,
    v: &RepModule<F>,
    w: &RepModule<F>,
) -> Result<(LinMap<F>, LinMap<F>)> {
    let a = u.degree();
    let vw = RepModule::tensor(h, v, w);
    let lhs = braiding(h, u, &vw);
    let uv = RepModule::conjugate(h, a, v);
    let uw = RepModule::conjugate(h, a, w);
    let um = u.module();
    let mut rhs = associator_inverse_action(h, um, v, w);
    rhs = braiding(h, u, v).kron(&id(w)).compose(&rhs)?;
    rhs = associator_action(h, &uv, um, w).compose(&rhs)?;
    rhs = id(&uv).kron(&braiding(h, u, w)).compose(&rhs)?;
    rhs = associator_inverse_action(h, &uv, &uw, um).compose(&rhs)?;
    Ok((lhs, rhs))
}

/// Both sides of
/// `c_{U(x)V,W} = a_{^{UV}W,U,V} (c_{U,^VW} (x) V) a^{-1}_{U,^VW,V} (U (x) c_{V,W}) a_{U,V,W}`.
pub fn hexagon_right<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    u: &YDModule<F>,
    v: &YDModule<F>,
    w: &RepModule<F>,
) -> Result<(LinMap<F>, LinMap<F>)> {
    let g = h.group();
    let (a, b) = (u.degree(), v.degree());
    let uv = yd_tensor(h, u, v);
    let lhs = braiding(h, &uv, w);
    let vw = RepModule::conjugate(h, b, w);
    let uvw = RepModule::conjugate(h, g.mul(a, b), w);
    let (um, vm) = (u.module(), v.module());
    let mut rhs = associator_action(h, um, vm, w);
    rhs = id(um).kron(&braiding(h, v, w)).compose(&rhs)?;
    rhs = associator_inverse_action(h, um, &vw, vm).compose(&rhs)?;
    rhs = braiding(h, u, &vw).kron(&id(vm)).compose(&rhs)?;
    rhs = associator_action(h, &uvw, um, vm).compose(&rhs)?;
    Ok((lhs, rhs))
}

/// Both hexagons on every ordered triple of the given modules.
pub fn check_hexagons<F: Field>(h: &QuasiTuraevCoalgebra<F>, modules: &[YDModule<F>]) -> Report {
    let k = modules.len();
    let mut r = Report::new("hexagon");
    r.push(check_cases(
        "hexagon.left",
        "c_{U,V(x)W} = a^-1 (^UV (x) c_{U,W}) a (c_{U,V} (x) W) a^-1",
        &["U", "V", "W"],
        index_tuples(&[k, k, k]),
        |c| {
            let (lhs, rhs) = hexagon_left(h, &modules[c[0]], modules[c[1]].module(), modules[c[2]].module())?;
            Ok(compare_maps(&lhs, &rhs))
        },
    ));
    r.push(check_cases(
        "hexagon.right",
        "c_{U(x)V,W} = a (c_{U,^VW} (x) V) a^-1 (U (x) c_{V,W}) a",
        &["U", "V", "W"],
        index_tuples(&[k, k, k]),
        |c| {
            let (lhs, rhs) = hexagon_right(h, &modules[c[0]], &modules[c[1]], modules[c[2]].module())?;
            Ok(compare_maps(&lhs, &rhs))
        },
    ));
    r
}

/// `c_{^aU,^aV}` has the same matrix as `c_{U,V}` for every pair and every `a`.
pub fn check_crossing_invariance<F: Field>(h: &QuasiTuraevCoalgebra<F>, modules: &[YDModule<F>]) -> Report {
    let k = modules.len();
    let mut r = Report::new("crossing_invariance");
    r.push(check_cases(
        "braiding.crossing_invariance",
        "phi_a(c_{U,V}) = c_{^aU,^aV}",
        &["U", "V", "a"],
        index_tuples(&[k, k, h.n()]),
        |c| {
            let (u, v, a) = (&modules[c[0]], &modules[c[1]], c[2]);
            let plain = braiding(h, u, v.module());
            let moved = braiding(h, &yd_conjugate(h, a, u), yd_conjugate(h, a, v).module());
            Ok(compare_maps(&moved, &plain))
        },
    ));
    r
}
