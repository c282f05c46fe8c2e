//! The center of `Rep(H)`: objects are a module together with a
//! half-braiding, stored on a finite family of test modules, and the two
//! functors between the center and YD modules.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fingroup::Elem;
use crate::gqc::{basis, QuasiTuraevCoalgebra};
use crate::rep::{associator_action, associator_inverse_action, test_family, ModuleDesc, RepModule};
use crate::report::{check_cases, compare_maps, index_tuples, Report};
use crate::scalar::Field;
use crate::tensor::LinMap;
use crate::ydmod::{braiding, YDModule};

/// A module `U` of degree `a` with the components `c_{U,X}: U (x) X -> ^aX (x) U`
/// for every `X` in its family. Matrix layout as for [`braiding`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterObject<F> {
    pub carrier: RepModule<F>,
    pub components: BTreeMap<ModuleDesc, LinMap<F>>,
}

fn id<F: Field>(m: &RepModule<F>) -> LinMap<F> {
    LinMap::identity(m.dim())
}

/// `U (x) X -> X (x) U`, `u (x) x -> x (x) u`.
fn flip<F: Field>(du: usize, dx: usize) -> LinMap<F> {
    let mut p = LinMap::zeros(dx * du, du * dx);
    for u in 0..du {
        for x in 0..dx {
            p.set(x * du + u, u * dx + x, F::one());
        }
    }
    p
}

/// `phi_b` on the carrier of a product of regular modules, factor by factor.
fn crossing_on_factors<F: Field>(h: &QuasiTuraevCoalgebra<F>, b: Elem, factors: &[Elem]) -> LinMap<F> {
    factors.iter().fold(LinMap::identity(1), |acc, &f| acc.kron(h.crossing(b, f)))
}

impl<F: Field> CenterObject<F> {
    pub fn new(carrier: RepModule<F>, components: BTreeMap<ModuleDesc, LinMap<F>>) -> Self {
        CenterObject { carrier, components }
    }

    /// The unit object `(k, id)`.
    pub fn unit(h: &QuasiTuraevCoalgebra<F>, family: &[ModuleDesc]) -> Self {
        let components = family.iter().map(|d| (d.clone(), LinMap::identity(d.build(h).dim()))).collect();
        CenterObject { carrier: RepModule::unit(h), components }
    }

    /// The plain flip `u (x) x -> x (x) u` on every family member. A genuine
    /// half-braiding only when the associator and the crossing are trivial
    /// enough; used as a negative control.
    pub fn flip(h: &QuasiTuraevCoalgebra<F>, carrier: RepModule<F>, family: &[ModuleDesc]) -> Self {
        let du = carrier.dim();
        let components = family.iter().map(|d| (d.clone(), flip(du, d.build(h).dim()))).collect();
        CenterObject { carrier, components }
    }

    pub fn degree(&self) -> Elem {
        self.carrier.degree()
    }

    pub fn family(&self) -> Vec<ModuleDesc> {
        self.components.keys().cloned().collect()
    }

    /// The component at `desc`. A conjugated product absent from the family
    /// is transported from the plain product of the conjugated factors along
    /// `phi_b (x) .. (x) phi_b`, which is a module isomorphism between them.
    pub fn component(&self, h: &QuasiTuraevCoalgebra<F>, desc: &ModuleDesc) -> Result<LinMap<F>> {
        if let Some(c) = self.components.get(desc) {
            return Ok(c.clone());
        }
        let missing = || match desc.as_regular() {
            Some(l) => Error::MissingComponent(l),
            None => Error::MissingModule(desc.to_string()),
        };
        let b = desc.conj.ok_or_else(missing)?;
        let g = h.group();
        let plain = ModuleDesc::plain(desc.factors.iter().map(|&f| g.conj(b, f)).collect());
        let c = self.components.get(&plain).ok_or_else(missing)?;
        let f = crossing_on_factors(h, b, &desc.factors);
        let f_inv = crossing_on_factors(h, g.inv(b), &plain.factors);
        let u = id(&self.carrier);
        f_inv.kron(&u).compose(c)?.compose(&u.kron(&f))
    }
}

/// The half-braiding of a YD module on every member of `family`.
pub fn f2<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, family: &[ModuleDesc]) -> CenterObject<F> {
    let components = family.iter().map(|d| (d.clone(), braiding(h, m, &d.build(h)))).collect();
    CenterObject { carrier: m.module().clone(), components }
}

/// `rho_l(v) = c^{-1}_{U,H_l}(1_l (x) v)`, read off the regular components.
pub fn f1<F: Field>(h: &QuasiTuraevCoalgebra<F>, z: &CenterObject<F>) -> Result<YDModule<F>> {
    let d = z.carrier.dim();
    let mut coaction = Vec::with_capacity(h.n());
    for l in h.group().elements() {
        let c = z.components.get(&ModuleDesc::regular(l)).ok_or(Error::MissingComponent(l))?;
        let inv = c.invert().map_err(|e| Error::BraidingNotInvertible(format!("component at H_{l}: {e}")))?;
        let dl = h.dim(l);
        let unit = h.unit(l);
        let cols = (0..d)
            .map(|v| {
                let mut x = vec![F::zero(); dl * d];
                for (i, u) in unit.iter().enumerate() {
                    x[i * d + v] = u.clone();
                }
                inv.apply(&x)
            })
            .collect::<Result<Vec<_>>>()?;
        coaction.push(LinMap::from_columns(d * dl, &cols));
    }
    YDModule::new(h, z.carrier.clone(), coaction)
}

/// `c_{U(x)V,W} = a_{^{UV}W,U,V} (c_{U,^VW} (x) V) a^{-1}_{U,^VW,V} (U (x) c'_{V,W}) a_{U,V,W}`.
fn tensor_component<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    z1: &CenterObject<F>,
    z2: &CenterObject<F>,
    w_desc: &ModuleDesc,
) -> Result<LinMap<F>> {
    let g = h.group();
    let (u, v) = (&z1.carrier, &z2.carrier);
    let (a, b) = (u.degree(), v.degree());
    let w = w_desc.build(h);
    let vw = RepModule::conjugate(h, b, &w);
    let uvw = RepModule::conjugate(h, g.mul(a, b), &w);
    let c_u = z1.component(h, &w_desc.conjugated(g, b))?;
    let c_v = z2.component(h, w_desc)?;
    let mut m = associator_action(h, u, v, &w);
    m = id(u).kron(&c_v).compose(&m)?;
    m = associator_inverse_action(h, u, &vw, v).compose(&m)?;
    m = c_u.kron(&id(v)).compose(&m)?;
    associator_action(h, &uvw, u, v).compose(&m)
}

/// The tensor product in the center, on the family of `z2`.
pub fn center_tensor<F: Field>(h: &QuasiTuraevCoalgebra<F>, z1: &CenterObject<F>, z2: &CenterObject<F>) -> Result<CenterObject<F>> {
    let carrier = RepModule::tensor(h, &z1.carrier, &z2.carrier);
    let mut components = BTreeMap::new();
    for desc in z2.components.keys().filter(|d| d.conj.is_none()) {
        components.insert(desc.clone(), tensor_component(h, z1, z2, desc)?);
    }
    Ok(CenterObject { carrier, components })
}

/// `^bZ`: carrier `^bU`, and the component at `X` is the matrix of `c_{U,^{b^{-1}}X}`.
pub fn center_conjugate<F: Field>(h: &QuasiTuraevCoalgebra<F>, b: Elem, z: &CenterObject<F>) -> Result<CenterObject<F>> {
    let g = h.group();
    let bi = g.inv(b);
    let carrier = RepModule::conjugate(h, b, &z.carrier);
    let mut components = BTreeMap::new();
    for desc in z.components.keys().filter(|d| d.conj.is_none()) {
        components.insert(desc.clone(), z.component(h, &desc.conjugated(g, bi))?);
    }
    Ok(CenterObject { carrier, components })
}

/// `f1 o f2 = id` on `m`, and `f2 o f1 = id` on `z` (by default `f2(m)`)
/// over the family of `z`.
pub fn roundtrip_check<F: Field>(h: &QuasiTuraevCoalgebra<F>, m: &YDModule<F>, z: Option<&CenterObject<F>>, family: &[ModuleDesc]) -> Report {
    let mut r = Report::new("center_roundtrip");
    let z_m = f2(h, m, family);
    let back = f1(h, &z_m);
    r.push(check_cases("center.f1_f2", "f1(f2(M)) = M, coaction at l", &["l"], index_tuples(&[h.n()]), |c| {
        let back = back.as_ref().map_err(|e| Error::BraidingNotInvertible(e.to_string()))?;
        Ok(compare_maps(back.coaction(c[0]), m.coaction(c[0])))
    }));
    let z = z.unwrap_or(&z_m);
    let descs = z.family();
    let rebuilt = f1(h, z).map(|y| f2(h, &y, &descs));
    r.push(check_cases("center.f2_f1", "f2(f1(Z)) = Z on the test family", &["X"], index_tuples(&[descs.len()]), |c| {
        let rebuilt = rebuilt.as_ref().map_err(|e| Error::BraidingNotInvertible(e.to_string()))?;
        Ok(compare_maps(&rebuilt.components[&descs[c[0]]], &z.components[&descs[c[0]]]))
    }));
    r
}

/// Invertibility, `H`-linearity, the hexagon on pairs of regular modules and
/// naturality against right multiplications.
pub fn check_half_braiding<F: Field>(h: &QuasiTuraevCoalgebra<F>, z: &CenterObject<F>) -> Report {
    let g = h.group();
    let a = z.degree();
    let u = &z.carrier;
    let descs = z.family();
    let k = descs.len();
    let mut r = Report::new("half_braiding");
    r.push(check_cases("center.invertible", "c_{U,X} is invertible", &["X"], index_tuples(&[k]), |c| {
        let m = &z.components[&descs[c[0]]];
        let rank = m.rank();
        Ok((rank != m.rows() || !m.is_square()).then(|| (format!("rank {rank}"), format!("dimension {}x{}", m.rows(), m.cols()))))
    }));
    let mut cases = Vec::new();
    for (i, d) in descs.iter().enumerate() {
        for j in 0..h.dim(g.mul(a, d.degree(h))) {
            cases.push(vec![i, j]);
        }
    }
    r.push(check_cases("center.linear", "c_{U,X}(h . (u (x) x)) = h . c_{U,X}(u (x) x)", &["X", "h"], cases, |c| {
        let x = descs[c[0]].build(h);
        let src = RepModule::tensor(h, u, &x);
        let dst = RepModule::tensor(h, &RepModule::conjugate(h, a, &x), u);
        let m = &z.components[&descs[c[0]]];
        Ok(compare_maps(&m.compose(&src.action()[c[1]])?, &dst.action()[c[1]].compose(m)?))
    }));
    let pairs: Vec<Vec<usize>> = index_tuples(&[h.n(), h.n()])
        .into_iter()
        .filter(|p| z.components.contains_key(&ModuleDesc::plain(p.clone())))
        .collect();
    r.push(check_cases(
        "center.hexagon",
        "c_{U,V(x)W} = a^-1 (^UV (x) c_{U,W}) a (c_{U,V} (x) W) a^-1 on regular V, W",
        &["V", "W"],
        pairs,
        |c| {
            let (v, w) = (RepModule::regular(h, c[0]), RepModule::regular(h, c[1]));
            let (uv, uw) = (RepModule::conjugate(h, a, &v), RepModule::conjugate(h, a, &w));
            let lhs = z.component(h, &ModuleDesc::plain(vec![c[0], c[1]]))?;
            let mut rhs = associator_inverse_action(h, u, &v, &w);
            rhs = z.component(h, &ModuleDesc::regular(c[0]))?.kron(&id(&w)).compose(&rhs)?;
            rhs = associator_action(h, &uv, u, &w).compose(&rhs)?;
            rhs = id(&uv).kron(&z.component(h, &ModuleDesc::regular(c[1]))?).compose(&rhs)?;
            rhs = associator_inverse_action(h, &uv, &uw, u).compose(&rhs)?;
            Ok(compare_maps(&lhs, &rhs))
        },
    ));
    // morphisms: right multiplication by a basis element on one regular factor
    let mut cases = Vec::new();
    for (i, d) in descs.iter().enumerate() {
        if d.conj.is_some() {
            continue;
        }
        for (pos, &f) in d.factors.iter().enumerate() {
            for j in 0..h.dim(f) {
                cases.push(vec![i, pos, j]);
            }
        }
    }
    r.push(check_cases("center.naturality", "c_{U,X} (U (x) f) = (f (x) U) c_{U,X} for f = right multiplication", &["X", "factor", "h"], cases, |c| {
        let d = &descs[c[0]];
        let f = d.factors.iter().enumerate().fold(LinMap::identity(1), |acc, (pos, &l)| {
            let comp = h.component(l);
            let piece = if pos == c[1] { comp.right_mult(&basis(comp.dim(), c[2])) } else { LinMap::identity(comp.dim()) };
            acc.kron(&piece)
        });
        let m = &z.components[d];
        Ok(compare_maps(&m.compose(&id(u).kron(&f))?, &f.kron(&id(u)).compose(m)?))
    }));
    r
}

/// The pentagon for associator actions on every ordered quadruple of `modules`.
pub fn check_pentagon<F: Field>(h: &QuasiTuraevCoalgebra<F>, modules: &[RepModule<F>]) -> Report {
    let k = modules.len();
    let mut r = Report::new("pentagon");
    r.push(check_cases(
        "associator.pentagon",
        "a_{X,Y,Z(x)W} a_{X(x)Y,Z,W} = (X (x) a_{Y,Z,W}) a_{X,Y(x)Z,W} (a_{X,Y,Z} (x) W)",
        &["X", "Y", "Z", "W"],
        index_tuples(&[k, k, k, k]),
        |c| {
            let (x, y, zz, w) = (&modules[c[0]], &modules[c[1]], &modules[c[2]], &modules[c[3]]);
            let lhs = associator_action(h, x, y, &RepModule::tensor(h, zz, w))
                .compose(&associator_action(h, &RepModule::tensor(h, x, y), zz, w))?;
            let mut rhs = associator_action(h, x, y, zz).kron(&id(w));
            rhs = associator_action(h, x, &RepModule::tensor(h, y, zz), w).compose(&rhs)?;
            rhs = id(x).kron(&associator_action(h, y, zz, w)).compose(&rhs)?;
            Ok(compare_maps(&lhs, &rhs))
        },
    ));
    r
}

/// The default test family: regular modules and all products up to `depth` factors.
pub fn default_family<F: Field>(h: &QuasiTuraevCoalgebra<F>, depth: usize) -> Vec<ModuleDesc> {
    test_family(h.n(), depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::FinGroup;
    use crate::instances::{build_constant_hopf, build_graded_line, build_trivial, minus_cocycle_z2, zeta_cocycle_cyclic};
    use crate::scalar::{Cyclo, FieldSpec};
    use crate::ydmod::{search_yd_modules, yd_conjugate, yd_tensor, Ansatz};

    fn graded_z2() -> QuasiTuraevCoalgebra<Cyclo> {
        build_graded_line(&FinGroup::cyclic(2), &minus_cocycle_z2()).unwrap()
    }

    fn modules(h: &QuasiTuraevCoalgebra<Cyclo>, order: u32) -> Vec<YDModule<Cyclo>> {
        let roots = FieldSpec::cyclotomic(order).roots_of_unity();
        h.group().elements().flat_map(|a| search_yd_modules(h, a, 1, &roots, Ansatz::Monomial, 16).unwrap()).collect()
    }

    #[test]
    fn trivial_instance_components_are_flips() {
        let h = build_trivial::<Cyclo>(&FinGroup::cyclic(2)).unwrap();
        let fam = default_family(&h, 2);
        let z = f2(&h, &YDModule::unit(&h), &fam);
        assert_eq!(z, CenterObject::flip(&h, RepModule::unit(&h), &fam));
        let y = f1(&h, &z).unwrap();
        for l in 0..2 {
            assert_eq!(y.coaction(l), &LinMap::identity(1));
        }
    }

    #[test]
    fn flip_fails_hexagon_on_quasi_instance() {
        let h = graded_z2();
        let z = CenterObject::flip(&h, RepModule::regular(&h, 1), &default_family(&h, 2));
        let r = check_half_braiding(&h, &z);
        assert!(r.check("center.linear").unwrap().passed());
        let hex = r.check("center.hexagon").unwrap();
        assert!(!hex.passed());
        assert!(hex.counterexample.is_some());
    }

    #[test]
    fn f2_outputs_are_half_braidings_and_roundtrip() {
        let h = graded_z2();
        let fam = default_family(&h, 2);
        for m in modules(&h, 4) {
            let z = f2(&h, &m, &fam);
            let r = check_half_braiding(&h, &z);
            assert!(r.passed(), "{}", r.to_text());
            assert!(roundtrip_check(&h, &m, None, &fam).passed());
        }
    }

    #[test]
    fn tensor_and_conjugation_match_yd_structure() {
        let h = build_graded_line(&FinGroup::cyclic(4), &zeta_cocycle_cyclic(4, 8).unwrap()).unwrap();
        let fam = default_family(&h, 2);
        let ms = modules(&h, 8);
        for m in &ms {
            for n in &ms {
                let t = center_tensor(&h, &f2(&h, m, &fam), &f2(&h, n, &fam)).unwrap();
                assert_eq!(f1(&h, &t).unwrap(), yd_tensor(&h, m, n));
            }
            for b in 0..4 {
                let c = center_conjugate(&h, b, &f2(&h, m, &fam)).unwrap();
                assert_eq!(f1(&h, &c).unwrap(), yd_conjugate(&h, b, m));
            }
        }
    }

    #[test]
    fn unit_object_is_neutral_for_tensor() {
        let h = graded_z2();
        let fam = default_family(&h, 2);
        let m = &modules(&h, 4)[1];
        let z = f2(&h, m, &fam);
        let t = center_tensor(&h, &CenterObject::unit(&h, &fam), &z).unwrap();
        assert_eq!(t.components, z.components);
        assert_eq!(center_conjugate(&h, 0, &z).unwrap(), z);
    }

    #[test]
    fn transported_component_agrees_with_direct_braiding() {
        let h = build_trivial::<Cyclo>(&FinGroup::symmetric3()).unwrap();
        let fam = default_family(&h, 2);
        for m in modules(&h, 1).iter().filter(|m| m.degree() == 1) {
            let z = f2(&h, m, &fam);
            let desc = ModuleDesc::plain(vec![1, 2]).conjugated(h.group(), 3);
            assert!(!z.components.contains_key(&desc));
            assert_eq!(z.component(&h, &desc).unwrap(), braiding(&h, m, &desc.build(&h)));
        }
    }

    #[test]
    fn constant_hopf_classical_module_roundtrips() {
        let g = FinGroup::symmetric3();
        let h = build_constant_hopf::<Cyclo>(&FinGroup::cyclic(2), &g).unwrap();
        let m = crate::instances::classical_yd_module(&h, &g).unwrap();
        let fam = default_family(&h, 1);
        assert!(roundtrip_check(&h, &m, None, &fam).passed());
        assert!(check_half_braiding(&h, &f2(&h, &m, &fam)).passed());
    }

    #[test]
    fn missing_regular_component_is_reported() {
        let h = graded_z2();
        let mut z = f2(&h, &YDModule::unit(&h), &default_family(&h, 1));
        z.components.remove(&ModuleDesc::regular(1));
        assert!(matches!(f1(&h, &z), Err(Error::MissingComponent(1))));
    }

    #[test]
    fn pentagon_on_small_modules() {
        let h = build_graded_line(&FinGroup::cyclic(4), &zeta_cocycle_cyclic(4, 8).unwrap()).unwrap();
        let regs: Vec<_> = (0..4).map(|l| RepModule::regular(&h, l)).collect();
        assert!(check_pentagon(&h, &regs).passed());
    }
}
