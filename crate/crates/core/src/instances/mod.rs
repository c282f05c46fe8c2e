//! Builders for known families of quasi-Turaev group coalgebras and for the
//! Yetter-Drinfeld modules used as ground truth by the test suites.

mod descriptor;
mod examples;

pub use descriptor::{parse_group, BuiltInstance, CocycleName, InstanceDescriptor};
pub use examples::{builtin_yd_examples, classical_yd_module};

use crate::error::{Error, Result};
use crate::fingroup::{Elem, FinGroup};
use crate::gqc::{validate_all, AlgebraComponent, CoalgebraParts, GradedAlgebra, QuasiTuraevCoalgebra};
use crate::report::Report;
use crate::scalar::{Cyclo, Field};
use crate::tensor::LinMap;

/// A function `G^3 -> k^x`, flat row-major: `w[(a * n + b) * n + c]`.
pub type Cocycle<F> = Vec<F>;

fn one_by_one<F: Field>(x: F) -> LinMap<F> {
    LinMap::from_rows(1, 1, vec![x]).expect("1x1")
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

/// Run every axiom suite and turn a failure into an error.
fn promote<F: Field>(h: QuasiTuraevCoalgebra<F>) -> Result<QuasiTuraevCoalgebra<F>> {
    let report = validate_all(&h);
    match first_failure(&report) {
        Some(msg) => Err(Error::BuilderValidation(msg)),
        None => Ok(h),
    }
}

fn first_failure(report: &Report) -> Option<String> {
    report.failures().next().map(|c| match &c.counterexample {
        Some(ce) => {
            let at: Vec<String> = ce.at.iter().map(|iv| format!("{}={}", iv.name, iv.value)).collect();
            format!("{} at {}: {} vs {}", c.id, at.join(", "), ce.lhs, ce.rhs)
        }
        None => c.id.clone(),
    })
}

/// One-dimensional components everywhere with the given `Phi` scalars; `S = id`,
/// `p = 1`, `q_a = omega(a, a^{-1}, a)^{-1}`, trivial crossing. No checks.
pub fn graded_line_parts<F: Field>(g: &FinGroup, omega: &Cocycle<F>) -> Result<CoalgebraParts<F>> {
    let n = g.order();
    if omega.len() != n * n * n {
        return Err(Error::Param(format!("cocycle table has {} entries, expected {}", omega.len(), n * n * n)));
    }
    let idx = |a: Elem, b: Elem, c: Elem| (a * n + b) * n + c;
    let mut q = Vec::with_capacity(n);
    for a in g.elements() {
        let w = &omega[idx(a, g.inv(a), a)];
        q.push(vec![w.try_inv().ok_or(Error::DivisionByZero)?]);
    }
    let phi_inv = omega.iter().map(|w| w.try_inv().map(|x| vec![x]).ok_or(Error::DivisionByZero)).collect::<Result<_>>()?;
    Ok(CoalgebraParts {
        algebra: GradedAlgebra::constant(g.clone(), AlgebraComponent::scalars()),
        delta: vec![one_by_one(F::one()); n * n],
        counit: vec![F::one()],
        phi: omega.iter().map(|w| vec![w.clone()]).collect(),
        phi_inv: Some(phi_inv),
        antipode: vec![one_by_one(F::one()); n],
        antipode_inv: None,
        p: vec![vec![F::one()]; n],
        q,
        crossing: vec![one_by_one(F::one()); n * n],
    })
}

/// `H_a = k` for every `a`, with every structure map trivial.
pub fn build_trivial<F: Field>(g: &FinGroup) -> Result<QuasiTuraevCoalgebra<F>> {
    let n = g.order();
    promote(QuasiTuraevCoalgebra::new(graded_line_parts(g, &vec![F::one(); n * n * n])?)?)
}

/// First quadruple violating `w(b,c,d) w(a,bc,d) w(a,b,c) = w(ab,c,d) w(a,b,cd)`.
pub fn cocycle_defect<F: Field>(g: &FinGroup, omega: &Cocycle<F>) -> Option<(Elem, Elem, Elem, Elem)> {
    let n = g.order();
    let w = |a: Elem, b: Elem, c: Elem| &omega[(a * n + b) * n + c];
    for (a, b, c) in triples(n) {
        for d in 0..n {
            let lhs = w(b, c, d).mul_ref(w(a, g.mul(b, c), d)).mul_ref(w(a, b, c));
            let rhs = w(g.mul(a, b), c, d).mul_ref(w(a, b, g.mul(c, d)));
            if lhs != rhs {
                return Some((a, b, c, d));
            }
        }
    }
    None
}

fn check_cocycle<F: Field>(g: &FinGroup, omega: &Cocycle<F>) -> Result<()> {
    let n = g.order();
    if omega.len() != n * n * n {
        return Err(Error::Param(format!("cocycle table has {} entries, expected {}", omega.len(), n * n * n)));
    }
    if let Some((a, b, c, d)) = cocycle_defect(g, omega) {
        return Err(Error::NotACocycle(a, b, c, d));
    }
    let e = g.identity();
    for a in 0..n {
        for b in 0..n {
            if !omega[(a * n + e) * n + b].is_one() {
                return Err(Error::NotNormalized(a, b));
            }
        }
    }
    Ok(())
}

/// `H_a = k` with `Phi_{a,b,c} = omega(a,b,c)`. The cocycle condition,
/// normalization and (for nonabelian groups) invariance under independent
/// conjugation of the three arguments are checked before the axiom suites.
pub fn build_graded_line<F: Field>(g: &FinGroup, omega: &Cocycle<F>) -> Result<QuasiTuraevCoalgebra<F>> {
    check_cocycle(g, omega)?;
    let n = g.order();
    if !g.is_abelian() {
        for (a, b, c) in triples(n) {
            let w = &omega[(a * n + b) * n + c];
            for (x, y, z) in triples(n) {
                let (a2, b2, c2) = (g.conj(x, a), g.conj(y, b), g.conj(z, c));
                if omega[(a2 * n + b2) * n + c2] != *w {
                    return Err(Error::NotConjInvariant(a, b, c));
                }
            }
        }
    }
    promote(QuasiTuraevCoalgebra::new(graded_line_parts(g, omega)?)?)
}

/// `H_a = k[G]` for every `a`: `Delta(x) = x (x) x`, `epsilon(x) = 1`,
/// `S(x) = x^{-1}`, trivial `Phi`, `p = q = 1`, trivial crossing.
pub fn build_constant_hopf<F: Field>(pi: &FinGroup, g: &FinGroup) -> Result<QuasiTuraevCoalgebra<F>> {
    let (n, m) = (pi.order(), g.order());
    let comp = AlgebraComponent::group_algebra(g);
    let mut delta = LinMap::zeros(m * m, m);
    let mut antipode = LinMap::zeros(m, m);
    for x in g.elements() {
        delta.set(x * m + x, x, F::one());
        antipode.set(g.inv(x), x, F::one());
    }
    let unit = comp.unit().to_vec();
    let one3: Vec<F> = crate::tensor::MultiVec::vector(unit.clone())
        .outer(&crate::tensor::MultiVec::vector(unit.clone()))
        .outer(&crate::tensor::MultiVec::vector(unit.clone()))
        .into_data();
    let parts = CoalgebraParts {
        algebra: GradedAlgebra::constant(pi.clone(), comp),
        delta: vec![delta; n * n],
        counit: vec![F::one(); m],
        phi: vec![one3.clone(); n * n * n],
        phi_inv: Some(vec![one3; n * n * n]),
        antipode: vec![antipode; n],
        antipode_inv: None,
        p: vec![unit.clone(); n],
        q: vec![unit; n],
        crossing: vec![LinMap::identity(m); n * n],
    };
    promote(QuasiTuraevCoalgebra::new(parts)?)
}

/// Functions on `G` in every degree, with `Phi = sum omega(x,y,z) d_x (x) d_y (x) d_z`
/// and `S(d_x) = d_{x^{-1}}`; diagonal `p, q` are solved from the antipode axioms.
pub fn build_twisted_dual<F: Field>(pi: &FinGroup, g: &FinGroup, omega: &Cocycle<F>) -> Result<QuasiTuraevCoalgebra<F>> {
    check_cocycle(g, omega)?;
    let (n, m) = (pi.order(), g.order());
    let comp = AlgebraComponent::function_algebra(m);
    let mut delta = LinMap::zeros(m * m, m);
    let mut antipode = LinMap::zeros(m, m);
    for x in g.elements() {
        for y in g.elements() {
            delta.set(x * m + y, g.mul(x, y), F::one());
        }
        antipode.set(g.inv(x), x, F::one());
    }
    let mut counit = vec![F::zero(); m];
    counit[g.identity()] = F::one();
    let phi = omega.clone();
    let phi_inv: Vec<F> = omega.iter().map(|w| w.try_inv().ok_or(Error::DivisionByZero)).collect::<Result<_>>()?;
    // omega(x, x^{-1}, x) for each x
    let w: Vec<F> = g.elements().map(|x| omega[(x * m + g.inv(x)) * m + x].clone()).collect();
    let w_inv: Vec<F> = w.iter().map(|v| v.try_inv().expect("nonzero cocycle")).collect();
    let candidates = [(vec![F::one(); m], w_inv.clone()), (w_inv, vec![F::one(); m])];
    let mut residual = String::new();
    for (p, q) in candidates {
        let parts = CoalgebraParts {
            algebra: GradedAlgebra::constant(pi.clone(), comp.clone()),
            delta: vec![delta.clone(); n * n],
            counit: counit.clone(),
            phi: vec![phi.clone(); n * n * n],
            phi_inv: Some(vec![phi_inv.clone(); n * n * n]),
            antipode: vec![antipode.clone(); n],
            antipode_inv: None,
            p: vec![p; n],
            q: vec![q; n],
            crossing: vec![LinMap::identity(m); n * n],
        };
        let h = QuasiTuraevCoalgebra::new(parts)?;
        let antipode_report = crate::gqc::validate_antipode(&h);
        match first_failure(&antipode_report) {
            None => return promote(h),
            Some(msg) => residual = msg,
        }
    }
    Err(Error::AntipodeSolveFailed(residual))
}

/// The cocycle on `Z_2` with `omega(g,g,g) = -1` and `1` elsewhere.
pub fn minus_cocycle_z2<F: Field>() -> Cocycle<F> {
    let mut w = vec![F::one(); 8];
    w[7] = F::from_int(-1);
    w
}

/// `omega(a,b,c) = zeta_m^{a floor((b + c) / m)}` on `Z_m` (elements as
/// integer representatives), valued in `Q(zeta_order)`; `m` must divide `order`.
pub fn zeta_cocycle_cyclic(m: usize, order: u32) -> Result<Cocycle<Cyclo>> {
    if m == 0 || !(order as usize).is_multiple_of(m) {
        return Err(Error::Param(format!("Z_{m} cocycle needs a field order divisible by {m}, got {order}")));
    }
    let step = (order as usize / m) as i64;
    let mut w = Vec::with_capacity(m * m * m);
    for (a, b, c) in triples(m) {
        let carry = ((b + c) / m) as i64;
        w.push(Cyclo::zeta_pow(order, step * a as i64 * carry));
    }
    Ok(w)
}

/// The constant cocycle `1`.
pub fn trivial_cocycle<F: Field>(n: usize) -> Cocycle<F> {
    vec![F::one(); n * n * n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclo;

    #[test]
    fn graded_line_with_trivial_cocycle_is_trivial() {
        let g = FinGroup::cyclic(2);
        let a = build_trivial::<Cyclo>(&g).unwrap();
        let b = build_graded_line(&g, &trivial_cocycle::<Cyclo>(2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn minus_cocycle_gives_q_minus_one() {
        let g = FinGroup::cyclic(2);
        let h = build_graded_line(&g, &minus_cocycle_z2::<Cyclo>()).unwrap();
        assert_eq!(h.q(1), &[Cyclo::from_int(-1)]);
        assert_eq!(h.q(0), &[Cyclo::from_int(1)]);
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let g = FinGroup::cyclic(2);
        let mut w = trivial_cocycle::<Cyclo>(2);
        w[(2 + 1) * 2] = Cyclo::from_int(-1); // omega(g,g,1) = -1
        assert!(matches!(build_graded_line(&g, &w), Err(Error::NotACocycle(..))));
    }

    #[test]
    fn zeta_cocycle_on_z4_is_a_cocycle() {
        let g = FinGroup::cyclic(4);
        let w = zeta_cocycle_cyclic(4, 8).unwrap();
        assert_eq!(cocycle_defect(&g, &w), None);
        assert!(build_graded_line(&g, &w).is_ok());
    }

    #[test]
    fn unnormalized_cocycle_is_rejected() {
        // a coboundary-free but unnormalized constant
        let g = FinGroup::cyclic(2);
        let w = vec![Cyclo::from_int(-1); 8];
        assert!(build_graded_line(&g, &w).is_err());
    }
}
