//! Quasi-Turaev group coalgebras as structure constants, with the element
//! operations the rest of the crate evaluates formulas with.

mod validate;

pub use validate::{
    validate_algebra, validate_all, validate_antipode, validate_coalgebra, validate_crossing,
    NORMALIZATION_NOTE,
};

use crate::error::{Error, Result};
use crate::fingroup::{Elem, FinGroup};
use crate::scalar::Field;
use crate::tensor::{LinMap, MultiVec, SparseCols, TensorElement};

/// One component `H_a`: a unital algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraComponent<F> {
    dim: usize,
    unit: Vec<F>,
    /// `dim x dim^2`; column `i * dim + j` holds `e_i e_j`.
    mult: LinMap<F>,
    table: SparseCols<F>,
}

impl<F: Field> AlgebraComponent<F> {
    pub fn new(dim: usize, unit: Vec<F>, mult: LinMap<F>) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("unit of length {} in dimension {dim}", unit.len())));
        }
        if mult.rows() != dim || mult.cols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication is {}x{}, expected {dim}x{}",
                mult.rows(),
                mult.cols(),
                dim * dim
            )));
        }
        let table = mult.sparse_cols();
        Ok(AlgebraComponent { dim, unit, mult, table })
    }

    /// The one-dimensional algebra `k`.
    pub fn scalars() -> Self {
        Self::new(1, vec![F::one()], LinMap::identity(1)).expect("k")
    }

    /// The group algebra `k[G]` on the basis of group elements.
    pub fn group_algebra(g: &FinGroup) -> Self {
        let n = g.order();
        let mut mult = LinMap::zeros(n, n * n);
        for a in g.elements() {
            for b in g.elements() {
                mult.set(g.mul(a, b), a * n + b, F::one());
            }
        }
        let mut unit = vec![F::zero(); n];
        unit[g.identity()] = F::one();
        Self::new(n, unit, mult).expect("group algebra")
    }

    /// Functions on `G` with pointwise product, on the basis of point masses.
    pub fn function_algebra(n: usize) -> Self {
        let mut mult = LinMap::zeros(n, n * n);
        for a in 0..n {
            mult.set(a, a * n + a, F::one());
        }
        Self::new(n, vec![F::one(); n], mult).expect("function algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn mult(&self) -> &LinMap<F> {
        &self.mult
    }

    /// Nonzero terms of `e_i e_j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul_ref(b);
                for (k, c) in self.product(i, j) {
                    out[*k].acc_mul(&ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[F]) -> LinMap<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &basis(self.dim, j))).collect();
        LinMap::from_columns(self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[F]) -> LinMap<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(&basis(self.dim, j), x)).collect();
        LinMap::from_columns(self.dim, &cols)
    }
}

pub(crate) fn basis<F: Field>(dim: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::one();
    v
}

/// The family `{H_a}` indexed by a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra<F> {
    group: FinGroup,
    components: Vec<AlgebraComponent<F>>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(group: FinGroup, components: Vec<AlgebraComponent<F>>) -> Result<Self> {
        if components.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} components for a group of order {}",
                components.len(),
                group.order()
            )));
        }
        Ok(GradedAlgebra { group, components })
    }

    /// The same algebra in every degree.
    pub fn constant(group: FinGroup, component: AlgebraComponent<F>) -> Self {
        let components = vec![component; group.order()];
        GradedAlgebra { group, components }
    }

    pub fn group(&self) -> &FinGroup {
        &self.group
    }

    pub fn component(&self, a: Elem) -> &AlgebraComponent<F> {
        &self.components[a]
    }

    pub fn components(&self) -> &[AlgebraComponent<F>] {
        &self.components
    }

    pub fn dim(&self, a: Elem) -> usize {
        self.components[a].dim
    }
}

/// Raw structure data of a quasi-Turaev group coalgebra; every family is a
/// vector indexed by group elements (pairs and triples flattened row-major).
#[derive(Clone, Debug)]
pub struct CoalgebraParts<F> {
    pub algebra: GradedAlgebra<F>,
    /// `delta[a * n + b]`: `H_{ab} -> H_a (x) H_b`.
    pub delta: Vec<LinMap<F>>,
    /// Coordinates of `epsilon: H_1 -> k`.
    pub counit: Vec<F>,
    /// `phi[(a * n + b) * n + c]` in `H_a (x) H_b (x) H_c`, flat row-major.
    pub phi: Vec<Vec<F>>,
    pub phi_inv: Option<Vec<Vec<F>>>,
    /// `antipode[a]`: `S_a: H_a -> H_{a^{-1}}`.
    pub antipode: Vec<LinMap<F>>,
    /// `antipode_inv[a]`: `S_a^{-1}: H_{a^{-1}} -> H_a`.
    pub antipode_inv: Option<Vec<LinMap<F>>>,
    pub p: Vec<Vec<F>>,
    pub q: Vec<Vec<F>>,
    /// `crossing[b * n + a]`: `phi_b: H_a -> H_{b a b^{-1}}`.
    pub crossing: Vec<LinMap<F>>,
}

/// A finite-dimensional quasi-Turaev group coalgebra
/// `({H_a}, Delta, epsilon, Phi, S, p, q, phi)`.
///
/// Construction checks shapes only; the axioms are checked by the validators
/// in this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTuraevCoalgebra<F> {
    algebra: GradedAlgebra<F>,
    delta: Vec<LinMap<F>>,
    counit: Vec<F>,
    phi: Vec<TensorElement<F>>,
    phi_inv: Vec<TensorElement<F>>,
    antipode: Vec<LinMap<F>>,
    antipode_inv: Vec<LinMap<F>>,
    p: Vec<Vec<F>>,
    q: Vec<Vec<F>>,
    crossing: Vec<LinMap<F>>,
    delta_cols: Vec<SparseCols<F>>,
    counit_cols: SparseCols<F>,
    antipode_cols: Vec<SparseCols<F>>,
    antipode_inv_cols: Vec<SparseCols<F>>,
    crossing_cols: Vec<SparseCols<F>>,
}

fn shape_err(block: &str, index: String, expected: String, got: String) -> Error {
    Error::Shape { block: block.to_string(), index, expected, got }
}

fn check_map<F: Field>(block: &str, index: String, m: &LinMap<F>, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(shape_err(block, index, format!("{rows}x{cols}"), format!("{}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

fn check_len<F>(block: &str, index: String, v: &[F], len: usize) -> Result<()> {
    if v.len() != len {
        return Err(shape_err(block, index, format!("{len} entries"), format!("{}", v.len())));
    }
    Ok(())
}

impl<F: Field> QuasiTuraevCoalgebra<F> {
    /// Assemble an instance, checking every shape. Missing inverses of `Phi`
    /// and `S` are computed; a supplied inverse is stored as given.
    pub fn new(parts: CoalgebraParts<F>) -> Result<Self> {
        let CoalgebraParts { algebra, delta, counit, phi, phi_inv, antipode, antipode_inv, p, q, crossing } = parts;
        let g = algebra.group().clone();
        let n = g.order();
        let dims: Vec<usize> = g.elements().map(|a| algebra.dim(a)).collect();
        let d = |a: Elem| dims[a];
        let count = |block: &str, got: usize, want: usize| -> Result<()> {
            if got != want {
                return Err(shape_err(block, "*".into(), format!("{want} entries"), format!("{got}")));
            }
            Ok(())
        };
        count("delta", delta.len(), n * n)?;
        count("phi", phi.len(), n * n * n)?;
        count("antipode", antipode.len(), n)?;
        count("p", p.len(), n)?;
        count("q", q.len(), n)?;
        count("crossing", crossing.len(), n * n)?;
        for a in g.elements() {
            for b in g.elements() {
                check_map("delta", format!("{a},{b}"), &delta[a * n + b], d(a) * d(b), d(g.mul(a, b)))?;
                check_map("crossing", format!("{a},{b}"), &crossing[a * n + b], d(g.conj(a, b)), d(b))?;
            }
            check_map("antipode", format!("{a}"), &antipode[a], d(g.inv(a)), d(a))?;
            check_len("p", format!("{a}"), &p[a], d(a))?;
            check_len("q", format!("{a}"), &q[a], d(a))?;
        }
        check_len("counit", "1".into(), &counit, d(g.identity()))?;

        let triple = |i: usize| (i / (n * n), (i / n) % n, i % n);
        let mut phi_t = Vec::with_capacity(phi.len());
        for (i, coeffs) in phi.into_iter().enumerate() {
            let (a, b, c) = triple(i);
            check_len("phi", format!("{a},{b},{c}"), &coeffs, d(a) * d(b) * d(c))?;
            let value = MultiVec::from_data(vec![d(a), d(b), d(c)], coeffs)?;
            phi_t.push(TensorElement::new(vec![a, b, c], value)?);
        }
        let mut partial = QuasiTuraevCoalgebra {
            delta_cols: delta.iter().map(|m| m.sparse_cols()).collect(),
            counit_cols: LinMap::from_rows(1, counit.len(), counit.clone())?.sparse_cols(),
            antipode_cols: antipode.iter().map(|m| m.sparse_cols()).collect(),
            antipode_inv_cols: Vec::new(),
            crossing_cols: crossing.iter().map(|m| m.sparse_cols()).collect(),
            algebra,
            delta,
            counit,
            phi: phi_t,
            phi_inv: Vec::new(),
            antipode,
            antipode_inv: Vec::new(),
            p,
            q,
            crossing,
        };
        partial.phi_inv = match phi_inv {
            Some(list) => {
                count("phi.inverse", list.len(), n * n * n)?;
                let mut out = Vec::with_capacity(list.len());
                for (i, coeffs) in list.into_iter().enumerate() {
                    let (a, b, c) = triple(i);
                    check_len("phi.inverse", format!("{a},{b},{c}"), &coeffs, d(a) * d(b) * d(c))?;
                    let value = MultiVec::from_data(vec![d(a), d(b), d(c)], coeffs)?;
                    out.push(TensorElement::new(vec![a, b, c], value)?);
                }
                out
            }
            None => partial.phi.iter().map(|t| partial.tensor_inverse(t)).collect::<Result<_>>()?,
        };
        partial.antipode_inv = match antipode_inv {
            Some(list) => {
                count("antipode.inverse", list.len(), n)?;
                for (a, m) in list.iter().enumerate() {
                    check_map("antipode.inverse", format!("{a}"), m, d(a), d(g.inv(a)))?;
                }
                list
            }
            None => partial.antipode.iter().map(|m| m.invert()).collect::<Result<_>>()?,
        };
        partial.antipode_inv_cols = partial.antipode_inv.iter().map(|m| m.sparse_cols()).collect();
        Ok(partial)
    }

    /// The raw data, inverses included.
    pub fn to_parts(&self) -> CoalgebraParts<F> {
        CoalgebraParts {
            algebra: self.algebra.clone(),
            delta: self.delta.clone(),
            counit: self.counit.clone(),
            phi: self.phi.iter().map(|t| t.value.data().to_vec()).collect(),
            phi_inv: Some(self.phi_inv.iter().map(|t| t.value.data().to_vec()).collect()),
            antipode: self.antipode.clone(),
            antipode_inv: Some(self.antipode_inv.clone()),
            p: self.p.clone(),
            q: self.q.clone(),
            crossing: self.crossing.clone(),
        }
    }

    pub fn algebra(&self) -> &GradedAlgebra<F> {
        &self.algebra
    }

    pub fn group(&self) -> &FinGroup {
        self.algebra.group()
    }

    pub fn n(&self) -> usize {
        self.group().order()
    }

    pub fn dim(&self, a: Elem) -> usize {
        self.algebra.dim(a)
    }

    pub fn component(&self, a: Elem) -> &AlgebraComponent<F> {
        self.algebra.component(a)
    }

    pub fn unit(&self, a: Elem) -> &[F] {
        self.component(a).unit()
    }

    pub fn delta(&self, a: Elem, b: Elem) -> &LinMap<F> {
        &self.delta[a * self.n() + b]
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn phi(&self, a: Elem, b: Elem, c: Elem) -> &TensorElement<F> {
        let n = self.n();
        &self.phi[(a * n + b) * n + c]
    }

    pub fn phi_inv(&self, a: Elem, b: Elem, c: Elem) -> &TensorElement<F> {
        let n = self.n();
        &self.phi_inv[(a * n + b) * n + c]
    }

    pub fn antipode(&self, a: Elem) -> &LinMap<F> {
        &self.antipode[a]
    }

    /// `S_a^{-1}: H_{a^{-1}} -> H_a`.
    pub fn antipode_inv(&self, a: Elem) -> &LinMap<F> {
        &self.antipode_inv[a]
    }

    pub fn p(&self, a: Elem) -> &[F] {
        &self.p[a]
    }

    pub fn q(&self, a: Elem) -> &[F] {
        &self.q[a]
    }

    /// `phi_b: H_a -> H_{b a b^{-1}}`.
    pub fn crossing(&self, b: Elem, a: Elem) -> &LinMap<F> {
        &self.crossing[b * self.n() + a]
    }

    /// Whether `Phi` is `1 (x) 1 (x) 1` in every degree.
    pub fn has_trivial_phi(&self) -> bool {
        self.phi.iter().all(|t| *t == self.tensor_unit(&t.grading))
    }

    // ---- element operations ----

    fn check_dim(&self, a: Elem, x: &[F], what: &str) -> Result<()> {
        if x.len() != self.dim(a) {
            return Err(Error::GradingMismatch(format!(
                "{what}: vector of length {} is not in H_{a} (dimension {})",
                x.len(),
                self.dim(a)
            )));
        }
        Ok(())
    }

    pub fn mul(&self, a: Elem, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.check_dim(a, x, "left factor")?;
        self.check_dim(a, y, "right factor")?;
        Ok(self.component(a).mul(x, y))
    }

    pub fn tensor_unit(&self, grading: &[Elem]) -> TensorElement<F> {
        let mut v = MultiVec::scalar(F::one());
        for &a in grading {
            v = v.outer(&MultiVec::vector(self.unit(a).to_vec()));
        }
        TensorElement { grading: grading.to_vec(), value: v }
    }

    /// Componentwise product in `H_{a_1} (x) ... (x) H_{a_m}`.
    pub fn tensor_mul(&self, x: &TensorElement<F>, y: &TensorElement<F>) -> Result<TensorElement<F>> {
        if x.grading != y.grading {
            return Err(Error::GradingMismatch(format!("{:?} times {:?}", x.grading, y.grading)));
        }
        let m = x.grading.len();
        let mut v = x.value.outer(&y.value);
        for i in 0..m {
            v = self.mul_legs(&v, i, m, i, x.grading[i]);
        }
        Ok(TensorElement { grading: x.grading.clone(), value: v })
    }

    /// Inverse in `H_a (x) H_b (x) ...`, by solving `x y = 1`.
    pub fn tensor_inverse(&self, x: &TensorElement<F>) -> Result<TensorElement<F>> {
        let total = x.value.data().len();
        let cols: Vec<Vec<F>> = (0..total)
            .map(|j| {
                let e = TensorElement { grading: x.grading.clone(), value: MultiVec::from_data(x.shape().to_vec(), basis(total, j)).expect("shape") };
                self.tensor_mul(x, &e).map(|p| p.value.into_data())
            })
            .collect::<Result<_>>()?;
        let left = LinMap::from_columns(total, &cols);
        let inv = left.invert()?;
        let one = self.tensor_unit(&x.grading);
        let y = inv.apply(one.value.data())?;
        Ok(TensorElement { grading: x.grading.clone(), value: MultiVec::from_data(x.shape().to_vec(), y)? })
    }

    pub fn apply_delta(&self, a: Elem, b: Elem, x: &[F]) -> Result<TensorElement<F>> {
        self.check_dim(self.group().mul(a, b), x, "coproduct argument")?;
        let v = self.delta_leg(&MultiVec::vector(x.to_vec()), 0, a, b);
        Ok(TensorElement { grading: vec![a, b], value: v })
    }

    /// `Delta_{a,b}(e_i)` as a list of `(coefficient, (j, k))` terms.
    pub fn sweedler(&self, a: Elem, b: Elem, i: usize) -> Vec<(F, (usize, usize))> {
        let db = self.dim(b);
        self.delta_cols[a * self.n() + b][i].iter().map(|(r, c)| (c.clone(), (r / db, r % db))).collect()
    }

    pub fn apply_counit(&self, x: &[F]) -> Result<F> {
        self.check_dim(self.group().identity(), x, "counit argument")?;
        let mut acc = F::zero();
        for (a, b) in self.counit.iter().zip(x) {
            acc.acc_mul(a, b);
        }
        Ok(acc)
    }

    pub fn apply_antipode(&self, a: Elem, x: &[F]) -> Result<Vec<F>> {
        self.check_dim(a, x, "antipode argument")?;
        self.antipode(a).apply(x)
    }

    /// `S_a^{-1}` applied to `x` in `H_{a^{-1}}`.
    pub fn apply_antipode_inv(&self, a: Elem, x: &[F]) -> Result<Vec<F>> {
        self.check_dim(self.group().inv(a), x, "inverse antipode argument")?;
        self.antipode_inv(a).apply(x)
    }

    /// `phi_b` applied to `x` in `H_a`.
    pub fn apply_crossing(&self, b: Elem, a: Elem, x: &[F]) -> Result<Vec<F>> {
        self.check_dim(a, x, "crossing argument")?;
        self.crossing(b, a).apply(x)
    }

    // ---- leg operations on multi-leg tensors ----

    /// Multiply leg `k` by leg `l` (in that order) inside `H_a`; the product
    /// replaces leg `keep`.
    pub fn mul_legs(&self, v: &MultiVec<F>, k: usize, l: usize, keep: usize, a: Elem) -> MultiVec<F> {
        let comp = self.component(a);
        debug_assert_eq!(v.shape()[k], comp.dim());
        debug_assert_eq!(v.shape()[l], comp.dim());
        v.contract(k, l, comp.dim(), |i, j| comp.product(i, j), keep)
    }

    /// Apply `Delta_{a,b}` to leg `k` (in `H_{ab}`), producing legs `k, k+1`.
    pub fn delta_leg(&self, v: &MultiVec<F>, k: usize, a: Elem, b: Elem) -> MultiVec<F> {
        let (da, db) = (self.dim(a), self.dim(b));
        v.map_leg(k, da * db, &self.delta_cols[a * self.n() + b]).split_leg(k, da, db)
    }

    /// Apply the counit to leg `k` (in `H_1`), removing it.
    pub fn counit_leg(&self, v: &MultiVec<F>, k: usize) -> MultiVec<F> {
        v.map_leg(k, 1, &self.counit_cols).squeeze(k)
    }

    /// Apply `S_a` to leg `k` (in `H_a`).
    pub fn antipode_leg(&self, v: &MultiVec<F>, k: usize, a: Elem) -> MultiVec<F> {
        v.map_leg(k, self.dim(self.group().inv(a)), &self.antipode_cols[a])
    }

    /// Apply `S_a^{-1}` to leg `k` (in `H_{a^{-1}}`).
    pub fn antipode_inv_leg(&self, v: &MultiVec<F>, k: usize, a: Elem) -> MultiVec<F> {
        v.map_leg(k, self.dim(a), &self.antipode_inv_cols[a])
    }

    /// Apply `phi_b` to leg `k` (in `H_a`).
    pub fn crossing_leg(&self, v: &MultiVec<F>, k: usize, b: Elem, a: Elem) -> MultiVec<F> {
        v.map_leg(k, self.dim(self.group().conj(b, a)), &self.crossing_cols[b * self.n() + a])
    }

    /// Append the legs of `t` after the legs of `v`.
    pub fn insert(&self, v: &MultiVec<F>, t: &TensorElement<F>) -> MultiVec<F> {
        v.outer(&t.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclo;
    use num_traits::{One, Zero};

    #[test]
    fn group_algebra_idempotent_product() {
        // in k[Z2]: (e + x)(e - x) = 0
        let k = AlgebraComponent::<Cyclo>::group_algebra(&FinGroup::cyclic(2));
        let a = vec![Cyclo::one(), Cyclo::one()];
        let b = vec![Cyclo::one(), -Cyclo::one()];
        assert_eq!(k.mul(&a, &b), vec![Cyclo::zero(), Cyclo::zero()]);
        assert_eq!(k.mul(k.unit(), &a), a);
    }

    #[test]
    fn left_and_right_multiplication() {
        let g = FinGroup::symmetric3();
        let k = AlgebraComponent::<Cyclo>::group_algebra(&g);
        let x = basis(6, 3);
        for j in 0..6 {
            assert_eq!(k.left_mult(&x).column(j), basis::<Cyclo>(6, g.mul(3, j)));
            assert_eq!(k.right_mult(&x).column(j), basis::<Cyclo>(6, g.mul(j, 3)));
        }
    }
}
