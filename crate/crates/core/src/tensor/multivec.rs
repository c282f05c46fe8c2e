use crate::error::{Error, Result};
use crate::scalar::Field;

/// A dense element of `V_1 (x) ... (x) V_m`, stored row-major with the first
/// leg outermost. Formulas written in Sweedler notation are evaluated by
/// inserting tensor factors and contracting legs one at a time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiVec<F> {
    shape: Vec<usize>,
    data: Vec<F>,
}

fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for i in (0..shape.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * shape[i + 1];
    }
    s
}

impl<F: Field> MultiVec<F> {
    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        MultiVec { shape, data: vec![F::zero(); n] }
    }

    pub fn from_data(shape: Vec<usize>, data: Vec<F>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::DimensionMismatch(format!("shape {shape:?} needs {n} entries, got {}", data.len())));
        }
        Ok(MultiVec { shape, data })
    }

    /// The scalar `c` as a tensor with no legs.
    pub fn scalar(c: F) -> Self {
        MultiVec { shape: Vec::new(), data: vec![c] }
    }

    /// A single basis tensor `e_{i_1} (x) ... (x) e_{i_m}`.
    pub fn basis(shape: Vec<usize>, index: &[usize]) -> Self {
        let mut v = Self::zeros(shape);
        let flat = v.flat_index(index);
        v.data[flat] = F::one();
        v
    }

    /// A one-leg tensor from a coordinate vector.
    pub fn vector(data: Vec<F>) -> Self {
        MultiVec { shape: vec![data.len()], data }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn legs(&self) -> usize {
        self.shape.len()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn flat_index(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.shape.len(), "index rank");
        index.iter().zip(&self.shape).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "index {i} out of range {d}");
            acc * d + i
        })
    }

    pub fn get(&self, index: &[usize]) -> &F {
        &self.data[self.flat_index(index)]
    }

    /// Visit every nonzero entry with its multi-index, in flat order.
    pub fn for_each_nonzero(&self, mut f: impl FnMut(&[usize], &F)) {
        let mut idx = vec![0usize; self.shape.len()];
        for x in &self.data {
            if !x.is_zero() {
                f(&idx, x);
            }
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < self.shape[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    /// Reinterpret the flat data under a new shape with the same size.
    pub fn reshape(mut self, shape: Vec<usize>) -> Self {
        assert_eq!(shape.iter().product::<usize>(), self.data.len(), "reshape size");
        self.shape = shape;
        self
    }

    /// Split leg `k` of size `a*b` into two adjacent legs of sizes `a`, `b`.
    pub fn split_leg(mut self, k: usize, a: usize, b: usize) -> Self {
        assert_eq!(self.shape[k], a * b, "split size");
        self.shape.splice(k..=k, [a, b]);
        self
    }

    /// Drop a leg of size one.
    pub fn squeeze(mut self, k: usize) -> Self {
        assert_eq!(self.shape[k], 1, "squeeze needs a unit leg");
        self.shape.remove(k);
        self
    }

    /// Outer product; legs of `other` follow the legs of `self`.
    pub fn outer(&self, other: &Self) -> Self {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        let mut data = vec![F::zero(); self.data.len() * other.data.len()];
        let m = other.data.len();
        for (i, a) in self.data.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.data.iter().enumerate() {
                if !b.is_zero() {
                    data[i * m + j] = a.mul_ref(b);
                }
            }
        }
        MultiVec { shape, data }
    }

    /// Reorder legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.shape.len(), "permutation rank");
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let out_strides = strides(&shape);
        // stride of source leg p inside the output
        let mut src_to_out = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            src_to_out[p] = out_strides[i];
        }
        let mut out = Self::zeros(shape);
        self.for_each_nonzero(|idx, x| {
            let flat: usize = idx.iter().zip(&src_to_out).map(|(i, s)| i * s).sum();
            out.data[flat] = x.clone();
        });
        out
    }

    /// Apply a linear map to leg `k`. `cols[j]` lists the `(row, value)`
    /// nonzeros of the map's column `j`; the new leg has size `out_dim`.
    pub fn map_leg(&self, k: usize, out_dim: usize, cols: &[Vec<(usize, F)>]) -> Self {
        assert_eq!(cols.len(), self.shape[k], "map source dimension");
        let mut shape = self.shape.clone();
        shape[k] = out_dim;
        let st = strides(&shape);
        let mut out = Self::zeros(shape);
        self.for_each_nonzero(|idx, x| {
            let base: usize = idx.iter().enumerate().filter(|(l, _)| *l != k).map(|(l, i)| i * st[l]).sum();
            for (r, c) in &cols[idx[k]] {
                out.data[base + r * st[k]].acc_mul(x, c);
            }
        });
        out
    }

    /// Merge legs `k` and `l` through a bilinear rule: the pair of basis
    /// indices `(i_k, i_l)` maps to the combination `table(i_k, i_l)` of basis
    /// vectors of a new leg of size `out_dim`, which replaces leg `keep`
    /// (either `k` or `l`); the other leg is removed.
    pub fn contract<'t, T>(&self, k: usize, l: usize, out_dim: usize, table: T, keep: usize) -> Self
    where
        T: Fn(usize, usize) -> &'t [(usize, F)],
        F: 't,
    {
        assert!(k != l && (keep == k || keep == l), "contract legs");
        let drop = if keep == k { l } else { k };
        let mut shape = self.shape.clone();
        shape[keep] = out_dim;
        shape.remove(drop);
        let st = strides(&shape);
        // position of each source leg in the output
        let pos: Vec<Option<usize>> = (0..self.shape.len())
            .map(|s| match s.cmp(&drop) {
                std::cmp::Ordering::Less => Some(s),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(s - 1),
            })
            .collect();
        let keep_out = pos[keep].expect("kept leg");
        let mut out = Self::zeros(shape);
        self.for_each_nonzero(|idx, x| {
            let base: usize = idx
                .iter()
                .enumerate()
                .filter(|(s, _)| *s != k && *s != l)
                .map(|(s, i)| i * st[pos[s].expect("kept leg")])
                .sum();
            for (o, c) in table(idx[k], idx[l]) {
                out.data[base + o * st[keep_out]].acc_mul(x, c);
            }
        });
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        MultiVec { shape: self.shape.clone(), data: self.data.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.shape, other.shape, "add shapes");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b.clone();
            }
        }
    }

    /// First flat position where two tensors differ, as a multi-index.
    pub fn first_difference(&self, other: &Self) -> Option<Vec<usize>> {
        if self.shape != other.shape {
            return Some(Vec::new());
        }
        let p = self.data.iter().zip(&other.data).position(|(a, b)| a != b)?;
        let mut idx = vec![0; self.shape.len()];
        let mut rest = p;
        for k in (0..self.shape.len()).rev() {
            idx[k] = rest % self.shape[k];
            rest /= self.shape[k];
        }
        Some(idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::LinMap;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn mv(shape: Vec<usize>, xs: &[i64]) -> MultiVec<Q> {
        MultiVec::from_data(shape, xs.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn map_leg_matches_kron() {
        let a = LinMap::from_rows(2, 2, vec![q(1), q(2), q(3), q(4)]).unwrap();
        let v = mv(vec![2, 3], &[1, 0, 2, -1, 5, 3]);
        let got = v.map_leg(0, 2, &a.sparse_cols());
        let expect = a.kron(&LinMap::identity(3)).apply(v.data()).unwrap();
        assert_eq!(got.data(), &expect[..]);
        let b = LinMap::from_rows(1, 3, vec![q(1), q(1), q(1)]).unwrap();
        let got = v.map_leg(1, 1, &b.sparse_cols());
        assert_eq!(got.shape(), &[2, 1]);
        assert_eq!(got.data(), &[q(3), q(7)]);
    }

    #[test]
    fn permute_swaps_legs() {
        let v = mv(vec![2, 3], &[1, 2, 3, 4, 5, 6]);
        let t = v.permute(&[1, 0]);
        assert_eq!(t.shape(), &[3, 2]);
        assert_eq!(t.data(), mv(vec![3, 2], &[1, 4, 2, 5, 3, 6]).data());
        assert_eq!(t.permute(&[1, 0]), v);
    }

    #[test]
    fn contract_as_polynomial_product() {
        // legs hold coefficient vectors of linear polynomials; contract multiplies them
        let table: Vec<Vec<Vec<(usize, Q)>>> =
            (0..2).map(|i| (0..2).map(|j| vec![(i + j, q(1))]).collect()).collect();
        let v = mv(vec![2], &[1, 1]).outer(&mv(vec![2], &[-1, 1]));
        let p = v.contract(0, 1, 3, |i, j| &table[i][j], 0);
        assert_eq!(p.data(), &[q(-1), q(0), q(1)]);
    }

    #[test]
    fn contract_keeps_other_legs_in_place() {
        let table: Vec<Vec<Vec<(usize, Q)>>> =
            (0..2).map(|i| (0..2).map(|j| vec![((i + j) % 2, q(1))]).collect()).collect();
        let v = MultiVec::basis(vec![2, 3, 2], &[1, 2, 1]);
        let w = v.contract(0, 2, 2, |i, j| &table[i][j], 2);
        assert_eq!(w.shape(), &[3, 2]);
        assert_eq!(w, MultiVec::basis(vec![3, 2], &[2, 0]));
        let w = v.contract(2, 0, 2, |i, j| &table[i][j], 0);
        assert_eq!(w, MultiVec::basis(vec![2, 3], &[0, 2]));
    }

    proptest! {
        #[test]
        fn outer_then_split_reshape(xs in proptest::collection::vec(-3i64..4, 6), ys in proptest::collection::vec(-3i64..4, 2)) {
            let a = mv(vec![6], &xs);
            let b = mv(vec![2], &ys);
            let o = a.outer(&b).reshape(vec![12]).split_leg(0, 3, 4);
            prop_assert_eq!(o.shape(), &[3, 4]);
            let direct = a.split_leg(0, 3, 2).outer(&b).reshape(vec![3, 4]);
            prop_assert_eq!(o, direct);
        }
    }
}
