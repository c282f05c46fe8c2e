use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Sparse column view of a linear map: `cols[j]` lists `(row, value)` for the
/// nonzero entries of column `j`.
pub type SparseCols<F> = Vec<Vec<(usize, F)>>;

/// Dense `rows x cols` matrix over an exact field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> LinMap<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinMap { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} map",
                data.len()
            )));
        }
        Ok(LinMap { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        LinMap { rows, cols, data }
    }

    /// Map whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn sparse_cols(&self) -> SparseCols<F> {
        let mut out = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, x) in self.row(i).iter().enumerate() {
                if !x.is_zero() {
                    out[j].push((i, x.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.row(i).iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }

    pub fn scale(&self, c: &F) -> Self {
        LinMap { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(LinMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(LinMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `self * rhs`, i.e. apply `rhs` first.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let rhs_rows: Vec<Vec<(usize, &F)>> = (0..rhs.rows)
            .map(|k| rhs.row(k).iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &rhs_rows[k] {
                    out.data[i * rhs.cols + j].acc_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a {}x{} map",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let nz: Vec<(usize, &F)> = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for &(j, x) in &nz {
                    acc.acc_mul(self.get(i, j), x);
                }
                acc
            })
            .collect())
    }

    /// Kronecker product; `(A (x) B)[(i, k), (j, l)] = A[i, j] B[k, l]`.
    pub fn kron(&self, b: &Self) -> Self {
        let rows = self.rows * b.rows;
        let cols = self.cols * b.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let y = b.get(k, l);
                        if !y.is_zero() {
                            out.data[(i * b.rows + k) * cols + j * b.cols + l] = a.mul_ref(y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Exact inverse by Gauss-Jordan elimination; the pivot is the first
    /// nonzero entry in row order.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("cannot invert a {}x{} map", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            inv.swap_rows(p, rank);
            let pinv = a.get(rank, col).try_inv().expect("nonzero pivot");
            a.scale_row(rank, &pinv);
            inv.scale_row(rank, &pinv);
            for r in 0..n {
                if r != rank && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.sub_row_multiple(r, rank, &f);
                    inv.sub_row_multiple(r, rank, &f);
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(Error::Singular { rank, dim: n });
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let pinv = a.get(rank, col).try_inv().expect("nonzero pivot");
            a.scale_row(rank, &pinv);
            for r in rank + 1..self.rows {
                if !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.sub_row_multiple(r, rank, &f);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &F) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            if !x.is_zero() {
                *x = x.mul_ref(c);
            }
        }
    }

    /// row[target] -= f * row[src]
    fn sub_row_multiple(&mut self, target: usize, src: usize, f: &F) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let d = s.mul_ref(f);
            self.data[target * self.cols + j] -= d;
        }
    }

    /// First entry where two same-shaped maps differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((usize::MAX, usize::MAX));
        }
        self.data.iter().zip(&other.data).position(|(a, b)| a != b).map(|p| (p / self.cols, p % self.cols))
    }
}

impl<F: Field> Mul for &LinMap<F> {
    type Output = LinMap<F>;

    /// Panics on a dimension mismatch; use [`LinMap::compose`] for a checked version.
    fn mul(self, rhs: &LinMap<F>) -> LinMap<F> {
        self.compose(rhs).expect("composable maps")
    }
}

impl<F: fmt::Debug> fmt::Debug for LinMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclo;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn qm(rows: usize, cols: usize, xs: &[i64]) -> LinMap<Q> {
        LinMap::from_rows(rows, cols, xs.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn kron_identities() {
        let i2 = LinMap::<Q>::identity(2);
        let i3 = LinMap::<Q>::identity(3);
        assert_eq!(i2.kron(&i3), LinMap::identity(6));
        let a = qm(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(a.kron(&LinMap::identity(1)), a);
        assert_eq!(LinMap::identity(1).kron(&a), a);
    }

    #[test]
    fn kron_matches_double_loop_oracle() {
        let z = Cyclo::zeta(4);
        let o = Cyclo::one();
        let a = LinMap::from_rows(2, 2, vec![o.clone(), z.clone(), z.clone(), o.clone()]).unwrap();
        let b = LinMap::from_rows(2, 2, vec![z.clone(), o.clone(), o.clone(), Cyclo::zero()]).unwrap();
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        // independent index arithmetic: row r = 2i + k, col c = 2j + l
        for r in 0..4 {
            for c in 0..4 {
                let expect = a.get(r / 2, c / 2).mul_ref(b.get(r % 2, c % 2));
                assert_eq!(k.get(r, c), &expect);
            }
        }
        assert_eq!(k.get(0, 3), &z); // a[0,1] * b[0,1] = zeta * 1
        assert!(k.get(3, 1).is_zero()); // a[1,0] * b[1,1] = zeta * 0
    }

    #[test]
    fn compose_schoolbook() {
        let a = qm(3, 3, &[1, 2, 0, 0, 1, -1, 3, 0, 2]);
        let b = qm(3, 3, &[2, 0, 1, 1, 1, 0, 0, 4, 1]);
        // schoolbook by hand
        let expect = qm(3, 3, &[4, 2, 1, 1, -3, -1, 6, 8, 5]);
        assert_eq!(a.compose(&b).unwrap(), expect);
        assert_eq!(a.compose(&LinMap::identity(3)).unwrap(), a);
        assert!(a.compose(&qm(2, 2, &[1, 0, 0, 1])).is_err());
        assert_eq!(a.apply(&[q(1), q(0), q(0)]).unwrap(), vec![q(1), q(0), q(3)]);
        assert!(a.apply(&[q(1)]).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(LinMap::<Q>::identity(4).invert().unwrap(), LinMap::identity(4));
        let d = LinMap::from_rows(2, 2, vec![q(2), Q::zero(), Q::zero(), Q::new(1.into(), 3.into())]).unwrap();
        let di = LinMap::from_rows(2, 2, vec![Q::new(1.into(), 2.into()), Q::zero(), Q::zero(), q(3)]).unwrap();
        assert_eq!(d.invert().unwrap(), di);
        let s = qm(3, 3, &[1, 2, 3, 2, 4, 6, 0, 0, 1]);
        assert!(matches!(s.invert(), Err(Error::Singular { rank: 2, dim: 3 })));
        assert_eq!(s.rank(), 2);
        assert!(qm(2, 3, &[1, 2, 3, 4, 5, 6]).invert().is_err());
    }

    fn arb_map(r: usize, c: usize) -> impl Strategy<Value = LinMap<Q>> {
        proptest::collection::vec(-3i64..4, r * c)
            .prop_map(move |xs| LinMap::from_rows(r, c, xs.into_iter().map(Q::from_int).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn random_invertible_has_two_sided_inverse(a in arb_map(4, 4)) {
            // singular draws are resampled by skipping them
            if let Ok(inv) = a.invert() {
                prop_assert!(a.compose(&inv).unwrap().is_identity());
                prop_assert!(inv.compose(&a).unwrap().is_identity());
            } else {
                prop_assert!(a.rank() < 4);
            }
        }

        #[test]
        fn interchange_law(a in arb_map(2, 3), b in arb_map(2, 2), c in arb_map(3, 2), d in arb_map(2, 3)) {
            let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
            let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_associative(a in arb_map(2, 1), b in arb_map(1, 2), c in arb_map(2, 2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }
    }

    #[test]
    fn one_is_one() {
        assert!(LinMap::<Q>::identity(3).is_identity());
        assert!(!LinMap::<Q>::zeros(3, 3).is_identity());
        assert!(Q::one().is_one());
    }
}
