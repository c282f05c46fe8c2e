//! Graded representations: left `H_a`-modules, their tensor products through
//! the coproduct, and conjugation through the crossing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingroup::Elem;
use crate::gqc::QuasiTuraevCoalgebra;
use crate::scalar::Field;
use crate::tensor::{LinMap, MultiVec, SparseCols};

/// A left `H_degree`-module given by the matrices of the basis elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepModule<F> {
    degree: Elem,
    dim: usize,
    action: Vec<LinMap<F>>,
    action_cols: Vec<SparseCols<F>>,
}

impl<F: Field> RepModule<F> {
    pub fn new(h: &QuasiTuraevCoalgebra<F>, degree: Elem, dim: usize, action: Vec<LinMap<F>>) -> Result<Self> {
        h.group().checked(degree)?;
        if action.len() != h.dim(degree) {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for H_{degree} of dimension {}",
                action.len(),
                h.dim(degree)
            )));
        }
        for (i, m) in action.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action of basis element {i} is {}x{}, module dimension {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let action_cols = action.iter().map(|m| m.sparse_cols()).collect();
        Ok(RepModule { degree, dim, action, action_cols })
    }

    /// `H_l` acting on itself by left multiplication.
    pub fn regular(h: &QuasiTuraevCoalgebra<F>, l: Elem) -> Self {
        let comp = h.component(l);
        let action = (0..comp.dim()).map(|i| comp.left_mult(&crate::gqc::basis(comp.dim(), i))).collect();
        Self::new(h, l, comp.dim(), action).expect("regular module")
    }

    /// The tensor unit `k`, an `H_1`-module through the counit.
    pub fn unit(h: &QuasiTuraevCoalgebra<F>) -> Self {
        let action = h.counit().iter().map(|c| LinMap::from_rows(1, 1, vec![c.clone()]).expect("1x1")).collect();
        Self::new(h, h.group().identity(), 1, action).expect("unit module")
    }

    /// `X (x) Y` as an `H_{ab}`-module through `Delta_{a,b}`.
    pub fn tensor(h: &QuasiTuraevCoalgebra<F>, x: &Self, y: &Self) -> Self {
        let (a, b) = (x.degree, y.degree);
        let ab = h.group().mul(a, b);
        let action = (0..h.dim(ab))
            .map(|i| {
                let mut m = LinMap::zeros(x.dim * y.dim, x.dim * y.dim);
                for (c, (j, k)) in h.sweedler(a, b, i) {
                    m = m.add(&x.action[j].kron(&y.action[k]).scale(&c)).expect("same shape");
                }
                m
            })
            .collect();
        Self::new(h, ab, x.dim * y.dim, action).expect("tensor module")
    }

    /// `^b X`: same carrier, degree `b a b^{-1}`, with `h` acting as
    /// `phi_{b^{-1}}(h)`.
    pub fn conjugate(h: &QuasiTuraevCoalgebra<F>, b: Elem, x: &Self) -> Self {
        let g = h.group();
        let target = g.conj(b, x.degree);
        let back = h.crossing(g.inv(b), target);
        let action = (0..h.dim(target)).map(|c| x.act(&back.column(c))).collect();
        Self::new(h, target, x.dim, action).expect("conjugate module")
    }

    pub fn degree(&self) -> Elem {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[LinMap<F>] {
        &self.action
    }

    /// Matrix of `v -> x . v` for `x` in `H_degree`.
    pub fn act(&self, x: &[F]) -> LinMap<F> {
        let mut m = LinMap::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[i].scale(c)).expect("same shape");
            }
        }
        m
    }

    /// Let the algebra leg `alg` act on the module leg `target`; the algebra
    /// leg is consumed.
    pub fn act_leg(&self, v: &MultiVec<F>, alg: usize, target: usize) -> MultiVec<F> {
        v.contract(alg, target, self.dim, |a, x| &self.action_cols[a][x], target)
    }

    /// Failures of the representation axioms, as `(description, lhs, rhs)`.
    pub fn representation_defect(&self, h: &QuasiTuraevCoalgebra<F>) -> Option<(String, LinMap<F>, LinMap<F>)> {
        let comp = h.component(self.degree);
        let one = self.act(comp.unit());
        if !one.is_identity() {
            return Some(("unit acts as the identity".into(), one, LinMap::identity(self.dim)));
        }
        for i in 0..comp.dim() {
            for j in 0..comp.dim() {
                let lhs = &self.action[i] * &self.action[j];
                let mut rhs = LinMap::zeros(self.dim, self.dim);
                for (k, c) in comp.product(i, j) {
                    rhs = rhs.add(&self.action[*k].scale(c)).expect("same shape");
                }
                if lhs != rhs {
                    return Some((format!("e_{i} e_{j}"), lhs, rhs));
                }
            }
        }
        None
    }
}

/// Matrix of the associator `a_{X,Y,Z}`: left multiplication by `Phi` on
/// `X (x) Y (x) Z` with the flat-index identification of the carriers.
pub fn associator_action<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    x: &RepModule<F>,
    y: &RepModule<F>,
    z: &RepModule<F>,
) -> LinMap<F> {
    element_action(h.phi(x.degree, y.degree, z.degree).value.clone(), x, y, z)
}

/// Matrix of `a_{X,Y,Z}^{-1}`, left multiplication by `Phi^{-1}`.
pub fn associator_inverse_action<F: Field>(
    h: &QuasiTuraevCoalgebra<F>,
    x: &RepModule<F>,
    y: &RepModule<F>,
    z: &RepModule<F>,
) -> LinMap<F> {
    element_action(h.phi_inv(x.degree, y.degree, z.degree).value.clone(), x, y, z)
}

fn element_action<F: Field>(t: MultiVec<F>, x: &RepModule<F>, y: &RepModule<F>, z: &RepModule<F>) -> LinMap<F> {
    let n = x.dim * y.dim * z.dim;
    let mut m = LinMap::zeros(n, n);
    t.for_each_nonzero(|idx, c| {
        let term = x.action[idx[0]].kron(&y.action[idx[1]]).kron(&z.action[idx[2]]).scale(c);
        m = m.add(&term).expect("same shape");
    });
    m
}

/// A module built from regular modules: the left-nested tensor product
/// `(..(H_{f_0} (x) H_{f_1}) (x) ..)` conjugated by `conj`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModuleDesc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conj: Option<Elem>,
    pub factors: Vec<Elem>,
}

impl ModuleDesc {
    pub fn regular(l: Elem) -> Self {
        ModuleDesc { conj: None, factors: vec![l] }
    }

    pub fn plain(factors: Vec<Elem>) -> Self {
        ModuleDesc { conj: None, factors }
    }

    /// Whether this is a single regular module `H_l`, unconjugated.
    pub fn as_regular(&self) -> Option<Elem> {
        (self.conj.is_none() && self.factors.len() == 1).then(|| self.factors[0])
    }

    /// The same product conjugated by `b` (composing with an existing conjugation).
    pub fn conjugated(&self, g: &crate::fingroup::FinGroup, b: Elem) -> Self {
        let c = match self.conj {
            Some(c) => g.mul(b, c),
            None => b,
        };
        ModuleDesc { conj: (c != g.identity()).then_some(c), factors: self.factors.clone() }
    }

    pub fn build<F: Field>(&self, h: &QuasiTuraevCoalgebra<F>) -> RepModule<F> {
        let mut it = self.factors.iter();
        let first = it.next().expect("at least one factor");
        let mut m = RepModule::regular(h, *first);
        for &f in it {
            m = RepModule::tensor(h, &m, &RepModule::regular(h, f));
        }
        if let Some(c) = self.conj {
            m = RepModule::conjugate(h, c, &m);
        }
        m
    }

    /// Degree of the module in the grading group.
    pub fn degree<F: Field>(&self, h: &QuasiTuraevCoalgebra<F>) -> Elem {
        let g = h.group();
        let d = self.factors.iter().fold(g.identity(), |acc, &f| g.mul(acc, f));
        self.conj.map_or(d, |c| g.conj(c, d))
    }
}

impl fmt::Display for ModuleDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| format!("H{x}")).collect();
        match self.conj {
            None => write!(f, "{}", parts.join("*")),
            Some(c) => write!(f, "^{c}({})", parts.join("*")),
        }
    }
}

/// The test family: all regular modules, then all left-nested tensor
/// products of regular modules up to `depth` factors, in lexicographic order.
pub fn test_family(n: usize, depth: usize) -> Vec<ModuleDesc> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Elem>> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for f in &layer {
            for l in 0..n {
                let mut g = f.clone();
                g.push(l);
                next.push(g);
            }
        }
        out.extend(next.iter().map(|f| ModuleDesc::plain(f.clone())));
        layer = next;
    }
    out
}
