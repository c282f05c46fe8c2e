//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

/// Element of a [`FinGroup`], an index into its table.
pub type Elem = usize;

/// A finite group as an `n x n` table of element indices (row-major,
/// `table[a * n + b] = a * b`) with a distinguished identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverses: Vec<Elem>,
}

/// A group axiom that failed, with the first offending witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDefect {
    Shape { expected: usize, got: usize },
    Closure { a: Elem, b: Elem, product: usize },
    Identity { element: Elem },
    Inverse { element: Elem },
    Associativity { a: Elem, b: Elem, c: Elem },
}

impl std::fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupDefect::Shape { expected, got } => write!(f, "table has {got} entries, expected {expected}"),
            GroupDefect::Closure { a, b, product } => write!(f, "{a}*{b} = {product} is out of range"),
            GroupDefect::Identity { element } => write!(f, "identity fails on element {element}"),
            GroupDefect::Inverse { element } => write!(f, "element {element} has no inverse"),
            GroupDefect::Associativity { a, b, c } => write!(f, "({a}*{b})*{c} != {a}*({b}*{c})"),
        }
    }
}

/// Brute-force check of the group axioms: closure, identity, inverses and
/// associativity over all `n^3` triples. Returns every failed axiom with its
/// first witness in index order.
pub fn validate_group(order: usize, table: &[usize], identity: usize) -> Vec<GroupDefect> {
    let n = order;
    if table.len() != n * n {
        return vec![GroupDefect::Shape { expected: n * n, got: table.len() }];
    }
    let mut defects = Vec::new();
    if let Some(i) = table.iter().position(|&x| x >= n) {
        defects.push(GroupDefect::Closure { a: i / n, b: i % n, product: table[i] });
        return defects;
    }
    if identity >= n {
        defects.push(GroupDefect::Identity { element: identity });
        return defects;
    }
    let mul = |a: usize, b: usize| table[a * n + b];
    if let Some(a) = (0..n).find(|&a| mul(identity, a) != a || mul(a, identity) != a) {
        defects.push(GroupDefect::Identity { element: a });
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| mul(a, b) == identity && mul(b, a) == identity)) {
        defects.push(GroupDefect::Inverse { element: a });
    }
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    defects.push(GroupDefect::Associativity { a, b, c });
                    break 'outer;
                }
            }
        }
    }
    defects
}

impl FinGroup {
    /// Build a group from a table, validating all axioms.
    pub fn from_table(order: usize, table: Vec<Elem>, identity: Elem) -> Result<Self> {
        let defects = validate_group(order, &table, identity);
        if let Some(d) = defects.first() {
            return Err(Error::InvalidGroup(d.to_string()));
        }
        let inverses = (0..order)
            .map(|a| (0..order).find(|&b| table[a * order + b] == identity).expect("validated"))
            .collect();
        Ok(FinGroup { order, table, identity, inverses })
    }

    /// Cyclic group `Z_n` with elements `0..n` and addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_table(n, table, 0).expect("cyclic table")
    }

    /// Direct product `G x H`; element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FinGroup, h: &FinGroup) -> Self {
        let n = g.order * h.order;
        let split = |x: usize| (x / h.order, x % h.order);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (ga, ha) = split(a);
                let (gb, hb) = split(b);
                table.push(g.mul(ga, gb) * h.order + h.mul(ha, hb));
            }
        }
        Self::from_table(n, table, g.identity * h.order + h.identity).expect("product table")
    }

    /// Symmetric group on three letters. Elements are the permutations of
    /// `[0, 1, 2]` in lexicographic order of their one-line notation, so
    /// index 0 is the identity; composition is `(a * b)(i) = a(b(i))`.
    pub fn symmetric3() -> Self {
        let perms = permutations3();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = Vec::with_capacity(36);
        for a in &perms {
            for b in &perms {
                table.push(idx([a[b[0]], a[b[1]], a[b[2]]]));
            }
        }
        Self::from_table(6, table, 0).expect("S3 table")
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    /// `b a b^{-1}`.
    #[inline]
    pub fn conj(&self, b: Elem, a: Elem) -> Elem {
        self.mul(self.mul(b, a), self.inv(b))
    }

    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checked variants for user-supplied indices.
    pub fn checked(&self, a: Elem) -> Result<Elem> {
        if a < self.order {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange { index: a, bound: self.order })
        }
    }

    pub fn try_inv(&self, a: Elem) -> Result<Elem> {
        Ok(self.inv(self.checked(a)?))
    }

    pub fn try_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(self.checked(a)?, self.checked(b)?))
    }

    pub fn try_conj(&self, b: Elem, a: Elem) -> Result<Elem> {
        Ok(self.conj(self.checked(b)?, self.checked(a)?))
    }
}

fn permutations3() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn z2_passes() {
        assert!(validate_group(2, &[0, 1, 1, 0], 0).is_empty());
    }

    #[test]
    fn missing_inverse_reported() {
        let d = validate_group(2, &[0, 1, 1, 1], 0);
        assert!(d.contains(&GroupDefect::Inverse { element: 1 }));
    }

    #[test]
    fn shape_and_closure() {
        assert_eq!(validate_group(2, &[0, 1, 1], 0), vec![GroupDefect::Shape { expected: 4, got: 3 }]);
        assert!(matches!(validate_group(2, &[0, 1, 1, 5], 0)[0], GroupDefect::Closure { a: 1, b: 1, .. }));
    }

    #[test]
    fn nonassociative_table_reported() {
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let t = [
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let d = validate_group(5, &t, 0);
        assert!(d.iter().any(|x| matches!(x, GroupDefect::Associativity { .. })));
    }

    #[test]
    fn s3_from_permutations() {
        let g = FinGroup::symmetric3();
        assert!(validate_group(6, g.table(), 0).is_empty());
        assert!(!g.is_abelian());
        // One-line notation of the two 3-cycles.
        let perms = permutations3();
        let cycles: Vec<usize> = (0..6).filter(|&i| perms[i] == [1, 2, 0] || perms[i] == [2, 0, 1]).collect();
        let transposition = perms.iter().position(|p| *p == [1, 0, 2]).unwrap();
        assert_eq!(g.conj(transposition, cycles[0]), cycles[1]);
        assert_eq!(g.conj(transposition, cycles[1]), cycles[0]);
    }

    #[test]
    fn navigation_basics() {
        let z2 = FinGroup::cyclic(2);
        assert_eq!(z2.inv(1), 1);
        let z4 = FinGroup::cyclic(4);
        assert_eq!(z4.inv(1), 3);
        assert!(matches!(z4.try_inv(7), Err(Error::IndexOutOfRange { index: 7, bound: 4 })));
        let p = FinGroup::direct_product(&z2, &FinGroup::symmetric3());
        assert_eq!(p.order(), 12);
        assert!(!p.is_abelian());
    }

    fn groups() -> Vec<FinGroup> {
        vec![
            FinGroup::trivial(),
            FinGroup::cyclic(2),
            FinGroup::cyclic(4),
            FinGroup::symmetric3(),
            FinGroup::direct_product(&FinGroup::cyclic(2), &FinGroup::cyclic(2)),
        ]
    }

    proptest! {
        #[test]
        fn conjugation_is_an_action(gi in 0usize..5, a in 0usize..12, b in 0usize..12, c in 0usize..12) {
            let g = &groups()[gi];
            let n = g.order();
            let (a, b, c) = (a % n, b % n, c % n);
            prop_assert_eq!(g.conj(b, g.conj(c, a)), g.conj(g.mul(b, c), a));
            prop_assert_eq!(g.conj(g.identity(), a), a);
            prop_assert_eq!(g.inv(g.inv(a)), a);
            prop_assert_eq!(g.mul(g.inv(a), a), g.identity());
        }
    }

    #[test]
    fn conjugation_is_bijective() {
        for g in groups() {
            for b in g.elements() {
                let mut img: Vec<_> = g.elements().map(|a| g.conj(b, a)).collect();
                img.sort();
                assert_eq!(img, g.elements().collect::<Vec<_>>());
            }
        }
    }
}
