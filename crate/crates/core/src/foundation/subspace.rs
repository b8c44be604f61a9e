use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use super::lincomb::{LinComb, Scalar};
use super::operator::LinearOperator;

/// A subspace held in fully reduced echelon form.
///
/// Each row is keyed by its pivot, the smallest basis index it contains, with
/// coefficient one there; no row mentions another row's pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<K: Ord> {
    rows: BTreeMap<K, LinComb<K>>,
    /// For every non-pivot index, the pivots of rows containing it.
    users: BTreeMap<K, BTreeSet<K>>,
}

impl<K: Ord + Clone> Default for Subspace<K> {
    fn default() -> Self {
        Subspace { rows: BTreeMap::new(), users: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Subspace<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &LinComb<K>> {
        self.rows.values()
    }

    pub fn row(&self, pivot: &K) -> Option<&LinComb<K>> {
        self.rows.get(pivot)
    }

    /// Residue of `v` modulo the subspace, supported on non-pivot indices.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut out = v.clone();
        for (k, c) in v.iter() {
            if let Some(row) = self.rows.get(k) {
                out.add_scaled(row, &-c.clone());
            }
        }
        out
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        let (pivot, lead) = match r.leading() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return false,
        };
        let row = r.scaled(&(Scalar::one() / lead));
        if let Some(holders) = self.users.remove(&pivot) {
            for h in holders {
                let old = self.rows.remove(&h).expect("row present");
                let c = old.coeff(&pivot);
                let new = {
                    let mut t = old.clone();
                    t.add_scaled(&row, &-c);
                    t
                };
                self.unregister(&h, &old);
                self.register(&h, &new);
                self.rows.insert(h, new);
            }
        }
        self.register(&pivot, &row);
        self.rows.insert(pivot, row);
        true
    }

    fn register(&mut self, pivot: &K, row: &LinComb<K>) {
        for k in row.keys() {
            if k != pivot {
                self.users.entry(k.clone()).or_default().insert(pivot.clone());
            }
        }
    }

    fn unregister(&mut self, pivot: &K, row: &LinComb<K>) {
        for k in row.keys() {
            if k != pivot {
                if let Some(s) = self.users.get_mut(k) {
                    s.remove(pivot);
                    if s.is_empty() {
                        self.users.remove(k);
                    }
                }
            }
        }
    }
}

/// Reduced echelon basis of the span of the given vectors.
pub fn subspace_basis<K: Ord + Clone>(span: &[LinComb<K>]) -> Subspace<K> {
    let mut s = Subspace::new();
    for v in span {
        s.insert(v);
    }
    s
}

/// Projection of `k^dim` along a subspace onto the span of the non-pivot basis
/// vectors, together with the list of those surviving indices.
pub fn quotient_projection(dim: usize, sub: &Subspace<usize>) -> (LinearOperator, Vec<usize>) {
    let images = (0..dim).map(|i| sub.reduce(&LinComb::basis(i))).collect();
    let survivors = (0..dim).filter(|i| !sub.is_pivot(i)).collect();
    (LinearOperator::new(dim, images).expect("indices in range"), survivors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::lincomb::int;
    use proptest::prelude::*;

    fn e(i: usize) -> LinComb<usize> {
        LinComb::basis(i)
    }

    #[test]
    fn rank_examples() {
        let s = subspace_basis(&[e(1).plus(&e(2)), e(1).plus(&e(2)).scaled(&int(2))]);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.rows().next().unwrap(), &e(1).plus(&e(2)));
        assert_eq!(subspace_basis::<usize>(&[]).rank(), 0);
        assert_eq!(subspace_basis(&[e(1), e(2), e(1).plus(&e(2))]).rank(), 2);
    }

    #[test]
    fn projection_examples() {
        let (p, nf) = quotient_projection(2, &subspace_basis(&[e(0)]));
        assert!(p.apply(&e(0)).is_zero());
        assert_eq!(p.apply(&e(1)), e(1));
        assert_eq!(nf, vec![1]);
        let (p, _) = quotient_projection(2, &subspace_basis(&[e(0).plus(&e(1))]));
        assert_eq!(p.apply(&e(0)), e(1).neg());
        let (p, _) = quotient_projection(3, &Subspace::new());
        assert!(p.is_identity());
    }

    fn vector() -> impl Strategy<Value = LinComb<usize>> {
        prop::collection::vec((0usize..6, -3i64..4), 0..5)
            .prop_map(|t| LinComb::from_terms(t.into_iter().map(|(k, c)| (k, int(c)))))
    }

    proptest! {
        #[test]
        fn projection_is_idempotent_with_exact_kernel(span in prop::collection::vec(vector(), 0..5), probe in vector()) {
            let s = subspace_basis(&span);
            let (p, _) = quotient_projection(6, &s);
            let once = p.apply(&probe);
            prop_assert_eq!(p.apply(&once), once.clone());
            for v in &span {
                prop_assert!(p.apply(v).is_zero());
            }
            prop_assert!(s.contains(&probe.minus(&once)));
        }

        #[test]
        fn reduction_is_idempotent(span in prop::collection::vec(vector(), 0..6)) {
            let s = subspace_basis(&span);
            let rows: Vec<_> = s.rows().cloned().collect();
            let again = subspace_basis(&rows);
            prop_assert_eq!(again, s);
        }

        #[test]
        fn rows_are_fully_reduced(span in prop::collection::vec(vector(), 0..6)) {
            let s = subspace_basis(&span);
            for (piv, row) in s.rows.iter() {
                prop_assert_eq!(row.leading().map(|(k, c)| (*k, c.clone())), Some((*piv, int(1))));
                for k in row.keys() {
                    prop_assert!(k == piv || !s.is_pivot(k));
                }
            }
        }
    }
}
