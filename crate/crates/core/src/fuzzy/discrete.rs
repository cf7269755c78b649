use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Pointwise combination rules for finite fuzzy sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    /// Probabilistic sum `a + b - ab`.
    AlgebraicSum,
    AlgebraicProduct,
    /// `min(a, 1 - b)`.
    Difference,
}

impl SetOp {
    fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            SetOp::Union => a.max(b),
            SetOp::Intersection => a.min(b),
            SetOp::AlgebraicSum => a + b - a * b,
            SetOp::AlgebraicProduct => a * b,
            SetOp::Difference => a.min(1.0 - b),
        }
    }
}

/// Finite fuzzy set: labels with membership grades in `[0, 1]`.
/// Labels that are absent read as grade 0.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteFuzzySet<K: Ord> {
    entries: BTreeMap<K, f64>,
}

impl<K: Ord + Clone> DiscreteFuzzySet<K> {
    pub fn new<I: IntoIterator<Item = (K, f64)>>(entries: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, g) in entries {
            if !(0.0..=1.0).contains(&g) {
                return Err(Error::Parameter(format!("membership grade {g} outside [0, 1]")));
            }
            map.insert(k, g);
        }
        Ok(DiscreteFuzzySet { entries: map })
    }

    pub fn empty() -> Self {
        DiscreteFuzzySet { entries: BTreeMap::new() }
    }

    pub fn grade(&self, k: &K) -> f64 {
        self.entries.get(k).copied().unwrap_or(0.0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&K, f64)> {
        self.entries.iter().map(|(k, g)| (k, *g))
    }

    pub fn universe(&self) -> BTreeSet<K> {
        self.entries.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Combines over the union of both key sets.
    pub fn combine(&self, other: &Self, op: SetOp) -> Self {
        let keys: BTreeSet<&K> = self.entries.keys().chain(other.entries.keys()).collect();
        let entries = keys
            .into_iter()
            .map(|k| (k.clone(), op.apply(self.grade(k), other.grade(k)).clamp(0.0, 1.0)))
            .collect();
        DiscreteFuzzySet { entries }
    }

    pub fn complement(&self) -> Self {
        DiscreteFuzzySet {
            entries: self.entries.iter().map(|(k, g)| (k.clone(), 1.0 - g)).collect(),
        }
    }

    /// `{x : mu(x) >= alpha}`, or `> alpha` when `strict`.
    pub fn alpha_cut(&self, alpha: f64, strict: bool) -> BTreeSet<K> {
        self.entries
            .iter()
            .filter(|(_, &g)| if strict { g > alpha } else { g >= alpha })
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn cartesian<L: Ord + Clone>(&self, other: &DiscreteFuzzySet<L>) -> DiscreteFuzzySet<(K, L)> {
        let mut entries = BTreeMap::new();
        for (a, ga) in &self.entries {
            for (b, gb) in &other.entries {
                entries.insert((a.clone(), b.clone()), ga.min(*gb));
            }
        }
        DiscreteFuzzySet { entries }
    }

    /// Sigma-count: the sum of grades.
    pub fn cardinality(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Restates the set over `universe`, filling absent labels with grade 0.
    pub fn over(&self, universe: &BTreeSet<K>) -> Self {
        DiscreteFuzzySet {
            entries: universe.iter().map(|k| (k.clone(), self.grade(k))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> DiscreteFuzzySet<&'static str> {
        DiscreteFuzzySet::new([("x", 0.3), ("y", 1.0), ("z", 0.6)]).unwrap()
    }

    fn ages() -> (DiscreteFuzzySet<u32>, DiscreteFuzzySet<u32>) {
        let young = DiscreteFuzzySet::new([
            (10, 1.0),
            (20, 0.8),
            (30, 0.6),
            (40, 0.2),
            (50, 0.1),
            (60, 0.0),
            (70, 0.0),
        ])
        .unwrap();
        let old = DiscreteFuzzySet::new([
            (10, 0.0),
            (20, 0.1),
            (30, 0.3),
            (40, 0.5),
            (50, 0.7),
            (60, 0.9),
            (70, 1.0),
        ])
        .unwrap();
        (young, old)
    }

    #[test]
    fn union_is_idempotent() {
        let a = abc();
        assert_eq!(a.combine(&a, SetOp::Union), a);
    }

    #[test]
    fn young_or_old_at_thirty() {
        let (young, old) = ages();
        let u = young.combine(&old, SetOp::Union);
        assert_eq!(u.grade(&30), 0.6);
        let i = young.combine(&old, SetOp::Intersection);
        assert_eq!(i.grade(&30), 0.3);
    }

    #[test]
    fn intersection_with_empty() {
        let a = abc();
        let i = a.combine(&DiscreteFuzzySet::empty(), SetOp::Intersection);
        assert!(i.entries().all(|(_, g)| g == 0.0));
        assert_eq!(i.len(), 3);
    }

    #[test]
    fn other_ops() {
        let a = DiscreteFuzzySet::new([("x", 0.5)]).unwrap();
        let b = DiscreteFuzzySet::new([("x", 0.4)]).unwrap();
        assert!((a.combine(&b, SetOp::AlgebraicSum).grade(&"x") - 0.7).abs() < 1e-15);
        assert!((a.combine(&b, SetOp::AlgebraicProduct).grade(&"x") - 0.2).abs() < 1e-15);
        assert_eq!(a.combine(&b, SetOp::Difference).grade(&"x"), 0.5);
    }

    #[test]
    fn complement_and_involution() {
        let a = DiscreteFuzzySet::new([("x", 0.3)]).unwrap();
        assert!((a.complement().grade(&"x") - 0.7).abs() < 1e-15);
        let b = abc();
        let back = b.complement().complement();
        for (k, g) in b.entries() {
            assert!((back.grade(k) - g).abs() < 1e-15);
        }
        // |A| + |not A| = |X|
        assert!((b.cardinality() + b.complement().cardinality() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_cuts() {
        let a = abc();
        assert_eq!(a.alpha_cut(0.6, false), ["y", "z"].into_iter().collect());
        assert_eq!(a.alpha_cut(0.6, true), ["y"].into_iter().collect());
        assert_eq!(a.alpha_cut(0.7, false), ["y"].into_iter().collect());
        assert_eq!(a.alpha_cut(0.0, false), a.universe());
    }

    #[test]
    fn cartesian_product() {
        let a = DiscreteFuzzySet::new([("x", 0.7), ("y", 0.5), ("z", 1.0)]).unwrap();
        let b = DiscreteFuzzySet::new([("alpha", 0.7), ("beta", 0.4)]).unwrap();
        let p = a.cartesian(&b);
        assert_eq!(p.grade(&("x", "alpha")), 0.7);
        assert_eq!(p.grade(&("x", "beta")), 0.4);
        assert_eq!(p.grade(&("y", "alpha")), 0.5);
        assert_eq!(p.grade(&("y", "beta")), 0.4);
        assert_eq!(p.grade(&("z", "alpha")), 0.7);
        assert_eq!(p.grade(&("z", "beta")), 0.4);

        let ones = DiscreteFuzzySet::new([("u", 1.0)]).unwrap();
        let q = a.cartesian(&ones);
        for (k, g) in a.entries() {
            assert_eq!(q.grade(&(*k, "u")), g);
        }
        let zero = DiscreteFuzzySet::new([("u", 0.0)]).unwrap();
        assert!(a.cartesian(&zero).entries().all(|(_, g)| g == 0.0));
    }

    #[test]
    fn cardinality() {
        assert!((abc().cardinality() - 1.9).abs() < 1e-15);
        assert_eq!(DiscreteFuzzySet::<u8>::empty().cardinality(), 0.0);
    }

    #[test]
    fn rejects_out_of_range_grade() {
        assert!(DiscreteFuzzySet::new([("x", 1.5)]).is_err());
    }
}
