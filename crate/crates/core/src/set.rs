//! Canonical sorted vertex sets.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Vertex identifier. Valid vertices are positive; `0` is rejected by the
/// structural validators.
pub type Vertex = u32;

/// A set of vertices kept strictly increasing, so equality and ordering are
/// structural. The derived `Ord` is lexicographic on the sorted content,
/// which is the tie-break order used throughout the crate.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(alloc::vec![v])
    }

    /// `{1, ..., d}`.
    pub fn range(d: usize) -> Self {
        VertexSet((1..=d as Vertex).collect())
    }

    /// Builds a set from a vector that is already strictly increasing.
    /// Returns `None` otherwise.
    pub fn from_sorted(ids: Vec<Vertex>) -> Option<Self> {
        if ids.windows(2).all(|w| w[0] < w[1]) {
            Some(VertexSet(ids))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &v in &self.0 {
            for &w in it.by_ref() {
                match w.cmp(&v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.merge(other, true, true, true)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.merge(other, false, true, false)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.merge(other, true, false, false)
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.merge(other, true, false, true)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// Copy of the set with `v` added.
    pub fn with(&self, v: Vertex) -> VertexSet {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut ids = self.0.clone();
                ids.insert(pos, v);
                VertexSet(ids)
            }
        }
    }

    /// Copy of the set with `v` removed.
    pub fn without(&self, v: Vertex) -> VertexSet {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                let mut ids = self.0.clone();
                ids.remove(pos);
                VertexSet(ids)
            }
            Err(_) => self.clone(),
        }
    }

    /// Returns the single element, if the set has exactly one.
    pub fn only(&self) -> Option<Vertex> {
        match self.0.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    fn merge(&self, other: &VertexSet, left: bool, both: bool, right: bool) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    if left {
                        out.push(a[i]);
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    if right {
                        out.push(b[j]);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    if both {
                        out.push(a[i]);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        if left {
            out.extend_from_slice(&a[i..]);
        }
        if right {
            out.extend_from_slice(&b[j..]);
        }
        VertexSet(out)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut ids: Vec<Vertex> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(ids: [Vertex; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl From<&[Vertex]> for VertexSet {
    fn from(ids: &[Vertex]) -> Self {
        ids.iter().copied().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = core::iter::Copied<core::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let s: VertexSet = [3, 1, 2, 3].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(alloc::format!("{s}"), "{1,2,3}");
        assert!(VertexSet::from_sorted(alloc::vec![1, 1]).is_none());
        assert_eq!(VertexSet::range(3), s);
    }

    #[test]
    fn lexicographic_order() {
        let a: VertexSet = [1, 2, 4, 7].into();
        let b: VertexSet = [1, 2, 3, 5].into();
        let c: VertexSet = [1, 3, 4, 6].into();
        let mut v = alloc::vec![c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, alloc::vec![b, a, c]);
    }

    fn model(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    proptest! {
        #[test]
        fn operations_match_btreeset(a in proptest::collection::vec(1u32..20, 0..10),
                                     b in proptest::collection::vec(1u32..20, 0..10)) {
            let (sa, sb): (VertexSet, VertexSet) = (a.iter().copied().collect(), b.iter().copied().collect());
            let (ma, mb) = (model(&a), model(&b));
            let as_vec = |s: BTreeSet<u32>| s.into_iter().collect::<alloc::vec::Vec<_>>();
            prop_assert_eq!(sa.union(&sb).as_slice().to_vec(), as_vec(&ma | &mb));
            prop_assert_eq!(sa.intersection(&sb).as_slice().to_vec(), as_vec(&ma & &mb));
            prop_assert_eq!(sa.difference(&sb).as_slice().to_vec(), as_vec(&ma - &mb));
            prop_assert_eq!(sa.symmetric_difference(&sb).as_slice().to_vec(), as_vec(&ma ^ &mb));
            prop_assert_eq!(sa.is_subset(&sb), ma.is_subset(&mb));
            prop_assert_eq!(sa.intersection_len(&sb), (&ma & &mb).len());
        }
    }
}
