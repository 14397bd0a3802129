use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex identifier, an index into a [`LabelTable`](super::LabelTable).
pub type VertexId = u32;

/// A face: a strictly increasing sequence of vertex ids. The empty sequence is
/// the empty face.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<VertexId>);

impl Face {
    /// Sorts the given vertices; repeated vertices are rejected.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedFace(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Face(vertices))
    }

    /// Caller guarantees the input is strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: VertexId) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, `|F| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Face(out)
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn with(&self, v: VertexId) -> Face {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Face(out)
    }

    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// All `2^|F|` subsets, the empty face first.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        assert!(n < 32, "face too large for subset enumeration");
        (0u32..(1u32 << n)).map(move |mask| {
            Face((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
        })
    }

    /// Subsets of a fixed cardinality.
    pub fn subsets_of_size(&self, k: usize) -> impl Iterator<Item = Face> + '_ {
        use itertools::Itertools;
        self.0.iter().copied().combinations(k).map(Face)
    }

    /// The codimension-one faces `F \ {v}`.
    pub fn ridges(&self) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().map(move |&v| self.without(v))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexId> {
        self.0.iter()
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl<'a> IntoIterator for &'a Face {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<VertexId> for Face {
    /// Collects, sorts and deduplicates.
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_repeated_vertices() {
        assert!(matches!(Face::new(vec![2, 1, 2]), Err(Error::MalformedFace(_))));
        assert_eq!(Face::new(vec![3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
    }

    #[test]
    fn subset_and_set_ops() {
        let a = Face::new(vec![1, 3]).unwrap();
        let b = Face::new(vec![0, 1, 2, 3]).unwrap();
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(Face::empty().is_subset(&a));
        assert!(!Face::new(vec![1, 4]).unwrap().is_subset(&b));
        assert_eq!(a.union(&Face::new(vec![2]).unwrap()).vertices(), &[1, 2, 3]);
        assert_eq!(b.difference(&a).vertices(), &[0, 2]);
        assert_eq!(b.intersection(&a), a);
        assert_eq!(b.subsets().count(), 16);
        assert_eq!(b.subsets_of_size(2).count(), 6);
        assert_eq!(Face::empty().dim(), -1);
    }
}
