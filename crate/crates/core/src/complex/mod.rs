//! Finite abstract simplicial complexes stored by their facets.
//!
//! A complex is a lexicographically sorted list of inclusion-maximal faces
//! over a shared [`LabelTable`]. Two degenerate values are distinguished: the
//! void complex (no faces at all, an empty facet list) and the empty complex
//! `{∅}` (a single facet, the empty face). Full face enumeration is computed
//! lazily and cached.

mod face;
pub mod generators;
pub mod io;
mod label;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use face::{Face, VertexId};
pub use label::LabelTable;

use crate::error::{Error, Result};

#[derive(Debug, Default)]
struct FaceCache {
    by_size: Vec<Vec<Face>>,
    index: HashSet<Face>,
}

#[derive(Clone)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    labels: Arc<LabelTable>,
    cache: OnceLock<Arc<FaceCache>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`, discarding non-maximal ones.
    /// An empty list gives the void complex; `[∅]` gives the empty complex.
    pub fn from_facets(facets: Vec<Face>, labels: Arc<LabelTable>) -> Self {
        Self::from_maximal(maximal_faces(facets), labels)
    }

    /// Caller guarantees no facet contains another.
    pub(crate) fn from_maximal(mut facets: Vec<Face>, labels: Arc<LabelTable>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        debug_assert!(is_antichain(&facets));
        Self {
            facets,
            labels,
            cache: OnceLock::new(),
        }
    }

    /// Builds a complex from facets given by vertex labels. Labels are
    /// assigned ids in order of first appearance.
    pub fn from_labelled<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut table = LabelTable::new();
        let mut out = Vec::with_capacity(facets.len());
        for f in facets {
            let ids = f.iter().map(|l| table.intern(l.as_ref())).collect();
            out.push(Face::new(ids)?);
        }
        Ok(Self::from_facets(out, Arc::new(table)))
    }

    pub fn void(labels: Arc<LabelTable>) -> Self {
        Self::from_maximal(Vec::new(), labels)
    }

    pub fn empty(labels: Arc<LabelTable>) -> Self {
        Self::from_maximal(vec![Face::empty()], labels)
    }

    /// The full simplex `2^F`.
    pub fn simplex_on(face: Face, labels: Arc<LabelTable>) -> Self {
        Self::from_maximal(vec![face], labels)
    }

    /// Complex generated by a downward-closed family of faces.
    pub(crate) fn from_face_family<I: IntoIterator<Item = Face>>(
        faces: I,
        labels: Arc<LabelTable>,
    ) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().collect();
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let present: HashSet<&Face> = faces.iter().collect();
        let covered: HashSet<Face> = faces
            .iter()
            .flat_map(|f| f.ridges().collect::<Vec<_>>())
            .filter(|r| present.contains(r))
            .collect();
        let maximal = faces.iter().filter(|f| !covered.contains(*f)).cloned().collect();
        Self::from_maximal(maximal, labels)
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn labels(&self) -> &LabelTable {
        &self.labels
    }

    pub fn labels_arc(&self) -> &Arc<LabelTable> {
        &self.labels
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension, `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(Face::dim).max()
    }

    /// `dim + 1`, the exponent window of the h-polynomial; 0 for VOID and EMPTY.
    pub fn rank(&self) -> usize {
        self.facets.iter().map(Face::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.facets.iter().flat_map(|f| f.iter().copied()).collect();
        set.into_iter().collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.faces_of_size(1).len()
    }

    fn cache(&self) -> &FaceCache {
        self.cache.get_or_init(|| {
            let mut index: HashSet<Face> = HashSet::new();
            for f in &self.facets {
                for s in f.subsets() {
                    index.insert(s);
                }
            }
            let mut by_size = vec![Vec::new(); self.rank() + usize::from(!self.is_void())];
            for f in &index {
                by_size[f.len()].push(f.clone());
            }
            for level in &mut by_size {
                level.sort_unstable();
            }
            Arc::new(FaceCache { by_size, index })
        })
    }

    /// All faces of cardinality `k`, sorted.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.cache().by_size.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All faces, by increasing cardinality, the empty face first.
    pub fn faces(&self) -> impl Iterator<Item = &Face> + '_ {
        self.cache().by_size.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.cache().index.len()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.cache().index.contains(face)
    }

    /// `(f_{-1}, f_0, …, f_{n-1})`; the void complex has the empty f-vector.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cache().by_size.iter().map(Vec::len).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Face::len).collect::<BTreeSet<_>>().len() <= 1
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(f))
    }

    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(self.face_label(face)));
        }
        let facets = self
            .facets
            .iter()
            .filter(|g| face.is_subset(g))
            .map(|g| g.difference(face))
            .collect();
        Ok(Self::from_maximal(facets, self.labels.clone()))
    }

    /// The faces of `self` contained in the vertex set `w`.
    pub fn induced(&self, w: &Face) -> SimplicialComplex {
        let facets = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_facets(facets, self.labels.clone())
    }

    /// Faces containing `face` (the open star).
    pub fn faces_containing<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.faces().filter(move |g| face.is_subset(g))
    }

    /// The antistar of `v`: all faces not containing `v`.
    pub fn delete_vertex(&self, v: VertexId) -> SimplicialComplex {
        let facets = self.facets.iter().map(|f| f.without(v)).collect();
        Self::from_facets(facets, self.labels.clone())
    }

    /// True iff every minimal non-face has two elements.
    pub fn is_flag(&self) -> bool {
        let vertices = self.vertices();
        for k in 2..=self.rank() + 1 {
            for g in self.faces_of_size(k - 1) {
                let last = g.vertices().last().copied();
                for &v in &vertices {
                    if last.is_some_and(|l| v <= l) {
                        continue;
                    }
                    let candidate = g.with(v);
                    if self.contains_face(&candidate) {
                        continue;
                    }
                    if k >= 3 && candidate.ridges().all(|r| self.contains_face(&r)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The cone `Δ ∪ {F ∪ {v}}` over a fresh vertex labelled `apex`.
    pub fn cone(&self, apex: &str) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::Void);
        }
        if let Some(id) = self.labels.id(apex) {
            if self.vertices().contains(&id) {
                return Err(Error::VertexExists(apex.to_string()));
            }
        }
        let mut table = (*self.labels).clone();
        let v = table.intern(apex);
        let facets = self.facets.iter().map(|f| f.with(v)).collect();
        Ok(Self::from_maximal(facets, Arc::new(table)))
    }

    /// Union of two complexes, matching vertices by label.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut table = (*self.labels).clone();
        let mut facets = self.facets.clone();
        for f in &other.facets {
            let ids = f.iter().map(|&v| table.intern(other.labels.label(v))).collect();
            facets.push(Face::new(ids).expect("relabelling preserves distinctness"));
        }
        Self::from_facets(facets, Arc::new(table))
    }

    /// Re-expresses the complex over `target`'s ids, matching by label.
    pub fn relabel_into(&self, target: &Arc<LabelTable>) -> Result<SimplicialComplex> {
        if Arc::ptr_eq(&self.labels, target) {
            return Ok(self.clone());
        }
        let facets = self
            .facets
            .iter()
            .map(|f| translate_face(f, &self.labels, target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_maximal(facets, target.clone()))
    }

    /// `induced(Δ, vertices(Γ)) == Γ`, with `self` as Γ.
    pub fn is_induced_subcomplex(&self, delta: &SimplicialComplex) -> Result<bool> {
        let gamma = self.relabel_into(&delta.labels)?;
        if !gamma.is_subcomplex_of(delta) {
            return Err(Error::NotASubcomplex(gamma.to_string()));
        }
        if gamma.is_void() {
            return Ok(false);
        }
        let w: Face = gamma.vertices().into_iter().collect();
        Ok(delta.induced(&w) == gamma)
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let ids = labels
            .iter()
            .map(|l| {
                self.labels
                    .id(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Face::new(ids)
    }

    pub fn vertex_id(&self, label: &str) -> Result<VertexId> {
        self.labels.id(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// `{a,b,c}` rendering of a face using vertex labels.
    pub fn face_label(&self, face: &Face) -> String {
        format_face(face, &self.labels)
    }

    /// Facets as sorted label lists; equal for complexes that agree up to the
    /// choice of vertex ids.
    pub fn labelled_facets(&self) -> BTreeSet<Vec<String>> {
        self.facets
            .iter()
            .map(|f| {
                let mut l: Vec<String> =
                    f.iter().map(|&v| self.labels.label(v).to_string()).collect();
                l.sort();
                l
            })
            .collect()
    }
}

pub(crate) fn format_face(face: &Face, labels: &LabelTable) -> String {
    let parts: Vec<String> = face
        .iter()
        .map(|&v| labels.labels().get(v as usize).cloned().unwrap_or_else(|| format!("#{v}")))
        .collect();
    format!("{{{}}}", parts.join(","))
}

pub(crate) fn translate_face(face: &Face, from: &LabelTable, to: &LabelTable) -> Result<Face> {
    let ids = face
        .iter()
        .map(|&v| {
            let l = from.label(v);
            to.id(l).ok_or_else(|| Error::UnknownVertex(l.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Face::new(ids)
}

/// Inclusion-maximal members of a family of faces.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(k)) {
            kept.push(f);
        }
    }
    kept
}

// Quadratic, so only checked on small inputs.
fn is_antichain(facets: &[Face]) -> bool {
    facets.len() > 2000
        || facets
            .iter()
            .enumerate()
            .all(|(i, f)| facets.iter().enumerate().all(|(j, g)| i == j || !f.is_subset(g)))
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.labels, &other.labels) || *self.labels == *other.labels {
            self.facets == other.facets
        } else {
            self.labelled_facets() == other.labelled_facets()
        }
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex({self})")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "VOID");
        }
        let parts: Vec<String> = self.facets.iter().map(|g| self.face_label(g)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        let v: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_labelled(&v).unwrap()
    }

    #[test]
    fn from_facets_maximalizes() {
        let d = cx(&[&["a", "b", "c"], &["b", "c", "d"]]);
        assert_eq!(d.facets().len(), 2);
        assert_eq!(d.dim(), Some(2));
        let d = cx(&[&["a", "b"], &["a", "b", "c"]]);
        assert_eq!(d.facets().len(), 1);
        assert_eq!(d.facets()[0].len(), 3);
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let t = Arc::new(LabelTable::new());
        let void = SimplicialComplex::void(t.clone());
        let empty = SimplicialComplex::empty(t.clone());
        assert!(void.is_void() && !void.is_empty_complex());
        assert!(empty.is_empty_complex() && !empty.is_void());
        assert_ne!(void, empty);
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(void.f_vector(), Vec::<usize>::new());
        assert_eq!(empty.f_vector(), vec![1]);
        assert!(SimplicialComplex::from_facets(vec![], t).is_void());
    }

    #[test]
    fn duplicate_vertex_is_malformed() {
        let r = SimplicialComplex::from_labelled(&[vec!["a", "a"]]);
        assert!(matches!(r, Err(Error::MalformedFace(_))));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(boundary_simplex(4).f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(cross_polytope_boundary(3).f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(simplex(3).f_vector(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn links() {
        let oct = cross_polytope_boundary(3);
        let v = oct.vertex_id("+1").unwrap();
        let lk = oct.link(&Face::vertex(v)).unwrap();
        assert_eq!(lk.f_vector(), vec![1, 4, 4]);
        assert_eq!(lk.facets().len(), 4);
        assert_eq!(oct.link(&Face::empty()).unwrap(), oct);
        let facet = oct.facets()[0].clone();
        assert!(oct.link(&facet).unwrap().is_empty_complex());
        let bogus = oct.face_from_labels(&["+1", "-1"]).unwrap();
        assert!(matches!(oct.link(&bogus), Err(Error::NotAFace(_))));
    }

    #[test]
    fn induced_subcomplexes() {
        let tri = simplex(3);
        let ab = tri.face_from_labels(&["a", "b"]).unwrap();
        assert_eq!(tri.induced(&ab).facets(), std::slice::from_ref(&ab));
        assert!(tri.induced(&Face::empty()).is_empty_complex());

        let oct = cross_polytope_boundary(3);
        let cyc = oct.face_from_labels(&["+1", "-1", "+2", "-2"]).unwrap();
        let ind = oct.induced(&cyc);
        assert_eq!(ind.f_vector(), vec![1, 4, 4]);
        assert_eq!(oct.induced(&oct.vertices().into_iter().collect()), oct);
    }

    #[test]
    fn induced_subcomplex_predicate() {
        let tri = simplex(3);
        let bd = tri.faces_of_size(2).to_vec();
        let bd = SimplicialComplex::from_facets(bd, tri.labels_arc().clone());
        assert!(!bd.is_induced_subcomplex(&tri).unwrap());
        let not_sub = cx(&[&["a", "z"]]);
        assert!(not_sub.is_induced_subcomplex(&tri).is_err());
    }

    #[test]
    fn flagness() {
        assert!(cross_polytope_boundary(3).is_flag());
        assert!(!boundary_simplex(4).is_flag());
        assert!(!boundary_simplex(3).is_flag());
        assert!(simplex(4).is_flag());
        assert!(cycle(4).is_flag());
        assert!(example_5_4_ball().is_flag());
    }

    #[test]
    fn purity() {
        assert!(simplex(3).is_pure());
        assert!(!cx(&[&["a", "b", "c"], &["c", "d"]]).is_pure());
        assert!(SimplicialComplex::empty(Arc::new(LabelTable::new())).is_pure());
    }

    #[test]
    fn cones() {
        let c = cycle(4).cone("u").unwrap();
        assert_eq!(c.facets().len(), 4);
        assert_eq!(c.dim(), Some(2));
        let p = SimplicialComplex::empty(Arc::new(LabelTable::new())).cone("v").unwrap();
        assert_eq!(p.f_vector(), vec![1, 1]);
        assert!(matches!(cycle(4).cone("0"), Err(Error::VertexExists(_))));
    }

    #[test]
    fn union_and_delete() {
        let t1 = cx(&[&["a", "b", "c", "d"]]);
        let t2 = cx(&[&["b", "c", "d", "e"]]);
        let u = t1.union(&t2);
        assert_eq!(u.facets().len(), 2);
        assert_eq!(u.num_vertices(), 5);

        let oct = cross_polytope_boundary(3);
        let d = oct.delete_vertex(oct.vertex_id("+1").unwrap());
        assert_eq!(d.facets().len(), 4);
        assert_eq!(d.dim(), Some(2));

        let tri = simplex(3);
        let e = tri.delete_vertex(tri.vertex_id("a").unwrap());
        assert_eq!(e.labelled_facets(), cx(&[&["b", "c"]]).labelled_facets());
    }
}
