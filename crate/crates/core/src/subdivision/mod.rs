//! Triangulations of simplicial complexes, each carried as a pair of
//! complexes plus an explicit carrier map from faces of the subdivision to
//! faces of the base.

mod cliques;
mod constructions;
pub mod io;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

pub use constructions::{antiprism, barycentric, edgewise, stellar};

use crate::complex::{translate_face, Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Triangulation {
    kind: String,
    base: SimplicialComplex,
    total: SimplicialComplex,
    carrier: HashMap<Face, Face>,
}

impl Triangulation {
    /// Assembles a triangulation whose carrier is the union of the vertex
    /// carriers, which is the rule for every construction in this module.
    pub(crate) fn from_vertex_carriers(
        kind: impl Into<String>,
        base: SimplicialComplex,
        total: SimplicialComplex,
        vertex_carrier: &HashMap<VertexId, Face>,
    ) -> Self {
        let carrier = total
            .faces()
            .map(|f| {
                let c = f
                    .iter()
                    .fold(Face::empty(), |acc, v| acc.union(&vertex_carrier[v]));
                (f.clone(), c)
            })
            .collect();
        Triangulation {
            kind: kind.into(),
            base,
            total,
            carrier,
        }
    }

    /// Builds a triangulation from an explicit carrier map on every face of
    /// `total`, checking that the map is a valid carrier.
    pub fn new(
        kind: impl Into<String>,
        base: SimplicialComplex,
        total: SimplicialComplex,
        carrier: HashMap<Face, Face>,
    ) -> Result<Self> {
        let t = Triangulation {
            kind: kind.into(),
            base,
            total,
            carrier,
        };
        t.check_carrier()?;
        Ok(t)
    }

    /// `Δ` as a triangulation of itself.
    pub fn identity(base: &SimplicialComplex) -> Self {
        let carrier = base.faces().map(|f| (f.clone(), f.clone())).collect();
        Triangulation {
            kind: "id".into(),
            base: base.clone(),
            total: base.clone(),
            carrier,
        }
    }

    /// Short descriptor of the construction, e.g. `sd` or `esd3`.
    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    /// Carrier of a face of the subdivision, in the base's vertex ids.
    pub fn carrier(&self, face: &Face) -> Option<&Face> {
        self.carrier.get(face)
    }

    pub fn carrier_map(&self) -> &HashMap<Face, Face> {
        &self.carrier
    }

    /// The triangulation `Δ'_F` of the simplex `2^F`: all faces whose carrier
    /// lies in `F`.
    pub fn restriction(&self, face: &Face) -> Result<Triangulation> {
        if !self.base.contains_face(face) {
            return Err(Error::NotAFace(self.base.face_label(face)));
        }
        let carrier: HashMap<Face, Face> = self
            .carrier
            .iter()
            .filter(|(_, c)| c.is_subset(face))
            .map(|(f, c)| (f.clone(), c.clone()))
            .collect();
        let total =
            SimplicialComplex::from_face_family(carrier.keys().cloned(), self.total.labels_arc().clone());
        Ok(Triangulation {
            kind: format!("{}|{}", self.kind, self.base.face_label(face)),
            base: SimplicialComplex::simplex_on(face.clone(), self.base.labels_arc().clone()),
            total,
            carrier,
        })
    }

    /// Faces of the subdivision whose carrier is exactly `face`.
    pub fn faces_carried_by(&self, face: &Face) -> Vec<Face> {
        let mut out: Vec<Face> =
            self.carrier.iter().filter(|(_, c)| *c == face).map(|(f, _)| f.clone()).collect();
        out.sort_unstable();
        out
    }

    /// Checks that the carrier is defined on exactly the faces of the total
    /// complex, lands in the base, is monotone, contains the vertex carriers,
    /// and that each restriction looks like a triangulated simplex.
    pub fn check_carrier(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCarrier(msg));
        if self.carrier.len() != self.total.num_faces() {
            return bad(format!(
                "{} carrier entries for {} faces",
                self.carrier.len(),
                self.total.num_faces()
            ));
        }
        for f in self.total.faces() {
            let Some(c) = self.carrier.get(f) else {
                return bad(format!("no carrier for {}", self.total.face_label(f)));
            };
            if !self.base.contains_face(c) {
                return bad(format!("carrier {} is not a base face", self.base.face_label(c)));
            }
            for r in f.ridges() {
                if !self.carrier[&r].is_subset(c) {
                    return bad(format!("not monotone at {}", self.total.face_label(f)));
                }
            }
            let vertex_union =
                f.iter().fold(Face::empty(), |acc, &v| acc.union(&self.carrier[&Face::vertex(v)]));
            if !vertex_union.is_subset(c) {
                return bad(format!("carrier of {} misses a vertex carrier", self.total.face_label(f)));
            }
        }
        for face in self.base.faces() {
            let sub = self.restriction(face)?;
            let t = &sub.total;
            if face.is_empty() {
                if !t.is_empty_complex() {
                    return bad("restriction to the empty face is not {∅}".into());
                }
                continue;
            }
            let euler: i64 = t
                .f_vector()
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 0 { -(c as i64) } else { c as i64 })
                .sum();
            if !t.is_pure() || t.rank() != face.len() || euler != 0 {
                return bad(format!(
                    "restriction to {} is not a triangulated simplex",
                    self.base.face_label(face)
                ));
            }
            if face.len() == 1 && t.num_vertices() != 1 {
                return bad(format!("vertex {} is subdivided", self.base.face_label(face)));
            }
        }
        Ok(())
    }

    /// Agreement up to the choice of vertex ids on both sides.
    pub fn same_as(&self, other: &Triangulation) -> bool {
        self.base == other.base
            && self.total == other.total
            && self.labelled_carrier() == other.labelled_carrier()
    }

    fn labelled_carrier(&self) -> BTreeMap<String, String> {
        self.carrier
            .iter()
            .map(|(f, c)| (sorted_label(&self.total, f), sorted_label(&self.base, c)))
            .collect()
    }
}

fn sorted_label(c: &SimplicialComplex, f: &Face) -> String {
    let mut l: Vec<&str> = f.iter().map(|&v| c.labels().label(v)).collect();
    l.sort_unstable();
    l.join(" ")
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangulation({} of {} into {} facets)", self.kind, self.base, self.total.facets().len())
    }
}

/// `outer` triangulates `inner.total()`; the result triangulates
/// `inner.base()` with carrier `inner ∘ outer`.
pub fn compose(outer: &Triangulation, inner: &Triangulation) -> Result<Triangulation> {
    if outer.base != inner.total {
        return Err(Error::CompositionMismatch(format!(
            "outer base {} differs from inner total {}",
            outer.base, inner.total
        )));
    }
    let same_ids = Arc::ptr_eq(outer.base.labels_arc(), inner.total.labels_arc())
        || outer.base.labels() == inner.total.labels();
    let carrier = outer
        .carrier
        .iter()
        .map(|(f, c)| {
            let c = if same_ids {
                c.clone()
            } else {
                translate_face(c, outer.base.labels(), inner.total.labels())?
            };
            Ok((f.clone(), inner.carrier[&c].clone()))
        })
        .collect::<Result<HashMap<_, _>>>()?;
    Ok(Triangulation {
        kind: format!("{}∘{}", outer.kind, inner.kind),
        base: inner.base.clone(),
        total: outer.total.clone(),
        carrier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generators::*;

    #[test]
    fn identity_carrier() {
        let t = Triangulation::identity(&cross_polytope_boundary(3));
        t.check_carrier().unwrap();
        assert_eq!(t.total(), t.base());
    }

    #[test]
    fn restriction_of_barycentric_is_local() {
        let t = barycentric(&simplex(3));
        let e = t.base().face_from_labels(&["a", "b"]).unwrap();
        let r = t.restriction(&e).unwrap();
        assert_eq!(r.total().facets().len(), 2);
        assert_eq!(r.total().num_vertices(), 3);
        let sd_edge = barycentric(&simplex(2));
        assert_eq!(r.total().labelled_facets(), sd_edge.total().labelled_facets());
        assert!(t.restriction(&Face::empty()).unwrap().total().is_empty_complex());
        assert!(t.restriction(&Face::vertex(7)).is_err());
    }

    #[test]
    fn restriction_of_antiprism_is_local() {
        let t = antiprism(&simplex(3));
        let e = t.base().face_from_labels(&["a", "b"]).unwrap();
        let r = t.restriction(&e).unwrap();
        assert_eq!(r.total().labelled_facets(), antiprism(&simplex(2)).total().labelled_facets());
    }

    #[test]
    fn carriers_partition_faces() {
        for t in [barycentric(&cycle(4)), antiprism(&simplex(3)), edgewise(&simplex(3), 3).unwrap()] {
            let total: usize = t.base().faces().map(|f| t.faces_carried_by(f).len()).sum();
            assert_eq!(total, t.total().num_faces());
        }
    }

    #[test]
    fn composition() {
        let inner = barycentric(&simplex(2));
        let outer = barycentric(inner.total());
        let c = compose(&outer, &inner).unwrap();
        c.check_carrier().unwrap();
        assert_eq!(c.total().num_vertices(), 5);
        assert_eq!(c.total().facets().len(), 4);

        let t = stellar(&simplex(3), &Face::from_sorted(vec![0, 1, 2]), "o").unwrap();
        assert!(compose(&Triangulation::identity(t.total()), &t).unwrap().same_as(&t));
        assert!(matches!(compose(&t, &t), Err(Error::CompositionMismatch(_))));

        let outer = barycentric(t.total());
        compose(&outer, &t).unwrap().check_carrier().unwrap();
    }

    #[test]
    fn rejects_bad_carriers() {
        let base = simplex(2);
        let mut carrier: HashMap<Face, Face> = base.faces().map(|f| (f.clone(), f.clone())).collect();
        carrier.insert(Face::from_sorted(vec![0, 1]), Face::vertex(0));
        assert!(matches!(
            Triangulation::new("bad", base.clone(), base, carrier),
            Err(Error::InvalidCarrier(_))
        ));
    }
}
