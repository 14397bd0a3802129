use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use itertools::Itertools;

use super::cliques::maximal_cliques;
use super::Triangulation;
use crate::complex::{format_face, Face, LabelTable, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Barycentric subdivision: vertices are the nonempty faces (labelled
/// `{a,b}`), faces are chains, and a chain is carried by its top element.
pub fn barycentric(base: &SimplicialComplex) -> Triangulation {
    let mut table = LabelTable::new();
    let mut vertex_carrier: HashMap<VertexId, Face> = HashMap::new();
    let mut facets = Vec::new();
    for g in base.facets() {
        for order in g.vertices().iter().permutations(g.len()) {
            let mut chain = Vec::with_capacity(order.len());
            let mut acc = Face::empty();
            for &&v in &order {
                acc = acc.with(v);
                let id = table.intern(format_face(&acc, base.labels()));
                vertex_carrier.entry(id).or_insert_with(|| acc.clone());
                chain.push(id);
            }
            facets.push(Face::new(chain).expect("chain elements are distinct"));
        }
    }
    let total = SimplicialComplex::from_facets(facets, Arc::new(table));
    Triangulation::from_vertex_carriers("sd", base.clone(), total, &vertex_carrier)
}

/// Antiprism triangulation on pointed faces `(F,v)`, labelled `({a,b},a)`.
/// A set of pointed faces is a face when its first components form a chain
/// and each strictly larger member points at a vertex outside the smaller
/// one. The condition is pairwise, so facets are maximal cliques.
pub fn antiprism(base: &SimplicialComplex) -> Triangulation {
    let mut table = LabelTable::new();
    let mut vertex_carrier: HashMap<VertexId, Face> = HashMap::new();
    let mut facets = Vec::new();
    for g in base.facets() {
        let pointed: Vec<(Face, VertexId)> = g
            .subsets()
            .filter(|f| !f.is_empty())
            .flat_map(|f| f.vertices().iter().map(|&v| (f.clone(), v)).collect::<Vec<_>>())
            .collect();
        let ids: Vec<VertexId> = pointed
            .iter()
            .map(|(f, v)| {
                let label = format!("({},{})", format_face(f, base.labels()), base.labels().label(*v));
                let id = table.intern(label);
                vertex_carrier.entry(id).or_insert_with(|| f.clone());
                id
            })
            .collect();
        let compatible = |i: usize, j: usize| {
            let ((f, v), (h, w)) = (&pointed[i], &pointed[j]);
            if f == h {
                v != w
            } else if f.is_subset(h) {
                !f.contains(*w)
            } else if h.is_subset(f) {
                !h.contains(*v)
            } else {
                false
            }
        };
        for clique in maximal_cliques(pointed.len(), compatible) {
            facets.push(Face::new(clique.iter().map(|&i| ids[i]).collect()).expect("distinct"));
        }
    }
    let total = SimplicialComplex::from_facets(facets, Arc::new(table));
    Triangulation::from_vertex_carriers("antiprism", base.clone(), total, &vertex_carrier)
}

/// Stellar subdivision of the face `face` with a new vertex `apex`: faces
/// containing `face` are replaced by `{apex} ∪ E ∪ E'` with `E ⊊ face` and
/// `E'` in the link of `face`. The new vertex is carried by `face`.
pub fn stellar(base: &SimplicialComplex, face: &Face, apex: &str) -> Result<Triangulation> {
    if face.is_empty() {
        return Err(Error::Precondition("stellar subdivision of the empty face".into()));
    }
    if !base.contains_face(face) {
        return Err(Error::NotAFace(base.face_label(face)));
    }
    if base.labels().id(apex).is_some() {
        return Err(Error::VertexExists(apex.to_string()));
    }
    let mut table = base.labels().clone();
    let v = table.intern(apex);
    let mut facets = Vec::new();
    for g in base.facets() {
        if face.is_subset(g) {
            let rest = g.difference(face);
            for r in face.ridges() {
                facets.push(r.union(&rest).with(v));
            }
        } else {
            facets.push(g.clone());
        }
    }
    let mut vertex_carrier: HashMap<VertexId, Face> =
        base.vertices().into_iter().map(|u| (u, Face::vertex(u))).collect();
    vertex_carrier.insert(v, face.clone());
    let total = SimplicialComplex::from_facets(facets, Arc::new(table));
    Ok(Triangulation::from_vertex_carriers("stellar", base.clone(), total, &vertex_carrier))
}

/// The `r`-fold edgewise subdivision with respect to the vertex-id order.
/// Vertices are compositions `α` of `r` supported on a face (labelled
/// `a:2+b:2`). With `ι(α)_j = α_1 + … + α_j`, a set of vertices is a face
/// when every pairwise difference `ι(α) - ι(β)` is a 0/1 vector up to sign.
pub fn edgewise(base: &SimplicialComplex, r: u32) -> Result<Triangulation> {
    if r < 1 {
        return Err(Error::OutOfRange("edgewise subdivision needs r >= 1".into()));
    }
    let mut table = LabelTable::new();
    let mut vertex_carrier: HashMap<VertexId, Face> = HashMap::new();
    let mut facets = BTreeSet::new();
    for g in base.facets() {
        if g.is_empty() {
            facets.insert(Face::empty());
            continue;
        }
        let comps = compositions(r, g.len());
        let ids: Vec<VertexId> = comps
            .iter()
            .map(|c| {
                let support: Vec<VertexId> =
                    g.iter().zip(c).filter(|(_, &k)| k > 0).map(|(&v, _)| v).collect();
                let label = g
                    .iter()
                    .zip(c)
                    .filter(|(_, &k)| k > 0)
                    .map(|(&v, k)| format!("{}:{k}", base.labels().label(v)))
                    .join("+");
                let id = table.intern(label);
                vertex_carrier.entry(id).or_insert_with(|| Face::from_sorted(support));
                id
            })
            .collect();
        let partial: Vec<Vec<i64>> = comps
            .iter()
            .map(|c| c.iter().scan(0i64, |s, &k| {
                *s += k as i64;
                Some(*s)
            }).collect())
            .collect();
        let compatible = |i: usize, j: usize| {
            let d = partial[i].iter().zip(&partial[j]).map(|(a, b)| a - b);
            let (mut pos, mut neg) = (false, false);
            for x in d {
                match x {
                    0 => {}
                    1 => pos = true,
                    -1 => neg = true,
                    _ => return false,
                }
            }
            !(pos && neg)
        };
        for clique in maximal_cliques(comps.len(), compatible) {
            facets.insert(Face::new(clique.iter().map(|&i| ids[i]).collect()).expect("distinct"));
        }
    }
    let total = SimplicialComplex::from_facets(facets.into_iter().collect(), Arc::new(table));
    Ok(Triangulation::from_vertex_carriers(format!("esd{r}"), base.clone(), total, &vertex_carrier))
}

/// Weak compositions of `r` into `k` parts.
fn compositions(r: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![r]];
    }
    (0..=r)
        .rev()
        .flat_map(|first| {
            compositions(r - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generators::*;

    #[test]
    fn barycentric_small() {
        let t = barycentric(&simplex(2));
        assert_eq!(t.total().facets().len(), 2);
        assert_eq!(t.total().num_vertices(), 3);
        let t = barycentric(&simplex(3));
        assert_eq!(t.total().f_vector(), vec![1, 7, 12, 6]);
        t.check_carrier().unwrap();
        assert!(barycentric(&simplex(0)).total().is_empty_complex());
        let top = t.total().vertex_id("{a,b,c}").unwrap();
        assert_eq!(t.carrier(&Face::vertex(top)).unwrap().len(), 3);
    }

    #[test]
    fn antiprism_small() {
        let t = antiprism(&simplex(2));
        let path: Vec<Vec<&str>> = vec![
            vec!["({a},a)", "({a,b},b)"],
            vec!["({a,b},b)", "({a,b},a)"],
            vec!["({a,b},a)", "({b},b)"],
        ];
        assert_eq!(t.total(), &SimplicialComplex::from_labelled(&path).unwrap());
        let t = antiprism(&simplex(3));
        assert_eq!(t.total().num_vertices(), 12);
        assert_eq!(t.total().facets().len(), 13);
        t.check_carrier().unwrap();
        assert_eq!(antiprism(&simplex(1)).total().num_vertices(), 1);
    }

    #[test]
    fn stellar_small() {
        let t = stellar(&simplex(2), &Face::from_sorted(vec![0, 1]), "m").unwrap();
        assert_eq!(t.total().facets().len(), 2);
        let t = stellar(&simplex(3), &Face::from_sorted(vec![0, 1, 2]), "o").unwrap();
        assert_eq!(t.total().f_vector(), vec![1, 4, 6, 3]);
        t.check_carrier().unwrap();
        let o = t.total().vertex_id("o").unwrap();
        let face = Face::new(vec![o, 0]).unwrap();
        assert_eq!(t.carrier(&face).unwrap().len(), 3);
        assert!(stellar(&simplex(3), &Face::empty(), "o").is_err());
        assert!(stellar(&simplex(3), &Face::vertex(0), "a").is_err());
        assert!(stellar(&path(2), &Face::from_sorted(vec![0, 2]), "o").is_err());
    }

    #[test]
    fn edgewise_small() {
        let t = edgewise(&simplex(2), 2).unwrap();
        assert_eq!(t.total().facets().len(), 2);
        let t = edgewise(&simplex(3), 2).unwrap();
        assert_eq!(t.total().facets().len(), 4);
        assert_eq!(t.total().num_vertices(), 6);
        t.check_carrier().unwrap();
        let t = edgewise(&simplex(4), 4).unwrap();
        assert_eq!(t.total().facets().len(), 64);
        assert_eq!(t.total().num_vertices(), 35);
        t.check_carrier().unwrap();
        let id = edgewise(&cycle(5), 1).unwrap();
        assert_eq!(id.total().f_vector(), cycle(5).f_vector());
        assert!(id.total().faces().all(|f| id.carrier(f).unwrap().len() == f.len()));
        assert!(edgewise(&simplex(2), 0).is_err());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 4).len(), 35);
        assert_eq!(compositions(2, 1), vec![vec![2]]);
    }
}
