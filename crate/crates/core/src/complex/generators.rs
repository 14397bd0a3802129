//! Standard complexes used throughout the crate.

use std::sync::Arc;

use super::{Face, LabelTable, SimplicialComplex};
use crate::subdivision;

/// `a, b, …, z, v26, v27, …`
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

/// The full simplex on the given labels.
pub fn simplex_on<S: AsRef<str>>(labels: &[S]) -> SimplicialComplex {
    let table = LabelTable::from_labels(labels.iter().map(|s| s.as_ref().to_string()));
    let face = Face::from_sorted((0..table.len() as u32).collect());
    SimplicialComplex::simplex_on(face, Arc::new(table))
}

/// The full simplex on `n` vertices labelled `a, b, …`; `n = 0` gives `{∅}`.
pub fn simplex(n: usize) -> SimplicialComplex {
    simplex_on(&default_labels(n))
}

/// Boundary of the simplex on `n` vertices (an `(n-2)`-sphere).
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    let s = simplex(n);
    if n == 0 {
        return SimplicialComplex::void(s.labels_arc().clone());
    }
    let facets = s.facets()[0].ridges().collect();
    SimplicialComplex::from_maximal(facets, s.labels_arc().clone())
}

/// Boundary of the `n`-dimensional cross-polytope, vertices `+i` and `-i`.
pub fn cross_polytope_boundary(n: usize) -> SimplicialComplex {
    let mut table = LabelTable::new();
    let pairs: Vec<(u32, u32)> = (1..=n)
        .map(|i| (table.intern(format!("+{i}")), table.intern(format!("-{i}"))))
        .collect();
    let mut facets = Vec::with_capacity(1 << n);
    for mask in 0u32..(1u32 << n) {
        let ids = pairs
            .iter()
            .enumerate()
            .map(|(i, &(p, m))| if mask & (1 << i) == 0 { p } else { m })
            .collect();
        facets.push(Face::new(ids).expect("distinct antipodes"));
    }
    SimplicialComplex::from_maximal(facets, Arc::new(table))
}

/// Path with `k` edges on vertices `0, 1, …, k`.
pub fn path(k: usize) -> SimplicialComplex {
    let table = LabelTable::from_labels((0..=k).map(|i| i.to_string()));
    let facets = if k == 0 {
        vec![Face::vertex(0)]
    } else {
        (0..k as u32).map(|i| Face::from_sorted(vec![i, i + 1])).collect()
    };
    SimplicialComplex::from_maximal(facets, Arc::new(table))
}

/// Cycle on `k >= 3` vertices `0, …, k-1`.
pub fn cycle(k: usize) -> SimplicialComplex {
    assert!(k >= 3, "a cycle needs at least three vertices");
    let table = LabelTable::from_labels((0..k).map(|i| i.to_string()));
    let facets = (0..k as u32)
        .map(|i| Face::new(vec![i, (i + 1) % k as u32]).expect("k >= 3"))
        .collect();
    SimplicialComplex::from_maximal(facets, Arc::new(table))
}

/// Two tetrahedra `{a,b,c,d}` and `{b,c,d,e}` glued along `{b,c,d}`.
pub fn glued_tetrahedra() -> SimplicialComplex {
    SimplicialComplex::from_labelled(&[vec!["a", "b", "c", "d"], vec!["b", "c", "d", "e"]])
        .expect("static facets")
}

/// Stellar subdivisions of both glued tetrahedra, with new vertices `u` and
/// `v`: a 3-ball with 7 vertices and 8 facets in which every facet has an
/// interior vertex but the boundary is not induced.
pub fn example_5_2_ball() -> SimplicialComplex {
    let gamma = glued_tetrahedra();
    let f = gamma.face_from_labels(&["a", "b", "c", "d"]).expect("face");
    let step = subdivision::stellar(&gamma, &f, "u").expect("stellar on a facet");
    let mid = step.total().clone();
    let g = mid.face_from_labels(&["b", "c", "d", "e"]).expect("face");
    subdivision::stellar(&mid, &g, "v").expect("stellar on a facet").total().clone()
}

/// Two octahedron boundaries glued along a common triangle `{a,b,c}`, each
/// coned over its own apex (`u1`, `u2`): a flag 3-ball with 11 vertices and
/// 16 facets.
pub fn example_5_4_ball() -> SimplicialComplex {
    let octahedron = |tag: &str| {
        let pairs = [("a", format!("a{tag}")), ("b", format!("b{tag}")), ("c", format!("c{tag}"))];
        let mut facets = Vec::new();
        for mask in 0..8u32 {
            let f: Vec<String> = pairs
                .iter()
                .enumerate()
                .map(|(i, (p, q))| if mask & (1 << i) == 0 { p.to_string() } else { q.clone() })
                .collect();
            facets.push(f);
        }
        SimplicialComplex::from_labelled(&facets).expect("octahedron facets")
    };
    let first = octahedron("1").cone("u1").expect("fresh apex");
    let second = octahedron("2").cone("u2").expect("fresh apex");
    first.union(&second)
}
