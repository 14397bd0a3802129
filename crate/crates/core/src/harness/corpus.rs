//! The fixed corpus of base complexes and the triangulations applied to them.

use crate::complex::generators::*;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::subdivision::{antiprism, barycentric, compose, edgewise, stellar, Triangulation};

#[derive(Clone, Debug)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

impl<T> Named<T> {
    pub fn new(name: impl Into<String>, value: T) -> Self {
        Named { name: name.into(), value }
    }
}

/// A label not yet used by `complex`, starting from `stem`.
pub fn fresh_label(complex: &SimplicialComplex, stem: &str) -> String {
    let mut label = stem.to_string();
    let mut i = 0;
    while complex.labels().id(&label).is_some() {
        i += 1;
        label = format!("{stem}{i}");
    }
    label
}

/// Simplices and simplex boundaries, the octahedron, paths, cycles, cones,
/// the two worked example balls and a non-Cohen-Macaulay pair of triangles,
/// restricted to dimension at most `max_dim`.
pub fn bases(max_dim: usize) -> Vec<Named<SimplicialComplex>> {
    let octahedron = cross_polytope_boundary(3);
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(Named::new(format!("simplex({n})"), simplex(n)));
    }
    for n in 3..=5 {
        out.push(Named::new(format!("boundary_simplex({n})"), boundary_simplex(n)));
    }
    out.push(Named::new("octahedron", octahedron.clone()));
    out.push(Named::new("path(2)", path(2)));
    out.push(Named::new("path(3)", path(3)));
    out.push(Named::new("cycle(4)", cycle(4)));
    out.push(Named::new("cycle(5)", cycle(5)));
    out.push(Named::new("cone(cycle(4))", cycle(4).cone("u").expect("fresh apex")));
    out.push(Named::new("cone(octahedron)", octahedron.cone("u").expect("fresh apex")));
    out.push(Named::new("glued_tetrahedra", glued_tetrahedra()));
    out.push(Named::new("example_5_2_ball", example_5_2_ball()));
    out.push(Named::new("example_5_4_ball", example_5_4_ball()));
    out.push(Named::new(
        "bowtie",
        SimplicialComplex::from_labelled(&[vec!["a", "b", "c"], vec!["a", "d", "e"]]).expect("static"),
    ));
    out.retain(|b| b.value.dim().is_some_and(|d| d >= 0 && d as usize <= max_dim));
    out
}

/// The identity, `sd`, antiprism, a stellar subdivision of the first facet,
/// the 2- and 3-fold edgewise subdivisions, and `sd` composed with that
/// stellar subdivision.
pub fn triangulations(base: &SimplicialComplex) -> Result<Vec<Triangulation>> {
    let facet = base.facets()[0].clone();
    let star = stellar(base, &facet, &fresh_label(base, "o"))?;
    let composed = compose(&barycentric(star.total()), &star)?;
    Ok(vec![
        Triangulation::identity(base),
        barycentric(base),
        antiprism(base),
        star,
        edgewise(base, 2)?,
        edgewise(base, 3)?,
        composed,
    ])
}

/// Every corpus triangulation, named `kind(base)`.
pub fn corpus_triangulations(max_dim: usize) -> Result<Vec<Named<Triangulation>>> {
    let mut out = Vec::new();
    for b in bases(max_dim) {
        for t in triangulations(&b.value)? {
            out.push(Named::new(format!("{}({})", t.kind(), b.name), t));
        }
    }
    Ok(out)
}
