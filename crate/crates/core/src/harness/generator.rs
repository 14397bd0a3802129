//! Seeded random instances. Instance `i` of a generator is drawn from its own
//! ChaCha stream, so any subset of indices can be produced in any order (or
//! in parallel) with the same result.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::generators::{cross_polytope_boundary, cycle};
use crate::complex::{Face, LabelTable, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::boundary_subcomplex;
use crate::par;
use crate::subdivision::stellar;

pub const MAX_DIM: usize = 3;
pub const MAX_VERTICES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceClass {
    /// Shellable balls grown facet by facet along boundary ridges.
    Ball,
    /// A grown ball closed off by the cone over its boundary.
    Sphere,
    /// Shellable complexes without the pseudomanifold restriction.
    CohenMacaulay,
    /// Cross-polytope boundaries (or cycles) after random edge subdivisions.
    FlagSphere,
    /// A flag sphere with one vertex deleted.
    FlagBall,
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InstanceClass::Ball => "ball",
            InstanceClass::Sphere => "sphere",
            InstanceClass::CohenMacaulay => "cm",
            InstanceClass::FlagSphere => "flag-sphere",
            InstanceClass::FlagBall => "flag-ball",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub complex: SimplicialComplex,
    /// Facets in the order they were added, for grown complexes. Every
    /// prefix of a grown ball's shelling is again a ball.
    pub shelling: Vec<Face>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceGenerator {
    seed: u64,
    class: InstanceClass,
    dim: usize,
    max_vertices: usize,
}

impl InstanceGenerator {
    pub fn new(seed: u64, class: InstanceClass, dim: usize, max_vertices: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::OutOfRange(format!("dimension {dim} outside 1..={MAX_DIM}")));
        }
        if max_vertices > MAX_VERTICES || max_vertices < dim + 2 {
            return Err(Error::OutOfRange(format!(
                "vertex budget {max_vertices} outside {}..={MAX_VERTICES}",
                dim + 2
            )));
        }
        Ok(InstanceGenerator {
            seed,
            class,
            dim,
            max_vertices,
        })
    }

    pub fn class(&self) -> InstanceClass {
        self.class
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    pub fn instance(&self, index: u64) -> Instance {
        let mut rng = self.rng(index);
        let name = format!("{}-d{}-s{}-i{}", self.class, self.dim, self.seed, index);
        let (complex, shelling) = match self.class {
            InstanceClass::Ball => grow(&mut rng, self.dim, self.max_vertices, true),
            InstanceClass::CohenMacaulay => grow(&mut rng, self.dim, self.max_vertices, false),
            InstanceClass::Sphere => {
                let (ball, _) = grow(&mut rng, self.dim, self.max_vertices - 1, true);
                let cap = boundary_subcomplex(&ball).expect("grown balls are pure").cone("w").expect("fresh");
                (ball.union(&cap), Vec::new())
            }
            InstanceClass::FlagSphere => (flag_sphere(&mut rng, self.dim, self.max_vertices), Vec::new()),
            InstanceClass::FlagBall => {
                let sphere = flag_sphere(&mut rng, self.dim, self.max_vertices);
                let v = *sphere.vertices().choose(&mut rng).expect("nonempty");
                let ball = sphere.delete_vertex(v);
                let name = format!("{name}-del-{}", sphere.labels().label(v));
                return Instance {
                    name,
                    complex: ball,
                    shelling: Vec::new(),
                };
            }
        };
        Instance {
            name,
            complex,
            shelling,
        }
    }

    /// Instances `0..count`, in index order.
    pub fn take(&self, count: u64) -> Vec<Instance> {
        let indices: Vec<u64> = (0..count).collect();
        par::map(&indices, |&i| self.instance(i))
    }
}

/// Grows a shellable complex of dimension `dim`. Each step attaches a new
/// facet along a nonempty proper union of its ridges that is exactly its
/// intersection with the complex so far. With `ball` set, those ridges must
/// be boundary ridges, which keeps the result a ball.
fn grow(rng: &mut ChaCha8Rng, dim: usize, max_vertices: usize, ball: bool) -> (SimplicialComplex, Vec<Face>) {
    let labels: Vec<String> = (0..max_vertices).map(|i| format!("v{i}")).collect();
    let table = Arc::new(LabelTable::from_labels(labels));
    let first = Face::from_sorted((0..=dim as u32).collect());
    let mut next_vertex = dim as u32 + 1;
    let mut facets = vec![first.clone()];
    let mut faces: HashSet<Face> = first.subsets().collect();
    let mut ridge_count: HashMap<Face, usize> = first.ridges().map(|r| (r, 1)).collect();
    let target = rng.random_range(2..=3 * max_vertices);
    let mut attempts = 0;
    while facets.len() < target && attempts < 40 * target {
        attempts += 1;
        let open: Vec<&Face> = ridge_count
            .iter()
            .filter(|(_, &c)| !ball || c == 1)
            .map(|(r, _)| r)
            .collect();
        let mut open: Vec<Face> = open.into_iter().cloned().collect();
        open.sort_unstable();
        let Some(ridge) = open.choose(rng).cloned() else {
            break;
        };
        let fresh = (next_vertex as usize) < max_vertices && rng.random_bool(0.5);
        let w = if fresh {
            next_vertex
        } else {
            rng.random_range(0..next_vertex)
        };
        if ridge.contains(w) {
            continue;
        }
        let g = ridge.with(w);
        if faces.contains(&g) {
            continue;
        }
        let present: Vec<Face> = g.ridges().filter(|r| faces.contains(r)).collect();
        if ball && (present.len() == g.len() || present.iter().any(|r| ridge_count[r] != 1)) {
            continue;
        }
        let shelling_step = g
            .subsets()
            .filter(|s| s.len() < g.len() && faces.contains(s))
            .all(|s| present.iter().any(|r| s.is_subset(r)));
        if !shelling_step {
            continue;
        }
        if fresh {
            next_vertex += 1;
        }
        for r in g.ridges() {
            *ridge_count.entry(r).or_default() += 1;
        }
        faces.extend(g.subsets());
        facets.push(g);
    }
    let complex = SimplicialComplex::from_facets(facets.clone(), table);
    (complex, facets)
}

/// Flag spheres: a cycle in dimension 1, otherwise the cross-polytope
/// boundary, followed by stellar subdivisions of random edges (which
/// preserve flagness) while the vertex budget allows.
fn flag_sphere(rng: &mut ChaCha8Rng, dim: usize, max_vertices: usize) -> SimplicialComplex {
    if dim == 1 {
        return cycle(rng.random_range(4..=max_vertices));
    }
    let mut sphere = cross_polytope_boundary(dim + 1);
    let steps = rng.random_range(0..=max_vertices.saturating_sub(sphere.num_vertices()));
    for i in 0..steps {
        let edges = sphere.faces_of_size(2);
        let e = edges.choose(rng).expect("spheres of dim >= 1 have edges").clone();
        sphere = stellar(&sphere, &e, &format!("s{i}")).expect("edge of the sphere").total().clone();
    }
    sphere
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{is_cohen_macaulay, is_homology_ball, is_homology_sphere};
    use crate::FieldChoice;

    const Q: FieldChoice = FieldChoice::Rational;

    #[test]
    fn deterministic_streams() {
        let g = InstanceGenerator::new(7, InstanceClass::Ball, 2, 9).unwrap();
        let a = g.take(4);
        let b: Vec<Instance> = (0..4).rev().map(|i| g.instance(i)).collect();
        for (x, y) in a.iter().zip(b.iter().rev()) {
            assert_eq!(x.complex, y.complex);
            assert_eq!(x.name, y.name);
        }
        assert!(InstanceGenerator::new(1, InstanceClass::Ball, 4, 9).is_err());
        assert!(InstanceGenerator::new(1, InstanceClass::Ball, 2, 13).is_err());
    }

    #[test]
    fn classes_are_what_they_claim() {
        for dim in 1..=3 {
            for (class, check) in [
                (InstanceClass::Ball, 0),
                (InstanceClass::Sphere, 1),
                (InstanceClass::CohenMacaulay, 2),
                (InstanceClass::FlagSphere, 3),
                (InstanceClass::FlagBall, 4),
            ] {
                let g = InstanceGenerator::new(3, class, dim, 10).unwrap();
                for inst in g.take(3) {
                    let c = &inst.complex;
                    assert!(c.num_vertices() <= 10, "{}", inst.name);
                    assert_eq!(c.dim(), Some(dim as isize), "{}", inst.name);
                    let ok = match check {
                        0 => is_homology_ball(c, Q).is_some(),
                        1 => is_homology_sphere(c, Q),
                        2 => is_cohen_macaulay(c, Q),
                        3 => is_homology_sphere(c, Q) && c.is_flag(),
                        _ => is_homology_ball(c, Q).is_some() && c.is_flag(),
                    };
                    assert!(ok, "{} is not a {class}", inst.name);
                }
            }
        }
    }

    #[test]
    fn shelling_prefixes_are_balls() {
        let g = InstanceGenerator::new(11, InstanceClass::Ball, 2, 9).unwrap();
        let inst = g.instance(0);
        for k in 1..=inst.shelling.len() {
            let prefix =
                SimplicialComplex::from_facets(inst.shelling[..k].to_vec(), inst.complex.labels_arc().clone());
            assert!(is_homology_ball(&prefix, Q).is_some());
        }
    }
}
