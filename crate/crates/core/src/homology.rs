//! Reduced simplicial homology over a field, and the link-homology
//! classifications built on it: Cohen-Macaulay, Cohen-Macaulay*, homology
//! spheres and homology balls.
//!
//! Ranks of boundary maps are computed by sparse row reduction. Over the
//! rationals the reduction is fraction-free on integers, first in `i64` with
//! overflow checks and, if that overflows, again with big integers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    #[default]
    Rational,
    /// Prime field. Homology may differ from the rational one on complexes
    /// with torsion.
    Prime(u64),
}

impl FieldChoice {
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&p) || !(2..).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::OutOfRange(format!("{p} is not a prime below 2^32")));
        }
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "Q"),
            FieldChoice::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Order in which rows and columns enter the elimination.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EliminationOrder {
    #[default]
    Forward,
    Reverse,
}

/// Reduced Betti numbers `b_{-1}, b_0, …, b_{dim}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    betti: Vec<usize>,
}

impl HomologyProfile {
    /// `b_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.betti.get(k).copied()).unwrap_or(0)
    }

    /// Betti numbers starting at dimension -1.
    pub fn as_slice(&self) -> &[usize] {
        &self.betti
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// Homology of a `d`-sphere: `b_d = 1`, all others zero.
    pub fn is_sphere_like(&self, d: isize) -> bool {
        self.get(d) == 1 && self.betti.iter().sum::<usize>() == 1
    }

    /// `b_i = 0` for every `i < d`.
    pub fn vanishes_below(&self, d: isize) -> bool {
        (-1..d).all(|i| self.get(i) == 0)
    }
}

pub fn betti(complex: &SimplicialComplex, field: FieldChoice) -> HomologyProfile {
    betti_with_order(complex, field, EliminationOrder::Forward)
}

/// Reduced Betti numbers. The void complex has no homology at all and gets
/// the empty profile.
pub fn betti_with_order(
    complex: &SimplicialComplex,
    field: FieldChoice,
    order: EliminationOrder,
) -> HomologyProfile {
    if complex.is_void() {
        return HomologyProfile::default();
    }
    let top = complex.rank();
    // ranks[s] = rank of the boundary map out of faces of size s
    let mut ranks = vec![0usize; top + 2];
    #[allow(clippy::needless_range_loop)]
    for s in 1..=top {
        let lower: HashMap<&Face, u32> = complex
            .faces_of_size(s - 1)
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i as u32))
            .collect();
        let width = lower.len() as u32;
        let mut rows: Vec<Vec<(u32, i64)>> = complex
            .faces_of_size(s)
            .iter()
            .map(|f| {
                let mut row: Vec<(u32, i64)> = f
                    .ridges()
                    .enumerate()
                    .map(|(i, r)| {
                        let col = lower[&r];
                        let col = match order {
                            EliminationOrder::Forward => col,
                            EliminationOrder::Reverse => width - 1 - col,
                        };
                        (col, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        if order == EliminationOrder::Reverse {
            rows.reverse();
        }
        ranks[s] = match field {
            FieldChoice::Rational => rank_over_rationals(&rows),
            FieldChoice::Prime(p) => rank_mod_p(&rows, p),
        };
    }
    let betti = (0..=top)
        .map(|s| complex.faces_of_size(s).len() - ranks[s] - ranks[s + 1])
        .collect();
    HomologyProfile { betti }
}

fn rank_over_rationals(rows: &[Vec<(u32, i64)>]) -> usize {
    if let Some(r) = rank_fraction_free::<i64>(rows) {
        return r;
    }
    rank_fraction_free::<BigInt>(rows).expect("big integers do not overflow")
}

/// Incremental sparse echelon form; each new row is reduced against stored
/// pivots by `row <- a·row - b·pivot` and divided by its content. Returns
/// `None` on overflow of `T`.
fn rank_fraction_free<T>(rows: &[Vec<(u32, i64)>]) -> Option<usize>
where
    T: Integer + Clone + Signed + CheckedMul + CheckedSub + From<i64>,
{
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for raw in rows {
        let mut row: Vec<(u32, T)> = raw.iter().map(|&(c, v)| (c, T::from(v))).collect();
        while let Some((lead_col, lead)) = row.first().cloned() {
            let Some(pivot) = pivots.get(&lead_col) else {
                break;
            };
            let a = pivot[0].1.clone();
            row = combine(&row, &a, pivot, &lead)?;
            normalize_content(&mut row);
        }
        if let Some(&(c, _)) = row.first() {
            pivots.insert(c, row);
        }
    }
    Some(pivots.len())
}

/// `a·row - b·pivot`, dropping zeros; both inputs sorted by column.
fn combine<T>(row: &[(u32, T)], a: &T, pivot: &[(u32, T)], b: &T) -> Option<Vec<(u32, T)>>
where
    T: Integer + Clone + CheckedMul + CheckedSub,
{
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, value) = if take_row {
            let v = row[i].1.checked_mul(a)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_pivot {
            let v = T::zero().checked_sub(&pivot[j].1.checked_mul(b)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = row[i].1.checked_mul(a)?.checked_sub(&pivot[j].1.checked_mul(b)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    Some(out)
}

fn normalize_content<T: Integer + Clone + Signed>(row: &mut [(u32, T)]) {
    let g = row.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

fn rank_mod_p(rows: &[Vec<(u32, i64)>], p: u64) -> usize {
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let inv = |a: u64| pow_mod(a, p - 2, p);
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for raw in rows {
        let mut row: Vec<(u32, u64)> =
            raw.iter().map(|&(c, v)| (c, reduce(v))).filter(|e| e.1 != 0).collect();
        while let Some(&(lead_col, lead)) = row.first() {
            let Some(pivot) = pivots.get(&lead_col) else {
                break;
            };
            // pivots are monic
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                if j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
                    out.push(row[i]);
                    i += 1;
                } else {
                    let sub = (pivot[j].1 as u128 * lead as u128 % p as u128) as u64;
                    let (col, base) = if i < row.len() && row[i].0 == pivot[j].0 {
                        i += 1;
                        (row[i - 1].0, row[i - 1].1)
                    } else {
                        (pivot[j].0, 0)
                    };
                    j += 1;
                    let v = (base + p - sub) % p;
                    if v != 0 {
                        out.push((col, v));
                    }
                }
            }
            row = out;
        }
        if let Some(&(c, lead)) = row.first() {
            let li = inv(lead);
            for e in row.iter_mut() {
                e.1 = (e.1 as u128 * li as u128 % p as u128) as u64;
            }
            pivots.insert(c, row);
        }
    }
    pivots.len()
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn link_dim(link: &SimplicialComplex) -> isize {
    link.dim().expect("links of faces are not void")
}

/// Reisner's condition: `H̃_i(lk F) = 0` for all faces `F` and `i < dim lk F`.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldChoice) -> bool {
    if complex.is_void() {
        return false;
    }
    let faces: Vec<&Face> = complex.faces().collect();
    par::all(&faces, |f| {
        let lk = complex.link(f).expect("face of the complex");
        betti(&lk, field).vanishes_below(link_dim(&lk))
    })
}

/// Cohen-Macaulay, and still Cohen-Macaulay of the same dimension after
/// deleting any single facet (keeping its proper faces).
pub fn is_cohen_macaulay_star(complex: &SimplicialComplex, field: FieldChoice) -> Result<bool> {
    if !is_cohen_macaulay(complex, field) {
        return Err(Error::NotCohenMacaulay);
    }
    let dim = complex.dim();
    Ok(complex.facets().iter().all(|g| {
        let remaining = delete_facet(complex, g);
        remaining.dim() == dim && is_cohen_macaulay(&remaining, field)
    }))
}

/// The complex with the single face `facet` removed.
pub fn delete_facet(complex: &SimplicialComplex, facet: &Face) -> SimplicialComplex {
    let mut facets: Vec<Face> = complex.facets().iter().filter(|f| *f != facet).cloned().collect();
    if facet.is_empty() {
        return SimplicialComplex::void(complex.labels_arc().clone());
    }
    facets.extend(facet.ridges());
    SimplicialComplex::from_facets(facets, complex.labels_arc().clone())
}

/// The subcomplex generated by the ridges lying in exactly one facet. The
/// empty complex has the void boundary.
pub fn boundary_subcomplex(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    if complex.is_void() {
        return Err(Error::Void);
    }
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let labels = complex.labels_arc().clone();
    if complex.is_empty_complex() {
        return Ok(SimplicialComplex::void(labels));
    }
    let mut counts: HashMap<Face, usize> = HashMap::new();
    for f in complex.facets() {
        for r in f.ridges() {
            *counts.entry(r).or_default() += 1;
        }
    }
    let ridges = counts.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
    Ok(SimplicialComplex::from_maximal(ridges, labels))
}

/// Every link has the homology of a sphere of its own dimension.
pub fn is_homology_sphere(complex: &SimplicialComplex, field: FieldChoice) -> bool {
    if complex.is_void() {
        return false;
    }
    let faces: Vec<&Face> = complex.faces().collect();
    par::all(&faces, |f| {
        let lk = complex.link(f).expect("face of the complex");
        betti(&lk, field).is_sphere_like(link_dim(&lk))
    })
}

/// Checks both defining conditions of a homology ball against the
/// combinatorial boundary candidate and returns that boundary on success.
/// The empty complex counts as a ball with void boundary.
pub fn is_homology_ball(complex: &SimplicialComplex, field: FieldChoice) -> Option<SimplicialComplex> {
    if complex.is_void() || !complex.is_pure() {
        return None;
    }
    let boundary = boundary_subcomplex(complex).ok()?;
    if complex.is_empty_complex() {
        return Some(boundary);
    }
    let n = complex.rank() as isize;
    if boundary.dim() != Some(n - 2) || !is_homology_sphere(&boundary, field) {
        return None;
    }
    let faces: Vec<&Face> = complex.faces().collect();
    let ok = par::all(&faces, |f| {
        let lk = complex.link(f).expect("face of the complex");
        let h = betti(&lk, field);
        if boundary.contains_face(f) {
            h.is_acyclic()
        } else {
            h.is_sphere_like(link_dim(&lk))
        }
    });
    ok.then_some(boundary)
}

/// A complex whose homology-ball structure has been verified, together with
/// its boundary.
#[derive(Clone, Debug)]
pub struct VerifiedBall {
    complex: SimplicialComplex,
    boundary: SimplicialComplex,
}

impl VerifiedBall {
    pub fn verify(complex: &SimplicialComplex, field: FieldChoice) -> Result<Self> {
        match is_homology_ball(complex, field) {
            Some(boundary) => Ok(VerifiedBall {
                complex: complex.clone(),
                boundary,
            }),
            None => Err(Error::NotABall(truncated(complex))),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn boundary(&self) -> &SimplicialComplex {
        &self.boundary
    }

    /// `dim + 1`.
    pub fn rank(&self) -> usize {
        self.complex.rank()
    }

    pub fn interior_faces(&self) -> Vec<Face> {
        interior_faces(&self.complex, &self.boundary)
    }

    pub fn interior_vertices(&self) -> Vec<u32> {
        self.complex
            .vertices()
            .into_iter()
            .filter(|&v| !self.boundary.contains_face(&Face::vertex(v)))
            .collect()
    }

    pub fn has_interior_vertex_property(&self) -> bool {
        has_interior_vertex_property(&self.complex, &self.boundary)
    }
}

fn truncated(c: &SimplicialComplex) -> String {
    let s = c.to_string();
    if s.len() > 120 {
        format!("{}…", &s[..s.char_indices().nth(120).map_or(s.len(), |(i, _)| i)])
    } else {
        s
    }
}

/// `Δ \ ∂Δ`.
pub fn interior_faces(complex: &SimplicialComplex, boundary: &SimplicialComplex) -> Vec<Face> {
    complex.faces().filter(|f| !boundary.contains_face(f)).cloned().collect()
}

/// Every facet has a vertex off the boundary.
pub fn has_interior_vertex_property(complex: &SimplicialComplex, boundary: &SimplicialComplex) -> bool {
    complex
        .facets()
        .iter()
        .all(|f| f.iter().any(|&v| !boundary.contains_face(&Face::vertex(v))))
}

/// For balls `inner ⊆ outer` of equal dimension: no facet of `outer` has all
/// its vertices in `∂inner ∪ ∂outer`.
pub fn no_facet_on_union_boundaries(outer: &VerifiedBall, inner: &VerifiedBall) -> Result<bool> {
    let labels = outer.complex.labels_arc();
    let inner_complex = inner.complex.relabel_into(labels)?;
    let inner_boundary = inner.boundary.relabel_into(labels)?;
    if !inner_complex.is_subcomplex_of(&outer.complex) {
        return Err(Error::NotASubcomplex("inner ball is not contained in the outer ball".into()));
    }
    if inner_complex.dim() != outer.complex.dim() {
        return Err(Error::Precondition("balls of different dimensions".into()));
    }
    let on_boundary = |v: u32| {
        let f = Face::vertex(v);
        inner_boundary.contains_face(&f) || outer.boundary.contains_face(&f)
    };
    Ok(outer.complex.facets().iter().all(|f| !f.iter().all(|&v| on_boundary(v))))
}
