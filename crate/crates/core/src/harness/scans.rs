//! Scans over families of instances, oracles for the closed forms, and the
//! pairs of nested balls used by the monotonicity checks.

use itertools::Itertools;
use num_bigint::BigInt;

use super::checks::verify_monotonicity_c;
use super::corpus::{fresh_label, Named};
use super::generator::Instance;
use super::report::{CheckKind, VerificationReport};
use crate::complex::{Face, SimplicialComplex};
use crate::error::Result;
use crate::homology::{FieldChoice, VerifiedBall};
use crate::invariants::{theta, theta_of};
use crate::poly::{is_real_rooted, IntPoly};
use crate::subdivision::{antiprism, stellar};
use crate::{complex::generators::simplex, par};

/// `Σ x^{exc(w)}` over derangements `w` of `[n]`, by enumeration.
pub fn excedance_derangement_poly(n: usize) -> IntPoly {
    let mut counts = vec![BigInt::from(0); n + 1];
    for w in (0..n).permutations(n) {
        if w.iter().enumerate().any(|(i, &j)| i == j) {
            continue;
        }
        let exc = w.iter().enumerate().filter(|&(i, &j)| j > i).count();
        counts[exc] += 1;
    }
    if n == 0 {
        counts[0] = BigInt::from(1);
    }
    IntPoly::new(counts)
}

/// Names of the homology balls in `candidates` whose theta polynomial is
/// zero. Candidates that are not balls are skipped.
pub fn scan_theta_zero(candidates: &[Named<SimplicialComplex>], field: FieldChoice) -> Vec<String> {
    let hits = par::map(candidates, |c| theta_of(&c.value, field).is_ok_and(|t| t.is_zero()));
    candidates.iter().zip(hits).filter(|(_, z)| *z).map(|(c, _)| c.name.clone()).collect()
}

/// `θ(sd_A(2^V))` for `|V| = m` and whether its roots are all real.
pub fn antiprism_theta(m: usize, field: FieldChoice) -> Result<(IntPoly, bool)> {
    let t = antiprism(&simplex(m));
    let th = theta_of(t.total(), field)?;
    let real = is_real_rooted(&th);
    Ok((th, real))
}

/// A grown ball with every facet stellarly subdivided, in shelling order.
/// Returns the subdivided ball and the new vertex of each facet.
fn subdivide_every_facet(instance: &Instance) -> Result<(SimplicialComplex, Vec<u32>)> {
    let mut current = instance.complex.clone();
    let mut apexes = Vec::with_capacity(instance.shelling.len());
    for f in &instance.shelling {
        let label = fresh_label(&current, "c");
        current = stellar(&current, f, &label)?.total().clone();
        apexes.push(current.vertex_id(&label).expect("just added"));
    }
    Ok((current, apexes))
}

fn facets_containing_any(complex: &SimplicialComplex, vertices: &[u32]) -> SimplicialComplex {
    let facets: Vec<Face> = complex
        .facets()
        .iter()
        .filter(|f| vertices.iter().any(|&v| f.contains(v)))
        .cloned()
        .collect();
    SimplicialComplex::from_facets(facets, complex.labels_arc().clone())
}

fn prefix_lengths(m: usize) -> Vec<usize> {
    let mut ks = vec![1, m.div_ceil(2), m];
    ks.dedup();
    ks
}

/// Nested balls `Δ ⊆ Δ'` with `Δ'` the grown ball with every facet
/// subdivided and `Δ` the part over a shelling prefix. Every facet of `Δ'`
/// has its new vertex in the interior, so the hypothesis of the
/// monotonicity theorem for subcomplexes always holds.
pub fn nested_ball_reports(instance: &Instance, field: FieldChoice) -> Vec<VerificationReport> {
    let run = || -> Result<Vec<VerificationReport>> {
        let (outer, apexes) = subdivide_every_facet(instance)?;
        let outer = VerifiedBall::verify(&outer, field)?;
        let mut out = Vec::new();
        for k in prefix_lengths(apexes.len()) {
            let inner = VerifiedBall::verify(&facets_containing_any(outer.complex(), &apexes[..k]), field)?;
            let name = format!("{}|prefix{k}", instance.name);
            out.push(verify_monotonicity_c(&name, &outer, &inner)?);
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![VerificationReport::error("monotone-subball", CheckKind::Theorem, &instance.name, &e)])
}

/// Evidence on whether `θ(Δ') ≥ θ(Δ)` needs the boundary hypothesis when
/// both balls have the interior vertex property. `Δ` is the subdivided part
/// over a shelling prefix and `Δ'` adds the remaining facets unsubdivided.
pub fn interior_vertex_pair_reports(instance: &Instance, field: FieldChoice) -> Vec<VerificationReport> {
    const ID: &str = "ivp-subball";
    let run = || -> Result<Vec<VerificationReport>> {
        let (subdivided, apexes) = subdivide_every_facet(instance)?;
        let mut out = Vec::new();
        for k in prefix_lengths(apexes.len()) {
            if k == apexes.len() {
                continue;
            }
            let name = format!("{}|prefix{k}", instance.name);
            let inner_c = facets_containing_any(&subdivided, &apexes[..k]);
            let mut facets: Vec<Face> = inner_c.facets().to_vec();
            let labels = inner_c.labels_arc().clone();
            facets.extend(instance.shelling[k..].iter().cloned());
            let outer = VerifiedBall::verify(&SimplicialComplex::from_facets(facets, labels), field)?;
            let inner = VerifiedBall::verify(&inner_c, field)?;
            let (left, right) = (theta(&outer)?, theta(&inner)?);
            let report = if !outer.has_interior_vertex_property() || !inner.has_interior_vertex_property() {
                VerificationReport::inapplicable(ID, CheckKind::Exploratory, &name, "interior vertex property fails")
            } else if crate::homology::no_facet_on_union_boundaries(&outer, &inner)? {
                VerificationReport::inapplicable(ID, CheckKind::Exploratory, &name, "boundary hypothesis holds")
            } else {
                VerificationReport::inequality(ID, CheckKind::Exploratory, &name, left.clone(), right.clone())
            };
            out.push(report.with_sides(left, right));
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![VerificationReport::error(ID, CheckKind::Exploratory, &instance.name, &e)])
}
