//! Individual checks. Each returns one or more reports rather than an
//! error; a computation that fails where it should not is itself reported
//! as a failure.

use num_bigint::BigInt;
use num_traits::Zero;

use super::report::{CheckKind, VerificationReport};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{
    is_cohen_macaulay, is_cohen_macaulay_star, is_homology_ball, is_homology_sphere,
    no_facet_on_union_boundaries, FieldChoice, VerifiedBall,
};
use crate::invariants::{
    gamma_of_symmetric, h_interior, h_poly, h_sd_formula, h_vector, local_h, simplex_face, theta,
    theta_class_from, theta_sd_closed_form, RestrictionTable, ThetaClass,
};
use crate::poly::{derangement_poly, pnk_row, symmetric_decomposition, IntPoly};
use crate::subdivision::{barycentric, Triangulation};

use CheckKind::{Conjecture, Identity, Theorem};

/// Turns a fallible check into reports, recording an error as a failure.
fn guard(id: &str, kind: CheckKind, instance: &str, f: impl FnOnce() -> Result<Vec<VerificationReport>>) -> Vec<VerificationReport> {
    f().unwrap_or_else(|e| vec![VerificationReport::error(id, kind, instance, &e)])
}

/// Homological type of a base complex, computed once per triangulation.
#[derive(Clone, Debug)]
pub struct BaseProfile {
    pub pure: bool,
    pub cohen_macaulay: bool,
    pub cohen_macaulay_star: bool,
    pub sphere: bool,
    pub ball: Option<VerifiedBall>,
    pub simplex: bool,
}

impl BaseProfile {
    pub fn new(base: &SimplicialComplex, field: FieldChoice) -> Self {
        let cohen_macaulay = !base.is_void() && is_cohen_macaulay(base, field);
        BaseProfile {
            pure: base.is_pure(),
            cohen_macaulay,
            cohen_macaulay_star: cohen_macaulay && is_cohen_macaulay_star(base, field).unwrap_or(false),
            sphere: !base.is_void() && is_homology_sphere(base, field),
            ball: VerifiedBall::verify(base, field).ok(),
            simplex: simplex_face(base).is_ok(),
        }
    }
}

/// `h(Δ') = Σ_F ℓ_F(Δ'_F) h(lk F)`.
pub fn verify_locality(name: &str, t: &Triangulation, table: &RestrictionTable) -> VerificationReport {
    const ID: &str = "locality";
    if !t.base().is_pure() {
        return VerificationReport::inapplicable(ID, Identity, name, "base is not pure");
    }
    let rhs: Result<IntPoly> = t
        .base()
        .faces()
        .map(|f| Ok(table.local_h(f) * h_poly(&t.base().link(f)?)))
        .sum();
    match rhs {
        Ok(rhs) => VerificationReport::equality(ID, Identity, name, h_poly(t.total()), rhs),
        Err(e) => VerificationReport::error(ID, Identity, name, &e),
    }
}

/// `h(Δ') = Σ_F θ(Δ'_F) h(sd(lk F))`.
pub fn verify_theta_formula(name: &str, t: &Triangulation, table: &RestrictionTable) -> VerificationReport {
    const ID: &str = "theta-formula";
    if !t.base().is_pure() {
        return VerificationReport::inapplicable(ID, Identity, name, "base is not pure");
    }
    let rhs: Result<IntPoly> = t
        .base()
        .faces()
        .map(|f| Ok(table.theta(f)? * h_sd_formula(&t.base().link(f)?)))
        .sum();
    match rhs {
        Ok(rhs) => VerificationReport::equality(ID, Identity, name, h_poly(t.total()), rhs),
        Err(e) => VerificationReport::error(ID, Identity, name, &e),
    }
}

/// `ℓ_F(Δ'_F) = Σ_{G ⊆ F} θ(Δ'_G) d_{|F∖G|}` at one face `F` of the base.
pub fn verify_kms(name: &str, t: &Triangulation, table: &RestrictionTable, face: &Face) -> VerificationReport {
    const ID: &str = "kms";
    let instance = format!("{name}|{}", t.base().face_label(face));
    let rhs: Result<IntPoly> = face
        .subsets()
        .map(|g| Ok(table.theta(&g)? * derangement_poly(face.len() - g.len())))
        .sum();
    match rhs {
        Ok(rhs) => VerificationReport::equality(ID, Identity, &instance, table.local_h(face).clone(), rhs),
        Err(e) => VerificationReport::error(ID, Identity, &instance, &e),
    }
}

/// Both monotonicity theorems for a triangulation of a ball, with the
/// identities from their proofs:
/// `θ(Δ') = θ(Δ) + Σ_{int F} ℓ_F h(lk F) + Σ_{F ∈ ∂∖∅} ℓ_F θ(lk F)` and
/// `θ(Δ') = θ(sd Δ) + Σ_{int F} θ_F h(sd lk F) + Σ_{F ∈ ∂∖∅} θ_F θ(sd lk F)`.
pub fn verify_monotonicity(
    name: &str,
    ball: &VerifiedBall,
    t: &Triangulation,
    table: &RestrictionTable,
    class: &ThetaClass,
    field: FieldChoice,
) -> Vec<VerificationReport> {
    guard("monotone-ivp", Identity, name, || {
        let base = ball.complex();
        let total = VerifiedBall::verify(t.total(), field)?;
        let theta_new = theta(&total)?;
        let theta_old = theta(ball)?;
        let n = ball.rank();
        let theta_sd = theta_sd_closed_form(&h_vector(base))?;
        let mut via_local = theta_old.clone();
        let mut via_theta = theta_sd.clone();
        for f in base.faces().filter(|f| !f.is_empty()) {
            let lk = base.link(f)?;
            if ball.boundary().contains_face(f) {
                via_local += &(table.local_h(f) * theta(&VerifiedBall::verify(&lk, field)?)?);
                via_theta += &(table.theta(f)? * theta_sd_closed_form(&h_vector(&lk))?);
            } else {
                via_local += &(table.local_h(f) * h_poly(&lk));
                via_theta += &(table.theta(f)? * h_sd_formula(&lk));
            }
        }
        let mut out = vec![
            VerificationReport::equality("monotone-ivp-expansion", Identity, name, theta_new.clone(), via_local),
            VerificationReport::equality("monotone-sd-expansion", Identity, name, theta_new.clone(), via_theta),
        ];
        out.push(if ball.has_interior_vertex_property() {
            VerificationReport::inequality("monotone-ivp", Theorem, name, theta_new.clone(), theta_old)
        } else {
            VerificationReport::inapplicable("monotone-ivp", Theorem, name, "base lacks the interior vertex property")
        });
        out.push(if class.positive {
            VerificationReport::inequality("monotone-sd", Theorem, name, theta_new.clone(), theta_sd.clone())
        } else {
            VerificationReport::inapplicable("monotone-sd", Theorem, name, "triangulation is not theta positive")
        });
        let diff = &theta_new - &theta_sd;
        out.push(if class.unimodal {
            let ok = [&theta_new, &diff].iter().all(|p| p.is_nonnegative() && p.is_unimodal_within(n));
            VerificationReport::predicate("monotone-sd-unimodal", Theorem, name, ok).with_sides(theta_new.clone(), theta_sd.clone())
        } else {
            VerificationReport::inapplicable("monotone-sd-unimodal", Theorem, name, "triangulation is not theta unimodal")
        });
        out.push(if class.gamma_positive {
            let ok = theta_new.is_gamma_positive(n) && diff.is_gamma_positive(n);
            VerificationReport::predicate("monotone-sd-gamma", Theorem, name, ok).with_sides(theta_new, theta_sd)
        } else {
            VerificationReport::inapplicable("monotone-sd-gamma", Theorem, name, "triangulation is not theta γ-positive")
        });
        Ok(out)
    })
}

fn pick(reports: Vec<VerificationReport>, id: &str, instance: &str) -> VerificationReport {
    reports
        .into_iter()
        .find(|r| r.id == id)
        .unwrap_or_else(|| VerificationReport::inapplicable(id, Theorem, instance, "not computed"))
}

/// `θ(Δ') ≥ θ(Δ)` for a triangulation `Δ'` of a ball with the interior
/// vertex property.
pub fn verify_monotonicity_a(name: &str, ball: &VerifiedBall, t: &Triangulation, field: FieldChoice) -> VerificationReport {
    match RestrictionTable::new(t, field).and_then(|table| Ok((theta_class_from(&table)?, table))) {
        Ok((class, table)) => pick(verify_monotonicity(name, ball, t, &table, &class, field), "monotone-ivp", name),
        Err(e) => VerificationReport::error("monotone-ivp", Theorem, name, &e),
    }
}

/// `θ(Δ') ≥ θ(sd Δ)` for a theta positive triangulation `Δ'` of a ball.
pub fn verify_monotonicity_b(name: &str, ball: &VerifiedBall, t: &Triangulation, field: FieldChoice) -> VerificationReport {
    match RestrictionTable::new(t, field).and_then(|table| Ok((theta_class_from(&table)?, table))) {
        Ok((class, table)) => pick(verify_monotonicity(name, ball, t, &table, &class, field), "monotone-sd", name),
        Err(e) => VerificationReport::error("monotone-sd", Theorem, name, &e),
    }
}

fn peak_in_middle(h: &IntPoly, n: usize) -> bool {
    let Some(peaks) = h.peak_positions() else {
        return false;
    };
    if n % 2 == 0 {
        peaks.contains(&(n / 2))
    } else {
        peaks.contains(&((n - 1) / 2)) || peaks.contains(&n.div_ceil(2))
    }
}

/// Consequences of the theta formula that depend on the type of the base
/// and the theta class of the triangulation, plus the antiprism
/// specializations, which hold without assumptions on the class.
pub fn verify_corollaries(
    name: &str,
    t: &Triangulation,
    table: &RestrictionTable,
    class: &ThetaClass,
    profile: &BaseProfile,
) -> Vec<VerificationReport> {
    guard("h-dominates-sd", Theorem, name, || {
        let mut out = Vec::new();
        let base = t.base();
        let n = base.rank();
        let h = h_poly(t.total());
        let h_sd = h_sd_formula(base);
        if profile.cohen_macaulay && class.positive {
            out.push(VerificationReport::inequality("h-dominates-sd", Theorem, name, h.clone(), h_sd.clone()));
        }
        if profile.cohen_macaulay && class.unimodal {
            out.push(VerificationReport::predicate("h-peak", Theorem, name, peak_in_middle(&h, n)));
        }
        if profile.simplex {
            let v = simplex_face(base)?;
            let ell = table.local_h(&v).clone();
            if class.positive {
                out.push(VerificationReport::inequality("local-h-dominates-derangement", Theorem, name, ell.clone(), derangement_poly(n)));
            }
            if class.unimodal {
                out.push(VerificationReport::predicate("local-h-shape", Theorem, name, ell.is_unimodal()));
            }
            if class.gamma_positive {
                out.push(VerificationReport::predicate("local-h-shape", Theorem, name, ell.is_gamma_positive(n)));
            }
        }
        let mut both = |id: &str, unimodal: bool, gamma: bool| {
            if class.unimodal {
                out.push(VerificationReport::predicate(id, Theorem, name, unimodal));
            }
            if class.gamma_positive {
                out.push(VerificationReport::predicate(id, Theorem, name, gamma));
            }
        };
        if profile.sphere {
            both("sphere-h-shape", h.is_unimodal(), h.is_gamma_positive(n));
        }
        if profile.cohen_macaulay_star {
            let d = symmetric_decomposition(&h, n)?;
            both("cm-star-decomposition-shape", d.is_nonnegative() && d.is_unimodal(), d.is_gamma_positive());
        }
        if profile.ball.is_some() && n >= 1 {
            let d = symmetric_decomposition(&h, n - 1)?;
            both("ball-decomposition-shape", d.is_nonnegative() && d.is_unimodal(), d.is_gamma_positive());
        }
        if t.kind() == "antiprism" {
            if profile.cohen_macaulay {
                out.push(VerificationReport::predicate("antiprism-h-peak", Theorem, name, peak_in_middle(&h, n)));
            }
            if profile.sphere {
                out.push(VerificationReport::predicate("antiprism-sphere-gamma", Theorem, name, h.is_gamma_positive(n)));
            }
            if profile.cohen_macaulay_star {
                let d = symmetric_decomposition(&h, n)?;
                out.push(VerificationReport::predicate("antiprism-cm-star-gamma", Theorem, name, d.is_gamma_positive()));
            }
            if profile.ball.is_some() && n >= 1 {
                let d = symmetric_decomposition(&h, n - 1)?;
                out.push(VerificationReport::predicate("antiprism-ball-gamma", Theorem, name, d.is_gamma_positive()));
            }
        }
        if matches!(t.kind(), "sd" | "antiprism") {
            let all = class.positive && class.unimodal && class.gamma_positive;
            out.push(VerificationReport::predicate("theta-class", Theorem, name, all));
        }
        Ok(out)
    })
}

/// All checks that only need one triangulation.
pub fn triangulation_reports(
    name: &str,
    t: &Triangulation,
    field: FieldChoice,
    which: TriangulationChecks,
) -> Vec<VerificationReport> {
    let table = match RestrictionTable::new(t, field) {
        Ok(table) => table,
        Err(e) => return vec![VerificationReport::error("restriction", Identity, name, &e)],
    };
    let mut out = Vec::new();
    if which.locality {
        out.push(verify_locality(name, t, &table));
    }
    if which.theta {
        out.push(verify_theta_formula(name, t, &table));
    }
    if which.kms {
        for f in t.base().faces().filter(|f| !f.is_empty()) {
            out.push(verify_kms(name, t, &table, f));
        }
    }
    if which.monotone {
        match theta_class_from(&table) {
            Ok(class) => {
                let profile = BaseProfile::new(t.base(), field);
                if let Some(ball) = &profile.ball {
                    out.extend(verify_monotonicity(name, ball, t, &table, &class, field));
                }
                out.extend(verify_corollaries(name, t, &table, &class, &profile));
            }
            Err(e) => out.push(VerificationReport::error("theta-class", Theorem, name, &e)),
        }
    }
    out
}

/// Which groups of [`triangulation_reports`] to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TriangulationChecks {
    pub locality: bool,
    pub theta: bool,
    pub kms: bool,
    pub monotone: bool,
}

impl TriangulationChecks {
    pub fn all() -> Self {
        TriangulationChecks {
            locality: true,
            theta: true,
            kms: true,
            monotone: true,
        }
    }

    pub fn any(&self) -> bool {
        self.locality || self.theta || self.kms || self.monotone
    }
}

/// `h_i ≤ h_{n-1-i}` for `0 ≤ i ≤ (n-1)/2`.
pub fn top_heavy(h: &[BigInt]) -> bool {
    let n = h.len() - 1;
    (0..n).filter(|&i| 2 * i < n).all(|i| h[i] <= h[n - 1 - i])
}

/// `h_0 ≤ h_{n-1} ≤ h_1 ≤ h_{n-2} ≤ ⋯ ≤ h_{⌊n/2⌋}`.
pub fn alternatingly_increasing(h: &[BigInt]) -> bool {
    let n = h.len() - 1;
    let mut order = Vec::with_capacity(n);
    let (mut lo, mut hi) = (0usize, n);
    while lo < hi {
        order.push(lo);
        lo += 1;
        if lo < hi {
            hi -= 1;
            order.push(hi);
        }
    }
    order.windows(2).all(|w| h[w[0]] <= h[w[1]])
}

/// `h_0 ≤ h_1 ≤ ⋯ ≤ h_{⌊(n-1)/2⌋}`.
pub fn half_increasing(h: &[BigInt]) -> bool {
    let n = h.len() - 1;
    let top = n.saturating_sub(1) / 2;
    h[..=top].windows(2).all(|w| w[0] <= w[1])
}

/// Identities and inequalities about a single homology ball.
pub fn ball_reports(name: &str, ball: &VerifiedBall, field: FieldChoice) -> Vec<VerificationReport> {
    guard("ball", Identity, name, || {
        let mut out = Vec::new();
        let delta = ball.complex();
        let n = ball.rank();
        if n == 0 {
            out.push(VerificationReport::equality("theta-empty", Identity, name, theta(ball)?, IntPoly::one()));
            return Ok(out);
        }
        let th = theta(ball)?;
        let h = h_vector(delta);
        let hp = h_poly(delta);
        let h_bd = h_poly(ball.boundary());
        let r = ball.interior_vertices().len() as i64;

        out.push(VerificationReport::equality("theta-symmetry", Identity, name, th.reverse(n)?, th.clone()));
        let coeff_ok = th.coeff(0).is_zero() && th.coeff(1) == BigInt::from(r - 1);
        out.push(
            VerificationReport::predicate("theta-low-coefficients", Identity, name, coeff_ok)
                .with_note(format!("{r} interior vertices")),
        );
        match n {
            2 => out.push(VerificationReport::equality(
                "theta-low-dim",
                Identity,
                name,
                th.clone(),
                IntPoly::monomial(r - 1, 1),
            )
            .with_note("dimension 1")),
            3 => out.push(VerificationReport::equality(
                "theta-low-dim",
                Identity,
                name,
                th.clone(),
                IntPoly::from_i64s(&[0, r - 1, r - 1]),
            )
            .with_note("dimension 2")),
            _ if n >= 4 => {
                let interior = ball.interior_faces();
                let int_edges = interior.iter().filter(|f| f.len() == 2).count() as i64;
                let f0 = delta.num_vertices() as i64;
                let expected = int_edges - f0 - (n as i64 - 2) * r + n as i64 - 1;
                out.push(
                    VerificationReport::predicate("theta-x2-coefficient", Identity, name, th.coeff(2) == BigInt::from(expected))
                        .with_note(format!("x^2 coefficient {} vs {expected}", th.coeff(2))),
                );
            }
            _ => {}
        }
        out.push(VerificationReport::predicate("ball-h-top", Identity, name, h[n].is_zero()));
        out.push(VerificationReport::predicate(
            "ball-h-facets",
            Identity,
            name,
            hp.value_at_one() == BigInt::from(delta.facets().len()),
        ));
        out.push(match h_interior(ball) {
            Ok(hi) => VerificationReport::equality("ball-h-interior", Identity, name, hi, hp.reverse(n)?),
            Err(e) => VerificationReport::error("ball-h-interior", Identity, name, &e),
        });

        let d = symmetric_decomposition(&hp, n - 1)?;
        out.push(VerificationReport::equality("ball-decomposition", Identity, name, d.a.clone(), h_bd.clone()));
        out.push(VerificationReport::equality("ball-decomposition", Identity, name, d.b.clone(), th.div_x()?));

        let theta_unimodal = th.is_unimodal_within(n);
        out.push(
            VerificationReport::predicate("theta-unimodal-iff-top-heavy", Identity, name, theta_unimodal == top_heavy(&h))
                .with_note(format!("theta unimodal: {theta_unimodal}")),
        );
        let both_unimodal = theta_unimodal && h_bd.is_unimodal_within(n - 1);
        out.push(
            VerificationReport::predicate("decomposition-unimodal-iff-alternating", Identity, name, both_unimodal == alternatingly_increasing(&h))
                .with_note(format!("decomposition unimodal: {both_unimodal}")),
        );

        out.extend(induced_boundary_reports(name, ball)?);

        if ball.has_interior_vertex_property() {
            let mut ok = th.is_nonnegative();
            for f in ball.boundary().faces().filter(|f| !f.is_empty()) {
                let lk = VerifiedBall::verify(&delta.link(f)?, field)?;
                ok &= theta(&lk)?.is_nonnegative();
            }
            out.push(VerificationReport::predicate("ivp-theta-nonnegative", Theorem, name, ok).with_sides(th.clone(), IntPoly::zero()));
        } else {
            out.push(VerificationReport::inapplicable("ivp-theta-nonnegative", Theorem, name, "no interior vertex property"));
        }

        let sd = barycentric(delta);
        let sd_ball = VerifiedBall::verify(sd.total(), field)?;
        let direct = theta(&sd_ball)?;
        out.push(VerificationReport::equality("theta-sd-closed-form", Identity, name, theta_sd_closed_form(&h)?, direct.clone()));
        out.push(VerificationReport::inequality("theta-sd-dominates", Theorem, name, direct, th.clone()));
        let sd_of_boundary = barycentric(ball.boundary());
        out.push(VerificationReport::predicate(
            "sd-boundary",
            Identity,
            name,
            sd_ball.boundary() == sd_of_boundary.total(),
        ));

        if delta.facets().len() <= 64 {
            out.push(VerificationReport::predicate("ball-links", Identity, name, links_are_consistent(ball, field)?));
        }
        out.push(check_conjecture_5_3(name, ball)?);
        Ok(out)
    })
}

/// Unimodality of θ for balls whose boundary is an induced subcomplex.
pub fn induced_boundary_reports(name: &str, ball: &VerifiedBall) -> Result<Vec<VerificationReport>> {
    let delta = ball.complex();
    if !ball.boundary().is_void() && !ball.boundary().is_induced_subcomplex(delta)? {
        return Ok(vec![VerificationReport::inapplicable("induced-boundary-unimodal", Theorem, name, "boundary is not induced")]);
    }
    let th = theta(ball)?;
    let h = h_vector(delta);
    Ok(vec![
        VerificationReport::predicate("induced-boundary-unimodal", Theorem, name, th.is_unimodal_within(ball.rank()))
            .with_sides(th, IntPoly::zero()),
        VerificationReport::predicate("h-half-increasing", Theorem, name, half_increasing(&h)),
    ])
}

/// Links of boundary faces are balls bounded by the link in the boundary;
/// links of interior faces are spheres.
fn links_are_consistent(ball: &VerifiedBall, field: FieldChoice) -> Result<bool> {
    let delta = ball.complex();
    for f in delta.faces().filter(|f| !f.is_empty()) {
        let lk = delta.link(f)?;
        if ball.boundary().contains_face(f) {
            let Some(bd) = is_homology_ball(&lk, field) else {
                return Ok(false);
            };
            if bd != ball.boundary().link(f)? {
                return Ok(false);
            }
        } else if !is_homology_sphere(&lk, field) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// γ-positivity of θ for flag balls with induced boundary.
pub fn check_conjecture_5_3(name: &str, ball: &VerifiedBall) -> Result<VerificationReport> {
    const ID: &str = "flag-ball-gamma";
    let delta = ball.complex();
    let th = theta(ball)?;
    if !delta.is_flag() {
        return Ok(VerificationReport::inapplicable(ID, Conjecture, name, "not flag"));
    }
    if !ball.boundary().is_void() && !ball.boundary().is_induced_subcomplex(delta)? {
        return Ok(VerificationReport::inapplicable(ID, Conjecture, name, format!("boundary not induced; theta = {th}")));
    }
    let ok = th.is_gamma_positive(ball.rank());
    Ok(VerificationReport::predicate(ID, Conjecture, name, ok).with_sides(th, IntPoly::zero()))
}

/// `γ(Δ) ≥ γ(lk v)` for a flag sphere and vertex `v`, together with the
/// identity `θ(Δ∖v) = h(Δ) - (1+x) h(lk v)` and the agreement of this
/// verdict with the conjecture for the ball `Δ∖v`.
pub fn check_link_conjecture(name: &str, sphere: &SimplicialComplex, v: u32, field: FieldChoice) -> Vec<VerificationReport> {
    let instance = format!("{name}@{}", sphere.labels().label(v));
    guard("antistar-theta", Identity, &instance, || {
        let mut out = Vec::new();
        let lk = sphere.link(&Face::vertex(v))?;
        let antistar = sphere.delete_vertex(v);
        let ball = VerifiedBall::verify(&antistar, field)?;
        out.push(VerificationReport::predicate(
            "antistar-boundary",
            Identity,
            &instance,
            *ball.boundary() == lk,
        ));
        let th = theta(&ball)?;
        let one_plus_x = IntPoly::one_plus_x_pow(1);
        let expected = h_poly(sphere) - &one_plus_x * &h_poly(&lk);
        out.push(VerificationReport::equality("antistar-theta", Identity, &instance, th.clone(), expected));
        if !sphere.is_flag() {
            out.push(VerificationReport::inapplicable("flag-link-gamma", Conjecture, &instance, "not flag"));
            return Ok(out);
        }
        let g_sphere = gamma_of_symmetric(sphere)?.as_poly();
        let g_link = gamma_of_symmetric(&lk)?.as_poly();
        let link_verdict = g_sphere.dominates(&g_link);
        out.push(VerificationReport::inequality("flag-link-gamma", Conjecture, &instance, g_sphere, g_link));
        let ball_verdict = th.is_gamma_positive(ball.rank());
        out.push(VerificationReport::predicate(
            "antistar-gamma-equivalence",
            Identity,
            &instance,
            link_verdict == ball_verdict,
        ));
        out.push(check_conjecture_5_3(&instance, &ball)?);
        Ok(out)
    })
}

/// h-polynomials of homology spheres are symmetric.
pub fn sphere_reports(name: &str, sphere: &SimplicialComplex) -> Vec<VerificationReport> {
    let h = h_poly(sphere);
    match h.reverse(sphere.rank()) {
        Ok(r) => vec![VerificationReport::equality("sphere-h-symmetric", Identity, name, r, h)],
        Err(e) => vec![VerificationReport::error("sphere-h-symmetric", Identity, name, &e)],
    }
}

/// The link checks at every vertex of a flag sphere.
pub fn flag_sphere_reports(name: &str, sphere: &SimplicialComplex, field: FieldChoice) -> Vec<VerificationReport> {
    sphere.vertices().into_iter().flat_map(|v| check_link_conjecture(name, sphere, v, field)).collect()
}

/// The three symmetric pieces of `h(sd Δ)`, centered at `(n-1)/2`, `n/2`
/// and `(n+1)/2`. For `k ≥ n/2` the symmetric decomposition
/// `p_{n,k} = a_k + x b_k` has both parts nonnegative; for `k < n/2`,
/// reversal gives `p_{n,k} = a_{n-k} + b_{n-k}`.
pub fn sd_three_part_decomposition(h: &[BigInt]) -> Result<[IntPoly; 3]> {
    let n = h.len().checked_sub(1).ok_or(Error::Void)?;
    let row = pnk_row(n);
    let mut parts = [IntPoly::zero(), IntPoly::zero(), IntPoly::zero()];
    for (k, hk) in h.iter().enumerate() {
        let upper = k.max(n - k);
        let d = symmetric_decomposition(&row[upper], n)?;
        parts[1] += &d.a.scale(hk);
        if 2 * k >= n {
            parts[2] += &d.b.shift(1).scale(hk);
        } else {
            parts[0] += &d.b.scale(hk);
        }
    }
    Ok(parts)
}

/// Properties of Cohen-Macaulay complexes: the three-part decomposition of
/// `h(sd Δ)` and the location of its peak.
pub fn cohen_macaulay_reports(name: &str, complex: &SimplicialComplex) -> Vec<VerificationReport> {
    guard("sd-three-parts", Theorem, name, || {
        let n = complex.rank();
        let h = h_vector(complex);
        let h_sd = h_sd_formula(complex);
        let parts = sd_three_part_decomposition(&h)?;
        let sum: IntPoly = parts.iter().cloned().sum();
        // centers (n-1)/2, n/2, (n+1)/2 as windows n-1, n, n+1
        let windows = [n.checked_sub(1), Some(n), Some(n + 1)];
        let shaped = parts.iter().zip(windows).all(|(p, w)| {
            p.is_zero() || w.is_some_and(|w| p.is_nonnegative() && p.is_symmetric(w) && p.is_unimodal())
        });
        Ok(vec![
            VerificationReport::equality("sd-three-parts", Identity, name, sum, h_sd.clone()),
            VerificationReport::predicate("sd-three-parts", Theorem, name, shaped),
            VerificationReport::predicate("sd-h-peak", Theorem, name, peak_in_middle(&h_sd, n)),
        ])
    })
}

/// For `Δ'` with at least two facets and a vertex in exactly one facet,
/// deleting that vertex gives a ball `Δ` with
/// `θ(Δ) = θ(Δ') + x^2 + ⋯ + x^{n-2}`.
pub fn corner_deletion_reports(name: &str, delta_prime: &SimplicialComplex, field: FieldChoice) -> Vec<VerificationReport> {
    const ID: &str = "corner-deletion";
    guard(ID, Identity, name, || {
        let n = delta_prime.rank();
        if n < 4 || delta_prime.facets().len() < 2 {
            return Ok(vec![VerificationReport::inapplicable(ID, Identity, name, "needs n >= 4 and two facets")]);
        }
        let corner = delta_prime
            .vertices()
            .into_iter()
            .find(|&v| delta_prime.facets().iter().filter(|f| f.contains(v)).count() == 1);
        let Some(v) = corner else {
            return Ok(vec![VerificationReport::inapplicable(ID, Identity, name, "no vertex in a unique facet")]);
        };
        let outer = VerifiedBall::verify(delta_prime, field)?;
        let inner = VerifiedBall::verify(&delta_prime.delete_vertex(v), field)?;
        let tail: IntPoly = (2..=n - 2).map(|i| IntPoly::monomial(1, i)).sum();
        let instance = format!("{name}∖{}", delta_prime.labels().label(v));
        Ok(vec![
            VerificationReport::equality(ID, Identity, &instance, theta(&inner)?, &theta(&outer)? + &tail),
            VerificationReport::predicate("corner-deletion-no-ivp", Identity, &instance, !outer.has_interior_vertex_property()),
            verify_monotonicity_c(&instance, &outer, &inner)?,
        ])
    })
}

/// `θ(Δ') ≥ θ(Δ)` for balls `Δ ⊆ Δ'` of equal dimension when no facet of
/// `Δ'` has all its vertices in `∂Δ ∪ ∂Δ'`.
pub fn verify_monotonicity_c(name: &str, outer: &VerifiedBall, inner: &VerifiedBall) -> Result<VerificationReport> {
    const ID: &str = "monotone-subball";
    let left = theta(outer)?;
    let right = theta(inner)?;
    Ok(if no_facet_on_union_boundaries(outer, inner)? {
        VerificationReport::inequality(ID, Theorem, name, left, right)
    } else {
        VerificationReport::inapplicable(ID, Theorem, name, "a facet lies on the union of the boundaries")
            .with_sides(left, right)
    })
}

/// `ℓ_V` of compositions over a triangulation `Γ` of a simplex: `sd(Γ)`
/// and `sd_A(Γ)`. Checks the corollaries on local h-polynomials and records
/// real-rootedness of both as evidence.
pub fn local_h_over(name: &str, gamma: &Triangulation, field: FieldChoice) -> Vec<VerificationReport> {
    use super::report::CheckKind::Exploratory;
    use crate::poly::is_real_rooted;
    use crate::subdivision::{antiprism, compose};
    guard("antiprism-local-h-excess", Theorem, name, || {
        let n = simplex_face(gamma.base())?.len();
        let sd = compose(&barycentric(gamma.total()), gamma)?;
        let ap_outer = antiprism(gamma.total());
        let class = theta_class_from(&RestrictionTable::new(&ap_outer, field)?)?;
        let ap = compose(&ap_outer, gamma)?;
        let ell_sd = local_h(&sd)?;
        let ell_ap = local_h(&ap)?;
        let diff = &ell_ap - &ell_sd;
        let mut out = Vec::new();
        if class.unimodal {
            let ok = ell_ap.is_unimodal() && diff.is_nonnegative() && diff.is_unimodal();
            out.push(VerificationReport::predicate("antiprism-local-h-excess", Theorem, name, ok).with_sides(ell_ap.clone(), ell_sd.clone()));
        }
        if class.gamma_positive {
            let ok = ell_ap.is_gamma_positive(n) && diff.is_gamma_positive(n);
            out.push(VerificationReport::predicate("antiprism-local-h-excess", Theorem, name, ok).with_sides(ell_ap.clone(), ell_sd.clone()));
        }
        out.push(
            VerificationReport::predicate("antiprism-local-h-gamma", Theorem, name, ell_ap.is_gamma_positive(n))
                .with_sides(ell_ap.clone(), IntPoly::zero()),
        );
        out.push(
            VerificationReport::predicate("local-h-roots-sd", Exploratory, name, is_real_rooted(&ell_sd))
                .with_sides(ell_sd, IntPoly::zero()),
        );
        out.push(
            VerificationReport::predicate("local-h-roots-antiprism", Exploratory, name, is_real_rooted(&ell_ap))
                .with_sides(ell_ap, IntPoly::zero()),
        );
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generators::*;
    use crate::harness::report::Outcome;
    use crate::subdivision::{antiprism, edgewise, stellar};

    const Q: FieldChoice = FieldChoice::Rational;

    fn all_pass(reports: &[VerificationReport]) {
        for r in reports {
            assert!(r.outcome != Outcome::Fail, "{}", r.to_json_line());
        }
    }

    #[test]
    fn monotonicity_entry_points() {
        let ball = VerifiedBall::verify(&simplex(3), Q).unwrap();
        let t = antiprism(&simplex(3));
        let b = verify_monotonicity_b("antiprism", &ball, &t, Q);
        assert!(b.passed(), "{}", b.to_json_line());
        assert_eq!(b.left, Some(IntPoly::from_i64s(&[0, 2, 2])));
        assert_eq!(verify_monotonicity_a("antiprism", &ball, &t, Q).outcome, Outcome::Inapplicable);
        let path = VerifiedBall::verify(&path(2), Q).unwrap();
        let sd = barycentric(path.complex());
        assert!(verify_monotonicity_a("path", &path, &sd, Q).passed());
    }

    #[test]
    fn locality_examples() {
        let t = barycentric(&simplex(2));
        let table = RestrictionTable::new(&t, Q).unwrap();
        let r = verify_locality("sd(edge)", &t, &table);
        assert!(r.passed());
        assert_eq!(r.left, Some(IntPoly::from_i64s(&[1, 1])));
        let t = antiprism(&simplex(3));
        let table = RestrictionTable::new(&t, Q).unwrap();
        let r = verify_locality("antiprism", &t, &table);
        assert_eq!(r.right, Some(IntPoly::from_i64s(&[1, 9, 3])));
        assert!(verify_theta_formula("antiprism", &t, &table).passed());
    }

    #[test]
    fn theta_formula_on_stellar() {
        let base = simplex(3);
        let t = stellar(&base, &base.facets()[0].clone(), "o").unwrap();
        let table = RestrictionTable::new(&t, Q).unwrap();
        let r = verify_theta_formula("stellar", &t, &table);
        assert!(r.passed());
        assert_eq!(r.left, Some(IntPoly::from_i64s(&[1, 1, 1])));
        let v = simplex_face(&base).unwrap();
        let k = verify_kms("stellar", &t, &table, &v);
        assert_eq!(k.left, Some(IntPoly::from_i64s(&[0, 1, 1])));
        assert!(k.passed());
    }

    #[test]
    fn all_groups_on_small_triangulations() {
        for t in [barycentric(&path(2)), antiprism(&cycle(4).cone("u").unwrap()), edgewise(&simplex(3), 2).unwrap()] {
            all_pass(&triangulation_reports("t", &t, Q, TriangulationChecks::all()));
        }
    }

    #[test]
    fn ball_examples() {
        let ball = VerifiedBall::verify(&example_5_2_ball(), Q).unwrap();
        let reports = ball_reports("ball", &ball, Q);
        all_pass(&reports);
        assert!(reports.iter().any(|r| r.id == "induced-boundary-unimodal" && r.outcome == Outcome::Inapplicable));
        let ball = VerifiedBall::verify(&example_5_4_ball(), Q).unwrap();
        let c = check_conjecture_5_3("flag ball", &ball).unwrap();
        assert_eq!(c.outcome, Outcome::Inapplicable);
        assert!(c.note.unwrap().contains("x + x^3"));
    }

    #[test]
    fn sequence_conditions() {
        let h = |c: &[i64]| c.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>();
        // h of the ball with theta = x + x^3
        assert!(!top_heavy(&h(&[1, 3, 2, 2, 0])));
        assert!(top_heavy(&h(&[1, 2, 2, 1, 0])));
        assert!(alternatingly_increasing(&h(&[1, 3, 3, 2, 0])));
        assert!(!alternatingly_increasing(&h(&[1, 3, 2, 2, 0])));
        assert!(half_increasing(&h(&[1, 3, 2, 2, 0])));
    }

    #[test]
    fn three_parts_of_sd() {
        for c in [simplex(4), cross_polytope_boundary(3), example_5_2_ball(), cycle(5)] {
            all_pass(&cohen_macaulay_reports("cm", &c));
        }
        let parts = sd_three_part_decomposition(&h_vector(&path(2))).unwrap();
        let sum: IntPoly = parts.into_iter().sum();
        assert_eq!(sum, h_sd_formula(&path(2)));
    }

    #[test]
    fn corner_deletion_on_edgewise() {
        let t = edgewise(&simplex(4), 4).unwrap();
        let reports = corner_deletion_reports("esd4", t.total(), Q);
        all_pass(&reports);
        assert!(reports[0].passed());
        assert_eq!(reports[2].outcome, Outcome::Inapplicable);
    }

    #[test]
    fn link_conjecture_on_octahedron() {
        let oct = cross_polytope_boundary(3);
        assert!(sphere_reports("oct", &oct)[0].passed());
        let reports = flag_sphere_reports("oct", &oct, Q);
        all_pass(&reports);
        assert!(reports.iter().filter(|r| r.id == "flag-link-gamma").count() == 6);
    }

    #[test]
    fn local_h_corollaries() {
        let gamma = stellar(&simplex(3), &Face::from_sorted(vec![0, 1, 2]), "o").unwrap();
        all_pass(&local_h_over("stellar", &gamma, Q));
    }
}
