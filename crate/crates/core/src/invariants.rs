//! Enumerative invariants: h-polynomials, interior h-polynomials, theta
//! polynomials, local h-polynomials and γ-polynomials, together with the
//! closed forms in terms of `p_{n,k}`. Where two routes to a value exist
//! both are computed and a disagreement is an error.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{self, FieldChoice, VerifiedBall};
use crate::par;
use crate::poly::{gamma_vector, h_from_f, pnk, pnk_row, GammaVector, IntPoly};
use crate::subdivision::{barycentric, Triangulation};

/// `Σ f_{i-1} x^i (1-x)^{n-i}`; zero for the void complex.
pub fn h_poly(complex: &SimplicialComplex) -> IntPoly {
    h_from_f(&complex.f_vector())
}

/// `h_0, …, h_n` padded to the window `n = dim + 1`; empty for VOID.
pub fn h_vector(complex: &SimplicialComplex) -> Vec<BigInt> {
    if complex.is_void() {
        return Vec::new();
    }
    let h = h_poly(complex);
    (0..=complex.rank()).map(|i| h.coeff(i)).collect()
}

fn consistency(what: &'static str, left: &IntPoly, right: &IntPoly) -> Error {
    Error::Consistency {
        what,
        left: left.to_string(),
        right: right.to_string(),
    }
}

/// h-polynomial of the interior faces, checked against `x^n h(Δ, 1/x)`.
pub fn h_interior(ball: &VerifiedBall) -> Result<IntPoly> {
    let n = ball.rank();
    let mut f = vec![0usize; n + 1];
    for face in ball.interior_faces() {
        f[face.len()] += 1;
    }
    let direct = h_from_f(&f);
    let reflected = h_poly(ball.complex()).reverse(n)?;
    if direct != reflected {
        return Err(consistency("interior h-polynomial", &direct, &reflected));
    }
    Ok(direct)
}

/// `θ(Δ) = h(Δ) - h(∂Δ)`, checked against the partial-sum formula
/// `Σ_{i=1}^{n-1} (h_{n-1} + … + h_{n-i} - h_0 - … - h_{i-1}) x^i`.
pub fn theta(ball: &VerifiedBall) -> Result<IntPoly> {
    let by_definition = h_poly(ball.complex()) - h_poly(ball.boundary());
    let n = ball.rank();
    if n >= 1 {
        let by_sums = theta_from_h(&h_vector(ball.complex()));
        if by_sums != by_definition {
            return Err(consistency("theta polynomial", &by_definition, &by_sums));
        }
    }
    Ok(by_definition)
}

/// The partial-sum expression for θ from `h = (h_0, …, h_n)`, `n >= 1`.
pub fn theta_from_h(h: &[BigInt]) -> IntPoly {
    let n = h.len() - 1;
    let mut coeffs = vec![BigInt::zero(); n];
    let (mut top, mut bottom) = (BigInt::zero(), BigInt::zero());
    for i in 1..n {
        top += &h[n - i];
        bottom += &h[i - 1];
        coeffs[i] = &top - &bottom;
    }
    IntPoly::new(coeffs)
}

/// Verifies that `complex` is a homology ball and returns its θ.
pub fn theta_of(complex: &SimplicialComplex, field: FieldChoice) -> Result<IntPoly> {
    theta(&VerifiedBall::verify(complex, field)?)
}

/// `ℓ_V(Γ) = Σ_{F ⊆ V} (-1)^{|V∖F|} h(Γ_F)` for a triangulation of a simplex.
pub fn local_h(t: &Triangulation) -> Result<IntPoly> {
    let v = simplex_face(t.base())?;
    let mut acc = IntPoly::zero();
    for f in v.subsets() {
        let h = h_poly(t.restriction(&f)?.total());
        if (v.len() - f.len()) % 2 == 1 {
            acc -= &h;
        } else {
            acc += &h;
        }
    }
    Ok(acc)
}

/// The single facet of a simplex `2^V`.
pub fn simplex_face(base: &SimplicialComplex) -> Result<Face> {
    match base.facets() {
        [v] => Ok(v.clone()),
        _ => Err(Error::NotASimplex),
    }
}

/// γ-vector of the h-polynomial of a homology sphere, after verifying that
/// the complex is one.
pub fn gamma_poly(sphere: &SimplicialComplex, field: FieldChoice) -> Result<GammaVector> {
    if !homology::is_homology_sphere(sphere, field) {
        return Err(Error::NotASphere(sphere.to_string()));
    }
    gamma_of_symmetric(sphere)
}

/// γ-vector of a complex whose h-polynomial is symmetric about `rank/2`.
pub fn gamma_of_symmetric(complex: &SimplicialComplex) -> Result<GammaVector> {
    let h = h_poly(complex);
    gamma_vector(&h, complex.rank()).ok_or_else(|| Error::Consistency {
        what: "h-polynomial of a sphere is not symmetric",
        left: h.to_string(),
        right: complex.rank().to_string(),
    })
}

/// `Σ_k h_k(Δ) p_{n,k}` with `n = dim + 1`.
pub fn h_sd_formula(complex: &SimplicialComplex) -> IntPoly {
    if complex.is_void() {
        return IntPoly::zero();
    }
    let row = pnk_row(complex.rank());
    h_vector(complex).iter().zip(&row).map(|(h, p)| p.scale(h)).sum()
}

/// [`h_sd_formula`], checked against the h-polynomial of the constructed
/// barycentric subdivision.
pub fn h_sd_via_pnk(complex: &SimplicialComplex) -> Result<IntPoly> {
    let formula = h_sd_formula(complex);
    let direct = h_poly(barycentric(complex).total());
    if formula != direct {
        return Err(consistency("h of the barycentric subdivision", &formula, &direct));
    }
    Ok(formula)
}

/// `θ(sd(Δ)) = Σ_{i=0}^{n-1} (h_n + … + h_{n-i} + x (h_n + … + h_{i+1})) p_{n-1,i}`
/// from the h-vector of a ball of rank `n >= 1`.
pub fn theta_sd_closed_form(h: &[BigInt]) -> Result<IntPoly> {
    let n = h.len().checked_sub(1).filter(|&n| n >= 1).ok_or_else(|| {
        Error::Precondition("closed form for θ(sd) needs a ball of dimension >= 0".into())
    })?;
    let mut acc = IntPoly::zero();
    for i in 0..n {
        let upper: BigInt = h[n - i..=n].iter().sum();
        let lower: BigInt = h[i + 1..=n].iter().sum();
        let weight = IntPoly::new(vec![upper, lower]);
        acc += &(weight * pnk(n - 1, i)?);
    }
    Ok(acc)
}

/// Per-face data of a triangulation: `h`, `θ` (when the restriction is a
/// ball) and local `h` of every restriction `Δ'_F`.
#[derive(Clone, Debug)]
pub struct RestrictionTable {
    h: HashMap<Face, IntPoly>,
    theta: HashMap<Face, std::result::Result<IntPoly, String>>,
    local: HashMap<Face, IntPoly>,
}

impl RestrictionTable {
    pub fn new(t: &Triangulation, field: FieldChoice) -> Result<Self> {
        let faces: Vec<Face> = t.base().faces().cloned().collect();
        let rows = par::map(&faces, |f| -> Result<(IntPoly, std::result::Result<IntPoly, String>)> {
            let r = t.restriction(f)?;
            let h = h_poly(r.total());
            let th = match VerifiedBall::verify(r.total(), field) {
                Ok(ball) => Ok(theta(&ball)?),
                Err(e) => Err(e.to_string()),
            };
            Ok((h, th))
        });
        let mut h = HashMap::with_capacity(faces.len());
        let mut theta = HashMap::with_capacity(faces.len());
        for (f, row) in faces.iter().zip(rows) {
            let (hf, tf) = row?;
            h.insert(f.clone(), hf);
            theta.insert(f.clone(), tf);
        }
        let local = faces
            .iter()
            .map(|f| {
                let l = f
                    .subsets()
                    .map(|g| {
                        let hg = &h[&g];
                        if (f.len() - g.len()) % 2 == 1 {
                            -hg
                        } else {
                            hg.clone()
                        }
                    })
                    .sum();
                (f.clone(), l)
            })
            .collect();
        Ok(RestrictionTable { h, theta, local })
    }

    pub fn h(&self, face: &Face) -> &IntPoly {
        &self.h[face]
    }

    /// θ of the restriction, or an error if the restriction is not a ball.
    pub fn theta(&self, face: &Face) -> Result<&IntPoly> {
        self.theta[face].as_ref().map_err(|e| Error::NotABall(e.clone()))
    }

    pub fn local_h(&self, face: &Face) -> &IntPoly {
        &self.local[face]
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.h.keys()
    }
}

/// Coefficient properties of θ over all restrictions of a triangulation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ThetaClass {
    pub positive: bool,
    pub unimodal: bool,
    pub gamma_positive: bool,
}

/// Theta positivity, unimodality and γ-positivity of a triangulation, each
/// required of `θ(Δ'_F)` for every face `F` of the base.
pub fn theta_class(t: &Triangulation, field: FieldChoice) -> Result<ThetaClass> {
    theta_class_from(&RestrictionTable::new(t, field)?)
}

pub fn theta_class_from(table: &RestrictionTable) -> Result<ThetaClass> {
    let mut class = ThetaClass {
        positive: true,
        unimodal: true,
        gamma_positive: true,
    };
    for f in table.faces() {
        let th = table.theta(f)?;
        let nonneg = th.is_nonnegative();
        class.positive &= nonneg;
        class.unimodal &= nonneg && th.is_unimodal_within(f.len());
        class.gamma_positive &= th.is_gamma_positive(f.len());
    }
    Ok(class)
}
