//! Dense integer polynomials and the coefficient properties used to state
//! face-enumeration results: symmetry, unimodality, γ-positivity, symmetric
//! decompositions and real-rootedness.

mod families;
mod sturm;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use families::{derangement_poly, h_from_f, h_sd_simplex, pnk, pnk_row, sd_chain_counts_simplex};
pub use sturm::{count_real_roots, is_real_rooted};

use crate::error::{Error, Result};

/// `a_0 + a_1 x + … + a_m x^m` with `a_m != 0`; the zero polynomial has no
/// coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    /// `(1 + x)^k`
    pub fn one_plus_x_pow(k: usize) -> Self {
        let mut row = vec![BigInt::one()];
        for _ in 0..k {
            let mut next = vec![BigInt::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        Self::new(row)
    }

    /// `(1 - x)^k`
    pub fn one_minus_x_pow(k: usize) -> Self {
        let p = Self::one_plus_x_pow(k);
        Self::new(
            p.coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    /// Exact division by `x`; fails if the constant term is nonzero.
    pub fn div_x(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if c.is_zero() => Ok(IntPoly {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(Error::Precondition("constant term is nonzero".into())),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `x^n p(1/x)`, reflecting coefficients inside the window `0..=n`.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > n => Err(Error::DegreeExceedsWindow { degree: d, window: n }),
            Some(_) => Ok(Self::new((0..=n).rev().map(|i| self.coeff(i)).collect())),
        }
    }

    /// Symmetric with center `n/2`: `deg <= n` and `a_i = a_{n-i}`.
    pub fn is_symmetric(&self, n: usize) -> bool {
        match self.degree() {
            None => true,
            Some(d) if d > n => false,
            Some(_) => (0..=n / 2).all(|i| self.coeff(i) == self.coeff(n - i)),
        }
    }

    /// Weakly increasing then weakly decreasing. The zero polynomial and
    /// constants are unimodal. Only the coefficient range up to the degree
    /// is inspected, so internal zeros count but trailing ones do not.
    pub fn is_unimodal(&self) -> bool {
        self.peak_positions().is_some()
    }

    /// Unimodality of the full window `a_0, …, a_n`, trailing zeros included,
    /// so `-x` is unimodal but not within the window `0..=2`.
    pub fn is_unimodal_within(&self, n: usize) -> bool {
        let mut padded = self.coeffs.clone();
        padded.resize(padded.len().max(n + 1), BigInt::zero());
        peaks_of(&padded).is_some()
    }

    /// All positions `k` at which the coefficients are unimodal with peak `k`,
    /// or `None` if the sequence is not unimodal.
    pub fn peak_positions(&self) -> Option<Vec<usize>> {
        peaks_of(&self.coeffs)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficientwise `self >= other`.
    pub fn dominates(&self, other: &IntPoly) -> bool {
        (self - other).is_nonnegative()
    }

    /// γ-positive with center `n/2`.
    pub fn is_gamma_positive(&self, n: usize) -> bool {
        gamma_vector(self, n).is_some_and(|g| g.is_nonnegative())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|e| Error::Precondition(format!("bad coefficient `{}`: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

fn peaks_of(a: &[BigInt]) -> Option<Vec<usize>> {
    if a.is_empty() {
        return Some(vec![0]);
    }
    let mut up = 0;
    while up + 1 < a.len() && a[up] <= a[up + 1] {
        up += 1;
    }
    let mut down = a.len() - 1;
    while down > 0 && a[down - 1] >= a[down] {
        down -= 1;
    }
    if down > up {
        return None;
    }
    // Every position in down..=up is a valid peak.
    Some((down..=up).collect())
}

/// `γ_0, …, γ_{⌊n/2⌋}` with `p = Σ γ_i x^i (1+x)^{n-2i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub center: usize,
    pub gamma: Vec<BigInt>,
}

impl GammaVector {
    pub fn is_nonnegative(&self) -> bool {
        self.gamma.iter().all(|g| !g.is_negative())
    }

    pub fn reconstruct(&self) -> IntPoly {
        self.gamma
            .iter()
            .enumerate()
            .fold(IntPoly::zero(), |acc, (i, g)| {
                acc + IntPoly::one_plus_x_pow(self.center - 2 * i).shift(i).scale(g)
            })
    }

    pub fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.gamma.clone())
    }
}

/// Peels off `γ_i x^i (1+x)^{n-2i}` from the bottom up. Returns `None` when `p`
/// is not symmetric about `n/2`.
pub fn gamma_vector(p: &IntPoly, n: usize) -> Option<GammaVector> {
    if !p.is_symmetric(n) {
        return None;
    }
    let mut rest = p.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest = rest - IntPoly::one_plus_x_pow(n - 2 * i).shift(i).scale(&g);
        }
        gamma.push(g);
    }
    debug_assert!(rest.is_zero());
    Some(GammaVector { center: n, gamma })
}

/// `p = a + x b` with `a` symmetric about `n/2` and `b` about `(n-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDecomp {
    pub a: IntPoly,
    pub b: IntPoly,
    pub n: usize,
}

impl SymDecomp {
    pub fn is_nonnegative(&self) -> bool {
        self.a.is_nonnegative() && self.b.is_nonnegative()
    }

    pub fn is_unimodal(&self) -> bool {
        self.a.is_unimodal() && self.b.is_unimodal()
    }

    pub fn is_gamma_positive(&self) -> bool {
        self.a.is_gamma_positive(self.n)
            && (self.n == 0 && self.b.is_zero() || self.n > 0 && self.b.is_gamma_positive(self.n - 1))
    }

    pub fn is_real_rooted(&self) -> bool {
        is_real_rooted(&self.a) && is_real_rooted(&self.b)
    }
}

/// The unique symmetric decomposition of `p` with respect to `n`.
pub fn symmetric_decomposition(p: &IntPoly, n: usize) -> Result<SymDecomp> {
    let rev = p.reverse(n)?;
    // p - x·rev = (1 - x)·a
    let numerator = p - &rev.shift(1);
    let a = div_one_minus_x(&numerator).expect("symmetric decomposition always exists");
    let b = &rev - &a;
    debug_assert!(a.is_symmetric(n));
    debug_assert!(n == 0 && b.is_zero() || n > 0 && b.is_symmetric(n - 1));
    Ok(SymDecomp { a, b, n })
}

/// Exact division by `1 - x`, `None` when `p(1) != 0`.
pub fn div_one_minus_x(p: &IntPoly) -> Option<IntPoly> {
    if !p.value_at_one().is_zero() {
        return None;
    }
    let mut acc = BigInt::zero();
    let mut q = Vec::with_capacity(p.coeffs.len());
    for c in p.coeffs.iter().take(p.coeffs.len().saturating_sub(1)) {
        acc += c;
        q.push(acc.clone());
    }
    Some(IntPoly::new(q))
}

impl fmt::Display for IntPoly {
    /// `x + 7x^2 - 2x^3`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        IntPoly::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    IntPoly::new(out)
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn normalization_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn reversal() {
        // (0,2,4,0) -> (0,4,2,0)
        assert_eq!(p(&[0, 2, 4]).reverse(3).unwrap(), p(&[0, 4, 2]));
        assert_eq!(pnk(3, 1).unwrap().reverse(3).unwrap(), pnk(3, 2).unwrap());
        assert_eq!(IntPoly::zero().reverse(5).unwrap(), IntPoly::zero());
        assert!(matches!(
            p(&[1, 1, 1]).reverse(1),
            Err(Error::DegreeExceedsWindow { degree: 2, window: 1 })
        ));
    }

    #[test]
    fn symmetry_and_unimodality() {
        let xx3 = p(&[0, 1, 0, 1]);
        assert!(xx3.is_symmetric(4));
        assert!(!xx3.is_unimodal());
        let q = p(&[1, 4, 1]);
        assert!(q.is_symmetric(2) && q.is_unimodal());
        let r = p(&[1, 2]);
        assert!(!r.is_symmetric(2) && r.is_unimodal());
        assert!(IntPoly::zero().is_symmetric(3) && IntPoly::zero().is_unimodal());
        assert!(p(&[5]).is_unimodal());
        assert!(p(&[1, -1]).is_unimodal() && !p(&[1, -1]).is_nonnegative());
        assert_eq!(p(&[1, 3, 3, 1]).peak_positions().unwrap(), vec![1, 2]);
        assert_eq!(p(&[1, 4, 1]).peak_positions().unwrap(), vec![1]);
    }

    #[test]
    fn gamma_vectors() {
        let g = gamma_vector(&p(&[1, 3, 3, 1]), 3).unwrap();
        assert_eq!(g.as_poly(), p(&[1, 0]));
        let g = gamma_vector(&p(&[1, 4, 1]), 2).unwrap();
        assert_eq!(g.as_poly(), p(&[1, 2]));
        let g = gamma_vector(&p(&[0, 1, 0, 1]), 4).unwrap();
        assert_eq!(g.gamma, vec![0.into(), 1.into(), (-2).into()]);
        assert!(!p(&[0, 1, 0, 1]).is_gamma_positive(4));
        assert!(gamma_vector(&p(&[1, 2]), 2).is_none());
        assert!(IntPoly::zero().is_gamma_positive(4));
    }

    #[test]
    fn symmetric_decompositions() {
        let d = symmetric_decomposition(&p(&[0, 2, 4]), 3).unwrap();
        assert_eq!(d.a, p(&[0, 2, 2]));
        assert_eq!(d.b, p(&[0, 2]));
        let s = p(&[1, 4, 1]);
        let d = symmetric_decomposition(&s, 2).unwrap();
        assert_eq!((d.a, d.b), (s, IntPoly::zero()));
        let d = symmetric_decomposition(&p(&[7]), 0).unwrap();
        assert_eq!((d.a, d.b), (p(&[7]), IntPoly::zero()));
        assert!(symmetric_decomposition(&p(&[1, 1, 1]), 1).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 1, 7, 1]).to_string(), "x + 7x^2 + x^3");
        assert_eq!(p(&[1, -4, 0, -1]).to_string(), "1 - 4x - x^3");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let json = serde_json::to_string(&p(&[1, 0, -3])).unwrap();
        assert_eq!(json, r#"["1","0","-3"]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[1, 0, -3]));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(IntPoly::one_minus_x_pow(2), p(&[1, -2, 1]));
        assert_eq!(div_one_minus_x(&p(&[1, 0, -1])).unwrap(), p(&[1, 1]));
        assert!(div_one_minus_x(&p(&[1, 1])).is_none());
        assert_eq!(p(&[0, 3, 1]).div_x().unwrap(), p(&[3, 1]));
        assert!(p(&[1, 3]).div_x().is_err());
    }
}
