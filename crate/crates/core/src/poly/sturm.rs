//! Exact real-root counting with Sturm sequences over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

type QPoly = Vec<BigRational>;

fn to_q(p: &IntPoly) -> QPoly {
    p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &QPoly) -> QPoly {
    let mut d: QPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut d);
    d
}

/// Remainder of `a` divided by `b` (`b` nonzero).
fn rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &factor * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn quotient(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &factor * c;
        }
        q[shift] = factor;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    q
}

fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Scales by a positive constant so the leading coefficient is ±1.
fn normalize_sign_preserving(p: &mut QPoly) {
    if let Some(lead) = p.last().cloned() {
        let s = lead.abs();
        for c in p.iter_mut() {
            *c /= &s;
        }
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &IntPoly) -> usize {
    let mut f = to_q(p);
    if f.len() <= 1 {
        return 0;
    }
    normalize_sign_preserving(&mut f);
    let mut seq = vec![f.clone(), derivative(&f)];
    loop {
        let n = seq.len();
        let mut r = rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        normalize_sign_preserving(&mut r);
        seq.push(r);
    }
    // Signs at +inf follow leading coefficients; at -inf also the degree parity.
    let at_pos = sign_changes(seq.iter().map(|s| sign(s.last().expect("nonzero"))));
    let at_neg = sign_changes(seq.iter().map(|s| {
        let lead = sign(s.last().expect("nonzero"));
        if (s.len() - 1) % 2 == 1 {
            -lead
        } else {
            lead
        }
    }));
    at_neg - at_pos
}

/// Every root is real (or `p ≡ 0`). Decided on the square-free part, whose
/// distinct real roots must match its degree.
pub fn is_real_rooted(p: &IntPoly) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    if deg == 0 {
        return true;
    }
    let f = to_q(p);
    let g = gcd(&f, &derivative(&f));
    let mut squarefree = quotient(&f, &g);
    normalize_sign_preserving(&mut squarefree);
    let sf_deg = squarefree.len() - 1;
    let ints = IntPoly::new(clear_denominators(&squarefree));
    count_real_roots(&ints) == sf_deg
}

fn clear_denominators(p: &QPoly) -> Vec<BigInt> {
    let lcm = p
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}
