//! The transition polynomials `p_{n,k}` for barycentric subdivision, the
//! f-to-h transform, and derangement polynomials.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};

static PNK_ROWS: RwLock<Vec<Vec<IntPoly>>> = RwLock::new(Vec::new());

/// `p_{n,0}, …, p_{n,n}`, computed by
/// `p_{n,k} = x Σ_{i<k} p_{n-1,i} + Σ_{i>=k} p_{n-1,i}` from `p_{0,0} = 1`,
/// where the upper sum stops at `i = n-1` (there is no `p_{n-1,n}`).
pub fn pnk_row(n: usize) -> Vec<IntPoly> {
    if let Some(row) = PNK_ROWS.read().expect("pnk cache poisoned").get(n) {
        return row.clone();
    }
    let mut rows = PNK_ROWS.write().expect("pnk cache poisoned");
    if rows.is_empty() {
        rows.push(vec![IntPoly::one()]);
    }
    while rows.len() <= n {
        let prev = rows.last().expect("seeded");
        let m = prev.len();
        // suffix[k] = Σ_{i>=k} p_{m-1,i}; prefix[k] = Σ_{i<k}
        let mut suffix = vec![IntPoly::zero(); m + 2];
        for i in (0..m).rev() {
            suffix[i] = &suffix[i + 1] + &prev[i];
        }
        let mut prefix = IntPoly::zero();
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            row.push(prefix.shift(1) + &suffix[k]);
            if k < m {
                prefix += &prev[k];
            }
        }
        rows.push(row);
    }
    rows[n].clone()
}

pub fn pnk(n: usize, k: usize) -> Result<IntPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("p_{{n,k}} needs 0 <= k <= n, got n={n}, k={k}")));
    }
    Ok(pnk_row(n).swap_remove(k))
}

/// `Σ_{i=0}^{n} f_{i-1} x^i (1-x)^{n-i}` for `f = (f_{-1}, …, f_{n-1})`.
/// The empty f-vector (void complex) gives the zero polynomial.
pub fn h_from_f<T: Clone + Into<BigInt>>(f: &[T]) -> IntPoly {
    let Some(n) = f.len().checked_sub(1) else {
        return IntPoly::zero();
    };
    f.iter()
        .enumerate()
        .map(|(i, fi)| IntPoly::one_minus_x_pow(n - i).shift(i).scale(&fi.clone().into()))
        .sum()
}

/// f-vector of the barycentric subdivision of the simplex on `m` vertices:
/// entry `k` counts chains of `k` nonempty subsets of an `m`-set.
pub fn sd_chain_counts_simplex(m: usize) -> Vec<BigInt> {
    let binom = binomials(m);
    // ending[s][j]: chains of j nonempty sets whose top is a fixed s-set.
    let mut ending = vec![vec![BigInt::zero(); m + 1]; m + 1];
    for s in 1..=m {
        ending[s][1] = BigInt::from(1);
        for j in 2..=s {
            let mut acc = BigInt::zero();
            for t in 1..s {
                acc += &binom[s][t] * &ending[t][j - 1];
            }
            ending[s][j] = acc;
        }
    }
    let mut f = vec![BigInt::zero(); m + 1];
    f[0] = BigInt::from(1);
    for (k, fk) in f.iter_mut().enumerate().skip(1) {
        for s in 1..=m {
            *fk += &binom[m][s] * &ending[s][k];
        }
    }
    f
}

/// `h(sd(2^V))` for `|V| = m`.
pub fn h_sd_simplex(m: usize) -> IntPoly {
    h_from_f(&sd_chain_counts_simplex(m))
}

/// The derangement polynomial `d_n`, the local h-polynomial of the barycentric
/// subdivision of the simplex on `n` vertices. The restriction of that
/// subdivision to a face `F` is the barycentric subdivision of `2^F`, so the
/// inclusion-exclusion over restrictions groups by `|F|`.
pub fn derangement_poly(n: usize) -> IntPoly {
    let binom = binomials(n);
    (0..=n)
        .map(|k| {
            let term = h_sd_simplex(k).scale(&binom[n][k]);
            if (n - k) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

pub(crate) fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::from(1); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}
