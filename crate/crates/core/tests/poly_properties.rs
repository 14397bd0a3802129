use num_bigint::BigInt;
use proptest::prelude::*;
use theta_core::poly::{gamma_vector, is_real_rooted, pnk_row, symmetric_decomposition, IntPoly};

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..50, 0..max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn symmetric(n: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..20, n / 2 + 1).prop_map(move |half| {
        let mut c = vec![0i64; n + 1];
        for (i, v) in half.iter().enumerate() {
            c[i] = *v;
            c[n - i] = *v;
        }
        IntPoly::from_i64s(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in poly(6), b in poly(6), c in poly(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn reverse_is_an_involution(p in poly(6), extra in 0usize..3) {
        let n = p.degree().unwrap_or(0) + extra;
        let r = p.reverse(n).unwrap();
        prop_assert_eq!(r.reverse(n).unwrap(), p);
    }

    #[test]
    fn symmetric_decomposition_reassembles(p in poly(7)) {
        let n = p.degree().unwrap_or(0);
        let d = symmetric_decomposition(&p, n).unwrap();
        prop_assert!(d.a.is_symmetric(n));
        prop_assert!(d.b.is_zero() || d.b.is_symmetric(n - 1));
        prop_assert_eq!(&d.a + &d.b.shift(1), p);
    }

    #[test]
    fn gamma_vector_reconstructs(p in symmetric(6)) {
        let g = gamma_vector(&p, 6).unwrap();
        prop_assert_eq!(g.reconstruct(), p.clone());
        prop_assert_eq!(g.is_nonnegative(), p.is_gamma_positive(6));
    }

    #[test]
    fn products_of_real_linear_factors_are_real_rooted(roots in prop::collection::vec(0i64..9, 1..6)) {
        let p = roots
            .iter()
            .fold(IntPoly::one(), |acc, &r| &acc * &IntPoly::from_i64s(&[r, 1]));
        prop_assert!(is_real_rooted(&p));
        let q = &p * &IntPoly::from_i64s(&[1, 0, 1]);
        prop_assert!(!is_real_rooted(&q));
    }
}

#[test]
fn pnk_rows_are_reversal_symmetric_with_factorial_values() {
    assert_eq!(pnk_row(4)[0], IntPoly::from_i64s(&[1, 11, 11, 1]));
    for n in 1..=6 {
        let row = pnk_row(n);
        let fact: BigInt = (1..=n as u64).product::<u64>().into();
        for k in 0..=n {
            assert_eq!(row[k].reverse(n).unwrap(), row[n - k]);
            assert_eq!(row[k].value_at_one(), fact, "p_{{{n},{k}}}(1)");
        }
    }
}
