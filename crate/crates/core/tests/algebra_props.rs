use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use tcover::algebra::{
    cyclic_quotient, parse_poly1, parse_poly2, resultant, smith_normal_form, IntMatrix, LaurentPoly1,
    LaurentPoly2,
};

fn poly1() -> impl Strategy<Value = LaurentPoly1> {
    (prop::collection::vec(-4i64..=4, 1..6), -3i64..=3)
        .prop_map(|(c, shift)| LaurentPoly1::from_coeffs(&c).shift(shift))
}

fn nonzero_poly1() -> impl Strategy<Value = LaurentPoly1> {
    poly1().prop_filter("nonzero", |p| !p.is_zero())
}

fn poly2() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec(((-2i64..=3, -2i64..=3), -3i64..=3), 1..6)
        .prop_map(LaurentPoly2::from_terms)
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

/// Product of random elementary matrices of size `n`.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        let mut e = IntMatrix::identity(n);
        if i == j {
            e.set(i, i, -BigInt::one());
        } else {
            e.set(i, j, c.into());
        }
        m = m.mul(&e);
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_invariant_under_unimodular_change(
        m in matrix(),
        left in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..6),
        right in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..6),
    ) {
        let p = unimodular(m.rows(), &left);
        let q = unimodular(m.cols(), &right);
        let (g, d) = smith_normal_form(&m);
        let (g2, d2) = smith_normal_form(&p.mul(&m).mul(&q));
        prop_assert_eq!(g, g2);
        prop_assert_eq!(&d, &d2);
        for w in d.windows(2) {
            prop_assert!(w[1].is_zero() || (w[0] > BigInt::zero() && (&w[1] % &w[0]).is_zero()));
        }
    }

    #[test]
    fn snf_of_square_matrix_has_order_det(m in matrix()) {
        prop_assume!(m.is_square());
        let (g, _) = smith_normal_form(&m);
        let det = m.determinant();
        match g.order() {
            Some(o) => prop_assert_eq!(o, det.abs()),
            None => prop_assert!(det.is_zero()),
        }
        prop_assert_eq!(smith_normal_form(&m.transpose()).0, g);
    }

    #[test]
    fn resultant_is_multiplicative(f in nonzero_poly1(), g in nonzero_poly1(), n in 2usize..=7) {
        let q = cyclic_quotient(n);
        let lhs = resultant(&(&f * &g), &q).unwrap();
        let rhs = resultant(&f, &q).unwrap() * resultant(&g, &q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_ignores_units(f in nonzero_poly1(), k in -4i64..=4, n in 2usize..=6) {
        let q = cyclic_quotient(n);
        let r = resultant(&f, &q).unwrap();
        let moved = resultant(&f.shift(k), &q).unwrap();
        prop_assert_eq!(r.abs(), moved.abs());
    }

    #[test]
    fn normalization_is_idempotent_and_unit_blind(f in nonzero_poly1(), k in -5i64..=5, neg: bool) {
        let n = f.normalize_units().unwrap();
        prop_assert_eq!(n.normalize_units().unwrap(), n.clone());
        let unit = if neg { f.shift(k).scale(&BigInt::from(-1)) } else { f.shift(k) };
        prop_assert_eq!(unit.normalize_units().unwrap(), n.clone());
        prop_assert!(unit.unit_equivalent(&f));
    }

    #[test]
    fn normalization_in_two_variables(p in poly2(), a in -3i64..=3, b in -3i64..=3) {
        let n = p.normalize_units().unwrap();
        prop_assert_eq!(n.normalize_units().unwrap(), n.clone());
        prop_assert_eq!(p.shift((a, b)).normalize_units().unwrap(), n);
    }

    #[test]
    fn breadth_is_additive(f in nonzero_poly1(), g in nonzero_poly1()) {
        let fg = &f * &g;
        prop_assert_eq!(fg.breadth().unwrap(), f.breadth().unwrap() + g.breadth().unwrap());
    }

    #[test]
    fn exact_division_inverts_multiplication(f in nonzero_poly1(), g in nonzero_poly1()) {
        prop_assert_eq!((&f * &g).div_exact(&g), Some(f));
    }

    #[test]
    fn display_parses_back(f in poly1(), p in poly2()) {
        prop_assert_eq!(parse_poly1(&f.to_string()).unwrap(), f);
        prop_assert_eq!(parse_poly2(&p.to_string()).unwrap(), p);
    }
}
