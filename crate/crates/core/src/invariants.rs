//! Alexander polynomials and Tristram–Levine signatures from Seifert matrices.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{determinant, CycloElem, CyclotomicField, LaurentPoly1, RootOfUnity};
use crate::seifert::SeifertMatrix;

/// Signature and nullity of the Tristram–Levine form at `at`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureValue {
    pub signature: i64,
    pub nullity: usize,
    pub at: RootOfUnity,
}

/// Symmetric Alexander polynomial `det(t^{1/2} A - t^{-1/2} A^T)`, signed so
/// that `Δ(1) = 1` whenever `Δ(1) = ±1`.
pub fn alexander(a: &SeifertMatrix) -> LaurentPoly1 {
    let m = a.matrix();
    let size = a.size();
    let t = LaurentPoly1::var();
    let rows: Vec<Vec<LaurentPoly1>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| &t.scale(m.get(i, j)) - &LaurentPoly1::constant(m.get(j, i).clone()))
                .collect()
        })
        .collect();
    let det = determinant(rows).shift(-(size as i64 / 2));
    if det.value_at_one().is_negative() {
        -det
    } else {
        det
    }
}

/// Whether `Δ` vanishes at `w`, decided exactly in `Q(ζ_m)`.
pub fn vanishes_at(delta: &LaurentPoly1, w: RootOfUnity) -> bool {
    let field = CyclotomicField::new(w.order());
    field.is_zero(&field.eval_laurent(delta, w.numerator() as i64))
}

/// Hermitian matrix `(1-ω)A + (1-ω̄)A^T` over `Q(ζ_m)`, `m` the order of `ω`.
fn tristram_levine_form(a: &SeifertMatrix, field: &CyclotomicField, w: RootOfUnity) -> Vec<Vec<CycloElem>> {
    let one = field.from_int(1);
    let omega = field.root(w);
    let c = field.sub(&one, &omega);
    let c_bar = field.conj(&c);
    let m = a.matrix();
    let size = a.size();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    field.add(
                        &field.scale_int(&c, m.get(i, j)),
                        &field.scale_int(&c_bar, m.get(j, i)),
                    )
                })
                .collect()
        })
        .collect()
}

/// Signature and nullity of a Hermitian matrix over a cyclotomic field by
/// congruence (Hermitian Gaussian elimination).
fn hermitian_signature(field: &CyclotomicField, mut h: Vec<Vec<CycloElem>>) -> (i64, usize) {
    let mut alive: Vec<usize> = (0..h.len()).collect();
    let mut signature = 0i64;
    loop {
        if let Some(pos) = alive.iter().position(|&i| !field.is_zero(&h[i][i])) {
            let p = alive.remove(pos);
            signature += match field.real_sign(&h[p][p]) {
                Ordering::Greater => 1,
                Ordering::Less => -1,
                Ordering::Equal => unreachable!("nonzero pivot has a sign"),
            };
            let inv = field.inv(&h[p][p]).expect("nonzero pivot");
            let col: Vec<CycloElem> = alive.iter().map(|&r| field.mul(&h[r][p], &inv)).collect();
            for (ri, &r) in alive.iter().enumerate() {
                if field.is_zero(&col[ri]) {
                    continue;
                }
                for &s in &alive {
                    let upd = field.mul(&col[ri], &h[p][s]);
                    h[r][s] = field.sub(&h[r][s], &upd);
                }
            }
            continue;
        }
        let pair = alive.iter().enumerate().find_map(|(a, &i)| {
            alive[a + 1..]
                .iter()
                .find(|&&j| !field.is_zero(&h[i][j]))
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            return (signature, alive.len());
        };
        // The block [[0, h], [h̄, 0]] is hyperbolic: signature 0, rank 2.
        alive.retain(|&r| r != i && r != j);
        let hij = h[i][j].clone();
        let inv_h = field.inv(&hij).expect("nonzero entry");
        let inv_h_bar = field.conj(&inv_h);
        let left: Vec<(CycloElem, CycloElem)> = alive
            .iter()
            .map(|&r| (field.mul(&h[r][i], &inv_h_bar), field.mul(&h[r][j], &inv_h)))
            .collect();
        for (ri, &r) in alive.iter().enumerate() {
            let (ref a_ri, ref a_rj) = left[ri];
            for &s in &alive {
                let upd = field.add(&field.mul(a_ri, &h[j][s]), &field.mul(a_rj, &h[i][s]));
                h[r][s] = field.sub(&h[r][s], &upd);
            }
        }
    }
}

/// Tristram–Levine signature and nullity of `A` at `w`.
pub fn tl_signature(a: &SeifertMatrix, w: RootOfUnity) -> SignatureValue {
    if w.is_one() {
        return SignatureValue {
            signature: 0,
            nullity: a.size(),
            at: w,
        };
    }
    let field = CyclotomicField::new(w.order());
    let form = tristram_levine_form(a, &field, w);
    let (signature, nullity) = hermitian_signature(&field, form);
    SignatureValue {
        signature,
        nullity,
        at: w,
    }
}

/// `∑_{ω^n = 1} σ_ω`, evaluating one root from each conjugate pair in
/// parallel.
pub fn signature_sum(a: &SeifertMatrix, n: u64) -> i64 {
    assert!(n >= 2, "signature_sum needs n >= 2");
    (1..=n / 2)
        .into_par_iter()
        .map(|k| {
            let s = tl_signature(a, RootOfUnity::new(k as i64, n)).signature;
            if 2 * k == n {
                s
            } else {
                2 * s
            }
        })
        .collect::<Vec<i64>>()
        .into_iter()
        .sum()
}

/// Reference version of [`signature_sum`]: every `k = 0..n-1`, sequentially.
pub fn signature_sum_naive(a: &SeifertMatrix, n: u64) -> i64 {
    (0..n)
        .map(|k| tl_signature(a, RootOfUnity::new(k as i64, n)).signature)
        .sum()
}

/// `|Δ(1)|`-style sanity: the determinant of the knot, `|Δ(-1)|`.
pub fn knot_determinant(delta: &LaurentPoly1) -> BigInt {
    delta
        .eval_int(&BigInt::from(-1))
        .map(|v| v.to_integer().abs())
        .unwrap_or_else(BigInt::zero)
}

/// Whether `Δ(1) = 1` and `Δ(t) = Δ(t^{-1})`.
pub fn is_normalized_alexander(delta: &LaurentPoly1) -> bool {
    delta.value_at_one().is_one() && delta.invert_variable() == *delta
}
