//! Resultants against monic moduli.
//!
//! For monic `q` of degree `d` with roots `a_1..a_d`, the resultant
//! `prod_k p(x, a_k)` equals the determinant of multiplication by `p` on
//! the free `Z[x^±1]`-module `Z[x^±1][y]/(q)` with basis `1, y, ..., y^(d-1)`.
//! That determinant is evaluated fraction-free, so the whole computation
//! stays in integer Laurent polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly1, LaurentPoly2};
use super::matrix::determinant;
use crate::error::{Error, Result};

/// `1 + y + ... + y^(n-1)`, whose roots are the nontrivial `n`-th roots of unity.
pub fn cyclic_quotient(n: usize) -> LaurentPoly1 {
    LaurentPoly1::from_terms((0..n as i64).map(|e| (e, 1)))
}

fn check_modulus(q: &LaurentPoly1) -> Result<usize> {
    let low = q.min_degree().ok_or_else(|| Error::MalformedModulus("zero".into()))?;
    let deg = q.max_degree().unwrap_or(0);
    if low < 0 {
        return Err(Error::MalformedModulus(format!("{} has negative powers", q.fmt_with("y"))));
    }
    if deg < 1 {
        return Err(Error::MalformedModulus(format!("{} has degree 0", q.fmt_with("y"))));
    }
    if !q.coeff(deg).is_one() {
        return Err(Error::MalformedModulus(format!("{} is not monic", q.fmt_with("y"))));
    }
    Ok(deg as usize)
}

/// `prod_{q(a) = 0} p(x, a)`, returned as a polynomial in one variable
/// (the former `x`).
///
/// Negative powers of `y` in `p` are cleared by a shift `y^s`; this is only
/// allowed when the product of the roots of `q` is `±1`, so the shift is a
/// unit and the result is exact.
pub fn resultant_y(p: &LaurentPoly2, q: &LaurentPoly1) -> Result<LaurentPoly1> {
    let d = check_modulus(q)?;
    if p.is_zero() {
        return Ok(LaurentPoly1::zero());
    }
    let low_y = p.terms().map(|((_, b), _)| b).min().unwrap_or(0);
    let shift = (-low_y).max(0);
    let p = p.shift((0, shift));

    // Reduce p to a vector of d coefficients (polynomials in x) modulo q.
    let qc: Vec<BigInt> = (0..=d as i64).map(|i| q.coeff(i)).collect();
    let coeffs = p.coefficients_in_y();
    let top = coeffs.keys().next_back().copied().unwrap_or(0).max(d as i64 - 1) as usize;
    let mut v = vec![LaurentPoly1::zero(); top + 1];
    for (e, c) in coeffs {
        v[e as usize] = c;
    }
    reduce_mod(&mut v, &qc);
    v.truncate(d);
    v.resize(d, LaurentPoly1::zero());

    // Column j holds y^j * p mod q.
    let mut columns = Vec::with_capacity(d);
    let mut cur = v;
    for _ in 0..d {
        columns.push(cur.clone());
        let mut next = vec![LaurentPoly1::zero(); d + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        reduce_mod(&mut next, &qc);
        next.truncate(d);
        cur = next;
    }
    let matrix: Vec<Vec<LaurentPoly1>> = (0..d)
        .map(|i| (0..d).map(|j| columns[j][i].clone()).collect())
        .collect();
    let norm = determinant(matrix);

    if shift == 0 {
        return Ok(norm);
    }
    // prod a_k = (-1)^d q(0)
    let mut root_product = qc[0].clone();
    if d % 2 == 1 {
        root_product = -root_product;
    }
    if !root_product.abs().is_one() {
        return Err(Error::MalformedModulus(
            "negative powers of y need a modulus with unit constant term".into(),
        ));
    }
    Ok(if root_product.is_negative() && shift % 2 == 1 {
        -norm
    } else {
        norm
    })
}

/// Resultant of a one-variable polynomial against a monic modulus: the
/// integer `prod_{q(a)=0} f(a)`.
pub fn resultant(f: &LaurentPoly1, q: &LaurentPoly1) -> Result<BigInt> {
    let r = resultant_y(&f.as_poly_in_y(), q)?;
    Ok(r.coeff(0))
}

/// In-place reduction of `v` (ascending coefficients in y) modulo monic `q`.
fn reduce_mod(v: &mut Vec<LaurentPoly1>, q: &[BigInt]) {
    let d = q.len() - 1;
    while v.len() > d {
        let lead = v.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let base = v.len() - d;
        for (i, qi) in q.iter().take(d).enumerate() {
            if !qi.is_zero() {
                v[base + i] = &v[base + i] - &lead.scale(qi);
            }
        }
    }
}
