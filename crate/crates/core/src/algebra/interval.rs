//! Rigorous fixed-point enclosures of `cos(2*pi*j/m)`.
//!
//! Values are integers at scale `2^prec` together with an error radius in
//! units of the last place; the true value lies in
//! `[(value - err) / 2^prec, (value + err) / 2^prec]`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct Enclosure {
    pub value: BigInt,
    pub err: BigInt,
}

/// `atan(1/k)` by its alternating series.
fn atan_inv(k: u64, prec: u64) -> Enclosure {
    let one = BigInt::one() << prec;
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut power = BigInt::from(k); // k^(2i+1)
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    for i in 0u64.. {
        let term = &one / (&power * BigInt::from(2 * i + 1));
        if term.is_zero() {
            break;
        }
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        terms += 1;
        power *= &k2;
    }
    Enclosure {
        value: sum,
        err: BigInt::from(terms + 1),
    }
}

/// `pi` via Machin's formula.
pub fn pi(prec: u64) -> Enclosure {
    let a = atan_inv(5, prec);
    let b = atan_inv(239, prec);
    Enclosure {
        value: a.value * 16 - b.value * 4,
        err: a.err * 16 + b.err * 4,
    }
}

/// `cos(2*pi*j/m)` at precision `prec`.
pub fn cos_two_pi_fraction(j: i64, m: u64, prec: u64) -> Enclosure {
    assert!(m >= 1);
    let m_i = m as i64;
    let mut r = j.rem_euclid(m_i);
    if 2 * r > m_i {
        r = m_i - r;
    }
    // angle = pi * a / m with a in [0, m/2], possibly after cos(t) = -cos(pi - t)
    let (a, negate) = if 4 * r > m_i {
        (m_i - 2 * r, true)
    } else {
        (2 * r, false)
    };
    let p = pi(prec);
    let x = (&p.value * BigInt::from(a)).div_floor(&BigInt::from(m));
    let x_err = (&p.err * BigInt::from(a)).div_ceil(&BigInt::from(m)) + 1;

    let one = BigInt::one() << prec;
    let x2 = (&x * &x) >> prec;
    let mut term = one.clone();
    let mut sum = one;
    let mut steps = 0u64;
    for k in 1u64.. {
        term = (&term * &x2) >> prec;
        term /= BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        steps += 1;
    }
    let err = x_err + BigInt::from(16 * steps + 4);
    Enclosure {
        value: if negate { -sum } else { sum },
        err,
    }
}

/// Sign of `sum_j c_j cos(2*pi*j*step/m)` for rational `c_j` (indexed by `j`).
///
/// Precision doubles until the enclosure excludes zero, so the caller must
/// guarantee the value is nonzero; an exactly zero input returns
/// `Ordering::Equal` without refinement when all coefficients vanish.
pub fn sign_of_cosine_sum(coeffs: &[BigRational], step: u64, m: u64) -> Ordering {
    if coeffs.iter().all(|c| c.is_zero()) {
        return Ordering::Equal;
    }
    let denom = coeffs
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&denom / c.denom()))
        .collect();
    let mut prec = 64u64;
    loop {
        let mut center = BigInt::zero();
        let mut radius = BigInt::zero();
        for (j, a) in ints.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let c = cos_two_pi_fraction((j as u64 * step % m) as i64, m, prec);
            center += a * &c.value;
            radius += a.abs() * &c.err;
        }
        if center > radius {
            return Ordering::Greater;
        }
        if -&center > radius {
            return Ordering::Less;
        }
        assert!(prec < 1 << 20, "sign refinement did not terminate; value is zero");
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_f64(e: &Enclosure, prec: u64) -> (f64, f64) {
        let scale = 2f64.powi(prec as i32);
        let v: f64 = e.value.to_string().parse::<f64>().unwrap() / scale;
        let r: f64 = e.err.to_string().parse::<f64>().unwrap() / scale;
        (v, r)
    }

    #[test]
    fn pi_enclosure_contains_pi() {
        let (v, r) = to_f64(&pi(80), 80);
        assert!((v - std::f64::consts::PI).abs() <= r + 1e-15);
        assert!(r < 1e-20);
    }

    #[test]
    fn cosines_match_float() {
        for m in 1..=13u64 {
            for j in 0..m as i64 {
                let e = cos_two_pi_fraction(j, m, 70);
                let (v, r) = to_f64(&e, 70);
                let exact = (2.0 * std::f64::consts::PI * j as f64 / m as f64).cos();
                assert!((v - exact).abs() <= r + 1e-15, "m={m} j={j}: {v} vs {exact}");
            }
        }
    }

    #[test]
    fn tiny_differences_are_resolved() {
        // cos(2pi/7) + cos(4pi/7) + cos(6pi/7) = -1/2 exactly; perturb by 2^-100.
        let mut c = vec![BigRational::zero(); 4];
        for x in &mut c[1..] {
            *x = BigRational::one();
        }
        c[0] = BigRational::new(1.into(), 2.into())
            + BigRational::new(1.into(), BigInt::one() << 100);
        assert_eq!(sign_of_cosine_sum(&c, 1, 7), Ordering::Greater);
        c[0] = BigRational::new(1.into(), 2.into())
            - BigRational::new(1.into(), BigInt::one() << 100);
        assert_eq!(sign_of_cosine_sum(&c, 1, 7), Ordering::Less);
    }
}
