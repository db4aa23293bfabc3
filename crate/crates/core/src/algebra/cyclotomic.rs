//! Roots of unity and exact arithmetic in cyclotomic fields `Q(zeta_m)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::interval::sign_of_cosine_sum;
use super::laurent::LaurentPoly1;
use crate::error::{Error, Result};

/// `exp(2*pi*i*k/n)`, stored in lowest terms (`1` is `0/1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootOfUnity {
    numerator: u64,
    order: u64,
}

impl RootOfUnity {
    /// Panics if `n == 0`.
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n > 0, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as u64;
        if k == 0 {
            return RootOfUnity {
                numerator: 0,
                order: 1,
            };
        }
        let g = k.gcd(&n);
        RootOfUnity {
            numerator: k / g,
            order: n / g,
        }
    }

    pub fn one() -> Self {
        Self::new(0, 1)
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn conjugate(&self) -> Self {
        Self::new(-(self.numerator as i64), self.order)
    }

    /// All `n`-th roots of unity `exp(2*pi*i*k/n)`, `k = 0..n-1`.
    pub fn all_of_order_dividing(n: u64) -> Vec<Self> {
        (0..n as i64).map(|k| Self::new(k, n)).collect()
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.order)
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    /// Accepts `k/n` (meaning `exp(2*pi*i*k/n)`).
    fn from_str(s: &str) -> Result<Self> {
        let (k, n) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected k/n, got {s:?}")))?;
        let k: i64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order in {s:?}")))?;
        if n == 0 {
            return Err(Error::Parse("root of unity of order 0".into()));
        }
        Ok(Self::new(k, n))
    }
}

/// The `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u64) -> LaurentPoly1 {
    assert!(m >= 1);
    let mut p = LaurentPoly1::from_terms([(m as i64, 1), (0, -1)]);
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = p
                .div_exact(&cyclotomic_polynomial(d))
                .expect("cyclotomic factors divide t^m - 1");
        }
    }
    p
}

/// Element of `Q(zeta_m)`: coefficients of `1, zeta, ..., zeta^(phi(m)-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElem(Vec<BigRational>);

impl CycloElem {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }
}

/// `Q(zeta_m)` with `zeta_m = exp(2*pi*i/m)`, presented as `Q[z]/Phi_m(z)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: u64,
    /// Monic `Phi_m`, ascending, length `degree + 1`.
    modulus: Vec<BigRational>,
}

impl CyclotomicField {
    pub fn new(m: u64) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.max_degree().unwrap_or(0) as usize;
        let modulus = (0..=deg as i64)
            .map(|i| BigRational::from_integer(phi.coeff(i)))
            .collect();
        CyclotomicField { order: m, modulus }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> CycloElem {
        CycloElem(vec![BigRational::zero(); self.degree()])
    }

    pub fn from_int(&self, v: impl Into<BigInt>) -> CycloElem {
        let mut e = self.zero();
        e.0[0] = BigRational::from_integer(v.into());
        e
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycloElem {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        self.reduce(coeffs)
    }

    /// Image of the root of unity `w`; its order must divide `m`.
    pub fn root(&self, w: RootOfUnity) -> CycloElem {
        assert_eq!(self.order % w.order(), 0, "root not in this field");
        self.zeta_pow((w.numerator() * (self.order / w.order())) as i64)
    }

    fn reduce(&self, mut c: Vec<BigRational>) -> CycloElem {
        let d = self.degree();
        while c.len() > d {
            let lead = c.pop().expect("nonempty");
            if lead.is_zero() {
                continue;
            }
            let base = c.len() - d;
            for i in 0..d {
                if !self.modulus[i].is_zero() {
                    c[base + i] -= &lead * &self.modulus[i];
                }
            }
        }
        c.resize(d, BigRational::zero());
        CycloElem(c)
    }

    pub fn is_zero(&self, a: &CycloElem) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &CycloElem) -> CycloElem {
        CycloElem(a.0.iter().map(|x| -x).collect())
    }

    pub fn scale_int(&self, a: &CycloElem, c: &BigInt) -> CycloElem {
        let c = BigRational::from_integer(c.clone());
        CycloElem(a.0.iter().map(|x| x * &c).collect())
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        let d = self.degree();
        let mut out = vec![BigRational::zero(); 2 * d];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    /// Complex conjugation `zeta -> zeta^(-1)`.
    pub fn conj(&self, a: &CycloElem) -> CycloElem {
        let m = self.order as usize;
        let mut out = vec![BigRational::zero(); m.max(1)];
        for (j, x) in a.0.iter().enumerate() {
            if !x.is_zero() {
                out[(m - j % m) % m] += x;
            }
        }
        self.reduce(out)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &CycloElem) -> Option<CycloElem> {
        if self.is_zero(a) {
            return None;
        }
        // Extended Euclid in Q[z]: s*a + t*Phi = g, g a nonzero constant.
        let mut r0 = trim(self.modulus.clone());
        let mut r1 = trim(a.0.clone());
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant because Phi_m is irreducible.
        let g = r1.first().cloned().filter(|g| !g.is_zero())?;
        let inv_g = g.recip();
        let coeffs = s1.into_iter().map(|c| c * &inv_g).collect();
        Some(self.reduce(coeffs))
    }

    /// Evaluate an integer Laurent polynomial at `zeta^k`.
    pub fn eval_laurent(&self, p: &LaurentPoly1, k: i64) -> CycloElem {
        let mut acc = self.zero();
        for (e, c) in p.terms() {
            let term = self.scale_int(&self.zeta_pow(e * k), c);
            acc = self.add(&acc, &term);
        }
        acc
    }

    /// Sign of a real element (one equal to its conjugate).
    pub fn real_sign(&self, a: &CycloElem) -> Ordering {
        debug_assert_eq!(a, &self.conj(a), "real_sign of a non-real element");
        sign_of_cosine_sum(&a.0, 1, self.order)
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_reduction() {
        assert_eq!(RootOfUnity::new(2, 4), RootOfUnity::new(1, 2));
        assert_eq!(RootOfUnity::new(6, 6), RootOfUnity::one());
        let w = RootOfUnity::new(1, 6);
        assert_eq!(w.conjugate(), RootOfUnity::new(5, 6));
        assert_eq!(RootOfUnity::new(-1, 6), RootOfUnity::new(5, 6));
        assert_eq!("3/9".parse::<RootOfUnity>().unwrap(), RootOfUnity::new(1, 3));
        assert!("3".parse::<RootOfUnity>().is_err());
        assert!("1/0".parse::<RootOfUnity>().is_err());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), LaurentPoly1::from_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), LaurentPoly1::from_coeffs(&[1, -1, 1]));
        assert_eq!(
            cyclotomic_polynomial(12),
            LaurentPoly1::from_coeffs(&[1, 0, -1, 0, 1])
        );
        assert_eq!(cyclotomic_polynomial(7).max_degree(), Some(6));
    }

    #[test]
    fn field_inverse_and_conjugate() {
        for m in [1u64, 2, 3, 5, 8, 12] {
            let f = CyclotomicField::new(m);
            let a = f.add(&f.zeta_pow(1), &f.from_int(3));
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), f.from_int(1), "m={m}");
            // zeta * conj(zeta) = 1
            assert_eq!(f.mul(&f.zeta_pow(1), &f.conj(&f.zeta_pow(1))), f.from_int(1));
        }
    }

    #[test]
    fn real_signs() {
        let f = CyclotomicField::new(5);
        // zeta + conj(zeta) = 2cos(72deg) > 0 ; zeta^2 + conj = 2cos(144deg) < 0
        let z = f.zeta_pow(1);
        let r1 = f.add(&z, &f.conj(&z));
        assert_eq!(f.real_sign(&r1), Ordering::Greater);
        let z2 = f.zeta_pow(2);
        let r2 = f.add(&z2, &f.conj(&z2));
        assert_eq!(f.real_sign(&r2), Ordering::Less);
    }

    #[test]
    fn evaluation_detects_roots() {
        // t^2 - t + 1 vanishes at primitive 6th roots only
        let p = LaurentPoly1::from_coeffs(&[1, -1, 1]);
        let f6 = CyclotomicField::new(6);
        assert!(f6.is_zero(&f6.eval_laurent(&p, 1)));
        assert!(!f6.is_zero(&f6.eval_laurent(&p, 2)));
        let sym = LaurentPoly1::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert!(f6.is_zero(&f6.eval_laurent(&sym, 5)));
    }
}
