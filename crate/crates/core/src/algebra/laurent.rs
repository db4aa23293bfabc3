//! Integer Laurent polynomials in one or two variables.
//!
//! Both flavours share [`Laurent`], parameterized by the exponent type:
//! `i64` for one variable, `(i64, i64)` for the pair `(x, y)`. Terms are kept
//! in a `BTreeMap`, which gives a canonical (lexicographic) term order and
//! makes equality, hashing and printing deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vectors of Laurent monomials.
pub trait Exponent: Copy + Ord + Eq + fmt::Debug + std::hash::Hash + Send + Sync {
    const ARITY: usize;
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn sub(self, other: Self) -> Self;
    /// Componentwise minimum.
    fn meet(self, other: Self) -> Self;
    /// Componentwise `>=`.
    fn dominates(self, other: Self) -> bool;
    fn component(self, i: usize) -> i64;
}

impl Exponent for i64 {
    const ARITY: usize = 1;
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn sub(self, other: Self) -> Self {
        self - other
    }
    fn meet(self, other: Self) -> Self {
        self.min(other)
    }
    fn dominates(self, other: Self) -> bool {
        self >= other
    }
    fn component(self, _i: usize) -> i64 {
        self
    }
}

impl Exponent for (i64, i64) {
    const ARITY: usize = 2;
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn sub(self, other: Self) -> Self {
        (self.0 - other.0, self.1 - other.1)
    }
    fn meet(self, other: Self) -> Self {
        (self.0.min(other.0), self.1.min(other.1))
    }
    fn dominates(self, other: Self) -> bool {
        self.0 >= other.0 && self.1 >= other.1
    }
    fn component(self, i: usize) -> i64 {
        if i == 0 {
            self.0
        } else {
            self.1
        }
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// No stored coefficient is ever zero; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

/// Laurent polynomial in a single variable (printed as `t`).
pub type LaurentPoly1 = Laurent<i64>;
/// Laurent polynomial in two variables `x`, `y`.
pub type LaurentPoly2 = Laurent<(i64, i64)>;

impl<E: Exponent> Laurent<E> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(E::zero(), c)
    }

    pub fn monomial(e: E, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (E, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: E, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&E::zero()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing (lexicographic) exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: E) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Largest term in lexicographic order.
    pub fn leading_term(&self) -> Option<(E, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum over all exponents (the largest monomial dividing `self`).
    pub fn min_exponent(&self) -> Option<E> {
        self.terms.keys().copied().reduce(E::meet)
    }

    /// Multiply by the monomial with exponent `e`.
    pub fn shift(&self, e: E) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (k.add(e), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Apply an exponent map that is injective on the support (a change of
    /// variables by monomials).
    pub fn map_exponents<F: Exponent>(&self, f: impl Fn(E) -> F) -> Laurent<F> {
        let mut out = Laurent::<F>::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `±m` for a monomial `m`: the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().is_some_and(|c| c.abs().is_one())
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(E::zero().sub(*e), c.clone()))
    }

    /// Content: gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring.
    ///
    /// Both operands are first shifted so that no variable divides them; the
    /// quotient of such polynomials is an ordinary polynomial, found by
    /// leading-term division in lexicographic order.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sp = self.min_exponent()?;
        let sd = d.min_exponent()?;
        let mut rem = self.shift(E::zero().sub(sp));
        let div = d.shift(E::zero().sub(sd));
        let (dl, dc) = div.leading_term().map(|(e, c)| (e, c.clone()))?;
        let mut quot = Self::zero();
        while let Some((rl, rc)) = rem.leading_term().map(|(e, c)| (e, c.clone())) {
            if !rl.dominates(dl) {
                return None;
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let m = Self::monomial(rl.sub(dl), q);
            rem = &rem - &(&m * &div);
            quot = &quot + &m;
        }
        Some(quot.shift(sp.sub(sd)))
    }

    /// Divide every coefficient by the integer `c`, if exact.
    pub fn div_exact_int(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*e, q);
        }
        Some(Laurent { terms })
    }

    /// Canonical representative of the class of `self` modulo units `±m`:
    /// every variable's lowest exponent becomes 0 and the lexicographically
    /// first coefficient is positive.
    pub fn normalize_units(&self) -> Result<Self> {
        let low = self.min_exponent().ok_or(Error::UndefinedNormalization)?;
        let shifted = self.shift(E::zero().sub(low));
        let first_negative = shifted
            .terms
            .values()
            .next()
            .is_some_and(|c| c.is_negative());
        Ok(if first_negative { -shifted } else { shifted })
    }

    /// Equality up to multiplication by a unit (`≐`).
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        match (self.normalize_units(), other.normalize_units()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Difference between the largest and smallest exponent of variable `i`.
    pub fn breadth_in(&self, i: usize) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::UndefinedBreadth);
        }
        let (lo, hi) = self.terms.keys().fold((i64::MAX, i64::MIN), |(lo, hi), e| {
            let v = e.component(i);
            (lo.min(v), hi.max(v))
        });
        Ok(hi - lo)
    }
}

impl LaurentPoly1 {
    /// Polynomial from ascending coefficients `c_0 + c_1 t + ...`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone().into())),
        )
    }

    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// Highest minus lowest exponent with nonzero coefficient.
    pub fn breadth(&self) -> Result<i64> {
        self.breadth_in(0)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitute `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        self.map_exponents(|e: i64| -e)
    }

    pub fn eval_int(&self, t: &BigInt) -> Option<num_rational::BigRational> {
        use num_rational::BigRational;
        if t.is_zero() && self.min_degree().is_some_and(|d| d < 0) {
            return None;
        }
        let tr = BigRational::from_integer(t.clone());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let pw = if *e >= 0 {
                num_traits::pow(tr.clone(), *e as usize)
            } else {
                num_traits::pow(tr.recip(), (-*e) as usize)
            };
            acc += pw * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Sum of all coefficients, i.e. the value at `t = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// View as a two-variable polynomial in `y` alone.
    pub fn as_poly_in_y(&self) -> LaurentPoly2 {
        self.map_exponents(|e: i64| (0, e))
    }

    /// View as a two-variable polynomial in `x` alone.
    pub fn as_poly_in_x(&self) -> LaurentPoly2 {
        self.map_exponents(|e: i64| (e, 0))
    }

    pub fn fmt_with(&self, var: &str) -> String {
        format_terms(self.terms.iter().rev().map(|(e, c)| (c, vec![(var, *e)])))
    }
}

impl LaurentPoly2 {
    pub fn x() -> Self {
        Self::monomial((1, 0), 1)
    }

    pub fn y() -> Self {
        Self::monomial((0, 1), 1)
    }

    pub fn swap_variables(&self) -> Self {
        self.map_exponents(|(a, b): (i64, i64)| (b, a))
    }

    /// Substitute `y -> y^{-1}` (reversing the orientation of the second
    /// component of a two-component link).
    pub fn invert_y(&self) -> Self {
        self.map_exponents(|(a, b): (i64, i64)| (a, -b))
    }

    pub fn invert_x(&self) -> Self {
        self.map_exponents(|(a, b): (i64, i64)| (-a, b))
    }

    /// Set `x = y = t`.
    pub fn diagonal(&self) -> LaurentPoly1 {
        self.map_exponents(|(a, b): (i64, i64)| a + b)
    }

    /// Substitute an integer for `y`; `None` if `y = 0` meets a negative power.
    pub fn specialize_y(&self, y: &BigInt) -> Option<LaurentPoly1> {
        let mut out = LaurentPoly1::zero();
        for ((a, b), c) in &self.terms {
            let v = int_pow(y, *b)?;
            out.add_term(*a, c * v);
        }
        Some(out)
    }

    /// Substitute an integer for `x`.
    pub fn specialize_x(&self, x: &BigInt) -> Option<LaurentPoly1> {
        self.swap_variables().specialize_y(x)
    }

    /// Coefficients as a polynomial in `y`: map from y-exponent to a
    /// polynomial in `x` (written with the one-variable type).
    pub fn coefficients_in_y(&self) -> BTreeMap<i64, LaurentPoly1> {
        let mut out: BTreeMap<i64, LaurentPoly1> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(*b)
                .or_insert_with(LaurentPoly1::zero)
                .add_term(*a, c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in_y`](Self::coefficients_in_y).
    pub fn from_coefficients_in_y<'a>(
        parts: impl IntoIterator<Item = (i64, &'a LaurentPoly1)>,
    ) -> Self {
        let mut out = Self::zero();
        for (b, p) in parts {
            for (a, c) in p.terms() {
                out.add_term((a, b), c.clone());
            }
        }
        out
    }

    pub fn fmt_with(&self, xv: &str, yv: &str) -> String {
        format_terms(
            self.terms
                .iter()
                .rev()
                .map(|((a, b), c)| (c, vec![(xv, *a), (yv, *b)])),
        )
    }
}

/// Integer power, `None` for `0^negative` or a non-unit base with a negative
/// exponent (the result would not be an integer).
fn int_pow(base: &BigInt, e: i64) -> Option<BigInt> {
    if e >= 0 {
        return Some(num_traits::pow(base.clone(), e as usize));
    }
    if base.abs().is_one() {
        Some(num_traits::pow(base.clone(), (-e) as usize))
    } else {
        None
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a BigInt, Vec<(&'a str, i64)>)>) -> String {
    let mut out = String::new();
    for (c, vars) in terms {
        let mono: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(v, e)| {
                if *e == 1 {
                    (*v).to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { "-" } else { "+" });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("t"))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("x", "y"))
    }
}

impl<E: Exponent> fmt::Debug for Laurent<E>
where
    Laurent<E>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<E: Exponent> Add for &Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<E: Exponent> Sub for &Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<E: Exponent> Mul for &Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, rhs: &Laurent<E>) -> Laurent<E> {
        let mut out = Laurent::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.add(*b), ca * cb);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(mut self) -> Laurent<E> {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<E: Exponent> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$m(&rhs)
            }
        }
        impl<E: Exponent> $tr<&Laurent<E>> for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, rhs: &Laurent<E>) -> Laurent<E> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<E: Exponent> std::iter::Product for Laurent<E> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1(c: &[i64]) -> LaurentPoly1 {
        LaurentPoly1::from_coeffs(c)
    }

    #[test]
    fn zero_has_no_terms() {
        let p = &p1(&[1, 2]) - &p1(&[1, 2]);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn breadth_examples() {
        // t^3 - t
        assert_eq!(p1(&[0, -1, 0, 1]).breadth().unwrap(), 2);
        assert_eq!(LaurentPoly1::constant(5).breadth().unwrap(), 0);
        assert_eq!(LaurentPoly1::zero().breadth(), Err(Error::UndefinedBreadth));
    }

    #[test]
    fn normalize_examples() {
        // -2t^2 + 3t - 2 -> 2t^2 - 3t + 2
        assert_eq!(
            p1(&[-2, 3, -2]).normalize_units().unwrap(),
            p1(&[2, -3, 2])
        );
        // t^-1 - 1 + t -> 1 - t + t^2
        let sym = LaurentPoly1::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(sym.normalize_units().unwrap(), p1(&[1, -1, 1]));
        assert_eq!(LaurentPoly1::one().normalize_units().unwrap(), LaurentPoly1::one());
        assert_eq!(
            LaurentPoly1::zero().normalize_units(),
            Err(Error::UndefinedNormalization)
        );
    }

    #[test]
    fn two_variable_normalization() {
        // -x^2 y^-1 + x^3 -> shift to y^0, x^0; lex-first coefficient positive.
        let p = LaurentPoly2::from_terms([((2, -1), -1), ((3, 0), 1)]);
        let n = p.normalize_units().unwrap();
        assert_eq!(n, LaurentPoly2::from_terms([((0, 0), 1), ((1, 1), -1)]));
    }

    #[test]
    fn exact_division() {
        let a = p1(&[1, -1, 1]);
        let b = p1(&[-2, 0, 5, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.shift(-7).div_exact(&b.shift(3)).unwrap(), a.shift(-10));
        assert!(p1(&[1, 1]).div_exact(&p1(&[1, 2])).is_none());
        assert!(p1(&[2]).div_exact(&p1(&[3])).is_none());
    }

    #[test]
    fn exact_division_two_variables() {
        let x = LaurentPoly2::x();
        let y = LaurentPoly2::y();
        let one = LaurentPoly2::one();
        let a = &(&x * &y) - &(&y + &one); // xy - y - 1
        let b = &(&x * &x) + &(&y.pow(3) * &x.shift((0, -2)));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&(&y - &one)).is_none());
    }

    #[test]
    fn display_descending() {
        let p = LaurentPoly1::from_terms([(-1, 1), (0, -3), (1, 1)]);
        assert_eq!(p.to_string(), "t-3+t^-1");
        let q = LaurentPoly2::from_terms([((5, 1), 1), ((6, 0), 1), ((0, 2), -2)]);
        assert_eq!(q.to_string(), "x^6+x^5*y-2*y^2");
    }

    #[test]
    fn pow_and_units() {
        let p = p1(&[1, 1]);
        assert_eq!(p.pow(3), p1(&[1, 3, 3, 1]));
        let u = LaurentPoly1::monomial(-4, -1);
        assert!(u.is_unit());
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
    }
}
