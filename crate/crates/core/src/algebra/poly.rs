use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(deg, c.into());
        p
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds from a dense coefficient slice, lowest degree first.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(i, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.values().next_back().cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// Dense coefficient vector up to the degree (empty for zero).
    pub fn to_vec(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn add_term(&mut self, deg: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(deg).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&i, a)| (i, a * c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&i, a)| (i + k, a.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.to_vec().iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of the terms of degree strictly below `r`.
    pub fn truncate_below(&self, r: Rational64) -> Self {
        self.filter(|i| Rational64::from_integer(i as i64) < r)
    }

    /// Sum of the terms of degree strictly above `r`.
    pub fn truncate_above(&self, r: Rational64) -> Self {
        self.filter(|i| Rational64::from_integer(i as i64) > r)
    }

    /// The term of degree exactly `r` (zero when `r` is not an integer).
    pub fn term_at(&self, r: Rational64) -> Self {
        self.filter(|i| Rational64::from_integer(i as i64) == r)
    }

    fn filter(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&i, _)| keep(i))
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// `t^k p(1/t)`. Requires `k >= deg p`.
    pub fn reverse(&self, k: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= k), "reverse: degree exceeds k");
        Self {
            coeffs: self.coeffs.iter().map(|(&i, c)| (k - i, c.clone())).collect(),
        }
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Coefficientwise `self <= other`.
    pub fn coeffwise_le(&self, other: &Self) -> bool {
        (other - self).is_nonnegative()
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&i, a)| {
                    debug_assert!((a % c).is_zero());
                    (i, a / c)
                })
                .collect(),
        }
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem by zero");
        let lb = b.leading_coeff();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff();
            r = &r.scale(&lb) - &b.shift(dr - db).scale(&lr);
        }
        r
    }

    /// Greatest common divisor in Q[t], returned primitive over Z with a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient `self / d` over Z; `None` if the division leaves a
    /// remainder or a non-integral coefficient.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let ld = d.leading_coeff();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (c, rem) = r.leading_coeff().div_rem(&ld);
            if !rem.is_zero() {
                return None;
            }
            let term = Self::monomial(c, dr - dd);
            r = &r - &(&term * d);
            q = &q + &term;
        }
        Some(q)
    }
}

impl From<i64> for IntegerPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a IntegerPolynomial> for &'a IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.add_term(i, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a IntegerPolynomial> for &'a IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.add_term(i, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a IntegerPolynomial> for &'a IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let mut out = IntegerPolynomial::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial {
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(IntegerPolynomial, Add::add, Sub::sub, Mul::mul);

impl Neg for IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        -&self
    }
}

impl std::iter::Sum for IntegerPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn truncation_examples() {
        let q = p(&[1, 3, 5]);
        assert_eq!(q.truncate_below(Rational64::from_integer(2)), p(&[1, 3]));
        assert!(q.truncate_below(Rational64::from_integer(0)).is_zero());
        assert_eq!(p(&[1, 1, 1]).truncate_below(Rational64::new(3, 2)), p(&[1, 1]));
        assert_eq!(q.truncate_above(Rational64::new(1, 2)), p(&[0, 3, 5]));
        assert!(q.term_at(Rational64::new(1, 2)).is_zero());
        assert_eq!(q.term_at(Rational64::from_integer(2)), p(&[0, 0, 5]));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntegerPolynomial::zero().degree(), None);
        assert_eq!((p(&[1, 2]) - p(&[1, 2])).degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn gcd_and_division() {
        // (t^2 - 1) and (t - 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-2, 2]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        assert_eq!(IntegerPolynomial::zero().gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 0, 2]).to_string(), "1 - 3t + 2t^3");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
