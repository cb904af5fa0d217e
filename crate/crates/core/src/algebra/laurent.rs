use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntegerPolynomial;

/// Laurent polynomial in `u`, `v` with integer coefficients. Exponents may be
/// negative; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentBivariate {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentBivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * u^i * v^j`.
    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, c.into());
        out
    }

    /// Builds from `(i, j, c)` triples.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            out.add_term(i, j, c.into());
        }
        out
    }

    /// `p(uv)`.
    pub fn from_uv(p: &IntegerPolynomial) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            out.add_term(k as i64, k as i64, c.clone());
        }
        out
    }

    /// `u^k * p(v/u) = sum_i a_i u^(k-i) v^i`.
    pub fn homogenize_substitute(p: &IntegerPolynomial, k: i64) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.terms() {
            out.add_term(k - i as i64, i as i64, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Terms ordered by total degree, then by the `u` exponent.
    pub fn sorted_terms(&self) -> Vec<(i64, i64, BigInt)> {
        let mut v: Vec<_> = self.coeffs.iter().map(|(&(i, j), c)| (i, j, c.clone())).collect();
        v.sort_by_key(|&(i, j, _)| (i + j, i));
        v
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.keys().all(|&(i, j)| i >= 0 && j >= 0)
    }

    /// Multiplies by `u^a v^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&(i, j), c)| ((i + a, j + b), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    /// Evaluates at integer `u`, `v` (both nonzero when negative exponents occur).
    pub fn eval(&self, u: i64, v: i64) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        let pw = |base: i64, e: i64| -> BigRational {
            let b = BigRational::from_integer(base.into());
            if e >= 0 {
                num_traits::pow(b, e as usize)
            } else {
                num_traits::pow(b.recip(), (-e) as usize)
            }
        };
        for (&(i, j), c) in &self.coeffs {
            acc += BigRational::from_integer(c.clone()) * pw(u, i) * pw(v, j);
        }
        acc
    }

    /// Splits into diagonals: for each `d = i - j`, the univariate polynomial
    /// `p_d` with `self = sum_d u^max(d,0) v^max(-d,0) p_d(uv)` (up to a common
    /// monomial shift returned alongside). Used to reduce fractions over
    /// denominators in `uv`.
    pub(crate) fn diagonals(&self) -> (i64, BTreeMap<i64, IntegerPolynomial>) {
        // shift so every diagonal starts at a nonnegative power of uv
        let mut min_k = 0i64;
        for &(i, j) in self.coeffs.keys() {
            min_k = min_k.min(i.min(j));
        }
        let mut out: BTreeMap<i64, IntegerPolynomial> = BTreeMap::new();
        for (&(i, j), c) in &self.coeffs {
            let d = i - j;
            let k = i.min(j) - min_k;
            out.entry(d)
                .or_default()
                .add_term(k as usize, c.clone());
        }
        (min_k, out)
    }

    pub(crate) fn from_diagonals(min_k: i64, diags: &BTreeMap<i64, IntegerPolynomial>) -> Self {
        let mut out = Self::zero();
        for (&d, p) in diags {
            for (k, c) in p.terms() {
                let k = k as i64 + min_k;
                let (i, j) = if d >= 0 { (k + d, k) } else { (k, k - d) };
                out.add_term(i, j, c.clone());
            }
        }
        out
    }
}

impl<'a> Add<&'a LaurentBivariate> for &'a LaurentBivariate {
    type Output = LaurentBivariate;
    fn add(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentBivariate> for &'a LaurentBivariate {
    type Output = LaurentBivariate;
    fn sub(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.coeffs {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentBivariate> for &'a LaurentBivariate {
    type Output = LaurentBivariate;
    fn mul(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = LaurentBivariate::zero();
        for (&(i, j), a) in &self.coeffs {
            for (&(k, l), b) in &rhs.coeffs {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentBivariate {
    type Output = LaurentBivariate;
    fn neg(self) -> LaurentBivariate {
        self.scale(&-BigInt::one())
    }
}

impl Add for LaurentBivariate {
    type Output = LaurentBivariate;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for LaurentBivariate {
    type Output = LaurentBivariate;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for LaurentBivariate {
    type Output = LaurentBivariate;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for LaurentBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, j, c) in self.sorted_terms().into_iter().rev() {
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
            let mut factors = Vec::new();
            for (name, e) in [("u", i), ("v", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
