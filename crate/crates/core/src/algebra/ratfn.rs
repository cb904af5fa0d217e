use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::laurent::LaurentBivariate;
use super::poly::IntegerPolynomial;
use crate::error::{Error, Result};

/// Element of Q(t) in canonical form: numerator and denominator are coprime
/// integer polynomials with no common integer content, and the denominator
/// has a positive leading coefficient. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntegerPolynomial,
    den: IntegerPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntegerPolynomial, den: IntegerPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        num = num.scale_div(&c);
        den = den.scale_div(&c);
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self { num: IntegerPolynomial::zero(), den: IntegerPolynomial::one() }
    }

    pub fn from_poly(p: IntegerPolynomial) -> Self {
        Self::new(p, IntegerPolynomial::one()).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &IntegerPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntegerPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial, when the denominator is a unit.
    pub fn as_polynomial(&self) -> Option<IntegerPolynomial> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Substitutes `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        let k = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        Self::new(self.num.reverse(k), self.den.reverse(k)).expect("reversed denominator is nonzero")
    }

    /// First `n` Taylor coefficients at `t = 0`.
    pub fn series_prefix(&self, n: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::SeriesPole);
        }
        let den = self.den.to_vec();
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                acc -= dj * &out[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralSeries { index: k });
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl IntegerPolynomial {
    fn scale_div(&self, c: &BigInt) -> Self {
        let mut out = IntegerPolynomial::zero();
        for (i, a) in self.terms() {
            out.add_term(i, a / c);
        }
        out
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Canonicalizes `num / den`; `ratfn_normalize(n, d)` in operation form.
pub fn ratfn_normalize(num: IntegerPolynomial, den: IntegerPolynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

/// A bivariate Laurent numerator over a univariate denominator in `w = uv`.
///
/// Canonical form: no nonconstant factor `q(w)` of the denominator has
/// `q(uv)` dividing the numerator, the integer content is removed, and the
/// denominator has a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UvRational {
    num: LaurentBivariate,
    den: IntegerPolynomial,
}

impl UvRational {
    pub fn new(num: LaurentBivariate, den: IntegerPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (min_k, diags) = num.diagonals();
        let mut g = den.clone();
        for p in diags.values() {
            g = g.gcd(p);
        }
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut diags: std::collections::BTreeMap<i64, IntegerPolynomial> = diags
            .into_iter()
            .map(|(d, p)| (d, p.div_exact(&g).expect("gcd divides diagonal")))
            .collect();
        let mut c = den.content();
        for p in diags.values() {
            c = c.gcd(&p.content());
        }
        if den.leading_coeff().is_negative() {
            c = -c;
        }
        den = den.scale_div(&c);
        for p in diags.values_mut() {
            *p = p.scale_div(&c);
        }
        Ok(Self { num: LaurentBivariate::from_diagonals(min_k, &diags), den })
    }

    pub fn zero() -> Self {
        Self { num: LaurentBivariate::zero(), den: IntegerPolynomial::one() }
    }

    pub fn from_laurent(num: LaurentBivariate) -> Self {
        Self::new(num, IntegerPolynomial::one()).expect("unit denominator")
    }

    pub fn numerator(&self) -> &LaurentBivariate {
        &self.num
    }

    /// Denominator as a polynomial in `w = uv`.
    pub fn denominator(&self) -> &IntegerPolynomial {
        &self.den
    }

    /// The Laurent polynomial, when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentBivariate> {
        self.den.is_one().then_some(&self.num)
    }

    /// Multiplies by `r(uv)`.
    pub fn mul_w(&self, r: &RationalFunction) -> Self {
        let num = &self.num * &LaurentBivariate::from_uv(r.numerator());
        Self::new(num, &self.den * r.denominator()).expect("nonzero denominator")
    }
}

impl<'a> Add<&'a UvRational> for &'a UvRational {
    type Output = UvRational;
    fn add(self, rhs: &UvRational) -> UvRational {
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &LaurentBivariate::from_uv(&a))
            + &(&rhs.num * &LaurentBivariate::from_uv(&b));
        UvRational::new(num, &self.den * &a).expect("nonzero denominator")
    }
}

impl fmt::Display for UvRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let den = LaurentBivariate::from_uv(&self.den);
        write!(f, "({}) / ({})", self.num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(c.iter().copied())
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let r = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator(), &p(&[1]));
        let r = rf(&[0, 2], &[2]);
        assert_eq!(r.numerator(), &p(&[0, 1]));
        assert!(r.denominator().is_one());
        assert_eq!(RationalFunction::new(p(&[1]), p(&[])), Err(Error::ZeroDenominator));
        // sign moves to the numerator
        let r = rf(&[1], &[1, -1]);
        assert_eq!(r.numerator(), &p(&[-1]));
        assert_eq!(r.denominator(), &p(&[-1, 1]));
    }

    #[test]
    fn series_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(rf(&[1], &[1, -1]).series_prefix(4).unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(rf(&[1, 1], &[1, -2, 1]).series_prefix(4).unwrap(), ints(&[1, 3, 5, 7]));
        assert_eq!(rf(&[0, 1], &[1, -3, 3, -1]).series_prefix(4).unwrap(), ints(&[0, 1, 3, 6]));
        assert_eq!(rf(&[1], &[0, 1]).series_prefix(2), Err(Error::SeriesPole));
        assert_eq!(rf(&[1], &[2, 1]).series_prefix(2), Err(Error::NonIntegralSeries { index: 0 }));
    }

    #[test]
    fn invert_variable_of_geometric_series() {
        // 1/(t - 1) at t -> 1/t is t/(1 - t)
        let r = rf(&[1], &[-1, 1]).invert_variable();
        assert_eq!(r, rf(&[0, 1], &[1, -1]));
    }

    #[test]
    fn uv_rational_reduces_common_w_factor() {
        // (u^2 v^2 - 1) / (uv - 1) = uv + 1
        let num = LaurentBivariate::from_terms([(2, 2, 1), (0, 0, -1)]);
        let r = UvRational::new(num, p(&[-1, 1])).unwrap();
        assert_eq!(r.as_laurent(), Some(&LaurentBivariate::from_terms([(1, 1, 1), (0, 0, 1)])));
        // u - v has no w factor
        let num = LaurentBivariate::from_terms([(1, 0, 1), (0, 1, -1)]);
        let r = UvRational::new(num.clone(), p(&[-1, 1])).unwrap();
        assert_eq!(r.numerator(), &num);
    }
}
