//! Exact polynomial and rational-function arithmetic.
//!
//! Every invariant computed by this crate lives in one of three carriers:
//! [`IntegerPolynomial`] for univariate `t`-polynomials, [`LaurentBivariate`]
//! for `(u, v)` Laurent polynomials, and [`RationalFunction`] /
//! [`UvRational`] for fractions whose denominators live in one variable.

mod laurent;
mod poly;
mod ratfn;

pub use laurent::LaurentBivariate;
pub use poly::{binomial, IntegerPolynomial};
pub use ratfn::{ratfn_normalize, RationalFunction, UvRational};

/// `u^k p(v/u)`.
pub fn homogenize_substitute(p: &IntegerPolynomial, k: i64) -> LaurentBivariate {
    LaurentBivariate::homogenize_substitute(p, k)
}

#[cfg(test)]
mod proptests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Rational64;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = IntegerPolynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(IntegerPolynomial::from_coeffs)
    }

    fn unit_den() -> impl Strategy<Value = IntegerPolynomial> {
        // constant term +-1 keeps the Taylor coefficients integral
        (prop::bool::ANY, prop::collection::vec(-5i64..5, 0..4)).prop_map(|(s, rest)| {
            let mut c = vec![if s { 1 } else { -1 }];
            c.extend(rest);
            IntegerPolynomial::from_coeffs(c)
        })
    }

    fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        (0..a.len())
            .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
            .collect()
    }

    proptest! {
        #[test]
        fn truncations_partition(p in poly(), r in 0i64..8) {
            let r = Rational64::from_integer(r);
            let sum = &(&p.truncate_below(r) + &p.truncate_above(r)) + &p.term_at(r);
            prop_assert_eq!(sum, p);
        }

        #[test]
        fn homogenize_on_diagonal(p in poly(), extra in 0i64..3, s in -3i64..4) {
            let k = p.degree().map_or(0, |d| d as i64) + extra;
            let h = homogenize_substitute(&p, k);
            let lhs = h.eval(s, s);
            let rhs = num_rational::BigRational::from_integer(
                num_traits::pow(BigInt::from(s), k as usize) * p.eval(&BigInt::from(1)),
            );
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn series_of_product_is_convolution(a in poly(), da in unit_den(), b in poly(), db in unit_den()) {
            let ra = RationalFunction::new(a, da).unwrap();
            let rb = RationalFunction::new(b, db).unwrap();
            let n = 8;
            let sa = ra.series_prefix(n).unwrap();
            let sb = rb.series_prefix(n).unwrap();
            prop_assert_eq!((&ra * &rb).series_prefix(n).unwrap(), convolve(&sa, &sb));
        }

        #[test]
        fn arithmetic_agrees_with_series(a in poly(), da in unit_den(), b in poly(), db in unit_den()) {
            let ra = RationalFunction::new(a, da).unwrap();
            let rb = RationalFunction::new(b, db).unwrap();
            let n = 8;
            let sa = ra.series_prefix(n).unwrap();
            let sb = rb.series_prefix(n).unwrap();
            let sum: Vec<BigInt> = sa.iter().zip(&sb).map(|(x, y)| x + y).collect();
            let diff: Vec<BigInt> = sa.iter().zip(&sb).map(|(x, y)| x - y).collect();
            prop_assert_eq!((&ra + &rb).series_prefix(n).unwrap(), sum);
            prop_assert_eq!((&ra - &rb).series_prefix(n).unwrap(), diff);
        }

        #[test]
        fn normalization_is_idempotent(a in poly(), d in unit_den(), m in poly()) {
            prop_assume!(!m.is_zero());
            let r = RationalFunction::new(&a * &m, &d * &m).unwrap();
            let again = RationalFunction::new(r.numerator().clone(), r.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &r);
            prop_assert_eq!(r, RationalFunction::new(a, d).unwrap());
        }
    }
}
