//! The `S̃`-polynomials of lattice polytopes, Hodge-Deligne polynomials of
//! nondegenerate torus hypersurfaces, and the local contribution of an
//! isolated singularity to the stringy E-function, computed two ways.

mod checks;
mod report;
mod tdelta;

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::algebra::{homogenize_substitute, IntegerPolynomial, LaurentBivariate, UvRational};
use crate::error::{Error, Result};
use crate::newton::{support_complex, varchenko_fan, MonomialSupport, SupportComplex, VarchenkoFan};
use crate::polytope::{FaceLattice, LatticePolytope, OrderIdeal};

pub use checks::{lattice_pyramid, polytope_checks, singularity_checks, Check};
pub use report::{COEFFICIENT_NOTE, conjecture_probe, sign_report, ProbeEntry, SignReport, SignTerm, StringyReport};
pub use tdelta::{open_cone_series, t_delta, t_delta_bruteforce, triangulate_cone};

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `S̃(F, ℐ, t)` for the face `top` of `fl`, summing over faces below `top`
/// that are not in the ideal (an absent ideal is the empty ideal).
pub fn stilde_in(fl: &FaceLattice, top: usize, ideal: Option<&OrderIdeal>) -> Result<IntegerPolynomial> {
    if ideal.is_some_and(|i| i.contains(top)) {
        return Err(Error::NotAnIdeal("the ideal contains the whole polytope".into()));
    }
    let d = fl.dim(top);
    let mut acc = IntegerPolynomial::zero();
    for f in fl.poset().interval_elements(fl.bottom(), top) {
        if ideal.is_some_and(|i| i.contains(f)) {
            continue;
        }
        let term = &fl.hstar(f)? * &fl.poset().g_interval(f, top);
        acc = &acc + &term.scale(&sign(d - fl.dim(f)));
    }
    Ok(acc)
}

/// `S̃(P, t)`.
pub fn stilde(p: &LatticePolytope) -> Result<IntegerPolynomial> {
    let fl = FaceLattice::new(p)?;
    stilde_in(&fl, fl.top(), None)
}

/// `S̃(P, ℐ, t)` for a proper order ideal of the face lattice of `P`.
pub fn stilde_ideal(fl: &FaceLattice, ideal: &OrderIdeal) -> Result<IntegerPolynomial> {
    stilde_in(fl, fl.top(), Some(ideal))
}

/// `S̃(F, Q, t)`: the ideal of faces of `F` not containing `Q`.
pub fn stilde_face_in(fl: &FaceLattice, top: usize, q: usize) -> Result<IntegerPolynomial> {
    if !fl.leq(q, top) {
        return Err(Error::NotAFace);
    }
    stilde_in(fl, top, Some(&OrderIdeal::not_containing(fl, q)))
}

pub fn stilde_face(fl: &FaceLattice, q: usize) -> Result<IntegerPolynomial> {
    stilde_face_in(fl, fl.top(), q)
}

/// `S̃(F, ℐ ∩ 𝒫(F), t)` by the recursion
/// `h*_F - sum_{G < F, G ∉ ℐ} S̃(G, ℐ ∩ 𝒫(G)) g([G, F]^*)`.
pub fn stilde_recursive(fl: &FaceLattice, top: usize, ideal: &OrderIdeal) -> Result<IntegerPolynomial> {
    if ideal.contains(top) {
        return Err(Error::NotAnIdeal("the ideal contains the whole polytope".into()));
    }
    let mut memo = HashMap::new();
    stilde_rec(fl, top, ideal, &mut memo)
}

fn stilde_rec(
    fl: &FaceLattice,
    f: usize,
    ideal: &OrderIdeal,
    memo: &mut HashMap<usize, IntegerPolynomial>,
) -> Result<IntegerPolynomial> {
    if let Some(p) = memo.get(&f) {
        return Ok(p.clone());
    }
    let mut acc = fl.hstar(f)?;
    for g in fl.poset().interval_elements(fl.bottom(), f) {
        if g == f || ideal.contains(g) {
            continue;
        }
        let term = &stilde_rec(fl, g, ideal, memo)? * &fl.poset().g_dual_interval(g, f);
        acc = &acc - &term;
    }
    memo.insert(f, acc.clone());
    Ok(acc)
}

/// Both sides of `S̃(P,Q) = S̃(P,Q') + sum_{Q' <= F < P, Q ⊄ F}
/// g([F,P],[F,F∨Q]) S̃(F,Q')`.
pub fn face_ideal_expansion(fl: &FaceLattice, q_prime: usize, q: usize) -> Result<(IntegerPolynomial, IntegerPolynomial)> {
    if !fl.leq(q_prime, q) {
        return Err(Error::Incomparable(q_prime, q));
    }
    let top = fl.top();
    let lhs = stilde_face(fl, q)?;
    let mut rhs = stilde_face(fl, q_prime)?;
    for f in fl.poset().interval_elements(q_prime, top) {
        if f == top || fl.leq(q, f) {
            continue;
        }
        let rel = fl.poset().relative_g_in(f, top, fl.join(f, q));
        rhs = &rhs + &(&rel * &stilde_face_in(fl, f, q_prime)?);
    }
    Ok((lhs, rhs))
}

pub fn prop_2_14_check(fl: &FaceLattice, q_prime: usize, q: usize) -> Result<bool> {
    let (lhs, rhs) = face_ideal_expansion(fl, q_prime, q)?;
    Ok(lhs == rhs)
}

/// Hodge-Deligne polynomial of a nondegenerate hypersurface in the torus
/// of the affine lattice of the face `top`, whose Newton polytope is that
/// face.
pub fn hd_torus_hypersurface_in(fl: &FaceLattice, top: usize) -> Result<LaurentBivariate> {
    let d = fl.dim(top);
    if d < 0 {
        return Err(Error::EmptyInput);
    }
    let t_minus_one = IntegerPolynomial::from_coeffs([-1, 1]);
    let mut sum = LaurentBivariate::zero();
    for f in fl.poset().interval_elements(fl.bottom(), top) {
        let df = fl.dim(f);
        let s = homogenize_substitute(&stilde_in(fl, f, None)?, df + 1);
        let g = LaurentBivariate::from_uv(&fl.poset().g_dual_interval(f, top));
        sum = &sum + &(&s * &g);
    }
    let inner = &LaurentBivariate::from_uv(&t_minus_one.pow(d as u32)) + &sum.scale(&sign(d + 1));
    let h = inner.shift(-1, -1);
    if !h.is_polynomial() {
        return Err(Error::Consistency(format!("Hodge-Deligne polynomial has negative exponents: {h}")));
    }
    Ok(h)
}

pub fn hd_torus_hypersurface(p: &LatticePolytope) -> Result<LaurentBivariate> {
    let fl = FaceLattice::new(p)?;
    hd_torus_hypersurface_in(&fl, fl.top())
}

/// Face lattices of the maximal compact faces of `Γ(f)`, so that every
/// compact face is looked up in one of them and `h*` values are shared.
pub struct CompactFaces {
    lattices: Vec<FaceLattice>,
    /// compact face of `Γ(f)` -> (lattice, face in that lattice)
    location: HashMap<usize, (usize, usize)>,
}

impl CompactFaces {
    pub fn new(fan: &VarchenkoFan) -> Result<Self> {
        let newton = &fan.newton;
        let mut lattices = Vec::new();
        let mut location = HashMap::new();
        let compact = newton.compact_faces();
        for (li, top) in newton.maximal_compact_faces().into_iter().enumerate() {
            let fl = FaceLattice::new(&newton.face_polytope(top)?)?;
            for &mu in &compact {
                if newton.is_face_leq(mu, top) && !location.contains_key(&mu) {
                    let idx = fl
                        .find_by_points(&newton.face_points(mu))
                        .ok_or_else(|| Error::Consistency("compact face missing from its facet".into()))?;
                    location.insert(mu, (li, idx));
                }
            }
            lattices.push(fl);
        }
        Ok(Self { lattices, location })
    }

    pub fn get(&self, mu: usize) -> (&FaceLattice, usize) {
        let (l, i) = self.location[&mu];
        (&self.lattices[l], i)
    }

    pub fn stilde(&self, mu: usize) -> Result<IntegerPolynomial> {
        let (fl, i) = self.get(mu);
        stilde_in(fl, i, None)
    }

    pub fn hd(&self, mu: usize) -> Result<LaurentBivariate> {
        let (fl, i) = self.get(mu);
        hd_torus_hypersurface_in(fl, i)
    }
}

/// `E_st,0` as `sum_τ H(N_τ) T_τ(uv)` over compact faces `τ`, with
/// `H(N_τ) = (uv - 1)^(n - dim τ) H(Y_τ)`.
pub fn estring_general_value(s: &MonomialSupport) -> Result<UvRational> {
    let fan = varchenko_fan(s)?;
    let compact = CompactFaces::new(&fan)?;
    let n = s.n as i64;
    let uv_minus_one = LaurentBivariate::from_uv(&IntegerPolynomial::from_coeffs([-1, 1]));
    let mut total = UvRational::zero();
    for tau in fan.newton.compact_faces() {
        let dim = fan.newton.face(tau).dim;
        let mut h = compact.hd(tau)?;
        if h.is_zero() {
            continue;
        }
        for _ in 0..(n - dim) {
            h = &h * &uv_minus_one;
        }
        let t = t_delta(&fan, tau)?;
        total = &total + &UvRational::from_laurent(h).mul_w(&t);
    }
    Ok(total)
}

/// `E_st,0 = (1/uv) sum_μ (-u)^(dim μ + 1) S̃(μ, v/u) S̃(P_μ, ℐ_μ, uv)` over
/// compact faces `μ` and `μ = ∅`, for a crepant fan.
pub fn estring_crepant_value(s: &MonomialSupport) -> Result<LaurentBivariate> {
    let sc = support_complex(s)?;
    estring_crepant_from(&sc)
}

pub fn estring_crepant_from(sc: &SupportComplex) -> Result<LaurentBivariate> {
    let compact = CompactFaces::new(&sc.fan)?;
    let mut sum = LaurentBivariate::zero();
    let mut terms: Vec<(Option<usize>, i64)> = vec![(None, -1)];
    terms.extend(sc.fan.newton.compact_faces().into_iter().map(|mu| (Some(mu), sc.fan.newton.face(mu).dim)));
    for (mu, dim) in terms {
        let s_mu = match mu {
            None => IntegerPolynomial::one(),
            Some(m) => compact.stilde(m)?,
        };
        if s_mu.is_zero() {
            continue;
        }
        let left = homogenize_substitute(&s_mu, dim + 1).scale(&sign(dim + 1));
        let p_mu = sc.p_of(mu);
        let right = stilde_in(&sc.p_empty, p_mu, Some(&sc.ideal_of(p_mu)))?;
        sum = &sum + &(&left * &LaurentBivariate::from_uv(&right));
    }
    let e = sum.shift(-1, -1);
    if !e.is_polynomial() {
        return Err(Error::Consistency(format!("crepant local contribution is not divisible by uv: {sum}")));
    }
    Ok(e)
}

/// `(μ, dim μ, S̃(P_μ, ℐ_μ), S̃(P_μ))`, with `None` for `μ = ∅`.
pub type SupportStilde = (Option<usize>, i64, IntegerPolynomial, IntegerPolynomial);

/// `S̃(P_μ, ℐ_μ, t)` for each `μ` in the compact faces plus `∅`, with `μ`'s
/// dimension; `None` stands for `∅`.
pub fn support_stildes(sc: &SupportComplex) -> Result<Vec<SupportStilde>> {
    let mut out = Vec::new();
    let mut items: Vec<(Option<usize>, i64)> = vec![(None, -1)];
    items.extend(sc.fan.newton.compact_faces().into_iter().map(|mu| (Some(mu), sc.fan.newton.face(mu).dim)));
    for (mu, dim) in items {
        let p_mu = sc.p_of(mu);
        let with_ideal = stilde_in(&sc.p_empty, p_mu, Some(&sc.ideal_of(p_mu)))?;
        let plain = stilde_in(&sc.p_empty, p_mu, None)?;
        out.push((mu, dim, with_ideal, plain));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::linalg::ivec;

    fn poly(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(c.iter().copied())
    }

    fn lp(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(points).unwrap()
    }

    #[test]
    fn stilde_small_cases() {
        assert!(stilde(&lp(&[&[4, 1]])).unwrap().is_zero());
        assert_eq!(stilde(&lp(&[&[0], &[3]])).unwrap(), poly(&[0, 2]));
        assert!(stilde(&lp(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap().is_zero());
        assert!(stilde(&LatticePolytope::empty(2)).unwrap().is_one());
    }

    #[test]
    fn wrong_signs_segment_ideal() {
        let seg = lp(&[&[6, 1, 1, 1, 1, 3], &[6, 1, 1, 1, 3, 1]]);
        let fl = FaceLattice::new(&seg).unwrap();
        let only_empty = OrderIdeal::generated_by(&fl, &[fl.bottom()]);
        assert_eq!(stilde_ideal(&fl, &only_empty).unwrap(), poly(&[-1, 1]));
        assert_eq!(stilde_recursive(&fl, fl.top(), &only_empty).unwrap(), poly(&[-1, 1]));
    }

    #[test]
    fn a1_domain_with_star() {
        let p = lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let fl = FaceLattice::new(&p).unwrap();
        let origin = fl.polytope().vertices().iter().position(|v| *v == ivec(&[0, 0, 0])).unwrap();
        let star = fl.star_neighborhood(origin).unwrap();
        assert_eq!(stilde_ideal(&fl, &star).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(stilde_recursive(&fl, fl.top(), &star).unwrap(), poly(&[0, 1, 1]));
    }

    #[test]
    fn face_ideal_extremes() {
        let sq = FaceLattice::new(&lp(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(stilde_face(&sq, sq.bottom()).unwrap(), stilde_in(&sq, sq.top(), None).unwrap());
        assert_eq!(stilde_face(&sq, sq.top()).unwrap(), sq.hstar(sq.top()).unwrap());
        let v = sq.vertex_face(0).unwrap();
        assert!(prop_2_14_check(&sq, sq.bottom(), v).unwrap());
        assert!(prop_2_14_check(&sq, sq.bottom(), sq.top()).unwrap());
        assert!(prop_2_14_check(&sq, v, v).unwrap());
    }

    #[test]
    fn torus_hypersurfaces() {
        assert!(hd_torus_hypersurface(&lp(&[&[2, 2]])).unwrap().is_zero());
        assert_eq!(hd_torus_hypersurface(&lp(&[&[0], &[1]])).unwrap(), LaurentBivariate::one());
        assert_eq!(hd_torus_hypersurface(&lp(&[&[0], &[2]])).unwrap(), LaurentBivariate::monomial(2, 0, 0));
        // a line in (C*)^2: P^1 minus three points
        let line = hd_torus_hypersurface(&lp(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(line, &LaurentBivariate::monomial(1, 1, 1) - &LaurentBivariate::monomial(2, 0, 0));
    }

    #[test]
    fn a1_both_paths() {
        let s = MonomialSupport::from_slices(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        let expected = &LaurentBivariate::monomial(1, 1, 1) + &LaurentBivariate::one();
        assert_eq!(estring_crepant_value(&s).unwrap(), expected);
        assert_eq!(estring_general_value(&s).unwrap(), UvRational::from_laurent(expected));
    }
}
