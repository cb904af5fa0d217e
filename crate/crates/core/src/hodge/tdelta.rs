//! Generating functions of lattice points in open cones of the fan, graded
//! by `σ - m_f`, via a half-open simplicial decomposition.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{IntegerPolynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::newton::VarchenkoFan;
use crate::polytope::linalg::{dot, ivec, rank, saturated_basis, solve_in_basis, sub, IVec};
use crate::polytope::{lattice_points, Halfspace, RationalPolyhedron};

/// Generator subsets lying on each facet of `cone(gens)`.
fn cone_facets(gens: &[IVec]) -> Result<Vec<Vec<usize>>> {
    let n = gens[0].len();
    let cone = RationalPolyhedron::hull(&[vec![BigInt::zero(); n]], gens)?;
    Ok(cone
        .inequalities()
        .iter()
        .map(|h| (0..gens.len()).filter(|&i| dot(&h.normal, &gens[i]).is_zero()).collect())
        .collect())
}

/// Pulling triangulation of `cone(gens[idx])`: pull the first generator (in
/// the caller's fixed order), recurse into the facets avoiding it.
fn pulling(gens: &[IVec], idx: &[usize]) -> Result<Vec<Vec<usize>>> {
    let sub_gens: Vec<IVec> = idx.iter().map(|&i| gens[i].clone()).collect();
    if rank(&sub_gens) == idx.len() {
        return Ok(vec![idx.to_vec()]);
    }
    let apex = idx[0];
    let mut out = Vec::new();
    for facet in cone_facets(&sub_gens)? {
        if facet.contains(&0) {
            continue;
        }
        let face_idx: Vec<usize> = facet.iter().map(|&k| idx[k]).collect();
        for simplex in pulling(gens, &face_idx)? {
            let mut s = vec![apex];
            s.extend(simplex);
            out.push(s);
        }
    }
    Ok(out)
}

/// Simplicial cones covering `cone(gens)`, generators sorted
/// lexicographically before pulling.
pub fn triangulate_cone(gens: &[IVec]) -> Result<Vec<Vec<IVec>>> {
    let mut sorted = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let idx: Vec<usize> = (0..sorted.len()).collect();
    Ok(pulling(&sorted, &idx)?
        .into_iter()
        .map(|s| s.into_iter().map(|i| sorted[i].clone()).collect())
        .collect())
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// `sum t^(-ℓ(v))` over lattice points `v` in the relative interior of
/// `cone(gens)`, for a linear `ℓ` positive on every generator.
pub fn open_cone_series(gens: &[IVec], ell: &[BigInt]) -> Result<RationalFunction> {
    let mut sorted = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    for g in &sorted {
        if !dot(ell, g).is_positive() {
            return Err(Error::NotCanonical(format!("ray {g:?} has non-positive grading")));
        }
    }
    let n = sorted[0].len();
    let lattice = saturated_basis(&sorted, n);
    // interior point Σ gens, perturbed by ε^k gens[k-1] to break ties
    let q0: IVec = (0..n).map(|i| sorted.iter().map(|g| &g[i]).sum()).collect();
    let mut total = RationalFunction::zero();
    for simplex in triangulate_cone(&sorted)? {
        let coords = |v: &[BigInt]| solve_in_basis(&simplex, v).expect("vector in span");
        let mut probes = vec![coords(&q0)];
        probes.extend(sorted.iter().map(|g| coords(g)));
        let strict: Vec<bool> = (0..simplex.len())
            .map(|i| {
                probes
                    .iter()
                    .map(|p| &p[i])
                    .find(|x| !x.is_zero())
                    .map(|x| x.is_positive())
                    .expect("generic perturbation")
            })
            .collect();
        let grades: Vec<BigInt> = simplex.iter().map(|g| dot(ell, g)).collect();
        let total_grade: BigInt = grades.iter().sum();
        // fundamental parallelepiped: the group generated by the lattice
        // basis modulo the simplex generators
        let shifts: Vec<Vec<BigRational>> =
            lattice.iter().map(|b| coords(b).iter().map(frac).collect()).collect();
        let zero = vec![BigRational::zero(); simplex.len()];
        let mut group: BTreeSet<Vec<BigRational>> = BTreeSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(e) = frontier.pop() {
            for s in &shifts {
                let next: Vec<BigRational> = e.iter().zip(s).map(|(a, b)| frac(&(a + b))).collect();
                if group.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut num = IntegerPolynomial::zero();
        for mut lambda in group {
            for i in 0..lambda.len() {
                if strict[i] && lambda[i].is_zero() {
                    lambda[i] = BigRational::one();
                }
            }
            let grade: BigRational = lambda
                .iter()
                .zip(&grades)
                .map(|(l, g)| l * BigRational::from_integer(g.clone()))
                .sum();
            if !grade.is_integer() {
                return Err(Error::Consistency("parallelepiped point off the lattice".into()));
            }
            let exp = (&total_grade - grade.to_integer()).to_usize().ok_or(Error::Overflow("grade"))?;
            num.add_term(exp, BigInt::one());
        }
        let den = grades.iter().fold(IntegerPolynomial::one(), |acc, g| {
            let d = g.to_usize().expect("small grade");
            &acc * &(&IntegerPolynomial::monomial(1, d) - &IntegerPolynomial::one())
        });
        total = &total + &RationalFunction::new(num, den)?;
    }
    Ok(total)
}

/// `T_δ(t) = sum t^(m_f(v) - σ(v))` over lattice points `v` whose first
/// meet locus is the compact face `tau`.
pub fn t_delta(fan: &VarchenkoFan, tau: usize) -> Result<RationalFunction> {
    let newton = &fan.newton;
    let face = newton.face(tau);
    if !face.is_compact() {
        return Err(Error::NotAFace);
    }
    let w = &newton.vertices()[*face.vertices.iter().next().expect("nonempty")];
    let ell: IVec = w.iter().map(|x| BigInt::one() - x).collect();
    open_cone_series(&fan.cone_generators(tau), &ell)
}

/// Brute-force coefficients of `T_δ(1/x)` up to `x^degree`: counts lattice
/// points of each grade whose first meet locus is `tau`.
pub fn t_delta_bruteforce(fan: &VarchenkoFan, tau: usize, degree: i64) -> Result<Vec<BigInt>> {
    let newton = &fan.newton;
    let s = newton.support();
    let n = s.n;
    let face = newton.face(tau);
    let w = newton.vertices()[*face.vertices.iter().next().ok_or(Error::NotAFace)?].clone();
    let ell: IVec = w.iter().map(|x| BigInt::one() - x).collect();
    let mut ineqs: Vec<Halfspace> = (0..n)
        .map(|i| Halfspace { normal: (0..n).map(|j| BigInt::from((i == j) as i64)).collect(), rhs: BigInt::zero() })
        .collect();
    for m in &s.monomials {
        ineqs.push(Halfspace { normal: sub(&ivec(m), &w), rhs: BigInt::zero() });
    }
    ineqs.push(Halfspace { normal: ell.iter().map(|x| -x).collect(), rhs: BigInt::from(-degree) });
    let region = RationalPolyhedron::from_inequalities(n, &ineqs, &[])?;
    let mut counts = vec![BigInt::zero(); degree as usize + 1];
    for v in lattice_points(&region)? {
        if newton.first_meet_locus_int(&v)? == tau {
            let grade: i64 = v.iter().zip(&w).map(|(a, b)| a * (1 - b.to_i64().unwrap())).sum();
            counts[grade as usize] += 1;
        }
    }
    Ok(counts)
}
