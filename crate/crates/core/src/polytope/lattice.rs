//! Lattice polytopes, lattice-point counting by coordinate slicing, and
//! Ehrhart `h*`-polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::linalg::{affine_dim, IVec};
use super::polyhedron::{Halfspace, RationalPolyhedron};
use crate::algebra::{binomial, IntegerPolynomial};
use crate::error::{Error, Result};

/// A bounded polytope with integral vertices in `Z^n`. The empty polytope is
/// allowed and has dimension -1.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<IVec>,
    dim: i64,
    hull: Option<RationalPolyhedron>,
}

impl LatticePolytope {
    /// Convex hull of integer points; redundant points are discarded.
    pub fn new(points: &[IVec]) -> Result<Self> {
        let hull = RationalPolyhedron::hull(points, &[])?;
        let mut vertices = hull.integer_vertices().expect("hull of integer points");
        vertices.sort();
        Ok(Self { ambient: hull.ambient_dim(), dim: affine_dim(&vertices), vertices, hull: Some(hull) })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::new(&points.iter().map(|p| super::linalg::ivec(p)).collect::<Vec<_>>())
    }

    pub fn empty(ambient: usize) -> Self {
        Self { ambient, vertices: Vec::new(), dim: -1, hull: None }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[IVec] {
        &self.vertices
    }

    /// Inequality description; `None` for the empty polytope.
    pub fn hull(&self) -> Option<&RationalPolyhedron> {
        self.hull.as_ref()
    }

    /// `|mP ∩ Z^n|`, with the convention `f(0) = 1` for nonempty `P`.
    pub fn count_lattice_points(&self, m: u64) -> Result<u64> {
        match &self.hull {
            None => Ok(0),
            Some(_) if m == 0 => Ok(1),
            Some(h) => SliceCounter::new(h)?.count(m as i64),
        }
    }

    /// Ehrhart `h*`-polynomial from the counts at `m = 0..=dim`.
    pub fn hstar(&self) -> Result<IntegerPolynomial> {
        let Some(h) = &self.hull else {
            return Ok(IntegerPolynomial::one());
        };
        let d = self.dim as u64;
        let counter = SliceCounter::new(h)?;
        let mut f = vec![BigInt::from(1)];
        for m in 1..=d {
            f.push(BigInt::from(counter.count(m as i64)?));
        }
        Ok(hstar_from_counts(&f, d))
    }
}

/// `h*_k = sum_{j<=k} (-1)^j C(d+1, j) f(k-j)` for `k = 0..=d`.
pub fn hstar_from_counts(f: &[BigInt], d: u64) -> IntegerPolynomial {
    IntegerPolynomial::from_coeffs((0..=d as usize).map(|k| {
        (0..=k)
            .map(|j| {
                let term = binomial(d + 1, j as u64) * &f[k - j];
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum::<BigInt>()
    }))
}

struct Level {
    inequalities: Vec<(Vec<i128>, i128)>,
    equations: Vec<(Vec<i128>, i128)>,
}

/// Precomputed projections of a bounded polyhedron onto each coordinate
/// prefix; counts and enumerates lattice points of dilates by fixing one
/// coordinate at a time within the range the projections allow.
pub struct SliceCounter {
    levels: Vec<Level>,
}

fn to_i128(h: &Halfspace) -> Result<(Vec<i128>, i128)> {
    let conv = |x: &BigInt| x.to_i128().ok_or(Error::Overflow("slice bounds"));
    Ok((h.normal.iter().map(conv).collect::<Result<_>>()?, conv(&h.rhs)?))
}

impl SliceCounter {
    pub fn new(p: &RationalPolyhedron) -> Result<Self> {
        if !p.is_bounded() {
            return Err(Error::Unbounded);
        }
        let n = p.ambient_dim();
        let mut levels = Vec::with_capacity(n);
        for k in 1..=n {
            let proj: Vec<Vec<BigRational>> = p.vertices().iter().map(|v| v[..k].to_vec()).collect();
            let q = if k == n { p.clone() } else { RationalPolyhedron::hull_rational(&proj, &[])? };
            levels.push(Level {
                inequalities: q.inequalities().iter().map(to_i128).collect::<Result<_>>()?,
                equations: q.equations().iter().map(to_i128).collect::<Result<_>>()?,
            });
        }
        Ok(Self { levels })
    }

    /// Admissible range of coordinate `k` given the prefix, for the dilate `m`.
    fn range(&self, k: usize, prefix: &[i64], m: i64) -> Result<Option<(i64, i64)>> {
        let level = &self.levels[k];
        let mut lo: Option<i128> = None;
        let mut hi: Option<i128> = None;
        let partial = |a: &[i128]| -> i128 {
            a[..k].iter().zip(prefix).map(|(x, &y)| x * y as i128).sum()
        };
        for (a, b) in &level.equations {
            let rhs = b * m as i128 - partial(a);
            let ak = a[k];
            if ak == 0 {
                if rhs != 0 {
                    return Ok(None);
                }
                continue;
            }
            if rhs % ak != 0 {
                return Ok(None);
            }
            let x = rhs / ak;
            lo = Some(lo.map_or(x, |l| l.max(x)));
            hi = Some(hi.map_or(x, |h| h.min(x)));
        }
        for (a, b) in &level.inequalities {
            let rhs = b * m as i128 - partial(a);
            let ak = a[k];
            if ak == 0 {
                if rhs > 0 {
                    return Ok(None);
                }
            } else if ak > 0 {
                let x = Integer::div_ceil(&rhs, &ak);
                lo = Some(lo.map_or(x, |l| l.max(x)));
            } else {
                // ak x >= rhs  <=>  x <= rhs / ak
                let x = Integer::div_floor(&rhs, &ak);
                hi = Some(hi.map_or(x, |h| h.min(x)));
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) if l <= h => {
                let conv = |x: i128| i64::try_from(x).map_err(|_| Error::Overflow("slice range"));
                Ok(Some((conv(l)?, conv(h)?)))
            }
            (Some(_), Some(_)) => Ok(None),
            _ => Err(Error::Unbounded),
        }
    }

    /// Number of lattice points in the `m`-th dilate.
    pub fn count(&self, m: i64) -> Result<u64> {
        let mut prefix = Vec::with_capacity(self.levels.len());
        self.count_rec(m, &mut prefix)
    }

    fn count_rec(&self, m: i64, prefix: &mut Vec<i64>) -> Result<u64> {
        let k = prefix.len();
        let Some((lo, hi)) = self.range(k, prefix, m)? else {
            return Ok(0);
        };
        if k + 1 == self.levels.len() {
            return Ok((hi - lo + 1) as u64);
        }
        let mut total = 0u64;
        for x in lo..=hi {
            prefix.push(x);
            total += self.count_rec(m, prefix)?;
            prefix.pop();
        }
        Ok(total)
    }

    /// Calls `visit` on every lattice point of the `m`-th dilate.
    pub fn for_each_point(&self, m: i64, visit: &mut dyn FnMut(&[i64])) -> Result<()> {
        let mut prefix = Vec::with_capacity(self.levels.len());
        self.visit_rec(m, &mut prefix, visit)
    }

    fn visit_rec(&self, m: i64, prefix: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) -> Result<()> {
        let k = prefix.len();
        if k == self.levels.len() {
            visit(prefix);
            return Ok(());
        }
        let Some((lo, hi)) = self.range(k, prefix, m)? else {
            return Ok(());
        };
        for x in lo..=hi {
            prefix.push(x);
            self.visit_rec(m, prefix, visit)?;
            prefix.pop();
        }
        Ok(())
    }
}

/// All lattice points of a bounded rational polyhedron.
pub fn lattice_points(p: &RationalPolyhedron) -> Result<Vec<Vec<i64>>> {
    let counter = SliceCounter::new(p)?;
    let mut out = Vec::new();
    counter.for_each_point(1, &mut |x| out.push(x.to_vec()))?;
    Ok(out)
}

/// Value of a polynomial with rational coefficients through the points
/// `(0, f0), (1, f1), ...`, evaluated at `x` by Lagrange interpolation.
pub fn interpolate_at(values: &[BigInt], x: i64) -> BigRational {
    let n = values.len() as i64;
    let mut acc = BigRational::zero();
    for (i, fi) in values.iter().enumerate() {
        let i = i as i64;
        let mut term = BigRational::from_integer(fi.clone());
        for j in 0..n {
            if j != i {
                term *= BigRational::new(BigInt::from(x - j), BigInt::from(i - j));
            }
        }
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(d: usize) -> LatticePolytope {
        let mut pts = vec![vec![BigInt::zero(); d]];
        for i in 0..d {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::from(1);
            pts.push(e);
        }
        LatticePolytope::new(&pts).unwrap()
    }

    #[test]
    fn simplex_counts_are_binomials() {
        for d in 1..=4 {
            let s = simplex(d);
            for m in 0..5u64 {
                let expected = binomial(m + d as u64, d as u64);
                assert_eq!(BigInt::from(s.count_lattice_points(m).unwrap()), expected);
            }
            assert!(s.hstar().unwrap().is_one());
        }
    }

    #[test]
    fn wrong_signs_segment() {
        let seg = LatticePolytope::from_i64(&[&[6, 1, 1, 1, 1, 3], &[6, 1, 1, 1, 3, 1]]).unwrap();
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.count_lattice_points(1).unwrap(), 3);
        assert_eq!(seg.hstar().unwrap(), IntegerPolynomial::from_coeffs([1, 1]));
    }

    #[test]
    fn doubled_triangle() {
        let t = LatticePolytope::from_i64(&[&[0, 0], &[2, 0], &[0, 2]]).unwrap();
        assert_eq!(t.count_lattice_points(1).unwrap(), 6);
        assert_eq!(t.hstar().unwrap(), IntegerPolynomial::from_coeffs([1, 3]));
    }

    #[test]
    fn a1_fundamental_domain() {
        let p = LatticePolytope::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        assert_eq!(p.count_lattice_points(1).unwrap(), 5);
        assert_eq!(p.hstar().unwrap(), IntegerPolynomial::from_coeffs([1, 1, 1]));
    }

    #[test]
    fn empty_and_point_conventions() {
        let e = LatticePolytope::empty(3);
        assert_eq!(e.dim(), -1);
        assert!(e.hstar().unwrap().is_one());
        let p = LatticePolytope::from_i64(&[&[3, 4]]).unwrap();
        assert_eq!(p.dim(), 0);
        assert!(p.hstar().unwrap().is_one());
        assert_eq!(p.count_lattice_points(7).unwrap(), 1);
    }

    #[test]
    fn enumeration_matches_count() {
        let p = LatticePolytope::from_i64(&[&[0, 0, 0], &[3, 0, 0], &[0, 2, 0], &[1, 1, 4]]).unwrap();
        let pts = lattice_points(p.hull().unwrap()).unwrap();
        assert_eq!(pts.len() as u64, p.count_lattice_points(1).unwrap());
    }
}
