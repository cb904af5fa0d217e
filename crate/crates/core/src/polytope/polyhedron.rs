//! Conversion between vertex/ray and inequality descriptions by the double
//! description method, on homogenized integer vectors.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::{clear_denominators, dot, primitive, rank, IVec};
use crate::error::{Error, Result};

/// Lineality basis and extreme rays of `{x : a . x >= 0 for every row a}`.
pub fn double_description(rows: &[IVec], dim: usize) -> (Vec<IVec>, Vec<IVec>) {
    let mut lines: Vec<IVec> = (0..dim)
        .map(|j| (0..dim).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    // each ray keeps the set of processed rows it is tight on
    let mut rays: Vec<(IVec, BTreeSet<usize>)> = Vec::new();
    let mut processed: Vec<usize> = Vec::new();

    for (k, a) in rows.iter().enumerate() {
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Some(pos) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lines.swap_remove(pos);
            let mut al0 = dot(a, &l0);
            if al0.is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
                al0 = -al0;
            }
            let project = |v: &IVec| -> IVec {
                let av = dot(a, v);
                primitive(&v.iter().zip(&l0).map(|(x, y)| &al0 * x - &av * y).collect::<Vec<_>>())
            };
            lines = lines.iter().map(project).collect();
            for (r, z) in rays.iter_mut() {
                *r = project(r);
                z.insert(k);
            }
            let z: BTreeSet<usize> = processed.iter().copied().collect();
            rays.push((primitive(&l0), z));
            processed.push(k);
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let mut next: Vec<(IVec, BTreeSet<usize>)> = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            if vals[i].is_zero() {
                let mut z = z.clone();
                z.insert(k);
                next.push((r.clone(), z));
            } else if vals[i].is_positive() {
                next.push((r.clone(), z.clone()));
            }
        }
        let free = dim - lines.len();
        for (p, (rp, zp)) in rays.iter().enumerate() {
            if !vals[p].is_positive() {
                continue;
            }
            for (q, (rq, zq)) in rays.iter().enumerate() {
                if !vals[q].is_negative() {
                    continue;
                }
                let common: BTreeSet<usize> = zp.intersection(zq).copied().collect();
                if common.len() + 2 < free {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(s, (_, zs))| s == p || s == q || !common.is_subset(zs));
                if !adjacent {
                    continue;
                }
                let v: IVec = rq
                    .iter()
                    .zip(rp)
                    .map(|(x, y)| &vals[p] * x - &vals[q] * y)
                    .collect();
                let mut z = common;
                z.insert(k);
                next.push((primitive(&v), z));
            }
        }
        rays = next;
        processed.push(k);
    }
    (lines, rays.into_iter().map(|(r, _)| r).collect())
}

/// An inequality `normal . x >= rhs` or equation `normal . x = rhs`, with
/// `(normal, rhs)` primitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: IVec,
    pub rhs: BigInt,
}

impl Halfspace {
    fn from_homogeneous(y: &IVec) -> Self {
        let n = y.len() - 1;
        Self { normal: y[..n].to_vec(), rhs: -y[n].clone() }
    }

    pub fn slack_rational(&self, p: &[BigRational]) -> BigRational {
        let s: BigRational = self
            .normal
            .iter()
            .zip(p)
            .map(|(a, x)| BigRational::from_integer(a.clone()) * x)
            .sum();
        s - BigRational::from_integer(self.rhs.clone())
    }

    pub fn slack(&self, p: &[BigInt]) -> BigInt {
        dot(&self.normal, p) - &self.rhs
    }
}

/// Rational polyhedron `conv(points) + cone(rays)` with both descriptions.
#[derive(Clone, Debug)]
pub struct RationalPolyhedron {
    ambient: usize,
    vertices: Vec<Vec<BigRational>>,
    rays: Vec<IVec>,
    equations: Vec<Halfspace>,
    inequalities: Vec<Halfspace>,
}

impl RationalPolyhedron {
    /// Convex hull of integer points plus the cone over integer rays.
    pub fn hull(points: &[IVec], rays: &[IVec]) -> Result<Self> {
        let pts: Vec<Vec<BigRational>> = points
            .iter()
            .map(|p| p.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        Self::hull_rational(&pts, rays)
    }

    /// Convex hull of rational points plus the cone over integer rays.
    pub fn hull_rational(points: &[Vec<BigRational>], rays: &[IVec]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyInput);
        };
        let n = first.len();
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: p.len() });
            }
        }
        for r in rays {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: r.len() });
            }
        }
        let point_gens: Vec<IVec> = points
            .iter()
            .map(|p| {
                let mut h = p.clone();
                h.push(BigRational::one());
                clear_denominators(&h)
            })
            .collect();
        let ray_gens: Vec<IVec> = rays
            .iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .map(|r| {
                let mut h = primitive(r);
                h.push(BigInt::zero());
                h
            })
            .collect();
        let all: Vec<IVec> = point_gens.iter().chain(&ray_gens).cloned().collect();
        let (lines, polar_rays) = double_description(&all, n + 1);

        let equations: Vec<Halfspace> = lines.iter().map(Halfspace::from_homogeneous).collect();
        let inequalities: Vec<Halfspace> = polar_rays
            .iter()
            .filter(|y| point_gens.iter().any(|g| dot(y, g).is_zero()))
            .map(Halfspace::from_homogeneous)
            .collect();

        let mut out = Self { ambient: n, vertices: Vec::new(), rays: Vec::new(), equations, inequalities };
        out.vertices = out.extreme_points(points);
        out.rays = out.extreme_rays(rays);
        Ok(out)
    }

    /// Polyhedron `{x : a . x >= b}` intersected with the given equations.
    /// Fails when the set is empty or contains a line.
    pub fn from_inequalities(ambient: usize, inequalities: &[Halfspace], equations: &[Halfspace]) -> Result<Self> {
        let hom = |h: &Halfspace, sign: i64| -> IVec {
            let mut v: IVec = h.normal.iter().map(|x| x * sign).collect();
            v.push(-&h.rhs * sign);
            v
        };
        let mut rows: Vec<IVec> = inequalities.iter().map(|h| hom(h, 1)).collect();
        for e in equations {
            rows.push(hom(e, 1));
            rows.push(hom(e, -1));
        }
        let mut last = vec![BigInt::zero(); ambient + 1];
        last[ambient] = BigInt::one();
        rows.push(last);
        let (lines, gens) = double_description(&rows, ambient + 1);
        if !lines.is_empty() {
            return Err(Error::Unbounded);
        }
        let mut points = Vec::new();
        let mut rays = Vec::new();
        for g in gens {
            let s = g[ambient].clone();
            if s.is_zero() {
                rays.push(g[..ambient].to_vec());
            } else {
                points.push(
                    g[..ambient]
                        .iter()
                        .map(|x| BigRational::new(x.clone(), s.clone()))
                        .collect::<Vec<_>>(),
                );
            }
        }
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        Self::hull_rational(&points, &rays)
    }

    fn tight_normals(&self, tight: impl Fn(&Halfspace) -> bool) -> Vec<IVec> {
        self.equations
            .iter()
            .map(|e| e.normal.clone())
            .chain(self.inequalities.iter().filter(|h| tight(h)).map(|h| h.normal.clone()))
            .collect()
    }

    fn extreme_points(&self, points: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let mut out: Vec<Vec<BigRational>> = Vec::new();
        for p in points {
            if out.contains(p) {
                continue;
            }
            let normals = self.tight_normals(|h| h.slack_rational(p).is_zero());
            if rank(&normals) == self.ambient {
                out.push(p.clone());
            }
        }
        out
    }

    fn extreme_rays(&self, rays: &[IVec]) -> Vec<IVec> {
        let mut out: Vec<IVec> = Vec::new();
        for r in rays {
            if r.iter().all(|x| x.is_zero()) {
                continue;
            }
            let r = primitive(r);
            if out.contains(&r) {
                continue;
            }
            let normals = self.tight_normals(|h| dot(&h.normal, &r).is_zero());
            if rank(&normals) + 1 == self.ambient {
                out.push(r);
            }
        }
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the polyhedron.
    pub fn dim(&self) -> usize {
        self.ambient - rank(&self.equations.iter().map(|e| e.normal.clone()).collect::<Vec<_>>())
    }

    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn equations(&self) -> &[Halfspace] {
        &self.equations
    }

    /// Irredundant facet-defining inequalities.
    pub fn inequalities(&self) -> &[Halfspace] {
        &self.inequalities
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Integer vertices, if every vertex is integral.
    pub fn integer_vertices(&self) -> Option<Vec<IVec>> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect()
    }

    pub fn contains(&self, p: &[BigRational]) -> bool {
        self.equations.iter().all(|e| e.slack_rational(p).is_zero())
            && self.inequalities.iter().all(|h| !h.slack_rational(p).is_negative())
    }
}
