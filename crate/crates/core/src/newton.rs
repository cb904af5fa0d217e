//! Newton polyhedra of monomial supports, the fan of normal cones of their
//! faces, singularity classification and the support polytopes `P_τ`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::linalg::{ivec, rank, sub, IVec};
use crate::polytope::{lattice_points, FaceLattice, Halfspace, LatticePolytope, OrderIdeal, RationalPolyhedron};

/// Exponent vectors of a polynomial `f` with `f(0) = 0`, plus the user's
/// assertions about the singularity. Coefficients are kept for display only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonomialSupport {
    pub n: usize,
    pub monomials: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(default)]
    pub assert_nondegenerate: bool,
    #[serde(default)]
    pub assert_isolated: bool,
}

impl MonomialSupport {
    pub fn new(n: usize, monomials: Vec<Vec<i64>>) -> Result<Self> {
        let s = Self { n, monomials, coefficients: None, assert_nondegenerate: false, assert_isolated: false };
        s.validate()?;
        Ok(s)
    }

    pub fn from_slices(n: usize, monomials: &[&[i64]]) -> Result<Self> {
        Self::new(n, monomials.iter().map(|m| m.to_vec()).collect())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let s: Self =
            serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn validate(&self) -> Result<()> {
        if self.monomials.is_empty() {
            return Err(Error::InvalidSupport("no monomials".into()));
        }
        let mut seen = BTreeSet::new();
        for m in &self.monomials {
            if m.len() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, got: m.len() });
            }
            if m.iter().any(|&e| e < 0) {
                return Err(Error::InvalidSupport(format!("negative exponent in {m:?}")));
            }
            if m.iter().all(|&e| e == 0) {
                return Err(Error::InvalidSupport("constant term: f(0) must vanish".into()));
            }
            if !seen.insert(m.clone()) {
                return Err(Error::InvalidSupport(format!("repeated monomial {m:?}")));
            }
        }
        if let Some(c) = &self.coefficients {
            if c.len() != self.monomials.len() {
                return Err(Error::DimensionMismatch { expected: self.monomials.len(), got: c.len() });
            }
        }
        Ok(())
    }

    /// `m_f(v) = min_{m in S} v.m`, the minimum of `v` over the Newton
    /// polyhedron for `v >= 0`.
    pub fn m_f(&self, v: &[BigRational]) -> Result<BigRational> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        if v.iter().any(|x| x.is_negative()) {
            return Err(Error::NegativeWeight);
        }
        Ok(self
            .monomials
            .iter()
            .map(|m| m.iter().zip(v).map(|(&e, x)| x * BigInt::from(e)).sum::<BigRational>())
            .min()
            .expect("nonempty support"))
    }

    /// `m_f` on an integer vector.
    pub fn m_f_int(&self, v: &[BigInt]) -> Result<BigInt> {
        let q: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        Ok(self.m_f(&q)?.to_integer())
    }

    /// Whether every variable appears as a pure power.
    pub fn is_convenient(&self) -> bool {
        (0..self.n).all(|i| self.monomials.iter().any(|m| m[i] > 0 && m.iter().enumerate().all(|(j, &e)| j == i || e == 0)))
    }
}

fn sigma(v: &[BigInt]) -> BigInt {
    v.iter().sum()
}

/// `σ(v) - m_f(v)` on an integer vector `v >= 0`.
pub fn discrepancy_value(s: &MonomialSupport, v: &[BigInt]) -> Result<BigInt> {
    Ok(sigma(v) - s.m_f_int(v)?)
}

/// A nonempty face of the Newton polyhedron, given by the vertices and
/// recession rays it contains and the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonFace {
    pub vertices: BTreeSet<usize>,
    pub rays: BTreeSet<usize>,
    pub facets: BTreeSet<usize>,
    pub dim: i64,
}

impl NewtonFace {
    pub fn is_compact(&self) -> bool {
        self.rays.is_empty()
    }
}

/// `Γ(f) = conv(S) + R^n_{>=0}` with its faces.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    support: MonomialSupport,
    gamma: RationalPolyhedron,
    vertices: Vec<IVec>,
    rays: Vec<IVec>,
    faces: Vec<NewtonFace>,
}

pub fn newton_polyhedron(s: &MonomialSupport) -> Result<NewtonPolyhedron> {
    s.validate()?;
    let pts: Vec<IVec> = s.monomials.iter().map(|m| ivec(m)).collect();
    let basis: Vec<IVec> = (0..s.n)
        .map(|i| (0..s.n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let gamma = RationalPolyhedron::hull(&pts, &basis)?;
    let mut vertices = gamma.integer_vertices().expect("integer support");
    vertices.sort();
    let mut rays = gamma.rays().to_vec();
    rays.sort();
    let ineqs = gamma.inequalities();
    let vert_sets: Vec<BTreeSet<usize>> = ineqs
        .iter()
        .map(|h| (0..vertices.len()).filter(|&i| h.slack(&vertices[i]).is_zero()).collect())
        .collect();
    let ray_sets: Vec<BTreeSet<usize>> = ineqs
        .iter()
        .map(|h| (0..rays.len()).filter(|&i| crate::polytope::linalg::dot(&h.normal, &rays[i]).is_zero()).collect())
        .collect();

    // nonempty faces as intersections of facets; Γ itself has no facet
    let mut seen: BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)> = BTreeSet::new();
    let mut frontier: Vec<(BTreeSet<usize>, BTreeSet<usize>)> =
        (0..ineqs.len()).map(|k| (vert_sets[k].clone(), ray_sets[k].clone())).collect();
    while let Some((vs, rs)) = frontier.pop() {
        if vs.is_empty() || !seen.insert((vs.clone(), rs.clone())) {
            continue;
        }
        for k in 0..ineqs.len() {
            let nv: BTreeSet<usize> = vs.intersection(&vert_sets[k]).copied().collect();
            let nr: BTreeSet<usize> = rs.intersection(&ray_sets[k]).copied().collect();
            if !nv.is_empty() && !seen.contains(&(nv.clone(), nr.clone())) {
                frontier.push((nv, nr));
            }
        }
    }
    let mut faces: Vec<NewtonFace> = seen
        .into_iter()
        .map(|(vs, rs)| {
            let facets = (0..ineqs.len())
                .filter(|&k| vs.is_subset(&vert_sets[k]) && rs.is_subset(&ray_sets[k]))
                .collect();
            face_with_dim(&vertices, &rays, vs, rs, facets)
        })
        .collect();
    faces.push(face_with_dim(
        &vertices,
        &rays,
        (0..vertices.len()).collect(),
        (0..rays.len()).collect(),
        BTreeSet::new(),
    ));
    faces.sort_by(|a, b| (a.dim, &a.vertices, &a.rays).cmp(&(b.dim, &b.vertices, &b.rays)));
    Ok(NewtonPolyhedron { support: s.clone(), gamma, vertices, rays, faces })
}

fn face_with_dim(
    vertices: &[IVec],
    rays: &[IVec],
    vs: BTreeSet<usize>,
    rs: BTreeSet<usize>,
    facets: BTreeSet<usize>,
) -> NewtonFace {
    let v0 = &vertices[*vs.iter().next().expect("nonempty face")];
    let mut dirs: Vec<IVec> = vs.iter().map(|&i| sub(&vertices[i], v0)).collect();
    dirs.extend(rs.iter().map(|&i| rays[i].clone()));
    NewtonFace { dim: rank(&dirs) as i64, vertices: vs, rays: rs, facets }
}

impl NewtonPolyhedron {
    pub fn support(&self) -> &MonomialSupport {
        &self.support
    }

    pub fn polyhedron(&self) -> &RationalPolyhedron {
        &self.gamma
    }

    pub fn n(&self) -> usize {
        self.support.n
    }

    pub fn vertices(&self) -> &[IVec] {
        &self.vertices
    }

    pub fn faces(&self) -> &[NewtonFace] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &NewtonFace {
        &self.faces[i]
    }

    /// The facet inequalities `a.x >= b`; `a` is the primitive inward normal.
    pub fn facet_inequalities(&self) -> &[Halfspace] {
        self.gamma.inequalities()
    }

    /// Indices of the compact faces, ordered by dimension.
    pub fn compact_faces(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&i| self.faces[i].is_compact()).collect()
    }

    pub fn face_points(&self, i: usize) -> Vec<IVec> {
        self.faces[i].vertices.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// A compact face as a lattice polytope.
    pub fn face_polytope(&self, i: usize) -> Result<LatticePolytope> {
        if !self.faces[i].is_compact() {
            return Err(Error::Unbounded);
        }
        LatticePolytope::new(&self.face_points(i))
    }

    pub fn is_face_leq(&self, i: usize, j: usize) -> bool {
        self.faces[i].vertices.is_subset(&self.faces[j].vertices) && self.faces[i].rays.is_subset(&self.faces[j].rays)
    }

    /// The face on which `v >= 0` attains `m_f(v)`.
    pub fn first_meet_locus(&self, v: &[BigRational]) -> Result<usize> {
        let m = self.support.m_f(v)?;
        let dotq = |w: &IVec| -> BigRational {
            w.iter().zip(v).map(|(a, x)| x * a).sum()
        };
        let vs: BTreeSet<usize> = (0..self.vertices.len()).filter(|&i| dotq(&self.vertices[i]) == m).collect();
        let rs: BTreeSet<usize> = (0..self.rays.len()).filter(|&i| dotq(&self.rays[i]).is_zero()).collect();
        self.faces
            .iter()
            .position(|f| f.vertices == vs && f.rays == rs)
            .ok_or_else(|| Error::Consistency("first meet locus is not a face".into()))
    }

    pub fn first_meet_locus_int(&self, v: &[i64]) -> Result<usize> {
        let q: Vec<BigRational> = v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        self.first_meet_locus(&q)
    }

    /// Maximal compact faces under inclusion.
    pub fn maximal_compact_faces(&self) -> Vec<usize> {
        let compact = self.compact_faces();
        compact
            .iter()
            .copied()
            .filter(|&i| !compact.iter().any(|&j| j != i && self.is_face_leq(i, j)))
            .collect()
    }

    /// The maximal compact face, when there is exactly one.
    pub fn unique_max_compact_face(&self) -> Option<usize> {
        match self.maximal_compact_faces().as_slice() {
            [one] => Some(*one),
            _ => None,
        }
    }
}

/// Fan of the closed normal cones `δ̄_τ` of the faces of `Γ(f)`. Its rays are
/// the primitive inward facet normals.
#[derive(Clone, Debug)]
pub struct VarchenkoFan {
    pub newton: NewtonPolyhedron,
    rays: Vec<IVec>,
}

/// A ray of the fan with its value `σ - m_f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayReport {
    pub generator: Vec<i64>,
    pub sigma: i64,
    pub m_f: i64,
    pub value: i64,
    pub is_basis: bool,
}

impl RayReport {
    pub fn is_crepant(&self) -> bool {
        self.value == 1
    }
}

pub fn varchenko_fan(s: &MonomialSupport) -> Result<VarchenkoFan> {
    let newton = newton_polyhedron(s)?;
    let rays = newton.facet_inequalities().iter().map(|h| h.normal.clone()).collect();
    Ok(VarchenkoFan { newton, rays })
}

fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow("ray generator"))).collect()
}

impl VarchenkoFan {
    /// Primitive ray generators, indexed like the facets of `Γ(f)`.
    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    /// Generators of `δ̄_τ` for the face with index `face`.
    pub fn cone_generators(&self, face: usize) -> Vec<IVec> {
        self.newton.faces[face].facets.iter().map(|&k| self.rays[k].clone()).collect()
    }

    pub fn cone_dim(&self, face: usize) -> usize {
        rank(&self.cone_generators(face))
    }

    /// Rays sorted with basis vectors last, each with `σ - m_f`.
    pub fn ray_report(&self) -> Result<Vec<RayReport>> {
        let s = &self.newton.support;
        let mut out = Vec::new();
        for r in &self.rays {
            let generator = to_i64_vec(r)?;
            let sigma: i64 = generator.iter().sum();
            let m = s.m_f_int(r)?.to_i64().ok_or(Error::Overflow("m_f"))?;
            let is_basis = generator.iter().filter(|&&x| x != 0).count() == 1 && sigma == 1;
            out.push(RayReport { generator, sigma, m_f: m, value: sigma - m, is_basis });
        }
        out.sort_by(|a, b| (a.is_basis, &a.generator).cmp(&(b.is_basis, &b.generator)));
        Ok(out)
    }

    /// Every ray generator has `σ - m_f = 1`.
    pub fn is_crepant(&self) -> Result<bool> {
        Ok(self.ray_report()?.iter().all(RayReport::is_crepant))
    }
}

pub fn is_crepant(s: &MonomialSupport) -> Result<(bool, Vec<RayReport>)> {
    let fan = varchenko_fan(s)?;
    let report = fan.ray_report()?;
    Ok((report.iter().all(RayReport::is_crepant), report))
}

/// Outcome of the canonicity test over all primitive `v >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// `σ - m_f > 1` on every primitive non-basis vector.
    Terminal,
    /// Canonical, with a non-basis primitive vector of value exactly 1.
    StrictlyCanonical { witness: Vec<i64> },
    /// Some primitive vector has `σ - m_f <= 0`.
    NotCanonical { witness: Vec<i64>, value: i64 },
}

impl Verdict {
    pub fn is_canonical(&self) -> bool {
        !matches!(self, Verdict::NotCanonical { .. })
    }

    pub fn is_terminal(&self) -> bool {
        matches!(self, Verdict::Terminal)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Terminal => "terminal",
            Verdict::StrictlyCanonical { .. } => "strictly canonical",
            Verdict::NotCanonical { .. } => "not canonical",
        }
    }
}

/// Decides canonicity by scanning, in each maximal cone of the fan, the
/// lattice points where the linear function `σ - m_f` is at most 1.
pub fn classify(s: &MonomialSupport) -> Result<Verdict> {
    let fan = varchenko_fan(s)?;
    let n = s.n;
    let newton = &fan.newton;
    let mut witness: Option<Vec<i64>> = None;
    for r in &fan.rays {
        let value = discrepancy_value(s, r)?;
        if !value.is_positive() {
            return Ok(Verdict::NotCanonical {
                witness: to_i64_vec(r)?,
                value: value.to_i64().ok_or(Error::Overflow("value"))?,
            });
        }
    }
    for f in newton.faces.iter().filter(|f| f.dim == 0) {
        let w = &newton.vertices[*f.vertices.iter().next().unwrap()];
        // δ̄_w = {v >= 0 : v.(m - w) >= 0 for m in S}; ℓ(v) = σ(v) - v.w
        let mut ineqs: Vec<Halfspace> = (0..n)
            .map(|i| Halfspace { normal: (0..n).map(|j| BigInt::from((i == j) as i64)).collect(), rhs: BigInt::zero() })
            .collect();
        for m in &s.monomials {
            ineqs.push(Halfspace { normal: sub(&ivec(m), w), rhs: BigInt::zero() });
        }
        let ell: IVec = w.iter().map(|x| BigInt::from(1) - x).collect();
        ineqs.push(Halfspace { normal: ell.iter().map(|x| -x).collect(), rhs: BigInt::from(-1) });
        let region = RationalPolyhedron::from_inequalities(n, &ineqs, &[])?;
        let mut candidates: Vec<Vec<i64>> = lattice_points(&region)?
            .into_iter()
            .filter(|v| {
                let nonzero = v.iter().filter(|&&x| x != 0).count();
                nonzero > 1 || v.iter().any(|&x| x > 1)
            })
            .collect();
        candidates.sort();
        if let Some(v) = candidates.into_iter().next() {
            let better = match &witness {
                None => true,
                Some(old) => v < *old,
            };
            if better {
                witness = Some(v);
            }
        }
    }
    Ok(match witness {
        None => Verdict::Terminal,
        Some(w) => Verdict::StrictlyCanonical { witness: w },
    })
}

/// The support polytopes `P_τ` of a crepant fan, gathered inside
/// `P_∅ = conv(0, all rays)`.
pub struct SupportComplex {
    pub fan: VarchenkoFan,
    /// Face lattice of `P_∅`.
    pub p_empty: FaceLattice,
    /// Compact faces `μ` of `Γ(f)` paired with the face `P_μ` of `P_∅`.
    pub correspondence: Vec<(usize, usize)>,
    star: OrderIdeal,
}

pub fn support_complex(s: &MonomialSupport) -> Result<SupportComplex> {
    let fan = varchenko_fan(s)?;
    if !fan.is_crepant()? {
        return Err(Error::NotCrepant);
    }
    let n = s.n;
    let mut pts = vec![vec![BigInt::zero(); n]];
    pts.extend(fan.rays.iter().cloned());
    let p_empty = FaceLattice::new(&LatticePolytope::new(&pts)?)?;
    let origin = p_empty
        .polytope()
        .vertices()
        .iter()
        .position(|v| v.iter().all(Zero::is_zero))
        .ok_or_else(|| Error::Consistency("origin is not a vertex of P_∅".into()))?;
    let star = p_empty.star_neighborhood(origin)?;
    let mut correspondence = Vec::new();
    for mu in fan.newton.compact_faces() {
        let gens = fan.cone_generators(mu);
        let face = p_empty
            .find_by_points(&gens)
            .ok_or_else(|| Error::Consistency(format!("P_τ of compact face {mu} is not a face of P_∅")))?;
        correspondence.push((mu, face));
    }
    let sc = SupportComplex { fan, p_empty, correspondence, star };
    sc.verify()?;
    Ok(sc)
}

impl SupportComplex {
    /// Index of `P_∅` in its own face lattice.
    pub fn top(&self) -> usize {
        self.p_empty.top()
    }

    /// `star_{∂P_∅}(0)`.
    pub fn star(&self) -> &OrderIdeal {
        &self.star
    }

    /// `P_μ` for a compact face index, or `P_∅` for `None`.
    pub fn p_of(&self, mu: Option<usize>) -> usize {
        match mu {
            None => self.top(),
            Some(m) => self.correspondence.iter().find(|(c, _)| *c == m).map(|(_, f)| *f).expect("compact face"),
        }
    }

    /// `ℐ_μ = star(0) ∩ 𝒫(P_μ)`, as an ideal of `P_∅`'s lattice.
    pub fn ideal_of(&self, p_mu: usize) -> OrderIdeal {
        let fl = &self.p_empty;
        let members = (0..fl.len()).map(|f| self.star.contains(f) && fl.leq(f, p_mu)).collect();
        OrderIdeal::new(fl, members).expect("intersection of ideals")
    }

    /// Whether the face of `P_∅` lies in some coordinate hyperplane.
    pub fn in_coordinate_hyperplane(&self, face: usize) -> bool {
        let pts = self.p_empty.vertex_points(face);
        (0..self.fan.newton.n()).any(|i| pts.iter().all(|p| p[i].is_zero()))
    }

    fn verify(&self) -> Result<()> {
        let fl = &self.p_empty;
        let mut images: BTreeSet<usize> = self.correspondence.iter().map(|&(_, f)| f).collect();
        images.insert(self.top());
        if images.len() != self.correspondence.len() + 1 {
            return Err(Error::Consistency("μ ↦ P_μ is not injective".into()));
        }
        let expected: BTreeSet<usize> = (0..fl.len()).filter(|&f| !self.in_coordinate_hyperplane(f)).collect();
        if images != expected {
            return Err(Error::Consistency("μ ↦ P_μ misses faces of P_∅".into()));
        }
        let newton = &self.fan.newton;
        for &(a, pa) in &self.correspondence {
            for &(b, pb) in &self.correspondence {
                if newton.is_face_leq(a, b) != fl.leq(pb, pa) {
                    return Err(Error::Consistency("μ ↦ P_μ does not reverse inclusion".into()));
                }
            }
            for v in fl.vertex_points(pa) {
                if discrepancy_value(newton.support(), &v)? != BigInt::from(1) {
                    return Err(Error::Consistency("vertex of P_τ off the degree-one slice".into()));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    fn non_basis_rays(s: &MonomialSupport) -> Vec<Vec<i64>> {
        let (_, report) = is_crepant(s).unwrap();
        report.into_iter().filter(|r| !r.is_basis).map(|r| r.generator).collect()
    }

    #[test]
    fn brieskorn_facet_normal() {
        let s = MonomialSupport::from_slices(4, &[&[5, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 3]]).unwrap();
        let newton = newton_polyhedron(&s).unwrap();
        let compact_facets: Vec<usize> =
            newton.compact_faces().into_iter().filter(|&i| newton.face(i).dim == 3).collect();
        assert_eq!(compact_facets.len(), 1);
        assert_eq!(non_basis_rays(&s), vec![vec![3, 5, 5, 5]]);
        assert_eq!(s.m_f(&q(&[1, 1, 1, 1])).unwrap(), BigRational::from_integer(3.into()));
        let tau = newton.first_meet_locus_int(&[3, 5, 5, 5]).unwrap();
        assert_eq!(tau, compact_facets[0]);
    }

    #[test]
    fn a1_faces_and_meet_loci() {
        let s = MonomialSupport::from_slices(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        let newton = newton_polyhedron(&s).unwrap();
        // 3 vertices, 3 edges, 1 triangle are compact
        assert_eq!(newton.compact_faces().len(), 7);
        let f = newton.first_meet_locus_int(&[1, 0, 0]).unwrap();
        assert!(!newton.face(f).is_compact());
        assert_eq!(newton.face(f).dim, 2);
        let v = newton.first_meet_locus_int(&[5, 3, 1]).unwrap();
        assert_eq!(newton.face_points(v), vec![ivec(&[0, 0, 2])]);
        assert_eq!(newton.face(v).dim, 0);
        assert!(s.m_f(&q(&[0, 0, 0])).unwrap().is_zero());
        assert!(matches!(s.m_f(&q(&[1, -1, 0])), Err(Error::NegativeWeight)));
    }

    #[test]
    fn ade_rays() {
        let e8 = MonomialSupport::from_slices(3, &[&[5, 0, 0], &[0, 3, 0], &[0, 0, 2]]).unwrap();
        assert_eq!(non_basis_rays(&e8), vec![vec![6, 10, 15]]);
        let e7 = MonomialSupport::from_slices(3, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 2]]).unwrap();
        assert_eq!(non_basis_rays(&e7), vec![vec![2, 0, 1], vec![6, 4, 9]]);
        let a2 = MonomialSupport::from_slices(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        let (crepant, report) = is_crepant(&a2).unwrap();
        assert!(!crepant);
        assert_eq!(report[0].generator, vec![2, 3, 3]);
        assert_eq!(report[0].value, 2);
    }

    #[test]
    fn classification() {
        let odp = MonomialSupport::from_slices(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]).unwrap();
        assert_eq!(classify(&odp).unwrap(), Verdict::Terminal);
        let b = MonomialSupport::from_slices(4, &[&[5, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 3]]).unwrap();
        assert_eq!(classify(&b).unwrap(), Verdict::StrictlyCanonical { witness: vec![1, 1, 1, 1] });
        // x^3 + y^3 has the ray (1, 1) with value -1
        let bad = MonomialSupport::from_slices(2, &[&[3, 0], &[0, 3]]).unwrap();
        assert!(!classify(&bad).unwrap().is_canonical());
    }

    #[test]
    fn convenience_and_maximal_faces() {
        let e8 = MonomialSupport::from_slices(3, &[&[5, 0, 0], &[0, 3, 0], &[0, 0, 2]]).unwrap();
        assert!(e8.is_convenient());
        let newton = newton_polyhedron(&e8).unwrap();
        let top = newton.unique_max_compact_face().unwrap();
        assert_eq!(newton.face(top).dim, 2);
        let d4 = MonomialSupport::from_slices(3, &[&[3, 0, 0], &[1, 2, 0], &[0, 0, 2]]).unwrap();
        assert!(!d4.is_convenient());
    }

    #[test]
    fn a1_support_complex() {
        let s = MonomialSupport::from_slices(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        let sc = support_complex(&s).unwrap();
        assert_eq!(sc.p_empty.polytope().vertices().len(), 5);
        let tri = sc.fan.newton.compact_faces().into_iter().find(|&i| sc.fan.newton.face(i).dim == 2).unwrap();
        assert_eq!(sc.p_empty.vertex_points(sc.p_of(Some(tri))), vec![ivec(&[1, 1, 1])]);
        assert_eq!(sc.p_empty.len() - sc.star().len(), 8);
    }

    #[test]
    fn rejects_bad_supports() {
        assert!(MonomialSupport::from_slices(2, &[&[0, 0], &[1, 0]]).is_err());
        assert!(MonomialSupport::from_slices(2, &[&[1, 0], &[1, 0]]).is_err());
        assert!(MonomialSupport::from_slices(2, &[&[1, 0, 0]]).is_err());
        assert!(MonomialSupport::from_slices(2, &[]).is_err());
        let json = r#"{"n":2,"monomials":[[2,0],[0,2]],"assert_nondegenerate":true,"assert_isolated":true}"#;
        let s = MonomialSupport::from_json(json).unwrap();
        assert!(s.assert_isolated);
        assert_eq!(MonomialSupport::from_json(&s.to_json()).unwrap(), s);
    }
}
