//! Face lattices of lattice polytopes, order ideals, closed stars and
//! lattice pyramids.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::lattice::LatticePolytope;
use super::linalg::{affine_dim, dot, saturated_basis, sub, IVec};
use crate::algebra::IntegerPolynomial;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Vertex subset of a polytope, as sorted indices into its vertex list.
pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: VertexSet,
    pub dim: i64,
}

/// All faces of a lattice polytope, `∅` and `P` included, ordered by
/// inclusion with rank `dim + 1`.
pub struct FaceLattice {
    polytope: LatticePolytope,
    faces: Vec<Face>,
    index: HashMap<VertexSet, usize>,
    poset: FinitePoset,
    hstar: Mutex<HashMap<usize, IntegerPolynomial>>,
}

impl std::fmt::Debug for FaceLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FaceLattice").field("faces", &self.faces).finish()
    }
}

impl FaceLattice {
    pub fn new(p: &LatticePolytope) -> Result<Self> {
        let n_vert = p.vertices().len();
        let mut sets: BTreeSet<VertexSet> = BTreeSet::new();
        sets.insert(VertexSet::new());
        sets.insert((0..n_vert).collect());
        if let Some(h) = p.hull() {
            let facets: Vec<VertexSet> = h
                .inequalities()
                .iter()
                .map(|ineq| (0..n_vert).filter(|&i| ineq.slack(&p.vertices()[i]).is_zero()).collect())
                .collect();
            // close the facets under intersection
            let mut frontier: Vec<VertexSet> = facets.clone();
            while let Some(s) = frontier.pop() {
                if !sets.insert(s.clone()) {
                    continue;
                }
                for f in &facets {
                    let meet: VertexSet = s.intersection(f).copied().collect();
                    if !sets.contains(&meet) {
                        frontier.push(meet);
                    }
                }
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|vs| {
                let pts: Vec<IVec> = vs.iter().map(|&i| p.vertices()[i].clone()).collect();
                Face { dim: affine_dim(&pts), vertices: vs }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        let index = faces.iter().enumerate().map(|(i, f)| (f.vertices.clone(), i)).collect();
        let poset = FinitePoset::from_relation(faces.len(), |i, j| faces[i].vertices.is_subset(&faces[j].vertices))?;
        Ok(Self { polytope: p.clone(), faces, index, poset, hstar: Mutex::new(HashMap::new()) })
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn dim(&self, i: usize) -> i64 {
        self.faces[i].dim
    }

    /// The face poset, ranked by `dim + 1`.
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Index of the empty face.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of `P` itself.
    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn find(&self, vertices: &VertexSet) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    /// The face whose vertex set is exactly the given points, if any.
    pub fn find_by_points(&self, points: &[IVec]) -> Option<usize> {
        let mut vs = VertexSet::new();
        for q in points {
            vs.insert(self.polytope.vertices().iter().position(|v| v == q)?);
        }
        self.find(&vs)
    }

    /// Index of the face consisting of vertex `v` alone.
    pub fn vertex_face(&self, v: usize) -> Result<usize> {
        self.find(&VertexSet::from([v])).ok_or(Error::NotAVertex)
    }

    pub fn faces_of_dim(&self, d: i64) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.faces[i].dim == d)
    }

    pub fn facets(&self) -> Vec<usize> {
        self.faces_of_dim(self.polytope.dim() - 1).collect()
    }

    pub fn vertex_points(&self, i: usize) -> Vec<IVec> {
        self.faces[i].vertices.iter().map(|&v| self.polytope.vertices()[v].clone()).collect()
    }

    /// The face as a lattice polytope in the same ambient lattice.
    pub fn face_polytope(&self, i: usize) -> Result<LatticePolytope> {
        if self.faces[i].vertices.is_empty() {
            Ok(LatticePolytope::empty(self.polytope.ambient_dim()))
        } else {
            LatticePolytope::new(&self.vertex_points(i))
        }
    }

    /// `h*` of a face, cached.
    pub fn hstar(&self, i: usize) -> Result<IntegerPolynomial> {
        if let Some(h) = self.hstar.lock().unwrap().get(&i) {
            return Ok(h.clone());
        }
        let h = self.face_polytope(i)?.hstar()?;
        self.hstar.lock().unwrap().insert(i, h.clone());
        Ok(h)
    }

    /// Smallest face containing both faces.
    pub fn join(&self, i: usize, j: usize) -> usize {
        (0..self.len())
            .filter(|&k| self.leq(i, k) && self.leq(j, k))
            .min_by_key(|&k| self.faces[k].dim)
            .expect("P contains every face")
    }

    /// The interval `[g, top]` as a poset ranked from 0; the face poset of
    /// the quotient `top / g`.
    pub fn interval_quotient(&self, g: usize, top: usize) -> Result<FinitePoset> {
        self.poset.interval(g, top)
    }

    /// Closed star of a vertex in the boundary: faces of proper faces that
    /// contain `v`.
    pub fn star_neighborhood(&self, v: usize) -> Result<OrderIdeal> {
        if self.polytope.dim() <= 0 {
            return Err(Error::NotAVertex);
        }
        let vf = self.vertex_face(v)?;
        let top = self.top();
        let members = (0..self.len()).map(|f| f != top && self.join(f, vf) != top).collect();
        OrderIdeal::new(self, members)
    }

    /// Whether `P` is a lattice pyramid over the facet with apex `apex`: the
    /// apex sits at lattice height 1 over the facet inside the affine lattice
    /// of `P`.
    pub fn is_pyramid_over(&self, facet: usize, apex: usize) -> Result<bool> {
        Ok(self.pyramid_height(facet, apex)? == BigInt::from(1))
    }

    /// Lattice height of vertex `apex` over a facet, in the affine lattice
    /// spanned by `P`.
    pub fn pyramid_height(&self, facet: usize, apex: usize) -> Result<BigInt> {
        let d = self.polytope.dim();
        if self.faces[facet].dim != d - 1 || d < 1 {
            return Err(Error::NotAFacet);
        }
        if apex >= self.polytope.vertices().len() {
            return Err(Error::NotAVertex);
        }
        if self.faces[facet].vertices.contains(&apex) {
            return Err(Error::ApexOnFacet);
        }
        let hull = self.polytope.hull().expect("nonempty");
        let vs = &self.faces[facet].vertices;
        let ineq = hull
            .inequalities()
            .iter()
            .find(|h| {
                (0..self.polytope.vertices().len())
                    .all(|i| h.slack(&self.polytope.vertices()[i]).is_zero() == vs.contains(&i))
            })
            .ok_or(Error::NotAFacet)?;
        let verts = self.polytope.vertices();
        let diffs: Vec<IVec> = verts.iter().map(|v| sub(v, &verts[0])).collect();
        let basis = saturated_basis(&diffs, self.polytope.ambient_dim());
        let unit = basis.iter().fold(BigInt::zero(), |g, b| g.gcd(&dot(&ineq.normal, b)));
        Ok(ineq.slack(&verts[apex]).abs() / unit)
    }

    /// `sum h*_G (t-1)^(dim P - dim G - 1)` over proper faces `G` outside the
    /// star of `v`. Equals `h*_P` when `P` is a lattice pyramid with apex `v`
    /// over every facet not containing `v`; errors otherwise.
    pub fn star_decomposition(&self, v: usize) -> Result<IntegerPolynomial> {
        for f in self.facets() {
            if !self.faces[f].vertices.contains(&v) && !self.is_pyramid_over(f, v)? {
                return Err(Error::PyramidConditionFails { facet: self.faces[f].vertices.iter().copied().collect() });
            }
        }
        let star = self.star_neighborhood(v)?;
        let d = self.polytope.dim();
        let t_minus_one = IntegerPolynomial::from_coeffs([-1, 1]);
        let mut acc = IntegerPolynomial::zero();
        for g in 0..self.top() {
            if !star.contains(g) {
                acc = &acc + &(&self.hstar(g)? * &t_minus_one.pow((d - self.faces[g].dim - 1) as u32));
            }
        }
        Ok(acc)
    }
}

/// A downward-closed set of faces of a face lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdeal {
    members: Vec<bool>,
}

impl OrderIdeal {
    pub fn new(fl: &FaceLattice, members: Vec<bool>) -> Result<Self> {
        if members.len() != fl.len() {
            return Err(Error::DimensionMismatch { expected: fl.len(), got: members.len() });
        }
        for x in 0..fl.len() {
            if !members[x] {
                continue;
            }
            if let Some(y) = (0..fl.len()).find(|&y| fl.leq(y, x) && !members[y]) {
                return Err(Error::NotAnIdeal(format!("face {y} lies below member {x} but is missing")));
            }
        }
        Ok(Self { members })
    }

    pub fn empty(fl: &FaceLattice) -> Self {
        Self { members: vec![false; fl.len()] }
    }

    /// Faces not containing `q`.
    pub fn not_containing(fl: &FaceLattice, q: usize) -> Self {
        Self { members: (0..fl.len()).map(|f| !fl.leq(q, f)).collect() }
    }

    /// The ideal generated by the given faces.
    pub fn generated_by(fl: &FaceLattice, gens: &[usize]) -> Self {
        Self { members: (0..fl.len()).map(|f| gens.iter().any(|&g| fl.leq(f, g))).collect() }
    }

    pub fn contains(&self, f: usize) -> bool {
        self.members[f]
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.members.len()).filter(|&i| self.members[i])
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Reads a vertex list: either a JSON array of integer arrays or plain text
/// with one whitespace- or comma-separated vector per line (`#` comments).
pub fn parse_vertex_list(text: &str) -> Result<Vec<IVec>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<i64>> = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        return Ok(rows.iter().map(|r| super::linalg::ivec(r)).collect());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("");
        let row = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<BigInt>().map_err(|_| Error::Parse { pos, msg: format!("bad integer {s:?}") })
            })
            .collect::<Result<IVec>>()?;
        if !row.is_empty() {
            out.push(row);
        }
        pos += line.len() + 1;
    }
    Ok(out)
}

/// Plain-text vertex list, one vector per line.
pub fn format_vertex_list(points: &[IVec]) -> String {
    points
        .iter()
        .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::linalg::ivec;

    fn a1_domain() -> LatticePolytope {
        LatticePolytope::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
    }

    fn square() -> LatticePolytope {
        LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    fn f_vector(fl: &FaceLattice) -> Vec<usize> {
        let d = fl.polytope().dim();
        (-1..=d).map(|k| fl.faces_of_dim(k).count()).collect()
    }

    #[test]
    fn face_counts() {
        let seg = LatticePolytope::from_i64(&[&[0], &[1]]).unwrap();
        assert_eq!(f_vector(&FaceLattice::new(&seg).unwrap()), vec![1, 2, 1]);
        let sq = FaceLattice::new(&square()).unwrap();
        assert_eq!(f_vector(&sq), vec![1, 4, 4, 1]);
        assert!(sq.poset().is_eulerian());
        let p = FaceLattice::new(&a1_domain()).unwrap();
        assert_eq!(f_vector(&p), vec![1, 5, 9, 6, 1]);
        assert!(p.poset().is_eulerian());
    }

    #[test]
    fn point_and_lower_dimensional_faces() {
        let pt = FaceLattice::new(&LatticePolytope::from_i64(&[&[1, 2, 3]]).unwrap()).unwrap();
        assert_eq!(pt.len(), 2);
        let tri = LatticePolytope::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]).unwrap();
        let fl = FaceLattice::new(&tri).unwrap();
        assert_eq!(f_vector(&fl), vec![1, 3, 3, 1]);
        assert!(fl.poset().g_poly().unwrap().is_one());
    }

    #[test]
    fn square_polynomials() {
        let sq = FaceLattice::new(&square()).unwrap();
        assert_eq!(sq.poset().g_poly().unwrap(), IntegerPolynomial::from_coeffs([1, 1]));
        assert_eq!(sq.poset().h_poly().unwrap(), IntegerPolynomial::from_coeffs([1, 2, 1]));
    }

    #[test]
    fn star_of_origin_in_a1_domain() {
        let fl = FaceLattice::new(&a1_domain()).unwrap();
        let origin = fl.polytope().vertices().iter().position(|v| *v == ivec(&[0, 0, 0])).unwrap();
        let star = fl.star_neighborhood(origin).unwrap();
        assert_eq!(fl.len() - star.len(), 8);
        assert!(star.contains(fl.bottom()));
        assert!(!star.contains(fl.top()));
        assert_eq!(fl.star_decomposition(origin).unwrap(), IntegerPolynomial::from_coeffs([1, 1, 1]));
    }

    #[test]
    fn star_in_square() {
        let fl = FaceLattice::new(&square()).unwrap();
        let star = fl.star_neighborhood(0).unwrap();
        // empty face, three vertices, two edges
        assert_eq!(star.len(), 6);
    }

    #[test]
    fn pyramid_heights() {
        let tri = FaceLattice::new(&LatticePolytope::from_i64(&[&[0, 0], &[2, 0], &[0, 2]]).unwrap()).unwrap();
        let far = tri.find_by_points(&[ivec(&[0, 2]), ivec(&[2, 0])]).unwrap();
        let origin = tri.polytope().vertices().iter().position(|v| *v == ivec(&[0, 0])).unwrap();
        assert_eq!(tri.pyramid_height(far, origin).unwrap(), BigInt::from(2));
        assert!(!tri.is_pyramid_over(far, origin).unwrap());
        let unit = FaceLattice::new(&LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap()).unwrap();
        let base = unit.find_by_points(&[ivec(&[0, 0]), ivec(&[1, 0])]).unwrap();
        assert!(unit.is_pyramid_over(base, 1).unwrap());
        assert!(matches!(unit.is_pyramid_over(base, 0), Err(Error::ApexOnFacet)));
    }

    #[test]
    fn star_decomposition_requires_pyramids() {
        let seg = FaceLattice::new(&LatticePolytope::from_i64(&[&[0], &[2]]).unwrap()).unwrap();
        assert!(matches!(seg.star_decomposition(0), Err(Error::PyramidConditionFails { .. })));
    }

    #[test]
    fn quotient_at_the_far_vertex() {
        let fl = FaceLattice::new(&a1_domain()).unwrap();
        let v = fl.find_by_points(&[ivec(&[1, 1, 1])]).unwrap();
        let q = fl.interval_quotient(v, fl.top()).unwrap();
        assert_eq!(q.poset_rank(), Some(3));
        assert!(q.g_poly().unwrap().is_one());
        let sq = FaceLattice::new(&square()).unwrap();
        let q = sq.interval_quotient(sq.vertex_face(0).unwrap(), sq.top()).unwrap();
        assert_eq!(q.len(), 4);
        assert!(q.is_eulerian());
    }

    #[test]
    fn ideals_are_validated() {
        let fl = FaceLattice::new(&square()).unwrap();
        let mut members = vec![false; fl.len()];
        members[fl.top()] = true;
        assert!(matches!(OrderIdeal::new(&fl, members), Err(Error::NotAnIdeal(_))));
        let gen = OrderIdeal::generated_by(&fl, &[fl.facets()[0]]);
        assert_eq!(gen.len(), 4);
        assert!(OrderIdeal::new(&fl, (0..fl.len()).map(|i| gen.contains(i)).collect()).is_ok());
    }

    #[test]
    fn vertex_list_io() {
        let pts = vec![ivec(&[0, 1]), ivec(&[-2, 3])];
        assert_eq!(parse_vertex_list(&format_vertex_list(&pts)).unwrap(), pts);
        assert_eq!(parse_vertex_list("[[0,1],[-2,3]]").unwrap(), pts);
        assert!(parse_vertex_list("0 x").is_err());
    }
}
