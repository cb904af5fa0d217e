//! Finite graded posets, Möbius functions, and the Stanley `g`/`h` and
//! relative `g` polynomials of Eulerian posets.
//!
//! Polynomials are memoized per poset on interval endpoints; the caches sit
//! behind a mutex so a poset can be shared across threads.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::Rational64;

use crate::algebra::IntegerPolynomial;
use crate::error::{Error, Result};

#[derive(Default)]
struct Memo {
    g: HashMap<(usize, usize), IntegerPolynomial>,
    g_dual: HashMap<(usize, usize), IntegerPolynomial>,
    rel_g: HashMap<(usize, usize, usize), IntegerPolynomial>,
}

/// A finite poset on elements `0..len()`, stored as an explicit order matrix.
pub struct FinitePoset {
    leq: Vec<Vec<bool>>,
    rank: Option<Vec<usize>>,
    bottom: Option<usize>,
    top: Option<usize>,
    eulerian: OnceLock<bool>,
    memo: Mutex<Memo>,
}

impl Clone for FinitePoset {
    fn clone(&self) -> Self {
        Self::build(self.leq.clone())
    }
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.leq == other.leq && self.rank == other.rank
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinitePoset")
            .field("len", &self.len())
            .field("rank", &self.rank)
            .finish()
    }
}

impl FinitePoset {
    /// Builds a poset from an order predicate. The predicate must describe a
    /// partial order (reflexive, antisymmetric, transitive).
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let m: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
        for i in 0..n {
            if !m[i][i] {
                return Err(Error::Consistency(format!("relation is not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && m[i][j] && m[j][i] {
                    return Err(Error::Consistency(format!("relation is not antisymmetric at {i},{j}")));
                }
                if m[i][j] {
                    for k in 0..n {
                        if m[j][k] && !m[i][k] {
                            return Err(Error::Consistency(format!("relation is not transitive at {i},{j},{k}")));
                        }
                    }
                }
            }
        }
        Ok(Self::build(m))
    }

    /// Builds from cover pairs `(x, y)` meaning `x < y`; the order is their
    /// reflexive-transitive closure.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(x, y) in covers {
            if x >= n || y >= n {
                return Err(Error::NoSuchElement(x.max(y)));
            }
            m[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if m[i][k] {
                    for j in 0..n {
                        if m[k][j] {
                            m[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(n, |i, j| m[i][j])
    }

    fn build(leq: Vec<Vec<bool>>) -> Self {
        let n = leq.len();
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq[b][x]));
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t]));
        let mut poset = Self {
            leq,
            rank: None,
            bottom,
            top,
            eulerian: OnceLock::new(),
            memo: Mutex::new(Memo::default()),
        };
        poset.rank = poset.compute_rank();
        poset
    }

    /// Rank function from the bottom element, if every cover relation raises
    /// the length of the longest chain from the bottom by exactly one.
    fn compute_rank(&self) -> Option<Vec<usize>> {
        let b = self.bottom?;
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // linear extension: number of elements below
        let below = |x: usize| (0..n).filter(|&y| self.leq[y][x]).count();
        order.sort_by_key(|&x| below(x));
        let mut rank = vec![0usize; n];
        for &x in &order {
            if x == b {
                continue;
            }
            rank[x] = order
                .iter()
                .filter(|&&y| y != x && self.leq[y][x])
                .map(|&y| rank[y] + 1)
                .max()
                .unwrap_or(0);
        }
        for x in 0..n {
            let up: Vec<usize> = (0..n).filter(|&y| self.lt(x, y)).collect();
            for &y in &up {
                let is_cover = !up.iter().any(|&z| self.lt(z, y));
                if is_cover && rank[y] != rank[x] + 1 {
                    return None;
                }
            }
        }
        Some(rank)
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    /// `y` covers `x`.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.len()).any(|z| z != x && z != y && self.lt(x, z) && self.lt(z, y))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn rank(&self, x: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[x])
    }

    /// Rank of the whole poset (rank of the top element).
    pub fn poset_rank(&self) -> Option<usize> {
        Some(self.rank.as_ref()?[self.top?])
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::NoSuchElement(x))
        }
    }

    /// Elements of `[x, y]`, sorted by rank when graded.
    pub fn interval_elements(&self, x: usize, y: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).filter(|&z| self.leq[x][z] && self.leq[z][y]).collect();
        if let Some(r) = &self.rank {
            v.sort_by_key(|&z| r[z]);
        } else {
            v.sort_by_key(|&z| (0..self.len()).filter(|&w| self.leq[w][z]).count());
        }
        v
    }

    /// The interval `[x, y]` as a poset of its own, elements renumbered in
    /// rank order starting from `x`.
    pub fn interval(&self, x: usize, y: usize) -> Result<FinitePoset> {
        self.check(x)?;
        self.check(y)?;
        if !self.leq[x][y] {
            return Err(Error::Incomparable(x, y));
        }
        let elems = self.interval_elements(x, y);
        Ok(Self::build(
            elems.iter().map(|&a| elems.iter().map(|&b| self.leq[a][b]).collect()).collect(),
        ))
    }

    /// Same underlying set with the order reversed.
    pub fn dual(&self) -> FinitePoset {
        let n = self.len();
        Self::build((0..n).map(|i| (0..n).map(|j| self.leq[j][i]).collect()).collect())
    }

    /// Möbius function `mu(x, y)`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        self.check(x)?;
        self.check(y)?;
        if !self.leq[x][y] {
            return Err(Error::Incomparable(x, y));
        }
        let elems = self.interval_elements(x, y);
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &z in &elems {
            let v = if z == x {
                1
            } else {
                -elems
                    .iter()
                    .filter(|&&w| self.lt(w, z))
                    .map(|w| mu[w])
                    .sum::<i64>()
            };
            mu.insert(z, v);
        }
        Ok(mu[&y])
    }

    /// `mu(x, y) = (-1)^(rank y - rank x)` for all `x <= y`, with a unique
    /// bottom and top.
    pub fn is_eulerian(&self) -> bool {
        *self.eulerian.get_or_init(|| self.compute_eulerian())
    }

    fn compute_eulerian(&self) -> bool {
        let (Some(rank), Some(_), Some(_)) = (&self.rank, self.bottom, self.top) else {
            return false;
        };
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&z| rank[z]);
        for x in 0..n {
            // mu(x, .) in one pass over a linear extension
            let mut mu = vec![0i64; n];
            for &z in &order {
                if !self.leq[x][z] {
                    continue;
                }
                mu[z] = if z == x {
                    1
                } else {
                    -(0..n).filter(|&w| self.leq[x][w] && self.lt(w, z)).map(|w| mu[w]).sum::<i64>()
                };
                let expected = if (rank[z] - rank[x]) % 2 == 0 { 1 } else { -1 };
                if mu[z] != expected {
                    return false;
                }
            }
        }
        true
    }

    fn require_eulerian(&self) -> Result<()> {
        if self.is_eulerian() {
            Ok(())
        } else {
            Err(Error::NotEulerian)
        }
    }

    /// `g` of the whole poset.
    pub fn g_poly(&self) -> Result<IntegerPolynomial> {
        self.require_eulerian()?;
        Ok(self.g_interval(self.bottom.unwrap(), self.top.unwrap()))
    }

    /// `h` of the whole poset.
    pub fn h_poly(&self) -> Result<IntegerPolynomial> {
        self.require_eulerian()?;
        Ok(self.h_interval(self.bottom.unwrap(), self.top.unwrap()))
    }

    /// `g` of the dual poset, without building it.
    pub fn g_dual_poly(&self) -> Result<IntegerPolynomial> {
        self.require_eulerian()?;
        Ok(self.g_dual_interval(self.bottom.unwrap(), self.top.unwrap()))
    }

    pub fn h_dual_poly(&self) -> Result<IntegerPolynomial> {
        self.require_eulerian()?;
        Ok(self.h_dual_interval(self.bottom.unwrap(), self.top.unwrap()))
    }

    /// `g([x, y], t)`. The poset must be Eulerian and graded; intervals of an
    /// Eulerian poset are Eulerian, so no per-interval check is made.
    pub fn g_interval(&self, x: usize, y: usize) -> IntegerPolynomial {
        if let Some(p) = self.memo.lock().unwrap().g.get(&(x, y)) {
            return p.clone();
        }
        let d = self.rank_diff(x, y);
        let g = if d == 0 {
            IntegerPolynomial::one()
        } else {
            let h = self.h_interval(x, y);
            let one_minus_t = IntegerPolynomial::from_coeffs([1, -1]);
            (&one_minus_t * &h).truncate_below(Rational64::new(d as i64, 2))
        };
        self.memo.lock().unwrap().g.insert((x, y), g.clone());
        g
    }

    /// `h([x, y], t)`.
    pub fn h_interval(&self, x: usize, y: usize) -> IntegerPolynomial {
        let d = self.rank_diff(x, y);
        if d == 0 {
            return IntegerPolynomial::one();
        }
        let rx = self.rank_unchecked(x);
        let t_minus_one = IntegerPolynomial::from_coeffs([-1, 1]);
        self.interval_elements(x, y)
            .into_iter()
            .filter(|&z| z != x)
            .map(|z| {
                let e = (self.rank_unchecked(z) - rx - 1) as u32;
                &t_minus_one.pow(e) * &self.g_interval(z, y)
            })
            .sum()
    }

    /// `g([x, y]^*, t)`, the `g`-polynomial of the dual of the interval.
    pub fn g_dual_interval(&self, x: usize, y: usize) -> IntegerPolynomial {
        if let Some(p) = self.memo.lock().unwrap().g_dual.get(&(x, y)) {
            return p.clone();
        }
        let d = self.rank_diff(x, y);
        let g = if d == 0 {
            IntegerPolynomial::one()
        } else {
            let h = self.h_dual_interval(x, y);
            let one_minus_t = IntegerPolynomial::from_coeffs([1, -1]);
            (&one_minus_t * &h).truncate_below(Rational64::new(d as i64, 2))
        };
        self.memo.lock().unwrap().g_dual.insert((x, y), g.clone());
        g
    }

    /// `h([x, y]^*, t)`.
    pub fn h_dual_interval(&self, x: usize, y: usize) -> IntegerPolynomial {
        let d = self.rank_diff(x, y);
        if d == 0 {
            return IntegerPolynomial::one();
        }
        let ry = self.rank_unchecked(y);
        let t_minus_one = IntegerPolynomial::from_coeffs([-1, 1]);
        self.interval_elements(x, y)
            .into_iter()
            .filter(|&z| z != y)
            .map(|z| {
                let e = (ry - self.rank_unchecked(z) - 1) as u32;
                &t_minus_one.pow(e) * &self.g_dual_interval(x, z)
            })
            .sum()
    }

    fn rank_unchecked(&self, x: usize) -> usize {
        self.rank.as_ref().expect("graded poset")[x]
    }

    fn rank_diff(&self, x: usize, y: usize) -> usize {
        assert!(self.leq[x][y], "interval endpoints must be comparable");
        self.rank_unchecked(y) - self.rank_unchecked(x)
    }

    /// Relative `g`-polynomial `g(P, F, t)` with `P` the top element and `F`
    /// the given element, for a poset playing the role of a face poset.
    pub fn relative_g(&self, f: usize) -> Result<IntegerPolynomial> {
        self.check(f)?;
        self.require_eulerian()?;
        Ok(self.relative_g_in(self.bottom.unwrap(), self.top.unwrap(), f))
    }

    /// `g([G, E], [G, F], t)`: relative `g` of the quotient `E/G` at `F/G`,
    /// computed inside this poset (`G <= F <= E`). Defined recursively by
    /// `sum_{F <= E' <= E} g([G,E'],[G,F]) g([E',E]^*) = g([G,E]^*)`.
    pub fn relative_g_in(&self, g: usize, e: usize, f: usize) -> IntegerPolynomial {
        if !(self.leq[g][f] && self.leq[f][e]) {
            return IntegerPolynomial::zero();
        }
        if let Some(p) = self.memo.lock().unwrap().rel_g.get(&(g, e, f)) {
            return p.clone();
        }
        let mut acc = self.g_dual_interval(g, e);
        for z in self.interval_elements(f, e) {
            if z == e {
                continue;
            }
            let term = &self.relative_g_in(g, z, f) * &self.g_dual_interval(z, e);
            acc = &acc - &term;
        }
        self.memo.lock().unwrap().rel_g.insert((g, e, f), acc.clone());
        acc
    }
}

/// Left side of Stanley's convolution identity
/// `sum_x g([0,x]) g([x,1]^*) (-1)^(rank 1 - rank x)`; zero on Eulerian posets
/// of positive rank.
pub fn stanley_convolution(p: &FinitePoset) -> Result<IntegerPolynomial> {
    p.require_eulerian()?;
    let (b, t) = (p.bottom.unwrap(), p.top.unwrap());
    let rt = p.rank_unchecked(t);
    Ok((0..p.len())
        .map(|x| {
            let s = if (rt - p.rank_unchecked(x)).is_multiple_of(2) { 1 } else { -1 };
            (&p.g_interval(b, x) * &p.g_dual_interval(x, t)).scale(&BigInt::from(s))
        })
        .sum())
}

/// The mirrored convolution `sum_x (-1)^(rank x - rank 0) g([0,x]^*) g([x,1])`.
pub fn stanley_convolution_mirror(p: &FinitePoset) -> Result<IntegerPolynomial> {
    p.require_eulerian()?;
    let (b, t) = (p.bottom.unwrap(), p.top.unwrap());
    Ok((0..p.len())
        .map(|x| {
            let s = if p.rank_unchecked(x).is_multiple_of(2) { 1 } else { -1 };
            (&p.g_dual_interval(b, x) * &p.g_interval(x, t)).scale(&BigInt::from(s))
        })
        .sum())
}

/// Residual of the defining identity of relative `g`-polynomials at `(top, f)`:
/// `sum_{f <= e <= top} g(e, f) g([e, top]^*) - g(P^*)`.
pub fn relative_g_residual(p: &FinitePoset, f: usize) -> Result<IntegerPolynomial> {
    p.require_eulerian()?;
    let (b, t) = (p.bottom.unwrap(), p.top.unwrap());
    let sum: IntegerPolynomial = p
        .interval_elements(f, t)
        .into_iter()
        .map(|e| &p.relative_g_in(b, e, f) * &p.g_dual_interval(e, t))
        .sum();
    Ok(&sum - &p.g_dual_interval(b, t))
}

/// Boolean lattice on `k` atoms: the face poset of a `(k-1)`-simplex.
pub fn boolean_lattice(k: usize) -> FinitePoset {
    let n = 1usize << k;
    FinitePoset::from_relation(n, |a, b| a & b == a).expect("subset order")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_coeffs(c.iter().copied())
    }

    /// Face poset of the unit square: empty, 4 vertices, 4 edges, square.
    fn square() -> FinitePoset {
        // vertices 1..=4 around the square, edges 5..=8 = {1,2},{2,3},{3,4},{4,1}
        let mut covers = vec![];
        for v in 1..=4 {
            covers.push((0, v));
        }
        let edges = [(1, 2), (2, 3), (3, 4), (4, 1)];
        for (k, &(a, b)) in edges.iter().enumerate() {
            covers.push((a, 5 + k));
            covers.push((b, 5 + k));
            covers.push((5 + k, 9));
        }
        FinitePoset::from_covers(10, &covers).unwrap()
    }

    fn segment() -> FinitePoset {
        FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn chain3() -> FinitePoset {
        FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn mobius_examples() {
        let s = segment();
        assert_eq!(s.mobius(2, 2).unwrap(), 1);
        assert_eq!(s.mobius(0, 3).unwrap(), 1);
        assert_eq!(chain3().mobius(0, 2).unwrap(), 0);
        assert_eq!(s.mobius(1, 2), Err(Error::Incomparable(1, 2)));
    }

    #[test]
    fn eulerian_examples() {
        assert!(segment().is_eulerian());
        assert!(square().is_eulerian());
        assert!(!chain3().is_eulerian());
        let single = FinitePoset::from_covers(1, &[]).unwrap();
        assert!(single.is_eulerian());
        assert_eq!(chain3().g_poly(), Err(Error::NotEulerian));
    }

    #[test]
    fn g_h_examples() {
        let single = FinitePoset::from_covers(1, &[]).unwrap();
        assert_eq!(single.g_poly().unwrap(), p(&[1]));
        assert_eq!(single.h_poly().unwrap(), p(&[1]));
        for k in 1..=5 {
            assert_eq!(boolean_lattice(k).g_poly().unwrap(), p(&[1]), "simplex on {k} vertices");
        }
        let sq = square();
        assert_eq!(sq.g_poly().unwrap(), p(&[1, 1]));
        assert_eq!(sq.h_poly().unwrap(), p(&[1, 2, 1]));
        assert_eq!(sq.dual().h_poly().unwrap(), p(&[1, 2, 1]));
        assert_eq!(sq.g_dual_poly().unwrap(), sq.dual().g_poly().unwrap());
    }

    #[test]
    fn hand_run_of_square_recursion() {
        // h = sum over nonbottom x of (t-1)^(rank x - 1) g([x, top])
        // vertices: 4 * g(segment) = 4, edges: 4 (t-1) g(point) , top: (t-1)^2
        let t1 = p(&[-1, 1]);
        let oracle = &(&p(&[4]) + &t1.scale(&BigInt::from(4))) + &t1.pow(2);
        assert_eq!(oracle, p(&[1, 2, 1]));
        assert_eq!(square().h_poly().unwrap(), oracle);
    }

    #[test]
    fn dual_is_involution() {
        let sq = square();
        assert_eq!(sq.dual().dual(), sq);
        assert!(sq.dual().is_eulerian());
        assert_eq!(boolean_lattice(3).dual().g_poly().unwrap(), p(&[1]));
    }

    #[test]
    fn relative_g_examples() {
        let simplex = boolean_lattice(3);
        let top = simplex.top().unwrap();
        assert_eq!(simplex.relative_g(top).unwrap(), p(&[1]));
        assert!(simplex.relative_g(0).unwrap().is_zero());
        for f in 1..top {
            assert!(simplex.relative_g(f).unwrap().is_zero(), "face {f}");
        }
        let sq = square();
        for f in 0..sq.len() {
            assert!(relative_g_residual(&sq, f).unwrap().is_zero());
            assert!(sq.relative_g(f).unwrap().is_nonnegative());
        }
        assert_eq!(sq.relative_g(9).unwrap(), sq.g_dual_poly().unwrap());
        assert_eq!(sq.relative_g(42), Err(Error::NoSuchElement(42)));
    }

    #[test]
    fn convolutions_vanish() {
        for poset in [segment(), square(), boolean_lattice(4)] {
            assert!(stanley_convolution(&poset).unwrap().is_zero());
            assert!(stanley_convolution_mirror(&poset).unwrap().is_zero());
        }
    }

    #[test]
    fn interval_shifts_rank() {
        let sq = square();
        let iv = sq.interval(1, 9).unwrap();
        assert_eq!(iv.len(), 4);
        assert_eq!(iv.poset_rank(), Some(2));
        assert!(iv.is_eulerian());
        assert_eq!(sq.interval(1, 2), Err(Error::Incomparable(1, 2)));
    }
}
