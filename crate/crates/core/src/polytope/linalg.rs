//! Exact linear algebra over Z and Q on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IVec = Vec<BigInt>;

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Divides by the gcd of the entries (leaves the zero vector alone).
pub fn primitive(v: &[BigInt]) -> IVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v.to_vec()
    } else {
        v.iter().map(|x| x / &g).collect()
    }
}

/// Clears denominators of a rational vector, returning the primitive
/// integer vector on the same ray.
pub fn clear_denominators(v: &[BigRational]) -> IVec {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: IVec = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    primitive(&ints)
}

fn to_q(rows: &[IVec]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[IVec]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(&mut to_q(rows)).len()
}

/// Dimension of the affine hull of the points (-1 for no points).
pub fn affine_dim(points: &[IVec]) -> i64 {
    match points.split_first() {
        None => -1,
        Some((p0, rest)) => rank(&rest.iter().map(|p| sub(p, p0)).collect::<Vec<_>>()) as i64,
    }
}

/// Basis of the rational kernel `{x : rows . x = 0}` in `Q^n`, each vector
/// scaled to a primitive integer vector.
pub fn rational_kernel(rows: &[IVec], n: usize) -> Vec<IVec> {
    let mut m = to_q(rows);
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); n];
            x[f] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -m[i][f].clone();
            }
            clear_denominators(&x)
        })
        .collect()
}

/// Coefficients `lambda` with `sum lambda_i basis_i = v`, if `v` lies in the
/// span of the (linearly independent) basis vectors.
pub fn solve_in_basis(basis: &[IVec], v: &[BigInt]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = v.len();
    // augmented system: columns are basis vectors, last column is v
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                basis.iter().map(|b| BigRational::from_integer(b[i].clone())).collect();
            row.push(BigRational::from_integer(v[i].clone()));
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        lambda[p] = m[i][k].clone();
    }
    Some(lambda)
}

/// Extended gcd: `(g, x, y)` with `a x + b y = g >= 0`.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Z-basis of the integer kernel `{x in Z^n : rows . x = 0}`, by unimodular
/// column operations bringing the matrix to column echelon form.
pub fn integer_kernel(rows: &[IVec], n: usize) -> Vec<IVec> {
    let mut m: Vec<IVec> = rows.to_vec();
    // u holds columns of the unimodular transform: u[j] is column j
    let mut u: Vec<IVec> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut c = 0;
    for r in 0..m.len() {
        if c == n {
            break;
        }
        for j in c + 1..n {
            if m[r][j].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[r][j].clone();
            let (g, x, y) = ext_gcd(&a, &b);
            let (ag, bg) = (&a / &g, &b / &g);
            // col_c <- x col_c + y col_j ; col_j <- -bg col_c + ag col_j
            for row in m.iter_mut() {
                let (vc, vj) = (row[c].clone(), row[j].clone());
                row[c] = &x * &vc + &y * &vj;
                row[j] = -&bg * &vc + &ag * &vj;
            }
            let (uc, uj) = (u[c].clone(), u[j].clone());
            u[c] = uc.iter().zip(&uj).map(|(p, q)| &x * p + &y * q).collect();
            u[j] = uc.iter().zip(&uj).map(|(p, q)| -&bg * p + &ag * q).collect();
        }
        if !m[r][c].is_zero() {
            c += 1;
        }
    }
    u.split_off(c)
}

/// Z-basis of the saturated lattice `span(gens) ∩ Z^n`.
pub fn saturated_basis(gens: &[IVec], n: usize) -> Vec<IVec> {
    let complement = rational_kernel(gens, n);
    integer_kernel(&complement, n)
}
