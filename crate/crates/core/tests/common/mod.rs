#![allow(dead_code)]

use stringy::newton::MonomialSupport;
use stringy::polytope::LatticePolytope;

fn lp(points: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::from_i64(points).expect("valid polytope")
}

fn cube(d: usize) -> LatticePolytope {
    let pts: Vec<Vec<i64>> = (0..1u32 << d).map(|m| (0..d).map(|i| ((m >> i) & 1) as i64).collect()).collect();
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    lp(&refs)
}

fn simplex(d: usize) -> LatticePolytope {
    let mut pts = vec![vec![0i64; d]];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        pts.push(e);
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    lp(&refs)
}

fn cross(d: usize) -> LatticePolytope {
    let mut pts = Vec::new();
    for i in 0..d {
        for s in [1, -1] {
            let mut e = vec![0i64; d];
            e[i] = s;
            pts.push(e);
        }
    }
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    lp(&refs)
}

/// Fixed polytopes of dimensions 1 to 5.
pub fn polytope_corpus() -> Vec<(&'static str, LatticePolytope)> {
    vec![
        ("unit segment", lp(&[&[0], &[1]])),
        ("segment of length 3", lp(&[&[0], &[3]])),
        ("slanted segment", lp(&[&[6, 1, 1, 1, 1, 3], &[6, 1, 1, 1, 3, 1]])),
        ("unit triangle", simplex(2)),
        ("doubled triangle", lp(&[&[0, 0], &[2, 0], &[0, 2]])),
        ("unit square", cube(2)),
        ("rectangle", lp(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]])),
        ("trapezoid", lp(&[&[0, 0], &[3, 0], &[0, 1], &[1, 1]])),
        ("reflexive triangle", lp(&[&[-1, -1], &[1, 0], &[0, 1]])),
        ("hexagon", lp(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]])),
        ("unit tetrahedron", simplex(3)),
        ("Reeve tetrahedron", lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])),
        ("cube", cube(3)),
        ("octahedron", cross(3)),
        ("square pyramid", lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]])),
        ("triangular prism", lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 1], &[0, 1, 1]])),
        ("bipyramid domain", lp(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])),
        ("4-simplex", simplex(4)),
        ("4-cross-polytope", cross(4)),
        ("4-cube", cube(4)),
        (
            "pyramid over a cube",
            lp(&[
                &[0, 0, 0, 0],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[1, 1, 0, 0],
                &[1, 0, 1, 0],
                &[0, 1, 1, 0],
                &[1, 1, 1, 0],
                &[0, 0, 0, 1],
            ]),
        ),
        ("5-simplex", simplex(5)),
        (
            "double pyramid over a square",
            lp(&[&[0, 0, 0, 0, 0], &[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[1, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]),
        ),
    ]
}

fn support(n: usize, m: &[&[i64]]) -> MonomialSupport {
    MonomialSupport::from_slices(n, m).expect("valid support")
}

/// Standard ADE surface equations.
pub fn ade() -> Vec<(String, MonomialSupport)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("A{n}"), support(3, &[&[n + 1, 0, 0], &[0, 2, 0], &[0, 0, 2]])));
    }
    for n in 4..=6 {
        out.push((format!("D{n}"), support(3, &[&[n - 1, 0, 0], &[1, 2, 0], &[0, 0, 2]])));
    }
    out.push(("E6".into(), support(3, &[&[4, 0, 0], &[0, 3, 0], &[0, 0, 2]])));
    out.push(("E7".into(), support(3, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 2]])));
    out.push(("E8".into(), support(3, &[&[5, 0, 0], &[0, 3, 0], &[0, 0, 2]])));
    out
}

pub fn named(name: &str) -> MonomialSupport {
    ade().into_iter().find(|(n, _)| n == name).map(|(_, s)| s).expect("known name")
}

pub fn brieskorn_5333() -> MonomialSupport {
    support(4, &[&[5, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 3]])
}

pub fn node_4() -> MonomialSupport {
    support(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]])
}

pub fn wrong_signs_6() -> MonomialSupport {
    support(
        6,
        &[
            &[2, 0, 0, 0, 0, 0],
            &[0, 12, 0, 0, 0, 0],
            &[0, 0, 12, 0, 0, 0],
            &[0, 0, 0, 12, 0, 0],
            &[0, 0, 0, 0, 12, 0],
            &[0, 0, 0, 0, 0, 12],
            &[0, 0, 0, 0, 3, 3],
        ],
    )
}

/// Crepant inputs beyond the surfaces: threefolds and the six-variable one.
pub fn extra_crepant() -> Vec<(String, MonomialSupport)> {
    vec![
        ("x^2+y^4+z^4+w^4".into(), support(4, &[&[2, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 4]])),
        ("x^3+y^3+z^3+w^3".into(), support(4, &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 3]])),
        ("x^2+y^3+z^6+w^6".into(), support(4, &[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 6, 0], &[0, 0, 0, 6]])),
        ("six-variable".into(), wrong_signs_6()),
    ]
}
