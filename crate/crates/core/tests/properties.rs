//! Randomized invariants over small lattice polytopes, cones and monomial
//! supports.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use stringy::hodge::{
    estring_crepant_value, estring_general_value, open_cone_series, stilde_in, stilde_recursive,
};
use stringy::newton::{classify, is_crepant, MonomialSupport};
use stringy::polytope::linalg::{dot, ivec, rank};
use stringy::polytope::{FaceLattice, LatticePolytope, OrderIdeal, RationalPolyhedron};

fn point_cloud() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-2i64..=2, d), 2..7))
}

fn polytope(points: &[Vec<i64>]) -> LatticePolytope {
    let refs: Vec<&[i64]> = points.iter().map(|p| p.as_slice()).collect();
    LatticePolytope::from_i64(&refs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn stilde_reciprocity_and_bounds(points in point_cloud()) {
        let p = polytope(&points);
        let fl = FaceLattice::new(&p).unwrap();
        let d = fl.dim(fl.top());
        let s = stilde_in(&fl, fl.top(), None).unwrap();
        prop_assert!(s.coeff(0).is_zero());
        prop_assert!(s.degree().is_none_or(|k| k as i64 <= d));
        prop_assert_eq!(s.reverse((d + 1) as usize), s.clone());
        prop_assert!(s.is_nonnegative());
    }

    #[test]
    fn hstar_is_nonnegative_and_counts_points(points in point_cloud()) {
        let p = polytope(&points);
        let h = p.hstar().unwrap();
        prop_assert!(h.is_nonnegative());
        prop_assert!(h.coeff(0) == BigInt::from(1));
        // h*_1 = #P - dim P - 1
        if p.dim() >= 1 {
            let n1 = p.count_lattice_points(1).unwrap() as i64;
            prop_assert_eq!(h.coeff(1), BigInt::from(n1 - p.dim() - 1));
        }
    }

    #[test]
    fn ideal_recursion_matches_definition(points in point_cloud(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let p = polytope(&points);
        let fl = FaceLattice::new(&p).unwrap();
        let proper: Vec<usize> = (0..fl.len()).filter(|&f| f != fl.top()).collect();
        let gens: Vec<usize> = picks.iter().map(|i| proper[i.index(proper.len())]).collect();
        let ideal = OrderIdeal::generated_by(&fl, &gens);
        let direct = stilde_in(&fl, fl.top(), Some(&ideal)).unwrap();
        let recursive = stilde_recursive(&fl, fl.top(), &ideal).unwrap();
        prop_assert_eq!(direct, recursive);
    }

    #[test]
    fn h_polynomial_is_palindromic(points in point_cloud()) {
        let p = polytope(&points);
        let fl = FaceLattice::new(&p).unwrap();
        let d = fl.dim(fl.top());
        let h = fl.poset().h_poly().unwrap();
        prop_assert_eq!(h.reverse(d as usize), h);
    }
}

/// Interior lattice points of a full-dimensional cone in the nonnegative
/// orthant, counted by coordinate sum up to `degree`.
fn interior_counts(gens: &[Vec<i64>], degree: i64) -> Vec<BigInt> {
    let n = gens[0].len();
    let cone = RationalPolyhedron::hull(&[vec![BigInt::zero(); n]], &gens.iter().map(|g| ivec(g)).collect::<Vec<_>>())
        .unwrap();
    let mut counts = vec![BigInt::zero(); degree as usize + 1];
    let mut v = vec![0i64; n];
    loop {
        let s: i64 = v.iter().sum();
        if s <= degree {
            let w = ivec(&v);
            if cone.inequalities().iter().all(|h| dot(&h.normal, &w).is_positive()) {
                counts[s as usize] += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return counts;
            }
            v[i] += 1;
            if v[i] <= degree {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn open_cone_series_matches_enumeration(gens in prop::collection::vec(prop::collection::vec(0i64..=3, 3), 3..6)) {
        let nonzero: Vec<Vec<i64>> = gens.into_iter().filter(|g| g.iter().any(|&x| x > 0)).collect();
        prop_assume!(nonzero.len() >= 3);
        prop_assume!(rank(&nonzero.iter().map(|g| ivec(g)).collect::<Vec<_>>()) == 3);
        let degree = 9;
        let series = open_cone_series(&nonzero.iter().map(|g| ivec(g)).collect::<Vec<_>>(), &ivec(&[1, 1, 1]))
            .unwrap()
            .invert_variable()
            .series_prefix(degree as usize + 1)
            .unwrap();
        prop_assert_eq!(series, interior_counts(&nonzero, degree));
    }
}

fn surface_support() -> impl Strategy<Value = MonomialSupport> {
    (2i64..=7, 2i64..=5, 2i64..=4, prop::option::of((0i64..=3, 0i64..=3, 0i64..=1))).prop_filter_map(
        "valid support",
        |(a, b, c, mixed)| {
            let mut m = vec![vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]];
            if let Some((x, y, z)) = mixed {
                if x + y + z >= 2 && !m.contains(&vec![x, y, z]) {
                    m.push(vec![x, y, z]);
                }
            }
            MonomialSupport::new(3, m).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn crepant_supports_agree_on_both_formulas(s in surface_support()) {
        let (crepant, rays) = is_crepant(&s).unwrap();
        let verdict = classify(&s).unwrap();
        // a ray of value <= 0 rules out canonicity
        if rays.iter().any(|r| r.value <= 0) {
            prop_assert!(!verdict.is_canonical());
        }
        // the T series only converge when sigma - m_f is positive on every ray
        if !verdict.is_canonical() {
            prop_assert!(estring_general_value(&s).is_err());
            return Ok(());
        }
        let general = estring_general_value(&s).unwrap();
        if crepant {
            let e = estring_crepant_value(&s).unwrap();
            prop_assert!(e.is_polynomial());
            prop_assert_eq!(general.as_laurent(), Some(&e));
        }
    }
}
