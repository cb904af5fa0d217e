//! Lattice point counts, h*-polynomials and S~-polynomials of a few small
//! lattice polytopes.
//!
//! Run with `cargo run --example ehrhart_hstar`.

use std::fmt::Write;

use stringy::hodge::{lattice_pyramid, stilde_in};
use stringy::polytope::{FaceLattice, LatticePolytope};

pub fn run_example() -> stringy::Result<String> {
    let mut s = String::new();
    let shapes: Vec<(&str, LatticePolytope)> = vec![
        ("segment [0,3]", LatticePolytope::from_i64(&[&[0], &[3]])?),
        ("unit square", LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?),
        ("reflexive triangle", LatticePolytope::from_i64(&[&[-1, -1], &[1, 0], &[0, 1]])?),
        ("Reeve tetrahedron r=3", LatticePolytope::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 3]])?),
        (
            "3-cube",
            LatticePolytope::from_i64(&[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ])?,
        ),
    ];
    for (name, p) in shapes {
        let counts: Vec<u64> = (1..=3).map(|m| p.count_lattice_points(m)).collect::<Result<_, _>>()?;
        let fl = FaceLattice::new(&p)?;
        let hstar = fl.hstar(fl.top())?;
        let st = stilde_in(&fl, fl.top(), None)?;
        let pyr = lattice_pyramid(&p)?.hstar()?;
        writeln!(s, "{name}: #mP = {counts:?}, h* = {hstar}, S~ = {st}, h* of pyramid = {pyr}").unwrap();
    }
    Ok(s)
}

#[allow(dead_code)]
fn main() -> stringy::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
