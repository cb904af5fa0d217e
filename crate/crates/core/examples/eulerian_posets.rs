//! g- and h-polynomials of Eulerian posets: Boolean lattices, face lattices
//! of polytopes and their duals.
//!
//! Run with `cargo run --example eulerian_posets`.

use std::fmt::Write;

use stringy::poset::{boolean_lattice, relative_g_residual, stanley_convolution};
use stringy::polytope::{FaceLattice, LatticePolytope};

pub fn run_example() -> stringy::Result<String> {
    let mut s = String::new();
    for k in 1..=4 {
        let b = boolean_lattice(k);
        writeln!(s, "boolean lattice B{k}: g = {}, h = {}", b.g_poly()?, b.h_poly()?).unwrap();
    }
    let octahedron = LatticePolytope::from_i64(&[
        &[1, 0, 0],
        &[-1, 0, 0],
        &[0, 1, 0],
        &[0, -1, 0],
        &[0, 0, 1],
        &[0, 0, -1],
    ])?;
    let fl = FaceLattice::new(&octahedron)?;
    let p = fl.poset();
    writeln!(s, "octahedron: {} faces, eulerian = {}", fl.len(), p.is_eulerian()).unwrap();
    writeln!(s, "  g = {}, h = {}", p.g_poly()?, p.h_poly()?).unwrap();
    writeln!(s, "  dual (cube): g = {}, h = {}", p.g_dual_poly()?, p.h_dual_poly()?).unwrap();
    writeln!(s, "  convolution residual = {}", stanley_convolution(p)?).unwrap();
    let vertex = fl.vertex_face(0)?;
    writeln!(
        s,
        "  relative g at a vertex = {}, identity residual = {}",
        p.relative_g(vertex)?,
        relative_g_residual(p, vertex)?
    )
    .unwrap();
    Ok(s)
}

#[allow(dead_code)]
fn main() -> stringy::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
