//! A crepant singularity in dimension 5 whose local contribution has
//! coefficients of the wrong sign below degree 5.
//!
//! Run with `cargo run --release --example wrong_signs`.

use std::fmt::Write;

use stringy::cli::parse;
use stringy::hodge::{estring_crepant_from, sign_report, stilde_in};
use stringy::newton::support_complex;

pub const F: &str = "x1^2 + x2^12 + x3^12 + x4^12 + x5^12 + x6^12 + x5^3*x6^3";

pub fn run_example() -> stringy::Result<String> {
    let mut s = String::new();
    let support = parse(F, None)?.support()?;
    let sc = support_complex(&support)?;
    let e = estring_crepant_from(&sc)?;
    writeln!(s, "E_st,0 = {e}").unwrap();
    let report = sign_report(&e, support.n as i64 - 1);
    for t in report.wrong_signs() {
        writeln!(s, "wrong sign: {} u^{} v^{}", t.c, t.i, t.j).unwrap();
    }
    writeln!(s, "signs right in degree >= {}: {}", report.d, report.ok_in_range()).unwrap();

    // the support polytopes that are segments carry the negative constant
    let fl = &sc.p_empty;
    for &(_, p_mu) in &sc.correspondence {
        if fl.dim(p_mu) == 1 {
            let hstar = fl.hstar(p_mu)?;
            let with_ideal = stilde_in(fl, p_mu, Some(&sc.ideal_of(p_mu)))?;
            writeln!(s, "segment {:?}: h* = {hstar}, S~ with ideal = {with_ideal}", fl.vertex_points(p_mu)).unwrap();
        }
    }
    Ok(s)
}

#[allow(dead_code)]
fn main() -> stringy::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
