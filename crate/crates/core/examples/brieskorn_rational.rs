//! A strictly canonical singularity whose local contribution is not a
//! polynomial: x^5 + y^3 + z^3 + w^3.
//!
//! Run with `cargo run --example brieskorn_rational`.

use std::fmt::Write;

use stringy::cli::parse;
use stringy::hodge::estring_general_value;
use stringy::newton::{classify, is_crepant};

pub fn run_example() -> stringy::Result<String> {
    let mut s = String::new();
    let support = parse("x^5 + y^3 + z^3 + w^3", None)?.support()?;
    writeln!(s, "classification: {:?}", classify(&support)?).unwrap();
    let (crepant, rays) = is_crepant(&support)?;
    for r in rays.iter().filter(|r| !r.is_basis) {
        writeln!(s, "ray {:?}: sigma - m_f = {}", r.generator, r.value).unwrap();
    }
    writeln!(s, "crepant: {crepant}").unwrap();
    let e = estring_general_value(&support)?;
    writeln!(s, "E_st,0 = {e}").unwrap();
    writeln!(s, "polynomial: {}", e.as_laurent().is_some()).unwrap();
    Ok(s)
}

#[allow(dead_code)]
fn main() -> stringy::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
