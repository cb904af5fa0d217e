//! Fan rays, crepancy and E_st,0 for the ADE surface singularities.
//!
//! Run with `cargo run --example ade_table`.

use std::fmt::Write;

use stringy::hodge::estring_crepant_value;
use stringy::newton::{is_crepant, MonomialSupport};

/// Standard equations of the ADE surface singularities as exponent lists.
pub fn ade_family() -> Vec<(String, MonomialSupport)> {
    let mut out = Vec::new();
    let mk = |m: &[&[i64]]| MonomialSupport::from_slices(3, m).expect("valid support");
    for n in 1..=6 {
        out.push((format!("A{n}"), mk(&[&[n + 1, 0, 0], &[0, 2, 0], &[0, 0, 2]])));
    }
    for n in 4..=6 {
        out.push((format!("D{n}"), mk(&[&[n - 1, 0, 0], &[1, 2, 0], &[0, 0, 2]])));
    }
    out.push(("E6".into(), mk(&[&[4, 0, 0], &[0, 3, 0], &[0, 0, 2]])));
    out.push(("E7".into(), mk(&[&[3, 0, 0], &[1, 3, 0], &[0, 0, 2]])));
    out.push(("E8".into(), mk(&[&[5, 0, 0], &[0, 3, 0], &[0, 0, 2]])));
    out
}

pub fn run_example() -> stringy::Result<String> {
    let mut s = String::new();
    writeln!(s, "{:<4} {:<28} {:<8} E_st,0", "", "non-basis rays", "crepant").unwrap();
    for (name, support) in ade_family() {
        let (crepant, rays) = is_crepant(&support)?;
        let gens: Vec<String> = rays
            .iter()
            .filter(|r| !r.is_basis)
            .map(|r| format!("({})", r.generator.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let e = if crepant { estring_crepant_value(&support)?.to_string() } else { "-".into() };
        let verdict = if crepant { "yes" } else { "no" };
        writeln!(s, "{name:<4} {:<28} {verdict:<8} {e}", gens.join(" ")).unwrap();
    }
    Ok(s)
}

#[allow(dead_code)]
fn main() -> stringy::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
