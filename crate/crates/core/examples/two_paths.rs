//! The two formulas for E_st,0 side by side, and the T series of one cone
//! against direct lattice point enumeration.
//!
//! Run with `cargo run --example two_paths`.

use std::fmt::Write;

use stringy::hodge::{estring_crepant_value, estring_general_value, t_delta, t_delta_bruteforce};
use stringy::newton::{varchenko_fan, MonomialSupport};

pub fn run_example() -> stringy::Result<String> {
    let mut s = String::new();
    let e7 = MonomialSupport::from_slices(3, &[&[3, 0, 0], &[1, 3, 0], &[0, 0, 2]])?;
    let fan = varchenko_fan(&e7)?;
    for tau in fan.newton.compact_faces() {
        let t = t_delta(&fan, tau)?;
        let series = t.invert_variable().series_prefix(8)?;
        let counted = t_delta_bruteforce(&fan, tau, 7)?;
        writeln!(s, "face {:?}: T = {t}", fan.newton.face_points(tau)).unwrap();
        writeln!(s, "  series {series:?}, counted {counted:?}").unwrap();
    }
    let general = estring_general_value(&e7)?;
    let crepant = estring_crepant_value(&e7)?;
    writeln!(s, "general formula: {general}").unwrap();
    writeln!(s, "crepant formula: {crepant}").unwrap();
    writeln!(s, "agree: {}", general.as_laurent() == Some(&crepant)).unwrap();
    Ok(s)
}

#[allow(dead_code)]
fn main() -> stringy::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
