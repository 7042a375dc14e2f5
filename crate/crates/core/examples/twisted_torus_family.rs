//! The twisted torus knots K(n, m): presentation, longitude, Alexander
//! polynomial via Fox calculus against the closed form, and genus.

use std::fmt::Write;

use lo_surgery::{
    alexander_polynomial, closed_form_family, genus, longitude, presentation, slope_bound, torus_knot_alexander,
    ColumnChoice, FamilyParams, Result,
};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let params = FamilyParams::new(2, 1)?;
    writeln!(out, "{params}").unwrap();
    write!(out, "{}", presentation(params)).unwrap();
    writeln!(out, "longitude: {}", longitude(params)).unwrap();

    for n in 1..=4 {
        for m in 1..=3 {
            let params = FamilyParams::new(n, m)?;
            let fox = alexander_polynomial(&presentation(params), &ColumnChoice::Auto)?;
            let closed = closed_form_family(params)?;
            assert_eq!(fox, closed);
            writeln!(
                out,
                "{params}: genus {} bound {} Delta = {fox}",
                genus(params),
                slope_bound(params)
            )
            .unwrap();
        }
    }

    // With a single full twist the knot is a torus knot.
    let k11 = closed_form_family(FamilyParams::new(1, 1)?)?;
    assert_eq!(k11, torus_knot_alexander(3, 4)?);
    writeln!(out, "K(1, 1) matches T(3, 4)").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
