//! Which surgeries on K(n, m) are known to have non-left-orderable
//! fundamental group.

use std::fmt::Write;

use lo_surgery::{classify_surgery, FamilyParams, Result, SurgerySlope, Verdict};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let params = FamilyParams::new(3, 1)?;
    for (p, q) in [(13, 1), (9, 1), (17, 2), (8, 1), (0, 1), (-5, 3)] {
        let slope = SurgerySlope::new(p, q)?;
        let c = classify_surgery(params, slope);
        write!(out, "{params} slope {slope}: {}", c.verdict).unwrap();
        if c.near_zero_note {
            write!(out, " (bound {}; slopes near 0 are left-orderable)", c.slope_bound).unwrap();
        }
        writeln!(out).unwrap();
    }
    assert_eq!(
        classify_surgery(params, SurgerySlope::new(9, 1)?).verdict,
        Verdict::NotLeftOrderable
    );
    match SurgerySlope::new(1, 0) {
        Err(e) => writeln!(out, "1/0: {e}").unwrap(),
        Ok(_) => unreachable!(),
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
