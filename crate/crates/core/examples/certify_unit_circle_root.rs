//! A certified simple root of the family Alexander polynomial on the unit
//! circle, checked against the polynomial itself.

use std::fmt::Write;

use lo_surgery::rootcert::MonotoneWitness;
use lo_surgery::{certify_family_root, verify_root_against_delta, FamilyParams, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for (n, m) in [(1, 1), (2, 1), (3, 2), (10, 7), (50, 50)] {
        let params = FamilyParams::new(n, m)?;
        let cert = certify_family_root(params)?;
        let residual = verify_root_against_delta(params, &cert)?;
        writeln!(
            out,
            "{params}: {} theta* = {:.12} in [{:.6}, {:.6}], residual {residual:.3e}",
            cert.kind.as_str(),
            cert.theta_star,
            cert.theta_lo,
            cert.theta_hi
        )
        .unwrap();
        if let MonotoneWitness::Panels { panels, min_slope, .. } = cert.witness {
            writeln!(out, "    -g' >= {min_slope:.3e} on {panels} panels").unwrap();
        }
    }
    let params = FamilyParams::new(2, 1)?;
    let cert = certify_family_root(params)?;
    let residual = verify_root_against_delta(params, &cert)?;
    let json = serde_json::to_string(&cert.to_json(residual)).unwrap();
    writeln!(out, "json: {json}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
