//! Sign-change roots on the unit circle for any palindromic knot
//! polynomial.

use std::f64::consts::PI;
use std::fmt::Write;

use lo_surgery::rootcert::DEFAULT_GRID_FACTOR;
use lo_surgery::{find_simple_roots, torus_knot_alexander, LaurentPoly, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let cases = [
        ("T(2, 3)", torus_knot_alexander(2, 3)?),
        ("T(3, 5)", torus_knot_alexander(3, 5)?),
        ("figure eight", LaurentPoly::from_coeffs(0, [-1, 3, -1])),
    ];
    for (name, p) in cases {
        let roots = find_simple_roots(&p, DEFAULT_GRID_FACTOR)?;
        let thetas: Vec<String> = roots
            .iter()
            .map(|r| format!("{:.6} (= {:.4} pi)", r.theta_star, r.theta_star / PI))
            .collect();
        writeln!(out, "{name}: {p}").unwrap();
        writeln!(out, "    roots: [{}]", thetas.join(", ")).unwrap();
    }
    // The trefoil polynomial vanishes at the primitive sixth roots of unity.
    let tref = find_simple_roots(&torus_knot_alexander(2, 3)?, DEFAULT_GRID_FACTOR)?;
    assert_eq!(tref.len(), 1);
    assert!((tref[0].theta_star - PI / 3.0).abs() < 1e-10);
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
