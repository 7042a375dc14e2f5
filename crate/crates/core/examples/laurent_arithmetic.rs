//! Exact Laurent polynomial arithmetic with big integer coefficients.

use std::fmt::Write;

use lo_surgery::{LaurentPoly, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();

    // (t^6 - 1)(t - 1) / ((t^2 - 1)(t^3 - 1)) is the trefoil polynomial.
    let num = &LaurentPoly::t_power_minus_one(6) * &LaurentPoly::t_power_minus_one(1);
    let den = &LaurentPoly::t_power_minus_one(2) * &LaurentPoly::t_power_minus_one(3);
    let q = num.exact_div(&den)?;
    writeln!(out, "quotient: {q}").unwrap();
    assert_eq!(q.to_string(), "1 - t + t^2");

    let centered = q.shift(-1);
    writeln!(out, "centered: {centered}, palindromic: {}", centered.is_palindromic()).unwrap();

    let sq = &(&t + &one) * &(&t - &one);
    writeln!(out, "(t + 1)(t - 1) = {sq}").unwrap();
    match sq.exact_div(&LaurentPoly::t_power_minus_one(3)) {
        Err(e) => writeln!(out, "dividing by t^3 - 1: {e}").unwrap(),
        Ok(_) => unreachable!(),
    }

    // Normalization picks min degree 0 and value +1 at t = 1.
    let raw = LaurentPoly::from_coeffs(-4, [-1, 1, -1]);
    writeln!(out, "{raw}  normalizes to  {}", raw.normalize_knot_poly()?).unwrap();

    let big = LaurentPoly::monomial(i64::MAX, 1);
    writeln!(out, "coefficients grow past i64: {}", &big * &big).unwrap();

    let form = q.centered_cosine_form()?;
    let theta = std::f64::consts::PI / 3.0;
    writeln!(
        out,
        "cosine form at pi/3: {:.3e}, |Delta(e^(i pi/3))| = {:.3e}",
        form.eval(theta),
        q.eval_unit_circle(theta).norm()
    )
    .unwrap();

    let json = serde_json::to_string(&q.to_json()).unwrap();
    writeln!(out, "json: {json}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
