//! Alexander polynomials of the sample presentation files in `data/`.

use std::fmt::Write;
use std::path::Path;

use lo_surgery::{alexander_matrix, alexander_polynomial, compute_weights, ColumnChoice, Presentation, Result};

pub fn run_example() -> Result<String> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut out = String::new();
    for name in [
        "trefoil.pres",
        "trefoil_wirtinger.pres",
        "figure_eight.pres",
        "twisted_torus_3_2.pres",
    ] {
        let text = std::fs::read_to_string(dir.join(name)).expect("sample file is readable");
        let pres: Presentation = text.parse()?;
        let weights = compute_weights(&pres)?;
        let delta = alexander_polynomial(&pres, &ColumnChoice::Auto)?;
        let wts: Vec<String> = weights.iter().map(|(g, e)| format!("{}={e}", g.name())).collect();
        writeln!(out, "{name}: weights {}  Delta = {delta}", wts.join(" ")).unwrap();

        // Every column with nonzero weight gives the same answer.
        let matrix = alexander_matrix(&pres)?;
        for g in pres.generators() {
            if weights.get(g) != 0 {
                let via = lo_surgery::alexander::alexander_from_matrix(&matrix, &ColumnChoice::Generator(g.clone()))?;
                assert_eq!(via, delta);
            }
        }
    }

    let commutator: Presentation = "gens: x y\nrel: x y x^-1 y^-1\n".parse()?;
    match alexander_polynomial(&commutator, &ColumnChoice::Auto) {
        Err(e) => writeln!(out, "commutator relator: {e}").unwrap(),
        Ok(_) => unreachable!("H1 has rank two"),
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
