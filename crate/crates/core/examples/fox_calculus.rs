//! Fox derivatives in the integral group ring of a free group, and their
//! images under abelianization.

use std::fmt::Write;

use lo_surgery::{abelianize, fox_derivative, parse_word, GroupRingElement, Generator, Result, Weights, Word};

pub fn run_example() -> Result<String> {
    let x = Generator::new("x")?;
    let y = Generator::new("y")?;
    let gens = [x.clone(), y.clone()];
    let mut out = String::new();

    let r = parse_word("x y x y^-1 x^-1 y^-1", &gens)?;
    let dx = fox_derivative(&r, &x);
    let dy = fox_derivative(&r, &y);
    writeln!(out, "d/dx {r} = {dx}").unwrap();
    writeln!(out, "d/dy {r} = {dy}").unwrap();

    // Fundamental identity: sum of (d/dg r)(g - 1) equals r - 1.
    let mut total = GroupRingElement::zero();
    for g in &gens {
        let gm1 = &GroupRingElement::from_word(Word::letter(g)) - &GroupRingElement::one();
        total = &total + &(&fox_derivative(&r, g) * &gm1);
    }
    let expected = &GroupRingElement::from_word(r.clone()) - &GroupRingElement::one();
    assert_eq!(total, expected);
    writeln!(out, "fundamental identity holds: {}", total == expected).unwrap();

    let wts = Weights::new([(x.clone(), 1), (y.clone(), 1)])?;
    writeln!(out, "abelianized: {}  and  {}", abelianize(&dx, &wts), abelianize(&dy, &wts)).unwrap();

    let neg = fox_derivative(&Word::syllable(&x, -3), &x);
    writeln!(out, "d/dx x^-3 = {neg}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
