//! Free-group words: parsing, free reduction, inverses, powers and
//! exponent sums.

use std::fmt::Write;

use lo_surgery::{parse_word, Generator, Result, Word};

pub fn run_example() -> Result<String> {
    let a = Generator::new("a")?;
    let w = Generator::new("w")?;
    let gens = [a.clone(), w.clone()];
    let mut out = String::new();

    let u = parse_word("w^2 (a w)^-1 a", &gens)?;
    writeln!(out, "w^2 (a w)^-1 a  reduces to  {u}").unwrap();
    assert_eq!(u, Word::letter(&w));

    let aw = &Word::letter(&a) * &Word::letter(&w);
    let cube = aw.pow(3);
    writeln!(out, "(a w)^3 = {cube}, letter length {}", cube.letter_length()).unwrap();
    writeln!(out, "inverse: {}", cube.inverse()).unwrap();
    assert!((&cube * &cube.inverse()).is_identity());

    // A long power stays compact because syllables carry exponents.
    let big = Word::syllable(&a, 1_000_000_000);
    let squared = big.checked_pow(2)?;
    writeln!(out, "(a^1000000000)^2 = {squared}").unwrap();

    let r = parse_word("w^3 (a w)^2 a^-1 (a w)^-2", &gens)?;
    writeln!(
        out,
        "exponent sums of {r}: a={} w={}",
        r.exponent_sum(&a),
        r.exponent_sum(&w)
    )
    .unwrap();

    match parse_word("a b", &gens) {
        Err(e) => writeln!(out, "parse error: {e}").unwrap(),
        Ok(_) => unreachable!("b is not a generator"),
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
