//! Alexander polynomials from presentations (Jacobian minors of the Fox
//! matrix), the closed form for the twisted torus family, and the classical
//! torus-knot formula used as an oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::foxcalc::{abelianize, compute_weights, fox_derivative, Weights};
use crate::laurent::LaurentPoly;
use crate::words::{Generator, Presentation};

/// Abelianized Fox Jacobian: entry `(i, j)` is the image of `d r_i / d a_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlexanderMatrix {
    pub generators: Vec<Generator>,
    pub weights: Weights,
    pub rows: Vec<Vec<LaurentPoly>>,
}

impl AlexanderMatrix {
    pub fn column_index(&self, g: &Generator) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    /// Determinant of the square minor obtained by deleting column `j`.
    pub fn minor(&self, j: usize) -> LaurentPoly {
        let square: Vec<Vec<LaurentPoly>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        determinant(&square)
    }
}

pub fn alexander_matrix(p: &Presentation) -> Result<AlexanderMatrix> {
    let weights = compute_weights(p)?;
    Ok(alexander_matrix_with_weights(p, weights))
}

/// Jacobian under caller-supplied weights; no check that they kill the relators.
pub fn alexander_matrix_with_weights(p: &Presentation, weights: Weights) -> AlexanderMatrix {
    let rows = p
        .relators()
        .iter()
        .map(|r| {
            p.generators()
                .iter()
                .map(|g| abelianize(&fox_derivative(r, g), &weights))
                .collect()
        })
        .collect();
    AlexanderMatrix {
        generators: p.generators().to_vec(),
        weights,
        rows,
    }
}

/// Cofactor expansion along the first row. The empty matrix has
/// determinant 1.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    match m.len() {
        0 => LaurentPoly::one(),
        1 => m[0][0].clone(),
        size => {
            let mut acc = LaurentPoly::zero();
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<LaurentPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                debug_assert_eq!(sub.len(), size - 1);
                let term = entry * &determinant(&sub);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Which generator's column is deleted from the Jacobian.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ColumnChoice {
    /// The generator of smallest positive weight (the meridian when there is one
    /// of weight 1), ties broken by declaration order.
    #[default]
    Auto,
    Generator(Generator),
}

/// `det(A_j) (t - 1) / (t^{e_j} - 1)`, unit-normalized.
pub fn alexander_polynomial(p: &Presentation, column: &ColumnChoice) -> Result<LaurentPoly> {
    let matrix = alexander_matrix(p)?;
    alexander_from_matrix(&matrix, column)
}

pub fn alexander_from_matrix(matrix: &AlexanderMatrix, column: &ColumnChoice) -> Result<LaurentPoly> {
    let j = match column {
        ColumnChoice::Auto => matrix
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| matrix.weights.get(g) > 0)
            .min_by_key(|&(i, g)| (matrix.weights.get(g), i))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::ZeroWeightColumn(matrix.generators[0].name().to_string()))?,
        ColumnChoice::Generator(g) => matrix.column_index(g).ok_or_else(|| Error::UnknownGenerator {
            name: g.name().to_string(),
            offset: 0,
        })?,
    };
    let g = &matrix.generators[j];
    let e = matrix.weights.get(g);
    if e == 0 {
        return Err(Error::ZeroWeightColumn(g.name().to_string()));
    }
    let numerator = &matrix.minor(j) * &LaurentPoly::t_power_minus_one(1);
    numerator
        .exact_div(&LaurentPoly::t_power_minus_one(e))?
        .normalize_knot_poly()
}

/// `1 + t + t^{3m+2} + t^{2n+3m-1} + t^{2n+6m} + t^{2n+6m+1}`.
pub fn family_numerator(params: FamilyParams) -> LaurentPoly {
    let (n, m) = (params.n(), params.m());
    LaurentPoly::from_terms(
        [0, 1, 3 * m + 2, 2 * n + 3 * m - 1, 2 * n + 6 * m, 2 * n + 6 * m + 1]
            .into_iter()
            .map(|k| (k, 1)),
    )
}

/// Closed-form Alexander polynomial of `K(n, m)`:
/// `-(numerator) / ((t + 1)(t^2 + t + 1))`, normalized.
pub fn closed_form_family(params: FamilyParams) -> Result<LaurentPoly> {
    let denominator = LaurentPoly::from_coeffs(0, [1, 2, 2, 1]);
    (-family_numerator(params))
        .exact_div(&denominator)?
        .normalize_knot_poly()
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))` for coprime `p, q >= 2`.
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameters(format!(
            "torus knot needs p, q >= 2 (got {p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let pq = p.checked_mul(q).ok_or(Error::ExponentOverflow)?;
    let num = &LaurentPoly::t_power_minus_one(pq) * &LaurentPoly::t_power_minus_one(1);
    let den = &LaurentPoly::t_power_minus_one(p) * &LaurentPoly::t_power_minus_one(q);
    num.exact_div(&den)?.normalize_knot_poly()
}

/// A finite sum `sum_i c_i (t^{s_i} + t^{-s_i})` with half-integer
/// frequencies `s_i`, stored doubled so they stay exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegerCosineSum {
    /// `(2 s_i, c_i)`.
    pub terms: Vec<(i64, i64)>,
}

impl HalfIntegerCosineSum {
    /// Value at `t = e^{i theta}`, which is real: `2 sum c_i cos(s_i theta)`.
    pub fn eval(&self, theta: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(twice, c)| 2.0 * c as f64 * (0.5 * twice as f64 * theta).cos())
            .sum()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.terms.iter().map(|&(twice, _)| twice as f64 / 2.0).collect()
    }
}

/// The symmetric six-term sum `f(t)` with frequencies `n + 3m + 1/2`,
/// `n + 3m - 1/2` and `n - 3/2`, each with coefficient 1.
///
/// `Delta(t) = -t^{n-1} f(t) / ((t^{1/2} + t^{-1/2})(t + t^{-1} + 1))`.
pub fn f_polynomial(params: FamilyParams) -> HalfIntegerCosineSum {
    let (n, m) = (params.n(), params.m());
    HalfIntegerCosineSum {
        terms: vec![
            (2 * (n + 3 * m) + 1, 1),
            (2 * (n + 3 * m) - 1, 1),
            (2 * n - 3, 1),
        ],
    }
}

/// Knot determinant `|Delta(-1)|`.
pub fn determinant_of_knot(delta: &LaurentPoly) -> BigInt {
    delta.value_at_minus_one().abs()
}
