//! Exact Laurent polynomials in one variable `t` over arbitrary-precision
//! integers.
//!
//! Terms are kept in a sparse exponent map with no zero coefficients; the
//! zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, c.into());
        p
    }

    /// `t^k - 1`.
    pub fn t_power_minus_one(k: i64) -> Self {
        let mut p = LaurentPoly::monomial(1, k);
        p.add_term(0, BigInt::from(-1));
        p
    }

    /// Dense constructor: `coeffs[i]` is the coefficient of `t^(min_degree + i)`.
    pub fn from_coeffs<I, C>(min_degree: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(min_degree + i as i64, c.into());
        }
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Dense coefficient list from `min_degree` to `max_degree`.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        let Some(lo) = self.min_degree() else {
            return Vec::new();
        };
        (lo..=self.max_degree().unwrap()).map(|k| self.coeff(k)).collect()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn value_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(&k, c)| if k.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`.
    ///
    /// Both operands are shifted to ordinary polynomials with nonzero
    /// constant term and divided from the top degree down; any nonzero
    /// remainder (or a non-integral quotient coefficient) is `NotDivisible`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(q_lo), Some(q_hi)) = (divisor.min_degree(), divisor.max_degree()) else {
            return Err(Error::DivisionByZero);
        };
        let (Some(p_lo), Some(p_hi)) = (self.min_degree(), self.max_degree()) else {
            return Ok(LaurentPoly::zero());
        };
        let dp = (p_hi - p_lo) as usize;
        let dq = (q_hi - q_lo) as usize;
        if dp < dq {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.dense_coeffs();
        let div = divisor.dense_coeffs();
        let lead = &div[dq];
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (dq..=dp).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (c, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, d) in div.iter().enumerate() {
                if !d.is_zero() {
                    rem[i - dq + j] -= &c * d;
                }
            }
            quot[i - dq] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(LaurentPoly::from_coeffs(p_lo - q_lo, quot))
    }

    /// Unit normal form of a knot polynomial: multiplies by `±t^k` so the
    /// lowest exponent is 0 and the value at `t = 1` is `+1`.
    pub fn normalize_knot_poly(&self) -> Result<LaurentPoly> {
        let v = self.value_at_one();
        let sign = if v.is_one() {
            BigInt::one()
        } else if v == BigInt::from(-1) {
            BigInt::from(-1)
        } else {
            return Err(Error::NotAKnotPolynomial(v.to_string()));
        };
        let lo = self.min_degree().expect("nonzero");
        Ok(self.shift(-lo).scale(&sign))
    }

    /// `coeff(min + k) == coeff(max - k)` for every `k`. The zero
    /// polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return true;
        };
        self.terms.iter().all(|(&k, c)| self.terms.get(&(lo + hi - k)) == Some(c))
    }

    /// `sum c_k e^{i k theta}` in double precision.
    pub fn eval_unit_circle(&self, theta: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&k, c)| Complex64::from_polar(bigint_to_f64(c), k as f64 * theta))
            .sum()
    }

    /// Real cosine form of a palindromic polynomial of even span `2g`.
    ///
    /// With `c` the central exponent, `t^{-c} p(t)` at `t = e^{i theta}` is
    /// `c_0 + 2 sum_{k>=1} c_k cos(k theta)`, where `c_k` is the coefficient
    /// of `t^{c+k}`.
    pub fn centered_cosine_form(&self) -> Result<CosineForm> {
        if !self.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let span = self.span();
        if span % 2 != 0 {
            return Err(Error::OddSpan(span));
        }
        let Some(lo) = self.min_degree() else {
            return Ok(CosineForm { coeffs: vec![0.0] });
        };
        let center = lo + span / 2;
        let coeffs = (0..=span / 2)
            .map(|k| bigint_to_f64(&self.coeff(center + k)))
            .collect();
        Ok(CosineForm { coeffs })
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            min_degree: self.min_degree().unwrap_or(0),
            coeffs: self.dense_coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<LaurentPoly> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::PolynomialJson(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::from_coeffs(json.min_degree, coeffs))
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// JSON wire shape: `{"min_degree": k, "coeffs": ["c_k", "c_{k+1}", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub min_degree: i64,
    pub coeffs: Vec<String>,
}

/// `P(theta) = c_0 + 2 sum_{k>=1} c_k cos(k theta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CosineForm {
    pub coeffs: Vec<f64>,
}

impl CosineForm {
    pub fn eval(&self, theta: f64) -> f64 {
        let mut acc = self.coeffs[0];
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            acc += 2.0 * c * (k as f64 * theta).cos();
        }
        acc
    }

    pub fn derivative(&self, theta: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| -2.0 * c * k as f64 * (k as f64 * theta).sin())
            .sum()
    }

    /// Half the span of the polynomial it came from.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Ascending powers with explicit `t^k`: `1 - t + t^3 - t^5 + t^6`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&k, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
