//! The twisted torus knots `K(n, m)`: the `(n-2)`-twisted `(3, 3m+2)`-torus
//! knots, their two-generator knot group, preferred longitude, genus and the
//! surgery slope classification.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Generator, Presentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyParams {
    n: i64,
    m: i64,
}

impl FamilyParams {
    pub fn new(n: i64, m: i64) -> Result<Self> {
        if n < 1 || m < 1 {
            return Err(Error::InvalidParameters(format!(
                "family parameters must satisfy n, m >= 1 (got n = {n}, m = {m})"
            )));
        }
        // Keeps every derived exponent (4n + 9m, 2n + 6m + 1, ...) far from overflow.
        if n > 1 << 40 || m > 1 << 40 {
            return Err(Error::InvalidParameters("family parameters too large".into()));
        }
        Ok(FamilyParams { n, m })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// `n + 3m`, the frequency that recurs throughout the root analysis.
    pub fn twist_frequency(&self) -> i64 {
        self.n + 3 * self.m
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({}, {})", self.n, self.m)
    }
}

struct Letters {
    a: Generator,
    w: Generator,
}

impl Letters {
    fn new() -> Self {
        Letters {
            a: Generator::new("a").expect("valid name"),
            w: Generator::new("w").expect("valid name"),
        }
    }

    fn a(&self, k: i64) -> Word {
        Word::syllable(&self.a, k)
    }

    fn w(&self, k: i64) -> Word {
        Word::syllable(&self.w, k)
    }

    fn aw(&self, k: i64) -> Word {
        (&self.a(1) * &self.w(1)).pow(k)
    }

    fn wa(&self, k: i64) -> Word {
        (&self.w(1) * &self.a(1)).pow(k)
    }
}

fn product(factors: &[Word]) -> Word {
    factors.iter().fold(Word::identity(), |acc, f| &acc * f)
}

/// The two sides of the defining relation
/// `w^n (aw)^m a^-1 (aw)^-m = (wa)^-m a (wa)^m w^(n-1)`.
pub fn relation_sides(params: FamilyParams) -> (Word, Word) {
    let (n, m) = (params.n, params.m);
    let l = Letters::new();
    let lhs = product(&[l.w(n), l.aw(m), l.a(-1), l.aw(-m)]);
    let rhs = product(&[l.wa(-m), l.a(1), l.wa(m), l.w(n - 1)]);
    (lhs, rhs)
}

/// `<a, w | r1 r2^-1>` with `a` marked as the meridian.
pub fn presentation(params: FamilyParams) -> Presentation {
    let l = Letters::new();
    let (r1, r2) = relation_sides(params);
    let relator = &r1 * &r2.inverse();
    Presentation::new(vec![l.a.clone(), l.w.clone()], vec![relator], Some(l.a))
        .expect("family presentation is well formed")
}

/// Preferred longitude `a^-(4n+9m-2) [(wa)^m w^n] (aw)^(m-1) a [w^n (aw)^m]`.
pub fn longitude(params: FamilyParams) -> Word {
    longitude_with_leading_exponent(params, -(4 * params.n + 9 * params.m - 2))
}

/// The longitude word with an arbitrary leading power of `a`.
///
/// Only the exponent `-(4n + 9m - 2)` gives a nullhomologous curve; the
/// value `-(2n + 9m + 2)` found in some earlier sources does not.
pub fn longitude_with_leading_exponent(params: FamilyParams, a_exponent: i64) -> Word {
    let (n, m) = (params.n, params.m);
    let l = Letters::new();
    product(&[
        l.a(a_exponent),
        l.wa(m),
        l.w(n),
        l.aw(m - 1),
        l.a(1),
        l.w(n),
        l.aw(m),
    ])
}

pub fn genus(params: FamilyParams) -> i64 {
    params.n + 3 * params.m - 1
}

/// `2n + 6m - 3`, which is also `2 genus - 1`.
pub fn slope_bound(params: FamilyParams) -> Ratio<i64> {
    let bound = 2 * params.n + 6 * params.m - 3;
    debug_assert_eq!(bound, 2 * genus(params) - 1);
    Ratio::from_integer(bound)
}

/// A surgery coefficient `p/q`, stored reduced with `q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurgerySlope(Ratio<i64>);

impl SurgerySlope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        if p == i64::MIN || q == i64::MIN {
            return Err(Error::InvalidParameters("slope out of range".into()));
        }
        Ok(SurgerySlope(Ratio::new(p, q)))
    }

    pub fn p(&self) -> i64 {
        *self.0.numer()
    }

    pub fn q(&self) -> i64 {
        *self.0.denom()
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p(), self.q())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotLeftOrderable,
    NoConclusion,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotLeftOrderable => "NotLeftOrderable",
            Verdict::NoConclusion => "NoConclusion",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurgeryClassification {
    pub verdict: Verdict,
    pub slope_bound: Ratio<i64>,
    /// Slopes sufficiently close to 0 give left-orderable groups. No
    /// explicit neighbourhood is known, so this never turns into a verdict.
    pub near_zero_note: bool,
}

/// Slopes at or above `2n + 6m - 3` give a surgered manifold whose
/// fundamental group is not left-orderable; nothing is claimed below it.
pub fn classify_surgery(params: FamilyParams, slope: SurgerySlope) -> SurgeryClassification {
    let bound = slope_bound(params);
    // Cross-multiplied in i128 so large numerators cannot overflow.
    let lhs = slope.p() as i128 * *bound.denom() as i128;
    let rhs = *bound.numer() as i128 * slope.q() as i128;
    let (verdict, near_zero_note) = if lhs >= rhs {
        (Verdict::NotLeftOrderable, false)
    } else {
        (Verdict::NoConclusion, true)
    };
    SurgeryClassification {
        verdict,
        slope_bound: bound,
        near_zero_note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foxcalc::compute_weights;

    fn fp(n: i64, m: i64) -> FamilyParams {
        FamilyParams::new(n, m).unwrap()
    }

    #[test]
    fn params_validated() {
        assert!(FamilyParams::new(0, 1).is_err());
        assert!(FamilyParams::new(1, 0).is_err());
        assert!(FamilyParams::new(1, 1).is_ok());
    }

    #[test]
    fn relator_exponent_sums() {
        for (n, m) in [(1, 1), (2, 3), (7, 2)] {
            let p = presentation(fp(n, m));
            let r = &p.relators()[0];
            let (a, w) = (&p.generators()[0], &p.generators()[1]);
            assert_eq!(r.exponent_sum(a), -2);
            assert_eq!(r.exponent_sum(w), 1);
            let wts = compute_weights(&p).unwrap();
            assert_eq!((wts.get(a), wts.get(w)), (1, 2));
        }
    }

    #[test]
    fn smallest_relator() {
        let p = presentation(fp(1, 1));
        // (w a w a^-1 w^-1 a^-1)(a^-1 w^-1 a^-1 w a)
        assert_eq!(p.relators()[0].to_string(), "w a w a^-1 w^-1 a^-2 w^-1 a^-1 w a");
    }

    #[test]
    fn longitude_exponent_sums() {
        let p = presentation(fp(1, 1));
        let (a, w) = (&p.generators()[0], &p.generators()[1]);
        let lam = longitude(fp(1, 1));
        assert_eq!(lam.exponent_sum(a), -8);
        assert_eq!(lam.exponent_sum(w), 4);
        let lam = longitude(fp(3, 2));
        assert_eq!(lam.exponent_sum(a), -22);
        assert_eq!(lam.exponent_sum(w), 11);
    }

    #[test]
    fn wrong_leading_exponent_is_not_nullhomologous() {
        let p = presentation(fp(3, 1));
        let (a, w) = (&p.generators()[0], &p.generators()[1]);
        let bad = longitude_with_leading_exponent(fp(3, 1), -(2 * 3 + 9 + 2));
        assert_ne!(bad.exponent_sum(a) + 2 * bad.exponent_sum(w), 0);
    }

    #[test]
    fn genus_and_bound() {
        assert_eq!(genus(fp(1, 1)), 3);
        for n in 1..6 {
            assert_eq!(genus(fp(n, 1)), n + 2);
        }
        assert_eq!(slope_bound(fp(1, 1)), Ratio::from_integer(5));
        assert_eq!(slope_bound(fp(3, 1)), Ratio::from_integer(9));
        assert_eq!(slope_bound(fp(5, 4)), Ratio::from_integer(2 * genus(fp(5, 4)) - 1));
    }

    #[test]
    fn slopes_are_normalized() {
        let s = SurgerySlope::new(6, -4).unwrap();
        assert_eq!((s.p(), s.q()), (-3, 2));
        assert_eq!(SurgerySlope::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn classification_examples() {
        let c = classify_surgery(fp(3, 1), SurgerySlope::new(13, 1).unwrap());
        assert_eq!(c.verdict, Verdict::NotLeftOrderable);
        assert_eq!(c.slope_bound, Ratio::from_integer(9));
        let c = classify_surgery(fp(1, 1), SurgerySlope::new(5, 1).unwrap());
        assert_eq!(c.verdict, Verdict::NotLeftOrderable);
        let c = classify_surgery(fp(1, 1), SurgerySlope::new(-3, 1).unwrap());
        assert_eq!(c.verdict, Verdict::NoConclusion);
        assert!(c.near_zero_note);
        let c = classify_surgery(fp(1, 1), SurgerySlope::new(49, 10).unwrap());
        assert_eq!(c.verdict, Verdict::NoConclusion);
        let c = classify_surgery(fp(1, 1), SurgerySlope::new(i64::MAX, 1).unwrap());
        assert_eq!(c.verdict, Verdict::NotLeftOrderable);
    }
}
