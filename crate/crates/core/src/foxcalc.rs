//! Integral group ring of a free group, Fox free derivatives and the
//! abelianization map into `Z[t, t^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::words::{Generator, Presentation, Word};

/// A finite formal sum `sum n_u u` of free-group words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        GroupRingElement::term(w, 1)
    }

    pub fn term(w: Word, c: impl Into<BigInt>) -> Self {
        let mut x = GroupRingElement::zero();
        x.add_term(w, c.into());
        x
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// `u * self`, multiplying every word on the left.
    pub fn left_mul_word(&self, u: &Word) -> Self {
        let mut out = GroupRingElement::zero();
        for (w, c) in &self.terms {
            out.add_term(u * w, c.clone());
        }
        out
    }
}

impl Add<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Mul<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u * v, a * b);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_identity() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}({w})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}

/// `1 + g + g^2 + ... + g^k`.
pub fn delta(g: &Word, k: u32) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut power = Word::identity();
    for _ in 0..=k {
        out.add_term(power.clone(), BigInt::one());
        power = &power * g;
    }
    out
}

/// Fox derivative `d u / d g`.
///
/// Walks the syllables once, carrying the prefix word. A syllable `g^k`
/// contributes `prefix * (1 + g + ... + g^{k-1})` for `k > 0` and
/// `-prefix * (g^-1 + ... + g^k)` for `k < 0`.
pub fn fox_derivative(u: &Word, g: &Generator) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for s in u.syllables() {
        if &s.generator == g {
            let k = s.exponent;
            let (range, sign) = if k > 0 {
                (0..k, BigInt::one())
            } else {
                (k..0, -BigInt::one())
            };
            for j in range {
                out.add_term(&prefix * &Word::syllable(g, j), sign.clone());
            }
        }
        prefix = &prefix * &Word::syllable(&s.generator, s.exponent);
    }
    out
}

/// Images `t^{e_g}` of the generators under abelianization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    weights: BTreeMap<Generator, i64>,
}

impl Weights {
    /// Explicit weights; the vector must be primitive (gcd 1).
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let weights: BTreeMap<Generator, i64> = pairs.into_iter().collect();
        let g = weights.values().fold(0i64, |acc, &w| acc.gcd(&w));
        if g != 1 {
            return Err(Error::InvalidParameters(format!(
                "weights must be primitive, gcd is {g}"
            )));
        }
        Ok(Weights { weights })
    }

    pub fn get(&self, g: &Generator) -> i64 {
        self.weights.get(g).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.weights.iter().map(|(g, &w)| (g, w))
    }

    /// Exponent of `t` in the image of a word.
    pub fn degree(&self, u: &Word) -> i64 {
        u.syllables()
            .iter()
            .map(|s| s.exponent * self.get(&s.generator))
            .sum()
    }

    /// True when every relator maps to `t^0`.
    pub fn kills_relators(&self, p: &Presentation) -> bool {
        p.relators().iter().all(|r| self.degree(r) == 0)
    }
}

/// Ring homomorphism `Z[F] -> Z[t, t^-1]` determined by the weights.
pub fn abelianize(x: &GroupRingElement, weights: &Weights) -> LaurentPoly {
    LaurentPoly::from_terms(x.terms().map(|(w, c)| (weights.degree(w), c.clone())))
}

/// Abelianization weights of a knot-group presentation.
///
/// Finds the primitive integer generator of the kernel of the relator
/// exponent-sum matrix. Unimodular column operations (extended-gcd pivots)
/// bring the matrix to column echelon form while the same operations are
/// applied to an identity matrix; the columns of that transform over the
/// zero columns of the echelon form are a lattice basis of the kernel.
pub fn compute_weights(p: &Presentation) -> Result<Weights> {
    let gens = p.generators();
    let l = gens.len();
    let rows: Vec<Vec<i128>> = p
        .relators()
        .iter()
        .map(|r| gens.iter().map(|g| r.exponent_sum(g) as i128).collect())
        .collect();

    // m: rows x l, transform: l x l, both stored column-major.
    let mut m: Vec<Vec<i128>> = (0..l).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..l)
        .map(|j| (0..l).map(|i| i128::from(i == j)).collect())
        .collect();

    let mut pivot_col = 0;
    for row in 0..rows.len() {
        if pivot_col == l {
            break;
        }
        // Clear row entries right of the pivot column using gcd steps.
        for j in pivot_col + 1..l {
            let a = m[pivot_col][row];
            let b = m[j][row];
            if b == 0 {
                continue;
            }
            let e = a.extended_gcd(&b);
            let (x, y, d) = (e.x, e.y, e.gcd);
            let (pa, pb) = (a / d, b / d);
            // [col_p, col_j] <- [x col_p + y col_j, -pb col_p + pa col_j]; det = 1.
            for mat in [&mut m, &mut u] {
                let (cp, cj) = two_mut(mat, pivot_col, j);
                for (vp, vj) in cp.iter_mut().zip(cj.iter_mut()) {
                    let np = checked(x.checked_mul(*vp), y.checked_mul(*vj))?;
                    let nj = checked((-pb).checked_mul(*vp), pa.checked_mul(*vj))?;
                    *vp = np;
                    *vj = nj;
                }
            }
        }
        if m[pivot_col][row] != 0 {
            pivot_col += 1;
        }
    }

    let rank = pivot_col;
    let nullity = l - rank;
    if nullity != 1 {
        return Err(Error::H1RankNotOne(nullity));
    }
    let mut v = u[l - 1].clone();
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    for x in v.iter_mut() {
        *x /= g;
    }
    let lead = p
        .meridian()
        .and_then(|mg| gens.iter().position(|g| g == mg))
        .filter(|&i| v[i] != 0)
        .or_else(|| v.iter().position(|&x| x != 0))
        .expect("nonzero kernel vector");
    if v[lead] < 0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    let pairs = gens
        .iter()
        .zip(&v)
        .map(|(g, &w)| Ok((g.clone(), i64::try_from(w).map_err(|_| Error::ExponentOverflow)?)))
        .collect::<Result<Vec<_>>>()?;
    Weights::new(pairs)
}

fn checked(a: Option<i128>, b: Option<i128>) -> Result<i128> {
    a.zip(b)
        .and_then(|(a, b)| a.checked_add(b))
        .ok_or(Error::ExponentOverflow)
}

fn two_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    assert!(i < j);
    let (lo, hi) = v.split_at_mut(j);
    (&mut lo[i], &mut hi[0])
}
