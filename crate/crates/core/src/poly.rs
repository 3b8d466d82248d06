//! Exact graded polynomials in the Chern variables `c_1, ..., c_n`.
//!
//! `c_i` has weight `i`, and every product is truncated above weight `n`, so
//! a `GradedPoly` of dimension `n` lives in the ring the Chern classes of an
//! `n`-dimensional manifold generate. The weight-`n` part is what gets
//! integrated; [`ChernFunctional`] stores it as a dense vector over the
//! canonical monomial basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, Rational};
use crate::symchern::Convention;

/// Exponent vector; index `i` holds the exponent of `c_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// `c_i` alone; `i` is 1-based.
    pub fn chern(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Sign picked up under `c_i -> (-1)^i c_i`.
    pub fn flip_sign_is_negative(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The parts of the partition `(i^{e_i})` this monomial corresponds to,
    /// largest first.
    pub fn as_partition(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32 + 1, e as usize));
        }
        parts
    }

    pub fn from_partition(dim: usize, parts: &[u32]) -> Self {
        let mut e = vec![0; dim];
        for &p in parts.iter().filter(|&&p| p > 0) {
            e[p as usize - 1] += 1;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    /// Weight ascending, then exponent vectors lexicographically descending
    /// (so `c1^4 < c1^2*c2 < c1*c3 < c2^2 < c4`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "c{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of weight exactly `weight` in `dim` variables, in canonical
/// order. For `weight == dim` there are p(dim) of them.
pub fn weight_basis(dim: usize, weight: usize) -> Vec<Monomial> {
    fn rec(dim: usize, var: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == 0 {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        // var is 1-based; iterate exponents of c_var
        for e in 0..=(left / var) {
            cur[var - 1] = e as u32;
            rec(dim, var - 1, left - e * var, cur, out);
        }
        cur[var - 1] = 0;
    }
    let mut out = Vec::new();
    if weight == 0 {
        return vec![Monomial::one(dim)];
    }
    let mut cur = vec![0; dim];
    rec(dim, dim.min(weight), weight, &mut cur, &mut out);
    out.sort();
    out
}

/// Canonical basis for top-weight functionals in dimension `dim`.
pub fn top_basis(dim: usize) -> Vec<Monomial> {
    weight_basis(dim, dim)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    dim: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero(dim: usize) -> Self {
        GradedPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(Monomial::one(dim), c);
        p
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    /// `c_i` with the usual conventions `c_0 = 1` and `c_i = 0` for `i > dim`.
    pub fn chern(dim: usize, i: usize) -> Self {
        match i {
            0 => Self::one(dim),
            i if i > dim => Self::zero(dim),
            i => Self::monomial(Monomial::chern(dim, i), Rational::one()),
        }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.dim());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from explicit terms, rejecting monomials of the wrong
    /// length or of weight above `dim`.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (m, c) in terms {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: m.dim(),
                });
            }
            if m.weight() > dim {
                return Err(Error::Parse(format!(
                    "monomial {m} has weight {} above dimension {dim}",
                    m.weight()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Adds `c * m`, silently dropping monomials above the truncation weight.
    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || m.weight() > self.dim {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.dim))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Truncated product: monomials of weight above `dim` are discarded.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &other.terms {
                if wa + mb.weight() > self.dim {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Weight-`w` component.
    pub fn component(&self, w: usize) -> Self {
        GradedPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, w: usize) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// `c_i -> (-1)^i c_i`; an involution.
    pub fn flip(&self) -> Self {
        GradedPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.flip_sign_is_negative() { -c } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Weight-`dim` part as a functional tagged with `convention`.
    pub fn top_part(&self, convention: Convention) -> ChernFunctional {
        let basis = top_basis(self.dim);
        let coeffs = basis.iter().map(|m| self.coeff(m)).collect();
        ChernFunctional {
            dim: self.dim,
            convention,
            coeffs,
        }
    }

    /// Parses the text form (e.g. `-1*c1^4 + 4*c1^2*c2 + 1/2*c4`).
    ///
    /// Coefficients may be omitted (`c1^2 - 5*c2`) and a factor may repeat
    /// (`c1*c1`). Decimal literals are rejected.
    pub fn parse(s: &str, dim: usize) -> Result<Self> {
        parse::parse_poly(s, dim)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exps: m.0.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let c = rational::parse_rational(&format!("{}/{}", t.num, t.den))?;
                Ok((Monomial(t.exps.clone()), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(j.dim, terms)
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let abs = format_rational(&c.abs());
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{abs}")?,
                (0, false) => write!(f, "{abs}")?,
                (_, true) => write!(f, " - {abs}")?,
                (_, false) => write!(f, " + {abs}")?,
            }
            if m.weight() > 0 {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;
    /// Panics on dimension mismatch; use [`GradedPoly::try_add`] to recover.
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_add(rhs).expect("GradedPoly dimension mismatch")
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_sub(rhs).expect("GradedPoly dimension mismatch")
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        self.try_mul(rhs).expect("GradedPoly dimension mismatch")
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub dim: usize,
    pub terms: Vec<TermJson>,
}

/// A linear functional on weight-`dim` Chern monomials: the formal integral of
/// a top-degree class. Coefficients are aligned with [`top_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernFunctional {
    dim: usize,
    convention: Convention,
    coeffs: Vec<Rational>,
}

impl ChernFunctional {
    pub fn zero(dim: usize, convention: Convention) -> Self {
        ChernFunctional {
            dim,
            convention,
            coeffs: vec![Rational::zero(); top_basis(dim).len()],
        }
    }

    pub fn from_coeffs(dim: usize, convention: Convention, coeffs: Vec<Rational>) -> Result<Self> {
        let want = top_basis(dim).len();
        if coeffs.len() != want {
            return Err(Error::DimensionMismatch {
                left: want,
                right: coeffs.len(),
            });
        }
        Ok(ChernFunctional {
            dim,
            convention,
            coeffs,
        })
    }

    /// Requires `poly` to be homogeneous of weight `dim` (or zero).
    pub fn from_poly(poly: &GradedPoly, convention: Convention) -> Result<Self> {
        if !poly.is_homogeneous(poly.dim()) {
            return Err(Error::Parse(format!(
                "functional must be homogeneous of weight {}: {poly}",
                poly.dim()
            )));
        }
        Ok(poly.top_part(convention))
    }

    pub fn parse(s: &str, dim: usize, convention: Convention) -> Result<Self> {
        Self::from_poly(&GradedPoly::parse(s, dim)?, convention)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> GradedPoly {
        let mut p = GradedPoly::zero(self.dim);
        for (m, c) in top_basis(self.dim).into_iter().zip(&self.coeffs) {
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.convention != other.convention {
            return Err(Error::ConventionMismatch {
                left: self.convention.to_string(),
                right: other.convention.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(ChernFunctional {
            dim: self.dim,
            convention: self.convention,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ChernFunctional {
            dim: self.dim,
            convention: self.convention,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Same functional written in the other convention.
    pub fn flipped(&self) -> Self {
        let coeffs = top_basis(self.dim)
            .iter()
            .zip(&self.coeffs)
            .map(|(m, c)| if m.flip_sign_is_negative() { -c } else { c.clone() })
            .collect();
        ChernFunctional {
            dim: self.dim,
            convention: self.convention.other(),
            coeffs,
        }
    }

    pub fn in_convention(&self, convention: Convention) -> Self {
        if self.convention == convention {
            self.clone()
        } else {
            self.flipped()
        }
    }

    /// Exact pairing with a coefficient vector in the same basis.
    pub fn dot(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                left: self.coeffs.len(),
                right: values.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(values)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Positive integer multiple with all coefficients integral, together with
    /// the multiplier (the lcm of the denominators).
    pub fn cleared(&self) -> (Self, BigInt) {
        let l = rational::denominator_lcm(&self.coeffs);
        (self.scale(&Rational::from_integer(l.clone())), l)
    }
}

impl fmt::Display for ChernFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

mod parse {
    use super::*;

    struct Cursor<'a> {
        s: &'a [u8],
        pos: usize,
    }

    impl Cursor<'_> {
        fn skip_ws(&mut self) {
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }
        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.s.get(self.pos).copied()
        }
        fn digits(&mut self) -> Option<&str> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
        }
    }

    pub(super) fn parse_poly(src: &str, dim: usize) -> Result<GradedPoly> {
        if src.contains(['.']) || src.contains(['e', 'E']) {
            return Err(Error::FloatRejected(src.to_string()));
        }
        let mut cur = Cursor {
            s: src.as_bytes(),
            pos: 0,
        };
        let mut out = GradedPoly::zero(dim);
        let mut first = true;
        loop {
            let negative = match cur.peek() {
                None if first => return Err(Error::Parse("empty polynomial".into())),
                None => break,
                Some(b'+') => {
                    cur.pos += 1;
                    false
                }
                Some(b'-') => {
                    cur.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(ch) => {
                    return Err(Error::Parse(format!(
                        "expected '+' or '-' at byte {}, found {:?}",
                        cur.pos, ch as char
                    )))
                }
            };
            first = false;
            let (m, mut c) = parse_term(&mut cur, dim)?;
            if negative {
                c = -c;
            }
            if m.weight() > dim {
                return Err(Error::Parse(format!(
                    "term {m} has weight above dimension {dim}"
                )));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn parse_term(cur: &mut Cursor<'_>, dim: usize) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one(dim);
        loop {
            match cur.peek() {
                Some(b'c') => {
                    cur.pos += 1;
                    let idx: usize = cur
                        .digits()
                        .ok_or_else(|| Error::Parse("expected index after 'c'".into()))?
                        .parse()
                        .map_err(|_| Error::Parse("bad variable index".into()))?;
                    let exp: u32 = if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        cur.digits()
                            .ok_or_else(|| Error::Parse("expected exponent after '^'".into()))?
                            .parse()
                            .map_err(|_| Error::Parse("bad exponent".into()))?
                    } else {
                        1
                    };
                    match idx {
                        0 => {}
                        i if i > dim => {
                            return Err(Error::Parse(format!(
                                "variable c{i} exceeds dimension {dim}"
                            )))
                        }
                        i => mono.0[i - 1] += exp,
                    }
                }
                Some(b) if b.is_ascii_digit() => {
                    let num = cur.digits().unwrap().to_string();
                    let mut r = rational::parse_rational(&num)?;
                    if cur.peek() == Some(b'/') {
                        cur.pos += 1;
                        let den = cur
                            .digits()
                            .ok_or_else(|| Error::Parse("expected denominator".into()))?;
                        r = rational::parse_rational(&format!("{num}/{den}"))?;
                    }
                    coeff *= r;
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected {:?} at byte {}",
                        other.map(|b| b as char),
                        cur.pos
                    )))
                }
            }
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(s: &str, dim: usize) -> GradedPoly {
        GradedPoly::parse(s, dim).unwrap()
    }

    #[test]
    fn canonical_order_matches_text_form() {
        let s = "-1*c1^4 + 4*c1^2*c2 + 1*c1*c3 + 3*c2^2 - 1*c4";
        assert_eq!(p(s, 4).to_string(), s);
        let basis: Vec<String> = top_basis(4).iter().map(|m| m.to_string()).collect();
        assert_eq!(basis, ["c1^4", "c1^2*c2", "c1*c3", "c2^2", "c4"]);
    }

    #[test]
    fn basis_sizes_are_partition_numbers() {
        let sizes: Vec<usize> = (0..=8).map(|n| top_basis(n).len()).collect();
        assert_eq!(sizes, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn add_examples() {
        assert!(p("c1", 2).try_add(&p("-c1", 2)).unwrap().is_zero());
        assert_eq!(&p("c1^2 - c2", 2) + &p("2*c2", 2), p("c1^2 + c2", 2));
        assert_eq!(&p("c1*c2 - c3", 3) + &p("c3", 3), p("c1*c2", 3));
    }

    #[test]
    fn mul_examples_and_truncation() {
        assert_eq!(&p("c1", 3) * &p("c2", 3), p("c1*c2", 3));
        assert!((&p("c1", 1) * &p("c1", 1)).is_zero());
        assert_eq!(&p("c1^2", 4) * &p("c2", 4), p("c1^2*c2", 4));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            p("c1", 2).try_add(&p("c1", 3)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(p("c1", 2).try_mul(&p("c1", 3)).is_err());
    }

    #[test]
    fn top_part_examples() {
        let a = p("1 + 1/2*c1 + 1/12*c1^2 + 1/12*c2", 2);
        let f = a.top_part(Convention::Cotangent);
        assert_eq!(f.coeffs(), &[frac(1, 12), frac(1, 12)]);
        let b = p("1/24*c1*c2 + 1/2*c1", 3);
        assert_eq!(b.top_part(Convention::Tangent).coeffs(), &[int(0), frac(1, 24), int(0)]);
        assert!(GradedPoly::zero(3).top_part(Convention::Tangent).is_zero());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(GradedPoly::parse("0.5*c1", 1), Err(Error::FloatRejected(_))));
        assert!(GradedPoly::parse("c3", 2).is_err());
        assert!(GradedPoly::parse("c1^3", 2).is_err());
        assert!(GradedPoly::parse("", 2).is_err());
        assert!(GradedPoly::parse("c1 c2", 2).is_err());
    }

    #[test]
    fn zero_and_constants_render() {
        assert_eq!(GradedPoly::zero(2).to_string(), "0");
        assert_eq!(p("-1/2 + c1", 1).to_string(), "-1/2 + 1*c1");
        assert_eq!(p("0", 0).to_string(), "0");
        assert_eq!(p("1", 0).to_string(), "1");
    }

    #[test]
    fn json_form() {
        let a = p("1/12*c1^2 - 5/6*c2", 2);
        let j = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"dim":2,"terms":[{"exps":[2,0],"num":"1","den":"12"},{"exps":[0,1],"num":"-5","den":"6"}]}"#
        );
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(GradedPoly::from_json(&back).unwrap(), a);
    }

    #[test]
    fn functional_flip_and_clear() {
        let f = ChernFunctional::parse("1/24*c1*c2", 3, Convention::Cotangent).unwrap();
        let g = f.flipped();
        assert_eq!(g.convention(), Convention::Tangent);
        assert_eq!(g.to_poly(), p("-1/24*c1*c2", 3));
        let (h, l) = f.cleared();
        assert_eq!(l, BigInt::from(24));
        assert_eq!(h.to_poly(), p("c1*c2", 3));
        assert!(ChernFunctional::parse("c1", 2, Convention::Tangent).is_err());
    }
}
