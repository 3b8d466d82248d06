//! Partitions, Schur determinants in the Chern classes, Segre and power-sum
//! classes, and the tangent/cotangent sign flip.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{GradedPoly, Monomial};
use crate::rational::{int, Rational};

/// Which bundle the variables `c_i` are Chern classes of.
///
/// `Cotangent` means `c_i = c_i(Ω¹) = (-1)^i c_i(TX)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Tangent,
    Cotangent,
}

impl Convention {
    pub fn other(self) -> Self {
        match self {
            Convention::Tangent => Convention::Cotangent,
            Convention::Cotangent => Convention::Tangent,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Tangent => "tangent",
            Convention::Cotangent => "cotangent",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tangent" => Ok(Convention::Tangent),
            "cotangent" => Ok(Convention::Cotangent),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

/// A partition of `n` padded with zeros to length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `n >= a_1 >= ... >= a_n >= 0` with `sum a_j = n`; shorter input
    /// is zero-padded.
    pub fn new(parts: &[u32], n: usize) -> Result<Self> {
        let bad = || Error::InvalidPartition {
            parts: parts.to_vec(),
            n,
        };
        if parts.len() > n && parts[n..].iter().any(|&p| p != 0) {
            return Err(bad());
        }
        let mut padded: Vec<u32> = parts.iter().copied().take(n).collect();
        padded.resize(n, 0);
        let sum: usize = padded.iter().map(|&p| p as usize).sum();
        let nonincreasing = padded.windows(2).all(|w| w[0] >= w[1]);
        if sum != n || !nonincreasing || padded.first().is_some_and(|&a| a as usize > n) {
            return Err(bad());
        }
        Ok(Partition { parts: padded })
    }

    /// Parses the unpadded comma form, e.g. `2,1` for `(2,1,0)`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts, n)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Padded label used for generator names, e.g. `P_(2,1,0)`.
    pub fn label(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("P_({})", inner.join(","))
    }

    pub fn conjugate(&self) -> Vec<u32> {
        let max = self.parts.first().copied().unwrap_or(0);
        (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self
            .parts
            .iter()
            .filter(|&&p| p > 0)
            .map(|p| p.to_string())
            .collect();
        f.write_str(&inner.join(","))
    }
}

/// All partitions of `n`, padded to length `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=max.min(left)).rev() {
            cur.push(first);
            rec(left - first, first, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|mut parts| {
            parts.resize(n, 0);
            Partition { parts }
        })
        .collect()
}

/// `c_k` as a matrix entry: `c_0 = 1`, zero outside `[0, n]`.
fn chern_entry(k: i64, n: usize) -> Option<usize> {
    (0..=n as i64).contains(&k).then_some(k as usize)
}

/// `P_a(c) = det(c_{a_i - i + j})`, expanded by fraction-free elimination.
pub fn schur(a: &Partition, n: usize) -> Result<GradedPoly> {
    if a.n() != n {
        return Err(Error::InvalidPartition {
            parts: a.parts.clone(),
            n,
        });
    }
    if n == 0 {
        return Ok(GradedPoly::one(0));
    }
    let matrix: Vec<Vec<FreePoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = a.parts[i] as i64 - i as i64 + j as i64;
                    match chern_entry(k, n) {
                        Some(k) => FreePoly::chern(n, k),
                        None => FreePoly::zero(),
                    }
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(matrix, n)?;
    let terms = det.terms.into_iter().map(|(e, c)| (Monomial::new(e), c));
    GradedPoly::from_terms(n, terms)
}

/// Same determinant by permutation expansion inside the truncated ring.
/// Exponential in `n`; kept as an independent cross-check.
pub fn schur_by_permutations(a: &Partition, n: usize) -> Result<GradedPoly> {
    if a.n() != n {
        return Err(Error::InvalidPartition {
            parts: a.parts.clone(),
            n,
        });
    }
    let entry = |i: usize, j: usize| {
        let k = a.parts[i] as i64 - i as i64 + j as i64;
        match chern_entry(k, n) {
            Some(k) => GradedPoly::chern(n, k),
            None => GradedPoly::zero(n),
        }
    };
    let mut total = GradedPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let sign = permutation_sign(p);
        let mut term = GradedPoly::constant(n, int(sign));
        for (i, &j) in p.iter().enumerate() {
            term = &term * &entry(i, j);
            if term.is_zero() {
                return;
            }
        }
        total = &total + &term;
    });
    Ok(total)
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Top-weight part of `(1 + c_1 + ... + c_n)^{-1}`.
pub fn segre_top(n: usize) -> GradedPoly {
    // s_k = -(c_1 s_{k-1} + ... + c_k s_0)
    let mut s = vec![GradedPoly::one(n)];
    for k in 1..=n {
        let mut acc = GradedPoly::zero(n);
        for i in 1..=k {
            acc = &acc + &(&GradedPoly::chern(n, i) * &s[k - i]);
        }
        s.push(-&acc);
    }
    s.pop().unwrap()
}

/// Newton's identities, all power sums `p_1..p_n` of the Chern roots.
pub fn power_sums(n: usize) -> Vec<GradedPoly> {
    let mut p: Vec<GradedPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = GradedPoly::chern(n, k).scale(&int(k as i64));
        if k % 2 == 0 {
            acc = -&acc;
        }
        for i in 1..k {
            let term = &GradedPoly::chern(n, i) * &p[k - i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    p
}

/// `p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k`.
pub fn power_sum(k: usize, n: usize) -> Result<GradedPoly> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 1,
            hi: n as i64,
        });
    }
    Ok(power_sums(n).swap_remove(k - 1))
}

/// `c_i -> (-1)^i c_i`, returning the flipped polynomial and its convention.
pub fn flip_basis(a: &GradedPoly, from: Convention) -> (GradedPoly, Convention) {
    (a.flip(), from.other())
}

/// Untruncated sparse polynomial used only inside Bareiss elimination, where
/// intermediate minors can exceed the top weight.
#[derive(Clone, Debug, PartialEq)]
struct FreePoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Graded-lex key: total weight first, then exponents. A monomial order.
fn order_key(e: &[u32]) -> (usize, Vec<u32>) {
    let w = e.iter().enumerate().map(|(i, &x)| (i + 1) * x as usize).sum();
    (w, e.to_vec())
}

impl FreePoly {
    fn zero() -> Self {
        FreePoly {
            terms: BTreeMap::new(),
        }
    }

    fn chern(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        if k > 0 {
            e[k - 1] = 1;
        }
        FreePoly {
            terms: BTreeMap::from([(e, Rational::one())]),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = FreePoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by_key(|(e, _)| order_key(e))
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (de, dc) = divisor
            .leading()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or_else(|| Error::Consistency("division by zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut q = FreePoly::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(r, d)| r < d) {
                return Err(Error::Consistency("inexact polynomial division".into()));
            }
            let te: Vec<u32> = re.iter().zip(&de).map(|(r, d)| r - d).collect();
            let t = FreePoly {
                terms: BTreeMap::from([(te, rc / &dc)]),
            };
            rem = rem.sub(&t.mul(divisor));
            for (e, c) in t.terms {
                q.add_term(e, c);
            }
        }
        Ok(q)
    }
}

fn bareiss_det(mut m: Vec<Vec<FreePoly>>, vars: usize) -> Result<FreePoly> {
    let n = m.len();
    let mut negate = false;
    let mut prev = FreePoly::chern(vars, 0);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(FreePoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if negate {
        det = FreePoly::zero().sub(&det);
    }
    Ok(det)
}
