//! Manifolds with exactly computable Chern numbers, and sign audits over them.
//!
//! Chern numbers are produced in the tangent convention. Every top-weight
//! monomial has weight `n`, so the cotangent numbers are the tangent ones
//! times `(-1)^n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::NefMode;
use crate::error::{Error, Result};
use crate::hrr::{self, ChiTable};
use crate::par::{self, Execution};
use crate::poly::{top_basis, ChernFunctional, GradedPoly, Monomial};
use crate::rational::{self, format_rational, int, Rational};
use crate::symchern::Convention;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VarietyDescriptor {
    ProjectiveSpace {
        n: usize,
    },
    Curve {
        genus: u64,
    },
    /// Chern numbers of a surface (identical in both conventions).
    Surface {
        c1sq: i64,
        c2: i64,
    },
    /// Smooth hypersurface of `degree` in `P^ambient`.
    Hypersurface {
        degree: u64,
        ambient: usize,
    },
    AbelianVariety {
        n: usize,
    },
    Product {
        left: Box<VarietyDescriptor>,
        right: Box<VarietyDescriptor>,
    },
    /// Raw Chern numbers keyed by monomial text (`"c1^2"`); missing keys are 0.
    Explicit {
        n: usize,
        convention: Convention,
        numbers: BTreeMap<String, i64>,
    },
}

impl VarietyDescriptor {
    pub fn product(left: VarietyDescriptor, right: VarietyDescriptor) -> Self {
        VarietyDescriptor::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            VarietyDescriptor::ProjectiveSpace { n }
            | VarietyDescriptor::AbelianVariety { n }
            | VarietyDescriptor::Explicit { n, .. } => *n,
            VarietyDescriptor::Curve { .. } => 1,
            VarietyDescriptor::Surface { .. } => 2,
            VarietyDescriptor::Hypersurface { ambient, .. } => ambient.saturating_sub(1),
            VarietyDescriptor::Product { left, right } => left.dim() + right.dim(),
        }
    }

    /// Short names: `pn:3`, `curve:2`, `abelian:2`, `surface:9:3`,
    /// `hypersurface:5:4`, `quintic`, and products joined by `*`.
    pub fn parse_builtin(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((l, r)) = s.split_once('*') {
            return Ok(Self::product(Self::parse_builtin(l)?, Self::parse_builtin(r)?));
        }
        let fields: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |i: usize| -> Result<i64> {
            fields
                .get(i)
                .ok_or_else(|| Error::Parse(format!("{s:?} is missing a field")))?
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad number in {s:?}")))
        };
        let unsigned = |i: usize| -> Result<u64> {
            u64::try_from(num(i)?).map_err(|_| Error::Parse(format!("negative value in {s:?}")))
        };
        let d = match (fields[0], fields.len()) {
            ("pn", 2) => VarietyDescriptor::ProjectiveSpace {
                n: unsigned(1)? as usize,
            },
            ("curve", 2) => VarietyDescriptor::Curve { genus: unsigned(1)? },
            ("abelian", 2) => VarietyDescriptor::AbelianVariety {
                n: unsigned(1)? as usize,
            },
            ("surface", 3) => VarietyDescriptor::Surface {
                c1sq: num(1)?,
                c2: num(2)?,
            },
            ("hypersurface", 3) => VarietyDescriptor::Hypersurface {
                degree: unsigned(1)?,
                ambient: unsigned(2)? as usize,
            },
            ("quintic", 1) => VarietyDescriptor::Hypersurface {
                degree: 5,
                ambient: 4,
            },
            _ => return Err(Error::Parse(format!("unknown variety {s:?}"))),
        };
        Ok(d)
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyDescriptor::ProjectiveSpace { n } => write!(f, "pn:{n}"),
            VarietyDescriptor::Curve { genus } => write!(f, "curve:{genus}"),
            VarietyDescriptor::Surface { c1sq, c2 } => write!(f, "surface:{c1sq}:{c2}"),
            VarietyDescriptor::Hypersurface { degree, ambient } => {
                write!(f, "hypersurface:{degree}:{ambient}")
            }
            VarietyDescriptor::AbelianVariety { n } => write!(f, "abelian:{n}"),
            VarietyDescriptor::Product { left, right } => write!(f, "{left}*{right}"),
            VarietyDescriptor::Explicit { n, .. } => write!(f, "explicit:{n}"),
        }
    }
}

/// Chern numbers over the canonical weight-`n` monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernNumberSet {
    dim: usize,
    convention: Convention,
    values: Vec<Rational>,
}

impl ChernNumberSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, monomial: &str) -> Option<&Rational> {
        top_basis(self.dim)
            .iter()
            .position(|m| m.to_string() == monomial)
            .map(|i| &self.values[i])
    }

    pub fn in_convention(&self, convention: Convention) -> ChernNumberSet {
        if convention == self.convention || self.dim % 2 == 0 {
            return ChernNumberSet {
                convention,
                ..self.clone()
            };
        }
        ChernNumberSet {
            dim: self.dim,
            convention,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    pub fn evaluate(&self, f: &ChernFunctional) -> Result<Rational> {
        if f.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: f.dim(),
                right: self.dim,
            });
        }
        f.dot(&self.in_convention(f.convention()).values)
    }

    /// `monomial text -> value` pairs in basis order.
    pub fn named(&self) -> Vec<(String, Rational)> {
        top_basis(self.dim)
            .iter()
            .map(|m| m.to_string())
            .zip(self.values.iter().cloned())
            .collect()
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Chern numbers from a total Chern class `1 + b_1 h + ... + b_n h^n` with
/// `∫ h^n = degree`.
fn numbers_from_hyperplane_class(n: usize, b: &[BigInt], degree: &BigInt) -> Vec<Rational> {
    top_basis(n)
        .iter()
        .map(|m| {
            let v = m
                .exps()
                .iter()
                .enumerate()
                .fold(degree.clone(), |acc, (i, &e)| acc * b[i + 1].pow(e));
            Rational::from_integer(v)
        })
        .collect()
}

/// Tangent-convention Chern numbers.
fn tangent_numbers(v: &VarietyDescriptor) -> Result<Vec<Rational>> {
    use VarietyDescriptor::*;
    Ok(match v {
        ProjectiveSpace { n } => {
            let b: Vec<BigInt> = (0..=*n as u64).map(|i| binomial(*n as u64 + 1, i)).collect();
            numbers_from_hyperplane_class(*n, &b, &BigInt::one())
        }
        Hypersurface { degree, ambient } => {
            if *ambient == 0 || *degree == 0 {
                return Err(Error::Parse(format!(
                    "hypersurface needs degree >= 1 and ambient >= 1, got {degree}, {ambient}"
                )));
            }
            let n = ambient - 1;
            let d = BigInt::from(*degree);
            // (1+h)^{ambient+1} / (1+dh), truncated at h^n
            let b: Vec<BigInt> = (0..=n)
                .map(|i| {
                    (0..=i).fold(BigInt::zero(), |acc, j| {
                        let sign_pow = (-&d).pow((i - j) as u32);
                        acc + binomial(*ambient as u64 + 1, j as u64) * sign_pow
                    })
                })
                .collect();
            numbers_from_hyperplane_class(n, &b, &d)
        }
        Curve { genus } => vec![int(2 - 2 * *genus as i64)],
        Surface { c1sq, c2 } => vec![int(*c1sq), int(*c2)],
        AbelianVariety { n } => vec![Rational::zero(); top_basis(*n).len()],
        Explicit {
            n,
            convention,
            numbers,
        } => {
            let basis = top_basis(*n);
            let mut values = vec![Rational::zero(); basis.len()];
            for (key, value) in numbers {
                let m = GradedPoly::parse(key, *n)?;
                let (mono, coeff) = match m.terms().next() {
                    Some((mono, c)) if m.len() == 1 && c.is_one() => (mono.clone(), c),
                    _ => return Err(Error::Parse(format!("{key:?} is not a monomial"))),
                };
                debug_assert!(coeff.is_one());
                let idx = basis.iter().position(|b| *b == mono).ok_or_else(|| {
                    Error::Parse(format!("{key:?} is not a weight-{n} monomial"))
                })?;
                values[idx] = int(*value);
            }
            let set = ChernNumberSet {
                dim: *n,
                convention: *convention,
                values,
            };
            set.in_convention(Convention::Tangent).values
        }
        Product { left, right } => product_numbers(left, right)?,
    })
}

/// Whitney/Künneth: `c(X×Y) = c(X) ⊗ c(Y)`; integrate the `(dim X, dim Y)`
/// bigraded part against both factors' Chern numbers.
fn product_numbers(left: &VarietyDescriptor, right: &VarietyDescriptor) -> Result<Vec<Rational>> {
    let (nx, ny) = (left.dim(), right.dim());
    let n = nx + ny;
    let lx = tangent_numbers(left)?;
    let ly = tangent_numbers(right)?;
    let bx = top_basis(nx);
    let by = top_basis(ny);

    type Bigraded = BTreeMap<(Monomial, Monomial), Rational>;
    let mul = |a: &Bigraded, b: &Bigraded| -> Bigraded {
        let mut out = Bigraded::new();
        for ((ax, ay), ca) in a {
            for ((bx, by), cb) in b {
                let (mx, my) = (ax.mul(bx), ay.mul(by));
                if mx.weight() > nx || my.weight() > ny {
                    continue;
                }
                *out.entry((mx, my)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    let chern_factor = |dim: usize, i: usize| {
        if i == 0 {
            Monomial::one(dim)
        } else {
            Monomial::chern(dim, i)
        }
    };
    // c_i(X×Y) = sum_{a+b=i} c_a(X) c_b(Y)
    let class: Vec<Bigraded> = (0..=n)
        .map(|i| {
            (0..=i)
                .filter(|&a| a <= nx && i - a <= ny)
                .map(|a| {
                    (
                        (chern_factor(nx, a), chern_factor(ny, i - a)),
                        Rational::one(),
                    )
                })
                .collect()
        })
        .collect();

    top_basis(n)
        .iter()
        .map(|m| {
            let mut acc: Bigraded =
                BTreeMap::from([((Monomial::one(nx), Monomial::one(ny)), Rational::one())]);
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    acc = mul(&acc, &class[i + 1]);
                }
            }
            let mut total = Rational::zero();
            for ((mx, my), c) in acc {
                if mx.weight() != nx || my.weight() != ny {
                    continue;
                }
                let ix = bx.iter().position(|b| *b == mx).expect("top monomial");
                let iy = by.iter().position(|b| *b == my).expect("top monomial");
                total += c * &lx[ix] * &ly[iy];
            }
            Ok(total)
        })
        .collect()
}

pub fn chern_numbers(v: &VarietyDescriptor, convention: Convention) -> Result<ChernNumberSet> {
    chern_numbers_with(v, convention, crate::DEFAULT_MAX_DIM)
}

pub fn chern_numbers_with(
    v: &VarietyDescriptor,
    convention: Convention,
    max_dim: usize,
) -> Result<ChernNumberSet> {
    let dim = v.dim();
    if dim > max_dim {
        return Err(Error::UnsupportedDimension { dim, max: max_dim });
    }
    let set = ChernNumberSet {
        dim,
        convention: Convention::Tangent,
        values: tangent_numbers(v)?,
    };
    Ok(set.in_convention(convention))
}

/// Pairs a functional with the variety's Chern numbers.
pub fn evaluate(f: &ChernFunctional, v: &VarietyDescriptor) -> Result<Rational> {
    if f.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: f.dim(),
            right: v.dim(),
        });
    }
    chern_numbers_with(v, f.convention(), f.dim())?.evaluate(f)
}

/// `χ^0..χ^n` of a variety.
pub fn chi_values(v: &VarietyDescriptor, table: &ChiTable) -> Result<Vec<Rational>> {
    let numbers = chern_numbers_with(v, table.convention(), table.dim())?;
    table.rows().iter().map(|r| numbers.evaluate(r)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAudit {
    pub dim: usize,
    pub mode: NefMode,
    pub chi: Vec<Rational>,
    pub signed: Vec<Rational>,
}

impl SignAudit {
    pub fn pass_at(&self, p: usize) -> bool {
        !self.signed[p].is_negative()
    }

    pub fn passes(&self) -> bool {
        self.signed.iter().all(|s| !s.is_negative())
    }
}

/// Evaluates the conjectured sign pattern on `v`. The caller asserts the
/// nefness hypothesis; nothing here checks it.
pub fn check_signs(v: &VarietyDescriptor, mode: NefMode) -> Result<SignAudit> {
    check_signs_with(v, mode, crate::DEFAULT_MAX_DIM)
}

pub fn check_signs_with(v: &VarietyDescriptor, mode: NefMode, max_dim: usize) -> Result<SignAudit> {
    let n = v.dim();
    if n > max_dim {
        return Err(Error::UnsupportedDimension { dim: n, max: max_dim });
    }
    let table = hrr::chi_table_with(n, Execution::Sequential)?;
    let chi = chi_values(v, &table)?;
    let signed = chi
        .iter()
        .enumerate()
        .map(|(p, x)| x * mode.chi_sign(n, p))
        .collect();
    Ok(SignAudit {
        dim: n,
        mode,
        chi,
        signed,
    })
}

/// What a corpus line claims about its variety.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub euler: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational_vec")]
    pub chi: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<NefMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs_pass: Option<bool>,
}

mod opt_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| rational::parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

mod opt_rational_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        r: &Option<Vec<Rational>>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(v) => s.serialize_some(&v.iter().map(format_rational).collect::<Vec<_>>()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Vec<Rational>>, D::Error> {
        Option::<Vec<String>>::deserialize(d)?
            .map(|v| {
                v.iter()
                    .map(|s| rational::parse_rational(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub descriptor: VarietyDescriptor,
    #[serde(default)]
    pub expected: Expected,
}

/// Parses JSON lines; blank lines and `#` comments are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse(format!("corpus line {}: {e}", i + 1)))
        })
        .collect()
}

/// The corpus shipped with the crate.
pub const BUILTIN_CORPUS: &str = include_str!("../data/corpus.jsonl");

/// Outcome of replaying one corpus line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusResult {
    pub name: String,
    pub euler: Rational,
    pub chi: Vec<Rational>,
    pub audit: Option<SignAudit>,
    /// Human-readable disagreements with `expected`; empty when all match.
    pub mismatches: Vec<String>,
}

impl CorpusResult {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn replay_entry(entry: &CorpusEntry, max_dim: usize) -> Result<CorpusResult> {
    let v = &entry.descriptor;
    let n = v.dim();
    if n > max_dim {
        return Err(Error::UnsupportedDimension { dim: n, max: max_dim });
    }
    let numbers = chern_numbers_with(v, Convention::Cotangent, max_dim)?;
    let euler = numbers.evaluate(&hrr::euler_functional(n))?;
    let table = hrr::chi_table_with(n, Execution::Sequential)?;
    let chi = chi_values(v, &table)?;
    let mut mismatches = Vec::new();
    let show = |xs: &[Rational]| xs.iter().map(format_rational).collect::<Vec<_>>().join(", ");
    if let Some(e) = &entry.expected.euler {
        if *e != euler {
            mismatches.push(format!(
                "euler: expected {}, got {}",
                format_rational(e),
                format_rational(&euler)
            ));
        }
    }
    if let Some(c) = &entry.expected.chi {
        if *c != chi {
            mismatches.push(format!("chi: expected [{}], got [{}]", show(c), show(&chi)));
        }
    }
    let audit = entry
        .expected
        .mode
        .map(|mode| check_signs_with(v, mode, max_dim))
        .transpose()?;
    if let (Some(a), Some(want)) = (&audit, entry.expected.signs_pass) {
        if a.passes() != want {
            mismatches.push(format!(
                "signs: expected pass={want}, got pass={} ({})",
                a.passes(),
                show(&a.signed)
            ));
        }
    }
    Ok(CorpusResult {
        name: entry.name.clone(),
        euler,
        chi,
        audit,
        mismatches,
    })
}

/// Replays every entry; order of results follows the corpus.
pub fn replay_corpus(
    entries: &[CorpusEntry],
    max_dim: usize,
    exec: Execution,
) -> Result<Vec<CorpusResult>> {
    par::map_slice(entries, exec, |e| replay_entry(e, max_dim))
        .into_iter()
        .collect()
}
