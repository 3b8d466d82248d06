//! Todd class, Chern characters of `Ω^p`, and the `χ^p = χ(X, Ω^p)` functionals.
//!
//! Series work is done with tangent-bundle Chern classes, writing every
//! symmetric function of the Chern roots through power sums. Public
//! functionals are flipped to the cotangent convention once at the end.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::poly::{ChernFunctional, GradedPoly};
use crate::rational::{self, int, Rational};
use crate::series::{factorial, Series};
use crate::symchern::{power_sums, Convention};

/// `exp(a)` for `a` without constant term (nilpotent in the truncated ring).
fn exp_nilpotent(a: &GradedPoly) -> GradedPoly {
    debug_assert!(a.constant_term().is_zero());
    let n = a.dim();
    let mut out = GradedPoly::one(n);
    let mut power = GradedPoly::one(n);
    for k in 1..=n {
        power = &power * a;
        out = &out + &power.scale(&factorial(k).recip());
    }
    out
}

/// Coefficients of `log(x / (1 - e^{-x}))` up to `x^order`.
fn log_todd_series(order: usize) -> Series {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let base = Series::from_fn(order, |k| {
        let s = factorial(k + 1).recip();
        if k % 2 == 0 {
            s
        } else {
            -s
        }
    });
    base.inverse().log()
}

/// Total Todd class `prod x_i / (1 - e^{-x_i})` in tangent Chern classes.
pub fn todd_class(n: usize) -> GradedPoly {
    let a = log_todd_series(n);
    let p = power_sums(n);
    let mut log_td = GradedPoly::zero(n);
    for m in 1..=n {
        log_td = &log_td + &p[m - 1].scale(&a.0[m]);
    }
    exp_nilpotent(&log_td)
}

/// `ch(Ω^p)` for every `p = 0..=n`, in tangent Chern classes.
///
/// `Ω^p = Λ^p Ω¹` has Chern roots the `p`-fold sums of `-x_i`, so its character
/// is `e_p(e^{-x_1}, ..., e^{-x_n})`. Newton's identities build the `e_p` from
/// `P_k = sum_i e^{-k x_i}`.
pub fn ch_exterior_cotangent_all(n: usize) -> Vec<GradedPoly> {
    let p = power_sums(n);
    let big_p: Vec<GradedPoly> = (1..=n)
        .map(|k| {
            let mut s = GradedPoly::constant(n, int(n as i64));
            let mut kpow = Rational::one();
            for m in 1..=n {
                kpow *= int(-(k as i64));
                s = &s + &p[m - 1].scale(&(&kpow / factorial(m)));
            }
            s
        })
        .collect();
    let mut e = vec![GradedPoly::one(n)];
    for j in 1..=n {
        let mut acc = GradedPoly::zero(n);
        for i in 1..=j {
            let term = &e[j - i] * &big_p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&int(j as i64).recip()));
    }
    e
}

pub fn ch_exterior_cotangent(p: usize, n: usize) -> Result<GradedPoly> {
    check_p(p, n)?;
    Ok(ch_exterior_cotangent_all(n).swap_remove(p))
}

fn check_p(p: usize, n: usize) -> Result<()> {
    if p > n {
        return Err(Error::OutOfRange {
            what: "p",
            value: p as i64,
            lo: 0,
            hi: n as i64,
        });
    }
    Ok(())
}

fn chi_from_parts(ch: &GradedPoly, todd: &GradedPoly) -> ChernFunctional {
    (ch * todd).top_part(Convention::Tangent).flipped()
}

/// `χ(X, Ω^p)` as a functional in cotangent Chern numbers.
pub fn chi_p(n: usize, p: usize) -> Result<ChernFunctional> {
    check_p(p, n)?;
    Ok(chi_from_parts(&ch_exterior_cotangent(p, n)?, &todd_class(n)))
}

/// `(-1)^n c_n` in cotangent variables, i.e. `c_n(TX)`: the topological Euler
/// characteristic.
pub fn euler_functional(n: usize) -> ChernFunctional {
    let mut f = GradedPoly::chern(n, n).top_part(Convention::Cotangent);
    if n % 2 == 1 {
        f = f.neg();
    }
    f
}

/// All `χ^p` rows for one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTable {
    dim: usize,
    rows: Vec<ChernFunctional>,
}

impl ChiTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn convention(&self) -> Convention {
        self.rows[0].convention()
    }

    pub fn rows(&self) -> &[ChernFunctional] {
        &self.rows
    }

    pub fn row(&self, p: usize) -> Option<&ChernFunctional> {
        self.rows.get(p)
    }

    pub fn in_convention(&self, convention: Convention) -> ChiTable {
        ChiTable {
            dim: self.dim,
            rows: self.rows.iter().map(|r| r.in_convention(convention)).collect(),
        }
    }

    pub fn alternating_sum(&self) -> ChernFunctional {
        let mut acc = ChernFunctional::zero(self.dim, self.convention());
        for (p, row) in self.rows.iter().enumerate() {
            let term = if p % 2 == 0 { row.clone() } else { row.neg() };
            acc = acc.try_add(&term).expect("rows share dimension and convention");
        }
        acc
    }

    /// Serre duality row symmetry and the Euler identity, checked exactly.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for p in 0..=n {
            let dual = &self.rows[n - p];
            let expect = if n % 2 == 0 { dual.clone() } else { dual.neg() };
            if self.rows[p] != expect {
                return Err(Error::Consistency(format!(
                    "Serre duality fails between rows {p} and {} in dimension {n}",
                    n - p
                )));
            }
        }
        let euler = euler_functional(n).in_convention(self.convention());
        if self.alternating_sum() != euler {
            return Err(Error::Consistency(format!(
                "alternating sum of chi rows is not the Euler class in dimension {n}"
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> ChiTableJson {
        ChiTableJson {
            dim: self.dim,
            convention: self.convention(),
            rows: self.rows.iter().map(|r| r.to_poly().to_json()).collect(),
        }
    }

    pub fn from_json(j: &ChiTableJson) -> Result<Self> {
        let rows = j
            .rows
            .iter()
            .map(|r| ChernFunctional::from_poly(&GradedPoly::from_json(r)?, j.convention))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != j.dim + 1 || rows.iter().any(|r| r.dim() != j.dim) {
            return Err(Error::Parse("chi table rows do not match its dimension".into()));
        }
        let table = ChiTable { dim: j.dim, rows };
        table.validate()?;
        Ok(table)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiTableJson {
    pub dim: usize,
    pub convention: Convention,
    pub rows: Vec<crate::poly::PolyJson>,
}

pub fn chi_table(n: usize) -> Result<ChiTable> {
    chi_table_with(n, Execution::default())
}

/// Like [`chi_table`], choosing how rows are scheduled. The result is identical
/// either way.
pub fn chi_table_with(n: usize, exec: Execution) -> Result<ChiTable> {
    let todd = todd_class(n);
    let ch = ch_exterior_cotangent_all(n);
    let rows = par::map_slice(&ch, exec, |c| chi_from_parts(c, &todd));
    let table = ChiTable { dim: n, rows };
    table.validate()?;
    Ok(table)
}

/// Sign `(-1)^k` as a rational.
pub(crate) fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Smallest positive multiple of `f` with integer coefficients.
pub fn clear_denominators(f: &ChernFunctional) -> ChernFunctional {
    let l = rational::denominator_lcm(f.coeffs());
    f.scale(&Rational::from_integer(l))
}
