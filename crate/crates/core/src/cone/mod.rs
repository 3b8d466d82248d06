//! Positivity generators and exact cone-membership certificates.
//!
//! A sign statement `target >= 0` is certified by writing `target` as a
//! nonnegative rational combination of functionals already known to be
//! nonnegative: Schur polynomials of a nef bundle, plus any inequality the
//! caller opts into. When no such combination exists, the search returns a
//! Farkas witness separating the target from the generator cone.

mod simplex;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hrr::{self, clear_denominators};
use crate::par::{self, Execution};
use crate::poly::{top_basis, ChernFunctional, GradedPoly, PolyJson};
use crate::rational::{self, format_rational, frac, Rational};
use crate::symchern::{partitions_of, schur, Convention};
use simplex::{cone_membership, Membership};

/// Which inequalities may enter a generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Assumption {
    /// Schur polynomials of the nef bundle.
    Schur,
    /// `3 c_2 - c_1^2 >= 0` for surfaces (cotangent variables).
    My2,
    /// `(5/2) c_1^2 c_2 - c_1^4 >= 0` in dimension 4 (cotangent variables).
    My4,
    /// `c_1^n >= 0` for the nef bundle itself.
    C1Top,
}

impl Assumption {
    pub fn name(self) -> &'static str {
        match self {
            Assumption::Schur => "schur",
            Assumption::My2 => "my2",
            Assumption::My4 => "my4",
            Assumption::C1Top => "c1top",
        }
    }
}

impl FromStr for Assumption {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "schur" => Ok(Assumption::Schur),
            "my2" => Ok(Assumption::My2),
            "my4" => Ok(Assumption::My4),
            "c1top" => Ok(Assumption::C1Top),
            other => Err(Error::Parse(format!("unknown assumption {other:?}"))),
        }
    }
}

/// Which bundle the caller asserts is nef.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NefMode {
    NefCotangent,
    NefTangent,
}

impl NefMode {
    pub fn bundle(self) -> Convention {
        match self {
            NefMode::NefCotangent => Convention::Cotangent,
            NefMode::NefTangent => Convention::Tangent,
        }
    }

    /// Sign making `χ^p` conjecturally nonnegative: `(-1)^{n-p}` or `(-1)^p`.
    pub fn chi_sign(self, n: usize, p: usize) -> Rational {
        match self {
            NefMode::NefCotangent => hrr::sign(n - p),
            NefMode::NefTangent => hrr::sign(p),
        }
    }

    /// Sign making the Euler characteristic conjecturally nonnegative.
    pub fn euler_sign(self, n: usize) -> Rational {
        match self {
            NefMode::NefCotangent => hrr::sign(n),
            NefMode::NefTangent => hrr::sign(0),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NefMode::NefCotangent => "nef-cotangent",
            NefMode::NefTangent => "nef-tangent",
        }
    }
}

impl fmt::Display for NefMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NefMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nef-cotangent" | "nef_cotangent" => Ok(NefMode::NefCotangent),
            "nef-tangent" | "nef_tangent" => Ok(NefMode::NefTangent),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub functional: ChernFunctional,
}

/// Ordered, named generators sharing one dimension and convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    dim: usize,
    convention: Convention,
    generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn empty(dim: usize, convention: Convention) -> Self {
        GeneratorSet {
            dim,
            convention,
            generators: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn get(&self, name: &str) -> Option<&ChernFunctional> {
        self.index_of(name).map(|i| &self.generators[i].functional)
    }

    /// Appends an operator-supplied generator, converted into this set's
    /// convention. Names must be unique.
    pub fn push(&mut self, name: impl Into<String>, functional: ChernFunctional) -> Result<()> {
        let name = name.into();
        if functional.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: functional.dim(),
            });
        }
        if self.index_of(&name).is_some() {
            return Err(Error::Parse(format!("duplicate generator name {name:?}")));
        }
        self.generators.push(Generator {
            name,
            functional: functional.in_convention(self.convention),
        });
        Ok(())
    }

    /// The same cone written in `convention`; certificates stay valid once
    /// their target and residual are converted too.
    pub fn in_convention(&self, convention: Convention) -> GeneratorSet {
        GeneratorSet {
            dim: self.dim,
            convention,
            generators: self
                .generators
                .iter()
                .map(|g| Generator {
                    name: g.name.clone(),
                    functional: g.functional.in_convention(convention),
                })
                .collect(),
        }
    }

    fn check_target(&self, target: &ChernFunctional) -> Result<()> {
        if target.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: target.dim(),
            });
        }
        if target.convention() != self.convention {
            return Err(Error::ConventionMismatch {
                left: self.convention.to_string(),
                right: target.convention().to_string(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson {
            dim: self.dim,
            convention: self.convention,
            generators: self
                .generators
                .iter()
                .map(|g| NamedPolyJson {
                    name: g.name.clone(),
                    poly: g.functional.to_poly().to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &GeneratorSetJson) -> Result<Self> {
        let mut set = GeneratorSet::empty(j.dim, j.convention);
        for g in &j.generators {
            let f = ChernFunctional::from_poly(&GradedPoly::from_json(&g.poly)?, j.convention)?;
            set.push(g.name.clone(), f)?;
        }
        Ok(set)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPolyJson {
    pub name: String,
    pub poly: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSetJson {
    pub dim: usize,
    pub convention: Convention,
    pub generators: Vec<NamedPolyJson>,
}

/// Builds the generator catalog for a nef bundle of rank `n`.
///
/// `bundle` picks whose Chern classes the Schur polynomials are taken in and
/// is also the set's convention. `my2`/`my4` are stated in cotangent variables
/// and converted; `c1top` is `c_1(E)^n` for the nef bundle `E`. Order: Schur
/// generators in partition order, then `my2`, `my4`, `c1top`.
pub fn generators(n: usize, bundle: Convention, assumptions: &[Assumption]) -> Result<GeneratorSet> {
    let has = |a: Assumption| assumptions.contains(&a);
    if has(Assumption::My2) && n != 2 {
        return Err(Error::InvalidAssumption {
            tag: "my2".into(),
            dim: n,
        });
    }
    if has(Assumption::My4) && n != 4 {
        return Err(Error::InvalidAssumption {
            tag: "my4".into(),
            dim: n,
        });
    }
    if has(Assumption::C1Top) && n == 0 {
        return Err(Error::InvalidAssumption {
            tag: "c1top".into(),
            dim: n,
        });
    }
    let mut set = GeneratorSet::empty(n, bundle);
    if has(Assumption::Schur) {
        for a in partitions_of(n) {
            let f = schur(&a, n)?.top_part(bundle);
            set.push(a.label(), f)?;
        }
    }
    if has(Assumption::My2) {
        let f = ChernFunctional::parse("3*c2 - c1^2", 2, Convention::Cotangent)?;
        set.push("my2", f)?;
    }
    if has(Assumption::My4) {
        let f = ChernFunctional::parse("5/2*c1^2*c2 - c1^4", 4, Convention::Cotangent)?;
        set.push("my4", f)?;
    }
    if has(Assumption::C1Top) {
        let f = GradedPoly::chern(n, 1).pow(n as u32).top_part(bundle);
        set.push("c1top", f)?;
    }
    Ok(set)
}

/// `target = sum λ_i g_i + residual` with every `λ_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: ChernFunctional,
    pub coefficients: Vec<Rational>,
    pub residual: ChernFunctional,
}

/// A functional `w` (over the monomial basis) with `<w, g> <= 0` for every
/// generator and `<w, target> > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasibility {
    pub witness: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Certified(Certificate),
    Infeasible(Infeasibility),
}

impl Outcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, Outcome::Certified(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Certified(c) => Some(c),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn infeasibility(&self) -> Option<&Infeasibility> {
        match self {
            Outcome::Certified(_) => None,
            Outcome::Infeasible(i) => Some(i),
        }
    }
}

/// Exact equality-constrained cone membership of `target` in the cone spanned
/// by `gens`. Deterministic: fixed generator order and Bland's rule.
pub fn certify(target: &ChernFunctional, gens: &GeneratorSet) -> Result<Outcome> {
    gens.check_target(target)?;
    let columns: Vec<Vec<Rational>> = gens
        .generators
        .iter()
        .map(|g| g.functional.coeffs().to_vec())
        .collect();
    match cone_membership(&columns, target.coeffs()) {
        Membership::Inside(lambda) => {
            let cert = Certificate {
                target: target.clone(),
                coefficients: lambda,
                residual: ChernFunctional::zero(gens.dim, gens.convention),
            };
            check_certificate(&cert, gens)
                .map_err(|e| Error::Consistency(format!("simplex produced a bad certificate: {e}")))?;
            Ok(Outcome::Certified(cert))
        }
        Membership::Outside(witness) => {
            let inf = Infeasibility { witness };
            if !inf.verify(target, gens) {
                return Err(Error::Consistency(
                    "simplex produced an invalid Farkas witness".into(),
                ));
            }
            Ok(Outcome::Infeasible(inf))
        }
    }
}

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateFault {
    Misaligned { coefficients: usize, generators: usize },
    Incompatible(String),
    NegativeCoefficient { generator: String, value: Rational },
    Mismatch { difference: String },
    UndeclaredResidual { residual: String },
}

impl fmt::Display for CertificateFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateFault::Misaligned {
                coefficients,
                generators,
            } => write!(f, "{coefficients} coefficients for {generators} generators"),
            CertificateFault::Incompatible(e) => write!(f, "incompatible functionals: {e}"),
            CertificateFault::NegativeCoefficient { generator, value } => {
                write!(f, "negative weight {} on {generator}", format_rational(value))
            }
            CertificateFault::Mismatch { difference } => {
                write!(f, "combination misses the target by {difference}")
            }
            CertificateFault::UndeclaredResidual { residual } => {
                write!(f, "residual {residual} is not a nonnegative generator multiple")
            }
        }
    }
}

/// Re-expands the certificate exactly and reports the first problem found.
pub fn check_certificate(
    cert: &Certificate,
    gens: &GeneratorSet,
) -> std::result::Result<(), CertificateFault> {
    if cert.coefficients.len() != gens.len() {
        return Err(CertificateFault::Misaligned {
            coefficients: cert.coefficients.len(),
            generators: gens.len(),
        });
    }
    gens.check_target(&cert.target)
        .and_then(|_| gens.check_target(&cert.residual))
        .map_err(|e| CertificateFault::Incompatible(e.to_string()))?;
    for (g, l) in gens.generators.iter().zip(&cert.coefficients) {
        if l.is_negative() {
            return Err(CertificateFault::NegativeCoefficient {
                generator: g.name.clone(),
                value: l.clone(),
            });
        }
    }
    let mut sum = cert.residual.clone();
    for (g, l) in gens.generators.iter().zip(&cert.coefficients) {
        sum = sum
            .try_add(&g.functional.scale(l))
            .map_err(|e| CertificateFault::Incompatible(e.to_string()))?;
    }
    if sum != cert.target {
        let diff = cert.target.try_sub(&sum).expect("compatible");
        return Err(CertificateFault::Mismatch {
            difference: diff.to_string(),
        });
    }
    if !cert.residual.is_zero() && residual_multiple(&cert.residual, gens).is_none() {
        return Err(CertificateFault::UndeclaredResidual {
            residual: cert.residual.to_string(),
        });
    }
    Ok(())
}

pub fn verify_certificate(cert: &Certificate, gens: &GeneratorSet) -> bool {
    check_certificate(cert, gens).is_ok()
}

/// `(index, μ)` with `residual = μ g_index` and `μ >= 0`, if any.
fn residual_multiple(residual: &ChernFunctional, gens: &GeneratorSet) -> Option<(usize, Rational)> {
    gens.generators.iter().enumerate().find_map(|(i, g)| {
        let (pos, gc) = g
            .functional
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())?;
        let mu = &residual.coeffs()[pos] / gc;
        (!mu.is_negative() && g.functional.scale(&mu) == *residual).then_some((i, mu))
    })
}

impl Infeasibility {
    fn pair(&self, f: &ChernFunctional) -> Option<Rational> {
        f.dot(&self.witness).ok()
    }

    /// Checks the Farkas conditions exactly.
    pub fn verify(&self, target: &ChernFunctional, gens: &GeneratorSet) -> bool {
        if gens.check_target(target).is_err() {
            return false;
        }
        let gens_ok = gens
            .generators
            .iter()
            .all(|g| self.pair(&g.functional).is_some_and(|v| !v.is_positive()));
        gens_ok && self.pair(target).is_some_and(|v| v.is_positive())
    }
}

impl Certificate {
    pub fn in_convention(&self, convention: Convention) -> Certificate {
        Certificate {
            target: self.target.in_convention(convention),
            coefficients: self.coefficients.clone(),
            residual: self.residual.in_convention(convention),
        }
    }

    /// Nonzero terms only, by generator name.
    pub fn to_json(&self, gens: &GeneratorSet) -> CertificateJson {
        CertificateJson {
            target: self.target.to_poly().to_json(),
            terms: gens
                .generators
                .iter()
                .zip(&self.coefficients)
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| CertificateTermJson {
                    gen: g.name.clone(),
                    coef: c.clone(),
                })
                .collect(),
            residual: self.residual.to_poly().to_json(),
        }
    }

    pub fn from_json(j: &CertificateJson, gens: &GeneratorSet) -> Result<Self> {
        let conv = gens.convention;
        let mut coefficients = vec![Rational::zero(); gens.len()];
        for t in &j.terms {
            let i = gens
                .index_of(&t.gen)
                .ok_or_else(|| Error::Parse(format!("unknown generator {:?}", t.gen)))?;
            coefficients[i] = t.coef.clone();
        }
        Ok(Certificate {
            target: ChernFunctional::from_poly(&GradedPoly::from_json(&j.target)?, conv)?,
            coefficients,
            residual: ChernFunctional::from_poly(&GradedPoly::from_json(&j.residual)?, conv)?,
        })
    }

    /// `name: coefficient` pairs for nonzero weights.
    pub fn named_terms<'a>(&'a self, gens: &'a GeneratorSet) -> Vec<(&'a str, &'a Rational)> {
        gens.generators
            .iter()
            .zip(&self.coefficients)
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (g.name.as_str(), c))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateTermJson {
    pub gen: String,
    #[serde(with = "rational::as_string")]
    pub coef: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub target: PolyJson,
    pub terms: Vec<CertificateTermJson>,
    pub residual: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntryJson {
    pub monomial: String,
    #[serde(with = "rational::as_string")]
    pub value: Rational,
}

impl Infeasibility {
    /// Re-expresses the witness so pairings are unchanged after converting
    /// functionals of dimension `dim` from `from` to `to`.
    pub fn in_convention(&self, dim: usize, from: Convention, to: Convention) -> Infeasibility {
        if from == to || dim % 2 == 0 {
            return self.clone();
        }
        Infeasibility {
            witness: self.witness.iter().map(|w| -w).collect(),
        }
    }

    pub fn to_json(&self, dim: usize) -> Vec<WitnessEntryJson> {
        top_basis(dim)
            .iter()
            .zip(&self.witness)
            .map(|(m, v)| WitnessEntryJson {
                monomial: m.to_string(),
                value: v.clone(),
            })
            .collect()
    }

    pub fn from_json(entries: &[WitnessEntryJson], dim: usize) -> Result<Self> {
        let basis: Vec<String> = top_basis(dim).iter().map(|m| m.to_string()).collect();
        if entries.len() != basis.len() || entries.iter().zip(&basis).any(|(e, b)| &e.monomial != b) {
            return Err(Error::Parse("witness does not follow the monomial basis".into()));
        }
        Ok(Infeasibility {
            witness: entries.iter().map(|e| e.value.clone()).collect(),
        })
    }
}

/// Per-`p` result of a sign certification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignEntry {
    pub p: usize,
    /// Signed `χ^p` scaled by `scale` to integer coefficients.
    pub target: ChernFunctional,
    pub scale: Rational,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignReport {
    pub dim: usize,
    pub mode: NefMode,
    pub generators: GeneratorSet,
    pub entries: Vec<SignEntry>,
}

impl SignReport {
    pub fn all_certified(&self) -> bool {
        self.entries.iter().all(|e| e.outcome.is_certified())
    }

    pub fn entry(&self, p: usize) -> Option<&SignEntry> {
        self.entries.iter().find(|e| e.p == p)
    }
}

/// Signed, denominator-free `χ^p` target in the generator set's convention,
/// with the positive factor applied.
pub fn chi_target(n: usize, p: usize, mode: NefMode) -> Result<(ChernFunctional, Rational)> {
    let signed = hrr::chi_p(n, p)?
        .scale(&mode.chi_sign(n, p))
        .in_convention(mode.bundle());
    let cleared = clear_denominators(&signed);
    let scale = rational::denominator_lcm(signed.coeffs());
    Ok((cleared, Rational::from_integer(scale)))
}

/// Tries to certify the conjectured sign of every `χ^p` in dimension `n`.
pub fn certify_chi_signs(n: usize, mode: NefMode, assumptions: &[Assumption]) -> Result<SignReport> {
    let gens = generators(n, mode.bundle(), assumptions)?;
    certify_chi_signs_with(n, mode, &gens, crate::DEFAULT_MAX_DIM, Execution::default())
}

/// Same as [`certify_chi_signs`] against a prepared generator set, with rows
/// scheduled per `exec`.
pub fn certify_chi_signs_with(
    n: usize,
    mode: NefMode,
    gens: &GeneratorSet,
    max_dim: usize,
    exec: Execution,
) -> Result<SignReport> {
    if n > max_dim {
        return Err(Error::UnsupportedDimension { dim: n, max: max_dim });
    }
    if gens.dim() != n || gens.convention() != mode.bundle() {
        return Err(Error::ConventionMismatch {
            left: format!("{} dim {n}", mode.bundle()),
            right: format!("{} dim {}", gens.convention(), gens.dim()),
        });
    }
    let entries = par::map_range(0..n + 1, exec, |p| -> Result<SignEntry> {
        let (target, scale) = chi_target(n, p, mode)?;
        let outcome = certify(&target, gens)?;
        Ok(SignEntry {
            p,
            target,
            scale,
            outcome,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(SignReport {
        dim: n,
        mode,
        generators: gens.clone(),
        entries,
    })
}

/// The dimension-4 chain: `λ = 1, 2, 1, 1` on `P_(1,1,1,1)`, `P_(2,2,0,0)`,
/// `P_(3,1,0,0)`, `P_(4,0,0,0)`, then `14/5` on `my4` and `4/5` on `c1top`,
/// against `720 χ^4`.
pub fn dimension_four_chain(gens: &GeneratorSet) -> Result<Certificate> {
    let weights = [
        ("P_(1,1,1,1)", frac(1, 1)),
        ("P_(2,2,0,0)", frac(2, 1)),
        ("P_(3,1,0,0)", frac(1, 1)),
        ("P_(4,0,0,0)", frac(1, 1)),
        ("my4", frac(14, 5)),
        ("c1top", frac(4, 5)),
    ];
    let mut coefficients = vec![Rational::zero(); gens.len()];
    for (name, w) in weights {
        let i = gens
            .index_of(name)
            .ok_or_else(|| Error::Parse(format!("generator set lacks {name}")))?;
        coefficients[i] = w;
    }
    Ok(Certificate {
        target: ChernFunctional::parse(
            "-c1^4 + 4*c1^2*c2 + c1*c3 + 3*c2^2 - c4",
            4,
            Convention::Cotangent,
        )?
        .in_convention(gens.convention()),
        coefficients,
        residual: ChernFunctional::zero(4, gens.convention()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use Assumption::*;

    fn cot(s: &str, n: usize) -> ChernFunctional {
        ChernFunctional::parse(s, n, Convention::Cotangent).unwrap()
    }

    #[test]
    fn surface_schur_generators() {
        let g = generators(2, Convention::Cotangent, &[Schur]).unwrap();
        assert_eq!(g.names(), ["P_(2,0)", "P_(1,1)"]);
        assert_eq!(g.generators()[0].functional, cot("c2", 2));
        assert_eq!(g.generators()[1].functional, cot("c1^2 - c2", 2));
    }

    #[test]
    fn fourfold_catalog() {
        let g = generators(4, Convention::Cotangent, &[Schur]).unwrap();
        let polys: Vec<String> = g.generators().iter().map(|x| x.functional.to_string()).collect();
        assert_eq!(
            polys,
            [
                "1*c4",
                "1*c1*c3 - 1*c4",
                "-1*c1*c3 + 1*c2^2",
                "1*c1^2*c2 - 1*c1*c3 - 1*c2^2 + 1*c4",
                "1*c1^4 - 3*c1^2*c2 + 2*c1*c3 + 1*c2^2 - 1*c4",
            ]
        );
        let full = generators(4, Convention::Cotangent, &[Schur, My4, C1Top]).unwrap();
        assert_eq!(full.len(), 7);
        assert_eq!(&full.names()[5..], ["my4", "c1top"]);
    }

    #[test]
    fn assumption_dimension_pairing() {
        assert!(matches!(
            generators(3, Convention::Cotangent, &[Schur, My2]),
            Err(Error::InvalidAssumption { .. })
        ));
        assert!(generators(2, Convention::Cotangent, &[My4]).is_err());
        assert!(generators(2, Convention::Cotangent, &[My2]).is_ok());
    }

    #[test]
    fn surface_todd_is_schur_combination() {
        let g = generators(2, Convention::Cotangent, &[Schur]).unwrap();
        let out = certify(&cot("c1^2 + c2", 2), &g).unwrap();
        let cert = out.certificate().expect("feasible");
        assert!(verify_certificate(cert, &g));
        assert_eq!(cert.coefficients, vec![int(2), int(1)]);
    }

    #[test]
    fn bmy_needed_for_chi_one() {
        let schur_only = generators(2, Convention::Cotangent, &[Schur]).unwrap();
        let target = cot("5*c2 - c1^2", 2);
        assert!(!certify(&target, &schur_only).unwrap().is_certified());
        let g = generators(2, Convention::Cotangent, &[Schur, My2]).unwrap();
        let cert = certify(&target, &g).unwrap();
        assert!(verify_certificate(cert.certificate().unwrap(), &g));
    }

    #[test]
    fn dimension_four_chain_verifies_and_tampering_fails() {
        let g = generators(4, Convention::Cotangent, &[Schur, My4, C1Top]).unwrap();
        let cert = dimension_four_chain(&g).unwrap();
        assert_eq!(check_certificate(&cert, &g), Ok(()));

        let mut neg = cert.clone();
        neg.coefficients[0] = int(-1);
        assert!(matches!(
            check_certificate(&neg, &g),
            Err(CertificateFault::NegativeCoefficient { .. })
        ));
        for i in 0..g.len() {
            let mut bumped = cert.clone();
            bumped.coefficients[i] += int(1);
            assert!(!verify_certificate(&bumped, &g));
        }
    }

    #[test]
    fn residual_must_be_declared_generator_multiple() {
        let g = generators(2, Convention::Cotangent, &[Schur]).unwrap();
        let cert = Certificate {
            target: cot("c1^2 + c2", 2),
            coefficients: vec![int(0), int(1)],
            residual: cot("2*c2", 2),
        };
        assert!(verify_certificate(&cert, &g));
        let other = Certificate {
            target: cot("c1^2 + c2", 2),
            coefficients: vec![int(2), int(0)],
            residual: cot("c1^2 - c2", 2),
        };
        assert!(verify_certificate(&other, &g));
        let undeclared = Certificate {
            target: cot("c1^2 + c2", 2),
            coefficients: vec![int(0), int(0)],
            residual: cot("c1^2 + c2", 2),
        };
        assert!(matches!(
            check_certificate(&undeclared, &g),
            Err(CertificateFault::UndeclaredResidual { .. })
        ));
    }

    #[test]
    fn fourfold_schur_cone_is_not_enough() {
        let g = generators(4, Convention::Cotangent, &[Schur]).unwrap();
        let (target, scale) = chi_target(4, 4, NefMode::NefCotangent).unwrap();
        assert_eq!(scale, int(720));
        let out = certify(&target, &g).unwrap();
        let inf = out.infeasibility().expect("infeasible");
        assert!(inf.verify(&target, &g));
    }

    #[test]
    fn convention_mismatch_rejected() {
        let g = generators(2, Convention::Tangent, &[Schur]).unwrap();
        assert!(matches!(
            certify(&cot("c2", 2), &g),
            Err(Error::ConventionMismatch { .. })
        ));
    }

    #[test]
    fn sign_reports() {
        let r1 = certify_chi_signs(1, NefMode::NefCotangent, &[Schur]).unwrap();
        assert!(r1.all_certified());
        for e in &r1.entries {
            assert_eq!(e.target, cot("c1", 1));
        }
        let r3 = certify_chi_signs(3, NefMode::NefCotangent, &[Schur]).unwrap();
        let e3 = r3.entry(3).unwrap();
        let cert = e3.outcome.certificate().unwrap();
        let terms: Vec<(&str, String)> = cert
            .named_terms(&r3.generators)
            .into_iter()
            .map(|(n, c)| (n, format_rational(c)))
            .collect();
        assert_eq!(terms, [("P_(3,0,0)", "1".into()), ("P_(2,1,0)", "1".into())]);
        let r4 = certify_chi_signs(4, NefMode::NefCotangent, &[Schur, My4, C1Top]).unwrap();
        assert!(r4.entry(4).unwrap().outcome.is_certified());
        assert!(certify_chi_signs(7, NefMode::NefCotangent, &[Schur]).is_err());
    }

    #[test]
    fn conversions_preserve_validity() {
        let g = generators(3, Convention::Cotangent, &[Schur]).unwrap();
        let t = cot("c1*c2", 3);
        let cert = certify(&t, &g).unwrap().certificate().unwrap().clone();
        let gt = g.in_convention(Convention::Tangent);
        assert!(verify_certificate(&cert.in_convention(Convention::Tangent), &gt));
        let bad = cot("-c1*c2", 3);
        let inf = certify(&bad, &g).unwrap().infeasibility().unwrap().clone();
        let inf_t = inf.in_convention(3, Convention::Cotangent, Convention::Tangent);
        assert!(inf_t.verify(&bad.in_convention(Convention::Tangent), &gt));
    }

    #[test]
    fn certificate_json_round_trip() {
        let g = generators(4, Convention::Cotangent, &[Schur, My4, C1Top]).unwrap();
        let cert = dimension_four_chain(&g).unwrap();
        let s = serde_json::to_string(&cert.to_json(&g)).unwrap();
        let back: CertificateJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Certificate::from_json(&back, &g).unwrap(), cert);
        let gj = serde_json::to_string(&g.to_json()).unwrap();
        let gback: GeneratorSetJson = serde_json::from_str(&gj).unwrap();
        assert_eq!(GeneratorSet::from_json(&gback).unwrap(), g);
    }
}
