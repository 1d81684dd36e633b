//! JSON artifact formats for algebras, polynomials, ideals, points, and
//! certificates.
//!
//! Rationals travel as strings (`"p/q"` or `"p"`) so files never lose
//! exactness, and basis/variable indices are 1-based to match the display
//! conventions (`v₁ = 1` is slot 1, `x1` is variable 1); generator
//! indices inside identity certificates are 0-based positions into the
//! canonical generator ordering. Loaders trust nothing: algebra files go
//! through full structural validation, ideal files recompute the derived
//! generators and the Gröbner basis and refuse stale caches with
//! [`Error::CacheMismatch`], and certificate files must be internally
//! consistent about variable counts.
//!
//! Encoders iterate canonical forms (ordered maps) and serialize structs
//! with fixed field order, so equal values always produce byte-identical
//! JSON.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraElement};
use crate::centralpoly::{CentralPoly, ScalarPoly};
use crate::error::{Error, Result};
use crate::freepoly::{FreePoly, Point};
use crate::nullstellensatz::{Ideal, RadicalCertificate};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::transport::{CertStep, GpiCertificate};

fn bad(reason: impl Into<String>) -> Error {
    Error::BadFile { reason: reason.into() }
}

fn rat_from(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| bad(format!("unreadable rational {s:?}")))
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

/// Converts 1-based file indices to internal 0-based ones.
fn shift_down(indices: &[usize]) -> Result<Vec<usize>> {
    indices
        .iter()
        .map(|&idx| idx.checked_sub(1).ok_or_else(|| bad("file indices are 1-based; found 0")))
        .collect()
}

// ---------------------------------------------------------------------
// Algebra files
// ---------------------------------------------------------------------

/// On-disk algebra description: dimension, basis labels, and the full
/// `m×m×m` structure-constant table as rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub m: usize,
    pub labels: Vec<String>,
    pub constants: Vec<Vec<Vec<String>>>,
}

pub fn algebra_to_json(algebra: &Algebra) -> String {
    let m = algebra.dim();
    let constants = (0..m)
        .map(|s| {
            (0..m)
                .map(|t| {
                    (0..m).map(|u| format_rational(algebra.struct_const(s, t, u))).collect()
                })
                .collect()
        })
        .collect();
    to_pretty(&AlgebraFile { m, labels: algebra.labels().to_vec(), constants })
}

/// Parses and *fully validates* an algebra file; every structural check
/// (unit, associativity, the invertibility criterion, …) runs as if the
/// table had been built in process.
pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = from_json(text)?;
    if file.m != file.constants.len() {
        return Err(bad(format!(
            "m = {} but the constants table has {} planes",
            file.m,
            file.constants.len()
        )));
    }
    let mut constants = Vec::with_capacity(file.constants.len());
    for plane in &file.constants {
        let mut rows = Vec::with_capacity(plane.len());
        for row in plane {
            rows.push(row.iter().map(|s| rat_from(s)).collect::<Result<Vec<_>>>()?);
        }
        constants.push(rows);
    }
    Algebra::new(constants, file.labels)
}

// ---------------------------------------------------------------------
// Polynomial payloads
// ---------------------------------------------------------------------

/// One interlaced word `coef · v_{s₀} x_{μ₁} v_{s₁} … x_{μ_k} v_{s_k}`
/// with 1-based slot and variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeTermDto {
    pub coef: String,
    pub slots: Vec<usize>,
    pub vars: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreePolyDto {
    pub nvars: usize,
    pub terms: Vec<FreeTermDto>,
}

pub fn freepoly_to_dto(p: &FreePoly) -> FreePolyDto {
    FreePolyDto {
        nvars: p.nvars(),
        terms: p
            .terms()
            .map(|(w, c)| FreeTermDto {
                coef: format_rational(c),
                slots: w.slots().iter().map(|s| s + 1).collect(),
                vars: w.vars().iter().map(|v| v + 1).collect(),
            })
            .collect(),
    }
}

pub fn freepoly_from_dto(algebra: &Algebra, dto: &FreePolyDto) -> Result<FreePoly> {
    let mut p = FreePoly::zero(algebra.clone(), dto.nvars);
    for term in &dto.terms {
        let coef = rat_from(&term.coef)?;
        let slots = shift_down(&term.slots)?;
        let vars = shift_down(&term.vars)?;
        let word = FreePoly::word_term(algebra.clone(), dto.nvars, slots, vars, coef)?;
        p = p.checked_add(&word)?;
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarTermDto {
    pub coef: String,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarPolyDto {
    pub nv: usize,
    pub terms: Vec<ScalarTermDto>,
}

pub fn scalarpoly_to_dto(p: &ScalarPoly) -> ScalarPolyDto {
    ScalarPolyDto {
        nv: p.nv(),
        terms: p
            .terms()
            .map(|(m, c)| ScalarTermDto { coef: format_rational(c), exps: m.exps().to_vec() })
            .collect(),
    }
}

pub fn scalarpoly_from_dto(dto: &ScalarPolyDto) -> Result<ScalarPoly> {
    let mut p = ScalarPoly::zero(dto.nv);
    for term in &dto.terms {
        let t = ScalarPoly::term(dto.nv, term.exps.clone(), rat_from(&term.coef)?)?;
        p = &p + &t;
    }
    Ok(p)
}

/// Central-ring term with one coefficient string per basis coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralTermDto {
    pub coef: Vec<String>,
    pub exps: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralPolyDto {
    pub nvars: usize,
    pub terms: Vec<CentralTermDto>,
}

pub fn centralpoly_to_dto(p: &CentralPoly) -> CentralPolyDto {
    CentralPolyDto {
        nvars: p.nvars(),
        terms: p
            .terms()
            .map(|(m, e)| CentralTermDto {
                coef: e.coords().iter().map(format_rational).collect(),
                exps: m.exps().to_vec(),
            })
            .collect(),
    }
}

pub fn centralpoly_from_dto(algebra: &Algebra, dto: &CentralPolyDto) -> Result<CentralPoly> {
    let mut p = CentralPoly::zero(algebra.clone(), dto.nvars);
    for term in &dto.terms {
        let coords = term.coef.iter().map(|s| rat_from(s)).collect::<Result<Vec<_>>>()?;
        let coef = AlgebraElement::new(coords);
        let t = CentralPoly::monomial_term(algebra.clone(), dto.nvars, term.exps.clone(), coef)?;
        p = p.checked_add(&t)?;
    }
    Ok(p)
}

// ---------------------------------------------------------------------
// Ideal files
// ---------------------------------------------------------------------

/// On-disk ideal handle. `scalar_generators` and `groebner` are caches of
/// derived data; the loader recomputes both from `generators` and rejects
/// the file if they disagree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<FreePolyDto>,
    pub scalar_generators: Vec<ScalarPolyDto>,
    pub groebner: Vec<ScalarPolyDto>,
}

pub fn ideal_to_json(ideal: &Ideal) -> String {
    to_pretty(&IdealFile {
        n: ideal.nvars(),
        generators: ideal.generators().iter().map(freepoly_to_dto).collect(),
        scalar_generators: ideal.scalar_generators().iter().map(scalarpoly_to_dto).collect(),
        groebner: ideal.groebner().elements().iter().map(scalarpoly_to_dto).collect(),
    })
}

pub fn ideal_from_json(algebra: &Algebra, text: &str) -> Result<Ideal> {
    let file: IdealFile = from_json(text)?;
    let mut gens = Vec::with_capacity(file.generators.len());
    for dto in &file.generators {
        if dto.nvars != file.n {
            return Err(bad(format!(
                "ideal declares n = {} but a generator has nvars = {}",
                file.n, dto.nvars
            )));
        }
        gens.push(freepoly_from_dto(algebra, dto)?);
    }
    let ideal = Ideal::new(algebra.clone(), file.n, gens)?;
    let cached_scalars = file
        .scalar_generators
        .iter()
        .map(scalarpoly_from_dto)
        .collect::<Result<Vec<_>>>()?;
    if cached_scalars != ideal.scalar_generators() {
        return Err(Error::CacheMismatch { what: "scalar_generators" });
    }
    let cached_gb =
        file.groebner.iter().map(scalarpoly_from_dto).collect::<Result<Vec<_>>>()?;
    if cached_gb != ideal.groebner().elements() {
        return Err(Error::CacheMismatch { what: "groebner" });
    }
    Ok(ideal)
}

// ---------------------------------------------------------------------
// Certificate files
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GpiStepDto {
    pub left: FreePolyDto,
    /// 0-based position in the canonical generator ordering for the
    /// ambient and variable count.
    pub gen: usize,
    pub right: FreePolyDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GpiCertFile {
    pub target: FreePolyDto,
    pub steps: Vec<GpiStepDto>,
}

pub fn gpi_cert_to_json(cert: &GpiCertificate) -> String {
    to_pretty(&GpiCertFile {
        target: freepoly_to_dto(&cert.target),
        steps: cert
            .steps
            .iter()
            .map(|s| GpiStepDto {
                left: freepoly_to_dto(&s.left),
                gen: s.gen,
                right: freepoly_to_dto(&s.right),
            })
            .collect(),
    })
}

pub fn gpi_cert_from_json(algebra: &Algebra, text: &str) -> Result<GpiCertificate> {
    let file: GpiCertFile = from_json(text)?;
    let n = file.target.nvars;
    let mut steps = Vec::with_capacity(file.steps.len());
    for step in &file.steps {
        if step.left.nvars != n || step.right.nvars != n {
            return Err(bad("certificate mixes variable counts"));
        }
        steps.push(CertStep {
            left: freepoly_from_dto(algebra, &step.left)?,
            gen: step.gen,
            right: freepoly_from_dto(algebra, &step.right)?,
        });
    }
    Ok(GpiCertificate { target: freepoly_from_dto(algebra, &file.target)?, steps })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadicalCertFile {
    pub f: FreePolyDto,
    pub m: u32,
    pub witnesses: Vec<FreePolyDto>,
}

pub fn radical_cert_to_json(cert: &RadicalCertificate) -> String {
    to_pretty(&RadicalCertFile {
        f: freepoly_to_dto(&cert.f),
        m: cert.m,
        witnesses: cert.witnesses.iter().map(freepoly_to_dto).collect(),
    })
}

pub fn radical_cert_from_json(algebra: &Algebra, text: &str) -> Result<RadicalCertificate> {
    let file: RadicalCertFile = from_json(text)?;
    let mut witnesses = Vec::with_capacity(file.witnesses.len());
    for dto in &file.witnesses {
        if dto.nvars != file.f.nvars {
            return Err(bad("certificate mixes variable counts"));
        }
        witnesses.push(freepoly_from_dto(algebra, dto)?);
    }
    Ok(RadicalCertificate { f: freepoly_from_dto(algebra, &file.f)?, m: file.m, witnesses })
}

// ---------------------------------------------------------------------
// Point lists
// ---------------------------------------------------------------------

/// Points files hold a JSON list of points; each point is a list of `n`
/// coordinate tuples, each tuple `m` rational strings.
pub fn points_to_json(points: &[Point]) -> String {
    let raw: Vec<Vec<Vec<String>>> = points
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|e| e.coords().iter().map(format_rational).collect())
                .collect()
        })
        .collect();
    to_pretty(&raw)
}

pub fn points_from_json(algebra: &Algebra, n: usize, text: &str) -> Result<Vec<Point>> {
    let raw: Vec<Vec<Vec<String>>> = from_json(text)?;
    let mut points = Vec::with_capacity(raw.len());
    for entry in &raw {
        if entry.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: entry.len() });
        }
        let mut coords = Vec::with_capacity(n);
        for tuple in entry {
            let cs = tuple.iter().map(|s| rat_from(s)).collect::<Result<Vec<_>>>()?;
            coords.push(AlgebraElement::new(cs));
        }
        points.push(Point::new(algebra.clone(), coords)?);
    }
    Ok(points)
}
