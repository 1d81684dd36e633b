//! The central polynomial ring `D_c[y_ij]` and its scalar subring.
//!
//! There is one variable `y_ij` per (free variable, basis coordinate) pair,
//! so `n` free variables over an `m`-dimensional algebra give `m·n`
//! commuting variables, indexed variable-major: `y_ij ↦ i·m + j` (0-based).
//! The variables are *central* — they commute with the algebra-element
//! coefficients — so a polynomial is canonically a map from monomials to
//! coefficients, with coefficients written on the left.
//!
//! [`ScalarPoly`] is the same ring shape with plain rational coefficients:
//! the subring ℚ`[y_ij]` when the variable count is `m·n`, but usable over
//! any number of variables (the Gröbner engine doesn't care where the
//! variables came from). Checked conversions connect the two.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A commutative monomial: exponents per variable, compared in
/// degree-reverse-lexicographic order with variable 0 (`y1_1`) largest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nv: usize) -> Self {
        Monomial { exps: vec![0; nv] }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn variable(nv: usize, idx: usize) -> Result<Self> {
        if idx >= nv {
            return Err(Error::IndexOutOfRange { index: idx, limit: nv });
        }
        let mut exps = vec![0; nv];
        exps[idx] = 1;
        Ok(Monomial { exps })
    }

    pub fn nv(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders with the variable-major naming `y<i>_<j>` for an
    /// `m`-dimensional coefficient algebra (`nv` must be a multiple of `m`).
    fn format_vars(&self, m: usize) -> Vec<String> {
        let mut out = Vec::new();
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = format!("y{}_{}", idx / m + 1, idx % m + 1);
            if e == 1 {
                out.push(name);
            } else {
                out.push(format!("{name}^{e}"));
            }
        }
        out
    }
}

/// Degree-reverse-lexicographic: higher total degree wins; on equal degree
/// the monomial whose *last* differing exponent is smaller is the larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let da = self.degree();
        let db = other.degree();
        if da != db {
            return da.cmp(&db);
        }
        for pos in (0..self.exps.len()).rev() {
            let (a, b) = (self.exps[pos], other.exps[pos]);
            if a != b {
                return if a < b { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn rat_pow(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Element of `D_c[y_ij]`: monomials in the `m·n` central variables with
/// algebra-element coefficients (written on the left). Zero coefficients
/// are never stored, so map equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralPoly {
    ambient: Algebra,
    nvars: usize,
    terms: BTreeMap<Monomial, AlgebraElement>,
}

impl CentralPoly {
    pub fn zero(ambient: Algebra, nvars: usize) -> Self {
        CentralPoly { ambient, nvars, terms: BTreeMap::new() }
    }

    pub fn one(ambient: Algebra, nvars: usize) -> Self {
        let e = ambient.one();
        Self::constant(ambient, nvars, &e)
    }

    pub fn constant(ambient: Algebra, nvars: usize, e: &AlgebraElement) -> Self {
        assert_eq!(e.dim(), ambient.dim(), "element dimension mismatch");
        let mut p = Self::zero(ambient, nvars);
        let nv = p.nv();
        p.insert(Monomial::one(nv), e.clone());
        p
    }

    /// The variable `y_ij` (0-based variable `i`, coordinate `j`).
    pub fn variable(ambient: Algebra, nvars: usize, i: usize, j: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::IndexOutOfRange { index: i, limit: nvars });
        }
        if j >= ambient.dim() {
            return Err(Error::IndexOutOfRange { index: j, limit: ambient.dim() });
        }
        let mut p = Self::zero(ambient.clone(), nvars);
        let mono = Monomial::variable(p.nv(), i * ambient.dim() + j)?;
        p.insert(mono, ambient.one());
        Ok(p)
    }

    /// A single term `coef · y^exps`, with the exponent vector validated
    /// against the `m·n` variable layout.
    pub fn monomial_term(
        ambient: Algebra,
        nvars: usize,
        exps: Vec<u32>,
        coef: AlgebraElement,
    ) -> Result<Self> {
        let nv = ambient.dim() * nvars;
        if exps.len() != nv {
            return Err(Error::LengthMismatch { expected: nv, found: exps.len() });
        }
        if coef.dim() != ambient.dim() {
            return Err(Error::DimensionMismatch { expected: ambient.dim(), found: coef.dim() });
        }
        let mut p = Self::zero(ambient, nvars);
        p.insert(Monomial::new(exps), coef);
        Ok(p)
    }

    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Total number of central variables `m·n`.
    pub fn nv(&self) -> usize {
        self.ambient.dim() * self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &AlgebraElement)> {
        self.terms.iter()
    }

    fn insert(&mut self, mono: Monomial, coef: AlgebraElement) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_compat(&self, other: &CentralPoly) -> Result<()> {
        if self.ambient != other.ambient || self.nvars != other.nvars {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CentralPoly) -> Result<CentralPoly> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (mono, coef) in &other.terms {
            out.insert(mono.clone(), coef.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &CentralPoly) -> Result<CentralPoly> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (mono, coef) in &other.terms {
            out.insert(mono.clone(), -coef);
        }
        Ok(out)
    }

    /// Convolution product: coefficients multiply in `D`, exponents add.
    pub fn checked_mul(&self, other: &CentralPoly) -> Result<CentralPoly> {
        self.check_compat(other)?;
        let mut out = CentralPoly::zero(self.ambient.clone(), self.nvars);
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                let coef = self.ambient.mul(a, b)?;
                out.insert(m1.mul(m2), coef);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> CentralPoly {
        if c.is_zero() {
            return CentralPoly::zero(self.ambient.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(m, e)| (m.clone(), e.scale(c))).collect();
        CentralPoly { ambient: self.ambient.clone(), nvars: self.nvars, terms }
    }

    /// Multiplies every coefficient by `e` on the left.
    pub fn mul_elem_left(&self, e: &AlgebraElement) -> CentralPoly {
        let mut out = CentralPoly::zero(self.ambient.clone(), self.nvars);
        for (mono, coef) in &self.terms {
            out.insert(mono.clone(), self.ambient.mul(e, coef).expect("same ambient"));
        }
        out
    }

    /// Multiplies every coefficient by `e` on the right.
    pub fn mul_elem_right(&self, e: &AlgebraElement) -> CentralPoly {
        let mut out = CentralPoly::zero(self.ambient.clone(), self.nvars);
        for (mono, coef) in &self.terms {
            out.insert(mono.clone(), self.ambient.mul(coef, e).expect("same ambient"));
        }
        out
    }

    pub fn pow(&self, e: u32) -> CentralPoly {
        let mut acc = CentralPoly::one(self.ambient.clone(), self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation at a central point (one rational per variable `y_ij`);
    /// a ring homomorphism into `D`.
    pub fn eval(&self, point: &[Rational]) -> Result<AlgebraElement> {
        if point.len() != self.nv() {
            return Err(Error::LengthMismatch { expected: self.nv(), found: point.len() });
        }
        let mut acc = self.ambient.zero();
        for (mono, coef) in &self.terms {
            let mut value = Rational::one();
            for (idx, &e) in mono.exps().iter().enumerate() {
                if e > 0 {
                    value *= rat_pow(&point[idx], e);
                }
            }
            acc = &acc + &coef.scale(&value);
        }
        Ok(acc)
    }

    /// Splits into `m` scalar polynomials with `p = Σ_t v_t·g_t`.
    pub fn components(&self) -> Vec<ScalarPoly> {
        let m = self.ambient.dim();
        let mut comps = vec![ScalarPoly::zero(self.nv()); m];
        for (mono, coef) in &self.terms {
            for (t, c) in coef.coords().iter().enumerate() {
                if !c.is_zero() {
                    comps[t].insert(mono.clone(), c.clone());
                }
            }
        }
        comps
    }

    /// Rebuilds `Σ_t v_t·g_t` from `m` scalar components.
    pub fn from_components(
        ambient: Algebra,
        nvars: usize,
        comps: &[ScalarPoly],
    ) -> Result<CentralPoly> {
        let m = ambient.dim();
        if comps.len() != m {
            return Err(Error::LengthMismatch { expected: m, found: comps.len() });
        }
        let nv = m * nvars;
        let mut out = CentralPoly::zero(ambient.clone(), nvars);
        for (t, g) in comps.iter().enumerate() {
            if g.nv() != nv {
                return Err(Error::LengthMismatch { expected: nv, found: g.nv() });
            }
            for (mono, c) in g.terms() {
                out.insert(mono.clone(), ambient.basis_element(t).scale(c));
            }
        }
        Ok(out)
    }
}

impl Add for &CentralPoly {
    type Output = CentralPoly;
    fn add(self, rhs: &CentralPoly) -> CentralPoly {
        self.checked_add(rhs).expect("ambient mismatch in +")
    }
}

impl Sub for &CentralPoly {
    type Output = CentralPoly;
    fn sub(self, rhs: &CentralPoly) -> CentralPoly {
        self.checked_sub(rhs).expect("ambient mismatch in -")
    }
}

impl Mul for &CentralPoly {
    type Output = CentralPoly;
    fn mul(self, rhs: &CentralPoly) -> CentralPoly {
        self.checked_mul(rhs).expect("ambient mismatch in *")
    }
}

impl Neg for &CentralPoly {
    type Output = CentralPoly;
    fn neg(self) -> CentralPoly {
        let terms = self.terms.iter().map(|(m, e)| (m.clone(), -e)).collect();
        CentralPoly { ambient: self.ambient.clone(), nvars: self.nvars, terms }
    }
}

impl fmt::Display for CentralPoly {
    /// Terms in descending monomial order. Coefficients with a single
    /// nonzero coordinate fold into the term (`2*i*y1_2`); mixed
    /// coefficients are parenthesized (`(1 + i)*y1_1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let m = self.ambient.dim();
        let mut first = true;
        for (mono, coef) in self.terms.iter().rev() {
            let nonzero: Vec<usize> = (0..m).filter(|&s| !coef.coord(s).is_zero()).collect();
            let factors = mono.format_vars(m);
            if nonzero.len() == 1 {
                let s = nonzero[0];
                let c = coef.coord(s);
                let neg = c < &Rational::zero();
                let mag = if neg { -c } else { c.clone() };
                if first {
                    if neg {
                        f.write_str("-")?;
                    }
                    first = false;
                } else {
                    f.write_str(if neg { " - " } else { " + " })?;
                }
                let mut parts: Vec<String> = Vec::new();
                if !mag.is_one() || (s == 0 && factors.is_empty()) {
                    parts.push(mag.to_string());
                }
                if s != 0 {
                    parts.push(self.ambient.label(s).to_owned());
                }
                parts.extend(factors);
                f.write_str(&parts.join("*"))?;
            } else {
                if first {
                    first = false;
                } else {
                    f.write_str(" + ")?;
                }
                write!(f, "({})", self.ambient.format_element(coef))?;
                if !factors.is_empty() {
                    write!(f, "*{}", factors.join("*"))?;
                }
            }
        }
        Ok(())
    }
}

/// Polynomial in `nv` commuting variables with rational coefficients — the
/// scalar subring of [`CentralPoly`] when `nv = m·n`, and the coefficient
/// ring the Gröbner engine works over for any `nv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarPoly {
    nv: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl ScalarPoly {
    pub fn zero(nv: usize) -> Self {
        ScalarPoly { nv, terms: BTreeMap::new() }
    }

    pub fn one(nv: usize) -> Self {
        Self::constant(nv, Rational::one())
    }

    pub fn constant(nv: usize, c: Rational) -> Self {
        let mut p = Self::zero(nv);
        p.insert(Monomial::one(nv), c);
        p
    }

    pub fn variable(nv: usize, idx: usize) -> Result<Self> {
        let mono = Monomial::variable(nv, idx)?;
        let mut p = Self::zero(nv);
        p.insert(mono, Rational::one());
        Ok(p)
    }

    /// A single term `coef · y^exps`.
    pub fn term(nv: usize, exps: Vec<u32>, coef: Rational) -> Result<Self> {
        if exps.len() != nv {
            return Err(Error::LengthMismatch { expected: nv, found: exps.len() });
        }
        let mut p = Self::zero(nv);
        p.insert(Monomial::new(exps), coef);
        Ok(p)
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The degrevlex-largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn insert(&mut self, mono: Monomial, coef: Rational) {
        debug_assert_eq!(mono.nv(), self.nv);
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> ScalarPoly {
        if c.is_zero() {
            return ScalarPoly::zero(self.nv);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        ScalarPoly { nv: self.nv, terms }
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, mono: &Monomial, coef: &Rational) -> ScalarPoly {
        if coef.is_zero() {
            return ScalarPoly::zero(self.nv);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.mul(mono), k * coef))
            .collect();
        ScalarPoly { nv: self.nv, terms }
    }

    pub fn pow(&self, e: u32) -> ScalarPoly {
        let mut acc = ScalarPoly::one(self.nv);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Embeds into `D_c[y_ij]` as a polynomial with scalar coefficients.
    pub fn into_central(&self, ambient: Algebra, nvars: usize) -> Result<CentralPoly> {
        let nv = ambient.dim() * nvars;
        if self.nv != nv {
            return Err(Error::LengthMismatch { expected: nv, found: self.nv });
        }
        let mut out = CentralPoly::zero(ambient.clone(), nvars);
        for (mono, c) in &self.terms {
            out.insert(mono.clone(), AlgebraElement::scalar(ambient.dim(), c.clone()));
        }
        Ok(out)
    }

    /// Renders with `y<i>_<j>` naming for an `m`-dimensional coefficient
    /// algebra; `nv` must be a multiple of `m`.
    pub fn format_shaped(&self, m: usize) -> String {
        assert!(m > 0 && self.nv % m == 0, "variable count does not fit dimension {m}");
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (mono, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            let factors = mono.format_vars(m);
            if !mag.is_one() || factors.is_empty() {
                parts.push(mag.to_string());
            }
            parts.extend(factors);
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl Add for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        assert_eq!(self.nv, rhs.nv, "variable count mismatch in +");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        assert_eq!(self.nv, rhs.nv, "variable count mismatch in -");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), -c);
        }
        out
    }
}

impl Mul for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        assert_eq!(self.nv, rhs.nv, "variable count mismatch in *");
        let mut out = ScalarPoly::zero(self.nv);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        ScalarPoly { nv: self.nv, terms }
    }
}
