//! The free product `D ∗ ℚ⟨x₁…xₙ⟩`: noncommutative polynomials whose
//! coefficients interlace the variables.
//!
//! Elements are stored on the *interlaced word* basis
//! `v_{s₀}·x_{μ₁}·v_{s₁}·x_{μ₂}·…·x_{μ_k}·v_{s_k}` — every slot between
//! (and around) the variables carries a basis index of the coefficient
//! algebra, including the unit (index 0). These words are a genuine linear
//! basis of the free product, so two polynomials are equal in the ring iff
//! their term maps are identical: the representation *is* the canonical
//! form, and products only need the junction `v_{s_k}·v_{s'₀}` relinearized
//! through the structure constants.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// A basis word `v_{s₀} x_{μ₁} v_{s₁} … x_{μ_k} v_{s_k}` of the free
/// product: `slots` holds the k+1 basis indices (0 = unit), `vars` the k
/// variable indices (0-based; variable 0 displays as `x1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    slots: Vec<usize>,
    vars: Vec<usize>,
}

impl Word {
    fn new(slots: Vec<usize>, vars: Vec<usize>) -> Self {
        debug_assert_eq!(slots.len(), vars.len() + 1);
        Word { slots, vars }
    }

    /// The degree-0 word consisting of the single basis element `v_s`.
    fn constant(s: usize) -> Self {
        Word { slots: vec![s], vars: Vec::new() }
    }

    /// Number of variable letters in the word.
    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }
}

/// Graded lexicographic: by degree, then variable indices, then basis slots.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
            .then_with(|| self.slots.cmp(&other.slots))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical-form element of the free product `D ∗ ℚ⟨x₁…xₙ⟩`.
///
/// Zero coefficients are never stored; the zero polynomial is the empty
/// map. Binary operations require both operands to share the same ambient
/// algebra and variable count — the `checked_*` methods report
/// [`Error::AmbientMismatch`], while the operator impls panic on mixes
/// (internal code always stays inside one ambient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreePoly {
    ambient: Algebra,
    nvars: usize,
    terms: BTreeMap<Word, Rational>,
}

impl FreePoly {
    pub fn zero(ambient: Algebra, nvars: usize) -> Self {
        FreePoly { ambient, nvars, terms: BTreeMap::new() }
    }

    pub fn one(ambient: Algebra, nvars: usize) -> Self {
        Self::scalar(ambient, nvars, Rational::one())
    }

    /// The constant polynomial `c·1`.
    pub fn scalar(ambient: Algebra, nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(ambient, nvars);
        p.insert(Word::constant(0), c);
        p
    }

    /// The constant polynomial with value `e ∈ D`.
    pub fn constant(ambient: Algebra, nvars: usize, e: &AlgebraElement) -> Self {
        assert_eq!(e.dim(), ambient.dim(), "element dimension mismatch");
        let mut p = Self::zero(ambient, nvars);
        for (s, c) in e.coords().iter().enumerate() {
            p.insert(Word::constant(s), c.clone());
        }
        p
    }

    /// The variable `x_{idx}` (0-based).
    pub fn variable(ambient: Algebra, nvars: usize, idx: usize) -> Result<Self> {
        if idx >= nvars {
            return Err(Error::IndexOutOfRange { index: idx, limit: nvars });
        }
        let mut p = Self::zero(ambient, nvars);
        p.insert(Word::new(vec![0, 0], vec![idx]), Rational::one());
        Ok(p)
    }

    /// A single term `coef · v_{slots[0]} x_{vars[0]+1} v_{slots[1]} …`,
    /// with every index validated against the ambient.
    pub fn word_term(
        ambient: Algebra,
        nvars: usize,
        slots: Vec<usize>,
        vars: Vec<usize>,
        coef: Rational,
    ) -> Result<Self> {
        if slots.len() != vars.len() + 1 {
            return Err(Error::LengthMismatch { expected: vars.len() + 1, found: slots.len() });
        }
        let m = ambient.dim();
        for &s in &slots {
            if s >= m {
                return Err(Error::IndexOutOfRange { index: s, limit: m });
            }
        }
        for &v in &vars {
            if v >= nvars {
                return Err(Error::IndexOutOfRange { index: v, limit: nvars });
            }
        }
        let mut p = Self::zero(ambient, nvars);
        p.insert(Word::new(slots, vars), coef);
        Ok(p)
    }

    pub fn ambient(&self) -> &Algebra {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest word degree present (0 for constants and for the zero
    /// polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical (graded lexicographic) word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    fn insert(&mut self, word: Word, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    fn check_compat(&self, other: &FreePoly) -> Result<()> {
        if self.ambient != other.ambient || self.nvars != other.nvars {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), -c);
        }
        Ok(out)
    }

    /// Product in the free product algebra: words concatenate, and the
    /// junction `v_{s_k}·v_{s'₀}` is relinearized through the structure
    /// constants, so the output is canonical by construction.
    pub fn checked_mul(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compat(other)?;
        let m = self.ambient.dim();
        let mut out = FreePoly::zero(self.ambient.clone(), self.nvars);
        for (w1, c1) in &self.terms {
            let left_end = *w1.slots.last().expect("words have at least one slot");
            for (w2, c2) in &other.terms {
                let right_start = w2.slots[0];
                let c12 = c1 * c2;
                for u in 0..m {
                    let q = self.ambient.struct_const(left_end, right_start, u);
                    if q.is_zero() {
                        continue;
                    }
                    let mut slots = Vec::with_capacity(w1.slots.len() + w2.slots.len() - 1);
                    slots.extend_from_slice(&w1.slots[..w1.slots.len() - 1]);
                    slots.push(u);
                    slots.extend_from_slice(&w2.slots[1..]);
                    let mut vars = Vec::with_capacity(w1.vars.len() + w2.vars.len());
                    vars.extend_from_slice(&w1.vars);
                    vars.extend_from_slice(&w2.vars);
                    out.insert(Word::new(slots, vars), &c12 * q);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero(self.ambient.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect();
        FreePoly { ambient: self.ambient.clone(), nvars: self.nvars, terms }
    }

    /// Left multiplication by an algebra element.
    pub fn mul_elem_left(&self, e: &AlgebraElement) -> FreePoly {
        assert_eq!(e.dim(), self.ambient.dim(), "element dimension mismatch");
        let m = self.ambient.dim();
        let mut out = FreePoly::zero(self.ambient.clone(), self.nvars);
        for (w, c) in &self.terms {
            for (s, es) in e.coords().iter().enumerate() {
                if es.is_zero() {
                    continue;
                }
                for u in 0..m {
                    let q = self.ambient.struct_const(s, w.slots[0], u);
                    if q.is_zero() {
                        continue;
                    }
                    let mut slots = w.slots.clone();
                    slots[0] = u;
                    out.insert(Word::new(slots, w.vars.clone()), c * es * q);
                }
            }
        }
        out
    }

    /// Right multiplication by an algebra element.
    pub fn mul_elem_right(&self, e: &AlgebraElement) -> FreePoly {
        assert_eq!(e.dim(), self.ambient.dim(), "element dimension mismatch");
        let m = self.ambient.dim();
        let mut out = FreePoly::zero(self.ambient.clone(), self.nvars);
        for (w, c) in &self.terms {
            let end = w.slots.len() - 1;
            for (t, et) in e.coords().iter().enumerate() {
                if et.is_zero() {
                    continue;
                }
                for u in 0..m {
                    let q = self.ambient.struct_const(w.slots[end], t, u);
                    if q.is_zero() {
                        continue;
                    }
                    let mut slots = w.slots.clone();
                    slots[end] = u;
                    out.insert(Word::new(slots, w.vars.clone()), c * et * q);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> FreePoly {
        let mut acc = FreePoly::one(self.ambient.clone(), self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reinterprets the polynomial in a ring with `nvars` variables. Growing
    /// the count embeds; shrinking fails if a dropped variable occurs.
    pub fn with_nvars(&self, nvars: usize) -> Result<FreePoly> {
        for w in self.terms.keys() {
            for &v in &w.vars {
                if v >= nvars {
                    return Err(Error::IndexOutOfRange { index: v, limit: nvars });
                }
            }
        }
        let mut out = self.clone();
        out.nvars = nvars;
        Ok(out)
    }

    /// Evaluation at a point of `Dⁿ`: substitutes the coordinates for the
    /// variables and multiplies out. Evaluation is a ring homomorphism.
    pub fn eval(&self, at: &Point) -> Result<AlgebraElement> {
        if *at.algebra() != self.ambient || at.n() != self.nvars {
            return Err(Error::AmbientMismatch);
        }
        let mut acc = self.ambient.zero();
        for (w, c) in &self.terms {
            let mut value = self.ambient.basis_element(w.slots[0]);
            for (t, &v) in w.vars.iter().enumerate() {
                value = self.ambient.mul(&value, at.coord(v))?;
                value = self.ambient.mul(&value, &self.ambient.basis_element(w.slots[t + 1]))?;
            }
            acc = &acc + &value.scale(c);
        }
        Ok(acc)
    }

    /// Quaternionic conjugation of the polynomial function:
    /// `p̄ = −½(p + i·p·i + j·p·j + k·p·k)`, which satisfies
    /// `p̄(a) = conj(p(a))` at every point.
    pub fn conj(&self) -> Result<FreePoly> {
        if !self.ambient.is_quaternion() {
            return Err(Error::NotQuaternionAmbient);
        }
        let mut acc = self.clone();
        for s in 1..4 {
            let vs = self.ambient.basis_element(s);
            acc = &acc + &self.mul_elem_left(&vs).mul_elem_right(&vs);
        }
        Ok(acc.scale(&rat(-1, 2)))
    }

    /// The norm `p·p̄`; its transported image has scalar components only.
    pub fn norm(&self) -> Result<FreePoly> {
        Ok(self * &self.conj()?)
    }
}

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        self.checked_add(rhs).expect("ambient mismatch in +")
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        self.checked_sub(rhs).expect("ambient mismatch in -")
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        self.checked_mul(rhs).expect("ambient mismatch in *")
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        self.scale(&rat(-1, 1))
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
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
            let mut factors: Vec<String> = Vec::new();
            if w.degree() == 0 {
                if w.slots[0] != 0 {
                    factors.push(self.ambient.label(w.slots[0]).to_owned());
                }
            } else {
                if w.slots[0] != 0 {
                    factors.push(self.ambient.label(w.slots[0]).to_owned());
                }
                for (t, &v) in w.vars.iter().enumerate() {
                    factors.push(format!("x{}", v + 1));
                    if w.slots[t + 1] != 0 {
                        factors.push(self.ambient.label(w.slots[t + 1]).to_owned());
                    }
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A point of `Dⁿ`: one algebra element per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    algebra: Algebra,
    coords: Vec<AlgebraElement>,
}

impl Point {
    pub fn new(algebra: Algebra, coords: Vec<AlgebraElement>) -> Result<Point> {
        for c in &coords {
            if c.dim() != algebra.dim() {
                return Err(Error::DimensionMismatch { expected: algebra.dim(), found: c.dim() });
            }
        }
        Ok(Point { algebra, coords })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[AlgebraElement] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &AlgebraElement {
        &self.coords[i]
    }

    /// Flattens the point to its `m·n` rational coordinates, variable-major:
    /// the image of the coordinate bijection `Dⁿ → ℚ^{mn}`.
    pub fn flatten(&self) -> Vec<Rational> {
        self.coords.iter().flat_map(|e| e.coords().iter().cloned()).collect()
    }
}
