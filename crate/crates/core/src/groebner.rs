//! Exact Buchberger engine over the rationals.
//!
//! Works on [`ScalarPoly`] values in the module-wide degrevlex order and
//! provides the three things ideal membership needs: multivariate division
//! with cofactors, reduced Gröbner bases, and a brute-force bounded-degree
//! combination search that serves as an independent membership oracle in
//! tests.
//!
//! Everything is exact rational arithmetic; coefficient growth is managed
//! by content removal (clearing denominators and dividing by the integer
//! gcd) after every reduction, which rescales polynomials without changing
//! any ideal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

use crate::centralpoly::{Monomial, ScalarPoly};
use crate::linalg::QMatrix;
use crate::rational::Rational;

/// Rescales to a primitive integer-coefficient polynomial with positive
/// leading coefficient. The zero polynomial is returned unchanged.
fn primitive(p: &ScalarPoly) -> ScalarPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let mut num = BigInt::zero();
    for (_, c) in p.terms() {
        num = num.gcd(&(c.numer() * &den / c.denom()));
    }
    let mut factor = Rational::new(den, num);
    if p.leading_term().expect("nonzero").1.is_negative() {
        factor = -factor;
    }
    p.scale(&factor)
}

/// Divides `f` by the list of divisors, returning cofactors and remainder
/// with `f = Σ cofactor_i · divisors_i + remainder` exactly and no
/// remainder term divisible by any divisor's leading monomial. Divisors
/// are tried in list order, so the output is deterministic; zero divisors
/// are skipped.
pub fn divide(f: &ScalarPoly, divisors: &[ScalarPoly]) -> (Vec<ScalarPoly>, ScalarPoly) {
    let nv = f.nv();
    for d in divisors {
        assert_eq!(d.nv(), nv, "divisor lives in a different ring");
    }
    let mut quotients = vec![ScalarPoly::zero(nv); divisors.len()];
    let mut remainder = ScalarPoly::zero(nv);
    let mut p = f.clone();
    'strip: while let Some((lm, lc)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        for (idx, d) in divisors.iter().enumerate() {
            if let Some((dm, dc)) = d.leading_term() {
                if dm.divides(&lm) {
                    let t = dm.div_into(&lm);
                    let c = &lc / dc;
                    p = &p - &d.mul_term(&t, &c);
                    quotients[idx] = &quotients[idx]
                        + &ScalarPoly::term(nv, t.exps().to_vec(), c).expect("term in same ring");
                    continue 'strip;
                }
            }
        }
        remainder = &remainder + &ScalarPoly::term(nv, lm.exps().to_vec(), lc.clone()).unwrap();
        p = &p - &ScalarPoly::term(nv, lm.exps().to_vec(), lc).unwrap();
    }
    (quotients, remainder)
}

/// The S-polynomial of two nonzero polynomials: the leading terms are
/// scaled to their monomial lcm and cancelled.
fn s_poly(f: &ScalarPoly, g: &ScalarPoly) -> ScalarPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&l), &fc.recip());
    let b = g.mul_term(&gm.div_into(&l), &gc.recip());
    &a - &b
}

/// A reduced Gröbner basis: monic, interreduced, sorted by ascending
/// leading monomial — the unique such basis for its ideal and the global
/// degrevlex order, so equal ideals yield structurally equal values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nv: usize,
    elements: Vec<ScalarPoly>,
}

impl GroebnerBasis {
    pub fn nv(&self) -> usize {
        self.nv
    }

    /// Basis elements in ascending leading-monomial order; empty for the
    /// zero ideal.
    pub fn elements(&self) -> &[ScalarPoly] {
        &self.elements
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0] == ScalarPoly::one(self.nv)
    }

    /// The unique normal form of `f`: no term of the result is divisible
    /// by any basis leading monomial, and `f − reduce(f)` lies in the
    /// ideal. `reduce(f) = 0` iff `f` is a member.
    pub fn reduce(&self, f: &ScalarPoly) -> ScalarPoly {
        self.reduce_with_cofactors(f).1
    }

    /// Normal form plus explicit cofactors: `f = Σ c_i·basis_i + nf`.
    pub fn reduce_with_cofactors(&self, f: &ScalarPoly) -> (Vec<ScalarPoly>, ScalarPoly) {
        if self.elements.is_empty() {
            return (Vec::new(), f.clone());
        }
        assert_eq!(f.nv(), self.nv, "polynomial lives in a different ring");
        divide(f, &self.elements)
    }

    pub fn contains(&self, f: &ScalarPoly) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pair selection follows the normal strategy (smallest lcm total degree
/// first, ties by pair index) with the coprime-leading-term criterion;
/// afterwards the basis is minimized, tail-interreduced, made monic, and
/// sorted. The result is the unique reduced basis, so any permutation of
/// the same generators produces an identical value.
pub fn buchberger(gens: &[ScalarPoly]) -> GroebnerBasis {
    let nv = gens.first().map(ScalarPoly::nv).unwrap_or(0);
    let mut basis: Vec<ScalarPoly> = Vec::new();
    for g in gens {
        assert_eq!(g.nv(), nv, "generators live in different rings");
        if !g.is_zero() {
            basis.push(primitive(g));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let lm_i = basis[i].leading_term().unwrap().0;
                let lm_j = basis[j].leading_term().unwrap().0;
                (lm_i.lcm(lm_j).degree(), i, j)
            })
            .map(|(pos, _)| pos)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let lm_i = basis[i].leading_term().unwrap().0;
        let lm_j = basis[j].leading_term().unwrap().0;
        if lm_i.coprime(lm_j) {
            // Buchberger's first criterion: the S-polynomial of coprime
            // leading monomials always reduces to zero.
            continue;
        }
        let (_, r) = divide(&s_poly(&basis[i], &basis[j]), &basis);
        let r = primitive(&r);
        if !r.is_zero() {
            basis.push(r);
            let t = basis.len() - 1;
            for k in 0..t {
                pairs.push((k, t));
            }
        }
    }
    GroebnerBasis { nv, elements: interreduce(basis) }
}

/// Minimizes and tail-reduces a Gröbner basis, then normalizes to monic
/// elements sorted by ascending leading monomial.
fn interreduce(mut basis: Vec<ScalarPoly>) -> Vec<ScalarPoly> {
    basis.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
    // Minimize: drop any element whose leading monomial another element's
    // leading monomial divides (for a Gröbner basis this preserves the
    // ideal). Ascending order means only already-kept elements can divide.
    let mut kept: Vec<ScalarPoly> = Vec::new();
    for g in basis {
        let keep = {
            let lm = g.leading_term().unwrap().0;
            !kept.iter().any(|h| h.leading_term().unwrap().0.divides(lm))
        };
        if keep {
            kept.push(g);
        }
    }
    // Tail-reduce every element against the others until nothing changes.
    // Leading monomials are pairwise non-dividing, so reductions only
    // rewrite tails and the leading terms stay put.
    loop {
        let mut changed = false;
        for idx in 0..kept.len() {
            let others: Vec<ScalarPoly> = kept
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, p)| p.clone())
                .collect();
            let r = primitive(&divide(&kept[idx], &others).1);
            if r != kept[idx] {
                kept[idx] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut kept {
        let lc = g.leading_term().unwrap().1.clone();
        *g = g.scale(&lc.recip());
    }
    kept.sort_by(|a, b| a.leading_term().unwrap().0.cmp(b.leading_term().unwrap().0));
    kept
}

/// All monomials in `nv` variables of total degree ≤ `max_deg`, in a
/// fixed deterministic order.
fn monomials_up_to(nv: usize, max_deg: u32) -> Vec<Monomial> {
    fn rec(pos: usize, nv: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == nv {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, nv, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, nv, max_deg, &mut vec![0; nv], &mut out);
    out
}

/// Brute-force membership oracle: searches for cofactors `c_i` of degree
/// ≤ `max_deg` with `Σ c_i·gens_i = f` by solving one exact linear system
/// over the monomial basis. `Some(cofactors)` proves membership by
/// reconstruction; `None` only says no combination exists *within the
/// degree bound*.
pub fn search_combination(
    f: &ScalarPoly,
    gens: &[ScalarPoly],
    max_deg: u32,
) -> Option<Vec<ScalarPoly>> {
    let nv = f.nv();
    for g in gens {
        assert_eq!(g.nv(), nv, "generators live in different rings");
    }
    let cof_monos = monomials_up_to(nv, max_deg);
    let mut row_of: BTreeMap<Monomial, usize> = BTreeMap::new();
    for g in gens {
        for mu in &cof_monos {
            for (m, _) in g.terms() {
                let prod = mu.mul(m);
                let next = row_of.len();
                row_of.entry(prod).or_insert(next);
            }
        }
    }
    for (m, _) in f.terms() {
        let next = row_of.len();
        row_of.entry(m.clone()).or_insert(next);
    }
    let rows = row_of.len();
    if rows == 0 {
        // f and every generator are zero; the empty combination works.
        return Some(vec![ScalarPoly::zero(nv); gens.len()]);
    }
    let cols = gens.len() * cof_monos.len();
    let mut a = QMatrix::zeros(rows, cols);
    for (gi, g) in gens.iter().enumerate() {
        for (mi, mu) in cof_monos.iter().enumerate() {
            let col = gi * cof_monos.len() + mi;
            for (m, c) in g.terms() {
                *a.at_mut(row_of[&mu.mul(m)], col) = c.clone();
            }
        }
    }
    let mut b = vec![Rational::zero(); rows];
    for (m, c) in f.terms() {
        b[row_of[m]] = c.clone();
    }
    let x = a.solve(&b)?;
    let mut cofactors = Vec::with_capacity(gens.len());
    for gi in 0..gens.len() {
        let mut p = ScalarPoly::zero(nv);
        for (mi, mu) in cof_monos.iter().enumerate() {
            p.insert(mu.clone(), x[gi * cof_monos.len() + mi].clone());
        }
        cofactors.push(p);
    }
    Some(cofactors)
}
