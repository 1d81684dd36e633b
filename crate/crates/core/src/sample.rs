//! Seeded random generators for property tests and benchmarks.
//!
//! Every generator takes the RNG explicitly so test runs are reproducible
//! from a single seed. Bounds limit the numerators and denominators of the
//! rationals involved, keeping exact arithmetic fast.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{Algebra, AlgebraElement};
use crate::centralpoly::{CentralPoly, ScalarPoly};
use crate::freepoly::{FreePoly, Point};
use crate::rational::{rat, Rational};
use crate::transport::GpiGenerators;

/// A reproducible RNG for the given seed.
pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A rational with numerator in `[-bound, bound]` and denominator in `[1, bound]`.
pub fn rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn nonzero_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// An algebra element with random rational coordinates.
pub fn element(rng: &mut impl Rng, algebra: &Algebra, bound: i64) -> AlgebraElement {
    AlgebraElement::new((0..algebra.dim()).map(|_| rational(rng, bound)).collect())
}

pub fn nonzero_element(rng: &mut impl Rng, algebra: &Algebra, bound: i64) -> AlgebraElement {
    loop {
        let e = element(rng, algebra, bound);
        if !e.is_zero() {
            return e;
        }
    }
}

/// A random point of `Dⁿ`.
pub fn point(rng: &mut impl Rng, algebra: &Algebra, nvars: usize, bound: i64) -> Point {
    let coords = (0..nvars).map(|_| element(rng, algebra, bound)).collect();
    Point::new(algebra.clone(), coords).expect("sampled coordinates match the algebra")
}

/// A random free-product polynomial with at most `max_terms` words of
/// degree at most `max_deg`. May come out shorter (or zero) when sampled
/// words collide and cancel.
pub fn freepoly(
    rng: &mut impl Rng,
    algebra: &Algebra,
    nvars: usize,
    max_deg: usize,
    max_terms: usize,
    bound: i64,
) -> FreePoly {
    let m = algebra.dim();
    let mut acc = FreePoly::zero(algebra.clone(), nvars);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let deg = if nvars == 0 { 0 } else { rng.gen_range(0..=max_deg) };
        let slots: Vec<usize> = (0..=deg).map(|_| rng.gen_range(0..m)).collect();
        let vars: Vec<usize> = (0..deg).map(|_| rng.gen_range(0..nvars)).collect();
        let coef = nonzero_rational(rng, bound);
        let term = FreePoly::word_term(algebra.clone(), nvars, slots, vars, coef)
            .expect("sampled word is well-formed");
        acc = &acc + &term;
    }
    acc
}

/// A random central polynomial with algebra-element coefficients.
pub fn centralpoly(
    rng: &mut impl Rng,
    algebra: &Algebra,
    nvars: usize,
    max_deg: usize,
    max_terms: usize,
    bound: i64,
) -> CentralPoly {
    let nv = algebra.dim() * nvars;
    let mut acc = CentralPoly::zero(algebra.clone(), nvars);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let mut exps = vec![0u32; nv];
        if nv > 0 {
            for _ in 0..rng.gen_range(0..=max_deg) {
                exps[rng.gen_range(0..nv)] += 1;
            }
        }
        let coef = element(rng, algebra, bound);
        let term = CentralPoly::monomial_term(algebra.clone(), nvars, exps, coef)
            .expect("sampled exponents are well-formed");
        acc = &acc + &term;
    }
    acc
}

/// A random scalar polynomial in `nv` commuting variables.
pub fn scalarpoly(
    rng: &mut impl Rng,
    nv: usize,
    max_deg: usize,
    max_terms: usize,
    bound: i64,
) -> ScalarPoly {
    let mut acc = ScalarPoly::zero(nv);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let mut exps = vec![0u32; nv];
        if nv > 0 {
            for _ in 0..rng.gen_range(0..=max_deg) {
                exps[rng.gen_range(0..nv)] += 1;
            }
        }
        let coef = nonzero_rational(rng, bound);
        let term = ScalarPoly::term(nv, exps, coef).expect("sampled exponents are well-formed");
        acc = &acc + &term;
    }
    acc
}

/// A random element of the vanishing ideal, built as `Σ l_t·g_t·r_t` with
/// `summands` random generators `g_t` and short random cofactors whose
/// joint degree `deg(l_t) + deg(r_t)` is at most 2 (cofactor expansion
/// grows exponentially in degree, and degree 2 already exercises every
/// rewrite path).
pub fn kernel_element(rng: &mut impl Rng, gens: &GpiGenerators, summands: usize, bound: i64) -> FreePoly {
    let algebra = gens.algebra().clone();
    let nvars = gens.nvars();
    let mut acc = FreePoly::zero(algebra.clone(), nvars);
    for _ in 0..summands {
        let g = &gens.all()[rng.gen_range(0..gens.all().len())];
        let dl = rng.gen_range(0..=2usize);
        let dr = rng.gen_range(0..=2 - dl);
        let l = freepoly(rng, &algebra, nvars, dl, 2, bound);
        let r = freepoly(rng, &algebra, nvars, dr, 2, bound);
        acc = &acc + &(&(&l * g) * &r);
    }
    acc
}
