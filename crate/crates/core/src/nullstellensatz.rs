//! Ideal membership, zero loci, and radical certificates over the
//! quaternion ambient.
//!
//! A two-sided ideal of the quaternion function ring is handled through
//! its *scalar shadow*: each generator `g` maps to the four components of
//! `φ(g)`, and the ideal those components generate in ℚ`[y_ij]`
//! determines everything — because the quaternion units are invertible
//! and the scalar subring is central, the two-sided ideal generated by
//! `φ(g)` equals the extension of the component ideal, so `f` lies in the
//! ideal iff every component of `φ(f)` reduces to zero. A Gröbner basis
//! of the component ideal makes that test effective.
//!
//! Membership is decided over ℚ but is stable under extension of the
//! coefficient field, so the answers agree with the real-coefficient
//! ideal generated by the same polynomials. Zero-locus *searches* are not
//! attempted: [`Ideal::scan_zero_locus`] only filters caller-supplied
//! points, and radical membership is consumed as a [`RadicalCertificate`]
//! to be verified, never computed.

use crate::algebra::Algebra;
use crate::centralpoly::ScalarPoly;
use crate::error::{Error, Result};
use crate::freepoly::{FreePoly, Point};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::transport::to_central;

/// A two-sided ideal of the polynomial function ring, held as its
/// free-product generators plus the derived scalar generators and their
/// reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    algebra: Algebra,
    nvars: usize,
    generators: Vec<FreePoly>,
    scalar_generators: Vec<ScalarPoly>,
    gb: GroebnerBasis,
}

impl Ideal {
    /// Builds the handle: extracts all components of all `φ(generator)`
    /// and computes their reduced Gröbner basis. The ambient must be the
    /// quaternion algebra (the conjugation and norm machinery the radical
    /// verifier relies on is quaternion-specific), and every generator
    /// must live over it with the stated variable count.
    pub fn new(algebra: Algebra, nvars: usize, generators: Vec<FreePoly>) -> Result<Ideal> {
        if !algebra.is_quaternion() {
            return Err(Error::NotQuaternionAmbient);
        }
        for g in &generators {
            if g.ambient() != &algebra || g.nvars() != nvars {
                return Err(Error::AmbientMismatch);
            }
        }
        let mut scalar_generators = Vec::new();
        for g in &generators {
            scalar_generators.extend(to_central(g).components());
        }
        let gb = buchberger(&scalar_generators);
        Ok(Ideal { algebra, nvars, generators, scalar_generators, gb })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[FreePoly] {
        &self.generators
    }

    /// The components of all `φ(generator)`, in generator order.
    pub fn scalar_generators(&self) -> &[ScalarPoly] {
        &self.scalar_generators
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// True iff `f` lies in the two-sided ideal generated by the
    /// generators — equivalently, every component of `φ(f)` reduces to
    /// zero modulo the derived Gröbner basis.
    pub fn member(&self, f: &FreePoly) -> Result<bool> {
        if f.ambient() != &self.algebra || f.nvars() != self.nvars {
            return Err(Error::AmbientMismatch);
        }
        Ok(to_central(f).components().iter().all(|c| self.gb.contains(c)))
    }

    /// True iff every generator vanishes at `a`; since evaluation is a
    /// homomorphism this means every element of the ideal vanishes there.
    pub fn vanishes_at(&self, a: &Point) -> Result<bool> {
        if a.algebra() != &self.algebra || a.n() != self.nvars {
            return Err(Error::AmbientMismatch);
        }
        for g in &self.generators {
            if !g.eval(a)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Filters caller-supplied candidate points down to those in the zero
    /// locus. Makes no completeness claim — it is a sieve, not a solver.
    pub fn scan_zero_locus(&self, candidates: &[Point]) -> Result<Vec<Point>> {
        let mut hits = Vec::new();
        for a in candidates {
            if self.vanishes_at(a)? {
                hits.push(a.clone());
            }
        }
        Ok(hits)
    }
}

/// A claimed witness that `f` lies in the quaternionic radical of an
/// ideal: exponent `m ≥ 1` and witnesses `f_1…f_l` such that
/// `(f·f̄)^m + Σ f_t·f̄_t` is a member. Validity is what
/// [`verify_radical_certificate`] decides; the struct itself only carries
/// the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalCertificate {
    pub f: FreePoly,
    pub m: u32,
    pub witnesses: Vec<FreePoly>,
}

/// Checks a radical certificate: forms `norm(f)^m + Σ norm(f_t)` and
/// decides membership in the ideal. Acceptance is sound for vanishing:
/// at any zero `a` of the ideal the combination evaluates to
/// `(f(a)·f̄(a))^m + Σ f_t(a)·f̄_t(a) = 0`, a sum of nonnegative
/// rationals with the leading power forcing `f(a) = 0`.
pub fn verify_radical_certificate(cert: &RadicalCertificate, ideal: &Ideal) -> Result<bool> {
    if cert.m < 1 {
        return Err(Error::BadExponent { found: i64::from(cert.m) });
    }
    if cert.f.ambient() != ideal.algebra() || cert.f.nvars() != ideal.nvars() {
        return Err(Error::AmbientMismatch);
    }
    for w in &cert.witnesses {
        if w.ambient() != ideal.algebra() || w.nvars() != ideal.nvars() {
            return Err(Error::AmbientMismatch);
        }
    }
    let mut combo = cert.f.norm()?.pow(cert.m);
    for w in &cert.witnesses {
        combo = combo.checked_add(&w.norm()?)?;
    }
    ideal.member(&combo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::rational::rat_int;
    use crate::sample;

    fn q() -> Algebra {
        Algebra::quaternion()
    }

    fn qe(coords: [i64; 4]) -> AlgebraElement {
        AlgebraElement::new(coords.map(rat_int).to_vec())
    }

    fn x1() -> FreePoly {
        FreePoly::variable(q(), 1, 0).unwrap()
    }

    /// The running example: the ideal generated by `x₁ − i`.
    fn ideal_x_minus_i() -> Ideal {
        let g = &x1() - &FreePoly::constant(q(), 1, &qe([0, 1, 0, 0]));
        Ideal::new(q(), 1, vec![g]).unwrap()
    }

    fn pt(coords: [i64; 4]) -> Point {
        Point::new(q(), vec![qe(coords)]).unwrap()
    }

    #[test]
    fn derived_generators_fixture() {
        // φ(x₁ − i) = y1_1 + i·(y1_2 − 1) + j·y1_3 + k·y1_4, so the
        // component generators are y1_1, y1_2 − 1, y1_3, y1_4.
        let ideal = ideal_x_minus_i();
        let v = |idx: usize| ScalarPoly::variable(4, idx).unwrap();
        let expected =
            vec![v(0), &v(1) - &ScalarPoly::one(4), v(2), v(3)];
        assert_eq!(ideal.scalar_generators(), expected.as_slice());
        // Already a reduced basis; ascending leading monomials reverse the
        // variable order.
        let gb: Vec<ScalarPoly> =
            vec![v(3), v(2), &v(1) - &ScalarPoly::one(4), v(0)];
        assert_eq!(ideal.groebner().elements(), gb.as_slice());
    }

    #[test]
    fn trivial_ideals() {
        let zero = Ideal::new(q(), 1, vec![]).unwrap();
        assert!(zero.groebner().is_zero_ideal());
        // The zero ideal of the function ring contains exactly the
        // functions that vanish identically.
        assert!(zero.member(&FreePoly::zero(q(), 1)).unwrap());
        let y1 = crate::transport::coord_poly(&q(), 1, 0, 0).unwrap();
        let y2 = crate::transport::coord_poly(&q(), 1, 0, 1).unwrap();
        let comm = &(&y1 * &y2) - &(&y2 * &y1);
        assert!(zero.member(&comm).unwrap());
        assert!(!zero.member(&x1()).unwrap());
        assert!(zero.vanishes_at(&pt([7, -3, 0, 2])).unwrap());

        let unit = Ideal::new(q(), 1, vec![FreePoly::one(q(), 1)]).unwrap();
        assert!(unit.groebner().is_unit_ideal());
        assert!(unit.member(&x1()).unwrap());
        assert!(!unit.vanishes_at(&pt([0, 1, 0, 0])).unwrap());
    }

    #[test]
    fn membership_worked_example() {
        let ideal = ideal_x_minus_i();
        // Oracle for the positive case: the exact free-product identity
        // x₁² + 1 = x₁·(x₁ − i) + (x₁ − i)·i.
        let g = &ideal.generators()[0];
        let f = &x1().pow(2) + &FreePoly::one(q(), 1);
        let i = FreePoly::constant(q(), 1, &qe([0, 1, 0, 0]));
        assert_eq!(&(&x1() * g) + &(g * &i), f);
        assert!(ideal.member(&f).unwrap());
        // Oracle for the negative case: x₁ does not vanish at the point
        // i ∈ Z(ideal), so it cannot be a member.
        assert!(ideal.vanishes_at(&pt([0, 1, 0, 0])).unwrap());
        assert_eq!(x1().eval(&pt([0, 1, 0, 0])).unwrap(), qe([0, 1, 0, 0]));
        assert!(!ideal.member(&x1()).unwrap());
        // Generators are members.
        assert!(ideal.member(g).unwrap());
    }

    #[test]
    fn vanishing_fixtures() {
        let ideal = ideal_x_minus_i();
        assert!(ideal.vanishes_at(&pt([0, 1, 0, 0])).unwrap());
        assert!(!ideal.vanishes_at(&pt([0, 0, 1, 0])).unwrap());
        let picked = ideal
            .scan_zero_locus(&[pt([0, 1, 0, 0]), pt([0, 0, 1, 0]), pt([1, 0, 0, 0])])
            .unwrap();
        assert_eq!(picked, vec![pt([0, 1, 0, 0])]);
    }

    #[test]
    fn members_vanish_on_the_zero_locus() {
        // x₁² + 1 has a rich rational zero locus (pure quaternions of
        // norm 1); members of (x₁² + 1) must vanish on all of it.
        let gen = &x1().pow(2) + &FreePoly::one(q(), 1);
        let ideal = Ideal::new(q(), 1, vec![gen.clone()]).unwrap();
        let zeros = [
            pt([0, 1, 0, 0]),
            pt([0, 0, 1, 0]),
            pt([0, 0, 0, 1]),
            Point::new(
                q(),
                vec![AlgebraElement::new(vec![
                    rat_int(0),
                    crate::rational::rat(3, 5),
                    crate::rational::rat(4, 5),
                    rat_int(0),
                ])],
            )
            .unwrap(),
            Point::new(
                q(),
                vec![AlgebraElement::new(vec![
                    rat_int(0),
                    crate::rational::rat(1, 9),
                    crate::rational::rat(4, 9),
                    crate::rational::rat(8, 9),
                ])],
            )
            .unwrap(),
        ];
        for a in &zeros {
            assert!(ideal.vanishes_at(a).unwrap());
        }
        let mut rng = sample::rng(71);
        for _ in 0..40 {
            // Random two-sided combinations are members and vanish.
            let l = sample::freepoly(&mut rng, &q(), 1, 1, 2, 4);
            let r = sample::freepoly(&mut rng, &q(), 1, 1, 2, 4);
            let h = &(&l * &gen) * &r;
            assert!(ideal.member(&h).unwrap());
            for a in &zeros {
                assert!(h.eval(a).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn construction_is_deterministic_under_permutation() {
        let g1 = &x1() - &FreePoly::constant(q(), 1, &qe([0, 1, 0, 0]));
        let g2 = &x1().pow(2) + &FreePoly::one(q(), 1);
        let a = Ideal::new(q(), 1, vec![g1.clone(), g2.clone()]).unwrap();
        let b = Ideal::new(q(), 1, vec![g2, g1]).unwrap();
        assert_eq!(a.groebner(), b.groebner());
    }

    #[test]
    fn radical_certificate_fixtures() {
        // Against (norm(x₁ − i)): the combination with m = 1 is the
        // generator itself.
        let g = &x1() - &FreePoly::constant(q(), 1, &qe([0, 1, 0, 0]));
        let norm_ideal = Ideal::new(q(), 1, vec![g.norm().unwrap()]).unwrap();
        let cert = RadicalCertificate { f: g.clone(), m: 1, witnesses: vec![] };
        assert!(verify_radical_certificate(&cert, &norm_ideal).unwrap());
        // Against (x₁ − i) itself: f·f̄ is a right multiple of the
        // generator, hence a member.
        let ideal = ideal_x_minus_i();
        assert!(verify_radical_certificate(&cert, &ideal).unwrap());
        // x₁ − j does not vanish at i ∈ Z(ideal), so no certificate for
        // it can verify; this particular one fails membership.
        let bad = RadicalCertificate {
            f: &x1() - &FreePoly::constant(q(), 1, &qe([0, 0, 1, 0])),
            m: 1,
            witnesses: vec![],
        };
        assert!(!verify_radical_certificate(&bad, &ideal).unwrap());
        // Exponent 0 is rejected outright.
        let zero_m = RadicalCertificate { f: g.clone(), m: 0, witnesses: vec![] };
        assert!(matches!(
            verify_radical_certificate(&zero_m, &ideal),
            Err(Error::BadExponent { found: 0 })
        ));
        // Witnesses enter the combination: (f·f̄) + norm(g·w) stays a
        // member when w is arbitrary.
        let w = &FreePoly::constant(q(), 1, &qe([0, 0, 0, 2])) * &g;
        let cert = RadicalCertificate { f: g.clone(), m: 1, witnesses: vec![w] };
        assert!(verify_radical_certificate(&cert, &ideal).unwrap());
    }

    #[test]
    fn accepted_certificates_vanish_on_sampled_zeros() {
        // Soundness: acceptance forces f to vanish wherever the ideal
        // does, because the combination evaluates to
        // (f·f̄)^m(a) + Σ norm(f_t)(a) = 0 and every summand is a
        // nonnegative rational.
        let gen = &x1().pow(2) + &FreePoly::one(q(), 1);
        let ideal = Ideal::new(q(), 1, vec![gen.clone()]).unwrap();
        let f = &(&x1() * &gen) - &(&gen * &FreePoly::constant(q(), 1, &qe([0, 1, 0, 0])));
        let cert = RadicalCertificate { f: f.clone(), m: 1, witnesses: vec![] };
        if verify_radical_certificate(&cert, &ideal).unwrap() {
            for a in [pt([0, 1, 0, 0]), pt([0, 0, 1, 0]), pt([0, 0, 0, 1])] {
                assert!(ideal.vanishes_at(&a).unwrap());
                assert!(f.eval(&a).unwrap().is_zero());
            }
        } else {
            panic!("member-built certificate must verify");
        }
    }

    #[test]
    fn ambient_gates() {
        // Non-quaternion ambients are refused: same multiplication table,
        // different labels is a different algebra.
        let m = q().dim();
        let constants: Vec<Vec<Vec<crate::rational::Rational>>> = (0..m)
            .map(|s| {
                (0..m)
                    .map(|t| (0..m).map(|u| q().struct_const(s, t, u).clone()).collect())
                    .collect()
            })
            .collect();
        let other = Algebra::new(
            constants,
            vec!["1".into(), "a".into(), "b".into(), "c".into()],
        )
        .unwrap();
        assert!(matches!(
            Ideal::new(other.clone(), 1, vec![]),
            Err(Error::NotQuaternionAmbient)
        ));
        // Mixed variable counts are refused.
        let g2 = FreePoly::variable(q(), 2, 0).unwrap();
        assert!(matches!(Ideal::new(q(), 1, vec![g2]), Err(Error::AmbientMismatch)));
        // Mismatched queries are refused.
        let ideal = ideal_x_minus_i();
        let f2 = FreePoly::variable(q(), 2, 0).unwrap();
        assert!(matches!(ideal.member(&f2), Err(Error::AmbientMismatch)));
        let p2 = Point::new(q(), vec![qe([0, 1, 0, 0]), qe([0, 0, 1, 0])]).unwrap();
        assert!(matches!(ideal.vanishes_at(&p2), Err(Error::AmbientMismatch)));
    }
}
