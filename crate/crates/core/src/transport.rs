//! Transport between the free product and the central polynomial ring.
//!
//! The two directions of the ring isomorphism are `to_central` (φ), which
//! substitutes `x_i ↦ Σ_j v_j·y_ij` and multiplies out in `D_c[y_ij]`, and
//! `from_central` (ψ), which substitutes the coordinate functionals
//! `Y_ij` back for the central variables. A free-product element `p` is a
//! *generalized polynomial identity* — vanishes at every point of `Dⁿ` —
//! exactly when `φ(p) = 0`, and [`is_identity`] tests precisely that.
//!
//! [`GpiGenerators`] materializes a finite generating set for the kernel
//! of φ, and [`gpi_certificate`] makes the generation effective: it writes
//! any kernel element as an explicit sum `Σ left·generator·right` that
//! [`verify_certificate`] checks by plain free-product arithmetic.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, AlgebraElement};
use crate::centralpoly::CentralPoly;
use crate::error::{Error, Result};
use crate::freepoly::FreePoly;

/// The coordinate functional `Y_ij = Σ_{s,t} b^j_{st}·v_s·x_i·v_t`: the
/// free-product element whose value at any point is the `j`-th basis
/// coordinate of the point's `i`-th entry (as a scalar multiple of 1).
pub fn coord_poly(algebra: &Algebra, nvars: usize, i: usize, j: usize) -> Result<FreePoly> {
    if i >= nvars {
        return Err(Error::IndexOutOfRange { index: i, limit: nvars });
    }
    let m = algebra.dim();
    if j >= m {
        return Err(Error::IndexOutOfRange { index: j, limit: m });
    }
    let table = algebra.coordinate_functionals();
    let mut p = FreePoly::zero(algebra.clone(), nvars);
    for s in 0..m {
        for t in 0..m {
            let b = table.entry(j, s, t);
            if !num_traits::Zero::is_zero(b) {
                let term =
                    FreePoly::word_term(algebra.clone(), nvars, vec![s, t], vec![i], b.clone())?;
                p = p.checked_add(&term)?;
            }
        }
    }
    Ok(p)
}

/// All `m·n` coordinate functionals in flat order (`Y_ij` at `i·m + j`).
fn all_coord_polys(algebra: &Algebra, nvars: usize) -> Vec<FreePoly> {
    let m = algebra.dim();
    let mut ys = Vec::with_capacity(m * nvars);
    for i in 0..nvars {
        for j in 0..m {
            ys.push(coord_poly(algebra, nvars, i, j).expect("indices in range"));
        }
    }
    ys
}

/// The homomorphism φ into the central ring, determined by
/// `x_i ↦ Σ_j v_j·y_ij` and the identity on coefficients. Its kernel is
/// exactly the set of generalized polynomial identities, and on functions
/// it is inverted by [`from_central`].
pub fn to_central(p: &FreePoly) -> CentralPoly {
    let algebra = p.ambient().clone();
    let m = algebra.dim();
    let n = p.nvars();
    let mut xsub: Vec<CentralPoly> = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = CentralPoly::zero(algebra.clone(), n);
        for j in 0..m {
            let y = CentralPoly::variable(algebra.clone(), n, i, j).expect("indices in range");
            s = &s + &y.mul_elem_left(&algebra.basis_element(j));
        }
        xsub.push(s);
    }
    let mut acc = CentralPoly::zero(algebra.clone(), n);
    for (word, coef) in p.terms() {
        let first = algebra.basis_element(word.slots()[0]).scale(coef);
        let mut term = CentralPoly::constant(algebra.clone(), n, &first);
        for (pos, &var) in word.vars().iter().enumerate() {
            term = &term * &xsub[var];
            term = term.mul_elem_right(&algebra.basis_element(word.slots()[pos + 1]));
        }
        acc = &acc + &term;
    }
    acc
}

/// The section ψ of φ: substitutes `Y_ij` for `y_ij` (factors of a
/// monomial multiplied in ascending variable order) and embeds
/// coefficients as constants. `to_central(from_central(q)) = q` exactly;
/// in the other direction `p − from_central(to_central(p))` is always an
/// identity.
pub fn from_central(q: &CentralPoly) -> FreePoly {
    let algebra = q.ambient().clone();
    let n = q.nvars();
    let ys = all_coord_polys(&algebra, n);
    let mut acc = FreePoly::zero(algebra.clone(), n);
    for (mono, coef) in q.terms() {
        let mut term = FreePoly::constant(algebra.clone(), n, coef);
        for (idx, &e) in mono.exps().iter().enumerate() {
            for _ in 0..e {
                term = term.checked_mul(&ys[idx]).expect("same ambient");
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// True iff `p` vanishes at every point of `Dⁿ`, i.e. `φ(p) = 0`.
pub fn is_identity(p: &FreePoly) -> bool {
    to_central(p).is_zero()
}

/// The finite generating set for the kernel of φ, stored in a fixed
/// deterministic order so certificates can reference generators by index:
///
/// 1. commutators with the basis, `v_k·Y_ij − Y_ij·v_k` (`i` major, then
///    `j`, then `k` over non-unit indices) — these are identically zero in
///    the free product already, because the coordinate functionals commute
///    with every constant *syntactically*;
/// 2. commutators `Y_a·Y_b − Y_b·Y_a` for flat indices `a < b` in
///    lexicographic pair order — the only family with nonzero members;
/// 3. reconstruction elements `x_i − Σ_j Y_ij·v_j` — also syntactically
///    zero, by the defining property of the coordinate table.
///
/// Families 1 and 3 are kept (as zero polynomials) so that indices and
/// cardinality `n·m·(m−1) + C(nm,2) + n` stay canonical.
#[derive(Debug, Clone)]
pub struct GpiGenerators {
    algebra: Algebra,
    nvars: usize,
    elements: Vec<FreePoly>,
    family2_start: usize,
    family3_start: usize,
}

impl GpiGenerators {
    pub fn new(algebra: Algebra, nvars: usize) -> GpiGenerators {
        assert!(nvars >= 1, "at least one free variable");
        let m = algebra.dim();
        let nm = m * nvars;
        let ys = all_coord_polys(&algebra, nvars);
        let mut elements = Vec::with_capacity(nvars * m * (m - 1) + nm * (nm - 1) / 2 + nvars);
        for i in 0..nvars {
            for j in 0..m {
                for k in 1..m {
                    let y = &ys[i * m + j];
                    let vk = algebra.basis_element(k);
                    elements.push(&y.mul_elem_left(&vk) - &y.mul_elem_right(&vk));
                }
            }
        }
        let family2_start = elements.len();
        for a in 0..nm {
            for b in a + 1..nm {
                let ab = ys[a].checked_mul(&ys[b]).expect("same ambient");
                let ba = ys[b].checked_mul(&ys[a]).expect("same ambient");
                elements.push(&ab - &ba);
            }
        }
        let family3_start = elements.len();
        for i in 0..nvars {
            let mut s = FreePoly::variable(algebra.clone(), nvars, i).expect("index in range");
            for j in 0..m {
                s = &s - &ys[i * m + j].mul_elem_right(&algebra.basis_element(j));
            }
            elements.push(s);
        }
        GpiGenerators { algebra, nvars, elements, family2_start, family3_start }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// All generators in the canonical order.
    pub fn all(&self) -> &[FreePoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn family1(&self) -> &[FreePoly] {
        &self.elements[..self.family2_start]
    }

    pub fn family2(&self) -> &[FreePoly] {
        &self.elements[self.family2_start..self.family3_start]
    }

    pub fn family3(&self) -> &[FreePoly] {
        &self.elements[self.family3_start..]
    }

    /// Index into [`Self::all`] of the family-2 commutator for flat
    /// variable indices `a < b`.
    pub fn family2_index(&self, a: usize, b: usize) -> usize {
        let nm = self.algebra.dim() * self.nvars;
        debug_assert!(a < b && b < nm);
        self.family2_start + a * nm - a * (a + 1) / 2 + (b - a - 1)
    }
}

/// One rewrite step of a certificate: the free-product product
/// `left · generator · right`, with the generator referenced by its index
/// in the canonical [`GpiGenerators`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertStep {
    pub left: FreePoly,
    pub gen: usize,
    pub right: FreePoly,
}

/// An effective witness that `target` lies in the two-sided ideal of the
/// kernel generators: the steps sum to `target` exactly, which
/// [`verify_certificate`] checks by direct expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpiCertificate {
    pub target: FreePoly,
    pub steps: Vec<CertStep>,
}

/// Letter alphabet for the rewriting engine: the flat index `i·m + j`
/// stands for the factor `Y_ij`.
type LetterWord = Vec<usize>;

/// Expands `p` exactly as `Σ_w c_w · Ỹ(w)` over letter words `w`, where
/// `Ỹ(w)` is the ordered product of coordinate functionals named by `w`.
///
/// This uses two identities that hold *syntactically* in the free
/// product: `x_i = Σ_j Y_ij·v_j`, and `c·Y_ij = Y_ij·c` for constants
/// `c`. Substituting the first into every word and pulling all `Y`
/// factors to the left through the interleaved constants leaves, for the
/// word `v_{s₀}x_{μ₁}v_{s₁}…x_{μ_k}v_{s_k}` and each choice of
/// coordinates `j₁…j_k`, the letter word `(μ₁·m+j₁, …, μ_k·m+j_k)` with
/// constant `coef·v_{s₀}v_{j₁}v_{s₁}…v_{j_k}v_{s_k}`.
fn chi_expand(p: &FreePoly) -> BTreeMap<LetterWord, AlgebraElement> {
    let algebra = p.ambient();
    let m = algebra.dim();
    let mut out: BTreeMap<LetterWord, AlgebraElement> = BTreeMap::new();
    for (word, coef) in p.terms() {
        let k = word.vars().len();
        let mut states: Vec<(LetterWord, AlgebraElement)> =
            vec![(Vec::new(), algebra.basis_element(word.slots()[0]).scale(coef))];
        for t in 0..k {
            let var = word.vars()[t];
            let slot = algebra.basis_element(word.slots()[t + 1]);
            let mut next = Vec::with_capacity(states.len() * m);
            for (letters, c) in &states {
                for j in 0..m {
                    let mut w = letters.clone();
                    w.push(var * m + j);
                    let cj = algebra.mul(c, &algebra.basis_element(j)).expect("same ambient");
                    let cj = algebra.mul(&cj, &slot).expect("same ambient");
                    next.push((w, cj));
                }
            }
            states = next;
        }
        for (w, c) in states {
            add_letter_term(&mut out, w, c);
        }
    }
    out
}

fn add_letter_term(
    map: &mut BTreeMap<LetterWord, AlgebraElement>,
    w: LetterWord,
    c: AlgebraElement,
) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = &*o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Memoized ordered product `Ỹ(w)` of coordinate functionals.
fn ytilde(
    cache: &mut BTreeMap<LetterWord, FreePoly>,
    ys: &[FreePoly],
    one: &FreePoly,
    letters: &[usize],
) -> FreePoly {
    if letters.is_empty() {
        return one.clone();
    }
    if let Some(p) = cache.get(letters) {
        return p.clone();
    }
    let head = ytilde(cache, ys, one, &letters[..letters.len() - 1]);
    let p = head.checked_mul(&ys[*letters.last().unwrap()]).expect("same ambient");
    cache.insert(letters.to_vec(), p.clone());
    p
}

/// Writes a kernel element as an explicit combination of the generators.
///
/// The algorithm χ-expands `p` into `Σ_w c_w·Ỹ(w)`, checks that the
/// constants over each *sorted-word class* sum to zero (equivalent to
/// `φ(p) = 0`, since `φ(Ỹ(w))` depends only on the multiset of letters),
/// and then insertion-sorts every letter word. Each adjacent swap
/// `…Y_b·Y_a… → …Y_a·Y_b…` (with `a < b`) is an exact application of the
/// family-2 commutator `G = Y_a·Y_b − Y_b·Y_a`:
///
/// `c·Ỹ(u)·Y_b·Y_a·Ỹ(v) = c·Ỹ(u)·Y_a·Y_b·Ỹ(v) − c·Ỹ(u)·G·Ỹ(v)`,
///
/// recorded as the step `(−c·Ỹ(u), G, Ỹ(v))`. Once every word is sorted
/// the residue is `Σ_classes (Σ c_w)·Ỹ(sorted) = 0`, so the recorded
/// steps sum to `p` exactly. Steps with equal generator and right
/// cofactor are merged.
pub fn gpi_certificate(gens: &GpiGenerators, p: &FreePoly) -> Result<GpiCertificate> {
    if p.ambient() != gens.algebra() || p.nvars() != gens.nvars() {
        return Err(Error::AmbientMismatch);
    }
    let algebra = gens.algebra().clone();
    let chi = chi_expand(p);
    let mut classes: BTreeMap<LetterWord, AlgebraElement> = BTreeMap::new();
    for (w, c) in &chi {
        let mut sorted = w.clone();
        sorted.sort_unstable();
        add_letter_term(&mut classes, sorted, c.clone());
    }
    if !classes.is_empty() {
        return Err(Error::NotAnIdentity);
    }
    let ys = all_coord_polys(&algebra, gens.nvars());
    let one = FreePoly::one(algebra.clone(), gens.nvars());
    let mut ycache: BTreeMap<LetterWord, FreePoly> = BTreeMap::new();
    // Accumulated left cofactors, keyed by (generator index, right letter
    // word) so parallel rewrites merge into one step.
    let mut steps_map: BTreeMap<(usize, LetterWord), FreePoly> = BTreeMap::new();
    for (w, c) in chi {
        let coef = FreePoly::constant(algebra.clone(), gens.nvars(), &c);
        let mut w = w;
        for pos in 1..w.len() {
            let mut t = pos;
            while t > 0 && w[t - 1] > w[t] {
                let (big, small) = (w[t - 1], w[t]);
                let prefix = ytilde(&mut ycache, &ys, &one, &w[..t - 1]);
                let left = -&coef.checked_mul(&prefix).expect("same ambient");
                let key = (gens.family2_index(small, big), w[t + 1..].to_vec());
                match steps_map.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(left);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() = &*o.get() + &left;
                    }
                }
                w.swap(t - 1, t);
                t -= 1;
            }
        }
    }
    let mut steps = Vec::new();
    for ((gen, suffix), left) in steps_map {
        if left.is_zero() {
            continue;
        }
        let right = ytilde(&mut ycache, &ys, &one, &suffix);
        steps.push(CertStep { left, gen, right });
    }
    Ok(GpiCertificate { target: p.clone(), steps })
}

/// Checks a certificate by direct arithmetic: true iff every step is
/// well-formed over the generator set's ambient and the steps sum to the
/// target exactly.
pub fn verify_certificate(gens: &GpiGenerators, cert: &GpiCertificate) -> bool {
    if cert.target.ambient() != gens.algebra() || cert.target.nvars() != gens.nvars() {
        return false;
    }
    let mut acc = FreePoly::zero(gens.algebra().clone(), gens.nvars());
    for step in &cert.steps {
        if step.gen >= gens.len() {
            return false;
        }
        let lg = match step.left.checked_mul(&gens.all()[step.gen]) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let lgr = match lg.checked_mul(&step.right) {
            Ok(p) => p,
            Err(_) => return false,
        };
        acc = match acc.checked_add(&lgr) {
            Ok(p) => p,
            Err(_) => return false,
        };
    }
    acc == cert.target
}
