//! Ideals in polynomial rings over F_p: Gröbner bases, normal forms, Hilbert functions,
//! homogenization, minimal generator counts, ideal quotients and radicals.

mod engine;
mod radical;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

pub(crate) use engine::{reduce, s_poly, OPoly};
pub use radical::{radical_linear_part, zero_dim_radical, LinearPart, RadicalLinearPart};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{count_monomials, monomials_of_degree, Monomial, MonomialOrder, Poly, Ring, ORDER_SLOTS};

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    internal: Vec<OPoly>,
}

impl GroebnerBasis {
    pub(crate) fn new(ring: Ring, order: MonomialOrder, internal: Vec<OPoly>) -> Self {
        GroebnerBasis { ring, order, internal }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.internal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.internal.is_empty()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.internal.iter().map(|g| g.to_poly(self.ring)).collect()
    }

    pub(crate) fn internal(&self) -> &[OPoly] {
        &self.internal
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|g| g.lm()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.internal.len() == 1 && self.internal[0].lm() == Monomial::ONE
    }

    pub fn max_degree(&self) -> u32 {
        self.internal.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let h = OPoly::from_poly(f, &self.order);
        reduce(self.ring.field(), &self.order, &h, &self.internal, None).to_poly(self.ring)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Monomial `m` is standard if no leading monomial divides it.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.internal.iter().any(|g| g.lm().divides(m))
    }

    /// Number of standard monomials of degree exactly `e`.
    pub fn count_standard(&self, e: u32) -> usize {
        count_standard(&self.leading_monomials(), self.ring.nvars(), e)
    }

    /// Standard monomials of a zero-dimensional ideal, grevlex-ascending by degree.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let mut out = Vec::new();
        let mut e = 0;
        loop {
            let layer: Vec<Monomial> =
                monomials_of_degree(self.ring.nvars(), e).into_iter().filter(|m| self.is_standard(m)).collect();
            if layer.is_empty() {
                break;
            }
            out.extend(layer.into_iter().rev());
            e += 1;
        }
        Ok(out)
    }

    /// Every variable has a pure power among the leading monomials (affine finiteness).
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        (0..n).all(|i| {
            self.internal.iter().any(|g| {
                let m = g.lm();
                (0..n).all(|k| k == i || m.get(k) == 0)
            })
        })
    }

    /// Krull dimension of the quotient by the leading-monomial ideal: the size of the
    /// largest variable set that contains the support of no leading monomial.
    pub fn krull_dimension(&self) -> usize {
        let n = self.ring.nvars();
        let supports: Vec<u32> = self
            .internal
            .iter()
            .map(|g| (0..n).filter(|&k| g.lm().get(k) > 0).fold(0u32, |acc, k| acc | (1 << k)))
            .collect();
        let mut best = 0;
        for set in 0u32..(1 << n) {
            let size = set.count_ones() as usize;
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        best
    }
}

pub(crate) fn count_standard(lms: &[Monomial], nvars: usize, e: u32) -> usize {
    monomials_of_degree(nvars, e).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count()
}

/// Outcome of the Hilbert-polynomial window test.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum HilbertPolynomial {
    Constant(usize),
    NotConstant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HilbertWindow {
    pub polynomial: HilbertPolynomial,
    /// Hilbert function values in degrees 0..=window_end.
    pub values: Vec<usize>,
    pub window_end: u32,
    pub krull_dimension: usize,
}

pub struct Ideal {
    ring: Ring,
    generators: Vec<Poly>,
    cache: [OnceBox<GroebnerBasis>; ORDER_SLOTS],
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let copy = Ideal::new_unchecked(self.ring, self.generators.clone());
        for (i, slot) in self.cache.iter().enumerate() {
            if let Some(gb) = slot.get() {
                let _ = copy.cache[i].set(alloc::boxed::Box::new(gb.clone()));
            }
        }
        copy
    }
}

impl core::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ideal").field("ring", &self.ring).field("generators", &self.generators).finish()
    }
}

impl Ideal {
    fn new_unchecked(ring: Ring, generators: Vec<Poly>) -> Self {
        Ideal { ring, generators, cache: core::array::from_fn(|_| OnceBox::new()) }
    }

    /// Zero generators are dropped.
    pub fn new(ring: Ring, generators: Vec<Poly>) -> Result<Self> {
        for g in &generators {
            if *g.ring() != ring {
                return Err(Error::RingMismatch("ideal generator in a different ring".into()));
            }
        }
        Ok(Ideal::new_unchecked(ring, generators.into_iter().filter(|g| !g.is_zero()).collect()))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Gröbner basis, computed once per order.
    pub fn groebner_basis(&self, ord: MonomialOrder) -> &GroebnerBasis {
        self.cache[ord.id()].get_or_init(|| {
            let f = self.ring.field();
            let gens: Vec<OPoly> = self.generators.iter().map(|g| OPoly::from_poly(g, &ord)).collect();
            alloc::boxed::Box::new(GroebnerBasis::new(self.ring, ord, engine::buchberger(f, &ord, &gens, None)))
        })
    }

    pub fn grevlex(&self) -> &GroebnerBasis {
        self.groebner_basis(MonomialOrder::Grevlex)
    }

    pub fn normal_form(&self, f: &Poly, ord: MonomialOrder) -> Poly {
        self.groebner_basis(ord).normal_form(f)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.grevlex().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (reduced Gröbner bases coincide).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.grevlex().internal == other.grevlex().internal
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(self.ring, g)
    }

    fn require_homogeneous(&self) -> Result<()> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(())
    }

    /// dim (R/I)_e for homogeneous I.
    pub fn hf_graded_quotient(&self, e: u32) -> Result<usize> {
        self.require_homogeneous()?;
        Ok(self.grevlex().count_standard(e))
    }

    /// Hilbert function of R/I in degrees 0..=up_to.
    pub fn hilbert_function(&self, up_to: u32) -> Result<Vec<usize>> {
        self.require_homogeneous()?;
        let gb = self.grevlex();
        Ok((0..=up_to).map(|e| gb.count_standard(e)).collect())
    }

    /// Hilbert function up to max GB degree + n + 2 (extended while a 1-dimensional
    /// quotient has not stabilised), classified as eventually constant or growing.
    pub fn hilbert_polynomial_constant(&self) -> Result<HilbertWindow> {
        self.require_homogeneous()?;
        let gb = self.grevlex();
        let nvars = self.ring.nvars();
        let run = nvars + 1;
        let krull = gb.krull_dimension();
        let mut end = gb.max_degree() + nvars as u32 + 1;
        let mut values: Vec<usize> = (0..=end).map(|e| gb.count_standard(e)).collect();
        let polynomial = match krull {
            0 => HilbertPolynomial::Constant(0),
            1 => loop {
                let tail = &values[values.len() - run..];
                if tail.iter().all(|&v| v == tail[0]) {
                    break HilbertPolynomial::Constant(tail[0]);
                }
                end += 1;
                values.push(gb.count_standard(end));
            },
            _ => HilbertPolynomial::NotConstant,
        };
        Ok(HilbertWindow { polynomial, values, window_end: end, krull_dimension: krull })
    }

    /// α0-homogenization of a grevlex Gröbner basis, in the ring with a new slot-0 variable.
    pub fn homogenize(&self) -> Result<Ideal> {
        let ring = self.ring.widened()?;
        let gens = self
            .grevlex()
            .polys()
            .iter()
            .map(|g| g.widen().map(|w| w.homogenize_in_first(g.degree().unwrap_or(0))))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// Number of minimal homogeneous generators in each degree:
    /// dim I_e − dim (T*_1 · I_{e−1}). Keys are degrees with a nonzero count.
    pub fn min_gens_by_degree(&self) -> Result<BTreeMap<u32, usize>> {
        self.require_homogeneous()?;
        let f = self.ring.field();
        let ord = MonomialOrder::Grevlex;
        let gb = self.grevlex();
        let mut out = BTreeMap::new();
        if gb.is_empty() {
            return Ok(out);
        }
        let mut degrees: Vec<u32> = gb.internal.iter().map(|g| g.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        for &e in &degrees {
            let lower: Vec<OPoly> = gb.internal.iter().filter(|g| g.degree() < e).cloned().collect();
            let from_lower = if lower.is_empty() {
                0
            } else {
                let trunc = engine::buchberger(f, &ord, &lower, Some(e));
                let lms: Vec<Monomial> = trunc.iter().map(|g| g.lm()).collect();
                count_monomials(self.ring.nvars(), e) - count_standard(&lms, self.ring.nvars(), e)
            };
            let total = count_monomials(self.ring.nvars(), e) - gb.count_standard(e);
            if total > from_lower {
                out.insert(e, total - from_lower);
            }
        }
        Ok(out)
    }

    /// (I : f) via I ∩ (f) = (t·I + (1−t)·f) ∩ R, eliminating a tag variable t.
    pub fn quotient(&self, f: &Poly) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroInput("ideal quotient by zero".into()));
        }
        if *f.ring() != self.ring {
            return Err(Error::RingMismatch("quotient by an element of another ring".into()));
        }
        let n = self.ring.nvars();
        let big = self.ring.with_extra_variable()?;
        let lift = |p: &Poly| Poly::from_terms(big, p.terms().map(|(m, c)| (*m, *c)));
        let t = Poly::var(big, n);
        let one_minus_t = Poly::one(big).sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(lift(g).mul(&t)?);
        }
        gens.push(lift(f).mul(&one_minus_t)?);
        let ord = MonomialOrder::Eliminate(n as u8);
        let fld = self.ring.field();
        let internal: Vec<OPoly> = gens.iter().map(|g| OPoly::from_poly(g, &ord)).collect();
        let gb = engine::buchberger(fld, &ord, &internal, None);
        let divisor = vec![{
            let mut d = OPoly::from_poly(f, &MonomialOrder::Grevlex);
            d.make_monic(fld);
            d
        }];
        let lead_inv = fld.inv(f.leading(&MonomialOrder::Grevlex).unwrap().1);
        let mut out = Vec::new();
        for g in gb.iter().filter(|g| g.terms.iter().all(|(m, _)| m.get(n) == 0)) {
            let g = OPoly::from_poly(&g.to_poly(self.ring), &MonomialOrder::Grevlex);
            let mut q = vec![BTreeMap::new()];
            let r = reduce(fld, &MonomialOrder::Grevlex, &g, &divisor, Some(&mut q));
            if !r.is_zero() {
                return Err(Error::Internal("intersection element not divisible by f".into()));
            }
            let quotient: Vec<(Monomial, Scalar)> =
                q.pop().unwrap().into_iter().map(|(m, c)| (m, fld.mul(c, lead_inv))).collect();
            out.push(Poly::from_terms(self.ring, quotient));
        }
        Ideal::new(self.ring, out)
    }
}
