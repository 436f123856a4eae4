use alloc::vec::Vec;

use rand::Rng;

use crate::apolar::{is_143, is_1661};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::{
    hom_extend, hom_extend_poly, monomials_in_degrees, triangle, triangle_subspace, Flavor,
    Poly, Ring, Subspace,
};

fn lift_ring(from: &Ring, n: usize) -> Result<Ring> {
    if from.flavor() != Flavor::Primal || from.first_index() != 1 {
        return Err(Error::Precondition("expected a polynomial in x1..xm".into()));
    }
    if from.nvars() > n {
        return Err(Error::Precondition(alloc::format!("{} variables do not fit into n = {n}", from.nvars())));
    }
    Ring::affine(*from.field(), n)
}

/// G = (f▼d)^{hom,d−3}, which equals x0^{d−3}·f^hom when deg f = 3.
pub fn build_witness_14(f: &Poly, d: u32, n: usize) -> Result<Poly> {
    if f.degree().is_some_and(|m| m > 3) {
        return Err(Error::Precondition("expected a polynomial of degree at most 3".into()));
    }
    if d < 3 {
        return Err(Error::Precondition("d must be at least 3".into()));
    }
    let ring = lift_ring(f.ring(), n)?;
    let lifted = Poly::from_terms(ring, f.terms().map(|(m, c)| (*m, *c)));
    hom_extend_poly(&triangle(d, &lifted)?, 3, d - 3)
}

/// V = (W▼d)^{hom,d−2}.
pub fn build_witness_83(w: &Subspace, d: u32, n: usize) -> Result<Subspace> {
    if w.max_degree().is_some_and(|m| m > 2) {
        return Err(Error::Precondition("expected polynomials of degree at most 2".into()));
    }
    if d < 2 {
        return Err(Error::Precondition("d must be at least 2".into()));
    }
    let ring = lift_ring(w.ring(), n)?;
    let lifted: Vec<Poly> =
        w.basis().iter().map(|p| Poly::from_terms(ring, p.terms().map(|(m, c)| (*m, *c)))).collect();
    hom_extend(&triangle_subspace(d, &Subspace::span(ring, &lifted)?)?, 2, d - 2)
}

fn random_poly(rng: &mut impl Rng, ring: Ring, lo: u32, hi: u32) -> Poly {
    let p = ring.field().p();
    Poly::from_terms(ring, monomials_in_degrees(ring.nvars(), lo, hi).into_iter().map(|m| (m, rng.gen_range(0..p))))
}

/// Random f ∈ S_{≤3} in six variables whose f▼d has local Hilbert function (1,6,6,1).
pub fn random_1661_cubic(rng: &mut impl Rng, field: PrimeField, d: u32) -> Result<Poly> {
    let ring = Ring::affine(field, 6)?;
    for _ in 0..64 {
        let f = random_poly(rng, ring, 0, 3);
        if is_1661(&triangle(d, &f)?)?.holds {
            return Ok(f);
        }
    }
    Err(Error::Internal("no (1,6,6,1) cubic found in 64 draws".into()))
}

/// Random 3-dimensional W ⊆ S_{≤2} in four variables with W▼d of local Hilbert function (1,4,3).
pub fn random_143_subspace(rng: &mut impl Rng, field: PrimeField, d: u32) -> Result<Subspace> {
    let ring = Ring::affine(field, 4)?;
    for _ in 0..64 {
        let gens: Vec<Poly> = (0..3)
            .map(|_| {
                let top = random_poly(rng, ring, 2, 2);
                let low = random_poly(rng, ring, 0, 1);
                top.add(&low).unwrap()
            })
            .collect();
        let w = Subspace::span(ring, &gens)?;
        if w.dim() == 3 && is_143(&triangle_subspace(d, &w)?)?.holds {
            return Ok(w);
        }
    }
    Err(Error::Internal("no (1,4,3) subspace found in 64 draws".into()))
}
