//! Shared inputs, test-only oracles and property checks for the integration suites.
#![allow(dead_code)]

pub mod checks;
pub mod oracle;

use cactus_core::poly::{monomials_in_degrees, monomials_of_degree, Monomial, Poly, Ring, Subspace};
use cactus_core::PrimeField;
use rand::Rng;

pub const P: u32 = 7919;

pub fn field() -> PrimeField {
    PrimeField::default()
}

/// Polynomial with coefficient `c[i]` on the i-th monomial of degree lo..=hi (missing entries are 0).
pub fn poly_on(ring: Ring, lo: u32, hi: u32, c: &[u32]) -> Poly {
    let p = ring.field().p();
    Poly::from_terms(ring, monomials_in_degrees(ring.nvars(), lo, hi).into_iter().zip(c).map(|(m, &v)| (m, v % p)))
}

pub fn form_on(ring: Ring, d: u32, c: &[u32]) -> Poly {
    poly_on(ring, d, d, c)
}

pub fn count_in(nvars: usize, lo: u32, hi: u32) -> usize {
    monomials_in_degrees(nvars, lo, hi).len()
}

/// Sparse-ish random coefficient: zero with probability 3/5.
pub fn coeff(rng: &mut impl Rng) -> u32 {
    if rng.gen_range(0..5) < 3 {
        0
    } else {
        rng.gen_range(1..P)
    }
}

pub fn coeffs(rng: &mut impl Rng, len: usize) -> Vec<u32> {
    (0..len).map(|_| coeff(rng)).collect()
}

pub fn dense(rng: &mut impl Rng, len: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(0..P)).collect()
}

/// W ⊆ S_{≤deg} in x1..xn spanned by `gens`; the first generator is nudged to have degree `deg`.
#[derive(Clone, Debug)]
pub struct WSpec {
    pub n: usize,
    pub deg: u32,
    pub gens: Vec<Vec<u32>>,
}

impl WSpec {
    pub fn random(rng: &mut impl Rng) -> WSpec {
        let n = rng.gen_range(2..=3);
        let deg = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let len = count_in(n, 0, deg);
        WSpec { n, deg, gens: (0..k).map(|_| coeffs(rng, len)).collect() }
    }

    pub fn ring(&self) -> Ring {
        Ring::affine(field(), self.n).unwrap()
    }

    pub fn polys(&self) -> Vec<Poly> {
        let ring = self.ring();
        let mut out: Vec<Poly> = self.gens.iter().map(|c| poly_on(ring, 0, self.deg, c)).collect();
        if out[0].degree() != Some(self.deg) {
            let top = Poly::term(ring, Monomial::from_exps(&[self.deg]), 1);
            out[0] = out[0].add(&top).unwrap();
        }
        out
    }

    pub fn subspace(&self) -> Subspace {
        Subspace::span(self.ring(), &self.polys()).unwrap()
    }
}

/// Homogeneous J ⊆ T* = k[α0..αn] containing α0^d + ρ (ρ of α0-degree < d) and a few random forms.
#[derive(Clone, Debug)]
pub struct JSpec {
    pub n: usize,
    pub d: u32,
    pub rho: Vec<u32>,
    pub extra: Vec<(u32, Vec<u32>)>,
}

impl JSpec {
    pub fn random(rng: &mut impl Rng) -> JSpec {
        let n = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=3);
        let rho = coeffs(rng, monomials_of_degree(n + 1, d).len());
        let k = rng.gen_range(0..=2);
        let extra = (0..k)
            .map(|_| {
                let e = rng.gen_range(1..=3);
                (e, coeffs(rng, monomials_of_degree(n + 1, e).len()))
            })
            .collect();
        JSpec { n, d, rho, extra }
    }

    pub fn ring(&self) -> Ring {
        Ring::projective(field(), self.n).unwrap().dual()
    }

    pub fn generators(&self) -> Vec<Poly> {
        let ring = self.ring();
        let lead = Monomial::from_exps(&[self.d]);
        let rho: Vec<(Monomial, u32)> = monomials_of_degree(self.n + 1, self.d)
            .into_iter()
            .zip(&self.rho)
            .filter(|(m, _)| m.get(0) < self.d)
            .map(|(m, &c)| (m, c))
            .collect();
        let mut theta = Poly::from_terms(ring, rho);
        theta.add_term(lead, 1);
        let mut gens = vec![theta];
        gens.extend(self.extra.iter().map(|(e, c)| form_on(ring, *e, c)));
        gens
    }
}

/// f ∈ S_{≤3} in `nvars` variables; `kind` selects generic or degenerate cubic parts.
#[derive(Clone, Debug)]
pub struct CubicSpec {
    pub nvars: usize,
    pub kind: u8,
    pub c: Vec<u32>,
}

impl CubicSpec {
    pub const KINDS: u8 = 4;

    pub fn random(rng: &mut impl Rng) -> CubicSpec {
        let kind = rng.gen_range(0..Self::KINDS);
        let nvars = if kind == 3 { 7 } else { 6 };
        CubicSpec { nvars, kind, c: dense(rng, count_in(nvars, 0, 3)) }
    }

    /// 0: generic; 1: cubic part misses x6; 2: no cubic part; 3: generic in seven variables.
    pub fn poly(&self) -> Poly {
        let ring = Ring::affine(field(), self.nvars).unwrap();
        let f = poly_on(ring, 0, 3, &self.c);
        match self.kind {
            1 => Poly::from_terms(ring, f.terms().filter(|(m, _)| m.degree() < 3 || m.get(5) == 0).map(|(m, c)| (*m, *c))),
            2 => Poly::from_terms(ring, f.terms().filter(|(m, _)| m.degree() < 3).map(|(m, c)| (*m, *c))),
            _ => f,
        }
    }
}

/// Three elements of S_{≤2} in four variables; `kind` selects generic or degenerate quadratic parts.
#[derive(Clone, Debug)]
pub struct QuadSpec {
    pub kind: u8,
    pub c: [Vec<u32>; 3],
}

impl QuadSpec {
    pub const KINDS: u8 = 3;

    pub fn random(rng: &mut impl Rng) -> QuadSpec {
        let len = count_in(4, 0, 2);
        QuadSpec { kind: rng.gen_range(0..Self::KINDS), c: [dense(rng, len), dense(rng, len), dense(rng, len)] }
    }

    /// 0: generic; 1: quadratic parts avoid x4; 2: the third element has no quadratic part.
    pub fn subspace(&self) -> Subspace {
        let ring = Ring::affine(field(), 4).unwrap();
        let polys: Vec<Poly> = self
            .c
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let f = poly_on(ring, 0, 2, c);
                let keep = |m: &Monomial| match self.kind {
                    1 => m.degree() < 2 || m.get(3) == 0,
                    2 => i < 2 || m.degree() < 2,
                    _ => true,
                };
                Poly::from_terms(ring, f.terms().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, *c)))
            })
            .collect();
        Subspace::span(ring, &polys).unwrap()
    }
}

/// Random invertible n×n matrix over F_p.
pub fn invertible(rng: &mut impl Rng, n: usize) -> cactus_core::exactla::Matrix {
    loop {
        let rows: Vec<Vec<u32>> = (0..n).map(|_| dense(rng, n)).collect();
        let m = cactus_core::exactla::Matrix::from_rows(n, &rows).unwrap();
        if oracle::rank(rows.clone(), P) == n {
            return m;
        }
    }
}
