//! Radicals of zero-dimensional ideals and the degree-1 part of the radical of a
//! homogeneous ideal with finite projective locus.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{HilbertPolynomial, HilbertWindow, Ideal};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, solve_or_witness, Echelon, Matrix, SolveOutcome};
use crate::field::{PrimeField, Scalar};
use crate::poly::{Monomial, Poly, Ring};

/// Dense univariate polynomials, coefficients from degree 0 upwards, no trailing zeros.
mod upoly {
    use super::*;

    pub fn trim(mut a: Vec<Scalar>) -> Vec<Scalar> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn derivative(f: &PrimeField, a: &[Scalar]) -> Vec<Scalar> {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, i as u32 % f.p())).collect())
    }

    /// (quotient, remainder)
    pub fn divmod(f: &PrimeField, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut r = a.to_vec();
        if a.len() < b.len() {
            return (Vec::new(), trim(r));
        }
        let inv = f.inv(*b.last().unwrap());
        let mut q = vec![0; a.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + b.len() - 1], inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, bj));
            }
        }
        (trim(q), trim(r))
    }

    pub fn gcd(f: &PrimeField, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let (_, r) = divmod(f, &a, &b);
            a = b;
            b = r;
        }
        a
    }

    /// a / gcd(a, a'); valid since degrees stay below p.
    pub fn squarefree_part(f: &PrimeField, a: &[Scalar]) -> Vec<Scalar> {
        let d = derivative(f, a);
        if d.is_empty() {
            return a.to_vec();
        }
        let g = gcd(f, a, &d);
        divmod(f, a, &g).0
    }
}

/// Coordinates of NF(p) on the standard monomials.
fn coords(gb: &super::GroebnerBasis, index: &BTreeMap<Monomial, usize>, p: &Poly) -> Vec<Scalar> {
    let mut v = vec![0; index.len()];
    for (m, c) in gb.normal_form(p).terms() {
        v[index[m]] = *c;
    }
    v
}

/// Minimal polynomial of variable `k` modulo a zero-dimensional ideal, monic, low-to-high.
fn minimal_polynomial(ideal: &Ideal, k: usize) -> Result<Vec<Scalar>> {
    let gb = ideal.grevlex();
    let std = gb.standard_monomials()?;
    let index: BTreeMap<Monomial, usize> = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let ring = *ideal.ring();
    let f = *ring.field();
    let x = Poly::var(ring, k);
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut ech = Echelon::new(f, std.len());
    let mut cur = Poly::one(ring);
    loop {
        let v = coords(gb, &index, &cur);
        if ech.contains(&v) {
            let mut m = Matrix::zeros(std.len(), powers.len());
            for (j, col) in powers.iter().enumerate() {
                for (i, &c) in col.iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            let SolveOutcome::Solution(sol) = solve_or_witness(&f, &m, &v)? else {
                return Err(Error::Internal("dependent power not in span".into()));
            };
            let mut poly: Vec<Scalar> = sol.iter().map(|&c| f.neg(c)).collect();
            poly.push(1);
            return Ok(poly);
        }
        ech.insert(v.clone());
        powers.push(v);
        cur = gb.normal_form(&cur.mul(&x)?);
    }
}

/// Radical of a zero-dimensional affine ideal: adjoin, for each variable, the squarefree
/// part of its minimal polynomial.
pub fn zero_dim_radical(ideal: &Ideal) -> Result<Ideal> {
    let gb = ideal.grevlex();
    if gb.is_unit() {
        return Ok(ideal.clone());
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let ring = *ideal.ring();
    let f = *ring.field();
    let mut gens = gb.polys();
    let mut changed = false;
    for k in 0..ring.nvars() {
        let minpoly = minimal_polynomial(ideal, k)?;
        let sq = upoly::squarefree_part(&f, &minpoly);
        if sq.len() < minpoly.len() {
            changed = true;
            let mut p = Poly::zero(ring);
            for (e, &c) in sq.iter().enumerate() {
                let mut m = Monomial::ONE;
                m.set(k, e as u32);
                p.add_term(m, c);
            }
            gens.push(p);
        }
    }
    if !changed {
        return Ok(ideal.clone());
    }
    Ideal::new(ring, gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearPart {
    /// Basis of (√I)_1.
    Basis(Vec<Poly>),
    /// Locus of positive dimension: dim (√I)_1 ≤ n − 1.
    PositiveDimensional,
    /// Empty projective locus: (√I)_1 is everything.
    EmptyLocus,
}

#[derive(Clone, Debug)]
pub struct RadicalLinearPart {
    pub part: LinearPart,
    pub window: HilbertWindow,
    /// Affine charts α_i = 1 that were examined.
    pub charts: Vec<usize>,
}

impl RadicalLinearPart {
    /// dim (√I)_1 when it is known exactly.
    pub fn dimension(&self, nvars: usize) -> Option<usize> {
        match &self.part {
            LinearPart::Basis(b) => Some(b.len()),
            LinearPart::EmptyLocus => Some(nvars),
            LinearPart::PositiveDimensional => None,
        }
    }
}

fn remove_slot(m: &Monomial, i: usize) -> Monomial {
    let mut out = Monomial::ONE;
    let mut k = 0;
    for j in 0..crate::poly::MAX_VARS {
        if j == i {
            continue;
        }
        out.0[k] = m.0[j];
        k += 1;
    }
    out
}

fn dehomogenize(p: &Poly, chart_ring: Ring, i: usize) -> Poly {
    Poly::from_terms(chart_ring, p.terms().map(|(m, c)| (remove_slot(m, i), *c)))
}

/// (√I)_1 for a homogeneous ideal, computed chart by chart.
pub fn radical_linear_part(ideal: &Ideal) -> Result<RadicalLinearPart> {
    let window = ideal.hilbert_polynomial_constant()?;
    let ring = *ideal.ring();
    let n = ring.nvars();
    match window.polynomial {
        HilbertPolynomial::NotConstant => {
            return Ok(RadicalLinearPart { part: LinearPart::PositiveDimensional, window, charts: Vec::new() })
        }
        HilbertPolynomial::Constant(0) => {
            return Ok(RadicalLinearPart { part: LinearPart::EmptyLocus, window, charts: Vec::new() })
        }
        HilbertPolynomial::Constant(_) => {}
    }
    if n < 2 {
        return Err(Error::Precondition("radical linear part needs at least two variables".into()));
    }
    let f = *ring.field();
    let chart_ring = Ring::new(f, ring.flavor(), n - 1, 0)?;
    let mut conditions: Vec<Vec<Scalar>> = Vec::new();
    let mut charts = Vec::new();
    let mut covered = ideal.generators().to_vec();
    for i in 0..n {
        charts.push(i);
        let local = Ideal::new(chart_ring, ideal.generators().iter().map(|g| dehomogenize(g, chart_ring, i)).collect())?;
        if !local.grevlex().is_unit() {
            let rad = zero_dim_radical(&local)?;
            let gb = rad.grevlex();
            let std = gb.standard_monomials()?;
            let index: BTreeMap<Monomial, usize> = std.iter().enumerate().map(|(k, m)| (*m, k)).collect();
            let images: Vec<Vec<Scalar>> = (0..n)
                .map(|k| {
                    let img = if k == i { Poly::one(chart_ring) } else { Poly::var(chart_ring, if k < i { k } else { k - 1 }) };
                    coords(gb, &index, &img)
                })
                .collect();
            for s in 0..std.len() {
                conditions.push(images.iter().map(|v| v[s]).collect());
            }
        }
        covered.push(Poly::var(ring, i));
        let rest = Ideal::new(ring, covered.clone())?;
        if rest.grevlex().krull_dimension() == 0 {
            break;
        }
    }
    let m = Matrix::from_rows(n, &conditions)?;
    let basis = kernel_basis(&f, &m).iter().map(|v| Poly::linear(ring, v)).collect();
    Ok(RadicalLinearPart { part: LinearPart::Basis(basis), window, charts })
}
