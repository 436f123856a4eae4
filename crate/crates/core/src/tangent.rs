//! Tangent space Hom(I, R/I) to the Hilbert scheme of points at an artinian ideal
//! supported at the origin.
//!
//! The main route imposes, on the images of the Gröbner basis elements, the relations
//! coming from the S-pair syzygies. The conormal route works inside R/m^{2N} with explicit
//! models of I and I², and is kept as an independent cross-check.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::{Echelon, Matrix};
use crate::field::{PrimeField, Scalar};
use crate::groebner::{reduce, s_poly, GroebnerBasis, Ideal};
use crate::poly::{monomials_in_degrees, Monomial, MonomialOrder, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TangentMethod {
    Syzygy,
    Conormal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TangentReport {
    pub dim_hom: usize,
    /// Number of variables.
    pub n: usize,
    /// dim R/I.
    pub length: usize,
    /// Least N with m^N ⊆ I.
    pub nilpotency: u32,
    /// Truncation degree of the ambient model (conormal route only).
    pub truncation_degree: Option<u32>,
    pub method: TangentMethod,
    /// S-pair relations actually imposed (syzygy route only).
    pub relations: Option<usize>,
}

/// R/I for an artinian I supported at the origin, with the multiplication action.
pub struct LocalQuotient<'a> {
    field: PrimeField,
    gb: &'a GroebnerBasis,
    std: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    vars: Vec<Matrix>,
    nilpotency: u32,
    cache: BTreeMap<Monomial, Matrix>,
}

impl<'a> LocalQuotient<'a> {
    pub fn new(ideal: &'a Ideal) -> Result<Self> {
        let gb = ideal.grevlex();
        if gb.is_unit() {
            return Err(Error::SupportNotAtOrigin);
        }
        if !gb.is_zero_dimensional() {
            return Err(Error::NotArtinian);
        }
        let ring = *ideal.ring();
        let field = *ring.field();
        let std = gb.standard_monomials()?;
        let index: BTreeMap<Monomial, usize> = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let len = std.len();
        let mut q = LocalQuotient { field, gb, std, index, vars: Vec::new(), nilpotency: 0, cache: BTreeMap::new() };
        for v in 0..ring.nvars() {
            let mut m = Matrix::zeros(len, len);
            for (s, mono) in q.std.iter().enumerate() {
                let img = q.coords(&Poly::term(ring, mono.mul(&Monomial::var(v)), 1));
                for (r, c) in img.into_iter().enumerate() {
                    m.set(r, s, c);
                }
            }
            // nilpotent iff its len-th power vanishes
            let mut pw = m.clone();
            for _ in 1..len {
                pw = pw.mul(&field, &m)?;
            }
            if pw.row_vecs().iter().flatten().any(|&c| c != 0) {
                return Err(Error::SupportNotAtOrigin);
            }
            q.vars.push(m);
        }
        let top = q.std.iter().map(|m| m.degree()).max().unwrap_or(0);
        let mut n = top + 1;
        while !monomials_in_degrees(ring.nvars(), n, n).iter().all(|m| gb.contains(&Poly::term(ring, *m, 1))) {
            n += 1;
        }
        q.nilpotency = n;
        Ok(q)
    }

    pub fn length(&self) -> usize {
        self.std.len()
    }

    pub fn nilpotency(&self) -> u32 {
        self.nilpotency
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.std
    }

    /// Coordinates of NF(p) on the standard monomials.
    pub fn coords(&self, p: &Poly) -> Vec<Scalar> {
        let mut v = vec![0; self.std.len()];
        for (m, c) in self.gb.normal_form(p).terms() {
            v[self.index[m]] = *c;
        }
        v
    }

    /// Matrix of multiplication by a monomial.
    pub fn monomial_action(&mut self, m: &Monomial) -> Result<Matrix> {
        if let Some(a) = self.cache.get(m) {
            return Ok(a.clone());
        }
        let len = self.std.len();
        let out = if *m == Monomial::ONE {
            Matrix::identity(len)
        } else if m.degree() >= self.nilpotency {
            Matrix::zeros(len, len)
        } else {
            let v = (0..self.vars.len()).find(|&v| m.get(v) > 0).unwrap();
            let rest = Monomial::var(v).quotient_of(m);
            let tail = self.monomial_action(&rest)?;
            self.vars[v].mul(&self.field, &tail)?
        };
        self.cache.insert(*m, out.clone());
        Ok(out)
    }

    /// Matrix of multiplication by Σ c·m over the given terms.
    pub fn action<'t>(&mut self, terms: impl IntoIterator<Item = (&'t Monomial, &'t Scalar)>) -> Result<Matrix> {
        let len = self.std.len();
        let f = self.field;
        let mut out = Matrix::zeros(len, len);
        for (m, &c) in terms {
            let a = self.monomial_action(m)?;
            for r in 0..len {
                for s in 0..len {
                    let v = a.get(r, s);
                    if v != 0 {
                        out.set(r, s, f.add(out.get(r, s), f.mul(c, v)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn variable_action(&self, v: usize) -> &Matrix {
        &self.vars[v]
    }
}

/// A pair (i, j) can be dropped when some third leading monomial divides lcm(i, j) and
/// both of its own lcms with i and j are proper divisors of lcm(i, j).
fn redundant_pair(lms: &[Monomial], i: usize, j: usize) -> bool {
    let l = lms[i].lcm(&lms[j]);
    (0..lms.len()).any(|k| {
        k != i && k != j && lms[k].divides(&l) && lms[i].lcm(&lms[k]) != l && lms[j].lcm(&lms[k]) != l
    })
}

/// dim Hom(I, R/I) via the S-pair syzygies of the grevlex Gröbner basis.
pub fn tangent_dimension(ideal: &Ideal) -> Result<TangentReport> {
    let mut q = LocalQuotient::new(ideal)?;
    let gb = ideal.grevlex();
    let f = *ideal.ring().field();
    let ord = MonomialOrder::Grevlex;
    let basis = gb.internal();
    let lms = gb.leading_monomials();
    let (m, len) = (basis.len(), q.length());
    let cols = m * len;
    let mut ech = Echelon::new(f, cols);
    let mut relations = 0;
    'pairs: for j in 0..m {
        for i in 0..j {
            if ech.rank() == cols {
                break 'pairs;
            }
            if redundant_pair(&lms, i, j) {
                continue;
            }
            relations += 1;
            let l = lms[i].lcm(&lms[j]);
            let s = s_poly(&f, &ord, &basis[i], &basis[j]);
            let mut quots = vec![BTreeMap::new(); m];
            let rem = reduce(&f, &ord, &s, basis, Some(&mut quots));
            if !rem.is_zero() {
                return Err(Error::Internal("S-polynomial of a Gröbner basis has nonzero remainder".into()));
            }
            // syzygy: (l/lm_i) e_i − (l/lm_j) e_j − Σ q_k e_k
            let mut blocks: Vec<Option<Matrix>> = vec![None; m];
            for (k, qk) in quots.iter().enumerate() {
                if !qk.is_empty() {
                    let neg: Vec<(Monomial, Scalar)> = qk.iter().map(|(mm, c)| (*mm, f.neg(*c))).collect();
                    blocks[k] = Some(q.action(neg.iter().map(|(a, b)| (a, b)))?);
                }
            }
            for (k, coeff) in [(i, 1), (j, f.neg(1))] {
                let mono = lms[k].quotient_of(&l);
                let add = q.action([(&mono, &coeff)])?;
                blocks[k] = Some(match blocks[k].take() {
                    None => add,
                    Some(b) => sum(&f, &b, &add),
                });
            }
            for r in 0..len {
                let mut row = vec![0; cols];
                let mut nonzero = false;
                for (k, b) in blocks.iter().enumerate() {
                    if let Some(b) = b {
                        for s in 0..len {
                            let v = b.get(r, s);
                            if v != 0 {
                                row[k * len + s] = v;
                                nonzero = true;
                            }
                        }
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(TangentReport {
        dim_hom: cols - ech.rank(),
        n: ideal.ring().nvars(),
        length: len,
        nilpotency: q.nilpotency(),
        truncation_degree: None,
        method: TangentMethod::Syzygy,
        relations: Some(relations),
    })
}

fn sum(f: &PrimeField, a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            out.set(r, c, f.add(a.get(r, c), b.get(r, c)));
        }
    }
    out
}

/// dim Hom(I/I², R/I) computed in R/m^{2N}.
pub fn tangent_dimension_conormal(ideal: &Ideal) -> Result<TangentReport> {
    let n = LocalQuotient::new(ideal)?.nilpotency();
    tangent_dimension_truncated(ideal, 2 * n)
}

/// As [`tangent_dimension_conormal`] with an explicit truncation degree (at least 2N).
pub fn tangent_dimension_truncated(ideal: &Ideal, truncation: u32) -> Result<TangentReport> {
    let q = LocalQuotient::new(ideal)?;
    let nil = q.nilpotency();
    if truncation < 2 * nil {
        return Err(Error::Precondition("truncation below 2N does not contain I²".into()));
    }
    let ring = *ideal.ring();
    let nv = ring.nvars();
    let f = *ring.field();
    let ambient = monomials_in_degrees(nv, 0, truncation - 1);
    let index: BTreeMap<Monomial, usize> = ambient.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let dim = ambient.len();
    let to_vec = |p: &Poly| {
        let mut v = vec![0; dim];
        for (m, c) in p.terms() {
            if let Some(&i) = index.get(m) {
                v[i] = *c;
            }
        }
        v
    };
    let shift = |v: &[Scalar], var: usize| {
        let mut out = vec![0; dim];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                if let Some(&k) = index.get(&ambient[i].mul(&Monomial::var(var))) {
                    out[k] = c;
                }
            }
        }
        out
    };
    let gens = ideal.grevlex().polys();

    // I² model: multiples of pairwise products.
    let mut sq = Echelon::new(f, dim);
    for (a, ga) in gens.iter().enumerate() {
        for gb in &gens[a..] {
            let base = to_vec(&ga.mul(gb)?);
            for m in &ambient {
                let mut v = vec![0; dim];
                for (i, &c) in base.iter().enumerate() {
                    if c != 0 {
                        if let Some(&k) = index.get(&ambient[i].mul(m)) {
                            v[k] = c;
                        }
                    }
                }
                sq.insert(v);
            }
        }
    }
    // I/I²: reduced representatives of the multiples of the generators.
    let mut conormal = Echelon::new(f, dim);
    for g in &gens {
        let base = to_vec(g);
        for m in &ambient {
            let mut v = vec![0; dim];
            for (i, &c) in base.iter().enumerate() {
                if c != 0 {
                    if let Some(&k) = index.get(&ambient[i].mul(m)) {
                        v[k] = c;
                    }
                }
            }
            sq.reduce(&mut v);
            conormal.insert(v);
        }
    }
    let c = conormal.rank();
    let len = q.length();
    let cols = c * len;
    let mut ech = Echelon::new(f, cols);
    let rows: Vec<Vec<Scalar>> = conormal.rows().to_vec();
    for (t, b) in rows.iter().enumerate() {
        for var in 0..nv {
            let mut w = shift(b, var);
            sq.reduce(&mut w);
            let coords = conormal
                .coordinates(&w)
                .ok_or_else(|| Error::Internal("conormal model not closed under multiplication".into()))?;
            let mv = q.variable_action(var).clone();
            // Σ_s coords_s φ(b_s) − x_var φ(b_t) = 0
            for r in 0..len {
                let mut row = vec![0; cols];
                for (s, &cs) in coords.iter().enumerate() {
                    if cs != 0 {
                        row[s * len + r] = f.add(row[s * len + r], cs);
                    }
                }
                for k in 0..len {
                    let v = mv.get(r, k);
                    if v != 0 {
                        row[t * len + k] = f.sub(row[t * len + k], v);
                    }
                }
                ech.insert(row);
            }
        }
    }
    Ok(TangentReport {
        dim_hom: cols - ech.rank(),
        n: nv,
        length: len,
        nilpotency: nil,
        truncation_degree: Some(truncation),
        method: TangentMethod::Conormal,
        relations: None,
    })
}
