use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Monomial, MonomialOrder, Poly, Ring};
use crate::error::{Error, Result};
use crate::exactla::Matrix;

/// A span of polynomials with a canonical basis: reduced echelon form against the
/// grevlex-descending monomial enumeration, leading coefficients 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ring: Ring,
    basis: Vec<Poly>,
}

/// Monomials occurring in `polys`, grevlex-descending.
pub(crate) fn support(polys: &[Poly]) -> Vec<Monomial> {
    let set: BTreeSet<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| *m)).collect();
    let mut v: Vec<Monomial> = set.into_iter().collect();
    v.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    v
}

impl Subspace {
    pub fn zero(ring: Ring) -> Self {
        Subspace { ring, basis: Vec::new() }
    }

    /// Span of the given polynomials (dependent ones are dropped).
    pub fn span(ring: Ring, polys: &[Poly]) -> Result<Self> {
        for p in polys {
            if *p.ring() != ring {
                return Err(Error::RingMismatch("subspace generator in a different ring".into()));
            }
        }
        let cols = support(polys);
        if cols.is_empty() {
            return Ok(Subspace::zero(ring));
        }
        let f = *ring.field();
        let index = |m: &Monomial| cols.binary_search_by(|c| MonomialOrder::Grevlex.cmp(m, c)).unwrap();
        let mut mat = Matrix::zeros(polys.len(), cols.len());
        for (r, p) in polys.iter().enumerate() {
            for (m, c) in p.terms() {
                mat.set(r, index(m), *c);
            }
        }
        let rank = mat.rref(&f).len();
        let basis = (0..rank)
            .map(|r| {
                Poly::from_terms(
                    ring,
                    mat.row(r).iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (cols[j], c)),
                )
            })
            .collect();
        Ok(Subspace { ring, basis })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.basis.iter().filter_map(|p| p.degree()).max()
    }

    /// Every basis element homogeneous of one common degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.basis.first()?.degree()?;
        self.basis.iter().all(|p| p.is_homogeneous() && p.degree() == Some(d)).then_some(d)
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        let mut all = self.basis.clone();
        all.push(p.clone());
        Ok(Subspace::span(self.ring, &all)?.dim() == self.dim())
    }

    /// Span of the union.
    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        let mut all = self.basis.clone();
        all.extend(o.basis.iter().cloned());
        Subspace::span(self.ring, &all)
    }

    /// Degree-`d` parts of the basis elements, spanned.
    pub fn graded_piece(&self, d: u32) -> Result<Subspace> {
        let parts: Vec<Poly> = self.basis.iter().map(|p| p.homogeneous_part(d)).collect();
        Subspace::span(self.ring, &parts)
    }

    /// Leading forms: the span of the top-degree parts.
    pub fn leading_forms(&self) -> Result<Subspace> {
        let parts: Vec<Poly> =
            self.basis.iter().map(|p| p.homogeneous_part(p.degree().unwrap_or(0))).collect();
        Subspace::span(self.ring, &parts)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Subspace> {
        let imgs = self.basis.iter().map(f).collect::<Result<Vec<_>>>()?;
        let ring = imgs.first().map(|p| *p.ring()).unwrap_or(self.ring);
        Subspace::span(ring, &imgs)
    }
}
