//! Inverse systems: catalecticants, annihilators, apolar dimensions and Hilbert functions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Matrix};
use crate::field::Scalar;
use crate::groebner::Ideal;
use crate::poly::{
    count_monomials, monomials_in_degrees, monomials_of_degree, Flavor, Monomial, Poly, Ring,
    Subspace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum HilbertKind {
    Graded,
    Local,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HilbertData {
    pub values: Vec<usize>,
    pub kind: HilbertKind,
}

impl HilbertData {
    pub fn new(mut values: Vec<usize>, kind: HilbertKind) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertData { values, kind }
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn is(&self, expected: &[usize]) -> bool {
        self.values == expected
    }
}

/// Coefficient of x^{v-u} in α^u ⌟ (c x^v).
fn contraction_coeff(ring: &Ring, u: &Monomial, v: &Monomial, c: Scalar) -> Scalar {
    let f = ring.field();
    (0..ring.nvars()).fold(c, |acc, i| f.mul(acc, f.falling(v.get(i), u.get(i))))
}

/// Matrix of θ ↦ (θ ⌟ w)_{w ∈ basis} with columns indexed by `duals`.
/// Rows are (basis element, output monomial) pairs in first-seen order.
fn contraction_matrix(ring: &Ring, basis: &[Poly], duals: &[Monomial]) -> Matrix {
    let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (col, u) in duals.iter().enumerate() {
        for (b, w) in basis.iter().enumerate() {
            for (v, c) in w.terms() {
                if !u.divides(v) {
                    continue;
                }
                let key = (b, u.quotient_of(v));
                let next = index.len();
                let row = *index.entry(key).or_insert(next);
                entries.push((row, col, contraction_coeff(ring, u, v, *c)));
            }
        }
    }
    let f = ring.field();
    let mut m = Matrix::zeros(index.len(), duals.len());
    for (r, c, v) in entries {
        let cur = m.get(r, c);
        m.set(r, c, f.add(cur, v));
    }
    m
}

fn require_primal(ring: &Ring) -> Result<()> {
    if ring.flavor() != Flavor::Primal {
        return Err(Error::RingMismatch("expected a primal polynomial".into()));
    }
    Ok(())
}

/// The map T*_e → T_{d-e}, θ ↦ θ ⌟ G, in grevlex-descending monomial bases.
pub fn catalecticant(g: &Poly, e: u32) -> Result<Matrix> {
    require_primal(g.ring())?;
    let d = homogeneous_degree(g)?;
    if e > d {
        return Err(Error::Precondition(alloc::format!("catalecticant degree {e} exceeds {d}")));
    }
    let ring = g.ring();
    let n = ring.nvars();
    let rows = monomials_of_degree(n, d - e);
    let cols = monomials_of_degree(n, e);
    let row_index: BTreeMap<Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, u) in cols.iter().enumerate() {
        for (v, c) in g.terms() {
            if u.divides(v) {
                m.set(row_index[&u.quotient_of(v)], j, contraction_coeff(ring, u, v, *c));
            }
        }
    }
    Ok(m)
}

fn homogeneous_degree(g: &Poly) -> Result<u32> {
    if g.is_zero() {
        return Err(Error::ZeroInput("form is zero".into()));
    }
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(g.degree().unwrap())
}

/// Graded Hilbert function of T*/Ann(G): the catalecticant ranks.
pub fn graded_hilbert(g: &Poly) -> Result<HilbertData> {
    let d = homogeneous_degree(g)?;
    let f = *g.field();
    let values = (0..=d).map(|e| catalecticant(g, e).map(|m| m.rank(&f))).collect::<Result<Vec<_>>>()?;
    Ok(HilbertData::new(values, HilbertKind::Graded))
}

/// Graded Hilbert function of T*/Ann(V) for a subspace of forms of one degree.
pub fn graded_hilbert_subspace(v: &Subspace) -> Result<HilbertData> {
    let d = subspace_degree(v)?;
    let values = (0..=d).map(|e| stacked_rank(v, e)).collect::<Result<Vec<_>>>()?;
    Ok(HilbertData::new(values, HilbertKind::Graded))
}

fn stacked_rank(v: &Subspace, e: u32) -> Result<usize> {
    let cols = monomials_of_degree(v.ring().nvars(), e);
    Ok(contraction_matrix(v.ring(), v.basis(), &cols).rank(v.ring().field()))
}

fn subspace_degree(v: &Subspace) -> Result<u32> {
    require_primal(v.ring())?;
    if v.is_zero() {
        return Err(Error::ZeroInput("subspace is zero".into()));
    }
    v.homogeneous_degree().ok_or(Error::NotHomogeneous)
}

/// Basis of (Ann G)_e for each e ≤ up_to; entry e of the result is degree e.
pub fn ann_graded(g: &Poly, up_to: u32) -> Result<Vec<Vec<Poly>>> {
    let v = Subspace::span(*g.ring(), core::slice::from_ref(g))?;
    ann_graded_subspace(&v, up_to)
}

/// Per degree e ≤ up_to, a basis of {θ ∈ T*_e : θ ⌟ V = 0}.
pub fn ann_graded_subspace(v: &Subspace, up_to: u32) -> Result<Vec<Vec<Poly>>> {
    let d = subspace_degree(v)?;
    if up_to > d {
        return Err(Error::Precondition(alloc::format!("up_to {up_to} exceeds the degree {d}")));
    }
    let ring = v.ring();
    let dual = ring.dual();
    let f = ring.field();
    let mut out = Vec::new();
    for e in 0..=up_to {
        let cols = monomials_of_degree(ring.nvars(), e);
        let m = contraction_matrix(ring, v.basis(), &cols);
        let ker = kernel_basis(f, &m);
        out.push(ker.iter().map(|k| vector_to_poly(dual, &cols, k)).collect());
    }
    Ok(out)
}

pub(crate) fn vector_to_poly(ring: Ring, monos: &[Monomial], v: &[Scalar]) -> Poly {
    Poly::from_terms(ring, monos.iter().zip(v).map(|(m, c)| (*m, *c)))
}

#[derive(Clone, Debug)]
pub struct InhomAnnihilator {
    /// Kernel basis of the contraction map on S*_{≤m}, then all degree m+1 monomials.
    pub generators: Vec<Poly>,
    pub apolar_dim: usize,
    pub max_degree: u32,
}

/// Ann(W) for W ⊆ S_{≤m}, as the kernel of the full contraction map plus S*_{m+1}.
pub fn ann_inhom(w: &Subspace) -> Result<InhomAnnihilator> {
    require_primal(w.ring())?;
    if w.is_zero() {
        return Err(Error::ZeroInput("annihilator of the zero subspace".into()));
    }
    let ring = w.ring();
    let m = w.max_degree().unwrap();
    let dual = ring.dual();
    let cols = monomials_in_degrees(ring.nvars(), 0, m);
    let mat = contraction_matrix(ring, w.basis(), &cols);
    let ker = kernel_basis(ring.field(), &mat);
    let apolar_dim = cols.len() - ker.len();
    let mut generators: Vec<Poly> = ker.iter().map(|k| vector_to_poly(dual, &cols, k)).collect();
    generators.extend(monomials_of_degree(ring.nvars(), m + 1).into_iter().map(|u| Poly::term(dual, u, 1)));
    Ok(InhomAnnihilator { generators, apolar_dim, max_degree: m })
}

pub fn ann_inhom_poly(f: &Poly) -> Result<InhomAnnihilator> {
    ann_inhom(&Subspace::span(*f.ring(), core::slice::from_ref(f))?)
}

/// Ann(V) as an ideal. For homogeneous V of degree d the generators are the graded pieces
/// up to degree d, plus whatever degree-(d+1) monomials those fail to generate.
pub fn ann_ideal(v: &Subspace) -> Result<Ideal> {
    let dual = v.ring().dual();
    let Some(d) = v.homogeneous_degree() else {
        return Ideal::new(dual, ann_inhom(v)?.generators);
    };
    let gens: Vec<Poly> = ann_graded_subspace(v, d)?.into_iter().flatten().collect();
    let low = Ideal::new(dual, gens.clone())?;
    let gb = low.grevlex();
    let missing: Vec<Poly> = monomials_of_degree(dual.nvars(), d + 1)
        .into_iter()
        .filter(|m| gb.is_standard(m))
        .map(|m| Poly::term(dual, m, 1))
        .collect();
    if missing.is_empty() {
        return Ok(low);
    }
    Ideal::new(dual, gens.into_iter().chain(missing).collect())
}

/// dim S*/Ann(W).
pub fn apolar_dim(w: &Subspace) -> Result<usize> {
    require_primal(w.ring())?;
    if w.is_zero() {
        return Err(Error::ZeroInput("apolar dimension of the zero subspace".into()));
    }
    let ring = w.ring();
    let cols = monomials_in_degrees(ring.nvars(), 0, w.max_degree().unwrap());
    Ok(contraction_matrix(ring, w.basis(), &cols).rank(ring.field()))
}

/// Local Hilbert function of Apolar(W). With columns ordered by degree descending, the
/// pivot columns of degree k number rank(S*_{≥k}) − rank(S*_{≥k+1}) = codim E_k.
pub fn local_hilbert(w: &Subspace) -> Result<HilbertData> {
    require_primal(w.ring())?;
    if w.is_zero() {
        return Err(Error::ZeroInput("local Hilbert function of the zero subspace".into()));
    }
    let ring = w.ring();
    let m = w.max_degree().unwrap();
    let cols: Vec<Monomial> = (0..=m).rev().flat_map(|d| monomials_of_degree(ring.nvars(), d)).collect();
    let mut mat = contraction_matrix(ring, w.basis(), &cols);
    let mut values = vec![0usize; m as usize + 1];
    for c in mat.rref(ring.field()) {
        values[cols[c].degree() as usize] += 1;
    }
    Ok(HilbertData::new(values, HilbertKind::Local))
}

pub fn local_hilbert_poly(f: &Poly) -> Result<HilbertData> {
    local_hilbert(&Subspace::span(*f.ring(), core::slice::from_ref(f))?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Characterization {
    pub holds: bool,
    pub hilbert: Vec<usize>,
    /// Outcome of the structural route (cubic/quadric data), which must agree.
    pub structural: bool,
}

/// Whether Apolar(f) has local Hilbert function (1,6,6,1), checked twice: directly, and via
/// U = S*_2 ⌟ F3 having dimension 6, H(Apolar F3, 1) = 6 and F2 ∈ U·S1.
pub fn is_1661(f: &Poly) -> Result<Characterization> {
    require_primal(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroInput("is_1661 of zero".into()));
    }
    if f.degree().unwrap() > 3 {
        return Err(Error::Precondition("expected a polynomial of degree at most 3".into()));
    }
    let ring = *f.ring();
    let hf = local_hilbert_poly(f)?;
    let direct = hf.is(&[1, 6, 6, 1]);
    let f3 = f.homogeneous_part(3);
    let f2 = f.homogeneous_part(2);
    let structural = if f3.is_zero() {
        false
    } else {
        let dual = ring.dual();
        let quads: Vec<Poly> = monomials_of_degree(ring.nvars(), 2)
            .into_iter()
            .map(|u| crate::poly::contract(&Poly::term(dual, u, 1), &f3))
            .collect::<Result<_>>()?;
        let u = Subspace::span(ring, &quads)?;
        let rank1 = catalecticant(&f3, 1)?.rank(ring.field());
        if u.dim() != 6 || rank1 != 6 {
            false
        } else {
            let mut prods = Vec::new();
            for b in u.basis() {
                for i in 0..ring.nvars() {
                    prods.push(b.mul(&Poly::var(ring, i))?);
                }
            }
            Subspace::span(ring, &prods)?.contains(&f2)?
        }
    };
    if direct != structural {
        return Err(Error::Internal(alloc::format!(
            "(1,6,6,1) routes disagree on {f}: Hilbert function {:?}",
            hf.values
        )));
    }
    Ok(Characterization { holds: direct, hilbert: hf.values, structural })
}

/// Whether Apolar(W) has local Hilbert function (1,4,3) for a 3-dimensional W ⊆ S_{≤2},
/// cross-checked against the same property of the leading subspace W_2.
pub fn is_143(w: &Subspace) -> Result<Characterization> {
    require_primal(w.ring())?;
    if w.dim() != 3 {
        return Err(Error::Precondition(alloc::format!("expected dim W = 3, got {}", w.dim())));
    }
    if w.max_degree().unwrap() > 2 {
        return Err(Error::Precondition("expected W inside polynomials of degree at most 2".into()));
    }
    let hf = local_hilbert(w)?;
    let direct = hf.is(&[1, 4, 3]);
    let w2 = w.graded_piece(2)?;
    let structural = !w2.is_zero() && local_hilbert(&w2)?.is(&[1, 4, 3]);
    if direct != structural {
        return Err(Error::Internal(alloc::format!(
            "(1,4,3) routes disagree: Hilbert function {:?}",
            hf.values
        )));
    }
    Ok(Characterization { holds: direct, hilbert: hf.values, structural })
}

/// dim T*_e, exposed for reports.
pub fn dual_dim(nvars: usize, e: u32) -> usize {
    count_monomials(nvars, e)
}

/// Span of {θ ⌟ w}, the image side of the apolarity pairing.
pub fn contraction_span(w: &Subspace) -> Result<Subspace> {
    let ring = *w.ring();
    let dual = ring.dual();
    let m = w.max_degree().unwrap_or(0);
    let mut imgs = Vec::new();
    for u in monomials_in_degrees(ring.nvars(), 0, m) {
        let th = Poly::term(dual, u, 1);
        for b in w.basis() {
            imgs.push(crate::poly::contract(&th, b)?);
        }
    }
    Subspace::span(ring, &imgs)
}
