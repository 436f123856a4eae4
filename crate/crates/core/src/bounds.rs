//! Cactus-rank upper bounds, exact border cactus rank for re-homogenized data, a weak
//! obstruction to small border cactus rank, and apolarity certificates.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::apolar::{ann_graded, ann_inhom, apolar_dim, catalecticant, graded_hilbert, graded_hilbert_subspace};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{contract, count_monomials, hom_extend_poly, Flavor, Poly, Ring, Subspace};

/// The cap h_r(a) = min(dim T*_a, r) and the shape rules of a standard Hilbert function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StandardHFSpec {
    pub r: usize,
    /// n + 1.
    pub nvars: usize,
}

impl StandardHFSpec {
    pub fn new(r: usize, nvars: usize) -> Self {
        StandardHFSpec { r, nvars }
    }

    pub fn cap(&self, a: u32) -> usize {
        count_monomials(self.nvars, a).min(self.r)
    }

    /// Whether `h` (extended by its last value, or by r if shorter) is standard:
    /// nondecreasing, once flat equal to r from there on, and under the cap.
    pub fn admits(&self, h: &[usize]) -> bool {
        for (a, &v) in h.iter().enumerate() {
            if v > self.cap(a as u32) {
                return false;
            }
            if let Some(&next) = h.get(a + 1) {
                if next < v {
                    return false;
                }
                if next == v && h[a..].iter().any(|&x| x != self.r) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ClaimKind {
    Upper,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HypothesisFlags {
    pub d2_ge_d1: bool,
    /// Top-degree form is not a power of a linear form (single polynomial only).
    pub top_not_linear_power: Option<bool>,
    pub r_gt_2d1: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    /// dim Apolar(W).
    pub r: usize,
    pub kind: ClaimKind,
    pub d1: u32,
    pub d2: u32,
    pub flags: HypothesisFlags,
    /// Generators of Ann(W)^hom, already checked to annihilate W^{hom,d2}.
    pub certificate: Vec<String>,
    /// Why an exact claim was withheld.
    pub refusal: Option<String>,
}

/// W^{hom,d2}; also defined for W of degree 0.
pub fn rehomogenize(w: &Subspace, d2: u32) -> Result<Subspace> {
    let d1 = w.max_degree().ok_or_else(|| Error::ZeroInput("zero subspace".into()))?;
    let ring = w.ring().widened()?;
    let imgs = w.basis().iter().map(|p| hom_extend_poly(p, d1, d2)).collect::<Result<Vec<_>>>()?;
    Subspace::span(ring, &imgs)
}

/// Whether every generator of `ideal` contracts every element of `v` to zero. This is only
/// the containment I ⊆ Ann(V); saturation and length are the caller's business.
pub fn apolarity_certificate(ideal: &Ideal, v: &Subspace) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroInput("apolarity certificate for the zero subspace".into()));
    }
    let (ri, rv) = (ideal.ring(), v.ring());
    if ri.flavor() != Flavor::Dual || rv.flavor() != Flavor::Primal || !ri.same_shape(rv) {
        return Err(Error::RingMismatch("certificate ideal and subspace live in unpaired rings".into()));
    }
    for g in ideal.generators() {
        for b in v.basis() {
            if !contract(g, b)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn flags(w: &Subspace, d2: u32, r: usize, single: bool) -> Result<HypothesisFlags> {
    let d1 = w.max_degree().unwrap();
    let top_not_linear_power = if single {
        let top = w.basis()[0].homogeneous_part(d1);
        Some(d1 > 0 && catalecticant(&top, 1)?.rank(w.ring().field()) >= 2)
    } else {
        None
    };
    Ok(HypothesisFlags { d2_ge_d1: d2 >= d1, top_not_linear_power, r_gt_2d1: r > 2 * d1 as usize })
}

fn upper(w: &Subspace, d2: u32, single: bool) -> Result<BoundReport> {
    if w.is_zero() {
        return Err(Error::ZeroInput("bounds of the zero subspace".into()));
    }
    let d1 = w.max_degree().unwrap();
    let r = apolar_dim(w)?;
    let ann = ann_inhom(w)?;
    let hom = Ideal::new(w.ring().dual(), ann.generators)?.homogenize()?;
    let v = rehomogenize(w, d2)?;
    if !apolarity_certificate(&hom, &v)? {
        return Err(Error::Internal("Ann(W)^hom does not annihilate W^{hom,d2}".into()));
    }
    Ok(BoundReport {
        r,
        kind: ClaimKind::Upper,
        d1,
        d2,
        flags: flags(w, d2, r, single)?,
        certificate: hom.generators().iter().map(|g| g.to_string()).collect(),
        refusal: None,
    })
}

/// cr(W^{hom,d2}) ≤ dim Apolar(W), with the certificate ideal verified.
pub fn cactus_upper(w: &Subspace, d2: u32) -> Result<BoundReport> {
    upper(w, d2, w.dim() == 1)
}

pub fn cactus_upper_poly(f: &Poly, d2: u32) -> Result<BoundReport> {
    upper(&Subspace::span(*f.ring(), core::slice::from_ref(f))?, d2, true)
}

/// Exact border cactus rank of W^{hom,d2} when the hypotheses allow it; otherwise the
/// upper bound with the reason for refusing.
pub fn border_cactus_exact(w: &Subspace, d2: u32) -> Result<BoundReport> {
    let single = w.dim() == 1;
    let mut rep = upper(w, d2, single)?;
    let d1 = rep.d1;
    let allowed = if rep.flags.d2_ge_d1 {
        Ok(())
    } else if single && d2 + 1 == d1 {
        if rep.flags.top_not_linear_power == Some(true) {
            Ok(())
        } else {
            Err("d2 = d1 - 1 needs a top-degree form that is not a power of a linear form".to_string())
        }
    } else if single {
        Err(format!(
            "d2 = {d2} is below d1 - 1 = {}; the bound can fail there (x1^[2] + x1*x2 at d2 = 0)",
            d1.saturating_sub(1)
        ))
    } else {
        Err(format!("a subspace needs d2 >= d1 = {d1}"))
    };
    match allowed {
        Ok(()) => {
            // the graded Hilbert function of W^{hom,d2} is a lower bound for the border
            // cactus rank, so it may never exceed r
            let v = rehomogenize(w, d2)?;
            let hf = graded_hilbert_subspace(&v)?;
            if hf.values.iter().any(|&h| h > rep.r) {
                return Err(Error::Internal(format!(
                    "graded Hilbert function {:?} exceeds the apolar length {}",
                    hf.values, rep.r
                )));
            }
            rep.kind = ClaimKind::Exact;
        }
        Err(reason) => rep.refusal = Some(reason),
    }
    Ok(rep)
}

pub fn border_cactus_exact_poly(f: &Poly, d2: u32) -> Result<BoundReport> {
    border_cactus_exact(&Subspace::span(*f.ring(), core::slice::from_ref(f))?, d2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ObstructionOutcome {
    /// Some value of H exceeds r.
    AboveCap { degree: u32, value: usize },
    /// H(e) = r forces J_e = (Ann F)_e, but T*_1·(Ann F)_e is already too big in degree e+1.
    ForcedGrowth { degree: u32, product_dim: usize, allowed: usize },
    /// Not obstructed by these tests; nothing is claimed about feasibility.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ObstructionReport {
    pub r: usize,
    pub hilbert: Vec<usize>,
    pub outcome: ObstructionOutcome,
}

impl ObstructionReport {
    pub fn obstructed(&self) -> bool {
        self.outcome != ObstructionOutcome::Inconclusive
    }
}

/// Tests whether no homogeneous J ⊆ Ann(F) can have an (r, n+1)-standard Hilbert function.
/// When obstructed, the border cactus rank of F exceeds r.
pub fn weak_obstruction(f: &Poly, r: usize) -> Result<ObstructionReport> {
    if !f.is_homogeneous() || f.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.degree().unwrap();
    let ring = *f.ring();
    let nv = ring.nvars();
    let hilbert = graded_hilbert(f)?.values;
    let h = |e: u32, hf: &[usize]| hf.get(e as usize).copied().unwrap_or(0);
    for e in 0..=d {
        let value = h(e, &hilbert);
        if value > r {
            return Ok(ObstructionReport { r, hilbert, outcome: ObstructionOutcome::AboveCap { degree: e, value } });
        }
    }
    let ann = ann_graded(f, d)?;
    let dual = ring.dual();
    for e in 0..=d {
        if h(e, &hilbert) != r {
            continue;
        }
        let product_dim = product_dimension(dual, &ann[e as usize])?;
        let allowed = count_monomials(nv, e + 1) - r;
        if product_dim > allowed {
            return Ok(ObstructionReport {
                r,
                hilbert,
                outcome: ObstructionOutcome::ForcedGrowth { degree: e, product_dim, allowed },
            });
        }
    }
    Ok(ObstructionReport { r, hilbert, outcome: ObstructionOutcome::Inconclusive })
}

/// dim T*_1 · span(gens).
fn product_dimension(ring: Ring, gens: &[Poly]) -> Result<usize> {
    let mut prods = Vec::with_capacity(gens.len() * ring.nvars());
    for g in gens {
        for v in 0..ring.nvars() {
            prods.push(g.mul(&Poly::var(ring, v))?);
        }
    }
    Ok(Subspace::span(ring, &prods)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{parse_lines, parse_poly};

    fn s(n: usize) -> Ring {
        Ring::affine(PrimeField::default(), n).unwrap()
    }

    fn t(n: usize) -> Ring {
        Ring::projective(PrimeField::default(), n).unwrap()
    }

    #[test]
    fn upper_bounds() {
        let r = s(3);
        let f = parse_poly("x1*x2*x3", &r).unwrap();
        assert_eq!(cactus_upper_poly(&f, 1).unwrap().r, 8);
        let r2 = s(2);
        let g = parse_poly("x1^[2] + x1*x2", &r2).unwrap();
        assert_eq!(cactus_upper_poly(&g, 0).unwrap().r, 4);
        let one = Subspace::span(r, &[Poly::one(r)]).unwrap();
        for d2 in 0..4 {
            let rep = cactus_upper(&one, d2).unwrap();
            assert_eq!(rep.r, 1);
            assert_eq!(rep.certificate, ["a3", "a2", "a1"]);
        }
    }

    #[test]
    fn exact_and_refusals() {
        let r = s(3);
        let f = parse_poly("x1*x2*x3", &r).unwrap();
        let rep = border_cactus_exact_poly(&f, 2).unwrap();
        assert_eq!((rep.kind, rep.r), (ClaimKind::Exact, 8));
        let g = parse_poly("x1^[2] + x1*x2", &s(2)).unwrap();
        let rep = border_cactus_exact_poly(&g, 0).unwrap();
        assert_eq!(rep.kind, ClaimKind::Upper);
        assert!(rep.refusal.unwrap().contains("below"));
        let sq = parse_poly("x1^2", &s(2)).unwrap();
        let rep = border_cactus_exact_poly(&sq, 1).unwrap();
        assert_eq!(rep.kind, ClaimKind::Upper);
        assert_eq!(rep.flags.top_not_linear_power, Some(false));
    }

    #[test]
    fn certificates() {
        let r = s(3);
        let f = parse_poly("x1*x2*x3", &r).unwrap();
        let ann = ann_inhom(&Subspace::span(r, &[f]).unwrap()).unwrap();
        let hom = Ideal::new(r.dual(), ann.generators).unwrap().homogenize().unwrap();
        let tr = t(3);
        let v = Subspace::span(tr, &[parse_poly("x0*x1*x2*x3", &tr).unwrap()]).unwrap();
        assert!(apolarity_certificate(&hom, &v).unwrap());
        let a0 = Ideal::new(tr.dual(), parse_lines("a0", &tr.dual()).unwrap()).unwrap();
        let p = Subspace::span(tr, &[parse_poly("x0^4", &tr).unwrap()]).unwrap();
        assert!(!apolarity_certificate(&a0, &p).unwrap());
    }

    #[test]
    fn obstruction_examples() {
        let r = t(6);
        let f = parse_poly("x0^6 + x1^2*x2^2*x3^2 + x4^3*x5^2*x6", &r).unwrap();
        let rep = weak_obstruction(&f, 14).unwrap();
        assert_eq!(rep.outcome, ObstructionOutcome::ForcedGrowth { degree: 3, product_dim: 197, allowed: 196 });
        let p = parse_poly("x0^5", &r).unwrap();
        assert!(!weak_obstruction(&p, 1).unwrap().obstructed());
        let q = parse_poly("x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2", &r).unwrap();
        assert_eq!(weak_obstruction(&q, 6).unwrap().outcome, ObstructionOutcome::AboveCap { degree: 1, value: 7 });
    }

    #[test]
    fn standard_shapes() {
        let spec = StandardHFSpec::new(14, 7);
        assert!(spec.admits(&[1, 7, 14, 14, 14]));
        assert!(!spec.admits(&[1, 7, 12, 14, 12]));
        assert!(!spec.admits(&[1, 7, 7, 14]));
        assert_eq!(spec.cap(1), 7);
        assert_eq!(spec.cap(3), 14);
    }
}
