//! Property checks shared by the proptest suites and the acceptance run.

use cactus_core::apolar::{ann_graded_subspace, ann_ideal, apolar_dim, is_143, is_1661};
use cactus_core::bounds::rehomogenize;
use cactus_core::groebner::Ideal;
use cactus_core::poly::{hom_extend_poly, monomials_of_degree, triangle, Monomial, Poly, Ring};

use super::{field, oracle, CubicSpec, JSpec, QuadSpec, WSpec};

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

/// H(T*/I^hom, e) = #{monomials of degree ≤ e outside LT(I)} for a degree-compatible order.
pub fn homogenization_hf(w: &WSpec) -> Check {
    let ideal = ann_ideal(&w.subspace()).map_err(e)?;
    let hom = ideal.homogenize().map_err(e)?;
    let gb = ideal.grevlex();
    let mut below = 0;
    for deg in 0..=w.deg + 3 {
        below += gb.count_standard(deg);
        let h = hom.hf_graded_quotient(deg).map_err(e)?;
        ensure(h == below, || format!("{w:?}: H({deg}) = {h}, standard monomials up to {deg}: {below}"))?;
    }
    Ok(())
}

/// For e ≥ d1 the Hilbert function of T*/Ann(W)^hom equals dim Apolar(W).
pub fn stabilization(w: &WSpec) -> Check {
    let v = w.subspace();
    let r = apolar_dim(&v).map_err(e)?;
    let hom = ann_ideal(&v).map_err(e)?.homogenize().map_err(e)?;
    for deg in w.deg..=w.deg + 3 {
        let h = hom.hf_graded_quotient(deg).map_err(e)?;
        ensure(h == r, || format!("{w:?}: H({deg}) = {h} but dim Apolar = {r}"))?;
    }
    Ok(())
}

/// Ann(W)^hom ⊆ Ann(W^{hom,d2}), with equal parts in degrees ≤ d2.
pub fn low_degree_agreement(w: &WSpec, d2: u32) -> Check {
    let v = w.subspace();
    let a = ann_ideal(&v).map_err(e)?.homogenize().map_err(e)?;
    let vh = rehomogenize(&v, d2).map_err(e)?;
    let b = ann_ideal(&vh).map_err(e)?;
    ensure(b.contains_ideal(&a), || format!("{w:?}, d2 = {d2}: Ann(W)^hom not inside Ann(W^hom)"))?;
    let pieces = ann_graded_subspace(&vh, d2.min(vh.homogeneous_degree().unwrap())).map_err(e)?;
    for (deg, piece) in pieces.iter().enumerate() {
        let ha = a.hf_graded_quotient(deg as u32).map_err(e)?;
        let hb = b.hf_graded_quotient(deg as u32).map_err(e)?;
        ensure(ha == hb, || format!("{w:?}, d2 = {d2}: degree {deg} parts have codimensions {ha} and {hb}"))?;
        ensure(piece.iter().all(|t| a.contains(t)), || format!("{w:?}, d2 = {d2}: degree {deg} element outside Ann^hom"))?;
    }
    Ok(())
}

/// (I^hom : α0) = I^hom.
pub fn saturation(w: &WSpec) -> Check {
    let hom = ann_ideal(&w.subspace()).map_err(e)?.homogenize().map_err(e)?;
    let a0 = Poly::var(*hom.ring(), 0);
    let q = hom.quotient(&a0).map_err(e)?;
    ensure(q.same_ideal(&hom), || format!("{w:?}: (I^hom : a0) is larger than I^hom"))
}

/// H(S*/J^c, k), J^c = J ∩ S*, as the rank of the normal forms of the α0-free monomials of degree k.
fn contraction_hf(j: &Ideal, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let ring = *j.ring();
    let gb = j.grevlex();
    let nf: Vec<Poly> = monomials_of_degree(ring.nvars(), k as u32)
        .into_iter()
        .filter(|m| m.get(0) == 0)
        .map(|m| gb.normal_form(&Poly::term(ring, m, 1)))
        .collect();
    let monos: Vec<Monomial> = monomials_of_degree(ring.nvars(), k as u32);
    let rows: Vec<Vec<u32>> = nf.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    oracle::rank(rows, ring.field().p())
}

/// H(T*/J, e) ≤ Σ_{i<d} H(S*/J^c, e − i) when α0^d + ρ ∈ J.
pub fn hf_inequality(spec: &JSpec) -> Check {
    let j = Ideal::new(spec.ring(), spec.generators()).map_err(e)?;
    for deg in 0..=spec.d + 5 {
        let lhs = j.hf_graded_quotient(deg).map_err(e)?;
        let rhs: usize = (0..spec.d).map(|i| contraction_hf(&j, deg as i64 - i as i64)).sum();
        ensure(lhs <= rhs, || format!("{spec:?}: H(T*/J, {deg}) = {lhs} > {rhs}"))?;
    }
    Ok(())
}

/// (f▼(d1+d2))^{hom,d2} = x0^{d1+d2−deg f}·f^hom.
pub fn remark_identity(n: usize, d1: u32, d2: u32, c: &[u32]) -> Check {
    let ring = Ring::affine(field(), n).unwrap();
    let f = super::poly_on(ring, 0, d1, c);
    if f.is_zero() {
        return Ok(());
    }
    let lhs = hom_extend_poly(&triangle(d1 + d2, &f).map_err(e)?, d1, d2).map_err(e)?;
    let deg = f.degree().unwrap();
    let fhom = f.widen().map_err(e)?.homogenize_in_first(deg);
    let x0 = Poly::var(*fhom.ring(), 0).pow(d1 + d2 - deg).map_err(e)?;
    let rhs = fhom.mul(&x0).map_err(e)?;
    ensure(lhs == rhs, || format!("f = {f}, d1 = {d1}, d2 = {d2}: {lhs} vs {rhs}"))
}

/// The direct and structural (1,6,6,1) routes agree, and the direct route matches the E_k oracle.
pub fn routes_1661(spec: &CubicSpec) -> Check {
    let f = spec.poly();
    let ch = is_1661(&f).map_err(e)?;
    ensure(ch.holds == ch.structural, || format!("{spec:?}: routes disagree"))?;
    let v = cactus_core::poly::Subspace::span(*f.ring(), &[f.clone()]).map_err(e)?;
    let naive = oracle::local_hilbert_ek(&v);
    ensure(naive == ch.hilbert, || format!("{spec:?}: E_k oracle gives {naive:?}, library {:?}", ch.hilbert))?;
    let expected = spec.kind == 0;
    ensure(ch.holds == expected, || format!("{spec:?}: expected {expected}, got HF {:?}", ch.hilbert))
}

/// Same for (1,4,3); `None` when the three elements happen to be dependent.
pub fn routes_143(spec: &QuadSpec) -> Option<Check> {
    let w = spec.subspace();
    if w.dim() != 3 {
        return None;
    }
    Some((|| {
        let ch = is_143(&w).map_err(e)?;
        ensure(ch.holds == ch.structural, || format!("{spec:?}: routes disagree"))?;
        let naive = oracle::local_hilbert_ek(&w);
        ensure(naive == ch.hilbert, || format!("{spec:?}: E_k oracle gives {naive:?}, library {:?}", ch.hilbert))?;
        let expected = spec.kind == 0;
        ensure(ch.holds == expected, || format!("{spec:?}: expected {expected}, got HF {:?}", ch.hilbert))
    })())
}
