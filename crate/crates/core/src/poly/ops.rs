use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Flavor, Monomial, Poly, Subspace};
use crate::error::{Error, Result};
use crate::exactla::{invert, Matrix};
use crate::field::Scalar;

/// theta ⌟ f: on the plain monomial basis this is iterated partial differentiation.
pub fn contract(theta: &Poly, f: &Poly) -> Result<Poly> {
    let (rt, rf) = (theta.ring(), f.ring());
    if rt.flavor() != Flavor::Dual || rf.flavor() != Flavor::Primal || !rt.same_shape(rf) {
        return Err(Error::RingMismatch("contraction needs a dual and a primal ring of equal shape".into()));
    }
    let fld = *rf.field();
    let n = rf.nvars();
    let mut out = Poly::zero(*rf);
    for (u, cu) in theta.terms() {
        for (v, cv) in f.terms() {
            if !u.divides(v) {
                continue;
            }
            let mut c = fld.mul(*cu, *cv);
            for i in 0..n {
                c = fld.mul(c, fld.falling(v.get(i), u.get(i)));
            }
            out.add_term(u.quotient_of(v), c);
        }
    }
    Ok(out)
}

/// Scale the degree-j part by (d-j)!.
pub fn triangle(d: u32, f: &Poly) -> Result<Poly> {
    let fld = *f.field();
    fld.check_degree(d)?;
    if let Some(m) = f.degree() {
        if m > d {
            return Err(Error::Precondition(alloc::format!("degree {m} exceeds target {d}")));
        }
    }
    Ok(Poly::from_terms(
        *f.ring(),
        f.terms().map(|(m, c)| (*m, fld.mul(*c, fld.factorial(d - m.degree())))),
    ))
}

pub fn triangle_subspace(d: u32, w: &Subspace) -> Result<Subspace> {
    w.map(|p| triangle(d, p))
}

/// F_i -> F_i * x0^{d1+d2-i} / (d1+d2-i)! in the widened ring.
pub fn hom_extend_poly(f: &Poly, d1: u32, d2: u32) -> Result<Poly> {
    let fld = *f.field();
    fld.check_degree(d1 + d2)?;
    if let Some(m) = f.degree() {
        if m > d1 {
            return Err(Error::Precondition(alloc::format!("degree {m} exceeds d1 = {d1}")));
        }
    }
    let w = f.widen()?;
    let top = d1 + d2;
    Ok(Poly::from_terms(
        *w.ring(),
        w.terms().map(|(m, c)| {
            let k = top - m.degree();
            let mut mm = *m;
            mm.set(0, k);
            (mm, fld.mul(*c, fld.inv(fld.factorial(k))))
        }),
    ))
}

pub fn hom_extend(w: &Subspace, d1: u32, d2: u32) -> Result<Subspace> {
    if d1 < 1 {
        return Err(Error::Precondition("d1 must be at least 1".into()));
    }
    let ring = w.ring().widened()?;
    let imgs = w.basis().iter().map(|p| hom_extend_poly(p, d1, d2)).collect::<Result<Vec<_>>>()?;
    Subspace::span(ring, &imgs)
}

/// f(Mx): every variable x_j is replaced by sum_k M[j][k] x_k.
pub fn linear_substitute(f: &Poly, m: &Matrix) -> Result<Poly> {
    let ring = *f.ring();
    let n = ring.nvars();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
    }
    let fld = *ring.field();
    if m.rank(&fld) < n {
        return Err(Error::SingularMatrix);
    }
    let forms: Vec<Poly> = (0..n).map(|j| Poly::linear(ring, m.row(j))).collect();
    let mut powers: Vec<Vec<Poly>> = forms.iter().map(|l| vec![Poly::one(ring), l.clone()]).collect();
    let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (mono, c) in f.terms() {
        let mut prod = Poly::constant(ring, *c);
        for j in 0..n {
            let e = mono.get(j) as usize;
            if e == 0 {
                continue;
            }
            while powers[j].len() <= e {
                let next = powers[j].last().unwrap().mul(&forms[j])?;
                powers[j].push(next);
            }
            prod = prod.mul(&powers[j][e])?;
        }
        for (k, v) in prod.terms() {
            let e = acc.entry(*k).or_insert(0);
            *e = fld.add(*e, *v);
        }
    }
    Ok(Poly::from_terms(ring, acc))
}

/// Rows form a basis of the linear forms: `ell` first, then every standard basis vector
/// except the one at the first index where `ell` has a nonzero coefficient.
pub fn complete_to_basis(ell: &Poly) -> Result<Matrix> {
    let ring = *ell.ring();
    let n = ring.nvars();
    if ell.is_zero() || ell.degree() != Some(1) || !ell.is_homogeneous() {
        return Err(Error::Precondition("expected a nonzero linear form".into()));
    }
    let first: Vec<Scalar> = (0..n).map(|i| ell.coeff(&Monomial::var(i))).collect();
    let skip = first.iter().position(|&c| c != 0).unwrap();
    let mut rows = vec![first];
    for i in (0..n).filter(|&i| i != skip) {
        let mut e = vec![0; n];
        e[i] = 1;
        rows.push(e);
    }
    Matrix::from_rows(n, &rows)
}

/// Max e with ell^e | f.
pub fn divisibility_order(ell: &Poly, f: &Poly) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroInput("divisibility order of the zero polynomial".into()));
    }
    let b = complete_to_basis(ell)?;
    let binv = invert(f.field(), &b)?;
    let g = linear_substitute(f, &binv)?;
    Ok(g.terms().map(|(m, _)| m.get(0)).min().unwrap_or(0))
}

/// Minimum over a basis; basis-independent.
pub fn divisibility_order_subspace(ell: &Poly, v: &Subspace) -> Result<u32> {
    if v.is_zero() {
        return Err(Error::ZeroInput("divisibility order of the zero subspace".into()));
    }
    let mut best = u32::MAX;
    for p in v.basis() {
        best = best.min(divisibility_order(ell, p)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{parse_poly, Ring};

    fn t(n: usize) -> Ring {
        Ring::projective(PrimeField::default(), n).unwrap()
    }

    fn s(n: usize) -> Ring {
        Ring::affine(PrimeField::default(), n).unwrap()
    }

    #[test]
    fn contraction_examples() {
        let r = s(2);
        let f = parse_poly("x1^3 + x2", &r).unwrap();
        let th = parse_poly("a1^3", &r.dual()).unwrap();
        assert_eq!(contract(&th, &f).unwrap(), Poly::constant(r, 6));
        let x = parse_poly("x2", &r).unwrap();
        assert!(contract(&parse_poly("a1", &r.dual()).unwrap(), &x).unwrap().is_zero());
        let g = parse_poly("x1^[2] + x1*x2", &r).unwrap();
        let q = parse_poly("a1^2 - a1*a2", &r.dual()).unwrap();
        assert!(contract(&q, &g).unwrap().is_zero());
    }

    #[test]
    fn triangle_examples() {
        let r = s(3);
        let f = parse_poly("x1*x2*x3 + x1 + 1", &r).unwrap();
        assert_eq!(triangle(6, &f).unwrap(), parse_poly("6*x1*x2*x3 + 120*x1 + 720", &r).unwrap());
        let q = parse_poly("x1^2", &r).unwrap();
        assert_eq!(triangle(5, &q).unwrap(), parse_poly("6*x1^2", &r).unwrap());
        assert_eq!(triangle(2, &q).unwrap(), q);
        assert!(triangle(1, &q).is_err());
    }

    #[test]
    fn hom_extend_examples() {
        let r = s(3);
        let f = parse_poly("x1*x2*x3", &r).unwrap();
        assert_eq!(hom_extend_poly(&f, 3, 1).unwrap(), parse_poly("x0*x1*x2*x3", &t(3)).unwrap());
        let one = Poly::one(r);
        assert_eq!(hom_extend_poly(&one, 1, 0).unwrap(), parse_poly("x0", &t(3)).unwrap());
    }

    #[test]
    fn substitution_examples() {
        let r = t(1);
        let f = parse_poly("x0^2*x1", &r).unwrap();
        let swap = Matrix::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(linear_substitute(&f, &swap).unwrap(), parse_poly("x1^2*x0", &r).unwrap());
        assert_eq!(linear_substitute(&f, &Matrix::identity(2)).unwrap(), f);
        let shear = Matrix::from_rows(2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let sq = parse_poly("x0^2", &r).unwrap();
        assert_eq!(
            linear_substitute(&sq, &shear).unwrap(),
            parse_poly("x0^2 + 2*x0*x1 + x1^2", &r).unwrap()
        );
        assert_eq!(linear_substitute(&sq, &Matrix::zeros(2, 2)), Err(Error::SingularMatrix));
    }

    #[test]
    fn divisibility_examples() {
        let r = t(2);
        let p = |x| parse_poly(x, &r).unwrap();
        assert_eq!(divisibility_order(&p("x0"), &p("x0^3*x1")).unwrap(), 3);
        assert_eq!(divisibility_order(&p("x0 + x1"), &p("x2")).unwrap(), 0);
        let v = Subspace::span(r, &[p("x0^2*x1"), p("x0^3")]).unwrap();
        assert_eq!(divisibility_order_subspace(&p("x0"), &v).unwrap(), 2);
        let g = p("x0^2 + 2*x0*x1 + x1^2").mul(&p("x2")).unwrap();
        assert_eq!(divisibility_order(&p("x0 + x1"), &g).unwrap(), 2);
    }
}
