//! Sorted-term polynomials and the Buchberger loop.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::{PrimeField, Scalar};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring};

/// Terms sorted strictly descending under the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OPoly {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl OPoly {
    pub fn from_poly(p: &Poly, ord: &MonomialOrder) -> Self {
        OPoly { terms: p.sorted_terms(ord) }
    }

    pub fn to_poly(&self, ring: Ring) -> Poly {
        Poly::from_terms(ring, self.terms.iter().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Monomial {
        self.terms[0].0
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn make_monic(&mut self, f: &PrimeField) {
        if let Some(&(_, c)) = self.terms.first() {
            if c != 1 {
                let inv = f.inv(c);
                for t in self.terms.iter_mut() {
                    t.1 = f.mul(t.1, inv);
                }
            }
        }
    }

    /// self - c * m * g
    pub fn sub_mul(&self, f: &PrimeField, ord: &MonomialOrder, c: Scalar, m: &Monomial, g: &OPoly) -> OPoly {
        let neg = f.neg(c);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &g.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, f.mul(neg, b[j].1)));
                j += 1;
                continue;
            }
            match ord.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, f.mul(neg, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].1, f.mul(neg, b[j].1));
                    if v != 0 {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        OPoly { terms: out }
    }
}

/// Full reduction of `h` by monic `basis`. When `quotients` is given, the multiples used
/// are accumulated there (one term map per basis element).
pub(crate) fn reduce(
    f: &PrimeField,
    ord: &MonomialOrder,
    h: &OPoly,
    basis: &[OPoly],
    mut quotients: Option<&mut Vec<BTreeMap<Monomial, Scalar>>>,
) -> OPoly {
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    let mut work = h.clone();
    while let Some(&(m, c)) = work.terms.first() {
        match basis.iter().position(|g| g.lm().divides(&m)) {
            Some(k) => {
                let q = basis[k].lm().quotient_of(&m);
                if let Some(qs) = quotients.as_deref_mut() {
                    let e = qs[k].entry(q).or_insert(0);
                    *e = f.add(*e, c);
                    if *e == 0 {
                        qs[k].remove(&q);
                    }
                }
                work = work.sub_mul(f, ord, c, &q, &basis[k]);
            }
            None => {
                rem.push((m, c));
                work.terms.remove(0);
            }
        }
    }
    OPoly { terms: rem }
}

pub(crate) fn s_poly(f: &PrimeField, ord: &MonomialOrder, a: &OPoly, b: &OPoly) -> OPoly {
    let l = a.lm().lcm(&b.lm());
    let ma = a.lm().quotient_of(&l);
    let mb = b.lm().quotient_of(&l);
    let lhs = OPoly { terms: a.terms.iter().map(|(m, c)| (m.mul(&ma), *c)).collect() };
    lhs.sub_mul(f, ord, 1, &mb, b)
}

/// Reduced Gröbner basis, monic, sorted ascending by leading monomial.
/// With `max_degree`, S-pairs whose lcm exceeds it are skipped (valid for homogeneous input).
pub(crate) fn buchberger(
    f: &PrimeField,
    ord: &MonomialOrder,
    gens: &[OPoly],
    max_degree: Option<u32>,
) -> Vec<OPoly> {
    let mut basis: Vec<OPoly> = Vec::new();
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let add = |h: OPoly,
                   basis: &mut Vec<OPoly>,
                   queue: &mut BTreeSet<(u32, usize, usize)>,
                   pending: &mut BTreeSet<(usize, usize)>| {
        let new = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let deg = g.lm().lcm(&h.lm()).degree();
            if max_degree.is_some_and(|d| deg > d) {
                continue;
            }
            queue.insert((deg, i, new));
            pending.insert((i, new));
        }
        basis.push(h);
    };

    let mut sorted: Vec<OPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    sorted.sort_by(|a, b| ord.cmp(&a.lm(), &b.lm()));
    for g in sorted {
        let mut h = reduce(f, ord, &g, &basis, None);
        if h.is_zero() {
            continue;
        }
        h.make_monic(f);
        if h.lm() == Monomial::ONE {
            return alloc::vec![h];
        }
        add(h, &mut basis, &mut queue, &mut pending);
    }

    while let Some(key) = queue.pop_first() {
        let (_, i, j) = key;
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(f, ord, &basis[i], &basis[j]);
        let mut h = reduce(f, ord, &s, &basis, None);
        if h.is_zero() {
            continue;
        }
        h.make_monic(f);
        if h.lm() == Monomial::ONE {
            return alloc::vec![h];
        }
        add(h, &mut basis, &mut queue, &mut pending);
    }
    interreduce(f, ord, basis)
}

/// Minimalize, reduce tails, sort ascending by leading monomial.
pub(crate) fn interreduce(f: &PrimeField, ord: &MonomialOrder, basis: Vec<OPoly>) -> Vec<OPoly> {
    let mut minimal: Vec<OPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, o)| {
            k != i && o.lm().divides(&g.lm()) && (o.lm() != g.lm() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| ord.cmp(&a.lm(), &b.lm()));
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let head = minimal[i].terms[0];
        let tail = OPoly { terms: minimal[i].terms[1..].to_vec() };
        let others: Vec<OPoly> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let mut r = reduce(f, ord, &tail, &others, None);
        r.terms.insert(0, head);
        r.make_monic(f);
        out.push(r);
    }
    out
}
