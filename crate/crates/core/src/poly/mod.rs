//! Polynomials over F_p in primal (T, S) and dual (T*, S*) rings.

mod monomial;
mod ops;
mod parse;
mod subspace;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use monomial::{
    binomial, count_monomials, monomials_in_degrees, monomials_of_degree, BaseOrder, Monomial,
    MonomialOrder, MAX_VARS, ORDER_SLOTS,
};
pub use ops::{
    complete_to_basis, contract, divisibility_order, divisibility_order_subspace, hom_extend,
    hom_extend_poly, linear_substitute, triangle, triangle_subspace,
};
pub use parse::{parse_lines, parse_poly, scan_variables, VariableScan};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Flavor {
    Primal,
    Dual,
}

/// A polynomial ring descriptor. Variable `i` is printed with index `first_index + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: u8,
    first_index: u8,
    flavor: Flavor,
    field: PrimeField,
}

impl Ring {
    pub fn new(field: PrimeField, flavor: Flavor, nvars: usize, first_index: usize) -> Result<Self> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::Precondition(alloc::format!(
                "ring must have between 1 and {MAX_VARS} variables, got {nvars}"
            )));
        }
        Ok(Ring { nvars: nvars as u8, first_index: first_index as u8, flavor, field })
    }

    /// T = k[x0..x_{n}]: `n + 1` variables starting at index 0.
    pub fn projective(field: PrimeField, n: usize) -> Result<Self> {
        Ring::new(field, Flavor::Primal, n + 1, 0)
    }

    /// S = k[x1..xn].
    pub fn affine(field: PrimeField, n: usize) -> Result<Self> {
        Ring::new(field, Flavor::Primal, n, 1)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn first_index(&self) -> usize {
        self.first_index as usize
    }

    #[inline]
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn dual(&self) -> Ring {
        Ring { flavor: Flavor::Dual, ..*self }
    }

    pub fn primal(&self) -> Ring {
        Ring { flavor: Flavor::Primal, ..*self }
    }

    /// Adds a new variable in slot 0, named with index 0.
    pub fn widened(&self) -> Result<Ring> {
        Ring::new(self.field, self.flavor, self.nvars() + 1, 0)
    }

    /// Drops slot 0; remaining variables keep their printed indices.
    pub fn narrowed(&self) -> Result<Ring> {
        Ring::new(self.field, self.flavor, self.nvars() - 1, self.first_index() + 1)
    }

    pub fn with_field(&self, field: PrimeField) -> Ring {
        Ring { field, ..*self }
    }

    /// Same ring with one extra trailing variable.
    pub fn with_extra_variable(&self) -> Result<Ring> {
        Ring::new(self.field, self.flavor, self.nvars() + 1, self.first_index())
    }

    pub fn var_name(&self, i: usize) -> String {
        let c = match self.flavor {
            Flavor::Primal => 'x',
            Flavor::Dual => 'a',
        };
        alloc::format!("{c}{}", i + self.first_index())
    }

    /// Same variables and field, any flavor.
    pub fn same_shape(&self, o: &Ring) -> bool {
        self.nvars == o.nvars && self.first_index == o.first_index && self.field == o.field
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(ring: Ring) -> Self {
        Poly { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: Scalar) -> Self {
        Poly::term(ring, Monomial::ONE, c)
    }

    pub fn one(ring: Ring) -> Self {
        Poly::constant(ring, 1)
    }

    pub fn term(ring: Ring, m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn var(ring: Ring, i: usize) -> Self {
        Poly::term(ring, Monomial::var(i), 1)
    }

    /// Linear form with the given coefficient vector.
    pub fn linear(ring: Ring, coeffs: &[Scalar]) -> Self {
        let mut p = Poly::zero(ring);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), c);
        }
        p
    }

    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.ring.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c == 0 {
            return;
        }
        let f = self.ring.field;
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = f.add(*v, c);
                if *v == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            ring: self.ring,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, *c)).collect(),
        }
    }

    fn check_same(&self, o: &Poly) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch(alloc::format!("{:?} vs {:?}", self.ring, o.ring)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Poly) -> Result<Poly> {
        self.check_same(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, *c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Poly) -> Result<Poly> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: Scalar) -> Poly {
        let f = self.ring.field;
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly { ring: self.ring, terms: self.terms.iter().map(|(m, v)| (*m, f.mul(*v, c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: Scalar) -> Poly {
        let f = self.ring.field;
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly { ring: self.ring, terms: self.terms.iter().map(|(k, v)| (k.mul(m), f.mul(*v, c))).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Result<Poly> {
        self.check_same(o)?;
        let f = self.ring.field;
        let mut r = Poly::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), f.mul(*c1, *c2));
            }
        }
        Ok(r)
    }

    pub fn pow(&self, e: u32) -> Result<Poly> {
        let mut r = Poly::one(self.ring);
        for _ in 0..e {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// Same terms in another ring of the same variable count.
    pub fn in_ring(&self, ring: Ring) -> Result<Poly> {
        if ring.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch(alloc::format!(
                "cannot move {} variables into {}",
                self.ring.nvars(),
                ring.nvars()
            )));
        }
        if ring.field() != self.field() {
            return Err(Error::RingMismatch("different fields".into()));
        }
        Ok(Poly { ring, terms: self.terms.clone() })
    }

    /// Embed into the ring with an extra slot-0 variable (S -> T).
    pub fn widen(&self) -> Result<Poly> {
        let ring = self.ring.widened()?;
        Ok(Poly { ring, terms: self.terms.iter().map(|(m, c)| (m.shifted_up(), *c)).collect() })
    }

    /// Substitute 1 for the slot-0 variable and drop it (T -> S).
    pub fn set_first_to_one(&self) -> Result<Poly> {
        let ring = self.ring.narrowed()?;
        let mut r = Poly::zero(ring);
        for (m, c) in &self.terms {
            r.add_term(m.shifted_down(), *c);
        }
        Ok(r)
    }

    /// Substitute 1 for variable `v` (kept in the ring).
    pub fn set_var_to_one(&self, v: usize) -> Poly {
        let mut r = Poly::zero(self.ring);
        for (m, c) in &self.terms {
            let mut k = *m;
            k.set(v, 0);
            r.add_term(k, *c);
        }
        r
    }

    /// Homogenize with respect to slot 0 up to degree `d` (slot 0 must be unused).
    pub fn homogenize_in_first(&self, d: u32) -> Poly {
        let mut r = Poly::zero(self.ring);
        for (m, c) in &self.terms {
            let mut k = *m;
            k.set(0, d - m.degree());
            r.add_term(k, *c);
        }
        r
    }

    /// Terms sorted by the order, largest first.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<(Monomial, Scalar)> = self.terms.iter().map(|(m, c)| (*m, *c)).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        v
    }

    pub fn leading(&self, ord: &MonomialOrder) -> Option<(Monomial, Scalar)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0)).map(|(m, c)| (*m, *c))
    }

    /// Scale so that the leading coefficient under `ord` is 1.
    pub fn monic(&self, ord: &MonomialOrder) -> Poly {
        match self.leading(ord) {
            Some((_, c)) => self.scale(self.field().inv(c)),
            None => self.clone(),
        }
    }

    /// Printed with divided powers: x^[v] means x^v / v!.
    pub fn to_divided_string(&self) -> String {
        let f = self.ring.field;
        let mut out = String::new();
        for (m, c) in self.sorted_terms(&MonomialOrder::Grevlex) {
            let fact = (0..self.ring.nvars()).fold(1, |acc, i| f.mul(acc, f.factorial(m.get(i))));
            write_term(&mut out, &self.ring, &m, f.mul(c, fact), true);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn write_term(out: &mut String, ring: &Ring, m: &Monomial, c: Scalar, divided: bool) {
    use core::fmt::Write;
    let v = ring.field.signed(c);
    let (neg, abs) = (v < 0, v.unsigned_abs());
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mut first = true;
    if abs != 1 || *m == Monomial::ONE {
        let _ = write!(out, "{abs}");
        first = false;
    }
    for i in 0..ring.nvars() {
        let e = m.get(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&ring.var_name(i));
        if divided && e > 1 {
            let _ = write!(out, "^[{e}]");
        } else if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (m, c) in self.sorted_terms(&MonomialOrder::Grevlex) {
            write_term(&mut out, &self.ring, &m, c, false);
        }
        if out.is_empty() {
            out.push('0');
        }
        fm.write_str(&out)
    }
}
