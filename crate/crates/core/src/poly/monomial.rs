use alloc::vec::Vec;
use core::cmp::Ordering;

/// Hard cap on variables per ring, tag variables included.
pub const MAX_VARS: usize = 16;

/// Exponent vector; unused slots stay zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u8; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.0[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.0[i] = e as u8;
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e as u8;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.0[i] += o.0[i];
        }
        m
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    #[inline]
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut m = *o;
        for i in 0..MAX_VARS {
            m.0[i] -= self.0[i];
        }
        m
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.0[i] = m.0[i].max(o.0[i]);
        }
        m
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Move every exponent up one slot (the S -> T widening).
    pub fn shifted_up(&self) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[1..].copy_from_slice(&self.0[..MAX_VARS - 1]);
        m
    }

    /// Drop slot 0 and move the rest down.
    pub fn shifted_down(&self) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[..MAX_VARS - 1].copy_from_slice(&self.0[1..]);
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BaseOrder {
    Grevlex,
    Grlex,
    Lex,
}

/// Monomial orders; variable 0 is the most significant variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum MonomialOrder {
    Grevlex,
    Grlex,
    Lex,
    /// Compare the part without variable 0 by the base order, then the exponent of variable 0.
    HomProduct(BaseOrder),
    /// Compare the exponent of the given variable first, then grevlex on the rest.
    Eliminate(u8),
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for i in (0..MAX_VARS).rev() {
            if a.0[i] != b.0[i] {
                return b.0[i].cmp(&a.0[i]);
            }
        }
        Ordering::Equal
    })
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.0.cmp(&b.0)
}

fn base_cmp(base: BaseOrder, a: &Monomial, b: &Monomial) -> Ordering {
    match base {
        BaseOrder::Grevlex => grevlex(a, b),
        BaseOrder::Grlex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
        BaseOrder::Lex => lex(a, b),
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Grlex => base_cmp(BaseOrder::Grlex, a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::HomProduct(base) => {
                let (mut ra, mut rb) = (*a, *b);
                ra.0[0] = 0;
                rb.0[0] = 0;
                base_cmp(base, &ra, &rb).then_with(|| a.0[0].cmp(&b.0[0]))
            }
            MonomialOrder::Eliminate(v) => {
                let v = v as usize;
                a.0[v].cmp(&b.0[v]).then_with(|| {
                    let (mut ra, mut rb) = (*a, *b);
                    ra.0[v] = 0;
                    rb.0[v] = 0;
                    grevlex(&ra, &rb)
                })
            }
        }
    }

    /// Whether larger total degree always means a larger monomial.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::Grlex)
    }

    /// Small integer identifying the order, used to index caches.
    pub fn id(&self) -> usize {
        match *self {
            MonomialOrder::Grevlex => 0,
            MonomialOrder::Grlex => 1,
            MonomialOrder::Lex => 2,
            MonomialOrder::HomProduct(BaseOrder::Grevlex) => 3,
            MonomialOrder::HomProduct(BaseOrder::Grlex) => 4,
            MonomialOrder::HomProduct(BaseOrder::Lex) => 5,
            MonomialOrder::Eliminate(v) => 6 + v as usize,
        }
    }
}

pub const ORDER_SLOTS: usize = 6 + MAX_VARS;

fn push_monomials(nvars: usize, d: u32, var: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
    if var + 1 == nvars {
        cur.set(var, d);
        out.push(*cur);
        cur.set(var, 0);
        return;
    }
    for e in (0..=d).rev() {
        cur.set(var, e);
        push_monomials(nvars, d - e, var + 1, cur, out);
    }
    cur.set(var, 0);
}

/// All monomials of degree `d` in `nvars` variables, grevlex-descending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    let mut cur = Monomial::ONE;
    push_monomials(nvars, d, 0, &mut cur, &mut out);
    out.sort_by(|a, b| grevlex(b, a));
    out
}

/// Monomials of degree `lo..=hi`, each degree block grevlex-descending, blocks by degree ascending.
pub fn monomials_in_degrees(nvars: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    (lo..=hi).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// dim of the degree-d part of a polynomial ring in `nvars` variables.
pub fn count_monomials(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return (d == 0) as usize;
    }
    binomial(d as usize + nvars - 1, nvars - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn counts_match_enumeration() {
        for n in 1..5 {
            for d in 0..5 {
                assert_eq!(monomials_of_degree(n, d).len(), count_monomials(n, d));
            }
        }
    }

    #[test]
    fn grevlex_quadrics() {
        let q = monomials_of_degree(3, 2);
        let exps: Vec<[u8; 3]> = q.iter().map(|m| [m.0[0], m.0[1], m.0[2]]).collect();
        assert_eq!(exps, vec![[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]]);
    }

    #[test]
    fn hom_product_breaks_ties_by_variable_zero() {
        let o = MonomialOrder::HomProduct(BaseOrder::Grevlex);
        let a = Monomial::from_exps(&[2, 1]);
        let b = Monomial::from_exps(&[0, 1]);
        let c = Monomial::from_exps(&[0, 2]);
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
        assert_eq!(o.cmp(&a, &c), Ordering::Less);
    }
}
