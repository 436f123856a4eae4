//! Deliberately naive reference computations. Nothing here calls the library's linear
//! algebra or contraction code.

use std::collections::BTreeMap;

use cactus_core::poly::{monomials_in_degrees, monomials_of_degree, Monomial, Poly, Subspace};

fn inv(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Row echelon form in place; returns pivot columns.
fn echelon(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(s) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, s);
        let k = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * k % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: Vec<Vec<u32>>, p: u32) -> usize {
    let mut m: Vec<Vec<u64>> = rows.into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect();
    echelon(&mut m, p as u64).len()
}

/// Kernel of the matrix (rows × cols), as vectors of length cols.
pub fn kernel(rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = rows;
    let pivots = echelon(&mut m, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

/// α^a ⌟ x^b = b!/(b−a)! x^{b−a}, or nothing when a does not divide b.
pub fn contract_mono(a: &Monomial, b: &Monomial, nvars: usize, p: u64) -> Option<(Monomial, u64)> {
    let mut exps = Vec::with_capacity(nvars);
    let mut c = 1u64;
    for i in 0..nvars {
        let (ai, bi) = (a.get(i), b.get(i));
        if ai > bi {
            return None;
        }
        for t in (bi - ai + 1)..=bi {
            c = c * t as u64 % p;
        }
        exps.push(bi - ai);
    }
    Some((Monomial::from_exps(&exps), c))
}

/// Rows: one per (basis element, output monomial); columns: θ ∈ `cols`.
fn contraction_rows(basis: &[Poly], cols: &[Monomial], nvars: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: BTreeMap<(usize, Monomial), Vec<u64>> = BTreeMap::new();
    for (gi, g) in basis.iter().enumerate() {
        for (j, a) in cols.iter().enumerate() {
            for (b, &c) in g.terms() {
                if let Some((m, k)) = contract_mono(a, b, nvars, p) {
                    let row = rows.entry((gi, m)).or_insert_with(|| vec![0; cols.len()]);
                    row[j] = (row[j] + k * c as u64) % p;
                }
            }
        }
    }
    rows.into_values().collect()
}

/// H(Apolar(W), k) = codim in S*_k of the degree-k parts of {θ ∈ S*_{k..=m} : θ ⌟ W = 0}.
pub fn local_hilbert_ek(w: &Subspace) -> Vec<usize> {
    let nvars = w.ring().nvars();
    let p = w.ring().field().p() as u64;
    let m = w.max_degree().unwrap();
    let mut out = Vec::new();
    for k in 0..=m {
        let cols = monomials_in_degrees(nvars, k, m);
        let kdim = monomials_of_degree(nvars, k).len();
        let ker = kernel(contraction_rows(w.basis(), &cols, nvars, p), cols.len(), p);
        let proj: Vec<Vec<u32>> =
            ker.iter().map(|v| cols.iter().zip(v).filter(|(c, _)| c.degree() == k).map(|(_, &x)| x as u32).collect()).collect();
        let e_k = if proj.is_empty() { 0 } else { rank(proj, p as u32) };
        out.push(kdim - e_k);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// dim of span{α^a ⌟ w : a, w ∈ basis}.
pub fn contraction_span_dim(w: &Subspace) -> usize {
    let nvars = w.ring().nvars();
    let p = w.ring().field().p() as u64;
    let m = w.max_degree().unwrap();
    let monos = monomials_in_degrees(nvars, 0, m);
    let index: BTreeMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for a in &monos {
        for g in w.basis() {
            let mut v = vec![0u32; monos.len()];
            for (b, &c) in g.terms() {
                if let Some((m, k)) = contract_mono(a, b, nvars, p) {
                    let i = index[&m];
                    v[i] = ((v[i] as u64 + k * c as u64) % p) as u32;
                }
            }
            rows.push(v);
        }
    }
    rank(rows, p as u32)
}

/// Graded HF of T*/Ann(V) for forms of degree d: rank of the stacked contraction map in each degree.
pub fn graded_hilbert_naive(v: &Subspace, d: u32) -> Vec<usize> {
    let nvars = v.ring().nvars();
    let p = v.ring().field().p() as u64;
    let mut out: Vec<usize> = (0..=d)
        .map(|e| {
            let cols = monomials_of_degree(nvars, e);
            let rows = contraction_rows(v.basis(), &cols, nvars, p);
            rank(rows.into_iter().map(|r| r.into_iter().map(|x| x as u32).collect()).collect(), p as u32)
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Does every polynomial of `ideal_gens` (dual) kill every basis element of V? Naive contraction.
pub fn annihilates(gens: &[Poly], v: &Subspace) -> bool {
    let nvars = v.ring().nvars();
    let p = v.ring().field().p() as u64;
    gens.iter().all(|th| {
        v.basis().iter().all(|g| {
            let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
            for (a, &x) in th.terms() {
                for (b, &y) in g.terms() {
                    if let Some((m, k)) = contract_mono(a, b, nvars, p) {
                        let e = acc.entry(m).or_insert(0);
                        *e = (*e + k * x as u64 % p * y as u64) % p;
                    }
                }
            }
            acc.values().all(|&c| c == 0)
        })
    })
}

/// dim Hom(I, A) for A = R/I of length L supported at the origin, by brute force over
/// generator images: φ is fixed by images of the given generators, subject to all
/// relations Σ c_j g_j = 0 with c_j ranging over monomials up to degree `deg`.
/// Only meant for two variables and tiny lengths.
pub fn tangent_brute(gens: &[Poly], std_monos: &[Monomial], nf: impl Fn(&Poly) -> Poly, deg: u32) -> usize {
    let ring = *gens[0].ring();
    let p = ring.field().p() as u64;
    let nvars = ring.nvars();
    let l = std_monos.len();
    let idx: BTreeMap<Monomial, usize> = std_monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let coords = |f: &Poly| -> Vec<u64> {
        let r = nf(f);
        let mut v = vec![0u64; l];
        for (m, &c) in r.terms() {
            v[idx[m]] = c as u64;
        }
        v
    };
    let mults = monomials_in_degrees(nvars, 0, deg);
    let k = gens.len();
    // Relations: kernel of (c_{j,u}) ↦ Σ_j Σ_u c_{j,u} u g_j, as vectors in the monomial basis up to degree.
    let top = deg + gens.iter().map(|g| g.degree().unwrap()).max().unwrap();
    let all = monomials_in_degrees(nvars, 0, top);
    let pos: BTreeMap<Monomial, usize> = all.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let ncols = k * mults.len();
    let mut rows = vec![vec![0u64; ncols]; all.len()];
    for (j, g) in gens.iter().enumerate() {
        for (ui, u) in mults.iter().enumerate() {
            for (m, &c) in g.terms() {
                rows[pos[&u.mul(m)]][j * mults.len() + ui] = c as u64;
            }
        }
    }
    let relations = kernel(rows, ncols, p);
    // Unknowns: images φ(g_j) ∈ A, k·L of them. Each relation gives Σ_j (Σ_u c u)·φ(g_j) = 0 in A.
    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for rel in &relations {
        let mut block = vec![vec![0u64; k * l]; l];
        for j in 0..k {
            for (ui, u) in mults.iter().enumerate() {
                let c = rel[j * mults.len() + ui];
                if c == 0 {
                    continue;
                }
                for (s, sm) in std_monos.iter().enumerate() {
                    let img = coords(&Poly::term(ring, u.mul(sm), 1));
                    for t in 0..l {
                        block[t][j * l + s] = (block[t][j * l + s] + c * img[t]) % p;
                    }
                }
            }
        }
        eqs.extend(block);
    }
    let r = if eqs.is_empty() {
        0
    } else {
        rank(eqs.into_iter().map(|r| r.into_iter().map(|x| x as u32).collect()).collect(), p as u32)
    };
    k * l - r
}
