//! Library routines against naive reference computations.

mod common;

use cactus_core::apolar::{
    ann_graded_subspace, ann_ideal, apolar_dim, contraction_span, graded_hilbert_subspace, local_hilbert,
};
use cactus_core::groebner::Ideal;
use cactus_core::poly::{Ring, Subspace};
use cactus_core::tangent::{tangent_dimension, tangent_dimension_conormal, tangent_dimension_truncated, LocalQuotient};
use common::{coeffs, count_in, field, form_on, oracle, WSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn local_hilbert_matches_ek_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let mut w = WSpec::random(&mut rng);
        w.n = rng.gen_range(2..=4);
        w.gens = w.gens.iter().map(|_| coeffs(&mut rng, count_in(w.n, 0, w.deg))).collect();
        let v = w.subspace();
        let lib = local_hilbert(&v).unwrap();
        assert_eq!(lib.values, oracle::local_hilbert_ek(&v), "{w:?}");
        assert_eq!(lib.total(), apolar_dim(&v).unwrap(), "{w:?}");
    }
}

#[test]
fn apolar_length_matches_contraction_span() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..150 {
        let w = WSpec::random(&mut rng);
        let v = w.subspace();
        let naive = oracle::contraction_span_dim(&v);
        assert_eq!(apolar_dim(&v).unwrap(), naive, "{w:?}");
        assert_eq!(contraction_span(&v).unwrap().dim(), naive, "{w:?}");
    }
}

#[test]
fn graded_hilbert_matches_naive_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=4);
        let ring = Ring::projective(field(), n).unwrap();
        let k = rng.gen_range(1..=2);
        let forms: Vec<_> = (0..k).map(|_| form_on(ring, d, &coeffs(&mut rng, count_in(n + 1, d, d)))).collect();
        let Ok(v) = Subspace::span(ring, &forms) else { continue };
        if v.is_zero() {
            continue;
        }
        assert_eq!(graded_hilbert_subspace(&v).unwrap().values, oracle::graded_hilbert_naive(&v, d));
    }
}

#[test]
fn annihilator_generators_kill_the_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let w = WSpec::random(&mut rng);
        let v = w.subspace();
        let ideal = ann_ideal(&v).unwrap();
        assert!(oracle::annihilates(ideal.generators(), &v), "{w:?}");
        assert!(oracle::annihilates(&ideal.grevlex().polys(), &v), "{w:?}");
        // Nothing of the quotient basis is killed: length equals the apolar length.
        let lq = LocalQuotient::new(&ideal).unwrap();
        assert_eq!(lq.length(), apolar_dim(&v).unwrap(), "{w:?}");
    }
}

#[test]
fn graded_annihilator_has_expected_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..60 {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(2..=4);
        let ring = Ring::projective(field(), n).unwrap();
        let f = form_on(ring, d, &coeffs(&mut rng, count_in(n + 1, d, d)));
        if f.is_zero() {
            continue;
        }
        let v = Subspace::span(ring, &[f]).unwrap();
        let h = oracle::graded_hilbert_naive(&v, d);
        for (e, piece) in ann_graded_subspace(&v, d).unwrap().iter().enumerate() {
            let expect = count_in(n + 1, e as u32, e as u32) - h.get(e).copied().unwrap_or(0);
            assert_eq!(piece.len(), expect);
            assert!(oracle::annihilates(piece, &v));
        }
    }
}

/// Ann(W) for random W in two variables: syzygy route, conormal route and brute force agree.
#[test]
fn tangent_routes_agree_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let mut checked = 0;
    while checked < 40 {
        let deg = rng.gen_range(1..=3);
        let w = WSpec { n: 2, deg, gens: (0..rng.gen_range(1..=2)).map(|_| coeffs(&mut rng, count_in(2, 0, deg))).collect() };
        let ideal = ann_ideal(&w.subspace()).unwrap();
        let syz = tangent_dimension(&ideal).unwrap();
        let con = tangent_dimension_conormal(&ideal).unwrap();
        assert_eq!(syz.dim_hom, con.dim_hom, "{w:?}");
        let gb = ideal.grevlex();
        let std = gb.standard_monomials().unwrap();
        let brute = oracle::tangent_brute(&gb.polys(), &std, |f| gb.normal_form(f), syz.nilpotency + 2);
        assert_eq!(syz.dim_hom, brute, "{w:?}");
        checked += 1;
    }
}

#[test]
fn tangent_truncation_is_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let deg = rng.gen_range(1..=3);
        let w = WSpec { n: 2, deg, gens: vec![coeffs(&mut rng, count_in(2, 0, deg))] };
        let ideal = ann_ideal(&w.subspace()).unwrap();
        let n = LocalQuotient::new(&ideal).unwrap().nilpotency();
        let a = tangent_dimension_truncated(&ideal, 2 * n).unwrap();
        let b = tangent_dimension_truncated(&ideal, 2 * n + 1).unwrap();
        assert_eq!(a.dim_hom, b.dim_hom, "{w:?}");
    }
}

#[test]
fn tangent_of_monomial_ideals() {
    // (x^a, y^b) is a complete intersection: dim Hom = 2·length.
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3)] {
        let ring = Ring::affine(field(), 2).unwrap().dual();
        let gens = cactus_core::poly::parse_lines(&format!("a1^{a}\na2^{b}"), &ring).unwrap();
        let t = tangent_dimension(&Ideal::new(ring, gens).unwrap()).unwrap();
        assert_eq!(t.dim_hom, 2 * (a * b) as usize);
    }
    // Powers of the maximal ideal in the plane, against brute force.
    for k in 2..=4u32 {
        let ring = Ring::affine(field(), 2).unwrap().dual();
        let text: Vec<String> = (0..=k).map(|i| format!("a1^{i}*a2^{}", k - i)).collect();
        let ideal = Ideal::new(ring, cactus_core::poly::parse_lines(&text.join("\n"), &ring).unwrap()).unwrap();
        let gb = ideal.grevlex();
        let std = gb.standard_monomials().unwrap();
        let brute = oracle::tangent_brute(&gb.polys(), &std, |f| gb.normal_form(f), k + 2);
        assert_eq!(tangent_dimension(&ideal).unwrap().dim_hom, brute);
    }
}
