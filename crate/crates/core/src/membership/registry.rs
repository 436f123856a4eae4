//! Named worked examples with their known answers, each re-derived on demand.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{build_witness_14, build_witness_83, decide_grassmann83, decide_secant14, random_1661_cubic};
use super::{DecideOptions, Decision};
use crate::apolar::{ann_graded, ann_ideal, apolar_dim, graded_hilbert, local_hilbert};
use crate::bounds::{border_cactus_exact_poly, rehomogenize, weak_obstruction, ClaimKind};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::Ideal;
use crate::poly::{contract, parse_lines, parse_poly, Poly, Ring, Subspace};
use crate::tangent::tangent_dimension;

#[derive(Clone, Debug)]
pub enum ExampleInput {
    Poly(Poly),
    Subspace(Subspace),
}

#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub input: ExampleInput,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Verification {
    pub name: String,
    pub checks: Vec<Check>,
    pub verified: bool,
}

const NAMES: &[(&str, &str)] = &[
    ("binary-quadric-d2-0", "f = x1^[2] + x1*x2 re-homogenized with d2 = 0; the exact bound is refused"),
    ("binary-quadric-d2-1", "f = x1^[2] + x1*x2 re-homogenized with d2 = 1"),
    ("triple-product", "f = x1*x2*x3: apolar length 8 and Ann(f^{hom,1})"),
    ("divided-powers", "f = x1^3 + x2 against its naive homogenization G = x1^3 + x0^2*x2"),
    ("sextic-not-enough-equations", "F = x0^6 + x1^2*x2^2*x3^2 + x4^3*x5^2*x6 has border cactus rank above 14"),
    ("grassmann-143-witness", "W = <x2*x4, x1*x3, x2*x3 - x1*x4>: local Hilbert function (1,4,3), tangent 25"),
    ("secant14-pipeline", "x0^6 + x1^6 and a seeded (1,6,6,1) witness through the 14-point test"),
    ("grassmann83-pipeline", "coordinate 3-plane of fifth powers, a y0^4-divisible plane and the W witness"),
];

pub fn example_names() -> Vec<&'static str> {
    NAMES.iter().map(|(n, _)| *n).collect()
}

fn summary(name: &str) -> Result<&'static str> {
    NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))
}

fn poly(text: &str, ring: &Ring) -> Result<Poly> {
    parse_poly(text, ring)
}

fn span(text: &str, ring: &Ring) -> Result<Subspace> {
    Subspace::span(*ring, &parse_lines(text, ring)?)
}

fn quadric_f(field: PrimeField) -> Result<Poly> {
    poly("x1^[2] + x1*x2", &Ring::affine(field, 2)?)
}

fn grassmann_w(field: PrimeField) -> Result<Subspace> {
    span("x2*x4\nx1*x3\nx2*x3 - x1*x4", &Ring::affine(field, 4)?)
}

const PIPELINE_SEED: u64 = 1;

/// The prepared input of a named example.
pub fn example(name: &str, field: PrimeField) -> Result<Example> {
    let summary = summary(name)?;
    let input = match name {
        "binary-quadric-d2-0" | "binary-quadric-d2-1" => ExampleInput::Poly(quadric_f(field)?),
        "triple-product" => ExampleInput::Poly(poly("x1*x2*x3", &Ring::affine(field, 3)?)?),
        "divided-powers" => ExampleInput::Poly(poly("x1^3 + x2", &Ring::affine(field, 2)?)?),
        "sextic-not-enough-equations" => {
            ExampleInput::Poly(poly("x0^6 + x1^2*x2^2*x3^2 + x4^3*x5^2*x6", &Ring::projective(field, 6)?)?)
        }
        "grassmann-143-witness" => ExampleInput::Subspace(grassmann_w(field)?),
        "secant14-pipeline" => ExampleInput::Poly(poly("x0^6 + x1^6", &Ring::projective(field, 6)?)?),
        "grassmann83-pipeline" => ExampleInput::Subspace(span("x0^5\nx1^5\nx2^5", &Ring::projective(field, 4)?)?),
        _ => unreachable!(),
    };
    Ok(Example { name: NAMES.iter().find(|(n, _)| *n == name).unwrap().0, summary, input })
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, label: &str, expected: impl ToString, computed: impl ToString, ok: bool) {
        self.0.push(Check { label: label.to_string(), expected: expected.to_string(), computed: computed.to_string(), ok });
    }

    fn eq<T: PartialEq + core::fmt::Debug>(&mut self, label: &str, expected: T, computed: T) {
        let ok = expected == computed;
        self.push(label, format!("{expected:?}"), format!("{computed:?}"), ok);
    }

    /// Ideal equality by mutual normal-form containment.
    fn ideal(&mut self, label: &str, expected: &str, computed: &Ideal) -> Result<()> {
        let ring = *computed.ring();
        let want = Ideal::new(ring, parse_lines(&expected.replace(", ", "\n"), &ring)?)?;
        let shown: Vec<String> = computed.grevlex().polys().iter().map(|p| p.to_string()).collect();
        self.push(label, format!("({expected})"), format!("({})", shown.join(", ")), want.same_ideal(computed));
        Ok(())
    }
}

fn one(p: &Poly) -> Result<Subspace> {
    Subspace::span(*p.ring(), core::slice::from_ref(p))
}

/// Recomputes every stated value of the example and compares.
pub fn verify_example(name: &str, field: PrimeField) -> Result<Verification> {
    let ex = example(name, field)?;
    let mut c = Checks(Vec::new());
    let opts = DecideOptions::default();
    match (name, &ex.input) {
        ("binary-quadric-d2-0", ExampleInput::Poly(f)) => {
            c.eq("apolar length r", 4, apolar_dim(&one(f)?)?);
            c.ideal("Ann(f^{hom,0})", "a0, a1^2 - a1*a2, a2^2", &ann_ideal(&rehomogenize(&one(f)?, 0)?)?)?;
            let rep = border_cactus_exact_poly(f, 0)?;
            c.eq("exact border cactus claim at d2 = d1 - 2", ClaimKind::Upper, rep.kind);
        }
        ("binary-quadric-d2-1", ExampleInput::Poly(f)) => {
            c.eq("apolar length r", 4, apolar_dim(&one(f)?)?);
            c.ideal("Ann(f^{hom,1})", "a0^2, a1^2 - a1*a2, a2^2", &ann_ideal(&rehomogenize(&one(f)?, 1)?)?)?;
        }
        ("triple-product", ExampleInput::Poly(f)) => {
            c.eq("apolar length r", 8, apolar_dim(&one(f)?)?);
            c.ideal("Ann(f^{hom,1})", "a0^2, a1^2, a2^2, a3^2", &ann_ideal(&rehomogenize(&one(f)?, 1)?)?)?;
            let rep = border_cactus_exact_poly(f, 2)?;
            c.eq("exact border cactus rank at d2 = 2", (ClaimKind::Exact, 8), (rep.kind, rep.r));
        }
        ("divided-powers", ExampleInput::Poly(f)) => {
            let hom = ann_ideal(&one(f)?)?.homogenize()?;
            c.ideal("Ann(f)^hom", "a2^2, a1*a2, a1^3 - 6*a0^2*a2", &hom)?;
            let t = Ring::projective(field, 2)?;
            let g = poly("x1^3 + x0^2*x2", &t)?;
            c.ideal("Ann(G)", "a0^3, a2^2, a0*a1, a1*a2, a1^3 - 3*a0^2*a2", &ann_ideal(&one(&g)?)?)?;
            let bad = poly("a1^3 - 6*a0^2*a2", &t.dual())?;
            let img = contract(&bad, &g)?;
            c.push("a1^3 - 6*a0^2*a2 applied to G", "nonzero", &img, !img.is_zero());
        }
        ("sextic-not-enough-equations", ExampleInput::Poly(f)) => {
            c.eq("graded Hilbert function", [1, 7, 12, 14, 12, 7, 1].to_vec(), graded_hilbert(f)?.values);
            let low = Ideal::new(f.ring().dual(), ann_graded(f, 4)?.into_iter().flatten().collect())?;
            let gens = low.min_gens_by_degree()?;
            c.eq("minimal generators in degree 4", Some(1), gens.get(&4).copied());
            let ob = weak_obstruction(f, 14)?;
            c.eq("obstructed at r = 14", true, ob.obstructed());
        }
        ("grassmann-143-witness", ExampleInput::Subspace(w)) => {
            let ann = ann_ideal(w)?;
            c.ideal("Ann(W)", "a1^2, a2^2, a3^2, a4^2, a1*a2, a3*a4, a1*a4 + a2*a3", &ann)?;
            c.eq("local Hilbert function", [1, 4, 3].to_vec(), local_hilbert(w)?.values);
            c.eq("tangent dimension", 25, tangent_dimension(&ann)?.dim_hom);
        }
        ("secant14-pipeline", ExampleInput::Poly(g)) => {
            let rep = decide_secant14(g, &opts)?;
            c.eq("x0^6 + x1^6", (Decision::InSecant, 2), (rep.decision, rep.terminating_step));
            let mut rng = ChaCha8Rng::seed_from_u64(PIPELINE_SEED);
            let cubic = random_1661_cubic(&mut rng, field, 6)?;
            let rep = decide_secant14(&build_witness_14(&cubic, 6, 6)?, &opts)?;
            let dim = rep.tangent.as_ref().map(|t| t.dim_hom);
            c.eq(
                "seeded (1,6,6,1) witness",
                (Decision::NotInSecant, 5, Some(76)),
                (rep.decision, rep.terminating_step, dim),
            );
        }
        ("grassmann83-pipeline", ExampleInput::Subspace(v)) => {
            let rep = decide_grassmann83(v, &opts)?;
            c.eq("<x0^5, x1^5, x2^5>", (Decision::InSecant, 2), (rep.decision, rep.terminating_step));
            let t = Ring::projective(field, 4)?;
            let y4 = poly("x0 + x3", &t)?.pow(4)?;
            let planes = parse_lines("x1\nx2\nx3 - x4", &t)?.iter().map(|l| y4.mul(l)).collect::<Result<Vec<_>>>()?;
            let rep = decide_grassmann83(&Subspace::span(t, &planes)?, &opts)?;
            c.eq("y0^4 times three linear forms", (Decision::InSecant, 3), (rep.decision, rep.terminating_step));
            let rep = decide_grassmann83(&build_witness_83(&grassmann_w(field)?, 5, 4)?, &opts)?;
            let dim = rep.tangent.as_ref().map(|t| t.dim_hom);
            c.eq("W witness, d = 5", (Decision::NotInSecant, 5, Some(25)), (rep.decision, rep.terminating_step, dim));
        }
        _ => return Err(Error::Internal(format!("example {name} has no verifier"))),
    }
    let verified = c.0.iter().all(|k| k.ok);
    Ok(Verification { name: name.to_string(), checks: c.0, verified })
}
