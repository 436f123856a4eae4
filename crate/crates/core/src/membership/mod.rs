//! The two decision procedures (14th secant inside the 14th cactus variety, and the (8,3)
//! Grassmann secant inside the Grassmann cactus variety) and their witness constructors.
//!
//! Both pipelines share five steps: the radical of the low-degree annihilator, the
//! extraction of y0, the power of y0 dividing the input, the local Hilbert function of the
//! dehomogenized data and the tangent-space comparison.

mod registry;
mod witness;

pub use registry::{example, example_names, verify_example, Check, Example, ExampleInput, Verification};
pub use witness::{build_witness_14, build_witness_83, random_1661_cubic, random_143_subspace};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::apolar::{ann_graded_subspace, ann_inhom, is_143, is_1661};
use crate::error::{Error, Result};
use crate::exactla::{invert, kernel_basis, Matrix};
use crate::groebner::{radical_linear_part, HilbertWindow, Ideal, LinearPart};
use crate::poly::{
    complete_to_basis, divisibility_order_subspace, linear_substitute, triangle_subspace, Flavor, Poly,
    Subspace,
};
use crate::tangent::{tangent_dimension, TangentReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Decision {
    InSecant,
    NotInSecant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Family {
    /// Forms in the 14th cactus variety of a Veronese embedding.
    Secant14,
    /// 3-planes of forms in the (8,3) Grassmann cactus variety.
    Grassmann83,
}

impl Family {
    /// Power of y0 that must divide the input for the non-secant component.
    fn codegree(self) -> u32 {
        match self {
            Family::Secant14 => 3,
            Family::Grassmann83 => 2,
        }
    }

    fn hilbert(self) -> &'static [usize] {
        match self {
            Family::Secant14 => &[1, 6, 6, 1],
            Family::Grassmann83 => &[1, 4, 3],
        }
    }

    pub fn threshold(self, n: usize) -> usize {
        match self {
            Family::Secant14 => 14 * n - 8,
            Family::Grassmann83 => 8 * n - 7,
        }
    }

    pub fn threshold_note(self) -> &'static str {
        match self {
            Family::Secant14 => {
                "14n-8: dimension of the (1,6,6,1) component of the Hilbert scheme of 14 points in A^n"
            }
            Family::Grassmann83 => {
                "8n-7: dimension of the (1,4,3) component of the Hilbert scheme of 8 points in A^n"
            }
        }
    }

    fn premise(self) -> &'static str {
        match self {
            Family::Secant14 => "premise: the input is assumed to lie in the 14th cactus variety; this is not checked",
            Family::Grassmann83 => {
                "premise: the input is assumed to lie in the (8,3) Grassmann cactus variety; this is not checked"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TraceStep {
    pub step: u8,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DecisionReport {
    pub family: Family,
    pub decision: Decision,
    pub terminating_step: u8,
    pub n: usize,
    pub d: u32,
    pub prime: u32,
    /// Hilbert function window of the low-degree annihilator.
    pub radical_window: Option<HilbertWindow>,
    /// dim of the degree-1 part of the radical, when known.
    pub linear_part_dim: Option<usize>,
    pub y0: Option<String>,
    pub divisibility_order: Option<u32>,
    pub required_order: u32,
    pub local_hilbert: Option<Vec<usize>>,
    pub expected_hilbert: Vec<usize>,
    pub tangent: Option<TangentReport>,
    pub threshold: usize,
    pub threshold_note: String,
    pub premise: String,
    /// Set when the pipeline ran outside the range it is proven for.
    pub experimental: bool,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Debug, Default)]
pub struct DecideOptions {
    /// Run the 14-point test at d = 5 (outside its proven range).
    pub force_d5: bool,
    /// Basis of T_1 to use in Step 3, as rows; the first row must be a multiple of y0.
    pub completion: Option<Matrix>,
}

/// Decides, for G assumed in the 14th cactus variety, whether it is in the 14th secant variety.
pub fn decide_secant14(g: &Poly, opts: &DecideOptions) -> Result<DecisionReport> {
    if g.is_zero() {
        return Err(Error::ZeroInput("decide-secant14 needs a nonzero form".into()));
    }
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = g.degree().unwrap();
    let n = check_ring(g.ring(), 6)?;
    let experimental = match d {
        d if d >= 6 => false,
        5 if opts.force_d5 => true,
        5 => {
            return Err(Error::Precondition(
                "the 14-point algorithm is stated for d >= 6; pass --force-d5 to run it at d = 5 experimentally"
                    .into(),
            ))
        }
        _ => return Err(Error::Precondition(format!("degree {d} is below 6"))),
    };
    let v = Subspace::span(*g.ring(), core::slice::from_ref(g))?;
    run(Family::Secant14, &v, n, d, experimental, opts)
}

/// Decides, for a 3-plane V assumed in the (8,3) Grassmann cactus variety, whether it is in
/// the Grassmann secant variety.
pub fn decide_grassmann83(v: &Subspace, opts: &DecideOptions) -> Result<DecisionReport> {
    if v.dim() != 3 {
        return Err(Error::Precondition(format!("expected a 3-dimensional subspace, got dimension {}", v.dim())));
    }
    let d = v.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let n = check_ring(v.ring(), 4)?;
    if d < 5 {
        return Err(Error::Precondition(format!("degree {d} is below 5")));
    }
    run(Family::Grassmann83, v, n, d, false, opts)
}

fn check_ring(ring: &crate::poly::Ring, min_n: usize) -> Result<usize> {
    if ring.flavor() != Flavor::Primal || ring.first_index() != 0 {
        return Err(Error::Precondition("input must be forms in x0..xn".into()));
    }
    let n = ring.nvars() - 1;
    if n < min_n {
        return Err(Error::Precondition(format!("needs n >= {min_n}, got n = {n}")));
    }
    Ok(n)
}

struct Builder {
    report: DecisionReport,
}

impl Builder {
    fn note(&mut self, step: u8, note: String) {
        self.report.trace.push(TraceStep { step, note });
    }

    fn finish(mut self, step: u8, decision: Decision) -> DecisionReport {
        self.report.terminating_step = step;
        self.report.decision = decision;
        self.report
    }
}

fn run(family: Family, v: &Subspace, n: usize, d: u32, experimental: bool, opts: &DecideOptions) -> Result<DecisionReport> {
    let ring = *v.ring();
    let field = *ring.field();
    let k = family.codegree();
    let mut b = Builder {
        report: DecisionReport {
            family,
            decision: Decision::InSecant,
            terminating_step: 0,
            n,
            d,
            prime: field.p(),
            radical_window: None,
            linear_part_dim: None,
            y0: None,
            divisibility_order: None,
            required_order: d - k,
            local_hilbert: None,
            expected_hilbert: family.hilbert().to_vec(),
            tangent: None,
            threshold: family.threshold(n),
            threshold_note: family.threshold_note().to_string(),
            premise: family.premise().to_string(),
            experimental,
            trace: Vec::new(),
        },
    };

    // Step 1: radical of the annihilator in degrees <= d - k.
    let pieces = ann_graded_subspace(v, d - k)?;
    let gens: Vec<Poly> = pieces.into_iter().flatten().collect();
    let count = gens.len();
    let ideal = Ideal::new(ring.dual(), gens)?;
    let rad = radical_linear_part(&ideal)?;
    b.note(1, format!("{count} annihilating forms of degree <= {}; charts used {:?}", d - k, rad.charts));
    b.report.radical_window = Some(rad.window.clone());

    // Step 2: the linear part must be a hyperplane of T*_1.
    let dim = rad.dimension(n + 1);
    b.report.linear_part_dim = dim;
    let basis = match (&rad.part, dim) {
        (LinearPart::Basis(basis), Some(dim)) if dim == n => basis.clone(),
        _ => {
            let what = match &rad.part {
                LinearPart::PositiveDimensional => "locus is positive-dimensional".to_string(),
                LinearPart::EmptyLocus => "locus is empty".to_string(),
                LinearPart::Basis(bs) => format!("dimension {} instead of {n}", bs.len()),
            };
            b.note(2, format!("degree-1 part of the radical: {what}; in the secant variety"));
            return Ok(b.finish(2, Decision::InSecant));
        }
    };
    let rows: Vec<Vec<_>> =
        basis.iter().map(|l| (0..=n).map(|i| l.coeff(&crate::poly::Monomial::var(i))).collect()).collect();
    let ker = kernel_basis(&field, &Matrix::from_rows(n + 1, &rows)?);
    if ker.len() != 1 {
        return Err(Error::Internal("hyperplane of linear forms with a kernel of dimension != 1".into()));
    }
    let y0 = Poly::linear(ring, &ker[0]);
    b.report.y0 = Some(y0.to_string());
    b.note(2, format!("degree-1 part of the radical has dimension {n}; y0 = {y0}"));

    // Step 3: power of y0 dividing the input.
    let e = divisibility_order_subspace(&y0, v)?;
    b.report.divisibility_order = Some(e);
    if e != d - k {
        b.note(3, format!("y0^{e} is the largest power dividing the input, not y0^{}; in the secant variety", d - k));
        return Ok(b.finish(3, Decision::InSecant));
    }
    let basis_matrix = match &opts.completion {
        Some(m) => {
            check_completion(m, &ker[0], &field)?;
            m.clone()
        }
        None => complete_to_basis(&y0)?,
    };
    let inv = invert(&field, &basis_matrix)?;
    let in_y = v.map(|p| linear_substitute(p, &inv))?;
    let w = in_y.map(|p| p.set_first_to_one())?;
    b.note(3, format!("input = y0^{e} times a degree-{k} part; dehomogenized in the completed basis"));

    // Step 4: local Hilbert function.
    let wt = triangle_subspace(d, &w)?;
    let ch = match family {
        Family::Secant14 => is_1661(&wt.basis()[0])?,
        Family::Grassmann83 => is_143(&wt)?,
    };
    b.report.local_hilbert = Some(ch.hilbert.clone());
    if !ch.holds {
        b.note(4, format!("local Hilbert function {:?} differs from {:?}; in the secant variety", ch.hilbert, family.hilbert()));
        return Ok(b.finish(4, Decision::InSecant));
    }
    b.note(4, format!("local Hilbert function {:?} (structural check agrees)", ch.hilbert));

    // Step 5: tangent space to the Hilbert scheme.
    let ann = ann_inhom(&wt)?;
    let i = Ideal::new(wt.ring().dual(), ann.generators)?;
    let t = tangent_dimension(&i)?;
    let threshold = family.threshold(n);
    let decision = if t.dim_hom > threshold { Decision::InSecant } else { Decision::NotInSecant };
    b.note(
        5,
        format!(
            "dim Hom(I, R/I) = {} against threshold {threshold}; {}",
            t.dim_hom,
            if decision == Decision::InSecant { "in the secant variety" } else { "not in the secant variety" }
        ),
    );
    b.report.tangent = Some(t);
    Ok(b.finish(5, decision))
}

fn check_completion(m: &Matrix, y0: &[crate::field::Scalar], field: &crate::field::PrimeField) -> Result<()> {
    let n = y0.len();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
    }
    let first = Matrix::from_rows(n, &[m.row(0).to_vec(), y0.to_vec()])?;
    if m.row(0).iter().all(|&c| c == 0) || first.rank(field) != 1 {
        return Err(Error::Precondition("the first row of the completion must be a multiple of y0".into()));
    }
    if m.rank(field) < n {
        return Err(Error::SingularMatrix);
    }
    Ok(())
}
