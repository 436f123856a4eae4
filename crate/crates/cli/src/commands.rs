use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cactus_core::apolar::{ann_ideal, apolar_dim, graded_hilbert_subspace, local_hilbert};
use cactus_core::bounds::{
    border_cactus_exact, border_cactus_exact_poly, cactus_upper, cactus_upper_poly, weak_obstruction, BoundReport,
    ObstructionOutcome,
};
use cactus_core::exactla::Matrix;
use cactus_core::groebner::Ideal;
use cactus_core::membership::{
    decide_grassmann83, decide_secant14, example as get_example, example_names, verify_example, DecideOptions,
    DecisionReport, ExampleInput,
};
use cactus_core::poly::{parse_poly, Flavor, Monomial, Poly, Ring};
use cactus_core::tangent::{tangent_dimension, tangent_dimension_conormal, tangent_dimension_truncated};
use cactus_core::PrimeField;

use crate::error::{CliError, CliResult};
use crate::input::Source;
use crate::{BoundsArgs, Config, DecideArgs, ExampleArgs, HilbertArgs, ObstructionArgs, TangentArgs};

pub struct Output {
    pub json: Value,
    pub text: String,
}

fn field(cfg: &Config) -> CliResult<PrimeField> {
    Ok(PrimeField::new(cfg.prime, cfg.budget)?)
}

fn source(cfg: &Config) -> CliResult<Source> {
    let path = cfg.poly.as_ref().ok_or_else(|| CliError::Usage("this subcommand needs --poly FILE".into()))?;
    Source::read(path)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn kebab(v: &Value) -> String {
    v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())
}

#[derive(Clone, Copy)]
pub enum Which {
    Secant14,
    Grassmann83,
}

impl Which {
    fn min_n(self) -> usize {
        match self {
            Which::Secant14 => 6,
            Which::Grassmann83 => 4,
        }
    }

    fn run(self, src: &Source, ring: &Ring, opts: &DecideOptions) -> CliResult<DecisionReport> {
        Ok(match self {
            Which::Secant14 => decide_secant14(&src.single(ring)?, opts)?,
            Which::Grassmann83 => decide_grassmann83(&src.subspace(ring)?, opts)?,
        })
    }
}

/// Invertible matrix whose first row is `y0` and whose other rows are random.
fn random_completion(rng: &mut impl Rng, f: &PrimeField, y0: &[u32]) -> CliResult<Matrix> {
    let n = y0.len();
    for _ in 0..100 {
        let mut rows = vec![y0.to_vec()];
        rows.extend((1..n).map(|_| (0..n).map(|_| rng.gen_range(0..f.p())).collect::<Vec<u32>>()));
        let m = Matrix::from_rows(n, &rows)?;
        if m.rank(f) == n {
            return Ok(m);
        }
    }
    Err(CliError::Core(cactus_core::Error::Internal("no invertible completion in 100 draws".into())))
}

fn outcome(rep: &DecisionReport) -> Value {
    json!({ "prime": rep.prime, "decision": to_value(&rep.decision), "terminating_step": rep.terminating_step })
}

pub fn decide(cfg: &Config, args: &DecideArgs, which: Which) -> CliResult<Output> {
    let f = field(cfg)?;
    let src = source(cfg)?;
    let ring = src.ring(f, cfg.n, which.min_n())?;
    if ring.flavor() != Flavor::Primal || ring.first_index() != 0 {
        return Err(CliError::Usage("decision input must be forms in x0..xn".into()));
    }
    let opts = DecideOptions { force_d5: cfg.force_d5, ..Default::default() };
    let rep = which.run(&src, &ring, &opts)?;
    let mut json = to_value(&rep);
    let mut text = decision_text(&rep);

    if !cfg.check_primes.is_empty() {
        let mut runs = vec![outcome(&rep)];
        for &p in &cfg.check_primes {
            let fp = PrimeField::new(p, cfg.budget)?;
            runs.push(outcome(&which.run(&src, &ring.with_field(fp), &opts)?));
        }
        let agree = runs.iter().all(|r| r["decision"] == runs[0]["decision"]);
        let _ = writeln!(text, "primes {}: {}", prime_list(&runs), if agree { "agree" } else { "DISAGREE" });
        json["prime_check"] = json!({ "runs": runs, "agree": agree });
    }

    if args.completions > 0 {
        match (&rep.y0, rep.terminating_step >= 4) {
            (Some(y0), true) => {
                let y0 = parse_poly(y0, &ring)?;
                let coeffs: Vec<u32> = (0..ring.nvars()).map(|i| y0.coeff(&Monomial::var(i))).collect();
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let mut runs = Vec::new();
                for _ in 0..args.completions {
                    let m = random_completion(&mut rng, &f, &coeffs)?;
                    let o = DecideOptions { completion: Some(m), ..opts.clone() };
                    runs.push(outcome(&which.run(&src, &ring, &o)?));
                }
                let agree = runs.iter().all(|r| r["decision"] == json["decision"]);
                let _ = writeln!(
                    text,
                    "{} random completions: {}",
                    runs.len(),
                    if agree { "same decision" } else { "DIFFERENT decisions" }
                );
                json["completion_check"] = json!({ "runs": runs, "agree": agree });
            }
            _ => {
                let _ = writeln!(text, "random completions skipped: the pipeline stopped before Step 4");
                json["completion_check"] = Value::Null;
            }
        }
    }
    Ok(Output { json, text })
}

fn prime_list(runs: &[Value]) -> String {
    runs.iter().map(|r| r["prime"].to_string()).collect::<Vec<_>>().join(", ")
}

fn decision_text(rep: &DecisionReport) -> String {
    let mut s = String::new();
    let decision = kebab(&to_value(&rep.decision));
    let _ = writeln!(s, "decision: {decision} (step {})", rep.terminating_step);
    let _ = writeln!(s, "family: {}, n = {}, d = {}, p = {}", kebab(&to_value(&rep.family)), rep.n, rep.d, rep.prime);
    if rep.experimental {
        let _ = writeln!(s, "EXPERIMENTAL: run outside the proven degree range");
    }
    for t in &rep.trace {
        let _ = writeln!(s, "  step {}: {}", t.step, t.note);
    }
    let _ = writeln!(s, "threshold: {} ({})", rep.threshold, rep.threshold_note);
    let _ = writeln!(s, "{}", rep.premise);
    s
}

fn primal_subspace(cfg: &Config) -> CliResult<(Source, cactus_core::poly::Subspace)> {
    let src = source(cfg)?;
    let ring = src.ring(field(cfg)?, cfg.n, 0)?;
    if ring.flavor() != Flavor::Primal {
        return Err(CliError::Usage("expected polynomials in x or y variables".into()));
    }
    let v = src.subspace(&ring)?;
    Ok((src, v))
}

fn ideal_lines(ideal: &Ideal) -> Vec<String> {
    ideal.grevlex().polys().iter().map(|p| p.to_string()).collect()
}

pub fn annihilator(cfg: &Config) -> CliResult<Output> {
    let (_, v) = primal_subspace(cfg)?;
    let ideal = ann_ideal(&v)?;
    let gens = ideal_lines(&ideal);
    let r = apolar_dim(&v)?;
    let mut text = format!("dim Apolar = {r}\nAnn generated by {} polynomials:\n", gens.len());
    for g in &gens {
        let _ = writeln!(text, "  {g}");
    }
    Ok(Output { json: json!({ "apolar_dim": r, "generators": gens }), text })
}

pub fn hilbert(cfg: &Config, args: &HilbertArgs) -> CliResult<Output> {
    let (_, v) = primal_subspace(cfg)?;
    let h = if args.graded {
        if v.homogeneous_degree().is_none() {
            return Err(CliError::Usage("--graded needs homogeneous input; use --local".into()));
        }
        graded_hilbert_subspace(&v)?
    } else {
        local_hilbert(&v)?
    };
    let text = format!("{} Hilbert function: {:?} (total {})\n", kebab(&to_value(&h.kind)).to_lowercase(), h.values, h.total());
    Ok(Output { json: to_value(&h), text })
}

pub fn tangent_dim(cfg: &Config, args: &TangentArgs) -> CliResult<Output> {
    let src = source(cfg)?;
    let ring = src.ring(field(cfg)?, cfg.n, 0)?;
    let ideal = match ring.flavor() {
        Flavor::Dual => Ideal::new(ring, src.polys(&ring)?)?,
        Flavor::Primal => ann_ideal(&src.subspace(&ring)?)?,
    };
    let rep = match (args.conormal, args.truncation) {
        (false, _) => tangent_dimension(&ideal)?,
        (true, None) => tangent_dimension_conormal(&ideal)?,
        (true, Some(t)) => tangent_dimension_truncated(&ideal, t)?,
    };
    let text = format!(
        "dim Hom(I, R/I) = {}\nlength {}, nilpotency {}, method {}\n",
        rep.dim_hom,
        rep.length,
        rep.nilpotency,
        kebab(&to_value(&rep.method)).to_lowercase()
    );
    Ok(Output { json: to_value(&rep), text })
}

pub fn bounds(cfg: &Config, args: &BoundsArgs) -> CliResult<Output> {
    let src = source(cfg)?;
    let ring = src.ring(field(cfg)?, cfg.n, 0)?;
    if ring.flavor() != Flavor::Primal || ring.first_index() != 1 {
        return Err(CliError::Usage("bounds take polynomials in x1..xn".into()));
    }
    let polys = src.polys(&ring)?;
    let rep: BoundReport = match (polys.as_slice(), args.border_exact) {
        ([f], false) => cactus_upper_poly(f, args.d2)?,
        ([f], true) => border_cactus_exact_poly(f, args.d2)?,
        (_, false) => cactus_upper(&src.subspace(&ring)?, args.d2)?,
        (_, true) => border_cactus_exact(&src.subspace(&ring)?, args.d2)?,
    };
    let mut text = match rep.kind {
        cactus_core::bounds::ClaimKind::Exact => format!("border cactus rank = {} (d1 = {}, d2 = {})\n", rep.r, rep.d1, rep.d2),
        cactus_core::bounds::ClaimKind::Upper => format!("cactus rank <= {} (d1 = {}, d2 = {})\n", rep.r, rep.d1, rep.d2),
    };
    if let Some(why) = &rep.refusal {
        let _ = writeln!(text, "exact value not claimed: {why}");
    }
    let _ = writeln!(text, "certificate: Ann^hom = ({})", rep.certificate.join(", "));
    Ok(Output { json: to_value(&rep), text })
}

pub fn obstruction(cfg: &Config, args: &ObstructionArgs) -> CliResult<Output> {
    let src = source(cfg)?;
    let ring = src.ring(field(cfg)?, cfg.n, 0)?;
    let f: Poly = src.single(&ring)?;
    let rep = weak_obstruction(&f, args.r)?;
    let verdict = match &rep.outcome {
        ObstructionOutcome::AboveCap { degree, value } => {
            format!("obstructed: H({degree}) = {value} > r = {}", rep.r)
        }
        ObstructionOutcome::ForcedGrowth { degree, product_dim, allowed } => format!(
            "obstructed: H({degree}) = r forces T1*Ann in degree {} of dim {product_dim} > {allowed}",
            degree + 1
        ),
        ObstructionOutcome::Inconclusive => "inconclusive: no obstruction found".to_string(),
    };
    let text = format!("graded Hilbert function {:?}\n{verdict}\n", rep.hilbert);
    let mut json = to_value(&rep);
    json["obstructed"] = json!(rep.obstructed());
    Ok(Output { json, text })
}

pub fn example(cfg: &Config, args: &ExampleArgs) -> CliResult<Output> {
    let f = field(cfg)?;
    let Some(name) = &args.name else {
        let mut text = String::new();
        let mut list = Vec::new();
        for n in example_names() {
            let ex = get_example(n, f)?;
            let _ = writeln!(text, "{n:<30} {}", ex.summary);
            list.push(json!({ "name": n, "summary": ex.summary }));
        }
        return Ok(Output { json: json!({ "examples": list }), text });
    };
    let ex = get_example(name, f)?;
    let input: Vec<String> = match &ex.input {
        ExampleInput::Poly(p) => vec![p.to_string()],
        ExampleInput::Subspace(v) => v.basis().iter().map(|p| p.to_string()).collect(),
    };
    let mut text = format!("{}: {}\ninput:\n", ex.name, ex.summary);
    for l in &input {
        let _ = writeln!(text, "  {l}");
    }
    let mut json = json!({ "name": ex.name, "summary": ex.summary, "input": input });
    if !args.verify {
        return Ok(Output { json, text });
    }
    let v = verify_example(name, f)?;
    for c in &v.checks {
        let mark = if c.ok { "verified" } else { "MISMATCH" };
        let _ = writeln!(text, "{mark}: {} = {} (expected {})", c.label, c.computed, c.expected);
    }
    let _ = writeln!(text, "{}: {}", if v.verified { "verified" } else { "NOT verified" }, v.name);
    json["verification"] = to_value(&v);
    if !cfg.check_primes.is_empty() {
        let mut runs = vec![json!({ "prime": f.p(), "verified": v.verified })];
        for &p in &cfg.check_primes {
            let vp = verify_example(name, PrimeField::new(p, cfg.budget)?)?;
            runs.push(json!({ "prime": p, "verified": vp.verified }));
        }
        let agree = runs.iter().all(|r| r["verified"] == json!(true));
        let _ = writeln!(text, "primes {}: {}", prime_list(&runs), if agree { "all verified" } else { "DISAGREE" });
        json["prime_check"] = json!({ "runs": runs, "agree": agree });
    }
    Ok(Output { json, text })
}
