use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use molq_core::axioms::{frame_suite, mol_suite, penrose_suite};
use molq_core::frame::{canonical_frame, line_atoms, normalize_frame, verify_frame};
use molq_core::json::{
    matrix_from_json, matrix_to_json, subspace_to_value, testset_from_value, CertificateJson, FrameJson,
    LimitElementJson, MatrixJson,
};
use molq_core::limit::{metric, realify, testset_enumerate, LimitElement};
use molq_core::ring::{block_double, mp_inverse, penrose_check, proj_to_subspace, ProjMatrix};
use molq_core::term::{frame_variables, identity_to_term, tdn_term, tdn_variables, xhat_term};
use molq_core::testset::{holds_over, refute_testset, verify_certificate, FrameNormalization, Verdict};
use molq_core::{
    eval, Execution, Field, FieldTag, Gaussian, Matrix, Ortholattice, Rational, SearchConfig, Subspace,
    SubspaceLattice, Substitution, Term, TestSet,
};

use crate::input::{binding, json_arg, subspace_arg, term_arg};
use crate::{Command, FrameOp, GenTerm, LimitOp, Outcome, RingOp, SearchArgs, Suite};

macro_rules! with_field {
    ($tag:expr, $f:ident($($arg:expr),* $(,)?)) => {
        match $tag {
            FieldTag::Q => $f::<Rational>($($arg),*),
            FieldTag::Qi => $f::<Gaussian>($($arg),*),
        }
    };
}

pub fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Parse { term } => parse_cmd(&term),
        Command::Print { term, ast } => print_cmd(term.as_deref(), ast.as_deref()),
        Command::Eval { dim, field, term, subs } => with_field!(field.field, eval_cmd(dim, &term, &subs)),
        Command::TautCheck { term, field, search, vars, frame } => {
            with_field!(field.field, taut_check(&term, &search, vars.as_deref(), frame))
        }
        Command::Refute { field, search, dim, verify } => with_field!(field.field, refute(&search, dim, verify)),
        Command::GenTerm { kind } => gen_term(kind),
        Command::Frame { op } => match op {
            FrameOp::Canonical { d, field } => with_field!(field.field, frame_canonical(d)),
            FrameOp::Verify { input, field } => with_field!(field.field, frame_verify(&input)),
            FrameOp::Normalize { input, field } => with_field!(field.field, frame_normalize(&input)),
            FrameOp::Atoms { input, n, field } => with_field!(field.field, frame_atoms(&input, n)),
        },
        Command::Limit { op } => match op {
            LimitOp::Double { input, field } => with_field!(field.field, limit_double(&input)),
            LimitOp::Dim { input, field } => with_field!(field.field, limit_dim(&input)),
            LimitOp::Metric { x, y, field } => with_field!(field.field, limit_metric(&x, &y)),
            LimitOp::Enumerate { level, samples, seed, field } => {
                with_field!(field.field, limit_enumerate(level, samples, seed))
            }
            LimitOp::Realify { input } => limit_realify(&input),
        },
        Command::Ring { op } => match op {
            RingOp::Mp { input, field } => with_field!(field.field, ring_mp(&input)),
            RingOp::Meet { e, f, field } => with_field!(field.field, ring_binary(&e, &f, true)),
            RingOp::Join { e, f, field } => with_field!(field.field, ring_binary(&e, &f, false)),
            RingOp::Ortho { e, field } => with_field!(field.field, ring_ortho(&e)),
            RingOp::ToSubspace { e, field } => with_field!(field.field, ring_to_subspace(&e)),
            RingOp::FromSubspace { input, field } => with_field!(field.field, ring_from_subspace(&input)),
            RingOp::Double { input, field } => with_field!(field.field, ring_double(&input)),
        },
        Command::Axioms { suite, seed, samples } => axioms(suite, seed, samples),
    }
}

fn term_report(t: &Term) -> Value {
    json!({
        "term": t.to_string(),
        "variables": t.vars(),
        "size": t.size(),
    })
}

fn parse_cmd(text: &str) -> Result<Outcome> {
    let t = term_arg(text)?;
    let mut report = term_report(&t);
    report["ast"] = serde_json::to_value(&t)?;
    Ok(Outcome::ok(report))
}

fn print_cmd(term: Option<&str>, ast: Option<&str>) -> Result<Outcome> {
    let t = match (term, ast) {
        (Some(text), _) => term_arg(text)?,
        (None, Some(ast)) => serde_json::from_value::<Term>(json_arg(ast)?).context("reading syntax tree")?,
        (None, None) => bail!("give --term or --ast"),
    };
    Ok(Outcome::ok(json!({ "term": t.to_string() })))
}

/// `"0"`, `"1"` or the subspace document.
fn value_json<F: Field>(u: &Subspace<F>) -> Value {
    if u.is_zero() {
        json!("0")
    } else if u.is_full() {
        json!("1")
    } else {
        subspace_to_value(u)
    }
}

fn eval_cmd<F: Field>(dim: usize, term: &str, subs: &[String]) -> Result<Outcome> {
    let t = term_arg(term)?;
    let mut sub: Substitution<Subspace<F>> = Substitution::new();
    for s in subs {
        let (name, value) = binding(s)?;
        let u = subspace_arg::<F>(&value, Some(dim)).with_context(|| format!("value of `{name}`"))?;
        sub.insert(name, u);
    }
    let lat = SubspaceLattice::<F>::new(dim);
    let v = eval(&lat, &t, &sub)?;
    Ok(Outcome::ok(json!({ "value": value_json(&v), "is_top": v == lat.one() })))
}

fn search_config(search: &SearchArgs) -> SearchConfig {
    let exec = if search.sequential { Execution::Sequential } else { Execution::Parallel };
    SearchConfig::default().with_budget(search.budget).with_execution(exec)
}

fn read_testset<F: Field>(search: &SearchArgs) -> Result<TestSet<F>> {
    testset_from_value(&json_arg(&search.testset)?).context("reading test set")
}

fn verdict_json<F: Field>(v: &Verdict<F>) -> Value {
    let counterexample = v.counterexample.as_ref().map(|c| {
        json!({
            "index": c.index,
            "substitution": c.substitution.iter().map(|(k, u)| (k.clone(), subspace_to_value(u))).collect::<serde_json::Map<_, _>>(),
            "value": value_json(&c.value),
        })
    });
    json!({
        "holds": v.holds,
        "total": v.total,
        "examined": v.examined,
        "elapsed_ms": v.elapsed.as_secs_f64() * 1e3,
        "counterexample": counterexample,
    })
}

fn taut_check<F: Field>(term: &str, search: &SearchArgs, vars: Option<&[String]>, frame: Option<usize>) -> Result<Outcome> {
    let t = term_arg(term)?;
    let ts = read_testset::<F>(search)?;
    let mut cfg = search_config(search);
    let order: Vec<String> = match (vars, frame) {
        (Some(v), _) => v.to_vec(),
        (None, Some(d)) => {
            let mut v = frame_variables(d);
            v.extend(t.vars().into_iter().filter(|x| !v.contains(x)).collect::<Vec<_>>());
            v
        }
        (None, None) => t.vars().into_iter().collect(),
    };
    if let Some(d) = frame {
        cfg = cfg.with_frame(FrameNormalization::tdn(d));
    }
    let v = holds_over(&t, &order, &ts, &cfg)?;
    let mut report = verdict_json(&v);
    report["variables"] = json!(order);
    Ok(Outcome::verdict(report, v.holds))
}

fn refute<F: Field>(search: &SearchArgs, dim: Option<usize>, verify: bool) -> Result<Outcome> {
    let ts = read_testset::<F>(search)?;
    if let Some(d) = dim {
        if ts.ambient() != d {
            bail!("test set lives in dimension {}, expected {d}", ts.ambient());
        }
    }
    let cert = refute_testset(&ts, &search_config(search))?;
    let mut report = serde_json::to_value(CertificateJson::from_certificate(&cert))?;
    if verify {
        let check = verify_certificate(&cert, &ts, search.budget)?;
        if !check.is_valid() {
            bail!("certificate failed re-verification: {check:?}");
        }
        report["verified"] = json!(true);
    }
    // The test set is refuted: not universal.
    Ok(Outcome::verdict(report, false))
}

fn gen_term(kind: GenTerm) -> Result<Outcome> {
    let report = match kind {
        GenTerm::Tdn { d, n } => {
            let t = tdn_term(d, n)?;
            let mut r = term_report(&t);
            r["variables"] = json!(tdn_variables(d, n));
            r
        }
        GenTerm::Xhat { d, i } => term_report(&xhat_term(d, i)?),
        GenTerm::Identity { lhs, rhs } => term_report(&identity_to_term(term_arg(&lhs)?, term_arg(&rhs)?)),
    };
    Ok(Outcome::ok(report))
}

fn read_frame<F: Field>(input: &str) -> Result<molq_core::Frame<F>> {
    let fj: FrameJson = serde_json::from_value(json_arg(input)?).context("reading frame")?;
    Ok(fj.to_frame()?)
}

fn frame_canonical<F: Field>(d: usize) -> Result<Outcome> {
    Ok(Outcome::ok(serde_json::to_value(FrameJson::from_frame(&canonical_frame::<F>(d)?))?))
}

fn frame_verify<F: Field>(input: &str) -> Result<Outcome> {
    let f = read_frame::<F>(input)?;
    let report = verify_frame(&f);
    let ok = report.is_frame();
    Ok(Outcome::verdict(
        json!({
            "frame": ok,
            "trivial": f.is_trivial(),
            "violations": report.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        ok,
    ))
}

fn frame_normalize<F: Field>(input: &str) -> Result<Outcome> {
    let f = read_frame::<F>(input)?;
    let nf = normalize_frame(f.d, &f.to_tuple())?;
    Ok(Outcome::ok(json!({
        "frame": FrameJson::from_frame(&nf),
        "changed": nf != f,
        "trivial": nf.is_trivial(),
    })))
}

fn frame_atoms<F: Field>(input: &str, n: usize) -> Result<Outcome> {
    let f = read_frame::<F>(input)?;
    let atoms = line_atoms(&f, n)?;
    Ok(Outcome::ok(json!({ "atoms": atoms.iter().map(subspace_to_value).collect::<Vec<_>>() })))
}

fn read_element<F: Field>(input: &str) -> Result<LimitElement<F>> {
    let ej: LimitElementJson = serde_json::from_value(json_arg(input)?).context("reading limit element")?;
    Ok(ej.to_element()?)
}

fn limit_double<F: Field>(input: &str) -> Result<Outcome> {
    let x = read_element::<F>(input)?;
    Ok(Outcome::ok(serde_json::to_value(LimitElementJson::from_element(&x.double()))?))
}

fn limit_dim<F: Field>(input: &str) -> Result<Outcome> {
    let x = read_element::<F>(input)?;
    let delta = x.delta();
    Ok(Outcome::ok(json!({
        "level": x.level(),
        "dim": x.space().dim(),
        "delta": delta.power_form(),
        "lowest_terms": delta.lowest_terms(),
    })))
}

fn limit_metric<F: Field>(x: &str, y: &str) -> Result<Outcome> {
    let (x, y) = (read_element::<F>(x)?, read_element::<F>(y)?);
    Ok(Outcome::ok(json!({ "metric": metric(&x, &y).to_string() })))
}

fn limit_enumerate<F: Field>(level: u32, samples: usize, seed: u64) -> Result<Outcome> {
    let elements: Vec<Value> = testset_enumerate::<F>(level, samples, seed)?
        .map(|x| {
            json!({
                "element": LimitElementJson::from_element(&x),
                "delta": x.delta().power_form(),
                "lowest_terms": x.delta().lowest_terms(),
            })
        })
        .collect();
    Ok(Outcome::ok(json!({ "level": level, "count": elements.len(), "elements": elements })))
}

fn limit_realify(input: &str) -> Result<Outcome> {
    let u = subspace_arg::<Gaussian>(input, None)?;
    Ok(Outcome::ok(subspace_to_value(&realify(&u))))
}

fn read_matrix<F: Field>(input: &str) -> Result<Matrix<F>> {
    let rows: MatrixJson = serde_json::from_value(json_arg(input)?).context("reading matrix")?;
    Ok(matrix_from_json(&rows, None)?)
}

fn read_projection<F: Field>(input: &str) -> Result<ProjMatrix<F>> {
    Ok(ProjMatrix::new(read_matrix(input)?)?)
}

fn matrix_report<F: Field>(m: &Matrix<F>) -> Value {
    json!({ "result": matrix_to_json(m) })
}

fn ring_mp<F: Field>(input: &str) -> Result<Outcome> {
    let a = read_matrix::<F>(input)?;
    let x = mp_inverse(&a);
    let c = penrose_check(&a, &x);
    Ok(Outcome::ok(json!({
        "result": matrix_to_json(&x),
        "penrose": {
            "axa": c.axa,
            "xax": c.xax,
            "ax_hermitian": c.ax_hermitian,
            "xa_hermitian": c.xa_hermitian,
        },
    })))
}

fn ring_binary<F: Field>(e: &str, f: &str, meet: bool) -> Result<Outcome> {
    let (e, f) = (read_projection::<F>(e)?, read_projection::<F>(f)?);
    let r = if meet { e.meet(&f)? } else { e.join(&f)? };
    Ok(Outcome::ok(matrix_report(r.matrix())))
}

fn ring_ortho<F: Field>(e: &str) -> Result<Outcome> {
    Ok(Outcome::ok(matrix_report(read_projection::<F>(e)?.ortho().matrix())))
}

fn ring_to_subspace<F: Field>(e: &str) -> Result<Outcome> {
    Ok(Outcome::ok(subspace_to_value(&proj_to_subspace(&read_projection::<F>(e)?))))
}

fn ring_from_subspace<F: Field>(input: &str) -> Result<Outcome> {
    let u = subspace_arg::<F>(input, None)?;
    Ok(Outcome::ok(matrix_report(ProjMatrix::onto(&u).matrix())))
}

fn ring_double<F: Field>(input: &str) -> Result<Outcome> {
    let x = read_matrix::<F>(input)?;
    if !x.is_square() {
        bail!("block doubling needs a square matrix, got {}x{}", x.rows(), x.cols());
    }
    Ok(Outcome::ok(matrix_report(&block_double(&x))))
}

fn axioms(suite: Suite, seed: u64, samples: usize) -> Result<Outcome> {
    let r = match suite {
        Suite::Mol => mol_suite(&[2, 3, 4, 5], samples, seed),
        Suite::Penrose => penrose_suite(6, samples, seed),
        Suite::Frame => frame_suite(6, samples, seed),
    };
    let ok = r.all_passed();
    let mut report = serde_json::to_value(&r)?;
    report["passed"] = json!(ok);
    Ok(Outcome::verdict(report, ok))
}
