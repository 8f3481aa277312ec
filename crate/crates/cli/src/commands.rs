//! Subcommand implementations. Each returns the text to print and whether
//! every check it ran passed.

use std::fmt::Write as _;

use orderlex::catalog::{battery, small_groups};
use orderlex::covers::{build_cover, verify_shapiro};
use orderlex::finite_rep::{all_homomorphisms, distinct_kernels, RepresentationKind};
use orderlex::free_group::FIBER_ALPHABET;
use orderlex::orderability::{
    bi_order_suite, clay_rolfsen_verdict, convexity_suite, lemma8_suite, lemma_comm_suite, theorem2_report,
};
use orderlex::{AlexanderResult, Error, FiniteRepresentation, FreeEndomorphism, MappingTorus, TorusHomomorphism};
use serde_json::{json, Value};

use crate::manifest::{Manifest, ManifestError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub depth: usize,
    pub trials: usize,
    pub seed: u64,
    pub d_scale: Option<i64>,
    pub selectors: Vec<String>,
    pub json: bool,
}

#[derive(Debug)]
pub enum Failure {
    /// Source name and the error.
    Manifest(String, ManifestError),
    Selector(String),
    Usage(String),
    Core(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Manifest(_, e) => e.exit_code(),
            Self::Selector(_) => 4,
            Self::Usage(_) => 2,
            Self::Core(Error::NotCertified(_)) => 3,
            Self::Core(Error::NonPositiveExponent(_) | Error::Parse { .. }) => 2,
            Self::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Manifest(path, e) if e.location().is_some() => write!(f, "{path}:{e}"),
            Self::Manifest(path, e) => write!(f, "{path}: {e}"),
            Self::Selector(s) => write!(f, "selector: {s}"),
            Self::Usage(s) => f.write_str(s),
            Self::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

pub type Outcome = Result<(String, bool), Failure>;

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn factors(r: &AlexanderResult) -> Vec<String> {
    r.invariant_factors.iter().map(ToString::to_string).collect()
}

/// `name` for the regular representation of a homomorphism, `name:kind`
/// for another pullback, a representation name, or `trivial`.
fn resolve_rep(m: &Manifest, selector: &str) -> Result<FiniteRepresentation, Failure> {
    let theta = m.torus.monodromy();
    if selector == "trivial" {
        return Ok(FiniteRepresentation::trivial(theta));
    }
    let (name, kind) = match selector.split_once(':') {
        Some((n, k)) => {
            let kind = RepresentationKind::parse(k).map_err(|_| Failure::Selector(format!("unknown kind in {selector:?}")))?;
            (n, Some(kind))
        }
        None => (selector, None),
    };
    if let Some(f) = m.homomorphism(name) {
        return Ok(FiniteRepresentation::from_homomorphism(theta, f, kind.unwrap_or(RepresentationKind::Regular))?);
    }
    match (m.representation(name), kind) {
        (Some(r), None) => Ok(r.clone()),
        (Some(_), Some(_)) => Err(Failure::Selector(format!("{name:?} is a representation; it takes no kind"))),
        (None, _) => Err(Failure::Selector(format!("no homomorphism or representation named {name:?}"))),
    }
}

fn rep_selection(m: &Manifest, s: &Settings) -> Result<Vec<(String, FiniteRepresentation)>, Failure> {
    let names: Vec<String> = if s.selectors.is_empty() {
        m.homomorphisms.iter().map(|(n, _)| n).chain(m.representations.iter().map(|(n, _)| n)).cloned().collect()
    } else {
        s.selectors.clone()
    };
    if names.is_empty() {
        return Err(Failure::Selector("the manifest names no homomorphism or representation; pass --hom".into()));
    }
    names.into_iter().map(|n| resolve_rep(m, &n).map(|r| (n, r))).collect()
}

fn hom_selection<'a>(m: &'a Manifest, s: &Settings) -> Result<Vec<(String, &'a TorusHomomorphism)>, Failure> {
    if s.selectors.is_empty() {
        if m.homomorphisms.is_empty() {
            return Err(Failure::Selector("the manifest names no homomorphism; pass --hom".into()));
        }
        return Ok(m.homomorphisms.iter().map(|(n, f)| (n.clone(), f)).collect());
    }
    s.selectors
        .iter()
        .map(|sel| {
            let name = sel.strip_suffix(":regular").unwrap_or(sel);
            m.homomorphism(name)
                .map(|f| (name.to_string(), f))
                .ok_or_else(|| Failure::Selector(format!("no homomorphism named {sel:?}")))
        })
        .collect()
}

fn classical_json(m: &MappingTorus) -> Result<Value, Failure> {
    let r = m.classical_alexander()?;
    let v = clay_rolfsen_verdict(&r.polynomial)?;
    Ok(json!({
        "polynomial": r.polynomial.to_string(),
        "invariant_factors": factors(&r),
        "verdict": v.status.as_str(),
        "positive_roots": v.positive_root_count,
    }))
}

pub fn alexander(m: &Manifest, s: &Settings) -> Outcome {
    let c = classical_json(&m.torus)?;
    if s.json {
        let out = json!({"label": m.torus.label(), "rank": m.torus.fiber_rank(), "classical": c});
        return Ok((pretty(&out), true));
    }
    let text = format!(
        "{}\nverdict: {}\npositive roots: {}\n",
        c["polynomial"].as_str().unwrap_or_default(),
        c["verdict"].as_str().unwrap_or_default(),
        c["positive_roots"],
    );
    Ok((text, true))
}

pub fn twisted(m: &Manifest, s: &Settings) -> Outcome {
    let d = s.d_scale.unwrap_or(1);
    let mut rows = Vec::new();
    for (name, rep) in rep_selection(m, s)? {
        let r = m.torus.twisted_alexander(&rep, d)?;
        rows.push(json!({
            "selector": name,
            "dim": rep.dim(),
            "d_scale": d,
            "polynomial": r.polynomial.to_string(),
            "invariant_factors": factors(&r),
            "free_rank": r.free_rank,
        }));
    }
    if s.json {
        return Ok((pretty(&Value::Array(rows)), true));
    }
    let mut text = String::new();
    for row in &rows {
        let chain: Vec<&str> = row["invariant_factors"].as_array().unwrap().iter().filter_map(Value::as_str).collect();
        let _ = writeln!(text, "{} (dim {}, d-scale {})", row["selector"].as_str().unwrap(), row["dim"], d);
        let _ = writeln!(text, "  polynomial: {}", row["polynomial"].as_str().unwrap());
        let _ = writeln!(text, "  invariant factors: {}", if chain.is_empty() { "none".into() } else { chain.join(", ") });
        let _ = writeln!(text, "  free rank: {}", row["free_rank"]);
    }
    Ok((text, true))
}

fn endomorphism_strings(theta: &FreeEndomorphism) -> Vec<String> {
    let spell = theta.rank() <= FIBER_ALPHABET.len();
    theta
        .images()
        .iter()
        .map(|w| {
            if spell {
                w.to_string()
            } else {
                let signed: Vec<String> = w
                    .letters()
                    .iter()
                    .map(|l| format!("{}{}", if l.inverse { "-" } else { "" }, l.generator + 1))
                    .collect();
                signed.join(" ")
            }
        })
        .collect()
}

pub fn cover(m: &Manifest, s: &Settings) -> Outcome {
    let mut rows = Vec::new();
    for (name, f) in hom_selection(m, s)? {
        let c = build_cover(&m.torus, f)?;
        let own = MappingTorus::new(c.lifted_monodromy.clone(), "")?.classical_alexander()?;
        rows.push(json!({
            "hom": name,
            "index": c.index(),
            "rank": c.rank(),
            "d": c.d,
            "w": c.w.to_string(),
            "basis": c.subgroup_basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "lifted_monodromy": endomorphism_strings(&c.lifted_monodromy),
            "polynomial": own.polynomial.to_string(),
            "rescaled": c.cover_alexander()?.polynomial.to_string(),
            "surjective": f.is_surjective(),
        }));
    }
    if s.json {
        return Ok((pretty(&Value::Array(rows)), true));
    }
    let mut text = String::new();
    for row in &rows {
        let list = |k: &str| -> String {
            row[k].as_array().unwrap().iter().filter_map(Value::as_str).collect::<Vec<_>>().join(", ")
        };
        let _ = writeln!(
            text,
            "{}: index {}, rank {}, d {}, w {}",
            row["hom"].as_str().unwrap(),
            row["index"],
            row["rank"],
            row["d"],
            row["w"].as_str().unwrap()
        );
        let _ = writeln!(text, "  basis: {}", list("basis"));
        let _ = writeln!(text, "  lifted monodromy: {}", list("lifted_monodromy"));
        let _ = writeln!(text, "  polynomial: {}", row["polynomial"].as_str().unwrap());
        let _ = writeln!(text, "  rescaled by d: {}", row["rescaled"].as_str().unwrap());
    }
    Ok((text, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Shapiro,
    Lemma4,
    Lemma5,
    Theorem2,
    OrderLemmas,
}

fn order_lemmas(s: &Settings) -> Result<(Value, bool), Failure> {
    let comm = lemma_comm_suite(2, s.trials, s.depth, s.seed);
    let bi = bi_order_suite(2..=3, s.trials, s.depth, s.seed);
    let convex = convexity_suite(2, s.trials, s.depth, s.seed);
    let triangular = lemma8_suite(s.trials, s.seed)?;
    let suites = [
        &comm.part1,
        &comm.part2,
        &comm.part3,
        &comm.sandwich,
        &bi.antisymmetry,
        &bi.transitivity,
        &bi.left_invariance,
        &bi.right_invariance,
        &bi.positive_cone,
        &convex,
        &triangular,
    ];
    let violations: usize = suites.iter().map(|r| r.violations).sum();
    let unresolved: usize = suites.iter().map(|r| r.unresolved).sum();
    let v = json!({
        "commutator": comm,
        "bi_order": bi,
        "convexity": convex,
        "triangular": triangular,
        "violations": violations,
        "unresolved": unresolved,
        "depth": s.depth,
        "trials": s.trials,
        "seed": s.seed,
    });
    Ok((v, violations == 0))
}

pub fn verify(m: Option<&Manifest>, check: Check, s: &Settings) -> Outcome {
    let need = || m.ok_or_else(|| Failure::Usage(format!("verify {check:?} needs a manifest")));
    let (results, passed) = match check {
        Check::Shapiro => {
            let m = need()?;
            let mut rows = Vec::new();
            for (name, f) in hom_selection(m, s)? {
                rows.push((name, verify_shapiro(&m.torus, f)?));
            }
            let ok = rows.iter().all(|(_, r)| r.equal);
            let rows: Vec<Value> = rows.into_iter().map(|(n, r)| json!({"hom": n, "report": r})).collect();
            (Value::Array(rows), ok)
        }
        Check::Theorem2 => {
            let m = need()?;
            let mut rows = Vec::new();
            let mut ok = true;
            for (name, f) in hom_selection(m, s)? {
                let r = theorem2_report(&m.torus, f)?;
                ok &= r.holds();
                rows.push(json!({"hom": name, "holds": r.holds(), "report": r}));
            }
            (Value::Array(rows), ok)
        }
        Check::Lemma4 => {
            let m = need()?;
            let d = s.d_scale.unwrap_or(2);
            let mut rows = Vec::new();
            let mut ok = true;
            for (name, rep) in rep_selection(m, s)? {
                let holds = m.torus.lemma4_check(&rep, d)?;
                ok &= holds;
                rows.push(json!({"selector": name, "d": d, "holds": holds}));
            }
            (Value::Array(rows), ok)
        }
        Check::Lemma5 => {
            let m = need()?;
            let reps = rep_selection(m, s)?;
            let mut rows = Vec::new();
            let mut ok = true;
            for (i, (a_name, a)) in reps.iter().enumerate() {
                for (b_name, b) in &reps[i..] {
                    let holds = m.torus.lemma5_check(a, b)?;
                    ok &= holds;
                    rows.push(json!({"pair": [a_name, b_name], "holds": holds}));
                }
            }
            (Value::Array(rows), ok)
        }
        Check::OrderLemmas => order_lemmas(s)?,
    };
    let name = serde_json::to_value(check).ok();
    let out = json!({
        "check": name,
        "label": m.map(|m| m.torus.label()),
        "passed": passed,
        "results": results,
    });
    Ok((pretty(&out), passed))
}

impl serde::Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(match self {
            Self::Shapiro => "shapiro",
            Self::Lemma4 => "lemma4",
            Self::Lemma5 => "lemma5",
            Self::Theorem2 => "theorem2",
            Self::OrderLemmas => "order-lemmas",
        })
    }
}

/// Everything the manifest supports, in one JSON document.
pub fn report(m: &Manifest, s: &Settings) -> Outcome {
    let mut passed = true;
    let mut homs = Vec::new();
    for (name, f) in &m.homomorphisms {
        let shapiro = verify_shapiro(&m.torus, f)?;
        let t2 = theorem2_report(&m.torus, f)?;
        passed &= shapiro.equal && t2.holds();
        homs.push(json!({
            "name": name,
            "surjective": f.is_surjective(),
            "twisted": shapiro.twisted,
            "cover_rescaled": shapiro.cover,
            "cover": t2.cover,
            "d": t2.d,
            "shapiro_equal": shapiro.equal,
            "theorem2_holds": t2.holds(),
            "gain": t2.gain,
            "twisted_status": t2.twisted_status,
            "cover_status": t2.cover_status,
        }));
    }
    let mut reps = Vec::new();
    for (name, rep) in &m.representations {
        let r = m.torus.twisted_alexander(rep, 1)?;
        reps.push(json!({"name": name, "dim": rep.dim(), "twisted": r.polynomial.to_string(), "free_rank": r.free_rank}));
    }
    let (order, order_ok) = order_lemmas(s)?;
    passed &= order_ok;
    let out = json!({
        "manifold": {"label": m.torus.label(), "rank": m.torus.fiber_rank()},
        "classical": classical_json(&m.torus)?,
        "homomorphisms": homs,
        "representations": reps,
        "order_lemmas": order,
        "passed": passed,
    });
    Ok((pretty(&out), passed))
}

/// Positive-root comparison of twisted and cover polynomials over the
/// built-in automorphisms and every homomorphism onto a group of order at
/// most six, one homomorphism per kernel.
pub fn battery_report() -> Outcome {
    let groups = small_groups()?;
    let mut rows = Vec::new();
    let (mut total, mut failures, mut gains) = (0usize, 0usize, 0usize);
    for m in battery()? {
        for (gname, g) in &groups {
            let homs = distinct_kernels(all_homomorphisms(m.monodromy(), g));
            let (mut held, mut gained) = (0usize, 0usize);
            for f in &homs {
                let r = theorem2_report(&m, f)?;
                held += usize::from(r.holds());
                gained += usize::from(r.gain);
            }
            total += homs.len();
            failures += homs.len() - held;
            gains += gained;
            rows.push(json!({
                "automorphism": m.label(),
                "group": gname,
                "homomorphisms": homs.len(),
                "holds": held,
                "gains": gained,
            }));
        }
    }
    let out = json!({"cases": rows, "homomorphisms": total, "failures": failures, "gains": gains, "passed": failures == 0});
    Ok((pretty(&out), failures == 0))
}
