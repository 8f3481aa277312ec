//! Acceptance criteria 1-9. Runs as a plain binary so that each criterion
//! prints one PASS/FAIL line; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use orderlex::catalog::{battery, cyclic_group, figure_eight, small_groups};
use orderlex::covers::verify_shapiro;
use orderlex::exact_algebra::{sturm_positive_root_count, sturm_real_root_count};
use orderlex::finite_rep::{all_homomorphisms, distinct_kernels, FiniteGroup, RepresentationKind};
use orderlex::orderability::{
    bi_order_suite, clay_rolfsen_verdict, convexity_suite, lemma8_suite, lemma_comm_suite, theorem2_report,
    OrderStatus, DEFAULT_SEED,
};
use orderlex::{FiniteRepresentation, LaurentPolynomial, MappingTorus, PolynomialMatrix, Rational, TorusHomomorphism};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn p(s: &str) -> LaurentPolynomial {
    s.parse().unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("{what} took {took:?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let m = figure_eight();
    let a = m.monodromy().abelianization_matrix();
    ensure(a == orderlex::RationalMatrix::from_ints(&[[2, 1], [1, 1]]), "abelianization is not [[2,1],[1,1]]")?;
    let classical = m.classical_alexander().map_err(err)?.polynomial;
    ensure(classical == p("t^2 - 3t + 1"), format!("classical = {classical}"))?;
    let verdict = clay_rolfsen_verdict(&classical).map_err(err)?;
    ensure(verdict.positive_root_count == 2, "positive root count is not 2")?;
    ensure(verdict.status == OrderStatus::BiorderableByPerronRolfsen, "verdict is not biorderable")?;

    let f = TorusHomomorphism::new(m.monodromy(), cyclic_group(2).map_err(err)?, vec![0, 0], 1).map_err(err)?;
    let rep = FiniteRepresentation::regular(m.monodromy(), &f).map_err(err)?;
    let twisted = m.twisted_alexander(&rep, 1).map_err(err)?.polynomial;
    let expected = (&p("t^2 + 3t + 1") * &p("t^2 - 3t + 1")).canonicalize();
    ensure(twisted == expected, format!("twisted = {twisted}"))?;
    // same positive roots: equal counts, and every classical root is a twisted root
    let tw = sturm_positive_root_count(&twisted).map_err(err)?;
    let shared = sturm_positive_root_count(&twisted.gcd(&classical)).map_err(err)?;
    ensure(tw == 2 && shared == 2, format!("positive roots: twisted {tw}, shared {shared}"))?;
    within(start, Duration::from_secs(1), "example")?;
    Ok(format!("classical {classical}, twisted {twisted}, {:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let fig8 = figure_eight();
    let mut cases: Vec<(MappingTorus, TorusHomomorphism)> = Vec::new();
    for k in 2..=5 {
        let f = TorusHomomorphism::new(fig8.monodromy(), cyclic_group(k).map_err(err)?, vec![0, 0], 1).map_err(err)?;
        cases.push((fig8.clone(), f));
    }
    let id = MappingTorus::new(orderlex::FreeEndomorphism::identity(2), "identity").map_err(err)?;
    let f = TorusHomomorphism::new(id.monodromy(), cyclic_group(2).map_err(err)?, vec![1, 0], 0).map_err(err)?;
    cases.push((id, f));
    let mut mismatches = Vec::new();
    for (m, f) in &cases {
        let r = verify_shapiro(m, f).map_err(err)?;
        if !r.equal {
            mismatches.push(format!("{}: twisted {} cover {}", m.label(), r.twisted, r.cover));
        }
    }
    ensure(mismatches.is_empty(), mismatches.join("; "))?;
    within(start, Duration::from_secs(5), "Shapiro cases")?;
    Ok(format!("{} cases, 0 mismatches, {:?}", cases.len(), start.elapsed()))
}

/// All pulled-back representations of every rank-2 battery manifold along
/// its homomorphisms to Z2, Z3 and S3, one per kernel and kind.
fn representation_battery() -> Result<Vec<(MappingTorus, FiniteRepresentation)>, String> {
    let groups = [
        cyclic_group(2).map_err(err)?,
        cyclic_group(3).map_err(err)?,
        FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).map_err(err)?,
    ];
    let kinds = [
        RepresentationKind::Trivial,
        RepresentationKind::Sign,
        RepresentationKind::Permutation,
        RepresentationKind::Standard,
        RepresentationKind::Regular,
    ];
    let mut out = Vec::new();
    for m in battery().map_err(err)?.into_iter().filter(|m| m.fiber_rank() == 2) {
        let mut reps: Vec<FiniteRepresentation> = Vec::new();
        for g in &groups {
            for f in distinct_kernels(all_homomorphisms(m.monodromy(), g)) {
                for kind in kinds {
                    let r = FiniteRepresentation::from_homomorphism(m.monodromy(), &f, kind).map_err(err)?;
                    if !reps.contains(&r) {
                        reps.push(r);
                    }
                }
            }
        }
        out.extend(reps.into_iter().map(|r| (m.clone(), r)));
    }
    Ok(out)
}

fn criterion_3() -> Outcome {
    let reps = representation_battery()?;
    let mut checked = 0;
    for (m, rep) in &reps {
        let base = m.twisted_alexander(rep, 1).map_err(err)?.polynomial;
        for d in [2, 3] {
            let scaled = m.twisted_alexander(rep, d).map_err(err)?.polynomial;
            let substituted = base.substitute_power(d).map_err(err)?.canonicalize();
            ensure(
                scaled == substituted,
                format!("{} dim {} d={d}: {scaled} vs {substituted}", m.label(), rep.dim()),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{} representations, {checked} exact equalities", reps.len()))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let groups = [
        ("Z2", cyclic_group(2).map_err(err)?),
        ("Z3", cyclic_group(3).map_err(err)?),
        ("S3", FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"]).map_err(err)?),
    ];
    let kinds = [
        RepresentationKind::Trivial,
        RepresentationKind::Sign,
        RepresentationKind::Permutation,
        RepresentationKind::Standard,
        RepresentationKind::Regular,
    ];
    let manifolds: Vec<MappingTorus> = battery().map_err(err)?.into_iter().filter(|m| m.fiber_rank() == 2).collect();
    let pairs = 24;
    for i in 0..pairs {
        let m = &manifolds[rng.gen_range(0..manifolds.len())];
        let (gname, g) = &groups[rng.gen_range(0..groups.len())];
        let homs = all_homomorphisms(m.monodromy(), g);
        let mut pick = || -> Result<FiniteRepresentation, String> {
            let f = &homs[rng.gen_range(0..homs.len())];
            let kind = kinds[rng.gen_range(0..kinds.len())];
            FiniteRepresentation::from_homomorphism(m.monodromy(), f, kind).map_err(err)
        };
        let (a, b) = (pick()?, pick()?);
        ensure(a.dim() <= 6 && b.dim() <= 6, "representation dimension above 6")?;
        let holds = m.lemma5_check(&a, &b).map_err(err)?;
        ensure(holds, format!("pair {i}: {} over {gname}, dims {} and {}", m.label(), a.dim(), b.dim()))?;
    }
    Ok(format!("{pairs} random pairs, seed {DEFAULT_SEED}"))
}

fn criterion_5() -> Outcome {
    let manifolds = battery().map_err(err)?;
    let groups = small_groups().map_err(err)?;
    let (mut reports, mut gains, mut non_surjective) = (0, 0, 0);
    for m in &manifolds {
        for (gname, g) in &groups {
            for f in distinct_kernels(all_homomorphisms(m.monodromy(), g)) {
                let r = theorem2_report(m, &f).map_err(err)?;
                ensure(
                    r.existence_agrees && r.root_sets_correspond,
                    format!("{} -> {gname}: twisted {} vs cover {} (d = {})", m.label(), r.twisted, r.cover, r.d),
                )?;
                ensure(!r.strengthens, format!("{} -> {gname}: twisted verdict strengthens the cover's", m.label()))?;
                reports += 1;
                gains += usize::from(r.gain);
                non_surjective += usize::from(!r.surjective);
            }
        }
    }
    Ok(format!(
        "{} automorphisms, {reports} homomorphisms up to kernel ({non_surjective} non-surjective), {gains} with new positive roots",
        manifolds.len()
    ))
}

fn criterion_6() -> Outcome {
    let r = bi_order_suite(2..=3, 1000, 6, DEFAULT_SEED);
    let convex = convexity_suite(2, 1000, 6, DEFAULT_SEED);
    let violations = [&r.antisymmetry, &r.transitivity, &r.left_invariance, &r.right_invariance, &r.positive_cone, &convex]
        .iter()
        .map(|s| s.violations)
        .sum::<usize>();
    ensure(r.passed() && convex.passed(), format!("{violations} violations: {r:?}"))?;
    Ok(format!("1000 triples, 0 violations, unresolved rate {:.3}", r.unresolved_rate()))
}

fn criterion_7() -> Outcome {
    let r = lemma_comm_suite(2, 500, 6, DEFAULT_SEED);
    ensure(r.passed(), format!("{r:?}"))?;
    let line = |name: &str, s: &orderlex::orderability::SuiteReport| {
        format!("{name} {}/{}/{}", s.resolved, s.unresolved, s.skipped)
    };
    Ok(format!(
        "500 trials, 0 violations; resolved/unresolved/skipped: {}, {}, {}, {}",
        line("(1)", &r.part1),
        line("(2)", &r.part2),
        line("(3)", &r.part3),
        line("sandwich", &r.sandwich)
    ))
}

fn criterion_8() -> Outcome {
    let r = lemma8_suite(100, DEFAULT_SEED).map_err(err)?;
    ensure(r.passed(), format!("{} matrices without a positive eigenvalue", r.violations))?;
    Ok("100 triangular matrices, all with a positive real eigenvalue".into())
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    if m.is_empty() {
        return LaurentPolynomial::one();
    }
    let mut total = LaurentPolynomial::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPolynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = entry * &cofactor_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with_last {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

/// Invariant factors `d_k / d_{k−1}` from gcds of all k×k minors.
fn determinantal_factors(m: &[Vec<LaurentPolynomial>]) -> Vec<LaurentPolynomial> {
    let n = m.len();
    let mut out = Vec::new();
    let mut prev = LaurentPolynomial::one();
    for k in 1..=n {
        let mut d = LaurentPolynomial::zero();
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let minor: Vec<Vec<_>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
                d = d.gcd(&cofactor_det(&minor));
            }
        }
        if d.is_zero() {
            out.resize(n, LaurentPolynomial::zero());
            return out;
        }
        out.push(d.exact_div(&prev).unwrap().canonicalize());
        prev = d;
    }
    out
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut rank_deficient = 0;
    for i in 0..50 {
        let rows: Vec<Vec<LaurentPolynomial>> = (0..4)
            .map(|_| {
                (0..4)
                    .map(|_| {
                        let deg = rng.gen_range(0..=2);
                        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
                        LaurentPolynomial::from_ints(0, &coeffs)
                    })
                    .collect()
            })
            .collect();
        let m = PolynomialMatrix::new(4, 4, rows.concat()).map_err(err)?;
        let snf = m.smith_normal_form();
        let oracle = determinantal_factors(&rows);
        ensure(snf == oracle, format!("matrix {i}: SNF {snf:?} vs oracle {oracle:?}"))?;
        rank_deficient += usize::from(oracle.iter().any(LaurentPolynomial::is_zero));
    }

    for i in 0..100 {
        // t is a unit in the Laurent ring, so 0 is never a root
        let mut roots: Vec<Rational> = (0..rng.gen_range(1..=5))
            .map(|_| {
                let num = rng.gen_range(1..=6i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
                Rational::new(num.into(), rng.gen_range(1..=4i64).into())
            })
            .collect();
        if rng.gen_bool(0.3) {
            roots.push(roots[0].clone());
        }
        let mut poly = LaurentPolynomial::from_roots(&roots);
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        if rng.gen_bool(0.3) {
            poly = &poly * &p("t^2 + 1");
        }
        let positive = distinct.iter().filter(|r| **r > Rational::zero()).count();
        let got_pos = sturm_positive_root_count(&poly).map_err(err)?;
        let got_real = sturm_real_root_count(&poly).map_err(err)?;
        ensure(
            got_pos == positive && got_real == distinct.len(),
            format!("polynomial {i} ({poly}): positive {got_pos} vs {positive}, real {got_real} vs {}", distinct.len()),
        )?;
    }
    Ok(format!("50 SNF oracles ({rank_deficient} singular), 100 Sturm counts"))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("Example reproduction", criterion_1),
        ("Shapiro cross-check", criterion_2),
        ("Rescaling by d", criterion_3),
        ("Direct-sum multiplicativity", criterion_4),
        ("Twisted vs cover positive roots", criterion_5),
        ("Magnus bi-order axioms", criterion_6),
        ("Commutator inequalities", criterion_7),
        ("Triangular matrices", criterion_8),
        ("Exact-algebra oracles", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{:.2?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
