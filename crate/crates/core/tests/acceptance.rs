//! The acceptance criteria, one line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use theta_core::complex::generators::{example_5_2_ball, example_5_4_ball, simplex};
use theta_core::harness::checks::corner_deletion_reports;
use theta_core::harness::scans::{antiprism_theta, excedance_derangement_poly};
use theta_core::harness::{run_suite, CheckKind, Outcome, Suite, SuiteConfig, VerificationReport};
use theta_core::invariants::{h_poly, theta};
use theta_core::poly::{derangement_poly, pnk};
use theta_core::subdivision::edgewise;
use theta_core::{FieldChoice, IntPoly, VerifiedBall};

const Q: FieldChoice = FieldChoice::Rational;

// Time budgets. Exact results have zero tolerance.
const TABLE_BUDGET: Duration = Duration::from_secs(1);
const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const IDENTITY_SUITE_BUDGET: Duration = Duration::from_secs(300);
const ANTIPRISM_BUDGET: Duration = Duration::from_secs(120);

const SEED: u64 = 7;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= budget, format!("took {spent:?}, budget {budget:?}"))
}

fn no_failures<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>, ids: &[&str]) -> Result<usize, String> {
    let mut passed = 0;
    for r in reports.into_iter().filter(|r| ids.contains(&r.id.as_str())) {
        match r.outcome {
            Outcome::Fail => return Err(format!("{} failed on {}", r.id, r.instance)),
            Outcome::Pass => passed += 1,
            Outcome::Inapplicable => {}
        }
    }
    ensure(passed > 0, format!("no applicable instance for {ids:?}"))?;
    Ok(passed)
}

fn suite(suite: Suite) -> Result<Vec<VerificationReport>, String> {
    run_suite(&SuiteConfig {
        suite,
        seed: SEED,
        ..SuiteConfig::default()
    })
    .map_err(|e| e.to_string())
}

fn p_tables() -> Verdict {
    let start = Instant::now();
    let expected: [(usize, usize, &[i64]); 9] = [
        (3, 0, &[1, 4, 1]),
        (3, 1, &[0, 4, 2]),
        (3, 2, &[0, 2, 4]),
        (3, 3, &[0, 1, 4, 1]),
        (4, 0, &[1, 11, 11, 1]),
        (4, 1, &[0, 8, 14, 2]),
        (4, 2, &[0, 4, 16, 4]),
        (4, 3, &[0, 2, 14, 8]),
        (4, 4, &[0, 1, 11, 11, 1]),
    ];
    for (n, k, c) in expected {
        let got = pnk(n, k).map_err(|e| e.to_string())?;
        ensure(got == p(c), format!("p_{{{n},{k}}} = {got}"))?;
    }
    within(start, TABLE_BUDGET)?;
    Ok("9 polynomials match".into())
}

fn non_unimodal_ball() -> Verdict {
    let start = Instant::now();
    let ball = VerifiedBall::verify(&example_5_2_ball(), Q).map_err(|e| e.to_string())?;
    let th = theta(&ball).map_err(|e| e.to_string())?;
    ensure(h_poly(ball.complex()) == p(&[1, 3, 2, 2]), "h")?;
    ensure(h_poly(ball.boundary()) == p(&[1, 2, 2, 1]), "h of the boundary")?;
    ensure(th == p(&[0, 1, 0, 1]), format!("theta = {th}"))?;
    ensure(!th.is_unimodal(), "theta is unimodal")?;
    let induced = ball.boundary().is_induced_subcomplex(ball.complex()).map_err(|e| e.to_string())?;
    ensure(!induced, "boundary is induced")?;
    ensure(ball.has_interior_vertex_property(), "interior vertex property fails")?;
    within(start, EXAMPLE_BUDGET)?;
    Ok(format!("theta = {th}"))
}

fn flag_ball() -> Verdict {
    let ball = VerifiedBall::verify(&example_5_4_ball(), Q).map_err(|e| e.to_string())?;
    let (c, b) = (ball.complex(), ball.boundary());
    let th = theta(&ball).map_err(|e| e.to_string())?;
    ensure(c.is_flag(), "not flag")?;
    ensure(h_poly(c) == p(&[1, 7, 6, 2]), "h")?;
    ensure(h_poly(b) == p(&[1, 6, 6, 1]), "h of the boundary")?;
    ensure(th == p(&[0, 1, 0, 1]), format!("theta = {th}"))?;
    ensure(!th.is_gamma_positive(ball.rank()), "theta is γ-positive")?;
    ensure(c.num_vertices() == 11 && c.facets().len() == 16, "size of the ball")?;
    ensure(b.num_vertices() == 9 && b.facets().len() == 14, "size of the boundary")?;
    Ok(format!("theta = {th}, 11 vertices, 16 facets"))
}

fn identity_suites() -> Verdict {
    let start = Instant::now();
    let mut total = 0;
    for (s, id) in [(Suite::Locality, "locality"), (Suite::Theta, "theta-formula"), (Suite::Kms, "kms")] {
        let reports = suite(s)?;
        ensure(reports.iter().all(|r| r.passed()), format!("{id}: not every report passed"))?;
        total += no_failures(&reports, &[id])?;
    }
    within(start, IDENTITY_SUITE_BUDGET)?;
    Ok(format!("{total} identity reports pass in {:.1?}", start.elapsed()))
}

fn theta_of_balls(balls: &[VerificationReport]) -> Verdict {
    let prop = no_failures(balls, &["theta-symmetry", "theta-low-coefficients"])?;
    let in_dim = |d: &'static str| balls.iter().filter(move |r| r.note.as_deref() == Some(d));
    let dim1 = no_failures(in_dim("dimension 1"), &["theta-low-dim"])?;
    let dim2 = no_failures(in_dim("dimension 2"), &["theta-low-dim"])?;
    let higher = no_failures(balls, &["theta-x2-coefficient"])?;
    Ok(format!("{prop} symmetry, {dim1}+{dim2} low-dimension, {higher} x^2-coefficient reports pass"))
}

fn monotonicity(balls: &[VerificationReport]) -> Verdict {
    let reports = suite(Suite::Monotone)?;
    for id in ["monotone-ivp", "monotone-sd", "monotone-sd-unimodal", "monotone-sd-gamma", "monotone-ivp-expansion", "monotone-sd-expansion", "monotone-subball"] {
        no_failures(&reports, &[id])?;
    }
    no_failures(balls, &["theta-sd-closed-form", "theta-sd-dominates"])?;
    let t = edgewise(&simplex(4), 4).map_err(|e| e.to_string())?;
    let rem = corner_deletion_reports("esd4(simplex(4))", t.total(), Q);
    let identity = rem.iter().find(|r| r.id == "corner-deletion").ok_or("no corner deletion report")?;
    ensure(identity.passed(), identity.to_json_line())?;
    let (inner, outer) = (identity.left.clone().unwrap_or_default(), identity.right.clone().unwrap_or_default());
    Ok(format!("theta(Δ) = {inner} = theta(Δ') + x^2 with theta(Δ') = {}", &outer - &p(&[0, 0, 1])))
}

fn antiprism_roots() -> Verdict {
    let start = Instant::now();
    let mut last = IntPoly::zero();
    for m in 1..=5 {
        let (th, real) = antiprism_theta(m, Q).map_err(|e| e.to_string())?;
        ensure(real, format!("theta for |V| = {m} is not real-rooted: {th}"))?;
        last = th;
    }
    within(start, ANTIPRISM_BUDGET)?;
    Ok(format!("|V| = 5 gives {last}"))
}

fn derangements() -> Verdict {
    for n in 0..=7 {
        let d = derangement_poly(n);
        ensure(d == excedance_derangement_poly(n), format!("d_{n} = {d}"))?;
        let via_local = theta_core::invariants::local_h(&theta_core::subdivision::barycentric(&simplex(n)))
            .map_err(|e| e.to_string())?;
        ensure(d == via_local, format!("local h of sd of the simplex on {n} vertices"))?;
    }
    for n in 0..=8 {
        ensure(derangement_poly(n).is_gamma_positive(n), format!("d_{n} is not γ-positive"))?;
    }
    Ok(format!("d_7 = {}", derangement_poly(7)))
}

fn conjectures() -> Verdict {
    let reports = suite(Suite::Conjectures)?;
    ensure(!reports.iter().any(VerificationReport::is_defect), "a proven statement failed")?;
    let checked = reports
        .iter()
        .filter(|r| r.kind == CheckKind::Conjecture && r.outcome != Outcome::Inapplicable)
        .count();
    let found: Vec<&str> = reports.iter().filter(|r| r.is_counterexample()).map(|r| r.instance.as_str()).collect();
    ensure(checked > 0, "nothing checked")?;
    if found.is_empty() {
        Ok(format!("{checked} conjecture instances, no counterexample"))
    } else {
        Ok(format!("{checked} conjecture instances, counterexamples reported: {found:?}"))
    }
}

fn symmetric_decomposition(balls: &[VerificationReport]) -> Verdict {
    let n = no_failures(balls, &["ball-decomposition"])?;
    Ok(format!("{n} reports pass"))
}

fn main() -> ExitCode {
    let balls = suite(Suite::Balls);
    let with_balls = |f: fn(&[VerificationReport]) -> Verdict| match &balls {
        Ok(b) => f(b),
        Err(e) => Err(e.clone()),
    };
    let results: Vec<(&str, Verdict)> = vec![
        ("1  p-tables", p_tables()),
        ("2  ball with non-unimodal theta", non_unimodal_ball()),
        ("3  flag ball with theta not γ-positive", flag_ball()),
        ("4  identity suites", identity_suites()),
        ("5  theta of balls", with_balls(theta_of_balls)),
        ("6  monotonicity", with_balls(monotonicity)),
        ("7  antiprism roots", antiprism_roots()),
        ("8  derangements", derangements()),
        ("9  conjecture scan", conjectures()),
        ("10 ball decomposition", with_balls(symmetric_decomposition)),
    ];
    let mut failed = 0;
    for (name, verdict) in &results {
        match verdict {
            Ok(msg) => println!("PASS {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
