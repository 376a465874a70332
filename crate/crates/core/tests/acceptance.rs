//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL` line before asserting.

mod common;

use std::time::{Duration, Instant};

use common::{compare, golden, Comparison, Tolerance};
use pseudoharmonic::checks::{figure_checks, run_checks, CheckOptions};
use pseudoharmonic::{
    builtin_molecules, make_state, MeasureKind, Measures, Method, NormMode, Space,
};

fn report(id: u32, title: &str, passed: bool, details: &[String]) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("criterion {id}: {verdict} {title}");
    for d in details {
        println!("    {d}");
    }
}

fn m() -> Measures {
    Measures::default()
}

fn value(
    m: &Measures,
    row: &common::GoldenRow,
    kind: MeasureKind,
    mode: NormMode,
    method: Method,
) -> f64 {
    m.compute(kind, &row.state(mode), row.space, row.q, method)
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

#[test]
fn criterion_1_fisher_position_table() {
    let rows = golden("fisher_position.csv");
    let m = m();
    let tol = Tolerance::relative(5e-4);
    let ((analytic, quadrature), elapsed) = timed(|| {
        (
            compare(&rows, tol, |r| value(&m, r, MeasureKind::Fisher, NormMode::PaperFaithful, Method::Analytic)),
            compare(&rows, tol, |r| value(&m, r, MeasureKind::Fisher, NormMode::PaperFaithful, Method::Quadrature)),
        )
    });
    let passed = analytic.passed() && quadrature.passed() && rows.len() == 55 && elapsed < Duration::from_secs(10);
    report(
        1,
        "fisher position table (5e-4 relative, both methods, < 10 s)",
        passed,
        &[
            format!("analytic: {}", analytic.summary()),
            format!("quadrature: {}", quadrature.summary()),
            format!("runtime {:.3} s", elapsed.as_secs_f64()),
        ],
    );
    assert!(passed);
}

#[test]
fn criterion_2_fisher_momentum_table() {
    let rows = golden("fisher_momentum.csv");
    let ground: Vec<_> = rows.iter().filter(|r| r.n == 0).cloned().collect();
    let m = m();
    let closed = compare(&ground, Tolerance::relative(5e-4), |r| {
        value(&m, r, MeasureKind::Fisher, NormMode::PaperFaithful, Method::Analytic)
    });
    let mut details = vec![format!("closed form, n = 0: {}", closed.summary())];
    let mut matching = Vec::new();
    for mode in [NormMode::PaperFaithful, NormMode::PrintedDensity, NormMode::Renormalized] {
        let c = compare(&rows, Tolerance::relative(1e-3), |r| {
            value(&m, r, MeasureKind::Fisher, mode, Method::Quadrature)
        });
        details.push(format!("quadrature, mode {mode}: worst {:.3e} of allowed, {} outside", c.worst_ratio, c.failures.len()));
        if c.passed() {
            matching.push(mode.to_string());
        }
    }
    details.push(format!("matching mode(s): {}", matching.join(", ")));
    let passed = closed.passed() && !matching.is_empty();
    report(2, "fisher momentum table (closed form 5e-4, quadrature 1e-3)", passed, &details);
    assert!(passed);
}

#[test]
fn criterion_3_shannon_tables() {
    let m = m();
    let tol = Tolerance { rel: 1e-3, small: 1.0, abs: 1e-3 };
    let results: Vec<(String, Comparison)> = ["shannon_position.csv", "shannon_momentum.csv"]
        .iter()
        .map(|f| {
            let rows = golden(f);
            let c = compare(&rows, tol, |r| {
                value(&m, r, MeasureKind::Shannon, NormMode::PaperFaithful, Method::Quadrature)
            });
            (f.to_string(), c)
        })
        .collect();
    let passed = results.iter().all(|(_, c)| c.passed() && c.cells == 55);
    let details: Vec<String> = results.iter().map(|(f, c)| format!("{f}: {}", c.summary())).collect();
    report(3, "shannon tables (quadrature, 1e-3 relative or absolute below 1)", passed, &details);
    assert!(passed);
}

#[test]
fn criterion_4_renyi_position_tables() {
    let m = m();
    let tol = Tolerance::relative(1e-3);
    let mut details = Vec::new();
    let mut passed = true;
    for file in ["renyi_q2_position.csv", "renyi_cl2_q3_to_q7_position.csv"] {
        let rows = golden(file);
        let c = compare(&rows, tol, |r| value(&m, r, MeasureKind::Renyi, NormMode::PaperFaithful, Method::Analytic));
        passed &= c.passed() && c.cells == 55;
        details.push(format!("{file}: {}", c.summary()));

        // analytic and quadrature within their combined error estimates
        let mut worst: f64 = 0.0;
        let mut at = String::new();
        for r in &rows {
            let s = r.state(NormMode::PaperFaithful);
            let a = m.renyi(&s, r.q.unwrap(), r.space, Method::Analytic).unwrap();
            let q = m.renyi(&s, r.q.unwrap(), r.space, Method::Quadrature).unwrap();
            let ratio = (a.value - q.value).abs() / (a.err_estimate + q.err_estimate);
            if !(ratio <= worst) {
                worst = ratio;
                at = r.label();
            }
        }
        passed &= worst <= 1.0;
        details.push(format!("{file}: |analytic - quadrature| / combined estimate, worst {worst:.3} at {at}"));
    }
    report(4, "renyi position tables (closed form 1e-3, quadrature within estimates)", passed, &details);
    assert!(passed);
}

#[test]
fn criterion_5_renyi_momentum_table() {
    let rows = golden("renyi_q2_momentum.csv");
    let m = m();
    let c = compare(&rows, Tolerance { rel: 1e-3, small: 0.5, abs: 1e-2 }, |r| {
        value(&m, r, MeasureKind::Renyi, NormMode::PaperFaithful, Method::Analytic)
    });
    let passed = c.passed() && c.cells == 55;
    report(5, "renyi momentum table (closed form, 1e-3 relative)", passed, &[c.summary()]);
    assert!(passed);
}

#[test]
fn criterion_6_tsallis_tables() {
    let m = m();
    let tol = Tolerance { rel: 1e-3, small: 1.0, abs: 1e-3 };
    let mut details = Vec::new();
    let mut passed = true;
    for (file, method) in [
        ("tsallis_q2_position.csv", Method::Analytic),
        ("tsallis_no_plus_ground_state_l_sweep_position.csv", Method::Analytic),
        ("tsallis_m2_3_momentum.csv", Method::Quadrature),
    ] {
        let rows = golden(file);
        let c = compare(&rows, tol, |r| value(&m, r, MeasureKind::Tsallis, NormMode::PaperFaithful, method));
        passed &= c.passed() && c.cells == 55;
        details.push(format!("{file} ({method}): {}", c.summary()));
    }
    // the q = 10 rows sit at the limit 1/(q-1)
    let limit_rows: Vec<_> = golden("tsallis_no_plus_ground_state_l_sweep_position.csv")
        .into_iter()
        .filter(|r| r.q == Some(10.0))
        .collect();
    let limit = compare(&limit_rows, Tolerance::relative(1e-3), |r| {
        value(&m, r, MeasureKind::Tsallis, NormMode::PaperFaithful, Method::Analytic)
    });
    passed &= limit.passed() && limit_rows.iter().all(|r| r.printed == "0.111111");
    details.push(format!("q = 10 limit rows: {}", limit.summary()));
    report(6, "tsallis tables (1e-3 relative or absolute below 1)", passed, &details);
    assert!(passed);
}

#[test]
fn criterion_7_onicescu_and_identities() {
    let m = m();
    let rows = golden("onicescu.csv");
    let c = compare(&rows, Tolerance::relative(1e-3), |r| {
        value(&m, r, MeasureKind::Onicescu, NormMode::PaperFaithful, Method::Analytic)
    });
    let mut passed = c.passed() && c.cells == 44;
    let mut details = vec![format!("table: {}", c.summary())];

    let mut worst: f64 = 0.0;
    for mol in builtin_molecules().iter() {
        for n in 0..=10 {
            let s = make_state(mol, n, 0, NormMode::PaperFaithful);
            for space in Space::ALL {
                let e = m.onicescu(&s, space, Method::Analytic).unwrap().value;
                let r2 = m.renyi(&s, 2.0, space, Method::Analytic).unwrap().value;
                let t2 = m.tsallis(&s, 2.0, space, Method::Analytic).unwrap().value;
                worst = worst.max((r2 + e.ln()).abs()).max((t2 - (1.0 - e)).abs());
            }
        }
    }
    passed &= worst <= 1e-10;
    details.push(format!("R2 = -ln E and T2 = 1 - E: worst deviation {worst:.3e} (limit 1e-10)"));

    // printed triple for O2+ n = 0, to half a unit in the last printed digit
    let s = make_state(builtin_molecules().lookup("O2+").unwrap(), 0, 0, NormMode::PaperFaithful);
    let triple = [
        ("R2", m.renyi(&s, 2.0, Space::Position, Method::Analytic).unwrap().value, 1.27924, 1e-5),
        ("T2", m.tsallis(&s, 2.0, Space::Position, Method::Analytic).unwrap().value, 0.721752, 1e-6),
        ("E", m.onicescu(&s, Space::Position, Method::Analytic).unwrap().value, 0.278248, 1e-6),
    ];
    for (name, got, printed, ulp) in triple {
        let ok = (got - printed).abs() <= 0.5 * ulp;
        passed &= ok;
        details.push(format!("O2+ n=0 {name}: printed {printed}, got {got:.8} {}", if ok { "ok" } else { "off" }));
    }
    report(7, "onicescu table and cross-table identities", passed, &details);
    assert!(passed);
}

#[test]
fn criterion_8_property_suite() {
    let report_ = run_checks(&CheckOptions::default()).unwrap();
    let passed = report_.passed() && report_.elapsed < Duration::from_secs(60);
    let details: Vec<String> = report_.render().lines().map(str::to_string).collect();
    report(8, "invariant suite (< 60 s)", passed, &details);
    assert!(passed);
}

#[test]
fn criterion_9_figure_properties() {
    let outcomes = figure_checks(&m()).unwrap();
    let passed = outcomes.iter().all(|o| o.passed);
    let details: Vec<String> = outcomes
        .iter()
        .map(|o| {
            format!(
                "{} {}: deviation {:.3e}, threshold {:.1e}, {}",
                if o.passed { "ok" } else { "violated" },
                o.name,
                o.deviation,
                o.threshold,
                o.detail
            )
        })
        .collect();
    report(9, "qualitative figure properties", passed, &details);
    assert!(passed);
}
