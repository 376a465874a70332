//! Invariant suite behind `pseudoharmonic check`.
//!
//! Every check measures a deviation and compares it with a threshold; a
//! check passes when `deviation <= threshold`. Closed forms that disagree
//! with quadrature without failing a check (the asymptotic Shannon entropy)
//! are collected as discrepancy records instead.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::measures::{MeasureKind, Measures, Method};
use crate::moldata::{builtin_molecules, MoleculeParams};
use crate::quadrature::{integrate_halfline, QuadratureConfig};
use crate::specfun::real::mp_one;
use crate::specfun::{
    bell_polynomial, bell_polynomial_by_partitions, laguerre, laguerre_series,
    lauricella_fa_naive, lauricella_fa_symmetric, ln_gamma, ln_laguerre_power_moment_bell,
    orthonormal_laguerre_coeffs, poly_power, power_coeffs_via_bell, Real,
};
use crate::states::{make_state, radial_norm, NormMode, Space};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub deviation: f64,
    pub threshold: f64,
    pub passed: bool,
    pub detail: String,
}

/// A closed form that disagrees with quadrature.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub measure: String,
    pub molecule: String,
    pub n: u32,
    pub l: u32,
    pub space: String,
    pub mode: String,
    pub analytic: f64,
    pub quadrature: f64,
    pub rel_diff: f64,
    pub note: String,
}

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    /// Replaces every threshold when set.
    pub tolerance_override: Option<f64>,
    pub cfg: QuadratureConfig,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
    pub discrepancies: Vec<Discrepancy>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let _ = writeln!(
                out,
                "{} {:<44} deviation {:>10.3e}  threshold {:>9.2e}  {}",
                if o.passed { "PASS" } else { "FAIL" },
                o.name,
                o.deviation,
                o.threshold,
                o.detail
            );
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        let _ = writeln!(
            out,
            "{} checks, {} failed, {} discrepancies recorded, {:.2} s",
            self.outcomes.len(),
            failed,
            self.discrepancies.len(),
            self.elapsed.as_secs_f64()
        );
        out
    }

    /// One JSON object per line.
    pub fn discrepancy_lines(&self) -> String {
        self.discrepancies
            .iter()
            .map(|d| serde_json::to_string(d).expect("plain record serializes") + "\n")
            .collect()
    }
}

/// Accumulates the worst deviation of a check over many cases.
struct Worst {
    deviation: f64,
    at: String,
}

impl Worst {
    fn new() -> Self {
        Self {
            deviation: 0.0,
            at: String::new(),
        }
    }

    fn see(&mut self, deviation: f64, at: impl FnOnce() -> String) {
        // NaN counts as the worst possible outcome
        let d = if deviation.is_nan() { f64::INFINITY } else { deviation };
        if self.at.is_empty() || d > self.deviation {
            self.deviation = d;
            self.at = at();
        }
    }

    fn merge(self, other: Worst) -> Worst {
        if !other.at.is_empty() && (self.at.is_empty() || other.deviation > self.deviation) {
            other
        } else {
            self
        }
    }
}

type CheckFn = fn(&Measures) -> Result<Worst>;

struct Check {
    name: &'static str,
    threshold: f64,
    run: CheckFn,
}

fn molecules() -> Vec<MoleculeParams> {
    builtin_molecules().iter().cloned().collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn label(mol: &MoleculeParams, n: u32, l: u32, space: Space) -> String {
    format!("{} n={n} l={l} {space}", mol.name())
}

fn normalization(_: &Measures) -> Result<Worst> {
    let cfg = QuadratureConfig::default();
    let cases: Vec<(MoleculeParams, u32, Space)> = molecules()
        .into_iter()
        .flat_map(|m| (0..=10).flat_map(move |n| Space::ALL.map(|s| (m.clone(), n, s))))
        .collect();
    cases
        .par_iter()
        .map(|(mol, n, space)| {
            let s = make_state(mol, *n, 0, NormMode::Renormalized);
            let v = radial_norm(&s, *space, &cfg)?.value;
            let mut w = Worst::new();
            w.see((v - 1.0).abs(), || label(mol, *n, 0, *space));
            Ok(w)
        })
        .try_reduce(Worst::new, |a, b| Ok(a.merge(b)))
}

fn laguerre_dual_path(_: &Measures) -> Result<Worst> {
    let one = mp_one(256);
    let mut w = Worst::new();
    for n in 0..=6 {
        for alpha in [0.5, 1.7, 4.3] {
            for i in 0..=200 {
                let x = 50.0 * f64::from(i) / 200.0;
                let rec = laguerre(n, alpha, x);
                let ser = Real::to_f64(&laguerre_series(&one, n, alpha, x));
                w.see((rec - ser).abs() / ser.abs().max(1.0), || {
                    format!("n={n} alpha={alpha} x={x}")
                });
            }
        }
    }
    Ok(w)
}

fn bell_vs_power(_: &Measures) -> Result<Worst> {
    let mut w = Worst::new();
    for n in 0..=4 {
        for alpha in [0.5, 1.7, 4.3] {
            let c = orthonormal_laguerre_coeffs(n, alpha);
            for q in 1..=3usize {
                let direct = poly_power(&c, 2 * q as u32);
                let bell = power_coeffs_via_bell(&1.0, c.coeffs(), 2 * q);
                let scale = direct.coeffs().iter().fold(0.0f64, |m, v| m.max(v.abs()));
                for (k, (a, b)) in bell.iter().zip(direct.coeffs()).enumerate() {
                    w.see((a - b).abs() / scale, || format!("n={n} alpha={alpha} 2q={} k={k}", 2 * q));
                }
            }
        }
    }
    Ok(w)
}

fn bell_vs_partitions(_: &Measures) -> Result<Worst> {
    let a: Vec<f64> = (1..=10).map(|i| 0.3 + 0.17 * f64::from(i)).collect();
    let mut w = Worst::new();
    for m in 1..=10 {
        for t in 1..=m {
            let r = bell_polynomial(m, t, &a);
            let p = bell_polynomial_by_partitions(m, t, &a);
            w.see(rel(r, p), || format!("B_{{{m},{t}}}"));
        }
    }
    Ok(w)
}

fn lauricella_vs_naive(_: &Measures) -> Result<Worst> {
    let one = mp_one(256);
    let mut w = Worst::new();
    for n in 0..=3 {
        for s in 1..=4 {
            for k in 0..=2 {
                for (a, c, t) in [(0.7, 1.5, 0.25), (3.5, 2.0, 0.5), (8.2, 4.8, 1.0 / 3.0)] {
                    let naive = Real::to_f64(&lauricella_fa_naive(&one, a, n, c, s, k, t));
                    let fast = lauricella_fa_symmetric(a, n, c, s, k, t);
                    w.see((fast - naive).abs() / naive.abs().max(1e-300), || {
                        format!("n={n} s={s} k={k} a={a} c={c} t={t}")
                    });
                }
            }
        }
    }
    Ok(w)
}

fn quadrature_gamma_moments(_: &Measures) -> Result<Worst> {
    let cfg = QuadratureConfig::default();
    let mut w = Worst::new();
    for k in 0..=40 {
        let r = integrate_halfline(|x: f64| x.powi(k) * (-x * x).exp(), 1.0, &cfg)?;
        let exact = (ln_gamma((f64::from(k) + 1.0) / 2.0)).exp() / 2.0;
        w.see(rel(r.value, exact), || format!("degree {k}"));
    }
    Ok(w)
}

/// Result change when the first cut-off is doubled, in units of the
/// reported error estimate.
fn quadrature_tail_stability(m: &Measures) -> Result<Worst> {
    let wide = Measures {
        cfg: QuadratureConfig {
            tail_sigma: 2.0 * m.cfg.tail_sigma,
            ..m.cfg
        },
    };
    let mut w = Worst::new();
    for mol in molecules() {
        for n in [0, 5, 10] {
            let s = make_state(&mol, n, 0, NormMode::PaperFaithful);
            for space in Space::ALL {
                for kind in [MeasureKind::Fisher, MeasureKind::Shannon, MeasureKind::Onicescu] {
                    let a = m.compute(kind, &s, space, None, Method::Quadrature)?;
                    let b = wide.compute(kind, &s, space, None, Method::Quadrature)?;
                    let bound = a.err_estimate.max(b.err_estimate).max(f64::MIN_POSITIVE);
                    w.see((a.value - b.value).abs() / bound, || {
                        format!("{kind} {}", label(&mol, n, 0, space))
                    });
                }
            }
        }
    }
    Ok(w)
}

fn quadrature_determinism(m: &Measures) -> Result<Worst> {
    let s = make_state(&molecules()[2], 7, 1, NormMode::PaperFaithful);
    let mut w = Worst::new();
    for space in Space::ALL {
        let a = m.shannon(&s, space, Method::Quadrature)?;
        let b = m.shannon(&s, space, Method::Quadrature)?;
        let same = a.value.to_bits() == b.value.to_bits() && a.err_estimate.to_bits() == b.err_estimate.to_bits();
        w.see(if same { 0.0 } else { 1.0 }, || format!("{space}"));
    }
    Ok(w)
}

fn derivative_vs_finite_differences(_: &Measures) -> Result<Worst> {
    let h = 1e-5;
    let mut w = Worst::new();
    for mol in molecules() {
        for n in 0..=5 {
            for l in 0..=5 {
                let s = make_state(&mol, n, l, NormMode::PaperFaithful);
                for space in Space::ALL {
                    let d = s.density(space);
                    for i in 1..=100 {
                        let x = 4.0 * d.scale() * f64::from(i) / 100.0;
                        // skip points within a step of a node
                        let (lo, hi) = (d.laguerre_factor(x - 2.0 * h), d.laguerre_factor(x + 2.0 * h));
                        if lo.signum() != hi.signum() {
                            continue;
                        }
                        let fd = (d.value(x + h) - d.value(x - h)) / (2.0 * h);
                        let an = d.derivative(x);
                        w.see((an - fd).abs() / (1.0 + fd.abs()), || {
                            format!("{} x={x:.4}", label(&mol, n, l, space))
                        });
                    }
                }
            }
        }
    }
    Ok(w)
}

/// `|measure(q = 1 ± 1e-4) - shannon|` for normalized states. The slope at
/// `q = 1` is `-Var(ln ρ)/2` for Rényi but `-<(ln ρ)²>/2` for Tsallis, so
/// the latter grows with the entropy itself.
fn q_to_one(m: &Measures, kind: MeasureKind) -> Result<Worst> {
    let mut w = Worst::new();
    for mol in molecules() {
        for n in 0..=3 {
            let s = make_state(&mol, n, 0, NormMode::Renormalized);
            for space in Space::ALL {
                let sh = m.shannon(&s, space, Method::Quadrature)?.value;
                for q in [1.0 - 1e-4, 1.0 + 1e-4] {
                    let v = m.compute(kind, &s, space, Some(q), Method::Quadrature)?.value;
                    w.see((v - sh).abs(), || format!("{} q={q}", label(&mol, n, 0, space)));
                }
            }
        }
    }
    Ok(w)
}

fn renyi_q_to_one(m: &Measures) -> Result<Worst> {
    q_to_one(m, MeasureKind::Renyi)
}

fn tsallis_q_to_one(m: &Measures) -> Result<Worst> {
    q_to_one(m, MeasureKind::Tsallis)
}

fn renyi_onicescu_link(m: &Measures) -> Result<Worst> {
    let mut w = Worst::new();
    for mol in molecules() {
        for n in 0..=10 {
            let s = make_state(&mol, n, 0, NormMode::PaperFaithful);
            for space in Space::ALL {
                let e = m.onicescu(&s, space, Method::Analytic)?.value;
                let r = m.renyi(&s, 2.0, space, Method::Analytic)?.value;
                let t = m.tsallis(&s, 2.0, space, Method::Analytic)?.value;
                w.see((r + e.ln()).abs().max((t - (1.0 - e)).abs()), || label(&mol, n, 0, space));
            }
        }
    }
    Ok(w)
}

fn fisher_analytic_vs_quadrature(m: &Measures) -> Result<Worst> {
    let mut w = Worst::new();
    for mol in molecules() {
        for n in 0..=10 {
            let s = make_state(&mol, n, 0, NormMode::PaperFaithful);
            let mut spaces = vec![Space::Position];
            if n == 0 {
                spaces.push(Space::Momentum);
            }
            for space in spaces {
                let a = m.fisher(&s, space, Method::Analytic)?.value;
                let q = m.fisher(&s, space, Method::Quadrature)?.value;
                w.see(rel(a, q), || label(&mol, n, 0, space));
            }
        }
    }
    Ok(w)
}

/// Analytic vs quadrature entropic moments, in units of the allowed gap
/// `max(1e-8 |W|, combined error estimate)`.
fn moment_analytic_vs_quadrature(m: &Measures) -> Result<Worst> {
    let mut w = Worst::new();
    for mol in molecules() {
        for n in 0..=5 {
            let s = make_state(&mol, n, 0, NormMode::PaperFaithful);
            for space in Space::ALL {
                for q in [2.0, 3.0] {
                    let a = m.wq(&s, q, space, Method::Analytic)?;
                    let b = m.wq(&s, q, space, Method::Quadrature)?;
                    let allowed = (1e-8 * a.value.abs()).max(a.err_estimate + b.err_estimate);
                    w.see((a.value - b.value).abs() / allowed, || {
                        format!("{} q={q}", label(&mol, n, 0, space))
                    });
                }
            }
        }
    }
    Ok(w)
}

/// The position moment at q = 2 computed by the Bell expansion instead of
/// the Lauricella reduction.
fn bell_vs_lauricella_position(m: &Measures) -> Result<Worst> {
    let mut w = Worst::new();
    for mol in molecules() {
        for n in 0..=5 {
            let s = make_state(&mol, n, 0, NormMode::PaperFaithful);
            let q = 2.0;
            let lauricella = m.wq(&s, q, Space::Position, Method::Analytic)?.value;
            let a = q * s.gamma_ell + 1.5;
            let (_, h) = s.shape(Space::Position);
            let moment = ln_laguerre_power_moment_bell(a, n, s.alpha(), 4, q);
            let bell = ((2.0 * PI).ln() + q * s.ln_prefactor(Space::Position) - a * h.ln()
                + moment.ln_value)
                .exp();
            w.see(rel(bell, lauricella), || label(&mol, n, 0, Space::Position));
        }
    }
    Ok(w)
}

/// Largest `prev - next` over a sequence that must increase strictly; a
/// negative result means strict increase.
fn rise_violation(values: &[f64]) -> f64 {
    values.windows(2).map(|p| p[0] - p[1]).fold(f64::NEG_INFINITY, f64::max)
}

fn sequence(
    m: &Measures,
    mol: &MoleculeParams,
    kind: MeasureKind,
    space: Space,
    q: Option<f64>,
    states: impl Iterator<Item = (u32, u32)>,
) -> Result<Vec<f64>> {
    states
        .map(|(n, l)| {
            let s = make_state(mol, n, l, NormMode::PaperFaithful);
            Ok(m.compute(kind, &s, space, q, Method::Quadrature)?.value)
        })
        .collect()
}

fn monotone(
    m: &Measures,
    kind: MeasureKind,
    space: Space,
    q: Option<f64>,
    along_l: bool,
    increasing: bool,
) -> Result<Worst> {
    let mut w = Worst::new();
    for mol in molecules() {
        let values = if along_l {
            sequence(m, &mol, kind, space, q, (0..=50).map(|l| (0, l)))?
        } else {
            sequence(m, &mol, kind, space, q, (0..=10).map(|n| (n, 0)))?
        };
        let signed: Vec<f64> = if increasing {
            values
        } else {
            values.iter().map(|v| -v).collect()
        };
        w.see(rise_violation(&signed).max(0.0), || mol.name().to_string());
    }
    Ok(w)
}

fn fisher_increasing_in_n(m: &Measures) -> Result<Worst> {
    let a = monotone(m, MeasureKind::Fisher, Space::Position, None, false, true)?;
    let b = monotone(m, MeasureKind::Fisher, Space::Momentum, None, false, true)?;
    Ok(a.merge(b))
}

fn fisher_decreasing_in_l(m: &Measures) -> Result<Worst> {
    monotone(m, MeasureKind::Fisher, Space::Position, None, true, false)
}

fn shannon_increasing_in_n(m: &Measures) -> Result<Worst> {
    monotone(m, MeasureKind::Shannon, Space::Position, None, false, true)
}

fn shannon_decreasing_in_l(m: &Measures) -> Result<Worst> {
    monotone(m, MeasureKind::Shannon, Space::Position, None, true, false)
}

fn renyi_momentum_decreasing_in_n(m: &Measures) -> Result<Worst> {
    monotone(m, MeasureKind::Renyi, Space::Momentum, Some(2.0), false, false)
}

fn suite() -> Vec<Check> {
    vec![
        Check { name: "renormalized radial norm is 1", threshold: 1e-10, run: normalization },
        Check { name: "laguerre recurrence vs explicit series", threshold: 1e-12, run: laguerre_dual_path },
        Check { name: "bell expansion vs polynomial power", threshold: 1e-10, run: bell_vs_power },
        Check { name: "bell recurrence vs partition sum", threshold: 1e-12, run: bell_vs_partitions },
        Check { name: "lauricella reduction vs nested sum", threshold: 1e-10, run: lauricella_vs_naive },
        Check { name: "quadrature polynomial x gaussian moments", threshold: 1e-11, run: quadrature_gamma_moments },
        Check { name: "quadrature tail doubling / err estimate", threshold: 1.0, run: quadrature_tail_stability },
        Check { name: "quadrature determinism", threshold: 0.0, run: quadrature_determinism },
        Check { name: "density derivative vs finite differences", threshold: 1e-6, run: derivative_vs_finite_differences },
        Check { name: "renyi q->1 continuity to shannon", threshold: 1e-3, run: renyi_q_to_one },
        Check { name: "tsallis q->1 continuity to shannon", threshold: 1e-3, run: tsallis_q_to_one },
        Check { name: "R2 = -ln E and T2 = 1 - E", threshold: 1e-10, run: renyi_onicescu_link },
        Check { name: "fisher closed form vs quadrature", threshold: 1e-8, run: fisher_analytic_vs_quadrature },
        Check { name: "entropic moment closed form vs quadrature", threshold: 1.0, run: moment_analytic_vs_quadrature },
        Check { name: "bell path vs lauricella path (position)", threshold: 1e-8, run: bell_vs_lauricella_position },
        Check { name: "fisher increasing in n", threshold: 0.0, run: fisher_increasing_in_n },
        Check { name: "fisher position decreasing in l", threshold: 0.0, run: fisher_decreasing_in_l },
        Check { name: "shannon position increasing in n", threshold: 0.0, run: shannon_increasing_in_n },
        Check { name: "shannon position decreasing in l", threshold: 0.0, run: shannon_decreasing_in_l },
        Check { name: "renyi momentum (q=2) decreasing in n", threshold: 0.0, run: renyi_momentum_decreasing_in_n },
    ]
}

/// Records where the asymptotic Shannon entropy misses quadrature by more
/// than `1e-3` relative.
fn shannon_discrepancies(m: &Measures) -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for mol in molecules() {
        for mode in [NormMode::PaperFaithful, NormMode::Renormalized] {
            for n in 1..=10 {
                let s = make_state(&mol, n, 0, mode);
                for space in Space::ALL {
                    let a = m.shannon(&s, space, Method::Analytic)?.value;
                    let q = m.shannon(&s, space, Method::Quadrature)?.value;
                    let rel_diff = rel(a, q);
                    if rel_diff > 1e-3 {
                        out.push(Discrepancy {
                            measure: "shannon".into(),
                            molecule: mol.name().into(),
                            n,
                            l: 0,
                            space: space.to_string(),
                            mode: mode.to_string(),
                            analytic: a,
                            quadrature: q,
                            rel_diff,
                            note: "closed form uses the large-n entropic integral".into(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn run_checks(opts: &CheckOptions) -> Result<CheckReport> {
    let start = Instant::now();
    let m = Measures::new(opts.cfg)?;
    let outcomes: Vec<CheckOutcome> = suite()
        .par_iter()
        .map(|c| {
            let threshold = opts.tolerance_override.unwrap_or(c.threshold);
            match (c.run)(&m) {
                Ok(w) => CheckOutcome {
                    name: c.name.into(),
                    deviation: w.deviation,
                    threshold,
                    passed: w.deviation <= threshold,
                    detail: if w.at.is_empty() { String::new() } else { format!("worst at {}", w.at) },
                },
                Err(e) => CheckOutcome {
                    name: c.name.into(),
                    deviation: f64::INFINITY,
                    threshold,
                    passed: false,
                    detail: format!("error: {e}"),
                },
            }
        })
        .collect();
    let discrepancies = shannon_discrepancies(&m)?;
    Ok(CheckReport {
        outcomes,
        discrepancies,
        elapsed: start.elapsed(),
    })
}

/// Qualitative claims about the ℓ and n sweeps behind the figures.
pub fn figure_checks(m: &Measures) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let outcome = |name: &str, deviation: f64, threshold: f64, detail: String| CheckOutcome {
        name: name.into(),
        deviation,
        threshold,
        passed: deviation <= threshold,
        detail,
    };

    for (kind, name) in [(MeasureKind::Fisher, "fisher"), (MeasureKind::Shannon, "shannon")] {
        let mut rise = Worst::new();
        let mut tail = Worst::new();
        for mol in molecules() {
            let v = sequence(m, &mol, kind, Space::Position, None, (0..=50).map(|l| (0, l)))?;
            rise.see(rise_violation(&v.iter().map(|x| -x).collect::<Vec<_>>()).max(0.0), || {
                mol.name().to_string()
            });
            tail.see(v[50].abs() / v[0].abs(), || mol.name().to_string());
        }
        out.push(outcome(
            &format!("{name} position decreasing in l (n=0, l=0..50)"),
            rise.deviation,
            0.0,
            format!("worst at {}", rise.at),
        ));
        out.push(outcome(
            &format!("{name} position at l=50 / l=0 (decay toward 0)"),
            tail.deviation,
            1e-2,
            format!("worst at {}", tail.at),
        ));
    }

    let no_plus = builtin_molecules().lookup("NO+")?.clone();
    let ratios = |kind: MeasureKind, q: Option<f64>| -> Result<Vec<f64>> {
        (0..=10)
            .map(|n| m.ratio(&make_state(&no_plus, n, 0, NormMode::PaperFaithful), kind, q))
            .collect()
    };
    let fisher = ratios(MeasureKind::Fisher, None)?;
    out.push(outcome(
        "fisher impetus/length ratio decreasing in n (NO+)",
        rise_violation(&fisher.iter().map(|x| -x).collect::<Vec<_>>()).max(0.0),
        0.0,
        format!("n=0: {:.6}, n=10: {:.6}", fisher[0], fisher[10]),
    ));
    let renyi = ratios(MeasureKind::Renyi, Some(2.0))?;
    out.push(outcome(
        "renyi (q=2) impetus/length ratio decreasing in n (NO+)",
        rise_violation(&renyi.iter().map(|x| -x).collect::<Vec<_>>()).max(0.0),
        0.0,
        format!("n=0: {:.6}, n=10: {:.6}", renyi[0], renyi[10]),
    ));
    let shannon = ratios(MeasureKind::Shannon, None)?;
    // down from n=0 to n=1, then up through n=10
    let down = (shannon[1] - shannon[0]).max(0.0);
    let up = rise_violation(&shannon[1..]).max(0.0);
    let values: Vec<String> = shannon.iter().map(|v| format!("{v:.5}")).collect();
    out.push(outcome(
        "shannon impetus/length ratio dips at n=1 then rises (NO+)",
        down.max(up),
        0.0,
        format!("n=0..10: {}", values.join(" ")),
    ));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rise_violation_sign() {
        assert!(rise_violation(&[1.0, 2.0, 3.0]) < 0.0);
        assert_eq!(rise_violation(&[1.0, 3.0, 2.0]), 1.0);
    }

    #[test]
    fn worst_tracks_maximum() {
        let mut w = Worst::new();
        w.see(1e-3, || "a".into());
        w.see(1e-5, || "b".into());
        w.see(2e-3, || "c".into());
        assert_eq!(w.deviation, 2e-3);
        assert_eq!(w.at, "c");
        let mut v = Worst::new();
        v.see(f64::NAN, || "nan".into());
        assert!(v.deviation.is_infinite());
    }

    #[test]
    fn zero_override_exposes_rounding() {
        let opts = CheckOptions {
            tolerance_override: Some(0.0),
            ..Default::default()
        };
        let report = run_checks(&opts).unwrap();
        assert!(report.outcomes.iter().any(|o| o.deviation > 0.0 && !o.passed));
    }

    #[test]
    fn discrepancy_lines_are_json() {
        let d = Discrepancy {
            measure: "shannon".into(),
            molecule: "Na2".into(),
            n: 1,
            l: 0,
            space: "position".into(),
            mode: "paper".into(),
            analytic: 1.0,
            quadrature: 2.0,
            rel_diff: 0.5,
            note: String::new(),
        };
        let report = CheckReport {
            outcomes: vec![],
            discrepancies: vec![d],
            elapsed: Duration::ZERO,
        };
        let line = report.discrepancy_lines();
        let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(v["molecule"], "Na2");
    }
}
