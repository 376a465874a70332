//! Table, sweep and check commands behind the `pseudoharmonic` binary.
//!
//! Everything here returns text so the commands can be tested without a
//! process boundary. Cells are evaluated in parallel and assembled in input
//! order, so output is identical from run to run.

use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{figure_checks, run_checks, CheckOptions};
use crate::error::{Error, Result};
use crate::measures::{MeasureKind, MeasureResult, Measures, Method};
use crate::moldata::MoleculeParams;
use crate::quadrature::QuadratureConfig;
use crate::states::{make_state, NormMode, Space};

pub const CSV_HEADER: &str = "molecule,n,l,q,space,method,value,err,norm_deficit";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Analytic,
    Quadrature,
    Both,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "analytic" => Ok(Self::Analytic),
            "quadrature" => Ok(Self::Quadrature),
            "both" => Ok(Self::Both),
            other => Err(Error::InvalidSpec(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidSpec(format!("unknown format `{other}`"))),
        }
    }
}

/// Output options shared by all commands.
#[derive(Debug, Clone, Copy)]
pub struct Output {
    pub format: Format,
    /// 17 significant digits instead of 6.
    pub full_precision: bool,
}

impl Default for Output {
    fn default() -> Self {
        Self {
            format: Format::Csv,
            full_precision: false,
        }
    }
}

impl Output {
    fn digits(&self) -> usize {
        if self.full_precision {
            17
        } else {
            6
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub kind: MeasureKind,
    pub space: Space,
    pub q: Option<f64>,
    pub molecules: Vec<MoleculeParams>,
    pub n: Vec<u32>,
    pub l: Vec<u32>,
    pub mode: NormMode,
    pub method: MethodChoice,
}

fn check_q(kind: MeasureKind, q: Option<f64>) -> Result<()> {
    match (kind.needs_q(), q) {
        (true, None) => Err(Error::InvalidSpec(format!("{kind} needs --q"))),
        (false, Some(_)) => Err(Error::InvalidSpec(format!("{kind} takes no q"))),
        (true, Some(q)) if !(q > 0.0 && q.is_finite()) => {
            Err(Error::InvalidSpec(format!("q must be positive, got {q}")))
        }
        _ => Ok(()),
    }
}

impl TableSpec {
    pub fn validate(&self) -> Result<()> {
        if self.molecules.is_empty() {
            return Err(Error::InvalidSpec("molecule list is empty".into()));
        }
        if self.n.is_empty() || self.l.is_empty() {
            return Err(Error::InvalidSpec("n and l ranges must be non-empty".into()));
        }
        check_q(self.kind, self.q)
    }
}

/// One output record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub molecule: String,
    pub n: u32,
    pub l: u32,
    pub q: Option<f64>,
    pub space: String,
    pub method: String,
    pub value: f64,
    /// Absent for closed forms that carry no error bound.
    pub err: Option<f64>,
    pub norm_deficit: f64,
}

impl Row {
    fn new(mol: &MoleculeParams, n: u32, l: u32, r: &MeasureResult) -> Result<Self> {
        if !r.value.is_finite() {
            return Err(Error::Domain {
                what: "computed value",
                value: r.value,
            });
        }
        Ok(Self {
            molecule: mol.name().to_string(),
            n,
            l,
            q: r.q,
            space: r.space.to_string(),
            method: r.method.to_string(),
            value: r.value,
            err: r.err_estimate.is_finite().then_some(r.err_estimate),
            norm_deficit: r.norm_deficit,
        })
    }
}

fn methods(choice: MethodChoice) -> &'static [Method] {
    match choice {
        MethodChoice::Analytic => &[Method::Analytic],
        MethodChoice::Quadrature => &[Method::Quadrature],
        MethodChoice::Both => &[Method::Analytic, Method::Quadrature],
    }
}

/// Evaluates one cell. With [`MethodChoice::Both`] a missing closed form is
/// skipped rather than reported.
fn cell(
    m: &Measures,
    spec: &TableSpec,
    mol: &MoleculeParams,
    n: u32,
    l: u32,
) -> Result<Vec<Row>> {
    let s = make_state(mol, n, l, spec.mode);
    let mut rows = Vec::new();
    for &method in methods(spec.method) {
        match m.compute(spec.kind, &s, spec.space, spec.q, method) {
            Ok(r) => rows.push(Row::new(mol, n, l, &r)?),
            Err(Error::Unsupported(_)) if spec.method == MethodChoice::Both => {}
            Err(e) => return Err(e),
        }
    }
    Ok(rows)
}

pub fn table_rows(spec: &TableSpec, cfg: &QuadratureConfig) -> Result<Vec<Row>> {
    spec.validate()?;
    let m = Measures::new(*cfg)?;
    let cells: Vec<(&MoleculeParams, u32, u32)> = spec
        .molecules
        .iter()
        .flat_map(|mol| spec.n.iter().flat_map(move |&n| spec.l.iter().map(move |&l| (mol, n, l))))
        .collect();
    let per_cell: Vec<Vec<Row>> = cells
        .par_iter()
        .map(|&(mol, n, l)| cell(&m, spec, mol, n, l))
        .collect::<Result<_>>()?;
    Ok(per_cell.into_iter().flatten().collect())
}

/// `%g`-style formatting with `digits` significant digits.
pub fn format_g(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    // `{:e}` rounds first, so a carry into the next decade is accounted for
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, e) = sci.split_once('e').expect("scientific format has an exponent");
    let e: i32 = e.parse().expect("integer exponent");
    if e < -5 || e >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        format!("{mantissa}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs())
    } else {
        let decimals = (digits as i32 - 1 - e).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn render_rows(rows: &[Row], out: Output) -> String {
    match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let d = out.digits();
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    r.molecule,
                    r.n,
                    r.l,
                    r.q.map(|q| format_g(q, d)).unwrap_or_default(),
                    r.space,
                    r.method,
                    format_g(r.value, d),
                    r.err.map(|e| format_g(e, d)).unwrap_or_default(),
                    format_g(r.norm_deficit, d)
                );
            }
            s
        }
    }
}

pub fn cmd_table(spec: &TableSpec, out: Output, cfg: &QuadratureConfig) -> Result<String> {
    Ok(render_rows(&table_rows(spec, cfg)?, out))
}

/// The quantity a sweep varies.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepAxis {
    L(Vec<u32>),
    Q(Vec<f64>),
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub kind: MeasureKind,
    pub space: Space,
    pub molecules: Vec<MoleculeParams>,
    pub n: u32,
    /// Fixed ℓ when sweeping q.
    pub l: u32,
    /// Fixed q when sweeping ℓ.
    pub q: Option<f64>,
    pub axis: SweepAxis,
    pub mode: NormMode,
    pub method: Method,
}

#[derive(Debug, Serialize)]
struct SweepJson<'a> {
    axis: &'a str,
    molecules: Vec<&'a str>,
    points: Vec<f64>,
    /// `values[i][j]`: point `i`, molecule `j`.
    values: Vec<Vec<f64>>,
}

pub fn cmd_sweep(spec: &SweepSpec, out: Output, cfg: &QuadratureConfig) -> Result<String> {
    if spec.molecules.is_empty() {
        return Err(Error::InvalidSpec("molecule list is empty".into()));
    }
    let (axis, points): (&str, Vec<(u32, Option<f64>)>) = match &spec.axis {
        SweepAxis::L(ls) => {
            check_q(spec.kind, spec.q)?;
            ("l", ls.iter().map(|&l| (l, spec.q)).collect())
        }
        SweepAxis::Q(qs) => {
            if !spec.kind.needs_q() {
                return Err(Error::InvalidSpec(format!("{} has no q to sweep", spec.kind)));
            }
            if spec.q.is_some() {
                return Err(Error::InvalidSpec("sweep either l or q, not both".into()));
            }
            for &q in qs {
                check_q(spec.kind, Some(q))?;
            }
            ("q", qs.iter().map(|&q| (spec.l, Some(q))).collect())
        }
    };
    if points.is_empty() {
        return Err(Error::InvalidSpec("sweep range is empty".into()));
    }
    let m = Measures::new(*cfg)?;
    let values: Vec<Vec<f64>> = points
        .par_iter()
        .map(|&(l, q)| {
            spec.molecules
                .iter()
                .map(|mol| {
                    let s = make_state(mol, spec.n, l, spec.mode);
                    let r = m.compute(spec.kind, &s, spec.space, q, spec.method)?;
                    if r.value.is_finite() {
                        Ok(r.value)
                    } else {
                        Err(Error::Domain {
                            what: "computed value",
                            value: r.value,
                        })
                    }
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let coords: Vec<f64> = points
        .iter()
        .map(|&(l, q)| if axis == "l" { f64::from(l) } else { q.unwrap_or(f64::NAN) })
        .collect();
    let names: Vec<&str> = spec.molecules.iter().map(|m| m.name()).collect();
    Ok(match out.format {
        Format::Json => {
            let body = SweepJson {
                axis,
                molecules: names,
                points: coords,
                values,
            };
            serde_json::to_string_pretty(&body).expect("sweep serializes") + "\n"
        }
        Format::Csv => {
            let d = out.digits();
            let mut s = format!("{axis},{}\n", names.join(","));
            for (x, row) in coords.iter().zip(&values) {
                let cells: Vec<String> = row.iter().map(|v| format_g(*v, d)).collect();
                let _ = writeln!(s, "{},{}", format_g(*x, d), cells.join(","));
            }
            s
        }
    })
}

/// Runs the invariant suite, appends discrepancy records to `ledger` when
/// given, and returns the report with the overall verdict.
pub fn cmd_check(opts: &CheckOptions, figures: bool, ledger: Option<&Path>) -> Result<(String, bool)> {
    let report = run_checks(opts)?;
    let mut text = report.render();
    let mut passed = report.passed();
    if figures {
        let _ = writeln!(text, "figure properties:");
        for o in figure_checks(&Measures::new(opts.cfg)?)? {
            passed &= o.passed;
            let _ = writeln!(
                text,
                "{} {:<56} deviation {:>10.3e}  threshold {:>9.2e}  {}",
                if o.passed { "PASS" } else { "FAIL" },
                o.name,
                o.deviation,
                o.threshold,
                o.detail
            );
        }
    }
    if let Some(path) = ledger {
        let mut f = OpenOptions::new().create(true).append(true).open(path)?;
        f.write_all(report.discrepancy_lines().as_bytes())?;
        let _ = writeln!(
            text,
            "{} discrepancy record(s) appended to {}",
            report.discrepancies.len(),
            path.display()
        );
    }
    Ok((text, passed))
}

/// Parses `a..b` (inclusive), `a,b,c` or a single value.
pub fn parse_u32_range(s: &str) -> Result<Vec<u32>> {
    let bad = |what: &str| Error::InvalidSpec(format!("bad range `{s}`: {what}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad("start is not an integer"))?;
        let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad("end is not an integer"))?;
        if a > b {
            return Err(bad("start exceeds end"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad("not an integer list")))
        .collect()
}

/// Like [`parse_u32_range`] for q: `a..b` steps by one, lists may hold any
/// positive reals.
pub fn parse_q_list(s: &str) -> Result<Vec<f64>> {
    let bad = |what: &str| Error::InvalidSpec(format!("bad q list `{s}`: {what}"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: f64 = a.trim().parse().map_err(|_| bad("start is not a number"))?;
        let b: f64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad("end is not a number"))?;
        if !(a <= b) {
            return Err(bad("start exceeds end"));
        }
        let steps = (b - a).floor() as u32;
        return Ok((0..=steps).map(|i| a + f64::from(i)).collect());
    }
    s.split(',')
        .map(|t| parse_q(t.trim()).map_err(|_| bad("not a number list")))
        .collect()
}

/// A single q, accepting fractions such as `2/3`.
pub fn parse_q(s: &str) -> Result<f64> {
    let bad = || Error::InvalidSpec(format!("bad q `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| bad())?;
            let b: f64 = b.trim().parse().map_err(|_| bad())?;
            Ok(a / b)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moldata::builtin_molecules;

    fn spec(kind: MeasureKind, q: Option<f64>) -> TableSpec {
        TableSpec {
            kind,
            space: Space::Position,
            q,
            molecules: vec![builtin_molecules().lookup("Na2").unwrap().clone()],
            n: (0..=10).collect(),
            l: vec![0],
            mode: NormMode::PaperFaithful,
            method: MethodChoice::Analytic,
        }
    }

    #[test]
    fn g_formatting() {
        assert_eq!(format_g(4.034489, 6), "4.03449");
        assert_eq!(format_g(12.433301, 6), "12.4333");
        assert_eq!(format_g(0.316484, 6), "0.316484");
        assert_eq!(format_g(4.395e-6, 6), "4.395e-06");
        assert_eq!(format_g(123456789.0, 6), "1.23457e+08");
        assert_eq!(format_g(-0.0228546, 6), "-0.0228546");
        assert_eq!(format_g(9.9999996, 6), "10");
        assert_eq!(format_g(0.0, 6), "0");
        assert_eq!(format_g(2.0, 17), "2");
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_u32_range("0..3").unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(parse_u32_range("0..=2").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_u32_range("1,4").unwrap(), vec![1, 4]);
        assert_eq!(parse_u32_range("7").unwrap(), vec![7]);
        assert!(parse_u32_range("3..1").is_err());
        assert!(parse_u32_range("a").is_err());
        assert_eq!(parse_q_list("2..7").unwrap(), vec![2.0, 3.0, 4.0, 5.0, 6.0, 7.0]);
        assert_eq!(parse_q_list("0.5, 2").unwrap(), vec![0.5, 2.0]);
        assert!((parse_q("2/3").unwrap() - 2.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn fisher_table_na2() {
        let rows = table_rows(&spec(MeasureKind::Fisher, None), &QuadratureConfig::default()).unwrap();
        assert_eq!(rows.len(), 11);
        assert!((rows[0].value - 4.03449).abs() < 1e-4 * 4.03449);
        assert!((rows[1].value - 11.6049).abs() < 1e-4 * 11.6049);
    }

    #[test]
    fn csv_header_and_shape() {
        let text = cmd_table(&spec(MeasureKind::Fisher, None), Output::default(), &QuadratureConfig::default()).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first.len(), 9);
        assert_eq!(&first[..6], &["Na2", "0", "0", "", "position", "analytic"]);
    }

    #[test]
    fn validation_errors() {
        let mut s = spec(MeasureKind::Fisher, None);
        s.molecules.clear();
        assert!(matches!(s.validate(), Err(Error::InvalidSpec(_))));
        assert!(spec(MeasureKind::Renyi, None).validate().is_err());
        assert!(spec(MeasureKind::Shannon, Some(2.0)).validate().is_err());
    }

    #[test]
    fn both_skips_missing_closed_form() {
        let mut s = spec(MeasureKind::Fisher, None);
        s.space = Space::Momentum;
        s.n = vec![0, 1];
        s.method = MethodChoice::Both;
        let rows = table_rows(&s, &QuadratureConfig::default()).unwrap();
        let methods: Vec<&str> = rows.iter().map(|r| r.method.as_str()).collect();
        assert_eq!(methods, vec!["analytic", "quadrature", "quadrature"]);
        s.method = MethodChoice::Analytic;
        assert!(matches!(table_rows(&s, &QuadratureConfig::default()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn json_rows_parse() {
        let mut s = spec(MeasureKind::Renyi, Some(2.0));
        s.n = vec![0];
        let text = cmd_table(&s, Output { format: Format::Json, full_precision: true }, &QuadratureConfig::default())
            .unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["molecule"], "Na2");
        assert_eq!(v[0]["q"], 2.0);
    }
}
