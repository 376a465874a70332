#![allow(dead_code)]

use std::path::PathBuf;

use pseudoharmonic::{builtin_molecules, make_state, NormMode, Space, StateParams};

#[derive(Debug, Clone)]
pub struct GoldenRow {
    pub molecule: String,
    pub n: u32,
    pub l: u32,
    pub q: Option<f64>,
    pub space: Space,
    pub value: f64,
    /// The value as printed, for reporting.
    pub printed: String,
}

impl GoldenRow {
    pub fn state(&self, mode: NormMode) -> StateParams {
        let mols = builtin_molecules();
        make_state(mols.lookup(&self.molecule).unwrap(), self.n, self.l, mode)
    }

    pub fn label(&self) -> String {
        let q = self.q.map(|q| format!(" q={q:.4}")).unwrap_or_default();
        format!("{} n={} l={}{} {}", self.molecule, self.n, self.l, q, self.space)
    }
}

pub fn golden(name: &str) -> Vec<GoldenRow> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("molecule,n,l,q,space,value"));
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f.len(), 6, "{name}: {line}");
            GoldenRow {
                molecule: f[0].to_string(),
                n: f[1].parse().unwrap(),
                l: f[2].parse().unwrap(),
                q: if f[3].is_empty() { None } else { Some(f[3].parse().unwrap()) },
                space: f[4].parse().unwrap(),
                value: f[5].parse().unwrap(),
                printed: f[5].to_string(),
            }
        })
        .collect()
}

/// Worst-case comparison of computed values against a golden table.
#[derive(Debug)]
pub struct Comparison {
    pub cells: usize,
    pub failures: Vec<String>,
    /// Largest error as a multiple of the allowed error.
    pub worst_ratio: f64,
    pub worst_at: String,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cells > 0
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} cells, worst {:.3} of allowed at {}",
            self.cells, self.worst_ratio, self.worst_at
        );
        if !self.failures.is_empty() {
            s.push_str(&format!("; {} outside: {}", self.failures.len(), self.failures.join("; ")));
        }
        s
    }
}

/// Relative tolerance `rel`, switching to absolute `abs` when the printed
/// magnitude is below `small`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub rel: f64,
    pub small: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const fn relative(rel: f64) -> Self {
        Self { rel, small: 0.0, abs: 0.0 }
    }

    pub fn allowed(&self, expected: f64) -> f64 {
        if expected.abs() < self.small {
            self.abs
        } else {
            self.rel * expected.abs()
        }
    }
}

pub fn compare(rows: &[GoldenRow], tol: Tolerance, mut value: impl FnMut(&GoldenRow) -> f64) -> Comparison {
    let mut out = Comparison {
        cells: 0,
        failures: Vec::new(),
        worst_ratio: 0.0,
        worst_at: String::new(),
    };
    for row in rows {
        let got = value(row);
        let ratio = (got - row.value).abs() / tol.allowed(row.value);
        out.cells += 1;
        if !(ratio <= out.worst_ratio) {
            out.worst_ratio = if ratio.is_nan() { f64::INFINITY } else { ratio };
            out.worst_at = row.label();
        }
        if !(ratio <= 1.0) {
            out.failures.push(format!("{} printed {} got {got:.6}", row.label(), row.printed));
        }
    }
    out
}
