//! Spectroscopic constants and the molecule file format.
//!
//! A molecule file is plain text with one `name, d_e, r_e` record per line,
//! `d_e` in eV and `r_e` in Å. Blank lines and everything after `#` are
//! ignored.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeParams {
    name: String,
    d_e: f64,
    r_e: f64,
}

impl MoleculeParams {
    pub fn new(name: impl Into<String>, d_e: f64, r_e: f64) -> Result<Self> {
        let name = name.into();
        for (field, value) in [("d_e", d_e), ("r_e", r_e)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidField { name, field, value });
            }
        }
        Ok(Self { name, d_e, r_e })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dissociation energy in eV.
    pub fn d_e(&self) -> f64 {
        self.d_e
    }

    /// Equilibrium separation in Å.
    pub fn r_e(&self) -> f64 {
        self.r_e
    }
}

/// Ordered set of molecules with unique names.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MoleculeTable {
    entries: Vec<MoleculeParams>,
}

impl MoleculeTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, mol: MoleculeParams) -> Result<()> {
        if self.get(mol.name()).is_some() {
            return Err(Error::DuplicateMolecule(mol.name.clone()));
        }
        self.entries.push(mol);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&MoleculeParams> {
        self.entries.iter().find(|m| m.name == name)
    }

    pub fn lookup(&self, name: &str) -> Result<&MoleculeParams> {
        self.get(name)
            .ok_or_else(|| Error::UnknownMolecule(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &MoleculeParams> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|m| m.name.as_str()).collect()
    }

    /// Entries of `other` replace same-named entries in place; new names are
    /// appended in their order.
    pub fn merge(&mut self, other: MoleculeTable) {
        for mol in other.entries {
            match self.entries.iter_mut().find(|m| m.name == mol.name) {
                Some(slot) => *slot = mol,
                None => self.entries.push(mol),
            }
        }
    }

    /// Serializes in the file format accepted by [`load_molecules`].
    /// Values use the shortest representation that parses back exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::from("# name, d_e (eV), r_e (Angstrom)\n");
        for m in &self.entries {
            let _ = writeln!(out, "{}, {:?}, {:?}", m.name, m.d_e, m.r_e);
        }
        out
    }
}

/// The five diatomic molecules used throughout the tables.
pub fn builtin_molecules() -> MoleculeTable {
    const BUILTIN: [(&str, f64, f64); 5] = [
        ("Na2", 0.746707167, 3.079),
        ("Cl2", 2.513903386, 1.987),
        ("O2+", 6.780447246, 1.116),
        ("N2+", 8.848131541, 1.116),
        ("NO+", 10.99665353, 1.063),
    ];
    let mut table = MoleculeTable::new();
    for (name, d_e, r_e) in BUILTIN {
        table
            .push(MoleculeParams::new(name, d_e, r_e).expect("built-in constants are positive"))
            .expect("built-in names are unique");
    }
    table
}

/// Parses a molecule file. Names must be unique within one source.
pub fn load_molecules<R: BufRead>(source: R) -> Result<MoleculeTable> {
    let mut table = MoleculeTable::new();
    for (idx, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected `name, d_e, r_e`, found {} field(s)", fields.len()),
            });
        }
        if fields[0].is_empty() {
            return Err(Error::Parse {
                line: lineno,
                message: "empty molecule name".into(),
            });
        }
        let number = |field: &str, what: &str| -> Result<f64> {
            field.parse::<f64>().map_err(|e| Error::Parse {
                line: lineno,
                message: format!("{what} `{field}`: {e}"),
            })
        };
        let d_e = number(fields[1], "d_e")?;
        let r_e = number(fields[2], "r_e")?;
        let mol = MoleculeParams::new(fields[0], d_e, r_e)?;
        table.push(mol).map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
    }
    Ok(table)
}

pub fn parse_molecules(text: &str) -> Result<MoleculeTable> {
    load_molecules(text.as_bytes())
}
