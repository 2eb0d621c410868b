use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::ClosedFormError;
use crate::poly::LaurentPoly;

const TABLE_SOURCE: &str = include_str!("tables.txt");

/// SHA-256 of `tables.txt`. The tables are data under audit; editing them
/// must be a deliberate act that also updates this constant.
pub const TABLE_SHA256: &str = "523e1e46657ae3d27448003f79fde0e54ec54ad3bd3cb19659da8b35d2e8dc98";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableName {
    C0,
    C0p,
    W,
    W1,
    C1,
    C2,
    C3,
    U,
    U1,
}

impl TableName {
    pub const ALL: [TableName; 9] = [
        TableName::C0,
        TableName::C0p,
        TableName::W,
        TableName::W1,
        TableName::C1,
        TableName::C2,
        TableName::C3,
        TableName::U,
        TableName::U1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::C0 => "C0",
            TableName::C0p => "C0p",
            TableName::W => "W",
            TableName::W1 => "W1",
            TableName::C1 => "C1",
            TableName::C2 => "C2",
            TableName::C3 => "C3",
            TableName::U => "U",
            TableName::U1 => "U1",
        }
    }

    /// `W1` and `U1` are the `p = 1` tables and ignore `p`.
    fn needs_unit_p(self) -> bool {
        matches!(self, TableName::W1 | TableName::U1)
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = ClosedFormError;
    fn from_str(s: &str) -> Result<TableName, ClosedFormError> {
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ClosedFormError::UnknownTable(s.to_string()))
    }
}

/// `a_n n + a_p p + a_q q + a_r r + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Affine {
    pub n: i64,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub c: i64,
}

impl Affine {
    pub fn eval(&self, n: i64, p: i64, q: i64, r: i64) -> i64 {
        self.n * n + self.p * p + self.q * q + self.r * r + self.c
    }
}

impl FromStr for Affine {
    type Err = ClosedFormError;

    /// Parses `2n+9`, `2p+2q-3`, `-1`, ...
    fn from_str(s: &str) -> Result<Affine, ClosedFormError> {
        let bad = || ClosedFormError::Table(format!("bad exponent {s:?}"));
        let mut out = Affine::default();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (tok, tail) = body.split_at(end);
            rest = tail;
            let (digits, var) = match tok.chars().last() {
                Some(v @ ('n' | 'p' | 'q' | 'r')) => (&tok[..tok.len() - 1], Some(v)),
                _ => (tok, None),
            };
            let mut k: i64 = if digits.is_empty() && var.is_some() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            if neg {
                k = -k;
            }
            let slot = match var {
                Some('n') => &mut out.n,
                Some('p') => &mut out.p,
                Some('q') => &mut out.q,
                Some('r') => &mut out.r,
                _ => &mut out.c,
            };
            *slot += k;
        }
        Ok(out)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, v) in [(self.n, "n"), (self.p, "p"), (self.q, "q"), (self.r, "r")] {
            if a != 0 {
                if !first && a > 0 {
                    f.write_str("+")?;
                }
                write!(f, "{a}{v}")?;
                first = false;
            }
        }
        if first {
            write!(f, "{}", self.c)
        } else if self.c != 0 {
            write!(f, "{:+}", self.c)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub name: TableName,
    pub terms: Vec<(i64, Affine)>,
}

fn parse_tables(src: &str) -> Result<Vec<CoefficientTable>, ClosedFormError> {
    let mut out: Vec<CoefficientTable> = TableName::ALL
        .iter()
        .map(|&name| CoefficientTable {
            name,
            terms: Vec::new(),
        })
        .collect();
    for (i, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [name, coeff, exp] = fields[..] else {
            return Err(ClosedFormError::Table(format!(
                "line {}: expected 3 fields",
                i + 1
            )));
        };
        let name: TableName = name.parse()?;
        let coeff: i64 = coeff
            .parse()
            .map_err(|_| ClosedFormError::Table(format!("line {}: bad coefficient", i + 1)))?;
        let idx = TableName::ALL.iter().position(|&t| t == name).unwrap();
        out[idx].terms.push((coeff, exp.parse()?));
    }
    Ok(out)
}

fn all_tables() -> &'static [CoefficientTable] {
    static TABLES: OnceLock<Vec<CoefficientTable>> = OnceLock::new();
    TABLES.get_or_init(|| parse_tables(TABLE_SOURCE).expect("built-in tables parse"))
}

pub fn table(name: TableName) -> &'static CoefficientTable {
    all_tables().iter().find(|t| t.name == name).unwrap()
}

pub fn table_checksum() -> String {
    Sha256::digest(TABLE_SOURCE.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn verify_table_checksum() -> Result<(), ClosedFormError> {
    let got = table_checksum();
    if got == TABLE_SHA256 {
        Ok(())
    } else {
        Err(ClosedFormError::Table(format!(
            "coefficient tables changed: checksum {got}, expected {TABLE_SHA256}"
        )))
    }
}

/// Evaluates a table at `(n, p, q, r)`; requires `n = p + q + r + 7`.
pub fn instantiate_table(
    name: TableName,
    n: usize,
    p: usize,
    q: usize,
    r: usize,
) -> Result<LaurentPoly, ClosedFormError> {
    if p == 0 || q == 0 || r == 0 {
        return Err(ClosedFormError::Domain(format!(
            "parameters must be positive, got ({p},{q},{r})"
        )));
    }
    if n != p + q + r + 7 {
        return Err(ClosedFormError::Domain(format!(
            "n = {n} but p + q + r + 7 = {}",
            p + q + r + 7
        )));
    }
    if name.needs_unit_p() && p != 1 {
        return Err(ClosedFormError::Domain(format!("{name} needs p = 1")));
    }
    let (n, p, q, r) = (n as i64, p as i64, q as i64, r as i64);
    Ok(LaurentPoly::from_terms(
        table(name)
            .terms
            .iter()
            .map(|(c, e)| (e.eval(n, p, q, r), BigInt::from(*c))),
    ))
}
