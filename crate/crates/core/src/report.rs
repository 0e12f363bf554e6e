//! JSON and TSV encodings of multiplicity tables.
//!
//! JSON (one method):
//! `{"a":2,"b":4,"orbit":"closed","method":"positive","mults":[{"lambda":0,"mult":0},...]}`
//!
//! JSON (all methods): the same header with `"method":"all"`, a `"methods"`
//! list, and `"rows":[{"lambda":0,"mults":[...],"agree":true},...]`.
//!
//! TSV: a header `lambda<TAB>mult` (or `lambda<TAB><method>...<TAB>agree`)
//! followed by one row per λ.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::MultTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultEntry {
    pub lambda: u32,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultReport {
    pub a: u32,
    pub b: u32,
    pub orbit: String,
    pub method: String,
    pub mults: Vec<MultEntry>,
}

impl From<&MultTable> for MultReport {
    fn from(table: &MultTable) -> Self {
        MultReport {
            a: table.a,
            b: table.b,
            orbit: table.orbit.name().to_string(),
            method: table.method.name().to_string(),
            mults: table
                .mults
                .iter()
                .map(|(&lambda, &mult)| MultEntry { lambda, mult })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub lambda: u32,
    pub mults: Vec<u64>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub a: u32,
    pub b: u32,
    pub orbit: String,
    pub method: String,
    pub methods: Vec<String>,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    /// Lines up several tables of the same irrep by λ.
    pub fn from_tables(tables: &[MultTable]) -> Result<Self> {
        let first = tables
            .first()
            .ok_or_else(|| Error::Parse("no tables to compare".into()))?;
        let lambdas: Vec<u32> = first.mults.keys().copied().collect();
        let mut rows = Vec::with_capacity(lambdas.len());
        for &lambda in &lambdas {
            let mults = tables
                .iter()
                .map(|t| {
                    t.mults
                        .get(&lambda)
                        .copied()
                        .ok_or_else(|| Error::Parse(format!("{} has no λ={lambda}", t.method)))
                })
                .collect::<Result<Vec<u64>>>()?;
            let agree = mults.windows(2).all(|w| w[0] == w[1]);
            rows.push(ComparisonRow { lambda, mults, agree });
        }
        Ok(ComparisonReport {
            a: first.a,
            b: first.b,
            orbit: first.orbit.name().to_string(),
            method: "all".into(),
            methods: tables.iter().map(|t| t.method.name().to_string()).collect(),
            rows,
        })
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string(report).expect("reports serialize");
    s.push('\n');
    s
}

pub fn mult_report_from_json(text: &str) -> Result<MultReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn comparison_report_from_json(text: &str) -> Result<ComparisonReport> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// The columns of a TSV multiplicity table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TsvTable {
    /// Value column names, between `lambda` and the optional `agree`.
    pub columns: Vec<String>,
    pub agree_column: bool,
    pub rows: Vec<TsvRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TsvRow {
    pub lambda: u32,
    pub values: Vec<u64>,
    pub agree: Option<bool>,
}

impl From<&MultReport> for TsvTable {
    fn from(report: &MultReport) -> Self {
        TsvTable {
            columns: vec!["mult".into()],
            agree_column: false,
            rows: report
                .mults
                .iter()
                .map(|e| TsvRow { lambda: e.lambda, values: vec![e.mult], agree: None })
                .collect(),
        }
    }
}

impl From<&ComparisonReport> for TsvTable {
    fn from(report: &ComparisonReport) -> Self {
        TsvTable {
            columns: report.methods.clone(),
            agree_column: true,
            rows: report
                .rows
                .iter()
                .map(|r| TsvRow { lambda: r.lambda, values: r.mults.clone(), agree: Some(r.agree) })
                .collect(),
        }
    }
}

impl TsvTable {
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("lambda");
        for c in &self.columns {
            out.push('\t');
            out.push_str(c);
        }
        if self.agree_column {
            out.push_str("\tagree");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.lambda.to_string());
            for v in &row.values {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            if let Some(agree) = row.agree {
                out.push('\t');
                out.push_str(if agree { "true" } else { "false" });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: usize, what: &str| Error::Parse(format!("tsv line {line}: {what}"));
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad(1, "missing header"))?.split('\t').collect();
        if header.first() != Some(&"lambda") {
            return Err(bad(1, "first column must be lambda"));
        }
        let with_agree = header.last() == Some(&"agree");
        let end = if with_agree { header.len() - 1 } else { header.len() };
        let columns: Vec<String> = header[1..end].iter().map(|s| s.to_string()).collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let lineno = i + 2;
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != header.len() {
                return Err(bad(lineno, "wrong number of fields"));
            }
            let lambda = fields[0].parse().map_err(|_| bad(lineno, "bad lambda"))?;
            let values = fields[1..end]
                .iter()
                .map(|f| f.parse::<u64>().map_err(|_| bad(lineno, "bad multiplicity")))
                .collect::<Result<Vec<u64>>>()?;
            let agree = if with_agree {
                match fields[end] {
                    "true" => Some(true),
                    "false" => Some(false),
                    _ => return Err(bad(lineno, "bad agree flag")),
                }
            } else {
                None
            };
            rows.push(TsvRow { lambda, values, agree });
        }
        Ok(TsvTable { columns, agree_column: with_agree, rows })
    }
}
