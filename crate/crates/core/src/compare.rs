//! Multiplicity tables by each method, and the cross-check sweep that
//! compares them.

use std::collections::BTreeMap;
use std::fmt;

use crate::charseries::TkEvaluator;
use crate::error::{Error, Result};
use crate::orbits::{blattner_closed, orbit_table, LocalizationTable, Method, MultTable, Orbit, TableEvaluator};
use crate::oracle::WeightDiagram;
use crate::positive::mult_positive;

/// Sum over `d ∈ [codim, λ + codim]` of the T_K-route slices.
pub fn tseries_mult(table: &LocalizationTable, lambda: u32) -> Result<u64> {
    tseries_mult_with(&mut TkEvaluator::new(table)?, table.codim, lambda)
}

fn tseries_mult_with(eval: &mut TkEvaluator, codim: u32, lambda: u32) -> Result<u64> {
    let codim = i64::from(codim);
    let mut total = 0;
    for d in codim..=i64::from(lambda) + codim {
        total += eval.k_mult_ld(lambda, d)?;
    }
    u64::try_from(total).map_err(|_| Error::NegativeMultiplicity { lambda, value: total })
}

/// Computes `λ ↦ mult` for `λ ∈ [0, lambda_max]` with one method.
pub fn mult_table(orbit: Orbit, a: u32, b: u32, lambda_max: u32, method: Method) -> Result<MultTable> {
    mult_table_with(orbit, a, b, lambda_max, method, &orbit_table)
}

type TableSource<'a> = &'a dyn Fn(Orbit, u32, u32) -> Result<LocalizationTable>;

fn mult_table_with(
    orbit: Orbit,
    a: u32,
    b: u32,
    lambda_max: u32,
    method: Method,
    tables: TableSource<'_>,
) -> Result<MultTable> {
    if !method.applies_to(orbit) {
        return Err(Error::MethodNotApplicable { method: method.name(), orbit: orbit.name() });
    }
    let lambdas = 0..=lambda_max;
    let mults: BTreeMap<u32, u64> = match method {
        Method::Positive => lambdas
            .map(|l| (l, mult_positive(orbit, a.into(), b.into(), l.into())))
            .collect(),
        Method::Localization => {
            let mut eval = TableEvaluator::new(&tables(orbit, a, b)?)?;
            lambdas.map(|l| Ok((l, eval.mult(l)?))).collect::<Result<_>>()?
        }
        Method::TSeries => {
            let table = tables(orbit, a, b)?;
            let mut eval = TkEvaluator::new(&table)?;
            lambdas
                .map(|l| Ok((l, tseries_mult_with(&mut eval, table.codim, l)?)))
                .collect::<Result<_>>()?
        }
        Method::Oracle => {
            let branching = WeightDiagram::new(a, b).branching();
            lambdas
                .map(|l| (l, branching.get(l as usize).copied().unwrap_or(0)))
                .collect()
        }
        Method::Blattner => lambdas.map(|l| (l, blattner_closed(a, b, l))).collect(),
    };
    Ok(MultTable { orbit, a, b, method, mults })
}

/// Every method that applies to `orbit`, in a fixed order.
pub fn applicable_methods(orbit: Orbit) -> Vec<Method> {
    Method::ALL.into_iter().filter(|m| m.applies_to(orbit)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckSummary {
    /// Number of `(a, b, orbit, λ)` cells checked.
    pub cells: u64,
    /// Number of pairwise method comparisons made.
    pub comparisons: u64,
}

impl fmt::Display for CrosscheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ok: {} orbit-lambda cells checked, {} comparisons", self.cells, self.comparisons)
    }
}

/// The first cell where two methods disagree (or one fails).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub orbit: Orbit,
    pub a: u32,
    pub b: u32,
    pub lambda: Option<u32>,
    pub values: Vec<(Method, std::result::Result<u64, String>)>,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "counterexample: orbit={} a={} b={}", self.orbit, self.a, self.b)?;
        if let Some(lambda) = self.lambda {
            write!(f, " lambda={lambda}")?;
        }
        for (method, value) in &self.values {
            match value {
                Ok(v) => write!(f, " {method}={v}")?,
                Err(e) => write!(f, " {method}=error({e})")?,
            }
        }
        Ok(())
    }
}

/// Compares every applicable method on `(a, b) ∈ [0, a_max] × [0, b_max]`,
/// all four orbits, and `λ ∈ [0, lambda_max]`.
pub fn crosscheck(a_max: u32, b_max: u32, lambda_max: u32) -> std::result::Result<CrosscheckSummary, Counterexample> {
    crosscheck_with(a_max, b_max, lambda_max, &orbit_table)
}

/// As [`crosscheck`], with localization tables drawn from `tables`.
pub fn crosscheck_with(
    a_max: u32,
    b_max: u32,
    lambda_max: u32,
    tables: TableSource<'_>,
) -> std::result::Result<CrosscheckSummary, Counterexample> {
    let mut summary = CrosscheckSummary { cells: 0, comparisons: 0 };
    for a in 0..=a_max {
        for b in 0..=b_max {
            for orbit in Orbit::ALL {
                let methods = applicable_methods(orbit);
                let mut columns = Vec::with_capacity(methods.len());
                for &method in &methods {
                    match mult_table_with(orbit, a, b, lambda_max, method, tables) {
                        Ok(t) => columns.push(t),
                        Err(e) => {
                            return Err(Counterexample {
                                orbit,
                                a,
                                b,
                                lambda: None,
                                values: vec![(method, Err(e.to_string()))],
                            })
                        }
                    }
                }
                for lambda in 0..=lambda_max {
                    let values: Vec<u64> = columns.iter().map(|t| t.mults[&lambda]).collect();
                    if values.windows(2).any(|w| w[0] != w[1]) {
                        return Err(Counterexample {
                            orbit,
                            a,
                            b,
                            lambda: Some(lambda),
                            values: methods.iter().copied().zip(values.into_iter().map(Ok)).collect(),
                        });
                    }
                    summary.cells += 1;
                    summary.comparisons += values.len().saturating_sub(1) as u64;
                }
            }
        }
    }
    Ok(summary)
}
