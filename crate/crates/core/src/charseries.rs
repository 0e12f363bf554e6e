//! τ-positivity setups and the T_K-level multiplicity route.
//!
//! The character contributed by a fixed point is a rational function; a
//! generic coweight τ picks which geometric-series expansion each factor
//! gets. Summing the expanded terms over all fixed points gives the
//! `T_K × C^×` weight multiplicities, from which K-multiplicities follow by
//! highest-weight extraction. This path never removes Δ^K_+ from the
//! generators, so it is independent of [`crate::orbits::k_mult_ld`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::orbits::{FixedPointDatum, LocalizationTable, TableKind};
use crate::vecpart::{GradedCounter, GradedGenerator, GradedTarget};
use crate::weights::KWeight;

/// The data `(down, ind, ρ, wts_+)` of a weight multiset under a coweight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSetup {
    pub down: Vec<KWeight>,
    pub ind: usize,
    pub rho_v: KWeight,
    pub wts_plus: Vec<KWeight>,
}

/// `tau` is a nonzero coweight of the rank-one torus; it pairs with a
/// K-weight by multiplication.
pub fn tau_setup(wts: &[KWeight], tau: i64) -> Result<TauSetup> {
    let mut down = Vec::new();
    let mut wts_plus = Vec::with_capacity(wts.len());
    for &w in wts {
        let pairing = tau * w.half_units();
        if pairing == 0 {
            return Err(Error::NonGenericCoweight(w.to_string()));
        }
        if pairing < 0 {
            down.push(w);
            wts_plus.push(-w);
        } else {
            wts_plus.push(w);
        }
    }
    Ok(TauSetup {
        ind: down.len(),
        rho_v: down.iter().copied().sum(),
        down,
        wts_plus,
    })
}

/// One fixed point's virtual `T_K × C^×` multiplicity at `(j, d)`.
pub fn tk_term(fp: &FixedPointDatum, codim: u32, j: KWeight, d: i64) -> Result<i64> {
    TkTermCounter::new(fp, codim)?.term(j, d)
}

#[derive(Debug, Clone)]
struct TkTermCounter {
    shift: KWeight,
    codim: i64,
    sign: i64,
    counter: GradedCounter,
}

impl TkTermCounter {
    fn new(fp: &FixedPointDatum, codim: u32) -> Result<Self> {
        let setup = tau_setup(&fp.wts_x, 1)?;
        let gens: Vec<GradedGenerator> = setup
            .wts_plus
            .iter()
            .map(|mu| GradedGenerator::new(vec![-mu.half_units()], 0))
            .chain(fp.complement.iter().map(|mu| GradedGenerator::new(vec![mu.half_units()], 1)))
            .collect();
        Ok(TkTermCounter {
            shift: fp.wt_l + setup.rho_v + fp.complement.iter().copied().sum::<KWeight>(),
            codim: i64::from(codim),
            sign: if setup.ind % 2 == 0 { 1 } else { -1 },
            counter: GradedCounter::new(&gens, &[1])?,
        })
    }

    fn term(&mut self, j: KWeight, d: i64) -> Result<i64> {
        let target = GradedTarget::new(vec![(j - self.shift).half_units()], d - self.codim);
        Ok(self.sign * self.counter.count(&target)? as i64)
    }
}

/// Evaluates the T_K route for a whole table, reusing partition-count caches.
#[derive(Debug, Clone)]
pub struct TkEvaluator {
    rows: Vec<TkTermCounter>,
}

impl TkEvaluator {
    pub fn new(table: &LocalizationTable) -> Result<Self> {
        let rows = table
            .rows
            .iter()
            .map(|fp| TkTermCounter::new(fp, table.codim))
            .collect::<Result<_>>()?;
        Ok(TkEvaluator { rows })
    }

    /// See [`tk_mult`].
    pub fn tk_mult(&mut self, j: KWeight, d: i64) -> Result<i64> {
        let mut total = 0;
        for row in &mut self.rows {
            total += row.term(j, d)?;
        }
        Ok(total)
    }

    /// See [`k_mults_from_tk`].
    pub fn k_mult_ld(&mut self, lambda: u32, d: i64) -> Result<i64> {
        let top = KWeight::irrep(lambda);
        Ok(self.tk_mult(top, d)? - self.tk_mult(top + KWeight::from_units(1), d)?)
    }
}

/// `T_K × C^×` weight multiplicity: the sum of [`tk_term`] over all rows.
pub fn tk_mult(table: &LocalizationTable, j: KWeight, d: i64) -> Result<i64> {
    TkEvaluator::new(table)?.tk_mult(j, d)
}

/// K-multiplicity of the irrep `λ` in degree `d` as `m_T(λ) - m_T(λ + 1)`.
pub fn k_mults_from_tk(table: &LocalizationTable, lambda: u32, d: i64) -> Result<i64> {
    TkEvaluator::new(table)?.k_mult_ld(lambda, d)
}

/// A grid of `T_K × C^×` multiplicities for one table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TkMultTable {
    pub kind: TableKind,
    pub a: u32,
    pub b: u32,
    pub entries: BTreeMap<(KWeight, u32), i64>,
}

impl TkMultTable {
    /// Fills in every integral weight `j ∈ [-j_max, j_max]` and `d ∈ [0, d_max]`.
    pub fn compute(table: &LocalizationTable, j_max: u32, d_max: u32) -> Result<Self> {
        let mut eval = TkEvaluator::new(table)?;
        let mut entries = BTreeMap::new();
        for j in -i64::from(j_max)..=i64::from(j_max) {
            for d in 0..=d_max {
                let j = KWeight::from_units(j);
                entries.insert((j, d), eval.tk_mult(j, i64::from(d))?);
            }
        }
        Ok(TkMultTable {
            kind: table.kind.clone(),
            a: table.a,
            b: table.b,
            entries,
        })
    }

    pub fn get(&self, j: KWeight, d: u32) -> Option<i64> {
        self.entries.get(&(j, d)).copied()
    }
}
