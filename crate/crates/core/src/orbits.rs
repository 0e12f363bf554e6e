//! Localization tables for the SO(3)-orbit closures on the flag manifold of
//! SL3, and the K-multiplicity engine that sums their fixed-point terms.
//!
//! Each table row is one T_K-fixed coordinate flag `f` in the orbit closure
//! `X`, carrying the restricted line-bundle weight `wt(L|_f)`, the tangent
//! weights of `X` at `f`, the complementary (normal) weights, and the
//! τ-positivity data `ind` and `ρ` of the tangent space. The multiplicity of
//! the SO(3)-irrep `λ` in the `C^×`-weight `d` slice is
//!
//! ```text
//! Σ_f (-1)^ind κ((λ - wt - ρ - Σ comp, d - codim);
//!                {(-μ, 0) : μ ∈ wts_+ \ Δ^K_+} ⊔ {(μ, 1) : μ ∈ comp})
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::charseries::tau_setup;
use crate::error::{Error, Result};
use crate::vecpart::{GradedCounter, GradedGenerator, GradedTarget, PartitionCounter};
use crate::weights::{restrict, GWeight, KWeight, WeylG, WeylK, POS_ROOT_K, RHO_G, RHO_K};

/// The four SO(3)-orbit closures on `SL3/B^-`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orbit {
    /// The whole flag manifold; its irreps are finite dimensional.
    Open,
    /// `{(V1 < V2) : rank(V1) = 0}`.
    O1,
    /// `{(V1 < V2) : rank(V2) = 1}`.
    O2,
    /// `O1 ∩ O2`.
    Closed,
}

impl Orbit {
    pub const ALL: [Orbit; 4] = [Orbit::Open, Orbit::O1, Orbit::O2, Orbit::Closed];

    pub fn name(self) -> &'static str {
        match self {
            Orbit::Open => "open",
            Orbit::O1 => "o1",
            Orbit::O2 => "o2",
            Orbit::Closed => "closed",
        }
    }

    pub fn codim(self) -> u32 {
        match self {
            Orbit::Open => 0,
            Orbit::O1 | Orbit::O2 => 1,
            Orbit::Closed => 2,
        }
    }

    /// The image under `(V1 < V2) ↦ (V2^⊥ < V1^⊥)`.
    pub fn dual(self) -> Orbit {
        match self {
            Orbit::O1 => Orbit::O2,
            Orbit::O2 => Orbit::O1,
            other => other,
        }
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Orbit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "open" | "fullflag" | "full-flag" | "g/b" => Ok(Orbit::Open),
            "o1" => Ok(Orbit::O1),
            "o2" => Ok(Orbit::O2),
            "closed" | "o1o2" => Ok(Orbit::Closed),
            _ => Err(Error::Parse(format!("unknown orbit {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    Orbit(Orbit),
    Custom(String),
}

/// One T_K-fixed point of a localization table, with K-weights in half-units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub label: String,
    pub wt_l: KWeight,
    pub wts_x: Vec<KWeight>,
    pub complement: Vec<KWeight>,
    pub ind: usize,
    pub rho_fx: KWeight,
}

impl FixedPointDatum {
    /// `wts_+(T_f X)` with one copy of each positive K-root removed.
    pub fn noncompact_tangent(&self) -> Result<Vec<KWeight>> {
        let mut plus = tau_setup(&self.wts_x, 1)?.wts_plus;
        let pos = plus.iter().position(|&w| w == POS_ROOT_K).ok_or_else(|| {
            Error::InvariantViolation(format!("{}: Δ^K_+ not contained in wts_+(T_f X)", self.label))
        })?;
        plus.remove(pos);
        Ok(plus)
    }

    fn check(&self, codim: u32) -> Result<()> {
        let violation = |what: String| Err(Error::InvariantViolation(format!("{}: {what}", self.label)));
        if self.wts_x.iter().chain(&self.complement).any(|&w| w == KWeight::ZERO) {
            return violation("zero weight".into());
        }
        let setup = tau_setup(&self.wts_x, 1)?;
        if setup.ind != self.ind {
            return violation(format!("ind {} but tangent weights give {}", self.ind, setup.ind));
        }
        if setup.rho_v != self.rho_fx {
            return violation(format!("ρ {} but tangent weights give {}", self.rho_fx, setup.rho_v));
        }
        if self.complement.len() != codim as usize {
            return violation(format!("{} complement weights, codim {codim}", self.complement.len()));
        }
        self.noncompact_tangent().map(|_| ())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationTable {
    pub kind: TableKind,
    pub a: u32,
    pub b: u32,
    pub codim: u32,
    pub rows: Vec<FixedPointDatum>,
}

impl LocalizationTable {
    /// Builds a table after checking every row's invariants.
    pub fn new(kind: TableKind, a: u32, b: u32, codim: u32, rows: Vec<FixedPointDatum>) -> Result<Self> {
        for row in &rows {
            row.check(codim)?;
        }
        if let TableKind::Orbit(orbit) = kind {
            let expected = match orbit {
                Orbit::Closed => 2,
                Orbit::O1 | Orbit::O2 => 4,
                Orbit::Open => 6,
            };
            if rows.len() != expected || codim != orbit.codim() {
                return Err(Error::InvariantViolation(format!(
                    "{orbit} table has {} rows and codim {codim}",
                    rows.len()
                )));
            }
        }
        Ok(LocalizationTable { kind, a, b, codim, rows })
    }

    pub fn orbit(&self) -> Option<Orbit> {
        match self.kind {
            TableKind::Orbit(o) => Some(o),
            TableKind::Custom(_) => None,
        }
    }
}

struct RowSpec {
    label: &'static str,
    word: &'static [crate::weights::SimpleReflection],
    wts_x: &'static [i64],
    complement: &'static [i64],
    ind: usize,
    rho: i64,
}

macro_rules! row {
    ($label:expr, [$($s:ident),*], $x:expr, $c:expr, $ind:expr, $rho:expr) => {
        RowSpec {
            label: $label,
            word: &[$(crate::weights::SimpleReflection::$s),*],
            wts_x: &$x,
            complement: &$c,
            ind: $ind,
            rho: $rho,
        }
    };
}

// Weights in integer units; the line-bundle weight at the flag w·B^- is w·ν.
const CLOSED_ROWS: [RowSpec; 2] = [
    row!("e1<e1+e2", [], [1], [2, 1], 0, 0),
    row!("e3<e2+e3", [S1, S2, S1], [-1], [-2, -1], 1, -1),
];

const O1_ROWS: [RowSpec; 4] = [
    row!("e1<e1+e2", [], [1, 1], [2], 0, 0),
    row!("e1<e1+e3", [S2], [-1, 1], [2], 1, -1),
    row!("e3<e1+e3", [S2, S1], [-1, 1], [-2], 1, -1),
    row!("e3<e2+e3", [S1, S2, S1], [-1, -1], [-2], 2, -2),
];

const OPEN_ROWS: [RowSpec; 6] = [
    row!("e1<e1+e2", [], [1, 1, 2], [], 0, 0),
    row!("e1<e1+e3", [S2], [-1, 1, 2], [], 1, -1),
    row!("e2<e1+e2", [S1], [1, -1, 2], [], 1, -1),
    row!("e2<e2+e3", [S1, S2], [1, -1, -2], [], 2, -3),
    row!("e3<e1+e3", [S2, S1], [1, -1, -2], [], 2, -3),
    row!("e3<e2+e3", [S1, S2, S1], [-1, -1, -2], [], 3, -4),
];

fn units(ws: &[i64]) -> Vec<KWeight> {
    ws.iter().map(|&w| KWeight::from_units(w)).collect()
}

fn build_rows(specs: &[RowSpec], nu: GWeight) -> Vec<FixedPointDatum> {
    specs
        .iter()
        .map(|spec| FixedPointDatum {
            label: spec.label.to_string(),
            wt_l: restrict(WeylG::from_word(spec.word).act(nu)),
            wts_x: units(spec.wts_x),
            complement: units(spec.complement),
            ind: spec.ind,
            rho_fx: KWeight::from_units(spec.rho),
        })
        .collect()
}

/// The localization table of `orbit` twisted by the line bundle `(a, b)`.
///
/// `O2` is served by the `O1` table with `a` and `b` exchanged, since the
/// duality automorphism swaps the two orbits and pulls `(a, b)` back to `(b, a)`.
pub fn orbit_table(orbit: Orbit, a: u32, b: u32) -> Result<LocalizationTable> {
    let nu = GWeight::new(i64::from(a), i64::from(b));
    let rows = match orbit {
        Orbit::Closed => build_rows(&CLOSED_ROWS, nu),
        Orbit::O1 => build_rows(&O1_ROWS, nu),
        Orbit::O2 => build_rows(&O1_ROWS, GWeight::new(nu.b, nu.a)),
        Orbit::Open => build_rows(&OPEN_ROWS, nu),
    };
    LocalizationTable::new(TableKind::Orbit(orbit), a, b, orbit.codim(), rows)
}

/// The flag variety of SO(3) with the Borel-Weil line bundle of weight `μ`.
pub fn borel_weil_table(mu: u32) -> LocalizationTable {
    let mu = KWeight::irrep(mu);
    let rows = vec![
        FixedPointDatum {
            label: "B".into(),
            wt_l: mu,
            wts_x: vec![KWeight::from_units(1)],
            complement: vec![],
            ind: 0,
            rho_fx: KWeight::ZERO,
        },
        FixedPointDatum {
            label: "sB".into(),
            wt_l: -mu,
            wts_x: vec![KWeight::from_units(-1)],
            complement: vec![],
            ind: 1,
            rho_fx: KWeight::from_units(-1),
        },
    ];
    LocalizationTable::new(TableKind::Custom("borel-weil".into()), 0, 0, 0, rows)
        .expect("Borel-Weil rows are consistent")
}

fn sign(ind: usize) -> i64 {
    if ind % 2 == 0 {
        1
    } else {
        -1
    }
}

/// One fixed point's contribution to the multiplicity of `λ` in degree `d`.
pub fn k_term(fp: &FixedPointDatum, codim: u32, lambda: u32, d: i64) -> Result<i64> {
    TermCounter::new(fp, codim)?.term(lambda, d)
}

/// The partition count behind [`k_term`] for one fixed point, with its
/// cache kept across `λ` and `d`.
#[derive(Debug, Clone)]
struct TermCounter {
    shift: KWeight,
    codim: i64,
    sign: i64,
    counter: GradedCounter,
}

impl TermCounter {
    fn new(fp: &FixedPointDatum, codim: u32) -> Result<Self> {
        let gens: Vec<GradedGenerator> = fp
            .noncompact_tangent()?
            .into_iter()
            .map(|mu| GradedGenerator::new(vec![-mu.half_units()], 0))
            .chain(fp.complement.iter().map(|mu| GradedGenerator::new(vec![mu.half_units()], 1)))
            .collect();
        Ok(TermCounter {
            shift: fp.wt_l + fp.rho_fx + fp.complement.iter().copied().sum::<KWeight>(),
            codim: i64::from(codim),
            sign: sign(fp.ind),
            counter: GradedCounter::new(&gens, &[1])?,
        })
    }

    fn term(&mut self, lambda: u32, d: i64) -> Result<i64> {
        let target = GradedTarget::new(vec![(KWeight::irrep(lambda) - self.shift).half_units()], d - self.codim);
        Ok(self.sign * self.counter.count(&target)? as i64)
    }
}

/// Evaluates a whole table, reusing partition-count caches between queries.
#[derive(Debug, Clone)]
pub struct TableEvaluator {
    codim: u32,
    rows: Vec<TermCounter>,
}

impl TableEvaluator {
    pub fn new(table: &LocalizationTable) -> Result<Self> {
        let rows = table
            .rows
            .iter()
            .map(|fp| TermCounter::new(fp, table.codim))
            .collect::<Result<_>>()?;
        Ok(TableEvaluator { codim: table.codim, rows })
    }

    /// See [`k_mult_ld`].
    pub fn mult_ld(&mut self, lambda: u32, d: i64) -> Result<i64> {
        let mut total = 0;
        for row in &mut self.rows {
            total += row.term(lambda, d)?;
        }
        Ok(total)
    }

    /// See [`k_mult`].
    pub fn mult(&mut self, lambda: u32) -> Result<u64> {
        let codim = i64::from(self.codim);
        let mut total = 0i64;
        for d in codim..=i64::from(lambda) + codim {
            let value = self.mult_ld(lambda, d)?;
            if d > i64::from(lambda) && value != 0 {
                return Err(Error::CutoffViolated { lambda, d: d as u32, value });
            }
            total += value;
        }
        u64::try_from(total).map_err(|_| Error::NegativeMultiplicity { lambda, value: total })
    }
}

/// Multiplicity of the SO(3)-irrep `λ` in the `C^×`-weight `d` part.
pub fn k_mult_ld(table: &LocalizationTable, lambda: u32, d: i64) -> Result<i64> {
    TableEvaluator::new(table)?.mult_ld(lambda, d)
}

/// Multiplicity of the SO(3)-irrep `λ`, summed over `d ∈ [codim, λ + codim]`.
///
/// Individual fixed-point terms need not vanish for large `d`; the summed
/// slice must vanish for `d > λ`, and that is checked.
pub fn k_mult(table: &LocalizationTable, lambda: u32) -> Result<u64> {
    TableEvaluator::new(table)?.mult(lambda)
}

/// Closed-orbit multiplicity via the two-term Weyl sum over `W_K`:
/// `Σ_w (-1)^ℓ(w) κ(w(λ + ρ_K) - (ν + 2ρ_G - ρ_K); r(Δ^G_+) \ Δ^K_+)`.
pub fn blattner_closed(a: u32, b: u32, lambda: u32) -> u64 {
    let nu = restrict(GWeight::new(i64::from(a), i64::from(b)));
    let two_rho_g = restrict(RHO_G).times(2);
    let base = nu + two_rho_g - RHO_K;
    let gens: Vec<Vec<i64>> = crate::weights::restricted_noncompact_roots()
        .iter()
        .map(|w| vec![w.half_units()])
        .collect();
    let mut counter = PartitionCounter::new(&gens, &[1]).expect("noncompact roots are τ-positive");
    let total: i64 = WeylK::ALL
        .iter()
        .map(|w| {
            let target = w.act(KWeight::irrep(lambda) + RHO_K) - base;
            w.sign() * counter.count(&[target.half_units()]).expect("one-dimensional") as i64
        })
        .sum();
    u64::try_from(total).expect("closed-orbit Weyl sum is nonnegative for dominant λ")
}

/// How a multiplicity column was computed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Lattice-point count in the region `C_O`.
    Positive,
    /// Sum over fixed points with Δ^K_+ removed from the generators.
    Localization,
    /// T_K-level fixed-point sum followed by highest-weight extraction.
    TSeries,
    /// Kostant multiplicities of the finite-dimensional irrep, branched.
    Oracle,
    /// Closed-orbit Weyl sum.
    Blattner,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Positive,
        Method::Localization,
        Method::TSeries,
        Method::Oracle,
        Method::Blattner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Positive => "positive",
            Method::Localization => "localization",
            Method::TSeries => "tseries",
            Method::Oracle => "oracle",
            Method::Blattner => "blattner",
        }
    }

    pub fn applies_to(self, orbit: Orbit) -> bool {
        match self {
            Method::Oracle => orbit == Orbit::Open,
            Method::Blattner => orbit == Orbit::Closed,
            _ => true,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// K-type multiplicities `λ ↦ mult` of one irrep, computed by one method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    pub orbit: Orbit,
    pub a: u32,
    pub b: u32,
    pub method: Method,
    pub mults: BTreeMap<u32, u64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ku(ws: &[i64]) -> Vec<KWeight> {
        units(ws)
    }

    #[test]
    fn closed_table_rows() {
        let t = orbit_table(Orbit::Closed, 2, 4).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.codim, 2);
        assert_eq!(t.rows[0].wt_l, KWeight::from_units(6));
        assert_eq!(t.rows[0].complement, ku(&[2, 1]));
        assert_eq!(t.rows[1].wt_l, KWeight::from_units(-6));
    }

    #[test]
    fn open_table_rows() {
        let t = orbit_table(Orbit::Open, 3, 1).unwrap();
        let last = &t.rows[5];
        assert_eq!(last.ind, 3);
        assert_eq!(last.rho_fx, KWeight::from_units(-4));
        let wts: Vec<i64> = t.rows.iter().map(|r| r.wt_l.half_units() / 2).collect();
        assert_eq!(wts, vec![4, 3, 1, -1, -3, -4]);
        assert!(t.rows.iter().all(|r| r.complement.is_empty()));
    }

    #[test]
    fn o1_table_line_bundle_weights() {
        let t = orbit_table(Orbit::O1, 2, 4).unwrap();
        let wts: Vec<i64> = t.rows.iter().map(|r| r.wt_l.half_units() / 2).collect();
        assert_eq!(wts, vec![6, 2, -2, -6]);
    }

    #[test]
    fn o2_is_swapped_o1() {
        let o2 = orbit_table(Orbit::O2, 2, 4).unwrap();
        let o1 = orbit_table(Orbit::O1, 4, 2).unwrap();
        assert_eq!(o2.rows, o1.rows);
        assert_eq!(o2.codim, o1.codim);
        assert_eq!(o2.kind, TableKind::Orbit(Orbit::O2));
    }

    #[test]
    fn inconsistent_row_is_rejected() {
        let mut t = orbit_table(Orbit::O1, 1, 1).unwrap();
        t.rows[1].rho_fx = KWeight::ZERO;
        let err = LocalizationTable::new(t.kind.clone(), 1, 1, 1, t.rows.clone()).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation(_)));

        let mut rows = orbit_table(Orbit::O1, 1, 1).unwrap().rows;
        rows[0].complement.push(KWeight::from_units(1));
        assert!(LocalizationTable::new(TableKind::Custom("x".into()), 1, 1, 1, rows).is_err());

        let rows = vec![FixedPointDatum {
            label: "bad".into(),
            wt_l: KWeight::ZERO,
            wts_x: ku(&[2]),
            complement: vec![],
            ind: 0,
            rho_fx: KWeight::ZERO,
        }];
        // wts_+ = {2} does not contain the positive K-root.
        assert!(LocalizationTable::new(TableKind::Custom("x".into()), 0, 0, 0, rows).is_err());
    }

    #[test]
    fn k_term_examples() {
        let o1 = orbit_table(Orbit::O1, 2, 4).unwrap();
        assert_eq!(k_term(&o1.rows[0], 1, 8, 2).unwrap(), 1);
        for lambda in 0..15 {
            for d in 1..10 {
                assert_eq!(k_term(&o1.rows[3], 1, lambda, d).unwrap(), 0);
            }
        }
        let closed = orbit_table(Orbit::Closed, 2, 4).unwrap();
        assert_eq!(k_term(&closed.rows[0], 2, 9, 2).unwrap(), 1);
    }

    #[test]
    fn k_mult_ld_examples() {
        let o1 = orbit_table(Orbit::O1, 2, 4).unwrap();
        for d in 0..8 {
            assert_eq!(k_mult_ld(&o1, 5, d).unwrap(), i64::from(d == 1), "d={d}");
        }
        let open = orbit_table(Orbit::Open, 2, 2).unwrap();
        assert_eq!(k_mult_ld(&open, 1, 0).unwrap(), 0);
        assert_eq!(k_mult_ld(&open, 2, 0).unwrap(), 2);
        let closed = orbit_table(Orbit::Closed, 3, 1).unwrap();
        for lambda in 0..20 {
            assert_eq!(k_mult_ld(&closed, lambda, 1).unwrap(), 0);
        }
    }

    #[test]
    fn k_mult_examples() {
        let closed = orbit_table(Orbit::Closed, 2, 4).unwrap();
        let got: Vec<u64> = (6..=13).map(|l| k_mult(&closed, l).unwrap()).collect();
        assert_eq!(got, vec![0, 0, 0, 1, 1, 2, 2, 3]);
        let o1 = orbit_table(Orbit::O1, 2, 4).unwrap();
        assert_eq!(k_mult(&o1, 8).unwrap(), 3);
        let open = orbit_table(Orbit::Open, 1, 1).unwrap();
        let got: Vec<u64> = (0..=2).map(|l| k_mult(&open, l).unwrap()).collect();
        assert_eq!(got, vec![0, 1, 1]);
    }

    #[test]
    fn o1_slices_match_interval_indicator() {
        // [λ - a - b ≤ 2d ≤ λ - a] for d ≥ codim.
        for (a, b) in [(2u32, 4u32), (0, 3), (5, 0), (1, 1)] {
            let t = orbit_table(Orbit::O1, a, b).unwrap();
            for lambda in 0..25u32 {
                for d in 0..30i64 {
                    let (l, a, b) = (i64::from(lambda), i64::from(a), i64::from(b));
                    let expected = i64::from(d >= 1 && l - a - b <= 2 * d && 2 * d <= l - a);
                    assert_eq!(k_mult_ld(&t, lambda, d).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn blattner_examples() {
        assert_eq!(blattner_closed(0, 0, 3), 1);
        assert_eq!(blattner_closed(0, 0, 5), 2);
        assert_eq!(blattner_closed(2, 4, 8), 0);
        assert_eq!(blattner_closed(2, 4, 9), 1);
    }

    #[test]
    fn borel_weil_delta() {
        let t = borel_weil_table(3);
        assert_eq!(k_mult(&t, 3).unwrap(), 1);
        for lambda in [0, 1, 2, 4, 7] {
            assert_eq!(k_mult(&t, lambda).unwrap(), 0);
        }
        assert_eq!(k_mult(&borel_weil_table(0), 0).unwrap(), 1);
        assert_eq!(k_mult(&borel_weil_table(5), 4).unwrap(), 0);
    }

    #[test]
    fn cutoff_guard_fires_on_a_broken_table() {
        // Drop the cancelling second row of O1: the first row alone is
        // nonzero for every large d.
        let mut t = orbit_table(Orbit::O1, 0, 0).unwrap();
        t.rows.truncate(1);
        assert!(matches!(k_mult(&t, 0), Err(Error::CutoffViolated { .. })));
    }

    #[test]
    fn open_orbit_lives_in_degree_zero() {
        for (a, b) in [(0, 0), (2, 1), (3, 3)] {
            let t = orbit_table(Orbit::Open, a, b).unwrap();
            for lambda in 0..12 {
                for d in 1..6 {
                    assert_eq!(k_mult_ld(&t, lambda, d).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn open_orbit_symmetric_in_a_b() {
        for a in 0..5 {
            for b in 0..5 {
                let x = orbit_table(Orbit::Open, a, b).unwrap();
                let y = orbit_table(Orbit::Open, b, a).unwrap();
                for lambda in 0..15 {
                    assert_eq!(k_mult(&x, lambda).unwrap(), k_mult(&y, lambda).unwrap());
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        for o in Orbit::ALL {
            assert_eq!(o.name().parse::<Orbit>().unwrap(), o);
        }
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("o3".parse::<Orbit>().is_err());
    }
}
