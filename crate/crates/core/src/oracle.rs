//! Brute-force ground truth for the finite-dimensional case: weight
//! multiplicities of `V_(a,b)` by Kostant's formula, restricted to SO(3).

use std::collections::BTreeMap;

use crate::vecpart::PartitionCounter;
use crate::weights::{pos_roots_g, restrict, GWeight, WeylG, RHO_G};

/// The multiset of weights of `V_(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    pub hw: GWeight,
    pub mults: BTreeMap<GWeight, u64>,
}

struct Kostant {
    counter: PartitionCounter,
}

impl Kostant {
    fn new() -> Self {
        let roots: Vec<Vec<i64>> = pos_roots_g().iter().map(|r| vec![r.a, r.b]).collect();
        // Every positive root has positive coordinate sum.
        let counter = PartitionCounter::new(&roots, &[1, 1]).expect("positive roots lie in a half-space");
        Kostant { counter }
    }

    fn weight_mult(&mut self, hw: GWeight, mu: GWeight) -> u64 {
        let shifted = hw + RHO_G;
        let total: i64 = WeylG::all()
            .iter()
            .map(|w| {
                let v = w.act(shifted) - (mu + RHO_G);
                w.sign() * self.counter.count(&[v.a, v.b]).expect("two-dimensional") as i64
            })
            .sum();
        u64::try_from(total).expect("Kostant multiplicity is nonnegative")
    }
}

/// Multiplicity of the weight `μ` in `V_(a,b)`:
/// `Σ_{w ∈ S3} (-1)^ℓ(w) κ(w(ν + ρ) - (μ + ρ); Δ^G_+)`.
pub fn kostant_weight_mult(a: u32, b: u32, mu: GWeight) -> u64 {
    Kostant::new().weight_mult(GWeight::new(i64::from(a), i64::from(b)), mu)
}

pub fn weyl_dim(a: u32, b: u32) -> u64 {
    let (a, b) = (u64::from(a), u64::from(b));
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

impl WeightDiagram {
    /// Evaluates the Kostant formula on the box `|coords| ≤ a + b + 2`, which
    /// contains every weight of `V_(a,b)`.
    pub fn new(a: u32, b: u32) -> Self {
        let hw = GWeight::new(i64::from(a), i64::from(b));
        let bound = hw.a + hw.b + 2;
        let mut kostant = Kostant::new();
        let mut mults = BTreeMap::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let mu = GWeight::new(x, y);
                let m = kostant.weight_mult(hw, mu);
                if m > 0 {
                    mults.insert(mu, m);
                }
            }
        }
        WeightDiagram { hw, mults }
    }

    pub fn mult(&self, mu: GWeight) -> u64 {
        self.mults.get(&mu).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Multiplicity of the SO(2)-weight `k` (integer units) after restriction.
    pub fn restricted_mult(&self, k: i64) -> u64 {
        self.mults
            .iter()
            .filter(|(mu, _)| restrict(**mu).half_units() == 2 * k)
            .map(|(_, m)| m)
            .sum()
    }

    /// SO(3)-multiplicity of the irrep of dimension `2n + 1`, as
    /// `m_r(n) - m_r(n + 1)`.
    pub fn branch(&self, n: u32) -> i64 {
        let n = i64::from(n);
        self.restricted_mult(n) as i64 - self.restricted_mult(n + 1) as i64
    }

    /// All SO(3)-multiplicities `n = 0 ..= a + b`.
    pub fn branching(&self) -> Vec<u64> {
        let top = u32::try_from(self.hw.a + self.hw.b).unwrap_or(0);
        (0..=top)
            .map(|n| u64::try_from(self.branch(n)).expect("branching multiplicity is nonnegative"))
            .collect()
    }
}

/// Multiplicity of the SO(3)-irrep of dimension `2n + 1` in `V_(a,b)`.
pub fn branch_so3(a: u32, b: u32, n: u32) -> u64 {
    let value = WeightDiagram::new(a, b).branch(n);
    u64::try_from(value).expect("branching multiplicity is nonnegative")
}
