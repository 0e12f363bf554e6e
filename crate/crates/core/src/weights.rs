//! Weight bookkeeping for the pair (SL3, SO(3)).
//!
//! G-side weights live in fundamental-weight coordinates. K-side weights are
//! stored in half-units (twice the SO(2)-weight) so that `ρ_K = 1/2` is an
//! integer. An SO(3)-irrep label `n` (dimension `2n + 1`) is the K-weight
//! with `half_units == 2n`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An SL3 weight `a·ω1 + b·ω2`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GWeight {
    pub a: i64,
    pub b: i64,
}

impl GWeight {
    pub const fn new(a: i64, b: i64) -> Self {
        GWeight { a, b }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn restrict(self) -> KWeight {
        restrict(self)
    }
}

impl Add for GWeight {
    type Output = GWeight;
    fn add(self, rhs: GWeight) -> GWeight {
        GWeight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GWeight {
    type Output = GWeight;
    fn sub(self, rhs: GWeight) -> GWeight {
        GWeight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GWeight {
    type Output = GWeight;
    fn neg(self) -> GWeight {
        GWeight::new(-self.a, -self.b)
    }
}

impl fmt::Display for GWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A weight of the maximal torus of SO(3), in half-units.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KWeight(i64);

impl KWeight {
    pub const ZERO: KWeight = KWeight(0);

    pub const fn from_half_units(half_units: i64) -> Self {
        KWeight(half_units)
    }

    /// The weight `n` in the integer normalisation where the defining
    /// representation of SO(3) has weights `-1, 0, 1`.
    pub const fn from_units(n: i64) -> Self {
        KWeight(2 * n)
    }

    /// The highest weight of the SO(3)-irrep of dimension `2n + 1`.
    pub const fn irrep(n: u32) -> Self {
        KWeight(2 * n as i64)
    }

    pub const fn half_units(self) -> i64 {
        self.0
    }

    pub fn is_irrep_label(self) -> bool {
        self.0 >= 0 && self.0 % 2 == 0
    }

    /// The irrep label `n`, if this weight is one.
    pub fn irrep_label(self) -> Option<u32> {
        if self.is_irrep_label() {
            u32::try_from(self.0 / 2).ok()
        } else {
            None
        }
    }

    pub fn times(self, k: i64) -> KWeight {
        KWeight(self.0 * k)
    }
}

impl Add for KWeight {
    type Output = KWeight;
    fn add(self, rhs: KWeight) -> KWeight {
        KWeight(self.0 + rhs.0)
    }
}

impl AddAssign for KWeight {
    fn add_assign(&mut self, rhs: KWeight) {
        self.0 += rhs.0;
    }
}

impl Sub for KWeight {
    type Output = KWeight;
    fn sub(self, rhs: KWeight) -> KWeight {
        KWeight(self.0 - rhs.0)
    }
}

impl Neg for KWeight {
    type Output = KWeight;
    fn neg(self) -> KWeight {
        KWeight(-self.0)
    }
}

impl std::iter::Sum for KWeight {
    fn sum<I: Iterator<Item = KWeight>>(iter: I) -> KWeight {
        KWeight(iter.map(|w| w.0).sum())
    }
}

impl fmt::Display for KWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// The restriction `T_G^* -> T_K^*`, `(a, b) ↦ a + b`.
pub fn restrict(gw: GWeight) -> KWeight {
    KWeight::from_units(gw.a + gw.b)
}

/// A simple reflection of SL3.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SimpleReflection {
    S1,
    S2,
}

impl SimpleReflection {
    fn matrix(self) -> [[i64; 2]; 2] {
        // Acting on column vectors (a, b) in fundamental coordinates.
        match self {
            SimpleReflection::S1 => [[-1, 0], [1, 1]],
            SimpleReflection::S2 => [[1, 1], [0, -1]],
        }
    }
}

fn mat_mul(x: [[i64; 2]; 2], y: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

const IDENTITY: [[i64; 2]; 2] = [[1, 0], [0, 1]];

/// An element of the Weyl group S3 of SL3, stored as its integer matrix on
/// fundamental-weight coordinates.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylG {
    matrix: [[i64; 2]; 2],
}

impl WeylG {
    pub const IDENTITY: WeylG = WeylG { matrix: IDENTITY };

    /// The element `s_{i1} s_{i2} ...`; the rightmost letter acts first.
    pub fn from_word(word: &[SimpleReflection]) -> Self {
        let matrix = word
            .iter()
            .fold(IDENTITY, |acc, s| mat_mul(acc, s.matrix()));
        WeylG { matrix }
    }

    /// The element sending `e_i` to `e_{perm[i]}` (0-based) on the weights
    /// `e1 = ω1, e2 = ω2 - ω1, e3 = -ω2` of `C^3`.
    pub fn from_permutation(perm: [usize; 3]) -> Option<Self> {
        let e = [GWeight::new(1, 0), GWeight::new(-1, 1), GWeight::new(0, -1)];
        if perm.iter().any(|&p| p > 2) {
            return None;
        }
        WeylG::all()
            .into_iter()
            .find(|w| (0..3).all(|i| w.act(e[i]) == e[perm[i]]))
    }

    pub fn longest() -> Self {
        use SimpleReflection::*;
        WeylG::from_word(&[S1, S2, S1])
    }

    /// All six elements, ordered by length.
    pub fn all() -> [WeylG; 6] {
        use SimpleReflection::*;
        [
            WeylG::from_word(&[]),
            WeylG::from_word(&[S1]),
            WeylG::from_word(&[S2]),
            WeylG::from_word(&[S1, S2]),
            WeylG::from_word(&[S2, S1]),
            WeylG::from_word(&[S1, S2, S1]),
        ]
    }

    pub fn compose(self, other: WeylG) -> WeylG {
        WeylG {
            matrix: mat_mul(self.matrix, other.matrix),
        }
    }

    pub fn determinant(self) -> i64 {
        let m = self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// `(-1)^{ℓ(w)}`.
    pub fn sign(self) -> i64 {
        self.determinant()
    }

    pub fn length(self) -> u32 {
        // Number of positive roots sent to negative roots.
        pos_roots_g()
            .iter()
            .filter(|&&beta| {
                let image = self.act(beta);
                image.a + image.b < 0
            })
            .count() as u32
    }

    pub fn act(self, gw: GWeight) -> GWeight {
        let m = self.matrix;
        GWeight::new(m[0][0] * gw.a + m[0][1] * gw.b, m[1][0] * gw.a + m[1][1] * gw.b)
    }
}

pub fn weyl_act_g(w: WeylG, gw: GWeight) -> GWeight {
    w.act(gw)
}

/// The Weyl group of SO(3): `{e, s}` with `s·μ = -μ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylK {
    Identity,
    Reflection,
}

impl WeylK {
    pub const ALL: [WeylK; 2] = [WeylK::Identity, WeylK::Reflection];

    pub fn sign(self) -> i64 {
        match self {
            WeylK::Identity => 1,
            WeylK::Reflection => -1,
        }
    }

    pub fn act(self, kw: KWeight) -> KWeight {
        match self {
            WeylK::Identity => kw,
            WeylK::Reflection => -kw,
        }
    }
}

pub fn weyl_act_k(w: WeylK, kw: KWeight) -> KWeight {
    w.act(kw)
}

pub const RHO_G: GWeight = GWeight::new(1, 1);
pub const RHO_K: KWeight = KWeight::from_half_units(1);
pub const POS_ROOT_K: KWeight = KWeight::from_half_units(2);

/// Positive roots of SL3 in fundamental coordinates: `α1, α2, α1 + α2`.
pub const fn pos_roots_g() -> [GWeight; 3] {
    [GWeight::new(2, -1), GWeight::new(-1, 2), GWeight::new(1, 1)]
}

/// `r(Δ^G_+) \ Δ^K_+`, the restricted noncompact positive roots.
pub fn restricted_noncompact_roots() -> Vec<KWeight> {
    let mut restricted: Vec<KWeight> = pos_roots_g().iter().map(|&r| restrict(r)).collect();
    restricted.sort();
    let pos = restricted
        .iter()
        .position(|&w| w == POS_ROOT_K)
        .expect("Δ^K_+ lies in the restricted G-roots");
    restricted.remove(pos);
    restricted
}

/// The pairing of the K-side positive direction with a K-weight.
pub fn tau_pairing(kw: KWeight) -> i64 {
    kw.half_units()
}
