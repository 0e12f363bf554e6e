//! Positive formula: K-type multiplicities as lattice-point counts.
//!
//! For parameters `(a, b)` let
//! `C = {(c, d) ∈ N² : c ≡ a (mod 2), and d ≡ b (mod 2) if c = 0}`
//! with projection `π(c, d) = c + d`. The lines `c = a` and `d = b` cut `C`
//! into four regions, one per orbit closure, and the multiplicity of the
//! SO(3)-irrep of dimension `2n + 1` in the irrep supported on `O` is
//! `#(π⁻¹(n) ∩ C_O)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::Orbit;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegionPoint {
    pub c: u64,
    pub d: u64,
}

impl RegionPoint {
    pub const fn new(c: u64, d: u64) -> Self {
        RegionPoint { c, d }
    }

    pub fn projection(self) -> u64 {
        self.c + self.d
    }
}

impl fmt::Display for RegionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.d)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    FullFlag,
    O1,
    O2,
    ClosedOrbit,
    NotInC,
}

impl Region {
    pub fn orbit(self) -> Option<Orbit> {
        match self {
            Region::FullFlag => Some(Orbit::Open),
            Region::O1 => Some(Orbit::O1),
            Region::O2 => Some(Orbit::O2),
            Region::ClosedOrbit => Some(Orbit::Closed),
            Region::NotInC => None,
        }
    }

    pub fn of_orbit(orbit: Orbit) -> Region {
        match orbit {
            Orbit::Open => Region::FullFlag,
            Orbit::O1 => Region::O1,
            Orbit::O2 => Region::O2,
            Orbit::Closed => Region::ClosedOrbit,
        }
    }
}

pub fn in_c(p: RegionPoint, a: u64, b: u64) -> bool {
    p.c % 2 == a % 2 && (p.c != 0 || p.d % 2 == b % 2)
}

pub fn classify(p: RegionPoint, a: u64, b: u64) -> Region {
    if !in_c(p, a, b) {
        return Region::NotInC;
    }
    match (p.c > a, p.d > b) {
        (false, false) => Region::FullFlag,
        (true, false) => Region::O1,
        (false, true) => Region::O2,
        (true, true) => Region::ClosedOrbit,
    }
}

/// The fiber `π⁻¹(n)`, all of `N²` on the line `c + d = n`.
pub fn fiber(n: u64) -> impl Iterator<Item = RegionPoint> {
    (0..=n).map(move |c| RegionPoint::new(c, n - c))
}

/// `#(π⁻¹(n) ∩ C_O)`.
pub fn mult_positive(orbit: Orbit, a: u64, b: u64, n: u64) -> u64 {
    let region = Region::of_orbit(orbit);
    fiber(n).filter(|&p| classify(p, a, b) == region).count() as u64
}

/// `#(π⁻¹(n) ∩ C)`: the K-multiplicity of the standard module.
pub fn fiber_size(a: u64, b: u64, n: u64) -> u64 {
    fiber(n).filter(|&p| in_c(p, a, b)).count() as u64
}

/// The duality bijection `C(a, b) → C(b, a)`:
/// `(c, d) ↦ (d, c)` if `d ≡ b (mod 2)`, else `(d + 1, c - 1)`.
///
/// It preserves `c + d` and carries `C_O(a, b)` onto `C_{O*}(b, a)`. When
/// `a ≡ b (mod 2)` the branch condition is the same as `d ≡ a`. Points with
/// `c = 0` always take the first branch, so `c - 1` never underflows.
pub fn duality(p: RegionPoint, a: u64, b: u64) -> Result<RegionPoint> {
    if !in_c(p, a, b) {
        return Err(Error::NotInC { c: p.c, d: p.d, a, b });
    }
    if p.d % 2 == b % 2 {
        Ok(RegionPoint::new(p.d, p.c))
    } else {
        Ok(RegionPoint::new(p.d + 1, p.c - 1))
    }
}
