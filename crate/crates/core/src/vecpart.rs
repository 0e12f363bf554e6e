//! Vector partition functions.
//!
//! `κ(v; S)` counts the ways to write `v` as a sum of elements of the
//! multiset `S` (with multiplicity, order ignored). The graded variant
//! attaches a degree to every generator and fixes the total degree; this is
//! the same count with the degree appended as one extra coordinate.
//!
//! Finiteness needs every generator to pair strictly positively with some
//! linear functional. The functional is always supplied by the caller.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A generator `(weight, degree)` of a graded partition function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedGenerator {
    pub weight: Vec<i64>,
    pub degree: u32,
}

impl GradedGenerator {
    pub fn new(weight: Vec<i64>, degree: u32) -> Self {
        GradedGenerator { weight, degree }
    }

    fn lifted(&self) -> Vec<i64> {
        let mut v = self.weight.clone();
        v.push(i64::from(self.degree));
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedTarget {
    pub weight: Vec<i64>,
    pub degree: i64,
}

impl GradedTarget {
    pub fn new(weight: Vec<i64>, degree: i64) -> Self {
        GradedTarget { weight, degree }
    }

    fn lifted(&self) -> Vec<i64> {
        let mut v = self.weight.clone();
        v.push(self.degree);
        v
    }
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(p, q)| p * q).sum()
}

/// Memoized counter for a fixed generator multiset.
///
/// Generators are kept in a canonical (sorted) order and the cache is keyed
/// on `(generator suffix, remaining target)`, so one counter can be reused
/// across many targets.
#[derive(Debug, Clone)]
pub struct PartitionCounter {
    gens: Vec<Vec<i64>>,
    functional: Vec<i64>,
    cache: HashMap<(usize, Vec<i64>), u64>,
}

impl PartitionCounter {
    /// Fails with [`Error::NonProperCone`] unless every generator pairs
    /// strictly positively with `functional`.
    pub fn new(gens: &[Vec<i64>], functional: &[i64]) -> Result<Self> {
        let dim = functional.len();
        for (index, g) in gens.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
            }
            let pairing = dot(g, functional);
            if pairing <= 0 {
                return Err(Error::NonProperCone { index, pairing });
            }
        }
        let mut gens = gens.to_vec();
        gens.sort();
        Ok(PartitionCounter {
            gens,
            functional: functional.to_vec(),
            cache: HashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.functional.len()
    }

    pub fn count(&mut self, target: &[i64]) -> Result<u64> {
        if target.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: target.len() });
        }
        Ok(self.count_from(0, target))
    }

    fn count_from(&mut self, start: usize, target: &[i64]) -> u64 {
        let height = dot(target, &self.functional);
        if height < 0 {
            return 0;
        }
        if height == 0 || start == self.gens.len() {
            return u64::from(target.iter().all(|&x| x == 0));
        }
        if let Some(&hit) = self.cache.get(&(start, target.to_vec())) {
            return hit;
        }
        // κ(v; S) = Σ_j κ(v - j·s; S \ {s}) for the first generator s.
        let gen = self.gens[start].clone();
        let mut rest = target.to_vec();
        let mut total = 0u64;
        while dot(&rest, &self.functional) >= 0 {
            total += self.count_from(start + 1, &rest);
            for (r, g) in rest.iter_mut().zip(&gen) {
                *r -= g;
            }
        }
        self.cache.insert((start, target.to_vec()), total);
        total
    }
}

/// `κ(v; S)` for generators lying in the open half-space `⟨functional, ·⟩ > 0`.
pub fn kappa_total(target: &[i64], gens: &[Vec<i64>], functional: &[i64]) -> Result<u64> {
    PartitionCounter::new(gens, functional)?.count(target)
}

/// Graded count: multisets of generators with weights summing to
/// `target.weight` and degrees summing to `target.degree`.
///
/// `tau` is the positive direction on weights. Degree-0 generators must pair
/// strictly negatively with it; generators of positive degree are
/// unconstrained. The count is taken in the lifted space `(weight, degree)`
/// against the functional `(-tau, N)` with `N` large enough that every
/// generator pairs positively.
pub fn kappa_graded(target: &GradedTarget, gens: &[GradedGenerator], tau: &[i64]) -> Result<u64> {
    GradedCounter::new(gens, tau)?.count(target)
}

/// A reusable [`kappa_graded`] for a fixed generator list and `tau`.
#[derive(Debug, Clone)]
pub struct GradedCounter {
    dim: usize,
    counter: PartitionCounter,
}

impl GradedCounter {
    pub fn new(gens: &[GradedGenerator], tau: &[i64]) -> Result<Self> {
        let dim = tau.len();
        let mut slope = 1i64;
        for (index, g) in gens.iter().enumerate() {
            if g.weight.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.weight.len() });
            }
            let pairing = dot(&g.weight, tau);
            if g.degree == 0 {
                if pairing >= 0 {
                    return Err(Error::NonProperCone { index, pairing });
                }
            } else {
                slope = slope.max(pairing + 1);
            }
        }
        let mut functional: Vec<i64> = tau.iter().map(|t| -t).collect();
        functional.push(slope);
        let lifted: Vec<Vec<i64>> = gens.iter().map(GradedGenerator::lifted).collect();
        Ok(GradedCounter { dim, counter: PartitionCounter::new(&lifted, &functional)? })
    }

    pub fn count(&mut self, target: &GradedTarget) -> Result<u64> {
        if target.weight.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: target.weight.len() });
        }
        if target.degree < 0 {
            return Ok(0);
        }
        self.counter.count(&target.lifted())
    }
}

/// `κ_m(v; S)`: partitions of `v` into exactly `m` parts from `S`.
pub fn kappa_parts(target: &[i64], m: i64, gens: &[Vec<i64>], functional: &[i64]) -> Result<u64> {
    let dim = functional.len();
    if target.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: target.len() });
    }
    if m < 0 {
        return Ok(0);
    }
    let mut lifted_functional = functional.to_vec();
    lifted_functional.push(0);
    let lifted: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| {
            let mut v = g.clone();
            v.push(1);
            v
        })
        .collect();
    let mut t = target.to_vec();
    t.push(m);
    kappa_total(&t, &lifted, &lifted_functional)
}

/// Exhaustive count over all multiplicity vectors with at most `part_bound`
/// parts in total. Independent of [`PartitionCounter`]; used as an oracle.
pub fn kappa_brute(target: &GradedTarget, gens: &[GradedGenerator], part_bound: u32) -> u64 {
    let goal = target.lifted();
    let lifted: Vec<Vec<i64>> = gens.iter().map(GradedGenerator::lifted).collect();
    if lifted.iter().any(|g| g.len() != goal.len()) {
        return 0;
    }
    fn walk(i: usize, left: u32, acc: &mut Vec<i64>, gens: &[Vec<i64>], goal: &[i64]) -> u64 {
        if i == gens.len() {
            return u64::from(acc.as_slice() == goal);
        }
        let mut total = 0;
        for k in 0..=left {
            if k > 0 {
                for (x, g) in acc.iter_mut().zip(&gens[i]) {
                    *x += g;
                }
            }
            total += walk(i + 1, left - k, acc, gens, goal);
        }
        for (x, g) in acc.iter_mut().zip(&gens[i]) {
            *x -= g * i64::from(left);
        }
        total
    }
    let mut acc = vec![0; goal.len()];
    walk(0, part_bound, &mut acc, &lifted, &goal)
}

/// A valid part bound for `kappa_brute` when all generators pair positively
/// with `functional`: `⟨functional, target⟩ / min pairing`.
pub fn part_bound(target: &[i64], gens: &[Vec<i64>], functional: &[i64]) -> u32 {
    let height = dot(target, functional);
    let min_pairing = gens.iter().map(|g| dot(g, functional)).filter(|&p| p > 0).min();
    match min_pairing {
        Some(p) if height > 0 => u32::try_from(height / p).unwrap_or(u32::MAX),
        _ => 0,
    }
}
