use serde::{Deserialize, Serialize};

use super::{Budget, Ideal};
use crate::error::Result;
use crate::poly::Monomial;

/// Krull dimension of a variety (`-1` for the empty set) with a witness set
/// of variables that is independent modulo the leading ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionResult {
    pub dimension: i64,
    pub witness_independent_set: Vec<usize>,
}

impl DimensionResult {
    pub fn empty() -> Self {
        DimensionResult { dimension: -1, witness_independent_set: Vec::new() }
    }
}

/// Dimension of `K[x]/(leading)` from the largest set of variables that no
/// leading monomial is supported in. Among sets of maximal size the
/// lexicographically first one is returned.
pub fn monomial_dimension(leading: &[Monomial], nvars: usize) -> DimensionResult {
    if leading.iter().any(|m| m.is_one()) {
        return DimensionResult::empty();
    }
    let supports: Vec<u64> = leading.iter().map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i))).collect();
    let mut best: Option<u64> = None;
    let mut best_size = 0u32;
    search(0, nvars, 0, &supports, &mut best, &mut best_size);
    let set = best.unwrap_or(0);
    let witness: Vec<usize> = (0..nvars).filter(|i| set & (1 << i) != 0).collect();
    DimensionResult { dimension: witness.len() as i64, witness_independent_set: witness }
}

fn search(i: usize, n: usize, current: u64, supports: &[u64], best: &mut Option<u64>, best_size: &mut u32) {
    let size = current.count_ones();
    if size + (n - i) as u32 <= *best_size && best.is_some() {
        return;
    }
    if i == n {
        if best.is_none() || size > *best_size {
            *best = Some(current);
            *best_size = size;
        }
        return;
    }
    let with = current | (1 << i);
    if supports.iter().all(|&s| s & !with != 0) {
        search(i + 1, n, with, supports, best, best_size);
    }
    search(i + 1, n, current, supports, best, best_size);
}

/// Number of monomials outside the monomial ideal generated by `leading`, or
/// `None` when that number is infinite.
pub(crate) fn count_standard_monomials(leading: &[Monomial], nvars: usize) -> Option<u64> {
    if leading.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    let bounds = (0..nvars)
        .map(|i| leading.iter().filter(|m| m.support().all(|j| j == i)).map(|m| m.exponents()[i]).min())
        .collect::<Option<Vec<u32>>>()?;
    let mut count = 0u64;
    let mut e = vec![0u32; nvars];
    count_rec(0, &mut e, &bounds, leading, &mut count);
    Some(count)
}

fn count_rec(i: usize, e: &mut Vec<u32>, bounds: &[u32], leading: &[Monomial], count: &mut u64) {
    // Prune as soon as the partial exponent vector is already divisible.
    let divisible = leading.iter().any(|m| m.exponents().iter().zip(e.iter()).all(|(a, b)| a <= b));
    if divisible {
        return;
    }
    if i == e.len() {
        *count += 1;
        return;
    }
    for k in 0..bounds[i] {
        e[i] = k;
        count_rec(i + 1, e, bounds, leading, count);
    }
    e[i] = 0;
}

impl Ideal {
    /// Dimension of the affine variety `V(self)`.
    pub fn dimension(&self, budget: &Budget) -> Result<DimensionResult> {
        let b = self.groebner(budget)?;
        Ok(monomial_dimension(&b.leading_monomials(), self.ring().nvars()))
    }

    /// Dimension of the germ of `V(self)` at the origin; `-1` when the origin
    /// is not on the variety.
    pub fn local_dimension_at_origin(&self, budget: &Budget) -> Result<DimensionResult> {
        let b = self.standard_basis(budget)?;
        Ok(monomial_dimension(&b.leading_monomials(), self.ring().nvars()))
    }

    /// Vector-space dimension of the local ring at 0 modulo the ideal; `None`
    /// for infinite colength.
    pub fn colength(&self, budget: &Budget) -> Result<Option<u64>> {
        let b = self.standard_basis(budget)?;
        Ok(count_standard_monomials(&b.leading_monomials(), self.ring().nvars()))
    }

    /// Vector-space dimension of `K[x]/self` (global count of standard monomials).
    pub fn global_colength(&self, budget: &Budget) -> Result<Option<u64>> {
        let b = self.groebner(budget)?;
        Ok(count_standard_monomials(&b.leading_monomials(), self.ring().nvars()))
    }
}
