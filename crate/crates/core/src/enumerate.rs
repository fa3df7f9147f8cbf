//! Canonical enumeration of F_q-subspaces of ⟨g_1..g_n⟩ and of index subsets.
//!
//! A t-dimensional subspace is represented by its unique reduced row echelon t×n matrix
//! over F_q with respect to the basis g. Pivot sets are visited in lexicographic order;
//! within one pivot set the free entries form a lexicographic counter over the F_q
//! elements sorted by code. The row-r basis vector is `g_{p_r} + Σ_free M[r][c] g_c`.

use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::field::{Elem, FieldCtx};

/// Number of t-dimensional subspaces of F_q^n; saturates at `u128::MAX`.
pub fn gaussian_binomial(q: u64, n: usize, t: usize) -> u128 {
    if t > n {
        return 0;
    }
    let q = q as u128;
    let mut acc: u128 = 1;
    for i in 0..t {
        let num = q.checked_pow((n - i) as u32).map(|v| v - 1);
        let den = q.pow((i + 1) as u32) - 1;
        match num.and_then(|num| acc.checked_mul(num)) {
            Some(v) => acc = v / den,
            None => return u128::MAX,
        }
    }
    acc
}

pub fn binomial(n: usize, t: usize) -> u128 {
    if t > n {
        return 0;
    }
    (0..t).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Iterator over the bases of all t-dimensional subspaces of ⟨ambient⟩.
pub struct Subspaces<'f> {
    ctx: &'f FieldCtx,
    ambient: Vec<Elem>,
    scalars: Vec<Elem>,
    pivot_sets: itertools::Combinations<core::ops::Range<usize>>,
    current: Option<PivotState>,
}

struct PivotState {
    pivots: Vec<usize>,
    /// (row, column) of every free entry, in reading order
    free: Vec<(usize, usize)>,
    /// indices into `scalars`; `None` once exhausted
    counter: Option<Vec<usize>>,
}

impl<'f> Subspaces<'f> {
    pub fn new(ctx: &'f FieldCtx, ambient: &[Elem], t: usize) -> Self {
        Subspaces {
            ctx,
            ambient: ambient.to_vec(),
            scalars: ctx.enumerate_subfield(),
            pivot_sets: (0..ambient.len()).combinations(t),
            current: None,
        }
    }

    fn basis_for(&self, state: &PivotState, counter: &[usize]) -> Vec<Elem> {
        let ctx = self.ctx;
        let mut rows: Vec<Elem> = state.pivots.iter().map(|&p| self.ambient[p]).collect();
        for (&(r, c), &idx) in state.free.iter().zip(counter) {
            let lam = self.scalars[idx];
            if !lam.is_zero() {
                rows[r] = ctx.add(rows[r], ctx.mul(lam, self.ambient[c]));
            }
        }
        rows
    }
}

impl Iterator for Subspaces<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        loop {
            let radix = self.scalars.len();
            if let Some(state) = self.current.as_mut() {
                if let Some(counter) = state.counter.take() {
                    state.counter = advance(&counter, radix);
                    let state = self.current.as_ref().expect("state present");
                    return Some(self.basis_for(state, &counter));
                }
            }
            let pivots = self.pivot_sets.next()?;
            let mut free = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..self.ambient.len() {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let counter = vec![0usize; free.len()];
            self.current = Some(PivotState {
                pivots,
                free,
                counter: Some(counter),
            });
        }
    }
}

/// Next value of a base-`radix` counter whose last digit is least significant.
fn advance(counter: &[usize], radix: usize) -> Option<Vec<usize>> {
    let mut next = counter.to_vec();
    for pos in (0..next.len()).rev() {
        next[pos] += 1;
        if next[pos] < radix {
            return Some(next);
        }
        next[pos] = 0;
    }
    None
}

/// Lexicographic t-subsets of `0..n`.
pub fn subsets(n: usize, t: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).combinations(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 4, 2), 35);
        assert_eq!(gaussian_binomial(2, 4, 3), 15);
        assert_eq!(gaussian_binomial(2, 4, 0), 1);
        assert_eq!(gaussian_binomial(3, 3, 1), 13);
        assert_eq!(gaussian_binomial(2, 5, 2), 155);
        assert_eq!(binomial(5, 2), 10);
    }

    #[test]
    fn enumeration_counts_match_and_spans_are_distinct() {
        for (p, m) in [(2u32, 4u32), (3, 3)] {
            let ctx = FieldCtx::new(p, 1, m, None).unwrap();
            let ambient: Vec<Elem> = (0..m).map(|i| Elem::from_code(p.pow(i))).collect();
            for t in 0..=m as usize {
                let all: Vec<Vec<Elem>> = Subspaces::new(&ctx, &ambient, t).collect();
                assert_eq!(all.len() as u128, gaussian_binomial(p as u64, m as usize, t));
                let mut spans: Vec<Vec<Elem>> = all
                    .iter()
                    .map(|b| {
                        assert_eq!(ctx.rank_of(b), t);
                        let mut els = crate::linpoly::Subspace::new(&ctx, b.clone()).unwrap().elements(&ctx);
                        els.sort_unstable();
                        els
                    })
                    .collect();
                spans.sort();
                spans.dedup();
                assert_eq!(spans.len(), all.len());
            }
        }
    }
}
