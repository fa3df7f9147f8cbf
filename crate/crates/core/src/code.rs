//! Gabidulin codes: evaluation of q-degree < k linearized polynomials at F_q-independent
//! points, the word ↔ polynomial correspondence σ, weights, and brute-force distances.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::linpoly::{self, LinPoly, Subspace};
use crate::matrix::Matrix;

/// Default cap on the number of codewords an exhaustive pass may visit.
pub const DEFAULT_ORACLE_CAP: u64 = 1 << 20;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Rank,
    Hamming,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Rank => "rank",
            Metric::Hamming => "hamming",
        })
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rank" => Ok(Metric::Rank),
            "hamming" => Ok(Metric::Hamming),
            _ => Err(Error::InvalidParameter("metric must be rank or hamming")),
        }
    }
}

/// A vector in F_{q^m}^n.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Elem>);

impl Word {
    pub fn new(entries: Vec<Elem>) -> Self {
        Word(entries)
    }

    pub fn entries(&self) -> &[Elem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| ctx.add(a, b)).collect())
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Word) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| ctx.sub(a, b)).collect())
    }

    pub fn weight(&self, ctx: &FieldCtx, metric: Metric) -> usize {
        weight(ctx, &self.0, metric)
    }
}

pub fn weight(ctx: &FieldCtx, entries: &[Elem], metric: Metric) -> usize {
    match metric {
        Metric::Rank => ctx.rank_of(entries),
        Metric::Hamming => entries.iter().filter(|e| !e.is_zero()).count(),
    }
}

/// The Gabidulin code with evaluation points `g` and dimension `k`.
#[derive(Clone, Debug)]
pub struct GabidulinCode<'f> {
    ctx: &'f FieldCtx,
    g: Subspace,
    k: usize,
    /// row l holds g_j^{q^l}
    generator: Matrix,
}

impl<'f> GabidulinCode<'f> {
    pub fn new(ctx: &'f FieldCtx, g: Vec<Elem>, k: usize) -> Result<Self> {
        let n = g.len();
        if n > ctx.m() as usize {
            return Err(Error::InvalidParameter("n must not exceed m"));
        }
        let g = Subspace::new(ctx, g)?;
        if k == 0 || k > n {
            return Err(Error::InvalidParameter("dimension must satisfy 1 <= k <= n"));
        }
        let rows: Vec<usize> = (0..k).collect();
        let generator = linpoly::moore_matrix(ctx, g.gens(), &rows);
        Ok(GabidulinCode { ctx, g, k, generator })
    }

    pub fn ctx(&self) -> &'f FieldCtx {
        self.ctx
    }

    pub fn n(&self) -> usize {
        self.g.dim()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[Elem] {
        self.g.gens()
    }

    pub fn support(&self) -> &Subspace {
        &self.g
    }

    /// The Moore matrix M_k(g_1..g_n).
    pub fn generator_matrix(&self) -> &Matrix {
        &self.generator
    }

    /// Evaluation word σ_f = (f(g_1), …, f(g_n)) of any linearized polynomial.
    pub fn evaluate(&self, f: &LinPoly) -> Word {
        Word(self.g.gens().iter().map(|&gj| f.eval(self.ctx, gj)).collect())
    }

    pub fn encode(&self, msg: &LinPoly) -> Result<Word> {
        if !msg.deg_q().is_below(self.k) {
            return Err(Error::DegreeOutOfRange("message q-degree must be below k"));
        }
        Ok(self.evaluate(msg))
    }

    /// The unique f with deg_q f < n and σ_f = w.
    pub fn sigma_inverse(&self, w: &Word) -> Result<LinPoly> {
        if w.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: w.len(),
            });
        }
        linpoly::q_lagrange(self.ctx, self.g.gens(), w.entries())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: w.len(),
            });
        }
        for &e in w.entries() {
            self.ctx.check(e)?;
        }
        Ok(())
    }

    /// q^{mk}, saturating.
    pub fn message_count(&self) -> u128 {
        (self.ctx.order() as u128).saturating_pow(self.k as u32)
    }

    /// Message number `index` in enumeration order: a base-|F| counter with a_0 fastest.
    pub fn message(&self, index: u64) -> LinPoly {
        LinPoly::new(digits(index, self.ctx.order(), self.k))
    }

    /// Number of translation classes σ-words fall into: q^{m(n−k)}.
    pub fn class_count(&self) -> u128 {
        (self.ctx.order() as u128).saturating_pow((self.n() - self.k) as u32)
    }

    /// Representative of class `index`: coefficients a_k..a_{n−1} from a counter with
    /// a_k fastest, lower coefficients zero.
    pub fn class_poly(&self, index: u64) -> LinPoly {
        let mut coeffs = alloc::vec![Elem::ZERO; self.k];
        coeffs.extend(digits(index, self.ctx.order(), self.n() - self.k));
        LinPoly::new(coeffs)
    }

    /// Inverse of [`GabidulinCode::class_poly`] after discarding terms below k.
    pub fn class_index(&self, f: &LinPoly) -> u64 {
        let order = self.ctx.order();
        (self.k..self.n())
            .rev()
            .fold(0u64, |acc, i| acc * order + f.coeff(i).code() as u64)
    }

    fn codeword_into(&self, index: u64, out: &mut [Elem]) {
        let ctx = self.ctx;
        out.iter_mut().for_each(|e| *e = Elem::ZERO);
        let order = ctx.order();
        let mut rest = index;
        for row in &self.generator {
            let a = Elem::from_code((rest % order) as u32);
            rest /= order;
            if a.is_zero() {
                continue;
            }
            for (slot, &g) in out.iter_mut().zip(row) {
                *slot = ctx.add(*slot, ctx.mul(a, g));
            }
        }
    }

    fn check_cap(&self, cap: u64) -> Result<u64> {
        let count = self.message_count();
        if count > cap as u128 {
            return Err(Error::CapExceeded {
                what: "codeword enumeration",
                needed: count,
                cap,
            });
        }
        Ok(count as u64)
    }

    /// Minimum distance from `w` over the messages in `range`, with the first message
    /// index attaining it. `None` for an empty range.
    pub fn nearest_in_range(&self, w: &Word, metric: Metric, range: Range<u64>) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64)> = None;
        let mut cw = alloc::vec![Elem::ZERO; self.n()];
        let mut diff = alloc::vec![Elem::ZERO; self.n()];
        for idx in range {
            self.codeword_into(idx, &mut cw);
            for ((d, &a), &b) in diff.iter_mut().zip(w.entries()).zip(&cw) {
                *d = self.ctx.sub(a, b);
            }
            let dist = weight(self.ctx, &diff, metric);
            if best.is_none_or(|(bd, _)| dist < bd) {
                best = Some((dist, idx));
                if dist == 0 {
                    break;
                }
            }
        }
        best
    }

    /// Brute-force d(w, C) and the first message (enumeration order) attaining it.
    pub fn dist_to_code_exhaustive(&self, w: &Word, metric: Metric, cap: u64) -> Result<(usize, LinPoly)> {
        self.check_word(w)?;
        let count = self.check_cap(cap)?;
        let (dist, idx) = self.nearest_in_range(w, metric, 0..count).expect("code is nonempty");
        Ok((dist, self.message(idx)))
    }

    /// Minimum weight over nonzero codewords in `range` (index 0 is skipped).
    pub fn min_weight_in_range(&self, metric: Metric, range: Range<u64>) -> Option<usize> {
        let mut cw = alloc::vec![Elem::ZERO; self.n()];
        range
            .filter(|&idx| idx != 0)
            .map(|idx| {
                self.codeword_into(idx, &mut cw);
                weight(self.ctx, &cw, metric)
            })
            .min()
    }

    pub fn min_distance(&self, metric: Metric, cap: u64) -> Result<usize> {
        let count = self.check_cap(cap)?;
        self.min_weight_in_range(metric, 0..count)
            .ok_or(Error::InvalidParameter("code has no nonzero codeword"))
    }
}

/// Base-`radix` digits of `index`, least significant first, as element codes.
fn digits(mut index: u64, radix: u64, len: usize) -> Vec<Elem> {
    (0..len)
        .map(|_| {
            let d = index % radix;
            index /= radix;
            Elem::from_code(d as u32)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const W: Elem = Elem::from_code(2);
    const W1: Elem = Elem::from_code(3);

    fn gf4() -> FieldCtx {
        FieldCtx::new(2, 1, 2, None).unwrap()
    }

    #[test]
    fn construction_errors() {
        let f = gf4();
        assert_eq!(
            GabidulinCode::new(&f, vec![W, W], 1).unwrap_err(),
            Error::DependentElements
        );
        assert!(GabidulinCode::new(&f, vec![Elem::ONE, W], 0).is_err());
        assert!(GabidulinCode::new(&f, vec![Elem::ONE, W], 3).is_err());
        assert!(GabidulinCode::new(&f, vec![Elem::ONE, W, W1], 1).is_err());
    }

    #[test]
    fn encode_examples() {
        let f = gf4();
        let code = GabidulinCode::new(&f, vec![Elem::ONE, W], 1).unwrap();
        assert_eq!(code.encode(&LinPoly::zero()).unwrap(), Word::new(vec![Elem::ZERO; 2]));
        assert_eq!(code.encode(&LinPoly::x()).unwrap(), Word::new(vec![Elem::ONE, W]));
        assert_eq!(code.encode(&LinPoly::monomial(W, 0)).unwrap(), Word::new(vec![W, W1]));
        assert!(matches!(
            code.encode(&LinPoly::monomial(Elem::ONE, 1)),
            Err(Error::DegreeOutOfRange(_))
        ));
    }

    #[test]
    fn unit_messages_reproduce_generator_rows() {
        let f = FieldCtx::new(2, 1, 4, None).unwrap();
        let g: Vec<Elem> = [1, 2, 4, 8].iter().map(|&c| Elem::from_code(c)).collect();
        let code = GabidulinCode::new(&f, g, 2).unwrap();
        for (l, row) in code.generator_matrix().iter().enumerate() {
            assert_eq!(
                code.encode(&LinPoly::monomial(Elem::ONE, l)).unwrap().entries(),
                &row[..]
            );
        }
    }

    #[test]
    fn sigma_inverse_examples() {
        let f = gf4();
        let code = GabidulinCode::new(&f, vec![Elem::ONE, W], 1).unwrap();
        assert_eq!(
            code.sigma_inverse(&Word::new(vec![Elem::ZERO; 2])).unwrap(),
            LinPoly::zero()
        );
        let cw = code.encode(&LinPoly::x()).unwrap();
        assert_eq!(code.sigma_inverse(&cw).unwrap(), LinPoly::x());
        assert_eq!(
            code.sigma_inverse(&Word::new(vec![Elem::ONE, W1])).unwrap(),
            LinPoly::monomial(Elem::ONE, 1)
        );
    }

    #[test]
    fn weights() {
        let f = gf4();
        let w = Word::new(vec![Elem::ONE, W]);
        assert_eq!(w.weight(&f, Metric::Rank), 2);
        let ones = Word::new(vec![Elem::ONE, Elem::ONE]);
        assert_eq!(ones.weight(&f, Metric::Rank), 1);
        assert_eq!(ones.weight(&f, Metric::Hamming), 2);
        let zero = Word::new(vec![Elem::ZERO; 2]);
        assert_eq!(zero.weight(&f, Metric::Rank), 0);
        assert_eq!(zero.weight(&f, Metric::Hamming), 0);
    }

    #[test]
    fn exhaustive_distances() {
        let f = gf4();
        let code = GabidulinCode::new(&f, vec![Elem::ONE, W], 1).unwrap();
        let cw = code.encode(&LinPoly::monomial(W, 0)).unwrap();
        assert_eq!(
            code.dist_to_code_exhaustive(&cw, Metric::Rank, DEFAULT_ORACLE_CAP)
                .unwrap(),
            (0, LinPoly::monomial(W, 0))
        );
        let ones = Word::new(vec![Elem::ONE, Elem::ONE]);
        assert_eq!(
            code.dist_to_code_exhaustive(&ones, Metric::Rank, DEFAULT_ORACLE_CAP)
                .unwrap()
                .0,
            1
        );
        let (d, witness) = code
            .dist_to_code_exhaustive(&ones, Metric::Hamming, DEFAULT_ORACLE_CAP)
            .unwrap();
        assert_eq!(d, 1);
        // first minimiser in enumeration order is the message x, codeword (1, ω)
        assert_eq!(witness, LinPoly::x());
        assert!(matches!(
            code.dist_to_code_exhaustive(&ones, Metric::Rank, 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn minimum_distance_gf4() {
        let f = gf4();
        let code = GabidulinCode::new(&f, vec![Elem::ONE, W], 1).unwrap();
        assert_eq!(code.min_distance(Metric::Rank, DEFAULT_ORACLE_CAP).unwrap(), 2);
        assert_eq!(code.min_distance(Metric::Hamming, DEFAULT_ORACLE_CAP).unwrap(), 2);
    }

    #[test]
    fn class_indexing_round_trips() {
        let f = FieldCtx::new(2, 1, 3, None).unwrap();
        let g: Vec<Elem> = [1, 2, 4].iter().map(|&c| Elem::from_code(c)).collect();
        let code = GabidulinCode::new(&f, g, 1).unwrap();
        assert_eq!(code.class_count(), 64);
        for idx in 0..64 {
            let poly = code.class_poly(idx);
            assert!(poly.coeff(0).is_zero());
            assert_eq!(code.class_index(&poly), idx);
        }
    }
}
