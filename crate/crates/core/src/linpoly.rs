//! q-linearized polynomials Σ a_i x^{q^i} over F_{q^m} and the skew ring they form under
//! composition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::fp;
use crate::matrix;

/// q-degree, with an explicit marker for the zero polynomial.
///
/// `NegInf` orders below every finite degree.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QDegree {
    NegInf,
    Finite(usize),
}

impl QDegree {
    pub fn finite(self) -> Option<usize> {
        match self {
            QDegree::NegInf => None,
            QDegree::Finite(d) => Some(d),
        }
    }

    /// True when the degree is strictly below `k` (always true for the zero polynomial).
    pub fn is_below(self, k: usize) -> bool {
        match self {
            QDegree::NegInf => true,
            QDegree::Finite(d) => d < k,
        }
    }
}

impl fmt::Display for QDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QDegree::NegInf => f.write_str("-inf"),
            QDegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients (a_0, …, a_d) of Σ a_i x^{q^i}, normalised so that a_d ≠ 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinPoly {
    coeffs: Vec<Elem>,
}

impl LinPoly {
    pub fn zero() -> Self {
        LinPoly { coeffs: Vec::new() }
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        LinPoly {
            coeffs: vec![Elem::ONE],
        }
    }

    /// c · x^{q^i}
    pub fn monomial(c: Elem, i: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; i + 1];
        coeffs[i] = c;
        Self::new(coeffs)
    }

    /// Normalises trailing zeros away; performs no range checks.
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LinPoly { coeffs }
    }

    /// Like [`LinPoly::new`] but rejects codes outside the field.
    pub fn checked(ctx: &FieldCtx, coeffs: Vec<Elem>) -> Result<Self> {
        for &c in &coeffs {
            ctx.check(c)?;
        }
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of x^{q^i}; zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn deg_q(&self) -> QDegree {
        match self.coeffs.len() {
            0 => QDegree::NegInf,
            n => QDegree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    /// `(f / lead(f), lead(f))`, or `None` for the zero polynomial.
    pub fn to_monic(&self, ctx: &FieldCtx) -> Option<(LinPoly, Elem)> {
        let lead = self.leading()?;
        let inv = ctx.inv(lead).ok()?;
        Some((self.scale(ctx, inv), lead))
    }

    pub fn eval(&self, ctx: &FieldCtx, u: Elem) -> Elem {
        self.coeffs.iter().enumerate().fold(Elem::ZERO, |acc, (i, &a)| {
            if a.is_zero() {
                acc
            } else {
                ctx.add(acc, ctx.mul(a, ctx.frobenius_q(u, i)))
            }
        })
    }

    pub fn add(&self, ctx: &FieldCtx, other: &LinPoly) -> LinPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| ctx.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &LinPoly) -> LinPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| ctx.sub(self.coeff(i), other.coeff(i))).collect())
    }

    /// c · f (scalar on the left).
    pub fn scale(&self, ctx: &FieldCtx, c: Elem) -> LinPoly {
        Self::new(self.coeffs.iter().map(|&a| ctx.mul(c, a)).collect())
    }

    /// Keeps only the terms of q-degree `< k`.
    pub fn truncated(&self, k: usize) -> LinPoly {
        Self::new(self.coeffs.iter().copied().take(k).collect())
    }

    /// f ∘ g = Σ_i Σ_j a_i b_j^{q^i} x^{q^{i+j}}.
    pub fn compose(&self, ctx: &FieldCtx, g: &LinPoly) -> LinPoly {
        if self.is_zero() || g.is_zero() {
            return LinPoly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                let term = ctx.mul(a, ctx.frobenius_q(b, i));
                out[i + j] = ctx.add(out[i + j], term);
            }
        }
        Self::new(out)
    }

    /// Right division: `f = h ∘ g + r` with `deg_q r < deg_q g`.
    pub fn right_divide(&self, ctx: &FieldCtx, g: &LinPoly) -> Result<(LinPoly, LinPoly)> {
        let dg = g.deg_q().finite().ok_or(Error::DivisionByZero)?;
        let lead_g = g.coeffs[dg];
        let mut rem = self.clone();
        let mut quot = vec![Elem::ZERO; self.coeffs.len().saturating_sub(dg)];
        while let QDegree::Finite(dr) = rem.deg_q() {
            if dr < dg {
                break;
            }
            let t = dr - dg;
            // leading term of (c x^{q^t}) ∘ g is c · lead_g^{q^t}
            let c = ctx.div(rem.coeffs[dr], ctx.frobenius_q(lead_g, t))?;
            quot[t] = ctx.add(quot[t], c);
            let step = LinPoly::monomial(c, t).compose(ctx, g);
            rem = rem.sub(ctx, &step);
        }
        let quot = LinPoly::new(quot);
        debug_assert_eq!(quot.compose(ctx, g).add(ctx, &rem), *self);
        Ok((quot, rem))
    }

    /// Comma-separated coefficient codes, degree 0 first.
    pub fn display_codes(&self) -> CodeList<'_> {
        CodeList(&self.coeffs)
    }
}

/// Formats a slice of elements as comma-separated canonical codes.
pub struct CodeList<'a>(pub &'a [Elem]);

impl fmt::Display for CodeList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// An F_q-linearly independent list of elements of F_{q^m}.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subspace {
    gens: Vec<Elem>,
}

impl Subspace {
    pub fn new(ctx: &FieldCtx, gens: Vec<Elem>) -> Result<Self> {
        for &g in &gens {
            ctx.check(g)?;
        }
        if ctx.rank_of(&gens) != gens.len() {
            return Err(Error::DependentElements);
        }
        Ok(Subspace { gens })
    }

    /// Caller guarantees independence.
    pub(crate) fn from_independent(gens: Vec<Elem>) -> Self {
        Subspace { gens }
    }

    pub fn empty() -> Self {
        Subspace { gens: Vec::new() }
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    /// All q^dim elements of the span, ordered by their F_q-coordinate tuples.
    pub fn elements(&self, ctx: &FieldCtx) -> Vec<Elem> {
        let scalars = ctx.enumerate_subfield();
        let mut out = vec![Elem::ZERO];
        for &g in &self.gens {
            let mut next = Vec::with_capacity(out.len() * scalars.len());
            for &lam in &scalars {
                let shift = ctx.mul(lam, g);
                next.extend(out.iter().map(|&e| ctx.add(e, shift)));
            }
            out = next;
        }
        out
    }

    pub fn contains(&self, ctx: &FieldCtx, u: Elem) -> bool {
        let mut span = ctx.span_builder();
        for &g in &self.gens {
            span.insert(g);
        }
        !span.insert(u)
    }

    /// Same span (as sets).
    pub fn same_span(&self, ctx: &FieldCtx, other: &Subspace) -> bool {
        self.dim() == other.dim() && other.gens.iter().all(|&g| self.contains(ctx, g))
    }
}

/// Monic annihilator ∏_{u∈V}(x − u), built by the recurrence
/// `A_{V+⟨w⟩} = (x^q − A_V(w)^{q−1} x) ∘ A_V`.
pub fn annihilator(ctx: &FieldCtx, v: &Subspace) -> LinPoly {
    annihilator_of(ctx, &v.gens).expect("subspace generators are independent")
}

/// Annihilator of the span of `gens`; errors when `gens` are dependent.
pub fn annihilator_of(ctx: &FieldCtx, gens: &[Elem]) -> Result<LinPoly> {
    let mut acc = LinPoly::x();
    for &w in gens {
        let image = acc.eval(ctx, w);
        if image.is_zero() {
            return Err(Error::DependentElements);
        }
        let c = ctx.pow(image, ctx.q() - 1);
        let factor = LinPoly::new(vec![ctx.neg(c), Elem::ONE]);
        acc = factor.compose(ctx, &acc);
    }
    Ok(acc)
}

/// Rows `β_j^{q^e}` for each exponent `e` in `rows`.
pub fn moore_matrix(ctx: &FieldCtx, elems: &[Elem], rows: &[usize]) -> matrix::Matrix {
    rows.iter()
        .map(|&e| elems.iter().map(|&b| ctx.frobenius_q(b, e)).collect())
        .collect()
}

/// det M_n(elems) with rows 0..n, or with rows 0..=n minus `deleted_row`.
pub fn moore_det(ctx: &FieldCtx, elems: &[Elem], deleted_row: Option<usize>) -> Result<Elem> {
    let n = elems.len();
    let rows: Vec<usize> = match deleted_row {
        None => (0..n).collect(),
        Some(d) if d <= n => (0..=n).filter(|&e| e != d).collect(),
        Some(_) => return Err(Error::NotSquare { rows: n + 1, cols: n }),
    };
    matrix::determinant(ctx, &moore_matrix(ctx, elems, &rows))
}

/// The unique Λ with deg_q Λ < n and Λ(g_i) = r_i, from the Moore linear system.
pub fn q_lagrange(ctx: &FieldCtx, g: &[Elem], r: &[Elem]) -> Result<LinPoly> {
    if g.len() != r.len() {
        return Err(Error::LengthMismatch {
            expected: g.len(),
            found: r.len(),
        });
    }
    let n = g.len();
    let system: matrix::Matrix = g
        .iter()
        .map(|&gi| (0..n).map(|j| ctx.frobenius_q(gi, j)).collect())
        .collect();
    let lambda = matrix::solve(ctx, &system, r)?;
    Ok(LinPoly::new(lambda))
}

/// Determinant form of the q-Lagrange polynomial:
/// `Σ_i (−1)^{n−i} r_i det D_i(g, x) / det M_n(g)`, with each `det D_i` expanded along
/// its x column into Moore minors.
pub fn q_lagrange_by_minors(ctx: &FieldCtx, g: &[Elem], r: &[Elem]) -> Result<LinPoly> {
    if g.len() != r.len() {
        return Err(Error::LengthMismatch {
            expected: g.len(),
            found: r.len(),
        });
    }
    let n = g.len();
    let denom = moore_det(ctx, g, None)?;
    if denom.is_zero() {
        return Err(Error::DependentElements);
    }
    let mut out = vec![Elem::ZERO; n];
    for (i, &ri) in r.iter().enumerate() {
        if ri.is_zero() {
            continue;
        }
        let others: Vec<Elem> = g.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        // 1-based column index i+1: sign (−1)^{n−(i+1)}
        let outer_neg = (n - (i + 1)) % 2 == 1;
        for (row, slot) in out.iter_mut().enumerate() {
            // x sits in the last column (index n−1); cofactor sign (−1)^{row + n − 1}
            let minor = moore_det(ctx, &others, Some(row))?;
            let neg = outer_neg ^ ((row + n - 1) % 2 == 1);
            let mut term = ctx.mul(ri, minor);
            if neg {
                term = ctx.neg(term);
            }
            *slot = ctx.add(*slot, term);
        }
    }
    let inv = ctx.inv(denom)?;
    Ok(LinPoly::new(out.into_iter().map(|c| ctx.mul(c, inv)).collect()))
}

/// F_q-basis of the roots of `f` inside F_{q^m}.
pub fn root_space(ctx: &FieldCtx, f: &LinPoly) -> Result<Subspace> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = ctx.p();
    let images: Vec<Vec<u32>> = (0..ctx.degree())
        .map(|i| ctx.coeffs(f.eval(ctx, Elem::from_code(p.pow(i as u32)))))
        .collect();
    let mut span = ctx.span_builder();
    let mut gens = Vec::new();
    for v in fp::kernel(&images, p) {
        let root = Elem::from_code(v.iter().rev().fold(0u32, |acc, &d| acc * p + d));
        if span.insert(root) {
            gens.push(root);
        }
    }
    Ok(Subspace::from_independent(gens))
}

/// h_i = det R_{t−i}(B) / det M_t(B), where R_e is M_{t+1}(B) without the row of
/// exponent e. The annihilator of span(B) is x^{q^t} − h_1 x^{q^{t−1}} + h_2 x^{q^{t−2}} − …
pub fn minor_coeff(ctx: &FieldCtx, basis: &[Elem], i: usize) -> Result<Elem> {
    let t = basis.len();
    if i == 0 || i > t {
        return Err(Error::IndexOutOfRange { index: i, len: t });
    }
    let denom = moore_det(ctx, basis, None)?;
    if denom.is_zero() {
        return Err(Error::DependentElements);
    }
    ctx.div(moore_det(ctx, basis, Some(t - i))?, denom)
}

/// The annihilator assembled from Moore-minor ratios with alternating signs.
pub fn annihilator_from_minors(ctx: &FieldCtx, basis: &[Elem]) -> Result<LinPoly> {
    let t = basis.len();
    let mut coeffs = vec![Elem::ZERO; t + 1];
    coeffs[t] = Elem::ONE;
    for i in 1..=t {
        let h = minor_coeff(ctx, basis, i)?;
        coeffs[t - i] = if i % 2 == 1 { ctx.neg(h) } else { h };
    }
    Ok(LinPoly::new(coeffs))
}
