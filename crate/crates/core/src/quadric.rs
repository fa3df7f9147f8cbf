//! Census of the binary quadric h(x_1, x_2) = x_1² + x_1x_2 + x_2² over F_{2^m}.
//!
//! S(h = b) collects pairs (c_1, c_2) with h(c_1, c_2) = b, c_1 ≠ c_2 and both nonzero;
//! N(h = b) is its size.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricCensus {
    pub b: Elem,
    pub count: u64,
    /// present only when requested
    pub solutions: Option<Vec<(Elem, Elem)>>,
}

pub fn require_binary(ctx: &FieldCtx) -> Result<()> {
    if ctx.p() != 2 || ctx.s() != 1 {
        return Err(Error::WrongCharacteristic);
    }
    Ok(())
}

/// x_1² + x_1x_2 + a·x_2².
pub fn quadratic_form(ctx: &FieldCtx, a: Elem, x1: Elem, x2: Elem) -> Elem {
    let t = ctx.add(ctx.mul(x1, x1), ctx.mul(x1, x2));
    ctx.add(t, ctx.mul(a, ctx.mul(x2, x2)))
}

pub fn h(ctx: &FieldCtx, x1: Elem, x2: Elem) -> Elem {
    quadratic_form(ctx, Elem::ONE, x1, x2)
}

/// v(b) = −1 for b ≠ 0 and v(0) = order − 1.
pub fn v_function(ctx: &FieldCtx, b: Elem) -> i64 {
    if b.is_zero() {
        ctx.order() as i64 - 1
    } else {
        -1
    }
}

/// All (x_1, x_2), unrestricted, with x_1² + x_1x_2 + a·x_2² = b.
pub fn form_solution_count(ctx: &FieldCtx, a: Elem, b: Elem) -> Result<u64> {
    require_binary(ctx)?;
    ctx.check(a)?;
    ctx.check(b)?;
    let mut count = 0;
    for x1 in ctx.elements() {
        for x2 in ctx.elements() {
            if quadratic_form(ctx, a, x1, x2) == b {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Exhaustive N(h = b), optionally keeping S(h = b) in (c_1, c_2) lexicographic order.
pub fn quadric_census(ctx: &FieldCtx, b: Elem, materialize: bool) -> Result<QuadricCensus> {
    require_binary(ctx)?;
    ctx.check(b)?;
    let mut count = 0;
    let mut solutions = materialize.then(Vec::new);
    for c1 in ctx.elements().skip(1) {
        for c2 in ctx.elements().skip(1) {
            if c1 != c2 && h(ctx, c1, c2) == b {
                count += 1;
                if let Some(s) = solutions.as_mut() {
                    s.push((c1, c2));
                }
            }
        }
    }
    Ok(QuadricCensus { b, count, solutions })
}

/// The closed forms as printed: odd m gives 0 / 2^m − 1, even m gives 2^{m+1} − 2 / 2^m − 3
/// (b = 0 / b ≠ 0).
pub fn closed_form_count(m: u32, b_is_zero: bool) -> u64 {
    let q = 1u64 << m;
    match (m % 2 == 1, b_is_zero) {
        (true, true) => 0,
        (true, false) => q - 1,
        (false, true) => 2 * q - 2,
        (false, false) => q - 3,
    }
}

/// The counts the enumeration produces. For b ≠ 0 three solutions of h = b fall outside S:
/// (0, √b), (√b, 0) and (√b, √b).
pub fn exact_count(m: u32, b_is_zero: bool) -> u64 {
    let q = 1u64 << m;
    match (m % 2 == 1, b_is_zero) {
        (true, true) => 0,
        (true, false) => q + 1 - 3,
        (false, true) => 2 * q - 2,
        (false, false) => q - 1 - 3,
    }
}

/// Whether x^p − x − a has a root in the field, by search. It has none exactly when it is
/// irreducible over the field, which happens iff the absolute trace of a is nonzero.
pub fn artin_schreier_has_root(ctx: &FieldCtx, a: Elem) -> Result<bool> {
    ctx.check(a)?;
    let p = ctx.p() as u64;
    Ok(ctx.elements().any(|x| ctx.sub(ctx.sub(ctx.pow(x, p), x), a).is_zero()))
}
