//! Dense Gaussian elimination over F_{q^m}.
//!
//! Pivot choice is always the first nonzero entry in row order, so every result is
//! deterministic.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};

pub type Matrix = Vec<Vec<Elem>>;

fn eliminate_below(ctx: &FieldCtx, a: &mut Matrix, row: usize, col: usize) {
    let pivot_inv = ctx.inv(a[row][col]).expect("pivot is nonzero");
    for r in row + 1..a.len() {
        if a[r][col].is_zero() {
            continue;
        }
        let factor = ctx.mul(a[r][col], pivot_inv);
        for c in col..a[r].len() {
            let t = ctx.mul(factor, a[row][c]);
            a[r][c] = ctx.sub(a[r][c], t);
        }
    }
}

pub fn determinant(ctx: &FieldCtx, a: &[Vec<Elem>]) -> Result<Elem> {
    let n = a.len();
    if let Some(bad) = a.iter().find(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    let mut a = a.to_vec();
    let mut det = Elem::ONE;
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(Elem::ZERO);
        };
        if sel != col {
            a.swap(sel, col);
            det = ctx.neg(det);
        }
        det = ctx.mul(det, a[col][col]);
        eliminate_below(ctx, &mut a, col, col);
    }
    Ok(det)
}

pub fn rank(ctx: &FieldCtx, a: &[Vec<Elem>]) -> usize {
    let mut a = a.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(sel, r);
        eliminate_below(ctx, &mut a, r, col);
        r += 1;
    }
    r
}

/// Solves `a · x = b` for square nonsingular `a`.
pub fn solve(ctx: &FieldCtx, a: &[Vec<Elem>], b: &[Elem]) -> Result<Vec<Elem>> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: b.len(),
        });
    }
    if let Some(bad) = a.iter().find(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut row = row.clone();
            row.push(rhs);
            row
        })
        .collect();
    for col in 0..n {
        let sel = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::DependentElements)?;
        aug.swap(sel, col);
        eliminate_below(ctx, &mut aug, col, col);
    }
    let mut x = alloc::vec![Elem::ZERO; n];
    for row in (0..n).rev() {
        let mut acc = aug[row][n];
        for c in row + 1..n {
            acc = ctx.sub(acc, ctx.mul(aug[row][c], x[c]));
        }
        x[row] = ctx.div(acc, aug[row][row])?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_determinants_over_f27() {
        let f = FieldCtx::new(3, 1, 3, None).unwrap();
        let e = |c| Elem::from_code(c);
        // [[1,2],[2,1]] over F_3 → 1 - 4 = -3 = 0
        assert_eq!(
            determinant(&f, &[vec![e(1), e(2)], vec![e(2), e(1)]]).unwrap(),
            Elem::ZERO
        );
        // [[0,1],[1,0]] → -1 = 2
        assert_eq!(determinant(&f, &[vec![e(0), e(1)], vec![e(1), e(0)]]).unwrap(), e(2));
        assert!(matches!(
            determinant(&f, &[vec![e(1)], vec![e(2)]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn solve_and_rank() {
        let f = FieldCtx::new(2, 1, 4, None).unwrap();
        let e = |c| Elem::from_code(c);
        let a = vec![vec![e(3), e(7)], vec![e(1), e(9)]];
        let x = vec![e(5), e(12)];
        let b: Vec<Elem> = a
            .iter()
            .map(|row| f.add(f.mul(row[0], x[0]), f.mul(row[1], x[1])))
            .collect();
        assert_eq!(solve(&f, &a, &b).unwrap(), x);
        assert_eq!(rank(&f, &a), 2);
        assert_eq!(rank(&f, &[vec![e(2), e(4)], vec![e(4), e(8)]]), 1);
    }
}
