//! Prime-field helpers: primality, polynomials over F_p and F_p-linear algebra.
//!
//! Every F_q-linear question in the crate is lowered to these routines.

use alloc::vec;
use alloc::vec::Vec;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[inline]
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

#[inline]
pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut base = a as u64 % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

fn trim(poly: &mut Vec<u32>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

/// Remainder of `a` modulo the monic-or-not nonzero polynomial `b` over F_p.
pub fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p) as u64;
    let p64 = p as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] as u64 * lead_inv % p64;
        if factor != 0 {
            let shift = dr - db;
            for (i, &bi) in b.iter().enumerate() {
                let sub = factor * bi as u64 % p64;
                r[shift + i] = ((r[shift + i] as u64 + p64 - sub) % p64) as u32;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        let mut divisor = vec![0u32; d + 1];
        divisor[d] = 1;
        for code in 0..count {
            let mut c = code;
            for slot in divisor.iter_mut().take(d) {
                *slot = (c % p as u64) as u32;
                c /= p as u64;
            }
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic degree-`deg` polynomial whose lower coefficients spell `code` in base p.
pub fn monic_from_code(code: u64, deg: usize, p: u32) -> Vec<u32> {
    let mut out = vec![0u32; deg + 1];
    let mut c = code;
    for slot in out.iter_mut().take(deg) {
        *slot = (c % p as u64) as u32;
        c /= p as u64;
    }
    out[deg] = 1;
    out
}

/// Incrementally maintained row-echelon basis of a subspace of F_p^len.
#[derive(Clone, Debug)]
pub struct FpEchelon {
    p: u32,
    len: usize,
    repr: Repr,
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
enum Repr {
    /// p = 2: slot `b` holds the basis vector whose highest set bit is `b`.
    Binary([u64; 64]),
    /// rows normalised so that the pivot entry equals 1, with their pivot column.
    General(Vec<(usize, Vec<u32>)>),
}

impl FpEchelon {
    pub fn new(p: u32, len: usize) -> Self {
        let repr = if p == 2 && len <= 64 {
            Repr::Binary([0; 64])
        } else {
            Repr::General(Vec::new())
        };
        FpEchelon { p, len, repr }
    }

    pub fn rank(&self) -> usize {
        match &self.repr {
            Repr::Binary(slots) => slots.iter().filter(|&&v| v != 0).count(),
            Repr::General(rows) => rows.len(),
        }
    }

    /// Inserts a vector given as packed bits (only valid when p = 2).
    #[inline]
    pub fn insert_bits(&mut self, mut v: u64) -> bool {
        match &mut self.repr {
            Repr::Binary(slots) => {
                while v != 0 {
                    let top = 63 - v.leading_zeros() as usize;
                    if slots[top] == 0 {
                        slots[top] = v;
                        return true;
                    }
                    v ^= slots[top];
                }
                false
            }
            Repr::General(_) => {
                let digits: Vec<u32> = (0..self.len).map(|i| ((v >> i) & 1) as u32).collect();
                self.insert(&digits)
            }
        }
    }

    /// Reduces `v` against the basis; adds it and returns true when it was independent.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        if let Repr::Binary(_) = self.repr {
            let bits = v
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &d)| acc | (((d & 1) as u64) << i));
            return self.insert_bits(bits);
        }
        let p = self.p;
        let p64 = p as u64;
        let Repr::General(rows) = &mut self.repr else {
            unreachable!()
        };
        let mut v = v.to_vec();
        for (pivot, row) in rows.iter() {
            let f = v[*pivot] as u64;
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((*x as u64 + p64 - f * r as u64 % p64) % p64) as u32;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(pivot) => {
                let inv = inv_mod(v[pivot], p) as u64;
                for x in v.iter_mut() {
                    *x = (*x as u64 * inv % p64) as u32;
                }
                // keep existing rows reduced at the new pivot
                for (_, row) in rows.iter_mut() {
                    let f = row[pivot] as u64;
                    if f != 0 {
                        for (x, &r) in row.iter_mut().zip(&v) {
                            *x = ((*x as u64 + p64 - f * r as u64 % p64) % p64) as u32;
                        }
                    }
                }
                rows.push((pivot, v));
                true
            }
        }
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(rows: &mut [Vec<u32>], p: u32) -> Vec<usize> {
    let p64 = p as u64;
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], p) as u64;
        for x in rows[r].iter_mut() {
            *x = (*x as u64 * inv % p64) as u32;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c] as u64;
            for (x, &pr) in row.iter_mut().zip(&pivot_row) {
                *x = ((*x as u64 + p64 - f * pr as u64 % p64) % p64) as u32;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `Σ x_j · columns[j] = target` when the columns are independent.
///
/// Returns `None` when the target lies outside the column span or the columns are dependent.
pub fn solve_columns(columns: &[Vec<u32>], target: &[u32], p: u32) -> Option<Vec<u32>> {
    let n = columns.len();
    let len = target.len();
    let mut rows: Vec<Vec<u32>> = (0..len)
        .map(|i| {
            let mut row: Vec<u32> = columns.iter().map(|c| c[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let pivots = rref(&mut rows, p);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    Some((0..n).map(|j| rows[j][n]).collect())
}

/// Basis of `{x : Σ x_j · images[j] = 0}` over F_p.
pub fn kernel(images: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let n = images.len();
    let len = images.first().map_or(0, |v| v.len());
    let mut rows: Vec<Vec<u32>> = (0..len).map(|i| images.iter().map(|c| c[i]).collect()).collect();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![0u32; n];
            x[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - rows[r][fc]) % p;
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(prime_factors(26), vec![2, 13]);
    }

    #[test]
    fn irreducibility_over_f2() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        // (x^2+x+1)^2
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
    }

    #[test]
    fn kernel_and_solve() {
        // columns (1,0),(0,1),(1,1) over F_3
        let cols = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let ker = kernel(&cols, 3);
        assert_eq!(ker, vec![vec![2, 2, 1]]);
        let sol = solve_columns(&cols[..2], &[2, 1], 3).unwrap();
        assert_eq!(sol, vec![2, 1]);
        assert!(solve_columns(&[vec![1, 1], vec![2, 2]], &[1, 0], 3).is_none());
    }

    #[test]
    fn echelon_ranks() {
        let mut e = FpEchelon::new(3, 3);
        assert!(e.insert(&[1, 2, 0]));
        assert!(!e.insert(&[2, 1, 0]));
        assert!(e.insert(&[0, 0, 2]));
        assert_eq!(e.rank(), 2);
        let mut b = FpEchelon::new(2, 4);
        assert!(b.insert_bits(0b0011));
        assert!(b.insert_bits(0b0101));
        assert!(!b.insert_bits(0b0110));
        assert_eq!(b.rank(), 2);
    }
}
