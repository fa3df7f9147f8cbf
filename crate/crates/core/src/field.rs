//! Arithmetic in the tower F_p ⊂ F_q = F_{p^s} ⊂ F_{q^m}.
//!
//! The big field is realised once as F_p[x]/(modulus) with `deg = s·m`. Elements are
//! plain integer codes `Σ c_i p^i` over the residue coefficients, so they are `Copy`
//! and carry no reference to their context; every operation goes through a
//! [`FieldCtx`]. F_q is never a separate structure: it is the fixed field of the
//! q-power Frobenius.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::fp::{self, FpEchelon};

/// Default upper bound on `p^{s·m}`.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 24;
/// Hard limit; codes must fit a `u32` with room to spare.
const MAX_ORDER: u64 = 1 << 31;
/// Log/antilog tables are only built up to this order.
const TABLE_LIMIT: u64 = 1 << 20;
const MAX_DEG: usize = 32;

/// An element of F_{q^m}, stored as its canonical code `Σ coeffs[i]·p^i`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw code without range checking; see [`FieldCtx::elem`] for the checked form.
    pub const fn from_code(code: u32) -> Elem {
        Elem(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Immutable description of F_{q^m} together with its precomputed tables.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    s: u32,
    m: u32,
    deg: usize,
    q: u64,
    order: u64,
    modulus: Vec<u32>,
    /// modulus packed as bits, p = 2 only
    modulus_bits: u64,
    tables: Option<Tables>,
    primitive: Elem,
    /// q^i mod (order - 1) for i < m
    q_powers: Vec<u64>,
    /// F_p-basis 1, ζ, …, ζ^{s-1} of F_q
    subfield_basis: Vec<Elem>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds F_{(p^s)^m}. When `modulus` is `None` the lexicographically smallest monic
    /// irreducible polynomial of degree `s·m` is used (lower coefficients read as a base-p
    /// integer, degree 0 least significant).
    pub fn new(p: u32, s: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::with_cap(p, s, m, modulus, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u32, s: u32, m: u32, modulus: Option<&[u32]>, cap: u64) -> Result<Self> {
        if !fp::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if s == 0 || m == 0 {
            return Err(Error::InvalidParameter("s and m must be positive"));
        }
        let deg = (s as usize) * (m as usize);
        let order = (p as u128).checked_pow(deg as u32).unwrap_or(u128::MAX);
        if order > cap as u128 || order > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge {
                order,
                cap: cap.min(MAX_ORDER),
            });
        }
        let order = order as u64;
        let modulus = match modulus {
            Some(given) => {
                let mut given = given.to_vec();
                while given.last() == Some(&0) {
                    given.pop();
                }
                if given.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus("coefficient not reduced mod p"));
                }
                if given.len() != deg + 1 {
                    return Err(Error::BadModulus("degree must equal s·m"));
                }
                if given[deg] != 1 {
                    return Err(Error::BadModulus("not monic"));
                }
                if !fp::is_irreducible(&given, p) {
                    return Err(Error::ReducibleModulus);
                }
                given
            }
            None => default_modulus(p, deg),
        };
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i))
        } else {
            0
        };
        let q = (p as u64).pow(s);
        let mut ctx = FieldCtx {
            p,
            s,
            m,
            deg,
            q,
            order,
            modulus,
            modulus_bits,
            tables: None,
            primitive: Elem::ONE,
            q_powers: Vec::new(),
            subfield_basis: Vec::new(),
        };
        ctx.primitive = ctx.find_primitive();
        if order <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        let group = order - 1;
        ctx.q_powers = (0..m)
            .map(|i| {
                if group == 1 {
                    0
                } else {
                    mod_pow_u64(q % group, i as u64, group)
                }
            })
            .collect();
        let zeta = ctx.pow(ctx.primitive, group / (q - 1));
        let mut basis = Vec::with_capacity(s as usize);
        let mut acc = Elem::ONE;
        for _ in 0..s {
            basis.push(acc);
            acc = ctx.mul(acc, zeta);
        }
        ctx.subfield_basis = basis;
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// q = p^s.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// p^{s·m}, the number of elements.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Extension degree over F_p.
    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    /// The residue class of the indeterminate.
    pub fn generator(&self) -> Elem {
        if self.deg == 1 {
            // x ≡ -modulus[0] when the modulus is linear
            Elem((self.p - self.modulus[0]) % self.p)
        } else {
            Elem(self.p)
        }
    }

    /// Checked conversion from a canonical code.
    pub fn elem(&self, code: u64) -> Result<Elem> {
        if code < self.order {
            Ok(Elem(code as u32))
        } else {
            Err(Error::ForeignElement(code))
        }
    }

    pub fn check(&self, e: Elem) -> Result<Elem> {
        self.elem(e.0 as u64)
    }

    /// Embeds an F_p residue.
    pub fn from_prime(&self, c: u32) -> Elem {
        Elem(c % self.p)
    }

    /// All elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u32).map(Elem)
    }

    pub fn coeffs(&self, e: Elem) -> Vec<u32> {
        let mut out = vec![0u32; self.deg];
        let mut c = e.0;
        for slot in out.iter_mut() {
            *slot = c % self.p;
            c /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.deg || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameter("coefficient vector has wrong shape"));
        }
        Ok(Elem(coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.deg {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        self.scale_prime(a, self.p - 1)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplies by an F_p scalar `c`.
    pub fn scale_prime(&self, a: Elem, c: u32) -> Elem {
        let p = self.p;
        let c = c % p;
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.deg {
            out += ((x % p) * c % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let group = (self.order - 1) as usize;
                let idx = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[if idx >= group { idx - group } else { idx }])
            }
            None => self.mul_schoolbook(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.tables {
            Some(t) => {
                let group = (self.order - 1) as u32;
                let l = t.log[a.0 as usize];
                Ok(Elem(t.exp[((group - l) % group) as usize]))
            }
            None => Ok(self.pow(a, self.order - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        if let Some(t) = &self.tables {
            let group = self.order - 1;
            let idx = (t.log[a.0 as usize] as u128 * e as u128 % group as u128) as usize;
            return Elem(t.exp[idx]);
        }
        self.pow_schoolbook(a, e)
    }

    /// u^{q^i}. Since u^{q^m} = u only `i mod m` applications are needed.
    pub fn frobenius_q(&self, u: Elem, i: usize) -> Elem {
        if u.is_zero() {
            return u;
        }
        let i = i % self.m as usize;
        if i == 0 {
            return u;
        }
        if let Some(t) = &self.tables {
            let group = self.order - 1;
            let idx = (t.log[u.0 as usize] as u128 * self.q_powers[i] as u128 % group as u128) as usize;
            return Elem(t.exp[idx]);
        }
        (0..i).fold(u, |acc, _| self.pow_schoolbook(acc, self.q))
    }

    /// Tr_{F_{q^m}/F_q}(u) = Σ_{i<m} u^{q^i}.
    pub fn trace_rel(&self, u: Elem) -> Elem {
        (0..self.m as usize).fold(Elem::ZERO, |acc, i| self.add(acc, self.frobenius_q(u, i)))
    }

    /// Tr_{F_{q^m}/F_p}(u) = Σ_{i<s·m} u^{p^i}.
    pub fn trace_abs(&self, u: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut conj = u;
        for _ in 0..self.deg {
            acc = self.add(acc, conj);
            conj = self.pow(conj, self.p as u64);
        }
        acc
    }

    pub fn in_subfield(&self, u: Elem) -> bool {
        self.frobenius_q(u, 1) == u
    }

    /// The q elements of F_q in ascending code order.
    pub fn enumerate_subfield(&self) -> Vec<Elem> {
        let group = self.order - 1;
        let step = group / (self.q - 1);
        let zeta = self.pow(self.primitive, step);
        let mut out = Vec::with_capacity(self.q as usize);
        out.push(Elem::ZERO);
        let mut acc = Elem::ONE;
        for _ in 0..self.q - 1 {
            out.push(acc);
            acc = self.mul(acc, zeta);
        }
        out.sort_unstable();
        out
    }

    /// F_p-basis of F_q used to lower F_q-linear problems to F_p.
    pub fn subfield_basis(&self) -> &[Elem] {
        &self.subfield_basis
    }

    /// Fresh accumulator for F_q-span computations.
    pub fn span_builder(&self) -> SpanBuilder<'_> {
        SpanBuilder {
            ctx: self,
            echelon: FpEchelon::new(self.p, self.deg),
        }
    }

    /// dim_{F_q} of the span, plus the indices of the first maximal independent sublist.
    pub fn span_dim(&self, elems: &[Elem]) -> (usize, Vec<usize>) {
        let mut span = self.span_builder();
        let mut picked = Vec::new();
        for (i, &e) in elems.iter().enumerate() {
            if span.insert(e) {
                picked.push(i);
            }
        }
        (span.dim(), picked)
    }

    /// Rank weight without the index bookkeeping.
    pub fn rank_of(&self, elems: &[Elem]) -> usize {
        let mut span = self.span_builder();
        for &e in elems {
            span.insert(e);
        }
        span.dim()
    }

    /// F_q-coordinates of `u` in `basis`.
    pub fn coords(&self, u: Elem, basis: &BasisSpec) -> Vec<Elem> {
        let s = self.s as usize;
        let columns: Vec<Vec<u32>> = basis
            .elems
            .iter()
            .flat_map(|&b| self.subfield_basis.iter().map(move |&w| (b, w)))
            .map(|(b, w)| self.coeffs(self.mul(w, b)))
            .collect();
        let sol = fp::solve_columns(&columns, &self.coeffs(u), self.p).expect("basis spans F_{q^m} by construction");
        sol.chunks(s)
            .map(|digits| {
                digits
                    .iter()
                    .zip(&self.subfield_basis)
                    .fold(Elem::ZERO, |acc, (&d, &w)| self.add(acc, self.scale_prime(w, d)))
            })
            .collect()
    }

    fn find_primitive(&self) -> Elem {
        let group = self.order - 1;
        if group == 1 {
            return Elem::ONE;
        }
        let factors = fp::prime_factors(group);
        (1..self.order as u32)
            .map(Elem)
            .find(|&g| factors.iter().all(|&r| self.pow_schoolbook(g, group / r) != Elem::ONE))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let group = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![0u32; self.order as usize];
        let mut acc = Elem::ONE;
        for i in 0..group {
            exp.push(acc.0);
            log[acc.0 as usize] = i as u32;
            acc = self.mul_schoolbook(acc, self.primitive);
        }
        debug_assert_eq!(acc, Elem::ONE);
        Tables { exp, log }
    }

    fn pow_schoolbook(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, base);
            }
            base = self.mul_schoolbook(base, base);
            e >>= 1;
        }
        acc
    }

    fn mul_schoolbook(&self, a: Elem, b: Elem) -> Elem {
        let d = self.deg;
        if self.p == 2 {
            let (x, y) = (a.0 as u64, b.0 as u64);
            let mut prod = 0u64;
            for i in 0..d {
                if (y >> i) & 1 == 1 {
                    prod ^= x << i;
                }
            }
            for bit in (d..2 * d).rev() {
                if (prod >> bit) & 1 == 1 {
                    prod ^= self.modulus_bits << (bit - d);
                }
            }
            return Elem(prod as u32);
        }
        let p = self.p as u64;
        let mut da = [0u64; MAX_DEG];
        let mut db = [0u64; MAX_DEG];
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        for i in 0..d {
            da[i] = x % p;
            db[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = [0u64; 2 * MAX_DEG];
        for i in 0..d {
            if da[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for top in (d..2 * d).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for j in 0..d {
                let sub = c * self.modulus[j] as u64 % p;
                prod[top - d + j] = (prod[top - d + j] + p - sub) % p;
            }
            prod[top] = 0;
        }
        Elem((0..d).rev().fold(0u64, |acc, i| acc * p + prod[i]) as u32)
    }
}

fn mod_pow_u64(base: u64, mut e: u64, modulus: u64) -> u64 {
    let mut acc = 1u128 % modulus as u128;
    let mut b = base as u128 % modulus as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % modulus as u128;
        }
        b = b * b % modulus as u128;
        e >>= 1;
    }
    acc as u64
}

fn default_modulus(p: u32, deg: usize) -> Vec<u32> {
    let count = (p as u64).pow(deg as u32);
    (0..count)
        .map(|code| fp::monic_from_code(code, deg, p))
        .find(|cand| fp::is_irreducible(cand, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Running F_q-span; each insertion pushes the s F_p-multiples `ω_t·e`.
#[derive(Clone, Debug)]
pub struct SpanBuilder<'f> {
    ctx: &'f FieldCtx,
    echelon: FpEchelon,
}

impl SpanBuilder<'_> {
    /// Returns true when `e` was outside the current span.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        let ctx = self.ctx;
        if ctx.s == 1 {
            if ctx.p == 2 {
                return self.echelon.insert_bits(e.0 as u64);
            }
            return self.echelon.insert(&ctx.coeffs(e));
        }
        let mut grew = false;
        for &w in &ctx.subfield_basis {
            grew |= self.echelon.insert(&ctx.coeffs(ctx.mul(w, e)));
        }
        grew
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank() / self.ctx.s as usize
    }
}

/// An F_q-basis β_1..β_m of F_{q^m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSpec {
    elems: Vec<Elem>,
}

impl BasisSpec {
    pub fn new(ctx: &FieldCtx, elems: Vec<Elem>) -> Result<Self> {
        if elems.len() != ctx.m as usize {
            return Err(Error::LengthMismatch {
                expected: ctx.m as usize,
                found: elems.len(),
            });
        }
        for &e in &elems {
            ctx.check(e)?;
        }
        if ctx.rank_of(&elems) != elems.len() {
            return Err(Error::DependentElements);
        }
        Ok(BasisSpec { elems })
    }

    /// First m monomials x^i (in degree order) that are independent over F_q.
    pub fn standard(ctx: &FieldCtx) -> Self {
        let mut span = ctx.span_builder();
        let mut elems = Vec::with_capacity(ctx.m as usize);
        let mut code = 1u64;
        while elems.len() < ctx.m as usize {
            let e = Elem(code as u32);
            if span.insert(e) {
                elems.push(e);
            }
            code *= ctx.p as u64;
        }
        BasisSpec { elems }
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    /// Σ c_i β_i.
    pub fn reconstruct(&self, ctx: &FieldCtx, coords: &[Elem]) -> Elem {
        coords
            .iter()
            .zip(&self.elems)
            .fold(Elem::ZERO, |acc, (&c, &b)| ctx.add(acc, ctx.mul(c, b)))
    }
}
