//! Distances of σ-words to a Gabidulin code through the root-space characterisation,
//! deep-hole classification, covering-radius scans and the constructive deep-hole
//! families.
//!
//! Every word is `σ_f` for a unique f with `deg_q f < n`. When `k ≤ deg_q f`, the
//! distance satisfies `n − deg_q f ≤ d ≤ n − k`, and `d = n − t` for the largest t such
//! that some `v` with `deg_q v < k` makes `f − v` vanish on a t-dimensional subspace of
//! ⟨g⟩ (rank metric) or on t of the points g_i (Hamming metric).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{GabidulinCode, Metric, Word};
use crate::enumerate::{binomial, gaussian_binomial, subsets, Subspaces};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linpoly::{self, LinPoly};

/// Default cap on candidate subspaces (or subsets) per dimension.
pub const DEFAULT_SUBSPACE_CAP: u64 = 1_000_000;
/// Default cap on the number of translation classes a scan may visit.
pub const DEFAULT_SCAN_CAP: u64 = 1 << 20;

/// What certifies a distance: a subspace of ⟨g⟩ or a set of point indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    Subspace(Vec<Elem>),
    Subset(Vec<usize>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, items): (&str, Vec<u64>) = match self {
            Witness::Subspace(b) => ("span", b.iter().map(|e| e.code() as u64).collect()),
            Witness::Subset(ix) => ("points", ix.iter().map(|&i| i as u64 + 1).collect()),
        };
        write!(f, "{tag}:")?;
        for (i, v) in items.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyResult {
    pub distance: usize,
    /// n − deg_q f when deg_q f ≥ k, else 0
    pub bound: usize,
    pub is_deep_hole: bool,
    pub witness: Option<Witness>,
    pub metric: Metric,
}

fn candidate_count(code: &GabidulinCode<'_>, metric: Metric, t: usize) -> u128 {
    match metric {
        Metric::Rank => gaussian_binomial(code.ctx().q(), code.n(), t),
        Metric::Hamming => binomial(code.n(), t),
    }
}

/// Visits every t-dimensional candidate basis in canonical order until `accept` returns
/// true; returns the accepted candidate as a witness.
fn first_candidate<F>(
    code: &GabidulinCode<'_>,
    metric: Metric,
    t: usize,
    cap: u64,
    mut accept: F,
) -> Result<Option<Witness>>
where
    F: FnMut(&[Elem]) -> bool,
{
    let needed = candidate_count(code, metric, t);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            what: "subspace enumeration",
            needed,
            cap,
        });
    }
    match metric {
        Metric::Rank => {
            for basis in Subspaces::new(code.ctx(), code.points(), t) {
                if accept(&basis) {
                    return Ok(Some(Witness::Subspace(basis)));
                }
            }
        }
        Metric::Hamming => {
            let points = code.points();
            for idx in subsets(code.n(), t) {
                let basis: Vec<Elem> = idx.iter().map(|&i| points[i]).collect();
                if accept(&basis) {
                    return Ok(Some(Witness::Subset(idx)));
                }
            }
        }
    }
    Ok(None)
}

/// Normalises f to monic and checks `k ≤ deg_q f < n`; returns (monic f, leading scalar, degree).
fn monic_in_range(code: &GabidulinCode<'_>, f: &LinPoly) -> Result<(LinPoly, Elem, usize)> {
    let (monic, lead) = f.to_monic(code.ctx()).ok_or(Error::ZeroPolynomial)?;
    let t = monic.deg_q().finite().expect("nonzero");
    if t < code.k() || t >= code.n() {
        return Err(Error::DegreeOutOfRange("need k <= deg_q f < n"));
    }
    Ok((monic, lead, t))
}

/// Searches for H (rank: a deg_q f-dimensional subspace of ⟨g⟩; Hamming: the span of
/// deg_q f points) with `deg_q(f − A_H) < k`, f first made monic. A witness exists
/// exactly when `d(σ_f, C) = n − deg_q f`.
pub fn equality_witness(code: &GabidulinCode<'_>, f: &LinPoly, metric: Metric, cap: u64) -> Result<Option<Witness>> {
    let (monic, _, t) = monic_in_range(code, f)?;
    let ctx = code.ctx();
    first_candidate(code, metric, t, cap, |basis| {
        let ann = linpoly::annihilator_of(ctx, basis).expect("candidates are independent");
        monic.sub(ctx, &ann).deg_q().is_below(code.k())
    })
}

/// Distance of σ_f to the code via the root-space search; f must have `deg_q f < n`.
pub fn distance_of_poly(code: &GabidulinCode<'_>, f: &LinPoly, metric: Metric, cap: u64) -> Result<ClassifyResult> {
    let (n, k) = (code.n(), code.k());
    let ctx = code.ctx();
    let deg = match f.deg_q().finite() {
        Some(d) if d >= n => return Err(Error::DegreeOutOfRange("need deg_q f < n")),
        Some(d) if d >= k => d,
        _ => {
            return Ok(ClassifyResult {
                distance: 0,
                bound: 0,
                is_deep_hole: k == n,
                witness: None,
                metric,
            })
        }
    };
    for t in (k..=deg).rev() {
        // v is pinned down by its values on k independent points, so interpolate on the
        // first k members and test the remaining t − k.
        let found = first_candidate(code, metric, t, cap, |basis| {
            let (head, tail) = basis.split_at(k);
            let values: Vec<Elem> = head.iter().map(|&b| f.eval(ctx, b)).collect();
            let v = linpoly::q_lagrange(ctx, head, &values).expect("candidates are independent");
            tail.iter().all(|&b| v.eval(ctx, b) == f.eval(ctx, b))
        })?;
        if let Some(witness) = found {
            return Ok(ClassifyResult {
                distance: n - t,
                bound: n - deg,
                is_deep_hole: n - t == n - k,
                witness: Some(witness),
                metric,
            });
        }
    }
    // unreachable in practice: t = k always accepts
    Ok(ClassifyResult {
        distance: n - k,
        bound: n - deg,
        is_deep_hole: true,
        witness: None,
        metric,
    })
}

pub fn distance_by_search(code: &GabidulinCode<'_>, w: &Word, metric: Metric, cap: u64) -> Result<ClassifyResult> {
    code.check_word(w)?;
    let f = code.sigma_inverse(w)?;
    distance_of_poly(code, &f, metric, cap)
}

/// Deep-hole status of `w`: its distance equals the covering radius n − k.
pub fn classify(code: &GabidulinCode<'_>, w: &Word, metric: Metric, cap: u64) -> Result<ClassifyResult> {
    distance_by_search(code, w, metric, cap)
}

/// One translation class of the scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub class_id: u64,
    pub poly: LinPoly,
    pub result: ClassifyResult,
}

pub fn classify_class(code: &GabidulinCode<'_>, class_id: u64, metric: Metric, cap: u64) -> Result<ClassRecord> {
    let poly = code.class_poly(class_id);
    let result = distance_of_poly(code, &poly, metric, cap)?;
    Ok(ClassRecord { class_id, poly, result })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub radius: usize,
    /// distance → number of classes at that distance
    pub histogram: BTreeMap<usize, u64>,
}

impl ScanReport {
    pub fn from_distances(distances: impl IntoIterator<Item = usize>) -> Self {
        let mut histogram = BTreeMap::new();
        for d in distances {
            *histogram.entry(d).or_insert(0) += 1;
        }
        let radius = histogram.keys().next_back().copied().unwrap_or(0);
        ScanReport { radius, histogram }
    }

    /// Words, not classes: each class holds q^{mk} words.
    pub fn words_at(&self, code: &GabidulinCode<'_>, distance: usize) -> u128 {
        self.histogram.get(&distance).copied().unwrap_or(0) as u128 * code.message_count()
    }
}

pub fn check_scan_cap(code: &GabidulinCode<'_>, scan_cap: u64) -> Result<u64> {
    let classes = code.class_count();
    if classes > scan_cap as u128 {
        return Err(Error::CapExceeded {
            what: "class scan",
            needed: classes,
            cap: scan_cap,
        });
    }
    Ok(classes as u64)
}

/// Distance of every translation class; the radius is the largest one seen.
pub fn covering_radius_scan(code: &GabidulinCode<'_>, metric: Metric, cap: u64, scan_cap: u64) -> Result<ScanReport> {
    let classes = check_scan_cap(code, scan_cap)?;
    let mut distances = Vec::with_capacity(classes as usize);
    for id in 0..classes {
        distances.push(classify_class(code, id, metric, cap)?.result.distance);
    }
    Ok(ScanReport::from_distances(distances))
}

/// For monic f of q-degree k+1 written `x^{q^{k+1}} − a_1 x^{q^k} + …`, searches for k+1
/// independent β in ⟨g⟩ (Hamming: k+1 of the points) with
/// `a_1 = det R_k(β) / det M_{k+1}(β)`. A witness means σ_f is not a deep hole.
pub fn ratio_lemma_check(code: &GabidulinCode<'_>, f: &LinPoly, metric: Metric, cap: u64) -> Result<Option<Witness>> {
    let k = code.k();
    if f.deg_q() != linpoly::QDegree::Finite(k + 1) {
        return Err(Error::DegreeOutOfRange("ratio lemma needs deg_q f = k + 1"));
    }
    let (monic, _, _) = monic_in_range(code, f)?;
    let ctx = code.ctx();
    let a1 = ctx.neg(monic.coeff(k));
    first_candidate(code, metric, k + 1, cap, |basis| {
        linpoly::minor_coeff(ctx, basis, 1).expect("candidates are independent") == a1
    })
}

/// The constructive families of deep-hole candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^{q^{n−1}} + low` with `deg_q low ≤ k − 1`; needs n = m.
    FrobeniusShift { low: LinPoly },
    /// `x^{q^{n−1}} − a x^{q^{n−2}} + low` with `deg_q low ≤ n − 3`; needs n = m, k = n − 2.
    KEqNMinus2 { a: Elem, low: LinPoly },
    /// `x^{q^2} + c x`; needs m odd, 3 ≤ n ≤ m, k = 1.
    K1OddM { c: Elem },
    /// `x^4 + b x^2 + c x` over F_{2^m}; needs q = 2, k = 1, 3 ≤ n ≤ m.
    BinaryQuartic { b: Elem, c: Elem },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::FrobeniusShift { .. } => "frobenius_shift",
            Family::KEqNMinus2 { .. } => "k_eq_n_minus_2",
            Family::K1OddM { .. } => "k1_odd_m",
            Family::BinaryQuartic { .. } => "binary_quartic",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    DeepHole,
    NotDeepHole,
    /// the family makes no claim for these parameters
    NotGuaranteed,
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prediction::DeepHole => "deep_hole",
            Prediction::NotDeepHole => "not_deep_hole",
            Prediction::NotGuaranteed => "not_guaranteed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub family: &'static str,
    pub poly: LinPoly,
    pub predicted: Prediction,
    pub result: ClassifyResult,
    pub agrees: bool,
}

/// {(−1)^{n−1} b^{1−q} : b ∈ F*}, sorted.
pub fn excluded_set(code: &GabidulinCode<'_>) -> Vec<Elem> {
    let ctx = code.ctx();
    let negate = (code.n() - 1) % 2 == 1;
    let mut out: Vec<Elem> = ctx
        .elements()
        .skip(1)
        .map(|b| {
            let v = ctx.div(b, ctx.frobenius_q(b, 1)).expect("b is nonzero");
            if negate {
                ctx.neg(v)
            } else {
                v
            }
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// {(−1)^n b^{1−q} : b ∈ F*}, sorted. For n = m and k = n − 2 this is the set of a for
/// which `x^{q^{n−1}} − a x^{q^{n−2}} + low` is not a deep hole (see [`minor_ratio_set`]);
/// it differs from [`excluded_set`] only when q and n are both odd.
pub fn non_deep_hole_set(code: &GabidulinCode<'_>) -> Vec<Elem> {
    let ctx = code.ctx();
    let mut out = excluded_set(code);
    for e in out.iter_mut() {
        *e = ctx.neg(*e);
    }
    out.sort_unstable();
    out
}

/// The values `det R_{t−1}(β) / det M_t(β)` over all t-dimensional subspaces of ⟨g⟩, sorted
/// and deduplicated. With t = k + 1 these are exactly the a_1 for which a monic f of
/// q-degree k + 1 fails to be a deep hole.
pub fn minor_ratio_set(code: &GabidulinCode<'_>, t: usize, cap: u64) -> Result<Vec<Elem>> {
    let ctx = code.ctx();
    let needed = gaussian_binomial(ctx.q(), code.n(), t);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            what: "subspace enumeration",
            needed,
            cap,
        });
    }
    let mut out = Vec::new();
    for basis in Subspaces::new(ctx, code.points(), t) {
        out.push(linpoly::minor_coeff(ctx, &basis, 1)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// h(x_1, x_2) = x_1² + x_1x_2 + x_2².
pub(crate) fn binary_quadric(code: &GabidulinCode<'_>, x1: Elem, x2: Elem) -> Elem {
    let ctx = code.ctx();
    ctx.add(ctx.add(ctx.mul(x1, x1), ctx.mul(x1, x2)), ctx.mul(x2, x2))
}

/// Pairs (β_1, β_2) of distinct nonzero elements of ⟨g⟩ with h(β_1, β_2) = b, or (for
/// `points_only`) pairs of distinct evaluation points.
pub fn quadric_pair(code: &GabidulinCode<'_>, b: Elem, points_only: bool) -> Option<(Elem, Elem)> {
    let pool: Vec<Elem> = if points_only {
        code.points().to_vec()
    } else {
        code.support()
            .elements(code.ctx())
            .into_iter()
            .filter(|e| !e.is_zero())
            .collect()
    };
    pool.iter()
        .flat_map(|&x| pool.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| x != y && binary_quadric(code, x, y) == b)
}

fn hypothesis(ok: bool, what: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(what))
    }
}

/// Builds the family member, classifies σ_f and compares with the predicted verdict.
pub fn family_check(code: &GabidulinCode<'_>, family: &Family, metric: Metric, cap: u64) -> Result<FamilyVerdict> {
    let ctx = code.ctx();
    let (n, k, m) = (code.n(), code.k(), ctx.m() as usize);
    let (poly, predicted) = match family {
        Family::FrobeniusShift { low } => {
            hypothesis(n == m, "frobenius_shift needs n = m")?;
            hypothesis(low.deg_q().is_below(k), "low part must have q-degree < k")?;
            (LinPoly::monomial(Elem::ONE, n - 1).add(ctx, low), Prediction::DeepHole)
        }
        Family::KEqNMinus2 { a, low } => {
            hypothesis(n == m, "k_eq_n_minus_2 needs n = m")?;
            hypothesis(n >= 3 && k == n - 2, "k_eq_n_minus_2 needs k = n - 2")?;
            hypothesis(low.deg_q().is_below(n - 2), "low part must have q-degree <= n - 3")?;
            ctx.check(*a)?;
            let head = LinPoly::monomial(Elem::ONE, n - 1).sub(ctx, &LinPoly::monomial(*a, n - 2));
            let predicted = if excluded_set(code).binary_search(a).is_ok() {
                Prediction::NotGuaranteed
            } else {
                Prediction::DeepHole
            };
            (head.add(ctx, low), predicted)
        }
        Family::K1OddM { c } => {
            hypothesis(m % 2 == 1, "k1_odd_m needs odd m")?;
            hypothesis((3..=m).contains(&n) && k == 1, "k1_odd_m needs 3 <= n <= m and k = 1")?;
            ctx.check(*c)?;
            (
                LinPoly::new(alloc::vec![*c, Elem::ZERO, Elem::ONE]),
                Prediction::DeepHole,
            )
        }
        Family::BinaryQuartic { b, c } => {
            hypothesis(ctx.p() == 2 && ctx.s() == 1, "binary_quartic needs q = 2")?;
            hypothesis(
                (3..=m).contains(&n) && k == 1,
                "binary_quartic needs 3 <= n <= m and k = 1",
            )?;
            ctx.check(*b)?;
            ctx.check(*c)?;
            let pair = quadric_pair(code, *b, metric == Metric::Hamming);
            let predicted = if pair.is_some() {
                Prediction::NotDeepHole
            } else {
                Prediction::DeepHole
            };
            (LinPoly::new(alloc::vec![*c, *b, Elem::ONE]), predicted)
        }
    };
    let result = distance_of_poly(code, &poly, metric, cap)?;
    let agrees = match predicted {
        Prediction::DeepHole => result.is_deep_hole,
        Prediction::NotDeepHole => !result.is_deep_hole,
        Prediction::NotGuaranteed => true,
    };
    Ok(FamilyVerdict {
        family: family.name(),
        poly,
        predicted,
        result,
        agrees,
    })
}

/// Nonzero b for which no pair of distinct points g_i, g_j satisfies h = b, although the
/// full span may contain one. Exposes the Hamming-metric gap of the binary family without
/// asserting anything about it.
pub fn hamming_quartic_gap(code: &GabidulinCode<'_>) -> Vec<Elem> {
    code.ctx()
        .elements()
        .skip(1)
        .filter(|&b| quadric_pair(code, b, true).is_none())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ORACLE_CAP;
    use crate::field::FieldCtx;
    use alloc::vec;

    fn e(c: u32) -> Elem {
        Elem::from_code(c)
    }

    fn full_code(ctx: &FieldCtx, k: usize) -> GabidulinCode<'_> {
        let p = ctx.p();
        let g = (0..ctx.m()).map(|i| e(p.pow(i))).collect();
        GabidulinCode::new(ctx, g, k).unwrap()
    }

    #[test]
    fn witness_for_constructed_positive_case() {
        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 2);
        let h0 = [e(3), e(6), e(8)];
        let ann = linpoly::annihilator_of(&f16, &h0).unwrap();
        let f = ann.add(&f16, &LinPoly::new(vec![e(7), e(9)]));
        let w = equality_witness(&code, &f, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap();
        let Some(Witness::Subspace(h)) = w else {
            panic!("expected a subspace witness")
        };
        let got = linpoly::annihilator_of(&f16, &h).unwrap();
        assert!(f.sub(&f16, &got).deg_q().is_below(2));
    }

    #[test]
    fn frobenius_monomials_have_no_witness() {
        let f32 = FieldCtx::new(2, 1, 5, None).unwrap();
        let code = full_code(&f32, 1);
        let f = LinPoly::monomial(Elem::ONE, 2);
        assert_eq!(
            equality_witness(&code, &f, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap(),
            None
        );

        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 2);
        let f = LinPoly::monomial(Elem::ONE, 3);
        assert_eq!(
            equality_witness(&code, &f, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap(),
            None
        );
        assert!(matches!(
            equality_witness(&code, &LinPoly::x(), Metric::Rank, DEFAULT_SUBSPACE_CAP),
            Err(Error::DegreeOutOfRange(_))
        ));
    }

    #[test]
    fn search_examples() {
        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 2);
        let cw = code.encode(&LinPoly::new(vec![e(5), e(11)])).unwrap();
        let r = distance_by_search(&code, &cw, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap();
        assert_eq!((r.distance, r.is_deep_hole), (0, false));

        let f = LinPoly::new(vec![e(1), e(0), e(13)]);
        let r = distance_of_poly(&code, &f, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap();
        assert_eq!((r.distance, r.bound, r.is_deep_hole), (2, 2, true));

        let ann = linpoly::annihilator_of(&f16, &[e(1), e(2), e(4)]).unwrap();
        let w = code.evaluate(&ann);
        let r = distance_by_search(&code, &w, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap();
        assert_eq!(r.distance, 1);
        let oracle = code
            .dist_to_code_exhaustive(&w, Metric::Rank, DEFAULT_ORACLE_CAP)
            .unwrap();
        assert_eq!(oracle.0, 1);
    }

    #[test]
    fn zero_word_is_not_a_deep_hole() {
        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 2);
        let r = classify(
            &code,
            &Word::new(vec![Elem::ZERO; 4]),
            Metric::Rank,
            DEFAULT_SUBSPACE_CAP,
        )
        .unwrap();
        assert_eq!(r.distance, 0);
        assert!(!r.is_deep_hole);
    }

    #[test]
    fn scans_of_tiny_codes() {
        let f4 = FieldCtx::new(2, 1, 2, None).unwrap();
        let code = full_code(&f4, 1);
        let report = covering_radius_scan(&code, Metric::Rank, DEFAULT_SUBSPACE_CAP, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(report.radius, 1);
        assert_eq!(report.histogram.values().sum::<u64>(), 4);
        assert!(matches!(
            covering_radius_scan(&code, Metric::Rank, DEFAULT_SUBSPACE_CAP, 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn ratio_lemma_on_annihilator() {
        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 1);
        let f = linpoly::annihilator_of(&f16, &[e(3), e(12)]).unwrap();
        assert!(ratio_lemma_check(&code, &f, Metric::Rank, DEFAULT_SUBSPACE_CAP)
            .unwrap()
            .is_some());
        assert!(matches!(
            ratio_lemma_check(
                &code,
                &LinPoly::monomial(Elem::ONE, 3),
                Metric::Rank,
                DEFAULT_SUBSPACE_CAP
            ),
            Err(Error::DegreeOutOfRange(_))
        ));
        let f32 = FieldCtx::new(2, 1, 5, None).unwrap();
        let code = full_code(&f32, 1);
        let f = LinPoly::monomial(Elem::ONE, 2);
        assert_eq!(
            ratio_lemma_check(&code, &f, Metric::Rank, DEFAULT_SUBSPACE_CAP).unwrap(),
            None
        );
    }

    #[test]
    fn family_hypotheses_are_enforced() {
        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 1);
        let err = family_check(
            &code,
            &Family::K1OddM { c: Elem::ONE },
            Metric::Rank,
            DEFAULT_SUBSPACE_CAP,
        );
        assert!(matches!(err, Err(Error::HypothesisViolated(_))));
        let err = family_check(
            &code,
            &Family::KEqNMinus2 {
                a: Elem::ONE,
                low: LinPoly::zero(),
            },
            Metric::Rank,
            DEFAULT_SUBSPACE_CAP,
        );
        assert!(matches!(err, Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn family_examples() {
        let f16 = FieldCtx::new(2, 1, 4, None).unwrap();
        let code = full_code(&f16, 2);
        let v = family_check(
            &code,
            &Family::FrobeniusShift { low: LinPoly::zero() },
            Metric::Rank,
            DEFAULT_SUBSPACE_CAP,
        )
        .unwrap();
        assert!(v.result.is_deep_hole && v.agrees);

        let f27 = FieldCtx::new(3, 1, 3, None).unwrap();
        let code = full_code(&f27, 1);
        let excluded = excluded_set(&code);
        assert_eq!(excluded.len(), 13);
        let outside = f27
            .elements()
            .skip(1)
            .filter(|a| excluded.binary_search(a).is_err())
            .count();
        assert_eq!(outside, 13);

        let f32 = FieldCtx::new(2, 1, 5, None).unwrap();
        let code = full_code(&f32, 1);
        let zero_b = family_check(
            &code,
            &Family::BinaryQuartic { b: Elem::ZERO, c: e(9) },
            Metric::Rank,
            DEFAULT_SUBSPACE_CAP,
        )
        .unwrap();
        assert_eq!(zero_b.predicted, Prediction::DeepHole);
        assert!(zero_b.result.is_deep_hole);
        let one_b = family_check(
            &code,
            &Family::BinaryQuartic { b: Elem::ONE, c: e(9) },
            Metric::Rank,
            DEFAULT_SUBSPACE_CAP,
        )
        .unwrap();
        assert_eq!(one_b.predicted, Prediction::NotDeepHole);
        assert!(!one_b.result.is_deep_hole && one_b.agrees);
    }
}
