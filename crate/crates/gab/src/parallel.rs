//! Parallel drivers over the core routines. Work is split by index range and merged in
//! index order, so results do not depend on the worker count.

use std::collections::BTreeMap;

use gabidulin_core::code::DEFAULT_ORACLE_CAP;
use gabidulin_core::deephole::{self, ClassRecord, ScanReport, DEFAULT_SCAN_CAP, DEFAULT_SUBSPACE_CAP};
use gabidulin_core::{Elem, Error as CoreError, GabidulinCode, LinPoly, Metric, Word};
use rayon::prelude::*;

use crate::error::Result;

/// Limits on exhaustive work.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// codewords visited by the brute-force oracle
    pub oracle: u64,
    /// candidate subspaces or subsets per dimension
    pub subspace: u64,
    /// translation classes visited by scans
    pub scan: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle: DEFAULT_ORACLE_CAP,
            subspace: DEFAULT_SUBSPACE_CAP,
            scan: DEFAULT_SCAN_CAP,
        }
    }
}

impl Caps {
    /// The same limit everywhere.
    pub fn uniform(cap: u64) -> Self {
        Caps {
            oracle: cap,
            subspace: cap,
            scan: cap,
        }
    }
}

pub struct Runner {
    pool: rayon::ThreadPool,
    pub caps: Caps,
}

const CHUNK: u64 = 1 << 12;

fn chunks(total: u64) -> Vec<std::ops::Range<u64>> {
    (0..total.div_ceil(CHUNK))
        .map(|i| i * CHUNK..((i + 1) * CHUNK).min(total))
        .collect()
}

fn oracle_count(code: &GabidulinCode<'_>, cap: u64) -> Result<u64> {
    let needed = code.message_count();
    if needed > cap as u128 {
        return Err(CoreError::CapExceeded {
            what: "codeword enumeration",
            needed,
            cap,
        }
        .into());
    }
    Ok(needed as u64)
}

impl Runner {
    /// `jobs = 0` lets rayon pick the worker count.
    pub fn new(jobs: usize, caps: Caps) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        Ok(Runner { pool, caps })
    }

    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        self.pool.install(op)
    }

    /// Brute-force d(w, C) with the first minimising message.
    pub fn oracle_distance(&self, code: &GabidulinCode<'_>, w: &Word, metric: Metric) -> Result<(usize, LinPoly)> {
        code.check_word(w)?;
        let total = oracle_count(code, self.caps.oracle)?;
        let best = self.install(|| {
            chunks(total)
                .into_par_iter()
                .filter_map(|r| code.nearest_in_range(w, metric, r))
                .min()
                .expect("code is nonempty")
        });
        Ok((best.0, code.message(best.1)))
    }

    pub fn min_distance(&self, code: &GabidulinCode<'_>, metric: Metric) -> Result<usize> {
        let total = oracle_count(code, self.caps.oracle)?;
        self.install(|| {
            chunks(total)
                .into_par_iter()
                .filter_map(|r| code.min_weight_in_range(metric, r))
                .min()
        })
        .ok_or_else(|| CoreError::InvalidParameter("code has no nonzero codeword").into())
    }

    /// One record per translation class, in class order.
    pub fn census(&self, code: &GabidulinCode<'_>, metric: Metric) -> Result<Vec<ClassRecord>> {
        let classes = deephole::check_scan_cap(code, self.caps.scan)?;
        let cap = self.caps.subspace;
        let records = self.install(|| {
            (0..classes)
                .into_par_iter()
                .map(|id| deephole::classify_class(code, id, metric, cap))
                .collect::<gabidulin_core::Result<Vec<_>>>()
        })?;
        Ok(records)
    }

    pub fn scan(&self, code: &GabidulinCode<'_>, metric: Metric) -> Result<ScanReport> {
        let records = self.census(code, metric)?;
        Ok(ScanReport::from_distances(records.iter().map(|r| r.result.distance)))
    }

    /// Oracle distance of every word of F^n: distance → number of words.
    pub fn word_histogram(&self, code: &GabidulinCode<'_>, metric: Metric) -> Result<BTreeMap<usize, u64>> {
        let ctx = code.ctx();
        let order = ctx.order();
        let words = (order as u128).checked_pow(code.n() as u32).unwrap_or(u128::MAX);
        if words > self.caps.scan as u128 {
            return Err(CoreError::CapExceeded {
                what: "word sweep",
                needed: words,
                cap: self.caps.scan,
            }
            .into());
        }
        let messages = oracle_count(code, self.caps.oracle)?;
        let distances: Vec<usize> = self.install(|| {
            (0..words as u64)
                .into_par_iter()
                .map(|idx| {
                    let mut rest = idx;
                    let entries = (0..code.n())
                        .map(|_| {
                            let e = Elem::from_code((rest % order) as u32);
                            rest /= order;
                            e
                        })
                        .collect();
                    code.nearest_in_range(&Word::new(entries), metric, 0..messages)
                        .expect("code is nonempty")
                        .0
                })
                .collect()
        });
        let mut hist = BTreeMap::new();
        for d in distances {
            *hist.entry(d).or_insert(0) += 1;
        }
        Ok(hist)
    }
}
