//! Thread-local instrumentation counters.
//!
//! Every base-ring multiplication ticks `ring_muls`; attempting to invert
//! a series with non-unit constant term ticks `division_violations`;
//! reading a collapsed series coefficient ticks `watermark_violations`.
//! Pipelines take a [`Snapshot`] before a stage and report the delta, so
//! counters never need resetting and parallel test threads do not
//! interfere.

use std::cell::Cell;

thread_local! {
    static RING_MULS: Cell<u64> = const { Cell::new(0) };
    static DIVISION_VIOLATIONS: Cell<u64> = const { Cell::new(0) };
    static WATERMARK_VIOLATIONS: Cell<u64> = const { Cell::new(0) };
    static SERIES_MULS: Cell<u64> = const { Cell::new(0) };
    static SERIES_DEG_SMALL: Cell<u64> = const { Cell::new(0) };
    static SERIES_DEG_LARGE: Cell<u64> = const { Cell::new(0) };
    static SERIES_DEG_MAX_SMALL: Cell<u64> = const { Cell::new(0) };
    static SERIES_DEG_MAX_LARGE: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub(crate) fn tick_mul() {
    RING_MULS.with(|c| c.set(c.get() + 1));
}

pub(crate) fn tick_division_violation() {
    DIVISION_VIOLATIONS.with(|c| c.set(c.get() + 1));
}

pub(crate) fn tick_watermark_violation() {
    WATERMARK_VIOLATIONS.with(|c| c.set(c.get() + 1));
}

/// Records one series product together with its operand degrees
/// (index of the highest nonzero coefficient of each factor).
pub(crate) fn record_series_mul(deg_a: usize, deg_b: usize) {
    let (small, large) = if deg_a <= deg_b {
        (deg_a as u64, deg_b as u64)
    } else {
        (deg_b as u64, deg_a as u64)
    };
    SERIES_MULS.with(|c| c.set(c.get() + 1));
    SERIES_DEG_SMALL.with(|c| c.set(c.get() + small));
    SERIES_DEG_LARGE.with(|c| c.set(c.get() + large));
    SERIES_DEG_MAX_SMALL.with(|c| c.set(c.get().max(small)));
    SERIES_DEG_MAX_LARGE.with(|c| c.set(c.get().max(large)));
}

/// Point-in-time view of the counters on the current thread.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Snapshot {
    pub ring_muls: u64,
    pub division_violations: u64,
    pub watermark_violations: u64,
}

pub fn snapshot() -> Snapshot {
    Snapshot {
        ring_muls: RING_MULS.with(Cell::get),
        division_violations: DIVISION_VIOLATIONS.with(Cell::get),
        watermark_violations: WATERMARK_VIOLATIONS.with(Cell::get),
    }
}

impl Snapshot {
    /// Counter increments since `self` was taken.
    pub fn delta(&self) -> Snapshot {
        let now = snapshot();
        Snapshot {
            ring_muls: now.ring_muls - self.ring_muls,
            division_violations: now.division_violations - self.division_violations,
            watermark_violations: now.watermark_violations - self.watermark_violations,
        }
    }
}

/// Aggregate operand-degree statistics of series products, used to
/// surface the small-degree by large-degree product asymmetry of the
/// reverse pass on series matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SeriesMulStats {
    pub products: u64,
    pub sum_small_degree: u64,
    pub sum_large_degree: u64,
    pub max_small_degree: u64,
    pub max_large_degree: u64,
}

pub fn series_mul_stats() -> SeriesMulStats {
    SeriesMulStats {
        products: SERIES_MULS.with(Cell::get),
        sum_small_degree: SERIES_DEG_SMALL.with(Cell::get),
        sum_large_degree: SERIES_DEG_LARGE.with(Cell::get),
        max_small_degree: SERIES_DEG_MAX_SMALL.with(Cell::get),
        max_large_degree: SERIES_DEG_MAX_LARGE.with(Cell::get),
    }
}

impl SeriesMulStats {
    /// Statistics accumulated since `self` was taken. Maxima are global,
    /// not windowed.
    pub fn delta(&self) -> SeriesMulStats {
        let now = series_mul_stats();
        SeriesMulStats {
            products: now.products - self.products,
            sum_small_degree: now.sum_small_degree - self.sum_small_degree,
            sum_large_degree: now.sum_large_degree - self.sum_large_degree,
            max_small_degree: now.max_small_degree,
            max_large_degree: now.max_large_degree,
        }
    }
}
