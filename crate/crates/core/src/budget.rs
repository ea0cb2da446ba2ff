//! The dense-matrix budget: a cap on `d^n` for every operation that
//! materializes an operator on `(C^d)^{⊗n}`.
//!
//! Resolution order: an explicit process-wide override set with
//! [`set_budget`], then the `MONOGAMY_BUDGET` environment variable, then
//! [`DEFAULT_BUDGET`].

use std::sync::atomic::{AtomicU64, Ordering};

use crate::{Error, Result};

pub const DEFAULT_BUDGET: u128 = 4096;
pub const BUDGET_ENV: &str = "MONOGAMY_BUDGET";

static OVERRIDE: AtomicU64 = AtomicU64::new(0);

/// Sets a process-wide budget. Passing `None` clears the override.
pub fn set_budget(budget: Option<u64>) {
    OVERRIDE.store(budget.unwrap_or(0), Ordering::SeqCst);
}

pub fn current() -> u128 {
    let o = OVERRIDE.load(Ordering::SeqCst);
    if o > 0 {
        return o as u128;
    }
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// `d^n`, saturating at `u128::MAX`.
pub fn hilbert_dim(n: usize, d: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(d as u128);
    }
    acc
}

pub fn fits(n: usize, d: usize) -> bool {
    hilbert_dim(n, d) <= current()
}

pub fn check(n: usize, d: usize) -> Result<()> {
    let dimension = hilbert_dim(n, d);
    let budget = current();
    if dimension > budget {
        return Err(Error::BudgetExceeded { dimension, budget });
    }
    Ok(())
}
