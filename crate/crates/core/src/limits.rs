//! A thread-local step budget that guards runaway Gröbner computations.
//!
//! The count is of single term-cancellation steps inside reductions. The
//! default is generous; sessions lower it via `--step-limit`.

use std::cell::Cell;

pub const DEFAULT_STEP_LIMIT: u64 = 500_000_000;

thread_local! {
    static STEP_LIMIT: Cell<u64> = const { Cell::new(DEFAULT_STEP_LIMIT) };
    static STEPS: Cell<u64> = const { Cell::new(0) };
}

/// Set the budget for the current thread and reset the counter.
pub fn set_step_limit(limit: u64) {
    STEP_LIMIT.with(|l| l.set(limit));
    reset_steps();
}

pub fn step_limit() -> u64 {
    STEP_LIMIT.with(|l| l.get())
}

pub fn reset_steps() {
    STEPS.with(|s| s.set(0));
}

/// Total steps consumed on this thread since the last reset.
pub fn steps_used() -> u64 {
    STEPS.with(|s| s.get())
}

/// Charge `n` steps; reports whether the budget is exhausted.
#[must_use]
pub fn charge(n: u64) -> bool {
    STEPS.with(|s| {
        let v = s.get().saturating_add(n);
        s.set(v);
        v <= STEP_LIMIT.with(|l| l.get())
    })
}
