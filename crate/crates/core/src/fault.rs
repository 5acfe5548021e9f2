//! Fault injection for mutation testing.
//!
//! A fault is installed for the current thread only, for the duration of a
//! closure. Each hook is a no-op unless a matching fault is active.

use std::cell::Cell;

use crate::indexing::{Index2, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flip the sign of letter `position` in the expansion of
    /// `∧²t_{i,j}(ξ)` for ambient rank `n`.
    FormulaSign { i: usize, j: usize, n: usize, position: usize },
    /// Flip `shuffle_sign(B, D)` for one ordered pair.
    ShuffleSign { b: [usize; 2], d: [usize; 2] },
    /// Flip `ε` of one term in every decomposition word the engine emits.
    Epsilon { term: usize },
}

thread_local! {
    static ACTIVE: Cell<Option<Fault>> = const { Cell::new(None) };
}

/// Runs `body` with `fault` active on this thread.
pub fn with_fault<R>(fault: Fault, body: impl FnOnce() -> R) -> R {
    struct Reset(Option<Fault>);
    impl Drop for Reset {
        fn drop(&mut self) {
            ACTIVE.with(|a| a.set(self.0));
        }
    }
    let _reset = Reset(ACTIVE.with(|a| a.replace(Some(fault))));
    body()
}

pub fn active() -> Option<Fault> {
    ACTIVE.with(Cell::get)
}

pub(crate) fn formula_sign_hook(i: usize, j: usize, n: usize, position: usize, s: Sign) -> Sign {
    match active() {
        Some(Fault::FormulaSign { i: fi, j: fj, n: fnn, position: fp }) if (fi, fj, fnn, fp) == (i, j, n, position) => {
            -s
        }
        _ => s,
    }
}

pub(crate) fn shuffle_sign_hook(b: &Index2, d: &Index2, s: Sign) -> Sign {
    match active() {
        Some(Fault::ShuffleSign { b: fb, d: fd }) if fb == b.as_array() && fd == d.as_array() => -s,
        _ => s,
    }
}

pub(crate) fn epsilon_hook(term: usize) -> bool {
    matches!(active(), Some(Fault::Epsilon { term: t }) if t == term)
}
