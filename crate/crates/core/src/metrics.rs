//! Operation counters for the public group operations.
//!
//! Every call to [`CurveParams::point_add`](crate::curve::CurveParams::point_add),
//! [`point_negate`](crate::curve::CurveParams::point_negate) and
//! [`scalar_mult`](crate::curve::CurveParams::scalar_mult), and every
//! ciphertext hash, bumps a thread-local counter. Arithmetic inside the
//! ladder is not counted. Counters are per thread, so concurrent callers
//! never see each other's work.

use std::cell::Cell;
use std::ops::Sub;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub scalar_mults: u64,
    pub point_adds: u64,
    pub negations: u64,
    pub hashes: u64,
}

impl OpCounts {
    pub const fn new(scalar_mults: u64, point_adds: u64, negations: u64, hashes: u64) -> Self {
        OpCounts { scalar_mults, point_adds, negations, hashes }
    }
}

impl Sub for OpCounts {
    type Output = OpCounts;

    fn sub(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            scalar_mults: self.scalar_mults - rhs.scalar_mults,
            point_adds: self.point_adds - rhs.point_adds,
            negations: self.negations - rhs.negations,
            hashes: self.hashes - rhs.hashes,
        }
    }
}

thread_local! {
    static COUNTS: Cell<OpCounts> = const { Cell::new(OpCounts::new(0, 0, 0, 0)) };
}

pub(crate) fn record(f: impl FnOnce(&mut OpCounts)) {
    COUNTS.with(|c| {
        let mut v = c.get();
        f(&mut v);
        c.set(v);
    });
}

/// Totals for the current thread since it started.
pub fn snapshot() -> OpCounts {
    COUNTS.with(Cell::get)
}

/// Runs `f` and returns its result with the operations it performed on
/// this thread.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, OpCounts) {
    let before = snapshot();
    let out = f();
    (out, snapshot() - before)
}
