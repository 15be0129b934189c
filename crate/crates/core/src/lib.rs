//! 3-restricted min-wise independent (3-mwi) permutation families and their
//! hypercube representation.
//!
//! A family of permutations of `[n]` is 3-mwi when, for every subset `X` of at
//! most three elements, each element of `X` is the minimum under a family
//! member exactly `m/|X|` times. The [`perm`] module checks this directly on
//! permutations (both the min-based form and the equivalent ordered-triple
//! counting form). The [`vector`] module carries the same structure on the
//! hypercube: every ordered pair `(x, y)` gets a length-`m` binary vector
//! recording where `x` precedes `y`, and the family is 3-mwi exactly when four
//! dot-product identities hold. Conversions run in both directions and are
//! mutually inverse.
//!
//! The [`search`] module enumerates 3-mwi vector families of a given size by
//! backtracking from a canonical seed (quotienting out coordinate
//! permutations) and emits machine-checkable [`search::Certificate`]s for both
//! existence and exhaustion. [`text`] provides the line-oriented file formats
//! used by the `mwi` command-line tool.

use std::fmt;

use thiserror::Error;

pub mod perm;
pub mod search;
pub mod text;
pub mod vector;

pub use perm::{DistinctnessError, MinDefViolation, PermFamily, Permutation, TripleDefViolation};
pub use search::{Certificate, CertificateKind, PartialFamily};
pub use vector::{BitVector, VectorFamily, VectorViolation};

/// Outcome of a structural check: either it holds, or here is the first
/// counterexample (first in a deterministic scan order, so failures are
/// reproducible).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<V> {
    Holds,
    Violated(V),
}

impl<V> Verdict<V> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(v) => Some(v),
        }
    }
}

/// A count target of the form `total / divisor`, kept unreduced so that
/// non-integral targets (which are automatically unsatisfiable) still print
/// faithfully, e.g. `7/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedCount {
    pub total: usize,
    pub divisor: usize,
}

impl ExpectedCount {
    pub fn new(total: usize, divisor: usize) -> Self {
        assert!(divisor > 0);
        ExpectedCount { total, divisor }
    }

    /// The exact integer target, when the division is exact.
    pub fn exact(&self) -> Option<usize> {
        self.total
            .is_multiple_of(self.divisor)
            .then(|| self.total / self.divisor)
    }

    /// `count` meets the target iff `count * divisor == total`.
    pub fn matches(&self, count: usize) -> bool {
        count * self.divisor == self.total
    }
}

impl fmt::Display for ExpectedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/{}", self.total, self.divisor),
        }
    }
}

/// The ground set is too small for the requested operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("ground-set order {n} too small, need at least {required}")]
pub struct OrderTooSmall {
    pub n: usize,
    pub required: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_count_display() {
        assert_eq!(ExpectedCount::new(6, 3).to_string(), "2");
        assert_eq!(ExpectedCount::new(7, 2).to_string(), "7/2");
        assert_eq!(ExpectedCount::new(0, 1).to_string(), "0");
    }

    #[test]
    fn expected_count_matches_without_division() {
        assert!(ExpectedCount::new(6, 3).matches(2));
        assert!(!ExpectedCount::new(6, 4).matches(1));
        assert!(!ExpectedCount::new(6, 4).matches(2));
    }
}
