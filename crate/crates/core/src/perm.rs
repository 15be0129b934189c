//! Permutation families and the two equivalent 3-mwi criteria on the
//! permutation side.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::{ExpectedCount, OrderTooSmall, Verdict};

/// A permutation of `[n] = {0, …, n-1}`, stored as its image sequence:
/// entry `k` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidPermutation {
    #[error("image sequence is empty")]
    Empty,
    #[error("image {value} out of range for order {n}")]
    ImageOutOfRange { value: usize, n: usize },
    #[error("image {value} appears more than once")]
    RepeatedImage { value: usize },
    #[error("expected a decimal digit, found {found:?}")]
    NotADigit { found: char },
}

impl Permutation {
    /// Validates that `images` is a bijection on `{0, …, n-1}`.
    pub fn new(images: Vec<usize>) -> Result<Self, InvalidPermutation> {
        let n = images.len();
        if n == 0 {
            return Err(InvalidPermutation::Empty);
        }
        let mut seen = vec![false; n];
        for &value in &images {
            if value >= n {
                return Err(InvalidPermutation::ImageOutOfRange { value, n });
            }
            if seen[value] {
                return Err(InvalidPermutation::RepeatedImage { value });
            }
            seen[value] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Parses the compact digit notation, e.g. `"3102"` for the map
    /// 0→3, 1→1, 2→0, 3→2. Only usable for n ≤ 10.
    pub fn from_compact(s: &str) -> Result<Self, InvalidPermutation> {
        let images = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or(InvalidPermutation::NotADigit { found: c })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(images)
    }

    /// Order of the permutation's ground set.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, value) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{value}")?;
        }
        Ok(())
    }
}

/// An ordered family of `m` permutations of common order `n`.
///
/// Duplicates are permitted; every count below ranges over member indices,
/// not distinct permutations. [`PermFamily::has_duplicates`] reports whether
/// any member repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermFamily {
    n: usize,
    members: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a family needs at least one member")]
    Empty,
    #[error("member {index} has order {found}, expected {expected}")]
    MixedOrders {
        index: usize,
        expected: usize,
        found: usize,
    },
}

/// The elements handed to a counting operation were not pairwise distinct
/// members of `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DistinctnessError {
    #[error("element {element} out of range for order {n}")]
    OutOfRange { element: usize, n: usize },
    #[error("element {element} repeated; elements must be pairwise distinct")]
    Repeated { element: usize },
}

/// First failure of the min-based criterion: the subset `X`, the element of
/// `X` whose min-count is off, and the counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinDefViolation {
    pub subset: Vec<usize>,
    pub element: usize,
    pub expected: ExpectedCount,
    pub actual: usize,
}

impl fmt::Display for MinDefViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "min over {{{}}} for element {}: expected {}, actual {}",
            self.subset.iter().join(","),
            self.element,
            self.expected,
            self.actual
        )
    }
}

/// First failure of the triple-counting criterion (which also constrains all
/// pair counts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleDefViolation {
    Pair {
        x: usize,
        y: usize,
        expected: ExpectedCount,
        actual: usize,
    },
    Triple {
        x: usize,
        y: usize,
        z: usize,
        expected: ExpectedCount,
        actual: usize,
    },
}

impl fmt::Display for TripleDefViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleDefViolation::Pair {
                x,
                y,
                expected,
                actual,
            } => write!(f, "pair ({x},{y}): expected {expected}, actual {actual}"),
            TripleDefViolation::Triple {
                x,
                y,
                z,
                expected,
                actual,
            } => write!(f, "triple ({x},{y},{z}): expected {expected}, actual {actual}"),
        }
    }
}

impl PermFamily {
    /// Builds a family from its members, which must share a common order.
    pub fn new(members: Vec<Permutation>) -> Result<Self, FamilyError> {
        let n = match members.first() {
            Some(p) => p.n(),
            None => return Err(FamilyError::Empty),
        };
        for (index, p) in members.iter().enumerate() {
            if p.n() != n {
                return Err(FamilyError::MixedOrders {
                    index,
                    expected: n,
                    found: p.n(),
                });
            }
        }
        Ok(PermFamily { n, members })
    }

    /// The full symmetric group on `[n]`, members in lexicographic order of
    /// their image sequences.
    pub fn symmetric_group(n: usize) -> Self {
        assert!((1..=10).contains(&n), "symmetric_group supports 1 ≤ n ≤ 10");
        let members = (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect();
        PermFamily { n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Family size (number of members, duplicates included).
    pub fn m(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Permutation {
        &self.members[i]
    }

    /// Advisory only: counting semantics are unaffected by duplicates.
    pub fn has_duplicates(&self) -> bool {
        let mut sorted: Vec<_> = self.members.iter().collect();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    fn check_distinct(&self, elements: &[usize]) -> Result<(), DistinctnessError> {
        for (i, &element) in elements.iter().enumerate() {
            if element >= self.n {
                return Err(DistinctnessError::OutOfRange { element, n: self.n });
            }
            if elements[..i].contains(&element) {
                return Err(DistinctnessError::Repeated { element });
            }
        }
        Ok(())
    }

    /// Number of members placing `x` before `y`.
    pub fn pair_count(&self, x: usize, y: usize) -> Result<usize, DistinctnessError> {
        self.check_distinct(&[x, y])?;
        Ok(self.pair_count_raw(x, y))
    }

    fn pair_count_raw(&self, x: usize, y: usize) -> usize {
        self.members
            .iter()
            .filter(|p| p.image(x) < p.image(y))
            .count()
    }

    /// Number of members placing `x`, `y`, `z` in that relative order.
    pub fn triple_count(&self, x: usize, y: usize, z: usize) -> Result<usize, DistinctnessError> {
        self.check_distinct(&[x, y, z])?;
        Ok(self.triple_count_raw(x, y, z))
    }

    fn triple_count_raw(&self, x: usize, y: usize, z: usize) -> usize {
        self.members
            .iter()
            .filter(|p| p.image(x) < p.image(y) && p.image(y) < p.image(z))
            .count()
    }

    /// The min-based 3-mwi criterion: for every `X ⊆ [n]` with
    /// `1 ≤ |X| ≤ min(3, n)` and every `x ∈ X`, exactly `m/|X|` members place
    /// `x` first within `X`. Counts must match exactly, so any applicable
    /// `|X|` not dividing `m` forces a violation.
    ///
    /// Scan order: subset size ascending, subsets lexicographic, elements
    /// ascending; the first counterexample is returned.
    pub fn is_3mwi_min_def(&self) -> Verdict<MinDefViolation> {
        let m = self.m();
        for size in 1..=self.n.min(3) {
            for subset in (0..self.n).combinations(size) {
                for &element in &subset {
                    let actual = self
                        .members
                        .iter()
                        .filter(|p| {
                            let min = subset.iter().map(|&e| p.image(e)).min().unwrap();
                            p.image(element) == min
                        })
                        .count();
                    let expected = ExpectedCount::new(m, size);
                    if !expected.matches(actual) {
                        return Verdict::Violated(MinDefViolation {
                            subset,
                            element,
                            expected,
                            actual,
                        });
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// The counting form of the 3-mwi criterion: every ordered triple occurs
    /// in order `m/6` times, and additionally every ordered pair `m/2` times
    /// (the pair counts are implied by the triple counts when n ≥ 3, but the
    /// criterion states both). Equivalent to
    /// [`is_3mwi_min_def`](Self::is_3mwi_min_def) whenever `n ≥ 3`.
    ///
    /// Scan order: all ordered triples lexicographic, then all ordered pairs
    /// lexicographic.
    pub fn is_3mwi_triple_def(&self) -> Result<Verdict<TripleDefViolation>, OrderTooSmall> {
        if self.n < 3 {
            return Err(OrderTooSmall {
                n: self.n,
                required: 3,
            });
        }
        let m = self.m();
        let sixth = ExpectedCount::new(m, 6);
        for ((x, y), z) in (0..self.n)
            .cartesian_product(0..self.n)
            .cartesian_product(0..self.n)
        {
            if x == y || y == z || x == z {
                continue;
            }
            let actual = self.triple_count_raw(x, y, z);
            if !sixth.matches(actual) {
                return Ok(Verdict::Violated(TripleDefViolation::Triple {
                    x,
                    y,
                    z,
                    expected: sixth,
                    actual,
                }));
            }
        }
        let half = ExpectedCount::new(m, 2);
        for (x, y) in (0..self.n).cartesian_product(0..self.n) {
            if x == y {
                continue;
            }
            let actual = self.pair_count_raw(x, y);
            if !half.matches(actual) {
                return Ok(Verdict::Violated(TripleDefViolation::Pair {
                    x,
                    y,
                    expected: half,
                    actual,
                }));
            }
        }
        Ok(Verdict::Holds)
    }
}
