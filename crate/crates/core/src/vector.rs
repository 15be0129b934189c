//! Binary vectors on the hypercube, the per-pair indicator family, the four
//! dot-product identities, and both directions of the permutation
//! correspondence.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::perm::{PermFamily, Permutation};
use crate::{ExpectedCount, OrderTooSmall, Verdict};

/// A binary vector of length `m ≤ 128`, one coordinate per family member.
///
/// Printed left to right starting at coordinate 0, so `"000111"` has zeros at
/// coordinates 0–2. Comparison order is the lexicographic order of that
/// printed form (for equal lengths).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    // Coordinate i lives at bit (len - 1 - i), so the numeric order of the
    // word is the lexicographic order of the bitstring.
    bits: u128,
}

/// Maximum supported vector length.
pub const MAX_LEN: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("length mismatch: {left} vs {right}")]
pub struct LengthMismatch {
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidBitstring {
    #[error("bitstrings may only contain '0' and '1', found {found:?}")]
    BadCharacter { found: char },
    #[error("bitstring length {len} exceeds the maximum of {max}", max = MAX_LEN)]
    TooLong { len: usize },
}

impl BitVector {
    fn mask(len: usize) -> u128 {
        if len == 128 {
            u128::MAX
        } else {
            (1u128 << len) - 1
        }
    }

    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_LEN);
        BitVector { len, bits: 0 }
    }

    pub(crate) fn from_word(len: usize, bits: u128) -> Self {
        debug_assert!(len <= MAX_LEN);
        debug_assert_eq!(bits & !Self::mask(len), 0);
        BitVector { len, bits }
    }

    pub(crate) fn word(&self) -> u128 {
        self.bits
    }

    /// Builds a vector from coordinate values, coordinate 0 first.
    pub fn from_bits<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut v = BitVector { len: 0, bits: 0 };
        for bit in iter {
            assert!(v.len < MAX_LEN, "at most {MAX_LEN} coordinates");
            v.len += 1;
            v.bits = (v.bits << 1) | u128::from(bit);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.bits >> (self.len - 1 - i)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let bit = 1u128 << (self.len - 1 - i);
        if value {
            self.bits |= bit;
        } else {
            self.bits &= !bit;
        }
    }

    /// Hamming weight; equals the dot product with itself.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Inner product over the integers, via popcount of the AND.
    pub fn dot(&self, other: &BitVector) -> Result<usize, LengthMismatch> {
        if self.len != other.len {
            return Err(LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(self.dot_raw(other))
    }

    pub(crate) fn dot_raw(&self, other: &BitVector) -> usize {
        debug_assert_eq!(self.len, other.len);
        (self.bits & other.bits).count_ones() as usize
    }

    /// Coordinatewise complement.
    pub fn complement(&self) -> Self {
        BitVector {
            len: self.len,
            bits: !self.bits & Self::mask(self.len),
        }
    }
}

impl FromStr for BitVector {
    type Err = InvalidBitstring;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() > MAX_LEN {
            return Err(InvalidBitstring::TooLong { len: s.len() });
        }
        let mut bits = 0u128;
        for c in s.chars() {
            match c {
                '0' => bits <<= 1,
                '1' => bits = (bits << 1) | 1,
                found => return Err(InvalidBitstring::BadCharacter { found }),
            }
        }
        Ok(BitVector { len: s.len(), bits })
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// An index was outside the family's coordinate or element range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{what} index {index} out of range (limit {limit})")]
pub struct IndexOutOfRange {
    pub what: &'static str,
    pub index: usize,
    pub limit: usize,
}

/// Reconstruction hit two elements with the same rank at one coordinate, so
/// that coordinate does not describe a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("coordinate {index}: elements {first} and {second} share rank {value}")]
pub struct NotAPermutation {
    pub index: usize,
    pub first: usize,
    pub second: usize,
    pub value: usize,
}

/// A checked hypothesis did not hold on the inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("precondition failed: {quantity} = {actual}, expected {expected}")]
pub struct PreconditionViolation {
    pub quantity: &'static str,
    pub expected: ExpectedCount,
    pub actual: usize,
}

/// First failed identity of the vector-side 3-mwi criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VectorViolation {
    /// `m` is not a multiple of 6, so the identities have no integer targets.
    Divisibility { m: usize },
    /// `v_xy · v_xy ≠ m/2`.
    Weight {
        x: usize,
        y: usize,
        expected: ExpectedCount,
        actual: usize,
    },
    /// `v_xy · v_yx ≠ 0`.
    Orthogonality { x: usize, y: usize, actual: usize },
    /// `v_xy · v_xz ≠ m/3`.
    SharedFirst {
        x: usize,
        y: usize,
        z: usize,
        expected: ExpectedCount,
        actual: usize,
    },
    /// `v_xy · v_yz ≠ m/6`.
    Chain {
        x: usize,
        y: usize,
        z: usize,
        expected: ExpectedCount,
        actual: usize,
    },
}

impl fmt::Display for VectorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorViolation::Divisibility { m } => {
                write!(f, "vector length m={m} is not divisible by 6")
            }
            VectorViolation::Weight {
                x,
                y,
                expected,
                actual,
            } => write!(
                f,
                "weight v({x},{y}): expected {expected}, actual {actual}"
            ),
            VectorViolation::Orthogonality { x, y, actual } => write!(
                f,
                "orthogonality v({x},{y})·v({y},{x}): expected 0, actual {actual}"
            ),
            VectorViolation::SharedFirst {
                x,
                y,
                z,
                expected,
                actual,
            } => write!(
                f,
                "shared-first v({x},{y})·v({x},{z}): expected {expected}, actual {actual}"
            ),
            VectorViolation::Chain {
                x,
                y,
                z,
                expected,
                actual,
            } => write!(
                f,
                "chain v({x},{y})·v({y},{z}): expected {expected}, actual {actual}"
            ),
        }
    }
}

/// A full assignment of one length-`m` vector to every ordered pair of
/// distinct elements of `[n]`, `n ≥ 3`.
///
/// Both orientations `(x, y)` and `(y, x)` are stored explicitly: that the
/// two are complementary in a valid family is a provable consequence of the
/// identities, not an assumption of the representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFamily {
    n: usize,
    m: usize,
    // Row-major n×n with an unused zero vector on the diagonal.
    entries: Vec<BitVector>,
}

impl VectorFamily {
    /// Builds a family by evaluating `f` on every ordered pair.
    pub fn from_fn<F: FnMut(usize, usize) -> BitVector>(n: usize, m: usize, mut f: F) -> Self {
        assert!(n >= 3, "vector families need n >= 3");
        assert!(m <= MAX_LEN);
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    entries.push(BitVector::zeros(m));
                } else {
                    let v = f(x, y);
                    assert_eq!(v.len(), m, "entry ({x},{y}) has the wrong length");
                    entries.push(v);
                }
            }
        }
        VectorFamily { n, m, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, x: usize, y: usize) -> &BitVector {
        assert!(x < self.n && y < self.n && x != y);
        &self.entries[x * self.n + y]
    }

    /// All ordered pairs with their vectors, in lexicographic pair order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &BitVector)> + '_ {
        (0..self.n)
            .cartesian_product(0..self.n)
            .filter(|(x, y)| x != y)
            .map(|(x, y)| (x, y, self.get(x, y)))
    }

    /// Rank of `x` at coordinate `i`: the number of elements ordered before
    /// `x` there, i.e. `n − 1 − Σ_{y≠x} (v_xy)_i`.
    pub fn order(&self, i: usize, x: usize) -> Result<usize, IndexOutOfRange> {
        if i >= self.m {
            return Err(IndexOutOfRange {
                what: "coordinate",
                index: i,
                limit: self.m,
            });
        }
        if x >= self.n {
            return Err(IndexOutOfRange {
                what: "element",
                index: x,
                limit: self.n,
            });
        }
        Ok(self.order_raw(i, x))
    }

    fn order_raw(&self, i: usize, x: usize) -> usize {
        let wins: usize = (0..self.n)
            .filter(|&y| y != x)
            .map(|y| usize::from(self.get(x, y).get(i)))
            .sum();
        self.n - 1 - wins
    }

    /// The relation `x ≺_i y`: distinct and `(v_xy)_i = 1`. Total on equal
    /// elements (`x ≺_i x` is false, not an error).
    pub fn precedes(&self, i: usize, x: usize, y: usize) -> Result<bool, IndexOutOfRange> {
        if i >= self.m {
            return Err(IndexOutOfRange {
                what: "coordinate",
                index: i,
                limit: self.m,
            });
        }
        for element in [x, y] {
            if element >= self.n {
                return Err(IndexOutOfRange {
                    what: "element",
                    index: element,
                    limit: self.n,
                });
            }
        }
        Ok(x != y && self.get(x, y).get(i))
    }

    /// The vector-side 3-mwi criterion: for all distinct `x, y, z`,
    ///
    /// ```text
    /// v_xy·v_xy = m/2   v_xy·v_yx = 0   v_xy·v_xz = m/3   v_xy·v_yz = m/6
    /// ```
    ///
    /// Scan order: divisibility of `m` by 6, weights over ordered pairs,
    /// orthogonality over unordered pairs, then shared-first and chain per
    /// ordered triple, all lexicographic.
    pub fn is_3mwi(&self) -> Verdict<VectorViolation> {
        let m = self.m;
        if !m.is_multiple_of(6) {
            return Verdict::Violated(VectorViolation::Divisibility { m });
        }
        let half = ExpectedCount::new(m, 2);
        for (x, y, v) in self.pairs() {
            let actual = v.weight();
            if !half.matches(actual) {
                return Verdict::Violated(VectorViolation::Weight {
                    x,
                    y,
                    expected: half,
                    actual,
                });
            }
        }
        for x in 0..self.n {
            for y in x + 1..self.n {
                let actual = self.get(x, y).dot_raw(self.get(y, x));
                if actual != 0 {
                    return Verdict::Violated(VectorViolation::Orthogonality { x, y, actual });
                }
            }
        }
        let third = ExpectedCount::new(m, 3);
        let sixth = ExpectedCount::new(m, 6);
        for ((x, y), z) in (0..self.n)
            .cartesian_product(0..self.n)
            .cartesian_product(0..self.n)
        {
            if x == y || y == z || x == z {
                continue;
            }
            let shared = self.get(x, y).dot_raw(self.get(x, z));
            if !third.matches(shared) {
                return Verdict::Violated(VectorViolation::SharedFirst {
                    x,
                    y,
                    z,
                    expected: third,
                    actual: shared,
                });
            }
            let chain = self.get(x, y).dot_raw(self.get(y, z));
            if !sixth.matches(chain) {
                return Verdict::Violated(VectorViolation::Chain {
                    x,
                    y,
                    z,
                    expected: sixth,
                    actual: chain,
                });
            }
        }
        Verdict::Holds
    }

    /// Reconstructs the permutation family whose coordinate `i` ranks every
    /// element by [`order`](Self::order). Succeeds iff each coordinate's
    /// ranks are pairwise distinct; a 3-mwi family always reconstructs, but
    /// the operation is deliberately total over well-formed families so the
    /// failure mode is observable.
    pub fn to_perms(&self) -> Result<PermFamily, NotAPermutation> {
        let mut members = Vec::with_capacity(self.m);
        for i in 0..self.m {
            let mut images = vec![0usize; self.n];
            let mut holder: Vec<Option<usize>> = vec![None; self.n];
            for (x, image) in images.iter_mut().enumerate() {
                let value = self.order_raw(i, x);
                if let Some(first) = holder[value] {
                    return Err(NotAPermutation {
                        index: i,
                        first,
                        second: x,
                        value,
                    });
                }
                holder[value] = Some(x);
                *image = value;
            }
            members.push(Permutation::new(images).expect("distinct ranks in [0, n) form a permutation"));
        }
        Ok(PermFamily::new(members).expect("m >= 1 and uniform order by construction"))
    }
}

impl PermFamily {
    /// The indicator family of this permutation family: for each ordered pair
    /// `(x, y)`, coordinate `i` of `v_xy` records whether member `i` places
    /// `x` before `y`. Defined for any family with `n ≥ 3` and `m ≤ 128`,
    /// 3-mwi or not.
    pub fn to_vectors(&self) -> Result<VectorFamily, OrderTooSmall> {
        if self.n() < 3 {
            return Err(OrderTooSmall {
                n: self.n(),
                required: 3,
            });
        }
        assert!(self.m() <= MAX_LEN, "vector representation supports m <= {MAX_LEN}");
        Ok(VectorFamily::from_fn(self.n(), self.m(), |x, y| {
            BitVector::from_bits(self.members().iter().map(|p| p.image(x) < p.image(y)))
        }))
    }
}

/// The coordinatewise implication `u_i = 1 ∧ w_i = 1 ⇒ v_i = 1`, checked
/// under the hypotheses `u·u = v·v = w·w = m/2`, `u·v = v·w = m/3`,
/// `u·w = m/6` (with `m` the common length). These are exactly the identities
/// a chain `v_xy, v_xz, v_yz` satisfies in a 3-mwi family, and under them the
/// implication provably always holds; the return value exists so the claim
/// can be exercised rather than assumed.
pub fn chain_implication_holds(
    u: &BitVector,
    v: &BitVector,
    w: &BitVector,
) -> Result<bool, PreconditionViolation> {
    let m = u.len();
    for (quantity, len) in [("length of v", v.len()), ("length of w", w.len())] {
        if len != m {
            return Err(PreconditionViolation {
                quantity,
                expected: ExpectedCount::new(m, 1),
                actual: len,
            });
        }
    }
    let checks = [
        ("u·u", u.weight(), 2),
        ("v·v", v.weight(), 2),
        ("w·w", w.weight(), 2),
        ("u·v", u.dot_raw(v), 3),
        ("v·w", v.dot_raw(w), 3),
        ("u·w", u.dot_raw(w), 6),
    ];
    for (quantity, actual, divisor) in checks {
        let expected = ExpectedCount::new(m, divisor);
        if !expected.matches(actual) {
            return Err(PreconditionViolation {
                quantity,
                expected,
                actual,
            });
        }
    }
    Ok(u.word() & w.word() & !v.word() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Verdict;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn witness_perms() -> PermFamily {
        let members = ["3102", "2013", "2130", "2310", "0312", "0132"]
            .iter()
            .map(|s| Permutation::from_compact(s).unwrap())
            .collect();
        PermFamily::new(members).unwrap()
    }

    /// The six canonical-orientation vectors of the witness family.
    const WITNESS_VECTORS: [((usize, usize), &str); 6] = [
        ((0, 1), "000111"),
        ((0, 2), "001011"),
        ((0, 3), "010011"),
        ((1, 2), "011001"),
        ((1, 3), "110001"),
        ((2, 3), "110010"),
    ];

    fn witness_vectors() -> VectorFamily {
        witness_perms().to_vectors().unwrap()
    }

    #[test]
    fn bitstring_round_trip_and_orientation() {
        let v = bv("000111");
        assert_eq!(v.len(), 6);
        assert!(!v.get(0));
        assert!(v.get(3));
        assert_eq!(v.to_string(), "000111");
    }

    #[test]
    fn bitstring_rejects_garbage() {
        assert_eq!(
            "0002".parse::<BitVector>(),
            Err(InvalidBitstring::BadCharacter { found: '2' })
        );
    }

    #[test]
    fn lexicographic_order_matches_strings() {
        let mut strings = vec!["000111", "111000", "001011", "011001", "010011"];
        let mut vectors: Vec<BitVector> = strings.iter().map(|s| bv(s)).collect();
        strings.sort();
        vectors.sort();
        let rendered: Vec<String> = vectors.iter().map(|v| v.to_string()).collect();
        assert_eq!(rendered, strings);
    }

    #[test]
    fn dot_products_from_reference_vectors() {
        assert_eq!(bv("000111").dot(&bv("001011")), Ok(2));
        assert_eq!(bv("000111").dot(&bv("011001")), Ok(1));
        assert_eq!(bv("000111").dot(&BitVector::zeros(6)), Ok(0));
        assert_eq!(
            bv("000111").dot(&bv("0101")),
            Err(LengthMismatch { left: 6, right: 4 })
        );
    }

    #[test]
    fn weight_is_self_dot() {
        for s in ["000111", "101010", "000000", "111111"] {
            let v = bv(s);
            assert_eq!(v.dot(&v).unwrap(), v.weight());
        }
    }

    #[test]
    fn max_length_vectors() {
        let ones = BitVector::from_bits(std::iter::repeat_n(true, 128));
        assert_eq!(ones.weight(), 128);
        assert_eq!(ones.complement().weight(), 0);
        assert_eq!(ones.dot(&ones), Ok(128));
    }

    #[test]
    fn witness_conversion_reproduces_reference_vectors() {
        let v = witness_vectors();
        for ((x, y), expected) in WITNESS_VECTORS {
            assert_eq!(v.get(x, y).to_string(), expected, "v({x},{y})");
            assert_eq!(v.get(y, x), &bv(expected).complement(), "v({y},{x})");
        }
    }

    #[test]
    fn identity_family_conversion() {
        let f = PermFamily::new(vec![Permutation::identity(3); 6]).unwrap();
        let v = f.to_vectors().unwrap();
        for x in 0..3 {
            for y in 0..3 {
                if x < y {
                    assert_eq!(v.get(x, y).to_string(), "111111");
                } else if x > y {
                    assert_eq!(v.get(x, y).to_string(), "000000");
                }
            }
        }
    }

    #[test]
    fn conversion_requires_order_three() {
        let f = PermFamily::new(vec![Permutation::identity(2); 2]).unwrap();
        assert_eq!(f.to_vectors(), Err(OrderTooSmall { n: 2, required: 3 }));
    }

    #[test]
    fn witness_vectors_are_3mwi() {
        assert!(witness_vectors().is_3mwi().holds());
        assert!(PermFamily::symmetric_group(4)
            .to_vectors()
            .unwrap()
            .is_3mwi()
            .holds());
    }

    #[test]
    fn tampered_witness_fails_orthogonality_first() {
        // Replace v(2,3) only; its stored reverse no longer complements it.
        let good = witness_vectors();
        let v = VectorFamily::from_fn(4, 6, |x, y| {
            if (x, y) == (2, 3) {
                bv("010110")
            } else {
                *good.get(x, y)
            }
        });
        // Independent recount: weights all still m/2, so the first failure in
        // scan order is the (2,3) orthogonality identity.
        for (_, _, vec) in v.pairs() {
            assert_eq!(vec.weight(), 3);
        }
        let dot = bv("010110").dot(&bv("110010").complement()).unwrap();
        assert_ne!(dot, 0);
        assert_eq!(
            v.is_3mwi().violation(),
            Some(&VectorViolation::Orthogonality {
                x: 2,
                y: 3,
                actual: dot
            })
        );
    }

    #[test]
    fn divisibility_gates_the_identities() {
        let f = PermFamily::new(vec![Permutation::identity(3); 5]).unwrap();
        let v = f.to_vectors().unwrap();
        assert_eq!(
            v.is_3mwi().violation(),
            Some(&VectorViolation::Divisibility { m: 5 })
        );
    }

    #[test]
    fn order_matches_reference_ranks() {
        let v = witness_vectors();
        assert_eq!(v.order(0, 0), Ok(3));
        assert_eq!(v.order(0, 2), Ok(0));
        let ranks: Vec<usize> = (0..4).map(|x| v.order(0, x).unwrap()).collect();
        assert_eq!(ranks, vec![3, 1, 0, 2]); // member 0 is 3102
        assert_eq!(
            v.order(6, 0),
            Err(IndexOutOfRange {
                what: "coordinate",
                index: 6,
                limit: 6
            })
        );
        assert_eq!(
            v.order(0, 4),
            Err(IndexOutOfRange {
                what: "element",
                index: 4,
                limit: 4
            })
        );
    }

    #[test]
    fn order_on_identity_family_is_the_element() {
        let f = PermFamily::new(vec![Permutation::identity(3); 6]).unwrap();
        let v = f.to_vectors().unwrap();
        for i in 0..6 {
            for x in 0..3 {
                assert_eq!(v.order(i, x), Ok(x));
            }
        }
    }

    #[test]
    fn round_trip_restores_the_family() {
        for f in [
            witness_perms(),
            PermFamily::symmetric_group(3),
            PermFamily::symmetric_group(4),
            PermFamily::new(vec![Permutation::identity(5); 7]).unwrap(),
        ] {
            assert_eq!(f.to_vectors().unwrap().to_perms().unwrap(), f);
        }
    }

    #[test]
    fn all_zero_family_is_not_reconstructible() {
        // Every pair mapped to the zero vector (both orientations), so every
        // element gets rank n-1 at every coordinate.
        let v = VectorFamily::from_fn(3, 6, |_, _| BitVector::zeros(6));
        assert_eq!(
            v.to_perms(),
            Err(NotAPermutation {
                index: 0,
                first: 0,
                second: 1,
                value: 2
            })
        );
    }

    #[test]
    fn precedes_matches_member_order() {
        let v = witness_vectors();
        // Member 0 is 3102: element 2 comes before element 1.
        assert_eq!(v.precedes(0, 2, 1), Ok(true));
        assert_eq!(v.precedes(0, 1, 2), Ok(false));
        assert_eq!(v.precedes(0, 1, 1), Ok(false));
        assert_eq!(
            v.precedes(9, 0, 1),
            Err(IndexOutOfRange {
                what: "coordinate",
                index: 9,
                limit: 6
            })
        );

        let id = PermFamily::new(vec![Permutation::identity(3); 6]).unwrap();
        let idv = id.to_vectors().unwrap();
        for i in 0..6 {
            for x in 0..3 {
                for y in 0..3 {
                    assert_eq!(idv.precedes(i, x, y), Ok(x < y));
                }
            }
        }
    }

    #[test]
    fn chain_implication_on_reference_triples() {
        assert_eq!(
            chain_implication_holds(&bv("000111"), &bv("001011"), &bv("011001")),
            Ok(true)
        );
        // (u, v, w) = (v02, v03, v23) also satisfies the hypotheses.
        let (u, v, w) = (bv("001011"), bv("010011"), bv("110010"));
        assert_eq!(u.dot(&v), Ok(2));
        assert_eq!(v.dot(&w), Ok(2));
        assert_eq!(u.dot(&w), Ok(1));
        assert_eq!(chain_implication_holds(&u, &v, &w), Ok(true));
    }

    #[test]
    fn chain_implication_rejects_bad_hypotheses() {
        let v = bv("000111");
        assert_eq!(
            chain_implication_holds(&v, &v, &v),
            Err(PreconditionViolation {
                quantity: "u·v",
                expected: ExpectedCount::new(6, 3),
                actual: 3
            })
        );
    }

    #[test]
    fn is_3mwi_matches_triple_def_on_small_families() {
        let families = [
            witness_perms(),
            PermFamily::symmetric_group(3),
            PermFamily::new(vec![Permutation::identity(3); 6]).unwrap(),
            PermFamily::new(vec![Permutation::identity(4); 6]).unwrap(),
        ];
        for f in families {
            let perms = f.is_3mwi_triple_def().unwrap().holds();
            let vectors = f.to_vectors().unwrap().is_3mwi().holds();
            assert_eq!(perms, vectors);
        }
    }

    #[test]
    fn verdict_accessors() {
        let v: Verdict<u32> = Verdict::Holds;
        assert!(v.holds());
        assert_eq!(v.violation(), None);
        let v = Verdict::Violated(7u32);
        assert!(!v.holds());
        assert_eq!(v.violation(), Some(&7));
    }
}
