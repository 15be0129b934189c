//! Exhaustive backtracking search for 3-mwi vector families, with symmetry
//! reduction over coordinate permutations and machine-checkable certificates
//! of existence or exhaustion.
//!
//! All family vectors are balanced (weight `m/2`), so the search space per
//! pair is the set of balanced hypercube vertices. Fixing the first three
//! vectors to a canonical seed quotients out the `m!` coordinate
//! permutations; [`verify_canonical_seed`] checks that reduction exhaustively
//! instead of assuming it.

use std::fmt;
use std::num::NonZeroUsize;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::vector::{BitVector, PreconditionViolation, VectorFamily, MAX_LEN};
use crate::ExpectedCount;

/// Balanced vectors have odd length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("balanced vectors require an even length, got m={m}")]
pub struct ParityError {
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no seed triple exists for m={m}; family sizes must be positive multiples of 6")]
    NoSeed { m: usize },
    #[error("m={m} is not supported here (maximum {max})")]
    Unsupported { m: usize, max: usize },
    #[error("search targets need n >= 3, got n={n}")]
    TargetTooSmall { n: usize },
}

/// Lazy enumeration of all `C(m, m/2)` balanced vectors of length `m`, in
/// lexicographic bitstring order.
pub fn enumerate_balanced(m: usize) -> Result<Balanced, ParityError> {
    assert!(m <= MAX_LEN);
    if !m.is_multiple_of(2) {
        return Err(ParityError { m });
    }
    let w = m / 2;
    let first = if w == 0 { 0 } else { (1u128 << w) - 1 };
    Ok(Balanced {
        len: m,
        last: first << (m - w),
        next: Some(first),
    })
}

#[derive(Debug, Clone)]
pub struct Balanced {
    len: usize,
    last: u128,
    next: Option<u128>,
}

impl Iterator for Balanced {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        let current = self.next?;
        // Gosper's hack: next integer with the same popcount. Guarded by the
        // explicit last value so the ripple add cannot overflow.
        self.next = (current != self.last).then(|| {
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            (((current ^ ripple) >> 2) / low) | ripple
        });
        Some(BitVector::from_word(self.len, current))
    }
}

/// All balanced vectors `u` with `u · v = d`, in lexicographic order.
/// Requires `v` itself to be balanced.
pub fn candidate_set(v: &BitVector, d: usize) -> Result<Vec<BitVector>, PreconditionViolation> {
    let m = v.len();
    let half = ExpectedCount::new(m, 2);
    if !half.matches(v.weight()) {
        return Err(PreconditionViolation {
            quantity: "v·v",
            expected: half,
            actual: v.weight(),
        });
    }
    let balanced = enumerate_balanced(m).expect("a balanced vector has even length");
    Ok(balanced.filter(|u| u.dot_raw(v) == d).collect())
}

/// Search state: all pairs among the prefix `{0, …, prefix-1}` of the ground
/// set carry vectors (reverse orientations implied by complement), and every
/// identity among assigned pairs already holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFamily {
    n_target: usize,
    m: usize,
    prefix: usize,
    // Canonical orientations x < y, indexed y*(y-1)/2 + x: grouped by the
    // larger element, so an extension appends one contiguous block.
    pairs: Vec<BitVector>,
}

impl PartialFamily {
    pub fn n_target(&self) -> usize {
        self.n_target
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of ground elements covered so far.
    pub fn prefix(&self) -> usize {
        self.prefix
    }

    pub fn is_complete(&self) -> bool {
        self.prefix == self.n_target
    }

    fn canon(&self, x: usize, y: usize) -> &BitVector {
        debug_assert!(x < y && y < self.prefix);
        &self.pairs[y * (y - 1) / 2 + x]
    }

    /// Vector for the ordered pair `(x, y)` within the covered prefix; the
    /// reverse orientation is the complement of the stored one.
    pub fn get(&self, x: usize, y: usize) -> BitVector {
        assert!(x != y && x < self.prefix && y < self.prefix);
        if x < y {
            *self.canon(x, y)
        } else {
            self.canon(y, x).complement()
        }
    }

    /// The completed family, once every ground element is covered.
    pub fn to_vector_family(&self) -> Option<VectorFamily> {
        self.is_complete()
            .then(|| VectorFamily::from_fn(self.n_target, self.m, |x, y| self.get(x, y)))
    }
}

/// The lexicographically least valid assignment of the first three vectors
/// `(v_01, v_02, v_12)`, i.e. balanced vectors with `v_01·v_02 = m/3`,
/// `v_01·v_12 = m/6` and `v_02·v_12 = m/3`. Every valid triple is equivalent
/// to it under a coordinate permutation (see [`verify_canonical_seed`]), so
/// searches may start here without losing any family.
pub fn canonical_seed(m: usize, n_target: usize) -> Result<PartialFamily, SearchError> {
    if m > MAX_LEN {
        return Err(SearchError::Unsupported { m, max: MAX_LEN });
    }
    if n_target < 3 {
        return Err(SearchError::TargetTooSmall { n: n_target });
    }
    if m == 0 || !m.is_multiple_of(6) {
        return Err(SearchError::NoSeed { m });
    }
    let (third, sixth) = (m / 3, m / 6);
    let balanced = || enumerate_balanced(m).expect("6 | m implies m even");
    for a in balanced() {
        for b in balanced().filter(|b| a.dot_raw(b) == third) {
            let completion = balanced().find(|c| a.dot_raw(c) == sixth && b.dot_raw(c) == third);
            if let Some(c) = completion {
                return Ok(PartialFamily {
                    n_target,
                    m,
                    prefix: 3,
                    pairs: vec![a, b, c],
                });
            }
        }
    }
    Err(SearchError::NoSeed { m })
}

/// Whether two vector triples are images of each other under a simultaneous
/// permutation of their coordinates. Such a permutation exists exactly when
/// the multisets of per-coordinate columns `(a_i, b_i, c_i)` agree.
pub fn coordinate_equivalent(a: &[BitVector; 3], b: &[BitVector; 3]) -> bool {
    let m = a[0].len();
    if a.iter().chain(b.iter()).any(|v| v.len() != m) {
        return false;
    }
    column_counts(a) == column_counts(b)
}

fn column_counts(t: &[BitVector; 3]) -> [usize; 8] {
    let mut counts = [0usize; 8];
    for i in 0..t[0].len() {
        let pattern = (usize::from(t[0].get(i)) << 2)
            | (usize::from(t[1].get(i)) << 1)
            | usize::from(t[2].get(i));
        counts[pattern] += 1;
    }
    counts
}

/// Exhaustively checks the symmetry reduction behind [`canonical_seed`]:
/// every valid seed triple for this `m` must be coordinate-permutation
/// equivalent to the canonical one. Enumeration is only feasible for small
/// `m`; supported up to `m = 12`.
pub fn verify_canonical_seed(m: usize) -> Result<bool, SearchError> {
    const VERIFY_MAX: usize = 12;
    if m > VERIFY_MAX {
        return Err(SearchError::Unsupported { m, max: VERIFY_MAX });
    }
    let seed = canonical_seed(m, 3)?;
    let canon = [seed.pairs[0], seed.pairs[1], seed.pairs[2]];
    let (third, sixth) = (m / 3, m / 6);
    let balanced: Vec<BitVector> = enumerate_balanced(m).unwrap().collect();
    for a in &balanced {
        let chain_partners: Vec<&BitVector> =
            balanced.iter().filter(|c| a.dot_raw(c) == sixth).collect();
        for b in balanced.iter().filter(|b| a.dot_raw(b) == third) {
            for c in chain_partners.iter().filter(|c| b.dot_raw(c) == third) {
                if !coordinate_equivalent(&[*a, *b, **c], &canon) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All ways to assign vectors `v_{x,k}` for the next ground element
/// `k = prefix` such that every identity among pairs within `{0, …, k}`
/// holds, in lexicographic order of the assigned tuple. An empty result
/// means the branch is dead (or the state is already complete).
pub fn extend(p: &PartialFamily) -> Vec<PartialFamily> {
    extend_impl(p).1
}

fn extend_impl(p: &PartialFamily) -> (Vec<usize>, Vec<PartialFamily>) {
    let k = p.prefix;
    if k >= p.n_target {
        return (Vec::new(), Vec::new());
    }
    debug_assert_eq!(p.m % 6, 0);
    let (third, sixth) = (p.m / 3, p.m / 6);

    // Per-position candidate sets: v_{x,k} must satisfy the shared-first
    // identity against each v_{x,y} (y > x) and the chain identity against
    // each v_{y,x} (y < x); together with the cross products below this is
    // every identity a triple {x, y, k} imposes.
    let candidates: Vec<Vec<BitVector>> = (0..k)
        .map(|x| {
            enumerate_balanced(p.m)
                .expect("6 | m")
                .filter(|u| {
                    (0..k).all(|y| {
                        if y == x {
                            true
                        } else if y < x {
                            p.canon(y, x).dot_raw(u) == sixth
                        } else {
                            p.canon(x, y).dot_raw(u) == third
                        }
                    })
                })
                .collect()
        })
        .collect();
    let sizes = candidates.iter().map(Vec::len).collect();

    let mut children = Vec::new();
    let mut chosen: Vec<BitVector> = Vec::with_capacity(k);
    assemble(p, &candidates, third, &mut chosen, &mut children);
    (sizes, children)
}

fn assemble(
    p: &PartialFamily,
    candidates: &[Vec<BitVector>],
    third: usize,
    chosen: &mut Vec<BitVector>,
    children: &mut Vec<PartialFamily>,
) {
    let x = chosen.len();
    if x == candidates.len() {
        let mut pairs = p.pairs.clone();
        pairs.extend_from_slice(chosen);
        children.push(PartialFamily {
            n_target: p.n_target,
            m: p.m,
            prefix: p.prefix + 1,
            pairs,
        });
        return;
    }
    for u in &candidates[x] {
        // v_{x,k} · v_{y,k} = m/3 for every y already placed.
        if chosen.iter().all(|c| c.dot_raw(u) == third) {
            chosen.push(*u);
            assemble(p, candidates, third, chosen, children);
            chosen.pop();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    Witness,
    Exhausted,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::Witness => write!(f, "WITNESS"),
            CertificateKind::Exhausted => write!(f, "EXHAUSTED"),
        }
    }
}

/// Reproducible record of a search outcome: either at least one witness
/// family, or the exhaustion of the whole symmetry-reduced tree.
///
/// `nodes_explored` counts visited states (the seed and every accepted
/// extension); it is identical across runs and across degrees of
/// parallelism. `candidate_log` traces the candidate sets of the first two
/// extension levels, mirroring how a by-hand case analysis branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub m: usize,
    pub n: usize,
    pub nodes_explored: u64,
    pub symmetry_reduction: String,
    pub candidate_log: Option<Vec<String>>,
    pub witnesses: Vec<VectorFamily>,
}

impl Certificate {
    /// The first witness found, when there is one.
    pub fn witness(&self) -> Option<&VectorFamily> {
        self.witnesses.first()
    }
}

const LOGGED_PREFIX_MAX: usize = 4;
const CANDIDATE_LOG_MAX: usize = 64;

fn log_entry(parent: &PartialFamily, sizes: &[usize], children: usize) -> String {
    let k = parent.prefix;
    let context = if k == 3 {
        "seed".to_string()
    } else {
        (0..k - 1)
            .map(|x| format!("v({x},{})={}", k - 1, parent.canon(x, k - 1)))
            .join(" ")
    };
    format!("extend element {k} under {context}: candidates {sizes:?}; children {children}")
}

/// Depth-first search for complete 3-mwi vector families of size `m` on
/// `[n]`, starting from the canonical seed. Stops after `limit` witnesses
/// (`None` = traverse everything). The resulting certificate is
/// deterministic: bounded runs follow the canonical lexicographic
/// depth-first order, and exhaustive runs may fan out over sibling branches
/// in parallel but merge branch results back in that same order.
pub fn search_families(
    m: usize,
    n: usize,
    limit: Option<NonZeroUsize>,
) -> Result<Certificate, SearchError> {
    let seed = canonical_seed(m, n)?;
    let symmetry_reduction = format!(
        "coordinate permutations of [m]; canonical seed v(0,1)={} v(0,2)={} v(1,2)={}",
        seed.canon(0, 1),
        seed.canon(0, 2),
        seed.canon(1, 2)
    );

    let mut nodes: u64 = 1; // the seed itself
    let mut witnesses = Vec::new();
    let mut log = Vec::new();

    if seed.is_complete() {
        witnesses.push(seed.to_vector_family().unwrap());
    } else {
        let (sizes, children) = extend_impl(&seed);
        log.push(log_entry(&seed, &sizes, children.len()));
        match limit {
            Some(limit) => {
                for child in children {
                    explore_sequential(child, limit.get(), &mut nodes, &mut witnesses, &mut log);
                    if witnesses.len() >= limit.get() {
                        break;
                    }
                }
            }
            None => {
                let branches: Vec<Branch> = children.into_par_iter().map(explore_branch).collect();
                for branch in branches {
                    nodes += branch.nodes;
                    witnesses.extend(branch.witnesses);
                    log.extend(branch.log);
                }
            }
        }
    }

    if log.len() > CANDIDATE_LOG_MAX {
        log.truncate(CANDIDATE_LOG_MAX);
        log.push(format!("(truncated to first {CANDIDATE_LOG_MAX} extension records)"));
    }
    let kind = if witnesses.is_empty() {
        CertificateKind::Exhausted
    } else {
        CertificateKind::Witness
    };
    Ok(Certificate {
        kind,
        m,
        n,
        nodes_explored: nodes,
        symmetry_reduction,
        candidate_log: (!log.is_empty()).then_some(log),
        witnesses,
    })
}

fn explore_sequential(
    state: PartialFamily,
    limit: usize,
    nodes: &mut u64,
    witnesses: &mut Vec<VectorFamily>,
    log: &mut Vec<String>,
) {
    *nodes += 1;
    if state.is_complete() {
        witnesses.push(state.to_vector_family().unwrap());
        return;
    }
    let (sizes, children) = extend_impl(&state);
    if state.prefix <= LOGGED_PREFIX_MAX {
        log.push(log_entry(&state, &sizes, children.len()));
    }
    for child in children {
        explore_sequential(child, limit, nodes, witnesses, log);
        if witnesses.len() >= limit {
            return;
        }
    }
}

struct Branch {
    nodes: u64,
    witnesses: Vec<VectorFamily>,
    log: Vec<String>,
}

fn explore_branch(state: PartialFamily) -> Branch {
    let mut branch = Branch {
        nodes: 0,
        witnesses: Vec::new(),
        log: Vec::new(),
    };
    explore_full(state, &mut branch);
    branch
}

fn explore_full(state: PartialFamily, branch: &mut Branch) {
    branch.nodes += 1;
    if state.is_complete() {
        branch.witnesses.push(state.to_vector_family().unwrap());
        return;
    }
    let (sizes, children) = extend_impl(&state);
    if state.prefix <= LOGGED_PREFIX_MAX {
        branch.log.push(log_entry(&state, &sizes, children.len()));
    }
    for child in children {
        explore_full(child, branch);
    }
}

/// Result of [`max_order`]: the largest ground-set order admitting a 3-mwi
/// family of size `m`, with one certificate per order tried (witnesses for
/// `3..=n_max`, exhaustion for `n_max + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxOrder {
    pub n_max: usize,
    pub certificates: Vec<Certificate>,
}

impl MaxOrder {
    pub fn witness_certificate(&self) -> &Certificate {
        &self.certificates[self.certificates.len() - 2]
    }

    pub fn exhaustion_certificate(&self) -> &Certificate {
        self.certificates.last().unwrap()
    }
}

/// Climbs `n = 3, 4, …` until the search exhausts, which must happen because
/// restricting a valid family to a prefix of the ground set keeps it valid.
pub fn max_order(m: usize) -> Result<MaxOrder, SearchError> {
    let mut certificates = Vec::new();
    for n in 3.. {
        let certificate = search_families(m, n, NonZeroUsize::new(1))?;
        let exhausted = certificate.kind == CertificateKind::Exhausted;
        certificates.push(certificate);
        if exhausted {
            return Ok(MaxOrder {
                n_max: n - 1,
                certificates,
            });
        }
    }
    unreachable!("the search exhausts at some finite order")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn bvs(strings: &[&str]) -> Vec<BitVector> {
        strings.iter().map(|s| bv(s)).collect()
    }

    const SEED: [&str; 3] = ["000111", "001011", "011001"];

    #[test]
    fn balanced_enumeration_m6() {
        let all: Vec<BitVector> = enumerate_balanced(6).unwrap().collect();
        assert_eq!(all.len(), 20);
        assert_eq!(all.first().unwrap().to_string(), "000111");
        assert_eq!(all.last().unwrap().to_string(), "111000");
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|v| v.weight() == 3));
    }

    #[test]
    fn balanced_enumeration_small() {
        let two: Vec<String> = enumerate_balanced(2)
            .unwrap()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(two, ["01", "10"]);
        assert_eq!(enumerate_balanced(4).unwrap().count(), 6);
        assert_eq!(enumerate_balanced(0).unwrap().count(), 1);
        assert_eq!(enumerate_balanced(5).unwrap_err(), ParityError { m: 5 });
    }

    #[test]
    fn candidate_sets_from_the_seed() {
        let v01 = bv(SEED[0]);
        let v02 = bv(SEED[1]);
        let v12 = bv(SEED[2]);

        let intersect = |a: Vec<BitVector>, b: Vec<BitVector>| -> Vec<BitVector> {
            a.into_iter().filter(|v| b.contains(v)).collect()
        };
        let v0 = intersect(
            candidate_set(&v01, 2).unwrap(),
            candidate_set(&v02, 2).unwrap(),
        );
        let v1 = intersect(
            candidate_set(&v01, 1).unwrap(),
            candidate_set(&v12, 2).unwrap(),
        );
        let v2 = intersect(
            candidate_set(&v02, 1).unwrap(),
            candidate_set(&v12, 1).unwrap(),
        );

        let as_set = |v: Vec<BitVector>| {
            let mut sorted = v;
            sorted.sort();
            sorted
        };
        let mut expected0 = bvs(&["010011", "100011", "001101", "001110"]);
        let mut expected1 = bvs(&["101001", "110001", "011010", "011100"]);
        let mut expected2 = bvs(&["100101", "101100", "010110", "110010"]);
        expected0.sort();
        expected1.sort();
        expected2.sort();
        assert_eq!(as_set(v0), expected0);
        assert_eq!(as_set(v1), expected1);
        assert_eq!(as_set(v2), expected2);
    }

    #[test]
    fn candidate_set_requires_balanced_input() {
        let err = candidate_set(&bv("110111"), 2).unwrap_err();
        assert_eq!(err.quantity, "v·v");
        assert_eq!(err.actual, 5);
    }

    #[test]
    fn candidate_set_counts_match_the_combinatorial_formula() {
        // A balanced u with u·v = d picks d ones inside v's support and
        // m/2 - d outside it, so |f(v, d)| = C(m/2, d) * C(m/2, m/2 - d).
        fn choose(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for m in [2usize, 4, 6, 8, 10] {
            let v = enumerate_balanced(m).unwrap().next().unwrap();
            for d in 0..=m / 2 {
                let set = candidate_set(&v, d).unwrap();
                assert_eq!(set.len(), choose(m / 2, d) * choose(m / 2, m / 2 - d));
                assert!(set.iter().all(|u| u.weight() == m / 2 && u.dot_raw(&v) == d));
                assert!(set.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn canonical_seed_m6_is_the_reference_triple() {
        let seed = canonical_seed(6, 5).unwrap();
        assert_eq!(seed.prefix(), 3);
        assert_eq!(seed.get(0, 1), bv(SEED[0]));
        assert_eq!(seed.get(0, 2), bv(SEED[1]));
        assert_eq!(seed.get(1, 2), bv(SEED[2]));
        assert_eq!(seed.get(1, 0), bv(SEED[0]).complement());
    }

    #[test]
    fn canonical_seed_error_cases() {
        assert_eq!(canonical_seed(4, 4), Err(SearchError::NoSeed { m: 4 }));
        assert_eq!(canonical_seed(0, 4), Err(SearchError::NoSeed { m: 0 }));
        assert_eq!(canonical_seed(6, 2), Err(SearchError::TargetTooSmall { n: 2 }));
        assert_eq!(
            canonical_seed(130, 4),
            Err(SearchError::Unsupported { m: 130, max: 128 })
        );
    }

    #[test]
    fn canonical_seed_m12() {
        // Frozen from an independent enumeration of all valid triples at
        // m = 12: this is the lexicographic minimum.
        let seed = canonical_seed(12, 4).unwrap();
        assert_eq!(seed.get(0, 1), bv("000000111111"));
        assert_eq!(seed.get(0, 2), bv("000011001111"));
        assert_eq!(seed.get(1, 2), bv("001111000011"));
        assert_eq!(seed.get(0, 1).dot(&seed.get(0, 2)), Ok(4));
        assert_eq!(seed.get(0, 1).dot(&seed.get(1, 2)), Ok(2));
        assert_eq!(seed.get(0, 2).dot(&seed.get(1, 2)), Ok(4));
    }

    #[test]
    fn extend_seed_counts_and_reference_branch() {
        let seed = canonical_seed(6, 5).unwrap();
        let children = extend(&seed);
        assert_eq!(children.len(), 12);

        let reference = children
            .iter()
            .find(|c| {
                c.get(0, 3) == bv("010011")
                    && c.get(1, 3) == bv("110001")
                    && c.get(2, 3) == bv("110010")
            })
            .expect("the reference assignment must be among the children");

        // That branch admits no fifth element.
        assert!(extend(reference).is_empty());

        // Lexicographically first child of the seed.
        assert_eq!(children[0].get(0, 3), bv("001101"));
        assert_eq!(children[0].get(1, 3), bv("011100"));
        assert_eq!(children[0].get(2, 3), bv("101100"));
    }

    #[test]
    fn extend_complete_state_is_empty() {
        let seed = canonical_seed(6, 3).unwrap();
        assert!(seed.is_complete());
        assert!(extend(&seed).is_empty());
    }

    fn assert_all_assigned_identities(p: &PartialFamily) {
        let m = p.m();
        let k = p.prefix();
        for x in 0..k {
            for y in 0..k {
                if x == y {
                    continue;
                }
                assert_eq!(p.get(x, y).weight() * 2, m);
                assert_eq!(p.get(x, y).dot(&p.get(y, x)), Ok(0));
                for z in 0..k {
                    if z == x || z == y {
                        continue;
                    }
                    assert_eq!(p.get(x, y).dot(&p.get(x, z)).unwrap() * 3, m);
                    assert_eq!(p.get(x, y).dot(&p.get(y, z)).unwrap() * 6, m);
                }
            }
        }
    }

    #[test]
    fn extend_children_satisfy_every_assigned_identity() {
        for m in [6usize, 12] {
            let seed = canonical_seed(m, 5).unwrap();
            assert_all_assigned_identities(&seed);
            let children = extend(&seed);
            assert!(!children.is_empty());
            for child in &children {
                assert_all_assigned_identities(child);
            }
            // Children come out in lexicographic order of the assigned tuple.
            let tuples: Vec<Vec<BitVector>> = children
                .iter()
                .map(|c| (0..3).map(|x| c.get(x, 3)).collect())
                .collect();
            assert!(tuples.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn seed_reduction_is_exhaustive_at_m6() {
        assert_eq!(verify_canonical_seed(6), Ok(true));
        assert_eq!(verify_canonical_seed(4), Err(SearchError::NoSeed { m: 4 }));
        assert_eq!(
            verify_canonical_seed(18),
            Err(SearchError::Unsupported { m: 18, max: 12 })
        );
    }

    #[test]
    fn altered_triple_is_not_equivalent_to_the_seed() {
        let canon = [bv(SEED[0]), bv(SEED[1]), bv(SEED[2])];
        // Swap v12 for a vector violating the seed identities.
        let altered = [bv(SEED[0]), bv(SEED[1]), bv("010110")];
        assert!(!coordinate_equivalent(&altered, &canon));
        assert!(coordinate_equivalent(&canon, &canon));
    }

    #[test]
    fn search_finds_first_witness_quickly() {
        let cert = search_families(6, 4, NonZeroUsize::new(1)).unwrap();
        assert_eq!(cert.kind, CertificateKind::Witness);
        assert_eq!(cert.nodes_explored, 2); // seed + first child
        assert_eq!(cert.witnesses.len(), 1);
        let w = cert.witness().unwrap();
        assert_eq!(w.get(0, 3).to_string(), "001101");
        assert!(w.is_3mwi().holds());
    }

    #[test]
    fn exhaustive_search_at_n4() {
        let cert = search_families(6, 4, None).unwrap();
        assert_eq!(cert.kind, CertificateKind::Witness);
        assert_eq!(cert.witnesses.len(), 12);
        assert_eq!(cert.nodes_explored, 13);
        assert!(cert.witnesses.iter().all(|w| w.is_3mwi().holds()));
        assert!(cert
            .witnesses
            .iter()
            .all(|w| w.to_perms().unwrap().is_3mwi_triple_def().unwrap().holds()));

        // The reference family is among the witnesses.
        let reference = cert.witnesses.iter().find(|w| {
            *w.get(0, 3) == bv("010011")
                && *w.get(1, 3) == bv("110001")
                && *w.get(2, 3) == bv("110010")
        });
        let perms = reference.expect("reference witness").to_perms().unwrap();
        let compact: Vec<String> = perms
            .members()
            .iter()
            .map(|p| p.images().iter().map(|v| v.to_string()).collect())
            .collect();
        assert_eq!(compact, ["3102", "2013", "2130", "2310", "0312", "0132"]);
    }

    #[test]
    fn order_five_is_exhausted() {
        let cert = search_families(6, 5, NonZeroUsize::new(1)).unwrap();
        assert_eq!(cert.kind, CertificateKind::Exhausted);
        assert!(cert.witnesses.is_empty());
        assert_eq!(cert.nodes_explored, 13);
        let log = cert.candidate_log.as_ref().unwrap();
        assert_eq!(log.len(), 13); // seed extension + one entry per branch
        assert_eq!(
            log[0],
            "extend element 3 under seed: candidates [4, 4, 4]; children 12"
        );
    }

    #[test]
    fn order_three_witness_is_the_seed() {
        let cert = search_families(6, 3, NonZeroUsize::new(1)).unwrap();
        assert_eq!(cert.kind, CertificateKind::Witness);
        assert_eq!(cert.nodes_explored, 1);
        let seed = canonical_seed(6, 3).unwrap();
        assert_eq!(cert.witness(), seed.to_vector_family().as_ref());
    }

    #[test]
    fn certificates_are_deterministic_across_modes() {
        // A limit larger than the witness count traverses the same tree as
        // the unlimited (parallel) run; certificates must match exactly.
        let exhaustive = search_families(6, 4, None).unwrap();
        let bounded = search_families(6, 4, NonZeroUsize::new(1000)).unwrap();
        assert_eq!(exhaustive, bounded);
        let again = search_families(6, 4, None).unwrap();
        assert_eq!(exhaustive, again);
    }

    #[test]
    fn max_order_at_m6() {
        let result = max_order(6).unwrap();
        assert_eq!(result.n_max, 4);
        assert_eq!(result.certificates.len(), 3);
        assert_eq!(result.witness_certificate().n, 4);
        assert_eq!(result.witness_certificate().kind, CertificateKind::Witness);
        assert!(result
            .witness_certificate()
            .witness()
            .unwrap()
            .is_3mwi()
            .holds());
        assert_eq!(result.exhaustion_certificate().n, 5);
        assert_eq!(
            result.exhaustion_certificate().kind,
            CertificateKind::Exhausted
        );
        assert_eq!(max_order(8), Err(SearchError::NoSeed { m: 8 }));
    }
}
