//! Permutations of `{1..n}` in one-line notation.
//!
//! Labels are 1-based everywhere in the public API, matching the usual
//! combinatorial convention. A permutation is stored as the sequence
//! `[π(1), π(2), …, π(n)]`. Composition is right-to-left: `p.compose(&q)`
//! applies `q` first. Multiplying by a transposition on the right,
//! `p · (i,j)`, swaps the *values at positions* `i` and `j` — this is the
//! marker model used throughout the crate: vertex `i` holds marker `π(i)`,
//! and a switch on edge `(i,j)` exchanges the two markers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Vertex/marker label. Labels are 1-based in all public I/O.
pub type Label = u8;

/// Largest `n` for which `n!` fits in `u64` with room to spare; ranks of
/// longer permutations are not representable.
pub const MAX_RANK_N: usize = 20;

/// `FACTORIAL[k] = k!` for `k ≤ 20`.
pub(crate) const FACTORIAL: [u64; 21] = {
    let mut f = [1u64; 21];
    let mut k = 1;
    while k <= 20 {
        f[k] = f[k - 1] * k as u64;
        k += 1;
    }
    f
};

/// Errors from permutation constructors and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation must have at least one entry")]
    Empty,
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: u8, n: usize },
    #[error("label {label} appears more than once")]
    DuplicateLabel { label: u8 },
    #[error("size mismatch: left has n={left}, right has n={right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("transposition endpoints must differ, got ({i},{i})")]
    EqualEndpoints { i: u8 },
    #[error("rank {rank} out of range for n={n} (must be < n!)")]
    RankOutOfRange { rank: u64, n: usize },
    #[error("n={n} out of range 1..={max} for ranking")]
    SizeOutOfRange { n: usize, max: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

/// A permutation of `{1..n}`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `map[i] = π(i+1)`; values are the 1-based labels themselves.
    map: Vec<u8>,
}

impl Permutation {
    /// The identity permutation on `{1..n}`.
    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1 && n <= u8::MAX as usize, "n={n} unsupported");
        Permutation {
            map: (1..=n as u8).collect(),
        }
    }

    /// Builds from one-line notation `[π(1), …, π(n)]`, validating that the
    /// sequence is a bijection on `{1..n}`.
    pub fn from_one_line(values: Vec<u8>) -> Result<Permutation, PermError> {
        let n = values.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        if n > u8::MAX as usize {
            return Err(PermError::SizeOutOfRange {
                n,
                max: u8::MAX as usize,
            });
        }
        let mut seen = [false; 256];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(PermError::LabelOutOfRange { label: v, n });
            }
            if seen[v as usize] {
                return Err(PermError::DuplicateLabel { label: v });
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { map: values })
    }

    /// Builds from a product of cycles on `{1..n}`; labels absent from every
    /// cycle are fixed points. Cycles are applied left to right (the first
    /// listed cycle acts first) — for the disjoint cycles this crate deals
    /// in, the order is immaterial.
    pub fn from_cycles(n: usize, cycles: &[Vec<u8>]) -> Result<Permutation, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        if n > u8::MAX as usize {
            return Err(PermError::SizeOutOfRange {
                n,
                max: u8::MAX as usize,
            });
        }
        // image[x] = where x goes under the cycle product built so far
        let mut image: Vec<u8> = (0..=n as u8).collect();
        for cycle in cycles {
            let mut in_cycle = [false; 256];
            for &v in cycle {
                if v == 0 || v as usize > n {
                    return Err(PermError::LabelOutOfRange { label: v, n });
                }
                if in_cycle[v as usize] {
                    return Err(PermError::DuplicateLabel { label: v });
                }
                in_cycle[v as usize] = true;
            }
            if cycle.len() < 2 {
                continue; // a 1-cycle (or empty) is the identity
            }
            // step[x] = image of x under this one cycle
            let mut step: Vec<u8> = (0..=n as u8).collect();
            for w in cycle.windows(2) {
                step[w[0] as usize] = w[1];
            }
            step[cycle[cycle.len() - 1] as usize] = cycle[0];
            for x in 1..=n {
                image[x] = step[image[x] as usize];
            }
        }
        let map = (1..=n as u8).map(|x| image[x as usize]).collect();
        Ok(Permutation { map })
    }

    /// Number of elements being permuted.
    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// One-line notation as a slice: `as_slice()[i] = π(i+1)`.
    pub fn as_slice(&self) -> &[u8] {
        &self.map
    }

    /// `π(v)` for a 1-based label.
    pub fn apply(&self, v: Label) -> Label {
        assert!(
            v >= 1 && (v as usize) <= self.map.len(),
            "label {v} out of range 1..={}",
            self.map.len()
        );
        self.map[v as usize - 1]
    }

    /// True iff `π(i) = i` for all `i`.
    pub fn is_identity(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of cycles, counting fixed points as 1-cycles.
    pub fn cycle_count(&self) -> usize {
        cycle_count_slice(&self.map)
    }

    /// Number of pairs `i < j` with `π(i) > π(j)`.
    pub fn inversions(&self) -> u64 {
        let mut count = 0u64;
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sorted list of labels fixed by the permutation.
    pub fn fixed_points(&self) -> Vec<Label> {
        self.map
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize == i + 1)
            .map(|(i, _)| (i + 1) as u8)
            .collect()
    }

    /// The cycles of the permutation, fixed points included as 1-cycles.
    /// Each cycle starts at its smallest label; cycles are sorted by their
    /// smallest label.
    pub fn cycles(&self) -> Vec<Vec<Label>> {
        let n = self.map.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n as u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with fixed points left implicit, e.g. `(1,3)(2,5)`.
    /// The identity renders as `()`.
    pub fn cycle_string(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            s.push('(');
            for (k, v) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&v.to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// `self ∘ other`: the permutation sending `i` to `self(other(i))` —
    /// `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let map = other
            .map
            .iter()
            .map(|&v| self.map[v as usize - 1])
            .collect();
        Ok(Permutation { map })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0u8; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { map }
    }

    /// `self · (i,j)`: right-multiplication by a transposition, i.e. the
    /// values at positions `i` and `j` are swapped. In the marker model this
    /// is the switch on edge `(i,j)`. The cycle count of the result differs
    /// from `self`'s by exactly ±1: +1 when `i` and `j` lie in the same
    /// cycle (the swap splits it), −1 otherwise (the swap merges two).
    pub fn apply_transposition(&self, i: Label, j: Label) -> Result<Permutation, PermError> {
        let n = self.n();
        for v in [i, j] {
            if v == 0 || v as usize > n {
                return Err(PermError::LabelOutOfRange { label: v, n });
            }
        }
        if i == j {
            return Err(PermError::EqualEndpoints { i });
        }
        let mut map = self.map.clone();
        map.swap(i as usize - 1, j as usize - 1);
        Ok(Permutation { map })
    }

    /// Lexicographic rank of the one-line notation, in `[0, n!)`.
    /// The identity has rank 0; the reversal has rank `n!−1`.
    pub fn rank(&self) -> u64 {
        assert!(
            self.n() <= MAX_RANK_N,
            "rank overflows u64 beyond n={MAX_RANK_N}"
        );
        rank_slice(&self.map)
    }

    /// Inverse of [`Permutation::rank`]: the permutation of `{1..n}` with
    /// the given lexicographic rank.
    pub fn unrank(rank: u64, n: usize) -> Result<Permutation, PermError> {
        if n == 0 || n > MAX_RANK_N {
            return Err(PermError::SizeOutOfRange { n, max: MAX_RANK_N });
        }
        if rank >= FACTORIAL[n] {
            return Err(PermError::RankOutOfRange { rank, n });
        }
        let mut map = vec![0u8; n];
        unrank_into(rank, &mut map);
        Ok(Permutation { map })
    }

    /// Advances to the lexicographic successor in place. Returns `false`
    /// (leaving the reversal in place) when the input was already last.
    pub fn next_permutation(&mut self) -> bool {
        next_perm_slice(&mut self.map)
    }

    /// Parses either notation with an expected size: one-line input must
    /// have exactly `n` entries; cycle input may omit fixed points.
    pub fn parse_with_n(s: &str, n: usize) -> Result<Permutation, PermError> {
        let t = s.trim();
        if t.starts_with('[') {
            let p = parse_one_line(t)?;
            if p.n() != n {
                return Err(PermError::SizeMismatch {
                    left: p.n(),
                    right: n,
                });
            }
            Ok(p)
        } else if t.starts_with('(') {
            let cycles = parse_cycle_list(t)?;
            Permutation::from_cycles(n, &cycles)
        } else {
            Err(PermError::Parse(format!(
                "expected one-line `[3,5,1,4,2]` or cycle `(1,3)(2,5)` notation, got `{t}`"
            )))
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} = {}", self.cycle_string())
    }
}

/// Parses one-line notation; cycle notation is also accepted, with `n`
/// inferred as the largest label mentioned (so fixed points above the
/// largest moved label are unrepresentable — use [`Permutation::parse_with_n`]
/// when the ambient size is known).
impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Permutation, PermError> {
        let t = s.trim();
        if t.starts_with('[') {
            parse_one_line(t)
        } else if t.starts_with('(') {
            let cycles = parse_cycle_list(t)?;
            let n = cycles
                .iter()
                .flat_map(|c| c.iter().copied())
                .max()
                .ok_or_else(|| {
                    PermError::Parse("cycle notation without labels needs an explicit n".into())
                })?;
            Permutation::from_cycles(n as usize, &cycles)
        } else {
            Err(PermError::Parse(format!(
                "expected one-line `[3,5,1,4,2]` or cycle `(1,3)(2,5)` notation, got `{t}`"
            )))
        }
    }
}

fn parse_one_line(t: &str) -> Result<Permutation, PermError> {
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| PermError::Parse(format!("unbalanced brackets in `{t}`")))?;
    let mut values = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(PermError::Parse(format!("empty entry in `{t}`")));
        }
        let v: u8 = tok
            .parse()
            .map_err(|_| PermError::Parse(format!("`{tok}` is not a label")))?;
        values.push(v);
    }
    Permutation::from_one_line(values)
}

fn parse_cycle_list(t: &str) -> Result<Vec<Vec<u8>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = t.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(PermError::Parse(format!(
                "expected `(` at `{rest}` in cycle notation"
            )));
        };
        let Some(close) = stripped.find(')') else {
            return Err(PermError::Parse(format!("unclosed cycle in `{t}`")));
        };
        let body = &stripped[..close];
        let mut cycle = Vec::new();
        if !body.trim().is_empty() {
            for tok in body.split(',') {
                let tok = tok.trim();
                let v: u8 = tok
                    .parse()
                    .map_err(|_| PermError::Parse(format!("`{tok}` is not a label")))?;
                cycle.push(v);
            }
        }
        cycles.push(cycle);
        rest = stripped[close + 1..].trim_start();
    }
    Ok(cycles)
}

// ---------------------------------------------------------------------------
// Slice-level helpers shared with the BFS and bound-sweep hot loops, where
// allocating a Permutation per visited vertex would dominate the runtime.
// All of them take one-line notation with 1-based values.

/// Lexicographic rank of a one-line slice. The values smaller than
/// `vals[i]` that appear to its right are exactly those not yet seen on the
/// left, so a seen-bitmask plus popcount replaces the quadratic rescan.
pub(crate) fn rank_slice(vals: &[u8]) -> u64 {
    let n = vals.len();
    debug_assert!(n <= MAX_RANK_N, "rank limited to n ≤ {MAX_RANK_N}");
    let mut rank = 0u64;
    let mut seen = 0u32;
    for i in 0..n {
        let v = u32::from(vals[i]) - 1;
        let smaller_unseen = v - (seen & ((1u32 << v) - 1)).count_ones();
        rank += u64::from(smaller_unseen) * FACTORIAL[n - 1 - i];
        seen |= 1 << v;
    }
    rank
}

/// Writes the permutation of rank `rank` into `out` (whose length fixes `n`).
pub(crate) fn unrank_into(rank: u64, out: &mut [u8]) {
    let n = out.len();
    let mut used = [false; 21];
    let mut r = rank;
    for i in 0..n {
        let f = FACTORIAL[n - 1 - i];
        let mut digit = (r / f) as usize;
        r %= f;
        for (u, v) in used[1..=n].iter_mut().zip(1u8..) {
            if !*u {
                if digit == 0 {
                    *u = true;
                    out[i] = v;
                    break;
                }
                digit -= 1;
            }
        }
    }
}

/// Cycle count of a one-line slice, fixed points included.
pub(crate) fn cycle_count_slice(vals: &[u8]) -> usize {
    let n = vals.len();
    debug_assert!(n <= 64, "bitmask cycle counter limited to n ≤ 64");
    let mut seen = 0u64;
    let mut count = 0;
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        count += 1;
        let mut x = start;
        while seen & (1 << x) == 0 {
            seen |= 1 << x;
            x = vals[x] as usize - 1;
        }
    }
    count
}

/// In-place lexicographic successor; `false` when already at the last one.
pub(crate) fn next_perm_slice(vals: &mut [u8]) -> bool {
    let n = vals.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && vals[i - 1] >= vals[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = n - 1;
    while vals[j] <= vals[pivot] {
        j -= 1;
    }
    vals.swap(pivot, j);
    vals[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(vals: &[u8]) -> Permutation {
        Permutation::from_one_line(vals.to_vec()).unwrap()
    }

    #[test]
    fn cycle_count_examples() {
        assert_eq!(p(&[3, 5, 1, 4, 2]).cycle_count(), 3);
        assert_eq!(Permutation::identity(5).cycle_count(), 5);
        assert_eq!(p(&[2, 1, 4, 3, 5]).cycle_count(), 3);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(p(&[3, 5, 1, 4, 2]).inversions(), 6);
        assert_eq!(Permutation::identity(7).inversions(), 0);
        assert_eq!(p(&[6, 5, 4, 3, 2, 1]).inversions(), 15); // n(n−1)/2
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(Permutation::identity(5).fixed_points(), vec![1, 2, 3, 4, 5]);
        assert_eq!(p(&[3, 5, 1, 4, 2]).fixed_points(), vec![4]);
        assert_eq!(p(&[2, 1, 3, 4, 5]).fixed_points(), vec![3, 4, 5]);
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let t12 = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let t23 = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        // (1,2)∘(2,3): 1→2, 2→3→1 … i.e. one-line [2,3,1]
        assert_eq!(t12.compose(&t23).unwrap(), p(&[2, 3, 1]));
        // and the other order differs
        assert_eq!(t23.compose(&t12).unwrap(), p(&[3, 1, 2]));

        let q = p(&[3, 5, 1, 4, 2]);
        let id = Permutation::identity(5);
        assert_eq!(q.compose(&id).unwrap(), q);
        assert_eq!(q.compose(&q.inverse()).unwrap(), id);
        assert!(q.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_construction_and_rendering() {
        let q = Permutation::from_cycles(5, &[vec![1, 3], vec![2, 5]]).unwrap();
        assert_eq!(q, p(&[3, 5, 1, 4, 2]));
        assert_eq!(q.cycle_string(), "(1,3)(2,5)");
        assert_eq!(Permutation::identity(4).cycle_string(), "()");
        assert_eq!(
            Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
            p(&[2, 3, 1, 4])
        );
    }

    #[test]
    fn parsing_both_notations() {
        let q: Permutation = "[3,5,1,4,2]".parse().unwrap();
        assert_eq!(q, p(&[3, 5, 1, 4, 2]));
        let r: Permutation = "(1,3)(2,5)".parse().unwrap();
        assert_eq!(r, q);
        let s = Permutation::parse_with_n("(2,3)", 5).unwrap();
        assert_eq!(s, p(&[1, 3, 2, 4, 5]));
        assert!(Permutation::parse_with_n("[2,1]", 5).is_err());
        assert!("[1,1,2]".parse::<Permutation>().is_err());
        assert!("[0,1]".parse::<Permutation>().is_err());
        assert!("1,2,3".parse::<Permutation>().is_err());
        assert!("(1,2".parse::<Permutation>().is_err());
        assert_eq!(q.to_string(), "[3,5,1,4,2]");
    }

    #[test]
    fn transposition_swaps_values_at_positions() {
        let id = Permutation::identity(5);
        assert_eq!(id.apply_transposition(1, 2).unwrap(), p(&[2, 1, 3, 4, 5]));
        let q = p(&[3, 5, 1, 4, 2]);
        let once = q.apply_transposition(2, 4).unwrap();
        assert_eq!(once, p(&[3, 4, 1, 5, 2]));
        assert_eq!(once.apply_transposition(2, 4).unwrap(), q);
        assert!(q.apply_transposition(3, 3).is_err());
        assert!(q.apply_transposition(0, 2).is_err());
        assert!(q.apply_transposition(2, 6).is_err());
    }

    #[test]
    fn rank_unrank_conventions() {
        assert_eq!(Permutation::identity(5).rank(), 0);
        assert_eq!(
            Permutation::unrank(FACTORIAL[5] - 1, 5).unwrap(),
            p(&[5, 4, 3, 2, 1])
        );
        assert!(Permutation::unrank(FACTORIAL[5], 5).is_err());
        assert!(Permutation::unrank(0, 0).is_err());
        assert!(Permutation::unrank(0, 21).is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn rank_roundtrip_exhaustive_small_n() {
        for n in 1..=6usize {
            let mut q = Permutation::identity(n);
            let mut expected_rank = 0u64;
            loop {
                assert_eq!(q.rank(), expected_rank);
                assert_eq!(Permutation::unrank(expected_rank, n).unwrap(), q);
                expected_rank += 1;
                if !q.next_permutation() {
                    break;
                }
            }
            assert_eq!(expected_rank, FACTORIAL[n]);
        }
    }

    #[test]
    fn inverse_and_statistics() {
        let q = p(&[3, 5, 1, 4, 2]);
        let inv = q.inverse();
        assert_eq!(inv, p(&[3, 5, 1, 4, 2])); // this q is an involution
        let r = p(&[2, 3, 1, 5, 4]);
        assert_eq!(r.inverse(), p(&[3, 1, 2, 5, 4]));
        assert!(r.compose(&r.inverse()).unwrap().is_identity());
        assert_eq!(r.cycles(), vec![vec![1, 2, 3], vec![4, 5]]);
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n).prop_flat_map(|n| {
            (0..FACTORIAL[n]).prop_map(move |r| Permutation::unrank(r, n).unwrap())
        })
    }

    proptest! {
        #[test]
        fn prop_rank_roundtrip(q in arb_perm(8)) {
            let n = q.n();
            prop_assert_eq!(Permutation::unrank(q.rank(), n).unwrap(), q);
        }

        #[test]
        fn prop_inverse_statistics(q in arb_perm(7)) {
            let inv = q.inverse();
            prop_assert_eq!(q.cycle_count(), inv.cycle_count());
            prop_assert_eq!(q.inversions(), inv.inversions());
            prop_assert!(q.compose(&inv).unwrap().is_identity());
        }

        #[test]
        fn prop_transposition_changes_cycle_count_by_one(
            q in arb_perm(7),
            i in 1u8..=7,
            j in 1u8..=7,
        ) {
            let n = q.n() as u8;
            let (i, j) = (1 + (i - 1) % n, 1 + (j - 1) % n);
            prop_assume!(i != j);
            let after = q.apply_transposition(i, j).unwrap();
            let before_count = q.cycle_count() as i64;
            let after_count = after.cycle_count() as i64;
            // +1 exactly when i and j sit in the same cycle of q
            let mut x = q.apply(i);
            let mut same_cycle = false;
            while x != i {
                if x == j {
                    same_cycle = true;
                    break;
                }
                x = q.apply(x);
            }
            if same_cycle {
                prop_assert_eq!(after_count - before_count, 1);
            } else {
                prop_assert_eq!(after_count - before_count, -1);
            }
        }

        #[test]
        fn prop_compose_associative(n in 2usize..=6, a in 0u64..720, b in 0u64..720, c in 0u64..720) {
            let f = FACTORIAL[n];
            let x = Permutation::unrank(a % f, n).unwrap();
            let y = Permutation::unrank(b % f, n).unwrap();
            let z = Permutation::unrank(c % f, n).unwrap();
            let left = x.compose(&y).unwrap().compose(&z).unwrap();
            let right = x.compose(&y.compose(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
