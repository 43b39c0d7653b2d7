//! Closed-form diameter estimators for the Cayley graph of a transposition
//! tree.
//!
//! For a tree `T` on `{1..n}` and a permutation `π`, the per-permutation
//! bound is `f_T(π) = c(π) − n + Σᵢ dist_T(i, π(i))`, where `c` counts
//! cycles (fixed points included): the Cayley distance from the identity to
//! `π` never exceeds it. Its maximum over all of `S_n` is the diameter
//! bound `f(T)`, computed here by exhaustive sweep ([`f_upper_bound`]). On stars the
//! bound collapses to an exact closed form ([`star_bound`]).
//!
//! [`algorithm_a`] implements the cheap tree-only estimate: repeatedly pick
//! a diametral pair of vertices, charge `2·diam(T) − 1`, delete the pair,
//! and finish with `|V| − 1 ∈ {0, 1}` when fewer than three vertices remain.
//! Different diametral-pair choices can produce different totals `β`;
//! [`enumerate_beta_set`] explores every choice point (memoized on the
//! surviving-vertex set) and returns the full set of reachable values with
//! one witness execution per value.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::perm::{self, Label, Permutation};
use crate::tree::{TranspositionTree, TreeError, VertexPair};

/// Largest `n` for which [`f_upper_bound`] will sweep all `n!` permutations.
pub const MAX_SWEEP_N: usize = 10;

/// Largest `n` for which [`enumerate_beta_set`] will search.
pub const MAX_BETA_N: usize = 12;

/// Errors from the estimator operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("size mismatch: tree has {tree_n} vertices, permutation has {perm_n}")]
    SizeMismatch { tree_n: usize, perm_n: usize },
    #[error("{what} requires labels exactly 1..=n")]
    NonStandardLabels { what: &'static str },
    #[error("{what} is exhaustive and capped at n ≤ {max}; tree has n={n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("tree is not a star (no vertex is adjacent to all others)")]
    NotAStar,
    #[error("pair {pair} is not diametral in the current subtree (diameter {diameter})")]
    PairNotDiametral { pair: VertexPair, diameter: u32 },
    #[error("pair sequence exhausted after {used} pairs; the run needs another diametral pair")]
    PairSequenceTooShort { used: usize },
    #[error("pair sequence has {given} pairs but the run terminates after {used}")]
    PairSequenceTooLong { given: usize, used: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn check_same_domain(
    t: &TranspositionTree,
    p: &Permutation,
    what: &'static str,
) -> Result<(), BoundsError> {
    if !t.has_standard_labels() {
        return Err(BoundsError::NonStandardLabels { what });
    }
    if t.order() != p.n() {
        return Err(BoundsError::SizeMismatch {
            tree_n: t.order(),
            perm_n: p.n(),
        });
    }
    Ok(())
}

/// `S_T(π) = Σᵢ dist_T(i, π(i))`: total tree distance every marker must
/// still travel home.
pub fn sum_of_distances(t: &TranspositionTree, p: &Permutation) -> Result<u32, BoundsError> {
    check_same_domain(t, p, "sum_of_distances")?;
    Ok((1..=p.n() as u8).map(|i| t.dist(i, p.apply(i))).sum())
}

/// The per-permutation distance bound `f_T(π) = c(π) − n + S_T(π)`.
/// Always ≥ 0, and 0 exactly on the identity.
pub fn f_t(t: &TranspositionTree, p: &Permutation) -> Result<u32, BoundsError> {
    let s = sum_of_distances(t, p)?;
    let c = p.cycle_count() as u32;
    Ok((c + s)
        .checked_sub(p.n() as u32)
        .expect("c(π) + S_T(π) ≥ n for every permutation"))
}

/// The diameter bound `f(T) = max f_T(π)` together with one maximizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FBound {
    pub value: u32,
    /// Lexicographically smallest maximizer of `f_T`.
    pub witness: Permutation,
}

/// Computes `f(T)` by sweeping all `n!` permutations in lexicographic
/// order. Capped at `n ≤ 10`.
pub fn f_upper_bound(t: &TranspositionTree) -> Result<FBound, BoundsError> {
    if !t.has_standard_labels() {
        return Err(BoundsError::NonStandardLabels {
            what: "f_upper_bound",
        });
    }
    let n = t.order();
    if n > MAX_SWEEP_N {
        return Err(BoundsError::TooLarge {
            what: "the f(T) sweep",
            n,
            max: MAX_SWEEP_N,
        });
    }
    // Local 0-based copy of the distance matrix keeps the hot loop free of
    // bounds checks against the label-indexed storage.
    let mut d = [[0u8; MAX_SWEEP_N]; MAX_SWEEP_N];
    for (i, row) in d.iter_mut().enumerate().take(n) {
        for (j, cell) in row.iter_mut().enumerate().take(n) {
            *cell = t.dist((i + 1) as u8, (j + 1) as u8) as u8;
        }
    }
    let mut vals: Vec<u8> = (1..=n as u8).collect();
    let mut best: i64 = -1;
    let mut witness = vals.clone();
    loop {
        let mut s = 0u32;
        for (i, &v) in vals.iter().enumerate() {
            s += d[i][v as usize - 1] as u32;
        }
        let c = perm::cycle_count_slice(&vals) as u32;
        let f = c as i64 + s as i64 - n as i64;
        if f > best {
            best = f;
            witness.copy_from_slice(&vals);
        }
        if !perm::next_perm_slice(&mut vals) {
            break;
        }
    }
    Ok(FBound {
        value: best as u32,
        witness: Permutation::from_one_line(witness).expect("sweep preserves bijectivity"),
    })
}

/// Exact Cayley distance on a star: `n + c(π) − 2·|Fix(π)| − r`, with
/// `r = 0` when `π` fixes the hub and `r = 2` otherwise. On stars this
/// coincides with `f_T(π)` and with the true BFS distance.
pub fn star_bound(t: &TranspositionTree, p: &Permutation) -> Result<u32, BoundsError> {
    check_same_domain(t, p, "star_bound")?;
    let center = t.star_center().ok_or(BoundsError::NotAStar)?;
    let n = p.n() as u32;
    let c = p.cycle_count() as u32;
    let fixed = p.fixed_points().len() as u32;
    let r = if p.apply(center) == center { 0 } else { 2 };
    Ok((n + c)
        .checked_sub(2 * fixed + r)
        .expect("star formula is nonnegative for every permutation"))
}

/// How the next diametral pair is chosen when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairPolicy {
    /// Smallest pair by `(min label, max label)` — the reproducible default.
    Lex,
    /// Pair whose removal leaves the subtree of largest diameter
    /// (ties broken lexicographically).
    MaxSubtreeDiameter,
    /// Pair whose removal leaves the subtree of smallest diameter
    /// (ties broken lexicographically).
    MinSubtreeDiameter,
}

/// One complete execution of the diametral-pair estimate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgAOutcome {
    /// Diametral pair removed at each iteration, in order.
    pub pairs: Vec<VertexPair>,
    /// Tree diameter at each iteration (the `ℓ`-th iteration charges
    /// `2·step_diameters[ℓ] − 1`).
    pub step_diameters: Vec<u32>,
    /// Labels still standing at termination: one vertex (odd `n`), two
    /// (even `n ≥ 4`), or none (the `n = 2` input itself).
    pub final_vertices: Vec<Label>,
    /// The estimate: `Σ (2·step_diameters[ℓ] − 1) + tail`.
    pub beta: u32,
}

impl AlgAOutcome {
    /// The terminal `|V| − 1` contribution: 1 when two vertices survive,
    /// otherwise 0.
    pub fn tail(&self) -> u32 {
        (self.final_vertices.len() as u32).saturating_sub(1)
    }

    /// The permutation that swaps every chosen pair (and the final pair,
    /// when two vertices survive). For a tree on `{1..n}` its `f_T` value
    /// equals `beta` exactly, which is why `β ≤ f(T)` for every execution.
    pub fn construction_permutation(&self) -> Permutation {
        let max = self
            .pairs
            .iter()
            .flat_map(|p| [p.i(), p.j()])
            .chain(self.final_vertices.iter().copied())
            .max()
            .expect("an outcome always names at least one vertex");
        let mut map: Vec<u8> = (1..=max).collect();
        for p in &self.pairs {
            map.swap(p.i() as usize - 1, p.j() as usize - 1);
        }
        if let [a, b] = self.final_vertices[..] {
            map.swap(a as usize - 1, b as usize - 1);
        }
        Permutation::from_one_line(map).expect("disjoint swaps keep a bijection")
    }
}

/// Runs the estimate with a pluggable pair chooser. The chooser sees the
/// current subtree and its diametral pairs (sorted, nonempty) and picks one.
fn run_with_chooser(
    t: &TranspositionTree,
    mut choose: impl FnMut(&TranspositionTree, &[VertexPair]) -> Result<VertexPair, BoundsError>,
) -> Result<AlgAOutcome, BoundsError> {
    if t.order() < 2 {
        return Err(BoundsError::Tree(TreeError::TooFewVertices {
            n: t.order(),
            need: 2,
        }));
    }
    let mut cur = t.clone();
    let mut pairs = Vec::new();
    let mut step_diameters = Vec::new();
    let mut beta = 0u32;
    loop {
        let candidates = cur.diametral_pairs();
        let chosen = choose(&cur, &candidates)?;
        let d = cur.diameter();
        pairs.push(chosen);
        step_diameters.push(d);
        beta += 2 * d - 1;
        if cur.order() == 2 {
            // Removing the only pair would empty the tree; the terminal
            // |V|−1 term contributes nothing.
            return Ok(AlgAOutcome {
                pairs,
                step_diameters,
                final_vertices: Vec::new(),
                beta,
            });
        }
        cur = cur.remove_leaf_pair(chosen)?;
        if cur.order() < 3 {
            beta += cur.order() as u32 - 1;
            return Ok(AlgAOutcome {
                pairs,
                step_diameters,
                final_vertices: cur.labels().to_vec(),
                beta,
            });
        }
    }
}

/// The diametral-pair estimate under a deterministic selection policy.
pub fn algorithm_a(t: &TranspositionTree, policy: PairPolicy) -> Result<AlgAOutcome, BoundsError> {
    run_with_chooser(t, |cur, candidates| {
        Ok(match policy {
            PairPolicy::Lex => candidates[0],
            PairPolicy::MaxSubtreeDiameter | PairPolicy::MinSubtreeDiameter => {
                if cur.order() <= 2 {
                    candidates[0]
                } else {
                    let mut best = candidates[0];
                    let mut best_d = cur.remove_leaf_pair(best)?.diameter();
                    for &cand in &candidates[1..] {
                        let d = cur.remove_leaf_pair(cand)?.diameter();
                        let better = match policy {
                            PairPolicy::MaxSubtreeDiameter => d > best_d,
                            _ => d < best_d,
                        };
                        if better {
                            best = cand;
                            best_d = d;
                        }
                    }
                    best
                }
            }
        })
    })
}

/// Replays the estimate with a prescribed pair sequence, validating that
/// every pair is diametral at its step and that the sequence length matches
/// the run exactly.
pub fn algorithm_a_with_pairs(
    t: &TranspositionTree,
    pairs: &[VertexPair],
) -> Result<AlgAOutcome, BoundsError> {
    let mut used = 0usize;
    let outcome = run_with_chooser(t, |_cur, candidates| {
        let Some(&next) = pairs.get(used) else {
            return Err(BoundsError::PairSequenceTooShort { used });
        };
        used += 1;
        if !candidates.contains(&next) {
            return Err(BoundsError::PairNotDiametral {
                pair: next,
                diameter: _cur.diameter(),
            });
        }
        Ok(next)
    })?;
    if used != pairs.len() {
        return Err(BoundsError::PairSequenceTooLong {
            given: pairs.len(),
            used,
        });
    }
    Ok(outcome)
}

/// Every estimate value reachable over all diametral-pair choices, with one
/// witness execution per value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet {
    values: BTreeSet<u32>,
    witnesses: BTreeMap<u32, AlgAOutcome>,
}

impl BetaSet {
    /// The reachable values, ascending.
    pub fn values(&self) -> &BTreeSet<u32> {
        &self.values
    }

    pub fn beta_min(&self) -> u32 {
        *self
            .values
            .iter()
            .next()
            .expect("a run always produces a value")
    }

    pub fn beta_max(&self) -> u32 {
        *self
            .values
            .iter()
            .last()
            .expect("a run always produces a value")
    }

    pub fn is_singleton(&self) -> bool {
        self.values.len() == 1
    }

    /// One execution per distinct value (the lexicographically first pair
    /// sequence that attains it).
    pub fn witnesses(&self) -> &BTreeMap<u32, AlgAOutcome> {
        &self.witnesses
    }
}

/// Explores every choice point of the estimate. The surviving tree after
/// any number of iterations is determined by the surviving vertex set (all
/// removals are leaves of their moment's tree), so the search memoizes on
/// that set as a bitmask over label positions — at most `2ⁿ` states, in
/// practice a few hundred.
pub fn enumerate_beta_set(t: &TranspositionTree) -> Result<BetaSet, BoundsError> {
    let n = t.order();
    if n < 2 {
        return Err(BoundsError::Tree(TreeError::TooFewVertices { n, need: 2 }));
    }
    if n > MAX_BETA_N {
        return Err(BoundsError::TooLarge {
            what: "the β-set search",
            n,
            max: MAX_BETA_N,
        });
    }
    if n == 2 {
        let outcome = algorithm_a(t, PairPolicy::Lex)?;
        return Ok(BetaSet {
            values: BTreeSet::from([outcome.beta]),
            witnesses: BTreeMap::from([(outcome.beta, outcome)]),
        });
    }

    let full: u16 = (1u16 << n) - 1;
    let mut memo: HashMap<u16, BTreeSet<u32>> = HashMap::new();
    let values = explore(t, full, &mut memo)?;

    let mut witnesses = BTreeMap::new();
    for &beta in &values {
        witnesses.insert(beta, reconstruct(t, full, beta, &memo)?);
    }
    Ok(BetaSet { values, witnesses })
}

fn mask_labels(t: &TranspositionTree, mask: u16) -> Vec<Label> {
    t.labels()
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask & (1 << k) != 0)
        .map(|(_, &l)| l)
        .collect()
}

fn label_bit(t: &TranspositionTree, l: Label) -> u16 {
    let k = t
        .labels()
        .binary_search(&l)
        .expect("labels of subtrees come from the original tree");
    1 << k
}

/// Set of totals contributed by the remaining subtree on `mask`.
fn explore(
    t: &TranspositionTree,
    mask: u16,
    memo: &mut HashMap<u16, BTreeSet<u32>>,
) -> Result<BTreeSet<u32>, BoundsError> {
    if let Some(hit) = memo.get(&mask) {
        return Ok(hit.clone());
    }
    let k = mask.count_ones();
    let out = match k {
        1 => BTreeSet::from([0]),
        2 => BTreeSet::from([1]), // terminal |V|−1 tail
        _ => {
            let sub = t.induced_subtree(&mask_labels(t, mask))?;
            let charge = 2 * sub.diameter() - 1;
            let mut acc = BTreeSet::new();
            for pair in sub.diametral_pairs() {
                let child = mask & !label_bit(t, pair.i()) & !label_bit(t, pair.j());
                for b in explore(t, child, memo)? {
                    acc.insert(charge + b);
                }
            }
            acc
        }
    };
    memo.insert(mask, out.clone());
    Ok(out)
}

/// Rebuilds the lexicographically-first execution attaining `beta`.
fn reconstruct(
    t: &TranspositionTree,
    full: u16,
    beta: u32,
    memo: &HashMap<u16, BTreeSet<u32>>,
) -> Result<AlgAOutcome, BoundsError> {
    let mut mask = full;
    let mut remaining = beta;
    let mut pairs = Vec::new();
    let mut step_diameters = Vec::new();
    'outer: loop {
        match mask.count_ones() {
            1 => {
                debug_assert_eq!(remaining, 0);
                break;
            }
            2 => {
                debug_assert_eq!(remaining, 1);
                break;
            }
            _ => {
                let sub = t.induced_subtree(&mask_labels(t, mask))?;
                let d = sub.diameter();
                let charge = 2 * d - 1;
                for pair in sub.diametral_pairs() {
                    let child = mask & !label_bit(t, pair.i()) & !label_bit(t, pair.j());
                    if remaining >= charge
                        && memo
                            .get(&child)
                            .is_some_and(|s| s.contains(&(remaining - charge)))
                    {
                        pairs.push(pair);
                        step_diameters.push(d);
                        remaining -= charge;
                        mask = child;
                        continue 'outer;
                    }
                }
                unreachable!("every memoized value has a witness path");
            }
        }
    }
    Ok(AlgAOutcome {
        pairs,
        step_diameters,
        final_vertices: mask_labels(t, mask),
        beta,
    })
}
