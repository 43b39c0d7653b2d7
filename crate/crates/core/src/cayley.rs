//! Ground truth for the Cayley graph `Γ` on all `n!` permutations, where
//! `π` is adjacent to `π·(i,j)` for every tree edge `(i,j)`.
//!
//! [`DistanceTable`] holds one distance byte per lexicographic rank, filled
//! by breadth-first search from the identity; because Cayley graphs are
//! vertex-transitive, the eccentricity of the identity is the diameter
//! ([`bfs_metrics`]). [`distance`] answers one-off queries without a table
//! via bidirectional search.
//!
//! The module also implements marker sorting: vertex `i` of the tree holds
//! marker `π(i)`, a move swaps the two markers on an edge, and sorting
//! means homing every marker `i` to vertex `i`. An edge is *admissible*
//! when swapping strictly helps ([`EdgeKind`]); [`ak_sort`] repeatedly
//! applies one until sorted, and [`replay_word`] validates an externally
//! supplied word move by move.

use std::collections::HashMap;
use std::io::{self, Read, Write};

use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::perm::{self, Label, Permutation, FACTORIAL};
use crate::tree::{TranspositionTree, VertexPair};

/// Default cap on `n` for full-graph searches (`10! ≈ 3.6M` vertices).
pub const MAX_BFS_N: usize = 10;

/// Hard cap reachable through [`bfs_metrics_extended`] (`11! ≈ 40M`
/// vertices, one byte each).
pub const MAX_BFS_N_EXTENDED: usize = 11;

/// Errors from Cayley-graph computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("{what} is capped at n ≤ {max}; tree has n={n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("{what} requires labels exactly 1..=n")]
    NonStandardLabels { what: &'static str },
    #[error("size mismatch: tree has {tree_n} vertices, permutation has {perm_n}")]
    SizeMismatch { tree_n: usize, perm_n: usize },
    #[error("the identity permutation is already sorted and admits no edge")]
    AlreadySorted,
    #[error("no admissible edge exists; the generators do not form a tree")]
    NoAdmissibleEdge,
    #[error("{pair} is not an edge of the tree")]
    NotATreeEdge { pair: VertexPair },
}

impl From<BoundsError> for CayleyError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::SizeMismatch { tree_n, perm_n } => {
                CayleyError::SizeMismatch { tree_n, perm_n }
            }
            BoundsError::NonStandardLabels { what } => CayleyError::NonStandardLabels { what },
            other => unreachable!("f_T evaluation can only fail on domain checks: {other}"),
        }
    }
}

/// Errors from reading or writing a serialized distance table.
#[derive(Debug, Error)]
pub enum TableIoError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("not a distance-table dump: {reason}")]
    Format { reason: String },
    #[error("dump was built for tree {found}, expected {expected}")]
    TreeMismatch { found: String, expected: String },
}

fn check_domain(
    t: &TranspositionTree,
    p: &Permutation,
    what: &'static str,
) -> Result<(), CayleyError> {
    if !t.has_standard_labels() {
        return Err(CayleyError::NonStandardLabels { what });
    }
    if t.order() != p.n() {
        return Err(CayleyError::SizeMismatch {
            tree_n: t.order(),
            perm_n: p.n(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Exhaustive distances

/// Distances from the identity to every permutation of `S_n`, one byte per
/// lexicographic rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    tree: TranspositionTree,
    dist: Vec<u8>,
}

/// Aggregate view of one full breadth-first sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyMetrics {
    pub n: usize,
    /// Maximum distance from the identity — the graph diameter, by
    /// vertex-transitivity.
    pub diameter: u32,
    /// `eccentricity_profile[d]` = number of permutations at distance `d`;
    /// entries sum to `n!`.
    pub eccentricity_profile: Vec<u64>,
    /// Lexicographically smallest permutation at maximum distance.
    pub peripheral_witness: Permutation,
}

impl DistanceTable {
    /// Runs the full breadth-first search from the identity. Capped at
    /// `n ≤ 11`; expect tens of seconds and a 40 MB table at the cap.
    pub fn build(t: &TranspositionTree) -> Result<DistanceTable, CayleyError> {
        Self::build_from_rank(t, 0)
    }

    /// Same sweep started from an arbitrary source vertex (used to check
    /// vertex-transitivity: every source sees the same eccentricity).
    pub(crate) fn build_from_rank(
        t: &TranspositionTree,
        source: u64,
    ) -> Result<DistanceTable, CayleyError> {
        if !t.has_standard_labels() {
            return Err(CayleyError::NonStandardLabels {
                what: "bfs_metrics",
            });
        }
        let n = t.order();
        if n > MAX_BFS_N_EXTENDED {
            return Err(CayleyError::TooLarge {
                what: "the full breadth-first sweep",
                n,
                max: MAX_BFS_N_EXTENDED,
            });
        }
        let size = FACTORIAL[n] as usize;
        let edges: Vec<(usize, usize)> = t
            .edges()
            .iter()
            .map(|e| (e.i() as usize - 1, e.j() as usize - 1))
            .collect();

        let mut dist = vec![u8::MAX; size];
        dist[source as usize] = 0;
        // Ranks fit in u32 up to 12! and each vertex enters one frontier
        // exactly once, so two rank queues are the whole working set.
        let mut frontier: Vec<u32> = vec![source as u32];
        let mut next: Vec<u32> = Vec::new();
        let mut level: u8 = 0;
        let mut buf = vec![0u8; n];
        while !frontier.is_empty() {
            level += 1;
            for &r in &frontier {
                perm::unrank_into(u64::from(r), &mut buf);
                for &(a, b) in &edges {
                    buf.swap(a, b);
                    let nr = perm::rank_slice(&buf) as usize;
                    buf.swap(a, b);
                    if dist[nr] == u8::MAX {
                        dist[nr] = level;
                        next.push(nr as u32);
                    }
                }
            }
            frontier.clear();
            std::mem::swap(&mut frontier, &mut next);
        }
        debug_assert!(
            dist.iter().all(|&d| d != u8::MAX),
            "a transposition tree generates all of S_n"
        );
        Ok(DistanceTable {
            tree: t.clone(),
            dist,
        })
    }

    pub fn n(&self) -> usize {
        self.tree.order()
    }

    pub fn tree(&self) -> &TranspositionTree {
        &self.tree
    }

    /// Distance from the identity to the permutation of the given rank.
    pub fn distance_of_rank(&self, rank: u64) -> u32 {
        u32::from(self.dist[rank as usize])
    }

    /// Distance from the identity to `p`.
    pub fn distance(&self, p: &Permutation) -> Result<u32, CayleyError> {
        check_domain(&self.tree, p, "distance")?;
        Ok(self.distance_of_rank(p.rank()))
    }

    /// Diameter, profile, and a lexicographically smallest peripheral
    /// vertex, read off the finished table.
    pub fn metrics(&self) -> CayleyMetrics {
        let diameter = u32::from(*self.dist.iter().max().expect("n ≥ 2 tables are nonempty"));
        let mut profile = vec![0u64; diameter as usize + 1];
        for &d in &self.dist {
            profile[d as usize] += 1;
        }
        let first = self
            .dist
            .iter()
            .position(|&d| u32::from(d) == diameter)
            .expect("the maximum is attained");
        CayleyMetrics {
            n: self.n(),
            diameter,
            eccentricity_profile: profile,
            peripheral_witness: Permutation::unrank(first as u64, self.n())
                .expect("table indexes are valid ranks"),
        }
    }

    // Serialized layout: magic "CGDT", format version, n, edge count, the
    // labeled edges (i, j) in sorted order, then n! distance bytes in rank
    // order. The header pins the exact labeled tree so a stale or misnamed
    // cache file can never be attributed to the wrong generators.
    const MAGIC: &'static [u8; 4] = b"CGDT";
    const FORMAT_VERSION: u8 = 1;

    /// Writes the versioned binary dump.
    pub fn write_to<W: Write>(&self, mut w: W) -> Result<(), TableIoError> {
        w.write_all(Self::MAGIC)?;
        w.write_all(&[
            Self::FORMAT_VERSION,
            self.n() as u8,
            self.tree.edges().len() as u8,
        ])?;
        for e in self.tree.edges() {
            w.write_all(&[e.i(), e.j()])?;
        }
        w.write_all(&self.dist)?;
        Ok(())
    }

    /// Reads a dump back, verifying the header matches `expected` exactly.
    pub fn read_from<R: Read>(
        mut r: R,
        expected: &TranspositionTree,
    ) -> Result<DistanceTable, TableIoError> {
        let mut head = [0u8; 7];
        r.read_exact(&mut head)?;
        if &head[..4] != Self::MAGIC {
            return Err(TableIoError::Format {
                reason: "bad magic bytes".into(),
            });
        }
        if head[4] != Self::FORMAT_VERSION {
            return Err(TableIoError::Format {
                reason: format!("unsupported format version {}", head[4]),
            });
        }
        let n = head[5] as usize;
        let edge_count = head[6] as usize;
        if !(2..=MAX_BFS_N_EXTENDED).contains(&n) || edge_count != n - 1 {
            return Err(TableIoError::Format {
                reason: format!("implausible header: n={n}, {edge_count} edges"),
            });
        }
        let mut raw = vec![0u8; 2 * edge_count];
        r.read_exact(&mut raw)?;
        let pairs: Vec<(Label, Label)> = raw.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let found = TranspositionTree::new(n, pairs).map_err(|e| TableIoError::Format {
            reason: format!("header edges are not a tree: {e}"),
        })?;
        if found != *expected {
            return Err(TableIoError::TreeMismatch {
                found: found.to_string(),
                expected: expected.to_string(),
            });
        }
        let mut dist = vec![0u8; FACTORIAL[n] as usize];
        r.read_exact(&mut dist)?;
        let mut tail = [0u8; 1];
        if r.read(&mut tail)? != 0 {
            return Err(TableIoError::Format {
                reason: "trailing bytes after distance data".into(),
            });
        }
        if dist[0] != 0 || dist.contains(&u8::MAX) {
            return Err(TableIoError::Format {
                reason: "distance data is not a finished identity-rooted sweep".into(),
            });
        }
        Ok(DistanceTable {
            tree: expected.clone(),
            dist,
        })
    }
}

/// Full breadth-first sweep from the identity. Capped at `n ≤ 10`.
pub fn bfs_metrics(t: &TranspositionTree) -> Result<CayleyMetrics, CayleyError> {
    if t.order() > MAX_BFS_N {
        return Err(CayleyError::TooLarge {
            what: "the full breadth-first sweep",
            n: t.order(),
            max: MAX_BFS_N,
        });
    }
    Ok(DistanceTable::build(t)?.metrics())
}

/// The same sweep with the cap raised to `n = 11` for callers that opt in
/// to the ~40 MB table and multi-second runtime.
pub fn bfs_metrics_extended(t: &TranspositionTree) -> Result<CayleyMetrics, CayleyError> {
    Ok(DistanceTable::build(t)?.metrics())
}

/// Exact distance from the identity to `p` without building the full
/// table: level-synchronized bidirectional search, always expanding the
/// smaller side, stopping once the two radii certify the best meeting
/// point. Capped at `n ≤ 10`.
pub fn distance(t: &TranspositionTree, p: &Permutation) -> Result<u32, CayleyError> {
    check_domain(t, p, "distance")?;
    let n = t.order();
    if n > MAX_BFS_N {
        return Err(CayleyError::TooLarge {
            what: "a one-off distance query",
            n,
            max: MAX_BFS_N,
        });
    }
    if p.is_identity() {
        return Ok(0);
    }
    let edges: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .map(|e| (e.i() as usize - 1, e.j() as usize - 1))
        .collect();
    // The generators are involutions, so the graph is undirected and the
    // search from `p` uses the same adjacency as the search from identity.
    let mut side: [Search; 2] = [Search::new(0), Search::new(p.rank())];
    let mut best: Option<u32> = None;
    let mut buf = vec![0u8; n];
    loop {
        let grow = usize::from(side[0].frontier.len() > side[1].frontier.len());
        let (a, b) = side.split_at_mut(1);
        let (this, other) = if grow == 0 {
            (&mut a[0], &b[0])
        } else {
            (&mut b[0], &a[0])
        };
        let depth = this.radius + 1;
        let mut next = Vec::new();
        for &r in &this.frontier {
            perm::unrank_into(r, &mut buf);
            for &(x, y) in &edges {
                buf.swap(x, y);
                let nr = perm::rank_slice(&buf);
                buf.swap(x, y);
                if let std::collections::hash_map::Entry::Vacant(slot) = this.seen.entry(nr) {
                    slot.insert(depth);
                    next.push(nr);
                    if let Some(&d2) = other.seen.get(&nr) {
                        let cand = depth + d2;
                        best = Some(best.map_or(cand, |cur| cur.min(cand)));
                    }
                }
            }
        }
        this.frontier = next;
        this.radius = depth;
        if let Some(found) = best {
            // Once the explored radii cover `found`, some vertex on a
            // shortest path has been seen from both ends, so the recorded
            // minimum is exact.
            if side[0].radius + side[1].radius >= found {
                return Ok(found);
            }
        }
        assert!(
            !side[0].frontier.is_empty() || !side[1].frontier.is_empty(),
            "a transposition tree generates all of S_n"
        );
    }
}

struct Search {
    seen: HashMap<u64, u32>,
    frontier: Vec<u64>,
    radius: u32,
}

impl Search {
    fn new(start: u64) -> Search {
        Search {
            seen: HashMap::from([(start, 0)]),
            frontier: vec![start],
            radius: 0,
        }
    }
}

// ---------------------------------------------------------------------------
// Marker sorting

/// Why a swap across an edge is admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Both markers on the edge move strictly closer to their home
    /// vertices.
    TypeA,
    /// One endpoint's marker is already home; the other endpoint's marker
    /// starts its path home across this edge.
    TypeB,
}

impl std::fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeKind::TypeA => "A",
            EdgeKind::TypeB => "B",
        })
    }
}

/// Classifies one tree edge against the current marker placement, `None`
/// when swapping it is not admissible.
pub fn classify_edge(
    t: &TranspositionTree,
    p: &Permutation,
    edge: VertexPair,
) -> Result<Option<EdgeKind>, CayleyError> {
    check_domain(t, p, "classify_edge")?;
    if !t.edges().contains(&edge) {
        return Err(CayleyError::NotATreeEdge { pair: edge });
    }
    let (i, j) = (edge.i(), edge.j());
    let (a, b) = (p.apply(i), p.apply(j)); // markers sitting at i and j
    let a_helps = t.dist(j, a) < t.dist(i, a);
    let b_helps = t.dist(i, b) < t.dist(j, b);
    Ok(if a_helps && b_helps {
        Some(EdgeKind::TypeA)
    } else if (a == i && b_helps) || (b == j && a_helps) {
        Some(EdgeKind::TypeB)
    } else {
        None
    })
}

/// All admissible edges for the current placement, in edge order.
pub fn admissible_edges(
    t: &TranspositionTree,
    p: &Permutation,
) -> Result<Vec<(VertexPair, EdgeKind)>, CayleyError> {
    check_domain(t, p, "admissible_edges")?;
    let mut out = Vec::new();
    for &e in t.edges() {
        if let Some(kind) = classify_edge(t, p, e)? {
            out.push((e, kind));
        }
    }
    Ok(out)
}

/// The lexicographically smallest admissible edge. Errors on the identity
/// (nothing to sort); `NoAdmissibleEdge` is unreachable for validated
/// trees.
pub fn find_admissible_edge(
    t: &TranspositionTree,
    p: &Permutation,
) -> Result<(VertexPair, EdgeKind), CayleyError> {
    check_domain(t, p, "find_admissible_edge")?;
    if p.is_identity() {
        return Err(CayleyError::AlreadySorted);
    }
    admissible_edges(t, p)?
        .into_iter()
        .next()
        .ok_or(CayleyError::NoAdmissibleEdge)
}

/// The word produced by one sorting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AkTrace {
    /// Edges applied, in order; applying them to the start permutation
    /// yields the identity.
    pub edges_applied: Vec<VertexPair>,
    /// Admissibility kind of each applied edge.
    pub edge_kinds: Vec<EdgeKind>,
    /// `f_T` after each step: strictly decreasing, ending at 0.
    pub f_values: Vec<u32>,
    /// `|edges_applied|`, never more than `f_T` of the start permutation.
    pub word_length: usize,
}

/// Sorts by repeatedly applying the lexicographically smallest admissible
/// edge.
pub fn ak_sort(t: &TranspositionTree, p: &Permutation) -> Result<AkTrace, CayleyError> {
    ak_sort_with(t, p, |_, _| 0)
}

/// Sorting with a pluggable choice rule: `choose` sees the current
/// permutation and the admissible edges (in edge order, nonempty) and
/// returns the index to apply. Any choice terminates within `f_T(p)`
/// steps, because every admissible swap lowers `f_T`.
pub fn ak_sort_with(
    t: &TranspositionTree,
    p: &Permutation,
    mut choose: impl FnMut(&Permutation, &[(VertexPair, EdgeKind)]) -> usize,
) -> Result<AkTrace, CayleyError> {
    check_domain(t, p, "ak_sort")?;
    let mut cur = p.clone();
    let mut f_prev = bounds::f_t(t, &cur)?;
    let mut trace = AkTrace {
        edges_applied: Vec::new(),
        edge_kinds: Vec::new(),
        f_values: Vec::new(),
        word_length: 0,
    };
    while !cur.is_identity() {
        let options = admissible_edges(t, &cur)?;
        let (edge, kind) = *options
            .get(choose(&cur, &options))
            .ok_or(CayleyError::NoAdmissibleEdge)?;
        cur = cur
            .apply_transposition(edge.i(), edge.j())
            .expect("edge labels are in range");
        let f_now = bounds::f_t(t, &cur)?;
        assert!(f_now < f_prev, "an admissible swap always lowers f_T");
        f_prev = f_now;
        trace.edges_applied.push(edge);
        trace.edge_kinds.push(kind);
        trace.f_values.push(f_now);
    }
    trace.word_length = trace.edges_applied.len();
    Ok(trace)
}

/// One verified step of a replayed word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayStep {
    pub edge: VertexPair,
    /// `None` when the step was not admissible at its position.
    pub kind: Option<EdgeKind>,
    /// `f_T` after applying the step.
    pub f_after: u32,
}

/// Outcome of replaying a word: per-step admissibility and whether the
/// word sorts the start permutation. Problems are reported, not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayReport {
    pub steps: Vec<ReplayStep>,
    /// 1-based number of the first inadmissible step, if any.
    pub first_invalid: Option<usize>,
    /// Whether the full word ends on the identity.
    pub sorted: bool,
}

impl ReplayReport {
    /// True when every step was admissible and the word sorts the input.
    pub fn is_valid(&self) -> bool {
        self.first_invalid.is_none() && self.sorted
    }

    pub fn word_length(&self) -> usize {
        self.steps.len()
    }
}

/// Replays `word` from `p`, verifying each step is an admissible swap for
/// its moment's marker placement. Every element must be a tree edge; all
/// other problems land in the report.
pub fn replay_word(
    t: &TranspositionTree,
    p: &Permutation,
    word: &[VertexPair],
) -> Result<ReplayReport, CayleyError> {
    check_domain(t, p, "replay_word")?;
    if let Some(&bad) = word.iter().find(|e| !t.edges().contains(e)) {
        return Err(CayleyError::NotATreeEdge { pair: bad });
    }
    let mut cur = p.clone();
    let mut steps = Vec::with_capacity(word.len());
    let mut first_invalid = None;
    for (idx, &edge) in word.iter().enumerate() {
        let kind = classify_edge(t, &cur, edge)?;
        if kind.is_none() && first_invalid.is_none() {
            first_invalid = Some(idx + 1);
        }
        cur = cur
            .apply_transposition(edge.i(), edge.j())
            .expect("edge labels are in range");
        steps.push(ReplayStep {
            edge,
            kind,
            f_after: bounds::f_t(t, &cur)?,
        });
    }
    Ok(ReplayReport {
        steps,
        first_invalid,
        sorted: cur.is_identity(),
    })
}
