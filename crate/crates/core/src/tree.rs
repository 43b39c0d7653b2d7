//! Transposition trees: labeled trees whose edges are read as transpositions.
//!
//! A [`TranspositionTree`] is immutable after validation and carries its
//! all-pairs distance matrix. Trees built with [`TranspositionTree::new`] or
//! parsed from text live on exactly `{1..n}`; removing a leaf pair keeps the
//! surviving original labels (the estimators in [`crate::bounds`] reason
//! about original labels throughout).
//!
//! [`enumerate_trees`] yields one representative per isomorphism class of
//! free trees on `n` vertices, deduplicated by [`TranspositionTree::canonical_code`];
//! the [`prufer`] submodule provides an independent enumeration used as a
//! cross-check oracle in tests.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Label;

/// Errors from tree construction, parsing and surgery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("cannot parse tree: {0}")]
    Parse(String),
    #[error("edge endpoint {label} is not a vertex of the tree")]
    BadLabel { label: u8 },
    #[error("edge {label}-{label} is a self-loop")]
    SelfLoop { label: u8 },
    #[error("duplicate edge {i}-{j}")]
    DuplicateEdge { i: u8, j: u8 },
    #[error("the edge set contains a cycle; diameter bounds require a tree")]
    CycleDetected,
    #[error("the edge set does not connect all vertices")]
    Disconnected,
    #[error("vertex {label} is not a leaf")]
    NotALeaf { label: u8 },
    #[error("operation needs at least {need} vertices, tree has {n}")]
    TooFewVertices { n: usize, need: usize },
    #[error("n={n} outside the supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },
}

/// An unordered pair of distinct labels, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPair {
    i: Label,
    j: Label,
}

impl VertexPair {
    pub fn new(a: Label, b: Label) -> Result<VertexPair, TreeError> {
        if a == b {
            return Err(TreeError::SelfLoop { label: a });
        }
        Ok(VertexPair {
            i: a.min(b),
            j: a.max(b),
        })
    }

    /// Smaller endpoint.
    pub fn i(&self) -> Label {
        self.i
    }

    /// Larger endpoint.
    pub fn j(&self) -> Label {
        self.j
    }

    /// Given one endpoint, returns the other; panics if `v` is neither.
    pub fn other(&self, v: Label) -> Label {
        if v == self.i {
            self.j
        } else if v == self.j {
            self.i
        } else {
            panic!("{v} is not an endpoint of {self}")
        }
    }

    pub fn contains(&self, v: Label) -> bool {
        self.i == v || self.j == v
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

impl FromStr for VertexPair {
    type Err = TreeError;

    /// Parses `i-j`.
    fn from_str(s: &str) -> Result<VertexPair, TreeError> {
        let t = s.trim();
        let (a, b) = t
            .split_once('-')
            .ok_or_else(|| TreeError::Parse(format!("expected `i-j`, got `{t}`")))?;
        let i: u8 = a
            .trim()
            .parse()
            .map_err(|_| TreeError::Parse(format!("`{}` is not a label", a.trim())))?;
        let j: u8 = b
            .trim()
            .parse()
            .map_err(|_| TreeError::Parse(format!("`{}` is not a label", b.trim())))?;
        VertexPair::new(i, j)
    }
}

/// Parses a comma-separated pair list such as `1-2,1-4,1-2` (used for edge
/// words handed to the replay machinery).
pub fn parse_pair_list(s: &str) -> Result<Vec<VertexPair>, TreeError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|tok| tok.parse()).collect()
}

/// Distance placed in the matrix for label slots that are not vertices.
const ABSENT: u8 = u8::MAX;

/// Largest vertex count a tree may have. Well above every exhaustive
/// routine's own cap; keeps label arithmetic comfortably inside `u8`.
pub const MAX_TREE_N: usize = 64;

/// A validated tree on a set of distinct labels, with all-pairs distances.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TranspositionTree {
    /// Sorted vertex labels. For freshly built trees this is `1..=n`;
    /// after leaf removal it is the surviving subset.
    labels: Vec<Label>,
    /// Sorted edge list.
    edges: Vec<VertexPair>,
    /// Flat `(max_label+1)²` hop-distance matrix; `ABSENT` off the label set.
    dist: Vec<u8>,
    stride: usize,
}

impl TranspositionTree {
    /// Builds and validates a tree on exactly `{1..n}`.
    pub fn new(
        n: usize,
        edge_list: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<TranspositionTree, TreeError> {
        if !(2..=MAX_TREE_N).contains(&n) {
            return Err(TreeError::SizeOutOfRange {
                n,
                min: 2,
                max: MAX_TREE_N,
            });
        }
        let mut edges = Vec::new();
        for (a, b) in edge_list {
            for v in [a, b] {
                if v == 0 || v as usize > n {
                    return Err(TreeError::BadLabel { label: v });
                }
            }
            edges.push(VertexPair::new(a, b)?);
        }
        Self::assemble((1..=n as u8).collect(), edges)
    }

    /// Internal constructor over an arbitrary sorted label set.
    fn assemble(
        labels: Vec<Label>,
        mut edges: Vec<VertexPair>,
    ) -> Result<TranspositionTree, TreeError> {
        let n = labels.len();
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateEdge {
                    i: w[0].i,
                    j: w[0].j,
                });
            }
        }
        let stride = labels.last().map_or(1, |&m| m as usize + 1);
        let mut is_vertex = vec![false; stride];
        for &l in &labels {
            is_vertex[l as usize] = true;
        }
        for e in &edges {
            for v in [e.i, e.j] {
                if !is_vertex[v as usize] {
                    return Err(TreeError::BadLabel { label: v });
                }
            }
        }

        // Union-find over labels: a repeated root is a cycle, leftover
        // components mean the edges do not span the vertex set.
        let mut parent: Vec<u8> = (0..stride as u8).collect();
        fn find(parent: &mut [u8], x: u8) -> u8 {
            let mut root = x;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut cur = x;
            while parent[cur as usize] != root {
                let next = parent[cur as usize];
                parent[cur as usize] = root;
                cur = next;
            }
            root
        }
        for e in &edges {
            let (ra, rb) = (find(&mut parent, e.i), find(&mut parent, e.j));
            if ra == rb {
                return Err(TreeError::CycleDetected);
            }
            parent[ra as usize] = rb;
        }
        if n > 0 {
            let root = find(&mut parent, labels[0]);
            if labels.iter().any(|&l| find(&mut parent, l) != root) {
                return Err(TreeError::Disconnected);
            }
        }
        if edges.len() != n.saturating_sub(1) {
            // Unreachable for a connected acyclic graph, kept as a guard.
            return Err(TreeError::CycleDetected);
        }

        // Adjacency, then one BFS per vertex for the distance matrix.
        let mut adj: Vec<Vec<u8>> = vec![Vec::new(); stride];
        for e in &edges {
            adj[e.i as usize].push(e.j);
            adj[e.j as usize].push(e.i);
        }
        let mut dist = vec![ABSENT; stride * stride];
        let mut queue = Vec::with_capacity(n);
        for &src in &labels {
            let row = src as usize * stride;
            dist[row + src as usize] = 0;
            queue.clear();
            queue.push(src);
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                let dv = dist[row + v as usize];
                for &w in &adj[v as usize] {
                    if dist[row + w as usize] == ABSENT {
                        dist[row + w as usize] = dv + 1;
                        queue.push(w);
                    }
                }
            }
        }

        Ok(TranspositionTree {
            labels,
            edges,
            dist,
            stride,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Sorted vertex labels.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Sorted edge list.
    pub fn edges(&self) -> &[VertexPair] {
        &self.edges
    }

    pub fn contains(&self, v: Label) -> bool {
        (v as usize) < self.stride && self.dist[v as usize * self.stride + v as usize] == 0
    }

    /// True when the labels are exactly `{1..n}`.
    pub fn has_standard_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(k, &l)| l as usize == k + 1)
    }

    /// Hop distance between two vertices.
    pub fn dist(&self, a: Label, b: Label) -> u32 {
        assert!(self.contains(a), "{a} is not a vertex");
        assert!(self.contains(b), "{b} is not a vertex");
        self.dist[a as usize * self.stride + b as usize] as u32
    }

    pub fn degree(&self, v: Label) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn neighbors(&self, v: Label) -> Vec<Label> {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| e.other(v))
            .collect()
    }

    /// Sorted list of degree-1 vertices.
    pub fn leaves(&self) -> Vec<Label> {
        self.labels
            .iter()
            .copied()
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// Largest hop distance between any two vertices (0 for a single vertex).
    pub fn diameter(&self) -> u32 {
        let mut best = 0;
        for (a_idx, &a) in self.labels.iter().enumerate() {
            for &b in &self.labels[a_idx + 1..] {
                best = best.max(self.dist(a, b));
            }
        }
        best
    }

    /// All unordered pairs at maximum distance, sorted by `(min, max)`.
    /// Both endpoints of every returned pair are leaves.
    pub fn diametral_pairs(&self) -> Vec<VertexPair> {
        let d = self.diameter();
        let mut out = Vec::new();
        for (a_idx, &a) in self.labels.iter().enumerate() {
            for &b in &self.labels[a_idx + 1..] {
                if self.dist(a, b) == d {
                    out.push(VertexPair { i: a, j: b });
                }
            }
        }
        out
    }

    /// On the unique path from `from` towards `to`, the first vertex after
    /// `from`. Panics when `from == to` or either is absent.
    pub fn next_step_toward(&self, from: Label, to: Label) -> Label {
        assert_ne!(from, to, "no step from a vertex to itself");
        let d = self.dist(from, to);
        for w in self.neighbors(from) {
            if self.dist(w, to) + 1 == d {
                return w;
            }
        }
        unreachable!("distance matrix inconsistent with adjacency")
    }

    /// Removes two leaves at once, keeping the remaining original labels.
    /// Needs `order() ≥ 3` so at least one vertex survives.
    pub fn remove_leaf_pair(&self, pair: VertexPair) -> Result<TranspositionTree, TreeError> {
        if self.order() < 3 {
            return Err(TreeError::TooFewVertices {
                n: self.order(),
                need: 3,
            });
        }
        for v in [pair.i, pair.j] {
            if !self.contains(v) {
                return Err(TreeError::BadLabel { label: v });
            }
            if self.degree(v) != 1 {
                return Err(TreeError::NotALeaf { label: v });
            }
        }
        let labels = self
            .labels
            .iter()
            .copied()
            .filter(|&l| !pair.contains(l))
            .collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !e.contains(pair.i) && !e.contains(pair.j))
            .collect();
        Self::assemble(labels, edges)
    }

    /// Subtree induced by `keep` (a sorted subset of the labels). Fails
    /// unless the kept vertices are connected in `self`.
    pub(crate) fn induced_subtree(&self, keep: &[Label]) -> Result<TranspositionTree, TreeError> {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| keep.contains(&e.i) && keep.contains(&e.j))
            .collect();
        Self::assemble(keep.to_vec(), edges)
    }

    /// True when some vertex is adjacent to every other (for `n = 2` both
    /// vertices qualify).
    pub fn is_star(&self) -> bool {
        self.star_center().is_some()
    }

    /// The hub of a star: the smallest vertex of degree `n−1`, if any.
    pub fn star_center(&self) -> Option<Label> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        self.labels
            .iter()
            .copied()
            .find(|&v| self.degree(v) == n - 1)
    }

    /// True when every vertex has degree ≤ 2.
    pub fn is_path(&self) -> bool {
        self.labels.iter().all(|&v| self.degree(v) <= 2)
    }

    /// The one or two middle vertices left after repeatedly peeling leaves.
    pub fn centers(&self) -> Vec<Label> {
        let n = self.order();
        if n <= 2 {
            return self.labels.clone();
        }
        let mut degree: BTreeMap<Label, usize> =
            self.labels.iter().map(|&v| (v, self.degree(v))).collect();
        let mut alive = n;
        let mut shell: Vec<Label> = degree
            .iter()
            .filter(|&(_, &d)| d == 1)
            .map(|(&v, _)| v)
            .collect();
        while alive > 2 {
            let mut next = Vec::new();
            for &v in &shell {
                degree.remove(&v);
                alive -= 1;
                for w in self.neighbors(v) {
                    if let Some(d) = degree.get_mut(&w) {
                        *d -= 1;
                        if *d == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            shell = next;
        }
        degree.keys().copied().collect()
    }

    /// Canonical byte code: equal codes iff the trees are isomorphic as
    /// unlabeled trees. Rooted at the center (for bicentral trees, at the
    /// central edge, with the two halves' codes sorted), children codes
    /// sorted lexicographically at every level.
    pub fn canonical_code(&self) -> Vec<u8> {
        let centers = self.centers();
        match centers.as_slice() {
            [c] => {
                let mut code = vec![b'C'];
                code.extend(self.rooted_code(*c, None));
                code
            }
            [c1, c2] => {
                let mut a = self.rooted_code(*c1, Some(*c2));
                let mut b = self.rooted_code(*c2, Some(*c1));
                if b < a {
                    std::mem::swap(&mut a, &mut b);
                }
                let mut code = vec![b'B'];
                code.extend(a);
                code.extend(b);
                code
            }
            _ => unreachable!("a tree has one or two centers"),
        }
    }

    /// Canonical code rendered as hexadecimal (fixture-friendly form).
    pub fn canonical_hex(&self) -> String {
        self.canonical_code()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    fn rooted_code(&self, v: Label, parent: Option<Label>) -> Vec<u8> {
        let mut child_codes: Vec<Vec<u8>> = self
            .neighbors(v)
            .into_iter()
            .filter(|&w| Some(w) != parent)
            .map(|w| self.rooted_code(w, Some(v)))
            .collect();
        child_codes.sort();
        let mut code = vec![b'('];
        for c in child_codes {
            code.extend(c);
        }
        code.push(b')');
        code
    }
}

impl fmt::Display for TranspositionTree {
    /// Bare comma-separated edge list, e.g. `1-2,2-3,1-4,1-5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TranspositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TranspositionTree({self})")
    }
}

impl FromStr for TranspositionTree {
    type Err = TreeError;

    /// Parses `[n=<int>;]<i>-<j>(,<i>-<j>)*`; without the `n=` prefix, `n`
    /// is inferred as the largest label mentioned.
    fn from_str(s: &str) -> Result<TranspositionTree, TreeError> {
        let t = s.trim();
        let (n_explicit, edges_text) = match t.split_once(';') {
            Some((head, tail)) => {
                let head = head.trim();
                let n_str = head
                    .strip_prefix("n=")
                    .or_else(|| head.strip_prefix("N="))
                    .ok_or_else(|| {
                        TreeError::Parse(format!("expected `n=<int>;` prefix, got `{head};`"))
                    })?;
                let n: usize = n_str
                    .trim()
                    .parse()
                    .map_err(|_| TreeError::Parse(format!("`{n_str}` is not a vertex count")))?;
                (Some(n), tail)
            }
            None => (None, t),
        };
        let pairs = parse_pair_list(edges_text)?;
        if pairs.is_empty() {
            return Err(TreeError::Parse("no edges given".into()));
        }
        let n = n_explicit.unwrap_or_else(|| pairs.iter().map(|p| p.j as usize).max().unwrap_or(0));
        TranspositionTree::new(n, pairs.iter().map(|p| (p.i, p.j)))
    }
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// each labeled `{1..n}`, sorted by canonical code. Supported for
/// `2 ≤ n ≤ 10`.
///
/// Representatives are grown by attaching the new highest label as a leaf to
/// every vertex of every (n−1)-vertex representative, deduplicating by
/// canonical code at each level — every free tree on `n` vertices arises
/// from some tree on `n−1` vertices by adding a leaf, so the sweep is
/// exhaustive.
pub fn enumerate_trees(n: usize) -> Result<Vec<TranspositionTree>, TreeError> {
    if !(2..=10).contains(&n) {
        return Err(TreeError::SizeOutOfRange { n, min: 2, max: 10 });
    }
    let mut level: BTreeMap<Vec<u8>, TranspositionTree> = BTreeMap::new();
    let base = TranspositionTree::new(2, [(1, 2)])?;
    level.insert(base.canonical_code(), base);
    for k in 3..=n {
        let mut next: BTreeMap<Vec<u8>, TranspositionTree> = BTreeMap::new();
        for t in level.values() {
            for &v in t.labels() {
                let mut edges: Vec<(u8, u8)> = t.edges().iter().map(|e| (e.i(), e.j())).collect();
                edges.push((v, k as u8));
                let grown =
                    TranspositionTree::new(k, edges).expect("leaf growth preserves treeness");
                next.entry(grown.canonical_code()).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

pub mod families {
    //! Named tree families and the fixture trees used across the test and
    //! CLI surfaces.

    use super::{TranspositionTree, TreeError};

    /// Path `1-2-…-n`.
    pub fn path(n: usize) -> Result<TranspositionTree, TreeError> {
        TranspositionTree::new(n, (1..n as u8).map(|i| (i, i + 1)))
    }

    /// Star with hub 1 and leaves `2..=n`.
    pub fn star(n: usize) -> Result<TranspositionTree, TreeError> {
        TranspositionTree::new(n, (2..=n as u8).map(|i| (1, i)))
    }

    /// Caterpillar: path `1-…-(n−2)` with the two extra leaves `n−1` and `n`
    /// attached at vertex `n−2`. The family whose bound gap grows linearly
    /// in `n`. Needs `n ≥ 4`.
    pub fn caterpillar(n: usize) -> Result<TranspositionTree, TreeError> {
        if n < 4 {
            return Err(TreeError::SizeOutOfRange {
                n,
                min: 4,
                max: super::MAX_TREE_N,
            });
        }
        let m = (n - 2) as u8;
        let edges = (1..m).map(|i| (i, i + 1)).chain([(m, m + 1), (m, m + 2)]);
        TranspositionTree::new(n, edges)
    }

    /// Resolves a fixture name: `t1`, `t2`, `theorem6-5v`, `theorem6-7v`,
    /// `caterpillar-<n>`, `path-<n>`, or `star-<n>`.
    pub fn fixture(name: &str) -> Option<TranspositionTree> {
        let built = match name {
            "t1" => {
                TranspositionTree::new(8, [(1, 2), (2, 3), (3, 7), (7, 8), (3, 4), (4, 5), (4, 6)])
            }
            "t2" => TranspositionTree::new(
                9,
                [
                    (1, 2),
                    (2, 3),
                    (3, 6),
                    (3, 4),
                    (4, 5),
                    (6, 7),
                    (6, 8),
                    (6, 9),
                ],
            ),
            "theorem6-5v" => TranspositionTree::new(5, [(1, 2), (2, 3), (1, 4), (1, 5)]),
            "theorem6-7v" => {
                TranspositionTree::new(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
            }
            _ => {
                let (family, n_str) = name.rsplit_once('-')?;
                let n: usize = n_str.parse().ok()?;
                match family {
                    "caterpillar" => caterpillar(n),
                    "path" => path(n),
                    "star" => star(n),
                    _ => return None,
                }
            }
        };
        built.ok()
    }
}

pub mod prufer {
    //! Labeled-tree construction from Prüfer sequences, plus the
    //! brute-force isomorphism-class count built on it. Slower than
    //! [`super::enumerate_trees`] (it walks all `n^{n−2}` labeled trees) but
    //! completely independent of the leaf-growth generator, which makes it
    //! the enumeration oracle of choice in tests.

    use std::collections::BTreeSet;

    use super::{TranspositionTree, TreeError};

    /// The labeled tree on `{1..n}` (with `n = seq.len() + 2`) whose Prüfer
    /// sequence is `seq`. The empty sequence gives the single edge on `{1,2}`.
    pub fn tree_from_prufer(seq: &[u8]) -> Result<TranspositionTree, TreeError> {
        let n = seq.len() + 2;
        if n > super::MAX_TREE_N {
            return Err(TreeError::SizeOutOfRange {
                n,
                min: 2,
                max: super::MAX_TREE_N,
            });
        }
        for &v in seq {
            if v == 0 || v as usize > n {
                return Err(TreeError::BadLabel { label: v });
            }
        }
        let mut degree = vec![1u8; n + 1];
        for &v in seq {
            degree[v as usize] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut remaining: Vec<bool> = vec![true; n + 1];
        for &v in seq {
            // smallest current leaf
            let leaf = (1..=n as u8)
                .find(|&u| remaining[u as usize] && degree[u as usize] == 1)
                .expect("a leaf always exists");
            edges.push((leaf, v));
            remaining[leaf as usize] = false;
            degree[v as usize] -= 1;
        }
        let last: Vec<u8> = (1..=n as u8).filter(|&u| remaining[u as usize]).collect();
        debug_assert_eq!(last.len(), 2);
        edges.push((last[0], last[1]));
        TranspositionTree::new(n, edges)
    }

    /// Number of isomorphism classes of trees on `n` vertices, computed by
    /// walking every Prüfer sequence and collecting distinct canonical
    /// codes. Exponential; intended for `n ≤ 8` in tests.
    pub fn isomorphism_class_count(n: usize) -> Result<usize, TreeError> {
        if !(2..=9).contains(&n) {
            return Err(TreeError::SizeOutOfRange { n, min: 2, max: 9 });
        }
        let mut codes = BTreeSet::new();
        let mut seq = vec![1u8; n - 2];
        loop {
            codes.insert(tree_from_prufer(&seq)?.canonical_code());
            // odometer over {1..n}^(n−2)
            let mut pos = seq.len();
            loop {
                if pos == 0 {
                    return Ok(codes.len());
                }
                pos -= 1;
                if seq[pos] < n as u8 {
                    seq[pos] += 1;
                    break;
                }
                seq[pos] = 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(a: u8, b: u8) -> VertexPair {
        VertexPair::new(a, b).unwrap()
    }

    fn tree(s: &str) -> TranspositionTree {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        let path5 = tree("1-2,2-3,3-4,4-5");
        assert_eq!(path5.diameter(), 4);
        assert!(families::fixture("theorem6-5v").is_some());
        assert_eq!(
            TranspositionTree::new(4, [(1, 2), (2, 3), (3, 1)]),
            Err(TreeError::CycleDetected)
        );
        assert_eq!(
            TranspositionTree::new(4, [(1, 2), (3, 4)]),
            Err(TreeError::Disconnected)
        );
        assert_eq!(
            TranspositionTree::new(3, [(1, 2), (2, 5)]),
            Err(TreeError::BadLabel { label: 5 })
        );
        assert_eq!(
            TranspositionTree::new(3, [(1, 2), (2, 2)]),
            Err(TreeError::SelfLoop { label: 2 })
        );
        assert_eq!(
            TranspositionTree::new(3, [(1, 2), (2, 1), (2, 3)]),
            Err(TreeError::DuplicateEdge { i: 1, j: 2 })
        );
    }

    #[test]
    fn parse_and_display() {
        let t = tree("n=8; 1-2,2-3,3-7,7-8,3-4,4-5,4-6");
        assert_eq!(t.order(), 8);
        assert_eq!(t, families::fixture("t1").unwrap());
        // n= prefix optional, inferred from the largest label
        assert_eq!(tree("1-2,2-3,3-7,7-8,3-4,4-5,4-6"), t);
        assert_eq!(t.to_string(), "1-2,2-3,3-4,3-7,4-5,4-6,7-8");
        assert_eq!(tree(&t.to_string()), t);
        // an explicit n that leaves vertices isolated fails
        assert_eq!(
            "n=4; 1-2,2-3".parse::<TranspositionTree>(),
            Err(TreeError::Disconnected)
        );
        assert!("".parse::<TranspositionTree>().is_err());
        assert!("n=x; 1-2".parse::<TranspositionTree>().is_err());
        assert!("1+2".parse::<TranspositionTree>().is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(families::star(5).unwrap().diameter(), 2);
        for n in 2..=9 {
            assert_eq!(families::path(n).unwrap().diameter(), n as u32 - 1);
        }
        for n in 5..=10 {
            assert_eq!(families::caterpillar(n).unwrap().diameter(), n as u32 - 2);
        }
    }

    #[test]
    fn diametral_pair_examples() {
        assert_eq!(
            families::path(5).unwrap().diametral_pairs(),
            vec![pair(1, 5)]
        );
        assert_eq!(
            families::star(5).unwrap().diametral_pairs(),
            vec![
                pair(2, 3),
                pair(2, 4),
                pair(2, 5),
                pair(3, 4),
                pair(3, 5),
                pair(4, 5)
            ]
        );
        let t2 = families::fixture("t2").unwrap();
        let pairs = t2.diametral_pairs();
        assert!(pairs.contains(&pair(1, 5)));
        assert!(pairs.contains(&pair(1, 7)));
        assert_eq!(t2.dist(1, 5), 4);
        assert_eq!(t2.dist(1, 7), 4);
        assert_eq!(
            pairs,
            vec![
                pair(1, 5),
                pair(1, 7),
                pair(1, 8),
                pair(1, 9),
                pair(5, 7),
                pair(5, 8),
                pair(5, 9)
            ]
        );
    }

    #[test]
    fn leaf_pair_removal() {
        let path5 = families::path(5).unwrap();
        let inner = path5.remove_leaf_pair(pair(1, 5)).unwrap();
        assert_eq!(inner.labels(), &[2, 3, 4]);
        assert_eq!(inner.diameter(), 2);

        let star5 = families::star(5).unwrap();
        let reduced = star5.remove_leaf_pair(pair(2, 3)).unwrap();
        assert_eq!(reduced.labels(), &[1, 4, 5]);
        assert!(reduced.is_star());

        let t1 = families::fixture("t1").unwrap();
        let sub = t1.remove_leaf_pair(pair(1, 8)).unwrap();
        assert_eq!(sub.order(), 6);
        assert_eq!(sub.diameter(), 3);

        assert_eq!(
            path5.remove_leaf_pair(pair(2, 5)),
            Err(TreeError::NotALeaf { label: 2 })
        );
        let tiny = inner.remove_leaf_pair(pair(2, 4)).unwrap();
        assert_eq!(tiny.labels(), &[3]);
        assert_eq!(tiny.diameter(), 0);
        assert_eq!(
            tiny.remove_leaf_pair(pair(2, 4)),
            Err(TreeError::TooFewVertices { n: 1, need: 3 })
        );
    }

    #[test]
    fn structure_predicates() {
        assert!(families::star(5).unwrap().is_star());
        assert_eq!(families::star(5).unwrap().star_center(), Some(1));
        assert!(!families::fixture("t1").unwrap().is_star());
        assert!(families::path(6).unwrap().is_path());
        // n ≤ 3: path and star coincide
        assert!(families::path(3).unwrap().is_star());
        assert_eq!(families::path(3).unwrap().star_center(), Some(2));
        let two = TranspositionTree::new(2, [(1, 2)]).unwrap();
        assert!(two.is_star() && two.is_path());
        assert_eq!(two.star_center(), Some(1));
    }

    #[test]
    fn centers_and_canonical_codes() {
        assert_eq!(families::path(5).unwrap().centers(), vec![3]);
        assert_eq!(families::path(6).unwrap().centers(), vec![3, 4]);
        assert_eq!(families::star(7).unwrap().centers(), vec![1]);

        // relabeled paths share a code
        let a = tree("1-2,2-3");
        let b = tree("2-1,1-3");
        assert_eq!(a.canonical_code(), b.canonical_code());
        // star vs path on 4 vertices differ
        assert_ne!(
            families::star(4).unwrap().canonical_code(),
            families::path(4).unwrap().canonical_code()
        );
        assert_eq!(a.canonical_hex(), {
            let code = a.canonical_code();
            code.iter().map(|b| format!("{b:02x}")).collect::<String>()
        });
    }

    #[test]
    fn next_step_toward_walks_the_unique_path() {
        let t1 = families::fixture("t1").unwrap();
        assert_eq!(t1.next_step_toward(1, 8), 2);
        assert_eq!(t1.next_step_toward(8, 1), 7);
        assert_eq!(t1.next_step_toward(5, 6), 4);
        assert_eq!(t1.next_step_toward(2, 3), 3);
    }

    #[test]
    fn enumeration_counts_match_published_table() {
        let expected = [
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 3),
            (6, 6),
            (7, 11),
            (8, 23),
            (9, 47),
        ];
        for (n, count) in expected {
            assert_eq!(enumerate_trees(n).unwrap().len(), count, "n={n}");
        }
        assert!(enumerate_trees(1).is_err());
        assert!(enumerate_trees(11).is_err());
        // spot-check n=10 (supported upper end)
        assert_eq!(enumerate_trees(10).unwrap().len(), 106);
    }

    #[test]
    fn enumeration_is_sorted_and_deduplicated() {
        let trees = enumerate_trees(7).unwrap();
        let codes: Vec<Vec<u8>> = trees.iter().map(|t| t.canonical_code()).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
        for t in &trees {
            assert_eq!(t.order(), 7);
            assert!(t.has_standard_labels());
        }
    }

    #[test]
    fn prufer_oracle_agrees_with_leaf_growth() {
        // the empty sequence is the single edge
        assert_eq!(
            prufer::tree_from_prufer(&[]).unwrap(),
            TranspositionTree::new(2, [(1, 2)]).unwrap()
        );
        // classic worked example: [4,4,4,5] on n=6
        let t = prufer::tree_from_prufer(&[4, 4, 4, 5]).unwrap();
        assert_eq!(t.to_string(), "1-4,2-4,3-4,4-5,5-6");
        for n in 2..=8 {
            assert_eq!(
                prufer::isomorphism_class_count(n).unwrap(),
                enumerate_trees(n).unwrap().len(),
                "n={n}"
            );
        }
    }

    #[test]
    fn distance_matrix_cross_check() {
        // Floyd–Warshall recomputation must agree with the BFS-built matrix.
        for t in enumerate_trees(7).unwrap() {
            let n = t.order();
            let labels = t.labels();
            let big = u32::MAX / 4;
            let mut fw = vec![vec![big; n]; n];
            for (i, row) in fw.iter_mut().enumerate() {
                row[i] = 0;
            }
            for e in t.edges() {
                let a = labels.iter().position(|&l| l == e.i()).unwrap();
                let b = labels.iter().position(|&l| l == e.j()).unwrap();
                fw[a][b] = 1;
                fw[b][a] = 1;
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        fw[i][j] = fw[i][j].min(fw[i][k] + fw[k][j]);
                    }
                }
            }
            for (a, &la) in labels.iter().enumerate() {
                for (b, &lb) in labels.iter().enumerate() {
                    assert_eq!(t.dist(la, lb), fw[a][b]);
                }
            }
        }
    }

    #[test]
    fn pair_list_parsing() {
        assert_eq!(
            parse_pair_list("1-2, 1-4 ,1-2").unwrap(),
            vec![pair(1, 2), pair(1, 4), pair(1, 2)]
        );
        assert_eq!(parse_pair_list("").unwrap(), vec![]);
        assert!(parse_pair_list("1-1").is_err());
        assert!(parse_pair_list("1~2").is_err());
    }

    fn arb_tree(max_n: usize) -> impl Strategy<Value = TranspositionTree> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(1..=n as u8, n.saturating_sub(2))
                .prop_map(|seq| prufer::tree_from_prufer(&seq).unwrap())
        })
    }

    proptest! {
        #[test]
        fn prop_diametral_endpoints_are_leaves(t in arb_tree(9)) {
            let leaves = t.leaves();
            for p in t.diametral_pairs() {
                prop_assert!(leaves.contains(&p.i()));
                prop_assert!(leaves.contains(&p.j()));
            }
        }

        #[test]
        fn prop_removing_diametral_pair_keeps_a_tree(t in arb_tree(9)) {
            prop_assume!(t.order() >= 3);
            for p in t.diametral_pairs() {
                let sub = t.remove_leaf_pair(p).unwrap();
                prop_assert_eq!(sub.order(), t.order() - 2);
                prop_assert_eq!(sub.edges().len(), sub.order() - 1);
            }
        }

        #[test]
        fn prop_canonical_code_is_relabeling_invariant(
            t in arb_tree(8),
            seed in 0u64..,
        ) {
            use crate::perm::Permutation;
            let n = t.order();
            let sigma = Permutation::unrank(seed % crate::perm::FACTORIAL[n], n).unwrap();
            let relabeled = TranspositionTree::new(
                n,
                t.edges().iter().map(|e| (sigma.apply(e.i()), sigma.apply(e.j()))),
            )
            .unwrap();
            prop_assert_eq!(relabeled.canonical_code(), t.canonical_code());
        }

        #[test]
        fn prop_tree_distances_are_a_metric(t in arb_tree(9)) {
            let ls = t.labels().to_vec();
            for &a in &ls {
                for &b in &ls {
                    prop_assert_eq!(t.dist(a, b), t.dist(b, a));
                    for &c in &ls {
                        prop_assert!(t.dist(a, c) <= t.dist(a, b) + t.dist(b, c));
                    }
                }
            }
        }
    }
}
