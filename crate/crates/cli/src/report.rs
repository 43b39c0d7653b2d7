//! Computation layer behind the CLI verbs: each function composes the
//! library crate's estimators and the exhaustive Cayley search into one
//! serializable report with deterministic field order.
//!
//! Quantities that a given invocation cannot compute exactly (scale caps,
//! or the user's `--max-n`) are reported as `null` plus a human-readable
//! entry in `notes`, never silently dropped.

use std::fmt;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use serde::Serialize;

use cayley_trees::bounds::{
    self, algorithm_a, enumerate_beta_set, f_upper_bound, PairPolicy, MAX_BETA_N, MAX_SWEEP_N,
};
use cayley_trees::cayley::{ak_sort, distance, replay_word};
use cayley_trees::cayley::{CayleyMetrics, DistanceTable, MAX_BFS_N, MAX_BFS_N_EXTENDED};
use cayley_trees::perm::Permutation;
use cayley_trees::tree::{enumerate_trees, families, TranspositionTree, TreeError, VertexPair};

pub const SCHEMA_VERSION: u32 = 1;

/// Hard ceiling on `--max-n`: a rank-indexed distance byte per vertex stops
/// being desk-scale past 11!.
pub const MAX_SUPPORTED_N: usize = MAX_BFS_N_EXTENDED;

/// Errors surfaced to the user, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit code 1.
    Validation(String),
    /// Well-formed but beyond desk scale: exit code 2.
    Infeasible(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) | CliError::Infeasible(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Infeasible(_) => 2,
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::SizeOutOfRange { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<cayley_trees::perm::PermError> for CliError {
    fn from(e: cayley_trees::perm::PermError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<bounds::BoundsError> for CliError {
    fn from(e: bounds::BoundsError) -> Self {
        match e {
            bounds::BoundsError::TooLarge { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<cayley_trees::cayley::CayleyError> for CliError {
    fn from(e: cayley_trees::cayley::CayleyError) -> Self {
        match e {
            cayley_trees::cayley::CayleyError::TooLarge { .. } => {
                CliError::Infeasible(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

/// Flags shared by every verb.
#[derive(Debug, Clone)]
pub struct Options {
    /// Cap on `n` for exactly-computed quantities (BFS diameter, f(T)
    /// sweep). Default 10; up to 11 for the extended BFS.
    pub max_n: usize,
    /// Diametral-pair selection rule for the displayed single run.
    pub policy: PairPolicy,
    /// Directory for distance-table dumps, reused across runs.
    pub cache_dir: Option<PathBuf>,
}

impl Options {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_n > MAX_SUPPORTED_N {
            return Err(CliError::Infeasible(format!(
                "--max-n {} exceeds the supported ceiling {MAX_SUPPORTED_N} \
                 (the distance table would not fit desk scale)",
                self.max_n
            )));
        }
        if self.max_n < 2 {
            return Err(CliError::Validation(format!(
                "--max-n {} is below the smallest valid tree (n=2)",
                self.max_n
            )));
        }
        Ok(())
    }
}

/// Resolves a tree argument: the edge-list grammar
/// `[n=<int>;]<i>-<j>(,<i>-<j>)*` when the string starts with a digit or
/// the `n=` prefix, else a fixture name (`t1`, `theorem6-5v`, `path-7`, …).
pub fn resolve_tree(spec: &str) -> Result<TranspositionTree, CliError> {
    if spec.starts_with("n=") || spec.starts_with(|c: char| c.is_ascii_digit()) {
        spec.parse::<TranspositionTree>().map_err(CliError::from)
    } else {
        families::fixture(spec)
            .ok_or_else(|| CliError::Validation(format!("unknown or invalid fixture name: {spec}")))
    }
}

// ---------------------------------------------------------------------------
// Distance-table caching

fn fnv1a64(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Cache file name: canonical code keys the isomorphism class, the labeled
/// edge hash pins the exact labeling (rank-indexed tables are not
/// relabeling-invariant), and the dump header re-verifies on load.
fn cache_file_name(t: &TranspositionTree) -> String {
    let labeled = fnv1a64(t.edges().iter().flat_map(|e| [e.i(), e.j()]));
    format!(
        "bfs-v1-n{}-{}-{:016x}.bin",
        t.order(),
        t.canonical_hex(),
        labeled
    )
}

fn load_cached(path: &Path, t: &TranspositionTree) -> Option<DistanceTable> {
    let file = File::open(path).ok()?;
    DistanceTable::read_from(BufReader::new(file), t).ok()
}

fn store_cached(path: &Path, table: &DistanceTable) {
    let write = || -> std::io::Result<()> {
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let mut out = BufWriter::new(File::create(path)?);
        table
            .write_to(&mut out)
            .map_err(|e| std::io::Error::other(e.to_string()))
    };
    if let Err(e) = write() {
        eprintln!(
            "warning: could not write cache file {}: {e}",
            path.display()
        );
    }
}

/// Distance table for one tree, through the cache when one is configured;
/// `None` when `n` exceeds the cap.
fn table_for(t: &TranspositionTree, opts: &Options) -> Result<Option<DistanceTable>, CliError> {
    if t.order() > opts.max_n {
        return Ok(None);
    }
    let table = match opts.cache_dir.as_deref() {
        Some(dir) => {
            let path = dir.join(cache_file_name(t));
            match load_cached(&path, t) {
                Some(table) => table,
                None => {
                    let table = DistanceTable::build(t)?;
                    store_cached(&path, &table);
                    table
                }
            }
        }
        None => DistanceTable::build(t)?,
    };
    Ok(Some(table))
}

/// Full metrics for one tree; `None` when `n` exceeds the cap.
fn exact_metrics(t: &TranspositionTree, opts: &Options) -> Result<Option<CayleyMetrics>, CliError> {
    Ok(table_for(t, opts)?.map(|table| table.metrics()))
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Debug, Serialize)]
pub struct TreeDescriptor {
    pub edges: String,
    pub canonical: String,
}

impl TreeDescriptor {
    fn new(t: &TranspositionTree) -> TreeDescriptor {
        TreeDescriptor {
            edges: t.to_string(),
            canonical: t.canonical_hex(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AlgorithmARun {
    pub policy: String,
    pub pairs: String,
    pub step_diameters: Vec<u32>,
    pub beta: u32,
}

#[derive(Debug, Serialize)]
pub struct TreeReport {
    pub schema_version: u32,
    pub tree: TreeDescriptor,
    pub n: usize,
    pub exact_diameter: Option<u32>,
    pub f_bound: Option<u32>,
    pub beta_set: Option<Vec<u32>>,
    pub beta_max: Option<u32>,
    pub gap_f: Option<u32>,
    pub gap_beta: Option<u32>,
    pub sharp: Option<bool>,
    pub witness: Option<String>,
    pub algorithm_a: AlgorithmARun,
    pub notes: Vec<String>,
}

fn policy_name(policy: PairPolicy) -> &'static str {
    match policy {
        PairPolicy::Lex => "lex",
        PairPolicy::MaxSubtreeDiameter => "maxdiam",
        PairPolicy::MinSubtreeDiameter => "mindiam",
    }
}

fn join_pairs(pairs: &[VertexPair]) -> String {
    pairs
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn analyze(t: &TranspositionTree, opts: &Options) -> Result<TreeReport, CliError> {
    let n = t.order();
    let mut notes = Vec::new();

    let metrics = exact_metrics(t, opts)?;
    if metrics.is_none() {
        notes.push(format!(
            "exact diameter skipped: n={n} exceeds --max-n {}",
            opts.max_n
        ));
    }
    let f = if n <= MAX_SWEEP_N.min(opts.max_n) {
        Some(f_upper_bound(t)?)
    } else {
        notes.push(format!(
            "f(T) sweep skipped: n={n} exceeds the n! cap ({})",
            MAX_SWEEP_N.min(opts.max_n)
        ));
        None
    };
    let beta = if n <= MAX_BETA_N {
        Some(enumerate_beta_set(t)?)
    } else {
        notes.push(format!("β-set search skipped: n={n} exceeds {MAX_BETA_N}"));
        None
    };
    let run = algorithm_a(t, opts.policy)?;

    let exact_diameter = metrics.as_ref().map(|m| m.diameter);
    let f_bound = f.as_ref().map(|fb| fb.value);
    let beta_max = beta.as_ref().map(|b| b.beta_max());
    Ok(TreeReport {
        schema_version: SCHEMA_VERSION,
        tree: TreeDescriptor::new(t),
        n,
        exact_diameter,
        f_bound,
        beta_set: beta.as_ref().map(|b| b.values().iter().copied().collect()),
        beta_max,
        gap_f: exact_diameter.and_then(|d| f_bound.map(|f| f - d)),
        gap_beta: exact_diameter.and_then(|d| beta_max.map(|b| b - d)),
        sharp: exact_diameter.and_then(|d| f_bound.map(|f| f == d)),
        witness: metrics.as_ref().map(|m| m.peripheral_witness.to_string()),
        algorithm_a: AlgorithmARun {
            policy: policy_name(opts.policy).to_string(),
            pairs: join_pairs(&run.pairs),
            step_diameters: run.step_diameters.clone(),
            beta: run.beta,
        },
        notes,
    })
}

// ---------------------------------------------------------------------------
// table1

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub s_n: u64,
    pub h_n: u64,
    pub delta_n: u32,
    pub gamma_n: u64,
}

#[derive(Debug, Serialize)]
pub struct Table1Report {
    pub schema_version: u32,
    pub rows: Vec<TableRow>,
}

pub fn table1(n_min: usize, n_max: usize, opts: &Options) -> Result<Table1Report, CliError> {
    if n_min > n_max || n_min < 5 {
        return Err(CliError::Validation(format!(
            "table range must satisfy 5 ≤ n_min ≤ n_max (got {n_min}..{n_max})"
        )));
    }
    if n_max > 9 {
        return Err(CliError::Infeasible(format!(
            "table statistics need every tree's exact diameter and f(T); n={n_max} exceeds 9"
        )));
    }
    if n_max > opts.max_n {
        return Err(CliError::Infeasible(format!(
            "table needs exact diameters up to n={n_max}, but --max-n is {}",
            opts.max_n
        )));
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let mut s = 0u64;
        let mut h = 0u64;
        let mut gaps = Vec::new();
        for t in enumerate_trees(n)? {
            let diameter = exact_metrics(&t, opts)?
                .expect("n ≤ max_n was checked above")
                .diameter;
            let f = f_upper_bound(&t)?.value;
            let gap = f - diameter;
            s += 1;
            if gap == 0 {
                h += 1;
            }
            gaps.push(gap);
        }
        let delta = gaps.iter().copied().max().unwrap_or(0);
        let gamma = gaps.iter().filter(|&&g| g == delta).count() as u64;
        rows.push(TableRow {
            n,
            s_n: s,
            h_n: h,
            delta_n: delta,
            gamma_n: gamma,
        });
    }
    Ok(Table1Report {
        schema_version: SCHEMA_VERSION,
        rows,
    })
}

// ---------------------------------------------------------------------------
// caterpillar

#[derive(Debug, Serialize)]
pub struct CaterpillarReport {
    pub schema_version: u32,
    pub tree: TreeDescriptor,
    pub n: usize,
    /// `n(n−1)/2 − 2`: verified by sweep when feasible, else the closed
    /// form.
    pub f_bound: u32,
    pub f_bound_swept: bool,
    pub exact_diameter: Option<u32>,
    /// Every marker can be homed within `C(n−1,2) + 1` swaps on this
    /// family, so the diameter never exceeds it.
    pub diameter_upper_bound: u32,
    pub gap: Option<u32>,
    /// `n − 4`, implied by the two bounds above.
    pub gap_at_least: u32,
    pub notes: Vec<String>,
}

pub fn caterpillar(n: usize, opts: &Options) -> Result<CaterpillarReport, CliError> {
    if n < 5 {
        return Err(CliError::Validation(format!(
            "the two-leaf caterpillar needs n ≥ 5 (got {n})"
        )));
    }
    let t = families::caterpillar(n)?;
    let mut notes = Vec::new();
    let formula = (n * (n - 1) / 2 - 2) as u32;
    let (f_bound, swept) = if n <= MAX_SWEEP_N.min(opts.max_n) {
        let swept = f_upper_bound(&t)?.value;
        assert_eq!(swept, formula, "the sweep must agree with the closed form");
        (swept, true)
    } else {
        notes.push(format!(
            "f(T) reported from the closed form; n={n} exceeds the sweep cap"
        ));
        (formula, false)
    };
    let metrics = exact_metrics(&t, opts)?;
    if metrics.is_none() {
        notes.push(format!(
            "exact diameter skipped: n={n} exceeds --max-n {}",
            opts.max_n
        ));
    }
    let exact_diameter = metrics.map(|m| m.diameter);
    Ok(CaterpillarReport {
        schema_version: SCHEMA_VERSION,
        tree: TreeDescriptor::new(&t),
        n,
        f_bound,
        f_bound_swept: swept,
        exact_diameter,
        diameter_upper_bound: ((n - 1) * (n - 2) / 2 + 1) as u32,
        gap: exact_diameter.map(|d| f_bound - d),
        gap_at_least: (n - 4) as u32,
        notes,
    })
}

// ---------------------------------------------------------------------------
// conjectures

#[derive(Debug, Serialize)]
pub struct BetaFinding {
    pub n: usize,
    pub edges: String,
    pub beta_set: Vec<u32>,
    pub beta_max: u32,
    pub f_bound: u32,
    pub exact_diameter: u32,
}

#[derive(Debug, Serialize)]
pub struct ConjectureReport {
    pub schema_version: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub trees_scanned: u64,
    /// Trees where the best estimate misses the classical bound — would
    /// answer "is β_max always f(T)?" negatively.
    pub beta_max_below_f: Vec<BetaFinding>,
    /// Trees whose estimate depends on the pair choices.
    pub multi_valued_beta: Vec<BetaFinding>,
    /// Trees with some reachable β below the true diameter — would refute
    /// "every β is an upper bound". Reported, never assumed empty.
    pub beta_below_diameter: Vec<BetaFinding>,
}

pub fn conjectures(n_max: usize, opts: &Options) -> Result<ConjectureReport, CliError> {
    const N_MIN: usize = 2;
    if n_max < N_MIN {
        return Err(CliError::Validation(format!(
            "the scan needs n ≥ {N_MIN} (got {n_max})"
        )));
    }
    if n_max > 9 {
        return Err(CliError::Infeasible(format!(
            "the scan needs every tree's exact diameter and f(T); n={n_max} exceeds 9"
        )));
    }
    if n_max > opts.max_n {
        return Err(CliError::Infeasible(format!(
            "the scan needs exact diameters up to n={n_max}, but --max-n is {}",
            opts.max_n
        )));
    }
    let mut report = ConjectureReport {
        schema_version: SCHEMA_VERSION,
        n_min: N_MIN,
        n_max,
        trees_scanned: 0,
        beta_max_below_f: Vec::new(),
        multi_valued_beta: Vec::new(),
        beta_below_diameter: Vec::new(),
    };
    for n in N_MIN..=n_max {
        for t in enumerate_trees(n)? {
            report.trees_scanned += 1;
            let beta = enumerate_beta_set(&t)?;
            let f = f_upper_bound(&t)?.value;
            let diameter = exact_metrics(&t, opts)?
                .expect("n ≤ max_n was checked above")
                .diameter;
            let finding = || BetaFinding {
                n,
                edges: t.to_string(),
                beta_set: beta.values().iter().copied().collect(),
                beta_max: beta.beta_max(),
                f_bound: f,
                exact_diameter: diameter,
            };
            if beta.beta_max() < f {
                report.beta_max_below_f.push(finding());
            }
            if !beta.is_singleton() {
                report.multi_valued_beta.push(finding());
            }
            if beta.values().iter().any(|&b| b < diameter) {
                report.beta_below_diameter.push(finding());
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// sort

#[derive(Debug, Serialize)]
pub struct ReplayStepReport {
    pub edge: String,
    /// "A", "B", or `null` when the step was inadmissible.
    pub kind: Option<String>,
    pub f_after: u32,
}

#[derive(Debug, Serialize)]
pub struct ReplayOutcome {
    pub word: String,
    pub length: usize,
    pub steps: Vec<ReplayStepReport>,
    /// 1-based step number of the first inadmissible move.
    pub first_invalid: Option<usize>,
    pub sorted: bool,
    pub valid: bool,
}

#[derive(Debug, Serialize)]
pub struct SortReport {
    pub schema_version: u32,
    pub tree: TreeDescriptor,
    pub n: usize,
    pub permutation: String,
    pub cycles: String,
    pub f_t: u32,
    pub ak_word: String,
    pub ak_word_length: usize,
    pub ak_edge_kinds: String,
    pub exact_distance: Option<u32>,
    /// Whether the produced word matches the exact distance.
    pub ak_optimal: Option<bool>,
    pub replay: Option<ReplayOutcome>,
    pub notes: Vec<String>,
}

pub fn sort(
    t: &TranspositionTree,
    p: &Permutation,
    replay: Option<&[VertexPair]>,
    opts: &Options,
) -> Result<SortReport, CliError> {
    let n = t.order();
    let mut notes = Vec::new();
    let trace = ak_sort(t, p)?;
    let f_t = bounds::f_t(t, p)?;

    let exact = if n <= opts.max_n {
        // Reuse a cached table when one is configured; otherwise a one-off
        // bidirectional query (n ≤ 10) or a fresh table (n = 11).
        if opts.cache_dir.is_some() || n > MAX_BFS_N {
            let table = table_for(t, opts)?.expect("n ≤ max_n was checked above");
            Some(table.distance(p)?)
        } else {
            Some(distance(t, p)?)
        }
    } else {
        notes.push(format!(
            "exact distance skipped: n={n} exceeds --max-n {}",
            opts.max_n
        ));
        None
    };

    let replay = match replay {
        Some(word) => {
            let outcome = replay_word(t, p, word)?;
            Some(ReplayOutcome {
                word: join_pairs(word),
                length: outcome.word_length(),
                steps: outcome
                    .steps
                    .iter()
                    .map(|s| ReplayStepReport {
                        edge: s.edge.to_string(),
                        kind: s.kind.map(|k| k.to_string()),
                        f_after: s.f_after,
                    })
                    .collect(),
                first_invalid: outcome.first_invalid,
                sorted: outcome.sorted,
                valid: outcome.is_valid(),
            })
        }
        None => None,
    };

    Ok(SortReport {
        schema_version: SCHEMA_VERSION,
        tree: TreeDescriptor::new(t),
        n,
        permutation: p.to_string(),
        cycles: p.cycle_string(),
        f_t,
        ak_word: join_pairs(&trace.edges_applied),
        ak_word_length: trace.word_length,
        ak_edge_kinds: trace.edge_kinds.iter().map(|k| k.to_string()).collect(),
        exact_distance: exact,
        ak_optimal: exact.map(|d| d == trace.word_length as u32),
        replay,
        notes,
    })
}

// ---------------------------------------------------------------------------
// enumerate-trees

#[derive(Debug, Serialize)]
pub struct EnumeratedTree {
    pub index: usize,
    pub edges: String,
    pub canonical: String,
}

#[derive(Debug, Serialize)]
pub struct EnumerationReport {
    pub schema_version: u32,
    pub n: usize,
    pub count: usize,
    pub trees: Vec<EnumeratedTree>,
}

pub fn enumerate(n: usize) -> Result<EnumerationReport, CliError> {
    let trees = enumerate_trees(n)?;
    Ok(EnumerationReport {
        schema_version: SCHEMA_VERSION,
        n,
        count: trees.len(),
        trees: trees
            .iter()
            .enumerate()
            .map(|(i, t)| EnumeratedTree {
                index: i + 1,
                edges: t.to_string(),
                canonical: t.canonical_hex(),
            })
            .collect(),
    })
}
