//! Exact diameter computations for Cayley graphs of the symmetric group
//! generated by transposition trees, together with the estimators those
//! diameters are usually bounded by.
//!
//! A tree `T` on vertices `{1..n}` is read as a set of transpositions; the
//! Cayley graph `Γ` has all `n!` permutations as vertices, with `π` adjacent
//! to `π·(i,j)` for every tree edge `(i,j)`. This crate provides:
//!
//! - [`perm`]: permutations in one-line notation with the statistics the
//!   bounds are built from (cycle count, inversions, fixed points), plus
//!   lexicographic rank/unrank for dense BFS tables.
//! - [`tree`]: validated transposition trees, tree distances, diametral
//!   pairs, leaf-pair removal, canonical codes, and enumeration of all
//!   non-isomorphic trees on `n` vertices.
//! - [`bounds`]: the closed-form estimators — per-permutation bound
//!   `f_T(π) = c(π) − n + Σ dist_T(i, π(i))`, its maximum `f(T)`, the exact
//!   star formula, and the diametral-pair estimate `β` with full enumeration
//!   of its reachable values.
//! - [`cayley`]: ground truth — breadth-first search over all `n!` vertices
//!   (exact distances, diameter, eccentricity profile), marker-sorting via
//!   admissible edges, and replay/validation of prescribed sorting words.
//! - [`report`]: the batch experiment layer used by the CLI — per-tree
//!   reports, sharpness tables over all trees per `n`, and scans for trees
//!   with unusual estimator behaviour.

pub mod bounds;
pub mod cayley;
pub mod perm;
pub mod tree;
