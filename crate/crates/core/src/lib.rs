//! Exact combinatorics of residue-separated partitions.
//!
//! The crate revolves around partitions whose parts fall into two residue
//! classes modulo `p`: multiples of `p`, and parts congruent to a fixed
//! residue `r`. Two families of such partitions have equal counts for every
//! weight `n`:
//!
//! - the *separated* class `D(n, p, r)`: the `r`-residue parts are pairwise
//!   distinct and every one of them exceeds every multiple of `p`;
//! - the *staircase* class `O(n, p, r)`: the `r`-residue parts are exactly
//!   `r, r + p, ..., r + (k-1)p` for some `k >= 0`, each appearing once.
//!
//! [`bijection`] realizes the equality by an explicit weight-preserving map
//! and certifies it by exhaustive sweeps. [`classes`] provides membership
//! predicates and counts for these and several related families (even-chain
//! partitions, the signed family behind the `m(4m±1)` theta pattern, and two
//! classes that arise by summing over all residues). [`qseries`] is an
//! exact-integer truncated power series engine used to check the same counts
//! against q-Pochhammer product and sum identities.
//!
//! Everything is exact: no floating point, and integer overflow is reported
//! as an error or panic instead of wrapping.

pub mod bijection;
pub mod classes;
pub mod partition;
pub mod qseries;

pub use partition::{decompose_by_residue, partitions_of, staircase, Partition, ResidueSplit};
