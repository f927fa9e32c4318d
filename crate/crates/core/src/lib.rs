//! Directed `(t,r)` broadcast domination.
//!
//! A set of towers `S` dominates a (di)graph when every vertex `w` receives
//! at least `r`, where each tower `v` contributes `t - d(v, w)` whenever the
//! (directed) distance is below `t`. This crate computes exact domination
//! numbers, the set of values attained over all orientations of a graph,
//! closed forms for grids and stars, and periodic patterns on tori.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod audit;
pub mod bits;
pub mod error;
pub mod families;
pub mod graph;
pub mod interval;
pub mod lattice;
pub mod solver;

pub use bits::Bits;
pub use error::{Error, Result};
pub use graph::{
    bounded_distances, is_dominating, is_dominating_undirected, reception, reception_undirected,
    Digraph, Graph, Params, ReceptionProfile, TowerSet,
};
pub use interval::{domination_interval, flip_walk, max_step, DominationInterval, WalkTrace};
pub use solver::{gamma, gamma_bruteforce, gamma_undirected, greedy_upper_bound, GammaResult};
