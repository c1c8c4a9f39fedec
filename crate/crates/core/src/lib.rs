//! Cycle-spectrum certification for balanced bipartite graphs on labels
//! `0..2n` (even labels form one class, odd labels the other), with the
//! shortcut and crossing constructions, direction statistics, edge-deletion
//! adversaries and seeded experiment runners built on top.

pub mod adversary;
pub mod bigraph;
pub mod cli;
pub mod cycles;
pub mod directions;
pub mod error;
pub mod experiments;
pub mod shortcuts;

pub use bigraph::{
    chernoff_tail_bound, circ_dist, complete_bipartite, cycle_graph, sample_random, BalancedBipartiteGraph, Edge,
    ParityPermutation, RandomModel,
};
pub use cycles::{
    even_cycle_spectrum, is_bipancyclic, validate_cycle, CycleCertificate, LengthStatus, SpectrumMode, SpectrumReport,
    Verdict,
};
pub use error::{Error, Result};
