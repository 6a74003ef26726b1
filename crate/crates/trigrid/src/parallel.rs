//! Enumeration split by first-row configuration across a rayon pool.
//!
//! Workers share one node budget and one deadline. Results are merged and
//! sorted, so the output does not depend on scheduling.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use trigrid_core::enumerate::{
    census_from_keys, enumerate_branches, first_row_choices, Census, CensusKey, Enumeration, EnumerationOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub time: Option<Duration>,
}

fn pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    builder.build().expect("thread pool")
}

pub fn enumerate(opts: &EnumerationOptions, limits: Limits) -> trigrid_core::Result<Enumeration> {
    opts.validate()?;
    let deadline = limits.time.map(|t| Instant::now() + t);
    let used = AtomicU64::new(0);
    let budget = opts.node_budget;
    let branches = first_row_choices(opts.n).len();
    let monitor = |nodes: u64| {
        let total = used.fetch_add(nodes, Ordering::Relaxed) + nodes;
        total <= budget && deadline.is_none_or(|d| Instant::now() < d)
    };
    let parts: Vec<trigrid_core::Result<Enumeration>> = pool(limits.jobs)
        .install(|| (0..branches).into_par_iter().map(|k| enumerate_branches(opts, &[k], &monitor)).collect());
    let parts = parts.into_iter().collect::<trigrid_core::Result<Vec<_>>>()?;
    let mut merged = Enumeration::merge(parts);
    // each branch checks the shared budget only every TICK nodes
    if merged.nodes > budget {
        merged.complete = false;
    }
    Ok(merged)
}

pub fn census(opts: &EnumerationOptions, limits: Limits) -> trigrid_core::Result<Census> {
    let e = enumerate(opts, limits)?;
    let keys: Vec<CensusKey> = pool(limits.jobs)
        .install(|| e.diagrams.par_iter().map(|d| CensusKey::of(d, opts.crossing_bound)).collect());
    Ok(census_from_keys(opts, &e, &keys))
}
