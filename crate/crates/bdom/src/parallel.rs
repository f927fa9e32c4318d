//! Threaded enumeration of the orientation index space.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use bdom_core::interval::{accumulate_range, orientation_count, IntervalAccumulator};
use bdom_core::{DominationInterval, Graph, Params, Result};

/// Orientations handed to a worker per claim.
const CHUNK: u64 = 256;

/// `domination_interval` spread over `jobs` workers. Workers claim chunks of
/// consecutive indices; partials merge by set union and first-index minimum,
/// so the result does not depend on `jobs` or on scheduling.
pub fn domination_interval(
    g: &Graph,
    p: Params,
    keep_witnesses: bool,
    jobs: usize,
) -> Result<DominationInterval> {
    p.check_feasible()?;
    let total = orientation_count(g)?;
    let jobs = jobs.max(1);
    if jobs == 1 {
        return bdom_core::domination_interval(g, p, keep_witnesses);
    }
    let next = AtomicU64::new(0);
    let merged = Mutex::new(IntervalAccumulator::new());
    thread::scope(|s| -> Result<()> {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                s.spawn(|| -> Result<()> {
                    let mut local = IntervalAccumulator::new();
                    loop {
                        let start = next.fetch_add(CHUNK, Ordering::Relaxed);
                        if start >= total {
                            break;
                        }
                        local.merge(accumulate_range(g, p, start..(start + CHUNK).min(total))?);
                    }
                    merged.lock().expect("no worker panics while holding the lock").merge(local);
                    Ok(())
                })
            })
            .collect();
        for w in workers {
            w.join().expect("interval worker panicked")?;
        }
        Ok(())
    })?;
    Ok(merged
        .into_inner()
        .expect("lock is not poisoned")
        .finish(g.edge_count(), keep_witnesses))
}
