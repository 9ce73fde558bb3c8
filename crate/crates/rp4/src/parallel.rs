//! Thread-parallel versions of the per-vertex link checks and the seeded
//! restarts. Results never depend on the number of workers.

use std::num::NonZeroUsize;
use std::thread;

use rp4_core::complex::{SimplicialComplex, Vertex};
use rp4_core::flips::{reduce_single, FlipError, ReduceConfig, ReductionReport};
use rp4_core::manifold::{check_vertex_link, is_closed_pseudomanifold, LinkStatus, ManifoldReport};

/// `requested`, or the machine's parallelism when absent.
pub fn worker_count(requested: Option<usize>) -> usize {
    requested
        .filter(|&j| j > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, NonZeroUsize::get))
}

/// Applies `f` to every index below `n` on up to `jobs` threads; output is
/// in index order.
pub fn map_indexed<T, F>(n: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let jobs = jobs.clamp(1, n.max(1));
    if jobs == 1 {
        return (0..n).map(&f).collect();
    }
    let f = &f;
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| s.spawn(move || (w..n).step_by(jobs).map(|i| (i, f(i))).collect::<Vec<_>>()))
            .collect();
        for h in handles {
            for (i, v) in h.join().expect("worker panicked") {
                slots[i] = Some(v);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("every index computed")).collect()
}

/// Same result as `check_combinatorial_manifold`, with links checked in
/// parallel.
pub fn check_manifold(complex: &SimplicialComplex, config: &ReduceConfig, jobs: usize) -> ManifoldReport {
    let pseudomanifold = is_closed_pseudomanifold(complex);
    let links: Vec<(Vertex, LinkStatus)> = if pseudomanifold.closed {
        let vs = complex.vertices();
        map_indexed(vs.len(), jobs, |i| (vs[i], check_vertex_link(complex, vs[i], config)))
    } else {
        Vec::new()
    };
    ManifoldReport { pseudomanifold, links }
}

/// Same result as `reduce_with_restarts`: the lowest-index certified
/// restart, else the smallest f-vector with ties to the lower index.
pub fn reduce_restarts(
    complex: &SimplicialComplex,
    config: &ReduceConfig,
    jobs: usize,
) -> Result<ReductionReport, FlipError> {
    let runs = config.restarts.max(1);
    let reports = map_indexed(runs, jobs, |i| reduce_single(complex, config, config.seed.wrapping_add(i as u64), i));
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    if let Some(r) = reports.iter().find(|r| r.certified) {
        return Ok(r.clone());
    }
    let mut best = &reports[0];
    for r in &reports[1..] {
        if r.complex.f_vector().0 < best.complex.f_vector().0 {
            best = r;
        }
    }
    Ok(best.clone())
}
