//! Order-preserving parallel map over a fallible stream.

use rayon::prelude::*;

/// Items handed to the pool at once, per worker.
const BATCH_PER_JOB: usize = 64;

/// Applies `work` to every item and passes results to `emit` in input
/// order. With `jobs > 1` a batch of items is processed concurrently and
/// written back in sequence order, so output never depends on `jobs`.
///
/// The first `Err` from the stream stops the run after everything before
/// it has been emitted.
pub fn map_ordered<T, R, E, I, F, W>(items: I, jobs: usize, work: F, mut emit: W) -> Result<(), E>
where
    I: IntoIterator<Item = Result<T, E>>,
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
    W: FnMut(R) -> Result<(), E>,
{
    let mut items = items.into_iter();
    if jobs <= 1 {
        for item in items {
            emit(work(item?))?;
        }
        return Ok(());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let batch_len = jobs * BATCH_PER_JOB;
    loop {
        let mut batch = Vec::with_capacity(batch_len);
        let mut stop = None;
        for item in items.by_ref() {
            match item {
                Ok(t) => batch.push(t),
                Err(e) => {
                    stop = Some(e);
                    break;
                }
            }
            if batch.len() == batch_len {
                break;
            }
        }
        let done = stop.is_some() || batch.len() < batch_len;
        let results: Vec<R> = pool.install(|| batch.into_par_iter().map(&work).collect());
        for r in results {
            emit(r)?;
        }
        if let Some(e) = stop {
            return Err(e);
        }
        if done {
            return Ok(());
        }
    }
}
