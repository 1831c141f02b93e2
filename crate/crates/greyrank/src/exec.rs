use std::num::NonZeroUsize;
use std::thread;

use greyrank_core::dea::Executor;

use crate::error::CliError;

pub const THREADS_VAR: &str = "GREYRANK_THREADS";

/// Runs jobs on scoped worker threads, striding over the index range.
#[derive(Debug, Clone, Copy)]
pub struct Threaded {
    threads: usize,
}

impl Threaded {
    pub fn new(threads: usize) -> Self {
        Self { threads: threads.max(1) }
    }

    /// Worker count from `GREYRANK_THREADS`, else the available parallelism.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var(THREADS_VAR) {
            Ok(v) => v
                .trim()
                .parse::<NonZeroUsize>()
                .map(|n| Self::new(n.get()))
                .map_err(|_| CliError::Validation(format!("{THREADS_VAR}={v} is not a positive integer"))),
            Err(_) => Ok(Self::new(thread::available_parallelism().map_or(1, NonZeroUsize::get))),
        }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }
}

impl Executor for Threaded {
    fn map<T, F>(&self, count: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        let workers = self.threads.min(count);
        if workers <= 1 {
            return (0..count).map(job).collect();
        }
        let job = &job;
        let mut parts: Vec<Vec<(usize, T)>> = thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| s.spawn(move || (w..count).step_by(workers).map(|k| (k, job(k))).collect()))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut slots: Vec<Option<T>> = (0..count).map(|_| None).collect();
        for (k, value) in parts.drain(..).flatten() {
            slots[k] = Some(value);
        }
        slots.into_iter().map(|v| v.expect("every index ran")).collect()
    }
}
