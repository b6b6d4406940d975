//! Seeded pseudo-randomness and bounded parallel sweeps.
//!
//! Relation suites draw their samples from a splitmix generator so that a
//! run is a pure function of the seed. Sweeps over basis enumerations may
//! fan out over threads; the `EINFTY_THREADS` environment variable caps the
//! fan-out and results are reassembled in input order.

/// Splitmix64: enough statistical quality for drawing basis words.
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Thread cap: `EINFTY_THREADS` when set (minimum 1), otherwise the
/// available parallelism.
pub fn thread_cap() -> usize {
    match std::env::var("EINFTY_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(n) => n.max(1),
        None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    }
}

/// Apply `f` to every item, spreading the work over at most
/// [`thread_cap`] threads; the output order matches the input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = thread_cap().min(items.len().max(1));
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<Option<R>> = Vec::with_capacity(items.len());
    out.resize_with(items.len(), || None);
    let slots = std::sync::Mutex::new(&mut out);
    std::thread::scope(|scope| {
        for (t, part) in items.chunks(chunk).enumerate() {
            let f = &f;
            let slots = &slots;
            scope.spawn(move || {
                let results: Vec<R> = part.iter().map(f).collect();
                let mut guard = slots.lock().expect("no panics while holding the lock");
                for (offset, r) in results.into_iter().enumerate() {
                    guard[t * chunk + offset] = Some(r);
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("every slot written")).collect()
}
