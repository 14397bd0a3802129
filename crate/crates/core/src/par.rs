//! Data-parallel helpers. With the `parallel` feature these fan out over the
//! current rayon pool; without it they are plain iterator loops. Results are
//! always returned in input order.

/// How a batch of independent jobs is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    /// One job after another on the calling thread.
    Sequential,
    /// Over the rayon pool (sequential when built without `parallel`).
    #[default]
    Parallel,
}

impl Exec {
    /// Runs `f` under this execution mode. Sequential mode pins every nested
    /// helper in this module to a single worker.
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        match self {
            Exec::Parallel => f(),
            Exec::Sequential => sequential(f),
        }
    }
}

#[cfg(feature = "parallel")]
fn sequential<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(1).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn sequential<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    f()
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn all<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
pub fn all<T, F>(items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    items.iter().all(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..200).collect();
        let par = Exec::Parallel.install(|| map(&items, |x| x * x));
        let seq = Exec::Sequential.install(|| map(&items, |x| x * x));
        assert_eq!(par, seq);
        assert!(Exec::Sequential.install(|| all(&items, |x| *x < 200)));
    }
}
