use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

type Cell<V> = Arc<(OnceLock<Arc<V>>, Mutex<()>)>;

/// Keyed memo table with one-time initialization per key.
///
/// Readers of an initialized key never block each other; for an absent key
/// exactly one caller runs the initializer while the others wait on it.
/// A failed initializer leaves the key empty.
pub(crate) struct OnceMap<K, V> {
    cells: Mutex<HashMap<K, Cell<V>>>,
}

impl<K: Eq + Hash + Clone, V> OnceMap<K, V> {
    pub(crate) fn new() -> Self {
        Self {
            cells: Mutex::new(HashMap::new()),
        }
    }

    fn cell(&self, key: &K) -> Cell<V> {
        let mut cells = self.cells.lock().unwrap_or_else(|e| e.into_inner());
        cells.entry(key.clone()).or_default().clone()
    }

    pub(crate) fn get_or_try_init<E>(
        &self,
        key: &K,
        init: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        let cell = self.cell(key);
        if let Some(v) = cell.0.get() {
            return Ok(v.clone());
        }
        let _guard = cell.1.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = cell.0.get() {
            return Ok(v.clone());
        }
        let value = Arc::new(init()?);
        let _ = cell.0.set(value.clone());
        Ok(value)
    }

    pub(crate) fn get_or_init(&self, key: &K, init: impl FnOnce() -> V) -> Arc<V> {
        self.get_or_try_init::<std::convert::Infallible>(key, || Ok(init()))
            .unwrap_or_else(|never| match never {})
    }
}
