//! On-disk cache: one JSON document per `(quantity, n, cap)`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::recursion::{natural_cap, MnCache, MnEntry};
use crate::symfunc::{SymFunc, SymFuncDoc};

/// Documents written by a different engine version are ignored on load.
pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDoc {
    pub engine_version: String,
    pub quantity: String,
    pub n: usize,
    pub cap: usize,
    pub created_unix: u64,
    pub trusted: bool,
    pub value: SymFuncDoc,
}

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("cache I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("corrupt cache entry {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
}

/// A listed cache file. `doc` is the parse failure for unreadable files.
#[derive(Debug)]
pub struct Listing {
    pub path: PathBuf,
    pub doc: std::result::Result<CacheDoc, String>,
}

#[derive(Clone, Debug)]
pub struct Store {
    dir: PathBuf,
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> StoreError + '_ {
    move |source| StoreError::Io {
        path: path.to_path_buf(),
        source,
    }
}

impl Store {
    /// Opens `dir`, creating it if needed.
    pub fn open(dir: impl Into<PathBuf>) -> std::result::Result<Self, StoreError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        Ok(Store { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, quantity: &str, n: usize, cap: usize) -> PathBuf {
        self.dir.join(format!("{quantity}-n{n}-cap{cap}.json"))
    }

    /// `None` when absent or written by another engine version.
    pub fn load(
        &self,
        quantity: &str,
        n: usize,
        cap: usize,
    ) -> std::result::Result<Option<CacheDoc>, StoreError> {
        let path = self.path(quantity, n, cap);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(io_err(&path)(e)),
        };
        let corrupt = |reason: String| StoreError::Corrupt {
            path: path.clone(),
            reason,
        };
        let doc: CacheDoc = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
        if doc.engine_version != ENGINE_VERSION {
            return Ok(None);
        }
        if doc.quantity != quantity || doc.n != n || doc.cap != cap {
            return Err(corrupt(format!(
                "file holds {}-n{}-cap{}",
                doc.quantity, doc.n, doc.cap
            )));
        }
        if doc.value.n != n || doc.value.cap != cap {
            return Err(corrupt(format!(
                "value has n = {} and cap = {}",
                doc.value.n, doc.value.cap
            )));
        }
        SymFunc::from_doc(&doc.value).map_err(|e| corrupt(e.to_string()))?;
        Ok(Some(doc))
    }

    /// Loads and decodes the stored value.
    pub fn load_value(
        &self,
        quantity: &str,
        n: usize,
        cap: usize,
    ) -> std::result::Result<Option<SymFunc>, StoreError> {
        let path = self.path(quantity, n, cap);
        match self.load(quantity, n, cap)? {
            None => Ok(None),
            Some(doc) => SymFunc::from_doc(&doc.value)
                .map(Some)
                .map_err(|e| StoreError::Corrupt {
                    path,
                    reason: e.to_string(),
                }),
        }
    }

    /// Writes via a temporary file and rename, so readers never see a
    /// partial document.
    pub fn save(&self, doc: &CacheDoc) -> std::result::Result<(), StoreError> {
        let path = self.path(&doc.quantity, doc.n, doc.cap);
        let tmp = self.dir.join(format!(
            ".{}-n{}-cap{}.{}.tmp",
            doc.quantity,
            doc.n,
            doc.cap,
            std::process::id()
        ));
        let body = serde_json::to_string(doc).expect("cache documents serialize");
        let write = || -> io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
            f.write_all(b"\n")?;
            f.sync_all()?;
            fs::rename(&tmp, &path)
        };
        write().map_err(io_err(&path))
    }

    /// Cache files sorted by name.
    pub fn entries(&self) -> std::result::Result<Vec<Listing>, StoreError> {
        let mut paths = Vec::new();
        for e in fs::read_dir(&self.dir).map_err(io_err(&self.dir))? {
            let path = e.map_err(io_err(&self.dir))?.path();
            if is_cache_file(&path) {
                paths.push(path);
            }
        }
        paths.sort();
        Ok(paths
            .into_iter()
            .map(|path| {
                let doc = fs::read_to_string(&path)
                    .map_err(|e| e.to_string())
                    .and_then(|t| serde_json::from_str(&t).map_err(|e| e.to_string()));
                Listing { path, doc }
            })
            .collect())
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> std::result::Result<usize, StoreError> {
        let mut removed = 0;
        for listing in self.entries()? {
            fs::remove_file(&listing.path).map_err(io_err(&listing.path))?;
            removed += 1;
        }
        Ok(removed)
    }

    /// Reads `ch M_1, ch M_2, ..` for as long as consecutive entries exist,
    /// stopping at `up_to`.
    pub fn load_mn_cache(&self, up_to: usize) -> std::result::Result<MnCache, StoreError> {
        let mut cache = MnCache::new();
        for n in 1..=up_to {
            let cap = natural_cap(n);
            let Some(doc) = self.load("M", n, cap)? else {
                break;
            };
            let corrupt = |reason: String| StoreError::Corrupt {
                path: self.path("M", n, cap),
                reason,
            };
            let value = SymFunc::from_doc(&doc.value).map_err(|e| corrupt(e.to_string()))?;
            let entry = MnEntry {
                value,
                created_unix: doc.created_unix,
                trusted: doc.trusted,
            };
            cache
                .insert_entry(n, entry)
                .map_err(|e| corrupt(e.to_string()))?;
        }
        Ok(cache)
    }

    /// Writes every entry of `cache` that is missing on disk, and upgrades
    /// stored entries to trusted. A trusted entry is never downgraded.
    pub fn save_mn_cache(&self, cache: &MnCache) -> std::result::Result<(), StoreError> {
        for (n, entry) in cache.entries() {
            let cap = natural_cap(n);
            let existing = self.load("M", n, cap).ok().flatten();
            if existing.is_some_and(|d| d.trusted || !entry.trusted) {
                continue;
            }
            self.save(&CacheDoc::new("M", n, entry)?)?;
        }
        Ok(())
    }
}

impl CacheDoc {
    fn new(quantity: &str, n: usize, entry: &MnEntry) -> std::result::Result<Self, StoreError> {
        Self::from_value(quantity, &entry.value, entry.created_unix, entry.trusted).map_err(|e| {
            StoreError::Corrupt {
                path: PathBuf::from(format!("{quantity}-n{n}")),
                reason: e,
            }
        })
    }

    /// Wraps a value; fails when a coefficient is not a machine integer.
    pub fn from_value(
        quantity: &str,
        value: &SymFunc,
        created_unix: u64,
        trusted: bool,
    ) -> std::result::Result<Self, String> {
        let value = value.to_doc().map_err(|e| e.to_string())?;
        Ok(CacheDoc {
            engine_version: ENGINE_VERSION.to_string(),
            quantity: quantity.to_string(),
            n: value.n,
            cap: value.cap,
            created_unix,
            trusted,
            value,
        })
    }
}

fn is_cache_file(path: &Path) -> bool {
    let Some(name) = path.file_name().and_then(|s| s.to_str()) else {
        return false;
    };
    !name.starts_with('.') && name.ends_with(".json") && name.contains("-n") && name.contains("-cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::RecursionOptions;

    #[test]
    fn round_trip_and_ordering() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let mut cache = MnCache::new();
        cache.extend_to(5, RecursionOptions::default()).unwrap();
        store.save_mn_cache(&cache).unwrap();
        let back = store.load_mn_cache(10).unwrap();
        assert_eq!(back.max_n(), 5);
        for n in 1..=5 {
            assert_eq!(back.get(n), cache.get(n));
        }
        let names: Vec<_> = store
            .entries()
            .unwrap()
            .iter()
            .map(|l| l.path.file_name().unwrap().to_string_lossy().into_owned())
            .collect();
        assert_eq!(names[0], "M-n1-cap0.json");
        assert_eq!(names.len(), 5);
        assert_eq!(store.clear().unwrap(), 5);
        assert_eq!(store.load_mn_cache(10).unwrap().max_n(), 0);
    }

    #[test]
    fn version_mismatch_is_a_miss_and_garbage_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let value = SymFunc::schur(crate::Partition::row(2), 0);
        let mut doc = CacheDoc::from_value("D", &value, 0, false).unwrap();
        store.save(&doc).unwrap();
        assert_eq!(store.load_value("D", 2, 0).unwrap(), Some(value));
        doc.engine_version = "0.0.0".into();
        store.save(&doc).unwrap();
        assert!(store.load("D", 2, 0).unwrap().is_none());
        fs::write(store.path("D", 2, 0), "{not json").unwrap();
        assert!(matches!(store.load("D", 2, 0), Err(StoreError::Corrupt { .. })));
    }

    #[test]
    fn invalid_m_entry_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let bogus = SymFunc::schur(crate::Partition::row(1), 0).scale(&num::BigRational::from_integer((-1).into()));
        let doc = CacheDoc::from_value("M", &bogus, 0, false).unwrap();
        store.save(&doc).unwrap();
        assert!(matches!(store.load_mn_cache(3), Err(StoreError::Corrupt { .. })));
    }
}
