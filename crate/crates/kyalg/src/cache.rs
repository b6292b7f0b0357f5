//! Persistent result cache: one JSON file per record under a directory
//! (`KY_CACHE_DIR`, default `.ky-cache`).
//!
//! Records carry the engine version; a version mismatch or a file that
//! fails to parse is recomputed and overwritten.  Writes go to a temporary
//! file in the same directory followed by a rename, so readers never see a
//! partial record.  Within one process, concurrent callers for the same key
//! are serialised so that the producer runs once.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

/// Bumped whenever a payload format or an algorithm affecting payloads
/// changes.
pub const ENGINE_VERSION: &str = concat!("kyalg-", env!("CARGO_PKG_VERSION"), "+1");

pub const CACHE_ENV: &str = "KY_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".ky-cache";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub version: String,
    pub payload: Value,
}

/// Where a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// Computed without persisting (no directory or unwritable).
    Bypass,
}

pub struct Cache {
    dir: Option<PathBuf>,
    version: String,
    warned: AtomicBool,
    locks: Mutex<HashMap<String, Arc<Mutex<()>>>>,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache::with_version(Some(dir.into()), ENGINE_VERSION)
    }

    /// A cache that never persists.
    pub fn disabled() -> Self {
        Cache::with_version(None, ENGINE_VERSION)
    }

    pub fn with_version(dir: Option<PathBuf>, version: &str) -> Self {
        Cache { dir, version: version.to_string(), warned: AtomicBool::new(false), locks: Mutex::new(HashMap::new()) }
    }

    /// `explicit`, else `$KY_CACHE_DIR`, else `.ky-cache`.
    pub fn from_env(explicit: Option<PathBuf>) -> Self {
        let dir = explicit
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Cache::new(dir)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// File holding `key`.  Keys are canonical label strings; anything
    /// outside `[A-Za-z0-9_.-]` is replaced.
    pub fn path_for(&self, key: &str) -> Option<PathBuf> {
        let safe: String =
            key.chars().map(|c| if c.is_ascii_alphanumeric() || "_.-".contains(c) { c } else { '_' }).collect();
        self.dir.as_ref().map(|d| d.join(format!("{safe}.json")))
    }

    fn warn_once(&self, msg: &str) {
        if !self.warned.swap(true, Ordering::SeqCst) {
            eprintln!("warning: {msg}");
        }
    }

    fn key_lock(&self, key: &str) -> Arc<Mutex<()>> {
        self.locks.lock().unwrap().entry(key.to_string()).or_default().clone()
    }

    /// Read a record; `None` on absence, corruption or version mismatch.
    pub fn get(&self, key: &str) -> Option<Value> {
        let path = self.path_for(key)?;
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<CacheRecord>(&text) {
            Ok(r) if r.version == self.version && r.key == key => Some(r.payload),
            Ok(_) => None,
            Err(_) => {
                eprintln!("warning: corrupt cache record {}; rebuilding", path.display());
                None
            }
        }
    }

    /// Atomically store a record.
    pub fn put(&self, key: &str, payload: &Value) -> std::io::Result<()> {
        let Some(path) = self.path_for(key) else { return Ok(()) };
        let dir = path.parent().expect("record has a parent directory");
        fs::create_dir_all(dir)?;
        let rec = CacheRecord { key: key.to_string(), version: self.version.clone(), payload: payload.clone() };
        let tmp = dir.join(format!(
            ".{}.{}.{}.tmp",
            path.file_name().unwrap().to_string_lossy(),
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string_pretty(&rec)?.as_bytes())?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }

    /// Return the cached payload for `key`, or run `producer` and store its
    /// result.
    pub fn get_or_put<T, E>(&self, key: &str, producer: impl FnOnce() -> Result<T, E>) -> Result<(T, CacheStatus), E>
    where
        T: Serialize + DeserializeOwned,
    {
        if self.dir.is_none() {
            return producer().map(|v| (v, CacheStatus::Bypass));
        }
        let lock = self.key_lock(key);
        let _guard = lock.lock().unwrap();
        if let Some(v) = self.get(key) {
            if let Ok(t) = serde_json::from_value::<T>(v) {
                return Ok((t, CacheStatus::Hit));
            }
        }
        let value = producer()?;
        let json = serde_json::to_value(&value).expect("payload serialises");
        match self.put(key, &json) {
            Ok(()) => Ok((value, CacheStatus::Miss)),
            Err(e) => {
                self.warn_once(&format!("cache directory not writable ({e}); results are not persisted"));
                Ok((value, CacheStatus::Bypass))
            }
        }
    }
}
