//! On-disk result cache for computed graphs. Entries are JSON files named by
//! the SHA-256 of their key; writes go through a temp file and a rename so
//! concurrent processes never observe a partial entry.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io;
use std::path::{Path, PathBuf};

/// Bumped whenever the serialized graph format changes, so stale entries
/// miss instead of deserializing wrongly.
pub const ARTIFACT_VERSION: &str = "1";

pub const CACHE_ENV_VAR: &str = "RINGGRAPH_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".ringgraph-cache";

/// A cached computation result: the rendered output plus the one-line
/// summary printed alongside it.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CacheEntry {
    pub key: String,
    pub summary: String,
    pub output: String,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

/// Cache key for one compute invocation, canonical descriptor included.
pub fn cache_key(descriptor: &str, kind: &str, format: &str) -> String {
    format!("v{ARTIFACT_VERSION}:{descriptor}:{kind}:{format}")
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// Directory from `RINGGRAPH_CACHE`, falling back to `.ringgraph-cache`.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV_VAR) {
            Some(dir) if !dir.is_empty() => Cache::new(PathBuf::from(dir)),
            _ => Cache::new(DEFAULT_CACHE_DIR),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let mut name = String::with_capacity(69);
        for byte in digest {
            name.push_str(&format!("{byte:02x}"));
        }
        name.push_str(".json");
        self.dir.join(name)
    }

    /// Look up an entry. Unreadable or mismatched files count as misses.
    pub fn get(&self, key: &str) -> Option<CacheEntry> {
        let bytes = std::fs::read(self.path_for(key)).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
        if entry.key == key {
            Some(entry)
        } else {
            None
        }
    }

    pub fn put(&self, entry: &CacheEntry) -> io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let target = self.path_for(&entry.key);
        let tmp = self.dir.join(format!(
            ".tmp-{}-{:x}",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_nanos())
                .unwrap_or(0)
        ));
        let bytes = serde_json::to_vec(entry).expect("entry serializes");
        std::fs::write(&tmp, &bytes)?;
        std::fs::rename(&tmp, &target)
    }
}
