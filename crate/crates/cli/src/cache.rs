//! Append-only cache of avoider counts.
//!
//! One JSON record per line in `counts.ndjson` under the cache directory.
//! Appends take an exclusive lock on the file; later records win on load.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use altperm::{PermClass, Permutation};
use serde::{Deserialize, Serialize};

pub const ENV_VAR: &str = "ALTPERM_CACHE";
pub const DEFAULT_DIR: &str = ".altperm-cache";
const FILE_NAME: &str = "counts.ndjson";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub pattern: String,
    pub class: String,
    pub n: usize,
    pub count: u64,
    pub version: String,
    pub timestamp: u64,
}

/// Canonical text form of a count query.
pub fn query_key(pattern: &Permutation, class: &PermClass, n: usize) -> String {
    format!("pattern={pattern};class={class};n={n}")
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, CacheEntry>,
}

impl Cache {
    /// Directory from `ALTPERM_CACHE`, else `./.altperm-cache`.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(ENV_VAR)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR))
    }

    /// Loads the cache in `dir`, creating nothing until the first write.
    /// Unparseable lines (e.g. a torn final write) are skipped.
    pub fn open(dir: &Path) -> io::Result<Self> {
        let path = dir.join(FILE_NAME);
        let mut entries = HashMap::new();
        match File::open(&path) {
            Ok(f) => {
                for line in BufReader::new(f).lines() {
                    if let Ok(e) = serde_json::from_str::<CacheEntry>(&line?) {
                        entries.insert(e.key.clone(), e);
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(Cache { path, entries })
    }

    pub fn get(&self, key: &str) -> Option<&CacheEntry> {
        self.entries.get(key)
    }

    pub fn entries(&self) -> impl Iterator<Item = &CacheEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn insert(
        &mut self,
        pattern: &Permutation,
        class: &PermClass,
        n: usize,
        count: u64,
    ) -> io::Result<()> {
        let key = query_key(pattern, class, n);
        let entry = CacheEntry {
            key: key.clone(),
            pattern: pattern.to_string(),
            class: class.to_string(),
            n,
            count,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let mut line = serde_json::to_string(&entry).map_err(io::Error::other)?;
        line.push('\n');
        if let Some(parent) = self.path.parent() {
            fs::create_dir_all(parent)?;
        }
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        f.lock()?;
        let written = f.write_all(line.as_bytes()).and_then(|_| f.flush());
        f.unlock()?;
        written?;
        self.entries.insert(key, entry);
        Ok(())
    }
}
