//! On-disk cache of rendered invariant reports, one file per key.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "CURVECOUNT_CACHE";

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `$CURVECOUNT_CACHE`, else `$XDG_CACHE_HOME/curvecount`, else
    /// `$HOME/.cache/curvecount`.
    pub fn from_env() -> Option<Self> {
        let dir = match std::env::var_os(ENV_VAR) {
            Some(dir) if !dir.is_empty() => PathBuf::from(dir),
            _ => match std::env::var_os("XDG_CACHE_HOME") {
                Some(dir) if !dir.is_empty() => PathBuf::from(dir).join("curvecount"),
                _ => PathBuf::from(std::env::var_os("HOME")?).join(".cache").join("curvecount"),
            },
        };
        Some(Self { dir })
    }

    #[cfg(test)]
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// Content hash of the canonical graph JSON plus the report kind.
    pub fn key(graph_json: &str, kind: &str) -> String {
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        h.update([0]);
        h.update(kind.as_bytes());
        h.update([0]);
        h.update(graph_json.as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        fs::read_to_string(self.path(key)).ok()
    }

    /// Write to a temporary file in the cache directory, then rename.
    pub fn put(&self, key: &str, value: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(value.as_bytes())?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }

    #[cfg(test)]
    pub fn dir(&self) -> &std::path::Path {
        &self.dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_keying() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path().join("nested"));
        let key = Cache::key("{}", "text");
        assert_ne!(key, Cache::key("{}", "json"));
        assert_eq!(cache.get(&key), None);
        cache.put(&key, "hello\n").unwrap();
        assert_eq!(cache.get(&key).as_deref(), Some("hello\n"));
        cache.put(&key, "again\n").unwrap();
        assert_eq!(cache.get(&key).as_deref(), Some("again\n"));
        assert_eq!(fs::read_dir(cache.dir()).unwrap().count(), 1);
    }
}
