//! Engine output cached on disk, one JSON file per `(ring, n, k, order)`.
//!
//! The engine version is part of the key, so a version bump leaves stale
//! entries unread. Writes go to a temporary file that is then renamed.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use trace_poincare_core::molien::ENGINE_VERSION;
use trace_poincare_core::{ProblemSpec, TruncatedSeries};

use crate::format::{series_from_json, series_to_json};

pub const CACHE_ENV: &str = "TRACE_POINCARE_CACHE";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    ring: String,
    n: usize,
    k: usize,
    order: usize,
    engine_version: u32,
    coefficients: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SeriesCache {
    dir: PathBuf,
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The environment variable wins over the flag.
    pub fn resolve(flag: Option<&Path>) -> Option<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(v) if !v.is_empty() => Some(Self::new(v)),
            _ => flag.map(Self::new),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, spec: &ProblemSpec, order: usize) -> PathBuf {
        self.dir.join(format!(
            "{}-n{}-k{}-D{}-v{}.json",
            spec.ring(),
            spec.n(),
            spec.k(),
            order,
            ENGINE_VERSION
        ))
    }

    /// A missing or unreadable entry is a miss.
    pub fn load(&self, spec: &ProblemSpec, order: usize) -> Option<TruncatedSeries> {
        let text = fs::read_to_string(self.path(spec, order)).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        let matches = e.ring == spec.ring().as_str()
            && e.n == spec.n()
            && e.k == spec.k()
            && e.order == order
            && e.engine_version == ENGINE_VERSION
            && e.coefficients.len() == order + 1;
        if !matches {
            return None;
        }
        series_from_json(&e.coefficients).ok()
    }

    pub fn store(&self, spec: &ProblemSpec, s: &TruncatedSeries) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let entry = Entry {
            ring: spec.ring().as_str().to_string(),
            n: spec.n(),
            k: spec.k(),
            order: s.order(),
            engine_version: ENGINE_VERSION,
            coefficients: series_to_json(s),
        };
        let target = self.path(spec, s.order());
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.subsec_nanos())
            .unwrap_or(0);
        let tmp = self
            .dir
            .join(format!(".tmp-{}-{nanos}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&entry)?)
            .with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &target).with_context(|| format!("moving cache entry to {}", target.display()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let spec = ProblemSpec::pure(2, 3);
        let s = TruncatedSeries::from_ints(&[1, 3, 12, 28]);
        assert!(cache.load(&spec, 3).is_none());
        cache.store(&spec, &s).unwrap();
        assert_eq!(cache.load(&spec, 3), Some(s));
        assert!(cache.load(&spec, 4).is_none());
        assert!(cache.path(&spec, 3).ends_with(format!("pure-n2-k3-D3-v{ENGINE_VERSION}.json")));
    }

    #[test]
    fn corrupt_entry_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::new(dir.path());
        let spec = ProblemSpec::mixed(2, 3);
        fs::write(cache.path(&spec, 2), "{").unwrap();
        assert!(cache.load(&spec, 2).is_none());
    }
}
