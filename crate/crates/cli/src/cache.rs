//! Write-once polynomial table on disk, one file per entry, named by the
//! SHA-256 of (family, regime, rank, partition).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

pub const ENV: &str = "MACBAX_CACHE_DIR";

pub fn dir_from_env() -> Option<PathBuf> {
    std::env::var_os(ENV).filter(|s| !s.is_empty()).map(PathBuf::from)
}

pub fn key(family: &str, regime: &str, rank: usize, partition: &[u32]) -> String {
    let parts: Vec<String> = partition.iter().map(|p| p.to_string()).collect();
    let text = format!("family={};regime={};rank={};partition={}", family, regime, rank, parts.join(","));
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.json", key))
}

pub fn load(dir: &Path, key: &str) -> Option<Value> {
    let text = fs::read_to_string(path(dir, key)).ok()?;
    serde_json::from_str(&text).ok()
}

/// Stores the entry unless one already exists. The file appears atomically.
pub fn store(dir: &Path, key: &str, v: &Value) -> std::io::Result<()> {
    let target = path(dir, key);
    if target.exists() {
        return Ok(());
    }
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{}.{}.tmp", key, std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(serde_json::to_string(v)?.as_bytes())?;
        f.sync_all()?;
    }
    if target.exists() {
        return fs::remove_file(&tmp);
    }
    fs::rename(&tmp, &target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_stable_and_distinct() {
        let a = key("macdonald", "symbolic", 2, &[2]);
        assert_eq!(a, key("macdonald", "symbolic", 2, &[2]));
        assert_eq!(a.len(), 64);
        assert_ne!(a, key("macdonald", "symbolic", 3, &[2]));
        assert_ne!(key("jack", "symbolic", 2, &[1, 1]), key("jack", "symbolic", 2, &[11]));
    }

    #[test]
    fn write_once() {
        let dir = std::env::temp_dir().join(format!("macbax-cache-test-{}", std::process::id()));
        let k = key("jack", "kappa=1", 1, &[1]);
        store(&dir, &k, &serde_json::json!([1])).unwrap();
        store(&dir, &k, &serde_json::json!([2])).unwrap();
        assert_eq!(load(&dir, &k), Some(serde_json::json!([1])));
        fs::remove_dir_all(&dir).unwrap();
    }
}
