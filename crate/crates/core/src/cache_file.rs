//! Text persistence for [`CharacterCache`].
//!
//! Line 1 is `KRONCACHE v1`; every further line is
//! `n<TAB>[λ]<TAB>[ρ]<TAB>value`. Records are written sorted by `(n, λ, ρ)`
//! so that save, load, save reproduces the same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{KronError, Result};
use crate::partition::{classify_shape, Partition, ShapeClass};
use crate::symmetric::{syt_count, CharacterCache};

pub const HEADER: &str = "KRONCACHE v1";

/// Every `SPOT_CHECK_STRIDE`-th record is recomputed from scratch on load.
pub const SPOT_CHECK_STRIDE: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadStatus {
    /// The file did not exist; nothing was loaded.
    Missing,
    Loaded {
        records: usize,
        checked: usize,
    },
}

type Record = (Partition, Partition, BigInt);

/// Parses cache text. Checks syntax and degrees only.
pub fn parse(text: &str) -> Result<Vec<Record>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == HEADER => {}
        Some((_, h)) => {
            return Err(KronError::Format {
                line: 1,
                reason: format!("expected header {HEADER:?}, found {h:?}"),
            })
        }
        None => {
            return Err(KronError::Format {
                line: 1,
                reason: "empty file".into(),
            })
        }
    }
    let mut seen: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let bad = |reason: String| KronError::Format {
            line: line_no,
            reason,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(bad(format!(
                "expected 4 tab-separated fields, found {}",
                fields.len()
            )));
        }
        let n: usize = fields[0]
            .parse()
            .map_err(|_| bad(format!("bad degree {:?}", fields[0])))?;
        let lambda: Partition = fields[1]
            .parse()
            .map_err(|e: KronError| bad(e.to_string()))?;
        let rho: Partition = fields[2]
            .parse()
            .map_err(|e: KronError| bad(e.to_string()))?;
        let value: BigInt = fields[3]
            .parse()
            .map_err(|_| bad(format!("bad value {:?}", fields[3])))?;
        if lambda.degree() != n || rho.degree() != n {
            return Err(bad(format!(
                "degree {n} disagrees with {lambda} (size {}) or {rho} (size {})",
                lambda.degree(),
                rho.degree()
            )));
        }
        let key = (lambda.clone(), rho.clone());
        if let Some(prev) = seen.get(&key) {
            if *prev != value {
                return Err(bad(format!(
                    "conflicting duplicate record for {lambda}, {rho}"
                )));
            }
            continue;
        }
        seen.insert(key, value.clone());
        out.push((lambda, rho, value));
    }
    Ok(out)
}

/// `χ^λ_(n)`: `(-1)^leg` for hooks and zero otherwise.
fn full_cycle_character(lambda: &Partition) -> BigInt {
    let leg = match classify_shape(lambda) {
        ShapeClass::OneRow { .. } => Some(0),
        ShapeClass::OneColumn { n } => Some(n - 1),
        ShapeClass::Hook { m, .. } => Some(m),
        _ if lambda.is_empty() => Some(0),
        _ => None,
    };
    match leg {
        Some(l) if l % 2 == 0 => BigInt::one(),
        Some(_) => -BigInt::one(),
        None => BigInt::zero(),
    }
}

/// Checks a deterministic sample of records against fresh computation:
/// all `ρ = (1^n)` and `ρ = (n)` records, plus every
/// [`SPOT_CHECK_STRIDE`]-th record in file order.
pub fn check_integrity(records: &[Record]) -> Result<usize> {
    let fresh = CharacterCache::new();
    let mut checked = 0;
    for (i, (lambda, rho, stored)) in records.iter().enumerate() {
        let n = lambda.degree();
        let computed = if n > 0 && *rho == Partition::one_column(n) {
            syt_count(lambda)
        } else if n > 0 && *rho == Partition::one_row(n) {
            full_cycle_character(lambda)
        } else if i % SPOT_CHECK_STRIDE == 0 {
            fresh.character(lambda, rho)?
        } else {
            continue;
        };
        checked += 1;
        if computed != *stored {
            return Err(KronError::Integrity {
                lambda: lambda.clone(),
                rho: rho.clone(),
                stored: stored.to_string(),
                computed: computed.to_string(),
            });
        }
    }
    Ok(checked)
}

/// Loads `path` into `cache` after parsing and integrity checks. Nothing is
/// inserted if any check fails.
pub fn load_into(path: &Path, cache: &CharacterCache) -> Result<LoadStatus> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(LoadStatus::Missing),
        Err(e) => return Err(e.into()),
    };
    let records = parse(&text)?;
    let checked = check_integrity(&records)?;
    let count = records.len();
    for (lambda, rho, value) in records {
        cache.insert(lambda, rho, value);
    }
    Ok(LoadStatus::Loaded {
        records: count,
        checked,
    })
}

pub fn render(cache: &CharacterCache) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for (lambda, rho, value) in cache.entries() {
        out.push_str(&format!("{}\t{lambda}\t{rho}\t{value}\n", lambda.degree()));
    }
    out
}

/// Writes the cache next to `path` and renames it into place.
pub fn save(path: &Path, cache: &CharacterCache) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(render(cache).as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .map_err(|e| KronError::Io(e.error.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn warm_cache() -> CharacterCache {
        let cache = CharacterCache::new();
        cache
            .kron(&Partition::two_row(3, 2), &Partition::two_row(3, 2))
            .unwrap();
        cache
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let cache = warm_cache();
        save(&path, &cache).unwrap();
        let first = fs::read(&path).unwrap();
        let reloaded = CharacterCache::new();
        let status = load_into(&path, &reloaded).unwrap();
        assert!(matches!(status, LoadStatus::Loaded { records, .. } if records == cache.len()));
        save(&path, &reloaded).unwrap();
        assert_eq!(first, fs::read(&path).unwrap());
    }

    #[test]
    fn missing_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CharacterCache::new();
        assert_eq!(
            load_into(&dir.path().join("none"), &cache).unwrap(),
            LoadStatus::Missing
        );
        assert!(cache.is_empty());
    }

    #[test]
    fn version_gate() {
        let err = parse("KRONCACHE v2\n").unwrap_err();
        assert!(matches!(err, KronError::Format { line: 1, .. }));
    }

    #[test]
    fn degree_check() {
        let err = parse("KRONCACHE v1\n5\t[3,2]\t[3,2,1]\t0\n").unwrap_err();
        assert!(matches!(err, KronError::Format { line: 2, .. }));
        assert!(parse("KRONCACHE v1\n5\t[3,2]\t[4,1]\n").is_err());
        assert!(parse("KRONCACHE v1\n5\t[3,2]\t[4,1]\tx\n").is_err());
        assert!(parse("KRONCACHE v1\n3\t[2,1]\t[2,1]\t0\n3\t[2,1]\t[2,1]\t1\n").is_err());
    }

    #[test]
    fn integrity_rejects_wrong_values() {
        let err = parse("KRONCACHE v1\n3\t[2,1]\t[1^3]\t3\n")
            .and_then(|r| check_integrity(&r))
            .unwrap_err();
        assert!(matches!(err, KronError::Integrity { .. }));
        let err = parse("KRONCACHE v1\n3\t[2,1]\t[3]\t1\n")
            .and_then(|r| check_integrity(&r))
            .unwrap_err();
        assert!(matches!(err, KronError::Integrity { .. }));
        let ok = parse("KRONCACHE v1\n3\t[2,1]\t[3]\t-1\n3\t[2,1]\t[1,1,1]\t2\n").unwrap();
        assert_eq!(check_integrity(&ok).unwrap(), 2);
    }

    #[test]
    fn failed_integrity_inserts_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.txt");
        fs::write(&path, "KRONCACHE v1\n2\t[2]\t[2]\t1\n2\t[1,1]\t[1,1]\t7\n").unwrap();
        let cache = CharacterCache::new();
        assert!(load_into(&path, &cache).is_err());
        assert!(cache.is_empty());
    }
}
