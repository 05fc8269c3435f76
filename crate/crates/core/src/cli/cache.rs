//! Plain-text coefficient cache.
//!
//! ```text
//! TRIGPROD-COEFFS v1 P n=4 N=10
//! 1
//! -1
//! ...
//! ```

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::coeffs::{degree, CoefficientTable, Kind};
use crate::error::{Error, Result};

pub const CACHE_DIR_ENV: &str = "TRIGPROD_CACHE_DIR";
const MAGIC: &str = "TRIGPROD-COEFFS";
const VERSION: &str = "v1";

/// `--cache` wins over the environment variable.
pub fn resolve_cache_dir(flag: Option<PathBuf>, env: Option<OsString>) -> Option<PathBuf> {
    flag.or_else(|| env.filter(|v| !v.is_empty()).map(PathBuf::from))
}

pub fn cache_path(kind: Kind, n: u32, dir: &Path) -> PathBuf {
    dir.join(format!("{kind}{n}.coeffs"))
}

fn header(kind: Kind, n: u32) -> String {
    format!("{MAGIC} {VERSION} {kind} n={n} N={}", degree(n))
}

/// Writes the table atomically (temp file then rename) and returns its path.
pub fn cache_write(table: &CoefficientTable, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(table.kind(), table.n(), dir);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut w = BufWriter::new(tmp.as_file_mut());
        writeln!(w, "{}", header(table.kind(), table.n()))?;
        for c in table.coeffs() {
            writeln!(w, "{c}")?;
        }
        w.flush()?;
    }
    tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
    Ok(path)
}

pub fn cache_read(kind: Kind, n: u32, dir: &Path) -> Result<CoefficientTable> {
    let path = cache_path(kind, n, dir);
    let integrity = |invariant: String| Error::Integrity { path: path.clone(), invariant };

    let mut lines = BufReader::new(fs::File::open(&path)?).lines();
    let first = lines.next().transpose()?.unwrap_or_default();
    if first.trim_end() != header(kind, n) {
        return Err(integrity(format!("header: expected `{}`, found `{first}`", header(kind, n))));
    }

    let expected = degree(n) + 1;
    let mut coeffs = Vec::with_capacity(expected);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let c: BigInt = line
            .parse()
            .map_err(|_| integrity(format!("line {}: not an integer", i + 2)))?;
        coeffs.push(c);
    }
    if coeffs.len() != expected {
        return Err(integrity(format!("count: expected {expected} coefficients, found {}", coeffs.len())));
    }
    let table = CoefficientTable::from_parts(kind, n, coeffs)?;
    table.check_cheap_invariants().map_err(|inv| integrity(inv.to_string()))?;
    Ok(table)
}

/// Reads the cached table if it is there and valid, otherwise computes and
/// stores it. A corrupt cache file is an error, not a silent recompute.
pub fn load_or_compute(kind: Kind, n: u32, dir: &Path) -> Result<CoefficientTable> {
    if cache_path(kind, n, dir).exists() {
        return cache_read(kind, n, dir);
    }
    let table = crate::coeffs::coefficients(kind, n, Default::default())?;
    cache_write(&table, dir)?;
    Ok(table)
}
