//! Optional on-disk persistence of the character and plethysm memos.
//!
//! When `STABLE_TWIST_CACHE_DIR` is set, memo contents are stored there as
//! plain text: a version header line followed by `key<TAB>value` lines. Files
//! with a different header are ignored, so bumping [`FORMAT_VERSION`]
//! invalidates old caches. Malformed lines in a file with the right header are
//! an error rather than being skipped.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::BigRational;

use crate::characters::{memo_entries, memo_insert, MAX_CLASS_FUNCTION_DEGREE};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{memoize_plethysm, memoized_plethysms};

pub const CACHE_DIR_VAR: &str = "STABLE_TWIST_CACHE_DIR";
pub const FORMAT_VERSION: u32 = 1;

const CHARACTERS_FILE: &str = "characters.tsv";
const PLETHYSMS_FILE: &str = "plethysms.tsv";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub characters: usize,
    pub plethysms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

fn header(kind: &str) -> String {
    format!("# stabletwist {kind} v{FORMAT_VERSION}")
}

fn cache_err(path: &Path, line: usize, what: impl std::fmt::Display) -> Error {
    Error::Cache(format!("{}:{line}: {what}", path.display()))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The cache named by `STABLE_TWIST_CACHE_DIR`, if set and nonempty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_DIR_VAR)
            .filter(|v| !v.is_empty())
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Seeds the in-memory memos from disk. Missing files are fine.
    pub fn load(&self) -> Result<CacheStats> {
        let mut stats = CacheStats::default();
        if let Some(lines) = self.read_lines(CHARACTERS_FILE, "characters")? {
            let path = self.dir.join(CHARACTERS_FILE);
            for (n, key, value) in lines {
                let (lambda, mu) = key
                    .split_once(';')
                    .ok_or_else(|| cache_err(&path, n, "expected λ;μ key"))?;
                let lambda: Partition = lambda.parse().map_err(|e| cache_err(&path, n, e))?;
                let mu: Partition = mu.parse().map_err(|e| cache_err(&path, n, e))?;
                if lambda.weight() != mu.weight() {
                    return Err(cache_err(&path, n, "weights differ"));
                }
                let value: i128 = value.parse().map_err(|e| cache_err(&path, n, e))?;
                memo_insert(&lambda, &mu, value);
                stats.characters += 1;
            }
        }
        if let Some(lines) = self.read_lines(PLETHYSMS_FILE, "plethysms")? {
            let path = self.dir.join(PLETHYSMS_FILE);
            let mut grouped: BTreeMap<(usize, usize), BTreeMap<Partition, BigRational>> = BTreeMap::new();
            for (n, key, value) in lines {
                let (kl, lambda) = key
                    .split_once(';')
                    .ok_or_else(|| cache_err(&path, n, "expected k,l;λ key"))?;
                let (k, l) = kl
                    .split_once(',')
                    .ok_or_else(|| cache_err(&path, n, "expected k,l"))?;
                let k: usize = k.parse().map_err(|e| cache_err(&path, n, e))?;
                let l: usize = l.parse().map_err(|e| cache_err(&path, n, e))?;
                let lambda: Partition = lambda.parse().map_err(|e| cache_err(&path, n, e))?;
                let value: BigRational = value.parse().map_err(|e| cache_err(&path, n, e))?;
                grouped.entry((k, l)).or_default().insert(lambda, value);
            }
            for ((k, l), coefficients) in grouped {
                memoize_plethysm(k, l, coefficients)
                    .map_err(|e| Error::Cache(format!("{}: h_{k}[h_{l}]: {e}", path.display())))?;
                stats.plethysms += 1;
            }
        }
        Ok(stats)
    }

    /// Writes the current memo contents, replacing earlier files.
    pub fn store(&self) -> Result<CacheStats> {
        fs::create_dir_all(&self.dir).map_err(|e| Error::Cache(format!("{}: {e}", self.dir.display())))?;

        let characters = memo_entries(MAX_CLASS_FUNCTION_DEGREE);
        let mut body = header("characters") + "\n";
        for (lambda, mu, v) in &characters {
            body.push_str(&format!("{lambda};{mu}\t{v}\n"));
        }
        self.write_atomic(CHARACTERS_FILE, &body)?;

        let plethysms = memoized_plethysms();
        let mut body = header("plethysms") + "\n";
        for ((k, l), expansion) in &plethysms {
            for (lambda, c) in expansion.coefficients() {
                body.push_str(&format!("{k},{l};{lambda}\t{c}\n"));
            }
        }
        self.write_atomic(PLETHYSMS_FILE, &body)?;

        Ok(CacheStats {
            characters: characters.len(),
            plethysms: plethysms.len(),
        })
    }

    /// Data lines of a cache file as (line number, key, value), or `None` if
    /// the file is absent or from another format version.
    fn read_lines(&self, name: &str, kind: &str) -> Result<Option<Vec<(usize, String, String)>>> {
        let path = self.dir.join(name);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, first)) if first == header(kind) => {}
            _ => return Ok(None),
        }
        let mut out = Vec::new();
        for (i, line) in lines {
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('\t')
                .ok_or_else(|| cache_err(&path, i + 1, "missing tab"))?;
            out.push((i + 1, key.to_string(), value.to_string()));
        }
        Ok(Some(out))
    }

    fn write_atomic(&self, name: &str, body: &str) -> Result<()> {
        let path = self.dir.join(name);
        let tmp = self.dir.join(format!("{name}.tmp{}", std::process::id()));
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(body.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)
    }
}
