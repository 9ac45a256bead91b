//! Versioned on-disk cache of computed tables.
//!
//! A cache file is one header line followed by the body:
//!
//! ```text
//! SPST <schema> <kind> <cap> <sha256 of header fields and body>\n
//! <canonical JSON body>
//! ```
//!
//! Files are named `<kind>-<cap>-v<schema>.json.spst` and replaced by
//! writing a temporary file in the same directory and renaming it.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

/// Current layout version of every table kind.
pub const SCHEMA_VERSION: u32 = 1;

const MAGIC: &str = "SPST";

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },
    #[error("cache io failure on {path}: {source}")]
    IoFailure {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub kind: String,
    pub cap: usize,
    pub schema_version: u32,
}

impl CacheKey {
    pub fn new(kind: &str, cap: usize) -> Self {
        CacheKey { kind: kind.to_string(), cap, schema_version: SCHEMA_VERSION }
    }

    pub fn file_name(&self) -> String {
        format!("{}-{}-v{}.json.spst", self.kind, self.cap, self.schema_version)
    }

    fn header_fields(&self) -> String {
        format!("{} {} {} {}", MAGIC, self.schema_version, self.kind, self.cap)
    }
}

/// The default cache location: `$SPST_CACHE_DIR`, else the per-user cache
/// directory, else a directory under the system temp dir.
pub fn default_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("SPST_CACHE_DIR").filter(|d| !d.is_empty()) {
        return PathBuf::from(dir);
    }
    dirs::cache_dir().unwrap_or_else(std::env::temp_dir).join("spst")
}

#[derive(Debug, Clone)]
pub struct Store {
    dir: PathBuf,
}

fn checksum(header_fields: &str, body: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(header_fields.as_bytes());
    h.update(b"\n");
    h.update(body);
    hex::encode(h.finalize())
}

/// The full file contents for `body` stored under `key`.
pub fn encode(key: &CacheKey, body: &[u8]) -> Vec<u8> {
    let fields = key.header_fields();
    let mut out = format!("{} {}\n", fields, checksum(&fields, body)).into_bytes();
    out.extend_from_slice(body);
    out
}

/// Validates a file read for `key` and returns its body.
pub fn decode(key: &CacheKey, bytes: &[u8]) -> Result<Vec<u8>, String> {
    let newline = bytes.iter().position(|&b| b == b'\n').ok_or("missing header line")?;
    let header = std::str::from_utf8(&bytes[..newline]).map_err(|_| "header is not utf-8")?;
    let body = &bytes[newline + 1..];
    let (fields, sum) = header.rsplit_once(' ').ok_or("malformed header")?;
    if fields != key.header_fields() {
        return Err(format!("header {:?} does not match key", fields));
    }
    if sum != checksum(fields, body) {
        return Err(String::from("checksum mismatch"));
    }
    Ok(body.to_vec())
}

impl Store {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Store { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// The stored body for `key`, or `None` if there is no file for it.
    pub fn load(&self, key: &CacheKey) -> Result<Option<Vec<u8>>, StoreError> {
        let path = self.path(key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(StoreError::IoFailure { path, source }),
        };
        decode(key, &bytes).map(Some).map_err(|reason| StoreError::CorruptCache { path, reason })
    }

    /// Atomically replaces the file for `key`.
    pub fn save(&self, key: &CacheKey, body: &[u8]) -> Result<(), StoreError> {
        let path = self.path(key);
        let io_err = |source| StoreError::IoFailure { path: path.clone(), source };
        fs::create_dir_all(&self.dir).map_err(io_err)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io_err)?;
        tmp.write_all(&encode(key, body)).map_err(io_err)?;
        tmp.as_file().sync_all().map_err(io_err)?;
        tmp.persist(&path).map_err(|e| io_err(e.error))?;
        Ok(())
    }
}
