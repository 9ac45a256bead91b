//! Cache-aware access to coefficient matrices and character tables.
//!
//! Tables are loaded from the store when present, otherwise computed and
//! saved. Either way they are published to the in-process memo of the core
//! crate, so later calls into the core reuse them.

use std::sync::Arc;

use rayon::prelude::*;
use spst_core::characters::{character_table, install_character_table, CharacterTable};
use spst_core::transitions::{install_matrix, line_indices, matrix, CoeffMatrix, LineBuilder, MatrixKind};

use crate::json;
use crate::store::{CacheKey, Store, StoreError};

pub struct Session {
    store: Option<Store>,
    warn: Box<dyn Fn(&str) + Send + Sync>,
}

impl Session {
    /// A session with no persistent cache.
    pub fn uncached() -> Self {
        Session { store: None, warn: Box::new(|_| {}) }
    }

    /// A session backed by `store`; cache problems are reported through
    /// `warn` and never fail a computation.
    pub fn cached(store: Store, warn: impl Fn(&str) + Send + Sync + 'static) -> Self {
        Session { store: Some(store), warn: Box::new(warn) }
    }

    fn load<T>(&self, key: &CacheKey, decode: impl Fn(&str) -> Result<T, json::FormatError>) -> Option<T> {
        let store = self.store.as_ref()?;
        let body = match store.load(key) {
            Ok(Some(body)) => body,
            Ok(None) => return None,
            Err(e) => {
                (self.warn)(&format!("{}; recomputing", e));
                return None;
            }
        };
        match std::str::from_utf8(&body).map_err(|e| e.to_string()).and_then(|s| decode(s).map_err(|e| e.to_string())) {
            Ok(v) => Some(v),
            Err(reason) => {
                let e = StoreError::CorruptCache { path: store.path(key), reason };
                (self.warn)(&format!("{}; recomputing", e));
                None
            }
        }
    }

    fn save(&self, key: &CacheKey, body: String) {
        if let Some(store) = &self.store {
            if let Err(e) = store.save(key, body.as_bytes()) {
                (self.warn)(&e.to_string());
            }
        }
    }

    /// The matrix of `kind` covering partitions of size at most `cap`.
    pub fn matrix(&self, kind: MatrixKind, cap: usize) -> spst_core::Result<Arc<CoeffMatrix>> {
        let key = CacheKey::new(kind.name(), cap);
        if let Some(m) = self.load(&key, json::matrix_from_json) {
            if m.kind() == kind && m.cap() == cap {
                install_matrix(m);
                return matrix(kind, cap);
            }
            (self.warn)(&format!("cache file {} holds a different table; recomputing", key.file_name()));
        }
        let m = build_parallel(kind, cap)?;
        self.save(&key, json::matrix_to_json(&m));
        install_matrix(m);
        matrix(kind, cap)
    }

    /// The character table of `S_t`.
    pub fn character_table(&self, t: usize) -> Arc<CharacterTable> {
        let key = CacheKey::new("chartable", t);
        if let Some(table) = self.load(&key, json::character_table_from_json) {
            if table.n() == t {
                install_character_table(table);
                return character_table(t);
            }
        }
        let table = character_table(t);
        self.save(&key, json::character_table_to_json(&table));
        table
    }

    /// Character tables of `S_0 .. S_t`.
    pub fn character_tables_up_to(&self, t: usize) {
        for n in 0..=t {
            self.character_table(n);
        }
    }
}

/// Builds a matrix with its lines computed in parallel.
pub fn build_parallel(kind: MatrixKind, cap: usize) -> spst_core::Result<CoeffMatrix> {
    let lines: Vec<_> = line_indices(cap)
        .par_iter()
        .map_init(|| LineBuilder::new(kind, cap), |builder, index| builder.line(index))
        .collect::<spst_core::Result<_>>()?;
    CoeffMatrix::from_entries(kind, cap, lines.into_iter().flatten())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;

    #[test]
    fn parallel_build_matches_sequential() {
        for kind in MatrixKind::ALL {
            assert_eq!(build_parallel(kind, 4).unwrap(), CoeffMatrix::build(kind, 4).unwrap());
        }
    }

    #[test]
    fn cold_and_warm_sessions_agree() {
        let dir = tempfile::tempdir().unwrap();
        let warnings = Arc::new(Mutex::new(Vec::new()));
        let w = warnings.clone();
        let session = Session::cached(Store::new(dir.path()), move |m| w.lock().unwrap().push(m.to_string()));
        let cold = session.matrix(MatrixKind::B, 3).unwrap();
        assert!(dir.path().join("b-3-v1.json.spst").exists());
        let warm = session.matrix(MatrixKind::B, 3).unwrap();
        assert_eq!(cold, warm);
        session.character_table(4);
        assert!(dir.path().join("chartable-4-v1.json.spst").exists());
        assert!(warnings.lock().unwrap().is_empty());
    }

    #[test]
    fn corrupt_cache_is_recomputed_and_overwritten() {
        let dir = tempfile::tempdir().unwrap();
        let warnings = Arc::new(Mutex::new(Vec::new()));
        let w = warnings.clone();
        let session = Session::cached(Store::new(dir.path()), move |m| w.lock().unwrap().push(m.to_string()));
        let path = dir.path().join("a-2-v1.json.spst");
        std::fs::write(&path, b"SPST garbage\n{}").unwrap();
        let m = session.matrix(MatrixKind::A, 2).unwrap();
        assert_eq!(*m, CoeffMatrix::build(MatrixKind::A, 2).unwrap());
        assert_eq!(warnings.lock().unwrap().len(), 1);
        let reread = Store::new(dir.path()).load(&CacheKey::new("a", 2)).unwrap().unwrap();
        assert_eq!(json::matrix_from_json(std::str::from_utf8(&reread).unwrap()).unwrap(), *m);
    }
}
