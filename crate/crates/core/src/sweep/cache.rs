use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use serde::{Deserialize, Serialize};

use super::SweepError;
use crate::digraph::MonomialParams;
use crate::invariants::InvariantProfile;

/// One line of the cache file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub q: u32,
    pub m: u32,
    pub n: u32,
    pub profile: InvariantProfile,
    /// Ascending colour-class sizes of the stable colouring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinement_signature: Option<Vec<usize>>,
}

impl CacheEntry {
    pub fn key(&self) -> MonomialParams {
        MonomialParams {
            q: self.q,
            m: self.m,
            n: self.n,
        }
    }
}

/// Profile cache keyed by `(q, m, n)`, optionally backed by an append-only
/// JSON-lines file. Writes go through a single locked writer.
#[derive(Debug, Default)]
pub struct ProfileCache {
    entries: RwLock<HashMap<MonomialParams, CacheEntry>>,
    writer: Option<Mutex<BufWriter<File>>>,
    path: Option<PathBuf>,
}

impl ProfileCache {
    pub fn in_memory() -> Self {
        ProfileCache::default()
    }

    /// Opens (or creates) a cache file and loads every complete record.
    ///
    /// A corrupt final line is treated as an interrupted write: it is dropped
    /// with a warning and the file is truncated back to the last good record.
    /// Corruption anywhere else is an error.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, SweepError> {
        let path = path.as_ref();
        let io_err = |source| SweepError::Cache {
            path: path.to_path_buf(),
            source,
        };
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(path)
            .map_err(io_err)?;

        let mut entries = HashMap::new();
        let mut good_len = 0u64;
        let mut pending_error: Option<(usize, String)> = None;
        let mut reader = BufReader::new(&file);
        let mut line = String::new();
        let mut lineno = 0;
        loop {
            line.clear();
            let read = reader.read_line(&mut line).map_err(io_err)?;
            if read == 0 {
                break;
            }
            lineno += 1;
            if let Some((bad, msg)) = pending_error.take() {
                return Err(SweepError::CorruptCache {
                    path: path.to_path_buf(),
                    line: bad,
                    message: msg,
                });
            }
            let complete = line.ends_with('\n');
            match serde_json::from_str::<CacheEntry>(line.trim_end()) {
                Ok(entry) if complete => {
                    good_len += read as u64;
                    entries.insert(entry.key(), entry);
                }
                Ok(_) => pending_error = Some((lineno, "missing line terminator".into())),
                Err(e) => pending_error = Some((lineno, e.to_string())),
            }
        }
        drop(reader);
        if let Some((bad, msg)) = pending_error {
            log::warn!(
                "cache {}: dropping incomplete record on line {bad} ({msg})",
                path.display()
            );
            file.set_len(good_len).map_err(io_err)?;
            file.seek(SeekFrom::End(0)).map_err(io_err)?;
        }

        Ok(ProfileCache {
            entries: RwLock::new(entries),
            writer: Some(Mutex::new(BufWriter::new(file))),
            path: Some(path.to_path_buf()),
        })
    }

    pub fn get(&self, key: MonomialParams) -> Option<CacheEntry> {
        self.entries
            .read()
            .expect("cache lock poisoned")
            .get(&key)
            .cloned()
    }

    /// Records an entry; existing keys are left untouched.
    pub fn put(&self, entry: CacheEntry) -> Result<(), SweepError> {
        let key = entry.key();
        {
            let mut map = self.entries.write().expect("cache lock poisoned");
            if map.contains_key(&key) {
                return Ok(());
            }
            map.insert(key, entry.clone());
        }
        if let Some(writer) = &self.writer {
            let mut w = writer.lock().expect("cache writer poisoned");
            let io_err = |source| SweepError::Cache {
                path: self.path.clone().unwrap_or_default(),
                source,
            };
            serde_json::to_writer(&mut *w, &entry).map_err(|e| io_err(e.into()))?;
            w.write_all(b"\n").map_err(io_err)?;
            w.flush().map_err(io_err)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
