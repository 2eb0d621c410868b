use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::key::{spectrum_key, SpectrumKey};
use super::DsError;
use crate::graph::{canonical_form, Graph};
use crate::poly::MatrixKind;

type Slot = (Vec<u8>, MatrixKind);

/// Spectrum keys indexed by canonical form, optionally backed by an
/// append-only text file with one `graph6<TAB>kind<TAB>coefficients` record
/// per line.
pub struct SpectrumCache {
    map: Mutex<HashMap<Slot, SpectrumKey>>,
    file: Option<Mutex<File>>,
    path: Option<PathBuf>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl SpectrumCache {
    pub fn in_memory() -> SpectrumCache {
        SpectrumCache {
            map: Mutex::new(HashMap::new()),
            file: None,
            path: None,
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    /// Loads `path` (creating it if needed) and appends new records to it.
    /// An unterminated last line is a torn write and is cut off.
    pub fn open(path: &Path) -> Result<SpectrumCache, DsError> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let mut file = OpenOptions::new()
            .read(true)
            .write(true)
            .create(true)
            .truncate(false)
            .open(path)?;
        let mut text = String::new();
        file.read_to_string(&mut text)?;
        let complete = text.rfind('\n').map_or(0, |i| i + 1);
        if complete < text.len() {
            file.set_len(complete as u64)?;
        }
        file.seek(SeekFrom::End(0))?;
        let mut map = HashMap::new();
        for (i, line) in text[..complete].lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (slot, key) = parse_record(line)
                .map_err(|e| DsError::Cache(format!("{}:{}: {e}", path.display(), i + 1)))?;
            map.insert(slot, key);
        }
        Ok(SpectrumCache {
            map: Mutex::new(map),
            file: Some(Mutex::new(file)),
            path: Some(path.to_path_buf()),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(hits, misses)` since construction.
    pub fn stats(&self) -> (u64, u64) {
        (
            self.hits.load(Ordering::Relaxed),
            self.misses.load(Ordering::Relaxed),
        )
    }

    pub fn key(&self, g: &Graph, kind: MatrixKind) -> Result<SpectrumKey, DsError> {
        let cert = canonical_form(g).bytes;
        let slot = (cert, kind);
        if let Some(k) = self.map.lock().unwrap().get(&slot) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(k.clone());
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let key = spectrum_key(g, kind);
        let mut map = self.map.lock().unwrap();
        if map.contains_key(&slot) {
            return Ok(key);
        }
        if let Some(file) = &self.file {
            let line = format_record(&slot.0, &key);
            let mut f = file.lock().unwrap();
            f.write_all(line.as_bytes())?;
            f.flush()?;
        }
        map.insert(slot, key.clone());
        Ok(key)
    }

    /// Recomputes a random `rate` fraction (at least one entry when nonempty)
    /// of the cached keys and checks they match. Returns how many were checked.
    pub fn verify_sample(&self, rate: f64, seed: u64) -> Result<usize, DsError> {
        let entries: Vec<(Slot, SpectrumKey)> = {
            let map = self.map.lock().unwrap();
            let mut v: Vec<_> = map.iter().map(|(s, k)| (s.clone(), k.clone())).collect();
            v.sort_by(|a, b| a.0.cmp(&b.0));
            v
        };
        let mut rng = StdRng::seed_from_u64(seed);
        let mut checked = 0;
        for (i, ((cert, kind), key)) in entries.iter().enumerate() {
            let pick = rng.gen::<f64>() < rate || (checked == 0 && i + 1 == entries.len());
            if !pick {
                continue;
            }
            let g6 = std::str::from_utf8(cert).expect("ascii");
            let g = Graph::from_graph6(g6)?;
            if spectrum_key(&g, *kind) != *key {
                return Err(DsError::Cache(format!(
                    "stale {} key for {g6}",
                    kind.as_str()
                )));
            }
            checked += 1;
        }
        Ok(checked)
    }
}

fn format_record(cert: &[u8], key: &SpectrumKey) -> String {
    let coeffs: Vec<String> = key.coeffs.iter().map(|c| c.to_string()).collect();
    format!(
        "{}\t{}\t{}\n",
        std::str::from_utf8(cert).expect("ascii"),
        key.kind.as_str(),
        coeffs.join(" ")
    )
}

fn parse_record(line: &str) -> Result<(Slot, SpectrumKey), String> {
    let mut parts = line.split('\t');
    let (Some(g6), Some(kind), Some(coeffs), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err("expected three tab-separated fields".into());
    };
    let g = Graph::from_graph6(g6).map_err(|e| e.to_string())?;
    let kind: MatrixKind = kind.parse().map_err(|_| format!("bad kind {kind:?}"))?;
    let coeffs = coeffs
        .split_whitespace()
        .map(|c| c.parse::<BigInt>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != g.n() + 1 {
        return Err(format!(
            "{} coefficients for {} vertices",
            coeffs.len(),
            g.n()
        ));
    }
    Ok(((g6.as_bytes().to_vec(), kind), SpectrumKey { kind, coeffs }))
}
