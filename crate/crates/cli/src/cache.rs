//! Advisory on-disk cache of computed resolutions, content-addressed on the
//! ring spec text, module spec, and field.
//!
//! File format (versioned, line-oriented text):
//!
//! ```text
//! cangrow-cache v1
//! field <name>
//! betti <b0> <b1> ...
//! complete <0|1>
//! d <step> rows <r> cols <c>
//! <row> <col> <i1>:<v1>,<i2>:<v2>,...
//! ...
//! end
//! ```
//!
//! Scalars use the field's text form (residues for F_p, `p/q` over Q).
//! Loaded prefixes are revalidated (d∘d = 0 and agreement with the minimal
//! presentation) before extension; any mismatch counts as corruption and
//! falls back to recomputation with a warning.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use cangrow_core::linalg::SparseVec;
use cangrow_core::module::{PresentedModule, RMatrix};
use cangrow_core::resolution::Resolution;
use cangrow_core::scalar::Field;

#[derive(Debug)]
pub struct CacheCorrupt(pub String);

impl fmt::Display for CacheCorrupt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cache corrupt: {}", self.0)
    }
}

pub fn cache_key(ring_text: &str, module_spec: &str, field: &str) -> String {
    let mut h = Sha256::new();
    h.update(ring_text.as_bytes());
    h.update([0u8]);
    h.update(module_spec.as_bytes());
    h.update([0u8]);
    h.update(field.as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.res"))
}

pub fn store_resolution<K: Field>(path: &Path, res: &Resolution<K>) -> std::io::Result<()> {
    let mut out = String::new();
    out.push_str("cangrow-cache v1\n");
    out.push_str(&format!("field {}\n", K::name()));
    out.push_str("betti");
    for b in &res.betti {
        out.push_str(&format!(" {b}"));
    }
    out.push('\n');
    out.push_str(&format!("complete {}\n", if res.complete { 1 } else { 0 }));
    for (i, d) in res.differentials.iter().enumerate() {
        out.push_str(&format!("d {} rows {} cols {}\n", i + 1, d.rows, d.cols));
        for c in 0..d.cols {
            for (r, e) in d.column(c) {
                let entry: Vec<String> =
                    e.iter().map(|(idx, v)| format!("{idx}:{v}")).collect();
                out.push_str(&format!("{r} {c} {}\n", entry.join(",")));
            }
        }
    }
    out.push_str("end\n");
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, out)?;
    std::fs::rename(tmp, path)
}

/// Load and revalidate a cached resolution for the given module. Errors are
/// corruption reports; the caller recomputes.
pub fn load_resolution<K: Field>(
    path: &Path,
    module: Arc<PresentedModule<K>>,
) -> Result<Resolution<K>, CacheCorrupt> {
    let text = std::fs::read_to_string(path).map_err(|e| CacheCorrupt(e.to_string()))?;
    let mut lines = text.lines();
    let bad = |m: &str| CacheCorrupt(m.to_string());
    if lines.next() != Some("cangrow-cache v1") {
        return Err(bad("bad header"));
    }
    let field_line = lines.next().ok_or_else(|| bad("missing field"))?;
    if field_line != format!("field {}", K::name()) {
        return Err(bad("field mismatch"));
    }
    let betti_line = lines.next().ok_or_else(|| bad("missing betti"))?;
    let betti: Vec<usize> = betti_line
        .strip_prefix("betti")
        .ok_or_else(|| bad("missing betti"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("bad betti entry")))
        .collect::<Result<_, _>>()?;
    let complete_line = lines.next().ok_or_else(|| bad("missing complete flag"))?;
    let complete = match complete_line {
        "complete 0" => false,
        "complete 1" => true,
        _ => return Err(bad("bad complete flag")),
    };
    let mut differentials: Vec<RMatrix<K>> = Vec::new();
    let mut current: Option<(usize, usize, Vec<Vec<(u32, SparseVec<K>)>>)> = None;
    let finish =
        |cur: &mut Option<(usize, usize, Vec<Vec<(u32, SparseVec<K>)>>)>,
         diffs: &mut Vec<RMatrix<K>>| {
            if let Some((rows, _cols, data)) = cur.take() {
                diffs.push(RMatrix::from_columns(rows, data));
            }
        };
    for line in lines {
        if line == "end" {
            finish(&mut current, &mut differentials);
            let res = Resolution {
                module: module.clone(),
                differentials,
                betti: betti.clone(),
                complete,
            };
            validate(&res)?;
            return Ok(res);
        }
        if let Some(rest) = line.strip_prefix("d ") {
            finish(&mut current, &mut differentials);
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 5 || parts[1] != "rows" || parts[3] != "cols" {
                return Err(bad("bad differential header"));
            }
            let rows: usize = parts[2].parse().map_err(|_| bad("bad rows"))?;
            let cols: usize = parts[4].parse().map_err(|_| bad("bad cols"))?;
            current = Some((rows, cols, vec![Vec::new(); cols]));
            continue;
        }
        let Some((rows, cols, data)) = current.as_mut() else {
            return Err(bad("entry outside differential"));
        };
        let mut it = line.splitn(3, ' ');
        let r: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("bad entry row"))?;
        let c: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("bad entry col"))?;
        let payload = it.next().ok_or_else(|| bad("missing entry payload"))?;
        if r >= *rows || c >= *cols {
            return Err(bad("entry out of bounds"));
        }
        let mut elem: SparseVec<K> = Vec::new();
        for pair in payload.split(',') {
            let (idx, val) = pair.split_once(':').ok_or_else(|| bad("bad pair"))?;
            let idx: u32 = idx.parse().map_err(|_| bad("bad coordinate"))?;
            let val = K::parse(val).ok_or_else(|| bad("bad scalar"))?;
            elem.push((idx, val));
        }
        if elem.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(bad("unsorted entry"));
        }
        let col = &mut data[c];
        match col.last() {
            Some((last, _)) if *last >= r as u32 => return Err(bad("unsorted column")),
            _ => col.push((r as u32, elem)),
        }
    }
    Err(bad("missing end marker"))
}

fn validate<K: Field>(res: &Resolution<K>) -> Result<(), CacheCorrupt> {
    let bad = |m: &str| CacheCorrupt(m.to_string());
    if res.betti.first() != Some(&res.module.b0()) {
        return Err(bad("b0 mismatch"));
    }
    if res.betti.len() != res.differentials.len() + 1 {
        return Err(bad("betti/differential length mismatch"));
    }
    match res.differentials.first() {
        Some(d1) => {
            if *d1 != res.module.presentation {
                return Err(bad("d1 differs from the minimal presentation"));
            }
        }
        None => {
            if !res.module.is_free() {
                return Err(bad("missing d1 for a non-free module"));
            }
        }
    }
    for (i, d) in res.differentials.iter().enumerate() {
        if res.betti.get(i) != Some(&d.rows) || res.betti.get(i + 1) != Some(&d.cols) {
            return Err(bad("differential shape mismatch"));
        }
        if !d.entries_in_m() {
            return Err(bad("entry outside the maximal ideal"));
        }
    }
    let ring = res.module.ring();
    for w in res.differentials.windows(2) {
        if !w[0].compose(&w[1], ring).is_zero() {
            return Err(bad("d∘d != 0"));
        }
    }
    Ok(())
}
