//! On-disk rank-table cache.
//!
//! Layout: magic `FTBL`, one version byte (currently 1), order and
//! f_max as u64 little-endian, then the grid cells as u32
//! little-endian in row-major order. Any inconsistency rejects the
//! file and falls back to a rebuild; a cache can slow us down but
//! never crash us.

use std::env;
use std::fs;
use std::io;
use std::path::PathBuf;

use farey::{FareySequence, FareyTable};

const MAGIC: &[u8; 4] = b"FTBL";
const VERSION: u8 = 1;
const HEADER_LEN: usize = 4 + 1 + 8 + 8;

pub fn cache_dir() -> PathBuf {
    env::var_os("FAREY_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".farey-cache"))
}

fn table_path(order: u64) -> PathBuf {
    cache_dir().join(format!("t{order}.ftbl"))
}

/// Loads the cached table for `order`, if a valid one exists.
/// `Ok(None)` means no cache file; `Err` describes a rejected one.
fn load(order: u64) -> Result<Option<FareyTable>, String> {
    let bytes = match fs::read(table_path(order)) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.to_string()),
    };
    if bytes.len() < HEADER_LEN {
        return Err(format!("truncated header ({} bytes)", bytes.len()));
    }
    if &bytes[..4] != MAGIC {
        return Err("bad magic".into());
    }
    if bytes[4] != VERSION {
        return Err(format!("unsupported cache version {}", bytes[4]));
    }
    let stored_order = u64::from_le_bytes(bytes[5..13].try_into().unwrap());
    if stored_order != order {
        return Err(format!("order {stored_order} != requested {order}"));
    }
    let f_max = u64::from_le_bytes(bytes[13..21].try_into().unwrap());
    let grid = &bytes[HEADER_LEN..];
    if grid.len() % 4 != 0 {
        return Err("truncated grid".into());
    }
    let ranks: Vec<u32> = grid
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
        .collect();
    FareyTable::from_raw(order, f_max, ranks)
        .map(Some)
        .map_err(|e| e.to_string())
}

fn store(table: &FareyTable) -> io::Result<()> {
    let dir = cache_dir();
    fs::create_dir_all(&dir)?;
    let mut bytes = Vec::with_capacity(HEADER_LEN + table.cells().len() * 4);
    bytes.extend_from_slice(MAGIC);
    bytes.push(VERSION);
    bytes.extend_from_slice(&table.order().to_le_bytes());
    bytes.extend_from_slice(&table.f_max().to_le_bytes());
    for &cell in table.cells() {
        bytes.extend_from_slice(&cell.to_le_bytes());
    }
    fs::write(table_path(table.order()), bytes)
}

/// Cached table lookup; builds (and stores, best effort) on miss or
/// rejection. `no_cache` bypasses both directions.
pub fn load_or_build(order: u64, no_cache: bool) -> Result<FareyTable, farey::Error> {
    if !no_cache {
        match load(order) {
            Ok(Some(table)) => return Ok(table),
            Ok(None) => {}
            Err(msg) => eprintln!("table cache rejected ({msg}); rebuilding"),
        }
    }
    let table = FareyTable::build(&FareySequence::generate(order)?)?;
    if !no_cache {
        let _ = store(&table);
    }
    Ok(table)
}
