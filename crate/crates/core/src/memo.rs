use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::harmonic::HarmonicTable;
use crate::stirling::StirlingTable;

/// Name of the environment variable read by [`Tables::from_env`].
pub const CACHE_CAP_VAR: &str = "RHO_CACHE_CAP";

/// Append-only grid of rows that only ever grow to the right.
///
/// Rows are indexed by a non-negative row number; the caller decides what a
/// row means (a degree, a negated degree). Values never change once stored,
/// so the results observed by readers do not depend on fill order.
#[derive(Debug)]
pub(crate) struct Rows<T> {
    rows: RwLock<Vec<Vec<T>>>,
    cap: Option<usize>,
}

impl<T: Clone> Rows<T> {
    pub(crate) fn new(cap: Option<usize>) -> Self {
        Self { rows: RwLock::new(Vec::new()), cap }
    }

    pub(crate) fn get(&self, row: usize, col: usize) -> Option<T> {
        let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
        rows.get(row).and_then(|r| r.get(col)).cloned()
    }

    pub(crate) fn len(&self) -> usize {
        let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
        rows.iter().map(Vec::len).sum()
    }

    /// Makes rows `0..=last_row` at least `width(row)` long, filling missing
    /// cells in row-major order with `fill(rows, row, col)`.
    pub(crate) fn ensure<W, F>(&self, last_row: usize, width: W, mut fill: F) -> Result<()>
    where
        W: Fn(usize) -> usize,
        F: FnMut(&[Vec<T>], usize, usize) -> T,
    {
        {
            let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
            if (0..=last_row).all(|r| rows.get(r).is_some_and(|v| v.len() >= width(r))) {
                return Ok(());
            }
        }
        let mut rows = self.rows.write().unwrap_or_else(|e| e.into_inner());
        if let Some(cap) = self.cap {
            let current: usize = rows.iter().map(Vec::len).sum();
            let extra: usize = (0..=last_row).map(|r| width(r).saturating_sub(rows.get(r).map_or(0, Vec::len))).sum();
            if current + extra > cap {
                return Err(Error::CacheCapExceeded { requested: current + extra, cap });
            }
        }
        if rows.len() <= last_row {
            rows.resize_with(last_row + 1, Vec::new);
        }
        for r in 0..=last_row {
            let w = width(r);
            while rows[r].len() < w {
                let c = rows[r].len();
                let v = fill(&rows, r, c);
                rows[r].push(v);
            }
        }
        Ok(())
    }
}

/// The memo tables every table-backed computation draws from.
#[derive(Debug)]
pub struct Tables {
    pub stirling: StirlingTable,
    pub harmonic: HarmonicTable,
}

impl Tables {
    /// Unbounded tables.
    pub fn new() -> Self {
        Self::with_cap(None)
    }

    /// Tables whose individual grids hold at most `cap` entries.
    pub fn with_cap(cap: Option<usize>) -> Self {
        Self { stirling: StirlingTable::with_cap(cap), harmonic: HarmonicTable::with_cap(cap) }
    }

    /// Tables capped by `RHO_CACHE_CAP` when it is set to a positive integer.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CACHE_CAP_VAR) {
            Ok(v) => {
                let cap = v.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("{CACHE_CAP_VAR}={v} is not a non-negative integer"))
                })?;
                Ok(Self::with_cap(if cap == 0 { None } else { Some(cap) }))
            }
            Err(_) => Ok(Self::new()),
        }
    }

    /// A process-wide unbounded instance.
    pub fn global() -> &'static Tables {
        static GLOBAL: OnceLock<Tables> = OnceLock::new();
        GLOBAL.get_or_init(Tables::new)
    }
}

impl Default for Tables {
    fn default() -> Self {
        Self::new()
    }
}
