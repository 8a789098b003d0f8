//! Brute-force minimal positive discriminants per projective dimension
//! (a Schneider-style table), the quadratic lower-bound verification,
//! and the crossover rank where the quartic degree estimate overtakes
//! the classical quadratic one.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::exact::{self, Int, Rational};
use crate::integrality::{factorial_witness, TwistBasis};
use crate::{Error, Result};

/// One witness row of the minimal-discriminant table.
///
/// `delta = 4d - c1^2` is the smallest positive discriminant on P^p
/// whose Chern data passes the integrality test for all twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaMinRow {
    pub p: u32,
    pub delta: u64,
    pub c1: u8,
    pub d: u64,
}

/// Minimal-discriminant rows for `p = 1..=p_max`, non-decreasing in p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaMinTable {
    pub rows: Vec<DeltaMinRow>,
}

/// Search ceiling. The factorial witness guarantees termination far
/// below this for every dimension the crate handles.
const DELTA_CEILING: u64 = 100_000_000;

fn candidate_for(delta: u64) -> (u8, u64) {
    if delta.is_multiple_of(4) {
        (0, delta / 4)
    } else {
        debug_assert_eq!(delta % 4, 3);
        (1, (delta + 1) / 4)
    }
}

fn delta_min_with_basis(basis: &TwistBasis) -> Result<DeltaMinRow> {
    let p = basis.p();
    let mut delta = 3u64;
    while delta < DELTA_CEILING {
        let (c1, d) = candidate_for(delta);
        if basis.is_integral(c1, &Int::from(d)) {
            return Ok(DeltaMinRow { p, delta, c1, d });
        }
        // Positive discriminants are exactly the residues 3, 0 mod 4.
        delta += if delta % 4 == 3 { 1 } else { 3 };
    }
    Err(Error::InvalidInput(format!(
        "no integral discriminant below {DELTA_CEILING} for p = {p}"
    )))
}

/// Smallest positive discriminant on P^p admitting integral Euler
/// characteristics at every twist, with its witness `(c1, d)`.
///
/// Candidates are enumerated in increasing order of the discriminant
/// itself (3, 4, 7, 8, 11, 12, ...), so the first hit is the minimum
/// by construction.
pub fn delta_min(p: u32) -> Result<DeltaMinRow> {
    if p < 1 {
        return Err(Error::Precondition("delta_min needs p >= 1".into()));
    }
    delta_min_with_basis(&TwistBasis::new(p))
}

/// The table of minimal discriminants for `p = 1..=p_max`.
pub fn schneider_table(p_max: u32) -> Result<DeltaMinTable> {
    if p_max < 1 {
        return Err(Error::Precondition("schneider_table needs p_max >= 1".into()));
    }
    let mut rows = Vec::with_capacity(p_max as usize);
    for p in 1..=p_max {
        rows.push(delta_min(p)?);
    }
    let table = DeltaMinTable { rows };
    table.validate()?;
    Ok(table)
}

impl DeltaMinTable {
    /// Re-checks every structural invariant: consecutive rows from
    /// p = 1, the discriminant identity, witness integrality, and
    /// monotonicity in p (restriction nesting).
    pub fn validate(&self) -> Result<()> {
        let mut previous = 0u64;
        for (idx, row) in self.rows.iter().enumerate() {
            if row.p != idx as u32 + 1 {
                return Err(Error::InvalidInput(format!(
                    "row {idx} has p = {}, expected {}",
                    row.p,
                    idx + 1
                )));
            }
            if u64::from(row.c1) * u64::from(row.c1) + row.delta != 4 * row.d {
                return Err(Error::InvalidInput(format!(
                    "row p = {} has inconsistent witness",
                    row.p
                )));
            }
            if row.delta < previous {
                return Err(Error::InvalidInput(format!(
                    "delta_min decreased at p = {}",
                    row.p
                )));
            }
            if !TwistBasis::new(row.p).is_integral(row.c1, &Int::from(row.d)) {
                return Err(Error::InvalidInput(format!(
                    "witness for p = {} fails the integrality test",
                    row.p
                )));
            }
            previous = row.delta;
        }
        Ok(())
    }

    pub fn row(&self, p: u32) -> Option<&DeltaMinRow> {
        self.rows.get(p.checked_sub(1)? as usize)
    }
}

// ---------------------------------------------------------------------------
// Advisory cache
// ---------------------------------------------------------------------------

const CACHE_HEADER: &str = "cicrit-deltamin-cache v1";

fn fnv1a64(text: &str) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn row_checksum(row: &DeltaMinRow) -> String {
    format!(
        "{:016x}",
        fnv1a64(&format!("{}|{}|{}|{}", row.p, row.delta, row.c1, row.d))
    )
}

fn render_cache(table: &DeltaMinTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CACHE_HEADER}");
    let _ = writeln!(out, "p\tdelta_min\tc1\td\tchecksum");
    for row in &table.rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            row.p,
            row.delta,
            row.c1,
            row.d,
            row_checksum(row)
        );
    }
    out
}

fn parse_cache(text: &str) -> Result<DeltaMinTable> {
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(Error::Cache("schema header mismatch".into()));
    }
    if lines.next() != Some("p\tdelta_min\tc1\td\tchecksum") {
        return Err(Error::Cache("column header mismatch".into()));
    }
    let mut rows = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(Error::Cache(format!("malformed row: {line:?}")));
        }
        let row = DeltaMinRow {
            p: fields[0].parse().map_err(|_| Error::Cache("bad p".into()))?,
            delta: fields[1].parse().map_err(|_| Error::Cache("bad delta".into()))?,
            c1: fields[2].parse().map_err(|_| Error::Cache("bad c1".into()))?,
            d: fields[3].parse().map_err(|_| Error::Cache("bad d".into()))?,
        };
        if fields[4] != row_checksum(&row) {
            return Err(Error::Cache(format!("checksum mismatch at p = {}", row.p)));
        }
        rows.push(row);
    }
    Ok(DeltaMinTable { rows })
}

/// Like [`schneider_table`], backed by an advisory cache file.
///
/// A readable, schema-matching, checksum-clean cache seeds the rows;
/// anything invalid is silently recomputed. Writes go through a
/// temporary file and an atomic rename (single-writer discipline).
pub fn schneider_table_with_cache(p_max: u32, cache: Option<&Path>) -> Result<DeltaMinTable> {
    if p_max < 1 {
        return Err(Error::Precondition("schneider_table needs p_max >= 1".into()));
    }
    let cached: Option<DeltaMinTable> = cache
        .and_then(|path| std::fs::read_to_string(path).ok())
        .and_then(|text| parse_cache(&text).ok())
        .filter(|table| table.validate().is_ok());

    let mut rows = cached.map(|t| t.rows).unwrap_or_default();
    let had = rows.len() as u32;
    rows.truncate(p_max as usize);
    for p in had + 1..=p_max {
        rows.push(delta_min(p)?);
    }
    let table = DeltaMinTable { rows };
    table.validate()?;

    if let Some(path) = cache {
        if had < p_max {
            write_cache_atomic(path, &table)?;
        }
    }
    Ok(table)
}

fn write_cache_atomic(path: &Path, table: &DeltaMinTable) -> Result<()> {
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, render_cache(table))?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

/// One check of the quadratic lower bound `delta_min(p) > p^2 / 6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropBoundEntry {
    pub p: u32,
    pub delta_min: u64,
    /// `p^2/6` as an exact reduced fraction.
    pub bound: String,
    /// `delta_min - p^2/6` as an exact reduced fraction.
    pub margin: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropBoundReport {
    pub entries: Vec<PropBoundEntry>,
    pub all_pass: bool,
}

/// Checks `delta_min(p) > p^2/6` for `p_from..=p_to` by exact rational
/// comparison. Violations are reported as failed entries, never
/// silently dropped.
pub fn verify_prop_bound(p_from: u32, p_to: u32) -> Result<PropBoundReport> {
    if p_from < 4 || p_from > p_to {
        return Err(Error::Precondition(
            "verify_prop_bound needs 4 <= p_from <= p_to".into(),
        ));
    }
    let table = schneider_table(p_to)?;
    let mut entries = Vec::new();
    for p in p_from..=p_to {
        let row = table.row(p).expect("table covers range");
        let bound = Rational::new(Int::from(u64::from(p) * u64::from(p)), Int::from(6));
        let value = Rational::from_integer(Int::from(row.delta));
        let margin = &value - &bound;
        entries.push(PropBoundEntry {
            p,
            delta_min: row.delta,
            bound: bound.to_string(),
            margin: margin.to_string(),
            pass: value > bound,
        });
    }
    let all_pass = entries.iter().all(|e| e.pass);
    Ok(PropBoundReport { entries, all_pass })
}

/// Smallest rank `l` from which the quartic degree estimate
/// `l^2 (l-1)^2 / (24 pi^2)` beats the classical quadratic bound
/// `(l-1)(l+5)`, decided with the certified pi enclosure.
pub fn crossover_ell() -> Result<u32> {
    for ell in 2u32..=10_000 {
        let e = u64::from(ell);
        let lhs = Rational::from_integer(Int::from(e * e * (e - 1) * (e - 1)));
        let rhs = exact::pi()
            .pow(2)
            .scale(&Rational::from_integer(Int::from(24 * (e - 1) * (e + 5))));
        match rhs.try_cmp(&lhs)? {
            std::cmp::Ordering::Less => return Ok(ell),
            _ => continue,
        }
    }
    Err(Error::InvalidInput("no crossover rank below 10000".into()))
}

/// Termination guarantee used by [`delta_min`]: the factorial witness
/// must pass the integrality test for every dimension up to `p_max`.
pub fn verify_search_terminates(p_max: u32) -> bool {
    (1..=p_max).all(|p| factorial_witness(p).is_integral_all_twists())
}
