//! Domain types, ingestion, and validation for longitudinal and survival
//! data.
//!
//! Longitudinal observations are sparse and possibly asynchronous across
//! outcomes, so each subject gets a union time grid plus per-outcome index
//! masks; fully observed grids reduce to one shared grid per subject.

use crate::error::{Error, Result};
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

/// Canonical number formatting: 17 significant digits, scientific notation.
/// Parsing and re-emitting a canonical file is byte-identical.
pub fn fmt_canonical(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct LongRecord<F> {
    /// Dense subject index (0..n).
    pub subject: usize,
    /// Outcome index, 0-based internally (1-based in files).
    pub outcome: usize,
    pub time: F,
    pub value: F,
}

#[derive(Debug, Clone)]
pub struct LongitudinalDataset<F: Real> {
    /// Sorted by (subject, outcome, time).
    pub records: Vec<LongRecord<F>>,
    pub j_count: usize,
    pub tau: F,
    pub n: usize,
    /// Dense index -> original subject id.
    pub original_ids: Vec<i64>,
}

/// What ingestion dropped or kept.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct IngestReport {
    pub rows_read: usize,
    pub rows_kept: usize,
    pub rows_dropped: usize,
    /// First few dropped rows with reasons, for diagnostics.
    pub dropped: Vec<(usize, String)>,
}

/// Column-name mapping for longitudinal CSV ingestion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColumnSchema {
    pub subject: String,
    pub outcome: String,
    pub time: String,
    pub value: String,
}

impl Default for ColumnSchema {
    fn default() -> Self {
        Self {
            subject: "subject".into(),
            outcome: "outcome".into(),
            time: "time".into(),
            value: "value".into(),
        }
    }
}

impl<F: Real> LongitudinalDataset<F> {
    /// Build from in-memory rows `(subject_id, outcome_1based, time, value)`.
    pub fn from_rows(rows: &[(i64, usize, F, F)], tau: F) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let mut j_count = 0usize;
        for (row_no, &(_, outcome, time, _)) in rows.iter().enumerate() {
            if outcome == 0 {
                return Err(Error::OutcomeOutOfRange {
                    outcome: outcome as i64,
                    j_count: 0,
                    row: row_no,
                });
            }
            if time < F::zero() || time > tau {
                return Err(Error::TimeOutOfDomain {
                    time: time.to64(),
                    tau: tau.to64(),
                    row: row_no,
                });
            }
            j_count = j_count.max(outcome);
        }
        let mut ids: Vec<i64> = rows.iter().map(|r| r.0).collect();
        ids.sort_unstable();
        ids.dedup();
        let index: BTreeMap<i64, usize> = ids.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut records: Vec<LongRecord<F>> = rows
            .iter()
            .map(|&(s, j, t, v)| LongRecord {
                subject: index[&s],
                outcome: j - 1,
                time: t,
                value: v,
            })
            .collect();
        records.sort_by(|a, b| {
            (a.subject, a.outcome, a.time)
                .partial_cmp(&(b.subject, b.outcome, b.time))
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        Ok(Self {
            n: ids.len(),
            records,
            j_count,
            tau,
            original_ids: ids,
        })
    }

    /// Total observation count.
    pub fn total_obs(&self) -> usize {
        self.records.len()
    }

    /// Mean per-subject count of distinct observation times.
    pub fn mean_visits(&self) -> f64 {
        let mut counts = vec![std::collections::BTreeSet::new(); self.n];
        for r in &self.records {
            counts[r.subject].insert(ordered(r.time));
        }
        counts.iter().map(|s| s.len() as f64).sum::<f64>() / self.n as f64
    }
}

fn ordered<F: Real>(x: F) -> u64 {
    x.to64().to_bits()
}

/// Parse a longitudinal CSV (`subject,outcome,time,value`, `#`-comment lines
/// allowed). `strict` turns malformed rows into errors instead of drops;
/// out-of-domain times are always errors.
pub fn ingest_longitudinal<F: Real>(
    path: &Path,
    schema: &ColumnSchema,
    tau: F,
    strict: bool,
) -> Result<(LongitudinalDataset<F>, IngestReport)> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)?;
    let headers = reader.headers()?.clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let (ci_s, ci_o, ci_t, ci_v) = (
        col(&schema.subject)?,
        col(&schema.outcome)?,
        col(&schema.time)?,
        col(&schema.value)?,
    );

    let mut report = IngestReport::default();
    let mut rows: Vec<(i64, usize, F, F)> = Vec::new();
    for (row_no, record) in reader.records().enumerate() {
        let record = record?;
        report.rows_read += 1;
        let mut drop_row = |column: &str, report: &mut IngestReport| -> Result<()> {
            if strict {
                return Err(Error::NonNumericValue {
                    column: column.to_string(),
                    row: row_no,
                });
            }
            report.rows_dropped += 1;
            if report.dropped.len() < 20 {
                report
                    .dropped
                    .push((row_no, format!("non-numeric `{column}`")));
            }
            Ok(())
        };
        let subject = match record.get(ci_s).and_then(|v| v.parse::<i64>().ok()) {
            Some(s) => s,
            None => {
                drop_row(&schema.subject, &mut report)?;
                continue;
            }
        };
        let outcome = match record.get(ci_o).and_then(|v| v.parse::<i64>().ok()) {
            Some(o) if o >= 1 => o as usize,
            Some(o) => {
                return Err(Error::OutcomeOutOfRange {
                    outcome: o,
                    j_count: 0,
                    row: row_no,
                })
            }
            None => {
                drop_row(&schema.outcome, &mut report)?;
                continue;
            }
        };
        let time = match record
            .get(ci_t)
            .and_then(|v| v.parse::<f64>().ok())
            .filter(|t| t.is_finite())
        {
            Some(t) => t,
            None => {
                drop_row(&schema.time, &mut report)?;
                continue;
            }
        };
        if time < 0.0 || time > tau.to64() {
            return Err(Error::TimeOutOfDomain {
                time,
                tau: tau.to64(),
                row: row_no,
            });
        }
        let value = match record
            .get(ci_v)
            .and_then(|v| v.parse::<f64>().ok())
            .filter(|v| v.is_finite())
        {
            Some(v) => v,
            None => {
                drop_row(&schema.value, &mut report)?;
                continue;
            }
        };
        rows.push((subject, outcome, F::of(time), F::of(value)));
    }
    report.rows_kept = rows.len();
    let dataset = LongitudinalDataset::from_rows(&rows, tau)?;
    Ok((dataset, report))
}

/// Emit retained rows in canonical form; `ingest -> emit` is byte-stable.
pub fn emit_longitudinal_csv<F: Real>(
    ds: &LongitudinalDataset<F>,
    mut out: impl Write,
) -> Result<()> {
    writeln!(out, "subject,outcome,time,value")?;
    for r in &ds.records {
        writeln!(
            out,
            "{},{},{},{}",
            ds.original_ids[r.subject],
            r.outcome + 1,
            fmt_canonical(r.time.to64()),
            fmt_canonical(r.value.to64())
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SurvivalDataset<F: Real> {
    /// Observed time (event or censoring), per subject.
    pub time: Vec<F>,
    /// Event indicator, per subject.
    pub event: Vec<bool>,
    /// Baseline covariates, n x P.
    pub z: DMatrix<F>,
    pub original_ids: Vec<i64>,
}

impl<F: Real> SurvivalDataset<F> {
    pub fn new(
        original_ids: Vec<i64>,
        time: Vec<F>,
        event: Vec<bool>,
        z: DMatrix<F>,
    ) -> Result<Self> {
        if time.len() != original_ids.len()
            || event.len() != original_ids.len()
            || z.nrows() != original_ids.len()
        {
            return Err(Error::DimensionMismatch(
                "survival fields have inconsistent lengths".into(),
            ));
        }
        for (i, &t) in time.iter().enumerate() {
            if !(t > F::zero()) || !t.is_finite_scalar() {
                return Err(Error::InvalidSurvivalRecord {
                    subject: original_ids[i],
                    reason: format!("non-positive time {t}"),
                });
            }
        }
        Ok(Self {
            time,
            event,
            z,
            original_ids,
        })
    }

    pub fn n(&self) -> usize {
        self.time.len()
    }

    pub fn p(&self) -> usize {
        self.z.ncols()
    }
}

/// Parse a survival CSV: `subject,time,event,z1,...,zP`; every column after
/// `event` is a baseline covariate.
pub fn ingest_survival<F: Real>(path: &Path) -> Result<SurvivalDataset<F>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)?;
    let headers = reader.headers()?.clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let (ci_s, ci_t, ci_e) = (col("subject")?, col("time")?, col("event")?);
    let z_cols: Vec<usize> = (0..headers.len())
        .filter(|&i| i != ci_s && i != ci_t && i != ci_e)
        .collect();

    let mut rows: Vec<(i64, F, bool, Vec<F>)> = Vec::new();
    for (row_no, record) in reader.records().enumerate() {
        let record = record?;
        let parse_num = |idx: usize, name: &str| -> Result<f64> {
            record
                .get(idx)
                .and_then(|v| v.parse::<f64>().ok())
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::NonNumericValue {
                    column: name.to_string(),
                    row: row_no,
                })
        };
        let subject = record
            .get(ci_s)
            .and_then(|v| v.parse::<i64>().ok())
            .ok_or_else(|| Error::NonNumericValue {
                column: "subject".into(),
                row: row_no,
            })?;
        let time = parse_num(ci_t, "time")?;
        let event = match parse_num(ci_e, "event")? {
            v if v == 0.0 => false,
            v if v == 1.0 => true,
            v => {
                return Err(Error::InvalidSurvivalRecord {
                    subject,
                    reason: format!("event indicator {v} not in {{0,1}}"),
                })
            }
        };
        let mut z = Vec::with_capacity(z_cols.len());
        for (k, &zi) in z_cols.iter().enumerate() {
            z.push(F::of(parse_num(zi, &format!("z{}", k + 1))?));
        }
        rows.push((subject, F::of(time), event, z));
    }
    if rows.is_empty() {
        return Err(Error::EmptyDataset);
    }
    rows.sort_by_key(|r| r.0);
    for w in rows.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::InvalidSurvivalRecord {
                subject: w[0].0,
                reason: "duplicate subject".into(),
            });
        }
    }
    let p = z_cols.len();
    let n = rows.len();
    let mut z = DMatrix::zeros(n, p);
    for (i, row) in rows.iter().enumerate() {
        for (k, &v) in row.3.iter().enumerate() {
            z[(i, k)] = v;
        }
    }
    SurvivalDataset::new(
        rows.iter().map(|r| r.0).collect(),
        rows.iter().map(|r| r.1).collect(),
        rows.iter().map(|r| r.2).collect(),
        z,
    )
}

/// Per-outcome observations on the subject's union grid.
#[derive(Debug, Clone)]
pub struct OutcomeObs<F> {
    /// Indices into the union grid where this outcome is observed.
    pub grid_idx: Vec<usize>,
    /// Observed values, aligned with `grid_idx`.
    pub values: Vec<F>,
}

/// One subject's joined longitudinal and survival data.
#[derive(Debug, Clone)]
pub struct SubjectView<F: Real> {
    pub subject: usize,
    pub original_id: i64,
    /// Union time grid, ascending (duplicates possible when an outcome has
    /// replicate measurements at one time).
    pub times: Vec<F>,
    /// One entry per outcome (length J).
    pub outcomes: Vec<OutcomeObs<F>>,
    pub survival_time: F,
    pub event: bool,
    pub covariates: DVector<F>,
}

impl<F: Real> SubjectView<F> {
    pub fn grid_len(&self) -> usize {
        self.times.len()
    }

    /// Boolean presence mask for outcome `j` over the union grid.
    pub fn mask(&self, j: usize) -> Vec<bool> {
        let mut m = vec![false; self.times.len()];
        for &idx in &self.outcomes[j].grid_idx {
            m[idx] = true;
        }
        m
    }

    pub fn obs_count(&self, j: usize) -> usize {
        self.outcomes[j].grid_idx.len()
    }
}

/// Join longitudinal and survival data into per-subject views.
///
/// Observations after the subject's event/censoring time are rejected: an
/// error in strict mode, dropped otherwise. Subject id sets must match.
pub fn join_with_survival<F: Real>(
    long: &LongitudinalDataset<F>,
    surv: &SurvivalDataset<F>,
    strict: bool,
) -> Result<Vec<SubjectView<F>>> {
    if long.original_ids != surv.original_ids {
        let missing: Vec<i64> = long
            .original_ids
            .iter()
            .filter(|id| !surv.original_ids.contains(id))
            .take(5)
            .copied()
            .collect();
        let extra: Vec<i64> = surv
            .original_ids
            .iter()
            .filter(|id| !long.original_ids.contains(id))
            .take(5)
            .copied()
            .collect();
        return Err(Error::SubjectMismatch(format!(
            "longitudinal-only: {missing:?}, survival-only: {extra:?}"
        )));
    }
    let n = long.n;
    let j_count = long.j_count;
    // Per subject, per outcome: sorted times and values.
    let mut per_subject: Vec<Vec<Vec<(F, F)>>> = vec![vec![Vec::new(); j_count]; n];
    for r in &long.records {
        let t_surv = surv.time[r.subject];
        if r.time > t_surv {
            if strict {
                return Err(Error::ObservationAfterEvent {
                    subject: long.original_ids[r.subject],
                    time: r.time.to64(),
                    survival_time: t_surv.to64(),
                });
            }
            continue;
        }
        per_subject[r.subject][r.outcome].push((r.time, r.value));
    }

    let mut views = Vec::with_capacity(n);
    for (i, outcomes_raw) in per_subject.into_iter().enumerate() {
        // Union grid with multiplicity = max over outcomes of the per-time
        // replicate count.
        let mut mult: BTreeMap<u64, usize> = BTreeMap::new();
        for obs in &outcomes_raw {
            let mut local: BTreeMap<u64, usize> = BTreeMap::new();
            for &(t, _) in obs {
                *local.entry(ordered(t)).or_insert(0) += 1;
            }
            for (t, c) in local {
                let e = mult.entry(t).or_insert(0);
                *e = (*e).max(c);
            }
        }
        let mut times: Vec<F> = Vec::new();
        let mut first_copy: BTreeMap<u64, usize> = BTreeMap::new();
        for (&bits, &count) in &mult {
            first_copy.insert(bits, times.len());
            for _ in 0..count {
                times.push(F::of(f64::from_bits(bits)));
            }
        }
        let mut outcomes = Vec::with_capacity(j_count);
        for obs in &outcomes_raw {
            let mut used: BTreeMap<u64, usize> = BTreeMap::new();
            let mut grid_idx = Vec::with_capacity(obs.len());
            let mut values = Vec::with_capacity(obs.len());
            for &(t, v) in obs {
                let bits = ordered(t);
                let offset = used.entry(bits).or_insert(0);
                grid_idx.push(first_copy[&bits] + *offset);
                *offset += 1;
                values.push(v);
            }
            outcomes.push(OutcomeObs { grid_idx, values });
        }
        views.push(SubjectView {
            subject: i,
            original_id: long.original_ids[i],
            times,
            outcomes,
            survival_time: surv.time[i],
            event: surv.event[i],
            covariates: surv.z.row(i).transpose(),
        });
    }
    Ok(views)
}
