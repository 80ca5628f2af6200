//! Per-subject design caches.
//!
//! Everything the estimators need repeatedly — basis evaluations at the
//! observed times and the Gram blocks built from them — is computed once per
//! fit. M-step updates then reduce to O(c^2) work per subject regardless of
//! the Monte Carlo sample size.

use crate::data::SubjectView;
use crate::error::Result;
use crate::scalar::Real;
use crate::splines::OrthonormalBasis;
use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone)]
pub struct OutcomeDesign<F: Real> {
    /// Observed values for this outcome (length m_ij).
    pub y: DVector<F>,
    /// Raw basis rows at the observed times, m_ij x c.
    pub b_raw: DMatrix<F>,
    /// Orthonormal basis rows at the observed times, m_ij x c.
    pub b_on: DMatrix<F>,
    /// B'B (raw), c x c.
    pub gram_raw: DMatrix<F>,
    /// B~'B~ (orthonormal), c x c.
    pub gram_on: DMatrix<F>,
    /// B'B~ (raw x orthonormal), c x c.
    pub cross: DMatrix<F>,
    /// B'y (raw).
    pub bty_raw: DVector<F>,
    /// B~'y (orthonormal).
    pub bty_on: DVector<F>,
    /// y'y.
    pub yty: F,
}

impl<F: Real> OutcomeDesign<F> {
    pub fn m(&self) -> usize {
        self.y.len()
    }
}

#[derive(Debug, Clone)]
pub struct SubjectDesign<F: Real> {
    pub subject: usize,
    pub original_id: i64,
    /// Union grid times for reporting; per-outcome rows are already
    /// restricted to the observed subset.
    pub times: Vec<F>,
    pub outcomes: Vec<OutcomeDesign<F>>,
    pub survival_time: F,
    pub event: bool,
    pub covariates: DVector<F>,
}

impl<F: Real> SubjectDesign<F> {
    pub fn j_count(&self) -> usize {
        self.outcomes.len()
    }

    /// Total observation count across outcomes.
    pub fn m_total(&self) -> usize {
        self.outcomes.iter().map(|o| o.m()).sum()
    }

    /// Observations for all outcomes stacked in outcome order.
    pub fn stacked_y(&self) -> DVector<F> {
        let mut y = DVector::zeros(self.m_total());
        let mut offset = 0;
        for o in &self.outcomes {
            y.rows_mut(offset, o.m()).copy_from(&o.y);
            offset += o.m();
        }
        y
    }
}

/// Build design caches for every subject.
pub fn build_designs<F: Real>(
    views: &[SubjectView<F>],
    basis: &OrthonormalBasis<F>,
) -> Result<Vec<SubjectDesign<F>>> {
    views
        .iter()
        .map(|view| {
            let mut outcomes = Vec::with_capacity(view.outcomes.len());
            for obs in &view.outcomes {
                let times: Vec<F> = obs.grid_idx.iter().map(|&k| view.times[k]).collect();
                let b_raw = basis.eval_matrix(&times, false)?;
                let b_on = &b_raw * &basis.transform;
                let y = DVector::from_column_slice(&obs.values);
                let gram_raw = b_raw.transpose() * &b_raw;
                let gram_on = b_on.transpose() * &b_on;
                let cross = b_raw.transpose() * &b_on;
                let bty_raw = b_raw.transpose() * &y;
                let bty_on = b_on.transpose() * &y;
                let yty = y.dot(&y);
                outcomes.push(OutcomeDesign {
                    y,
                    b_raw,
                    b_on,
                    gram_raw,
                    gram_on,
                    cross,
                    bty_raw,
                    bty_on,
                    yty,
                });
            }
            Ok(SubjectDesign {
                subject: view.subject,
                original_id: view.original_id,
                times: view.times.clone(),
                outcomes,
                survival_time: view.survival_time,
                event: view.event,
                covariates: view.covariates.clone(),
            })
        })
        .collect()
}
