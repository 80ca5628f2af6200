//! Cubic B-spline bases, Gram-matrix orthonormalization, and penalized
//! smoothing.
//!
//! The basis dimension `c` counts equally spaced interior knots plus the
//! spline order, with boundary knots clamped. Orthonormalization multiplies
//! the raw basis by `G^{-1/2}` where `G` is the exact Gram matrix, so that
//! coefficient-space inner products coincide with function-space inner
//! products; the reduced-rank covariance estimators depend on that identity.

use crate::error::{Error, Result};
use crate::linalg::{gauss_legendre, solve_spd, sym_power};
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Eigenvalue floor below which the Gram matrix counts as singular.
const GRAM_EIGEN_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisConfig<F> {
    /// Basis dimension: interior knot count plus the order.
    pub c: usize,
    /// Spline order (degree plus one); 4 is cubic.
    pub order: usize,
    /// Upper end of the time domain `[0, tau]`.
    pub tau: F,
}

impl<F: Real> BasisConfig<F> {
    pub fn cubic(c: usize, tau: F) -> Self {
        Self { c, order: 4, tau }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order < 2 {
            return Err(Error::InvalidBasis(format!(
                "order {} below 2",
                self.order
            )));
        }
        if self.c < self.order {
            return Err(Error::InvalidBasis(format!(
                "basis dimension {} below order {}",
                self.c, self.order
            )));
        }
        if !(self.tau > F::zero()) || !self.tau.is_finite_scalar() {
            return Err(Error::InvalidBasis(format!("invalid tau {}", self.tau)));
        }
        Ok(())
    }

    pub fn interior_knots(&self) -> usize {
        self.c - self.order
    }
}

/// Rule of thumb for the basis dimension from the total observation count:
/// `round(total^{1/5} + 4)`.
pub fn default_c(total_obs: usize) -> usize {
    assert!(total_obs >= 1, "need at least one observation");
    ((total_obs as f64).powf(0.2) + 4.0).round() as usize
}

/// Orthonormalized B-spline basis on `[0, tau]`.
#[derive(Debug, Clone)]
pub struct OrthonormalBasis<F: Real> {
    pub config: BasisConfig<F>,
    /// Full clamped knot vector of length `c + order`.
    knots: Vec<F>,
    /// Gram matrix of the raw basis.
    pub gram: DMatrix<F>,
    /// `G^{-1/2}`, mapping raw evaluations to orthonormal ones.
    pub transform: DMatrix<F>,
    /// `G^{1/2}`, mapping raw coefficients to orthonormal ones.
    pub gram_sqrt: DMatrix<F>,
    /// Integral of each raw basis function over the domain.
    raw_integrals: DVector<F>,
    /// Greville abscissae of the raw basis.
    greville: Vec<F>,
}

/// Build the orthonormal basis; the Gram matrix is integrated exactly by
/// per-span Gauss–Legendre quadrature.
pub fn build_basis<F: Real>(cfg: BasisConfig<F>) -> Result<OrthonormalBasis<F>> {
    cfg.validate()?;
    let knots = clamped_knots(&cfg);
    let gram = gram_matrix(&cfg, &knots);
    let floor = F::of(GRAM_EIGEN_FLOOR);
    let (transform, min_eig) = sym_power(&gram, -0.5, floor);
    if min_eig < floor {
        return Err(Error::SingularGram {
            min_eig: min_eig.to64(),
        });
    }
    let (gram_sqrt, _) = sym_power(&gram, 0.5, floor);
    let degree = cfg.order - 1;
    let raw_integrals = DVector::from_fn(cfg.c, |i, _| {
        (knots[i + cfg.order] - knots[i]) / F::of(cfg.order as f64)
    });
    let greville = (0..cfg.c)
        .map(|i| {
            let mut s = F::zero();
            for k in 1..=degree {
                s += knots[i + k];
            }
            s / F::of(degree as f64)
        })
        .collect();
    Ok(OrthonormalBasis {
        config: cfg,
        knots,
        gram,
        transform,
        gram_sqrt,
        raw_integrals,
        greville,
    })
}

fn clamped_knots<F: Real>(cfg: &BasisConfig<F>) -> Vec<F> {
    let spans = cfg.interior_knots() + 1;
    let mut knots = Vec::with_capacity(cfg.c + cfg.order);
    for _ in 0..cfg.order {
        knots.push(F::zero());
    }
    for i in 1..=cfg.interior_knots() {
        knots.push(cfg.tau * F::of(i as f64) / F::of(spans as f64));
    }
    for _ in 0..cfg.order {
        knots.push(cfg.tau);
    }
    knots
}

fn gram_matrix<F: Real>(cfg: &BasisConfig<F>, knots: &[F]) -> DMatrix<F> {
    let (nodes, weights) = gauss_legendre::<F>(cfg.order);
    let mut gram = DMatrix::zeros(cfg.c, cfg.c);
    let mut values = vec![F::zero(); cfg.order];
    let half = F::of(0.5);
    for span in (cfg.order - 1)..cfg.c {
        let a = knots[span];
        let b = knots[span + 1];
        if b <= a {
            continue;
        }
        let mid = (a + b) * half;
        let scale = (b - a) * half;
        for (node, w) in nodes.iter().zip(&weights) {
            let x = mid + scale * *node;
            nonzero_values(cfg, knots, span, x, &mut values);
            let first = span + 1 - cfg.order;
            let wq = *w * scale;
            for r in 0..cfg.order {
                for s in 0..cfg.order {
                    gram[(first + r, first + s)] += wq * values[r] * values[s];
                }
            }
        }
    }
    gram
}

/// Index of the knot span containing `x`, clamped so `tau` falls in the
/// last span.
fn find_span<F: Real>(cfg: &BasisConfig<F>, knots: &[F], x: F) -> usize {
    let lo = cfg.order - 1;
    let hi = cfg.c - 1;
    let mut span = lo;
    while span < hi && x >= knots[span + 1] {
        span += 1;
    }
    span
}

/// Cox–de Boor triangular scheme: the `order` basis values that are nonzero
/// on `span`, written into `out[r] = B_{span-order+1+r}(x)`.
fn nonzero_values<F: Real>(cfg: &BasisConfig<F>, knots: &[F], span: usize, x: F, out: &mut [F]) {
    let degree = cfg.order - 1;
    let mut left = vec![F::zero(); cfg.order];
    let mut right = vec![F::zero(); cfg.order];
    out[0] = F::one();
    for j in 1..=degree {
        left[j] = x - knots[span + 1 - j];
        right[j] = knots[span + j] - x;
        let mut saved = F::zero();
        for r in 0..j {
            let denom = right[r + 1] + left[j - r];
            let temp = out[r] / denom;
            out[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        out[j] = saved;
    }
}

impl<F: Real> OrthonormalBasis<F> {
    pub fn dim(&self) -> usize {
        self.config.c
    }

    pub fn tau(&self) -> F {
        self.config.tau
    }

    pub fn greville_sites(&self) -> &[F] {
        &self.greville
    }

    fn check_time(&self, t: F) -> Result<F> {
        let tol = self.config.tau * F::of(1e-12);
        if t < -tol || t > self.config.tau + tol {
            return Err(Error::TimeOutOfDomain {
                time: t.to64(),
                tau: self.config.tau.to64(),
                row: 0,
            });
        }
        Ok(t.clamp(F::zero(), self.config.tau))
    }

    /// Raw basis vector `b(t)`.
    pub fn eval_raw(&self, t: F) -> Result<DVector<F>> {
        let t = self.check_time(t)?;
        let cfg = &self.config;
        let span = find_span(cfg, &self.knots, t);
        let mut local = vec![F::zero(); cfg.order];
        nonzero_values(cfg, &self.knots, span, t, &mut local);
        let mut out = DVector::zeros(cfg.c);
        let first = span + 1 - cfg.order;
        for (r, v) in local.iter().enumerate() {
            out[first + r] = *v;
        }
        Ok(out)
    }

    /// Orthonormal basis vector `G^{-1/2} b(t)`.
    pub fn eval_orthonormal(&self, t: F) -> Result<DVector<F>> {
        Ok(&self.transform * self.eval_raw(t)?)
    }

    /// Evaluation matrix: row `k` is `b(t_k)'` (raw) or `b~(t_k)'`
    /// (orthonormal).
    pub fn eval_matrix(&self, times: &[F], orthonormal: bool) -> Result<DMatrix<F>> {
        let mut m = DMatrix::zeros(times.len(), self.config.c);
        for (k, &t) in times.iter().enumerate() {
            let row = self.eval_raw(t)?;
            m.row_mut(k).copy_from(&row.transpose());
        }
        if orthonormal {
            // rows b' G^{-1/2}; the transform is symmetric.
            m = m * &self.transform;
        }
        Ok(m)
    }

    /// Integrals of the raw basis functions over `[0, tau]`.
    pub fn raw_integrals(&self) -> &DVector<F> {
        &self.raw_integrals
    }

    /// Integrals of the orthonormal basis functions over `[0, tau]`.
    pub fn orthonormal_integrals(&self) -> DVector<F> {
        &self.transform * &self.raw_integrals
    }

    /// Per-span Gauss–Legendre quadrature rule over the whole domain.
    pub fn quadrature(&self, nodes_per_span: usize) -> (Vec<F>, Vec<F>) {
        let (nodes, weights) = gauss_legendre::<F>(nodes_per_span);
        let cfg = &self.config;
        let half = F::of(0.5);
        let mut xs = Vec::new();
        let mut ws = Vec::new();
        for span in (cfg.order - 1)..cfg.c {
            let a = self.knots[span];
            let b = self.knots[span + 1];
            if b <= a {
                continue;
            }
            let mid = (a + b) * half;
            let scale = (b - a) * half;
            for (n, w) in nodes.iter().zip(&weights) {
                xs.push(mid + scale * *n);
                ws.push(*w * scale);
            }
        }
        (xs, ws)
    }

    /// L2 projection of a function onto the basis; returns raw-basis
    /// coefficients. Quadrature with `nodes_per_span` nodes per knot span.
    pub fn project(&self, f: impl Fn(F) -> F, nodes_per_span: usize) -> DVector<F> {
        let (xs, ws) = self.quadrature(nodes_per_span);
        let mut rhs = DVector::zeros(self.config.c);
        for (&x, &w) in xs.iter().zip(&ws) {
            let b = self.eval_raw(x).expect("quadrature node inside domain");
            rhs += b * (w * f(x));
        }
        let sol = solve_spd(
            &self.gram,
            &DMatrix::from_column_slice(self.config.c, 1, rhs.as_slice()),
            F::of(1e-12),
        )
        .expect("Gram matrix is PD by construction");
        DVector::from_column_slice(sol.as_slice())
    }

    /// Orthonormal-basis coefficients of the same projection.
    pub fn project_orthonormal(&self, f: impl Fn(F) -> F, nodes_per_span: usize) -> DVector<F> {
        &self.gram_sqrt * self.project(f, nodes_per_span)
    }
}

/// Matrix of `r`-th divided differences on the given sites; annihilates
/// polynomials of degree below `r` evaluated at the sites. For B-spline
/// coefficients the sites are the Greville abscissae, which makes the
/// order-2 penalty vanish exactly on linear functions even with clamped
/// boundary knots.
pub fn divided_difference_matrix<F: Real>(sites: &[F], order: usize) -> DMatrix<F> {
    let n = sites.len();
    assert!(order >= 1 && n > order, "need more sites than penalty order");
    let mut d = DMatrix::<F>::identity(n, n);
    let mut rows = n;
    for k in 1..=order {
        let mut next = DMatrix::zeros(rows - 1, n);
        for i in 0..rows - 1 {
            let gap = sites[i + k] - sites[i];
            let inv = F::one() / gap;
            for j in 0..n {
                next[(i, j)] = (d[(i + 1, j)] - d[(i, j)]) * inv;
            }
        }
        d = next;
        rows -= 1;
    }
    // Rescale to the magnitude of classic integer differences (to which this
    // reduces exactly for equispaced sites) so the penalty stays O(1) and the
    // penalized normal equations remain well conditioned across the lambda
    // grid.
    let mean_gap = (sites[n - 1] - sites[0]) / F::of((n - 1) as f64);
    let mut scale = F::one();
    for k in 1..=order {
        scale *= mean_gap * F::of(k as f64);
    }
    d * scale
}

/// Penalized-spline fit.
#[derive(Debug, Clone)]
pub struct PsmoothFit<F: Real> {
    /// Raw-basis coefficients.
    pub coef: DVector<F>,
    /// Smoothing parameter chosen by generalized cross-validation.
    pub lambda: F,
    /// GCV score at the chosen parameter.
    pub gcv: F,
    /// Whether the ridge fallback was engaged (fewer distinct abscissae
    /// than basis functions, or an ill-conditioned system).
    pub ridged: bool,
}

/// P-spline smoothing of scattered `(x, y)` data: difference penalty of the
/// given order on the raw-basis coefficients, smoothing parameter chosen by
/// GCV over a log-spaced grid.
pub fn psmooth<F: Real>(
    x: &[F],
    y: &[F],
    basis: &OrthonormalBasis<F>,
    penalty_order: usize,
) -> Result<PsmoothFit<F>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "psmooth x has {} points, y has {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 4 {
        return Err(Error::InsufficientData {
            got: x.len(),
            need: 4,
        });
    }
    let c = basis.dim();
    // Sort pairs so the normal equations are independent of input order.
    let mut order_idx: Vec<usize> = (0..x.len()).collect();
    order_idx.sort_by(|&a, &b| {
        (x[a], y[a])
            .partial_cmp(&(x[b], y[b]))
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let mut xtx = DMatrix::<F>::zeros(c, c);
    let mut xty = DVector::<F>::zeros(c);
    let mut yty = F::zero();
    let mut distinct = 0usize;
    let mut prev: Option<F> = None;
    for &i in &order_idx {
        let b = basis.eval_raw(x[i])?;
        // Rank-one updates; rows have at most `order` nonzeros but c is
        // small enough that dense accumulation is fine.
        for r in 0..c {
            if b[r] == F::zero() {
                continue;
            }
            xty[r] += b[r] * y[i];
            for s in 0..c {
                xtx[(r, s)] += b[r] * b[s];
            }
        }
        yty += y[i] * y[i];
        if prev != Some(x[i]) {
            distinct += 1;
            prev = Some(x[i]);
        }
    }

    let d = divided_difference_matrix(basis.greville_sites(), penalty_order);
    let penalty = d.transpose() * &d;

    let mut ridged = distinct < c;
    let ridge = F::of(1e-10) * (F::one() + xtx.trace() / F::of(c as f64));
    let n = x.len() as f64;

    let mut best: Option<(F, F, DVector<F>)> = None;
    for k in 0..43 {
        let lambda = F::of(10f64.powf(-8.0 + (k as f64) / 3.0));
        let mut a = &xtx + &penalty * lambda;
        if ridged {
            for i in 0..c {
                a[(i, i)] += ridge;
            }
        }
        let chol = match a.clone().cholesky() {
            Some(chol) => chol,
            None => {
                // Engage the ridge for every candidate from here on.
                if !ridged {
                    ridged = true;
                    for i in 0..c {
                        a[(i, i)] += ridge;
                    }
                }
                match a.clone().cholesky() {
                    Some(chol) => chol,
                    None => continue,
                }
            }
        };
        let coef_m = chol.solve(&DMatrix::from_column_slice(c, 1, xty.as_slice()));
        let coef = DVector::from_column_slice(coef_m.as_slice());
        // tr(H) = tr((X'X + lambda P)^{-1} X'X)
        let solved = chol.solve(&xtx);
        let tr_h = solved.trace().to64();
        let rss = (yty - F::of(2.0) * xty.dot(&coef) + coef.dot(&(&xtx * &coef)))
            .max(F::zero())
            .to64();
        let denom = n - tr_h;
        if denom <= 1e-8 {
            continue;
        }
        let gcv = F::of(n * rss / (denom * denom));
        if best.as_ref().map_or(true, |(g, _, _)| gcv < *g) {
            best = Some((gcv, lambda, coef));
        }
    }
    let (gcv, lambda, coef) = best.ok_or(Error::SingularDesign)?;
    Ok(PsmoothFit {
        coef,
        lambda,
        gcv,
        ridged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis9() -> OrthonormalBasis<f64> {
        build_basis(BasisConfig::cubic(9, 1.0)).unwrap()
    }

    #[test]
    fn dimensions_and_interior_knots() {
        let b = basis9();
        assert_eq!(b.dim(), 9);
        // c = interior knots + order.
        assert_eq!(b.config.interior_knots(), 5);
        assert_eq!(b.eval_raw(0.3).unwrap().len(), 9);
    }

    #[test]
    fn partition_of_unity() {
        let b = basis9();
        for k in 0..=100 {
            let t = k as f64 / 100.0;
            let s: f64 = b.eval_raw(t).unwrap().iter().sum();
            assert!((s - 1.0).abs() < 1e-12, "sum {} at t={}", s, t);
        }
    }

    #[test]
    fn gram_orthonormality_quadrature_oracle() {
        // Oracle: integrate b~ b~' with quadrature at ten times the node
        // density used to build the Gram matrix.
        let b = basis9();
        let (xs, ws) = b.quadrature(40);
        let c = b.dim();
        let mut acc = DMatrix::<f64>::zeros(c, c);
        for (&x, &w) in xs.iter().zip(&ws) {
            let v = b.eval_orthonormal(x).unwrap();
            acc += &v * v.transpose() * w;
        }
        let err = (&acc - DMatrix::<f64>::identity(c, c)).abs().max();
        assert!(err < 1e-8, "orthonormality error {}", err);
    }

    #[test]
    fn default_c_examples() {
        assert_eq!(default_c(3790), 9);
        assert_eq!(default_c(1), 5);
        assert_eq!(default_c(100_000), 14);
    }

    #[test]
    fn eval_matrix_matches_pointwise_and_orthonormal_flag() {
        let b = basis9();
        let times: Vec<f64> = (0..11).map(|k| k as f64 / 10.0).collect();
        let raw = b.eval_matrix(&times, false).unwrap();
        assert_eq!(raw.nrows(), 11);
        assert_eq!(raw.ncols(), 9);
        for (k, &t) in times.iter().enumerate() {
            let row = b.eval_raw(t).unwrap();
            for j in 0..9 {
                assert!((raw[(k, j)] - row[j]).abs() < 1e-14);
            }
            assert!((raw.row(k).sum() - 1.0).abs() < 1e-12);
        }
        let on = b.eval_matrix(&times, true).unwrap();
        let manual = &raw * &b.transform;
        assert!((on - manual).abs().max() < 1e-13);
    }

    #[test]
    fn eval_rows_for_duplicate_times_identical() {
        let b = basis9();
        let m = b.eval_matrix(&[0.37, 0.37], false).unwrap();
        assert_eq!(m.row(0), m.row(1));
    }

    #[test]
    fn eval_outside_domain_errors() {
        let b = basis9();
        assert!(matches!(
            b.eval_raw(-0.1),
            Err(Error::TimeOutOfDomain { .. })
        ));
        assert!(matches!(
            b.eval_raw(1.1),
            Err(Error::TimeOutOfDomain { .. })
        ));
    }

    #[test]
    fn orthonormal_rows_quadrature_identity() {
        // E' (quadrature-weighted) E = I on a dense per-span grid.
        let b = basis9();
        let (xs, ws) = b.quadrature(20);
        let e = b.eval_matrix(&xs, true).unwrap();
        let mut acc = DMatrix::<f64>::zeros(9, 9);
        for (k, &w) in ws.iter().enumerate() {
            let row = e.row(k);
            acc += row.transpose() * row * w;
        }
        assert!((acc - DMatrix::<f64>::identity(9, 9)).abs().max() < 1e-8);
    }

    #[test]
    fn psmooth_reproduces_linear_for_any_lambda() {
        let b = basis9();
        let x: Vec<f64> = (0..50).map(|k| k as f64 / 49.0).collect();
        let y: Vec<f64> = x.iter().map(|&t| 2.0 - 3.0 * t).collect();
        // Check across the whole grid by forcing single-candidate fits.
        let d = divided_difference_matrix(b.greville_sites(), 2);
        let penalty = d.transpose() * &d;
        let design = b.eval_matrix(&x, false).unwrap();
        let xtx = design.transpose() * &design;
        let xty = design.transpose() * DVector::from_column_slice(&y);
        for exp in [-6.0, 0.0, 6.0] {
            let lambda = 10f64.powf(exp);
            let a = &xtx + &penalty * lambda;
            let coef = a.cholesky().unwrap().solve(&xty);
            let fitted = &design * &coef;
            for (f, t) in fitted.iter().zip(&y) {
                assert!((f - t).abs() < 1e-6, "lambda {lambda}");
            }
        }
        // And the GCV-chosen fit itself.
        let fit = psmooth(&x, &y, &b, 2).unwrap();
        let fitted = b.eval_matrix(&x, false).unwrap() * &fit.coef;
        for (f, t) in fitted.iter().zip(&y) {
            assert!((f - t).abs() < 1e-6);
        }
    }

    #[test]
    fn psmooth_constant() {
        let b = basis9();
        let x: Vec<f64> = (0..30).map(|k| k as f64 / 29.0).collect();
        let y = vec![4.25; 30];
        let fit = psmooth(&x, &y, &b, 2).unwrap();
        let fitted = b.eval_matrix(&x, false).unwrap() * &fit.coef;
        for f in fitted.iter() {
            assert!((f - 4.25).abs() < 1e-8);
        }
    }

    #[test]
    fn psmooth_denoises_sine() {
        use rand::Rng;
        let b = basis9();
        let mut rng = crate::rng::stream(42, crate::rng::Domain::Simulate, 0, 0);
        let n = 500;
        let x: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
        let truth: Vec<f64> = x
            .iter()
            .map(|&t| (2.0 * std::f64::consts::PI * t).sin())
            .collect();
        let y: Vec<f64> = truth
            .iter()
            .map(|&v| {
                let z: f64 =
                    rand_distr::Distribution::sample(&rand_distr::StandardNormal, &mut rng);
                v + 0.5 * z
            })
            .collect();
        let _unused: f64 = rng.random();
        let fit = psmooth(&x, &y, &b, 2).unwrap();
        let fitted = b.eval_matrix(&x, false).unwrap() * &fit.coef;
        let rmse_fit: f64 = (fitted
            .iter()
            .zip(&truth)
            .map(|(f, t)| (f - t) * (f - t))
            .sum::<f64>()
            / n as f64)
            .sqrt();
        let rmse_raw: f64 = (y
            .iter()
            .zip(&truth)
            .map(|(f, t)| (f - t) * (f - t))
            .sum::<f64>()
            / n as f64)
            .sqrt();
        assert!(rmse_fit < rmse_raw, "fit {} raw {}", rmse_fit, rmse_raw);
    }

    #[test]
    fn psmooth_invariant_to_permutation() {
        let b = basis9();
        let x: Vec<f64> = (0..40).map(|k| (k as f64 * 0.7).sin().abs()).collect();
        let y: Vec<f64> = x.iter().map(|&t| t * t + 0.3).collect();
        let fit1 = psmooth(&x, &y, &b, 2).unwrap();
        let mut xr = x.clone();
        let mut yr = y.clone();
        xr.reverse();
        yr.reverse();
        let fit2 = psmooth(&xr, &yr, &b, 2).unwrap();
        assert_eq!(fit1.lambda, fit2.lambda);
        for (a, bb) in fit1.coef.iter().zip(fit2.coef.iter()) {
            assert_eq!(a, bb);
        }
    }

    #[test]
    fn psmooth_insufficient_data() {
        let b = basis9();
        let x = [0.1, 0.5, 0.9];
        let y = [1.0, 2.0, 3.0];
        assert!(matches!(
            psmooth(&x, &y, &b, 2),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn projection_recovers_spline_representable_function() {
        let b = basis9();
        // Quadratics are exactly representable by cubics.
        let coef = b.project(|t| 1.0 + 2.0 * t - 0.5 * t * t, 16);
        for k in 0..=20 {
            let t = k as f64 / 20.0;
            let val = b.eval_raw(t).unwrap().dot(&coef);
            let want = 1.0 + 2.0 * t - 0.5 * t * t;
            assert!((val - want).abs() < 1e-10);
        }
    }

    #[test]
    fn f32_instantiation_smoke() {
        let b = build_basis(BasisConfig::cubic(7, 1.0f32)).unwrap();
        let s: f32 = b.eval_raw(0.5).unwrap().iter().sum();
        assert!((s - 1.0).abs() < 1e-5);
    }
}
