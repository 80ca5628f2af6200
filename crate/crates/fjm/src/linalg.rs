//! Small dense linear-algebra helpers shared across the estimation modules.
//!
//! All matrices in this crate are small (basis dimension squared at most), so
//! we lean on nalgebra's dense factorizations and add the few conventions the
//! estimators need: descending symmetric eigenpairs, PSD-tolerant square
//! roots, and ridge-guarded solves.

use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};

/// Symmetric eigendecomposition with eigenvalues sorted descending.
///
/// Returns `(values, vectors)` with `vectors` column `k` paired to
/// `values[k]`. The input is symmetrized first so tiny asymmetries from
/// accumulation do not leak into the factorization.
pub fn sym_eigen_desc<F: Real>(m: &DMatrix<F>) -> (DVector<F>, DMatrix<F>) {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "sym_eigen_desc needs a square matrix");
    if n == 0 {
        return (DVector::zeros(0), DMatrix::zeros(0, 0));
    }
    let sym = (m + m.transpose()) * F::of(0.5);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = DVector::from_fn(n, |i, _| eig.eigenvalues[order[i]]);
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Symmetric matrix power via eigendecomposition, flooring eigenvalues.
///
/// Used for `G^{1/2}` and `G^{-1/2}`. Returns an error measure instead of a
/// matrix only through the floor: eigenvalues below `floor` are reported so
/// callers can reject degenerate inputs.
pub fn sym_power<F: Real>(m: &DMatrix<F>, exponent: f64, floor: F) -> (DMatrix<F>, F) {
    let (values, vectors) = sym_eigen_desc(m);
    let n = m.nrows();
    let mut min_eig = if n == 0 { F::one() } else { values[n - 1] };
    let mut d = DMatrix::zeros(n, n);
    for i in 0..n {
        let v = if values[i] < floor { floor } else { values[i] };
        if values[i] < min_eig {
            min_eig = values[i];
        }
        d[(i, i)] = v.powf(F::of(exponent));
    }
    (&vectors * d * vectors.transpose(), min_eig)
}

/// Lower-triangular factor `L` with `L L^T = m` for PSD `m`.
///
/// Plain Cholesky when the matrix is positive definite; otherwise an
/// eigenvalue square root with negatives clipped to zero, which is what
/// sampling from a semidefinite Gaussian needs.
pub fn psd_sqrt<F: Real>(m: &DMatrix<F>) -> DMatrix<F> {
    if let Some(chol) = m.clone().cholesky() {
        return chol.l();
    }
    let (values, vectors) = sym_eigen_desc(m);
    let n = m.nrows();
    let mut d = DMatrix::zeros(n, n);
    for i in 0..n {
        let v = if values[i] > F::zero() {
            values[i]
        } else {
            F::zero()
        };
        d[(i, i)] = v.sqrt();
    }
    &vectors * d
}

/// Solve `m x = b` for symmetric positive definite `m`, adding `ridge * I`
/// once if the plain factorization fails. Returns `None` when even the
/// ridged system is singular.
pub fn solve_spd<F: Real>(m: &DMatrix<F>, b: &DMatrix<F>, ridge: F) -> Option<DMatrix<F>> {
    if let Some(chol) = m.clone().cholesky() {
        return Some(chol.solve(b));
    }
    let mut ridged = m.clone();
    for i in 0..m.nrows() {
        ridged[(i, i)] += ridge;
    }
    ridged.cholesky().map(|c| c.solve(b))
}

/// Condition number estimate from the symmetric eigenvalues.
pub fn sym_condition<F: Real>(m: &DMatrix<F>) -> f64 {
    let (values, _) = sym_eigen_desc(m);
    let n = values.len();
    if n == 0 {
        return 1.0;
    }
    let max = values[0].to64().abs();
    let min = values[n - 1].to64();
    if min <= 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
///
/// Newton iteration on the Legendre polynomial; exact for polynomials of
/// degree `2n - 1`, which makes Gram matrices of piecewise polynomials exact.
pub fn gauss_legendre<F: Real>(n: usize) -> (Vec<F>, Vec<F>) {
    assert!(n >= 1);
    let mut nodes = vec![F::zero(); n];
    let mut weights = vec![F::zero(); n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Chebyshev-based initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P'_n(x).
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = F::of(-x);
        nodes[n - 1 - i] = F::of(x);
        weights[i] = F::of(w);
        weights[n - 1 - i] = F::of(w);
    }
    if n % 2 == 1 {
        nodes[n / 2] = F::zero();
    }
    (nodes, weights)
}

/// `log(sum(exp(x)))` with max-shift stabilization. `-inf` for empty input.
pub fn log_sum_exp<F: Real>(xs: &[F]) -> F {
    let mut max = F::of(f64::NEG_INFINITY);
    for &x in xs {
        if x > max {
            max = x;
        }
    }
    if !max.is_finite_scalar() {
        return max;
    }
    let mut sum = F::zero();
    for &x in xs {
        sum += (x - max).exp();
    }
    max + sum.ln()
}

/// Complementary error function (Cody's rational approximations).
///
/// Relative accuracy ~1e-15 including the far tails, which two-sided
/// p-values need: survival z-scores in these joint fits can exceed 15.
pub fn erfc(x: f64) -> f64 {
    const SQRPI: f64 = 5.641_895_835_477_562_9e-1; // 1/sqrt(pi)
    let ax = x.abs();
    let result = if ax <= 0.46875 {
        let z = ax * ax;
        let a = [
            3.161_123_743_870_565_6e0,
            1.138_641_541_510_501_6e2,
            3.774_852_376_853_020_2e2,
            3.209_377_589_138_469_5e3,
            1.857_777_061_846_031_5e-1,
        ];
        let b = [
            2.360_129_095_234_412_1e1,
            2.440_246_379_344_441_7e2,
            1.282_616_526_077_372_3e3,
            2.844_236_833_439_170_6e3,
        ];
        let num = ((((a[4] * z + a[0]) * z + a[1]) * z + a[2]) * z + a[3]) * x;
        let den = (((z + b[0]) * z + b[1]) * z + b[2]) * z + b[3];
        return 1.0 - num / den;
    } else if ax <= 4.0 {
        let c = [
            5.641_884_969_886_700_9e-1,
            8.883_149_794_388_376e0,
            6.611_919_063_714_163e1,
            2.986_351_381_974_001_3e2,
            8.819_522_212_417_691e2,
            1.712_047_612_634_070_6e3,
            2.051_078_377_826_071_5e3,
            1.230_339_354_797_997_2e3,
            2.153_115_354_744_038_5e-8,
        ];
        let d = [
            1.574_492_611_070_983_5e1,
            1.176_939_508_913_125e2,
            5.371_811_018_620_098_6e2,
            1.621_389_574_566_690_2e3,
            3.290_799_235_733_459_7e3,
            4.362_619_090_143_247e3,
            3.439_367_674_143_721_6e3,
            1.230_339_354_803_749_4e3,
        ];
        let num = ((((((((c[8] * ax + c[0]) * ax + c[1]) * ax + c[2]) * ax + c[3]) * ax + c[4])
            * ax
            + c[5])
            * ax
            + c[6])
            * ax
            + c[7])
            * (-ax * ax).exp();
        let den = (((((((ax + d[0]) * ax + d[1]) * ax + d[2]) * ax + d[3]) * ax + d[4]) * ax
            + d[5])
            * ax
            + d[6])
            * ax
            + d[7];
        num / den
    } else {
        let p = [
            3.053_266_349_612_323_4e-1,
            3.603_448_999_498_044_4e-1,
            1.257_817_261_112_292_5e-1,
            1.608_378_514_874_227_7e-2,
            6.587_491_615_298_378e-4,
            1.631_538_713_730_209_8e-2,
        ];
        let q = [
            2.568_520_192_289_822_4e0,
            1.872_952_849_923_460_5e0,
            5.279_051_029_514_284e-1,
            6.051_834_131_244_131_9e-2,
            2.335_204_976_268_691_8e-3,
        ];
        let z = 1.0 / (ax * ax);
        let num = ((((p[5] * z + p[0]) * z + p[1]) * z + p[2]) * z + p[3]) * z + p[4];
        let den = ((((z + q[0]) * z + q[1]) * z + q[2]) * z + q[3]) * z + q[4];
        let r = z * num / den;
        ((-ax * ax).exp() / ax) * (SQRPI - r)
    };
    if x < 0.0 {
        2.0 - result
    } else {
        result
    }
}

/// Two-sided p-value for a standard-normal z statistic.
pub fn normal_two_sided_p(z: f64) -> f64 {
    erfc(z.abs() / std::f64::consts::SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_sorted_descending() {
        let m = DMatrix::<f64>::from_row_slice(2, 2, &[1.0, 0.2, 0.2, 3.0]);
        let (vals, vecs) = sym_eigen_desc(&m);
        assert!(vals[0] >= vals[1]);
        let recon = &vecs * DMatrix::from_diagonal(&vals) * vecs.transpose();
        assert!((recon - m).norm() < 1e-12);
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        // n nodes integrate degree 2n-1 exactly: check x^6 with n=4 on [-1,1].
        let (x, w) = gauss_legendre::<f64>(4);
        let got: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.powi(6)).sum();
        assert!((got - 2.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn log_sum_exp_stable() {
        let xs = [-1000.0f64, -1000.0];
        let got = log_sum_exp(&xs);
        assert!((got - (-1000.0 + (2.0f64).ln())).abs() < 1e-12);
    }

    #[test]
    fn erfc_reference_values() {
        // Reference values from standard tables / mpmath.
        let cases = [
            (0.0, 1.0),
            (0.5, 0.4795001221869535),
            (1.0, 0.15729920705028513),
            (2.0, 0.004677734981047265),
            (5.0, 1.5374597944280351e-12),
            (10.0, 2.088487583762545e-45),
            (-1.0, 2.0 - 0.15729920705028513),
        ];
        for (x, want) in cases {
            let got = erfc(x);
            let rel = ((got - want) / want).abs();
            assert!(rel < 1e-12, "erfc({x}) = {got}, want {want}");
        }
    }
}
