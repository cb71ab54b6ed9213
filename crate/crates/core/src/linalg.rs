//! Shared dense linear-algebra helpers: rank decisions, pseudoinverses and
//! null-space bases, all under one documented tolerance policy.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Scale factor of the rank tolerance: `2^-45`, roughly `128` times the f64
/// machine epsilon. The effective threshold for a matrix `M` is
/// `sigma_max(M) * max(nrows, ncols) * RANK_TOLERANCE_SCALE`; singular values
/// at or below it are treated as zero.
pub const RANK_TOLERANCE_SCALE: f64 = 2.842170943040401e-14; // 2^-45

/// Rank tolerance for a matrix with the given largest singular value.
pub fn rank_tolerance(nrows: usize, ncols: usize, sigma_max: f64) -> f64 {
    sigma_max * nrows.max(ncols) as f64 * RANK_TOLERANCE_SCALE
}

/// Singular values of `m`, descending.
pub fn singular_values(m: &DMatrix<f64>) -> DVector<f64> {
    m.clone().svd(false, false).singular_values
}

/// Numerical rank of `m` under the shared tolerance policy.
pub fn rank(m: &DMatrix<f64>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = singular_values(m);
    let tol = rank_tolerance(m.nrows(), m.ncols(), sv[0]);
    sv.iter().filter(|&&s| s > tol).count()
}

/// Moore–Penrose pseudoinverse via SVD, zeroing singular values below the
/// shared tolerance.
pub fn pseudo_inverse(m: &DMatrix<f64>) -> DMatrix<f64> {
    if m.is_empty() {
        return DMatrix::zeros(m.ncols(), m.nrows());
    }
    let svd = m.clone().svd(true, true);
    let tol = rank_tolerance(m.nrows(), m.ncols(), svd.singular_values[0]);
    let u = svd.u.as_ref().expect("svd requested u");
    let v_t = svd.v_t.as_ref().expect("svd requested v_t");
    let mut s_inv = svd.singular_values.clone();
    for s in s_inv.iter_mut() {
        *s = if *s > tol { 1.0 / *s } else { 0.0 };
    }
    v_t.transpose() * DMatrix::from_diagonal(&s_inv) * u.transpose()
}

/// Least-norm solution of `m x = b` (pseudoinverse applied to `b`), together
/// with the residual `‖m x − b‖₂`.
pub fn least_norm_solve(m: &DMatrix<f64>, b: &DVector<f64>) -> (DVector<f64>, f64) {
    let x = pseudo_inverse(m) * b;
    let residual = (m * &x - b).norm();
    (x, residual)
}

/// Orthonormal basis of the null space of `m`, returned as columns.
///
/// Computed from the full eigendecomposition of `mᵀm`; eigenvectors whose
/// eigenvalue falls at or below the squared rank tolerance span the kernel.
pub fn nullspace_basis(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.ncols();
    if m.nrows() == 0 {
        return DMatrix::identity(n, n);
    }
    let gram = m.transpose() * m;
    let eig = gram.symmetric_eigen();
    let lambda_max = eig.eigenvalues.iter().cloned().fold(0.0_f64, f64::max);
    let tol = rank_tolerance(m.nrows(), n, lambda_max.max(0.0).sqrt());
    let tol_sq = tol * tol;
    let mut cols: Vec<usize> = (0..n).filter(|&i| eig.eigenvalues[i] <= tol_sq).collect();
    cols.sort_unstable();
    let mut basis = DMatrix::zeros(n, cols.len());
    for (k, &i) in cols.iter().enumerate() {
        basis.set_column(k, &eig.eigenvectors.column(i));
    }
    basis
}

/// Checks that `m` has full row rank; returns its rank on success.
pub fn require_full_row_rank(m: &DMatrix<f64>, context: &str) -> Result<usize> {
    let r = rank(m);
    if r < m.nrows() {
        return Err(Error::RankDeficient(format!(
            "{context}: rank {r} < {} rows",
            m.nrows()
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_rank_one_matrix() {
        let a = DMatrix::from_fn(4, 5, |i, j| (i as f64 + 1.0) * (j as f64 + 2.0));
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn rank_of_identity() {
        let a = DMatrix::<f64>::identity(6, 6);
        assert_eq!(rank(&a), 6);
    }

    #[test]
    fn pseudo_inverse_recovers_inverse() {
        let a = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 0.5, 3.0]);
        let pinv = pseudo_inverse(&a);
        let id = &a * &pinv;
        assert!((id - DMatrix::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn least_norm_picks_minimum_norm_solution() {
        // x1 + x2 = 2 has least-norm solution (1, 1).
        let a = DMatrix::from_row_slice(1, 2, &[1.0, 1.0]);
        let b = DVector::from_row_slice(&[2.0]);
        let (x, res) = least_norm_solve(&a, &b);
        assert!(res < 1e-13);
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nullspace_is_orthonormal_and_annihilated() {
        let a = DMatrix::from_row_slice(2, 4, &[1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0]);
        let basis = nullspace_basis(&a);
        assert_eq!(basis.ncols(), 2);
        assert!((&a * &basis).norm() < 1e-12);
        let gram = basis.transpose() * &basis;
        assert!((gram - DMatrix::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn full_row_rank_guard() {
        let ok = DMatrix::from_row_slice(2, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert!(require_full_row_rank(&ok, "ok").is_ok());
        let bad = DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0]);
        assert!(require_full_row_rank(&bad, "bad").is_err());
    }
}
