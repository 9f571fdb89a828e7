//! Dense complex linear algebra helpers shared across the crate.
//!
//! Everything here is a thin layer over `nalgebra` specialised to
//! `Complex<f64>`: operator norms, Hermitian eigendecompositions sorted
//! descending, rank-revealing orthonormalization of Gram matrices, and
//! Householder completions.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Relative eigenvalue threshold below which Gram directions are treated as
/// duplicates of the span.
pub const RANK_TOL: f64 = 1e-9;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Largest singular value; 0 for empty matrices.
pub fn op_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.singular_values().max()
}

/// Smallest singular value; 0 for empty matrices.
pub fn min_singular_value(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.singular_values().min()
}

/// Hermitian part `(m + m^H)/2`.
pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * cr(0.5)
}

/// Eigendecomposition of the Hermitian part, eigenvalues sorted descending.
pub struct HermEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

pub fn hermitian_eigen(m: &CMatrix) -> HermEigen {
    let n = m.nrows();
    if n == 0 {
        return HermEigen {
            values: Vec::new(),
            vectors: CMatrix::zeros(0, 0),
        };
    }
    let se = nalgebra::SymmetricEigen::new(hermitian_part(m));
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| se.eigenvalues[b].partial_cmp(&se.eigenvalues[a]).unwrap());
    let values: Vec<f64> = idx.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in idx.iter().enumerate() {
        vectors.set_column(dst, &se.eigenvectors.column(src));
    }
    HermEigen { values, vectors }
}

/// Smallest eigenvalue of the Hermitian part.
pub fn min_hermitian_eig(m: &CMatrix) -> f64 {
    hermitian_eigen(m).values.last().copied().unwrap_or(0.0)
}

/// Rank-revealing orthonormalization of a Hermitian PSD Gram matrix.
///
/// If `G = V^H V` for some spanning family `V`, the returned `weights` matrix
/// `W` (k x rank) makes the columns of `V W` orthonormal. Eigenvalues at or
/// below `rel_tol * lambda_max` are collapsed.
pub struct GramOrtho {
    pub weights: CMatrix,
    pub rank: usize,
    pub lambda_max: f64,
    /// Smallest eigenvalue kept above the rank threshold (0 when rank is 0).
    pub lambda_min_kept: f64,
    pub eigenvalues: Vec<f64>,
}

pub fn rank_revealing_ortho(gram: &CMatrix, rel_tol: f64) -> GramOrtho {
    let k = gram.nrows();
    let he = hermitian_eigen(gram);
    let lambda_max = he.values.first().copied().unwrap_or(0.0).max(0.0);
    let threshold = rel_tol * lambda_max;
    let rank = he
        .values
        .iter()
        .take_while(|&&v| v > threshold && v > 0.0)
        .count();
    let mut weights = CMatrix::zeros(k, rank);
    for j in 0..rank {
        let scale = cr(1.0 / he.values[j].sqrt());
        weights.set_column(j, &(he.vectors.column(j) * scale));
    }
    let lambda_min_kept = if rank > 0 { he.values[rank - 1] } else { 0.0 };
    GramOrtho {
        weights,
        rank,
        lambda_max,
        lambda_min_kept,
        eigenvalues: he.values,
    }
}

/// Moore-Penrose pseudo-inverse with a relative singular value cutoff.
pub fn pinv(m: &CMatrix, rel_tol: f64) -> CMatrix {
    if m.is_empty() {
        return CMatrix::zeros(m.ncols(), m.nrows());
    }
    let svd = m.clone().svd(true, true);
    let u = svd.u.as_ref().unwrap();
    let v_t = svd.v_t.as_ref().unwrap();
    let smax = svd.singular_values.max();
    let cut = rel_tol * smax;
    let r = svd.singular_values.len();
    let mut sp = CMatrix::zeros(r, r);
    for i in 0..r {
        let s = svd.singular_values[i];
        if s > cut && s > 0.0 {
            sp[(i, i)] = cr(1.0 / s);
        }
    }
    v_t.adjoint() * sp * u.adjoint()
}

/// Minimum-norm least squares solution of `a x = b`.
pub fn lstsq_min_norm(a: &CMatrix, b: &CVector, rel_tol: f64) -> CVector {
    pinv(a, rel_tol) * b
}

/// Unitary matrix whose first column is `v` (which must be nonzero).
///
/// Built from a single Householder reflection, so the result is exactly
/// unitary up to roundoff; when `v` is within machine precision of `e_1` the
/// identity is returned so that already-triangular inputs stay untouched.
pub fn unitary_with_first_column(v: &CVector) -> Result<CMatrix> {
    let n = v.len();
    let norm = v.norm();
    if norm == 0.0 {
        return Err(Error::Invalid("zero vector cannot start a basis".into()));
    }
    let x = v / cr(norm);
    let mut e1_dist = (x[0] - cr(1.0)).norm_sqr();
    for i in 1..n {
        e1_dist += x[i].norm_sqr();
    }
    if e1_dist.sqrt() < 1e-14 {
        return Ok(CMatrix::identity(n, n));
    }
    // Householder H with H x = beta e1, |beta| = 1.
    let phase = if x[0].norm() > 0.0 {
        x[0] / cr(x[0].norm())
    } else {
        cr(1.0)
    };
    let alpha = -phase;
    let mut u = x.clone();
    u[0] -= alpha;
    let un = u.norm();
    let u = u / cr(un);
    // U = H^H D with D = diag(beta, 1, ..., 1) maps e1 to x.
    let mut h = CMatrix::identity(n, n);
    h -= (&u * u.adjoint()) * cr(2.0);
    let mut d = CMatrix::identity(n, n);
    d[(0, 0)] = alpha;
    Ok(h.adjoint() * d)
}

/// Orthonormal basis of the column space via SVD; returns (basis, rank).
pub fn column_space_basis(m: &CMatrix, rel_tol: f64) -> (CMatrix, usize) {
    if m.ncols() == 0 || m.nrows() == 0 {
        return (CMatrix::zeros(m.nrows(), 0), 0);
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.as_ref().unwrap();
    let smax = svd.singular_values.max();
    let cut = rel_tol * smax;
    let rank = svd
        .singular_values
        .iter()
        .take_while(|&&s| s > cut && s > 0.0)
        .count();
    (u.columns(0, rank).into_owned(), rank)
}

/// Orthonormal basis of the numeric null space of `m`.
pub fn null_space_basis(m: &CMatrix, abs_tol: f64) -> CMatrix {
    let ncols = m.ncols();
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().unwrap();
    let smax = svd.singular_values.max();
    let cut = abs_tol.max(ncols as f64 * f64::EPSILON * smax);
    let mut keep: Vec<usize> = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= cut {
            keep.push(i);
        }
    }
    // The SVD is rank-revealing only up to the thin dimension; columns of V
    // beyond nrows are exact null directions.
    let thin = svd.singular_values.len();
    let v = v_t.adjoint();
    let mut cols: Vec<usize> = keep;
    for i in thin..ncols {
        cols.push(i);
    }
    if cols.is_empty() {
        // force the weakest direction so deflation can always proceed
        let mut min_i = 0;
        for (i, &s) in svd.singular_values.iter().enumerate() {
            if s < svd.singular_values[min_i] {
                min_i = i;
            }
        }
        cols.push(min_i);
    }
    let mut out = CMatrix::zeros(ncols, cols.len());
    for (dst, &src) in cols.iter().enumerate() {
        out.set_column(dst, &v.column(src));
    }
    out
}

/// Frobenius norm of the strictly lower-triangular part.
pub fn strict_lower_norm(m: &CMatrix) -> f64 {
    let mut acc = 0.0;
    for i in 0..m.nrows() {
        for j in 0..i.min(m.ncols()) {
            acc += m[(i, j)].norm_sqr();
        }
    }
    acc.sqrt()
}

/// Matrix powers `[I, a, a^2, ..., a^k]`.
pub fn powers_up_to(a: &CMatrix, k: usize) -> Vec<CMatrix> {
    let n = a.nrows();
    let mut out = Vec::with_capacity(k + 1);
    out.push(CMatrix::identity(n, n));
    for i in 1..=k {
        let next = &out[i - 1] * a;
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_completion_is_unitary() {
        let v = CVector::from_vec(vec![c(0.3, 0.4), c(-0.5, 0.1), c(0.2, -0.6)]);
        let v = &v / cr(v.norm());
        let u = unitary_with_first_column(&v).unwrap();
        let id = CMatrix::identity(3, 3);
        assert!((u.adjoint() * &u - &id).norm() < 1e-12);
        assert!((u.column(0) - v).norm() < 1e-12);
    }

    #[test]
    fn unitary_completion_identity_for_e1() {
        let v = CVector::from_vec(vec![cr(1.0), cr(0.0)]);
        let u = unitary_with_first_column(&v).unwrap();
        assert_eq!(u, CMatrix::identity(2, 2));
    }

    #[test]
    fn gram_ortho_normalizes() {
        // Gram of two unit vectors with overlap 0.5
        let g = CMatrix::from_row_slice(2, 2, &[cr(1.0), cr(0.5), cr(0.5), cr(1.0)]);
        let o = rank_revealing_ortho(&g, RANK_TOL);
        assert_eq!(o.rank, 2);
        let b = o.weights.adjoint() * &g * &o.weights;
        assert!((b - CMatrix::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn gram_ortho_collapses_duplicates() {
        let g = CMatrix::from_row_slice(2, 2, &[cr(1.0), cr(1.0), cr(1.0), cr(1.0)]);
        let o = rank_revealing_ortho(&g, RANK_TOL);
        assert_eq!(o.rank, 1);
        assert!((o.lambda_max - 2.0).abs() < 1e-12);
    }
}
