//! Small dense matrices and the few factorizations the rest of the crate
//! needs: one-sided Jacobi SVD for rank/kernel decisions and modified
//! Gram-Schmidt for basis canonicalization.
//!
//! Everything here is sized for Lie-theoretic work on low-dimensional
//! Minkowski spaces: matrices are at most a few dozen entries, so simple
//! O(n^3) kernels are both adequate and easy to audit.

use alloc::vec;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from row slices. Panics if the rows are ragged.
    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length mismatch");
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[f64]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            let mut s = 0.0;
            for j in 0..self.cols {
                s += self[(i, j)] * v[j];
            }
            out[i] = s;
        }
        out
    }

    pub fn scale(&self, s: f64) -> Mat {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= s;
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += *y;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= *y;
        }
        out
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            let mut s = 0.0;
            for j in 0..self.cols {
                s += self[(i, j)].abs();
            }
            worst = worst.max(s);
        }
        worst
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn max_abs_slice(a: &[f64]) -> f64 {
    a.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Result of a one-sided Jacobi SVD: singular values in descending order
/// and the right singular vectors as columns of `v` (so `a * v[:, i]` has
/// norm `sigma[i]`).
pub struct Svd {
    pub sigma: Vec<f64>,
    pub v: Mat,
}

/// One-sided Jacobi SVD. Orthogonalizes the columns of a working copy by
/// plane rotations applied from the right, accumulating them into `v`.
/// Convergence is quadratic; the matrices in this crate are tiny, so the
/// sweep cap is generous.
pub fn jacobi_svd(a: &Mat) -> Svd {
    let n = a.cols;
    let mut b = a.clone();
    let mut v = Mat::identity(n);
    let eps = 1e-15_f64;
    for _ in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let bp = b.column(p);
                let bq = b.column(q);
                let alpha = dot(&bp, &bp);
                let beta = dot(&bq, &bq);
                let gamma = dot(&bp, &bq);
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..b.rows {
                    let xp = b[(i, p)];
                    let xq = b[(i, q)];
                    b[(i, p)] = c * xp - s * xq;
                    b[(i, q)] = s * xp + c * xq;
                }
                for i in 0..n {
                    let xp = v[(i, p)];
                    let xq = v[(i, q)];
                    v[(i, p)] = c * xp - s * xq;
                    v[(i, q)] = s * xp + c * xq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n).map(|j| norm2(&b.column(j))).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    let mut sigma = Vec::with_capacity(n);
    let mut vs = Mat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        sigma.push(norms[src]);
        let col = v.column(src);
        vs.set_column(dst, &col);
    }
    Svd { sigma, v: vs }
}

/// Numerical rank: number of singular values at least `tol * sigma_max`.
pub fn rank(a: &Mat, tol: f64) -> usize {
    if a.rows == 0 || a.cols == 0 {
        return 0;
    }
    let svd = jacobi_svd(a);
    let smax = svd.sigma[0];
    if smax == 0.0 {
        return 0;
    }
    svd.sigma.iter().filter(|&&s| s >= tol * smax).count()
}

/// Orthonormal (Euclidean) basis of the null space of `a`, from right
/// singular vectors whose singular value falls below `tol * sigma_max`.
pub fn null_space(a: &Mat, tol: f64) -> Vec<Vec<f64>> {
    if a.cols == 0 {
        return Vec::new();
    }
    let svd = jacobi_svd(a);
    let smax = svd.sigma[0];
    let mut out = Vec::new();
    for (j, &s) in svd.sigma.iter().enumerate() {
        if smax == 0.0 || s < tol * smax {
            out.push(svd.v.column(j));
        }
    }
    out
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Returns an
/// orthonormal basis of the span; vectors whose remainder falls below
/// `tol * scale` (scale = largest input norm) are treated as dependent.
pub fn orthonormalize(vectors: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let scale = vectors.iter().map(|v| norm2(v)).fold(0.0f64, f64::max);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    if scale == 0.0 {
        return basis;
    }
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&w, b);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let n = norm2(&w);
        if n > tol * scale {
            for wi in &mut w {
                *wi /= n;
            }
            basis.push(w);
        }
    }
    basis
}

/// Distance from `v` to the span of an orthonormal basis (max-abs of the
/// orthogonal remainder).
pub fn residual_to_span(v: &[f64], basis: &[Vec<f64>]) -> f64 {
    let mut w = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let c = dot(&w, b);
            for (wi, bi) in w.iter_mut().zip(b) {
                *wi -= c * bi;
            }
        }
    }
    max_abs_slice(&w)
}

/// Least-squares coefficients expressing `target` in the given (not
/// necessarily orthonormal) column set, via normal equations on the
/// orthonormalized system. Returns the coefficients and the residual.
pub fn least_squares(columns: &[Vec<f64>], target: &[f64]) -> (Vec<f64>, f64) {
    let m = columns.len();
    let dim = target.len();
    let mut a = Mat::zeros(dim, m);
    for (j, c) in columns.iter().enumerate() {
        a.set_column(j, c);
    }
    // Normal equations with Gauss-Jordan; fine at these sizes because the
    // callers pass well-conditioned bases.
    let at = a.transpose();
    let ata = at.mul(&a);
    let atb = at.mul_vec(target);
    let coeffs = solve(&ata, &atb).unwrap_or_else(|| vec![0.0; m]);
    let fit = a.mul_vec(&coeffs);
    let res: Vec<f64> = fit.iter().zip(target).map(|(f, t)| f - t).collect();
    (coeffs, max_abs_slice(&res))
}

/// Solves `a x = b` by Gauss-Jordan with partial pivoting. Returns `None`
/// when a pivot collapses (singular system).
pub fn solve(a: &Mat, b: &[f64]) -> Option<Vec<f64>> {
    let n = a.rows;
    assert_eq!(a.cols, n);
    assert_eq!(b.len(), n);
    let mut m = a.clone();
    let mut x = b.to_vec();
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m[(r, col)].abs() > m[(piv, col)].abs() {
                piv = r;
            }
        }
        if m[(piv, col)].abs() < 1e-300 {
            return None;
        }
        if piv != col {
            for j in 0..n {
                let tmp = m[(col, j)];
                m[(col, j)] = m[(piv, j)];
                m[(piv, j)] = tmp;
            }
            x.swap(col, piv);
        }
        let d = m[(col, col)];
        for j in 0..n {
            m[(col, j)] /= d;
        }
        x[col] /= d;
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[(r, col)];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                m[(r, j)] -= f * m[(col, j)];
            }
            x[r] -= f * x[col];
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_svd_recovers_known_singular_values() {
        // diag(3, 2) embedded in a 3x2 matrix.
        let a = Mat::from_rows(&[&[3.0, 0.0], &[0.0, 2.0], &[0.0, 0.0]]);
        let svd = jacobi_svd(&a);
        assert!((svd.sigma[0] - 3.0).abs() < 1e-12);
        assert!((svd.sigma[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rank_and_null_space_detect_dependent_columns() {
        let a = Mat::from_rows(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0], &[0.5, 1.0, 1.5]]);
        assert_eq!(rank(&a, 1e-9), 1);
        let ns = null_space(&a, 1e-9);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let img = a.mul_vec(v);
            assert!(max_abs_slice(&img) < 1e-12);
        }
    }

    #[test]
    fn orthonormalize_drops_dependent_vectors() {
        let vs = vec![
            vec![1.0, 0.0, 0.0],
            vec![1.0, 1.0, 0.0],
            vec![2.0, 1.0, 0.0], // dependent on the first two
        ];
        let basis = orthonormalize(&vs, 1e-9);
        assert_eq!(basis.len(), 2);
        assert!(dot(&basis[0], &basis[1]).abs() < 1e-14);
    }

    #[test]
    fn solve_inverts_small_system() {
        let a = Mat::from_rows(&[&[2.0, 1.0], &[1.0, 3.0]]);
        let x = solve(&a, &[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn solve_reports_singular_matrix() {
        let a = Mat::from_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
        assert!(solve(&a, &[1.0, 2.0]).is_none());
    }
}
