//! Minimal dense linear algebra: row-major matrices, Cholesky factorization
//! and a cyclic-Jacobi symmetric eigensolver.
//!
//! The problem sizes here are small (Gram matrices of a few hundred rows,
//! 7-column regression designs), so a self-contained implementation keeps
//! the factorization path simple and lets tests check it against an
//! independent dense-inverse oracle.

use crate::error::NumericError;

/// Dense row-major matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// `self * other`.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let orow = other.row(k);
                let out_row = out.row_mut(i);
                for (o, &b) in out_row.iter_mut().zip(orow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `self * v` for a vector `v`.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matvec");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Lower-triangular Cholesky factor `L` with `L Lᵀ = A`.
#[derive(Debug, Clone)]
pub struct Cholesky {
    l: Matrix,
}

impl Cholesky {
    /// Factorizes a symmetric positive-definite matrix. Only the lower
    /// triangle of `a` is read.
    pub fn factorize(a: &Matrix) -> Result<Self, NumericError> {
        assert_eq!(a.nrows(), a.ncols(), "cholesky needs a square matrix");
        let n = a.nrows();
        let mut l = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let mut sum = a[(i, j)];
                for k in 0..j {
                    sum -= l[(i, k)] * l[(j, k)];
                }
                if i == j {
                    if !(sum > 0.0) || !sum.is_finite() {
                        return Err(NumericError::NotPositiveDefinite { pivot: i, size: n });
                    }
                    l[(i, j)] = sum.sqrt();
                } else {
                    l[(i, j)] = sum / l[(j, j)];
                }
            }
        }
        Ok(Cholesky { l })
    }

    pub fn factor(&self) -> &Matrix {
        &self.l
    }

    pub fn size(&self) -> usize {
        self.l.nrows()
    }

    /// Solves `A x = b`.
    pub fn solve_vec(&self, b: &[f64]) -> Vec<f64> {
        let n = self.size();
        assert_eq!(b.len(), n);
        // forward substitution: L y = b
        let mut y = b.to_vec();
        for i in 0..n {
            let li = self.l.row(i);
            let mut sum = y[i];
            for k in 0..i {
                sum -= li[k] * y[k];
            }
            y[i] = sum / li[i];
        }
        // back substitution: Lᵀ x = y
        for i in (0..n).rev() {
            let mut sum = y[i];
            for k in i + 1..n {
                sum -= self.l[(k, i)] * y[k];
            }
            y[i] = sum / self.l[(i, i)];
        }
        y
    }

    /// Solves `A X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Matrix {
        assert_eq!(b.nrows(), self.size());
        let mut out = Matrix::zeros(b.nrows(), b.ncols());
        for j in 0..b.ncols() {
            let col = self.solve_vec(&b.column(j));
            for (i, v) in col.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
        out
    }

    /// `A⁻¹` via solves against the identity.
    pub fn inverse(&self) -> Matrix {
        self.solve_matrix(&Matrix::identity(self.size()))
    }

    /// `log det A = 2 Σ log L_ii`.
    pub fn log_det(&self) -> f64 {
        (0..self.size()).map(|i| self.l[(i, i)].ln()).sum::<f64>() * 2.0
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns `(eigenvalues, V)` with `A = V diag(λ) Vᵀ`; eigenvalues are in no
/// particular order.
pub fn sym_eigen(a: &Matrix) -> (Vec<f64>, Matrix) {
    assert_eq!(a.nrows(), a.ncols());
    let n = a.nrows();
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let off = |m: &Matrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)] * m[(i, j)];
                }
            }
        }
        s
    };
    let scale: f64 = (0..n).map(|i| m[(i, i)].abs()).fold(1e-300, f64::max);
    let tol = (scale * scale) * 1e-30 * (n as f64);
    for _sweep in 0..64 {
        if off(&m) <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() <= scale * 1e-18 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eig = (0..n).map(|i| m[(i, i)]).collect();
    (eig, v)
}

/// Minimum-norm least-squares solution of `X β = y` via the pseudo-inverse
/// of the normal equations. Returns `(β, rank)`.
pub fn lstsq_min_norm(x: &Matrix, y: &[f64]) -> (Vec<f64>, usize) {
    assert_eq!(x.nrows(), y.len());
    let n = x.nrows();
    let p = x.ncols();
    if p <= n {
        // primal: β = (XᵀX)⁺ Xᵀ y
        let xt = x.transpose();
        let g = xt.matmul(x);
        let b = xt.matvec(y);
        let (beta, rank) = pinv_solve(&g, &b);
        (beta, rank)
    } else {
        // dual for wide designs: β = Xᵀ (X Xᵀ)⁺ y
        let g = x.matmul(&x.transpose());
        let (w, rank) = pinv_solve(&g, y);
        (x.transpose().matvec(&w), rank)
    }
}

/// Solves `G z = b` for symmetric PSD `G` via eigen pseudo-inverse.
fn pinv_solve(g: &Matrix, b: &[f64]) -> (Vec<f64>, usize) {
    let (eig, v) = sym_eigen(g);
    let lmax = eig.iter().cloned().fold(0.0, f64::max);
    let cutoff = lmax * (g.nrows() as f64) * f64::EPSILON * 16.0;
    let vt_b = v.transpose().matvec(b);
    let mut rank = 0;
    let scaled: Vec<f64> = eig
        .iter()
        .zip(&vt_b)
        .map(|(&l, &c)| {
            if l > cutoff {
                rank += 1;
                c / l
            } else {
                0.0
            }
        })
        .collect();
    (v.matvec(&scaled), rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    /// Independent dense inverse (Gauss-Jordan with partial pivoting), used
    /// as an oracle against the Cholesky path.
    pub fn gauss_jordan_inverse(a: &Matrix) -> Matrix {
        let n = a.nrows();
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = a[(i, j)];
            }
            aug[(i, n + i)] = 1.0;
        }
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    aug[(i, col)]
                        .abs()
                        .partial_cmp(&aug[(j, col)].abs())
                        .unwrap()
                })
                .unwrap();
            if pivot != col {
                for j in 0..2 * n {
                    let tmp = aug[(col, j)];
                    aug[(col, j)] = aug[(pivot, j)];
                    aug[(pivot, j)] = tmp;
                }
            }
            let d = aug[(col, col)];
            for j in 0..2 * n {
                aug[(col, j)] /= d;
            }
            for i in 0..n {
                if i != col {
                    let f = aug[(i, col)];
                    for j in 0..2 * n {
                        aug[(i, j)] -= f * aug[(col, j)];
                    }
                }
            }
        }
        Matrix::from_fn(n, n, |i, j| aug[(i, n + j)])
    }

    fn random_spd(n: usize, rng: &mut impl Rng) -> Matrix {
        let b = Matrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        let mut a = b.matmul(&b.transpose());
        for i in 0..n {
            a[(i, i)] += n as f64;
        }
        a
    }

    #[test]
    fn cholesky_reconstructs_spd_matrix() {
        let mut rng = crate::seeding::labeled_rng(1, "linalg-test", 0);
        for trial in 0..20 {
            let n = 1 + trial % 8;
            let a = random_spd(n, &mut rng);
            let ch = Cholesky::factorize(&a).unwrap();
            let rebuilt = ch.factor().matmul(&ch.factor().transpose());
            assert!(rebuilt.max_abs_diff(&a) < 1e-12 * (n as f64));
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
        match Cholesky::factorize(&a) {
            Err(NumericError::NotPositiveDefinite { pivot: 1, size: 2 }) => {}
            other => panic!("expected pivot failure, got {other:?}"),
        }
    }

    #[test]
    fn solve_matches_gauss_jordan_oracle() {
        let mut rng = crate::seeding::labeled_rng(1, "linalg-test", 1);
        for _ in 0..10 {
            let n = rng.gen_range(1..10);
            let a = random_spd(n, &mut rng);
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let x = Cholesky::factorize(&a).unwrap().solve_vec(&b);
            let oracle = gauss_jordan_inverse(&a).matvec(&b);
            for (xi, oi) in x.iter().zip(&oracle) {
                assert!((xi - oi).abs() < 1e-10, "{xi} vs {oi}");
            }
        }
    }

    #[test]
    fn log_det_matches_lu_free_small_cases() {
        // det([[a,b],[b,c]]) = ac - b²
        let a = Matrix::from_rows(vec![vec![3.0, 1.0], vec![1.0, 2.0]]);
        let ch = Cholesky::factorize(&a).unwrap();
        assert!((ch.log_det() - (3.0f64 * 2.0 - 1.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn jacobi_eigen_reconstructs() {
        let mut rng = crate::seeding::labeled_rng(1, "linalg-test", 2);
        for _ in 0..10 {
            let n = rng.gen_range(1..9);
            let a = random_spd(n, &mut rng);
            let (eig, v) = sym_eigen(&a);
            let lambda = Matrix::from_fn(n, n, |i, j| if i == j { eig[i] } else { 0.0 });
            let rebuilt = v.matmul(&lambda).matmul(&v.transpose());
            assert!(rebuilt.max_abs_diff(&a) < 1e-9 * (n as f64));
        }
    }

    #[test]
    fn lstsq_recovers_exact_coefficients() {
        let mut rng = crate::seeding::labeled_rng(1, "linalg-test", 3);
        let n = 30;
        let p = 5;
        let x = Matrix::from_fn(n, p, |_, _| rng.gen_range(-1.0..1.0));
        let beta_true: Vec<f64> = (0..p).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let y = x.matvec(&beta_true);
        let (beta, rank) = lstsq_min_norm(&x, &y);
        assert_eq!(rank, p);
        for (b, t) in beta.iter().zip(&beta_true) {
            assert!((b - t).abs() < 1e-9);
        }
    }

    #[test]
    fn lstsq_handles_rank_deficiency() {
        // second column duplicates the first; minimum-norm splits the weight
        let x = Matrix::from_rows(vec![
            vec![1.0, 1.0],
            vec![2.0, 2.0],
            vec![3.0, 3.0],
        ]);
        let y = vec![2.0, 4.0, 6.0];
        let (beta, rank) = lstsq_min_norm(&x, &y);
        assert_eq!(rank, 1);
        assert!((beta[0] - 1.0).abs() < 1e-10 && (beta[1] - 1.0).abs() < 1e-10);
    }
}
