//! Dense row-major matrices and a cyclic Jacobi eigensolver for symmetric
//! matrices.
//!
//! Matrices are generic over a small [`Scalar`] trait so that incidence,
//! adjacency, degree and Laplacian matrices can be assembled and compared in
//! exact integer arithmetic, then converted to `f64` for eigensolving.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub trait Scalar:
    Copy
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const ZERO: Self;
    const ONE: Self;
}

impl Scalar for i64 {
    const ZERO: Self = 0;
    const ONE: Self = 1;
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![T::ONE; n])
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        let mut out = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            out.set(i, i, d);
        }
        out
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == T::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx] + a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot subtract {}x{} from {}x{}",
                rhs.rows, rhs.cols, self.rows, self.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    /// `A·Aᵀ`, upper triangle computed and mirrored.
    pub fn gram(&self) -> SymmetricMatrix<T> {
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let dot = dot(self.row(i), self.row(j));
                out.set(i, j, dot);
                out.set(j, i, dot);
            }
        }
        SymmetricMatrix(out)
    }

    /// `Aᵀ·A`.
    pub fn gram_dual(&self) -> SymmetricMatrix<T> {
        self.transpose().gram()
    }

    /// Drops row `i`, keeping the remaining rows in order.
    pub fn delete_row(&self, i: usize) -> Self {
        let data = (0..self.rows)
            .filter(|&r| r != i)
            .flat_map(|r| self.row(r).iter().copied())
            .collect();
        Self {
            rows: self.rows - 1,
            cols: self.cols,
            data,
        }
    }

    pub fn delete_col(&self, j: usize) -> Self {
        self.transpose().delete_row(j).transpose()
    }
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::ZERO, |acc, (&x, &y)| acc + x * y)
}

/// A square matrix whose entries satisfy `s_ij == s_ji` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix<T>(DenseMatrix<T>);

impl<T: Scalar> SymmetricMatrix<T> {
    pub fn new(matrix: DenseMatrix<T>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "symmetric matrix must be square, got {}x{}",
                matrix.rows, matrix.cols
            )));
        }
        for i in 0..matrix.rows {
            for j in i + 1..matrix.cols {
                if matrix.get(i, j) != matrix.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self(matrix))
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        Self(DenseMatrix::from_diagonal(diag))
    }

    pub fn identity(n: usize) -> Self {
        Self(DenseMatrix::identity(n))
    }

    pub fn order(&self) -> usize {
        self.0.rows
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.0.get(i, j)
    }

    pub fn as_dense(&self) -> &DenseMatrix<T> {
        &self.0
    }

    pub fn into_dense(self) -> DenseMatrix<T> {
        self.0
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> SymmetricMatrix<U> {
        SymmetricMatrix(self.0.map(f))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.0.sub(&rhs.0).map(Self)
    }

    /// `Pᵀ·S·P` for a diagonal `P = diag(p)`; stays exactly symmetric.
    pub fn diagonal_congruence(&self, p: &[T]) -> Result<Self> {
        if p.len() != self.order() {
            return Err(Error::LengthMismatch {
                expected: self.order(),
                got: p.len(),
            });
        }
        let n = self.order();
        let mut out = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, p[i] * self.get(i, j) * p[j]);
            }
        }
        Ok(Self(out))
    }

    /// Principal submatrix with row and column `i` removed.
    pub fn delete_index(&self, i: usize) -> Self {
        Self(self.0.delete_row(i).delete_col(i))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.order()).map(|i| self.get(i, i)).collect()
    }
}

impl SymmetricMatrix<i64> {
    pub fn to_f64(&self) -> SymmetricMatrix<f64> {
        self.map(|x| x as f64)
    }
}

impl SymmetricMatrix<f64> {
    pub fn frobenius_norm(&self) -> f64 {
        self.0.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order()).map(|i| self.get(i, i)).sum()
    }
}

impl DenseMatrix<i64> {
    pub fn to_f64(&self) -> DenseMatrix<f64> {
        self.map(|x| x as f64)
    }
}

/// Eigenvalues of a symmetric matrix, sorted descending:
/// `values[0] = λ₁ ≥ … ≥ values[n-1] = λ_n`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Sorts descending; equal values keep their input order.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ₁`.
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// `λ_n`.
    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// `λ_k` with the one-based index used in eigenvalue interlacing.
    pub fn lambda(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }
}

pub fn spectral_radius(sp: &Spectrum) -> Result<f64> {
    match (sp.largest(), sp.smallest()) {
        (Some(hi), Some(lo)) => Ok(hi.abs().max(lo.abs())),
        _ => Err(Error::EmptySpectrum),
    }
}

/// Largest Geršgorin row sum `max_i (|s_ii| + Σ_{j≠i} |s_ij|)`.
pub fn gersgorin_radius(s: &SymmetricMatrix<f64>) -> f64 {
    (0..s.order())
        .map(|i| s.as_dense().row(i).iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub fn quadratic_form(s: &SymmetricMatrix<f64>, x: &[f64]) -> Result<f64> {
    let n = s.order();
    if x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: x.len(),
        });
    }
    let mut total = 0.0;
    for i in 0..n {
        total += x[i] * dot(s.as_dense().row(i), x);
    }
    Ok(total)
}

pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const JACOBI_TOLERANCE: f64 = 1e-12;

/// Eigenvalues with their accumulated unit eigenvectors; `vectors[i]` pairs
/// with `spectrum.values()[i]`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub spectrum: Spectrum,
    pub vectors: Vec<Vec<f64>>,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic-by-row Jacobi rotations until the off-diagonal Frobenius norm drops
/// to `1e-12·max(1, ‖S‖_F)`.
pub fn sym_eigen(s: &SymmetricMatrix<f64>) -> Result<Eigen> {
    let n = s.order();
    if s.as_dense().data.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut a = s.as_dense().data.clone();
    let mut v = DenseMatrix::<f64>::identity(n).data;
    let threshold = JACOBI_TOLERANCE * s.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - sn * arq;
                    let new_rq = sn * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - sn * vrq;
                    v[r * n + q] = sn * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|r| v[r * n + i]).collect())
        .collect();
    Ok(Eigen {
        spectrum: Spectrum { values },
        vectors,
    })
}

pub fn sym_eigenvalues(s: &SymmetricMatrix<f64>) -> Result<Spectrum> {
    sym_eigen(s).map(|e| e.spectrum)
}

/// `‖S·v − λ·v‖₂`.
pub fn eigen_residual(s: &SymmetricMatrix<f64>, lambda: f64, v: &[f64]) -> f64 {
    (0..s.order())
        .map(|i| {
            let r = dot(s.as_dense().row(i), v) - lambda * v[i];
            r * r
        })
        .sum::<f64>()
        .sqrt()
}
