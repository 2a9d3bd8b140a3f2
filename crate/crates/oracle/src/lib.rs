//! Numerical cross-check of `e(θ)`.
//!
//! For `sl₂`, `sl₃` and `sp₄` in their defining representations, build
//! `ρ(γ) = exp(2πi Δ/d)` as a diagonal matrix, write the conjugation
//! `X ↦ ρ(γ) X ρ(γ)⁻¹` in a fixed basis of the Lie algebra and return the
//! numerical rank of `Id - Ad ρ(γ)`. Nothing here looks at roots or
//! pairings, so it can be compared against the exact counts in
//! `parahoric-core`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use parahoric_core::{LocalType, RootSystem, SimpleType};
use thiserror::Error;

/// Singular values at or below this are treated as zero.
pub const RANK_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("no matrix model for {0} (supported: A1, A2, C2)")]
    Unsupported(String),
    #[error("local type has {got} coordinates, the system has rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("conjugation left the Lie algebra (residual {0:e})")]
    NotClosed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixModel {
    Sl2,
    Sl3,
    Sp4,
}

impl MatrixModel {
    pub fn for_system(rs: &RootSystem) -> Result<Self, OracleError> {
        match rs.signature().as_slice() {
            [(SimpleType::A, 1)] => Ok(Self::Sl2),
            [(SimpleType::A, 2)] => Ok(Self::Sl3),
            [(SimpleType::C, 2)] => Ok(Self::Sp4),
            _ => Err(OracleError::Unsupported(rs.name())),
        }
    }

    fn size(self) -> usize {
        match self {
            Self::Sl2 => 2,
            Self::Sl3 => 3,
            Self::Sp4 => 4,
        }
    }

    /// Diagonal of `Δ = Σ c_i α_i∨` in the defining representation.
    fn cocharacter_diagonal(self, c: &[i64]) -> Vec<i64> {
        match self {
            Self::Sl2 => vec![c[0], -c[0]],
            Self::Sl3 => vec![c[0], c[1] - c[0], -c[1]],
            // α₁ = e₁ - e₂ short, α₂ = 2e₂ long; torus diag(t₁, t₂, t₁⁻¹, t₂⁻¹)
            Self::Sp4 => vec![c[0], c[1] - c[0], -c[0], c[0] - c[1]],
        }
    }

    fn basis(self) -> Vec<DMatrix<Complex64>> {
        let n = self.size();
        let unit = |i: usize, j: usize| {
            let mut m = DMatrix::<Complex64>::zeros(n, n);
            m[(i, j)] = Complex64::new(1.0, 0.0);
            m
        };
        match self {
            Self::Sl2 | Self::Sl3 => {
                let mut b = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            b.push(unit(i, j));
                        }
                    }
                }
                for i in 0..n - 1 {
                    b.push(unit(i, i) - unit(i + 1, i + 1));
                }
                b
            }
            Self::Sp4 => {
                // [[A, B], [C, -Aᵀ]] with B, C symmetric
                let mut b = Vec::new();
                for i in 0..2 {
                    for j in 0..2 {
                        b.push(unit(i, j) - unit(j + 2, i + 2));
                    }
                }
                for (i, j) in [(0, 0), (1, 1), (0, 1)] {
                    let s = if i == j {
                        unit(i, j + 2)
                    } else {
                        unit(i, j + 2) + unit(j, i + 2)
                    };
                    b.push(s);
                    let t = if i == j {
                        unit(i + 2, j)
                    } else {
                        unit(i + 2, j) + unit(j + 2, i)
                    };
                    b.push(t);
                }
                b
            }
        }
    }
}

fn flatten(m: &DMatrix<Complex64>) -> DVector<Complex64> {
    DVector::from_iterator(m.len(), m.iter().copied())
}

/// Numerical rank of `Id - Ad ρ(γ)` on the Lie algebra.
pub fn adjoint_rank(rs: &RootSystem, lt: &LocalType) -> Result<usize, OracleError> {
    let model = MatrixModel::for_system(rs)?;
    if lt.delta.len() != rs.rank() {
        return Err(OracleError::DimensionMismatch {
            expected: rs.rank(),
            got: lt.delta.len(),
        });
    }
    let n = model.size();
    let diagonal = model.cocharacter_diagonal(&lt.delta);
    let tau = std::f64::consts::TAU / lt.d as f64;
    let phase = |h: i64| Complex64::from_polar(1.0, tau * h as f64);
    let g = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            phase(diagonal[i])
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let g_inv = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            phase(-diagonal[i])
        } else {
            Complex64::new(0.0, 0.0)
        }
    });

    let basis = model.basis();
    let dim = basis.len();
    let columns: Vec<DVector<Complex64>> = basis.iter().map(flatten).collect();
    let frame = DMatrix::from_columns(&columns);
    let frame_svd = frame.clone().svd(true, true);

    let mut ad = DMatrix::<Complex64>::zeros(dim, dim);
    for (k, b) in basis.iter().enumerate() {
        let image = flatten(&(&g * b * &g_inv));
        let coords = frame_svd
            .solve(&image, 1e-12)
            .expect("U and V were computed");
        let residual = (&frame * &coords - &image).norm();
        if residual > 1e-8 {
            return Err(OracleError::NotClosed(residual));
        }
        ad.set_column(k, &coords);
    }
    let op = DMatrix::<Complex64>::identity(dim, dim) - ad;
    Ok(op
        .singular_values()
        .iter()
        .filter(|&&s| s > RANK_THRESHOLD)
        .count())
}
