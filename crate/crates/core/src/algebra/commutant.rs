//! Spaces of matrices commuting with, or intertwining, given matrices.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::linalg::nullspace;
use super::matrix::Matrix;
use super::ring::Ring;

pub type RatMatrix = Matrix<BigRational>;

/// Basis of the space of `m x m` matrices commuting with a set of matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantBasis {
    pub dim: usize,
    pub basis: Vec<RatMatrix>,
}

impl CommutantBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Rows of the linear system `M X - Y M = 0` in the entries of `M` (row-major).
fn intertwining_rows(x: &RatMatrix, y: &RatMatrix, m: usize) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let mut row = vec![BigRational::zero(); m * m];
            for p in 0..m {
                row[i * m + p] += x.get(p, j);
                row[p * m + j] -= y.get(i, p);
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

fn check_square(x: &RatMatrix, m: usize) -> Result<()> {
    if x.rows() != m || x.cols() != m {
        return Err(Error::DimensionMismatch(format!(
            "expected {m}x{m}, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    Ok(())
}

fn to_matrices(vectors: Vec<Vec<BigRational>>, m: usize) -> Vec<RatMatrix> {
    vectors
        .into_iter()
        .map(|v| Matrix::new(m, m, v).expect("m*m entries"))
        .collect()
}

/// Solves `M X = X M` for every `X` in `mats`.
pub fn commutant_basis(mats: &[RatMatrix], m: usize) -> Result<CommutantBasis> {
    let pairs: Vec<(RatMatrix, RatMatrix)> = mats.iter().map(|x| (x.clone(), x.clone())).collect();
    let basis = intertwiner_basis(&pairs, m)?;
    Ok(CommutantBasis { dim: m, basis })
}

/// Solves `M X = Y M` for every pair `(X, Y)`.
pub fn intertwiner_basis(pairs: &[(RatMatrix, RatMatrix)], m: usize) -> Result<Vec<RatMatrix>> {
    if m == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let mut rows = Vec::new();
    for (x, y) in pairs {
        check_square(x, m)?;
        check_square(y, m)?;
        rows.extend(intertwining_rows(x, y, m));
    }
    Ok(to_matrices(nullspace(rows, m * m), m))
}

/// Whether `M` is scalar on the window of rows/columns `2k-1 ..= 2l`
/// (one-based) and has no entries coupling that window to the rest.
pub fn check_scalar_block<T: Ring>(mat: &Matrix<T>, k: usize, l: usize) -> Result<bool> {
    let m = mat.rows();
    if !mat.is_square() {
        return Err(Error::DimensionMismatch(
            "shape check needs a square matrix".into(),
        ));
    }
    if k == 0 || k > l || 2 * l > m {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= l <= m/2, got k = {k}, l = {l}, m = {m}"
        )));
    }
    let window = (2 * k - 2)..(2 * l);
    let lambda = mat.get(window.start, window.start).clone();
    for i in 0..m {
        for j in 0..m {
            let inside_i = window.contains(&i);
            let inside_j = window.contains(&j);
            let x = mat.get(i, j);
            let ok = match (inside_i, inside_j) {
                (true, true) if i == j => *x == lambda,
                (true, _) | (_, true) => x.is_zero(),
                (false, false) => true,
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::standard;

    fn q(m: &Matrix<num_bigint::BigInt>) -> RatMatrix {
        Matrix::lift(m)
    }

    #[test]
    fn empty_commutant_is_everything() {
        assert_eq!(commutant_basis(&[], 2).unwrap().dimension(), 4);
    }

    #[test]
    fn full_generating_set_is_scalar() {
        let gens = vec![
            q(&standard::a(1, 4).unwrap()),
            q(&standard::b(1, 4).unwrap()),
            q(&standard::a(2, 4).unwrap()),
            q(&standard::b(2, 4).unwrap()),
            q(&standard::c(1, 4).unwrap()),
        ];
        let cb = commutant_basis(&gens, 4).unwrap();
        assert_eq!(cb.dimension(), 1);
        assert!(cb.basis[0].is_identity());
    }

    #[test]
    fn middle_block_is_scalar() {
        let gens = vec![
            q(&standard::a(2, 6).unwrap()),
            q(&standard::b(2, 6).unwrap()),
        ];
        let cb = commutant_basis(&gens, 6).unwrap();
        for b in &cb.basis {
            assert!(check_scalar_block(b, 2, 2).unwrap());
            for x in &gens {
                assert!(b.commutator(x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn shape_check_examples() {
        let d: RatMatrix =
            Matrix::from_i64_rows(&[&[5, 0, 0, 0], &[0, 5, 0, 0], &[0, 0, 7, 0], &[0, 0, 0, 9]])
                .unwrap();
        assert!(check_scalar_block(&d, 1, 1).unwrap());
        let mut e: RatMatrix = Matrix::identity(4);
        e.set(0, 2, BigRational::from_i64(1));
        assert!(!check_scalar_block(&e, 1, 1).unwrap());
        assert!(check_scalar_block(&e, 2, 1).is_err());
    }
}
