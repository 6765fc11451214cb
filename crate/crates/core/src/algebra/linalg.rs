//! Row reduction and nullspaces over a field.

use super::matrix::Matrix;
use super::ring::Ring;

/// Reduced row echelon form over a field, dropping zero rows.
/// Returns the nonzero rows and their pivot columns.
pub fn rref<T: Ring>(rows: Vec<Vec<T>>, cols: usize) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut basis: Vec<Vec<T>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        if let Some((r, p)) = reduce_row(row, &basis, &pivots) {
            // Clear the new pivot from existing rows to keep reduced form.
            for b in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for c in 0..cols {
                        b[c] = b[c].clone() - f.clone() * r[c].clone();
                    }
                }
            }
            let at = pivots.partition_point(|&q| q < p);
            basis.insert(at, r);
            pivots.insert(at, p);
        }
    }
    (basis, pivots)
}

/// Reduces `row` against an RREF basis and normalizes the leftover pivot.
fn reduce_row<T: Ring>(
    mut row: Vec<T>,
    basis: &[Vec<T>],
    pivots: &[usize],
) -> Option<(Vec<T>, usize)> {
    for (b, &p) in basis.iter().zip(pivots) {
        if !row[p].is_zero() {
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
    }
    let p = row.iter().position(|x| !x.is_zero())?;
    let inv = row[p].unit_inverse()?;
    for x in row.iter_mut() {
        *x = x.clone() * inv.clone();
    }
    Some((row, p))
}

/// Basis of `{x : A x = 0}`, one vector per free column.
pub fn nullspace<T: Ring>(rows: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    let (basis, pivots) = rref(rows, cols);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (b, &p) in basis.iter().zip(&pivots) {
            v[p] = -b[free].clone();
        }
        out.push(v);
    }
    out
}

pub fn rank<T: Ring>(m: &Matrix<T>) -> usize {
    rref(m.to_rows(), m.cols()).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for r in &rows {
                let dot = r.iter().zip(&v).fold(q(0), |a, (x, y)| a + x * y);
                assert_eq!(dot, q(0));
            }
        }
    }

    #[test]
    fn rank_of_identity() {
        let m: Matrix<BigRational> = Matrix::identity(4);
        assert_eq!(rank(&m), 4);
    }
}
