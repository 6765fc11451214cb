use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::ring::Ring;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix must have positive size, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "matrix must have positive size");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
                .collect(),
        )
    }

    /// Converts an integer matrix into any ring.
    pub fn lift(m: &Matrix<num_bigint::BigInt>) -> Self {
        m.map(T::from_bigint)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = vec![T::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut data[i * rhs.cols + j];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        Matrix::new(self.rows, rhs.cols, data)
    }

    fn zip_with(&self, rhs: &Self, what: &str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "subtract", |a, b| a.clone() - b.clone())
    }

    /// Commutator-style difference `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)?.checked_sub(&rhs.checked_mul(self)?)
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Characteristic polynomial `det(xI - M)` by Berkowitz's division-free
    /// algorithm. Coefficients are returned constant term first.
    pub fn char_poly(&self) -> Result<Vec<T>> {
        self.require_square("characteristic polynomial")?;
        let n = self.rows;
        let a = |i: usize, j: usize| self.get(i, j).clone();
        // Coefficients of the trailing principal submatrices, leading term first.
        let mut vec = vec![T::one(), -a(n - 1, n - 1)];
        for k in (0..n - 1).rev() {
            let m = n - k;
            let mut diags = Vec::with_capacity(m + 1);
            diags.push(T::one());
            diags.push(-a(k, k));
            let mut col: Vec<T> = (k + 1..n).map(|i| a(i, k)).collect();
            for step in 0..m - 1 {
                if step > 0 {
                    col = (k + 1..n)
                        .map(|i| {
                            (k + 1..n)
                                .fold(T::zero(), |acc, j| acc + a(i, j) * col[j - k - 1].clone())
                        })
                        .collect();
                }
                let rc =
                    (k + 1..n).fold(T::zero(), |acc, j| acc + a(k, j) * col[j - k - 1].clone());
                diags.push(-rc);
            }
            let next: Vec<T> = (0..=m)
                .map(|i| {
                    (0..=i.min(m - 1)).fold(T::zero(), |acc, j| {
                        acc + diags[i - j].clone() * vec[j].clone()
                    })
                })
                .collect();
            vec = next;
        }
        vec.reverse();
        Ok(vec)
    }

    pub fn det(&self) -> Result<T> {
        let cp = self.char_poly()?;
        let c0 = cp[0].clone();
        Ok(if self.rows.is_multiple_of(2) { c0 } else { -c0 })
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square("trace")?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i).clone()))
    }

    /// Adjugate via Cayley-Hamilton; no division is performed.
    pub fn adjugate(&self) -> Result<Self> {
        let cp = self.char_poly()?;
        let n = self.rows;
        // Horner: Q = M^{n-1} + c_{n-1} M^{n-2} + ... + c_1 I.
        let mut q = Matrix::identity(n);
        for k in (1..n).rev() {
            q = self.checked_mul(&q)?;
            for i in 0..n {
                let d = q.get(i, i).clone() + cp[k].clone();
                q.set(i, i, d);
            }
        }
        Ok(if n % 2 == 1 { q } else { -q })
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        T::invert_matrix(self).ok_or(Error::NotInvertible(T::DOMAIN.tag()))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        self.require_square("power")?;
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Matrix::identity(self.rows);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Zero-based rectangular slice.
    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Result<Self> {
        if r0 + nr > self.rows || c0 + nc > self.cols || nr == 0 || nc == 0 {
            return Err(Error::DimensionMismatch(format!(
                "block {nr}x{nc} at ({r0}, {c0}) does not fit in {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(Matrix::from_fn(nr, nc, |i, j| {
            self.get(r0 + i, c0 + j).clone()
        }))
    }

    pub fn block_diag(blocks: &[Matrix<T>]) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(n, m);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r + i, c + j, b.get(i, j).clone());
                }
            }
            r += b.rows;
            c += b.cols;
        }
        Ok(out)
    }

    /// `P^{-1} self P`.
    pub fn conjugate_by(&self, p: &Self) -> Result<Self> {
        p.inverse()?.checked_mul(self)?.checked_mul(p)
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix product dimensions")
    }
}

impl<T: Ring> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix sum dimensions")
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix difference dimensions")
    }
}

impl<T: Ring> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Gf2;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Matrix::<BigInt>::new(0, 2, vec![]).is_err());
        assert!(Matrix::new(2, 2, vec![BigInt::from(1)]).is_err());
        assert!(z(&[&[1, 2]]).checked_mul(&z(&[&[1, 2]])).is_err());
    }

    #[test]
    fn char_poly_of_companion() {
        // x^3 - 2x^2 + 3x - 5
        let m = z(&[&[0, 0, 5], &[1, 0, -3], &[0, 1, 2]]);
        let cp = m.char_poly().unwrap();
        let expect: Vec<BigInt> = [-5, 3, -2, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(cp, expect);
        assert_eq!(m.det().unwrap(), BigInt::from(5));
    }

    #[test]
    fn det_small() {
        assert_eq!(z(&[&[7]]).det().unwrap(), BigInt::from(7));
        assert_eq!(z(&[&[1, 2], &[3, 4]]).det().unwrap(), BigInt::from(-2));
        let m = z(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.det().unwrap(), BigInt::from(4));
    }

    #[test]
    fn integer_inverse_requires_unit_det() {
        let m = z(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(z(&[&[2, 0], &[0, 1]]).inverse().is_err());
    }

    #[test]
    fn rational_inverse() {
        let m: Matrix<BigRational> = Matrix::from_i64_rows(&[&[2, 0], &[0, 4]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
    }

    #[test]
    fn gf2_inverse() {
        let m: Matrix<Gf2> = Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(m.inverse().unwrap(), m);
        let s: Matrix<Gf2> = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert!(s.inverse().is_err());
    }

    #[test]
    fn adjugate_identity() {
        let m = z(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let adj = m.adjugate().unwrap();
        let d = m.det().unwrap();
        assert_eq!(&m * &adj, Matrix::identity(3).scale(&d));
    }

    #[test]
    fn negative_powers() {
        let m = z(&[&[1, 1], &[0, 1]]);
        assert_eq!(m.pow(-3).unwrap(), z(&[&[1, -3], &[0, 1]]));
        assert!(m.pow(0).unwrap().is_identity());
    }
}
