use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::poly::Poly;
use crate::error::{Error, Result};

/// The coefficient domains a matrix may live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Domain {
    #[serde(rename = "Z")]
    Int,
    #[serde(rename = "Q")]
    Rat,
    #[serde(rename = "GF2")]
    Gf2,
    #[serde(rename = "PolyQ")]
    PolyRat,
}

impl Domain {
    pub fn tag(self) -> &'static str {
        match self {
            Domain::Int => "Z",
            Domain::Rat => "Q",
            Domain::Gf2 => "GF2",
            Domain::PolyRat => "PolyQ",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "Z" => Some(Domain::Int),
            "Q" => Some(Domain::Rat),
            "GF2" => Some(Domain::Gf2),
            "PolyQ" => Some(Domain::PolyRat),
            _ => None,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const DOMAIN: Domain;

    fn from_i64(n: i64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn parse_scalar(text: &str) -> Result<Self>;

    /// Inverse of a square matrix, `None` when it is singular over this ring.
    ///
    /// The default goes through the adjugate and only succeeds when the
    /// determinant is a unit.
    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        let det = m.det().ok()?;
        let inv_det = det.unit_inverse()?;
        let adj = m.adjugate().ok()?;
        Some(adj.scale(&inv_det))
    }
}

/// Gauss-Jordan inversion, valid whenever every nonzero scalar is a unit.
pub(crate) fn gauss_jordan_inverse<T: Ring>(m: &Matrix<T>) -> Option<Matrix<T>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut inv: Vec<Vec<T>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].unit_inverse()?;
        for x in a[col].iter_mut() {
            *x = x.clone() * p.clone();
        }
        for x in inv[col].iter_mut() {
            *x = x.clone() * p.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let da = factor.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - da;
                let di = factor.clone() * inv[col][c].clone();
                inv[r][c] = inv[r][c].clone() - di;
            }
        }
    }
    Some(Matrix::from_rows(inv).expect("square matrix"))
}

impl Ring for BigInt {
    const DOMAIN: Domain = Domain::Int;

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn parse_scalar(text: &str) -> Result<Self> {
        BigInt::from_str(text.trim())
            .map_err(|_| Error::parse(0, format!("`{text}` is not an integer")))
    }

    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        let q = gauss_jordan_inverse(&m.map(|x| BigRational::from_integer(x.clone())))?;
        let mut out = Vec::with_capacity(q.rows() * q.cols());
        for x in q.entries() {
            if !x.is_integer() {
                return None;
            }
            out.push(x.to_integer());
        }
        Matrix::new(q.rows(), q.cols(), out).ok()
    }
}

impl Ring for BigRational {
    const DOMAIN: Domain = Domain::Rat;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_scalar(text: &str) -> Result<Self> {
        parse_rational(text.trim())
            .ok_or_else(|| Error::parse(0, format!("`{text}` is not a rational number")))
    }

    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        gauss_jordan_inverse(m)
    }
}

pub(crate) fn parse_rational(text: &str) -> Option<BigRational> {
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => BigInt::from_str(text).ok().map(BigRational::from_integer),
    }
}

/// The field with two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub for Gf2 {
    type Output = Gf2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

impl Ring for Gf2 {
    const DOMAIN: Domain = Domain::Gf2;

    fn from_i64(n: i64) -> Self {
        Gf2(n.rem_euclid(2) == 1)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Gf2(n.is_odd())
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.0.then_some(Gf2::ONE)
    }

    fn parse_scalar(text: &str) -> Result<Self> {
        match text.trim() {
            "0" => Ok(Gf2::ZERO),
            "1" => Ok(Gf2::ONE),
            _ => Err(Error::parse(
                0,
                format!("`{text}` is not an element of GF(2)"),
            )),
        }
    }

    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        gauss_jordan_inverse(m)
    }
}

impl Ring for Poly {
    const DOMAIN: Domain = Domain::PolyRat;

    fn from_i64(n: i64) -> Self {
        Poly::from_i64(n)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Poly::constant(BigRational::from_integer(n.clone()))
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant()
            .filter(|c| !c.is_zero())
            .map(|c| Poly::constant(c.recip()))
    }

    fn parse_scalar(text: &str) -> Result<Self> {
        Poly::parse(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_arithmetic() {
        assert_eq!(Gf2::ONE + Gf2::ONE, Gf2::ZERO);
        assert_eq!(-Gf2::ONE, Gf2::ONE);
        assert_eq!(Gf2::from_i64(-3), Gf2::ONE);
        assert_eq!(Gf2::ZERO.unit_inverse(), None);
    }

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).unit_inverse(), None);
    }

    #[test]
    fn rational_parsing() {
        let q = BigRational::parse_scalar("-6/4").unwrap();
        assert_eq!(q, BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert!(BigRational::parse_scalar("1/0").is_err());
    }

    #[test]
    fn domain_tags_round_trip() {
        for d in [Domain::Int, Domain::Rat, Domain::Gf2, Domain::PolyRat] {
            assert_eq!(Domain::from_tag(d.tag()), Some(d));
        }
    }
}
