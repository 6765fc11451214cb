//! The fixed integer matrices `I_m`, `E_ij`, `V`, `V̂`, `W`, `A_i`, `B_i`, `C_j`
//! and the symplectic form `Ω`.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::matrix::Matrix;

pub type IntMatrix = Matrix<BigInt>;

/// Which standard matrix to build. Indices are one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardKind {
    Identity(usize),
    Elementary { i: usize, j: usize, m: usize },
    V,
    Vhat,
    W,
    A { i: usize, m: usize },
    B { i: usize, m: usize },
    C { j: usize, m: usize },
    BlockDiag(Vec<IntMatrix>),
    Omega(usize),
}

fn int(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_i64_rows(rows).expect("literal matrix")
}

pub fn v() -> IntMatrix {
    int(&[&[1, 1], &[0, 1]])
}

pub fn v_hat() -> IntMatrix {
    int(&[&[1, 0], &[-1, 1]])
}

pub fn w() -> IntMatrix {
    int(&[&[1, 1, 0, -1], &[0, 1, 0, 0], &[0, -1, 1, 1], &[0, 0, 0, 1]])
}

pub fn identity(m: usize) -> Result<IntMatrix> {
    if m == 0 {
        return Err(Error::InvalidArgument("identity of size 0".into()));
    }
    Ok(Matrix::identity(m))
}

/// `I_m + E_ij`.
pub fn elementary(i: usize, j: usize, m: usize) -> Result<IntMatrix> {
    if i == 0 || j == 0 || i > m || j > m {
        return Err(Error::InvalidArgument(format!(
            "elementary index ({i}, {j}) outside 1..={m}"
        )));
    }
    let mut e = Matrix::zeros(m, m);
    e.set(i - 1, j - 1, BigInt::from(1));
    Ok(e)
}

fn embed(block: IntMatrix, offset: usize, m: usize) -> IntMatrix {
    let mut out = Matrix::identity(m);
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            out.set(offset + r, offset + c, block.get(r, c).clone());
        }
    }
    out
}

/// `diag(I_{2i-2}, V, I_{m-2i})`.
pub fn a(i: usize, m: usize) -> Result<IntMatrix> {
    check_pair_index('A', i, m)?;
    Ok(embed(v(), 2 * i - 2, m))
}

/// `diag(I_{2i-2}, V̂, I_{m-2i})`.
pub fn b(i: usize, m: usize) -> Result<IntMatrix> {
    check_pair_index('B', i, m)?;
    Ok(embed(v_hat(), 2 * i - 2, m))
}

/// `diag(I_{2j-2}, W, I_{m-2j-2})`.
pub fn c(j: usize, m: usize) -> Result<IntMatrix> {
    if j == 0 || 2 * j + 2 > m {
        return Err(Error::InvalidArgument(format!(
            "C_{j} needs 2 <= 2j <= m-2, got m = {m}"
        )));
    }
    Ok(embed(w(), 2 * j - 2, m))
}

fn check_pair_index(name: char, i: usize, m: usize) -> Result<()> {
    if i == 0 || 2 * i > m {
        return Err(Error::InvalidArgument(format!(
            "{name}_{i} needs 2 <= 2i <= m, got m = {m}"
        )));
    }
    Ok(())
}

/// `(0, I; -I, 0)` of even size `m`.
pub fn omega(m: usize) -> Result<IntMatrix> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "omega needs even m, got {m}"
        )));
    }
    let h = m / 2;
    Ok(Matrix::from_fn(m, m, |i, j| {
        if j == i + h {
            BigInt::from(1)
        } else if i == j + h {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    }))
}

pub fn build_standard(kind: &StandardKind) -> Result<IntMatrix> {
    match kind {
        StandardKind::Identity(m) => identity(*m),
        StandardKind::Elementary { i, j, m } => elementary(*i, *j, *m),
        StandardKind::V => Ok(v()),
        StandardKind::Vhat => Ok(v_hat()),
        StandardKind::W => Ok(w()),
        StandardKind::A { i, m } => a(*i, *m),
        StandardKind::B { i, m } => b(*i, *m),
        StandardKind::C { j, m } => c(*j, *m),
        StandardKind::BlockDiag(blocks) => {
            if blocks.is_empty() {
                return Err(Error::InvalidArgument("empty block list".into()));
            }
            if blocks.iter().any(|b| !b.is_square()) {
                return Err(Error::DimensionMismatch(
                    "diagonal blocks must be square".into(),
                ));
            }
            Matrix::block_diag(blocks)
        }
        StandardKind::Omega(m) => omega(*m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_shapes() {
        assert_eq!(
            a(1, 4).unwrap(),
            Matrix::block_diag(&[v(), Matrix::identity(2)]).unwrap()
        );
        assert_eq!(c(1, 4).unwrap(), w());
        assert_eq!(b(2, 4).unwrap().get(3, 2), &BigInt::from(-1));
    }

    #[test]
    fn ranges_enforced() {
        assert!(a(3, 4).is_err());
        assert!(c(2, 5).is_err());
        assert!(c(1, 4).is_ok());
        assert!(omega(3).is_err());
        assert!(elementary(0, 1, 3).is_err());
    }

    #[test]
    fn braid_identity_2x2() {
        let (p, q) = (v(), v_hat());
        assert_eq!(&(&p * &q) * &p, &(&q * &p) * &q);
    }

    #[test]
    fn unimodular() {
        for m in [4usize, 6, 8] {
            for i in 1..=m / 2 {
                assert_eq!(a(i, m).unwrap().det().unwrap(), BigInt::from(1));
                assert_eq!(b(i, m).unwrap().det().unwrap(), BigInt::from(1));
            }
            for j in 1..m / 2 {
                assert_eq!(c(j, m).unwrap().det().unwrap(), BigInt::from(1));
            }
        }
    }
}
