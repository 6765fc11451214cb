//! `Ψ_1` and `Ψ_2` recomputed from `Φ ∘ θ`, the block form of `Φ ∘ θ` in the
//! `(e, f)` basis, and the covering involution.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{standard, IntMatrix, Matrix};
use crate::error::Result;
use crate::surface::{check_genus_at_least, Surface, Word};

use super::symplectic::{genus_split, homology_maps, HomologyMaps};
use super::table::{phi_theta_table, GeneratorTable, RepName};

/// Permutation taking `(e_1, e_{r+1}, e_2, e_{r+2}, ..., [e_{2r+1}])` to the
/// `e` ordering.
fn k_basis_change(g: usize) -> IntMatrix {
    let (r, s) = genus_split(g);
    let n = g - 1;
    let mut order = Vec::with_capacity(n);
    for i in 1..=r {
        order.push(i - 1);
        order.push(r + i - 1);
    }
    if s == 2 {
        order.push(2 * r);
    }
    let mut p = Matrix::zeros(n, n);
    for (col, &row) in order.iter().enumerate() {
        p.set(row, col, BigInt::one());
    }
    p
}

/// Coordinates of the quotient basis `(a_1+K, b_1+K, ..., [b_{r+1}+K])` in
/// terms of `f`: `a_i + K = -f_{r+i}`, `b_i + K = f_i`, `b_{r+1} + K = f_{2r+1}`.
fn quotient_basis_change(g: usize) -> IntMatrix {
    let (r, s) = genus_split(g);
    let n = g - 1;
    let mut p = Matrix::zeros(n, n);
    for i in 1..=r {
        p.set(r + i - 1, 2 * i - 2, BigInt::from(-1));
        p.set(i - 1, 2 * i - 1, BigInt::one());
    }
    if s == 2 {
        p.set(2 * r, 2 * r, BigInt::one());
    }
    p
}

/// `X` in the `(e, f)` basis, split as `(X_1, Y; Z, X_2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub source: IntMatrix,
    pub x1: IntMatrix,
    pub x2: IntMatrix,
    pub y: IntMatrix,
    pub lower_left: IntMatrix,
}

impl BlockDecomposition {
    pub fn split(source: IntMatrix) -> Result<Self> {
        let n = source.rows() / 2;
        Ok(BlockDecomposition {
            x1: source.submatrix(0, 0, n, n)?,
            y: source.submatrix(0, n, n, n)?,
            lower_left: source.submatrix(n, 0, n, n)?,
            x2: source.submatrix(n, n, n, n)?,
            source,
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.lower_left.is_zero()
    }

    /// `X_1^t X_2 = I`.
    pub fn blocks_dual(&self) -> bool {
        self.x1
            .transpose()
            .checked_mul(&self.x2)
            .map(|m| m.is_identity())
            .unwrap_or(false)
    }
}

/// Evaluates a word in twist generators under `Φ ∘ θ` and splits it in the
/// `(e, f)` basis.
pub fn block_decompose(g: usize, w: &Word) -> Result<BlockDecomposition> {
    let maps = homology_maps(g)?;
    let table = phi_theta_table(g)?;
    block_decompose_with(&maps, &table, w)
}

pub fn block_decompose_with(
    maps: &HomologyMaps,
    table: &GeneratorTable,
    w: &Word,
) -> Result<BlockDecomposition> {
    let x = table.eval(w)?;
    BlockDecomposition::split(maps.to_ef(&x)?)
}

/// Recomputes `Ψ_which` on every liftable twist generator from `Φ ∘ θ`.
pub fn derive_psi(g: usize, which: usize) -> Result<GeneratorTable> {
    check_genus_at_least(g, 5)?;
    let maps = homology_maps(g)?;
    let phi_theta = phi_theta_table(g)?;
    let (name, p) = match which {
        1 => (RepName::Psi1, k_basis_change(g)),
        2 => (RepName::Psi2, quotient_basis_change(g)),
        other => {
            return Err(crate::Error::InvalidArgument(format!(
                "Ψ index must be 1 or 2, got {other}"
            )))
        }
    };
    let p_inv = p.inverse()?;
    let mut out = GeneratorTable::new(name, g, g - 1, Surface::closed(g));
    for (gen, x) in phi_theta.entries() {
        let blocks = BlockDecomposition::split(maps.to_ef(x)?)?;
        let block = if which == 1 { &blocks.x1 } else { &blocks.x2 };
        out.insert(gen, p_inv.checked_mul(block)?.checked_mul(&p)?)?;
    }
    Ok(out)
}

/// The involution `a_i -> -a_{g-i}`, `b_i -> b_{g-i}` of `H_1(S_{g-1})` in the
/// `(a, b)` basis.
pub fn covering_involution_ab(g: usize) -> Result<IntMatrix> {
    check_genus_at_least(g, 3)?;
    let h = g - 1;
    let mut j = Matrix::zeros(2 * h, 2 * h);
    for i in 1..=h {
        let k = g - i;
        j.set(2 * k - 2, 2 * i - 2, BigInt::from(-1));
        j.set(2 * k - 1, 2 * i - 1, BigInt::one());
    }
    Ok(j)
}

/// The covering involution in the `(e, f)` basis.
pub fn covering_involution(g: usize) -> Result<IntMatrix> {
    let maps = homology_maps(g)?;
    maps.to_ef(&covering_involution_ab(g)?)
}

/// The postconditions expected of the covering involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvolutionChecks {
    pub squares_to_identity: bool,
    pub anti_symplectic: bool,
    pub block_form: bool,
    pub commutes_with_twists: bool,
}

impl InvolutionChecks {
    pub fn all(&self) -> bool {
        self.squares_to_identity
            && self.anti_symplectic
            && self.block_form
            && self.commutes_with_twists
    }
}

pub fn check_covering_involution(g: usize) -> Result<InvolutionChecks> {
    let maps = homology_maps(g)?;
    let j = covering_involution(g)?;
    let n = g - 1;
    let omega = standard::omega(2 * n)?;
    let jt_omega_j = j.transpose().checked_mul(&omega)?.checked_mul(&j)?;
    let blocks = BlockDecomposition::split(j.clone())?;
    let minus_i: IntMatrix = -Matrix::identity(n);
    let block_form = blocks.x1 == minus_i && blocks.x2.is_identity() && blocks.lower_left.is_zero();
    let phi_theta = phi_theta_table(g)?;
    let mut commutes = true;
    for (_, x) in phi_theta.entries() {
        let xe = maps.to_ef(x)?;
        commutes &= xe.commutator(&j)?.is_zero();
    }
    Ok(InvolutionChecks {
        squares_to_identity: j.checked_mul(&j)?.is_identity(),
        anti_symplectic: jt_omega_j == -omega,
        block_form,
        commutes_with_twists: commutes,
    })
}

/// Whether `Q^t G Q = Ω` for the `(e, f)` basis.
pub fn ef_basis_is_symplectic(g: usize) -> Result<bool> {
    let maps = homology_maps(g)?;
    let gram = super::symplectic::intersection_form(g - 1);
    let q = &maps.ef_to_ab;
    Ok(q.transpose().checked_mul(&gram)?.checked_mul(q)? == standard::omega(2 * (g - 1))?)
}
