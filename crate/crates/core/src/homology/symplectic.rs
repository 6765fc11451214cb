//! First homology of `S_{g-1}` and `N_g`, the projection between them, and
//! the sublattice `K` with its symplectic `(e, f)` basis.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::algebra::{IntMatrix, Matrix};
use crate::error::{Error, Result};
use crate::surface::check_genus_at_least;

/// Which lattice a homology vector lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomologyContext {
    /// `H_1(S_h)` in the basis `a_1, b_1, ..., a_h, b_h`.
    Orientable { genus: usize },
    /// `H_1(N_g)` in the generators `x_1, ..., x_g`, modulo `2(x_1 + ... + x_g)`.
    Nonorientable { genus: usize },
    /// `R = H_1(N_g) / <k>`, free on the images of `x_1, ..., x_{g-1}`.
    Reduced { genus: usize },
}

impl HomologyContext {
    pub fn rank(self) -> usize {
        match self {
            HomologyContext::Orientable { genus } => 2 * genus,
            HomologyContext::Nonorientable { genus } => genus,
            HomologyContext::Reduced { genus } => genus - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyVector {
    pub context: HomologyContext,
    pub coords: Vec<i64>,
}

impl HomologyVector {
    pub fn zero(context: HomologyContext) -> Self {
        HomologyVector {
            context,
            coords: vec![0; context.rank()],
        }
    }

    pub fn new(context: HomologyContext, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != context.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{context:?} has rank {}, got {} coordinates",
                context.rank(),
                coords.len()
            )));
        }
        Ok(HomologyVector { context, coords })
    }

    fn unit(context: HomologyContext, slot: usize) -> Self {
        let mut v = HomologyVector::zero(context);
        v.coords[slot] = 1;
        v
    }

    /// `a_i` in `H_1(S_h)`.
    pub fn a(i: usize, h: usize) -> Self {
        assert!(i >= 1 && i <= h, "a_{i} outside S_{h}");
        HomologyVector::unit(HomologyContext::Orientable { genus: h }, 2 * i - 2)
    }

    /// `b_i` in `H_1(S_h)`.
    pub fn b(i: usize, h: usize) -> Self {
        assert!(i >= 1 && i <= h, "b_{i} outside S_{h}");
        HomologyVector::unit(HomologyContext::Orientable { genus: h }, 2 * i - 1)
    }

    /// `x_i` in `H_1(N_g)`.
    pub fn x(i: usize, g: usize) -> Self {
        assert!(i >= 1 && i <= g, "x_{i} outside N_{g}");
        HomologyVector::unit(HomologyContext::Nonorientable { genus: g }, i - 1)
    }

    /// Sum of `x_lo, ..., x_hi` in `H_1(N_g)`.
    pub fn x_range(lo: usize, hi: usize, g: usize) -> Self {
        (lo..=hi).fold(
            HomologyVector::zero(HomologyContext::Nonorientable { genus: g }),
            |acc, i| &acc + &HomologyVector::x(i, g),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        HomologyVector {
            context: self.context,
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn to_column(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }

    /// Equality in `H_1(N_g)` up to the torsion relation `2k = 0`.
    pub fn equal_mod_torsion(&self, other: &Self) -> bool {
        if self.context != other.context {
            return false;
        }
        let d = self - other;
        match self.context {
            HomologyContext::Nonorientable { .. } => {
                let c0 = d.coords[0];
                c0 % 2 == 0 && d.coords.iter().all(|&c| c == c0)
            }
            _ => d.is_zero(),
        }
    }
}

impl Add for &HomologyVector {
    type Output = HomologyVector;
    fn add(self, rhs: &HomologyVector) -> HomologyVector {
        assert_eq!(self.context, rhs.context, "mixed homology contexts");
        HomologyVector {
            context: self.context,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &HomologyVector {
    type Output = HomologyVector;
    fn sub(self, rhs: &HomologyVector) -> HomologyVector {
        self + &(-rhs)
    }
}

impl Neg for &HomologyVector {
    type Output = HomologyVector;
    fn neg(self) -> HomologyVector {
        self.scale(-1)
    }
}

/// Gram matrix of the intersection form on `H_1(S_h)` in the basis
/// `(a_1, b_1, ..., a_h, b_h)`.
pub fn intersection_form(h: usize) -> IntMatrix {
    Matrix::from_fn(2 * h, 2 * h, |i, j| {
        if i % 2 == 0 && j == i + 1 {
            BigInt::from(1)
        } else if i % 2 == 1 && i == j + 1 {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    })
}

/// Algebraic intersection number `<u, v>`, with `<a_i, b_j> = δ_ij`.
pub fn pairing(u: &HomologyVector, v: &HomologyVector) -> Result<i64> {
    let h = match (u.context, v.context) {
        (HomologyContext::Orientable { genus: a }, HomologyContext::Orientable { genus: b })
            if a == b =>
        {
            a
        }
        _ => {
            return Err(Error::DimensionMismatch(
                "pairing needs two classes on the same S_h".into(),
            ))
        }
    };
    Ok((0..h)
        .map(|i| u.coords[2 * i] * v.coords[2 * i + 1] - u.coords[2 * i + 1] * v.coords[2 * i])
        .sum())
}

/// The transvection `h -> h + <v, h> v` in the `(a, b)` basis.
pub fn transvection(v: &HomologyVector) -> Result<IntMatrix> {
    let h = match v.context {
        HomologyContext::Orientable { genus } => genus,
        other => {
            return Err(Error::InvalidArgument(format!(
                "transvections act on orientable homology, not {other:?}"
            )))
        }
    };
    let n = 2 * h;
    // Row vector v^T G.
    let vg: Vec<i64> = (0..n)
        .map(|j| {
            if j % 2 == 1 {
                v.coords[j - 1]
            } else {
                -v.coords[j + 1]
            }
        })
        .collect();
    Ok(Matrix::from_fn(n, n, |i, j| {
        let delta = i64::from(i == j);
        BigInt::from(delta + v.coords[i] * vg[j])
    }))
}

/// `g = 2r + s` with `s ∈ {1, 2}`.
pub fn genus_split(g: usize) -> (usize, usize) {
    if g % 2 == 1 {
        ((g - 1) / 2, 1)
    } else {
        ((g - 2) / 2, 2)
    }
}

/// The maps and bases relating `H_1(S_{g-1})`, `H_1(N_g)` and `K = ker q`.
#[derive(Debug, Clone)]
pub struct HomologyMaps {
    pub genus: usize,
    /// Columns are `P_*(a_1), P_*(b_1), ...` in `x`-coordinates.
    pub pstar: IntMatrix,
    /// Columns are `q(a_1), q(b_1), ...` in `R`.
    pub q: IntMatrix,
    pub k_basis: Vec<HomologyVector>,
    pub f_basis: Vec<HomologyVector>,
    /// Columns `e_1, ..., e_{g-1}, f_1, ..., f_{g-1}` in `(a, b)` coordinates.
    pub ef_to_ab: IntMatrix,
    /// Inverse of `ef_to_ab`: converts `(a, b)` coordinates into `(e, f)` ones.
    pub ab_to_ef: IntMatrix,
}

impl HomologyMaps {
    /// `P_*(v)` in `H_1(N_g)`.
    pub fn push_forward(&self, v: &HomologyVector) -> HomologyVector {
        let coords = (0..self.genus)
            .map(|row| {
                v.coords
                    .iter()
                    .enumerate()
                    .map(|(c, x)| x * to_i64(self.pstar.get(row, c)))
                    .sum()
            })
            .collect();
        HomologyVector {
            context: HomologyContext::Nonorientable { genus: self.genus },
            coords,
        }
    }

    /// `q(v)` in `R`.
    pub fn reduce(&self, v: &HomologyVector) -> HomologyVector {
        let p = self.push_forward(v);
        let last = p.coords[self.genus - 1];
        HomologyVector {
            context: HomologyContext::Reduced { genus: self.genus },
            coords: p.coords[..self.genus - 1]
                .iter()
                .map(|c| c - last)
                .collect(),
        }
    }

    /// Conjugates a matrix in the `(a, b)` basis into the `(e, f)` basis.
    pub fn to_ef(&self, x: &IntMatrix) -> Result<IntMatrix> {
        self.ab_to_ef.checked_mul(x)?.checked_mul(&self.ef_to_ab)
    }
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("small integer")
}

pub fn homology_maps(g: usize) -> Result<HomologyMaps> {
    check_genus_at_least(g, 3)?;
    let h = g - 1;
    let (r, s) = genus_split(g);
    let mut pstar = Matrix::zeros(g, 2 * h);
    let mut set_col = |col: usize, v: &HomologyVector| {
        for (row, c) in v.coords.iter().enumerate() {
            pstar.set(row, col, BigInt::from(*c));
        }
    };
    for i in 1..=r {
        let pa = HomologyVector::x_range(1, 2 * i, g);
        let pb = HomologyVector::x_range(2 * i, 2 * i + 1, g);
        set_col(2 * i - 2, &pa);
        set_col(2 * (g - i) - 2, &-&pa);
        set_col(2 * i - 1, &pb);
        set_col(2 * (g - i) - 1, &pb);
    }
    if s == 2 {
        set_col(2 * r, &HomologyVector::x_range(1, g, g));
        set_col(2 * r + 1, &HomologyVector::x(g, g).scale(2));
    }
    let q = Matrix::from_fn(h, 2 * h, |row, col| {
        pstar.get(row, col) - pstar.get(g - 1, col)
    });

    let mut k_basis = Vec::with_capacity(h);
    let mut f_basis = Vec::with_capacity(h);
    for i in 1..=r {
        k_basis.push(&HomologyVector::a(i, h) + &HomologyVector::a(g - i, h));
        f_basis.push(HomologyVector::b(i, h));
    }
    for i in 1..=r {
        k_basis.push(&HomologyVector::b(i, h) - &HomologyVector::b(g - i, h));
        f_basis.push(HomologyVector::a(g - i, h));
    }
    if s == 2 {
        k_basis.push(HomologyVector::a(r + 1, h));
        f_basis.push(HomologyVector::b(r + 1, h));
    }
    let columns: Vec<&HomologyVector> = k_basis.iter().chain(&f_basis).collect();
    let ef_to_ab = Matrix::from_fn(2 * h, 2 * h, |row, col| {
        BigInt::from(columns[col].coords[row])
    });
    let ab_to_ef = ef_to_ab.inverse()?;
    Ok(HomologyMaps {
        genus: g,
        pstar,
        q,
        k_basis,
        f_basis,
        ef_to_ab,
        ab_to_ef,
    })
}
