//! `V = H_1(N_{2r+2}; Z_2)` with the pairing `<x̄_i, x̄_j> = δ_ij`, and the
//! decomposition of its isometry group as `N ⋊ Sp(W)`.

use std::ops::Add;

use crate::algebra::{Gf2, Matrix};
use crate::error::{Error, Result};

pub type BitMatrix = Matrix<Gf2>;

/// A vector of `V` in the basis `x̄_1, ..., x̄_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModTwoVector(pub Vec<Gf2>);

impl ModTwoVector {
    pub fn zero(n: usize) -> Self {
        ModTwoVector(vec![Gf2::ZERO; n])
    }

    pub fn basis(i: usize, n: usize) -> Self {
        let mut v = ModTwoVector::zero(n);
        v.0[i - 1] = Gf2::ONE;
        v
    }

    /// `x̄_lo + ... + x̄_hi`.
    pub fn range(lo: usize, hi: usize, n: usize) -> Self {
        let mut v = ModTwoVector::zero(n);
        for i in lo..=hi {
            v.0[i - 1] = Gf2::ONE;
        }
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        ModTwoVector(bits.iter().map(|&b| Gf2(b % 2 == 1)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b.0)
    }

    pub fn dot(&self, other: &Self) -> Gf2 {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Gf2::ZERO, |acc, (a, b)| acc + *a * *b)
    }

    pub fn scale(&self, s: Gf2) -> Self {
        ModTwoVector(self.0.iter().map(|&b| b * s).collect())
    }

    pub fn apply(m: &BitMatrix, v: &Self) -> Self {
        ModTwoVector(
            (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .zip(&v.0)
                        .fold(Gf2::ZERO, |acc, (a, b)| acc + *a * *b)
                })
                .collect(),
        )
    }

    /// All `2^n` vectors of length `n`.
    pub fn all(n: usize) -> impl Iterator<Item = ModTwoVector> {
        (0u64..1 << n)
            .map(move |bits| ModTwoVector((0..n).map(|k| Gf2(bits >> k & 1 == 1)).collect()))
    }
}

impl Add for &ModTwoVector {
    type Output = ModTwoVector;
    fn add(self, rhs: &ModTwoVector) -> ModTwoVector {
        ModTwoVector(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

/// `v_i = x̄_1 + ... + x̄_{2i}`, `w_i = x̄_{2i} + x̄_{2i+1}`, `c = x̄_{2r+2}` and
/// `d = x̄_1 + ... + x̄_{2r+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialVectors {
    pub r: usize,
    pub v: Vec<ModTwoVector>,
    pub w: Vec<ModTwoVector>,
    pub c: ModTwoVector,
    pub d: ModTwoVector,
}

impl SpecialVectors {
    pub fn new(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("r must be at least 1".into()));
        }
        let n = 2 * r + 2;
        Ok(SpecialVectors {
            r,
            v: (1..=r).map(|i| ModTwoVector::range(1, 2 * i, n)).collect(),
            w: (1..=r)
                .map(|i| ModTwoVector::range(2 * i, 2 * i + 1, n))
                .collect(),
            c: ModTwoVector::basis(n, n),
            d: ModTwoVector::range(1, n, n),
        })
    }

    pub fn n(&self) -> usize {
        2 * self.r + 2
    }

    /// `(v_1, w_1, ..., v_r, w_r)`.
    pub fn w_basis(&self) -> Vec<ModTwoVector> {
        self.v
            .iter()
            .zip(&self.w)
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect()
    }

    /// Columns `v_1, w_1, ..., v_r, w_r, c, d` in `x̄` coordinates.
    pub fn adapted_basis(&self) -> BitMatrix {
        let mut cols = self.w_basis();
        cols.push(self.c.clone());
        cols.push(self.d.clone());
        Matrix::from_fn(self.n(), self.n(), |i, j| cols[j].0[i])
    }

    /// Gram matrix of the pairing on `(v_1, w_1, ..., v_r, w_r)`.
    pub fn w_form(&self) -> BitMatrix {
        let b = self.w_basis();
        Matrix::from_fn(2 * self.r, 2 * self.r, |i, j| b[i].dot(&b[j]))
    }

    /// Splits `u` as `sum y_k b_k + γ c + δ d` in the adapted basis.
    pub fn coordinates(&self, u: &ModTwoVector) -> (ModTwoVector, Gf2, Gf2) {
        let inv = self.adapted_basis().inverse().expect("adapted basis");
        let y = ModTwoVector::apply(&inv, u);
        let m = 2 * self.r;
        (ModTwoVector(y.0[..m].to_vec()), y.0[m], y.0[m + 1])
    }

    /// The vector with coordinates `y` in `(v_1, w_1, ...)`.
    pub fn from_w_coords(&self, y: &ModTwoVector) -> ModTwoVector {
        self.w_basis()
            .iter()
            .zip(&y.0)
            .fold(ModTwoVector::zero(self.n()), |acc, (b, s)| {
                &acc + &b.scale(*s)
            })
    }
}

pub fn special_vectors(r: usize) -> Result<SpecialVectors> {
    SpecialVectors::new(r)
}

/// Whether `L` preserves the pairing, i.e. `L^t L = I`.
pub fn is_isometry(l: &BitMatrix) -> bool {
    l.is_square()
        && l.transpose()
            .checked_mul(l)
            .map(|m| m.is_identity())
            .unwrap_or(false)
}

/// Whether `R` preserves the form on `W`.
pub fn is_symplectic(sv: &SpecialVectors, r: &BitMatrix) -> bool {
    let form = sv.w_form();
    r.rows() == form.rows()
        && r.is_square()
        && r.transpose()
            .checked_mul(&form)
            .and_then(|m| m.checked_mul(r))
            .ok()
            == Some(form)
}

/// Rewrites a matrix given in the adapted basis into `x̄` coordinates.
fn from_adapted(sv: &SpecialVectors, m: &BitMatrix) -> BitMatrix {
    let p = sv.adapted_basis();
    let p_inv = p.inverse().expect("adapted basis");
    &(&p * m) * &p_inv
}

fn to_adapted(sv: &SpecialVectors, m: &BitMatrix) -> BitMatrix {
    let p = sv.adapted_basis();
    let p_inv = p.inverse().expect("adapted basis");
    &(&p_inv * m) * &p
}

/// `B_{x,z}`: fixes `d`, sends `c` to `c + x d + z`, and `w` to `w + <w, z> d`.
/// `z` is given in `x̄` coordinates and must lie in `W`.
pub fn make_b(sv: &SpecialVectors, x: Gf2, z: &ModTwoVector) -> Result<BitMatrix> {
    let (zy, zc, zd) = sv.coordinates(z);
    if zc.0 || zd.0 {
        return Err(Error::InvalidArgument(format!("z = {z:?} is not in W")));
    }
    let n = sv.n();
    let m = 2 * sv.r;
    let basis = sv.w_basis();
    let mut a: BitMatrix = Matrix::identity(n);
    for (k, b) in basis.iter().enumerate() {
        a.set(m + 1, k, b.dot(z));
    }
    for k in 0..m {
        a.set(k, m, zy.0[k]);
    }
    a.set(m + 1, m, x);
    Ok(from_adapted(sv, &a))
}

/// `A_R`: acts as `R` on `W` (in the basis `v_1, w_1, ...`) and fixes `c`, `d`.
pub fn make_a(sv: &SpecialVectors, r: &BitMatrix) -> Result<BitMatrix> {
    if !is_symplectic(sv, r) {
        return Err(Error::InvalidArgument(
            "R does not preserve the form on W".into(),
        ));
    }
    let id2: BitMatrix = Matrix::identity(2);
    Ok(from_adapted(sv, &Matrix::block_diag(&[r.clone(), id2])?))
}

/// `L = B_{x,z} A_R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub x: Gf2,
    pub z: ModTwoVector,
    pub r: BitMatrix,
}

pub fn decompose(sv: &SpecialVectors, l: &BitMatrix) -> Result<Decomposition> {
    if l.rows() != sv.n() || !is_isometry(l) {
        return Err(Error::InvalidArgument("not an isometry of V".into()));
    }
    let lc = ModTwoVector::apply(l, &sv.c);
    let rest = &lc + &sv.c;
    let (zy, zc, x) = sv.coordinates(&rest);
    debug_assert!(!zc.0, "L(c) pairs to one with d");
    let z = sv.from_w_coords(&zy);
    // B_{x,z} is an involution.
    let b = make_b(sv, x, &z)?;
    let a = to_adapted(sv, &(&b * l));
    let m = 2 * sv.r;
    let r = a.submatrix(0, 0, m, m)?;
    Ok(Decomposition { x, z, r })
}

/// The transvection `w -> w + <w, y> y` of `W`, in the basis `v_1, w_1, ...`.
/// `y` is given by its coordinates in that basis.
pub fn w_transvection(sv: &SpecialVectors, y: &ModTwoVector) -> Result<BitMatrix> {
    let m = 2 * sv.r;
    if y.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "expected {m} coordinates, got {}",
            y.len()
        )));
    }
    let form = sv.w_form();
    let fy = ModTwoVector::apply(&form, y);
    Ok(Matrix::from_fn(m, m, |i, j| {
        let id = if i == j { Gf2::ONE } else { Gf2::ZERO };
        id + y.0[i] * fy.0[j]
    }))
}

/// Every `R` in `Sp(W)` for small `r`, by enumeration.
pub fn symplectic_group(sv: &SpecialVectors) -> Vec<BitMatrix> {
    let m = 2 * sv.r;
    assert!(m * m <= 16, "enumeration only for r <= 2");
    (0u64..1 << (m * m))
        .map(|bits| Matrix::from_fn(m, m, |i, j| Gf2(bits >> (i * m + j) & 1 == 1)))
        .filter(|r| is_symplectic(sv, r))
        .collect()
}

/// Result of enumerating `Iso(V)` at `r = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceReport {
    pub order: usize,
    pub constructive_order: usize,
    pub matches_constructive: bool,
    pub all_fix_d: bool,
}

pub fn brute_force_isov(r: usize) -> Result<BruteForceReport> {
    if r != 1 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive enumeration is limited to r = 1, got r = {r}"
        )));
    }
    let sv = SpecialVectors::new(1)?;
    let n = sv.n();
    let mut found = std::collections::BTreeSet::new();
    for bits in 0u64..1 << (n * n) {
        let l: BitMatrix = Matrix::from_fn(n, n, |i, j| Gf2(bits >> (i * n + j) & 1 == 1));
        if is_isometry(&l) {
            found.insert(l.entries().to_vec());
        }
    }
    let all_fix_d = found.iter().all(|e| {
        let l = Matrix::new(n, n, e.clone()).expect("n*n entries");
        ModTwoVector::apply(&l, &sv.d) == sv.d
    });
    let mut built = std::collections::BTreeSet::new();
    for rmat in symplectic_group(&sv) {
        let a = make_a(&sv, &rmat)?;
        for x in [Gf2::ZERO, Gf2::ONE] {
            for zy in ModTwoVector::all(2 * sv.r) {
                let z = sv.from_w_coords(&zy);
                let l = &make_b(&sv, x, &z)? * &a;
                built.insert(l.entries().to_vec());
            }
        }
    }
    Ok(BruteForceReport {
        order: found.len(),
        constructive_order: built.len(),
        matches_constructive: found == built,
        all_fix_d,
    })
}
