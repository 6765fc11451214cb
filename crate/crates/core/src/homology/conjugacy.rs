//! Deciding whether two generator tables are conjugate by an invertible matrix.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::algebra::{intertwiner_basis, Matrix, Poly, RatMatrix};
use crate::error::{Error, Result};
use crate::surface::Generator;

use super::table::{rep_table, GeneratorTable, RepName};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub genus: usize,
    /// Twist generators with identical images in both tables.
    pub shared: Vec<Generator>,
    /// Dimension of `{M : M Y(t) = X(t) M}` over the shared twists.
    pub intertwiner_dim: usize,
    pub intertwiner_basis: Vec<RatMatrix>,
    /// Generators whose images still have to be matched.
    pub remaining: Vec<Generator>,
    /// Dimension after adding the remaining constraints.
    pub constrained_dim: usize,
    /// Whether an invertible `M` satisfies every constraint.
    pub conjugate: bool,
}

fn lift(m: &crate::algebra::IntMatrix) -> RatMatrix {
    Matrix::lift(m)
}

/// Whether some linear combination of `basis` is invertible, tested through
/// the determinant of a generic combination.
fn span_has_invertible(basis: &[RatMatrix]) -> Result<bool> {
    let Some(first) = basis.first() else {
        return Ok(false);
    };
    let n = first.rows();
    let params: Vec<Poly> = (0..basis.len())
        .map(|k| Poly::var(&format!("t{k}")))
        .collect();
    let generic = Matrix::from_fn(n, n, |i, j| {
        basis.iter().zip(&params).fold(Poly::zero(), |acc, (b, t)| {
            acc + t.clone() * Poly::constant(b.get(i, j).clone())
        })
    });
    Ok(!generic.det()?.is_zero())
}

/// Looks for invertible `M` with `M Y(t) = X(t) M` for every generator `t`
/// in both tables. The linear space is first computed over twists with equal
/// images, then cut down by `u_{g-1}` and any twists whose images differ.
pub fn conjugacy_between(x: &GeneratorTable, y: &GeneratorTable) -> Result<ConjugacyReport> {
    if x.dim != y.dim || x.genus != y.genus {
        return Err(Error::DimensionMismatch("tables of different shape".into()));
    }
    let g = x.genus;
    let mut shared = Vec::new();
    let mut remaining = Vec::new();
    for gen in x.generators().filter(|gen| y.contains(*gen)) {
        if gen.is_twist() && x.image(gen) == y.image(gen) {
            shared.push(gen);
        } else if gen.is_twist() || gen == Generator::U(g - 1) {
            remaining.push(gen);
        }
    }
    let pair = |gen: &Generator| {
        (
            lift(y.image(*gen).expect("present")),
            lift(x.image(*gen).expect("present")),
        )
    };
    let shared_pairs: Vec<_> = shared.iter().map(pair).collect();
    let basis = intertwiner_basis(&shared_pairs, x.dim)?;
    let mut all_pairs = shared_pairs;
    all_pairs.extend(remaining.iter().map(pair));
    let constrained = intertwiner_basis(&all_pairs, x.dim)?;
    let conjugate = span_has_invertible(&constrained)?;
    Ok(ConjugacyReport {
        genus: g,
        shared,
        intertwiner_dim: basis.len(),
        intertwiner_basis: basis,
        remaining,
        constrained_dim: constrained.len(),
        conjugate,
    })
}

/// Whether `Ψ_1` and `Ψ_2` are conjugate at genus `g`.
pub fn conjugacy_obstruction(g: usize) -> Result<ConjugacyReport> {
    let x = rep_table(RepName::Psi1, g)?;
    let y = rep_table(RepName::Psi2, g)?;
    conjugacy_between(&x, &y)
}

/// The scalar multiple `λ` with `m = λ I`, if any.
pub fn scalar_value(m: &RatMatrix) -> Option<BigRational> {
    let lambda = m.get(0, 0).clone();
    let scalar = Matrix::<BigRational>::identity(m.rows()).scale(&lambda);
    (*m == scalar).then_some(lambda)
}

/// Pattern of a matrix space: which entries can be nonzero.
pub fn support(basis: &[RatMatrix]) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for b in basis {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                if !num_traits::Zero::is_zero(b.get(i, j)) {
                    *out.entry((i, j)).or_insert(0) += 1;
                }
            }
        }
    }
    out
}
