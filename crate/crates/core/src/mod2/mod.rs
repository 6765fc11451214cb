//! Mapping classes acting on homology with `Z_2` coefficients.

mod iso;
mod rho;

pub use iso::{
    brute_force_isov, decompose, is_isometry, is_symplectic, make_a, make_b, special_vectors,
    symplectic_group, w_transvection, BitMatrix, BruteForceReport, Decomposition, ModTwoVector,
    SpecialVectors,
};
pub use rho::{
    consistent_n4_readings, curve_class, epsilon_word, mod2_transvection, rho, rho_word,
};
