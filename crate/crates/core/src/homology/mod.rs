//! Homological representations of mapping class groups of nonorientable
//! surfaces, built from the action on the homology of the double cover.

mod conjugacy;
mod psi;
mod symplectic;
mod table;
mod theta;
mod verify;

pub use conjugacy::{
    conjugacy_between, conjugacy_obstruction, scalar_value, support, ConjugacyReport,
};
pub use psi::{
    block_decompose, block_decompose_with, check_covering_involution, covering_involution,
    covering_involution_ab, derive_psi, ef_basis_is_symplectic, BlockDecomposition,
    InvolutionChecks,
};
pub use symplectic::{
    genus_split, homology_maps, intersection_form, pairing, transvection, HomologyContext,
    HomologyMaps, HomologyVector,
};
pub use table::{
    phi_theta_table, psi_top_delta_display, psi_u_display, rep_table, GeneratorEntry,
    GeneratorTable, RepName, TableDocument,
};
pub use theta::{liftable_twists, theta_word};
pub use verify::{check_relations, verify_relations, RelationCheck, RelationStatus};
