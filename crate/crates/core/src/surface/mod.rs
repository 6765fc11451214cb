//! Generators, words and relations for mapping class groups of surfaces.

mod abelian;
mod dihedral;
mod generator;
mod relations;
mod translate;
mod word;

pub use abelian::{abelian_generators, abelianize, AbelianClass, AbelianGenerator};
pub use dihedral::{dihedral_eval, dihedral_image, DihedralElement};
pub use generator::{Generator, Surface};
pub(crate) use relations::check_genus_at_least;
pub use relations::{
    orientable_relations, relations_for, relations_with_reading, restricted_to, N4Reading,
    Relation, RelationFamily,
};
pub use translate::{iota_translate, special_word};
pub use word::{Letter, Word};
