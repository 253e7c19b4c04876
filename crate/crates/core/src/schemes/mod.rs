//! Association schemes: relation partitions built from codes and cosets,
//! an exact verifier that counts every intersection number, the derived
//! parameter sets (eigenmatrices, Krein parameters, multiplicities), the
//! closed-form three- and four-class families, and the formal duality
//! between the codeword and coset sides.

pub mod closed;
pub mod duality;
pub mod parameters;
pub mod partition;
pub mod verify;

pub use closed::{closed_form, ClosedFormFamily, SchemeFamily};
pub use duality::{
    coset_scheme_partition, dual_character_row, kerdock_relation_weights,
    kerdock_scheme_partition, rho_matrices, verify_duality,
};
pub use parameters::SchemeParameters;
pub use partition::{relations_from_values, RelationPartition};
pub use verify::verify_scheme;
