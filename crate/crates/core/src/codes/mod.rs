//! Code constructions: Z4-linear Kerdock codes and their duals' coset
//! structure, Gray images, binary reference codes, and quadratic-form
//! utilities.

pub mod binary;
pub mod forms;
pub mod kerdock;
pub mod words;
pub mod z4code;

pub use binary::{
    anf_degree, build_binary_kerdock, build_punctured_simplex_14_4, build_simplex_15_4,
    gray_image, is_kerdock_like, BinaryCode,
};
pub use forms::{quadratic_form_stats, BinaryQuadraticForm, FormStats};
pub use kerdock::{
    build_full_z4_kerdock, build_shortened_kerdock, canonical_coset_representatives,
    doubled_unit_representatives, pair_sum_representatives, preparata_syndrome,
    signed_unit_representatives, t_r_eval, t_r_identity_holds, two_one_representatives,
    unit_difference_representatives, CosetClass, CosetClassifier, CosetTag,
};
pub use words::{
    gray_map, hamming_distance, lee_distance, lee_weight, z4_add, z4_dot, z4_sub, BinaryWord,
    Z4Word,
};
