//! Bijective constructions on both path families.

pub mod ka;
pub mod nm;

pub use ka::{
    designated_hump, hump_grow, hump_shrink, phi, phi_inverse, psi_contract, psi_decompose, psi_expand, Anchor,
    BijectionTrace, PsiDecomposition, Segment,
};
pub use nm::{
    cyclic_class, dyck_representative, dyck_to_kary, kary_to_dyck, phi_hat, phi_hat_inverse, prepend_up,
    strip_first_up, BlockDecomposition, CyclicClass,
};
