//! Exact homology of the modular curve X_0(p): Manin presentation, Hecke
//! operators, star involution, intersection pairing and period symbols.

pub mod linalg;
pub mod manin;

pub use manin::{genus_x0, Cusp, ModSymSpace};
