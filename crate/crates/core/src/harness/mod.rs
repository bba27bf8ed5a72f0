//! Verification substrate: exhaustive enumeration of small structures, seeded random
//! operators, the law suite, Galois-embedding checks and counterexample search.

pub mod enumerate;
pub mod galois;
pub mod hunt;
pub mod laws;
pub mod random;
