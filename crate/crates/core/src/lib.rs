//! Exact computation of two twisted 1-cocycles on the mapping class group
//! `M_{g,*}` of a closed oriented surface of genus `g >= 2` with a marked
//! point, with mapping classes presented as automorphisms of the free group
//! `F = F(A_1, ..., A_g, B_1, ..., B_g)`:
//!
//! - Morita's combinatorial cocycle `f: M_{g,*} -> H` ([`morita`]),
//! - Earle's cocycle `psi: M_{g,*} -> H / (2g-2)` ([`earle`]), obtained from
//!   `f` through `psi = -f/(2g-2) + delta a_0`.
//!
//! Cocycles follow the convention `Phi(ab) = rho(b)^-1 Phi(a) + Phi(b)`.

pub mod cli;
pub mod earle;
pub mod endomorphism;
pub mod error;
pub mod format;
pub mod freegroup;
pub mod homology;
pub mod morita;
pub mod report;
pub mod verify;

pub use earle::{a0, coboundary_a0, earle_psi, QVec};
pub use endomorphism::{in_m_g1, in_n, inner, jablow, random_element, twist_catalog, Auto, Endo, NWitness};
pub use error::{Error, Result};
pub use freegroup::{Generator, Letter, Surface, Word};
pub use homology::{abelianize, dual, induced_matrix, intersection, HVec, SpMat};
pub use morita::{d, d2, f_tilde, f_tilde_at, morita_f, project, syllables, TwoGenWord};
