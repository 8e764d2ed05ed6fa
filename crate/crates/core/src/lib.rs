//! Exact Reidemeister torsion for circle-valued Morse data.
//!
//! Everything is computed over `Z`, `Q` and their Laurent extensions with
//! arbitrary-precision coefficients; there is no floating point anywhere.
//! Power series carry an explicit precision so that every comparison knows
//! which coefficients it actually checked.

pub mod complexes;
pub mod cover;
pub mod exactalg;
pub mod instance;
pub mod matrices;
pub mod morse;
pub mod novikov;
pub mod orbits;
pub mod verify;
