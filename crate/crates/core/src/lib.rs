//! Exact finite-dimensional Hopf algebra engine.
//!
//! Hopf algebras are given by structure constants over the cyclotomic field `Q(zeta_{4p})`.
//! On top of that the crate builds Drinfeld and Heisenberg doubles, Yetter-Drinfeld module
//! algebras with their braidings and braided products, Hopf-ideal truncations, and the Taft
//! algebra family leading to the restricted quantum group `U_q sl(2)` and its Heisenberg
//! counterpart. Every structural claim is checked mechanically and reported with witnesses.

pub mod algfile;
pub mod doubles;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod taft;
pub mod truncate;
pub mod ydcat;

pub use error::{Error, Result};
