//! Exact computer algebra for Malcev algebras and Moufang symmetry.
//!
//! * [`exact`]: rationals, prime fields, dense matrices.
//! * [`malcev`]: structure constants, relative representations, Lie(m)+ and Lie(m).
//! * [`enveloping`]: truncated U(Lie(m)) and the nonassociative envelope U(m).
//! * [`smash`]: the smash products k[V] ⊗ U(m) attached to relative representations.
//! * [`loops`]: finite loops, Moufang elements, Doro actions and loop extensions.

pub mod enveloping;
pub mod exact;
pub mod fixtures;
pub mod loops;
pub mod malcev;
pub mod par;
pub mod report;
pub mod smash;
pub mod sparse;
pub mod suite;
