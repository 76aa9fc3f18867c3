//! Frises of acyclic quivers, SL2-tilings of the discrete plane, and the
//! linear recurrences satisfied by their sequences.

pub mod cluster;
pub mod correspondence;
pub mod diagrams;
pub mod frises;
pub mod laurent;
pub mod recurrences;
pub mod report;
pub mod tilings;
pub mod word;
