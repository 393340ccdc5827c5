//! Combinatorial groupoids over simplicial and cubical complexes and game
//! boards: parallel transport, holonomy groups, and the obstructions they
//! yield for colorability, embeddability of cubical complexes and puzzle
//! reachability.

pub mod complex;
pub mod corpus;
pub mod games;
pub mod graph;
pub mod graphconn;
pub mod groupoid;
pub mod holonomy;
pub mod homcx;
pub mod io;
pub mod invariants;
pub mod perm;
