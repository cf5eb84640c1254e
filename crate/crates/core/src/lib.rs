//! Parity game solving with attractor decompositions and universal trees.

pub mod attractor;
pub mod decomposition;
pub mod game;
pub mod io;
pub mod solvers;
pub mod symbolic;
pub mod trees;
