//! Game models shipped with the engine, each with an exhaustive minimax
//! oracle that shares no code with the solver.

pub mod connect4;
pub mod matrix;
pub mod nim;

pub use connect4::{Connect4, Connect4Host};
pub use matrix::{Matrix, MatrixHost};
