pub mod bounds;
pub mod gen;
pub mod minimax;
pub mod solve;
pub mod table;
