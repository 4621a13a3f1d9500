pub mod codecs;
pub mod diagram;
pub mod invariants;
pub mod moves;
pub mod torus;
pub mod surgery;
pub mod geometry;
pub mod sampling;
pub mod cli;
