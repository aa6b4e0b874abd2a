//! Random planar rooted trees with exponential height-dependent weight.

pub mod error;
