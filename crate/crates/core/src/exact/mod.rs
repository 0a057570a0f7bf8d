//! Exact scalar arithmetic: rationals and the 8th cyclotomic field.

mod cyc;
pub mod linalg;
mod rational;

pub use cyc::CycEight;
pub use rational::Rational;
