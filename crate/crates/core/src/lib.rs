//! Deutsch paths: lattice paths with unit up-steps and down-steps of any
//! size, counted three independent ways (exhaustive enumeration, the
//! mountain-by-mountain slice recurrence, and closed-form generating
//! functions from the kernel method) so that each route checks the others.

pub mod fps;
pub mod paths;
pub mod slices;
pub mod closedforms;
pub mod asymptotics;
pub mod cli;
