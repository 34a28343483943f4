//! Harness library for the braid3 toolkit: seeded generators, exhaustive
//! enumeration, brute-force conjugacy search, the piecewise-linear arc
//! oracle and the conjugacy benchmark.

pub mod alloc_track;
pub mod bench;
pub mod brute;
pub mod enumerate;
pub mod pl;
pub mod random;
pub mod suites;
