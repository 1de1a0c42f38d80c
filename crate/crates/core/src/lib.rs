pub mod arith;
pub mod delta;
pub mod functors;
pub mod knots;
pub mod m2;
pub mod report;
pub mod triangulation;
