//! Divisor theory on finite and metric graphs in exact rational arithmetic.
//!
//! The crate covers chip-firing and reduced divisors, divisor rank and
//! Riemann–Roch, graph Jacobians, break divisors and the Brill–Noether
//! classification on generic chains of loops.

#![allow(clippy::needless_range_loop)]

pub mod break_divisors;
pub mod brill_noether;
pub mod burn;
pub mod chain;
pub mod divisor;
pub mod error;
pub mod families;
pub mod finite;
pub mod graph;
pub mod independence;
pub mod jacobian;
pub mod json;
pub mod metric;
pub mod orientation;
pub mod pl;
pub mod random;
pub mod rank;
pub mod rational;
pub mod torus;
pub mod worked;
pub mod zhang;

pub use divisor::Divisor;
pub use error::{Error, Result};
pub use graph::{EdgeId, FiniteGraph, GraphPoint, MetricGraph, VertexId};
pub use pl::PlFunction;
pub use rational::Rational;
