//! Unit ball graphs over exact, desk-scale models of geodesic spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`spaces`]: intervals, circles, metric graphs and L_p planes with exact
//!   rational distances, geodesic paths on trees, bridges and set distances.
//! * [`graphs`]: bit-set simple graphs, induced pattern search, Hamiltonian
//!   paths and JSON/DOT serialization.
//! * [`recognizers`]: chordal, strongly chordal, unit interval,
//!   Hamiltonian-hereditary and complete graph recognition with certificates.
//! * [`ubg`]: realizations, unit ball graph construction, the open/closed
//!   threshold calculus, scaling and the all-graphs space.
//! * [`witnesses`]: the constructive directions of the two characterization
//!   theorems (cycle and tripod witnesses, claw/net extraction from net-like
//!   graphs) and unit interval realizations.
//! * [`harness`]: randomized theorem suites with replayable seeds.

pub mod caps;
pub mod error;
pub mod graphs;
pub mod harness;
pub mod rational;
pub mod recognizers;
pub mod spaces;
pub mod ubg;
pub mod witnesses;

pub use error::{Error, Result};
pub use graphs::{Certificate, CertificateKind, Graph, Pattern};
pub use rational::{rat, Rational};
pub use spaces::{Distance, LpNorm, MetricGraph, PointRef, SpaceModel, TreePath};
pub use ubg::{Mode, Realization};
