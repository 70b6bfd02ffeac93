//! Exact Padé interpolation on the q-grid for the five q-Painlevé types.
//!
//! From a parameter pack the crate solves the interpolation problem, reads
//! the Painlevé variables `f`, `g` off Casorati determinants, and checks the
//! contiguity relations, evolution equations, Lax operators and tau-function
//! formulae as identities over the rationals.

pub mod arith;
pub mod casorati;
pub mod error;
pub mod evolution;
pub mod pade;
pub mod pipeline;
pub mod qseries;
pub mod report;
pub mod special;
pub mod systems;

pub use arith::{Matrix, Poly, Rat, RatFun};
pub use casorati::{CasoratiDets, D1Data, FGData, RelationKind, Step, Term, ThreeTermRelation};
pub use error::{Error, Result};
pub use evolution::{BasePoint, BasePointList, Coord, Locus, OrbitData, OrbitStep};
pub use pade::PadePair;
pub use pipeline::{InstanceConfig, RunOptions};
pub use qseries::QHyperSpec;
pub use report::{CheckRecord, Status, Summary, SweepReport, VerificationReport};
pub use special::{Prefactors, TauSpec};
pub use systems::{PainleveType, ParamId, Params, SystemData};
