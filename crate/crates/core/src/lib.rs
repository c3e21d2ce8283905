//! Exact symbolic analysis of polynomial map germs and their compositions.
//!
//! Given `F: (K^m,0) -> (K^p,0)` and `G: (K^p,0) -> (K^k,0)`, the crate
//! decides whether `F`, `G` and `H = G∘F` are tame, whether `F` is tamely
//! composable with `G`, and computes fibre-topology data (Milnor numbers,
//! vanishing-cell counts, Euler characteristics) for composed germs.
//!
//! Every set-germ statement is reduced to ideal membership questions that are
//! answered exactly with Gröbner bases (global orders) and Mora standard
//! bases (the local order at the origin).

pub mod error;
pub mod fiber;
pub mod germ;
pub mod ideal;
pub mod poly;
pub mod syntax;
pub mod tame;

pub use error::{Error, LimitKind, Result};
