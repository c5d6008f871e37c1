//! Sphere packings with large average kissing number.
//!
//! * [`geom`]: points, balls and conformal maps on S³, stereographic charts.
//! * [`packing`]: packings, validity, the tangency nerve and `k(P) = 2m/n`.
//! * [`construction`]: the 120-ball packing of S³, the contraction σ and the
//!   layered packings `Pₙ` whose average kissing number tends to 666/53.
//! * [`shell`]: the shell-area argument bounding `k(P)` by `8 + 4√3`.
//! * [`io`], [`report`]: packing files and the convergence table.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod construction;
pub mod error;
pub mod geom;
pub mod grid;
pub mod io;
pub mod packing;
pub mod report;
pub mod shell;

pub use error::{Error, Result};
