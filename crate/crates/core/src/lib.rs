//! Multivariate Tutte polynomials of small complex-weighted graphs, their
//! zeros in `q`, and the zero-free discs that bound them.

mod dsu;
pub mod bounds;
pub mod catalog;
pub mod counting;
pub mod error;
pub mod graph;
pub mod io;
pub mod lambert;
mod optimize;
pub mod penrose;
pub mod polymer;
pub mod roots;
pub mod sampling;
pub mod subset;
pub mod tutte;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use graph::{degree_quantities, DegreeQuantities, EdgeWeightView, WeightMode, WeightedGraph};
pub use num_complex::Complex64;
pub use subset::EdgeSubset;
pub use tutte::{z_eval, z_polynomial, QPolynomial};
pub use zeros::{analyze, ZeroFreeReport};

/// The guide in `book/`, compiled so its code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/penrose.md")]
    mod penrose {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/polymer.md")]
    mod polymer {}
    #[doc = include_str!("../../../book/src/zeros.md")]
    mod zeros {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
