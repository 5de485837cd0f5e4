//! Exact arithmetic for quantum SO(3) invariants of 3-manifolds given by
//! surgery on framed links.

pub mod cyclotomic;
pub mod error;
pub mod invariant;
pub mod laurent;
pub mod link;
pub mod par;
pub mod skein;

pub use cyclotomic::{CycElem, NormalForm, PrimeLevel};
pub use error::Error;
pub use laurent::{HPoly, LaurentPoly, Order};
pub use link::LinkDiagram;

