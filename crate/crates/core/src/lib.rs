//! Chain-level algebra on cubical and simplicial chains: the counit /
//! coproduct / degree-1-product structure, cup-i coproducts and Steenrod
//! squares, the comparison maps between cubes and simplices, and exact
//! homology over the integers and prime fields.

pub mod chain;
pub mod comparison;
pub mod complexes;
pub mod cubical;
pub mod error;
pub mod f2;
pub mod homology;
pub mod matrix;
pub mod perm;
pub mod ring;
pub mod simplicial;
pub mod steenrod;
pub mod suites;
pub mod sweep;
pub mod terms;

pub use chain::{FreeElement, Graded, TensorWord};
pub use error::Error;
pub use ring::Ring;
