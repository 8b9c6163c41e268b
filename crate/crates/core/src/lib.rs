//! Representation theory of the 0-Ariki-Koike-Shoji algebras `AKS_{n,r}(0)`.
//!
//! Simple modules are labelled by cycloribbons and indecomposable projective
//! modules by colored compositions (equivalently anticycloribbons). Their
//! Grothendieck rings are the Poirier quasi-symmetric functions `QMR^(r)` and
//! the Mantaci-Reutenauer algebra `MR^(r)`, implemented in [`hopf`]. The
//! [`rep`] module turns products and maps in those rings into induction
//! products, Cartan and decomposition matrices, and [`oracle`] rebuilds the
//! algebra from its presentation to check all of it on small instances.
//!
//! ```
//! use cycloribbon::parse::parse_ribbon;
//! use cycloribbon::rep::{induce_simples, SimpleLabel};
//!
//! let a = SimpleLabel::new(parse_ribbon("1,1|2,1").unwrap()).unwrap();
//! let b = SimpleLabel::new(parse_ribbon("2|1,2").unwrap()).unwrap();
//! let factors = induce_simples(&a, &b);
//! assert_eq!(factors.iter().map(|(_, m)| m).sum::<u64>(), 6);
//! ```

pub mod composition;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod matrix;
pub mod oracle;
pub mod parse;
pub mod perm;
pub mod rep;
pub mod ribbon;

pub use composition::Composition;
pub use error::{Error, Result};
pub use linear::{LinComb, Tensor, Q};
pub use perm::{ColoredPermutation, InverseColors, ShuffleConvention};
pub use ribbon::{ColorWord, ColoredComposition, ColoredRibbon};
