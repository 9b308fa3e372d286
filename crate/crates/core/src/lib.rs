//! Exact-arithmetic structure theory of minimal parabolic subgroups with
//! abelian Levi component.
//!
//! The engine reconstructs, for every real simple Lie algebra whose minimal
//! parabolic has abelian Levi factor: the Satake diagram and restricted root
//! system with multiplicities, the maximal strongly orthogonal cascade and
//! the layer decomposition of the nilradical, Pfaffian and modular-function
//! data for the Plancherel and Fourier-inversion formulas, and the finite
//! component groups D_n and W_4 … W_8.  All arithmetic is exact; acceptance
//! is equality against curated reference tables, never tolerance.
//!
//! ```
//! use minparab::{cascade, satake};
//!
//! let id = satake::RealFormId::parse("split:G2")?;
//! let rrs = satake::restrict(&satake::satake_of(&id)?)?;
//! let decomp = cascade::decompose(&rrs)?;
//! assert_eq!(decomp.betas[0].coeffs, vec![3, 2]);
//! assert_eq!(decomp.d, vec![2, 0]);
//! assert_eq!(decomp.c.to_string(), "8");
//! # Ok::<(), minparab::Error>(())
//! ```

pub mod appendix;
pub mod cascade;
pub mod chevalley;
pub mod error;
pub mod groups;
pub mod latex;
pub mod report;
pub mod root;
pub mod satake;

pub use error::{Error, Result};
