//! Exact computations with the reduced enveloping algebras `U_χ(sl2)` in odd
//! characteristic: block decomposition by central idempotents, PBW-type
//! filtrations on blocks, the Frobenius neighbourhood of the nilpotent cone,
//! and the adjoint representation of each block.
//!
//! ```
//! use std::sync::Arc;
//! use sl2_blocks::{blocks, Character, PrimeField, PrimeP, ReducedEnveloping, WeightLayout};
//!
//! let field = PrimeField::new(PrimeP::new(5)?);
//! let alg = ReducedEnveloping::new(field, Character::Zero)?;
//! let layout = Arc::new(WeightLayout::new(&alg));
//! let dims: Vec<usize> = blocks::blocks(&alg, &layout)?.iter().map(|b| b.dim()).collect();
//! assert_eq!(dims, [25, 50, 50]);
//! # Ok::<(), sl2_blocks::Error>(())
//! ```

pub mod blocks;
pub mod error;
pub mod ffield;
pub mod filt;
pub mod linalg;
pub mod nilcone;
pub mod pbw;
pub mod repdec;
pub mod weights;

pub use blocks::{Block, BlockLabel, Coinvariants};
pub use error::{Error, Result};
pub use ffield::{ArtinSchreierField, ExtElem, Field, Poly, PrimeField, PrimeP};
pub use filt::{Filtration, FiltrationKind, FiltrationTable, GramForm};
pub use linalg::{Matrix, QuotientBasis, Subspace};
pub use nilcone::NilconeRing;
pub use pbw::{AlgElem, Character, Generator, Monomial, ReducedEnveloping};
pub use repdec::{CompositionTally, ModuleAction};
pub use weights::{GradedSubspace, WeightLayout};
