//! Cycle structure of linear feedback shift registers over finite fields.
//!
//! Given a characteristic polynomial `f` over GF(q), the state space
//! GF(q)^deg f splits into disjoint cycles under the register's state
//! transition. This crate computes that decomposition from the
//! factorization of `f`, lists one state per cycle with its period,
//! and decides whether two states share a cycle.
//!
//! ```
//! use lfsr_cycles::{Field, parse::parse_poly, structure::enumerate_cycles, Options};
//!
//! let f = Field::prime(3).unwrap();
//! let g = parse_poly("x^3+2x+2", &f).unwrap();
//! let cs = enumerate_cycles(&g, &f, &Options::default()).unwrap();
//! assert_eq!(cs.classes.len(), 3);
//! ```

pub mod arith;
pub mod error;
pub mod ext;
pub mod gf;
pub mod irreducible;
pub mod lfsr;
pub mod lifting;
pub mod matrix;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod structure;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use lfsr::{Lfsr, LfsrState, Sequence};
pub use matrix::Matrix;
pub use poly::{FactoredPoly, Poly};

/// Tunables shared by the analysis entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest trial divisor used when factoring integers such as `q^n - 1`.
    pub factor_cap: u64,
    /// Seed of the randomized polynomial splitting step.
    pub seed: u64,
    /// Above this many states, cycle classes skip the lexicographically least
    /// representative.
    pub canonical_cap: u64,
    /// Largest state space the brute-force oracle will walk.
    pub oracle_cap: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            factor_cap: arith::DEFAULT_FACTOR_CAP,
            seed: poly::DEFAULT_FACTOR_SEED,
            canonical_cap: 1 << 20,
            oracle_cap: 1 << 22,
        }
    }
}
