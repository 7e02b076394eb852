//! Exact subgroup counting for the abelian groups `Z_m x Z_n x Z_r x Z_s`.
//!
//! The counts are obtained from Goursat's lemma applied to the split
//! `(Z_m x Z_n) x (Z_r x Z_s)`: every subgroup of the product is described by
//! a subgroup and a quotient on each side together with an isomorphism between
//! the two quotients. The library provides
//!
//! * [`numth`]: factorization, divisors, totients and multiplicative lifting,
//! * [`polynomial`]: exact integer polynomials in the prime `p`,
//! * [`goursat2`]: the rank-two subgroup parametrization and counts,
//! * [`rank4`]: integer and polynomial counts for the rank-four product,
//! * [`oracle`]: brute-force subgroup census and Smith normal form, used as
//!   independent ground truth.
//!
//! All counts are arbitrary-precision [`BigUint`](num_bigint::BigUint) values.

pub mod error;
pub mod goursat2;
pub mod numth;
pub mod oracle;
pub mod polynomial;
pub mod rank4;

pub use error::{Error, Result};
pub use goursat2::{AbelianPair, SubgroupDescriptor};
pub use numth::Factorization;
pub use polynomial::IntPolynomial;
