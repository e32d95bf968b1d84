//! Exact maximum hook length of (s,t)-core partitions with d-distinct parts.
//!
//! When gcd(s,t) ≤ d there are finitely many such partitions, and the
//! largest possible hook length has a closed form. This crate evaluates the
//! closed form in exact 64-bit integer arithmetic, constructs the unique
//! inclusion-minimal partition achieving it, and ships a brute-force oracle
//! that re-derives the maximum independently for verification.
//!
//! - [`partitions`]: partitions, hook-length grids, β-sets, and the s-core /
//!   (s,t)-core / d-distinct predicates.
//! - [`core_poset`]: the poset of numerical-semigroup gaps, its totally
//!   ordered bottom edge, ledges, and the s̄/s̃ arithmetic.
//! - [`maxhook`]: the closed form, the optimal interval ideal, and witness
//!   construction.
//! - [`oracle`]: downward scans and exhaustive enumeration, sharing nothing
//!   with the closed-form path.
//!
//! ```
//! let result = dcores::max_hook(7, 10, 1).unwrap();
//! assert_eq!(result.h, 19);
//! assert_eq!(result.witness.parts(), &[15, 9, 7, 4, 2]);
//! ```

pub mod core_poset;
pub mod error;
pub mod maxhook;
pub mod oracle;
pub mod partitions;

pub use error::{Error, Result};
pub use maxhook::{max_hook, max_hook_coprime, witness_core, CaseTag, MaxHookResult};
pub use partitions::{BetaSet, HookGrid, Partition};
