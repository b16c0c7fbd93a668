//! Cramer-Shoup public-key encryption over prime-order short-Weierstrass
//! curves.
//!
//! Layers, bottom up:
//!
//! * [`field`]: constant-time arithmetic modulo a runtime prime.
//! * [`curve`]: the group law, the Montgomery ladder, point compression and
//!   the curve registry (secp256k1 and a desk-scale toy curve).
//! * [`codec`]: reversible embedding of byte chunks as curve points.
//! * [`ecs`]: key generation, encryption and validity-checked decryption.
//! * [`wire`]: the tagged binary envelope and its text armor.
//! * [`bench`]: timing and operation-count harness, with a textbook
//!   EC-ElGamal baseline.
//! * `oracle` (feature `oracle`): brute-force cross-checks on the toy curve.
//!
//! Randomness is always supplied by the caller.

pub mod bench;
pub mod bigint;
pub mod codec;
pub mod curve;
pub mod ecs;
pub mod field;
pub mod metrics;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod wire;

pub use bigint::U256;
pub use curve::{CurveId, CurveParams, CurvePoint};

pub use ecs::{Ciphertext, CiphertextChunk, PrivateKey, PublicKey};
