//! Cramer-Shoup encryption over an elliptic curve.
//!
//! Keys: five secret scalars `x1, x2, y1, y2, z` in `[1, n-1]` and the
//! public points
//!
//! ```text
//! C = x1*G1 + x2*G2      D = y1*G1 + y2*G2      H = z*G1
//! ```
//!
//! Each message point `m` is encrypted under a fresh `r` as
//!
//! ```text
//! U1 = r*G1   U2 = r*G2   E = r*H + m
//! alpha = hash(header, U1, U2, E)
//! V = r*C + (r*alpha mod n)*D
//! ```
//!
//! Decryption recomputes `V' = (x1 + alpha*y1)*U1 + (x2 + alpha*y2)*U2`,
//! compares it with `V` in constant time, and only then releases
//! `E - z*U1`. Every failure surfaces as the same [`InvalidCiphertext`].
//!
//! `header` is the chunk index and chunk total (both `u32` big-endian), so
//! reordering, dropping or splicing chunks breaks the hash binding.

use std::fmt;

use rand_core::{CryptoRng, RngCore};
use sha3::{Digest, Sha3_256};
use subtle::{Choice, ConstantTimeEq};
use thiserror::Error;
use zeroize::{Zeroize, ZeroizeOnDrop};

use crate::bigint::U256;
use crate::codec::{self, ChunkLayout, CodecError};
use crate::curve::{CurveError, CurveId, CurveParams, CurvePoint};
use crate::metrics;

/// Prefix of every hashed alpha input.
pub const ALPHA_DOMAIN: &[u8] = b"ECCS-v1-alpha";

#[derive(Debug, Error)]
pub enum EcsError {
    #[error("randomness source failed: {0}")]
    Rng(#[from] rand_core::Error),
    #[error("key or ciphertext belongs to a different curve")]
    CurveMismatch,
    #[error("invalid key material")]
    InvalidKey,
    #[error("ciphertext must contain between 1 and 2^32 - 1 chunks")]
    ChunkCount,
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// The only error decryption reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("invalid ciphertext")]
pub struct InvalidCiphertext;

#[derive(Clone, Zeroize, ZeroizeOnDrop)]
pub struct PrivateKey {
    #[zeroize(skip)]
    curve: CurveId,
    x1: U256,
    x2: U256,
    y1: U256,
    y2: U256,
    z: U256,
}

impl PrivateKey {
    /// Scalars in the order `x1, x2, y1, y2, z`; each must lie in `[1, n-1]`.
    pub fn from_scalars(params: &CurveParams, scalars: [U256; 5]) -> Result<Self, EcsError> {
        let n = params.order();
        if scalars.iter().any(|s| *s == U256::ZERO || s >= n) {
            return Err(EcsError::InvalidKey);
        }
        let [x1, x2, y1, y2, z] = scalars;
        Ok(PrivateKey { curve: params.id(), x1, x2, y1, y2, z })
    }

    pub fn curve(&self) -> CurveId {
        self.curve
    }

    /// `x1, x2, y1, y2, z`.
    pub fn scalars(&self) -> [U256; 5] {
        [self.x1, self.x2, self.y1, self.y2, self.z]
    }

    pub fn z(&self) -> &U256 {
        &self.z
    }

    /// Recomputes the matching public key.
    pub fn public_key(&self, params: &CurveParams) -> Result<PublicKey, EcsError> {
        check_curve(params, self.curve)?;
        let c = combine(params, &self.x1, &self.x2)?;
        let d = combine(params, &self.y1, &self.y2)?;
        let h = params.scalar_mult(params.g1(), &self.z)?;
        PublicKey::from_points(params, c, d, h)
    }
}

impl ConstantTimeEq for PrivateKey {
    fn ct_eq(&self, other: &Self) -> Choice {
        Choice::from((self.curve == other.curve) as u8)
            & self.x1.ct_eq(&other.x1)
            & self.x2.ct_eq(&other.x2)
            & self.y1.ct_eq(&other.y1)
            & self.y2.ct_eq(&other.y2)
            & self.z.ct_eq(&other.z)
    }
}

impl PartialEq for PrivateKey {
    fn eq(&self, other: &Self) -> bool {
        self.ct_eq(other).into()
    }
}

impl Eq for PrivateKey {}

impl fmt::Debug for PrivateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrivateKey").field("curve", &self.curve).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublicKey {
    curve: CurveId,
    c: CurvePoint,
    d: CurvePoint,
    h: CurvePoint,
}

impl PublicKey {
    /// All three points must be on the curve and not the identity.
    pub fn from_points(params: &CurveParams, c: CurvePoint, d: CurvePoint, h: CurvePoint) -> Result<Self, EcsError> {
        if [c, d, h].iter().any(|p| p.is_identity() || !params.is_on_curve(p)) {
            return Err(EcsError::InvalidKey);
        }
        Ok(PublicKey { curve: params.id(), c, d, h })
    }

    pub fn curve(&self) -> CurveId {
        self.curve
    }

    pub fn c(&self) -> &CurvePoint {
        &self.c
    }

    pub fn d(&self) -> &CurvePoint {
        &self.d
    }

    pub fn h(&self) -> &CurvePoint {
        &self.h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CiphertextChunk {
    pub u1: CurvePoint,
    pub u2: CurvePoint,
    pub e: CurvePoint,
    pub v: CurvePoint,
}

impl CiphertextChunk {
    pub fn points(&self) -> [CurvePoint; 4] {
        [self.u1, self.u2, self.e, self.v]
    }
}

/// Ordered chunks; never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ciphertext {
    curve: CurveId,
    chunks: Vec<CiphertextChunk>,
}

impl Ciphertext {
    pub fn new(curve: CurveId, chunks: Vec<CiphertextChunk>) -> Result<Self, EcsError> {
        if chunks.is_empty() || u32::try_from(chunks.len()).is_err() {
            return Err(EcsError::ChunkCount);
        }
        Ok(Ciphertext { curve, chunks })
    }

    pub fn curve(&self) -> CurveId {
        self.curve
    }

    pub fn chunks(&self) -> &[CiphertextChunk] {
        &self.chunks
    }

    pub fn total(&self) -> u32 {
        self.chunks.len() as u32
    }
}

fn check_curve(params: &CurveParams, curve: CurveId) -> Result<(), EcsError> {
    if params.id() == curve {
        Ok(())
    } else {
        Err(EcsError::CurveMismatch)
    }
}

/// `a*G1 + b*G2`.
fn combine(params: &CurveParams, a: &U256, b: &U256) -> Result<CurvePoint, CurveError> {
    let left = params.scalar_mult(params.g1(), a)?;
    let right = params.scalar_mult(params.g2(), b)?;
    params.point_add(&left, &right)
}

/// Uniform scalar in `[1, n-1]` by rejection sampling on bits(n)-bit
/// candidates.
pub fn random_scalar<R: RngCore + CryptoRng>(params: &CurveParams, rng: &mut R) -> Result<U256, EcsError> {
    let n = params.order();
    let len = params.scalar_len();
    let excess = 8 * len as u32 - n.bits();
    let mut buf = [0u8; 32];
    loop {
        rng.try_fill_bytes(&mut buf[32 - len..])?;
        buf[32 - len] &= 0xFF >> excess;
        let k = U256::from_be_bytes(&buf);
        if k != U256::ZERO && k < *n {
            buf.zeroize();
            return Ok(k);
        }
    }
}

/// Draws a key pair. Key sets whose C or D land on the identity are
/// redrawn.
pub fn keygen<R: RngCore + CryptoRng>(params: &CurveParams, rng: &mut R) -> Result<(PrivateKey, PublicKey), EcsError> {
    loop {
        let mut scalars = [U256::ZERO; 5];
        for s in scalars.iter_mut() {
            *s = random_scalar(params, rng)?;
        }
        let sk = PrivateKey::from_scalars(params, scalars)?;
        scalars.zeroize();
        match sk.public_key(params) {
            Ok(pk) => return Ok((sk, pk)),
            Err(EcsError::InvalidKey) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// Binds a chunk to its position: index and total, each `u32` big-endian.
pub fn chunk_header(index: u32, total: u32) -> [u8; 8] {
    let mut h = [0u8; 8];
    h[..4].copy_from_slice(&index.to_be_bytes());
    h[4..].copy_from_slice(&total.to_be_bytes());
    h
}

/// `SHA3-256(ALPHA_DOMAIN || curve id || header || U1 || U2 || E) mod n`
/// over compressed points.
pub fn hash_to_scalar(params: &CurveParams, header: &[u8], u1: &CurvePoint, u2: &CurvePoint, e: &CurvePoint) -> U256 {
    metrics::record(|c| c.hashes += 1);
    let digest = Sha3_256::new()
        .chain_update(ALPHA_DOMAIN)
        .chain_update([params.id() as u8])
        .chain_update(header)
        .chain_update(params.compress(u1))
        .chain_update(params.compress(u2))
        .chain_update(params.compress(e))
        .finalize();
    params.scalar_field().reduce(&U256::from_be_bytes(&digest.into())).value()
}

pub fn encrypt_chunk<R: RngCore + CryptoRng>(
    params: &CurveParams,
    pk: &PublicKey,
    message: &CurvePoint,
    header: &[u8],
    rng: &mut R,
) -> Result<CiphertextChunk, EcsError> {
    check_curve(params, pk.curve)?;
    let mut r = random_scalar(params, rng)?;
    let out = encrypt_with_nonce(params, pk, message, header, &r);
    r.zeroize();
    out
}

/// Encrypts with a caller-chosen nonce `r` in `[1, n-1]`. Test builds only.
#[cfg(any(test, feature = "test-hooks"))]
pub fn encrypt_chunk_with_nonce(
    params: &CurveParams,
    pk: &PublicKey,
    message: &CurvePoint,
    header: &[u8],
    r: &U256,
) -> Result<CiphertextChunk, EcsError> {
    check_curve(params, pk.curve)?;
    if *r == U256::ZERO || r >= params.order() {
        return Err(CurveError::ScalarOutOfRange.into());
    }
    encrypt_with_nonce(params, pk, message, header, r)
}

fn encrypt_with_nonce(
    params: &CurveParams,
    pk: &PublicKey,
    message: &CurvePoint,
    header: &[u8],
    r: &U256,
) -> Result<CiphertextChunk, EcsError> {
    let u1 = params.scalar_mult(params.g1(), r)?;
    let u2 = params.scalar_mult(params.g2(), r)?;
    let rh = params.scalar_mult(&pk.h, r)?;
    let e = params.point_add(&rh, message)?;
    let alpha = hash_to_scalar(params, header, &u1, &u2, &e);

    let scalars = params.scalar_field();
    let r_fe = scalars.reduce(r);
    let mut r_alpha = r_fe.mul(&scalars.reduce(&alpha)).expect("same field").value();
    let rc = params.scalar_mult(&pk.c, r)?;
    let rad = params.scalar_mult(&pk.d, &r_alpha)?;
    r_alpha.zeroize();
    let v = params.point_add(&rc, &rad)?;
    Ok(CiphertextChunk { u1, u2, e, v })
}

/// Verifies and opens one chunk. Performs the full computation and the
/// constant-time comparison of V before deciding.
pub fn decrypt_chunk(
    params: &CurveParams,
    sk: &PrivateKey,
    chunk: &CiphertextChunk,
    header: &[u8],
) -> Result<CurvePoint, InvalidCiphertext> {
    if sk.curve != params.id() {
        return Err(InvalidCiphertext);
    }
    // Structural checks look only at public ciphertext bytes.
    if !chunk.points().iter().all(|p| params.is_on_curve(p)) || chunk.u1.is_identity() || chunk.u2.is_identity() {
        return Err(InvalidCiphertext);
    }
    let alpha = hash_to_scalar(params, header, &chunk.u1, &chunk.u2, &chunk.e);

    let scalars = params.scalar_field();
    let alpha = scalars.reduce(&alpha);
    let fold = |x: &U256, y: &U256| {
        scalars.reduce(x).add(&alpha.mul(&scalars.reduce(y)).expect("same field")).expect("same field").value()
    };
    let mut s1 = fold(&sk.x1, &sk.y1);
    let mut s2 = fold(&sk.x2, &sk.y2);

    let opened = (|| -> Result<(Choice, CurvePoint), CurveError> {
        let a = params.scalar_mult(&chunk.u1, &s1)?;
        let b = params.scalar_mult(&chunk.u2, &s2)?;
        let v_check = params.point_add(&a, &b)?;
        let zu1 = params.scalar_mult(&chunk.u1, &sk.z)?;
        let m = params.point_add(&chunk.e, &params.point_negate(&zu1)?)?;
        let valid = params.compress(&v_check).as_slice().ct_eq(params.compress(&chunk.v).as_slice());
        Ok((valid, m))
    })();
    s1.zeroize();
    s2.zeroize();

    match opened {
        Ok((valid, m)) if bool::from(valid) => Ok(m),
        _ => Err(InvalidCiphertext),
    }
}

/// Encrypts a sequence of message points as one ciphertext.
pub fn encrypt_points<R: RngCore + CryptoRng>(
    params: &CurveParams,
    pk: &PublicKey,
    messages: &[CurvePoint],
    rng: &mut R,
) -> Result<Ciphertext, EcsError> {
    let total = u32::try_from(messages.len()).map_err(|_| EcsError::ChunkCount)?;
    let chunks = messages
        .iter()
        .enumerate()
        .map(|(i, m)| encrypt_chunk(params, pk, m, &chunk_header(i as u32, total), rng))
        .collect::<Result<Vec<_>, _>>()?;
    Ciphertext::new(params.id(), chunks)
}

/// Opens every chunk; any invalid chunk fails the whole ciphertext and no
/// point is released.
pub fn decrypt_points(params: &CurveParams, sk: &PrivateKey, ct: &Ciphertext) -> Result<Vec<CurvePoint>, InvalidCiphertext> {
    if ct.curve != params.id() {
        return Err(InvalidCiphertext);
    }
    let total = ct.total();
    let mut ok = true;
    let mut points = Vec::with_capacity(ct.chunks.len());
    for (i, chunk) in ct.chunks.iter().enumerate() {
        match decrypt_chunk(params, sk, chunk, &chunk_header(i as u32, total)) {
            Ok(m) => points.push(m),
            Err(_) => ok = false,
        }
    }
    if ok {
        Ok(points)
    } else {
        Err(InvalidCiphertext)
    }
}

/// Splits, embeds and encrypts a byte message.
pub fn encrypt<R: RngCore + CryptoRng>(
    params: &CurveParams,
    pk: &PublicKey,
    message: &[u8],
    rng: &mut R,
) -> Result<Ciphertext, EcsError> {
    check_curve(params, pk.curve)?;
    let layout = ChunkLayout::new(params)?;
    let points = codec::split_message(&layout, message)
        .iter()
        .map(|chunk| codec::encode_chunk(params, chunk))
        .collect::<Result<Vec<_>, _>>()?;
    encrypt_points(params, pk, &points, rng)
}

pub fn decrypt(params: &CurveParams, sk: &PrivateKey, ct: &Ciphertext) -> Result<Vec<u8>, InvalidCiphertext> {
    let points = decrypt_points(params, sk, ct)?;
    let chunks = points
        .iter()
        .map(|p| codec::decode_chunk(params, p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| InvalidCiphertext)?;
    Ok(codec::join_message(&chunks))
}
