//! Embedding byte chunks into curve points.
//!
//! A chunk of at most `capacity` bytes is laid out big-endian in the low
//! `capacity + 2` bytes of an x coordinate:
//!
//! ```text
//! pad counter (1) | length (1) | message (length) | zero fill
//! ```
//!
//! The counter starts at 0 and is bumped until `x^3 + ax + b` is a
//! quadratic residue; the point is `(x, even root)`. Decoding reads the
//! length byte back and insists the fill is zero. `capacity` is
//! `floor((bits(p) - 16) / 8)`, 30 bytes on secp256k1. Curves with fewer
//! than 24 field bits (the toy curve) have no byte capacity at all.

use thiserror::Error;

use crate::bigint::U256;
use crate::curve::{CurveParams, CurvePoint};

/// Counter values tried before giving up.
const MAX_TRIALS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("curve field is too small to carry message bytes")]
    NoCapacity,
    #[error("chunk of {len} bytes exceeds capacity {capacity}")]
    TooLong { len: usize, capacity: usize },
    #[error("no residue found for any pad counter")]
    EncodingFailed,
    #[error("point does not carry an encoded chunk")]
    Decode,
}

/// Byte layout of one chunk for a given curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkLayout {
    capacity: usize,
    field_len: usize,
}

impl ChunkLayout {
    pub fn new(params: &CurveParams) -> Result<Self, CodecError> {
        let capacity = capacity(params);
        if capacity == 0 {
            return Err(CodecError::NoCapacity);
        }
        Ok(ChunkLayout { capacity, field_len: params.base_field().byte_len() })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Bytes of x actually used by the layout.
    fn width(&self) -> usize {
        self.capacity + 2
    }
}

/// Message bytes per point, `floor((bits(p) - 16) / 8)`, or 0 when the
/// field has fewer than 16 bits.
pub fn capacity(params: &CurveParams) -> usize {
    (params.base_field().bits().saturating_sub(16) / 8) as usize
}

pub fn encode_chunk(params: &CurveParams, data: &[u8]) -> Result<CurvePoint, CodecError> {
    let layout = ChunkLayout::new(params)?;
    if data.len() > layout.capacity {
        return Err(CodecError::TooLong { len: data.len(), capacity: layout.capacity });
    }
    let mut x_bytes = vec![0u8; layout.width()];
    x_bytes[1] = data.len() as u8;
    x_bytes[2..2 + data.len()].copy_from_slice(data);
    for counter in 0..MAX_TRIALS {
        x_bytes[0] = counter as u8;
        let x = U256::from_be_slice(&x_bytes).expect("layout fits 256 bits");
        // lift_x also rejects x >= p, which only a full-width layout can hit
        if let Some(point) = params.lift_x(&x) {
            return Ok(point);
        }
    }
    Err(CodecError::EncodingFailed)
}

pub fn decode_chunk(params: &CurveParams, point: &CurvePoint) -> Result<Vec<u8>, CodecError> {
    let layout = ChunkLayout::new(params)?;
    let x = point.x().ok_or(CodecError::Decode)?;
    let full = x.to_be_bytes_width(layout.field_len);
    let (high, x_bytes) = full.split_at(layout.field_len - layout.width());
    if high.iter().any(|&b| b != 0) {
        return Err(CodecError::Decode);
    }
    let len = x_bytes[1] as usize;
    if len > layout.capacity {
        return Err(CodecError::Decode);
    }
    let (message, fill) = x_bytes[2..].split_at(len);
    if fill.iter().any(|&b| b != 0) {
        return Err(CodecError::Decode);
    }
    Ok(message.to_vec())
}

/// Greedy split into capacity-sized chunks. An empty message is one empty
/// chunk.
pub fn split_message(layout: &ChunkLayout, data: &[u8]) -> Vec<Vec<u8>> {
    if data.is_empty() {
        return vec![Vec::new()];
    }
    data.chunks(layout.capacity).map(<[u8]>::to_vec).collect()
}

pub fn join_message<C: AsRef<[u8]>>(chunks: &[C]) -> Vec<u8> {
    chunks.iter().flat_map(|c| c.as_ref().iter().copied()).collect()
}
