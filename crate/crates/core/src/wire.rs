//! Binary envelope and text armor for keys and ciphertexts.
//!
//! ```text
//! "ECS1" | version 0x01 | kind | curve id | body
//! ```
//!
//! | kind | body |
//! |------|------|
//! | 0x01 public key  | compress(C) compress(D) compress(H) |
//! | 0x02 private key | x1 x2 y1 y2 z, fixed-width big-endian |
//! | 0x03 ciphertext  | total (u32 BE), then U1 U2 E V per chunk, compressed |
//!
//! Compressed points are `0x00` for the identity and `0x02|0x03 || x`
//! otherwise, so ciphertext chunks are read point by point. Every parse
//! failure is a [`ParseError`].

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use thiserror::Error;

use crate::bigint::U256;
use crate::curve::{CurveId, CurveParams, CurvePoint};
use crate::ecs::{Ciphertext, CiphertextChunk, PrivateKey, PublicKey};

pub const MAGIC: &[u8; 4] = b"ECS1";
pub const VERSION: u8 = 0x01;
/// Magic, version, kind and curve id.
pub const HEADER_LEN: usize = 7;

const ARMOR_WIDTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub &'static str);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Kind {
    PublicKey = 0x01,
    PrivateKey = 0x02,
    Ciphertext = 0x03,
}

impl Kind {
    pub fn from_byte(b: u8) -> Option<Kind> {
        match b {
            0x01 => Some(Kind::PublicKey),
            0x02 => Some(Kind::PrivateKey),
            0x03 => Some(Kind::Ciphertext),
            _ => None,
        }
    }

    /// Armor label, e.g. `ECCS PUBLIC KEY`.
    pub fn label(self) -> &'static str {
        match self {
            Kind::PublicKey => "ECCS PUBLIC KEY",
            Kind::PrivateKey => "ECCS PRIVATE KEY",
            Kind::Ciphertext => "ECCS MESSAGE",
        }
    }

    pub fn from_label(label: &str) -> Option<Kind> {
        [Kind::PublicKey, Kind::PrivateKey, Kind::Ciphertext].into_iter().find(|k| k.label() == label)
    }
}

/// Any parsed envelope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    PublicKey(PublicKey),
    PrivateKey(PrivateKey),
    Ciphertext(Ciphertext),
}

impl Artifact {
    pub fn kind(&self) -> Kind {
        match self {
            Artifact::PublicKey(_) => Kind::PublicKey,
            Artifact::PrivateKey(_) => Kind::PrivateKey,
            Artifact::Ciphertext(_) => Kind::Ciphertext,
        }
    }

    pub fn curve(&self) -> CurveId {
        match self {
            Artifact::PublicKey(k) => k.curve(),
            Artifact::PrivateKey(k) => k.curve(),
            Artifact::Ciphertext(c) => c.curve(),
        }
    }
}

fn header(kind: Kind, curve: CurveId) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN);
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(kind as u8);
    out.push(curve as u8);
    out
}

/// Reads the envelope header and returns kind, curve parameters and body.
pub fn parse_header(bytes: &[u8]) -> Result<(Kind, &'static CurveParams, &[u8]), ParseError> {
    if bytes.len() < HEADER_LEN {
        return Err(ParseError("truncated header"));
    }
    if &bytes[..4] != MAGIC {
        return Err(ParseError("bad magic"));
    }
    if bytes[4] != VERSION {
        return Err(ParseError("unsupported version"));
    }
    let kind = Kind::from_byte(bytes[5]).ok_or(ParseError("unknown kind"))?;
    let curve = CurveId::from_byte(bytes[6]).ok_or(ParseError("unknown curve"))?;
    Ok((kind, curve.params(), &bytes[HEADER_LEN..]))
}

fn expect_kind(bytes: &[u8], want: Kind) -> Result<(&'static CurveParams, &[u8]), ParseError> {
    let (kind, params, body) = parse_header(bytes)?;
    if kind != want {
        return Err(ParseError("unexpected kind"));
    }
    Ok((params, body))
}

/// Sequential reader over a body.
struct Reader<'a> {
    rest: &'a [u8],
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], ParseError> {
        if self.rest.len() < n {
            return Err(ParseError("truncated body"));
        }
        let (head, tail) = self.rest.split_at(n);
        self.rest = tail;
        Ok(head)
    }

    fn point(&mut self, params: &CurveParams) -> Result<CurvePoint, ParseError> {
        let len = match self.rest.first() {
            Some(0x00) => 1,
            Some(_) => params.point_len(),
            None => return Err(ParseError("truncated body")),
        };
        params.decompress(self.take(len)?).map_err(|_| ParseError("invalid point"))
    }

    fn finish(self) -> Result<(), ParseError> {
        if self.rest.is_empty() {
            Ok(())
        } else {
            Err(ParseError("trailing bytes"))
        }
    }
}

pub fn serialize_public_key(pk: &PublicKey) -> Vec<u8> {
    let params = pk.curve().params();
    let mut out = header(Kind::PublicKey, pk.curve());
    for p in [pk.c(), pk.d(), pk.h()] {
        out.extend_from_slice(&params.compress(p));
    }
    out
}

pub fn parse_public_key(bytes: &[u8]) -> Result<PublicKey, ParseError> {
    let (params, body) = expect_kind(bytes, Kind::PublicKey)?;
    let mut r = Reader { rest: body };
    let c = r.point(params)?;
    let d = r.point(params)?;
    let h = r.point(params)?;
    r.finish()?;
    PublicKey::from_points(params, c, d, h).map_err(|_| ParseError("invalid public key"))
}

pub fn serialize_private_key(sk: &PrivateKey) -> Vec<u8> {
    let width = sk.curve().params().scalar_len();
    let mut out = header(Kind::PrivateKey, sk.curve());
    for s in sk.scalars() {
        out.extend_from_slice(&s.to_be_bytes_width(width));
    }
    out
}

pub fn parse_private_key(bytes: &[u8]) -> Result<PrivateKey, ParseError> {
    let (params, body) = expect_kind(bytes, Kind::PrivateKey)?;
    let width = params.scalar_len();
    if body.len() != 5 * width {
        return Err(ParseError("private key body has wrong length"));
    }
    let mut scalars = [U256::ZERO; 5];
    for (s, bytes) in scalars.iter_mut().zip(body.chunks(width)) {
        *s = U256::from_be_slice(bytes).ok_or(ParseError("scalar too wide"))?;
    }
    let key = PrivateKey::from_scalars(params, scalars).map_err(|_| ParseError("scalar out of range"));
    zeroize::Zeroize::zeroize(&mut scalars);
    key
}

pub fn serialize_ciphertext(ct: &Ciphertext) -> Vec<u8> {
    let params = ct.curve().params();
    let mut out = header(Kind::Ciphertext, ct.curve());
    out.extend_from_slice(&ct.total().to_be_bytes());
    for chunk in ct.chunks() {
        for p in chunk.points() {
            out.extend_from_slice(&params.compress(&p));
        }
    }
    out
}

pub fn parse_ciphertext(bytes: &[u8]) -> Result<Ciphertext, ParseError> {
    let (params, body) = expect_kind(bytes, Kind::Ciphertext)?;
    let mut r = Reader { rest: body };
    let total = u32::from_be_bytes(r.take(4)?.try_into().expect("4 bytes")) as usize;
    if total == 0 {
        return Err(ParseError("ciphertext declares zero chunks"));
    }
    // each chunk needs at least four bytes
    if total > r.rest.len() / 4 {
        return Err(ParseError("declared chunk count exceeds body"));
    }
    let mut chunks = Vec::with_capacity(total);
    for _ in 0..total {
        let u1 = r.point(params)?;
        let u2 = r.point(params)?;
        let e = r.point(params)?;
        let v = r.point(params)?;
        chunks.push(CiphertextChunk { u1, u2, e, v });
    }
    r.finish()?;
    Ciphertext::new(params.id(), chunks).map_err(|_| ParseError("invalid chunk count"))
}

pub fn serialize(artifact: &Artifact) -> Vec<u8> {
    match artifact {
        Artifact::PublicKey(k) => serialize_public_key(k),
        Artifact::PrivateKey(k) => serialize_private_key(k),
        Artifact::Ciphertext(c) => serialize_ciphertext(c),
    }
}

/// Parses an envelope of any kind.
pub fn parse(bytes: &[u8]) -> Result<Artifact, ParseError> {
    let (kind, _, _) = parse_header(bytes)?;
    Ok(match kind {
        Kind::PublicKey => Artifact::PublicKey(parse_public_key(bytes)?),
        Kind::PrivateKey => Artifact::PrivateKey(parse_private_key(bytes)?),
        Kind::Ciphertext => Artifact::Ciphertext(parse_ciphertext(bytes)?),
    })
}

fn begin_line(label: &str) -> String {
    format!("-----BEGIN {label}-----")
}

fn end_line(label: &str) -> String {
    format!("-----END {label}-----")
}

/// Base64 text between BEGIN/END lines, 64 columns per line, trailing
/// newline.
pub fn armor(bytes: &[u8], label: &str) -> String {
    let body = STANDARD.encode(bytes);
    let mut out = begin_line(label);
    out.push('\n');
    for line in body.as_bytes().chunks(ARMOR_WIDTH) {
        out.push_str(std::str::from_utf8(line).expect("base64 is ascii"));
        out.push('\n');
    }
    out.push_str(&end_line(label));
    out.push('\n');
    out
}

/// Strict inverse of [`armor`]: returns the label and the decoded bytes.
/// Rejects text before or after the block, mismatched labels, lines wider
/// than 64 columns, invalid base64 and an empty body.
pub fn dearmor(text: &str) -> Result<(String, Vec<u8>), ParseError> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let first = lines.next().ok_or(ParseError("empty armor"))?;
    let label = first
        .strip_prefix("-----BEGIN ")
        .and_then(|s| s.strip_suffix("-----"))
        .filter(|l| !l.is_empty())
        .ok_or(ParseError("missing BEGIN line"))?;
    let end = end_line(label);
    let mut body = String::new();
    let mut closed = false;
    for line in lines.by_ref() {
        if line == end {
            closed = true;
            break;
        }
        if line.len() > ARMOR_WIDTH {
            return Err(ParseError("armor line too long"));
        }
        body.push_str(line);
    }
    if !closed {
        return Err(ParseError("missing END line"));
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(ParseError("text after END line"));
    }
    if body.is_empty() {
        return Err(ParseError("empty armor body"));
    }
    let bytes = STANDARD.decode(body.as_bytes()).map_err(|_| ParseError("invalid base64"))?;
    Ok((label.to_string(), bytes))
}

/// [`dearmor`] that also requires a particular label.
pub fn dearmor_expect(text: &str, label: &str) -> Result<Vec<u8>, ParseError> {
    let (found, bytes) = dearmor(text)?;
    if found != label {
        return Err(ParseError("armor label mismatch"));
    }
    Ok(bytes)
}

/// Armors an artifact under its kind's label.
pub fn armor_artifact(artifact: &Artifact) -> String {
    armor(&serialize(artifact), artifact.kind().label())
}

/// Accepts raw envelope bytes or armored text. Armor is recognised by its
/// BEGIN line; the label must agree with the envelope kind.
pub fn parse_auto(input: &[u8]) -> Result<Artifact, ParseError> {
    if input.starts_with(MAGIC) {
        return parse(input);
    }
    let text = std::str::from_utf8(input).map_err(|_| ParseError("neither envelope nor armor"))?;
    let (label, bytes) = dearmor(text.trim_start())?;
    let artifact = parse(&bytes)?;
    if Kind::from_label(&label) != Some(artifact.kind()) {
        return Err(ParseError("armor label mismatch"));
    }
    Ok(artifact)
}
