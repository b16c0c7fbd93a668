//! Short-Weierstrass curves `y^2 = x^3 + ax + b` over a prime field.
//!
//! Points cross the API in affine form ([`CurvePoint`]) with canonical
//! coordinates. Internally, additions and the scalar ladder run on
//! projective coordinates with the complete addition law of Renes,
//! Costello and Batina (2016, Algorithm 1), which handles the identity,
//! doubling and inverse pairs without branching. Completeness requires a
//! curve of odd order; every curve accepted here has prime order.
//!
//! The registry ships two curves: secp256k1 and a desk-scale toy curve
//! small enough for exhaustive checks.

#![allow(non_snake_case)]

use std::fmt;
use std::sync::LazyLock;

use sha3::{Digest, Sha3_256};
use subtle::{Choice, ConditionallySelectable};
use thiserror::Error;

use crate::bigint::U256;
use crate::field::{is_probable_prime, FieldError, PrimeField, PRIMALITY_ROUNDS};
use crate::metrics;

/// Domain tag for deriving the second generator; the curve id byte is
/// appended.
pub const G2_DOMAIN_TAG: &[u8] = b"ECCS-G2-v1";

/// Smallest field prime considered by [`toy_curve_search`].
pub const TOY_SEARCH_START: u64 = 1009;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("point is not on the curve")]
    OffCurve,
    #[error("malformed point encoding")]
    Encoding,
    #[error("scalar is not below the group order")]
    ScalarOutOfRange,
    #[error("curve parameters are invalid: {0}")]
    InvalidParams(&'static str),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Registry identifier, also the curve byte of every envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum CurveId {
    Secp256k1 = 0x01,
    Toy = 0x7F,
}

impl CurveId {
    pub const ALL: [CurveId; 2] = [CurveId::Secp256k1, CurveId::Toy];

    pub fn from_byte(b: u8) -> Option<CurveId> {
        CurveId::ALL.into_iter().find(|c| *c as u8 == b)
    }

    pub fn from_name(name: &str) -> Option<CurveId> {
        CurveId::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(name))
    }

    pub fn name(self) -> &'static str {
        match self {
            CurveId::Secp256k1 => "secp256k1",
            CurveId::Toy => "toy",
        }
    }

    /// The frozen registry parameters.
    pub fn params(self) -> &'static CurveParams {
        match self {
            CurveId::Secp256k1 => &SECP256K1,
            CurveId::Toy => &TOY,
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A curve point: the identity or an affine pair of canonical coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Identity,
    Affine { x: U256, y: U256 },
}

impl CurvePoint {
    pub fn is_identity(&self) -> bool {
        matches!(self, CurvePoint::Identity)
    }

    pub fn x(&self) -> Option<U256> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine { x, .. } => Some(*x),
        }
    }

    pub fn y(&self) -> Option<U256> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine { y, .. } => Some(*y),
        }
    }
}

/// Projective (X:Y:Z) in Montgomery form; the identity is (0:1:0).
#[derive(Clone, Copy, Debug)]
struct Projective {
    X: U256,
    Y: U256,
    Z: U256,
}

impl ConditionallySelectable for Projective {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        Projective {
            X: U256::conditional_select(&a.X, &b.X, choice),
            Y: U256::conditional_select(&a.Y, &b.Y, choice),
            Z: U256::conditional_select(&a.Z, &b.Z, choice),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParams {
    id: CurveId,
    base: PrimeField,
    scalar: PrimeField,
    a: U256,
    b: U256,
    a_mont: U256,
    b3_mont: U256,
    g1: CurvePoint,
    g2: CurvePoint,
}

impl CurveParams {
    /// Validates the curve and G1, then derives G2 with
    /// [`derive_g2`] under the tag `G2_DOMAIN_TAG || id`.
    pub fn new(id: CurveId, p: U256, a: U256, b: U256, n: U256, g1: CurvePoint) -> Result<Self, CurveError> {
        let base = PrimeField::new(p)?;
        let scalar = PrimeField::new(n)?;
        let mut params = Self::assemble(id, base, scalar, a, b, g1, CurvePoint::Identity)?;
        params.check_generator(&g1)?;
        params.g2 = derive_g2(&params, &g2_tag(id));
        Ok(params)
    }

    /// Validates a fully specified parameter set. Both generators must be
    /// on the curve, not the identity, and of order n.
    pub fn with_generators(
        id: CurveId,
        p: U256,
        a: U256,
        b: U256,
        n: U256,
        g1: CurvePoint,
        g2: CurvePoint,
    ) -> Result<Self, CurveError> {
        let base = PrimeField::new(p)?;
        let scalar = PrimeField::new(n)?;
        Self::validated(id, base, scalar, a, b, g1, g2)
    }

    fn validated(
        id: CurveId,
        base: PrimeField,
        scalar: PrimeField,
        a: U256,
        b: U256,
        g1: CurvePoint,
        g2: CurvePoint,
    ) -> Result<Self, CurveError> {
        let params = Self::assemble(id, base, scalar, a, b, g1, g2)?;
        params.check_generator(&g1)?;
        params.check_generator(&g2)?;
        Ok(params)
    }

    fn assemble(
        id: CurveId,
        base: PrimeField,
        scalar: PrimeField,
        a: U256,
        b: U256,
        g1: CurvePoint,
        g2: CurvePoint,
    ) -> Result<Self, CurveError> {
        let fa = base.element(&a)?;
        let fb = base.element(&b)?;
        // 4a^3 + 27b^2 != 0
        let disc = base
            .from_u64(4)
            .mul(&fa.square().mul(&fa)?)?
            .add(&base.from_u64(27).mul(&fb.square())?)?;
        if disc.is_zero() {
            return Err(CurveError::InvalidParams("singular curve"));
        }
        let m = base.mont();
        let b_mont = m.to_mont(&b);
        let b3_mont = m.add(&m.add(&b_mont, &b_mont), &b_mont);
        Ok(CurveParams { id, a_mont: m.to_mont(&a), b3_mont, base, scalar, a, b, g1, g2 })
    }

    fn check_generator(&self, g: &CurvePoint) -> Result<(), CurveError> {
        if g.is_identity() || !self.is_on_curve(g) {
            return Err(CurveError::InvalidParams("generator not on curve"));
        }
        if !self.has_group_order(g) {
            return Err(CurveError::InvalidParams("generator does not have order n"));
        }
        Ok(())
    }

    /// `n * P == identity`, computed without touching the counters.
    fn has_group_order(&self, P: &CurvePoint) -> bool {
        let n = *self.scalar.modulus();
        let r = self.ladder(&self.to_projective(P), &n, n.bits());
        self.normalize(&r).is_identity()
    }

    pub fn id(&self) -> CurveId {
        self.id
    }

    /// Coordinate field F_p.
    pub fn base_field(&self) -> &PrimeField {
        &self.base
    }

    /// Scalars modulo the group order n.
    pub fn scalar_field(&self) -> &PrimeField {
        &self.scalar
    }

    pub fn p(&self) -> &U256 {
        self.base.modulus()
    }

    pub fn order(&self) -> &U256 {
        self.scalar.modulus()
    }

    pub fn a(&self) -> &U256 {
        &self.a
    }

    pub fn b(&self) -> &U256 {
        &self.b
    }

    pub fn g1(&self) -> &CurvePoint {
        &self.g1
    }

    pub fn g2(&self) -> &CurvePoint {
        &self.g2
    }

    /// Length of a compressed non-identity point.
    pub fn point_len(&self) -> usize {
        1 + self.base.byte_len()
    }

    /// Length of a fixed-width scalar.
    pub fn scalar_len(&self) -> usize {
        self.scalar.byte_len()
    }

    /// x^3 + ax + b in Montgomery form.
    fn rhs_mont(&self, x_mont: &U256) -> U256 {
        let m = self.base.mont();
        let x2 = m.square(x_mont);
        let x3 = m.mul(&x2, x_mont);
        let ax = m.mul(&self.a_mont, x_mont);
        m.add(&m.add(&x3, &ax), &m.to_mont(&self.b))
    }

    pub fn is_on_curve(&self, P: &CurvePoint) -> bool {
        match P {
            CurvePoint::Identity => true,
            CurvePoint::Affine { x, y } => {
                if x >= self.p() || y >= self.p() {
                    return false;
                }
                let m = self.base.mont();
                let ym = m.to_mont(y);
                m.square(&ym) == self.rhs_mont(&m.to_mont(x))
            }
        }
    }

    fn validate(&self, P: &CurvePoint) -> Result<(), CurveError> {
        if self.is_on_curve(P) {
            Ok(())
        } else {
            Err(CurveError::OffCurve)
        }
    }

    fn to_projective(&self, P: &CurvePoint) -> Projective {
        let m = self.base.mont();
        match P {
            CurvePoint::Identity => Projective { X: U256::ZERO, Y: m.one(), Z: U256::ZERO },
            CurvePoint::Affine { x, y } => Projective { X: m.to_mont(x), Y: m.to_mont(y), Z: m.one() },
        }
    }

    fn normalize(&self, P: &Projective) -> CurvePoint {
        let m = self.base.mont();
        // Whether the result is the identity is public.
        if P.Z == U256::ZERO {
            return CurvePoint::Identity;
        }
        let zinv = self.base.inv_mont(&P.Z);
        CurvePoint::Affine {
            x: m.from_mont(&m.mul(&P.X, &zinv)),
            y: m.from_mont(&m.mul(&P.Y, &zinv)),
        }
    }

    /// Complete projective addition, valid for all input pairs including
    /// P == Q and either operand being the identity.
    fn complete_add(&self, P: &Projective, Q: &Projective) -> Projective {
        let m = self.base.mont();
        let (a, b3) = (&self.a_mont, &self.b3_mont);
        let (X1, Y1, Z1) = (&P.X, &P.Y, &P.Z);
        let (X2, Y2, Z2) = (&Q.X, &Q.Y, &Q.Z);

        let mut t0 = m.mul(X1, X2);
        let mut t1 = m.mul(Y1, Y2);
        let mut t2 = m.mul(Z1, Z2);
        let mut t3 = m.add(X1, Y1);
        let mut t4 = m.add(X2, Y2);
        t3 = m.mul(&t3, &t4);
        t4 = m.add(&t0, &t1);
        t3 = m.sub(&t3, &t4);
        t4 = m.add(X1, Z1);
        let mut t5 = m.add(X2, Z2);
        t4 = m.mul(&t4, &t5);
        t5 = m.add(&t0, &t2);
        t4 = m.sub(&t4, &t5);
        t5 = m.add(Y1, Z1);
        let mut X3 = m.add(Y2, Z2);
        t5 = m.mul(&t5, &X3);
        X3 = m.add(&t1, &t2);
        t5 = m.sub(&t5, &X3);
        let mut Z3 = m.mul(a, &t4);
        X3 = m.mul(b3, &t2);
        Z3 = m.add(&X3, &Z3);
        X3 = m.sub(&t1, &Z3);
        Z3 = m.add(&t1, &Z3);
        let mut Y3 = m.mul(&X3, &Z3);
        t1 = m.add(&t0, &t0);
        t1 = m.add(&t1, &t0);
        t2 = m.mul(a, &t2);
        t4 = m.mul(b3, &t4);
        t1 = m.add(&t1, &t2);
        t2 = m.sub(&t0, &t2);
        t2 = m.mul(a, &t2);
        t4 = m.add(&t4, &t2);
        t0 = m.mul(&t1, &t4);
        Y3 = m.add(&Y3, &t0);
        t0 = m.mul(&t5, &t4);
        X3 = m.mul(&t3, &X3);
        X3 = m.sub(&X3, &t0);
        t0 = m.mul(&t3, &t1);
        Z3 = m.mul(&t5, &Z3);
        Z3 = m.add(&Z3, &t0);
        Projective { X: X3, Y: Y3, Z: Z3 }
    }

    /// Montgomery ladder over the low `bits` bits of `k`. The sequence of
    /// field operations depends only on `bits`.
    fn ladder(&self, P: &Projective, k: &U256, bits: u32) -> Projective {
        let m = self.base.mont();
        let mut r0 = Projective { X: U256::ZERO, Y: m.one(), Z: U256::ZERO };
        let mut r1 = *P;
        for i in (0..bits).rev() {
            let bit = Choice::from(k.bit(i) as u8);
            Projective::conditional_swap(&mut r0, &mut r1, bit);
            r1 = self.complete_add(&r0, &r1);
            r0 = self.complete_add(&r0, &r0);
            Projective::conditional_swap(&mut r0, &mut r1, bit);
        }
        r0
    }

    /// Group sum of two valid points.
    pub fn point_add(&self, P: &CurvePoint, Q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.validate(P)?;
        self.validate(Q)?;
        metrics::record(|c| c.point_adds += 1);
        Ok(self.normalize(&self.complete_add(&self.to_projective(P), &self.to_projective(Q))))
    }

    /// (x, y) -> (x, p - y); the identity maps to itself.
    pub fn point_negate(&self, P: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.validate(P)?;
        metrics::record(|c| c.negations += 1);
        Ok(match P {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine { x, y } => {
                let m = self.base.mont();
                CurvePoint::Affine { x: *x, y: m.neg(y) }
            }
        })
    }

    /// `k * P` for `0 <= k < n` with a fixed-length ladder of bits(n) steps.
    pub fn scalar_mult(&self, P: &CurvePoint, k: &U256) -> Result<CurvePoint, CurveError> {
        self.validate(P)?;
        if k >= self.order() {
            return Err(CurveError::ScalarOutOfRange);
        }
        metrics::record(|c| c.scalar_mults += 1);
        let bits = self.order().bits();
        Ok(self.normalize(&self.ladder(&self.to_projective(P), k, bits)))
    }

    /// Identity -> `[0x00]`; otherwise `0x02 | parity(y)` followed by the
    /// big-endian x coordinate at the field's byte width.
    pub fn compress(&self, P: &CurvePoint) -> Vec<u8> {
        match P {
            CurvePoint::Identity => vec![0x00],
            CurvePoint::Affine { x, y } => {
                let mut out = Vec::with_capacity(self.point_len());
                out.push(0x02 | (y.0[0] & 1) as u8);
                out.extend_from_slice(&x.to_be_bytes_width(self.base.byte_len()));
                out
            }
        }
    }

    pub fn decompress(&self, data: &[u8]) -> Result<CurvePoint, CurveError> {
        match data {
            [0x00] => Ok(CurvePoint::Identity),
            [prefix @ (0x02 | 0x03), xb @ ..] if data.len() == self.point_len() => {
                let x = U256::from_be_slice(xb).ok_or(CurveError::Encoding)?;
                if x >= *self.p() {
                    return Err(CurveError::Encoding);
                }
                let m = self.base.mont();
                let rhs = self.rhs_mont(&m.to_mont(&x));
                let y_even = self.base.reduce(&m.from_mont(&rhs)).sqrt().ok_or(CurveError::Encoding)?;
                let y_odd = y_even.neg();
                let want_odd = Choice::from(prefix & 1);
                let y = U256::conditional_select(&y_even.value(), &y_odd.value(), want_odd);
                let P = CurvePoint::Affine { x, y };
                // y = 0 has only the even encoding
                if self.compress(&P)[0] != *prefix {
                    return Err(CurveError::Encoding);
                }
                Ok(P)
            }
            _ => Err(CurveError::Encoding),
        }
    }

    /// Point with the given x and the even root, if x^3 + ax + b is a
    /// residue.
    pub fn lift_x(&self, x: &U256) -> Option<CurvePoint> {
        if x >= self.p() {
            return None;
        }
        let m = self.base.mont();
        let rhs = self.base.reduce(&m.from_mont(&self.rhs_mont(&m.to_mont(x))));
        let y = rhs.sqrt()?;
        Some(CurvePoint::Affine { x: *x, y: y.value() })
    }

    /// x^3 + ax + b for a canonical x, as an integer.
    pub fn rhs(&self, x: &U256) -> U256 {
        let m = self.base.mont();
        m.from_mont(&self.rhs_mont(&m.to_mont(x)))
    }
}

fn g2_tag(id: CurveId) -> Vec<u8> {
    let mut tag = G2_DOMAIN_TAG.to_vec();
    tag.push(id as u8);
    tag
}

/// Deterministic try-and-increment: for c = 0, 1, 2, ... take
/// `x = SHA3-256(domain_tag || c as u32 big-endian) mod p`; return the
/// first (x, even root) that lies on the curve with order n. Ignores any
/// G2 already present in `params`.
pub fn derive_g2(params: &CurveParams, domain_tag: &[u8]) -> CurvePoint {
    for counter in 0u32.. {
        let digest = Sha3_256::new()
            .chain_update(domain_tag)
            .chain_update(counter.to_be_bytes())
            .finalize();
        let x = params.base.reduce(&U256::from_be_bytes(&digest.into())).value();
        if let Some(P) = params.lift_x(&x) {
            if !P.is_identity() && params.has_group_order(&P) {
                return P;
            }
        }
    }
    unreachable!("counter space exhausted")
}

/// Finds the smallest prime p >= 1009 for which `y^2 = x^3 + 7` has prime
/// order, by exhaustive point counting. G1 is the point with the smallest x
/// and even y; G2 comes from [`derive_g2`].
pub fn toy_curve_search() -> CurveParams {
    let seven = U256::from_u64(7);
    let mut p = TOY_SEARCH_START;
    loop {
        let pu = U256::from_u64(p);
        if is_probable_prime(&pu, PRIMALITY_ROUNDS) {
            let field = PrimeField::new_unchecked(pu);
            let mut count = 1u64;
            let mut first_x = None;
            for x in 0..p {
                let x3 = field.from_u64(x).square().mul(&field.from_u64(x)).expect("same field");
                let rhs = x3.add(&field.from_u64(7)).expect("same field");
                if rhs.is_zero() {
                    count += 1;
                } else if rhs.is_qr() {
                    count += 2;
                    first_x.get_or_insert(x);
                }
            }
            if is_probable_prime(&U256::from_u64(count), PRIMALITY_ROUNDS) {
                let n = U256::from_u64(count);
                let scalar = PrimeField::new_unchecked(n);
                let mut params = CurveParams::assemble(
                    CurveId::Toy,
                    field,
                    scalar,
                    U256::ZERO,
                    seven,
                    CurvePoint::Identity,
                    CurvePoint::Identity,
                )
                .expect("x^3 + 7 is non-singular");
                let g1 = params
                    .lift_x(&U256::from_u64(first_x.expect("prime order curve has points")))
                    .expect("residue");
                params.g1 = g1;
                params.check_generator(&g1).expect("prime order");
                params.g2 = derive_g2(&params, &g2_tag(CurveId::Toy));
                return params;
            }
        }
        p += 1;
    }
}

pub mod constants {
    use crate::bigint::U256;

    pub const SECP256K1_P: U256 =
        U256::from_be_hex("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F");
    pub const SECP256K1_N: U256 =
        U256::from_be_hex("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141");
    pub const SECP256K1_B: U256 = U256::from_u64(7);
    pub const SECP256K1_G1X: U256 =
        U256::from_be_hex("79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798");
    pub const SECP256K1_G1Y: U256 =
        U256::from_be_hex("483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8");
    /// derive_g2 with tag "ECCS-G2-v1" || 0x01, counter 0.
    pub const SECP256K1_G2X: U256 =
        U256::from_be_hex("9b87df2b2083c5095c3bdaaeb321151e2be89c5b772dba9d711e2e86e5ad6076");
    pub const SECP256K1_G2Y: U256 =
        U256::from_be_hex("08554bf431efe0801349ceaf8498a33df168280a7d7eede3736bcdd909684e22");

    pub const TOY_P: u64 = 1051;
    pub const TOY_N: u64 = 1093;
    pub const TOY_B: u64 = 7;
    pub const TOY_G1: (u64, u64) = (3, 666);
    /// derive_g2 with tag "ECCS-G2-v1" || 0x7F, counter 3.
    pub const TOY_G2: (u64, u64) = (1033, 592);
}

fn registry(id: CurveId, p: U256, b: U256, n: U256, g1: (U256, U256), g2: (U256, U256)) -> CurveParams {
    CurveParams::validated(
        id,
        PrimeField::new_unchecked(p),
        PrimeField::new_unchecked(n),
        U256::ZERO,
        b,
        CurvePoint::Affine { x: g1.0, y: g1.1 },
        CurvePoint::Affine { x: g2.0, y: g2.1 },
    )
    .expect("registry constants are valid")
}

static SECP256K1: LazyLock<CurveParams> = LazyLock::new(|| {
    use constants::*;
    registry(
        CurveId::Secp256k1,
        SECP256K1_P,
        SECP256K1_B,
        SECP256K1_N,
        (SECP256K1_G1X, SECP256K1_G1Y),
        (SECP256K1_G2X, SECP256K1_G2Y),
    )
});

static TOY: LazyLock<CurveParams> = LazyLock::new(|| {
    use constants::*;
    let u = U256::from_u64;
    registry(
        CurveId::Toy,
        u(TOY_P),
        u(TOY_B),
        u(TOY_N),
        (u(TOY_G1.0), u(TOY_G1.1)),
        (u(TOY_G2.0), u(TOY_G2.1)),
    )
});
