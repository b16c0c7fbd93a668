//! Fixed-width 256-bit unsigned integers.
//!
//! Limbs are stored little-endian (`limbs[0]` is the least significant
//! word). Arithmetic helpers here never branch on limb values; comparisons
//! that do (`Ord`, [`U256::bits`]) are for public quantities only.

use core::cmp::Ordering;
use core::fmt;

use subtle::{Choice, ConditionallySelectable, ConstantTimeEq};

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct U256(pub(crate) [u64; 4]);

/// `a + b + carry`, returning (sum, carry-out).
#[inline(always)]
pub(crate) const fn adc(a: u64, b: u64, carry: u64) -> (u64, u64) {
    let t = (a as u128) + (b as u128) + (carry as u128);
    (t as u64, (t >> 64) as u64)
}

/// `a - b - borrow`, returning (difference, borrow-out as 0 or 1).
#[inline(always)]
pub(crate) const fn sbb(a: u64, b: u64, borrow: u64) -> (u64, u64) {
    let t = (a as u128).wrapping_sub((b as u128) + (borrow as u128));
    (t as u64, ((t >> 64) as u64) & 1)
}

/// `a + b * c + carry`, returning (low, high).
#[inline(always)]
pub(crate) const fn mac(a: u64, b: u64, c: u64, carry: u64) -> (u64, u64) {
    let t = (a as u128) + (b as u128) * (c as u128) + (carry as u128);
    (t as u64, (t >> 64) as u64)
}

impl U256 {
    pub const ZERO: U256 = U256([0; 4]);
    pub const ONE: U256 = U256([1, 0, 0, 0]);
    pub const BYTES: usize = 32;

    pub const fn from_u64(v: u64) -> Self {
        U256([v, 0, 0, 0])
    }

    pub const fn from_limbs(limbs: [u64; 4]) -> Self {
        U256(limbs)
    }

    pub const fn limbs(&self) -> [u64; 4] {
        self.0
    }

    /// Parses a big-endian hex string of at most 64 digits. Panics on bad
    /// input, so it is meant for constants.
    pub const fn from_be_hex(hex: &str) -> Self {
        let bytes = hex.as_bytes();
        assert!(bytes.len() <= 64, "hex constant longer than 256 bits");
        let mut limbs = [0u64; 4];
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[bytes.len() - 1 - i];
            let nibble = match c {
                b'0'..=b'9' => c - b'0',
                b'a'..=b'f' => c - b'a' + 10,
                b'A'..=b'F' => c - b'A' + 10,
                _ => panic!("invalid hex digit"),
            } as u64;
            limbs[i / 16] |= nibble << ((i % 16) * 4);
            i += 1;
        }
        U256(limbs)
    }

    /// Interprets up to 32 big-endian bytes. Returns `None` if `bytes` is
    /// longer than 32.
    pub fn from_be_slice(bytes: &[u8]) -> Option<Self> {
        if bytes.len() > Self::BYTES {
            return None;
        }
        let mut buf = [0u8; 32];
        buf[Self::BYTES - bytes.len()..].copy_from_slice(bytes);
        Some(Self::from_be_bytes(&buf))
    }

    pub fn from_be_bytes(bytes: &[u8; 32]) -> Self {
        let mut limbs = [0u64; 4];
        for (i, limb) in limbs.iter_mut().enumerate() {
            let start = 32 - 8 * (i + 1);
            let mut w = [0u8; 8];
            w.copy_from_slice(&bytes[start..start + 8]);
            *limb = u64::from_be_bytes(w);
        }
        U256(limbs)
    }

    pub fn to_be_bytes(&self) -> [u8; 32] {
        let mut out = [0u8; 32];
        for (i, limb) in self.0.iter().enumerate() {
            let start = 32 - 8 * (i + 1);
            out[start..start + 8].copy_from_slice(&limb.to_be_bytes());
        }
        out
    }

    /// Big-endian encoding truncated to the low `width` bytes. The caller
    /// guarantees the value fits.
    pub fn to_be_bytes_width(&self, width: usize) -> Vec<u8> {
        debug_assert!(width <= Self::BYTES);
        debug_assert!(self.bits() <= 8 * width as u32);
        self.to_be_bytes()[Self::BYTES - width..].to_vec()
    }

    /// Returns `(self + rhs) mod 2^256` and the carry.
    #[inline]
    pub fn overflowing_add(&self, rhs: &U256) -> (U256, u64) {
        let (r0, c) = adc(self.0[0], rhs.0[0], 0);
        let (r1, c) = adc(self.0[1], rhs.0[1], c);
        let (r2, c) = adc(self.0[2], rhs.0[2], c);
        let (r3, c) = adc(self.0[3], rhs.0[3], c);
        (U256([r0, r1, r2, r3]), c)
    }

    /// Returns `(self - rhs) mod 2^256` and the borrow (0 or 1).
    #[inline]
    pub fn overflowing_sub(&self, rhs: &U256) -> (U256, u64) {
        let (r0, b) = sbb(self.0[0], rhs.0[0], 0);
        let (r1, b) = sbb(self.0[1], rhs.0[1], b);
        let (r2, b) = sbb(self.0[2], rhs.0[2], b);
        let (r3, b) = sbb(self.0[3], rhs.0[3], b);
        (U256([r0, r1, r2, r3]), b)
    }

    pub fn wrapping_add(&self, rhs: &U256) -> U256 {
        self.overflowing_add(rhs).0
    }

    pub fn wrapping_sub(&self, rhs: &U256) -> U256 {
        self.overflowing_sub(rhs).0
    }

    /// Constant-time `self < rhs`.
    pub fn ct_lt(&self, rhs: &U256) -> Choice {
        let (_, borrow) = self.overflowing_sub(rhs);
        Choice::from(borrow as u8)
    }

    pub fn is_zero(&self) -> Choice {
        self.ct_eq(&U256::ZERO)
    }

    pub fn is_odd(&self) -> Choice {
        Choice::from((self.0[0] & 1) as u8)
    }

    /// Bit `i` (0 = least significant) as 0 or 1.
    #[inline]
    pub fn bit(&self, i: u32) -> u64 {
        (self.0[(i / 64) as usize] >> (i % 64)) & 1
    }

    /// Number of significant bits. Variable time.
    pub fn bits(&self) -> u32 {
        for i in (0..4).rev() {
            if self.0[i] != 0 {
                return 64 * i as u32 + (64 - self.0[i].leading_zeros());
            }
        }
        0
    }

    pub fn shr1(&self) -> U256 {
        U256([
            (self.0[0] >> 1) | (self.0[1] << 63),
            (self.0[1] >> 1) | (self.0[2] << 63),
            (self.0[2] >> 1) | (self.0[3] << 63),
            self.0[3] >> 1,
        ])
    }

    /// Number of trailing zero bits; 256 for zero. Variable time.
    pub fn trailing_zeros(&self) -> u32 {
        for i in 0..4 {
            if self.0[i] != 0 {
                return 64 * i as u32 + self.0[i].trailing_zeros();
            }
        }
        256
    }

    pub fn shr(&self, n: u32) -> U256 {
        let mut r = *self;
        for _ in 0..n {
            r = r.shr1();
        }
        r
    }

    /// Returns `Some(value)` if it fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        if self.0[1] | self.0[2] | self.0[3] == 0 {
            Some(self.0[0])
        } else {
            None
        }
    }
}

impl ConstantTimeEq for U256 {
    fn ct_eq(&self, other: &Self) -> Choice {
        self.0[0].ct_eq(&other.0[0])
            & self.0[1].ct_eq(&other.0[1])
            & self.0[2].ct_eq(&other.0[2])
            & self.0[3].ct_eq(&other.0[3])
    }
}

impl ConditionallySelectable for U256 {
    fn conditional_select(a: &Self, b: &Self, choice: Choice) -> Self {
        U256([
            u64::conditional_select(&a.0[0], &b.0[0], choice),
            u64::conditional_select(&a.0[1], &b.0[1], choice),
            u64::conditional_select(&a.0[2], &b.0[2], choice),
            u64::conditional_select(&a.0[3], &b.0[3], choice),
        ])
    }
}

impl Ord for U256 {
    fn cmp(&self, other: &Self) -> Ordering {
        for i in (0..4).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for U256 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl zeroize::Zeroize for U256 {
    fn zeroize(&mut self) {
        self.0.zeroize();
    }
}

impl From<u64> for U256 {
    fn from(v: u64) -> Self {
        U256::from_u64(v)
    }
}

impl fmt::Debug for U256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U256({self:x})")
    }
}

impl fmt::LowerHex for U256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:016x}{:016x}{:016x}{:016x}",
            self.0[3], self.0[2], self.0[1], self.0[0]
        )
    }
}

impl fmt::Display for U256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_u64() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "0x{self:x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_and_bytes_agree() {
        let v = U256::from_be_hex("0102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f20");
        let bytes = v.to_be_bytes();
        assert_eq!(bytes[0], 0x01);
        assert_eq!(bytes[31], 0x20);
        assert_eq!(U256::from_be_bytes(&bytes), v);
        assert_eq!(U256::from_be_slice(&[0x12, 0x34]).unwrap(), U256::from_u64(0x1234));
        assert!(U256::from_be_slice(&[0u8; 33]).is_none());
    }

    #[test]
    fn carries_propagate() {
        let max = U256([u64::MAX; 4]);
        let (sum, carry) = max.overflowing_add(&U256::ONE);
        assert_eq!(sum, U256::ZERO);
        assert_eq!(carry, 1);
        let (diff, borrow) = U256::ZERO.overflowing_sub(&U256::ONE);
        assert_eq!(diff, max);
        assert_eq!(borrow, 1);
    }

    #[test]
    fn bit_helpers() {
        let v = U256::from_be_hex("8000000000000000000000000000000000000000000000000000000000000001");
        assert_eq!(v.bits(), 256);
        assert_eq!(v.bit(255), 1);
        assert_eq!(v.bit(0), 1);
        assert_eq!(v.bit(1), 0);
        assert_eq!(U256::from_u64(1051).bits(), 11);
        assert_eq!(U256::from_u64(40).trailing_zeros(), 3);
        assert_eq!(U256::from_u64(40).shr(3), U256::from_u64(5));
        assert!(bool::from(U256::from_u64(3).ct_lt(&U256::from_u64(4))));
        assert!(!bool::from(U256::from_u64(4).ct_lt(&U256::from_u64(4))));
    }
}
