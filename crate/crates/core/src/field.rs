//! Arithmetic modulo an odd prime.
//!
//! A [`PrimeField`] is a runtime context for one modulus; it serves both as
//! the coordinate field F_p of a curve and as the scalar ring modulo the
//! group order n. Elements are kept in Montgomery form internally and are
//! always fully reduced, so equality of representations is equality of
//! values.
//!
//! Multiplication, addition and inversion do not branch on operand values.
//! Exponents passed to [`FieldElement::pow`] are treated as public.

use core::fmt;

use subtle::{Choice, ConditionallySelectable, ConstantTimeEq};
use thiserror::Error;

use crate::bigint::{adc, mac, U256};

/// Miller-Rabin rounds applied to caller-supplied moduli.
pub const PRIMALITY_ROUNDS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("operands belong to different moduli")]
    ModulusMismatch,
    #[error("zero has no multiplicative inverse")]
    NotInvertible,
    #[error("value is not reduced below the modulus")]
    NonCanonical,
    #[error("expected {expected} bytes, got {actual}")]
    BadLength { expected: usize, actual: usize },
    #[error("modulus must be an odd prime greater than 3")]
    BadModulus,
}

/// Montgomery arithmetic for an odd modulus below 2^256, with R = 2^256.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Montgomery {
    modulus: U256,
    /// -modulus^-1 mod 2^64
    m_inv: u64,
    /// R mod modulus, i.e. one in Montgomery form
    r: U256,
    /// R^2 mod modulus
    r2: U256,
}

impl Montgomery {
    pub(crate) fn new(modulus: U256) -> Self {
        debug_assert!(bool::from(modulus.is_odd()));
        let m0 = modulus.0[0];
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(m0.wrapping_mul(inv)));
        }
        let mut mont = Montgomery {
            modulus,
            m_inv: inv.wrapping_neg(),
            r: U256::ZERO,
            r2: U256::ZERO,
        };
        // 2^256 and 2^512 mod m by repeated doubling; setup only.
        let mut x = if modulus == U256::ONE { U256::ZERO } else { U256::ONE };
        for _ in 0..256 {
            x = mont.add(&x, &x);
        }
        mont.r = x;
        for _ in 0..256 {
            x = mont.add(&x, &x);
        }
        mont.r2 = x;
        mont
    }

    #[inline]
    pub(crate) fn modulus(&self) -> &U256 {
        &self.modulus
    }

    #[inline]
    pub(crate) fn one(&self) -> U256 {
        self.r
    }

    /// Modular addition of reduced operands.
    #[inline]
    pub(crate) fn add(&self, a: &U256, b: &U256) -> U256 {
        let (sum, carry) = a.overflowing_add(b);
        let (diff, borrow) = sum.overflowing_sub(&self.modulus);
        let use_diff = Choice::from((carry | (borrow ^ 1)) as u8);
        U256::conditional_select(&sum, &diff, use_diff)
    }

    #[inline]
    pub(crate) fn sub(&self, a: &U256, b: &U256) -> U256 {
        let (diff, borrow) = a.overflowing_sub(b);
        let fix = U256::conditional_select(&U256::ZERO, &self.modulus, Choice::from(borrow as u8));
        diff.wrapping_add(&fix)
    }

    #[inline]
    pub(crate) fn neg(&self, a: &U256) -> U256 {
        self.sub(&U256::ZERO, a)
    }

    /// Montgomery product a * b * R^-1 mod m (CIOS). Output is fully reduced
    /// whenever a * b < m * R.
    #[inline]
    pub(crate) fn mul(&self, a: &U256, b: &U256) -> U256 {
        let a = &a.0;
        let b = &b.0;
        let m = &self.modulus.0;
        let mut t = [0u64; 6];
        for i in 0..4 {
            let mut c = 0;
            for j in 0..4 {
                let (lo, hi) = mac(t[j], a[j], b[i], c);
                t[j] = lo;
                c = hi;
            }
            let (s, c2) = adc(t[4], c, 0);
            t[4] = s;
            t[5] = c2;

            let q = t[0].wrapping_mul(self.m_inv);
            let (_, mut c) = mac(t[0], q, m[0], 0);
            for j in 1..4 {
                let (lo, hi) = mac(t[j], q, m[j], c);
                t[j - 1] = lo;
                c = hi;
            }
            let (s, c2) = adc(t[4], c, 0);
            t[3] = s;
            t[4] = t[5] + c2;
        }
        let r = U256([t[0], t[1], t[2], t[3]]);
        let (d, borrow) = r.overflowing_sub(&self.modulus);
        let use_d = Choice::from((t[4] | (borrow ^ 1)) as u8);
        U256::conditional_select(&r, &d, use_d)
    }

    #[inline]
    pub(crate) fn square(&self, a: &U256) -> U256 {
        self.mul(a, a)
    }

    /// Any 256-bit integer into reduced Montgomery form.
    #[inline]
    pub(crate) fn to_mont(&self, a: &U256) -> U256 {
        self.mul(a, &self.r2)
    }

    #[inline]
    pub(crate) fn from_mont(&self, a: &U256) -> U256 {
        self.mul(a, &U256::ONE)
    }

    /// Left-to-right square-and-multiply. Runs in time dependent on `exp`
    /// only, never on `base`.
    pub(crate) fn pow(&self, base: &U256, exp: &U256) -> U256 {
        let mut acc = self.r;
        for i in (0..exp.bits()).rev() {
            acc = self.square(&acc);
            let prod = self.mul(&acc, base);
            acc = U256::conditional_select(&acc, &prod, Choice::from(exp.bit(i) as u8));
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum SqrtStrategy {
    /// p = 3 mod 4: root = a^((p+1)/4).
    ThreeModFour { exp: U256 },
    /// General Tonelli-Shanks with p - 1 = q * 2^s, q odd.
    TonelliShanks {
        s: u32,
        q: U256,
        /// (q+1)/2
        q_half: U256,
        /// c = z^q for a fixed non-residue z, Montgomery form
        root_of_unity: U256,
    },
}

/// Arithmetic context for one prime modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    mont: Montgomery,
    bits: u32,
    byte_len: usize,
    /// p - 2, the Fermat inversion exponent.
    inv_exp: U256,
    /// (p - 1) / 2, the Euler criterion exponent.
    legendre_exp: U256,
    sqrt: SqrtStrategy,
}

impl PrimeField {
    /// Builds a context after checking that `modulus` is an odd prime
    /// greater than 3 with [`PRIMALITY_ROUNDS`] Miller-Rabin rounds.
    pub fn new(modulus: U256) -> Result<Self, FieldError> {
        if modulus <= U256::from_u64(3)
            || !bool::from(modulus.is_odd())
            || !is_probable_prime(&modulus, PRIMALITY_ROUNDS)
        {
            return Err(FieldError::BadModulus);
        }
        Ok(Self::new_unchecked(modulus))
    }

    /// Builds a context for a modulus already known to be prime (registry
    /// constants).
    pub(crate) fn new_unchecked(modulus: U256) -> Self {
        let mont = Montgomery::new(modulus);
        let p_minus_1 = modulus.wrapping_sub(&U256::ONE);
        let legendre_exp = p_minus_1.shr1();
        let sqrt = if modulus.0[0] & 3 == 3 {
            SqrtStrategy::ThreeModFour {
                exp: modulus.wrapping_add(&U256::ONE).shr(2),
            }
        } else {
            let s = p_minus_1.trailing_zeros();
            let q = p_minus_1.shr(s);
            let q_half = q.wrapping_add(&U256::ONE).shr1();
            let minus_one = mont.neg(&mont.one());
            let mut z = 2u64;
            let non_residue = loop {
                let zm = mont.to_mont(&U256::from_u64(z));
                if mont.pow(&zm, &legendre_exp) == minus_one {
                    break zm;
                }
                z += 1;
            };
            SqrtStrategy::TonelliShanks {
                s,
                q,
                q_half,
                root_of_unity: mont.pow(&non_residue, &q),
            }
        };
        PrimeField {
            bits: modulus.bits(),
            byte_len: modulus.bits().div_ceil(8) as usize,
            inv_exp: modulus.wrapping_sub(&U256::from_u64(2)),
            legendre_exp,
            sqrt,
            mont,
        }
    }

    pub fn modulus(&self) -> &U256 {
        self.mont.modulus()
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Width of the fixed big-endian encoding, ceil(bits / 8).
    pub fn byte_len(&self) -> usize {
        self.byte_len
    }

    pub(crate) fn mont(&self) -> &Montgomery {
        &self.mont
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { field: self, repr: U256::ZERO }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { field: self, repr: self.mont.one() }
    }

    /// `v mod p`.
    pub fn from_u64(&self, v: u64) -> FieldElement<'_> {
        self.reduce(&U256::from_u64(v))
    }

    /// `v mod p` for any 256-bit integer.
    pub fn reduce(&self, v: &U256) -> FieldElement<'_> {
        FieldElement { field: self, repr: self.mont.to_mont(v) }
    }

    /// Wraps a canonical value; rejects `v >= p`.
    pub fn element(&self, v: &U256) -> Result<FieldElement<'_>, FieldError> {
        if v >= self.modulus() {
            return Err(FieldError::NonCanonical);
        }
        Ok(self.reduce(v))
    }

    /// Decodes the fixed-width big-endian encoding, rejecting non-canonical
    /// values.
    pub fn from_be_bytes(&self, bytes: &[u8]) -> Result<FieldElement<'_>, FieldError> {
        if bytes.len() != self.byte_len {
            return Err(FieldError::BadLength { expected: self.byte_len, actual: bytes.len() });
        }
        let v = U256::from_be_slice(bytes).ok_or(FieldError::NonCanonical)?;
        self.element(&v)
    }

    fn same(&self, other: &PrimeField) -> bool {
        core::ptr::eq(self, other) || self.mont.modulus() == other.mont.modulus()
    }

    /// Square root on Montgomery-form input. Returns an arbitrary root; the
    /// caller picks the canonical one.
    pub(crate) fn sqrt_mont(&self, a: &U256) -> Option<U256> {
        let m = &self.mont;
        let root = match &self.sqrt {
            SqrtStrategy::ThreeModFour { exp } => m.pow(a, exp),
            SqrtStrategy::TonelliShanks { s, q, q_half, root_of_unity } => {
                if *a == U256::ZERO {
                    return Some(U256::ZERO);
                }
                let one = m.one();
                let mut big_m = *s;
                let mut c = *root_of_unity;
                let mut t = m.pow(a, q);
                let mut r = m.pow(a, q_half);
                while t != one {
                    // least i with t^(2^i) = 1
                    let mut i = 0;
                    let mut probe = t;
                    while probe != one {
                        probe = m.square(&probe);
                        i += 1;
                        if i == big_m {
                            return None;
                        }
                    }
                    let mut b = c;
                    for _ in 0..(big_m - i - 1) {
                        b = m.square(&b);
                    }
                    big_m = i;
                    c = m.square(&b);
                    t = m.mul(&t, &c);
                    r = m.mul(&r, &b);
                }
                r
            }
        };
        if m.square(&root) == *a {
            Some(root)
        } else {
            None
        }
    }

    pub(crate) fn is_qr_mont(&self, a: &U256) -> bool {
        let e = self.mont.pow(a, &self.legendre_exp);
        *a == U256::ZERO || e == self.mont.one()
    }

    pub(crate) fn inv_mont(&self, a: &U256) -> U256 {
        self.mont.pow(a, &self.inv_exp)
    }
}

/// An integer modulo the prime of its [`PrimeField`], always canonical.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f PrimeField,
    repr: U256,
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    /// Canonical integer value in `[0, p)`.
    pub fn value(&self) -> U256 {
        self.field.mont.from_mont(&self.repr)
    }

    pub fn to_be_bytes(&self) -> Vec<u8> {
        self.value().to_be_bytes_width(self.field.byte_len)
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.field.same(other.field) {
            Ok(())
        } else {
            Err(FieldError::ModulusMismatch)
        }
    }

    fn with(&self, repr: U256) -> Self {
        FieldElement { field: self.field, repr }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mont.add(&self.repr, &other.repr)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mont.sub(&self.repr, &other.repr)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with(self.field.mont.mul(&self.repr, &other.repr)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.mont.neg(&self.repr))
    }

    pub fn square(&self) -> Self {
        self.with(self.field.mont.square(&self.repr))
    }

    /// `self^exp`; the exponent is public.
    pub fn pow(&self, exp: &U256) -> Self {
        self.with(self.field.mont.pow(&self.repr, exp))
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::NotInvertible);
        }
        Ok(self.with(self.field.inv_mont(&self.repr)))
    }

    pub fn is_zero(&self) -> bool {
        bool::from(self.repr.is_zero())
    }

    /// Euler criterion; zero counts as a residue.
    pub fn is_qr(&self) -> bool {
        self.field.is_qr_mont(&self.repr)
    }

    /// The square root with even integer representative, or `None` for a
    /// non-residue.
    pub fn sqrt(&self) -> Option<Self> {
        let root = self.field.sqrt_mont(&self.repr)?;
        let root = self.with(root);
        let negated = root.neg();
        let odd = root.value().is_odd();
        Some(FieldElement::conditional_select_fe(&root, &negated, odd))
    }

    fn conditional_select_fe(a: &Self, b: &Self, choice: Choice) -> Self {
        a.with(U256::conditional_select(&a.repr, &b.repr, choice))
    }
}

impl ConstantTimeEq for FieldElement<'_> {
    fn ct_eq(&self, other: &Self) -> Choice {
        Choice::from(self.field.same(other.field) as u8) & self.repr.ct_eq(&other.repr)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ct_eq(other).into()
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value(), self.field.modulus())
    }
}

fn small_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut c = 2u64;
    while primes.len() < count {
        if primes.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            primes.push(c);
        }
        c += 1;
    }
    primes
}

fn rem_u64(n: &U256, d: u64) -> u64 {
    let mut r: u128 = 0;
    for limb in n.0.iter().rev() {
        r = ((r << 64) | *limb as u128) % d as u128;
    }
    r as u64
}

/// Miller-Rabin with the first `rounds` primes as witnesses, after trial
/// division by those same primes. Variable time; for public moduli.
pub fn is_probable_prime(n: &U256, rounds: usize) -> bool {
    let witnesses = small_primes(rounds.max(1));
    if let Some(v) = n.to_u64() {
        if v < 2 {
            return false;
        }
        if witnesses.contains(&v) {
            return true;
        }
    }
    if witnesses.iter().any(|&p| rem_u64(n, p) == 0) {
        return false;
    }
    let mont = Montgomery::new(*n);
    let n_minus_1 = n.wrapping_sub(&U256::ONE);
    let s = n_minus_1.trailing_zeros();
    let d = n_minus_1.shr(s);
    let one = mont.one();
    let minus_one = mont.neg(&one);
    'witness: for &w in &witnesses {
        let base = mont.to_mont(&U256::from_u64(w));
        let mut x = mont.pow(&base, &d);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = mont.square(&x);
            if x == minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(U256::from_u64(p)).unwrap()
    }

    fn secp_p() -> PrimeField {
        PrimeField::new(U256::from_be_hex(
            "FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F",
        ))
        .unwrap()
    }

    #[test]
    fn add_examples() {
        let f = field(97);
        let x = f.from_u64(42);
        assert_eq!(f.zero().add(&x).unwrap(), x);
        assert_eq!(f.from_u64(96).add(&f.one()).unwrap(), f.zero());
        assert_eq!(f.from_u64(45).add(&f.from_u64(60)).unwrap().value(), U256::from_u64(8));
    }

    #[test]
    fn mul_examples() {
        let f = field(97);
        let x = f.from_u64(42);
        assert_eq!(f.one().mul(&x).unwrap(), x);
        assert_eq!(f.zero().mul(&x).unwrap(), f.zero());
        assert_eq!(f.from_u64(12).mul(&f.from_u64(30)).unwrap().value(), U256::from_u64(69));
    }

    #[test]
    fn inv_examples() {
        let f = field(97);
        assert_eq!(f.one().inv().unwrap(), f.one());
        assert_eq!(f.from_u64(3).inv().unwrap().value(), U256::from_u64(65));
        assert_eq!(f.zero().inv(), Err(FieldError::NotInvertible));
    }

    #[test]
    fn sqrt_examples() {
        let f = field(7);
        assert_eq!(f.zero().sqrt().unwrap(), f.zero());
        assert_eq!(f.from_u64(2).sqrt().unwrap().value(), U256::from_u64(4));
        assert!(f.from_u64(5).sqrt().is_none());
        assert!(f.zero().is_qr());
        assert!(f.from_u64(4).is_qr());
        assert!(!f.from_u64(5).is_qr());
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let f = field(97);
        let g = field(101);
        assert_eq!(f.one().add(&g.one()), Err(FieldError::ModulusMismatch));
        assert_eq!(f.one().mul(&g.one()), Err(FieldError::ModulusMismatch));
        // an equal modulus in a separate context is the same field
        let f2 = field(97);
        assert_eq!(f.one().add(&f2.one()).unwrap().value(), U256::from_u64(2));
    }

    #[test]
    fn rejects_bad_moduli() {
        for bad in [0u64, 1, 2, 3, 9, 91, 1_000_000] {
            assert_eq!(PrimeField::new(U256::from_u64(bad)), Err(FieldError::BadModulus), "{bad}");
        }
        // Carmichael number
        assert!(PrimeField::new(U256::from_u64(561)).is_err());
        // 2^255 - 19 is prime, 2^255 - 21 is not
        let p25519 = U256::from_be_hex("7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffed");
        assert!(PrimeField::new(p25519).is_ok());
        assert!(PrimeField::new(p25519.wrapping_sub(&U256::from_u64(2))).is_err());
    }

    #[test]
    fn non_canonical_values_rejected() {
        let f = field(97);
        assert_eq!(f.element(&U256::from_u64(97)).unwrap_err(), FieldError::NonCanonical);
        assert_eq!(f.from_be_bytes(&[97]).unwrap_err(), FieldError::NonCanonical);
        assert!(matches!(f.from_be_bytes(&[0, 1]), Err(FieldError::BadLength { .. })));
        assert_eq!(f.from_be_bytes(&[96]).unwrap().value(), U256::from_u64(96));
    }

    /// Tonelli-Shanks and the 3 mod 4 path against brute-force squaring.
    #[test]
    fn sqrt_matches_exhaustive_squares() {
        for p in [7u64, 13, 17, 97, 113, 257, 1051, 7681] {
            let f = field(p);
            let mut squares = vec![false; p as usize];
            for y in 0..p {
                squares[(y * y % p) as usize] = true;
            }
            let mut residues = 0;
            for a in 0..p {
                let e = f.from_u64(a);
                assert_eq!(e.is_qr(), squares[a as usize], "p={p} a={a}");
                match e.sqrt() {
                    Some(r) => {
                        assert!(squares[a as usize]);
                        assert_eq!(r.square(), e);
                        assert_eq!(r.value().0[0] & 1, 0, "canonical root must be even");
                        residues += 1;
                    }
                    None => assert!(!squares[a as usize]),
                }
            }
            assert_eq!(residues, (p + 1) / 2, "p={p}");
        }
    }

    #[test]
    fn residue_count_exhaustive_below_ten_thousand() {
        let mut checked = 0;
        for p in (5u64..10_000).step_by(2) {
            if !is_probable_prime(&U256::from_u64(p), PRIMALITY_ROUNDS) {
                continue;
            }
            let f = field(p);
            let count = (0..p).filter(|&a| f.from_u64(a).is_qr()).count() as u64;
            assert_eq!(count, (p + 1) / 2, "p={p}");
            checked += 1;
        }
        assert_eq!(checked, 1227);
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        for n in 0u64..5000 {
            let trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_probable_prime(&U256::from_u64(n), PRIMALITY_ROUNDS), trial, "{n}");
        }
    }

    #[test]
    fn full_width_modulus_wraparound() {
        let f = secp_p();
        let p_minus_1 = f.modulus().wrapping_sub(&U256::ONE);
        let x = f.element(&p_minus_1).unwrap();
        assert_eq!(x.add(&f.one()).unwrap(), f.zero());
        // (p-1)^2 = 1
        assert_eq!(x.square(), f.one());
        assert_eq!(x.inv().unwrap(), x);
        let enc = x.to_be_bytes();
        assert_eq!(enc.len(), 32);
        assert_eq!(f.from_be_bytes(&enc).unwrap(), x);
    }

    fn arb_u256() -> impl Strategy<Value = U256> {
        any::<[u64; 4]>().prop_map(U256)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn commutative(a in arb_u256(), b in arb_u256()) {
            let f = secp_p();
            let (x, y) = (f.reduce(&a), f.reduce(&b));
            prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
            prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
            prop_assert!(x.add(&y).unwrap().value() < *f.modulus());
        }

        #[test]
        fn small_field_matches_u128(a in any::<u64>(), b in any::<u64>()) {
            let p = 1_000_000_007u64;
            let f = field(p);
            let (x, y) = (f.from_u64(a), f.from_u64(b));
            let (a, b) = ((a % p) as u128, (b % p) as u128);
            prop_assert_eq!(x.add(&y).unwrap().value(), U256::from_u64(((a + b) % p as u128) as u64));
            prop_assert_eq!(x.sub(&y).unwrap().value(), U256::from_u64(((a + p as u128 - b) % p as u128) as u64));
            prop_assert_eq!(x.mul(&y).unwrap().value(), U256::from_u64(((a * b) % p as u128) as u64));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1_000))]

        #[test]
        fn inverse_and_sqrt(a in arb_u256()) {
            let f = secp_p();
            let x = f.reduce(&a);
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), f.one());
            }
            if let Some(r) = x.sqrt() {
                prop_assert_eq!(r.square(), x);
            }
            let sq = x.square();
            prop_assert!(sq.is_qr());
            prop_assert_eq!(sq.sqrt().unwrap().square(), sq);
        }
    }
}
