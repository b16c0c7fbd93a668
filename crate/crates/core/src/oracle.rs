//! Brute-force cross-checks for desk-scale curves.
//!
//! Everything here is written against plain `u64` arithmetic with textbook
//! chord-and-tangent formulas. None of it goes through the field, curve or
//! scheme modules' arithmetic, so agreement between the two is evidence
//! rather than tautology.
//!
//! * [`GroupTable`]: every point of the curve and the full addition table.
//! * [`brute_dlog`]: discrete logarithms by linear scan.
//! * [`independent_encrypt`] and [`independent_decrypt`]: the scheme redone
//!   over the table.
//! * [`selftest`]: the suite behind `eccs selftest`.

use std::collections::HashMap;

use sha3::{Digest, Sha3_256};
use thiserror::Error;

use crate::bigint::U256;
use crate::curve::{CurveParams, CurvePoint};
use crate::ecs::{CiphertextChunk, PrivateKey, PublicKey};

/// Largest supported field size in bits.
pub const MAX_DESK_BITS: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("curve is not desk scale (p must be below 2^{MAX_DESK_BITS})")]
    NotDeskScale,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("target is not a multiple of the base")]
    NotFound,
    #[error("oracle rejects the chunk: {0}")]
    Rejected(&'static str),
}

type Affine = Option<(u64, u64)>;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse by the extended Euclidean algorithm; `a` must be non-zero.
fn invmod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(m as i128) as u64
}

/// Chord-and-tangent addition in affine coordinates.
fn affine_add(p: u64, a: u64, lhs: Affine, rhs: Affine) -> Affine {
    let (x1, y1) = match lhs {
        None => return rhs,
        Some(pt) => pt,
    };
    let (x2, y2) = match rhs {
        None => return lhs,
        Some(pt) => pt,
    };
    let lambda = if x1 == x2 {
        if (y1 + y2) % p == 0 {
            return None;
        }
        // (3x^2 + a) / 2y
        let num = (3 * mulmod(x1, x1, p) + a) % p;
        mulmod(num, invmod(2 * y1 % p, p), p)
    } else {
        let num = (y2 + p - y1) % p;
        mulmod(num, invmod((x2 + p - x1) % p, p), p)
    };
    let x3 = (mulmod(lambda, lambda, p) + 2 * p - x1 - x2) % p;
    let y3 = (mulmod(lambda, (x1 + p - x3) % p, p) + p - y1) % p;
    Some((x3, y3))
}

/// All points of a desk-scale curve with its addition table.
///
/// Points are ordered identity first, then by ascending x with the even y
/// before the odd one. Index 0 is always the identity.
pub struct GroupTable {
    p: u64,
    a: u64,
    b: u64,
    n: u64,
    id: u8,
    points: Vec<Affine>,
    index: HashMap<(u64, u64), u32>,
    sums: Vec<u32>,
}

impl GroupTable {
    /// Enumerates points by scanning x against a table of squares and fills
    /// the addition table. Refuses fields of more than [`MAX_DESK_BITS`] bits.
    pub fn enumerate(params: &CurveParams) -> Result<GroupTable, OracleError> {
        let small = |v: &U256| v.to_u64().filter(|&v| v < 1 << MAX_DESK_BITS);
        let p = small(params.p()).ok_or(OracleError::NotDeskScale)?;
        let n = params.order().to_u64().ok_or(OracleError::NotDeskScale)?;
        let a = params.a().to_u64().ok_or(OracleError::NotDeskScale)?;
        let b = params.b().to_u64().ok_or(OracleError::NotDeskScale)?;

        let mut roots: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
        for y in 0..p {
            roots[mulmod(y, y, p) as usize].push(y);
        }
        let mut points = vec![None];
        for x in 0..p {
            let rhs = (mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p;
            let mut ys = roots[rhs as usize].clone();
            ys.sort_by_key(|y| (y & 1, *y));
            points.extend(ys.into_iter().map(|y| Some((x, y))));
        }
        let index = points
            .iter()
            .enumerate()
            .filter_map(|(i, pt)| pt.map(|xy| (xy, i as u32)))
            .collect::<HashMap<_, _>>();

        let len = points.len();
        let mut sums = vec![0u32; len * len];
        for i in 0..len {
            for j in i..len {
                let s = affine_add(p, a, points[i], points[j]);
                let k = match s {
                    None => 0,
                    Some(xy) => *index.get(&xy).expect("sum lies on the curve"),
                };
                sums[i * len + j] = k;
                sums[j * len + i] = k;
            }
        }
        Ok(GroupTable { p, a, b, n, id: params.id() as u8, points, index, sums })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn point(&self, i: usize) -> CurvePoint {
        match self.points[i] {
            None => CurvePoint::Identity,
            Some((x, y)) => CurvePoint::Affine { x: U256::from_u64(x), y: U256::from_u64(y) },
        }
    }

    pub fn index_of(&self, pt: &CurvePoint) -> Option<usize> {
        match pt {
            CurvePoint::Identity => Some(0),
            CurvePoint::Affine { x, y } => {
                let xy = (x.to_u64()?, y.to_u64()?);
                self.index.get(&xy).map(|&i| i as usize)
            }
        }
    }

    fn idx(&self, pt: &CurvePoint) -> Result<usize, OracleError> {
        self.index_of(pt).ok_or(OracleError::NotOnCurve)
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.sums[i * self.len() + j] as usize
    }

    pub fn neg(&self, i: usize) -> usize {
        match self.points[i] {
            None => 0,
            Some((x, y)) => self.index[&(x, (self.p - y) % self.p)] as usize,
        }
    }

    /// `k * P` by double-and-add over the table.
    pub fn mul(&self, k: u64, i: usize) -> usize {
        let mut acc = 0;
        let mut base = i;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k * P` as `P + P + ... + P`.
    pub fn repeated_add(&self, k: u64, i: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, i))
    }

    /// Every row of the addition table is a permutation of the points.
    pub fn is_latin_square(&self) -> bool {
        let len = self.len();
        let mut seen = vec![0usize; len];
        for row in 0..len {
            for col in 0..len {
                let k = self.add(row, col);
                if seen[k] == row + 1 {
                    return false;
                }
                seen[k] = row + 1;
            }
        }
        true
    }

    /// Compressed encoding, computed without the curve module.
    pub fn compress(&self, i: usize) -> Vec<u8> {
        match self.points[i] {
            None => vec![0],
            Some((x, y)) => {
                let width = (64 - self.p.leading_zeros()).div_ceil(8) as usize;
                let mut out = vec![0x02 | (y & 1) as u8];
                out.extend_from_slice(&x.to_be_bytes()[8 - width..]);
                out
            }
        }
    }

    /// Whether (x, y) satisfies the curve equation.
    pub fn satisfies(&self, x: u64, y: u64) -> bool {
        let p = self.p;
        x < p && y < p && mulmod(y, y, p) == (mulmod(mulmod(x, x, p), x, p) + mulmod(self.a, x, p) + self.b) % p
    }

    /// `SHA3-256("ECCS-v1-alpha" || id || header || U1 || U2 || E) mod n`.
    pub fn alpha(&self, header: &[u8], u1: usize, u2: usize, e: usize) -> u64 {
        let mut h = Sha3_256::new();
        h.update(b"ECCS-v1-alpha");
        h.update([self.id]);
        h.update(header);
        for i in [u1, u2, e] {
            h.update(self.compress(i));
        }
        h.finalize().iter().fold(0u64, |acc, &byte| (acc * 256 + byte as u64) % self.n)
    }
}

fn to_small(v: &U256) -> u64 {
    v.to_u64().expect("desk-scale scalar")
}

/// Smallest `k >= 0` with `k * base = target`, by linear scan.
pub fn brute_dlog(table: &GroupTable, base: &CurvePoint, target: &CurvePoint) -> Result<u64, OracleError> {
    let b = table.idx(base)?;
    let t = table.idx(target)?;
    let mut acc = 0;
    for k in 0..table.len() as u64 {
        if acc == t {
            return Ok(k);
        }
        acc = table.add(acc, b);
    }
    Err(OracleError::NotFound)
}

/// The scheme's encryption with nonce `r`, over the table.
pub fn independent_encrypt(
    table: &GroupTable,
    params: &CurveParams,
    pk: &PublicKey,
    message: &CurvePoint,
    header: &[u8],
    r: u64,
) -> Result<CiphertextChunk, OracleError> {
    let g1 = table.idx(params.g1())?;
    let g2 = table.idx(params.g2())?;
    let (c, d, h) = (table.idx(pk.c())?, table.idx(pk.d())?, table.idx(pk.h())?);
    let m = table.idx(message)?;
    let u1 = table.mul(r, g1);
    let u2 = table.mul(r, g2);
    let e = table.add(table.mul(r, h), m);
    let alpha = table.alpha(header, u1, u2, e);
    let v = table.add(table.mul(r, c), table.mul(mulmod(r, alpha, table.n), d));
    Ok(CiphertextChunk { u1: table.point(u1), u2: table.point(u2), e: table.point(e), v: table.point(v) })
}

/// Everything [`independent_decrypt`] learned about an accepted chunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Opening {
    /// `log_G1(U1)`.
    pub r: u64,
    /// `log_G1(H)`.
    pub z: u64,
    pub alpha: u64,
    pub message: CurvePoint,
    /// `U2 = r*G2` and `V = r*C + (r*alpha)*D`: the chunk is an honest
    /// encryption under nonce r.
    pub honest: bool,
}

/// Decrypts over the table. z is recovered from H by discrete log and must
/// match the private key; validity is checked with the unfolded sum
/// `x1*U1 + alpha*(y1*U1) + x2*U2 + alpha*(y2*U2)`.
pub fn independent_decrypt(
    table: &GroupTable,
    params: &CurveParams,
    sk: &PrivateKey,
    pk: &PublicKey,
    chunk: &CiphertextChunk,
    header: &[u8],
) -> Result<Opening, OracleError> {
    let g1 = params.g1();
    let [u1, u2, e, v] = [chunk.u1, chunk.u2, chunk.e, chunk.v].map(|p| table.index_of(&p));
    let (Some(u1), Some(u2), Some(e), Some(v)) = (u1, u2, e, v) else {
        return Err(OracleError::Rejected("point off the curve"));
    };
    if u1 == 0 || u2 == 0 {
        return Err(OracleError::Rejected("identity nonce point"));
    }
    let z = brute_dlog(table, g1, pk.h())?;
    let [x1, x2, y1, y2, z_key] = sk.scalars().map(|s| to_small(&s));
    if z != z_key {
        return Err(OracleError::Rejected("private key does not match H"));
    }
    let r = brute_dlog(table, g1, &chunk.u1)?;
    let alpha = table.alpha(header, u1, u2, e);

    let t1 = table.mul(x1, u1);
    let t2 = table.mul(alpha, table.mul(y1, u1));
    let t3 = table.mul(x2, u2);
    let t4 = table.mul(alpha, table.mul(y2, u2));
    let v_check = table.add(table.add(t1, t2), table.add(t3, t4));
    if v_check != v {
        return Err(OracleError::Rejected("validity check"));
    }

    let (c, d) = (table.idx(pk.c())?, table.idx(pk.d())?);
    let honest = u2 == table.mul(r, table.idx(params.g2())?)
        && v == table.add(table.mul(r, c), table.mul(mulmod(r, alpha, table.n), d));
    let message = table.add(e, table.neg(table.mul(z, u1)));
    Ok(Opening { r, z, alpha, message: table.point(message), honest })
}

pub mod selftest {
    //! Desk-scale self-test: SHA3 vectors, registry re-derivation, group
    //! table equivalence, exhaustive-nonce correctness and a tamper sweep.

    use std::fmt;

    use rand_core::{CryptoRng, RngCore};

    use super::*;
    use crate::curve::{derive_g2, toy_curve_search, CurveId, G2_DOMAIN_TAG};
    use crate::ecs::{self, Ciphertext};
    use crate::wire;

    /// (input, SHA3-256 digest) pairs from FIPS 202.
    pub const SHA3_VECTORS: [(&[u8], &str); 4] = [
        (b"", "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a"),
        (b"abc", "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532"),
        (
            b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
            "41c0dba2a9d6240849100376a8235e2c82e1b9998a999e21db32dd97496d3376",
        ),
        (&[0xA3; 200], "79f38adec5c20307a98ef76e8324afbfd46cfd81b22e3973c65fa1bd9de31787"),
    ];

    #[derive(Debug, Clone, Copy)]
    pub struct Config {
        /// Keys for the exhaustive-nonce sweep.
        pub keys: usize,
        /// Ciphertexts whose every bit is flipped.
        pub tamper_ciphertexts: usize,
    }

    impl Default for Config {
        fn default() -> Self {
            Config { keys: 2, tamper_ciphertexts: 10 }
        }
    }

    #[derive(Debug, Clone)]
    pub struct Check {
        pub name: &'static str,
        pub passed: bool,
        pub detail: String,
    }

    impl fmt::Display for Check {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let verdict = if self.passed { "ok  " } else { "FAIL" };
            write!(f, "{verdict} {:<14} {}", self.name, self.detail)
        }
    }

    #[derive(Debug, Clone, Default)]
    pub struct Report {
        pub checks: Vec<Check>,
    }

    impl Report {
        pub fn passed(&self) -> bool {
            !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
        }

        fn push(&mut self, name: &'static str, result: Result<String, String>) {
            let (passed, detail) = match result {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            self.checks.push(Check { name, passed, detail });
        }
    }

    pub fn sha3_kats() -> Result<String, String> {
        for (input, want) in SHA3_VECTORS {
            let got: String = Sha3_256::digest(input).iter().map(|b| format!("{b:02x}")).collect();
            if got != want {
                return Err(format!("SHA3-256 of {} bytes gave {got}", input.len()));
            }
        }
        Ok(format!("{} FIPS 202 vectors", SHA3_VECTORS.len()))
    }

    /// Re-derives G2 and, for the toy curve, the whole parameter set.
    pub fn registry(params: &CurveParams) -> Result<String, String> {
        let mut tag = G2_DOMAIN_TAG.to_vec();
        tag.push(params.id() as u8);
        if derive_g2(params, &tag) != *params.g2() {
            return Err("G2 does not match its derivation".into());
        }
        if params.id() == CurveId::Toy {
            let found = toy_curve_search();
            let same = found.p() == params.p()
                && found.a() == params.a()
                && found.b() == params.b()
                && found.order() == params.order()
                && found.g1() == params.g1()
                && found.g2() == params.g2();
            if !same {
                return Err("toy parameters differ from the search result".into());
            }
            return Ok(format!("p = {}, n = {}, G1 and G2 re-derived", params.p(), params.order()));
        }
        Ok("G2 re-derived".into())
    }

    pub fn group_table(params: &CurveParams, table: &GroupTable) -> Result<String, String> {
        let len = table.len() as u64;
        if len != table.order() {
            return Err(format!("{len} points but n = {}", table.order()));
        }
        let p = table.p();
        // Hasse: |#E - (p + 1)| <= 2 sqrt(p)
        let diff = len.abs_diff(p + 1);
        if diff * diff > 4 * p {
            return Err("point count violates the Hasse bound".into());
        }
        if (0..table.len()).any(|i| table.add(0, i) != i) {
            return Err("identity row is not the identity".into());
        }
        if !table.is_latin_square() {
            return Err("addition table is not a Latin square".into());
        }
        let pts: Vec<CurvePoint> = (0..table.len()).map(|i| table.point(i)).collect();
        for (i, a) in pts.iter().enumerate() {
            if params.point_negate(a).ok() != Some(pts[table.neg(i)]) {
                return Err(format!("negation of point {i} disagrees"));
            }
            for (j, b) in pts.iter().enumerate().skip(i) {
                if params.point_add(a, b).ok() != Some(pts[table.add(i, j)]) {
                    return Err(format!("point_add({i}, {j}) disagrees"));
                }
            }
        }
        Ok(format!("{len} points, {} sums agree", len * (len + 1) / 2))
    }

    /// For every nonce r: the oracle encrypts, the scheme decrypts, and the
    /// oracle decrypts again.
    pub fn exhaustive_nonces<R: RngCore + CryptoRng>(
        params: &CurveParams,
        table: &GroupTable,
        keys: usize,
        rng: &mut R,
    ) -> Result<String, String> {
        let header = ecs::chunk_header(0, 1);
        let n = table.order();
        for key in 0..keys {
            let (sk, pk) = ecs::keygen(params, rng).map_err(|e| e.to_string())?;
            for r in 1..n {
                let m = table.point(1 + (r as usize * 7 + key) % (table.len() - 1));
                let chunk = independent_encrypt(table, params, &pk, &m, &header, r).map_err(|e| e.to_string())?;
                let ours = ecs::decrypt_chunk(params, &sk, &chunk, &header);
                if ours != Ok(m) {
                    return Err(format!("key {key}, r = {r}: decryption did not recover the message"));
                }
                let theirs = independent_decrypt(table, params, &sk, &pk, &chunk, &header)
                    .map_err(|e| format!("key {key}, r = {r}: {e}"))?;
                if theirs.message != m || theirs.r != r || !theirs.honest {
                    return Err(format!("key {key}, r = {r}: oracle opening disagrees"));
                }
            }
        }
        Ok(format!("{keys} keys x {} nonces", n - 1))
    }

    /// Flips every bit of serialized single-chunk ciphertexts. Each flip the
    /// scheme accepts must be one the oracle also accepts (a genuine alpha
    /// collision modulo n) and must be reported.
    pub fn tamper_sweep<R: RngCore + CryptoRng>(
        params: &CurveParams,
        table: &GroupTable,
        ciphertexts: usize,
        rng: &mut R,
    ) -> Result<String, String> {
        let (sk, pk) = ecs::keygen(params, rng).map_err(|e| e.to_string())?;
        let mut flips = 0usize;
        let mut accepted = 0usize;
        for i in 0..ciphertexts {
            let m = table.point(1 + i % (table.len() - 1));
            let ct = ecs::encrypt_points(params, &pk, &[m], rng).map_err(|e| e.to_string())?;
            let bytes = wire::serialize_ciphertext(&ct);
            for bit in 0..bytes.len() * 8 {
                let mut bad = bytes.clone();
                bad[bit / 8] ^= 1 << (bit % 8);
                flips += 1;
                let Ok(parsed) = wire::parse_ciphertext(&bad) else { continue };
                if parsed.curve() != params.id() {
                    continue;
                }
                let Ok(_) = ecs::decrypt_points(params, &sk, &parsed) else { continue };
                accepted += 1;
                if !oracle_accepts(params, table, &sk, &pk, &parsed) {
                    return Err(format!("ciphertext {i}, bit {bit}: accepted but oracle rejects"));
                }
            }
        }
        Ok(format!("{flips} flips, {} rejected, {accepted} accepted as alpha collisions", flips - accepted))
    }

    fn oracle_accepts(params: &CurveParams, table: &GroupTable, sk: &PrivateKey, pk: &PublicKey, ct: &Ciphertext) -> bool {
        ct.chunks().iter().enumerate().all(|(i, chunk)| {
            let header = ecs::chunk_header(i as u32, ct.total());
            independent_decrypt(table, params, sk, pk, chunk, &header).is_ok()
        })
    }

    /// Runs every check. Only desk-scale curves are accepted.
    pub fn run<R: RngCore + CryptoRng>(params: &CurveParams, config: Config, rng: &mut R) -> Report {
        let mut report = Report::default();
        report.push("sha3-kat", sha3_kats());
        report.push("registry", registry(params));
        let table = match GroupTable::enumerate(params) {
            Ok(t) => t,
            Err(e) => {
                report.push("group-table", Err(e.to_string()));
                return report;
            }
        };
        report.push("group-table", group_table(params, &table));
        report.push("nonces", exhaustive_nonces(params, &table, config.keys, rng));
        report.push("tamper", tamper_sweep(params, &table, config.tamper_ciphertexts, rng));
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveId;
    use crate::ecs;
    use rand_chacha::ChaCha20Rng;
    use rand_core::SeedableRng;

    fn toy() -> &'static CurveParams {
        CurveId::Toy.params()
    }

    #[test]
    fn refuses_large_curves() {
        assert!(matches!(GroupTable::enumerate(CurveId::Secp256k1.params()), Err(OracleError::NotDeskScale)));
    }

    #[test]
    fn table_order_and_layout() {
        let t = GroupTable::enumerate(toy()).unwrap();
        assert_eq!(t.len(), 1093);
        assert_eq!(t.point(0), CurvePoint::Identity);
        for i in 1..t.len() {
            let (x, y) = (t.points[i].unwrap().0, t.points[i].unwrap().1);
            assert!(t.satisfies(x, y));
            if i > 1 {
                let (px, py) = t.points[i - 1].unwrap();
                assert!(px < x || (px == x && py % 2 == 0 && y % 2 == 1));
            }
        }
        assert_eq!(t.index_of(toy().g1()), t.index_of(&t.point(t.index_of(toy().g1()).unwrap())));
    }

    #[test]
    fn dlog_examples() {
        let t = GroupTable::enumerate(toy()).unwrap();
        let g1 = toy().g1();
        assert_eq!(brute_dlog(&t, g1, &CurvePoint::Identity), Ok(0));
        assert_eq!(brute_dlog(&t, g1, g1), Ok(1));
        let (sk, pk) = ecs::keygen(toy(), &mut ChaCha20Rng::seed_from_u64(1)).unwrap();
        assert_eq!(brute_dlog(&t, g1, pk.h()).unwrap(), to_small(sk.z()));
        let off = CurvePoint::Affine { x: U256::ONE, y: U256::ONE };
        assert_eq!(brute_dlog(&t, g1, &off), Err(OracleError::NotOnCurve));
        assert_eq!(brute_dlog(&t, &CurvePoint::Identity, g1), Err(OracleError::NotFound));
    }

    #[test]
    fn table_mul_matches_repeated_addition() {
        let t = GroupTable::enumerate(toy()).unwrap();
        for i in [1, 2, 500, 1092] {
            for k in [0, 1, 2, 3, 17, 1092, 1093] {
                assert_eq!(t.mul(k, i), t.repeated_add(k, i));
            }
        }
    }

    #[test]
    fn sha3_vectors() {
        assert!(selftest::sha3_kats().is_ok());
    }

    #[test]
    fn independent_encrypt_matches_hooked_encrypt() {
        let t = GroupTable::enumerate(toy()).unwrap();
        let (_, pk) = ecs::keygen(toy(), &mut ChaCha20Rng::seed_from_u64(2)).unwrap();
        let header = ecs::chunk_header(3, 9);
        for r in [1u64, 2, 546, 1092] {
            let m = t.point(r as usize);
            let ours = ecs::encrypt_chunk_with_nonce(toy(), &pk, &m, &header, &U256::from_u64(r)).unwrap();
            let theirs = independent_encrypt(&t, toy(), &pk, &m, &header, r).unwrap();
            assert_eq!(ours, theirs);
        }
    }

    #[test]
    fn oracle_alpha_matches_scheme_hash() {
        let t = GroupTable::enumerate(toy()).unwrap();
        let header = ecs::chunk_header(0, 1);
        for (a, b, c) in [(1, 2, 3), (0, 5, 0), (1092, 1, 77)] {
            let ours = ecs::hash_to_scalar(toy(), &header, &t.point(a), &t.point(b), &t.point(c));
            assert_eq!(to_small(&ours), t.alpha(&header, a, b, c));
        }
    }
}
