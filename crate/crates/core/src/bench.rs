//! Timing and operation-count harness.
//!
//! [`run_suite`] measures key generation, encryption and decryption of a
//! single-chunk message for the Cramer-Shoup scheme and for the textbook
//! EC-ElGamal baseline in [`elgamal`]. Counts come from [`crate::metrics`]
//! and are exact; timings are wall-clock and host dependent.
//!
//! The report also carries published figures for schemes that are not
//! implemented here (RSA, ECDH, SIDH, Kyber and others), tagged
//! `literature`. They are printed for context, never measured.

use std::fmt::Write as _;
use std::time::Instant;

use rand_core::{CryptoRng, RngCore};
use thiserror::Error;

use crate::codec;
use crate::curve::{CurveParams, CurvePoint};
use crate::ecs::{self, EcsError};
use crate::metrics::{self, OpCounts};
use crate::wire;

/// Fixed 28-byte benchmark message; fits one secp256k1 chunk.
pub const MESSAGE: &[u8; 28] = b"benchmark message, 28 bytes.";
pub const MIN_ITERS: usize = 10;

/// Published key size claimed for this scheme at 256 bits. It cannot hold
/// three points or five 256-bit scalars, so measured sizes differ.
pub const LITERATURE_KEY_BYTES: usize = 64;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("at least {MIN_ITERS} iterations are required, got {0}")]
    TooFewIterations(usize),
    #[error(transparent)]
    Ecs(#[from] EcsError),
    #[error("decryption failed during benchmark")]
    Decrypt,
}

/// Textbook EC-ElGamal. Malleable and NOT secure against chosen-ciphertext
/// attacks; it exists only as a benchmark and malleability foil.
pub mod elgamal {
    use super::*;
    use crate::bigint::U256;
    use crate::curve::{CurveError, CurveId};
    use zeroize::{Zeroize, ZeroizeOnDrop};

    #[derive(Clone, Zeroize, ZeroizeOnDrop)]
    pub struct PrivateKey {
        #[zeroize(skip)]
        curve: CurveId,
        z: U256,
    }

    impl PrivateKey {
        pub fn z(&self) -> &U256 {
            &self.z
        }

        pub fn curve(&self) -> CurveId {
            self.curve
        }
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct PublicKey {
        pub curve: CurveId,
        pub h: CurvePoint,
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct Ciphertext {
        pub u1: CurvePoint,
        pub e: CurvePoint,
    }

    /// `H = z*G1`.
    pub fn keygen<R: RngCore + CryptoRng>(params: &CurveParams, rng: &mut R) -> Result<(PrivateKey, PublicKey), EcsError> {
        let z = ecs::random_scalar(params, rng)?;
        let h = params.scalar_mult(params.g1(), &z)?;
        Ok((PrivateKey { curve: params.id(), z }, PublicKey { curve: params.id(), h }))
    }

    /// `(r*G1, r*H + m)`.
    pub fn encrypt<R: RngCore + CryptoRng>(
        params: &CurveParams,
        pk: &PublicKey,
        m: &CurvePoint,
        rng: &mut R,
    ) -> Result<Ciphertext, EcsError> {
        if pk.curve != params.id() {
            return Err(EcsError::CurveMismatch);
        }
        let mut r = ecs::random_scalar(params, rng)?;
        let u1 = params.scalar_mult(params.g1(), &r)?;
        let rh = params.scalar_mult(&pk.h, &r)?;
        r.zeroize();
        let e = params.point_add(&rh, m)?;
        Ok(Ciphertext { u1, e })
    }

    /// `E - z*U1`. Accepts any well-formed ciphertext.
    pub fn decrypt(params: &CurveParams, sk: &PrivateKey, ct: &Ciphertext) -> Result<CurvePoint, CurveError> {
        let zu = params.scalar_mult(&ct.u1, &sk.z)?;
        params.point_add(&ct.e, &params.point_negate(&zu)?)
    }

    /// Envelope-equivalent sizes: a 7-byte header plus one compressed point
    /// (public) or one scalar (private).
    pub fn key_sizes(params: &CurveParams) -> (usize, usize) {
        (wire::HEADER_LEN + params.point_len(), wire::HEADER_LEN + params.scalar_len())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timing {
    pub median_ms: f64,
    pub p90_ms: f64,
}

impl Timing {
    /// Median and nearest-rank 90th percentile.
    pub fn from_samples(samples: &mut [f64]) -> Timing {
        assert!(!samples.is_empty());
        samples.sort_by(f64::total_cmp);
        let n = samples.len();
        let median = if n % 2 == 1 { samples[n / 2] } else { (samples[n / 2 - 1] + samples[n / 2]) / 2.0 };
        let rank = (0.9 * n as f64).ceil() as usize;
        Timing { median_ms: median, p90_ms: samples[rank.clamp(1, n) - 1] }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmReport {
    pub name: &'static str,
    pub cca_secure: bool,
    pub public_key_bytes: usize,
    pub private_key_bytes: usize,
    pub keygen: Timing,
    pub encrypt: Timing,
    pub decrypt: Timing,
    pub keygen_ops: OpCounts,
    pub encrypt_ops: OpCounts,
    pub decrypt_ops: OpCounts,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub curve: &'static str,
    pub iterations: usize,
    pub warmup: usize,
    pub host: String,
    pub algorithms: Vec<AlgorithmReport>,
}

/// One published column: name, public key, private key, agreement,
/// encryption, decryption, initialisation (ms). `-` marks no entry.
pub struct LiteratureColumn {
    pub name: &'static str,
    pub public_key: &'static str,
    pub private_key: &'static str,
    pub agreement: &'static str,
    pub encryption: &'static str,
    pub decryption: &'static str,
    pub initialisation: &'static str,
}

pub const LITERATURE: [LiteratureColumn; 7] = [
    LiteratureColumn { name: "RSA (4096)", public_key: "512 B", private_key: "512 B", agreement: "-", encryption: "116", decryption: "4", initialisation: "17.700" },
    LiteratureColumn { name: "ECC (256)", public_key: "32 B", private_key: "32 B", agreement: "-", encryption: "19", decryption: "7", initialisation: "397" },
    LiteratureColumn { name: "CS (256)", public_key: "1 KB", private_key: "1 KB", agreement: "-", encryption: "3", decryption: "1", initialisation: "3" },
    LiteratureColumn { name: "EC-CS (256)", public_key: "64 B", private_key: "64 B", agreement: "-", encryption: "41", decryption: "43", initialisation: "473" },
    LiteratureColumn { name: "ECDH (secp256k1)", public_key: "32 B", private_key: "32 B", agreement: "2", encryption: "-", decryption: "-", initialisation: "682" },
    LiteratureColumn { name: "SIDH (P751)", public_key: "564 B", private_key: "48 B", agreement: "416", encryption: "-", decryption: "-", initialisation: "687" },
    LiteratureColumn { name: "Kyber (1024)", public_key: "1.5 KB", private_key: "3.1 KB", agreement: "-", encryption: "2", decryption: "4", initialisation: "152" },
];

/// OS, architecture, logical CPUs and, where readable, the CPU model.
pub fn host_descriptor() -> String {
    let cpus = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let model = std::fs::read_to_string("/proc/cpuinfo")
        .ok()
        .and_then(|s| {
            s.lines()
                .find(|l| l.starts_with("model name"))
                .and_then(|l| l.split_once(':'))
                .map(|(_, v)| v.trim().to_string())
        })
        .unwrap_or_else(|| "unknown cpu".to_string());
    format!("{}-{}, {} logical cpus, {}", std::env::consts::OS, std::env::consts::ARCH, cpus, model)
}

/// The message point used by both schemes: the codec embedding of
/// [`MESSAGE`], or G2 on curves without byte capacity.
pub fn message_point(params: &CurveParams) -> CurvePoint {
    codec::encode_chunk(params, MESSAGE).unwrap_or(*params.g2())
}

/// Runs `op` `warmup + iters` times; returns the timing over the measured
/// runs and the operation counts of the last run.
fn time<T>(warmup: usize, iters: usize, mut op: impl FnMut() -> Result<T, BenchError>) -> Result<(Timing, OpCounts), BenchError> {
    for _ in 0..warmup {
        op()?;
    }
    let mut samples = Vec::with_capacity(iters);
    let mut counts = OpCounts::default();
    for _ in 0..iters {
        let start = Instant::now();
        let (out, c) = metrics::measure(&mut op);
        samples.push(start.elapsed().as_secs_f64() * 1e3);
        out?;
        counts = c;
    }
    Ok((Timing::from_samples(&mut samples), counts))
}

pub fn run_suite<R: RngCore + CryptoRng>(params: &CurveParams, iters: usize, rng: &mut R) -> Result<BenchReport, BenchError> {
    if iters < MIN_ITERS {
        return Err(BenchError::TooFewIterations(iters));
    }
    let warmup = (iters / 10).max(2);
    let m = message_point(params);
    let header = ecs::chunk_header(0, 1);

    let (sk, pk) = ecs::keygen(params, rng)?;
    let (keygen_t, keygen_ops) = time(warmup, iters, || Ok(ecs::keygen(params, rng)?))?;
    let ct = ecs::encrypt_chunk(params, &pk, &m, &header, rng)?;
    let (encrypt_t, encrypt_ops) = time(warmup, iters, || Ok(ecs::encrypt_chunk(params, &pk, &m, &header, rng)?))?;
    let (decrypt_t, decrypt_ops) = time(warmup, iters, || {
        let out = ecs::decrypt_chunk(params, &sk, &ct, &header).map_err(|_| BenchError::Decrypt)?;
        if out == m { Ok(out) } else { Err(BenchError::Decrypt) }
    })?;
    let ours = AlgorithmReport {
        name: "ec-cramer-shoup",
        cca_secure: true,
        public_key_bytes: wire::serialize_public_key(&pk).len(),
        private_key_bytes: wire::serialize_private_key(&sk).len(),
        keygen: keygen_t,
        encrypt: encrypt_t,
        decrypt: decrypt_t,
        keygen_ops,
        encrypt_ops,
        decrypt_ops,
    };

    let (esk, epk) = elgamal::keygen(params, rng)?;
    let (keygen_t, keygen_ops) = time(warmup, iters, || Ok(elgamal::keygen(params, rng)?))?;
    let ect = elgamal::encrypt(params, &epk, &m, rng)?;
    let (encrypt_t, encrypt_ops) = time(warmup, iters, || Ok(elgamal::encrypt(params, &epk, &m, rng)?))?;
    let (decrypt_t, decrypt_ops) = time(warmup, iters, || {
        let out = elgamal::decrypt(params, &esk, &ect).map_err(|_| BenchError::Decrypt)?;
        if out == m { Ok(out) } else { Err(BenchError::Decrypt) }
    })?;
    let (pub_len, priv_len) = elgamal::key_sizes(params);
    let baseline = AlgorithmReport {
        name: "ec-elgamal (not CCA-secure)",
        cca_secure: false,
        public_key_bytes: pub_len,
        private_key_bytes: priv_len,
        keygen: keygen_t,
        encrypt: encrypt_t,
        decrypt: decrypt_t,
        keygen_ops,
        encrypt_ops,
        decrypt_ops,
    };

    Ok(BenchReport {
        curve: params.id().name(),
        iterations: iters,
        warmup,
        host: host_descriptor(),
        algorithms: vec![ours, baseline],
    })
}

fn ops(c: &OpCounts) -> String {
    format!("{}M {}A {}N {}H", c.scalar_mults, c.point_adds, c.negations, c.hashes)
}

/// Aligned text table: measured rows, then the literature columns.
pub fn render_table(report: &BenchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "curve {}, {} iterations after {} warm-up, host: {}",
        report.curve, report.iterations, report.warmup, report.host
    );
    let _ = writeln!(out, "times in ms (median / p90); ops: M scalar mults, A point adds, N negations, H hashes\n");
    let _ = writeln!(
        out,
        "{:<28} {:>8} {:>8} {:>17} {:>17} {:>17} {:>12} {:>12} {:>12}",
        "measured", "pub B", "priv B", "keygen", "encrypt", "decrypt", "keygen ops", "enc ops", "dec ops"
    );
    for a in &report.algorithms {
        let t = |t: &Timing| format!("{:.3} / {:.3}", t.median_ms, t.p90_ms);
        let _ = writeln!(
            out,
            "{:<28} {:>8} {:>8} {:>17} {:>17} {:>17} {:>12} {:>12} {:>12}",
            a.name,
            a.public_key_bytes,
            a.private_key_bytes,
            t(&a.keygen),
            t(&a.encrypt),
            t(&a.decrypt),
            ops(&a.keygen_ops),
            ops(&a.encrypt_ops),
            ops(&a.decrypt_ops),
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<28} {:>8} {:>8} {:>10} {:>10} {:>10} {:>14}",
        "literature (not measured)", "pub", "priv", "agreement", "encrypt", "decrypt", "initialisation"
    );
    for c in &LITERATURE {
        let _ = writeln!(
            out,
            "{:<28} {:>8} {:>8} {:>10} {:>10} {:>10} {:>14}",
            c.name, c.public_key, c.private_key, c.agreement, c.encryption, c.decryption, c.initialisation
        );
    }
    if let Some(ours) = report.algorithms.first() {
        let _ = writeln!(
            out,
            "\nnote: the literature lists {LITERATURE_KEY_BYTES} B keys for EC-CS (256); measured sizes are {} B public \
             (three compressed points) and {} B private (five scalars), each with a 7-byte header",
            ours.public_key_bytes, ours.private_key_bytes
        );
    }
    out
}

/// One `key=value` line per field, `algorithm.field=value`.
pub fn render_kv(report: &BenchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "curve={}", report.curve);
    let _ = writeln!(out, "iterations={}", report.iterations);
    let _ = writeln!(out, "warmup={}", report.warmup);
    let _ = writeln!(out, "host={}", report.host);
    for a in &report.algorithms {
        let key = if a.cca_secure { "ecs" } else { "elgamal" };
        let _ = writeln!(out, "{key}.cca_secure={}", a.cca_secure);
        let _ = writeln!(out, "{key}.pub_bytes={}", a.public_key_bytes);
        let _ = writeln!(out, "{key}.priv_bytes={}", a.private_key_bytes);
        for (op, t, c) in [("keygen", &a.keygen, &a.keygen_ops), ("encrypt", &a.encrypt, &a.encrypt_ops), ("decrypt", &a.decrypt, &a.decrypt_ops)] {
            let _ = writeln!(out, "{key}.{op}.median_ms={:.6}", t.median_ms);
            let _ = writeln!(out, "{key}.{op}.p90_ms={:.6}", t.p90_ms);
            let _ = writeln!(out, "{key}.{op}.scalar_mults={}", c.scalar_mults);
            let _ = writeln!(out, "{key}.{op}.point_adds={}", c.point_adds);
            let _ = writeln!(out, "{key}.{op}.negations={}", c.negations);
            let _ = writeln!(out, "{key}.{op}.hashes={}", c.hashes);
        }
    }
    let _ = writeln!(out, "literature.ec_cs_key_bytes={LITERATURE_KEY_BYTES}");
    let _ = writeln!(out, "literature.ec_cs_key_bytes_reproducible=false");
    out
}

/// Adds G1 to E in both schemes and reports whether each decryptor accepts
/// the result: `(elgamal_accepts, ecs_accepts)`.
pub fn malleability_demo<R: RngCore + CryptoRng>(params: &CurveParams, rng: &mut R) -> Result<(bool, bool), EcsError> {
    let m = message_point(params);
    let delta = params.g1();

    let (esk, epk) = elgamal::keygen(params, rng)?;
    let mut ect = elgamal::encrypt(params, &epk, &m, rng)?;
    ect.e = params.point_add(&ect.e, delta)?;
    let shifted = params.point_add(&m, delta)?;
    let elgamal_accepts = elgamal::decrypt(params, &esk, &ect).map(|out| out == shifted).unwrap_or(false);

    let (sk, pk) = ecs::keygen(params, rng)?;
    let header = ecs::chunk_header(0, 1);
    let mut chunk = ecs::encrypt_chunk(params, &pk, &m, &header, rng)?;
    chunk.e = params.point_add(&chunk.e, delta)?;
    let ecs_accepts = ecs::decrypt_chunk(params, &sk, &chunk, &header).is_ok();
    Ok((elgamal_accepts, ecs_accepts))
}
