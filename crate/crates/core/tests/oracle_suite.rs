//! Toy-curve cross-checks between the scheme and the brute-force oracle.

use std::time::Instant;

use eccs::curve::CurveError;
use eccs::ecs::{self, CiphertextChunk, InvalidCiphertext, PrivateKey};
use eccs::oracle::selftest::{self, Config};
use eccs::oracle::{brute_dlog, independent_decrypt, GroupTable};
use eccs::{CurveId, CurveParams, CurvePoint, U256};
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

fn toy() -> &'static CurveParams {
    CurveId::Toy.params()
}

fn random_point(table: &GroupTable, rng: &mut impl RngCore) -> CurvePoint {
    table.point(1 + rng.next_u32() as usize % (table.len() - 1))
}

#[test]
fn selftest_passes_on_the_registry() {
    let start = Instant::now();
    let report = selftest::run(toy(), Config::default(), &mut ChaCha20Rng::seed_from_u64(1));
    for check in &report.checks {
        println!("{check}");
    }
    assert!(report.passed());
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn selftest_fails_on_corrupted_g2() {
    let p = toy();
    let g1 = *p.g1();
    let two_g1 = p.point_add(&g1, &g1).unwrap();
    let corrupted = CurveParams::with_generators(CurveId::Toy, *p.p(), *p.a(), *p.b(), *p.order(), g1, two_g1).unwrap();
    let report = selftest::run(&corrupted, Config { keys: 1, tamper_ciphertexts: 1 }, &mut ChaCha20Rng::seed_from_u64(1));
    assert!(!report.passed());
    assert!(report.checks.iter().any(|c| c.name == "registry" && !c.passed));
}

#[test]
fn selftest_refuses_secp256k1() {
    let report = selftest::run(CurveId::Secp256k1.params(), Config::default(), &mut ChaCha20Rng::seed_from_u64(1));
    assert!(!report.passed());
}

#[test]
fn oracle_agrees_on_random_and_tampered_chunks() {
    let table = GroupTable::enumerate(toy()).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(0x0AC1E);
    let (sk, pk) = ecs::keygen(toy(), &mut rng).unwrap();
    let header = ecs::chunk_header(0, 1);
    for i in 0..1000 {
        let m = random_point(&table, &mut rng);
        let mut chunk = ecs::encrypt_chunk(toy(), &pk, &m, &header, &mut rng).unwrap();
        // every other chunk gets one point replaced by a random one
        if i % 2 == 1 {
            let p = random_point(&table, &mut rng);
            match i % 8 {
                1 => chunk.u1 = p,
                3 => chunk.u2 = p,
                5 => chunk.e = p,
                _ => chunk.v = p,
            }
        }
        let ours = ecs::decrypt_chunk(toy(), &sk, &chunk, &header);
        let theirs = independent_decrypt(&table, toy(), &sk, &pk, &chunk, &header);
        assert_eq!(ours.ok(), theirs.as_ref().ok().map(|o| o.message), "chunk {i}");
        if i % 2 == 0 {
            assert_eq!(ours, Ok(m));
        }
    }
}

#[test]
fn recovered_nonce_matches_hook() {
    let table = GroupTable::enumerate(toy()).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    let (sk, pk) = ecs::keygen(toy(), &mut rng).unwrap();
    let header = ecs::chunk_header(0, 1);
    for _ in 0..200 {
        let r = ecs::random_scalar(toy(), &mut rng).unwrap();
        let m = random_point(&table, &mut rng);
        let chunk = ecs::encrypt_chunk_with_nonce(toy(), &pk, &m, &header, &r).unwrap();
        let opening = independent_decrypt(&table, toy(), &sk, &pk, &chunk, &header).unwrap();
        assert_eq!(U256::from_u64(opening.r), r);
        assert_eq!(U256::from_u64(opening.z), *sk.z());
        assert!(opening.honest);
        assert_eq!(opening.message, m);
    }
}

#[test]
fn dlog_recovers_z_for_every_key() {
    let table = GroupTable::enumerate(toy()).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(6);
    for _ in 0..50 {
        let (sk, pk) = ecs::keygen(toy(), &mut rng).unwrap();
        assert_eq!(U256::from_u64(brute_dlog(&table, toy().g1(), pk.h()).unwrap()), *sk.z());
    }
}

/// Decryption with the validity check removed.
fn decrypt_without_check(params: &CurveParams, sk: &PrivateKey, chunk: &CiphertextChunk) -> Result<CurvePoint, CurveError> {
    let zu = params.scalar_mult(&chunk.u1, sk.z())?;
    params.point_add(&chunk.e, &params.point_negate(&zu)?)
}

#[test]
fn oracle_catches_a_decryptor_without_validity_check() {
    let table = GroupTable::enumerate(toy()).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    let (sk, pk) = ecs::keygen(toy(), &mut rng).unwrap();
    let header = ecs::chunk_header(0, 1);
    let mut disagreements = 0;
    for _ in 0..100 {
        let m = random_point(&table, &mut rng);
        let mut chunk = ecs::encrypt_chunk(toy(), &pk, &m, &header, &mut rng).unwrap();
        chunk.e = toy().point_add(&chunk.e, toy().g1()).unwrap();
        let mutant = decrypt_without_check(toy(), &sk, &chunk).ok();
        let oracle = independent_decrypt(&table, toy(), &sk, &pk, &chunk, &header).ok().map(|o| o.message);
        if mutant != oracle {
            disagreements += 1;
        }
        assert_eq!(ecs::decrypt_chunk(toy(), &sk, &chunk, &header).ok(), oracle);
    }
    assert!(disagreements >= 95, "mutant slipped past the oracle: {disagreements}");
}

#[test]
fn scalar_mult_matches_repeated_addition() {
    let table = GroupTable::enumerate(toy()).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(8);
    for _ in 0..2000 {
        let i = rng.next_u32() as usize % table.len();
        let k = rng.next_u64() % table.order();
        let ours = toy().scalar_mult(&table.point(i), &U256::from_u64(k)).unwrap();
        assert_eq!(ours, table.point(table.repeated_add(k, i)));
    }
}

#[test]
fn invalid_chunks_give_the_single_error() {
    let mut rng = ChaCha20Rng::seed_from_u64(9);
    let (sk, pk) = ecs::keygen(toy(), &mut rng).unwrap();
    let ct = ecs::encrypt_points(toy(), &pk, &[*toy().g2()], &mut rng).unwrap();
    let mut chunk = ct.chunks()[0];
    chunk.v = CurvePoint::Identity;
    assert_eq!(ecs::decrypt_chunk(toy(), &sk, &chunk, &ecs::chunk_header(0, 1)), Err(InvalidCiphertext));
    assert_eq!(InvalidCiphertext.to_string(), "invalid ciphertext");
}
