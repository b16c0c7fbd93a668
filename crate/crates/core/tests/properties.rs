//! Property tests over the public API.

use eccs::codec;
use eccs::ecs::{self, InvalidCiphertext};
use eccs::wire;
use eccs::{CurveId, CurveParams, CurvePoint, U256};
use proptest::prelude::*;
use rand_chacha::ChaCha20Rng;
use rand_core::SeedableRng;

fn secp() -> &'static CurveParams {
    CurveId::Secp256k1.params()
}

fn toy() -> &'static CurveParams {
    CurveId::Toy.params()
}

fn toy_point(i: u64) -> CurvePoint {
    toy().scalar_mult(toy().g1(), &U256::from_u64(i % 1093)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn byte_messages_round_trip(seed in any::<u64>(), msg in proptest::collection::vec(any::<u8>(), 0..200)) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (sk, pk) = ecs::keygen(secp(), &mut rng).unwrap();
        let ct = ecs::encrypt(secp(), &pk, &msg, &mut rng).unwrap();
        prop_assert_eq!(ct.total() as usize, msg.len().div_ceil(30).max(1));
        let parsed = wire::parse_ciphertext(&wire::serialize_ciphertext(&ct)).unwrap();
        prop_assert_eq!(ecs::decrypt(secp(), &sk, &parsed).unwrap(), msg);
    }

    #[test]
    fn wrong_key_is_rejected(seed in any::<u64>(), msg in proptest::collection::vec(any::<u8>(), 0..60)) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (_, pk) = ecs::keygen(secp(), &mut rng).unwrap();
        let (other, _) = ecs::keygen(secp(), &mut rng).unwrap();
        let ct = ecs::encrypt(secp(), &pk, &msg, &mut rng).unwrap();
        prop_assert_eq!(ecs::decrypt(secp(), &other, &ct), Err(InvalidCiphertext));
    }

    #[test]
    fn toy_point_messages_round_trip(seed in any::<u64>(), idx in proptest::collection::vec(any::<u64>(), 1..6)) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (sk, pk) = ecs::keygen(toy(), &mut rng).unwrap();
        let points: Vec<CurvePoint> = idx.iter().map(|&i| toy_point(i)).collect();
        let ct = ecs::encrypt_points(toy(), &pk, &points, &mut rng).unwrap();
        prop_assert_eq!(ecs::decrypt_points(toy(), &sk, &ct).unwrap(), points);
    }

    #[test]
    fn adding_a_point_to_any_component_is_rejected(seed in any::<u64>(), which in 0usize..4, k in 1u64..1000) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (sk, pk) = ecs::keygen(secp(), &mut rng).unwrap();
        let m = codec::encode_chunk(secp(), b"payload").unwrap();
        let header = ecs::chunk_header(0, 1);
        let mut chunk = ecs::encrypt_chunk(secp(), &pk, &m, &header, &mut rng).unwrap();
        let delta = secp().scalar_mult(secp().g1(), &U256::from_u64(k)).unwrap();
        let slot = match which {
            0 => &mut chunk.u1,
            1 => &mut chunk.u2,
            2 => &mut chunk.e,
            _ => &mut chunk.v,
        };
        *slot = secp().point_add(slot, &delta).unwrap();
        prop_assert_eq!(ecs::decrypt_chunk(secp(), &sk, &chunk, &header), Err(InvalidCiphertext));
    }

    #[test]
    fn key_serialization_round_trips(seed in any::<u64>()) {
        let (sk, pk) = ecs::keygen(secp(), &mut ChaCha20Rng::seed_from_u64(seed)).unwrap();
        let sk_bytes = wire::serialize_private_key(&sk);
        let pk_bytes = wire::serialize_public_key(&pk);
        prop_assert_eq!(sk_bytes.len(), 167);
        prop_assert_eq!(pk_bytes.len(), 106);
        prop_assert_eq!(wire::parse_private_key(&sk_bytes).unwrap(), sk);
        prop_assert_eq!(wire::parse_public_key(&pk_bytes).unwrap(), pk);
    }

    #[test]
    fn scalar_mult_is_linear(a in 0u64..1093, b in 0u64..1093) {
        let p = toy();
        let sum = p.point_add(&toy_point(a), &toy_point(b)).unwrap();
        prop_assert_eq!(sum, toy_point(a + b));
    }
}
