use gabidulin_core::ctx_file::{read_ctx, shipped_ctx, write_ctx, SHIPPED_CTX};
use gabidulin_core::normal_basis::{nb_add, nb_qpow};
use gabidulin_core::poly_basis::{poly_add, poly_mul};
use gabidulin_core::{Field, NormalFieldElement, PolyBasis, M};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn cross_basis_homomorphism() {
    let ctx = shipped_ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let a = ctx.random(&mut rng);
        let b = ctx.random(&mut rng);
        let (pa, pb) = (ctx.to_poly(a), ctx.to_poly(b));
        assert_eq!(ctx.to_poly(ctx.nb_mul(a, b)), poly_mul(pa, pb));
        assert_eq!(ctx.to_poly(nb_add(a, b)), poly_add(pa, pb));
        assert_eq!(ctx.nb_mul(a, b), ctx.from_poly(poly_mul(pa, pb)));
    }
}

#[test]
fn basis_products_match_polynomial_basis() {
    let ctx = shipped_ctx();
    for i in (0..M as i64).step_by(7) {
        for j in (0..M as i64).step_by(5) {
            let (ei, ej) = (NormalFieldElement::basis(i), NormalFieldElement::basis(j));
            assert_eq!(
                ctx.to_poly(ctx.nb_mul(ei, ej)),
                poly_mul(ctx.to_poly(ei), ctx.to_poly(ej))
            );
        }
    }
}

#[test]
fn field_axioms() {
    let ctx = shipped_ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let (a, b, c) = (ctx.random(&mut rng), ctx.random(&mut rng), ctx.random(&mut rng));
        assert_eq!(ctx.nb_mul(a, b), ctx.nb_mul(b, a));
        assert_eq!(ctx.nb_mul(ctx.nb_mul(a, b), c), ctx.nb_mul(a, ctx.nb_mul(b, c)));
        let lhs = ctx.nb_mul(a, nb_add(b, c));
        assert_eq!(lhs, nb_add(ctx.nb_mul(a, b), ctx.nb_mul(a, c)));
        assert_eq!(lhs.hi >> 63, 0);
    }
}

#[test]
fn frobenius_is_a_rotation() {
    let ctx = shipped_ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let (a, b) = (ctx.random(&mut rng), ctx.random(&mut rng));
        assert_eq!(nb_qpow(a, 1), ctx.nb_mul(a, a));
        assert_eq!(nb_qpow(ctx.nb_mul(a, b), 1), ctx.nb_mul(nb_qpow(a, 1), nb_qpow(b, 1)));
        let via_poly = PolyBasis.frobenius(ctx.to_poly(a), 9);
        assert_eq!(ctx.frobenius(a, 9), ctx.from_poly(via_poly));
    }
}

#[test]
fn inverses() {
    let ctx = shipped_ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let a = ctx.random_nonzero(&mut rng);
        assert_eq!(ctx.nb_mul(a, ctx.nb_inv(a).unwrap()), NormalFieldElement::ONE);
    }
}

#[test]
fn shipped_ctx_round_trips_through_the_file_format() {
    let ctx = shipped_ctx();
    assert_eq!(ctx.complexity(), 501);
    assert!(ctx.is_self_dual());
    assert_eq!(write_ctx(ctx), SHIPPED_CTX);
}

#[test]
fn corrupted_ctx_is_rejected() {
    let flipped = SHIPPED_CTX.replacen("complexity 501", "complexity 502", 1);
    assert!(read_ctx(&flipped).is_err());
    // a consistent checksum over a tampered table still fails verification
    let body_end = SHIPPED_CTX.rfind("checksum ").unwrap();
    let body = &SHIPPED_CTX[..body_end];
    let last_entry = body.trim_end().rsplit('\n').next().unwrap();
    let tampered = body.replacen(last_entry, "0 0", 1);
    assert_ne!(tampered, body);
    let resummed = {
        use sha2::Digest;
        let sum = hex::encode(sha2::Sha256::digest(tampered.as_bytes()));
        format!("{tampered}checksum {sum}\n")
    };
    assert!(read_ctx(&resummed).is_err());
    assert!(read_ctx("").is_err());
}
