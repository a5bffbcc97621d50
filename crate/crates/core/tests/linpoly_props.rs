use gabidulin_core::ctx_file::shipped_ctx;
use gabidulin_core::linpoly::{q_transform, q_transform_at};
use gabidulin_core::{Field, FieldElement, LinPoly, NormalFieldElement, PolyBasis, M};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type P = LinPoly<FieldElement>;
const F: PolyBasis = PolyBasis;

fn poly(seed: u64, len: usize) -> P {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c: Vec<_> = (0..len).map(|_| F.random(&mut rng)).collect();
    if let Some(last) = c.last_mut() {
        *last = F.random_nonzero(&mut rng);
    }
    P::from_coeffs(c)
}

fn elem(seed: u64) -> FieldElement {
    F.random(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed))
}

/// Term-by-term evaluation with independently computed q-powers.
fn eval_oracle(p: &P, x: FieldElement) -> FieldElement {
    p.coeffs().iter().enumerate().fold(FieldElement::ZERO, |acc, (i, &c)| {
        F.add(acc, F.mul(c, F.frobenius(x, i as i64)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eval_matches_oracle_and_is_additive(s in any::<u64>(), len in 0usize..12) {
        let p = poly(s, len);
        let (x, y) = (elem(s), elem(s.wrapping_add(1)));
        prop_assert_eq!(p.eval(&F, x), eval_oracle(&p, x));
        prop_assert_eq!(p.eval(&F, F.add(x, y)), F.add(p.eval(&F, x), p.eval(&F, y)));
    }

    #[test]
    fn add_is_an_evaluation_homomorphism(s in any::<u64>(), la in 0usize..8, lb in 0usize..8) {
        let (a, b) = (poly(s, la), poly(s ^ 1, lb));
        let x = elem(s);
        prop_assert_eq!(a.add(&F, &b).eval(&F, x), F.add(a.eval(&F, x), b.eval(&F, x)));
    }

    #[test]
    fn compose_evaluates_as_composition(s in any::<u64>(), la in 0usize..8, lb in 0usize..8) {
        let (a, b) = (poly(s, la), poly(s ^ 2, lb));
        let c = a.compose(&F, &b);
        for t in 0..4 {
            let x = elem(s.wrapping_add(t));
            prop_assert_eq!(c.eval(&F, x), a.eval(&F, b.eval(&F, x)));
        }
    }

    #[test]
    fn compose_is_associative(s in any::<u64>(), la in 0usize..5, lb in 0usize..5, lc in 0usize..5) {
        let (a, b, c) = (poly(s, la), poly(s ^ 3, lb), poly(s ^ 4, lc));
        prop_assert_eq!(a.compose(&F, &b).compose(&F, &c), a.compose(&F, &b.compose(&F, &c)));
    }

    #[test]
    fn division_reconstructs(s in any::<u64>(), ld in 1usize..10, lq in 0usize..8, lr in 0usize..10) {
        let d = poly(s, ld);
        let q = poly(s ^ 5, lq);
        let r = poly(s ^ 6, lr.min(ld - 1));
        let n = d.compose(&F, &q).add(&F, &r);
        let (q2, r2) = n.left_divide(&F, &d).unwrap();
        prop_assert_eq!(&q2, &q);
        prop_assert_eq!(&r2, &r);
        prop_assert_eq!(d.compose(&F, &q2).add(&F, &r2), n.clone());
        let wanted = lq.min(3);
        let prefix = n.left_quotient(&F, &d, wanted).unwrap();
        let mut expect = q.coeffs().to_vec();
        expect.truncate(wanted);
        prop_assert_eq!(prefix, P::from_coeffs(expect));
    }

    #[test]
    fn arbitrary_division_invariant(s in any::<u64>(), ln in 0usize..16, ld in 1usize..10) {
        let (n, d) = (poly(s, ln), poly(s ^ 7, ld));
        let (q, r) = n.left_divide(&F, &d).unwrap();
        prop_assert!(r.qdeg().is_none_or(|x| x < d.qdeg().unwrap()));
        prop_assert_eq!(d.compose(&F, &q).add(&F, &r), n);
    }

    #[test]
    fn interpolation_hits_every_point(s in any::<u64>(), k in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let pts: Vec<_> = (0..k).map(|_| F.random_nonzero(&mut rng)).collect();
        let vals: Vec<_> = (0..k).map(|_| F.random(&mut rng)).collect();
        let (a, i) = P::annihilator_and_interpolation(&F, &pts, &vals).unwrap();
        prop_assert_eq!(a.qdeg(), Some(k));
        prop_assert!(i.qdeg().is_none_or(|d| d < k));
        for (p, v) in pts.iter().zip(&vals) {
            prop_assert_eq!(a.eval(&F, *p), FieldElement::ZERO);
            prop_assert_eq!(i.eval(&F, *p), *v);
        }
    }
}

#[test]
fn q_transform_is_a_linear_involution() {
    let ctx = shipped_ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let a: Vec<NormalFieldElement> = (0..M).map(|_| ctx.random(&mut rng)).collect();
        let b: Vec<NormalFieldElement> = (0..M).map(|_| ctx.random(&mut rng)).collect();
        let c = ctx.random(&mut rng);
        let ta = q_transform(ctx, &a);
        assert_eq!(q_transform(ctx, &ta), a);
        let lin: Vec<_> = a.iter().zip(&b).map(|(x, y)| ctx.add(ctx.mul(c, *x), *y)).collect();
        let tb = q_transform(ctx, &b);
        let expect: Vec<_> = ta.iter().zip(&tb).map(|(x, y)| ctx.add(ctx.mul(c, *x), *y)).collect();
        assert_eq!(q_transform(ctx, &lin), expect);
        let picks = [0usize, 5, 126, 64];
        let partial = q_transform_at(ctx, &a, &picks);
        for (p, v) in picks.iter().zip(partial) {
            assert_eq!(ta[*p], v);
        }
    }
}
