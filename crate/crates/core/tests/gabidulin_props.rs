use gabidulin_core::gabidulin::{moore_matrix, rank_of, sample_error};
use gabidulin_core::{Field, FieldElement, GabidulinCode, PolyBasis};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const F: PolyBasis = PolyBasis;

fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(F.zero(), |acc, (&x, &y)| F.add(acc, F.mul(x, y)))
}

#[test]
fn parity_check_is_orthogonal_to_generator() {
    for (n, k, seed) in [(113, 3, 0u64), (113, 3, 1), (40, 17, 2), (127, 63, 3)] {
        let code = GabidulinCode::generate(n, k, seed).unwrap();
        assert_eq!(rank_of(&F, code.g()), n);
        assert_eq!(rank_of(&F, code.h()), n);
        let g = code.generator_matrix();
        for hrow in code.parity_check_matrix() {
            for grow in &g {
                assert!(dot(&hrow, grow).is_zero());
            }
        }
    }
}

#[test]
fn defining_sums_are_frobenius_closed() {
    let code = GabidulinCode::generate(30, 8, 4).unwrap();
    let (n, k) = (30i64, 8i64);
    for l in -(n - k - 1)..k {
        let gl: Vec<_> = code.g().iter().map(|&x| F.frobenius(x, l)).collect();
        let base = dot(code.h(), &gl);
        assert!(base.is_zero());
        for i in [1i64, 5, 126] {
            let hi: Vec<_> = code.h().iter().map(|&x| F.frobenius(x, i)).collect();
            let gi: Vec<_> = gl.iter().map(|&x| F.frobenius(x, i)).collect();
            assert!(dot(&hi, &gi).is_zero());
        }
    }
    let m = moore_matrix(&F, code.g(), -2, 3);
    assert_eq!(m[2][0], code.g()[0]);
}

#[test]
fn encode_is_linear() {
    let code = GabidulinCode::generate(113, 3, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let a: Vec<_> = (0..3).map(|_| F.random(&mut rng)).collect();
        let b: Vec<_> = (0..3).map(|_| F.random(&mut rng)).collect();
        let s = F.random(&mut rng);
        let lin: Vec<_> = a.iter().zip(&b).map(|(&x, &y)| F.add(F.mul(s, x), y)).collect();
        let (ca, cb) = (code.encode(&a).unwrap(), code.encode(&b).unwrap());
        let expect: Vec<_> = ca.iter().zip(&cb).map(|(&x, &y)| F.add(F.mul(s, x), y)).collect();
        assert_eq!(code.encode(&lin).unwrap(), expect);
    }
}

#[test]
fn sampled_errors_have_exact_rank() {
    for tau in [0usize, 1, 55] {
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let e = sample_error(&F, 113, tau, &mut rng);
            assert_eq!(rank_of(&F, &e), tau, "tau {tau} seed {seed}");
        }
    }
}

#[test]
fn generation_is_deterministic() {
    assert_eq!(
        GabidulinCode::generate(50, 10, 9).unwrap(),
        GabidulinCode::generate(50, 10, 9).unwrap()
    );
    assert_ne!(
        GabidulinCode::generate(50, 10, 9).unwrap(),
        GabidulinCode::generate(50, 10, 10).unwrap()
    );
}
