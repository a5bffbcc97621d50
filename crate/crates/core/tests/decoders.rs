use gabidulin_core::ctx_file::shipped_ctx;
use gabidulin_core::gabidulin::{tdd_precompute, DecodeInstance};
use gabidulin_core::normal_basis::nb_qpow;
use gabidulin_core::tdd::{
    key_equation_residuals, tdd_bma, tdd_decode, tdd_decode_work, tdd_extend, tdd_syndromes, TddError,
};
use gabidulin_core::wba::{wba_decode, wba_finalize, wba_init, wba_interpolate, WbaMode};
use gabidulin_core::{Field, FieldElement, GabidulinCode, LinPoly, NormalFieldElement, PolyBasis};

const F: PolyBasis = PolyBasis;

fn to_nb(v: &[FieldElement]) -> Vec<NormalFieldElement> {
    v.iter().map(|&x| shipped_ctx().from_poly(x)).collect()
}

fn to_pb(v: &[NormalFieldElement]) -> Vec<FieldElement> {
    v.iter().map(|&x| shipped_ctx().to_poly(x)).collect()
}

#[test]
fn wba_round_trips_for_every_rank() {
    for (n, k) in [(16usize, 3usize), (17, 4), (30, 9), (113, 3)] {
        let code = GabidulinCode::generate(n, k, n as u64).unwrap();
        for tau in 0..=code.tau_max() {
            for seed in 0..3u64 {
                let inst = DecodeInstance::for_code(code.clone(), tau, seed * 100 + tau as u64).unwrap();
                for mode in [WbaMode::EarlyExit, WbaMode::ConstantTime] {
                    let got = wba_decode(&F, code.g(), k, &inst.received, mode, seed).unwrap();
                    assert_eq!(got, inst.msg, "({n},{k}) tau {tau} seed {seed} {mode:?}");
                }
            }
        }
    }
}

#[test]
fn wba_initial_state() {
    let inst = DecodeInstance::random(113, 3, 55, 1).unwrap();
    let s = wba_init(&F, inst.code.g(), 3, &inst.received).unwrap();
    assert_eq!(s.ann.qdeg(), Some(3));
    assert!(s.interp.qdeg().unwrap() < 3);
    for i in 0..3 {
        assert!(s.u0[i].is_zero() && s.u1[i].is_zero());
        assert_eq!(s.interp.eval(&F, inst.code.g()[i]), inst.received[i]);
    }
    for i in 3..113 {
        assert_eq!(s.u0[i], s.ann.eval(&F, inst.code.g()[i]));
        assert_eq!(s.u1[i], F.add(s.interp.eval(&F, inst.code.g()[i]), inst.received[i]));
    }
}

#[test]
fn wba_iteration_counts() {
    let code = GabidulinCode::generate(113, 3, 2).unwrap();
    for tau in [0usize, 1, 27, 55] {
        let inst = DecodeInstance::for_code(code.clone(), tau, tau as u64).unwrap();
        let s = wba_init(&F, code.g(), 3, &inst.received).unwrap();
        let ct = wba_interpolate(&F, s.clone(), WbaMode::ConstantTime, 4).unwrap();
        assert_eq!(ct.iterations, 110);
        assert_eq!(wba_finalize(&F, &ct).unwrap(), inst.msg);
        let ee = wba_interpolate(&F, s, WbaMode::EarlyExit, 4).unwrap();
        if tau == 0 {
            assert_eq!(ee.iterations, 0);
        }
        assert!(ee.iterations <= 110);
        // the finished pair interpolates every processed position
        assert!(ee.u1[ee.l..].iter().all(|x| x.is_zero()));
    }
}

#[test]
fn wba_detects_bad_input_length() {
    let code = GabidulinCode::generate(10, 3, 0).unwrap();
    assert!(wba_decode(&F, code.g(), 3, &[FieldElement::ZERO; 9], WbaMode::ConstantTime, 0).is_err());
}

#[test]
fn tdd_syndromes_match_parity_check_products() {
    let ctx = shipped_ctx();
    let inst = DecodeInstance::random(113, 3, 20, 3).unwrap();
    let pre = tdd_precompute(&inst.code, ctx).unwrap();
    let clean = to_nb(&inst.code.encode(&inst.msg).unwrap());
    assert!(tdd_syndromes(ctx, &pre, &clean).iter().all(|s| s.is_zero()));

    let r = to_nb(&inst.received);
    let e = to_nb(&inst.error);
    let s = tdd_syndromes(ctx, &pre, &r);
    assert_eq!(s, tdd_syndromes(ctx, &pre, &e));
    // s_i = Σ_j h_j^[i] e_j
    let h = to_nb(inst.code.h());
    for (i, si) in s.iter().enumerate() {
        let direct = h.iter().zip(&e).fold(NormalFieldElement::ZERO, |acc, (&hj, &ej)| {
            ctx.add(acc, ctx.nb_mul(nb_qpow(hj, i as i64), ej))
        });
        assert_eq!(*si, direct);
    }
    assert_eq!(s.len(), 110);
}

#[test]
fn single_position_error_syndromes() {
    let ctx = shipped_ctx();
    let code = GabidulinCode::generate(113, 3, 4).unwrap();
    let pre = tdd_precompute(&code, ctx).unwrap();
    let mut e = vec![NormalFieldElement::ZERO; 113];
    e[0] = NormalFieldElement::basis(7);
    let s = tdd_syndromes(ctx, &pre, &e);
    let h0 = ctx.from_poly(code.h()[0]);
    for (i, si) in s.iter().enumerate() {
        assert_eq!(*si, ctx.nb_mul(nb_qpow(h0, i as i64), e[0]));
    }
    let gamma = tdd_bma(ctx, &s, 55).unwrap();
    assert_eq!(gamma.qdeg(), Some(1));
    assert!(key_equation_residuals(ctx, &gamma, &s).iter().all(|r| r.is_zero()));
}

#[test]
fn bma_examples() {
    let ctx = shipped_ctx();
    let zero = vec![NormalFieldElement::ZERO; 110];
    assert_eq!(tdd_bma(ctx, &zero, 55).unwrap(), LinPoly::identity(ctx));
    let mut late = zero.clone();
    late[109] = NormalFieldElement::ONE;
    assert_eq!(
        tdd_bma(ctx, &late, 55),
        Err(TddError::TooManyErrors {
            found: 110,
            tau_max: 55
        })
    );
    let ext = tdd_extend(ctx, &LinPoly::identity(ctx), &zero);
    assert!(ext.iter().all(|x| x.is_zero()));

    let inst = DecodeInstance::random(113, 3, 55, 5).unwrap();
    let pre = tdd_precompute(&inst.code, ctx).unwrap();
    let w = tdd_decode_work(ctx, &pre, &to_nb(&inst.received)).unwrap();
    assert_eq!(w.tau, 55);
    assert_eq!(w.gamma.coeff(0), NormalFieldElement::ONE);
    assert!(key_equation_residuals(ctx, &w.gamma, &w.syndromes)
        .iter()
        .all(|r| r.is_zero()));
    assert_eq!(to_pb(&w.e_prime), inst.error);
    assert_eq!(to_pb(&w.msg), inst.msg);
}

#[test]
fn rank_one_extension_is_a_one_term_recursion() {
    let ctx = shipped_ctx();
    let inst = DecodeInstance::random(113, 3, 1, 6).unwrap();
    let pre = tdd_precompute(&inst.code, ctx).unwrap();
    let w = tdd_decode_work(ctx, &pre, &to_nb(&inst.received)).unwrap();
    assert_eq!(w.tau, 1);
    let g1 = w.gamma.coeff(1);
    for j in 110..127 {
        assert_eq!(w.e_tilde[j], ctx.nb_mul(g1, nb_qpow(w.e_tilde[j - 1], 1)));
    }
}

#[test]
fn tdd_round_trips_and_agrees_with_wba() {
    let ctx = shipped_ctx();
    for (n, k) in [(16usize, 3usize), (17, 4), (113, 3)] {
        let code = GabidulinCode::generate(n, k, 7 + n as u64).unwrap();
        let pre = tdd_precompute(&code, ctx).unwrap();
        for tau in 0..=code.tau_max() {
            let inst = DecodeInstance::for_code(code.clone(), tau, tau as u64).unwrap();
            let tdd = to_pb(&tdd_decode(ctx, &pre, &to_nb(&inst.received)).unwrap());
            let wba = wba_decode(&F, code.g(), k, &inst.received, WbaMode::ConstantTime, 1).unwrap();
            assert_eq!(tdd, inst.msg, "({n},{k}) tau {tau}");
            assert_eq!(tdd, wba);
        }
    }
}

#[test]
fn tdd_rejects_uncorrectable_errors() {
    let ctx = shipped_ctx();
    let code = GabidulinCode::generate(20, 4, 8).unwrap();
    let pre = tdd_precompute(&code, ctx).unwrap();
    let inst = DecodeInstance::for_code(code, 16, 1).unwrap();
    // beyond τ_max the decoder either fails or lands on another codeword
    let got = tdd_decode(ctx, &pre, &to_nb(&inst.received)).map(|m| to_pb(&m));
    assert_ne!(got, Ok(inst.msg.clone()));
    assert!(matches!(
        tdd_decode(ctx, &pre, &to_nb(&inst.received[..3])),
        Err(TddError::LengthMismatch { .. })
    ));
}
