//! A commuting-square algebra: the one relation is a genuine two-term linear
//! combination, exercising the non-monomial ideal reduction that the stock
//! loop algebras never touch.
//!
//! Quiver: 1 --a--> 2 --b--> 4 and 1 --c--> 3 --d--> 4, with
//! (a then b) = (c then d). Expected values derived by hand: ten paths of
//! length < 3 modulo a one-dimensional ideal give dimension 9; the
//! indecomposable projective at vertex 1 has one basis path per vertex; its
//! submodule chain L4 < (0,1,0,1) < (0,1,1,1) < P1 realizes the measure
//! {1,2,3,4} under unit weights.

use grm_core::chains::gr_chain;
use grm_core::config::Caps;
use grm_core::gamma::certify_chain;
use grm_core::measure::{gr_measure, MeasureValue};
use grm_core::module::LengthFunction;
use grm_core::quiver::{build_algebra, projective, AlgebraSpec, BoundQuiverAlgebra, Quiver};
use std::sync::Arc;

fn square(prime: u64) -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "4".into()),
            ("c".into(), "1".into(), "3".into()),
            ("d".into(), "3".into(), "4".into()),
        ],
    )
    .unwrap();
    build_algebra(AlgebraSpec {
        quiver,
        // (first a, then b) - (first c, then d)
        relations: vec![vec![(1, vec![0, 1]), (-1, vec![2, 3])]],
        nilpotency_bound: 3,
        prime,
    })
    .unwrap()
}

#[test]
fn commuting_square_has_dimension_nine() {
    for p in [2u64, 3, 5] {
        let alg = square(p);
        assert_eq!(alg.dim(), 9, "p = {p}");
        let p1 = projective(&alg, 0).unwrap();
        assert_eq!(p1.dims(), &[1, 1, 1, 1]);
        // the two length-two paths act identically on P1
        let ab = p1.eval_path(&[0, 1]);
        let cd = p1.eval_path(&[2, 3]);
        assert_eq!(ab, cd);
        assert_eq!(ab.rank(), 1);
    }
}

#[test]
fn measure_and_chain_over_the_square() {
    for p in [2u64, 3] {
        let alg = square(p);
        let p1 = projective(&alg, 0).unwrap();
        let lambda = LengthFunction::ones(4);
        let caps = Caps::default();
        let (mu, witness) = gr_measure(&p1, &lambda, &caps).unwrap();
        assert_eq!(mu, MeasureValue::from_ints(&[1, 2, 3, 4]));
        assert_eq!(witness.chain.len(), 4);
        let chain = gr_chain(&p1, &lambda, &caps).unwrap();
        assert_eq!(chain.ell(), 3);
        let dims: Vec<Vec<usize>> = chain
            .steps
            .iter()
            .map(|s| s.module.dims().to_vec())
            .collect();
        assert_eq!(
            dims,
            vec![vec![1, 1, 1, 1], vec![1, 1, 1, 0], vec![1, 0, 0, 0]]
        );
        let cert = certify_chain(&chain, &caps).unwrap();
        assert!(cert.pass);
        assert!(cert.gldim <= 3);
    }
}

#[test]
fn large_primes_behave_like_small_ones() {
    // the same loop-algebra chain at a large prime
    let alg = grm_core::fixtures::lambda1(101).unwrap();
    let p1 = projective(&alg, 0).unwrap();
    let caps = Caps::default();
    let chain = gr_chain(&p1, &LengthFunction::ones(2), &caps).unwrap();
    assert_eq!(chain.ell(), 3);
    assert_eq!(
        chain.steps[0].measure.as_ref().unwrap(),
        &MeasureValue::from_ints(&[1, 2, 4])
    );
    let cert = certify_chain(&chain, &caps).unwrap();
    assert!(cert.pass);
    assert_eq!(cert.gldim, 2);

    // field arithmetic near the top of the supported range
    let f = grm_core::field::PrimeField::new((1 << 31) - 1).unwrap();
    let a = f.p() - 1;
    assert_eq!(f.mul(a, a), 1); // (-1)^2
    assert_eq!(f.inv(a), a);
    assert_eq!(f.add(a, 1), 0);
}
