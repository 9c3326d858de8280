use proptest::prelude::*;

use semiclass::bialgebra::{preset_r, standard_r};
use semiclass::lie::{preset_algebra, LieAlgebra};
use semiclass::moduli::cubic_casimir;
use semiclass::preconnection::{
    bicovariance_residual, hat_from_xi, j1_obstruction, propj1_residual, thhh_residual,
    xi_from_hat, Xi, XiHat,
};
use semiclass::rational::int;
use semiclass::tensor::Tensor;

fn small_tensor(d: usize) -> impl Strategy<Value = Tensor> {
    prop::collection::vec(-2i64..=2, d * d * d)
        .prop_map(move |v| Tensor::from_data(3, d, v.into_iter().map(int).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // the same obstruction written through Ξ and through Ξ̂
    #[test]
    fn propj1_equals_thhh_form_on_sl2(t in small_tensor(3)) {
        let g = LieAlgebra::sl(2);
        let r = standard_r(&g).unwrap();
        let xi = Xi { value: t };
        let hat = hat_from_xi(&g, &xi, &r).unwrap();
        prop_assert_eq!(propj1_residual(&g, &xi, &r).unwrap(), thhh_residual(&g, &hat, &r).unwrap());
    }

    #[test]
    fn propj1_equals_thhh_form_on_b2(t in small_tensor(2)) {
        let g = preset_algebra("b2").unwrap();
        let r = preset_r(&g).unwrap();
        let xi = Xi { value: t };
        let hat = hat_from_xi(&g, &xi, &r).unwrap();
        prop_assert_eq!(propj1_residual(&g, &xi, &r).unwrap(), thhh_residual(&g, &hat, &r).unwrap());
    }
}

#[test]
fn j1_matches_general_form_on_invariant_hats() {
    for n in [2, 3] {
        let g = LieAlgebra::sl(n);
        let r = standard_r(&g).unwrap();
        let mut hats = vec![XiHat { value: Tensor::zeros(3, g.dim()) }];
        if n == 3 {
            hats.push(cubic_casimir(3).unwrap());
        }
        for hat in hats {
            assert!(bicovariance_residual(&hat, &g).unwrap().is_zero());
            let j1 = j1_obstruction(&g, &hat, &r).unwrap();
            assert_eq!(j1, thhh_residual(&g, &hat, &r).unwrap());
            let xi = xi_from_hat(&g, &hat, &r).unwrap();
            assert_eq!(j1, propj1_residual(&g, &xi, &r).unwrap());
        }
    }
}

#[test]
fn casimir_shift_changes_the_obstruction() {
    let g = LieAlgebra::sl(3);
    let r = standard_r(&g).unwrap();
    let zero = j1_obstruction(&g, &XiHat { value: Tensor::zeros(3, 8) }, &r).unwrap();
    let cas = j1_obstruction(&g, &cubic_casimir(3).unwrap(), &r).unwrap();
    assert!(!zero.is_zero());
    assert_ne!(zero, cas);
}
