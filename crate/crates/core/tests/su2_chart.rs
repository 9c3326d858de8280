use semiclass::preconnection::{canonical_xi, su2_3d_xi, Xi};
use semiclass::rational::{frac, int};
use semiclass::su2::*;
use semiclass::tensor::Tensor;

fn p(s: &str) -> Su2Poly {
    Su2Poly::parse(s).unwrap()
}

fn gens() -> [Su2Poly; 4] {
    Su2Poly::generators()
}

#[test]
fn jacobi_on_all_generator_triples() {
    for x in gens() {
        for y in gens() {
            for z in gens() {
                let j = &(&poisson_su2(&x, &poisson_su2(&y, &z)) + &poisson_su2(&y, &poisson_su2(&z, &x)))
                    + &poisson_su2(&z, &poisson_su2(&x, &y));
                assert!(j.is_zero());
            }
        }
        assert!(poisson_su2(&x, &x).is_zero());
    }
}

#[test]
fn vector_fields_are_derivations() {
    let samples = [p("a^2*b - c"), p("b*d + 3"), p("a*c^2*d"), p("d^3 - 1/2*a")];
    for v in Sl2::ALL {
        for f in &samples {
            for g in &samples {
                for der in [d_l, d_r] {
                    let lhs = der(v, &(f * g));
                    let rhs = &(&der(v, f) * g) + &(f * &der(v, g));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn derivation_respects_the_relation() {
    for v in Sl2::ALL {
        let lhs = d_l(v, &(&Su2Poly::a() * &Su2Poly::d()));
        let rhs = d_l(v, &p("1 + b*c"));
        assert_eq!(lhs, rhs);
    }
    assert!(d_l(Sl2::Three, &p("a*d")).is_zero());
}

#[test]
fn canonical_gamma_displays() {
    let a = Su2Poly::a();
    let g = gamma_canonical_su2(&a, &InvariantOneForm::basis(Sl2::Plus));
    assert_eq!(g, InvariantOneForm::basis(Sl2::Three).mul(&-&Su2Poly::b()));
    let one = Su2Poly::constant(int(1));
    for i in Sl2::ALL {
        assert!(gamma_canonical_su2(&one, &InvariantOneForm::basis(i)).is_zero());
    }
}

#[test]
fn canonical_xi_route_matches_closed_form() {
    let s = su2_data();
    let xi = canonical_xi(&s.algebra, &s.r);
    let coeffs = [Su2Poly::constant(int(1)), p("a"), p("b*c - 2*d"), p("a^2*c")];
    for x in gens().iter().chain([&p("a*b + c^2")]) {
        for i in Sl2::ALL {
            for f in &coeffs {
                let eta = InvariantOneForm::basis(i).mul(f);
                assert_eq!(gamma_from_xi_su2(&xi, x, &eta).unwrap(), gamma_canonical_su2(x, &eta));
            }
        }
    }
}

#[test]
fn canonical_gamma_is_compatible() {
    // d{x,y} = γ(x, dy) − γ(y, dx)
    for x in gens() {
        for y in gens() {
            let lhs = InvariantOneForm::exact(&poisson_su2(&x, &y));
            let rhs = gamma_canonical_su2(&x, &InvariantOneForm::exact(&y))
                .sub(&gamma_canonical_su2(&y, &InvariantOneForm::exact(&x)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn zero_xi_gives_bracket_only() {
    let xi = Xi { value: Tensor::zeros(3, 3) };
    let x = p("a*c");
    for i in Sl2::ALL {
        assert!(gamma_from_xi_su2(&xi, &x, &InvariantOneForm::basis(i)).unwrap().is_zero());
        let eta = InvariantOneForm::basis(i).mul(&p("b^2"));
        let mut want = InvariantOneForm::zero();
        want.0[i.index()] = poisson_su2(&x, &p("b^2"));
        assert_eq!(gamma_from_xi_su2(&xi, &x, &eta).unwrap(), want);
    }
}

#[test]
fn three_d_calculus_is_flat_for_any_lambda() {
    let g = &su2_data().algebra;
    for l in [int(-2), int(0), frac(5, 3)] {
        let xi = su2_3d_xi(g, &l).unwrap();
        for x in gens() {
            for y in gens() {
                for i in Sl2::ALL {
                    let r = curvature_action_su2(&xi, &x, &y, &InvariantOneForm::basis(i)).unwrap();
                    assert!(r.is_zero());
                }
            }
        }
    }
}

#[test]
fn three_d_torsion_two_routes() {
    let g = &su2_data().algebra;
    let l = int(-2);
    let xi = su2_3d_xi(g, &l).unwrap();
    let mut nonzero = 0;
    for x in gens() {
        for y in gens() {
            for z in gens() {
                let direct = torsion_pair_su2(&xi, &x, &y, &z).unwrap();
                let closed = &torsion_commutator_term(&x, &y, &z) - &torsion_display_3d(&l, &x, &y, &z);
                assert_eq!(direct, closed);
                nonzero += usize::from(!direct.is_zero());
            }
        }
    }
    assert!(nonzero > 0);
    let abc = torsion_pair_su2(&xi, &Su2Poly::a(), &Su2Poly::b(), &Su2Poly::c()).unwrap();
    assert_eq!(abc, p("1/2*a*b^2*c^2 + 1/2*a*b*c"));
}

#[test]
fn canonical_curvature_and_torsion_closed_forms() {
    let s = su2_data();
    let xi = canonical_xi(&s.algebra, &s.r);
    let (mut r_nonzero, mut t_nonzero) = (false, false);
    for x in gens() {
        for y in gens() {
            for i in Sl2::ALL {
                let r = curvature_action_su2(&xi, &x, &y, &InvariantOneForm::basis(i)).unwrap();
                assert_eq!(r, curvature_closed_canonical(&x, &y, i));
                r_nonzero |= !r.is_zero();
            }
            for z in gens() {
                let t = torsion_pair_su2(&xi, &x, &y, &z).unwrap();
                assert_eq!(t, torsion_closed_canonical(&x, &y, &z));
                t_nonzero |= !t.is_zero();
            }
        }
    }
    assert!(r_nonzero && t_nonzero);
}
