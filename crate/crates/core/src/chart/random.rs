//! Seeded random charts and forms for property checks.

use std::sync::Arc;

use rand::Rng;

use super::{Chart, FormField, PolyTensor};
use crate::lie::mat_inverse;
use crate::poly::{coordinate_vars, Monomial, MultiPoly};
use crate::rational::{int, Rational};

/// Symmetry imposed on the lowered symbols `Γ_{pqn} = ω_{pl} Γ^l_{qn}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaShape {
    /// Totally symmetric: compatible, torsion free, `ω` central.
    Symmetric,
    /// Symmetric in `(p, q)` only, broken at one entry: compatible, not central.
    PairSymmetric,
    /// No symmetry at all.
    Generic,
}

/// Small integer coefficients in `[-3, 3]`, total degree at most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, vars: &Arc<[String]>, max_deg: u32, nterms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(vars);
    for _ in 0..nterms {
        let deg = rng.gen_range(0..=max_deg);
        let mut exps = vec![0u32; vars.len()];
        for _ in 0..deg {
            exps[rng.gen_range(0..vars.len())] += 1;
        }
        p.add_term(Monomial(exps), int(rng.gen_range(-3..=3)));
    }
    p
}

pub fn random_one_form<R: Rng>(rng: &mut R, chart: &Chart, max_deg: u32, nterms: usize) -> FormField {
    FormField::one_form(
        (0..chart.n())
            .map(|_| random_poly(rng, chart.vars(), max_deg, nterms))
            .collect(),
    )
}

/// Standard Darboux pair `(ω^{ij}, ω_{ij})` on `n = 2m` coordinates.
pub fn darboux(n: usize) -> (PolyTensor, PolyTensor) {
    assert!(n.is_multiple_of(2) && n > 0);
    let vars = coordinate_vars(n);
    let m = n / 2;
    let c = |v: i64| MultiPoly::constant(&vars, int(v));
    let om = PolyTensor::from_fn(2, n, |x| match (x[0], x[1]) {
        (i, j) if j == i + m => c(1),
        (i, j) if i == j + m => c(-1),
        _ => c(0),
    });
    let low = PolyTensor::from_fn(2, n, |x| -om.get(x));
    (om, low)
}

/// Builds `Γ^l_{qn} = ω^{lp} Γ_{pqn}` from lowered symbols.
pub fn chart_from_lowered(omega: PolyTensor, omega_lower: PolyTensor, lowered: &PolyTensor) -> Chart {
    let n = omega.n();
    let vars = omega.data()[0].vars().clone();
    let gamma = PolyTensor::from_fn(3, n, |x| {
        let mut s = MultiPoly::zero(&vars);
        for p in 0..n {
            s += &(omega.get(&[x[0], p]) * lowered.get(&[p, x[1], x[2]]));
        }
        s
    });
    Chart::new(omega, gamma, Some(omega_lower)).expect("Darboux data is valid")
}

/// Darboux chart with polynomial symbols of degree at most `max_deg`.
pub fn random_darboux_chart<R: Rng>(rng: &mut R, n: usize, shape: GammaShape, max_deg: u32) -> Chart {
    let (om, low) = darboux(n);
    let vars = coordinate_vars(n);
    let raw = PolyTensor::from_fn(3, n, |_| random_poly(rng, &vars, max_deg, 2));
    let lowered = match shape {
        GammaShape::Generic => raw,
        GammaShape::Symmetric | GammaShape::PairSymmetric => {
            let mut sym = PolyTensor::from_fn(3, n, |x| {
                let mut s = MultiPoly::zero(&vars);
                for p in PERMS3 {
                    s += raw.get(&[x[p[0]], x[p[1]], x[p[2]]]);
                }
                s
            });
            if shape == GammaShape::PairSymmetric {
                // Γ_{001} alone: (p, q) = (0, 0) keeps pair symmetry, breaks total
                let mut bump = random_poly(rng, &vars, max_deg, 2);
                if bump.is_zero() {
                    bump = MultiPoly::one(&vars);
                }
                let e = sym.get(&[0, 0, 1]) + &bump;
                sym.set(&[0, 0, 1], e);
            }
            sym
        }
    };
    chart_from_lowered(om, low, &lowered)
}

/// Constant nondegenerate `ω = P J Pᵀ` with `Γ = 0`.
pub fn random_flat_chart<R: Rng>(rng: &mut R, n: usize) -> Chart {
    let (j, _) = darboux(n);
    let vars = coordinate_vars(n);
    let jm: Vec<Vec<Rational>> = (0..n)
        .map(|a| (0..n).map(|b| j.get(&[a, b]).constant_term()).collect())
        .collect();
    loop {
        let p: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect())
            .collect();
        let w: Vec<Vec<Rational>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut s = int(0);
                        for k in 0..n {
                            for l in 0..n {
                                s += &p[a][k] * &jm[k][l] * &p[b][l];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        let Ok(inv) = mat_inverse(&w) else { continue };
        let to_t = |m: &Vec<Vec<Rational>>| {
            PolyTensor::from_fn(2, n, |x| MultiPoly::constant(&vars, m[x[0]][x[1]].clone()))
        };
        return Chart::new(to_t(&w), PolyTensor::zeros(&vars, 3, n), Some(to_t(&inv)))
            .expect("inverse is exact");
    }
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// True iff `Γ_{ikj}` is invariant under every permutation of its indices.
pub fn is_totally_symmetric(t: &PolyTensor) -> bool {
    PERMS3.iter().all(|p| &t.permute(p) == t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes_behave() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 4] {
            let c = random_darboux_chart(&mut rng, n, GammaShape::Symmetric, 2);
            assert!(c.compatibility_residual().is_zero());
            assert!(c.torsion().is_zero());
            assert!(is_totally_symmetric(&c.lowered_gamma().unwrap()));
            let c = random_darboux_chart(&mut rng, n, GammaShape::PairSymmetric, 2);
            assert!(c.compatibility_residual().is_zero());
            assert!(!is_totally_symmetric(&c.lowered_gamma().unwrap()));
        }
    }

    #[test]
    fn flat_chart_is_nondegenerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = random_flat_chart(&mut rng, 4);
        assert!(c.omega_lower().is_some());
        assert!(c.jacobi_residual().is_zero());
    }
}
