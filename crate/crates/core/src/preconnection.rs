//! Lie-algebraic preconnection data `Ξ`, `Ξ̂` and their obstruction tensors.
//!
//! Layout is input leg first: `Ξ(e_a) = Ξ[a][b][c] e_b ⊗ e_c`. The dual
//! notation used by some routes is fixed once here:
//! `Ξ(φ,ψ)(v) = (φ⊗ψ)(Ξ(v))` and `ad*_u φ (w) = φ([w,u])`.

use num_traits::Zero;

use crate::bialgebra::{n_tensor, Cobracket, RMatrix};
use crate::error::{Error, Result};
use crate::lie::{AlgebraKind, LieAlgebra};
use crate::rational::{frac, Rational};
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xi {
    pub value: Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiHat {
    pub value: Tensor,
}

fn check3(g: &LieAlgebra, t: &Tensor) -> Result<()> {
    if t.rank() != 3 || t.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "expected a rank-3 tensor over dim {}",
            g.dim()
        )));
    }
    Ok(())
}

/// `K(v) = r₋¹ ⊗ [r₋², v]`, the shift between `Ξ` and `Ξ̂`.
fn r_shift(g: &LieAlgebra, r: &RMatrix) -> Tensor {
    // rm[b][j] f[j][a][c] -> [b][a][c]
    r.minus()
        .contract(g.f(), &[(1, 0)])
        .and_then(|t| t.permute(&[1, 0, 2]))
        .expect("same algebra")
}

/// `Ξ(v) = −r₋¹ ⊗ [r₋², v]`, the preconnection with `Ξ̂ = 0`.
pub fn canonical_xi(g: &LieAlgebra, r: &RMatrix) -> Xi {
    Xi {
        value: r_shift(g, r).neg(),
    }
}

pub fn hat_from_xi(g: &LieAlgebra, xi: &Xi, r: &RMatrix) -> Result<XiHat> {
    check3(g, &xi.value)?;
    Ok(XiHat {
        value: xi.value.add(&r_shift(g, r))?,
    })
}

pub fn xi_from_hat(g: &LieAlgebra, hat: &XiHat, r: &RMatrix) -> Result<Xi> {
    check3(g, &hat.value)?;
    Ok(Xi {
        value: hat.value.sub(&r_shift(g, r))?,
    })
}

/// `Ξ − Ξ∘flip − δ`, flipping the two output legs.
pub fn compatibility_residual(xi: &Xi, delta: &Cobracket) -> Result<Tensor> {
    xi.value.sub(&xi.value.flip(1, 2)?)?.sub(&delta.value)
}

pub fn symmetry_residual(hat: &XiHat) -> Result<Tensor> {
    hat.value.sub(&hat.value.flip(1, 2)?)
}

/// `Ξ̂([v,w]) − [Ξ̂¹(v),w] ⊗ Ξ̂²(v) − Ξ̂¹(v) ⊗ [Ξ̂²(v),w]`, indexed `[v][w][b][c]`.
pub fn bicovariance_residual(hat: &XiHat, g: &LieAlgebra) -> Result<Tensor> {
    check3(g, &hat.value)?;
    let x = &hat.value;
    // Σ_a f_vw^a X[a][b][c]
    let t0 = g.f().contract(x, &[(2, 0)])?;
    // Σ_p X[v][p][c] f_pw^b -> [v][c][w][b] -> [v][w][b][c]
    let t1 = x.contract(g.f(), &[(1, 0)])?.permute(&[0, 2, 3, 1])?;
    // Σ_p X[v][b][p] f_pw^c -> [v][b][w][c] -> [v][w][b][c]
    let t2 = x.contract(g.f(), &[(2, 0)])?.permute(&[0, 2, 1, 3])?;
    t0.sub(&t1)?.sub(&t2)
}

/// `(id⊗Ξ̂)Ξ̂(v) − (τ⊗id)(id⊗Ξ̂)Ξ̂(v)`, indexed `[v][b][d][e]`.
pub fn e_tensor(hat: &XiHat) -> Result<Tensor> {
    let p = hat.value.contract(&hat.value, &[(2, 0)])?;
    p.sub(&p.flip(1, 2)?)
}

/// `e(v) + n¹ ⊗ n² ⊗ [v, n³]`, indexed `[v][b][d][e]`.
pub fn j1_obstruction(g: &LieAlgebra, hat: &XiHat, r: &RMatrix) -> Result<Tensor> {
    check3(g, &hat.value)?;
    let n = n_tensor(g, r)?;
    // n[b][d][k] f[v][k][e] -> [b][d][v][e] -> [v][b][d][e]
    let nterm = n.contract(g.f(), &[(2, 1)])?.permute(&[2, 0, 1, 3])?;
    e_tensor(hat)?.add(&nterm)
}

/// The three-dimensional left-covariant calculus on `sl2`:
/// `Ξ(e±) = −½ e3 ⊗ e±`, `Ξ(e3) = ½ λ₃ e3 ⊗ e3`.
pub fn su2_3d_xi(g: &LieAlgebra, lambda3: &Rational) -> Result<Xi> {
    if *g.kind() != AlgebraKind::SlN(2) {
        return Err(Error::InvalidAlgebra(format!(
            "the 3-d calculus lives on sl2, not {}",
            g.name()
        )));
    }
    let (p, m, h) = (g.index_of("e+")?, g.index_of("e-")?, g.index_of("e3")?);
    let mut t = Tensor::zeros(3, 3);
    t.set(&[p, h, p], frac(-1, 2));
    t.set(&[m, h, m], frac(-1, 2));
    t.set(&[h, h, h], lambda3 * frac(1, 2));
    Ok(Xi { value: t })
}

/// Covector-level operations in the fixed dual dictionary.
pub mod dual {
    use super::*;

    pub type Covector = Vec<Rational>;

    pub fn basis(d: usize, b: usize) -> Covector {
        let mut v = vec![Rational::zero(); d];
        v[b] = Rational::from_integer(1.into());
        v
    }

    /// `Ξ(φ,ψ)` as a covector: `v ↦ Σ φ_b ψ_c Ξ[v][b][c]`.
    pub fn xi(t: &Tensor, phi: &[Rational], psi: &[Rational]) -> Covector {
        let d = t.dim();
        let mut out = vec![Rational::zero(); d];
        for b in 0..d {
            if phi[b].is_zero() {
                continue;
            }
            for c in 0..d {
                if psi[c].is_zero() {
                    continue;
                }
                let w = &phi[b] * &psi[c];
                for (v, o) in out.iter_mut().enumerate() {
                    let x = t.get(&[v, b, c]);
                    if !x.is_zero() {
                        *o += &w * x;
                    }
                }
            }
        }
        out
    }

    /// `ad*_{e_u} φ`: `w ↦ φ([e_w, e_u])`.
    pub fn ad_star(g: &LieAlgebra, u: usize, phi: &[Rational]) -> Covector {
        let d = g.dim();
        (0..d)
            .map(|w| {
                (0..d)
                    .filter(|&c| !phi[c].is_zero())
                    .map(|c| &phi[c] * g.structure(w, u, c))
                    .sum()
            })
            .collect()
    }

    pub fn add_scaled(acc: &mut [Rational], c: &Rational, x: &[Rational]) {
        if c.is_zero() {
            return;
        }
        for (a, b) in acc.iter_mut().zip(x) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
}

/// Packs `f(φ=e^b, ψ=e^d, ζ=e^e)(e_v)` into a tensor `[v][b][d][e]`.
fn pack(d: usize, mut f: impl FnMut(usize, usize, usize) -> dual::Covector) -> Tensor {
    let mut out = Tensor::zeros(4, d);
    for b in 0..d {
        for dd in 0..d {
            for e in 0..d {
                let val = f(b, dd, e);
                for (v, x) in val.into_iter().enumerate() {
                    out.set(&[v, b, dd, e], x);
                }
            }
        }
    }
    out
}

/// Left side minus right side of the first-super-Jacobi equation in terms
/// of `Ξ`, term for term:
///
/// `Ξ(φ,Ξ(ψ,ζ)) − Ξ(ψ,Ξ(φ,ζ)) − φ(r₋¹) Ξ(ad*_{r₋²}ψ, ζ) − ψ(r₋²) Ξ(ad*_{r₋¹}φ, ζ)`.
pub fn propj1_residual(g: &LieAlgebra, xi: &Xi, r: &RMatrix) -> Result<Tensor> {
    check3(g, &xi.value)?;
    let d = g.dim();
    let t = &xi.value;
    let rm = r.minus();
    Ok(pack(d, |b, dd, e| {
        let (phi, psi, zeta) = (dual::basis(d, b), dual::basis(d, dd), dual::basis(d, e));
        let mut out = dual::xi(t, &phi, &dual::xi(t, &psi, &zeta));
        let second = dual::xi(t, &psi, &dual::xi(t, &phi, &zeta));
        dual::add_scaled(&mut out, &Rational::from_integer((-1).into()), &second);
        for (idx, c) in rm.nonzeros() {
            let (i, j) = (idx[0], idx[1]);
            // φ(r₋¹) = φ_i, ψ(r₋²) = ψ_j
            if !phi[i].is_zero() {
                let term = dual::xi(t, &dual::ad_star(g, j, &psi), &zeta);
                dual::add_scaled(&mut out, &-(c * &phi[i]), &term);
            }
            if !psi[j].is_zero() {
                let term = dual::xi(t, &dual::ad_star(g, i, &phi), &zeta);
                dual::add_scaled(&mut out, &-(c * &psi[j]), &term);
            }
        }
        out
    }))
}

/// The same obstruction written through `Ξ̂`, including the `r₋` terms that
/// drop out when `Ξ̂` is ad-invariant.
pub fn thhh_residual(g: &LieAlgebra, hat: &XiHat, r: &RMatrix) -> Result<Tensor> {
    check3(g, &hat.value)?;
    let d = g.dim();
    let t = &hat.value;
    let rm = r.minus();
    let n = n_tensor(g, r)?;
    let one = Rational::from_integer(1.into());
    let minus_one = -one.clone();
    Ok(pack(d, |b, dd, e| {
        let (phi, psi, zeta) = (dual::basis(d, b), dual::basis(d, dd), dual::basis(d, e));
        let mut out = dual::xi(t, &phi, &dual::xi(t, &psi, &zeta));
        dual::add_scaled(&mut out, &minus_one, &dual::xi(t, &psi, &dual::xi(t, &phi, &zeta)));
        // φ(n¹) ψ(n²) ad*_{n³} ζ
        for k in 0..d {
            let c = n.get(&[b, dd, k]);
            if !c.is_zero() {
                dual::add_scaled(&mut out, c, &dual::ad_star(g, k, &zeta));
            }
        }
        // ± χ(r₋¹)(ad*_{r₋²} Ξ̂(ω,ζ) − Ξ̂(ω, ad*_{r₋²} ζ) − Ξ̂(ad*_{r₋²} ω, ζ))
        let bracket = |j: usize, w: &[Rational]| {
            let mut acc = dual::ad_star(g, j, &dual::xi(t, w, &zeta));
            dual::add_scaled(&mut acc, &minus_one, &dual::xi(t, w, &dual::ad_star(g, j, &zeta)));
            dual::add_scaled(&mut acc, &minus_one, &dual::xi(t, &dual::ad_star(g, j, w), &zeta));
            acc
        };
        for (idx, c) in rm.nonzeros() {
            let (i, j) = (idx[0], idx[1]);
            if !phi[i].is_zero() {
                dual::add_scaled(&mut out, &(c * &phi[i]), &bracket(j, &psi));
            }
            if !psi[i].is_zero() {
                dual::add_scaled(&mut out, &-(c * &psi[i]), &bracket(j, &phi));
            }
        }
        out
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{cobracket_from_r, slice, standard_r, triangular_r_b2};
    use crate::rational::int;

    fn sl2() -> (LieAlgebra, RMatrix) {
        let g = LieAlgebra::sl(2);
        let r = standard_r(&g).unwrap();
        (g, r)
    }

    #[test]
    fn canonical_xi_sl2_by_hand() {
        let (g, r) = sl2();
        let xi = canonical_xi(&g, &r).value;
        let mut e_plus = Tensor::zeros(2, 3);
        e_plus.set(&[0, 2], frac(1, 2));
        assert_eq!(slice(&xi, 0), e_plus);
        let mut e_minus = Tensor::zeros(2, 3);
        e_minus.set(&[1, 2], frac(1, 2));
        assert_eq!(slice(&xi, 1), e_minus);
        let mut e3 = Tensor::zeros(2, 3);
        e3.set(&[0, 1], int(-1));
        e3.set(&[1, 0], int(-1));
        assert_eq!(slice(&xi, 2), e3);
    }

    #[test]
    fn canonical_is_compatible() {
        let (g, r) = sl2();
        let xi = canonical_xi(&g, &r);
        let delta = cobracket_from_r(&g, &r).unwrap();
        assert!(compatibility_residual(&xi, &delta).unwrap().is_zero());
        assert!(hat_from_xi(&g, &xi, &r).unwrap().value.is_zero());
        let anti = xi.value.antisymmetrize(1, 2).unwrap().scale(&int(2));
        assert_eq!(slice(&anti, 0), slice(&delta.value, 0));
    }

    #[test]
    fn hat_round_trip() {
        let (g, r) = sl2();
        let t = Tensor::from_fn(3, 3, |i| frac(i[0] as i64 - i[2] as i64, 1 + i[1] as i64));
        let hat = hat_from_xi(&g, &Xi { value: t.clone() }, &r).unwrap();
        assert_eq!(xi_from_hat(&g, &hat, &r).unwrap().value, t);
        let zero = XiHat { value: Tensor::zeros(3, 3) };
        assert_eq!(xi_from_hat(&g, &zero, &r).unwrap(), canonical_xi(&g, &r));
    }

    #[test]
    fn su2_3d_compatible_for_any_lambda() {
        let (g, r) = sl2();
        let delta = cobracket_from_r(&g, &r).unwrap();
        for l in [0, -2, 5] {
            let xi = su2_3d_xi(&g, &int(l)).unwrap();
            assert!(compatibility_residual(&xi, &delta).unwrap().is_zero(), "λ₃ = {l}");
        }
        assert!(slice(&su2_3d_xi(&g, &int(0)).unwrap().value, 2).is_zero());
    }

    #[test]
    fn j1_is_pure_n_term_at_zero() {
        let (g, r) = sl2();
        let zero = XiHat { value: Tensor::zeros(3, 3) };
        let j = j1_obstruction(&g, &zero, &r).unwrap();
        assert!(!j.is_zero());
        let b2 = LieAlgebra::b2();
        let rt = triangular_r_b2(&b2).unwrap();
        let zero2 = XiHat { value: Tensor::zeros(3, 2) };
        assert!(j1_obstruction(&b2, &zero2, &rt).unwrap().is_zero());
    }

    #[test]
    fn bicovariance_of_zero_and_3d() {
        let (g, r) = sl2();
        assert!(bicovariance_residual(&XiHat { value: Tensor::zeros(3, 3) }, &g)
            .unwrap()
            .is_zero());
        let hat = hat_from_xi(&g, &su2_3d_xi(&g, &int(-2)).unwrap(), &r).unwrap();
        assert!(!bicovariance_residual(&hat, &g).unwrap().is_zero());
    }

    #[test]
    fn propj1_and_thhh_agree() {
        let (g, r) = sl2();
        for xi in [canonical_xi(&g, &r), su2_3d_xi(&g, &int(-2)).unwrap()] {
            let hat = hat_from_xi(&g, &xi, &r).unwrap();
            assert_eq!(
                propj1_residual(&g, &xi, &r).unwrap(),
                thhh_residual(&g, &hat, &r).unwrap()
            );
        }
    }
}
