//! Quasitriangular structures, Schouten brackets, and cobrackets.
//!
//! Two-tensors `r` are stored as `r[i][j] = r^{ij}` against `e_i ⊗ e_j`.
//! A cobracket is rank 3 with the input leg first: `δ(e_a) = δ[a][b][c] e_b ⊗ e_c`.

use crate::error::{Error, Result};
use crate::lie::{mat_inverse, AlgebraKind, LieAlgebra};
use crate::rational::{frac, int, Rational};
use crate::tensor::Tensor;

/// An element of `g ⊗ g` meant as a classical r-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub value: Tensor,
}

impl RMatrix {
    pub fn new(value: Tensor) -> Result<Self> {
        if value.rank() != 2 {
            return Err(Error::DimensionMismatch("r-matrix must be rank 2".into()));
        }
        Ok(RMatrix { value })
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    /// `(r + r21)/2`.
    pub fn plus(&self) -> Tensor {
        self.value.symmetrize(0, 1).expect("rank 2")
    }

    /// `(r − r21)/2`.
    pub fn minus(&self) -> Tensor {
        self.value.antisymmetrize(0, 1).expect("rank 2")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    pub value: Tensor,
}

/// `r = Σ_{i<j} E_ij ⊗ E_ji + ½ Σ_kl (C⁻¹)_kl H_k ⊗ H_l` for `sl_n`, with
/// `C` the Cartan matrix. For `sl2` this is `e+ ⊗ e- + ¼ e3 ⊗ e3`.
pub fn standard_r(g: &LieAlgebra) -> Result<RMatrix> {
    let AlgebraKind::SlN(n) = *g.kind() else {
        return Err(Error::NoStandardR(g.name().to_string()));
    };
    let positive = n * (n - 1) / 2;
    let mut r = Tensor::zeros(2, g.dim());
    for k in 0..positive {
        r.set(&[k, positive + k], int(1));
    }
    let cinv = mat_inverse(&g.cartan_matrix().expect("sl_n"))?;
    let h0 = 2 * positive;
    for (k, row) in cinv.iter().enumerate() {
        for (l, v) in row.iter().enumerate() {
            r.set(&[h0 + k, h0 + l], v * frac(1, 2));
        }
    }
    RMatrix::new(r)
}

/// `r = X ⊗ H − H ⊗ X` on `b2`; antisymmetric, so `r₊ = 0`.
pub fn triangular_r_b2(g: &LieAlgebra) -> Result<RMatrix> {
    if *g.kind() != AlgebraKind::B2 {
        return Err(Error::NoStandardR(g.name().to_string()));
    }
    let h = g.index_of("H")?;
    let x = g.index_of("X")?;
    let mut r = Tensor::zeros(2, 2);
    r.set(&[x, h], int(1));
    r.set(&[h, x], int(-1));
    RMatrix::new(r)
}

/// `a ⊗ b − b ⊗ a` on basis elements; triangular whenever `[a, b] = 0`.
pub fn wedge_r(g: &LieAlgebra, a: &str, b: &str) -> Result<RMatrix> {
    let (i, j) = (g.index_of(a)?, g.index_of(b)?);
    let mut r = Tensor::zeros(2, g.dim());
    r.set(&[i, j], int(1));
    r.set(&[j, i], int(-1));
    RMatrix::new(r)
}

/// The stored r-matrix of a preset: standard for `sl_n`, triangular for `b2`.
pub fn preset_r(g: &LieAlgebra) -> Result<RMatrix> {
    match g.kind() {
        AlgebraKind::B2 => triangular_r_b2(g),
        _ => standard_r(g),
    }
}

fn check(g: &LieAlgebra, t: &Tensor, rank: usize) -> Result<()> {
    if t.rank() != rank || t.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "expected rank {rank} over dim {}, got rank {} over dim {}",
            g.dim(),
            t.rank(),
            t.dim()
        )));
    }
    Ok(())
}

/// `[a12, b13]`: bracket on the first legs, `a`'s second leg in the middle.
fn bracket_12_13(g: &LieAlgebra, a: &Tensor, b: &Tensor) -> Tensor {
    // a[i][j] f[i][k][p] -> [j][k][p]; with b[k][l] -> [j][p][l]
    let x = a.contract(g.f(), &[(0, 0)]).expect("dims checked");
    let y = x.contract(b, &[(1, 0)]).expect("dims checked");
    y.permute(&[1, 0, 2]).expect("valid")
}

/// `[a12, b23]`.
fn bracket_12_23(g: &LieAlgebra, a: &Tensor, b: &Tensor) -> Tensor {
    // a[i][j] f[j][k][p] -> [i][k][p]; with b[k][l] -> [i][p][l]
    let x = a.contract(g.f(), &[(1, 0)]).expect("dims checked");
    x.contract(b, &[(1, 0)]).expect("dims checked")
}

/// `[a13, b23]`: bracket on the second legs, landing in the third slot.
fn bracket_13_23(g: &LieAlgebra, a: &Tensor, b: &Tensor) -> Tensor {
    // a[i][j] f[j][l][p] -> [i][l][p]; with b[k][l] -> [i][p][k]
    let x = a.contract(g.f(), &[(1, 0)]).expect("dims checked");
    let y = x.contract(b, &[(1, 1)]).expect("dims checked");
    y.permute(&[0, 2, 1]).expect("valid")
}

/// `[[a, b]] = [a12, b13] + [a12, b23] + [a13, b23]`.
pub fn schouten(g: &LieAlgebra, a: &Tensor, b: &Tensor) -> Result<Tensor> {
    check(g, a, 2)?;
    check(g, b, 2)?;
    let t1 = bracket_12_13(g, a, b);
    let t2 = bracket_12_23(g, a, b);
    let t3 = bracket_13_23(g, a, b);
    t1.add(&t2)?.add(&t3)
}

pub fn cybe_residual(g: &LieAlgebra, r: &RMatrix) -> Result<Tensor> {
    schouten(g, &r.value, &r.value)
}

/// `n = [[r₋, r₋]]`.
pub fn n_tensor(g: &LieAlgebra, r: &RMatrix) -> Result<Tensor> {
    let rm = r.minus();
    schouten(g, &rm, &rm)
}

/// `m = [r₋13, r₋23]`.
pub fn m_tensor(g: &LieAlgebra, r: &RMatrix) -> Result<Tensor> {
    check(g, &r.value, 2)?;
    let rm = r.minus();
    Ok(bracket_13_23(g, &rm, &rm))
}

/// `δ(v) = ad_v(r)`: `δ_a^{bc} = f_ai^b r^{ic} + r^{bi} f_ai^c`.
pub fn cobracket_from_r(g: &LieAlgebra, r: &RMatrix) -> Result<Cobracket> {
    check(g, &r.value, 2)?;
    let d = g.dim();
    let mut data = Vec::with_capacity(d * d * d);
    for a in 0..d {
        data.extend(g.ad_action(a, &r.value).into_data());
    }
    Ok(Cobracket {
        value: Tensor::from_data(3, d, data)?,
    })
}

/// Slice `t[a]` of a tensor whose first axis is an input leg.
pub fn slice(t: &Tensor, a: usize) -> Tensor {
    let len = t.data().len() / t.dim();
    Tensor::from_data(t.rank() - 1, t.dim(), t.data()[a * len..(a + 1) * len].to_vec())
        .expect("slice size")
}

/// Stacks per-input slices back into a tensor with the input leg first.
pub fn stack(slices: Vec<Tensor>, dim: usize) -> Tensor {
    let rank = slices[0].rank() + 1;
    let data = slices.into_iter().flat_map(Tensor::into_data).collect();
    Tensor::from_data(rank, dim, data).expect("stack size")
}

/// Applies an input-leg-first linear map to the vector `x`.
pub fn apply_map(t: &Tensor, x: &Tensor) -> Tensor {
    x.contract(t, &[(0, 0)]).expect("same dim")
}

/// `δ([v,w]) − ad_v δ(w) + ad_w δ(v)`, indexed `[v][w][b][c]`.
pub fn cocycle_residual(g: &LieAlgebra, delta: &Cobracket) -> Result<Tensor> {
    check(g, &delta.value, 3)?;
    let d = g.dim();
    let mut slices = Vec::with_capacity(d * d);
    for v in 0..d {
        for w in 0..d {
            let vw = slice(&slice(g.f(), v), w);
            let lhs = apply_map(&delta.value, &vw);
            let t1 = g.ad_action(v, &slice(&delta.value, w));
            let t2 = g.ad_action(w, &slice(&delta.value, v));
            slices.push(lhs.sub(&t1)?.add(&t2)?);
        }
    }
    let flat: Vec<Rational> = slices.into_iter().flat_map(Tensor::into_data).collect();
    Tensor::from_data(4, d, flat)
}

/// Cyclic sum over the three output legs of `(δ ⊗ id) ∘ δ`, input leg first.
pub fn cojacobi_residual(g: &LieAlgebra, delta: &Cobracket) -> Result<Tensor> {
    check(g, &delta.value, 3)?;
    // x[a][c][p][q] = δ_a^{bc} δ_b^{pq}, reordered to [a][p][q][c]
    let x = delta
        .value
        .contract(&delta.value, &[(1, 0)])?
        .permute(&[0, 2, 3, 1])?;
    let c1 = x.permute(&[0, 2, 3, 1])?;
    let c2 = x.permute(&[0, 3, 1, 2])?;
    x.add(&c1)?.add(&c2)
}

/// First-order twist relation `r₋ = f21 − f`.
pub fn r_minus_from_cochain(f: &Tensor) -> Result<Tensor> {
    if f.rank() != 2 {
        return Err(Error::DimensionMismatch("cochain must be rank 2".into()));
    }
    f.flip(0, 1)?.sub(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::preset_algebra;

    fn naive_schouten(g: &LieAlgebra, a: &Tensor, b: &Tensor) -> Tensor {
        let d = g.dim();
        let mut out = Tensor::zeros(3, d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let ab = a.get(&[i, j]) * b.get(&[k, l]);
                        for p in 0..d {
                            out.add_at(&[p, j, l], &(&ab * g.structure(i, k, p)));
                            out.add_at(&[i, p, l], &(&ab * g.structure(j, k, p)));
                            out.add_at(&[i, k, p], &(&ab * g.structure(j, l, p)));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn sl2_standard_r_and_splits() {
        let g = LieAlgebra::sl(2);
        let r = standard_r(&g).unwrap();
        let mut expect = Tensor::zeros(2, 3);
        expect.set(&[0, 1], int(1));
        expect.set(&[2, 2], frac(1, 4));
        assert_eq!(r.value, expect);
        let mut rm = Tensor::zeros(2, 3);
        rm.set(&[0, 1], frac(1, 2));
        rm.set(&[1, 0], frac(-1, 2));
        assert_eq!(r.minus(), rm);
        assert_eq!(rm.flip(0, 1).unwrap(), rm.neg());
        let mut rp = Tensor::zeros(2, 3);
        rp.set(&[0, 1], frac(1, 2));
        rp.set(&[1, 0], frac(1, 2));
        rp.set(&[2, 2], frac(1, 4));
        assert_eq!(r.plus(), rp);
    }

    #[test]
    fn schouten_matches_naive_loops() {
        let g = LieAlgebra::sl(2);
        let r = standard_r(&g).unwrap();
        let rm = r.minus();
        let arb = Tensor::from_fn(2, 3, |i| int((i[0] * 3 + i[1]) as i64 - 4));
        for (a, b) in [(&rm, &rm), (&r.value, &arb), (&arb, &rm)] {
            assert_eq!(schouten(&g, a, b).unwrap(), naive_schouten(&g, a, b));
        }
        assert!(schouten(&g, &Tensor::zeros(2, 3), &arb).unwrap().is_zero());
    }

    #[test]
    fn sl2_n_is_nonzero_invariant_antisymmetric() {
        let g = LieAlgebra::sl(2);
        let r = standard_r(&g).unwrap();
        let n = n_tensor(&g, &r).unwrap();
        assert!(!n.is_zero());
        assert!(g.ad_invariance_residual(&n).is_zero());
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            assert_eq!(n.flip(i, j).unwrap(), n.neg());
        }
        let rp = r.plus();
        assert_eq!(n, schouten(&g, &rp, &rp).unwrap().neg());
    }

    #[test]
    fn cyclic_sum_of_m_is_n() {
        for name in ["sl2", "sl3"] {
            let g = preset_algebra(name).unwrap();
            let r = standard_r(&g).unwrap();
            let m = m_tensor(&g, &r).unwrap();
            let cyc = m
                .add(&m.permute(&[1, 2, 0]).unwrap())
                .unwrap()
                .add(&m.permute(&[2, 0, 1]).unwrap())
                .unwrap();
            assert_eq!(cyc, n_tensor(&g, &r).unwrap());
        }
    }

    #[test]
    fn sl2_cobracket_display() {
        let g = LieAlgebra::sl(2);
        let delta = cobracket_from_r(&g, &standard_r(&g).unwrap()).unwrap();
        for i in [0, 1] {
            let mut expect = Tensor::zeros(2, 3);
            expect.set(&[i, 2], frac(1, 2));
            expect.set(&[2, i], frac(-1, 2));
            assert_eq!(slice(&delta.value, i), expect);
        }
        assert!(cocycle_residual(&g, &delta).unwrap().is_zero());
        assert!(cojacobi_residual(&g, &delta).unwrap().is_zero());
    }

    #[test]
    fn perturbed_cobracket_fails() {
        let g = LieAlgebra::sl(2);
        let mut delta = cobracket_from_r(&g, &standard_r(&g).unwrap()).unwrap();
        let v = delta.value.get(&[2, 0, 1]) + int(1);
        delta.value.set(&[2, 0, 1], v);
        let co = cocycle_residual(&g, &delta).unwrap();
        let cj = cojacobi_residual(&g, &delta).unwrap();
        assert!(!co.is_zero() || !cj.is_zero());
    }

    #[test]
    fn abelian_and_zero_cobrackets() {
        let g = LieAlgebra::abelian(3);
        let r = RMatrix::new(Tensor::from_fn(2, 3, |i| int(i[0] as i64 - i[1] as i64 * 2))).unwrap();
        let delta = cobracket_from_r(&g, &r).unwrap();
        assert!(delta.value.is_zero());
        let zero = Cobracket { value: Tensor::zeros(3, 3) };
        let sl2 = LieAlgebra::sl(2);
        assert!(cocycle_residual(&sl2, &zero).unwrap().is_zero());
        assert!(cojacobi_residual(&sl2, &zero).unwrap().is_zero());
    }

    #[test]
    fn b2_triangular() {
        let g = LieAlgebra::b2();
        let r = triangular_r_b2(&g).unwrap();
        assert!(r.plus().is_zero());
        assert!(cybe_residual(&g, &r).unwrap().is_zero());
        assert!(n_tensor(&g, &r).unwrap().is_zero());
        let delta = cobracket_from_r(&g, &r).unwrap();
        assert!(cocycle_residual(&g, &delta).unwrap().is_zero());
        assert!(triangular_r_b2(&LieAlgebra::sl(2)).is_err());
        assert!(standard_r(&g).is_err());
    }

    #[test]
    fn cochain_twist() {
        let g = LieAlgebra::sl(2);
        let rm = standard_r(&g).unwrap().minus();
        assert_eq!(r_minus_from_cochain(&rm.scale(&frac(-1, 2))).unwrap(), rm);
        let sym = Tensor::from_fn(2, 3, |i| int((i[0] + i[1]) as i64));
        assert!(r_minus_from_cochain(&sym).unwrap().is_zero());
        let mut f = Tensor::zeros(2, 3);
        f.set(&[0, 1], int(1));
        let mut expect = Tensor::zeros(2, 3);
        expect.set(&[1, 0], int(1));
        expect.set(&[0, 1], int(-1));
        assert_eq!(r_minus_from_cochain(&f).unwrap(), expect);
    }
}
