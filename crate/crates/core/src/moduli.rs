//! Classification of symmetric ad-invariant `Ξ̂ : g → Sym²(g)` by exact
//! nullspace computation, and the cubic Casimir of `sl_n`.

use crate::bialgebra::slice;
use crate::error::{Error, Result};
use crate::lie::{mat_inverse, mat_mul, trace, AlgebraKind, LieAlgebra, Mat};
use crate::matrix::RationalMatrix;
use crate::preconnection::XiHat;
use crate::rational::Rational;
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliResult {
    pub algebra: String,
    pub dimension: usize,
    pub basis: Vec<XiHat>,
}

/// Which `(v, w)` pairs contribute invariance rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSet {
    /// Every ordered pair, including `v = w`.
    All,
    /// Only `v < w`. Too weak: kept to document why it is not the default.
    Upper,
}

/// Unknown `Ξ̂[a][b][c]` sits in column `(a·d + b)·d + c`, the tensor layout.
pub fn invariant_constraint_matrix(g: &LieAlgebra) -> RationalMatrix {
    invariant_constraint_matrix_with(g, PairSet::All)
}

pub fn invariant_constraint_matrix_with(g: &LieAlgebra, pairs: PairSet) -> RationalMatrix {
    let d = g.dim();
    let col = |a: usize, b: usize, c: usize| (a * d + b) * d + c;
    let mut m = RationalMatrix::new(d * d * d);
    let f = |a, b, c| g.structure(a, b, c);
    for v in 0..d {
        for w in 0..d {
            if pairs == PairSet::Upper && v >= w {
                continue;
            }
            for b in 0..d {
                for c in 0..d {
                    let mut terms = Vec::new();
                    for a in 0..d {
                        terms.push((col(a, b, c), f(v, w, a).clone()));
                    }
                    for p in 0..d {
                        terms.push((col(v, p, c), -f(p, w, b).clone()));
                        terms.push((col(v, b, p), -f(p, w, c).clone()));
                    }
                    terms.retain(|(_, x)| !num_traits::Zero::is_zero(x));
                    if !terms.is_empty() {
                        m.push_terms(terms);
                    }
                }
            }
        }
    }
    for a in 0..d {
        for b in 0..d {
            for c in b + 1..d {
                m.push_terms([
                    (col(a, b, c), Rational::from_integer(1.into())),
                    (col(a, c, b), Rational::from_integer((-1).into())),
                ]);
            }
        }
    }
    m
}

pub fn moduli_dimension(g: &LieAlgebra) -> ModuliResult {
    let d = g.dim();
    let basis: Vec<XiHat> = invariant_constraint_matrix(g)
        .nullspace()
        .into_iter()
        .map(|v| XiHat {
            value: Tensor::from_data(3, d, v.into_data()).expect("d³ entries"),
        })
        .collect();
    ModuliResult {
        algebra: g.name().to_string(),
        dimension: basis.len(),
        basis,
    }
}

/// `d_abc = tr(T_a {T_b, T_c})` in the defining representation.
pub fn d_symbol(g: &LieAlgebra) -> Result<Tensor> {
    let mats = g
        .rep()
        .ok_or_else(|| Error::NoCubicCasimir(g.name().to_string()))?;
    let d = g.dim();
    let prods: Vec<Vec<Mat>> = mats
        .iter()
        .map(|x| mats.iter().map(|y| mat_mul(x, y)).collect())
        .collect();
    Ok(Tensor::from_fn(3, d, |i| {
        let (a, b, c) = (i[0], i[1], i[2]);
        trace(&mat_mul(&mats[a], &prods[b][c])) + trace(&mat_mul(&mats[a], &prods[c][b]))
    }))
}

/// `Ξ̂_a^{bc} = d_{ab'c'} K^{b'b} K^{c'c}`, the cubic Casimir as a map
/// `g → Sym²(g)`.
pub fn cubic_casimir(n: usize) -> Result<XiHat> {
    if n < 3 {
        return Err(Error::NoCubicCasimir(format!("sl{n}")));
    }
    let g = LieAlgebra::sl(n);
    debug_assert_eq!(*g.kind(), AlgebraKind::SlN(n));
    let dsym = d_symbol(&g)?;
    let kinv = inverse_killing(&g)?;
    let value = dsym
        .contract(&kinv, &[(1, 0)])?
        .contract(&kinv, &[(1, 0)])?;
    Ok(XiHat { value })
}

pub fn inverse_killing(g: &LieAlgebra) -> Result<Tensor> {
    let d = g.dim();
    let k = g.killing();
    let km: Mat = (0..d).map(|i| slice(&k, i).into_data()).collect();
    let inv = mat_inverse(&km)?;
    Tensor::from_data(2, d, inv.into_iter().flatten().collect())
}
