//! Finite-dimensional Lie algebras given by exact structure constants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{int, Rational};
use crate::tensor::Tensor;

/// Square matrix of rationals, row-major.
pub type Mat = Vec<Vec<Rational>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `sl_n` in the Chevalley basis.
    SlN(usize),
    So5,
    B2,
    Abelian,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis_names: Vec<String>,
    f: Tensor,
    rep: Option<Vec<Mat>>,
    kind: AlgebraKind,
}

pub const PRESETS: [&str; 5] = ["sl2", "sl3", "sl4", "so5", "b2"];

pub fn preset_algebra(name: &str) -> Result<LieAlgebra> {
    match name {
        "sl2" => Ok(LieAlgebra::sl(2)),
        "sl3" => Ok(LieAlgebra::sl(3)),
        "sl4" => Ok(LieAlgebra::sl(4)),
        "so5" => Ok(LieAlgebra::so5()),
        "b2" => Ok(LieAlgebra::b2()),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

impl LieAlgebra {
    /// Validating constructor: `f` must be antisymmetric in its lower
    /// indices and satisfy Jacobi.
    pub fn new(name: impl Into<String>, basis_names: Vec<String>, f: Tensor) -> Result<Self> {
        let alg = Self::new_unchecked(name, basis_names, f)?;
        if !alg.f.symmetrize(0, 1)?.is_zero() {
            return Err(Error::InvalidAlgebra(
                "structure constants are not antisymmetric".into(),
            ));
        }
        if !alg.jacobi_residual().is_zero() {
            return Err(Error::InvalidAlgebra("Jacobi identity fails".into()));
        }
        Ok(alg)
    }

    /// Shape checks only. Useful for probing the residuals on broken input.
    pub fn new_unchecked(
        name: impl Into<String>,
        basis_names: Vec<String>,
        f: Tensor,
    ) -> Result<Self> {
        if f.rank() != 3 || f.dim() != basis_names.len() {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor must be rank 3 over {} basis elements",
                basis_names.len()
            )));
        }
        Ok(LieAlgebra {
            name: name.into(),
            basis_names,
            f,
            rep: None,
            kind: AlgebraKind::Custom,
        })
    }

    pub fn abelian(d: usize) -> Self {
        LieAlgebra {
            name: format!("abelian{d}"),
            basis_names: (1..=d).map(|i| format!("t{i}")).collect(),
            f: Tensor::zeros(3, d),
            rep: None,
            kind: AlgebraKind::Abelian,
        }
    }

    /// `sl_n` in the Chevalley basis: positive root vectors `E_ij` (i < j,
    /// lexicographic), then the matching `E_ji`, then `H_k = E_kk − E_k+1,k+1`.
    /// For `n = 2` the basis is named `e+, e-, e3`.
    pub fn sl(n: usize) -> Self {
        assert!(n >= 2, "sl_n needs n >= 2");
        let mut mats = Vec::new();
        let mut names = Vec::new();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for &(i, j) in &pairs {
            mats.push(elementary(n, i, j));
            names.push(format!("E{}{}", i + 1, j + 1));
        }
        for &(i, j) in &pairs {
            mats.push(elementary(n, j, i));
            names.push(format!("E{}{}", j + 1, i + 1));
        }
        for k in 0..n - 1 {
            let mut h = zero_mat(n);
            h[k][k] = int(1);
            h[k + 1][k + 1] = int(-1);
            mats.push(h);
            names.push(format!("H{}", k + 1));
        }
        if n == 2 {
            names = vec!["e+".into(), "e-".into(), "e3".into()];
        }
        let f = structure_from_matrices(&mats).expect("sl_n closes under commutators");
        LieAlgebra {
            name: format!("sl{n}"),
            basis_names: names,
            f,
            rep: Some(mats),
            kind: AlgebraKind::SlN(n),
        }
    }

    /// `so(5)` spanned by `L_ij = E_ij − E_ji`, `i < j`.
    pub fn so5() -> Self {
        let mut mats = Vec::new();
        let mut names = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                let mut m = elementary(5, i, j);
                m[j][i] = int(-1);
                mats.push(m);
                names.push(format!("L{}{}", i + 1, j + 1));
            }
        }
        let f = structure_from_matrices(&mats).expect("so5 closes under commutators");
        LieAlgebra {
            name: "so5".into(),
            basis_names: names,
            f,
            rep: Some(mats),
            kind: AlgebraKind::So5,
        }
    }

    /// The two-dimensional nonabelian algebra `[H, X] = X`.
    pub fn b2() -> Self {
        let mut f = Tensor::zeros(3, 2);
        f.set(&[0, 1, 1], int(1));
        f.set(&[1, 0, 1], int(-1));
        let mut h = zero_mat(2);
        h[0][0] = int(1);
        LieAlgebra {
            name: "b2".into(),
            basis_names: vec!["H".into(), "X".into()],
            f,
            rep: Some(vec![h, elementary(2, 0, 1)]),
            kind: AlgebraKind::B2,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    /// `f[a][b][c] = f_ab^c`.
    pub fn f(&self) -> &Tensor {
        &self.f
    }

    /// Matrices of the defining representation, when known.
    pub fn rep(&self) -> Option<&[Mat]> {
        self.rep.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownBasisElement(name.to_string()))
    }

    pub fn structure(&self, a: usize, b: usize, c: usize) -> &Rational {
        self.f.get(&[a, b, c])
    }

    pub fn basis_vector(&self, a: usize) -> Tensor {
        let mut v = Tensor::zeros(1, self.dim());
        v.set(&[a], Rational::one());
        v
    }

    /// Bracket of two vectors.
    pub fn bracket(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let t = x.contract(&self.f, &[(0, 0)])?;
        t.contract(y, &[(0, 0)])
    }

    /// `ad_v` as a matrix: entry `[b][c]` is the `e_c` coefficient of `[e_v, e_b]`.
    pub fn ad_matrix(&self, v: usize) -> Tensor {
        let d = self.dim();
        Tensor::from_fn(2, d, |i| self.structure(v, i[0], i[1]).clone())
    }

    /// `Σ_s f_ab^s f_sc^d` summed cyclically over `(a, b, c)`.
    pub fn jacobi_residual(&self) -> Tensor {
        let ff = self.f.contract(&self.f, &[(2, 0)]).expect("same algebra");
        // ff[a][b][c][e] = Σ_s f_ab^s f_sc^e
        let c1 = ff.permute(&[1, 2, 0, 3]).expect("valid permutation");
        let c2 = ff.permute(&[2, 0, 1, 3]).expect("valid permutation");
        ff.add(&c1).and_then(|t| t.add(&c2)).expect("same shape")
    }

    /// `K_ab = f_as^t f_bt^s`.
    pub fn killing(&self) -> Tensor {
        self.f.contract(&self.f, &[(1, 2), (2, 1)]).expect("same algebra")
    }

    /// Sum of `ad_{e_v}` applied to each leg of `x`.
    pub fn ad_action(&self, v: usize, x: &Tensor) -> Tensor {
        let ad = self.ad_matrix(v);
        let k = x.rank();
        let mut out = Tensor::zeros(k, self.dim());
        for leg in 0..k {
            // contract leg with the input slot of ad, new index lands last
            let t = x.contract(&ad, &[(leg, 0)]).expect("same dim");
            let mut perm: Vec<usize> = (0..k - 1).collect();
            perm.insert(leg, k - 1);
            out = out.add(&t.permute(&perm).expect("valid")).expect("same shape");
        }
        out
    }

    /// Rank `k+1` tensor whose slice at `v` is [`Self::ad_action`]`(v, x)`.
    pub fn ad_invariance_residual(&self, x: &Tensor) -> Tensor {
        let d = self.dim();
        let mut data = Vec::with_capacity(d * x.data().len());
        for v in 0..d {
            data.extend(self.ad_action(v, x).into_data());
        }
        Tensor::from_data(x.rank() + 1, d, data).expect("size matches")
    }

    /// Cartan matrix when the algebra is `sl_n`.
    pub fn cartan_matrix(&self) -> Option<Mat> {
        let AlgebraKind::SlN(n) = self.kind else {
            return None;
        };
        let r = n - 1;
        let mut c = zero_mat(r);
        for i in 0..r {
            c[i][i] = int(2);
            if i + 1 < r {
                c[i][i + 1] = int(-1);
                c[i + 1][i] = int(-1);
            }
        }
        Some(c)
    }
}

pub fn zero_mat(n: usize) -> Mat {
    vec![vec![Rational::zero(); n]; n]
}

pub fn elementary(n: usize, i: usize, j: usize) -> Mat {
    let mut m = zero_mat(n);
    m[i][j] = Rational::one();
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zero_mat(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn trace(a: &Mat) -> Rational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Inverse of a small square matrix by exact elimination.
pub fn mat_inverse(a: &Mat) -> Result<Mat> {
    let n = a.len();
    let m = RationalMatrix::from_dense(a)?;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        cols.push(m.solve(&e)?);
    }
    let inv: Mat = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    if mat_mul(a, &inv) != identity_mat(n) {
        return Err(Error::NotInSpan("matrix is singular".into()));
    }
    Ok(inv)
}

pub fn identity_mat(n: usize) -> Mat {
    let mut m = zero_mat(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

/// Structure constants of the span of `mats`, by decomposing every
/// commutator against the basis.
pub fn structure_from_matrices(mats: &[Mat]) -> Result<Tensor> {
    let d = mats.len();
    let n = mats[0].len();
    let mut a = RationalMatrix::new(d);
    for i in 0..n {
        for j in 0..n {
            a.push_dense(&mats.iter().map(|m| m[i][j].clone()).collect::<Vec<_>>());
        }
    }
    let mut f = Tensor::zeros(3, d);
    for p in 0..d {
        for q in 0..d {
            let comm = mat_sub(&mat_mul(&mats[p], &mats[q]), &mat_mul(&mats[q], &mats[p]));
            let rhs: Vec<Rational> = comm.into_iter().flatten().collect();
            let x = a.solve(&rhs)?;
            for (c, v) in x.into_iter().enumerate() {
                f.set(&[p, q, c], v);
            }
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations() {
        let g = LieAlgebra::sl(2);
        assert_eq!(g.dim(), 3);
        // [e3, e+] = 2 e+, [e3, e-] = -2 e-, [e+, e-] = e3
        assert_eq!(g.structure(2, 0, 0), &int(2));
        assert_eq!(g.structure(2, 1, 1), &int(-2));
        assert_eq!(g.structure(0, 1, 2), &int(1));
    }

    #[test]
    fn ad_e3_is_diagonal() {
        let g = LieAlgebra::sl(2);
        let e3 = g.basis_vector(2);
        let ad = e3.contract(g.f(), &[(0, 0)]).unwrap();
        let expect = Tensor::from_fn(2, 3, |i| match (i[0], i[1]) {
            (0, 0) => int(2),
            (1, 1) => int(-2),
            _ => int(0),
        });
        assert_eq!(ad, expect);
        assert_eq!(g.ad_matrix(2), expect);
    }

    #[test]
    fn presets_satisfy_jacobi() {
        for name in PRESETS {
            let g = preset_algebra(name).unwrap();
            assert!(g.jacobi_residual().is_zero(), "{name}");
        }
        assert!(preset_algebra("g2").is_err());
    }

    #[test]
    fn corrupted_sl2_violates_jacobi() {
        let g = LieAlgebra::sl(2);
        let mut f = g.f().clone();
        f.set(&[0, 1, 2], int(2));
        let bad = LieAlgebra::new_unchecked("bad", g.basis_names().to_vec(), f.clone()).unwrap();
        assert!(!bad.jacobi_residual().is_zero());
        assert!(LieAlgebra::new("bad", g.basis_names().to_vec(), f.clone()).is_err());
        // rescaling [e+, e-] consistently is still a Lie algebra
        f.set(&[1, 0, 2], int(-2));
        let rescaled = LieAlgebra::new_unchecked("rescaled", g.basis_names().to_vec(), f).unwrap();
        assert!(rescaled.jacobi_residual().is_zero());
    }

    #[test]
    fn killing_sl2() {
        let k = LieAlgebra::sl(2).killing();
        assert_eq!(k.get(&[2, 2]), &int(8));
        assert_eq!(k.get(&[0, 1]), &int(4));
        assert_eq!(k.get(&[0, 2]), &int(0));
        assert!(LieAlgebra::abelian(3).killing().is_zero());
    }

    #[test]
    fn b2_relations() {
        let g = LieAlgebra::b2();
        assert_eq!(g.f(), &structure_from_matrices(g.rep().unwrap()).unwrap());
    }
}
