//! Polynomial coordinate charts carrying a Poisson tensor `ω^{ij}` and
//! Christoffel symbols `Γ^k_{ij}`.
//!
//! Index conventions:
//! - `omega[i][j] = ω^{ij}`, `omega_lower[i][j] = ω_{ij}` with `ω^{ij} ω_{jk} = δ^i_k`.
//! - `gamma[k][i][j] = Γ^k_{ij}`; the first lower index is the direction, so
//!   `∇_q a_n = ∂_q a_n − Γ^i_{qn} a_i` and `(∇_V W)^l = V^k (∂_k W^l + Γ^l_{ki} W^i)`.
//! - curvature `[l][i][j][k] = R^l_{ijk}`, torsion `[k][i][j] = T^k_{ij}`.
//! - a covariant derivative appends its direction index last.

mod braiding;
pub mod random;

use std::sync::Arc;

pub use braiding::{Braiding, RTensor};

use crate::error::{Error, Result};
use crate::poly::{coordinate_vars, MultiPoly};
use crate::rational::{frac, int, Rational};

/// Dense rank-k array of polynomials over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTensor {
    rank: usize,
    n: usize,
    data: Vec<MultiPoly>,
}

impl PolyTensor {
    pub fn zeros(vars: &Arc<[String]>, rank: usize, n: usize) -> Self {
        PolyTensor {
            rank,
            n,
            data: vec![MultiPoly::zero(vars); n.pow(rank as u32)],
        }
    }

    pub fn from_fn(rank: usize, n: usize, mut f: impl FnMut(&[usize]) -> MultiPoly) -> Self {
        let len = n.pow(rank as u32);
        let mut idx = vec![0; rank];
        let mut data = Vec::with_capacity(len);
        for k in 0..len {
            let mut r = k;
            for slot in idx.iter_mut().rev() {
                *slot = r % n;
                r /= n;
            }
            data.push(f(&idx));
        }
        PolyTensor { rank, n, data }
    }

    pub fn from_data(rank: usize, n: usize, data: Vec<MultiPoly>) -> Result<Self> {
        if data.len() != n.pow(rank as u32) {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank} over {n} needs {} entries, got {}",
                n.pow(rank as u32),
                data.len()
            )));
        }
        Ok(PolyTensor { rank, n, data })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[MultiPoly] {
        &self.data
    }

    fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    pub fn get(&self, idx: &[usize]) -> &MultiPoly {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], p: MultiPoly) {
        let k = self.flat(idx);
        self.data[k] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MultiPoly::is_zero)
    }

    pub fn sub(&self, other: &PolyTensor) -> PolyTensor {
        assert_eq!((self.rank, self.n), (other.rank, other.n));
        PolyTensor {
            rank: self.rank,
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &PolyTensor) -> PolyTensor {
        assert_eq!((self.rank, self.n), (other.rank, other.n));
        PolyTensor {
            rank: self.rank,
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Reorders axes: axis `k` of the result is axis `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> PolyTensor {
        assert_eq!(perm.len(), self.rank);
        let mut src = vec![0; self.rank];
        PolyTensor::from_fn(self.rank, self.n, |dst| {
            for (a, &p) in perm.iter().enumerate() {
                src[p] = dst[a];
            }
            self.get(&src).clone()
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Up,
    Down,
}

/// A differential form in the `dx` basis. Degree 2 components are antisymmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormField {
    comps: PolyTensor,
}

impl FormField {
    pub fn one_form(comps: Vec<MultiPoly>) -> Self {
        let n = comps.len();
        FormField {
            comps: PolyTensor::from_data(1, n, comps).expect("length n"),
        }
    }

    pub fn two_form(comps: PolyTensor) -> Result<Self> {
        if comps.rank() != 2 || comps.permute(&[1, 0]) != neg(&comps) {
            return Err(Error::Invalid("2-form components must be antisymmetric".into()));
        }
        Ok(FormField { comps })
    }

    /// `dz = (∂_i z) dx^i`.
    pub fn exact(z: &MultiPoly, n: usize) -> Self {
        FormField::one_form((0..n).map(|i| z.partial(i)).collect())
    }

    pub fn degree(&self) -> usize {
        self.comps.rank()
    }

    pub fn component(&self, i: usize) -> &MultiPoly {
        self.comps.get(&[i])
    }

    pub fn components(&self) -> &PolyTensor {
        &self.comps
    }
}

fn neg(t: &PolyTensor) -> PolyTensor {
    PolyTensor::from_fn(t.rank(), t.n(), |i| -t.get(i))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    n: usize,
    vars: Arc<[String]>,
    omega: PolyTensor,
    gamma: PolyTensor,
    omega_lower: Option<PolyTensor>,
}

impl Chart {
    pub fn new(
        omega: PolyTensor,
        gamma: PolyTensor,
        omega_lower: Option<PolyTensor>,
    ) -> Result<Self> {
        let n = omega.n();
        if omega.rank() != 2 || gamma.rank() != 3 || gamma.n() != n {
            return Err(Error::InvalidChart("omega must be n×n and gamma n×n×n".into()));
        }
        let vars = omega.data().first().map(|p| p.vars().clone()).unwrap_or_else(|| coordinate_vars(n));
        let all = omega
            .data()
            .iter()
            .chain(gamma.data())
            .chain(omega_lower.iter().flat_map(|w| w.data()));
        for p in all {
            if p.vars() != &vars {
                return Err(Error::VariableMismatch(vars.to_vec(), p.vars().to_vec()));
            }
        }
        if omega.permute(&[1, 0]) != neg(&omega) {
            return Err(Error::InvalidChart("omega is not antisymmetric".into()));
        }
        if let Some(low) = &omega_lower {
            if low.rank() != 2 || low.n() != n {
                return Err(Error::InvalidChart("omega_lower must be n×n".into()));
            }
            for i in 0..n {
                for k in 0..n {
                    let mut s = MultiPoly::zero(&vars);
                    for j in 0..n {
                        s += &(omega.get(&[i, j]) * low.get(&[j, k]));
                    }
                    let want = if i == k { MultiPoly::one(&vars) } else { MultiPoly::zero(&vars) };
                    if s != want {
                        return Err(Error::InvalidChart(
                            "omega_lower is not the inverse of omega".into(),
                        ));
                    }
                }
            }
        }
        Ok(Chart {
            n,
            vars,
            omega,
            gamma,
            omega_lower,
        })
    }

    /// Builds a chart over `x1..xn` from polynomial strings.
    pub fn from_strings(
        n: usize,
        omega: &[Vec<String>],
        gamma: &[Vec<Vec<String>>],
        omega_lower: Option<&[Vec<String>]>,
    ) -> Result<Self> {
        let vars = coordinate_vars(n);
        let parse2 = |m: &[Vec<String>], what: &str| -> Result<PolyTensor> {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidChart(format!("{what} must be {n}×{n}")));
            }
            let data = m
                .iter()
                .flatten()
                .map(|s| MultiPoly::parse(&vars, s))
                .collect::<Result<Vec<_>>>()?;
            PolyTensor::from_data(2, n, data)
        };
        if gamma.len() != n || gamma.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::InvalidChart(format!("gamma must be {n}×{n}×{n}")));
        }
        let g = gamma
            .iter()
            .flatten()
            .flatten()
            .map(|s| MultiPoly::parse(&vars, s))
            .collect::<Result<Vec<_>>>()?;
        let low = omega_lower.map(|m| parse2(m, "omega_lower")).transpose()?;
        Chart::new(parse2(omega, "omega")?, PolyTensor::from_data(3, n, g)?, low)
    }

    /// The noncommutative torus in its invariant basis: `ω = [[0,1],[−1,0]]`, `Γ = 0`.
    pub fn torus() -> Self {
        let vars = coordinate_vars(2);
        let c = |v: i64| MultiPoly::constant(&vars, int(v));
        let omega = PolyTensor::from_data(2, 2, vec![c(0), c(1), c(-1), c(0)]).expect("2×2");
        let lower = PolyTensor::from_data(2, 2, vec![c(0), c(-1), c(1), c(0)]).expect("2×2");
        Chart::new(omega, PolyTensor::zeros(&vars, 3, 2), Some(lower)).expect("valid preset")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn omega(&self) -> &PolyTensor {
        &self.omega
    }

    pub fn gamma(&self) -> &PolyTensor {
        &self.gamma
    }

    pub fn omega_lower(&self) -> Option<&PolyTensor> {
        self.omega_lower.as_ref()
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(&self.vars)
    }

    fn check(&self, p: &MultiPoly) -> Result<()> {
        if p.vars() != &self.vars {
            return Err(Error::VariableMismatch(self.vars.to_vec(), p.vars().to_vec()));
        }
        Ok(())
    }

    fn check_form(&self, a: &FormField) -> Result<()> {
        if a.degree() != 1 || a.components().n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "expected a 1-form on {} coordinates",
                self.n
            )));
        }
        a.components().data().iter().try_for_each(|p| self.check(p))
    }

    /// `{f, g} = ω^{ij} ∂_i f ∂_j g`.
    pub fn poisson(&self, f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
        self.check(f)?;
        self.check(g)?;
        let df: Vec<_> = (0..self.n).map(|i| f.partial(i)).collect();
        let dg: Vec<_> = (0..self.n).map(|j| g.partial(j)).collect();
        let mut out = self.zero();
        for i in 0..self.n {
            if df[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                let w = self.omega.get(&[i, j]);
                if !w.is_zero() && !dg[j].is_zero() {
                    out += &(&(w * &df[i]) * &dg[j]);
                }
            }
        }
        Ok(out)
    }

    /// Components `x̂^q = ω^{kq} ∂_k x` of the Hamiltonian vector field.
    pub fn hamiltonian(&self, x: &MultiPoly) -> Result<Vec<MultiPoly>> {
        self.check(x)?;
        Ok((0..self.n)
            .map(|q| {
                let mut s = self.zero();
                for k in 0..self.n {
                    s += &(self.omega.get(&[k, q]) * &x.partial(k));
                }
                s
            })
            .collect())
    }

    /// `ω^{is} ∂_s ω^{jk} + cyclic`, indexed `[i][j][k]`.
    pub fn jacobi_residual(&self) -> PolyTensor {
        let n = self.n;
        let term = |i: usize, j: usize, k: usize| {
            let mut s = self.zero();
            for t in 0..n {
                s += &(self.omega.get(&[i, t]) * &self.omega.get(&[j, k]).partial(t));
            }
            s
        };
        PolyTensor::from_fn(3, n, |x| {
            let (i, j, k) = (x[0], x[1], x[2]);
            &(&term(i, j, k) + &term(j, k, i)) + &term(k, i, j)
        })
    }

    /// `c[n][i][k] = c_n^{ik} = −ω^{kq} Γ^i_{qn}`.
    pub fn c_from_gamma(&self) -> PolyTensor {
        PolyTensor::from_fn(3, self.n, |x| {
            let (nn, i, k) = (x[0], x[1], x[2]);
            let mut s = self.zero();
            for q in 0..self.n {
                s -= &(self.omega.get(&[k, q]) * self.gamma.get(&[i, q, nn]));
            }
            s
        })
    }

    /// `γ(y, a_i dx^i) = (ω^{kq} ∂_q a_n + c_n^{ik} a_i)(∂_k y) dx^n`.
    pub fn gamma_apply(&self, y: &MultiPoly, a: &FormField) -> Result<FormField> {
        self.check(y)?;
        self.check_form(a)?;
        Ok(self.gamma_apply_with(&self.c_from_gamma(), y, a))
    }

    fn gamma_apply_with(&self, c: &PolyTensor, y: &MultiPoly, a: &FormField) -> FormField {
        let n = self.n;
        let dy: Vec<_> = (0..n).map(|k| y.partial(k)).collect();
        let comps = (0..n)
            .map(|nn| {
                let an = a.component(nn);
                let dan: Vec<_> = (0..n).map(|q| an.partial(q)).collect();
                let mut out = self.zero();
                for k in 0..n {
                    if dy[k].is_zero() {
                        continue;
                    }
                    let mut s = self.zero();
                    for q in 0..n {
                        s += &(self.omega.get(&[k, q]) * &dan[q]);
                    }
                    for i in 0..n {
                        s += &(c.get(&[nn, i, k]) * a.component(i));
                    }
                    out += &(&s * &dy[k]);
                }
                out
            })
            .collect();
        FormField::one_form(comps)
    }

    /// `∂_n ω^{ij} − c_n^{ji} + c_n^{ij}`, indexed `[i][j][n]`; zero iff the
    /// preconnection is compatible with the Poisson bracket.
    pub fn compatibility_residual(&self) -> PolyTensor {
        let c = self.c_from_gamma();
        PolyTensor::from_fn(3, self.n, |x| {
            let (i, j, nn) = (x[0], x[1], x[2]);
            &(&self.omega.get(&[i, j]).partial(nn) - c.get(&[nn, j, i])) + c.get(&[nn, i, j])
        })
    }

    /// `T^k_{ij} = Γ^k_{ij} − Γ^k_{ji}`.
    pub fn torsion(&self) -> PolyTensor {
        PolyTensor::from_fn(3, self.n, |x| self.gamma.get(x) - self.gamma.get(&[x[0], x[2], x[1]]))
    }

    /// `R^l_{ijk} = ∂_j Γ^l_{ki} − ∂_k Γ^l_{ji} + Γ^m_{ki} Γ^l_{jm} − Γ^m_{ji} Γ^l_{km}`.
    pub fn curvature(&self) -> PolyTensor {
        let g = |a: usize, b: usize, c: usize| self.gamma.get(&[a, b, c]);
        PolyTensor::from_fn(4, self.n, |x| {
            let (l, i, j, k) = (x[0], x[1], x[2], x[3]);
            let mut s = &g(l, k, i).partial(j) - &g(l, j, i).partial(k);
            for m in 0..self.n {
                s += &(g(m, k, i) * g(l, j, m));
                s -= &(g(m, j, i) * g(l, k, m));
            }
            s
        })
    }

    /// Covariant derivative with one Γ term per index; the direction index
    /// is appended last.
    pub fn covariant_derivative(&self, t: &PolyTensor, variance: &[Variance]) -> PolyTensor {
        assert_eq!(t.rank(), variance.len());
        let n = self.n;
        let r = t.rank();
        let mut src = vec![0; r];
        PolyTensor::from_fn(r + 1, n, |x| {
            let (idx, l) = (&x[..r], x[r]);
            let mut s = t.get(idx).partial(l);
            for (slot, v) in variance.iter().enumerate() {
                src.copy_from_slice(idx);
                for m in 0..n {
                    src[slot] = m;
                    let comp = t.get(&src);
                    if comp.is_zero() {
                        continue;
                    }
                    match v {
                        Variance::Up => s += &(self.gamma.get(&[idx[slot], l, m]) * comp),
                        Variance::Down => s -= &(self.gamma.get(&[m, l, idx[slot]]) * comp),
                    }
                }
            }
            s
        })
    }

    /// `∇_n ω^{ij}`, indexed `[i][j][n]`.
    pub fn nabla_omega(&self) -> PolyTensor {
        self.covariant_derivative(&self.omega, &[Variance::Up, Variance::Up])
    }

    /// `∇_n ω^{ij} + ω^{iq} T^j_{qn} + ω^{qj} T^i_{qn}`, indexed `[i][j][n]`.
    pub fn nabla_omega_residual(&self) -> PolyTensor {
        let nab = self.nabla_omega();
        let t = self.torsion();
        PolyTensor::from_fn(3, self.n, |x| {
            let (i, j, nn) = (x[0], x[1], x[2]);
            let mut s = nab.get(x).clone();
            for q in 0..self.n {
                s += &(self.omega.get(&[i, q]) * t.get(&[j, q, nn]));
                s += &(self.omega.get(&[q, j]) * t.get(&[i, q, nn]));
            }
            s
        })
    }

    /// `ω` is central iff `∇ω = 0` and `T = 0`. Needs the symplectic inverse.
    pub fn centrality_predicate(&self) -> Result<bool> {
        if self.omega_lower.is_none() {
            return Err(Error::MissingOmegaLower);
        }
        Ok(self.nabla_omega().is_zero() && self.torsion().is_zero())
    }

    /// `Γ_{ikj} = ω_{il} Γ^l_{kj}`, indexed `[i][k][j]`.
    pub fn lowered_gamma(&self) -> Result<PolyTensor> {
        let low = self.omega_lower.as_ref().ok_or(Error::MissingOmegaLower)?;
        Ok(PolyTensor::from_fn(3, self.n, |x| {
            let mut s = self.zero();
            for l in 0..self.n {
                s += &(low.get(&[x[0], l]) * self.gamma.get(&[l, x[1], x[2]]));
            }
            s
        }))
    }

    /// `N^k_{jil} = T^k_{ji;l} + ½ R^k_{jli} + T^n_{jl} T^k_{in} + ½ T^n_{li} T^k_{jn}`,
    /// indexed `[k][j][i][l]`.
    pub fn n_tensor_field(&self) -> PolyTensor {
        let t = self.torsion();
        let dt = self.covariant_derivative(&t, &[Variance::Up, Variance::Down, Variance::Down]);
        let r = self.curvature();
        let half = frac(1, 2);
        PolyTensor::from_fn(4, self.n, |x| {
            let (k, j, i, l) = (x[0], x[1], x[2], x[3]);
            let mut s = dt.get(&[k, j, i, l]) + &r.get(&[k, j, l, i]).scale(&half);
            for nn in 0..self.n {
                s += &(t.get(&[nn, j, l]) * t.get(&[k, i, nn]));
                s += &(t.get(&[nn, l, i]) * t.get(&[k, j, nn])).scale(&half);
            }
            s
        })
    }

    /// `E^{nk}_{li} = ω^{jn} N^k_{jil}`, indexed `[n][k][l][i]`.
    pub fn e_tensor_field(&self) -> PolyTensor {
        let nt = self.n_tensor_field();
        PolyTensor::from_fn(4, self.n, |x| {
            let (nn, k, l, i) = (x[0], x[1], x[2], x[3]);
            let mut s = self.zero();
            for j in 0..self.n {
                s += &(self.omega.get(&[j, nn]) * nt.get(&[k, j, i, l]));
            }
            s
        })
    }

    /// `∇_m E^{nk}_{li}`, indexed `[n][k][l][i][m]`.
    pub fn e_constancy_residual(&self) -> PolyTensor {
        use Variance::{Down, Up};
        self.covariant_derivative(&self.e_tensor_field(), &[Up, Up, Down, Down])
    }

    /// Cyclic sum of `⟨x̂, γ(y, dz)⟩ − ⟨ŷ, γ(x, dz)⟩`.
    pub fn torsion_cyclic_residual(
        &self,
        x: &MultiPoly,
        y: &MultiPoly,
        z: &MultiPoly,
    ) -> Result<MultiPoly> {
        for p in [x, y, z] {
            self.check(p)?;
        }
        let c = self.c_from_gamma();
        let pair = |v: &[MultiPoly], f: &FormField| {
            let mut s = self.zero();
            for (q, vq) in v.iter().enumerate() {
                s += &(vq * f.component(q));
            }
            s
        };
        let term = |x: &MultiPoly, y: &MultiPoly, z: &MultiPoly| -> Result<MultiPoly> {
            let dz = FormField::exact(z, self.n);
            let a = pair(&self.hamiltonian(x)?, &self.gamma_apply_with(&c, y, &dz));
            let b = pair(&self.hamiltonian(y)?, &self.gamma_apply_with(&c, x, &dz));
            Ok(&a - &b)
        };
        Ok(&(&term(x, y, z)? + &term(y, z, x)?) + &term(z, x, y)?)
    }

    pub fn braiding(&self) -> Result<Braiding<'_>> {
        Braiding::new(self)
    }

    pub fn coordinate(&self, i: usize) -> MultiPoly {
        MultiPoly::var(&self.vars, i)
    }

    pub fn constant(&self, c: Rational) -> MultiPoly {
        MultiPoly::constant(&self.vars, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart2(omega: [&str; 4], gamma: &[((usize, usize, usize), &str)]) -> Chart {
        let vars = coordinate_vars(2);
        let p = |s: &str| MultiPoly::parse(&vars, s).unwrap();
        let om = PolyTensor::from_data(2, 2, omega.iter().map(|s| p(s)).collect()).unwrap();
        let mut g = PolyTensor::zeros(&vars, 3, 2);
        for ((k, i, j), s) in gamma {
            g.set(&[*k, *i, *j], p(s));
        }
        Chart::new(om, g, None).unwrap()
    }

    #[test]
    fn torus_brackets() {
        let t = Chart::torus();
        let (x1, x2) = (t.coordinate(0), t.coordinate(1));
        assert_eq!(t.poisson(&x1, &x2).unwrap(), t.constant(int(1)));
        assert_eq!(t.poisson(&x1, &x2.pow(2)).unwrap(), x2.scale(&int(2)));
        let f = &x1.pow(2) + &x2;
        assert!(t.poisson(&f, &f).unwrap().is_zero());
        for i in 0..2 {
            let mut e = vec![t.constant(int(0)); 2];
            e[i] = t.constant(int(1));
            let g = t.gamma_apply(&x1, &FormField::one_form(e)).unwrap();
            assert!(g.components().is_zero());
        }
        assert!(t.poisson(&x1, &MultiPoly::one(&coordinate_vars(3))).is_err());
    }

    #[test]
    fn torus_geometry() {
        let t = Chart::torus();
        assert!(t.torsion().is_zero());
        assert!(t.curvature().is_zero());
        assert!(t.nabla_omega_residual().is_zero());
        assert!(t.centrality_predicate().unwrap());
        assert!(t.compatibility_residual().is_zero());
    }

    #[test]
    fn two_dim_always_poisson() {
        let c = chart2(["0", "x1", "-x1", "0"], &[]);
        assert!(c.jacobi_residual().is_zero());
    }

    #[test]
    fn four_dim_jacobi_violation() {
        let vars = coordinate_vars(4);
        let mut om = PolyTensor::zeros(&vars, 2, 4);
        let set = |om: &mut PolyTensor, i: usize, j: usize, s: &str| {
            let p = MultiPoly::parse(&vars, s).unwrap();
            om.set(&[j, i], -&p);
            om.set(&[i, j], p);
        };
        set(&mut om, 0, 1, "x3");
        set(&mut om, 1, 2, "1");
        set(&mut om, 2, 3, "1");
        let c = Chart::new(om, PolyTensor::zeros(&vars, 3, 4), None).unwrap();
        assert!(!c.jacobi_residual().is_zero());
    }

    #[test]
    fn flat_gamma_gives_plain_bracket() {
        let c = chart2(["0", "3", "-3", "0"], &[]);
        let vars = c.vars().clone();
        let y = MultiPoly::parse(&vars, "x1^2*x2").unwrap();
        let a = FormField::one_form(vec![
            MultiPoly::parse(&vars, "x2^3").unwrap(),
            MultiPoly::parse(&vars, "x1 - 1").unwrap(),
        ]);
        let g = c.gamma_apply(&y, &a).unwrap();
        for nn in 0..2 {
            assert_eq!(g.component(nn), &c.poisson(&y, a.component(nn)).unwrap());
        }
    }

    #[test]
    fn torsion_from_asymmetric_gamma() {
        let c = chart2(["0", "1", "-1", "0"], &[((0, 0, 1), "1")]);
        assert!(!c.torsion().is_zero());
        let c = Chart::new(
            c.omega().clone(),
            c.gamma().clone(),
            Some(Chart::torus().omega_lower().unwrap().clone()),
        )
        .unwrap();
        assert!(!c.centrality_predicate().unwrap());
        assert!(chart2(["0", "1", "-1", "0"], &[]).centrality_predicate().is_err());
    }

    #[test]
    fn curvature_of_single_symbol() {
        // Γ^1_{11} = x2: R^1_{121} = −∂_2 Γ^1_{11} = −1, R^1_{112} = +1
        let c = chart2(["0", "1", "-1", "0"], &[((0, 0, 0), "x2")]);
        let r = c.curvature();
        assert_eq!(r.get(&[0, 0, 1, 0]), &c.constant(int(1)));
        assert_eq!(r.get(&[0, 0, 0, 1]), &c.constant(int(-1)));
    }

    #[test]
    fn invalid_charts_rejected() {
        let vars = coordinate_vars(2);
        let one = MultiPoly::one(&vars);
        let om = PolyTensor::from_data(2, 2, vec![one.clone(), one.clone(), one.clone(), one]).unwrap();
        assert!(Chart::new(om, PolyTensor::zeros(&vars, 3, 2), None).is_err());
        let t = Chart::torus();
        let bad_low = t.omega().clone();
        assert!(Chart::new(t.omega().clone(), t.gamma().clone(), Some(bad_low)).is_err());
    }
}
