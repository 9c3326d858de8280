//! The lifted braiding `ρ̃ : Ω¹ ⊗_ℝ Ω¹ → Ω¹ ⊗_ℝ Ω¹`.
//!
//! `ρ̃` differentiates both factors, so it is only ℝ-bilinear. Elements of
//! `Ω¹ ⊗_ℝ … ⊗_ℝ Ω¹` are therefore stored exactly, by their coefficients on
//! the real basis `(m₁ dx^{a₁}) ⊗ … ⊗ (m_k dx^{a_k})` with `m_i` monomials.
//! Where the formula produces a function times a pure tensor, the function
//! is placed on the first factor.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::{Chart, FormField, PolyTensor};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::rational::Rational;

/// One basis 1-form `m dx^a`.
pub type Factor = (usize, Monomial);

/// An element of the k-fold real tensor power of polynomial 1-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTensor {
    degree: usize,
    terms: BTreeMap<Vec<Factor>, Rational>,
}

impl RTensor {
    pub fn zero(degree: usize) -> Self {
        RTensor {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `f₁ ⊗ … ⊗ f_k` expanded on the real basis.
    pub fn pure(factors: &[&FormField]) -> Self {
        let mut out = RTensor::zero(factors.len());
        out.add_pure(factors, &Rational::from_integer(1.into()));
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Factor], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn add_basis(&mut self, key: Vec<Factor>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_pure(&mut self, factors: &[&FormField], scale: &Rational) {
        assert_eq!(factors.len(), self.degree);
        let mut partial: Vec<(Vec<Factor>, Rational)> = vec![(Vec::new(), scale.clone())];
        for f in factors {
            let mut next = Vec::new();
            for (key, c) in &partial {
                for a in 0..f.components().n() {
                    for (m, x) in f.component(a).terms() {
                        let mut k = key.clone();
                        k.push((a, m.clone()));
                        next.push((k, c * x));
                    }
                }
            }
            partial = next;
        }
        for (k, c) in partial {
            self.add_basis(k, c);
        }
    }

    pub fn add_scaled(&mut self, other: &RTensor, c: &Rational) {
        assert_eq!(self.degree, other.degree);
        for (k, v) in &other.terms {
            self.add_basis(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &RTensor) -> RTensor {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer(1.into()));
        out
    }

    pub fn sub(&self, other: &RTensor) -> RTensor {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    /// Swaps two tensor slots.
    pub fn swap(&self, i: usize, j: usize) -> RTensor {
        let mut out = RTensor::zero(self.degree);
        for (k, v) in &self.terms {
            let mut k = k.clone();
            k.swap(i, j);
            out.add_basis(k, v.clone());
        }
        out
    }

    /// Multiplies out each basis tensor into its `dx` component array.
    pub fn to_components(&self, vars: &Arc<[String]>, n: usize) -> PolyTensor {
        let mut out = PolyTensor::zeros(vars, self.degree, n);
        for (k, v) in &self.terms {
            let idx: Vec<usize> = k.iter().map(|(a, _)| *a).collect();
            let mut exps = vec![0u32; vars.len()];
            for (_, m) in k {
                for (e, x) in exps.iter_mut().zip(&m.0) {
                    *e += x;
                }
            }
            let p = out.get(&idx) + &MultiPoly::monomial(vars, exps, v.clone());
            out.set(&idx, p);
        }
        out
    }
}

impl fmt::Display for RTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (k, v)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}")?;
            for (a, m) in k {
                write!(f, "*(x^{:?} dx{})", m.0, a + 1)?;
            }
        }
        Ok(())
    }
}

/// `ρ̃` bound to a chart, with the lowered curvature precomputed.
pub struct Braiding<'c> {
    chart: &'c Chart,
    /// `[s][m][k][q] = R_{smkq} = ω_{sl} R^l_{mkq}`
    r_lower: PolyTensor,
    cache: RefCell<BTreeMap<(Factor, Factor), RTensor>>,
}

impl<'c> Braiding<'c> {
    pub(super) fn new(chart: &'c Chart) -> Result<Self> {
        let low = chart.omega_lower().ok_or(Error::MissingOmegaLower)?;
        let r = chart.curvature();
        let n = chart.n();
        let r_lower = PolyTensor::from_fn(4, n, |x| {
            let mut s = MultiPoly::zero(chart.vars());
            for l in 0..n {
                s += &(low.get(&[x[0], l]) * r.get(&[l, x[1], x[2], x[3]]));
            }
            s
        });
        Ok(Braiding {
            chart,
            r_lower,
            cache: RefCell::new(BTreeMap::new()),
        })
    }

    fn check(&self, f: &FormField) -> Result<()> {
        if f.degree() != 1 || f.components().n() != self.chart.n() {
            return Err(Error::DimensionMismatch(format!(
                "expected a 1-form on {} coordinates",
                self.chart.n()
            )));
        }
        for p in f.components().data() {
            if p.vars() != self.chart.vars() {
                return Err(Error::VariableMismatch(
                    self.chart.vars().to_vec(),
                    p.vars().to_vec(),
                ));
            }
        }
        Ok(())
    }

    /// `(∇_s τ)_n = ∂_s τ_n − Γ^i_{sn} τ_i`.
    fn nabla(&self, s: usize, tau: &FormField) -> FormField {
        let n = self.chart.n();
        FormField::one_form(
            (0..n)
                .map(|nn| {
                    let mut out = tau.component(nn).partial(s);
                    for i in 0..n {
                        out -= &(self.chart.gamma().get(&[i, s, nn]) * tau.component(i));
                    }
                    out
                })
                .collect(),
        )
    }

    /// `ρ̃(τ⊗η) = ω^{jq} ω^{is} τ_j η_i R_{smkq} dx^k ⊗ dx^m − ω^{sq} ∇_s τ ⊗ ∇_q η`.
    pub fn rho(&self, tau: &FormField, eta: &FormField) -> Result<RTensor> {
        self.check(tau)?;
        self.check(eta)?;
        Ok(self.rho_unchecked(tau, eta))
    }

    fn rho_unchecked(&self, tau: &FormField, eta: &FormField) -> RTensor {
        let n = self.chart.n();
        let vars = self.chart.vars();
        let om = self.chart.omega();
        let raise = |f: &FormField, q: usize| {
            let mut s = MultiPoly::zero(vars);
            for j in 0..n {
                s += &(om.get(&[j, q]) * f.component(j));
            }
            s
        };
        let a: Vec<_> = (0..n).map(|q| raise(tau, q)).collect();
        let b: Vec<_> = (0..n).map(|s| raise(eta, s)).collect();
        let one = Rational::from_integer(1.into());
        let mut out = RTensor::zero(2);
        for m in 0..n {
            let first = FormField::one_form(
                (0..n)
                    .map(|k| {
                        let mut f = MultiPoly::zero(vars);
                        for s in 0..n {
                            if b[s].is_zero() {
                                continue;
                            }
                            for q in 0..n {
                                let r = self.r_lower.get(&[s, m, k, q]);
                                if !r.is_zero() && !a[q].is_zero() {
                                    f += &(&(&b[s] * &a[q]) * r);
                                }
                            }
                        }
                        f
                    })
                    .collect(),
            );
            if first.components().is_zero() {
                continue;
            }
            let mut dxm = vec![MultiPoly::zero(vars); n];
            dxm[m] = MultiPoly::one(vars);
            out.add_pure(&[&first, &FormField::one_form(dxm)], &one);
        }
        let dtau: Vec<_> = (0..n).map(|s| self.nabla(s, tau)).collect();
        let deta: Vec<_> = (0..n).map(|q| self.nabla(q, eta)).collect();
        for s in 0..n {
            for q in 0..n {
                let w = om.get(&[s, q]);
                if w.is_zero() {
                    continue;
                }
                let first = FormField::one_form(
                    (0..n).map(|k| -&(w * dtau[s].component(k))).collect(),
                );
                out.add_pure(&[&first, &deta[q]], &one);
            }
        }
        out
    }

    fn basis_form(&self, f: &Factor) -> FormField {
        let vars = self.chart.vars();
        let mut comps = vec![MultiPoly::zero(vars); self.chart.n()];
        comps[f.0] = MultiPoly::monomial(vars, f.1 .0.clone(), Rational::from_integer(1.into()));
        FormField::one_form(comps)
    }

    fn rho_basis(&self, a: &Factor, b: &Factor) -> RTensor {
        let key = (a.clone(), b.clone());
        if let Some(t) = self.cache.borrow().get(&key) {
            return t.clone();
        }
        let t = self.rho_unchecked(&self.basis_form(a), &self.basis_form(b));
        self.cache.borrow_mut().insert(key, t.clone());
        t
    }

    /// `ρ̃` acting on slots `i` and `j` of a real tensor, identity elsewhere.
    pub fn apply(&self, t: &RTensor, i: usize, j: usize) -> RTensor {
        assert!(i != j && i < t.degree && j < t.degree);
        let mut out = RTensor::zero(t.degree);
        for (key, c) in &t.terms {
            let r = self.rho_basis(&key[i], &key[j]);
            for (k2, c2) in &r.terms {
                let mut k = key.clone();
                k[i] = k2[0].clone();
                k[j] = k2[1].clone();
                out.add_basis(k, c * c2);
            }
        }
        out
    }

    /// `ρ̃(τ⊗η) + ρ̃₂₁(τ⊗η)` where `ρ̃₂₁ = flip ∘ ρ̃ ∘ flip`.
    pub fn antisym_residual(&self, tau: &FormField, eta: &FormField) -> Result<RTensor> {
        Ok(self.rho(tau, eta)?.add(&self.rho(eta, tau)?.swap(0, 1)))
    }

    /// `ρ̃₁₂ρ̃₂₃ + ρ̃₁₃ρ̃₂₃ + ρ̃₁₂ρ̃₁₃ − ρ̃₁₃ρ̃₁₂ − ρ̃₂₃ρ̃₁₂ − ρ̃₂₃ρ̃₁₃` on `ζ⊗η⊗ξ`.
    pub fn cyb_residual(&self, zeta: &FormField, eta: &FormField, xi: &FormField) -> Result<RTensor> {
        for f in [zeta, eta, xi] {
            self.check(f)?;
        }
        let t = RTensor::pure(&[zeta, eta, xi]);
        let a12 = self.apply(&t, 0, 1);
        let a13 = self.apply(&t, 0, 2);
        let a23 = self.apply(&t, 1, 2);
        let mut out = self.apply(&a23, 0, 1);
        out = out.add(&self.apply(&a23, 0, 2));
        out = out.add(&self.apply(&a13, 0, 1));
        out = out.sub(&self.apply(&a12, 0, 2));
        out = out.sub(&self.apply(&a12, 1, 2));
        out = out.sub(&self.apply(&a13, 1, 2));
        Ok(out)
    }
}
