//! Classical SU(2) coordinate ring `ℚ[a,b,c,d]/(ad − 1 − bc)` with the
//! invariant vector fields of `sl2`, the standard Poisson-Lie bracket and
//! left-invariant preconnections.
//!
//! Sign dictionary (the single choice reproducing the standard bracket table):
//! - `dL(v)f(M) = d/dt f(M e^{tv})`, `dR(v)f(M) = d/dt f(e^{tv} M)`
//! - `f ◁ v = −dL(v) f`, `v ▷ f = −dR(v) f`
//! - `ad*_u φ = φ([·, u])`, `τ^i ◁ v = −ad*_v τ^i`, `v ▷ τ^i = 0`
//! - basis order `(e+, e−, e3)`, dual forms `(τ⁺, τ⁻, τ³)`

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::bialgebra::{m_tensor, n_tensor, standard_r, RMatrix};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::poly::{var_list, Monomial, MultiPoly};
use crate::preconnection::{dual, Xi};
use crate::rational::{frac, int, Rational};
use crate::tensor::Tensor;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

fn vars() -> &'static Arc<[String]> {
    static V: OnceLock<Arc<[String]>> = OnceLock::new();
    V.get_or_init(|| var_list(&["a", "b", "c", "d"]))
}

/// The `sl2` Chevalley basis in the order used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2 {
    Plus = 0,
    Minus = 1,
    Three = 2,
}

impl Sl2 {
    pub const ALL: [Sl2; 3] = [Sl2::Plus, Sl2::Minus, Sl2::Three];

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "e+" | "+" => Ok(Sl2::Plus),
            "e-" | "-" => Ok(Sl2::Minus),
            "e3" | "3" => Ok(Sl2::Three),
            _ => Err(Error::UnknownBasisElement(s.to_string())),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["e+", "e-", "e3"][self.index()]
    }

    /// Images of `(a, b, c, d)` under `M ↦ M v`.
    fn right_images(self) -> [Su2Poly; 4] {
        let (a, b, c, d, z) = (gen(A), gen(B), gen(C), gen(D), Su2Poly::zero());
        match self {
            Sl2::Plus => [z.clone(), a, z, c],
            Sl2::Minus => [b, z.clone(), d, z],
            Sl2::Three => [a, -&b, c, -&d],
        }
    }

    /// Images of `(a, b, c, d)` under `M ↦ v M`.
    fn left_images(self) -> [Su2Poly; 4] {
        let (a, b, c, d, z) = (gen(A), gen(B), gen(C), gen(D), Su2Poly::zero());
        match self {
            Sl2::Plus => [c, d, z.clone(), z],
            Sl2::Minus => [z.clone(), z, a, b],
            Sl2::Three => [a, b, -&c, -&d],
        }
    }
}

/// A polynomial in `a, b, c, d` with no monomial divisible by `ad`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Su2Poly(MultiPoly);

fn gen(i: usize) -> Su2Poly {
    Su2Poly(MultiPoly::var(vars(), i))
}

impl Su2Poly {
    pub fn zero() -> Self {
        Su2Poly(MultiPoly::zero(vars()))
    }

    pub fn constant(c: Rational) -> Self {
        Su2Poly(MultiPoly::constant(vars(), c))
    }

    pub fn a() -> Self {
        gen(A)
    }

    pub fn b() -> Self {
        gen(B)
    }

    pub fn c() -> Self {
        gen(C)
    }

    pub fn d() -> Self {
        gen(D)
    }

    pub fn generators() -> [Su2Poly; 4] {
        [gen(A), gen(B), gen(C), gen(D)]
    }

    /// Rewrites `a^i d^j` as `a^{i−k} d^{j−k} (1 + bc)^k`, `k = min(i, j)`.
    pub fn normal_form(p: &MultiPoly) -> Result<Self> {
        if p.vars() != vars() {
            return Err(Error::VariableMismatch(vars().to_vec(), p.vars().to_vec()));
        }
        let bc1 = &MultiPoly::one(vars()) + &(&MultiPoly::var(vars(), B) * &MultiPoly::var(vars(), C));
        let mut out = MultiPoly::zero(vars());
        for (m, coef) in p.terms() {
            let e = &m.0;
            let k = e[A].min(e[D]);
            let rest = MultiPoly::monomial(
                vars(),
                vec![e[A] - k, e[B], e[C], e[D] - k],
                coef.clone(),
            );
            out += &(&rest * &bc1.pow(k));
        }
        Ok(Su2Poly(out))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Su2Poly::normal_form(&MultiPoly::parse(vars(), s)?)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Su2Poly(self.0.scale(c))
    }

    /// Derivation extending `gen ↦ images[gen]`.
    fn derive(&self, images: &[Su2Poly; 4]) -> Su2Poly {
        let mut out = Su2Poly::zero();
        for (i, img) in images.iter().enumerate() {
            if !img.is_zero() {
                let dp = Su2Poly(self.0.partial(i));
                out = &out + &(&dp * img);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.0.terms()
    }
}

impl fmt::Display for Su2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Su2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<'a> Add<&'a Su2Poly> for &'a Su2Poly {
    type Output = Su2Poly;
    fn add(self, o: &Su2Poly) -> Su2Poly {
        Su2Poly(&self.0 + &o.0)
    }
}

impl<'a> Sub<&'a Su2Poly> for &'a Su2Poly {
    type Output = Su2Poly;
    fn sub(self, o: &Su2Poly) -> Su2Poly {
        Su2Poly(&self.0 - &o.0)
    }
}

impl<'a> Mul<&'a Su2Poly> for &'a Su2Poly {
    type Output = Su2Poly;
    fn mul(self, o: &Su2Poly) -> Su2Poly {
        Su2Poly::normal_form(&(&self.0 * &o.0)).expect("same variables")
    }
}

impl Neg for &Su2Poly {
    type Output = Su2Poly;
    fn neg(self) -> Su2Poly {
        Su2Poly(-&self.0)
    }
}

/// Left-invariant vector field `∂_v`: right multiplication `M ↦ M v`.
pub fn d_l(v: Sl2, p: &Su2Poly) -> Su2Poly {
    p.derive(&v.right_images())
}

/// Right-invariant vector field: left multiplication `M ↦ v M`.
pub fn d_r(v: Sl2, p: &Su2Poly) -> Su2Poly {
    p.derive(&v.left_images())
}

/// `η = η_i τ^i` in the left-invariant basis `(τ⁺, τ⁻, τ³)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantOneForm(pub [Su2Poly; 3]);

impl InvariantOneForm {
    pub fn zero() -> Self {
        InvariantOneForm([Su2Poly::zero(), Su2Poly::zero(), Su2Poly::zero()])
    }

    pub fn basis(i: Sl2) -> Self {
        let mut f = InvariantOneForm::zero();
        f.0[i.index()] = Su2Poly::constant(int(1));
        f
    }

    /// `dx = (∂_i x) τ^i`.
    pub fn exact(x: &Su2Poly) -> Self {
        InvariantOneForm(Sl2::ALL.map(|v| d_l(v, x)))
    }

    pub fn component(&self, i: Sl2) -> &Su2Poly {
        &self.0[i.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Su2Poly::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        InvariantOneForm([0, 1, 2].map(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        InvariantOneForm([0, 1, 2].map(|i| &self.0[i] - &o.0[i]))
    }

    pub fn mul(&self, f: &Su2Poly) -> Self {
        InvariantOneForm([0, 1, 2].map(|i| &self.0[i] * f))
    }
}

/// `sl2` with its standard quasitriangular structure `r = e+⊗e− + ¼ e3⊗e3`.
pub struct Su2Data {
    pub algebra: LieAlgebra,
    pub r: RMatrix,
    r_minus: Tensor,
}

pub fn su2_data() -> &'static Su2Data {
    static S: OnceLock<Su2Data> = OnceLock::new();
    S.get_or_init(|| {
        let algebra = LieAlgebra::sl(2);
        for v in Sl2::ALL {
            debug_assert_eq!(algebra.index_of(v.name()).ok(), Some(v.index()));
        }
        let r = standard_r(&algebra).expect("sl2 has a standard r");
        let r_minus = r.minus();
        Su2Data { algebra, r, r_minus }
    })
}

fn rational_nonzero(t: &Tensor) -> Vec<(Vec<usize>, Rational)> {
    t.nonzeros().map(|(i, v)| (i, v.clone())).collect()
}

/// `{x,y} = (x◁r₋¹)(y◁r₋²) − (r₋¹▷x)(r₋²▷y) = r₋^{ij}(∂_i x ∂_j y − R_i x R_j y)`.
pub fn poisson_su2(x: &Su2Poly, y: &Su2Poly) -> Su2Poly {
    let mut out = Su2Poly::zero();
    for (idx, w) in rational_nonzero(&su2_data().r_minus) {
        let (i, j) = (Sl2::ALL[idx[0]], Sl2::ALL[idx[1]]);
        let left = &d_l(i, x) * &d_l(j, y);
        let right = &d_r(i, x) * &d_r(j, y);
        out = &out + &(&left - &right).scale(&w);
    }
    out
}

/// `A[i][k]` with `dR(e_i) = Σ_k A[i][k] dL(e_k)`, from `Ad_{M⁻¹} e_i = M⁻¹ e_i M`.
pub fn adjoint_inverse() -> [[Su2Poly; 3]; 3] {
    let (a, b, c, d) = (gen(A), gen(B), gen(C), gen(D));
    let m = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let minv = [[d, -&b], [-&c, a]];
    let one = Su2Poly::constant(int(1));
    let z = Su2Poly::zero;
    let e = |v: Sl2| match v {
        Sl2::Plus => [[z(), one.clone()], [z(), z()]],
        Sl2::Minus => [[z(), z()], [one.clone(), z()]],
        Sl2::Three => [[one.clone(), z()], [z(), -&one]],
    };
    let mul = |x: &[[Su2Poly; 2]; 2], y: &[[Su2Poly; 2]; 2]| {
        [0, 1].map(|i| [0, 1].map(|j| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j])))
    };
    Sl2::ALL.map(|v| {
        let x = mul(&mul(&minv, &e(v)), &m);
        // traceless X = x12 e+ + x21 e− + x11 e3
        [x[0][1].clone(), x[1][0].clone(), x[0][0].clone()]
    })
}

/// `ω^{kl}` in the invariant basis: `{x,y} = ω^{kl} (∂_k x)(∂_l y)`.
pub fn poisson_tensor_su2() -> [[Su2Poly; 3]; 3] {
    let adj = adjoint_inverse();
    let rm = &su2_data().r_minus;
    [0, 1, 2].map(|k| {
        [0, 1, 2].map(|l| {
            let mut s = Su2Poly::constant(rm.get(&[k, l]).clone());
            for (idx, w) in rational_nonzero(rm) {
                let t = &adj[idx[0]][k] * &adj[idx[1]][l];
                s = &s - &t.scale(&w);
            }
            s
        })
    })
}

/// `ad*_{e_u} τ^i` as an invariant form with constant coefficients.
fn ad_star_basis(u: Sl2, i: Sl2) -> InvariantOneForm {
    let g = &su2_data().algebra;
    let phi = dual::ad_star(g, u.index(), &dual::basis(3, i.index()));
    InvariantOneForm([0, 1, 2].map(|w| Su2Poly::constant(phi[w].clone())))
}

/// Leibniz extension `γ(x, η_i τ^i) = {x, η_i} τ^i + η_i γ(x, τ^i)`.
fn extend(x: &Su2Poly, eta: &InvariantOneForm, on_basis: impl Fn(Sl2) -> InvariantOneForm) -> InvariantOneForm {
    let mut out = InvariantOneForm::zero();
    for i in Sl2::ALL {
        let ei = eta.component(i);
        if ei.is_zero() {
            continue;
        }
        out.0[i.index()] = &out.0[i.index()] + &poisson_su2(x, ei);
        out = out.add(&on_basis(i).mul(ei));
    }
    out
}

/// The canonical preconnection in closed form:
/// `γ(x,τ⁺) = −(∂₋x)τ³`, `γ(x,τ⁻) = −(∂₊x)τ³`, `γ(x,τ³) = ½((∂₊x)τ⁺ + (∂₋x)τ⁻)`.
pub fn gamma_canonical_su2(x: &Su2Poly, eta: &InvariantOneForm) -> InvariantOneForm {
    let (dp, dm) = (d_l(Sl2::Plus, x), d_l(Sl2::Minus, x));
    let half = frac(1, 2);
    extend(x, eta, |i| {
        let mut f = InvariantOneForm::zero();
        match i {
            Sl2::Plus => f.0[2] = -&dm,
            Sl2::Minus => f.0[2] = -&dp,
            Sl2::Three => {
                f.0[0] = dp.scale(&half);
                f.0[1] = dm.scale(&half);
            }
        }
        f
    })
}

/// `γ(x, τ^i) = Ξ(L̂_x, τ^i)` with `L̂_x = (∂_j x) τ^j`, extended by Leibniz.
pub fn gamma_from_xi_su2(xi: &Xi, x: &Su2Poly, eta: &InvariantOneForm) -> Result<InvariantOneForm> {
    if xi.value.rank() != 3 || xi.value.dim() != 3 {
        return Err(Error::DimensionMismatch("Ξ must be a 3×3×3 tensor over sl2".into()));
    }
    let lx: Vec<Su2Poly> = Sl2::ALL.iter().map(|&v| d_l(v, x)).collect();
    Ok(extend(x, eta, |i| {
        let mut f = InvariantOneForm::zero();
        for (idx, w) in rational_nonzero(&xi.value) {
            if idx[2] != i.index() {
                continue;
            }
            let (v, b) = (idx[0], idx[1]);
            f.0[v] = &f.0[v] + &lx[b].scale(&w);
        }
        f
    }))
}

/// `⟨v, η⟩` for `v = v^k ∂_k`.
fn pair(v: &[Su2Poly; 3], eta: &InvariantOneForm) -> Su2Poly {
    let mut s = Su2Poly::zero();
    for k in 0..3 {
        s = &s + &(&v[k] * &eta.0[k]);
    }
    s
}

/// `x̂ = ω^{jk} (∂_j x) ∂_k`.
pub fn hamiltonian_su2(x: &Su2Poly) -> [Su2Poly; 3] {
    let om = poisson_tensor_su2();
    let dx = InvariantOneForm::exact(x);
    [0, 1, 2].map(|k| {
        let mut s = Su2Poly::zero();
        for j in 0..3 {
            s = &s + &(&om[j][k] * &dx.0[j]);
        }
        s
    })
}

/// `⟨T(x̂,ŷ), dz⟩ = ⟨x̂, γ(y,dz)⟩ − ⟨ŷ, γ(x,dz)⟩`.
pub fn torsion_pair_su2(xi: &Xi, x: &Su2Poly, y: &Su2Poly, z: &Su2Poly) -> Result<Su2Poly> {
    let dz = InvariantOneForm::exact(z);
    let first = pair(&hamiltonian_su2(x), &gamma_from_xi_su2(xi, y, &dz)?);
    let second = pair(&hamiltonian_su2(y), &gamma_from_xi_su2(xi, x, &dz)?);
    Ok(&first - &second)
}

/// `R(x̂,ŷ)η = γ(x,γ(y,η)) − γ(y,γ(x,η)) − γ({x,y},η)`.
pub fn curvature_action_su2(
    xi: &Xi,
    x: &Su2Poly,
    y: &Su2Poly,
    eta: &InvariantOneForm,
) -> Result<InvariantOneForm> {
    let g = |p: &Su2Poly, e: &InvariantOneForm| gamma_from_xi_su2(xi, p, e);
    Ok(g(x, &g(y, eta)?)?
        .sub(&g(y, &g(x, eta)?)?)
        .sub(&g(&poisson_su2(x, y), eta)?))
}

/// Three-slot closed form `Σ t^{pqs} (∂_p x)(∂_q y) F_s` shared by the
/// canonical curvature and torsion formulas.
fn triple_sum<F: Fn(Sl2) -> InvariantOneForm>(t: &Tensor, x: &Su2Poly, y: &Su2Poly, last: F, right: bool) -> InvariantOneForm {
    let der = if right { d_r } else { d_l };
    let mut out = InvariantOneForm::zero();
    for (idx, w) in rational_nonzero(t) {
        let (p, q, s) = (Sl2::ALL[idx[0]], Sl2::ALL[idx[1]], Sl2::ALL[idx[2]]);
        let f = &der(p, x) * &der(q, y);
        if f.is_zero() {
            continue;
        }
        out = out.add(&last(s).mul(&f.scale(&w)));
    }
    out
}

/// `R(x̂,ŷ)τ^i = (n¹▷x)(n²▷y)(n³▷τ^i) − (x◁n¹)(y◁n²)(τ^i◁n³)` with `n = [[r₋,r₋]]`.
pub fn curvature_closed_canonical(x: &Su2Poly, y: &Su2Poly, i: Sl2) -> InvariantOneForm {
    let s = su2_data();
    let n = n_tensor(&s.algebra, &s.r).expect("sl2 data");
    // three right actions on the second term give −(−1)³ = +1
    triple_sum(&n, x, y, |v| ad_star_basis(v, i), false)
}

/// `T(x̂,ŷ)(dz) = (m¹▷x)(m²▷y)(m³▷z) − (x◁m¹)(y◁m²)(z◁m³)` with `m = [r₋13, r₋23]`.
pub fn torsion_closed_canonical(x: &Su2Poly, y: &Su2Poly, z: &Su2Poly) -> Su2Poly {
    let s = su2_data();
    let m = m_tensor(&s.algebra, &s.r).expect("sl2 data");
    let scalar = |v: Sl2, right: bool| {
        let mut f = InvariantOneForm::zero();
        f.0[0] = if right { d_r(v, z) } else { d_l(v, z) };
        f
    };
    let left = triple_sum(&m, x, y, |v| scalar(v, false), false);
    let right = triple_sum(&m, x, y, |v| scalar(v, true), true);
    &left.0[0] - &right.0[0]
}

/// Closed-form candidate for the 3-d calculus torsion,
/// `½ λ_i ω^{ji} (∂_j y)(∂₃x)(∂_i z) − (x ↔ y)`, with `λ_± = −1`. The actual
/// torsion is `torsion_commutator_term` minus this.
pub fn torsion_display_3d(lambda3: &Rational, x: &Su2Poly, y: &Su2Poly, z: &Su2Poly) -> Su2Poly {
    let om = poisson_tensor_su2();
    let lam = [int(-1), int(-1), lambda3.clone()];
    let half = frac(1, 2);
    let one_side = |x: &Su2Poly, y: &Su2Poly| {
        let (dx3, dy, dz) = (d_l(Sl2::Three, x), InvariantOneForm::exact(y), InvariantOneForm::exact(z));
        let mut s = Su2Poly::zero();
        for i in 0..3 {
            for j in 0..3 {
                let t = &(&(&om[j][i] * &dy.0[j]) * &dx3) * &dz.0[i];
                s = &s + &t.scale(&(&lam[i] * &half));
            }
        }
        s
    };
    &one_side(x, y) - &one_side(y, x)
}

/// `ω^{ji} ω^{nm} (∂_j x)(∂_n y)([∂_m, ∂_i] z)`: the term a symmetric second
/// derivative would cancel, nonzero for invariant vector fields.
pub fn torsion_commutator_term(x: &Su2Poly, y: &Su2Poly, z: &Su2Poly) -> Su2Poly {
    let om = poisson_tensor_su2();
    let (dx, dy) = (InvariantOneForm::exact(x), InvariantOneForm::exact(y));
    let mut s = Su2Poly::zero();
    for m in Sl2::ALL {
        for i in Sl2::ALL {
            let comm = &d_l(m, &d_l(i, z)) - &d_l(i, &d_l(m, z));
            if comm.is_zero() {
                continue;
            }
            for j in 0..3 {
                for n in 0..3 {
                    let w = &om[j][i.index()] * &om[n][m.index()];
                    s = &s + &(&(&w * &dx.0[j]) * &(&dy.0[n] * &comm));
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Su2Poly {
        Su2Poly::parse(s).unwrap()
    }

    #[test]
    fn normal_form_rewrites_ad() {
        assert_eq!(p("a*d"), p("1 + b*c"));
        assert_eq!(p("a^2*d"), p("a + a*b*c"));
        assert_eq!(p("b*c").to_string(), "1*b*c");
        assert!(p("a*d - b*c - 1").is_zero());
    }

    #[test]
    fn stepwise_rewriting_is_confluent() {
        // one ad → 1 + bc step at a time, from either end
        let raw = MultiPoly::parse(vars(), "a^3*d^2*b + 2*a*d^3 - a^2*d^2").unwrap();
        let step = |q: &MultiPoly| -> Option<MultiPoly> {
            let (m, c) = q.terms().find(|(m, _)| m.0[A] > 0 && m.0[D] > 0)?;
            let (m, c) = (m.clone(), c.clone());
            let mut rest = m.0.clone();
            rest[A] -= 1;
            rest[D] -= 1;
            let mono = MultiPoly::monomial(vars(), rest, c.clone());
            let bc1 = MultiPoly::parse(vars(), "1 + b*c").unwrap();
            Some(&(q - &MultiPoly::monomial(vars(), m.0, c)) + &(&mono * &bc1))
        };
        let mut q = raw.clone();
        while let Some(next) = step(&q) {
            q = next;
        }
        assert_eq!(Su2Poly(q), Su2Poly::normal_form(&raw).unwrap());
    }

    #[test]
    fn vector_fields_on_generators() {
        assert_eq!(d_l(Sl2::Plus, &p("b")), p("a"));
        assert!(d_l(Sl2::Plus, &p("a")).is_zero());
        assert_eq!(d_l(Sl2::Minus, &p("a")), p("b"));
        assert_eq!(d_l(Sl2::Three, &p("d")), p("-d"));
        assert!(d_l(Sl2::Three, &p("a*d")).is_zero());
        assert!(Sl2::from_name("e7").is_err());
    }

    #[test]
    fn left_and_right_fields_commute() {
        for u in Sl2::ALL {
            for v in Sl2::ALL {
                for x in Su2Poly::generators() {
                    assert_eq!(d_l(u, &d_r(v, &x)), d_r(v, &d_l(u, &x)));
                }
            }
        }
    }

    #[test]
    fn right_fields_through_adjoint() {
        let adj = adjoint_inverse();
        let x = p("a^2*b + c*d - 3*b^2");
        for (i, v) in Sl2::ALL.iter().enumerate() {
            let mut s = Su2Poly::zero();
            for (k, u) in Sl2::ALL.iter().enumerate() {
                s = &s + &(&adj[i][k] * &d_l(*u, &x));
            }
            assert_eq!(s, d_r(*v, &x));
        }
    }

    #[test]
    fn bracket_table() {
        let table = [
            ("a", "b", "-1/2*a*b"),
            ("a", "c", "-1/2*a*c"),
            ("a", "d", "-b*c"),
            ("b", "c", "0"),
            ("b", "d", "-1/2*b*d"),
            ("c", "d", "-1/2*c*d"),
        ];
        for (x, y, want) in table {
            assert_eq!(poisson_su2(&p(x), &p(y)), p(want), "{{{x},{y}}}");
        }
    }

    #[test]
    fn poisson_tensor_display() {
        let om = poisson_tensor_su2();
        let z = Su2Poly::zero();
        let want = [
            [z.clone(), p("-c*b"), p("1/2*b*d")],
            [p("c*b"), z.clone(), p("1/2*c*a")],
            [p("-1/2*b*d"), p("-1/2*c*a"), z],
        ];
        assert_eq!(om, want);
    }

    #[test]
    fn three_d_gamma_on_generators() {
        let g = &su2_data().algebra;
        let xi = crate::preconnection::su2_3d_xi(g, &int(-2)).unwrap();
        let lam = [int(-1), int(-1), int(-2)];
        for x in Su2Poly::generators() {
            for i in Sl2::ALL {
                let got = gamma_from_xi_su2(&xi, &x, &InvariantOneForm::basis(i)).unwrap();
                let want = InvariantOneForm::basis(i).mul(&d_l(Sl2::Three, &x).scale(&(&lam[i.index()] * frac(1, 2))));
                assert_eq!(got, want);
            }
        }
    }
}
