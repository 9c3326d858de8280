//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded
//! lexicographic, so iteration order is canonical and printing is stable.
//! Binary operations require identical variable lists and panic otherwise;
//! callers that accept user input check with [`MultiPoly::same_vars`] first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Exponent vector, one entry per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<[String]>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<[String]>) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The `i`-th coordinate function.
    pub fn var(vars: &Arc<[String]>, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(e), Rational::one());
        p
    }

    pub fn var_named(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        let i = index_of(vars, name)?;
        Ok(Self::var(vars, i))
    }

    pub fn monomial(vars: &Arc<[String]>, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms(
        vars: &Arc<[String]>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len());
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn same_vars(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    pub fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(Error::VariableMismatch(
                self.vars.to_vec(),
                other.vars.to_vec(),
            ))
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative by variable index.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn partial_named(&self, name: &str) -> Result<MultiPoly> {
        Ok(self.partial(index_of(&self.vars, name)?))
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }

    /// Parse according to the polynomial grammar over the given variables.
    pub fn parse(vars: &Arc<[String]>, s: &str) -> Result<MultiPoly> {
        Parser::new(vars, s).parse()
    }

    fn binop(&self, other: &MultiPoly) {
        assert!(
            self.same_vars(other),
            "polynomial variable lists differ: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }
}

pub fn index_of(vars: &[String], name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

pub fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// `x1, ..., xn`.
pub fn coordinate_vars(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            f.write_str(&format_rational(&c.abs()))?;
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.binop(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        self.binop(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.binop(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly { (&self).$f(&rhs) }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly { (&self).$f(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

struct Parser<'a> {
    vars: &'a Arc<[String]>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a Arc<[String]>, s: &str) -> Self {
        Parser {
            vars,
            chars: s.chars().collect(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphabetic() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
            while self.pos < self.chars.len()
                && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
            {
                self.pos += 1;
            }
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn parse(mut self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.vars);
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') | Some('−') => {
                    self.pos += 1;
                    true
                }
                None => break,
                Some(c) if !first => return self.err(format!("expected '+' or '-', found '{c}'")),
                Some(_) => false,
            };
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one(self.vars.len());
        let mut need_factor = true;
        if let Some(n) = self.digits() {
            let num: num_bigint::BigInt = n.parse().expect("digits");
            let mut c = Rational::from_integer(num);
            if self.peek() == Some('/') {
                self.pos += 1;
                let Some(d) = self.digits() else {
                    return self.err("expected denominator");
                };
                let den: num_bigint::BigInt = d.parse().expect("digits");
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                c /= Rational::from_integer(den);
            }
            coeff = c;
            need_factor = false;
        }
        loop {
            if need_factor {
                need_factor = false;
            } else if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
            self.skip_ws();
            let at = self.pos;
            let Some(name) = self.ident() else {
                return self.err("expected variable name");
            };
            let Ok(i) = index_of(self.vars, &name) else {
                self.pos = at;
                return self.err(format!("unknown variable `{name}`"));
            };
            let mut e = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                let Some(d) = self.digits() else {
                    return self.err("expected exponent");
                };
                e = match d.parse() {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent too large"),
                };
            }
            mono.0[i] += e;
        }
        Ok((mono, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&coordinate_vars(2), s).unwrap()
    }

    #[test]
    fn partials() {
        assert_eq!(p("x1^2*x2").partial(0), p("2*x1*x2"));
        assert!(p("7/3").partial(1).is_zero());
        assert_eq!(p("3/2*x1^3 - x2").partial(1), p("-1"));
    }

    #[test]
    fn printing_is_grlex_descending() {
        let q = p("x2 + x1^2 - 3/2 + x1*x2");
        assert_eq!(q.to_string(), "1*x1^2+1*x1*x2+1*x2-3/2");
        assert_eq!(MultiPoly::zero(&coordinate_vars(2)).to_string(), "0");
    }

    #[test]
    fn parser_accepts_unicode_minus_and_repeats() {
        assert_eq!(p("x1*x1 − 2"), p("x1^2 - 2"));
        assert_eq!(p("-x2"), p("-1*x2"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let vars = coordinate_vars(2);
        match MultiPoly::parse(&vars, "x1 + y") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(MultiPoly::parse(&vars, "").is_err());
        assert!(MultiPoly::parse(&vars, "1/0").is_err());
        assert!(MultiPoly::parse(&vars, "x1 x2").is_err());
    }

    #[test]
    fn eval_and_pow() {
        let q = p("x1 + x2").pow(3);
        assert_eq!(q.eval(&[int(1), frac(1, 2)]), frac(27, 8));
    }

    #[test]
    #[should_panic]
    fn mismatched_vars_panic() {
        let _ = &p("x1") + &MultiPoly::one(&var_list(&["a"]));
    }
}
