//! Exact rational matrices and fraction-free nullspace computation.
//!
//! Constraint systems here are large and very sparse (tens of thousands of
//! rows, a few dozen nonzeros each), so rows are stored sparsely. Elimination
//! runs over `BigInt` after clearing denominators row by row.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::Tensor;

/// A row as `(column, value)` pairs with strictly increasing columns and no
/// explicit zeros.
pub type SparseRow = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl RationalMatrix {
    pub fn new(cols: usize) -> Self {
        RationalMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            m.push_dense(r);
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.rows.push(vec![(i, Rational::one())]);
        }
        m
    }

    /// Appends a row given as unsorted `(column, value)` terms; repeated
    /// columns are summed and zeros dropped.
    pub fn push_terms(&mut self, terms: impl IntoIterator<Item = (usize, Rational)>) {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in terms {
            assert!(c < self.cols, "column {c} out of range");
            *acc.entry(c).or_insert_with(Rational::zero) += v;
        }
        self.rows
            .push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }

    pub fn push_dense(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        );
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, x)| x * &v[*c]).sum())
            .collect())
    }

    pub fn rank(&self) -> usize {
        Echelon::build(self).pivots.len()
    }

    /// Exact basis of the right nullspace, one rank-1 tensor per free column
    /// in increasing column order. The basis is read off the reduced row
    /// echelon form, which is unique, so the output does not depend on the
    /// order in which rows were eliminated.
    pub fn nullspace(&self) -> Vec<Tensor> {
        if self.cols == 0 {
            return Vec::new();
        }
        let rref = Echelon::build(self).reduced();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if rref.contains_key(&f) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (&p, row) in &rref {
                if p > f {
                    break;
                }
                if let Ok(k) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v[p] = -row[k].1.clone();
                }
            }
            basis.push(Tensor::from_data(1, self.cols, v).expect("length matches"));
        }
        basis
    }

    /// Solves `A x = b` exactly. Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if b.len() != self.rows.len() {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let mut aug = RationalMatrix::new(self.cols + 1);
        for (r, bi) in self.rows.iter().zip(b) {
            let mut row = r.clone();
            if !bi.is_zero() {
                row.push((self.cols, bi.clone()));
            }
            aug.rows.push(row);
        }
        let rref = Echelon::build(&aug).reduced();
        if rref.contains_key(&self.cols) {
            return Err(Error::NotInSpan("inconsistent linear system".into()));
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (&p, row) in &rref {
            if let Some((c, v)) = row.last() {
                if *c == self.cols {
                    x[p] = v.clone();
                }
            }
        }
        Ok(x)
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Row echelon form over the integers, keyed by pivot column.
struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    /// Rows are fed sparsest first (ties by original position) so that
    /// short rows become pivots before long ones; this only affects speed,
    /// since the reduced form is unique.
    fn build(m: &RationalMatrix) -> Self {
        let mut order: Vec<usize> = (0..m.rows.len()).collect();
        order.sort_by_key(|&i| (m.rows[i].len(), i));
        let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
        for i in order {
            let mut row = to_integer_row(&m.rows[i]);
            let mut k = 0;
            while k < row.len() {
                let c = row[k].0;
                match pivots.get(&c) {
                    Some(p) => {
                        let factor = row[k].1.clone();
                        row = combine(&p[0].1, &row, &factor, p);
                        // entries before position k are untouched by the
                        // pivot, which starts at column c
                        k = row.partition_point(|(col, _)| *col < c);
                    }
                    None => k += 1,
                }
            }
            if !row.is_empty() {
                normalize(&mut row);
                pivots.insert(row[0].0, row);
            }
        }
        Echelon { pivots }
    }

    /// Back-substitutes to the reduced form with unit pivots.
    fn reduced(mut self) -> BTreeMap<usize, SparseRow> {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        let mut done: BTreeMap<usize, IntRow> = BTreeMap::new();
        for c in cols {
            let mut row = self.pivots.remove(&c).expect("pivot present");
            let mut k = 1;
            while k < row.len() {
                let col = row[k].0;
                match done.get(&col) {
                    Some(p) => {
                        let factor = row[k].1.clone();
                        row = combine(&p[0].1, &row, &factor, p);
                        k = row.partition_point(|(x, _)| *x < col);
                    }
                    None => k += 1,
                }
            }
            normalize(&mut row);
            done.insert(c, row);
        }
        done.into_iter()
            .map(|(c, row)| {
                let lead = row[0].1.clone();
                let r = row
                    .into_iter()
                    .map(|(col, v)| (col, Rational::new(v, lead.clone())))
                    .collect();
                (c, r)
            })
            .collect()
    }
}

fn to_integer_row(row: &SparseRow) -> IntRow {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter()
        .map(|(c, v)| (*c, v.numer() * (&l / v.denom())))
        .collect()
}

/// `a·x − b·y` on sparse integer rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if cx < cy {
            i += 1;
            (cx, a * &x[i - 1].1)
        } else if cy < cx {
            j += 1;
            (cy, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (cx, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    normalize(&mut out);
    out
}

/// Divides out the content and makes the leading entry positive.
fn normalize(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}
