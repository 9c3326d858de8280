//! Dense rank-k tensors of exact rationals over a single index range `0..dim`.
//!
//! Storage is row-major: the last axis varies fastest.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor {
    rank: usize,
    dim: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(rank: usize, dim: usize) -> Self {
        assert!(dim > 0, "tensor dimension must be positive");
        let len = dim.pow(rank as u32);
        Tensor {
            rank,
            dim,
            data: vec![Rational::zero(); len],
        }
    }

    pub fn from_data(rank: usize, dim: usize, data: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be positive".into()));
        }
        let len = dim.pow(rank as u32);
        if data.len() != len {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank}, dim {dim} needs {len} entries, got {}",
                data.len()
            )));
        }
        Ok(Tensor { rank, dim, data })
    }

    /// Builds entries from a closure over multi-indices.
    pub fn from_fn(rank: usize, dim: usize, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut t = Self::zeros(rank, dim);
        let mut idx = vec![0; rank];
        for k in 0..t.data.len() {
            t.unflat_into(k, &mut idx);
            t.data[k] = f(&idx);
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rational> {
        self.data
    }

    pub fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn unflat_into(&self, mut k: usize, idx: &mut [usize]) {
        for slot in idx.iter_mut().rev() {
            *slot = k % self.dim;
            k /= self.dim;
        }
    }

    pub fn unflat(&self, k: usize) -> Vec<usize> {
        let mut idx = vec![0; self.rank];
        self.unflat_into(k, &mut idx);
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Rational) {
        let k = self.flat(idx);
        self.data[k] = v;
    }

    pub fn add_at(&mut self, idx: &[usize], v: &Rational) {
        let k = self.flat(idx);
        self.data[k] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Iterator over `(multi-index, value)` for nonzero entries.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (self.unflat(k), v))
    }

    fn same_shape(&self, other: &Tensor) -> Result<()> {
        if self.rank != other.rank || self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "rank {}/dim {} vs rank {}/dim {}",
                self.rank, self.dim, other.rank, other.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Tensor, f: impl Fn(&Rational, &Rational) -> Rational) -> Tensor {
        Tensor {
            rank: self.rank,
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        Tensor {
            rank: self.rank,
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Tensor {
        Tensor {
            rank: self.rank,
            dim: self.dim,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn outer(&self, other: &Tensor) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch("outer product of different dims".into()));
        }
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for a in &self.data {
            for b in &other.data {
                data.push(a * b);
            }
        }
        Ok(Tensor {
            rank: self.rank + other.rank,
            dim: self.dim,
            data,
        })
    }

    /// Axis `k` of the result is axis `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor> {
        if perm.len() != self.rank {
            return Err(Error::InvalidPermutation(perm.to_vec()));
        }
        let mut seen = vec![false; self.rank];
        for &p in perm {
            if p >= self.rank || seen[p] {
                return Err(Error::InvalidPermutation(perm.to_vec()));
            }
            seen[p] = true;
        }
        let mut out = Tensor::zeros(self.rank, self.dim);
        let mut dst = vec![0; self.rank];
        let mut src = vec![0; self.rank];
        for k in 0..out.data.len() {
            out.unflat_into(k, &mut dst);
            for (a, &p) in perm.iter().enumerate() {
                src[p] = dst[a];
            }
            out.data[k] = self.data[self.flat(&src)].clone();
        }
        Ok(out)
    }

    /// Swaps two axes.
    pub fn flip(&self, i: usize, j: usize) -> Result<Tensor> {
        self.check_axis(i)?;
        self.check_axis(j)?;
        let mut perm: Vec<usize> = (0..self.rank).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis >= self.rank {
            Err(Error::AxisOutOfRange {
                axis,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// `(A + A∘flip)/2` on the given axes.
    pub fn symmetrize(&self, i: usize, j: usize) -> Result<Tensor> {
        let f = self.flip(i, j)?;
        Ok(self.zip(&f, |a, b| (a + b) / Rational::from_integer(2.into())))
    }

    /// `(A − A∘flip)/2` on the given axes.
    pub fn antisymmetrize(&self, i: usize, j: usize) -> Result<Tensor> {
        let f = self.flip(i, j)?;
        Ok(self.zip(&f, |a, b| (a - b) / Rational::from_integer(2.into())))
    }

    /// Multilinear contraction. Result axes: the free axes of `self` in
    /// order, then the free axes of `other` in order.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot contract dim {} with dim {}",
                self.dim, other.dim
            )));
        }
        let mut used_a = vec![false; self.rank];
        let mut used_b = vec![false; other.rank];
        for &(a, b) in pairs {
            self.check_axis(a)?;
            other.check_axis(b)?;
            if used_a[a] {
                return Err(Error::OverlappingPairs(a));
            }
            if used_b[b] {
                return Err(Error::OverlappingPairs(b));
            }
            used_a[a] = true;
            used_b[b] = true;
        }
        let free_a: Vec<usize> = (0..self.rank).filter(|&a| !used_a[a]).collect();
        let free_b: Vec<usize> = (0..other.rank).filter(|&b| !used_b[b]).collect();
        let d = self.dim;
        let mut out = Tensor::zeros(free_a.len() + free_b.len(), d);
        let nfree_b = d.pow(free_b.len() as u32);
        let mut idx_b = vec![0; other.rank];
        let mut fb = vec![0; free_b.len()];
        let mut out_idx = vec![0; out.rank];
        for (idx_a, va) in self.nonzeros() {
            for &(a, b) in pairs {
                idx_b[b] = idx_a[a];
            }
            for (slot, &a) in free_a.iter().enumerate() {
                out_idx[slot] = idx_a[a];
            }
            for k in 0..nfree_b {
                let mut r = k;
                for s in fb.iter_mut().rev() {
                    *s = r % d;
                    r /= d;
                }
                for (slot, &b) in free_b.iter().enumerate() {
                    idx_b[b] = fb[slot];
                }
                let vb = &other.data[other.flat(&idx_b)];
                if vb.is_zero() {
                    continue;
                }
                out_idx[free_a.len()..].copy_from_slice(&fb);
                let o = out.flat(&out_idx);
                out.data[o] += va * vb;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn seq(rank: usize, dim: usize) -> Tensor {
        Tensor::from_fn(rank, dim, |i| int(i.iter().fold(0, |a, &x| a * 7 + x as i64 + 1)))
    }

    #[test]
    fn identity_contraction() {
        let id = Tensor::from_fn(2, 3, |i| int((i[0] == i[1]) as i64));
        let v = Tensor::from_data(1, 3, vec![int(1), int(0), int(0)]).unwrap();
        assert_eq!(id.contract(&v, &[(1, 0)]).unwrap(), v);
    }

    #[test]
    fn contraction_errors() {
        let a = seq(2, 3);
        assert!(matches!(
            a.contract(&a, &[(2, 0)]),
            Err(Error::AxisOutOfRange { .. })
        ));
        assert!(matches!(
            a.contract(&seq(2, 2), &[(0, 0)]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            a.contract(&a, &[(0, 0), (0, 1)]),
            Err(Error::OverlappingPairs(0))
        ));
    }

    #[test]
    fn cyclic_permutation_has_order_three() {
        let t = seq(3, 3);
        let c = [1, 2, 0];
        let back = t.permute(&c).unwrap().permute(&c).unwrap().permute(&c).unwrap();
        assert_eq!(back, t);
        assert!(t.permute(&[0, 0, 1]).is_err());
        assert!(t.permute(&[0, 1]).is_err());
    }

    #[test]
    fn permute_moves_axes() {
        let t = seq(3, 2);
        let p = t.permute(&[2, 0, 1]).unwrap();
        assert_eq!(p.get(&[1, 0, 0]), t.get(&[0, 0, 1]));
        assert_eq!(p.get(&[0, 1, 0]), t.get(&[1, 0, 0]));
    }

    #[test]
    fn antisym_of_sym_vanishes() {
        let t = seq(3, 3);
        let s = t.symmetrize(0, 2).unwrap();
        assert!(s.antisymmetrize(0, 2).unwrap().is_zero());
        assert_eq!(s.add(&t.antisymmetrize(0, 2).unwrap()).unwrap(), t);
    }
}
