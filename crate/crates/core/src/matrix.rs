//! Dense square matrices over `Z[q^{±1}, t^{±1}]`.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::numeric::CMatrix;

/// Row-major dense matrix with Laurent polynomial entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly2>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![LaurentPoly2::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly2::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly2) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer matrix, row-major.
    pub fn from_ints(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Self::from_fn(rows, cols, |r, c| LaurentPoly2::constant(vals[r * cols + c]))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[LaurentPoly2] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly2) -> LaurentPoly2) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&LaurentPoly2) -> Result<LaurentPoly2>) -> Result<Self> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// Simultaneous row/column permutation: `out[(i,j)] = self[(perm[i], perm[j])]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self[(perm[r], perm[c])].clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows) && self.is_square()
    }

    /// `Some(c)` if the matrix equals `c·I`.
    pub fn scalar_value(&self) -> Option<LaurentPoly2> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            LaurentPoly2::one()
        } else {
            self[(0, 0)].clone()
        };
        for r in 0..self.rows {
            for k in 0..self.cols {
                let e = &self[(r, k)];
                let ok = if r == k { *e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn all_t_free(&self) -> bool {
        self.data.iter().all(LaurentPoly2::is_t_free)
    }

    pub fn substitute_t(&self, t_value: i32) -> Result<Self> {
        self.try_map(|p| p.substitute_t(t_value))
    }

    pub fn eval(&self, q: Complex64, t: Complex64) -> Result<CMatrix> {
        let mut m = CMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].eval(q, t)?;
            }
        }
        Ok(m)
    }

    pub fn checked_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(r, c)] += a * b;
                }
            }
        }
        Ok(out)
    }

    fn add_scaled_identity(&mut self, c: &LaurentPoly2) {
        for i in 0..self.rows.min(self.cols) {
            self[(i, i)] += c;
        }
    }

    /// Coefficients `[1, c_1, …, c_d]` of `det(xI - A) = Σ c_i x^{d-i}`,
    /// by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> Result<Vec<LaurentPoly2>> {
        if !self.is_square() {
            return Err(Error::Dimension("charpoly of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut v = vec![LaurentPoly2::one()];
        for k in 0..n {
            // leading (k+1)x(k+1) block [[M, C], [R, a]] with M of size k
            let a = &self[(k, k)];
            let mut col = vec![LaurentPoly2::one(), -a];
            // w = M^j C, starting at C
            let mut w: Vec<LaurentPoly2> = (0..k).map(|i| self[(i, k)].clone()).collect();
            for _ in 0..k {
                let mut rw = LaurentPoly2::zero();
                for (i, wi) in w.iter().enumerate() {
                    if !wi.is_zero() && !self[(k, i)].is_zero() {
                        rw += &self[(k, i)] * wi;
                    }
                }
                col.push(-rw);
                let mut next = vec![LaurentPoly2::zero(); k];
                for (i, nx) in next.iter_mut().enumerate() {
                    for (j, wj) in w.iter().enumerate() {
                        if !wj.is_zero() && !self[(i, j)].is_zero() {
                            *nx += &self[(i, j)] * wj;
                        }
                    }
                }
                w = next;
            }
            // new = T v, T lower triangular Toeplitz with first column `col`
            let mut new = vec![LaurentPoly2::zero(); k + 2];
            for (i, ni) in new.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate() {
                    if i >= j && !vj.is_zero() && !col[i - j].is_zero() {
                        *ni += &col[i - j] * vj;
                    }
                }
            }
            v = new;
        }
        Ok(v)
    }

    pub fn det(&self) -> Result<LaurentPoly2> {
        let cp = self.charpoly()?;
        let n = self.rows;
        let last = cp[n].clone();
        Ok(if n % 2 == 1 { -last } else { last })
    }

    /// Exact inverse, available when the determinant is a unit `±q^a t^b`.
    /// Uses Cayley-Hamilton: `A^{-1} = -(A^{d-1} + c_1 A^{d-2} + … + c_{d-1}) / c_d`.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        let cp = self.charpoly()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Self::identity(0));
        }
        let cn_inv = cp[n]
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertible(cp[n].to_string()))?;
        let mut b = Self::identity(n);
        for c in cp.iter().take(n).skip(1) {
            b = self.checked_mul(&b)?;
            b.add_scaled_identity(c);
        }
        let factor = -cn_inv;
        Ok(b.map(|e| e * &factor))
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly2;
    fn index(&self, (r, c): (usize, usize)) -> &LaurentPoly2 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut LaurentPoly2 {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.checked_mul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> LaurentPoly2 {
        LaurentPoly2::q()
    }

    /// Laplace expansion, independent of Berkowitz.
    fn det_laplace(m: &PolyMatrix) -> LaurentPoly2 {
        let n = m.nrows();
        if n == 0 {
            return LaurentPoly2::one();
        }
        let mut acc = LaurentPoly2::zero();
        for c in 0..n {
            if m[(0, c)].is_zero() {
                continue;
            }
            let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, k| {
                m[(r + 1, if k < c { k } else { k + 1 })].clone()
            });
            let term = &m[(0, c)] * &det_laplace(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        acc
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // [[a, b], [c, d]] -> x^2 - (a+d) x + (ad - bc)
        let m = PolyMatrix::from_ints(2, 2, &[1, 2, 3, 4]);
        let cp = m.charpoly().unwrap();
        assert_eq!(cp, vec![1.into(), (-5).into(), (-2).into()]);
        assert_eq!(m.det().unwrap(), LaurentPoly2::constant(-2));
        assert_eq!(PolyMatrix::identity(0).det().unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn inverse_of_unimodular() {
        let mut m = PolyMatrix::from_ints(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        m[(0, 0)] = -q();
        m[(1, 0)] = LaurentPoly2::constant(-1);
        m[(0, 2)] = q() * q();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
        let sing = PolyMatrix::from_ints(2, 2, &[2, 0, 0, 1]);
        assert!(matches!(sing.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn scalar_detection() {
        let m = PolyMatrix::identity(3).map(|e| e * &q());
        assert_eq!(m.scalar_value(), Some(q()));
        assert_eq!(PolyMatrix::from_ints(2, 2, &[1, 1, 0, 1]).scalar_value(), None);
    }

    proptest! {
        #[test]
        fn berkowitz_det_matches_laplace(vals in prop::collection::vec(-3i64..4, 16), shifts in prop::collection::vec(-1i32..2, 16)) {
            let m = PolyMatrix::from_fn(4, 4, |r, c| {
                LaurentPoly2::monomial(vals[r * 4 + c], shifts[r * 4 + c], 0)
            });
            prop_assert_eq!(m.det().unwrap(), det_laplace(&m));
        }
    }
}
