//! Dense complex linear algebra on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `e^{iθ}`.
pub fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Eigenvalues of a general complex matrix, read off the diagonal of its
/// complex Schur form.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    let n = m.nrows();
    match n {
        0 => Vec::new(),
        1 => vec![m[(0, 0)]],
        _ => {
            let (_, t) = m.clone().schur().unpack();
            (0..n).map(|i| t[(i, i)]).collect()
        }
    }
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(h: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = h.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    // symmetrize to kill roundoff asymmetry before handing to the solver
    let hs = (h + h.adjoint()).scale(0.5);
    let eig = hs.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMatrix::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);
    (vals, vecs)
}

/// Result of a numerical nullspace computation.
#[derive(Debug, Clone)]
pub struct NullSpace<T: nalgebra::ComplexField> {
    /// Singular values, descending.
    pub singular_values: Vec<f64>,
    /// Count of singular values at or below `rel · σ_max`.
    pub dim: usize,
    /// Right singular vector for the smallest singular value.
    pub least_vector: DVector<T>,
    /// Right singular vectors spanning the numerical nullspace.
    pub basis: Vec<DVector<T>>,
}

/// Numerical nullspace of `a` (columns are unknowns).
pub fn null_space<T>(a: &DMatrix<T>, rel: f64) -> NullSpace<T>
where
    T: nalgebra::ComplexField<RealField = f64>,
{
    let cols = a.ncols();
    // pad so that the SVD returns a full set of right singular vectors
    let a = if a.nrows() < cols {
        let mut p = DMatrix::<T>::zeros(cols, cols);
        p.view_mut((0, 0), (a.nrows(), cols)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&x, &y| svd.singular_values[y].total_cmp(&svd.singular_values[x]));
    let sv: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let smax = sv.first().copied().unwrap_or(0.0);
    let cutoff = rel * smax;
    let row = |i: usize| -> DVector<T> {
        DVector::from_iterator(cols, v_t.row(i).iter().map(|x| x.clone().conjugate()))
    };
    let basis: Vec<DVector<T>> = order
        .iter()
        .filter(|&&i| svd.singular_values[i] <= cutoff)
        .map(|&i| row(i))
        .collect();
    let least_vector = order
        .last()
        .map(|&i| row(i))
        .unwrap_or_else(|| DVector::zeros(0));
    NullSpace {
        dim: basis.len(),
        singular_values: sv,
        least_vector,
        basis,
    }
}

/// Positive square root of a positive definite Hermitian matrix and its inverse.
pub fn hermitian_sqrt(h: &CMatrix) -> Option<(CMatrix, CMatrix)> {
    let (vals, vecs) = hermitian_eigen(h);
    if vals.iter().any(|&v| v <= 0.0) {
        return None;
    }
    let n = vals.len();
    let d = CMatrix::from_fn(n, n, |r, k| {
        if r == k {
            Complex64::new(vals[r].sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let dinv = CMatrix::from_fn(n, n, |r, k| {
        if r == k {
            Complex64::new(1.0 / vals[r].sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let s = &vecs * d * vecs.adjoint();
    let sinv = &vecs * dinv * vecs.adjoint();
    Some((s, sinv))
}

/// `max |(U^* U - I)_{ij}|`.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let n = u.nrows();
    let g = u.adjoint() * u - CMatrix::identity(n, n);
    g.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn trace(m: &CMatrix) -> Complex64 {
    (0..m.nrows().min(m.ncols())).map(|i| m[(i, i)]).sum()
}

/// Principal-branch `z^e` for real `e`.
pub fn principal_pow(z: Complex64, e: f64) -> Complex64 {
    (z.ln() * e).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_triangular() {
        let m = CMatrix::from_row_slice(
            3,
            3,
            &[c(2.0, 0.0), c(1.0, 0.0), c(0.0, 3.0), c(0.0, 0.0), cis(1.0), c(5.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
        );
        let mut ev = eigenvalues(&m);
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((ev[0] - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((ev[1] - cis(1.0)).norm() < 1e-12);
        assert!((ev[2] - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn nullspace_of_rank_deficient() {
        let a = DMatrix::<f64>::from_row_slice(2, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        let ns = null_space(&a, 1e-8);
        assert_eq!(ns.dim, 1);
        assert!((ns.least_vector[2].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_of_pd() {
        let h = CMatrix::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)]);
        let (s, si) = hermitian_sqrt(&h).unwrap();
        assert!(max_abs(&(&s * &s - &h)) < 1e-12);
        assert!(max_abs(&(&s * &si - CMatrix::identity(2, 2))) < 1e-12);
        let bad = CMatrix::from_row_slice(1, 1, &[c(-1.0, 0.0)]);
        assert!(hermitian_sqrt(&bad).is_none());
    }

    #[test]
    fn principal_root() {
        let z = cis(2.5);
        assert!((principal_pow(z, 0.5) - cis(1.25)).norm() < 1e-15);
    }
}
