//! Invariant Hermitian forms of the Lawrence-Krammer representation at unit
//! modulus parameters.

use std::io::Write;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::numeric::{cis, hermitian_eigen, hermitian_sqrt, null_space, CMatrix};
use crate::reps::{NumericGenerators, RepKind};
use crate::tol;

#[derive(Debug, Clone)]
pub struct HermitianForm {
    pub n: usize,
    pub q: Complex64,
    pub t: Complex64,
    pub gram: CMatrix,
    pub residual: f64,
    pub nullspace_dim: usize,
}

/// Real basis of the `p x p` Hermitian matrices: diagonal units, then
/// `E_ij + E_ji` and `i(E_ij - E_ji)` for `i < j`.
fn hermitian_basis(p: usize) -> Vec<CMatrix> {
    let z = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(p * p);
    for i in 0..p {
        let mut m = CMatrix::from_element(p, p, z);
        m[(i, i)] = Complex64::new(1.0, 0.0);
        out.push(m);
    }
    for j in 0..p {
        for i in 0..j {
            let mut m = CMatrix::from_element(p, p, z);
            m[(i, j)] = Complex64::new(1.0, 0.0);
            m[(j, i)] = Complex64::new(1.0, 0.0);
            out.push(m);
            let mut m = CMatrix::from_element(p, p, z);
            m[(i, j)] = Complex64::new(0.0, 1.0);
            m[(j, i)] = Complex64::new(0.0, -1.0);
            out.push(m);
        }
    }
    out
}

/// Real coordinates of a Hermitian matrix in the order of [`hermitian_basis`].
fn hermitian_coords(m: &CMatrix) -> Vec<f64> {
    let p = m.nrows();
    let mut out = Vec::with_capacity(p * p);
    for i in 0..p {
        out.push(m[(i, i)].re);
    }
    for j in 0..p {
        for i in 0..j {
            out.push(m[(i, j)].re);
            out.push(m[(i, j)].im);
        }
    }
    out
}

fn invariance_defect(generators: &[CMatrix], h: &CMatrix) -> f64 {
    generators
        .iter()
        .map(|a| (a.adjoint() * h * a - h).norm())
        .fold(0.0, f64::max)
}

/// Best invariant Hermitian form for a set of generators: the least singular
/// vector of the stacked real system `A^* H A - H = 0`, scaled to unit spectral
/// norm with nonnegative trace. Returns `(gram, residual, nullspace_dim)` without
/// judging the residual.
pub fn solve_invariant(generators: &[CMatrix]) -> Result<(CMatrix, f64, usize)> {
    let Some(first) = generators.first() else {
        return Err(Error::Invalid("no generators".into()));
    };
    let p = first.nrows();
    let basis = hermitian_basis(p);
    let unknowns = basis.len();
    let mut sys = DMatrix::<f64>::zeros(unknowns * generators.len(), unknowns);
    for (g, a) in generators.iter().enumerate() {
        if a.nrows() != p || a.ncols() != p {
            return Err(Error::Dimension("generators must be square of equal size".into()));
        }
        let a_adj = a.adjoint();
        for (k, b) in basis.iter().enumerate() {
            let img = &a_adj * b * a - b;
            for (r, v) in hermitian_coords(&img).into_iter().enumerate() {
                sys[(g * unknowns + r, k)] = v;
            }
        }
    }
    let ns = null_space(&sys, tol::NULLSPACE_REL);
    let mut h = CMatrix::zeros(p, p);
    for (k, b) in basis.iter().enumerate() {
        h += b * Complex64::new(ns.least_vector[k], 0.0);
    }
    let tr: f64 = (0..p).map(|i| h[(i, i)].re).sum();
    if tr < 0.0 {
        h = -h;
    }
    let norm = spectral_norm(&h);
    if norm > 0.0 {
        h /= Complex64::new(norm, 0.0);
    }
    let residual = invariance_defect(generators, &h);
    Ok((h, residual, ns.dim))
}

fn spectral_norm(h: &CMatrix) -> f64 {
    hermitian_eigen(h).0.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

fn check_unit(q: Complex64, t: Complex64) -> Result<()> {
    if (q.norm() - 1.0).abs() > tol::UNIT_MODULUS || (t.norm() - 1.0).abs() > tol::UNIT_MODULUS {
        return Err(Error::NotUnitModulus {
            q_abs: q.norm(),
            t_abs: t.norm(),
        });
    }
    Ok(())
}

fn lk_generator_matrices(n: usize, q: Complex64, t: Complex64) -> Result<Vec<CMatrix>> {
    let gens = NumericGenerators::new(RepKind::Lk, n, q, t)?;
    (1..n as i64)
        .map(|i| gens.word(&BraidWord::from_signed(n, &[i])?))
        .collect()
}

fn solve_lk(n: usize, q: Complex64, t: Complex64) -> Result<HermitianForm> {
    check_unit(q, t)?;
    if n < 2 {
        return Err(Error::OutOfRange {
            index: n as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    let gens = lk_generator_matrices(n, q, t)?;
    let (gram, residual, nullspace_dim) = if gens.is_empty() {
        (CMatrix::identity(0, 0), 0.0, 0)
    } else {
        solve_invariant(&gens)?
    };
    Ok(HermitianForm {
        n,
        q,
        t,
        gram,
        residual,
        nullspace_dim,
    })
}

/// The `ρ_n`-invariant Hermitian form at `(q, t)`, unique up to scale when
/// `nullspace_dim == 1`.
pub fn invariant_form(n: usize, q: Complex64, t: Complex64) -> Result<HermitianForm> {
    let f = solve_lk(n, q, t)?;
    if f.residual > tol::FORM_MAX_RESIDUAL {
        return Err(Error::NoInvariantForm { residual: f.residual });
    }
    Ok(f)
}

/// `(definite, min_eigenvalue)` of the form normalized to unit spectral
/// norm with nonnegative trace.
pub fn is_definite(h: &HermitianForm) -> (bool, f64) {
    gram_definiteness(&h.gram)
}

pub fn gram_definiteness(gram: &CMatrix) -> (bool, f64) {
    let p = gram.nrows();
    if p == 0 {
        return (true, f64::INFINITY);
    }
    let mut g = gram.clone();
    let tr: f64 = (0..p).map(|i| g[(i, i)].re).sum();
    if tr < 0.0 {
        g = -g;
    }
    let (vals, _) = hermitian_eigen(&g);
    let norm = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let min = if norm > 0.0 { vals[0] / norm } else { 0.0 };
    (min > tol::DEFINITE_MIN_EIG, min)
}

/// `H^{1/2} m H^{-1/2}`, unitary when `h` is a definite invariant form for `m`.
pub fn unitarize(m: &CMatrix, h: &HermitianForm) -> Result<CMatrix> {
    let (definite, min_eig) = is_definite(h);
    if !definite {
        return Err(Error::Indefinite { min_eig });
    }
    let (s, s_inv) =
        hermitian_sqrt(&h.gram).ok_or(Error::Indefinite { min_eig })?;
    Ok(s * m * s_inv)
}

/// The point `t = -e^{iθ_t}`, `q = e^{i r θ_t}` of a definiteness scan.
pub fn scan_point(theta_t: f64, ratio: f64) -> (Complex64, Complex64) {
    (cis(ratio * theta_t), -cis(theta_t))
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub theta_t: f64,
    pub ratio: f64,
    pub q_re: f64,
    pub q_im: f64,
    pub t_re: f64,
    pub t_im: f64,
    pub residual: f64,
    pub nullspace_dim: usize,
    pub definite: bool,
    pub min_eig: f64,
}

/// Solve the form at every `(θ_t, r)` of the grid, in grid order
/// (θ_t outer, r inner).
pub fn definiteness_scan(n: usize, theta_t: &[f64], ratio: &[f64]) -> Result<Vec<ScanRow>> {
    for &th in theta_t {
        if !(th > 0.0 && th < std::f64::consts::PI) {
            return Err(Error::Invalid(format!("theta_t = {th} is outside (0, pi)")));
        }
    }
    if let Some(r) = ratio.iter().find(|&&r| r <= 0.0) {
        return Err(Error::Invalid(format!("ratio = {r} must be positive")));
    }
    let grid: Vec<(f64, f64)> = theta_t
        .iter()
        .flat_map(|&th| ratio.iter().map(move |&r| (th, r)))
        .collect();
    grid.par_iter()
        .map(|&(th, r)| {
            let (q, t) = scan_point(th, r);
            let f = solve_lk(n, q, t)?;
            let (def, min_eig) = is_definite(&f);
            Ok(ScanRow {
                n,
                theta_t: th,
                ratio: r,
                q_re: q.re,
                q_im: q.im,
                t_re: t.re,
                t_im: t.im,
                residual: f.residual,
                nullspace_dim: f.nullspace_dim,
                definite: def && f.residual <= tol::FORM_CERTIFIED_RESIDUAL,
                min_eig,
            })
        })
        .collect()
}

pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// First certified definite point of the ratio grid at `θ_t`, scanning
/// ratios in the given order.
pub fn find_definite_point(n: usize, theta_t: f64, ratios: &[f64]) -> Result<Option<HermitianForm>> {
    for &r in ratios {
        let (q, t) = scan_point(theta_t, r);
        let f = solve_lk(n, q, t)?;
        if f.residual <= tol::FORM_CERTIFIED_RESIDUAL && is_definite(&f).0 {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_strands_any_positive_scalar() {
        let f = invariant_form(2, cis(0.3), cis(1.0)).unwrap();
        assert_eq!(f.gram.nrows(), 1);
        assert!((f.gram[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rejects_non_unit_parameters() {
        let r = invariant_form(3, Complex64::new(1.1, 0.0), cis(1.0));
        assert!(matches!(r, Err(Error::NotUnitModulus { .. })));
    }

    #[test]
    fn identity_form_is_definite() {
        let f = HermitianForm {
            n: 3,
            q: cis(0.0),
            t: cis(0.0),
            gram: CMatrix::identity(3, 3),
            residual: 0.0,
            nullspace_dim: 1,
        };
        let (d, m) = is_definite(&f);
        assert!(d);
        assert!((m - 1.0).abs() < 1e-12);
        let id = CMatrix::identity(3, 3);
        assert!((unitarize(&id, &f).unwrap() - &id).norm() < 1e-12);
    }

    #[test]
    fn hermitian_coordinates_round_trip() {
        let basis = hermitian_basis(3);
        assert_eq!(basis.len(), 9);
        let mut h = CMatrix::zeros(3, 3);
        let x = [1.0, -2.0, 0.5, 0.3, -0.7, 1.1, 0.0, 2.2, -0.4];
        for (b, &c) in basis.iter().zip(&x) {
            h += b * Complex64::new(c, 0.0);
        }
        assert!((h.adjoint() - &h).norm() < 1e-15);
        assert_eq!(hermitian_coords(&h), x.to_vec());
    }
}
