//! Eigenvalue multisets and the spectral tests that rule out orthogonal,
//! symplectic, Kronecker-product and (anti)symmetric-square images.

use std::cmp::Ordering;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::braid::{full_twist, BraidWord};
use crate::error::{Error, Result};
use crate::numeric::{eigenvalues, null_space, CMatrix};
use crate::reps::{su_scalar, NumericGenerators, RepKind};
use crate::tol;

fn lex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// A multiset of complex numbers, stored as distinct values (pairwise more
/// than `tol` apart) with multiplicities.
#[derive(Debug, Clone)]
pub struct EigMultiset {
    values: Vec<(Complex64, usize)>,
    tol: f64,
}

impl EigMultiset {
    pub fn empty(tol: f64) -> Self {
        Self {
            values: Vec::new(),
            tol,
        }
    }

    /// Cluster `vals` greedily in lexicographic `(re, im)` order. A value
    /// joins the first cluster whose running mean is within `tol`.
    pub fn from_values(vals: impl IntoIterator<Item = Complex64>, tol: f64) -> Self {
        let mut vals: Vec<Complex64> = vals.into_iter().collect();
        vals.sort_by(lex);
        let mut clusters: Vec<(Complex64, usize)> = Vec::new();
        for v in vals {
            match clusters.iter_mut().find(|(c, _)| (c - v).norm() <= tol) {
                Some((c, m)) => {
                    *c = (*c * *m as f64 + v) / (*m as f64 + 1.0);
                    *m += 1;
                }
                None => clusters.push((v, 1)),
            }
        }
        clusters.sort_by(|a, b| lex(&a.0, &b.0));
        Self {
            values: clusters,
            tol,
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Complex64, usize)>, tol: f64) -> Self {
        Self::from_values(
            pairs
                .into_iter()
                .flat_map(|(v, m)| std::iter::repeat_n(v, m)),
            tol,
        )
    }

    pub fn values(&self) -> &[(Complex64, usize)] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn total(&self) -> usize {
        self.values.iter().map(|(_, m)| m).sum()
    }

    pub fn distinct(&self) -> usize {
        self.values.len()
    }

    pub fn expanded(&self) -> Vec<Complex64> {
        self.values
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn multiplicity_of(&self, z: Complex64) -> usize {
        self.values
            .iter()
            .filter(|(v, _)| (v - z).norm() <= self.tol)
            .map(|(_, m)| m)
            .sum()
    }

    fn index_of(&self, z: Complex64) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (i, (v, _)) in self.values.iter().enumerate() {
            let d = (v - z).norm();
            if d <= self.tol && best.is_none_or(|(_, bd)| d < bd) {
                best = Some((i, d));
            }
        }
        best.map(|(i, _)| i)
    }

    /// Multiset equality up to `tol` by greedy nearest matching.
    pub fn approx_eq(&self, other: &EigMultiset, tol: f64) -> bool {
        if self.total() != other.total() {
            return false;
        }
        let mut pool = other.expanded();
        for a in self.expanded() {
            let hit = pool
                .iter()
                .enumerate()
                .filter(|(_, b)| (a - **b).norm() <= tol)
                .min_by(|x, y| (a - x.1).norm().total_cmp(&(a - y.1).norm()))
                .map(|(i, _)| i);
            match hit {
                Some(i) => {
                    pool.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &EigMultiset) -> EigMultiset {
        let mut all = self.expanded();
        all.extend(other.expanded());
        EigMultiset::from_values(all, self.tol)
    }

    /// `self ∖ other`; every element of `other` must be present.
    pub fn difference(&self, other: &EigMultiset) -> Result<EigMultiset> {
        let mut pool = self.expanded();
        for b in other.expanded() {
            let hit = pool
                .iter()
                .enumerate()
                .filter(|(_, a)| (b - **a).norm() <= self.tol)
                .min_by(|x, y| (b - x.1).norm().total_cmp(&(b - y.1).norm()))
                .map(|(i, _)| i);
            match hit {
                Some(i) => {
                    pool.swap_remove(i);
                }
                None => {
                    return Err(Error::NotContained(format!(
                        "{} is missing from {}",
                        fmt_value(b),
                        self
                    )))
                }
            }
        }
        Ok(EigMultiset::from_values(pool, self.tol))
    }

    pub fn scale(&self, s: Complex64) -> EigMultiset {
        EigMultiset::from_pairs(self.values.iter().map(|&(v, m)| (v * s, m)), self.tol)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.values
                .iter()
                .map(|(v, m)| serde_json::json!({"re": v.re, "im": v.im, "multiplicity": m}))
                .collect(),
        )
    }
}

fn fmt_value(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.9}")
    } else {
        format!("{re:.9}{}{:.9}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

impl fmt::Display for EigMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|&(v, m)| format!("({})^{}", fmt_value(v), m))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

pub fn eigen_multiset(m: &CMatrix, tol: f64) -> EigMultiset {
    EigMultiset::from_values(eigenvalues(m), tol)
}

/// The closed-form spectrum of `ρ_n(σ_1)`:
/// `{-tq²}{-q}^{n-2}{1}^{(n-1)(n-2)/2}`.
pub fn lk_generator_spectrum(n: usize, q: Complex64, t: Complex64) -> EigMultiset {
    let one = Complex64::new(1.0, 0.0);
    EigMultiset::from_pairs(
        [
            (-t * q * q, 1),
            (-q, n.saturating_sub(2)),
            (one, (n - 1) * n.saturating_sub(2) / 2),
        ],
        tol::MULTISET,
    )
}

/// `{λ_i λ_j : i ≤ j}`.
pub fn sym2_multiset(e: &EigMultiset) -> EigMultiset {
    let v = e.expanded();
    let mut out = Vec::with_capacity(v.len() * (v.len() + 1) / 2);
    for j in 0..v.len() {
        for i in 0..=j {
            out.push(v[i] * v[j]);
        }
    }
    EigMultiset::from_values(out, e.tol)
}

/// `{λ_i λ_j : i < j}`.
pub fn alt2_multiset(e: &EigMultiset) -> EigMultiset {
    let v = e.expanded();
    let mut out = Vec::new();
    for j in 0..v.len() {
        for i in 0..j {
            out.push(v[i] * v[j]);
        }
    }
    EigMultiset::from_values(out, e.tol)
}

/// `Ev ρ_n(β) = (Sym² Ev ψ_n(β) ∖ Sym² Ev ψ_k(β)) ∪ Ev ρ_k(β)` for `β ∈ B_k`,
/// computed from Burau spectra and `ρ_k` only.
pub fn lk_spectrum_via_recursion(
    n: usize,
    k: usize,
    word: &BraidWord,
    q: Complex64,
    t: Complex64,
    tol: f64,
) -> Result<EigMultiset> {
    if k < 2 || k > n {
        return Err(Error::OutOfRange {
            index: k as i64,
            lo: 2,
            hi: n as i64,
        });
    }
    if word.strands() != k {
        return Err(Error::StrandMismatch {
            left: word.strands(),
            right: k,
        });
    }
    let big = word.include(n, 0)?;
    let psi_n = NumericGenerators::new(RepKind::Burau, n, q, t)?.word(&big)?;
    let psi_k = NumericGenerators::new(RepKind::Burau, k, q, t)?.word(word)?;
    let rho_k = NumericGenerators::new(RepKind::Lk, k, q, t)?.word(word)?;
    let s_n = sym2_multiset(&eigen_multiset(&psi_n, tol));
    let s_k = sym2_multiset(&eigen_multiset(&psi_k, tol));
    let rest = s_n.difference(&s_k)?;
    Ok(rest.union(&eigen_multiset(&rho_k, tol)))
}

/// True iff the multiset is invariant under complex conjugation.
pub fn conjugation_closed(e: &EigMultiset) -> bool {
    e.values
        .iter()
        .all(|&(v, m)| e.multiplicity_of(v.conj()) == m)
}

/// Spectrum of `ρ'_n(σ_1) = μ ρ_n(σ_1)`.
pub fn normalized_generator_spectrum(n: usize, q: Complex64, t: Complex64) -> EigMultiset {
    lk_generator_spectrum(n, q, t).scale(su_scalar(n, q, t))
}

fn check_search_size(e: &EigMultiset) -> Result<()> {
    if e.total() > tol::SEARCH_MAX_DIM {
        return Err(Error::Invalid(format!(
            "exhaustive search limited to dimension {}, got {}",
            tol::SEARCH_MAX_DIM,
            e.total()
        )));
    }
    Ok(())
}

/// Count vector over the distinct values of `e`.
fn counts(e: &EigMultiset) -> Vec<usize> {
    e.values.iter().map(|(_, m)| *m).collect()
}

/// All sub-multisets of size `k` as count vectors bounded by `avail`.
fn sub_multisets(avail: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(avail: &[usize], pos: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == avail.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = avail[pos + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for take in lo..=avail[pos].min(left) {
            cur.push(take);
            rec(avail, pos + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(avail, 0, k, &mut Vec::with_capacity(avail.len()), &mut out);
    out
}

/// Remove `μ·B` from `remaining`; `None` if some product is missing.
fn take_products(
    e: &EigMultiset,
    remaining: &[usize],
    mu: Complex64,
    b: &[(Complex64, usize)],
) -> Option<Vec<usize>> {
    let mut rem = remaining.to_vec();
    for &(nu, m) in b {
        let idx = e.index_of(mu * nu)?;
        if rem[idx] < m {
            return None;
        }
        rem[idx] -= m;
    }
    Some(rem)
}

/// Search for `(M1, M2)` of sizes `(n1, n2)` whose pairwise products give `e`.
/// Factorizations are defined up to `M1 → sM1, M2 → s^{-1}M2`; the search
/// fixes the gauge by putting `1 ∈ M1`, which forces `M2 ⊂ e`, and returns
/// one representative per gauge class.
pub fn kronecker_factorizations(
    e: &EigMultiset,
    n1: usize,
    n2: usize,
) -> Result<Vec<(EigMultiset, EigMultiset)>> {
    if n1 < 2 || n2 < 2 || n1 * n2 != e.total() {
        return Err(Error::Dimension(format!(
            "{n1} x {n2} does not factor a multiset of size {}",
            e.total()
        )));
    }
    check_search_size(e)?;
    let avail = counts(e);
    let mut found: Vec<(EigMultiset, EigMultiset)> = Vec::new();
    for bvec in sub_multisets(&avail, n2) {
        let b: Vec<(Complex64, usize)> = bvec
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (e.values[i].0, c))
            .collect();
        let one = Complex64::new(1.0, 0.0);
        let Some(rem) = take_products(e, &avail, one, &b) else {
            continue;
        };
        let mut stack = vec![one];
        extend_factor(e, &b, rem, &mut stack, n1, &mut |m1| {
            let sol = (
                EigMultiset::from_values(m1.iter().copied(), e.tol),
                EigMultiset::from_pairs(b.iter().copied(), e.tol),
            );
            if !found.iter().any(|f| gauge_equivalent(f, &sol, e.tol)) {
                found.push(sol);
            }
        });
    }
    Ok(found)
}

fn extend_factor(
    e: &EigMultiset,
    b: &[(Complex64, usize)],
    remaining: Vec<usize>,
    m1: &mut Vec<Complex64>,
    n1: usize,
    emit: &mut dyn FnMut(&[Complex64]),
) {
    if m1.len() == n1 {
        if remaining.iter().all(|&c| c == 0) {
            emit(m1);
        }
        return;
    }
    // the first uncovered value must be μ·ν for some new μ and ν ∈ B
    let Some(first) = remaining.iter().position(|&c| c > 0) else {
        return;
    };
    let x = e.values[first].0;
    let mut tried: Vec<Complex64> = Vec::new();
    for &(nu, _) in b {
        let mu = x / nu;
        if tried.iter().any(|t| (t - mu).norm() <= e.tol) {
            continue;
        }
        tried.push(mu);
        if let Some(rem) = take_products(e, &remaining, mu, b) {
            m1.push(mu);
            extend_factor(e, b, rem, m1, n1, emit);
            m1.pop();
        }
    }
}

fn gauge_equivalent(a: &(EigMultiset, EigMultiset), b: &(EigMultiset, EigMultiset), tol: f64) -> bool {
    let a1 = a.0.expanded();
    let b1 = b.0.expanded();
    let Some(&b0) = b1.first() else {
        return a1.is_empty();
    };
    // s with a.0 = s·b.0 must map b0 onto some element of a.0
    a1.iter().any(|&x| {
        let s = x / b0;
        b.0.scale(s).approx_eq(&a.0, tol) && b.1.scale(s.inv()).approx_eq(&a.1, tol)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareMode {
    Sym,
    Alt,
}

impl std::str::FromStr for SquareMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(SquareMode::Sym),
            "alt" => Ok(SquareMode::Alt),
            o => Err(Error::Invalid(format!("unknown mode `{o}`"))),
        }
    }
}

fn triangular_root(total: usize, mode: SquareMode) -> Option<usize> {
    (0..=64).find(|&m| match mode {
        SquareMode::Sym => m * (m + 1) / 2 == total,
        SquareMode::Alt => m * m.saturating_sub(1) / 2 == total,
    })
}

/// All `Λ` with `Sym² Λ = e` (or `Λ² Λ = e`). Candidate elements are the
/// square roots of values in `e` for `Sym`, and `±√(xy/z)` for `x, y, z ∈ e`
/// in `Alt` mode (since `λ_1² = (λ_1λ_2)(λ_1λ_3)/(λ_2λ_3)`).
pub fn square_root_multisets(e: &EigMultiset, mode: SquareMode) -> Result<Vec<EigMultiset>> {
    check_search_size(e)?;
    let m = triangular_root(e.total(), mode).ok_or_else(|| {
        Error::Dimension(format!("{} is not a triangular number for {mode:?}", e.total()))
    })?;
    if mode == SquareMode::Alt && m < 3 {
        return Err(Error::Invalid(
            "alternating square roots of size < 3 are not determined by the spectrum".into(),
        ));
    }
    let vals: Vec<Complex64> = e.values.iter().map(|(v, _)| *v).collect();
    let mut raw = Vec::new();
    match mode {
        SquareMode::Sym => {
            for &x in &vals {
                raw.push(x.sqrt());
            }
        }
        SquareMode::Alt => {
            for &x in &vals {
                for &y in &vals {
                    for &z in &vals {
                        raw.push((x * y / z).sqrt());
                    }
                }
            }
        }
    }
    let mut cands: Vec<Complex64> = Vec::new();
    for r in raw {
        for c in [r, -r] {
            if !cands.iter().any(|d| (d - c).norm() <= e.tol) {
                cands.push(c);
            }
        }
    }
    cands.sort_by(lex);
    let mut out: Vec<EigMultiset> = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    root_search(e, mode, &cands, 0, counts(e), &mut chosen, m, &mut |lam| {
        let ms = EigMultiset::from_values(lam.iter().copied(), e.tol);
        if !out.iter().any(|o| o.approx_eq(&ms, e.tol)) {
            out.push(ms);
        }
    });
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn root_search(
    e: &EigMultiset,
    mode: SquareMode,
    cands: &[Complex64],
    start: usize,
    remaining: Vec<usize>,
    chosen: &mut Vec<Complex64>,
    m: usize,
    emit: &mut dyn FnMut(&[Complex64]),
) {
    if chosen.len() == m {
        if remaining.iter().all(|&c| c == 0) {
            emit(chosen);
        }
        return;
    }
    'next: for (ci, &lam) in cands.iter().enumerate().skip(start) {
        let mut rem = remaining.clone();
        let mut needed: Vec<Complex64> = chosen.iter().map(|&x| x * lam).collect();
        if mode == SquareMode::Sym {
            needed.push(lam * lam);
        }
        for v in needed {
            match e.index_of(v) {
                Some(i) if rem[i] > 0 => rem[i] -= 1,
                _ => continue 'next,
            }
        }
        chosen.push(lam);
        root_search(e, mode, cands, ci, rem, chosen, m, emit);
        chosen.pop();
    }
}

/// Dimension of `{X : X A_i = A_i X ∀ i}`, numerically. Irreducible iff 1.
pub fn commutant_dimension(generators: &[CMatrix]) -> Result<usize> {
    let Some(first) = generators.first() else {
        return Err(Error::Invalid("no generators".into()));
    };
    let d = first.nrows();
    if generators.iter().any(|g| g.nrows() != d || g.ncols() != d) {
        return Err(Error::Dimension("generators must be square of equal size".into()));
    }
    let dd = d * d;
    let mut sys = DMatrix::<Complex64>::zeros(dd * generators.len(), dd);
    // unknown X_{ab} at column a + d*b (column-major vec)
    for (g, a) in generators.iter().enumerate() {
        let off = g * dd;
        for r in 0..d {
            for c in 0..d {
                let row = off + r + d * c;
                // (XA)_{rc} = Σ_k X_{rk} A_{kc}
                for k in 0..d {
                    sys[(row, r + d * k)] += a[(k, c)];
                    // (AX)_{rc} = Σ_k A_{rk} X_{kc}
                    sys[(row, k + d * c)] -= a[(r, k)];
                }
            }
        }
    }
    Ok(null_space(&sys, tol::NULLSPACE_REL).dim)
}

/// Whether the coordinate subspace spanned by `indices` is invariant under
/// every generator, to `tol`.
pub fn coordinate_subspace_invariant(generators: &[CMatrix], indices: &[usize], tol: f64) -> bool {
    generators.iter().all(|g| {
        indices.iter().all(|&c| {
            (0..g.nrows())
                .filter(|r| !indices.contains(r))
                .all(|r| g[(r, c)].norm() <= tol)
        })
    })
}

/// Joint eigenvalue arguments of `ρ'_n(β_{n,2}), …, ρ'_n(β_{n,n-1})`, one row
/// per distinct joint eigenvalue. The matrices commute, so the Schur basis of a
/// generic combination triangularizes all of them at once.
pub fn twist_joint_phases(n: usize, q: Complex64, t: Complex64) -> Result<Vec<Vec<f64>>> {
    if n < 3 {
        return Err(Error::OutOfRange {
            index: n as i64,
            lo: 3,
            hi: i64::MAX,
        });
    }
    let gens = NumericGenerators::new(RepKind::Lk, n, q, t)?;
    let mu = su_scalar(n, q, t);
    let mut mats = Vec::new();
    for k in 2..n {
        let w = full_twist(n, k)?;
        mats.push(gens.word(&w)? * mu.powi(w.exponent_sum() as i32));
    }
    let p = gens.dim();
    let mut comb = CMatrix::zeros(p, p);
    for (i, m) in mats.iter().enumerate() {
        comb += m * Complex64::new(1.0 + (i as f64 + 2.0).sqrt(), 0.3 * i as f64 + 0.1);
    }
    let (basis, _) = comb.schur().unpack();
    let tri: Vec<CMatrix> = mats.iter().map(|m| basis.adjoint() * m * &basis).collect();
    for d in &tri {
        for r in 0..p {
            for c in 0..r {
                if d[(r, c)].norm() > 1e-7 {
                    return Err(Error::Invalid("twist images are not simultaneously triangular".into()));
                }
            }
        }
    }
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for j in 0..p {
        let row: Vec<Complex64> = tri.iter().map(|d| d[(j, j)]).collect();
        let seen = rows
            .iter()
            .any(|r| r.iter().zip(&row).all(|(a, b)| (a - b).norm() <= 1e-8));
        if !seen {
            rows.push(row);
        }
    }
    Ok(rows
        .into_iter()
        .map(|r| r.into_iter().map(|z| z.arg()).collect())
        .collect())
}

/// A nonzero `c ∈ Z^r`, `|c_i| ≤ height`, with `Σ_i c_i rows[i][k] ∈ 2πZ`
/// (to `tol`) for every column `k`; `None` if there is none that small.
pub fn integer_relation(rows: &[Vec<f64>], height: i64, tol: f64) -> Option<Vec<i64>> {
    let two_pi = std::f64::consts::TAU;
    let r = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut c = vec![-height; r];
    loop {
        if c.iter().any(|&x| x != 0) {
            let hit = (0..cols).all(|k| {
                let s: f64 = c.iter().zip(rows).map(|(&a, row)| a as f64 * row[k]).sum();
                (s - two_pi * (s / two_pi).round()).abs() <= tol
            });
            if hit {
                return Some(c);
            }
        }
        let mut i = 0;
        loop {
            if i == r {
                return None;
            }
            if c[i] < height {
                c[i] += 1;
                break;
            }
            c[i] = -height;
            i += 1;
        }
    }
}

/// Indices of `n - 2` joint eigenvalue coordinates of the twist subgroup with
/// no integer relation up to `height`. Their existence means the closure of
/// the subgroup projects onto an `(n-2)`-torus.
pub fn torus_rank_witness(
    n: usize,
    q: Complex64,
    t: Complex64,
    height: i64,
    tol: f64,
) -> Result<Option<Vec<usize>>> {
    let rows = twist_joint_phases(n, q, t)?;
    let want = n - 2;
    let mut pick: Vec<usize> = (0..want).collect();
    if rows.len() < want {
        return Ok(None);
    }
    loop {
        let sub: Vec<Vec<f64>> = pick.iter().map(|&i| rows[i].clone()).collect();
        if integer_relation(&sub, height, tol).is_none() {
            return Ok(Some(pick));
        }
        // next combination in lexicographic order
        let mut i = want;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if pick[i] < rows.len() - want + i {
                pick[i] += 1;
                for j in i + 1..want {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}
