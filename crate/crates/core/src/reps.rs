//! The reduced Burau representation `ψ_n`, the Lawrence-Krammer
//! representation `ρ_n` and the permutation representation `π_n`, as exact
//! matrices over `Z[q^{±1}, t^{±1}]`.
//!
//! Convention: matrix columns are the images of basis vectors, and a word
//! `σ_{i_1} … σ_{i_k}` maps to the ordered product of its letter matrices.
//! With this convention `ρ_n(w)` for `w ∈ B_k ⊂ B_n` is block upper
//! triangular in [`PairBasis`] order, the top-left block being `ρ_k(w)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::matrix::PolyMatrix;
use crate::numeric::{principal_pow, CMatrix};

/// The basis `{v_{i,j} : 1 ≤ i < j ≤ n}` ordered by `j`, then `i`, so that
/// `E_k = {v_{i,j} : j ≤ k}` is always a prefix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairBasis {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PairBasis {
    pub fn new(n: usize) -> Self {
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 2..=n {
            for i in 1..j {
                pairs.push((i, j));
            }
        }
        Self { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// Position of `v_{i,j}`, `i < j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.n);
        (j - 1) * (j - 2) / 2 + (i - 1)
    }

    /// Size of the `E_k` prefix.
    pub fn prefix_len(k: usize) -> usize {
        k * k.saturating_sub(1) / 2
    }
}

/// How the rows and columns of a representation matrix are labeled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Basis {
    /// `v_{i,j}` in [`PairBasis`] order.
    Pairs { n: usize },
    /// `e_1 … e_d`.
    Standard { dim: usize },
    /// `e_i ⊙ e_j`, `i ≤ j`, ordered by `j` then `i`.
    Sym2 { base_dim: usize },
    /// `e_i ∧ e_j`, `i < j`, ordered by `j` then `i`.
    Alt2 { base_dim: usize },
    /// `e_i - e_{i+1}`, `i = 1 … n-1`, in `C^n`.
    PermQuotient { n: usize },
}

impl Basis {
    pub fn dim(&self) -> usize {
        match *self {
            Basis::Pairs { n } => n * n.saturating_sub(1) / 2,
            Basis::Standard { dim } => dim,
            Basis::Sym2 { base_dim } => base_dim * (base_dim + 1) / 2,
            Basis::Alt2 { base_dim } => base_dim * base_dim.saturating_sub(1) / 2,
            Basis::PermQuotient { n } => n.saturating_sub(1),
        }
    }

    /// Human-readable labels of the basis vectors.
    pub fn labels(&self) -> Vec<String> {
        match *self {
            Basis::Pairs { n } => PairBasis::new(n)
                .pairs()
                .iter()
                .map(|(i, j)| format!("v{i},{j}"))
                .collect(),
            Basis::Standard { dim } => (1..=dim).map(|i| format!("e{i}")).collect(),
            Basis::Sym2 { base_dim } => square_pairs(base_dim, true)
                .iter()
                .map(|(i, j)| format!("e{}.e{}", i + 1, j + 1))
                .collect(),
            Basis::Alt2 { base_dim } => square_pairs(base_dim, false)
                .iter()
                .map(|(i, j)| format!("e{}^e{}", i + 1, j + 1))
                .collect(),
            Basis::PermQuotient { n } => (1..n).map(|i| format!("e{}-e{}", i, i + 1)).collect(),
        }
    }
}

/// A representation matrix together with its basis.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix<M> {
    pub basis: Basis,
    pub matrix: M,
}

pub type ExactRep = RepMatrix<PolyMatrix>;
pub type NumericRep = RepMatrix<CMatrix>;

impl ExactRep {
    pub fn eval(&self, q: Complex64, t: Complex64) -> Result<NumericRep> {
        Ok(RepMatrix {
            basis: self.basis.clone(),
            matrix: self.matrix.eval(q, t)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Burau,
    Lk,
    Perm,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Burau => "burau",
            RepKind::Lk => "lk",
            RepKind::Perm => "perm",
        })
    }
}

impl std::str::FromStr for RepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "burau" => Ok(RepKind::Burau),
            "lk" => Ok(RepKind::Lk),
            "perm" => Ok(RepKind::Perm),
            other => Err(Error::Invalid(format!("unknown representation `{other}`"))),
        }
    }
}

impl RepKind {
    pub fn dim(&self, n: usize) -> usize {
        self.basis(n).dim()
    }

    pub fn basis(&self, n: usize) -> Basis {
        match self {
            RepKind::Burau => Basis::Standard { dim: n - 1 },
            RepKind::Lk => Basis::Pairs { n },
            RepKind::Perm => Basis::PermQuotient { n },
        }
    }
}

fn check_gen(n: usize, i: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            index: n as i64,
            lo: 2,
            hi: i64::MAX,
        });
    }
    if i == 0 || i >= n {
        return Err(Error::OutOfRange {
            index: i as i64,
            lo: 1,
            hi: n as i64 - 1,
        });
    }
    Ok(())
}

/// `ψ_n(σ_i)`: identity except column `i`, which holds `-q` at rows `i-1`
/// and `i` and `-1` at row `i+1` (rows that exist).
pub fn burau_gen(n: usize, i: usize) -> Result<ExactRep> {
    check_gen(n, i)?;
    let d = n - 1;
    let mut m = PolyMatrix::identity(d);
    let col = i - 1;
    let mq = -LaurentPoly2::q();
    if col >= 1 {
        m[(col - 1, col)] = mq.clone();
    }
    m[(col, col)] = mq;
    if col + 1 < d {
        m[(col + 1, col)] = LaurentPoly2::constant(-1);
    }
    Ok(RepMatrix {
        basis: Basis::Standard { dim: d },
        matrix: m,
    })
}

/// `ρ_n(σ_i)` on the basis `v_{j,k}`.
pub fn lk_gen(n: usize, i: usize) -> Result<ExactRep> {
    check_gen(n, i)?;
    let basis = PairBasis::new(n);
    let p = basis.dim();
    let mut m = PolyMatrix::zeros(p, p);
    let q = LaurentPoly2::q();
    let t = LaurentPoly2::t();
    let one = LaurentPoly2::one();
    let q2_q = &(&q * &q) - &q;
    let one_q = &one - &q;
    for &(j, k) in basis.pairs() {
        let col = basis.index(j, k);
        let mut put = |a: usize, b: usize, v: LaurentPoly2| {
            let r = basis.index(a, b);
            m[(r, col)] += v;
        };
        if i + 1 == j {
            put(i, k, q.clone());
            put(i, j, q2_q.clone());
            put(j, k, one_q.clone());
        } else if i == j && i + 1 != k {
            put(j + 1, k, one.clone());
        } else if i + 1 == k && i != j {
            put(j, i, q.clone());
            put(j, k, one_q.clone());
            put(i, k, -(&q2_q * &t));
        } else if i == k {
            put(j, k + 1, one.clone());
        } else if i == j && i + 1 == k {
            put(j, k, -(&t * &(&q * &q)));
        } else {
            put(j, k, one.clone());
        }
    }
    Ok(RepMatrix {
        basis: Basis::Pairs { n },
        matrix: m,
    })
}

/// `π_n(σ_i)` on the basis `f_j = e_j - e_{j+1}` of the quotient of `C^n`
/// by the all-ones vector. The transposition `(i i+1)` sends `f_i ↦ -f_i`,
/// `f_{i-1} ↦ f_{i-1} + f_i`, `f_{i+1} ↦ f_i + f_{i+1}`.
pub fn perm_gen(n: usize, i: usize) -> Result<ExactRep> {
    check_gen(n, i)?;
    let d = n - 1;
    let mut m = PolyMatrix::identity(d);
    let c = i - 1;
    m[(c, c)] = LaurentPoly2::constant(-1);
    if c >= 1 {
        m[(c, c - 1)] = LaurentPoly2::one();
    }
    if c + 1 < d {
        m[(c, c + 1)] = LaurentPoly2::one();
    }
    Ok(RepMatrix {
        basis: Basis::PermQuotient { n },
        matrix: m,
    })
}

type GeneratorCache = HashMap<(RepKind, usize), Arc<Generators>>;

/// Generator matrices and their exact inverses for one `(kind, n)`.
#[derive(Debug)]
pub struct Generators {
    pub kind: RepKind,
    pub n: usize,
    pub gens: Vec<PolyMatrix>,
    pub invs: Vec<PolyMatrix>,
}

impl Generators {
    fn build(kind: RepKind, n: usize) -> Result<Self> {
        let mut gens = Vec::with_capacity(n - 1);
        let mut invs = Vec::with_capacity(n - 1);
        for i in 1..n {
            let g = match kind {
                RepKind::Burau => burau_gen(n, i)?,
                RepKind::Lk => lk_gen(n, i)?,
                RepKind::Perm => perm_gen(n, i)?,
            }
            .matrix;
            let inv = g.inverse()?;
            if !(&g * &inv).is_identity() {
                return Err(Error::NotInvertible(format!("{kind} generator {i}")));
            }
            gens.push(g);
            invs.push(inv);
        }
        Ok(Self {
            kind,
            n,
            gens,
            invs,
        })
    }

    /// Cached generators for `(kind, n)`.
    pub fn get(kind: RepKind, n: usize) -> Result<Arc<Generators>> {
        static CACHE: OnceLock<Mutex<GeneratorCache>> = OnceLock::new();
        if n < 2 {
            return Err(Error::OutOfRange {
                index: n as i64,
                lo: 2,
                hi: i64::MAX,
            });
        }
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(g) = cache.lock().expect("cache poisoned").get(&(kind, n)) {
            return Ok(g.clone());
        }
        let g = Arc::new(Self::build(kind, n)?);
        cache
            .lock()
            .expect("cache poisoned")
            .insert((kind, n), g.clone());
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.kind.dim(self.n)
    }

    pub fn letter(&self, index: usize, inverse: bool) -> &PolyMatrix {
        if inverse {
            &self.invs[index - 1]
        } else {
            &self.gens[index - 1]
        }
    }

    pub fn word(&self, word: &BraidWord) -> Result<PolyMatrix> {
        if word.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: word.strands(),
                right: self.n,
            });
        }
        let mut acc = PolyMatrix::identity(self.dim());
        for l in word.letters() {
            acc = acc.checked_mul(self.letter(l.index, l.inverse))?;
        }
        Ok(acc)
    }

    /// Numeric generator matrices at `(q, t)`.
    pub fn at(&self, q: Complex64, t: Complex64) -> Result<NumericGenerators> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.eval(q, t))
            .collect::<Result<Vec<_>>>()?;
        let invs = self
            .invs
            .iter()
            .map(|g| g.eval(q, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(NumericGenerators {
            kind: self.kind,
            n: self.n,
            q,
            t,
            gens,
            invs,
        })
    }
}

/// Generators evaluated at a numeric point.
#[derive(Debug, Clone)]
pub struct NumericGenerators {
    pub kind: RepKind,
    pub n: usize,
    pub q: Complex64,
    pub t: Complex64,
    pub gens: Vec<CMatrix>,
    pub invs: Vec<CMatrix>,
}

impl NumericGenerators {
    pub fn new(kind: RepKind, n: usize, q: Complex64, t: Complex64) -> Result<Self> {
        Generators::get(kind, n)?.at(q, t)
    }

    pub fn dim(&self) -> usize {
        self.kind.dim(self.n)
    }

    pub fn word(&self, word: &BraidWord) -> Result<CMatrix> {
        if word.strands() != self.n {
            return Err(Error::StrandMismatch {
                left: word.strands(),
                right: self.n,
            });
        }
        let d = self.dim();
        let mut acc = CMatrix::identity(d, d);
        for l in word.letters() {
            let g = if l.inverse {
                &self.invs[l.index - 1]
            } else {
                &self.gens[l.index - 1]
            };
            acc *= g;
        }
        Ok(acc)
    }
}

/// Exact image of a braid word.
pub fn rep_of_word(kind: RepKind, word: &BraidWord) -> Result<ExactRep> {
    let g = Generators::get(kind, word.strands())?;
    Ok(RepMatrix {
        basis: kind.basis(word.strands()),
        matrix: g.word(word)?,
    })
}

/// Numeric image of a braid word at `(q, t)`.
pub fn rep_of_word_at(kind: RepKind, word: &BraidWord, q: Complex64, t: Complex64) -> Result<NumericRep> {
    let g = NumericGenerators::new(kind, word.strands(), q, t)?;
    Ok(RepMatrix {
        basis: kind.basis(word.strands()),
        matrix: g.word(word)?,
    })
}

pub fn perm_rep(word: &BraidWord) -> Result<ExactRep> {
    rep_of_word(RepKind::Perm, word)
}

/// `(i, j)` pairs (0-based) of the symmetric (`i ≤ j`) or alternating
/// (`i < j`) square basis, ordered by `j` then `i`.
pub fn square_pairs(d: usize, symmetric: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 0..d {
        let top = if symmetric { j + 1 } else { j };
        for i in 0..top {
            out.push((i, j));
        }
    }
    out
}

/// Induced operator on `Sym²` (or `Λ²`) given entry access for `M`.
/// `(Me_i)⊙(Me_j) = Σ_{a,b} M_{ai} M_{bj} e_a⊙e_b`, and `e_b⊙e_a = e_a⊙e_b`,
/// `e_b∧e_a = -e_a∧e_b`.
fn square_entries<T>(d: usize, symmetric: bool, get: impl Fn(usize, usize) -> T) -> (usize, Vec<T>)
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    let pairs = square_pairs(d, symmetric);
    let m = pairs.len();
    let mut out = Vec::with_capacity(m * m);
    for &(a, b) in &pairs {
        for &(i, j) in &pairs {
            let direct = get(a, i) * get(b, j);
            let v = if a == b {
                direct
            } else if symmetric {
                direct + get(b, i) * get(a, j)
            } else {
                direct - get(b, i) * get(a, j)
            };
            out.push(v);
        }
    }
    (m, out)
}

pub trait SquareFunctor: Sized {
    fn sym_square(&self) -> Self;
    fn alt_square(&self) -> Self;
}

impl SquareFunctor for PolyMatrix {
    fn sym_square(&self) -> Self {
        let (m, e) = square_entries(self.nrows(), true, |r, c| self[(r, c)].clone());
        PolyMatrix::from_fn(m, m, |r, c| e[r * m + c].clone())
    }

    fn alt_square(&self) -> Self {
        let (m, e) = square_entries(self.nrows(), false, |r, c| self[(r, c)].clone());
        PolyMatrix::from_fn(m, m, |r, c| e[r * m + c].clone())
    }
}

impl SquareFunctor for CMatrix {
    fn sym_square(&self) -> Self {
        let (m, e) = square_entries(self.nrows(), true, |r, c| self[(r, c)]);
        CMatrix::from_fn(m, m, |r, c| e[r * m + c])
    }

    fn alt_square(&self) -> Self {
        let (m, e) = square_entries(self.nrows(), false, |r, c| self[(r, c)]);
        CMatrix::from_fn(m, m, |r, c| e[r * m + c])
    }
}

impl<M: SquareFunctor> RepMatrix<M> {
    pub fn sym_square(&self) -> Self {
        RepMatrix {
            basis: Basis::Sym2 {
                base_dim: self.basis.dim(),
            },
            matrix: self.matrix.sym_square(),
        }
    }

    pub fn alt_square(&self) -> Self {
        RepMatrix {
            basis: Basis::Alt2 {
                base_dim: self.basis.dim(),
            },
            matrix: self.matrix.alt_square(),
        }
    }
}

/// `det ρ_n(σ_i) = -t(-q)^n`, numerically.
pub fn lk_generator_det(n: usize, q: Complex64, t: Complex64) -> Complex64 {
    -t * (-q).powi(n as i32)
}

/// `μ = det(ρ_n(σ_1))^{-2/(n(n-1))}` on the principal branch.
pub fn su_scalar(n: usize, q: Complex64, t: Complex64) -> Complex64 {
    let e = -2.0 / (n * (n - 1)) as f64;
    principal_pow(lk_generator_det(n, q, t), e)
}

/// `ρ'(β) = μ^{[β]} ρ_n(β)`, which has determinant 1.
pub fn normalize_su(m: &NumericRep, word_exponent: i64, n: usize, q: Complex64, t: Complex64) -> NumericRep {
    let mu = su_scalar(n, q, t);
    RepMatrix {
        basis: m.basis.clone(),
        matrix: m.matrix.map(|z| z * mu.powi(word_exponent as i32)),
    }
}

/// A scale factor `c · q^s` on one basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialScale {
    pub coeff: BigRational,
    pub q_shift: i32,
}

impl fmt::Display for MonomialScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q_shift {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{} q", self.coeff),
            s => write!(f, "{} q^{}", self.coeff, s),
        }
    }
}

/// Outcome of comparing `ρ_n|_{t=-1}` with `Sym² ψ_n` on one word.
#[derive(Debug, Clone)]
pub struct Sym2Comparison {
    pub n: usize,
    pub word: BraidWord,
    pub charpoly_equal: bool,
    /// `ρ_n|_{t=-1}` equals `Sym² ψ_n` entrywise under `v_{i,j} ↔ e_i⊙e_{j-1}`.
    pub identical: bool,
    /// Diagonal `D` with `D ρ D^{-1} = Sym² ψ`, when one exists.
    pub diagonal: Option<Vec<MonomialScale>>,
}

/// `Some((c, s))` with `b = c q^s a`, for `q`-only polynomials.
fn proportional(a: &LaurentPoly2, b: &LaurentPoly2) -> Option<(BigRational, i32)> {
    let (ca, qa, _) = a.terms().next().map(|(m, c)| (c.clone(), m.0, m.1))?;
    let (cb, qb, _) = b.terms().next().map(|(m, c)| (c.clone(), m.0, m.1))?;
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let ratio = BigRational::new(cb, ca);
    let shift = qb - qa;
    for ((ma, va), (mb, vb)) in a.terms().zip(b.terms()) {
        if ma.0 + shift != mb.0 || ma.1 != mb.1 {
            return None;
        }
        if BigRational::from_integer(vb.clone()) != &ratio * BigRational::from_integer(va.clone()) {
            return None;
        }
    }
    Some((ratio, shift))
}

/// Search for `D = diag(d)` with `d_r A_rc / d_c = B_rc` for all entries.
fn diagonal_conjugator(a: &PolyMatrix, b: &PolyMatrix) -> Option<Vec<MonomialScale>> {
    let n = a.nrows();
    let mut scale: Vec<Option<(BigRational, i32)>> = vec![None; n];
    for root in 0..n {
        if scale[root].is_some() {
            continue;
        }
        scale[root] = Some((BigRational::one(), 0));
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            let (sx, hx) = scale[x].clone().expect("visited");
            for y in 0..n {
                // entries (x, y) and (y, x) both link x and y
                for &(r, c) in &[(x, y), (y, x)] {
                    let (ea, eb) = (&a[(r, c)], &b[(r, c)]);
                    if ea.is_zero() != eb.is_zero() {
                        return None;
                    }
                    if ea.is_zero() || r == c {
                        continue;
                    }
                    // d_r / d_c = ratio
                    let (ratio, shift) = proportional(ea, eb)?;
                    let want = if r == x {
                        // d_y = d_x / ratio
                        (&sx / &ratio, hx - shift)
                    } else {
                        (&sx * &ratio, hx + shift)
                    };
                    match &scale[y] {
                        None => {
                            scale[y] = Some(want);
                            stack.push(y);
                        }
                        Some(s) if *s != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    // diagonal entries must agree exactly
    for i in 0..n {
        if a[(i, i)] != b[(i, i)] {
            return None;
        }
    }
    Some(
        scale
            .into_iter()
            .map(|s| {
                let (coeff, q_shift) = s.expect("all visited");
                MonomialScale { coeff, q_shift }
            })
            .collect(),
    )
}

/// Compare `ρ_n(word)` at `t = -1` with `Sym² ψ_n(word)`, both exact in `q`.
pub fn lk_vs_sym2_burau(n: usize, word: &BraidWord) -> Result<Sym2Comparison> {
    if n < 2 || word.strands() != n {
        return Err(Error::StrandMismatch {
            left: word.strands(),
            right: n,
        });
    }
    let lk = rep_of_word(RepKind::Lk, word)?.matrix.substitute_t(-1)?;
    let sym = rep_of_word(RepKind::Burau, word)?.matrix.sym_square();
    let charpoly_equal = lk.charpoly()? == sym.charpoly()?;
    let identical = lk == sym;
    let diagonal = if identical {
        Some(
            (0..lk.nrows())
                .map(|_| MonomialScale {
                    coeff: BigRational::one(),
                    q_shift: 0,
                })
                .collect(),
        )
    } else {
        diagonal_conjugator(&lk, &sym)
    };
    Ok(Sym2Comparison {
        n,
        word: word.clone(),
        charpoly_equal,
        identical,
        diagonal,
    })
}

/// Apply a diagonal rescaling `D A D^{-1}` exactly (used to verify the
/// conjugator returned by [`lk_vs_sym2_burau`]).
pub fn conjugate_by_diagonal(a: &PolyMatrix, d: &[MonomialScale]) -> Option<PolyMatrix> {
    let mut out = PolyMatrix::zeros(a.nrows(), a.ncols());
    for r in 0..a.nrows() {
        for c in 0..a.ncols() {
            let e = &a[(r, c)];
            if e.is_zero() {
                continue;
            }
            let ratio = &d[r].coeff / &d[c].coeff;
            if !ratio.is_integer() {
                // only integral rescalings are representable exactly here
                let num = ratio.numer().clone();
                let den = ratio.denom().clone();
                let scaled = e.scale(&num);
                let mut ok = true;
                let terms: Vec<_> = scaled
                    .terms()
                    .map(|(&(dq, dt), v)| {
                        if (v % &den) != BigInt::zero() {
                            ok = false;
                        }
                        ((dq, dt), v / &den)
                    })
                    .collect();
                if !ok {
                    return None;
                }
                out[(r, c)] = LaurentPoly2::from_terms(terms).shift(d[r].q_shift - d[c].q_shift, 0);
            } else {
                out[(r, c)] = e.scale(&ratio.to_integer()).shift(d[r].q_shift - d[c].q_shift, 0);
            }
        }
    }
    Some(out)
}

/// One braid relation and whether it holds exactly.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// Every relation `σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}` and `σ_iσ_j = σ_jσ_i`
/// (`|i-j| ≥ 2`), checked as exact polynomial identities.
pub fn check_braid_relations(kind: RepKind, n: usize) -> Result<Vec<RelationCheck>> {
    let g = Generators::get(kind, n)?;
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            let (a, b) = (&g.gens[i - 1], &g.gens[j - 1]);
            if j == i + 1 {
                out.push(RelationCheck {
                    relation: format!("s{i} s{j} s{i} = s{j} s{i} s{j}"),
                    holds: &(a * b) * a == &(b * a) * b,
                });
            } else {
                out.push(RelationCheck {
                    relation: format!("s{i} s{j} = s{j} s{i}"),
                    holds: a * b == b * a,
                });
            }
        }
    }
    Ok(out)
}

/// Whether `ρ_n(word)|_{t=-1}` and `Sym² ψ_n(word)` have the same
/// characteristic polynomial.
pub fn sym2_charpoly_agrees(n: usize, word: &BraidWord) -> Result<bool> {
    if word.strands() != n {
        return Err(Error::StrandMismatch {
            left: word.strands(),
            right: n,
        });
    }
    let lk = rep_of_word(RepKind::Lk, word)?.matrix.substitute_t(-1)?;
    let sym = rep_of_word(RepKind::Burau, word)?.matrix.sym_square();
    Ok(lk.charpoly()? == sym.charpoly()?)
}
