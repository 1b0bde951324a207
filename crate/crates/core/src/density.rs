//! Stabilized traces over conjugacy classes, restricted-representation
//! checks and irreducibility probes for subgroups.

use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::forms::{invariant_form, is_definite, HermitianForm};
use crate::numeric::{null_space, trace, CMatrix};
use crate::reps::{NumericGenerators, PairBasis, RepKind};
use crate::spectra::{commutant_dimension, eigen_multiset, EigMultiset};
use crate::tol;

pub const CONFIG_SCHEMA_VERSION: u32 = 1;

/// Run description, read from and written to JSON.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    /// Signed generator indices of a braid on `n - 1` strands, e.g. `"1 2 3"`.
    pub base_braid: String,
    pub n: usize,
    /// `[re, im]`
    pub q: [f64; 2],
    /// `[re, im]`
    pub t: [f64; 2],
    pub samples: usize,
    pub conjugator_length: usize,
    pub rng_seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
}

impl ExperimentConfig {
    pub fn q(&self) -> Complex64 {
        Complex64::new(self.q[0], self.q[1])
    }

    pub fn t(&self) -> Complex64 {
        Complex64::new(self.t[0], self.t[1])
    }

    pub fn base(&self) -> Result<BraidWord> {
        parse_braid(&self.base_braid, self.n - 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != CONFIG_SCHEMA_VERSION {
            return Err(Error::Invalid(format!(
                "unsupported schema_version {} (expected {CONFIG_SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        if self.n < 3 {
            return Err(Error::OutOfRange {
                index: self.n as i64,
                lo: 3,
                hi: i64::MAX,
            });
        }
        if self.samples == 0 || self.conjugator_length == 0 {
            return Err(Error::Invalid("samples and conjugator_length must be at least 1".into()));
        }
        self.base()?;
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[derive(Debug, Clone)]
pub struct TraceSample {
    pub conjugator: BraidWord,
    pub trace: Complex64,
    pub modulus: f64,
    pub argument: f64,
}

/// A uniformly random word of `length` signed generators of `B_strands`.
pub fn random_word<R: Rng>(strands: usize, length: usize, rng: &mut R) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands);
    }
    let letters: Vec<Letter> = (0..length)
        .map(|_| {
            let i = rng.gen_range(1..strands);
            if rng.gen_bool(0.5) {
                Letter::pos(i)
            } else {
                Letter::neg(i)
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("indices drawn in range")
}

/// `α β α^{-1}` for a random `α` of the given length; returns `(α, αβα^{-1})`.
pub fn random_conjugate<R: Rng>(base: &BraidWord, length: usize, rng: &mut R) -> (BraidWord, BraidWord) {
    let alpha = random_word(base.strands(), length, rng);
    let conj = alpha
        .compose(base)
        .and_then(|w| w.compose(&alpha.invert()))
        .expect("same strand count");
    (alpha, conj)
}

/// `tr ρ_n(β' σ_{n-1})` with `β'` included into `B_n`.
pub fn stabilized_trace_with(gens: &NumericGenerators, n: usize, conj: &BraidWord) -> Result<Complex64> {
    if conj.strands() + 1 != n {
        return Err(Error::StrandMismatch {
            left: conj.strands(),
            right: n - 1,
        });
    }
    let w = conj
        .include(n, 0)?
        .compose(&BraidWord::from_signed(n, &[n as i64 - 1])?)?;
    Ok(trace(&gens.word(&w)?))
}

pub fn stabilized_trace(
    conjugator: &BraidWord,
    conj: &BraidWord,
    n: usize,
    q: Complex64,
    t: Complex64,
) -> Result<TraceSample> {
    let gens = NumericGenerators::new(RepKind::Lk, n, q, t)?;
    let tr = stabilized_trace_with(&gens, n, conj)?;
    Ok(TraceSample {
        conjugator: conjugator.clone(),
        trace: tr,
        modulus: tr.norm(),
        argument: tr.arg(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub distinct_count: usize,
    pub tol: f64,
    pub min_mod: f64,
    pub max_mod: f64,
    pub min_arg: f64,
    pub max_arg: f64,
    pub config: ExperimentConfig,
}

#[derive(Debug, Clone)]
pub struct ExperimentRun {
    pub samples: Vec<TraceSample>,
    pub report: ExperimentReport,
}

/// Number of values pairwise more than `tol` apart after greedy clustering.
pub fn distinct_count(values: &[Complex64], tol: f64) -> usize {
    EigMultiset::from_values(values.iter().copied(), tol).distinct()
}

/// The form at `(q, t)` if it is certified definite.
pub fn definite_form(n: usize, q: Complex64, t: Complex64) -> Result<HermitianForm> {
    let f = invariant_form(n, q, t)?;
    let (ok, min_eig) = is_definite(&f);
    if !ok || f.residual > tol::FORM_CERTIFIED_RESIDUAL {
        return Err(Error::Indefinite { min_eig });
    }
    Ok(f)
}

/// Sample conjugates of the base braid and record their stabilized traces.
/// Conjugators are drawn sequentially from the seeded generator; traces are
/// computed in parallel and kept in sample order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentRun> {
    cfg.validate()?;
    let (q, t) = (cfg.q(), cfg.t());
    definite_form(cfg.n, q, t).map_err(|e| match e {
        Error::Indefinite { min_eig } => Error::Invalid(format!(
            "the invariant form must be definite at (q, t) before sampling (min eigenvalue {min_eig:.3e})"
        )),
        other => other,
    })?;
    let base = cfg.base()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let draws: Vec<(BraidWord, BraidWord)> = (0..cfg.samples)
        .map(|_| random_conjugate(&base, cfg.conjugator_length, &mut rng))
        .collect();
    let gens = NumericGenerators::new(RepKind::Lk, cfg.n, q, t)?;
    let samples: Vec<TraceSample> = draws
        .par_iter()
        .map(|(alpha, conj)| {
            let tr = stabilized_trace_with(&gens, cfg.n, conj)?;
            Ok(TraceSample {
                conjugator: alpha.clone(),
                trace: tr,
                modulus: tr.norm(),
                argument: tr.arg(),
            })
        })
        .collect::<Result<_>>()?;
    let traces: Vec<Complex64> = samples.iter().map(|s| s.trace).collect();
    let fold = |f: fn(f64, f64) -> f64, init: f64, g: fn(&TraceSample) -> f64| {
        samples.iter().map(g).fold(init, f)
    };
    let report = ExperimentReport {
        distinct_count: distinct_count(&traces, tol::TRACE_DISTINCT),
        tol: tol::TRACE_DISTINCT,
        min_mod: fold(f64::min, f64::INFINITY, |s| s.modulus),
        max_mod: fold(f64::max, f64::NEG_INFINITY, |s| s.modulus),
        min_arg: fold(f64::min, f64::INFINITY, |s| s.argument),
        max_arg: fold(f64::max, f64::NEG_INFINITY, |s| s.argument),
        config: cfg.clone(),
    };
    Ok(ExperimentRun { samples, report })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    sample_index: usize,
    conjugator_word: &'a str,
    trace_re: f64,
    trace_im: f64,
    modulus: f64,
    argument: f64,
}

pub fn write_samples_csv<W: Write>(samples: &[TraceSample], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for (i, s) in samples.iter().enumerate() {
        let word = s.conjugator.to_string();
        w.serialize(CsvRow {
            sample_index: i,
            conjugator_word: &word,
            trace_re: s.trace.re,
            trace_im: s.trace.im,
            modulus: s.modulus,
            argument: s.argument,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Whether `ψ(b)` is within `tol::SCALAR` of a multiple of the identity.
pub fn scalar_burau_check(b: &BraidWord, q: Complex64) -> Result<bool> {
    if b.strands() < 2 {
        return Ok(true);
    }
    let m = NumericGenerators::new(RepKind::Burau, b.strands(), q, Complex64::new(1.0, 0.0))?.word(b)?;
    let d = m.nrows();
    let s = m[(0, 0)];
    Ok((0..d).all(|r| {
        (0..d).all(|c| {
            let want = if r == c { s } else { Complex64::new(0.0, 0.0) };
            (m[(r, c)] - want).norm() <= tol::SCALAR
        })
    }))
}

#[derive(Debug, Clone)]
pub struct RestrictedCheck {
    /// Spectrum of the complement block at `t1`.
    pub spectrum_t1: EigMultiset,
    pub spectrum_t2: EigMultiset,
    /// `Ev ψ_{n-1}(w) ∪ {1}`.
    pub expected: EigMultiset,
    pub matches_burau: bool,
    pub t_independent: bool,
    /// The complement block at `t1`, in some basis of the complement.
    pub block_t1: CMatrix,
}

/// Action of `ρ_n(w)` on the `H`-orthogonal complement of `E_{n-1}`.
fn complement_block(n: usize, w: &BraidWord, q: Complex64, t: Complex64) -> Result<CMatrix> {
    let f = definite_form(n, q, t)?;
    let rho = NumericGenerators::new(RepKind::Lk, n, q, t)?.word(&w.include(n, 0)?)?;
    let m = PairBasis::prefix_len(n - 1);
    let p = rho.nrows();
    // x is H-orthogonal to E_{n-1} iff rows 0..m of H annihilate it
    let rows = f.gram.view((0, 0), (m, p)).clone_owned();
    let ns = null_space(&rows, tol::NULLSPACE_REL);
    if ns.dim != p - m {
        return Err(Error::Dimension(format!(
            "complement has dimension {}, expected {}",
            ns.dim,
            p - m
        )));
    }
    let mut basis = CMatrix::zeros(p, ns.dim);
    for (j, v) in ns.basis.iter().enumerate() {
        basis.set_column(j, v);
    }
    let wh = basis.adjoint() * &f.gram;
    let gram_w = &wh * &basis;
    let inv = gram_w
        .try_inverse()
        .ok_or_else(|| Error::NotInvertible("restricted form".into()))?;
    Ok(inv * wh * rho * basis)
}

pub fn restricted_rep_check(
    n: usize,
    word: &BraidWord,
    q: Complex64,
    t1: Complex64,
    t2: Complex64,
) -> Result<RestrictedCheck> {
    if n < 3 {
        return Err(Error::OutOfRange {
            index: n as i64,
            lo: 3,
            hi: i64::MAX,
        });
    }
    if word.strands() + 1 != n {
        return Err(Error::StrandMismatch {
            left: word.strands(),
            right: n - 1,
        });
    }
    let b1 = complement_block(n, word, q, t1)?;
    let b2 = complement_block(n, word, q, t2)?;
    let e1 = eigen_multiset(&b1, 1e-7);
    let e2 = eigen_multiset(&b2, 1e-7);
    let psi = NumericGenerators::new(RepKind::Burau, n - 1, q, t1)?.word(word)?;
    let expected = eigen_multiset(&psi, 1e-7).union(&EigMultiset::from_values([Complex64::new(1.0, 0.0)], 1e-7));
    Ok(RestrictedCheck {
        matches_burau: e1.approx_eq(&expected, 1e-8),
        t_independent: e1.approx_eq(&e2, 1e-8),
        spectrum_t1: e1,
        spectrum_t2: e2,
        expected,
        block_t1: b1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupFamily {
    /// `σ_k^{2m}`, `1 ≤ k ≤ n-1`.
    SquaredGenerators { m: u32 },
    /// `σ_{2i-1}`, `σ_{2i}σ_{2i-1}σ_{2i+1}σ_{2i}` and `σ_{2i}σ_{2i-1}²σ_{2i}`.
    Hilden,
    /// `σ_{ak+l}^{2m}` for every `k` with `1 ≤ ak+l ≤ n-1`.
    OddGenerators { a: u32, l: i64, m: u32 },
}

impl std::str::FromStr for SubgroupFamily {
    type Err = Error;
    /// `squared:M`, `hilden`, or `odd:A,L,M`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidFamily(format!("`{s}`: {why}"));
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        let nums = |r: &str| -> Result<Vec<i64>> {
            r.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad("expected integers")))
                .collect()
        };
        match head {
            "hilden" => Ok(SubgroupFamily::Hilden),
            "squared" => {
                let v = nums(rest)?;
                match v[..] {
                    [m] if m > 0 => Ok(SubgroupFamily::SquaredGenerators { m: m as u32 }),
                    _ => Err(bad("expected squared:M with M > 0")),
                }
            }
            "odd" => {
                let v = nums(rest)?;
                match v[..] {
                    [a, l, m] if a > 0 && m > 0 => Ok(SubgroupFamily::OddGenerators {
                        a: a as u32,
                        l,
                        m: m as u32,
                    }),
                    _ => Err(bad("expected odd:A,L,M with A, M > 0")),
                }
            }
            _ => Err(bad("unknown family")),
        }
    }
}

/// Words generating the family's subgroup of `B_n`.
pub fn family_words(n: usize, family: SubgroupFamily) -> Result<Vec<BraidWord>> {
    let w = |tokens: &[i64]| BraidWord::from_signed(n, tokens);
    let power = |i: i64, m: u32| w(&vec![i; 2 * m as usize]);
    let words: Vec<BraidWord> = match family {
        SubgroupFamily::SquaredGenerators { m } => {
            (1..n as i64).map(|i| power(i, m)).collect::<Result<_>>()?
        }
        SubgroupFamily::Hilden => {
            if n < 4 || n % 2 == 1 {
                return Err(Error::InvalidFamily(format!(
                    "the Hilden subgroup needs an even strand count >= 4, got {n}"
                )));
            }
            let half = (n / 2) as i64;
            let mut out = Vec::new();
            for i in 1..=half {
                out.push(w(&[2 * i - 1])?);
            }
            for i in 1..half {
                out.push(w(&[2 * i, 2 * i - 1, 2 * i + 1, 2 * i])?);
                out.push(w(&[2 * i, 2 * i - 1, 2 * i - 1, 2 * i])?);
            }
            out
        }
        SubgroupFamily::OddGenerators { a, l, m } => {
            let a = i64::from(a);
            let idx: Vec<i64> = (1..n as i64).filter(|&i| (i - l).rem_euclid(a) == 0).collect();
            if idx.is_empty() {
                return Err(Error::InvalidFamily(format!(
                    "no index a*k + l lies in 1..{}",
                    n - 1
                )));
            }
            idx.into_iter().map(|i| power(i, m)).collect::<Result<_>>()?
        }
    };
    Ok(words)
}

/// Commutant dimension of `ρ_n` restricted to the family's subgroup.
pub fn subgroup_irreducibility(n: usize, family: SubgroupFamily, q: Complex64, t: Complex64) -> Result<usize> {
    let gens = NumericGenerators::new(RepKind::Lk, n, q, t)?;
    let mats = family_words(n, family)?
        .iter()
        .map(|w| gens.word(w))
        .collect::<Result<Vec<CMatrix>>>()?;
    commutant_dimension(&mats)
}

/// Matrices of the family's generators under `ρ_n`.
pub fn family_matrices(n: usize, family: SubgroupFamily, q: Complex64, t: Complex64) -> Result<Vec<CMatrix>> {
    let gens = NumericGenerators::new(RepKind::Lk, n, q, t)?;
    family_words(n, family)?.iter().map(|w| gens.word(w)).collect()
}

/// Indices of `v_{2i-1,2i}` in the pair basis.
pub fn hilden_v1_indices(n: usize) -> Vec<usize> {
    let b = PairBasis::new(n);
    (1..=n / 2).map(|i| b.index(2 * i - 1, 2 * i)).collect()
}
