//! Braid words in the Artin generators and the maps out of them that do not
//! need a representation: exponent sum, underlying permutation, subgroup
//! inclusions and the partial full twists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One Artin generator `σ_index^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Self {
            index,
            inverse: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Self {
            index,
            inverse: true,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

/// A braid word on `strands` strands. Words are kept verbatim: no free
/// reduction, no normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::OutOfRange {
                    index: l.index as i64,
                    lo: 1,
                    hi: strands as i64 - 1,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Build from signed generator indices, `-k` meaning `σ_k^{-1}`.
    pub fn from_signed(strands: usize, tokens: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(tokens.len());
        for &k in tokens {
            if k == 0 {
                return Err(Error::Parse {
                    token: k.to_string(),
                    reason: "generator index 0 does not exist".into(),
                });
            }
            let idx = k.unsigned_abs() as usize;
            if idx >= strands {
                return Err(Error::Parse {
                    token: k.to_string(),
                    reason: format!("|index| must be at most {}", strands as i64 - 1),
                });
            }
            letters.push(Letter {
                index: idx,
                inverse: k < 0,
            });
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| l.sign() * l.index as i64)
            .collect()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `[β]`: the image under `B_n → Z`, `σ_i ↦ 1`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(Letter::sign).sum()
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Shift every index by `offset` and view the result in `B_target`.
    pub fn include(&self, target_strands: usize, offset: usize) -> Result<BraidWord> {
        if offset + self.strands > target_strands {
            return Err(Error::TargetTooSmall {
                from: self.strands,
                target: target_strands,
                offset,
            });
        }
        Ok(BraidWord {
            strands: target_strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    index: l.index + offset,
                    inverse: l.inverse,
                })
                .collect(),
        })
    }

    /// Image in `S_n`; every letter is the transposition `(i, i+1)` regardless
    /// of its sign. Letters act left to right on positions, the same order in
    /// which the representations multiply their generator matrices.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.strands).collect();
        for l in &self.letters {
            images.swap(l.index - 1, l.index);
        }
        Permutation { images }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.to_signed().iter().map(|k| k.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Parse whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let mut tokens = Vec::new();
    for tok in text.split_whitespace() {
        let k = i64::from_str(tok).map_err(|_| Error::Parse {
            token: tok.to_string(),
            reason: "not an integer".into(),
        })?;
        tokens.push(k);
    }
    BraidWord::from_signed(strands, &tokens)
}

/// `β_{n,k} = (σ_1 … σ_{k-1})^k ∈ B_n`, the full twist on the first `k`
/// strands. For `k = n` this is `Δ²`, which generates the center.
pub fn full_twist(n: usize, k: usize) -> Result<BraidWord> {
    if k < 2 || k > n {
        return Err(Error::OutOfRange {
            index: k as i64,
            lo: 2,
            hi: n as i64,
        });
    }
    let sweep: Vec<Letter> = (1..k).map(Letter::pos).collect();
    let mut letters = Vec::with_capacity(k * (k - 1));
    for _ in 0..k {
        letters.extend_from_slice(&sweep);
    }
    BraidWord::new(n, letters)
}

/// A bijection of `{1..n}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| v == i + 1)
            .count()
    }

    /// Lengths of the cycles, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = self.images[c] - 1;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}
