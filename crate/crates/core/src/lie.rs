//! Simply-laced root systems (A, D, E6), Weyl's dimension formula and the
//! enumeration of small irreducible representations.
//!
//! Node order: `A_r` is the path `1 - 2 - … - r`; `D_r` is the path
//! `1 - … - (r-2)` with both fork nodes `r-1` and `r` attached to `r-2`;
//! `E6` is the path `1 - 2 - 3 - 4 - 5` with node `6` attached to node `3`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diagram {
    A(usize),
    D(usize),
    E6,
}

impl Diagram {
    pub fn new_a(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::UnsupportedDiagram("A0".into()));
        }
        Ok(Diagram::A(rank))
    }

    pub fn new_d(rank: usize) -> Result<Self> {
        if rank < 4 {
            return Err(Error::UnsupportedDiagram(format!("D{rank} (need rank >= 4)")));
        }
        Ok(Diagram::D(rank))
    }

    pub fn rank(&self) -> usize {
        match *self {
            Diagram::A(r) | Diagram::D(r) => r,
            Diagram::E6 => 6,
        }
    }

    /// Edges between 0-based node indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            Diagram::A(r) => (1..r).map(|i| (i - 1, i)).collect(),
            Diagram::D(r) => {
                let mut e: Vec<(usize, usize)> = (1..r - 1).map(|i| (i - 1, i)).collect();
                e.push((r - 3, r - 1));
                e
            }
            Diagram::E6 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
        }
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut c = vec![vec![0i64; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in self.edges() {
            c[a][b] = -1;
            c[b][a] = -1;
        }
        c
    }

    pub fn positive_root_count(&self) -> usize {
        match *self {
            Diagram::A(r) => r * (r + 1) / 2,
            Diagram::D(r) => r * (r - 1),
            Diagram::E6 => 36,
        }
    }

    /// The label permutation of the nontrivial diagram automorphism, if any
    /// (for `D_4` the fork swap is used).
    pub fn automorphism(&self) -> Option<Vec<usize>> {
        match *self {
            Diagram::A(1) => None,
            Diagram::A(r) => Some((0..r).rev().collect()),
            Diagram::D(r) => {
                let mut p: Vec<usize> = (0..r).collect();
                p.swap(r - 2, r - 1);
                Some(p)
            }
            Diagram::E6 => Some(vec![4, 3, 2, 1, 0, 5]),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(r) => write!(f, "A{r}"),
            Diagram::D(r) => write!(f, "D{r}"),
            Diagram::E6 => write!(f, "E6"),
        }
    }
}

impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedDiagram(s.to_string());
        if s.eq_ignore_ascii_case("E6") {
            return Ok(Diagram::E6);
        }
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let rank: usize = rest.parse().map_err(|_| bad())?;
        match head {
            "A" | "a" => Diagram::new_a(rank),
            "D" | "d" => Diagram::new_d(rank),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinLabeling {
    diagram: Diagram,
    labels: Vec<u32>,
}

impl DynkinLabeling {
    pub fn new(diagram: Diagram, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != diagram.rank() {
            return Err(Error::InvalidLabeling(format!(
                "{diagram} needs {} labels, got {}",
                diagram.rank(),
                labels.len()
            )));
        }
        if labels.iter().all(|&a| a == 0) {
            return Err(Error::InvalidLabeling("all labels are zero".into()));
        }
        Ok(Self { diagram, labels })
    }

    /// Parse a comma-separated label list.
    pub fn parse(diagram: Diagram, text: &str) -> Result<Self> {
        let labels = text
            .split(',')
            .map(|s| {
                s.trim().parse::<u32>().map_err(|_| Error::Parse {
                    token: s.trim().to_string(),
                    reason: "expected a non-negative integer label".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(diagram, labels)
    }

    pub fn diagram(&self) -> Diagram {
        self.diagram
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn labels_string(&self) -> String {
        self.labels
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for DynkinLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.diagram, self.labels_string())
    }
}

/// Positive roots in simple-root coordinates, with the inner product
/// `(α_i, α_i) = 1`, `(α_i, α_j) = -1/2` for adjacent nodes.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub diagram: Diagram,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    /// Half the sum of the positive roots, in simple-root coordinates.
    pub g: Vec<BigRational>,
}

impl RootSystem {
    /// `(x, y) = ½ xᵀ C y` on simple-root coordinates.
    pub fn inner(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let r = self.cartan.len();
        let mut acc = BigRational::zero();
        for i in 0..r {
            for j in 0..r {
                let c = self.cartan[i][j];
                if c != 0 {
                    acc += &x[i] * &y[j] * BigRational::from_integer(c.into());
                }
            }
        }
        acc / BigRational::from_integer(2.into())
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Positive roots by closure under simple root strings.
pub fn positive_roots(diagram: Diagram) -> Result<RootSystem> {
    let cartan = diagram.cartan();
    let r = diagram.rank();
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                // ⟨β, α_i^∨⟩ = Σ_j C_ij β_j
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    if roots.len() != diagram.positive_root_count() {
        return Err(Error::Invalid(format!(
            "{diagram}: generated {} positive roots, expected {}",
            roots.len(),
            diagram.positive_root_count()
        )));
    }
    roots.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let mut g = vec![BigRational::zero(); r];
    for beta in &roots {
        for (gi, &b) in g.iter_mut().zip(beta) {
            *gi += rat(b);
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    for gi in g.iter_mut() {
        *gi *= &half;
    }
    Ok(RootSystem {
        diagram,
        cartan,
        positive_roots: roots,
        g,
    })
}

fn to_dimension(v: BigRational, what: &str) -> Result<u128> {
    if !v.is_integer() {
        return Err(Error::NonIntegral(format!("{what}: {v}")));
    }
    v.to_integer()
        .to_u128()
        .ok_or_else(|| Error::NonIntegral(format!("{what}: {v} out of range")))
}

/// `N = Π_{α>0} (Λ+g, α)/(g, α)`.
pub fn weyl_dimension(l: &DynkinLabeling) -> Result<u128> {
    let rs = positive_roots(l.diagram)?;
    weyl_dimension_in(&rs, l.labels())
}

/// Weyl's formula against a precomputed root system.
pub fn weyl_dimension_in(rs: &RootSystem, labels: &[u32]) -> Result<u128> {
    // (Λ, α_i) = a_i (α_i, α_i)/2 = a_i/2
    let half = BigRational::new(1.into(), 2.into());
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for alpha in &rs.positive_roots {
        let a: Vec<BigRational> = alpha.iter().map(|&x| rat(x)).collect();
        let g_alpha = rs.inner(&rs.g, &a);
        let lam_alpha: BigRational = alpha
            .iter()
            .zip(labels)
            .map(|(&c, &lab)| rat(c * i64::from(lab)) * &half)
            .fold(BigRational::zero(), |s, x| s + x);
        num *= &lam_alpha + &g_alpha;
        den *= g_alpha;
    }
    to_dimension(num / den, "Weyl dimension")
}

/// The closed-form E6 evaluation in the `l_k, g_k, m_k` variables.
pub fn e6_dimension_direct(labels: &[u32; 6]) -> Result<u128> {
    let a: Vec<BigRational> = labels.iter().map(|&x| rat(i64::from(x))).collect();
    let sixth = BigRational::new(1.into(), 6.into());
    let half = BigRational::new(1.into(), 2.into());
    let l6 = -(1..=5).fold(BigRational::zero(), |s, i| s + rat(i as i64) * &a[i - 1]) * &sixth;
    let mut l = Vec::with_capacity(6);
    for k in 1..=5 {
        let tail = (k..=5).fold(BigRational::zero(), |s, i| s + &a[i - 1]);
        l.push(&l6 + tail);
    }
    l.push(l6);
    let mut g: Vec<BigRational> = (1..=5)
        .map(|k| BigRational::new(BigInt::from(7 - 2 * k), 2.into()))
        .collect();
    g.push(BigRational::new((-5).into(), 2.into()));
    let big_l = &a[0] + rat(2) * &a[1] + rat(3) * &a[2] + rat(2) * &a[3] + &a[4] + rat(2) * &a[5];
    let g0 = rat(11);
    let m: Vec<BigRational> = l.iter().zip(&g).map(|(x, y)| x + y).collect();
    let m0 = &big_l + &g0;
    let mut n = &m0 / &g0;
    for p in 0..6 {
        for q in p + 1..6 {
            n *= (&m[p] - &m[q]) / (&g[p] - &g[q]);
        }
    }
    for p in 0..6 {
        for q in p + 1..6 {
            for r in q + 1..6 {
                n *= (&m[p] + &m[q] + &m[r] + &m0 * &half) / (&g[p] + &g[q] + &g[r] + &g0 * &half);
            }
        }
    }
    to_dimension(n, "E6 direct dimension")
}

/// True iff the labeling is not fixed by the diagram automorphism. Only
/// `A_r`, `D_r` for odd `r`, and `E6` admit asymmetric irreps.
pub fn is_asymmetric(l: &DynkinLabeling) -> bool {
    match l.diagram {
        Diagram::D(r) if r % 2 == 0 => false,
        d => match d.automorphism() {
            None => false,
            Some(p) => p.iter().enumerate().any(|(i, &j)| l.labels[i] != l.labels[j]),
        },
    }
}

/// All nontrivial labelings of dimension `≤ bound`, in lexicographic order.
/// Raising a label never lowers the dimension, so a prefix whose dimension
/// (with zeros after it) exceeds the bound is not extended.
pub fn enumerate_irreps_below(
    diagram: Diagram,
    bound: u128,
    asymmetric_only: bool,
) -> Result<Vec<(DynkinLabeling, u128)>> {
    let rs = positive_roots(diagram)?;
    let r = diagram.rank();
    let mut out = Vec::new();
    let mut labels = vec![0u32; r];
    walk(&rs, bound, 0, &mut labels, &mut out)?;
    out.retain(|(l, _)| !asymmetric_only || is_asymmetric(l));
    Ok(out)
}

fn walk(
    rs: &RootSystem,
    bound: u128,
    pos: usize,
    labels: &mut Vec<u32>,
    out: &mut Vec<(DynkinLabeling, u128)>,
) -> Result<()> {
    if pos == labels.len() {
        if labels.iter().any(|&a| a > 0) {
            let d = weyl_dimension_in(rs, labels)?;
            out.push((DynkinLabeling::new(rs.diagram, labels.clone())?, d));
        }
        return Ok(());
    }
    let mut a = 0u32;
    loop {
        labels[pos] = a;
        let floor = weyl_dimension_in(rs, labels)?;
        if floor > bound {
            break;
        }
        walk(rs, bound, pos + 1, labels, out)?;
        a += 1;
    }
    labels[pos] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_diagrams() {
        assert_eq!("A5".parse::<Diagram>().unwrap(), Diagram::A(5));
        assert_eq!("D5".parse::<Diagram>().unwrap(), Diagram::D(5));
        assert_eq!("e6".parse::<Diagram>().unwrap(), Diagram::E6);
        assert!("D3".parse::<Diagram>().is_err());
        assert!("G2".parse::<Diagram>().is_err());
        assert!("A".parse::<Diagram>().is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(Diagram::A(2)).unwrap().positive_roots.len(), 3);
        assert_eq!(positive_roots(Diagram::A(5)).unwrap().positive_roots.len(), 15);
        assert_eq!(positive_roots(Diagram::D(5)).unwrap().positive_roots.len(), 20);
        assert_eq!(positive_roots(Diagram::E6).unwrap().positive_roots.len(), 36);
    }

    #[test]
    fn highest_root_of_e6() {
        let rs = positive_roots(Diagram::E6).unwrap();
        assert_eq!(rs.positive_roots.last().unwrap(), &vec![1, 2, 3, 2, 1, 2]);
    }

    #[test]
    fn labelings_validate() {
        assert!(DynkinLabeling::new(Diagram::A(3), vec![0, 0, 0]).is_err());
        assert!(DynkinLabeling::new(Diagram::A(3), vec![1, 0]).is_err());
        assert!(DynkinLabeling::parse(Diagram::A(3), "1,x,0").is_err());
        assert_eq!(DynkinLabeling::parse(Diagram::A(3), "1, 0,2").unwrap().labels(), &[1, 0, 2]);
    }

    #[test]
    fn g_pairs_to_one_half_with_simple_roots() {
        for d in [Diagram::A(4), Diagram::D(5), Diagram::E6] {
            let rs = positive_roots(d).unwrap();
            for i in 0..d.rank() {
                let e: Vec<BigRational> = (0..d.rank()).map(|j| rat(i64::from(i == j))).collect();
                assert_eq!(rs.inner(&rs.g, &e), BigRational::new(1.into(), 2.into()));
            }
        }
    }
}
