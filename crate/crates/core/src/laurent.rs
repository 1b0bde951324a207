//! Exact Laurent polynomials in two variables `q`, `t` with arbitrary
//! precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(deg_q, deg_t)`.
pub type Monomial = (i32, i32);

/// An element of `Z[q^{±1}, t^{±1}]`. No zero coefficient is ever stored, so
/// structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly2 {
    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, dq: i32, dt: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dq, dt), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, dq: i32, dt: i32) -> BigInt {
        self.terms.get(&(dq, dt)).cloned().unwrap_or_default()
    }

    /// True when no monomial involves `t`.
    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|&(_, dt)| dt == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&m| m == (0, 0))
    }

    /// `Some((c, dq, dt))` for a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, i32, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(&(a, b), c)| (c, a, b))
    }

    /// Units of the ring are `±q^a t^b`.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, dq, dt) = self.as_monomial()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -dq, -dt))
        } else {
            None
        }
    }

    pub fn shift(&self, dq: i32, dt: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dq, b + dt), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&m, v)| (m, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact specialization of `t` to `+1` or `-1`.
    pub fn substitute_t(&self, t_value: i32) -> Result<Self> {
        if t_value != 1 && t_value != -1 {
            return Err(Error::Invalid(format!(
                "t may only be specialized to ±1, got {t_value}"
            )));
        }
        let mut out = Self::zero();
        for (&(dq, dt), c) in &self.terms {
            let c = if t_value == -1 && dt.rem_euclid(2) == 1 {
                -c.clone()
            } else {
                c.clone()
            };
            out.add_term((dq, 0), c);
        }
        Ok(out)
    }

    /// Numeric value at nonzero `(q, t)`. Terms are grouped by `t`-degree and
    /// each group is evaluated by Horner's rule in `q`.
    pub fn eval(&self, q: Complex64, t: Complex64) -> Result<Complex64> {
        if q.norm() == 0.0 || t.norm() == 0.0 {
            return Err(Error::ZeroSubstitution);
        }
        let mut by_t: BTreeMap<i32, Vec<(i32, f64)>> = BTreeMap::new();
        for (&(dq, dt), c) in &self.terms {
            by_t.entry(dt)
                .or_default()
                .push((dq, c.to_f64().unwrap_or(f64::NAN)));
        }
        let mut total = Complex64::zero();
        for (dt, mut row) in by_t {
            // descending q-degree for Horner
            row.sort_by_key(|e| std::cmp::Reverse(e.0));
            let lo = row.last().map(|r| r.0).unwrap_or(0);
            let mut acc = Complex64::zero();
            let mut deg = row[0].0;
            for (d, c) in row {
                while deg > d {
                    acc *= q;
                    deg -= 1;
                }
                acc += c;
            }
            while deg > lo {
                acc *= q;
                deg -= 1;
            }
            total += acc * q.powi(lo) * t.powi(dt);
        }
        Ok(total)
    }

    /// JSON-friendly `[deg_q, deg_t, coefficient]` triples.
    pub fn to_triples(&self) -> Vec<(i32, i32, BigInt)> {
        self.terms
            .iter()
            .map(|(&(a, b), c)| (a, b, c.clone()))
            .collect()
    }
}

impl Zero for LaurentPoly2 {
    fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly2 {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for LaurentPoly2 {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly2 {
    fn add_assign(&mut self, rhs: LaurentPoly2) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, rhs: &LaurentPoly2) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, d: i32) -> fmt::Result {
    match d {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{d}"),
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degrees first
        for (k, (&(dq, dt), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let bare = dq == 0 && dt == 0;
            if !abs.is_one() || bare {
                write!(f, "{abs}")?;
            }
            write_var(f, "t", dt)?;
            if dt != 0 && dq != 0 {
                write!(f, " ")?;
            }
            write_var(f, "q", dq)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn q() -> LaurentPoly2 {
        LaurentPoly2::q()
    }
    fn t() -> LaurentPoly2 {
        LaurentPoly2::t()
    }
    fn c(k: i64) -> LaurentPoly2 {
        LaurentPoly2::constant(k)
    }

    #[test]
    fn ring_examples() {
        assert!((q() + (-q())).is_zero());
        let q2q = &q().pow(2) - &q();
        assert_eq!(&q2q * &c(1), q2q);
        assert_eq!((c(1) - q()) * (c(1) + q()), c(1) - q().pow(2));
    }

    #[test]
    fn no_zero_coefficients_survive() {
        let p = (q() + t()) - t();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p, q());
    }

    #[test]
    fn evaluation() {
        let p = -(t() * q().pow(2));
        let v = p
            .eval(Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0))
            .unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let z = Complex64::from_polar(1.0, 0.7);
        let v = q().eval(z, Complex64::new(0.3, 0.2)).unwrap();
        assert!((v - z).norm() < 1e-15);
        assert_eq!(
            q().eval(Complex64::zero(), Complex64::one()),
            Err(Error::ZeroSubstitution)
        );
        // negative degrees
        let p = LaurentPoly2::monomial(3, -2, 1) + LaurentPoly2::monomial(-1, 4, -3);
        let (qq, tt) = (Complex64::from_polar(1.0, 0.3), Complex64::from_polar(1.0, -1.1));
        let want = 3.0 * qq.powi(-2) * tt - qq.powi(4) * tt.powi(-3);
        assert!((p.eval(qq, tt).unwrap() - want).norm() < 1e-14);
    }

    #[test]
    fn specialize_t() {
        let a = -(t() * q().pow(2));
        assert_eq!(a.substitute_t(-1).unwrap(), q().pow(2));
        assert_eq!(q().substitute_t(-1).unwrap(), q());
        let b = (q().pow(2) - q()) * t();
        assert_eq!(b.substitute_t(-1).unwrap(), q() - q().pow(2));
        assert!(b.substitute_t(-1).unwrap().is_t_free());
        assert!(b.substitute_t(2).is_err());
    }

    #[test]
    fn units() {
        let u = LaurentPoly2::monomial(-1, 3, -2);
        assert_eq!(&u * &u.unit_inverse().unwrap(), c(1));
        assert!(LaurentPoly2::monomial(2, 1, 0).unit_inverse().is_none());
        assert!((q() + c(1)).unit_inverse().is_none());
    }

    #[test]
    fn display() {
        assert_eq!((-(t() * q().pow(2))).to_string(), "-t q^2");
        assert_eq!((q().pow(2) - q()).to_string(), "q^2 - q");
        assert_eq!(c(0).to_string(), "0");
        assert_eq!((c(1) - q()).to_string(), "-q + 1");
    }

    fn poly() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec(((-3i32..4, -2i32..3), -5i64..6), 0..5).prop_map(|v| {
            LaurentPoly2::from_terms(v.into_iter().map(|(m, c)| (m, BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_multiplicative(a in poly(), b in poly(), x in 0.0..(2.0 * PI), y in 0.0..(2.0 * PI)) {
            let (q, t) = (Complex64::from_polar(1.0, x), Complex64::from_polar(1.0, y));
            let lhs = (&a * &b).eval(q, t).unwrap();
            let rhs = a.eval(q, t).unwrap() * b.eval(q, t).unwrap();
            let scale = 1.0f64.max(rhs.norm());
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }
    }
}
