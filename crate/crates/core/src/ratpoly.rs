//! Multivariate polynomials over the rationals, one variable per simple root.
//!
//! Variables are the fundamental weights `omega_1, ..., omega_n`, so the
//! polynomial ring is the symmetric algebra of the weight space. Each variable
//! has degree 2.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub const MAX_VARS: usize = 8;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector. Ordered graded-lexicographically: higher total degree is
/// larger, ties broken lexicographically with variable 0 most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.0[i] = 1;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        out
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Polynomial in the fundamental weights with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn var(i: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(i), rat(1));
        p
    }

    /// The degree-2 element `sum_i coeffs[i] * omega_i`.
    pub fn linear<T: Into<BigInt> + Copy>(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Degree in the grading where each variable has degree 2. `None` for 0
    /// or for inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| 2 * m.total_degree());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Split into homogeneous components keyed by degree (2 per variable).
    pub fn homogeneous_components(&self) -> BTreeMap<u32, RatPoly> {
        let mut out: BTreeMap<u32, RatPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(2 * m.total_degree())
                .or_default()
                .add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitute `omega_i -> images[i]` for every variable, as an algebra
    /// homomorphism. Missing images leave variables fixed.
    pub fn substitute(&self, images: &[RatPoly]) -> Self {
        let nvars = images.len();
        // powers[i][k] = images[i]^k, built on demand.
        let mut powers: Vec<Vec<RatPoly>> = vec![vec![RatPoly::one()]; nvars];
        let mut out = RatPoly::zero();
        for (m, c) in &self.terms {
            let mut term = RatPoly::constant(c.clone());
            let mut rest = Monomial::one();
            for i in 0..MAX_VARS {
                let e = m.0[i] as usize;
                if e == 0 {
                    continue;
                }
                if i >= nvars {
                    rest.0[i] = m.0[i];
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            if rest != Monomial::one() {
                term = term.mul_monomial(&rest, &rat(1));
            }
            out += &term;
        }
        out
    }

    /// Exact quotient `self / l` for a nonzero linear form `l`, by
    /// leading-term elimination in graded-lex order.
    pub fn divide_linear(&self, l: &RatPoly) -> Result<RatPoly> {
        if l.homogeneous_degree() != Some(2) {
            return Err(Error::NotLinear);
        }
        let (lm, lc) = l.leading_term().expect("nonzero linear form");
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = RatPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.checked_div(&lm) else {
                return Err(Error::NonDivisible);
            };
            let qc = c / &lc;
            rem -= &l.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&RatPoly> for RatPoly {
    fn sub_assign(&mut self, rhs: &RatPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        self.scale(&rat(-1))
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let is_one = *m == Monomial::one();
            if !mag.is_one() || is_one {
                write!(f, "{mag}")?;
            }
            let mut first = mag.is_one();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "w{}", v + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lin(c: &[i64]) -> RatPoly {
        RatPoly::linear(c)
    }

    #[test]
    fn divide_examples() {
        // alpha_2 in A2 is -omega_1 + 2 omega_2.
        let a2 = lin(&[-1, 2]);
        assert!(RatPoly::zero().divide_linear(&a2).unwrap().is_zero());
        assert_eq!((&a2 * &a2).divide_linear(&a2).unwrap(), a2);
        let w1 = RatPoly::var(0);
        let f = &(&w1 * &a2) + &(&a2 * &a2);
        assert_eq!(f.divide_linear(&a2).unwrap(), &w1 + &a2);
    }

    #[test]
    fn divide_reports_remainder() {
        let f = &RatPoly::var(0) * &RatPoly::var(0);
        assert_eq!(f.divide_linear(&RatPoly::var(1)), Err(Error::NonDivisible));
        assert_eq!(f.divide_linear(&RatPoly::one()), Err(Error::NotLinear));
    }

    #[test]
    fn degrees_are_doubled() {
        let f = &RatPoly::var(0) * &RatPoly::var(1);
        assert_eq!(f.homogeneous_degree(), Some(4));
        assert_eq!(RatPoly::one().homogeneous_degree(), Some(0));
        assert_eq!((&f + &RatPoly::one()).homogeneous_degree(), None);
    }

    fn arb_homog(deg: usize) -> impl Strategy<Value = RatPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0usize..3, deg), -5i64..5, 1i64..4),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = RatPoly::zero();
            for (vars, n, d) in terms {
                let mut m = Monomial::one();
                for v in vars {
                    m.0[v] += 1;
                }
                p.add_term(m, rat_frac(n, d));
            }
            p
        })
    }

    fn arb_poly() -> impl Strategy<Value = RatPoly> {
        (arb_homog(0), arb_homog(1), arb_homog(2)).prop_map(|(a, b, c)| &(&a + &b) + &c)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &RatPoly::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn divide_inverts_multiplication(f in arb_homog(2), l in proptest::collection::vec(-3i64..4, 3)) {
            let l = lin(&l);
            prop_assume!(!l.is_zero());
            prop_assert_eq!((&f * &l).divide_linear(&l).unwrap(), f);
        }
    }
}
