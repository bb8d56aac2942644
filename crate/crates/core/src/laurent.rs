//! Integer Laurent polynomials in one variable `v`.
//!
//! This is the coefficient ring of the Hecke algebra and of every graded
//! multiplicity table in the crate. `q = v^2` polynomials (Kazhdan-Lusztig
//! polynomials) are stored separately as [`QPoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;

/// A finite sum `sum c_k v^k` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials and the empty map is `0`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn monomial(coef: i64, exp: i32) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coef);
        p
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// The bar involution `v^k -> v^{-k}`.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::default();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &x)| (e, x * c)).collect(),
        }
    }

    /// Specialization at `v = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Exact value at an integer point; `None` at `v = 0` when a negative
    /// power occurs.
    pub fn eval(&self, v: i64) -> Option<num_rational::Ratio<i128>> {
        use num_rational::Ratio;
        if v == 0 && self.min_degree().is_some_and(|d| d < 0) {
            return None;
        }
        let base = Ratio::from_integer(v as i128);
        let mut acc = Ratio::from_integer(0i128);
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                num_traits::pow(base, e as usize)
            } else {
                num_traits::pow(base.recip(), (-e) as usize)
            };
            acc += p * Ratio::from_integer(c as i128);
        }
        Some(acc)
    }

    /// True iff the coefficient at `center + k` equals the one at
    /// `center - k` for every `k`.
    pub fn is_palindromic(&self, center: i32) -> bool {
        self.terms().all(|(e, c)| self.coeff(2 * center - e) == c)
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    /// True iff the polynomial lies in `N[v]`: nonnegative coefficients and
    /// no negative powers.
    pub fn in_n_v(&self) -> bool {
        self.is_nonnegative() && self.min_degree().is_none_or(|d| d >= 0)
    }

    /// Substitute `q = v^{2 sign}` into a polynomial in `q`.
    pub fn from_q_poly(p: &QPoly, sign: i32) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, &c)| (2 * sign * k as i32, c)),
        )
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders as e.g. `1+v^2`, `-v^-1+3`, `0`. Terms in increasing exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            write!(f, "{sign}")?;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Inverse of `Display`: accepts `0`, `3`, `-v^-1+2*v^3`, `1 + v^2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a Laurent polynomial in v: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split before every sign that does not follow '^'.
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
                pieces.push(&compact[start..k]);
                start = k;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (mag, exp) = match body.split_once('v') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some((head, tail)) => {
                    let mag = match head {
                        "" => 1,
                        h => h
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?,
                    };
                    let exp = match tail {
                        "" => 1,
                        t => t
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?,
                    };
                    (mag, exp)
                }
            };
            out.add_term(exp, if neg { -mag } else { mag });
        }
        Ok(out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// A polynomial in `q` with integer coefficients, dense, lowest degree first.
/// Trailing zeros are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn one() -> Self {
        QPoly(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            write!(f, "{sign}")?;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn bar_examples() {
        assert!(LaurentPoly::zero().bar().is_zero());
        assert_eq!(lp(&[(1, 1), (0, 3)]).bar(), lp(&[(-1, 1), (0, 3)]));
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(LaurentPoly::zero().eval_at_one(), 0);
        assert_eq!(lp(&[(2, 1), (-2, 1), (0, 1)]).eval_at_one(), 3);
        for k in -5..5 {
            assert_eq!(LaurentPoly::v_pow(k).eval_at_one(), 1);
        }
    }

    #[test]
    fn palindromic_examples() {
        assert!(lp(&[(0, 1), (2, 1)]).is_palindromic(1));
        assert!(LaurentPoly::v_pow(1).is_palindromic(1));
        assert!(!lp(&[(0, 1), (1, 1)]).is_palindromic(0));
        assert!(LaurentPoly::zero().is_palindromic(7));
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let mut p = lp(&[(3, 2)]);
        p.add_term(3, -2);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(lp(&[(1, 0)]), LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(0, 1), (2, 1)]).to_string(), "1+v^2");
        assert_eq!(lp(&[(-1, -1), (0, 3)]).to_string(), "-v^-1+3");
        assert_eq!(lp(&[(1, 2)]).to_string(), "2*v");
        assert_eq!(QPoly::new(vec![1, 1, 0]).to_string(), "1+q");
    }

    #[test]
    fn q_substitution() {
        let p = QPoly::new(vec![1, 2]);
        assert_eq!(LaurentPoly::from_q_poly(&p, -1), lp(&[(0, 1), (-2, 2)]));
        assert_eq!(LaurentPoly::from_q_poly(&p, 1), lp(&[(0, 1), (2, 2)]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -9i64..9), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn parse_examples() {
        let p: LaurentPoly = "-v^-1+3".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(-1, -1), (0, 3)]));
        assert_eq!(
            "1 + v^2".parse::<LaurentPoly>().unwrap().to_string(),
            "1+v^2"
        );
        assert_eq!(
            "2*v".parse::<LaurentPoly>().unwrap(),
            LaurentPoly::monomial(2, 1)
        );
        assert!("0".parse::<LaurentPoly>().unwrap().is_zero());
        for bad in ["", "v^", "2v", "x+1", "1++v"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
        }

        #[test]
        fn bar_is_ring_automorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a);
        }
    }
}
