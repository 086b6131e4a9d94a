//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! Every structure constant, matrix entry and cohomology representative in
//! this crate is a [`Scalar`]. Both parts are arbitrary-precision rationals
//! kept in lowest terms, so equality is structural and no rounding ever
//! happens.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::integer(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn integer(value: i64) -> Self {
        Scalar::new(
            Rational::from_integer(BigInt::from(value)),
            Rational::zero(),
        )
    }

    /// `numer / denom` as a real scalar. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::new(
            Rational::new(BigInt::from(numer), BigInt::from(denom)),
            Rational::zero(),
        )
    }

    /// `(re_n/re_d) + (im_n/im_d)·i`. Panics on a zero denominator.
    pub fn gaussian(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        Scalar::new(
            Rational::new(BigInt::from(re_n), BigInt::from(re_d)),
            Rational::new(BigInt::from(im_n), BigInt::from(im_d)),
        )
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `|a|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let norm = self.norm_sqr();
        Ok(Scalar::new(&self.re / &norm, -(&self.im / &norm)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplies by `(-1)^k`.
    pub fn signed(self, negative: bool) -> Self {
        if negative {
            -self
        } else {
            self
        }
    }

    /// Machine literal `RE,IM` (or just `RE` when real), the inverse of
    /// [`FromStr`].
    pub fn literal(&self) -> String {
        if self.im.is_zero() {
            format_rational(&self.re)
        } else {
            format!(
                "{},{}",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        }
    }
}

/// Prints `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `INT` or `INT "/" POSINT`.
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::InvalidRational(text.to_string());
    let int = |s: &str| -> Result<BigInt, ScalarError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text)?)),
        Some((n, d)) => {
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            let d = int(d)?;
            if !d.is_positive() {
                return Err(bad());
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts `RE` or `RE,IM`, each a rational literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [re] => Ok(Scalar::new(parse_rational(re)?, Rational::zero())),
            [re, im] => Ok(Scalar::new(parse_rational(re)?, parse_rational(im)?)),
            _ => Err(ScalarError::InvalidScalar(s.to_string())),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, im: &Rational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if im.is_integer() {
                write!(f, "{}i", im.numer())
            } else {
                write!(f, "({})i", format_rational(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-")?;
                }
                imag(f, &self.im.abs())
            }
            (false, false) => {
                write!(f, "{}", format_rational(&self.re))?;
                write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
                imag(f, &self.im.abs())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::integer(value)
    }
}

impl From<Rational> for Scalar {
    fn from(value: Rational) -> Self {
        Scalar::new(value, Rational::zero())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::new(&self.re * &rhs.re, Rational::zero());
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn half_times_i() {
        assert_eq!(Scalar::ratio(1, 2) * Scalar::i(), s("0,1/2"));
    }

    #[test]
    fn self_division_is_one() {
        let a = s("1,1");
        assert!(a.checked_div(&a).unwrap().is_one());
    }

    #[test]
    fn abs_square_of_counterexample_coefficient() {
        let c = Scalar::ratio(-1, 2);
        assert_eq!(&c * &c.conj(), Scalar::ratio(1, 4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Scalar::i().conj(), s("0,-1"));
        assert_eq!(Scalar::ratio(3, 4).conj(), Scalar::ratio(3, 4));
        // (1+2i)(2-i) = 4+3i by direct expansion
        let a = s("1,2");
        let b = s("2,-1");
        assert_eq!(&a * &b, s("4,3"));
        assert_eq!((&a * &b).conj(), s("4,-3"));
        assert_eq!((&a * &b).conj(), a.conj() * b.conj());
    }

    #[test]
    fn literals_are_reduced() {
        assert_eq!(s("2/4"), Scalar::ratio(1, 2));
        assert_eq!(s("-6/3,4/8").literal(), "-2,1/2");
        assert_eq!(s("0").literal(), "0");
    }

    #[test]
    fn malformed_literals() {
        for bad in ["", "1/0", "1/-2", "a", "1/", "/2", "1,2,3", "--1", "1.5"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display() {
        assert_eq!(s("0,1").to_string(), "i");
        assert_eq!(s("0,-1").to_string(), "-i");
        assert_eq!(s("1,-2").to_string(), "1-2i");
        assert_eq!(s("-1/2,1/3").to_string(), "-1/2+(1/3)i");
        assert_eq!(s("5/7").to_string(), "5/7");
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
            .prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn conjugation_is_ring_involution(a in small_scalar(), b in small_scalar()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        }

        #[test]
        fn literal_round_trip(a in small_scalar()) {
            prop_assert_eq!(a.literal().parse::<Scalar>().unwrap(), a);
        }
    }
}
