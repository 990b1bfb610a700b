//! Exact scalars: arbitrary-precision rationals and Gaussian rationals `a + bi`.
//!
//! Both types are kept in canonical form at all times (reduced fraction,
//! positive denominator), so structural equality is value equality.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    /// `numer / denom`, reduced. Fails when `denom == 0`.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, Error> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactScalar(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactScalar(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    /// The integer value, when this scalar is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactScalar(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar(r)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with optional surrounding whitespace.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedRational(String::from(s));
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(ExactScalar(BigRational::new(num, den)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(&rhs.0))
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
        impl $assign_tr<&ExactScalar> for ExactScalar {
            fn $assign(&mut self, rhs: &ExactScalar) {
                self.0 = (&self.0).$method(&rhs.0);
            }
        }
        impl $assign_tr for ExactScalar {
            fn $assign(&mut self, rhs: ExactScalar) {
                self.0 = (&self.0).$method(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

/// A Gaussian rational `re + im·i`, an element of ℚ(i).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianScalar {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

/// Field operation selector for [`scalar_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussianScalar {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        GaussianScalar { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GaussianScalar::real(ExactScalar::one())
    }

    pub fn i() -> Self {
        GaussianScalar::new(ExactScalar::zero(), ExactScalar::one())
    }

    pub fn real(re: ExactScalar) -> Self {
        GaussianScalar { re, im: ExactScalar::zero() }
    }

    pub fn imag(im: ExactScalar) -> Self {
        GaussianScalar { re: ExactScalar::zero(), im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianScalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> ExactScalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        GaussianScalar { re: &self.re * k, im: &self.im * k }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        let n = rhs.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(GaussianScalar { re: num.re.checked_div(&n)?, im: num.im.checked_div(&n)? })
    }
}

/// Exact field arithmetic in ℚ(i). Division by zero is reported, never panics.
pub fn scalar_arith(a: &GaussianScalar, b: &GaussianScalar, kind: ArithKind) -> Result<GaussianScalar, Error> {
    Ok(match kind {
        ArithKind::Add => a + b,
        ArithKind::Sub => a - b,
        ArithKind::Mul => a * b,
        ArithKind::Div => a.checked_div(b)?,
    })
}

/// Complex conjugate `re − im·i`.
pub fn scalar_conj(a: &GaussianScalar) -> GaussianScalar {
    a.conj()
}

impl From<ExactScalar> for GaussianScalar {
    fn from(re: ExactScalar) -> Self {
        GaussianScalar::real(re)
    }
}

impl From<i64> for GaussianScalar {
    fn from(n: i64) -> Self {
        GaussianScalar::real(ExactScalar::from(n))
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => {
                write!(f, "{} - {}i", self.re, self.im.abs())
            }
            (false, false) => write!(f, "{} + {}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&GaussianScalar> for &GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, rhs: &GaussianScalar) -> GaussianScalar {
        GaussianScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussianScalar> for &GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, rhs: &GaussianScalar) -> GaussianScalar {
        GaussianScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussianScalar> for &GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, rhs: &GaussianScalar) -> GaussianScalar {
        GaussianScalar { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Add for GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, rhs: GaussianScalar) -> GaussianScalar {
        &self + &rhs
    }
}

impl Sub for GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, rhs: GaussianScalar) -> GaussianScalar {
        &self - &rhs
    }
}

impl Mul for GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, rhs: GaussianScalar) -> GaussianScalar {
        &self * &rhs
    }
}

impl AddAssign<&GaussianScalar> for GaussianScalar {
    fn add_assign(&mut self, rhs: &GaussianScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianScalar> for GaussianScalar {
    fn sub_assign(&mut self, rhs: &GaussianScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar { re: -&self.re, im: -&self.im }
    }
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for ExactScalar {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_str(self)
        }
    }

    impl<'de> Deserialize<'de> for ExactScalar {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let s = String::deserialize(d)?;
            s.parse().map_err(D::Error::custom)
        }
    }

    #[derive(Serialize, Deserialize)]
    struct GaussianRepr {
        re: ExactScalar,
        im: ExactScalar,
    }

    impl Serialize for GaussianScalar {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            GaussianRepr { re: self.re.clone(), im: self.im.clone() }.serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for GaussianScalar {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            let r = GaussianRepr::deserialize(d)?;
            Ok(GaussianScalar { re: r.re, im: r.im })
        }
    }
}
