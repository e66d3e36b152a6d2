//! Exact scalars: Gaussian rationals `a + b·i` with arbitrary-precision
//! rational parts.
//!
//! Every constant that shows up in the structure equations of the models we
//! compute with (i/2, -i, 1/(1-γ), ...) lies in ℚ(i), so all arithmetic in
//! this crate is done here, exactly. There is no floating-point mode.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element of ℚ(i), stored as canonical real and imaginary rationals.
///
/// `BigRational` keeps numerator and denominator coprime with a positive
/// denominator, so equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    /// Real rational `p/q`. Panics if `q == 0`.
    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// Purely imaginary rational `(p/q)·i`. Panics if `q == 0`.
    pub fn imaginary(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(p), BigInt::from(q)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
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
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact test of `|z| < 1`, i.e. `|z|² < 1`.
    pub fn abs_lt_one(&self) -> bool {
        self.norm_sqr() < BigRational::one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $impl_fn:expr) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $impl_fn(self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, GaussianRational::add_ref);
impl_binop!(Mul, mul, GaussianRational::mul_ref);
impl_binop!(Sub, sub, |a: &GaussianRational, b: &GaussianRational| a
    .add_ref(&-b));
impl_binop!(Div, div, |a: &GaussianRational, b: &GaussianRational| a
    .mul_ref(&b.inv().expect("division by zero Gaussian rational")));

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = self.mul_ref(rhs);
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical text form, always parseable by `FromStr`:
    /// `"0"`, `"3/4"`, `"-2*i"`, `"1/2-3/4*i"`. Signs live in numerators;
    /// denominators are positive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rat(&self.im));
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", fmt_rat(&self.re), fmt_rat(&-self.im.clone()))
        } else {
            write!(f, "{}+{}*i", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Uniform small rational with numerator in `[-bound, bound]` and
/// denominator in `[1, 3]`. Used by randomized suites; exactness means the
/// draws only need to cover interesting small values.
pub fn random_small_rational<R: rand::Rng>(rng: &mut R, bound: i64) -> BigRational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=3);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Random Gaussian rational with small real and imaginary parts.
pub fn random_small<R: rand::Rng>(rng: &mut R, bound: i64) -> GaussianRational {
    GaussianRational::new(
        random_small_rational(rng, bound),
        random_small_rational(rng, bound),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid Gaussian rational: {}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

pub fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let bad = || ParseScalarError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseScalarError(s.to_string()));
        }
        // Split at the sign that separates real and imaginary parts: the
        // last '+' or '-' that is not the leading sign.
        let bytes = s.as_bytes();
        let mut split = None;
        for (idx, b) in bytes.iter().enumerate().skip(1) {
            if *b == b'+' || *b == b'-' {
                split = Some(idx);
            }
        }
        let parse_part = |part: &str| -> Result<(BigRational, bool), ParseScalarError> {
            // returns (value, is_imaginary)
            if let Some(core) = part.strip_suffix("*i") {
                Ok((parse_rational(core)?, true))
            } else {
                Ok((parse_rational(part)?, false))
            }
        };
        match split {
            Some(idx) if s.ends_with("*i") && idx < s.len() - 2 => {
                let (re_s, im_s) = (&s[..idx], &s[idx..]);
                let (re, re_imag) = parse_part(re_s)?;
                let (im, im_imag) = parse_part(im_s)?;
                if re_imag || !im_imag {
                    return Err(ParseScalarError(s.to_string()));
                }
                Ok(Self::new(re, im))
            }
            _ => {
                let (v, imag) = parse_part(s)?;
                if imag {
                    Ok(Self::new(BigRational::zero(), v))
                } else {
                    Ok(Self::new(v, BigRational::zero()))
                }
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
