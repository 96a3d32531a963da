//! Exact scalars: rationals, Gaussian rationals, and the [`Scalar`] trait that
//! the linear algebra and Lie algebra code is generic over.
//!
//! Text grammar (shared with the JSON documents):
//! rationals print as `p/q` with `q` omitted when it is 1 and the sign on the
//! numerator; Gaussian rationals print as `a+b*i` / `a-b*i` where `a` and `b`
//! are rationals in the grammar above and both parts are always present.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which coefficient ring a matrix or algebra lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Rational,
    Gaussian,
    Polynomial,
}

impl Ring {
    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Polynomial)
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::Rational => "rational",
            Ring::Gaussian => "gaussian",
            Ring::Polynomial => "polynomial",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact ring element. Fields additionally return `Some` from [`Scalar::inverse`]
/// for every non-zero element.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const RING: Ring;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r))
    }
}

/// Arbitrary-precision rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: i32) -> Self {
        if exp >= 0 {
            Rational(num_traits::pow(self.0.clone(), exp as usize))
        } else {
            let r = self.recip().expect("negative power of zero");
            Rational(num_traits::pow(r.0, (-exp) as usize))
        }
    }

    /// Exact square root when `self` is the square of a non-negative rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().to_biguint()?;
        let d = self.denom().to_biguint()?;
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &rn * &rn == n && &rd * &rd == d {
            Some(Rational(BigRational::new(BigInt::from(rn), BigInt::from(rd))))
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from(n as i64)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected digits, found {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (n, d) = match body.split_once('/') {
            Some((n, d)) => (parse_digits(n)?, parse_digits(d)?),
            None => (parse_digits(body)?, BigInt::one()),
        };
        let n = if neg { -n } else { n };
        Rational::from_bigints(n, d)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Scalar for Rational {
    const RING: Ring = Ring::Rational;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(Rational::from(re), Rational::from(im))
    }

    pub fn real(re: Rational) -> Self {
        Gaussian::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        Gaussian::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Gaussian::one();
        for _ in 0..exp {
            acc = acc.times(self);
        }
        acc
    }

    /// Principal square root (non-negative real part; non-negative imaginary
    /// part on the negative real axis) when it is again a Gaussian rational.
    pub fn sqrt(&self) -> Option<Self> {
        let modulus = self.norm_sqr().sqrt()?;
        let two = Rational::from(2);
        let re = ((&modulus + &self.re) / &two).sqrt()?;
        let im = ((&modulus - &self.re) / &two).sqrt()?;
        let im = if self.im.is_negative() { -im } else { im };
        Some(Gaussian::new(re, im))
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", self.re, sign, self.im.abs())
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_suffix("*i")
            .ok_or_else(|| Error::Parse(format!("gaussian {s:?} must end in *i")))?;
        // The separating sign is the last '+' or '-' after the first character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| Error::Parse(format!("gaussian {s:?} lacks an explicit sign")))?;
        let re: Rational = body[..split].parse()?;
        let im_abs = &body[split + 1..];
        if im_abs.starts_with('-') {
            return Err(Error::Parse(format!("malformed gaussian {s:?}")));
        }
        let im: Rational = im_abs.parse()?;
        let im = if &body[split..=split] == "-" { -im } else { im };
        Ok(Gaussian::new(re, im))
    }
}

impl Scalar for Gaussian {
    const RING: Ring = Ring::Gaussian;

    fn zero() -> Self {
        Gaussian::default()
    }
    fn one() -> Self {
        Gaussian::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        Gaussian::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn minus(&self, o: &Self) -> Self {
        Gaussian::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn times(&self, o: &Self) -> Self {
        Gaussian::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    fn negate(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }
    fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let inv = n.recip()?;
        Some(Gaussian::new(&self.re * &inv, -(&self.im * &inv)))
    }
    fn from_rational(r: &Rational) -> Self {
        Gaussian::real(r.clone())
    }
}

/// Ordering helper used when reporting sets deterministically.
pub fn cmp_rational(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_grammar() {
        assert_eq!(q(3, 1).to_string(), "3");
        assert_eq!(q(-6, 4).to_string(), "-3/2");
        assert_eq!(q(5, -10).to_string(), "-1/2");
        assert_eq!("-3/2".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!("0".parse::<Rational>().unwrap(), Rational::zero());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("+1".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn gaussian_grammar() {
        let z = Gaussian::new(q(1, 2), q(-3, 1));
        assert_eq!(z.to_string(), "1/2-3*i");
        assert_eq!(Gaussian::from_ints(-2, 0).to_string(), "-2+0*i");
        for s in ["1/2-3*i", "-2+0*i", "0+1*i", "-7/3-5/4*i"] {
            assert_eq!(s.parse::<Gaussian>().unwrap().to_string(), s);
        }
        assert!("3".parse::<Gaussian>().is_err());
        assert!("3+-1*i".parse::<Gaussian>().is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-1, 1).sqrt(), None);
        // principal root of 2i is 1+i
        assert_eq!(Gaussian::from_ints(0, 2).sqrt(), Some(Gaussian::from_ints(1, 1)));
        assert_eq!(Gaussian::from_ints(-4, 0).sqrt(), Some(Gaussian::from_ints(0, 2)));
        assert_eq!(Gaussian::from_ints(0, 4).sqrt(), None);
    }

    #[test]
    fn zeta_powers() {
        let z = Gaussian::from_ints(1, 1);
        assert_eq!(z.pow(2), Gaussian::from_ints(0, 2));
        assert_eq!(z.pow(3), Gaussian::from_ints(-2, 2));
        assert_eq!(z.norm_sqr().pow(2), q(4, 1));
        assert_eq!(z.conj().conj(), z);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_gaussian() -> impl Strategy<Value = Gaussian> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| Gaussian::new(a, b))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }

        #[test]
        fn gaussian_field_axioms(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.times(&b), b.times(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.times(&a.inverse().unwrap()), Gaussian::one());
            }
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.times(&a.conj()), Gaussian::real(a.norm_sqr()));
            prop_assert_eq!(a.to_string().parse::<Gaussian>().unwrap(), a);
        }
    }
}
