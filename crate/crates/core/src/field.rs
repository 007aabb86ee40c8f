//! Exact ground fields.
//!
//! Everything in the crate is generic over [`Field`]. Two implementations
//! ship: [`Rational`] (the default, ℚ) and [`GaussianRational`] (ℚ(i)),
//! selected on the command line with `--field q` / `--field qi`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_rational(q: &Rational) -> Self;

    /// Parses the textual form used by the file formats.
    fn parse_scalar(s: &str) -> Option<Self>;

    /// `Some(i)` when the field contains a square root of −1.
    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn is_one_value(&self) -> bool {
        *self == Self::one()
    }
}

/// Parses `"p"` or `"p/q"` with decimal digits and an optional leading minus.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str, signed: bool| {
        let body = if signed {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return None;
    }
    let n = BigInt::from_str(num).ok()?;
    let d = match den {
        Some(d) => {
            if !digits(d, false) {
                return None;
            }
            BigInt::from_str(d).ok()?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl Field for Rational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &Rational| -> String {
            if im.is_one() {
                "i".to_string()
            } else {
                format!("{im}i")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            if (-self.im.clone()).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{}", im_part(&self.im))
            }
        } else if self.im.is_negative() {
            write!(f, "{}-{}", self.re, im_part(&-self.im.clone()))
        } else {
            write!(f, "{}+{}", self.re, im_part(&self.im))
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = Self;
    fn add(mut self, rhs: &'a Self) -> Self {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a GaussianRational> for GaussianRational {
    type Output = Self;
    fn sub(mut self, rhs: &'a Self) -> Self {
        self -= rhs;
        self
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussianRational::new(re, im)
    }
}

impl<'a> AddAssign<&'a GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &'a Self) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> SubAssign<&'a GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &'a Self) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> MulAssign<&'a GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &'a Self) {
        *self = self.clone() * rhs;
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussianRational::new(&self.re / &norm, -(&self.im / &norm))
    }

    fn from_rational(q: &Rational) -> Self {
        GaussianRational::new(q.clone(), Rational::zero())
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(s).map(|re| GaussianRational::new(re, Rational::zero()));
        };
        // split "a+b" / "a-b" at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        let (re_txt, im_txt) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let im_txt = im_txt.strip_prefix('+').unwrap_or(im_txt);
        let im = match im_txt {
            "" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rational(t)?,
        };
        Some(GaussianRational::new(parse_rational(re_txt)?, im))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(GaussianRational::new(Rational::zero(), Rational::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/2"), Some(q(3, 2)));
        assert_eq!(parse_rational("-4"), Some(q(-4, 1)));
        assert_eq!(parse_rational("6/4"), Some(q(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("0").unwrap().to_string(), "0");
    }

    #[test]
    fn gaussian_text_roundtrip() {
        for s in [
            "0",
            "3/2",
            "i",
            "-i",
            "2i",
            "-1/3i",
            "1+i",
            "1-i",
            "-3/2-1/2i",
            "5+7/3i",
        ] {
            let z = GaussianRational::parse_scalar(s).unwrap();
            assert_eq!(z.to_string(), s, "{s}");
        }
        assert!(GaussianRational::parse_scalar("1+/2i").is_none());
    }

    #[test]
    fn gaussian_inverse() {
        let z = GaussianRational::parse_scalar("3-4i").unwrap();
        let w = z.inv();
        assert_eq!(z * &w, GaussianRational::one());
        let i = GaussianRational::imaginary_unit().unwrap();
        assert_eq!(i.clone() * &i, -GaussianRational::one());
    }
}
