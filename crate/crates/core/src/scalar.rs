//! Exact Gaussian-rational scalars `a + bi` with `a, b ∈ ℚ`.
//!
//! Every value is kept in canonical form (reduced fractions with positive
//! denominators, small values stored small), so equality and hashing are
//! structural.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rat,
    im: Rat,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational {
            re: Rat::from_big(re),
            im: Rat::from_big(im),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rat::default(),
            im: Rat::from_frac(1, 1),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_frac(n, 1)
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn from_frac(num: i64, den: i64) -> Self {
        GaussianRational {
            re: Rat::from_frac(num, den),
            im: Rat::default(),
        }
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        Self::new(re, im)
    }

    pub fn re(&self) -> BigRational {
        self.re.to_big()
    }

    pub fn im(&self) -> BigRational {
        self.im.to_big()
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
        GaussianRational {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// `|z|² = a² + b²`.
    pub fn norm_sqr(&self) -> BigRational {
        self.norm_rat().to_big()
    }

    fn norm_rat(&self) -> Rat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(GaussianRational {
                re: Rat::from_frac(1, 1).div(&self.re),
                im: Rat::default(),
            });
        }
        let n = self.norm_rat();
        Ok(GaussianRational {
            re: self.re.div(&n),
            im: self.im.neg().div(&n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Lossy conversion used only by the floating-point angle code.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational {
    re: a.re.add(&b.re),
    im: a.im.add(&b.im),
});
forward_binop!(Sub, sub, |a, b| GaussianRational {
    re: a.re.sub(&b.re),
    im: a.im.sub(&b.im),
});
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussianRational {
            re: a.re.mul(&b.re),
            im: Rat::default(),
        };
    }
    GaussianRational {
        re: a.re.mul(&b.re).sub(&a.im.mul(&b.im)),
        im: a.re.mul(&b.im).add(&a.im.mul(&b.re)),
    }
});

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Text form: `p`, `p/q`, `bi`, `p/q+r/si`, `p/q-r/si`. A unit imaginary
/// part is written with an explicit coefficient (`1/2+1i`), so output is
/// always accepted by the parser.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_ratio(f, &self.re.to_big());
        }
        if !self.re.is_zero() {
            write_ratio(f, &self.re.to_big())?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        write_ratio(f, &self.im.to_big())?;
        f.write_str("i")
    }
}

fn parse_ratio(s: &str, whole: &str) -> Result<BigRational> {
    let bad = || Error::Parse {
        context: String::new(),
        message: format!("malformed scalar {whole:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) if valid_int(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse {
            context: String::new(),
            message: format!("zero denominator in {whole:?}"),
        });
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s = text.trim();
        let bad = || Error::Parse {
            context: String::new(),
            message: format!("malformed scalar {text:?}"),
        };
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(parse_ratio(s, text)?.into());
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_ratio(&body[..k], text)?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_ratio(t, text)?,
        };
        Ok(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn field_operations() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("i") * q("i"), q("-1"));
        assert_eq!(q("2/3+1/3i").conj(), q("2/3-1/3i"));
        assert_eq!(q("1+i").checked_div(&q("1-i")).unwrap(), q("i"));
        assert_eq!(q("3/4") - q("3/4"), GaussianRational::zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            q("1").checked_div(&q("0")),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("-2/4"), q("-1/2"));
        assert_eq!(q("-3/6+4/8i").to_string(), "-1/2+1/2i");
    }

    #[test]
    fn parse_forms() {
        let z = q("1/2-3/4i");
        assert_eq!(z.re(), BigRational::new(1.into(), 2.into()));
        assert_eq!(z.im(), BigRational::new((-3).into(), 4.into()));
        assert_eq!(q("7"), GaussianRational::from_int(7));
        assert_eq!(q("-i"), -GaussianRational::i());
        assert_eq!(q("2i"), GaussianRational::from_int(2) * GaussianRational::i());
        assert_eq!(q("-1-i").to_string(), "-1-1i");
        for bad in ["", "1.5", "1/0", "abc", "1/2/3", "i i", "1+", "0x3"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-5", "3/7", "1i", "-2/3i", "1/2+1i", "-4-9/2i"] {
            let z = q(s);
            assert_eq!(q(&z.to_string()), z);
        }
    }
}
