//! Rationals with an `i64` fast path.
//!
//! Values that fit in `Ratio<i64>` are always stored small, so the
//! representation is canonical and derived equality/hashing are sound.
//! Overflowing operations are redone in `BigRational`.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Rat {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Default for Rat {
    fn default() -> Self {
        Rat::Small(Ratio::zero())
    }
}

fn big(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Rat {
    pub fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(r),
        }
    }

    pub fn from_frac(num: i64, den: i64) -> Rat {
        Rat::from_big(BigRational::new(num.into(), den.into()))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(r) => big(r),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(r) if r.is_one())
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_positive(),
            Rat::Big(r) => r.is_positive(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Rat::Big(r) => r.to_f64().unwrap_or_else(|| {
                let n = r.numer().to_f64().unwrap_or(f64::NAN);
                let d = r.denom().to_f64().unwrap_or(f64::NAN);
                n / d
            }),
        }
    }

    fn combine(
        &self,
        rhs: &Rat,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        wide: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, rhs) {
            if let Some(r) = small(a, b) {
                if *r.numer() != i64::MIN {
                    return Rat::Small(r);
                }
            }
        }
        Rat::from_big(wide(&self.to_big(), &rhs.to_big()))
    }

    pub fn add(&self, rhs: &Rat) -> Rat {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Rat) -> Rat {
        if rhs.is_zero() {
            return self.clone();
        }
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    pub fn mul(&self, rhs: &Rat) -> Rat {
        if self.is_zero() || rhs.is_zero() {
            return Rat::default();
        }
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    /// Panics on a zero divisor; callers check first.
    pub fn div(&self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        self.combine(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }

    pub fn neg(&self) -> Rat {
        match self {
            // i64::MIN numerators are never stored small, so this cannot overflow.
            Rat::Small(r) => Rat::Small(-*r),
            Rat::Big(r) => Rat::from_big(-r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Rat::from_frac(i64::MAX, 1);
        let sq = m.mul(&m);
        assert!(matches!(sq, Rat::Big(_)));
        let back = sq.div(&m);
        assert_eq!(back, m);
        assert!(matches!(back, Rat::Small(_)));
        let min = Rat::from_big(BigRational::from_integer(i64::MIN.into()));
        assert!(matches!(min, Rat::Big(_)));
        assert_eq!(min.neg().neg(), min);
    }

    #[test]
    fn small_arithmetic() {
        let (a, b) = (Rat::from_frac(1, 2), Rat::from_frac(1, 3));
        assert_eq!(a.add(&b), Rat::from_frac(5, 6));
        assert_eq!(a.sub(&a), Rat::default());
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.div(&b), Rat::from_frac(3, 2));
    }
}
