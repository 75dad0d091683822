//! Exact rationals with power-of-two denominators.
//!
//! Every multiplicity and every Hurwitz number in this crate is of the form
//! `n / 2^k`, so a dedicated dyadic type keeps all arithmetic closed and
//! exact.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The value `num / 2^exp`, stored with `num` odd unless the value is an
/// integer (`exp == 0`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num.is_even() {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn zero() -> Self {
        Dyadic::new(BigInt::zero(), 0)
    }

    pub fn one() -> Self {
        Dyadic::new(BigInt::one(), 0)
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        Dyadic::new(n.into(), 0)
    }

    /// `2^k`, with `k` possibly negative.
    pub fn two_pow(k: i64) -> Self {
        if k >= 0 {
            Dyadic::new(BigInt::one() << (k as usize), 0)
        } else {
            Dyadic::new(BigInt::one(), (-k) as u32)
        }
    }

    /// Builds `num / den` if the reduced denominator is a power of two.
    pub fn ratio(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotDyadic(num.to_string(), den.to_string()));
        }
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        let num = &num / &g;
        let den = (&den / &g).magnitude().clone();
        let exp = den.trailing_zeros().unwrap_or(0);
        if den != BigUint::one() << exp as usize {
            return Err(Error::NotDyadic(num.to_string(), den.to_string()));
        }
        Ok(Dyadic::new(num, exp as u32))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> BigUint {
        BigUint::one() << self.exp as usize
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |s: &str| Error::Parse(format!("invalid dyadic rational `{s}`"));
        match s.split_once('/') {
            None => {
                let num: BigInt = s.trim().parse().map_err(|_| bad(s))?;
                Ok(Dyadic::new(num, 0))
            }
            Some((n, d)) => {
                let num: BigInt = n.trim().parse().map_err(|_| bad(s))?;
                let den: BigInt = d.trim().parse().map_err(|_| bad(s))?;
                Dyadic::ratio(num, den)
            }
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let a = &self.num << (exp - self.exp) as usize;
        let b = &rhs.num << (exp - rhs.exp) as usize;
        Dyadic::new(a + b, exp)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs.clone())
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(mut self) -> Dyadic {
        self.num = -self.num;
        self
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| &acc + &x)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp) as usize;
        let b = &other.num << (exp - other.exp) as usize;
        a.cmp(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dy(num: i64, den: u64) -> Dyadic {
        Dyadic::ratio(BigInt::from(num), BigInt::from(den)).unwrap()
    }

    #[test]
    fn display_lowest_terms() {
        assert_eq!(dy(1, 2).to_string(), "1/2");
        assert_eq!(dy(2, 4).to_string(), "1/2");
        assert_eq!(dy(6, 2).to_string(), "3");
        assert_eq!(dy(-3, 8).to_string(), "-3/8");
        assert_eq!(Dyadic::zero().to_string(), "0");
    }

    #[test]
    fn ratio_rejects_non_dyadic() {
        assert!(Dyadic::ratio(BigInt::from(1), BigInt::from(3)).is_err());
        assert!(Dyadic::ratio(BigInt::from(2), BigInt::from(6)).is_err());
        // 3/6 and 6/3 reduce to dyadics, so they are fine.
        assert_eq!(dy(3, 6), dy(1, 2));
        assert_eq!(dy(6, 3), Dyadic::from_integer(2));
    }

    #[test]
    fn two_pow_negative() {
        assert_eq!(Dyadic::two_pow(-2).to_string(), "1/4");
        assert_eq!(Dyadic::two_pow(3).to_string(), "8");
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&dy(1, 2) + &dy(1, 2), Dyadic::one());
        assert_eq!(&dy(3, 4) - &dy(1, 4), dy(1, 2));
        assert_eq!(&dy(1, 2) * &dy(1, 4), dy(1, 8));
        assert!(dy(1, 2) < Dyadic::one());
        assert!(dy(-1, 2) < Dyadic::zero());
    }

    proptest! {
        #[test]
        fn roundtrip_parse(n in -1000i64..1000, e in 0u32..12) {
            let d = Dyadic::new(BigInt::from(n), e);
            let back: Dyadic = d.to_string().parse().unwrap();
            prop_assert_eq!(back, d);
        }

        #[test]
        fn add_commutes(a in -500i64..500, ea in 0u32..8, b in -500i64..500, eb in 0u32..8) {
            let x = Dyadic::new(BigInt::from(a), ea);
            let y = Dyadic::new(BigInt::from(b), eb);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
        }
    }
}
