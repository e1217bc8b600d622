use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact rational coordinate.
///
/// The value is always kept in canonical reduced form (positive
/// denominator, coprime numerator), which `num-rational` guarantees for
/// every constructor we expose. Arithmetic never rounds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coord(BigRational);

impl Coord {
    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn int(v: i64) -> Self {
        Coord(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::Argument("zero denominator".into()));
        }
        Ok(Coord(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coord(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Lossy conversion, for rendering and heuristics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Coord {
        Coord(self.0.abs())
    }

    pub fn one() -> Self {
        Coord(BigRational::one())
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Self {
        Coord::int(v)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coord {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional leading minus on the numerator.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Argument(format!("not a rational number: {s:?}"));
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Coord(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let n = parse_int(n)?;
                if d.starts_with('-') {
                    return Err(bad());
                }
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Argument(format!("zero denominator in {s:?}")));
                }
                Ok(Coord(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Coord> for &Coord {
            type Output = Coord;
            fn $m(self, rhs: &Coord) -> Coord {
                Coord((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Coord> for Coord {
            type Output = Coord;
            fn $m(self, rhs: Coord) -> Coord {
                Coord(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Coord> for Coord {
            type Output = Coord;
            fn $m(self, rhs: &Coord) -> Coord {
                Coord(self.0.$m(&rhs.0))
            }
        }
        impl $tr<i64> for &Coord {
            type Output = Coord;
            fn $m(self, rhs: i64) -> Coord {
                self.$m(&Coord::int(rhs))
            }
        }
        impl $tr<i64> for Coord {
            type Output = Coord;
            fn $m(self, rhs: i64) -> Coord {
                (&self).$m(&Coord::int(rhs))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_are_canonical() {
        for (inp, out) in [
            ("3", "3"),
            ("-4", "-4"),
            ("6/4", "3/2"),
            ("-2/6", "-1/3"),
            ("10/5", "2"),
            ("0/7", "0"),
        ] {
            assert_eq!(inp.parse::<Coord>().unwrap().to_string(), out);
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "a", "1/0", "1/-2", "1.5", "--1", "1/", "/2", "+3"] {
            assert!(s.parse::<Coord>().is_err(), "{s}");
        }
    }

    #[test]
    fn exact_arithmetic() {
        let a = Coord::ratio(1, 3).unwrap();
        let b = Coord::ratio(2, 3).unwrap();
        assert_eq!(&a + &b, Coord::int(1));
        assert_eq!((&a * 3).to_i64(), Some(1));
        assert!(a < b);
        assert_eq!(Coord::ratio(10, 11).unwrap() + 5, "65/11".parse().unwrap());
    }
}
