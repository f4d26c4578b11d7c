//! Exact base-field scalars.
//!
//! Everything above this module is written against [`Scalar`], a thin
//! extension of the `num-traits` numeric tower with the one operation the
//! field layer needs beyond field arithmetic: an exact square root test.
//! The trait is implemented for every `Ratio<T>` over a signed integer type
//! with exact integer roots, which covers `BigRational` (the default,
//! arbitrary precision) and fixed-width ratios such as `Ratio<i64>`.
//!
//! Fixed-width ratios overflow silently in release builds; use them only for
//! small, bounded computations.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

/// An exact field scalar of characteristic zero.
pub trait Scalar:
    Clone + Debug + Display + Eq + Hash + Num + Signed + FromStr + Send + Sync + 'static
{
    /// Returns the nonnegative square root if `self` is the square of a scalar.
    fn exact_sqrt(&self) -> Option<Self>;

    /// Embeds a machine integer.
    fn from_int(v: i64) -> Self;

    /// True when the value has denominator one.
    fn is_integral(&self) -> bool;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Debug
        + Display
        + Hash
        + Integer
        + Signed
        + Roots
        + FromPrimitive
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn exact_sqrt(&self) -> Option<Self> {
        let numer = self.numer();
        let denom = self.denom();
        if numer.is_negative() {
            return None;
        }
        let rn = integer_sqrt(numer)?;
        let rd = integer_sqrt(denom)?;
        // gcd(n, d) = 1 implies gcd(sqrt n, sqrt d) = 1, so this is already reduced.
        Some(Ratio::new_raw(rn, rd))
    }

    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Exact integer square root of a nonnegative integer, or `None` if it is not
/// a perfect square.
pub fn integer_sqrt<T: Integer + Roots + Clone>(n: &T) -> Option<T> {
    if *n < T::zero() {
        return None;
    }
    let r = n.sqrt();
    if r.clone() * r.clone() == *n {
        Some(r)
    } else {
        None
    }
}

/// Returns the nonnegative rational square root of `x` when one exists.
pub fn is_square<T: Scalar>(x: &T) -> Option<T> {
    x.exact_sqrt()
}

/// Base-field operations, used by the checked dispatcher [`rational_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Checked scalar arithmetic. Binary operations require `y`; unary ones ignore it.
pub fn rational_arith<T: Scalar>(op: RationalOp, x: &T, y: Option<&T>) -> Result<T> {
    let rhs = || y.ok_or(Error::MissingOperand);
    Ok(match op {
        RationalOp::Add => x.clone() + rhs()?.clone(),
        RationalOp::Sub => x.clone() - rhs()?.clone(),
        RationalOp::Mul => x.clone() * rhs()?.clone(),
        RationalOp::Div => checked_div(x, rhs()?)?,
        RationalOp::Neg => -x.clone(),
        RationalOp::Inv => checked_inv(x)?,
    })
}

pub fn checked_div<T: Scalar>(x: &T, y: &T) -> Result<T> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x.clone() / y.clone())
}

pub fn checked_inv<T: Scalar>(x: &T) -> Result<T> {
    checked_div(&T::one(), x)
}

/// Parses the text form `p/q` or `p`: decimal integers, an optional leading
/// `-` on the numerator, and a nonzero denominator. Surrounding whitespace is
/// ignored; nothing else is accepted.
pub fn parse_rational<T: Scalar>(src: &str) -> Result<T> {
    let s = src.trim();
    let bad = || Error::Parse {
        offset: 0,
        message: format!("invalid rational `{s}`"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if let Some(d) = den {
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if d.bytes().all(|b| b == b'0') {
            return Err(Error::DivisionByZero);
        }
    }
    s.parse::<T>().map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            rational_arith(RationalOp::Add, &q(1, 2), Some(&q(1, 3))).unwrap(),
            q(5, 6)
        );
        assert_eq!(
            rational_arith(RationalOp::Inv, &q(-3, 7), None).unwrap(),
            q(-7, 3)
        );
        assert_eq!(
            rational_arith(RationalOp::Div, &q(5, 1), Some(&q(0, 1))),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            rational_arith(RationalOp::Mul, &q(5, 1), None),
            Err(Error::MissingOperand)
        );
    }

    #[test]
    fn square_examples() {
        assert_eq!(is_square(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(is_square(&q(2, 1)), None);
        assert_eq!(is_square(&q(-4, 1)), None);
        assert_eq!(is_square(&q(0, 1)), Some(q(0, 1)));
        assert_eq!(is_square(&q(8, 18)), Some(q(2, 3)));
    }

    #[test]
    fn small_ratio_type_works() {
        let x = Ratio::<i64>::new(49, 81);
        assert_eq!(x.exact_sqrt(), Some(Ratio::new(7, 9)));
    }

    #[test]
    fn parse_text_forms() {
        assert_eq!(parse_rational::<Rational>("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational::<Rational>(" 12 ").unwrap(), q(12, 1));
        assert_eq!(
            parse_rational::<Rational>("1/0"),
            Err(Error::DivisionByZero)
        );
        for bad in ["", "-", "+3", "1/-2", "1.5", "2/", "/3", "1 / 2", "x"] {
            assert!(parse_rational::<Rational>(bad).is_err(), "{bad}");
        }
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in rational(), y in rational(), z in rational()) {
            prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * checked_inv(&x).unwrap(), Rational::from_int(1));
            }
        }

        #[test]
        fn square_root_of_square(x in rational()) {
            prop_assert_eq!(is_square(&(x.clone() * x.clone())), Some(x.abs()));
        }

        #[test]
        fn square_root_squares_back(x in rational()) {
            if let Some(r) = is_square(&x) {
                prop_assert_eq!(r.clone() * r, x);
            }
        }

        #[test]
        fn text_form_roundtrip(x in rational()) {
            prop_assert_eq!(parse_rational::<Rational>(&x.to_string()).unwrap(), x);
        }
    }
}
