//! The integral group ring `Z[G]` of the Klein four-group and its action on
//! the multiplicative group `E^×`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{ExtElement, GaloisElement};
use crate::scalar::Scalar;

/// `c0·id + c1·σ1 + c2·σ2 + c3·σ1σ2`, coefficients indexed like
/// [`GaloisElement::index`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement<I> {
    c: [I; 4],
}

impl<I: Integer + Signed + Clone> GroupRingElement<I> {
    pub fn new(c0: I, c1: I, c2: I, c3: I) -> Self {
        Self {
            c: [c0, c1, c2, c3],
        }
    }

    pub fn from_coeffs(c: [I; 4]) -> Self {
        Self { c }
    }

    pub fn coeffs(&self) -> &[I; 4] {
        &self.c
    }

    pub fn coeff(&self, g: GaloisElement) -> &I {
        &self.c[g.index()]
    }

    pub fn zero() -> Self {
        Self::from_coeffs([I::zero(), I::zero(), I::zero(), I::zero()])
    }

    pub fn one() -> Self {
        Self::basis(GaloisElement::Id)
    }

    pub fn basis(g: GaloisElement) -> Self {
        let mut c = [I::zero(), I::zero(), I::zero(), I::zero()];
        c[g.index()] = I::one();
        Self::from_coeffs(c)
    }

    /// `1 − g`
    pub fn one_minus(g: GaloisElement) -> Self {
        &Self::one() - &Self::basis(g)
    }

    /// `1 + g`
    pub fn one_plus(g: GaloisElement) -> Self {
        &Self::one() + &Self::basis(g)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Applies `self` to a unit `γ`:
    /// `γ^c0 · σ1(γ)^c1 · σ2(γ)^c2 · σ1σ2(γ)^c3`.
    pub fn act<T: Scalar>(&self, e: &ExtElement<T>) -> Result<ExtElement<T>> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut acc = e.config().one();
        for g in GaloisElement::ALL {
            let k = &self.c[g.index()];
            if !k.is_zero() {
                acc = &acc * &e.galois(g).pow(k)?;
            }
        }
        Ok(acc)
    }
}

impl<I: Integer + Signed + Clone> Add for &GroupRingElement<I> {
    type Output = GroupRingElement<I>;

    fn add(self, rhs: Self) -> GroupRingElement<I> {
        GroupRingElement::from_coeffs([0, 1, 2, 3].map(|i| self.c[i].clone() + rhs.c[i].clone()))
    }
}

impl<I: Integer + Signed + Clone> Sub for &GroupRingElement<I> {
    type Output = GroupRingElement<I>;

    fn sub(self, rhs: Self) -> GroupRingElement<I> {
        GroupRingElement::from_coeffs([0, 1, 2, 3].map(|i| self.c[i].clone() - rhs.c[i].clone()))
    }
}

impl<I: Integer + Signed + Clone> Neg for &GroupRingElement<I> {
    type Output = GroupRingElement<I>;

    fn neg(self) -> GroupRingElement<I> {
        GroupRingElement::from_coeffs(self.c.clone().map(|x| -x))
    }
}

impl<I: Integer + Signed + Clone> Mul for &GroupRingElement<I> {
    type Output = GroupRingElement<I>;

    fn mul(self, rhs: Self) -> GroupRingElement<I> {
        let [c0, c1, c2, c3] = &self.c;
        let [d0, d1, d2, d3] = &rhs.c;
        let p = |a: &I, b: &I| a.clone() * b.clone();
        GroupRingElement::new(
            p(c0, d0) + p(c1, d1) + p(c2, d2) + p(c3, d3),
            p(c0, d1) + p(c1, d0) + p(c2, d3) + p(c3, d2),
            p(c0, d2) + p(c1, d3) + p(c2, d0) + p(c3, d1),
            p(c0, d3) + p(c1, d2) + p(c2, d1) + p(c3, d0),
        )
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<I: Integer + Signed + Clone> $tr for GroupRingElement<I> {
            type Output = GroupRingElement<I>;

            fn $method(self, rhs: Self) -> GroupRingElement<I> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<I: Integer + Signed + Clone + fmt::Display> fmt::Display for GroupRingElement<I> {
    /// Renders e.g. `1 - s1 - s2 + s12`; the zero element renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in GaloisElement::ALL {
            let k = &self.c[g.index()];
            if k.is_zero() {
                continue;
            }
            match (first, k.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = k.abs();
            let name = if g == GaloisElement::Id {
                "1"
            } else {
                g.name()
            };
            if mag.is_one() {
                f.write_str(name)?;
            } else if g == GaloisElement::Id {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
