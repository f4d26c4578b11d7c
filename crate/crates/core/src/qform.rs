//! Values of the binary form `x² − a·y²` with `x, y ∈ F(√b)`.
//!
//! Whenever such a value `f` lands in `F^×` it factors as
//! `f = (x1² − a·y1²)·(x2² − ab·y2²)` with `xi, yi ∈ F`; [`qform_decompose`]
//! produces the four rationals. The generic case is the norm identity
//! `N_{E/E3}(e) = N_{E1/F}(γ1)·N_{E2/F}(γ2)` for `E = F(√a, √ab)`, whose
//! subfield `E3` is `F(√b)`.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{write_terms, BiquadConfig};
use crate::hilbert90::kernel_decompose;
use crate::scalar::Scalar;

/// `u + v·√b`. `b` need not be a nonsquare.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExtElement<T> {
    pub u: T,
    pub v: T,
    pub b: T,
}

impl<T: Scalar> QuadExtElement<T> {
    pub fn new(u: T, v: T, b: T) -> Self {
        Self { u, v, b }
    }

    pub fn rational(u: T, b: T) -> Self {
        Self::new(u, T::zero(), b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.b != other.b {
            return Err(Error::MixedConfig);
        }
        let (u, v) = (&self.u, &self.v);
        let (s, t) = (&other.u, &other.v);
        Ok(Self::new(
            u.clone() * s.clone() + self.b.clone() * v.clone() * t.clone(),
            u.clone() * t.clone() + v.clone() * s.clone(),
            self.b.clone(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if self.b != other.b {
            return Err(Error::MixedConfig);
        }
        Ok(Self::new(
            self.u.clone() - other.u.clone(),
            self.v.clone() - other.v.clone(),
            self.b.clone(),
        ))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(
            self.u.clone() * k.clone(),
            self.v.clone() * k.clone(),
            self.b.clone(),
        )
    }

    /// The image under `√b ↦ s`, meaningful when `s² = b`.
    pub fn substitute(&self, s: &T) -> T {
        self.u.clone() + self.v.clone() * s.clone()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }
}

impl<T: Scalar> fmt::Display for QuadExtElement<T> {
    /// Renders `u + v*rb`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, [(&self.u, "1"), (&self.v, "rb")].into_iter())
    }
}

/// `x² − a·y²` computed in `F(√b)`.
pub fn qform_value<T: Scalar>(
    a: &T,
    x: &QuadExtElement<T>,
    y: &QuadExtElement<T>,
) -> Result<QuadExtElement<T>> {
    x.checked_mul(x)?.checked_sub(&y.checked_mul(y)?.scale(a))
}

/// Which argument produced a [`QformDecomposition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QformBranch {
    /// `b = s²`: substitute `√b = s`.
    BSquare,
    /// `a = c²`: the form `x² − c²y²` represents every rational.
    ASquare,
    /// `ab = c²`: the same identity applied to the second form.
    AbSquare,
    /// None of `a`, `b`, `ab` is a square: factor in `F(√a, √ab)`.
    Generic,
}

/// `value = (x1² − a·y1²)·(x2² − ab·y2²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QformDecomposition<T> {
    pub x1: T,
    pub y1: T,
    pub x2: T,
    pub y2: T,
    pub value: T,
    pub branch: QformBranch,
}

impl<T: Scalar> QformDecomposition<T> {
    /// Checks the product identity exactly.
    pub fn verify(&self, a: &T, b: &T) -> bool {
        let sq = |t: &T| t.clone() * t.clone();
        let first = sq(&self.x1) - a.clone() * sq(&self.y1);
        let second = sq(&self.x2) - a.clone() * b.clone() * sq(&self.y2);
        first * second == self.value
    }
}

/// `((f+1)/2, (f−1)/(2c))`, a representation of `f` by `x² − c²y²`.
pub fn represent_by_split_form<T: Scalar>(f: &T, c: &T) -> (T, T) {
    let one = T::one();
    let two = one.clone() + one.clone();
    (
        (f.clone() + one.clone()) / two.clone(),
        (f.clone() - one) / (two * c.clone()),
    )
}

/// Factors `f = x² − a·y² ∈ F^×` as `(x1² − a·y1²)·(x2² − ab·y2²)`.
///
/// Branch precedence: `b` square, then `a` square, then `ab` square, then
/// the generic case. In the generic case, with `a1 = a` and `a2 = ab`, the
/// root `√b` is `√(a1a2)/a`, so `e = x + y·√a1` has coordinates
/// `(u_x, u_y, v_y, v_x/a)` where `x = u_x + v_x√b` and `y = u_y + v_y√b`.
/// Its norm to `E3 = F(√b)` is `f`, and the factorization `e = γ1·γ2`
/// yields `γ1 = x1 + y1√a1` and `γ2 = x2 + y2√a2`.
pub fn qform_decompose<T: Scalar>(
    a: &T,
    b: &T,
    x: &QuadExtElement<T>,
    y: &QuadExtElement<T>,
) -> Result<QformDecomposition<T>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if &x.b != b || &y.b != b {
        return Err(Error::MixedConfig);
    }
    let f = qform_value(a, x, y)?;
    if !f.is_rational() {
        return Err(Error::ValueNotInF);
    }
    let value = f.u;
    if value.is_zero() {
        return Err(Error::ZeroValue);
    }
    let ab = a.clone() * b.clone();
    let (x1, y1, x2, y2, branch) = if let Some(s) = b.exact_sqrt() {
        (
            x.substitute(&s),
            y.substitute(&s),
            T::one(),
            T::zero(),
            QformBranch::BSquare,
        )
    } else if let Some(c) = a.exact_sqrt() {
        let (x1, y1) = represent_by_split_form(&value, &c);
        (x1, y1, T::one(), T::zero(), QformBranch::ASquare)
    } else if let Some(c) = ab.exact_sqrt() {
        let (x2, y2) = represent_by_split_form(&value, &c);
        (T::one(), T::zero(), x2, y2, QformBranch::AbSquare)
    } else {
        let cfg = BiquadConfig::new(a.clone(), ab)?;
        let e = cfg.element(
            x.u.clone(),
            y.u.clone(),
            y.v.clone(),
            x.v.clone() / a.clone(),
        );
        let d = kernel_decompose(&e)?;
        let [x1, y1, _, _] = d.k1.into_coords();
        let [x2, _, y2, _] = d.k2.into_coords();
        (x1, y1, x2, y2, QformBranch::Generic)
    };
    Ok(QformDecomposition {
        x1,
        y1,
        x2,
        y2,
        value,
        branch,
    })
}

/// `(|m² − n²|, |2mn|, m² + n²)`, read off from the norm-one element
/// `(m + n·i)/(m − n·i)` of `Q(i)`.
pub fn pythagorean_triple<I: Integer + Signed + Clone>(m: &I, n: &I) -> Result<(I, I, I)> {
    if m.is_zero() && n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mm = m.clone() * m.clone();
    let nn = n.clone() * n.clone();
    let two = I::one() + I::one();
    Ok((
        (mm.clone() - nn.clone()).abs(),
        (two * m.clone() * n.clone()).abs(),
        mm + nn,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn qe(u: i64, v: i64, b: i64) -> QuadExtElement<Rational> {
        QuadExtElement::new(q(u), q(v), q(b))
    }

    #[test]
    fn value_examples() {
        assert_eq!(
            qform_value(&q(2), &qe(1, 2, 3), &qe(1, 1, 3)).unwrap(),
            qe(5, 0, 3)
        );
        assert_eq!(
            qform_value(&q(2), &qe(1, 0, 3), &qe(0, 0, 3)).unwrap(),
            qe(1, 0, 3)
        );
        assert_eq!(
            qform_value(&q(2), &qe(0, 1, 3), &qe(0, 0, 3)).unwrap(),
            qe(3, 0, 3)
        );
        assert_eq!(
            qform_value(&q(2), &qe(0, 1, 3), &qe(0, 0, 5)),
            Err(Error::MixedConfig)
        );
    }

    #[test]
    fn decompose_examples() {
        let d = qform_decompose(&q(2), &q(3), &qe(1, 2, 3), &qe(1, 1, 3)).unwrap();
        assert_eq!(
            (d.x1.clone(), d.y1.clone(), d.x2.clone(), d.y2.clone()),
            (q(1), q(1), q(1), q(1))
        );
        assert_eq!(d.value, q(5));
        assert_eq!(d.branch, QformBranch::Generic);
        assert!(d.verify(&q(2), &q(3)));

        let d = qform_decompose(&q(4), &q(3), &qe(3, 0, 3), &qe(1, 0, 3)).unwrap();
        assert_eq!(
            (d.x1.clone(), d.y1.clone(), d.x2.clone(), d.y2.clone()),
            (q(3), q(1), q(1), q(0))
        );
        assert_eq!(d.branch, QformBranch::ASquare);

        let d = qform_decompose(&q(2), &q(9), &qe(7, 0, 9), &qe(0, 0, 9)).unwrap();
        assert_eq!(
            (d.x1.clone(), d.y1.clone(), d.x2.clone(), d.y2.clone()),
            (q(7), q(0), q(1), q(0))
        );
        assert_eq!(d.value, q(49));
        assert_eq!(d.branch, QformBranch::BSquare);

        // ab = 2·8 = 16.
        let d = qform_decompose(&q(2), &q(8), &qe(3, 0, 8), &qe(1, 0, 8)).unwrap();
        assert_eq!(d.branch, QformBranch::AbSquare);
        assert_eq!(d.value, q(7));
        assert!(d.verify(&q(2), &q(8)));
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(
            qform_decompose(&q(2), &q(3), &qe(1, 1, 3), &qe(0, 0, 3)),
            Err(Error::ValueNotInF)
        );
        // (√2)² − 2·1² = 0 over F(√2).
        assert_eq!(
            qform_decompose(&q(2), &q(2), &qe(0, 1, 2), &qe(1, 0, 2)),
            Err(Error::ZeroValue)
        );
        assert_eq!(
            qform_decompose(&q(0), &q(3), &qe(1, 0, 3), &qe(1, 0, 3)),
            Err(Error::ZeroParameter)
        );
        assert_eq!(
            qform_decompose(&q(2), &q(3), &qe(1, 0, 5), &qe(1, 0, 3)),
            Err(Error::MixedConfig)
        );
    }

    #[test]
    fn pythagorean_examples() {
        let t = |m: i64, n: i64| pythagorean_triple(&m, &n).unwrap();
        assert_eq!(t(2, 1), (3, 4, 5));
        assert_eq!(t(3, 2), (5, 12, 13));
        assert_eq!(t(1, 1), (0, 2, 2));
        assert_eq!(t(-2, 1), (3, 4, 5));
        assert_eq!(pythagorean_triple(&0i64, &0i64), Err(Error::ZeroInput));
        let big = pythagorean_triple(&BigInt::from(10).pow(30), &BigInt::from(7)).unwrap();
        assert_eq!(
            big.0.clone() * big.0 + big.1.clone() * big.1,
            big.2.clone() * big.2
        );
    }

    #[test]
    fn represents_the_value() {
        // Per-branch identity at a couple of fixed points.
        for (f, c) in [(q(5), q(2)), (Rational::new((-7).into(), 3.into()), q(-5))] {
            let (x, y) = represent_by_split_form(&f, &c);
            assert_eq!(x.clone() * x - c.clone() * c * y.clone() * y, f);
        }
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..7).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn split_form_identity(f in rat(), c in rat()) {
            prop_assume!(!c.is_zero());
            let (x, y) = represent_by_split_form(&f, &c);
            prop_assert_eq!(x.clone() * x - c.clone() * c * y.clone() * y, f);
        }

        #[test]
        fn generic_branch_identity(x1 in rat(), y1 in rat(), x2 in rat(), y2 in rat()) {
            // Build e = γ1·γ2 in F(√2, √6) and read x, y back through √b = √(a1a2)/a.
            let (a, b) = (q(2), q(3));
            let cfg = BiquadConfig::new(a.clone(), a.clone() * b.clone()).unwrap();
            let e = &cfg.in_e1(x1, y1) * &cfg.in_e2(x2, y2);
            prop_assume!(!e.is_zero());
            let [f0, f1, f2, f3] = e.into_coords();
            let x = QuadExtElement::new(f0, f3 * a.clone(), b.clone());
            let y = QuadExtElement::new(f1, f2, b.clone());
            let d = qform_decompose(&a, &b, &x, &y).unwrap();
            prop_assert_eq!(d.branch, QformBranch::Generic);
            prop_assert!(d.verify(&a, &b));
        }

        #[test]
        fn triples_are_pythagorean(m in -10_000i64..10_000, n in -10_000i64..10_000) {
            prop_assume!(m != 0 || n != 0);
            let (p, q, r) = pythagorean_triple(&m, &n).unwrap();
            prop_assert_eq!(p * p + q * q, r * r);
        }
    }
}
