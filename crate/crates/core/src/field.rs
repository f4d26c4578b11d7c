//! The biquadratic field `E = F(√a1, √a2)` over an exact base field `F`.
//!
//! Elements are coordinate vectors over the ordered basis
//! `{1, √a1, √a2, √(a1·a2)}`, written `1, r1, r2, r12` in text form. The
//! symbol `r12` always denotes the product `r1·r2`; every coordinate formula
//! in this crate depends on that root choice.
//!
//! Galois action. The generators follow the convention
//! `σi(√aj)/√aj = (−1)^δij` with `δij = 0` when `i = j` and `1` otherwise.
//! This is the reverse of the usual Kronecker delta: `σ1` *fixes* `√a1` and
//! negates `√a2`, `σ2` negates `√a1` and fixes `√a2`, and `σ1σ2` negates both
//! and fixes `√(a1a2)`. With this convention `Gal(E/E1) = {id, σ1}`,
//! `Gal(E/E2) = {id, σ2}` and `Gal(E/E3) = {id, σ1σ2}`, where
//! `E1 = F(√a1)`, `E2 = F(√a2)`, `E3 = F(√(a1a2))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Text names of the basis vectors, indexed like the coordinates.
pub const BASIS_NAMES: [&str; 4] = ["1", "r1", "r2", "r12"];

/// Which field parameter turned out to be a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareParam {
    A1,
    A2,
    A1A2,
}

impl fmt::Display for SquareParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareParam::A1 => "a1",
            SquareParam::A2 => "a2",
            SquareParam::A1A2 => "a1a2",
        })
    }
}

/// The base field and the three quadratic subfields of `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subfield {
    F,
    E1,
    E2,
    E3,
}

impl fmt::Display for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subfield::F => "F",
            Subfield::E1 => "E1",
            Subfield::E2 => "E2",
            Subfield::E3 => "E3",
        })
    }
}

/// An element of `Gal(E/F) = Z/2 × Z/2`.
///
/// The discriminant doubles as a two-bit vector: bit 0 is the `σ1`
/// component, bit 1 the `σ2` component. Composition is XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisElement {
    Id = 0,
    S1 = 1,
    S2 = 2,
    S12 = 3,
}

impl GaloisElement {
    pub const ALL: [GaloisElement; 4] = [
        GaloisElement::Id,
        GaloisElement::S1,
        GaloisElement::S2,
        GaloisElement::S12,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i & 3]
    }

    pub fn compose(self, other: Self) -> Self {
        Self::from_index(self.index() ^ other.index())
    }

    /// Whether `self` negates basis vector `j` (0 = 1, 1 = r1, 2 = r2, 3 = r12).
    ///
    /// The `σ1` component flips roots involving `√a2`; the `σ2` component
    /// flips roots involving `√a1`.
    pub fn negates(self, j: usize) -> bool {
        let g = self.index();
        let flips = (g & 1) * ((j >> 1) & 1) + ((g >> 1) & 1) * (j & 1);
        flips % 2 == 1
    }

    pub fn name(self) -> &'static str {
        match self {
            GaloisElement::Id => "id",
            GaloisElement::S1 => "s1",
            GaloisElement::S2 => "s2",
            GaloisElement::S12 => "s12",
        }
    }
}

impl fmt::Display for GaloisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the three intermediate fields, seen as the fixed field of a
/// single nontrivial automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Intermediate {
    E1,
    E2,
    E3,
}

impl Intermediate {
    pub const ALL: [Intermediate; 3] = [Intermediate::E1, Intermediate::E2, Intermediate::E3];

    /// The generator of `Gal(E/Ei)`.
    pub fn sigma(self) -> GaloisElement {
        match self {
            Intermediate::E1 => GaloisElement::S1,
            Intermediate::E2 => GaloisElement::S2,
            Intermediate::E3 => GaloisElement::S12,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Intermediate::E1 => 1,
            Intermediate::E2 => 2,
            Intermediate::E3 => 3,
        }
    }

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(Intermediate::E1),
            2 => Some(Intermediate::E2),
            3 => Some(Intermediate::E3),
            _ => None,
        }
    }

    pub fn subfield(self) -> Subfield {
        match self {
            Intermediate::E1 => Subfield::E1,
            Intermediate::E2 => Subfield::E2,
            Intermediate::E3 => Subfield::E3,
        }
    }

    /// Basis index of a root negated by [`Self::sigma`].
    pub fn anti_fixed_root(self) -> usize {
        match self {
            Intermediate::E1 => 2,
            Intermediate::E2 | Intermediate::E3 => 1,
        }
    }
}

/// Targets of the norm maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormTarget {
    /// `N_{E/E1}`
    E1,
    /// `N_{E/E2}`
    E2,
    /// `N_{E/E3}`
    E3,
    /// `N_{E/F}`
    FFromE,
    /// `N_{E1/F}`, defined on `E1` only.
    FFromE1,
    /// `N_{E2/F}`, defined on `E2` only.
    FFromE2,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Params<T> {
    a1: T,
    a2: T,
    a12: T,
}

/// Validated parameters `(a1, a2)` of a biquadratic extension.
///
/// Cheap to clone; elements keep a handle to their configuration and refuse
/// to mix with elements of another one.
#[derive(Clone, Debug)]
pub struct BiquadConfig<T> {
    params: Arc<Params<T>>,
}

impl<T: PartialEq> PartialEq for BiquadConfig<T> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.params, &other.params) || self.params == other.params
    }
}

impl<T: Eq> Eq for BiquadConfig<T> {}

impl<T: Scalar> BiquadConfig<T> {
    /// Accepts `(a1, a2)` iff `a1`, `a2` and `a1·a2` are all nonsquares.
    /// Parameters are used exactly as given, without squarefree reduction.
    pub fn new(a1: T, a2: T) -> Result<Self> {
        if a1.is_zero() || a2.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let a12 = a1.clone() * a2.clone();
        for (value, which) in [
            (&a1, SquareParam::A1),
            (&a2, SquareParam::A2),
            (&a12, SquareParam::A1A2),
        ] {
            if value.exact_sqrt().is_some() {
                return Err(Error::NotBiquadratic { which });
            }
        }
        Ok(Self {
            params: Arc::new(Params { a1, a2, a12 }),
        })
    }

    pub fn a1(&self) -> &T {
        &self.params.a1
    }

    pub fn a2(&self) -> &T {
        &self.params.a2
    }

    pub fn a1a2(&self) -> &T {
        &self.params.a12
    }

    pub fn element(&self, f0: T, f1: T, f2: T, f3: T) -> ExtElement<T> {
        self.from_coords([f0, f1, f2, f3])
    }

    pub fn from_coords(&self, coords: [T; 4]) -> ExtElement<T> {
        ExtElement {
            cfg: self.clone(),
            c: coords,
        }
    }

    pub fn from_ints(&self, coords: [i64; 4]) -> ExtElement<T> {
        self.from_coords(coords.map(T::from_int))
    }

    pub fn scalar(&self, x: T) -> ExtElement<T> {
        self.element(x, T::zero(), T::zero(), T::zero())
    }

    pub fn zero(&self) -> ExtElement<T> {
        self.scalar(T::zero())
    }

    pub fn one(&self) -> ExtElement<T> {
        self.scalar(T::one())
    }

    /// Basis vector `j`: 0 = 1, 1 = √a1, 2 = √a2, 3 = √(a1a2).
    pub fn basis(&self, j: usize) -> ExtElement<T> {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[j] = T::one();
        self.from_coords(c)
    }

    pub fn r1(&self) -> ExtElement<T> {
        self.basis(1)
    }

    pub fn r2(&self) -> ExtElement<T> {
        self.basis(2)
    }

    pub fn r12(&self) -> ExtElement<T> {
        self.basis(3)
    }

    /// An element of `E1 = F(√a1)`.
    pub fn in_e1(&self, x: T, y: T) -> ExtElement<T> {
        self.element(x, y, T::zero(), T::zero())
    }

    /// An element of `E2 = F(√a2)`.
    pub fn in_e2(&self, x: T, y: T) -> ExtElement<T> {
        self.element(x, T::zero(), y, T::zero())
    }

    /// An element of `E3 = F(√(a1a2))`.
    pub fn in_e3(&self, x: T, y: T) -> ExtElement<T> {
        self.element(x, T::zero(), T::zero(), y)
    }

    fn product(&self, x: &[T; 4], y: &[T; 4]) -> [T; 4] {
        let (a1, a2, a12) = (self.a1(), self.a2(), self.a1a2());
        let m = |i: usize, j: usize| x[i].clone() * y[j].clone();
        [
            m(0, 0) + a1.clone() * m(1, 1) + a2.clone() * m(2, 2) + a12.clone() * m(3, 3),
            m(0, 1) + m(1, 0) + a2.clone() * (m(2, 3) + m(3, 2)),
            m(0, 2) + m(2, 0) + a1.clone() * (m(1, 3) + m(3, 1)),
            m(0, 3) + m(3, 0) + m(1, 2) + m(2, 1),
        ]
    }
}

/// Membership of an element in `F` and the three quadratic subfields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubfieldMembership {
    pub in_f: bool,
    pub in_e1: bool,
    pub in_e2: bool,
    pub in_e3: bool,
}

/// An element `f0 + f1·√a1 + f2·√a2 + f3·√(a1a2)` of `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement<T> {
    cfg: BiquadConfig<T>,
    c: [T; 4],
}

impl<T: Scalar> ExtElement<T> {
    pub fn config(&self) -> &BiquadConfig<T> {
        &self.cfg
    }

    pub fn coords(&self) -> &[T; 4] {
        &self.c
    }

    pub fn coord(&self, j: usize) -> &T {
        &self.c[j]
    }

    pub fn into_coords(self) -> [T; 4] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.cfg == other.cfg {
            Ok(())
        } else {
            Err(Error::MixedConfig)
        }
    }

    fn map(&self, f: impl Fn(usize, &T) -> T) -> Self {
        let c = [0, 1, 2, 3].map(|j| f(j, &self.c[j]));
        self.cfg.from_coords(c)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.map(|j, x| x.clone() + other.c[j].clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.map(|j, x| x.clone() - other.c[j].clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.cfg.from_coords(self.cfg.product(&self.c, &other.c)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|_, x| x.clone() * k.clone())
    }

    /// `e⁻¹ = σ1(e)·σ2(e)·σ1σ2(e) / N_{E/F}(e)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conj = &(&self.galois(GaloisElement::S1) * &self.galois(GaloisElement::S2))
            * &self.galois(GaloisElement::S12);
        let norm = (self * &conj).c[0].clone();
        debug_assert!(!norm.is_zero());
        Ok(conj.scale(&(T::one() / norm)))
    }

    /// Integer power; negative exponents go through [`Self::inv`].
    pub fn pow<I: Integer + Signed + Clone>(&self, exp: &I) -> Result<Self> {
        let two = I::one() + I::one();
        let mut base = if exp.is_negative() {
            self.inv()?
        } else {
            self.clone()
        };
        let mut n = exp.abs();
        let mut acc = self.cfg.one();
        while !n.is_zero() {
            let (q, r) = n.div_rem(&two);
            if !r.is_zero() {
                acc = &acc * &base;
            }
            n = q;
            if !n.is_zero() {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn galois(&self, g: GaloisElement) -> Self {
        self.map(|j, x| if g.negates(j) { -x.clone() } else { x.clone() })
    }

    /// The four conjugates in the order `id, σ1, σ2, σ1σ2`.
    pub fn conjugates(&self) -> [Self; 4] {
        GaloisElement::ALL.map(|g| self.galois(g))
    }

    /// `N_{E/F}(e)`, the product of all four conjugates.
    pub fn norm_to_f(&self) -> T {
        let [a, b, c, d] = self.conjugates();
        (&(&a * &b) * &(&c * &d)).c[0].clone()
    }

    /// `N_{E/Ei}(e) = e·σ(e)` for the generator `σ` of `Gal(E/Ei)`.
    pub fn norm_to(&self, target: Intermediate) -> Self {
        self * &self.galois(target.sigma())
    }

    pub fn norm(&self, target: NormTarget) -> Result<Self> {
        Ok(match target {
            NormTarget::E1 => self.norm_to(Intermediate::E1),
            NormTarget::E2 => self.norm_to(Intermediate::E2),
            NormTarget::E3 => self.norm_to(Intermediate::E3),
            NormTarget::FFromE => self.cfg.scalar(self.norm_to_f()),
            NormTarget::FFromE1 => {
                if !self.lies_in(Subfield::E1) {
                    return Err(Error::NotInSubfield(Subfield::E1));
                }
                // σ2 restricts to the nontrivial automorphism of E1.
                self * &self.galois(GaloisElement::S2)
            }
            NormTarget::FFromE2 => {
                if !self.lies_in(Subfield::E2) {
                    return Err(Error::NotInSubfield(Subfield::E2));
                }
                self * &self.galois(GaloisElement::S1)
            }
        })
    }

    pub fn lies_in(&self, field: Subfield) -> bool {
        let z = |j: usize| self.c[j].is_zero();
        match field {
            Subfield::F => z(1) && z(2) && z(3),
            Subfield::E1 => z(2) && z(3),
            Subfield::E2 => z(1) && z(3),
            Subfield::E3 => z(1) && z(2),
        }
    }

    pub fn membership(&self) -> SubfieldMembership {
        SubfieldMembership {
            in_f: self.lies_in(Subfield::F),
            in_e1: self.lies_in(Subfield::E1),
            in_e2: self.lies_in(Subfield::E2),
            in_e3: self.lies_in(Subfield::E3),
        }
    }

    /// The rational value of an element of `F`.
    pub fn as_scalar(&self) -> Option<&T> {
        self.lies_in(Subfield::F).then(|| &self.c[0])
    }
}

impl<T: Scalar> fmt::Display for ExtElement<T> {
    /// Renders `c0 + c1*r1 + c2*r2 + c3*r12`, dropping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.c.iter().zip(BASIS_NAMES))
    }
}

/// Writes a signed sum of `coefficient*name` terms; the name `"1"` marks the
/// constant term.
pub(crate) fn write_terms<'a, T: Scalar>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a T, &'a str)>,
) -> fmt::Result {
    let mut first = true;
    for (coef, name) in terms {
        if coef.is_zero() {
            continue;
        }
        let neg = coef.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mag = coef.abs();
        if name == "1" {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(name)?;
        } else {
            write!(f, "{mag}*{name}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Scalar> $tr<&ExtElement<T>> for &ExtElement<T> {
            type Output = ExtElement<T>;

            /// Panics if the operands belong to different fields.
            fn $method(self, rhs: &ExtElement<T>) -> ExtElement<T> {
                self.$checked(rhs)
                    .expect("elements of different biquadratic fields")
            }
        }

        impl<T: Scalar> $tr for ExtElement<T> {
            type Output = ExtElement<T>;

            fn $method(self, rhs: ExtElement<T>) -> ExtElement<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T: Scalar> Neg for &ExtElement<T> {
    type Output = ExtElement<T>;

    fn neg(self) -> ExtElement<T> {
        self.map(|_, x| -x.clone())
    }
}

impl<T: Scalar> Neg for ExtElement<T> {
    type Output = ExtElement<T>;

    fn neg(self) -> ExtElement<T> {
        -&self
    }
}
