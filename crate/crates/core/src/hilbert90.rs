//! Witness extraction for Hilbert 90 over `E = F(√a1, √a2)`.
//!
//! Every existence statement here comes with an explicit certificate that can
//! be checked by exact arithmetic:
//!
//! * [`qh90_witness`]: `ℓ` with `t = ℓ/σ(ℓ)` for a norm-one `t` of a
//!   quadratic layer `E/Ei`.
//! * [`coboundary_witness`]: `β` with `αi = β/σi(β)` for a crossed
//!   homomorphism given by `(α1, α2)`, i.e. `H¹(G, E^×) = 1`.
//! * [`kernel_decompose`]: `e = k1·k2` with `ki ∈ Ei^×` for every `e` whose
//!   norm to `E3` is rational.
//! * [`norm_product_witness`]: `N_{E/E3}(e) = N_{E1/F}(γ1)·N_{E2/F}(γ2)`.
//!
//! Witnesses are not unique. Callers should verify the defining equations
//! rather than compare against a particular element.

use crate::error::{Error, Result};
use crate::field::{ExtElement, GaloisElement, Intermediate, NormTarget, Subfield};
use crate::scalar::Scalar;

/// Returns `ℓ ≠ 0` with `t = ℓ/σ(ℓ)`, `σ` the generator of `Gal(E/Ei)`.
///
/// Requires `N_{E/Ei}(t) = 1`. For `t ≠ −1` the witness is `1 + t`; for
/// `t = −1` it is a basis root negated by `σ` (`√a2` over `E1`, `√a1` over
/// `E2` and `E3`).
pub fn qh90_witness<T: Scalar>(layer: Intermediate, t: &ExtElement<T>) -> Result<ExtElement<T>> {
    if t.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !t.norm_to(layer).is_one() {
        return Err(Error::NotNormOne {
            index: layer.index(),
        });
    }
    let k = t.config();
    if (t + &k.one()).is_zero() {
        Ok(k.basis(layer.anti_fixed_root()))
    } else {
        Ok(&k.one() + t)
    }
}

/// A crossed homomorphism `f: G → E^×`, determined by `αi = f(σi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedHom<T> {
    alpha1: ExtElement<T>,
    alpha2: ExtElement<T>,
}

impl<T: Scalar> CrossedHom<T> {
    pub fn alpha1(&self) -> &ExtElement<T> {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &ExtElement<T> {
        &self.alpha2
    }

    /// `f(g)`: `f(id) = 1`, `f(σi) = αi`, `f(σ1σ2) = σ1(α2)·α1`.
    pub fn value(&self, g: GaloisElement) -> ExtElement<T> {
        match g {
            GaloisElement::Id => self.alpha1.config().one(),
            GaloisElement::S1 => self.alpha1.clone(),
            GaloisElement::S2 => self.alpha2.clone(),
            GaloisElement::S12 => &self.alpha2.galois(GaloisElement::S1) * &self.alpha1,
        }
    }

    /// The coboundary `g ↦ β/g(β)`.
    pub fn coboundary_of(beta: &ExtElement<T>) -> Result<Self> {
        let a1 = beta.checked_div(&beta.galois(GaloisElement::S1))?;
        let a2 = beta.checked_div(&beta.galois(GaloisElement::S2))?;
        Ok(Self {
            alpha1: a1,
            alpha2: a2,
        })
    }
}

/// Validates `(α1, α2)`: `N_{E/Ei}(αi) = 1` and `α1·σ1(α2) = α2·σ2(α1)`.
pub fn crossed_hom_check<T: Scalar>(
    alpha1: ExtElement<T>,
    alpha2: ExtElement<T>,
) -> Result<CrossedHom<T>> {
    if alpha1.is_zero() || alpha2.is_zero() {
        return Err(Error::ZeroElement);
    }
    if alpha1.config() != alpha2.config() {
        return Err(Error::MixedConfig);
    }
    for (alpha, layer) in [(&alpha1, Intermediate::E1), (&alpha2, Intermediate::E2)] {
        if !alpha.norm_to(layer).is_one() {
            return Err(Error::NormNotOne {
                index: layer.index(),
            });
        }
    }
    let lhs = &alpha1 * &alpha2.galois(GaloisElement::S1);
    let rhs = &alpha2 * &alpha1.galois(GaloisElement::S2);
    if lhs != rhs {
        return Err(Error::CompatibilityFailed);
    }
    Ok(CrossedHom { alpha1, alpha2 })
}

/// Returns `β ≠ 0` with `αi = β/σi(β)` for `i = 1, 2`.
///
/// `ni = qh90_witness(Ei, αi)` gives `αi = ni/σi(ni)`; the quotient
/// `n1/n2` lies in `ker(1−σ1)(1−σ2)` and factors as `k1·k2` with
/// `ki ∈ Ei^×`, after which `β = n1·k1⁻¹ = n2·k2`.
pub fn coboundary_witness<T: Scalar>(h: &CrossedHom<T>) -> Result<ExtElement<T>> {
    let n1 = qh90_witness(Intermediate::E1, &h.alpha1)?;
    let n2 = qh90_witness(Intermediate::E2, &h.alpha2)?;
    let x = n1.checked_div(&n2)?;
    let Factorization { k1, .. } = kernel_decompose(&x)?;
    n1.checked_div(&k1)
}

/// `e = k1·k2` with `k1 ∈ E1^×` and `k2 ∈ E2^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<T> {
    pub k1: ExtElement<T>,
    pub k2: ExtElement<T>,
}

impl<T: Scalar> Factorization<T> {
    /// Checks the factorization against `e` exactly.
    pub fn verify(&self, e: &ExtElement<T>) -> bool {
        !self.k1.is_zero()
            && !self.k2.is_zero()
            && self.k1.lies_in(Subfield::E1)
            && self.k2.lies_in(Subfield::E2)
            && &self.k1 * &self.k2 == *e
    }
}

/// Factors `e` into `E1^×·E2^×`, provided `N_{E/E3}(e) ∈ F^×`.
///
/// The `√(a1a2)`-coordinate of `N_{E/E3}(e)` is `2(f0·f3 − f1·f2)`, so the
/// precondition is `f0·f3 = f1·f2`. Branches, in order:
///
/// * `f2, f3 ≠ 0`: with `t = f0/f2 = f1/f3`, `e = (f2 + f3√a1)·(t + √a2)`;
/// * `f2 = 0, f0 = 0`: `e = √a1·(f1 + f3√a2)`;
/// * `f2 = 0, f3 = 0`: `e = (f0 + f1√a1)·1`;
/// * `f3 = 0, f2 ≠ 0` (forcing `f1 = 0`): `e = 1·(f0 + f2√a2)`.
pub fn kernel_decompose<T: Scalar>(e: &ExtElement<T>) -> Result<Factorization<T>> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let k = e.config();
    let [f0, f1, f2, f3] = e.coords().clone();
    if f0.clone() * f3.clone() != f1.clone() * f2.clone() {
        return Err(Error::NotInKernel);
    }
    let (k1, k2) = if !f2.is_zero() && !f3.is_zero() {
        let t = f0 / f2.clone();
        (k.in_e1(f2, f3), k.in_e2(t, T::one()))
    } else if f2.is_zero() && f0.is_zero() {
        (k.r1(), k.in_e2(f1, f3))
    } else if f2.is_zero() {
        debug_assert!(f3.is_zero());
        (k.in_e1(f0, f1), k.one())
    } else {
        debug_assert!(f3.is_zero() && f1.is_zero());
        (k.one(), k.in_e2(f0, f2))
    };
    Ok(Factorization { k1, k2 })
}

/// `γi ∈ Ei^×` with `N_{E/E3}(e) = N_{E1/F}(γ1)·N_{E2/F}(γ2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormWitness<T> {
    pub gamma1: ExtElement<T>,
    pub gamma2: ExtElement<T>,
}

impl<T: Scalar> NormWitness<T> {
    /// `(N_{E1/F}(γ1), N_{E2/F}(γ2))`, or `None` if a `γi` is outside its subfield.
    pub fn norms(&self) -> Option<(T, T)> {
        let n1 = self.gamma1.norm(NormTarget::FFromE1).ok()?;
        let n2 = self.gamma2.norm(NormTarget::FFromE2).ok()?;
        Some((n1.as_scalar()?.clone(), n2.as_scalar()?.clone()))
    }

    /// Checks the norm identity against `e` exactly.
    pub fn verify(&self, e: &ExtElement<T>) -> bool {
        if self.gamma1.is_zero() || self.gamma2.is_zero() {
            return false;
        }
        match self.norms() {
            Some((n1, n2)) => {
                let lhs = e.norm_to(Intermediate::E3);
                lhs.as_scalar() == Some(&(n1 * n2))
            }
            None => false,
        }
    }
}

/// Certifies `N_{E/E3}(e) ∈ N_{E1/F}(E1^×)·N_{E2/F}(E2^×)` via the
/// factorization `e = γ1·γ2`, since `N_{E/E3}(γi) = N_{Ei/F}(γi)`.
pub fn norm_product_witness<T: Scalar>(e: &ExtElement<T>) -> Result<NormWitness<T>> {
    let Factorization { k1, k2 } = kernel_decompose(e)?;
    Ok(NormWitness {
        gamma1: k1,
        gamma2: k2,
    })
}

/// Membership of `e` in the five sets
///
/// * `K1 = ker(1−σ1)(1−σ2)`
/// * `K2 = ker(1−σ1)·ker(1−σ2)`
/// * `K3 = ⟨E1^×, E2^×⟩`
/// * `K4 = {e : N_{E/E3}(e) ∈ F^×}`
/// * `K5 = {e : N_{E/E3}(e) ∈ N_{E1/F}(E1^×)·N_{E2/F}(E2^×)}`
///
/// which coincide. Positive answers for `K2`, `K3` and `K5` carry
/// certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport<T> {
    pub in_k1: bool,
    pub in_k2: bool,
    pub in_k3: bool,
    pub in_k4: bool,
    pub in_k5: bool,
    pub decomposition: Option<Factorization<T>>,
    pub norm_witness: Option<NormWitness<T>>,
}

impl<T> KernelReport<T> {
    pub fn flags(&self) -> [bool; 5] {
        [self.in_k1, self.in_k2, self.in_k3, self.in_k4, self.in_k5]
    }

    pub fn all_agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }

    pub fn in_kernel(&self) -> bool {
        self.in_k1
    }
}

/// Decides membership of `e ≠ 0` in `K1`..`K5`.
///
/// `K1` is tested directly as `e·σ1σ2(e) = σ1(e)·σ2(e)` and `K4` by the
/// coordinates of `N_{E/E3}(e)`. `K2` and `K3` are decided by attempting
/// the factorization and checking it, and `K5` by checking the resulting
/// norm witness. Panics if the five answers disagree.
pub fn kernel_membership<T: Scalar>(e: &ExtElement<T>) -> Result<KernelReport<T>> {
    use GaloisElement::*;
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let in_k1 = e * &e.galois(S12) == &e.galois(S1) * &e.galois(S2);
    let in_k4 = e.norm_to(Intermediate::E3).lies_in(Subfield::F);

    let decomposition = kernel_decompose(e).ok().filter(|d| d.verify(e));
    let in_k2 = decomposition
        .as_ref()
        .is_some_and(|d| d.k1.galois(S1) == d.k1 && d.k2.galois(S2) == d.k2 && &d.k1 * &d.k2 == *e);
    let in_k3 = decomposition.is_some();

    let norm_witness = decomposition
        .as_ref()
        .map(|d| NormWitness {
            gamma1: d.k1.clone(),
            gamma2: d.k2.clone(),
        })
        .filter(|w| w.verify(e));
    let in_k5 = norm_witness.is_some();

    let report = KernelReport {
        in_k1,
        in_k2,
        in_k3,
        in_k4,
        in_k5,
        decomposition,
        norm_witness,
    };
    assert!(
        report.all_agree(),
        "kernel characterizations disagree for {e}: {:?}",
        report.flags()
    );
    Ok(report)
}
