//! Serialization shapes for command results.
//!
//! Rationals render as JSON integers when they are integral and fit in 64
//! bits, and as `"p/q"` strings otherwise, so output is canonical.

use biquad90::field::GaloisElement;
use biquad90::{ExtElement, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

/// A rational in canonical JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self
            .0
            .is_integer()
            .then(|| self.0.numer().to_i64())
            .flatten()
        {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// An integer, as a JSON number when it fits in 64 bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z(pub BigInt);

impl Serialize for Z {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// An element as `{"f0", "f1", "f2", "f3"}`.
#[derive(Clone, Debug)]
pub struct Element(pub ExtElement);

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Element", 4)?;
        for (name, c) in ["f0", "f1", "f2", "f3"].into_iter().zip(self.0.coords()) {
            st.serialize_field(name, &Q(c.clone()))?;
        }
        st.end()
    }
}

#[derive(Serialize)]
pub struct Config {
    pub a1: Q,
    pub a2: Q,
}

#[derive(Serialize)]
pub struct Conjugates {
    pub id: Element,
    pub s1: Element,
    pub s2: Element,
    pub s12: Element,
}

impl Conjugates {
    pub fn of(e: &ExtElement) -> Self {
        let g = |x| Element(e.galois(x));
        Conjugates {
            id: g(GaloisElement::Id),
            s1: g(GaloisElement::S1),
            s2: g(GaloisElement::S2),
            s12: g(GaloisElement::S12),
        }
    }
}

#[derive(Serialize)]
#[allow(non_snake_case)]
pub struct Norms {
    pub E1: Element,
    pub E2: Element,
    pub E3: Element,
    pub F: Q,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
pub struct Membership {
    pub F: bool,
    pub E1: bool,
    pub E2: bool,
    pub E3: bool,
}

#[derive(Serialize)]
pub struct Action {
    pub operator: String,
    pub value: Element,
}

#[derive(Serialize)]
pub struct Eval {
    pub config: Config,
    pub op: &'static str,
    pub inputs: Vec<Element>,
    pub value: Element,
    pub text: String,
    pub conjugates: Conjugates,
    pub norms: Norms,
    pub membership: Membership,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub act: Option<Action>,
}

#[derive(Serialize)]
pub struct H90Witness {
    pub config: Config,
    pub index: u8,
    pub t: Element,
    pub witness: Element,
    pub text: String,
}

#[derive(Serialize)]
pub struct Coboundary {
    pub config: Config,
    pub alpha1: Element,
    pub alpha2: Element,
    pub beta: Element,
    pub text: String,
}

#[derive(Serialize)]
pub struct Decomposition {
    pub k1: Element,
    pub k2: Element,
}

#[derive(Serialize)]
pub struct NormWitness {
    pub gamma1: Element,
    pub gamma2: Element,
    pub norms: [Q; 2],
}

#[derive(Serialize)]
pub struct Kernel {
    pub config: Config,
    pub element: Element,
    pub in_k1: bool,
    pub in_k2: bool,
    pub in_k3: bool,
    pub in_k4: bool,
    pub in_k5: bool,
    pub decomposition: Option<Decomposition>,
    pub norm_witness: Option<NormWitness>,
}

#[derive(Serialize)]
pub struct QformDecomposition {
    pub x1: Q,
    pub y1: Q,
    pub x2: Q,
    pub y2: Q,
    pub value: Q,
}

#[derive(Serialize)]
pub struct Pythagorean {
    pub triple: [Z; 3],
}

#[derive(Serialize)]
pub struct ModuleRecord {
    pub group: String,
    pub s1: Vec<Vec<u64>>,
    pub s2: Vec<Vec<u64>>,
    pub qh90: [bool; 2],
    pub kernel_eq: bool,
    pub implication: bool,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

/// Counterexamples backing a FAIL verdict, rendered multiplicatively.
#[derive(Serialize)]
pub struct Certificate {
    pub kernel_element: Option<String>,
    pub pair: Option<[String; 2]>,
}

#[derive(Serialize)]
pub struct Summary {
    pub modules: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub kernel_eq_fails_with_qh90: usize,
    pub kernel_eq_holds_without_qh90: usize,
}

#[derive(Serialize)]
pub struct SummaryLine {
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}
