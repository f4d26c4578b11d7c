use std::fmt;

use crate::error::{Error, Result};

/// Default cap on `|M|` for the exhaustive checks.
pub const DEFAULT_MAX_ELEMENTS: u64 = 4096;

/// A finite abelian group `⊕ Z/n_j` with two commuting involutive
/// automorphisms, i.e. a finite `Z[G]`-module for the Klein four-group.
///
/// Elements are exponent vectors; `s1` and `s2` act by matrices whose column
/// `j` is the image of the `j`-th generator. Entries of row `i` are reduced
/// modulo `n_i`. Reports render elements multiplicatively, e.g. `g1^2*g3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteKleinModule {
    orders: Vec<u64>,
    s1: Vec<Vec<u64>>,
    s2: Vec<Vec<u64>>,
}

impl FiniteKleinModule {
    /// Validates the data: well-defined endomorphisms, `s1² = s2² = 1` and
    /// `s1∘s2 = s2∘s1`. Involutions are automatically invertible.
    pub fn new(orders: Vec<u64>, s1: Vec<Vec<i64>>, s2: Vec<Vec<i64>>) -> Result<Self> {
        let k = orders.len();
        if orders.iter().any(|&n| n < 2) {
            return Err(Error::InvalidModule(
                "cyclic factors must have order at least 2".into(),
            ));
        }
        let normalize = |s: Vec<Vec<i64>>, name: &str| -> Result<Vec<Vec<u64>>> {
            if s.len() != k || s.iter().any(|row| row.len() != k) {
                return Err(Error::InvalidModule(format!("{name} must be {k}x{k}")));
            }
            let mut out = vec![vec![0u64; k]; k];
            for i in 0..k {
                for j in 0..k {
                    let n = orders[i] as i64;
                    let v = s[i][j].rem_euclid(n) as u64;
                    let step = orders[i] / gcd(orders[i], orders[j]);
                    if v % step != 0 {
                        return Err(Error::InvalidModule(format!(
                            "{name}[{i}][{j}] does not define a homomorphism Z/{} -> Z/{}",
                            orders[j], orders[i]
                        )));
                    }
                    out[i][j] = v;
                }
            }
            Ok(out)
        };
        let m = Self {
            s1: normalize(s1, "s1")?,
            s2: normalize(s2, "s2")?,
            orders,
        };
        let id = identity(k);
        if m.compose(&m.s1, &m.s1) != id || m.compose(&m.s2, &m.s2) != id {
            return Err(Error::InvalidModule("s1 and s2 must be involutions".into()));
        }
        if m.compose(&m.s1, &m.s2) != m.compose(&m.s2, &m.s1) {
            return Err(Error::InvalidModule("s1 and s2 must commute".into()));
        }
        Ok(m)
    }

    /// Trusted constructor for enumerator output.
    pub(crate) fn from_parts(orders: Vec<u64>, s1: Vec<Vec<u64>>, s2: Vec<Vec<u64>>) -> Self {
        Self { orders, s1, s2 }
    }

    /// The trivial module `{1}`.
    pub fn trivial() -> Self {
        Self::from_parts(vec![], vec![], vec![])
    }

    /// `Z/n` with `s1` and `s2` acting as multiplication by `u1` and `u2`.
    pub fn cyclic(n: u64, u1: i64, u2: i64) -> Result<Self> {
        Self::new(vec![n], vec![vec![u1]], vec![vec![u2]])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn s1(&self) -> &[Vec<u64>] {
        &self.s1
    }

    pub fn s2(&self) -> &[Vec<u64>] {
        &self.s2
    }

    /// `|M|`.
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    fn compose(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let k = self.orders.len();
        let mut c = vec![vec![0u64; k]; k];
        for i in 0..k {
            let n = self.orders[i] as u128;
            for j in 0..k {
                let mut acc = 0u128;
                for l in 0..k {
                    acc += a[i][l] as u128 * b[l][j] as u128;
                }
                c[i][j] = (acc % n) as u64;
            }
        }
        c
    }

    /// Element tables for exhaustive checks; fails if `|M| > max_elements`.
    pub fn tables(&self, max_elements: u64) -> Result<ModuleTables> {
        let order = self.order();
        if order > max_elements {
            return Err(Error::TooLarge {
                order,
                bound: max_elements,
            });
        }
        Ok(ModuleTables::build(self))
    }

    /// Human-readable name of the underlying group, e.g. `C4 x C2`.
    pub fn group_name(&self) -> String {
        if self.orders.is_empty() {
            "1".to_string()
        } else {
            self.orders
                .iter()
                .map(|n| format!("C{n}"))
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn identity(k: usize) -> Vec<Vec<u64>> {
    (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()
}

/// Dense element-level view of a module: elements are indices `0..|M|`
/// (mixed radix over the exponent vector), with the group law and both
/// automorphisms tabulated.
#[derive(Clone, Debug)]
pub struct ModuleTables {
    orders: Vec<u64>,
    size: usize,
    digits: Vec<u32>,
    s1: Vec<u32>,
    s2: Vec<u32>,
}

impl ModuleTables {
    fn build(m: &FiniteKleinModule) -> Self {
        let k = m.orders.len();
        let size = m.order() as usize;
        let mut digits = vec![0u32; size * k];
        for x in 0..size {
            let mut r = x as u64;
            for (i, &n) in m.orders.iter().enumerate() {
                digits[x * k + i] = (r % n) as u32;
                r /= n;
            }
        }
        let mut t = Self {
            orders: m.orders.clone(),
            size,
            digits,
            s1: Vec::new(),
            s2: Vec::new(),
        };
        t.s1 = (0..size).map(|x| t.apply(&m.s1, x as u32)).collect();
        t.s2 = (0..size).map(|x| t.apply(&m.s2, x as u32)).collect();
        t
    }

    fn digits_of(&self, x: u32) -> &[u32] {
        let k = self.orders.len();
        &self.digits[x as usize * k..(x as usize + 1) * k]
    }

    fn encode(&self, v: impl Iterator<Item = u64>) -> u32 {
        let mut x = 0u64;
        let mut scale = 1u64;
        for (d, &n) in v.zip(&self.orders) {
            x += (d % n) * scale;
            scale *= n;
        }
        x as u32
    }

    fn apply(&self, s: &[Vec<u64>], x: u32) -> u32 {
        let v = self.digits_of(x);
        let img = (0..self.orders.len()).map(|i| {
            let n = self.orders[i];
            s[i].iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &d)| (acc + a * d as u64) % n)
        });
        self.encode(img)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits_of(a), self.digits_of(b));
        self.encode(da.iter().zip(db).map(|(&x, &y)| x as u64 + y as u64))
    }

    pub fn neg(&self, a: u32) -> u32 {
        let d = self.digits_of(a);
        self.encode(d.iter().zip(&self.orders).map(|(&x, &n)| n - x as u64))
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn sigma(&self, which: usize, x: u32) -> u32 {
        if which == 1 {
            self.s1[x as usize]
        } else {
            self.s2[x as usize]
        }
    }

    /// `(1 − σ)·x`, written additively.
    pub fn one_minus(&self, which: usize, x: u32) -> u32 {
        self.sub(x, self.sigma(which, x))
    }

    /// `(1 + σ)·x`, written additively.
    pub fn one_plus(&self, which: usize, x: u32) -> u32 {
        self.add(x, self.sigma(which, x))
    }

    fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size as u32
    }

    /// Multiplicative rendering of an element, e.g. `g1^2*g3`; `1` for the identity.
    pub fn render(&self, x: u32) -> String {
        let parts: Vec<String> = self
            .digits_of(x)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                if d == 1 {
                    format!("g{}", i + 1)
                } else {
                    format!("g{}^{d}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// `ker(1 + σ) ⊆ im(1 − σ)`.
    pub fn qh90(&self, which: usize) -> bool {
        let mut image = vec![false; self.size];
        for n in self.elements() {
            image[self.one_minus(which, n) as usize] = true;
        }
        self.elements()
            .filter(|&m| self.one_plus(which, m) == 0)
            .all(|m| image[m as usize])
    }

    fn fixed(&self, which: usize) -> Vec<u32> {
        self.elements()
            .filter(|&x| self.sigma(which, x) == x)
            .collect()
    }

    /// Compares `ker(1−σ1)(1−σ2)` with `ker(1−σ1)·ker(1−σ2)`.
    pub fn kernel_equality(&self) -> KernelComparison {
        let composite: Vec<bool> = self
            .elements()
            .map(|x| self.one_minus(1, self.one_minus(2, x)) == 0)
            .collect();
        let mut product = vec![false; self.size];
        for &a in &self.fixed(1) {
            for &b in &self.fixed(2) {
                product[self.add(a, b) as usize] = true;
            }
        }
        let inclusion_holds = (0..self.size).all(|x| !product[x] || composite[x]);
        let missing = (0..self.size).find(|&x| composite[x] && !product[x]);
        KernelComparison {
            equal: inclusion_holds && missing.is_none(),
            inclusion_holds,
            missing: missing.map(|x| x as u32),
        }
    }

    /// Whether conditions (1) `(1+σ1)m1 = 1 = (1+σ2)m2` and (2)
    /// `m1·σ1(m2) = m2·σ2(m1)` force (3) `mi = (1−σi)n` for some `n`.
    /// Returns the first pair satisfying (1) and (2) but not (3).
    pub fn implication(&self) -> Option<(u32, u32)> {
        let size = self.size;
        let mut reachable = vec![false; size * size];
        for n in self.elements() {
            let key = self.one_minus(1, n) as usize * size + self.one_minus(2, n) as usize;
            reachable[key] = true;
        }
        let ker1: Vec<u32> = self
            .elements()
            .filter(|&m| self.one_plus(1, m) == 0)
            .collect();
        let ker2: Vec<u32> = self
            .elements()
            .filter(|&m| self.one_plus(2, m) == 0)
            .collect();
        for &m1 in &ker1 {
            for &m2 in &ker2 {
                let lhs = self.add(m1, self.sigma(1, m2));
                let rhs = self.add(m2, self.sigma(2, m1));
                if lhs == rhs && !reachable[m1 as usize * size + m2 as usize] {
                    return Some((m1, m2));
                }
            }
        }
        None
    }
}

/// Outcome of comparing the two sides of the kernel equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelComparison {
    /// `ker(1−σ1)(1−σ2) = ker(1−σ1)·ker(1−σ2)`
    pub equal: bool,
    /// `ker(1−σ1)·ker(1−σ2) ⊆ ker(1−σ1)(1−σ2)`, which holds for every module.
    pub inclusion_holds: bool,
    /// An element of the composite kernel outside the product, if any.
    pub missing: Option<u32>,
}

fn checked_tables(m: &FiniteKleinModule) -> Result<ModuleTables> {
    m.tables(DEFAULT_MAX_ELEMENTS)
}

/// Whether `(M, σ1, σ2)` satisfies QH90 for `σ1` and for `σ2`.
pub fn check_qh90(m: &FiniteKleinModule) -> Result<(bool, bool)> {
    let t = checked_tables(m)?;
    Ok((t.qh90(1), t.qh90(2)))
}

/// Whether `ker(1−σ1)(1−σ2) = ker(1−σ1)·ker(1−σ2)`.
pub fn check_kernel_equality(m: &FiniteKleinModule) -> Result<bool> {
    Ok(checked_tables(m)?.kernel_equality().equal)
}

/// Whether conditions (1) and (2) imply (3) for every pair `(m1, m2)`.
pub fn check_implication(m: &FiniteKleinModule) -> Result<bool> {
    Ok(checked_tables(m)?.implication().is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// QH90 holds and the kernel equality agrees with the implication.
    Pass,
    /// QH90 holds but the two sides disagree.
    Fail,
    /// QH90 fails for some generator; nothing is claimed.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// Result of [`verify_theorem3`] on one module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub qh90: [bool; 2],
    pub kernel_eq: bool,
    /// The unconditional inclusion `ker(1−σ1)·ker(1−σ2) ⊆ ker(1−σ1)(1−σ2)`.
    pub inclusion: bool,
    pub implication: bool,
    pub verdict: Verdict,
    /// Offending element(s), rendered multiplicatively: a kernel element
    /// outside the product when the equality fails, and a pair `(m1, m2)`
    /// without a common `n` when the implication fails.
    pub kernel_counterexample: Option<String>,
    pub implication_counterexample: Option<(String, String)>,
}

/// Runs all three checks with the default size cap.
pub fn verify_theorem3(m: &FiniteKleinModule) -> Result<Theorem3Report> {
    verify_theorem3_bounded(m, DEFAULT_MAX_ELEMENTS)
}

pub fn verify_theorem3_bounded(m: &FiniteKleinModule, max_elements: u64) -> Result<Theorem3Report> {
    let t = m.tables(max_elements)?;
    let qh90 = [t.qh90(1), t.qh90(2)];
    let kernel = t.kernel_equality();
    let bad_pair = t.implication();
    let implication = bad_pair.is_none();
    let verdict = if !(qh90[0] && qh90[1]) {
        Verdict::Skipped
    } else if kernel.equal == implication {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(Theorem3Report {
        qh90,
        kernel_eq: kernel.equal,
        inclusion: kernel.inclusion_holds,
        implication,
        verdict,
        kernel_counterexample: kernel.missing.map(|x| t.render(x)),
        implication_counterexample: bad_pair.map(|(a, b)| (t.render(a), t.render(b))),
    })
}
