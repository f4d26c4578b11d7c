//! Enumeration of finite `Z[G]`-modules: abelian groups of bounded order
//! together with ordered pairs of commuting involutive automorphisms.
//!
//! Every module splits over the Sylow subgroups of its group, so pairs are
//! enumerated one `p`-group at a time and combined block-diagonally.
//!
//! For a `p`-group `M = ⊕ Z/p^e_i` the involutions of `Aut(M)` are found in
//! two steps. Their reductions are involutions of `M/pM = F_p^k` that
//! preserve the filtration by factor order; those are enumerated as
//! conjugacy-class orbits of known class representatives under elementary
//! generators of `GL_k(F_p)`. Each reduction is then lifted in all possible
//! ways and the lifts squaring to the identity are kept.
//!
//! Pairs are reduced up to simultaneous conjugation by `Aut(M)`. The
//! reduction only ever merges conjugate pairs, so it can produce duplicates
//! (when sampled centralizer generators miss part of a centralizer) but never
//! loses a module.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{gcd, FiniteKleinModule};

/// Whether pairs of involutions are reduced up to conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// One pair per conjugacy orbit (up to possible duplicates).
    Conjugacy,
    /// Every ordered pair of commuting involutions.
    None,
}

/// Streams every module of order `≤ max_order`, deduplicated up to
/// isomorphism. Modules come out grouped by order, then by group.
pub fn enumerate_modules(max_order: u64) -> ModuleStream {
    ModuleStream::new(max_order, Dedup::Conjugacy)
}

/// Like [`enumerate_modules`] but without deduplication: every ordered pair
/// of commuting involutive automorphisms of every group. Only practical for
/// small orders.
pub fn enumerate_modules_exhaustive(max_order: u64) -> ModuleStream {
    ModuleStream::new(max_order, Dedup::None)
}

pub struct ModuleStream {
    next_order: u64,
    max_order: u64,
    dedup: Dedup,
    pending: VecDeque<FiniteKleinModule>,
    cache: HashMap<Vec<u64>, Arc<Vec<(Mat, Mat)>>>,
}

impl ModuleStream {
    fn new(max_order: u64, dedup: Dedup) -> Self {
        Self {
            next_order: 1,
            max_order,
            dedup,
            pending: VecDeque::new(),
            cache: HashMap::new(),
        }
    }

    fn pairs_for(&mut self, orders: &[u64]) -> Arc<Vec<(Mat, Mat)>> {
        if let Some(p) = self.cache.get(orders) {
            return Arc::clone(p);
        }
        let pairs = Arc::new(involution_pairs(orders, self.dedup));
        self.cache.insert(orders.to_vec(), Arc::clone(&pairs));
        pairs
    }

    fn fill(&mut self, order: u64) {
        for group in abelian_groups(order) {
            let sylows: Vec<Vec<u64>> = split_by_prime(&group);
            let lists: Vec<Arc<Vec<(Mat, Mat)>>> =
                sylows.iter().map(|s| self.pairs_for(s)).collect();
            let mut choice = vec![0usize; lists.len()];
            loop {
                let parts: Vec<(&[u64], &(Mat, Mat))> = sylows
                    .iter()
                    .zip(&lists)
                    .zip(&choice)
                    .map(|((s, l), &c)| (s.as_slice(), &l[c]))
                    .collect();
                self.pending.push_back(block_module(&group, &parts));
                // Odometer over the Sylow factors.
                let mut pos = 0;
                loop {
                    if pos == choice.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < lists[pos].len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == choice.len() {
                    break;
                }
            }
        }
    }
}

impl Iterator for ModuleStream {
    type Item = FiniteKleinModule;

    fn next(&mut self) -> Option<FiniteKleinModule> {
        while self.pending.is_empty() {
            if self.next_order > self.max_order {
                return None;
            }
            let n = self.next_order;
            self.next_order += 1;
            self.fill(n);
        }
        self.pending.pop_front()
    }
}

fn block_module(orders: &[u64], parts: &[(&[u64], &(Mat, Mat))]) -> FiniteKleinModule {
    let k = orders.len();
    let mut s1 = vec![vec![0u64; k]; k];
    let mut s2 = vec![vec![0u64; k]; k];
    let mut off = 0;
    for (sub, (a, b)) in parts {
        let kk = sub.len();
        for i in 0..kk {
            for j in 0..kk {
                s1[off + i][off + j] = a.get(kk, i, j) as u64;
                s2[off + i][off + j] = b.get(kk, i, j) as u64;
            }
        }
        off += kk;
    }
    FiniteKleinModule::from_parts(orders.to_vec(), s1, s2)
}

/// Prime factorization in ascending order of primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `n` into nonincreasing positive parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All abelian groups of order `n` up to isomorphism, each written as its
/// primary decomposition: cyclic prime-power orders, primes ascending and
/// powers descending within a prime. The trivial group is `[]`.
pub fn abelian_groups(n: u64) -> Vec<Vec<u64>> {
    let mut groups: Vec<Vec<u64>> = vec![vec![]];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for g in &groups {
            for part in partitions(e) {
                let mut h = g.clone();
                h.extend(part.iter().map(|&k| p.pow(k)));
                next.push(h);
            }
        }
        groups = next;
    }
    groups
}

fn split_by_prime(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut last = 0;
    for &n in orders {
        let p = factorize(n)[0].0;
        if p != last {
            out.push(Vec::new());
            last = p;
        }
        out.last_mut().unwrap().push(n);
    }
    out
}

/// A `k×k` endomorphism matrix, row-major. Row `i` lives modulo `n_i`;
/// column `j` is the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mat(Vec<u32>);

impl Mat {
    fn identity(k: usize) -> Self {
        let mut a = vec![0u32; k * k];
        for i in 0..k {
            a[i * k + i] = 1;
        }
        Mat(a)
    }

    fn get(&self, k: usize, i: usize, j: usize) -> u32 {
        self.0[i * k + j]
    }

    fn mul(&self, other: &Mat, n: &[u64]) -> Mat {
        let k = n.len();
        let mut c = vec![0u32; k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = 0u64;
                for l in 0..k {
                    acc += self.0[i * k + l] as u64 * other.0[l * k + j] as u64;
                }
                c[i * k + j] = (acc % n[i]) as u32;
            }
        }
        Mat(c)
    }

    fn is_identity(&self, k: usize) -> bool {
        (0..k).all(|i| (0..k).all(|j| self.0[i * k + j] == u32::from(i == j)))
    }
}

/// An elementary automorphism of `⊕ Z/n_i`.
#[derive(Clone, Copy, Debug)]
enum Elementary {
    /// `e_j ↦ e_j + h·e_i`, i.e. `I + h·E_ij`.
    Transvection { i: usize, j: usize, h: u64 },
    /// `e_i ↦ u·e_i`.
    Scale { i: usize, u: u64, u_inv: u64 },
    /// Exchange `e_i` and `e_j` (requires `n_i = n_j`).
    Swap { i: usize, j: usize },
}

impl Elementary {
    /// `g·X·g⁻¹` via row and column operations.
    fn conjugate(&self, x: &Mat, n: &[u64]) -> Mat {
        let k = n.len();
        let mut a = x.0.clone();
        match *self {
            Elementary::Transvection { i, j, h } => {
                for l in 0..k {
                    let v = a[i * k + l] as u64 + h * a[j * k + l] as u64;
                    a[i * k + l] = (v % n[i]) as u32;
                }
                for r in 0..k {
                    let sub = (h * a[r * k + i] as u64) % n[r];
                    a[r * k + j] = ((a[r * k + j] as u64 + n[r] - sub) % n[r]) as u32;
                }
            }
            Elementary::Scale { i, u, u_inv } => {
                for l in 0..k {
                    a[i * k + l] = ((a[i * k + l] as u64 * u) % n[i]) as u32;
                }
                for r in 0..k {
                    a[r * k + i] = ((a[r * k + i] as u64 * u_inv) % n[r]) as u32;
                }
            }
            Elementary::Swap { i, j } => {
                for l in 0..k {
                    a.swap(i * k + l, j * k + l);
                }
                for r in 0..k {
                    a.swap(r * k + i, r * k + j);
                }
            }
        }
        Mat(a)
    }

    fn matrix(&self, n: &[u64]) -> Mat {
        let k = n.len();
        let mut m = Mat::identity(k);
        match *self {
            Elementary::Transvection { i, j, h } => m.0[i * k + j] = (h % n[i]) as u32,
            Elementary::Scale { i, u, .. } => m.0[i * k + i] = (u % n[i]) as u32,
            Elementary::Swap { i, j } => {
                m.0[i * k + i] = 0;
                m.0[j * k + j] = 0;
                m.0[i * k + j] = 1;
                m.0[j * k + i] = 1;
            }
        }
        m
    }

    fn inverse(&self, n: &[u64]) -> Elementary {
        match *self {
            Elementary::Transvection { i, j, h } => Elementary::Transvection {
                i,
                j,
                h: (n[i] - h % n[i]) % n[i],
            },
            Elementary::Scale { i, u, u_inv } => Elementary::Scale {
                i,
                u: u_inv,
                u_inv: u,
            },
            Elementary::Swap { .. } => *self,
        }
    }
}

fn mod_inverse(u: u64, n: u64) -> u64 {
    (1..n).find(|&v| (u * v) % n == 1).expect("not a unit")
}

/// Generators of the unit group of `Z/n` for a prime power `n`.
fn unit_generators(n: u64) -> Vec<u64> {
    if n <= 2 {
        return vec![];
    }
    let (p, _) = factorize(n)[0];
    if p == 2 {
        return if n == 4 { vec![3] } else { vec![n - 1, 5] };
    }
    let phi = n / p * (p - 1);
    let prime_divisors: Vec<u64> = factorize(phi).into_iter().map(|(q, _)| q).collect();
    let g = (2..n)
        .find(|&g| g % p != 0 && prime_divisors.iter().all(|&q| pow_mod(g, phi / q, n) != 1))
        .expect("prime powers have primitive roots");
    vec![g]
}

fn pow_mod(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc
}

/// Elementary generators of `Aut(⊕ Z/n_i)` for a `p`-group (or `F_p^k`).
fn elementary_generators(n: &[u64]) -> Vec<Elementary> {
    let k = n.len();
    let mut gens = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let h = n[i] / gcd(n[i], n[j]);
                gens.push(Elementary::Transvection { i, j, h });
            }
        }
    }
    for (i, &ni) in n.iter().enumerate() {
        for u in unit_generators(ni) {
            gens.push(Elementary::Scale {
                i,
                u,
                u_inv: mod_inverse(u, ni),
            });
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if n[i] == n[j] {
                gens.push(Elementary::Swap { i, j });
            }
        }
    }
    gens
}

/// Conjugacy-class representatives of involutions in `GL_k(F_p)`:
/// `I + N_r` with `N_r² = 0` of rank `r` for `p = 2`, and `diag(±1)` for odd `p`.
fn involution_class_seeds(p: u64, k: usize) -> Vec<Mat> {
    let mut seeds = Vec::new();
    if p == 2 {
        for r in 0..=k / 2 {
            let mut m = Mat::identity(k);
            for t in 0..r {
                m.0[t * k + (r + t)] = 1;
            }
            seeds.push(m);
        }
    } else {
        for minus in 0..=k {
            let mut m = Mat::identity(k);
            for t in 0..minus {
                m.0[t * k + t] = (p - 1) as u32;
            }
            seeds.push(m);
        }
    }
    seeds
}

/// Orbit of `seed` under conjugation by `gens`, with a BFS tree for
/// reconstructing transversal elements.
struct Orbit {
    points: Vec<Mat>,
    index: HashMap<Mat, usize>,
    /// `(parent, generator)` for every point but the first.
    tree: Vec<Option<(usize, usize)>>,
}

impl Orbit {
    fn explore(seed: Mat, gens: &[Elementary], n: &[u64]) -> Orbit {
        let mut orbit = Orbit {
            points: vec![seed.clone()],
            index: HashMap::from([(seed, 0)]),
            tree: vec![None],
        };
        let mut head = 0;
        while head < orbit.points.len() {
            let x = orbit.points[head].clone();
            for (gi, g) in gens.iter().enumerate() {
                let y = g.conjugate(&x, n);
                if !orbit.index.contains_key(&y) {
                    orbit.index.insert(y.clone(), orbit.points.len());
                    orbit.points.push(y);
                    orbit.tree.push(Some((head, gi)));
                }
            }
            head += 1;
        }
        orbit
    }

    /// `(u, u⁻¹)` with `points[idx] = u·points[0]·u⁻¹`.
    fn transversal(&self, idx: usize, gens: &[Elementary], n: &[u64]) -> (Mat, Mat) {
        let k = n.len();
        let mut u = Mat::identity(k);
        let mut u_inv = Mat::identity(k);
        let mut cur = idx;
        while let Some((parent, gi)) = self.tree[cur] {
            // points[cur] = g·points[parent]·g⁻¹, walked from the far end.
            u = u.mul(&gens[gi].matrix(n), n);
            u_inv = gens[gi].inverse(n).matrix(n).mul(&u_inv, n);
            cur = parent;
        }
        (u, u_inv)
    }
}

/// Involutions of `F_p^k` of the form `I + N` (or semisimple for odd `p`)
/// that respect the order filtration: entry `(i, j)` vanishes when `n_i > n_j`.
fn reduced_involutions(p: u64, n: &[u64]) -> Vec<Mat> {
    let k = n.len();
    let field = vec![p; k];
    let gens = elementary_generators(&field);
    let mut all = Vec::new();
    for seed in involution_class_seeds(p, k) {
        all.extend(Orbit::explore(seed, &gens, &field).points);
    }
    all.retain(|m| (0..k).all(|i| (0..k).all(|j| n[i] <= n[j] || m.get(k, i, j) == 0)));
    all
}

/// All involutions in `Aut(⊕ Z/n_i)` for a `p`-group.
pub(crate) fn involutions(n: &[u64]) -> Vec<Mat> {
    let k = n.len();
    if k == 0 {
        return vec![Mat(vec![])];
    }
    let p = factorize(n[0])[0].0;
    let mut out = Vec::new();
    for red in reduced_involutions(p, n) {
        // Choices per entry: residues ≡ red (mod p) when n_i ≤ n_j, and
        // multiples of n_i/n_j otherwise.
        let choices: Vec<Vec<u32>> = (0..k * k)
            .map(|idx| {
                let (i, j) = (idx / k, idx % k);
                if n[i] <= n[j] {
                    let r = red.0[idx] as u64;
                    (0..n[i] / p).map(|t| (r + p * t) as u32).collect()
                } else {
                    let step = n[i] / n[j];
                    (0..n[j]).map(|t| (step * t) as u32).collect()
                }
            })
            .collect();
        let mut pick = vec![0usize; k * k];
        loop {
            let x = Mat(pick.iter().zip(&choices).map(|(&c, ch)| ch[c]).collect());
            if x.mul(&x, n).is_identity(k) {
                out.push(x);
            }
            let mut pos = 0;
            while pos < pick.len() {
                pick[pos] += 1;
                if pick[pos] < choices[pos].len() {
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
            if pos == pick.len() {
                break;
            }
        }
    }
    out
}

enum Conjugator {
    Elementary(Elementary),
    General(Mat, Mat),
}

impl Conjugator {
    fn conjugate(&self, x: &Mat, n: &[u64]) -> Mat {
        match self {
            Conjugator::Elementary(e) => e.conjugate(x, n),
            Conjugator::General(g, g_inv) => g.mul(x, n).mul(g_inv, n),
        }
    }
}

/// Number of Schreier generators sampled per centralizer.
const SCHREIER_SAMPLES: usize = 24;

/// Commuting pairs of involutions of a `p`-group, optionally reduced up to
/// simultaneous conjugation.
pub(crate) fn involution_pairs(n: &[u64], dedup: Dedup) -> Vec<(Mat, Mat)> {
    let invs = involutions(n);
    let commute = |a: &Mat, b: &Mat| a.mul(b, n) == b.mul(a, n);
    if dedup == Dedup::None {
        let mut out = Vec::new();
        for a in &invs {
            for b in &invs {
                if commute(a, b) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        return out;
    }

    let gens = elementary_generators(n);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n.iter().product::<u64>());
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = Vec::new();
    for s1 in &invs {
        if seen.contains(s1) {
            continue;
        }
        let class = Orbit::explore(s1.clone(), &gens, n);
        seen.extend(class.points.iter().cloned());

        // Generators of (a subgroup of) the centralizer of s1.
        let centralizer: Vec<Conjugator> = if class.points.len() == 1 {
            gens.iter().map(|&g| Conjugator::Elementary(g)).collect()
        } else {
            let total = class.points.len() * gens.len();
            let sample: Vec<(usize, usize)> = if total <= SCHREIER_SAMPLES {
                (0..class.points.len())
                    .flat_map(|p| (0..gens.len()).map(move |g| (p, g)))
                    .collect()
            } else {
                (0..SCHREIER_SAMPLES)
                    .map(|_| {
                        (
                            rng.gen_range(0..class.points.len()),
                            rng.gen_range(0..gens.len()),
                        )
                    })
                    .collect()
            };
            let mut c: Vec<Conjugator> = sample
                .into_iter()
                .map(|(p, gi)| {
                    let g = &gens[gi];
                    let (u_p, u_p_inv) = class.transversal(p, &gens, n);
                    let image = g.conjugate(&class.points[p], n);
                    let q = class.index[&image];
                    let (u_q, u_q_inv) = class.transversal(q, &gens, n);
                    let s = u_q_inv.mul(&g.matrix(n), n).mul(&u_p, n);
                    let s_inv = u_p_inv.mul(&g.inverse(n).matrix(n), n).mul(&u_q, n);
                    Conjugator::General(s, s_inv)
                })
                .collect();
            c.push(Conjugator::General(s1.clone(), s1.clone()));
            c
        };

        let candidates: Vec<&Mat> = invs.iter().filter(|b| commute(s1, b)).collect();
        let mut done: HashSet<Mat> = HashSet::new();
        for &s2 in &candidates {
            if done.contains(s2) {
                continue;
            }
            out.push((s1.clone(), s2.clone()));
            let mut queue = vec![s2.clone()];
            done.insert(s2.clone());
            while let Some(x) = queue.pop() {
                for c in &centralizer {
                    let y = c.conjugate(&x, n);
                    if done.insert(y.clone()) {
                        queue.push(y);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_by_order() {
        assert_eq!(abelian_groups(1), vec![Vec::<u64>::new()]);
        assert_eq!(abelian_groups(4), vec![vec![4], vec![2, 2]]);
        assert_eq!(abelian_groups(12), vec![vec![4, 3], vec![2, 2, 3]]);
        assert_eq!(abelian_groups(64).len(), 11);
        assert_eq!(abelian_groups(32).len(), 7);
        assert_eq!(abelian_groups(36).len(), 4);
    }

    #[test]
    fn involution_counts() {
        // Involutions of GL_k(F_2), identity included.
        assert_eq!(involutions(&[2]).len(), 1);
        assert_eq!(involutions(&[2, 2]).len(), 4);
        assert_eq!(involutions(&[2, 2, 2]).len(), 22);
        assert_eq!(involutions(&[2, 2, 2, 2]).len(), 316);
        // Aut(Z/4) = {1, 3}; Aut(Z/8) has four involutions.
        assert_eq!(involutions(&[4]).len(), 2);
        assert_eq!(involutions(&[8]).len(), 4);
        // Odd order: ±1 only on a cyclic group.
        assert_eq!(involutions(&[27]).len(), 2);
        // Mixed cases against a direct count.
        assert_eq!(involutions(&[3, 3]).len(), brute_force_involutions(&[3, 3]));
        assert_eq!(involutions(&[4, 2]).len(), brute_force_involutions(&[4, 2]));
        assert_eq!(involutions(&[4, 4]).len(), brute_force_involutions(&[4, 4]));
        assert_eq!(
            involutions(&[8, 2, 2]).len(),
            brute_force_involutions(&[8, 2, 2])
        );
        assert_eq!(
            involutions(&[4, 2, 2]).len(),
            brute_force_involutions(&[4, 2, 2])
        );
        assert_eq!(involutions(&[9, 3]).len(), brute_force_involutions(&[9, 3]));
    }

    /// Independent count: every valid matrix, squared.
    fn brute_force_involutions(n: &[u64]) -> usize {
        let k = n.len();
        let choices: Vec<Vec<u32>> = (0..k * k)
            .map(|idx| {
                let (i, j) = (idx / k, idx % k);
                let step = n[i] / gcd(n[i], n[j]);
                (0..n[i])
                    .filter(|v| v % step == 0)
                    .map(|v| v as u32)
                    .collect()
            })
            .collect();
        let mut pick = vec![0usize; k * k];
        let mut count = 0;
        loop {
            let x = Mat(pick.iter().zip(&choices).map(|(&c, ch)| ch[c]).collect());
            if x.mul(&x, n).is_identity(k) {
                count += 1;
            }
            let mut pos = 0;
            while pos < pick.len() {
                pick[pos] += 1;
                if pick[pos] < choices[pos].len() {
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
            if pos == pick.len() {
                return count;
            }
        }
    }

    #[test]
    fn elementary_conjugation_matches_matrices() {
        let n = [4u64, 2, 2];
        let invs = involutions(&n);
        for g in elementary_generators(&n) {
            let (m, m_inv) = (g.matrix(&n), g.inverse(&n).matrix(&n));
            assert!(m.mul(&m_inv, &n).is_identity(3));
            for x in invs.iter().take(40) {
                assert_eq!(g.conjugate(x, &n), m.mul(x, &n).mul(&m_inv, &n));
            }
        }
    }

    #[test]
    fn small_orders() {
        let mods: Vec<_> = enumerate_modules(1).collect();
        assert_eq!(mods, vec![FiniteKleinModule::trivial()]);

        let mods: Vec<_> = enumerate_modules(2).collect();
        assert_eq!(mods.len(), 2);
        assert_eq!(mods[1], FiniteKleinModule::cyclic(2, 1, 1).unwrap());

        let order4: Vec<_> = enumerate_modules(4).filter(|m| m.order() == 4).collect();
        let z4 = order4.iter().filter(|m| m.orders() == [4]).count();
        let klein = order4.iter().filter(|m| m.orders() == [2, 2]).count();
        assert_eq!(z4, 4);
        assert_eq!(klein, 4);
        let raw_klein = enumerate_modules_exhaustive(4)
            .filter(|m| m.orders() == [2, 2])
            .count();
        assert_eq!(raw_klein, 10);
    }

    #[test]
    fn enumerated_modules_are_valid() {
        for m in enumerate_modules(24) {
            let s = |x: &[Vec<u64>]| {
                x.iter()
                    .map(|r| r.iter().map(|&v| v as i64).collect())
                    .collect()
            };
            let checked = FiniteKleinModule::new(m.orders().to_vec(), s(m.s1()), s(m.s2()));
            assert_eq!(checked.as_ref(), Ok(&m));
        }
    }
}
