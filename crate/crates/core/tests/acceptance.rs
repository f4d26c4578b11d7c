//! End-to-end acceptance checks. Each criterion prints one `PASS`/`FAIL`
//! line; the process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use biquad90::field::{GaloisElement, Intermediate, NormTarget, Subfield};
use biquad90::module_lab::{sweep, SweepSummary, DEFAULT_MAX_ELEMENTS};
use biquad90::{
    coboundary_witness, crossed_hom_check, kernel_membership, norm_product_witness,
    pythagorean_triple, qform_decompose, qh90_witness, BiquadConfig, CrossedHom, ExtElement,
    GroupRingElement, QformBranch, QuadExtElement, Rational, Scalar, Verdict,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn rand_rational(rng: &mut impl Rng, span: i64) -> Rational {
    Rational::new(
        rng.gen_range(-span..=span).into(),
        rng.gen_range(1..=4i64).into(),
    )
}

fn rand_nonzero_rational(rng: &mut impl Rng, span: i64) -> Rational {
    loop {
        let x = rand_rational(rng, span);
        if !x.is_zero() {
            return x;
        }
    }
}

fn rand_element(rng: &mut impl Rng, k: &BiquadConfig) -> ExtElement {
    loop {
        let e = k.from_coords([(); 4].map(|_| rand_rational(rng, 9)));
        if !e.is_zero() {
            return e;
        }
    }
}

fn rand_config(rng: &mut impl Rng) -> BiquadConfig {
    loop {
        let a1 = rand_nonzero_rational(rng, 30);
        let a2 = rand_nonzero_rational(rng, 30);
        if let Ok(k) = BiquadConfig::new(a1, a2) {
            return k;
        }
    }
}

fn configs(rng: &mut impl Rng, extra: usize) -> Vec<BiquadConfig> {
    let mut out = vec![BiquadConfig::new(q(2), q(3)).unwrap()];
    out.extend((0..extra).map(|_| rand_config(rng)));
    out
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let spent = start.elapsed();
    ensure(spent < budget, || {
        format!("took {spent:?}, budget {budget:?}")
    })
}

fn qh90_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    let start = Instant::now();
    let ks = configs(rng, 5);
    let layers = [Intermediate::E1, Intermediate::E2, Intermediate::E3];
    let check = |layer: Intermediate, t: &ExtElement| -> Outcome {
        let l = qh90_witness(layer, t).map_err(|e| format!("{layer:?}, t = {t}: {e}"))?;
        let sigma = layer.sigma();
        ensure(
            !l.is_zero() && l.checked_div(&l.galois(sigma)).unwrap() == *t,
            || format!("{layer:?}: witness {l} fails for t = {t}"),
        )
    };
    for layer in layers {
        for n in 0..1000 {
            let k = &ks[n % ks.len()];
            let beta = rand_element(rng, k);
            let t = beta.checked_div(&beta.galois(layer.sigma())).unwrap();
            check(layer, &t)?;
        }
        for k in &ks {
            check(layer, &k.scalar(q(-1)))?;
            check(layer, &k.one())?;
        }
    }
    within(start, Duration::from_secs(10))
}

fn kernel_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    let start = Instant::now();
    let mut positives = 0;
    for k in configs(rng, 2) {
        for n in 0..10_000 {
            let e = match n % 3 {
                0 => rand_element(rng, &k),
                1 => {
                    let g1 = k.in_e1(rand_nonzero_rational(rng, 9), rand_rational(rng, 9));
                    let g2 = k.in_e2(rand_nonzero_rational(rng, 9), rand_rational(rng, 9));
                    &g1 * &g2
                }
                _ => {
                    let (x, y) = (rand_nonzero_rational(rng, 9), rand_rational(rng, 9));
                    match rng.gen_range(0..4) {
                        0 => k.in_e1(x, y),
                        1 => k.in_e2(x, y),
                        2 => k.in_e3(x, y),
                        _ => k.scalar(x),
                    }
                }
            };
            let r = kernel_membership(&e).map_err(|err| format!("{e}: {err}"))?;
            ensure(r.all_agree(), || format!("flags {:?} for {e}", r.flags()))?;
            if r.in_kernel() {
                positives += 1;
                let d = r.decomposition.as_ref().ok_or("missing decomposition")?;
                let w = r.norm_witness.as_ref().ok_or("missing norm witness")?;
                ensure(d.verify(&e) && w.verify(&e), || {
                    format!("bad certificates for {e}")
                })?;
            }
        }
    }
    ensure(positives > 10_000, || {
        format!("only {positives} kernel elements")
    })?;
    within(start, Duration::from_secs(30))
}

fn coboundary_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    let start = Instant::now();
    let ks = configs(rng, 4);
    let round_trip = |h: &CrossedHom| -> Outcome {
        let beta = coboundary_witness(h).map_err(|e| e.to_string())?;
        ensure(!beta.is_zero(), || "zero witness".into())?;
        let back = CrossedHom::coboundary_of(&beta).map_err(|e| e.to_string())?;
        ensure(back == *h, || {
            format!(
                "({}, {}) -> {beta} does not round-trip",
                h.alpha1(),
                h.alpha2()
            )
        })
    };
    for n in 0..1000 {
        let k = &ks[n % ks.len()];
        let beta = rand_element(rng, k);
        let h = CrossedHom::coboundary_of(&beta).unwrap();
        let h = crossed_hom_check(h.alpha1().clone(), h.alpha2().clone())
            .map_err(|e| format!("coboundary of {beta} rejected: {e}"))?;
        round_trip(&h)?;
    }
    for k in &ks {
        for (a1, a2) in [(1, 1), (-1, 1)] {
            let h =
                crossed_hom_check(k.scalar(q(a1)), k.scalar(q(a2))).map_err(|e| e.to_string())?;
            round_trip(&h)?;
        }
    }
    within(start, Duration::from_secs(10))
}

fn norm_identity_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    let ks = configs(rng, 4);
    for n in 0..1000 {
        let k = &ks[n % ks.len()];
        let g1 = k.in_e1(rand_nonzero_rational(rng, 9), rand_rational(rng, 9));
        let g2 = k.in_e2(rand_nonzero_rational(rng, 9), rand_rational(rng, 9));
        let lhs = (&g1 * &g2).norm_to(Intermediate::E3);
        let n1 = g1.norm(NormTarget::FFromE1).unwrap();
        let n2 = g2.norm(NormTarget::FFromE2).unwrap();
        ensure(lhs.lies_in(Subfield::F) && lhs == &n1 * &n2, || {
            format!("forward identity fails for {g1}, {g2}")
        })?;
    }
    for n in 0..1000 {
        let k = &ks[n % ks.len()];
        // Sample the kernel straight from its coordinate description
        // f0·f3 = f1·f2, independently of any factorization.
        let (f1, f2) = (rand_rational(rng, 9), rand_rational(rng, 9));
        let e = if rng.gen_bool(0.9) {
            let f0 = rand_nonzero_rational(rng, 9);
            let f3 = f1.clone() * f2.clone() / f0.clone();
            k.element(f0, f1, f2, f3)
        } else if rng.gen_bool(0.5) {
            k.element(q(0), f1, q(0), rand_nonzero_rational(rng, 9))
        } else {
            k.element(
                q(0),
                q(0),
                rand_nonzero_rational(rng, 9),
                rand_rational(rng, 9),
            )
        };
        if e.is_zero() {
            continue;
        }
        ensure(e.norm_to(Intermediate::E3).lies_in(Subfield::F), || {
            format!("{e} not in K4")
        })?;
        let w = norm_product_witness(&e).map_err(|err| format!("{e}: {err}"))?;
        let (n1, n2) = w.norms().ok_or("witness outside subfields")?;
        let lhs = e.norm_to(Intermediate::E3);
        ensure(lhs.as_scalar() == Some(&(n1 * n2)), || {
            format!("reverse identity fails for {e}")
        })?;
    }
    Ok(())
}

fn qform_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    let quad = |u: i64, v: i64, b: i64| QuadExtElement::new(q(u), q(v), q(b));
    let d =
        qform_decompose(&q(2), &q(3), &quad(1, 2, 3), &quad(1, 1, 3)).map_err(|e| e.to_string())?;
    ensure(d.value == q(5) && d.verify(&q(2), &q(3)), || {
        format!("worked case gave {d:?}")
    })?;

    let nonsquare = |rng: &mut ChaCha8Rng| loop {
        let x = rand_nonzero_rational(rng, 20);
        if x.exact_sqrt().is_none() {
            return x;
        }
    };
    let mut seen = [0usize; 4];
    let mut cases = 0;
    while cases < 1000 {
        let branch = cases % 4;
        let (a, b) = match branch {
            0 => {
                let s = rand_nonzero_rational(rng, 6);
                (rand_nonzero_rational(rng, 20), s.clone() * s)
            }
            1 => {
                let c = rand_nonzero_rational(rng, 6);
                (c.clone() * c, nonsquare(rng))
            }
            2 => {
                let (a, c) = (nonsquare(rng), rand_nonzero_rational(rng, 6));
                (a.clone(), c.clone() * c / a)
            }
            _ => {
                let (a, b) = (nonsquare(rng), nonsquare(rng));
                if (a.clone() * b.clone()).exact_sqrt().is_some() {
                    continue;
                }
                (a, b)
            }
        };
        // Choose x, y in F(√b) with x² − a·y² ∈ F: u_x·v_x = a·u_y·v_y.
        let ux = rand_nonzero_rational(rng, 9);
        let (uy, vy) = (rand_rational(rng, 9), rand_rational(rng, 9));
        let vx = a.clone() * uy.clone() * vy.clone() / ux.clone();
        let expected = ux.clone() * ux.clone() + b.clone() * vx.clone() * vx.clone()
            - a.clone() * (uy.clone() * uy.clone() + b.clone() * vy.clone() * vy.clone());
        if expected.is_zero() {
            continue;
        }
        let x = QuadExtElement::new(ux, vx, b.clone());
        let y = QuadExtElement::new(uy, vy, b.clone());
        let d = qform_decompose(&a, &b, &x, &y).map_err(|e| format!("a={a}, b={b}: {e}"))?;
        let want = [
            QformBranch::BSquare,
            QformBranch::ASquare,
            QformBranch::AbSquare,
            QformBranch::Generic,
        ];
        ensure(d.branch == want[branch], || {
            format!("a={a}, b={b}: branch {:?}", d.branch)
        })?;
        ensure(d.value == expected && d.verify(&a, &b), || {
            format!("a={a}, b={b}: {d:?}")
        })?;
        seen[branch] += 1;
        cases += 1;
    }
    ensure(seen.iter().all(|&s| s == 250), || {
        format!("branch counts {seen:?}")
    })
}

fn sweep_criterion() -> Outcome {
    let start = Instant::now();
    let entries = sweep(64, DEFAULT_MAX_ELEMENTS);
    let s = SweepSummary::tally(&entries);
    if let Some(bad) = entries.iter().find(|e| {
        e.report
            .as_ref()
            .map_or(true, |r| r.verdict == Verdict::Fail || !r.inclusion)
    }) {
        return Err(format!("{:?}: {:?}", bad.module, bad.report));
    }
    ensure(s.modules > 16_000 && s.fail == 0 && s.errors == 0, || {
        format!("{s:?}")
    })?;
    println!(
        "  swept {} modules: {} PASS, {} SKIPPED, {} FAIL",
        s.modules, s.pass, s.skipped, s.fail
    );
    within(start, Duration::from_secs(300))
}

fn group_ring_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    type Zg = GroupRingElement;
    let rand_zg = |rng: &mut ChaCha8Rng, span: i64| {
        Zg::from_coeffs([(); 4].map(|_| BigInt::from(rng.gen_range(-span..=span))))
    };
    for _ in 0..1000 {
        let (u, v) = (rand_zg(rng, 50), rand_zg(rng, 50));
        let mut oracle = [(); 4].map(|_| BigInt::zero());
        for g in GaloisElement::ALL {
            for h in GaloisElement::ALL {
                oracle[g.compose(h).index()] += u.coeff(g) * v.coeff(h);
            }
        }
        ensure(&u * &v == Zg::from_coeffs(oracle), || {
            format!("({u})·({v})")
        })?;
    }
    for s in [GaloisElement::S1, GaloisElement::S2, GaloisElement::S12] {
        ensure((&Zg::one_plus(s) * &Zg::one_minus(s)).is_zero(), || {
            format!("(1+{s})(1-{s})")
        })?;
    }
    let ks = configs(rng, 2);
    for n in 0..1000 {
        let k = &ks[n % ks.len()];
        let (u, v) = (rand_zg(rng, 2), rand_zg(rng, 2));
        let e = loop {
            let e = k.from_coords([(); 4].map(|_| q(rng.gen_range(-3..=3))));
            if !e.is_zero() {
                break e;
            }
        };
        let act = |w: &Zg, e: &ExtElement| w.act(e).unwrap();
        ensure(act(&(&u + &v), &e) == &act(&u, &e) * &act(&v, &e), || {
            format!("sum: {u}, {v}, {e}")
        })?;
        ensure(act(&(&u * &v), &e) == act(&u, &act(&v, &e)), || {
            format!("product: {u}, {v}, {e}")
        })?;
        ensure(act(&Zg::one(), &e) == e, || format!("unit: {e}"))?;
    }
    Ok(())
}

fn pythagorean_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    ensure(pythagorean_triple(&2i64, &1) == Ok((3, 4, 5)), || {
        "(2, 1)".into()
    })?;
    ensure(pythagorean_triple(&3i64, &2) == Ok((5, 12, 13)), || {
        "(3, 2)".into()
    })?;
    for _ in 0..1000 {
        let m = BigInt::from(rng.gen_range(-10_000i64..=10_000));
        let n = BigInt::from(rng.gen_range(1i64..=10_000));
        let (p, qq, r) = pythagorean_triple(&m, &n).map_err(|e| e.to_string())?;
        ensure(&p * &p + &qq * &qq == &r * &r, || format!("({m}, {n})"))?;
        let primitive_input = m.gcd(&n).is_one() && (&m + &n).is_odd();
        if primitive_input {
            ensure(p.gcd(&qq).gcd(&r).is_one(), || {
                format!("({m}, {n}) not primitive")
            })?;
        }
    }
    Ok(())
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    let criteria: Vec<(&str, Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>)> = vec![
        ("quadratic Hilbert 90 witnesses", Box::new(qh90_criterion)),
        ("five kernel descriptions agree", Box::new(kernel_criterion)),
        (
            "crossed homomorphisms are coboundaries",
            Box::new(coboundary_criterion),
        ),
        (
            "norm identity, both inclusions",
            Box::new(norm_identity_criterion),
        ),
        ("quadratic form factorization", Box::new(qform_criterion)),
        (
            "finite module sweep to order 64",
            Box::new(|_| sweep_criterion()),
        ),
        (
            "group ring arithmetic and action",
            Box::new(group_ring_criterion),
        ),
        ("Pythagorean triples", Box::new(pythagorean_criterion)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        match run(&mut rng) {
            Ok(()) => println!("PASS  {}. {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
