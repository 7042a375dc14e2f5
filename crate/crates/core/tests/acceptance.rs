//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run
//! with `cargo test --test acceptance -- --nocapture --test-threads=1` to
//! see them in order.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use lo_surgery::alexander::{closed_form_family, determinant_of_knot};
use lo_surgery::family::longitude_with_leading_exponent;
use lo_surgery::rootcert::{g_prime_theta, g_theta};
use lo_surgery::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: &str, title: &str, started: Instant, limit: Duration, failures: &[String]) {
    let elapsed = started.elapsed();
    let on_time = elapsed <= limit;
    let ok = failures.is_empty() && on_time;
    println!(
        "[{}] {id}: {title} ({:.3}s, limit {}s){}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        if failures.is_empty() {
            String::new()
        } else {
            format!(" -- {} failure(s), first: {}", failures.len(), failures[0])
        }
    );
    assert!(failures.is_empty(), "{id} failed: {failures:?}");
    assert!(on_time, "{id} exceeded its {limit:?} budget ({elapsed:?})");
}

fn fp(n: i64, m: i64) -> FamilyParams {
    FamilyParams::new(n, m).unwrap()
}

#[test]
fn ac1_pipeline_matches_closed_form() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=8 {
        for m in 1..=8 {
            let p = fp(n, m);
            let pipeline = alexander_polynomial(&presentation(p), &ColumnChoice::Auto);
            let closed = closed_form_family(p);
            match (pipeline, closed) {
                (Ok(a), Ok(b)) if a == b => {}
                (a, b) => failures.push(format!("{p}: pipeline {a:?} vs closed form {b:?}")),
            }
        }
    }
    report("AC1", "Fox pipeline equals closed form on [1,8]^2", t0, Duration::from_secs(10), &failures);
}

#[test]
fn ac2_torus_knot_oracle() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=10 {
        let closed = closed_form_family(fp(2, m)).unwrap();
        let torus = torus_knot_alexander(3, 3 * m + 2).unwrap();
        if closed != torus {
            failures.push(format!("m = {m}: {closed} vs T(3,{})", 3 * m + 2));
        }
    }
    if closed_form_family(fp(1, 1)).unwrap() != torus_knot_alexander(3, 4).unwrap() {
        failures.push("K(1,1) differs from T(3,4)".into());
    }
    report("AC2", "K(2,m) = T(3,3m+2) for m <= 10 and K(1,1) = T(3,4)", t0, Duration::from_secs(1), &failures);
}

#[test]
fn ac3_structural_invariants() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=20 {
        for m in 1..=20 {
            let p = fp(n, m);
            let d = closed_form_family(p).unwrap();
            if d.value_at_one() != 1.into() {
                failures.push(format!("{p}: Delta(1) = {}", d.value_at_one()));
            }
            if !d.is_palindromic() {
                failures.push(format!("{p}: not palindromic"));
            }
            if d.span() != 2 * (n + 3 * m - 1) {
                failures.push(format!("{p}: span {}", d.span()));
            }
            if !determinant_of_knot(&d).bit(0) {
                failures.push(format!("{p}: Delta(-1) even"));
            }
        }
    }
    report("AC3", "Delta(1)=1, palindromic, span 2(n+3m-1), Delta(-1) odd on [1,20]^2", t0, Duration::from_secs(5), &failures);
}

#[test]
fn ac4_longitude_nullhomology() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let a = Generator::new("a").unwrap();
    let w = Generator::new("w").unwrap();
    let class = |word: &Word| word.exponent_sum(&a) + 2 * word.exponent_sum(&w);
    let mut bad_exponent_detected = false;
    for n in 1..=20 {
        for m in 1..=20 {
            let p = fp(n, m);
            let lam = longitude(p);
            if class(&lam) != 0 {
                failures.push(format!("{p}: homology class {}", class(&lam)));
            }
            let bad = longitude_with_leading_exponent(p, -(2 * n + 9 * m + 2));
            if class(&bad) != 0 {
                bad_exponent_detected = true;
            }
        }
    }
    if !bad_exponent_detected {
        failures.push("wrong exponent 2n+9m+2 was never detected".into());
    }
    report("AC4", "longitude nullhomologous with weights (1,2); wrong exponent rejected", t0, Duration::from_secs(1), &failures);
}

#[test]
fn ac5_root_certification() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=50 {
        for m in 1..=50 {
            let p = fp(n, m);
            let cert = match certify_family_root(p) {
                Ok(c) => c,
                Err(e) => {
                    failures.push(format!("{p}: {e}"));
                    continue;
                }
            };
            let residual = match verify_root_against_delta(p, &cert) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{p}: {e}"));
                    continue;
                }
            };
            if residual >= 1e-8 {
                failures.push(format!("{p}: residual {residual:e}"));
            }
            if n == 1 {
                let exact = (2.0 * PI / 3.0) / (1.0 + 3.0 * m as f64);
                if cert.kind != CertificateKind::ExactCosine || (cert.theta_star - exact).abs() > 1e-14 {
                    failures.push(format!("{p}: theta* = {} vs {exact}", cert.theta_star));
                }
            } else {
                let (nf, mf) = (n as f64, m as f64);
                let lo = (PI / 2.0) / (nf + 3.0 * mf);
                let hi = (PI / 2.0) / (nf + 1.5 * mf - 0.75);
                if !(cert.theta_star > lo && cert.theta_star < hi) {
                    failures.push(format!("{p}: theta* = {} outside ({lo}, {hi})", cert.theta_star));
                }
                if !(g_theta(p, lo) > 0.0 && g_theta(p, hi) < 0.0) {
                    failures.push(format!("{p}: endpoint signs"));
                }
            }
        }
    }
    let spot = certify_family_root(fp(2, 1)).unwrap();
    if (spot.theta_star - 2.0 * PI / 15.0).abs() >= 1e-9 {
        failures.push(format!("K(2,1): theta* = {} vs 2pi/15", spot.theta_star));
    }
    report("AC5", "simple unit-circle root certified on [1,50]^2", t0, Duration::from_secs(30), &failures);
}

fn random_word(rng: &mut ChaCha8Rng, gens: &[Generator]) -> Word {
    let len = rng.gen_range(0..10);
    Word::from_syllables((0..len).map(|_| {
        let g = gens[rng.gen_range(0..gens.len())].clone();
        let mut e = rng.gen_range(-4i64..=4);
        if e == 0 {
            e = 1;
        }
        (g, e)
    }))
    .unwrap()
}

#[test]
fn ac6_fox_calculus_axioms() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f0c5);
    let gens: Vec<Generator> = ["a", "w", "x"].iter().map(|s| Generator::new(s).unwrap()).collect();
    let weights = Weights::new([(gens[0].clone(), 1), (gens[1].clone(), 2), (gens[2].clone(), -1)]).unwrap();

    let abelian_identity = |r: &Word, gs: &[Generator], wts: &Weights| -> bool {
        let mut lhs = LaurentPoly::zero();
        for g in gs {
            let term = &abelianize(&fox_derivative(r, g), wts) * &LaurentPoly::t_power_minus_one(wts.get(g));
            lhs = &lhs + &term;
        }
        let rhs = &LaurentPoly::monomial(1, wts.degree(r)) - &LaurentPoly::one();
        lhs == rhs
    };

    for i in 0..500 {
        let u = random_word(&mut rng, &gens);
        if !abelian_identity(&u, &gens, &weights) {
            failures.push(format!("abelianized identity fails for word #{i}: {u}"));
        }
        let mut sum = GroupRingElement::zero();
        for g in &gens {
            let gm1 = &GroupRingElement::from_word(Word::letter(g)) - &GroupRingElement::one();
            sum = &sum + &(&fox_derivative(&u, g) * &gm1);
        }
        if sum != &GroupRingElement::from_word(u.clone()) - &GroupRingElement::one() {
            failures.push(format!("group ring identity fails for word #{i}: {u}"));
        }
    }
    for n in 1..=20 {
        for m in 1..=20 {
            let pres = presentation(fp(n, m));
            let wts = compute_weights(&pres).unwrap();
            let r = &pres.relators()[0];
            if !abelian_identity(r, pres.generators(), &wts) || wts.degree(r) != 0 {
                failures.push(format!("{}: relator identity", fp(n, m)));
            }
        }
    }
    for i in 0..500 {
        let u = random_word(&mut rng, &gens);
        let v = random_word(&mut rng, &gens);
        for g in &gens {
            let lhs = fox_derivative(&(&u * &v), g);
            let rhs = &fox_derivative(&u, g) + &fox_derivative(&v, g).left_mul_word(&u);
            if lhs != rhs {
                failures.push(format!("product rule fails for pair #{i} ({u}) ({v}) d/d{g}"));
            }
        }
    }
    report("AC6", "fundamental identity and product rule", t0, Duration::from_secs(5), &failures);
}

#[test]
fn ac7_column_independence() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=6 {
        for m in 1..=6 {
            let pres = presentation(fp(n, m));
            let via_a = alexander_polynomial(&pres, &ColumnChoice::Generator(pres.generators()[0].clone()));
            let via_w = alexander_polynomial(&pres, &ColumnChoice::Generator(pres.generators()[1].clone()));
            match (via_a, via_w) {
                (Ok(x), Ok(y)) if x == y => {}
                (x, y) => failures.push(format!("{}: {x:?} vs {y:?}", fp(n, m))),
            }
        }
    }
    report("AC7", "a-column and w-column give the same Delta on [1,6]^2", t0, Duration::from_secs(5), &failures);
}

#[test]
fn ac8_slope_classification() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let check = |failures: &mut Vec<String>, n, m, p, q, want: Verdict| {
        let got = classify_surgery(fp(n, m), SurgerySlope::new(p, q).unwrap()).verdict;
        if got != want {
            failures.push(format!("K({n},{m}) at {p}/{q}: {got} (expected {want})"));
        }
    };
    check(&mut failures, 3, 1, 13, 1, Verdict::NotLeftOrderable);
    check(&mut failures, 1, 1, 5, 1, Verdict::NotLeftOrderable);
    check(&mut failures, 1, 1, 4, 1, Verdict::NoConclusion);

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let params = fp(rng.gen_range(1..=30), rng.gen_range(1..=30));
        let mut slope = || SurgerySlope::new(rng.gen_range(-400..=400), rng.gen_range(1..=40)).unwrap();
        let (s1, s2) = (slope(), slope());
        let (lo, hi) = if s1.value() <= s2.value() { (s1, s2) } else { (s2, s1) };
        let v_lo = classify_surgery(params, lo).verdict;
        let v_hi = classify_surgery(params, hi).verdict;
        if v_lo == Verdict::NotLeftOrderable && v_hi != Verdict::NotLeftOrderable {
            failures.push(format!("{params}: {lo} NLO but {hi} not"));
        }
        let expected = lo.value() >= slope_bound(params);
        if (v_lo == Verdict::NotLeftOrderable) != expected {
            failures.push(format!("{params}: {lo} misclassified"));
        }
    }
    report("AC8", "slope classification and monotonicity", t0, Duration::from_secs(1), &failures);
}

#[test]
fn ac9_derivative_check() {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let h = 1e-6;
    for _ in 0..200 {
        let p = fp(rng.gen_range(1..=50), rng.gen_range(1..=50));
        let theta: f64 = rng.gen_range(0.0..PI);
        let fd = (g_theta(p, theta + h) - g_theta(p, theta - h)) / (2.0 * h);
        let an = g_prime_theta(p, theta);
        if (fd - an).abs() >= 1e-5 {
            failures.push(format!("{p} at {theta}: analytic {an} vs fd {fd}"));
        }
    }
    report("AC9", "g' agrees with central differences", t0, Duration::from_secs(1), &failures);
}
