//! Acceptance criteria, one line each. All comparisons are exact over the
//! rationals; there is no tolerance anywhere.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use superjordan::bracket::{
    check_jordan_bracket, kantor_double, AxiomForm, CurveCarrier, DBracket, GrassmannCarrier,
};
use superjordan::constructions::{
    check_dual_path, check_embedding, check_w_extraction, embed_special, jvec_mul, probe_vectors,
    ChengKac, JADelta, OpMatrix, ProductPath, VecElem, VectorType,
};
use superjordan::curve::{self, CurveElem, Derivation, Space};
use superjordan::identities::{
    check_identity_1, check_identity_2, check_identity_3, check_identity_4, CheckConfig, CheckReport,
};
use superjordan::structure::certificate::evaluate_associator_form;
use superjordan::structure::{
    d_ideal_saturate, derivation_ideal, find_certificate, noncyclic_probe, parity_degree_witness,
    replay, sample_witness_input, super_ideal_saturate, super_replay, verify_probe_solution,
    CertStatus, SuperSeed,
};
use superjordan::superalg::SuperAlgebra;
use superjordan::{seeds, GammaEl, Rational};

const SEED: u64 = 42;

type Outcome = Result<String, String>;

fn g(s: &str) -> GammaEl {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identities<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> Vec<CheckReport> {
    vec![
        check_identity_1(h, cfg),
        check_identity_2(h, cfg),
        check_identity_3(h, cfg),
        check_identity_4(h, cfg),
    ]
}

fn all_pass(name: &str, reports: &[CheckReport]) -> Result<usize, String> {
    for r in reports {
        ensure(r.passed(), || format!("{name}: {} failed: {:?}", r.identity, r.witness))?;
    }
    Ok(reports.iter().map(|r| r.trials).sum())
}

fn jordan_suite() -> Outcome {
    let start = Instant::now();
    let cfg = CheckConfig::new(200, 4, SEED);
    let mut instances = 0;
    instances += all_pass("J(Γ,D)", &identities(&VectorType::<Rational>::new(), &cfg))?;
    instances += all_pass("J(A,Δ)", &identities(&JADelta::<Rational>::default(), &cfg))?;
    instances += all_pass("CK(Γ,D)", &identities(&ChengKac::<Rational>::ck(), &cfg))?;
    instances += all_pass("GCK(A,Δ)", &identities(&ChengKac::<Rational>::gck(), &cfg))?;
    let curve_double = kantor_double(DBracket::new(CurveCarrier::<Rational>::new()));
    instances += all_pass("double over Γ", &identities(&curve_double, &cfg))?;
    let grassmann_double = kantor_double(DBracket::new(GrassmannCarrier::<Rational>::new()));
    instances += all_pass("double over Γ[ξ]", &identities(&grassmann_double, &cfg))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:.1?}, limit 60s"))?;
    Ok(format!("6 algebras, {instances} instances, 0 counterexamples, {elapsed:.1?}"))
}

fn gamma_constants() -> Outcome {
    let bar = |s: &str| VecElem::<Rational>::bar(g(s));
    let even = |s: &str| VecElem::<Rational>::even(g(s));
    let jad = JADelta::<Rational>::default();
    let expected = [
        ("x", "y", even("1 + y^4")),
        ("y", "x", even("-1 - y^4")),
        ("x", "x", VecElem::zero()),
        ("y", "y", VecElem::zero()),
    ];
    for (a, b, want) in expected {
        let direct = jvec_mul(&bar(a), &bar(b));
        ensure(direct == want, || format!("bar({a}) * bar({b}) = {direct}, expected {want}"))?;
        let via = jad
            .mul_checked(&bar(a), &bar(b), ProductPath::StructureConstants)
            .map_err(|e| e.to_string())?;
        ensure(via == want, || format!("structure constants give {via} for bar({a}) * bar({b})"))?;
    }
    Ok("bar(x)*bar(y) = 1 + y^4, bar(y)*bar(x) = -1 - y^4, odd squares 0".into())
}

fn derivation_facts() -> Outcome {
    let d = Derivation::<Rational>::d();
    ensure(d.apply(&g("y^2")) == g("-2*x*y"), || format!("D(y^2) = {}", d.apply(&g("y^2"))))?;
    ensure(d.apply(&g("x*y")) == g("3*y^4 - 1"), || format!("D(xy) = {}", d.apply(&g("x*y"))))?;
    let mut rng = seeds::stream(SEED, &[3]);
    for _ in 0..100 {
        let a: GammaEl = curve::sample(Space::A, 4, &mut rng);
        ensure(a.derive().in_space(Space::A), || format!("D({a}) = {} not in A", a.derive()))?;
        let u: GammaEl = curve::sample(Space::Gamma, 4, &mut rng);
        let split = &Derivation::d11().apply(&u) + &(&CurveElem::y_pow(2) * &Derivation::d22().apply(&u));
        ensure(u.derive() == split, || format!("D != D11 + y^2 D22 at {u}"))?;
    }
    Ok("D(y^2) = -2xy, D(xy) = 3y^4 - 1, D(A) ⊆ A and D = D11 + y^2 D22 on 100 samples".into())
}

fn dual_path() -> Outcome {
    let rep = check_dual_path(&JADelta::<Rational>::default(), &CheckConfig::new(500, 4, SEED));
    ensure(rep.passed(), || format!("{:?}", rep.witness))?;
    ensure(rep.trials == 500, || format!("ran {} pairs", rep.trials))?;
    Ok("500 odd pairs agree".into())
}

fn differential_simplicity() -> Outcome {
    let mut rng = seeds::stream(SEED, &[5]);
    let cases = [
        (Space::Gamma, vec![Derivation::d()]),
        (Space::A, Derivation::delta()),
    ];
    let mut widest = 0;
    for (space, derivs) in &cases {
        let ideal = derivation_ideal(*space, derivs).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let seed = curve::sample_nonzero(*space, 4, &mut rng);
            let rep = d_ideal_saturate(*space, derivs, &seed, 24, 48).map_err(|e| e.to_string())?;
            ensure(rep.reached_one, || format!("seed {seed} in {} inconclusive at 48", space.name()))?;
            ensure(replay(&ideal, &seed, &rep).map_err(|e| e.to_string())?, || {
                format!("trace for {seed} does not replay")
            })?;
            widest = widest.max(rep.window);
        }
    }
    let control = d_ideal_saturate(Space::Gamma, &[], &g("y^2"), 48, 48).map_err(|e| e.to_string())?;
    ensure(!control.reached_one, || "plain ideal of y^2 contains 1".into())?;
    Ok(format!("40 seeds reach 1 (widest window {widest}), traces replay; control y^2 does not"))
}

fn super_simplicity() -> Outcome {
    let mut rng = seeds::stream(SEED, &[6]);
    for k in 0..20 {
        let seed = if k < 10 {
            SuperSeed::sample_jadelta(4, &mut rng)
        } else {
            SuperSeed::sample_gck(4, &mut rng)
        };
        let rep = super_ideal_saturate(&seed, 24, 48).map_err(|e| e.to_string())?;
        ensure(rep.reached_one, || format!("seed {seed} inconclusive at {}", rep.window))?;
        ensure(super_replay(&seed, &rep).map_err(|e| e.to_string())?, || {
            format!("trace for {seed} does not replay")
        })?;
    }
    let rep = check_w_extraction(&ChengKac::<Rational>::ck(), &CheckConfig::new(100, 4, SEED));
    ensure(rep.passed() && rep.trials == 100, || format!("{rep:?}"))?;
    Ok("10 J(A,Δ) and 10 GCK(A,Δ) seeds reach the unit; w-extraction holds on 100 r".into())
}

fn noncyclicity() -> Outcome {
    let mut rng = seeds::stream(SEED, &[7]);
    for _ in 0..50 {
        let z = curve::sample_nonzero(Space::M, 4, &mut rng);
        let res = noncyclic_probe(&z, 16).map_err(|e| e.to_string())?;
        ensure(res.infeasible(), || format!("probe found {:?} for {z}", res.solution))?;
    }
    for _ in 0..200 {
        let (h1, e1, u) = sample_witness_input(4, &mut rng);
        let w = parity_degree_witness(&h1, &e1, &u).map_err(|e| e.to_string())?;
        ensure(w.distinct_mod4, || format!("{w:?}"))?;
    }
    let fakes = [("x", "1", "0"), ("x", "y", "1"), ("y", "x*y", "1"), ("x + y", "1", "1"), ("x", "1 + y^4", "x*y")];
    for (z, c, d) in fakes {
        ensure(verify_probe_solution(&g(z), &g(c), &g(d)).is_err(), || {
            format!("fake solution z = {z}, c = {c}, d = {d} accepted")
        })?;
    }
    Ok("50 probes infeasible at degree 16, 200 parity witnesses, 5 fake solutions rejected".into())
}

fn speciality() -> Outcome {
    let rep = check_embedding::<Rational>(&CheckConfig::new(25, 4, SEED));
    ensure(rep.passed(), || format!("{:?}", rep.witness))?;
    ensure(rep.trials == 100, || format!("ran {} pairs", rep.trials))?;
    let one = embed_special(&VecElem::<Rational>::one());
    let id = OpMatrix::identity();
    let vectors = probe_vectors::<Rational>(10, SEED);
    ensure(vectors.iter().all(|v| one.apply(v) == id.apply(v) && id.apply(v) == *v), || {
        "embed(1) is not the identity".into()
    })?;
    Ok(format!("100 pairs on {} vectors; embed(1) = id", vectors.len()))
}

fn certificate() -> Outcome {
    let cert = find_certificate(&g("1"), 8).map_err(|e| e.to_string())?;
    ensure(cert.status == CertStatus::Found, || "no certificate at bound 8".into())?;
    ensure(cert.verify(), || "certificate does not re-verify".into())?;
    let form = cert.associator_form();
    let value = evaluate_associator_form(&form);
    ensure(value == VecElem::one(), || format!("associator form evaluates to {value}"))?;
    Ok(format!("{} terms, associator form equals 1", cert.terms.len()))
}

fn first_counterexample(reports: &[CheckReport]) -> Option<&CheckReport> {
    reports.iter().find(|r| !r.passed())
}

fn mutations() -> Outcome {
    let cfg = CheckConfig::new(20, 4, SEED);
    let flipped_gamma = JADelta::<Rational>::default().with_gamma12(g("-1 - y^4"));
    let flipped_cross = ChengKac::<Rational>::ck().with_flipped_cross(2, 3);
    let bracket = DBracket::new(CurveCarrier::<Rational>::new());
    let cases = [
        ("γ12 sign", identities(&flipped_gamma, &cfg)),
        ("x_{2×3} sign", identities(&flipped_cross, &cfg)),
        ("-{a,1}bc dropped", check_jordan_bracket(&bracket, &cfg, AxiomForm::DropUnitTerm)),
    ];
    let mut found = Vec::new();
    for (name, reports) in &cases {
        let r = first_counterexample(reports).ok_or_else(|| format!("{name}: no counterexample"))?;
        ensure(r.trials <= 500, || format!("{name}: needed {} trials", r.trials))?;
        found.push(format!("{name} caught by {}", r.identity));
    }
    Ok(found.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Jordan superidentities", jordan_suite),
        ("γ constants", gamma_constants),
        ("derivation facts", derivation_facts),
        ("dual-path product", dual_path),
        ("differential simplicity", differential_simplicity),
        ("superalgebra simplicity", super_simplicity),
        ("non-cyclicity", noncyclicity),
        ("speciality", speciality),
        ("certificate", certificate),
        ("mutation sensitivity", mutations),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
