//! Acceptance gate for the toolkit: each test is one criterion, checked at
//! its stated tolerance, and prints a single pass line (visible with
//! `cargo test --test acceptance -- --nocapture`). A failing criterion
//! fails its test, so the harness summary doubles as the gate record.

use std::path::{Path, PathBuf};
use std::process::Command;

use rand::Rng;

use cohom1_core::sample::{rng_for, uniform_params};
use cohom1_core::{
    bracket, catalog_list, check_isometry, classify_m2, classify_m3, cohomogeneity,
    commuting_identity_check, dense_open_experiment, exp_iso, expected_stratum_kinds,
    group_element, iwasawa_generators, nonequivalence_witness, orbit_count_experiment,
    p_lambda_congruence_check, ActionClass, ActionSpec, IsoElement, LieElement, MinkVector,
    Subalgebra, Verdict,
};

fn mink(c: &[f64]) -> MinkVector {
    MinkVector::new(c.to_vec()).unwrap()
}

fn pass(n: usize, what: &str) {
    println!("criterion {n}: PASS - {what}");
}

/// Max absolute entry deviation of an isometry from explicit row data plus
/// a translation.
fn deviation(got: &IsoElement, rows: &[[f64; 3]; 3], trans: &[f64; 3]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in rows.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            worst = worst.max((got.linear().entry(i, j) - want).abs());
        }
        worst = worst.max((got.trans().get(i) - trans[i]).abs());
    }
    worst
}

fn lie_deviation(a: &LieElement, b: &LieElement) -> f64 {
    a.flatten()
        .iter()
        .zip(b.flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[test]
fn criterion_1_exponentials_match_closed_forms() {
    let basis = iwasawa_generators(2).unwrap();
    let yk = basis.k_gens[0].clone();
    let ya = basis.a_gen.clone();
    let yn = basis.n_gens[0].clone();
    let lambdas = [0.1, 1.0, 10.0];

    let mut rng = rng_for(0, 0xacc1);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let t: f64 = rng.gen_range(-3.0..3.0);
        let l = lambdas[i % lambdas.len()];
        let (s, c) = t.sin_cos();
        let (sh, ch) = (t.sinh(), t.cosh());

        let rot = [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]];
        worst = worst.max(deviation(&exp_iso(&yk, t), &rot, &[0.0; 3]));

        let boost = [[1.0, 0.0, 0.0], [0.0, ch, -sh], [0.0, -sh, ch]];
        worst = worst.max(deviation(&exp_iso(&ya, t), &boost, &[0.0; 3]));

        let null = [
            [1.0, t, t],
            [-t, 1.0 - t * t / 2.0, -t * t / 2.0],
            [t, t * t / 2.0, 1.0 + t * t / 2.0],
        ];
        worst = worst.max(deviation(&exp_iso(&yn, t), &null, &[0.0; 3]));

        let drift_a = LieElement::new(ya.linear.clone(), mink(&[l, 0.0, 0.0])).unwrap();
        worst = worst.max(deviation(&exp_iso(&drift_a, t), &boost, &[l * t, 0.0, 0.0]));

        let drift_n = LieElement::new(yn.linear.clone(), mink(&[0.0, 0.0, l])).unwrap();
        let cubic = [
            l * t * t / 2.0,
            -l * t * t * t / 6.0,
            l * t + l * t * t * t / 6.0,
        ];
        worst = worst.max(deviation(&exp_iso(&drift_n, t), &null, &cubic));
    }
    assert!(worst <= 1e-12, "closed-form deviation {worst:e}");
    pass(1, "one-parameter subgroups match their closed forms (1000 draws, tol 1e-12)");
}

#[test]
fn criterion_2_bracket_relations_hold() {
    let basis = iwasawa_generators(2).unwrap();
    let yk = &basis.k_gens[0];
    let ya = &basis.a_gen;
    let yn = &basis.n_gens[0];

    let ka = bracket(yk, ya).unwrap();
    let kn = bracket(yk, yn).unwrap();
    let an = bracket(ya, yn).unwrap();

    let yk_plus_yn =
        LieElement::new(yk.linear.add(&yn.linear), MinkVector::zero(3)).unwrap();
    let minus_ya = ya.scale(-1.0);

    let worst = lie_deviation(&ka, &yk_plus_yn)
        .max(lie_deviation(&kn, &minus_ya))
        .max(lie_deviation(&an, yn));
    assert!(worst <= 1e-14, "bracket deviation {worst:e}");
    pass(2, "rotation/boost/null-rotation bracket relations hold (tol 1e-14)");
}

#[test]
fn criterion_3_every_catalog_action_has_cohomogeneity_one() {
    let mut specs: Vec<ActionSpec> = Vec::new();
    for dim in [2usize, 3, 4] {
        specs.extend(catalog_list(dim).unwrap());
    }
    for l in [0.0, 0.5, 2.0] {
        specs.push(ActionSpec::new(ActionClass::ALambdaEll, 3, Some(l)).unwrap());
    }
    for spec in &specs {
        let c = cohomogeneity(spec, 10_000, 0, 1e-9).unwrap();
        assert_eq!(c, 1, "{} reported cohomogeneity {c}", spec.name());
    }
    assert_eq!(specs.len(), 20, "catalog coverage changed");
    pass(3, "all catalogued actions on M^2, M^3, M^4 have cohomogeneity one (10^4 trials)");
}

/// Worst distance of a conjugated basis element from the span of the
/// target basis, both orthonormalized by plain Gram-Schmidt.
fn span_residual(conjugated: &[LieElement], target: &[LieElement]) -> f64 {
    let mut ortho: Vec<Vec<f64>> = Vec::new();
    for t in target {
        let mut v = t.flatten();
        for o in &ortho {
            let dot: f64 = v.iter().zip(o).map(|(a, b)| a * b).sum();
            for (vi, oi) in v.iter_mut().zip(o) {
                *vi -= dot * oi;
            }
        }
        let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            ortho.push(v.iter().map(|x| x / n).collect());
        }
    }
    let mut worst = 0.0f64;
    for c in conjugated {
        let mut v = c.flatten();
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for o in &ortho {
            let dot: f64 = v.iter().zip(o).map(|(a, b)| a * b).sum();
            for (vi, oi) in v.iter_mut().zip(o) {
                *vi -= dot * oi;
            }
        }
        let res: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        worst = worst.max(res / norm.max(1e-12));
    }
    worst
}

fn random_isometry_m3(rng: &mut rand_chacha::ChaCha8Rng) -> IsoElement {
    let basis = iwasawa_generators(2).unwrap();
    let rot = exp_iso(&basis.k_gens[0], rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI));
    let boost = exp_iso(&basis.a_gen, rng.gen_range(-2.0..2.0));
    let null = exp_iso(&basis.n_gens[0], rng.gen_range(-1.5..1.5));
    let shift = IsoElement::from_translation(mink(&[
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
    ]));
    shift.compose(&rot).compose(&boost).compose(&null)
}

fn random_isometry_m2(rng: &mut rand_chacha::ChaCha8Rng) -> IsoElement {
    let basis = iwasawa_generators(1).unwrap();
    let boost = exp_iso(&basis.a_gen, rng.gen_range(-2.0..2.0));
    let shift = IsoElement::from_translation(mink(&[
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
    ]));
    shift.compose(&boost)
}

#[test]
fn criterion_4_classifier_round_trips_500_conjugates_per_class() {
    let mut rng = rng_for(0, 0xacc4);

    let mut specs3: Vec<ActionSpec> = catalog_list(3).unwrap();
    specs3.push(ActionSpec::new(ActionClass::ALambdaEll, 3, Some(0.5)).unwrap());
    specs3.push(ActionSpec::new(ActionClass::ALambdaEll, 3, Some(4.0)).unwrap());
    for spec in &specs3 {
        for _ in 0..500 {
            let g = random_isometry_m3(&mut rng);
            let moved: Vec<LieElement> =
                spec.generators().iter().map(|b| g.adjoint(b).unwrap()).collect();
            let h = Subalgebra::new(3, moved).unwrap();
            let r = classify_m3(&h).unwrap();
            assert_eq!(r.verdict, Verdict::Classified, "{}", spec.name());
            assert_eq!(r.class, Some(spec.class()), "{}", spec.name());
            assert!(r.residual <= 1e-8, "{} residual {:e}", spec.name(), r.residual);
            if let Some(l) = spec.lambda() {
                let got = r.lambda.unwrap();
                assert!(
                    (got - l).abs() <= 1e-6 * (1.0 + l),
                    "{}: recovered lambda {got} for {l}",
                    spec.name()
                );
            }
            let conj: Vec<LieElement> =
                h.basis().iter().map(|b| r.composite().adjoint(b).unwrap()).collect();
            let canonical = r.canonical_spec().unwrap();
            assert!(
                span_residual(&conj, canonical.generators()) <= 1e-8,
                "{}: composite does not map into the canonical span",
                spec.name()
            );
        }
    }

    // The drifted parabolic family collapses to a single class: any
    // positive drift must come back as the reference member.
    let n_spec = ActionSpec::new(ActionClass::N1xEll, 3, None).unwrap();
    let drifted = LieElement::new(
        n_spec.generators()[0].linear.clone(),
        mink(&[0.0, 0.0, 3.7]),
    )
    .unwrap();
    let h = Subalgebra::new(3, vec![drifted, n_spec.generators()[1].clone()]).unwrap();
    let r = classify_m3(&h).unwrap();
    assert_eq!(r.class, Some(ActionClass::N1xEll));

    for spec in catalog_list(2).unwrap() {
        for _ in 0..500 {
            let g = random_isometry_m2(&mut rng);
            let moved: Vec<LieElement> =
                spec.generators().iter().map(|b| g.adjoint(b).unwrap()).collect();
            let h = Subalgebra::new(2, moved).unwrap();
            let r = classify_m2(&h).unwrap();
            assert_eq!(r.verdict, Verdict::Classified, "{}", spec.name());
            assert_eq!(r.class, Some(spec.class()), "{}", spec.name());
            assert!(r.residual <= 1e-8, "{} residual {:e}", spec.name(), r.residual);
        }
    }
    pass(4, "classifier recovers class, parameter, and conjugators on 500 conjugates per class");
}

#[test]
fn criterion_5_commuting_and_congruence_identities() {
    for l in [0.1, 0.5, 1.0, 2.0, 10.0] {
        let r = commuting_identity_check(l, 10_000, 0).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.tolerance <= 1e-12);
    }
    for l in [0.5, 1.0, 2.0, 4.0] {
        for m in [0.5, 1.0, 2.0, 4.0] {
            let r = p_lambda_congruence_check(l, m, 2000, 0).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.tolerance <= 1e-9);
        }
    }
    pass(5, "boost-drift commuting identity (tol 1e-12) and surface congruence (tol 1e-9) hold");
}

#[test]
fn criterion_6_drift_parameters_are_separated_by_invariant_spread() {
    let grid = 201;
    let params = [0.5, 1.0, 2.0, 4.0];
    for &l in &params {
        for &m in &params {
            if l == m {
                continue;
            }
            let r = nonequivalence_witness(l, m, grid).unwrap();
            assert!(r.passed(), "{r}");
            let spread = r.witness.as_ref().unwrap().params[0];
            assert!(spread > 0.1, "spread {spread} for ({l}, {m})");
        }
    }
    let r = nonequivalence_witness(1.0, 2.0, grid).unwrap();
    let spread = r.witness.as_ref().unwrap().params[0];
    let expected = 0.5f64.exp() - (-0.5f64).exp();
    assert!(
        (spread - expected).abs() <= 1e-9,
        "spread {spread} vs closed form {expected}"
    );
    pass(6, "invariant spread exceeds 0.1 for distinct drifts; (1,2) spread matches closed form");
}

#[test]
fn criterion_7_parabolic_pair_agrees_off_the_degenerate_hyperplane() {
    for r in [0.5, 1.0, 2.0] {
        let report = dense_open_experiment(r, 1000, 0).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.trials >= 1100, "needs 10^3 off-cylinder and 10^2 on-cylinder samples");
    }
    pass(7, "trivial and full lifts agree off the degenerate hyperplane, differ on cylinders");
}

#[test]
fn criterion_8_orbit_inventories_match_the_catalog() {
    assert_eq!(expected_stratum_kinds(&catalog_list(2).unwrap()[3]).len(), 9);

    let mut specs: Vec<ActionSpec> = Vec::new();
    specs.extend(catalog_list(2).unwrap());
    specs.extend(catalog_list(3).unwrap());
    specs.push(ActionSpec::new(ActionClass::ALambdaEll, 3, Some(0.0)).unwrap());
    for spec in &specs {
        let r = orbit_count_experiment(spec, 2000, 0).unwrap();
        assert!(r.passed(), "{r}");
    }
    pass(8, "sampled orbit-type inventories match the expected stratum lists for every class");
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cohom1"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn criterion_9_cli_is_deterministic_with_stable_exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    let orbit_args = |out: &Path| {
        vec![
            String::from("orbit"),
            String::from("--action"),
            String::from("AN"),
            String::from("--point"),
            String::from("0.3,0.2,1.4"),
            String::from("--samples"),
            String::from("128"),
            String::from("--seed"),
            String::from("13"),
            String::from("--out"),
            out.to_string_lossy().into_owned(),
        ]
    };
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert!(bin().args(orbit_args(&a)).output().unwrap().status.success());
    assert!(bin().args(orbit_args(&b)).output().unwrap().status.success());
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "orbit output must be byte-identical for a fixed seed"
    );

    let verify_args = ["verify", "--suite", "counts", "--trials", "100", "--seed", "11"];
    let v1 = bin().args(verify_args).output().unwrap();
    let v2 = bin().args(verify_args).output().unwrap();
    assert!(v1.status.success());
    assert_eq!(v1.stdout, v2.stdout, "verify output must be byte-identical");

    let cases: &[(&str, i32)] = &[
        ("so21_translated.json", 0),
        ("transitive.json", 3),
        ("not_closed.json", 4),
        ("malformed.json", 2),
    ];
    for (name, expected) in cases {
        let out = bin()
            .args(["classify", fixture(name).to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(*expected), "{name}");
    }
    let out = bin()
        .args([
            "orbit", "--action", "AN", "--point", "0,0,1", "--samples", "1", "--out",
            "/nonexistent-dir-for-acceptance/cloud.csv",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
    pass(9, "CLI output is byte-identical per seed and exit codes follow the contract");
}

#[test]
fn catalog_group_elements_preserve_the_interval() {
    let mut specs: Vec<ActionSpec> = Vec::new();
    for dim in [2usize, 3, 4] {
        specs.extend(catalog_list(dim).unwrap());
    }
    for (si, spec) in specs.iter().enumerate() {
        let mut rng = rng_for(0, 0xacc0 + si as u64);
        for _ in 0..100 {
            let params = uniform_params(&mut rng, spec.param_count(), 2.0);
            let g = group_element(spec, &params).unwrap();
            let r = check_isometry(&g, 20, 0).unwrap();
            assert!(r.passed(), "{}: {r}", spec.name());
        }
    }
    pass(0, "100 random group elements of every catalogued action preserve the interval");
}
