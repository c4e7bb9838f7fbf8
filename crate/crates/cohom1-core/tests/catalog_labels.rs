//! The action catalog against its published structure: enumeration counts,
//! explicit group elements, quadric membership of sampled orbits, label
//! constancy along orbits, and the stratification of the degenerate
//! hyperplane in dimension four.

use cohom1_core::sample::rng_for;
use cohom1_core::{
    catalog_list, cohomogeneity, group_element, label_distance, lorentz_inner, orbit_dimension,
    orbit_label, orbit_sample, ActionClass, ActionSpec, KPrime, MinkVector,
};

const TOL: f64 = 1e-9;

fn mink(coords: &[f64]) -> MinkVector {
    MinkVector::new(coords.to_vec()).unwrap()
}

fn spec(class: ActionClass, dim: usize) -> ActionSpec {
    ActionSpec::new(class, dim, None).unwrap()
}

fn drift_spec(lambda: f64) -> ActionSpec {
    ActionSpec::new(ActionClass::ALambdaEll, 3, Some(lambda)).unwrap()
}

#[test]
fn catalog_enumerations_match_the_published_lists() {
    let dim2 = catalog_list(2).unwrap();
    assert_eq!(dim2.len(), 4);

    let dim3 = catalog_list(3).unwrap();
    assert_eq!(dim3.len(), 10);
    let drifts: Vec<&ActionSpec> =
        dim3.iter().filter(|s| s.class() == ActionClass::ALambdaEll).collect();
    assert_eq!(drifts.len(), 1, "one representative of the drift family");
    assert_eq!(drifts[0].lambda(), Some(1.0));

    let dim4 = catalog_list(4).unwrap();
    let classes: Vec<ActionClass> = dim4.iter().map(|s| s.class()).collect();
    assert!(classes.contains(&ActionClass::SOn1));
    assert!(classes.contains(&ActionClass::KprimeAN(KPrime::Trivial)));
    assert!(classes.contains(&ActionClass::KprimeAN(KPrime::Full)));

    let dim6 = catalog_list(6).unwrap();
    let classes: Vec<ActionClass> = dim6.iter().map(|s| s.class()).collect();
    assert!(classes.contains(&ActionClass::KprimeAN(KPrime::Block(2))));
    assert!(classes.contains(&ActionClass::KprimeAN(KPrime::Block(3))));

    assert!(catalog_list(1).is_err());
}

#[test]
fn drift_family_element_matches_the_displayed_form() {
    // (t, s) = (1, 2) with lambda = 1: boost block in the last two
    // coordinates, translation lambda*t e1 + s(e2 - e3).
    let g = group_element(&drift_spec(1.0), &[1.0, 2.0]).unwrap();
    let c = 1.0f64.cosh();
    let s = 1.0f64.sinh();
    let want_rows = [
        [1.0, 0.0, 0.0],
        [0.0, c, -s],
        [0.0, -s, c],
    ];
    for (i, row) in want_rows.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert!((g.linear().entry(i, j) - want).abs() <= 1e-12);
        }
    }
    let want_trans = [1.0, 2.0, -2.0];
    for (i, want) in want_trans.iter().enumerate() {
        assert!((g.trans().get(i) - want).abs() <= 1e-12);
    }
}

#[test]
fn parabola_family_element_matches_the_displayed_form() {
    // (t, s) = (1, 0) with lambda = 1: polynomial translation part
    // (t^2/2, -t^3/6, t + t^3/6).
    let g = group_element(&spec(ActionClass::N1xEll, 3), &[1.0, 0.0]).unwrap();
    let want_rows = [
        [1.0, 1.0, 1.0],
        [-1.0, 0.5, -0.5],
        [1.0, 0.5, 1.5],
    ];
    for (i, row) in want_rows.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert!((g.linear().entry(i, j) - want).abs() <= 1e-12);
        }
    }
    let want_trans = [0.5, -1.0 / 6.0, 1.0 + 1.0 / 6.0];
    for (i, want) in want_trans.iter().enumerate() {
        assert!((g.trans().get(i) - want).abs() <= 1e-12);
    }
}

#[test]
fn zero_parameters_give_the_identity_for_every_spec() {
    let mut all: Vec<ActionSpec> = Vec::new();
    all.extend(catalog_list(2).unwrap());
    all.extend(catalog_list(3).unwrap());
    all.extend(catalog_list(4).unwrap());
    for sp in &all {
        let g = group_element(sp, &vec![0.0; sp.param_count()]).unwrap();
        let d = sp.ambient_dim();
        for i in 0..d {
            for j in 0..d {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((g.linear().entry(i, j) - want).abs() <= 1e-14);
            }
            assert!(g.trans().get(i).abs() <= 1e-14);
        }
        assert!(
            group_element(sp, &vec![0.0; sp.param_count() + 1]).is_err(),
            "wrong arity must be rejected"
        );
    }
}

#[test]
fn hyperbolic_orbit_samples_stay_on_the_unit_hyperboloid() {
    let so21 = spec(ActionClass::SO21, 3);
    let base = mink(&[0.0, 0.0, 1.0]);
    let mut rng = rng_for(7, 0x0c20);
    for _ in 0..200 {
        let q = orbit_sample(&so21, &base, &mut rng, 2.0).unwrap();
        let norm = lorentz_inner(&q, &q).unwrap();
        assert!((norm + 1.0).abs() <= 1e-9, "left the hyperboloid: {norm}");
        assert!(q.get(2) > 0.0, "left the upper sheet");
    }
}

#[test]
fn drift_orbit_through_the_origin_fills_the_degenerate_plane() {
    let sp = drift_spec(1.0);
    let base = mink(&[0.0, 0.0, 0.0]);
    let mut rng = rng_for(7, 0x0c21);
    for _ in 0..200 {
        let q = orbit_sample(&sp, &base, &mut rng, 2.0).unwrap();
        assert!((q.get(1) + q.get(2)).abs() <= 1e-9, "left the degenerate plane");
    }
    // Degenerate sampling box keeps the base point fixed.
    let fixed = orbit_sample(&sp, &mink(&[0.4, -0.3, 1.1]), &mut rng, 0.0).unwrap();
    for (got, want) in fixed.coords().iter().zip([0.4, -0.3, 1.1]) {
        assert!((got - want).abs() <= 1e-15);
    }
}

#[test]
fn drift_label_matches_the_eliminated_parametrization() {
    // Through e2 + e3 the drift action sweeps (x + t)e1 + ...; eliminating
    // the parameters leaves z e^{x / lambda}. The point
    // (1, e^{-1}, e^{-1}) has z = e^{-1}, x = 1, so the invariant is 1,
    // the same as for the base point e2 + e3 itself.
    let sp = drift_spec(1.0);
    let e = core::f64::consts::E;
    let a = orbit_label(&sp, &mink(&[1.0, 1.0 / e, 1.0 / e]), TOL).unwrap();
    let b = orbit_label(&sp, &mink(&[0.0, 1.0, 1.0]), TOL).unwrap();
    assert_eq!(a.kind(), "graph");
    let d = label_distance(&a, &b).expect("same stratum");
    assert!(d <= 1e-12, "labels differ by {d}");
    assert!((a.invariants[0] - 1.0).abs() <= 1e-12);
}

#[test]
fn leaf_labels_of_the_null_rotation_family() {
    let sp = spec(ActionClass::NxEll, 3);
    let label = orbit_label(&sp, &mink(&[0.0, 2.0, 2.0]), TOL).unwrap();
    assert_eq!(label.kind(), "plane");
    assert!((label.invariants[0] - 2.0).abs() <= 1e-12);

    // Inside the degenerate plane the leaves are the lines x e1 + ell.
    let line = orbit_label(&sp, &mink(&[1.5, 0.7, -0.7]), TOL).unwrap();
    assert_eq!(line.kind(), "line");
    assert!((line.invariants[0] - 1.5).abs() <= 1e-12);
}

#[test]
fn cylinder_labels_distinguish_lines_only_for_trivial_rotations() {
    // On the null cylinder Z^2(r) the trivial subgroup keeps each null
    // line separate while the full rotation group merges the cylinder.
    let r = 1.25;
    let trivial = spec(ActionClass::KprimeAN(KPrime::Trivial), 4);
    let full = spec(ActionClass::KprimeAN(KPrime::Full), 4);
    let p1 = mink(&[r, 0.0, 0.0, 0.0]);
    let p2 = mink(&[0.0, r, 0.0, 0.0]);

    let t1 = orbit_label(&trivial, &p1, TOL).unwrap();
    let t2 = orbit_label(&trivial, &p2, TOL).unwrap();
    assert!(
        label_distance(&t1, &t2).is_none_or(|d| d > 1e-3),
        "trivial labels must differ: {t1} vs {t2}"
    );

    let f1 = orbit_label(&full, &p1, TOL).unwrap();
    let f2 = orbit_label(&full, &p2, TOL).unwrap();
    let d = label_distance(&f1, &f2).expect("same cylinder stratum");
    assert!(d <= 1e-12, "full labels must agree: {f1} vs {f2}");
}

#[test]
fn orbit_dimensions_at_reference_points() {
    assert_eq!(orbit_dimension(&spec(ActionClass::SO21, 3), &mink(&[0.0; 3]), TOL).unwrap(), 0);
    assert_eq!(
        orbit_dimension(&spec(ActionClass::KxRe3, 3), &mink(&[1.0, 0.0, 0.0]), TOL).unwrap(),
        2
    );
    assert_eq!(orbit_dimension(&drift_spec(2.0), &mink(&[0.0; 3]), TOL).unwrap(), 2);

    // The past-pointing null ray is a one-dimensional orbit for every
    // parabolic spec: w0 itself moves only along its ray.
    for kp in [KPrime::Trivial, KPrime::Full] {
        let sp = spec(ActionClass::KprimeAN(kp), 4);
        let w0 = mink(&[0.0, 0.0, 1.0, -1.0]);
        assert_eq!(orbit_dimension(&sp, &w0, TOL).unwrap(), 1);
    }
}

#[test]
fn de_sitter_stratification_in_dimension_four() {
    // Off the degenerate hyperplane both parabolic specs act with full
    // orbit dimension; on the null cylinder the trivial choice leaves
    // lines (dimension 1) and the full choice a cylinder (dimension 2).
    let r = 1.0;
    let trivial = spec(ActionClass::KprimeAN(KPrime::Trivial), 4);
    let full = spec(ActionClass::KprimeAN(KPrime::Full), 4);

    let off = mink(&[r, 0.0, 0.5, 0.0]);
    assert_eq!(orbit_dimension(&trivial, &off, TOL).unwrap(), 3);
    assert_eq!(orbit_dimension(&full, &off, TOL).unwrap(), 3);

    let on = mink(&[r, 0.0, 0.7, -0.7]);
    assert_eq!(orbit_dimension(&trivial, &on, TOL).unwrap(), 1);
    assert_eq!(orbit_dimension(&full, &on, TOL).unwrap(), 2);
}

#[test]
fn labels_are_constant_along_sampled_orbits() {
    // Every dimension-3 spec, several base points, modest parameter box.
    let mut rng = rng_for(11, 0x0c22);
    let bases = [
        [0.9, -0.4, 0.2],
        [0.0, 1.0, 1.0],
        [1.3, 0.5, -0.5],
        [0.2, 0.1, 2.0],
        [-1.1, 0.6, 0.3],
    ];
    for sp in catalog_list(3).unwrap() {
        for b in &bases {
            let base = mink(b);
            let reference = orbit_label(&sp, &base, TOL).unwrap();
            for _ in 0..40 {
                let q = orbit_sample(&sp, &base, &mut rng, 1.5).unwrap();
                let moved = orbit_label(&sp, &q, TOL).unwrap();
                let d = label_distance(&reference, &moved).unwrap_or(f64::INFINITY);
                assert!(
                    d <= 1e-8,
                    "label drifted for {} from {base:?}: {reference} vs {moved} (d = {d:e})",
                    sp.name()
                );
            }
        }
    }
}

#[test]
fn distinct_drift_invariants_mean_disjoint_orbits() {
    // Orbits with invariant gaps stay apart: the nearest pair of sampled
    // points across two distinct leaves keeps a positive distance.
    let sp = drift_spec(1.0);
    let mut rng = rng_for(13, 0x0c23);
    let base_a = mink(&[0.0, 1.0, 1.0]);
    let base_b = mink(&[0.0, 1.3, 1.3]);
    let la = orbit_label(&sp, &base_a, TOL).unwrap();
    let lb = orbit_label(&sp, &base_b, TOL).unwrap();
    assert!((la.invariants[0] - lb.invariants[0]).abs() > 1e-6);

    let sample_a: Vec<MinkVector> =
        (0..120).map(|_| orbit_sample(&sp, &base_a, &mut rng, 1.5).unwrap()).collect();
    let sample_b: Vec<MinkVector> =
        (0..120).map(|_| orbit_sample(&sp, &base_b, &mut rng, 1.5).unwrap()).collect();
    let mut nearest = f64::INFINITY;
    for a in &sample_a {
        for b in &sample_b {
            let diff = a.sub(b);
            let euclid: f64 = diff.coords().iter().map(|x| x * x).sum::<f64>().sqrt();
            nearest = nearest.min(euclid);
        }
    }
    assert!(nearest > 0.1, "distinct leaves came within {nearest}");
}

#[test]
fn de_sitter_slice_of_the_solvable_action_has_four_strata() {
    // On dS^2(r) the boost+null-rotation action leaves exactly four orbit
    // kinds: two null lines (by the sign of the first coordinate) and two
    // open halves (by the side of the degenerate plane).
    let sp = spec(ActionClass::AN, 3);
    let r = 1.0;
    let mut kinds: Vec<String> = Vec::new();
    let points = [
        [r, 0.8, -0.8],
        [r, -0.4, -0.4],
        [1.2 * r, 0.7, 0.22 - 0.7],
        [r, 0.0, 0.0],
        [-r, 0.0, 0.0],
        [0.9 * r, 0.6, 0.6 * 0.2],
    ];
    for p in &points {
        // All points have <p,p> > 0; the label only needs the stratum kind.
        let label = orbit_label(&sp, &mink(p), TOL).unwrap();
        if !kinds.contains(&label.kind()) {
            kinds.push(label.kind());
        }
    }
    kinds.sort();
    assert_eq!(
        kinds,
        vec![
            String::from("cyl-line"),
            String::from("dShalf(+)"),
            String::from("dShalf(-)"),
        ],
        "expected the two open halves plus cylinder lines"
    );

    // The two null lines on the slice are distinguished by their base
    // points, not by kind: +r e1 and -r e1 carry different invariants.
    let plus = orbit_label(&sp, &mink(&[r, 0.5, -0.5]), TOL).unwrap();
    let minus = orbit_label(&sp, &mink(&[-r, 0.5, -0.5]), TOL).unwrap();
    assert_eq!(plus.kind(), "cyl-line");
    assert_eq!(minus.kind(), "cyl-line");
    assert!(label_distance(&plus, &minus).is_none_or(|d| d > 1e-3));
}

#[test]
fn every_catalog_spec_has_cohomogeneity_one() {
    let mut all: Vec<ActionSpec> = Vec::new();
    all.extend(catalog_list(2).unwrap());
    all.extend(catalog_list(3).unwrap());
    all.extend(catalog_list(4).unwrap());
    all.push(drift_spec(0.0));
    all.push(drift_spec(0.5));
    all.push(drift_spec(2.0));
    for sp in &all {
        let c = cohomogeneity(sp, 400, 17, TOL).unwrap();
        assert_eq!(c, 1, "cohomogeneity of {} came out {c}", sp.name());
    }
}
