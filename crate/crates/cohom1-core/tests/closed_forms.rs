//! The generic exponential against hand-written closed forms.
//!
//! `exp_iso` is implemented once, on the homogeneous embedding, with no
//! special-casing. The five one-parameter subgroups used throughout the
//! catalog (`k_t`, `a_t`, `n_t`, and the two drifted families) all have
//! elementary closed forms, restated locally here as independent oracles.

use cohom1_core::sample::rng_for;
use cohom1_core::{exp_iso, iwasawa_generators, IsoElement, LieElement, MinkVector};
use rand::Rng;

fn mink(coords: [f64; 3]) -> MinkVector {
    MinkVector::new(coords.to_vec()).unwrap()
}

/// Largest entrywise deviation of `got` from the closed form
/// `(rows, trans)`.
fn deviation(got: &IsoElement, rows: [[f64; 3]; 3], trans: [f64; 3]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in rows.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            worst = worst.max((got.linear().entry(i, j) - want).abs());
        }
    }
    for (i, want) in trans.iter().enumerate() {
        worst = worst.max((got.trans().get(i) - want).abs());
    }
    worst
}

fn rotation_rows(t: f64) -> [[f64; 3]; 3] {
    [
        [t.cos(), -t.sin(), 0.0],
        [t.sin(), t.cos(), 0.0],
        [0.0, 0.0, 1.0],
    ]
}

fn boost_rows(t: f64) -> [[f64; 3]; 3] {
    [
        [1.0, 0.0, 0.0],
        [0.0, t.cosh(), -t.sinh()],
        [0.0, -t.sinh(), t.cosh()],
    ]
}

fn null_rotation_rows(t: f64) -> [[f64; 3]; 3] {
    [
        [1.0, t, t],
        [-t, 1.0 - 0.5 * t * t, -0.5 * t * t],
        [t, 0.5 * t * t, 1.0 + 0.5 * t * t],
    ]
}

#[test]
fn exponential_matches_the_five_closed_forms() {
    let basis = iwasawa_generators(2).unwrap();
    let yk = basis.k_gens[0].clone();
    let ya = basis.a_gen.clone();
    let yn = basis.n_gens[0].clone();
    let lambdas = [0.1, 1.0, 10.0];

    let mut rng = rng_for(0, 0x0c10);
    let mut worst = 0.0f64;
    for draw in 0..1000 {
        let t: f64 = rng.gen_range(-3.0..=3.0);
        let lam = lambdas[draw % lambdas.len()];

        worst = worst.max(deviation(&exp_iso(&yk, t), rotation_rows(t), [0.0; 3]));
        worst = worst.max(deviation(&exp_iso(&ya, t), boost_rows(t), [0.0; 3]));
        worst = worst.max(deviation(&exp_iso(&yn, t), null_rotation_rows(t), [0.0; 3]));

        // Boost with a spacelike drift: Exp(t(Ya + lam e1)) translates by
        // lam*t along the axis the boost fixes.
        let drifted_boost = LieElement::new(ya.linear.clone(), mink([lam, 0.0, 0.0])).unwrap();
        worst = worst.max(deviation(
            &exp_iso(&drifted_boost, t),
            boost_rows(t),
            [lam * t, 0.0, 0.0],
        ));

        // Null rotation with a timelike-axis drift: the translation part is
        // polynomial in t because ad is nilpotent here.
        let drifted_null = LieElement::new(yn.linear.clone(), mink([0.0, 0.0, lam])).unwrap();
        let cubic = lam * t * t * t / 6.0;
        worst = worst.max(deviation(
            &exp_iso(&drifted_null, t),
            null_rotation_rows(t),
            [0.5 * lam * t * t, -cubic, lam * t + cubic],
        ));
    }
    assert!(worst <= 1e-12, "closed-form deviation {worst:e} exceeds 1e-12");
}

#[test]
fn closed_forms_compose_like_the_subgroups_they_parametrize() {
    // One-parameter subgroups satisfy g(s) g(t) = g(s+t); this exercises
    // compose() against the same oracles at parameter sums.
    let basis = iwasawa_generators(2).unwrap();
    let gens = [
        basis.k_gens[0].clone(),
        basis.a_gen.clone(),
        basis.n_gens[0].clone(),
    ];
    let mut rng = rng_for(0, 0x0c11);
    for _ in 0..200 {
        let s: f64 = rng.gen_range(-1.5..=1.5);
        let t: f64 = rng.gen_range(-1.5..=1.5);
        for g in &gens {
            let left = exp_iso(g, s).compose(&exp_iso(g, t));
            let right = exp_iso(g, s + t);
            let mut worst = 0.0f64;
            for i in 0..3 {
                for j in 0..3 {
                    worst = worst
                        .max((left.linear().entry(i, j) - right.linear().entry(i, j)).abs());
                }
                worst = worst.max((left.trans().get(i) - right.trans().get(i)).abs());
            }
            assert!(worst <= 1e-12, "one-parameter additivity broke: {worst:e}");
        }
    }
}
