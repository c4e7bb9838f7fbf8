//! Executable verification of the toolkit's identities and equivalence
//! claims: interval preservation of isometries, the boost-drift commuting
//! relation, congruence of the ruled parabola surfaces, invariant-spread
//! witnesses for non-equivalence of the drift family, the dense-open
//! agreement of the parabolic pair on `M^4`, and orbit-inventory counts.
//!
//! Every check is deterministic for a fixed seed and reports a residual
//! against a declared tolerance; `status` is `Pass` exactly when
//! `max_residual <= tolerance`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use crate::catalog::{
    group_element, orbit_dimension, orbit_label, ActionClass, ActionSpec, KPrime,
};
use crate::geometry::{in_w_subspace, lorentz_inner, MinkVector};
use crate::lie::{exp_iso, IsoElement, LieElement};
use crate::sample;
use crate::Error;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Relative tolerance for interval preservation.
pub const TOL_ISOMETRY: f64 = 1e-10;
/// Relative tolerance for the boost-drift commuting identity.
pub const TOL_COMMUTING: f64 = 1e-12;
/// Tolerance for membership in the mapped parabola surface.
pub const TOL_CONGRUENCE: f64 = 1e-9;
/// Scale-free spread a non-equivalence witness must exceed.
pub const WITNESS_FLOOR: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerificationStatus {
    Pass,
    Fail,
}

/// Concrete datum backing a report: the sample point the check pivoted on,
/// numeric parameters (check-specific; documented per operation), and any
/// orbit labels that were compared.
#[derive(Clone, Debug)]
pub struct Witness {
    pub point: MinkVector,
    pub params: Vec<f64>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub status: VerificationStatus,
    pub max_residual: f64,
    pub tolerance: f64,
    pub witness: Option<Witness>,
    pub trials: usize,
    pub seed: u64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn finish(
        name: String,
        max_residual: f64,
        tolerance: f64,
        witness: Option<Witness>,
        trials: usize,
        seed: u64,
        notes: Vec<String>,
    ) -> Self {
        let status = if max_residual <= tolerance {
            VerificationStatus::Pass
        } else {
            VerificationStatus::Fail
        };
        VerificationReport { name, status, max_residual, tolerance, witness, trials, seed, notes }
    }

    pub fn passed(&self) -> bool {
        self.status == VerificationStatus::Pass
    }
}

impl core::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let tag = match self.status {
            VerificationStatus::Pass => "PASS",
            VerificationStatus::Fail => "FAIL",
        };
        write!(
            f,
            "{}: {} (residual {:.3e}, tolerance {:.3e}, trials {}, seed {})",
            self.name, tag, self.max_residual, self.tolerance, self.trials, self.seed
        )
    }
}

fn require_trials(trials: usize) -> Result<(), Error> {
    if trials == 0 {
        return Err(Error::WrongParamCount { expected: 1, found: 0 });
    }
    Ok(())
}

fn require_positive(lambda: f64) -> Result<(), Error> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::NegativeLambda { lambda });
    }
    Ok(())
}

/// Checks that `g` preserves the interval `<p-q, p-q>` on random pairs.
/// Witness: the worst pair, `point` = p and `params` = coordinates of q.
pub fn check_isometry(g: &IsoElement, trials: usize, seed: u64) -> Result<VerificationReport, Error> {
    require_trials(trials)?;
    let d = g.ambient_dim();
    let mut worst = 0.0f64;
    let mut worst_pair = (MinkVector::zero(d), MinkVector::zero(d));
    for t in 0..trials {
        let mut rng = sample::rng_for(seed, t as u64);
        let p = sample::gaussian_point(&mut rng, d, 2.0);
        let q = sample::gaussian_point(&mut rng, d, 2.0);
        let dv = p.sub(&q);
        let reference = lorentz_inner(&dv, &dv)?;
        let dw = g.apply(&p).sub(&g.apply(&q));
        let image = lorentz_inner(&dw, &dw)?;
        let res = (image - reference).abs() / (1.0 + reference.abs());
        if res > worst {
            worst = res;
            worst_pair = (p, q);
        }
    }
    let witness = Witness {
        point: worst_pair.0,
        params: worst_pair.1.coords().to_vec(),
        labels: Vec::new(),
    };
    Ok(VerificationReport::finish(
        String::from("isometry-interval"),
        worst,
        TOL_ISOMETRY,
        Some(witness),
        trials,
        seed,
        Vec::new(),
    ))
}

fn boost_generator() -> LieElement {
    let (_, ya, _) = crate::catalog::so21_reference();
    ya
}

fn commuting_core(
    lambda: f64,
    trials: usize,
    seed: u64,
    exponent_sign: f64,
) -> Result<VerificationReport, Error> {
    require_trials(trials)?;
    require_positive(lambda)?;
    let spec = ActionSpec::new(ActionClass::ALambdaEll, 3, Some(lambda))?;
    let ya = boost_generator();
    let mut worst = 0.0f64;
    let mut worst_witness = Witness {
        point: MinkVector::zero(3),
        params: alloc::vec![0.0, 0.0, 0.0],
        labels: Vec::new(),
    };
    for t in 0..trials {
        let mut rng = sample::rng_for(seed, t as u64);
        let uts = sample::uniform_params(&mut rng, 3, 2.0);
        let (u, tp, s) = (uts[0], uts[1], uts[2]);
        let p = sample::gaussian_point(&mut rng, 3, 2.0);
        let a_u = exp_iso(&ya, u);
        let g = group_element(&spec, &[tp, s])?;
        let lhs = a_u.apply(&g.apply(&p));
        let g_scaled = group_element(&spec, &[tp, (exponent_sign * u).exp() * s])?;
        let rhs = g_scaled.apply(&a_u.apply(&p));
        let res = lhs.sub(&rhs).max_abs() / (1.0 + lhs.max_abs());
        if res > worst {
            worst = res;
            worst_witness = Witness { point: p, params: alloc::vec![u, tp, s], labels: Vec::new() };
        }
    }
    Ok(VerificationReport::finish(
        format!("commuting-identity(lambda={lambda})"),
        worst,
        TOL_COMMUTING,
        Some(worst_witness),
        trials,
        seed,
        Vec::new(),
    ))
}

/// Verifies the displayed relation `a_u (g_{t,s}) = (g_{t, e^u s}) a_u` for
/// the drift family, pointwise at random samples. Witness: the worst point
/// with `params = [u, t, s]`.
pub fn commuting_identity_check(
    lambda: f64,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, Error> {
    commuting_core(lambda, trials, seed, 1.0)
}

/// Congruence of the ruled parabola surfaces with an explicit boost
/// parameter `u`; membership of each mapped sample is measured by the
/// graph invariant of the target surface. Witness: the worst mapped point
/// with `params = [t, s, u]`.
pub fn p_lambda_congruence_with_boost(
    lambda: f64,
    mu: f64,
    samples: usize,
    seed: u64,
    u: f64,
) -> Result<VerificationReport, Error> {
    require_trials(samples)?;
    require_positive(lambda)?;
    require_positive(mu)?;
    let (_, ya, yn) = crate::catalog::so21_reference();
    let drift = LieElement::new(yn.linear.clone(), MinkVector::basis(3, 3).scale(lambda))?;
    let ell = LieElement::from_translation(MinkVector::w0(3));
    let a_u = exp_iso(&ya, u);
    let origin = MinkVector::zero(3);
    let mut worst = 0.0f64;
    let mut worst_witness =
        Witness { point: origin.clone(), params: alloc::vec![0.0, 0.0, u], labels: Vec::new() };
    for i in 0..samples {
        let mut rng = sample::rng_for(seed, i as u64);
        let ts = sample::uniform_params(&mut rng, 2, 2.0);
        let h = exp_iso(&ell, ts[1]).compose(&exp_iso(&drift, ts[0]));
        let p = h.apply(&origin);
        let q = a_u.apply(&p);
        let sum = q.get(1) + q.get(2);
        let res = (q.get(0) - sum * sum / (2.0 * mu)).abs();
        if res > worst {
            worst = res;
            worst_witness = Witness { point: q, params: alloc::vec![ts[0], ts[1], u], labels: Vec::new() };
        }
    }
    Ok(VerificationReport::finish(
        format!("parabola-congruence(lambda={lambda}, mu={mu})"),
        worst,
        TOL_CONGRUENCE,
        Some(worst_witness),
        samples,
        seed,
        alloc::vec![format!("boost parameter {u}")],
    ))
}

/// Congruence check with the derived boost `u = ln(lambda/mu) / 2`.
pub fn p_lambda_congruence_check(
    lambda: f64,
    mu: f64,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport, Error> {
    require_positive(lambda)?;
    require_positive(mu)?;
    p_lambda_congruence_with_boost(lambda, mu, samples, seed, 0.5 * (lambda / mu).ln())
}

/// Produces a numeric witness that the drift-family orbit through
/// `e2 + e3` for parameter `lambda` is not an orbit of the `mu` action:
/// the `mu` graph invariant must spread by more than `WITNESS_FLOOR` along
/// the orbit. Also confirms both actions carry the degenerate plane as a
/// single identically-labeled orbit. Witness: the base point,
/// `params = [spread, lambda, mu]`, and the two degenerate-plane labels.
pub fn nonequivalence_witness(
    lambda: f64,
    mu: f64,
    grid: usize,
) -> Result<VerificationReport, Error> {
    require_positive(lambda)?;
    require_positive(mu)?;
    if lambda == mu {
        return Err(Error::DegenerateComparison);
    }
    if grid < 2 {
        return Err(Error::WrongParamCount { expected: 2, found: grid });
    }
    let spec_l = ActionSpec::new(ActionClass::ALambdaEll, 3, Some(lambda))?;
    let spec_m = ActionSpec::new(ActionClass::ALambdaEll, 3, Some(mu))?;
    let base = MinkVector::new(alloc::vec![0.0, 1.0, 1.0])?;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..grid {
        let t = -1.0 + 2.0 * (i as f64) / ((grid - 1) as f64);
        let g = group_element(&spec_l, &[t, 0.0])?;
        let p = g.apply(&base);
        let z = (p.get(1) + p.get(2)) / 2.0;
        let value = z * (p.get(0) / mu).exp();
        lo = lo.min(value);
        hi = hi.max(value);
    }
    let spread = hi - lo;
    let mut residual = (WITNESS_FLOOR - spread).max(0.0);
    let mut notes = alloc::vec![format!("invariant spread {spread} over the witness grid")];
    // Shared starting point of the argument: the degenerate plane is one
    // orbit of both actions, with the same label.
    let w_point = MinkVector::new(alloc::vec![1.3, 0.5, -0.5])?;
    let label_l = orbit_label(&spec_l, &w_point, 1e-9)?;
    let label_m = orbit_label(&spec_m, &w_point, 1e-9)?;
    if label_l.stratum != label_m.stratum || label_l.invariants != label_m.invariants {
        residual = residual.max(1.0);
        notes.push(String::from("degenerate-plane labels disagree"));
    } else {
        notes.push(String::from("degenerate plane is label-identical for both actions"));
    }
    let witness = Witness {
        point: base,
        params: alloc::vec![spread, lambda, mu],
        labels: alloc::vec![label_l.to_string(), label_m.to_string()],
    };
    Ok(VerificationReport::finish(
        format!("nonequivalence(lambda={lambda}, mu={mu})"),
        residual,
        0.0,
        Some(witness),
        grid,
        0,
        notes,
    ))
}

fn stratum_agreement(
    a: &crate::catalog::OrbitLabel,
    b: &crate::catalog::OrbitLabel,
) -> f64 {
    if a.stratum != b.stratum || a.invariants.len() != b.invariants.len() {
        return 1.0;
    }
    let mut worst = 0.0f64;
    for (x, y) in a.invariants.iter().zip(&b.invariants) {
        worst = worst.max((x - y).abs() / (1.0 + x.abs().max(y.abs())));
    }
    worst
}

/// On `M^4`, the parabolic actions with trivial and full rotation factor
/// must agree (orbit dimension and label) away from the degenerate
/// hyperplane and differ (dimension 1 vs 2) on the cylinder of radius `r`.
pub fn dense_open_experiment(
    r: f64,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, Error> {
    require_trials(trials)?;
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::NonPositiveRadius { r });
    }
    let triv = ActionSpec::new(ActionClass::KprimeAN(KPrime::Trivial), 4, None)?;
    let full = ActionSpec::new(ActionClass::KprimeAN(KPrime::Full), 4, None)?;
    let mut worst = 0.0f64;
    let mut notes = Vec::new();
    for t in 0..trials {
        let mut rng = sample::rng_for(seed, t as u64);
        // Spacelike direction off the degenerate hyperplane, scaled onto the
        // radius-r hyperboloid.
        let p = loop {
            let v = sample::gaussian_point(&mut rng, 4, 1.0);
            let q = lorentz_inner(&v, &v)?;
            if q > 1e-4 && !in_w_subspace(&v, 1e-4)? {
                break v.scale(r / q.sqrt());
            }
        };
        let d_triv = orbit_dimension(&triv, &p, 1e-9)?;
        let d_full = orbit_dimension(&full, &p, 1e-9)?;
        if d_triv != d_full {
            worst = worst.max(1.0);
        }
        let l_triv = orbit_label(&triv, &p, 1e-9)?;
        let l_full = orbit_label(&full, &p, 1e-9)?;
        worst = worst.max(stratum_agreement(&l_triv, &l_full));
    }
    let cylinder_trials = (trials / 10).max(1);
    for t in 0..cylinder_trials {
        let mut rng = sample::rng_for(seed, (trials + t) as u64);
        let params = sample::uniform_params(&mut rng, 2, 2.0);
        let theta = params[0] * core::f64::consts::PI;
        let y = params[1];
        let p = MinkVector::new(alloc::vec![r * theta.cos(), r * theta.sin(), y, -y])?;
        let d_triv = orbit_dimension(&triv, &p, 1e-9)?;
        let d_full = orbit_dimension(&full, &p, 1e-9)?;
        if d_triv != 1 || d_full != 2 {
            worst = worst.max(1.0);
            notes.push(format!(
                "cylinder point gave dimensions ({d_triv}, {d_full}), expected (1, 2)"
            ));
        }
    }
    notes.push(format!(
        "{trials} points off the degenerate hyperplane, {cylinder_trials} on the cylinder"
    ));
    Ok(VerificationReport::finish(
        format!("dense-open(r={r})"),
        worst,
        1e-12,
        None,
        trials + cylinder_trials,
        seed,
        notes,
    ))
}

/// Stratified point menu for inventory sampling: deterministic structural
/// points (origin, both null diagonals, the reference null ray, degenerate
/// hyperplane points, coordinate axes) interleaved with random draws on a
/// radius ladder.
fn inventory_point(rng: &mut rand_chacha::ChaCha8Rng, dim: usize, variant: usize, r: f64) -> MinkVector {
    let sign = |rng: &mut rand_chacha::ChaCha8Rng| if rng.gen::<bool>() { 1.0 } else { -1.0 };
    match variant {
        0 => MinkVector::zero(dim),
        1 => sample::gaussian_point(rng, dim, r),
        2 => sample::point_at_radius(rng, dim, r),
        3 => {
            // Null vector: random spatial direction, random time sign.
            let mut coords = if dim == 2 {
                alloc::vec![sign(rng) * r]
            } else {
                sample::sphere_direction(rng, dim - 1)
                    .into_iter()
                    .map(|x| x * r)
                    .collect::<Vec<f64>>()
            };
            coords.push(sign(rng) * r);
            MinkVector::new(coords).expect("finite null sample")
        }
        4 => MinkVector::w0(dim).scale(sign(rng) * r),
        5 => {
            // Degenerate-hyperplane point: last two coordinates opposite.
            let mut coords = sample::gaussian_point(rng, dim, r).coords().to_vec();
            coords[dim - 1] = -coords[dim - 2];
            MinkVector::new(coords).expect("finite sample")
        }
        6 => {
            // Mirror diagonal: last two coordinates equal.
            let mut coords = sample::gaussian_point(rng, dim, r).coords().to_vec();
            coords[dim - 1] = coords[dim - 2];
            MinkVector::new(coords).expect("finite sample")
        }
        7 => {
            let mut coords = alloc::vec![0.0; dim];
            coords[dim - 1] = sign(rng) * r;
            MinkVector::new(coords).expect("finite sample")
        }
        _ => {
            let mut coords = alloc::vec![0.0; dim];
            coords[0] = sign(rng) * r;
            MinkVector::new(coords).expect("finite sample")
        }
    }
}

/// Samples points with the stratified menu, labels each orbit, and compares
/// the set of observed stratum kinds against the action's expected
/// inventory. Residual = size of the symmetric difference.
pub fn orbit_count_experiment(
    spec: &ActionSpec,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, Error> {
    require_trials(trials)?;
    const LADDER: [f64; 4] = [0.5, 1.0, 2.0, 4.0];
    let dim = spec.ambient_dim();
    let expected: alloc::collections::BTreeSet<String> =
        crate::catalog::expected_stratum_kinds(spec).into_iter().collect();
    let mut seen: alloc::collections::BTreeSet<String> = alloc::collections::BTreeSet::new();
    for t in 0..trials {
        let mut rng = sample::rng_for(seed, t as u64);
        let p = inventory_point(&mut rng, dim, t % 9, LADDER[(t / 9) % LADDER.len()]);
        let label = orbit_label(spec, &p, 1e-9)?;
        seen.insert(label.stratum.kind());
    }
    let missing: Vec<String> = expected.difference(&seen).cloned().collect();
    let extra: Vec<String> = seen.difference(&expected).cloned().collect();
    let residual = (missing.len() + extra.len()) as f64;
    let mut notes = alloc::vec![
        format!("observed kinds: {}", join(&seen.iter().cloned().collect::<Vec<_>>())),
        format!("expected kinds: {}", join(&expected.iter().cloned().collect::<Vec<_>>())),
    ];
    if !missing.is_empty() {
        notes.push(format!("missing: {}", join(&missing)));
    }
    if !extra.is_empty() {
        notes.push(format!("unexpected: {}", join(&extra)));
    }
    Ok(VerificationReport::finish(
        format!("orbit-inventory({})", spec.name()),
        residual,
        0.0,
        None,
        trials,
        seed,
        notes,
    ))
}

fn join(items: &[String]) -> String {
    let mut out = String::new();
    for (i, s) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(s);
    }
    out
}
