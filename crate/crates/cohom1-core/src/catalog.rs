//! Catalog of the connected cohomogeneity-one isometric actions on `M^2`
//! and `M^3`, plus the two families that exist in every dimension: the full
//! restricted Lorentz group and the parabolic groups `K'AN` acting on
//! `M^{n+1}`.
//!
//! Each catalog entry stores explicit Lie-algebra generators. Group elements
//! are reverse-order products of one-parameter subgroups,
//! `g(p) = exp(p_m Y_m) ... exp(p_1 Y_1)`, which reproduces the closed-form
//! parametrizations of the solvable actions exactly. Orbits are labeled by
//! complete geometric invariants (quadric radii, leaf coordinates, graph
//! values), so two points get the same label precisely when they lie on the
//! same orbit.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;

use crate::geometry::{lorentz_inner, quadric_label, MinkVector, RegionLabel, Sign};
use crate::lie::{exp_iso, iwasawa_generators, IsoElement, LieElement, SoMatrix, Subalgebra};
use crate::linalg::{self, Mat};
use crate::sample;
use crate::Error;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Choice of the compact factor `K'` inside `SO(n-1)` for the parabolic
/// family: trivial, the full rotation block on the first `n-1` coordinates,
/// or a partial block `SO(m)` on the first `m` of them (`2 <= m <= n-2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KPrime {
    Trivial,
    Full,
    Block(usize),
}

/// Orbit-equivalence classes of connected cohomogeneity-one actions.
///
/// `M^2` classes: `R1` (spacelike translation line), `M1` (timelike),
/// `W1` (lightlike), `SO11` (restricted Lorentz group).
///
/// `M^3` classes: the translation planes `R2`, `M2`, `W2`; the reducible
/// products `KxRe3` (rotations times timelike translations) and `AxRe1`
/// (boosts times spacelike translations); the degenerate-plane family
/// `ALambdaEll` (boost-plus-drift with null translations, parameter
/// `lambda >= 0`); the nilpotent pair `NxEll` and its normalized form
/// `N1xEll`; the full group `SO21`; and the solvable group `AN`.
///
/// Higher dimensions: `SOn1` (full restricted Lorentz group) and the
/// parabolic family `KprimeAN`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionClass {
    R1,
    M1,
    W1,
    SO11,
    R2,
    M2,
    W2,
    KxRe3,
    AxRe1,
    NxEll,
    N1xEll,
    ALambdaEll,
    SO21,
    AN,
    SOn1,
    KprimeAN(KPrime),
}

impl ActionClass {
    /// Canonical parse/print name (`"KprimeAN-block2"` style for blocks).
    pub fn name(&self) -> String {
        match self {
            ActionClass::R1 => String::from("R1"),
            ActionClass::M1 => String::from("M1"),
            ActionClass::W1 => String::from("W1"),
            ActionClass::SO11 => String::from("SO11"),
            ActionClass::R2 => String::from("R2"),
            ActionClass::M2 => String::from("M2"),
            ActionClass::W2 => String::from("W2"),
            ActionClass::KxRe3 => String::from("KxRe3"),
            ActionClass::AxRe1 => String::from("AxRe1"),
            ActionClass::NxEll => String::from("NxEll"),
            ActionClass::N1xEll => String::from("N1xEll"),
            ActionClass::ALambdaEll => String::from("ALambdaEll"),
            ActionClass::SO21 => String::from("SO21"),
            ActionClass::AN => String::from("AN"),
            ActionClass::SOn1 => String::from("SOn1"),
            ActionClass::KprimeAN(KPrime::Trivial) => String::from("KprimeAN-trivial"),
            ActionClass::KprimeAN(KPrime::Full) => String::from("KprimeAN-full"),
            ActionClass::KprimeAN(KPrime::Block(m)) => format!("KprimeAN-block{m}"),
        }
    }

    /// Whether the class takes the continuous parameter `lambda`.
    pub fn needs_lambda(&self) -> bool {
        matches!(self, ActionClass::ALambdaEll)
    }
}

impl core::fmt::Display for ActionClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A catalog action instantiated in a concrete ambient dimension, with its
/// Lie-algebra generators materialized.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    class: ActionClass,
    ambient_dim: usize,
    lambda: Option<f64>,
    generators: Vec<LieElement>,
}

/// Generators of `so(2,1)` in the fixed reference basis `(Yk, Ya, Yn)`.
pub(crate) fn so21_reference() -> (LieElement, LieElement, LieElement) {
    let iw = iwasawa_generators(2).expect("n = 2 is valid");
    (iw.k_gens[0].clone(), iw.a_gen, iw.n_gens[0].clone())
}

fn skew_generator(dim: usize, i: usize, j: usize) -> LieElement {
    // E_{ji} - E_{ij} for 1-indexed i < j, both spatial.
    let mut m = Mat::zeros(dim, dim);
    m[(j - 1, i - 1)] = 1.0;
    m[(i - 1, j - 1)] = -1.0;
    LieElement::from_linear(SoMatrix::new(m).expect("skew matrices are in so(n,1)"))
}

impl ActionSpec {
    /// Instantiates `class` in `M^{ambient_dim}`. `lambda` is consulted only
    /// by `ALambdaEll`, where it is required and must be nonnegative.
    pub fn new(class: ActionClass, ambient_dim: usize, lambda: Option<f64>) -> Result<Self, Error> {
        let d = ambient_dim;
        let class_dim: Option<usize> = match class {
            ActionClass::R1 | ActionClass::M1 | ActionClass::W1 | ActionClass::SO11 => Some(2),
            ActionClass::SOn1 | ActionClass::KprimeAN(_) => None,
            _ => Some(3),
        };
        match class_dim {
            Some(cd) if cd != d => {
                return Err(Error::WrongAmbientForClass { class_dim: cd, found: d })
            }
            None if d < 4 => return Err(Error::WrongAmbientForClass { class_dim: 4, found: d }),
            _ => {}
        }
        if class.needs_lambda() {
            match lambda {
                None => return Err(Error::WrongParamCount { expected: 1, found: 0 }),
                Some(l) if !l.is_finite() => return Err(Error::NonFiniteInput),
                Some(l) if l < 0.0 => return Err(Error::NegativeLambda { lambda: l }),
                Some(_) => {}
            }
        } else if lambda.is_some() {
            return Err(Error::WrongParamCount { expected: 0, found: 1 });
        }
        let n = d - 1;
        if let ActionClass::KprimeAN(KPrime::Block(m)) = class {
            if m < 2 || m + 2 > n {
                return Err(Error::BlockSizeOutOfRange { m, n });
            }
        }
        let t = LieElement::from_translation;
        let e = |i: usize| MinkVector::basis(d, i);
        let generators: Vec<LieElement> = match class {
            ActionClass::R1 => alloc::vec![t(e(1))],
            ActionClass::M1 => alloc::vec![t(e(2))],
            ActionClass::W1 => alloc::vec![t(MinkVector::w0(2))],
            ActionClass::SO11 => {
                let b = SoMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
                    .expect("reference boost is in so(1,1)");
                alloc::vec![LieElement::from_linear(b)]
            }
            ActionClass::R2 => alloc::vec![t(e(1)), t(e(2))],
            ActionClass::M2 => alloc::vec![t(e(2)), t(e(3))],
            ActionClass::W2 => alloc::vec![t(e(1)), t(MinkVector::w0(3))],
            ActionClass::KxRe3 => {
                let (yk, _, _) = so21_reference();
                alloc::vec![yk, t(e(3))]
            }
            ActionClass::AxRe1 => {
                let (_, ya, _) = so21_reference();
                alloc::vec![ya, t(e(1))]
            }
            ActionClass::NxEll => {
                let (_, _, yn) = so21_reference();
                alloc::vec![yn, t(MinkVector::w0(3))]
            }
            ActionClass::N1xEll => {
                let (_, _, yn) = so21_reference();
                let gen = LieElement::new(yn.linear.clone(), e(3)).expect("dimension 3");
                alloc::vec![gen, t(MinkVector::w0(3))]
            }
            ActionClass::ALambdaEll => {
                let (_, ya, _) = so21_reference();
                let l = lambda.expect("checked above");
                let gen = LieElement::new(ya.linear.clone(), e(1).scale(l)).expect("dimension 3");
                alloc::vec![gen, t(MinkVector::w0(3))]
            }
            ActionClass::SO21 => {
                let (yk, ya, yn) = so21_reference();
                alloc::vec![yk, ya, yn]
            }
            ActionClass::AN => {
                let (_, ya, yn) = so21_reference();
                alloc::vec![ya, yn]
            }
            ActionClass::SOn1 => {
                let iw = iwasawa_generators(n)?;
                let mut g = iw.k_gens;
                g.push(iw.a_gen);
                g.extend(iw.n_gens);
                g
            }
            ActionClass::KprimeAN(kp) => {
                let iw = iwasawa_generators(n)?;
                let mut g = alloc::vec![iw.a_gen];
                g.extend(iw.n_gens);
                match kp {
                    KPrime::Trivial => {}
                    KPrime::Full => g.extend(iw.k0_gens),
                    KPrime::Block(m) => {
                        for i in 1..=m {
                            for j in (i + 1)..=m {
                                g.push(skew_generator(d, i, j));
                            }
                        }
                    }
                }
                g
            }
        };
        Ok(ActionSpec { class, ambient_dim, lambda, generators })
    }

    pub fn class(&self) -> ActionClass {
        self.class
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lambda(&self) -> Option<f64> {
        self.lambda
    }

    pub fn generators(&self) -> &[LieElement] {
        &self.generators
    }

    pub fn param_count(&self) -> usize {
        self.generators.len()
    }

    /// Instance name; carries the `lambda` value where one exists.
    pub fn name(&self) -> String {
        match self.lambda {
            Some(l) => format!("{}({l})", self.class.name()),
            None => self.class.name(),
        }
    }

    /// The generators as a validated subalgebra (used by round trips).
    pub fn subalgebra(&self) -> Subalgebra {
        Subalgebra::new(self.ambient_dim, self.generators.clone())
            .expect("catalog generators are independent")
    }
}

/// The group element with parameter vector `p`, as the reverse-order product
/// `exp(p_m Y_m) ... exp(p_1 Y_1)` of one-parameter subgroups.
pub fn group_element(spec: &ActionSpec, params: &[f64]) -> Result<IsoElement, Error> {
    if params.len() != spec.param_count() {
        return Err(Error::WrongParamCount { expected: spec.param_count(), found: params.len() });
    }
    if !params.iter().all(|x| x.is_finite()) {
        return Err(Error::NonFiniteInput);
    }
    let mut g = IsoElement::identity(spec.ambient_dim);
    for (p, gen) in params.iter().zip(spec.generators()) {
        g = exp_iso(gen, *p).compose(&g);
    }
    Ok(g)
}

/// Random orbit point: applies a group element with parameters drawn from
/// `U(-scale, scale)` to `base`. Also returns the parameters used.
pub fn orbit_sample_with_params(
    spec: &ActionSpec,
    base: &MinkVector,
    rng: &mut ChaCha8Rng,
    scale: f64,
) -> Result<(MinkVector, Vec<f64>), Error> {
    if base.dim() != spec.ambient_dim {
        return Err(Error::DimensionMismatch { expected: spec.ambient_dim, found: base.dim() });
    }
    let params = sample::uniform_params(rng, spec.param_count(), scale);
    let g = group_element(spec, &params)?;
    Ok((g.apply(base), params))
}

/// Random orbit point (see `orbit_sample_with_params`).
pub fn orbit_sample(
    spec: &ActionSpec,
    base: &MinkVector,
    rng: &mut ChaCha8Rng,
    scale: f64,
) -> Result<MinkVector, Error> {
    Ok(orbit_sample_with_params(spec, base, rng, scale)?.0)
}

/// Dimension of the orbit through `p`: the rank of the generator vector
/// fields evaluated at `p`, with singular values below `tol * sigma_max`
/// treated as zero.
pub fn orbit_dimension(spec: &ActionSpec, p: &MinkVector, tol: f64) -> Result<usize, Error> {
    if p.dim() != spec.ambient_dim {
        return Err(Error::DimensionMismatch { expected: spec.ambient_dim, found: p.dim() });
    }
    let d = spec.ambient_dim;
    let m = spec.param_count();
    let mut a = Mat::zeros(d, m);
    for (j, gen) in spec.generators().iter().enumerate() {
        a.set_column(j, gen.field_at(p).coords());
    }
    Ok(linalg::rank(&a, tol))
}

/// Cohomogeneity of the action: ambient dimension minus the maximal orbit
/// dimension observed over `trials` random base points (drawn on spheres of
/// several radii so that every scale is represented).
pub fn cohomogeneity(spec: &ActionSpec, trials: usize, seed: u64, tol: f64) -> Result<usize, Error> {
    Ok(cohomogeneity_with_witness(spec, trials, seed, tol)?.0)
}

/// `cohomogeneity` plus the sampled point where the maximal orbit dimension
/// was attained.
pub fn cohomogeneity_with_witness(
    spec: &ActionSpec,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<(usize, MinkVector), Error> {
    const LADDER: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
    let d = spec.ambient_dim;
    let mut max_rank = 0;
    let mut witness = MinkVector::zero(d);
    for t in 0..trials {
        let mut rng = sample::rng_for(seed, t as u64);
        let base = sample::point_at_radius(&mut rng, d, LADDER[t % LADDER.len()]);
        let rank = orbit_dimension(spec, &base, tol)?;
        if rank > max_rank {
            max_rank = rank;
            witness = base;
        }
        if max_rank + 1 == d {
            break;
        }
    }
    Ok((d - max_rank, witness))
}

/// Orbit stratum kinds. An `OrbitLabel` pairs one of these with the
/// continuous invariants that pin down the individual orbit inside the
/// stratum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Stratum {
    /// The fixed origin.
    Origin,
    /// Future / past hyperbolic sheets `H(r)`; invariant `r`.
    HyperbolicPlus,
    HyperbolicMinus,
    /// Connected de Sitter quadric (ambient dimension 3 and up); invariant `r`.
    DeSitter,
    /// The two de Sitter branches of the Minkowski plane; invariant `r`.
    DeSitterPlus,
    DeSitterMinus,
    /// Punctured light cone halves.
    LightConePlus,
    LightConeMinus,
    /// Light cone rays of the Minkowski plane (first-coordinate sign, time
    /// orientation).
    LightRay(Sign, Sign),
    /// The two rays of the reference null line, by time orientation.
    WRayPlus,
    WRayMinus,
    /// Cone halves with the reference ray removed.
    LightConePlusOffRay,
    LightConeMinusOffRay,
    /// Half of a de Sitter quadric cut by the degenerate hyperplane, by the
    /// sign of `p_n + p_{n+1}`; invariant `r`.
    DeSitterHalf(Sign),
    /// Null line inside the degenerate hyperplane, offset in the spatial
    /// directions; invariants are the spatial base coordinates.
    CylinderLine,
    /// Full cylinder `S^{n-2}(r) x ell` inside the degenerate hyperplane;
    /// invariant `r`.
    Cylinder,
    /// Partial-block cylinder: sphere in the first `m` spatial coordinates
    /// times a fixed spatial tail times `ell`; invariants are the sphere
    /// radius followed by the tail coordinates.
    CylinderBlockOrbit,
    /// Parallel plane of a plane foliation; invariant is the transverse
    /// coordinate.
    PlaneLeaf,
    /// Parallel line (plane case, or a degenerate leaf); invariant is the
    /// transverse coordinate.
    LineLeaf,
    /// Open half-plane leaf inside the degenerate plane foliation, by the
    /// sign of the null-transverse coordinate; invariant is the first
    /// coordinate.
    HalfPlaneLeaf(Sign),
    /// The degenerate plane through the origin, a single orbit.
    DegeneratePlane,
    /// Graph-type orbit of the exponential or parabola family; invariant is
    /// the graph value.
    GraphLeaf,
    /// The rotation axis.
    Axis,
    /// Round cylinder about the timelike axis; invariant is its radius.
    RoundCylinder,
}

impl Stratum {
    /// Stable token naming the stratum kind, without continuous invariants.
    pub fn kind(&self) -> String {
        match self {
            Stratum::Origin => String::from("origin"),
            Stratum::HyperbolicPlus => String::from("H+"),
            Stratum::HyperbolicMinus => String::from("H-"),
            Stratum::DeSitter => String::from("dS"),
            Stratum::DeSitterPlus => String::from("dS+"),
            Stratum::DeSitterMinus => String::from("dS-"),
            Stratum::LightConePlus => String::from("cone+"),
            Stratum::LightConeMinus => String::from("cone-"),
            Stratum::LightRay(s, t) => format!("C({},{})", s.symbol(), t.symbol()),
            Stratum::WRayPlus => String::from("wray+"),
            Stratum::WRayMinus => String::from("wray-"),
            Stratum::LightConePlusOffRay => String::from("cone+/ray"),
            Stratum::LightConeMinusOffRay => String::from("cone-/ray"),
            Stratum::DeSitterHalf(s) => format!("dShalf({})", s.symbol()),
            Stratum::CylinderLine => String::from("cyl-line"),
            Stratum::Cylinder => String::from("cylinder"),
            Stratum::CylinderBlockOrbit => String::from("cyl-block"),
            Stratum::PlaneLeaf => String::from("plane"),
            Stratum::LineLeaf => String::from("line"),
            Stratum::HalfPlaneLeaf(s) => format!("halfplane({})", s.symbol()),
            Stratum::DegeneratePlane => String::from("degplane"),
            Stratum::GraphLeaf => String::from("graph"),
            Stratum::Axis => String::from("axis"),
            Stratum::RoundCylinder => String::from("round-cyl"),
        }
    }
}

impl core::fmt::Display for Stratum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.kind())
    }
}

/// Complete orbit label: two points of the same action get equal labels
/// (same stratum, invariants within tolerance) exactly when they lie on the
/// same orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitLabel {
    pub class: ActionClass,
    pub stratum: Stratum,
    pub invariants: Vec<f64>,
}

impl OrbitLabel {
    pub fn kind(&self) -> String {
        self.stratum.kind()
    }
}

impl core::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.stratum.kind())?;
        if !self.invariants.is_empty() {
            write!(f, "[")?;
            for (i, v) in self.invariants.iter().enumerate() {
                if i > 0 {
                    write!(f, ";")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Distance between two labels: `None` when class or stratum differ (or the
/// invariant lists have different lengths), otherwise the worst
/// relative-absolute gap `|a_i - b_i| / (1 + max(|a_i|, |b_i|))`.
pub fn label_distance(a: &OrbitLabel, b: &OrbitLabel) -> Option<f64> {
    if a.class != b.class || a.stratum != b.stratum || a.invariants.len() != b.invariants.len() {
        return None;
    }
    let mut worst = 0.0f64;
    for (x, y) in a.invariants.iter().zip(&b.invariants) {
        worst = worst.max((x - y).abs() / (1.0 + x.abs().max(y.abs())));
    }
    Some(worst)
}

fn region_to_stratum(r: RegionLabel) -> (Stratum, Vec<f64>) {
    match r {
        RegionLabel::Origin => (Stratum::Origin, Vec::new()),
        RegionLabel::LightConePlus => (Stratum::LightConePlus, Vec::new()),
        RegionLabel::LightConeMinus => (Stratum::LightConeMinus, Vec::new()),
        RegionLabel::HyperbolicPlus(r) => (Stratum::HyperbolicPlus, alloc::vec![r]),
        RegionLabel::HyperbolicMinus(r) => (Stratum::HyperbolicMinus, alloc::vec![r]),
        RegionLabel::DeSitter(r) => (Stratum::DeSitter, alloc::vec![r]),
        RegionLabel::DeSitterPlus(r) => (Stratum::DeSitterPlus, alloc::vec![r]),
        RegionLabel::DeSitterMinus(r) => (Stratum::DeSitterMinus, alloc::vec![r]),
        RegionLabel::LightRay(s, t) => (Stratum::LightRay(s, t), Vec::new()),
    }
}

/// Orbit decomposition of the degenerate hyperplane and its complement for
/// the solvable family (`AN` on `M^3`, `K'AN` on `M^{n+1}`).
fn parabolic_label(p: &MinkVector, kp: KPrime, tol: f64) -> (Stratum, Vec<f64>) {
    let d = p.dim();
    let n = d - 1;
    let thr = tol * (1.0 + p.max_abs());
    let z2 = p.get(n - 1) + p.get(n);
    if z2.abs() <= thr {
        // Inside W^n: write p = x + y w0 with x spatial.
        let x: Vec<f64> = (0..(n - 1)).map(|i| p.get(i)).collect();
        let xnorm = linalg::norm2(&x);
        let y = (p.get(n - 1) - p.get(n)) / 2.0;
        if xnorm <= thr {
            if y.abs() <= thr {
                (Stratum::Origin, Vec::new())
            } else if p.get(n) > 0.0 {
                (Stratum::WRayPlus, Vec::new())
            } else {
                (Stratum::WRayMinus, Vec::new())
            }
        } else {
            match kp {
                KPrime::Trivial => (Stratum::CylinderLine, x),
                KPrime::Full => (Stratum::Cylinder, alloc::vec![xnorm]),
                KPrime::Block(m) => {
                    let rho = linalg::norm2(&x[..m]);
                    let mut inv = alloc::vec![rho];
                    inv.extend_from_slice(&x[m..]);
                    (Stratum::CylinderBlockOrbit, inv)
                }
            }
        }
    } else {
        let q = lorentz_inner(p, p).expect("same vector");
        let e2 = linalg::dot(p.coords(), p.coords());
        let future = p.get(n) > 0.0;
        if q.abs() <= tol * (1.0 + e2) {
            if future {
                (Stratum::LightConePlusOffRay, Vec::new())
            } else {
                (Stratum::LightConeMinusOffRay, Vec::new())
            }
        } else if q < 0.0 {
            let r = (-q).sqrt();
            if future {
                (Stratum::HyperbolicPlus, alloc::vec![r])
            } else {
                (Stratum::HyperbolicMinus, alloc::vec![r])
            }
        } else {
            (Stratum::DeSitterHalf(Sign::of(z2)), alloc::vec![q.sqrt()])
        }
    }
}

/// Labels the orbit of the action through `p`. Labels are complete: equal
/// label (stratum plus invariants, compared with `label_distance`) is
/// equivalent to membership in the same orbit.
pub fn orbit_label(spec: &ActionSpec, p: &MinkVector, tol: f64) -> Result<OrbitLabel, Error> {
    if p.dim() != spec.ambient_dim {
        return Err(Error::DimensionMismatch { expected: spec.ambient_dim, found: p.dim() });
    }
    let thr = tol * (1.0 + p.max_abs());
    let (stratum, invariants) = match spec.class {
        ActionClass::R1 => (Stratum::LineLeaf, alloc::vec![p.get(1)]),
        ActionClass::M1 => (Stratum::LineLeaf, alloc::vec![p.get(0)]),
        ActionClass::W1 => (Stratum::LineLeaf, alloc::vec![p.get(0) + p.get(1)]),
        ActionClass::SO11 | ActionClass::SO21 | ActionClass::SOn1 => {
            region_to_stratum(quadric_label(p, tol))
        }
        ActionClass::R2 => (Stratum::PlaneLeaf, alloc::vec![p.get(2)]),
        ActionClass::M2 => (Stratum::PlaneLeaf, alloc::vec![p.get(0)]),
        ActionClass::W2 => (Stratum::PlaneLeaf, alloc::vec![p.get(1) + p.get(2)]),
        ActionClass::KxRe3 => {
            let rho = (p.get(0) * p.get(0) + p.get(1) * p.get(1)).sqrt();
            if rho <= thr {
                (Stratum::Axis, Vec::new())
            } else {
                (Stratum::RoundCylinder, alloc::vec![rho])
            }
        }
        ActionClass::AxRe1 => {
            let transverse = MinkVector::new(alloc::vec![p.get(1), p.get(2)])?;
            region_to_stratum(quadric_label(&transverse, tol))
        }
        ActionClass::NxEll => {
            let z = (p.get(1) + p.get(2)) / 2.0;
            if z.abs() <= thr {
                (Stratum::LineLeaf, alloc::vec![p.get(0)])
            } else {
                (Stratum::PlaneLeaf, alloc::vec![z])
            }
        }
        ActionClass::N1xEll => {
            let s = p.get(1) + p.get(2);
            (Stratum::GraphLeaf, alloc::vec![p.get(0) - s * s / 2.0])
        }
        ActionClass::ALambdaEll => {
            let l = spec.lambda.expect("constructor enforces lambda");
            let x = p.get(0);
            let z = (p.get(1) + p.get(2)) / 2.0;
            if l > 0.0 {
                if z.abs() <= thr {
                    (Stratum::DegeneratePlane, Vec::new())
                } else {
                    let value = z * (x / l).exp();
                    if !value.is_finite() {
                        return Err(Error::NonFiniteInput);
                    }
                    (Stratum::GraphLeaf, alloc::vec![value])
                }
            } else if z.abs() <= thr {
                (Stratum::LineLeaf, alloc::vec![x])
            } else {
                (Stratum::HalfPlaneLeaf(Sign::of(z)), alloc::vec![x])
            }
        }
        ActionClass::AN => parabolic_label(p, KPrime::Trivial, tol),
        ActionClass::KprimeAN(kp) => parabolic_label(p, kp, tol),
    };
    Ok(OrbitLabel { class: spec.class, stratum, invariants })
}

/// The complete set of stratum kinds the action's orbit space contains.
pub fn expected_stratum_kinds(spec: &ActionSpec) -> Vec<String> {
    let one = |s: &str| alloc::vec![String::from(s)];
    match spec.class {
        ActionClass::R1 | ActionClass::M1 | ActionClass::W1 => one("line"),
        ActionClass::SO11 | ActionClass::AxRe1 => alloc::vec![
            String::from("origin"),
            String::from("H+"),
            String::from("H-"),
            String::from("dS+"),
            String::from("dS-"),
            String::from("C(+,+)"),
            String::from("C(+,-)"),
            String::from("C(-,+)"),
            String::from("C(-,-)"),
        ],
        ActionClass::R2 | ActionClass::M2 | ActionClass::W2 => one("plane"),
        ActionClass::KxRe3 => alloc::vec![String::from("axis"), String::from("round-cyl")],
        ActionClass::NxEll => alloc::vec![String::from("plane"), String::from("line")],
        ActionClass::N1xEll => one("graph"),
        ActionClass::ALambdaEll => {
            if spec.lambda.unwrap_or(0.0) > 0.0 {
                alloc::vec![String::from("degplane"), String::from("graph")]
            } else {
                alloc::vec![
                    String::from("line"),
                    String::from("halfplane(+)"),
                    String::from("halfplane(-)"),
                ]
            }
        }
        ActionClass::SO21 | ActionClass::SOn1 => alloc::vec![
            String::from("origin"),
            String::from("cone+"),
            String::from("cone-"),
            String::from("H+"),
            String::from("H-"),
            String::from("dS"),
        ],
        ActionClass::AN | ActionClass::KprimeAN(_) => {
            let cyl = match spec.class {
                ActionClass::KprimeAN(KPrime::Full) => "cylinder",
                ActionClass::KprimeAN(KPrime::Block(_)) => "cyl-block",
                _ => "cyl-line",
            };
            alloc::vec![
                String::from("origin"),
                String::from("wray+"),
                String::from("wray-"),
                String::from("cone+/ray"),
                String::from("cone-/ray"),
                String::from("H+"),
                String::from("H-"),
                String::from("dShalf(+)"),
                String::from("dShalf(-)"),
                String::from(cyl),
            ]
        }
    }
}

/// All catalog entries available in the given ambient dimension, in stable
/// order. `ALambdaEll` appears once with the representative `lambda = 1`.
pub fn catalog_list(ambient_dim: usize) -> Result<Vec<ActionSpec>, Error> {
    let mk = |c: ActionClass| ActionSpec::new(c, ambient_dim, None);
    match ambient_dim {
        2 => Ok(alloc::vec![
            mk(ActionClass::R1)?,
            mk(ActionClass::M1)?,
            mk(ActionClass::W1)?,
            mk(ActionClass::SO11)?,
        ]),
        3 => Ok(alloc::vec![
            mk(ActionClass::R2)?,
            mk(ActionClass::M2)?,
            mk(ActionClass::W2)?,
            mk(ActionClass::KxRe3)?,
            mk(ActionClass::AxRe1)?,
            mk(ActionClass::NxEll)?,
            mk(ActionClass::N1xEll)?,
            ActionSpec::new(ActionClass::ALambdaEll, 3, Some(1.0))?,
            mk(ActionClass::SO21)?,
            mk(ActionClass::AN)?,
        ]),
        d if d >= 4 => {
            let n = d - 1;
            let mut out = alloc::vec![
                mk(ActionClass::SOn1)?,
                mk(ActionClass::KprimeAN(KPrime::Trivial))?,
                mk(ActionClass::KprimeAN(KPrime::Full))?,
            ];
            for m in 2..=(n.saturating_sub(2)) {
                out.push(mk(ActionClass::KprimeAN(KPrime::Block(m)))?);
            }
            Ok(out)
        }
        d => Err(Error::UnsupportedAmbientDim { dim: d }),
    }
}
