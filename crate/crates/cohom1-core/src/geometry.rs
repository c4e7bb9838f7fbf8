//! Minkowski vector space primitives: the indefinite inner product, causal
//! classification, and the labeling of the quadric strata that the
//! isometry-group orbits trace out.
//!
//! Conventions, fixed once for the whole crate:
//! * `M^{n+1}` carries the form `<u,v> = u_1 v_1 + ... + u_n v_n - u_{n+1} v_{n+1}`,
//!   i.e. the last coordinate is the timelike one and `J = diag(1,...,1,-1)`.
//! * Time orientation is read off the sign of the last coordinate: a causal
//!   vector is future-pointing when `v_{n+1} > 0`.
//! * `w0 = e_n - e_{n+1}` is the reference null direction; the degenerate
//!   hyperplane is `W^n = R^{n-1} + R w0 = { p : p_n + p_{n+1} = 0 }`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::Error;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Point or vector of `M^{n+1}`, stored as its `n+1` coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkVector {
    coords: Vec<f64>,
}

impl MinkVector {
    /// Wraps coordinates; the ambient dimension must be at least 2 and all
    /// entries finite.
    pub fn new(coords: Vec<f64>) -> Result<Self, Error> {
        if coords.len() < 2 {
            return Err(Error::AmbientDimTooSmall { found: coords.len() });
        }
        if !coords.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFiniteInput);
        }
        Ok(MinkVector { coords })
    }

    /// Standard basis vector `e_i` (1-indexed to match the usual notation).
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= dim, "basis index out of range");
        let mut c = alloc::vec![0.0; dim];
        c[i - 1] = 1.0;
        MinkVector { coords: c }
    }

    pub fn zero(dim: usize) -> Self {
        MinkVector { coords: alloc::vec![0.0; dim] }
    }

    /// The null direction `w0 = e_n - e_{n+1}` of the ambient space.
    pub fn w0(dim: usize) -> Self {
        assert!(dim >= 2);
        let mut c = alloc::vec![0.0; dim];
        c[dim - 2] = 1.0;
        c[dim - 1] = -1.0;
        MinkVector { coords: c }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> f64 {
        self.coords[i]
    }

    pub fn scale(&self, s: f64) -> Self {
        MinkVector { coords: self.coords.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        MinkVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        MinkVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        crate::linalg::max_abs_slice(&self.coords)
    }

    /// Euclidean norm of the coordinate vector (used only for tolerance
    /// scaling, never as the geometry).
    pub fn euclid_norm(&self) -> f64 {
        crate::linalg::norm2(&self.coords)
    }
}

impl core::fmt::Display for MinkVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The Minkowski inner product. Errors when the dimensions disagree.
pub fn lorentz_inner(u: &MinkVector, v: &MinkVector) -> Result<f64, Error> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: v.dim() });
    }
    let n = u.dim() - 1;
    let mut s = 0.0;
    for i in 0..n {
        s += u.coords[i] * v.coords[i];
    }
    s -= u.coords[n] * v.coords[n];
    Ok(s)
}

/// Causal type of a vector, split by time orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CausalClass {
    Zero,
    Spacelike,
    TimelikeFuture,
    TimelikePast,
    LightlikeFuture,
    LightlikePast,
}

/// Classifies `v` causally. The light cone is fattened relatively:
/// `|<v,v>| <= tol * (1 + |v|^2)` (Euclidean norm), so the classification is
/// stable under small perturbations at any scale.
pub fn causal_class(v: &MinkVector, tol: f64) -> CausalClass {
    if v.max_abs() <= tol {
        return CausalClass::Zero;
    }
    let q = lorentz_inner(v, v).expect("same vector");
    let e2 = crate::linalg::dot(v.coords(), v.coords());
    let future = v.coords[v.dim() - 1] > 0.0;
    if q.abs() <= tol * (1.0 + e2) {
        if future {
            CausalClass::LightlikeFuture
        } else {
            CausalClass::LightlikePast
        }
    } else if q > 0.0 {
        CausalClass::Spacelike
    } else if future {
        CausalClass::TimelikeFuture
    } else {
        CausalClass::TimelikePast
    }
}

/// Sign tag used in stratum labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        }
    }
}

/// Stratum of the quadric decomposition of `M^{n+1}` under the full
/// (restricted) Lorentz group: origin, light cone halves, the hyperbolic
/// sheets `H^n_(+/-)(r)` and the de Sitter family `dS^n(r)`.
///
/// In ambient dimension 2 the strata refine further: the cone splits into
/// four rays `C(sigma, tau)` (sigma = sign of the first coordinate, tau =
/// time orientation) and the spacelike family splits into two branches by
/// the sign of the first coordinate.
#[derive(Clone, Debug, PartialEq)]
pub enum RegionLabel {
    Origin,
    LightConePlus,
    LightConeMinus,
    HyperbolicPlus(f64),
    HyperbolicMinus(f64),
    DeSitter(f64),
    DeSitterPlus(f64),
    DeSitterMinus(f64),
    LightRay(Sign, Sign),
}

impl core::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RegionLabel::Origin => write!(f, "origin"),
            RegionLabel::LightConePlus => write!(f, "cone+"),
            RegionLabel::LightConeMinus => write!(f, "cone-"),
            RegionLabel::HyperbolicPlus(r) => write!(f, "H+({r})"),
            RegionLabel::HyperbolicMinus(r) => write!(f, "H-({r})"),
            RegionLabel::DeSitter(r) => write!(f, "dS({r})"),
            RegionLabel::DeSitterPlus(r) => write!(f, "dS+({r})"),
            RegionLabel::DeSitterMinus(r) => write!(f, "dS-({r})"),
            RegionLabel::LightRay(s, t) => write!(f, "C({},{})", s.symbol(), t.symbol()),
        }
    }
}

impl RegionLabel {
    pub fn name(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Assigns the quadric stratum of `v`. Radii are reported as positive reals
/// (`r = sqrt(|<v,v>|)`).
pub fn quadric_label(v: &MinkVector, tol: f64) -> RegionLabel {
    let dim2 = v.dim() == 2;
    match causal_class(v, tol) {
        CausalClass::Zero => RegionLabel::Origin,
        CausalClass::LightlikeFuture => {
            if dim2 {
                RegionLabel::LightRay(Sign::of(v.get(0)), Sign::Pos)
            } else {
                RegionLabel::LightConePlus
            }
        }
        CausalClass::LightlikePast => {
            if dim2 {
                RegionLabel::LightRay(Sign::of(v.get(0)), Sign::Neg)
            } else {
                RegionLabel::LightConeMinus
            }
        }
        CausalClass::TimelikeFuture => {
            let q = lorentz_inner(v, v).expect("same vector");
            RegionLabel::HyperbolicPlus((-q).sqrt())
        }
        CausalClass::TimelikePast => {
            let q = lorentz_inner(v, v).expect("same vector");
            RegionLabel::HyperbolicMinus((-q).sqrt())
        }
        CausalClass::Spacelike => {
            let q = lorentz_inner(v, v).expect("same vector");
            let r = q.sqrt();
            if dim2 {
                if v.get(0) > 0.0 {
                    RegionLabel::DeSitterPlus(r)
                } else {
                    RegionLabel::DeSitterMinus(r)
                }
            } else {
                RegionLabel::DeSitter(r)
            }
        }
    }
}

/// Membership in the degenerate hyperplane `W^n = { p_n + p_{n+1} = 0 }`.
/// Requires ambient dimension at least 3.
pub fn in_w_subspace(p: &MinkVector, tol: f64) -> Result<bool, Error> {
    if p.dim() < 3 {
        return Err(Error::AmbientDimTooSmall { found: p.dim() });
    }
    let n = p.dim() - 1;
    Ok((p.get(n - 1) + p.get(n)).abs() <= tol * (1.0 + p.max_abs()))
}

/// Membership in the cylinder `Z^{n-1}(r) = W^n `intersected with` dS^n(r)`,
/// i.e. `sum_{i<n} p_i^2 = r^2` and `p_n + p_{n+1} = 0` within tolerance.
pub fn in_cylinder(p: &MinkVector, r: f64, tol: f64) -> Result<bool, Error> {
    if p.dim() < 3 {
        return Err(Error::AmbientDimTooSmall { found: p.dim() });
    }
    if r.is_nan() || r <= 0.0 {
        return Err(Error::NonPositiveRadius { r });
    }
    if !in_w_subspace(p, tol)? {
        return Ok(false);
    }
    let n = p.dim() - 1;
    let mut s = 0.0;
    for i in 0..(n - 1) {
        s += p.get(i) * p.get(i);
    }
    Ok((s.sqrt() - r).abs() <= tol * (1.0 + r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const TOL: f64 = 1e-9;

    fn v(c: &[f64]) -> MinkVector {
        MinkVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn inner_product_signs_match_the_signature() {
        let e1 = MinkVector::basis(3, 1);
        let e3 = MinkVector::basis(3, 3);
        assert_eq!(lorentz_inner(&e1, &e1).unwrap(), 1.0);
        assert_eq!(lorentz_inner(&e3, &e3).unwrap(), -1.0);
        assert_eq!(lorentz_inner(&e1, &e3).unwrap(), 0.0);
    }

    #[test]
    fn inner_product_rejects_dimension_mismatch() {
        let a = v(&[1.0, 0.0]);
        let b = v(&[1.0, 0.0, 0.0]);
        assert!(matches!(
            lorentz_inner(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn causal_classes_on_reference_vectors() {
        assert_eq!(causal_class(&MinkVector::basis(3, 3), TOL), CausalClass::TimelikeFuture);
        assert_eq!(causal_class(&MinkVector::w0(3), TOL), CausalClass::LightlikePast);
        assert_eq!(causal_class(&MinkVector::basis(3, 1), TOL), CausalClass::Spacelike);
        assert_eq!(causal_class(&MinkVector::zero(3), TOL), CausalClass::Zero);
        assert_eq!(
            causal_class(&v(&[0.0, 1.0, 1.0]), TOL),
            CausalClass::LightlikeFuture
        );
    }

    #[test]
    fn quadric_labels_on_reference_vectors() {
        match quadric_label(&v(&[0.0, 0.0, 2.0]), TOL) {
            RegionLabel::HyperbolicPlus(r) => assert!((r - 2.0).abs() < 1e-12),
            other => panic!("expected H+(2), got {other:?}"),
        }
        match quadric_label(&v(&[1.0, 0.0, 0.0]), TOL) {
            RegionLabel::DeSitter(r) => assert!((r - 1.0).abs() < 1e-12),
            other => panic!("expected dS(1), got {other:?}"),
        }
        assert_eq!(quadric_label(&v(&[0.0, 1.0, 1.0]), TOL), RegionLabel::LightConePlus);
    }

    #[test]
    fn dimension_two_refinements() {
        assert_eq!(
            quadric_label(&v(&[1.0, 1.0]), TOL),
            RegionLabel::LightRay(Sign::Pos, Sign::Pos)
        );
        assert_eq!(
            quadric_label(&v(&[1.0, -1.0]), TOL),
            RegionLabel::LightRay(Sign::Pos, Sign::Neg)
        );
        assert_eq!(
            quadric_label(&v(&[-2.0, 2.0]), TOL),
            RegionLabel::LightRay(Sign::Neg, Sign::Pos)
        );
        match quadric_label(&v(&[2.0, 0.0]), TOL) {
            RegionLabel::DeSitterPlus(r) => assert!((r - 2.0).abs() < 1e-12),
            other => panic!("expected dS+(2), got {other:?}"),
        }
        match quadric_label(&v(&[-2.0, 0.0]), TOL) {
            RegionLabel::DeSitterMinus(r) => assert!((r - 2.0).abs() < 1e-12),
            other => panic!("expected dS-(2), got {other:?}"),
        }
        match quadric_label(&v(&[0.5, -1.0]), TOL) {
            RegionLabel::HyperbolicMinus(_) => {}
            other => panic!("expected H-, got {other:?}"),
        }
    }

    #[test]
    fn w_subspace_membership() {
        assert!(in_w_subspace(&MinkVector::basis(3, 1), TOL).unwrap());
        assert!(in_w_subspace(&MinkVector::w0(3), TOL).unwrap());
        assert!(!in_w_subspace(&MinkVector::basis(3, 3), TOL).unwrap());
        assert!(in_w_subspace(&MinkVector::w0(4), TOL).unwrap());
    }

    #[test]
    fn cylinder_membership() {
        let dim = 4;
        let r = 2.0;
        let p = MinkVector::basis(dim, 1).scale(r);
        assert!(in_cylinder(&p, r, TOL).unwrap());
        let q = p.add(&MinkVector::w0(dim).scale(5.0));
        assert!(in_cylinder(&q, r, TOL).unwrap());
        assert!(!in_cylinder(&MinkVector::basis(dim, 4).scale(r), r, TOL).unwrap());
        assert!(!in_cylinder(&p, 1.0, TOL).unwrap());
        assert!(in_cylinder(&p, r, TOL).is_ok());
        assert!(matches!(
            in_cylinder(&p, 0.0, TOL),
            Err(Error::NonPositiveRadius { .. })
        ));
    }

    #[test]
    fn vectors_must_have_ambient_dimension_two() {
        assert!(matches!(
            MinkVector::new(vec![1.0]),
            Err(Error::AmbientDimTooSmall { .. })
        ));
        assert!(matches!(MinkVector::new(vec![f64::NAN, 0.0]), Err(Error::NonFiniteInput)));
    }
}
