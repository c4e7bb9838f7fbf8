//! The isometry Lie algebra of Minkowski space and its group: matrices of
//! `so(n,1)`, elements of `O(n,1)` with component tracking, the semidirect
//! sum `iso(M^{n+1}) = so(n,1) + M^{n+1}`, brackets, adjoints, exponentials,
//! and numerically validated subalgebras.
//!
//! Group conventions (semidirect product `O(n,1) x M^{n+1}`):
//! * composition `(x,u)(y,v) = (xy, u + xv)`,
//! * inverse `(x,u)^{-1} = (x^{-1}, -x^{-1}u)`,
//! * action on points `p -> xp + u`.
//!
//! Algebra conventions:
//! * bracket `[X+u, Y+v] = (XY - YX) + (Xv - Yu)`,
//! * adjoint `Ad((x,u))(Y+v) = xYx^{-1} + (xv - (xYx^{-1})u)`.

use alloc::vec::Vec;

use crate::geometry::MinkVector;
use crate::linalg::{self, Mat};
use crate::Error;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Construction-time residual allowed on the defining matrix identities.
const STRUCT_TOL: f64 = 1e-9;

/// `J m^T J` for `J = diag(1,...,1,-1)`: entry `(i,j)` becomes
/// `s_i s_j m_{ji}` with `s` the metric signs. For a Lorentz matrix this is
/// its exact inverse.
fn j_transpose_j(m: &Mat) -> Mat {
    let d = m.rows();
    let mut out = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let s = if (i == d - 1) != (j == d - 1) { -1.0 } else { 1.0 };
            out[(i, j)] = s * m[(j, i)];
        }
    }
    out
}

/// Determinant by LU elimination with partial pivoting; the matrices here
/// are at most 5x5.
fn det(m: &Mat) -> f64 {
    let n = m.rows();
    let mut a = m.clone();
    let mut d = 1.0;
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if a[(r, col)].abs() > a[(piv, col)].abs() {
                piv = r;
            }
        }
        if a[(piv, col)].abs() < 1e-300 {
            return 0.0;
        }
        if piv != col {
            for j in 0..n {
                let t = a[(col, j)];
                a[(col, j)] = a[(piv, j)];
                a[(piv, j)] = t;
            }
            d = -d;
        }
        d *= a[(col, col)];
        for r in (col + 1)..n {
            let f = a[(r, col)] / a[(col, col)];
            for j in col..n {
                a[(r, j)] -= f * a[(col, j)];
            }
        }
    }
    d
}

/// Element of the Lorentz Lie algebra `so(n,1)`: block form
/// `[[B, b], [b^T, 0]]` with `B` skew, equivalently `J X^T J = -X`.
#[derive(Clone, Debug, PartialEq)]
pub struct SoMatrix {
    m: Mat,
}

impl SoMatrix {
    /// Validates the defining identity `J X^T J = -X` (relative residual).
    pub fn new(m: Mat) -> Result<Self, Error> {
        if m.rows() != m.cols() || m.rows() < 2 {
            return Err(Error::AmbientDimTooSmall { found: m.rows() });
        }
        if !m.is_finite() {
            return Err(Error::NonFiniteInput);
        }
        let res = j_transpose_j(&m).add(&m).max_abs();
        if res > STRUCT_TOL * (1.0 + m.max_abs()) {
            return Err(Error::NotSoMatrix { residual: res });
        }
        Ok(SoMatrix { m })
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self, Error> {
        SoMatrix::new(Mat::from_rows(rows))
    }

    pub fn zero(dim: usize) -> Self {
        SoMatrix { m: Mat::zeros(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn scale(&self, s: f64) -> Self {
        SoMatrix { m: self.m.scale(s) }
    }

    pub fn add(&self, other: &Self) -> Self {
        SoMatrix { m: self.m.add(&other.m) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SoMatrix { m: self.m.sub(&other.m) }
    }

    pub fn max_abs(&self) -> f64 {
        self.m.max_abs()
    }

    pub fn apply(&self, v: &MinkVector) -> MinkVector {
        MinkVector::new(self.m.mul_vec(v.coords())).expect("dimension preserved")
    }

    /// Commutator `XY - YX`; closed in `so(n,1)`.
    pub fn commutator(&self, other: &Self) -> Self {
        SoMatrix { m: self.m.mul(&other.m).sub(&other.m.mul(&self.m)) }
    }
}

/// Cartan involution `theta(X) = -X^T`, an automorphism of `so(n,1)` fixing
/// the rotation part and negating the boost part.
pub fn cartan_involution(x: &SoMatrix) -> SoMatrix {
    SoMatrix { m: x.mat().transpose().scale(-1.0) }
}

/// Element of the full Lorentz group `O(n,1)` (`x^T J x = J`), with its
/// connected component queryable. The restricted component `SO^0(n,1)` is
/// `det x > 0` and lower-right entry `> 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LorentzMatrix {
    m: Mat,
}

impl LorentzMatrix {
    pub fn new(m: Mat) -> Result<Self, Error> {
        if m.rows() != m.cols() || m.rows() < 2 {
            return Err(Error::AmbientDimTooSmall { found: m.rows() });
        }
        if !m.is_finite() {
            return Err(Error::NonFiniteInput);
        }
        let d = m.rows();
        // x^T J x - J, computed as (J x^T J) x - I scaled back by J.
        let prod = j_transpose_j(&m).mul(&m);
        let res = prod.sub(&Mat::identity(d)).max_abs();
        if res > STRUCT_TOL * (1.0 + m.max_abs() * m.max_abs()) {
            return Err(Error::NotLorentzMatrix { residual: res });
        }
        Ok(LorentzMatrix { m })
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self, Error> {
        LorentzMatrix::new(Mat::from_rows(rows))
    }

    pub fn identity(dim: usize) -> Self {
        LorentzMatrix { m: Mat::identity(dim) }
    }

    pub(crate) fn trusted(m: Mat) -> Self {
        LorentzMatrix { m }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn apply(&self, v: &MinkVector) -> MinkVector {
        MinkVector::new(self.m.mul_vec(v.coords())).expect("dimension preserved")
    }

    pub fn compose(&self, other: &Self) -> Self {
        LorentzMatrix { m: self.m.mul(&other.m) }
    }

    /// Exact inverse `J x^T J`.
    pub fn inverse(&self) -> Self {
        LorentzMatrix { m: j_transpose_j(&self.m) }
    }

    /// Preserves space orientation combined with time orientation
    /// (`det = +1`).
    pub fn is_proper(&self) -> bool {
        det(&self.m) > 0.0
    }

    /// Preserves time orientation (lower-right entry `>= 1`).
    pub fn is_orthochronous(&self) -> bool {
        let d = self.dim();
        self.m[(d - 1, d - 1)] > 0.0
    }

    /// Member of the identity component `SO^0(n,1)`.
    pub fn is_restricted(&self) -> bool {
        self.is_proper() && self.is_orthochronous()
    }

    /// Residual of the defining identity; used to detect corrupted data
    /// flowing in through long computation chains.
    pub fn lorentz_residual(&self) -> f64 {
        let d = self.dim();
        j_transpose_j(&self.m).mul(&self.m).sub(&Mat::identity(d)).max_abs()
    }
}

/// Element `X + v` of `iso(M^{n+1}) = so(n,1) + M^{n+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement {
    pub linear: SoMatrix,
    pub trans: MinkVector,
}

impl LieElement {
    pub fn new(linear: SoMatrix, trans: MinkVector) -> Result<Self, Error> {
        if linear.dim() != trans.dim() {
            return Err(Error::DimensionMismatch { expected: linear.dim(), found: trans.dim() });
        }
        Ok(LieElement { linear, trans })
    }

    pub fn from_linear(linear: SoMatrix) -> Self {
        let d = linear.dim();
        LieElement { linear, trans: MinkVector::zero(d) }
    }

    pub fn from_translation(trans: MinkVector) -> Self {
        let d = trans.dim();
        LieElement { linear: SoMatrix::zero(d), trans }
    }

    pub fn ambient_dim(&self) -> usize {
        self.trans.dim()
    }

    pub fn scale(&self, s: f64) -> Self {
        LieElement { linear: self.linear.scale(s), trans: self.trans.scale(s) }
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement { linear: self.linear.add(&other.linear), trans: self.trans.add(&other.trans) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        LieElement { linear: self.linear.sub(&other.linear), trans: self.trans.sub(&other.trans) }
    }

    pub fn max_abs(&self) -> f64 {
        self.linear.max_abs().max(self.trans.max_abs())
    }

    /// Flattens to `[X row-major..., v...]`; the Euclidean inner product on
    /// this vector is the reference inner product
    /// `trace(X^T Y) + u . v` used for canonicalization.
    pub fn flatten(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.linear.mat().data().len() + self.trans.dim());
        out.extend_from_slice(self.linear.mat().data());
        out.extend_from_slice(self.trans.coords());
        out
    }

    /// Inverse of `flatten`.
    pub fn unflatten(dim: usize, flat: &[f64]) -> Result<Self, Error> {
        let d2 = dim * dim;
        if flat.len() != d2 + dim {
            return Err(Error::DimensionMismatch { expected: d2 + dim, found: flat.len() });
        }
        let linear = SoMatrix::new(Mat::from_vec(dim, dim, flat[..d2].to_vec()))?;
        let trans = MinkVector::new(flat[d2..].to_vec())?;
        LieElement::new(linear, trans)
    }

    /// Value of the induced vector field at `p`: `Xp + v`.
    pub fn field_at(&self, p: &MinkVector) -> MinkVector {
        self.linear.apply(p).add(&self.trans)
    }
}

/// Lie bracket `[X+u, Y+v] = (XY - YX) + (Xv - Yu)`.
pub fn bracket(a: &LieElement, b: &LieElement) -> Result<LieElement, Error> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim(), found: b.ambient_dim() });
    }
    let linear = a.linear.commutator(&b.linear);
    let trans = a.linear.apply(&b.trans).sub(&b.linear.apply(&a.trans));
    Ok(LieElement { linear, trans })
}

/// Isometry `(x, u)` of `M^{n+1}`, acting as `p -> xp + u`.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoElement {
    linear: LorentzMatrix,
    trans: MinkVector,
}

impl IsoElement {
    pub fn new(linear: LorentzMatrix, trans: MinkVector) -> Result<Self, Error> {
        if linear.dim() != trans.dim() {
            return Err(Error::DimensionMismatch { expected: linear.dim(), found: trans.dim() });
        }
        Ok(IsoElement { linear, trans })
    }

    pub fn identity(dim: usize) -> Self {
        IsoElement { linear: LorentzMatrix::identity(dim), trans: MinkVector::zero(dim) }
    }

    pub fn from_linear(linear: LorentzMatrix) -> Self {
        let d = linear.dim();
        IsoElement { linear, trans: MinkVector::zero(d) }
    }

    pub fn from_translation(trans: MinkVector) -> Self {
        let d = trans.dim();
        IsoElement { linear: LorentzMatrix::identity(d), trans }
    }

    pub fn ambient_dim(&self) -> usize {
        self.trans.dim()
    }

    pub fn linear(&self) -> &LorentzMatrix {
        &self.linear
    }

    pub fn trans(&self) -> &MinkVector {
        &self.trans
    }

    pub fn apply(&self, p: &MinkVector) -> MinkVector {
        self.linear.apply(p).add(&self.trans)
    }

    /// Semidirect composition `(x,u)(y,v) = (xy, u + xv)`.
    pub fn compose(&self, other: &Self) -> Self {
        IsoElement {
            linear: self.linear.compose(&other.linear),
            trans: self.trans.add(&self.linear.apply(&other.trans)),
        }
    }

    /// `(x,u)^{-1} = (x^{-1}, -x^{-1} u)`.
    pub fn inverse(&self) -> Self {
        let xinv = self.linear.inverse();
        let t = xinv.apply(&self.trans).scale(-1.0);
        IsoElement { linear: xinv, trans: t }
    }

    /// Lies in the identity component of the isometry group.
    pub fn is_restricted(&self) -> bool {
        self.linear.is_restricted()
    }

    /// Adjoint action on the Lie algebra:
    /// `Ad((x,u))(Y+v) = xYx^{-1} + (xv - (xYx^{-1})u)`.
    /// Errors when the linear part has drifted off the group (corrupted
    /// input).
    pub fn adjoint(&self, y: &LieElement) -> Result<LieElement, Error> {
        if y.ambient_dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: y.ambient_dim(),
            });
        }
        let res = self.linear.lorentz_residual();
        if res > 1e-6 * (1.0 + self.linear.mat().max_abs()) {
            return Err(Error::CorruptedIsometry { residual: res });
        }
        let conj = self
            .linear
            .mat()
            .mul(y.linear.mat())
            .mul(self.linear.inverse().mat());
        let new_linear = SoMatrix { m: conj.clone() };
        let xv = self.linear.apply(&y.trans);
        let shift = MinkVector::new(conj.mul_vec(self.trans.coords())).expect("square");
        Ok(LieElement { linear: new_linear, trans: xv.sub(&shift) })
    }
}

impl core::fmt::Display for IsoElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let d = self.ambient_dim();
        write!(f, "linear rows [")?;
        for i in 0..d {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..d {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.linear.entry(i, j))?;
            }
        }
        write!(f, "], translation {}", self.trans)
    }
}

/// One-parameter subgroup through `y`: the exponential of `t * y`. With
/// `A = tX` and `w = tv` the affine exponential factors as
/// `(e^A, phi(A) w)` where `phi(z) = (e^z - 1)/z`, so both series are run
/// on the linear block alone and doubled in lockstep via
/// `phi(2A) = (e^A + I) phi(A) / 2`. Keeping the translation magnitude out
/// of the scaling norm keeps the squaring count, and with it the rounding
/// amplification on large drift translations, low.
pub fn exp_iso(y: &LieElement, t: f64) -> IsoElement {
    let d = y.ambient_dim();
    let mut a = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            a[(i, j)] = t * y.linear.entry(i, j);
        }
    }
    let norm = a.norm_inf();
    let mut squarings = 0u32;
    if norm > 1.0 {
        squarings = (norm.log2().ceil() as u32).min(64);
        a = a.scale(0.5f64.powi(squarings as i32));
    }
    let mut e = Mat::identity(d);
    let mut p = Mat::identity(d);
    let mut term = Mat::identity(d);
    for k in 1..=30u32 {
        term = term.mul(&a).scale(1.0 / k as f64);
        e = e.add(&term);
        p = p.add(&term.scale(1.0 / (k + 1) as f64));
        if term.max_abs() <= 1e-20 * e.max_abs() {
            break;
        }
    }
    for _ in 0..squarings {
        p = e.mul(&p).add(&p).scale(0.5);
        e = e.mul(&e);
    }
    let v: alloc::vec::Vec<f64> = (0..d)
        .map(|i| (0..d).map(|j| p[(i, j)] * t * y.trans.get(j)).sum())
        .collect();
    IsoElement {
        linear: LorentzMatrix::trusted(e),
        trans: MinkVector::new(v).expect("finite"),
    }
}

/// Block-form generators of the Iwasawa-style decomposition of `so(n,1)`:
/// rotations `k`, the distinguished boost `a`, the abelian nilpotent part
/// `n` (one generator per root-space coordinate), and the rotations `k0`
/// fixing the reference null direction.
#[derive(Clone, Debug)]
pub struct IwasawaBasis {
    pub k_gens: Vec<LieElement>,
    pub k0_gens: Vec<LieElement>,
    pub a_gen: LieElement,
    pub n_gens: Vec<LieElement>,
}

/// Generators for `so(n,1)` acting on `M^{n+1}` (so `n >= 1`; ambient
/// dimension `n+1`). For `n = 2` these are exactly the reference matrices
///
/// ```text
/// Yk = [[0,-1,0],[1,0,0],[0,0,0]]
/// Ya = [[0,0,0],[0,0,-1],[0,-1,0]]
/// Yn = [[0,1,1],[-1,0,0],[1,0,0]]
/// ```
pub fn iwasawa_generators(n: usize) -> Result<IwasawaBasis, Error> {
    if n < 1 {
        return Err(Error::AmbientDimTooSmall { found: n + 1 });
    }
    let d = n + 1;
    let skew = |j: usize, i: usize| -> LieElement {
        // E_{ji} - E_{ij} with 1-indexed (i < j): entry (j,i) = 1, (i,j) = -1.
        let mut m = Mat::zeros(d, d);
        m[(j - 1, i - 1)] = 1.0;
        m[(i - 1, j - 1)] = -1.0;
        LieElement::from_linear(SoMatrix { m })
    };
    let mut k_gens = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            k_gens.push(skew(j, i));
        }
    }
    let mut k0_gens = Vec::new();
    for i in 1..n {
        for j in (i + 1)..n {
            k0_gens.push(skew(j, i));
        }
    }
    let mut a = Mat::zeros(d, d);
    a[(n - 1, n)] = -1.0;
    a[(n, n - 1)] = -1.0;
    let a_gen = LieElement::from_linear(SoMatrix { m: a });
    let mut n_gens = Vec::new();
    for j in 1..n {
        let mut m = Mat::zeros(d, d);
        m[(j - 1, n - 1)] = 1.0;
        m[(j - 1, n)] = 1.0;
        m[(n - 1, j - 1)] = -1.0;
        m[(n, j - 1)] = 1.0;
        n_gens.push(LieElement::from_linear(SoMatrix { m }));
    }
    Ok(IwasawaBasis { k_gens, k0_gens, a_gen, n_gens })
}

/// Finite-dimensional subalgebra candidate of `iso(M^{n+1})`, held as an
/// explicit basis. Construction checks dimensional coherence and numerical
/// independence; closure under the bracket is a separate, reported check so
/// that classification can answer "not a subalgebra" instead of failing.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    ambient_dim: usize,
    basis: Vec<LieElement>,
}

impl Subalgebra {
    pub fn new(ambient_dim: usize, basis: Vec<LieElement>) -> Result<Self, Error> {
        if basis.is_empty() {
            return Err(Error::EmptyBasis);
        }
        if ambient_dim < 2 {
            return Err(Error::AmbientDimTooSmall { found: ambient_dim });
        }
        for b in &basis {
            if b.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: b.ambient_dim(),
                });
            }
        }
        let flats: Vec<Vec<f64>> = basis.iter().map(|b| b.flatten()).collect();
        let ortho = linalg::orthonormalize(&flats, 1e-9);
        if ortho.len() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Subalgebra { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LieElement] {
        &self.basis
    }

    /// Orthonormal basis with respect to the reference inner product
    /// `trace(X^T Y) + u . v` (Euclidean on flattened elements).
    pub fn canonical_basis(&self) -> Vec<LieElement> {
        let flats: Vec<Vec<f64>> = self.basis.iter().map(|b| b.flatten()).collect();
        linalg::orthonormalize(&flats, 1e-9)
            .iter()
            .map(|f| LieElement::unflatten(self.ambient_dim, f).expect("orthonormalized element"))
            .collect()
    }

    /// Checks closure under the bracket: every pairwise bracket must lie in
    /// the span of the basis with relative residual at most `tol`.
    pub fn closure_check(&self, tol: f64) -> bool {
        self.closure_residual() <= tol
    }

    /// Largest relative distance of a pairwise bracket from the span.
    pub fn closure_residual(&self) -> f64 {
        let flats: Vec<Vec<f64>> = self.basis.iter().map(|b| b.flatten()).collect();
        let ortho = linalg::orthonormalize(&flats, 1e-9);
        let mut worst = 0.0f64;
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let w = bracket(&self.basis[i], &self.basis[j]).expect("same ambient dim");
                let flat = w.flatten();
                let res = linalg::residual_to_span(&flat, &ortho);
                let rel = res / (1.0 + linalg::norm2(&flat));
                worst = worst.max(rel);
            }
        }
        worst
    }

    /// The translation part `h` intersected with `M^{n+1}`: kernel of the
    /// projection onto linear parts, found through a singular-value
    /// threshold of `tol * sigma_max`. Returns an orthonormal basis.
    pub fn translation_part(&self, tol: f64) -> Vec<MinkVector> {
        let d = self.ambient_dim;
        let m = self.basis.len();
        let mut a = Mat::zeros(d * d, m);
        for (j, b) in self.basis.iter().enumerate() {
            a.set_column(j, b.linear.mat().data());
        }
        let kernel = linalg::null_space(&a, tol);
        let mut translations: Vec<Vec<f64>> = Vec::new();
        for c in kernel {
            let mut t = alloc::vec![0.0; d];
            for (j, b) in self.basis.iter().enumerate() {
                for (ti, bi) in t.iter_mut().zip(b.trans.coords()) {
                    *ti += c[j] * bi;
                }
            }
            translations.push(t);
        }
        linalg::orthonormalize(&translations, tol)
            .into_iter()
            .map(|t| MinkVector::new(t).expect("ambient dim"))
            .collect()
    }

    /// Image of the projection onto `so(n,1)` as an orthonormal basis.
    pub fn pi1(&self, tol: f64) -> Vec<SoMatrix> {
        let flats: Vec<Vec<f64>> = self
            .basis
            .iter()
            .map(|b| b.linear.mat().data().to_vec())
            .collect();
        let d = self.ambient_dim;
        linalg::orthonormalize(&flats, tol)
            .into_iter()
            .map(|f| SoMatrix { m: Mat::from_vec(d, d, f) })
            .collect()
    }

    /// Applies `Ad(g)` to every basis element.
    pub fn conjugate(&self, g: &IsoElement) -> Result<Subalgebra, Error> {
        let basis = self
            .basis
            .iter()
            .map(|b| g.adjoint(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subalgebra { ambient_dim: self.ambient_dim, basis })
    }

    /// Finds the basis combination whose linear part best matches `target`,
    /// returning the combined element and the fit residual.
    pub fn element_with_linear_part(&self, target: &SoMatrix) -> (LieElement, f64) {
        let columns: Vec<Vec<f64>> = self
            .basis
            .iter()
            .map(|b| b.linear.mat().data().to_vec())
            .collect();
        let (coeffs, res) = linalg::least_squares(&columns, target.mat().data());
        let mut out = LieElement::from_linear(SoMatrix::zero(self.ambient_dim));
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out = out.add(&b.scale(*c));
        }
        (out, res)
    }
}
