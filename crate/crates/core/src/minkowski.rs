//! Primitives of the projective (Beltrami–Cayley–Klein) model of H³.
//!
//! Points and planes live in the Lorentzian vector space E^{1,3} with the
//! bilinear form
//!
//! ```text
//! ⟨x, y⟩ = −x⁰y⁰ + x¹y¹ + x²y² + x³y³        (signature −, +, +, +)
//! ```
//!
//! A nonzero vector represents a proper point of H³ when ⟨x,x⟩ < 0, a point
//! of the absolute when ⟨x,x⟩ = 0 and an outer point when ⟨x,x⟩ > 0.  A plane
//! is stored through its polar vector `b` (an outer vector), the plane being
//! pol(b) = {y : ⟨b,y⟩ = 0}.  Vectors are kept unnormalised; every operation
//! normalises internally, so all results are invariant under independent
//! nonzero rescaling of each argument.

use std::fmt;

use crate::Error;

/// Relative tolerance used by [`classify`]: a vector counts as lying on the
/// absolute when |⟨v,v⟩| ≤ tol · ‖v‖∞².
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Width of the clamp applied to cosh-distance quotients: values in
/// [1 − QUOTIENT_CLAMP, 1] are rounded up to 1 (distance 0), anything lower
/// is rejected as inconsistent input.
pub const QUOTIENT_CLAMP: f64 = 1e-9;

/// Homogeneous coordinate vector (x⁰, x¹, x², x³) in E^{1,3}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LVec4(pub [f64; 4]);

impl LVec4 {
    /// Builds the vector (x0, x1, x2, x3).
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        LVec4([x0, x1, x2, x3])
    }

    /// Componentwise rescaling; projectively the same point or plane.
    pub fn scale(self, s: f64) -> Self {
        LVec4([s * self.0[0], s * self.0[1], s * self.0[2], s * self.0[3]])
    }

    /// Largest absolute component, the ‖·‖∞ used for normalisation.
    fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

/// Projective class of a vector with respect to the absolute quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    /// ⟨v,v⟩ < 0: a proper point of H³.
    Inner,
    /// ⟨v,v⟩ = 0: a point of the absolute.
    Boundary,
    /// ⟨v,v⟩ > 0: an outer point, polar to a proper plane.
    Outer,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Inner => "inner",
            PointKind::Boundary => "boundary",
            PointKind::Outer => "outer",
        })
    }
}

/// The Lorentzian bilinear form ⟨x, y⟩ = −x⁰y⁰ + x¹y¹ + x²y² + x³y³.
pub fn bilinear(x: &LVec4, y: &LVec4) -> f64 {
    -x.0[0] * y.0[0] + x.0[1] * y.0[1] + x.0[2] * y.0[2] + x.0[3] * y.0[3]
}

/// Classifies a vector as inner, boundary or outer.
///
/// The sign test runs on the scale-free quantity ⟨v,v⟩/‖v‖∞², so the answer
/// does not depend on the homogeneous representative.  `tol` is the width of
/// the boundary band; [`CLASSIFY_TOL`] is the default used internally.
pub fn classify(v: &LVec4, tol: f64) -> Result<PointKind, Error> {
    let m = v.max_abs();
    if m == 0.0 || !m.is_finite() {
        return Err(Error::ZeroVector);
    }
    let scaled = bilinear(v, v) / (m * m);
    Ok(if scaled.abs() <= tol {
        PointKind::Boundary
    } else if scaled < 0.0 {
        PointKind::Inner
    } else {
        PointKind::Outer
    })
}

/// Checks that `v` has the expected projective class.
fn require(v: &LVec4, expected: PointKind) -> Result<(), Error> {
    let found = classify(v, CLASSIFY_TOL)?;
    if found != expected {
        let m = v.max_abs();
        return Err(Error::WrongClass {
            expected,
            found,
            norm: bilinear(v, v) / (m * m),
        });
    }
    Ok(())
}

/// Hyperbolic distance between two proper points,
/// cosh d = |⟨p,q⟩| / √(⟨p,p⟩⟨q,q⟩).
///
/// Both arguments must be inner vectors.  The quotient is ≥ 1 for any pair of
/// proper points (reverse Cauchy–Schwarz); values inside the rounding clamp
/// are flattened to distance 0 and anything below is rejected.
pub fn point_distance(p: &LVec4, q: &LVec4) -> Result<f64, Error> {
    require(p, PointKind::Inner)?;
    require(q, PointKind::Inner)?;
    let quot = bilinear(p, q).abs() / (bilinear(p, p) * bilinear(q, q)).sqrt();
    if quot < 1.0 - QUOTIENT_CLAMP {
        return Err(Error::InvalidQuotient { value: quot });
    }
    Ok(quot.max(1.0).acosh())
}

/// Distance from a proper point to a plane given by its polar vector,
/// sinh d = |⟨p,b⟩| / √(−⟨p,p⟩⟨b,b⟩).
pub fn point_plane_distance(p: &LVec4, b: &LVec4) -> Result<f64, Error> {
    require(p, PointKind::Inner)?;
    require(b, PointKind::Outer)?;
    let quot = bilinear(p, b).abs() / (-bilinear(p, p) * bilinear(b, b)).sqrt();
    Ok(quot.asinh())
}

/// Distance between two disjoint planes given by their polar vectors,
/// cosh d = |⟨a,b⟩| / √(⟨a,a⟩⟨b,b⟩).
///
/// A quotient below 1 means the planes intersect in H³ or meet on the
/// absolute; that case carries no distance and is reported distinctly.
pub fn plane_distance(a: &LVec4, b: &LVec4) -> Result<f64, Error> {
    require(a, PointKind::Outer)?;
    require(b, PointKind::Outer)?;
    let quot = bilinear(a, b).abs() / (bilinear(a, a) * bilinear(b, b)).sqrt();
    if quot < 1.0 - QUOTIENT_CLAMP {
        return Err(Error::IntersectingPlanes { quotient: quot });
    }
    Ok(quot.max(1.0).acosh())
}

/// Orthogonal projection of a proper point onto a plane,
/// q = p·⟨b,b⟩ − b·⟨p,b⟩.
///
/// The foot q satisfies ⟨q,b⟩ = 0 identically and is always a proper point;
/// together with [`point_distance`] it decomposes [`point_plane_distance`].
pub fn polar_projection(p: &LVec4, b: &LVec4) -> Result<LVec4, Error> {
    require(p, PointKind::Inner)?;
    require(b, PointKind::Outer)?;
    let bb = bilinear(b, b);
    let pb = bilinear(p, b);
    let q = LVec4([
        p.0[0] * bb - b.0[0] * pb,
        p.0[1] * bb - b.0[1] * pb,
        p.0[2] * bb - b.0[2] * pb,
        p.0[3] * bb - b.0[3] * pb,
    ]);
    if q.max_abs() == 0.0 {
        return Err(Error::DegenerateProjection);
    }
    Ok(q)
}
