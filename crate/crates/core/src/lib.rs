//! Hyperball packing densities in truncated regular octahedron and cube
//! tilings of hyperbolic 3-space.
//!
//! The tilings `{3,4,p}` (octahedron) and `{4,3,p}` (cube) are regular for
//! integer `p` and extend naturally to real `p`; beyond the dihedral bound
//! (`p > 4`, resp. `p > 6`) their cells have outer vertices which get cut off
//! by the polar planes of those vertices.  Each truncating plane carries a
//! hyperball (equidistant body), and this crate computes the exact densities
//! of the resulting congruent and non-congruent packings:
//!
//! * [`minkowski`] — projective-model primitives over the Lorentzian form
//!   ⟨x,y⟩ = −x⁰y⁰ + x¹y¹ + x²y² + x³y³,
//! * [`lobachevsky`] — the Lobachevsky function 𝓛(x),
//! * [`orthoscheme`] — Coxeter–Schläfli matrices, truncation heights and
//!   orthoscheme volumes (Kellerhals' formula),
//! * [`cell`] — the truncated cells, their characteristic distances and
//!   volumes,
//! * [`packing`] — hyperball piece volumes, blow-up intervals and density
//!   functionals δ, δ₁, δ₂, δ₃,
//! * [`optimize`] — deterministic scan + golden-section maximization over
//!   the blow-up parameter x and over p, and monotonicity profiles,
//! * [`verify`] — the built-in manifest of reference values with tolerances.
//!
//! # Example
//!
//! ```
//! use hypack_core::{cell, packing, Family, PackingVariant, PackingConfig};
//!
//! // Congruent hyperball packing of the truncated octahedron tiling at p = 5.
//! let cell = cell::build(Family::Octahedron, 5.0).unwrap();
//! let config = PackingConfig::new(&cell, PackingVariant::Congruent, 0.0).unwrap();
//! assert!((config.density() - 0.76892924).abs() < 1e-8);
//! ```

pub mod cell;
pub mod lobachevsky;
pub mod minkowski;
pub mod optimize;
pub mod orthoscheme;
pub mod packing;
pub mod verify;

pub use cell::{Family, TruncatedRegularCell};
pub use minkowski::{LVec4, PointKind};
pub use optimize::{MonotoneProfile, OptResult, XPolicy};
pub use orthoscheme::{CoxeterMatrix, OrthoschemeAngles, SchlafliTriple};
pub use packing::{PackingConfig, PackingVariant, XInterval};
pub use verify::RunReport;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The zero vector represents neither a point nor a plane.
    #[error("zero vector cannot represent a projective point or plane")]
    ZeroVector,
    /// A vector of the wrong projective class was passed to an operation.
    #[error("expected {expected} vector, found {found} (⟨v,v⟩/‖v‖∞² = {norm:.3e})")]
    WrongClass {
        expected: PointKind,
        found: PointKind,
        norm: f64,
    },
    /// A cosh-distance quotient fell below 1 by more than the clamp width.
    #[error("distance quotient {value} < 1 beyond tolerance; inputs are inconsistent")]
    InvalidQuotient { value: f64 },
    /// Two planes intersect (or meet on the absolute); no distance is defined.
    #[error("planes intersect or are parallel (quotient {quotient} < 1); no distance defined")]
    IntersectingPlanes { quotient: f64 },
    /// A polar projection collapsed to the zero vector.
    #[error("polar projection degenerated to the zero vector")]
    DegenerateProjection,
    /// Non-finite input where a finite real is required.
    #[error("non-finite argument to {what}")]
    NonFinite { what: &'static str },
    /// A negative value where a nonnegative one is required.
    #[error("{what} must be nonnegative, got {value}")]
    NegativeInput { what: &'static str, value: f64 },
    /// A Schläfli symbol entry below 2.
    #[error("Schläfli symbol ({p}, {q}, {r}) needs every entry ≥ 2")]
    InvalidTriple { p: f64, q: f64, r: f64 },
    /// A dihedral half-angle outside (0, π/2].
    #[error("dihedral angle {value} outside (0, π/2]")]
    InvalidAngle { value: f64 },
    /// The Coxeter–Schläfli matrix does not have hyperbolic signature (1, 3).
    #[error(
        "({p}, {q}, {r}) is not hyperbolic: Coxeter–Schläfli signature has \
         {neg} negative, {zero} zero and {pos} positive eigenvalues"
    )]
    NonHyperbolic {
        p: f64,
        q: f64,
        r: f64,
        neg: usize,
        zero: usize,
        pos: usize,
    },
    /// A radicand left its admissible range in a closed-form expression.
    #[error("invalid radicand {value} in {context}")]
    InvalidRadicand { value: f64, context: &'static str },
    /// Kellerhals' formula produced a non-positive volume.
    #[error("orthoscheme volume {value} is not positive; the angles do not bound a hyperbolic orthoscheme")]
    NonPositiveVolume { value: f64 },
    /// p outside the admissible range of the cell family.
    #[error("p outside admissible range (p > {min} required)")]
    POutOfRange { family: Family, p: f64, min: f64 },
    /// The requested variant does not exist for this family.
    #[error("variant {variant} is not defined for the {family} family")]
    VariantFamilyMismatch {
        family: Family,
        variant: PackingVariant,
    },
    /// The blow-up interval of the variant is empty at this p.
    #[error("variant {variant} absent at p = {p}: empty blow-up interval for the {family} family")]
    VariantAbsent {
        family: Family,
        variant: PackingVariant,
        p: f64,
    },
    /// A blow-up parameter outside the admissible interval.
    #[error("x = {x} outside the admissible interval [0, {hi}]")]
    XOutOfInterval { x: f64, hi: f64 },
    /// No point of the scanned p-range admits the variant.
    #[error("variant absent on range")]
    VariantAbsentOnRange,
    /// An empty or inverted parameter range.
    #[error("invalid range {lo}:{hi}")]
    InvalidRange { lo: f64, hi: f64 },
    /// Too few samples for a scan or profile.
    #[error("need at least {min} samples, got {n}")]
    TooFewSamples { n: usize, min: usize },
    /// An unrecognised name for an enumerated quantity.
    #[error("unknown {what}: {got}")]
    UnknownName { what: &'static str, got: String },
}
