//! Hyperball pieces, blow-up intervals and packing densities.
//!
//! Every truncating plane of a cell carries a hyperball; the part of a
//! hyperball of height h lying above one truncating polygon has volume
//!
//! ```text
//! V(A, h) = A · (sinh 2h + 2h) / 4            (Bolyai, curvature −1)
//! ```
//!
//! where A is the polygon's area.  A packing variant assigns heights to the
//! cell's hyperballs as affine functions hᵢ(x) = baseᵢ + slopeᵢ·x of a single
//! blow-up parameter x; the density of the variant is
//!
//! ```text
//! δ(x) = Σᵢ multᵢ · V(A, hᵢ(x)) / Vol(cell).
//! ```
//!
//! The variants:
//!
//! * congruent — all hyperballs at the maximal common height h;
//! * δ₁ — the two hyperballs of one axis grown to h+x, the rest shrunk to
//!   h−x; x ∈ [0, min{h, w−h, t−h}] (octahedron) or
//!   x ∈ [0, min{2h, w, t} − h] (cube);
//! * δ₂ — one axis pair at t+x and t−x (trading through the cell centre),
//!   the rest at 2h−t∓x; empty when 2h < t;
//! * δ₃ — cube only: the two regular tetrahedron classes of vertices at
//!   h+x and h−x; x ∈ [0, min{h, s−h}].

use std::fmt;
use std::str::FromStr;

use crate::cell::{Family, TruncatedRegularCell};
use crate::Error;

/// A density functional of the cell's hyperball system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackingVariant {
    /// All hyperballs congruent at height h.
    Congruent,
    /// One axis pair grown, the others shrunk.
    Delta1,
    /// One axis pair traded through the centre (heights around t).
    Delta2,
    /// Cube only: the two tetrahedral vertex classes traded.
    Delta3,
}

impl PackingVariant {
    pub const ALL: [PackingVariant; 4] = [
        PackingVariant::Congruent,
        PackingVariant::Delta1,
        PackingVariant::Delta2,
        PackingVariant::Delta3,
    ];
}

impl fmt::Display for PackingVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PackingVariant::Congruent => "congruent",
            PackingVariant::Delta1 => "delta1",
            PackingVariant::Delta2 => "delta2",
            PackingVariant::Delta3 => "delta3",
        })
    }
}

impl FromStr for PackingVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "congruent" => Ok(PackingVariant::Congruent),
            "delta1" => Ok(PackingVariant::Delta1),
            "delta2" => Ok(PackingVariant::Delta2),
            "delta3" => Ok(PackingVariant::Delta3),
            other => Err(Error::UnknownName {
                what: "variant",
                got: other.to_string(),
            }),
        }
    }
}

/// Admissible blow-up interval [0, hi] of a variant at a given cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XInterval {
    pub lo: f64,
    pub hi: f64,
}

/// Volume of the hyperball piece of height h above a polygon of area `area`.
pub fn hyperball_piece_volume(area: f64, h: f64) -> Result<f64, Error> {
    if !(area.is_finite() && h.is_finite()) {
        return Err(Error::NonFinite {
            what: "hyperball piece volume",
        });
    }
    if area < 0.0 {
        return Err(Error::NegativeInput {
            what: "polygon area",
            value: area,
        });
    }
    if h < 0.0 {
        return Err(Error::NegativeInput {
            what: "hyperball height",
            value: h,
        });
    }
    Ok(piece(area, h))
}

/// Unchecked piece volume; heights produced by the variant tables are
/// nonnegative by construction (up to rounding dust, which the clamp kills).
fn piece(area: f64, h: f64) -> f64 {
    let h = h.max(0.0);
    area * ((2.0 * h).sinh() + 2.0 * h) / 4.0
}

/// One class of identically treated hyperballs: `multiplicity` balls at
/// height base + slope·x.
#[derive(Clone, Copy, Debug)]
struct BallClass {
    multiplicity: f64,
    base: f64,
    slope: f64,
}

/// The (multiplicity, height function) table defining a variant on a cell.
fn ball_classes(cell: &TruncatedRegularCell, variant: PackingVariant) -> Result<Vec<BallClass>, Error> {
    let n = cell.vertex_count as f64;
    let (h, t) = (cell.h, cell.t);
    let class = |multiplicity: f64, base: f64, slope: f64| BallClass {
        multiplicity,
        base,
        slope,
    };
    Ok(match (cell.family, variant) {
        (_, PackingVariant::Congruent) => vec![class(n, h, 0.0)],
        (Family::Octahedron, PackingVariant::Delta1) => {
            vec![class(2.0, h, 1.0), class(4.0, h, -1.0)]
        }
        (Family::Octahedron, PackingVariant::Delta2) => vec![
            class(1.0, t, 1.0),
            class(1.0, t, -1.0),
            class(4.0, 2.0 * h - t, -1.0),
        ],
        (Family::Cube, PackingVariant::Delta1) => {
            vec![class(2.0, h, 1.0), class(6.0, h, -1.0)]
        }
        (Family::Cube, PackingVariant::Delta2) => vec![
            class(1.0, t, 1.0),
            class(1.0, t, -1.0),
            class(3.0, 2.0 * h - t, -1.0),
            class(3.0, 2.0 * h - t, 1.0),
        ],
        (Family::Cube, PackingVariant::Delta3) => {
            vec![class(4.0, h, 1.0), class(4.0, h, -1.0)]
        }
        (Family::Octahedron, PackingVariant::Delta3) => {
            return Err(Error::VariantFamilyMismatch {
                family: cell.family,
                variant,
            })
        }
    })
}

/// Admissible blow-up interval of a variant on a cell.
///
/// The upper end keeps every grown ball inside the cell (bounds w, t, s) and
/// every shrunk height nonnegative.  A negative upper end means the variant
/// does not exist at this p, reported as [`Error::VariantAbsent`] so sweeps
/// over p can skip such points; requesting δ₃ on the octahedron is a
/// [`Error::VariantFamilyMismatch`].
pub fn x_interval(cell: &TruncatedRegularCell, variant: PackingVariant) -> Result<XInterval, Error> {
    let (h, w, t) = (cell.h, cell.w, cell.t);
    let hi = match (cell.family, variant) {
        (_, PackingVariant::Congruent) => 0.0,
        (Family::Octahedron, PackingVariant::Delta1) => h.min(w - h).min(t - h),
        (Family::Octahedron, PackingVariant::Delta2) => 2.0 * h - t,
        (Family::Cube, PackingVariant::Delta1) => (2.0 * h).min(w).min(t) - h,
        (Family::Cube, PackingVariant::Delta2) => {
            let s = cell.s.expect("cube cells carry s");
            (2.0 * h - t).min(t).min(w - t).min(s - h)
        }
        (Family::Cube, PackingVariant::Delta3) => {
            let s = cell.s.expect("cube cells carry s");
            h.min(s - h)
        }
        (Family::Octahedron, PackingVariant::Delta3) => {
            return Err(Error::VariantFamilyMismatch {
                family: cell.family,
                variant,
            })
        }
    };
    if hi < 0.0 {
        return Err(Error::VariantAbsent {
            family: cell.family,
            variant,
            p: cell.p,
        });
    }
    Ok(XInterval { lo: 0.0, hi })
}

/// A validated (cell, variant, x) combination ready for evaluation.
#[derive(Clone, Debug)]
pub struct PackingConfig<'a> {
    pub cell: &'a TruncatedRegularCell,
    pub variant: PackingVariant,
    x: f64,
    classes: Vec<BallClass>,
}

impl<'a> PackingConfig<'a> {
    /// Validates x against the variant's blow-up interval (with a 1e−12
    /// rounding slack, then clamped inside).
    pub fn new(cell: &'a TruncatedRegularCell, variant: PackingVariant, x: f64) -> Result<Self, Error> {
        let interval = x_interval(cell, variant)?;
        if !x.is_finite() {
            return Err(Error::NonFinite { what: "blow-up parameter x" });
        }
        let slack = 1e-12 * interval.hi.max(1.0);
        if x < -slack || x > interval.hi + slack {
            return Err(Error::XOutOfInterval { x, hi: interval.hi });
        }
        Ok(PackingConfig {
            cell,
            variant,
            x: x.clamp(0.0, interval.hi),
            classes: ball_classes(cell, variant)?,
        })
    }

    /// The validated blow-up parameter.
    pub fn x(&self) -> f64 {
        self.x
    }

    /// Packing density of the configuration: hyperball piece volumes per
    /// cell volume.
    pub fn density(&self) -> f64 {
        let total: f64 = self
            .classes
            .iter()
            .map(|c| c.multiplicity * piece(self.cell.face_area, c.base + c.slope * self.x))
            .sum();
        total / self.cell.volume
    }

    /// Analytic dδ/dx, using ∂V/∂h = A·(2 cosh 2h + 2)/4.
    pub fn density_x_derivative(&self) -> f64 {
        let total: f64 = self
            .classes
            .iter()
            .map(|c| {
                let h = (c.base + c.slope * self.x).max(0.0);
                c.multiplicity * c.slope * self.cell.face_area * (2.0 * (2.0 * h).cosh() + 2.0) / 4.0
            })
            .sum();
        total / self.cell.volume
    }
}
