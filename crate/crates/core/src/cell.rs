//! Truncated regular cells of the tilings {3,4,p} (octahedron) and
//! {4,3,p} (cube) for real p.
//!
//! Past the dihedral bound (p > 4 for the octahedron, p > 6 for the cube)
//! the cell vertices become outer points of the projective model and are cut
//! off by their polar planes.  With the cell centred at (1,0,0,0) and scaled
//! so the vertices sit at parameter y, the data of one cell are
//!
//! * octahedron: vertices (1,±y,0,0), (1,0,±y,0), (1,0,0,±y) with
//!   y² = (3c+1)/(c+1), c = cos(2π/p); truncating squares of area
//!   2π(p−4)/p; cosh 2h = 1/(y²−1); sinh²w = (y⁴+3)/((3−y²)(y²−1));
//! * cube: vertices (1,±y,±y,±y) with y² = c/(c+1); truncating triangles of
//!   area π(p−6)/p; cosh 2h = (1−y²)/(3y²−1);
//!   sinh²w = (3y⁴+1)/((3y²−1)(1−y²)); cosh 2s = (1+y²)/(3y²−1).
//!
//! Here h is the (half) distance between neighbouring truncating planes, w
//! the distance from a truncating plane to the non-adjacent side faces, t the
//! distance from a truncating plane to the cell centre (computed through the
//! polar projection of the centre onto the plane) and s — cube only — half
//! the distance between truncating planes of a face diagonal.  The cell
//! volume is 48 orthoscheme volumes.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::minkowski::{self, LVec4};
use crate::orthoscheme::{self, OrthoschemeAngles, SchlafliTriple};
use crate::Error;

/// The two cell families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Truncated regular octahedron cells of {3,4,p}, p > 4.
    Octahedron,
    /// Truncated regular cube cells of {4,3,p}, p > 6.
    Cube,
}

impl Family {
    /// Open lower bound of the admissible p-range.
    pub fn min_p(self) -> f64 {
        match self {
            Family::Octahedron => 4.0,
            Family::Cube => 6.0,
        }
    }

    /// Number of (truncated) vertices, i.e. of hyperballs per cell.
    pub fn vertex_count(self) -> usize {
        match self {
            Family::Octahedron => 6,
            Family::Cube => 8,
        }
    }

    /// Order of the truncating polygon's symmetry group: the hyperball piece
    /// above one characteristic triangle is the piece volume divided by this
    /// (the "piece" column of the reference tables).
    pub fn piece_divisor(self) -> f64 {
        match self {
            Family::Octahedron => 8.0,
            Family::Cube => 6.0,
        }
    }

    /// Schläfli triple of the characteristic orthoscheme.
    pub fn schlafli_triple(self, p: f64) -> Result<SchlafliTriple, Error> {
        self.validate_p(p)?;
        match self {
            Family::Octahedron => SchlafliTriple::new(p, 4.0, 3.0),
            Family::Cube => SchlafliTriple::new(p, 3.0, 4.0),
        }
    }

    /// Area of one truncating polygon by angle deficit: a square with four
    /// angles 2π/p (octahedron) or a triangle with three (cube).
    pub fn face_area(self, p: f64) -> Result<f64, Error> {
        self.validate_p(p)?;
        Ok(match self {
            Family::Octahedron => 2.0 * PI * (p - 4.0) / p,
            Family::Cube => PI * (p - 6.0) / p,
        })
    }

    fn validate_p(self, p: f64) -> Result<(), Error> {
        if p.is_finite() && p > self.min_p() {
            Ok(())
        } else {
            Err(Error::POutOfRange {
                family: self,
                p,
                min: self.min_p(),
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Octahedron => "octahedron",
            Family::Cube => "cube",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "octahedron" => Ok(Family::Octahedron),
            "cube" => Ok(Family::Cube),
            other => Err(Error::UnknownName {
                what: "family",
                got: other.to_string(),
            }),
        }
    }
}

/// Vertex-coordinate parameter y of the family at a given p.
pub fn param_y(family: Family, p: f64) -> Result<f64, Error> {
    family.validate_p(p)?;
    let c = (2.0 * PI / p).cos();
    let y2 = match family {
        Family::Octahedron => (3.0 * c + 1.0) / (c + 1.0),
        Family::Cube => c / (c + 1.0),
    };
    Ok(y2.sqrt())
}

/// A fully assembled truncated cell with its characteristic distances.
#[derive(Clone, Debug)]
pub struct TruncatedRegularCell {
    pub family: Family,
    pub p: f64,
    /// Vertex coordinate parameter.
    pub y: f64,
    /// Outer vertices of the untruncated cell; their polar planes truncate it.
    pub vertices: Vec<LVec4>,
    /// Half the distance between neighbouring truncating planes: the maximal
    /// congruent hyperball height.
    pub h: f64,
    /// Distance from a truncating plane to the non-adjacent side faces.
    pub w: f64,
    /// Distance from a truncating plane to the cell centre.
    pub t: f64,
    /// Cube only: half the distance between face-diagonal truncating planes.
    pub s: Option<f64>,
    /// Area of one truncating polygon.
    pub face_area: f64,
    /// Cell volume (48 characteristic orthoschemes).
    pub volume: f64,
    /// Number of truncated vertices.
    pub vertex_count: usize,
}

/// Builds the truncated cell of a family at parameter p.
pub fn build(family: Family, p: f64) -> Result<TruncatedRegularCell, Error> {
    let y = param_y(family, p)?;
    let y2 = y * y;

    let vertices: Vec<LVec4> = match family {
        Family::Octahedron => vec![
            LVec4::new(1.0, y, 0.0, 0.0),
            LVec4::new(1.0, -y, 0.0, 0.0),
            LVec4::new(1.0, 0.0, y, 0.0),
            LVec4::new(1.0, 0.0, -y, 0.0),
            LVec4::new(1.0, 0.0, 0.0, y),
            LVec4::new(1.0, 0.0, 0.0, -y),
        ],
        Family::Cube => {
            let mut v = Vec::with_capacity(8);
            for sx in [1.0, -1.0] {
                for sy in [1.0, -1.0] {
                    for sz in [1.0, -1.0] {
                        v.push(LVec4::new(1.0, sx * y, sy * y, sz * y));
                    }
                }
            }
            v
        }
    };

    let h = match family {
        Family::Octahedron => 0.5 * (1.0 / (y2 - 1.0)).acosh(),
        Family::Cube => 0.5 * ((1.0 - y2) / (3.0 * y2 - 1.0)).acosh(),
    };
    let w = match family {
        Family::Octahedron => ((y2 * y2 + 3.0) / ((3.0 - y2) * (y2 - 1.0))).sqrt().asinh(),
        Family::Cube => ((3.0 * y2 * y2 + 1.0) / ((3.0 * y2 - 1.0) * (1.0 - y2))).sqrt().asinh(),
    };

    // t through the projective machinery: distance from the cell centre to
    // its orthogonal projection onto a truncating plane.
    let center = LVec4::new(1.0, 0.0, 0.0, 0.0);
    let foot = minkowski::polar_projection(&center, &vertices[0])?;
    let t = minkowski::point_distance(&center, &foot)?;

    // s (cube): half the distance between the truncating planes of a face
    // diagonal, e.g. the vertices (1,y,y,y) and (1,y,−y,−y).
    let s = match family {
        Family::Octahedron => None,
        Family::Cube => {
            let a = LVec4::new(1.0, y, y, y);
            let b = LVec4::new(1.0, y, -y, -y);
            Some(minkowski::plane_distance(&a, &b)? / 2.0)
        }
    };

    let triple = family.schlafli_triple(p)?;
    let volume = 48.0 * orthoscheme::orthoscheme_volume(&OrthoschemeAngles::from_triple(&triple))?;

    Ok(TruncatedRegularCell {
        family,
        p,
        y,
        vertices,
        h,
        w,
        t,
        s,
        face_area: family.face_area(p)?,
        volume,
        vertex_count: family.vertex_count(),
    })
}
