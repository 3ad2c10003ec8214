//! Complete orthoschemes of degree 0/1: Coxeter–Schläfli matrices,
//! truncation heights and volumes.
//!
//! A triple (p, q, r) describes the orthoscheme A₀A₁A₂A₃ with essential
//! dihedral angles α₀₁ = π/p, α₁₂ = π/q, α₂₃ = π/r through the symmetric
//! Coxeter–Schläfli matrix
//!
//! ```text
//!         ⎛     1      −cos(π/p)      0          0     ⎞
//! (cⁱʲ) = ⎜ −cos(π/p)      1      −cos(π/q)      0     ⎟
//!         ⎜     0      −cos(π/q)      1      −cos(π/r) ⎟
//!         ⎝     0          0      −cos(π/r)      1     ⎠
//! ```
//!
//! The form is hyperbolic exactly when its signature is (1, 3); the inverse
//! (hᵢⱼ) carries the vertex geometry.  For a simply truncated orthoscheme the
//! distance from the outer vertex A₃'s polar plane to the opposite face is
//!
//! ```text
//! cosh h = √( (h₂₂h₃₃ − h₂₃²) / (h₂₂h₃₃) ),
//! ```
//!
//! and the volume follows Kellerhals' Lobachevsky-function formula
//!
//! ```text
//! Vol = ¼ { 𝓛(α₀₁+θ) − 𝓛(α₀₁−θ) + 𝓛(π/2+α₁₂−θ) + 𝓛(π/2−α₁₂−θ)
//!           + 𝓛(α₂₃+θ) − 𝓛(α₂₃−θ) + 2𝓛(π/2−θ) },
//! tan θ = √(cos²α₁₂ − sin²α₀₁ sin²α₂₃) / (cos α₀₁ cos α₂₃).
//! ```

use std::f64::consts::{FRAC_PI_2, PI};

use crate::lobachevsky::eval as lob;
use crate::minkowski::QUOTIENT_CLAMP;
use crate::Error;

/// Eigenvalues with |λ| at or below this bound count as zero when the
/// signature is classified, which rejects Euclidean boundary triples such as
/// (4, 3, 4) whose determinant vanishes.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-10;

/// A Schläfli triple (p, q, r) of real entries ≥ 2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchlafliTriple {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl SchlafliTriple {
    pub fn new(p: f64, q: f64, r: f64) -> Result<Self, Error> {
        let ok = |v: f64| v.is_finite() && v >= 2.0;
        if ok(p) && ok(q) && ok(r) {
            Ok(SchlafliTriple { p, q, r })
        } else {
            Err(Error::InvalidTriple { p, q, r })
        }
    }
}

/// The essential dihedral half-angles (α₀₁, α₁₂, α₂₃) of an orthoscheme,
/// each in (0, π/2].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthoschemeAngles {
    pub a01: f64,
    pub a12: f64,
    pub a23: f64,
}

impl OrthoschemeAngles {
    pub fn new(a01: f64, a12: f64, a23: f64) -> Result<Self, Error> {
        for v in [a01, a12, a23] {
            if !(v.is_finite() && 0.0 < v && v <= FRAC_PI_2) {
                return Err(Error::InvalidAngle { value: v });
            }
        }
        Ok(OrthoschemeAngles { a01, a12, a23 })
    }

    /// Angles (π/p, π/q, π/r) of the triple's orthoscheme.
    pub fn from_triple(t: &SchlafliTriple) -> Self {
        // Entries ≥ 2 put every angle in (0, π/2].
        OrthoschemeAngles {
            a01: PI / t.p,
            a12: PI / t.q,
            a23: PI / t.r,
        }
    }
}

/// A validated Coxeter–Schläfli matrix together with its inverse.
#[derive(Clone, Debug)]
pub struct CoxeterMatrix {
    /// The form (cⁱʲ) itself.
    pub matrix: [[f64; 4]; 4],
    /// Its inverse (hᵢⱼ), computed from closed-form cofactors.
    pub inverse: [[f64; 4]; 4],
    /// det (cⁱʲ); negative for hyperbolic triples.
    pub determinant: f64,
}

/// 3×3 determinant.
fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Minor of a 4×4 matrix with row `i` and column `j` removed.
fn minor(m: &[[f64; 4]; 4], i: usize, j: usize) -> [[f64; 3]; 3] {
    let mut out = [[0.0; 3]; 3];
    let rows: Vec<usize> = (0..4).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
    for (a, &r) in rows.iter().enumerate() {
        for (b, &c) in cols.iter().enumerate() {
            out[a][b] = m[r][c];
        }
    }
    out
}

/// 4×4 determinant by cofactor expansion along the first row.
fn det4(m: &[[f64; 4]; 4]) -> f64 {
    (0..4).fold(0.0, |acc, j| {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc + sign * m[0][j] * det3(minor(m, 0, j))
    })
}

/// Number of positive roots of a polynomial with only real roots, by
/// Descartes' rule of signs (exact in the real-rooted case).  `coeffs` runs
/// from the leading coefficient down to the constant term.
fn descartes_positive(coeffs: &[f64]) -> usize {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut last = 0.0;
    let mut changes = 0;
    for &c in coeffs {
        if c.abs() <= 1e-14 * scale {
            continue;
        }
        if last != 0.0 && c.signum() != last {
            changes += 1;
        }
        last = c.signum();
    }
    changes
}

/// Eigenvalue sign pattern (negative, zero, positive) of a symmetric 4×4
/// matrix, via the characteristic polynomial λ⁴ − e₁λ³ + e₂λ² − e₃λ + e₄.
fn signature(m: &[[f64; 4]; 4]) -> (usize, usize, usize) {
    let e1 = m[0][0] + m[1][1] + m[2][2] + m[3][3];
    let mut e2 = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            e2 += m[i][i] * m[j][j] - m[i][j] * m[j][i];
        }
    }
    let mut e3 = 0.0;
    for k in 0..4 {
        e3 += det3(minor(m, k, k));
    }
    let e4 = det4(m);

    // Strip eigenvalues that vanish within tolerance: trailing coefficients
    // of the characteristic polynomial below the zero band.
    let mut coeffs = vec![1.0, -e1, e2, -e3, e4];
    let mut zero = 0;
    while coeffs.len() > 1 && coeffs.last().unwrap().abs() <= ZERO_EIGENVALUE_TOL {
        coeffs.pop();
        zero += 1;
    }
    let pos = descartes_positive(&coeffs);
    // p(−λ) flips the sign of every odd-degree coefficient.
    let flipped: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| if (coeffs.len() - 1 - i) % 2 == 1 { -c } else { c })
        .collect();
    let neg = descartes_positive(&flipped);
    (neg, zero, pos)
}

/// Builds the Coxeter–Schläfli matrix of a triple, verifies the hyperbolic
/// signature (1, 3) and inverts it through closed-form cofactors.
pub fn coxeter_matrix(t: &SchlafliTriple) -> Result<CoxeterMatrix, Error> {
    let a = -(PI / t.p).cos();
    let b = -(PI / t.q).cos();
    let c = -(PI / t.r).cos();
    let m = [
        [1.0, a, 0.0, 0.0],
        [a, 1.0, b, 0.0],
        [0.0, b, 1.0, c],
        [0.0, 0.0, c, 1.0],
    ];

    let (neg, zero, pos) = signature(&m);
    if (neg, zero, pos) != (1, 0, 3) {
        return Err(Error::NonHyperbolic {
            p: t.p,
            q: t.q,
            r: t.r,
            neg,
            zero,
            pos,
        });
    }

    let det = det4(&m);
    let mut inv = [[0.0; 4]; 4];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            // adj(m)ᵢⱼ = (−1)^{i+j} · det(minor(m, j, i))
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            *slot = sign * det3(minor(&m, j, i)) / det;
        }
    }
    Ok(CoxeterMatrix {
        matrix: m,
        inverse: inv,
        determinant: det,
    })
}

/// Truncation height of the simply truncated orthoscheme: the distance h
/// between the polar plane of the outer vertex A₃ and the opposite cell
/// plane, cosh h = √((h₂₂h₃₃ − h₂₃²)/(h₂₂h₃₃)).
///
/// The radicand is ≥ 1 exactly when the vertex is truncatable (h₂₂h₃₃ < 0);
/// anything below the rounding clamp is rejected.
pub fn truncation_height(t: &SchlafliTriple) -> Result<f64, Error> {
    let cm = coxeter_matrix(t)?;
    let h22 = cm.inverse[2][2];
    let h33 = cm.inverse[3][3];
    let h23 = cm.inverse[2][3];
    let prod = h22 * h33;
    let rad = (prod - h23 * h23) / prod;
    if rad < 1.0 - QUOTIENT_CLAMP {
        return Err(Error::InvalidRadicand {
            value: rad,
            context: "truncation height (vertex A₃ is not truncatable)",
        });
    }
    Ok(rad.max(1.0).sqrt().acosh())
}

/// Volume of the orthoscheme with the given essential angles, by Kellerhals'
/// formula.  Symmetric in α₀₁ ↔ α₂₃; absolute accuracy is better than 1e−10.
pub fn orthoscheme_volume(angles: &OrthoschemeAngles) -> Result<f64, Error> {
    let OrthoschemeAngles { a01, a12, a23 } = *angles;
    let rad = a12.cos().powi(2) - (a01.sin() * a23.sin()).powi(2);
    if rad < -1e-12 {
        return Err(Error::InvalidRadicand {
            value: rad,
            context: "tan θ of Kellerhals' formula (angles are not hyperbolic)",
        });
    }
    let theta = rad.max(0.0).sqrt().atan2(a01.cos() * a23.cos());
    let vol = 0.25
        * (lob(a01 + theta) - lob(a01 - theta)
            + lob(FRAC_PI_2 + a12 - theta)
            + lob(FRAC_PI_2 - a12 - theta)
            + lob(a23 + theta)
            - lob(a23 - theta)
            + 2.0 * lob(FRAC_PI_2 - theta));
    if vol <= 0.0 {
        return Err(Error::NonPositiveVolume { value: vol });
    }
    Ok(vol)
}
