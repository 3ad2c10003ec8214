//! Python extension module `hypack`: hyperball packing densities of
//! truncated regular octahedron ({3,4,p}) and cube ({4,3,p}) tilings of
//! hyperbolic 3-space.
//!
//! The module exposes the cell construction as a `Cell` class and the main
//! numeric operations (Lobachevsky function, orthoscheme volumes, density
//! functionals, optimizers, verification manifest) as functions.  All
//! domain errors surface as `ValueError` with the library's message text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hypack_core::cell::{self, Family};
use hypack_core::optimize::{self, XPolicy};
use hypack_core::orthoscheme::{self, OrthoschemeAngles, SchlafliTriple};
use hypack_core::packing::{self, PackingConfig, PackingVariant};
use hypack_core::verify;

fn err(e: hypack_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_family(s: &str) -> PyResult<Family> {
    s.parse().map_err(err)
}

fn parse_variant(s: &str) -> PyResult<PackingVariant> {
    s.parse().map_err(err)
}

fn parse_policy(s: &str) -> PyResult<XPolicy> {
    s.parse().map_err(err)
}

/// A truncated regular cell of the {3,4,p} or {4,3,p} tiling with its
/// characteristic distances and volume.
#[pyclass(frozen)]
struct Cell {
    inner: cell::TruncatedRegularCell,
}

#[pymethods]
impl Cell {
    /// Cell("octahedron" | "cube", p) — builds the truncated cell at p.
    #[new]
    fn new(family: &str, p: f64) -> PyResult<Self> {
        let family = parse_family(family)?;
        Ok(Self {
            inner: cell::build(family, p).map_err(err)?,
        })
    }

    #[getter]
    fn family(&self) -> String {
        self.inner.family.to_string()
    }

    #[getter]
    fn p(&self) -> f64 {
        self.inner.p
    }

    /// Maximal congruent hyperball height (half the truncating-plane gap).
    #[getter]
    fn h(&self) -> f64 {
        self.inner.h
    }

    /// Distance from a truncating plane to the non-adjacent side faces.
    #[getter]
    fn w(&self) -> f64 {
        self.inner.w
    }

    /// Distance from a truncating plane to the cell centre.
    #[getter]
    fn t(&self) -> f64 {
        self.inner.t
    }

    /// Cube only: half the face-diagonal truncating-plane gap, else None.
    #[getter]
    fn s(&self) -> Option<f64> {
        self.inner.s
    }

    #[getter]
    fn face_area(&self) -> f64 {
        self.inner.face_area
    }

    #[getter]
    fn volume(&self) -> f64 {
        self.inner.volume
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count
    }

    /// Density of the packing variant at blow-up parameter x.
    fn density(&self, variant: &str, x: f64) -> PyResult<f64> {
        let variant = parse_variant(variant)?;
        Ok(PackingConfig::new(&self.inner, variant, x)
            .map_err(err)?
            .density())
    }

    /// Admissible blow-up interval [lo, hi] of a variant at this cell.
    fn x_interval(&self, variant: &str) -> PyResult<(f64, f64)> {
        let interval = packing::x_interval(&self.inner, parse_variant(variant)?).map_err(err)?;
        Ok((interval.lo, interval.hi))
    }

    /// Maximizes the variant's density over x; returns (x*, density*).
    fn maximize_over_x(&self, variant: &str) -> PyResult<(f64, f64)> {
        let res = optimize::maximize_over_x(&self.inner, parse_variant(variant)?).map_err(err)?;
        Ok((res.arg, res.value))
    }

    fn __repr__(&self) -> String {
        format!(
            "Cell(family='{}', p={}, h={:.8}, volume={:.8})",
            self.inner.family, self.inner.p, self.inner.h, self.inner.volume
        )
    }
}

/// Lobachevsky function 𝓛(x) = −∫₀ˣ ln|2 sin t| dt.
#[pyfunction]
fn lobachevsky(x: f64) -> PyResult<f64> {
    hypack_core::lobachevsky::lobachevsky(x).map_err(err)
}

/// Volume of the complete orthoscheme with essential dihedral angles
/// (π/p, π/q, π/r), by Kellerhals' formula.
#[pyfunction]
fn orthoscheme_volume(p: f64, q: f64, r: f64) -> PyResult<f64> {
    let triple = SchlafliTriple::new(p, q, r).map_err(err)?;
    orthoscheme::orthoscheme_volume(&OrthoschemeAngles::from_triple(&triple)).map_err(err)
}

/// Truncation height of the orthoscheme of (p, q, r): the distance from the
/// outer principal vertex's polar plane to the opposite edge.
#[pyfunction]
fn truncation_height(p: f64, q: f64, r: f64) -> PyResult<f64> {
    let triple = SchlafliTriple::new(p, q, r).map_err(err)?;
    orthoscheme::truncation_height(&triple).map_err(err)
}

/// Builds the truncated cell of a family at parameter p (same as Cell(...)).
#[pyfunction]
fn build_cell(family: &str, p: f64) -> PyResult<Cell> {
    Cell::new(family, p)
}

/// Maximizes a variant's density over p in [lo, hi] under an x-policy
/// ("start", "end" or "free"); returns (p*, density*).
#[pyfunction]
fn maximize_over_p(
    family: &str,
    variant: &str,
    policy: &str,
    lo: f64,
    hi: f64,
) -> PyResult<(f64, f64)> {
    let res = optimize::maximize_over_p(
        parse_family(family)?,
        parse_variant(variant)?,
        parse_policy(policy)?,
        lo,
        hi,
    )
    .map_err(err)?;
    Ok((res.arg, res.value))
}

/// Runs the built-in verification manifest; returns a list of
/// (name, group, expected, computed, pass) tuples.
#[pyfunction]
fn run_verification() -> Vec<(String, String, f64, f64, bool)> {
    verify::run_all()
        .into_iter()
        .map(|r| {
            (
                r.name.to_string(),
                r.group.to_string(),
                r.expected,
                r.computed,
                r.pass,
            )
        })
        .collect()
}

#[pymodule]
fn hypack(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Cell>()?;
    m.add_function(wrap_pyfunction!(lobachevsky, m)?)?;
    m.add_function(wrap_pyfunction!(orthoscheme_volume, m)?)?;
    m.add_function(wrap_pyfunction!(truncation_height, m)?)?;
    m.add_function(wrap_pyfunction!(build_cell, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_over_p, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
