//! The Lobachevsky function 𝓛(x) = −∫₀ˣ ln|2 sin t| dt.
//!
//! 𝓛 is odd, π-periodic, vanishes at multiples of π/2 and attains its
//! maximum 𝓛(π/6) = 0.5074708032048268… at π/6.  It satisfies the
//! duplication identity 𝓛(2x) = 2𝓛(x) + 2𝓛(x + π/2) and is the building
//! block of every orthoscheme volume in this crate.
//!
//! After reduction to [0, π/2] (π-periodicity plus 𝓛(π − x) = −𝓛(x)) the
//! function is evaluated through the classical series
//!
//! ```text
//! 𝓛(x) = x − x·ln(2x) + Σ_{n≥1} ζ(2n)/(n(2n+1)) · x·(x/π)^{2n}
//! ```
//!
//! obtained by integrating ln(sin t / t) = −Σ ζ(2n)/n · (t/π)^{2n} termwise;
//! its ratio (x/π)² ≤ ¼ gives full double precision within ~30 terms.  The
//! even zeta values are generated once by Euler–Maclaurin summation.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::Error;

/// Number of series terms; (1/4)^30 ≈ 8.7e−19 bounds the truncation error.
const N_TERMS: usize = 30;

/// ζ(2n) for n = 1..=N_TERMS by Euler–Maclaurin summation with M = 64:
/// ζ(s) = Σ_{k<M} k^−s + M^−s/2 + M^{1−s}/(s−1) + s·M^{−s−1}/12
///        − s(s+1)(s+2)·M^{−s−3}/720 + s(s+1)(s+2)(s+3)(s+4)·M^{−s−5}/30240,
/// leaving a remainder below 2e−18 already for s = 2.
fn zeta_even(n: usize) -> f64 {
    const M: usize = 64;
    let s = (2 * n) as f64;
    let mut sum = 0.0;
    for k in 1..M {
        sum += (k as f64).powf(-s);
    }
    let m = M as f64;
    sum += m.powf(-s) / 2.0 + m.powf(1.0 - s) / (s - 1.0) + s * m.powf(-s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * m.powf(-s - 3.0) / 720.0;
    sum += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * m.powf(-s - 5.0) / 30240.0;
    sum
}

/// Series coefficients ζ(2n) / (n(2n+1)).
fn coefficients() -> &'static [f64; N_TERMS] {
    static COEFFS: OnceLock<[f64; N_TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut c = [0.0; N_TERMS];
        for (i, slot) in c.iter_mut().enumerate() {
            let n = (i + 1) as f64;
            *slot = zeta_even(i + 1) / (n * (2.0 * n + 1.0));
        }
        c
    })
}

/// Series evaluation on the reduced range x ∈ [0, π/2].
fn series(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let r = (x / PI) * (x / PI);
    let mut power = 1.0;
    let mut sum = 0.0;
    for &c in coefficients() {
        power *= r;
        let term = c * power;
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    x * (1.0 - (2.0 * x).ln() + sum)
}

/// Infallible evaluation for arguments already known to be finite.
pub(crate) fn eval(x: f64) -> f64 {
    let r = x.rem_euclid(PI);
    if r <= FRAC_PI_2 {
        series(r)
    } else {
        -series(PI - r)
    }
}

/// The Lobachevsky function 𝓛(x) for any finite real argument.
///
/// # Example
///
/// ```
/// let max = hypack_core::lobachevsky::lobachevsky(std::f64::consts::PI / 6.0).unwrap();
/// assert!((max - 0.5074708032048268).abs() < 1e-12);
/// ```
pub fn lobachevsky(x: f64) -> Result<f64, Error> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            what: "Lobachevsky function",
        });
    }
    Ok(eval(x))
}
