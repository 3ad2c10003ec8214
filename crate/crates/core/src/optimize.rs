//! Deterministic maximization of packing densities.
//!
//! All optima here are one-dimensional and smooth, so a fixed-resolution
//! scan (1024 points, endpoints included) followed by golden-section
//! refinement of the best grid bracket is exact enough and — being free of
//! randomness — bit-reproducible across runs.  Boundary maxima are returned
//! as the exact endpoint, never as a point squeezed 1e−10 inside; ties
//! resolve to the smaller argument.

use crate::cell::{self, Family};
use crate::packing::{x_interval, PackingConfig, PackingVariant};
use crate::Error;

/// Grid resolution of the initial scan.
const SCAN_POINTS: usize = 1024;

/// Final golden-section bracket width.
pub const BRACKET_TOL: f64 = 1e-10;

/// Open lower family bounds are clamped to min_p + this before scanning.
const P_OPEN_CLAMP: f64 = 1e-6;

/// How the blow-up parameter is chosen when optimizing over p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XPolicy {
    /// x = 0: the congruent arrangement of the variant.
    Start,
    /// x = x_max(p): the fully blown-up arrangement.
    End,
    /// x maximizing the density at each p.
    FreeX,
}

impl std::fmt::Display for XPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            XPolicy::Start => "start",
            XPolicy::End => "end",
            XPolicy::FreeX => "free",
        })
    }
}

impl std::str::FromStr for XPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "start" => Ok(XPolicy::Start),
            "end" => Ok(XPolicy::End),
            "free" => Ok(XPolicy::FreeX),
            other => Err(Error::UnknownName {
                what: "x-policy",
                got: other.to_string(),
            }),
        }
    }
}

/// Result of a maximization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptResult {
    /// Argument of the maximum (exact endpoint for boundary maxima).
    pub arg: f64,
    /// Value at the maximum.
    pub value: f64,
    /// Final refinement bracket.
    pub bracket: (f64, f64),
    /// Bracket-width stopping tolerance that was used.
    pub tol: f64,
    /// Number of objective evaluations.
    pub evaluations: u64,
}

/// Golden-section maximization on [lo, hi]; returns (arg, value) and the
/// final bracket.  On ties the upper half is discarded, biasing toward
/// smaller arguments.
fn golden<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64, evals: &mut u64) -> (f64, f64, (f64, f64)) {
    let invphi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - invphi * (hi - lo);
    let mut d = lo + invphi * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    *evals += 2;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
        }
        *evals += 1;
    }
    let mid = (lo + hi) / 2.0;
    *evals += 1;
    (mid, f(mid), (lo, hi))
}

/// Scan-then-refine maximization on [lo, hi].  The endpoints compete as
/// exact candidates against the refined interior point.
pub(crate) fn scan_then_refine<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> OptResult {
    debug_assert!(lo <= hi);
    if hi - lo <= tol {
        return OptResult {
            arg: lo,
            value: f(lo),
            bracket: (lo, hi),
            tol,
            evaluations: 1,
        };
    }
    let n = SCAN_POINTS;
    let mut evals = 0u64;
    let mut best = (0usize, f64::NEG_INFINITY);
    let mut endpoint_values = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let grid = |i: usize| lo + (hi - lo) * i as f64 / (n - 1) as f64;
    for i in 0..n {
        // Evaluate the true endpoints, not their rounded grid images.
        let x = if i == 0 {
            lo
        } else if i == n - 1 {
            hi
        } else {
            grid(i)
        };
        let v = f(x);
        evals += 1;
        if i == 0 {
            endpoint_values.0 = v;
        }
        if i == n - 1 {
            endpoint_values.1 = v;
        }
        if v > best.1 {
            best = (i, v);
        }
    }
    let bl = if best.0 == 0 { lo } else { grid(best.0 - 1) };
    let bh = if best.0 == n - 1 { hi } else { grid(best.0 + 1) };
    let (garg, gval, bracket) = golden(&f, bl, bh, tol, &mut evals);

    // Candidates in increasing-argument order; strict improvement required,
    // so ties fall to the smaller argument.
    let mut arg = lo;
    let mut value = endpoint_values.0;
    if gval > value {
        arg = garg;
        value = gval;
    }
    if endpoint_values.1 > value {
        arg = hi;
        value = endpoint_values.1;
    }
    OptResult {
        arg,
        value,
        bracket,
        tol,
        evaluations: evals,
    }
}

/// Maximizes the variant's density over the blow-up interval at fixed p.
pub fn maximize_over_x(cell: &cell::TruncatedRegularCell, variant: PackingVariant) -> Result<OptResult, Error> {
    let interval = x_interval(cell, variant)?;
    let f = |x: f64| {
        PackingConfig::new(cell, variant, x)
            .map(|c| c.density())
            .unwrap_or(f64::NEG_INFINITY)
    };
    Ok(scan_then_refine(f, interval.lo, interval.hi, BRACKET_TOL))
}

/// Density of a (family, p, variant) point under an x-policy; None when the
/// cell or the variant does not exist there.
fn policy_density(family: Family, p: f64, variant: PackingVariant, policy: XPolicy) -> Option<f64> {
    let cell = cell::build(family, p).ok()?;
    match policy {
        XPolicy::Start => Some(PackingConfig::new(&cell, variant, 0.0).ok()?.density()),
        XPolicy::End => {
            let interval = x_interval(&cell, variant).ok()?;
            Some(PackingConfig::new(&cell, variant, interval.hi).ok()?.density())
        }
        XPolicy::FreeX => Some(maximize_over_x(&cell, variant).ok()?.value),
    }
}

/// Effective scan range of a family: open family bounds are clamped inward.
fn effective_range(family: Family, lo: f64, hi: f64) -> Result<(f64, f64), Error> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidRange { lo, hi });
    }
    let lo_eff = lo.max(family.min_p() + P_OPEN_CLAMP);
    if lo_eff >= hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    Ok((lo_eff, hi))
}

/// Maximizes the density over real p in [lo, hi] under an x-policy.
///
/// Points where the variant is absent contribute −∞ (skipped); if that
/// happens everywhere the range is rejected.
pub fn maximize_over_p(
    family: Family,
    variant: PackingVariant,
    policy: XPolicy,
    lo: f64,
    hi: f64,
) -> Result<OptResult, Error> {
    // Surface a genuine family mismatch rather than scanning −∞ everywhere.
    if family == Family::Octahedron && variant == PackingVariant::Delta3 {
        return Err(Error::VariantFamilyMismatch { family, variant });
    }
    let (lo_eff, hi_eff) = effective_range(family, lo, hi)?;
    let f = |p: f64| policy_density(family, p, variant, policy).unwrap_or(f64::NEG_INFINITY);
    let result = scan_then_refine(f, lo_eff, hi_eff, BRACKET_TOL);
    if result.value == f64::NEG_INFINITY {
        return Err(Error::VariantAbsentOnRange);
    }
    Ok(result)
}

/// Direction of a monotone run of samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A maximal monotone run `samples[start..=end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub direction: Direction,
    pub start: usize,
    pub end: usize,
}

/// Sampled density profile over p with its monotone classification.
#[derive(Clone, Debug)]
pub struct MonotoneProfile {
    /// (p, density) samples; p-points where the variant is absent are skipped.
    pub samples: Vec<(f64, f64)>,
    /// Maximal monotone segments, in order.
    pub segments: Vec<Segment>,
}

impl MonotoneProfile {
    /// Number of direction changes along the profile (0 for monotone or
    /// constant data).
    pub fn sign_changes(&self) -> usize {
        self.segments.len().saturating_sub(1)
    }

    /// Sample arguments where the direction flips.
    pub fn turning_points(&self) -> Vec<f64> {
        self.segments
            .windows(2)
            .map(|w| self.samples[w[1].start].0)
            .collect()
    }
}

/// Classifies consecutive differences into maximal monotone segments.
/// Exactly equal neighbours extend the current segment, so constant data
/// yields no segments at all.
pub fn segment_directions(samples: &[(f64, f64)]) -> Vec<Segment> {
    let mut segments: Vec<Segment> = Vec::new();
    for i in 1..samples.len() {
        let d = samples[i].1 - samples[i - 1].1;
        let dir = if d > 0.0 {
            Direction::Increasing
        } else if d < 0.0 {
            Direction::Decreasing
        } else {
            if let Some(last) = segments.last_mut() {
                last.end = i;
            }
            continue;
        };
        match segments.last_mut() {
            Some(last) if last.direction == dir => last.end = i,
            _ => segments.push(Segment {
                direction: dir,
                start: i - 1,
                end: i,
            }),
        }
    }
    segments
}

/// Samples the density over p under an x-policy and classifies monotonicity.
pub fn monotone_profile(
    family: Family,
    variant: PackingVariant,
    policy: XPolicy,
    lo: f64,
    hi: f64,
    n: usize,
) -> Result<MonotoneProfile, Error> {
    if n < 2 {
        return Err(Error::TooFewSamples { n, min: 2 });
    }
    if family == Family::Octahedron && variant == PackingVariant::Delta3 {
        return Err(Error::VariantFamilyMismatch { family, variant });
    }
    let (lo_eff, hi_eff) = effective_range(family, lo, hi)?;
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let p = lo_eff + (hi_eff - lo_eff) * i as f64 / (n - 1) as f64;
        if let Some(d) = policy_density(family, p, variant, policy) {
            samples.push((p, d));
        }
    }
    if samples.is_empty() {
        return Err(Error::VariantAbsentOnRange);
    }
    let segments = segment_directions(&samples);
    Ok(MonotoneProfile { samples, segments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::build;

    #[test]
    fn refinement_finds_an_interior_maximum() {
        let res = scan_then_refine(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10);
        assert!((res.arg - 0.3).abs() < 1e-9, "arg = {}", res.arg);
        assert!(res.value.abs() < 1e-15);
        assert!(res.evaluations >= SCAN_POINTS as u64);
        assert!(res.bracket.1 - res.bracket.0 <= 1e-10);
    }

    #[test]
    fn boundary_maxima_return_exact_endpoints() {
        let res = scan_then_refine(|x| -x, 0.25, 1.0, 1e-10);
        assert_eq!(res.arg, 0.25);
        assert_eq!(res.value, -0.25);
        let res = scan_then_refine(|x| x, 0.0, 0.75, 1e-10);
        assert_eq!(res.arg, 0.75);
        assert_eq!(res.value, 0.75);
    }

    #[test]
    fn ties_resolve_to_the_smaller_argument() {
        let res = scan_then_refine(|_| 1.0, 0.0, 1.0, 1e-10);
        assert_eq!(res.arg, 0.0);
    }

    #[test]
    fn optimization_is_deterministic() {
        let run = || maximize_over_p(Family::Cube, PackingVariant::Delta3, XPolicy::End, 6.0, 7.0).unwrap();
        let (a, b) = (run(), run());
        assert_eq!(a.arg.to_bits(), b.arg.to_bits());
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn over_x_hits_known_boundary_optima() {
        // δ₃ grows to the interval end, δ₁ peaks at x = 0 (p ≥ 7).
        let c7 = build(Family::Cube, 7.0).unwrap();
        let res = maximize_over_x(&c7, PackingVariant::Delta3).unwrap();
        let hi = x_interval(&c7, PackingVariant::Delta3).unwrap().hi;
        assert_eq!(res.arg, hi, "δ₃ maximum sits at the exact interval end");
        assert!((res.value - 0.849_313_523_077_223_52).abs() < 1e-11);

        let res = maximize_over_x(&c7, PackingVariant::Delta1).unwrap();
        assert_eq!(res.arg, 0.0, "δ₁ maximum sits at the exact start");

        let res = maximize_over_x(&c7, PackingVariant::Delta2).unwrap();
        let hi = x_interval(&c7, PackingVariant::Delta2).unwrap().hi;
        assert_eq!(res.arg, hi);
        assert!((res.value - 0.815_417_654_828_979_33).abs() < 1e-11);
    }

    #[test]
    fn congruent_interval_degenerates_cleanly() {
        let c = build(Family::Octahedron, 5.0).unwrap();
        let res = maximize_over_x(&c, PackingVariant::Congruent).unwrap();
        assert_eq!(res.arg, 0.0);
        assert!((res.value - 0.768_929_240_423_507_46).abs() < 1e-12);
    }

    #[test]
    fn over_p_reproduces_the_known_optima() {
        let res = maximize_over_p(Family::Octahedron, PackingVariant::Congruent, XPolicy::Start, 4.0, 20.0).unwrap();
        assert!((res.arg - 4.113_195_922_082_093_6).abs() < 1e-6, "p* = {}", res.arg);
        assert!((res.value - 0.831_729_940_701_165_89).abs() < 1e-11);

        let res = maximize_over_p(Family::Cube, PackingVariant::Congruent, XPolicy::Start, 6.0, 20.0).unwrap();
        assert!((res.arg - 6.339_619_570_690_093_3).abs() < 1e-6, "p* = {}", res.arg);
        assert!((res.value - 0.704_273_995_594_155_43).abs() < 1e-11);

        let res = maximize_over_p(Family::Cube, PackingVariant::Delta2, XPolicy::End, 6.0, 7.0).unwrap();
        assert!((res.arg - 6.105_630_073_390_275_8).abs() < 1e-6, "p* = {}", res.arg);
        assert!((res.value - 0.856_836_859_837_797_43).abs() < 1e-11);

        let res = maximize_over_p(Family::Cube, PackingVariant::Delta3, XPolicy::End, 6.0, 7.0).unwrap();
        assert!((res.arg - 6.263_834_775_863_846_3).abs() < 1e-6, "p* = {}", res.arg);
        assert!((res.value - 0.861_447_338_052_315_56).abs() < 1e-11);
        let cell = build(Family::Cube, res.arg).unwrap();
        let x_opt = x_interval(&cell, PackingVariant::Delta3).unwrap().hi;
        assert!((x_opt - 0.365_624_162_106_704_46).abs() < 1e-6, "x* = {x_opt}");
    }

    #[test]
    fn free_policy_matches_end_policy_where_the_end_is_optimal() {
        // δ₃'s per-p maximum is its interval end, so FreeX = End there.
        let end = maximize_over_p(Family::Cube, PackingVariant::Delta3, XPolicy::End, 6.2, 6.3).unwrap();
        let free = maximize_over_p(Family::Cube, PackingVariant::Delta3, XPolicy::FreeX, 6.2, 6.3).unwrap();
        assert!((end.value - free.value).abs() <= 1e-9, "{} vs {}", end.value, free.value);
        assert!((end.arg - free.arg).abs() <= 1e-4);
    }

    #[test]
    fn absent_variant_on_the_whole_range_is_an_error() {
        assert_eq!(
            maximize_over_p(Family::Cube, PackingVariant::Delta2, XPolicy::End, 8.5, 9.0),
            Err(Error::VariantAbsentOnRange)
        );
        assert_eq!(
            maximize_over_p(Family::Octahedron, PackingVariant::Delta3, XPolicy::End, 5.0, 6.0),
            Err(Error::VariantFamilyMismatch {
                family: Family::Octahedron,
                variant: PackingVariant::Delta3
            })
        );
    }

    #[test]
    fn invalid_ranges_are_rejected() {
        assert!(matches!(
            maximize_over_p(Family::Octahedron, PackingVariant::Congruent, XPolicy::Start, 4.0, 4.0),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            maximize_over_p(Family::Cube, PackingVariant::Congruent, XPolicy::Start, 20.0, 6.0),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn congruent_profile_has_one_turning_point() {
        let profile = monotone_profile(
            Family::Octahedron,
            PackingVariant::Congruent,
            XPolicy::Start,
            4.0,
            20.0,
            2000,
        )
        .unwrap();
        assert_eq!(profile.sign_changes(), 1, "segments: {:?}", profile.segments);
        assert_eq!(profile.segments[0].direction, Direction::Increasing);
        assert_eq!(profile.segments[1].direction, Direction::Decreasing);
        let turn = profile.turning_points()[0];
        assert!((turn - 4.113_20).abs() < 1e-2, "turning point at p = {turn}");
    }

    #[test]
    fn delta3_end_profile_turns_near_its_optimum() {
        let profile = monotone_profile(Family::Cube, PackingVariant::Delta3, XPolicy::End, 6.0, 7.0, 500).unwrap();
        assert_eq!(profile.sign_changes(), 1);
        let turn = profile.turning_points()[0];
        assert!((turn - 6.263_8).abs() < 5e-3, "turning point at p = {turn}");
    }

    #[test]
    fn constant_samples_classify_as_no_segments() {
        let samples = vec![(0.0, 1.0), (1.0, 1.0), (2.0, 1.0)];
        assert!(segment_directions(&samples).is_empty());
        let samples = vec![(0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (3.0, 1.0)];
        let segs = segment_directions(&samples);
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0], Segment { direction: Direction::Increasing, start: 0, end: 2 });
        assert_eq!(segs[1], Segment { direction: Direction::Decreasing, start: 2, end: 3 });
    }

    #[test]
    fn too_few_samples_is_an_error() {
        assert!(matches!(
            monotone_profile(Family::Cube, PackingVariant::Congruent, XPolicy::Start, 6.0, 7.0, 1),
            Err(Error::TooFewSamples { .. })
        ));
    }
}
