//! Built-in verification manifest.
//!
//! Every reference number this library is expected to reproduce — table
//! rows, characteristic distances of the worked cases, interval endpoints,
//! named densities, optimum locations and the global maxima — is stored
//! here as data together with a descriptive note and a tolerance.
//! Tolerances follow the precision of the reference values: 1e−6 for
//! 8-digit table entries, 1e−4 for 5-digit values and optimum locations,
//! wider only where a check compares against a one-sided limit.
//!
//! [`run_all`] recomputes each quantity from scratch and reports agreement;
//! nothing here feeds back into the computation itself.

use crate::cell::{self, Family};
use crate::minkowski::{classify, PointKind, CLASSIFY_TOL};
use crate::optimize::{maximize_over_x, maximize_over_p, monotone_profile, XPolicy};
use crate::packing::{hyperball_piece_volume, x_interval, PackingConfig, PackingVariant};
use crate::Error;

/// Scalar cell quantity addressed by a manifest entry.
#[derive(Clone, Copy, Debug)]
enum Metric {
    H,
    TwoH,
    W,
    T,
    /// s(p) − h(p), the δ₃ blow-up limit of the cube family.
    SMinusH,
    /// w(p) − 2h(p); zero exactly when the octagon-face distance equals the
    /// base-plane distance.
    WMinus2H,
    /// Cell volume divided by 48 (the orthoscheme count).
    Vol48,
    /// Volume of one full congruent hyperball piece inside the cell.
    Piece,
    /// Piece volume divided by the per-ball face multiplicity (8 or 6).
    PieceOverM,
}

/// Which endpoint of the blow-up interval a density is evaluated at.
#[derive(Clone, Copy, Debug)]
enum XAt {
    Start,
    End,
}

/// Component of a one-dimensional optimization result.
#[derive(Clone, Copy, Debug)]
enum Part {
    Arg,
    Value,
}

/// Component of a maximization over p.
#[derive(Clone, Copy, Debug)]
enum PPart {
    Arg,
    Value,
    /// The blow-up interval end evaluated at the optimal p.
    XAtArg,
}

/// Component of a monotonicity profile.
#[derive(Clone, Copy, Debug)]
enum TurnPart {
    /// Number of direction changes.
    Count,
    /// Location of the single turning point.
    Location,
}

/// Component of the exhaustive integer-p search.
#[derive(Clone, Copy, Debug)]
enum BestPart {
    Arg,
    Value,
    /// 1.0 if the best variant equals the given one, else 0.0.
    VariantIs(PackingVariant),
}

/// Recomputable quantity behind a manifest entry.
#[derive(Clone, Copy, Debug)]
enum Quantity {
    CellMetric {
        family: Family,
        p: f64,
        metric: Metric,
    },
    /// 1.0 if the first cell vertex classifies as an outer point.
    VertexOuter { family: Family, p: f64 },
    IntervalEnd {
        family: Family,
        p: f64,
        variant: PackingVariant,
    },
    DensityAt {
        family: Family,
        p: f64,
        variant: PackingVariant,
        at: XAt,
    },
    OverX {
        family: Family,
        p: f64,
        variant: PackingVariant,
        part: Part,
    },
    OverP {
        family: Family,
        variant: PackingVariant,
        policy: XPolicy,
        lo: f64,
        hi: f64,
        part: PPart,
    },
    Profile {
        family: Family,
        variant: PackingVariant,
        policy: XPolicy,
        lo: f64,
        hi: f64,
        n: usize,
        part: TurnPart,
    },
    BestInteger {
        family: Family,
        lo: u32,
        hi: u32,
        part: BestPart,
    },
}

/// One verification entry: a named reference value with a descriptive note.
#[derive(Clone, Copy, Debug)]
struct Check {
    name: &'static str,
    group: &'static str,
    note: &'static str,
    expected: f64,
    tolerance: f64,
    quantity: Quantity,
}

/// Outcome of one executed check.
#[derive(Clone, Debug)]
pub struct RunReport {
    /// Stable dotted identifier, e.g. `table1.p5.h`.
    pub name: &'static str,
    /// Manifest group, e.g. `table1`, `optima`; the unit of `--only` filtering.
    pub group: &'static str,
    /// What the reference value is.
    pub note: &'static str,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Evaluates the quantity behind a check; errors surface as NaN (which can
/// never pass).
fn compute(q: Quantity) -> Result<f64, Error> {
    match q {
        Quantity::CellMetric { family, p, metric } => {
            let c = cell::build(family, p)?;
            Ok(match metric {
                Metric::H => c.h,
                Metric::TwoH => 2.0 * c.h,
                Metric::W => c.w,
                Metric::T => c.t,
                Metric::SMinusH => c.s.map(|s| s - c.h).unwrap_or(f64::NAN),
                Metric::WMinus2H => c.w - 2.0 * c.h,
                Metric::Vol48 => c.volume / 48.0,
                Metric::Piece => hyperball_piece_volume(c.face_area, c.h)?,
                Metric::PieceOverM => {
                    hyperball_piece_volume(c.face_area, c.h)? / family.piece_divisor()
                }
            })
        }
        Quantity::VertexOuter { family, p } => {
            let c = cell::build(family, p)?;
            let kind = classify(&c.vertices[0], CLASSIFY_TOL)?;
            Ok(if kind == PointKind::Outer { 1.0 } else { 0.0 })
        }
        Quantity::IntervalEnd { family, p, variant } => {
            let c = cell::build(family, p)?;
            Ok(x_interval(&c, variant)?.hi)
        }
        Quantity::DensityAt { family, p, variant, at } => {
            let c = cell::build(family, p)?;
            let x = match at {
                XAt::Start => 0.0,
                XAt::End => x_interval(&c, variant)?.hi,
            };
            Ok(PackingConfig::new(&c, variant, x)?.density())
        }
        Quantity::OverX { family, p, variant, part } => {
            let c = cell::build(family, p)?;
            let res = maximize_over_x(&c, variant)?;
            Ok(match part {
                Part::Arg => res.arg,
                Part::Value => res.value,
            })
        }
        Quantity::OverP { family, variant, policy, lo, hi, part } => {
            let res = maximize_over_p(family, variant, policy, lo, hi)?;
            Ok(match part {
                PPart::Arg => res.arg,
                PPart::Value => res.value,
                PPart::XAtArg => {
                    let c = cell::build(family, res.arg)?;
                    x_interval(&c, variant)?.hi
                }
            })
        }
        Quantity::Profile { family, variant, policy, lo, hi, n, part } => {
            let profile = monotone_profile(family, variant, policy, lo, hi, n)?;
            Ok(match part {
                TurnPart::Count => profile.sign_changes() as f64,
                TurnPart::Location => {
                    profile.turning_points().first().copied().unwrap_or(f64::NAN)
                }
            })
        }
        Quantity::BestInteger { family, lo, hi, part } => {
            let (p, variant, value) = best_over_integers(family, lo, hi)?;
            Ok(match part {
                BestPart::Arg => p as f64,
                BestPart::Value => value,
                BestPart::VariantIs(v) => {
                    if variant == v {
                        1.0
                    } else {
                        0.0
                    }
                }
            })
        }
    }
}

/// Exhaustive search over integer p and every variant admissible for the
/// family, maximizing each variant over its full blow-up interval.  Ties go
/// to the entry found first (smaller p, earlier variant).
fn best_over_integers(family: Family, lo: u32, hi: u32) -> Result<(u32, PackingVariant, f64), Error> {
    let mut best: Option<(u32, PackingVariant, f64)> = None;
    for p in lo..=hi {
        let cell = cell::build(family, p as f64)?;
        for variant in PackingVariant::ALL {
            let res = match maximize_over_x(&cell, variant) {
                Ok(res) => res,
                Err(Error::VariantAbsent { .. }) | Err(Error::VariantFamilyMismatch { .. }) => {
                    continue
                }
                Err(e) => return Err(e),
            };
            if best.map_or(true, |(_, _, v)| res.value > v) {
                best = Some((p, variant, res.value));
            }
        }
    }
    best.ok_or(Error::VariantAbsentOnRange)
}

/// The manifest itself.  Group order: reference tables, degeneration limits,
/// worked-case metrics, intervals, densities, optima, global results, and
/// the Böröczky–Florian comparison.
#[rustfmt::skip]
fn manifest() -> Vec<Check> {
    use Family::{Cube, Octahedron};
    use PackingVariant::{Congruent, Delta1, Delta2, Delta3};

    let mut checks = Vec::with_capacity(110);

    // Octahedron table rows: (p, h, Vol/48, piece/8, δ).
    const TABLE1: [(f64, f64, f64, f64, f64); 6] = [
        (5.0, 0.69128565, 0.16596371, 0.12761435, 0.76892924),
        (6.0, 0.48121183, 0.19616337, 0.13616563, 0.69414405),
        (7.0, 0.37938071, 0.21217704, 0.13400462, 0.63156984),
        (20.0, 0.11318462, 0.24655736, 0.07142045, 0.28967074),
        (50.0, 0.04456095, 0.25026133, 0.03221956, 0.12874366),
        (100.0, 0.02223088, 0.25078571, 0.01676445, 0.06684770),
    ];
    // Cube table rows: (p, h, Vol/48, piece/6, δ).
    const TABLE2: [(f64, f64, f64, f64, f64); 6] = [
        (7.0, 1.03799291, 0.16297337, 0.11218983, 0.68839367),
        (8.0, 0.76428546, 0.18789693, 0.12193107, 0.64892530),
        (9.0, 0.62216938, 0.20295023, 0.12372607, 0.60963750),
        (20.0, 0.23086908, 0.24206876, 0.08613744, 0.35583872),
        (50.0, 0.08938872, 0.24956032, 0.04129724, 0.16547999),
        (100.0, 0.04449475, 0.25061105, 0.02191401, 0.08744233),
    ];
    const TABLE1_NAMES: [[&str; 4]; 6] = [
        ["table1.p5.h", "table1.p5.vol48", "table1.p5.piece", "table1.p5.delta"],
        ["table1.p6.h", "table1.p6.vol48", "table1.p6.piece", "table1.p6.delta"],
        ["table1.p7.h", "table1.p7.vol48", "table1.p7.piece", "table1.p7.delta"],
        ["table1.p20.h", "table1.p20.vol48", "table1.p20.piece", "table1.p20.delta"],
        ["table1.p50.h", "table1.p50.vol48", "table1.p50.piece", "table1.p50.delta"],
        ["table1.p100.h", "table1.p100.vol48", "table1.p100.piece", "table1.p100.delta"],
    ];
    const TABLE1_NOTES: [&str; 6] = [
        "octahedron reference row p = 5", "octahedron reference row p = 6",
        "octahedron reference row p = 7", "octahedron reference row p = 20",
        "octahedron reference row p = 50", "octahedron reference row p = 100",
    ];
    const TABLE2_NAMES: [[&str; 4]; 6] = [
        ["table2.p7.h", "table2.p7.vol48", "table2.p7.piece", "table2.p7.delta"],
        ["table2.p8.h", "table2.p8.vol48", "table2.p8.piece", "table2.p8.delta"],
        ["table2.p9.h", "table2.p9.vol48", "table2.p9.piece", "table2.p9.delta"],
        ["table2.p20.h", "table2.p20.vol48", "table2.p20.piece", "table2.p20.delta"],
        ["table2.p50.h", "table2.p50.vol48", "table2.p50.piece", "table2.p50.delta"],
        ["table2.p100.h", "table2.p100.vol48", "table2.p100.piece", "table2.p100.delta"],
    ];
    const TABLE2_NOTES: [&str; 6] = [
        "cube reference row p = 7", "cube reference row p = 8",
        "cube reference row p = 9", "cube reference row p = 20",
        "cube reference row p = 50", "cube reference row p = 100",
    ];
    for ((family, rows), (names, notes)) in [
        (Octahedron, &TABLE1), (Cube, &TABLE2),
    ]
    .into_iter()
    .zip([(&TABLE1_NAMES, &TABLE1_NOTES), (&TABLE2_NAMES, &TABLE2_NOTES)])
    {
        let group = if family == Octahedron { "table1" } else { "table2" };
        for (i, &(p, h, vol48, piece_m, delta)) in rows.iter().enumerate() {
            let metrics = [
                (Metric::H, h),
                (Metric::Vol48, vol48),
                (Metric::PieceOverM, piece_m),
            ];
            for (j, (metric, expected)) in metrics.into_iter().enumerate() {
                checks.push(Check {
                    name: names[i][j],
                    group,
                    note: notes[i],
                    expected,
                    tolerance: 1e-6,
                    quantity: Quantity::CellMetric { family, p, metric },
                });
            }
            checks.push(Check {
                name: names[i][3],
                group,
                note: notes[i],
                expected: delta,
                tolerance: 1e-6,
                quantity: Quantity::DensityAt { family, p, variant: Congruent, at: XAt::Start },
            });
        }
    }

    // Degeneration row: p → ∞ taken at p = 10⁶.
    checks.extend([
        Check {
            name: "limit.oct.vol48", group: "limit",
            note: "octahedron Vol/48 → 0.25096025 as p → ∞ (evaluated at p = 10⁶)",
            expected: 0.25096025, tolerance: 2e-6,
            quantity: Quantity::CellMetric { family: Octahedron, p: 1e6, metric: Metric::Vol48 },
        },
        Check {
            name: "limit.oct.h", group: "limit",
            note: "octahedron h(p) → 0 as p → ∞ (evaluated at p = 10⁶)",
            expected: 0.0, tolerance: 1e-5,
            quantity: Quantity::CellMetric { family: Octahedron, p: 1e6, metric: Metric::H },
        },
        Check {
            name: "limit.oct.piece", group: "limit",
            note: "octahedron piece volume → 0 as p → ∞ (evaluated at p = 10⁶)",
            expected: 0.0, tolerance: 1e-5,
            quantity: Quantity::CellMetric { family: Octahedron, p: 1e6, metric: Metric::PieceOverM },
        },
        Check {
            name: "limit.cube.vol48", group: "limit",
            note: "cube Vol/48 → 0.25096025 as p → ∞ (evaluated at p = 10⁶)",
            expected: 0.25096025, tolerance: 2e-6,
            quantity: Quantity::CellMetric { family: Cube, p: 1e6, metric: Metric::Vol48 },
        },
    ]);

    // Characteristic distances of the two worked parameters.
    checks.extend([
        Check {
            name: "metrics.oct5.2h", group: "metrics",
            note: "worked octahedron case p = 5: 2h(5) ≈ 1.38257",
            expected: 1.38257, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Octahedron, p: 5.0, metric: Metric::TwoH },
        },
        Check {
            name: "metrics.oct5.w", group: "metrics",
            note: "worked octahedron case p = 5: w(5) ≈ 1.71082",
            expected: 1.71082, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Octahedron, p: 5.0, metric: Metric::W },
        },
        Check {
            name: "metrics.oct5.t", group: "metrics",
            note: "worked octahedron case p = 5: t(5) ≈ 1.16974",
            expected: 1.16974, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Octahedron, p: 5.0, metric: Metric::T },
        },
        Check {
            name: "metrics.cube7.2h", group: "metrics",
            note: "worked cube case p = 7: 2h(7) ≈ 2.07599",
            expected: 2.07599, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Cube, p: 7.0, metric: Metric::TwoH },
        },
        Check {
            name: "metrics.cube7.w", group: "metrics",
            note: "worked cube case p = 7: w(7) ≈ 2.07599",
            expected: 2.07599, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Cube, p: 7.0, metric: Metric::W },
        },
        Check {
            name: "metrics.cube7.t", group: "metrics",
            note: "worked cube case p = 7: t(7) ≈ 1.67069",
            expected: 1.67069, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Cube, p: 7.0, metric: Metric::T },
        },
        Check {
            name: "metrics.cube7.s_minus_h", group: "metrics",
            note: "worked cube case p = 7: s(7) − h(7) ≈ 0.41108",
            expected: 0.41108, tolerance: 1e-4,
            quantity: Quantity::CellMetric { family: Cube, p: 7.0, metric: Metric::SMinusH },
        },
        Check {
            name: "metrics.cube7.w_eq_2h", group: "metrics",
            note: "worked cube case p = 7: w(7) = 2h(7) exactly",
            expected: 0.0, tolerance: 1e-10,
            quantity: Quantity::CellMetric { family: Cube, p: 7.0, metric: Metric::WMinus2H },
        },
        Check {
            name: "metrics.oct5.full_piece", group: "metrics",
            note: "octahedron p = 5: full piece 8 · 0.12761435 from the slab volume at face area 2π/5",
            expected: 1.0209148, tolerance: 8e-6,
            quantity: Quantity::CellMetric { family: Octahedron, p: 5.0, metric: Metric::Piece },
        },
        Check {
            name: "metrics.cube7.full_piece", group: "metrics",
            note: "cube p = 7: full piece 6 · 0.11218983 from the slab volume at face area π/7",
            expected: 0.6731390, tolerance: 6e-6,
            quantity: Quantity::CellMetric { family: Cube, p: 7.0, metric: Metric::Piece },
        },
        Check {
            name: "metrics.cube7.vertex_outer", group: "metrics",
            note: "cube vertices (1, ±y, ±y, ±y) with y > 1/√3 lie outside the absolute",
            expected: 1.0, tolerance: 0.0,
            quantity: Quantity::VertexOuter { family: Cube, p: 7.0 },
        },
    ]);

    // Blow-up interval endpoints.
    checks.extend([
        Check {
            name: "intervals.oct5.delta1", group: "intervals",
            note: "octahedron δ₁ interval at p = 5: [0, t(5) − h(5) ≈ 0.47845]",
            expected: 0.47845, tolerance: 1e-4,
            quantity: Quantity::IntervalEnd { family: Octahedron, p: 5.0, variant: Delta1 },
        },
        Check {
            name: "intervals.oct5.delta2", group: "intervals",
            note: "octahedron δ₂ interval at p = 5: [0, 2h(5) − t(5) ≈ 0.21285]",
            expected: 0.21285, tolerance: 1e-4,
            quantity: Quantity::IntervalEnd { family: Octahedron, p: 5.0, variant: Delta2 },
        },
        Check {
            name: "intervals.cube7.delta1", group: "intervals",
            note: "cube δ₁ interval at p = 7: [0, min{2h, w, t}(7) − h(7) ≈ 0.63270]",
            expected: 0.63270, tolerance: 1e-4,
            quantity: Quantity::IntervalEnd { family: Cube, p: 7.0, variant: Delta1 },
        },
        Check {
            name: "intervals.cube7.delta2", group: "intervals",
            note: "cube δ₂ interval at p = 7: [0, ≈ 0.40530]",
            expected: 0.40530, tolerance: 1e-4,
            quantity: Quantity::IntervalEnd { family: Cube, p: 7.0, variant: Delta2 },
        },
        Check {
            name: "intervals.cube7.delta3", group: "intervals",
            note: "cube δ₃ interval at p = 7: [0, min{h, s − h}(7) ≈ 0.41108]",
            expected: 0.41108, tolerance: 1e-4,
            quantity: Quantity::IntervalEnd { family: Cube, p: 7.0, variant: Delta3 },
        },
        Check {
            name: "intervals.cube8.delta3", group: "intervals",
            note: "cube δ₃ interval at p = 8: end s(8) − h(8) ≈ 0.45994",
            expected: 0.45994, tolerance: 1e-4,
            quantity: Quantity::IntervalEnd { family: Cube, p: 8.0, variant: Delta3 },
        },
    ]);

    // Densities at named points of the blow-up intervals.
    checks.extend([
        Check {
            name: "densities.oct5.congruent", group: "densities",
            note: "octahedron congruent density at p = 5 ≈ 0.76892924",
            expected: 0.76892924, tolerance: 1e-6,
            quantity: Quantity::DensityAt { family: Octahedron, p: 5.0, variant: Congruent, at: XAt::Start },
        },
        Check {
            name: "densities.oct5.delta1.end", group: "densities",
            note: "octahedron δ₁ at p = 5, x = t(5) − h(5): ≈ 0.72624",
            expected: 0.72624, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Octahedron, p: 5.0, variant: Delta1, at: XAt::End },
        },
        Check {
            name: "densities.cube7.delta1.end", group: "densities",
            note: "cube δ₁ at p = 7, x = t(7) − h(7): ≈ 0.64805",
            expected: 0.64805, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Cube, p: 7.0, variant: Delta1, at: XAt::End },
        },
        Check {
            name: "densities.cube7.delta2.start", group: "densities",
            note: "cube δ₂ curve at p = 7 starts at x = 0 with ≈ 0.64805",
            expected: 0.64805, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Cube, p: 7.0, variant: Delta2, at: XAt::Start },
        },
        Check {
            name: "densities.cube7.delta2.end", group: "densities",
            note: "cube δ₂ curve at p = 7 ends at x = w(7) − t(7) with ≈ 0.81542",
            expected: 0.81542, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Cube, p: 7.0, variant: Delta2, at: XAt::End },
        },
        Check {
            name: "densities.cube7.delta3.start", group: "densities",
            note: "cube δ₃ curve at p = 7 starts at x = 0 with ≈ 0.68839",
            expected: 0.68839, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Cube, p: 7.0, variant: Delta3, at: XAt::Start },
        },
        Check {
            name: "densities.cube7.delta3.end", group: "densities",
            note: "cube δ₃ curve at p = 7 ends at x = s(7) − h(7) with ≈ 0.84931",
            expected: 0.84931, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Cube, p: 7.0, variant: Delta3, at: XAt::End },
        },
        Check {
            name: "densities.cube8.delta3.end", group: "densities",
            note: "cube δ₃ at p = 8, x ≈ 0.45994: ≈ 0.82259",
            expected: 0.82259, tolerance: 1e-4,
            quantity: Quantity::DensityAt { family: Cube, p: 8.0, variant: Delta3, at: XAt::End },
        },
    ]);

    // Maxima over the blow-up parameter at fixed p.
    checks.extend([
        Check {
            name: "optima.over_x.oct5.delta1.arg", group: "optima",
            note: "octahedron δ₁ at p = 5 is maximal at the interval start x = 0",
            expected: 0.0, tolerance: 1e-4,
            quantity: Quantity::OverX { family: Octahedron, p: 5.0, variant: Delta1, part: Part::Arg },
        },
        Check {
            name: "optima.over_x.oct5.delta1.value", group: "optima",
            note: "octahedron δ₁ maximum at p = 5: ≈ 0.76893, the congruent density",
            expected: 0.76893, tolerance: 1e-4,
            quantity: Quantity::OverX { family: Octahedron, p: 5.0, variant: Delta1, part: Part::Value },
        },
        Check {
            name: "optima.over_x.cube7.delta3.arg", group: "optima",
            note: "cube δ₃ at p = 7 is maximal at the interval end s(7) − h(7) ≈ 0.41108",
            expected: 0.41108, tolerance: 1e-4,
            quantity: Quantity::OverX { family: Cube, p: 7.0, variant: Delta3, part: Part::Arg },
        },
        Check {
            name: "optima.over_x.cube7.delta3.value", group: "optima",
            note: "cube δ₃ maximum at p = 7: ≈ 0.84931, densest integer-parameter packing",
            expected: 0.84931, tolerance: 1e-4,
            quantity: Quantity::OverX { family: Cube, p: 7.0, variant: Delta3, part: Part::Value },
        },
        Check {
            name: "optima.over_x.cube8.delta3.arg", group: "optima",
            note: "cube δ₃ at p = 8 is maximal at x ≈ 0.45994",
            expected: 0.45994, tolerance: 1e-4,
            quantity: Quantity::OverX { family: Cube, p: 8.0, variant: Delta3, part: Part::Arg },
        },
        Check {
            name: "optima.over_x.cube8.delta3.value", group: "optima",
            note: "cube δ₃ maximum at p = 8: ≈ 0.82259",
            expected: 0.82259, tolerance: 1e-4,
            quantity: Quantity::OverX { family: Cube, p: 8.0, variant: Delta3, part: Part::Value },
        },
    ]);

    // Maxima over real p.
    checks.extend([
        Check {
            name: "optima.over_p.oct.congruent.arg", group: "optima",
            note: "octahedron congruent density over real p peaks at p ≈ 4.11320",
            expected: 4.11320, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Octahedron, variant: Congruent, policy: XPolicy::Start, lo: 4.0, hi: 20.0, part: PPart::Arg },
        },
        Check {
            name: "optima.over_p.oct.congruent.value", group: "optima",
            note: "octahedron congruent density maximum over real p: ≈ 0.83173",
            expected: 0.83173, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Octahedron, variant: Congruent, policy: XPolicy::Start, lo: 4.0, hi: 20.0, part: PPart::Value },
        },
        Check {
            name: "optima.over_p.cube.congruent.arg", group: "optima",
            note: "cube congruent density over real p peaks at p ≈ 6.33962",
            expected: 6.33962, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Congruent, policy: XPolicy::Start, lo: 6.0, hi: 20.0, part: PPart::Arg },
        },
        Check {
            name: "optima.over_p.cube.congruent.value", group: "optima",
            note: "cube congruent density maximum over real p: ≈ 0.70427",
            expected: 0.70427, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Congruent, policy: XPolicy::Start, lo: 6.0, hi: 20.0, part: PPart::Value },
        },
        Check {
            name: "optima.over_p.cube.delta2.arg", group: "optima",
            note: "cube δ₂ at the interval end peaks at p ≈ 6.10563",
            expected: 6.10563, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Delta2, policy: XPolicy::End, lo: 6.0, hi: 7.0, part: PPart::Arg },
        },
        Check {
            name: "optima.over_p.cube.delta2.value", group: "optima",
            note: "cube δ₂ maximum over real p at the interval end: ≈ 0.85684",
            expected: 0.85684, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Delta2, policy: XPolicy::End, lo: 6.0, hi: 7.0, part: PPart::Value },
        },
        Check {
            name: "optima.over_p.cube.delta3.arg", group: "optima",
            note: "cube δ₃ at the interval end peaks at p ≈ 6.26384",
            expected: 6.26384, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Delta3, policy: XPolicy::End, lo: 6.0, hi: 7.0, part: PPart::Arg },
        },
        Check {
            name: "optima.over_p.cube.delta3.value", group: "optima",
            note: "cube δ₃ maximum over real p at the interval end: ≈ 0.86145",
            expected: 0.86145, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Delta3, policy: XPolicy::End, lo: 6.0, hi: 7.0, part: PPart::Value },
        },
        Check {
            name: "optima.over_p.cube.delta3.x_at_arg", group: "optima",
            note: "blow-up x = s(p) − h(p) ≈ 0.36563 at the cube δ₃ optimum",
            expected: 0.36563, tolerance: 1e-4,
            quantity: Quantity::OverP { family: Cube, variant: Delta3, policy: XPolicy::End, lo: 6.0, hi: 7.0, part: PPart::XAtArg },
        },
    ]);

    // Monotonicity profiles of the congruent density in p.
    checks.extend([
        Check {
            name: "profile.oct.congruent.turns", group: "optima",
            note: "octahedron congruent density rises to its peak and falls after: one turn",
            expected: 1.0, tolerance: 0.0,
            quantity: Quantity::Profile { family: Octahedron, variant: Congruent, policy: XPolicy::Start, lo: 4.05, hi: 10.0, n: 512, part: TurnPart::Count },
        },
        Check {
            name: "profile.oct.congruent.location", group: "optima",
            note: "octahedron congruent turning point at p ≈ 4.11320",
            expected: 4.11320, tolerance: 1e-2,
            quantity: Quantity::Profile { family: Octahedron, variant: Congruent, policy: XPolicy::Start, lo: 4.05, hi: 10.0, n: 512, part: TurnPart::Location },
        },
        Check {
            name: "profile.cube.congruent.turns", group: "optima",
            note: "cube congruent density rises to its peak and falls after: one turn",
            expected: 1.0, tolerance: 0.0,
            quantity: Quantity::Profile { family: Cube, variant: Congruent, policy: XPolicy::Start, lo: 6.05, hi: 10.0, n: 512, part: TurnPart::Count },
        },
        Check {
            name: "profile.cube.congruent.location", group: "optima",
            note: "cube congruent turning point at p ≈ 6.33962",
            expected: 6.33962, tolerance: 1e-2,
            quantity: Quantity::Profile { family: Cube, variant: Congruent, policy: XPolicy::Start, lo: 6.05, hi: 10.0, n: 512, part: TurnPart::Location },
        },
    ]);

    // Exhaustive integer-parameter results.
    checks.extend([
        Check {
            name: "global.oct.best_p", group: "global",
            note: "densest octahedron packing over integer p ∈ [5, 50] sits at p = 5",
            expected: 5.0, tolerance: 0.0,
            quantity: Quantity::BestInteger { family: Octahedron, lo: 5, hi: 50, part: BestPart::Arg },
        },
        Check {
            name: "global.oct.best_value", group: "global",
            note: "densest octahedron packing over integer p: ≈ 0.76893",
            expected: 0.76893, tolerance: 1e-4,
            quantity: Quantity::BestInteger { family: Octahedron, lo: 5, hi: 50, part: BestPart::Value },
        },
        Check {
            name: "global.oct.best_is_congruent", group: "global",
            note: "octahedron optimum is attained at x = 0, the congruent packing",
            expected: 1.0, tolerance: 0.0,
            quantity: Quantity::BestInteger { family: Octahedron, lo: 5, hi: 50, part: BestPart::VariantIs(Congruent) },
        },
        Check {
            name: "global.cube.best_p", group: "global",
            note: "densest cube packing over integer p ∈ [7, 50] sits at p = 7",
            expected: 7.0, tolerance: 0.0,
            quantity: Quantity::BestInteger { family: Cube, lo: 7, hi: 50, part: BestPart::Arg },
        },
        Check {
            name: "global.cube.best_value", group: "global",
            note: "densest cube packing over integer p: ≈ 0.84931",
            expected: 0.84931, tolerance: 1e-4,
            quantity: Quantity::BestInteger { family: Cube, lo: 7, hi: 50, part: BestPart::Value },
        },
        Check {
            name: "global.cube.best_is_delta3", group: "global",
            note: "cube optimum is attained by the six-ball δ₃ arrangement",
            expected: 1.0, tolerance: 0.0,
            quantity: Quantity::BestInteger { family: Cube, lo: 7, hi: 50, part: BestPart::VariantIs(Delta3) },
        },
    ]);

    // One-sided limit toward p = 6: δ₃ approaches the Böröczky–Florian
    // bound for ball and horoball packings.  Soft tolerance: the reference
    // constant has five digits and the limit is approached from one side.
    checks.push(Check {
        name: "remark.boroczky_florian.delta3", group: "remark",
        note: "δ₃ tends to the Böröczky–Florian bound ≈ 0.85328 as p → 6 (evaluated at p = 6.001)",
        expected: 0.85328, tolerance: 5e-3,
        quantity: Quantity::DensityAt { family: Cube, p: 6.001, variant: Delta3, at: XAt::End },
    });

    checks
}

fn execute(check: &Check) -> RunReport {
    let computed = compute(check.quantity).unwrap_or(f64::NAN);
    RunReport {
        name: check.name,
        group: check.group,
        note: check.note,
        expected: check.expected,
        computed,
        tolerance: check.tolerance,
        pass: (computed - check.expected).abs() <= check.tolerance,
    }
}

/// Runs the complete manifest.
pub fn run_all() -> Vec<RunReport> {
    manifest().iter().map(execute).collect()
}

/// Runs only the checks of one group; the list of valid group names is
/// whatever appears in the manifest (`table1`, `table2`, `limit`, `metrics`,
/// `intervals`, `densities`, `optima`, `global`, `remark`).
pub fn run_group(group: &str) -> Result<Vec<RunReport>, Error> {
    let checks: Vec<Check> = manifest().into_iter().filter(|c| c.group == group).collect();
    if checks.is_empty() {
        return Err(Error::UnknownName {
            what: "verification group",
            got: group.to_string(),
        });
    }
    Ok(checks.iter().map(execute).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_manifest_check_passes() {
        let reports = run_all();
        let failures: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
        assert!(
            failures.is_empty(),
            "{} of {} checks failed: {:#?}",
            failures.len(),
            reports.len(),
            failures
        );
    }

    #[test]
    fn manifest_names_are_unique_and_well_formed() {
        let checks = manifest();
        assert!(checks.len() >= 80, "manifest unexpectedly small: {}", checks.len());
        let mut names: Vec<&str> = checks.iter().map(|c| c.name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len(), "duplicate check names");
        for c in &checks {
            assert!(!c.note.is_empty(), "{} lacks a note", c.name);
            assert!(c.tolerance >= 0.0 && c.tolerance.is_finite());
            assert!(c.name.starts_with(c.group) || c.group == "optima", "{}", c.name);
        }
    }

    #[test]
    fn group_filtering_selects_subsets() {
        let table2 = run_group("table2").unwrap();
        assert_eq!(table2.len(), 24);
        assert!(table2.iter().all(|r| r.group == "table2"));
        assert!(matches!(
            run_group("table9"),
            Err(Error::UnknownName { what: "verification group", .. })
        ));
    }

    #[test]
    fn a_wrong_expectation_is_reported_as_failure() {
        let check = Check {
            name: "selftest.wrong",
            group: "selftest",
            note: "deliberately wrong expectation",
            expected: 999.0,
            tolerance: 1e-6,
            quantity: Quantity::CellMetric {
                family: Family::Octahedron,
                p: 5.0,
                metric: Metric::H,
            },
        };
        assert!(!execute(&check).pass);
    }

    #[test]
    fn errors_surface_as_nan_failures() {
        let check = Check {
            name: "selftest.error",
            group: "selftest",
            note: "inadmissible parameter",
            expected: 0.0,
            tolerance: 1e30,
            quantity: Quantity::CellMetric {
                family: Family::Cube,
                p: 5.0,
                metric: Metric::H,
            },
        };
        let report = execute(&check);
        assert!(report.computed.is_nan());
        assert!(!report.pass, "NaN must never pass, whatever the tolerance");
    }
}
