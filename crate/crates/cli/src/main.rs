//! `hypack` — hyperball packing densities of truncated regular octahedron
//! ({3,4,p}) and cube ({4,3,p}) tilings of hyperbolic 3-space.
//!
//! Four subcommands: `table` reproduces the reference tables, `scan` samples
//! density curves (over the blow-up parameter x at fixed p, or over p under
//! an x-policy or at fixed x), `optimize` maximizes a density, and `verify`
//! recomputes the built-in manifest of reference values.
//!
//! Output is CSV (8 decimals) or JSON (17 significant digits), identical
//! bytes on identical invocations.  Exit codes: 0 success, 1 verification
//! failure, 2 usage or domain error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypack_core::cell::{self, Family};
use hypack_core::optimize::{maximize_over_p, maximize_over_x, XPolicy};
use hypack_core::packing::{hyperball_piece_volume, x_interval, PackingConfig, PackingVariant};
use hypack_core::verify;

#[derive(Parser)]
#[command(
    name = "hypack",
    version,
    about = "Hyperball packing densities of truncated regular octahedron and cube tilings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Reference-table rows (h, Vol/48, piece volume, density) per parameter.
    Table {
        /// Cell family: octahedron or cube.
        #[arg(long)]
        family: Family,
        /// Comma-separated parameter list, e.g. 5,6,7.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write output to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a density curve over x (fixed --p) or over p (--p-range).
    Scan {
        #[arg(long)]
        family: Family,
        /// Packing variant: congruent, delta1, delta2 or delta3.
        #[arg(long)]
        variant: PackingVariant,
        /// Fixed cell parameter; the abscissa is then the blow-up x.
        #[arg(long, conflicts_with = "p_range")]
        p: Option<f64>,
        /// Parameter range lo:hi; the abscissa is then p.
        #[arg(long, value_parser = parse_range)]
        p_range: Option<(f64, f64)>,
        /// Blow-up policy for scans over p: start, end or free.
        #[arg(long, default_value = "start", conflicts_with = "x")]
        policy: XPolicy,
        /// Fixed blow-up parameter for scans over p (alternative to --policy).
        #[arg(long, conflicts_with = "p")]
        x: Option<f64>,
        /// Number of uniform samples, endpoints included.
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximize a density over p in a range, under a blow-up policy.
    Optimize {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        variant: PackingVariant,
        /// Blow-up policy: start, end or free.
        #[arg(long, default_value = "start")]
        policy: XPolicy,
        /// Parameter range lo:hi.
        #[arg(long, value_parser = parse_range, required = true)]
        p_range: Option<(f64, f64)>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the built-in manifest of reference values.
    Verify {
        /// Restrict to one manifest group (table1, table2, limit, metrics,
        /// intervals, densities, optima, global, remark).
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if !(lo < hi) {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// JSON number with 17 significant digits; non-finite values become null.
fn json_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Table { family, p, format, out } => cmd_table(family, &p, format, &out),
        Command::Scan { family, variant, p, p_range, policy, x, n, format, out } => {
            cmd_scan(family, variant, p, p_range, policy, x, n, format, &out)
        }
        Command::Optimize { family, variant, policy, p_range, format, out } => {
            cmd_optimize(family, variant, policy, p_range.expect("required"), format, &out)
        }
        Command::Verify { only, format, out } => cmd_verify(only.as_deref(), format, &out),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_table(family: Family, ps: &[f64], format: Format, out: &Option<PathBuf>) -> Result<u8, String> {
    let mut rows = Vec::new();
    let mut failed = false;
    for &p in ps {
        match table_row(family, p) {
            Ok(row) => rows.push(row),
            Err(e) => {
                eprintln!("error: p = {p}: {e}");
                failed = true;
            }
        }
    }
    let content = match format {
        Format::Csv => {
            let mut s = String::from("p,h,vol48,piece,delta\n");
            for (p, h, vol48, piece, delta) in &rows {
                let _ = writeln!(s, "{p},{h:.8},{vol48:.8},{piece:.8},{delta:.8}");
            }
            s
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|(p, h, vol48, piece, delta)| {
                    format!(
                        "{{\"p\":{p},\"h\":{},\"vol48\":{},\"piece\":{},\"delta\":{}}}",
                        json_num(*h),
                        json_num(*vol48),
                        json_num(*piece),
                        json_num(*delta)
                    )
                })
                .collect();
            format!("[{}]\n", items.join(","))
        }
    };
    write_out(out, &content)?;
    Ok(if failed { 2 } else { 0 })
}

/// One table row (p, h, Vol/48, piece/m, δ).
fn table_row(family: Family, p: f64) -> Result<(f64, f64, f64, f64, f64), hypack_core::Error> {
    let cell = cell::build(family, p)?;
    let piece = hyperball_piece_volume(cell.face_area, cell.h)? / family.piece_divisor();
    let delta = PackingConfig::new(&cell, PackingVariant::Congruent, 0.0)?.density();
    Ok((p, cell.h, cell.volume / 48.0, piece, delta))
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    family: Family,
    variant: PackingVariant,
    p: Option<f64>,
    p_range: Option<(f64, f64)>,
    policy: XPolicy,
    x: Option<f64>,
    n: usize,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<u8, String> {
    if n < 2 {
        return Err(format!("--n must be at least 2, got {n}"));
    }
    let mut rows = Vec::with_capacity(n);
    match (p, p_range) {
        (Some(p), None) => {
            let cell = cell::build(family, p).map_err(|e| e.to_string())?;
            let interval = x_interval(&cell, variant).map_err(|e| e.to_string())?;
            for i in 0..n {
                let xi = interval.hi * i as f64 / (n - 1) as f64;
                let d = PackingConfig::new(&cell, variant, xi)
                    .map_err(|e| e.to_string())?
                    .density();
                rows.push((xi, d));
            }
        }
        (None, Some((lo, hi))) => {
            for i in 0..n {
                let pi = lo + (hi - lo) * i as f64 / (n - 1) as f64;
                let cell = cell::build(family, pi).map_err(|e| format!("p = {pi}: {e}"))?;
                let d = match x {
                    Some(xv) => PackingConfig::new(&cell, variant, xv)
                        .map_err(|e| format!("p = {pi}: {e}"))?
                        .density(),
                    None => match policy {
                        XPolicy::Start => PackingConfig::new(&cell, variant, 0.0)
                            .map_err(|e| format!("p = {pi}: {e}"))?
                            .density(),
                        XPolicy::End => {
                            let hi_x = x_interval(&cell, variant)
                                .map_err(|e| format!("p = {pi}: {e}"))?
                                .hi;
                            PackingConfig::new(&cell, variant, hi_x)
                                .map_err(|e| format!("p = {pi}: {e}"))?
                                .density()
                        }
                        XPolicy::FreeX => maximize_over_x(&cell, variant)
                            .map_err(|e| format!("p = {pi}: {e}"))?
                            .value,
                    },
                };
                rows.push((pi, d));
            }
        }
        _ => return Err("exactly one of --p or --p-range is required".to_string()),
    }
    let content = match format {
        Format::Csv => {
            let mut s = String::from("abscissa,density\n");
            for (a, d) in &rows {
                let _ = writeln!(s, "{a:.8},{d:.8}");
            }
            s
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|(a, d)| format!("{{\"abscissa\":{},\"density\":{}}}", json_num(*a), json_num(*d)))
                .collect();
            format!("[{}]\n", items.join(","))
        }
    };
    write_out(out, &content)?;
    Ok(0)
}

fn cmd_optimize(
    family: Family,
    variant: PackingVariant,
    policy: XPolicy,
    (lo, hi): (f64, f64),
    format: Format,
    out: &Option<PathBuf>,
) -> Result<u8, String> {
    let res = maximize_over_p(family, variant, policy, lo, hi).map_err(|e| e.to_string())?;
    // Blow-up parameter realized at the optimum under the policy.
    let x_opt = match policy {
        XPolicy::Start => 0.0,
        XPolicy::End => {
            let cell = cell::build(family, res.arg).map_err(|e| e.to_string())?;
            x_interval(&cell, variant).map_err(|e| e.to_string())?.hi
        }
        XPolicy::FreeX => {
            let cell = cell::build(family, res.arg).map_err(|e| e.to_string())?;
            maximize_over_x(&cell, variant).map_err(|e| e.to_string())?.arg
        }
    };
    let content = match format {
        Format::Csv => format!(
            "p,delta,x\n{:.8},{:.8},{:.8}\n",
            res.arg, res.value, x_opt
        ),
        Format::Json => format!(
            "{{\"p\":{},\"delta\":{},\"x\":{}}}\n",
            json_num(res.arg),
            json_num(res.value),
            json_num(x_opt)
        ),
    };
    write_out(out, &content)?;
    Ok(0)
}

fn cmd_verify(only: Option<&str>, format: Format, out: &Option<PathBuf>) -> Result<u8, String> {
    let reports = match only {
        Some(group) => verify::run_group(group).map_err(|e| e.to_string())?,
        None => verify::run_all(),
    };
    let content = match format {
        Format::Csv => {
            let mut s = String::from("name,group,expected,computed,tolerance,pass\n");
            for r in &reports {
                let _ = writeln!(
                    s,
                    "{},{},{:.16e},{:.16e},{:.3e},{}",
                    r.name, r.group, r.expected, r.computed, r.tolerance, r.pass
                );
            }
            s
        }
        Format::Json => {
            let items: Vec<String> = reports
                .iter()
                .map(|r| {
                    format!(
                        "{{\"name\":{},\"group\":{},\"note\":{},\"expected\":{},\"computed\":{},\"tolerance\":{},\"pass\":{}}}",
                        json_str(r.name),
                        json_str(r.group),
                        json_str(r.note),
                        json_num(r.expected),
                        json_num(r.computed),
                        json_num(r.tolerance),
                        r.pass
                    )
                })
                .collect();
            format!("[{}]\n", items.join(","))
        }
    };
    write_out(out, &content)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    eprintln!("{} of {} checks passed", reports.len() - failed, reports.len());
    Ok(if failed > 0 { 1 } else { 0 })
}
