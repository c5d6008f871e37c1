//! Convergence table of `k(Pₙ)` toward 666/53.

use std::io::Write;

use num_rational::Ratio;

use crate::construction::{layer_tallies, SeedData};
use crate::error::Result;

pub const CSV_HEADER: &str = "n,balls,tangencies,k,gap";

/// Limit of the average kissing number of the layered packings.
pub fn k_limit() -> Ratio<u64> {
    Ratio::new(666, 53)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub ball_count: u64,
    pub tangency_count: u64,
    pub k: Ratio<u64>,
    /// `666/53 - k`.
    pub gap: Ratio<u64>,
}

pub fn report_convergence(seed: &SeedData, max_n: usize) -> Result<Vec<ConvergenceRow>> {
    let limit = k_limit();
    Ok(layer_tallies(seed, max_n)?
        .into_iter()
        .map(|t| ConvergenceRow {
            n: t.n,
            ball_count: t.ball_count,
            tangency_count: t.tangency_count,
            k: t.k,
            gap: limit - t.k,
        })
        .collect())
}

/// Fixed-point rendering of a nonnegative rational, rounded half up.
pub fn format_decimal(x: Ratio<u64>, places: u32) -> String {
    let num = *x.numer() as u128;
    let den = *x.denom() as u128;
    let scale = 10u128.pow(places);
    let scaled = (2 * num * scale + den) / (2 * den);
    let int = scaled / scale;
    let frac = scaled % scale;
    if places == 0 {
        format!("{int}")
    } else {
        format!("{int}.{frac:0width$}", width = places as usize)
    }
}

pub fn write_convergence_csv(rows: &[ConvergenceRow], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.n,
            r.ball_count,
            r.tangency_count,
            format_decimal(r.k, 10),
            format_decimal(r.gap, 10)
        )?;
    }
    Ok(())
}
